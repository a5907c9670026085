//! Chebyshev polynomials of the first and second kind, exact discriminants,
//! and numeric checks of the trigonometric product/sum identities tied to
//! their roots.
//!
//! Product identities are compared in log-magnitude space (sums of
//! `ln|cos .|`): the raw products reach 2^-120 over the supported parameter
//! range and would underflow long before the comparison became meaningful.
//! Signs are never asserted, only recorded.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// Default relative tolerance for the log-space residuals.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// First-kind Chebyshev polynomial `T_n` by the three-term recurrence
/// `T_{k+1} = 2x T_k - T_{k-1}`.
pub fn chebyshev_t(n: usize) -> IntPolynomial {
    chebyshev_recurrence(n, IntPolynomial::from_i64(&[0, 1]))
}

/// Second-kind Chebyshev polynomial `U_n` (same recurrence, `U_1 = 2x`).
pub fn chebyshev_u(n: usize) -> IntPolynomial {
    chebyshev_recurrence(n, IntPolynomial::from_i64(&[0, 2]))
}

fn chebyshev_recurrence(n: usize, first: IntPolynomial) -> IntPolynomial {
    let mut prev = IntPolynomial::from_i64(&[1]);
    if n == 0 {
        return prev;
    }
    let mut cur = first;
    for _ in 1..n {
        // next = 2x*cur - prev
        let mut coeffs = vec![BigInt::zero(); cur.coeffs().len() + 1];
        for (k, c) in cur.coeffs().iter().enumerate() {
            coeffs[k + 1] = c * 2;
        }
        for (k, c) in prev.coeffs().iter().enumerate() {
            coeffs[k] -= c;
        }
        prev = cur;
        cur = IntPolynomial::new(coeffs);
    }
    cur
}

/// Exact discriminant of an integer polynomial of degree >= 1, in the
/// squared-root-difference normalization:
/// `disc p = (-1)^{n(n-1)/2} Res(p, p') / lc(p)`.
pub fn discriminant(p: &IntPolynomial) -> Result<BigInt> {
    let Some(n) = p.degree() else {
        return Err(Error::InvalidParameter(
            "discriminant of the zero polynomial".into(),
        ));
    };
    if n == 0 {
        return Err(Error::InvalidParameter(
            "discriminant needs degree >= 1".into(),
        ));
    }
    if n == 1 {
        // One root: the empty product is 1.
        return Ok(BigInt::from(1));
    }
    let res = p.resultant(&p.derivative())?;
    let lead = p.leading_coefficient();
    let (q, r) = num_integer::Integer::div_rem(&res, &lead);
    debug_assert!(r.is_zero(), "leading coefficient always divides Res(p, p')");
    let sign_flips = n * (n - 1) / 2;
    Ok(if sign_flips % 2 == 1 { -q } else { q })
}

/// Outcome of one numeric identity check. `residual` is the log-space
/// relative error; `sign` is the empirical sign of the left-hand side
/// (0 when the value is exactly zero).
#[derive(Clone, Copy, Debug)]
pub struct IdentityCheck {
    pub residual: f64,
    pub sign: i8,
    pub pass: bool,
}

fn log_relative_residual(log_lhs: f64, log_rhs: f64) -> f64 {
    (log_lhs - log_rhs).abs() / log_rhs.abs().max(1.0)
}

fn check_from_logs(log_lhs: f64, log_rhs: f64, sign: i8, tol: f64) -> IdentityCheck {
    let residual = log_relative_residual(log_lhs, log_rhs);
    IdentityCheck {
        residual,
        sign,
        pass: residual < tol,
    }
}

/// Pairwise root-difference product of scaled first-kind roots:
/// `prod_{k<j} (2cos((2j-1)pi/2m) - 2cos((2k-1)pi/2m))`, whose magnitude is
/// `2^{(m-1)/2} m^{m/2}`.
pub fn check_root_difference_product(m: u32, tol: f64) -> IdentityCheck {
    let mf = f64::from(m);
    let mut log_abs = 0.0;
    let mut sign = 1i8;
    for j in 1..=m {
        for k in 1..j {
            let cj = 2.0 * (f64::from(2 * j - 1) * PI / (2.0 * mf)).cos();
            let ck = 2.0 * (f64::from(2 * k - 1) * PI / (2.0 * mf)).cos();
            let d = cj - ck;
            if d < 0.0 {
                sign = -sign;
            }
            log_abs += d.abs().ln();
        }
    }
    let log_rhs = f64::from(m - 1) / 2.0 * 2f64.ln() + mf / 2.0 * mf.ln();
    check_from_logs(log_abs, log_rhs, sign, tol)
}

/// The two Vieta cosine products. `residual_t` covers
/// `prod_{j=1}^{4m} cos((2j-1)pi/8m) = 2^{-4m+1}` (first-kind roots) and
/// `residual_u` covers `prod_{j=1}^{4m} cos(j pi/(4m+1)) = 2^{-4m}`
/// (second-kind roots).
#[derive(Clone, Copy, Debug)]
pub struct CosProductChecks {
    pub residual_t: f64,
    pub sign_t: i8,
    pub residual_u: f64,
    pub sign_u: i8,
    pub pass: bool,
}

pub fn check_cos_products(m: u32, tol: f64) -> CosProductChecks {
    let mf = f64::from(m);
    let mut log_t = 0.0;
    let mut sign_t = 1i8;
    for j in 1..=4 * m {
        let c = (f64::from(2 * j - 1) * PI / (8.0 * mf)).cos();
        if c < 0.0 {
            sign_t = -sign_t;
        }
        log_t += c.abs().ln();
    }
    let rhs_t = (1.0 - 4.0 * mf) * 2f64.ln();

    let mut log_u = 0.0;
    let mut sign_u = 1i8;
    for j in 1..=4 * m {
        let c = (f64::from(j) * PI / (4.0 * mf + 1.0)).cos();
        if c < 0.0 {
            sign_u = -sign_u;
        }
        log_u += c.abs().ln();
    }
    let rhs_u = -4.0 * mf * 2f64.ln();

    let t = check_from_logs(log_t, rhs_t, sign_t, tol);
    let u = check_from_logs(log_u, rhs_u, sign_u, tol);
    CosProductChecks {
        residual_t: t.residual,
        sign_t,
        residual_u: u.residual,
        sign_u,
        pass: t.pass && u.pass,
    }
}

/// Sine product `prod_{j=1}^{m-1} sin((2j-1)pi/(4(m-1))) = 2^{3/2-m}` for
/// `m >= 2`. The body's running index is the product index.
pub fn check_sin_product(m: u32, tol: f64) -> Result<IdentityCheck> {
    if m < 2 {
        return Err(Error::InvalidParameter("sine product needs m >= 2".into()));
    }
    let mf = f64::from(m);
    let mut log_abs = 0.0;
    let mut sign = 1i8;
    for j in 1..m {
        let s = (f64::from(2 * j - 1) * PI / (4.0 * (mf - 1.0))).sin();
        if s < 0.0 {
            sign = -sign;
        }
        log_abs += s.abs().ln();
    }
    let log_rhs = (1.5 - mf) * 2f64.ln();
    Ok(check_from_logs(log_abs, log_rhs, sign, tol))
}

/// Closed-form cosine sum
/// `sum_{k=1}^{m} cos((ak+b)x) =
///  (sin(((m+1/2)a+b)x) - sin((a/2+b)x)) / (2 sin(ax/2))`.
/// The residual is the absolute difference of the two sides. Inputs with
/// `|sin(ax/2)| < 1e-12` are rejected as singular.
pub fn check_cos_sum(a: f64, b: f64, x: f64, m: u32, tol: f64) -> Result<IdentityCheck> {
    let half = (a * x / 2.0).sin();
    if half.abs() < 1e-12 {
        return Err(Error::NotApplicable(format!(
            "sin(ax/2) = {half:.3e} is too close to zero"
        )));
    }
    let direct: f64 = (1..=m).map(|k| ((a * f64::from(k) + b) * x).cos()).sum();
    let closed = (((f64::from(m) + 0.5) * a + b) * x).sin() - ((0.5 * a + b) * x).sin();
    let closed = closed / (2.0 * half);
    let residual = (direct - closed).abs();
    Ok(IdentityCheck {
        residual,
        sign: if direct == 0.0 {
            0
        } else if direct > 0.0 {
            1
        } else {
            -1
        },
        pass: residual < tol,
    })
}

/// `2^{(n-1)^2} * n^n`, the exact discriminant of `T_n`.
pub fn expected_t_discriminant(n: usize) -> BigInt {
    let two_pow = BigInt::from(1) << ((n - 1) * (n - 1));
    two_pow * BigInt::from(n).pow(n as u32)
}
