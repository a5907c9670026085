//! Exact linear algebra and algebraic graph theory for walk matrices.
//!
//! The crate computes, in arbitrary-precision integer arithmetic:
//!
//! - walk matrices `W(G) = [e, Ae, ..., A^{n-1}e]` and their truncations,
//! - determinants (fraction-free Bareiss), ranks over the rationals and
//!   over GF(2), and Smith normal forms with unimodular witnesses,
//! - equitable-partition quotients (characteristic and divisor matrices),
//! - Chebyshev polynomials, their exact discriminants, and numeric checks
//!   of the associated trigonometric product/sum identities,
//!
//! plus a verification harness ([`verify`]) that exercises the known
//! determinant, rank, and Smith-form behavior of the Dynkin family `D_n`
//! across a range of `n` and emits structured reports.
//!
//! Everything is deterministic: randomized corpora run on a seeded 64-bit
//! linear congruential generator ([`rng::Lcg64`]), and report serialization
//! is byte-stable across runs.
//!
//! ```
//! use walkmat::{det_bareiss, dynkin_graph, graph_walk_matrix, hat_walk_matrix, smith_normal_form};
//!
//! let g = dynkin_graph(5).unwrap();
//! let w = graph_walk_matrix(&g);
//! let snf = smith_normal_form(&w);
//! assert_eq!(snf.diag.iter().map(ToString::to_string).collect::<Vec<_>>(),
//!            ["1", "1", "1", "2", "0"]);
//! assert!(snf.certifies(&w).unwrap());
//!
//! let d = det_bareiss(&hat_walk_matrix(&g).unwrap()).unwrap();
//! assert_eq!(d.magnitude().to_string(), "2");
//! ```

pub mod chebyshev;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod jacobi;
pub mod linalg;
pub mod matrix;
pub mod numeric;
pub mod poly;
pub mod rng;
pub mod snf;
pub mod verify;
pub mod walk;

pub use error::{Error, Result};
pub use graph::{
    divisor_of_partition, dynkin_graph, dynkin_partition, random_graph, DivisorData, Graph,
    Partition,
};
pub use graph6::{emit_graph6, parse_graph6};
pub use linalg::{char_poly, det_bareiss, minor_gcd_oracle, rank_mod2, rank_rational};
pub use matrix::BigMatrix;
pub use poly::IntPolynomial;
pub use rng::Lcg64;
pub use snf::{smith_normal_form, SnfResult};
pub use verify::{verify_dynkin_range, verify_rank2_corpus, VerifyReport};
pub use walk::{
    graph_walk_matrix, hat_walk_matrix, main_eigenvalue_count_exact, main_eigenvalue_count_numeric,
    walk_matrix,
};
