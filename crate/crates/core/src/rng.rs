//! Deterministic 64-bit linear congruential generator.
//!
//! Every randomized corpus in this crate (random graphs, random test
//! matrices) is driven by this generator so that reports are reproducible
//! bit for bit from the seed alone. The recurrence is
//!
//! ```text
//! x_{k+1} = 6364136223846793005 * x_k + 1442695040888963407   (mod 2^64)
//! ```
//!
//! and each call outputs the upper 32 bits of the new state, which are the
//! best-distributed bits of an LCG.

/// 64-bit linear congruential generator (Knuth's MMIX multiplier).
#[derive(Clone, Debug)]
pub struct Lcg64 {
    state: u64,
}

const MULTIPLIER: u64 = 6364136223846793005;
const INCREMENT: u64 = 1442695040888963407;

impl Lcg64 {
    pub fn new(seed: u64) -> Self {
        Lcg64 { state: seed }
    }

    /// Advances the state and returns the upper 32 bits.
    pub fn next_u32(&mut self) -> u32 {
        self.state = self.state.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        (self.state >> 32) as u32
    }

    pub fn next_bool(&mut self) -> bool {
        self.next_u32() & 1 == 1
    }

    /// Uniform value in `0..bound` via the fixed-point multiply reduction
    /// `(next_u32 * bound) >> 32`. The modulo bias is below 2^-32 per draw,
    /// irrelevant for test corpora, and the mapping is fully deterministic.
    pub fn next_below(&mut self, bound: u32) -> u32 {
        assert!(bound > 0);
        ((u64::from(self.next_u32()) * u64::from(bound)) >> 32) as u32
    }

    /// Uniform integer in the inclusive range `lo..=hi`.
    pub fn next_in(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        let span = (hi - lo + 1) as u32;
        lo + i64::from(self.next_below(span))
    }

    /// Uniform value in `[0, 1)` with 32 bits of resolution.
    pub fn next_f64(&mut self) -> f64 {
        f64::from(self.next_u32()) / (u32::MAX as f64 + 1.0)
    }
}
