//! Portable seeded random stream.
//!
//! Xoshiro256++ whose four state words are the first four outputs of
//! SplitMix64 started at the seed (increment `0x9e3779b97f4a7c15`, mixers
//! `0xbf58476d1ce4e5b9` / `0x94d049bb133111eb`, shifts 30/27/31). A unit
//! uniform is `(next_u64() >> 11) * 2^-53`, which is exactly reproducible in
//! any language with 64-bit integers and IEEE doubles.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

#[derive(Debug, Clone)]
pub struct SeededRng {
    inner: Xoshiro256PlusPlus,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng {
            inner: Xoshiro256PlusPlus::seed_from_u64(seed),
        }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform on `[0, 1)` with 53 random bits.
    #[inline]
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform on `[lo, hi)`.
    #[inline]
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.unit()
    }

    /// Index in `0..n` by `floor(unit() * n)`.
    pub fn index(&mut self, n: usize) -> usize {
        assert!(n > 0);
        ((self.unit() * n as f64) as usize).min(n - 1)
    }
}
