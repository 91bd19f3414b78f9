//! Seed-reproducible pseudo-randomness (splitmix64).
//!
//! Identity checks in this crate are Schwartz–Zippel style: an exact identity
//! of low-degree rational functions is certified by exact evaluation at many
//! random rational points. The generator only has to be deterministic and
//! well-spread; splitmix64 is both and needs no external crate.

use crate::rational::{rat_i, Rational};
use num_bigint::BigInt;

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..n` (n > 0).
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// Uniform integer in `lo..=hi`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + self.below(span) as i64
    }

    /// Random rational `p/q` with `p` in `[-1000, 1000]`, `q` in `[1, 1000]`.
    /// The pool has over 10^6 distinct values, which keeps the failure bound
    /// of a 16-point identity check on degree <= 8 functions far below 1e-3.
    pub fn rational(&mut self) -> Rational {
        let p = self.int_in(-1000, 1000);
        let q = self.int_in(1, 1000);
        Rational::new(BigInt::from(p), BigInt::from(q))
    }

    /// Random nonzero rational from the same pool.
    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let r = self.rational();
            if !num_traits::Zero::is_zero(&r) {
                return r;
            }
        }
    }

    /// Random strictly positive rational from the same pool.
    pub fn positive_rational(&mut self) -> Rational {
        let p = self.int_in(1, 1000);
        let q = self.int_in(1, 1000);
        Rational::new(BigInt::from(p), BigInt::from(q))
    }

    /// Random rational avoiding every value in `avoid`.
    pub fn rational_avoiding(&mut self, avoid: &[Rational]) -> Rational {
        loop {
            let r = self.rational();
            if !avoid.contains(&r) {
                return r;
            }
        }
    }

    /// Small positive rational square (square of `p/q`, `p, q` in `[1, 31]`).
    pub fn square_rational(&mut self) -> Rational {
        let p = self.int_in(1, 31);
        let q = self.int_in(1, 31);
        let r = Rational::new(BigInt::from(p), BigInt::from(q));
        &r * &r
    }

    pub fn sign(&mut self) -> Rational {
        if self.below(2) == 0 {
            rat_i(1)
        } else {
            rat_i(-1)
        }
    }
}
