//! Deterministic sampling of metric parameters `(lambda, mu, nu)`.
//!
//! The five metric cases are distinguished by which of `-lambda, mu, nu`
//! coincide. Sampled triples always satisfy `lambda != 0`, `mu, nu > 0`, the
//! case equalities exactly, and the case inequalities strictly. The
//! perfect-square flag restricts `|lambda|, mu, nu` to squares of rationals
//! so that the orthonormal frame has rational components.

use alloc::string::String;
use alloc::vec::Vec;
use num_traits::Signed;

use crate::rational::Rational;
use crate::rng::SplitMix64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum MetricCase {
    /// `-lambda, mu, nu` pairwise distinct.
    Generic,
    /// `-lambda != mu = nu` (deformation along the timelike fiber).
    Timelike,
    /// `-lambda = nu != mu` (deformation along a spacelike fiber).
    SpacelikeNu,
    /// `-lambda = mu != nu` (deformation along the other spacelike fiber).
    SpacelikeMu,
    /// `-lambda = mu = nu` (homothetic to the standard metric).
    Symmetric,
}

pub const ALL_CASES: [MetricCase; 5] = [
    MetricCase::Generic,
    MetricCase::Timelike,
    MetricCase::SpacelikeNu,
    MetricCase::SpacelikeMu,
    MetricCase::Symmetric,
];

impl MetricCase {
    pub fn name(self) -> &'static str {
        match self {
            MetricCase::Generic => "generic",
            MetricCase::Timelike => "timelike",
            MetricCase::SpacelikeNu => "spacelike-nu",
            MetricCase::SpacelikeMu => "spacelike-mu",
            MetricCase::Symmetric => "symmetric",
        }
    }

    pub fn parse(s: &str) -> Result<Self, String> {
        match s {
            "generic" => Ok(MetricCase::Generic),
            "timelike" => Ok(MetricCase::Timelike),
            "spacelike-nu" => Ok(MetricCase::SpacelikeNu),
            "spacelike-mu" => Ok(MetricCase::SpacelikeMu),
            "symmetric" => Ok(MetricCase::Symmetric),
            _ => {
                let mut m = String::from("unknown metric case `");
                m.push_str(s);
                m.push_str("` (expected generic|timelike|spacelike-nu|spacelike-mu|symmetric)");
                Err(m)
            }
        }
    }

    /// Classifies a concrete triple; `None` if preconditions fail.
    pub fn classify(lambda: &Rational, mu: &Rational, nu: &Rational) -> Option<MetricCase> {
        if lambda.is_zero() || !mu.is_positive() || !nu.is_positive() {
            return None;
        }
        let ml = -lambda.clone();
        Some(match (ml == *mu, ml == *nu, mu == nu) {
            (true, true, true) => MetricCase::Symmetric,
            (false, false, true) => MetricCase::Timelike,
            (false, true, false) => MetricCase::SpacelikeNu,
            (true, false, false) => MetricCase::SpacelikeMu,
            (false, false, false) => MetricCase::Generic,
            _ => unreachable!("two equalities force the third"),
        })
    }
}

use num_traits::Zero;

/// Seed-reproducible parameter triples for a metric case.
///
/// Pure function of `(case, seed, count, perfect_squares)`.
pub fn sample_params(
    case: MetricCase,
    seed: u64,
    count: usize,
    perfect_squares: bool,
) -> Vec<(Rational, Rational, Rational)> {
    assert!(count >= 1, "count must be >= 1");
    let mut g = SplitMix64::new(seed ^ (case as u64).wrapping_mul(0x9e37_79b9));
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let draw_pos = |g: &mut SplitMix64| {
            if perfect_squares {
                g.square_rational()
            } else {
                g.positive_rational()
            }
        };
        let (lambda, mu, nu) = match case {
            MetricCase::Symmetric => {
                let q = draw_pos(&mut g);
                (-q.clone(), q.clone(), q)
            }
            MetricCase::Timelike => {
                let m = draw_pos(&mut g);
                let l = if perfect_squares {
                    let a = draw_pos(&mut g);
                    a * g.sign()
                } else {
                    g.nonzero_rational()
                };
                (l, m.clone(), m)
            }
            MetricCase::SpacelikeNu => {
                let n = draw_pos(&mut g);
                let m = draw_pos(&mut g);
                (-n.clone(), m, n)
            }
            MetricCase::SpacelikeMu => {
                let m = draw_pos(&mut g);
                let n = draw_pos(&mut g);
                (-m.clone(), m, n)
            }
            MetricCase::Generic => {
                let l = if perfect_squares {
                    let a = draw_pos(&mut g);
                    a * g.sign()
                } else {
                    g.nonzero_rational()
                };
                let m = draw_pos(&mut g);
                let n = draw_pos(&mut g);
                (l, m, n)
            }
        };
        if MetricCase::classify(&lambda, &mu, &nu) == Some(case) {
            out.push((lambda, mu, nu));
        }
    }
    out
}
