//! Exact-arithmetic kernel for the geometry of diagonal left-invariant
//! metrics `g = diag(lambda, mu, nu)` on `SU(1,1)`.
//!
//! Everything here is computed over arbitrary-precision rationals: the
//! Levi-Civita connection and its curvature, homogeneous-structure tensors
//! and the polynomial system cutting them out, transvection algebras and
//! their reductive decompositions, almost contact / paracontact structures,
//! and the exact matrix model of the group itself.
//!
//! The crate is `no_std` (with `alloc`); all IO lives in the companion CLI
//! crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod assolver;
pub mod contact;
pub mod expansion;
pub mod group;
pub mod hopf;
pub mod lie;
pub mod linalg;
pub mod matching;
pub mod poly;
pub mod rational;
pub mod rng;
pub mod sample;
pub mod so22;
pub mod structures;
pub mod tensor;
pub mod transvection;

pub use rational::Rational;
