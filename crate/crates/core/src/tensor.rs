//! Dense tensors over the fixed three-dimensional frame.
//!
//! Every axis has length 3 (the frame `{X0, X1, X2}`), so a rank-`r` tensor
//! stores `3^r` entries. Entries are any ring-like scalar; rationals and
//! multivariate polynomials are the two instantiations used.

use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};
use num_traits::Zero;

pub const DIM: usize = 3;

/// Ring-like scalar usable as a tensor entry.
pub trait Scalar:
    Clone
    + PartialEq
    + Zero
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Add<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Zero
        + Neg<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Add<Output = T>
{
}

#[derive(Clone, Debug, PartialEq)]
pub struct Tensor<T> {
    rank: usize,
    data: Vec<T>,
}

impl<T: Scalar> Tensor<T> {
    pub fn zeros(rank: usize) -> Self {
        let n = DIM.pow(rank as u32);
        let mut data = Vec::with_capacity(n);
        for _ in 0..n {
            data.push(T::zero());
        }
        Tensor { rank, data }
    }

    pub fn from_fn(rank: usize, mut f: impl FnMut(&[usize]) -> T) -> Self {
        let mut t = Self::zeros(rank);
        for idx in indices(rank) {
            let v = f(&idx);
            t.set(&idx, v);
        }
        t
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn offset(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.rank, "index rank mismatch");
        let mut o = 0;
        for &i in idx {
            debug_assert!(i < DIM);
            o = o * DIM + i;
        }
        o
    }

    pub fn get(&self, idx: &[usize]) -> &T {
        &self.data[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: T) {
        let o = self.offset(idx);
        self.data[o] = v;
    }

    pub fn update(&mut self, idx: &[usize], f: impl FnOnce(&T) -> T) {
        let o = self.offset(idx);
        self.data[o] = f(&self.data[o]);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.rank, other.rank);
        Tensor {
            rank: self.rank,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.rank, other.rank);
        Tensor {
            rank: self.rank,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        Tensor {
            rank: self.rank,
            data: self.data.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Tensor<U> {
        Tensor {
            rank: self.rank,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }
}

/// All multi-indices of the given rank, in lexicographic order.
pub fn indices(rank: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(DIM.pow(rank as u32));
    let mut cur = alloc::vec![0usize; rank];
    loop {
        out.push(cur.clone());
        let mut k = rank;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            cur[k] += 1;
            if cur[k] < DIM {
                break;
            }
            cur[k] = 0;
        }
    }
}

/// Levi-Civita style sign of a frame triple: the full antisymmetrization of
/// `theta^0 (x) theta^1 (x) theta^2` evaluated on `(X_i, X_j, X_k)`.
pub fn eps(i: usize, j: usize, k: usize) -> i64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

/// `theta^a wedge theta^b` on `(X_i, X_j)` with the convention
/// `(theta^a ^ theta^b)(Y, Z) = theta^a(Y) theta^b(Z) - theta^b(Y) theta^a(Z)`.
pub fn wedge2(a: usize, b: usize, i: usize, j: usize) -> i64 {
    let d = |x: usize, y: usize| (x == y) as i64;
    d(a, i) * d(b, j) - d(b, i) * d(a, j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat_i, Rational};

    #[test]
    fn index_enumeration_is_dense_and_ordered() {
        let all = indices(3);
        assert_eq!(all.len(), 27);
        assert_eq!(all[0], alloc::vec![0, 0, 0]);
        assert_eq!(all[26], alloc::vec![2, 2, 2]);
        let t: Tensor<Rational> = Tensor::from_fn(3, |idx| rat_i((idx[0] * 9 + idx[1] * 3 + idx[2]) as i64));
        for idx in &all {
            assert_eq!(*t.get(idx), rat_i((idx[0] * 9 + idx[1] * 3 + idx[2]) as i64));
        }
    }

    #[test]
    fn wedge_has_no_half_factor() {
        assert_eq!(wedge2(0, 1, 0, 1), 1);
        assert_eq!(wedge2(0, 1, 1, 0), -1);
        assert_eq!(wedge2(1, 2, 2, 1), -1);
        assert_eq!(wedge2(2, 0, 0, 2), -1);
        assert_eq!(wedge2(2, 0, 2, 0), 1);
        assert_eq!(wedge2(0, 1, 0, 0), 0);
    }

    #[test]
    fn eps_is_totally_antisymmetric() {
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    assert_eq!(eps(i, j, k), -eps(j, i, k));
                    assert_eq!(eps(i, j, k), -eps(i, k, j));
                }
            }
        }
        assert_eq!(eps(0, 1, 2), 1);
    }
}
