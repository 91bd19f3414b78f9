//! Exact dense linear algebra over the rationals: reduced row echelon form,
//! affine solution sets of linear systems, rank and span membership.

use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::rational::Rational;

pub type Vector = Vec<Rational>;
pub type Matrix = Vec<Vec<Rational>>;

/// In-place reduced row echelon form. Returns the pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let t = &m[r][j] * &f;
                    m[i][j] = &m[i][j] - &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut c = m.clone();
    rref(&mut c).len()
}

/// Affine subspace `{ base + sum c_i dir_i }` of `Q^n`.
///
/// Canonical form: `directions` are the rows of an RREF basis of the
/// direction space, and `base` has zero entries in every pivot-free ... see
/// [`AffineSubspace::canonicalize`].
#[derive(Clone, Debug, PartialEq)]
pub struct AffineSubspace {
    pub base: Vector,
    pub directions: Vec<Vector>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Infeasible;

impl AffineSubspace {
    pub fn point(base: Vector) -> Self {
        AffineSubspace {
            base,
            directions: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.base.len()
    }

    pub fn dim(&self) -> usize {
        self.directions.len()
    }

    /// Point for the given free coefficients.
    pub fn at(&self, coeffs: &[Rational]) -> Vector {
        assert_eq!(coeffs.len(), self.dim());
        let mut p = self.base.clone();
        for (c, d) in coeffs.iter().zip(&self.directions) {
            for (pi, di) in p.iter_mut().zip(d) {
                *pi = &*pi + &(c * di);
            }
        }
        p
    }

    /// RREF the direction basis and reduce the base point against it, so two
    /// parametrizations of the same set compare equal.
    pub fn canonicalize(&mut self) {
        let pivots = rref(&mut self.directions);
        self.directions.retain(|d| d.iter().any(|x| !x.is_zero()));
        for (row, &c) in pivots.iter().enumerate() {
            if !self.base[c].is_zero() {
                let f = self.base[c].clone();
                let dir = self.directions[row].clone();
                for j in 0..self.base.len() {
                    let t = &dir[j] * &f;
                    self.base[j] = &self.base[j] - &t;
                }
            }
        }
    }

    pub fn canonical(mut self) -> Self {
        self.canonicalize();
        self
    }

    pub fn contains(&self, p: &[Rational]) -> bool {
        let diff: Vector = p.iter().zip(&self.base).map(|(a, b)| a - b).collect();
        in_span(&self.directions, &diff)
    }

    /// True iff every point of `self` lies in `other`.
    pub fn subset_of(&self, other: &AffineSubspace) -> bool {
        if !other.contains(&self.base) {
            return false;
        }
        self.directions.iter().all(|d| in_span(&other.directions, d))
    }

    pub fn same_set(&self, other: &AffineSubspace) -> bool {
        self.subset_of(other) && other.subset_of(self)
    }
}

/// Membership of `v` in the row span of `basis`.
pub fn in_span(basis: &[Vector], v: &Vector) -> bool {
    if v.iter().all(|x| x.is_zero()) {
        return true;
    }
    if basis.is_empty() {
        return false;
    }
    let mut m: Matrix = basis.to_vec();
    let r0 = rank(&m);
    m.push(v.clone());
    rank(&m) == r0
}

/// Coordinates of `v` in the (independent) `basis`, if `v` lies in its span.
pub fn coords_in_span(basis: &[Vector], v: &Vector) -> Option<Vector> {
    if basis.is_empty() {
        return if v.iter().all(|x| x.is_zero()) {
            Some(Vec::new())
        } else {
            None
        };
    }
    let n = v.len();
    let k = basis.len();
    // Solve basis^T x = v.
    let mut aug: Matrix = (0..n)
        .map(|i| {
            let mut row: Vector = basis.iter().map(|b| b[i].clone()).collect();
            row.push(v[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&k) {
        return None;
    }
    let mut x = vec![Rational::zero(); k];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][k].clone();
    }
    // Span coordinates must be unique for a basis; guard regardless.
    let recon: Vector = (0..n)
        .map(|i| {
            let mut s = Rational::zero();
            for (j, b) in basis.iter().enumerate() {
                s = s + &x[j] * &b[i];
            }
            s
        })
        .collect();
    if &recon == v {
        Some(x)
    } else {
        None
    }
}

/// Exact affine solution set of `A x = b`.
pub fn solve_affine(a: &Matrix, b: &Vector) -> Result<AffineSubspace, Infeasible> {
    assert_eq!(a.len(), b.len());
    if a.is_empty() {
        return Err(Infeasible);
    }
    let n = a[0].len();
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&n) {
        return Err(Infeasible);
    }
    let mut base = vec![Rational::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        base[c] = aug[r][n].clone();
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut directions = Vec::with_capacity(free.len());
    for &f in &free {
        let mut d = vec![Rational::zero(); n];
        d[f] = Rational::one();
        for (r, &c) in pivots.iter().enumerate() {
            d[c] = -aug[r][f].clone();
        }
        directions.push(d);
    }
    Ok(AffineSubspace { base, directions }.canonical())
}

/// Solves the square system `A x = b`; `None` if `A` is singular.
pub fn solve_square(a: &Matrix, b: &Vector) -> Option<Vector> {
    match solve_affine(a, b) {
        Ok(s) if s.dim() == 0 => Some(s.base),
        _ => None,
    }
}

/// 3x3 matrix-vector product.
pub fn matvec(m: &Matrix, v: &Vector) -> Vector {
    m.iter().map(|row| crate::rational::dot(row, v)).collect()
}

/// Product of two dense matrices.
pub fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let k = b.len();
    let m = b[0].len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut s = Rational::zero();
                    for t in 0..k {
                        s = s + &a[i][t] * &b[t][j];
                    }
                    s
                })
                .collect()
        })
        .collect()
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect()
}

pub fn transpose(m: &Matrix) -> Matrix {
    let rows = m.len();
    let cols = m[0].len();
    (0..cols)
        .map(|j| (0..rows).map(|i| m[i][j].clone()).collect())
        .collect()
}

/// Inverse of a square matrix; `None` if singular.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j { Rational::one() } else { Rational::zero() });
            }
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}
