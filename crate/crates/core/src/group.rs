//! Exact matrix model of the group: points `(z1, z2)` with
//! `|z1|^2 - |z2|^2 = 1` identified with `SU(1,1)` via
//! `(z1, z2) -> [[z1, z2], [conj z2, conj z1]]`.
//!
//! Everything is computed over Gaussian rationals, so group products, Killing
//! fields, the adjoint double cover and the fibration differentials are all
//! exact.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::linalg::{self, Matrix, Vector};
use crate::rational::{rat_i, Rational};
use crate::rng::SplitMix64;

/// Exact complex number with rational real and imaginary parts.
#[derive(Clone, Debug, PartialEq)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        Self::new(Rational::one(), Rational::zero())
    }

    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn from_rat(re: Rational) -> Self {
        Self::new(re, Rational::zero())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(&self.re * c, &self.im * c)
    }

    pub fn neg(&self) -> Self {
        Self::new(-self.re.clone(), -self.im.clone())
    }

    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

/// 2x2 complex matrix, row major.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat2 {
    pub e: [[GaussianRational; 2]; 2],
}

impl Mat2 {
    pub fn new(a: GaussianRational, b: GaussianRational, c: GaussianRational, d: GaussianRational) -> Self {
        Mat2 { e: [[a, b], [c, d]] }
    }

    pub fn identity() -> Self {
        Mat2::new(
            GaussianRational::one(),
            GaussianRational::zero(),
            GaussianRational::zero(),
            GaussianRational::one(),
        )
    }

    pub fn zero() -> Self {
        Mat2::new(
            GaussianRational::zero(),
            GaussianRational::zero(),
            GaussianRational::zero(),
            GaussianRational::zero(),
        )
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let p = |i: usize, j: usize| {
            self.e[i][0].mul(&o.e[0][j]).add(&self.e[i][1].mul(&o.e[1][j]))
        };
        Mat2::new(p(0, 0), p(0, 1), p(1, 0), p(1, 1))
    }

    pub fn add(&self, o: &Mat2) -> Mat2 {
        Mat2::new(
            self.e[0][0].add(&o.e[0][0]),
            self.e[0][1].add(&o.e[0][1]),
            self.e[1][0].add(&o.e[1][0]),
            self.e[1][1].add(&o.e[1][1]),
        )
    }

    pub fn sub(&self, o: &Mat2) -> Mat2 {
        Mat2::new(
            self.e[0][0].sub(&o.e[0][0]),
            self.e[0][1].sub(&o.e[0][1]),
            self.e[1][0].sub(&o.e[1][0]),
            self.e[1][1].sub(&o.e[1][1]),
        )
    }

    pub fn scale(&self, c: &Rational) -> Mat2 {
        Mat2::new(
            self.e[0][0].scale(c),
            self.e[0][1].scale(c),
            self.e[1][0].scale(c),
            self.e[1][1].scale(c),
        )
    }

    pub fn neg(&self) -> Mat2 {
        self.scale(&-Rational::one())
    }

    pub fn det(&self) -> GaussianRational {
        self.e[0][0].mul(&self.e[1][1]).sub(&self.e[0][1].mul(&self.e[1][0]))
    }

    pub fn commutator(&self, o: &Mat2) -> Mat2 {
        self.mul(o).sub(&o.mul(self))
    }
}

/// The Pauli-like frame of `su(1,1)`.
pub fn x_basis(alpha: usize) -> Mat2 {
    let i = GaussianRational::i;
    let z = GaussianRational::zero;
    let o = GaussianRational::one;
    match alpha {
        0 => Mat2::new(i(), z(), z(), i().neg()),
        1 => Mat2::new(z(), o(), o(), z()),
        2 => Mat2::new(z(), i(), i().neg(), z()),
        _ => unreachable!(),
    }
}

/// Frame vector with coordinates `v`.
pub fn su11_matrix(v: &[Rational]) -> Mat2 {
    let mut m = Mat2::zero();
    for (a, c) in v.iter().enumerate() {
        m = m.add(&x_basis(a).scale(c));
    }
    m
}

/// Frame coordinates of an `su(1,1)` matrix; `None` if the matrix is not in
/// the algebra (trace form check is exact).
pub fn su11_coords(m: &Mat2) -> Option<Vector> {
    // a X0 + b X1 + c X2 = [[ia, b+ic], [b-ic, -ia]]
    let a = m.e[0][0].im.clone();
    let b = m.e[0][1].re.clone();
    let c = m.e[0][1].im.clone();
    let rebuilt = su11_matrix(&[a.clone(), b.clone(), c.clone()]);
    if rebuilt == *m {
        Some(vec![a, b, c])
    } else {
        None
    }
}

/// Exact point of the unit hyperboloid in the matrix model.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupPoint {
    pub z1: GaussianRational,
    pub z2: GaussianRational,
}

impl GroupPoint {
    pub fn new(z1: GaussianRational, z2: GaussianRational) -> Result<Self, String> {
        let c = &z1.norm_sq() - &z2.norm_sq();
        if c != Rational::one() {
            return Err(String::from("|z1|^2 - |z2|^2 must equal 1"));
        }
        Ok(GroupPoint { z1, z2 })
    }

    pub fn base() -> Self {
        GroupPoint {
            z1: GaussianRational::one(),
            z2: GaussianRational::zero(),
        }
    }

    pub fn matrix(&self) -> Mat2 {
        Mat2::new(
            self.z1.clone(),
            self.z2.clone(),
            self.z2.conj(),
            self.z1.conj(),
        )
    }

    pub fn from_matrix(m: &Mat2) -> Result<Self, String> {
        // Enforce the (z1, z2; conj z2, conj z1) shape.
        if m.e[1][0] != m.e[0][1].conj() || m.e[1][1] != m.e[0][0].conj() {
            return Err(String::from("matrix is not in the model"));
        }
        GroupPoint::new(m.e[0][0].clone(), m.e[0][1].clone())
    }

    pub fn mul(&self, o: &GroupPoint) -> GroupPoint {
        GroupPoint::from_matrix(&self.matrix().mul(&o.matrix()))
            .expect("group closure preserves the model")
    }

    pub fn inverse(&self) -> GroupPoint {
        GroupPoint::new(self.z1.conj(), self.z2.neg()).expect("inverse stays on the hyperboloid")
    }

    pub fn neg(&self) -> GroupPoint {
        GroupPoint {
            z1: self.z1.neg(),
            z2: self.z2.neg(),
        }
    }

    /// Real coordinates `(Re z1, Im z1, Re z2, Im z2)`.
    pub fn coords(&self) -> [Rational; 4] {
        [
            self.z1.re.clone(),
            self.z1.im.clone(),
            self.z2.re.clone(),
            self.z2.im.clone(),
        ]
    }
}

/// Tangent vector at a point, stored as the ambient 2x2 matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct TangentAtPoint {
    pub base: GroupPoint,
    pub mat: Mat2,
}

impl TangentAtPoint {
    /// Frame coordinates of the tangent vector: `base^{-1} * mat` must lie in
    /// the algebra.
    pub fn frame_coords(&self) -> Option<Vector> {
        su11_coords(&self.base.inverse().matrix().mul(&self.mat))
    }
}

/// Deterministic rational points: words of length <= 4 in a fixed seed set,
/// mixed by exact group multiplication. The base point comes first.
pub fn sample_points(seed: u64, count: usize) -> Vec<GroupPoint> {
    assert!(count >= 1);
    let g = |a: (i64, i64), b: (i64, i64), c: (i64, i64), d: (i64, i64)| {
        GroupPoint::new(
            GaussianRational::new(crate::rational::rat(a.0, a.1), crate::rational::rat(b.0, b.1)),
            GaussianRational::new(crate::rational::rat(c.0, c.1), crate::rational::rat(d.0, d.1)),
        )
        .expect("seed points lie on the hyperboloid")
    };
    let seeds = [
        g((5, 4), (0, 1), (3, 4), (0, 1)),
        g((13, 12), (0, 1), (5, 12), (0, 1)),
        g((3, 5), (4, 5), (0, 1), (0, 1)),
        g((1, 1), (3, 4), (3, 4), (0, 1)),
        g((5, 3), (0, 1), (0, 1), (4, 3)),
    ];
    let mut rng = SplitMix64::new(seed);
    let mut out: Vec<GroupPoint> = vec![GroupPoint::base()];
    while out.len() < count {
        let len = 1 + rng.below(4) as usize;
        let mut p = GroupPoint::base();
        for _ in 0..len {
            let s = &seeds[rng.below(seeds.len() as u64) as usize];
            p = if rng.below(2) == 0 {
                p.mul(s)
            } else {
                p.mul(&s.inverse())
            };
        }
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Killing field of the two-sided action evaluated at a point.
///
/// Left generators act by `gen * Z`; the right factor acts through its
/// displayed one-parameter subgroup, whose derivative at zero is `-Z * gen`.
pub fn killing_field(gen: &Mat2, side: Side, z: &GroupPoint) -> TangentAtPoint {
    let m = match side {
        Side::Left => gen.mul(&z.matrix()),
        Side::Right => z.matrix().mul(gen).neg(),
    };
    TangentAtPoint {
        base: z.clone(),
        mat: m,
    }
}

/// Left-invariant field `Z * gen` at `Z`.
pub fn left_invariant_field(gen: &Mat2, z: &GroupPoint) -> TangentAtPoint {
    TangentAtPoint {
        base: z.clone(),
        mat: z.matrix().mul(gen),
    }
}

/// The adjoint image of a group point: the 3x3 rational matrix of
/// `X -> Z X Z^{-1}` in the frame, which lands in `SO_0(1,2)`.
pub fn adjoint_matrix(z: &GroupPoint) -> Matrix {
    let zm = z.matrix();
    let zi = z.inverse().matrix();
    let mut cols = Vec::new();
    for alpha in 0..3 {
        let im = zm.mul(&x_basis(alpha)).mul(&zi);
        cols.push(su11_coords(&im).expect("Ad preserves the algebra"));
    }
    // cols[alpha] is the image of X_alpha; transpose into row-major matrix.
    (0..3)
        .map(|r| (0..3).map(|c| cols[c][r].clone()).collect())
        .collect()
}

/// The displayed closed form of the adjoint double cover, entry by entry.
pub fn adjoint_matrix_closed_form(z: &GroupPoint) -> Matrix {
    let z1 = &z.z1;
    let z2 = &z.z2;
    let i = GaussianRational::i();
    let m_i = i.neg();
    let z1b = z1.conj();
    let z2b = z2.conj();
    let two = rat_i(2);
    // row 0
    let a00 = &z1.norm_sq() + &z2.norm_sq();
    let w = m_i.mul(&z1b.mul(z2));
    let a01 = &two * &w.re;
    let a02 = &two * &w.im;
    // rows 1 and 2
    let u = i.mul(&z1.mul(z2));
    let a10 = -(&two * &u.re);
    let a20 = -(&two * &u.im);
    let p = z1.mul(z1).sub(&z2.mul(z2));
    let a11 = p.re.clone();
    let a21 = p.im.clone();
    let q = z1b.mul(&z1b).add(&z2b.mul(&z2b));
    let a12 = q.im.clone();
    let a22 = q.re.clone();
    vec![
        vec![a00, a01, a02],
        vec![a10, a11, a12],
        vec![a20, a21, a22],
    ]
}

/// Membership in `SO_0(1,2)`: preserves `diag(-1,1,1)`, determinant one,
/// positive top-left entry.
pub fn in_so012(a: &Matrix) -> bool {
    use num_traits::Signed;
    let eta: Matrix = vec![
        vec![rat_i(-1), rat_i(0), rat_i(0)],
        vec![rat_i(0), rat_i(1), rat_i(0)],
        vec![rat_i(0), rat_i(0), rat_i(1)],
    ];
    let at = linalg::transpose(a);
    if linalg::matmul(&linalg::matmul(&at, &eta), a) != eta {
        return false;
    }
    let det = &a[0][0] * (&a[1][1] * &a[2][2] - &a[1][2] * &a[2][1])
        - &a[0][1] * (&a[1][0] * &a[2][2] - &a[1][2] * &a[2][0])
        + &a[0][2] * (&a[1][0] * &a[2][1] - &a[1][1] * &a[2][0]);
    det == Rational::one() && a[0][0].is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn seed_points_are_on_the_hyperboloid_and_products_stay() {
        let pts = sample_points(42, 20);
        assert_eq!(pts[0], GroupPoint::base());
        for p in &pts {
            assert_eq!(&p.z1.norm_sq() - &p.z2.norm_sq(), Rational::one());
            assert_eq!(p.matrix().det(), GaussianRational::one());
        }
        let prod = pts[1].mul(&pts[2]);
        assert_eq!(&prod.z1.norm_sq() - &prod.z2.norm_sq(), Rational::one());
    }

    #[test]
    fn sampling_is_deterministic() {
        let a = sample_points(7, 16);
        let b = sample_points(7, 16);
        assert_eq!(a, b);
    }

    #[test]
    fn left_killing_at_base_is_the_generator() {
        let z = GroupPoint::base();
        for alpha in 0..3 {
            let k = killing_field(&x_basis(alpha), Side::Left, &z);
            assert_eq!(
                k.frame_coords().unwrap(),
                su11_coords(&x_basis(alpha)).unwrap()
            );
        }
    }

    #[test]
    fn left_invariant_field_has_constant_frame_coords() {
        for z in sample_points(3, 6) {
            for alpha in 0..3 {
                let f = left_invariant_field(&x_basis(alpha), &z);
                let mut expect = vec![Rational::zero(); 3];
                expect[alpha] = Rational::one();
                assert_eq!(f.frame_coords().unwrap(), expect);
            }
        }
    }

    #[test]
    fn right_u1_generator_at_base_is_minus_x0() {
        // d/ds of Z diag(e^{-is}, e^{is}) at s = 0 equals Z * (-X0).
        let z = GroupPoint::base();
        let k = killing_field(&x_basis(0), Side::Right, &z);
        let mut expect = vec![Rational::zero(); 3];
        expect[0] = rat_i(-1);
        assert_eq!(k.frame_coords().unwrap(), expect);
    }

    #[test]
    fn adjoint_closed_form_matches_and_is_so012() {
        for z in sample_points(11, 10) {
            let a = adjoint_matrix(&z);
            assert_eq!(a, adjoint_matrix_closed_form(&z));
            assert!(in_so012(&a));
        }
    }

    #[test]
    fn adjoint_is_a_homomorphism_with_kernel_minus_one() {
        let pts = sample_points(13, 8);
        for i in 0..4 {
            let (p, q) = (&pts[i], &pts[i + 4]);
            let lhs = adjoint_matrix(&p.mul(q));
            let rhs = linalg::matmul(&adjoint_matrix(p), &adjoint_matrix(q));
            assert_eq!(lhs, rhs);
            assert_eq!(adjoint_matrix(&p.neg()), adjoint_matrix(p));
        }
    }

    #[test]
    fn pythagorean_point_example() {
        let p = GroupPoint::new(
            GaussianRational::new(rat(5, 4), rat_i(0)),
            GaussianRational::new(rat(3, 4), rat_i(0)),
        )
        .unwrap();
        assert_eq!(&p.z1.norm_sq() - &p.z2.norm_sq(), Rational::one());
    }
}
