//! The three fibrations of the hyperboloid: differentials of the timelike,
//! spacelike and lightlike projection maps, exact kernel checks, and the
//! horizontal isometry property of the timelike one.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::group::{left_invariant_field, x_basis, GaussianRational, GroupPoint, Mat2};
use crate::rational::{rat, Rational};

/// `pi_0 (z1, z2) = ((|z1|^2 + |z2|^2)/2, -i z1 z2)` into `R^{1,2}`.
pub fn pi0(z: &GroupPoint) -> [Rational; 3] {
    let u = (&z.z1.norm_sq() + &z.z2.norm_sq()) * rat(1, 2);
    let w = GaussianRational::i().neg().mul(&z.z1.mul(&z.z2));
    [u, w.re, w.im]
}

/// Differential of `pi_0` at `z` applied to a tangent matrix.
pub fn dpi0(z: &GroupPoint, tangent: &Mat2) -> [Rational; 3] {
    let m1 = &tangent.e[0][0];
    let m2 = &tangent.e[0][1];
    let du = z.z1.conj().mul(m1).re + z.z2.conj().mul(m2).re;
    let dw = GaussianRational::i()
        .neg()
        .mul(&m1.mul(&z.z2).add(&z.z1.mul(m2)));
    [du, dw.re, dw.im]
}

/// `pi_1 (z1, z2) = (Im(conj(z1) z2), (z1^2 - z2^2)/2)` into `R^{1,2}`.
pub fn pi1(z: &GroupPoint) -> [Rational; 3] {
    let t = z.z1.conj().mul(&z.z2).im;
    let y = z.z1.mul(&z.z1).sub(&z.z2.mul(&z.z2)).scale(&rat(1, 2));
    [t, y.re, y.im]
}

pub fn dpi1(z: &GroupPoint, tangent: &Mat2) -> [Rational; 3] {
    let m1 = &tangent.e[0][0];
    let m2 = &tangent.e[0][1];
    let dt = m1.conj().mul(&z.z2).add(&z.z1.conj().mul(m2)).im;
    let dy = z.z1.mul(m1).sub(&z.z2.mul(m2));
    [dt, dy.re, dy.im]
}

/// `pi_+ (z1, z2) = z1 - i z2` into the punctured plane.
pub fn piplus(z: &GroupPoint) -> GaussianRational {
    z.z1.sub(&GaussianRational::i().mul(&z.z2))
}

pub fn dpiplus(z: &GroupPoint, tangent: &Mat2) -> GaussianRational {
    let _ = z;
    tangent.e[0][0].sub(&GaussianRational::i().mul(&tangent.e[0][1]))
}

fn minkowski(a: &[Rational; 3], b: &[Rational; 3]) -> Rational {
    -(&a[0] * &b[0]) + &a[1] * &b[1] + &a[2] * &b[2]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HopfCheck {
    Pi0,
    Pi1,
    PiPlus,
    DoubleCover,
}

#[derive(Clone, Debug, Default)]
pub struct HopfReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl HopfReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checked > 0
    }
}

/// Runs one fibration check over the supplied points.
///
/// - `Pi0`: the timelike direction spans the kernel, the projected image
///   satisfies the target quadric, and the differential is isometric on the
///   horizontal frame for the standard metric.
/// - `Pi1`: the spacelike direction `X1` is in the kernel and the image lies
///   on the target quadric.
/// - `PiPlus`: the lightlike direction `X0 + X1` is in the kernel (the unit
///   normalization of `X0 + X1` only rescales the kernel).
/// - `DoubleCover`: the adjoint matrix of every point is in `SO_0(1,2)`,
///   matches its closed form, and is multiplicative on consecutive pairs
///   with `-Z` and `Z` mapping to the same image.
pub fn hopf_check(which: HopfCheck, points: &[GroupPoint]) -> HopfReport {
    let mut rep = HopfReport::default();
    match which {
        HopfCheck::Pi0 => {
            for z in points {
                let fiber = left_invariant_field(&x_basis(0), z).mat;
                if dpi0(z, &fiber) != [Rational::zero(), Rational::zero(), Rational::zero()] {
                    rep.failures.push(format!("kernel fails at {:?}", z.coords()));
                    continue;
                }
                let img = pi0(z);
                // Image lies on -u^2 + |w|^2 = -1/4.
                if minkowski(&img, &img) != rat(-1, 4) {
                    rep.failures.push(format!("image quadric fails at {:?}", z.coords()));
                    continue;
                }
                // Horizontal isometry for the standard metric: the images of
                // Z X1, Z X2 are orthonormal in R^{1,2}.
                let h1 = dpi0(z, &left_invariant_field(&x_basis(1), z).mat);
                let h2 = dpi0(z, &left_invariant_field(&x_basis(2), z).mat);
                if minkowski(&h1, &h1) != Rational::one()
                    || minkowski(&h2, &h2) != Rational::one()
                    || !minkowski(&h1, &h2).is_zero()
                {
                    rep.failures
                        .push(format!("horizontal isometry fails at {:?}", z.coords()));
                    continue;
                }
                rep.checked += 1;
            }
        }
        HopfCheck::Pi1 => {
            for z in points {
                let fiber = left_invariant_field(&x_basis(1), z).mat;
                if dpi1(z, &fiber) != [Rational::zero(), Rational::zero(), Rational::zero()] {
                    rep.failures.push(format!("kernel fails at {:?}", z.coords()));
                    continue;
                }
                let img = pi1(z);
                // Image lies on -t^2 + |y|^2 = 1/4.
                if minkowski(&img, &img) != rat(1, 4) {
                    rep.failures.push(format!("image quadric fails at {:?}", z.coords()));
                    continue;
                }
                rep.checked += 1;
            }
        }
        HopfCheck::PiPlus => {
            for z in points {
                let gen = x_basis(0).add(&x_basis(1));
                let fiber = left_invariant_field(&gen, z).mat;
                if !dpiplus(z, &fiber).is_zero() {
                    rep.failures.push(format!("kernel fails at {:?}", z.coords()));
                    continue;
                }
                if piplus(z).is_zero() {
                    rep.failures.push(format!("image degenerates at {:?}", z.coords()));
                    continue;
                }
                rep.checked += 1;
            }
        }
        HopfCheck::DoubleCover => {
            use crate::group::{adjoint_matrix, adjoint_matrix_closed_form, in_so012};
            for (i, z) in points.iter().enumerate() {
                let a = adjoint_matrix(z);
                if a != adjoint_matrix_closed_form(z) {
                    rep.failures.push(format!("closed form fails at {:?}", z.coords()));
                    continue;
                }
                if !in_so012(&a) {
                    rep.failures.push(format!("image not in SO_0(1,2) at {:?}", z.coords()));
                    continue;
                }
                if adjoint_matrix(&z.neg()) != a {
                    rep.failures.push(format!("-Z image differs at {:?}", z.coords()));
                    continue;
                }
                let w = &points[(i + 1) % points.len()];
                let lhs = adjoint_matrix(&z.mul(w));
                let rhs = crate::linalg::matmul(&a, &adjoint_matrix(w));
                if lhs != rhs {
                    rep.failures.push(format!("homomorphism fails at pair {}", i));
                    continue;
                }
                rep.checked += 1;
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::sample_points;
    use crate::rational::rat_i;

    #[test]
    fn base_point_projections() {
        let o = GroupPoint::base();
        assert_eq!(pi0(&o), [rat(1, 2), rat_i(0), rat_i(0)]);
        assert_eq!(pi1(&o), [rat_i(0), rat(1, 2), rat_i(0)]);
        assert_eq!(piplus(&o), GaussianRational::one());
        let k = left_invariant_field(&x_basis(0), &o).mat;
        assert_eq!(dpi0(&o, &k), [rat_i(0), rat_i(0), rat_i(0)]);
    }

    #[test]
    fn all_checks_pass_on_sampled_points() {
        let pts = sample_points(2024, 16);
        for which in [
            HopfCheck::Pi0,
            HopfCheck::Pi1,
            HopfCheck::PiPlus,
            HopfCheck::DoubleCover,
        ] {
            let rep = hopf_check(which, &pts);
            assert!(rep.passed(), "{:?}: {:?}", which, rep.failures);
            assert_eq!(rep.checked, 16);
        }
    }

    #[test]
    fn lightlike_kernel_is_scale_invariant() {
        let pts = sample_points(5, 4);
        for z in &pts {
            let gen = x_basis(0).add(&x_basis(1)).scale(&rat(7, 3));
            let f = left_invariant_field(&gen, z).mat;
            assert!(dpiplus(z, &f).is_zero());
        }
    }
}
