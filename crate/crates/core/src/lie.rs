//! The metric Lie algebra `su(1,1)` with diagonal metrics: Levi-Civita
//! connection via the Koszul formula, curvature, and covariant derivatives of
//! constant-coefficient frame tensors by arbitrary frame connections.
//!
//! Index conventions, fixed once for the whole crate:
//! - structure constants `c[k][i][j]`: `[X_i, X_j] = sum_k c^k_ij X_k`;
//! - connection `gamma[k][i][j]`: `nabla_{X_i} X_j = sum_k gamma^k_ij X_k`,
//!   so the connection forms satisfy `gamma^i_kj = omega^i_j(X_k)`;
//! - curvature `r[l][i][j][k]`: `R(X_i, X_j) X_k = sum_l R^l_ijk X_l` with
//!   `R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z`;
//! - `(0,4)` layout `r4[i][j][k][l] = g(R(X_i,X_j)X_k, X_l)`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Signed, Zero};

use crate::rational::{rat_i, Rational};
use crate::tensor::{indices, Scalar, Tensor, DIM};

/// Structure constants `c^k_ij` of a three-dimensional Lie algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureConstants {
    c: Tensor<Rational>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum AlgebraError {
    NotAntisymmetric { k: usize, i: usize, j: usize },
    JacobiFails { i: usize, j: usize, k: usize, l: usize },
}

impl StructureConstants {
    pub fn new(c: Tensor<Rational>) -> Result<Self, AlgebraError> {
        assert_eq!(c.rank(), 3);
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    if *c.get(&[k, i, j]) != -c.get(&[k, j, i]).clone() {
                        return Err(AlgebraError::NotAntisymmetric { k, i, j });
                    }
                }
            }
        }
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    for l in 0..DIM {
                        let mut s = Rational::zero();
                        for m in 0..DIM {
                            s = s + c.get(&[m, i, j]) * c.get(&[l, m, k])
                                + c.get(&[m, j, k]) * c.get(&[l, m, i])
                                + c.get(&[m, k, i]) * c.get(&[l, m, j]);
                        }
                        if !s.is_zero() {
                            return Err(AlgebraError::JacobiFails { i, j, k, l });
                        }
                    }
                }
            }
        }
        Ok(StructureConstants { c })
    }

    /// `su(1,1)` in the Pauli-like frame:
    /// `[X0,X1] = 2 X2`, `[X1,X2] = -2 X0`, `[X2,X0] = 2 X1`.
    pub fn su11() -> Self {
        let mut c = Tensor::zeros(3);
        let mut set = |k: usize, i: usize, j: usize, v: i64| {
            c.set(&[k, i, j], rat_i(v));
            c.set(&[k, j, i], rat_i(-v));
        };
        set(2, 0, 1, 2);
        set(0, 1, 2, -2);
        set(1, 2, 0, 2);
        StructureConstants::new(c).expect("su(1,1) table is a Lie algebra")
    }

    /// The abelian algebra (all brackets zero).
    pub fn abelian() -> Self {
        StructureConstants::new(Tensor::zeros(3)).unwrap()
    }

    pub fn c(&self) -> &Tensor<Rational> {
        &self.c
    }

    /// Bracket of two frame vectors given by coordinates.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); DIM];
        for k in 0..DIM {
            for i in 0..DIM {
                for j in 0..DIM {
                    out[k] = &out[k] + &(self.c.get(&[k, i, j]) * &x[i] * &y[j]);
                }
            }
        }
        out
    }
}

/// The diagonal metric `g = diag(lambda, mu, nu)` in the frame.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagonalMetric {
    pub lambda: Rational,
    pub mu: Rational,
    pub nu: Rational,
}

impl DiagonalMetric {
    pub fn new(lambda: Rational, mu: Rational, nu: Rational) -> Result<Self, String> {
        if lambda.is_zero() {
            return Err(String::from("lambda must be nonzero"));
        }
        if !mu.is_positive() || !nu.is_positive() {
            return Err(String::from("mu and nu must be positive"));
        }
        Ok(DiagonalMetric { lambda, mu, nu })
    }

    pub fn diag(&self, i: usize) -> &Rational {
        match i {
            0 => &self.lambda,
            1 => &self.mu,
            2 => &self.nu,
            _ => unreachable!(),
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> Rational {
        if i == j {
            self.diag(i).clone()
        } else {
            Rational::zero()
        }
    }

    pub fn as_tensor(&self) -> Tensor<Rational> {
        Tensor::from_fn(2, |idx| self.entry(idx[0], idx[1]))
    }

    pub fn inner(&self, x: &[Rational], y: &[Rational]) -> Rational {
        (0..DIM).fold(Rational::zero(), |s, i| s + self.diag(i) * &x[i] * &y[i])
    }

    pub fn is_lorentzian(&self) -> bool {
        self.lambda.is_negative()
    }

    pub fn case(&self) -> crate::sample::MetricCase {
        crate::sample::MetricCase::classify(&self.lambda, &self.mu, &self.nu)
            .expect("validated at construction")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConnectionKind {
    LeviCivita,
    Canonical,
    Other,
}

/// Frame connection `gamma^k_ij`.
#[derive(Clone, Debug, PartialEq)]
pub struct Connection {
    pub gamma: Tensor<Rational>,
    pub kind: ConnectionKind,
}

impl Connection {
    /// `nabla_{X_i} X_j` as a coordinate vector.
    pub fn apply(&self, i: usize, j: usize) -> Vec<Rational> {
        (0..DIM).map(|k| self.gamma.get(&[k, i, j]).clone()).collect()
    }

    /// Torsion minus bracket: zero iff torsion-free relative to `alg`.
    pub fn torsion_defect(&self, alg: &StructureConstants) -> Tensor<Rational> {
        Tensor::from_fn(3, |idx| {
            let (k, i, j) = (idx[0], idx[1], idx[2]);
            self.gamma.get(&[k, i, j]) - self.gamma.get(&[k, j, i]) - alg.c().get(&[k, i, j])
        })
    }

    pub fn is_metric(&self, g: &DiagonalMetric) -> bool {
        covariant_derivative_0q(self, &g.as_tensor()).is_zero()
    }
}

/// The Levi-Civita connection of a left-invariant diagonal metric, from the
/// Koszul formula
/// `2 g(nabla_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y)`.
pub fn koszul_connection(alg: &StructureConstants, g: &DiagonalMetric) -> Connection {
    let two = rat_i(2);
    let gamma = Tensor::from_fn(3, |idx| {
        let (k, i, j) = (idx[0], idx[1], idx[2]);
        let c = alg.c();
        let mut s = Rational::zero();
        for m in 0..DIM {
            s = s + c.get(&[m, i, j]) * &g.entry(m, k) - c.get(&[m, j, k]) * &g.entry(m, i)
                + c.get(&[m, k, i]) * &g.entry(m, j);
        }
        s / (&two * g.diag(k))
    });
    Connection {
        gamma,
        kind: ConnectionKind::LeviCivita,
    }
}

/// Curvature of a frame connection over a frame algebra, `(1,3)` layout.
#[derive(Clone, Debug, PartialEq)]
pub struct CurvatureTensor {
    pub r: Tensor<Rational>,
}

impl CurvatureTensor {
    pub fn lower(&self, g: &DiagonalMetric) -> Tensor<Rational> {
        Tensor::from_fn(4, |idx| {
            let (i, j, k, l) = (idx[0], idx[1], idx[2], idx[3]);
            self.r.get(&[l, i, j, k]) * g.diag(l)
        })
    }

    /// The curvature operator `R(X_i, X_j)` as a 3x3 endomorphism matrix
    /// (rows = output component, columns = input vector).
    pub fn endomorphism(&self, i: usize, j: usize) -> Vec<Vec<Rational>> {
        (0..DIM)
            .map(|l| (0..DIM).map(|k| self.r.get(&[l, i, j, k]).clone()).collect())
            .collect()
    }
}

pub fn curvature(conn: &Connection, alg: &StructureConstants) -> CurvatureTensor {
    let r = curvature_tensor_generic(&conn.gamma, alg.c());
    CurvatureTensor { r }
}

pub fn curvature_tensor_generic<T: Scalar>(gamma: &Tensor<T>, c: &Tensor<T>) -> Tensor<T> {
    Tensor::from_fn(4, |idx| {
        let (l, i, j, k) = (idx[0], idx[1], idx[2], idx[3]);
        let mut s = T::zero();
        for m in 0..DIM {
            s = s + gamma.get(&[m, j, k]).clone() * gamma.get(&[l, i, m]).clone()
                - gamma.get(&[m, i, k]).clone() * gamma.get(&[l, j, m]).clone()
                - c.get(&[m, i, j]).clone() * gamma.get(&[l, m, k]).clone();
        }
        s
    })
}

/// Covariant derivative of a constant-coefficient `(0,q)` frame tensor; the
/// derivative index comes first in the result.
pub fn covariant_derivative_0q(conn: &Connection, t: &Tensor<Rational>) -> Tensor<Rational> {
    nabla_0q_generic(&conn.gamma, t)
}

pub fn nabla_0q_generic<T: Scalar>(gamma: &Tensor<T>, t: &Tensor<T>) -> Tensor<T> {
    let q = t.rank();
    assert!(q <= 4, "rank > 4 tensors are not needed");
    Tensor::from_fn(q + 1, |idx| {
        let m = idx[0];
        let rest = &idx[1..];
        let mut s = T::zero();
        for slot in 0..q {
            for p in 0..DIM {
                let mut inner: Vec<usize> = rest.to_vec();
                inner[slot] = p;
                s = s - gamma.get(&[p, m, rest[slot]]).clone() * t.get(&inner).clone();
            }
        }
        s
    })
}

/// Covariant derivative of a constant-coefficient `(1,q)` frame tensor
/// (stored `[l, i_1..i_q]`); derivative index first in the result.
pub fn covariant_derivative_1q(conn: &Connection, t: &Tensor<Rational>) -> Tensor<Rational> {
    nabla_1q_generic(&conn.gamma, t)
}

pub fn nabla_1q_generic<T: Scalar>(gamma: &Tensor<T>, t: &Tensor<T>) -> Tensor<T> {
    let rank = t.rank();
    assert!((2..=4).contains(&rank), "rank > 4 tensors are not needed");
    let q = rank - 1;
    Tensor::from_fn(rank + 1, |idx| {
        let m = idx[0];
        let l = idx[1];
        let rest = &idx[2..];
        let mut s = T::zero();
        for p in 0..DIM {
            let mut up: Vec<usize> = idx[1..].to_vec();
            up[0] = p;
            s = s + gamma.get(&[l, m, p]).clone() * t.get(&up).clone();
        }
        for slot in 0..q {
            for p in 0..DIM {
                let mut inner: Vec<usize> = idx[1..].to_vec();
                inner[slot + 1] = p;
                s = s - gamma.get(&[p, m, rest[slot]]).clone() * t.get(&inner).clone();
            }
        }
        s
    })
}

/// The four constants of the corresponding unit-sphere-bundle metric, plus
/// its non-degeneracy and Riemannian flags.
#[derive(Clone, Debug, PartialEq)]
pub struct KKParams {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    pub kappa: Rational,
    pub non_degenerate: bool,
    pub riemannian: bool,
}

pub fn kk_correspondence(
    lambda: &Rational,
    mu: &Rational,
    nu: &Rational,
    kappa: &Rational,
) -> KKParams {
    assert!(kappa.is_positive(), "kappa must be positive");
    let four = rat_i(4);
    let a = &four * lambda / kappa;
    let b = Rational::zero();
    let c = mu - &a;
    let d = nu - mu;
    let a_ac = &a * &(&a + &c) - &b * &b;
    let acd = &a + &c + &d;
    let non_degenerate = !a_ac.is_zero() && !acd.is_zero();
    let riemannian = a_ac.is_positive() && a.is_positive() && acd.is_positive();
    KKParams {
        a,
        b,
        c,
        d,
        kappa: kappa.clone(),
        non_degenerate,
        riemannian,
    }
}

/// Hand-derived closed forms for the Levi-Civita connection and curvature of
/// `g = diag(lambda, mu, nu)`, used as an independent cross-check of the
/// Koszul and curvature routines.
pub mod reference {
    use super::*;

    /// Nonzero connection-form coefficients as `(i, j, form_index, value)`
    /// meaning `omega^i_j = value * theta^{form_index}`.
    pub fn connection_forms(g: &DiagonalMetric) -> Vec<(usize, usize, usize, Rational)> {
        let (l, m, n) = (&g.lambda, &g.mu, &g.nu);
        let lmn = l - m + n;
        let lpmn = l + m - n;
        let lpmpn = l + m + n;
        vec![
            (0, 1, 2, &lmn / l),
            (0, 2, 1, -(&lpmn / l)),
            (1, 0, 2, -(&lmn / m)),
            (1, 2, 0, -(&lpmpn / m)),
            (2, 0, 1, &lpmn / n),
            (2, 1, 0, &lpmpn / n),
        ]
    }

    /// Connection with `gamma^i_kj = omega^i_j(X_k)` built from the closed
    /// forms above.
    pub fn levi_civita(g: &DiagonalMetric) -> Connection {
        let mut gamma = Tensor::zeros(3);
        for (i, j, f, v) in connection_forms(g) {
            gamma.set(&[i, f, j], v);
        }
        Connection {
            gamma,
            kind: ConnectionKind::LeviCivita,
        }
    }

    /// The six nonzero curvature components as
    /// `((i, j), form_index, vector_index, value)` meaning
    /// `R(X_i, X_j)` contains `value * theta^{form_index} (x) X_{vector_index}`.
    pub fn curvature_components(
        g: &DiagonalMetric,
    ) -> Vec<((usize, usize), usize, usize, Rational)> {
        let (l, m, n) = (&g.lambda, &g.mu, &g.nu);
        let two = rat_i(2);
        let three = rat_i(3);
        let c0110 = l / n + &two * m / n - &two + m * m / (l * n) + &two * m / l - &three * n / l;
        let c0101 =
            -(l * l) / (m * n) - &two * l / n + &two * l / m - m / n - &two + &three * n / m;
        let c1221 = -(&three * l) / m - &two - &two * n / m + m / l - &two * n / l + n * n / (l * m);
        let c1212 = &three * l / n + &two * m / n + &two - m * m / (l * n) + &two * m / l - n / l;
        let c2020 = -(l / m) + &two - &two * n / m + &three * m / l - &two * n / l - n * n / (l * m);
        let c2002 = l * l / (m * n) - &two * l / n + &two * l / m - &three * m / n + &two + n / m;
        vec![
            ((0, 1), 1, 0, c0110),
            ((0, 1), 0, 1, c0101),
            ((1, 2), 2, 1, c1221),
            ((1, 2), 1, 2, c1212),
            ((2, 0), 2, 0, c2020),
            ((2, 0), 0, 2, c2002),
        ]
    }

    /// Curvature tensor assembled from the closed-form components (all other
    /// components zero, and antisymmetry in the first pair).
    pub fn curvature(g: &DiagonalMetric) -> CurvatureTensor {
        let mut r = Tensor::zeros(4);
        for ((i, j), f, v, value) in curvature_components(g) {
            r.set(&[v, i, j, f], value.clone());
            r.set(&[v, j, i, f], -value);
        }
        CurvatureTensor { r }
    }

    /// Constant-curvature model `R(X,Y)Z = -(g(Y,Z) X - g(X,Z) Y)`.
    pub fn constant_curvature_minus_one(g: &DiagonalMetric) -> CurvatureTensor {
        let r = Tensor::from_fn(4, |idx| {
            let (l, i, j, k) = (idx[0], idx[1], idx[2], idx[3]);
            let di = if l == i { Rational::one() } else { Rational::zero() };
            let dj = if l == j { Rational::one() } else { Rational::zero() };
            -(g.entry(j, k) * di - g.entry(i, k) * dj)
        });
        CurvatureTensor { r }
    }
}

/// First Bianchi identity and pair symmetry of a `(0,4)` curvature tensor.
pub fn curvature_symmetries_hold(r4: &Tensor<Rational>) -> bool {
    for idx in indices(4) {
        let (i, j, k, l) = (idx[0], idx[1], idx[2], idx[3]);
        if *r4.get(&[i, j, k, l]) != -r4.get(&[j, i, k, l]).clone() {
            return false;
        }
        if r4.get(&[i, j, k, l]) != r4.get(&[k, l, i, j]) {
            return false;
        }
        let bianchi = r4.get(&[i, j, k, l]).clone()
            + r4.get(&[j, k, i, l]).clone()
            + r4.get(&[k, i, j, l]).clone();
        if !bianchi.is_zero() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::sample::{sample_params, ALL_CASES};

    fn metric(l: i64, m: i64, n: i64) -> DiagonalMetric {
        DiagonalMetric::new(rat_i(l), rat_i(m), rat_i(n)).unwrap()
    }

    #[test]
    fn su11_brackets_match_table() {
        let alg = StructureConstants::su11();
        let e = |i: usize| {
            let mut v = vec![Rational::zero(); 3];
            v[i] = Rational::one();
            v
        };
        assert_eq!(alg.bracket(&e(0), &e(1)), vec![rat_i(0), rat_i(0), rat_i(2)]);
        assert_eq!(alg.bracket(&e(1), &e(2)), vec![rat_i(-2), rat_i(0), rat_i(0)]);
        assert_eq!(alg.bracket(&e(2), &e(0)), vec![rat_i(0), rat_i(2), rat_i(0)]);
    }

    #[test]
    fn corrupted_table_fails_jacobi_or_antisymmetry() {
        let mut c = StructureConstants::su11().c().clone();
        c.set(&[2, 0, 1], rat_i(-2)); // flip one sign, leave the mirror entry
        assert!(StructureConstants::new(c).is_err());
    }

    #[test]
    fn degenerate_metrics_are_rejected() {
        assert!(DiagonalMetric::new(rat_i(0), rat_i(1), rat_i(1)).is_err());
        assert!(DiagonalMetric::new(rat_i(1), rat_i(0), rat_i(1)).is_err());
        assert!(DiagonalMetric::new(rat_i(1), rat_i(1), rat_i(-2)).is_err());
    }

    #[test]
    fn koszul_is_torsion_free_and_metric() {
        let alg = StructureConstants::su11();
        for case in ALL_CASES {
            for (l, m, n) in sample_params(case, 11, 4, false) {
                let g = DiagonalMetric::new(l, m, n).unwrap();
                let conn = koszul_connection(&alg, &g);
                assert!(conn.torsion_defect(&alg).is_zero());
                assert!(conn.is_metric(&g));
            }
        }
    }

    #[test]
    fn koszul_matches_closed_forms_on_samples() {
        let alg = StructureConstants::su11();
        for case in ALL_CASES {
            for (l, m, n) in sample_params(case, 17, 16, false) {
                let g = DiagonalMetric::new(l, m, n).unwrap();
                assert_eq!(koszul_connection(&alg, &g).gamma, reference::levi_civita(&g).gamma);
            }
        }
    }

    #[test]
    fn koszul_special_values() {
        let alg = StructureConstants::su11();
        // diag(-1,1,1): nabla_{X0} X1 = X2 and nabla_{X1} X0 = -X2.
        let g = metric(-1, 1, 1);
        let conn = koszul_connection(&alg, &g);
        assert_eq!(conn.apply(0, 1), vec![rat_i(0), rat_i(0), rat_i(1)]);
        assert_eq!(conn.apply(1, 0), vec![rat_i(0), rat_i(0), rat_i(-1)]);
        // nabla_{X_i} X_i = 0 for diagonal left-invariant metrics.
        let g2 = metric(1, 2, 4);
        let conn2 = koszul_connection(&alg, &g2);
        for i in 0..3 {
            assert!(conn2.apply(i, i).iter().all(|x| x.is_zero()));
        }
        // diag(1,2,4): X0-component of nabla_{X2} X1 is (lambda-mu+nu)/lambda = 3.
        assert_eq!(conn2.apply(2, 1)[0], rat_i(3));
    }

    #[test]
    fn curvature_matches_closed_forms_on_samples() {
        let alg = StructureConstants::su11();
        for case in ALL_CASES {
            for (l, m, n) in sample_params(case, 23, 16, false) {
                let g = DiagonalMetric::new(l, m, n).unwrap();
                let conn = koszul_connection(&alg, &g);
                assert_eq!(curvature(&conn, &alg).r, reference::curvature(&g).r);
            }
        }
    }

    #[test]
    fn standard_metric_has_constant_curvature_minus_one() {
        let alg = StructureConstants::su11();
        let g = metric(-1, 1, 1);
        let conn = koszul_connection(&alg, &g);
        let r = curvature(&conn, &alg);
        let oracle = reference::constant_curvature_minus_one(&g);
        assert_eq!(r.r, oracle.r);
        // R(X0,X1)X1 = -X0.
        assert_eq!(*r.r.get(&[0, 0, 1, 1]), rat_i(-1));
    }

    #[test]
    fn flat_abelian_connection_has_zero_curvature() {
        let alg = StructureConstants::abelian();
        let conn = Connection {
            gamma: Tensor::zeros(3),
            kind: ConnectionKind::Other,
        };
        assert!(curvature(&conn, &alg).r.is_zero());
    }

    #[test]
    fn curvature_sample_value_1_2_4() {
        let alg = StructureConstants::su11();
        let g = metric(1, 2, 4);
        let conn = koszul_connection(&alg, &g);
        let r = curvature(&conn, &alg);
        // theta^1 (x) X_0 coefficient of R(X0,X1):
        // lambda/nu + 2mu/nu - 2 + mu^2/(lambda nu) + 2mu/lambda - 3nu/lambda
        let expected = rat(1, 4) + rat_i(1) - rat_i(2) + rat_i(1) + rat_i(4) - rat_i(12);
        assert_eq!(*r.r.get(&[0, 0, 1, 1]), expected);
    }

    #[test]
    fn lowered_curvature_has_classical_symmetries() {
        let alg = StructureConstants::su11();
        for case in ALL_CASES {
            for (l, m, n) in sample_params(case, 31, 4, false) {
                let g = DiagonalMetric::new(l, m, n).unwrap();
                let conn = koszul_connection(&alg, &g);
                let r4 = curvature(&conn, &alg).lower(&g);
                assert!(curvature_symmetries_hold(&r4));
            }
        }
    }

    #[test]
    fn metric_is_parallel_and_standard_curvature_too() {
        let alg = StructureConstants::su11();
        let g = metric(-1, 1, 1);
        let conn = koszul_connection(&alg, &g);
        assert!(covariant_derivative_0q(&conn, &g.as_tensor()).is_zero());
        // Locally symmetric: nabla R = 0 at the standard metric.
        let r = curvature(&conn, &alg);
        assert!(covariant_derivative_1q(&conn, &r.r).is_zero());
    }

    #[test]
    fn kk_correspondence_examples() {
        let p = kk_correspondence(&rat_i(1), &rat_i(1), &rat_i(1), &rat_i(4));
        assert_eq!((p.a, p.b, p.c, p.d), (rat_i(1), rat_i(0), rat_i(0), rat_i(0)));
        assert!(p.riemannian && p.non_degenerate);

        let q = kk_correspondence(&rat_i(-1), &rat_i(1), &rat_i(1), &rat_i(4));
        assert_eq!((q.a.clone(), q.c.clone(), q.d.clone()), (rat_i(-1), rat_i(2), rat_i(0)));
        assert!(q.non_degenerate && !q.riemannian);

        // d vanishes iff mu = nu.
        let r = kk_correspondence(&rat_i(2), &rat_i(3), &rat_i(3), &rat_i(5));
        assert!(r.d.is_zero());
        let s = kk_correspondence(&rat_i(2), &rat_i(3), &rat_i(4), &rat_i(5));
        assert!(!s.d.is_zero());
    }
}
