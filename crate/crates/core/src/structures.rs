//! Homogeneous-structure tensors on `(SU(1,1), g)`.
//!
//! A constant-coefficient structure tensor is expanded as
//! `S = rho (x) theta^0^theta^1 + sigma (x) theta^1^theta^2
//!    + tau (x) theta^2^theta^0` with `rho = rho_a theta^a` and so on, nine
//! rational coefficients in total, ordered
//! `(rho0, rho1, rho2, sigma0, sigma1, sigma2, tau0, tau1, tau2)`.
//!
//! The catalog holds the classified families: the isolated structure `S0`
//! present for every metric, the volume family on the homothetic metrics,
//! one family per deformed fiber direction, and the two lightlike families.

use alloc::vec::Vec;
use num_traits::Zero;

use crate::lie::{Connection, ConnectionKind, DiagonalMetric};
use crate::rational::{rat_i, Rational};
use crate::sample::MetricCase;
use crate::tensor::{wedge2, Tensor, DIM};

pub const COEFF_NAMES: [&str; 9] = [
    "rho0", "rho1", "rho2", "sigma0", "sigma1", "sigma2", "tau0", "tau1", "tau2",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FamilyTag {
    S0,
    Slambda,
    Smu,
    Snu,
    Svol,
    SnullMinus,
    SnullPlus,
    Raw,
}

impl FamilyTag {
    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::S0 => "S0",
            FamilyTag::Slambda => "S_lambda",
            FamilyTag::Smu => "S_mu",
            FamilyTag::Snu => "S_nu",
            FamilyTag::Svol => "S_vol",
            FamilyTag::SnullMinus => "S_null-",
            FamilyTag::SnullPlus => "S_null+",
            FamilyTag::Raw => "raw",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct HomogeneousStructure {
    pub coeffs: [Rational; 9],
    pub family: FamilyTag,
    pub t: Option<Rational>,
}

impl HomogeneousStructure {
    pub fn raw(coeffs: [Rational; 9]) -> Self {
        HomogeneousStructure {
            coeffs,
            family: FamilyTag::Raw,
            t: None,
        }
    }

    pub fn from_vec(v: &[Rational]) -> Self {
        assert_eq!(v.len(), 9);
        let coeffs: [Rational; 9] = core::array::from_fn(|i| v[i].clone());
        Self::raw(coeffs)
    }

    fn rho(&self, a: usize) -> &Rational {
        &self.coeffs[a]
    }
    fn sigma(&self, a: usize) -> &Rational {
        &self.coeffs[3 + a]
    }
    fn tau(&self, a: usize) -> &Rational {
        &self.coeffs[6 + a]
    }

    /// `(0,3)` tensor `S(X_i, X_j, X_k)`.
    pub fn as_0_3(&self) -> Tensor<Rational> {
        Tensor::from_fn(3, |idx| {
            let (i, j, k) = (idx[0], idx[1], idx[2]);
            self.rho(i) * rat_i(wedge2(0, 1, j, k))
                + self.sigma(i) * rat_i(wedge2(1, 2, j, k))
                + self.tau(i) * rat_i(wedge2(2, 0, j, k))
        })
    }

    /// `(1,2)` tensor `S^k_ij` with `g(S_{X_i} X_j, X_k) = S(X_i, X_j, X_k)`.
    pub fn as_1_2(&self, g: &DiagonalMetric) -> Tensor<Rational> {
        let s = self.as_0_3();
        Tensor::from_fn(3, |idx| {
            let (k, i, j) = (idx[0], idx[1], idx[2]);
            s.get(&[i, j, k]) / g.diag(k)
        })
    }

    /// `S_{X_i} X_j` as a coordinate vector.
    pub fn apply(&self, g: &DiagonalMetric, i: usize, j: usize) -> Vec<Rational> {
        let s = self.as_1_2(g);
        (0..DIM).map(|k| s.get(&[k, i, j]).clone()).collect()
    }

    /// The canonical connection `nabla - S`.
    pub fn canonical_connection(&self, lc: &Connection, g: &DiagonalMetric) -> Connection {
        Connection {
            gamma: lc.gamma.sub(&self.as_1_2(g)),
            kind: ConnectionKind::Canonical,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum CatalogError {
    /// The family does not exist on this metric case.
    WrongCase {
        family: FamilyTag,
        case: MetricCase,
    },
}

/// A catalog structure together with its degeneration warning: at the
/// excluded parameter the family collapses onto `S0` and the holonomy rank
/// drops.
#[derive(Clone, Debug, PartialEq)]
pub struct CatalogEntry {
    pub structure: HomogeneousStructure,
    /// `Some(t0)` when the family parameter hit the value where the family
    /// coincides with `S0`.
    pub degenerate_at: Option<Rational>,
}

fn nine(vals: [Rational; 9]) -> [Rational; 9] {
    vals
}

/// The parameter value at which a family coincides with `S0`.
pub fn degeneration_value(name: FamilyTag, g: &DiagonalMetric) -> Option<Rational> {
    let two = rat_i(2);
    match name {
        FamilyTag::Slambda => Some(&g.lambda + &(&two * &g.mu)),
        FamilyTag::Smu => Some(&two * &g.nu - &g.mu),
        FamilyTag::Snu => Some(&two * &g.mu - &g.nu),
        FamilyTag::Svol => Some(g.mu.clone()),
        FamilyTag::SnullMinus | FamilyTag::SnullPlus => Some(Rational::zero()),
        _ => None,
    }
}

/// Marks which metric cases carry which families.
pub fn families_for_case(case: MetricCase) -> Vec<FamilyTag> {
    match case {
        MetricCase::Generic => alloc::vec![FamilyTag::S0],
        MetricCase::Timelike => alloc::vec![FamilyTag::S0, FamilyTag::Slambda],
        MetricCase::SpacelikeNu => alloc::vec![FamilyTag::S0, FamilyTag::Smu],
        MetricCase::SpacelikeMu => alloc::vec![FamilyTag::S0, FamilyTag::Snu],
        MetricCase::Symmetric => alloc::vec![
            FamilyTag::S0,
            FamilyTag::Svol,
            FamilyTag::Slambda,
            FamilyTag::Smu,
            FamilyTag::Snu,
            FamilyTag::SnullMinus,
            FamilyTag::SnullPlus,
        ],
    }
}

/// Builds a catalog structure from its closed form.
///
/// `t` is ignored for `S0`. Hitting the degenerate parameter value is legal
/// and reported in the entry, not an error.
pub fn catalog_family(
    name: FamilyTag,
    g: &DiagonalMetric,
    t: &Rational,
) -> Result<CatalogEntry, CatalogError> {
    let case = g.case();
    if !families_for_case(case).contains(&name) {
        return Err(CatalogError::WrongCase { family: name, case });
    }
    let z = Rational::zero;
    let (l, m, n) = (&g.lambda, &g.mu, &g.nu);
    let coeffs = match name {
        FamilyTag::S0 => nine([
            z(),
            z(),
            -(l - m + n),
            l + m + n,
            z(),
            z(),
            z(),
            -(l + m - n),
            z(),
        ]),
        FamilyTag::Slambda => nine([z(), z(), -l.clone(), t.clone(), z(), z(), z(), -l.clone(), z()]),
        FamilyTag::Smu => nine([z(), z(), m.clone(), m.clone(), z(), z(), z(), t.clone(), z()]),
        FamilyTag::Snu => nine([z(), z(), t.clone(), n.clone(), z(), z(), z(), n.clone(), z()]),
        FamilyTag::Svol => nine([z(), z(), t.clone(), t.clone(), z(), z(), z(), t.clone(), z()]),
        FamilyTag::SnullMinus => nine([
            z(),
            z(),
            m.clone(),
            m + t,
            t.clone(),
            z(),
            -t.clone(),
            m - t,
            z(),
        ]),
        FamilyTag::SnullPlus => nine([
            z(),
            z(),
            m.clone(),
            m - t,
            t.clone(),
            z(),
            -t.clone(),
            m + t,
            z(),
        ]),
        FamilyTag::Raw => panic!("raw is not a catalog family"),
    };
    let degenerate_at = match degeneration_value(name, g) {
        Some(t0) if name != FamilyTag::S0 && *t == t0 => Some(t0),
        _ => None,
    };
    Ok(CatalogEntry {
        structure: HomogeneousStructure {
            coeffs,
            family: name,
            t: if name == FamilyTag::S0 { None } else { Some(t.clone()) },
        },
        degenerate_at,
    })
}

/// The catalog family as an affine subset of coefficient space: `S0` is a
/// point, every other family is the line swept by `t`.
pub fn family_affine_set(name: FamilyTag, g: &DiagonalMetric) -> crate::linalg::AffineSubspace {
    let at = |t: i64| {
        catalog_family(name, g, &rat_i(t))
            .expect("family valid for case")
            .structure
            .coeffs
            .to_vec()
    };
    if name == FamilyTag::S0 {
        return crate::linalg::AffineSubspace::point(at(0));
    }
    let p0 = at(0);
    let p1 = at(1);
    let dir: Vec<Rational> = p1.iter().zip(&p0).map(|(a, b)| a - b).collect();
    crate::linalg::AffineSubspace {
        base: p0,
        directions: alloc::vec![dir],
    }
    .canonical()
}
