//! Almost contact and almost paracontact metric structures on the diagonal
//! metrics, their defining axioms, the structure coefficient of the
//! covariant derivative of `phi`, parallelism under canonical connections,
//! and the two mixed families of three structures.
//!
//! The orthonormal frame `X0/sqrt|lambda|, X1/sqrt mu, X2/sqrt nu` must have
//! rational components, so constructors require `|lambda|, mu, nu` to be
//! perfect squares of rationals.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Signed, Zero};

use crate::lie::{
    covariant_derivative_1q, koszul_connection, Connection, DiagonalMetric, StructureConstants,
};
use crate::linalg::Matrix;
use crate::rational::{exact_sqrt, rat_i, Rational};
use crate::structures::HomogeneousStructure;
use crate::tensor::{Tensor, DIM};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContactKind {
    Contact,
    Paracontact,
}

/// A `(phi, xi, eta)` triple with the causal sign of the distinguished
/// direction.
#[derive(Clone, Debug, PartialEq)]
pub struct ContactTriple {
    pub kind: ContactKind,
    /// `phi[k][i]`: coefficient of `X_k` in `phi(X_i)`.
    pub phi: Matrix,
    pub xi: Vec<Rational>,
    pub eta: Vec<Rational>,
    pub epsilon: Rational,
    pub index: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub enum TripleError {
    NotPerfectSquare(String),
    Inadmissible(String),
}

fn sqrt_of(v: &Rational, what: &str) -> Result<Rational, TripleError> {
    exact_sqrt(v).ok_or_else(|| TripleError::NotPerfectSquare(format!("{} must be a perfect square", what)))
}

/// Builds the displayed triple for `(kind, index)` in the unnormalized frame.
///
/// Admissibility: the contact triple with timelike direction exists for any
/// signature; the other two contact triples require a Riemannian metric
/// (`lambda > 0`); paracontact triples require a Lorentzian metric
/// (`lambda < 0`) and a spacelike direction (`index` 1 or 2).
pub fn make_triple(
    kind: ContactKind,
    index: usize,
    g: &DiagonalMetric,
) -> Result<ContactTriple, TripleError> {
    assert!(index < 3);
    let sl = sqrt_of(&g.lambda.abs(), "|lambda|")?;
    let sm = sqrt_of(&g.mu, "mu")?;
    let sn = sqrt_of(&g.nu, "nu")?;
    match kind {
        ContactKind::Contact => {
            if index > 0 && !g.lambda.is_positive() {
                return Err(TripleError::Inadmissible(format!(
                    "contact triple {} needs a Riemannian metric",
                    index
                )));
            }
        }
        ContactKind::Paracontact => {
            if !g.lambda.is_negative() {
                return Err(TripleError::Inadmissible(String::from(
                    "paracontact structures need a Lorentzian metric",
                )));
            }
            if index == 0 {
                return Err(TripleError::Inadmissible(String::from(
                    "the distinguished paracontact direction must be spacelike",
                )));
            }
        }
    }
    let mut phi = vec![vec![Rational::zero(); 3]; 3];
    // phi = A (x) thetabar^b - B (x) thetabar^a patterns, written out per index.
    match (kind, index) {
        (ContactKind::Contact, 0) => {
            // X1bar (x) theta2bar - X2bar (x) theta1bar
            phi[1][2] = &sn / &sm;
            phi[2][1] = -(&sm / &sn);
        }
        (ContactKind::Contact, 1) => {
            // X0bar (x) theta2bar - X2bar (x) theta0bar
            phi[0][2] = &sn / &sl;
            phi[2][0] = -(&sl / &sn);
        }
        (ContactKind::Contact, 2) => {
            // X1bar (x) theta0bar - X0bar (x) theta1bar
            phi[1][0] = &sl / &sm;
            phi[0][1] = -(&sm / &sl);
        }
        (ContactKind::Paracontact, 1) => {
            // -X2bar (x) theta0bar - X0bar (x) theta2bar
            phi[2][0] = -(&sl / &sn);
            phi[0][2] = -(&sn / &sl);
        }
        (ContactKind::Paracontact, 2) => {
            // X1bar (x) theta0bar + X0bar (x) theta1bar
            phi[1][0] = &sl / &sm;
            phi[0][1] = &sm / &sl;
        }
        _ => unreachable!(),
    }
    let norm = [sl, sm, sn];
    let mut xi = vec![Rational::zero(); 3];
    xi[index] = Rational::one() / &norm[index];
    let mut eta = vec![Rational::zero(); 3];
    eta[index] = norm[index].clone();
    let epsilon = if index == 0 {
        if g.lambda.is_negative() {
            rat_i(-1)
        } else {
            rat_i(1)
        }
    } else {
        rat_i(1)
    };
    Ok(ContactTriple {
        kind,
        phi,
        xi,
        eta,
        epsilon,
        index,
    })
}

#[derive(Clone, Debug, Default)]
pub struct AxiomReport {
    pub failures: Vec<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Exact check of the defining axioms on the frame basis.
pub fn check_structure_axioms(tr: &ContactTriple, g: &DiagonalMetric) -> AxiomReport {
    let mut rep = AxiomReport::default();
    // eta(xi) = 1
    let pairing: Rational = tr
        .eta
        .iter()
        .zip(&tr.xi)
        .map(|(a, b)| a * b)
        .fold(Rational::zero(), |s, t| s + t);
    if pairing != Rational::one() {
        rep.failures.push(String::from("eta(xi) != 1"));
    }
    // phi(xi) = 0
    let phixi: Vec<Rational> = (0..3)
        .map(|k| {
            (0..3)
                .map(|i| &tr.phi[k][i] * &tr.xi[i])
                .fold(Rational::zero(), |s, t| s + t)
        })
        .collect();
    if phixi.iter().any(|x| !x.is_zero()) {
        rep.failures.push(String::from("phi(xi) != 0"));
    }
    // eta o phi = 0
    for i in 0..3 {
        let v: Rational = (0..3).map(|k| &tr.eta[k] * &tr.phi[k][i]).fold(Rational::zero(), |s, t| s + t);
        if !v.is_zero() {
            rep.failures.push(format!("eta(phi X{}) != 0", i));
        }
    }
    // phi^2 = -+ id +- eta (x) xi
    let sign = match tr.kind {
        ContactKind::Contact => rat_i(-1),
        ContactKind::Paracontact => rat_i(1),
    };
    for k in 0..3 {
        for i in 0..3 {
            let sq: Rational = (0..3)
                .map(|m| &tr.phi[k][m] * &tr.phi[m][i])
                .fold(Rational::zero(), |s, t| s + t);
            let idterm = if k == i { sign.clone() } else { Rational::zero() };
            let want = idterm - &sign * &tr.eta[i] * &tr.xi[k];
            if sq != want {
                rep.failures.push(format!("phi^2 component [{k}][{i}] wrong"));
            }
        }
    }
    // Compatibility with the metric.
    for i in 0..3 {
        for j in 0..3 {
            let lhs: Rational = (0..3)
                .map(|k| g.diag(k) * &tr.phi[k][i] * &tr.phi[k][j])
                .fold(Rational::zero(), |s, t| s + t);
            let want = match tr.kind {
                ContactKind::Contact => g.entry(i, j) - &tr.epsilon * &tr.eta[i] * &tr.eta[j],
                ContactKind::Paracontact => -g.entry(i, j) + &tr.eta[i] * &tr.eta[j],
            };
            if lhs != want {
                rep.failures.push(format!("compatibility fails at [{i}][{j}]"));
            }
        }
    }
    rep
}

/// The structure coefficient: the constant `alpha` (contact) or `beta`
/// (paracontact) with `(nabla_X phi) Y = coeff (g(X,Y) xi - e eta(Y) X)`,
/// where `e` is `epsilon` for contact triples and `1` for paracontact ones.
/// `None` when the derivative is not of this shape.
pub fn structure_coefficient(
    tr: &ContactTriple,
    g: &DiagonalMetric,
    lc: &Connection,
) -> Option<Rational> {
    let phi_t = Tensor::from_fn(2, |idx| tr.phi[idx[0]][idx[1]].clone());
    let nphi = covariant_derivative_1q(lc, &phi_t);
    let e = match tr.kind {
        ContactKind::Contact => tr.epsilon.clone(),
        ContactKind::Paracontact => Rational::one(),
    };
    let mut coeff: Option<Rational> = None;
    for m in 0..DIM {
        for l in 0..DIM {
            for i in 0..DIM {
                let pattern = g.entry(m, i) * &tr.xi[l]
                    - &e * &tr.eta[i] * if l == m { Rational::one() } else { Rational::zero() };
                let lhs = nphi.get(&[m, l, i]).clone();
                if pattern.is_zero() {
                    if !lhs.is_zero() {
                        return None;
                    }
                } else {
                    let r = lhs / pattern;
                    match &coeff {
                        None => coeff = Some(r),
                        Some(c) if *c == r => {}
                        _ => return None,
                    }
                }
            }
        }
    }
    coeff
}

/// First component where `d eta(X_i, X_j) != 2 g(X_i, phi X_j)`, with
/// `d eta(X_i, X_j) = -eta([X_i, X_j])` for invariant forms; `None` when the
/// metric condition holds.
pub fn contact_metric_defect(
    tr: &ContactTriple,
    g: &DiagonalMetric,
    alg: &StructureConstants,
) -> Option<(usize, usize)> {
    for i in 0..DIM {
        for j in 0..DIM {
            let mut deta = Rational::zero();
            for k in 0..DIM {
                deta = deta - &tr.eta[k] * alg.c().get(&[k, i, j]);
            }
            let rhs = rat_i(2) * g.diag(i) * &tr.phi[i][j];
            if deta != rhs {
                return Some((i, j));
            }
        }
    }
    None
}

/// `d eta(X, Y) = 2 g(X, phi Y)` componentwise.
pub fn check_contact_metric(tr: &ContactTriple, g: &DiagonalMetric, alg: &StructureConstants) -> bool {
    contact_metric_defect(tr, g, alg).is_none()
}

/// True iff `phi`, `xi`, `eta` are all parallel for `nabla - S`.
pub fn check_parallel(
    tr: &ContactTriple,
    g: &DiagonalMetric,
    alg: &StructureConstants,
    s: &HomogeneousStructure,
) -> bool {
    let lc = koszul_connection(alg, g);
    let tilde = s.canonical_connection(&lc, g);
    let phi_t = Tensor::from_fn(2, |idx| tr.phi[idx[0]][idx[1]].clone());
    if !covariant_derivative_1q(&tilde, &phi_t).is_zero() {
        return false;
    }
    // nabla xi: (nabla_m xi)^l = gamma^l_{m p} xi^p.
    for m in 0..DIM {
        for l in 0..DIM {
            let mut v = Rational::zero();
            for p in 0..DIM {
                v = v + tilde.gamma.get(&[l, m, p]) * &tr.xi[p];
            }
            if !v.is_zero() {
                return false;
            }
        }
    }
    // nabla eta: (nabla_m eta)_i = -gamma^p_{m i} eta_p.
    for m in 0..DIM {
        for i in 0..DIM {
            let mut v = Rational::zero();
            for p in 0..DIM {
                v = v - tilde.gamma.get(&[p, m, i]) * &tr.eta[p];
            }
            if !v.is_zero() {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MixedFlavor {
    Lorentzian,
    Riemannian,
}

/// Three interacting structures with signs `tau_l` (+1 contact, -1
/// paracontact).
#[derive(Clone, Debug)]
pub struct MixedFamily {
    pub flavor: MixedFlavor,
    pub triples: [ContactTriple; 3],
    pub taus: [Rational; 3],
}

/// The two displayed families: one almost contact plus two almost
/// paracontact structures on Lorentzian metrics, three almost contact
/// structures (with the first one's sign flipped) on Riemannian ones.
pub fn build_mixed(flavor: MixedFlavor, g: &DiagonalMetric) -> Result<MixedFamily, TripleError> {
    match flavor {
        MixedFlavor::Lorentzian => {
            if !g.lambda.is_negative() {
                return Err(TripleError::Inadmissible(String::from(
                    "the Lorentzian family needs lambda < 0",
                )));
            }
            let t0 = make_triple(ContactKind::Contact, 0, g)?;
            let t1 = make_triple(ContactKind::Paracontact, 1, g)?;
            let t2 = make_triple(ContactKind::Paracontact, 2, g)?;
            Ok(MixedFamily {
                flavor,
                triples: [t0, t1, t2],
                taus: [rat_i(1), rat_i(-1), rat_i(-1)],
            })
        }
        MixedFlavor::Riemannian => {
            if !g.lambda.is_positive() {
                return Err(TripleError::Inadmissible(String::from(
                    "the Riemannian family needs lambda > 0",
                )));
            }
            let mut t0 = make_triple(ContactKind::Contact, 0, g)?;
            for row in t0.phi.iter_mut() {
                for v in row.iter_mut() {
                    *v = -v.clone();
                }
            }
            let t1 = make_triple(ContactKind::Contact, 1, g)?;
            let t2 = make_triple(ContactKind::Contact, 2, g)?;
            Ok(MixedFamily {
                flavor,
                triples: [t0, t1, t2],
                taus: [rat_i(1), rat_i(1), rat_i(1)],
            })
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct MixedReport {
    pub relations_checked: usize,
    pub failures: Vec<String>,
    /// Structure coefficient of each triple, when defined.
    pub coefficients: [Option<Rational>; 3],
    /// All three coefficients are the Sasakian/paraSasakian constants.
    pub three_sasakian: bool,
    /// Exact ratio of each `phi_l` to half the corresponding stabilizer
    /// action, when proportional.
    pub half_stabilizer_ratios: [Option<Rational>; 3],
    pub notes: Vec<String>,
}

impl MixedReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.relations_checked > 0
    }
}

fn apply(m: &Matrix, v: &[Rational]) -> Vec<Rational> {
    (0..3)
        .map(|k| {
            (0..3)
                .map(|i| &m[k][i] * &v[i])
                .fold(Rational::zero(), |s, t| s + t)
        })
        .collect()
}

fn matmul3(a: &Matrix, b: &Matrix) -> Matrix {
    (0..3)
        .map(|i| {
            (0..3)
                .map(|j| {
                    (0..3)
                        .map(|k| &a[i][k] * &b[k][j])
                        .fold(Rational::zero(), |s, t| s + t)
                })
                .collect()
        })
        .collect()
}

/// Verifies every displayed relation of a mixed family of three structures,
/// computes the structure coefficients, and compares each `phi_l` with half
/// the stabilizer action on the homothetic metrics.
pub fn check_mixed_3(fam: &MixedFamily, g: &DiagonalMetric) -> MixedReport {
    let mut rep = MixedReport::default();
    let alg = StructureConstants::su11();
    let lc = koszul_connection(&alg, g);
    let cyc = [(0usize, 1usize, 2usize), (1, 2, 0), (2, 0, 1)];
    for (i, j, k) in cyc {
        let ti = &fam.triples[i];
        let tj = &fam.triples[j];
        let tk = &fam.triples[k];
        // eta_i(xi_j) = 0
        let pair: Rational = ti
            .eta
            .iter()
            .zip(&tj.xi)
            .map(|(a, b)| a * b)
            .fold(Rational::zero(), |s, t| s + t);
        if pair.is_zero() {
            rep.relations_checked += 1;
        } else {
            rep.failures.push(format!("eta_{i}(xi_{j}) != 0"));
        }
        // eta_i o phi_j = tau_k eta_k = -eta_j o phi_i
        for x in 0..3 {
            let lhs: Rational = (0..3).map(|m| &ti.eta[m] * &tj.phi[m][x]).fold(Rational::zero(), |s, t| s + t);
            let mid = &fam.taus[k] * &tk.eta[x];
            let rhs: Rational = (0..3).map(|m| &tj.eta[m] * &ti.phi[m][x]).fold(Rational::zero(), |s, t| s + t);
            if lhs == mid && rhs == -mid.clone() {
                rep.relations_checked += 1;
            } else {
                rep.failures.push(format!("eta-phi chain fails at ({i},{j},{k}) slot {x}"));
            }
        }
        // phi_i(xi_j) = tau_j xi_k ; phi_j(xi_i) = -tau_i xi_k
        let lhs = apply(&ti.phi, &tj.xi);
        let want: Vec<Rational> = tk.xi.iter().map(|v| v * &fam.taus[j]).collect();
        if lhs == want {
            rep.relations_checked += 1;
        } else {
            rep.failures.push(format!("phi_{i}(xi_{j}) != tau_{j} xi_{k}"));
        }
        let lhs = apply(&tj.phi, &ti.xi);
        let want: Vec<Rational> = tk.xi.iter().map(|v| -(v * &fam.taus[i])).collect();
        if lhs == want {
            rep.relations_checked += 1;
        } else {
            rep.failures.push(format!("phi_{j}(xi_{i}) != -tau_{i} xi_{k}"));
        }
        // phi_i phi_j - tau_i eta_j (x) xi_i = tau_k phi_k
        //   = -phi_j phi_i + tau_j eta_i (x) xi_j
        let prod = matmul3(&ti.phi, &tj.phi);
        let mut lhs1 = prod.clone();
        for a in 0..3 {
            for bidx in 0..3 {
                lhs1[a][bidx] = &lhs1[a][bidx] - &(&fam.taus[i] * &tj.eta[bidx] * &ti.xi[a]);
            }
        }
        let want: Matrix = (0..3)
            .map(|a| (0..3).map(|bidx| &fam.taus[k] * &tk.phi[a][bidx]).collect())
            .collect();
        if lhs1 == want {
            rep.relations_checked += 1;
        } else {
            rep.failures.push(format!("phi_{i} phi_{j} relation fails"));
        }
        let prod2 = matmul3(&tj.phi, &ti.phi);
        let mut lhs2: Matrix = (0..3)
            .map(|a| (0..3).map(|bidx| -prod2[a][bidx].clone()).collect())
            .collect();
        for a in 0..3 {
            for bidx in 0..3 {
                lhs2[a][bidx] = &lhs2[a][bidx] + &(&fam.taus[j] * &ti.eta[bidx] * &tj.xi[a]);
            }
        }
        if lhs2 == want {
            rep.relations_checked += 1;
        } else {
            rep.failures.push(format!("phi_{j} phi_{i} relation fails"));
        }
    }
    // Compatibility with tau signs.
    for l in 0..3 {
        let t = &fam.triples[l];
        for x in 0..3 {
            for y in 0..3 {
                let lhs: Rational = (0..3)
                    .map(|k| g.diag(k) * &t.phi[k][x] * &t.phi[k][y])
                    .fold(Rational::zero(), |s, tv| s + tv);
                let want = &fam.taus[l]
                    * (g.entry(x, y) - &t.epsilon * &t.eta[x] * &t.eta[y]);
                if lhs == want {
                    rep.relations_checked += 1;
                } else {
                    rep.failures.push(format!("compatibility fails for triple {l}"));
                }
            }
        }
    }
    // Structure coefficients and the Sasakian flags.
    for l in 0..3 {
        rep.coefficients[l] = structure_coefficient(&fam.triples[l], g, &lc);
    }
    rep.three_sasakian = match fam.flavor {
        MixedFlavor::Lorentzian => {
            rep.coefficients[0] == Some(Rational::one())
                && rep.coefficients[1] == Some(rat_i(-1))
                && rep.coefficients[2] == Some(rat_i(-1))
        }
        MixedFlavor::Riemannian => {
            (0..3).all(|l| rep.coefficients[l] == Some(Rational::one()))
        }
    };
    // phi_l versus half the stabilizer action, on homothetic metrics only.
    if g.case() == crate::sample::MetricCase::Symmetric {
        for l in 0..3 {
            let act = crate::so22::isotropy_action(l);
            let phi = &fam.triples[l].phi;
            let mut ratio: Option<Rational> = None;
            let mut ok = true;
            for a in 0..3 {
                for bidx in 0..3 {
                    let half = &act[a][bidx] / rat_i(2);
                    if half.is_zero() {
                        if !phi[a][bidx].is_zero() {
                            ok = false;
                        }
                        continue;
                    }
                    let r = &phi[a][bidx] / &half;
                    match &ratio {
                        None => ratio = Some(r),
                        Some(c) if *c == r => {}
                        _ => ok = false,
                    }
                }
            }
            rep.half_stabilizer_ratios[l] = if ok { ratio } else { None };
        }
        if let [Some(r0), Some(r1), Some(r2)] = rep.half_stabilizer_ratios.clone() {
            rep.notes.push(format!(
                "phi_l = r_l * (stabilizer action)/2 with (r0, r1, r2) = ({}, {}, {})",
                crate::rational::format_rational(&r0),
                crate::rational::format_rational(&r1),
                crate::rational::format_rational(&r2),
            ));
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::structures::{catalog_family, FamilyTag};

    fn metric(l: i64, m: i64, n: i64) -> DiagonalMetric {
        DiagonalMetric::new(rat_i(l), rat_i(m), rat_i(n)).unwrap()
    }

    fn su11() -> StructureConstants {
        StructureConstants::su11()
    }

    #[test]
    fn contact_triple_at_minus4_9_9() {
        let g = metric(-4, 9, 9);
        let tr = make_triple(ContactKind::Contact, 0, &g).unwrap();
        assert_eq!(tr.xi, vec![rat(1, 2), rat_i(0), rat_i(0)]);
        assert_eq!(tr.eta, vec![rat_i(2), rat_i(0), rat_i(0)]);
        assert_eq!(tr.epsilon, rat_i(-1));
        assert!(check_structure_axioms(&tr, &g).passed());
    }

    #[test]
    fn paracontact_triple_at_minus9_4_9() {
        let g = metric(-9, 4, 9);
        let tr = make_triple(ContactKind::Paracontact, 1, &g).unwrap();
        assert_eq!(tr.xi, vec![rat_i(0), rat(1, 2), rat_i(0)]);
        assert_eq!(tr.epsilon, rat_i(1));
        assert!(check_structure_axioms(&tr, &g).passed());
    }

    #[test]
    fn inadmissible_combinations_are_rejected() {
        let g = metric(-4, 9, 9);
        assert!(matches!(
            make_triple(ContactKind::Contact, 1, &g),
            Err(TripleError::Inadmissible(_))
        ));
        let gr = metric(4, 9, 9);
        assert!(matches!(
            make_triple(ContactKind::Paracontact, 1, &gr),
            Err(TripleError::Inadmissible(_))
        ));
        assert!(matches!(
            make_triple(ContactKind::Paracontact, 0, &metric(-4, 9, 9)),
            Err(TripleError::Inadmissible(_))
        ));
        let g_bad = metric(-3, 9, 9);
        assert!(matches!(
            make_triple(ContactKind::Contact, 0, &g_bad),
            Err(TripleError::NotPerfectSquare(_))
        ));
    }

    #[test]
    fn corrupted_phi_fails_axioms() {
        let g = metric(-4, 9, 9);
        let mut tr = make_triple(ContactKind::Contact, 0, &g).unwrap();
        tr.phi[1][2] = -tr.phi[1][2].clone();
        let rep = check_structure_axioms(&tr, &g);
        assert!(rep.failures.iter().any(|f| f.contains("phi^2")));
    }

    #[test]
    fn sasakian_coefficient_examples() {
        // alpha = sqrt|lambda| / mu = 2/9 at (-4, 9, 9).
        let g = metric(-4, 9, 9);
        let tr = make_triple(ContactKind::Contact, 0, &g).unwrap();
        let lc = koszul_connection(&su11(), &g);
        assert_eq!(structure_coefficient(&tr, &g, &lc), Some(rat(2, 9)));
        // beta = -sqrt(mu) / nu = -2/9 at (-9, 4, 9).
        let g = metric(-9, 4, 9);
        let tr = make_triple(ContactKind::Paracontact, 1, &g).unwrap();
        let lc = koszul_connection(&su11(), &g);
        assert_eq!(structure_coefficient(&tr, &g, &lc), Some(rat(-2, 9)));
        // The remaining paracontact triple: compute the coefficient on
        // -lambda = mu != nu; it comes out as -sqrt(nu)/mu.
        let g = metric(-4, 4, 9);
        let tr = make_triple(ContactKind::Paracontact, 2, &g).unwrap();
        let lc = koszul_connection(&su11(), &g);
        assert_eq!(structure_coefficient(&tr, &g, &lc), Some(rat(-3, 4)));
    }

    #[test]
    fn contact_metric_condition_matches_parameter_equation() {
        let alg = su11();
        // |lambda| = mu nu: true case (all three perfect squares).
        let g = metric(-4, 1, 4);
        let tr = make_triple(ContactKind::Contact, 0, &g).unwrap();
        assert!(check_contact_metric(&tr, &g, &alg));
        // |lambda| != mu nu: false case.
        let g = metric(-4, 9, 9);
        let tr = make_triple(ContactKind::Contact, 0, &g).unwrap();
        assert!(!check_contact_metric(&tr, &g, &alg));
        // mu = -lambda nu for the paracontact triple.
        let g = metric(-4, 36, 9);
        let tr = make_triple(ContactKind::Paracontact, 1, &g).unwrap();
        assert!(check_contact_metric(&tr, &g, &alg));
    }

    #[test]
    fn parallelism_for_the_table_pairs() {
        let alg = su11();
        // (S_lambda(t), contact 0) on -lambda != mu = nu.
        let g = metric(-4, 9, 9);
        let tr = make_triple(ContactKind::Contact, 0, &g).unwrap();
        let s = catalog_family(FamilyTag::Slambda, &g, &rat(5, 3)).unwrap().structure;
        assert!(check_parallel(&tr, &g, &alg, &s));
        // (S_mu(t), paracontact 1) on -lambda = nu != mu.
        let g = metric(-9, 4, 9);
        let tr = make_triple(ContactKind::Paracontact, 1, &g).unwrap();
        let s = catalog_family(FamilyTag::Smu, &g, &rat(-7, 5)).unwrap().structure;
        assert!(check_parallel(&tr, &g, &alg, &s));
        // Everything is parallel for S0.
        let g = metric(-4, 9, 9);
        let s0 = catalog_family(FamilyTag::S0, &g, &rat_i(0)).unwrap().structure;
        let tr = make_triple(ContactKind::Contact, 0, &g).unwrap();
        assert!(check_parallel(&tr, &g, &alg, &s0));
        // Negative: paracontact triples fail against S_lambda.
        let tr1 = make_triple(ContactKind::Paracontact, 1, &g).unwrap();
        let s = catalog_family(FamilyTag::Slambda, &g, &rat(5, 3)).unwrap().structure;
        assert!(!check_parallel(&tr1, &g, &alg, &s));
    }

    #[test]
    fn lorentzian_mixed_family_at_unit_parameters() {
        let g = metric(-1, 1, 1);
        let fam = build_mixed(MixedFlavor::Lorentzian, &g).unwrap();
        let rep = check_mixed_3(&fam, &g);
        assert!(rep.passed(), "{:?}", rep.failures);
        assert!(rep.three_sasakian);
        assert_eq!(
            rep.half_stabilizer_ratios,
            [Some(rat_i(-1)), Some(rat_i(1)), Some(rat_i(1))]
        );
    }

    #[test]
    fn lorentzian_mixed_family_off_unit_is_not_three_sasakian() {
        let g = metric(-4, 9, 9);
        let fam = build_mixed(MixedFlavor::Lorentzian, &g).unwrap();
        let rep = check_mixed_3(&fam, &g);
        assert!(rep.passed(), "{:?}", rep.failures);
        assert!(!rep.three_sasakian);
    }

    #[test]
    fn riemannian_mixed_family_is_never_three_sasakian() {
        for (l, m, n) in [(4i64, 9, 9), (1, 1, 1), (9, 4, 25)] {
            let g = metric(l, m, n);
            let fam = build_mixed(MixedFlavor::Riemannian, &g).unwrap();
            let rep = check_mixed_3(&fam, &g);
            assert!(rep.passed(), "{:?} at {:?}", rep.failures, (l, m, n));
            assert!(!rep.three_sasakian, "unexpected 3-Sasakian at {:?}", (l, m, n));
        }
    }
}
