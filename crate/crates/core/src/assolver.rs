//! The parallelism system for constant-coefficient structure tensors and its
//! exact branch-and-solve decomposition.
//!
//! For a fixed metric the conditions on the nine structure coefficients are:
//! metricity of `nabla - S` (holds identically for the wedge ansatz, asserted
//! at build time), parallel curvature (affine-linear equations), and parallel
//! structure tensor (polynomials of total degree <= 2). The solver reduces
//! the system exactly: affine equations shrink the ambient affine subspace,
//! quadratics that split into affine factors branch the search, definite
//! quadratics force their kernel, and anything irreducible is kept as the
//! residual of a sampled component.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Zero;

use crate::lie::{
    covariant_derivative_0q, curvature, koszul_connection, nabla_0q_generic, nabla_1q_generic,
    DiagonalMetric, StructureConstants,
};
use crate::linalg::{self, AffineSubspace};
use crate::poly::{definite_reduction, factor_affine, render, DefiniteOutcome, FactorResult, MultiPoly};
use crate::rational::Rational;
use crate::rng::SplitMix64;
use crate::structures::{HomogeneousStructure, COEFF_NAMES};
use crate::tensor::Tensor;

const NVARS: usize = 9;

/// The full system for one metric: affine rows over the nine coefficients
/// plus the quadratic conditions.
#[derive(Clone, Debug)]
pub struct ParallelismSystem {
    pub metric: DiagonalMetric,
    pub linear_rows: Vec<Vec<Rational>>,
    pub linear_rhs: Vec<Rational>,
    pub quadratics: Vec<MultiPoly>,
}

/// Symbolic `(0,3)` structure tensor with variable coefficients.
fn symbolic_structure() -> Tensor<MultiPoly> {
    use crate::tensor::wedge2;
    Tensor::from_fn(3, |idx| {
        let (i, j, k) = (idx[0], idx[1], idx[2]);
        let mut p = MultiPoly::zero_poly(NVARS);
        for (block, (a, b)) in [(0, 1), (1, 2), (2, 0)].iter().enumerate() {
            let w = wedge2(*a, *b, j, k);
            if w != 0 {
                let var = MultiPoly::var(NVARS, block * 3 + i);
                p = &p + &var.scale(&crate::rational::rat_i(w));
            }
        }
        p
    })
}

/// Builds the parallelism system for `g`.
pub fn build_system(alg: &StructureConstants, g: &DiagonalMetric) -> ParallelismSystem {
    let lc = koszul_connection(alg, g);
    let r = curvature(&lc, alg);

    let s03 = symbolic_structure();
    // gamma~^k_ij = gamma^k_ij - S(X_i, X_j, X_k)/g_kk
    let gamma_tilde: Tensor<MultiPoly> = Tensor::from_fn(3, |idx| {
        let (k, i, j) = (idx[0], idx[1], idx[2]);
        let c = MultiPoly::constant(NVARS, lc.gamma.get(&[k, i, j]).clone());
        let inv = Rational::from_integer(1.into()) / g.diag(k);
        &c - &s03.get(&[i, j, k]).scale(&inv)
    });

    // Metricity of nabla - S holds identically for the wedge ansatz.
    let g_poly = g.as_tensor().map(|v| MultiPoly::constant(NVARS, v.clone()));
    let nabla_g = nabla_0q_generic(&gamma_tilde, &g_poly);
    assert!(nabla_g.is_zero(), "wedge ansatz must be metric identically");

    // Parallel curvature: affine-linear in the coefficients.
    let r_poly = r.r.map(|v| MultiPoly::constant(NVARS, v.clone()));
    let nabla_r = nabla_1q_generic(&gamma_tilde, &r_poly);
    let mut linear_rows = Vec::new();
    let mut linear_rhs = Vec::new();
    for p in nabla_r.entries() {
        if p.is_zero() {
            continue;
        }
        let (grad, cst) = p
            .as_affine()
            .expect("parallel-curvature equations are affine in the coefficients");
        if grad.iter().all(|x| x.is_zero()) {
            assert!(cst.is_zero(), "inconsistent constant equation");
            continue;
        }
        linear_rows.push(grad);
        linear_rhs.push(-cst);
    }

    // Parallel structure tensor: degree <= 2.
    let nabla_s = nabla_0q_generic(&gamma_tilde, &s03);
    let mut quadratics: Vec<MultiPoly> = Vec::new();
    for p in nabla_s.entries() {
        if p.is_zero() {
            continue;
        }
        assert!(p.total_degree() <= 2);
        let m = p.monic();
        if !quadratics.contains(&m) {
            quadratics.push(m);
        }
    }
    quadratics.sort();
    ParallelismSystem {
        metric: g.clone(),
        linear_rows,
        linear_rhs,
        quadratics,
    }
}

impl ParallelismSystem {
    /// Exact residual of the full system at a coefficient vector.
    pub fn residual_is_zero(&self, coeffs: &[Rational]) -> bool {
        assert_eq!(coeffs.len(), NVARS);
        for (row, rhs) in self.linear_rows.iter().zip(&self.linear_rhs) {
            if crate::rational::dot(row, coeffs) != *rhs {
                return false;
            }
        }
        self.quadratics.iter().all(|q| q.eval(coeffs).is_zero())
    }

    /// Direct evaluation: `nabla~ R` and `nabla~ S` for a concrete structure,
    /// bypassing the symbolic build (used as an independent oracle in tests).
    pub fn residual_tensors(
        alg: &StructureConstants,
        g: &DiagonalMetric,
        s: &HomogeneousStructure,
    ) -> (Tensor<Rational>, Tensor<Rational>, Tensor<Rational>) {
        let lc = koszul_connection(alg, g);
        let r = curvature(&lc, alg);
        let tilde = s.canonical_connection(&lc, g);
        let ng = covariant_derivative_0q(&tilde, &g.as_tensor());
        let nr = crate::lie::covariant_derivative_1q(&tilde, &r.r);
        let ns = covariant_derivative_0q(&tilde, &s.as_0_3());
        (ng, nr, ns)
    }
}

/// Exact affine solution set of the linear stage. The empty system yields the
/// whole coefficient space.
pub fn linear_stage(sys: &ParallelismSystem) -> AffineSubspace {
    if sys.linear_rows.is_empty() {
        return AffineSubspace {
            base: vec![Rational::zero(); NVARS],
            directions: (0..NVARS)
                .map(|i| {
                    let mut d = vec![Rational::zero(); NVARS];
                    d[i] = Rational::from_integer(1.into());
                    d
                })
                .collect(),
        }
        .canonical();
    }
    linalg::solve_affine(&sys.linear_rows, &sys.linear_rhs)
        .expect("parallel-curvature stage is always feasible (S0 solves it)")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certainty {
    /// The component is exactly its affine hull.
    Certified,
    /// Residual quadrics remain; treated by exact sampling.
    Sampled,
}

/// One irreducible piece of the solution set.
#[derive(Clone, Debug)]
pub struct SolutionComponent {
    /// Affine hull in coefficient space, canonical form.
    pub subspace: AffineSubspace,
    /// Residual equations in the hull's free parameters (empty iff certified).
    pub residuals: Vec<MultiPoly>,
    /// Factor choices that led here, for audit.
    pub branch_trace: Vec<String>,
    pub certainty: Certainty,
}

impl SolutionComponent {
    /// Free-parameter names: each canonical direction has a leading pivot
    /// coordinate; the parameter inherits its name.
    pub fn param_names(&self) -> Vec<&'static str> {
        self.subspace
            .directions
            .iter()
            .map(|d| {
                let lead = d.iter().position(|x| !x.is_zero()).unwrap();
                COEFF_NAMES[lead]
            })
            .collect()
    }

    pub fn describe(&self) -> String {
        let names = self.param_names();
        let mut s = format!(
            "dim {} hull, {} residual(s)",
            self.subspace.dim(),
            self.residuals.len()
        );
        if !self.residuals.is_empty() {
            s.push_str(": ");
            let rendered: Vec<String> = self
                .residuals
                .iter()
                .map(|r| render(r, &names))
                .collect();
            s.push_str(&rendered.join("; "));
        }
        s
    }

    /// Exact membership of a global coefficient vector in this component.
    pub fn contains_point(&self, p: &[Rational]) -> bool {
        match params_of_point(&self.subspace, p) {
            None => false,
            Some(u) => self.residuals.iter().all(|r| r.eval(&u).is_zero()),
        }
    }
}

/// Free coefficients of `p` in the canonical parametrization of `sub`, if
/// `p` lies on the hull.
pub fn params_of_point(sub: &AffineSubspace, p: &[Rational]) -> Option<Vec<Rational>> {
    let u: Vec<Rational> = sub
        .directions
        .iter()
        .map(|d| {
            let lead = d.iter().position(|x| !x.is_zero()).unwrap();
            (&p[lead] - &sub.base[lead]) / &d[lead]
        })
        .collect();
    if sub.at(&u) == p.to_vec() {
        Some(u)
    } else {
        None
    }
}

/// Affine coordinate polynomials of a parametrized subspace: nine affine
/// polys in `dim` free variables.
fn coordinate_polys(sub: &AffineSubspace) -> Vec<MultiPoly> {
    let d = sub.dim();
    (0..NVARS)
        .map(|c| {
            let mut p = MultiPoly::constant(d, sub.base[c].clone());
            for (j, dir) in sub.directions.iter().enumerate() {
                if !dir[c].is_zero() {
                    p = &p + &MultiPoly::var(d, j).scale(&dir[c]);
                }
            }
            p
        })
        .collect()
}

struct BranchCtx {
    components: Vec<SolutionComponent>,
    max_depth: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub enum SolveError {
    DepthExceeded(String),
}

/// Decomposes the solution set of `sys` restricted to `sub` (normally the
/// linear-stage output) into components.
pub fn branch_solve(
    sys: &ParallelismSystem,
    sub: &AffineSubspace,
) -> Result<Vec<SolutionComponent>, SolveError> {
    let params = coordinate_polys(sub);
    let eqs: Vec<MultiPoly> = sys
        .quadratics
        .iter()
        .map(|q| q.compose(&params))
        .collect();
    let mut ctx = BranchCtx {
        components: Vec::new(),
        max_depth: 32,
    };
    descend(sys, sub.clone(), eqs, Vec::new(), 0, &mut ctx)?;
    Ok(dedup_components(ctx.components))
}

fn descend(
    sys: &ParallelismSystem,
    sub: AffineSubspace,
    eqs: Vec<MultiPoly>,
    trace: Vec<String>,
    depth: usize,
    ctx: &mut BranchCtx,
) -> Result<(), SolveError> {
    if depth > ctx.max_depth {
        return Err(SolveError::DepthExceeded(trace.join(" / ")));
    }
    let mut affine: Vec<MultiPoly> = Vec::new();
    let mut quads: Vec<MultiPoly> = Vec::new();
    for e in eqs {
        if e.is_zero() {
            continue;
        }
        if e.is_constant() {
            return Ok(()); // contradictory branch, no solutions here
        }
        if e.total_degree() <= 1 {
            affine.push(e);
        } else {
            let m = e.monic();
            if !quads.contains(&m) {
                quads.push(m);
            }
        }
    }

    if !affine.is_empty() {
        // Cut the subspace by all affine equations at once and push the
        // quadratics down to the smaller parameter space.
        let rows: Vec<Vec<Rational>> = affine
            .iter()
            .map(|a| a.as_affine().unwrap().0)
            .collect();
        let rhs: Vec<Rational> = affine
            .iter()
            .map(|a| -a.as_affine().unwrap().1)
            .collect();
        let inner = match linalg::solve_affine(&rows, &rhs) {
            Ok(s) => s,
            Err(_) => return Ok(()), // contradictory branch
        };
        let new_sub = AffineSubspace {
            base: sub.at(&inner.base),
            directions: inner
                .directions
                .iter()
                .map(|w| {
                    let mut v = vec![Rational::zero(); NVARS];
                    for (i, c) in w.iter().enumerate() {
                        for (vi, di) in v.iter_mut().zip(&sub.directions[i]) {
                            *vi = &*vi + &(c * di);
                        }
                    }
                    v
                })
                .collect(),
        }
        .canonical();
        let inner_polys: Vec<MultiPoly> = {
            // Express old parameters in the new ones: u = inner.base + inner.D w.
            let d_new = new_sub.dim();
            (0..sub.dim())
                .map(|i| {
                    let mut p = MultiPoly::constant(d_new, inner.base[i].clone());
                    for (j, w) in inner.directions.iter().enumerate() {
                        if !w[i].is_zero() {
                            p = &p + &MultiPoly::var(d_new, j).scale(&w[i]);
                        }
                    }
                    p
                })
                .collect()
        };
        // The canonical form of new_sub may reorder parameters relative to the
        // raw composition, so recompute the quadratics from scratch instead.
        let _ = inner_polys;
        let params = coordinate_polys(&new_sub);
        let full: Vec<MultiPoly> = sys
            .quadratics
            .iter()
            .map(|q| q.compose(&params))
            .collect();
        return descend(sys, new_sub, full, trace, depth + 1, ctx);
    }

    if quads.is_empty() {
        ctx.components.push(SolutionComponent {
            subspace: sub,
            residuals: Vec::new(),
            branch_trace: trace,
            certainty: Certainty::Certified,
        });
        return Ok(());
    }

    // Definiteness: a one-signed quadratic with no linear part forces its
    // kernel (or kills the branch).
    for q in &quads {
        match definite_reduction(q) {
            DefiniteOutcome::Unsatisfiable => return Ok(()),
            DefiniteOutcome::ForcesZero(forms) => {
                let mut rest: Vec<MultiPoly> = quads.iter().filter(|p| *p != q).cloned().collect();
                rest.extend(forms);
                let mut tr = trace.clone();
                tr.push(String::from("definite"));
                return descend(sys, sub, rest, tr, depth + 1, ctx);
            }
            DefiniteOutcome::Indefinite => {}
        }
    }

    // Branch on the first quadratic that splits into affine factors.
    for (qi, q) in quads.iter().enumerate() {
        if let FactorResult::Split { factors, .. } = factor_affine(q) {
            for (fi, f) in factors.iter().enumerate() {
                let mut rest: Vec<MultiPoly> =
                    quads.iter().enumerate().filter(|(i, _)| *i != qi).map(|(_, p)| p.clone()).collect();
                rest.push(f.clone());
                let mut tr = trace.clone();
                tr.push(format!("factor{}:{}", fi, qi));
                descend(sys, sub.clone(), rest, tr, depth + 1, ctx)?;
            }
            return Ok(());
        }
    }

    // No single equation splits. The span of the system is still fair game:
    // eliminate a shared monomial between two equations and test the
    // combination for factorability or definiteness.
    for cand in combination_candidates(&quads) {
        match definite_reduction(&cand) {
            DefiniteOutcome::Unsatisfiable => return Ok(()),
            DefiniteOutcome::ForcesZero(forms) => {
                let mut rest = quads.clone();
                rest.extend(forms);
                let mut tr = trace.clone();
                tr.push(String::from("definite-combo"));
                return descend(sys, sub, rest, tr, depth + 1, ctx);
            }
            DefiniteOutcome::Indefinite => {}
        }
        if let FactorResult::Split { factors, .. } = factor_affine(&cand) {
            for (fi, f) in factors.iter().enumerate() {
                let mut rest = quads.clone();
                rest.push(f.clone());
                let mut tr = trace.clone();
                tr.push(format!("combo-factor{}", fi));
                descend(sys, sub.clone(), rest, tr, depth + 1, ctx)?;
            }
            return Ok(());
        }
    }

    // Nothing splits: a sampled component with explicit residual quadrics.
    let mut residuals = quads;
    residuals.sort();
    ctx.components.push(SolutionComponent {
        subspace: sub,
        residuals,
        branch_trace: trace,
        certainty: Certainty::Sampled,
    });
    Ok(())
}

/// Pairwise span combinations that cancel a shared monomial; the clean case
/// splits of the solution variety appear as factorable elements of the span
/// rather than as single tensor components.
fn combination_candidates(quads: &[MultiPoly]) -> Vec<MultiPoly> {
    let mut out: Vec<MultiPoly> = Vec::new();
    for (i, p) in quads.iter().enumerate() {
        for q in quads.iter().skip(i + 1) {
            for (e, cp) in p.terms() {
                let cq = q.coeff(e);
                if cq.is_zero() {
                    continue;
                }
                let cand = &p.scale(&cq) - &q.scale(cp);
                if cand.is_zero() || cand.total_degree() < 2 {
                    continue;
                }
                let m = cand.monic();
                if !out.contains(&m) && !quads.contains(&m) {
                    out.push(m);
                }
            }
        }
    }
    out
}

/// True when every point of `a` lies in the variety of `b` (exact check:
/// hull containment plus identical vanishing of `b`'s residuals on `a`).
fn absorbed_by(a: &SolutionComponent, b: &SolutionComponent) -> bool {
    if !a.subspace.subset_of(&b.subspace) {
        return false;
    }
    if b.residuals.is_empty() {
        return true;
    }
    if !a.residuals.is_empty() {
        // Only absorb a constrained component into an identical one.
        return a.subspace == b.subspace && a.residuals == b.residuals;
    }
    // a is an affine set: push b's residuals onto a's parameters.
    let a_coords = coordinate_polys(&a.subspace);
    let b_params: Vec<MultiPoly> = b
        .subspace
        .directions
        .iter()
        .map(|d| {
            let lead = d.iter().position(|x| !x.is_zero()).unwrap();
            let shift = MultiPoly::constant(a.subspace.dim(), -b.subspace.base[lead].clone());
            (&a_coords[lead] + &shift).scale(&(Rational::from_integer(1.into()) / &d[lead]))
        })
        .collect();
    b.residuals
        .iter()
        .all(|r| r.compose(&b_params).is_zero())
}

fn dedup_components(comps: Vec<SolutionComponent>) -> Vec<SolutionComponent> {
    let mut kept: Vec<SolutionComponent> = Vec::new();
    for c in comps {
        if kept.iter().any(|k| absorbed_by(&c, k)) {
            continue;
        }
        kept.retain(|k| !absorbed_by(k, &c));
        kept.push(c);
    }
    // Deterministic order: by dimension, then by canonical data.
    kept.sort_by(|a, b| {
        (a.subspace.dim(), a.residuals.len())
            .cmp(&(b.subspace.dim(), b.residuals.len()))
            .then_with(|| format!("{:?}", a.subspace).cmp(&format!("{:?}", b.subspace)))
    });
    kept
}

/// Exact rational point on a component, honoring its residual quadrics.
///
/// Squared variables are drawn from a Pythagorean-friendly pool so that
/// downstream certificate constructions meet rational square roots whenever
/// possible; everything returned is verified against the residuals exactly.
pub fn sample_component_point(
    comp: &SolutionComponent,
    rng: &mut SplitMix64,
) -> Option<Vec<Rational>> {
    let d = comp.subspace.dim();
    if comp.residuals.is_empty() {
        let coeffs: Vec<Rational> = (0..d).map(|_| rng.rational()).collect();
        return Some(comp.subspace.at(&coeffs));
    }
    const PYTH: [(i64, i64); 8] = [(3, 1), (4, 1), (-3, 1), (5, 1), (-4, 1), (12, 1), (-5, 1), (8, 1)];
    'attempt: for _ in 0..128 {
        let mut eqs = comp.residuals.clone();
        let mut value: Vec<Option<Rational>> = vec![None; d];
        loop {
            eqs.retain(|e| !e.is_zero());
            if eqs.iter().any(|e| e.is_constant()) {
                continue 'attempt;
            }
            if eqs.is_empty() {
                break;
            }
            // Solve any equation now affine in a single remaining variable.
            let mut solved = false;
            for e in &eqs {
                if e.total_degree() != 1 {
                    continue;
                }
                let (grad, cst) = e.as_affine().unwrap();
                let live: Vec<usize> = (0..d).filter(|&i| !grad[i].is_zero()).collect();
                if live.len() == 1 {
                    let i = live[0];
                    let v = -cst / &grad[i];
                    value[i] = Some(v.clone());
                    eqs = eqs.iter().map(|p| p.substitute_value(i, &v)).collect();
                    solved = true;
                    break;
                }
            }
            if solved {
                continue;
            }
            // Assign a variable: prefer one appearing squared.
            let squared = (0..d).find(|&i| value[i].is_none() && eqs.iter().any(|e| e.degree_in(i) >= 2));
            let target = squared.or_else(|| {
                (0..d).find(|&i| value[i].is_none() && eqs.iter().any(|e| e.degree_in(i) >= 1))
            });
            let Some(i) = target else { continue 'attempt };
            let v = if squared == Some(i) {
                let (p, q) = PYTH[rng.below(PYTH.len() as u64) as usize];
                crate::rational::rat(p, q)
            } else {
                rng.nonzero_rational()
            };
            value[i] = Some(v.clone());
            eqs = eqs.iter().map(|p| p.substitute_value(i, &v)).collect();
        }
        let coeffs: Vec<Rational> = value
            .into_iter()
            .map(|v| v.unwrap_or_else(|| rng.rational()))
            .collect();
        if comp.residuals.iter().all(|r| r.eval(&coeffs).is_zero()) {
            return Some(comp.subspace.at(&coeffs));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_i};
    use crate::sample::{sample_params, MetricCase};
    use crate::structures::{catalog_family, families_for_case, family_affine_set, FamilyTag};

    fn metric(l: i64, m: i64, n: i64) -> DiagonalMetric {
        DiagonalMetric::new(rat_i(l), rat_i(m), rat_i(n)).unwrap()
    }

    fn su11() -> StructureConstants {
        StructureConstants::su11()
    }

    #[test]
    fn timelike_linear_stage_pins_rho2_tau1() {
        let g = metric(-2, 1, 1);
        let sys = build_system(&su11(), &g);
        let sub = linear_stage(&sys);
        assert_eq!(sub.dim(), 3);
        // rho2 = tau1 = -lambda = 2, rho0 = rho1 = tau0 = tau2 = 0.
        for u in [
            vec![rat_i(0), rat_i(0), rat_i(0)],
            vec![rat_i(5), rat(-1, 3), rat_i(2)],
        ] {
            let p = sub.at(&u);
            assert_eq!(p[2], rat_i(2));
            assert_eq!(p[7], rat_i(2));
            for i in [0usize, 1, 6, 8] {
                assert!(p[i].is_zero());
            }
        }
    }

    #[test]
    fn generic_linear_stage_pins_everything() {
        let g = metric(1, 2, 4);
        let sys = build_system(&su11(), &g);
        let sub = linear_stage(&sys);
        assert_eq!(sub.dim(), 0);
        // S0 with (rho2, sigma0, tau1) = (-3, 7, 1).
        assert_eq!(sub.base[2], rat_i(-3));
        assert_eq!(sub.base[3], rat_i(7));
        assert_eq!(sub.base[7], rat_i(1));
    }

    #[test]
    fn symmetric_linear_stage_is_vacuous() {
        let g = metric(-1, 1, 1);
        let sys = build_system(&su11(), &g);
        assert!(sys.linear_rows.is_empty());
        assert_eq!(linear_stage(&sys).dim(), 9);
    }

    #[test]
    fn catalog_structures_zero_the_system() {
        for case in crate::sample::ALL_CASES {
            for (l, m, n) in sample_params(case, 51, 4, false) {
                let g = DiagonalMetric::new(l, m, n).unwrap();
                let sys = build_system(&su11(), &g);
                let mut rng = SplitMix64::new(5);
                for fam in families_for_case(case) {
                    for _ in 0..4 {
                        let t = rng.rational();
                        let e = catalog_family(fam, &g, &t).unwrap();
                        assert!(
                            sys.residual_is_zero(&e.structure.coeffs),
                            "family {:?} fails the system at {:?}",
                            fam,
                            g
                        );
                        // Cross-check against the direct tensor residuals.
                        let (ng, nr, ns) =
                            ParallelismSystem::residual_tensors(&su11(), &g, &e.structure);
                        assert!(ng.is_zero() && nr.is_zero() && ns.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn timelike_branch_solve_finds_the_line() {
        let g = metric(-2, 1, 1);
        let sys = build_system(&su11(), &g);
        let comps = branch_solve(&sys, &linear_stage(&sys)).unwrap();
        assert_eq!(comps.len(), 1);
        let c = &comps[0];
        assert_eq!(c.certainty, Certainty::Certified);
        assert!(c.subspace.same_set(&family_affine_set(FamilyTag::Slambda, &g)));
    }

    #[test]
    fn generic_branch_solve_finds_the_point() {
        let g = metric(1, 2, 4);
        let sys = build_system(&su11(), &g);
        let comps = branch_solve(&sys, &linear_stage(&sys)).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].subspace.dim(), 0);
        assert!(comps[0]
            .subspace
            .same_set(&family_affine_set(FamilyTag::S0, &g)));
    }

    #[test]
    fn components_satisfy_system_at_sampled_points() {
        let mut rng = SplitMix64::new(17);
        for (g, seed) in [
            (metric(-2, 1, 1), 1u64),
            (metric(1, 2, 4), 2),
            (metric(-1, 1, 1), 3),
        ] {
            let _ = seed;
            let sys = build_system(&su11(), &g);
            let comps = branch_solve(&sys, &linear_stage(&sys)).unwrap();
            for c in &comps {
                if c.certainty == Certainty::Certified {
                    assert!(sys.residual_is_zero(&c.subspace.base));
                }
                for _ in 0..3 {
                    let p = sample_component_point(c, &mut rng).expect("component has points");
                    assert!(sys.residual_is_zero(&p), "bad point on {}", c.describe());
                }
            }
        }
    }

    #[test]
    fn symmetric_components_cover_all_families() {
        let g = metric(-1, 1, 1);
        let sys = build_system(&su11(), &g);
        let comps = branch_solve(&sys, &linear_stage(&sys)).unwrap();
        // Every catalog family line is contained in some component.
        let mut rng = SplitMix64::new(23);
        for fam in families_for_case(MetricCase::Symmetric) {
            for _ in 0..4 {
                let t = rng.nonzero_rational();
                let s = catalog_family(fam, &g, &t).unwrap().structure;
                let inside = comps.iter().any(|c| c.contains_point(&s.coeffs.to_vec()));
                assert!(inside, "family {:?} at t={:?} not covered", fam, t);
            }
        }
        // The decomposition is a small set of quadric pieces; the volume
        // line sits inside the largest one.
        assert!(comps.len() >= 3);
        assert!(comps.iter().any(|c| c.certainty == Certainty::Sampled));
        let vol = family_affine_set(FamilyTag::Svol, &g);
        let mut rng2 = SplitMix64::new(4);
        for _ in 0..3 {
            let t = rng2.nonzero_rational();
            let p = vol.at(&[t]);
            assert!(comps.iter().any(|c| c.contains_point(&p)));
        }
    }
}
