//! Matching solver components against the catalog of families.
//!
//! Away from the homothetic case the solution set is a finite union of
//! affine pieces and the match is exact set equality. On the homothetic
//! metrics the variety also contains quadric cones; those components are
//! matched pointwise: every sampled point either lies on a catalog family or
//! is carried onto one by an explicit isometry certificate (a rotation
//! normalizing the stabilizer direction followed by a boost), verified as a
//! Lie algebra isomorphism.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Signed, Zero};

use crate::assolver::{sample_component_point, Certainty, SolutionComponent};
use crate::lie::{DiagonalMetric, StructureConstants};
use crate::linalg::{self, Matrix};
use crate::rational::{exact_sqrt, rat, rat_i, Rational};
use crate::rng::SplitMix64;
use crate::sample::MetricCase;
use crate::so22::stabilizer_coords;
use crate::structures::{
    catalog_family, families_for_case, family_affine_set, FamilyTag, HomogeneousStructure,
};
use crate::transvection::{
    build_transvection_algebra, certificate_from_frame_map, holonomy_algebra, verify_isomorphism,
};

#[derive(Clone, Debug)]
pub enum ComponentMatch {
    /// The component equals the family's affine set exactly.
    ExactFamily(FamilyTag),
    /// Sampled component: every tested point was matched.
    PointwiseMatched {
        on_family: usize,
        by_certificate: usize,
        targets: Vec<FamilyTag>,
    },
    Unmatched(String),
}

#[derive(Clone, Debug)]
pub struct MatchReport {
    pub case: MetricCase,
    pub component_matches: Vec<(usize, Certainty, ComponentMatch)>,
    /// Family coverage: every catalog family must sit inside some component.
    pub families_covered: Vec<(FamilyTag, bool)>,
    pub notes: Vec<String>,
}

impl MatchReport {
    pub fn passed(&self) -> bool {
        self.families_covered.iter().all(|(_, ok)| *ok)
            && self
                .component_matches
                .iter()
                .all(|(_, _, m)| !matches!(m, ComponentMatch::Unmatched(_)))
    }
}

/// Is the coefficient vector on some catalog family of this metric?
pub fn on_some_family(p: &[Rational], g: &DiagonalMetric) -> Option<FamilyTag> {
    for fam in families_for_case(g.case()) {
        if family_affine_set(fam, g).contains(&p.to_vec()) {
            return Some(fam);
        }
    }
    None
}

/// Matches the component list of a metric against the catalog.
pub fn match_components(
    comps: &[SolutionComponent],
    g: &DiagonalMetric,
    seed: u64,
) -> MatchReport {
    let case = g.case();
    let fams = families_for_case(case);
    let mut rng = SplitMix64::new(seed ^ 0xabcd_1234);
    let mut report = MatchReport {
        case,
        component_matches: Vec::new(),
        families_covered: Vec::new(),
        notes: Vec::new(),
    };
    // Family containment: sampled parameter values of each family must land
    // inside some component.
    for fam in &fams {
        let mut all_in = true;
        for _ in 0..4 {
            let t = rng.nonzero_rational();
            let s = catalog_family(*fam, g, &t).expect("family valid for case").structure;
            let inside = comps.iter().any(|c| c.contains_point(&s.coeffs.to_vec()));
            if !inside {
                all_in = false;
            }
        }
        report.families_covered.push((*fam, all_in));
    }
    for (idx, comp) in comps.iter().enumerate() {
        let m = match comp.certainty {
            Certainty::Certified => match_certified(comp, g),
            Certainty::Sampled => match_sampled(comp, g, &mut rng),
        };
        report.component_matches.push((idx, comp.certainty, m));
    }
    report
}

fn match_certified(comp: &SolutionComponent, g: &DiagonalMetric) -> ComponentMatch {
    for fam in families_for_case(g.case()) {
        if comp.subspace.same_set(&family_affine_set(fam, g)) {
            return ComponentMatch::ExactFamily(fam);
        }
    }
    ComponentMatch::Unmatched(format!("certified component is no family: {}", comp.describe()))
}

fn match_sampled(
    comp: &SolutionComponent,
    g: &DiagonalMetric,
    rng: &mut SplitMix64,
) -> ComponentMatch {
    let mut on_family = 0usize;
    let mut by_certificate = 0usize;
    let mut targets: Vec<FamilyTag> = Vec::new();
    let mut tested = 0usize;
    // Certificate-friendly points first: the displayed shapes at parameter
    // values whose normalizing radicals are rational.
    for cand in friendly_candidates(g) {
        if tested >= 3 {
            break;
        }
        if !comp.contains_point(&cand.coeffs) {
            continue;
        }
        if let Some(fam) = on_some_family(&cand.coeffs, g) {
            on_family += 1;
            tested += 1;
            if !targets.contains(&fam) {
                targets.push(fam);
            }
            continue;
        }
        if let Some(fam) = certify_point(&cand, g) {
            by_certificate += 1;
            tested += 1;
            if !targets.contains(&fam) {
                targets.push(fam);
            }
        }
    }
    // Generic points: accept certificates when the radicals cooperate.
    let mut attempts = 0usize;
    while tested < 3 && attempts < 24 {
        attempts += 1;
        let Some(p) = sample_component_point(comp, rng) else {
            continue;
        };
        let s = HomogeneousStructure::from_vec(&p);
        if let Some(fam) = on_some_family(&p, g) {
            on_family += 1;
            tested += 1;
            if !targets.contains(&fam) {
                targets.push(fam);
            }
            continue;
        }
        if let Some(fam) = certify_point(&s, g) {
            by_certificate += 1;
            tested += 1;
            if !targets.contains(&fam) {
                targets.push(fam);
            }
        }
    }
    if tested >= 3 {
        ComponentMatch::PointwiseMatched {
            on_family,
            by_certificate,
            targets,
        }
    } else {
        ComponentMatch::Unmatched(format!(
            "could not match enough points on: {}",
            comp.describe()
        ))
    }
}

/// Representative points of the displayed non-affine solution shapes at
/// parameter values whose certificate radicals are rational.
pub fn friendly_candidates(g: &DiagonalMetric) -> Vec<HomogeneousStructure> {
    let mut out = Vec::new();
    let ts = [rat(1, 2), rat_i(2), rat(-3, 2)];
    // Lightcone shape: |k^2 - 1| or zero must be a rational square.
    let k5 = [rat(5, 4), rat(3, 5), rat(13, 12), rat(-5, 4), rat_i(1), rat_i(-1)];
    for t in &ts {
        for k in &k5 {
            out.push(lightcone_shape_point(g, t, k));
        }
    }
    // Shape with the stabilizer in the spacelike plane: k^2 + 1 square.
    let k6 = [rat(3, 4), rat(4, 3), rat(-3, 4), rat(5, 12)];
    for t in &ts {
        for k in &k6 {
            out.push(shape6_point(g, t, k));
        }
    }
    // Shape with the stabilizer in the (timelike, second spacelike) plane:
    // the rotation is always rational; |k^2 - 1| must be square.
    for t in &ts {
        for k in &k5 {
            out.push(shape7_point(g, t, k));
        }
    }
    // Rotation shape: (rho0, sigma1) a Pythagorean pair and rho1 chosen so
    // the induced lightcone parameter has a square radicand.
    let triples = [
        (rat_i(3), rat_i(4), rat_i(4)),
        (rat_i(4), rat_i(3), rat_i(3)),
        (rat_i(3), rat(48, 25), rat_i(4)),
        (rat_i(-3), rat_i(4), rat_i(-4)),
    ];
    for (r0, r1, s1) in triples {
        out.push(rotation_shape_point(g, &r0, &r1, &s1));
    }
    out
}

/// Point of the displayed piece with `sigma0 = mu`, parameters
/// `rho1 = tau2 = t`, `rho2 = mu - t/k`, `tau1 = mu - k t`.
pub fn shape6_point(g: &DiagonalMetric, t: &Rational, k: &Rational) -> HomogeneousStructure {
    let mu = &g.mu;
    let z = Rational::zero;
    HomogeneousStructure::raw([
        z(),
        t.clone(),
        mu - &(t / k),
        mu.clone(),
        z(),
        z(),
        z(),
        mu - &(k * t),
        t.clone(),
    ])
}

/// Point of the displayed piece with `tau1 = mu`, parameters
/// `rho0 = -sigma2 = t`, `rho2 = mu - t/k`, `sigma0 = mu + k t`.
pub fn shape7_point(g: &DiagonalMetric, t: &Rational, k: &Rational) -> HomogeneousStructure {
    let mu = &g.mu;
    let z = Rational::zero;
    HomogeneousStructure::raw([
        t.clone(),
        z(),
        mu - &(t / k),
        mu + &(k * t),
        z(),
        -t.clone(),
        z(),
        mu.clone(),
        z(),
    ])
}

/// Builds and verifies an isometry certificate carrying `s` onto a catalog
/// family, for points with one-dimensional holonomy on the homothetic
/// metrics. Returns the family on success.
pub fn certify_point(s: &HomogeneousStructure, g: &DiagonalMetric) -> Option<FamilyTag> {
    let alg = StructureConstants::su11();
    let span = holonomy_algebra(&alg, g, s);
    if span.dimension() != 1 {
        return None;
    }
    let w = stabilizer_coords(&span.basis[0])?;
    // Step 1: rotate the stabilizer direction into the (U0, U1) plane.
    let mut maps: Vec<Matrix> = Vec::new();
    let plane_norm = &w[1] * &w[1] + &w[2] * &w[2];
    if plane_norm.is_zero() {
        maps.push(linalg::identity(3));
    } else {
        let r = exact_sqrt(&plane_norm)?;
        for sign in [Rational::one(), -Rational::one()] {
            let c = &w[1] / &r;
            let sgn = &w[2] / &r * &sign;
            maps.push(vec![
                vec![Rational::one(), Rational::zero(), Rational::zero()],
                vec![Rational::zero(), c.clone(), -sgn.clone()],
                vec![Rational::zero(), sgn, c.clone()],
            ]);
        }
    }
    for rot in maps {
        let w_rot = conjugated_direction(&span.basis[0], &rot)?;
        if !w_rot[2].is_zero() {
            continue;
        }
        let (w0, w1) = (w_rot[0].clone(), w_rot[1].clone());
        // Step 2: classify and boost.
        let d = &w0 * &w0 - &w1 * &w1;
        let candidates: Vec<(Matrix, Vec<FamilyTag>)> = if w1.is_zero() {
            vec![(linalg::identity(3), vec![FamilyTag::Slambda])]
        } else if w0.is_zero() {
            vec![(linalg::identity(3), vec![FamilyTag::Smu])]
        } else if d.is_zero() {
            vec![(
                linalg::identity(3),
                vec![FamilyTag::SnullMinus, FamilyTag::SnullPlus],
            )]
        } else {
            // Boost normalization: a timelike direction goes to the circle
            // generator, a spacelike one to the hyperbolic generator. The
            // hyperbolic pair must keep determinant one, so the roles of the
            // components swap between the two targets.
            let sb = exact_sqrt(&d.abs())?;
            let mut out = Vec::new();
            for sign in [Rational::one(), -Rational::one()] {
                let (ch, sh) = if d.is_positive() {
                    (&w0 / &sb, &w1 / &sb * &sign)
                } else {
                    (&w1 / &sb, &w0 / &sb * &sign)
                };
                let boost = vec![
                    vec![ch.clone(), sh.clone(), Rational::zero()],
                    vec![sh.clone(), ch.clone(), Rational::zero()],
                    vec![Rational::zero(), Rational::zero(), Rational::one()],
                ];
                let fams = if d.is_positive() {
                    vec![FamilyTag::Slambda]
                } else {
                    vec![FamilyTag::Smu]
                };
                out.push((boost, fams));
            }
            out
        };
        for (boost, fams) in candidates {
            let m = linalg::matmul(&boost, &rot);
            for fam in fams {
                for map in [m.clone(), linalg::inverse(&m)?] {
                    if let Some(found) = try_certificate(s, g, &map, fam) {
                        return Some(found);
                    }
                }
            }
        }
    }
    None
}

fn conjugated_direction(gen: &Matrix, map: &Matrix) -> Option<Vec<Rational>> {
    let inv = linalg::inverse(map)?;
    let conj = linalg::matmul(&linalg::matmul(map, gen), &inv);
    stabilizer_coords(&conj)
}

/// Fits the target family parameter from the bracket equations and verifies
/// the full certificate.
fn try_certificate(
    s: &HomogeneousStructure,
    g: &DiagonalMetric,
    map_m: &Matrix,
    fam: FamilyTag,
) -> Option<FamilyTag> {
    let alg = StructureConstants::su11();
    // The target bracket m-parts are affine in the family parameter; fit it.
    let m_parts = |t: &Rational| -> Option<[Vec<Rational>; 3]> {
        let st = catalog_family(fam, g, t).ok()?.structure;
        Some(core::array::from_fn(|p| {
            let (i, j) = [(0, 1), (1, 2), (2, 0)][p];
            let a = st.apply(g, i, j);
            let b = st.apply(g, j, i);
            (0..3).map(|k| &a[k] - &b[k]).collect()
        }))
    };
    let g0 = m_parts(&Rational::zero())?;
    let g1 = m_parts(&Rational::one())?;
    // Required values: map of the source bracket m-parts through map_m,
    // evaluated on mapped arguments. [psi X_i, psi X_j] expands bilinearly.
    let src_m = |i: usize, j: usize| -> Vec<Rational> {
        let a = s.apply(g, i, j);
        let b = s.apply(g, j, i);
        (0..3).map(|k| &a[k] - &b[k]).collect()
    };
    let mut t_fit: Option<Rational> = None;
    for (p, (i, j)) in [(0usize, 1usize), (1, 2), (2, 0)].into_iter().enumerate() {
        // psi([X_i, X_j]_m) with psi linear on the frame.
        let mut lhs = vec![Rational::zero(); 3];
        // [psi X_i, psi X_j]_m in the target: bilinear expansion over frame
        // pairs of the target-family brackets.
        let mut rhs0 = vec![Rational::zero(); 3];
        let mut rhs1 = vec![Rational::zero(); 3];
        for a in 0..3 {
            for bidx in 0..3 {
                let cm = &map_m[a][i] * &map_m[bidx][j];
                if cm.is_zero() {
                    continue;
                }
                // Target brackets are antisymmetric; diagonal pairs vanish.
                let (sgn, pair) = match (a, bidx) {
                    (0, 1) => (rat_i(1), Some(0)),
                    (1, 0) => (rat_i(-1), Some(0)),
                    (1, 2) => (rat_i(1), Some(1)),
                    (2, 1) => (rat_i(-1), Some(1)),
                    (2, 0) => (rat_i(1), Some(2)),
                    (0, 2) => (rat_i(-1), Some(2)),
                    _ => (rat_i(0), None),
                };
                if let Some(q) = pair {
                    for k in 0..3 {
                        rhs0[k] = &rhs0[k] + &(&cm * &sgn * &g0[q][k]);
                        rhs1[k] = &rhs1[k] + &(&cm * &sgn * &g1[q][k]);
                    }
                }
            }
        }
        let sm = src_m(i, j);
        for k in 0..3 {
            lhs[k] = (0..3)
                .map(|x| &map_m[k][x] * &sm[x])
                .fold(Rational::zero(), |s2, t2| s2 + t2);
        }
        // lhs = rhs0 + t (rhs1 - rhs0) componentwise.
        for k in 0..3 {
            let slope = &rhs1[k] - &rhs0[k];
            let off = &lhs[k] - &rhs0[k];
            if slope.is_zero() {
                if !off.is_zero() {
                    return None;
                }
            } else {
                let t = off / slope;
                match &t_fit {
                    None => t_fit = Some(t),
                    Some(v) if *v == t => {}
                    _ => return None,
                }
            }
        }
        let _ = p;
    }
    let t = t_fit?;
    let entry = catalog_family(fam, g, &t).ok()?;
    if entry.degenerate_at.is_some() {
        return None;
    }
    let target_s = entry.structure;
    let tgt = build_transvection_algebra(&alg, g, &target_s);
    let tgt_span = holonomy_algebra(&alg, g, &target_s);
    let src = build_transvection_algebra(&alg, g, s);
    let src_span = holonomy_algebra(&alg, g, s);
    let cert = certificate_from_frame_map(&src, &src_span, &tgt, &tgt_span, map_m, "normalizer").ok()?;
    if verify_isomorphism(&cert).is_ok() {
        Some(fam)
    } else {
        None
    }
}

/// The shape parameters of the displayed two-parameter cone through `S` on a
/// homothetic metric, when `S` has that shape: returns `(t, k)` with
/// `sigma1 = t`, `k = sigma1/(mu - tau1)`.
pub fn lightcone_shape_params(s: &HomogeneousStructure, g: &DiagonalMetric) -> Option<(Rational, Rational)> {
    let mu = &g.mu;
    let c = &s.coeffs;
    let (rho0, rho1, rho2) = (&c[0], &c[1], &c[2]);
    let (sigma0, sigma1, sigma2) = (&c[3], &c[4], &c[5]);
    let (tau0, tau1, tau2) = (&c[6], &c[7], &c[8]);
    if rho2 != mu || !rho0.is_zero() || !rho1.is_zero() || !sigma2.is_zero() || !tau2.is_zero() {
        return None;
    }
    if sigma1.is_zero() || *tau0 != -sigma1.clone() || tau1 == mu {
        return None;
    }
    let k = sigma1 / &(mu - tau1);
    if (mu - sigma0) != -(&k * sigma1) {
        return None;
    }
    Some((sigma1.clone(), k))
}

/// Point of the displayed cone at parameters `(t, k)`.
pub fn lightcone_shape_point(g: &DiagonalMetric, t: &Rational, k: &Rational) -> HomogeneousStructure {
    let mu = &g.mu;
    let z = Rational::zero;
    HomogeneousStructure::raw([
        z(),
        z(),
        mu.clone(),
        mu + &(k * t),
        t.clone(),
        z(),
        -t.clone(),
        mu - &(t / k),
        z(),
    ])
}

/// Point of the displayed three-parameter piece at `(rho0, rho1, sigma1)`.
pub fn rotation_shape_point(
    g: &DiagonalMetric,
    rho0: &Rational,
    rho1: &Rational,
    sigma1: &Rational,
) -> HomogeneousStructure {
    let mu = &g.mu;
    HomogeneousStructure::raw([
        rho0.clone(),
        rho1.clone(),
        mu - &(&(rho0 * rho1) / sigma1),
        mu + &(&(rho0 * sigma1) / rho1),
        sigma1.clone(),
        -rho0.clone(),
        -sigma1.clone(),
        mu - &(&(rho1 * sigma1) / rho0),
        rho1.clone(),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assolver::{branch_solve, build_system, linear_stage};
    use crate::rational::rat;

    fn metric(l: i64, m: i64, n: i64) -> DiagonalMetric {
        DiagonalMetric::new(rat_i(l), rat_i(m), rat_i(n)).unwrap()
    }

    fn su11() -> StructureConstants {
        StructureConstants::su11()
    }

    #[test]
    fn timelike_match_is_exact() {
        let g = metric(-2, 1, 1);
        let sys = build_system(&su11(), &g);
        let comps = branch_solve(&sys, &linear_stage(&sys)).unwrap();
        let rep = match_components(&comps, &g, 7);
        assert!(rep.passed(), "{:?}", rep);
        assert!(rep
            .component_matches
            .iter()
            .any(|(_, _, m)| matches!(m, ComponentMatch::ExactFamily(FamilyTag::Slambda))));
    }

    #[test]
    fn generic_match_is_exact() {
        let g = metric(1, 2, 4);
        let sys = build_system(&su11(), &g);
        let comps = branch_solve(&sys, &linear_stage(&sys)).unwrap();
        let rep = match_components(&comps, &g, 7);
        assert!(rep.passed(), "{:?}", rep);
    }

    #[test]
    fn lightcone_points_certify_to_boost_targets() {
        let g = metric(-1, 1, 1);
        // k = 5/4: k^2 - 1 = 9/16, timelike stabilizer, boost to the
        // one-parameter timelike family.
        let s = lightcone_shape_point(&g, &rat(1, 2), &rat(5, 4));
        assert_eq!(certify_point(&s, &g), Some(FamilyTag::Slambda));
        // k = 3/5: 1 - k^2 = 16/25, spacelike stabilizer.
        let s = lightcone_shape_point(&g, &rat(2, 3), &rat(3, 5));
        assert_eq!(certify_point(&s, &g), Some(FamilyTag::Smu));
    }

    #[test]
    fn lightcone_null_points_lie_on_null_families() {
        let g = metric(-1, 1, 1);
        for (k, fam) in [(rat_i(1), FamilyTag::SnullMinus), (rat_i(-1), FamilyTag::SnullPlus)] {
            let s = lightcone_shape_point(&g, &rat(3, 4), &k);
            assert_eq!(on_some_family(&s.coeffs, &g), Some(fam));
        }
    }

    #[test]
    fn rotation_shape_certifies() {
        let g = metric(-1, 1, 1);
        // (rho0, sigma1) = (3, 4): sqrt(rho0^2 + sigma1^2) = 5 rational, and
        // rho1 = 4 makes the induced lightcone parameter 3/5.
        let s = rotation_shape_point(&g, &rat_i(3), &rat_i(4), &rat_i(4));
        // This point solves the full system.
        let sys = build_system(&su11(), &g);
        assert!(sys.residual_is_zero(&s.coeffs));
        let fam = certify_point(&s, &g);
        assert!(fam.is_some(), "rotation-shape point must certify");
    }

    #[test]
    fn symmetric_match_passes_with_certificates() {
        let g = metric(-1, 1, 1);
        let sys = build_system(&su11(), &g);
        let comps = branch_solve(&sys, &linear_stage(&sys)).unwrap();
        let rep = match_components(&comps, &g, 11);
        assert!(rep.passed(), "{:?}", rep);
        // At least one sampled component matched pointwise.
        assert!(rep
            .component_matches
            .iter()
            .any(|(_, c, m)| *c == Certainty::Sampled
                && matches!(m, ComponentMatch::PointwiseMatched { .. })));
    }
}
