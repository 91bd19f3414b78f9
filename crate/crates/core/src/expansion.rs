//! Killing frames of the transitive two-sided actions, the closed-form
//! expansion of the left-invariant frame in those Killing frames, and the
//! reconstruction of the canonical connection at the base point from the
//! action alone.
//!
//! Coefficient functions are exact rational functions of the four real
//! coordinates `(Re z1, Im z1, Re z2, Im z2)`; derivatives are taken
//! symbolically, so the comparison with `nabla - S` is zero-tolerance.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::group::{killing_field, su11_matrix, x_basis, GroupPoint, Mat2, Side};
use crate::lie::{koszul_connection, DiagonalMetric, StructureConstants};
use crate::linalg::{self, Vector};
use crate::poly::MultiPoly;
use crate::rational::{rat_i, Rational};
use crate::structures::{catalog_family, FamilyTag};
use crate::tensor::Tensor;

const NV: usize = 4; // x1, y1, x2, y2

/// Polynomial-valued complex number over the four real coordinates.
#[derive(Clone, Debug, PartialEq)]
struct CPoly {
    re: MultiPoly,
    im: MultiPoly,
}

impl CPoly {
    fn z1() -> Self {
        CPoly {
            re: MultiPoly::var(NV, 0),
            im: MultiPoly::var(NV, 1),
        }
    }
    fn z2() -> Self {
        CPoly {
            re: MultiPoly::var(NV, 2),
            im: MultiPoly::var(NV, 3),
        }
    }
    fn conj(&self) -> Self {
        CPoly {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }
    fn mul(&self, o: &Self) -> Self {
        CPoly {
            re: &(&self.re * &o.re) - &(&self.im * &o.im),
            im: &(&self.re * &o.im) + &(&self.im * &o.re),
        }
    }
    fn norm_sq(&self) -> MultiPoly {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }
}

/// Exact rational function `num/den` over the four real coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFn {
    pub num: MultiPoly,
    pub den: MultiPoly,
}

impl RatFn {
    fn poly(num: MultiPoly) -> Self {
        RatFn {
            num,
            den: MultiPoly::constant(NV, Rational::one()),
        }
    }

    pub fn eval(&self, p: &[Rational; 4]) -> Option<Rational> {
        let d = self.den.eval(p);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(p) / d)
    }

    /// Exact directional derivative at `p` along `v` (quotient rule).
    pub fn deriv(&self, p: &[Rational; 4], v: &[Rational; 4]) -> Option<Rational> {
        let d = self.den.eval(p);
        if d.is_zero() {
            return None;
        }
        let mut dn = Rational::zero();
        let mut dd = Rational::zero();
        for i in 0..NV {
            dn = dn + self.num.partial(i).eval(p) * &v[i];
            dd = dd + self.den.partial(i).eval(p) * &v[i];
        }
        let n = self.num.eval(p);
        Some((dn * &d - n * dd) / (&d * &d))
    }
}

/// Generator of the two-sided action: a left factor in the algebra plus a
/// multiple of the designated right one-parameter subgroup.
#[derive(Clone, Debug, PartialEq)]
pub struct ActionGenerator {
    pub left: Vector,
    pub right: Rational,
}

impl ActionGenerator {
    fn left_only(coords: [i64; 3]) -> Self {
        ActionGenerator {
            left: coords.iter().map(|&c| rat_i(c)).collect(),
            right: Rational::zero(),
        }
    }

    pub fn killing_at(&self, fiber: Option<usize>, z: &GroupPoint) -> Mat2 {
        let mut m = killing_field(&su11_matrix(&self.left), Side::Left, z).mat;
        if let Some(f) = fiber {
            if !self.right.is_zero() {
                let r = killing_field(&x_basis(f), Side::Right, z).mat.scale(&self.right);
                m = m.add(&r);
            }
        }
        m
    }
}

/// One transitive action together with its Killing frame spanning the
/// tangent space at the base point.
#[derive(Clone, Debug)]
pub struct ActionModel {
    pub case: ExpansionCase,
    /// Index of the frame direction used by the right factor, if any.
    pub fiber: Option<usize>,
    /// Three generators whose Killing fields frame the space (the `m` part).
    pub frame: [ActionGenerator; 3],
    /// Values of the frame Killing fields at the base point, as columns.
    pub tau: [Vector; 3],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpansionCase {
    /// Deformation along the timelike fiber: metric `-lambda != mu = nu`,
    /// structure family `S_lambda(t)`.
    Timelike,
    /// Deformation along the spacelike fiber: metric `-lambda = nu != mu`,
    /// structure family `S_mu(t)`.
    SpacelikeNu,
    /// Left translations only; structure `S0` on any metric.
    LeftOnly,
}

fn frame_coords_of(m: &Mat2, z: &GroupPoint) -> Option<Vector> {
    crate::group::su11_coords(&z.inverse().matrix().mul(m))
}

/// Builds the action model for a case at fixed parameters.
pub fn action_model(case: ExpansionCase, g: &DiagonalMetric, t: &Rational) -> ActionModel {
    let two = rat_i(2);
    match case {
        ExpansionCase::Timelike => {
            // E_t = -((2mu + lambda - t)/2mu) B3 - ((lambda - t)/2mu) X0,
            // where B3 is the right circle generator with Killing -Z X0.
            let a = (&g.lambda - t) / (&two * &g.mu);
            let e_t = ActionGenerator {
                left: vec![-a.clone(), Rational::zero(), Rational::zero()],
                right: -(&Rational::one() + &a),
            };
            let frame = [
                e_t,
                ActionGenerator::left_only([0, 1, 0]),
                ActionGenerator::left_only([0, 0, 1]),
            ];
            finish_model(ExpansionCase::Timelike, Some(0), frame)
        }
        ExpansionCase::SpacelikeNu => {
            // E_t = ((mu+t)/2nu) X1 - ((2nu - mu - t)/2nu) D, with D acting as
            // the right hyperbolic subgroup along X1.
            let p = (&g.mu + t) / (&two * &g.nu);
            let q = (&two * &g.nu - &g.mu - t) / (&two * &g.nu);
            let e_t = ActionGenerator {
                left: vec![Rational::zero(), p, Rational::zero()],
                right: -q,
            };
            let frame = [
                ActionGenerator::left_only([1, 0, 0]),
                e_t,
                ActionGenerator::left_only([0, 0, 1]),
            ];
            finish_model(ExpansionCase::SpacelikeNu, Some(1), frame)
        }
        ExpansionCase::LeftOnly => {
            let frame = [
                ActionGenerator::left_only([1, 0, 0]),
                ActionGenerator::left_only([0, 1, 0]),
                ActionGenerator::left_only([0, 0, 1]),
            ];
            finish_model(ExpansionCase::LeftOnly, None, frame)
        }
    }
}

fn finish_model(
    case: ExpansionCase,
    fiber: Option<usize>,
    frame: [ActionGenerator; 3],
) -> ActionModel {
    let o = GroupPoint::base();
    let tau: [Vector; 3] = core::array::from_fn(|i| {
        frame_coords_of(&frame[i].killing_at(fiber, &o), &o)
            .expect("frame Killing fields are tangent at the base point")
    });
    ActionModel {
        case,
        fiber,
        frame,
        tau,
    }
}

impl ActionModel {
    /// Bracket of two generators, as a generator (right parts commute with
    /// everything and with each other).
    pub fn bracket(&self, a: &ActionGenerator, b: &ActionGenerator) -> ActionGenerator {
        let alg = StructureConstants::su11();
        ActionGenerator {
            left: alg.bracket(&a.left, &b.left),
            right: Rational::zero(),
        }
    }

    /// Decomposes a generator over `frame + stabilizer`; returns the frame
    /// coefficients (the stabilizer is one-dimensional or absent).
    pub fn m_coefficients(&self, gen: &ActionGenerator) -> Vector {
        // Basis of the full algebra: the three frame generators plus the
        // stabilizer generator (left = fiber direction, right = 1).
        let mut cols: Vec<Vector> = self
            .frame
            .iter()
            .map(|f| {
                let mut v = f.left.clone();
                v.push(f.right.clone());
                v
            })
            .collect();
        if let Some(f) = self.fiber {
            let mut stab = vec![Rational::zero(); 3];
            stab[f] = Rational::one();
            stab.push(Rational::one());
            cols.push(stab);
        }
        let mut target = gen.left.clone();
        target.push(gen.right.clone());
        let rows: Vec<Vector> = (0..4)
            .map(|i| cols.iter().map(|c| c[i].clone()).collect())
            .collect();
        let sol = linalg::solve_affine(&rows, &target).expect("algebra decomposition");
        assert_eq!(sol.dim(), 0, "frame + stabilizer must be a basis");
        sol.base[..3].to_vec()
    }

    /// Frame coordinates of the Killing frame at a point, as the columns of a
    /// 3x3 matrix; `None` when the frame degenerates there.
    pub fn frame_matrix(&self, z: &GroupPoint) -> Option<linalg::Matrix> {
        let mut cols = Vec::new();
        for f in &self.frame {
            cols.push(frame_coords_of(&f.killing_at(self.fiber, z), z)?);
        }
        let m: linalg::Matrix = (0..3)
            .map(|r| (0..3).map(|c| cols[c][r].clone()).collect())
            .collect();
        Some(m)
    }

    /// Exact expansion coefficients of the left-invariant `X_beta` in the
    /// Killing frame at `z`: solves the 3x3 system.
    pub fn solve_coefficients(&self, z: &GroupPoint, beta: usize) -> Option<Vector> {
        let m = self.frame_matrix(z)?;
        let mut e = vec![Rational::zero(); 3];
        e[beta] = Rational::one();
        linalg::solve_square(&m, &e)
    }
}

/// Closed-form coefficient table: `table[beta][gamma]` is the coefficient of
/// the `gamma`-th Killing frame field in the expansion of the left-invariant
/// `X_beta`.
pub struct ExpansionTable {
    pub case: ExpansionCase,
    pub fns: [[RatFn; 3]; 3],
}

/// The closed forms for the timelike-fiber action.
///
/// All nine coefficients share the denominator
/// `(lambda - t + mu)|z2|^2 + mu|z1|^2`.
pub fn expansion_table_timelike(g: &DiagonalMetric, t: &Rational) -> ExpansionTable {
    let z1 = CPoly::z1();
    let z2 = CPoly::z2();
    let (l, m) = (&g.lambda, &g.mu);
    let lt = l - t;
    let ltm = &lt + m;
    let den = &z2.norm_sq().scale(&ltm) + &z1.norm_sq().scale(m);
    let z1z2 = z1.mul(&z2);
    let z1z2b = z1.mul(&z2.conj());
    let z1sq = z1.mul(&z1);
    let z2sq = z2.mul(&z2);
    let f = |num: MultiPoly| RatFn {
        num,
        den: den.clone(),
    };
    let m2 = m * rat_i(2);
    let fns = [
        [
            f(&z1.norm_sq() + &z2.norm_sq()).num.scale(m).into_ratfn(&den),
            f(z1z2.im.scale(&-lt.clone())),
            f(z1z2.re.scale(&lt)),
        ],
        [
            f(z1z2b.im.scale(&-m2.clone())),
            f(&z2sq.re.scale(&ltm) + &z1sq.re.scale(m)),
            f(&z2sq.im.scale(&ltm) + &z1sq.im.scale(m)),
        ],
        [
            f(z1z2b.re.scale(&-m2)),
            f(&z2sq.im.scale(&ltm) - &z1sq.im.scale(m)),
            f(&z1sq.re.scale(m) - &z2sq.re.scale(&ltm)),
        ],
    ];
    ExpansionTable {
        case: ExpansionCase::Timelike,
        fns,
    }
}

trait IntoRatFn {
    fn into_ratfn(self, den: &MultiPoly) -> RatFn;
}

impl IntoRatFn for MultiPoly {
    fn into_ratfn(self, den: &MultiPoly) -> RatFn {
        RatFn {
            num: self,
            den: den.clone(),
        }
    }
}

/// The closed forms for the spacelike-fiber action.
///
/// Common denominator: `2 Re(z1^2 - z2^2)(t - 2nu + mu) - 2(mu + t)`.
pub fn expansion_table_spacelike(g: &DiagonalMetric, t: &Rational) -> ExpansionTable {
    let z1 = CPoly::z1();
    let z2 = CPoly::z2();
    let (m, n) = (&g.mu, &g.nu);
    let two = rat_i(2);
    let mt = m + t;
    let t2nm = t - &(&two * n) + m;
    let z1sq = z1.mul(&z1);
    let z2sq = z2.mul(&z2);
    let z1z2 = z1.mul(&z2);
    let z1z2b = z1.mul(&z2.conj());
    let re_diff = (&z1sq.re - &z2sq.re).scale(&two); // z1^2 - z2^2 + conj
    let den = &re_diff.scale(&t2nm) - &MultiPoly::constant(NV, &two * &mt);
    let norm = &z1.norm_sq() + &z2.norm_sq();
    let f = |num: MultiPoly| RatFn {
        num,
        den: den.clone(),
    };
    let four = rat_i(4);
    let eight = rat_i(8);
    let fns = [
        [
            f(&(&z1sq.re + &z2sq.re).scale(&(&two * &t2nm)) - &norm.scale(&(&two * &mt))),
            f(z1z2.im.scale(&-(&eight * n))),
            f(&(&z1z2.re - &z1z2b.re).scale(&(&four * &mt)) + &z1z2b.re.scale(&(&eight * n))),
        ],
        [
            f(z1z2b.im.scale(&(&four * &mt))),
            f(re_diff.scale(&-(&two * n))),
            f((&z1sq.im - &z2sq.im).scale(&-(&two * &mt))),
        ],
        [
            f(&(&z1z2.re - &z1z2b.re).scale(&-(&four * &mt)) + &z1z2.re.scale(&(&eight * n))),
            f((&z1sq.im + &z2sq.im).scale(&(&four * n))),
            f(&norm.scale(&-(&two * &(&(&two * n) - &mt)))
                - &(&z1sq.re + &z2sq.re).scale(&(&two * &mt))),
        ],
    ];
    ExpansionTable {
        case: ExpansionCase::SpacelikeNu,
        fns,
    }
}

/// Left-translation expansion: the coefficients are the entries of the
/// adjoint matrix, polynomial in the coordinates.
pub fn expansion_table_left_only() -> ExpansionTable {
    let z1 = CPoly::z1();
    let z2 = CPoly::z2();
    let z1b = z1.conj();
    let z2b = z2.conj();
    let two = rat_i(2);
    let z1z2 = z1.mul(&z2);
    let z1bz2 = z1b.mul(&z2);
    let p = z1.mul(&z1).sub_c(&z2.mul(&z2));
    let q = z1b.mul(&z1b).add_c(&z2b.mul(&z2b));
    let f = RatFn::poly;
    // Column beta of Ad(Z) expands X_beta over the left Killing frame.
    let fns = [
        [
            f(&z1.norm_sq() + &z2.norm_sq()),
            f(z1z2.im.scale(&two)),
            f(z1z2.re.scale(&-two.clone())),
        ],
        [
            f(z1bz2.im.scale(&two)),
            f(p.re.clone()),
            f(p.im.clone()),
        ],
        [
            f(z1bz2.re.scale(&-two.clone())),
            f(q.im.clone()),
            f(q.re.clone()),
        ],
    ];
    ExpansionTable {
        case: ExpansionCase::LeftOnly,
        fns,
    }
}

impl CPoly {
    fn sub_c(&self, o: &Self) -> Self {
        CPoly {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }
    fn add_c(&self, o: &Self) -> Self {
        CPoly {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }
}

pub fn expansion_table(case: ExpansionCase, g: &DiagonalMetric, t: &Rational) -> ExpansionTable {
    match case {
        ExpansionCase::Timelike => expansion_table_timelike(g, t),
        ExpansionCase::SpacelikeNu => expansion_table_spacelike(g, t),
        ExpansionCase::LeftOnly => expansion_table_left_only(),
    }
}

#[derive(Clone, Debug, Default)]
pub struct ExpansionReport {
    pub checked_points: usize,
    pub skipped_points: usize,
    pub mismatches: Vec<String>,
}

impl ExpansionReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.checked_points > 0
    }
}

/// Verifies the closed-form coefficient table against the exact linear solve
/// at every supplied point.
pub fn verify_expansion(
    case: ExpansionCase,
    g: &DiagonalMetric,
    t: &Rational,
    points: &[GroupPoint],
) -> ExpansionReport {
    let model = action_model(case, g, t);
    let table = expansion_table(case, g, t);
    let mut report = ExpansionReport::default();
    for z in points {
        let coords = z.coords();
        let solved = model.solve_coefficients(z, 0).and_then(|c0| {
            let c1 = model.solve_coefficients(z, 1)?;
            let c2 = model.solve_coefficients(z, 2)?;
            Some([c0, c1, c2])
        });
        let Some(solved) = solved else {
            report.skipped_points += 1;
            continue;
        };
        let mut ok = true;
        for beta in 0..3 {
            for gamma in 0..3 {
                match table.fns[beta][gamma].eval(&coords) {
                    None => {
                        report.skipped_points += 1;
                        ok = false;
                        break;
                    }
                    Some(v) => {
                        if v != solved[beta][gamma] {
                            report.mismatches.push(alloc::format!(
                                "coefficient [{beta}][{gamma}] mismatch at ({:?})",
                                coords
                            ));
                            ok = false;
                        }
                    }
                }
            }
            if !ok {
                break;
            }
        }
        if ok {
            report.checked_points += 1;
        }
    }
    report
}

/// Reconstructs `nabla~` on left-invariant fields at the base point from the
/// action: Leibniz through the Killing frame plus the `-[.,.]_m` rule, all
/// derivatives exact. Returns the frame connection coefficients
/// `gamma[k][alpha][beta]`.
pub fn connection_from_action(
    case: ExpansionCase,
    g: &DiagonalMetric,
    t: &Rational,
) -> Tensor<Rational> {
    let model = action_model(case, g, t);
    let table = expansion_table(case, g, t);
    let o = GroupPoint::base();
    let oc = o.coords();
    // Velocities of the left-invariant frame curves at the base point.
    let vel: [[Rational; 4]; 3] = [
        [rat_i(0), rat_i(1), rat_i(0), rat_i(0)],
        [rat_i(0), rat_i(0), rat_i(1), rat_i(0)],
        [rat_i(0), rat_i(0), rat_i(0), rat_i(1)],
    ];
    // c[gamma][beta] at o and the m-part brackets.
    let c_at_o: Vec<Vec<Rational>> = (0..3)
        .map(|beta| {
            (0..3)
                .map(|gamma| table.fns[beta][gamma].eval(&oc).expect("base point regular"))
                .collect()
        })
        .collect();
    let mut out = Tensor::zeros(3);
    for alpha in 0..3 {
        for beta in 0..3 {
            let mut acc = vec![Rational::zero(); 3];
            for gamma in 0..3 {
                // Derivative term.
                let d = table.fns[beta][gamma]
                    .deriv(&oc, &vel[alpha])
                    .expect("base point regular");
                for k in 0..3 {
                    acc[k] = &acc[k] + &(&d * &model.tau[gamma][k]);
                }
                // Connection term: nabla~_{K_delta} K_gamma = -tau([K_delta, K_gamma]_m).
                for delta in 0..3 {
                    let w = &c_at_o[alpha][delta] * &c_at_o[beta][gamma];
                    if w.is_zero() {
                        continue;
                    }
                    let br = model.bracket(&model.frame[delta], &model.frame[gamma]);
                    let mc = model.m_coefficients(&br);
                    for (j, cj) in mc.iter().enumerate() {
                        for k in 0..3 {
                            let contrib = &w * cj * &model.tau[j][k];
                            acc[k] = &acc[k] - &contrib;
                        }
                    }
                }
            }
            for k in 0..3 {
                out.set(&[k, alpha, beta], acc[k].clone());
            }
        }
    }
    out
}

/// The expected canonical connection `nabla - S_family(t)` for the case.
pub fn expected_canonical_gamma(
    case: ExpansionCase,
    g: &DiagonalMetric,
    t: &Rational,
) -> Tensor<Rational> {
    let alg = StructureConstants::su11();
    let lc = koszul_connection(&alg, g);
    let fam = match case {
        ExpansionCase::Timelike => FamilyTag::Slambda,
        ExpansionCase::SpacelikeNu => FamilyTag::Smu,
        ExpansionCase::LeftOnly => FamilyTag::S0,
    };
    let s = catalog_family(fam, g, t).expect("case-compatible family").structure;
    s.canonical_connection(&lc, g).gamma
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::sample_points;
    use crate::rational::rat;

    fn tl_metric() -> DiagonalMetric {
        DiagonalMetric::new(rat_i(-2), rat_i(1), rat_i(1)).unwrap()
    }

    fn sp_metric() -> DiagonalMetric {
        DiagonalMetric::new(rat_i(-3), rat_i(5), rat_i(3)).unwrap()
    }

    #[test]
    fn timelike_coefficients_at_base_point() {
        let g = tl_metric();
        let t = rat_i(-4);
        let model = action_model(ExpansionCase::Timelike, &g, &t);
        let c = model.solve_coefficients(&GroupPoint::base(), 0).unwrap();
        assert_eq!(c, vec![rat_i(1), rat_i(0), rat_i(0)]);
        let table = expansion_table(ExpansionCase::Timelike, &g, &t);
        let oc = GroupPoint::base().coords();
        assert_eq!(table.fns[0][0].eval(&oc), Some(rat_i(1)));
        assert_eq!(table.fns[0][1].eval(&oc), Some(rat_i(0)));
        assert_eq!(table.fns[0][2].eval(&oc), Some(rat_i(0)));
    }

    #[test]
    fn timelike_expansion_matches_closed_forms() {
        let g = tl_metric();
        for t in [rat_i(-4), rat(3, 7)] {
            let pts = sample_points(5, 16);
            let rep = verify_expansion(ExpansionCase::Timelike, &g, &t, &pts);
            assert!(rep.passed(), "{:?}", rep.mismatches);
            assert!(rep.checked_points >= 14);
        }
    }

    #[test]
    fn spacelike_expansion_matches_closed_forms() {
        let g = sp_metric();
        for t in [rat_i(2), rat(-5, 3)] {
            let pts = sample_points(9, 16);
            let rep = verify_expansion(ExpansionCase::SpacelikeNu, &g, &t, &pts);
            assert!(rep.passed(), "{:?}", rep.mismatches);
        }
    }

    #[test]
    fn left_only_expansion_matches_adjoint() {
        let g = tl_metric();
        let pts = sample_points(21, 12);
        let rep = verify_expansion(ExpansionCase::LeftOnly, &g, &rat_i(0), &pts);
        assert!(rep.passed(), "{:?}", rep.mismatches);
    }

    #[test]
    fn action_connection_equals_canonical_timelike() {
        let g = tl_metric();
        let t = rat_i(-4);
        let got = connection_from_action(ExpansionCase::Timelike, &g, &t);
        let want = expected_canonical_gamma(ExpansionCase::Timelike, &g, &t);
        assert_eq!(got, want);
        // Spot value: nabla~_{X0} X1 = ((lambda - t + 2mu)/mu) X2.
        assert_eq!(*got.get(&[2, 0, 1]), rat_i(4)); // (-2 + 4 + 2)/1
        let t2 = rat_i(1);
        let got2 = connection_from_action(ExpansionCase::Timelike, &g, &t2);
        assert_eq!(*got2.get(&[2, 0, 1]), rat_i(-1)); // (-2 - 1 + 2)/1
    }

    #[test]
    fn action_connection_equals_canonical_spacelike() {
        let g = sp_metric();
        let t = rat_i(2);
        let got = connection_from_action(ExpansionCase::SpacelikeNu, &g, &t);
        let want = expected_canonical_gamma(ExpansionCase::SpacelikeNu, &g, &t);
        assert_eq!(got, want);
        // nabla~_{X1} X2 = ((mu + t - 2nu)/nu) X0: (5 + 2 - 6)/3 = 1/3.
        assert_eq!(*got.get(&[0, 1, 2]), rat(1, 3));
    }

    #[test]
    fn action_connection_left_only_is_flat() {
        for g in [tl_metric(), sp_metric()] {
            let got = connection_from_action(ExpansionCase::LeftOnly, &g, &rat_i(0));
            assert!(got.is_zero());
            let want = expected_canonical_gamma(ExpansionCase::LeftOnly, &g, &rat_i(0));
            assert!(want.is_zero());
        }
    }
}
