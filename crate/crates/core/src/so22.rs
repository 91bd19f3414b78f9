//! The six-dimensional isometry model `su(1,1) + su(1,1)` in the basis
//! `(U0, U1, U2, B0, B1, B2)`: `U_a` span the stabilizer of the base point,
//! `B_i` the left translations. Holds the reductive-decomposition case
//! analysis, the embedding of transvection algebras, and the verification of
//! every displayed bracket relation of the classification.
//!
//! Lightlike normalizations introduce a factor `1/sqrt(2)`; those
//! computations run over the quadratic extension `Q(sqrt 2)` so everything
//! stays exact.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Signed, Zero};

use crate::lie::{DiagonalMetric, StructureConstants};
use crate::linalg::{self, Matrix, Vector};
use crate::rational::{exact_sqrt, rat_i, Rational};
use crate::structures::{catalog_family, degeneration_value, FamilyTag};
use crate::transvection::{
    build_transvection_algebra, holonomy_algebra, HolonomySpan, LieAlgebraPresentation,
};

/// Element of `Q(sqrt 2)`: `a + b sqrt(2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Sqrt2Ext {
    pub a: Rational,
    pub b: Rational,
}

impl Sqrt2Ext {
    pub fn zero() -> Self {
        Sqrt2Ext {
            a: Rational::zero(),
            b: Rational::zero(),
        }
    }
    pub fn rational(a: Rational) -> Self {
        Sqrt2Ext {
            a,
            b: Rational::zero(),
        }
    }
    /// `c / sqrt(2) = (c/2) sqrt(2)`.
    pub fn over_sqrt2(c: Rational) -> Self {
        Sqrt2Ext {
            a: Rational::zero(),
            b: c / rat_i(2),
        }
    }
    pub fn add(&self, o: &Self) -> Self {
        Sqrt2Ext {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
        }
    }
    pub fn sub(&self, o: &Self) -> Self {
        Sqrt2Ext {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
        }
    }
    pub fn mul(&self, o: &Self) -> Self {
        Sqrt2Ext {
            a: &self.a * &o.a + rat_i(2) * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }
    pub fn neg(&self) -> Self {
        Sqrt2Ext {
            a: -self.a.clone(),
            b: -self.b.clone(),
        }
    }
    pub fn scale(&self, c: &Rational) -> Self {
        Sqrt2Ext {
            a: &self.a * c,
            b: &self.b * c,
        }
    }
    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

/// Vector in the six-dimensional model over `Q(sqrt 2)`.
pub type V6 = [Sqrt2Ext; 6];

pub fn v6_zero() -> V6 {
    core::array::from_fn(|_| Sqrt2Ext::zero())
}

pub fn v6_rational(coords: &[Rational; 6]) -> V6 {
    core::array::from_fn(|i| Sqrt2Ext::rational(coords[i].clone()))
}

pub fn v6_add(x: &V6, y: &V6) -> V6 {
    core::array::from_fn(|i| x[i].add(&y[i]))
}

pub fn v6_scale(x: &V6, c: &Sqrt2Ext) -> V6 {
    core::array::from_fn(|i| x[i].mul(c))
}

pub fn v6_eq(x: &V6, y: &V6) -> bool {
    x.iter().zip(y.iter()).all(|(a, b)| a == b)
}

/// Basis helpers: `u(a)` and `b(i)` are the six generators.
pub fn u(a: usize) -> V6 {
    let mut v = v6_zero();
    v[a] = Sqrt2Ext::rational(Rational::one());
    v
}

pub fn b(i: usize) -> V6 {
    let mut v = v6_zero();
    v[3 + i] = Sqrt2Ext::rational(Rational::one());
    v
}

/// Structure constants of the frame algebra as plain integers:
/// `[X_i, X_j] = sum_k su_c(k, i, j) X_k`.
fn su_c(k: usize, i: usize, j: usize) -> i64 {
    match (k, i, j) {
        (2, 0, 1) => 2,
        (2, 1, 0) => -2,
        (0, 1, 2) => -2,
        (0, 2, 1) => 2,
        (1, 2, 0) => 2,
        (1, 0, 2) => -2,
        _ => 0,
    }
}

/// Structure constants of the model in the `(U, B)` basis:
/// `[U_i, U_j] = c^k U_k`, `[U_i, B_j] = c^k B_k`,
/// `[B_i, U_j] = -[U_j, B_i] = c^k_{ij} B_k`, `[B_i, B_j] = c^k B_k`.
fn model_constant(k6: usize, i6: usize, j6: usize) -> i64 {
    let (i, iu) = (i6 % 3, i6 < 3);
    let (j, ju) = (j6 % 3, j6 < 3);
    let (k, ku) = (k6 % 3, k6 < 3);
    match (iu, ju, ku) {
        (true, true, true) => su_c(k, i, j),
        (true, false, false) | (false, true, false) | (false, false, false) => su_c(k, i, j),
        _ => 0,
    }
}

/// Bracket in the model, exact over `Q(sqrt 2)`.
pub fn bracket6(x: &V6, y: &V6) -> V6 {
    let mut out = v6_zero();
    for i in 0..6 {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..6 {
            if y[j].is_zero() {
                continue;
            }
            let c = x[i].mul(&y[j]);
            for k in 0..6 {
                let w = model_constant(k, i, j);
                if w != 0 {
                    out[k] = out[k].add(&c.scale(&rat_i(w)));
                }
            }
        }
    }
    out
}

/// Evaluation map onto the tangent space at the base point: `B_i -> X_i`,
/// `U_a -> 0`. Only valid on vectors with rational coordinates.
pub fn tau(v: &V6) -> Option<Vector> {
    let mut out = vec![Rational::zero(); 3];
    for i in 0..3 {
        if !v[3 + i].b.is_zero() {
            return None;
        }
        out[i] = v[3 + i].a.clone();
    }
    Some(out)
}

/// `tau` allowing a global `sqrt 2` weight: returns the `(rational, sqrt2)`
/// parts separately.
pub fn tau_ext(v: &V6) -> ([Rational; 3], [Rational; 3]) {
    (
        core::array::from_fn(|i| v[3 + i].a.clone()),
        core::array::from_fn(|i| v[3 + i].b.clone()),
    )
}

/// Inner product of two tangent vectors under a symmetric-case metric,
/// extended bilinearly to `Q(sqrt 2)` coordinates.
pub fn tau_inner(g: &DiagonalMetric, x: &V6, y: &V6) -> Sqrt2Ext {
    let mut out = Sqrt2Ext::zero();
    for i in 0..3 {
        let prod = x[3 + i].mul(&y[3 + i]).scale(g.diag(i));
        out = out.add(&prod);
    }
    out
}

/// The isotropy action of `U_a` on the frame: the matrix of `ad(X_a)`.
pub fn isotropy_action(a: usize) -> Matrix {
    let su = StructureConstants::su11();
    (0..3)
        .map(|k| (0..3).map(|i| su.c().get(&[k, a, i]).clone()).collect())
        .collect()
}

/// Coordinates of a frame endomorphism in the span of the three isotropy
/// actions, if it lies there.
pub fn stabilizer_coords(m: &Matrix) -> Option<Vector> {
    let basis: Vec<Vector> = (0..3)
        .map(|a| isotropy_action(a).into_iter().flatten().collect())
        .collect();
    let flat: Vector = m.iter().flat_map(|r| r.iter().cloned()).collect();
    linalg::coords_in_span(&basis, &flat)
}

/// Outcome of embedding a transvection algebra into the model.
#[derive(Clone, Debug)]
pub struct ModelEmbedding {
    /// Image of each holonomy basis element (stabilizer coordinates, length 3).
    pub h_images: Vec<Vector>,
    /// Image of each frame vector, as a rational element of the model.
    pub m_images: [Vector; 3],
    /// The decomposition label and parameter from the classification table.
    pub case_label: String,
    pub c_value: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub enum EmbeddingError {
    HolonomyOutsideStabilizer,
    WrongCase(String),
    BracketMismatch(usize, usize),
    TauMismatch(usize),
    Degenerate,
}

/// Verifies the tabulated reductive decomposition for a catalog family on a
/// symmetric-case metric: builds the candidate embedding with the tabulated
/// `c`-value and checks it is a bracket-preserving, split-preserving,
/// `tau`-compatible monomorphism.
pub fn match_tabulated_decomposition(
    g: &DiagonalMetric,
    family: FamilyTag,
    t: &Rational,
) -> Result<ModelEmbedding, EmbeddingError> {
    if g.case() != crate::sample::MetricCase::Symmetric {
        return Err(EmbeddingError::WrongCase(String::from(
            "tabulated decompositions live on the symmetric case",
        )));
    }
    let alg = StructureConstants::su11();
    let entry = catalog_family(family, g, t)
        .map_err(|_| EmbeddingError::WrongCase(format!("{:?} not on this case", family)))?;
    if entry.degenerate_at.is_some() || (family != FamilyTag::S0 && Some(t.clone()) == degeneration_value(family, g))
    {
        return Err(EmbeddingError::Degenerate);
    }
    let s = entry.structure;
    let span = holonomy_algebra(&alg, g, &s);
    let p = build_transvection_algebra(&alg, g, &s);
    let mu = &g.mu;
    let two_mu = rat_i(2) * mu;
    let c = match family {
        FamilyTag::Svol | FamilyTag::Slambda | FamilyTag::Smu | FamilyTag::Snu => (t - mu) / &two_mu,
        FamilyTag::SnullMinus => t / mu,
        FamilyTag::SnullPlus => -(t / mu),
        FamilyTag::S0 => Rational::zero(),
        FamilyTag::Raw => return Err(EmbeddingError::WrongCase(String::from("raw"))),
    };
    // Candidate images of the frame vectors.
    let e6 = |idx: usize| -> Vector {
        let mut v = vec![Rational::zero(); 6];
        v[idx] = Rational::one();
        v
    };
    let m_images: [Vector; 3] = match family {
        FamilyTag::S0 => core::array::from_fn(|i| e6(3 + i)),
        FamilyTag::Svol => core::array::from_fn(|i| {
            let mut v = e6(3 + i);
            v[i] = c.clone();
            v
        }),
        FamilyTag::Slambda => {
            let mut x0 = e6(3);
            x0[0] = c.clone();
            [x0, e6(4), e6(5)]
        }
        FamilyTag::Smu => {
            let mut x1 = e6(4);
            x1[1] = c.clone();
            [e6(3), x1, e6(5)]
        }
        FamilyTag::Snu => {
            let mut x2 = e6(5);
            x2[2] = c.clone();
            [e6(3), e6(4), x2]
        }
        FamilyTag::SnullMinus | FamilyTag::SnullPlus => {
            // The stabilizer is the lightlike line spanned by
            // w = U0 + eps U1. The plus family corrects the opposite
            // lightlike leg (m = span{v+, v- + c w+, B2}), the minus family
            // the aligned one (m = span{v+ + c w-, v-, B2}); on the frame
            // this puts the same correction (c/2) w on X0 and -eps (c/2) w
            // on X1.
            let eps = if family == FamilyTag::SnullMinus {
                rat_i(-1)
            } else {
                rat_i(1)
            };
            let half_c = &c / rat_i(2);
            let mut x0 = e6(3);
            x0[0] = half_c.clone();
            x0[1] = &half_c * &eps;
            let mut x1 = e6(4);
            x1[0] = -(&half_c * &eps);
            x1[1] = -half_c.clone();
            [x0, x1, e6(5)]
        }
        FamilyTag::Raw => unreachable!(),
    };
    // Images of the holonomy basis: stabilizer coordinates of each generator.
    let mut h_images = Vec::new();
    for m in &span.basis {
        let coords = stabilizer_coords(m).ok_or(EmbeddingError::HolonomyOutsideStabilizer)?;
        h_images.push(coords);
    }
    verify_embedding(&p, &span, &h_images, &m_images)?;
    Ok(ModelEmbedding {
        h_images,
        m_images,
        case_label: decomposition_case_label(family),
        c_value: c,
    })
}

fn decomposition_case_label(family: FamilyTag) -> String {
    String::from(match family {
        FamilyTag::Svol => "(v)",
        FamilyTag::Slambda => "(i)",
        FamilyTag::Smu => "(ii)",
        FamilyTag::Snu => "(ii')",
        FamilyTag::SnullMinus | FamilyTag::SnullPlus => "(iii)",
        FamilyTag::S0 => "trivial",
        FamilyTag::Raw => "raw",
    })
}

/// Checks that the candidate embedding is a Lie monomorphism compatible with
/// the split and `tau`.
fn verify_embedding(
    p: &LieAlgebraPresentation,
    span: &HolonomySpan,
    h_images: &[Vector],
    m_images: &[Vector; 3],
) -> Result<(), EmbeddingError> {
    let hd = p.h_idx.len();
    let n = p.dim();
    // Full image table in model coordinates.
    let mut images: Vec<Vector> = Vec::with_capacity(n);
    for h in h_images {
        let mut v = vec![Rational::zero(); 6];
        for (a, c) in h.iter().enumerate() {
            v[a] = c.clone();
        }
        images.push(v);
    }
    for m in m_images {
        images.push(m.clone());
    }
    // tau compatibility: frame vectors map to elements projecting onto
    // themselves.
    for (i, m) in m_images.iter().enumerate() {
        let proj = &m[3..6];
        let mut want = vec![Rational::zero(); 3];
        want[i] = Rational::one();
        if proj != want.as_slice() {
            return Err(EmbeddingError::TauMismatch(i));
        }
    }
    // Injectivity: the images must be linearly independent.
    if linalg::rank(&images.clone()) != n {
        return Err(EmbeddingError::WrongCase(String::from("images not independent")));
    }
    // Bracket preservation.
    let to_v6 = |v: &Vector| -> V6 { v6_rational(&core::array::from_fn(|i| v[i].clone())) };
    for i in 0..n {
        for j in 0..n {
            let lhs = bracket6(&to_v6(&images[i]), &to_v6(&images[j]));
            // psi([e_i, e_j]) as a model vector.
            let br = &p.bracket[i][j];
            let mut rhs = vec![Rational::zero(); 6];
            for (k, coef) in br.iter().enumerate() {
                if coef.is_zero() {
                    continue;
                }
                for (r, im) in rhs.iter_mut().zip(&images[k]) {
                    *r = &*r + &(coef * im);
                }
            }
            if !v6_eq(&lhs, &to_v6(&rhs)) {
                return Err(EmbeddingError::BracketMismatch(i, j));
            }
        }
    }
    let _ = (hd, span);
    Ok(())
}

/// Reductivity inside the model: `[h, m] subset m` for given spans.
pub fn model_reductive(h: &[V6], m: &[V6]) -> bool {
    // Work in the rational 12-dimensional realification.
    let flat = |v: &V6| -> Vector {
        let mut out = Vec::with_capacity(12);
        for e in v {
            out.push(e.a.clone());
            out.push(e.b.clone());
        }
        out
    };
    let m_flat: Vec<Vector> = m
        .iter()
        .flat_map(|v| {
            let sq = v6_scale(v, &Sqrt2Ext {
                a: Rational::zero(),
                b: Rational::one(),
            });
            [flat(v), flat(&sq)]
        })
        .collect();
    for w in h {
        for x in m {
            let br = bracket6(w, x);
            if !linalg::in_span(&m_flat, &flat(&br)) {
                return false;
            }
        }
    }
    true
}

/// Identifier for the displayed decomposition relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecompositionCase {
    /// Generic stabilizer direction, rotated into the `(U0, U1)` plane.
    RotationPreamble,
    /// Timelike stabilizer direction.
    Boost1a,
    /// Spacelike stabilizer direction.
    Boost1b,
    /// Lightlike stabilizer direction, plus-type.
    Null1cPlus,
    /// Lightlike stabilizer direction, minus-type, with the exchange map.
    Null1cMinus,
    /// Two-dimensional stabilizer.
    TwoDim2,
    /// Two-dimensional stabilizer admits no structure-generated holonomy.
    ObstructionIv,
    /// Full stabilizer, diagonal complement.
    Full3,
}

#[derive(Clone, Debug, Default)]
pub struct CaseReport {
    pub checked_relations: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checked_relations > 0
    }

    fn relation(&mut self, label: &str, lhs: &V6, rhs: &V6) {
        if v6_eq(lhs, rhs) {
            self.checked_relations += 1;
        } else {
            self.failures.push(format!("relation {} fails", label));
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum CaseParamError {
    NotPerfectSquare(String),
    InvalidParams(String),
}

/// Verifies every displayed bracket relation of one decomposition case at
/// exact parameters (radicals must be rational, e.g. `(c1, c2) = (3, 4)`).
pub fn verify_decomposition_case(
    case: DecompositionCase,
    params: &[Rational],
) -> Result<CaseReport, CaseParamError> {
    let mut rep = CaseReport::default();
    let rzero = Rational::zero;
    match case {
        DecompositionCase::RotationPreamble => {
            let [c0, c1, c2]: [Rational; 3] = params_array(params)?;
            if c1.is_zero() || c2.is_zero() {
                return Err(CaseParamError::InvalidParams(String::from("need c1 c2 != 0")));
            }
            let s = exact_sqrt(&(&c1 * &c1 + &c2 * &c2)).ok_or_else(|| {
                CaseParamError::NotPerfectSquare(String::from("c1^2 + c2^2"))
            })?;
            let w = lin(&[(c0.clone(), u(0)), (c1.clone(), u(1)), (c2.clone(), u(2))]);
            let v1 = lin(&[(&c2 / &s, b(1)), (-(&c1 / &s), b(2))]);
            let v2 = lin(&[(&c1 / &s, b(1)), (&c2 / &s, b(2))]);
            let two_s = rat_i(2) * &s;
            let two_c0 = rat_i(2) * &c0;
            rep.relation("[w,B0] = 2 s v1", &bracket6(&w, &b(0)), &scale_r(&v1, &two_s));
            rep.relation(
                "[w,v1] = 2 s B0 + 2 c0 v2",
                &bracket6(&w, &v1),
                &v6_add(&scale_r(&b(0), &two_s), &scale_r(&v2, &two_c0)),
            );
            rep.relation(
                "[w,v2] = -2 c0 v1",
                &bracket6(&w, &v2),
                &scale_r(&v1, &-two_c0.clone()),
            );
            rep.relation("[B0,v1] = 2 v2", &bracket6(&b(0), &v1), &scale_r(&v2, &rat_i(2)));
            rep.relation(
                "[v1,v2] = -2 B0",
                &bracket6(&v1, &v2),
                &scale_r(&b(0), &rat_i(-2)),
            );
            rep.relation("[v2,B0] = 2 v1", &bracket6(&v2, &b(0)), &scale_r(&v1, &rat_i(2)));
            let _ = rzero;
        }
        DecompositionCase::Boost1a | DecompositionCase::Boost1b => {
            let [c0, c1, c]: [Rational; 3] = params_array(params)?;
            let diff = if case == DecompositionCase::Boost1a {
                &c0 * &c0 - &c1 * &c1
            } else {
                &c1 * &c1 - &c0 * &c0
            };
            if !diff.is_positive() {
                return Err(CaseParamError::InvalidParams(String::from(
                    "sign condition on c0^2 - c1^2",
                )));
            }
            let s = exact_sqrt(&diff)
                .ok_or_else(|| CaseParamError::NotPerfectSquare(String::from("|c0^2 - c1^2|")))?;
            let w = lin(&[(&c0 / &s, u(0)), (&c1 / &s, u(1))]);
            let (v0, v1) = if case == DecompositionCase::Boost1a {
                (
                    lin(&[(&c1 / &s, b(1)), (&c0 / &s, b(0))]),
                    lin(&[(&c0 / &s, b(1)), (&c1 / &s, b(0))]),
                )
            } else {
                (
                    lin(&[(&c0 / &s, b(1)), (&c1 / &s, b(0))]),
                    lin(&[(&c1 / &s, b(1)), (&c0 / &s, b(0))]),
                )
            };
            let sign = if case == DecompositionCase::Boost1a { rat_i(1) } else { rat_i(-1) };
            // [w, v0] = 0 (a) / -2 B2 (b); [w, v1] = 2 B2 (a) / 0 (b)
            if case == DecompositionCase::Boost1a {
                rep.relation("[w,v0] = 0", &bracket6(&w, &v0), &v6_zero());
                rep.relation("[w,v1] = 2 B2", &bracket6(&w, &v1), &scale_r(&b(2), &rat_i(2)));
                rep.relation("[w,B2] = -2 v1", &bracket6(&w, &b(2)), &scale_r(&v1, &rat_i(-2)));
            } else {
                rep.relation("[w,v0] = -2 B2", &bracket6(&w, &v0), &scale_r(&b(2), &rat_i(-2)));
                rep.relation("[w,v1] = 0", &bracket6(&w, &v1), &v6_zero());
                rep.relation("[w,B2] = -2 v0", &bracket6(&w, &b(2)), &scale_r(&v0, &rat_i(-2)));
            }
            rep.relation("[v0,v1] = 2 B2", &bracket6(&v0, &v1), &scale_r(&b(2), &rat_i(2)));
            rep.relation("[v1,B2] = -2 v0", &bracket6(&v1, &b(2)), &scale_r(&v0, &rat_i(-2)));
            rep.relation("[B2,v0] = 2 v1", &bracket6(&b(2), &v0), &scale_r(&v1, &rat_i(2)));
            let _ = sign;
            // Reductivity of the displayed m.
            let m_set = if case == DecompositionCase::Boost1a {
                [v6_add(&v0, &scale_r(&w, &c)), v1.clone(), b(2)]
            } else {
                [v0.clone(), v6_add(&v1, &scale_r(&w, &c)), b(2)]
            };
            if !model_reductive(&[w.clone()], &m_set) {
                rep.failures.push(String::from("displayed m not reductive"));
            } else {
                rep.checked_relations += 1;
            }
        }
        DecompositionCase::Null1cPlus | DecompositionCase::Null1cMinus => {
            let [c]: [Rational; 1] = params_array(params)?;
            let inv_sqrt2 = Sqrt2Ext::over_sqrt2(Rational::one());
            let w_p = v6_scale(&v6_add(&u(0), &u(1)), &inv_sqrt2);
            let w_m = v6_scale(&v6_add(&u(0), &scale_r(&u(1), &rat_i(-1))), &inv_sqrt2);
            let v_p = v6_scale(&v6_add(&b(0), &b(1)), &inv_sqrt2);
            let v_m = v6_scale(&v6_add(&b(0), &scale_r(&b(1), &rat_i(-1))), &inv_sqrt2);
            if case == DecompositionCase::Null1cPlus {
                rep.relation("[w+,v+] = 0", &bracket6(&w_p, &v_p), &v6_zero());
                rep.relation(
                    "[w+,v-] = -2 B2",
                    &bracket6(&w_p, &v_m),
                    &scale_r(&b(2), &rat_i(-2)),
                );
                rep.relation(
                    "[w+,B2] = -2 v+",
                    &bracket6(&w_p, &b(2)),
                    &v6_scale(&v_p, &Sqrt2Ext::rational(rat_i(-2))),
                );
                rep.relation(
                    "[v+,v-] = -2 B2",
                    &bracket6(&v_p, &v_m),
                    &scale_r(&b(2), &rat_i(-2)),
                );
                rep.relation(
                    "[v+,B2] = -2 v+",
                    &bracket6(&v_p, &b(2)),
                    &v6_scale(&v_p, &Sqrt2Ext::rational(rat_i(-2))),
                );
                rep.relation(
                    "[v-,B2] = 2 v-",
                    &bracket6(&v_m, &b(2)),
                    &v6_scale(&v_m, &Sqrt2Ext::rational(rat_i(2))),
                );
                let m_set = [v_p.clone(), v6_add(&v_m, &scale_r(&w_p, &c)), b(2)];
                if model_reductive(&[w_p.clone()], &m_set) {
                    rep.checked_relations += 1;
                } else {
                    rep.failures.push(String::from("m+ not reductive"));
                }
            } else {
                rep.relation("[w-,v+] = 2 B2", &bracket6(&w_m, &v_p), &scale_r(&b(2), &rat_i(2)));
                rep.relation("[w-,v-] = 0", &bracket6(&w_m, &v_m), &v6_zero());
                rep.relation(
                    "[w-,B2] = 2 v-",
                    &bracket6(&w_m, &b(2)),
                    &v6_scale(&v_m, &Sqrt2Ext::rational(rat_i(2))),
                );
                let m_set = [v6_add(&v_p, &scale_r(&w_m, &c)), v_m.clone(), b(2)];
                if model_reductive(&[w_m.clone()], &m_set) {
                    rep.checked_relations += 1;
                } else {
                    rep.failures.push(String::from("m- not reductive"));
                }
                // The exchange isomorphism between the two lightlike
                // decompositions: w+ -> w-, v+ -> v-, v- + c w+ -> v+ + c w-,
                // B2 -> -B2. Verified as a bracket map and a tau-isometry.
                let g = DiagonalMetric::new(rat_i(-1), rat_i(1), rat_i(1)).unwrap();
                let src = [
                    w_p.clone(),
                    v_p.clone(),
                    v6_add(&v_m, &scale_r(&w_p, &c)),
                    b(2),
                ];
                let dst = [
                    w_m.clone(),
                    v_m.clone(),
                    v6_add(&v_p, &scale_r(&w_m, &c)),
                    scale_r(&b(2), &rat_i(-1)),
                ];
                let mut ok = true;
                for i in 0..4 {
                    for j in 0..4 {
                        let lhs = bracket6(&src[i], &src[j]);
                        let rhs = bracket6(&dst[i], &dst[j]);
                        // Expand lhs in the src basis and map it.
                        match expand_in(&src, &lhs) {
                            Some(co) => {
                                let mut mapped = v6_zero();
                                for (k, ck) in co.iter().enumerate() {
                                    mapped = v6_add(&mapped, &v6_scale(&dst[k], ck));
                                }
                                if !v6_eq(&mapped, &rhs) {
                                    ok = false;
                                }
                            }
                            None => ok = false,
                        }
                    }
                }
                // Isometry on the m part (indices 1..4 of src/dst).
                for i in 1..4 {
                    for j in 1..4 {
                        if tau_inner(&g, &src[i], &src[j]) != tau_inner(&g, &dst[i], &dst[j]) {
                            ok = false;
                        }
                    }
                }
                if ok {
                    rep.checked_relations += 1;
                    rep.notes.push(String::from("lightlike exchange certificate verified"));
                } else {
                    rep.failures.push(String::from("lightlike exchange map fails"));
                }
            }
        }
        DecompositionCase::TwoDim2 => {
            let inv_sqrt2 = Sqrt2Ext::over_sqrt2(Rational::one());
            let w2 = u(2);
            let w_p = v6_scale(&v6_add(&u(0), &u(1)), &inv_sqrt2);
            let w_m = v6_scale(&v6_add(&u(0), &scale_r(&u(1), &rat_i(-1))), &inv_sqrt2);
            let v_p = v6_scale(&v6_add(&b(0), &b(1)), &inv_sqrt2);
            let v_m = v6_scale(&v6_add(&b(0), &scale_r(&b(1), &rat_i(-1))), &inv_sqrt2);
            let v2 = b(2);
            let two = Sqrt2Ext::rational(rat_i(2));
            let neg_two = Sqrt2Ext::rational(rat_i(-2));
            rep.relation("[w2,v+] = 2 v+", &bracket6(&w2, &v_p), &v6_scale(&v_p, &two));
            rep.relation("[w2,v-] = -2 v-", &bracket6(&w2, &v_m), &v6_scale(&v_m, &neg_two));
            rep.relation("[w2,v2] = 0", &bracket6(&w2, &v2), &v6_zero());
            rep.relation("[w+,v+] = 0", &bracket6(&w_p, &v_p), &v6_zero());
            rep.relation("[w+,v-] = -2 v2", &bracket6(&w_p, &v_m), &scale_r(&v2, &rat_i(-2)));
            rep.relation(
                "[w+,v2] = -2 v+",
                &bracket6(&w_p, &v2),
                &v6_scale(&v_p, &neg_two),
            );
            // The printed table carries [w-, v+] = -2 v2; the exact bracket
            // gives +2 v2 (one sign flip). Record the discrepancy and verify
            // the computed value.
            let got = bracket6(&w_m, &v_p);
            if v6_eq(&got, &scale_r(&v2, &rat_i(2))) {
                rep.checked_relations += 1;
                rep.notes.push(String::from(
                    "[w-,v+] evaluates to +2 v2 (one sign differs from the printed table)",
                ));
            } else {
                rep.failures.push(String::from("[w-,v+] has unexpected value"));
            }
            rep.relation("[w-,v-] = 0", &bracket6(&w_m, &v_m), &v6_zero());
            rep.relation(
                "[w-,v2] = 2 v-",
                &bracket6(&w_m, &v2),
                &v6_scale(&v_m, &two),
            );
            // h = span{w+, w2} is a subalgebra and m = span{v+, v-, v2} is
            // h-invariant.
            let h_closed = expand_in(&[w_p.clone(), w2.clone()], &bracket6(&w2, &w_p)).is_some();
            if h_closed {
                rep.checked_relations += 1;
            } else {
                rep.failures.push(String::from("h = span{w+, w2} not closed"));
            }
            if model_reductive(&[w_p.clone(), w2.clone()], &[v_p, v_m, v2]) {
                rep.checked_relations += 1;
            } else {
                rep.failures.push(String::from("m not h-invariant"));
            }
        }
        DecompositionCase::ObstructionIv => {
            // m = span{B0, B1, B2}: every m-m bracket stays in m, so a
            // structure-generated stabilizer (curvature part of the
            // transvection bracket) would have to vanish; no structure
            // realizes this two-dimensional stabilizer.
            let m_set = [b(0), b(1), b(2)];
            let inv_sqrt2 = Sqrt2Ext::over_sqrt2(Rational::one());
            let w_p = v6_scale(&v6_add(&u(0), &u(1)), &inv_sqrt2);
            let h_set = [w_p, u(2)];
            if !model_reductive(&h_set, &m_set) {
                rep.failures.push(String::from("case-iv split not reductive"));
            } else {
                rep.checked_relations += 1;
            }
            for x in &m_set {
                for y in &m_set {
                    let br = bracket6(x, y);
                    if br[0].is_zero() && br[1].is_zero() && br[2].is_zero() {
                        rep.checked_relations += 1;
                    } else {
                        rep.failures
                            .push(String::from("m-m bracket leaks into the stabilizer"));
                    }
                }
            }
            rep.notes.push(String::from(
                "m-m brackets have no stabilizer part: curvature generators of any structure vanish here",
            ));
        }
        DecompositionCase::Full3 => {
            let [c]: [Rational; 1] = params_array(params)?;
            let m_set: [V6; 3] = core::array::from_fn(|i| v6_add(&b(i), &scale_r(&u(i), &c)));
            let h_set: [V6; 3] = core::array::from_fn(u);
            if model_reductive(&h_set, &m_set) {
                rep.checked_relations += 1;
            } else {
                rep.failures.push(String::from("diagonal complement not reductive"));
            }
            // Uniform scaling is forced: solving [m, h] subset m over all
            // linear complements phi: B_i + phi(B_i) leaves exactly the
            // one-parameter diagonal family.
            let dim = forced_complement_dimension();
            if dim == 1 {
                rep.checked_relations += 1;
                rep.notes.push(String::from(
                    "invariant complements form exactly the one-parameter diagonal family",
                ));
            } else {
                rep.failures
                    .push(format!("invariant complement family has dimension {}", dim));
            }
        }
    }
    Ok(rep)
}

/// Dimension of the solution space of `[B_i + phi(B_i), U_b] in m` over all
/// linear maps `phi` into the stabilizer.
fn forced_complement_dimension() -> usize {
    // Unknowns phi[i][a], 9 of them. Membership of a bracket in
    // m = span{B_j + phi(B_j)} means: U-part == phi applied to the B-part.
    // [B_i + sum_a phi[i][a] U_a, U_b]
    //   = [B_i, U_b] + sum_a phi[i][a] [U_a, U_b]
    // with [B_i, U_b] in span B and [U_a, U_b] in span U. The condition is
    // linear in phi once the quadratic term cancels: phi applied to the
    // B-part of [B_i, U_b] appears on the right. The system below collects
    // those linear relations; the quadratic terms cancel identically because
    // [U_a, U_b] matches [B_a, B_b].
    let su = StructureConstants::su11();
    let c = su.c();
    let mut rows: Vec<Vector> = Vec::new();
    // Condition: for all i, b, g:
    //   sum_a phi[i][a] c^g_{a b} - sum_j (-c^j_{b i}) phi[j][g] ... with
    //   [B_i, U_b] = -[U_b, B_i] = -c^k_{b i} B_k.
    for i in 0..3 {
        for bb in 0..3 {
            for gg in 0..3 {
                let mut row = vec![Rational::zero(); 9];
                for a in 0..3 {
                    row[i * 3 + a] = &row[i * 3 + a] + c.get(&[gg, a, bb]);
                }
                for j in 0..3 {
                    let coef = -c.get(&[j, bb, i]).clone();
                    row[j * 3 + gg] = &row[j * 3 + gg] - &coef;
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    9 - linalg::rank(&rows)
}

fn params_array<const N: usize>(params: &[Rational]) -> Result<[Rational; N], CaseParamError> {
    if params.len() != N {
        return Err(CaseParamError::InvalidParams(format!(
            "expected {} parameters, got {}",
            N,
            params.len()
        )));
    }
    Ok(core::array::from_fn(|i| params[i].clone()))
}

fn lin(terms: &[(Rational, V6)]) -> V6 {
    let mut out = v6_zero();
    for (c, v) in terms {
        out = v6_add(&out, &scale_r(v, c));
    }
    out
}

fn scale_r(v: &V6, c: &Rational) -> V6 {
    v6_scale(v, &Sqrt2Ext::rational(c.clone()))
}

/// Expands `target` over the given (independent) vectors, exactly, if
/// possible. Coordinates live in `Q(sqrt 2)`.
pub fn expand_in(basis: &[V6], target: &V6) -> Option<Vec<Sqrt2Ext>> {
    // Solve over Q by splitting every Q(sqrt 2) coordinate into two rational
    // ones: target = sum (x_k + y_k sqrt 2) basis_k.
    let n = basis.len();
    let mut rows: Vec<Vector> = Vec::new();
    let mut rhs: Vector = Vec::new();
    for i in 0..6 {
        // rational part
        let mut row_a: Vector = Vec::with_capacity(2 * n);
        for bv in basis {
            row_a.push(bv[i].a.clone());
            row_a.push(rat_i(2) * &bv[i].b);
        }
        rows.push(row_a);
        rhs.push(target[i].a.clone());
        // sqrt-2 part
        let mut row_b: Vector = Vec::with_capacity(2 * n);
        for bv in basis {
            row_b.push(bv[i].b.clone());
            row_b.push(bv[i].a.clone());
        }
        rows.push(row_b);
        rhs.push(target[i].b.clone());
    }
    let sol = linalg::solve_affine(&rows, &rhs).ok()?;
    if sol.dim() != 0 {
        // Coordinates in a basis should be unique; refuse ambiguity.
        return None;
    }
    Some(
        (0..n)
            .map(|k| Sqrt2Ext {
                a: sol.base[2 * k].clone(),
                b: sol.base[2 * k + 1].clone(),
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn model_is_a_lie_algebra() {
        // Antisymmetry and Jacobi for the six-dimensional table.
        let basis: Vec<V6> = (0..3).map(u).chain((0..3).map(b)).collect();
        for x in &basis {
            for y in &basis {
                let xy = bracket6(x, y);
                let yx = bracket6(y, x);
                let sum = v6_add(&xy, &yx);
                assert!(sum.iter().all(|e| e.is_zero()));
            }
        }
        for x in &basis {
            for y in &basis {
                for z in &basis {
                    let t1 = bracket6(x, &bracket6(y, z));
                    let t2 = bracket6(y, &bracket6(z, x));
                    let t3 = bracket6(z, &bracket6(x, y));
                    let s = v6_add(&v6_add(&t1, &t2), &t3);
                    assert!(s.iter().all(|e| e.is_zero()));
                }
            }
        }
    }

    #[test]
    fn stabilizer_actions_match_adjoint() {
        // U0 acts by 2(theta^1 (x) X2 - theta^2 (x) X1) and friends.
        let a0 = isotropy_action(0);
        assert_eq!(a0[2][1], rat_i(2));
        assert_eq!(a0[1][2], rat_i(-2));
        let a1 = isotropy_action(1);
        assert_eq!(a1[2][0], rat_i(-2));
        assert_eq!(a1[0][2], rat_i(-2));
        let a2 = isotropy_action(2);
        assert_eq!(a2[1][0], rat_i(2));
        assert_eq!(a2[0][1], rat_i(2));
    }

    #[test]
    fn sqrt2_arithmetic() {
        let r2 = Sqrt2Ext {
            a: rat_i(0),
            b: rat_i(1),
        };
        assert_eq!(r2.mul(&r2), Sqrt2Ext::rational(rat_i(2)));
        let inv = Sqrt2Ext::over_sqrt2(rat_i(1));
        assert_eq!(r2.mul(&inv), Sqrt2Ext::rational(rat_i(1)));
    }

    #[test]
    fn rotation_preamble_relations_hold() {
        let rep =
            verify_decomposition_case(DecompositionCase::RotationPreamble, &[rat_i(7), rat_i(3), rat_i(4)])
                .unwrap();
        assert!(rep.passed(), "{:?}", rep.failures);
        // Non-square radicand is rejected with guidance.
        let err = verify_decomposition_case(
            DecompositionCase::RotationPreamble,
            &[rat_i(7), rat_i(1), rat_i(1)],
        );
        assert!(matches!(err, Err(CaseParamError::NotPerfectSquare(_))));
    }

    #[test]
    fn boost_cases_hold_at_perfect_squares() {
        let rep =
            verify_decomposition_case(DecompositionCase::Boost1a, &[rat_i(5), rat_i(4), rat(2, 3)]).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures);
        let rep =
            verify_decomposition_case(DecompositionCase::Boost1b, &[rat_i(4), rat_i(5), rat(-3, 2)]).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures);
    }

    #[test]
    fn lightlike_cases_and_exchange() {
        let rep = verify_decomposition_case(DecompositionCase::Null1cPlus, &[rat(5, 2)]).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures);
        let rep = verify_decomposition_case(DecompositionCase::Null1cMinus, &[rat(5, 2)]).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures);
        assert!(rep.notes.iter().any(|n| n.contains("exchange")));
    }

    #[test]
    fn two_dimensional_case_documents_the_sign() {
        let rep = verify_decomposition_case(DecompositionCase::TwoDim2, &[]).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures);
        assert!(rep.notes.iter().any(|n| n.contains("sign")));
    }

    #[test]
    fn case_iv_obstruction_and_full_case() {
        let rep = verify_decomposition_case(DecompositionCase::ObstructionIv, &[]).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures);
        let rep = verify_decomposition_case(DecompositionCase::Full3, &[rat(1, 3)]).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures);
    }

    #[test]
    fn tabulated_decompositions_verify_with_their_c_values() {
        let g = DiagonalMetric::new(rat_i(-1), rat_i(1), rat_i(1)).unwrap();
        let t = rat(7, 2);
        for fam in [
            FamilyTag::Svol,
            FamilyTag::Slambda,
            FamilyTag::Smu,
            FamilyTag::Snu,
        ] {
            let emb = match_tabulated_decomposition(&g, fam, &t).unwrap();
            // c = (t - mu)/(2 mu) for these rows.
            assert_eq!(emb.c_value, rat(5, 4), "family {:?}", fam);
        }
        let tpos = rat(3, 4);
        let emb = match_tabulated_decomposition(&g, FamilyTag::SnullMinus, &tpos).unwrap();
        assert_eq!(emb.c_value, rat(3, 4));
        let emb = match_tabulated_decomposition(&g, FamilyTag::SnullPlus, &tpos).unwrap();
        assert_eq!(emb.c_value, rat(-3, 4));
    }

    #[test]
    fn degenerate_parameter_is_reported() {
        let g = DiagonalMetric::new(rat_i(-1), rat_i(1), rat_i(1)).unwrap();
        // t = mu makes every family collapse onto S0.
        assert!(matches!(
            match_tabulated_decomposition(&g, FamilyTag::Svol, &rat_i(1)),
            Err(EmbeddingError::Degenerate)
        ));
    }
}
