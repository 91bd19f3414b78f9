//! Holonomy algebras of canonical connections, the transvection algebra
//! rebuilt from a structure tensor, and exact verification of Jacobi,
//! reductivity, and isomorphism certificates.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::lie::{curvature, koszul_connection, DiagonalMetric, StructureConstants};
use crate::linalg::{self, Matrix, Vector};
use crate::rational::Rational;
use crate::structures::HomogeneousStructure;
use crate::tensor::DIM;

/// Span of the curvature endomorphisms of a canonical connection.
#[derive(Clone, Debug)]
pub struct HolonomySpan {
    /// The three generators `Rt(X_0,X_1), Rt(X_1,X_2), Rt(X_2,X_0)` as 3x3
    /// matrices (rows = output components).
    pub generators: [Matrix; 3],
    /// A linearly independent subset spanning them.
    pub basis: Vec<Matrix>,
}

fn flatten(m: &Matrix) -> Vector {
    m.iter().flat_map(|r| r.iter().cloned()).collect()
}

impl HolonomySpan {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn coords_of(&self, m: &Matrix) -> Option<Vector> {
        let basis: Vec<Vector> = self.basis.iter().map(flatten).collect();
        linalg::coords_in_span(&basis, &flatten(m))
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.coords_of(m).is_some()
    }
}

fn commutator(a: &Matrix, b: &Matrix) -> Matrix {
    let ab = linalg::matmul(a, b);
    let ba = linalg::matmul(b, a);
    (0..DIM)
        .map(|i| (0..DIM).map(|j| &ab[i][j] - &ba[i][j]).collect())
        .collect()
}

/// Curvature endomorphisms of `nabla - S` and their exact span. Checks that
/// each generator is skew for `g` and that the span closes under commutator.
pub fn holonomy_algebra(
    alg: &StructureConstants,
    g: &DiagonalMetric,
    s: &HomogeneousStructure,
) -> HolonomySpan {
    let lc = koszul_connection(alg, g);
    let tilde = s.canonical_connection(&lc, g);
    let rt = curvature(&tilde, alg);
    let pairs = [(0usize, 1usize), (1, 2), (2, 0)];
    let generators: [Matrix; 3] = core::array::from_fn(|p| {
        let (i, j) = pairs[p];
        rt.endomorphism(i, j)
    });
    for gen in &generators {
        // g-skewness: g(U x, y) + g(x, U y) = 0.
        for x in 0..DIM {
            for y in 0..DIM {
                let lhs = g.diag(y) * &gen[y][x] + g.diag(x) * &gen[x][y];
                assert!(lhs.is_zero(), "curvature endomorphism must be skew");
            }
        }
    }
    let mut basis: Vec<Matrix> = Vec::new();
    for gen in &generators {
        let flat: Vec<Vector> = basis.iter().map(flatten).collect();
        if !linalg::in_span(&flat, &flatten(gen)) {
            basis.push(gen.clone());
        }
    }
    let span = HolonomySpan { generators, basis };
    // Closure under commutator.
    for a in &span.basis {
        for b in &span.basis {
            assert!(
                span.contains(&commutator(a, b)),
                "holonomy span must close under commutator"
            );
        }
    }
    span
}

/// Finite Lie algebra presentation with a reductive split and a metric on
/// the `m` part.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebraPresentation {
    pub names: Vec<String>,
    /// `bracket[i][j]` = coordinates of `[e_i, e_j]`.
    pub bracket: Vec<Vec<Vector>>,
    pub h_idx: Vec<usize>,
    pub m_idx: Vec<usize>,
    /// Symmetric matrix over the `m` basis.
    pub metric_on_m: Matrix,
}

#[derive(Clone, Debug, PartialEq)]
pub enum PresentationError {
    Antisymmetry(usize, usize),
    Jacobi(usize, usize, usize),
    NotReductive(usize, usize, String),
    MetricNotInvariant(usize, usize, usize),
}

impl LieAlgebraPresentation {
    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn bracket_vectors(&self, x: &Vector, y: &Vector) -> Vector {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let c = &x[i] * &y[j];
                for (o, b) in out.iter_mut().zip(&self.bracket[i][j]) {
                    *o = &*o + &(&c * b);
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::one();
        v
    }

    pub fn check_antisymmetry_and_jacobi(&self) -> Result<(), PresentationError> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ab = &self.bracket[i][j];
                let ba = &self.bracket[j][i];
                for k in 0..n {
                    if ab[k] != -ba[k].clone() {
                        return Err(PresentationError::Antisymmetry(i, j));
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut s = vec![Rational::zero(); n];
                    let t1 = self.bracket_vectors(&self.basis_vector(i), &self.bracket[j][k]);
                    let t2 = self.bracket_vectors(&self.basis_vector(j), &self.bracket[k][i]);
                    let t3 = self.bracket_vectors(&self.basis_vector(k), &self.bracket[i][j]);
                    for l in 0..n {
                        s[l] = &t1[l] + &t2[l] + &t3[l];
                    }
                    if s.iter().any(|x| !x.is_zero()) {
                        return Err(PresentationError::Jacobi(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// `[h, m] subset m` plus `h`-invariance of the metric on `m`.
    pub fn check_reductive(&self) -> Result<(), PresentationError> {
        for &u in &self.h_idx {
            for (mi, &x) in self.m_idx.iter().enumerate() {
                let br = &self.bracket[u][x];
                for &hh in &self.h_idx {
                    if !br[hh].is_zero() {
                        return Err(PresentationError::NotReductive(
                            u,
                            x,
                            format!("[{}row,{}] leaks into h", u, x),
                        ));
                    }
                }
                let _ = mi;
            }
        }
        // Metric invariance: g([u,x], y) + g(x, [u,y]) = 0 on the m part.
        let m_of = |v: &Vector| -> Vector {
            self.m_idx.iter().map(|&i| v[i].clone()).collect()
        };
        let inner = |a: &Vector, b: &Vector| -> Rational {
            let mut s = Rational::zero();
            for (i, ai) in a.iter().enumerate() {
                for (j, bj) in b.iter().enumerate() {
                    s = s + ai * bj * &self.metric_on_m[i][j];
                }
            }
            s
        };
        for &u in &self.h_idx {
            for (xi, &x) in self.m_idx.iter().enumerate() {
                for (yi, &y) in self.m_idx.iter().enumerate() {
                    let ux = m_of(&self.bracket[u][x]);
                    let uy = m_of(&self.bracket[u][y]);
                    let mut ex = vec![Rational::zero(); self.m_idx.len()];
                    ex[xi] = Rational::one();
                    let mut ey = vec![Rational::zero(); self.m_idx.len()];
                    ey[yi] = Rational::one();
                    if !(inner(&ux, &ey) + inner(&ex, &uy)).is_zero() {
                        return Err(PresentationError::MetricNotInvariant(u, x, y));
                    }
                }
            }
        }
        Ok(())
    }
}

/// The transvection algebra of `(g, S)`: holonomy basis followed by the
/// frame, with brackets `[U,V] = UV - VU`, `[U,X] = U(X)` and
/// `[X,Y] = S_X Y - S_Y X - Rt(X,Y)`.
pub fn build_transvection_algebra(
    alg: &StructureConstants,
    g: &DiagonalMetric,
    s: &HomogeneousStructure,
) -> LieAlgebraPresentation {
    let span = holonomy_algebra(alg, g, s);
    let hd = span.dimension();
    let n = hd + DIM;
    let mut bracket = vec![vec![vec![Rational::zero(); n]; n]; n];
    // [U_a, U_b]
    for a in 0..hd {
        for b in 0..hd {
            let c = commutator(&span.basis[a], &span.basis[b]);
            let co = span.coords_of(&c).expect("span closes under commutator");
            for (k, v) in co.into_iter().enumerate() {
                bracket[a][b][k] = v;
            }
        }
    }
    // [U_a, X_i] = U_a(X_i)
    for a in 0..hd {
        for i in 0..DIM {
            for k in 0..DIM {
                bracket[a][hd + i][hd + k] = span.basis[a][k][i].clone();
                bracket[hd + i][a][hd + k] = -span.basis[a][k][i].clone();
            }
        }
    }
    // [X_i, X_j] = S_{X_i} X_j - S_{X_j} X_i - Rt(X_i, X_j)
    let pairs = [(0usize, 1usize), (1, 2), (2, 0)];
    for (p, (i, j)) in pairs.into_iter().enumerate() {
        let sij = s.apply(g, i, j);
        let sji = s.apply(g, j, i);
        let rt_coords = span
            .coords_of(&span.generators[p])
            .expect("generator lies in its own span");
        for k in 0..DIM {
            bracket[hd + i][hd + j][hd + k] = &sij[k] - &sji[k];
            bracket[hd + j][hd + i][hd + k] = &sji[k] - &sij[k];
        }
        for (a, c) in rt_coords.into_iter().enumerate() {
            bracket[hd + i][hd + j][a] = -c.clone();
            bracket[hd + j][hd + i][a] = c;
        }
    }
    let mut names: Vec<String> = (0..hd).map(|a| format!("U{}", a)).collect();
    for i in 0..DIM {
        names.push(format!("X{}", i));
    }
    let metric_on_m = (0..DIM)
        .map(|i| (0..DIM).map(|j| g.entry(i, j)).collect())
        .collect();
    let p = LieAlgebraPresentation {
        names,
        bracket,
        h_idx: (0..hd).collect(),
        m_idx: (hd..n).collect(),
        metric_on_m,
    };
    p.check_antisymmetry_and_jacobi()
        .expect("transvection algebra of a parallel structure satisfies Jacobi");
    p
}

/// The torsion identity tying the transvection bracket back to the
/// canonical connection: for frame vectors, the torsion of `nabla - S`
/// equals minus the `m`-part of the transvection bracket,
/// `(nabla-S)_x y - (nabla-S)_y x - [x,y]_alg = -[x,y]^m_transvection`.
pub fn reconstruction_identity_holds(
    p: &LieAlgebraPresentation,
    alg: &StructureConstants,
    g: &DiagonalMetric,
    s: &HomogeneousStructure,
) -> bool {
    let lc = koszul_connection(alg, g);
    let tilde = s.canonical_connection(&lc, g);
    let hd = p.h_idx.len();
    for i in 0..DIM {
        for j in 0..DIM {
            let tr = &p.bracket[hd + i][hd + j];
            let mut ei = vec![Rational::zero(); 3];
            ei[i] = Rational::one();
            let mut ej = vec![Rational::zero(); 3];
            ej[j] = Rational::one();
            let su = alg.bracket(&ei, &ej);
            for k in 0..DIM {
                let torsion =
                    tilde.gamma.get(&[k, i, j]) - tilde.gamma.get(&[k, j, i]) - &su[k];
                if torsion != -tr[hd + k].clone() {
                    return false;
                }
            }
        }
    }
    true
}

/// An explicit linear map between presentations, claimed to be a Lie algebra
/// isomorphism preserving the split and the metric.
#[derive(Clone, Debug)]
pub struct IsomorphismCertificate {
    pub source: LieAlgebraPresentation,
    pub target: LieAlgebraPresentation,
    /// `map[j][i]`: image of source basis `i` has coordinate `j` in target.
    pub map: Matrix,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq)]
pub enum CertificateError {
    DimensionMismatch,
    NotInvertible,
    BracketFails(usize, usize),
    SplitFails(&'static str),
    NotIsometric(usize, usize),
}

/// Verifies bracket preservation, split preservation, invertibility, and
/// that the `m`-restriction is a linear isometry.
pub fn verify_isomorphism(cert: &IsomorphismCertificate) -> Result<(), CertificateError> {
    let n = cert.source.dim();
    if cert.target.dim() != n || cert.map.len() != n {
        return Err(CertificateError::DimensionMismatch);
    }
    if linalg::inverse(&cert.map).is_none() {
        return Err(CertificateError::NotInvertible);
    }
    let image = |v: &Vector| linalg::matvec(&cert.map, v);
    for i in 0..n {
        for j in 0..n {
            let lhs = image(&cert.source.bracket[i][j]);
            let rhs = cert
                .target
                .bracket_vectors(&image(&cert.source.basis_vector(i)), &image(&cert.source.basis_vector(j)));
            if lhs != rhs {
                return Err(CertificateError::BracketFails(i, j));
            }
        }
    }
    // Split preservation: h -> h', m -> m'.
    let h_span: Vec<Vector> = cert
        .target
        .h_idx
        .iter()
        .map(|&i| cert.target.basis_vector(i))
        .collect();
    let m_span: Vec<Vector> = cert
        .target
        .m_idx
        .iter()
        .map(|&i| cert.target.basis_vector(i))
        .collect();
    for &i in &cert.source.h_idx {
        if !linalg::in_span(&h_span, &image(&cert.source.basis_vector(i))) {
            return Err(CertificateError::SplitFails("h"));
        }
    }
    for &i in &cert.source.m_idx {
        if !linalg::in_span(&m_span, &image(&cert.source.basis_vector(i))) {
            return Err(CertificateError::SplitFails("m"));
        }
    }
    // Isometry on m.
    let tgt_m = |v: &Vector| -> Vector {
        cert.target.m_idx.iter().map(|&k| v[k].clone()).collect()
    };
    let inner_tgt = |a: &Vector, b: &Vector| -> Rational {
        let mut s = Rational::zero();
        for (i, ai) in a.iter().enumerate() {
            for (j, bj) in b.iter().enumerate() {
                s = s + ai * bj * &cert.target.metric_on_m[i][j];
            }
        }
        s
    };
    for (si, &i) in cert.source.m_idx.iter().enumerate() {
        for (sj, &j) in cert.source.m_idx.iter().enumerate() {
            let gi = tgt_m(&image(&cert.source.basis_vector(i)));
            let gj = tgt_m(&image(&cert.source.basis_vector(j)));
            if inner_tgt(&gi, &gj) != cert.source.metric_on_m[si][sj] {
                return Err(CertificateError::NotIsometric(i, j));
            }
        }
    }
    Ok(())
}

/// Builds a certificate between two transvection presentations with
/// one-dimensional (or zero) holonomy from a frame isometry `L`
/// (`map_m[k][i]`: image of `X_i`). The holonomy part is forced: an
/// isomorphism must conjugate the curvature endomorphisms, so `U` maps to
/// `L U L^{-1}` expressed in the target holonomy basis.
pub fn certificate_from_frame_map(
    source: &LieAlgebraPresentation,
    source_span: &HolonomySpan,
    target: &LieAlgebraPresentation,
    target_span: &HolonomySpan,
    map_m: &Matrix,
    label: &str,
) -> Result<IsomorphismCertificate, String> {
    let hd_s = source.h_idx.len();
    let hd_t = target.h_idx.len();
    if hd_s != hd_t {
        return Err(String::from("holonomy dimensions differ"));
    }
    let n = source.dim();
    let inv = linalg::inverse(map_m).ok_or_else(|| String::from("frame map not invertible"))?;
    let mut full = vec![vec![Rational::zero(); n]; n];
    for a in 0..hd_s {
        let conj = linalg::matmul(&linalg::matmul(map_m, &source_span.basis[a]), &inv);
        let co = target_span
            .coords_of(&conj)
            .ok_or_else(|| String::from("conjugated generator leaves the target span"))?;
        for (b, c) in co.into_iter().enumerate() {
            full[b][a] = c;
        }
    }
    for i in 0..DIM {
        for k in 0..DIM {
            full[hd_t + k][hd_s + i] = map_m[k][i].clone();
        }
    }
    Ok(IsomorphismCertificate {
        source: source.clone(),
        target: target.clone(),
        map: full,
        label: String::from(label),
    })
}

/// Verifies the adapted-basis relations for the one-parameter families: the
/// four-dimensional transvection algebra carries a basis
/// `(Uhat, X0hat, X1hat, X2hat)` with `Uhat` central and the hatted frame
/// satisfying the standard bracket table.
pub fn hatted_basis_check(
    alg: &StructureConstants,
    g: &DiagonalMetric,
    family: crate::structures::FamilyTag,
    t: &Rational,
) -> Result<(), String> {
    use crate::structures::FamilyTag;
    let s = crate::structures::catalog_family(family, g, t)
        .map_err(|e| alloc::format!("{:?}", e))?;
    if s.degenerate_at.is_some() {
        return Err(String::from("degenerate parameter"));
    }
    let s = s.structure;
    let p = build_transvection_algebra(alg, g, &s);
    if p.h_idx.len() != 1 {
        return Err(String::from("expected one-dimensional holonomy"));
    }
    let span = holonomy_algebra(alg, g, &s);
    let two = crate::rational::rat_i(2);
    // The distinguished generator and the hatted combination per family.
    let (u_mat, coef_u_in_uhat, coef_u_in_xhat, frame_idx): (Matrix, Rational, Rational, usize) =
        match family {
            FamilyTag::Slambda => {
                // U = 2(theta^1 (x) X2 - theta^2 (x) X1);
                // Uhat = -((lambda - t)/2mu) U - X0,
                // X0hat = X0 + ((lambda - t + 2mu)/2mu) U.
                let mut u = vec![vec![Rational::zero(); 3]; 3];
                u[2][1] = two.clone();
                u[1][2] = -two.clone();
                let two_mu = &two * &g.mu;
                let a = (&g.lambda - t) / &two_mu;
                let b = (&g.lambda - t + &two_mu) / &two_mu;
                (u, -a, b, 0)
            }
            FamilyTag::Smu => {
                // U = 2(theta^2 (x) X0 + theta^0 (x) X2);
                // Uhat = -((mu + t)/2nu) U - X1,
                // X1hat = X1 - ((2nu - mu - t)/2nu) U.
                let mut u = vec![vec![Rational::zero(); 3]; 3];
                u[0][2] = two.clone();
                u[2][0] = two.clone();
                let two_nu = &two * &g.nu;
                let pcoef = (&g.mu + t) / &two_nu;
                let qcoef = (&two_nu - &g.mu - t) / &two_nu;
                (u, -pcoef, -qcoef, 1)
            }
            _ => return Err(String::from("adapted basis defined for the one-parameter families")),
        };
    let u_coord = span
        .coords_of(&u_mat)
        .ok_or_else(|| String::from("distinguished generator outside the holonomy span"))?[0]
        .clone();
    let n = p.dim();
    let mut uhat = vec![Rational::zero(); n];
    uhat[0] = &coef_u_in_uhat * &u_coord;
    uhat[1 + frame_idx] = -Rational::one();
    let mut hats: Vec<Vector> = (0..3)
        .map(|i| {
            let mut v = vec![Rational::zero(); n];
            v[1 + i] = Rational::one();
            v
        })
        .collect();
    hats[frame_idx][0] = &coef_u_in_xhat * &u_coord;
    let br = |x: &Vector, y: &Vector| p.bracket_vectors(x, y);
    let scaled = |v: &Vector, c: &Rational| -> Vector { v.iter().map(|x| x * c).collect() };
    let checks = [
        (br(&hats[0], &hats[1]), scaled(&hats[2], &two)),
        (br(&hats[1], &hats[2]), scaled(&hats[0], &-two.clone())),
        (br(&hats[2], &hats[0]), scaled(&hats[1], &two)),
    ];
    for (got, want) in checks {
        if got != want {
            return Err(String::from("hatted frame fails the standard table"));
        }
    }
    for h in &hats {
        if br(&uhat, h).iter().any(|x| !x.is_zero()) {
            return Err(String::from("hatted center is not central"));
        }
    }
    Ok(())
}

/// Identity certificate on a presentation.
pub fn identity_certificate(p: &LieAlgebraPresentation) -> IsomorphismCertificate {
    IsomorphismCertificate {
        source: p.clone(),
        target: p.clone(),
        map: linalg::identity(p.dim()),
        label: String::from("identity"),
    }
}
