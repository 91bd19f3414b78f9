//! Small multivariate polynomial toolkit.
//!
//! Polynomials live over a fixed number of variables (the caller keeps the
//! names) with rational coefficients and exponent-vector terms. Everything
//! the branch solver needs is here: affine detection, exact factorization of
//! degree-2 polynomials into affine forms, and a definiteness reduction for
//! sums of squares.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};
use num_traits::{One, Signed, Zero};

use crate::linalg;
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero_poly(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero_poly(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut e = vec![0u32; nvars];
        e[i] = 1;
        let mut p = Self::zero_poly(nvars);
        p.terms.insert(e, Rational::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    fn insert(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                let s = &*old + &c;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    pub fn coeff(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&vec![0u32; self.nvars])
    }

    pub fn is_constant(&self) -> bool {
        self.total_degree() == 0
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero_poly(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &p) in e.iter().enumerate() {
                for _ in 0..p {
                    t = t * &point[i];
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Substitutes polynomials for every variable at once.
    pub fn compose(&self, subs: &[MultiPoly]) -> MultiPoly {
        assert_eq!(subs.len(), self.nvars);
        let out_vars = if subs.is_empty() { 0 } else { subs[0].nvars };
        let mut acc = MultiPoly::zero_poly(out_vars);
        for (e, c) in &self.terms {
            let mut t = MultiPoly::constant(out_vars, c.clone());
            for (i, &p) in e.iter().enumerate() {
                for _ in 0..p {
                    t = &t * &subs[i];
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Substitutes a rational value for variable `i` (variable count is
    /// preserved; the exponent of `i` becomes zero everywhere).
    pub fn substitute_value(&self, i: usize, val: &Rational) -> MultiPoly {
        let mut out = MultiPoly::zero_poly(self.nvars);
        for (e, c) in &self.terms {
            let mut coef = c.clone();
            for _ in 0..e[i] {
                coef = coef * val;
            }
            let mut e2 = e.clone();
            e2[i] = 0;
            out.insert(e2, coef);
        }
        out
    }

    pub fn partial(&self, i: usize) -> MultiPoly {
        let mut out = MultiPoly::zero_poly(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.insert(e2, c * Rational::from_integer(e[i].into()));
        }
        out
    }

    /// Affine view: `Some((gradient, constant))` when the degree is <= 1.
    pub fn as_affine(&self) -> Option<(Vec<Rational>, Rational)> {
        if self.total_degree() > 1 {
            return None;
        }
        let mut grad = vec![Rational::zero(); self.nvars];
        let mut cst = Rational::zero();
        for (e, c) in &self.terms {
            match e.iter().position(|&p| p > 0) {
                None => cst = c.clone(),
                Some(i) => grad[i] = c.clone(),
            }
        }
        Some((grad, cst))
    }

    /// Divides all coefficients by the leading one, making the
    /// lexicographically-largest term monic. Canonical representative of the
    /// scaling class; used for branch deduplication.
    pub fn monic(&self) -> MultiPoly {
        match self.terms.iter().next_back() {
            None => self.clone(),
            Some((_, lead)) => {
                let inv = Rational::one() / lead.clone();
                self.scale(&inv)
            }
        }
    }

    /// The symmetric matrix of the quadratic part, linear gradient, and
    /// constant: `p = x^T A x + b^T x + c` with `A` symmetric.
    fn quadratic_parts(&self) -> (Vec<Vec<Rational>>, Vec<Rational>, Rational) {
        let n = self.nvars;
        let half = Rational::new(1.into(), 2.into());
        let mut a = vec![vec![Rational::zero(); n]; n];
        let mut b = vec![Rational::zero(); n];
        let mut c = Rational::zero();
        for (e, v) in &self.terms {
            let deg: u32 = e.iter().sum();
            match deg {
                0 => c = v.clone(),
                1 => {
                    let i = e.iter().position(|&p| p > 0).unwrap();
                    b[i] = v.clone();
                }
                2 => {
                    let mut pos = Vec::new();
                    for (i, &p) in e.iter().enumerate() {
                        for _ in 0..p {
                            pos.push(i);
                        }
                    }
                    let (i, j) = (pos[0], pos[1]);
                    if i == j {
                        a[i][i] = v.clone();
                    } else {
                        a[i][j] = v * &half;
                        a[j][i] = v * &half;
                    }
                }
                _ => panic!("quadratic_parts called on degree > 2 polynomial"),
            }
        }
        (a, b, c)
    }
}

impl Zero for MultiPoly {
    fn zero() -> Self {
        // A zero polynomial with no variable context; only used transiently
        // by generic scalar code, which immediately adds it to a sized one.
        MultiPoly::zero_poly(0)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

fn unify(a: &MultiPoly, b: &MultiPoly) -> usize {
    if a.nvars == b.nvars {
        a.nvars
    } else if a.terms.is_empty() {
        b.nvars
    } else if b.terms.is_empty() {
        a.nvars
    } else {
        panic!("variable count mismatch: {} vs {}", a.nvars, b.nvars)
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl<'a> Add<&'a MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        let n = unify(self, rhs);
        let mut out = MultiPoly {
            nvars: n,
            terms: if self.nvars == n {
                self.terms.clone()
            } else {
                BTreeMap::new()
            },
        };
        if self.nvars != n {
            for (e, c) in &self.terms {
                out.insert(e.clone(), c.clone());
            }
        }
        for (e, c) in &rhs.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs.neg()
    }
}

impl<'a> Sub<&'a MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        self + &rhs.clone().neg()
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl<'a> Mul<&'a MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero_poly(unify(self, rhs));
        }
        let n = unify(self, rhs);
        let mut out = MultiPoly::zero_poly(n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert(e, c1 * c2);
            }
        }
        out
    }
}

/// Outcome of [`factor_affine`].
#[derive(Clone, Debug, PartialEq)]
pub enum FactorResult {
    /// Already affine; returned unchanged.
    Affine(MultiPoly),
    /// `constant * f1 * f2` reproduces the input exactly.
    Split {
        constant: Rational,
        factors: [MultiPoly; 2],
    },
    NotFactorable,
}

/// Exact factorization of a degree <= 2 polynomial into affine forms over the
/// rationals, when one exists.
pub fn factor_affine(p: &MultiPoly) -> FactorResult {
    assert!(p.total_degree() <= 2, "factor_affine expects degree <= 2");
    if p.total_degree() <= 1 {
        return FactorResult::Affine(p.clone());
    }
    // Variable with a square term: complete the square in it and require the
    // discriminant to be the square of an affine form.
    for i in 0..p.nvars() {
        let mut sq = vec![0u32; p.nvars()];
        sq[i] = 2;
        let a = p.coeff(&sq);
        if a.is_zero() {
            continue;
        }
        // p = a*x_i^2 + b(x')*x_i + c(x')
        let mut b = MultiPoly::zero_poly(p.nvars());
        let mut c = MultiPoly::zero_poly(p.nvars());
        for (e, v) in p.terms() {
            match e[i] {
                0 => c.insert(e.clone(), v.clone()),
                1 => {
                    let mut e2 = e.clone();
                    e2[i] = 0;
                    b.insert(e2, v.clone());
                }
                _ => {}
            }
        }
        let four_a = Rational::from_integer(4.into()) * &a;
        let disc = &(&b * &b) - &c.scale(&four_a);
        let Some(e) = affine_square_root(&disc) else {
            return FactorResult::NotFactorable;
        };
        let two_a = Rational::from_integer(2.into()) * &a;
        let xi = MultiPoly::var(p.nvars(), i);
        let f1 = &(&xi.scale(&two_a) + &b) - &e;
        let f2 = &(&xi.scale(&two_a) + &b) + &e;
        let constant = Rational::one() / four_a;
        debug_assert_eq!((&f1 * &f2).scale(&constant), *p);
        return FactorResult::Split {
            constant,
            factors: [f1, f2],
        };
    }
    // No square term: quadratic part is a sum of cross terms. Take a variable
    // occurring linearly-with-cofactor, p = x_i*B + C; a factorization must be
    // B * (x_i + Q) with Q affine, i.e. B | C.
    for i in 0..p.nvars() {
        if p.degree_in(i) != 1 {
            continue;
        }
        let mut b = MultiPoly::zero_poly(p.nvars());
        let mut c = MultiPoly::zero_poly(p.nvars());
        for (e, v) in p.terms() {
            if e[i] == 1 {
                let mut e2 = e.clone();
                e2[i] = 0;
                b.insert(e2, v.clone());
            } else {
                c.insert(e.clone(), v.clone());
            }
        }
        if b.total_degree() > 1 {
            continue;
        }
        if c.is_zero() {
            return FactorResult::Split {
                constant: Rational::one(),
                factors: [MultiPoly::var(p.nvars(), i), b],
            };
        }
        if let Some(q) = divide_affine(&c, &b) {
            let f1 = &MultiPoly::var(p.nvars(), i) + &q;
            debug_assert_eq!(&f1 * &b, *p);
            return FactorResult::Split {
                constant: Rational::one(),
                factors: [f1, b],
            };
        }
        return FactorResult::NotFactorable;
    }
    FactorResult::NotFactorable
}

/// Affine `E` with `E^2 = d`, if one exists.
fn affine_square_root(d: &MultiPoly) -> Option<MultiPoly> {
    if d.is_zero() {
        return Some(MultiPoly::zero_poly(d.nvars()));
    }
    if d.total_degree() > 2 {
        return None;
    }
    // Leading variable of E: some variable with a square term in d.
    let lead = (0..d.nvars()).find(|&i| {
        let mut e = vec![0u32; d.nvars()];
        e[i] = 2;
        !d.coeff(&e).is_zero()
    });
    let (grad, cst) = match lead {
        None => {
            // d must be a constant perfect square.
            if d.total_degree() > 0 {
                return None;
            }
            let r = crate::rational::exact_sqrt(&d.constant_term())?;
            return Some(MultiPoly::constant(d.nvars(), r));
        }
        Some(l) => {
            let mut sq = vec![0u32; d.nvars()];
            sq[l] = 2;
            let el = crate::rational::exact_sqrt(&d.coeff(&sq))?;
            // Remaining coefficients from the cross terms with x_l.
            let two_el = Rational::from_integer(2.into()) * &el;
            let mut grad = vec![Rational::zero(); d.nvars()];
            grad[l] = el.clone();
            for j in 0..d.nvars() {
                if j == l {
                    continue;
                }
                let mut e = vec![0u32; d.nvars()];
                e[l] = 1;
                e[j] = 1;
                grad[j] = d.coeff(&e) / &two_el;
            }
            let mut e1 = vec![0u32; d.nvars()];
            e1[l] = 1;
            let cst = d.coeff(&e1) / &two_el;
            (grad, cst)
        }
    };
    let mut cand = MultiPoly::constant(d.nvars(), cst);
    for (j, g) in grad.iter().enumerate() {
        cand = &cand + &MultiPoly::var(d.nvars(), j).scale(g);
    }
    if &(&cand * &cand) == d {
        Some(cand)
    } else {
        None
    }
}

/// Quotient `q` with `c = q * b` for affine `b` and `deg q <= 1`, if exact.
fn divide_affine(c: &MultiPoly, b: &MultiPoly) -> Option<MultiPoly> {
    let n = c.nvars();
    // Unknown affine q: n + 1 coefficients; match coefficients of q*b = c.
    let mut unknowns: Vec<MultiPoly> = (0..n).map(|i| MultiPoly::var(n, i)).collect();
    unknowns.push(MultiPoly::constant(n, Rational::one()));
    // Build the linear system over the q-coefficients by expanding q*b
    // symbolically one basis element at a time.
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    let products: Vec<MultiPoly> = unknowns.iter().map(|u| u * b).collect();
    let mut monomials: Vec<Vec<u32>> = Vec::new();
    for p in products.iter().chain(core::iter::once(c)) {
        for (e, _) in p.terms() {
            if !monomials.contains(e) {
                monomials.push(e.clone());
            }
        }
    }
    monomials.sort();
    for e in &monomials {
        rows.push(products.iter().map(|p| p.coeff(e)).collect());
        rhs.push(c.coeff(e));
    }
    let sol = linalg::solve_affine(&rows, &rhs).ok()?;
    let q_coeffs = sol.base;
    let mut q = MultiPoly::constant(n, q_coeffs[n].clone());
    for i in 0..n {
        q = &q + &MultiPoly::var(n, i).scale(&q_coeffs[i]);
    }
    if &(&q * b) == c {
        Some(q)
    } else {
        None
    }
}

/// Outcome of [`definite_reduction`].
#[derive(Clone, Debug, PartialEq)]
pub enum DefiniteOutcome {
    /// Over the reals, `p = 0` forces these affine forms to vanish.
    ForcesZero(Vec<MultiPoly>),
    /// `p = 0` has no real solutions.
    Unsatisfiable,
    /// Not sign-definite (or not recognizably so); no information.
    Indefinite,
}

/// Real-definiteness reduction for a degree-2 polynomial: if
/// `p = sum_k d_k L_k(x)^2 + c` for affine forms `L_k` (an exact symmetric
/// sweep of the augmented matrix, completing squares through the linear
/// part) with all `d_k` of one sign, then `p = 0` either forces every `L_k`
/// to vanish (`c = 0`) or cannot happen (`c` strictly of the same sign).
pub fn definite_reduction(p: &MultiPoly) -> DefiniteOutcome {
    if p.total_degree() != 2 {
        return DefiniteOutcome::Indefinite;
    }
    let (a, b, c) = p.quadratic_parts();
    let n = p.nvars();
    // Augmented symmetric matrix over (x, 1); index n is the homogenizing
    // coordinate, never eligible as a pivot.
    let half = Rational::new(1.into(), 2.into());
    let mut m = vec![vec![Rational::zero(); n + 1]; n + 1];
    for i in 0..n {
        for j in 0..n {
            m[i][j] = a[i][j].clone();
        }
        m[i][n] = &b[i] * &half;
        m[n][i] = &b[i] * &half;
    }
    m[n][n] = c;
    let mut forms: Vec<MultiPoly> = Vec::new();
    let mut sign: i8 = 0;
    let mut processed = vec![false; n];
    loop {
        let Some(k) = (0..n).find(|&k| !processed[k] && !m[k][k].is_zero()) else {
            break;
        };
        let d = m[k][k].clone();
        let s: i8 = if d.is_positive() { 1 } else { -1 };
        if sign == 0 {
            sign = s;
        } else if sign != s {
            return DefiniteOutcome::Indefinite;
        }
        // L_k = x_k + sum_j (m[k][j]/d) x_j + (m[k][n]/d), over live j.
        let mut form = MultiPoly::var(n, k);
        for j in 0..n {
            if j != k && !processed[j] && !m[k][j].is_zero() {
                form = &form + &MultiPoly::var(n, j).scale(&(&m[k][j] / &d));
            }
        }
        form = &form + &MultiPoly::constant(n, &m[k][n] / &d);
        forms.push(form);
        // Schur complement on the live block (including the constant slot).
        let live = |i: usize| i == n || (!processed[i] && i != k);
        for i in 0..=n {
            for j in 0..=n {
                if live(i) && live(j) {
                    let t = &m[k][i] * &m[k][j] / &d;
                    m[i][j] = &m[i][j] - &t;
                }
            }
        }
        for j in 0..=n {
            m[k][j] = Rational::zero();
            m[j][k] = Rational::zero();
        }
        processed[k] = true;
    }
    // Any remaining nonzero entry outside the constant slot means an
    // indefinite block or a leftover linear term.
    for i in 0..=n {
        for j in 0..=n {
            if (i, j) != (n, n) && !m[i][j].is_zero() {
                return DefiniteOutcome::Indefinite;
            }
        }
    }
    if sign == 0 {
        return DefiniteOutcome::Indefinite;
    }
    let c_rem = m[n][n].clone();
    if c_rem.is_zero() {
        DefiniteOutcome::ForcesZero(forms)
    } else if (sign > 0) == c_rem.is_positive() {
        DefiniteOutcome::Unsatisfiable
    } else {
        DefiniteOutcome::Indefinite
    }
}

/// Renders `p` with the given variable names, deterministic term order.
pub fn render(p: &MultiPoly, names: &[&str]) -> alloc::string::String {
    use alloc::string::String;
    if p.is_zero() {
        return String::from("0");
    }
    let mut out = String::new();
    for (e, c) in p.terms() {
        if !out.is_empty() {
            out.push_str(" + ");
        }
        out.push_str(&rational::format_rational(c));
        for (i, &pw) in e.iter().enumerate() {
            for _ in 0..pw {
                out.push('*');
                out.push_str(names[i]);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_i};

    fn x(i: usize) -> MultiPoly {
        MultiPoly::var(4, i)
    }

    #[test]
    fn monomial_product_splits() {
        // x*y - x = x * (y - 1)
        let p = &(&x(0) * &x(1)) - &x(0);
        match factor_affine(&p) {
            FactorResult::Split { constant, factors } => {
                let prod = (&factors[0] * &factors[1]).scale(&constant);
                assert_eq!(prod, p);
                let affine: Vec<_> = factors.iter().map(|f| f.total_degree()).collect();
                assert_eq!(affine, alloc::vec![1, 1]);
            }
            other => panic!("expected split, got {other:?}"),
        }
    }

    #[test]
    fn expanded_product_of_affine_forms_recovered() {
        // (x2 - 1)(x3 + x1) expanded
        let f1 = &x(2) - &MultiPoly::constant(4, rat_i(1));
        let f2 = &x(3) + &x(1);
        let p = &f1 * &f2;
        match factor_affine(&p) {
            FactorResult::Split { constant, factors } => {
                assert_eq!((&factors[0] * &factors[1]).scale(&constant), p);
            }
            other => panic!("expected split, got {other:?}"),
        }
    }

    #[test]
    fn sum_of_squares_does_not_factor() {
        let p = &(&x(0) * &x(0)) + &(&x(1) * &x(1));
        assert_eq!(factor_affine(&p), FactorResult::NotFactorable);
        match definite_reduction(&p) {
            DefiniteOutcome::ForcesZero(forms) => assert_eq!(forms.len(), 2),
            other => panic!("expected ForcesZero, got {other:?}"),
        }
        let q = &p + &MultiPoly::constant(4, rat_i(3));
        assert_eq!(definite_reduction(&q), DefiniteOutcome::Unsatisfiable);
        let r = &p - &MultiPoly::constant(4, rat_i(3));
        assert_eq!(definite_reduction(&r), DefiniteOutcome::Indefinite);
    }

    #[test]
    fn non_diagonal_positive_form_reduces() {
        // x^2 + 2xy + 2y^2 = (x + y)^2 + y^2
        let p = &(&(&x(0) * &x(0)) + &(&x(0) * &x(1)).scale(&rat_i(2))) + &(&x(1) * &x(1)).scale(&rat_i(2));
        match definite_reduction(&p) {
            DefiniteOutcome::ForcesZero(forms) => {
                assert_eq!(forms.len(), 2);
                for f in forms {
                    assert!(f.total_degree() <= 1);
                }
            }
            other => panic!("expected ForcesZero, got {other:?}"),
        }
    }

    #[test]
    fn discriminant_square_root_handles_cross_terms() {
        // (2x - 3y + 1)(x + y - 2) expanded has x^2 coefficient 2
        let f1 = &(&x(0).scale(&rat_i(2)) - &x(1).scale(&rat_i(3))) + &MultiPoly::constant(4, rat_i(1));
        let f2 = &(&x(0) + &x(1)) - &MultiPoly::constant(4, rat_i(2));
        let p = &f1 * &f2;
        match factor_affine(&p) {
            FactorResult::Split { constant, factors } => {
                assert_eq!((&factors[0] * &factors[1]).scale(&constant), p);
            }
            other => panic!("expected split, got {other:?}"),
        }
    }

    #[test]
    fn compose_substitutes_parametrization() {
        // p = x0 * x1 with x0 = 1 + u, x1 = 2u  ->  2u + 2u^2
        let p2 = MultiPoly {
            nvars: 2,
            terms: [(alloc::vec![1, 1], rat_i(1))].into_iter().collect(),
        };
        let u = MultiPoly::var(1, 0);
        let s0 = &MultiPoly::constant(1, rat_i(1)) + &u;
        let s1 = u.scale(&rat_i(2));
        let q = p2.compose(&[s0, s1]);
        assert_eq!(q.eval(&[rat(1, 2)]), rat(3, 2));
        assert_eq!(q.total_degree(), 2);
    }

    #[test]
    fn partial_derivative_is_exact() {
        // d/dx0 (x0^2 x1 + 3 x0) = 2 x0 x1 + 3
        let p = &(&(&x(0) * &x(0)) * &x(1)) + &x(0).scale(&rat_i(3));
        let d = p.partial(0);
        assert_eq!(d.eval(&[rat_i(2), rat_i(5), rat_i(0), rat_i(0)]), rat_i(23));
    }
}
