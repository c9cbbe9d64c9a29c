//! Sparse multivariate polynomials over the rationals.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::monomial::{Monomial, MonomialOrder, MAX_VARS};
use super::scalar::Scalar;
use crate::error::{arg, Result};

/// A polynomial in `arity` variables with exact rational coefficients.
///
/// Terms live in a `BTreeMap` keyed by exponent vector, so equality and
/// hashing are structural. No stored coefficient is ever zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    arity: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(arity: usize) -> Self {
        assert!(arity <= MAX_VARS, "arity {arity} exceeds {MAX_VARS}");
        Polynomial { arity, terms: BTreeMap::new() }
    }

    pub fn constant(arity: usize, c: Scalar) -> Self {
        Polynomial::term(c, Monomial::one(arity))
    }

    pub fn term(c: Scalar, m: Monomial) -> Self {
        let mut p = Polynomial::zero(m.arity());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        Polynomial::term(Scalar::one(), m)
    }

    pub fn var(arity: usize, index: usize) -> Self {
        Polynomial::monomial(Monomial::var(arity, index))
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I>(arity: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Scalar, Monomial)>,
    {
        let mut p = Polynomial::zero(arity);
        for (c, m) in terms {
            assert_eq!(m.arity(), arity, "monomial arity mismatch");
            p.add_term(m, &c);
        }
        p
    }

    /// Integer-coefficient convenience constructor for the affine plane:
    /// each entry is `(c, i, j)` meaning `c x^i y^j`.
    pub fn from_xy(terms: &[(i64, u32, u32)]) -> Self {
        Polynomial::from_terms(2, terms.iter().map(|&(c, i, j)| (Scalar::from_int(c), Monomial::xy(i, j))))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Scalar)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Lowest total degree of a term (the order at the origin); `None` for zero.
    pub fn lowest_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.lowest_degree()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&Monomial::one(self.arity))
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(Monomial, &Scalar)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0)).map(|(m, c)| (*m, c))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// Terms sorted strictly decreasing under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Monomial, Scalar)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = lc.inverse().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.arity);
        }
        Polynomial { arity: self.arity, terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial { arity: self.arity, terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::constant(self.arity, Scalar::one());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn partial_derivative(&self, var: usize) -> Result<Polynomial> {
        if var >= self.arity {
            return arg(format!("variable index {var} out of range for {} variables", self.arity));
        }
        let mut out = Polynomial::zero(self.arity);
        for (m, c) in &self.terms {
            let e = m.exp(var);
            if e == 0 {
                continue;
            }
            let reduced = m.checked_div(&Monomial::var(self.arity, var)).expect("divisible");
            out.add_term(reduced, &(c * &Scalar::from_int(e as i64)));
        }
        Ok(out)
    }

    /// All partial derivatives, in variable order.
    pub fn gradient(&self) -> Vec<Polynomial> {
        (0..self.arity).map(|i| self.partial_derivative(i).expect("index in range")).collect()
    }

    /// Sum of the terms of total degree exactly `k`.
    pub fn homogeneous_component(&self, k: u32) -> Polynomial {
        self.filter_terms(|m| m.degree() == k)
    }

    /// Sum of the terms of total degree strictly below `r`.
    pub fn truncate_below(&self, r: u32) -> Polynomial {
        self.filter_terms(|m| m.degree() < r)
    }

    /// The lowest-degree homogeneous component (the initial form at the origin).
    pub fn initial_form(&self) -> Polynomial {
        match self.lowest_degree() {
            Some(k) => self.homogeneous_component(k),
            None => self.clone(),
        }
    }

    fn filter_terms(&self, keep: impl Fn(&Monomial) -> bool) -> Polynomial {
        Polynomial {
            arity: self.arity,
            terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (*m, c.clone())).collect(),
        }
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.arity {
            return arg(format!("point has {} coordinates, expected {}", point.len(), self.arity));
        }
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, x) in point.iter().enumerate() {
                let e = m.exp(v);
                if e > 0 {
                    t *= &x.pow(e);
                }
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Replaces variable `i` by `images[i]`; all images must share one arity,
    /// which becomes the arity of the result.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.arity {
            return arg(format!("{} images given for {} variables", images.len(), self.arity));
        }
        let target = images.first().map(Polynomial::arity).unwrap_or(0);
        if images.iter().any(|p| p.arity != target) {
            return arg("substitution images have mixed arity");
        }
        // powers[i][e] = images[i]^e, grown on demand
        let mut powers: Vec<Vec<Polynomial>> =
            images.iter().map(|_| vec![Polynomial::constant(target, Scalar::one())]).collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, img) in images.iter().enumerate() {
                let e = m.exp(i) as usize;
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * img;
                    powers[i].push(next);
                }
                if e > 0 {
                    t = &t * &powers[i][e];
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// `f(x + p)`: moves the point `p` to the origin.
    pub fn translate(&self, point: &[Scalar]) -> Result<Polynomial> {
        if point.len() != self.arity {
            return arg(format!("point has {} coordinates, expected {}", point.len(), self.arity));
        }
        if point.iter().all(Scalar::is_zero) {
            return Ok(self.clone());
        }
        let images: Vec<_> = point
            .iter()
            .enumerate()
            .map(|(i, p)| &Polynomial::var(self.arity, i) + &Polynomial::constant(self.arity, p.clone()))
            .collect();
        self.substitute(&images)
    }
}

impl std::fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let order = MonomialOrder::new(super::monomial::OrderKind::Grlex, self.arity);
        f.write_str(&crate::expr::render_poly(self, &order))
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Debug::fmt(self, f)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        let mut out = Polynomial::zero(self.arity);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&Scalar::from_int(-1))
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
