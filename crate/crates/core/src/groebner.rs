//! Multivariate division and Buchberger's algorithm.
//!
//! Internally polynomials are kept as term vectors sorted ascending under
//! the active order, so the leading term is the last element and each
//! reduction step is a single linear merge.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::algebra::{Monomial, MonomialOrder, Polynomial, Scalar};
use crate::error::{arg, Result};

/// Terms sorted ascending under an order; no zero coefficients.
#[derive(Clone, Debug)]
struct SortedPoly {
    terms: Vec<(Monomial, Scalar)>,
}

impl SortedPoly {
    fn from_poly(p: &Polynomial, order: &MonomialOrder) -> Self {
        let mut terms: Vec<_> = p.terms().map(|(m, c)| (*m, c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        SortedPoly { terms }
    }

    fn to_poly(&self, arity: usize) -> Polynomial {
        Polynomial::from_terms(arity, self.terms.iter().map(|(m, c)| (c.clone(), *m)))
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> Monomial {
        self.terms.last().expect("nonzero").0
    }

    fn lc(&self) -> &Scalar {
        &self.terms.last().expect("nonzero").1
    }

    fn make_monic(&mut self) {
        if let Some(inv) = self.terms.last().and_then(|t| t.1.inverse()) {
            for t in &mut self.terms {
                t.1 *= &inv;
            }
        }
    }

    /// `self - coeff * mono * g`.
    fn sub_scaled(&self, coeff: &Scalar, mono: &Monomial, g: &SortedPoly, order: &MonomialOrder) -> SortedPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(m, c)| (m.mul(mono), c)).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    let (m, c) = b.next().unwrap();
                    out.push((m, -(c * coeff)));
                }
                (Some((ma, _)), Some((mb, _))) => match order.cmp(ma, mb) {
                    Ordering::Less => out.push(a.next().unwrap().clone()),
                    Ordering::Greater => {
                        let (m, c) = b.next().unwrap();
                        out.push((m, -(c * coeff)));
                    }
                    Ordering::Equal => {
                        let (m, ca) = a.next().unwrap();
                        let (_, cb) = b.next().unwrap();
                        let v = ca - &(cb * coeff);
                        if !v.is_zero() {
                            out.push((*m, v));
                        }
                    }
                },
            }
        }
        SortedPoly { terms: out }
    }
}

/// Reduces `f` fully against `basis`, always using the first divisor in
/// sequence order. Returns the remainder, and the quotients when asked.
fn reduce(
    f: SortedPoly,
    basis: &[&SortedPoly],
    order: &MonomialOrder,
    mut quotients: Option<&mut Vec<Vec<(Monomial, Scalar)>>>,
) -> SortedPoly {
    let mut p = f;
    let mut rem: Vec<(Monomial, Scalar)> = Vec::new();
    while let Some((m, c)) = p.terms.last() {
        let m = *m;
        let divisor = basis.iter().position(|g| g.lm().divides(&m));
        match divisor {
            Some(i) => {
                let g = basis[i];
                let q = c / g.lc();
                let mono = m.checked_div(&g.lm()).unwrap();
                p = p.sub_scaled(&q, &mono, g, order);
                if let Some(qs) = quotients.as_deref_mut() {
                    qs[i].push((mono, q));
                }
            }
            None => rem.push(p.terms.pop().unwrap()),
        }
    }
    rem.reverse();
    SortedPoly { terms: rem }
}

fn check_arity(polys: &[Polynomial], order: &MonomialOrder) -> Result<usize> {
    let arity = order.arity();
    if polys.iter().any(|p| p.arity() != arity) {
        return arg(format!("polynomials must have {arity} variables to match the order"));
    }
    Ok(arity)
}

/// Multivariate division: `f = sum q_i b_i + r` with no term of `r`
/// divisible by any leading monomial of the basis.
pub fn divide(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Result<(Vec<Polynomial>, Polynomial)> {
    if basis.is_empty() {
        return arg("division by an empty basis");
    }
    if basis.iter().any(Polynomial::is_zero) {
        return arg("division by the zero polynomial");
    }
    let arity = check_arity(std::slice::from_ref(f), order)?;
    check_arity(basis, order)?;
    let sorted: Vec<_> = basis.iter().map(|b| SortedPoly::from_poly(b, order)).collect();
    let refs: Vec<_> = sorted.iter().collect();
    let mut qs = vec![Vec::new(); basis.len()];
    let r = reduce(SortedPoly::from_poly(f, order), &refs, order, Some(&mut qs));
    let quotients =
        qs.into_iter().map(|terms| Polynomial::from_terms(arity, terms.into_iter().map(|(m, c)| (c, m)))).collect();
    Ok((quotients, r.to_poly(arity)))
}

fn s_poly_sorted(g: &SortedPoly, h: &SortedPoly, order: &MonomialOrder) -> SortedPoly {
    let lcm = g.lm().lcm(&h.lm());
    let mg = lcm.checked_div(&g.lm()).unwrap();
    let mh = lcm.checked_div(&h.lm()).unwrap();
    let cg = g.lc().inverse().unwrap();
    let ch = h.lc().inverse().unwrap();
    // (lcm / LT(g)) g - (lcm / LT(h)) h, built as 0 - (-cg) mg g - ch mh h
    let zero = SortedPoly { terms: Vec::new() };
    zero.sub_scaled(&-&cg, &mg, g, order).sub_scaled(&ch, &mh, h, order)
}

/// The S-polynomial `(lcm/LT(g)) g - (lcm/LT(h)) h`, with leading terms
/// including their coefficients.
pub fn s_polynomial(g: &Polynomial, h: &Polynomial, order: &MonomialOrder) -> Result<Polynomial> {
    if g.is_zero() || h.is_zero() {
        return arg("S-polynomial of the zero polynomial");
    }
    let arity = check_arity(&[g.clone(), h.clone()], order)?;
    let s = s_poly_sorted(&SortedPoly::from_poly(g, order), &SortedPoly::from_poly(h, order), order);
    Ok(s.to_poly(arity))
}

/// A Gröbner basis tagged with its order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    generators: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn arity(&self) -> usize {
        self.order.arity()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators.iter().map(|g| g.leading_monomial(&self.order).expect("nonzero generator")).collect()
    }

    /// Normal form of `f` modulo the ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        Ok(divide(f, &self.generators, &self.order)?.1)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Whether the basis generates the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_constant()
    }

    /// Structural check of the reduced-basis invariants: monic, sorted by
    /// leading monomial descending, and no term of any generator divisible by
    /// the leading monomial of another.
    pub fn satisfies_reduced_invariants(&self) -> bool {
        let lms = self.leading_monomials();
        for (i, g) in self.generators.iter().enumerate() {
            if !g.leading_term(&self.order).is_some_and(|(_, c)| c.is_one()) {
                return false;
            }
            if i > 0 && self.order.cmp(&lms[i - 1], &lms[i]) != Ordering::Greater {
                return false;
            }
            for (j, lm) in lms.iter().enumerate() {
                if i != j && g.terms().any(|(m, _)| lm.divides(m)) {
                    return false;
                }
            }
        }
        true
    }

    /// Whether every S-polynomial of generator pairs reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let gens = &self.generators;
        (0..gens.len()).all(|i| {
            (i + 1..gens.len()).all(|j| {
                let s = s_polynomial(&gens[i], &gens[j], &self.order).expect("nonzero generators");
                self.normal_form(&s).expect("matching arity").is_zero()
            })
        })
    }
}

/// Buchberger's algorithm with the normal selection strategy, the coprime
/// and chain criteria, and final reduction to the unique reduced basis.
pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis> {
    let arity = check_arity(gens, order)?;
    let mut basis: Vec<SortedPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let mut s = SortedPoly::from_poly(g, order);
            s.make_monic();
            s
        })
        .collect();
    if basis.is_empty() {
        return arg("all generators are zero");
    }

    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }

    while !pending.is_empty() {
        // normal strategy: smallest lcm first, ties by index
        let &(i, j) = pending
            .iter()
            .min_by(|a, b| {
                let la = basis[a.0].lm().lcm(&basis[a.1].lm());
                let lb = basis[b.0].lm().lcm(&basis[b.1].lm());
                order.cmp(&la, &lb).then_with(|| a.cmp(b))
            })
            .unwrap();
        pending.remove(&(i, j));

        let (lmi, lmj) = (basis[i].lm(), basis[j].lm());
        if lmi.is_coprime(&lmj) {
            continue;
        }
        if basis[i].terms.len() == 1 && basis[j].terms.len() == 1 {
            continue;
        }
        let lcm = lmi.lcm(&lmj);
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm().divides(&lcm)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }

        let s = s_poly_sorted(&basis[i], &basis[j], order);
        let refs: Vec<_> = basis.iter().collect();
        let mut r = reduce(s, &refs, order, None);
        if r.is_zero() {
            continue;
        }
        r.make_monic();
        let n = basis.len();
        basis.push(r);
        for k in 0..n {
            pending.insert((k, n));
        }
    }

    Ok(GroebnerBasis { order: *order, generators: reduce_basis(basis, order, arity), reduced: true })
}

/// Minimalizes and inter-reduces a Gröbner basis.
fn reduce_basis(mut basis: Vec<SortedPoly>, order: &MonomialOrder, arity: usize) -> Vec<Polynomial> {
    basis.sort_by(|a, b| order.cmp(&a.lm(), &b.lm()));
    let mut minimal: Vec<SortedPoly> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|h| h.lm().divides(&g.lm())) {
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<_> = minimal.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, g)| g).collect();
        let mut r = reduce(minimal[i].clone(), &others, order, None);
        r.make_monic();
        out.push(r);
    }
    out.sort_by(|a, b| order.cmp(&b.lm(), &a.lm()));
    out.into_iter().map(|s| s.to_poly(arity)).collect()
}

/// A monomial ideal given by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    arity: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes `gens` (drops any generator divisible by another). The
    /// result is sorted by exponent vector.
    pub fn new(arity: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        assert!(all.iter().all(|m| m.arity() == arity), "monomial arity mismatch");
        all.sort_by_key(|m| (m.degree(), *m));
        all.dedup();
        let mut minimal: Vec<Monomial> = Vec::new();
        for m in all {
            if !minimal.iter().any(|g| g.divides(&m)) {
                minimal.push(m);
            }
        }
        minimal.sort();
        MonomialIdeal { arity, generators: minimal }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// Krull dimension of the quotient ring: the largest set of variables
    /// spanning a coordinate subspace on which no generator is supported.
    pub fn krull_dimension(&self) -> usize {
        let n = self.arity;
        (0u8..(1 << n))
            .filter(|&s| !self.generators.iter().any(|g| g.support() & !s == 0))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }
}

/// The ideal generated by the leading monomials of a reduced basis.
pub fn leading_term_ideal(gb: &GroebnerBasis) -> MonomialIdeal {
    MonomialIdeal::new(gb.arity(), gb.leading_monomials())
}

/// True iff every variable has a pure power in the ideal.
pub fn is_zero_dimensional(lt: &MonomialIdeal) -> bool {
    (0..lt.arity()).all(|v| lt.generators().iter().any(|g| g.pure_power_of() == Some(v) || g.is_one()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse_poly, Ambient};

    fn p(s: &str) -> Polynomial {
        parse_poly(s, Ambient::Affine2).unwrap()
    }

    fn grlex() -> MonomialOrder {
        MonomialOrder::grlex()
    }

    #[test]
    fn divide_trivial_cases() {
        let (q, r) = divide(&p("x^7"), &[p("x^6")], &grlex()).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, vec![p("x")]);
        let (q, r) = divide(&p("y"), &[p("x")], &grlex()).unwrap();
        assert_eq!(r, p("y"));
        assert!(q[0].is_zero());
    }

    #[test]
    fn divide_identity_holds() {
        let f = p("x^3*y^2 - 2*x*y + y^3 + 5");
        let basis = [p("x*y - 1"), p("y^2 + x")];
        let (q, r) = divide(&f, &basis, &grlex()).unwrap();
        let recombined = &(&(&q[0] * &basis[0]) + &(&q[1] * &basis[1])) + &r;
        assert_eq!(recombined, f);
        let lms: Vec<_> = basis.iter().map(|b| b.leading_monomial(&grlex()).unwrap()).collect();
        assert!(r.terms().all(|(m, _)| lms.iter().all(|l| !l.divides(m))));
    }

    #[test]
    fn divide_errors() {
        assert!(divide(&p("x"), &[], &grlex()).is_err());
        assert!(divide(&p("x"), &[Polynomial::zero(2)], &grlex()).is_err());
    }

    #[test]
    fn s_polynomial_family_identity() {
        // a=9, b=7, c=3: bc * S(f1, f2) = ac x^a - ab y^a
        let f1 = p("7*x^6*y^3 + 9*x^8");
        let f2 = p("3*x^7*y^2 + 9*y^8");
        let s = s_polynomial(&f1, &f2, &grlex()).unwrap();
        assert_eq!(s.scale(&Scalar::from_int(21)), p("27*x^9 - 63*y^9"));
        assert!(s_polynomial(&p("x^9"), &p("y^9"), &grlex()).unwrap().is_zero());
        assert!(s_polynomial(&f1, &f1, &grlex()).unwrap().is_zero());
        assert!(s_polynomial(&f1, &Polynomial::zero(2), &grlex()).is_err());
    }

    #[test]
    fn buchberger_on_an_normal_form() {
        let gb = buchberger(&[p("y^2-x^6"), p("2*y"), p("6*x^5")], &grlex()).unwrap();
        assert_eq!(gb.generators(), &[p("x^5"), p("y")]);
        assert!(gb.satisfies_reduced_invariants());
        assert!(gb.satisfies_buchberger_criterion());
    }

    #[test]
    fn buchberger_trivial_and_errors() {
        let gb = buchberger(&[p("x^2")], &grlex()).unwrap();
        assert_eq!(gb.generators(), &[p("x^2")]);
        assert!(buchberger(&[Polynomial::zero(2)], &grlex()).is_err());
        let unit = buchberger(&[p("y-x^2"), p("-2*x"), p("1")], &grlex()).unwrap();
        assert!(unit.is_unit());
    }

    #[test]
    fn buchberger_family_case_b1() {
        let f = p("x^9+y^9+x^7*y^3");
        let gens = [f.clone(), f.partial_derivative(0).unwrap(), f.partial_derivative(1).unwrap()];
        let gb = buchberger(&gens, &grlex()).unwrap();
        let lt = leading_term_ideal(&gb);
        let expected = MonomialIdeal::new(
            2,
            [Monomial::xy(6, 3), Monomial::xy(7, 2), Monomial::xy(9, 0), Monomial::xy(0, 9), Monomial::xy(2, 8)],
        );
        assert_eq!(lt, expected);
        assert!(is_zero_dimensional(&lt));
        assert!(gb.satisfies_buchberger_criterion());
        for g in &gens {
            assert!(gb.contains(g).unwrap());
        }
    }

    #[test]
    fn zero_dimensionality() {
        assert!(!is_zero_dimensional(&MonomialIdeal::new(2, [Monomial::xy(1, 0)])));
        assert!(!is_zero_dimensional(&MonomialIdeal::new(2, [])));
        assert!(is_zero_dimensional(&MonomialIdeal::new(2, [Monomial::xy(0, 0)])));
        let three = MonomialIdeal::new(3, [Monomial::new(&[0, 4, 0]), Monomial::new(&[0, 0, 4])]);
        assert_eq!(three.krull_dimension(), 1);
        assert_eq!(MonomialIdeal::new(3, []).krull_dimension(), 3);
    }

    #[test]
    fn monomial_ideal_is_minimal() {
        let i = MonomialIdeal::new(2, [Monomial::xy(2, 0), Monomial::xy(3, 1), Monomial::xy(0, 2), Monomial::xy(2, 0)]);
        assert_eq!(i.generators(), &[Monomial::xy(0, 2), Monomial::xy(2, 0)]);
    }
}
