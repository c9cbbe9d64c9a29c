//! Monomials and monomial orders.

use std::cmp::Ordering;

use crate::error::{arg, Result};

/// Largest ambient ring handled: projective plane coordinates `x0, x1, x2`.
pub const MAX_VARS: usize = 3;

/// A power product `x_0^e_0 ... x_{n-1}^e_{n-1}` with `n = arity`.
///
/// Exponent slots past `arity` are always zero, so the derived ordering
/// and hashing are structural.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    arity: u8,
    exps: [u32; MAX_VARS],
}

impl Monomial {
    pub fn one(arity: usize) -> Self {
        assert!(arity <= MAX_VARS, "arity {arity} exceeds {MAX_VARS}");
        Monomial { arity: arity as u8, exps: [0; MAX_VARS] }
    }

    pub fn new(exps: &[u32]) -> Self {
        let mut m = Monomial::one(exps.len());
        m.exps[..exps.len()].copy_from_slice(exps);
        m
    }

    /// `x^i y^j` in the affine plane.
    pub fn xy(i: u32, j: u32) -> Self {
        Monomial::new(&[i, j])
    }

    pub fn var(arity: usize, index: usize) -> Self {
        let mut m = Monomial::one(arity);
        m.exps[index] = 1;
        m
    }

    pub fn arity(&self) -> usize {
        self.arity as usize
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps[..self.arity as usize]
    }

    pub fn exp(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity, other.arity);
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] += other.exps[i];
        }
        out
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] -= other.exps[i];
        }
        Some(out)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] = out.exps[i].max(other.exps[i]);
        }
        out
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// Index of the single variable this monomial is a pure power of.
    pub fn pure_power_of(&self) -> Option<usize> {
        let mut nonzero = (0..self.arity()).filter(|&i| self.exps[i] > 0);
        match (nonzero.next(), nonzero.next()) {
            (Some(i), None) => Some(i),
            _ => None,
        }
    }

    /// Bitmask of the variables occurring in the monomial.
    pub fn support(&self) -> u8 {
        (0..self.arity()).filter(|&i| self.exps[i] > 0).fold(0, |acc, i| acc | (1 << i))
    }

    /// All monomials of total degree exactly `degree`, in lexicographic
    /// order of the exponent vector.
    pub fn all_of_degree(arity: usize, degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut buf = vec![0u32; arity];
        fn rec(pos: usize, left: u32, buf: &mut [u32], out: &mut Vec<Monomial>) {
            if pos + 1 == buf.len() {
                buf[pos] = left;
                out.push(Monomial::new(buf));
                return;
            }
            for e in (0..=left).rev() {
                buf[pos] = e;
                rec(pos + 1, left - e, buf, out);
            }
        }
        if arity == 0 {
            if degree == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(0, degree, &mut buf, &mut out);
        out
    }
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.exps())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Grlex,
    Lex,
    Degrevlex,
}

/// A monomial order: a kind plus a variable precedence, most significant
/// variable first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    arity: u8,
    precedence: [u8; MAX_VARS],
}

impl MonomialOrder {
    /// The order with the natural precedence `x_0 > x_1 > ...`.
    pub fn new(kind: OrderKind, arity: usize) -> Self {
        assert!(arity <= MAX_VARS);
        MonomialOrder { kind, arity: arity as u8, precedence: [0, 1, 2] }
    }

    pub fn with_precedence(kind: OrderKind, precedence: &[usize]) -> Result<Self> {
        let n = precedence.len();
        if n > MAX_VARS {
            return arg(format!("at most {MAX_VARS} variables supported"));
        }
        let mut seen = [false; MAX_VARS];
        for &v in precedence {
            if v >= n || seen[v] {
                return arg(format!("{precedence:?} is not a permutation"));
            }
            seen[v] = true;
        }
        let mut p = [0, 1, 2];
        for (slot, &v) in p.iter_mut().zip(precedence) {
            *slot = v as u8;
        }
        Ok(MonomialOrder { kind, arity: n as u8, precedence: p })
    }

    /// grlex with `x > y`, the order used for all affine-plane work.
    pub fn grlex() -> Self {
        MonomialOrder::new(OrderKind::Grlex, 2)
    }

    pub fn degrevlex(arity: usize) -> Self {
        MonomialOrder::new(OrderKind::Degrevlex, arity)
    }

    pub fn lex(arity: usize) -> Self {
        MonomialOrder::new(OrderKind::Lex, arity)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn arity(&self) -> usize {
        self.arity as usize
    }

    pub fn precedence(&self) -> impl Iterator<Item = usize> + '_ {
        self.precedence[..self.arity as usize].iter().map(|&v| v as usize)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let lex = || {
            for v in self.precedence() {
                match a.exp(v).cmp(&b.exp(v)) {
                    Ordering::Equal => continue,
                    other => return other,
                }
            }
            Ordering::Equal
        };
        match self.kind {
            OrderKind::Lex => lex(),
            OrderKind::Grlex => a.degree().cmp(&b.degree()).then_with(lex),
            OrderKind::Degrevlex => a.degree().cmp(&b.degree()).then_with(|| {
                for &v in self.precedence[..self.arity as usize].iter().rev() {
                    match a.exp(v as usize).cmp(&b.exp(v as usize)) {
                        Ordering::Equal => continue,
                        other => return other.reverse(),
                    }
                }
                Ordering::Equal
            }),
        }
    }
}
