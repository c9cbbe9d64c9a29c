//! Lengths of zero-dimensional schemes.
//!
//! Local lengths at the origin are computed by truncation: the colength
//! `alpha_r` of `J + (x, y)^r` grows with `r` until `alpha_r = alpha_{r+1}`,
//! at which point `(x, y)^r` already lies in the localized ideal and the
//! value is the length of the component of `V(J)` at the origin.

use std::collections::HashMap;
use std::fmt;

use crate::algebra::{Monomial, MonomialOrder, Polynomial, Scalar};
use crate::error::{arg, Error, Result};
use crate::groebner::{buchberger, is_zero_dimensional, leading_term_ideal, MonomialIdeal};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LengthResult {
    Finite(u64),
    Infinite,
}

impl LengthResult {
    pub fn finite(self) -> Option<u64> {
        match self {
            LengthResult::Finite(n) => Some(n),
            LengthResult::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == LengthResult::Infinite
    }
}

impl fmt::Display for LengthResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LengthResult::Finite(n) => write!(f, "{n}"),
            LengthResult::Infinite => f.write_str("infinite"),
        }
    }
}

/// The sequence `(r, alpha_r)` computed until two consecutive values agree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TruncationTrace {
    pub steps: Vec<(u32, u64)>,
    /// The `r` with `alpha_r = alpha_{r+1}`.
    pub stabilization_index: u32,
}

impl TruncationTrace {
    pub fn value(&self) -> Option<u64> {
        self.steps.iter().find(|(r, _)| *r == self.stabilization_index).map(|s| s.1)
    }
}

/// Number of standard monomials (monomials outside the ideal).
pub fn staircase_length(lt: &MonomialIdeal) -> LengthResult {
    if !is_zero_dimensional(lt) {
        return LengthResult::Infinite;
    }
    let n = lt.arity();
    if lt.generators().iter().any(Monomial::is_one) {
        return LengthResult::Finite(0);
    }
    // box bounded by the pure powers
    let bounds: Vec<u32> = (0..n)
        .map(|v| lt.generators().iter().filter(|g| g.pure_power_of() == Some(v)).map(|g| g.exp(v)).min().unwrap())
        .collect();
    let mut count = 0u64;
    let mut exps = vec![0u32; n];
    loop {
        if !lt.contains(&Monomial::new(&exps)) {
            count += 1;
        }
        let mut v = 0;
        loop {
            if v == n {
                return LengthResult::Finite(count);
            }
            exps[v] += 1;
            if exps[v] < bounds[v] {
                break;
            }
            exps[v] = 0;
            v += 1;
        }
    }
}

fn check_affine(gens: &[Polynomial]) -> Result<()> {
    if gens.iter().any(|g| g.arity() != 2) {
        return arg("generators must be polynomials in x, y");
    }
    if gens.iter().all(Polynomial::is_zero) {
        return arg("all generators are zero");
    }
    Ok(())
}

/// `dim A/(J + (x,y)^r)` via a Gröbner basis of the truncated generators
/// together with every monomial of degree `r`.
pub fn truncated_colength(gens: &[Polynomial], r: u32) -> Result<u64> {
    let mut all: Vec<Polynomial> = gens.iter().map(|g| g.truncate_below(r)).filter(|g| !g.is_zero()).collect();
    all.extend(Monomial::all_of_degree(2, r).into_iter().map(Polynomial::monomial));
    let gb = buchberger(&all, &MonomialOrder::grlex())?;
    match staircase_length(&leading_term_ideal(&gb)) {
        LengthResult::Finite(n) => Ok(n),
        LengthResult::Infinite => Err(Error::Internal("truncated ideal is not zero-dimensional".into())),
    }
}

/// Largest truncation order tried before giving up.
pub fn truncation_cap(gens: &[Polynomial]) -> u32 {
    4 * gens.iter().filter_map(Polynomial::degree).max().unwrap_or(0) + 4
}

/// Length of the localization at the origin of `A / (gens)`.
pub fn local_length_at_origin(gens: &[Polynomial]) -> Result<(LengthResult, TruncationTrace)> {
    check_affine(gens)?;
    let cap = truncation_cap(gens);
    let mut trace = TruncationTrace::default();
    let mut prev = truncated_colength(gens, 1)?;
    trace.steps.push((1, prev));
    for r in 2..=cap {
        let cur = truncated_colength(gens, r)?;
        trace.steps.push((r, cur));
        if cur == prev {
            trace.stabilization_index = r - 1;
            return Ok((LengthResult::Finite(cur), trace));
        }
        prev = cur;
    }
    Err(Error::Divergence(format!(
        "truncated colengths still growing at r = {cap}; the ideal is not zero-dimensional at the origin"
    )))
}

/// Independent linear-algebra computation of `dim A/(J + (x,y)^r)`.
///
/// Builds the coefficient matrix of all products `m * g` truncated below
/// degree `r` and returns the number of monomials of degree `< r` minus its
/// rank.
pub fn local_length_oracle(gens: &[Polynomial], r: u32) -> Result<u64> {
    check_affine(gens)?;
    if r == 0 {
        return arg("truncation order must be at least 1");
    }
    let columns: Vec<Monomial> = (0..r).flat_map(|d| Monomial::all_of_degree(2, d)).collect();
    let index: HashMap<Monomial, usize> = columns.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut echelon = Echelon::new(columns.len());
    'outer: for g in gens.iter().filter(|g| !g.is_zero()) {
        let low = g.lowest_degree().unwrap();
        if low >= r {
            continue;
        }
        for d in 0..r - low {
            for m in Monomial::all_of_degree(2, d) {
                let mut row = vec![Scalar::zero(); columns.len()];
                for (t, c) in g.terms() {
                    let prod = t.mul(&m);
                    if prod.degree() < r {
                        row[index[&prod]] = c.clone();
                    }
                }
                echelon.insert(row);
                if echelon.rank() == columns.len() {
                    break 'outer;
                }
            }
        }
    }
    Ok((columns.len() - echelon.rank()) as u64)
}

/// Incremental row echelon form over the rationals.
struct Echelon {
    width: usize,
    // pivot column -> normalized row (pivot entry 1)
    rows: Vec<Option<Vec<Scalar>>>,
    rank: usize,
}

impl Echelon {
    fn new(width: usize) -> Self {
        Echelon { width, rows: vec![None; width], rank: 0 }
    }

    fn rank(&self) -> usize {
        self.rank
    }

    fn insert(&mut self, mut row: Vec<Scalar>) {
        for col in 0..self.width {
            if row[col].is_zero() {
                continue;
            }
            match &self.rows[col] {
                Some(pivot) => {
                    let factor = row[col].clone();
                    for c in col..self.width {
                        if !pivot[c].is_zero() {
                            let delta = &pivot[c] * &factor;
                            row[c] -= &delta;
                        }
                    }
                }
                None => {
                    let inv = row[col].inverse().unwrap();
                    for v in row[col..self.width].iter_mut() {
                        if !v.is_zero() {
                            *v *= &inv;
                        }
                    }
                    self.rows[col] = Some(row);
                    self.rank += 1;
                    return;
                }
            }
        }
    }
}

/// A line through the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Line {
    /// `y = t x`
    Slope(Scalar),
    /// `x = 0`
    Vertical,
}

/// Length of the intersection of `V(gens)` with a line through the origin,
/// localized at the origin.
pub fn line_restriction_length(gens: &[Polynomial], line: &Line) -> Result<LengthResult> {
    check_affine(gens)?;
    let valuation = |g: &Polynomial| -> Option<u32> {
        match line {
            Line::Vertical => g.terms().filter(|(m, _)| m.exp(0) == 0).map(|(m, _)| m.exp(1)).min(),
            Line::Slope(t) => {
                let mut by_degree: HashMap<u32, Scalar> = HashMap::new();
                for (m, c) in g.terms() {
                    *by_degree.entry(m.degree()).or_insert_with(Scalar::zero) += &(c * &t.pow(m.exp(1)));
                }
                by_degree.into_iter().filter(|(_, v)| !v.is_zero()).map(|(k, _)| k).min()
            }
        }
    };
    Ok(gens.iter().filter_map(valuation).min().map_or(LengthResult::Infinite, |k| LengthResult::Finite(k as u64)))
}

/// Hilbert function of `R / I` for a homogeneous ideal `I` of the projective
/// coordinate ring, evaluated through a degrevlex Gröbner basis.
#[derive(Clone, Debug)]
pub struct HilbertFunction {
    lt: MonomialIdeal,
}

impl HilbertFunction {
    pub fn new(gens: &[Polynomial]) -> Result<Self> {
        if gens.iter().any(|g| g.arity() != 3) {
            return arg("generators must be polynomials in x0, x1, x2");
        }
        if let Some(g) = gens.iter().find(|g| !g.is_homogeneous()) {
            return arg(format!("generator {g} is not homogeneous"));
        }
        let nonzero: Vec<_> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        let lt = if nonzero.is_empty() {
            MonomialIdeal::new(3, [])
        } else {
            leading_term_ideal(&buchberger(&nonzero, &MonomialOrder::degrevlex(3))?)
        };
        Ok(HilbertFunction { lt })
    }

    pub fn leading_term_ideal(&self) -> &MonomialIdeal {
        &self.lt
    }

    pub fn value(&self, t: u32) -> u64 {
        Monomial::all_of_degree(3, t).iter().filter(|m| !self.lt.contains(m)).count() as u64
    }
}

pub fn hilbert_function(gens: &[Polynomial], t: u32) -> Result<u64> {
    Ok(HilbertFunction::new(gens)?.value(t))
}

/// Global Tjurina number together with the Hilbert function values used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalTjurina {
    pub value: LengthResult,
    pub hilbert_values: Vec<(u32, u64)>,
    pub window_extended: bool,
}

/// Degree of the projective Jacobian scheme of a homogeneous curve,
/// read off as the eventual value of the Hilbert function of
/// `R / (d0 f, d1 f, d2 f)`.
pub fn global_tjurina(f: &Polynomial) -> Result<LengthResult> {
    Ok(global_tjurina_detailed(f)?.value)
}

pub fn global_tjurina_detailed(f: &Polynomial) -> Result<GlobalTjurina> {
    if f.arity() != 3 {
        return arg("global Tjurina number needs a form in x0, x1, x2");
    }
    if f.is_zero() || !f.is_homogeneous() {
        return arg("curve must be a nonzero homogeneous polynomial");
    }
    let d = f.degree().unwrap();
    if d < 2 {
        return arg("curve must have degree at least 2");
    }
    let hf = HilbertFunction::new(&f.gradient())?;
    if hf.leading_term_ideal().krull_dimension() >= 2 {
        return Ok(GlobalTjurina { value: LengthResult::Infinite, hilbert_values: Vec::new(), window_extended: false });
    }
    let mut end = 3 * (d - 1);
    let mut values: Vec<(u32, u64)> = (0..=end).map(|t| (t, hf.value(t))).collect();
    let mut extended = false;
    loop {
        let n = values.len();
        if n >= 3 && values[n - 1].1 == values[n - 2].1 && values[n - 2].1 == values[n - 3].1 {
            return Ok(GlobalTjurina {
                value: LengthResult::Finite(values[n - 1].1),
                hilbert_values: values,
                window_extended: extended,
            });
        }
        if end >= 6 * d {
            let dump = values.iter().map(|(t, v)| format!("HF({t})={v}")).collect::<Vec<_>>().join(", ");
            return Err(Error::Divergence(format!("Hilbert function did not stabilize: {dump}")));
        }
        let next = (end + d).min(6 * d);
        values.extend((end + 1..=next).map(|t| (t, hf.value(t))));
        end = next;
        extended = true;
    }
}
