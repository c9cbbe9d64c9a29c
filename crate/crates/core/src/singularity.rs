//! Invariants of a plane curve at a point: multiplicity, ordinariness,
//! Tjurina and Milnor numbers, symmetry of the Jacobian scheme, and the
//! classification of double points by their Tjurina number.

use std::fmt;

use crate::algebra::binary_form::slope_polynomial;
use crate::algebra::univariate::UniPoly;
use crate::algebra::{binary_form_resultant, squarefree_binary_form, Monomial, Polynomial, Scalar};
use crate::error::{arg, Error, Result};
use crate::zerodim::{
    line_restriction_length, local_length_at_origin, local_length_oracle, truncated_colength, truncation_cap,
    LengthResult, Line, TruncationTrace,
};

/// A point of the affine plane with rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point { x, y }
    }

    pub fn origin() -> Self {
        Point { x: Scalar::zero(), y: Scalar::zero() }
    }

    pub fn coords(&self) -> [Scalar; 2] {
        [self.x.clone(), self.y.clone()]
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

fn affine(f: &Polynomial) -> Result<()> {
    if f.arity() != 2 {
        return arg("curve must be a polynomial in x, y");
    }
    if f.is_zero() {
        return arg("curve is the zero polynomial");
    }
    Ok(())
}

fn centered(f: &Polynomial, p: &Point) -> Result<Polynomial> {
    affine(f)?;
    f.translate(&p.coords())
}

fn jacobian_generators(g: &Polynomial) -> Vec<Polynomial> {
    let mut gens = vec![g.clone()];
    gens.extend(g.gradient());
    gens
}

/// Multiplicity of the curve at `p`; 0 when `p` is not on the curve.
pub fn multiplicity_at(f: &Polynomial, p: &Point) -> Result<u32> {
    Ok(centered(f, p)?.lowest_degree().expect("translation preserves nonzero"))
}

/// Whether the tangent cone at a singular point consists of distinct lines.
pub fn is_ordinary(f: &Polynomial, p: &Point) -> Result<bool> {
    let g = centered(f, p)?;
    let m = g.lowest_degree().unwrap();
    if m < 2 {
        return arg(format!("{p} is not a singular point of the curve"));
    }
    squarefree_binary_form(&g.homogeneous_component(m))
}

fn local_length(gens: &[Polynomial], p: &Point) -> Result<(u64, TruncationTrace)> {
    match local_length_at_origin(gens) {
        Ok((len, trace)) => Ok((len.finite().expect("finite on success"), trace)),
        Err(Error::Divergence(_)) => {
            Err(Error::NotZeroDimensional(format!("curve not reduced at {p}: the singularity is not isolated")))
        }
        Err(e) => Err(e),
    }
}

/// Local Tjurina number: length of `(f, f_x, f_y)` at `p`.
pub fn local_tjurina(f: &Polynomial, p: &Point) -> Result<(u64, TruncationTrace)> {
    let g = centered(f, p)?;
    local_length(&jacobian_generators(&g), p)
}

/// Local Milnor number: length of `(f_x, f_y)` at `p`, taken as 0 off the curve.
pub fn local_milnor(f: &Polynomial, p: &Point) -> Result<(u64, TruncationTrace)> {
    let g = centered(f, p)?;
    if !g.constant_term().is_zero() {
        return Ok((0, TruncationTrace::default()));
    }
    let grad = g.gradient();
    if grad.iter().all(Polynomial::is_zero) {
        return arg("curve is constant");
    }
    local_length(&grad, p)
}

/// The `k` such that the scheme defined by `gens` (localized at the origin)
/// meets every line through the origin in length exactly `k`, or `None`.
///
/// All lines are handled at once: restricting to `y = t x` with symbolic
/// `t`, the lowest `x`-degree coefficients are polynomials in `t`, and a
/// slope where the length jumps is a common root of them.
pub fn k_symmetry_order(gens: &[Polynomial]) -> Result<Option<u32>> {
    match local_length_at_origin(gens) {
        Ok((LengthResult::Finite(0), _)) => return arg("scheme is not supported at the origin"),
        Ok(_) => {}
        Err(Error::Divergence(_)) => return arg("scheme is not zero-dimensional at the origin"),
        Err(e) => return Err(e),
    }
    let nonzero: Vec<_> = gens.iter().filter(|g| !g.is_zero()).collect();
    let k = nonzero.iter().filter_map(|g| g.lowest_degree()).min().unwrap();
    let common = nonzero
        .iter()
        .map(|g| slope_polynomial(&g.homogeneous_component(k)))
        .fold(UniPoly::zero(), |acc, u| acc.gcd(&u));
    if !common.is_unit() {
        return Ok(None);
    }
    match line_restriction_length(gens, &Line::Vertical)? {
        LengthResult::Finite(v) if v == k as u64 => Ok(Some(k)),
        _ => Ok(None),
    }
}

/// Whether the Milnor scheme at `p` is a complete intersection of two
/// curves of multiplicity `m - 1` without common tangents.
pub fn is_slci(f: &Polynomial, p: &Point) -> Result<bool> {
    let g = centered(f, p)?;
    let m = g.lowest_degree().unwrap();
    if m < 2 {
        return arg(format!("{p} is not a singular point of the curve"));
    }
    let (gx, gy) = (g.partial_derivative(0)?, g.partial_derivative(1)?);
    if gx.lowest_degree() != Some(m - 1) || gy.lowest_degree() != Some(m - 1) {
        return Ok(false);
    }
    Ok(!binary_form_resultant(&gx.initial_form(), &gy.initial_form())?.is_zero())
}

/// The three verdicts of the double-point algorithm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassificationOutcome {
    /// Smooth point with tangent line `a x + b y = 0`, stored as `(a, b)`.
    Simple {
        tangent: (Scalar, Scalar),
    },
    /// Double point of type `A_n`.
    DoubleA(u64),
    MultiplicityAtLeast3(u32),
}

impl fmt::Display for ClassificationOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassificationOutcome::Simple { tangent } => {
                write!(f, "simple point, tangent: {}", tangent_line(&tangent.0, &tangent.1))
            }
            ClassificationOutcome::DoubleA(n) => write!(f, "A_{n}"),
            ClassificationOutcome::MultiplicityAtLeast3(m) => write!(f, "multiplicity >= 3 (m = {m})"),
        }
    }
}

/// Renders `a x + b y = 0`.
pub fn tangent_line(a: &Scalar, b: &Scalar) -> String {
    let lin = Polynomial::from_terms(2, [(a.clone(), Monomial::xy(1, 0)), (b.clone(), Monomial::xy(0, 1))]);
    format!("{lin} = 0")
}

/// Decides whether `p` is simple, a double point (and its `A_n` type), or
/// of multiplicity at least 3, by iterating the truncated colengths
/// `alpha_r` of the Jacobian ideal from `r = 2` until they repeat.
pub fn classify_double_point(f: &Polynomial, p: &Point) -> Result<ClassificationOutcome> {
    Ok(classify_double_point_traced(f, p)?.0)
}

pub fn classify_double_point_traced(f: &Polynomial, p: &Point) -> Result<(ClassificationOutcome, TruncationTrace)> {
    let g = centered(f, p)?;
    if !g.constant_term().is_zero() {
        return arg(format!("{p} is not on the curve"));
    }
    let a10 = g.coefficient(&Monomial::xy(1, 0));
    let a01 = g.coefficient(&Monomial::xy(0, 1));
    if !a10.is_zero() || !a01.is_zero() {
        return Ok((ClassificationOutcome::Simple { tangent: (a10, a01) }, TruncationTrace::default()));
    }
    if g.homogeneous_component(2).is_zero() {
        let m = g.lowest_degree().unwrap();
        return Ok((ClassificationOutcome::MultiplicityAtLeast3(m), TruncationTrace::default()));
    }
    let gens = jacobian_generators(&g);
    let mut trace = TruncationTrace::default();
    let mut prev = truncated_colength(&gens, 2)?;
    trace.steps.push((2, prev));
    for r in 3..=truncation_cap(&gens).max(3) {
        let cur = truncated_colength(&gens, r)?;
        trace.steps.push((r, cur));
        if cur == prev {
            trace.stabilization_index = r - 1;
            return Ok((ClassificationOutcome::DoubleA(prev), trace));
        }
        prev = cur;
    }
    Err(Error::NotZeroDimensional(format!("curve not reduced at {p}: the double point is not isolated")))
}

/// Dimension of the Zariski tangent space of the scheme at the origin:
/// `alpha_2 - 1`, or 0 when the origin is not in the scheme.
pub fn embedding_dimension(gens: &[Polynomial]) -> Result<u32> {
    let alpha2 = local_length_oracle(gens, 2)?;
    Ok(alpha2.saturating_sub(1) as u32)
}

/// Whether a curve of degree `d` and geometric genus `g` with global
/// Tjurina number `tau` has only nodes: `tau = C(d-1, 2) - g`.
pub fn nodes_only_check(d: u64, g: u64, tau: u64) -> Result<bool> {
    if d == 0 {
        return arg("degree must be at least 1");
    }
    let arithmetic_genus = (d - 1) * d.saturating_sub(2) / 2;
    if arithmetic_genus < g {
        return arg(format!("genus {g} exceeds the arithmetic genus {arithmetic_genus} of a degree-{d} curve"));
    }
    Ok(tau == arithmetic_genus - g)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    OffCurve,
    SmoothPoint,
    /// `A_1` is the node.
    A(u64),
    OrdinaryMultiple(u32),
    NonOrdinaryMultiple(u32),
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::OffCurve => f.write_str("point not on curve"),
            Classification::SmoothPoint => f.write_str("smooth point"),
            Classification::A(1) => f.write_str("A_1 (node)"),
            Classification::A(n) => write!(f, "A_{n}"),
            Classification::OrdinaryMultiple(m) => write!(f, "ordinary {m}-fold point"),
            Classification::NonOrdinaryMultiple(m) => write!(f, "non-ordinary {m}-fold point"),
        }
    }
}

/// Everything known about the curve at one point. The Tjurina and Milnor
/// computations fail independently, so each carries its own result.
#[derive(Clone, Debug)]
pub struct SingularityReport {
    pub point: Point,
    pub multiplicity: u32,
    pub is_on_curve: bool,
    /// `None` unless the point is singular.
    pub ordinary: Option<bool>,
    pub tjurina: Result<u64>,
    pub milnor: Result<u64>,
    pub symmetry_order: Option<u32>,
    pub classification: Classification,
    /// Tangent `a x + b y = 0` at a smooth point.
    pub tangent: Option<(Scalar, Scalar)>,
    pub trace_tjurina: TruncationTrace,
    pub trace_milnor: TruncationTrace,
}

pub fn analyze(f: &Polynomial, p: &Point) -> Result<SingularityReport> {
    let g = centered(f, p)?;
    let m = g.lowest_degree().unwrap();
    let ordinary = if m >= 2 { Some(is_ordinary(f, p)?) } else { None };

    let (tjurina, trace_tjurina) = match local_length(&jacobian_generators(&g), p) {
        Ok((t, tr)) => (Ok(t), tr),
        Err(e) => (Err(e), TruncationTrace::default()),
    };
    let (milnor, trace_milnor) = match local_milnor(f, p) {
        Ok((t, tr)) => (Ok(t), tr),
        Err(e) => (Err(e), TruncationTrace::default()),
    };

    let symmetry_order = match tjurina {
        Ok(t) if t > 0 => k_symmetry_order(&jacobian_generators(&g)).ok().flatten(),
        _ => None,
    };

    let tangent = (m == 1).then(|| (g.coefficient(&Monomial::xy(1, 0)), g.coefficient(&Monomial::xy(0, 1))));
    let classification = match (m, ordinary, &tjurina) {
        (0, _, _) => Classification::OffCurve,
        (1, _, _) => Classification::SmoothPoint,
        (2, _, Ok(t)) => Classification::A(*t),
        (_, Some(true), _) => Classification::OrdinaryMultiple(m),
        _ => Classification::NonOrdinaryMultiple(m),
    };

    Ok(SingularityReport {
        point: p.clone(),
        multiplicity: m,
        is_on_curve: m > 0,
        ordinary,
        tjurina,
        milnor,
        symmetry_order,
        classification,
        tangent,
        trace_tjurina,
        trace_milnor,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse_poly, Ambient};

    fn p(s: &str) -> Polynomial {
        parse_poly(s, Ambient::Affine2).unwrap()
    }

    fn o() -> Point {
        Point::origin()
    }

    #[test]
    fn multiplicities() {
        assert_eq!(multiplicity_at(&p("x^5-y^5"), &o()).unwrap(), 5);
        assert_eq!(multiplicity_at(&p("y^2-x^3"), &o()).unwrap(), 2);
        assert_eq!(multiplicity_at(&p("y-x^2"), &o()).unwrap(), 1);
        assert_eq!(multiplicity_at(&p("y-x^2+1"), &o()).unwrap(), 0);
        assert!(multiplicity_at(&Polynomial::zero(2), &o()).is_err());
        // node of the nodal cubic moved to (1, 2)
        let shifted = p("(y-2)^2-(x-1)^2-(x-1)^3");
        let q = Point::new(Scalar::from_int(1), Scalar::from_int(2));
        assert_eq!(multiplicity_at(&shifted, &q).unwrap(), 2);
    }

    #[test]
    fn ordinariness() {
        assert!(is_ordinary(&p("x^5-y^5"), &o()).unwrap());
        assert!(!is_ordinary(&p("x*y*(x-y)*(x+y)^2+x^6+y^6"), &o()).unwrap());
        assert!(!is_ordinary(&p("y^2-x^3"), &o()).unwrap());
        assert!(is_ordinary(&p("y-x^2"), &o()).is_err());
    }

    #[test]
    fn tjurina_numbers() {
        assert_eq!(local_tjurina(&p("x^5-y^5"), &o()).unwrap().0, 16);
        assert_eq!(local_tjurina(&p("x*y*(x-y)*(x+y)^2+x^6+y^6"), &o()).unwrap().0, 15);
        assert_eq!(local_tjurina(&p("y-x^2"), &o()).unwrap().0, 0);
        let err = local_tjurina(&p("y^2*(x-1)"), &o()).unwrap_err();
        assert!(matches!(err, Error::NotZeroDimensional(_)));
    }

    #[test]
    fn milnor_numbers() {
        for m in 2..7u64 {
            let f = p(&format!("x^{m}-y^{m}"));
            assert_eq!(local_milnor(&f, &o()).unwrap().0, (m - 1) * (m - 1));
        }
        for n in 1..8u64 {
            assert_eq!(local_milnor(&p(&format!("y^2-x^{}", n + 1)), &o()).unwrap().0, n);
        }
        assert_eq!(local_milnor(&p("y-x^2"), &o()).unwrap().0, 0);
        assert_eq!(local_milnor(&p("x^2+y^2+1"), &o()).unwrap().0, 0);
    }

    #[test]
    fn symmetry_orders() {
        for k in 1..6 {
            assert_eq!(k_symmetry_order(&[p(&format!("x^{k}")), p(&format!("y^{k}"))]).unwrap(), Some(k));
        }
        assert_eq!(k_symmetry_order(&[p("x^2"), p("x*y"), p("y^2")]).unwrap(), Some(2));
        assert_eq!(k_symmetry_order(&[p("y"), p("x^5")]).unwrap(), None);
        // (x^2, y): line y = 0 gives 2, others 1
        assert_eq!(k_symmetry_order(&[p("y"), p("x^2")]).unwrap(), None);
        assert!(k_symmetry_order(&[p("y")]).is_err());
        assert!(k_symmetry_order(&[p("y-1"), p("x")]).is_err());
    }

    #[test]
    fn slci_checks() {
        for m in 2..7 {
            assert!(is_slci(&p(&format!("x^{m}-y^{m}")), &o()).unwrap());
        }
        assert!(!is_slci(&p("y^2-x^4"), &o()).unwrap());
        assert!(is_slci(&p("y-x^2"), &o()).is_err());
    }

    #[test]
    fn double_points() {
        assert_eq!(classify_double_point(&p("y^2-x^2+x^3"), &o()).unwrap(), ClassificationOutcome::DoubleA(1));
        for n in 1..8 {
            let f = p(&format!("y^2-x^{}", n + 1));
            assert_eq!(classify_double_point(&f, &o()).unwrap(), ClassificationOutcome::DoubleA(n));
        }
        assert_eq!(classify_double_point(&p("x^5-y^5"), &o()).unwrap(), ClassificationOutcome::MultiplicityAtLeast3(5));
        let simple = classify_double_point(&p("2*x-3*y+x*y"), &o()).unwrap();
        assert_eq!(simple, ClassificationOutcome::Simple { tangent: (Scalar::from_int(2), Scalar::from_int(-3)) });
        assert_eq!(simple.to_string(), "simple point, tangent: 2*x-3*y = 0");
        assert!(classify_double_point(&p("y^2-x^3+1"), &o()).is_err());
    }

    #[test]
    fn embedding_dimensions() {
        for n in 2..6 {
            assert_eq!(embedding_dimension(&[p("y"), p(&format!("x^{n}"))]).unwrap(), 1);
        }
        assert_eq!(embedding_dimension(&[p("x^2"), p("x*y"), p("y^2")]).unwrap(), 2);
        assert_eq!(embedding_dimension(&[p("x"), p("y")]).unwrap(), 0);
        assert_eq!(embedding_dimension(&[p("1")]).unwrap(), 0);
    }

    #[test]
    fn nodes_only() {
        assert!(nodes_only_check(3, 0, 1).unwrap());
        assert!(nodes_only_check(4, 0, 3).unwrap());
        assert!(!nodes_only_check(4, 0, 4).unwrap());
        assert!(nodes_only_check(3, 2, 0).is_err());
        assert!(nodes_only_check(0, 0, 0).is_err());
    }

    #[test]
    fn analyze_examples() {
        let r = analyze(&p("x^5-y^5"), &o()).unwrap();
        assert_eq!((r.multiplicity, r.ordinary), (5, Some(true)));
        assert_eq!((r.tjurina.clone().unwrap(), r.milnor.clone().unwrap()), (16, 16));
        assert_eq!(r.symmetry_order, Some(4));
        assert_eq!(r.classification, Classification::OrdinaryMultiple(5));

        let r = analyze(&p("y^2-x^5"), &o()).unwrap();
        assert_eq!((r.multiplicity, r.tjurina.unwrap(), r.milnor.unwrap()), (2, 4, 4));
        assert_eq!(r.classification, Classification::A(4));

        let r = analyze(&p("y-x^2"), &o()).unwrap();
        assert_eq!((r.multiplicity, r.tjurina.unwrap(), r.milnor.unwrap()), (1, 0, 0));
        assert_eq!(r.classification, Classification::SmoothPoint);
        assert_eq!(r.symmetry_order, None);

        let r = analyze(&p("x^2+y^2+1"), &o()).unwrap();
        assert_eq!(r.classification, Classification::OffCurve);
        assert!(!r.is_on_curve);

        // non-reduced: both lengths fail, reported independently
        let r = analyze(&p("y^2"), &o()).unwrap();
        assert!(r.tjurina.is_err() && r.milnor.is_err());
        assert_eq!(r.classification, Classification::NonOrdinaryMultiple(2));
    }
}
