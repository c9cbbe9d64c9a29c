//! Homogeneous forms in two variables: tangent cones and their factors.

use super::monomial::Monomial;
use super::poly::Polynomial;
use super::scalar::Scalar;
use super::univariate::{discriminant, sylvester_resultant, UniPoly};
use crate::error::{arg, Result};

fn check_form(g: &Polynomial, name: &str) -> Result<u32> {
    if g.arity() != 2 {
        return arg(format!("{name} must be a form in two variables"));
    }
    if g.is_zero() {
        return arg(format!("{name} is the zero polynomial"));
    }
    if !g.is_homogeneous() {
        return arg(format!("{name} is not homogeneous"));
    }
    Ok(g.degree().unwrap())
}

/// Coefficients of `x^d, x^{d-1} y, ..., y^d`.
fn coefficients_desc(g: &Polynomial, d: u32) -> Vec<Scalar> {
    (0..=d).map(|j| g.coefficient(&Monomial::xy(d - j, j))).collect()
}

/// Resultant of two binary forms taken at their formal degrees.
///
/// Factors of `y` (roots at infinity of the dehomogenizations `g(t, 1)`)
/// are accounted for, so the result vanishes exactly when `g` and `h`
/// share a linear factor over the algebraic closure.
pub fn binary_form_resultant(g: &Polynomial, h: &Polynomial) -> Result<Scalar> {
    let dg = check_form(g, "first form")?;
    let dh = check_form(h, "second form")?;
    Ok(sylvester_resultant(&coefficients_desc(g, dg), &coefficients_desc(h, dh)))
}

/// Whether the form has `deg g` pairwise distinct linear factors.
pub fn squarefree_binary_form(g: &Polynomial) -> Result<bool> {
    let d = check_form(g, "form")?;
    // x^e is the largest power of x dividing g
    let e = g.terms().map(|(m, _)| m.exp(0)).min().unwrap();
    if e >= 2 {
        return Ok(false);
    }
    // g / x^e restricted to x = 1, as a polynomial in y
    let rest = d - e;
    let coeffs = (0..=rest).map(|j| g.coefficient(&Monomial::xy(d - j, j))).collect();
    Ok(!discriminant(&UniPoly::new(coeffs)).is_zero())
}

/// `h(1, t)`: the binary form restricted to the line `y = t x`, as a
/// polynomial in the slope `t`.
pub fn slope_polynomial(h: &Polynomial) -> UniPoly {
    let Some(d) = h.degree() else {
        return UniPoly::zero();
    };
    let mut coeffs = vec![Scalar::zero(); d as usize + 1];
    for (m, c) in h.terms() {
        coeffs[m.exp(1) as usize] += c;
    }
    UniPoly::new(coeffs)
}
