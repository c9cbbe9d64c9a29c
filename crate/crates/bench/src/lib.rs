//! Benchmark fixtures shared by the criterion targets.

use planejac::{parse_poly, Ambient, Polynomial};

/// Jacobian generators `f, f_x, f_y`.
pub fn jacobian(f: &Polynomial) -> Vec<Polynomial> {
    let mut gens = vec![f.clone()];
    gens.extend(f.gradient());
    gens
}

pub fn affine(s: &str) -> Polynomial {
    parse_poly(s, Ambient::Affine2).expect("fixture parses")
}

/// A long but shallow expression for parser throughput.
pub fn long_expression(terms: u32) -> String {
    (0..terms).map(|i| format!("{}*x^{}*y^{}", i + 1, i % 13, (i * 7) % 11)).collect::<Vec<_>>().join("+")
}
