//! Dense univariate polynomials over the rationals, used for binary forms
//! and symbolic-slope computations.

use super::scalar::Scalar;

/// Coefficients in ascending degree order, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * &Scalar::from_int(i as i64)).collect())
    }

    /// Remainder of Euclidean division by a nonzero divisor.
    pub fn rem(&self, divisor: &UniPoly) -> UniPoly {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead_inv = divisor.leading().unwrap().inverse().unwrap();
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let q = &r[top] * &lead_inv;
            if !q.is_zero() {
                let shift = top - dd;
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    r[shift + i] -= &(c * &q);
                }
            }
            r.pop();
            while r.last().is_some_and(Scalar::is_zero) {
                r.pop();
            }
        }
        UniPoly::new(r)
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inverse().unwrap();
                UniPoly::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// Determinant by fraction-based Gaussian elimination.
pub(crate) fn determinant(mut m: Vec<Vec<Scalar>>) -> Scalar {
    let n = m.len();
    let mut det = Scalar::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Scalar::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let inv = m[col][col].inverse().unwrap();
        det *= &m[col][col];
        let (top, below) = m.split_at_mut(col + 1);
        let pivot = &top[col];
        for row in below.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] * &inv;
            for (v, p) in row[col..].iter_mut().zip(&pivot[col..]) {
                *v -= &(p * &factor);
            }
        }
    }
    det
}

/// Sylvester resultant of two coefficient vectors read with the given formal
/// degrees. `p` and `q` list coefficients from the top formal degree down.
pub(crate) fn sylvester_resultant(p: &[Scalar], q: &[Scalar]) -> Scalar {
    let m = p.len() - 1;
    let n = q.len() - 1;
    let size = m + n;
    if size == 0 {
        return Scalar::one();
    }
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![Scalar::zero(); size];
        for (j, c) in p.iter().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![Scalar::zero(); size];
        for (j, c) in q.iter().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    determinant(rows)
}

/// Resultant of two nonzero univariate polynomials at their true degrees.
pub fn resultant(p: &UniPoly, q: &UniPoly) -> Scalar {
    let desc = |u: &UniPoly| u.coeffs.iter().rev().cloned().collect::<Vec<_>>();
    sylvester_resultant(&desc(p), &desc(q))
}

/// `Res(p, p')`, which vanishes exactly when `p` has a repeated root.
/// Polynomials of degree below 2 are reported as having discriminant 1.
pub fn discriminant(p: &UniPoly) -> Scalar {
    match p.degree() {
        None => Scalar::zero(),
        Some(0) | Some(1) => Scalar::one(),
        Some(_) => resultant(p, &p.derivative()),
    }
}
