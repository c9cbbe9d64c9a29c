//! Closed forms for the curves `x^a + y^a + x^b y^c` at the origin.
//!
//! Parameters satisfy `a >= 2`, `b + c > a` and, after normalization,
//! `b >= c`. The case grid splits on the position of `b` (columns A, B, C)
//! and `c` (rows 1 to 6); `b >= a` is handled separately as [`FamilyCase::BigB`].
//! All branch conditions are integer comparisons on `2b`, `2c`, `a`.

use std::fmt;

use crate::algebra::{Monomial, Polynomial, Scalar};
use crate::error::{arg, Error, Result};
use crate::groebner::MonomialIdeal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyParams {
    a: u32,
    b: u32,
    c: u32,
}

impl FamilyParams {
    /// Validates and swaps `b`, `c` so that `b >= c`.
    pub fn new(a: u32, b: u32, c: u32) -> Result<Self> {
        if a < 2 {
            return arg(format!("a must be at least 2, got {a}"));
        }
        if b as u64 + c as u64 <= a as u64 {
            return arg(format!("need b + c > a, got a={a}, b={b}, c={c}"));
        }
        if a > 1000 || b > 1000 || c > 1000 {
            return arg("parameters above 1000 are not supported");
        }
        let (b, c) = if b >= c { (b, c) } else { (c, b) };
        Ok(FamilyParams { a, b, c })
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn c(&self) -> u32 {
        self.c
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(a={}, b={}, c={})", self.a, self.b, self.c)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyCase {
    BigB,
    A4,
    B1,
    B2,
    B3,
    B4,
    B5,
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
}

impl fmt::Display for FamilyCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FamilyCase::BigB => "b>=a",
            FamilyCase::A4 => "A4",
            FamilyCase::B1 => "B1",
            FamilyCase::B2 => "B2",
            FamilyCase::B3 => "B3",
            FamilyCase::B4 => "B4",
            FamilyCase::B5 => "B5",
            FamilyCase::C1 => "C1",
            FamilyCase::C2 => "C2",
            FamilyCase::C3 => "C3",
            FamilyCase::C4 => "C4",
            FamilyCase::C5 => "C5",
            FamilyCase::C6 => "C6",
        };
        f.write_str(s)
    }
}

/// Locates the parameters in the case grid.
///
/// For `a = 3, b = c = 2` the column test `b = a - 1` and the row test
/// `c = a - 1` take precedence, giving C6.
pub fn family_case(p: FamilyParams) -> Result<FamilyCase> {
    let (a, b, c) = (p.a, p.b, p.c);
    if b >= a {
        return Ok(FamilyCase::BigB);
    }
    let col = if b + 1 == a {
        'C'
    } else if 2 * b == a + 1 {
        'A'
    } else if 2 * b > a + 1 {
        'B'
    } else {
        return Err(Error::Internal(format!("no column for {p}")));
    };
    let row = if c + 1 == a {
        6
    } else if 2 * c + 1 < a {
        1
    } else if 2 * c + 1 == a {
        2
    } else if 2 * c == a {
        3
    } else if 2 * c == a + 1 {
        4
    } else if c + 1 < a {
        5
    } else {
        return Err(Error::Internal(format!("no row for {p}")));
    };
    use FamilyCase::*;
    Ok(match (col, row) {
        ('A', 4) => A4,
        ('B', 1) => B1,
        ('B', 2) => B2,
        ('B', 3) => B3,
        ('B', 4) => B4,
        ('B', 5) => B5,
        ('C', 1) => C1,
        ('C', 2) => C2,
        ('C', 3) => C3,
        ('C', 4) => C4,
        ('C', 5) => C5,
        ('C', 6) => C6,
        _ => return Err(Error::Internal(format!("cell {col}{row} cannot occur, got {p}"))),
    })
}

/// `x^a + y^a + x^b y^c`.
pub fn family_polynomial(p: FamilyParams) -> Polynomial {
    Polynomial::from_xy(&[(1, p.a, 0), (1, 0, p.a), (1, p.b, p.c)])
}

fn xy(i: u32, j: u32) -> Polynomial {
    Polynomial::monomial(Monomial::xy(i, j))
}

fn ratio(n: u32, d: u32) -> Scalar {
    Scalar::new(n as i64, d as i64).expect("nonzero denominator")
}

/// Monic generators f1..f7, indexed from 1; `None` where an exponent would be negative.
fn generator(p: FamilyParams, k: usize) -> Option<Polynomial> {
    let (a, b, c) = (p.a, p.b, p.c);
    match k {
        // f_x / b
        1 => {
            let lead = xy(b.checked_sub(1)?, c);
            Some(&lead + &xy(a - 1, 0).scale(&ratio(a, b)))
        }
        // f_y / c
        2 => {
            let lead = xy(b, c.checked_sub(1)?);
            Some(&lead + &xy(0, a - 1).scale(&ratio(a, c)))
        }
        3 => Some(xy(a, 0)),
        4 => Some(xy(0, a)),
        5 => Some(xy(a.checked_sub(b + 1)?, a - 1)),
        6 => Some(xy(a - 1, a.checked_sub(c + 1)?)),
        7 => Some(xy(a.checked_sub(b)?, a - 1)),
        _ => None,
    }
}

fn case_generators(case: FamilyCase) -> &'static [usize] {
    use FamilyCase::*;
    match case {
        B1 | B2 | C1 | C2 => &[1, 2, 3, 4, 7],
        B3 => &[1, 2, 3, 4, 5],
        C3 | C4 | C5 => &[1, 3, 5, 6],
        A4 | B4 | B5 => &[1, 2, 3, 4, 5, 6],
        C6 => &[5, 6],
        BigB => &[],
    }
}

/// The reduced grlex basis of `(f, f_x, f_y)` predicted by the case grid,
/// monic and in the order listed for the case.
pub fn predicted_gb(p: FamilyParams) -> Result<Vec<Polynomial>> {
    let case = family_case(p)?;
    if case == FamilyCase::BigB {
        return Ok(vec![xy(p.a - 1, 0), xy(0, p.a - 1)]);
    }
    case_generators(case)
        .iter()
        .map(|&k| generator(p, k).ok_or_else(|| Error::Internal(format!("f{k} undefined for {p}"))))
        .collect()
}

/// Leading-term ideal generators, written out per case independently of
/// [`predicted_gb`].
pub fn predicted_lt_gens(p: FamilyParams) -> Result<MonomialIdeal> {
    let (a, b, c) = (p.a, p.b, p.c);
    let m = Monomial::xy;
    let gens = match family_case(p)? {
        FamilyCase::BigB => vec![m(a - 1, 0), m(0, a - 1)],
        FamilyCase::B1 | FamilyCase::B2 | FamilyCase::C1 | FamilyCase::C2 => {
            vec![m(b - 1, c), m(b, c - 1), m(a, 0), m(0, a), m(a - b, a - 1)]
        }
        FamilyCase::B3 => vec![m(b - 1, c), m(b, c - 1), m(a, 0), m(0, a), m(a - b - 1, a - 1)],
        FamilyCase::C3 | FamilyCase::C4 | FamilyCase::C5 => {
            vec![m(b - 1, c), m(a - b - 1, a - 1), m(a, 0), m(a - 1, a - c - 1)]
        }
        FamilyCase::A4 | FamilyCase::B4 | FamilyCase::B5 => {
            vec![m(b - 1, c), m(b, c - 1), m(a, 0), m(0, a), m(a - b - 1, a - 1), m(a - 1, a - c - 1)]
        }
        FamilyCase::C6 => vec![m(a - b - 1, a - 1), m(a - 1, a - c - 1)],
    };
    Ok(MonomialIdeal::new(2, gens))
}

/// Tjurina number at the origin from the closed-form case analysis.
#[allow(clippy::int_plus_one)]
pub fn tjurina_formula(p: FamilyParams) -> Result<u64> {
    let (a, b, c) = (p.a as i64, p.b as i64, p.c as i64);
    let l1 = b * (a - 1) + c * (a + 1) - b * c - a + 1;
    let l4 = b * (a - 1) + c * (a - 1) - b * c;
    let v = if b >= a || (b == a - 1 && 2 * c >= a) {
        (a - 1) * (a - 1)
    } else if a + 1 < 2 * b && b <= a - 1 && 2 * c <= a - 1 {
        l1
    } else if a + 1 < 2 * b && b < a - 1 && 2 * c == a {
        l1 - 1
    } else if a + 1 <= 2 * b && b < a - 1 && a + 1 <= 2 * c && c < a - 1 {
        l4
    } else {
        return Err(Error::Internal(format!("no formula branch for {p}")));
    };
    u64::try_from(v).map_err(|_| Error::Internal(format!("negative value {v} for {p}")))
}

/// `floor((3a^2 - 2a - 4) / 4)` and the parameters attaining it.
pub fn min_tjurina(a: u32) -> Result<(u64, FamilyParams)> {
    if a < 2 {
        return arg(format!("a must be at least 2, got {a}"));
    }
    let a64 = a as u64;
    let value = (3 * a64 * a64 - 2 * a64 - 4) / 4;
    let params = if a.is_multiple_of(2) {
        FamilyParams::new(a, a / 2 + 1, a / 2)?
    } else {
        FamilyParams::new(a, a.div_ceil(2), a.div_ceil(2))?
    };
    Ok((value, params))
}

/// The quantity `(a-b)(a-c) - bc` dividing the membership formulas for
/// `x^a, y^a`. It equals `a(a-b-c)`, hence is negative for every admissible tuple.
pub fn membership_denominator(p: FamilyParams) -> i64 {
    let (a, b, c) = (p.a as i64, p.b as i64, p.c as i64);
    (a - b) * (a - c) - b * c
}

/// Admissible tuples with `c <= b <= a + 2` for one `a`, in lexicographic order.
pub fn scan_params(a: u32) -> Vec<FamilyParams> {
    let mut out = Vec::new();
    for b in 0..=a + 2 {
        for c in 0..=b {
            if let Ok(p) = FamilyParams::new(a, b, c) {
                out.push(p);
            }
        }
    }
    out
}

/// Curves with a second tail monomial and their expected Tjurina numbers.
pub const TWO_TAIL_FIXTURES: [(&str, u64); 3] =
    [("x^9+y^9+x^5*y^7+x^7*y^4", 59), ("x^10+y^10+x^3*y^8+x^7*y^5", 71), ("x^10+y^10+x^2*y^9+x^7*y^6", 74)];
