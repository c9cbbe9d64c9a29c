//! Serializable report documents. Every number is an exact integer and
//! every rational is a `p/q` string.

use serde::{Deserialize, Serialize};

use planejac::{Classification, SingularityReport, TruncationTrace};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub version: String,
    pub curve: String,
    pub point: [String; 2],
    pub multiplicity: u32,
    pub ordinary: Option<bool>,
    pub tjurina: Option<u64>,
    pub milnor: Option<u64>,
    pub symmetry_order: Option<u32>,
    pub classification: String,
    pub trace_tjurina: Vec<(u32, u64)>,
    pub trace_milnor: Vec<(u32, u64)>,
    pub warnings: Vec<String>,
    pub elapsed_ms: u64,
}

/// One-line verdict, e.g. `A_5 (tau = 5)` or `smooth point, tangent: x - y = 0`.
pub fn verdict(r: &SingularityReport) -> String {
    match (&r.classification, &r.tangent) {
        (Classification::SmoothPoint, Some((a, b))) => {
            format!("smooth point, tangent: {}", planejac::singularity::tangent_line(a, b))
        }
        (Classification::A(n), _) => format!("A_{n} (tau = {n})"),
        (c, _) => c.to_string(),
    }
}

fn steps(t: &TruncationTrace) -> Vec<(u32, u64)> {
    t.steps.clone()
}

impl ReportDocument {
    pub fn new(curve: &str, r: &SingularityReport, elapsed_ms: u64) -> Self {
        let mut warnings = Vec::new();
        if !r.is_on_curve {
            warnings.push("point is not on the curve".to_string());
        }
        if let Err(e) = &r.tjurina {
            warnings.push(format!("tjurina: {e}"));
        }
        if let Err(e) = &r.milnor {
            warnings.push(format!("milnor: {e}"));
        }
        ReportDocument {
            version: VERSION.to_string(),
            curve: curve.to_string(),
            point: [r.point.x.to_string(), r.point.y.to_string()],
            multiplicity: r.multiplicity,
            ordinary: r.ordinary,
            tjurina: r.tjurina.as_ref().ok().copied(),
            milnor: r.milnor.as_ref().ok().copied(),
            symmetry_order: r.symmetry_order,
            classification: verdict(r),
            trace_tjurina: steps(&r.trace_tjurina),
            trace_milnor: steps(&r.trace_milnor),
            warnings,
            elapsed_ms,
        }
    }

    pub fn render_text(&self, trace: bool) -> String {
        let opt = |v: Option<u64>| v.map_or_else(|| "n/a".to_string(), |v| v.to_string());
        let mut s = String::new();
        s.push_str(&format!("{}\n", self.classification));
        s.push_str(&format!("  curve:          {}\n", self.curve));
        s.push_str(&format!("  point:          ({}, {})\n", self.point[0], self.point[1]));
        s.push_str(&format!("  multiplicity:   {}\n", self.multiplicity));
        if let Some(o) = self.ordinary {
            s.push_str(&format!("  ordinary:       {}\n", if o { "yes" } else { "no" }));
        }
        s.push_str(&format!("  tjurina:        {}\n", opt(self.tjurina)));
        s.push_str(&format!("  milnor:         {}\n", opt(self.milnor)));
        if let Some(k) = self.symmetry_order {
            s.push_str(&format!("  symmetric of order {k}\n"));
        }
        if trace {
            s.push_str(&format!("  trace tjurina:  {}\n", fmt_trace(&self.trace_tjurina)));
            s.push_str(&format!("  trace milnor:   {}\n", fmt_trace(&self.trace_milnor)));
        }
        for w in &self.warnings {
            s.push_str(&format!("  warning: {w}\n"));
        }
        s
    }
}

pub fn fmt_trace(steps: &[(u32, u64)]) -> String {
    if steps.is_empty() {
        return "-".to_string();
    }
    steps.iter().map(|(r, a)| format!("alpha_{r}={a}")).collect::<Vec<_>>().join(" ")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyDocument {
    pub version: String,
    pub curve: String,
    pub point: Vec<String>,
    /// `simple`, `double` or `multiple`.
    pub kind: String,
    pub verdict: String,
    pub a_index: Option<u64>,
    pub multiplicity: Option<u32>,
    pub tangent: Option<[String; 2]>,
    pub trace: Vec<(u32, u64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlobalDocument {
    pub version: String,
    pub curve: String,
    pub tjurina: u64,
    pub hilbert_values: Vec<(u32, u64)>,
    pub warnings: Vec<String>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRow {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub case: String,
    pub formula: u64,
    pub live: u64,
    /// `None` unless the basis was checked.
    pub gb_match: Option<bool>,
}

impl FamilyRow {
    pub fn ok(&self) -> bool {
        self.formula == self.live && self.gb_match != Some(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyMinimum {
    pub a: u32,
    pub observed: u64,
    pub expected: u64,
    pub at: [u32; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanDocument {
    pub version: String,
    pub a_range: [u32; 2],
    pub tuples: usize,
    pub mismatches: Vec<FamilyRow>,
    pub minima: Vec<FamilyMinimum>,
    pub rows: Vec<FamilyRow>,
}

impl ScanDocument {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.minima.iter().all(|m| m.observed == m.expected)
    }
}
