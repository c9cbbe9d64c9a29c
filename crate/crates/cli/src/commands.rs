use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use planejac::{
    analyze, buchberger, classify_double_point_traced, family_case, family_polynomial, global_tjurina_detailed,
    leading_term_ideal, local_tjurina, min_tjurina, parse_poly, predicted_gb, predicted_lt_gens, render_poly,
    scan_params, tjurina_formula, Ambient, ClassificationOutcome, Error, ExprSyntaxError, FamilyParams, LengthResult,
    Monomial, MonomialOrder, Point, Polynomial, Scalar,
};

use crate::args::{AnalyzeArgs, ClassifyArgs, Cli, Command, FamilyArgs, GlobalArgs};
use crate::report::{
    fmt_trace, ClassifyDocument, FamilyMinimum, FamilyRow, GlobalDocument, ReportDocument, ScanDocument, VERSION,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_ANALYSIS: i32 = 3;
pub const EXIT_OFF_CURVE: i32 = 4;

/// A failed command: exit code plus message for the error stream.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Self {
        Failure { code: EXIT_PARSE, message: message.into() }
    }

    fn syntax(text: &str, e: &ExprSyntaxError) -> Self {
        let caret = format!("{}^", " ".repeat(text[..e.offset].chars().count()));
        Failure::parse(format!("{e}\n  {text}\n  {caret}"))
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Argument(_) => EXIT_PARSE,
            _ => EXIT_ANALYSIS,
        };
        Failure { code, message: e.to_string() }
    }
}

type Outcome = Result<i32, Failure>;

pub struct Ctx<'a> {
    pub pool: rayon::ThreadPool,
    pub json: bool,
    pub trace: bool,
    pub out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn emit_json<T: Serialize>(&mut self, v: &T) -> Result<(), Failure> {
        let text =
            serde_json::to_string_pretty(v).map_err(|e| Failure { code: EXIT_ANALYSIS, message: e.to_string() })?;
        self.line(&text)
    }

    fn line(&mut self, s: &str) -> Result<(), Failure> {
        writeln!(self.out, "{s}").map_err(|e| Failure { code: EXIT_ANALYSIS, message: format!("write failed: {e}") })
    }
}

pub fn thread_pool(threads: Option<usize>) -> Result<rayon::ThreadPool, Failure> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or(0))
        .build()
        .map_err(|e| Failure::parse(format!("cannot start {threads:?} threads: {e}")))
}

pub fn dispatch(cli: &Cli, ctx: &mut Ctx<'_>) -> Outcome {
    match &cli.command {
        Command::Analyze(a) => cmd_analyze(a, ctx),
        Command::Classify(a) => cmd_classify(a, ctx),
        Command::GlobalTjurina(a) => cmd_global_tjurina(a, ctx),
        Command::Family(a) => cmd_family(a, ctx),
    }
}

fn parse_coords(text: &str, n: usize) -> Result<Vec<Scalar>, Failure> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != n {
        return Err(Failure::parse(format!("point {text:?} must have {n} comma-separated coordinates")));
    }
    parts.iter().map(|p| p.parse::<Scalar>().map_err(Failure::from)).collect()
}

fn parse_curve(text: &str, ambient: Ambient) -> Result<Polynomial, Failure> {
    parse_poly(text, ambient).map_err(|e| Failure::syntax(text, &e))
}

fn millis(t: Instant) -> u64 {
    t.elapsed().as_millis() as u64
}

fn analyze_one(text: &str, p: &Point) -> Result<ReportDocument, Failure> {
    let start = Instant::now();
    let f = parse_curve(text, Ambient::Affine2)?;
    let report = analyze(&f, p)?;
    if let Err(e) = &report.tjurina {
        return Err(Failure { code: EXIT_ANALYSIS, message: e.to_string() });
    }
    Ok(ReportDocument::new(text, &report, millis(start)))
}

fn curves_from_file(path: &std::path::Path) -> Result<Vec<(usize, String)>, Failure> {
    let content = std::fs::read_to_string(path).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
    Ok(content
        .lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let body = line.split('#').next().unwrap_or("").trim();
            (!body.is_empty()).then(|| (i + 1, body.to_string()))
        })
        .collect())
}

fn cmd_analyze(args: &AnalyzeArgs, ctx: &mut Ctx<'_>) -> Outcome {
    let c = parse_coords(&args.point, 2)?;
    let p = Point::new(c[0].clone(), c[1].clone());
    let Some(path) = &args.curves_file else {
        let doc = analyze_one(args.curve.as_deref().unwrap_or_default(), &p)?;
        if ctx.json {
            ctx.emit_json(&doc)?;
        } else {
            ctx.line(doc.render_text(ctx.trace).trim_end())?;
        }
        return Ok(EXIT_OK);
    };

    let curves = curves_from_file(path)?;
    let results: Vec<_> = ctx.pool.install(|| curves.par_iter().map(|(_, text)| analyze_one(text, &p)).collect());
    let mut code = EXIT_OK;
    let mut docs = Vec::new();
    let mut errors = Vec::new();
    for ((line, text), res) in curves.iter().zip(results) {
        match res {
            Ok(doc) => docs.push((*line, doc)),
            Err(f) => {
                code = code.max(f.code);
                errors.push(format!("line {line} ({text}): {}", f.message));
            }
        }
    }
    if ctx.json {
        let only: Vec<&ReportDocument> = docs.iter().map(|(_, d)| d).collect();
        ctx.emit_json(&only)?;
    } else {
        for (line, doc) in &docs {
            ctx.line(&format!("# line {line}"))?;
            ctx.line(doc.render_text(ctx.trace).trim_end())?;
        }
    }
    if code == EXIT_OK {
        Ok(code)
    } else {
        Err(Failure { code, message: errors.join("\n") })
    }
}

/// Moves a projective point to the chart where its last nonzero
/// coordinate is 1 and returns the affine curve and point there.
fn dehomogenize(f: &Polynomial, p: &[Scalar]) -> Result<(Polynomial, Point), Failure> {
    if !f.is_homogeneous() || f.is_zero() {
        return Err(Failure::parse("projective curve must be a nonzero homogeneous polynomial"));
    }
    let Some(k) = (0..3).rev().find(|&i| !p[i].is_zero()) else {
        return Err(Failure::parse("projective point cannot be 0,0,0"));
    };
    let rest: Vec<usize> = (0..3).filter(|&i| i != k).collect();
    let mut images = vec![Polynomial::zero(2); 3];
    images[rest[0]] = Polynomial::var(2, 0);
    images[rest[1]] = Polynomial::var(2, 1);
    images[k] = Polynomial::constant(2, Scalar::one());
    let g = f.substitute(&images)?;
    let pk = &p[k];
    let point = Point::new(&p[rest[0]] / pk, &p[rest[1]] / pk);
    Ok((g, point))
}

fn cmd_classify(args: &ClassifyArgs, ctx: &mut Ctx<'_>) -> Outcome {
    let (f, p, point_text) = if args.projective {
        let big = parse_curve(&args.curve, Ambient::Projective3)?;
        let c = parse_coords(&args.point, 3)?;
        let (g, p) = dehomogenize(&big, &c)?;
        (g, p, c)
    } else {
        let f = parse_curve(&args.curve, Ambient::Affine2)?;
        let c = parse_coords(&args.point, 2)?;
        let p = Point::new(c[0].clone(), c[1].clone());
        (f, p, c)
    };
    if f.is_zero() {
        return Err(Failure::parse("curve is the zero polynomial"));
    }
    if !f.evaluate(&p.coords())?.is_zero() {
        return Err(Failure { code: EXIT_OFF_CURVE, message: format!("point {p} is not on the curve") });
    }
    let (outcome, trace) = classify_double_point_traced(&f, &p)?;
    let mut doc = ClassifyDocument {
        version: VERSION.to_string(),
        curve: args.curve.clone(),
        point: point_text.iter().map(Scalar::to_string).collect(),
        kind: String::new(),
        verdict: outcome.to_string(),
        a_index: None,
        multiplicity: None,
        tangent: None,
        trace: trace.steps.clone(),
    };
    match &outcome {
        ClassificationOutcome::Simple { tangent } => {
            doc.kind = "simple".into();
            doc.multiplicity = Some(1);
            doc.tangent = Some([tangent.0.to_string(), tangent.1.to_string()]);
        }
        ClassificationOutcome::DoubleA(n) => {
            doc.kind = "double".into();
            doc.multiplicity = Some(2);
            doc.a_index = Some(*n);
        }
        ClassificationOutcome::MultiplicityAtLeast3(m) => {
            doc.kind = "multiple".into();
            doc.multiplicity = Some(*m);
        }
    }
    if ctx.json {
        ctx.emit_json(&doc)?;
    } else {
        ctx.line(&doc.verdict)?;
        if ctx.trace {
            ctx.line(&format!("  trace: {}", fmt_trace(&doc.trace)))?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_global_tjurina(args: &GlobalArgs, ctx: &mut Ctx<'_>) -> Outcome {
    let start = Instant::now();
    let f = parse_curve(&args.curve, Ambient::Projective3)?;
    if f.is_zero() || !f.is_homogeneous() {
        return Err(Failure::parse("curve must be a nonzero homogeneous polynomial in x0, x1, x2"));
    }
    let g = global_tjurina_detailed(&f)?;
    let LengthResult::Finite(tau) = g.value else {
        return Err(Failure {
            code: EXIT_ANALYSIS,
            message: "the singular scheme has positive dimension (curve is not reduced)".into(),
        });
    };
    let mut warnings = Vec::new();
    if g.window_extended {
        warnings.push("Hilbert function window was extended before it stabilized".to_string());
    }
    let doc = GlobalDocument {
        version: VERSION.to_string(),
        curve: args.curve.clone(),
        tjurina: tau,
        hilbert_values: g.hilbert_values,
        warnings,
        elapsed_ms: millis(start),
    };
    if ctx.json {
        ctx.emit_json(&doc)?;
        return Ok(EXIT_OK);
    }
    ctx.line(&tau.to_string())?;
    if ctx.trace {
        for (t, v) in &doc.hilbert_values {
            ctx.line(&format!("  HF({t}) = {v}"))?;
        }
    }
    for w in &doc.warnings {
        ctx.line(&format!("  warning: {w}"))?;
    }
    Ok(EXIT_OK)
}

fn sorted_render(polys: &[Polynomial], order: &MonomialOrder) -> Vec<String> {
    let mut v: Vec<String> = polys.iter().map(|p| render_poly(p, order)).collect();
    v.sort();
    v
}

fn family_row(p: FamilyParams, verify_gb: bool) -> Result<FamilyRow, Error> {
    let f = family_polynomial(p);
    let live = local_tjurina(&f, &Point::origin())?.0;
    let gb_match = if verify_gb {
        let order = MonomialOrder::grlex();
        let mut gens = vec![f.clone()];
        gens.extend(f.gradient());
        let gb = buchberger(&gens, &order)?;
        let same_basis = sorted_render(gb.generators(), &order) == sorted_render(&predicted_gb(p)?, &order);
        Some(same_basis && leading_term_ideal(&gb) == predicted_lt_gens(p)?)
    } else {
        None
    };
    Ok(FamilyRow {
        a: p.a(),
        b: p.b(),
        c: p.c(),
        case: family_case(p)?.to_string(),
        formula: tjurina_formula(p)?,
        live,
        gb_match,
    })
}

fn monomial_text(m: &Monomial) -> String {
    render_poly(&Polynomial::monomial(*m), &MonomialOrder::grlex())
}

fn cmd_family(args: &FamilyArgs, ctx: &mut Ctx<'_>) -> Outcome {
    if args.scan {
        return family_scan(args, ctx);
    }
    let Some(a) = args.a else {
        return Err(Failure::parse("give --a with --b and --c, or --scan"));
    };
    let (Some(b), Some(c)) = (args.b, args.c) else {
        let (value, at) = min_tjurina(a)?;
        let live = local_tjurina(&family_polynomial(at), &Point::origin())?.0;
        if ctx.json {
            ctx.emit_json(&FamilyMinimum { a, observed: live, expected: value, at: [at.a(), at.b(), at.c()] })?;
        } else {
            ctx.line(&format!("minimum tau for a = {a}: {value} at {at}, live {live}"))?;
        }
        return Ok(if live == value { EXIT_OK } else { EXIT_MISMATCH });
    };
    let p = FamilyParams::new(a, b, c)?;
    let row = family_row(p, args.verify_gb)?;
    if ctx.json {
        ctx.emit_json(&row)?;
    } else {
        let order = MonomialOrder::grlex();
        let basis: Vec<String> = predicted_gb(p)?.iter().map(|g| render_poly(g, &order)).collect();
        let lts: Vec<String> = predicted_lt_gens(p)?.generators().iter().map(monomial_text).collect();
        ctx.line(&format!("curve: {}", render_poly(&family_polynomial(p), &order)))?;
        ctx.line(&format!("parameters: {p}"))?;
        ctx.line(&format!("case: {}", row.case))?;
        ctx.line(&format!("predicted basis: {}", basis.join(", ")))?;
        ctx.line(&format!("predicted leading terms: {}", lts.join(", ")))?;
        ctx.line(&format!("tau (formula): {}", row.formula))?;
        ctx.line(&format!("tau (live): {}", row.live))?;
        if let Some(m) = row.gb_match {
            ctx.line(&format!("basis: {}", if m { "match" } else { "MISMATCH" }))?;
        }
    }
    Ok(if row.ok() { EXIT_OK } else { EXIT_MISMATCH })
}

fn family_scan(args: &FamilyArgs, ctx: &mut Ctx<'_>) -> Outcome {
    let lo = args.a.unwrap_or(2);
    let hi = args.a_max.unwrap_or(if args.a.is_some() { lo } else { 12 });
    if lo < 2 || hi < lo {
        return Err(Failure::parse(format!("invalid range a = {lo}..{hi}")));
    }
    let params: Vec<FamilyParams> = (lo..=hi).flat_map(scan_params).collect();
    let verify = args.verify_gb;
    let rows = ctx.pool.install(|| params.par_iter().map(|&p| family_row(p, verify)).collect::<Result<Vec<_>, _>>())?;
    let mut minima = Vec::new();
    for a in lo..=hi {
        let (expected, _) = min_tjurina(a)?;
        let best = rows.iter().filter(|r| r.a == a).min_by_key(|r| (r.live, r.b, r.c)).expect("nonempty scan");
        minima.push(FamilyMinimum { a, observed: best.live, expected, at: [best.a, best.b, best.c] });
    }
    let doc = ScanDocument {
        version: VERSION.to_string(),
        a_range: [lo, hi],
        tuples: rows.len(),
        mismatches: rows.iter().filter(|r| !r.ok()).cloned().collect(),
        minima,
        rows,
    };
    if ctx.json {
        ctx.emit_json(&doc)?;
    } else {
        if ctx.trace {
            for r in &doc.rows {
                let gb = r.gb_match.map_or("", |m| if m { "  basis ok" } else { "  basis MISMATCH" });
                ctx.line(&format!(
                    "a={:<3} b={:<3} c={:<3} {:<5} formula={:<4} live={:<4}{gb}",
                    r.a, r.b, r.c, r.case, r.formula, r.live
                ))?;
            }
        }
        for m in &doc.minima {
            ctx.line(&format!(
                "a={:<3} min tau = {} at (b={}, c={}), expected {}{}",
                m.a,
                m.observed,
                m.at[1],
                m.at[2],
                m.expected,
                if m.observed == m.expected { "" } else { "  MISMATCH" }
            ))?;
        }
        for r in &doc.mismatches {
            ctx.line(&format!(
                "mismatch at (a={}, b={}, c={}): formula {}, live {}, basis {:?}",
                r.a, r.b, r.c, r.formula, r.live, r.gb_match
            ))?;
        }
        ctx.line(&format!("checked {} tuples, {} mismatches", doc.tuples, doc.mismatches.len()))?;
    }
    Ok(if doc.passed() { EXIT_OK } else { EXIT_MISMATCH })
}
