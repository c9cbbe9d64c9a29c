use std::io::Write;
use std::process::{Command, Output};

use planejac_cli::report::{ClassifyDocument, GlobalDocument, ScanDocument};
use planejac_cli::ReportDocument;

fn planejac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_planejac")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn analyze_json_report() {
    let o = planejac(&["analyze", "--curve", "x^5-y^5", "--point", "0,0", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc: ReportDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc.tjurina, Some(16));
    assert_eq!(doc.milnor, Some(16));
    assert_eq!(doc.ordinary, Some(true));
    assert_eq!(doc.point, ["0".to_string(), "0".to_string()]);
    assert_eq!(doc.trace_tjurina.last(), Some(&(8, 16)));
}

#[test]
fn analyze_text_verdicts() {
    let o = planejac(&["analyze", "--curve", "y^2-x^6", "--point", "0,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("A_5 (tau = 5)"), "{}", stdout(&o));

    let o = planejac(&["analyze", "--curve", "y^2-x", "--point", "0,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("smooth point, tangent: "), "{}", stdout(&o));
}

#[test]
fn analyze_rational_point() {
    // node of y^2 = (x - 1/2)^2 (x + 1) at (1/2, 0)
    let o = planejac(&["analyze", "--curve", "y^2-(x-1/2)^2*(x+1)", "--point", "1/2,0", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc: ReportDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc.point, ["1/2".to_string(), "0".to_string()]);
    assert_eq!(doc.tjurina, Some(1));
}

#[test]
fn parse_errors_exit_2() {
    let o = planejac(&["analyze", "--curve", "x+z", "--point", "0,0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("offset 2"), "{}", stderr(&o));

    let o = planejac(&["analyze", "--curve", "x^2-y^3", "--point", "1/0,0"]);
    assert_eq!(o.status.code(), Some(2));

    let o = planejac(&["analyze", "--curve", "x^2-y^3", "--point", "1"]);
    assert_eq!(o.status.code(), Some(2));

    let o = planejac(&["analyze", "--bogus-flag"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn non_isolated_singularity_exits_3() {
    let o = planejac(&["analyze", "--curve", "x^2*y", "--point", "0,0"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("not isolated"), "{}", stderr(&o));
}

#[test]
fn classify_verdicts() {
    for (curve, want) in [("y^2-x^3", "A_2"), ("y^2-x^4", "A_3"), ("x^5-y^5", "multiplicity >= 3 (m = 5)")] {
        let o = planejac(&["classify", "--curve", curve, "--point", "0,0"]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).trim(), want);
    }
    let o = planejac(&["classify", "--curve", "x-y+x^2", "--point", "0,0"]);
    assert!(stdout(&o).starts_with("simple point, tangent: "));
}

#[test]
fn classify_off_curve_exits_4() {
    let o = planejac(&["classify", "--curve", "y^2-x^3", "--point", "1,0"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn classify_projective_point() {
    // the nodal cubic has its node at [1:0:0]
    let o = planejac(&["--json", "classify", "--projective", "--curve", "x1^2*x0-x2^2*(x2+x0)", "--point", "1,0,0"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc: ClassifyDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc.a_index, Some(1));

    // cusp of x0 x1^2 = x2^3 at [1:0:0], scaled representative
    let o = planejac(&["classify", "--projective", "--curve", "x0*x1^2-x2^3", "--point", "-3,0,0"]);
    assert_eq!(stdout(&o).trim(), "A_2");

    let o = planejac(&["classify", "--projective", "--curve", "x0*x1^2-x2^3", "--point", "0,0,1"]);
    assert_eq!(o.status.code(), Some(4));

    let o = planejac(&["classify", "--projective", "--curve", "x0*x1^2-x2^2", "--point", "1,0,0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn global_tjurina_values() {
    let o = planejac(&["global-tjurina", "--curve", "x1^5-x2^5"]);
    assert_eq!(stdout(&o).trim(), "16");
    let o = planejac(&["global-tjurina", "--curve", "x0^2+x1^2+x2^2"]);
    assert_eq!(stdout(&o).trim(), "0");
    let o = planejac(&["--json", "global-tjurina", "--curve", "x1^2*x0-x2^2*(x2+x0)"]);
    let doc: GlobalDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc.tjurina, 1);
    let o = planejac(&["--trace", "global-tjurina", "--curve", "x1^5-x2^5"]);
    assert!(stdout(&o).contains("HF(6) = 16"), "{}", stdout(&o));
}

#[test]
fn global_tjurina_errors() {
    let o = planejac(&["global-tjurina", "--curve", "x1^2+x2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = planejac(&["global-tjurina", "--curve", "x0^2*x1"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn family_single_tuple() {
    let o = planejac(&["family", "--a", "9", "--b", "7", "--c", "3", "--verify-gb"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("case: B1"));
    assert!(text.contains("tau (formula): 57"));
    assert!(text.contains("tau (live): 57"));
    assert!(text.contains("basis: match"));

    let o = planejac(&["family", "--a", "3", "--b", "2", "--c", "2"]);
    assert!(stdout(&o).contains("tau (live): 4"));
}

#[test]
fn family_invalid_parameters_exit_2() {
    let o = planejac(&["family", "--a", "9", "--b", "4", "--c", "5"]);
    assert_eq!(o.status.code(), Some(2));
    let o = planejac(&["family", "--a", "1", "--b", "4", "--c", "5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn family_scan_reports_minimum() {
    let o = planejac(&["family", "--a", "9", "--scan"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("min tau = 55"), "{}", stdout(&o));
}

#[test]
fn family_scan_is_deterministic() {
    let args = ["--json", "--threads", "3", "family", "--scan", "--a-max", "8", "--verify-gb"];
    let first = planejac(&args);
    let second = planejac(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let doc: ScanDocument = serde_json::from_str(&stdout(&first)).unwrap();
    assert!(doc.passed());
    assert_eq!(doc.a_range, [2, 8]);
    let keys: Vec<(u32, u32, u32)> = doc.rows.iter().map(|r| (r.a, r.b, r.c)).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn curves_file_keeps_input_order() {
    let dir = std::env::temp_dir().join(format!("planejac-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("curves.txt");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "# fixtures").unwrap();
    writeln!(f, "x^5-y^5").unwrap();
    writeln!(f).unwrap();
    writeln!(f, "y^2-x^3   # cusp").unwrap();
    writeln!(f, "y^2-x^2").unwrap();
    drop(f);

    let o = planejac(&["--json", "analyze", "--curves-file", path.to_str().unwrap(), "--point", "0,0"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let docs: Vec<ReportDocument> = serde_json::from_str(&stdout(&o)).unwrap();
    let taus: Vec<Option<u64>> = docs.iter().map(|d| d.tjurina).collect();
    assert_eq!(taus, vec![Some(16), Some(2), Some(1)]);
    assert_eq!(docs[1].curve, "y^2-x^3");

    std::fs::write(&path, "y^2-x^3\nx+\n").unwrap();
    let o = planejac(&["analyze", "--curves-file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"));
    std::fs::remove_dir_all(&dir).ok();
}
