use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "planejac", version, about = "Tjurina and Milnor numbers of plane curve singularities")]
pub struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Include intermediate sequences (truncation colengths, Hilbert function values).
    #[arg(long, global = true)]
    pub trace: bool,

    /// Worker threads for batch and scan modes; defaults to all cores.
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full local report for an affine curve at a point.
    Analyze(AnalyzeArgs),
    /// Decide whether a point is simple, an A_n double point, or of multiplicity >= 3.
    Classify(ClassifyArgs),
    /// Global Tjurina number of a projective curve.
    GlobalTjurina(GlobalArgs),
    /// Closed forms for x^a + y^a + x^b y^c, single tuple or scan.
    Family(FamilyArgs),
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Polynomial in x, y.
    #[arg(long, allow_hyphen_values = true, required_unless_present = "curves_file", conflicts_with = "curves_file")]
    pub curve: Option<String>,

    /// Point as `x,y` with integer or `p/q` coordinates.
    #[arg(long, allow_hyphen_values = true, default_value = "0,0")]
    pub point: String,

    /// File with one curve per line; `#` starts a comment.
    #[arg(long, value_name = "PATH")]
    pub curves_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// Polynomial in x, y, or a form in x0, x1, x2 with `--projective`.
    #[arg(long, allow_hyphen_values = true)]
    pub curve: String,

    /// `x,y`, or `x0,x1,x2` with `--projective`.
    #[arg(long, allow_hyphen_values = true, default_value = "0,0")]
    pub point: String,

    /// Read the curve and point projectively.
    #[arg(long)]
    pub projective: bool,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Homogeneous polynomial in x0, x1, x2.
    #[arg(long, allow_hyphen_values = true)]
    pub curve: String,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long)]
    pub a: Option<u32>,
    #[arg(long, requires = "c")]
    pub b: Option<u32>,
    #[arg(long, requires = "b")]
    pub c: Option<u32>,

    /// Check every admissible (b, c) for each a in range.
    #[arg(long, conflicts_with_all = ["b", "c"])]
    pub scan: bool,

    /// Upper end of the scanned range of a.
    #[arg(long, requires = "scan")]
    pub a_max: Option<u32>,

    /// Also run Buchberger and compare with the predicted basis.
    #[arg(long)]
    pub verify_gb: bool,
}
