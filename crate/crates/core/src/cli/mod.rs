//! Command-line front end: `eval`, `report` and `verify`.
//!
//! [`execute`] does all the work and returns the text to print plus the exit
//! code, so the binary stays a two-liner and tests can drive it directly.
//! Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 resource bound.

pub mod expr;
pub mod registry;
pub mod report;
pub mod verify;

use crate::error::Error;
use crate::fqsym::SeriesIdentity;
use crate::hecke0::QuiverMethod;
use crate::mqsym::HilbertMethod;
use clap::{Parser, Subcommand, ValueEnum};
use report::{Report, SeriesName};
use std::ffi::OsString;
use verify::Suite;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Tsv,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "combhopf", version, about = "Exact computations in combinatorial Hopf algebras and 0-Hecke modules")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Degree bound for series inverses and verification suites.
    #[arg(long, global = true)]
    pub max_degree: Option<usize>,
    /// Order in q for truncated series comparisons.
    #[arg(long, global = true)]
    pub truncation: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an element expression, e.g. "F[12]*F[1]".
    Eval { expr: String },
    /// Produce a report.
    Report {
        #[command(subcommand)]
        kind: ReportKind,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    HopfAxioms,
    PaperExamples,
    Conjectures,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum HilbertAlgebra {
    Mqsym,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum HilbertMethodArg {
    Enumerate,
    DoubleCoset,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum QuiverMethodArg {
    Theorem,
    Ext1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesArg {
    Connected,
    ConnectedFilter,
    Enveloping,
    Primitive,
    MqsymFree,
    PrimitiveDims,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IdentityArg {
    H1,
    H2,
    H3,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum PosetOpArg {
    DisjointSum,
    Wedge,
}

#[derive(Debug, Subcommand)]
pub enum ReportKind {
    /// q-Cartan matrix of H_n(0).
    Cartan {
        n: usize,
        /// Entries as polynomials in q (the default).
        #[arg(long, conflicts_with = "at_one")]
        q: bool,
        /// Classical Cartan matrix, q = 1.
        #[arg(long)]
        at_one: bool,
    },
    /// Quiver of H_n(0).
    Quiver {
        n: usize,
        #[arg(long, value_enum, default_value = "theorem")]
        method: QuiverMethodArg,
    },
    /// Minimal projective resolution: MODULE is P(3,1), S(3,1), N[2413], M[2413], V[2,2], V[3,2/1], Poset{n=3; 1<3} or Reg(3).
    Resolve { module: String, k_max: usize },
    /// Composition factors, radical layers, socle and characteristic of a module.
    Module { module: String },
    /// Ext Poincaré series against the inverse q-Cartan matrix.
    Ext { n: usize },
    /// Radical of H_n(0) by three descriptions.
    Radical { n: usize },
    /// Hilbert series of an algebra.
    Hilbert {
        #[arg(value_enum)]
        algebra: HilbertAlgebra,
        d: usize,
        #[arg(long, value_enum, default_value = "enumerate")]
        method: HilbertMethodArg,
    },
    /// Characteristic polynomial of T_n (e.g. T4) or T_n(q) (e.g. T3q) on the regular representation.
    Charpoly { operator: String },
    /// Integer sequences.
    Series {
        #[arg(value_enum)]
        name: SeriesArg,
        n: usize,
    },
    /// Rank of products of PhiS over connected matrices in degree D.
    MqsymFreeness { d: usize },
    /// Norton idempotents of H_n(0).
    Norton { n: usize },
    /// Frobenius form of H_n(0).
    Frobenius { n: usize },
    /// Exact sequence for the induction product N_sigma (x) N_tau.
    Induction { sigma: String, tau: String },
    /// Standardization, RSK, hypoplactic insertion and factorizations of a word (w:3.1.4.1) or permutation.
    Word { word: String },
    /// Comparison of two permutations in Bruhat and weak orders.
    Order { sigma: String, tau: String },
    /// Enumerate permutations, compositions, packed matrices or words of size N.
    Enumerate {
        family: String,
        n: usize,
        #[arg(long)]
        max_letter: Option<usize>,
    },
    /// Operator f_A applied to a multiword, e.g. "[[2,0,1],[0,2,3]]" "abc . a^4b".
    Convolution { matrix: String, multiword: String },
    /// Primitive element V_alpha in the F basis.
    Primitive { alpha: String },
    /// QS-distribution on S_n at a probability vector "1/2,1/3,1/6".
    Distribution { n: usize, x: String },
    /// Linear extensions, Gamma(P) and the poset module, e.g. "n=3; 1<3".
    Poset { poset: String },
    /// Product of two binary trees, e.g. "((.,.),.)" "(.,.)".
    Trees { left: String, right: String },
    /// q-shuffle and shifted concatenation of two words, e.g. w:1.2 w:1.
    Shuffle { u: String, v: String },
    /// Minimal and maximal permutations of a descent class, e.g. "(2,1,2)".
    DescentClass { composition: String },
    /// Factorization-standardization of a permutation or word along a composition.
    Sfact { composition: String, word: String },
    /// T_n = sum over k of (1..k) box (1..n-k) in the group algebra.
    Tn {
        n: usize,
        /// The q-analogue T_n(q).
        #[arg(long)]
        q: bool,
    },
    /// Row merge P>K of a packed matrix and its PhiS expansion.
    RowMerge { matrix: String, composition: String },
    /// Homomorphism identity MS_A MS_B <-> f_A * f_B on generic multiwords, total degree <= D.
    ConvolutionCheck { d: usize },
    /// Disjoint sum or wedge of two posets, e.g. wedge "n=1" "n=2; 1<2".
    PosetCombine {
        #[arg(value_enum)]
        op: PosetOpArg,
        left: String,
        right: String,
    },
    /// Degree-by-degree check of a series inverse identity (H1, H2, H3).
    Identity {
        #[arg(value_enum)]
        which: IdentityArg,
    },
}

/// What to print and how to exit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_PASS, stdout, stderr: String::new() }
    }

    fn error(e: &Error) -> Self {
        let code = match e {
            Error::Resource { .. } => EXIT_RESOURCE,
            Error::Internal(_) => EXIT_FAILURE,
            _ => EXIT_USAGE,
        };
        Outcome { code, stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn emit(report: Report, format: Format) -> Outcome {
    let body = match format {
        Format::Text => Some(report.text),
        Format::Json => Some(serde_json::to_string_pretty(&report.json).expect("json values serialize")),
        Format::Tsv => report.tsv,
        Format::Dot => report.dot,
    };
    match body {
        Some(b) => Outcome::ok(with_newline(b)),
        None => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: format {format:?} is not available for this report\n"),
        },
    }
}

fn eval_command(src: &str, cli: &Cli) -> Result<Report, Error> {
    let opts = expr::EvalOptions { max_degree: cli.max_degree.unwrap_or(expr::EvalOptions::default().max_degree) };
    let v = expr::evaluate(src, opts)?;
    let text = v.render();
    let terms = v.terms();
    let tsv = terms.iter().map(|(l, c)| format!("{l}\t{c}\n")).collect();
    let json = serde_json::json!({
        "algebra": v.algebra(),
        "text": text,
        "terms": terms.iter().map(|(l, c)| serde_json::json!({ "label": l, "coeff": c })).collect::<Vec<_>>(),
    });
    Ok(Report { text, json, tsv: Some(tsv), dot: None })
}

fn report_command(kind: &ReportKind, cli: &Cli) -> Result<Report, Error> {
    use report as r;
    match kind {
        ReportKind::Cartan { n, at_one, .. } => r::cartan(*n, *at_one),
        ReportKind::Quiver { n, method } => r::quiver_report(
            *n,
            match method {
                QuiverMethodArg::Theorem => QuiverMethod::Theorem,
                QuiverMethodArg::Ext1 => QuiverMethod::Ext1,
            },
        ),
        ReportKind::Resolve { module, k_max } => r::resolve(module, *k_max),
        ReportKind::Module { module } => r::module(module),
        ReportKind::Ext { n } => r::ext(*n, cli.truncation.unwrap_or(6)),
        ReportKind::Radical { n } => r::radical(*n),
        ReportKind::Hilbert { algebra: HilbertAlgebra::Mqsym, d, method } => r::hilbert_mqsym(
            *d,
            match method {
                HilbertMethodArg::Enumerate => HilbertMethod::Enumerate,
                HilbertMethodArg::DoubleCoset => HilbertMethod::DoubleCoset,
            },
        ),
        ReportKind::Charpoly { operator } => r::charpoly(operator),
        ReportKind::Series { name, n } => r::series(
            match name {
                SeriesArg::Connected => SeriesName::Connected,
                SeriesArg::ConnectedFilter => SeriesName::ConnectedFilter,
                SeriesArg::Enveloping => SeriesName::Enveloping,
                SeriesArg::Primitive => SeriesName::Primitive,
                SeriesArg::MqsymFree => SeriesName::MqsymFree,
                SeriesArg::PrimitiveDims => SeriesName::PrimitiveDims,
            },
            *n,
        ),
        ReportKind::MqsymFreeness { d } => r::mqsym_freeness(*d),
        ReportKind::Norton { n } => r::norton(*n),
        ReportKind::Frobenius { n } => r::frobenius_report(*n),
        ReportKind::Induction { sigma, tau } => r::induction(&sigma.parse()?, &tau.parse()?),
        ReportKind::Word { word } => r::word(word),
        ReportKind::Order { sigma, tau } => r::order(&sigma.parse()?, &tau.parse()?),
        ReportKind::Enumerate { family, n, max_letter } => r::enumerate_report(family, *n, *max_letter),
        ReportKind::Convolution { matrix, multiword } => r::convolution(matrix, multiword),
        ReportKind::Primitive { alpha } => r::primitive(&alpha.parse()?),
        ReportKind::Distribution { n, x } => r::distribution(*n, x),
        ReportKind::Poset { poset } => r::poset(poset),
        ReportKind::Trees { left, right } => r::trees(left, right),
        ReportKind::Shuffle { u, v } => r::shuffle(u, v),
        ReportKind::DescentClass { composition } => r::descent_class_report(composition),
        ReportKind::Sfact { composition, word } => r::sfact_report(composition, word),
        ReportKind::Tn { n, q } => r::tn(*n, *q),
        ReportKind::RowMerge { matrix, composition } => r::row_merge_report(matrix, composition),
        ReportKind::ConvolutionCheck { d } => r::convolution_check(*d),
        ReportKind::PosetCombine { op, left, right } => r::poset_combine(
            match op {
                PosetOpArg::DisjointSum => r::PosetOp::DisjointSum,
                PosetOpArg::Wedge => r::PosetOp::Wedge,
            },
            left,
            right,
        ),
        ReportKind::Identity { which } => r::identity(
            match which {
                IdentityArg::H1 => SeriesIdentity::H1,
                IdentityArg::H2 => SeriesIdentity::H2,
                IdentityArg::H3 => SeriesIdentity::H3,
            },
            cli.max_degree.unwrap_or(4),
        ),
    }
}

fn verify_command(suite: SuiteArg, cli: &Cli) -> Outcome {
    let suite = match suite {
        SuiteArg::HopfAxioms => Suite::HopfAxioms,
        SuiteArg::PaperExamples => Suite::PaperExamples,
        SuiteArg::Conjectures => Suite::Conjectures,
    };
    let report = match verify::run(suite, cli.max_degree, cli.truncation) {
        Ok(r) => r,
        Err(e) => return Outcome::error(&e),
    };
    let body = match cli.format {
        Format::Text => report.to_text(),
        Format::Json => serde_json::to_string_pretty(&report.to_json()).expect("json values serialize") + "\n",
        Format::Tsv => report.to_tsv(),
        Format::Dot => {
            return Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: "error: format Dot is not available for verify\n".into() }
        }
    };
    let code = if report.passed() || suite.informational() { EXIT_PASS } else { EXIT_FAILURE };
    Outcome { code, stdout: body, stderr: String::new() }
}

/// Parses `args` (including the program name) and runs the command.
pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            return if code == EXIT_PASS { Outcome::ok(text) } else { Outcome { code, stdout: String::new(), stderr: text } };
        }
    };
    let result = match &cli.command {
        Command::Eval { expr } => eval_command(expr, &cli),
        Command::Report { kind } => report_command(kind, &cli),
        Command::Verify { suite } => return verify_command(*suite, &cli),
    };
    match result {
        Ok(r) => emit(r, cli.format),
        Err(e) => Outcome::error(&e),
    }
}
