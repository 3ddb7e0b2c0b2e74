//! Command-line surface: `gen`, `check`, `forge` and `fuzz`.
//!
//! Exit codes: 0 on success or a positive classification, 2 when a
//! hypothesis violation or property failure was found (a witness is printed),
//! 1 on usage, input or IO errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::Algebra;
use crate::analysis::{analyze, check_facts, AnalysisReport, FactsReport, HypothesisStatus, ViolationWitness};
use crate::forge::{
    anti_associativity, forge, norm_multiplicativity, permutation_laws, Classification, ForgeOptions, ForgeResult,
    PropertyReport,
};
use crate::generators::{
    cayley_dickson_chain, direct_sum, disguise, octonion_algebra, quaternion_algebra, sedenions, CayleyDicksonParams,
};
use crate::io::{load_algebra, render_algebra, to_json};
use crate::sampling::{Sampling, DEFAULT_MAX_NUM, DEFAULT_TRIALS};
use crate::scalar::{FieldSpec, Scalar};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "octoforge", version, about = "Quaternion and octonion frames in finite-dimensional algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a generated algebra file.
    Gen(GenArgs),
    /// Report commutativity, associativity, alternativity, nucleus, center
    /// and the sampled hypotheses.
    Check(RunArgs),
    /// Search for a quaternion or octonion frame, or a zero-divisor witness.
    Forge(RunArgs),
    /// Run the randomized property suites.
    Fuzz(RunArgs),
}

#[derive(Debug, Args)]
struct GenArgs {
    #[command(subcommand)]
    kind: GenKind,
    /// Work over F_p instead of Q.
    #[arg(long, global = true)]
    prime: Option<u64>,
    /// Output path; stdout when omitted.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum GenKind {
    /// H(alpha, beta): i^2 = alpha, j^2 = beta, ij = -ji.
    Quaternion {
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        beta: String,
    },
    /// O(alpha, beta, gamma) by Cayley-Dickson doubling of H(alpha, beta).
    Octonion {
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        beta: String,
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        gamma: String,
    },
    /// Iterated doubling of the ground field, one `--mu` per step.
    CayleyDickson {
        #[arg(long = "mu", required = true, allow_hyphen_values = true)]
        mus: Vec<String>,
    },
    /// The 16-dimensional doubling with all parameters -1.
    Sedenion,
    /// The input algebra under a random change of basis.
    Disguise {
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The direct product of two algebras over the same field.
    DirectSum { left: PathBuf, right: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
struct RunArgs {
    input: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    trials: u64,
    #[arg(long, default_value_t = DEFAULT_MAX_NUM)]
    max_num: i64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Output path; stdout when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

impl RunArgs {
    fn sampling(&self) -> Sampling {
        Sampling { trials: self.trials, seed: self.seed, max_num: self.max_num }
    }
}

/// An error that ends the command with exit code 1.
#[derive(Debug)]
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
        }
    };
    let outcome = match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Check(args) => cmd_check(args),
        Command::Forge(args) => cmd_forge(args),
        Command::Fuzz(args) => cmd_fuzz(args),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure(message)) => {
            eprintln!("error: {message}");
            EXIT_ERROR
        }
    }
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load(path: &Path) -> Result<Algebra, Failure> {
    load_algebra(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn cmd_gen(args: GenArgs) -> Result<i32, Failure> {
    let field = match args.prime {
        Some(p) => FieldSpec::prime(p)?,
        None => FieldSpec::rational(),
    };
    let scalar = |text: &str| Scalar::parse(text, field);
    let algebra = match &args.kind {
        GenKind::Quaternion { alpha, beta } => quaternion_algebra(field, &scalar(alpha)?, &scalar(beta)?)?,
        GenKind::Octonion { alpha, beta, gamma } => {
            octonion_algebra(field, &scalar(alpha)?, &scalar(beta)?, &scalar(gamma)?)?
        }
        GenKind::CayleyDickson { mus } => {
            let mus = mus.iter().map(|m| scalar(m)).collect::<Result<Vec<_>, _>>()?;
            cayley_dickson_chain(&CayleyDicksonParams::new(field, mus)?)?
        }
        GenKind::Sedenion => sedenions(field)?,
        GenKind::Disguise { input, seed } => disguise(&load(input)?, *seed).0,
        GenKind::DirectSum { left, right } => direct_sum(&load(left)?, &load(right)?)?,
    };
    emit(args.output.as_deref(), &render_algebra(&algebra))?;
    Ok(EXIT_OK)
}

fn cmd_check(args: RunArgs) -> Result<i32, Failure> {
    let algebra = load(&args.input)?;
    let report = analyze(&algebra, args.sampling());
    let text = match args.format {
        Format::Json => to_json(&report),
        Format::Text => render_analysis(&algebra, &report),
    };
    emit(args.output.as_deref(), &text)?;
    Ok(if report.hypothesis_i.holds() { EXIT_OK } else { EXIT_VIOLATION })
}

fn cmd_forge(args: RunArgs) -> Result<i32, Failure> {
    let (algebra, result) = match load_algebra(&args.input) {
        Ok(algebra) => {
            let options = ForgeOptions { sampling: args.sampling(), ..ForgeOptions::default() };
            let result = forge(&algebra, options);
            (Some(algebra), result)
        }
        Err(e) if e.is_characteristic_two() => {
            (None, ForgeResult::char_two_unsupported(&args.input.display().to_string()))
        }
        Err(e) => return Err(Failure(format!("{}: {e}", args.input.display()))),
    };
    let text = match args.format {
        Format::Json => to_json(&result),
        Format::Text => render_forge(algebra.as_ref(), &result),
    };
    emit(args.output.as_deref(), &text)?;
    Ok(forge_exit_code(result.classification))
}

pub fn forge_exit_code(classification: Classification) -> i32 {
    match classification {
        Classification::QuaternionSaturated
        | Classification::OctonionSaturated
        | Classification::CommutativeOutOfScope
        | Classification::CenterNotScalar => EXIT_OK,
        Classification::HypothesisViolated => EXIT_VIOLATION,
        Classification::CharTwoUnsupported => EXIT_ERROR,
    }
}

/// Everything `fuzz` checks on one algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FuzzReport {
    pub algebra: String,
    pub classification: Classification,
    pub witness: Option<ViolationWitness>,
    /// Commutator facts; only for alternative, non-associative algebras.
    pub facts: Option<FactsReport>,
    /// Frame identities; only when a frame spanning the algebra was found.
    pub properties: Vec<PropertyReport>,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.classification != Classification::HypothesisViolated
            && self.facts.as_ref().is_none_or(FactsReport::all_passed)
            && self.properties.iter().all(PropertyReport::passed)
    }
}

pub fn fuzz(algebra: &Algebra, sampling: Sampling) -> FuzzReport {
    let result = forge(algebra, ForgeOptions { sampling, ..ForgeOptions::default() });
    let facts = (result.classification == Classification::OctonionSaturated).then(|| check_facts(algebra, sampling));
    let properties = match &result.frame {
        Some(frame) => vec![
            permutation_laws(algebra, frame),
            anti_associativity(algebra, frame),
            norm_multiplicativity(algebra, frame, sampling),
        ],
        None => Vec::new(),
    };
    FuzzReport {
        algebra: algebra.name().to_string(),
        classification: result.classification,
        witness: result.witness,
        facts,
        properties,
    }
}

fn cmd_fuzz(args: RunArgs) -> Result<i32, Failure> {
    let algebra = load(&args.input)?;
    let report = fuzz(&algebra, args.sampling());
    let text = match args.format {
        Format::Json => to_json(&report),
        Format::Text => render_fuzz(&algebra, &report),
    };
    emit(args.output.as_deref(), &text)?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_VIOLATION })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn render_witness(out: &mut String, algebra: &Algebra, w: &ViolationWitness) {
    let _ = writeln!(out, "witness ({:?}):", w.kind);
    let _ = writeln!(out, "  left  = {}", algebra.render(&w.left));
    let _ = writeln!(out, "  right = {}", algebra.render(&w.right));
    let _ = writeln!(out, "  product = {}", algebra.render(&algebra.multiply(&w.left, &w.right)));
    let _ = writeln!(out, "  {}", w.provenance);
}

pub fn render_analysis(algebra: &Algebra, report: &AnalysisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "algebra: {} (dimension {}, over {})", report.name, report.dim, algebra.field());
    let _ = writeln!(out, "commutative: {}", yes_no(report.is_commutative));
    let _ = writeln!(out, "associative: {}", yes_no(report.is_associative));
    let _ = writeln!(out, "alternative: {}", yes_no(report.is_alternative));
    if let Some(f) = &report.alternativity_failure {
        let _ = writeln!(out, "  {:?} alternative law fails on basis triple {:?}", f.law, f.triple);
    }
    let _ = writeln!(out, "nucleus dim: {}", report.nucleus.dim());
    let _ = writeln!(out, "center dim: {}", report.center.dim());
    for (name, status) in
        [("commutators invertible", &report.hypothesis_i), ("commutator squares central", &report.hypothesis_iib)]
    {
        match status {
            HypothesisStatus::Holds { sampled } => {
                let _ = writeln!(out, "{name}: holds (sampled, {sampled} distinct commutators)");
            }
            HypothesisStatus::Violated(w) => {
                let _ = writeln!(out, "{name}: violated");
                render_witness(&mut out, algebra, w);
            }
        }
    }
    for note in &report.notes {
        let _ = writeln!(out, "note: {note}");
    }
    out
}

pub fn render_forge(algebra: Option<&Algebra>, result: &ForgeResult) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "algebra: {}", result.algebra);
    let _ = writeln!(out, "classification: {:?}", result.classification);
    if let (Some(algebra), Some(frame)) = (algebra, &result.frame) {
        let _ = writeln!(out, "frame:");
        for (l, (u, g)) in frame.elements().iter().zip(frame.squares()).enumerate() {
            let _ = writeln!(out, "  u{} = {}  (square {g})", l + 1, algebra.render(u));
        }
    }
    if let Some(diagonal) = &result.norm_diagonal {
        let d: Vec<String> = diagonal.iter().map(Scalar::to_string).collect();
        let _ = writeln!(out, "norm diagonal: [{}]", d.join(", "));
    }
    if let Some(definite) = result.positive_definite {
        let _ = writeln!(out, "positive definite: {}", yes_no(definite));
    }
    if let Some(verdict) = &result.division_verdict {
        let _ = writeln!(out, "verdict: {verdict}");
    }
    if let (Some(algebra), Some(w)) = (algebra, &result.witness) {
        render_witness(&mut out, algebra, w);
    }
    if let Some(m) = &result.change_of_basis {
        let _ = writeln!(out, "change of basis (columns 1, u1, ..):");
        for line in m.to_string().lines() {
            let _ = writeln!(out, "  {line}");
        }
    }
    let _ = writeln!(out, "audit:");
    for line in &result.audit {
        let _ = writeln!(out, "  - {line}");
    }
    out
}

pub fn render_fuzz(algebra: &Algebra, report: &FuzzReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "algebra: {}", report.algebra);
    let _ = writeln!(out, "classification: {:?}", report.classification);
    if let Some(w) = &report.witness {
        render_witness(&mut out, algebra, w);
    }
    if let Some(f) = &report.facts {
        if let Some(reason) = &f.hypothesis_mismatch {
            let _ = writeln!(out, "facts: skipped ({reason})");
        } else {
            let central = f.square_central.map_or("n/a".to_string(), |n| format!("{n}/{}", f.trials));
            let _ = writeln!(
                out,
                "facts: v^4 nuclear {}/{}, (v^2, e_i, e_j) v = 0 {}/{}, v^2 central {central}",
                f.fourth_power_nuclear, f.trials, f.square_associator_kills_v, f.trials
            );
            if let Some(fail) = &f.first_failure {
                let _ = writeln!(out, "  first failure: {:?} at trial {}", fail.fact, fail.trial);
            }
        }
    }
    for p in &report.properties {
        let _ = writeln!(out, "{}: {} checked, {} failed", p.property, p.checked, p.failures);
        if let Some(first) = &p.first_failure {
            let _ = writeln!(out, "  first failure: {first}");
        }
    }
    let _ = writeln!(out, "result: {}", if report.passed() { "pass" } else { "fail" });
    out
}
