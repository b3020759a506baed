//! Command-line front end: `irrcert check|bound|generate|oracle|fuzz`.
//!
//! [`run`] does all the work and returns the captured streams and exit code,
//! so the binary is a thin wrapper and tests can drive commands in-process.
//! JSON goes to stdout; the human-readable summary goes to stderr unless
//! `--quiet` is given.

pub mod document;
pub mod text;

use std::fmt::Write as _;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;
use serde_json::json;

use crate::criteria::{self, CheckOptions, CriteriaError, CriterionOutcome, SearchOptions};
use crate::families::{self, Family, FamilyError, FamilyParams};
use crate::numtheory::NumTheoryError;
use crate::oracle::{self, KroneckerOutcome, OracleError, DEFAULT_MAX_DEGREE};
use crate::poly::Polynomial;
use crate::root_bounds::{self, RootBoundError};

pub use document::CertificateDocument;
pub use text::{parse_poly, render, ParseError};

pub const EXIT_IRREDUCIBLE: i32 = 0;
pub const EXIT_REDUCIBLE: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_PARSE: i32 = 65;
pub const EXIT_BOUND: i32 = 70;

#[derive(Debug, Parser)]
#[command(name = "irrcert", version, about = "Certify irreducibility of integer polynomials")]
pub struct Cli {
    /// Suppress the human-readable summary on stderr.
    #[arg(long, global = true)]
    quiet: bool,
    /// Emit JSON for bound, oracle and fuzz (check and generate always do).
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CriterionArg {
    Auto,
    #[value(name = "thmA")]
    ThmA,
    #[value(name = "thm1")]
    Thm1,
    #[value(name = "thm2")]
    Thm2,
    #[value(name = "thmB")]
    ThmB,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Dominance,
    Schur,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    X,
    Y,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a criterion (or the automatic witness search) and print a certificate.
    Check {
        /// Polynomial text, or a path to a file containing it.
        #[arg(short = 'f', long = "poly")]
        poly: String,
        #[arg(long, value_enum, default_value = "auto")]
        criterion: CriterionArg,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        d: Option<BigUint>,
        #[arg(long)]
        j: Option<usize>,
        /// Degree cap of the factorization fallback used by `auto`.
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
        /// Also require gcd(k, j!) = 1 for Theorems 1 and 2.
        #[arg(long)]
        remark_regime: bool,
    },
    /// Decide whether every zero lies outside the closed disk of radius d.
    Bound {
        #[arg(short = 'f', long = "poly")]
        poly: String,
        #[arg(long)]
        d: BigUint,
        #[arg(long, value_enum, default_value = "both")]
        method: MethodArg,
    },
    /// Generate a family member and certify it.
    Generate {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<u64>,
    },
    /// Factor completely by Kronecker's method.
    Oracle {
        #[arg(short = 'f', long = "poly")]
        poly: String,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
    },
    /// Randomized search for Lemma 1 counterexamples.
    Fuzz {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Invocation {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure {
            code: EXIT_PARSE,
            message: e.to_string(),
        }
    }
}

fn is_bound_error(e: &NumTheoryError) -> bool {
    matches!(e, NumTheoryError::BoundExceeded { .. })
}

impl From<CriteriaError> for Failure {
    fn from(e: CriteriaError) -> Self {
        let code = match &e {
            CriteriaError::NumTheory(n) if is_bound_error(n) => EXIT_BOUND,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<FamilyError> for Failure {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::Criteria(c) => c.into(),
            other => Failure::usage(other.to_string()),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        let code = match &e {
            OracleError::DegreeBound { .. } | OracleError::SampleBound(_) => EXIT_BOUND,
            OracleError::NumTheory(n) if is_bound_error(n) => EXIT_BOUND,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<RootBoundError> for Failure {
    fn from(e: RootBoundError) -> Self {
        Failure::usage(e.to_string())
    }
}

pub fn outcome_exit_code(outcome: &CriterionOutcome) -> i32 {
    match outcome {
        CriterionOutcome::Irreducible(_) => EXIT_IRREDUCIBLE,
        CriterionOutcome::Reducible(_) => EXIT_REDUCIBLE,
        CriterionOutcome::Inconclusive { .. } => EXIT_INCONCLUSIVE,
    }
}

/// Reads the polynomial from a file when the argument names one.
fn load_poly(arg: &str) -> Result<Polynomial, Failure> {
    let path = Path::new(arg);
    let source = if path.is_file() {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("cannot read {arg}: {e}")))?
    } else {
        arg.to_string()
    };
    Ok(parse_poly(source.trim())?)
}

fn need<T>(value: Option<T>, flag: &str, criterion: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::usage(format!("--{flag} is required for --criterion {criterion}")))
}

fn summarize(outcome: &CriterionOutcome) -> String {
    match outcome {
        CriterionOutcome::Irreducible(c) => {
            let mut s = format!("Irreducible by Theorem {} (p = {}, k = {}", c.theorem, c.p, c.k);
            if let Some(d) = &c.d {
                let _ = write!(s, ", d = {d}");
            }
            if let Some(j) = c.j {
                let _ = write!(s, ", j = {j}");
            }
            s.push(')');
            if let Some(rp) = &c.root_proof {
                let _ = write!(s, "; zeros outside radius {} by {}", rp.radius, rp.method);
            }
            s
        }
        CriterionOutcome::Reducible(w) => {
            let factors: Vec<String> = w.factors.iter().map(|g| format!("({g})")).collect();
            let unit = if w.unit == (-1).into() { "-" } else { "" };
            format!("Reducible: {unit}{}", factors.join(""))
        }
        CriterionOutcome::Inconclusive { reason, .. } => format!("Inconclusive: {reason}"),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_check(
    out: &mut Invocation,
    poly: &str,
    criterion: CriterionArg,
    p: Option<u64>,
    k: Option<u32>,
    d: Option<BigUint>,
    j: Option<usize>,
    max_degree: usize,
    remark_regime: bool,
) -> Result<(), Failure> {
    let f = load_poly(poly)?;
    let check = CheckOptions { remark_regime };
    let outcome = match criterion {
        CriterionArg::Auto => criteria::auto_search(
            &f,
            &SearchOptions {
                oracle_max_degree: max_degree,
                check,
                ..SearchOptions::default()
            },
        )?,
        CriterionArg::ThmA => {
            criteria::check_theorem_a(&f, need(p, "p", "thmA")?, &need(d, "d", "thmA")?)?
        }
        CriterionArg::Thm1 => criteria::check_theorem_1_with(
            &f,
            need(p, "p", "thm1")?,
            need(k, "k", "thm1")?,
            &need(d, "d", "thm1")?,
            need(j, "j", "thm1")?,
            &check,
        )?,
        CriterionArg::Thm2 => criteria::check_theorem_2_with(
            &f,
            need(p, "p", "thm2")?,
            need(k, "k", "thm2")?,
            &need(d, "d", "thm2")?,
            need(j, "j", "thm2")?,
            &check,
        )?,
        CriterionArg::ThmB => {
            criteria::check_theorem_b(&f, need(p, "p", "thmB")?, need(k, "k", "thmB")?)?
        }
    };
    out.stdout = CertificateDocument::new(&f, &outcome).to_json();
    out.stderr = format!("{f}: {}\n", summarize(&outcome));
    out.code = outcome_exit_code(&outcome);
    Ok(())
}

#[derive(Serialize)]
struct BoundReport {
    input: String,
    radius: String,
    proofs: Vec<BoundEntry>,
}

#[derive(Serialize)]
struct BoundEntry {
    method: root_bounds::RootBoundMethod,
    verdict: root_bounds::RootBoundVerdict,
    detail: String,
}

fn cmd_bound(out: &mut Invocation, json: bool, poly: &str, d: BigUint, method: MethodArg) -> Result<(), Failure> {
    if d.is_zero() {
        return Err(Failure::usage("--d must be at least 1"));
    }
    let f = load_poly(poly)?;
    let mut proofs = Vec::new();
    if matches!(method, MethodArg::Dominance | MethodArg::Both) {
        proofs.push(root_bounds::dominance_outside(&f, &d)?);
    }
    if matches!(method, MethodArg::Schur | MethodArg::Both) {
        proofs.push(root_bounds::schur_cohn_outside(&f, &d)?);
    }
    let report = BoundReport {
        input: f.to_string(),
        radius: d.to_string(),
        proofs: proofs
            .iter()
            .map(|p| BoundEntry {
                method: p.method,
                verdict: p.verdict,
                detail: p.detail.clone(),
            })
            .collect(),
    };
    let human: String = proofs
        .iter()
        .map(|p| format!("{}: {} ({})\n", p.method, p.verdict, p.detail))
        .collect();
    if json {
        out.stdout = to_json_line(&report);
        out.stderr = human;
    } else {
        out.stdout = human;
    }
    Ok(())
}

fn cmd_generate(out: &mut Invocation, family: FamilyArg, p: u64, k: u32, j: usize, n: usize, m: Option<u64>) -> Result<(), Failure> {
    let params = match family {
        FamilyArg::X => FamilyParams::x(p, k, j, n),
        FamilyArg::Y => FamilyParams {
            family: Family::Y,
            m,
            ..FamilyParams::x(p, k, j, n)
        },
    };
    let f = params.generate()?;
    let outcome = families::family_selftest(&params)?;
    out.stdout = CertificateDocument::new(&f, &outcome).to_json();
    out.stderr = format!("{f}\n{}\n", summarize(&outcome));
    out.code = outcome_exit_code(&outcome);
    Ok(())
}

fn cmd_oracle(out: &mut Invocation, json: bool, poly: &str, max_degree: usize) -> Result<(), Failure> {
    let f = load_poly(poly)?;
    let (content, pp) = f
        .primitive_part()
        .map_err(|e| Failure::usage(e.to_string()))?;
    let result = oracle::kronecker_factor(&pp, max_degree)?;
    let (human, report, code) = match &result {
        KroneckerOutcome::IrreducibleByExhaustion => (
            format!("{pp}: irreducible by exhaustion\n"),
            json!({
                "input": f.to_string(),
                "content": content.to_string(),
                "irreducible": true,
                "unit": "1",
                "factors": [pp.to_string()],
            }),
            EXIT_IRREDUCIBLE,
        ),
        KroneckerOutcome::Factored(w) => {
            let factors: Vec<String> = w.factors.iter().map(ToString::to_string).collect();
            let shown: Vec<String> = factors.iter().map(|g| format!("({g})")).collect();
            (
                format!("{pp} = {}{}\n", if w.unit == (-1).into() { "-" } else { "" }, shown.join("")),
                json!({
                    "input": f.to_string(),
                    "content": content.to_string(),
                    "irreducible": false,
                    "unit": w.unit.to_string(),
                    "factors": factors,
                }),
                EXIT_REDUCIBLE,
            )
        }
    };
    let human = if content == 1.into() {
        human
    } else {
        format!("content {content}; primitive part {human}")
    };
    if json {
        out.stdout = to_json_line(&report);
        out.stderr = human;
    } else {
        out.stdout = human;
    }
    out.code = code;
    Ok(())
}

fn cmd_fuzz(out: &mut Invocation, json: bool, trials: usize, seed: u64) -> Result<(), Failure> {
    let s = oracle::lemma1_fuzz(trials, seed)?;
    let human = format!(
        "trials {}, applicable {}, holds {}, violated {}\n",
        s.trials, s.applicable, s.holds, s.violated
    );
    if json {
        out.stdout = to_json_line(&json!({
            "trials": s.trials,
            "seed": seed,
            "applicable": s.applicable,
            "holds": s.holds,
            "violated": s.violated,
        }));
        out.stderr = human;
    } else {
        out.stdout = human;
    }
    out.code = if s.violated == 0 { 0 } else { EXIT_REDUCIBLE };
    Ok(())
}

fn to_json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let rendered = e.to_string();
            return if e.use_stderr() {
                Invocation {
                    stderr: rendered,
                    code,
                    ..Default::default()
                }
            } else {
                Invocation {
                    stdout: rendered,
                    code,
                    ..Default::default()
                }
            };
        }
    };
    let mut out = Invocation::default();
    let result = match cli.command {
        Command::Check {
            poly,
            criterion,
            p,
            k,
            d,
            j,
            max_degree,
            remark_regime,
        } => cmd_check(&mut out, &poly, criterion, p, k, d, j, max_degree, remark_regime),
        Command::Bound { poly, d, method } => cmd_bound(&mut out, cli.json, &poly, d, method),
        Command::Generate { family, p, k, j, n, m } => cmd_generate(&mut out, family, p, k, j, n, m),
        Command::Oracle { poly, max_degree } => cmd_oracle(&mut out, cli.json, &poly, max_degree),
        Command::Fuzz { trials, seed } => cmd_fuzz(&mut out, cli.json, trials, seed),
    };
    if let Err(failure) = result {
        return Invocation {
            stdout: String::new(),
            stderr: format!("error: {}\n", failure.message),
            code: failure.code,
        };
    }
    if cli.quiet && (cli.json || !out.stdout.is_empty()) {
        // summary lines only ever go to stderr
        out.stderr.clear();
    }
    out
}
