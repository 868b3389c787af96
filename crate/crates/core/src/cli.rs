//! The `semichol` command line.
//!
//! Exit codes: 0 when a verdict was computed, 1 for a mathematical negative
//! (no factorization, a failing fixture, an invalid table), 2 for input
//! errors, 3 when a search exceeds the enumeration guard.

use std::io::Write;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::classify::{classify, DEFAULT_NNR_BOUND};
use crate::error::{Error, Result};
use crate::factorization::{cholesky_with, lu, CholeskyOptions, HypothesisLevel};
use crate::fixtures::{run_fixtures, run_fixtures_with};
use crate::io::{
    cholesky_doc, classification_doc, load_semiring, lu_doc, matrix_from_doc, matrix_to_doc,
    read_json_arg, semiring_info, solution_doc, vector_from_doc, MatrixDoc, NnrDoc, PsdDoc,
    StatusDoc, VectorDoc,
};
use crate::matrix::Matrix;
use crate::search::{parse_predicates, search};
use crate::semiring::{AnySemiring, Semiring, SemiringTable};
use crate::solve::{solve_lu, solve_spd};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_GUARD: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "semichol",
    version,
    about = "Exact Cholesky and LU factorization over commutative semirings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Verify {
    Local,
    Theorem,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Cholesky,
    Lu,
}

#[derive(Debug, Subcommand)]
pub enum SemiringCommand {
    /// Validate a semiring (URI or JSON file).
    Check { semiring: String },
    /// Print units, additive inverses and squares.
    Info {
        semiring: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Inspect or validate a semiring.
    #[command(subcommand)]
    Semiring(SemiringCommand),
    /// Symmetry, invertibility, numerical range and semidefiniteness.
    Classify {
        semiring: String,
        /// Matrix JSON file, or inline JSON.
        matrix: String,
        #[arg(long, default_value_t = DEFAULT_NNR_BOUND)]
        nnr_bound: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Factor a symmetric matrix as L·Lᵀ.
    Cholesky {
        semiring: String,
        matrix: String,
        #[arg(long, value_enum, default_value = "local")]
        verify: Verify,
        #[arg(long, default_value_t = DEFAULT_NNR_BOUND)]
        nnr_bound: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Factor a strongly invertible matrix as L·U.
    Lu {
        semiring: String,
        matrix: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Solve M·y = c.
    Solve {
        semiring: String,
        matrix: String,
        /// Vector JSON file, or inline JSON.
        vector: String,
        #[arg(long, value_enum, default_value = "cholesky")]
        method: Method,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run the built-in reference fixtures F1 to F5.
    VerifyPaper {
        #[arg(long)]
        json: bool,
        /// Use this semiring in place of Z6 for fixture F1.
        #[arg(long)]
        z6: Option<String>,
    },
    /// Enumerate symmetric n×n matrices matching predicates such as
    /// `strongly-invertible,nnr,!cholesky`.
    Search {
        semiring: String,
        n: usize,
        predicates: String,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

/// Parse `args` and run, writing results to `out` and diagnostics to `err`.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn run() -> u8 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::SearchTooLarge { .. } => EXIT_GUARD,
        Error::AxiomViolations(_)
        | Error::NotInvertible { .. }
        | Error::StronglyInvertibleRequired { .. }
        | Error::NoFactorization(_)
        | Error::HypothesisNotSatisfied(_)
        | Error::PivotNotInvertible { .. }
        | Error::SubdiagonalNotNegatable { .. }
        | Error::Internal(_) => EXIT_NEGATIVE,
        _ => EXIT_INPUT,
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, doc: &T) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(doc)?)?;
    Ok(())
}

macro_rules! with_semiring {
    ($any:expr, |$s:ident| $body:expr) => {
        match $any {
            AnySemiring::Finite(t) => {
                let $s = Arc::new(t);
                $body
            }
            AnySemiring::Naturals(n) => {
                let $s = Arc::new(n);
                $body
            }
        }
    };
}

fn load_matrix<S: Semiring>(s: &Arc<S>, arg: &str) -> Result<Matrix<S>> {
    let doc: MatrixDoc = read_json_arg(arg)?;
    matrix_from_doc(s, &doc)
}

fn execute(command: &Command, out: &mut dyn Write) -> Result<u8> {
    match command {
        Command::Semiring(SemiringCommand::Check { semiring }) => match load_semiring(semiring) {
            Ok(s) => {
                let label = match &s {
                    AnySemiring::Finite(t) => format!("{} (order {})", t.label(), t.names().len()),
                    AnySemiring::Naturals(n) => n.label().to_string(),
                };
                writeln!(out, "ok: {label}")?;
                Ok(EXIT_OK)
            }
            Err(Error::AxiomViolations(v)) => {
                for violation in &v {
                    writeln!(out, "violation: {violation}")?;
                }
                Ok(EXIT_NEGATIVE)
            }
            Err(e) => Err(e),
        },
        Command::Semiring(SemiringCommand::Info { semiring, format }) => {
            let AnySemiring::Finite(s) = load_semiring(semiring)? else {
                writeln!(out, "nat: U = {{1}}, V = {{0}}, Q = perfect squares")?;
                return Ok(EXIT_OK);
            };
            info(&s, *format, out)?;
            Ok(EXIT_OK)
        }
        Command::Classify {
            semiring,
            matrix,
            nnr_bound,
            format,
        } => with_semiring!(load_semiring(semiring)?, |s| {
            let m = load_matrix(&s, matrix)?;
            let doc = classification_doc(s.as_ref(), &classify(&m, *nnr_bound)?);
            match format {
                Format::Json => emit(out, &doc)?,
                Format::Table => classification_table(out, &doc)?,
            }
            Ok(EXIT_OK)
        }),
        Command::Cholesky {
            semiring,
            matrix,
            verify,
            nnr_bound,
            format,
        } => with_semiring!(load_semiring(semiring)?, |s| {
            let m = load_matrix(&s, matrix)?;
            let opts = CholeskyOptions {
                verify: match verify {
                    Verify::Local => HypothesisLevel::Local,
                    Verify::Theorem => HypothesisLevel::Theorem,
                },
                nnr_bound: *nnr_bound,
            };
            let result = cholesky_with(&m, opts)?;
            let doc = cholesky_doc(s.as_ref(), &result);
            match format {
                Format::Json => emit(out, &doc)?,
                Format::Table => {
                    writeln!(out, "status: {}", status_text(&doc.status))?;
                    if let Some(l) = &result.factor {
                        writeln!(out, "L = {l}")?;
                    }
                    writeln!(out, "pivots: [{}]", doc.pivots.join(", "))?;
                    writeln!(out, "verified: {:?}", doc.verified_hypotheses)?;
                }
            }
            Ok(if result.status.is_success() {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }),
        Command::Lu {
            semiring,
            matrix,
            format,
        } => with_semiring!(load_semiring(semiring)?, |s| {
            let m = load_matrix(&s, matrix)?;
            let factors = lu(&m)?;
            match format {
                Format::Json => emit(out, &lu_doc(&factors))?,
                Format::Table => writeln!(out, "L = {}\nU = {}", factors.l, factors.u)?,
            }
            Ok(EXIT_OK)
        }),
        Command::Solve {
            semiring,
            matrix,
            vector,
            method,
            format,
        } => with_semiring!(load_semiring(semiring)?, |s| {
            let m = load_matrix(&s, matrix)?;
            let doc: VectorDoc = read_json_arg(vector)?;
            let c = vector_from_doc(&s, &doc)?;
            let sol = match method {
                Method::Cholesky => solve_spd(&m, &c)?,
                Method::Lu => solve_lu(&m, &c)?,
            };
            match format {
                Format::Json => emit(out, &solution_doc(&sol))?,
                Format::Table => writeln!(
                    out,
                    "y = {:?} (residual verified: {})",
                    sol.y, sol.residual_verified
                )?,
            }
            Ok(EXIT_OK)
        }),
        Command::VerifyPaper { json, z6 } => {
            let outcomes = match z6 {
                None => run_fixtures(),
                Some(spec) => {
                    let table: Result<SemiringTable> = match load_semiring(spec) {
                        Ok(AnySemiring::Finite(t)) => Ok(t),
                        Ok(AnySemiring::Naturals(_)) => {
                            Err(Error::Parse("F1 needs a finite semiring".into()))
                        }
                        Err(e @ (Error::Io(_) | Error::Json(_) | Error::Parse(_))) => {
                            return Err(e)
                        }
                        Err(e) => Err(e),
                    };
                    run_fixtures_with(table)
                }
            };
            if *json {
                emit(out, &outcomes)?;
            } else {
                for f in &outcomes {
                    writeln!(
                        out,
                        "{} {} {}",
                        f.id,
                        if f.passed { "PASS" } else { "FAIL" },
                        f.title
                    )?;
                    for c in f.checks.iter().filter(|c| !c.passed) {
                        writeln!(out, "    failed: {} ({})", c.name, c.detail)?;
                    }
                }
                let passed = outcomes.iter().filter(|f| f.passed).count();
                writeln!(out, "{passed}/{} fixtures pass", outcomes.len())?;
            }
            Ok(if outcomes.iter().all(|f| f.passed) {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
        Command::Search {
            semiring,
            n,
            predicates,
            limit,
            format,
        } => with_semiring!(load_semiring(semiring)?, |s| {
            let literals = parse_predicates(predicates)?;
            let mut count = 0;
            for m in search(&s, *n, &literals)?.take(limit.unwrap_or(usize::MAX)) {
                let m = m?;
                match format {
                    Format::Json => {
                        writeln!(out, "{}", serde_json::to_string(&matrix_to_doc(&m))?)?
                    }
                    Format::Table => writeln!(out, "{m}")?,
                }
                out.flush()?;
                count += 1;
            }
            if *format == Format::Table {
                writeln!(out, "{count} match(es)")?;
            }
            Ok(EXIT_OK)
        }),
    }
}

fn info(s: &SemiringTable, format: Format, out: &mut dyn Write) -> Result<()> {
    let doc = semiring_info(s);
    match format {
        Format::Json => emit(out, &doc)?,
        Format::Table => {
            let set = |v: &[String]| format!("{{{}}}", v.join(", "));
            writeln!(out, "semiring      {}", doc.label)?;
            writeln!(out, "order         {}", doc.order)?;
            writeln!(out, "zero / one    {} / {}", doc.zero, doc.one)?;
            writeln!(out, "elements      {}", set(&doc.names))?;
            writeln!(out, "U(S)          {}", set(&doc.units))?;
            writeln!(out, "V(S)          {}", set(&doc.add_invertible))?;
            writeln!(out, "Q(S)          {}", set(&doc.squares))?;
            writeln!(out, "ring          {}", doc.is_ring)?;
            writeln!(out, "antinegative  {}", doc.antinegative)?;
            writeln!(out, "Q+Q in Q      {}", doc.q_closed)?;
        }
    }
    Ok(())
}

fn status_text(s: &StatusDoc) -> String {
    match s {
        StatusDoc::Success => "success".into(),
        StatusDoc::NotSymmetric => "not symmetric".into(),
        StatusDoc::NotStronglyInvertible { k } => format!("not strongly invertible (k = {k})"),
        StatusDoc::PivotNotSquare { step, pivot } => {
            format!("pivot {pivot} at step {step} is not a square")
        }
        StatusDoc::SubdiagonalNotNegatable { step, index } => {
            format!("entry {index} below pivot {step} has no additive inverse")
        }
    }
}

fn classification_table(out: &mut dyn Write, doc: &crate::io::ClassificationDoc) -> Result<()> {
    let strong = match doc.strongly_invertible.failing_k {
        None => "yes".to_string(),
        Some(k) => format!("no (fails at k = {k})"),
    };
    let nnr = match &doc.nnr {
        NnrDoc::Yes => "yes".to_string(),
        NnrDoc::No { witness, value } => {
            format!("no (x = ({}), xᵀMx = {value})", witness.join(", "))
        }
        NnrDoc::Unknown { bound } => format!("unknown (no witness with entries <= {bound})"),
    };
    let psd = match &doc.psd {
        PsdDoc::Yes { witness } => {
            let cols: Vec<String> = witness
                .generators
                .iter()
                .zip(&witness.multiplicity)
                .map(|(g, m)| format!("{m}x({})", g.join(", ")))
                .collect();
            format!("yes (columns {})", cols.join(" + "))
        }
        PsdDoc::No => "no".to_string(),
        PsdDoc::Unknown => "unknown".to_string(),
    };
    let q = doc
        .q_closed_semiring
        .map_or("n/a".to_string(), |b| b.to_string());
    let rows = [
        ("symmetric", doc.symmetric.to_string()),
        ("invertible", doc.invertible.to_string()),
        ("strongly invertible", strong),
        ("numerical range", nnr),
        ("positive semidefinite", psd),
        ("Q+Q in Q", q),
    ];
    for (k, v) in rows {
        writeln!(out, "{k:<22} {v}")?;
    }
    Ok(())
}
