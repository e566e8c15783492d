//! `posetbool` subcommands, runnable in-process for tests.

use std::fmt::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::builders::{paper_fixture, FixtureName};
use crate::cli::doc::{parse_poset_text, PosetDoc};
use crate::cli::dot::render_dot;
use crate::cli::eval::{eval_expr, Value};
use crate::cli::expr::parse_expr;
use crate::error::{Error, Result};
use crate::measure::{self, MeasureKind, Rational};
use crate::oracle::{self, show_outcome};
use crate::poset::Poset;

#[derive(Parser, Debug)]
#[command(
    name = "posetbool",
    about = "Boolean-style operators on finite partial orders"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MeasureArg {
    Max,
    Sum,
}

impl From<MeasureArg> for MeasureKind {
    fn from(m: MeasureArg) -> Self {
        match m {
            MeasureArg::Max => MeasureKind::MaxHeight,
            MeasureArg::Sum => MeasureKind::SumHeight,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and build a poset file (`-` reads stdin)
    Validate { file: String },
    /// Evaluate an expression
    Eval { file: String, expr: String },
    /// Print heights, of all elements or of the given labels
    Height { file: String, labels: Vec<String> },
    /// Probability of the set an expression evaluates to
    Prob {
        file: String,
        #[arg(long, value_enum)]
        measure: MeasureArg,
        expr: String,
    },
    /// Run the law suite and the differential oracle
    Check {
        file: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        cases: usize,
        /// Replace the main path by one that ignores the primed filters
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Hasse diagram in Graphviz format
    Dot { file: String },
    /// Print a built-in example poset
    Fixture { name: String },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stdout: String, stderr: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr,
        }
    }
}

fn load(file: &str, stdin: &str) -> std::result::Result<Poset, String> {
    let text = if file == "-" {
        stdin.to_string()
    } else {
        std::fs::read_to_string(file).map_err(|e| format!("error: cannot read {file}: {e}"))?
    };
    let built = parse_poset_text(&text).and_then(|doc| doc.build());
    built.map_err(|e| diagnostic(&e))
}

fn diagnostic(e: &Error) -> String {
    format!("error[{}]: {e}", e.kind())
}

/// Runs one command line (`argv[0]` is the program name).
pub fn run_command<S: AsRef<str>>(argv: &[S], stdin: &str) -> Outcome {
    let args = argv.iter().map(|a| a.as_ref().to_string());
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::fail(2, String::new(), text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    match execute(cli.command, stdin) {
        Ok(out) => out,
        Err(msg) => Outcome::fail(1, String::new(), format!("{msg}\n")),
    }
}

fn execute(cmd: Command, stdin: &str) -> std::result::Result<Outcome, String> {
    let e = |err: Error| diagnostic(&err);
    let mut out = String::new();
    match cmd {
        Command::Validate { file } => {
            let p = load(&file, stdin)?;
            let _ = writeln!(
                out,
                "ok: {} ({} elements, {} cover edges, height {})",
                p.name(),
                p.len(),
                p.reduction().len(),
                p.height(p.top()).map_err(e)?
            );
        }
        Command::Eval { file, expr } => {
            let p = load(&file, stdin)?;
            let ast = parse_expr(&expr).map_err(e)?;
            let v = eval_expr(&p, &ast, MeasureKind::MaxHeight).map_err(e)?;
            let _ = writeln!(out, "{}", v.render(&p));
        }
        Command::Height { file, labels } => {
            let p = load(&file, stdin)?;
            let elems = if labels.is_empty() {
                p.elems().collect()
            } else {
                labels
                    .iter()
                    .map(|l| p.elem(l))
                    .collect::<Result<Vec<_>>>()
                    .map_err(e)?
            };
            for x in elems {
                let _ = writeln!(out, "{} {}", p.display_label(x), p.height(x).map_err(e)?);
            }
        }
        Command::Prob {
            file,
            measure,
            expr,
        } => {
            let p = load(&file, stdin)?;
            let kind = MeasureKind::from(measure);
            let ast = parse_expr(&expr).map_err(e)?;
            let v = match eval_expr(&p, &ast, kind).map_err(e)? {
                Value::Set(xs) => {
                    let (num, den) = measure::prob_parts(&p, &xs, kind).map_err(e)?;
                    Value::Prob {
                        value: Rational::new(num, den),
                        num,
                        den,
                        out_of_range: false,
                    }
                }
                Value::Signed(s) if kind == MeasureKind::MaxHeight => {
                    let sp = measure::prob_signed(&p, &s).map_err(e)?;
                    Value::Prob {
                        value: sp.value,
                        num: crate::signed::signed_height(&p, &s).map_err(e)?,
                        den: p.height(p.top()).map_err(e)? as i64,
                        out_of_range: sp.out_of_range,
                    }
                }
                Value::Signed(_) => {
                    return Err(e(Error::SignedMisuse(
                        "signed sets have a probability only under the max measure".into(),
                    )))
                }
                other => other,
            };
            let _ = writeln!(out, "{}", v.render(&p));
        }
        Command::Check {
            file,
            seed,
            cases,
            inject_fault,
        } => {
            let p = load(&file, stdin)?;
            let laws = oracle::law_check(&p);
            let report = if inject_fault {
                oracle::differential_check_with(&p, seed, cases, oracle::prime_to_raw_fault)
            } else {
                oracle::differential_check(&p, seed, cases)
            };
            let _ = writeln!(
                out,
                "laws: {} checks, {} violations",
                laws.checks,
                laws.violations.len()
            );
            for v in &laws.violations {
                let _ = writeln!(out, "  violated: {v}");
            }
            let _ = writeln!(
                out,
                "differential: {} cases (seed {seed}), {} mismatches",
                report.cases,
                report.mismatches.len()
            );
            for m in &report.mismatches {
                let _ = writeln!(
                    out,
                    "  {}: main {} / oracle {}",
                    m.query.show(&p),
                    show_outcome(&p, &m.main),
                    show_outcome(&p, &m.oracle)
                );
            }
            if !laws.passed() || !report.passed() {
                return Ok(Outcome::fail(1, out, "error: check failed\n".into()));
            }
        }
        Command::Dot { file } => {
            out = render_dot(&load(&file, stdin)?);
        }
        Command::Fixture { name } => {
            let name: FixtureName = name.parse().map_err(e)?;
            out = PosetDoc::from_poset(&paper_fixture(name).map_err(e)?).to_string();
        }
    }
    Ok(Outcome::ok(out))
}
