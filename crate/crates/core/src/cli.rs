//! Command-line front end. [`run`] does all the work so it can be driven
//! in-process; the binary only forwards `std::env::args`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::diagrams::{enumerate, hasse, hasse_dot, RestrictedSequence};
use crate::markov::{gram, pair_diagrams};
use crate::ortho::{change_of_basis, verify, VerifyOptions};
use crate::qpoly::{chebyshev, Scalar};

/// Sizes above this need an explicit `--max-n`.
pub const DEFAULT_MAX_N: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "tl-markov", version, about = "Markov form on Temperley-Lieb chord diagrams")]
struct Cli {
    /// Output format (not every command supports every format)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Allow diagram sizes above 8
    #[arg(long = "max-n", global = true)]
    max_n: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the restricted sequences of size n in basis order
    Enumerate { n: usize },
    /// Markov pairing of two diagrams given as comma-separated sequences
    Pair { left: String, right: String },
    /// Gram matrix of the pairing
    Gram { n: usize },
    /// Change of basis to the orthogonal basis and its diagonal
    Orthogonalize { n: usize },
    /// Exact verification of the diagonalization
    Verify {
        n: usize,
        /// Also compare with a fraction-free determinant of the Gram matrix
        #[arg(long)]
        det_oracle: bool,
    },
    /// Chebyshev polynomial Δ_k, optionally evaluated
    Chebyshev {
        #[arg(allow_hyphen_values = true)]
        k: i64,
        /// Evaluation point: exact ("3", "-1/2") or decimal
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },
    /// Cover relation of the coordinate-wise order
    Hasse { n: usize },
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Runtime(_) => 1,
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn runtime(e: impl std::fmt::Display) -> Failure {
    Failure::Runtime(e.to_string())
}

struct Output {
    body: String,
    diagnostics: String,
    failed: bool,
}

impl Output {
    fn ok(body: String) -> Self {
        Output {
            body,
            diagnostics: String::new(),
            failed: false,
        }
    }
}

fn json<T: Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(runtime)
}

fn parse_seq(s: &str) -> Result<RestrictedSequence, Failure> {
    s.parse::<RestrictedSequence>()
        .map_err(|e| usage(format!("bad sequence {s:?}: {e}")))
}

fn format_or(cli_format: Option<Format>, default: Format, allowed: &[Format], cmd: &str) -> Result<Format, Failure> {
    let f = cli_format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(usage(format!(
            "{cmd} does not support --format {}",
            f.to_possible_value().expect("named").get_name()
        )))
    }
}

fn guard(n: usize, max_n: Option<usize>) -> Result<(), Failure> {
    let limit = max_n.unwrap_or(DEFAULT_MAX_N);
    if n > limit {
        return Err(usage(format!(
            "n = {n} exceeds the limit {limit}; pass --max-n {n} to proceed"
        )));
    }
    Ok(())
}

fn execute(cli: &Cli) -> Result<Output, Failure> {
    use Format::*;
    match &cli.command {
        Command::Enumerate { n } => {
            guard(*n, cli.max_n)?;
            let all = enumerate(*n);
            match format_or(cli.format, Text, &[Text, Json], "enumerate")? {
                Json => json(&all).map(Output::ok),
                _ => Ok(Output::ok(all.iter().map(|s| format!("{s}\n")).collect())),
            }
        }
        Command::Pair { left, right } => {
            let (a, b) = (parse_seq(left)?, parse_seq(right)?);
            let v = pair_diagrams(&a.to_matching(), &b.to_matching()).map_err(|e| usage(e.to_string()))?;
            match format_or(cli.format, Text, &[Text, Json], "pair")? {
                Json => {
                    #[derive(Serialize)]
                    struct PairJson {
                        exponent: u32,
                        value: crate::qpoly::RationalFunction,
                    }
                    json(&PairJson {
                        exponent: v.exponent(),
                        value: v.to_ratfun(),
                    })
                    .map(Output::ok)
                }
                _ => Ok(Output::ok(format!("{v}\n"))),
            }
        }
        Command::Gram { n } => {
            guard(*n, cli.max_n)?;
            let g = gram(*n);
            match format_or(cli.format, Text, &[Text, Json, Csv], "gram")? {
                Json => json(&g.to_json()).map(Output::ok),
                Csv => Ok(Output::ok(g.to_csv())),
                _ => {
                    let mut out = String::new();
                    for (i, s) in g.basis().iter().enumerate() {
                        let row: Vec<String> = g.entries()[i].iter().map(ToString::to_string).collect();
                        let _ = writeln!(out, "{}: {}", s.label(), row.join(", "));
                    }
                    Ok(Output::ok(out))
                }
            }
        }
        Command::Orthogonalize { n } => {
            guard(*n, cli.max_n)?;
            if *n == 0 {
                return Err(usage("orthogonalize needs n >= 1"));
            }
            let ob = change_of_basis(*n).map_err(runtime)?;
            match format_or(cli.format, Text, &[Text, Json, Csv], "orthogonalize")? {
                Json => json(&ob.to_json()).map(Output::ok),
                Csv => Ok(Output::ok(ob.p.to_csv())),
                _ => {
                    let mut out = String::new();
                    for (i, s) in ob.basis.iter().enumerate() {
                        let _ = writeln!(out, "e'{} = {}", s.label(), ob.p.row_vector(i));
                    }
                    for (s, d) in ob.basis.iter().zip(&ob.diagonal) {
                        let _ = writeln!(out, "<e'{0}, e'{0}> = {d}", s.label());
                    }
                    Ok(Output::ok(out))
                }
            }
        }
        Command::Verify { n, det_oracle } => {
            guard(*n, cli.max_n)?;
            if *n == 0 {
                return Err(usage("verify needs n >= 1"));
            }
            let report = verify(*n, VerifyOptions { det_oracle: *det_oracle }).map_err(runtime)?;
            let body = match format_or(cli.format, Text, &[Text, Json], "verify")? {
                Json => json(&report)?,
                _ => report.render_text(),
            };
            Ok(Output {
                body,
                diagnostics: report.render_timings(),
                failed: !report.passed,
            })
        }
        Command::Chebyshev { k, at } => {
            let p = chebyshev(*k).map_err(|e| usage(e.to_string()))?;
            let fmt = format_or(cli.format, Text, &[Text, Json], "chebyshev")?;
            match at {
                None => match fmt {
                    Json => json(&p).map(Output::ok),
                    _ => Ok(Output::ok(format!("{p}\n"))),
                },
                Some(x) => {
                    let x: Scalar = x.parse().map_err(|e| usage(format!("--at: {e}")))?;
                    let v = p.eval_at(&x);
                    match (fmt, &v) {
                        (Json, Scalar::Exact(r)) => json(&r.to_string()).map(Output::ok),
                        (Json, Scalar::Float(f)) => json(f).map(Output::ok),
                        _ => Ok(Output::ok(format!("{v}\n"))),
                    }
                }
            }
        }
        Command::Hasse { n } => {
            guard(*n, cli.max_n)?;
            match format_or(cli.format, Text, &[Text, Dot], "hasse")? {
                Dot => Ok(Output::ok(hasse_dot(*n))),
                _ => Ok(Output::ok(
                    hasse(*n)
                        .iter()
                        .map(|(a, b)| format!("{} -> {}\n", a.label(), b.label()))
                        .collect(),
                )),
            }
        }
    }
}

/// Runs one invocation. Returns the exit code: 0 on success, 1 when a
/// verification fails or a computation errors, 2 for usage errors.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                2
            } else {
                let _ = write!(stdout, "{rendered}");
                0
            };
        }
    };
    match execute(&cli) {
        Ok(out) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &out.body) {
                    let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                    return 1;
                }
            } else if stdout.write_all(out.body.as_bytes()).is_err() {
                return 1;
            }
            let _ = stderr.write_all(out.diagnostics.as_bytes());
            i32::from(out.failed)
        }
        Err(f) => {
            let msg = match &f {
                Failure::Usage(m) | Failure::Runtime(m) => m,
            };
            let _ = writeln!(stderr, "error: {msg}");
            f.code()
        }
    }
}
