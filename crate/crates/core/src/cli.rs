//! Command-line front-end.
//!
//! Exit codes: 0 when the answer is positive (holds, root found, all laws
//! pass), 1 for a well-formed negative answer, 2 for usage and parse errors.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::boolean::{ap_truth_table, verify_boolean_postulates};
use crate::graded::{analogy_check, mv_degree_dissim, mv_degree_similarity, Quadruple, Tolerance};
use crate::means::{mean_analogy_check, mean_residual, solve_r, MeanParam};
use crate::solver::{minimize_over_d, solve_p, sweep_d, SolverOptions};
use crate::{FrankParam, TNormKind, UnitValue};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "tnorm-analogy",
    version,
    about = "T-norm based analogical proportions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Boolean analogical proportion over all 16 valuations, as CSV.
    TruthTable,
    /// Crisp t-norm proportion test on a quadruple.
    Check {
        /// min, product, lukasiewicz or frank:P
        #[arg(long, value_parser = parse_tnorm)]
        tnorm: TNormKind,
        #[arg(long, value_parser = parse_quad)]
        quad: Quadruple,
        #[arg(long, value_parser = parse_tol)]
        tol: Option<Tolerance>,
    },
    /// Power-mean proportion test on a quadruple.
    CheckMean {
        /// Exponent, or geo, min, max
        #[arg(long, value_parser = parse_mean, allow_hyphen_values = true)]
        r: MeanParam,
        #[arg(long, value_parser = parse_quad)]
        quad: Quadruple,
        #[arg(long, value_parser = parse_tol)]
        tol: Option<Tolerance>,
    },
    /// Graded dissimilarity and similarity degrees.
    Degree {
        #[arg(long, value_parser = parse_quad)]
        quad: Quadruple,
    },
    /// Sample diff_p(x) for a Frank parameter, as CSV.
    Sweep {
        #[arg(long, value_parser = parse_frank)]
        p: FrankParam,
        /// a,b,c
        #[arg(long, value_parser = parse_fixed)]
        fixed: [UnitValue; 3],
        /// lo:hi
        #[arg(long, value_parser = parse_range)]
        range: (UnitValue, UnitValue),
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimize diff_p over the fourth argument.
    Minimize {
        #[arg(long, value_parser = parse_frank)]
        p: FrankParam,
        #[arg(long, value_parser = parse_fixed)]
        fixed: [UnitValue; 3],
        #[arg(long, value_parser = parse_range)]
        range: (UnitValue, UnitValue),
        #[arg(long, value_parser = parse_tol)]
        tol: Option<Tolerance>,
    },
    /// Search the Frank family for parameters making the quadruple a proportion.
    SolveP {
        #[arg(long, value_parser = parse_quad)]
        quad: Quadruple,
        #[arg(long, value_parser = parse_tol)]
        tol: Option<Tolerance>,
        #[arg(long)]
        grid: Option<usize>,
    },
    /// Find the power-mean exponent making the quadruple a proportion.
    SolveR {
        #[arg(long, value_parser = parse_quad)]
        quad: Quadruple,
        #[arg(long, value_parser = parse_tol)]
        tol: Option<Tolerance>,
    },
    /// Check the Boolean postulates exhaustively.
    Postulates,
}

fn parse_unit(s: &str) -> Result<UnitValue, String> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| format!("'{s}' is not a number"))?;
    UnitValue::new(v).map_err(|e| e.to_string())
}

fn parse_list<const N: usize>(s: &str) -> Result<[UnitValue; N], String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != N {
        return Err(format!(
            "expected {N} comma-separated values, got {}",
            parts.len()
        ));
    }
    let mut out = [UnitValue::ZERO; N];
    for (slot, part) in out.iter_mut().zip(parts) {
        *slot = parse_unit(part)?;
    }
    Ok(out)
}

fn parse_quad(s: &str) -> Result<Quadruple, String> {
    let [a, b, c, d] = parse_list::<4>(s)?;
    Ok(Quadruple::new(a, b, c, d))
}

fn parse_fixed(s: &str) -> Result<[UnitValue; 3], String> {
    parse_list::<3>(s)
}

fn parse_range(s: &str) -> Result<(UnitValue, UnitValue), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("expected lo:hi, got '{s}'"))?;
    Ok((parse_unit(lo)?, parse_unit(hi)?))
}

fn parse_tol(s: &str) -> Result<Tolerance, String> {
    let v: f64 = s.parse().map_err(|_| format!("'{s}' is not a number"))?;
    Tolerance::new(v).map_err(|e| e.to_string())
}

fn parse_frank(s: &str) -> Result<FrankParam, String> {
    let v = match s {
        "inf" => f64::INFINITY,
        _ => s
            .parse::<f64>()
            .map_err(|_| format!("'{s}' is not a Frank parameter"))?,
    };
    FrankParam::new(v).map_err(|e| e.to_string())
}

fn parse_tnorm(s: &str) -> Result<TNormKind, String> {
    match s {
        "min" => Ok(TNormKind::Min),
        "product" => Ok(TNormKind::Product),
        "lukasiewicz" => Ok(TNormKind::Lukasiewicz),
        _ => match s.strip_prefix("frank:") {
            Some(p) => Ok(TNormKind::Frank(parse_frank(p)?)),
            None => Err(format!(
                "unknown t-norm '{s}' (min, product, lukasiewicz, frank:P)"
            )),
        },
    }
}

fn parse_mean(s: &str) -> Result<MeanParam, String> {
    match s {
        "geo" => Ok(MeanParam::Geometric),
        "min" => Ok(MeanParam::Min),
        "max" => Ok(MeanParam::Max),
        _ => {
            let v: f64 = s
                .parse()
                .map_err(|_| format!("'{s}' is not a mean exponent"))?;
            MeanParam::new(v).map_err(|e| e.to_string())
        }
    }
}

/// 12 significant digits; fixed notation for `|v|` in `[1e-4, 1e6)`,
/// scientific otherwise. Trailing zeros are dropped.
pub fn format_number(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if v.is_nan() {
        return "nan".to_string();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let sci = format!("{v:.11e}");
    let (mantissa, exponent) = sci
        .split_once('e')
        .expect("scientific format has an exponent");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    if (-4..6).contains(&exponent) {
        let decimals = (11 - exponent) as usize;
        trim_zeros(&format!("{v:.decimals$}")).to_string()
    } else {
        format!("{}e{exponent}", trim_zeros(mantissa))
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn format_frank(p: FrankParam) -> String {
    match p {
        FrankParam::Finite(v) => format_number(v.get()),
        sentinel => sentinel.to_string(),
    }
}

fn format_mean(r: MeanParam) -> String {
    match r {
        MeanParam::Power(v) => format_number(v.get()),
        sentinel => sentinel.to_string(),
    }
}

fn verdict(holds: bool) -> (&'static str, i32) {
    if holds {
        ("holds", EXIT_OK)
    } else {
        ("fails", EXIT_NEGATIVE)
    }
}

fn write_sweep_csv(w: &mut dyn Write, samples: &[(f64, f64)]) -> io::Result<()> {
    writeln!(w, "x,diff")?;
    for &(x, d) in samples {
        writeln!(w, "{},{}", format_number(x), format_number(d))?;
    }
    Ok(())
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    let code = match command {
        Command::TruthTable => {
            writeln!(out, "a,b,c,d,ap")?;
            for (q, ap) in ap_truth_table() {
                let [a, b, c, d] = q.as_array().map(u8::from);
                writeln!(out, "{a},{b},{c},{d},{}", u8::from(ap))?;
            }
            EXIT_OK
        }
        Command::Check { tnorm, quad, tol } => {
            let v = analogy_check(&tnorm, quad, tol.unwrap_or_default());
            let (word, code) = verdict(v.holds);
            writeln!(
                out,
                "{word} t_residual={} s_residual={}",
                format_number(v.t_residual),
                format_number(v.s_residual)
            )?;
            code
        }
        Command::CheckMean { r, quad, tol } => {
            let holds = mean_analogy_check(r, quad, tol.unwrap_or_default());
            let (word, code) = verdict(holds);
            writeln!(
                out,
                "{word} residual={}",
                format_number(mean_residual(r, quad))
            )?;
            code
        }
        Command::Degree { quad } => {
            writeln!(
                out,
                "dissim={}",
                format_number(mv_degree_dissim(quad).get())
            )?;
            writeln!(
                out,
                "similarity={}",
                format_number(mv_degree_similarity(quad).get())
            )?;
            EXIT_OK
        }
        Command::Sweep {
            p,
            fixed: [a, b, c],
            range: (lo, hi),
            steps,
            out: path,
        } => {
            let curve = sweep_d(p, a, b, c, lo, hi, steps)?;
            match path {
                Some(path) => {
                    let mut file = BufWriter::new(File::create(&path)?);
                    write_sweep_csv(&mut file, &curve.samples)?;
                    file.flush()?;
                }
                None => write_sweep_csv(out, &curve.samples)?,
            }
            EXIT_OK
        }
        Command::Minimize {
            p,
            fixed: [a, b, c],
            range: (lo, hi),
            tol,
        } => {
            let opts = SolverOptions::with_tol(tol.unwrap_or_default());
            let m = minimize_over_d(p, a, b, c, lo, hi, &opts)?;
            writeln!(
                out,
                "d_star={} min_diff={} root={}",
                format_number(m.d_star.get()),
                format_number(m.min_diff),
                if m.root { "yes" } else { "no" }
            )?;
            if m.root {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            }
        }
        Command::SolveP { quad, tol, grid } => {
            let mut opts = SolverOptions::with_tol(tol.unwrap_or_default());
            if let Some(n) = grid {
                opts.grid_steps = n;
            }
            let r = solve_p(quad, &opts)?;
            let solutions = if r.solutions.is_empty() {
                "none".to_string()
            } else {
                r.solutions
                    .iter()
                    .map(|&p| format_frank(p))
                    .collect::<Vec<_>>()
                    .join(",")
            };
            writeln!(
                out,
                "best_p={} best_residual={} solutions={solutions}",
                format_frank(r.best_p),
                format_number(r.best_residual)
            )?;
            if r.solutions.is_empty() {
                EXIT_NEGATIVE
            } else {
                EXIT_OK
            }
        }
        Command::SolveR { quad, tol } => {
            let s = solve_r(quad, &SolverOptions::with_tol(tol.unwrap_or_default()));
            writeln!(
                out,
                "r={} residual={}",
                format_mean(s.r),
                format_number(s.residual)
            )?;
            if s.converged() {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            }
        }
        Command::Postulates => {
            let report = verify_boolean_postulates();
            for check in &report.checks {
                let status = if check.passed() { "PASS" } else { "FAIL" };
                write!(out, "{status} {} cases={}", check.law.name(), check.cases)?;
                for cex in &check.counterexamples {
                    let bits: String = cex.iter().map(|&b| if b { '1' } else { '0' }).collect();
                    write!(out, " {bits}")?;
                }
                writeln!(out)?;
            }
            if report.all_passed() {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            }
        }
    };
    Ok(code)
}

/// Runs one invocation. `args` excludes the program name.
pub fn run<S: AsRef<str>>(args: &[S], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let argv = std::iter::once("tnorm-analogy").chain(args.iter().map(AsRef::as_ref));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let text = e.to_string();
                    let line = text
                        .lines()
                        .find(|l| !l.trim().is_empty())
                        .unwrap_or("error");
                    let _ = writeln!(err, "{}", line.trim());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
