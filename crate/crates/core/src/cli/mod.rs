//! Command-line front end: expression parsing plus subcommands for normal
//! forms, the Haar functional, inner products, spherical elements and the
//! addition-formula checks.
//!
//! Exit codes: `0` success, `1` a verification failed, `2` usage or input
//! error. The rank flag `--n` falls back to `QDISK_DEFAULT_N` when absent.

pub mod expr;

use std::io::Write;
use std::ops::RangeInclusive;
use std::sync::Mutex;

use clap::{Parser, Subcommand};

use crate::diskpoly::{assoc_spherical, spherical};
use crate::error::{Error, Result};
use crate::haar::{haar, inner};
use crate::tensor::{verify_addition, Variant, Verdict};
use crate::zalgebra::ZElement;

pub use expr::{eval, parse, parse_element, Expr, GenLeaf};

/// Environment variable supplying the default rank.
pub const DEFAULT_N_VAR: &str = "QDISK_DEFAULT_N";

#[derive(Parser, Debug)]
#[command(name = "qdisk", version, about = "Exact computation in q-deformed polynomial algebras on C^n")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the normal form of an expression.
    Normalize {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the Haar functional on an expression.
    Haar {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        expr: String,
    },
    /// Compute the inner product `h(rhs^* lhs)`.
    Inner {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// Build a zonal or associated spherical element.
    Spherical {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        m: u32,
        /// Associated element indices `R,S`.
        #[arg(long, value_parser = parse_pair)]
        assoc: Option<(u32, u32)>,
        #[arg(long)]
        json: bool,
    },
    /// Check one instance of the addition formula.
    VerifyAddition {
        #[arg(long)]
        alpha: u32,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        m: u32,
        /// Check the precursor form instead of the final one.
        #[arg(long)]
        precursor: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check both forms of the addition formula over a parameter grid.
    Suite {
        /// e.g. `alpha=1..3;l=0..2;m=0..2`
        #[arg(long, value_parser = parse_grid)]
        grid: Grid,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

/// Inclusive ranges for `alpha`, `l` and `m`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Grid {
    pub alpha: RangeInclusive<u32>,
    pub l: RangeInclusive<u32>,
    pub m: RangeInclusive<u32>,
}

impl Grid {
    /// Every `(alpha, l, m)` in the grid.
    pub fn points(&self) -> Vec<(u32, u32, u32)> {
        let mut out = Vec::new();
        for a in self.alpha.clone() {
            for l in self.l.clone() {
                for m in self.m.clone() {
                    out.push((a, l, m));
                }
            }
        }
        out
    }
}

fn parse_pair(s: &str) -> std::result::Result<(u32, u32), String> {
    let (r, t) = s.split_once(',').ok_or_else(|| format!("expected R,S, got {s:?}"))?;
    let num = |x: &str| x.trim().parse::<u32>().map_err(|e| format!("{x:?}: {e}"));
    Ok((num(r)?, num(t)?))
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<u32>, String> {
    let num = |x: &str| x.trim().parse::<u32>().map_err(|e| format!("{x:?}: {e}"));
    match s.split_once("..") {
        Some((a, b)) => Ok(num(a)?..=num(b)?),
        None => {
            let v = num(s)?;
            Ok(v..=v)
        }
    }
}

/// Parses `alpha=A..B;l=C..D;m=E..F`; a single value stands for itself and
/// missing keys default to `alpha=1`, `l=0`, `m=0`.
pub fn parse_grid(s: &str) -> std::result::Result<Grid, String> {
    let mut grid = Grid { alpha: 1..=1, l: 0..=0, m: 0..=0 };
    for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, value) = part.split_once('=').ok_or_else(|| format!("expected key=range, got {part:?}"))?;
        let range = parse_range(value)?;
        match key.trim() {
            "alpha" => grid.alpha = range,
            "l" => grid.l = range,
            "m" => grid.m = range,
            other => return Err(format!("unknown grid key {other:?}")),
        }
    }
    Ok(grid)
}

fn rank(n: Option<usize>) -> Result<usize> {
    if let Some(n) = n {
        return Ok(n);
    }
    let raw = std::env::var(DEFAULT_N_VAR)
        .map_err(|_| Error::InvalidParameter(format!("--n is required unless {DEFAULT_N_VAR} is set")))?;
    raw.trim().parse().map_err(|_| Error::InvalidParameter(format!("{DEFAULT_N_VAR}={raw:?} is not a rank")))
}

fn write_element(out: &mut dyn Write, e: &ZElement, json: bool) -> Result<()> {
    let text = if json { serde_json::to_string(e).expect("elements serialize") } else { e.to_string() };
    writeln!(out, "{text}").map_err(io_error)
}

fn io_error(e: std::io::Error) -> Error {
    Error::InvalidParameter(format!("write failed: {e}"))
}

/// Runs every grid point for both variants on `jobs` threads, in grid order.
pub fn run_suite(grid: &Grid, jobs: usize) -> Vec<Result<Verdict>> {
    let tasks: Vec<(u32, u32, u32, Variant)> = grid
        .points()
        .into_iter()
        .flat_map(|(a, l, m)| [Variant::Final, Variant::Precursor].map(|v| (a, l, m, v)))
        .collect();
    let next = Mutex::new(0usize);
    let results: Mutex<Vec<Option<Result<Verdict>>>> = Mutex::new(vec![None; tasks.len()]);
    std::thread::scope(|scope| {
        for _ in 0..jobs.max(1) {
            scope.spawn(|| loop {
                let i = {
                    let mut guard = next.lock().expect("counter lock");
                    let i = *guard;
                    *guard += 1;
                    i
                };
                let Some(&(a, l, m, v)) = tasks.get(i) else { break };
                let verdict = verify_addition(l, m, a, v);
                results.lock().expect("results lock")[i] = Some(verdict);
            });
        }
    });
    results.into_inner().expect("results lock").into_iter().map(|r| r.expect("every task ran")).collect()
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Normalize { n, expr, json } => {
            let e = parse_element(&expr, rank(n)?)?;
            write_element(out, &e, json)?;
        }
        Command::Haar { n, expr } => {
            let e = parse_element(&expr, rank(n)?)?;
            writeln!(out, "{}", haar(&e)).map_err(io_error)?;
        }
        Command::Inner { n, lhs, rhs } => {
            let n = rank(n)?;
            let v = inner(&parse_element(&lhs, n)?, &parse_element(&rhs, n)?)?;
            writeln!(out, "{v}").map_err(io_error)?;
        }
        Command::Spherical { n, l, m, assoc, json } => {
            let n = rank(n)?;
            let e = match assoc {
                Some((r, s)) => assoc_spherical(l, m, r, s, n)?,
                None => spherical(l, m, n)?,
            };
            write_element(out, &e, json)?;
        }
        Command::VerifyAddition { alpha, l, m, precursor, json } => {
            let variant = if precursor { Variant::Precursor } else { Variant::Final };
            let v = verify_addition(l, m, alpha, variant)?;
            let text = if json { serde_json::to_string(&v).expect("verdicts serialize") } else { v.to_string() };
            writeln!(out, "{text}").map_err(io_error)?;
            return Ok(if v.pass { 0 } else { 1 });
        }
        Command::Suite { grid, jobs } => {
            let results = run_suite(&grid, jobs);
            writeln!(out, "{:>5} {:>3} {:>3} {:<9} {:<6} {:>8} {:>8}", "alpha", "l", "m", "variant", "result", "terms", "residual")
                .map_err(io_error)?;
            let mut failed = 0;
            for r in &results {
                match r {
                    Ok(v) => {
                        failed += usize::from(!v.pass);
                        writeln!(
                            out,
                            "{:>5} {:>3} {:>3} {:<9} {:<6} {:>8} {:>8}",
                            v.alpha,
                            v.l,
                            v.m,
                            v.variant.to_string(),
                            if v.pass { "PASS" } else { "FAIL" },
                            v.lhs_terms,
                            v.residual_terms.len()
                        )
                        .map_err(io_error)?;
                    }
                    Err(e) => {
                        failed += 1;
                        writeln!(out, "error: {e}").map_err(io_error)?;
                    }
                }
            }
            writeln!(out, "{} checks, {} passed, {} failed", results.len(), results.len() - failed, failed).map_err(io_error)?;
            return Ok(if failed == 0 { 0 } else { 1 });
        }
    }
    Ok(0)
}

/// Parses `args` (program name first) and runs the command, writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("qdisk").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn grid_parsing() {
        let g = parse_grid("alpha=1..3; l=0..2;m=1").unwrap();
        assert_eq!(g, Grid { alpha: 1..=3, l: 0..=2, m: 1..=1 });
        assert_eq!(g.points().len(), 9);
        assert!(parse_grid("beta=1..2").is_err());
        assert!(parse_grid("alpha").is_err());
        assert_eq!(parse_pair("1, 2"), Ok((1, 2)));
    }

    #[test]
    fn subcommand_outputs() {
        assert_eq!(run_str(&["haar", "--n", "2", "--expr", "z[2]*w[2]"]), (0, "q^2/(1 + q^2)\n".into(), String::new()));
        assert_eq!(run_str(&["normalize", "--n", "2", "--expr", "z[2]*z[1]"]).1, "1/(q)*z[1]*z[2]\n");
        let (code, out, _) = run_str(&["verify-addition", "--alpha", "2", "--l", "1", "--m", "0"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("PASS alpha=2 l=1 m=0 final"));
        let (code, _, err) = run_str(&["normalize", "--n", "2", "--expr", "z[1] +"]);
        assert_eq!(code, 2);
        assert!(err.contains("byte 6"));
    }

    #[test]
    fn suite_is_order_stable_across_jobs() {
        let g = parse_grid("alpha=1..2;l=0..1;m=0..1").unwrap();
        let one: Vec<_> = run_suite(&g, 1).into_iter().map(|r| Verdict { millis: 0, ..r.unwrap() }).collect();
        let four: Vec<_> = run_suite(&g, 4).into_iter().map(|r| Verdict { millis: 0, ..r.unwrap() }).collect();
        assert_eq!(one, four);
        assert!(one.iter().all(|v| v.pass));
    }
}
