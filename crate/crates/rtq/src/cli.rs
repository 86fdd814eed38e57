//! The `rtq` command line: `quiver`, `poincare`, `verify`, `svg` and `batch`.
//!
//! Exit codes: `0` success, `1` a verification mismatch, `2` bad input
//! (unparsable fraction, invalid flag, color above the cap), `3` internal
//! failure (an invariant check, an I/O error, or a panic).
//! The environment variable `RTQ_JMAX_CAP` bounds the color (default 8).

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::arcdiagram::{self, BasisOrder};
use crate::quiverforms::{self, QuiverData};
use crate::seriescheck::{self, VerifyRecord};
use crate::skeinoracle;
use crate::tanglecore::Fraction;

/// Default bound on the color when `RTQ_JMAX_CAP` is unset.
pub const DEFAULT_JMAX_CAP: usize = 8;

#[derive(Parser, Debug)]
#[command(name = "rtq", version, about = "Quiver forms of rational tangles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the (almost-)quiver-form data of a tangle.
    Quiver {
        /// Tangle fraction `u/v`.
        tangle: Fraction,
        /// Reduce to almost-quiver form.
        #[arg(long)]
        reduced: bool,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
        /// Basis order of the output.
        #[arg(long, value_enum, default_value_t = Order::Standard)]
        order: Order,
    },
    /// Print the Poincaré polynomial at color `j` computed from the twist rules.
    Poincare {
        /// Tangle fraction `u/v`.
        tangle: Fraction,
        /// Color `j`, at most the cap.
        #[arg(short = 'j', long = "color")]
        j: usize,
        /// Substitute `t = -1`.
        #[arg(long)]
        specialize: bool,
    },
    /// Compare quiver-form expansions with the twist-rule polynomial; one JSON line per check.
    Verify {
        /// A single tangle; omit when using `--sweep`.
        tangle: Option<Fraction>,
        /// Check every coprime `u/v` with `u + v <= N`.
        #[arg(long, value_name = "N", conflicts_with = "tangle")]
        sweep: Option<u64>,
        /// Check colors `0..=jmax`.
        #[arg(long, default_value_t = 3)]
        jmax: usize,
    },
    /// Render the arc diagram as SVG.
    Svg {
        /// Tangle fraction `u/v`.
        tangle: Fraction,
        /// Destination file.
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Write one JSON file per tangle of a sweep plus `summary.json`.
    Batch {
        /// Process every coprime `u/v` with `u + v <= N`.
        #[arg(long, value_name = "N")]
        sweep: u64,
        /// Output directory, created if missing.
        #[arg(long)]
        out: PathBuf,
        /// Worker threads; output does not depend on this.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Verify colors `0..=jmax`.
        #[arg(long, default_value_t = 3)]
        jmax: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Order {
    Standard,
    Arc,
}

impl From<Order> for BasisOrder {
    fn from(o: Order) -> Self {
        match o {
            Order::Standard => BasisOrder::Standard,
            Order::Arc => BasisOrder::Arc,
        }
    }
}

/// Failure classes mapped onto exit codes.
enum Failure {
    Input(String),
    Mismatch(String),
    Internal(String),
}

impl Failure {
    fn internal(e: impl std::fmt::Display) -> Self {
        Failure::Internal(e.to_string())
    }
}

fn jmax_cap() -> Result<usize, Failure> {
    match std::env::var("RTQ_JMAX_CAP") {
        Ok(v) => v.trim().parse().map_err(|_| Failure::Input(format!("RTQ_JMAX_CAP is not a number: `{v}`"))),
        Err(_) => Ok(DEFAULT_JMAX_CAP),
    }
}

fn check_color(j: usize) -> Result<(), Failure> {
    let cap = jmax_cap()?;
    if j > cap {
        return Err(Failure::Input(format!("color {j} exceeds the cap {cap} (set RTQ_JMAX_CAP to raise it)")));
    }
    Ok(())
}

/// One tangle's entry in a batch run.
#[derive(Serialize)]
struct BatchEntry {
    tangle: Fraction,
    quiver: QuiverData,
    reduced: QuiverData,
    verify: Vec<VerifyRecord>,
}

#[derive(Serialize)]
struct BatchSummary {
    tangles: usize,
    checks: usize,
    mismatches: usize,
    jmax: usize,
}

fn quiver_data(f: Fraction, reduced: bool, order: Order) -> Result<QuiverData, Failure> {
    let d = arcdiagram::build(f).map_err(Failure::internal)?;
    let full = quiverforms::compute_quiver_on(&d).map_err(Failure::internal)?;
    let data = if reduced { quiverforms::reduce_almost(&full, &d).map_err(Failure::internal)? } else { full };
    Ok(data.reordered(&d, order.into()))
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes()).map_err(Failure::internal)
}

fn batch_entry(f: Fraction, jmax: usize) -> Result<BatchEntry, Failure> {
    Ok(BatchEntry {
        tangle: f,
        quiver: quiver_data(f, false, Order::Standard)?,
        reduced: quiver_data(f, true, Order::Standard)?,
        verify: seriescheck::verify_tangle(f, jmax).map_err(Failure::internal)?,
    })
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match cmd {
        Command::Quiver { tangle, reduced, format, order } => {
            let data = quiver_data(tangle, reduced, order)?;
            let text = match format {
                Format::Json => data.to_json() + "\n",
                Format::Csv => data.to_csv(),
                Format::Pretty => data.to_pretty(),
            };
            write_out(out, &text)
        }
        Command::Poincare { tangle, j, specialize } => {
            check_color(j)?;
            let mut w = skeinoracle::poincare(tangle, j);
            if specialize {
                w = skeinoracle::specialize_t(&w);
            }
            write_out(out, &format!("{w}\n"))
        }
        Command::Verify { tangle, sweep, jmax } => {
            check_color(jmax)?;
            let records = match (tangle, sweep) {
                (Some(f), None) => seriescheck::verify_tangle(f, jmax),
                (None, Some(n)) => seriescheck::verify_sweep(n, jmax),
                _ => return Err(Failure::Input("give either a tangle or --sweep N".to_string())),
            }
            .map_err(Failure::internal)?;
            for r in &records {
                write_out(out, &(r.to_json_line() + "\n"))?;
            }
            match records.iter().find(|r| !r.is_ok()) {
                Some(bad) => Err(Failure::Mismatch(bad.to_json_line())),
                None => Ok(()),
            }
        }
        Command::Svg { tangle, output } => {
            let d = arcdiagram::build(tangle).map_err(Failure::internal)?;
            std::fs::write(&output, arcdiagram::emit_svg(&d)).map_err(Failure::internal)?;
            write_out(out, &format!("wrote {}\n", output.display()))
        }
        Command::Batch { sweep, out: dir, jobs, jmax } => {
            check_color(jmax)?;
            if jobs == 0 {
                return Err(Failure::Input("--jobs must be at least 1".to_string()));
            }
            std::fs::create_dir_all(&dir).map_err(Failure::internal)?;
            let fractions = Fraction::sweep(sweep);
            let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(Failure::internal)?;
            let entries: Vec<Result<BatchEntry, Failure>> =
                pool.install(|| fractions.par_iter().map(|&f| batch_entry(f, jmax)).collect());
            let (mut checks, mut mismatches) = (0, 0);
            for e in entries {
                let e = e?;
                checks += e.verify.len();
                mismatches += e.verify.iter().filter(|r| !r.is_ok()).count();
                let path = dir.join(format!("{}_{}.json", e.tangle.u(), e.tangle.v()));
                let body = serde_json::to_string_pretty(&e).map_err(Failure::internal)? + "\n";
                std::fs::write(path, body).map_err(Failure::internal)?;
            }
            let summary = BatchSummary { tangles: fractions.len(), checks, mismatches, jmax };
            let body = serde_json::to_string_pretty(&summary).map_err(Failure::internal)? + "\n";
            std::fs::write(dir.join("summary.json"), body).map_err(Failure::internal)?;
            write_out(out, &format!("wrote {} tangles to {}\n", fractions.len(), dir.display()))?;
            if mismatches > 0 {
                return Err(Failure::Mismatch(format!("{mismatches} mismatching checks")));
            }
            Ok(())
        }
    }
}

/// Runs the command line `args` (including the program name) and returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = catch_unwind(AssertUnwindSafe(|| dispatch(cli.command, out)));
    match result {
        Ok(Ok(())) => 0,
        Ok(Err(Failure::Input(m))) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Ok(Err(Failure::Mismatch(m))) => {
            let _ = writeln!(err, "mismatch: {m}");
            1
        }
        Ok(Err(Failure::Internal(m))) => {
            let _ = writeln!(err, "internal error: {m}");
            3
        }
        Err(_) => {
            let _ = writeln!(err, "internal error: panic");
            3
        }
    }
}
