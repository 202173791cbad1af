//! The `bohr` command line: `constants`, `verify`, `radius`, `scan` and `lemma`.
//!
//! Exit codes: 0 success, 1 inequality or check violations, 2 constant
//! residual above tolerance, 64 usage error, 65 domain/singularity/bracket or
//! unsupported input, 66 non-monotone functional, 67 coefficient budget
//! exhausted, 74 output file error.

mod output;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use output::sig12;
use output::LemmaRow;

use crate::constants::constants_report;
use crate::functionals::{AreaInterpretation, Preset};
use crate::series::FamilySpec;
use crate::verify::{
    a_grid, lemma1a_check, lemma1b_check, lemma1c_check, radius_search, schwarz_pick_chain_check,
    sharpness_scan, theorem_sweep, FamilyTemplate, RadiusChoice,
};
use crate::BohrError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_RESIDUAL: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DOMAIN: i32 = 65;
pub const EXIT_MONOTONICITY: i32 = 66;
pub const EXIT_BUDGET: i32 = 67;
pub const EXIT_IO: i32 = 74;

const DEFAULT_GRID: &str = "0:0.9999:0.0001";

#[derive(Debug, Parser)]
#[command(
    name = "bohr",
    version,
    about = "Numerical checks of Bohr-type inequalities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the sharp constants and compare them with published decimals.
    Constants {
        /// Uniform residual tolerance replacing the per-constant defaults.
        #[arg(long)]
        tol: Option<f64>,
        #[command(flatten)]
        io: OutputArgs,
    },
    /// Evaluate a theorem's functional over a parameter grid.
    Verify {
        #[arg(long)]
        theorem: String,
        #[command(flatten)]
        grid: GridArgs,
        /// Violation tolerance replacing the closed-form/truncated defaults.
        #[arg(long)]
        tol: Option<f64>,
        #[command(flatten)]
        io: OutputArgs,
    },
    /// Largest radius at which a functional stays at most one.
    Radius {
        #[arg(long)]
        functional: String,
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[command(flatten)]
        io: OutputArgs,
    },
    /// Maximize a functional over the parameter grid and test a perturbed weight.
    Scan {
        #[arg(long)]
        theorem: String,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, default_value_t = 0.0)]
        epsilon: f64,
        #[arg(long, value_enum, default_value_t = Interp::Slice)]
        interpretation: Interp,
        #[command(flatten)]
        io: OutputArgs,
    },
    /// Coefficient bounds (parts a, b, c) and the Schwarz–Pick chain.
    Lemma {
        #[arg(long, value_enum)]
        part: Part,
        #[arg(long)]
        family: String,
        /// Comma-separated radii.
        #[arg(long, value_delimiter = ',', required = true)]
        r: Vec<f64>,
        /// Truncation degree; chosen automatically when absent.
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        io: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// `extremal`, `scaled`, or a fixed function such as `moebius:0.5`.
    #[arg(long, default_value = "extremal")]
    family: String,
    /// Comma-separated dimensions.
    #[arg(long, value_delimiter = ',')]
    n: Vec<usize>,
    /// Parameter grid `start:stop:step`.
    #[arg(long, default_value = DEFAULT_GRID)]
    a: String,
    /// A radius, or `threshold` for the theorem's own radius.
    #[arg(long, default_value = "threshold")]
    r: String,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Reserved for randomized inputs; currently unused.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Interp {
    Literal,
    Slice,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Part {
    A,
    B,
    C,
    Chain,
}

/// A failure carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<BohrError> for Failure {
    fn from(e: BohrError) -> Self {
        let code = match e {
            BohrError::Parse(_) => EXIT_USAGE,
            BohrError::Monotonicity { .. } => EXIT_MONOTONICITY,
            BohrError::Budget { .. } => EXIT_BUDGET,
            _ => EXIT_DOMAIN,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_IO,
            message: format!("output error: {e}"),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

/// Runs the command line `args` (including the program name) and returns the
/// exit code. Reports go to `out` unless `--out` names a file; diagnostics go
/// to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Constants { tol, io } => {
            let mut report = constants_report()?;
            if let Some(t) = tol {
                if !(t > 0.0) {
                    return Err(usage("--tol must be positive"));
                }
                report = report.with_uniform_tolerance(t);
            }
            emit(&io, out, |w| match io.format {
                Format::Json => output::json(w, &report),
                Format::Csv => output::constants_csv(w, &report),
            })?;
            let breaches: Vec<_> = report.breaches().collect();
            for b in &breaches {
                writeln!(
                    err,
                    "residual breach: {} = {} differs from {} by {} > {}",
                    b.name,
                    sig12(b.computed),
                    sig12(b.published),
                    sig12(b.residual),
                    sig12(b.tolerance)
                )?;
            }
            Ok(if breaches.is_empty() {
                EXIT_OK
            } else {
                EXIT_RESIDUAL
            })
        }
        Command::Verify {
            theorem,
            grid,
            tol,
            io,
        } => {
            let theorem: Preset = theorem.parse()?;
            if let Some(t) = tol {
                if !(t >= 0.0) {
                    return Err(usage("--tol must be nonnegative"));
                }
            }
            let (template, n_list, grid_values, radius) = resolve_grid(&grid, theorem)?;
            let constants = constants_report()?;
            let report = theorem_sweep(
                theorem,
                &constants,
                &template,
                &n_list,
                &grid_values,
                radius,
                tol,
            )?;
            emit(&io, out, |w| match io.format {
                Format::Json => output::json(w, &report),
                Format::Csv => output::sweep_csv(w, &report),
            })?;
            writeln!(
                err,
                "{}: {} rows, {} violations, worst literal margin {}",
                theorem,
                report.rows.len(),
                report.violations.len(),
                sig12(report.worst_margin)
            )?;
            Ok(if report.ok() { EXIT_OK } else { EXIT_VIOLATION })
        }
        Command::Radius {
            functional,
            family,
            tol,
            io,
        } => {
            let preset: Preset = functional.parse()?;
            let family: FamilySpec = family.parse()?;
            let constants = constants_report()?;
            let result = radius_search(&preset.spec(&constants), &family, tol)?;
            emit(&io, out, |w| match io.format {
                Format::Json => output::json(w, &result),
                Format::Csv => output::radius_csv(w, &result),
            })?;
            Ok(EXIT_OK)
        }
        Command::Scan {
            theorem,
            grid,
            epsilon,
            interpretation,
            io,
        } => {
            let theorem: Preset = theorem.parse()?;
            let (template, n_list, grid_values, radius) = resolve_grid(&grid, theorem)?;
            if matches!(template, FamilyTemplate::Fixed(_)) {
                return Err(usage("scan needs a family template: extremal or scaled"));
            }
            if theorem.single_variable() && n_list.iter().any(|&n| n != 1) {
                return Err(BohrError::Unsupported(format!(
                    "theorem {theorem} concerns one variable"
                ))
                .into());
            }
            let constants = constants_report()?;
            let interp = match interpretation {
                Interp::Literal => AreaInterpretation::Literal,
                Interp::Slice => AreaInterpretation::Slice,
            };
            let spec = theorem.spec(&constants).with_interpretation(interp);
            let reports = n_list
                .iter()
                .map(|&n| {
                    let r = match radius {
                        RadiusChoice::Threshold => theorem.threshold(n),
                        RadiusChoice::Explicit(r) => r,
                    };
                    sharpness_scan(&spec, &template, n, &grid_values, r, epsilon)
                })
                .collect::<crate::Result<Vec<_>>>()?;
            emit(&io, out, |w| match io.format {
                Format::Json => output::json(w, &reports),
                Format::Csv => output::scan_csv(w, theorem.id(), &reports),
            })?;
            Ok(if reports.iter().all(|r| r.within_bound) {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            })
        }
        Command::Lemma {
            part,
            family,
            r,
            k,
            io,
        } => {
            let family: FamilySpec = family.parse()?;
            let rows = r
                .iter()
                .map(|&radius| {
                    Ok(match part {
                        Part::A => LemmaRow::Bound {
                            part: "a",
                            check: lemma1a_check(&family, radius, k)?,
                        },
                        Part::B => LemmaRow::Bound {
                            part: "b",
                            check: lemma1b_check(&family, radius, k)?,
                        },
                        Part::C => LemmaRow::Bound {
                            part: "c",
                            check: lemma1c_check(&family, radius, k)?,
                        },
                        Part::Chain => LemmaRow::Chain {
                            part: "chain",
                            check: schwarz_pick_chain_check(
                                &family,
                                radius,
                                chain_samples(family.dim()),
                            )?,
                        },
                    })
                })
                .collect::<crate::Result<Vec<_>>>()?;
            emit(&io, out, |w| match io.format {
                Format::Json => output::json(w, &rows),
                Format::Csv => output::lemma_csv(w, &rows),
            })?;
            Ok(if rows.iter().all(LemmaRow::ok) {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            })
        }
    }
}

/// Largest per-axis sample count up to 32 keeping the torus grid at most 2^20 points.
fn chain_samples(n: usize) -> usize {
    (8..=32)
        .rev()
        .find(|s: &usize| (*s as f64).powi(n as i32) <= (1u64 << 20) as f64)
        .unwrap_or(8)
}

fn resolve_grid(
    grid: &GridArgs,
    theorem: Preset,
) -> Result<(FamilyTemplate, Vec<usize>, Vec<f64>, RadiusChoice), Failure> {
    let template = match grid.family.trim().to_ascii_lowercase().as_str() {
        "extremal" => FamilyTemplate::Extremal,
        "scaled" => FamilyTemplate::Scaled,
        _ => FamilyTemplate::Fixed(grid.family.parse()?),
    };
    let n_list = if !grid.n.is_empty() {
        grid.n.clone()
    } else if let FamilyTemplate::Fixed(f) = &template {
        vec![f.dim()]
    } else if theorem.single_variable() {
        vec![1]
    } else {
        vec![1, 2, 3, 5]
    };
    let parts: Vec<&str> = grid.a.split(':').collect();
    let [start, stop, step] = parts.as_slice() else {
        return Err(usage(format!(
            "--a expects start:stop:step, got {:?}",
            grid.a
        )));
    };
    let num = |t: &str| {
        t.trim()
            .parse::<f64>()
            .map_err(|_| usage(format!("--a expects numbers, got {:?}", grid.a)))
    };
    let values = a_grid(num(start)?, num(stop)?, num(step)?).map_err(|e| usage(e.to_string()))?;
    let radius = if grid.r.trim().eq_ignore_ascii_case("threshold") {
        RadiusChoice::Threshold
    } else {
        RadiusChoice::Explicit(grid.r.trim().parse().map_err(|_| {
            usage(format!(
                "--r expects a number or `threshold`, got {:?}",
                grid.r
            ))
        })?)
    };
    Ok((template, n_list, values, radius))
}

fn emit(
    io: &OutputArgs,
    out: &mut dyn Write,
    write: impl FnOnce(&mut dyn Write) -> std::io::Result<()>,
) -> Result<(), Failure> {
    let _ = io.seed;
    match &io.out {
        Some(path) => {
            let mut file = BufWriter::new(File::create(path)?);
            write(&mut file)?;
            file.flush()?;
        }
        None => write(out)?,
    }
    Ok(())
}
