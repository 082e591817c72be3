//! Command-line front end: input parsing, the named-variety catalog,
//! command dispatch, and report rendering. The only module with side
//! effects (reading spec files); everything else stays pure so that reports
//! are byte-for-byte reproducible.

pub mod catalog;
mod input;
mod render;
mod verify;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::bounds::{self, BoundsError};
use crate::projection::ProjectionError;
use crate::splitting::{self, SplittingError};

pub use input::load_spec;
pub use verify::{run_suite, CheckResult};

/// Errors surfaced to the user, each mapped to a process exit code:
/// `2` for input problems, `3` for detected mathematical inconsistency,
/// `4` for requests that are well-formed but provably impossible.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Inconsistent(String),
    #[error("{0}")]
    Incompatible(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Validation(_) => 2,
            CliError::Inconsistent(_) => 3,
            CliError::Incompatible(_) => 4,
        }
    }
}

impl From<ProjectionError> for CliError {
    fn from(err: ProjectionError) -> Self {
        match err {
            ProjectionError::Beilinson(inner) => CliError::Inconsistent(inner.to_string()),
            other => CliError::Validation(other.to_string()),
        }
    }
}

impl From<BoundsError> for CliError {
    fn from(err: BoundsError) -> Self {
        match err {
            BoundsError::InconsistentProfile { .. } | BoundsError::RouteMismatch { .. } => {
                CliError::Inconsistent(err.to_string())
            }
            BoundsError::Projection(inner) => inner.into(),
            other => CliError::Validation(other.to_string()),
        }
    }
}

impl From<SplittingError> for CliError {
    fn from(err: SplittingError) -> Self {
        match err {
            SplittingError::Incompatible { .. } => CliError::Incompatible(err.to_string()),
            SplittingError::SecantTooShort { .. } => CliError::Validation(err.to_string()),
        }
    }
}

/// Output format for reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Human,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "cmreg",
    version,
    about = "Exact Castelnuovo-Mumford regularity bounds for smooth projective varieties",
    long_about = "Computes exact regularity bounds for smooth projective varieties from \
their Hilbert polynomials, by two independent routes that are cross-checked on every row. \
Specs are catalog names (see `cmreg catalog`), JSON files, or inline JSON documents."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Regularity bound for a single projection target m
    Bound {
        /// Catalog name, spec file path, or inline JSON document
        #[arg(long)]
        spec: String,
        /// Projection target dimension
        #[arg(long)]
        m: usize,
        /// Assert the fiber hypothesis for otherwise-unsupported targets
        #[arg(long)]
        assume_fibers: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Bound table over all (or selected) projection targets
    Table {
        #[arg(long)]
        spec: String,
        /// Restrict to specific targets (repeatable); default n+1..=r
        #[arg(long = "m")]
        m: Vec<usize>,
        /// Assert the fiber hypothesis for otherwise-unsupported targets
        #[arg(long)]
        assume_fibers: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Rank table of the projected-ideal profile at m
    Ranks {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Splitting types on lines and the secant-length cap (unprojected)
    Splittings {
        #[arg(long)]
        spec: String,
        /// Also compute the forced splitting on a length-l secant line
        #[arg(long)]
        secant: Option<i64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run the internal identity suite
    Verify {
        /// Upper bound on the ambient dimension in the coefficient identity
        #[arg(long, default_value_t = 30)]
        rmax: usize,
        /// Upper bound on the coefficient index in the coefficient identity
        #[arg(long, default_value_t = 20)]
        lmax: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// List the built-in varieties with computed and expected bounds
    Catalog {
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

/// A rendered report plus whether a mathematical inconsistency was detected
/// along the way (the caller maps that to exit code 3 after printing).
#[derive(Debug)]
pub struct RunOutcome {
    pub report: String,
    pub math_failure: bool,
}

impl RunOutcome {
    fn clean(report: String) -> Self {
        RunOutcome { report, math_failure: false }
    }
}

/// Executes a parsed command and renders its report.
pub fn run(cli: &Cli) -> Result<RunOutcome, CliError> {
    match &cli.command {
        Command::Bound { spec, m, assume_fibers, format } => {
            let spec = load_spec(spec)?;
            validate_m(&spec, *m)?;
            let table = bounds::bound_table(&spec, Some(&[*m]), *assume_fibers);
            let row = &table.rows[0];
            if let Err(err) = &row.outcome {
                return Err(err.clone().into());
            }
            Ok(RunOutcome::clean(render::bound(*format, &spec, row, &table.comparisons)?))
        }
        Command::Table { spec, m, assume_fibers, format } => {
            let spec = load_spec(spec)?;
            let m_list = if m.is_empty() {
                None
            } else {
                for &target in m {
                    validate_m(&spec, target)?;
                }
                Some(m.as_slice())
            };
            let table = bounds::bound_table(&spec, m_list, *assume_fibers);
            let math_failure = table.has_inconsistency();
            let report = render::table(*format, &spec, &table)?;
            Ok(RunOutcome { report, math_failure })
        }
        Command::Ranks { spec, m, format } => {
            let spec = load_spec(spec)?;
            validate_m(&spec, *m)?;
            let profile = spec.pushforward_profile(*m)?;
            let table = profile
                .rank_table()
                .map_err(|err| CliError::Inconsistent(err.to_string()))?;
            profile
                .euler_consistency(&table)
                .map_err(|err| CliError::Inconsistent(err.to_string()))?;
            Ok(RunOutcome::clean(render::ranks(*format, &spec, *m, &profile, &table)?))
        }
        Command::Splittings { spec, secant, format } => {
            let spec = load_spec(spec)?;
            let analysis = splitting_analysis(&spec, *secant)?;
            Ok(RunOutcome::clean(render::splittings(*format, &spec, &analysis)?))
        }
        Command::Verify { rmax, lmax, format } => {
            if *rmax < 1 || *lmax < 1 {
                return Err(CliError::Validation(
                    "verify bounds --rmax and --lmax must be at least 1".to_string(),
                ));
            }
            let checks = run_suite(*rmax, *lmax);
            let math_failure = checks.iter().any(|check| !check.passed);
            let report = render::verify(*format, &checks)?;
            Ok(RunOutcome { report, math_failure })
        }
        Command::Catalog { format } => {
            Ok(RunOutcome::clean(render::catalog_listing(*format)?))
        }
    }
}

fn validate_m(spec: &crate::projection::VarietySpec, m: usize) -> Result<(), CliError> {
    let (min, max) = (spec.dim() + 1, spec.ambient());
    if m < min || m > max {
        return Err(CliError::Validation(format!(
            "m = {m} out of range [{min}, {max}] for {}",
            spec.name()
        )));
    }
    Ok(())
}

/// Everything the splittings command reports for the unprojected bundle.
pub(crate) struct SplittingAnalysis {
    pub rk_e: usize,
    pub c1_e: i64,
    pub low: i64,
    pub max_secant: i64,
    pub all: Vec<crate::splitting::SplittingType>,
    pub secant: Option<(i64, crate::splitting::SplittingType)>,
}

fn splitting_analysis(
    spec: &crate::projection::VarietySpec,
    secant: Option<i64>,
) -> Result<SplittingAnalysis, CliError> {
    let profile = spec.pushforward_profile(spec.ambient())?;
    let table = profile
        .rank_table()
        .map_err(|err| CliError::Inconsistent(err.to_string()))?;
    let rk_e: usize = table
        .rk_e()
        .try_into()
        .map_err(|_| CliError::Validation("rk(E) too large to enumerate".to_string()))?;
    let c1_e: i64 = table
        .c1_e()
        .try_into()
        .map_err(|_| CliError::Validation("c1(E) out of machine range".to_string()))?;
    let d: i64 = spec
        .degree()
        .try_into()
        .map_err(|_| CliError::Validation("degree out of machine range".to_string()))?;
    let (low, _high) = splitting::component_range(d, spec.ambient() as i64, spec.dim() as i64);
    let max_secant = splitting::max_secant_length(c1_e, low);
    let all = splitting::enumerate_splittings(rk_e, c1_e, low);
    let secant = match secant {
        None => None,
        Some(l) => {
            let forced = splitting::secant_splitting(rk_e, c1_e, l)?;
            // The arithmetic above can succeed even when the forced summand
            // O(2-l) falls below the component floor; such a secant is just
            // as impossible as one with negative multiplicities.
            if 2 - l < low {
                return Err(CliError::Incompatible(format!(
                    "no length-{l} secant is compatible: the forced summand O({}) \
                     lies below the component floor O({low}) (max secant length {max_secant})",
                    2 - l
                )));
            }
            Some((l, forced))
        }
    };
    Ok(SplittingAnalysis { rk_e, c1_e, low, max_secant, all, secant })
}
