//! Command-line shell for the base energy model.
//!
//! Exit codes: 0 success, 2 configuration error, 3 model-domain error,
//! 4 I/O error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use marsbase::config::{parse_set_arg, ConfigError, OutputFormat, RunConfig, SweepSpec};
use marsbase::error::ModelError;
use marsbase::power_sizing::{required_area, PlantKind};
use marsbase::report::{Emit, EvaluationReport, PlantSizingReport};
use marsbase::scenario_engine::{
    construction_comparison, operations_breakdown, reconcile, reported,
};
use marsbase::sweep::{run_sweep, SweepError};

/// Environment variable holding the default config file path.
const CONFIG_ENV_VAR: &str = "MARSBASE_CONFIG";

#[derive(Parser)]
#[command(
    name = "marsbase",
    about = "Energy and sizing model for a Mars water-mining base",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonOpts {
    /// Config file (JSON). Falls back to $MARSBASE_CONFIG, then defaults.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Override one model parameter, `path=value`. Repeatable.
    #[arg(long = "set", value_name = "PATH=VALUE")]
    set: Vec<String>,

    /// Output format (overrides the config file's choice).
    #[arg(long, value_enum)]
    format: Option<FormatArg>,

    /// Write output to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Json,
    Csv,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Table => OutputFormat::Table,
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Csv => OutputFormat::Csv,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one scenario's per-sol operations energy breakdown.
    Evaluate(CommonOpts),
    /// The 2×2 construction comparison: method × structure set.
    Grid(CommonOpts),
    /// One-at-a-time sensitivity sweep over a single parameter.
    Sweep {
        #[command(flatten)]
        common: CommonOpts,
        /// Dotted parameter path (overrides the config file's sweep).
        #[arg(long)]
        parameter: Option<String>,
        #[arg(long)]
        start: Option<f64>,
        #[arg(long)]
        end: Option<f64>,
        #[arg(long)]
        steps: Option<usize>,
    },
    /// Audit computed quantities against the reported reference values.
    Reconcile(CommonOpts),
    /// Size solar-thermal and photovoltaic plants for an energy demand.
    SizePlant {
        #[command(flatten)]
        common: CommonOpts,
        /// Energy requirement [MJ/sol]; defaults to the reported
        /// per-sol operations total.
        #[arg(long)]
        energy: Option<f64>,
    },
}

enum CliError {
    Config(ConfigError),
    Model(ModelError),
    Io(std::io::Error),
}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        match e {
            ConfigError::Io(io) => CliError::Io(io),
            other => CliError::Config(other),
        }
    }
}

impl From<ModelError> for CliError {
    fn from(e: ModelError) -> Self {
        CliError::Model(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<SweepError> for CliError {
    fn from(e: SweepError) -> Self {
        match e {
            SweepError::Config(c) => CliError::from(c),
            SweepError::Model(m) => CliError::Model(m),
        }
    }
}

fn load_config(common: &CommonOpts) -> Result<RunConfig, CliError> {
    let path = common
        .config
        .clone()
        .or_else(|| std::env::var_os(CONFIG_ENV_VAR).map(PathBuf::from));
    match path {
        Some(p) => Ok(RunConfig::from_file(&p)?),
        None => Ok(RunConfig::default()),
    }
}

fn cli_overrides(common: &CommonOpts) -> Result<Vec<(String, f64)>, CliError> {
    common
        .set
        .iter()
        .map(|s| parse_set_arg(s).map_err(CliError::from))
        .collect()
}

fn write_output(common: &CommonOpts, text: &str) -> Result<(), CliError> {
    match &common.out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    let common = match &cli.command {
        Command::Evaluate(c) | Command::Grid(c) | Command::Reconcile(c) => c,
        Command::Sweep { common, .. } | Command::SizePlant { common, .. } => common,
    };
    let cfg = load_config(common)?;
    let format = common
        .format
        .map(OutputFormat::from)
        .unwrap_or(cfg.format);
    let (params, scenario) = cfg.resolve(&cli_overrides(common)?)?;

    let text = match &cli.command {
        Command::Evaluate(_) => {
            let breakdown = operations_breakdown(&scenario, &params)?;
            EvaluationReport::new(scenario, params.registry_mode, breakdown).emit(format)
        }
        Command::Grid(_) => construction_comparison(&params)?.emit(format),
        Command::Reconcile(_) => reconcile(&params)?.emit(format),
        Command::Sweep {
            parameter,
            start,
            end,
            steps,
            ..
        } => {
            let spec = match parameter {
                Some(p) => SweepSpec {
                    parameter: p.clone(),
                    start: start.ok_or_else(|| missing_sweep_arg("--start"))?,
                    end: end.ok_or_else(|| missing_sweep_arg("--end"))?,
                    steps: steps.ok_or_else(|| missing_sweep_arg("--steps"))?,
                },
                None => cfg.sweep.clone().ok_or_else(|| {
                    CliError::Config(ConfigError::InvalidSweep(
                        "no sweep in config and no --parameter given".into(),
                    ))
                })?,
            };
            run_sweep(&params, &scenario, &spec)?.emit(format)
        }
        Command::SizePlant { energy, .. } => {
            let e = energy.unwrap_or_else(reported::operations_total_exact_mj);
            let report = PlantSizingReport {
                energy_per_sol_mj: e,
                profile: params.sizing_profile,
                solar_thermal_area_m2: required_area(
                    e,
                    PlantKind::SolarThermal,
                    &params.environment,
                    params.sizing_profile,
                )?,
                photovoltaic_area_m2: required_area(
                    e,
                    PlantKind::Photovoltaic,
                    &params.environment,
                    params.sizing_profile,
                )?,
            };
            report.emit(format)
        }
    };
    write_output(common, &text)
}

fn missing_sweep_arg(name: &str) -> CliError {
    CliError::Config(ConfigError::InvalidSweep(format!(
        "{name} is required when --parameter is given"
    )))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Config(e)) => {
            eprintln!("config error: {e}");
            ExitCode::from(2)
        }
        Err(CliError::Model(e)) => {
            eprintln!("model error: {e}");
            ExitCode::from(3)
        }
        Err(CliError::Io(e)) => {
            eprintln!("i/o error: {e}");
            ExitCode::from(4)
        }
    }
}
