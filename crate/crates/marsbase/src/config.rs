//! Run configuration: strict JSON ingestion, dotted-path parameter
//! overrides and sweep specs.
//!
//! The model carries 60+ parameters, so configuration is strict: every
//! key must map to exactly one model field and unknown keys are errors,
//! never warnings.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::base_catalog::CatalogOverride;
use crate::construction::ConstructionMethod;
use crate::error::ModelError;
use crate::operations_energy::{ExcavationMode, ExtractionMode};
use crate::power_sizing::SizingProfile;
use crate::scenario_engine::{ModelParams, Operator, Scenario};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("config parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown config key `{0}`")]
    UnknownKey(String),

    #[error("override path `{0}` does not resolve to a model field")]
    UnknownPath(String),

    #[error("value out of range for `{path}`: {reason}")]
    OutOfRange { path: String, reason: String },

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),

    #[error("cannot read config: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OperatorKind {
    #[default]
    Robotic,
    HumanCrew,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ScenarioConfig {
    pub construction_method: ConstructionMethodConfig,
    pub operator: OperatorKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstructionMethodConfig {
    #[default]
    PrintedReinforced,
    FrameAndBlock,
}

impl From<ConstructionMethodConfig> for ConstructionMethod {
    fn from(c: ConstructionMethodConfig) -> Self {
        match c {
            ConstructionMethodConfig::PrintedReinforced => ConstructionMethod::PrintedReinforced,
            ConstructionMethodConfig::FrameAndBlock => ConstructionMethod::FrameAndBlock,
        }
    }
}

/// Interpretation modes and registry switch.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ModesConfig {
    pub extraction: ExtractionMode,
    pub excavation: ExcavationMode,
    pub sizing_profile: SizingProfile,
    /// Reproduce the reported component values in breakdowns.
    pub registry: bool,
}

impl Default for ModesConfig {
    fn default() -> Self {
        ModesConfig {
            extraction: ExtractionMode::default(),
            excavation: ExcavationMode::default(),
            sizing_profile: SizingProfile::default(),
            registry: true,
        }
    }
}

/// One-at-a-time sweep over a single dotted parameter path.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub parameter: String,
    pub start: f64,
    pub end: f64,
    pub steps: usize,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.steps < 2 {
            return Err(ConfigError::InvalidSweep(format!(
                "steps must be at least 2, got {}",
                self.steps
            )));
        }
        if !self.start.is_finite() || !self.end.is_finite() {
            return Err(ConfigError::InvalidSweep("range must be finite".into()));
        }
        // The path must resolve even before any evaluation runs.
        let mut probe = ModelParams::default();
        apply_override(&mut probe, &self.parameter, self.start)?;
        Ok(())
    }

    /// Sample values, evenly spaced from start to end inclusive.
    pub fn values(&self) -> Vec<f64> {
        let n = self.steps;
        (0..n)
            .map(|i| self.start + (self.end - self.start) * i as f64 / (n - 1) as f64)
            .collect()
    }
}

/// Full run configuration. An empty or absent file means all defaults,
/// which is the source study's baseline.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RunConfig {
    pub scenario: ScenarioConfig,
    pub modes: ModesConfig,
    /// Dotted-path → numeric value parameter overrides.
    pub overrides: BTreeMap<String, f64>,
    /// Sparse catalog row overrides.
    pub catalog: Vec<CatalogOverride>,
    pub format: OutputFormat,
    pub sweep: Option<SweepSpec>,
}

impl RunConfig {
    pub fn from_str(text: &str) -> Result<RunConfig, ConfigError> {
        if text.trim().is_empty() {
            return Ok(RunConfig::default());
        }
        serde_json::from_str(text).map_err(|e| {
            let message = e.to_string();
            if message.contains("unknown field") {
                ConfigError::UnknownKey(message)
            } else {
                ConfigError::Parse {
                    line: e.line(),
                    column: e.column(),
                    message,
                }
            }
        })
    }

    pub fn from_file(path: &Path) -> Result<RunConfig, ConfigError> {
        let text = std::fs::read_to_string(path)?;
        RunConfig::from_str(&text)
    }

    /// Build fully-resolved model parameters and the selected scenario.
    /// `extra_overrides` come from the command line and win over the file.
    pub fn resolve(
        &self,
        extra_overrides: &[(String, f64)],
    ) -> Result<(ModelParams, Scenario), ConfigError> {
        let mut params = ModelParams::default();
        params.extraction.mode = self.modes.extraction;
        params.excavation.mode = self.modes.excavation;
        params.sizing_profile = self.modes.sizing_profile;
        params.registry_mode = self.modes.registry;

        params
            .inventory
            .apply_overrides(&self.catalog)
            .map_err(map_model_error)?;
        for (path, value) in &self.overrides {
            apply_override(&mut params, path, *value)?;
        }
        for (path, value) in extra_overrides {
            apply_override(&mut params, path, *value)?;
        }
        validate_params(&params)?;

        if let Some(sweep) = &self.sweep {
            sweep.validate()?;
        }

        let scenario = Scenario {
            construction_method: self.scenario.construction_method.into(),
            operator: match self.scenario.operator {
                OperatorKind::Robotic => Operator::robotic_default(),
                OperatorKind::HumanCrew => Operator::HumanCrew,
            },
        };
        Ok((params, scenario))
    }
}

fn map_model_error(e: ModelError) -> ConfigError {
    match e {
        ModelError::UnknownStructure(name) => ConfigError::UnknownKey(format!("catalog.{name}")),
        ModelError::UnknownStructureField { structure, field } => {
            ConfigError::UnknownKey(format!("catalog.{structure}.{field}"))
        }
        other => ConfigError::OutOfRange {
            path: "catalog".into(),
            reason: other.to_string(),
        },
    }
}

/// Validate every parameter group after overrides landed.
fn validate_params(params: &ModelParams) -> Result<(), ConfigError> {
    let to_cfg = |e: ModelError| ConfigError::OutOfRange {
        path: "overrides".into(),
        reason: e.to_string(),
    };
    params.environment.validate().map_err(to_cfg)?;
    params.sand.validate().map_err(to_cfg)?;
    params.steel.validate().map_err(to_cfg)?;
    params.inventory.validate().map_err(to_cfg)?;
    params.extraction.validate().map_err(to_cfg)?;
    params.haul_raw.validate().map_err(to_cfg)?;
    params.haul_water.validate().map_err(to_cfg)?;
    params.excavation.validate().map_err(to_cfg)?;
    params.mass_driver.validate().map_err(to_cfg)?;
    params.crew.validate().map_err(to_cfg)?;
    Ok(())
}

/// All dotted paths `apply_override` accepts, for error messages and docs.
pub fn known_paths() -> Vec<&'static str> {
    PATHS.iter().map(|(p, _)| *p).collect()
}

type Setter = fn(&mut ModelParams, f64);

macro_rules! path {
    ($name:literal, $($field:tt).+) => {
        ($name, (|p: &mut ModelParams, v: f64| { p.$($field).+ = v; }) as Setter)
    };
}

const PATHS: &[(&str, Setter)] = &[
    path!("environment.gravity", environment.gravity),
    path!("environment.insolation", environment.insolation),
    path!(
        "environment.sunlight_hours_per_sol",
        environment.sunlight_hours_per_sol
    ),
    path!("environment.sol_length", environment.sol_length),
    path!(
        "environment.atmosphere_density_at_driver",
        environment.atmosphere_density_at_driver
    ),
    path!("sand.density", sand.density),
    path!("sand.heat_capacity", sand.heat_capacity),
    path!("sand.delta_t", sand.delta_t),
    path!("sand.latent_heat", sand.latent_heat),
    path!("steel.density", steel.density),
    path!("steel.heat_capacity", steel.heat_capacity),
    path!("steel.delta_t", steel.delta_t),
    path!("steel.latent_heat", steel.latent_heat),
    path!("extraction.water_mass_per_sol", extraction.water_mass_per_sol),
    path!("extraction.water_fraction", extraction.water_fraction),
    path!("extraction.hydrate_fraction", extraction.hydrate_fraction),
    path!("extraction.residue_fraction", extraction.residue_fraction),
    path!("extraction.sand_fraction", extraction.sand_fraction),
    path!("extraction.dehydration_heat", extraction.dehydration_heat),
    path!(
        "extraction.hydrate_heat_capacity",
        extraction.hydrate_heat_capacity
    ),
    path!("extraction.sand_heat_capacity", extraction.sand_heat_capacity),
    path!("extraction.bake_temperature", extraction.bake_temperature),
    path!("extraction.ambient_temperature", extraction.ambient_temperature),
    path!("extraction.water_heat_capacity", extraction.water_heat_capacity),
    path!("extraction.water_latent_heat", extraction.water_latent_heat),
    path!("haul_raw.payload", haul_raw.payload),
    path!("haul_raw.distance", haul_raw.distance),
    path!("haul_raw.friction_coeff", haul_raw.friction_coeff),
    path!("haul_raw.movement_ratio", haul_raw.movement_ratio),
    path!("haul_raw.mass_multiplier", haul_raw.mass_multiplier),
    path!("haul_water.payload", haul_water.payload),
    path!("haul_water.distance", haul_water.distance),
    path!("haul_water.friction_coeff", haul_water.friction_coeff),
    path!("haul_water.movement_ratio", haul_water.movement_ratio),
    path!("haul_water.mass_multiplier", haul_water.mass_multiplier),
    path!("excavation.dig_force", excavation.dig_force),
    path!("excavation.robot_footprint", excavation.robot_footprint),
    path!("excavation.regolith_density", excavation.regolith_density),
    path!("excavation.friction_coeff", excavation.friction_coeff),
    path!("excavation.movement_ratio", excavation.movement_ratio),
    path!("excavation.roundtrip_factor", excavation.roundtrip_factor),
    path!("mass_driver.payload_mass", mass_driver.payload_mass),
    path!("mass_driver.container_mass", mass_driver.container_mass),
    path!("mass_driver.target_speed", mass_driver.target_speed),
    path!("mass_driver.drag_distance", mass_driver.drag_distance),
    path!("mass_driver.drag_coeff", mass_driver.drag_coeff),
    path!("mass_driver.frontal_area", mass_driver.frontal_area),
    path!("mass_driver.air_density", mass_driver.air_density),
    path!(
        "mass_driver.launcher_efficiency",
        mass_driver.launcher_efficiency
    ),
    path!("crew.headcount", crew.headcount),
    path!("crew.o2_moles_per_person", crew.o2_moles_per_person),
    path!("crew.o2_energy_kj_per_mol", crew.o2_energy_kj_per_mol),
    path!(
        "crew.electricity_kwh_per_person",
        crew.electricity_kwh_per_person
    ),
    path!("crew.water_l_per_person", crew.water_l_per_person),
    path!("crew.water_energy_total_mj", crew.water_energy_total_mj),
    path!("crew.food_waste_multiplier", crew.food_waste_multiplier),
];

/// Set a single model field addressed by a dotted path.
pub fn apply_override(
    params: &mut ModelParams,
    path: &str,
    value: f64,
) -> Result<(), ConfigError> {
    if !value.is_finite() {
        return Err(ConfigError::OutOfRange {
            path: path.into(),
            reason: format!("value must be finite, got {value}"),
        });
    }
    match PATHS.iter().find(|(p, _)| *p == path) {
        Some((_, set)) => {
            set(params, value);
            Ok(())
        }
        None => Err(ConfigError::UnknownPath(path.into())),
    }
}

/// Parse a `--set path=value` argument.
pub fn parse_set_arg(arg: &str) -> Result<(String, f64), ConfigError> {
    let (path, value) = arg.split_once('=').ok_or_else(|| ConfigError::OutOfRange {
        path: arg.into(),
        reason: "expected `path=value`".into(),
    })?;
    let value: f64 = value.parse().map_err(|_| ConfigError::OutOfRange {
        path: path.into(),
        reason: format!("`{value}` is not a number"),
    })?;
    Ok((path.to_string(), value))
}
