//! Composes catalog, construction, operations and power sizing into the
//! four base scenarios, and audits every computed quantity against the
//! source study's reported values.
//!
//! The reported-value registry is first class: headline figures can be
//! reproduced verbatim (registry mode) even where the study's own
//! component formulas disagree with its arithmetic, and every such gap is
//! surfaced as a reconciliation entry instead of being silently patched.

use serde::{Deserialize, Serialize};

use crate::base_catalog::{BaseInventory, Environment, Material};
use crate::breakdown::EnergyBreakdown;
use crate::construction::{base_construction_energy, build_time, ConstructionMethod};
use crate::error::Result;
use crate::operations_energy::{
    crew_energy, drag_adjusted_velocity, excavation_energy, haul_energy, mass_driver_energy,
    water_extraction_energy, CrewProfile, ExcavationParams, ExtractionParams, HaulParams,
    MassDriverParams,
};
use crate::power_sizing::{required_area, PlantKind, PowerPlant, SizingProfile};

/// Reported headline values from the source feasibility study. Units are
/// carried in the constant names.
pub mod reported {
    pub const HAUL_RAW_MJ: f64 = 864.0;
    pub const EXCAVATION_MJ: f64 = 4594.0;
    pub const EXTRACTION_MJ: f64 = 4.37e5;
    pub const SURFACE_SUBTOTAL_MJ: f64 = 5.51e5;
    pub const MASS_DRIVER_LAUNCH_MJ: f64 = 2.5e6;
    pub const DRAG_ADJUSTED_VELOCITY_M_S: f64 = 5001.8;
    pub const CREW_TOTAL_MJ: f64 = 25_113.0;
    pub const OPERATIONS_TOTAL_MJ: f64 = 3.1e6;
    pub const SOLAR_THERMAL_AREA_KM2: f64 = 0.226;
    pub const PV_AREA_KM2: f64 = 0.50;
    pub const MASS_DRIVER_SHARE_PCT: f64 = 81.3;
    /// The abstract quotes 81.2% where the body says 81.3%.
    pub const MASS_DRIVER_SHARE_ABSTRACT_PCT: f64 = 81.2;
    pub const SURFACE_SHARE_PCT: f64 = 17.9;
    pub const CREW_SHARE_PCT: f64 = 0.82;
    /// Claimed construction-energy advantage of the robotic printed base.
    pub const CONSTRUCTION_FOLD: f64 = 5.0;
    /// Claimed build-time advantage under the same power plant.
    pub const BUILD_TIME_FOLD: f64 = 5.0;

    /// Exact sum of the reported per-sol components (launch + surface +
    /// crew). The headline 3.1e6 MJ is this, rounded.
    pub fn operations_total_exact_mj() -> f64 {
        MASS_DRIVER_LAUNCH_MJ + SURFACE_SUBTOTAL_MJ + CREW_TOTAL_MJ
    }
}

/// Who runs the base day to day.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Operator {
    /// Autonomous robot fleet. The fleet parameters are descriptive; the
    /// per-vehicle physics enters through the excavation and haul params.
    Robotic { robot_count: u32, robot_mass_kg: f64 },
    /// Human work crew; implies the human-only structures and the crew
    /// life-support category.
    HumanCrew,
}

impl Operator {
    pub fn robotic_default() -> Operator {
        Operator::Robotic {
            robot_count: 100,
            robot_mass_kg: 120.0,
        }
    }

    pub fn includes_humans(&self) -> bool {
        matches!(self, Operator::HumanCrew)
    }
}

/// One of the four study scenarios: construction method × operator mode.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    pub construction_method: ConstructionMethod,
    pub operator: Operator,
}

impl Default for Scenario {
    fn default() -> Self {
        Scenario {
            construction_method: ConstructionMethod::PrintedReinforced,
            operator: Operator::robotic_default(),
        }
    }
}

/// Every tunable of the model, bundled. `Default` is the study baseline.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    pub environment: Environment,
    pub sand: Material,
    pub steel: Material,
    pub inventory: BaseInventory,
    pub extraction: ExtractionParams,
    pub haul_raw: HaulParams,
    pub haul_water: HaulParams,
    pub excavation: ExcavationParams,
    pub mass_driver: MassDriverParams,
    pub crew: CrewProfile,
    pub sizing_profile: SizingProfile,
    /// When set, the operations breakdown reproduces the registry's
    /// reported component values instead of the formula results. Every
    /// registry-sourced figure is labelled in emitted reports.
    pub registry_mode: bool,
}

impl Default for ModelParams {
    fn default() -> Self {
        ModelParams {
            environment: Environment::default(),
            sand: Material::quartz_sand(),
            steel: Material::steel(),
            inventory: BaseInventory::default(),
            extraction: ExtractionParams::default(),
            haul_raw: HaulParams::raw_regolith_default(),
            haul_water: HaulParams::processed_water_default(),
            excavation: ExcavationParams::default(),
            mass_driver: MassDriverParams::default(),
            crew: CrewProfile::default(),
            sizing_profile: SizingProfile::Faithful,
            registry_mode: true,
        }
    }
}

pub const CATEGORY_MASS_DRIVER: &str = "mass_driver";
pub const CATEGORY_SURFACE: &str = "surface_operations";
pub const CATEGORY_CREW: &str = "crew";

impl ModelParams {
    /// Formula-faithful surface-operations energy per sol [MJ]:
    /// extraction + excavation + both haul legs.
    pub fn surface_operations_mj(&self) -> Result<f64> {
        let extraction = water_extraction_energy(&self.extraction)?;
        let excavation = excavation_energy(
            &self.excavation,
            self.extraction.water_mass_per_sol,
            &self.environment,
        )?;
        let haul_raw = haul_energy(&self.haul_raw, &self.environment)?;
        let haul_water = haul_energy(&self.haul_water, &self.environment)?;
        Ok(extraction + excavation + haul_raw + haul_water)
    }
}

/// Per-sol operations energy for a scenario. In registry mode the entries
/// are the reported component values; otherwise they are computed from the
/// formulas with the current parameters.
pub fn operations_breakdown(scenario: &Scenario, params: &ModelParams) -> Result<EnergyBreakdown> {
    let mut b = EnergyBreakdown::new();
    if params.registry_mode {
        b.push(CATEGORY_MASS_DRIVER, reported::MASS_DRIVER_LAUNCH_MJ);
        b.push(CATEGORY_SURFACE, reported::SURFACE_SUBTOTAL_MJ);
        if scenario.operator.includes_humans() {
            b.push(CATEGORY_CREW, reported::CREW_TOTAL_MJ);
        }
    } else {
        b.push(CATEGORY_MASS_DRIVER, mass_driver_energy(&params.mass_driver)?);
        b.push(CATEGORY_SURFACE, params.surface_operations_mj()?);
        if scenario.operator.includes_humans() {
            b.push(CATEGORY_CREW, crew_energy(&params.crew)?.total());
        }
    }
    Ok(b)
}

/// One cell of the construction comparison grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridCell {
    pub method: ConstructionMethod,
    /// `"robotic"` or `"human"` structure set.
    pub structure_set: String,
    pub total_mj: f64,
    pub build_time_sols: f64,
}

/// The 2×2 {method} × {structure set} construction comparison, with all
/// pairwise energy ratios. Build times share one plant, so time ratios
/// equal energy ratios.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstructionComparison {
    pub cells: Vec<GridCell>,
    /// (numerator cell, denominator cell, ratio), fixed audit order.
    pub ratios: Vec<(String, String, f64)>,
    pub shared_plant: PowerPlant,
}

impl ConstructionComparison {
    pub fn cell(&self, method: ConstructionMethod, set: &str) -> Option<&GridCell> {
        self.cells
            .iter()
            .find(|c| c.method == method && c.structure_set == set)
    }
}

/// Evaluate all four construction scenarios under one shared plant (sized
/// to deliver the reported per-sol operations total).
pub fn construction_comparison(params: &ModelParams) -> Result<ConstructionComparison> {
    let plant = PowerPlant::sized_for(
        reported::operations_total_exact_mj(),
        PlantKind::SolarThermal,
        &params.environment,
        params.sizing_profile,
    )?;
    let mut cells = Vec::new();
    for method in [
        ConstructionMethod::PrintedReinforced,
        ConstructionMethod::FrameAndBlock,
    ] {
        for include_human in [false, true] {
            let report = base_construction_energy(
                &params.inventory,
                method,
                include_human,
                &params.sand,
                &params.steel,
            )?;
            cells.push(GridCell {
                method,
                structure_set: if include_human { "human" } else { "robotic" }.into(),
                total_mj: report.total_mj,
                build_time_sols: build_time(report.total_mj, &plant, &params.environment)?,
            });
        }
    }
    let mut ratios = Vec::new();
    for i in 0..cells.len() {
        for j in 0..cells.len() {
            if i == j {
                continue;
            }
            let (a, b) = (&cells[i], &cells[j]);
            ratios.push((
                format!("{}+{}", a.method.label(), a.structure_set),
                format!("{}+{}", b.method.label(), b.structure_set),
                a.total_mj / b.total_mj,
            ));
        }
    }
    Ok(ConstructionComparison {
        cells,
        ratios,
        shared_plant: plant,
    })
}

/// How a computed quantity relates to the study's reported value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Disposition {
    /// Deviation within the stated tolerance.
    Matches { tolerance: f64 },
    /// The reported value does not follow from the study's own formulas
    /// and inputs.
    SourceInconsistent,
    /// Agreement depends on a documented interpretation choice (formula
    /// reading mode, inferred efficiency).
    ModeDependent,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReconciliationEntry {
    pub quantity: String,
    pub computed: f64,
    pub reported: f64,
    pub unit: String,
    /// |computed − reported| / |reported|; NaN-free because every reported
    /// registry value is nonzero.
    pub relative_deviation: f64,
    pub disposition: Disposition,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn entry(
    quantity: &str,
    computed: f64,
    reported_value: f64,
    unit: &str,
    disposition: Disposition,
    note: Option<&str>,
) -> ReconciliationEntry {
    ReconciliationEntry {
        quantity: quantity.into(),
        computed,
        reported: reported_value,
        unit: unit.into(),
        relative_deviation: (computed - reported_value).abs() / reported_value.abs(),
        disposition,
        note: note.map(str::to_owned),
    }
}

/// Full audit of computed values against the reported registry, plus the
/// model's standing interpretation notes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReconciliationReport {
    pub entries: Vec<ReconciliationEntry>,
    pub notes: Vec<String>,
}

impl ReconciliationReport {
    pub fn get(&self, quantity: &str) -> Option<&ReconciliationEntry> {
        self.entries.iter().find(|e| e.quantity == quantity)
    }
}

/// Run every audit in a fixed order.
pub fn reconcile(params: &ModelParams) -> Result<ReconciliationReport> {
    let env = &params.environment;
    let mut entries = Vec::new();

    let haul_raw = haul_energy(&params.haul_raw, env)?;
    entries.push(entry(
        "haul_raw_regolith",
        haul_raw,
        reported::HAUL_RAW_MJ,
        "MJ",
        Disposition::SourceInconsistent,
        Some("the haul formula with the stated inputs gives 890.4 MJ, not 864 MJ"),
    ));

    let excavation = excavation_energy(
        &params.excavation,
        params.extraction.water_mass_per_sol,
        env,
    )?;
    entries.push(entry(
        "excavation",
        excavation,
        reported::EXCAVATION_MJ,
        "MJ",
        Disposition::ModeDependent,
        Some("round-trip traverse reading; the printed bracket evaluates to under 0.1 MJ"),
    ));

    let extraction = water_extraction_energy(&params.extraction)?;
    entries.push(entry(
        "water_extraction",
        extraction,
        reported::EXTRACTION_MJ,
        "MJ",
        Disposition::ModeDependent,
        Some("latent-heat-once reading; verbatim formula multiplies latent heat by the 86 K rise"),
    ));

    let haul_water = haul_energy(&params.haul_water, env)?;
    let surface = extraction + excavation + haul_raw + haul_water;
    entries.push(entry(
        "surface_subtotal",
        reported::EXTRACTION_MJ + reported::EXCAVATION_MJ + reported::HAUL_RAW_MJ,
        reported::SURFACE_SUBTOTAL_MJ,
        "MJ",
        Disposition::SourceInconsistent,
        Some("reported subtotal exceeds the sum of its own reported components (~4.43e5 MJ)"),
    ));
    entries.push(entry(
        "surface_subtotal_formula",
        surface,
        reported::SURFACE_SUBTOTAL_MJ,
        "MJ",
        Disposition::ModeDependent,
        Some("formula-faithful component sum under the default interpretation modes"),
    ));

    let ideal = MassDriverParams {
        launcher_efficiency: 1.0,
        ..params.mass_driver.clone()
    };
    entries.push(entry(
        "mass_driver_launch_ideal",
        mass_driver_energy(&ideal)?,
        reported::MASS_DRIVER_LAUNCH_MJ,
        "MJ",
        Disposition::ModeDependent,
        Some("pure kinetic energy at unit efficiency; reported total implies extra losses"),
    ));
    entries.push(entry(
        "mass_driver_launch",
        mass_driver_energy(&params.mass_driver)?,
        reported::MASS_DRIVER_LAUNCH_MJ,
        "MJ",
        Disposition::Matches { tolerance: 0.01 },
        Some("launcher efficiency 0.55 is an inference that reconciles the reported total"),
    ));

    entries.push(entry(
        "drag_adjusted_velocity",
        drag_adjusted_velocity(&params.mass_driver)?,
        reported::DRAG_ADJUSTED_VELOCITY_M_S,
        "m/s",
        Disposition::Matches { tolerance: 0.001 },
        None,
    ));

    let crew = crew_energy(&params.crew)?;
    entries.push(entry(
        "crew_total",
        crew.total(),
        reported::CREW_TOTAL_MJ,
        "MJ",
        Disposition::Matches { tolerance: 0.001 },
        None,
    ));

    let registry_total = reported::operations_total_exact_mj();
    entries.push(entry(
        "operations_total_registry",
        registry_total,
        reported::OPERATIONS_TOTAL_MJ,
        "MJ",
        Disposition::Matches { tolerance: 0.01 },
        Some("exact component sum 3,076,113 MJ; the headline 3.1e6 MJ is rounded"),
    ));
    let formula_total = mass_driver_energy(&params.mass_driver)? + surface + crew.total();
    entries.push(entry(
        "operations_total_formula",
        formula_total,
        reported::OPERATIONS_TOTAL_MJ,
        "MJ",
        Disposition::ModeDependent,
        Some("formula-faithful total under the default interpretation modes"),
    ));

    entries.push(entry(
        "mass_driver_share",
        100.0 * reported::MASS_DRIVER_LAUNCH_MJ / registry_total,
        reported::MASS_DRIVER_SHARE_PCT,
        "%",
        Disposition::Matches { tolerance: 0.002 },
        Some("the abstract quotes 81.2% where the body quotes 81.3%; neither is privileged"),
    ));
    entries.push(entry(
        "mass_driver_share_vs_abstract",
        100.0 * reported::MASS_DRIVER_LAUNCH_MJ / registry_total,
        reported::MASS_DRIVER_SHARE_ABSTRACT_PCT,
        "%",
        Disposition::Matches { tolerance: 0.002 },
        None,
    ));
    entries.push(entry(
        "surface_share",
        100.0 * reported::SURFACE_SUBTOTAL_MJ / registry_total,
        reported::SURFACE_SHARE_PCT,
        "%",
        Disposition::Matches { tolerance: 0.002 },
        None,
    ));
    entries.push(entry(
        "crew_share",
        100.0 * reported::CREW_TOTAL_MJ / registry_total,
        reported::CREW_SHARE_PCT,
        "%",
        Disposition::Matches { tolerance: 0.005 },
        None,
    ));

    let thermal_km2 =
        required_area(registry_total, PlantKind::SolarThermal, env, params.sizing_profile)? / 1e6;
    entries.push(entry(
        "solar_thermal_area",
        thermal_km2,
        reported::SOLAR_THERMAL_AREA_KM2,
        "km²",
        Disposition::Matches { tolerance: 0.01 },
        Some("reproduced with the exact component sum and no thermal conversion loss"),
    ));
    let pv_km2 =
        required_area(registry_total, PlantKind::Photovoltaic, env, params.sizing_profile)? / 1e6;
    entries.push(entry(
        "pv_area",
        pv_km2,
        reported::PV_AREA_KM2,
        "km²",
        Disposition::Matches { tolerance: 0.01 },
        None,
    ));

    let grid = construction_comparison(params)?;
    let human_frame = grid
        .cell(ConstructionMethod::FrameAndBlock, "human")
        .expect("grid cell")
        .clone();
    let robotic_printed = grid
        .cell(ConstructionMethod::PrintedReinforced, "robotic")
        .expect("grid cell")
        .clone();
    let fold = human_frame.total_mj / robotic_printed.total_mj;
    entries.push(entry(
        "construction_energy_fold",
        fold,
        reported::CONSTRUCTION_FOLD,
        "×",
        Disposition::SourceInconsistent,
        Some("figure claim carries no numeric labels; the catalog formulas give this ratio"),
    ));
    entries.push(entry(
        "build_time_fold",
        human_frame.build_time_sols / robotic_printed.build_time_sols,
        reported::BUILD_TIME_FOLD,
        "×",
        Disposition::SourceInconsistent,
        Some("identical to the energy fold under a shared plant"),
    ));

    let notes = standing_notes(params);
    Ok(ReconciliationReport { entries, notes })
}

/// Interpretation and data-quality notes that hold regardless of the
/// parameter values in play.
fn standing_notes(params: &ModelParams) -> Vec<String> {
    let mut notes = vec![
        "landing-pad blast walls enter the volume formula as three wall terms (2LHD + WHD), \
         as printed; an open-side pad is a plausible physical reading"
            .to_string(),
        "steel embodied heat 25.23 MJ/kg is used verbatim; it is not reproducible from the \
         quoted magnetite/hematite molar heats"
            .to_string(),
        "crew water ledger 10,800 MJ/sol implies 0.1 kWh/L at 300 L/person; the stated \
         1 kWh/L would give 108,000 MJ. The ledger value wins: it reproduces the 25,113 MJ total"
            .to_string(),
        "food production energies are read as MJ/kg (the table header says kJ/kg); the only \
         reading consistent with the 3,354 MJ/sol food line"
            .to_string(),
        "unhoused constants: water heat capacity 4.186 kJ/(kg·K) and latent heat 2257 kJ/kg \
         are standard water properties, not given in the source"
            .to_string(),
    ];
    notes.extend(params.inventory.unused_parameters());
    notes
}
