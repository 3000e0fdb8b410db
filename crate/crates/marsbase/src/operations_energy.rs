//! Per-sol operations energy: water extraction, haulage, excavation,
//! mass-driver export and crew life support.
//!
//! Two of the source formulas ship in dual modes. The extraction formula
//! as printed multiplies the water's latent heat by the temperature rise,
//! which is dimensionally inconsistent; `LatentOnce` applies the latent
//! heat once, outside the temperature bracket, and is the default. The
//! excavation formula's traverse bracket is likewise preserved verbatim in
//! `AsWritten` while `RoundTrip` reads it as a there-and-back traverse
//! length. Neither reading is silently corrected; the reconciliation
//! report shows both.

use serde::{Deserialize, Serialize};

use crate::base_catalog::Environment;
use crate::breakdown::EnergyBreakdown;
use crate::error::{ModelError, Result};

const J_PER_MJ: f64 = 1e6;
const J_PER_KJ: f64 = 1e3;
const MJ_PER_KWH: f64 = 3.6;

/// Regolith hauled per kilogram of recovered water (100% / 5% by mass).
pub const REGOLITH_PER_WATER: f64 = 20.0;

fn check(name: &str, v: f64, min_exclusive: bool, min: f64) -> Result<()> {
    let bad = !v.is_finite() || if min_exclusive { v <= min } else { v < min };
    if bad {
        return Err(ModelError::InvalidParameter {
            name: name.into(),
            reason: format!("out of range value {v}"),
        });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Water extraction

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtractionMode {
    /// Evaluate the printed formula verbatim, latent heat inside the
    /// temperature-rise bracket.
    AsWritten,
    /// Apply the water's latent heat once, outside the bracket.
    #[default]
    LatentOnce,
}

/// Parameters for baking water out of hydrate-bearing regolith.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtractionParams {
    /// Water recovered per sol [kg].
    pub water_mass_per_sol: f64,
    /// Water share of raw regolith [% by mass].
    pub water_fraction: f64,
    /// Hydrate (MgCl₂·6H₂O) share of raw regolith [%].
    pub hydrate_fraction: f64,
    /// Dry residue left after dehydrating the hydrate [%].
    pub residue_fraction: f64,
    /// Quartz sand share of raw regolith [%].
    pub sand_fraction: f64,
    /// Heat of dehydration [kJ/kg of hydrate].
    pub dehydration_heat: f64,
    /// Hydrate heat capacity [kJ/(kg·K)].
    pub hydrate_heat_capacity: f64,
    /// Sand heat capacity [kJ/(kg·K)].
    pub sand_heat_capacity: f64,
    /// Bake temperature [°C].
    pub bake_temperature: f64,
    /// Ambient temperature [°C].
    pub ambient_temperature: f64,
    /// Water heat capacity [kJ/(kg·K)]. Not stated in the source study;
    /// standard water property, listed in the unhoused-constants report.
    pub water_heat_capacity: f64,
    /// Water latent heat of vaporization [kJ/kg]. Also unhoused.
    pub water_latent_heat: f64,
    pub mode: ExtractionMode,
}

impl Default for ExtractionParams {
    fn default() -> Self {
        ExtractionParams {
            water_mass_per_sol: 100_000.0,
            water_fraction: 5.0,
            hydrate_fraction: 9.4,
            residue_fraction: 4.42,
            sand_fraction: 90.6,
            dehydration_heat: 138.0,
            hydrate_heat_capacity: 0.756,
            sand_heat_capacity: 0.830,
            bake_temperature: 111.0,
            ambient_temperature: 25.0,
            water_heat_capacity: 4.186,
            water_latent_heat: 2257.0,
            mode: ExtractionMode::default(),
        }
    }
}

impl ExtractionParams {
    pub fn validate(&self) -> Result<()> {
        check("extraction.water_mass_per_sol", self.water_mass_per_sol, false, 0.0)?;
        check("extraction.water_fraction", self.water_fraction, true, 0.0)?;
        check("extraction.hydrate_fraction", self.hydrate_fraction, true, 0.0)?;
        check("extraction.residue_fraction", self.residue_fraction, true, 0.0)?;
        check("extraction.sand_fraction", self.sand_fraction, true, 0.0)?;
        check("extraction.dehydration_heat", self.dehydration_heat, false, 0.0)?;
        check("extraction.hydrate_heat_capacity", self.hydrate_heat_capacity, true, 0.0)?;
        check("extraction.sand_heat_capacity", self.sand_heat_capacity, true, 0.0)?;
        check("extraction.water_heat_capacity", self.water_heat_capacity, true, 0.0)?;
        check("extraction.water_latent_heat", self.water_latent_heat, false, 0.0)?;
        if self.bake_temperature <= self.ambient_temperature {
            return Err(ModelError::InvalidParameter {
                name: "extraction.bake_temperature".into(),
                reason: format!(
                    "bake temperature {} must exceed ambient {}",
                    self.bake_temperature, self.ambient_temperature
                ),
            });
        }
        // Dehydrating the hydrate must account for its water and residue.
        let gap = (self.water_fraction + self.residue_fraction - self.hydrate_fraction).abs();
        if gap > 0.01 * self.hydrate_fraction {
            return Err(ModelError::InvalidParameter {
                name: "extraction.residue_fraction".into(),
                reason: format!(
                    "water {} + residue {} inconsistent with hydrate {}",
                    self.water_fraction, self.residue_fraction, self.hydrate_fraction
                ),
            });
        }
        Ok(())
    }
}

/// Heat to recover `water_mass_per_sol` of water from regolith [MJ/sol].
pub fn water_extraction_energy(p: &ExtractionParams) -> Result<f64> {
    p.validate()?;
    let m = p.water_mass_per_sol;
    let delta_t = p.bake_temperature - p.ambient_temperature;
    let hydrate_per_water = p.hydrate_fraction / p.water_fraction;
    let residue_per_water = p.residue_fraction / p.water_fraction;
    let sand_per_water = p.sand_fraction / p.water_fraction;

    let dehydrate_kj = p.dehydration_heat * m * hydrate_per_water;
    let sensible_kj = 2.0 * p.water_heat_capacity * m
        + p.hydrate_heat_capacity * residue_per_water * m
        + p.sand_heat_capacity * sand_per_water * m;
    let latent_kj = p.water_latent_heat * m;

    let total_kj = match p.mode {
        ExtractionMode::AsWritten => dehydrate_kj + delta_t * (sensible_kj + latent_kj),
        ExtractionMode::LatentOnce => dehydrate_kj + delta_t * sensible_kj + latent_kj,
    };
    Ok(total_kj * J_PER_KJ / J_PER_MJ)
}

// ---------------------------------------------------------------------------
// Haulage

/// Parameters for hauling a payload over the base road network.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HaulParams {
    /// Payload mass the trip is accounted against [kg].
    pub payload: f64,
    /// One-way haul distance [m].
    pub distance: f64,
    /// Rolling friction coefficient η.
    pub friction_coeff: f64,
    /// Vehicle movement (path inefficiency) ratio χ.
    pub movement_ratio: f64,
    /// Hauled-mass multiplier: 20 (= 100/5) when moving raw regolith
    /// accounted per kilogram of contained water, 1 for finished water.
    pub mass_multiplier: f64,
}

impl HaulParams {
    /// Raw regolith from the open pit to the refinery.
    pub fn raw_regolith_default() -> Self {
        HaulParams {
            payload: 100_000.0,
            distance: 2000.0,
            friction_coeff: 0.05,
            movement_ratio: 1.2,
            mass_multiplier: REGOLITH_PER_WATER,
        }
    }

    /// Processed water from the refinery to the mass driver.
    pub fn processed_water_default() -> Self {
        HaulParams {
            payload: 100_000.0,
            distance: 1000.0,
            friction_coeff: 0.01,
            movement_ratio: 1.0,
            mass_multiplier: 1.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        check("haul.payload", self.payload, false, 0.0)?;
        check("haul.distance", self.distance, false, 0.0)?;
        check("haul.friction_coeff", self.friction_coeff, true, 0.0)?;
        if self.friction_coeff > 1.0 {
            return Err(ModelError::InvalidParameter {
                name: "haul.friction_coeff".into(),
                reason: format!("must not exceed 1, got {}", self.friction_coeff),
            });
        }
        check("haul.movement_ratio", self.movement_ratio, true, 0.0)?;
        check("haul.mass_multiplier", self.mass_multiplier, true, 0.0)?;
        Ok(())
    }
}

/// Friction work to haul the payload [MJ]: multiplier·m·g·η·d·χ.
pub fn haul_energy(p: &HaulParams, env: &Environment) -> Result<f64> {
    p.validate()?;
    env.validate()?;
    Ok(p.mass_multiplier
        * p.payload
        * env.gravity
        * p.friction_coeff
        * p.distance
        * p.movement_ratio
        / J_PER_MJ)
}

// ---------------------------------------------------------------------------
// Excavation

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExcavationMode {
    /// Evaluate the printed traverse bracket verbatim.
    AsWritten,
    /// Traverse length = excavated volume over robot footprint, doubled
    /// for picking up and returning.
    #[default]
    RoundTrip,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExcavationParams {
    /// Force to dig into the regolith [N].
    pub dig_force: f64,
    /// Excavator footprint [m²].
    pub robot_footprint: f64,
    /// Regolith bulk density [kg/m³].
    pub regolith_density: f64,
    /// Friction coefficient η for rough-terrain movement.
    pub friction_coeff: f64,
    /// Vehicle movement ratio χ.
    pub movement_ratio: f64,
    /// Multiplier for picking up and returning.
    pub roundtrip_factor: f64,
    pub mode: ExcavationMode,
}

impl Default for ExcavationParams {
    fn default() -> Self {
        ExcavationParams {
            dig_force: 3000.0,
            robot_footprint: 0.42,
            regolith_density: 1500.0,
            friction_coeff: 0.1,
            movement_ratio: 1.2,
            roundtrip_factor: 2.0,
            mode: ExcavationMode::default(),
        }
    }
}

impl ExcavationParams {
    pub fn validate(&self) -> Result<()> {
        check("excavation.dig_force", self.dig_force, true, 0.0)?;
        check("excavation.robot_footprint", self.robot_footprint, true, 0.0)?;
        check("excavation.regolith_density", self.regolith_density, true, 0.0)?;
        check("excavation.friction_coeff", self.friction_coeff, true, 0.0)?;
        check("excavation.movement_ratio", self.movement_ratio, true, 0.0)?;
        check("excavation.roundtrip_factor", self.roundtrip_factor, true, 0.0)?;
        Ok(())
    }
}

/// Energy to excavate the regolith holding `water_mass` of water [MJ/sol].
pub fn excavation_energy(p: &ExcavationParams, water_mass: f64, env: &Environment) -> Result<f64> {
    p.validate()?;
    env.validate()?;
    check("excavation.water_mass", water_mass, false, 0.0)?;
    if water_mass == 0.0 {
        return Ok(0.0);
    }
    let regolith_mass = REGOLITH_PER_WATER * water_mass;
    let drawbar_force_n =
        p.movement_ratio * p.dig_force + regolith_mass * env.gravity * p.friction_coeff;
    let traverse_m = match p.mode {
        ExcavationMode::RoundTrip => {
            let excavated_volume = regolith_mass / p.regolith_density;
            p.roundtrip_factor * excavated_volume / p.robot_footprint
        }
        ExcavationMode::AsWritten => {
            // Printed bracket verbatim: (100/5) / (m / (ρ·A)).
            REGOLITH_PER_WATER / (water_mass / (p.regolith_density * p.robot_footprint))
        }
    };
    Ok(drawbar_force_n * traverse_m / J_PER_MJ)
}

// ---------------------------------------------------------------------------
// Mass driver

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MassDriverParams {
    /// Exported water mass per launch [kg].
    pub payload_mass: f64,
    /// Container mass [kg].
    pub container_mass: f64,
    /// Target (escape) speed [m/s].
    pub target_speed: f64,
    /// Distance over which atmospheric drag acts [m].
    pub drag_distance: f64,
    /// Drag coefficient.
    pub drag_coeff: f64,
    /// Container frontal area [m²].
    pub frontal_area: f64,
    /// Air density along the drag path [kg/m³].
    pub air_density: f64,
    /// Launcher electrical-to-kinetic efficiency κ ∈ (0, 1]. κ = 1 gives
    /// the pure kinetic-energy figure; the 0.55 default reconciles the
    /// reported launch total and is an inference, not measured data.
    pub launcher_efficiency: f64,
}

impl Default for MassDriverParams {
    fn default() -> Self {
        MassDriverParams {
            payload_mass: 100_000.0,
            container_mass: 10_000.0,
            target_speed: 5000.0,
            drag_distance: 40_000.0,
            drag_coeff: 0.01,
            frontal_area: 7.06,
            air_density: 0.02,
            launcher_efficiency: 0.55,
        }
    }
}

impl MassDriverParams {
    pub fn validate(&self) -> Result<()> {
        check("mass_driver.payload_mass", self.payload_mass, false, 0.0)?;
        check("mass_driver.container_mass", self.container_mass, false, 0.0)?;
        check("mass_driver.target_speed", self.target_speed, true, 0.0)?;
        check("mass_driver.drag_distance", self.drag_distance, false, 0.0)?;
        check("mass_driver.drag_coeff", self.drag_coeff, false, 0.0)?;
        check("mass_driver.frontal_area", self.frontal_area, false, 0.0)?;
        check("mass_driver.air_density", self.air_density, false, 0.0)?;
        if !(self.launcher_efficiency > 0.0 && self.launcher_efficiency <= 1.0) {
            return Err(ModelError::InvalidParameter {
                name: "mass_driver.launcher_efficiency".into(),
                reason: format!("must lie in (0, 1], got {}", self.launcher_efficiency),
            });
        }
        Ok(())
    }

    fn total_mass(&self) -> f64 {
        self.payload_mass + self.container_mass
    }
}

/// Launch speed adjusted upward to pre-pay the drag losses [m/s]:
/// v* = √(v² + ρ·C_d·A·v²·d / (m + M)).
pub fn drag_adjusted_velocity(p: &MassDriverParams) -> Result<f64> {
    p.validate()?;
    if p.total_mass() <= 0.0 {
        return Err(ModelError::InvalidParameter {
            name: "mass_driver.total_mass".into(),
            reason: "payload plus container mass must be strictly positive".into(),
        });
    }
    let v2 = p.target_speed * p.target_speed;
    let drag_term = p.air_density * p.drag_coeff * p.frontal_area * v2 * p.drag_distance
        / p.total_mass();
    Ok((v2 + drag_term).sqrt())
}

/// Launcher input energy per launch [MJ]: ½(m+M)·v*² / κ.
pub fn mass_driver_energy(p: &MassDriverParams) -> Result<f64> {
    p.validate()?;
    if p.total_mass() == 0.0 {
        return Ok(0.0);
    }
    let v_star = drag_adjusted_velocity(p)?;
    Ok(0.5 * p.total_mass() * v_star * v_star / p.launcher_efficiency / J_PER_MJ)
}

// ---------------------------------------------------------------------------
// Crew life support

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FoodItem {
    pub name: String,
    /// Energy to produce one kilogram [MJ/kg].
    pub production_energy_mj_per_kg: f64,
    /// Daily consumption per person [kg/sol].
    pub kg_per_sol: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrewProfile {
    pub headcount: f64,
    /// Oxygen breathed per person [mol/sol].
    pub o2_moles_per_person: f64,
    /// Energy to produce oxygen from the atmosphere [kJ/mol].
    pub o2_energy_kj_per_mol: f64,
    /// Personal electricity use [kWh/sol per person].
    pub electricity_kwh_per_person: f64,
    /// Recycled water throughput [L/sol per person]. Ledger data; the
    /// energy charge comes from `water_energy_total_mj`.
    pub water_l_per_person: f64,
    /// Water-recycling energy for the reference 100-person crew [MJ/sol].
    pub water_energy_total_mj: f64,
    pub food_basket: Vec<FoodItem>,
    /// Multiplier covering food wasted in production and storage.
    pub food_waste_multiplier: f64,
}

/// Crew size the water ledger value is quoted for.
const WATER_LEDGER_HEADCOUNT: f64 = 100.0;

impl Default for CrewProfile {
    fn default() -> Self {
        let item = |name: &str, e: f64, kg: f64| FoodItem {
            name: name.into(),
            production_energy_mj_per_kg: e,
            kg_per_sol: kg,
        };
        CrewProfile {
            headcount: 100.0,
            o2_moles_per_person: 98.2,
            o2_energy_kj_per_mol: 566.0,
            electricity_kwh_per_person: 15.0,
            water_l_per_person: 300.0,
            water_energy_total_mj: 10_800.0,
            food_basket: vec![
                item("corn", 1.1, 0.306),
                item("milk", 2.2, 0.18),
                item("fruits_and_vegetables", 4.4, 0.864),
                item("eggs", 8.36, 0.09),
                item("chicken", 8.8, 0.09),
                item("cheese", 17.6, 0.09),
                item("goat", 30.8, 0.09),
                item("beef", 70.4, 0.09),
            ],
            food_waste_multiplier: 2.0,
        }
    }
}

impl CrewProfile {
    pub fn validate(&self) -> Result<()> {
        check("crew.headcount", self.headcount, false, 0.0)?;
        check("crew.o2_moles_per_person", self.o2_moles_per_person, false, 0.0)?;
        check("crew.o2_energy_kj_per_mol", self.o2_energy_kj_per_mol, false, 0.0)?;
        check(
            "crew.electricity_kwh_per_person",
            self.electricity_kwh_per_person,
            false,
            0.0,
        )?;
        check("crew.water_l_per_person", self.water_l_per_person, false, 0.0)?;
        check("crew.water_energy_total_mj", self.water_energy_total_mj, false, 0.0)?;
        check("crew.food_waste_multiplier", self.food_waste_multiplier, false, 0.0)?;
        for f in &self.food_basket {
            check(
                &format!("crew.food.{}.production_energy", f.name),
                f.production_energy_mj_per_kg,
                false,
                0.0,
            )?;
            check(&format!("crew.food.{}.kg_per_sol", f.name), f.kg_per_sol, false, 0.0)?;
        }
        Ok(())
    }

    /// Production energy of one person's daily basket, before waste [MJ].
    pub fn basket_energy_per_person(&self) -> f64 {
        self.food_basket
            .iter()
            .map(|f| f.production_energy_mj_per_kg * f.kg_per_sol)
            .sum()
    }

    /// Mass of one person's daily basket [kg].
    pub fn basket_mass_per_person(&self) -> f64 {
        self.food_basket.iter().map(|f| f.kg_per_sol).sum()
    }
}

/// Per-sol life-support breakdown: oxygen, electricity, water, food [MJ].
pub fn crew_energy(c: &CrewProfile) -> Result<EnergyBreakdown> {
    c.validate()?;
    let oxygen =
        c.headcount * c.o2_moles_per_person * c.o2_energy_kj_per_mol * J_PER_KJ / J_PER_MJ;
    let electricity = c.headcount * c.electricity_kwh_per_person * MJ_PER_KWH;
    let water = c.water_energy_total_mj * c.headcount / WATER_LEDGER_HEADCOUNT;
    let food = c.headcount * c.food_waste_multiplier * c.basket_energy_per_person();
    let mut b = EnergyBreakdown::new();
    b.push("oxygen", oxygen);
    b.push("electricity", electricity);
    b.push("water", water);
    b.push("food", food);
    Ok(b)
}
