//! Energy to build each structure and the whole base under the two
//! construction methods, plus build time against a given power plant.
//!
//! Internally everything is computed in joules; public values are MJ.

use serde::{Deserialize, Serialize};

use crate::base_catalog::{structure_volume, BaseInventory, Environment, Material, StructureSpec};
use crate::error::{ModelError, Result};
use crate::power_sizing::{daily_harvest, PowerPlant};

const J_PER_MJ: f64 = 1e6;
const J_PER_KJ: f64 = 1e3;

/// How the base gets built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstructionMethod {
    /// Sintered silica printed in place with steel rebar reinforcement.
    PrintedReinforced,
    /// Steel frame filled with partially melted sand blocks.
    FrameAndBlock,
}

impl ConstructionMethod {
    pub fn label(self) -> &'static str {
        match self {
            ConstructionMethod::PrintedReinforced => "printed_reinforced",
            ConstructionMethod::FrameAndBlock => "frame_and_block",
        }
    }
}

/// Per-structure construction energies with an exact-sum total [MJ].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstructionEnergyReport {
    pub method: ConstructionMethod,
    pub include_human_only: bool,
    /// (structure name, total MJ across its quantity), catalog order.
    pub per_structure: Vec<(String, f64)>,
    pub total_mj: f64,
}

/// Energy to heat, melt and optionally transport `volume` of a sinterable
/// material [MJ]. With zero transport distance this is the in-place
/// sintering energy.
pub fn sinter_energy(
    material: &Material,
    volume_m3: f64,
    transport_distance_m: f64,
    gravity: f64,
) -> Result<f64> {
    material.validate()?;
    if !volume_m3.is_finite() || volume_m3 < 0.0 {
        return Err(ModelError::InvalidParameter {
            name: "sinter.volume".into(),
            reason: format!("must be finite and non-negative, got {volume_m3}"),
        });
    }
    if !transport_distance_m.is_finite() || transport_distance_m < 0.0 {
        return Err(ModelError::InvalidParameter {
            name: "sinter.transport_distance".into(),
            reason: format!("must be finite and non-negative, got {transport_distance_m}"),
        });
    }
    let per_kg_j = material.process_heat_per_kg() * J_PER_KJ + gravity * transport_distance_m;
    Ok(material.density * volume_m3 * per_kg_j / J_PER_MJ)
}

/// Energy to print one structure as reinforced sintered silica [MJ]:
/// a (1−S) sand share plus an S steel share of its material volume.
pub fn printed_reinforced_energy(
    spec: &StructureSpec,
    sand: &Material,
    steel: &Material,
) -> Result<f64> {
    let volume = structure_volume(spec)?;
    let s = spec.steel_ratio;
    let sand_j = sand.density * (1.0 - s) * volume * sand.process_heat_per_kg() * J_PER_KJ;
    let steel_j = s * volume * steel.density * steel.process_heat_per_kg() * J_PER_KJ;
    Ok((sand_j + steel_j) / J_PER_MJ)
}

/// Energy to build one structure as a steel frame with sand blocks [MJ]:
/// only the μ block fraction of the printed volume is processed, in both
/// the steel and the sand term.
pub fn frame_and_block_energy(
    spec: &StructureSpec,
    sand: &Material,
    steel: &Material,
) -> Result<f64> {
    let volume = structure_volume(spec)?;
    let mu = spec.block_fraction;
    let steel_j = steel.density * volume * mu * steel.process_heat_per_kg() * J_PER_KJ;
    let sand_j = sand.density * volume * mu * sand.process_heat_per_kg() * J_PER_KJ;
    Ok((steel_j + sand_j) / J_PER_MJ)
}

/// Construction energy for the whole inventory under one method.
/// Human-only rows enter only when `include_human_only` is set; the total
/// is the exact sum of the per-structure entries in catalog order.
pub fn base_construction_energy(
    inventory: &BaseInventory,
    method: ConstructionMethod,
    include_human_only: bool,
    sand: &Material,
    steel: &Material,
) -> Result<ConstructionEnergyReport> {
    inventory.validate()?;
    let mut per_structure = Vec::new();
    for spec in inventory.for_mode(include_human_only) {
        let unit = match method {
            ConstructionMethod::PrintedReinforced => printed_reinforced_energy(spec, sand, steel)?,
            ConstructionMethod::FrameAndBlock => frame_and_block_energy(spec, sand, steel)?,
        };
        per_structure.push((spec.name.clone(), f64::from(spec.quantity) * unit));
    }
    let total_mj = per_structure.iter().map(|(_, e)| e).sum();
    Ok(ConstructionEnergyReport {
        method,
        include_human_only,
        per_structure,
        total_mj,
    })
}

/// Sols to build, given the plant's daily harvest.
pub fn build_time(construction_total_mj: f64, plant: &PowerPlant, env: &Environment) -> Result<f64> {
    let harvest = daily_harvest(plant, env)?;
    if harvest <= 0.0 {
        return Err(ModelError::InvalidParameter {
            name: "build_time.plant".into(),
            reason: "plant daily harvest must be strictly positive".into(),
        });
    }
    Ok(construction_total_mj / harvest)
}
