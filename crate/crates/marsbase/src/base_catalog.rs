//! Environment constants, material records, the base structure catalog and
//! the volume-of-construction-material formulas.
//!
//! All types here are plain immutable values; every operation is a pure
//! function, so callers may evaluate structures in parallel freely.

use serde::{Deserialize, Serialize};

use crate::error::{ModelError, Result};

/// Planetary environment the base operates in. Defaults are the Mars
/// baseline used throughout the model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Environment {
    /// Surface gravity [m/s²].
    pub gravity: f64,
    /// Average solar insolation at the surface [W/m²].
    pub insolation: f64,
    /// Usable sunlight hours per sol [h].
    pub sunlight_hours_per_sol: f64,
    /// Length of one sol [h].
    pub sol_length: f64,
    /// Atmospheric density along the launcher track [kg/m³].
    pub atmosphere_density_at_driver: f64,
}

/// Earth-surface insolation; used as a sanity ceiling for any planet's value.
pub const EARTH_INSOLATION_W_M2: f64 = 1350.0;

impl Default for Environment {
    fn default() -> Self {
        Environment {
            gravity: 3.71,
            insolation: 540.0,
            sunlight_hours_per_sol: 7.0,
            sol_length: 24.6,
            atmosphere_density_at_driver: 0.02,
        }
    }
}

impl Environment {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("gravity", self.gravity),
            ("insolation", self.insolation),
            ("sunlight_hours_per_sol", self.sunlight_hours_per_sol),
            ("sol_length", self.sol_length),
            (
                "atmosphere_density_at_driver",
                self.atmosphere_density_at_driver,
            ),
        ];
        for (name, v) in positive {
            if !v.is_finite() || v <= 0.0 {
                return Err(ModelError::InvalidParameter {
                    name: format!("environment.{name}"),
                    reason: format!("must be finite and strictly positive, got {v}"),
                });
            }
        }
        if self.insolation > EARTH_INSOLATION_W_M2 {
            return Err(ModelError::InvalidParameter {
                name: "environment.insolation".into(),
                reason: format!(
                    "exceeds Earth reference ceiling of {EARTH_INSOLATION_W_M2} W/m²"
                ),
            });
        }
        Ok(())
    }

    /// Seconds of harvestable sunlight per sol.
    pub fn sunlight_seconds(&self) -> f64 {
        self.sunlight_hours_per_sol * 3600.0
    }
}

/// Thermophysical record for a processable material.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Material {
    pub name: String,
    /// Bulk density [kg/m³].
    pub density: f64,
    /// Specific heat capacity [kJ/(kg·K)].
    pub heat_capacity: f64,
    /// Temperature rise needed to process [K].
    pub delta_t: f64,
    /// Latent heat of melting, or embodied production heat [kJ/kg].
    pub latent_heat: f64,
}

impl Material {
    pub fn validate(&self) -> Result<()> {
        let checks = [
            ("density", self.density, true),
            ("heat_capacity", self.heat_capacity, true),
            ("delta_t", self.delta_t, false),
            ("latent_heat", self.latent_heat, false),
        ];
        for (field, v, strict) in checks {
            let bad = !v.is_finite() || if strict { v <= 0.0 } else { v < 0.0 };
            if bad {
                return Err(ModelError::InvalidParameter {
                    name: format!("material.{}.{field}", self.name),
                    reason: format!("out of range value {v}"),
                });
            }
        }
        Ok(())
    }

    /// Heat to bring one kilogram to process temperature and melt it
    /// (or, for steel, produce it from ore) [kJ/kg].
    pub fn process_heat_per_kg(&self) -> f64 {
        self.heat_capacity * self.delta_t + self.latent_heat
    }

    /// Quartz sand sintered into structural silica.
    pub fn quartz_sand() -> Material {
        Material {
            name: "quartz_sand".into(),
            density: 1500.0,
            heat_capacity: 0.830,
            delta_t: 1973.0,
            latent_heat: 156.0,
        }
    }

    /// Steel smelted from iron-rich regolith; latent heat here is the
    /// embodied production heat per kilogram.
    pub fn steel() -> Material {
        Material {
            name: "steel".into(),
            density: 7750.0,
            heat_capacity: 0.510,
            delta_t: 1640.0,
            latent_heat: 25_230.0,
        }
    }
}

/// Geometry of a structure's construction-material envelope. Dimensions in
/// metres; each variant maps to one closed-form volume expression.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Geometry {
    /// Flat rectangular slab (roads, power pads).
    Slab { length: f64, width: f64, depth: f64 },
    /// Hemispherical dome shell on a circular base slab.
    DomeShell {
        outer_radius: f64,
        inner_radius: f64,
        base_depth: f64,
    },
    /// Cylindrical tank: circular floor pair plus wall ring.
    Tank {
        radius: f64,
        wall_thickness: f64,
        wall_height: f64,
    },
    /// Landing pad with blast walls on three sides.
    PadWithWalls {
        length: f64,
        width: f64,
        depth: f64,
        wall_height: f64,
    },
    /// Tapered pyramidal tower.
    Tower {
        height: f64,
        base_length: f64,
        top_length: f64,
    },
    /// Paired launcher tubes on regularly spaced posts. `slope_deg` is
    /// catalog data with no volume contribution; it is surfaced by the
    /// unused-parameter report.
    MassDriverTube {
        inner_radius: f64,
        wall_thickness: f64,
        length: f64,
        post_height: f64,
        post_width: f64,
        post_spacing: f64,
        slope_deg: f64,
    },
    /// Pressurized annular walkway tube.
    WalkwayTube {
        outer_radius: f64,
        inner_radius: f64,
        length: f64,
    },
}

impl Geometry {
    /// Dimension names accepted by catalog overrides for this geometry.
    pub fn dim_names(&self) -> &'static [&'static str] {
        match self {
            Geometry::Slab { .. } => &["length", "width", "depth"],
            Geometry::DomeShell { .. } => &["outer_radius", "inner_radius", "base_depth"],
            Geometry::Tank { .. } => &["radius", "wall_thickness", "wall_height"],
            Geometry::PadWithWalls { .. } => &["length", "width", "depth", "wall_height"],
            Geometry::Tower { .. } => &["height", "base_length", "top_length"],
            Geometry::MassDriverTube { .. } => &[
                "inner_radius",
                "wall_thickness",
                "length",
                "post_height",
                "post_width",
                "post_spacing",
                "slope_deg",
            ],
            Geometry::WalkwayTube { .. } => &["outer_radius", "inner_radius", "length"],
        }
    }

    /// Set one named dimension. Unknown names for the geometry are an error.
    pub fn set_dim(&mut self, structure: &str, name: &str, value: f64) -> Result<()> {
        let slot: Option<&mut f64> = match self {
            Geometry::Slab {
                length,
                width,
                depth,
            } => match name {
                "length" => Some(length),
                "width" => Some(width),
                "depth" => Some(depth),
                _ => None,
            },
            Geometry::DomeShell {
                outer_radius,
                inner_radius,
                base_depth,
            } => match name {
                "outer_radius" => Some(outer_radius),
                "inner_radius" => Some(inner_radius),
                "base_depth" => Some(base_depth),
                _ => None,
            },
            Geometry::Tank {
                radius,
                wall_thickness,
                wall_height,
            } => match name {
                "radius" => Some(radius),
                "wall_thickness" => Some(wall_thickness),
                "wall_height" => Some(wall_height),
                _ => None,
            },
            Geometry::PadWithWalls {
                length,
                width,
                depth,
                wall_height,
            } => match name {
                "length" => Some(length),
                "width" => Some(width),
                "depth" => Some(depth),
                "wall_height" => Some(wall_height),
                _ => None,
            },
            Geometry::Tower {
                height,
                base_length,
                top_length,
            } => match name {
                "height" => Some(height),
                "base_length" => Some(base_length),
                "top_length" => Some(top_length),
                _ => None,
            },
            Geometry::MassDriverTube {
                inner_radius,
                wall_thickness,
                length,
                post_height,
                post_width,
                post_spacing,
                slope_deg,
            } => match name {
                "inner_radius" => Some(inner_radius),
                "wall_thickness" => Some(wall_thickness),
                "length" => Some(length),
                "post_height" => Some(post_height),
                "post_width" => Some(post_width),
                "post_spacing" => Some(post_spacing),
                "slope_deg" => Some(slope_deg),
                _ => None,
            },
            Geometry::WalkwayTube {
                outer_radius,
                inner_radius,
                length,
            } => match name {
                "outer_radius" => Some(outer_radius),
                "inner_radius" => Some(inner_radius),
                "length" => Some(length),
                _ => None,
            },
        };
        match slot {
            Some(s) => {
                *s = value;
                Ok(())
            }
            None => Err(ModelError::UnknownStructureField {
                structure: structure.into(),
                field: format!("dims.{name}"),
            }),
        }
    }

    fn validate(&self, structure: &str) -> Result<()> {
        let dims: Vec<(&str, f64)> = match *self {
            Geometry::Slab {
                length,
                width,
                depth,
            } => vec![("length", length), ("width", width), ("depth", depth)],
            Geometry::DomeShell {
                outer_radius,
                inner_radius,
                base_depth,
            } => {
                if inner_radius > outer_radius {
                    return Err(ModelError::InvalidDimension {
                        name: format!("{structure}.inner_radius"),
                        reason: format!(
                            "inner radius {inner_radius} exceeds outer radius {outer_radius}"
                        ),
                    });
                }
                vec![
                    ("outer_radius", outer_radius),
                    ("inner_radius", inner_radius),
                    ("base_depth", base_depth),
                ]
            }
            Geometry::Tank {
                radius,
                wall_thickness,
                wall_height,
            } => vec![
                ("radius", radius),
                ("wall_thickness", wall_thickness),
                ("wall_height", wall_height),
            ],
            Geometry::PadWithWalls {
                length,
                width,
                depth,
                wall_height,
            } => vec![
                ("length", length),
                ("width", width),
                ("depth", depth),
                ("wall_height", wall_height),
            ],
            Geometry::Tower {
                height,
                base_length,
                top_length,
            } => vec![
                ("height", height),
                ("base_length", base_length),
                ("top_length", top_length),
            ],
            Geometry::MassDriverTube {
                inner_radius,
                wall_thickness,
                length,
                post_height,
                post_width,
                post_spacing,
                slope_deg,
            } => {
                if post_spacing <= 0.0 || !post_spacing.is_finite() {
                    return Err(ModelError::InvalidDimension {
                        name: format!("{structure}.post_spacing"),
                        reason: format!("must be strictly positive, got {post_spacing}"),
                    });
                }
                vec![
                    ("inner_radius", inner_radius),
                    ("wall_thickness", wall_thickness),
                    ("length", length),
                    ("post_height", post_height),
                    ("post_width", post_width),
                    ("slope_deg", slope_deg),
                ]
            }
            Geometry::WalkwayTube {
                outer_radius,
                inner_radius,
                length,
            } => {
                if inner_radius > outer_radius {
                    return Err(ModelError::InvalidDimension {
                        name: format!("{structure}.inner_radius"),
                        reason: format!(
                            "inner radius {inner_radius} exceeds outer radius {outer_radius}"
                        ),
                    });
                }
                vec![
                    ("outer_radius", outer_radius),
                    ("inner_radius", inner_radius),
                    ("length", length),
                ]
            }
        };
        for (name, v) in dims {
            if !v.is_finite() || v < 0.0 {
                return Err(ModelError::InvalidDimension {
                    name: format!("{structure}.{name}"),
                    reason: format!("must be finite and non-negative, got {v}"),
                });
            }
        }
        Ok(())
    }
}

/// One catalog row: a structure kind, its dimensions and material split.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StructureSpec {
    pub name: String,
    pub quantity: u32,
    pub geometry: Geometry,
    /// Volumetric steel fraction S for reinforced printing.
    pub steel_ratio: f64,
    /// Melted volume fraction μ under frame-and-block construction.
    pub block_fraction: f64,
    /// Present only when the base hosts a human crew.
    pub human_only: bool,
}

impl StructureSpec {
    pub fn validate(&self) -> Result<()> {
        if self.quantity < 1 {
            return Err(ModelError::InvalidParameter {
                name: format!("{}.quantity", self.name),
                reason: "must be at least 1".into(),
            });
        }
        if !(0.0..=1.0).contains(&self.steel_ratio) || !self.steel_ratio.is_finite() {
            return Err(ModelError::InvalidParameter {
                name: format!("{}.steel_ratio", self.name),
                reason: format!("must lie in [0, 1], got {}", self.steel_ratio),
            });
        }
        if !(self.block_fraction > 0.0 && self.block_fraction <= 1.0) {
            return Err(ModelError::InvalidParameter {
                name: format!("{}.block_fraction", self.name),
                reason: format!("must lie in (0, 1], got {}", self.block_fraction),
            });
        }
        self.geometry.validate(&self.name)
    }
}

/// Construction-material volume of a single structure unit [m³], before the
/// quantity multiplier.
pub fn structure_volume(spec: &StructureSpec) -> Result<f64> {
    use std::f64::consts::PI;
    spec.validate()?;
    let v = match spec.geometry {
        Geometry::Slab {
            length,
            width,
            depth,
        } => length * width * depth,
        Geometry::DomeShell {
            outer_radius: ro,
            inner_radius: ri,
            base_depth: d,
        } => (2.0 / 3.0) * PI * (ro.powi(3) - ri.powi(3)) + PI * d * ro.powi(2),
        Geometry::Tank {
            radius: r,
            wall_thickness: d,
            wall_height: h,
        } => 2.0 * PI * r.powi(2) * d + 2.0 * PI * r * h * d,
        Geometry::PadWithWalls {
            length: l,
            width: w,
            depth: d,
            wall_height: h,
        } => l * w * d + 2.0 * l * h * d + w * h * d,
        Geometry::Tower {
            height: h,
            base_length: l1,
            top_length: l2,
        } => h * l2.powi(2) + h * (l1 - l2) * l2,
        Geometry::MassDriverTube {
            inner_radius: r,
            wall_thickness: t,
            length: l,
            post_height: h,
            post_width: w,
            post_spacing: eps,
            slope_deg: _,
        } => {
            // Pair of annular tubes plus the support posts along the track.
            2.0 * PI * l * ((r + t).powi(2) - r.powi(2)) + (l / eps) * 2.0 * h * w.powi(2)
        }
        Geometry::WalkwayTube {
            outer_radius: ro,
            inner_radius: ri,
            length: l,
        } => PI * (ro.powi(2) - ri.powi(2)) * l,
    };
    Ok(v)
}

/// The full set of structures that make up the base.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BaseInventory {
    pub structures: Vec<StructureSpec>,
}

/// Block fraction μ for most structures under frame-and-block construction.
pub const BLOCK_FRACTION_DEFAULT: f64 = 0.15;
/// Block fraction μ for roads and other flat slabs.
pub const BLOCK_FRACTION_SLAB: f64 = 0.05;

impl Default for BaseInventory {
    fn default() -> Self {
        let dome = |name: &str,
                    quantity: u32,
                    ro: f64,
                    ri: f64,
                    d: f64,
                    steel: f64,
                    human_only: bool| StructureSpec {
            name: name.into(),
            quantity,
            geometry: Geometry::DomeShell {
                outer_radius: ro,
                inner_radius: ri,
                base_depth: d,
            },
            steel_ratio: steel,
            block_fraction: BLOCK_FRACTION_DEFAULT,
            human_only,
        };
        BaseInventory {
            structures: vec![
                StructureSpec {
                    name: "road_network".into(),
                    quantity: 1,
                    geometry: Geometry::Slab {
                        length: 12_000.0,
                        width: 8.0,
                        depth: 0.2,
                    },
                    steel_ratio: 0.05,
                    block_fraction: BLOCK_FRACTION_SLAB,
                    human_only: false,
                },
                dome("refinery", 1, 50.0, 49.6, 0.3, 0.1, false),
                dome("command_and_service_domes", 6, 25.0, 24.6, 0.3, 0.1, false),
                StructureSpec {
                    name: "control_tower".into(),
                    quantity: 1,
                    geometry: Geometry::Tower {
                        height: 150.0,
                        base_length: 25.0,
                        top_length: 5.0,
                    },
                    steel_ratio: 0.1,
                    block_fraction: BLOCK_FRACTION_DEFAULT,
                    human_only: false,
                },
                dome("warehouses", 6, 25.0, 24.8, 0.3, 0.1, false),
                StructureSpec {
                    name: "fuel_storage".into(),
                    quantity: 6,
                    geometry: Geometry::Tank {
                        radius: 25.0,
                        wall_thickness: 0.1,
                        wall_height: 2.0,
                    },
                    steel_ratio: 0.05,
                    block_fraction: BLOCK_FRACTION_DEFAULT,
                    human_only: false,
                },
                StructureSpec {
                    name: "small_landing_pads".into(),
                    quantity: 3,
                    geometry: Geometry::PadWithWalls {
                        length: 100.0,
                        width: 50.0,
                        depth: 0.2,
                        wall_height: 0.5,
                    },
                    steel_ratio: 0.05,
                    block_fraction: BLOCK_FRACTION_DEFAULT,
                    human_only: false,
                },
                StructureSpec {
                    name: "large_landing_pads".into(),
                    quantity: 3,
                    geometry: Geometry::PadWithWalls {
                        length: 100.0,
                        width: 100.0,
                        depth: 0.2,
                        wall_height: 0.5,
                    },
                    steel_ratio: 0.05,
                    block_fraction: BLOCK_FRACTION_DEFAULT,
                    human_only: false,
                },
                StructureSpec {
                    name: "power_generation_pad".into(),
                    quantity: 1,
                    geometry: Geometry::Slab {
                        length: 1000.0,
                        width: 1000.0,
                        depth: 0.1,
                    },
                    steel_ratio: 0.05,
                    // Flat slab, inherits the road block fraction.
                    block_fraction: BLOCK_FRACTION_SLAB,
                    human_only: false,
                },
                StructureSpec {
                    name: "mass_driver".into(),
                    quantity: 1,
                    geometry: Geometry::MassDriverTube {
                        inner_radius: 3.0,
                        wall_thickness: 0.5,
                        length: 10_000.0,
                        post_height: 5.0,
                        post_width: 1.0,
                        post_spacing: 20.0,
                        slope_deg: 5.0,
                    },
                    steel_ratio: 0.05,
                    block_fraction: BLOCK_FRACTION_DEFAULT,
                    human_only: false,
                },
                StructureSpec {
                    name: "o2_extractors".into(),
                    quantity: 6,
                    geometry: Geometry::Tank {
                        radius: 50.0,
                        wall_thickness: 0.2,
                        wall_height: 3.0,
                    },
                    steel_ratio: 0.2,
                    block_fraction: BLOCK_FRACTION_DEFAULT,
                    human_only: true,
                },
                dome("human_services_centres", 2, 50.0, 49.6, 0.3, 0.1, true),
                dome("human_habitats", 100, 6.0, 5.9, 0.1, 0.2, true),
                StructureSpec {
                    name: "walkway_tubes".into(),
                    quantity: 1,
                    geometry: Geometry::WalkwayTube {
                        outer_radius: 1.1,
                        inner_radius: 1.0,
                        length: 10_000.0,
                    },
                    steel_ratio: 0.1,
                    block_fraction: BLOCK_FRACTION_DEFAULT,
                    human_only: true,
                },
            ],
        }
    }
}

impl BaseInventory {
    pub fn validate(&self) -> Result<()> {
        let mut seen = std::collections::HashSet::new();
        for s in &self.structures {
            if !seen.insert(s.name.as_str()) {
                return Err(ModelError::DuplicateStructure(s.name.clone()));
            }
            s.validate()?;
        }
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&StructureSpec> {
        self.structures.iter().find(|s| s.name == name)
    }

    /// Structures present for the given operator mode, catalog order.
    pub fn for_mode(&self, include_human_only: bool) -> impl Iterator<Item = &StructureSpec> {
        self.structures
            .iter()
            .filter(move |s| include_human_only || !s.human_only)
    }

    /// Total construction-material volume, Σ quantity × unit volume [m³].
    pub fn total_material_volume(&self, include_human_only: bool) -> Result<f64> {
        let mut total = 0.0;
        for s in self.for_mode(include_human_only) {
            total += f64::from(s.quantity) * structure_volume(s)?;
        }
        Ok(total)
    }

    /// Apply row overrides, erroring on unknown structures or fields.
    pub fn apply_overrides(&mut self, overrides: &[CatalogOverride]) -> Result<()> {
        for ov in overrides {
            let spec = self
                .structures
                .iter_mut()
                .find(|s| s.name == ov.name)
                .ok_or_else(|| ModelError::UnknownStructure(ov.name.clone()))?;
            if let Some(q) = ov.quantity {
                spec.quantity = q;
            }
            if let Some(s) = ov.steel_ratio {
                spec.steel_ratio = s;
            }
            if let Some(b) = ov.block_fraction {
                spec.block_fraction = b;
            }
            if let Some(h) = ov.human_only {
                spec.human_only = h;
            }
            if let Some(dims) = &ov.dims {
                for (key, value) in dims {
                    spec.geometry.set_dim(&ov.name, key, *value)?;
                }
            }
        }
        self.validate()
    }

    /// Catalog parameters that no volume or energy formula consumes.
    pub fn unused_parameters(&self) -> Vec<String> {
        self.structures
            .iter()
            .filter_map(|s| match s.geometry {
                Geometry::MassDriverTube { slope_deg, .. } => Some(format!(
                    "{}.slope_deg = {slope_deg}° (catalog data only; no formula consumes it)",
                    s.name
                )),
                _ => None,
            })
            .collect()
    }
}

/// Sparse override of one catalog row, typically loaded from JSON.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogOverride {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quantity: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub steel_ratio: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub block_fraction: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub human_only: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<std::collections::BTreeMap<String, f64>>,
}
