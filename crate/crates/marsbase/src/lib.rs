//! Parametric energy and sizing model for a Mars water-mining base.
//!
//! The library covers the full feasibility chain: structure material
//! volumes from a catalog, construction energy under two build methods,
//! per-sol operations energy (water extraction, haulage, excavation,
//! mass-driver export, crew life support), solar plant sizing, scenario
//! comparison, one-at-a-time sensitivity sweeps and a reconciliation
//! audit against the source study's reported figures.
//!
//! Everything is a pure function over immutable parameter values, so
//! scenario evaluations can run concurrently without coordination.

pub mod base_catalog;
pub mod breakdown;
pub mod config;
pub mod construction;
pub mod error;
pub mod operations_energy;
pub mod power_sizing;
pub mod report;
pub mod scenario_engine;
pub mod sweep;

pub use breakdown::EnergyBreakdown;
pub use error::{ModelError, Result};
pub use scenario_engine::{ModelParams, Scenario};
