//! Randomized invariant checks: geometry monotonicity, energy linearity,
//! breakdown bookkeeping, sizing round-trips, and a config-fuzz pass that
//! must only ever produce errors, never panics.

use proptest::prelude::*;

use marsbase::base_catalog::{
    structure_volume, Environment, Geometry, StructureSpec,
};
use marsbase::breakdown::EnergyBreakdown;
use marsbase::operations_energy::{
    excavation_energy, haul_energy, mass_driver_energy, water_extraction_energy,
    ExcavationParams, HaulParams, MassDriverParams,
};
use marsbase::power_sizing::{daily_harvest, PlantKind, PowerPlant, SizingProfile};
use marsbase::config::RunConfig;

fn spec(geometry: Geometry) -> StructureSpec {
    StructureSpec {
        name: "probe".into(),
        quantity: 1,
        geometry,
        steel_ratio: 0.0,
        block_fraction: 0.15,
        human_only: false,
    }
}

fn dim() -> impl Strategy<Value = f64> {
    0.1f64..500.0
}

proptest! {
    #[test]
    fn slab_volume_nonnegative_and_monotone(
        l in dim(), w in dim(), d in dim(), scale in 1.0f64..10.0
    ) {
        let v = structure_volume(&spec(Geometry::Slab {
            length: l, width: w, depth: d,
        })).unwrap();
        prop_assert!(v >= 0.0);
        let bigger = structure_volume(&spec(Geometry::Slab {
            length: l * scale, width: w, depth: d,
        })).unwrap();
        prop_assert!(bigger >= v);
    }

    #[test]
    fn dome_volume_monotone_in_outer_radius(
        inner in 1.0f64..100.0, t1 in 0.01f64..5.0, t2 in 0.01f64..5.0, depth in 0.05f64..2.0
    ) {
        let (lo, hi) = if t1 <= t2 { (t1, t2) } else { (t2, t1) };
        let v_lo = structure_volume(&spec(Geometry::DomeShell {
            outer_radius: inner + lo, inner_radius: inner, base_depth: depth,
        })).unwrap();
        let v_hi = structure_volume(&spec(Geometry::DomeShell {
            outer_radius: inner + hi, inner_radius: inner, base_depth: depth,
        })).unwrap();
        prop_assert!(v_lo >= 0.0);
        prop_assert!(v_hi >= v_lo);
    }

    #[test]
    fn tank_volume_nonnegative(
        r in 0.5f64..50.0, h in 0.5f64..50.0, t in 0.01f64..0.4
    ) {
        let v = structure_volume(&spec(Geometry::Tank {
            radius: r, wall_height: h, wall_thickness: t,
        })).unwrap();
        prop_assert!(v >= 0.0);
    }

    #[test]
    fn haul_energy_linear_in_payload(m in 1.0f64..1e7, k in 1.0f64..100.0) {
        let env = Environment::default();
        let mut p = HaulParams::raw_regolith_default();
        p.payload = m;
        let e1 = haul_energy(&p, &env).unwrap();
        p.payload = m * k;
        let e2 = haul_energy(&p, &env).unwrap();
        // Products of finite positive factors: relative error stays tiny.
        prop_assert!((e2 - k * e1).abs() <= 1e-9 * e2.abs());
        prop_assert!(e1 >= 0.0);
    }

    #[test]
    fn extraction_energy_doubles_exactly(m in 1.0f64..1e7) {
        let mut p = marsbase::operations_energy::ExtractionParams::default();
        p.water_mass_per_sol = m;
        let e1 = water_extraction_energy(&p).unwrap();
        p.water_mass_per_sol = 2.0 * m;
        let e2 = water_extraction_energy(&p).unwrap();
        prop_assert_eq!(e2, 2.0 * e1);
    }

    // Excavation is superlinear (force and traverse both grow with mass):
    // monotone, non-negative, and at least the doubled value when doubled.
    #[test]
    fn excavation_energy_monotone(m in 1.0f64..1e6) {
        let env = Environment::default();
        let p = ExcavationParams::default();
        let e1 = excavation_energy(&p, m, &env).unwrap();
        let e2 = excavation_energy(&p, 2.0 * m, &env).unwrap();
        prop_assert!(e1 > 0.0);
        prop_assert!(e2 >= 2.0 * e1);
    }

    // Mass-driver input energy is affine in total mass (constant drag-work
    // offset), hence monotone but sublinear under doubling.
    #[test]
    fn mass_driver_energy_monotone_in_mass(m in 1.0f64..1e6) {
        let p1 = MassDriverParams {
            payload_mass: m,
            ..Default::default()
        };
        let p2 = MassDriverParams {
            payload_mass: 2.0 * m,
            ..Default::default()
        };
        let e1 = mass_driver_energy(&p1).unwrap();
        let e2 = mass_driver_energy(&p2).unwrap();
        prop_assert!(e2 > e1);
        prop_assert!(e1 > 0.0);
    }

    #[test]
    fn breakdown_fractions_normalize(values in proptest::collection::vec(1e-3f64..1e9, 1..8)) {
        let mut b = EnergyBreakdown::default();
        for (i, v) in values.iter().enumerate() {
            b.push(format!("cat{i}"), *v);
        }
        let sum: f64 = b.categories.iter().map(|(_, e)| e).sum();
        prop_assert_eq!(b.total(), sum);
        let fsum: f64 = b.fractions().iter().map(|(_, f)| f).sum();
        prop_assert!((fsum - 1.0).abs() < 1e-12);
        for (_, f) in b.fractions() {
            prop_assert!((0.0..=1.0).contains(&f));
        }
    }

    #[test]
    fn sizing_round_trip(e in 1.0f64..1e9) {
        let env = Environment::default();
        for kind in [PlantKind::SolarThermal, PlantKind::Photovoltaic] {
            let plant = PowerPlant::sized_for(e, kind, &env, SizingProfile::Faithful).unwrap();
            let harvest = daily_harvest(&plant, &env).unwrap();
            prop_assert!((harvest - e).abs() / e < 1e-12);
        }
    }

    // Config fuzzing: arbitrary bytes must parse or error, never panic.
    #[test]
    fn config_parser_never_panics(text in ".{0,256}") {
        let _ = RunConfig::from_str(&text);
    }

    // Structured fuzzing: near-valid configs with mutated keys and values.
    #[test]
    fn mutated_configs_error_cleanly(
        key in "[a-z_.]{1,40}",
        value in proptest::num::f64::ANY,
        format in prop_oneof!["table", "json", "csv", "xml", ""],
    ) {
        let text = format!(
            "{{\"overrides\": {{\"{key}\": {}}}, \"format\": \"{format}\"}}",
            if value.is_finite() { format!("{value}") } else { "null".to_string() }
        );
        if let Ok(cfg) = RunConfig::from_str(&text) {
            let _ = cfg.resolve(&[]);
        }
    }
}
