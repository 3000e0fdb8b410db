//! Acceptance suite: one test per headline criterion, each printing a
//! PASS line with the measured values (visible with `--nocapture`).
//!
//! Expected values marked "oracle" below were computed independently by
//! term-by-term arithmetic in a CAS/spreadsheet and frozen here.

use marsbase::base_catalog::{structure_volume, BaseInventory, Environment};
use marsbase::config::RunConfig;
use marsbase::construction::ConstructionMethod;
use marsbase::operations_energy::{
    crew_energy, drag_adjusted_velocity, excavation_energy, haul_energy, mass_driver_energy,
    water_extraction_energy, CrewProfile, ExcavationParams, HaulParams, MassDriverParams,
};
use marsbase::power_sizing::{required_area, PlantKind, SizingProfile};
use marsbase::scenario_engine::{
    construction_comparison, operations_breakdown, reconcile, reported, Disposition, ModelParams,
    Operator, Scenario, CATEGORY_CREW, CATEGORY_MASS_DRIVER, CATEGORY_SURFACE,
};

fn within(computed: f64, expected: f64, rel_tol: f64) -> bool {
    (computed - expected).abs() <= rel_tol * expected.abs()
}

#[test]
fn criterion_1_crew_ledger() {
    let b = crew_energy(&CrewProfile::default()).unwrap();
    let oxygen = b.get("oxygen").unwrap();
    let electricity = b.get("electricity").unwrap();
    let water = b.get("water").unwrap();
    let food = b.get("food").unwrap();
    assert!((oxygen - 5559.0).abs() <= 1.0, "oxygen {oxygen}");
    assert_eq!(electricity, 5400.0);
    assert_eq!(water, 10_800.0);
    assert!((food - 3354.0).abs() <= 1.0, "food {food}");
    let sum: f64 = b.categories.iter().map(|(_, e)| e).sum();
    assert_eq!(b.total(), sum, "total must be the exact category sum");
    assert!((b.total() - 25_113.0).abs() <= 2.0, "total {}", b.total());
    println!(
        "PASS criterion 1 (crew ledger): O2 {oxygen:.2}, elec {electricity:.0}, \
         water {water:.0}, food {food:.2}, total {:.2} MJ",
        b.total()
    );
}

#[test]
fn criterion_2_plant_sizing() {
    let env = Environment::default();
    let total = reported::operations_total_exact_mj();
    let thermal_km2 =
        required_area(total, PlantKind::SolarThermal, &env, SizingProfile::Faithful).unwrap() / 1e6;
    let pv_km2 =
        required_area(total, PlantKind::Photovoltaic, &env, SizingProfile::Faithful).unwrap() / 1e6;
    assert!(within(thermal_km2, 0.226, 0.01), "thermal {thermal_km2}");
    assert!(within(pv_km2, 0.50, 0.01), "pv {pv_km2}");
    println!(
        "PASS criterion 2 (plant sizing): thermal {thermal_km2:.4} km², pv {pv_km2:.4} km² \
         for {total:.0} MJ/sol"
    );
}

#[test]
fn criterion_3_operations_split() {
    let params = ModelParams::default();
    assert!(params.registry_mode);
    let human = operations_breakdown(
        &Scenario {
            construction_method: ConstructionMethod::PrintedReinforced,
            operator: Operator::HumanCrew,
        },
        &params,
    )
    .unwrap();
    let fr: std::collections::HashMap<String, f64> = human
        .fractions()
        .into_iter()
        .map(|(l, f)| (l, 100.0 * f))
        .collect();
    assert!((fr[CATEGORY_MASS_DRIVER] - 81.3).abs() <= 0.2);
    assert!((fr[CATEGORY_SURFACE] - 17.9).abs() <= 0.2);
    assert!((fr[CATEGORY_CREW] - 0.82).abs() <= 0.2);

    // Robotic mode drops the crew slice and renormalizes exactly.
    let robotic = operations_breakdown(&Scenario::default(), &params).unwrap();
    assert_eq!(human.without(CATEGORY_CREW), robotic);
    let sum: f64 = robotic.fractions().iter().map(|(_, f)| f).sum();
    assert!((sum - 1.0).abs() < 1e-12);
    println!(
        "PASS criterion 3 (operations split): {:.2}% / {:.2}% / {:.3}%",
        fr[CATEGORY_MASS_DRIVER], fr[CATEGORY_SURFACE], fr[CATEGORY_CREW]
    );
}

#[test]
fn criterion_4_mass_driver() {
    let v = drag_adjusted_velocity(&MassDriverParams::default()).unwrap();
    assert!((v - 5001.28).abs() <= 0.1, "v* {v}"); // oracle 5001.2835

    let ideal = MassDriverParams {
        launcher_efficiency: 1.0,
        ..Default::default()
    };
    let e_ideal = mass_driver_energy(&ideal).unwrap();
    assert!(within(e_ideal, 1.376e6, 0.001), "ideal {e_ideal}");

    let e = mass_driver_energy(&MassDriverParams::default()).unwrap();
    assert!(within(e, 2.5e6, 0.01), "kappa=0.55 {e}");

    // The efficiency inference is flagged in the reconciliation output.
    let recon = reconcile(&ModelParams::default()).unwrap();
    let entry = recon.get("mass_driver_launch").unwrap();
    let note = entry.note.as_deref().unwrap_or("");
    assert!(note.contains("inference"), "note: {note}");
    println!(
        "PASS criterion 4 (mass driver): v* {v:.2} m/s, ideal {e_ideal:.0} MJ, \
         κ=0.55 {e:.0} MJ (inference flagged)"
    );
}

#[test]
fn criterion_5_haul_excavation_reconciliation() {
    let env = Environment::default();
    let haul = haul_energy(&HaulParams::raw_regolith_default(), &env).unwrap();
    assert!(within(haul, 890.4, 0.001), "haul {haul}");

    let excavation =
        excavation_energy(&ExcavationParams::default(), 100_000.0, &env).unwrap();
    assert!(within(excavation, 4594.0, 0.05), "excavation {excavation}");

    let recon = reconcile(&ModelParams::default()).unwrap();
    let haul_entry = recon.get("haul_raw_regolith").unwrap();
    assert!(
        (haul_entry.relative_deviation - 0.03).abs() < 0.01,
        "haul deviation {}",
        haul_entry.relative_deviation
    );

    // The reported surface subtotal exceeds the component sum by ~20%.
    let subtotal = recon.get("surface_subtotal").unwrap();
    assert_eq!(subtotal.disposition, Disposition::SourceInconsistent);
    assert!(within(subtotal.computed, 4.43e5, 0.01), "{}", subtotal.computed);
    assert_eq!(subtotal.reported, 5.51e5);
    println!(
        "PASS criterion 5 (haul/excavation): haul {haul:.1} MJ (reported 864, dev {:.1}%), \
         dig {excavation:.0} MJ, subtotal gap {:.0} vs {:.0} MJ flagged",
        100.0 * haul_entry.relative_deviation,
        subtotal.computed,
        subtotal.reported
    );
}

#[test]
fn criterion_6_volume_oracles() {
    let inv = BaseInventory::default();
    // (structure, oracle m³): independent CAS evaluation of each formula.
    let cases = [
        ("road_network", 19_200.0),
        ("refinery", 8589.248356201013),
        ("fuel_storage", 424.1150082346221),
        ("mass_driver", 209_203.52248333656),
        ("small_landing_pads", 1025.0),
        ("walkway_tubes", 6597.344572538572),
    ];
    for (name, expected) in cases {
        let v = structure_volume(inv.get(name).unwrap()).unwrap();
        assert!(within(v, expected, 1e-4), "{name}: {v} vs {expected}");
    }
    println!("PASS criterion 6 (volume oracles): all six structures within 0.01%");
}

#[test]
fn criterion_7_property_suite_anchor() {
    // The exhaustive randomized checks live in tests/properties.rs; this
    // anchors the deterministic parts at the baseline.
    let params = ModelParams::default();
    let env = &params.environment;

    // Exact ×2 linearity in the mass/volume argument for the linear ops.
    let mut haul = HaulParams::raw_regolith_default();
    let h1 = haul_energy(&haul, env).unwrap();
    haul.payload *= 2.0;
    assert_eq!(haul_energy(&haul, env).unwrap(), 2.0 * h1);

    let x1 = water_extraction_energy(&params.extraction).unwrap();
    let mut doubled = params.extraction.clone();
    doubled.water_mass_per_sol *= 2.0;
    assert_eq!(water_extraction_energy(&doubled).unwrap(), 2.0 * x1);

    let mut crew = params.crew.clone();
    let c1 = crew_energy(&crew).unwrap().total();
    crew.headcount *= 2.0;
    assert_eq!(crew_energy(&crew).unwrap().total(), 2.0 * c1);

    // Excavation (force and traverse both grow with mass) and the mass
    // driver (constant drag-work offset) are not linear; assert strict
    // monotonicity instead.
    let e1 = excavation_energy(&params.excavation, 50_000.0, env).unwrap();
    let e2 = excavation_energy(&params.excavation, 100_000.0, env).unwrap();
    assert!(e2 > e1 && e1 > 0.0);
    let md1 = mass_driver_energy(&params.mass_driver).unwrap();
    let heavier = MassDriverParams {
        payload_mass: 2.0 * params.mass_driver.payload_mass,
        ..params.mass_driver.clone()
    };
    assert!(mass_driver_energy(&heavier).unwrap() > md1);

    // Breakdown additivity and normalization.
    let b = operations_breakdown(
        &Scenario {
            construction_method: ConstructionMethod::PrintedReinforced,
            operator: Operator::HumanCrew,
        },
        &params,
    )
    .unwrap();
    let sum: f64 = b.categories.iter().map(|(_, e)| e).sum();
    assert_eq!(b.total(), sum);
    let fsum: f64 = b.fractions().iter().map(|(_, f)| f).sum();
    assert!((fsum - 1.0).abs() < 1e-12);

    // Sizing round-trip at 1e-12.
    let plant = marsbase::power_sizing::PowerPlant::sized_for(
        reported::operations_total_exact_mj(),
        PlantKind::SolarThermal,
        env,
        SizingProfile::Faithful,
    )
    .unwrap();
    let harvest = marsbase::power_sizing::daily_harvest(&plant, env).unwrap();
    let e = reported::operations_total_exact_mj();
    assert!((harvest - e).abs() / e < 1e-12);

    // Determinism: identical config bytes → identical report bytes.
    use marsbase::report::Emit;
    let cfg = RunConfig::from_str("{}").unwrap();
    let render = || {
        let (p, s) = cfg.resolve(&[]).unwrap();
        let b = operations_breakdown(&s, &p).unwrap();
        marsbase::report::EvaluationReport::new(s, p.registry_mode, b).to_json()
    };
    assert_eq!(render(), render());
    println!("PASS criterion 7 (properties): linearity, additivity, round-trip, determinism");
}

#[test]
fn criterion_8_figure_claim_handling() {
    let params = ModelParams::default();
    let grid = construction_comparison(&params).unwrap();
    assert_eq!(grid.cells.len(), 4, "all four scenario totals emitted");
    assert_eq!(grid.ratios.len(), 12, "all pairwise ratios emitted");

    // Assert only the ordering; the fold claim itself is reconciliation data.
    for method in [
        ConstructionMethod::PrintedReinforced,
        ConstructionMethod::FrameAndBlock,
    ] {
        let human = grid.cell(method, "human").unwrap();
        let robotic = grid.cell(method, "robotic").unwrap();
        assert!(human.total_mj > robotic.total_mj);
    }

    let recon = reconcile(&params).unwrap();
    let energy_fold = recon.get("construction_energy_fold").unwrap();
    assert_eq!(energy_fold.reported, 5.0);
    let time_fold = recon.get("build_time_fold").unwrap();
    assert_eq!(time_fold.reported, 5.0);
    println!(
        "PASS criterion 8 (figure claims): ordering holds; computed energy fold {:.3} \
         and time fold {:.3} recorded against the claimed 5",
        energy_fold.computed, time_fold.computed
    );
}
