//! Deterministic report emission: human tables, machine JSON and CSV
//! (including plot-data exports for the breakdown charts).
//!
//! Output is a pure function of the report value, so identical inputs
//! yield byte-identical bytes across runs.

use serde::{Deserialize, Serialize};

use crate::breakdown::EnergyBreakdown;
use crate::config::OutputFormat;
use crate::power_sizing::SizingProfile;
use crate::scenario_engine::{
    ConstructionComparison, Disposition, ReconciliationReport, Scenario,
};
use crate::sweep::SweepResult;

/// Evaluation of one scenario's per-sol operations energy.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluationReport {
    pub scenario: Scenario,
    /// True when the category values come from the reported registry
    /// rather than the formulas.
    pub registry_mode: bool,
    pub breakdown: EnergyBreakdown,
    pub total_mj: f64,
    pub fractions: Vec<(String, f64)>,
}

impl EvaluationReport {
    pub fn new(scenario: Scenario, registry_mode: bool, breakdown: EnergyBreakdown) -> Self {
        EvaluationReport {
            scenario,
            registry_mode,
            total_mj: breakdown.total(),
            fractions: breakdown.fractions(),
            breakdown,
        }
    }
}

/// Plant areas for one energy requirement, both collector kinds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlantSizingReport {
    pub energy_per_sol_mj: f64,
    pub profile: SizingProfile,
    pub solar_thermal_area_m2: f64,
    pub photovoltaic_area_m2: f64,
}

/// Anything the CLI can emit.
pub trait Emit: Serialize {
    fn to_table(&self) -> String;
    fn to_csv(&self) -> String;

    fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    fn emit(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Table => self.to_table(),
            OutputFormat::Json => self.to_json(),
            OutputFormat::Csv => self.to_csv(),
        }
    }
}

/// Shortest round-trip float formatting; deterministic.
fn num(v: f64) -> String {
    format!("{v}")
}

fn pct(f: f64) -> String {
    format!("{:.4}%", 100.0 * f)
}

/// Minimal CSV quoting for free-text fields.
fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl Emit for EvaluationReport {
    fn to_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "scenario: {} / {}\n",
            self.scenario.construction_method.label(),
            match self.scenario.operator {
                crate::scenario_engine::Operator::HumanCrew => "human_crew".to_string(),
                crate::scenario_engine::Operator::Robotic { robot_count, .. } =>
                    format!("robotic ({robot_count} robots)"),
            }
        ));
        out.push_str(&format!(
            "values: {}\n\n",
            if self.registry_mode {
                "reported registry"
            } else {
                "formula-faithful"
            }
        ));
        out.push_str(&format!(
            "{:<24} {:>18} {:>10}\n",
            "category", "energy [MJ/sol]", "share"
        ));
        for (label, energy) in &self.breakdown.categories {
            let share = self
                .fractions
                .iter()
                .find(|(l, _)| l == label)
                .map(|(_, f)| pct(*f))
                .unwrap_or_default();
            out.push_str(&format!("{label:<24} {:>18.3} {share:>10}\n", energy));
        }
        out.push_str(&format!("{:<24} {:>18.3}\n", "total", self.total_mj));
        out
    }

    fn to_csv(&self) -> String {
        let mut out = String::from("category,energy_mj,fraction\n");
        for (label, energy) in &self.breakdown.categories {
            let fraction = self
                .fractions
                .iter()
                .find(|(l, _)| l == label)
                .map(|(_, f)| *f)
                .unwrap_or(0.0);
            out.push_str(&format!("{},{},{}\n", csv_field(label), num(*energy), num(fraction)));
        }
        out.push_str(&format!("total,{},1\n", num(self.total_mj)));
        out
    }
}

impl Emit for ConstructionComparison {
    fn to_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{:<22} {:<10} {:>18} {:>16}\n",
            "method", "structures", "energy [MJ]", "build [sols]"
        ));
        for c in &self.cells {
            out.push_str(&format!(
                "{:<22} {:<10} {:>18.3} {:>16.3}\n",
                c.method.label(),
                c.structure_set,
                c.total_mj,
                c.build_time_sols
            ));
        }
        out.push_str(&format!(
            "\nshared plant: {:.1} m² solar-thermal\n\npairwise energy ratios:\n",
            self.shared_plant.area_m2
        ));
        for (a, b, r) in &self.ratios {
            out.push_str(&format!("  {a} / {b} = {r:.4}\n"));
        }
        out
    }

    fn to_csv(&self) -> String {
        let mut out = String::from("method,structure_set,total_mj,build_time_sols\n");
        for c in &self.cells {
            out.push_str(&format!(
                "{},{},{},{}\n",
                c.method.label(),
                c.structure_set,
                num(c.total_mj),
                num(c.build_time_sols)
            ));
        }
        out.push_str("\nnumerator,denominator,ratio\n");
        for (a, b, r) in &self.ratios {
            out.push_str(&format!("{},{},{}\n", csv_field(a), csv_field(b), num(*r)));
        }
        out
    }
}

fn disposition_label(d: &Disposition) -> String {
    match d {
        Disposition::Matches { tolerance } => format!("matches(tol={tolerance})"),
        Disposition::SourceInconsistent => "source_inconsistent".into(),
        Disposition::ModeDependent => "mode_dependent".into(),
    }
}

impl Emit for ReconciliationReport {
    fn to_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{:<30} {:>16} {:>16} {:>7} {:>10}  {}\n",
            "quantity", "computed", "reported", "unit", "deviation", "disposition"
        ));
        for e in &self.entries {
            out.push_str(&format!(
                "{:<30} {:>16.4} {:>16.4} {:>7} {:>9.3}%  {}\n",
                e.quantity,
                e.computed,
                e.reported,
                e.unit,
                100.0 * e.relative_deviation,
                disposition_label(&e.disposition)
            ));
            if let Some(note) = &e.note {
                out.push_str(&format!("{:<30}   note: {note}\n", ""));
            }
        }
        if !self.notes.is_empty() {
            out.push_str("\nstanding notes:\n");
            for n in &self.notes {
                out.push_str(&format!("  - {n}\n"));
            }
        }
        out
    }

    fn to_csv(&self) -> String {
        let mut out =
            String::from("quantity,computed,reported,unit,relative_deviation,disposition,note\n");
        for e in &self.entries {
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                csv_field(&e.quantity),
                num(e.computed),
                num(e.reported),
                csv_field(&e.unit),
                num(e.relative_deviation),
                csv_field(&disposition_label(&e.disposition)),
                csv_field(e.note.as_deref().unwrap_or(""))
            ));
        }
        out
    }
}

impl Emit for SweepResult {
    fn to_table(&self) -> String {
        let mut out = format!("sweep over {}\n\n", self.parameter);
        out.push_str(&format!("{:>14} {:>18}", "value", "total [MJ]"));
        for (label, _) in &self.baseline.categories {
            out.push_str(&format!(" {:>18}", format!("Δ{label}")));
        }
        out.push('\n');
        for s in &self.samples {
            out.push_str(&format!("{:>14.4} {:>18.3}", s.value, s.total_mj));
            for (_, d) in &s.deltas {
                out.push_str(&format!(" {:>18.3}", d));
            }
            out.push('\n');
        }
        out
    }

    fn to_csv(&self) -> String {
        let mut out = String::from("value,total_mj");
        for (label, _) in &self.baseline.categories {
            out.push_str(&format!(",delta_{label}"));
        }
        out.push('\n');
        for s in &self.samples {
            out.push_str(&num(s.value));
            out.push(',');
            out.push_str(&num(s.total_mj));
            for (_, d) in &s.deltas {
                out.push(',');
                out.push_str(&num(*d));
            }
            out.push('\n');
        }
        out
    }
}

impl Emit for PlantSizingReport {
    fn to_table(&self) -> String {
        format!(
            "energy requirement: {:.3} MJ/sol (profile: {})\n\
             {:<16} {:>16} {:>12}\n\
             {:<16} {:>16.1} {:>12.4}\n\
             {:<16} {:>16.1} {:>12.4}\n",
            self.energy_per_sol_mj,
            match self.profile {
                SizingProfile::Faithful => "faithful",
                SizingProfile::Engineering => "engineering",
            },
            "plant kind",
            "area [m²]",
            "area [km²]",
            "solar_thermal",
            self.solar_thermal_area_m2,
            self.solar_thermal_area_m2 / 1e6,
            "photovoltaic",
            self.photovoltaic_area_m2,
            self.photovoltaic_area_m2 / 1e6,
        )
    }

    fn to_csv(&self) -> String {
        format!(
            "kind,area_m2,area_km2\nsolar_thermal,{},{}\nphotovoltaic,{},{}\n",
            num(self.solar_thermal_area_m2),
            num(self.solar_thermal_area_m2 / 1e6),
            num(self.photovoltaic_area_m2),
            num(self.photovoltaic_area_m2 / 1e6),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenario_engine::{operations_breakdown, ModelParams, Operator};

    fn eval_report() -> EvaluationReport {
        let params = ModelParams::default();
        let scenario = Scenario {
            construction_method: crate::construction::ConstructionMethod::PrintedReinforced,
            operator: Operator::HumanCrew,
        };
        let b = operations_breakdown(&scenario, &params).unwrap();
        EvaluationReport::new(scenario, params.registry_mode, b)
    }

    #[test]
    fn emission_is_deterministic() {
        let r = eval_report();
        for format in [OutputFormat::Table, OutputFormat::Json, OutputFormat::Csv] {
            assert_eq!(r.emit(format), r.emit(format));
        }
    }

    #[test]
    fn json_round_trips() {
        let r = eval_report();
        let parsed: EvaluationReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(parsed, r);
    }

    #[test]
    fn csv_has_registry_fractions() {
        let csv = eval_report().to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "category,energy_mj,fraction");
        assert!(lines[1].starts_with("mass_driver,2500000,"));
        assert_eq!(lines.len(), 5); // header + three categories + total
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("plain"), "plain");
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    }
}
