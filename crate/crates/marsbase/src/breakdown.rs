//! Named energy breakdowns with exact-sum totals.

use serde::{Deserialize, Serialize};

/// Ordered map of category label → energy [MJ]. The total is always the
/// exact floating-point sum of the entries in insertion order.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct EnergyBreakdown {
    pub categories: Vec<(String, f64)>,
}

impl EnergyBreakdown {
    pub fn new() -> Self {
        EnergyBreakdown { categories: Vec::new() }
    }

    pub fn push(&mut self, label: impl Into<String>, energy_mj: f64) {
        self.categories.push((label.into(), energy_mj));
    }

    pub fn get(&self, label: &str) -> Option<f64> {
        self.categories
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, e)| *e)
    }

    /// Exact sum of the entries, in insertion order.
    pub fn total(&self) -> f64 {
        self.categories.iter().map(|(_, e)| e).sum()
    }

    /// Share of each category in the total. Empty when the total is zero.
    pub fn fractions(&self) -> Vec<(String, f64)> {
        let total = self.total();
        if total == 0.0 {
            return Vec::new();
        }
        self.categories
            .iter()
            .map(|(l, e)| (l.clone(), e / total))
            .collect()
    }

    /// Drop one category, keeping the order of the rest.
    pub fn without(&self, label: &str) -> EnergyBreakdown {
        EnergyBreakdown {
            categories: self
                .categories
                .iter()
                .filter(|(l, _)| l != label)
                .cloned()
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn total_is_exact_sum() {
        let mut b = EnergyBreakdown::new();
        b.push("a", 0.1);
        b.push("b", 0.2);
        b.push("c", 0.3);
        assert_eq!(b.total(), 0.1 + 0.2 + 0.3);
    }

    #[test]
    fn fractions_normalize() {
        let mut b = EnergyBreakdown::new();
        b.push("a", 2.5e6);
        b.push("b", 5.51e5);
        b.push("c", 25_113.0);
        let sum: f64 = b.fractions().iter().map(|(_, f)| f).sum();
        assert!((sum - 1.0).abs() < 1e-12);
        for (_, f) in b.fractions() {
            assert!((0.0..=1.0).contains(&f));
        }
    }

    #[test]
    fn without_preserves_rest() {
        let mut b = EnergyBreakdown::new();
        b.push("a", 1.0);
        b.push("b", 2.0);
        let r = b.without("a");
        assert_eq!(r.categories, vec![("b".to_string(), 2.0)]);
    }
}
