use serde::{Deserialize, Serialize};

/// Numeric knobs shared by every operation.
///
/// `eq_tol` scales every equality assertion, `eig_cluster_gap` decides when two
/// eigenvalues are treated as one, and `zero_cutoff` truncates the spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub eq_tol: f64,
    pub eig_cluster_gap: f64,
    pub zero_cutoff: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            eq_tol: 1e-9,
            eig_cluster_gap: 1e-7,
            zero_cutoff: 1e-10,
        }
    }
}

/// Which tolerance tier a check uses. Chained checks (implications, products
/// built from several approximate steps) get ten times the base slack.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Tier {
    Base,
    Chained,
}

impl Tolerances {
    pub fn with_eq_tol(eq_tol: f64) -> Self {
        Self {
            eq_tol,
            ..Self::default()
        }
    }

    /// All knobs strictly positive and finite.
    pub fn is_valid(&self) -> bool {
        [self.eq_tol, self.eig_cluster_gap, self.zero_cutoff]
            .iter()
            .all(|v| v.is_finite() && *v > 0.0)
    }

    /// `eq_tol · dim · max(1, scale)`.
    pub fn eps(&self, dim: usize, scale: f64) -> f64 {
        self.eq_tol * dim.max(1) as f64 * scale.max(1.0)
    }

    pub fn eps_tier(&self, tier: Tier, dim: usize, scale: f64) -> f64 {
        match tier {
            Tier::Base => self.eps(dim, scale),
            Tier::Chained => 10.0 * self.eps(dim, scale),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let t = Tolerances::default();
        assert!(t.is_valid());
        assert_eq!(t.eps(4, 0.5), 4e-9);
        assert!((t.eps(4, 3.0) - 12e-9).abs() < 1e-22);
        assert_eq!(t.eps_tier(Tier::Chained, 1, 1.0), 1e-8);
    }

    #[test]
    fn rejects_non_positive() {
        assert!(!Tolerances::with_eq_tol(0.0).is_valid());
        assert!(!Tolerances::with_eq_tol(f64::NAN).is_valid());
    }
}
