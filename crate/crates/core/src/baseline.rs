//! Classical probability transforms of a mass function.
//!
//! | transform | rule | source |
//! |---|---|---|
//! | [`pignistic`] | `BetP(w) = Σ_{F ∋ w} m(F) / |F|` | Smets & Kennes, transferable belief model (1994) |
//! | [`plausibility_transform`] | `Pl({w}) / Σ Pl({w'})` | Cobb & Shenoy (2006) |
//! | [`relative_belief_transform`] | `Bel({w}) / Σ Bel({w'})` | Cuzzolin (2012) |
//! | [`proportional_transform`] | singleton mass plus each composite mass split in proportion to singleton masses | Daniel (2006) |
//!
//! Every transform maps a Bayesian mass function to itself.

use crate::error::{Error, Result};
use crate::evidence::{MassFunction, ProbabilityDistribution};

/// Shares each focal mass equally among the members of its set.
pub fn pignistic(m: &MassFunction) -> ProbabilityDistribution {
    let mut p = vec![0.0; m.frame().size()];
    for &(set, mass) in m.focal_elements() {
        let share = mass / set.cardinality() as f64;
        for i in set.indices() {
            p[i] += share;
        }
    }
    ProbabilityDistribution::from_computed(m.frame().clone(), p)
}

/// Normalized singleton plausibilities.
pub fn plausibility_transform(m: &MassFunction) -> ProbabilityDistribution {
    let upper = m.singleton_bounds().upper().to_vec();
    // Σ Pl({w}) = Σ m(F)|F| >= 1
    let total: f64 = upper.iter().sum();
    let p = upper.into_iter().map(|u| u / total).collect();
    ProbabilityDistribution::from_computed(m.frame().clone(), p)
}

/// Normalized singleton beliefs. Undefined when no singleton carries mass.
pub fn relative_belief_transform(m: &MassFunction) -> Result<ProbabilityDistribution> {
    let lower = m.singleton_bounds().lower().to_vec();
    let total: f64 = lower.iter().sum();
    if total <= 0.0 {
        return Err(Error::UndefinedTransform("all singleton beliefs are zero"));
    }
    let p = lower.into_iter().map(|l| l / total).collect();
    Ok(ProbabilityDistribution::from_computed(m.frame().clone(), p))
}

/// Keeps singleton masses and distributes each composite mass among its
/// members in proportion to their singleton masses. A composite set whose
/// members all have zero singleton mass is split uniformly instead.
pub fn proportional_transform(m: &MassFunction) -> ProbabilityDistribution {
    let singles = m.singleton_bounds().lower().to_vec();
    let mut p = singles.clone();
    for &(set, mass) in m.focal_elements() {
        if set.is_singleton() {
            continue;
        }
        let weight: f64 = set.indices().map(|i| singles[i]).sum();
        if weight > 0.0 {
            for i in set.indices() {
                p[i] += mass * singles[i] / weight;
            }
        } else {
            let share = mass / set.cardinality() as f64;
            for i in set.indices() {
                p[i] += share;
            }
        }
    }
    ProbabilityDistribution::from_computed(m.frame().clone(), p)
}
