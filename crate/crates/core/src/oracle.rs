//! Brute-force grid search used to cross-check the entropy-matching solver.
//!
//! Shares nothing with the solver beyond the entropy formulas and the
//! singleton bounds: candidate points are multiples of `step` inside the box
//! whose coordinates sum to 1 within `step / 2`.

use crate::entropy::{deng_entropy, shannon_of, EntropyValue, LogBase};
use crate::entropy_match::{Regime, TransformResult};
use crate::error::{Error, Result};
use crate::evidence::{MassFunction, ProbabilityDistribution};

/// Largest frame the oracle accepts.
pub const ORACLE_MAX_FRAME: usize = 4;

/// Upper limit on visited grid points.
pub const ORACLE_BUDGET: u64 = 5_000_000;

/// Grid indices of multiples of `step` inside `[lower, upper]`, or the
/// nearest multiple when none fits.
fn axis(lower: f64, upper: f64, step: f64) -> (i64, i64) {
    let lo = (lower / step - 1e-9).ceil() as i64;
    let hi = (upper / step + 1e-9).floor() as i64;
    if lo <= hi {
        (lo.max(0), hi)
    } else {
        let k = (lower / step).round() as i64;
        (k, k)
    }
}

struct Grid {
    axes: Vec<(i64, i64)>,
    step: f64,
    target: f64,
    base: LogBase,
    visited: u64,
    /// (|sum - 1|, gap, point, entropy)
    best: Option<(f64, f64, Vec<f64>, f64)>,
    h_min: f64,
    h_max: f64,
}

impl Grid {
    fn walk(&mut self, k: usize, point: &mut Vec<f64>, partial: f64) -> Result<()> {
        let tol = self.step / 2.0;
        if k == self.axes.len() {
            self.visited += 1;
            if self.visited > ORACLE_BUDGET {
                return Err(Error::Capacity(format!(
                    "grid oracle exceeded {ORACLE_BUDGET} points"
                )));
            }
            let miss = (partial - 1.0).abs();
            let h = shannon_of(point, self.base);
            let gap = (self.target - h).abs();
            let key_miss = if miss <= tol + 1e-12 { 0.0 } else { miss };
            if key_miss == 0.0 {
                self.h_min = self.h_min.min(h);
                self.h_max = self.h_max.max(h);
            }
            let better = match &self.best {
                None => true,
                Some((bm, bg, _, _)) => key_miss < *bm || (key_miss == *bm && gap < *bg),
            };
            if better {
                self.best = Some((key_miss, gap, point.clone(), h));
            }
            return Ok(());
        }
        let (lo, hi) = self.axes[k];
        if k + 1 == self.axes.len() {
            // the last coordinate is pinned by the others
            let i = ((1.0 - partial) / self.step).round() as i64;
            point[k] = i.clamp(lo, hi) as f64 * self.step;
            return self.walk(k + 1, point, partial + point[k]);
        }
        for i in lo..=hi {
            let x = i as f64 * self.step;
            // coordinates are non-negative, so overshooting the sum only grows
            if partial + x > 1.0 + tol + 1e-12 && i > lo {
                break;
            }
            point[k] = x;
            self.walk(k + 1, point, partial + x)?;
        }
        Ok(())
    }
}

/// Exhaustive grid search for the distribution closest in Shannon entropy to
/// the Deng entropy of `m`, in bits.
///
/// The reported regime is classified from the grid alone: `point-feasible`
/// when only one candidate exists, otherwise by where the target falls in the
/// range of candidate entropies.
pub fn grid_oracle(m: &MassFunction, step: f64) -> Result<TransformResult> {
    let n = m.frame().size();
    if n > ORACLE_MAX_FRAME {
        return Err(Error::Capacity(format!(
            "grid oracle supports at most {ORACLE_MAX_FRAME} elements, frame has {n}"
        )));
    }
    if !(step > 0.0 && step <= 0.1) {
        return Err(Error::InvalidStep(step));
    }
    let base = LogBase::BITS;
    let target = deng_entropy(m, base);
    let bounds = m.singleton_bounds();
    let axes: Vec<(i64, i64)> = bounds
        .lower()
        .iter()
        .zip(bounds.upper())
        .map(|(&l, &u)| axis(l, u, step))
        .collect();
    let single = axes.iter().all(|(lo, hi)| lo == hi);
    let mut grid = Grid {
        axes,
        step,
        target: target.value,
        base,
        visited: 0,
        best: None,
        h_min: f64::INFINITY,
        h_max: f64::NEG_INFINITY,
    };
    let mut point = vec![0.0; n];
    grid.walk(0, &mut point, 0.0)?;
    let (_, _, point, _) = grid.best.clone().expect("grid always has a candidate");

    let regime = if single {
        Regime::PointFeasible
    } else if target.value >= grid.h_max {
        Regime::AboveMax
    } else if target.value <= grid.h_min {
        Regime::BelowMin
    } else {
        Regime::Interior
    };
    let achieved = shannon_of(&point, base);
    // Grid points may miss the simplex by up to step / 2, so build the
    // result directly instead of through the validating constructor.
    let distribution = ProbabilityDistribution::from_grid(m.frame().clone(), point);
    Ok(TransformResult {
        distribution,
        target_entropy: target,
        achieved_entropy: EntropyValue {
            value: achieved,
            base,
        },
        gap: (target.value - achieved).abs(),
        regime,
        iterations: grid.visited as usize,
    })
}
