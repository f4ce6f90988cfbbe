//! Entropy-matching transform.
//!
//! Given a mass function `m`, find the distribution `P` inside the box
//! `Bel({w}) <= P(w) <= Pl({w})` (intersected with the simplex) whose Shannon
//! entropy is as close as possible to the Deng entropy `T` of `m`.
//!
//! Shannon entropy is strictly concave, so over the feasible polytope its
//! range is the interval `[H⁻, H⁺]` where `H⁺` is attained at the unique
//! water-filling point and `H⁻` at some vertex. That gives three regimes:
//!
//! * `T >= H⁺`: the max-entropy point is optimal (`above-max`);
//! * `T <= H⁻`: a min-entropy vertex is optimal (`below-min`);
//! * otherwise a zero gap is attainable. Along the segment from the
//!   min-entropy vertex to the max-entropy point the entropy is concave and
//!   maximal at the far end, hence non-decreasing, so bisection on the
//!   segment parameter finds the unique crossing (`interior`).
//!
//! A Bayesian mass function pins the polytope to a single point
//! (`point-feasible`).

use std::cmp::Ordering;
use std::fmt;

use crate::baseline::pignistic;
use crate::entropy::{deng_entropy, shannon_of, EntropyValue, LogBase};
use crate::error::{Error, Result};
use crate::evidence::{
    Frame, IntervalConstraints, MassFunction, ProbabilityDistribution, MAX_FRAME_SIZE,
    SUM_TOLERANCE,
};

/// Default convergence tolerance on the entropy gap, in units of the log base.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Bisection iteration cap for both the water level and the segment search.
pub const MAX_BISECTION_ITERATIONS: usize = 200;

/// Water-filling stops once the clamped sum is this close to 1.
const WATER_LEVEL_TOLERANCE: f64 = 1e-12;

/// Entropies closer than this are treated as equal when picking a vertex.
const VERTEX_TIE_TOLERANCE: f64 = 1e-12;

/// Node budget for the vertex search.
const VERTEX_SEARCH_BUDGET: u64 = 1 << 26;

/// `{ p : lower <= p <= upper, Σp = 1 }`, known to be non-empty.
#[derive(Debug, Clone, PartialEq)]
pub struct FeasiblePolytope {
    constraints: IntervalConstraints,
}

impl FeasiblePolytope {
    pub fn new(constraints: IntervalConstraints) -> Self {
        FeasiblePolytope { constraints }
    }

    pub fn frame(&self) -> &Frame {
        self.constraints.frame()
    }

    pub fn constraints(&self) -> &IntervalConstraints {
        &self.constraints
    }

    pub fn lower(&self) -> &[f64] {
        self.constraints.lower()
    }

    pub fn upper(&self) -> &[f64] {
        self.constraints.upper()
    }

    /// The single feasible point, if the polytope has collapsed to one.
    pub fn single_point(&self) -> Option<Vec<f64>> {
        let lo: f64 = self.lower().iter().sum();
        let hi: f64 = self.upper().iter().sum();
        if lo >= 1.0 - WATER_LEVEL_TOLERANCE {
            Some(self.lower().to_vec())
        } else if hi <= 1.0 + WATER_LEVEL_TOLERANCE {
            Some(self.upper().to_vec())
        } else {
            None
        }
    }

    /// Box and simplex membership, both up to `tol`.
    pub fn contains(&self, p: &[f64], tol: f64) -> bool {
        self.constraints.contains(p, tol) && (p.iter().sum::<f64>() - 1.0).abs() <= tol
    }
}

/// The polytope cut out by the singleton belief/plausibility bounds of `m`.
pub fn feasible_region(m: &MassFunction) -> FeasiblePolytope {
    let region = FeasiblePolytope::new(m.singleton_bounds());
    // BetP always satisfies Bel <= BetP <= Pl.
    assert!(
        region.contains(pignistic(m).probs(), SUM_TOLERANCE),
        "singleton bounds exclude the pignistic point"
    );
    region
}

/// Water-filling: `p_i = clamp(c, lower_i, upper_i)` with `Σp = 1`.
/// Returns the point and the number of bisection steps on `c`.
fn water_fill(lower: &[f64], upper: &[f64]) -> (Vec<f64>, usize) {
    let fill = |c: f64| -> Vec<f64> {
        lower
            .iter()
            .zip(upper)
            .map(|(&l, &u)| c.clamp(l, u))
            .collect()
    };
    let mut lo = lower.iter().copied().fold(f64::INFINITY, f64::min);
    let mut hi = upper.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut c = 0.5 * (lo + hi);
    let mut iterations = 0;
    while iterations < MAX_BISECTION_ITERATIONS {
        iterations += 1;
        c = 0.5 * (lo + hi);
        let s: f64 = fill(c).iter().sum();
        if (s - 1.0).abs() <= WATER_LEVEL_TOLERANCE {
            break;
        }
        if s < 1.0 {
            lo = c;
        } else {
            hi = c;
        }
    }
    let mut p = fill(c);

    // Solve for the level exactly over the unclamped coordinates.
    let free: Vec<usize> = (0..p.len())
        .filter(|&i| lower[i] < c && c < upper[i])
        .collect();
    if !free.is_empty() {
        let fixed: f64 = (0..p.len())
            .filter(|i| !free.contains(i))
            .map(|i| p[i])
            .sum();
        let level = (1.0 - fixed) / free.len() as f64;
        if free.iter().all(|&i| lower[i] <= level && level <= upper[i]) {
            for &i in &free {
                p[i] = level;
            }
        }
    }
    (p, iterations)
}

/// The unique Shannon-entropy maximizer over the polytope.
pub fn max_entropy_point(region: &FeasiblePolytope) -> ProbabilityDistribution {
    let p = match region.single_point() {
        Some(p) => p,
        None => water_fill(region.lower(), region.upper()).0,
    };
    ProbabilityDistribution::from_computed(region.frame().clone(), p)
}

/// Lexicographic order on coordinate vectors, ascending index order.
fn lex_cmp(a: &[f64], b: &[f64]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.partial_cmp(y).unwrap_or(Ordering::Equal) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

struct VertexSearch<'a> {
    lower: &'a [f64],
    upper: &'a [f64],
    base: LogBase,
    best: Option<(Vec<f64>, f64)>,
    nodes: u64,
}

impl VertexSearch<'_> {
    fn offer(&mut self, p: &[f64]) {
        let h = shannon_of(p, self.base);
        let better = match &self.best {
            None => true,
            Some((q, hq)) => {
                h < hq - VERTEX_TIE_TOLERANCE
                    || ((h - hq).abs() <= VERTEX_TIE_TOLERANCE && lex_cmp(p, q) == Ordering::Less)
            }
        };
        if better {
            self.best = Some((p.to_vec(), h));
        }
    }

    /// Fixes every coordinate except `free` at a bound and lets `free` absorb
    /// the remainder. `rest_min[k]` / `rest_max[k]` bound the sum of
    /// `others[k..]`.
    #[allow(clippy::too_many_arguments)]
    fn descend(
        &mut self,
        free: usize,
        others: &[usize],
        rest_min: &[f64],
        rest_max: &[f64],
        k: usize,
        partial: f64,
        p: &mut Vec<f64>,
    ) -> Result<()> {
        self.nodes += 1;
        if self.nodes > VERTEX_SEARCH_BUDGET {
            return Err(Error::Capacity(format!(
                "vertex search exceeded {VERTEX_SEARCH_BUDGET} nodes"
            )));
        }
        let (lf, uf) = (self.lower[free], self.upper[free]);
        let eps = WATER_LEVEL_TOLERANCE;
        if partial + rest_min[k] > 1.0 - lf + eps || partial + rest_max[k] < 1.0 - uf - eps {
            return Ok(());
        }
        if k == others.len() {
            p[free] = (1.0 - partial).clamp(lf, uf);
            self.offer(p);
            return Ok(());
        }
        let i = others[k];
        let (l, u) = (self.lower[i], self.upper[i]);
        p[i] = l;
        self.descend(free, others, rest_min, rest_max, k + 1, partial + l, p)?;
        if u > l {
            p[i] = u;
            self.descend(free, others, rest_min, rest_max, k + 1, partial + u, p)?;
        }
        Ok(())
    }
}

/// A Shannon-entropy minimizing vertex of the polytope and its entropy.
///
/// Every vertex of a box-simplex intersection has at most one coordinate
/// strictly inside its bounds, so the search fixes one free coordinate at a
/// time and enumerates bound assignments of the rest, pruning by partial
/// sums. Ties go to the lexicographically smallest vector.
pub fn min_entropy_vertex(
    region: &FeasiblePolytope,
    base: LogBase,
) -> Result<(ProbabilityDistribution, EntropyValue)> {
    let n = region.frame().size();
    if n > MAX_FRAME_SIZE {
        return Err(Error::FrameTooLarge {
            size: n,
            max: MAX_FRAME_SIZE,
        });
    }
    if let Some(p) = region.single_point() {
        let h = shannon_of(&p, base);
        return Ok((
            ProbabilityDistribution::from_computed(region.frame().clone(), p),
            EntropyValue { value: h, base },
        ));
    }
    let mut search = VertexSearch {
        lower: region.lower(),
        upper: region.upper(),
        base,
        best: None,
        nodes: 0,
    };
    let mut p = vec![0.0; n];
    for free in 0..n {
        let others: Vec<usize> = (0..n).filter(|&i| i != free).collect();
        let mut rest_min = vec![0.0; others.len() + 1];
        let mut rest_max = vec![0.0; others.len() + 1];
        for k in (0..others.len()).rev() {
            rest_min[k] = rest_min[k + 1] + search.lower[others[k]];
            rest_max[k] = rest_max[k + 1] + search.upper[others[k]];
        }
        search.descend(free, &others, &rest_min, &rest_max, 0, 0.0, &mut p)?;
    }
    let (p, h) = search
        .best
        .expect("a non-empty polytope has at least one vertex");
    Ok((
        ProbabilityDistribution::from_computed(region.frame().clone(), p),
        EntropyValue { value: h, base },
    ))
}

/// Which part of the attainable entropy range the target fell in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    AboveMax,
    BelowMin,
    Interior,
    PointFeasible,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::AboveMax => "above-max",
            Regime::BelowMin => "below-min",
            Regime::Interior => "interior",
            Regime::PointFeasible => "point-feasible",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Output of the entropy-matching transform (or the grid oracle).
#[derive(Debug, Clone, PartialEq)]
pub struct TransformResult {
    pub distribution: ProbabilityDistribution,
    /// Deng entropy of the input.
    pub target_entropy: EntropyValue,
    /// Shannon entropy of `distribution`.
    pub achieved_entropy: EntropyValue,
    /// `|target - achieved|`.
    pub gap: f64,
    pub regime: Regime,
    pub iterations: usize,
}

impl TransformResult {
    pub(crate) fn new(
        distribution: ProbabilityDistribution,
        target: EntropyValue,
        regime: Regime,
        iterations: usize,
    ) -> Self {
        let achieved = EntropyValue {
            value: shannon_of(distribution.probs(), target.base),
            base: target.base,
        };
        TransformResult {
            distribution,
            target_entropy: target,
            achieved_entropy: achieved,
            gap: (target.value - achieved.value).abs(),
            regime,
            iterations,
        }
    }
}

/// Settings for [`EntropyMatch::run`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyMatch {
    pub tol: f64,
    pub base: LogBase,
}

impl Default for EntropyMatch {
    fn default() -> Self {
        EntropyMatch {
            tol: DEFAULT_TOLERANCE,
            base: LogBase::BITS,
        }
    }
}

impl EntropyMatch {
    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn with_base(mut self, base: LogBase) -> Self {
        self.base = base;
        self
    }

    pub fn run(&self, m: &MassFunction) -> Result<TransformResult> {
        let target = deng_entropy(m, self.base);
        self.solve(&feasible_region(m), target)
    }

    /// Finds the point of `region` whose Shannon entropy is closest to
    /// `target`, which may come from any source. `target` is interpreted in
    /// `self.base`.
    pub fn solve(
        &self,
        region: &FeasiblePolytope,
        target: EntropyValue,
    ) -> Result<TransformResult> {
        let tol = self.tol;
        if !(tol.is_finite() && tol > 0.0) {
            return Err(Error::InvalidTolerance(tol));
        }
        let base = self.base;
        let target = target.in_base(base);
        let frame = region.frame().clone();

        if let Some(p) = region.single_point() {
            let dist = ProbabilityDistribution::from_computed(frame, p);
            return Ok(TransformResult::new(dist, target, Regime::PointFeasible, 0));
        }

        let (top, fill_iterations) = water_fill(region.lower(), region.upper());
        let h_max = shannon_of(&top, base);
        if target.value >= h_max - tol {
            let dist = ProbabilityDistribution::from_computed(frame, top);
            return Ok(TransformResult::new(
                dist,
                target,
                Regime::AboveMax,
                fill_iterations,
            ));
        }

        let (bottom, h_min) = min_entropy_vertex(region, base)?;
        if target.value <= h_min.value + tol {
            return Ok(TransformResult::new(
                bottom,
                target,
                Regime::BelowMin,
                fill_iterations,
            ));
        }

        let bottom = bottom.probs();
        let point = |s: f64| -> Vec<f64> {
            bottom
                .iter()
                .zip(&top)
                .map(|(&v, &w)| v + s * (w - v))
                .collect()
        };
        let entropy_at = |s: f64| shannon_of(&point(s), base);

        // entropy(lo) < target <= entropy(hi)
        let (mut lo, mut hi) = (0.0f64, 1.0f64);
        let (mut h_lo, mut h_hi) = (h_min.value, h_max);
        let mut steps = 0;
        while steps < MAX_BISECTION_ITERATIONS {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            steps += 1;
            let h = entropy_at(mid);
            if h >= target.value {
                hi = mid;
                h_hi = h;
            } else {
                lo = mid;
                h_lo = h;
            }
        }
        let s = if target.value - h_lo < h_hi - target.value {
            lo
        } else {
            hi
        };
        let result = TransformResult::new(
            ProbabilityDistribution::from_computed(frame, point(s)),
            target,
            Regime::Interior,
            fill_iterations + steps,
        );
        if result.gap > tol {
            return Err(Error::NonConvergence {
                tol,
                iterations: steps,
            });
        }
        Ok(result)
    }
}

/// Entropy-matching transform in bits with tolerance `tol`.
pub fn entropy_match(m: &MassFunction, tol: f64) -> Result<TransformResult> {
    EntropyMatch::default().with_tolerance(tol).run(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame(n: usize) -> Frame {
        Frame::new((1..=n).map(|i| format!("w{i}"))).unwrap()
    }

    fn example2() -> MassFunction {
        MassFunction::new(
            frame(3),
            [
                (0b001, 0.4),
                (0b010, 0.05),
                (0b100, 0.1),
                (0b011, 0.1),
                (0b101, 0.2),
                (0b111, 0.15),
            ],
        )
        .unwrap()
    }

    fn simplex(n: usize) -> FeasiblePolytope {
        FeasiblePolytope::new(
            IntervalConstraints::new(frame(n), vec![0.0; n], vec![1.0; n]).unwrap(),
        )
    }

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn region_of_example2() {
        let r = feasible_region(&example2());
        assert!(close(r.lower(), &[0.4, 0.05, 0.1], 1e-12));
        assert!(close(r.upper(), &[0.85, 0.3, 0.45], 1e-12));
        assert!(r.single_point().is_none());
    }

    #[test]
    fn region_of_bayesian_is_a_point() {
        let m = MassFunction::new(frame(2), [(1, 0.7), (2, 0.3)]).unwrap();
        assert_eq!(feasible_region(&m).single_point(), Some(vec![0.7, 0.3]));
    }

    #[test]
    fn max_entropy_points() {
        assert!(close(
            max_entropy_point(&simplex(4)).probs(),
            &[0.25; 4],
            1e-15
        ));
        let p = max_entropy_point(&feasible_region(&example2()));
        assert!(close(p.probs(), &[0.4, 0.3, 0.3], 1e-12));
    }

    #[test]
    fn min_entropy_vertices() {
        let (p, h) = min_entropy_vertex(&simplex(3), LogBase::BITS).unwrap();
        assert_eq!(p.probs(), &[0.0, 0.0, 1.0]);
        assert_eq!(h.value, 0.0);

        // enumerated independently: (0.85, 0.05, 0.1) with entropy 0.747584679824574
        let (p, h) = min_entropy_vertex(&feasible_region(&example2()), LogBase::BITS).unwrap();
        assert!(close(p.probs(), &[0.85, 0.05, 0.1], 1e-12));
        assert!((h.value - 0.747584679824574).abs() < 1e-9);

        let m = MassFunction::new(frame(2), [(1, 0.7), (2, 0.3)]).unwrap();
        let (p, _) = min_entropy_vertex(&feasible_region(&m), LogBase::BITS).unwrap();
        assert_eq!(p.probs(), &[0.7, 0.3]);
    }

    #[test]
    fn vacuous_four_is_uniform() {
        let m = MassFunction::new(frame(4), [(0b1111, 1.0)]).unwrap();
        let r = entropy_match(&m, DEFAULT_TOLERANCE).unwrap();
        assert_eq!(r.regime, Regime::AboveMax);
        assert!(close(r.distribution.probs(), &[0.25; 4], 1e-12));
        assert!((r.gap - (15f64.log2() - 2.0)).abs() < 1e-12);
    }

    #[test]
    fn example2_matches() {
        let r = entropy_match(&example2(), DEFAULT_TOLERANCE).unwrap();
        assert_eq!(r.regime, Regime::AboveMax);
        assert!(close(r.distribution.probs(), &[0.4, 0.3, 0.3], 1e-12));
    }

    #[test]
    fn bayesian_is_point_feasible() {
        let m = MassFunction::new(frame(2), [(1, 0.7), (2, 0.3)]).unwrap();
        let r = entropy_match(&m, DEFAULT_TOLERANCE).unwrap();
        assert_eq!(r.regime, Regime::PointFeasible);
        assert_eq!(r.distribution.probs(), &[0.7, 0.3]);
        assert!(r.gap < 1e-12);
    }

    #[test]
    fn synthetic_targets_cover_every_regime() {
        let region = feasible_region(&example2());
        let solver = EntropyMatch::default();
        let bits = |value| EntropyValue {
            value,
            base: LogBase::BITS,
        };

        let r = solver.solve(&region, bits(1.2)).unwrap();
        assert_eq!(r.regime, Regime::Interior);
        assert!(r.gap <= DEFAULT_TOLERANCE);
        assert!(region.contains(r.distribution.probs(), 1e-9));

        let r = solver.solve(&region, bits(0.5)).unwrap();
        assert_eq!(r.regime, Regime::BelowMin);
        assert!(close(r.distribution.probs(), &[0.85, 0.05, 0.1], 1e-12));
        assert!((r.gap - (0.747584679824574 - 0.5)).abs() < 1e-9);

        let r = solver.solve(&region, bits(2.0)).unwrap();
        assert_eq!(r.regime, Regime::AboveMax);
    }

    #[test]
    fn targets_in_other_bases_are_converted() {
        let region = feasible_region(&example2());
        let nats = EntropyValue {
            value: 1.2 * std::f64::consts::LN_2,
            base: LogBase::NATS,
        };
        let r = EntropyMatch::default().solve(&region, nats).unwrap();
        assert_eq!(r.target_entropy.base, LogBase::BITS);
        assert!((r.achieved_entropy.value - 1.2).abs() < 1e-9);
    }

    #[test]
    fn rejects_bad_tolerance() {
        assert_eq!(
            entropy_match(&example2(), 0.0),
            Err(Error::InvalidTolerance(0.0))
        );
    }
}
