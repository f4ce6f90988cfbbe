//! Frames of discernment, focal sets, mass functions and the belief /
//! plausibility pair.
//!
//! Subsets of a frame are bit patterns over element indices, so a frame holds
//! at most [`MAX_FRAME_SIZE`] elements.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported frame.
pub const MAX_FRAME_SIZE: usize = 30;

/// Tolerance applied to mass and probability sums.
pub const SUM_TOLERANCE: f64 = 1e-9;

/// Ordered set of mutually exclusive hypothesis labels.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Frame {
    labels: Arc<[String]>,
}

impl Frame {
    /// Builds a frame; index order follows input order.
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyFrame);
        }
        for (i, label) in labels.iter().enumerate() {
            if label.trim().is_empty() {
                return Err(Error::BlankLabel(i));
            }
            if labels[..i].contains(label) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        if labels.len() > MAX_FRAME_SIZE {
            return Err(Error::FrameTooLarge {
                size: labels.len(),
                max: MAX_FRAME_SIZE,
            });
        }
        Ok(Frame {
            labels: labels.into(),
        })
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The whole frame as a focal set.
    pub fn full_set(&self) -> FocalSet {
        FocalSet(full_mask(self.size()))
    }

    pub fn singleton(&self, index: usize) -> FocalSet {
        assert!(index < self.size(), "index {index} outside frame");
        FocalSet(1 << index)
    }

    /// Resolves labels to a focal set. Repeated labels are merged.
    pub fn subset<S: AsRef<str>>(&self, labels: &[S]) -> Result<FocalSet> {
        let mut bits = 0u32;
        for label in labels {
            let label = label.as_ref();
            let i = self
                .index_of(label)
                .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
            bits |= 1 << i;
        }
        FocalSet::new(bits)
    }

    /// Fails unless every member of `set` is an element of this frame.
    pub fn check(&self, set: FocalSet) -> Result<()> {
        if set.0 & !full_mask(self.size()) != 0 {
            return Err(Error::ForeignSubset {
                bits: set.0 as u64,
                frame_size: self.size(),
            });
        }
        Ok(())
    }

    /// Labels of the members of `set`, in frame order.
    pub fn labels_of(&self, set: FocalSet) -> Vec<&str> {
        set.indices().map(|i| self.label(i)).collect()
    }
}

impl fmt::Debug for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.labels.iter()).finish()
    }
}

fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Non-empty subset of a frame, stored as a bit pattern over element indices.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FocalSet(u32);

impl FocalSet {
    pub fn new(bits: u32) -> Result<Self> {
        if bits == 0 {
            return Err(Error::EmptySetAssignment);
        }
        Ok(FocalSet(bits))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn cardinality(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_singleton(self) -> bool {
        self.0.count_ones() == 1
    }

    pub fn contains(self, index: usize) -> bool {
        index < 32 && self.0 & (1 << index) != 0
    }

    pub fn is_subset_of(self, other: FocalSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: FocalSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Complement within a frame of `n` elements; `None` when `self` is the whole frame.
    pub fn complement(self, n: usize) -> Option<FocalSet> {
        let bits = full_mask(n) & !self.0;
        (bits != 0).then_some(FocalSet(bits))
    }

    /// Member indices in ascending order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |i| bits & (1 << i) != 0)
    }
}

impl fmt::Debug for FocalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.indices()).finish()
    }
}

/// What construction did to the raw entries of a mass function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidationReport {
    pub input_entries: usize,
    pub dropped_zero_entries: usize,
    /// Sum of the masses as given, before renormalization.
    pub input_sum: f64,
    /// True when masses were rescaled to sum to exactly 1.
    pub renormalized: bool,
}

/// Basic probability assignment over a frame.
#[derive(Debug, Clone)]
pub struct MassFunction {
    frame: Frame,
    focal: Vec<(FocalSet, f64)>,
    report: ValidationReport,
}

impl PartialEq for MassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.frame == other.frame && self.focal == other.focal
    }
}

impl MassFunction {
    /// Builds a mass function from `(subset bits, mass)` pairs.
    ///
    /// Zero masses are dropped. A sum within [`SUM_TOLERANCE`] of 1 is
    /// renormalized exactly and noted in [`MassFunction::report`].
    pub fn new<I>(frame: Frame, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, f64)>,
    {
        let mut focal: Vec<(FocalSet, f64)> = Vec::new();
        let mut input_entries = 0;
        let mut dropped = 0;
        let mut seen = std::collections::HashSet::new();
        for (bits, mass) in entries {
            input_entries += 1;
            let set = FocalSet::new(bits)?;
            frame.check(set)?;
            if mass.is_nan() || mass > 1.0 + SUM_TOLERANCE {
                return Err(Error::MassOutOfRange(mass));
            }
            if mass < 0.0 {
                return Err(Error::NegativeMass(mass));
            }
            if !seen.insert(bits) {
                return Err(Error::DuplicateSubset(bits));
            }
            if mass == 0.0 {
                dropped += 1;
                continue;
            }
            focal.push((set, mass));
        }
        let sum: f64 = focal.iter().map(|&(_, m)| m).sum();
        if (sum - 1.0).abs() > SUM_TOLERANCE {
            return Err(Error::MassSum(sum));
        }
        let renormalized = sum != 1.0;
        if renormalized {
            for (_, m) in &mut focal {
                *m /= sum;
            }
        }
        focal.sort_by_key(|&(s, _)| s);
        Ok(MassFunction {
            frame,
            focal,
            report: ValidationReport {
                input_entries,
                dropped_zero_entries: dropped,
                input_sum: sum,
                renormalized,
            },
        })
    }

    /// Builds a mass function from `(labels, mass)` pairs.
    pub fn from_labels<S: AsRef<str>>(frame: Frame, entries: &[(&[S], f64)]) -> Result<Self> {
        let mut raw = Vec::with_capacity(entries.len());
        for (labels, mass) in entries {
            let bits = match frame.subset(labels) {
                Ok(set) => set.bits(),
                Err(Error::EmptySetAssignment) => 0,
                Err(e) => return Err(e),
            };
            raw.push((bits, *mass));
        }
        MassFunction::new(frame, raw)
    }

    /// The Bayesian mass function matching a probability distribution.
    pub fn from_distribution(p: &ProbabilityDistribution) -> Result<Self> {
        MassFunction::new(
            p.frame().clone(),
            p.probs().iter().enumerate().map(|(i, &v)| (1u32 << i, v)),
        )
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// Focal elements with their (strictly positive) masses, ordered by bit pattern.
    pub fn focal_elements(&self) -> &[(FocalSet, f64)] {
        &self.focal
    }

    pub fn report(&self) -> &ValidationReport {
        &self.report
    }

    /// m(A); zero for non-focal sets.
    pub fn mass(&self, set: FocalSet) -> f64 {
        self.focal
            .binary_search_by_key(&set, |&(s, _)| s)
            .map(|i| self.focal[i].1)
            .unwrap_or(0.0)
    }

    /// True when every focal element is a singleton.
    pub fn is_bayesian(&self) -> bool {
        self.focal.iter().all(|(s, _)| s.is_singleton())
    }

    /// Bel(A): total mass of focal sets contained in `a`.
    pub fn belief(&self, a: FocalSet) -> Result<f64> {
        self.frame.check(a)?;
        Ok(self
            .focal
            .iter()
            .filter(|(s, _)| s.is_subset_of(a))
            .map(|&(_, m)| m)
            .fold(0.0, |acc, m| acc + m))
    }

    /// Pl(A): total mass of focal sets meeting `a`.
    pub fn plausibility(&self, a: FocalSet) -> Result<f64> {
        self.frame.check(a)?;
        Ok(self
            .focal
            .iter()
            .filter(|(s, _)| s.intersects(a))
            .map(|&(_, m)| m)
            .fold(0.0, |acc, m| acc + m))
    }

    /// Per-singleton `[Bel({w}), Pl({w})]` intervals.
    pub fn singleton_bounds(&self) -> IntervalConstraints {
        let n = self.frame.size();
        let mut lower = vec![0.0; n];
        let mut upper = vec![0.0; n];
        for &(set, m) in &self.focal {
            if set.is_singleton() {
                lower[set.bits().trailing_zeros() as usize] += m;
            }
            for i in set.indices() {
                upper[i] += m;
            }
        }
        for u in &mut upper {
            *u = u.min(1.0);
        }
        IntervalConstraints {
            frame: self.frame.clone(),
            lower,
            upper,
        }
    }
}

/// Probability distribution over the elements of a frame.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityDistribution {
    frame: Frame,
    probs: Vec<f64>,
}

impl ProbabilityDistribution {
    pub fn new(frame: Frame, probs: Vec<f64>) -> Result<Self> {
        if probs.len() != frame.size() {
            return Err(Error::LengthMismatch {
                expected: frame.size(),
                got: probs.len(),
            });
        }
        for (index, &value) in probs.iter().enumerate() {
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::ProbabilityOutOfRange { index, value });
            }
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > SUM_TOLERANCE {
            return Err(Error::ProbabilitySum(sum));
        }
        Ok(ProbabilityDistribution { frame, probs })
    }

    /// For values computed by this crate's transforms: clamps rounding noise
    /// into [0, 1] without rescaling.
    pub(crate) fn from_computed(frame: Frame, mut probs: Vec<f64>) -> Self {
        debug_assert_eq!(probs.len(), frame.size());
        for p in &mut probs {
            *p = p.clamp(0.0, 1.0);
        }
        debug_assert!(
            (probs.iter().sum::<f64>() - 1.0).abs() <= SUM_TOLERANCE,
            "computed distribution does not sum to 1: {probs:?}"
        );
        ProbabilityDistribution { frame, probs }
    }

    /// Grid points only approximately sum to 1; kept as-is.
    pub(crate) fn from_grid(frame: Frame, probs: Vec<f64>) -> Self {
        ProbabilityDistribution { frame, probs }
    }

    pub fn uniform(frame: Frame) -> Self {
        let n = frame.size();
        ProbabilityDistribution {
            frame,
            probs: vec![1.0 / n as f64; n],
        }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    /// Index of the largest probability; the first one on ties.
    pub fn argmax(&self) -> usize {
        let mut best = 0;
        for (i, &p) in self.probs.iter().enumerate() {
            if p > self.probs[best] {
                best = i;
            }
        }
        best
    }

    /// Largest componentwise absolute difference.
    pub fn max_abs_diff(&self, other: &ProbabilityDistribution) -> f64 {
        self.probs
            .iter()
            .zip(&other.probs)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Lower and upper bounds on each singleton probability.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalConstraints {
    frame: Frame,
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl IntervalConstraints {
    /// Validates `0 <= lower <= upper <= 1` and `sum(lower) <= 1 <= sum(upper)`.
    pub fn new(frame: Frame, lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        let n = frame.size();
        for v in [&lower, &upper] {
            if v.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: v.len(),
                });
            }
        }
        for i in 0..n {
            let (l, u) = (lower[i], upper[i]);
            if !(0.0 <= l && l <= u && u <= 1.0) {
                return Err(Error::InfeasibleBounds(format!(
                    "element {i} has bounds [{l}, {u}]"
                )));
            }
        }
        let lo: f64 = lower.iter().sum();
        let hi: f64 = upper.iter().sum();
        if lo > 1.0 + SUM_TOLERANCE || hi < 1.0 - SUM_TOLERANCE {
            return Err(Error::InfeasibleBounds(format!(
                "lower bounds sum to {lo}, upper bounds sum to {hi}"
            )));
        }
        Ok(IntervalConstraints {
            frame,
            lower,
            upper,
        })
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    /// True when `p` lies in the box up to `tol` per coordinate.
    pub fn contains(&self, p: &[f64], tol: f64) -> bool {
        p.len() == self.lower.len()
            && p.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(&x, (&l, &u))| x >= l - tol && x <= u + tol)
    }
}
