//! Dempster-Shafer mass functions and their transformation into probability
//! distributions.
//!
//! The centerpiece is [`entropy_match`]: pick the distribution inside the
//! singleton `[Bel, Pl]` box whose Shannon entropy is closest to the Deng
//! entropy of the mass function. The classical pignistic, plausibility,
//! relative-belief and proportional transforms live in [`baseline`] for
//! comparison.
//!
//! ```
//! use bpa_transform::{entropy_match, Frame, MassFunction, DEFAULT_TOLERANCE};
//!
//! let frame = Frame::new(["w1", "w2", "w3", "w4"]).unwrap();
//! let full = frame.full_set().bits();
//! let m = MassFunction::new(frame, [(full, 1.0)]).unwrap();
//! let result = entropy_match(&m, DEFAULT_TOLERANCE).unwrap();
//! assert!(result.distribution.probs().iter().all(|&p| (p - 0.25).abs() < 1e-12));
//! ```

pub mod baseline;
pub mod entropy;
pub mod entropy_match;
pub mod error;
pub mod evidence;
pub mod io;
pub mod oracle;
pub mod random;
pub mod report;

pub use baseline::{
    pignistic, plausibility_transform, proportional_transform, relative_belief_transform,
};
pub use entropy::{deng_entropy, shannon_entropy, EntropyValue, LogBase};
pub use entropy_match::{
    entropy_match, feasible_region, max_entropy_point, min_entropy_vertex, EntropyMatch,
    FeasiblePolytope, Regime, TransformResult, DEFAULT_TOLERANCE,
};
pub use error::{Error, Result};
pub use evidence::{
    FocalSet, Frame, IntervalConstraints, MassFunction, ProbabilityDistribution, ValidationReport,
    MAX_FRAME_SIZE,
};
pub use oracle::grid_oracle;
pub use random::random_bpa;
pub use report::{compare, compare_batch, ComparisonReport, Method};
