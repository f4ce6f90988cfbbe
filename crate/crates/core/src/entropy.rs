//! Shannon entropy of distributions and Deng entropy of mass functions.
//!
//! Deng entropy divides each focal mass by `2^|F| - 1`, the number of
//! non-empty subsets of the focal set, before taking the logarithm:
//!
//! ```text
//! E_d(m) = -Σ m(F) log( m(F) / (2^|F| - 1) )
//! ```
//!
//! On a Bayesian mass function every divisor is 1 and the value coincides
//! with the Shannon entropy of the induced distribution.

use std::fmt;

use crate::error::{Error, Result};
use crate::evidence::{MassFunction, ProbabilityDistribution};

/// Logarithm base for entropy values. Defaults to 2 (bits).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogBase(f64);

impl LogBase {
    pub const BITS: LogBase = LogBase(2.0);
    pub const NATS: LogBase = LogBase(std::f64::consts::E);

    pub fn new(base: f64) -> Result<Self> {
        if base.is_finite() && base > 1.0 {
            Ok(LogBase(base))
        } else {
            Err(Error::InvalidBase(base))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    fn ln(self) -> f64 {
        self.0.ln()
    }
}

impl Default for LogBase {
    fn default() -> Self {
        LogBase::BITS
    }
}

impl fmt::Display for LogBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == LogBase::BITS {
            write!(f, "2 (bits)")
        } else if *self == LogBase::NATS {
            write!(f, "e (nats)")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// A non-negative entropy together with the base it was measured in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyValue {
    pub value: f64,
    pub base: LogBase,
}

impl EntropyValue {
    /// The same quantity expressed in another base.
    pub fn in_base(self, base: LogBase) -> EntropyValue {
        EntropyValue {
            value: self.value * self.base.ln() / base.ln(),
            base,
        }
    }
}

/// Shannon entropy of raw probabilities with `0 log 0 = 0`.
pub fn shannon_of(probs: &[f64], base: LogBase) -> f64 {
    let nats: f64 = probs
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| -p * p.ln())
        .sum();
    // -0.0 and tiny negative noise from exact-zero terms
    (nats / base.ln()).max(0.0)
}

pub fn shannon_entropy(p: &ProbabilityDistribution, base: LogBase) -> EntropyValue {
    EntropyValue {
        value: shannon_of(p.probs(), base),
        base,
    }
}

pub fn deng_entropy(m: &MassFunction, base: LogBase) -> EntropyValue {
    let nats: f64 = m
        .focal_elements()
        .iter()
        .map(|&(set, mass)| {
            let states = (2f64).powi(set.cardinality() as i32) - 1.0;
            -mass * (mass / states).ln()
        })
        .sum();
    EntropyValue {
        value: (nats / base.ln()).max(0.0),
        base,
    }
}
