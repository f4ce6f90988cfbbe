//! Seeded random mass functions for experiments and property tests.
//!
//! Algorithm (fixed so that seeds stay meaningful):
//! 1. seed a ChaCha8 generator with the 64-bit seed;
//! 2. draw `focal_count` distinct indices from `0..2^n - 1` uniformly without
//!    replacement; index `i` is the subset with bit pattern `i + 1`;
//! 3. draw `focal_count - 1` uniforms on `[0, 1)`, sort them, and take the
//!    `focal_count` spacings between `0`, the sorted draws and `1` as masses
//!    (a flat Dirichlet sample), redrawing if any spacing is exactly zero;
//! 4. renormalize to sum to 1.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::evidence::{Frame, MassFunction};

/// A uniformly sampled point of the `k - 1` simplex.
pub fn flat_simplex<R: Rng>(rng: &mut R, k: usize) -> Vec<f64> {
    loop {
        let mut cuts: Vec<f64> = (0..k.saturating_sub(1)).map(|_| rng.gen::<f64>()).collect();
        cuts.sort_by(f64::total_cmp);
        cuts.push(1.0);
        let mut prev = 0.0;
        let gaps: Vec<f64> = cuts
            .into_iter()
            .map(|c| {
                let g = c - prev;
                prev = c;
                g
            })
            .collect();
        if gaps.iter().all(|&g| g > 0.0) {
            let total: f64 = gaps.iter().sum();
            return gaps.into_iter().map(|g| g / total).collect();
        }
    }
}

/// A random mass function with exactly `focal_count` focal sets.
pub fn random_bpa(frame: &Frame, focal_count: usize, seed: u64) -> Result<MassFunction> {
    let subsets = (1u64 << frame.size()) - 1;
    if focal_count == 0 || focal_count as u64 > subsets {
        return Err(Error::FocalCountOutOfRange {
            count: focal_count,
            max: subsets,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let chosen = index::sample(&mut rng, subsets as usize, focal_count);
    let masses = flat_simplex(&mut rng, focal_count);
    MassFunction::new(
        frame.clone(),
        chosen.into_iter().map(|i| i as u32 + 1).zip(masses),
    )
}

/// A random Bayesian mass function (every singleton focal).
pub fn random_bayesian(frame: &Frame, seed: u64) -> MassFunction {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let masses = flat_simplex(&mut rng, frame.size());
    MassFunction::new(
        frame.clone(),
        masses.into_iter().enumerate().map(|(i, m)| (1u32 << i, m)),
    )
    .expect("flat simplex sample is a valid assignment")
}
