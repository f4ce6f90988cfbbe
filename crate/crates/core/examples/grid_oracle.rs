//! Brute-force grid search as a reference for the exact solver.

use bpa_transform::{entropy_match, grid_oracle, random_bpa, Frame, DEFAULT_TOLERANCE};

fn main() -> bpa_transform::Result<()> {
    let frame = Frame::new(["a", "b", "c"])?;
    for seed in 0..5 {
        let m = random_bpa(&frame, 4, seed)?;
        let exact = entropy_match(&m, DEFAULT_TOLERANCE)?;
        let grid = grid_oracle(&m, 0.01)?;
        println!(
            "seed {seed}: exact gap {:.5} ({}), grid gap {:.5} at {:?}",
            exact.gap,
            exact.regime,
            grid.gap,
            grid.distribution.probs()
        );
    }
    Ok(())
}
