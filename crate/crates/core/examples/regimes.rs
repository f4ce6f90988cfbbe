//! How the solver behaves for targets above, below and inside the reachable
//! entropy range of a fixed interval box.

use bpa_transform::{
    feasible_region, max_entropy_point, min_entropy_vertex, shannon_entropy, EntropyMatch,
    EntropyValue, Frame, IntervalConstraints, LogBase,
};

fn main() -> bpa_transform::Result<()> {
    let frame = Frame::new(["w1", "w2", "w3"])?;
    let bounds = IntervalConstraints::new(frame, vec![0.4, 0.05, 0.1], vec![0.85, 0.3, 0.45])?;
    let region = bpa_transform::FeasiblePolytope::new(bounds);

    let top = max_entropy_point(&region);
    let (bottom, h_min) = min_entropy_vertex(&region, LogBase::BITS)?;
    let h_max = shannon_entropy(&top, LogBase::BITS).value;
    println!("max entropy point {:?}  H = {h_max:.4}", top.probs());
    println!(
        "min entropy point {:?}  H = {:.4}\n",
        bottom.probs(),
        h_min.value
    );

    let solver = EntropyMatch::default();
    for target in [2.0, 1.2, 0.5] {
        let r = solver.solve(
            &region,
            EntropyValue {
                value: target,
                base: LogBase::BITS,
            },
        )?;
        println!(
            "target {target:.1}: {:<11} p = {:?}  H = {:.9}  gap = {:.1e}  ({} iterations)",
            r.regime.to_string(),
            r.distribution.probs(),
            r.achieved_entropy.value,
            r.gap,
            r.iterations
        );
    }

    // The same box derived from a mass function.
    let m = bpa_transform::io::parse_bpa(
        "frame: w1 w2 w3\nw1: 0.4\nw2: 0.05\nw3: 0.1\nw1 w2: 0.1\nw1 w3: 0.2\nw1 w2 w3: 0.15\n",
    )?
    .1;
    println!("\nfrom mass function: {:?}", feasible_region(&m).upper());
    Ok(())
}
