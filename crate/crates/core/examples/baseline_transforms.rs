//! The four classical transforms side by side.

use bpa_transform::{
    pignistic, plausibility_transform, proportional_transform, relative_belief_transform, Frame,
    MassFunction,
};

fn main() -> bpa_transform::Result<()> {
    let m = MassFunction::from_labels(
        Frame::new(["x", "y", "z"])?,
        &[
            (&["x"][..], 0.4),
            (&["y"][..], 0.05),
            (&["z"][..], 0.1),
            (&["x", "y"][..], 0.1),
            (&["x", "z"][..], 0.2),
            (&["x", "y", "z"][..], 0.15),
        ],
    )?;

    println!("pignistic        {:?}", pignistic(&m).probs());
    println!("plausibility     {:?}", plausibility_transform(&m).probs());
    println!(
        "relative belief  {:?}",
        relative_belief_transform(&m)?.probs()
    );
    println!("proportional     {:?}", proportional_transform(&m).probs());

    // Relative belief needs some mass on singletons.
    let vacuous = MassFunction::from_labels(Frame::new(["x", "y"])?, &[(&["x", "y"][..], 1.0)])?;
    match relative_belief_transform(&vacuous) {
        Ok(p) => println!("unexpected: {:?}", p.probs()),
        Err(e) => println!("vacuous input: {e}"),
    }
    Ok(())
}
