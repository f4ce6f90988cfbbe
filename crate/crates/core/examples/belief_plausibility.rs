//! Belief and plausibility of arbitrary subsets, plus the singleton interval box.

use bpa_transform::{Frame, MassFunction};

fn main() -> bpa_transform::Result<()> {
    let frame = Frame::new(["rain", "snow", "clear"])?;
    let m = MassFunction::from_labels(
        frame.clone(),
        &[
            (&["rain"][..], 0.3),
            (&["rain", "snow"][..], 0.5),
            (&["rain", "snow", "clear"][..], 0.2),
        ],
    )?;

    for subset in [
        vec!["rain"],
        vec!["snow"],
        vec!["rain", "snow"],
        vec!["clear"],
    ] {
        let s = frame.subset(&subset)?;
        println!(
            "{:<12} bel = {:.2}  pl = {:.2}",
            subset.join("+"),
            m.belief(s)?,
            m.plausibility(s)?
        );
    }

    let bounds = m.singleton_bounds();
    println!("\nsingleton box:");
    for (i, label) in frame.labels().iter().enumerate() {
        println!(
            "  {label:<6} [{:.2}, {:.2}]",
            bounds.lower()[i],
            bounds.upper()[i]
        );
    }
    Ok(())
}
