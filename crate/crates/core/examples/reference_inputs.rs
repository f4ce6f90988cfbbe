//! The two reference inputs: a vacuous mass function and a mixed one.

use bpa_transform::{entropy_match, Frame, MassFunction, DEFAULT_TOLERANCE};

fn main() -> bpa_transform::Result<()> {
    let vacuous = MassFunction::from_labels(
        Frame::new(["w1", "w2", "w3", "w4"])?,
        &[(&["w1", "w2", "w3", "w4"][..], 1.0)],
    )?;
    let mixed = MassFunction::from_labels(
        Frame::new(["w1", "w2", "w3"])?,
        &[
            (&["w1"][..], 0.4),
            (&["w2"][..], 0.05),
            (&["w3"][..], 0.1),
            (&["w1", "w2"][..], 0.1),
            (&["w1", "w3"][..], 0.2),
            (&["w1", "w2", "w3"][..], 0.15),
        ],
    )?;

    for (name, m) in [("vacuous", &vacuous), ("mixed", &mixed)] {
        let r = entropy_match(m, DEFAULT_TOLERANCE)?;
        println!("{name}:");
        println!("  distribution     {:?}", r.distribution.probs());
        println!("  deng entropy     {:.6}", r.target_entropy.value);
        println!("  shannon entropy  {:.6}", r.achieved_entropy.value);
        println!("  gap              {:.6}", r.gap);
        println!("  regime           {}", r.regime);
    }
    Ok(())
}
