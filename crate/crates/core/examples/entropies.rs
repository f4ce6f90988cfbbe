//! Deng and Shannon entropy in different logarithm bases.

use bpa_transform::{
    deng_entropy, shannon_entropy, Frame, LogBase, MassFunction, ProbabilityDistribution,
};

fn main() -> bpa_transform::Result<()> {
    let frame = Frame::new(["a", "b", "c", "d"])?;
    let vacuous = MassFunction::from_labels(frame.clone(), &[(&["a", "b", "c", "d"][..], 1.0)])?;
    let uniform = ProbabilityDistribution::uniform(frame.clone());
    let skewed = ProbabilityDistribution::new(frame, vec![0.7, 0.1, 0.1, 0.1])?;

    for base in [LogBase::BITS, LogBase::NATS, LogBase::new(10.0)?] {
        println!("base {base}:");
        println!(
            "  deng(vacuous)     {:.6}",
            deng_entropy(&vacuous, base).value
        );
        println!(
            "  shannon(uniform)  {:.6}",
            shannon_entropy(&uniform, base).value
        );
        println!(
            "  shannon(skewed)   {:.6}",
            shannon_entropy(&skewed, base).value
        );
    }

    // A Bayesian mass function has equal Deng and Shannon entropy.
    let bayes = MassFunction::from_distribution(&skewed)?;
    println!(
        "\nbayesian: deng = {:.6}, shannon = {:.6}",
        deng_entropy(&bayes, LogBase::BITS).value,
        shannon_entropy(&skewed, LogBase::BITS).value
    );
    Ok(())
}
