//! Comparison table and CSV for one input, plus a parallel batch.

use bpa_transform::{compare, compare_batch, random_bpa, EntropyMatch, Frame};

fn main() -> bpa_transform::Result<()> {
    let (_, m) = bpa_transform::io::parse_bpa(
        "frame: w1 w2 w3\nw1: 0.4\nw2: 0.05\nw3: 0.1\nw1 w2: 0.1\nw1 w3: 0.2\nw1 w2 w3: 0.15\n",
    )?;
    let solver = EntropyMatch::default();

    let mut report = compare(&m, &solver);
    report.name = Some("mixed".into());
    print!("{}", report.to_table(4));
    println!("best: {:?}\n", report.best());
    print!("{}", report.to_csv(4));

    let frame = Frame::new(["a", "b", "c", "d"])?;
    let inputs: Vec<_> = (0..8)
        .map(|seed| random_bpa(&frame, 5, seed))
        .collect::<Result<_, _>>()?;
    println!("\nbatch of {}:", inputs.len());
    for (seed, r) in compare_batch(&inputs, &solver).iter().enumerate() {
        println!("  seed {seed}: best {:?}", r.best());
    }
    Ok(())
}
