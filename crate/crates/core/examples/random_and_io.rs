//! Seeded random mass functions and the text/JSON document formats.

use bpa_transform::io::{emit_bpa, parse_bpa, BpaDocument};
use bpa_transform::{random_bpa, Frame};

fn main() -> bpa_transform::Result<()> {
    let frame = Frame::new(["a", "b", "c"])?;
    let m = random_bpa(&frame, 4, 42)?;
    assert_eq!(m, random_bpa(&frame, 4, 42)?);

    let text = emit_bpa(&m)?;
    println!("text form:\n{text}");
    let (_, back) = parse_bpa(&text)?;
    println!("text round trip equal: {}", back == m);

    let doc = BpaDocument::from_mass(&m, Some("seed 42".into()));
    let json = doc.to_json();
    println!("\njson form:\n{json}");
    let back = BpaDocument::from_json(&json)?.to_mass()?;
    println!("json round trip equal: {}", back == m);

    match parse_bpa("frame: a b\na c: 1\n") {
        Ok(_) => println!("unexpected success"),
        Err(e) => println!("\nbad input: {e}"),
    }
    Ok(())
}
