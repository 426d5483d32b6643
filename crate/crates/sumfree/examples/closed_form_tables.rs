//! Tabulate numeration weights and elements from the closed forms, then
//! cross-check a decoded prefix against them.

use sumfree::bijection::decode;
use sumfree::closed_form::{cantor_like_weight, closed_star_counts, NumerationSystem};
use sumfree::substitution::{closed_zero_runs, SubstitutionParams};

fn main() -> sumfree::Result<()> {
    let params = SubstitutionParams::parse("3,0,5")?;

    // Weight n is the horizon advance caused by flipping bit n of the index:
    // each weight exceeds the sum of all earlier ones, so binary digits of
    // the index pick out a unique element.
    let weights: Vec<_> = (1..=8).map(|n| cantor_like_weight(n, &params)).collect();
    println!("weights for {params}:");
    for (i, w) in weights.iter().enumerate() {
        println!("  h({}) = {w}", i + 1);
    }

    let system = NumerationSystem::new(weights)?;
    let elements = system.elements(16)?;
    println!("first 16 elements: {elements:?}");

    println!("zero runs:   {:?}", closed_zero_runs(&params, 15));
    println!("star counts: {:?}", closed_star_counts(15));

    // The same prefix, decoded directly from the stream.
    let horizon = 150;
    let mut bits = params.stream();
    let (_, set) = decode(&mut bits, horizon)?;
    assert_eq!(&elements[..set.len()], set.elements());
    println!("decode to {horizon} agrees with the closed form");
    Ok(())
}
