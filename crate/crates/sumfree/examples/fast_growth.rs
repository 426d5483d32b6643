//! When zero runs grow fast enough, every star lands inside the current gap
//! and the elements follow a simple partial-sum formula with a triangular
//! correction term.

use num_bigint::BigUint;
use sumfree::bijection::decode;
use sumfree::closed_form::fast_growth_element;
use sumfree::stream::{word_from_gaps, WordStream};

fn main() -> sumfree::Result<()> {
    // Geometric runs: 1, 3, 9, 27, ... between consecutive ones.
    let runs: Vec<BigUint> = (0..15u32).map(|i| BigUint::from(3u32).pow(i)).collect();
    println!("geometric zero runs, first elements by the formula:");
    let mut formula = Vec::new();
    for n in 0..=15u64 {
        let e = fast_growth_element(&runs, n)?;
        if n <= 8 {
            println!("  S_{n} = {e}");
        }
        formula.push(e);
    }

    // The same set, decoded from the literal bit word. The horizon must
    // reach S_15, so the sieve does real work here.
    let gaps: Vec<usize> = (0..15u32).map(|i| 3usize.pow(i)).collect();
    let word = word_from_gaps(&gaps);
    let horizon = 7_174_589;
    let mut stream = WordStream::then_zeros(word);
    let (_, set) = decode(&mut stream, horizon)?;
    assert_eq!(set.elements(), formula);
    println!(
        "decode to {horizon} confirms all 16 elements, ending at S_15 = {}",
        formula[15]
    );

    // Runs that grow too slowly violate the hypothesis and are rejected.
    let slow = vec![BigUint::from(1u32); 4];
    match fast_growth_element(&slow, 3) {
        Err(e) => println!("constant runs are rejected: {e}"),
        Ok(v) => unreachable!("constant runs accepted: {v}"),
    }
    Ok(())
}
