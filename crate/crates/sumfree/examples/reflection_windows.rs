//! At every scale the decoded set splits into a lower and an upper half
//! whose surrounding windows hold pairwise sums in mirrored counts. The
//! verifier recomputes those counts from scratch; here we watch it accept
//! the genuine prefix and catch a corrupted one.

use num_bigint::BigUint;
use sumfree::bijection::{decode, SumFreePrefix};
use sumfree::closed_form::verify_reflection_windows;
use sumfree::substitution::SubstitutionParams;

fn main() -> sumfree::Result<()> {
    let params = SubstitutionParams::parse("3,0,5")?;
    let mut bits = params.stream();
    // 32 elements cover scales 1 through 4; the last one sits at 3246.
    let (_, set) = decode(&mut bits, 3300)?;
    let set = SumFreePrefix::from_elements(set.elements()[..32].to_vec())?;

    for scale in 1..=4 {
        let report = verify_reflection_windows(&set, scale)?;
        println!(
            "scale {scale}: pass = {} (checked {} windows)",
            report.pass,
            (1u64 << scale) + 1
        );
        assert!(report.pass);
    }

    // Nudge an interior element and the counts stop matching.
    let mut broken: Vec<BigUint> = set.elements().to_vec();
    broken[1] += 1u32;
    let broken = SumFreePrefix::from_elements(broken)?;
    let report = verify_reflection_windows(&broken, 2)?;
    println!(
        "after corrupting S_1: pass = {}, first violation at window index {:?}",
        report.pass,
        report.first_violation()
    );
    assert!(!report.pass);

    // Elements at the very top of a scale's range only bound open windows,
    // so a mutation there slips past that scale and is caught a scale later.
    let mut subtle: Vec<BigUint> = set.elements().to_vec();
    subtle[6] += 1u32;
    let subtle = SumFreePrefix::from_elements(subtle)?;
    assert!(verify_reflection_windows(&subtle, 2)?.pass);
    assert!(!verify_reflection_windows(&subtle, 3)?.pass);
    println!("corrupting S_6 escapes scale 2 but is caught at scale 3");
    Ok(())
}
