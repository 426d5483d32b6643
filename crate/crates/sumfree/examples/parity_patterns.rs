//! Element parities repeat in congruence classes mod 4, and within a class
//! they are either constant or follow the parity of the index's binary digit
//! sum. Both modes appear among small parameter choices.

use sumfree::digits::digit_sum_parity;
use sumfree::regularity::parity_profile;
use sumfree::substitution::SubstitutionParams;

fn elements(p: &SubstitutionParams, count: u64) -> sumfree::Result<Vec<num_bigint::BigUint>> {
    let bits = 64 - (count - 1).leading_zeros() as u64;
    let weights = (1..=bits)
        .map(|n| sumfree::closed_form::cantor_like_weight(n, p))
        .collect();
    sumfree::closed_form::NumerationSystem::new(weights)?.elements(count)
}

fn main() -> sumfree::Result<()> {
    for text in ["3,0,5", "1,1,5", "2,0,4"] {
        let params = SubstitutionParams::parse(text)?;
        let values = elements(&params, 132)?;
        let parities: Vec<u8> = values.iter().map(|e| (e.bit(0)) as u8).collect();
        println!("{params}: parities of S_0..S_31");
        println!("  {:?}", &parities[..32]);

        let set = sumfree::bijection::SumFreePrefix::from_elements(values)?;
        let report = parity_profile(&set, &params, 32)?;
        let p = report.params.as_ref().unwrap();
        println!("  mode {}, classes {}", p["mode"], p["classes"]);
        assert!(report.pass);
    }

    // For 3,0,5 the law collapses to one global rule: the parity of S_n is
    // the complement of the binary digit sum parity of n.
    let params = SubstitutionParams::parse("3,0,5")?;
    let values = elements(&params, 64)?;
    for (n, e) in values.iter().enumerate() {
        assert_eq!(e.bit(0) as u8, 1 ^ digit_sum_parity(n as u64));
    }
    println!("3,0,5 parity equals 1 xor digit-sum-parity for S_0..S_63");
    Ok(())
}
