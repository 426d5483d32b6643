//! Measure base-2 kernel ranks of the gap statistics and the element
//! sequence. Bounded rank across depths is the fingerprint of a 2-regular
//! sequence; a random sequence keeps growing instead.

use num_bigint::BigUint;
use num_traits::Zero;
use sumfree::closed_form::{closed_star_counts, NumerationSystem};
use sumfree::regularity::regularity_profile;
use sumfree::substitution::{closed_zero_runs, SubstitutionParams};

fn main() -> sumfree::Result<()> {
    let params = SubstitutionParams::parse("3,0,5")?;
    let depth = 4;
    let window = 64;
    let len = (1usize << depth) * (window + 1);

    // Index 0 is padded so position n carries the statistic at n.
    let mut mu = vec![BigUint::zero()];
    mu.extend(
        closed_zero_runs(&params, len - 1)
            .iter()
            .map(|&r| BigUint::from(r)),
    );
    let mut alpha = vec![BigUint::zero()];
    alpha.extend(
        closed_star_counts(len - 1)
            .iter()
            .map(|&c| BigUint::from(c)),
    );

    let weights: Vec<_> = (1..=11u64)
        .map(|n| sumfree::closed_form::cantor_like_weight(n, &params))
        .collect();
    let elements = NumerationSystem::new(weights)?.elements(len as u64)?;

    println!("kernel ranks by depth (window {window}) for {params}:");
    println!(
        "  zero runs:   {:?}",
        regularity_profile(&mu, 2, depth, window)?
    );
    println!(
        "  star counts: {:?}",
        regularity_profile(&alpha, 2, depth, window)?
    );
    println!(
        "  elements:    {:?}",
        regularity_profile(&elements, 2, depth, window)?
    );

    // A pseudorandom control sequence has no such structure: its kernel
    // windows stay independent and the rank tracks the member count.
    let mut state = 0x2545F4914F6CDD1Du64;
    let control: Vec<BigUint> = (0..len)
        .map(|_| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            BigUint::from(state % 1000)
        })
        .collect();
    println!(
        "  random:      {:?}",
        regularity_profile(&control, 2, depth, window)?
    );
    Ok(())
}
