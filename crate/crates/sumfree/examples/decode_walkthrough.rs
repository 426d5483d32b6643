//! Label an integer interval from the default substitution stream and show
//! how the ternary word, the decoded set, and the gap tallies line up.

use sumfree::bijection::decode;
use sumfree::stream::bit_word_to_string;
use sumfree::substitution::SubstitutionParams;

fn main() -> sumfree::Result<()> {
    let params = SubstitutionParams::parse("3,0,5")?;
    let mut bits = params.stream();
    let (labels, set) = decode(&mut bits, 150)?;

    println!("substitution {params}, horizon 150");
    println!("labels 1..=40:  {}", &labels.ternary_string()[..40]);
    println!("elements:       {:?}", set.elements_u64()?);
    println!("zero runs:      {:?}", set.zero_runs());
    println!("star counts:    {:?}", set.star_counts());
    println!("bits consumed:  {}", labels.consumed());

    // Deleting the stars from the label word recovers exactly the bits the
    // decoder consumed, which is the sense in which decoding is invertible.
    let consumed = labels.bit_word();
    println!("consumed bits:  {}...", bit_word_to_string(&consumed[..30]));

    // Each element sits one past its zero and star gap.
    for (k, window) in set.elements_u64()?.windows(2).enumerate() {
        let width = window[1] - window[0];
        assert_eq!(width, set.zero_runs()[k] + set.star_counts()[k] + 1);
    }
    println!("gap identity holds for all {} gaps", set.len() - 1);
    Ok(())
}
