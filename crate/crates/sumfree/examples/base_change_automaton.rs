//! The digit-rewriting family: read an index in base b, reinterpret its
//! digits in base 2b-1 with a trailing 1, and land on a sum-free set whose
//! membership a three-state automaton recognizes.

use sumfree::base_change::{base_change_element, base_change_word, is_base_change_member, Dfao};
use sumfree::bijection::decode;
use sumfree::digits::DigitWord;
use sumfree::stream::bit_word_to_string;
use sumfree::substitution::SubstitutionParams;

fn main() -> sumfree::Result<()> {
    let b = 3;
    println!(
        "base change b = {b} (digits reinterpreted in base {})",
        2 * b - 1
    );
    for n in 0..8u64 {
        println!("  element {n} = {}", base_change_element(n, b)?);
    }

    // Membership needs only the base-(2b-1) digits, so a finite automaton
    // decides it. The table rows are states, columns are input digits.
    let dfao = Dfao::base_change(b)?;
    print!("{}", dfao.table_string());
    for value in [11u32, 12, 26, 31, 56] {
        let word = DigitWord::from_value(&value.into(), 2 * b - 1, 1);
        let member = is_base_change_member(value as u64, b)?;
        println!(
            "  {value} -> output {} (member: {member})",
            dfao.run(&word)?
        );
    }

    // For b = 2 the membership word is itself a substitution fixed point.
    let word = base_change_word(2, 27)?;
    let cantor = SubstitutionParams::new(1, 0, 3)?.fixed_point_prefix(27);
    assert_eq!(word, cantor);
    println!(
        "b = 2 word: {} (a substitution fixed point)",
        bit_word_to_string(&word)
    );

    // Decoding the membership stream reproduces the family directly.
    let mut stream = sumfree::base_change::BaseChangeStream::new(2)?;
    let (_, set) = decode(&mut stream, 100)?;
    println!("decoded b = 2 prefix: {:?}", set.elements_u64()?);
    Ok(())
}
