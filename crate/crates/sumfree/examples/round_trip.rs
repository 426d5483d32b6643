//! Decode bit words into sum-free sets and encode them back, demonstrating
//! that the correspondence loses nothing in either direction.

use sumfree::bijection::{decode, encode};
use sumfree::stream::{bit_word_to_string, parse_bit_word, WordStream};

fn main() -> sumfree::Result<()> {
    // A handful of short words, padded with zeros past their end.
    for text in ["1", "11111", "10110", "111000111", "1010101010"] {
        let word = parse_bit_word(text)?;
        let mut stream = WordStream::then_zeros(word);
        let (labels, set) = decode(&mut stream, 200)?;
        let encoded = encode(set.elements())?;
        println!(
            "{text:>12}  ->  {:?}  ->  {}",
            set.elements_u64()?,
            bit_word_to_string(&encoded)
        );
        // The re-encoding reproduces the consumed prefix bit for bit.
        let consumed = labels.bit_word();
        assert_eq!(encoded, consumed[..encoded.len()]);
        assert!(consumed[encoded.len()..].iter().all(|&b| b == 0));
    }

    // Sets can also be encoded without ever seeing a stream.
    let elements: Vec<_> = [1u32, 4, 10, 13].iter().map(|&e| e.into()).collect();
    let word = encode(&elements)?;
    println!(
        "{:?} encodes to {}",
        [1, 4, 10, 13],
        bit_word_to_string(&word)
    );
    Ok(())
}
