//! Property tests pitting the sieve decoder against the quadratic reference
//! implementation, plus round-trip laws on randomized inputs.

mod common;

use common::{assert_sum_free, oracle_decode};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sumfree::bijection::{decode, encode};
use sumfree::stream::{Tail, WordStream};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sieve_decoder_matches_the_reference(
        prefix in proptest::collection::vec(0u8..=1, 0..16),
        period in proptest::collection::vec(0u8..=1, 1..16),
        horizon in 1usize..2000,
    ) {
        // Materialize enough of the eventually periodic stream: one bit per
        // position is always sufficient.
        let mut bits = prefix.clone();
        while bits.len() < horizon {
            bits.extend_from_slice(&period);
        }
        let mut stream = WordStream::new(bits.clone(), Tail::Exhaust);
        let (labels, set) = decode(&mut stream, horizon).unwrap();
        let oracle = oracle_decode(&bits, horizon);

        prop_assert_eq!(set.elements_u64().unwrap(), oracle.elements);
        prop_assert_eq!(labels.ternary_string(), oracle.labels);
        prop_assert_eq!(labels.consumed(), oracle.consumed);
    }

    #[test]
    fn decoded_sets_are_sum_free_with_consistent_gaps(
        period in proptest::collection::vec(0u8..=1, 1..24),
        horizon in 1usize..3000,
    ) {
        let mut stream = WordStream::periodic(period);
        let (_, set) = decode(&mut stream, horizon).unwrap();
        let elements = set.elements_u64().unwrap();
        assert_sum_free(&elements);
        for (k, pair) in elements.windows(2).enumerate() {
            prop_assert_eq!(
                pair[1] - pair[0],
                set.zero_runs()[k] + set.star_counts()[k] + 1
            );
        }
    }

    #[test]
    fn reencoding_recovers_the_consumed_prefix(
        prefix in proptest::collection::vec(0u8..=1, 0..12),
        period in proptest::collection::vec(0u8..=1, 1..12),
        horizon in 1usize..2000,
    ) {
        let mut stream = WordStream::new(prefix, Tail::Repeat(period));
        let (labels, set) = decode(&mut stream, horizon).unwrap();
        let encoded = encode(set.elements()).unwrap();
        let consumed = labels.bit_word();
        prop_assert!(encoded.len() <= consumed.len());
        prop_assert_eq!(&consumed[..encoded.len()], &encoded[..]);
        // Bits consumed past the last element produced nothing, so they
        // must all be zero.
        prop_assert!(consumed[encoded.len()..].iter().all(|&b| b == 0));
    }
}

#[test]
fn encode_then_decode_recovers_random_sum_free_sets() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..40 {
        let span = rng.gen_range(20u64..400);
        // Greedy filter: admit each candidate unless it is already a
        // pairwise sum of the kept ones.
        let mut kept: Vec<u64> = Vec::new();
        for n in 1..=span {
            if rng.gen_bool(0.3) && !common::is_pairwise_sum(n, &kept) {
                kept.push(n);
            }
        }
        if kept.is_empty() {
            continue;
        }
        let elements: Vec<num_bigint::BigUint> =
            kept.iter().map(|&e| num_bigint::BigUint::from(e)).collect();
        let word = encode(&elements).unwrap();
        let horizon = *kept.last().unwrap() as usize;
        let mut stream = WordStream::new(word, Tail::Exhaust);
        let (_, set) = decode(&mut stream, horizon).unwrap();
        assert_eq!(set.elements_u64().unwrap(), kept);
    }
}

#[test]
fn all_zero_and_all_one_streams_decode_as_expected() {
    let mut zeros = WordStream::periodic(vec![0]);
    let (labels, set) = decode(&mut zeros, 500).unwrap();
    assert!(set.is_empty());
    assert_eq!(labels.consumed(), 500);

    // All ones give the odd numbers: every even position is a double.
    let mut ones = WordStream::periodic(vec![1]);
    let (_, set) = decode(&mut ones, 101).unwrap();
    let odds: Vec<u64> = (0..=50).map(|k| 2 * k + 1).collect();
    assert_eq!(set.elements_u64().unwrap(), odds);
    assert!(set.zero_runs().iter().all(|&r| r == 0));
    assert!(set.star_counts().iter().all(|&s| s == 1));
}
