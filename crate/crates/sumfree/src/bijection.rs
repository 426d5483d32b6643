//! The bijection between zero-one sequences and sum-free sets.
//!
//! [`decode`] scans positions `1..=horizon` against an incremental sum
//! sieve. A position already known to be a sum of two chosen elements is
//! labeled `*` and consumes nothing; every other position consumes one bit
//! of the stream, and a consumed `1` makes the position an element (all
//! its sums with the current elements, its double included, are then
//! marked ahead). [`encode`] inverts this: it rebuilds the label word from
//! the elements alone and returns it with the stars deleted. Both
//! directions are total on sum-free inputs, and encode is correct on
//! prefixes because any sum below the largest element only involves
//! smaller elements.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use std::fmt;
use std::fs;
use std::path::Path;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::stream::BitStream;

/// Ternary label of a position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Label {
    Zero,
    One,
    Star,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::Zero => "0",
            Label::One => "1",
            Label::Star => "*",
        })
    }
}

/// The full labeling of `1..=horizon` produced by one decode run.
#[derive(Debug)]
pub struct LabeledPrefix {
    horizon: usize,
    stars: BitSet,
    elements: Vec<usize>,
    consumed: u64,
}

impl LabeledPrefix {
    pub fn horizon(&self) -> usize {
        self.horizon
    }

    /// Number of bits pulled from the stream; one per non-star position.
    pub fn consumed(&self) -> u64 {
        self.consumed
    }

    pub fn label(&self, n: usize) -> Label {
        debug_assert!(n >= 1 && n <= self.horizon);
        if self.stars.get(n) {
            Label::Star
        } else if self.elements.binary_search(&n).is_ok() {
            Label::One
        } else {
            Label::Zero
        }
    }

    /// Element positions in increasing order.
    pub fn element_positions(&self) -> &[usize] {
        &self.elements
    }

    /// The label word with stars deleted: exactly the consumed prefix of
    /// the input stream.
    pub fn bit_word(&self) -> Vec<u8> {
        let mut bits = Vec::with_capacity(self.consumed as usize);
        let mut next = self.elements.iter().peekable();
        for n in 1..=self.horizon {
            if self.stars.get(n) {
                continue;
            }
            if next.peek() == Some(&&n) {
                bits.push(1);
                next.next();
            } else {
                bits.push(0);
            }
        }
        bits
    }

    /// The labels as a `0`/`1`/`*` string.
    pub fn ternary_string(&self) -> String {
        (1..=self.horizon)
            .map(|n| match self.label(n) {
                Label::Zero => '0',
                Label::One => '1',
                Label::Star => '*',
            })
            .collect()
    }
}

/// A decoded sum-free prefix: the elements together with per-gap tallies.
/// `zero_runs[k]` and `star_counts[k]` count the `0`- and `*`-labeled
/// positions strictly between elements `k` and `k+1`, so consecutive
/// elements differ by `zero_runs[k] + star_counts[k] + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumFreePrefix {
    elements: Vec<BigUint>,
    zero_runs: Vec<u64>,
    star_counts: Vec<u64>,
}

impl SumFreePrefix {
    /// Wraps a strictly increasing element list with no gap tallies.
    pub fn from_elements(elements: Vec<BigUint>) -> Result<Self> {
        check_ascending(&elements)?;
        Ok(SumFreePrefix {
            elements,
            zero_runs: Vec::new(),
            star_counts: Vec::new(),
        })
    }

    /// Wraps elements plus tallies, enforcing the gap identity
    /// `S[k+1] - S[k] = zero_runs[k] + star_counts[k] + 1`.
    pub fn new(elements: Vec<BigUint>, zero_runs: Vec<u64>, star_counts: Vec<u64>) -> Result<Self> {
        check_ascending(&elements)?;
        let gaps = elements.len().saturating_sub(1);
        if zero_runs.len() != gaps || star_counts.len() != gaps {
            return Err(Error::InsufficientData {
                what: "gap tallies",
                needed: gaps as u64,
                available: zero_runs.len().min(star_counts.len()) as u64,
            });
        }
        for k in 0..gaps {
            let width = &elements[k + 1] - &elements[k];
            if width != BigUint::from(zero_runs[k] + star_counts[k] + 1) {
                return Err(Error::NotAscending { index: k + 1 });
            }
        }
        Ok(SumFreePrefix {
            elements,
            zero_runs,
            star_counts,
        })
    }

    pub fn elements(&self) -> &[BigUint] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Zero-label counts per gap (the sequence often written `mu`).
    pub fn zero_runs(&self) -> &[u64] {
        &self.zero_runs
    }

    /// Star-label counts per gap (the sequence often written `alpha`).
    pub fn star_counts(&self) -> &[u64] {
        &self.star_counts
    }

    /// Elements as machine integers, if they all fit.
    pub fn elements_u64(&self) -> Result<Vec<u64>> {
        self.elements
            .iter()
            .map(|e| {
                e.to_u64().ok_or_else(|| Error::HorizonOverflow {
                    value: e.to_string(),
                })
            })
            .collect()
    }
}

fn check_ascending(elements: &[BigUint]) -> Result<()> {
    for i in 1..elements.len() {
        if elements[i] <= elements[i - 1] {
            return Err(Error::NotAscending { index: i });
        }
    }
    Ok(())
}

/// Decodes `horizon` positions of the stream into a sum-free prefix.
///
/// Positions are scanned in increasing order, so a position's star status
/// is settled before it is reached: every sum landing on it comes from two
/// strictly smaller elements. Stream exhaustion is reported with the
/// position that could not be labeled.
pub fn decode<S: BitStream + ?Sized>(
    stream: &mut S,
    horizon: usize,
) -> Result<(LabeledPrefix, SumFreePrefix)> {
    if horizon == 0 {
        return Err(Error::EmptyHorizon);
    }
    let mut sieve = BitSet::new(horizon + 1);
    let mut elements: Vec<usize> = Vec::new();
    let mut zero_runs: Vec<u64> = Vec::new();
    let mut star_counts: Vec<u64> = Vec::new();
    let mut consumed: u64 = 0;
    let mut zeros_pending: u64 = 0;
    let mut stars_pending: u64 = 0;

    for n in 1..=horizon {
        if sieve.get(n) {
            stars_pending += 1;
            continue;
        }
        let bit = stream
            .next_bit()
            .map_err(|_| Error::StreamExhausted { position: n as u64 })?;
        consumed += 1;
        if bit == 0 {
            zeros_pending += 1;
            continue;
        }
        if !elements.is_empty() {
            zero_runs.push(zeros_pending);
            star_counts.push(stars_pending);
        }
        zeros_pending = 0;
        stars_pending = 0;
        for &s in &elements {
            let sum = n + s;
            if sum > horizon {
                break;
            }
            sieve.set(sum);
        }
        if 2 * n <= horizon {
            sieve.set(2 * n);
        }
        elements.push(n);
    }

    let set = SumFreePrefix {
        elements: elements.iter().map(|&e| BigUint::from(e as u64)).collect(),
        zero_runs,
        star_counts,
    };
    let labels = LabeledPrefix {
        horizon,
        stars: sieve,
        elements,
        consumed,
    };
    Ok((labels, set))
}

/// Rebuilds the label word on `1..=max(elements)` from the elements alone
/// and returns it with the stars deleted. Rejects inputs that are not
/// strictly increasing or not sum-free.
pub fn encode(elements: &[BigUint]) -> Result<Vec<u8>> {
    check_ascending(elements)?;
    if elements.is_empty() {
        return Ok(Vec::new());
    }
    let mut small: Vec<usize> = Vec::with_capacity(elements.len());
    for e in elements {
        small.push(e.to_usize().ok_or_else(|| Error::HorizonOverflow {
            value: e.to_string(),
        })?);
    }
    let top = *small.last().unwrap();
    let mut sums = BitSet::new(top + 1);
    for (i, &e) in small.iter().enumerate() {
        if sums.get(e) {
            let (a, b) = sum_witness(&small[..i], e);
            return Err(Error::NotSumFree {
                lhs: a.to_string(),
                rhs: b.to_string(),
                sum: e.to_string(),
            });
        }
        for &s in &small[..=i] {
            let sum = e + s;
            if sum > top {
                break;
            }
            sums.set(sum);
        }
    }
    let mut word = Vec::new();
    let mut next = small.iter().peekable();
    for n in 1..=top {
        if sums.get(n) {
            continue;
        }
        if next.peek() == Some(&&n) {
            word.push(1);
            next.next();
        } else {
            word.push(0);
        }
    }
    Ok(word)
}

fn sum_witness(smaller: &[usize], target: usize) -> (usize, usize) {
    for &a in smaller {
        if a * 2 > target {
            break;
        }
        if smaller.binary_search(&(target - a)).is_ok() {
            return (a, target - a);
        }
    }
    (0, target)
}

/// Recomputes the per-gap tallies from a label word. The first consumed
/// bit must be a one (position 1 is never starred), and at least two
/// elements are needed before any gap exists.
pub fn gap_profile(labels: &LabeledPrefix) -> Result<(Vec<u64>, Vec<u64>)> {
    let elements = labels.element_positions();
    if elements.is_empty() || labels.label(1) != Label::One {
        return Err(Error::UnframedPrefix);
    }
    if elements.len() < 2 {
        return Err(Error::InsufficientData {
            what: "elements",
            needed: 2,
            available: elements.len() as u64,
        });
    }
    let mut zero_runs = Vec::with_capacity(elements.len() - 1);
    let mut star_counts = Vec::with_capacity(elements.len() - 1);
    for pair in elements.windows(2) {
        let (mut zeros, mut stars) = (0u64, 0u64);
        for n in pair[0] + 1..pair[1] {
            match labels.label(n) {
                Label::Zero => zeros += 1,
                Label::Star => stars += 1,
                Label::One => unreachable!("elements are consecutive"),
            }
        }
        zero_runs.push(zeros);
        star_counts.push(stars);
    }
    Ok((zero_runs, star_counts))
}

/// Reads a sequence file: one unsigned decimal per line, `#` starts a
/// comment line, blank lines are skipped. The values must be strictly
/// increasing.
pub fn read_sequence_file(path: &Path) -> Result<Vec<BigUint>> {
    parse_sequence(&fs::read_to_string(path)?)
}

pub fn parse_sequence(text: &str) -> Result<Vec<BigUint>> {
    let mut elements: Vec<BigUint> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let value: BigUint = line.parse().map_err(|_| Error::BadSequenceLine {
            line: i + 1,
            text: line.to_string(),
        })?;
        if let Some(last) = elements.last() {
            if &value <= last {
                return Err(Error::NotAscending {
                    index: elements.len(),
                });
            }
        }
        elements.push(value);
    }
    Ok(elements)
}

pub fn sequence_to_string(elements: &[BigUint]) -> String {
    let mut out = String::new();
    for e in elements {
        out.push_str(&e.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stream::{word_from_gaps, Tail, WordStream};

    fn decode_word(word: Vec<u8>, tail: Tail, horizon: usize) -> (LabeledPrefix, SumFreePrefix) {
        decode(&mut WordStream::new(word, tail), horizon).unwrap()
    }

    fn big(values: &[u64]) -> Vec<BigUint> {
        values.iter().map(|&v| BigUint::from(v)).collect()
    }

    #[test]
    fn all_ones_gives_the_odd_numbers() {
        let (labels, set) = decode_word(Vec::new(), Tail::Repeat(vec![1]), 10);
        assert_eq!(set.elements_u64().unwrap(), [1, 3, 5, 7, 9]);
        // Consecutive odd numbers leave room for exactly one starred even
        // position, so every gap is (0 zeros, 1 star).
        assert_eq!(set.zero_runs(), [0, 0, 0, 0]);
        assert_eq!(set.star_counts(), [1, 1, 1, 1]);
        assert_eq!(labels.consumed(), 5);
        assert_eq!(labels.ternary_string(), "1*1*1*1*1*");
    }

    #[test]
    fn a_single_one_gives_a_singleton() {
        let (labels, set) = decode_word(vec![1], Tail::Repeat(vec![0]), 50);
        assert_eq!(set.elements_u64().unwrap(), [1]);
        assert_eq!(labels.consumed(), 49); // only position 2 is starred
        assert_eq!(labels.label(2), Label::Star);
        assert_eq!(labels.label(3), Label::Zero);
    }

    #[test]
    fn cantor_prefix_decodes_to_the_base_change_set() {
        let word = crate::stream::parse_bit_word("101000101000000000101000101").unwrap();
        let (_, set) = decode_word(word, Tail::Exhaust, 27);
        assert_eq!(set.elements_u64().unwrap(), [1, 4, 10, 13]);
    }

    #[test]
    fn exhaustion_carries_the_unlabeled_position() {
        let err = decode(&mut WordStream::new(vec![1, 0], Tail::Exhaust), 10).unwrap_err();
        match err {
            // positions 1 and 3 consume the two bits; 4 cannot be labeled
            Error::StreamExhausted { position } => assert_eq!(position, 4),
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn zero_horizon_is_rejected() {
        assert!(matches!(
            decode(&mut WordStream::periodic(vec![1]), 0),
            Err(Error::EmptyHorizon)
        ));
    }

    #[test]
    fn encode_examples() {
        assert_eq!(
            encode(&big(&[1, 4, 10, 13, 28, 31, 37, 40])).unwrap(),
            crate::stream::parse_bit_word("101000101000000000101000101").unwrap()
        );
        assert_eq!(encode(&big(&[1])).unwrap(), [1]);
        assert_eq!(encode(&big(&[1, 3, 5, 7, 9])).unwrap(), [1, 1, 1, 1, 1]);
        assert_eq!(encode(&[]).unwrap(), Vec::<u8>::new());
    }

    #[test]
    fn encode_rejects_bad_inputs() {
        assert!(matches!(
            encode(&big(&[3, 2])),
            Err(Error::NotAscending { index: 1 })
        ));
        // 1 + 1 = 2 is found before 1 + 2 = 3: doubles count as sums.
        match encode(&big(&[1, 2, 3])) {
            Err(Error::NotSumFree { lhs, rhs, sum }) => {
                assert_eq!((lhs.as_str(), rhs.as_str(), sum.as_str()), ("1", "1", "2"));
            }
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn round_trip_on_a_gap_word() {
        let word = word_from_gaps(&[3, 15, 3]);
        let (labels, set) = decode_word(word.clone(), Tail::Repeat(vec![0]), 29);
        assert_eq!(set.elements_u64().unwrap(), [1, 6, 24, 29]);
        assert_eq!(set.zero_runs(), [3, 15, 3]);
        assert_eq!(set.star_counts(), [1, 2, 1]);
        let encoded = encode(set.elements()).unwrap();
        assert_eq!(encoded, word);
        // The star-deleted label word is the full consumed prefix.
        assert_eq!(labels.bit_word().len() as u64, labels.consumed());
        assert_eq!(&labels.bit_word()[..encoded.len()], &encoded[..]);
    }

    #[test]
    fn gap_profile_matches_the_decoder_tallies() {
        let word = word_from_gaps(&[3, 15, 3, 75]);
        let (labels, set) = decode_word(word, Tail::Repeat(vec![0]), 110);
        let (zeros, stars) = gap_profile(&labels).unwrap();
        assert_eq!(zeros, set.zero_runs());
        assert_eq!(stars, set.star_counts());
    }

    #[test]
    fn gap_profile_preconditions() {
        let (labels, _) = decode_word(vec![0, 1], Tail::Repeat(vec![0]), 20);
        assert!(matches!(gap_profile(&labels), Err(Error::UnframedPrefix)));
        let (labels, _) = decode_word(vec![1], Tail::Repeat(vec![0]), 20);
        assert!(matches!(
            gap_profile(&labels),
            Err(Error::InsufficientData { needed: 2, .. })
        ));
    }

    #[test]
    fn prefix_constructors_enforce_the_gap_identity() {
        assert!(SumFreePrefix::new(big(&[1, 6, 24]), vec![3, 15], vec![1, 2]).is_ok());
        assert!(SumFreePrefix::new(big(&[1, 6, 24]), vec![3, 15], vec![1, 3]).is_err());
        assert!(SumFreePrefix::new(big(&[1, 6]), vec![], vec![]).is_err());
        assert!(matches!(
            SumFreePrefix::from_elements(big(&[1, 1])),
            Err(Error::NotAscending { index: 1 })
        ));
    }

    #[test]
    fn sequence_text_roundtrip() {
        let parsed = parse_sequence("# comment\n1\n6\n\n24\n").unwrap();
        assert_eq!(parsed, big(&[1, 6, 24]));
        assert_eq!(sequence_to_string(&parsed), "1\n6\n24\n");
        assert!(matches!(
            parse_sequence("1\nx\n"),
            Err(Error::BadSequenceLine { line: 2, .. })
        ));
        assert!(matches!(
            parse_sequence("5\n5\n"),
            Err(Error::NotAscending { index: 1 })
        ));
    }
}
