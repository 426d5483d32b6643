//! Sum-free sets from digit surgery: write the index in base `b`, append
//! a digit 1, and reread the digits in base `2b - 1`.
//!
//! The doubled-minus-one base makes digit addition carry-free for pairs
//! of members, which forces every pairwise sum to end in the digit 2 and
//! never look like a member again. The family comes with a three-state
//! automaton deciding membership from the digits, a full ternary labeling
//! of the positive integers, and the zero-one sequence the labeling
//! induces; for `b = 2` that sequence is the Cantor-like fixed point with
//! lengths (1, 0, 3).

use num_bigint::BigUint;

use crate::bijection::Label;
use crate::digits::DigitWord;
use crate::error::{Error, Result};
use crate::report::Report;
use crate::stream::BitStream;

const MAX_BASE: u32 = (u32::MAX - 1) / 2;

fn checked_base(b: u32) -> Result<u32> {
    if !(2..=MAX_BASE).contains(&b) {
        return Err(Error::BaseOutOfRange {
            base: b,
            min: 2,
            max: MAX_BASE,
        });
    }
    Ok(2 * b - 1)
}

/// Deterministic finite automaton with per-state output bits.
#[derive(Clone, Debug)]
pub struct Dfao {
    names: Vec<String>,
    outputs: Vec<u8>,
    transitions: Vec<Vec<usize>>,
    initial: usize,
    alphabet: u32,
}

impl Dfao {
    /// Membership automaton for the base-change family: reading the base
    /// `2b - 1` digits of `n` most significant first, the final output is
    /// 1 exactly when `n` belongs to the set. State 0 accepts "so far all
    /// digits are below b, last digit was not 1", state 1 the same with a
    /// trailing 1, and state 2 absorbs any word containing a digit
    /// outside `0..b`.
    pub fn base_change(b: u32) -> Result<Dfao> {
        let alphabet = checked_base(b)?;
        let live = |digit: u32| -> usize {
            if digit == 1 {
                1
            } else if digit < b {
                0
            } else {
                2
            }
        };
        let transitions = vec![
            (0..alphabet).map(live).collect::<Vec<usize>>(),
            (0..alphabet).map(live).collect::<Vec<usize>>(),
            vec![2; alphabet as usize],
        ];
        Ok(Dfao {
            names: vec!["q0".into(), "q1".into(), "q2".into()],
            outputs: vec![0, 1, 0],
            transitions,
            initial: 0,
            alphabet,
        })
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    /// Runs the automaton on a digit word, most significant digit first.
    pub fn run(&self, word: &DigitWord) -> Result<u8> {
        let mut state = self.initial;
        for &digit in word.digits() {
            if digit >= self.alphabet {
                return Err(Error::DigitOutOfRange {
                    digit,
                    base: self.alphabet,
                });
            }
            state = self.transitions[state][digit as usize];
        }
        Ok(self.outputs[state])
    }

    /// Plain-text transition table, one row per state.
    pub fn table_string(&self) -> String {
        let mut out = String::new();
        out.push_str("state\toutput");
        for digit in 0..self.alphabet {
            out.push_str(&format!("\t{digit}"));
        }
        out.push('\n');
        for (i, name) in self.names.iter().enumerate() {
            let marker = if i == self.initial { ">" } else { "" };
            out.push_str(&format!("{marker}{name}\t{}", self.outputs[i]));
            for digit in 0..self.alphabet as usize {
                out.push_str(&format!("\t{}", self.names[self.transitions[i][digit]]));
            }
            out.push('\n');
        }
        out
    }

    /// DOT graph with digit ranges collapsed onto shared edges.
    pub fn dot_string(&self) -> String {
        let mut out = String::new();
        out.push_str("digraph dfao {\n  rankdir=LR;\n  start [shape=point];\n");
        for (i, name) in self.names.iter().enumerate() {
            out.push_str(&format!(
                "  {name} [shape=circle, label=\"{name}/{}\"];\n",
                self.outputs[i]
            ));
        }
        out.push_str(&format!("  start -> {};\n", self.names[self.initial]));
        for (i, row) in self.transitions.iter().enumerate() {
            // Group consecutive digits that share a target state.
            let mut digit = 0usize;
            while digit < row.len() {
                let target = row[digit];
                let mut end = digit;
                while end + 1 < row.len() && row[end + 1] == target {
                    end += 1;
                }
                let label = if digit == end {
                    format!("{digit}")
                } else {
                    format!("{digit}-{end}")
                };
                out.push_str(&format!(
                    "  {} -> {} [label=\"{label}\"];\n",
                    self.names[i], self.names[target]
                ));
                digit = end + 1;
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Element at index `n`: digits of `n` in base `b`, an appended 1, read
/// in base `2b - 1`; equivalently `(2b-1) * [(n)_b]_{2b-1} + 1`.
pub fn base_change_element(n: u64, b: u32) -> Result<BigUint> {
    let big = checked_base(b)?;
    let digits = DigitWord::from_value(&BigUint::from(n), b, 0);
    let mut value = BigUint::from(0u32);
    for &d in digits.digits() {
        value = value * big + d;
    }
    Ok(value * big + 1u32)
}

/// Membership test by digit inspection: every base `2b - 1` digit is
/// below `b` and the last digit is 1.
pub fn is_base_change_member(n: u64, b: u32) -> Result<bool> {
    let big = checked_base(b)? as u64;
    if n % big != 1 {
        return Ok(false);
    }
    let mut rest = n;
    while rest > 0 {
        if rest % big >= b as u64 {
            return Ok(false);
        }
        rest /= big;
    }
    Ok(true)
}

/// Ternary label of position `n >= 1`: a member is labeled one, a
/// pairwise sum of members is labeled star, anything else zero. Sums are
/// exactly the positions whose last base `2b - 1` digit is 2.
pub fn classify_position(n: u64, b: u32) -> Result<Label> {
    let big = checked_base(b)? as u64;
    if n >= 2 && n % big == 2 {
        return Ok(Label::Star);
    }
    if is_base_change_member(n, b)? {
        return Ok(Label::One);
    }
    Ok(Label::Zero)
}

/// The zero-one sequence whose decode reproduces the base-change set:
/// walk positions 1, 2, 3, ..., skip the stars, and emit 1 for members
/// and 0 otherwise.
pub struct BaseChangeStream {
    b: u32,
    position: u64,
}

impl BaseChangeStream {
    pub fn new(b: u32) -> Result<Self> {
        checked_base(b)?;
        Ok(BaseChangeStream { b, position: 0 })
    }
}

impl BitStream for BaseChangeStream {
    fn next_bit(&mut self) -> Result<u8> {
        loop {
            self.position += 1;
            match classify_position(self.position, self.b)? {
                Label::Star => continue,
                Label::One => return Ok(1),
                Label::Zero => return Ok(0),
            }
        }
    }
}

/// First `count` bits of the base-change zero-one sequence.
pub fn base_change_word(b: u32, count: usize) -> Result<Vec<u8>> {
    let mut stream = BaseChangeStream::new(b)?;
    (0..count).map(|_| stream.next_bit()).collect()
}

/// Checks the sumset law on `[1, horizon]`: enumerated pairwise sums of
/// members occupy exactly the positions congruent to 2 modulo `2b - 1`,
/// and no member is itself a sum. Membership is decided by the automaton
/// and cross-checked against digit inspection position by position.
pub fn verify_sumset_structure(b: u32, horizon: u64) -> Result<Report> {
    let big = checked_base(b)?;
    let mut report =
        Report::new("sumset", horizon).with_params(serde_json::json!({ "b": b, "base": big }));
    let dfao = Dfao::base_change(b)?;
    let cap = usize::try_from(horizon).map_err(|_| Error::HorizonOverflow {
        value: horizon.to_string(),
    })?;
    let mut members = Vec::new();
    for n in 1..=horizon {
        let by_digits = is_base_change_member(n, b)?;
        let word = DigitWord::from_value(&BigUint::from(n), big, 0);
        let by_dfao = dfao.run(&word)? == 1;
        if by_digits != by_dfao {
            report.record(n, u8::from(by_digits), u8::from(by_dfao));
            continue;
        }
        if by_digits {
            members.push(n);
        }
    }
    let mut is_sum = vec![false; cap + 1];
    for (i, &a) in members.iter().enumerate() {
        for &c in &members[i..] {
            let s = a + c;
            if s > horizon {
                break;
            }
            is_sum[s as usize] = true;
        }
    }
    for n in 1..=horizon {
        let predicted = n >= 2 && n % big as u64 == 2;
        if is_sum[n as usize] != predicted {
            report.record(n, u8::from(predicted), u8::from(is_sum[n as usize]));
        }
        if is_sum[n as usize] && is_base_change_member(n, b)? {
            report.record(n, "not a member", "member and sum");
        }
    }
    Ok(report)
}

/// Element of the generalized family `[(n)_b w]_{2b-1}` for a fixed
/// suffix word `w` over the base `2b - 1` alphabet. The family is
/// sum-free exactly when `w` has nonzero value: two members add to twice
/// the suffix value modulo `(2b-1)^len(w)`, which can only collide with
/// the suffix residue when that value is zero.
pub fn suffixed_base_change_element(n: u64, b: u32, suffix: &[u32]) -> Result<BigUint> {
    let big = checked_base(b)?;
    let mut suffix_value = BigUint::from(0u32);
    for &d in suffix {
        if d >= big {
            return Err(Error::DigitOutOfRange {
                digit: d,
                base: big,
            });
        }
        suffix_value = suffix_value * big + d;
    }
    if suffix_value == BigUint::from(0u32) {
        return Err(Error::ZeroSuffix);
    }
    let digits = DigitWord::from_value(&BigUint::from(n), b, 0);
    let mut value = BigUint::from(0u32);
    for &d in digits.digits() {
        value = value * big + d;
    }
    for &d in suffix {
        value = value * big + d;
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijection::decode;
    use crate::stream::bit_word_to_string;
    use num_traits::ToPrimitive;

    fn elements(b: u32, count: u64) -> Vec<u64> {
        (0..count)
            .map(|n| base_change_element(n, b).unwrap().to_u64().unwrap())
            .collect()
    }

    #[test]
    fn frozen_elements() {
        assert_eq!(elements(2, 8), vec![1, 4, 10, 13, 28, 31, 37, 40]);
        assert_eq!(base_change_element(4, 3).unwrap(), BigUint::from(31u32));
        assert_eq!(base_change_element(2, 3).unwrap(), BigUint::from(11u32));
        assert_eq!(base_change_element(3, 3).unwrap(), BigUint::from(26u32));
        assert_eq!(base_change_element(0, 7).unwrap(), BigUint::from(1u32));
    }

    #[test]
    fn base_bounds() {
        assert!(matches!(
            base_change_element(1, 1),
            Err(Error::BaseOutOfRange { base: 1, .. })
        ));
        assert!(matches!(
            BaseChangeStream::new(0),
            Err(Error::BaseOutOfRange { .. })
        ));
    }

    #[test]
    fn membership_by_digits_matches_enumeration() {
        for b in [2u32, 3, 5] {
            let listed: Vec<u64> = elements(b, 40);
            let top = *listed.last().unwrap();
            let mut found = Vec::new();
            for n in 1..=top {
                if is_base_change_member(n, b).unwrap() {
                    found.push(n);
                }
            }
            assert_eq!(found, listed, "base {b}");
        }
    }

    #[test]
    fn automaton_agrees_with_digit_inspection() {
        for b in [2u32, 3, 4] {
            let dfao = Dfao::base_change(b).unwrap();
            let big = 2 * b - 1;
            for n in 0..2000u64 {
                let word = DigitWord::from_value(&BigUint::from(n), big, 0);
                assert_eq!(
                    dfao.run(&word).unwrap() == 1,
                    is_base_change_member(n, b).unwrap(),
                    "n={n} b={b}"
                );
            }
        }
    }

    #[test]
    fn automaton_rejects_foreign_digits() {
        let dfao = Dfao::base_change(2).unwrap();
        let word = DigitWord::new(vec![1, 7, 1], 10).unwrap();
        assert!(matches!(
            dfao.run(&word),
            Err(Error::DigitOutOfRange { digit: 7, base: 3 })
        ));
    }

    #[test]
    fn automaton_walkthrough() {
        let dfao = Dfao::base_change(2).unwrap();
        let digits_of = |n: u64| DigitWord::from_value(&BigUint::from(n), 3, 0);
        assert_eq!(dfao.run(&digits_of(13)).unwrap(), 1); // 111
        assert_eq!(dfao.run(&digits_of(4)).unwrap(), 1); // 11
        assert_eq!(dfao.run(&digits_of(3)).unwrap(), 0); // 10
        assert_eq!(dfao.run(&digits_of(2)).unwrap(), 0); // lone 2
        assert_eq!(dfao.run(&digits_of(0)).unwrap(), 0); // empty word
    }

    #[test]
    fn table_and_dot_are_stable() {
        let dfao = Dfao::base_change(2).unwrap();
        let table = dfao.table_string();
        assert_eq!(
            table,
            "state\toutput\t0\t1\t2\n>q0\t0\tq0\tq1\tq2\nq1\t1\tq0\tq1\tq2\nq2\t0\tq2\tq2\tq2\n"
        );
        let dot = dfao.dot_string();
        assert!(dot.contains("q1 [shape=circle, label=\"q1/1\"]"), "{dot}");
        assert!(dot.contains("q2 -> q2 [label=\"0-2\"]"), "{dot}");
    }

    #[test]
    fn labels_partition_positions() {
        for b in [2u32, 3] {
            let big = (2 * b - 1) as u64;
            for n in 1..500u64 {
                let label = classify_position(n, b).unwrap();
                match label {
                    Label::Star => assert_eq!(n % big, 2),
                    Label::One => assert!(is_base_change_member(n, b).unwrap()),
                    Label::Zero => {
                        assert_ne!(n % big, 2);
                        assert!(!is_base_change_member(n, b).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn stream_prefix_is_the_cantor_like_word() {
        let word = base_change_word(2, 27).unwrap();
        assert_eq!(bit_word_to_string(&word), "101000101000000000101000101");
        assert_eq!(base_change_word(2, 1).unwrap(), vec![1]);
    }

    #[test]
    fn decoding_the_stream_recovers_the_set() {
        for b in [2u32, 3, 4] {
            let listed = elements(b, 32);
            let top = *listed.last().unwrap();
            let mut stream = BaseChangeStream::new(b).unwrap();
            let (labels, set) = decode(&mut stream, top as usize).unwrap();
            assert_eq!(set.elements_u64().unwrap(), listed, "base {b}");
            for n in 1..=top {
                assert_eq!(
                    labels.label(n as usize),
                    classify_position(n, b).unwrap(),
                    "label at {n}, base {b}"
                );
            }
        }
    }

    #[test]
    fn consumed_word_indices_map_to_label_positions() {
        // With g = 2b-1 and positions 1-indexed, bit (2b-2)n of the
        // stream is the label at position (2b-1)n + 1, and bit
        // (2b-2)n + i is the label at (2b-1)n + i + 1 shifted past the
        // star at residue 2, for 1 <= i <= 2b-3.
        for b in [2u32, 3, 4] {
            let word = base_change_word(b, 400).unwrap();
            let g = (2 * b - 1) as u64;
            let c = |i: u64| word[i as usize];
            let v = |pos: u64| match classify_position(pos, b).unwrap() {
                Label::One => 1u8,
                Label::Zero => 0u8,
                Label::Star => panic!("position {pos} is a star"),
            };
            for n in 0..40u64 {
                assert_eq!(c((g - 1) * n), v(g * n + 1), "anchor, b={b} n={n}");
                for i in 1..=g - 2 {
                    assert_eq!(c((g - 1) * n + i), v(g * n + i + 2), "b={b} n={n} i={i}");
                }
            }
        }
    }

    #[test]
    fn sumset_structure_small() {
        let report = verify_sumset_structure(2, 5000).unwrap();
        assert!(report.pass, "{:?}", report.violations);
        let report = verify_sumset_structure(3, 5000).unwrap();
        assert!(report.pass, "{:?}", report.violations);
    }

    #[test]
    fn suffixed_families() {
        for n in 0..32u64 {
            assert_eq!(
                suffixed_base_change_element(n, 2, &[1]).unwrap(),
                base_change_element(n, 2).unwrap()
            );
        }
        assert!(matches!(
            suffixed_base_change_element(5, 2, &[0]),
            Err(Error::ZeroSuffix)
        ));
        assert!(matches!(
            suffixed_base_change_element(5, 2, &[]),
            Err(Error::ZeroSuffix)
        ));
        assert!(matches!(
            suffixed_base_change_element(5, 2, &[3]),
            Err(Error::DigitOutOfRange { digit: 3, base: 3 })
        ));

        // Suffix "21" in base 3: the family must stay sum-free.
        let family: Vec<u64> = (0..64)
            .map(|n| {
                suffixed_base_change_element(n, 2, &[2, 1])
                    .unwrap()
                    .to_u64()
                    .unwrap()
            })
            .collect();
        assert_eq!(&family[..3], &[7, 16, 34]);
        let top = *family.last().unwrap();
        let inside: std::collections::HashSet<u64> = family.iter().copied().collect();
        for (i, &a) in family.iter().enumerate() {
            for &c in &family[i..] {
                let s = a + c;
                if s <= top {
                    assert!(!inside.contains(&s), "{a} + {c} hits the family");
                }
            }
        }
    }
}
