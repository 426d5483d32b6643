//! Cantor-like substitutions and their gap structure.
//!
//! The substitution with parameters `(l1, l2, l3)` maps
//! `1 -> 1 0^l1 1 0^l2` and `0 -> 0^l3` with `l3 >= 3`. Iterating it on
//! `1` converges to a fixed point whose runs of zeros between consecutive
//! ones have closed-form lengths: the run after the `n`-th one depends
//! only on the 2-adic valuation `k` of `n` and equals
//! `l2 (l3^k - 1)/(l3 - 1) + l1 l3^k`, evaluated here as an integer
//! geometric sum so no division is involved. The same quantity doubles as
//! the zero-label count between consecutive elements of the decoded
//! sum-free set.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use std::fmt;

use crate::error::{Error, Result};
use crate::stream::BitStream;

/// Parameters `(l1, l2, l3)` of a Cantor-like substitution; `l3 >= 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubstitutionParams {
    l1: u32,
    l2: u32,
    l3: u32,
}

impl SubstitutionParams {
    pub fn new(l1: u32, l2: u32, l3: u32) -> Result<Self> {
        if l3 < 3 {
            return Err(Error::ZeroImageTooShort { l3: l3 as u64 });
        }
        Ok(SubstitutionParams { l1, l2, l3 })
    }

    /// Parses the comma-separated form used on the command line, `"3,0,5"`.
    pub fn parse(text: &str) -> Result<Self> {
        let fields: Vec<&str> = text.split(',').collect();
        if fields.len() != 3 {
            return Err(Error::Usage(format!(
                "expected three comma-separated lengths, got {text:?}"
            )));
        }
        let mut values = [0u32; 3];
        for (slot, field) in values.iter_mut().zip(&fields) {
            *slot = field
                .trim()
                .parse()
                .map_err(|_| Error::Usage(format!("bad substitution length {field:?}")))?;
        }
        SubstitutionParams::new(values[0], values[1], values[2])
    }

    pub fn l1(&self) -> u32 {
        self.l1
    }

    pub fn l2(&self) -> u32 {
        self.l2
    }

    pub fn l3(&self) -> u32 {
        self.l3
    }

    /// The fixed point of the substitution as an infinite bit stream.
    pub fn stream(&self) -> SubstitutionStream {
        SubstitutionStream::new(*self)
    }

    /// First `len` symbols of the fixed point.
    pub fn fixed_point_prefix(&self, len: usize) -> Vec<u8> {
        let mut gen = FixedPoint::new(*self);
        gen.grow_to(len);
        gen.buffer[..len.min(gen.buffer.len())].to_vec()
    }

    /// Closed form for the run of zeros after the `n`-th one of the fixed
    /// point, `n >= 1`, depending only on the 2-adic valuation of `n`.
    pub fn zero_run(&self, n: u64) -> BigUint {
        assert!(n >= 1, "runs are indexed from 1");
        let k = n.trailing_zeros();
        let l3 = BigUint::from(self.l3);
        let mut pow = BigUint::from(1u32);
        let mut geo = BigUint::from(0u32);
        for _ in 0..k {
            geo += &pow;
            pow *= &l3;
        }
        geo * self.l2 + pow * self.l1
    }

    /// Zero runs `1..=count` read off the fixed point itself.
    pub fn scan_zero_runs(&self, count: usize) -> Vec<u64> {
        let mut runs = Vec::with_capacity(count);
        let mut stream = self.stream();
        while stream
            .next_bit()
            .expect("substitution streams are infinite")
            != 1
        {}
        let mut current = 0u64;
        while runs.len() < count {
            match stream
                .next_bit()
                .expect("substitution streams are infinite")
            {
                0 => current += 1,
                _ => {
                    runs.push(current);
                    current = 0;
                }
            }
        }
        runs
    }

    /// Whether the parameters satisfy the sufficient inequality pair
    /// `7 l3 >= 4(l1 + l2) + 17` and `l1(l3 - 1) + l2 > 3`, which
    /// guarantees gap domination at every scale.
    pub fn is_admissible(&self) -> bool {
        let (l1, l2, l3) = (self.l1 as u64, self.l2 as u64, self.l3 as u64);
        7 * l3 >= 4 * (l1 + l2) + 17 && l1 * (l3 - 1) + l2 > 3
    }
}

impl fmt::Display for SubstitutionParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.l1, self.l2, self.l3)
    }
}

/// Lazy fixed-point generator. The fixed point `w` satisfies
/// `w = image(w)`, so the buffer is extended by re-reading symbols it
/// already holds; every image has length at least two, which keeps the
/// read pointer strictly behind the write frontier.
struct FixedPoint {
    params: SubstitutionParams,
    buffer: Vec<u8>,
    src: usize,
}

impl FixedPoint {
    fn new(params: SubstitutionParams) -> Self {
        let mut buffer = Vec::new();
        push_image(&mut buffer, 1, &params);
        FixedPoint {
            params,
            buffer,
            src: 1,
        }
    }

    fn grow_to(&mut self, len: usize) {
        while self.buffer.len() < len {
            let symbol = self.buffer[self.src];
            self.src += 1;
            push_image(&mut self.buffer, symbol, &self.params);
        }
    }
}

fn push_image(buffer: &mut Vec<u8>, symbol: u8, p: &SubstitutionParams) {
    if symbol == 1 {
        buffer.push(1);
        buffer.extend(std::iter::repeat_n(0, p.l1 as usize));
        buffer.push(1);
        buffer.extend(std::iter::repeat_n(0, p.l2 as usize));
    } else {
        buffer.extend(std::iter::repeat_n(0, p.l3 as usize));
    }
}

/// The fixed point as a pull-based bit stream; never exhausts.
pub struct SubstitutionStream {
    gen: FixedPoint,
    pos: usize,
}

impl SubstitutionStream {
    pub fn new(params: SubstitutionParams) -> Self {
        SubstitutionStream {
            gen: FixedPoint::new(params),
            pos: 0,
        }
    }
}

impl BitStream for SubstitutionStream {
    fn next_bit(&mut self) -> Result<u8> {
        self.gen.grow_to(self.pos + 1);
        let bit = self.gen.buffer[self.pos];
        self.pos += 1;
        Ok(bit)
    }
}

/// Which clause of the gap-domination condition failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GapClause {
    /// `run[2^m]` must exceed the sum of all earlier runs plus
    /// `2^m + (3^m - 1)/2`.
    Domination,
    /// `run[2^m + k] = run[k]` for `0 < k < 2^m`.
    SelfSimilarity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GapDominationFailure {
    pub scale: u32,
    pub clause: GapClause,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GapDominationReport {
    pub pass: bool,
    pub first_failure: Option<GapDominationFailure>,
}

/// Checks both gap-domination clauses for every scale `1..=max_scale`,
/// reporting the smallest failing `(scale, clause)` pair. `zero_runs[i]`
/// holds the run after the `(i+1)`-th one; the self-similarity clause at
/// the top scale reads indices up to `2^(max_scale+1) - 1`, so that many
/// entries are required.
pub fn check_gap_domination(zero_runs: &[u64], max_scale: u32) -> Result<GapDominationReport> {
    let needed = (1u64 << (max_scale + 1)) - 1;
    if (zero_runs.len() as u64) < needed {
        return Err(Error::InsufficientData {
            what: "zero runs",
            needed,
            available: zero_runs.len() as u64,
        });
    }
    let run = |n: u64| BigUint::from(zero_runs[(n - 1) as usize]);
    for m in 1..=max_scale {
        let block = 1u64 << m;
        let mut before = BigUint::from(0u32);
        for i in 1..block {
            before += run(i);
        }
        let three_m = BigUint::from(3u32).pow(m);
        let bound = before + block + (three_m - 1u32) / 2u32;
        if run(block) <= bound {
            return Ok(GapDominationReport {
                pass: false,
                first_failure: Some(GapDominationFailure {
                    scale: m,
                    clause: GapClause::Domination,
                }),
            });
        }
        for k in 1..block {
            if zero_runs[(block + k - 1) as usize] != zero_runs[(k - 1) as usize] {
                return Ok(GapDominationReport {
                    pass: false,
                    first_failure: Some(GapDominationFailure {
                        scale: m,
                        clause: GapClause::SelfSimilarity,
                    }),
                });
            }
        }
    }
    Ok(GapDominationReport {
        pass: true,
        first_failure: None,
    })
}

/// Zero runs `1..=count` from the closed form, as machine integers.
/// Panics if a run exceeds `u64`; the scales used in tests stay far below
/// that.
pub fn closed_zero_runs(p: &SubstitutionParams, count: usize) -> Vec<u64> {
    (1..=count as u64)
        .map(|n| {
            p.zero_run(n)
                .to_u64()
                .expect("zero run exceeds u64 at this scale")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(l1: u32, l2: u32, l3: u32) -> SubstitutionParams {
        SubstitutionParams::new(l1, l2, l3).unwrap()
    }

    fn prefix_string(p: &SubstitutionParams, len: usize) -> String {
        crate::stream::bit_word_to_string(&p.fixed_point_prefix(len))
    }

    #[test]
    fn fixed_point_prefixes() {
        assert_eq!(
            prefix_string(&params(1, 0, 3), 27),
            "101000101000000000101000101"
        );
        assert_eq!(
            prefix_string(&params(3, 0, 5), 30),
            "100010000000000000001000100000"
        );
        assert_eq!(prefix_string(&params(1, 1, 5), 18), "101000000101000000");
    }

    #[test]
    fn degenerate_image_has_no_zeros() {
        // With l1 = l2 = 0 the image of 1 is "11", so the fixed point is
        // the all-ones sequence.
        let p = params(0, 0, 3);
        assert_eq!(prefix_string(&p, 64), "1".repeat(64));
        assert_eq!(p.scan_zero_runs(10), vec![0; 10]);
    }

    #[test]
    fn l3_must_be_at_least_three() {
        assert!(matches!(
            SubstitutionParams::new(1, 1, 2),
            Err(Error::ZeroImageTooShort { l3: 2 })
        ));
    }

    #[test]
    fn parsing() {
        assert_eq!(SubstitutionParams::parse("3,0,5").unwrap(), params(3, 0, 5));
        assert_eq!(
            SubstitutionParams::parse(" 1, 1, 5").unwrap(),
            params(1, 1, 5)
        );
        assert!(SubstitutionParams::parse("3,0").is_err());
        assert!(SubstitutionParams::parse("3,0,x").is_err());
        assert!(SubstitutionParams::parse("0,0,2").is_err());
    }

    #[test]
    fn closed_zero_run_values() {
        let p305 = params(3, 0, 5);
        assert_eq!(p305.zero_run(1), BigUint::from(3u32));
        assert_eq!(p305.zero_run(2), BigUint::from(15u32));
        assert_eq!(p305.zero_run(6), BigUint::from(15u32));
        assert_eq!(p305.zero_run(8), BigUint::from(375u32));
        assert_eq!(params(1, 1, 5).zero_run(4), BigUint::from(31u32));
        assert_eq!(params(0, 4, 5).zero_run(1), BigUint::from(0u32));
        assert_eq!(params(0, 4, 5).zero_run(2), BigUint::from(4u32));
    }

    #[test]
    fn scanned_runs_match_the_closed_form() {
        for p in [
            params(3, 0, 5),
            params(1, 1, 5),
            params(2, 0, 4),
            params(0, 4, 5),
            params(1, 0, 3),
            params(0, 0, 3),
            params(4, 4, 7),
        ] {
            let scanned = p.scan_zero_runs(128);
            assert_eq!(scanned, closed_zero_runs(&p, 128), "params {p}");
        }
    }

    #[test]
    fn closed_runs_repeat_below_each_power_of_two() {
        let p = params(3, 0, 5);
        for m in 1..=10u64 {
            let block = 1u64 << m;
            for i in 1..block {
                assert_eq!(p.zero_run(block + i), p.zero_run(i));
            }
        }
    }

    #[test]
    fn admissibility_table() {
        assert!(params(3, 0, 5).is_admissible());
        assert!(params(1, 1, 5).is_admissible());
        assert!(params(2, 0, 4).is_admissible());
        assert!(params(0, 4, 5).is_admissible());
        assert!(!params(1, 0, 3).is_admissible());
        assert!(!params(0, 0, 3).is_admissible());
    }

    #[test]
    fn domination_fails_for_the_cantor_parameters() {
        // run[2] = 3 is not greater than run[1] + 2 + 1 = 4.
        let runs = closed_zero_runs(&params(1, 0, 3), 3);
        let report = check_gap_domination(&runs, 1).unwrap();
        assert!(!report.pass);
        assert_eq!(
            report.first_failure,
            Some(GapDominationFailure {
                scale: 1,
                clause: GapClause::Domination,
            })
        );
    }

    #[test]
    fn domination_fails_for_a_geometric_sequence() {
        let runs: Vec<u64> = (0..15).map(|i| 3u64.pow(i)).collect();
        let report = check_gap_domination(&runs, 3).unwrap();
        assert!(!report.pass);
        assert_eq!(report.first_failure.unwrap().scale, 1);
    }

    #[test]
    fn domination_holds_at_scale_six() {
        let runs = closed_zero_runs(&params(3, 0, 5), 127);
        assert!(check_gap_domination(&runs, 6).unwrap().pass);
        assert!(matches!(
            check_gap_domination(&runs, 7),
            Err(Error::InsufficientData { needed: 255, .. })
        ));
    }

    #[test]
    fn admissible_parameters_dominate_at_every_tested_scale() {
        for l1 in 0..=4 {
            for l2 in 0..=4 {
                for l3 in 3..=7 {
                    let p = params(l1, l2, l3);
                    if !p.is_admissible() {
                        continue;
                    }
                    let runs = closed_zero_runs(&p, (1 << 9) - 1);
                    assert!(check_gap_domination(&runs, 8).unwrap().pass, "params {p}");
                }
            }
        }
    }
}
