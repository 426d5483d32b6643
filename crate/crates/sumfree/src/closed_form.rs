//! Exact closed forms for the decoded set and its gap statistics.
//!
//! The weights `h(1), h(2), ...` built from gap data turn binary digits
//! into set elements: the element at index `n` is one plus the sum of the
//! weights selected by the bits of `n`. The module also evaluates the
//! Cantor-like weight formula directly from substitution parameters, the
//! star-count closed form, the fast-growth shortcut, and the
//! reflection-window counting identities that pin the star counts at
//! power-of-two indices.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::bijection::SumFreePrefix;
use crate::error::{Error, Result};
use crate::report::Report;
use crate::substitution::SubstitutionParams;

/// Strictly increasing weights where each weight exceeds the sum of all
/// earlier ones, so every natural number has a unique representation and
/// binary digits of the index pick out the weights of an element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumerationSystem {
    weights: Vec<BigUint>,
}

impl NumerationSystem {
    pub fn new(weights: Vec<BigUint>) -> Result<Self> {
        let mut before = BigUint::from(0u32);
        for (index, w) in weights.iter().enumerate() {
            if *w <= before {
                return Err(Error::NotDominated { index });
            }
            before += w;
        }
        Ok(NumerationSystem { weights })
    }

    /// Builds the first `count` weights by summing gap statistics: the
    /// `n`-th weight is the total gap (zeros plus stars) over indices
    /// `1..=2^(n-1)` plus `2^(n-1)`. Both lists must cover that range.
    pub fn from_gap_data(zero_runs: &[u64], star_counts: &[u64], count: usize) -> Result<Self> {
        let needed = if count == 0 { 0 } else { 1u64 << (count - 1) };
        let available = zero_runs.len().min(star_counts.len()) as u64;
        if available < needed {
            return Err(Error::InsufficientData {
                what: "gap statistics",
                needed,
                available,
            });
        }
        let mut weights = Vec::with_capacity(count);
        let mut gap_sum = BigUint::from(0u32);
        let mut upto = 0usize;
        for n in 1..=count {
            let block = 1usize << (n - 1);
            while upto < block {
                gap_sum += zero_runs[upto] + star_counts[upto];
                upto += 1;
            }
            weights.push(&gap_sum + BigUint::from(block));
        }
        NumerationSystem::new(weights)
    }

    pub fn weights(&self) -> &[BigUint] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Largest index this system can evaluate.
    pub fn max_index(&self) -> u64 {
        if self.weights.len() >= 64 {
            u64::MAX
        } else {
            (1u64 << self.weights.len()) - 1
        }
    }

    /// Element at index `n`: one plus the weights selected by the binary
    /// digits of `n`. Index zero gives 1.
    pub fn element(&self, n: u64) -> Result<BigUint> {
        let bits = (64 - n.leading_zeros()) as u64;
        if bits > self.weights.len() as u64 {
            return Err(Error::InsufficientData {
                what: "numeration weights",
                needed: bits,
                available: self.weights.len() as u64,
            });
        }
        let mut value = BigUint::from(1u32);
        for (i, w) in self.weights.iter().enumerate().take(bits as usize) {
            if n >> i & 1 == 1 {
                value += w;
            }
        }
        Ok(value)
    }

    /// Elements at indices `0..count`.
    pub fn elements(&self, count: u64) -> Result<Vec<BigUint>> {
        (0..count).map(|n| self.element(n)).collect()
    }
}

/// Weight formula for the substitution with parameters `(l1, l2, l3)`:
/// `(l1+l2)·T + l1·l3^(n-1) + 3^(n-1) + 2^(n-1)` where
/// `T = Σ_{i=0}^{n-2} l3^i · 2^(n-2-i)`. The sum `T` is the telescoped
/// integer form of `(l3^(n-1) - 2^(n-1)) / (l3 - 2)`, so everything stays
/// in integer arithmetic.
pub fn cantor_like_weight(n: u64, p: &SubstitutionParams) -> BigUint {
    assert!(n >= 1, "weights are indexed from 1");
    let l3 = BigUint::from(p.l3());
    let mut telescoped = BigUint::from(0u32);
    let mut pow3 = BigUint::from(1u32);
    let mut pow2 = BigUint::from(1u32);
    let mut pow_l3 = BigUint::from(1u32);
    for i in 0..n - 1 {
        telescoped += &pow_l3 << (n - 2 - i);
        pow_l3 *= &l3;
        pow3 *= 3u32;
        pow2 <<= 1;
    }
    telescoped * (p.l1() + p.l2()) + pow_l3 * p.l1() + pow3 + pow2
}

/// Star count at index `n >= 1`: `(3^k + 1) / 2` where `k` is the 2-adic
/// valuation of `n`. Odd indices give 1.
pub fn star_count(n: u64) -> BigUint {
    assert!(n >= 1, "star counts are indexed from 1");
    let k = n.trailing_zeros();
    (BigUint::from(3u32).pow(k) + 1u32) / 2u32
}

pub fn star_count_u64(n: u64) -> u64 {
    star_count(n)
        .to_u64()
        .expect("star count exceeds u64 at this index")
}

/// Star counts `1..=count` as machine integers.
pub fn closed_star_counts(count: usize) -> Vec<u64> {
    (1..=count as u64).map(star_count_u64).collect()
}

/// Sum of the star counts over `1..2^m`, in closed form `(3^m - 1) / 2`.
pub fn star_block_sum(m: u32) -> BigUint {
    (BigUint::from(3u32).pow(m) - 1u32) / 2u32
}

/// Element at index `n` of a fast-growing set: when every zero run more
/// than doubles the sum of all runs before it, every star count equals
/// its index and the element collapses to
/// `Σ_{i=1}^{n} run_i + (n+1)(n+2)/2`. The hypothesis is checked for
/// every instance whose run index is at most `n` and the first violation
/// is reported.
pub fn fast_growth_element(zero_runs: &[BigUint], n: u64) -> Result<BigUint> {
    if (zero_runs.len() as u64) < n {
        return Err(Error::InsufficientData {
            what: "zero runs",
            needed: n,
            available: zero_runs.len() as u64,
        });
    }
    let mut total = BigUint::from(0u32);
    for i in 1..n {
        total += &zero_runs[(i - 1) as usize];
        if zero_runs[i as usize] <= &total * 2u32 {
            return Err(Error::FastGrowthViolated {
                index: (i + 1) as usize,
            });
        }
    }
    if n >= 1 {
        total += &zero_runs[(n - 1) as usize];
    }
    Ok(total + (n + 1) * (n + 2) / 2)
}

fn count_open(sums: &[u64], lo: u64, hi: u64) -> u64 {
    let a = sums.partition_point(|&v| v <= lo);
    let b = sums.partition_point(|&v| v < hi);
    (b - a) as u64
}

fn count_half_open(sums: &[u64], lo: u64, hi: u64) -> u64 {
    let a = sums.partition_point(|&v| v <= lo);
    let b = sums.partition_point(|&v| v <= hi);
    (b - a) as u64
}

/// Counts pairwise sums inside the reflection windows at the given scale
/// and checks the three identities they satisfy: the window below the
/// element at index `2^scale - 1` holds as many sums as the window above
/// it, each gap window in the first half matches its mirror in the second
/// half, and the per-gap counts over the first half total
/// `(3^scale - 1)/2`.
///
/// Sums are enumerated by a quadratic pass over the prefix, independent
/// of the sieve that decoding uses. Bounds matter: windows between
/// consecutive elements are open on both sides, while the window above
/// the middle element runs from `middle + 1` exclusive to `2·middle`
/// inclusive. The doubled middle element is itself always a pairwise sum,
/// so a strict upper bound there would undercount the right side at every
/// scale.
///
/// Violation indices: 0 for the below/above pair, `k` for the gap pair at
/// `0 < k < 2^scale`, and `2^scale` for the total.
pub fn verify_reflection_windows(s: &SumFreePrefix, scale: u32) -> Result<Report> {
    let block = 1usize << scale;
    let needed = 2 * block;
    if s.len() < needed {
        return Err(Error::InsufficientData {
            what: "set elements",
            needed: needed as u64,
            available: s.len() as u64,
        });
    }
    let mut elems = Vec::with_capacity(needed);
    for value in &s.elements()[..needed] {
        elems.push(value.to_u64().ok_or_else(|| Error::HorizonOverflow {
            value: value.to_string(),
        })?);
    }
    let middle = elems[block - 1];
    let top = elems[needed - 1];
    let cap = top.max(2 * middle);

    let mut sums = Vec::new();
    for (i, &a) in elems.iter().enumerate() {
        if a > cap - a {
            break;
        }
        for &b in &elems[i..] {
            let v = a + b;
            if v > cap {
                break;
            }
            sums.push(v);
        }
    }
    sums.sort_unstable();
    sums.dedup();

    let mut report = Report::new("reflection", scale as u64);
    let below = count_open(&sums, elems[0], middle);
    let above = count_half_open(&sums, middle + 1, 2 * middle);
    if below != above {
        report.record(0, below, above);
    }
    let mut first_half_total = BigUint::from(0u32);
    for k in 1..block {
        let left = count_open(&sums, elems[k - 1], elems[k]);
        let right = count_open(&sums, elems[block + k - 1], elems[block + k]);
        first_half_total += left;
        if left != right {
            report.record(k as u64, left, right);
        }
    }
    let expected_total = star_block_sum(scale);
    if first_half_total != expected_total {
        report.record(block as u64, expected_total, first_half_total);
    }
    Ok(report)
}
