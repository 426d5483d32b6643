//! Empirical regularity evidence: kernel windows, exact integer ranks,
//! recurrence verification, and the mod-2 parity classification.
//!
//! A sequence is k-regular when the family of subsequences
//! `t(k^i n + b)` spans a finitely generated module. No finite
//! computation decides that, so the tooling here materializes the family
//! down to a chosen depth, computes exact ranks of the windows over the
//! rationals, and reports whether the rank has stopped growing. A
//! stabilizing rank is evidence, not proof, and reports always carry the
//! depth and window they used.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::bijection::SumFreePrefix;
use crate::closed_form::cantor_like_weight;
use crate::digits::digit_sum_parity;
use crate::error::{Error, Result};
use crate::report::Report;
use crate::substitution::SubstitutionParams;

/// One kernel subsequence window: entries `t(stride * n + residue)` for
/// `n = 0..window_len`.
#[derive(Clone, Debug)]
pub struct KernelMember {
    pub stride: u64,
    pub residue: u64,
    pub window: Vec<BigInt>,
}

#[derive(Clone, Debug)]
pub struct KernelFamily {
    pub base: u32,
    pub depth: u32,
    pub window: usize,
    pub members: Vec<KernelMember>,
}

impl KernelFamily {
    pub fn windows(&self) -> Vec<Vec<BigInt>> {
        self.members.iter().map(|m| m.window.clone()).collect()
    }
}

/// Materializes every `t(base^i n + b)` window for `i <= depth`,
/// `0 <= b < base^i`, in (i, b) order; member (0, 0) is the original
/// window. The deepest member reads up to index
/// `base^depth * (window + 1) - 1`, so the sequence must be at least that
/// long.
pub fn kernel_family(
    seq: &[BigUint],
    base: u32,
    depth: u32,
    window: usize,
) -> Result<KernelFamily> {
    assert!(base >= 2, "kernel base must be at least 2");
    let deepest_stride = (base as u64).pow(depth);
    let needed = deepest_stride * (window as u64 + 1);
    if (seq.len() as u64) < needed {
        return Err(Error::InsufficientData {
            what: "sequence terms",
            needed,
            available: seq.len() as u64,
        });
    }
    let mut members = Vec::new();
    for i in 0..=depth {
        let stride = (base as u64).pow(i);
        for residue in 0..stride {
            let window_values = (0..window as u64)
                .map(|n| BigInt::from(seq[(stride * n + residue) as usize].clone()))
                .collect();
            members.push(KernelMember {
                stride,
                residue,
                window: window_values,
            });
        }
    }
    Ok(KernelFamily {
        base,
        depth,
        window,
        members,
    })
}

/// Rank of the row vectors over the rationals, computed by fraction-free
/// elimination so every intermediate stays an exact integer. Pivots are
/// the first nonzero entry scanning rows in their given order, which
/// makes the result deterministic.
pub fn rational_rank(rows: &[Vec<BigInt>]) -> Result<usize> {
    if rows.is_empty() {
        return Err(Error::EmptyMatrix);
    }
    let width = rows[0].len();
    for (index, row) in rows.iter().enumerate() {
        if row.len() != width {
            return Err(Error::RaggedMatrix {
                index,
                expected: width,
                actual: row.len(),
            });
        }
    }
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let mut rank = 0usize;
    let mut prev = BigInt::one();
    for col in 0..width {
        if rank == m.len() {
            break;
        }
        let Some(pivot_row) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let (upper, lower) = m.split_at_mut(rank + 1);
        let anchor = &upper[rank];
        let pivot = anchor[col].clone();
        for row in lower.iter_mut() {
            // Fraction-free update: every new entry is a minor of the
            // original matrix divided by the previous pivot, so the
            // division below is exact.
            let lead = row[col].clone();
            for (entry, above) in row.iter_mut().zip(anchor.iter()).skip(col + 1) {
                *entry = (&pivot * &*entry - &lead * above) / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    Ok(rank)
}

/// Kernel rank at each depth `1..=max_depth`. The profile stabilizing is
/// the regularity evidence callers look for.
pub fn regularity_profile(
    seq: &[BigUint],
    base: u32,
    max_depth: u32,
    window: usize,
) -> Result<Vec<usize>> {
    let mut ranks = Vec::with_capacity(max_depth as usize);
    for depth in 1..=max_depth {
        let family = kernel_family(seq, base, depth, window)?;
        ranks.push(rational_rank(&family.windows())?);
    }
    Ok(ranks)
}

/// Which recurrence system to verify. Indices are 1-based throughout:
/// `runs[0]` is the statistic at index 1.
pub enum RecurrenceCheck<'a> {
    /// Zero runs of a substitution fixed point: `run(2n) = l3*run(n) + l2`
    /// and `run(2n+1) = l1`.
    ZeroRuns {
        runs: &'a [u64],
        params: SubstitutionParams,
    },
    /// Star counts of any decoded prefix with dominating gaps:
    /// `count(2n) = 3*count(n) - 1` and `count(2n+1) = 1`.
    StarCounts { counts: &'a [u64] },
    /// Partial-sum identity tying elements to gap statistics:
    /// `S_n = Σ_{i<=n} run_i + Σ_{i<=n} count_i + (n+1)`.
    PartialSums {
        elements: &'a [BigUint],
        runs: &'a [u64],
        counts: &'a [u64],
    },
}

/// Checks every recurrence instance with base index at most `n`,
/// reporting each violating index with the value the recurrence predicts.
pub fn verify_recurrences(check: &RecurrenceCheck<'_>, n: u64) -> Result<Report> {
    match check {
        RecurrenceCheck::ZeroRuns { runs, params } => {
            let needed = 2 * n;
            if (runs.len() as u64) < needed {
                return Err(Error::InsufficientData {
                    what: "zero runs",
                    needed,
                    available: runs.len() as u64,
                });
            }
            let mut report = Report::new("zero-run-recurrence", n)
                .with_params(serde_json::json!({ "subst": params.to_string() }));
            let value = |i: u64| runs[(i - 1) as usize];
            for base in 1..=n {
                let doubled = value(base) as u128 * params.l3() as u128 + params.l2() as u128;
                if value(2 * base) as u128 != doubled {
                    report.record(2 * base, doubled, value(2 * base));
                }
                if 2 * base < runs.len() as u64 && value(2 * base + 1) != params.l1() as u64 {
                    report.record(2 * base + 1, params.l1(), value(2 * base + 1));
                }
            }
            Ok(report)
        }
        RecurrenceCheck::StarCounts { counts } => {
            let needed = 2 * n;
            if (counts.len() as u64) < needed {
                return Err(Error::InsufficientData {
                    what: "star counts",
                    needed,
                    available: counts.len() as u64,
                });
            }
            let mut report = Report::new("star-count-recurrence", n);
            let value = |i: u64| counts[(i - 1) as usize];
            for base in 1..=n {
                let doubled = value(base) as u128 * 3 - 1;
                if value(2 * base) as u128 != doubled {
                    report.record(2 * base, doubled, value(2 * base));
                }
                if 2 * base < counts.len() as u64 && value(2 * base + 1) != 1 {
                    report.record(2 * base + 1, 1, value(2 * base + 1));
                }
            }
            Ok(report)
        }
        RecurrenceCheck::PartialSums {
            elements,
            runs,
            counts,
        } => {
            if (elements.len() as u64) < n + 1 {
                return Err(Error::InsufficientData {
                    what: "set elements",
                    needed: n + 1,
                    available: elements.len() as u64,
                });
            }
            let gaps = runs.len().min(counts.len()) as u64;
            if gaps < n {
                return Err(Error::InsufficientData {
                    what: "gap statistics",
                    needed: n,
                    available: gaps,
                });
            }
            let mut report = Report::new("partial-sum-identity", n);
            let mut sum = BigUint::from(1u32);
            for idx in 0..=n {
                if idx > 0 {
                    sum += runs[(idx - 1) as usize] + counts[(idx - 1) as usize] + 1;
                }
                if elements[idx as usize] != sum {
                    report.record(idx, &sum, &elements[idx as usize]);
                }
            }
            Ok(report)
        }
    }
}

/// Classifies element parities by index class modulo 4 and checks every
/// element against the classification. With `e = (1 + l2*l3) mod 2`, the
/// parity of the element at index `4n + j` is `c_j + e*s(n) mod 2` where
/// `s` is the binary digit-sum parity and `c_j` is built from the
/// parities of the first two weights; `e = 0` makes each class constant.
/// Requires parameters that pass the admissibility inequalities, since
/// the law is meaningless without dominating gaps.
pub fn parity_profile(s: &SumFreePrefix, p: &SubstitutionParams, n: u64) -> Result<Report> {
    if !p.is_admissible() {
        return Err(Error::Usage(format!(
            "parity classification requires admissible substitution parameters, got {p}"
        )));
    }
    let needed = 4 * n + 4;
    if (s.len() as u64) < needed {
        return Err(Error::InsufficientData {
            what: "set elements",
            needed,
            available: s.len() as u64,
        });
    }
    let h1 = u8::from(cantor_like_weight(1, p).bit(0));
    let h2 = u8::from(cantor_like_weight(2, p).bit(0));
    let e = ((1 + p.l2() as u64 * p.l3() as u64) % 2) as u8;
    let classes: Vec<u8> = (0..4u8)
        .map(|j| (1 + (j >> 1) * h2 + (j & 1) * h1) % 2)
        .collect();
    let mut report = Report::new("parity", n).with_params(serde_json::json!({
        "subst": p.to_string(),
        "mode": if e == 0 { "constant" } else { "digit-sum" },
        "classes": classes,
    }));
    for idx in 0..needed {
        let block = idx / 4;
        let j = (idx % 4) as usize;
        let predicted = (classes[j] + e * digit_sum_parity(block)) % 2;
        let actual = u8::from(s.elements()[idx as usize].bit(0));
        if predicted != actual {
            report.record(idx, predicted, actual);
        }
    }
    Ok(report)
}
