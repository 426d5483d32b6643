//! Shared reference machinery for the integration tests. The decoder here
//! recomputes everything from first principles with no sieve and no shared
//! code paths, so agreement with the library is meaningful evidence.
#![allow(dead_code)]

use num_bigint::BigUint;

pub struct OracleRun {
    pub elements: Vec<u64>,
    pub labels: String,
    pub consumed: u64,
}

/// Quadratic reference decoder: at every position the star test scans the
/// element list directly.
pub fn oracle_decode(bits: &[u8], horizon: usize) -> OracleRun {
    let mut elements: Vec<u64> = Vec::new();
    let mut labels = String::with_capacity(horizon);
    let mut consumed = 0u64;
    let mut next = 0usize;
    for n in 1..=horizon as u64 {
        if is_pairwise_sum(n, &elements) {
            labels.push('*');
            continue;
        }
        assert!(next < bits.len(), "oracle input ran out at position {n}");
        let bit = bits[next];
        next += 1;
        consumed += 1;
        if bit == 1 {
            elements.push(n);
            labels.push('1');
        } else {
            labels.push('0');
        }
    }
    OracleRun {
        elements,
        labels,
        consumed,
    }
}

pub fn is_pairwise_sum(n: u64, elements: &[u64]) -> bool {
    for &a in elements {
        if 2 * a > n {
            break;
        }
        if elements.binary_search(&(n - a)).is_ok() {
            return true;
        }
    }
    false
}

/// Panics unless the set has no element equal to a sum of two elements
/// (doubles included).
pub fn assert_sum_free(elements: &[u64]) {
    for (k, &e) in elements.iter().enumerate() {
        assert!(
            !is_pairwise_sum(e, elements),
            "element {e} at index {k} is a pairwise sum"
        );
    }
}

pub fn to_u64(values: &[BigUint]) -> Vec<u64> {
    values
        .iter()
        .map(|v| u64::try_from(v).expect("value fits in u64"))
        .collect()
}
