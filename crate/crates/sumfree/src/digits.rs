//! Positional digit words and the two digit-level helpers the rest of the
//! crate leans on: fixed-width binary complements and the Thue-Morse
//! sequence in its `t(0) = 1` form.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::fmt;

use crate::error::{Error, Result};

/// A digit word in a fixed base, most significant digit first.
///
/// The canonical word for a value has no leading zero; the canonical word
/// for zero is empty. A minimum length may be requested, in which case the
/// word is zero-padded on the left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigitWord {
    digits: Vec<u32>,
    base: u32,
}

impl DigitWord {
    /// Wraps an explicit digit list, rejecting digits outside `0..base`.
    pub fn new(digits: Vec<u32>, base: u32) -> Result<Self> {
        if base < 2 {
            return Err(Error::BaseOutOfRange {
                base,
                min: 2,
                max: u32::MAX,
            });
        }
        for &d in &digits {
            if d >= base {
                return Err(Error::DigitOutOfRange { digit: d, base });
            }
        }
        Ok(DigitWord { digits, base })
    }

    /// The base-`base` expansion of `n`, left-padded with zeros to
    /// `min_len` digits.
    pub fn from_value(n: &BigUint, base: u32, min_len: usize) -> Self {
        let mut digits: Vec<u32> = Vec::new();
        let big_base = BigUint::from(base);
        let mut rest = n.clone();
        while !rest.is_zero() {
            let digit = (&rest % &big_base).iter_u32_digits().next().unwrap_or(0);
            digits.push(digit);
            rest /= &big_base;
        }
        while digits.len() < min_len {
            digits.push(0);
        }
        digits.reverse();
        DigitWord { digits, base }
    }

    /// The value this word denotes.
    pub fn value(&self) -> BigUint {
        let big_base = BigUint::from(self.base);
        let mut acc = BigUint::zero();
        for &d in &self.digits {
            acc = acc * &big_base + BigUint::from(d);
        }
        acc
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }
}

impl fmt::Display for DigitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.digits {
            match char::from_digit(d, 36) {
                Some(c) => write!(f, "{c}")?,
                None => write!(f, "({d})")?,
            }
        }
        Ok(())
    }
}

/// Value of the bitwise complement of the `m`-digit binary expansion of
/// `n`, so `n + m_complement(n, m) = 2^m - 1`. Requires `n < 2^m`.
pub fn m_complement(n: &BigUint, m: u64) -> Result<BigUint> {
    if n.bits() > m {
        return Err(Error::ComplementTooWide {
            value: n.to_string(),
            m,
        });
    }
    let all_ones = (BigUint::one() << m) - BigUint::one();
    Ok(all_ones - n)
}

/// Thue-Morse sequence with `t(0) = 1`: `t(2n) = t(n)` and
/// `t(2n+1) = 1 - t(n)`, equivalently one minus the parity of the binary
/// digit sum.
pub fn thue_morse(n: u64) -> u8 {
    1 ^ (n.count_ones() as u8 & 1)
}

/// Parity of the binary digit sum of `n` (`1 - thue_morse(n)`).
pub fn digit_sum_parity(n: u64) -> u8 {
    n.count_ones() as u8 & 1
}
