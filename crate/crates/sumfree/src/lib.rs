//! Sum-free sets built from zero-one sequences.
//!
//! Cameron's bijection labels each positive integer `n` with one of three
//! symbols while scanning an infinite bit stream `c`:
//!
//! * `1` when `n` joins the set `S`,
//! * `*` when `n` is a sum of two (not necessarily distinct) earlier
//!   elements of `S`,
//! * `0` otherwise.
//!
//! Starred positions are forced, so they consume no input; every other
//! position consumes the next bit of `c`, and a consumed `1` inserts the
//! position into `S`. Deleting the stars from the label word recovers
//! exactly the consumed prefix of `c`, which makes the construction a
//! bijection between zero-one sequences and sum-free sets of positive
//! integers. [`bijection::decode`] and [`bijection::encode`] implement the
//! two directions over a finite horizon.
//!
//! The rest of the crate studies what happens when `c` is the fixed point
//! of a Cantor-like substitution `1 -> 1 0^l1 1 0^l2`, `0 -> 0^l3`
//! ([`substitution`]): the runs of zeros and the star counts between
//! consecutive elements obey short doubling recurrences, the elements
//! themselves are linear combinations of a rapidly growing weight sequence
//! selected by the binary digits of the index ([`closed_form`]), all three
//! sequences exhibit small 2-kernels ([`regularity`]), and a parallel
//! digit-wise construction reproduces the same picture in an arbitrary
//! base with a three-state automaton ([`base_change`]).
//!
//! ```
//! use sumfree::bijection::decode;
//! use sumfree::substitution::SubstitutionParams;
//!
//! let params = SubstitutionParams::new(3, 0, 5).unwrap();
//! let (_, set) = decode(&mut params.stream(), 150).unwrap();
//! let elements: Vec<u64> = set.elements_u64().unwrap();
//! assert_eq!(elements, [1, 6, 24, 29, 110, 115, 133, 138]);
//! ```
//!
//! Everything is exact: element values use arbitrary-precision naturals,
//! and kernel ranks come from fraction-free integer elimination. Decoding
//! itself sieves machine-sized positions below an explicit horizon.

pub mod base_change;
pub mod bijection;
mod bitset;
pub mod cli;
pub mod closed_form;
pub mod digits;
pub mod error;
pub mod regularity;
pub mod report;
pub mod stream;
pub mod substitution;

pub use error::{Error, Result};
