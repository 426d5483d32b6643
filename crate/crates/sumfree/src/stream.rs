//! Bit stream sources feeding the decoder.
//!
//! A [`BitStream`] hands out one bit per pull. Sources backed by a finite
//! word carry an explicit tail rule: either the word repeats forever or the
//! stream raises exhaustion once it runs dry.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

pub trait BitStream {
    /// Next bit (0 or 1). Errors with [`Error::StreamExhausted`] when a
    /// finite source without a repeating tail runs out.
    fn next_bit(&mut self) -> Result<u8>;
}

/// Tail rule for a finite word source.
#[derive(Clone, Debug)]
pub enum Tail {
    /// Raise exhaustion past the end of the word.
    Exhaust,
    /// After the word, repeat this block forever.
    Repeat(Vec<u8>),
}

/// A bit stream with an explicit word prefix and a declared tail.
pub struct WordStream {
    word: Vec<u8>,
    tail: Tail,
    pos: u64,
}

impl WordStream {
    pub fn new(word: Vec<u8>, tail: Tail) -> Self {
        WordStream { word, tail, pos: 0 }
    }

    /// The purely periodic stream repeating `block` from the start.
    pub fn periodic(block: Vec<u8>) -> Self {
        WordStream::new(Vec::new(), Tail::Repeat(block))
    }

    /// The word followed by zeros forever.
    pub fn then_zeros(word: Vec<u8>) -> Self {
        WordStream::new(word, Tail::Repeat(vec![0]))
    }
}

impl BitStream for WordStream {
    fn next_bit(&mut self) -> Result<u8> {
        let i = self.pos;
        self.pos += 1;
        if (i as usize) < self.word.len() {
            return Ok(self.word[i as usize]);
        }
        match &self.tail {
            Tail::Exhaust => Err(Error::StreamExhausted { position: i }),
            Tail::Repeat(block) => {
                let off = (i - self.word.len() as u64) % block.len() as u64;
                Ok(block[off as usize])
            }
        }
    }
}

impl BitStream for Box<dyn BitStream> {
    fn next_bit(&mut self) -> Result<u8> {
        (**self).next_bit()
    }
}

/// Parses a bit word from text: `0` and `1` count, whitespace is skipped,
/// anything else is rejected.
pub fn parse_bit_word(text: &str) -> Result<Vec<u8>> {
    let mut bits = Vec::new();
    for ch in text.chars() {
        match ch {
            '0' => bits.push(0),
            '1' => bits.push(1),
            c if c.is_whitespace() => {}
            c => return Err(Error::BadBitChar { found: c }),
        }
    }
    Ok(bits)
}

pub fn read_bit_word_file(path: &Path) -> Result<Vec<u8>> {
    parse_bit_word(&fs::read_to_string(path)?)
}

pub fn bit_word_to_string(bits: &[u8]) -> String {
    bits.iter()
        .map(|&b| if b == 0 { '0' } else { '1' })
        .collect()
}

/// The word `1 0^g[0] 1 0^g[1] ... 1` placing ones separated by the given
/// zero runs. Decoding it against a large enough horizon produces a set
/// whose gap zero-counts are exactly `g`.
pub fn word_from_gaps(zero_runs: &[usize]) -> Vec<u8> {
    let mut word = vec![1u8];
    for &run in zero_runs {
        word.extend(std::iter::repeat_n(0, run));
        word.push(1);
    }
    word
}
