/// Fixed-size bit array used as the decoder's sum sieve.
#[derive(Clone, Debug)]
pub(crate) struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    #[inline]
    pub fn set(&mut self, index: usize) {
        debug_assert!(index < self.len);
        self.words[index >> 6] |= 1 << (index & 63);
    }

    #[inline]
    pub fn get(&self, index: usize) -> bool {
        index < self.len && self.words[index >> 6] & (1 << (index & 63)) != 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_and_get() {
        let mut bits = BitSet::new(130);
        bits.set(0);
        bits.set(63);
        bits.set(64);
        bits.set(129);
        assert!(bits.get(0) && bits.get(63) && bits.get(64) && bits.get(129));
        assert!(!bits.get(1) && !bits.get(65) && !bits.get(128));
        assert!(!bits.get(500));
    }
}
