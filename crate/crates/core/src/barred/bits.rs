//! Bit-packed vectors over the two-element field.

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct BitVec {
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Highest set index.
    pub fn last_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(k, &w)| k * 64 + 63 - w.leading_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            (0..64)
                .filter(move |b| w >> b & 1 == 1)
                .map(move |b| k * 64 + b)
        })
    }
}

/// Rank of a set of vectors.
pub(crate) fn rank(vectors: impl IntoIterator<Item = BitVec>) -> usize {
    let mut basis: Vec<(usize, BitVec)> = Vec::new();
    for mut v in vectors {
        while let Some(top) = v.last_one() {
            match basis.iter().find(|(p, _)| *p == top) {
                Some((_, b)) => v.xor_assign(b),
                None => {
                    basis.push((top, v));
                    break;
                }
            }
        }
    }
    basis.len()
}
