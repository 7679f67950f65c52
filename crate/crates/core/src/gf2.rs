//! Word-packed vectors and matrices over GF(2).

use std::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self { words: vec![0; len.div_ceil(WORD)], len }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, ones: I) -> Self {
        let mut v = Self::zeros(len);
        for i in ones {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, bit: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD);
        if bit {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Parity of the bitwise AND, i.e. the GF(2) dot product.
    pub fn dot(&self, other: &BitVec) -> bool {
        self.and_count(other) % 2 == 1
    }

    pub fn and_count(&self, other: &BitVec) -> u32 {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones()).sum()
    }

    pub fn count_ones(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD + t)
            })
        })
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Dense row-major GF(2) matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    rows: Vec<BitVec>,
    cols: usize,
}

impl BitMatrix {
    pub fn new(cols: usize) -> Self {
        Self { rows: Vec::new(), cols }
    }

    pub fn push_row(&mut self, row: BitVec) {
        assert_eq!(row.len(), self.cols);
        self.rows.push(row);
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..rows.len()).find(|&r| rows[r].get(col)) else { continue };
            rows.swap(rank, p);
            let pivot = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row.get(col) {
                    row.xor_assign(&pivot);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Solves `M u = rhs`; `None` when inconsistent. Free variables are set to zero.
    pub fn solve(&self, rhs: &BitVec) -> Option<BitVec> {
        assert_eq!(rhs.len(), self.rows.len());
        let mut rows = self.rows.clone();
        let mut b: Vec<bool> = (0..rhs.len()).map(|i| rhs.get(i)).collect();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..rows.len()).find(|&r| rows[r].get(col)) else { continue };
            rows.swap(rank, p);
            b.swap(rank, p);
            let pivot = rows[rank].clone();
            let pb = b[rank];
            for r in 0..rows.len() {
                if r != rank && rows[r].get(col) {
                    rows[r].xor_assign(&pivot);
                    b[r] ^= pb;
                }
            }
            pivots.push(col);
            rank += 1;
        }
        if b[rank..].iter().any(|&x| x) {
            return None;
        }
        let mut u = BitVec::zeros(self.cols);
        for (r, &col) in pivots.iter().enumerate() {
            u.set(col, b[r]);
        }
        Some(u)
    }

    pub fn mul_vec(&self, u: &BitVec) -> BitVec {
        BitVec::from_indices(self.rows.len(), self.rows.iter().enumerate().filter(|(_, r)| r.dot(u)).map(|(i, _)| i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn bit_ops_across_words() {
        let mut v = BitVec::zeros(130);
        v.set(0, true);
        v.set(64, true);
        v.set(129, true);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(v.first_one(), Some(0));
        v.flip(0);
        assert_eq!(v.first_one(), Some(64));
        assert_eq!(v.count_ones(), 2);
    }

    #[test]
    fn inconsistent_system() {
        let mut m = BitMatrix::new(2);
        m.push_row(BitVec::from_indices(2, [0, 1]));
        m.push_row(BitVec::from_indices(2, [0, 1]));
        assert!(m.solve(&BitVec::from_indices(2, [0])).is_none());
        assert!(m.solve(&BitVec::from_indices(2, [0, 1])).is_some());
        assert_eq!(m.rank(), 1);
    }

    proptest! {
        #[test]
        fn solutions_satisfy_the_system(
            rows in proptest::collection::vec(proptest::collection::vec(any::<bool>(), 70), 1..12),
            x in proptest::collection::vec(any::<bool>(), 70),
        ) {
            let mut m = BitMatrix::new(70);
            for r in &rows {
                m.push_row(BitVec::from_indices(70, r.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i)));
            }
            let u = BitVec::from_indices(70, x.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i));
            let rhs = m.mul_vec(&u);
            let sol = m.solve(&rhs).expect("rhs is in the image");
            prop_assert_eq!(m.mul_vec(&sol), rhs);
        }
    }
}
