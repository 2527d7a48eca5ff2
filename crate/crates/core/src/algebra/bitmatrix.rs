//! Bit-packed GF(2) matrices.
//!
//! Same elimination contract as [`Matrix`]: left-to-right column scan,
//! lowest-index nonzero row as pivot, full Gauss-Jordan reduction. Results are
//! therefore identical entry for entry with the generic path.

use super::{AlgebraError, Field, FieldElement, Matrix, PrimeField};

const WORD: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    words: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(WORD);
        Self {
            rows,
            cols,
            stride,
            words: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_matrix(m: &Matrix<FieldElement>) -> Result<Self, AlgebraError> {
        if m.field().modulus() != 2 {
            return Err(AlgebraError::NotBinary(m.field().modulus()));
        }
        let mut out = Self::zeros(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if !m.get(i, j).is_zero() {
                    out.set(i, j, true);
                }
            }
        }
        Ok(out)
    }

    pub fn to_matrix(&self) -> Matrix<FieldElement> {
        let f = PrimeField::binary();
        let mut m = Matrix::zeros(&f, self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    m.set(i, j, f.one());
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.words[i * self.stride + j / WORD] >> (j % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, bit: bool) {
        let w = &mut self.words[i * self.stride + j / WORD];
        let mask = 1u64 << (j % WORD);
        if bit {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn row_words(&self, i: usize) -> &[u64] {
        &self.words[i * self.stride..(i + 1) * self.stride]
    }

    pub fn row_weight(&self, i: usize) -> usize {
        self.row_words(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn col_weight(&self, j: usize) -> usize {
        (0..self.rows).filter(|&i| self.get(i, j)).count()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for w in 0..self.stride {
                self.words.swap(a * self.stride + w, b * self.stride + w);
            }
        }
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        for w in 0..self.stride {
            let v = self.words[src * self.stride + w];
            self.words[dst * self.stride + w] ^= v;
        }
    }

    /// Reduced row echelon form and pivot columns.
    pub fn echelon(&self) -> (BitMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.get(i, c)) else {
                continue;
            };
            m.swap_rows(r, p);
            for i in 0..m.rows {
                if i != r && m.get(i, c) {
                    m.xor_row_into(r, i);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    /// Null space basis as the rows of a matrix, one per free column.
    pub fn kernel(&self) -> BitMatrix {
        let (reduced, pivots) = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = BitMatrix::zeros(free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            out.set(k, f, true);
            for (row, &p) in pivots.iter().enumerate() {
                if reduced.get(row, f) {
                    out.set(k, p, true);
                }
            }
        }
        out
    }

    /// `self * v` where `v` is packed like a row.
    pub fn mul_packed(&self, v: &[u64]) -> Vec<bool> {
        (0..self.rows)
            .map(|i| {
                self.row_words(i)
                    .iter()
                    .zip(v)
                    .map(|(a, b)| (a & b).count_ones())
                    .sum::<u32>()
                    % 2
                    == 1
            })
            .collect()
    }
}

/// Packs a 0/1 slice into row words.
pub fn pack_bits(bits: &[bool]) -> Vec<u64> {
    let mut out = vec![0u64; bits.len().div_ceil(WORD)];
    for (j, &b) in bits.iter().enumerate() {
        if b {
            out[j / WORD] |= 1 << (j % WORD);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_non_binary() {
        let m: Matrix<FieldElement> = Matrix::identity(&PrimeField::new(3).unwrap(), 2);
        assert_eq!(BitMatrix::from_matrix(&m), Err(AlgebraError::NotBinary(3)));
    }

    #[test]
    fn identity_rank() {
        let m = BitMatrix::identity(70);
        assert_eq!(m.rank(), 70);
        assert_eq!(m.kernel().rows(), 0);
    }

    #[test]
    fn wide_rows_cross_word_boundary() {
        let mut m = BitMatrix::zeros(2, 130);
        m.set(0, 0, true);
        m.set(0, 129, true);
        m.set(1, 64, true);
        m.set(1, 129, true);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.rows(), 128);
        for i in 0..k.rows() {
            assert!(m.mul_packed(k.row_words(i)).iter().all(|b| !b));
        }
    }

    proptest! {
        #[test]
        fn agrees_with_generic_path(
            rows in 0usize..10, cols in 1usize..80,
            bits in prop::collection::vec(any::<bool>(), 800),
        ) {
            let f = PrimeField::binary();
            let vals: Vec<i64> = bits[..rows * cols].iter().map(|&b| b as i64).collect();
            let generic = Matrix::from_values(f, rows, cols, &vals).unwrap();
            let packed = BitMatrix::from_matrix(&generic).unwrap();
            prop_assert_eq!(packed.to_matrix(), generic.clone());
            let e = generic.echelon();
            let (reduced, pivots) = packed.echelon();
            prop_assert_eq!(&pivots, &e.pivots);
            prop_assert_eq!(reduced.to_matrix(), e.reduced);
            prop_assert_eq!(packed.kernel().to_matrix(), generic.kernel_matrix());
        }
    }
}
