use super::{Field, FieldElement, Matrix, PrimeField};

/// An `[n, k]` linear code over GF(p), kept as a full-rank generator together
/// with a parity-check matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearCode {
    generator: Matrix<FieldElement>,
    parity_check: Matrix<FieldElement>,
}

fn row_basis(m: &Matrix<FieldElement>) -> Matrix<FieldElement> {
    let e = m.echelon();
    if e.pivots.len() == m.rows() {
        return m.clone();
    }
    let rows: Vec<usize> = (0..e.pivots.len()).collect();
    e.reduced.select_rows(&rows)
}

impl LinearCode {
    /// Row space of `g`. Rows are kept as given when independent, otherwise
    /// replaced by the nonzero rows of the reduced echelon form.
    pub fn from_generator(g: &Matrix<FieldElement>) -> Self {
        Self {
            generator: row_basis(g),
            parity_check: g.kernel_matrix(),
        }
    }

    /// Null space of `h`. The parity-check matrix is kept as given, so it may
    /// have dependent rows (an incidence matrix, for instance).
    pub fn from_parity_check(h: &Matrix<FieldElement>) -> Self {
        Self {
            generator: h.kernel_matrix(),
            parity_check: h.clone(),
        }
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn field(&self) -> PrimeField {
        self.generator.field()
    }

    pub fn generator(&self) -> &Matrix<FieldElement> {
        &self.generator
    }

    pub fn parity_check(&self) -> &Matrix<FieldElement> {
        &self.parity_check
    }

    pub fn encode(&self, message: &[FieldElement]) -> Vec<FieldElement> {
        self.generator.vec_mul(message).expect("message length equals k")
    }

    pub fn is_codeword(&self, word: &[FieldElement]) -> bool {
        word.len() == self.n()
            && self
                .parity_check
                .mul_vec(word)
                .is_ok_and(|s| s.iter().all(|e| e.is_zero()))
    }

    /// Same code with the columns reordered: column `j` of the result is
    /// column `perm[j]` of `self`.
    pub fn permute_columns(&self, perm: &[usize]) -> Self {
        Self {
            generator: self.generator.select_columns(perm),
            parity_check: self.parity_check.select_columns(perm),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_and_parity_agree() {
        let f = PrimeField::new(5).unwrap();
        let g = Matrix::from_values(f, 3, 4, &[1, 2, 3, 4, 2, 4, 1, 3, 0, 1, 1, 1]).unwrap();
        let code = LinearCode::from_generator(&g);
        assert_eq!(code.k(), 2);
        assert_eq!(code.parity_check().rows(), 2);
        for i in 0..code.k() {
            assert!(code.is_codeword(code.generator().row(i)));
        }
        let dual = LinearCode::from_parity_check(code.parity_check());
        assert_eq!(dual.k(), 2);
        assert_eq!(dual.generator().rank(), code.generator().rank());
        assert!(!code.is_codeword(&[f.one(), f.zero(), f.zero(), f.zero()]));
    }
}
