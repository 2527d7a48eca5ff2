use std::fmt::Write as _;

use super::{AlgebraError, Field, FieldElement, PrimeField};

/// Dense row-major matrix over a [`Field`]; every entry shares one context.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<F: Field> {
    ctx: F::Context,
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Reduced row echelon form together with the pivot column of each nonzero row.
#[derive(Debug, Clone)]
pub struct Echelon<F: Field> {
    pub reduced: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(ctx: &F::Context, rows: usize, cols: usize) -> Self {
        Self {
            ctx: ctx.clone(),
            rows,
            cols,
            data: vec![F::zero_in(ctx); rows * cols],
        }
    }

    pub fn identity(ctx: &F::Context, n: usize) -> Self {
        let mut m = Self::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, F::one_in(ctx));
        }
        m
    }

    pub fn from_rows(ctx: &F::Context, cols: usize, rows: Vec<Vec<F>>) -> Result<Self, AlgebraError> {
        let n_rows = rows.len();
        let mut data = Vec::with_capacity(n_rows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(AlgebraError::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            for e in row {
                if e.context() != *ctx {
                    return Err(AlgebraError::ForeignEntry);
                }
                data.push(e);
            }
        }
        Ok(Self {
            ctx: ctx.clone(),
            rows: n_rows,
            cols,
            data,
        })
    }

    pub fn context(&self) -> &F::Context {
        &self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        assert!(v.context() == self.ctx, "entry from a different field");
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.ctx, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut out = Self::zeros(&self.ctx, self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                out.data[i * cols.len() + jj] = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &i in rows {
            data.extend_from_slice(self.row(i));
        }
        Self {
            ctx: self.ctx.clone(),
            rows: rows.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>, AlgebraError> {
        if v.len() != self.cols {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| dot(&self.ctx, self.row(i), v))
            .collect())
    }

    /// `v^T * self`, i.e. the combination of rows with coefficients `v`.
    pub fn vec_mul(&self, v: &[F]) -> Result<Vec<F>, AlgebraError> {
        if v.len() != self.rows {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.rows,
                found: v.len(),
            });
        }
        let mut out = vec![F::zero_in(&self.ctx); self.cols];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.row(i)) {
                *o = o.clone() + c.clone() * a.clone();
            }
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        if self.cols != rhs.rows {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let rows = (0..self.rows)
            .map(|i| rhs.vec_mul(self.row(i)))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rows(&self.ctx, rhs.cols, rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Gauss-Jordan elimination. Columns are scanned left to right and the
    /// pivot is the first row (lowest index) at or below the current one with a
    /// nonzero entry, so the output is deterministic.
    pub fn echelon(&self) -> Echelon<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inverse().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j).clone() * inv.clone();
                m.data[r * m.cols + j] = v;
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j).clone() - factor.clone() * m.get(r, j).clone();
                    m.data[i * m.cols + j] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of `{v : self * v = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let Echelon { reduced, pivots } = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![F::zero_in(&self.ctx); self.cols];
                v[f] = F::one_in(&self.ctx);
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -reduced.get(row, f).clone();
                }
                v
            })
            .collect()
    }

    /// `(rank, nullspace basis)` in one elimination.
    pub fn rank_nullspace(&self) -> (usize, Vec<Vec<F>>) {
        let basis = self.nullspace();
        (self.cols - basis.len(), basis)
    }

    /// Null space basis as the rows of a matrix.
    pub fn kernel_matrix(&self) -> Self {
        let basis = self.nullspace();
        Self::from_rows(&self.ctx, self.cols, basis).expect("consistent dimensions")
    }
}

fn dot<F: Field>(ctx: &F::Context, a: &[F], b: &[F]) -> F {
    a.iter()
        .zip(b)
        .fold(F::zero_in(ctx), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// Fills the `None` positions of `word` so that `h * c = 0`.
///
/// Fails with [`AlgebraError::Inconsistent`] when no codeword agrees with the
/// known symbols and with [`AlgebraError::Ambiguous`] when the erased columns
/// of `h` are linearly dependent (several completions exist).
pub fn solve_erasures<F: Field>(h: &Matrix<F>, word: &[Option<F>]) -> Result<Vec<F>, AlgebraError> {
    if word.len() != h.cols() {
        return Err(AlgebraError::DimensionMismatch {
            expected: h.cols(),
            found: word.len(),
        });
    }
    let ctx = h.context();
    let erased: Vec<usize> = (0..word.len()).filter(|&j| word[j].is_none()).collect();
    // rhs = -(sum over known columns)
    let mut rhs = vec![F::zero_in(ctx); h.rows()];
    for (j, sym) in word.iter().enumerate() {
        if let Some(s) = sym {
            for (i, r) in rhs.iter_mut().enumerate() {
                *r = r.clone() - h.get(i, j).clone() * s.clone();
            }
        }
    }
    let mut aug = Matrix::zeros(ctx, h.rows(), erased.len() + 1);
    for i in 0..h.rows() {
        for (jj, &j) in erased.iter().enumerate() {
            aug.set(i, jj, h.get(i, j).clone());
        }
        aug.set(i, erased.len(), rhs[i].clone());
    }
    let Echelon { reduced, pivots } = aug.echelon();
    if pivots.last() == Some(&erased.len()) {
        return Err(AlgebraError::Inconsistent);
    }
    if pivots.len() < erased.len() {
        return Err(AlgebraError::Ambiguous {
            free: erased.len() - pivots.len(),
        });
    }
    let mut out: Vec<F> = word
        .iter()
        .map(|s| s.clone().unwrap_or_else(|| F::zero_in(ctx)))
        .collect();
    for (row, &p) in pivots.iter().enumerate() {
        out[erased[p]] = reduced.get(row, erased.len()).clone();
    }
    Ok(out)
}

impl Matrix<FieldElement> {
    pub fn field(&self) -> PrimeField {
        self.ctx
    }

    pub fn from_values(field: PrimeField, rows: usize, cols: usize, values: &[i64]) -> Result<Self, AlgebraError> {
        if values.len() != rows * cols {
            return Err(AlgebraError::DimensionMismatch {
                expected: rows * cols,
                found: values.len(),
            });
        }
        Ok(Self {
            ctx: field,
            rows,
            cols,
            data: values.iter().map(|&v| field.elem(v)).collect(),
        })
    }

    /// Text form: a `m n q` header line, then one line of `n` integers per row.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {} {}\n", self.rows, self.cols, self.ctx.modulus());
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|e| e.value().to_string()).collect();
            let _ = writeln!(s, "{}", line.join(" "));
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<Self, AlgebraError> {
        let parse_err = |line: usize, msg: &str| AlgebraError::Parse {
            line,
            msg: msg.to_string(),
        };
        if !text.ends_with('\n') {
            return Err(parse_err(0, "missing trailing newline"));
        }
        let mut lines = text.lines();
        let header: Vec<u64> = lines
            .next()
            .ok_or_else(|| parse_err(1, "empty input"))?
            .split_whitespace()
            .map(|t| t.parse::<u64>().map_err(|_| parse_err(1, "header must be `m n q`")))
            .collect::<Result<_, _>>()?;
        let [m, n, q] = header[..] else {
            return Err(parse_err(1, "header must be `m n q`"));
        };
        let field = PrimeField::new(q).map_err(|_| parse_err(1, "q must be a prime below 2^31"))?;
        let (m, n) = (m as usize, n as usize);
        let mut data = Vec::with_capacity(m * n);
        for i in 0..m {
            let line_no = i + 2;
            let line = lines.next().ok_or_else(|| parse_err(line_no, "missing row"))?;
            let row: Vec<u64> = line
                .split_whitespace()
                .map(|t| t.parse::<u64>().map_err(|_| parse_err(line_no, "entry is not an integer")))
                .collect::<Result<_, _>>()?;
            if row.len() != n {
                return Err(parse_err(line_no, "wrong number of entries"));
            }
            for v in row {
                if v >= q {
                    return Err(parse_err(line_no, "entry outside [0, q)"));
                }
                data.push(field.elem(v as i64));
            }
        }
        if lines.any(|l| !l.trim().is_empty()) {
            return Err(parse_err(m + 2, "trailing content after the last row"));
        }
        Ok(Self {
            ctx: field,
            rows: m,
            cols: n,
            data,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    pub(crate) fn example_h() -> Matrix<FieldElement> {
        #[rustfmt::skip]
        let v = [
            1, 0, 0, 1, 0, 0, 1, 0, 0,
            0, 1, 0, 0, 1, 0, 0, 1, 0,
            0, 0, 1, 0, 0, 1, 0, 0, 1,
            1, 0, 0, 0, 1, 0, 0, 0, 1,
            0, 1, 0, 0, 0, 1, 1, 0, 0,
            0, 0, 1, 1, 0, 0, 0, 1, 0,
        ];
        Matrix::from_values(PrimeField::binary(), 6, 9, &v).unwrap()
    }

    fn petersen_incidence() -> Matrix<FieldElement> {
        let edges = [
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
        ];
        let f = PrimeField::binary();
        let mut m = Matrix::zeros(&f, 10, 15);
        for (e, &(u, v)) in edges.iter().enumerate() {
            m.set(u, e, f.one());
            m.set(v, e, f.one());
        }
        m
    }

    #[test]
    fn identity_has_full_rank() {
        let m: Matrix<FieldElement> = Matrix::identity(&PrimeField::binary(), 3);
        let (rank, basis) = m.rank_nullspace();
        assert_eq!(rank, 3);
        assert!(basis.is_empty());
    }

    #[test]
    fn example_parity_check_rank() {
        let h = example_h();
        let (rank, basis) = h.rank_nullspace();
        assert_eq!(rank, 5);
        assert_eq!(basis.len(), 4);
        for v in &basis {
            assert!(h.mul_vec(v).unwrap().iter().all(|e| e.is_zero()));
        }
        let k = Matrix::from_rows(&PrimeField::binary(), 9, basis).unwrap();
        assert_eq!(k.rank(), 4);
    }

    #[test]
    fn petersen_incidence_rank() {
        // connected graph: rank = V - 1 over GF(2)
        let (rank, basis) = petersen_incidence().rank_nullspace();
        assert_eq!((rank, basis.len()), (9, 6));
    }

    #[test]
    fn rational_rank_differs_for_odd_cycles() {
        use num_rational::Ratio;
        // Over Q the incidence matrix of a non-bipartite connected graph has full row rank.
        let m2 = petersen_incidence();
        let rows: Vec<Vec<Ratio<i64>>> = m2
            .row_vecs()
            .into_iter()
            .map(|r| r.iter().map(|e| Ratio::from_integer(e.value() as i64)).collect())
            .collect();
        let q = Matrix::from_rows(&(), 15, rows).unwrap();
        assert_eq!(q.rank(), 10);
    }

    #[test]
    fn erasures_zero_erased() {
        let h = example_h();
        let basis = h.nullspace();
        let word: Vec<_> = basis[0].iter().map(|e| Some(*e)).collect();
        assert_eq!(solve_erasures(&h, &word).unwrap(), basis[0]);
    }

    #[test]
    fn erasures_single_on_four_cycle() {
        let f = PrimeField::binary();
        let h = example_h();
        // x1, x5, x2, x7 form the 4-cycle c1-c4-c2-c5 in the reduced graph
        let mut cw = vec![f.zero(); 9];
        for j in [0, 4, 1, 6] {
            cw[j] = f.one();
        }
        assert!(h.mul_vec(&cw).unwrap().iter().all(|e| e.is_zero()));
        let mut word: Vec<_> = cw.iter().map(|e| Some(*e)).collect();
        word[4] = None;
        assert_eq!(solve_erasures(&h, &word).unwrap(), cw);
        // three erasures still decode (d = 4)
        word[0] = None;
        word[8] = None;
        assert_eq!(solve_erasures(&h, &word).unwrap(), cw);
    }

    #[test]
    fn erasures_covering_min_weight_support_are_ambiguous() {
        let f = PrimeField::binary();
        let h = example_h();
        let word: Vec<_> = (0..9)
            .map(|j| if [0, 4, 1, 6].contains(&j) { None } else { Some(f.zero()) })
            .collect();
        assert_eq!(solve_erasures(&h, &word), Err(AlgebraError::Ambiguous { free: 1 }));
    }

    #[test]
    fn erasures_inconsistent() {
        let f = PrimeField::binary();
        let h = example_h();
        let mut word: Vec<_> = vec![Some(f.zero()); 9];
        word[0] = Some(f.one());
        word[1] = None;
        assert_eq!(solve_erasures(&h, &word), Err(AlgebraError::Inconsistent));
    }

    #[test]
    fn text_roundtrip_and_errors() {
        let h = example_h();
        let text = h.to_text();
        assert!(text.starts_with("6 9 2\n1 0 0 1 0 0 1 0 0\n"));
        assert_eq!(Matrix::parse_text(&text).unwrap(), h);
        assert!(Matrix::parse_text(text.trim_end()).is_err());
        assert!(Matrix::parse_text("1 2 4\n0 1\n").is_err());
        assert!(Matrix::parse_text("1 2 3\n0 3\n").is_err());
        assert!(Matrix::parse_text("1 2 3\n0 1 2\n").is_err());
        assert!(Matrix::parse_text("2 2 3\n0 1\n").is_err());
        assert!(Matrix::parse_text("1 2 3\n0 1\n1 1\n").is_err());
        let empty = Matrix::parse_text("0 4 5\n").unwrap();
        assert_eq!((empty.rows(), empty.cols()), (0, 4));
    }

    proptest! {
        #[test]
        fn rank_invariant_under_row_permutation(
            p in prop::sample::select(vec![2u64, 3, 7, 13]),
            rows in 1usize..7, cols in 1usize..9,
            seed in any::<u64>(),
            raw in prop::collection::vec(any::<i64>(), 64),
        ) {
            let f = PrimeField::new(p).unwrap();
            let m = Matrix::from_values(f, rows, cols, &raw[..rows * cols]).unwrap();
            let mut order: Vec<usize> = (0..rows).collect();
            order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            let permuted = m.select_rows(&order);
            let (rank, basis) = m.rank_nullspace();
            prop_assert_eq!(rank, permuted.rank());
            prop_assert_eq!(rank + basis.len(), cols);
            for v in &basis {
                prop_assert!(m.mul_vec(v).unwrap().iter().all(|e| e.is_zero()));
            }
            let k = Matrix::from_rows(&f, cols, basis.clone()).unwrap();
            prop_assert_eq!(k.rank(), basis.len());
        }
    }
}
