use std::ops::Range;

use crate::algebra::{Field, Matrix, PrimeField};
use crate::{Fp, FpPoly};

use super::ConstructionError;

/// Evaluation points split into blocks of multiplicative cosets.
///
/// Points are stored block by block: full cosets of the order-`block_size`
/// subgroup first, then (optionally) one short block taken from a further
/// coset.
#[derive(Debug, Clone, PartialEq)]
pub struct EvaluationPartition {
    field: PrimeField,
    block_size: usize,
    points: Vec<Fp>,
    blocks: Vec<Range<usize>>,
    /// Coset representative of each block; `x^block_size` equals `rep^block_size` on it.
    reps: Vec<Fp>,
}

impl EvaluationPartition {
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn block_size(&self) -> usize {
        self.block_size
    }

    pub fn points(&self) -> &[Fp] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn blocks(&self) -> &[Range<usize>] {
        &self.blocks
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }

    pub fn block_of(&self, position: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(&position))
    }

    pub fn block_points(&self, block: usize) -> &[Fp] {
        &self.points[self.blocks[block].clone()]
    }

    pub fn coset_reps(&self) -> &[Fp] {
        &self.reps
    }
}

/// Smallest prime `p` with `block_size | p - 1` and `p - 1 >= n`.
pub fn smallest_field(block_size: usize, n: usize) -> PrimeField {
    let b = block_size.max(1) as u64;
    let mut p = (n as u64 + 1).max(2);
    loop {
        if (p - 1) % b == 0 {
            if let Ok(f) = PrimeField::new(p) {
                return f;
            }
        }
        p += 1;
    }
}

/// Partitions `n` nonzero field elements into cosets of the subgroup of order
/// `block_size`.
///
/// The subgroup generator is the smallest element of that order; coset
/// representatives are the smallest elements not yet covered, and each coset
/// is listed as `rep * h^0, rep * h^1, ...`. A remainder of one point is
/// rejected since a singleton block cannot be repaired locally.
pub fn coset_partition(
    field: PrimeField,
    block_size: usize,
    n: usize,
) -> Result<EvaluationPartition, ConstructionError> {
    let q1 = field.order() - 1;
    if block_size == 0 || q1 % block_size as u64 != 0 {
        return Err(ConstructionError::FieldUnsuitable {
            p: field.modulus(),
            block_size,
        });
    }
    let n_blocks = n.div_ceil(block_size);
    if n == 0 || (n_blocks * block_size) as u64 > q1 {
        return Err(ConstructionError::Layout(format!(
            "cannot place {n} points in blocks of {block_size} inside {field}"
        )));
    }
    if n % block_size == 1 && block_size > 1 {
        return Err(ConstructionError::Layout(format!(
            "n mod {block_size} = 1 leaves a singleton block"
        )));
    }
    let h = field
        .element_of_order(block_size as u64)
        .expect("block size divides p - 1");
    let subgroup: Vec<Fp> = (0..block_size as u64).map(|e| h.pow(e)).collect();
    let mut covered = vec![false; field.modulus() as usize];
    let mut points = Vec::with_capacity(n);
    let mut blocks = Vec::with_capacity(n_blocks);
    let mut reps = Vec::with_capacity(n_blocks);
    for _ in 0..n_blocks {
        let rep = field
            .elements()
            .skip(1)
            .find(|e| !covered[e.value() as usize])
            .expect("enough cosets");
        let coset: Vec<Fp> = subgroup.iter().map(|&g| rep * g).collect();
        for e in &coset {
            covered[e.value() as usize] = true;
        }
        let start = points.len();
        let take = (n - start).min(block_size);
        points.extend_from_slice(&coset[..take]);
        blocks.push(start..points.len());
        reps.push(rep);
    }
    Ok(EvaluationPartition {
        field,
        block_size,
        points,
        blocks,
        reps,
    })
}

/// The algebra of block-constant functions on a coset partition, generated
/// by powers of `g(x) = x^b - c` where `c` makes `g` vanish on the last block.
#[derive(Debug, Clone, PartialEq)]
pub struct GoodPolyAlgebra {
    partition: EvaluationPartition,
    g: FpPoly,
    block_values: Vec<Fp>,
    degree_profile: Vec<usize>,
}

impl GoodPolyAlgebra {
    pub fn partition(&self) -> &EvaluationPartition {
        &self.partition
    }

    pub fn g(&self) -> &FpPoly {
        &self.g
    }

    /// `g(A_i)` for each block.
    pub fn block_values(&self) -> &[Fp] {
        &self.block_values
    }

    /// `d_i = i * deg(g)` for `i < m`.
    pub fn degree_profile(&self) -> &[usize] {
        &self.degree_profile
    }

    /// `[g(A_i)^j]`, rows indexed by block, columns by power.
    pub fn power_matrix(&self) -> Matrix<Fp> {
        let m = self.block_values.len();
        let f = self.partition.field;
        let mut out = Matrix::zeros(&f, m, m);
        for (i, v) in self.block_values.iter().enumerate() {
            for j in 0..m {
                out.set(i, j, v.pow(j as u64));
            }
        }
        out
    }
}

pub fn good_polynomial(part: EvaluationPartition) -> Result<GoodPolyAlgebra, ConstructionError> {
    let f = part.field;
    let b = part.block_size;
    let last_rep = *part.reps.last().ok_or(ConstructionError::Layout("empty partition".into()))?;
    let shift = last_rep.pow(b as u64);
    let g = &FpPoly::monomial(f.one(), b) - &FpPoly::constant(shift);
    let mut block_values = Vec::with_capacity(part.blocks.len());
    for (i, range) in part.blocks.iter().enumerate() {
        let value = g.eval(&part.points[range.start]);
        if part.points[range.clone()].iter().any(|x| g.eval(x) != value) {
            return Err(ConstructionError::NotGood(format!("g not constant on block {i}")));
        }
        if block_values.contains(&value) {
            return Err(ConstructionError::NotGood(format!("block {i} repeats value {value}")));
        }
        block_values.push(value);
    }
    let degree_profile: Vec<usize> = (0..block_values.len()).map(|i| i * b).collect();
    let alg = GoodPolyAlgebra {
        partition: part,
        g,
        block_values,
        degree_profile,
    };
    let m = alg.block_values.len();
    if alg.power_matrix().rank() != m {
        return Err(ConstructionError::NotGood("powers of g are not a basis".into()));
    }
    debug_assert!(alg.block_values.last().is_some_and(|v| v.is_zero()));
    Ok(alg)
}
