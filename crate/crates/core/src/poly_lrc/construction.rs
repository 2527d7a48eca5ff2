use std::fmt::Write as _;

use crate::algebra::{Field, Matrix, PrimeField};
use crate::{Fp, FpMatrix, FpPoly};

use super::partition::{coset_partition, good_polynomial, smallest_field, GoodPolyAlgebra};
use super::{ConstructionError, RepairError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeKind {
    /// Blocks of size `r + 1`, good polynomial of degree `r + 1`.
    TamoBarg,
    /// Blocks of size `r` plus one block of size `s = r - (n2 - n1)`,
    /// good polynomial of degree `r`.
    Modified,
}

impl CodeKind {
    pub fn name(&self) -> &'static str {
        match self {
            CodeKind::TamoBarg => "tamo-barg",
            CodeKind::Modified => "modified",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlotForm {
    /// `g^j x^i`
    Plain,
    /// `g^j x^(i-s) h(x)`, with `h` the annihilator of the last block
    Annihilator,
}

/// One message symbol and the basis polynomial it multiplies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Slot {
    pub i: usize,
    pub j: usize,
    pub form: SlotForm,
    pub degree: usize,
}

/// Outcome of a single-symbol local repair.
#[derive(Debug, Clone, PartialEq)]
pub struct Repair {
    pub position: usize,
    pub value: Fp,
    pub helpers: Vec<usize>,
}

/// Evaluation code built from a good-polynomial algebra.
#[derive(Debug, Clone)]
pub struct LrcCode {
    kind: CodeKind,
    n: usize,
    k: usize,
    r: usize,
    algebra: GoodPolyAlgebra,
    slots: Vec<Slot>,
    basis: Vec<FpPoly>,
    generator: FpMatrix,
    parity_check: FpMatrix,
    degree_cap: usize,
    block_caps: Vec<usize>,
    claimed_distance: i64,
}

fn layout(msg: impl Into<String>) -> ConstructionError {
    ConstructionError::Layout(msg.into())
}

fn resolve_field(field: Option<PrimeField>, block: usize, n: usize) -> PrimeField {
    field.unwrap_or_else(|| smallest_field(block, n))
}

impl LrcCode {
    /// Blocks of `r + 1` points (the last one of size `s = n mod (r+1)`),
    /// requires `s` not in `{0, 1}` and `r | k + 1`.
    ///
    /// Message layout, lexicographic in `(i, j)` with `w = (k + 1) / r`:
    /// `i < s - 1`: `g^j x^i` for `j < w`; `i = s - 1`: `g^j x^(s-1)` for
    /// `1 <= j < w`; `s <= i < r`: `g^j x^(i-s) h` for `j < w`.
    pub fn tamo_barg(n: usize, k: usize, r: usize, field: Option<PrimeField>) -> Result<Self, ConstructionError> {
        if r < 1 || k < 1 || k >= n {
            return Err(layout(format!("need r >= 1 and 1 <= k < n (n={n}, k={k}, r={r})")));
        }
        let s = n % (r + 1);
        if s == 0 || s == 1 {
            return Err(layout(format!("n mod (r+1) = {s}; must not be 0 or 1")));
        }
        if (k + 1) % r != 0 {
            return Err(layout(format!("r = {r} must divide k + 1 = {}", k + 1)));
        }
        let w = (k + 1) / r;
        let field = resolve_field(field, r + 1, n);
        let algebra = good_polynomial(coset_partition(field, r + 1, n)?)?;
        let mut slots = Vec::with_capacity(k);
        for i in 0..r {
            let j_start = usize::from(i == s - 1);
            for j in j_start..w {
                let (form, degree) = if i < s {
                    (SlotForm::Plain, j * (r + 1) + i)
                } else {
                    (SlotForm::Annihilator, j * (r + 1) + i)
                };
                slots.push(Slot { i, j, form, degree });
            }
        }
        debug_assert_eq!(slots.len(), k);
        let m = algebra.partition().blocks().len();
        let block_caps = (0..m).map(|b| if b + 1 == m { s - 2 } else { r - 1 }).collect();
        let claimed = n as i64 - k as i64 - k.div_ceil(r) as i64 + 1;
        Self::assemble(CodeKind::TamoBarg, n, k, r, algebra, s, slots, block_caps, claimed)
    }

    /// Blocks of `r` points plus a last block of size `s = r - (n2 - n1)`,
    /// requires `n1 <= n2`, `s > 1` and `u + v <= s` where `k = u r + v`.
    ///
    /// Candidate slots are `g^j x^i` for `i < s, j <= u` and `g^j x^(i-s) h`
    /// for `s <= i < r, j < u`; the slot `(s - 1, 0)` is dropped so that the
    /// last block only sees degrees up to `s - 2`. The `k` candidates of lowest
    /// degree `j r + i` carry the message.
    pub fn modified(n: usize, k: usize, r: usize, field: Option<PrimeField>) -> Result<Self, ConstructionError> {
        if r < 2 || k < r || k >= n {
            return Err(layout(format!("need 2 <= r <= k < n (n={n}, k={k}, r={r})")));
        }
        let n1 = n.div_ceil(r + 1);
        let n2 = n1 * (r + 1) - n;
        if n1 > n2 {
            return Err(layout(format!("needs n1 <= n2 (n1={n1}, n2={n2})")));
        }
        let s = r - (n2 - n1);
        if s <= 1 {
            return Err(layout(format!("last block size s = {s} must exceed 1")));
        }
        let (u, v) = (k / r, k % r);
        if u + v > s {
            return Err(layout(format!("needs u + v <= s (u={u}, v={v}, s={s})")));
        }
        let field = resolve_field(field, r, n);
        let algebra = good_polynomial(coset_partition(field, r, n)?)?;
        let mut candidates = Vec::new();
        for i in 0..r {
            let j_max = if i < s { u + 1 } else { u };
            for j in 0..j_max {
                if (i, j) == (s - 1, 0) {
                    continue;
                }
                let form = if i < s { SlotForm::Plain } else { SlotForm::Annihilator };
                candidates.push(Slot { i, j, form, degree: j * r + i });
            }
        }
        if candidates.len() < k {
            return Err(layout(format!("only {} slots available for k = {k}", candidates.len())));
        }
        candidates.sort_by_key(|s| s.degree);
        candidates.truncate(k);
        let mut slots = candidates;
        slots.sort_by_key(|s| (s.i, s.j));
        let m = algebra.partition().blocks().len();
        let block_caps = (0..m).map(|b| if b + 1 == m { s - 2 } else { r - 2 }).collect();
        let claimed = n as i64 - k as i64 - u as i64 + 1;
        let code = Self::assemble(CodeKind::Modified, n, k, r, algebra, s, slots, block_caps, claimed)?;
        debug_assert!(code.degree_cap < k + u);
        Ok(code)
    }

    #[allow(clippy::too_many_arguments)]
    fn assemble(
        kind: CodeKind,
        n: usize,
        k: usize,
        r: usize,
        algebra: GoodPolyAlgebra,
        s: usize,
        slots: Vec<Slot>,
        block_caps: Vec<usize>,
        claimed_distance: i64,
    ) -> Result<Self, ConstructionError> {
        let part = algebra.partition();
        let field = part.field();
        let last = part.blocks().len() - 1;
        let h = FpPoly::annihilator(part.block_points(last))?;
        let g = algebra.g().clone();
        let mut g_pows = vec![FpPoly::constant(field.one())];
        let basis: Vec<FpPoly> = slots
            .iter()
            .map(|slot| {
                while g_pows.len() <= slot.j {
                    let next = g_pows.last().expect("nonempty") * &g;
                    g_pows.push(next);
                }
                let gj = &g_pows[slot.j];
                match slot.form {
                    SlotForm::Plain => gj * &FpPoly::monomial(field.one(), slot.i),
                    SlotForm::Annihilator => &(gj * &FpPoly::monomial(field.one(), slot.i - s)) * &h,
                }
            })
            .collect();
        for (slot, p) in slots.iter().zip(&basis) {
            debug_assert_eq!(p.degree(), Some(slot.degree));
        }
        let degree_cap = slots.iter().map(|s| s.degree).max().unwrap_or(0);
        let rows: Vec<Vec<Fp>> = basis
            .iter()
            .map(|p| part.points().iter().map(|x| p.eval(x)).collect())
            .collect();
        let generator = Matrix::from_rows(&field, n, rows)?;
        let rank = generator.rank();
        if rank != k {
            return Err(ConstructionError::RankDeficient { rank, k });
        }
        let parity_check = generator.kernel_matrix();
        Ok(Self {
            kind,
            n,
            k,
            r,
            algebra,
            slots,
            basis,
            generator,
            parity_check,
            degree_cap,
            block_caps,
            claimed_distance,
        })
    }

    pub fn kind(&self) -> CodeKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn field(&self) -> PrimeField {
        self.algebra.partition().field()
    }

    pub fn algebra(&self) -> &GoodPolyAlgebra {
        &self.algebra
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn basis(&self) -> &[FpPoly] {
        &self.basis
    }

    pub fn generator_matrix(&self) -> &FpMatrix {
        &self.generator
    }

    pub fn parity_check_matrix(&self) -> &FpMatrix {
        &self.parity_check
    }

    /// Largest degree of any encoding polynomial.
    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    /// Degree bound of the encoding polynomial restricted to each block, as
    /// claimed by the construction. Repair interpolates `cap + 1` helpers.
    pub fn block_caps(&self) -> &[usize] {
        &self.block_caps
    }

    /// The construction's distance lower bound.
    pub fn claimed_distance(&self) -> i64 {
        self.claimed_distance
    }

    /// Helpers per block claimed for every block (`None` when the construction
    /// makes no claim that holds on all blocks).
    pub fn claimed_locality(&self) -> Option<usize> {
        match self.kind {
            CodeKind::TamoBarg => Some(self.r),
            CodeKind::Modified => None,
        }
    }

    pub fn encoding_polynomial(&self, message: &[Fp]) -> Result<FpPoly, ConstructionError> {
        if message.len() != self.k {
            return Err(layout(format!("message has {} symbols, expected {}", message.len(), self.k)));
        }
        let mut f = FpPoly::zero();
        for (a, p) in message.iter().zip(&self.basis) {
            f = &f + &p.scale(a);
        }
        Ok(f)
    }

    /// Evaluations of the encoding polynomial on the ordered point set.
    pub fn encode(&self, message: &[Fp]) -> Result<Vec<Fp>, ConstructionError> {
        let f = self.encoding_polynomial(message)?;
        Ok(self.algebra.partition().points().iter().map(|x| f.eval(x)).collect())
    }

    /// Recovers the single erased symbol from the other points of its block.
    ///
    /// The first `cap + 1` block helpers are interpolated and the result is
    /// evaluated at the erased point. The completed word must pass the parity
    /// check; if the block restriction exceeds the claimed cap it will not, and
    /// the repair is reported as failed.
    pub fn local_repair(&self, word: &[Option<Fp>]) -> Result<Repair, RepairError> {
        if word.len() != self.n {
            return Err(RepairError::Length {
                expected: self.n,
                found: word.len(),
            });
        }
        let erased: Vec<usize> = (0..self.n).filter(|&i| word[i].is_none()).collect();
        let [position] = erased[..] else {
            return Err(RepairError::NotSingleErasure(erased.len()));
        };
        let part = self.algebra.partition();
        let block = part.block_of(position).expect("position inside a block");
        let cap = self.block_caps[block];
        let helpers: Vec<usize> = part.blocks()[block]
            .clone()
            .filter(|&i| i != position)
            .take(cap + 1)
            .collect();
        if helpers.len() < cap + 1 {
            return Err(RepairError::Failed {
                position,
                reason: "block too small for its degree cap",
            });
        }
        let pts: Vec<(Fp, Fp)> = helpers
            .iter()
            .map(|&i| (part.points()[i], word[i].expect("only one erasure")))
            .collect();
        let local = FpPoly::interpolate(&pts).expect("distinct block points");
        let value = local.eval(&part.points()[position]);
        let completed: Vec<Fp> = word
            .iter()
            .map(|s| s.unwrap_or(value))
            .collect();
        let syndrome = self
            .parity_check
            .mul_vec(&completed)
            .expect("length checked");
        if syndrome.iter().any(|e| !e.is_zero()) {
            return Err(RepairError::Failed {
                position,
                reason: "interpolated value fails the parity check",
            });
        }
        Ok(Repair {
            position,
            value,
            helpers,
        })
    }

    /// Sidecar key=value description written next to an exported generator.
    pub fn header(&self) -> String {
        let mut s = String::new();
        let sizes: Vec<String> = self
            .algebra
            .partition()
            .block_sizes()
            .iter()
            .map(|b| b.to_string())
            .collect();
        let _ = writeln!(s, "kind={}", self.kind.name());
        let _ = writeln!(s, "n={}\nk={}\nr={}", self.n, self.k, self.r);
        let _ = writeln!(s, "q={}", self.field().modulus());
        let _ = writeln!(s, "blocks={}", sizes.join(","));
        let _ = writeln!(s, "degcap={}", self.degree_cap);
        let _ = writeln!(s, "d_lower={}", self.claimed_distance);
        match self.claimed_locality() {
            Some(l) => {
                let _ = writeln!(s, "locality={l}");
            }
            None => {
                let last = self.block_caps.len() - 1;
                let _ = writeln!(s, "short_block_locality={}", self.block_caps[last] + 1);
                let _ = writeln!(s, "full_block_locality=unclaimed");
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_message(code: &LrcCode, rng: &mut ChaCha8Rng) -> Vec<Fp> {
        let f = code.field();
        (0..code.k()).map(|_| f.elem(rng.gen_range(0..f.modulus()) as i64)).collect()
    }

    fn unit(code: &LrcCode, idx: usize) -> Vec<Fp> {
        let f = code.field();
        (0..code.k()).map(|i| if i == idx { f.one() } else { f.zero() }).collect()
    }

    #[test]
    fn tamo_barg_10_5_3() {
        let code = LrcCode::tamo_barg(10, 5, 3, None).unwrap();
        assert_eq!(code.field().modulus(), 13);
        assert_eq!(code.degree_cap(), 6);
        assert_eq!(code.generator_matrix().rank(), 5);
        assert_eq!(code.claimed_distance(), 4);
        let pairs: Vec<(usize, usize)> = code.slots().iter().map(|s| (s.i, s.j)).collect();
        assert_eq!(pairs, vec![(0, 0), (0, 1), (1, 1), (2, 0), (2, 1)]);
        assert_eq!(code.block_caps(), &[2, 2, 0]);
    }

    #[test]
    fn constant_and_zero_messages() {
        for code in [
            LrcCode::tamo_barg(10, 5, 3, None).unwrap(),
            LrcCode::modified(9, 5, 5, None).unwrap(),
        ] {
            let f = code.field();
            assert!(code.encode(&vec![f.zero(); code.k()]).unwrap().iter().all(|e| e.is_zero()));
            let ones = code.encode(&unit(&code, 0)).unwrap();
            assert!(ones.iter().all(|e| *e == f.one()));
        }
    }

    #[test]
    fn tamo_barg_layout_errors() {
        assert!(LrcCode::tamo_barg(9, 5, 3, None).is_err()); // s = 1
        assert!(LrcCode::tamo_barg(12, 5, 3, None).is_err()); // s = 0
        assert!(LrcCode::tamo_barg(10, 4, 3, None).is_err()); // 3 does not divide 5
        let f11 = PrimeField::new(11).unwrap();
        assert!(matches!(
            LrcCode::tamo_barg(10, 5, 3, Some(f11)),
            Err(ConstructionError::FieldUnsuitable { .. })
        ));
    }

    #[test]
    fn modified_9_5_5() {
        let code = LrcCode::modified(9, 5, 5, None).unwrap();
        assert_eq!(code.field().modulus(), 11);
        assert_eq!(code.generator_matrix().rank(), 5);
        assert_eq!(code.degree_cap(), 5);
        assert_eq!(code.claimed_distance(), 4);
        assert_eq!(code.algebra().partition().block_sizes(), vec![5, 4]);
        let degrees: Vec<usize> = code.slots().iter().map(|s| s.degree).collect();
        let mut sorted = degrees.clone();
        sorted.sort();
        assert_eq!(sorted, vec![0, 1, 2, 4, 5]);
    }

    #[test]
    fn modified_errors() {
        assert!(LrcCode::modified(10, 5, 3, None).is_err()); // n1 > n2
        assert!(LrcCode::modified(9, 5, 2, None).is_err()); // r too small for k
        // n = 11, r = 5: n1 = 2, n2 = 1
        assert!(LrcCode::modified(11, 6, 5, None).is_err());
    }

    #[test]
    fn generator_rows_are_unit_encodings() {
        let code = LrcCode::tamo_barg(10, 5, 3, None).unwrap();
        for i in 0..code.k() {
            assert_eq!(code.generator_matrix().row(i), &code.encode(&unit(&code, i)).unwrap()[..]);
        }
    }

    #[test]
    fn degree_cap_on_random_messages() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for code in [
            LrcCode::tamo_barg(10, 5, 3, None).unwrap(),
            LrcCode::modified(9, 5, 5, None).unwrap(),
            LrcCode::tamo_barg(14, 8, 3, None).unwrap(),
        ] {
            let cap = match code.kind() {
                CodeKind::TamoBarg => code.k() + code.k().div_ceil(code.r()) - 1,
                CodeKind::Modified => code.k() + code.k() / code.r() - 1,
            };
            let pts = code.algebra().partition().points().to_vec();
            for _ in 0..200 {
                let msg = random_message(&code, &mut rng);
                let cw = code.encode(&msg).unwrap();
                assert_eq!(code.generator_matrix().vec_mul(&msg).unwrap(), cw);
                let pairs: Vec<_> = pts.iter().copied().zip(cw.iter().copied()).collect();
                let f = FpPoly::interpolate(&pairs).unwrap();
                assert!(f.degree().is_none_or(|d| d <= cap), "{:?}", code.kind());
            }
        }
    }

    #[test]
    fn tamo_barg_repairs_every_position() {
        let code = LrcCode::tamo_barg(10, 5, 3, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let cw = code.encode(&random_message(&code, &mut rng)).unwrap();
            for pos in 0..code.n() {
                let mut word: Vec<Option<Fp>> = cw.iter().copied().map(Some).collect();
                word[pos] = None;
                let rep = code.local_repair(&word).unwrap();
                assert_eq!(rep.value, cw[pos]);
                assert!(rep.helpers.len() <= code.r());
            }
        }
    }

    #[test]
    fn modified_short_block_repairs() {
        let code = LrcCode::modified(9, 5, 5, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let cw = code.encode(&random_message(&code, &mut rng)).unwrap();
            for pos in 5..9 {
                let mut word: Vec<Option<Fp>> = cw.iter().copied().map(Some).collect();
                word[pos] = None;
                let rep = code.local_repair(&word).unwrap();
                assert_eq!(rep.value, cw[pos]);
                assert_eq!(rep.helpers.len(), 3);
            }
        }
    }

    #[test]
    fn repair_rejects_bad_input() {
        let code = LrcCode::tamo_barg(10, 5, 3, None).unwrap();
        let f = code.field();
        let full: Vec<Option<Fp>> = vec![Some(f.zero()); 10];
        assert_eq!(code.local_repair(&full), Err(RepairError::NotSingleErasure(0)));
        let mut two = full.clone();
        two[0] = None;
        two[1] = None;
        assert_eq!(code.local_repair(&two), Err(RepairError::NotSingleErasure(2)));
        assert!(matches!(code.local_repair(&full[..9]), Err(RepairError::Length { .. })));
    }

    #[test]
    fn header_fields() {
        let h = LrcCode::tamo_barg(10, 5, 3, None).unwrap().header();
        assert!(h.contains("kind=tamo-barg\n"));
        assert!(h.contains("q=13\n"));
        assert!(h.contains("blocks=4,4,2\n"));
        assert!(h.contains("degcap=6\n"));
        let m = LrcCode::modified(9, 5, 5, None).unwrap().header();
        assert!(m.contains("degcap=5\n"));
        assert!(m.contains("short_block_locality=3\n"));
    }
}
