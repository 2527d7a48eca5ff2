//! Brute-force oracles: exact minimum distance, per-coordinate locality,
//! availability, and a cross-check of a code against its claims and bounds.

use std::fmt::Write as _;

use itertools::Itertools;
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{pack_bits, Field, LinearCode};
use crate::bounds::{gopalan_bound, improved_bound, LrcParams};
use crate::{Fp, FpMatrix};

/// Default cap on exhaustive sweeps: at most `2^24` codewords.
pub const DEFAULT_GUARD_BITS: u32 = 24;
/// Largest dual-codeword weight searched by the locality oracles.
pub const MAX_DUAL_WEIGHT: usize = 6;
/// Column subsets examined by the parity-check distance oracle.
pub const COLUMN_SUBSET_GUARD: u64 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("{what}: {size} exceeds the guard of {guard}")]
    GuardExceeded {
        what: &'static str,
        size: String,
        guard: String,
    },
    #[error("dual weight cap {cap} exceeds the supported maximum {max}")]
    DualCapTooLarge { cap: usize, max: usize },
}

fn sweep_size(q: u32, k: usize, guard_bits: u32) -> Result<u128, VerifyError> {
    let limit = 1u128 << guard_bits.min(120);
    let size = (q as u128).checked_pow(k as u32).filter(|&s| s <= limit);
    size.ok_or_else(|| VerifyError::GuardExceeded {
        what: "codeword sweep",
        size: format!("{q}^{k}"),
        guard: format!("2^{guard_bits}"),
    })
}

/// Exact minimum Hamming weight over all nonzero codewords, by enumerating
/// every message. `None` for the zero code.
///
/// GF(2) runs in Gray-code order on packed rows, other fields in
/// lexicographic order; both split the top message symbols across threads.
pub fn brute_min_distance(code: &LinearCode, guard_bits: u32) -> Result<Option<usize>, VerifyError> {
    let q = code.field().modulus();
    sweep_size(q, code.k(), guard_bits)?;
    if code.k() == 0 {
        return Ok(None);
    }
    let d = if q == 2 {
        binary_sweep(code.generator())
    } else {
        qary_sweep(code.generator())
    };
    Ok(Some(d))
}

fn binary_sweep(g: &FpMatrix) -> usize {
    let (k, n) = (g.rows(), g.cols());
    let rows: Vec<Vec<u64>> = (0..k)
        .map(|i| pack_bits(&g.row(i).iter().map(|e| !e.is_zero()).collect::<Vec<_>>()))
        .collect();
    let words = n.div_ceil(64);
    let split = k.min(6);
    let low = k - split;
    (0u64..1 << split)
        .into_par_iter()
        .map(|top| {
            let mut cur = vec![0u64; words];
            for b in 0..split {
                if top >> b & 1 == 1 {
                    for (c, r) in cur.iter_mut().zip(&rows[low + b]) {
                        *c ^= r;
                    }
                }
            }
            let weight = |c: &[u64]| c.iter().map(|w| w.count_ones() as usize).sum::<usize>();
            let mut best = if top == 0 { usize::MAX } else { weight(&cur) };
            for i in 1u64..1 << low {
                let flip = i.trailing_zeros() as usize;
                for (c, r) in cur.iter_mut().zip(&rows[flip]) {
                    *c ^= r;
                }
                let w = weight(&cur);
                if w > 0 {
                    best = best.min(w);
                }
            }
            best
        })
        .min()
        .unwrap_or(usize::MAX)
}

fn qary_sweep(g: &FpMatrix) -> usize {
    let (k, n) = (g.rows(), g.cols());
    let p = g.field().modulus() as u64;
    let rows: Vec<Vec<u64>> = (0..k)
        .map(|i| g.row(i).iter().map(|e| e.value() as u64).collect())
        .collect();
    (0..p)
        .into_par_iter()
        .map(|top| {
            let mut cur: Vec<u64> = rows[0].iter().map(|&x| x * top % p).collect();
            let weight = |c: &[u64]| c.iter().filter(|&&x| x != 0).count();
            let mut best = if top == 0 { usize::MAX } else { weight(&cur) };
            let mut digits = vec![0u64; k];
            'words: loop {
                // odometer step: add row j, carrying while digit j wraps to zero
                let mut j = 1;
                loop {
                    if j == k {
                        break 'words;
                    }
                    for (c, r) in cur.iter_mut().zip(&rows[j]) {
                        *c = (*c + r) % p;
                    }
                    digits[j] += 1;
                    if digits[j] < p {
                        break;
                    }
                    digits[j] = 0;
                    j += 1;
                }
                let w = weight(&cur);
                if w > 0 {
                    best = best.min(w);
                }
            }
            best
        })
        .min()
        .map(|d| d.min(n))
        .unwrap_or(usize::MAX)
}

/// Exact minimum distance as the smallest number of linearly dependent
/// columns of the parity-check matrix. Works when `q^k` is out of reach but
/// `n - k` is small. `None` for the zero code.
pub fn min_distance_by_columns(code: &LinearCode, max_subsets: u64) -> Result<Option<usize>, VerifyError> {
    if code.k() == 0 {
        return Ok(None);
    }
    let h = code.parity_check();
    let n = code.n();
    let mut examined: u64 = 0;
    for w in 1..=n {
        examined = examined.saturating_add(binomial(n as u64, w as u64));
        if examined > max_subsets {
            return Err(VerifyError::GuardExceeded {
                what: "column subsets",
                size: format!("{examined} up to size {w}"),
                guard: max_subsets.to_string(),
            });
        }
        let subsets: Vec<Vec<usize>> = (0..n).combinations(w).collect();
        if subsets.par_iter().any(|cols| h.select_columns(cols).rank() < w) {
            return Ok(Some(w));
        }
    }
    unreachable!("a nonzero code has n dependent columns")
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// A repair set for one coordinate together with the dual codeword that
/// realizes it (`w . c = 0` for every codeword, `w[target] = 1`).
#[derive(Debug, Clone, PartialEq)]
pub struct RepairWitness {
    pub target: usize,
    pub helpers: Vec<usize>,
    pub dual: Vec<Fp>,
}

/// Dual word supported on `helpers + target` with `target` coefficient 1,
/// if column `target` of `g` lies in the span of the helper columns.
fn repair_witness(g: &FpMatrix, target: usize, helpers: &[usize]) -> Option<RepairWitness> {
    let mut cols = helpers.to_vec();
    cols.push(target);
    let last = cols.len() - 1;
    let null = g.select_columns(&cols).nullspace();
    let v = null.into_iter().find(|v| !v[last].is_zero())?;
    let scale = v[last].inv().expect("nonzero");
    let f = g.field();
    let mut dual = vec![f.zero(); g.cols()];
    for (&c, x) in cols.iter().zip(&v) {
        dual[c] = *x * scale;
    }
    Some(RepairWitness {
        target,
        helpers: helpers.to_vec(),
        dual,
    })
}

fn check_cap(weight: usize) -> Result<(), VerifyError> {
    if weight > MAX_DUAL_WEIGHT {
        return Err(VerifyError::DualCapTooLarge {
            cap: weight,
            max: MAX_DUAL_WEIGHT,
        });
    }
    Ok(())
}

/// Minimal helper count of every coordinate, searched up to `cap` helpers.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalityProfile {
    pub cap: usize,
    pub witnesses: Vec<Option<RepairWitness>>,
}

impl LocalityProfile {
    /// Per-coordinate locality; `None` when nothing within the cap repairs it.
    pub fn entries(&self) -> Vec<Option<usize>> {
        self.witnesses.iter().map(|w| w.as_ref().map(|w| w.helpers.len())).collect()
    }

    /// Largest locality, if every coordinate was repaired within the cap.
    pub fn max(&self) -> Option<usize> {
        self.entries().into_iter().try_fold(0, |m, e| e.map(|e| m.max(e)))
    }

    pub fn all_within(&self, r: usize) -> bool {
        self.entries().iter().all(|e| e.is_some_and(|e| e <= r))
    }

    pub fn render(&self) -> String {
        self.entries()
            .iter()
            .map(|e| e.map_or("-".to_string(), |e| e.to_string()))
            .join(",")
    }
}

/// For each coordinate, the fewest other coordinates whose values determine
/// it, found by exhaustive search over helper sets of size at most `cap`.
pub fn locality_profile(code: &LinearCode, cap: usize) -> Result<LocalityProfile, VerifyError> {
    check_cap(cap + 1)?;
    let g = code.generator();
    let n = code.n();
    let witnesses = (0..n)
        .into_par_iter()
        .map(|i| {
            let others: Vec<usize> = (0..n).filter(|&j| j != i).collect();
            (0..=cap.min(n - 1)).find_map(|s| {
                others
                    .iter()
                    .copied()
                    .combinations(s)
                    .find_map(|helpers| repair_witness(g, i, &helpers))
            })
        })
        .collect();
    Ok(LocalityProfile { cap, witnesses })
}

#[derive(Debug, Clone, PartialEq)]
pub struct AvailabilityResult {
    pub r: usize,
    pub t: usize,
    /// `t` repair sets with pairwise disjoint helpers, per coordinate.
    pub witnesses: Vec<Option<Vec<RepairWitness>>>,
}

impl AvailabilityResult {
    pub fn holds(&self) -> bool {
        self.witnesses.iter().all(Option::is_some)
    }

    pub fn failing(&self) -> Vec<usize> {
        (0..self.witnesses.len()).filter(|&i| self.witnesses[i].is_none()).collect()
    }
}

fn pick_disjoint(sets: &[RepairWitness], t: usize, chosen: &mut Vec<usize>, start: usize) -> bool {
    if chosen.len() == t {
        return true;
    }
    for idx in start..sets.len() {
        let clash = chosen
            .iter()
            .any(|&c| sets[c].helpers.iter().any(|h| sets[idx].helpers.contains(h)));
        if clash {
            continue;
        }
        chosen.push(idx);
        if pick_disjoint(sets, t, chosen, idx + 1) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Looks for `t` repair sets of at most `r` helpers each, pairwise disjoint,
/// for every coordinate. All inclusion-minimal repair sets up to size `r` are
/// enumerated and a disjoint family is found by backtracking.
pub fn availability_check(code: &LinearCode, r: usize, t: usize) -> Result<AvailabilityResult, VerifyError> {
    check_cap(r + 1)?;
    let g = code.generator();
    let n = code.n();
    let witnesses = (0..n)
        .into_par_iter()
        .map(|i| {
            let others: Vec<usize> = (0..n).filter(|&j| j != i).collect();
            if let Some(w) = repair_witness(g, i, &[]) {
                return Some(vec![w; t]);
            }
            let mut minimal: Vec<RepairWitness> = Vec::new();
            for s in 1..=r.min(n - 1) {
                for helpers in others.iter().copied().combinations(s) {
                    let covered = minimal
                        .iter()
                        .any(|m| m.helpers.iter().all(|h| helpers.contains(h)));
                    if covered {
                        continue;
                    }
                    if let Some(w) = repair_witness(g, i, &helpers) {
                        minimal.push(w);
                    }
                }
            }
            let mut chosen = Vec::new();
            pick_disjoint(&minimal, t, &mut chosen, 0)
                .then(|| chosen.iter().map(|&c| minimal[c].clone()).collect())
        })
        .collect();
    Ok(AvailabilityResult { r, t, witnesses })
}

/// `true` when `w` is orthogonal to every generator row.
pub fn is_dual_word(code: &LinearCode, w: &[Fp]) -> bool {
    code.generator()
        .mul_vec(w)
        .is_ok_and(|s| s.iter().all(|e| e.is_zero()))
}

/// Properties a code is claimed to have.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Claims {
    pub d_lower: Option<usize>,
    pub locality: Option<usize>,
    pub availability: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub guard_bits: u32,
    /// Largest dual-codeword weight searched; locality cap is one less.
    pub dual_cap: usize,
    pub column_guard: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            guard_bits: DEFAULT_GUARD_BITS,
            dual_cap: MAX_DUAL_WEIGHT,
            column_guard: COLUMN_SUBSET_GUARD,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceMethod {
    Exhaustive,
    ColumnDependence,
}

impl DistanceMethod {
    pub fn name(&self) -> &'static str {
        match self {
            DistanceMethod::Exhaustive => "exhaustive",
            DistanceMethod::ColumnDependence => "column-dependence",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn name(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub check: &'static str,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub label: String,
    pub n: usize,
    pub k: usize,
    pub q: u32,
    pub distance: Option<(usize, DistanceMethod)>,
    pub distance_note: Option<String>,
    pub claims: Claims,
    pub profile: Option<LocalityProfile>,
    pub availability: Option<AvailabilityResult>,
    /// Upper bounds on `d` valid for the measured locality.
    pub bounds: Vec<(&'static str, i64)>,
    pub verdicts: Vec<Verdict>,
}

fn fmt_opt<T: ToString>(v: Option<T>, missing: &str) -> String {
    v.map_or(missing.to_string(), |v| v.to_string())
}

pub const REPORT_CSV_HEADER: &str =
    "code,n,k,q,d,d_method,locality_max,claim_d_lower,claim_locality,claim_availability,availability,result";

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.status != Status::Fail)
    }

    pub fn verdict(&self, check: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.check == check)
    }

    pub fn measured_d(&self) -> Option<usize> {
        self.distance.map(|d| d.0)
    }

    pub fn to_kv(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "code={}", self.label);
        let _ = writeln!(s, "n={}\nk={}\nq={}", self.n, self.k, self.q);
        let _ = writeln!(s, "d={}", fmt_opt(self.measured_d(), "not-computed"));
        if let Some((_, m)) = self.distance {
            let _ = writeln!(s, "d_method={}", m.name());
        }
        if let Some(note) = &self.distance_note {
            let _ = writeln!(s, "d_note={note}");
        }
        let _ = writeln!(s, "claim_d_lower={}", fmt_opt(self.claims.d_lower, "none"));
        let _ = writeln!(s, "claim_locality={}", fmt_opt(self.claims.locality, "none"));
        let _ = writeln!(s, "claim_availability={}", fmt_opt(self.claims.availability, "none"));
        if let Some(p) = &self.profile {
            let _ = writeln!(s, "locality_cap={}", p.cap);
            let _ = writeln!(s, "locality_profile={}", p.render());
            let _ = writeln!(s, "locality_max={}", fmt_opt(p.max(), "over-cap"));
        }
        if let Some(a) = &self.availability {
            let _ = writeln!(s, "availability_r={}\navailability_t={}", a.r, a.t);
            let _ = writeln!(s, "availability_holds={}", a.holds());
            if !a.holds() {
                let _ = writeln!(s, "availability_failing={}", a.failing().iter().join(","));
            }
        }
        for (name, v) in &self.bounds {
            let _ = writeln!(s, "bound_{name}={v}");
        }
        for v in &self.verdicts {
            let _ = writeln!(s, "check_{}={} ({})", v.check, v.status.name(), v.detail);
        }
        let _ = writeln!(s, "result={}", if self.passed() { "pass" } else { "fail" });
        s
    }

    pub fn to_csv_row(&self) -> String {
        [
            self.label.clone(),
            self.n.to_string(),
            self.k.to_string(),
            self.q.to_string(),
            fmt_opt(self.measured_d(), "not-computed"),
            self.distance.map_or("none", |d| d.1.name()).to_string(),
            fmt_opt(self.profile.as_ref().and_then(|p| p.max()), "over-cap"),
            fmt_opt(self.claims.d_lower, "none"),
            fmt_opt(self.claims.locality, "none"),
            fmt_opt(self.claims.availability, "none"),
            self.availability
                .as_ref()
                .map_or("none".to_string(), |a| a.holds().to_string()),
            (if self.passed() { "pass" } else { "fail" }).to_string(),
        ]
        .join(",")
    }
}

fn measure_distance(code: &LinearCode, cfg: &VerifyConfig) -> Result<Option<(usize, DistanceMethod)>, VerifyError> {
    match brute_min_distance(code, cfg.guard_bits) {
        Ok(d) => Ok(d.map(|d| (d, DistanceMethod::Exhaustive))),
        Err(sweep_err) => match min_distance_by_columns(code, cfg.column_guard) {
            Ok(d) => Ok(d.map(|d| (d, DistanceMethod::ColumnDependence))),
            Err(_) => Err(sweep_err),
        },
    }
}

/// Measures distance, locality and availability and compares them with the
/// claims and with every upper bound that applies at the measured locality.
pub fn cross_check(label: &str, code: &LinearCode, claims: Claims, cfg: &VerifyConfig) -> VerificationReport {
    let (n, k) = (code.n(), code.k());
    let mut verdicts = Vec::new();
    let mut push = |check, status, detail: String| verdicts.push(Verdict { check, status, detail });

    let (distance, distance_note) = match measure_distance(code, cfg) {
        Ok(d) => (d, None),
        Err(e) => (None, Some(e.to_string())),
    };
    let d = distance.map(|d| d.0);
    if let Some(claim) = claims.d_lower {
        match d {
            Some(d) => push(
                "distance",
                if d >= claim { Status::Pass } else { Status::Fail },
                format!("measured {d}, claimed at least {claim}"),
            ),
            None if k == 0 => push("distance", Status::Fail, "zero code".into()),
            None => push("distance", Status::Skipped, "distance not computed".into()),
        }
    }

    let cap = cfg.dual_cap.saturating_sub(1);
    let profile = match locality_profile(code, cap) {
        Ok(p) => Some(p),
        Err(e) => {
            push("locality", Status::Skipped, e.to_string());
            None
        }
    };
    if let (Some(claim), Some(p)) = (claims.locality, &profile) {
        if p.all_within(claim) {
            push("locality", Status::Pass, format!("every coordinate within {claim}"));
        } else if claim > p.cap && p.max().is_none() {
            push("locality", Status::Skipped, format!("claim {claim} above search cap {}", p.cap));
        } else {
            let bad: Vec<usize> = p
                .entries()
                .iter()
                .enumerate()
                .filter(|(_, e)| !e.is_some_and(|e| e <= claim))
                .map(|(i, _)| i)
                .collect();
            push(
                "locality",
                Status::Fail,
                format!("coordinates {} need more than {claim}", bad.iter().join(",")),
            );
        }
    }
    if let Some(p) = &profile {
        let ok = p
            .witnesses
            .iter()
            .flatten()
            .all(|w| is_dual_word(code, &w.dual) && !w.dual[w.target].is_zero());
        push(
            "witnesses",
            if ok { Status::Pass } else { Status::Fail },
            "repair witnesses are dual codewords".into(),
        );
    }

    let repair_r = claims.locality.or_else(|| profile.as_ref().and_then(|p| p.max()));
    let availability = match (claims.availability, repair_r) {
        (Some(t), Some(r)) => match availability_check(code, r, t) {
            Ok(a) => {
                let holds = a.holds();
                push(
                    "availability",
                    if holds { Status::Pass } else { Status::Fail },
                    format!("{t} disjoint repair sets of size <= {r}"),
                );
                Some(a)
            }
            Err(e) => {
                push("availability", Status::Skipped, e.to_string());
                None
            }
        },
        (Some(_), None) => {
            push("availability", Status::Skipped, "no locality to test against".into());
            None
        }
        _ => None,
    };

    let mut bounds = Vec::new();
    if k > 0 {
        bounds.push(("singleton", n as i64 - k as i64 + 1));
        if let Some(r) = profile.as_ref().and_then(|p| p.max()).filter(|&r| r > 0) {
            if let Ok(b) = gopalan_bound(n as u32, k as u32, r as u32) {
                bounds.push(("gopalan", b));
            }
            if let Ok(b) = LrcParams::new(n as u32, k as u32, r as u32).and_then(|p| improved_bound(&p)) {
                bounds.push(("improved", b.value));
            }
        }
    }
    if let Some(d) = d {
        for &(name, b) in &bounds {
            push(
                match name {
                    "singleton" => "singleton",
                    "gopalan" => "gopalan",
                    _ => "improved",
                },
                if d as i64 <= b { Status::Pass } else { Status::Fail },
                format!("measured {d} against upper bound {b}"),
            );
        }
    }

    VerificationReport {
        label: label.to_string(),
        n,
        k,
        q: code.field().modulus(),
        distance,
        distance_note,
        claims,
        profile,
        availability,
        bounds,
        verdicts,
    }
}
