//! Distance and rate bounds for locally repairable codes.
//!
//! Parameters follow the usual `[n, k]` code with all-symbol locality `r`.
//! The derived quantities are
//!
//! * `n1 = ceil(n / (r + 1))`, the least number of local groups,
//! * `n2 = n1 (r + 1) - n`, the slack of the last group,
//! * `u = floor(k / r)` and `v = k - u r`.
//!
//! The integer-program bound is driven by `Psi(x)`, a max-min over ways of
//! splitting the `n1` groups into parts `(t_i, a_i)`; it is solved here by
//! exhaustive enumeration on small instances.

use std::fmt::Write as _;

use num_integer::Integer;
use thiserror::Error;

use crate::Rate;

/// Largest `n1` / `n2` accepted by the exhaustive Psi solver.
pub const PSI_GUARD: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("invalid parameters (n={n}, k={k}, r={r}): {reason}")]
    InvalidParams {
        n: u32,
        k: u32,
        r: u32,
        reason: &'static str,
    },
    #[error("instance n1={n1}, n2={n2} exceeds the enumeration guard {guard}")]
    GuardExceeded { n1: u32, n2: u32, guard: u32 },
    #[error("x={x} outside 1..={n1}")]
    OutOfRange { x: u32, n1: u32 },
    #[error("bound not applicable: {0}")]
    NotApplicable(&'static str),
}

/// `(n, k, r)` with `1 <= r < k < n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LrcParams {
    pub n: u32,
    pub k: u32,
    pub r: u32,
}

impl LrcParams {
    pub fn new(n: u32, k: u32, r: u32) -> Result<Self, BoundsError> {
        let invalid = |reason| BoundsError::InvalidParams { n, k, r, reason };
        if r < 1 {
            return Err(invalid("locality must be at least 1"));
        }
        if r >= k {
            return Err(invalid("need r < k"));
        }
        if k >= n {
            return Err(invalid("need k < n"));
        }
        Ok(Self { n, k, r })
    }

    pub fn n1(&self) -> u32 {
        self.n.div_ceil(self.r + 1)
    }

    pub fn n2(&self) -> u32 {
        self.n1() * (self.r + 1) - self.n
    }

    pub fn u(&self) -> u32 {
        self.k / self.r
    }

    pub fn v(&self) -> u32 {
        self.k % self.r
    }

    pub fn gopalan(&self) -> i64 {
        gopalan_value(self.n, self.k, self.r)
    }
}

fn gopalan_value(n: u32, k: u32, r: u32) -> i64 {
    n as i64 - k as i64 + 1 - (k.div_ceil(r) as i64 - 1)
}

/// `n - k + 1 - (ceil(k/r) - 1)`.
///
/// Accepts `r >= k` (where it collapses to the Singleton bound); only needs
/// `1 <= k <= n` and `r >= 1`.
pub fn gopalan_bound(n: u32, k: u32, r: u32) -> Result<i64, BoundsError> {
    let invalid = |reason| BoundsError::InvalidParams { n, k, r, reason };
    if r < 1 {
        return Err(invalid("locality must be at least 1"));
    }
    if k < 1 || k > n {
        return Err(invalid("need 1 <= k <= n"));
    }
    Ok(gopalan_value(n, k, r))
}

/// One feasible point of the outer maximization together with its value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IpWitness {
    pub s: usize,
    pub t: Vec<u32>,
    pub a: Vec<u32>,
    pub value: i64,
}

impl IpWitness {
    /// Checks the outer constraints against `(n1, n2)`.
    pub fn is_feasible(&self, n1: u32, n2: u32) -> bool {
        self.s >= 1
            && self.t.len() == self.s
            && self.a.len() == self.s
            && self.t.iter().sum::<u32>() == n1
            && self.a.iter().sum::<u32>() == n2
            && self.t.iter().zip(&self.a).all(|(&t, &a)| t >= 1 && a + 1 >= t)
    }
}

/// Inner minimization for fixed parts:
/// `min (x r + 1 - sum_{i<l} (a_{h_i} - t_{h_i}))` over sequences of distinct
/// part indices with `t_{h_1}+..+t_{h_{l-1}} < x <= t_{h_1}+..+t_{h_l}`.
///
/// Only the set of the first `l - 1` indices matters, so this walks subsets.
pub fn inner_min(x: u32, r: u32, t: &[u32], a: &[u32]) -> Option<i64> {
    let best = best_prefix_gains(t, a, x);
    best[x as usize].map(|g| x as i64 * r as i64 + 1 - g)
}

/// For every `x` in `0..=sum(t)`, the largest `sum_S (a_i - t_i)` over index
/// sets `S` that can be the prefix of a sequence crossing `x`.
fn best_prefix_gains(t: &[u32], a: &[u32], x_max: u32) -> Vec<Option<i64>> {
    let s = t.len();
    let total: u32 = t.iter().sum();
    let mut best = vec![None::<i64>; (total.max(x_max) + 1) as usize];
    let full = (1usize << s) - 1;
    let mut sum_t = vec![0u32; 1 << s];
    let mut sum_b = vec![0i64; 1 << s];
    for mask in 1..=full {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        sum_t[mask] = sum_t[rest] + t[low];
        sum_b[mask] = sum_b[rest] + a[low] as i64 - t[low] as i64;
    }
    for mask in 0..=full {
        let max_out = (0..s)
            .filter(|&i| mask >> i & 1 == 0)
            .map(|i| t[i])
            .max();
        let Some(max_out) = max_out else { continue };
        let lo = sum_t[mask];
        for x in lo + 1..=(lo + max_out).min(x_max) {
            let slot = &mut best[x as usize];
            *slot = Some(slot.map_or(sum_b[mask], |g| g.max(sum_b[mask])));
        }
    }
    best
}

/// Every feasible part multiset `(t_i, a_i)`, listed in nonincreasing order.
/// Permuting parts does not change either optimization.
fn for_each_config(n1: u32, n2: u32, mut visit: impl FnMut(&[u32], &[u32])) {
    fn rec(
        rem_t: u32,
        rem_a: u32,
        prev: (u32, u32),
        t: &mut Vec<u32>,
        a: &mut Vec<u32>,
        visit: &mut dyn FnMut(&[u32], &[u32]),
    ) {
        if rem_t == 0 {
            if rem_a == 0 {
                visit(t, a);
            }
            return;
        }
        for ti in (1..=prev.0.min(rem_t)).rev() {
            let a_cap = if ti == prev.0 { prev.1.min(rem_a) } else { rem_a };
            if a_cap + 1 < ti {
                continue;
            }
            for ai in (ti - 1..=a_cap).rev() {
                t.push(ti);
                a.push(ai);
                rec(rem_t - ti, rem_a - ai, (ti, ai), t, a, visit);
                t.pop();
                a.pop();
            }
        }
    }
    rec(n1, n2, (n1, n2), &mut Vec::new(), &mut Vec::new(), &mut visit);
}

/// For each `x` in `1..=n1`: `Psi(x) - (x r + 1)` and a maximizing witness
/// (with `value` left as the offset).
fn psi_offsets(n1: u32, n2: u32) -> Vec<(i64, IpWitness)> {
    let mut best: Vec<Option<(i64, IpWitness)>> = vec![None; n1 as usize + 1];
    for_each_config(n1, n2, |t, a| {
        let gains = best_prefix_gains(t, a, n1);
        for x in 1..=n1 as usize {
            let offset = -gains[x].expect("x <= n1 is always crossed");
            if best[x].as_ref().is_none_or(|(b, _)| offset > *b) {
                let w = IpWitness {
                    s: t.len(),
                    t: t.to_vec(),
                    a: a.to_vec(),
                    value: offset,
                };
                best[x] = Some((offset, w));
            }
        }
    });
    best.into_iter().skip(1).map(|b| b.expect("n1 >= 1")).collect()
}

fn check_guard(n1: u32, n2: u32) -> Result<(), BoundsError> {
    if n1 > PSI_GUARD || n2 > PSI_GUARD {
        return Err(BoundsError::GuardExceeded {
            n1,
            n2,
            guard: PSI_GUARD,
        });
    }
    Ok(())
}

/// Exact `Psi(x)` by exhaustive enumeration.
pub fn psi_bruteforce(x: u32, n1: u32, n2: u32, r: u32) -> Result<IpWitness, BoundsError> {
    if r < 1 {
        return Err(BoundsError::InvalidParams {
            n: 0,
            k: 0,
            r,
            reason: "locality must be at least 1",
        });
    }
    check_guard(n1, n2)?;
    if x < 1 || x > n1 {
        return Err(BoundsError::OutOfRange { x, n1 });
    }
    let (offset, mut witness) = psi_offsets(n1, n2).swap_remove(x as usize - 1);
    witness.value = x as i64 * r as i64 + 1 + offset;
    Ok(witness)
}

/// `Psi(x) = x r + 1`, valid whenever `n1 <= n2`.
pub fn psi_closed(x: u32, r: u32) -> Result<i64, BoundsError> {
    if x < 1 {
        return Err(BoundsError::OutOfRange { x, n1: 0 });
    }
    Ok(x as i64 * r as i64 + 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IpBound {
    pub value: i64,
    pub eta: u32,
    /// `Psi(1..=n1)`.
    pub psi: Vec<i64>,
}

/// `n - k + 1 - eta` with `eta = max{x : Psi(x) - x < k}` (0 if no `x` qualifies).
pub fn ip_bound_detail(p: &LrcParams) -> Result<IpBound, BoundsError> {
    let (n1, n2) = (p.n1(), p.n2());
    check_guard(n1, n2)?;
    let psi: Vec<i64> = psi_offsets(n1, n2)
        .into_iter()
        .enumerate()
        .map(|(i, (off, _))| (i as i64 + 1) * p.r as i64 + 1 + off)
        .collect();
    let eta = psi
        .iter()
        .enumerate()
        .filter(|(i, &v)| v - (*i as i64 + 1) < p.k as i64)
        .map(|(i, _)| i as u32 + 1)
        .max()
        .unwrap_or(0);
    Ok(IpBound {
        value: p.n as i64 - p.k as i64 + 1 - eta as i64,
        eta,
        psi,
    })
}

pub fn ip_distance_bound(p: &LrcParams) -> Result<i64, BoundsError> {
    ip_bound_detail(p).map(|b| b.value)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ImprovedBound {
    pub value: i64,
    /// The `(u, v)` split form; only emitted where it agrees with `value`.
    pub piecewise: Option<i64>,
}

/// `n - k + 1 - (ceil((k-1)/(r-1)) - 1)`, proven for `n1 <= n2`.
pub fn improved_bound(p: &LrcParams) -> Result<ImprovedBound, BoundsError> {
    if p.r < 2 {
        return Err(BoundsError::NotApplicable("needs r >= 2"));
    }
    if p.n1() > p.n2() {
        return Err(BoundsError::NotApplicable("needs n1 <= n2"));
    }
    let (n, k, r) = (p.n as i64, p.k as i64, p.r as i64);
    let value = n - k + 1 - (Integer::div_ceil(&(k - 1), &(r - 1)) - 1);
    let (u, v) = (p.u() as i64, p.v() as i64);
    // ceil((k-1)/(r-1)) = u + 1 + [u+v > r] holds exactly for 2 <= u+v <= 2r-1
    let piecewise = (2..=2 * r - 1).contains(&(u + v)).then(|| {
        if u + v <= r {
            n - k - u + 1
        } else {
            n - k - u
        }
    });
    Ok(ImprovedBound { value, piecewise })
}

/// `prod_{i=1..t} i r / (i r + 1)`, the rate ceiling for locality `r` and
/// availability `t`.
pub fn availability_rate_upper(r: u32, t: u32) -> Result<Rate, BoundsError> {
    if r < 1 || t < 1 {
        return Err(BoundsError::InvalidParams {
            n: 0,
            k: 0,
            r,
            reason: "need r >= 1 and t >= 1",
        });
    }
    Ok((1..=t as u64)
        .map(|i| Rate::new(i * r as u64, i * r as u64 + 1))
        .product())
}

/// `1 - t / (r + 1)`, the rate floor for an `(r+1, t)`-regular Tanner graph.
pub fn regular_rate_lower(r: u32, t: u32) -> Result<Rate, BoundsError> {
    if t < 1 || t > r + 1 {
        return Err(BoundsError::InvalidParams {
            n: 0,
            k: 0,
            r,
            reason: "need 1 <= t <= r + 1",
        });
    }
    Ok(Rate::new((r + 1 - t) as u64, (r + 1) as u64))
}

/// Every bound for one parameter triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub params: LrcParams,
    pub gopalan: i64,
    /// `None`: not computed (guard exceeded).
    pub ip: Option<i64>,
    /// `None`: not applicable.
    pub improved: Option<ImprovedBound>,
    pub notes: Vec<String>,
}

pub const CSV_HEADER: &str = "n,k,r,n1,n2,gopalan,ip,improved,applicable";

impl BoundReport {
    pub fn compute(params: LrcParams) -> Self {
        let mut notes = Vec::new();
        let ip = match ip_distance_bound(&params) {
            Ok(v) => Some(v),
            Err(e) => {
                notes.push(format!("ip: {e}"));
                None
            }
        };
        let improved = match improved_bound(&params) {
            Ok(b) => Some(b),
            Err(e) => {
                notes.push(format!("improved: {e}"));
                None
            }
        };
        if let Some(b) = improved {
            if b.value < params.gopalan() {
                notes.push("improved bound strictly tighter than gopalan".into());
            }
        }
        Self {
            params,
            gopalan: params.gopalan(),
            ip,
            improved,
            notes,
        }
    }

    pub fn applicable(&self) -> bool {
        self.improved.is_some()
    }

    fn ip_text(&self) -> String {
        self.ip.map_or("not-computed".into(), |v| v.to_string())
    }

    fn improved_text(&self) -> String {
        self.improved
            .map_or("not-applicable".into(), |b| b.value.to_string())
    }

    pub fn to_kv(&self) -> String {
        let p = &self.params;
        let mut s = String::new();
        let _ = writeln!(s, "n={}\nk={}\nr={}", p.n, p.k, p.r);
        let _ = writeln!(s, "n1={}\nn2={}\nu={}\nv={}", p.n1(), p.n2(), p.u(), p.v());
        let _ = writeln!(s, "gopalan={}", self.gopalan);
        let _ = writeln!(s, "ip={}", self.ip_text());
        let _ = writeln!(s, "improved={}", self.improved_text());
        let piecewise = self
            .improved
            .and_then(|b| b.piecewise)
            .map_or("not-emitted".into(), |v| v.to_string());
        let _ = writeln!(s, "piecewise={piecewise}");
        let _ = writeln!(s, "applicable={}", self.applicable());
        for note in &self.notes {
            let _ = writeln!(s, "note={note}");
        }
        s
    }

    pub fn to_csv_row(&self) -> String {
        let p = &self.params;
        format!(
            "{},{},{},{},{},{},{},{},{}",
            p.n,
            p.k,
            p.r,
            p.n1(),
            p.n2(),
            self.gopalan,
            self.ip_text(),
            self.improved_text(),
            self.applicable()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent inner minimization: walks explicit ordered sequences of
    /// distinct indices instead of subsets.
    fn inner_min_by_sequences(x: u32, r: u32, t: &[u32], a: &[u32]) -> i64 {
        fn walk(x: u32, t: &[u32], a: &[u32], used: &mut Vec<bool>, sum_t: u32, gain: i64, out: &mut Vec<i64>) {
            for h in 0..t.len() {
                if used[h] {
                    continue;
                }
                if sum_t + t[h] >= x {
                    // h closes the sequence; its own (a - t) is not counted
                    out.push(gain);
                } else {
                    used[h] = true;
                    walk(x, t, a, used, sum_t + t[h], gain + a[h] as i64 - t[h] as i64, out);
                    used[h] = false;
                }
            }
        }
        let mut gains = Vec::new();
        walk(x, t, a, &mut vec![false; t.len()], 0, 0, &mut gains);
        gains.iter().map(|g| x as i64 * r as i64 + 1 - g).min().unwrap()
    }

    /// Independent outer maximization over ordered compositions.
    fn psi_by_compositions(x: u32, n1: u32, n2: u32, r: u32) -> i64 {
        fn compositions(total: u32, parts: usize, min: &dyn Fn(usize) -> u32, out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>) {
            if cur.len() == parts {
                if total == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let lo = min(cur.len());
            for v in lo..=total {
                cur.push(v);
                compositions(total - v, parts, min, out, cur);
                cur.pop();
            }
        }
        let mut best = i64::MIN;
        for s in 1..=n1 as usize {
            let mut ts = Vec::new();
            compositions(n1, s, &|_| 1, &mut ts, &mut Vec::new());
            for t in &ts {
                let mut as_ = Vec::new();
                compositions(n2, s, &|i| t[i] - 1, &mut as_, &mut Vec::new());
                for a in &as_ {
                    best = best.max(inner_min_by_sequences(x, r, t, a));
                }
            }
        }
        best
    }

    #[test]
    fn gopalan_examples() {
        assert_eq!(gopalan_bound(9, 4, 2), Ok(5));
        assert_eq!(gopalan_bound(10, 5, 3), Ok(5));
        // r = k collapses to Singleton
        assert_eq!(gopalan_bound(12, 5, 5), Ok(8));
        assert!(gopalan_bound(5, 6, 2).is_err());
        assert!(gopalan_bound(5, 3, 0).is_err());
    }

    #[test]
    fn params_validation() {
        assert!(LrcParams::new(9, 4, 4).is_err());
        assert!(LrcParams::new(4, 4, 2).is_err());
        assert!(LrcParams::new(9, 4, 0).is_err());
        let p = LrcParams::new(10, 5, 3).unwrap();
        assert_eq!((p.n1(), p.n2(), p.u(), p.v()), (3, 2, 1, 2));
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi_bruteforce(1, 2, 3, 4).unwrap().value, 5);
        assert_eq!(psi_bruteforce(2, 3, 3, 3).unwrap().value, 7);
        let w = psi_bruteforce(3, 3, 1, 2).unwrap();
        assert_eq!(w.value, 8);
        assert!(w.is_feasible(3, 1));
        assert_eq!(psi_closed(1, 2), Ok(3));
        assert_eq!(psi_closed(5, 1), Ok(6));
    }

    #[test]
    fn psi_errors() {
        assert!(matches!(psi_bruteforce(1, 9, 9, 2), Err(BoundsError::GuardExceeded { .. })));
        assert!(matches!(psi_bruteforce(0, 3, 3, 2), Err(BoundsError::OutOfRange { .. })));
        assert!(matches!(psi_bruteforce(4, 3, 3, 2), Err(BoundsError::OutOfRange { .. })));
    }

    #[test]
    fn psi_matches_independent_enumeration() {
        for n1 in 1..=4 {
            for n2 in 0..=4 {
                for x in 1..=n1 {
                    for r in [1, 3] {
                        assert_eq!(
                            psi_bruteforce(x, n1, n2, r).unwrap().value,
                            psi_by_compositions(x, n1, n2, r),
                            "x={x} n1={n1} n2={n2} r={r}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn psi_closed_form_sweep() {
        for n2 in 1..=6 {
            for n1 in 1..=n2 {
                for x in 1..=n1 {
                    for r in 1..=5 {
                        assert_eq!(psi_bruteforce(x, n1, n2, r).unwrap().value, psi_closed(x, r).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn ip_examples() {
        // eta from the closed form: ceil((k-1)/(r-1)) - 1
        let p = LrcParams::new(9, 6, 3).unwrap();
        let d = ip_bound_detail(&p).unwrap();
        assert_eq!((d.value, d.eta), (2, 2));
        assert_eq!(d.psi, vec![4, 7, 10]);
        assert_eq!(ip_distance_bound(&LrcParams::new(9, 5, 3).unwrap()), Ok(4));
    }

    #[test]
    fn improved_examples() {
        let p = LrcParams::new(9, 6, 3).unwrap();
        let b = improved_bound(&p).unwrap();
        assert_eq!(b, ImprovedBound { value: 2, piecewise: Some(2) });
        assert_eq!(p.gopalan(), 3);
        let q = LrcParams::new(9, 5, 3).unwrap();
        assert_eq!(improved_bound(&q).unwrap().value, 4);
        assert_eq!(q.gopalan(), 4);
        assert!(matches!(
            improved_bound(&LrcParams::new(10, 5, 3).unwrap()),
            Err(BoundsError::NotApplicable(_))
        ));
        assert!(improved_bound(&LrcParams::new(3, 2, 1).unwrap()).is_err());
    }

    #[test]
    fn piecewise_agrees_where_emitted() {
        for r in 2..=8u32 {
            for k in r + 1..=60 {
                let p = LrcParams { n: 100, k, r };
                if p.n1() > p.n2() {
                    continue;
                }
                let b = improved_bound(&p).unwrap();
                let uv = p.u() + p.v();
                if let Some(pw) = b.piecewise {
                    assert_eq!(pw, b.value, "k={k} r={r}");
                }
                assert_eq!(b.piecewise.is_some(), (2..=2 * r - 1).contains(&uv));
            }
        }
    }

    #[test]
    fn witness_reevaluates() {
        for (x, n1, n2, r) in [(3, 3, 1, 2), (2, 4, 2, 3), (4, 5, 1, 2), (3, 6, 6, 4), (5, 6, 2, 3)] {
            let w = psi_bruteforce(x, n1, n2, r).unwrap();
            assert!(w.is_feasible(n1, n2));
            assert_eq!(inner_min_by_sequences(x, r, &w.t, &w.a), w.value);
            assert_eq!(inner_min(x, r, &w.t, &w.a), Some(w.value));
        }
    }

    #[test]
    fn rates() {
        assert_eq!(availability_rate_upper(2, 2), Ok(Rate::new(8, 15)));
        assert_eq!(availability_rate_upper(5, 1), Ok(Rate::new(5, 6)));
        assert_eq!(availability_rate_upper(1, 1), Ok(Rate::new(1, 2)));
        assert_eq!(regular_rate_lower(2, 2), Ok(Rate::new(1, 3)));
        assert_eq!(regular_rate_lower(1, 2), Ok(Rate::new(0, 1)));
        assert!(regular_rate_lower(1, 3).is_err());
        assert!(availability_rate_upper(0, 1).is_err());
        for r in 2..50 {
            assert!(availability_rate_upper(r, 2).unwrap() > regular_rate_lower(r, 2).unwrap());
        }
    }

    #[test]
    fn report_text() {
        let rep = BoundReport::compute(LrcParams::new(9, 6, 3).unwrap());
        let kv = rep.to_kv();
        assert!(kv.contains("gopalan=3\n"));
        assert!(kv.contains("ip=2\n"));
        assert!(kv.contains("improved=2\n"));
        assert_eq!(rep.to_csv_row(), "9,6,3,3,3,3,2,2,true");
        let na = BoundReport::compute(LrcParams::new(10, 5, 3).unwrap());
        assert!(na.to_kv().contains("improved=not-applicable\n"));
        assert_eq!(CSV_HEADER.split(',').count(), na.to_csv_row().split(',').count());
    }

    proptest! {
        #[test]
        fn improved_never_exceeds_gopalan(n in 3u32..80, k in 2u32..80, r in 2u32..20) {
            prop_assume!(r < k && k < n);
            let p = LrcParams::new(n, k, r).unwrap();
            if let Ok(b) = improved_bound(&p) {
                prop_assert!(b.value <= p.gopalan());
            }
        }

        #[test]
        fn inner_min_subset_walk_matches_sequences(
            parts in prop::collection::vec((1u32..4, 0u32..4), 1..6),
            r in 1u32..5,
        ) {
            let t: Vec<u32> = parts.iter().map(|p| p.0).collect();
            let a: Vec<u32> = parts.iter().map(|p| p.1).collect();
            let total: u32 = t.iter().sum();
            for x in 1..=total {
                prop_assert_eq!(inner_min(x, r, &t, &a), Some(inner_min_by_sequences(x, r, &t, &a)));
            }
        }
    }
}
