//! Rank and crank statistics, `ospt(n)`, and exact checks of the identities,
//! inequalities and conjectures relating them to `u(m, n)`.
//!
//! Counts come from several independent routes:
//!
//! - census: enumerate every partition (small `n` only);
//! - combinatorial recurrences built from the definitions of rank and crank;
//! - the classical generating functions for `N(m, n)`, `M(m, n)` and their
//!   positive moments.
//!
//! Every pass/fail decision uses exact integer arithmetic with denominators
//! cleared. Floating point appears only in [`asymptotic_diagnostics`].

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::partition::partitions_of;
use crate::qseries::{partition_count, u_table_from_bivariate, RankTable};
use crate::sets::{classify_blocks, SetSpec};

/// Counts indexed by a signed statistic `m ∈ [−m_max, m_max]` and `n ≤ n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedTable {
    n_max: usize,
    m_max: usize,
    rows: Vec<Vec<BigInt>>,
}

impl SignedTable {
    fn zeros(n_max: usize, m_max: usize) -> Self {
        SignedTable { n_max, m_max, rows: vec![vec![BigInt::zero(); n_max + 1]; 2 * m_max + 1] }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn m_max(&self) -> usize {
        self.m_max
    }

    /// `None` outside the stored window.
    pub fn get(&self, m: i64, n: usize) -> Option<&BigInt> {
        if m.unsigned_abs() as usize > self.m_max || n > self.n_max {
            return None;
        }
        Some(&self.rows[(m + self.m_max as i64) as usize][n])
    }

    /// Adds `c` at `(m, n)` if the cell is stored.
    fn add(&mut self, m: i64, n: usize, c: &BigInt) {
        if m.unsigned_abs() as usize <= self.m_max && n <= self.n_max {
            self.rows[(m + self.m_max as i64) as usize][n] += c;
        }
    }

    fn add_one(&mut self, m: i64, n: usize) {
        self.add(m, n, &BigInt::from(1));
    }

    /// `Σ_{lo ≤ m ≤ hi} table(m, n)` over the stored window.
    pub fn sum_range(&self, lo: i64, hi: i64, n: usize) -> BigInt {
        (lo..=hi).filter_map(|m| self.get(m, n)).sum()
    }

    /// `Σ_{m ≥ 1} m · table(m, n)`.
    pub fn positive_moment(&self, n: usize) -> BigInt {
        (1..=self.m_max as i64).map(|m| self.get(m, n).expect("in window") * m).sum()
    }
}

/// `N(m, n)` and `M(m, n)` by enumerating every partition of each `n ≤ n_max`.
/// The crank of the empty partition is undefined, so `n = 0` stays zero.
pub fn rank_crank_census(n_max: usize) -> (SignedTable, SignedTable) {
    let mut ranks = SignedTable::zeros(n_max, n_max);
    let mut cranks = SignedTable::zeros(n_max, n_max);
    for n in 1..=n_max {
        for lambda in partitions_of(n as u32) {
            ranks.add_one(lambda.rank(), n);
            cranks.add_one(lambda.crank().expect("nonempty"), n);
        }
    }
    (ranks, cranks)
}

/// `N(m, n)` by sweeping the largest part. After allowing parts up to `a`,
/// `t[l][w]` counts partitions of `w` into exactly `l` parts, all `≤ a`; a
/// partition with largest part `a` and `l + 1` parts is one of those of
/// `n − a` with a row of length `a` on top.
pub fn rank_counts(n_max: usize, m_max: usize) -> SignedTable {
    let mut table = SignedTable::zeros(n_max, m_max);
    let mut t = vec![vec![BigInt::zero(); n_max + 1]; n_max + 1];
    t[0][0] = BigInt::from(1);
    for a in 1..=n_max {
        for l in 1..=n_max {
            for w in a..=n_max {
                let (lo, hi) = t.split_at_mut(l);
                let add = lo[l - 1][w - a].clone();
                hi[0][w] += add;
            }
        }
        for l in 0..=n_max - a {
            for n in a..=n_max {
                let c = &t[l][n - a];
                if !c.is_zero() {
                    table.add(a as i64 - (l as i64 + 1), n, c);
                }
            }
        }
    }
    table
}

/// `at_most[k][x]`: partitions of `x` into at most `k` parts, `k, x ≤ n_max`.
fn at_most_parts(n_max: usize) -> Vec<Vec<BigInt>> {
    let mut rows = Vec::with_capacity(n_max + 1);
    let mut cur = vec![BigInt::zero(); n_max + 1];
    cur[0] = BigInt::from(1);
    rows.push(cur.clone());
    for k in 1..=n_max {
        for x in k..=n_max {
            let add = cur[x - k].clone();
            cur[x] += add;
        }
        rows.push(cur.clone());
    }
    rows
}

/// `M(m, n)` for `|m| ≤ m_max` straight from the definition of the crank.
///
/// With no ones the crank is the largest part `a`, and the rest is a
/// partition of `n − a` into parts in `[2, a]`. With `ω ≥ 1` ones the rest
/// splits into parts in `[2, ω]` and `k` parts above `ω`, and the crank is
/// `k − ω`.
pub fn crank_counts(n_max: usize, m_max: usize) -> SignedTable {
    let mut table = SignedTable::zeros(n_max, m_max);
    let at_most = at_most_parts(n_max);
    // small[x]: partitions of x into parts in [2, cap]
    let mut small = vec![BigInt::zero(); n_max + 1];
    small[0] = BigInt::from(1);
    for cap in 1..=n_max {
        if cap >= 2 {
            for x in cap..=n_max {
                let add = small[x - cap].clone();
                small[x] += add;
            }
            for n in cap..=n_max {
                table.add(cap as i64, n, &small[n - cap]);
            }
        }
        let omega = cap;
        let mut k = 0usize;
        while omega + k * (omega + 1) <= n_max {
            let crank = k as i64 - omega as i64;
            if crank.unsigned_abs() as usize <= m_max {
                let base = k * (omega + 1);
                for n in omega + base..=n_max {
                    let rest = n - omega;
                    let c: BigInt = (base..=rest).map(|w| &small[rest - w] * &at_most[k][w - base]).sum();
                    table.add(crank, n, &c);
                }
            }
            k += 1;
        }
    }
    table
}

/// Multiplies the sparse series `Σ c_e q^e` by `1/(q)_∞`, through `q^{n_max}`.
fn times_partition_series(terms: &[(usize, i64)], p: &[BigInt], n_max: usize) -> Vec<BigInt> {
    (0..=n_max)
        .into_par_iter()
        .map(|n| terms.iter().filter(|&&(e, _)| e <= n).map(|&(e, c)| &p[n - e] * c).sum())
        .collect()
}

/// `Σ_{k≥1} (−1)^{k−1} q^{a(k)} (1 − q^k)` as sparse terms through `n_max`.
fn alternating_terms(n_max: usize, a: impl Fn(usize) -> usize) -> Vec<(usize, i64)> {
    let mut terms = Vec::new();
    let mut k = 1;
    while a(k) <= n_max {
        let sign = if k % 2 == 1 { 1 } else { -1 };
        terms.push((a(k), sign));
        terms.push((a(k) + k, -sign));
        k += 1;
    }
    terms
}

/// `Σ_{k≥1} (−1)^{k−1} q^{a(k)} / (1 − q^k)` as dense terms through `n_max`.
fn alternating_geometric(n_max: usize, a: impl Fn(usize) -> usize) -> Vec<(usize, i64)> {
    let mut dense = vec![0i64; n_max + 1];
    let mut k = 1;
    while a(k) <= n_max {
        let sign = if k % 2 == 1 { 1 } else { -1 };
        for e in (a(k)..=n_max).step_by(k) {
            dense[e] += sign;
        }
        k += 1;
    }
    dense.into_iter().enumerate().filter(|&(_, c)| c != 0).collect()
}

/// `N(m, n)` for one `m` from
/// `Σ_n N(m,n) q^n = (1/(q)_∞) Σ_{k≥1} (−1)^{k−1} q^{k(3k−1)/2 + |m|k} (1 − q^k)`.
pub fn rank_row_gf(m: i64, n_max: usize) -> Vec<BigInt> {
    let p = partition_count(n_max);
    let am = m.unsigned_abs() as usize;
    let mut row =
        times_partition_series(&alternating_terms(n_max, |k| k * (3 * k - 1) / 2 + am * k), &p, n_max);
    row[0] = BigInt::from(u8::from(m == 0));
    row
}

/// `M(m, n)` for one `m` from
/// `Σ_n M(m,n) q^n = (1/(q)_∞) Σ_{k≥1} (−1)^{k−1} q^{k(k−1)/2 + |m|k} (1 − q^k)`.
/// The series gives `M(0,1) = −1`, `M(±1,1) = 1` at `n = 1`, unlike the
/// combinatorial crank; `n = 0` is set to zero.
pub fn crank_row_gf(m: i64, n_max: usize) -> Vec<BigInt> {
    let p = partition_count(n_max);
    let am = m.unsigned_abs() as usize;
    let mut row = times_partition_series(&alternating_terms(n_max, |k| k * (k - 1) / 2 + am * k), &p, n_max);
    row[0] = BigInt::zero();
    row
}

/// `ospt(n)` from the positive rank and crank moments
/// `Σ_{m≥1} m N(m,n) = [q^n] (1/(q)_∞) Σ_k (−1)^{k−1} q^{k(3k+1)/2}/(1 − q^k)` and
/// `Σ_{m≥1} m M(m,n) = [q^n] (1/(q)_∞) Σ_k (−1)^{k−1} q^{k(k+1)/2}/(1 − q^k)`.
/// At `n = 1` the crank series counts the partition `(1)` at crank 1 instead
/// of −1, which is corrected here.
pub fn ospt_series(n_max: usize) -> Vec<BigInt> {
    let p = partition_count(n_max);
    let rank = times_partition_series(&alternating_geometric(n_max, |k| k * (3 * k + 1) / 2), &p, n_max);
    let crank = times_partition_series(&alternating_geometric(n_max, |k| k * (k + 1) / 2), &p, n_max);
    let mut out: Vec<BigInt> = crank.iter().zip(&rank).map(|(c, r)| c - r).collect();
    if n_max >= 1 {
        out[1] -= 1;
    }
    out
}

/// `ospt(n)` straight from its definition over every partition of `n`.
pub fn ospt_direct(n: u32) -> BigInt {
    let mut total = 0i64;
    for lambda in partitions_of(n) {
        if let Ok(c) = lambda.crank() {
            total += c.max(0);
        }
        total -= lambda.rank().max(0);
    }
    BigInt::from(total)
}

/// `q(−1, n)`, the number of partitions with `−1` in the rank-set, that is
/// with some `λ_i = i`. Such a partition is an `i × i` square, at most `i − 1`
/// arm rows and parts `≤ i` below:
/// `Σ_{i≥1} q^{i²} / ((q)_{i−1} (q)_i)`.
pub fn q_minus1_series(n_max: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n_max + 1];
    // d holds 1/((q)_{i−1}(q)_i)
    let mut d = vec![BigInt::zero(); n_max + 1];
    d[0] = BigInt::from(1);
    let divide = |d: &mut Vec<BigInt>, j: usize| {
        for x in j..d.len() {
            let add = d[x - j].clone();
            d[x] += add;
        }
    };
    divide(&mut d, 1);
    let mut i = 1;
    while i * i <= n_max {
        for x in 0..=n_max - i * i {
            out[x + i * i] += &d[x];
        }
        divide(&mut d, i);
        divide(&mut d, i + 1);
        i += 1;
    }
    out
}

/// Counts of the rank-zero and nonpositive-rank partitions from the rank
/// generating function: `N(0, n)` and `Σ_{m≤0} N(m, n) = (p(n) + N(0, n))/2`.
pub fn rank_zero_series(n_max: usize) -> Vec<BigInt> {
    rank_row_gf(0, n_max)
}

/// `M(0, n)` from the crank definition; only partitions with crank 0 are built.
pub fn crank_zero_series(n_max: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n_max + 1];
    let mut small = vec![BigInt::zero(); n_max + 1];
    small[0] = BigInt::from(1);
    let at_most = at_most_parts_bounded(n_max);
    for omega in 1..=n_max {
        if omega >= 2 {
            for x in omega..=n_max {
                let add = small[x - omega].clone();
                small[x] += add;
            }
        }
        // crank 0 needs omega parts above omega: weight at least omega + omega(omega+1)
        let base = omega * (omega + 1);
        if omega + base > n_max {
            break;
        }
        for n in omega + base..=n_max {
            let rest = n - omega;
            let c: BigInt = (base..=rest).map(|w| &small[rest - w] * &at_most(omega, w - base)).sum();
            out[n] += c;
        }
    }
    out
}

/// Lazily usable table of partitions into at most `k` parts, for the small
/// `k` needed by [`crank_zero_series`].
fn at_most_parts_bounded(n_max: usize) -> impl Fn(usize, usize) -> BigInt {
    let mut k_max = 0;
    while k_max + 1 + (k_max + 1) * (k_max + 2) <= n_max {
        k_max += 1;
    }
    let mut rows = Vec::with_capacity(k_max + 1);
    let mut cur = vec![BigInt::zero(); n_max + 1];
    cur[0] = BigInt::from(1);
    rows.push(cur.clone());
    for k in 1..=k_max {
        for x in k..=n_max {
            let add = cur[x - k].clone();
            cur[x] += add;
        }
        rows.push(cur.clone());
    }
    move |k, x| rows[k][x].clone()
}

/// The per-`n` statistics the checks and exports work from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatTable {
    pub n_max: usize,
    pub p: Vec<BigInt>,
    pub n0: Vec<BigInt>,
    pub m0: Vec<BigInt>,
    pub ospt: Vec<BigInt>,
    pub q_minus1: Vec<BigInt>,
    /// `u(m, n)` for `0 ≤ m ≤ max(m_max, 1)`.
    pub u: RankTable,
}

impl StatTable {
    /// Builds every column through `n_max`, with `u(m, n)` for `m ≤ max(m_max, 1)`.
    pub fn compute(n_max: usize, m_max: usize) -> Self {
        let m_max = m_max.max(1);
        let ((p, n0), ((m0, ospt), (q_minus1, u))) = rayon::join(
            || (partition_count(n_max), rank_zero_series(n_max)),
            || {
                rayon::join(
                    || (crank_zero_series(n_max), ospt_series(n_max)),
                    || (q_minus1_series(n_max), u_table_from_bivariate(m_max, n_max)),
                )
            },
        );
        let mut p = p;
        let mut n0 = n0;
        // conventions at n = 0: only positive weights carry statistics
        p[0] = BigInt::from(1);
        n0[0] = BigInt::zero();
        StatTable { n_max, p, n0, m0, ospt, q_minus1, u }
    }

    /// Assembles a table from stored columns, checking their lengths.
    pub fn from_columns(
        p: Vec<BigInt>,
        n0: Vec<BigInt>,
        m0: Vec<BigInt>,
        ospt: Vec<BigInt>,
        q_minus1: Vec<BigInt>,
        u: RankTable,
    ) -> Option<Self> {
        let len = p.len();
        if len == 0
            || [n0.len(), m0.len(), ospt.len(), q_minus1.len()].iter().any(|&l| l != len)
            || u.n_max() + 1 != len
            || u.m_max() < 1
        {
            return None;
        }
        Some(StatTable { n_max: len - 1, p, n0, m0, ospt, q_minus1, u })
    }

    pub fn m_max(&self) -> usize {
        self.u.m_max()
    }

    pub fn u(&self, m: i64, n: usize) -> &BigInt {
        self.u.get(m, n).expect("u(m, n) inside the table")
    }

    /// The prefix `n ≤ n_max`, `m ≤ m_max` of this table.
    pub fn restrict(&self, n_max: usize, m_max: usize) -> Option<StatTable> {
        if n_max > self.n_max {
            return None;
        }
        let u = self.u.restrict(m_max.max(1), n_max)?;
        let cut = |v: &Vec<BigInt>| v[..=n_max].to_vec();
        Some(StatTable {
            n_max,
            p: cut(&self.p),
            n0: cut(&self.n0),
            m0: cut(&self.m0),
            ospt: cut(&self.ospt),
            q_minus1: cut(&self.q_minus1),
            u,
        })
    }
}

/// One failed or noted case of a check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckCase {
    pub n: usize,
    pub m: Option<i64>,
    pub detail: String,
}

/// Outcome of an exact check over a range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub n_lo: usize,
    pub n_hi: usize,
    pub checked: u64,
    pub failures: Vec<CheckCase>,
    /// Cases outside the claimed range that are reported but allowed.
    pub notes: Vec<CheckCase>,
}

impl CheckReport {
    fn new(name: &str, n_lo: usize, n_hi: usize) -> Self {
        CheckReport { name: name.into(), n_lo, n_hi, checked: 0, failures: Vec::new(), notes: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn expect(&mut self, ok: bool, n: usize, m: Option<i64>, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(CheckCase { n, m, detail: detail() });
        }
    }

    fn note(&mut self, n: usize, m: Option<i64>, detail: String) {
        self.notes.push(CheckCase { n, m, detail });
    }
}

fn binom2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

/// `4·ospt(n) = p(n) + N(0,n) + 2(u(0,n) − u(1,n))` and
/// `u(0,n) + u(1,n) = Σ_{m≤0} N(m,n)` for `n_lo ≤ n ≤ n_hi`. The rank sum is
/// taken from `ranks`, which must cover every rank of weight `n_hi`.
pub fn check_identity_cor52(table: &StatTable, ranks: &SignedTable, n_lo: usize, n_hi: usize) -> CheckReport {
    let mut r = CheckReport::new("cor52", n_lo, n_hi);
    for n in n_lo..=n_hi {
        let (u0, u1) = (table.u(0, n), table.u(1, n));
        let lhs = &table.ospt[n] * 4;
        let rhs = &table.p[n] + &table.n0[n] + (u0 - u1) * 2;
        r.expect(lhs == rhs, n, None, || format!("4 ospt = {lhs}, p + N0 + 2(u0 - u1) = {rhs}"));
        let nonpos = ranks.sum_range(-(n as i64), 0, n);
        let sum = u0 + u1;
        r.expect(sum == nonpos, n, None, || format!("u0 + u1 = {sum}, sum of N(m<=0) = {nonpos}"));
    }
    r
}

/// The exact identities relating `u`, `ospt`, `p`, `N`, `M` and `q(−1, ·)`:
/// `u(0,n) = ospt(n)`, `q(−1,n) = Σ_{m≤−1} M(m,n)`, `2q(−1,n) = p(n) − M(0,n)`,
/// and `N(m,n) = N(−m,n)`, `M(m,n) = M(−m,n)` for every `m`. `ranks` and
/// `cranks` must cover every statistic of weight `n_hi`.
pub fn check_identities(
    table: &StatTable,
    ranks: &SignedTable,
    cranks: &SignedTable,
    n_lo: usize,
    n_hi: usize,
) -> CheckReport {
    let mut r = CheckReport::new("identities", n_lo, n_hi);
    for n in n_lo..=n_hi {
        let (u0, ospt) = (table.u(0, n), &table.ospt[n]);
        r.expect(u0 == ospt, n, None, || format!("u(0,n) = {u0}, ospt = {ospt}"));
        let q = &table.q_minus1[n];
        let neg = cranks.sum_range(-(n as i64), -1, n);
        r.expect(*q == neg, n, None, || format!("q(-1,n) = {q}, sum of M(m<=-1) = {neg}"));
        let diff = &table.p[n] - &table.m0[n];
        r.expect(q * 2 == diff, n, None, || format!("2 q(-1,n) = {}, p - M0 = {diff}", q * 2));
        let m0 = cranks.get(0, n).expect("in window");
        r.expect(m0 == &table.m0[n], n, Some(0), || format!("M(0,n) = {m0} in the table vs {}", table.m0[n]));
        let n0 = ranks.get(0, n).expect("in window");
        r.expect(n0 == &table.n0[n], n, Some(0), || format!("N(0,n) = {n0} in the table vs {}", table.n0[n]));
        for m in 1..=n as i64 {
            let (a, b) = (ranks.get(m, n).expect("in window"), ranks.get(-m, n).expect("in window"));
            r.expect(a == b, n, Some(m), || format!("N(m,n) = {a}, N(-m,n) = {b}"));
            let (a, b) = (cranks.get(m, n).expect("in window"), cranks.get(-m, n).expect("in window"));
            r.expect(a == b, n, Some(m), || format!("M(m,n) = {a}, M(-m,n) = {b}"));
        }
    }
    r
}

/// `u(m,n) ≥ u(m+1,n)` for `0 ≤ m ≤ m_max`, `1 ≤ n ≤ n_max`, strict once
/// `n ≥ max{6, C(m+2, 2)}`. Equalities below that threshold are noted.
/// The table must hold `u(m_max + 1, ·)`.
pub fn check_unimodality(table: &StatTable, n_max: usize, m_max: usize) -> CheckReport {
    let mut r = CheckReport::new("unimodality", 1, n_max);
    for m in 0..=m_max as i64 {
        let threshold = 6.max(binom2(m as usize + 2));
        for n in 1..=n_max {
            let (a, b) = (table.u(m, n), table.u(m + 1, n));
            r.expect(a >= b, n, Some(m), || format!("u(m,n) = {a} < u(m+1,n) = {b}"));
            if a == b {
                if n >= threshold {
                    r.expect(false, n, Some(m), || {
                        format!("u(m,n) = u(m+1,n) = {a} at or above n = {threshold}")
                    });
                } else {
                    r.note(n, Some(m), format!("u(m,n) = u(m+1,n) = {a} below n = {threshold}"));
                }
            }
        }
    }
    r
}

fn log_concavity(
    name: &str,
    table: &StatTable,
    n_max: usize,
    m_max: usize,
    threshold: impl Fn(usize) -> usize,
) -> CheckReport {
    let mut r = CheckReport::new(name, 1, n_max);
    for m in -(m_max as i64)..=m_max as i64 {
        let t = threshold(m.unsigned_abs() as usize);
        for n in 1..=n_max {
            let (a, b, c) = (table.u(m, n), table.u(m + 1, n), table.u(m - 1, n));
            let ok = a * a > b * c;
            if n >= t {
                r.expect(ok, n, Some(m), || format!("u(m,n)^2 = {} <= u(m+1,n) u(m-1,n) = {}", a * a, b * c));
            } else if !ok {
                r.note(n, Some(m), format!("u(m,n)^2 = {} <= {} below n = {t}", a * a, b * c));
            }
        }
    }
    r
}

/// `u(m,n)² > u(m+1,n) u(m−1,n)` for `|m| ≤ m_max` and
/// `max{7, |m|(|m|+1)/2 + 1} ≤ n ≤ n_max`. The table must hold `u(m_max + 1, ·)`.
///
/// For `|m| ≥ 3` this range starts below `C(|m|+2, 2)`, the least weight of a
/// sequence of rank `m`, where all three values are zero and the strict
/// inequality fails.
pub fn check_log_concavity(table: &StatTable, n_max: usize, m_max: usize) -> CheckReport {
    log_concavity("log-concavity", table, n_max, m_max, |am| 7.max(am * (am + 1) / 2 + 1))
}

/// The same inequality restricted to `n ≥ max{7, C(|m|+2, 2)}`, where
/// `u(m, n) > 0`.
pub fn check_log_concavity_on_support(table: &StatTable, n_max: usize, m_max: usize) -> CheckReport {
    log_concavity("log-concavity-support", table, n_max, m_max, |am| 7.max(binom2(am + 2)))
}

/// `8·ospt > 2p + 3N(0,n)` for `n ≥ 6`, `2·ospt ≤ p − M(0,n)` for `n ≥ 2`, and
/// `4(u(0,n) − u(1,n)) > N(0,n)` for `n ≥ 6`, all up to `n_max`.
pub fn check_ospt_bounds(table: &StatTable, n_max: usize) -> CheckReport {
    let mut r = CheckReport::new("ospt-bounds", 2, n_max);
    for n in 2..=n_max {
        let (ospt, p, n0, m0) = (&table.ospt[n], &table.p[n], &table.n0[n], &table.m0[n]);
        if n >= 6 {
            let (l, rt) = (ospt * 8, p * 2 + n0 * 3);
            r.expect(l > rt, n, None, || format!("8 ospt = {l} <= 2p + 3N0 = {rt}"));
            let l = (table.u(0, n) - table.u(1, n)) * 4;
            r.expect(&l > n0, n, None, || format!("4(u0 - u1) = {l} <= N0 = {n0}"));
        }
        let (l, rt) = (ospt * 2, p - m0);
        r.expect(l <= rt, n, None, || format!("2 ospt = {l} > p - M0 = {rt}"));
    }
    r
}

/// `2(u(0,n) − u(1,n)) ≥ N(0,n)` for `n_lo ≤ n ≤ n_hi`.
pub fn check_conjecture(table: &StatTable, n_lo: usize, n_hi: usize) -> CheckReport {
    let mut r = CheckReport::new("conjecture", n_lo, n_hi);
    for n in n_lo..=n_hi {
        let l = (table.u(0, n) - table.u(1, n)) * 2;
        let n0 = &table.n0[n];
        r.expect(&l >= n0, n, None, || format!("2(u0 - u1) = {l} < N0 = {n0}"));
    }
    r
}

/// `#U_4(0,n) + #U_5(0,n) ≤ u(0,n) − u(1,n)` and `4(#U_4(0,n) + #U_5(0,n)) > N(0,n)`
/// (the latter for `n ≥ 6`), counting the blocks by enumeration.
pub fn check_u45_bounds(table: &StatTable, n_lo: usize, n_hi: usize) -> CheckReport {
    let mut r = CheckReport::new("u45-bounds", n_lo, n_hi);
    let spec = SetSpec::u(0);
    let counts: Vec<u64> = (n_lo..=n_hi)
        .into_par_iter()
        .map(|n| {
            partitions_of(n as u32).filter(|l| matches!(classify_blocks(l, &spec), Some(4) | Some(5))).count()
                as u64
        })
        .collect();
    for (n, c) in (n_lo..=n_hi).zip(counts) {
        let c = BigInt::from(c);
        let diff = table.u(0, n) - table.u(1, n);
        r.expect(c <= diff, n, None, || format!("#U4 + #U5 = {c} > u0 - u1 = {diff}"));
        if n >= 6 {
            let n0 = &table.n0[n];
            r.expect(&c * 4 > *n0, n, None, || format!("4(#U4 + #U5) = {} <= N0 = {n0}", &c * 4));
        }
    }
    r
}

/// Ratios of exact values to the main terms of their asymptotic formulas.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiagnosticRow {
    pub n: usize,
    /// `u(0,n) · 16√3 n / e^{π√(2n/3)}`.
    pub u0_ratio: f64,
    /// `(u(m,n) − u(m+1,n))` over `π(2m+1)/(96√2 n^{3/2}) e^{π√(2n/3)}`, for `m = 0, 1`.
    pub diff_ratio: [f64; 2],
    /// `(u(0,n)² − u(1,n)u(−1,n))` over `π/(c√6 n^{5/2}) e^{2π√(2n/3)}` with `c = 768`.
    pub logc_ratio_768: f64,
    /// The same with `c = 786`.
    pub logc_ratio_786: f64,
    /// `(ospt(n) − p(n)/4) / (N(0,n)/2)`.
    pub ospt_ratio: f64,
}

fn to_f64(x: &BigInt) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// One [`DiagnosticRow`] per `n` in `ns` with `1 ≤ n ≤ table.n_max`; the table
/// must hold `u(2, ·)`. No value
/// is asserted.
pub fn asymptotic_diagnostics(table: &StatTable, ns: &[usize]) -> Vec<DiagnosticRow> {
    use std::f64::consts::PI;
    ns.iter()
        .copied()
        .filter(|&n| n >= 1 && n <= table.n_max)
        .map(|n| {
            let nf = n as f64;
            let e = (PI * (2.0 * nf / 3.0).sqrt()).exp();
            let u = |m: i64| to_f64(table.u(m, n));
            let diff = |m: i64| {
                let main = PI * (2 * m + 1) as f64 / (96.0 * 2f64.sqrt() * nf.powf(1.5)) * e;
                to_f64(&(table.u(m, n) - table.u(m + 1, n))) / main
            };
            let logc = to_f64(&(table.u(0, n) * table.u(0, n) - table.u(1, n) * table.u(-1, n)));
            let logc_main = |c: f64| PI / (c * 6f64.sqrt() * nf.powf(2.5)) * e * e;
            let ospt4 = to_f64(&(&table.ospt[n] * 4 - &table.p[n]));
            DiagnosticRow {
                n,
                u0_ratio: u(0) * 16.0 * 3f64.sqrt() * nf / e,
                diff_ratio: [diff(0), diff(1)],
                logc_ratio_768: logc / logc_main(768.0),
                logc_ratio_786: logc / logc_main(786.0),
                ospt_ratio: (ospt4 / 4.0) / (to_f64(&table.n0[n]) / 2.0),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn census_small_values() {
        let (ranks, cranks) = rank_crank_census(6);
        assert_eq!(ranks.get(0, 4), Some(&BigInt::from(1)));
        // crank of (1) is -1
        assert_eq!(cranks.get(-1, 1), Some(&BigInt::from(1)));
        assert_eq!(cranks.get(0, 2), Some(&BigInt::zero()));
    }

    #[test]
    fn recurrences_match_census() {
        let n = 30;
        let (ranks, cranks) = rank_crank_census(n);
        assert_eq!(rank_counts(n, n), ranks);
        assert_eq!(crank_counts(n, n), cranks);
    }

    #[test]
    fn generating_functions_match_recurrences() {
        let n = 60;
        let ranks = rank_counts(n, n);
        let cranks = crank_counts(n, n);
        for m in -(n as i64)..=n as i64 {
            let rg = rank_row_gf(m, n);
            let cg = crank_row_gf(m, n);
            for k in 2..=n {
                assert_eq!(ranks.get(m, k), Some(&rg[k]), "N({m},{k})");
                assert_eq!(cranks.get(m, k), Some(&cg[k]), "M({m},{k})");
            }
        }
        assert_eq!(crank_zero_series(n), cranks.rows[n].clone());
    }

    #[test]
    fn ospt_three_routes() {
        let n = 40;
        let series = ospt_series(n);
        let ranks = rank_counts(n, n);
        let cranks = crank_counts(n, n);
        for k in 1..=n {
            let direct = ospt_direct(k as u32);
            let dp = cranks.positive_moment(k) - ranks.positive_moment(k);
            assert_eq!(series[k], direct, "n = {k}");
            assert_eq!(dp, direct, "n = {k}");
        }
        assert_eq!(&series[..8], &ints(&[0, 0, 1, 1, 2, 2, 4, 5])[..]);
    }

    #[test]
    fn q_minus1_matches_census() {
        let n = 30;
        let q = q_minus1_series(n);
        for k in 1..=n {
            let c = partitions_of(k as u32).filter(|l| l.rank_set_contains(-1)).count();
            assert_eq!(q[k], BigInt::from(c), "n = {k}");
        }
    }

    #[test]
    fn checks_pass_on_small_table() {
        let n = 80;
        let t = StatTable::compute(n, 4);
        let ranks = rank_counts(n, n);
        let cranks = crank_counts(n, n);
        assert!(check_identity_cor52(&t, &ranks, 2, n).passed());
        assert_eq!(check_identity_cor52(&t, &ranks, 1, 1).failures.len(), 1);
        assert!(check_identities(&t, &ranks, &cranks, 2, n).passed());
        assert!(check_unimodality(&t, n, 3).passed());
        assert!(check_ospt_bounds(&t, n).passed());
        assert!(check_conjecture(&t, 8, n).passed());
        assert!(check_log_concavity_on_support(&t, n, 3).passed());
        let lc = check_log_concavity(&t, n, 3);
        assert!(lc.failures.iter().all(|c| c.m.unwrap().abs() == 3 && (7..=9).contains(&c.n)));
    }

    #[test]
    fn restrict_is_a_prefix() {
        let big = StatTable::compute(40, 3);
        let small = StatTable::compute(25, 2);
        assert_eq!(big.restrict(25, 2), Some(small));
    }
}
