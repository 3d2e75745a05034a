//! Truncated power series in `q` with big-integer coefficients, and the two
//! generating-function routes to the rank counts `u(m,n)` of strongly unimodal
//! sequences.
//!
//! - [`u_table_from_gf`] sums products of Gaussian binomials, one rank at a time.
//! - [`u_table_from_bivariate`] expands `Σ_r (−zq;q)_r (−q/z;q)_r q^{r+1}` as a
//!   polynomial in `z^{±1}` and reads off every rank at once.
//!
//! Both truncate at a single order `N` and stop summing once the smallest
//! exponent a summand can contribute exceeds `N`, so every coefficient up to
//! `q^N` is exact.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Power series `Σ_{i=0}^{N} c_i q^i`, exact modulo `q^{N+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSeries {
    coeffs: Vec<BigInt>,
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        QSeries { coeffs: vec![BigInt::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(BigInt::one(), 0, order)
    }

    /// `c·q^e`; vanishes if `e > order`.
    pub fn monomial(c: BigInt, e: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if e <= order {
            s.coeffs[e] = c;
        }
        s
    }

    /// Takes `coeffs` as `c_0, c_1, …`, padding with zeros or cutting to
    /// `order + 1` entries.
    pub fn from_coeffs<I, T>(coeffs: I, order: usize) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut c: Vec<BigInt> = coeffs.into_iter().take(order + 1).map(Into::into).collect();
        c.resize(order + 1, BigInt::zero());
        QSeries { coeffs: c }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^n`; zero past the truncation order.
    pub fn coeff(&self, n: usize) -> BigInt {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_order(&self, other: &QSeries) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &QSeries) -> Result<QSeries> {
        self.check_order(other)?;
        Ok(QSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() })
    }

    pub fn checked_sub(&self, other: &QSeries) -> Result<QSeries> {
        self.check_order(other)?;
        Ok(QSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() })
    }

    /// Truncated product; see [`series_mul`].
    pub fn checked_mul(&self, other: &QSeries) -> Result<QSeries> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = vec![BigInt::zero(); n + 1];
        mul_into(&mut out, &self.coeffs, &other.coeffs, n);
        Ok(QSeries { coeffs: out })
    }

    /// Multiplies by `q^e`, dropping what falls past the order.
    pub fn shift(&self, e: usize) -> QSeries {
        let n = self.order();
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate().take((n + 1).saturating_sub(e)) {
            out[i + e] = c.clone();
        }
        QSeries { coeffs: out }
    }

    pub fn scale(&self, c: &BigInt) -> QSeries {
        QSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplies in place by `1 + c·q^e`.
    pub fn mul_binomial(&mut self, c: i64, e: usize) {
        if e == 0 {
            let f = BigInt::from(1 + c);
            for a in &mut self.coeffs {
                *a *= &f;
            }
            return;
        }
        let n = self.order();
        for i in (e..=n).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            if !lo[i - e].is_zero() {
                hi[0] += &lo[i - e] * c;
            }
        }
    }

    /// Multiplicative inverse; the constant term must be `±1`.
    pub fn inverse(&self) -> Option<QSeries> {
        let c0 = &self.coeffs[0];
        if c0.abs() != BigInt::one() {
            return None;
        }
        let n = self.order();
        let mut out = vec![BigInt::zero(); n + 1];
        out[0] = c0.clone();
        for k in 1..=n {
            let mut acc = BigInt::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &out[k - i];
                }
            }
            out[k] = -acc * c0;
        }
        Some(QSeries { coeffs: out })
    }

    /// Value at `q = 1` of the truncated polynomial.
    pub fn sum_coeffs(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

impl Add for &QSeries {
    type Output = QSeries;

    fn add(self, rhs: &QSeries) -> QSeries {
        self.checked_add(rhs).expect("series orders differ")
    }
}

impl Sub for &QSeries {
    type Output = QSeries;

    fn sub(self, rhs: &QSeries) -> QSeries {
        self.checked_sub(rhs).expect("series orders differ")
    }
}

impl Neg for &QSeries {
    type Output = QSeries;

    fn neg(self) -> QSeries {
        QSeries { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{a}q^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

/// Adds `a·b` into `out`, keeping degrees `≤ limit`.
fn mul_into(out: &mut [BigInt], a: &[BigInt], b: &[BigInt], limit: usize) {
    for (i, x) in a.iter().enumerate().take(limit + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(limit - i + 1) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
}

/// Truncated product of two series of equal order.
pub fn series_mul(a: &QSeries, b: &QSeries) -> Result<QSeries> {
    a.checked_mul(b)
}

/// Number of factors in a q-Pochhammer symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Terms {
    Finite(usize),
    Infinite,
}

/// `(q^a; q)_n = Π_{i=1}^{n} (1 − q^{a+i−1})` truncated at `order`.
///
/// The infinite product needs `a ≥ 1`; factors with exponent above `order`
/// are omitted since they do not change the truncation.
pub fn pochhammer(a_power: i64, n_terms: Terms, order: usize) -> Result<QSeries> {
    let count = match n_terms {
        Terms::Infinite => {
            if a_power < 1 {
                return Err(Error::InvalidPochhammer(a_power));
            }
            (order + 1).saturating_sub(a_power as usize)
        }
        Terms::Finite(n) => {
            if a_power < 0 && n > 0 {
                return Err(Error::InvalidPochhammer(a_power));
            }
            n
        }
    };
    let mut s = QSeries::one(order);
    for i in 0..count {
        let e = a_power as usize + i;
        if e > order {
            break;
        }
        s.mul_binomial(-1, e);
    }
    Ok(s)
}

/// Gaussian binomial `[r; j]_q`, truncated at `order`; zero unless `0 ≤ j ≤ r`.
pub fn gauss_binomial(r: usize, j: i64, order: usize) -> QSeries {
    if j < 0 || j as usize > r {
        return QSeries::zero(order);
    }
    let j = j as usize;
    let mut rows = GaussRows::new(j, order);
    for _ in 0..r {
        rows.advance();
    }
    QSeries { coeffs: rows.rows.swap_remove(j) }
}

/// Rows `[r; 0], …, [r; k_max]` advanced one `r` at a time by
/// `[r+1; k] = [r; k−1] + q^k [r; k]`.
#[derive(Clone, Debug)]
struct GaussRows {
    r: usize,
    order: usize,
    rows: Vec<Vec<BigInt>>,
}

impl GaussRows {
    fn new(k_max: usize, order: usize) -> Self {
        let mut rows = vec![vec![BigInt::zero(); order + 1]; k_max + 1];
        rows[0][0] = BigInt::one();
        GaussRows { r: 0, order, rows }
    }

    fn advance(&mut self) {
        let top = self.rows.len().min(self.r + 2);
        for k in (1..top).rev() {
            let (lower, upper) = self.rows.split_at_mut(k);
            let row = &mut upper[0];
            let prev = &lower[k - 1];
            // q^k shift, then add the row below
            let deg = (k * (self.r + 1 - k)).min(self.order);
            for d in (k..=deg).rev() {
                row[d] = std::mem::take(&mut row[d - k]);
            }
            for c in row.iter_mut().take(k.min(self.order + 1)) {
                c.set_zero();
            }
            let pdeg = ((k - 1) * (self.r + 1 - k)).min(self.order);
            for d in 0..=pdeg {
                if !prev[d].is_zero() {
                    row[d] += &prev[d];
                }
            }
        }
        self.r += 1;
    }
}

/// `u(m,n)` for `|m| ≤ m_max`, `0 ≤ n ≤ n_max`; rows for negative `m` come from
/// `u(m,n) = u(−m,n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankTable {
    n_max: usize,
    m_max: usize,
    rows: Vec<Vec<BigInt>>,
}

impl RankTable {
    /// Builds a table from rows `m = 0..=m_max`, each of length `n_max + 1`.
    pub fn from_rows(n_max: usize, rows: Vec<Vec<BigInt>>) -> Self {
        assert!(!rows.is_empty(), "a rank table has at least the m = 0 row");
        assert!(rows.iter().all(|r| r.len() == n_max + 1), "row length must be n_max + 1");
        RankTable { n_max, m_max: rows.len() - 1, rows }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn m_max(&self) -> usize {
        self.m_max
    }

    pub fn get(&self, m: i64, n: usize) -> Option<&BigInt> {
        self.rows.get(m.unsigned_abs() as usize)?.get(n)
    }

    /// Row `|m|` as a slice indexed by `n`.
    pub fn row(&self, m: i64) -> Option<&[BigInt]> {
        self.rows.get(m.unsigned_abs() as usize).map(Vec::as_slice)
    }

    /// The sub-table with smaller bounds.
    pub fn restrict(&self, m_max: usize, n_max: usize) -> Option<RankTable> {
        if m_max > self.m_max || n_max > self.n_max {
            return None;
        }
        let rows = self.rows[..=m_max].iter().map(|r| r[..=n_max].to_vec()).collect();
        Some(RankTable { n_max, m_max, rows })
    }
}

fn binom2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

/// `u(m,n)` from the single-variable sum
/// `Σ_{r≥m} Σ_{k=0}^{r−m} [r; k+m][r; k] q^{r+1+C(k+m+1,2)+C(k+1,2)}`.
pub fn u_table_from_gf(m_max: usize, n_max: usize) -> RankTable {
    let rows = (0..=m_max).into_par_iter().map(|m| u_row_from_gf(m, n_max)).collect();
    RankTable::from_rows(n_max, rows)
}

fn u_row_from_gf(m: usize, n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n + 1];
    let exponent = |r: usize, k: usize| r + 1 + binom2(k + m + 1) + binom2(k + 1);
    // largest k whose smallest exponent (at r = k + m) is still in range
    let mut k_cap = 0usize;
    while exponent(k_cap + 1 + m, k_cap + 1) <= n {
        k_cap += 1;
    }
    let mut rows = GaussRows::new(k_cap + m, n);
    let mut r = 0usize;
    while r < m {
        rows.advance();
        r += 1;
    }
    let mut prod = vec![BigInt::zero(); n + 1];
    while exponent(r, 0) <= n {
        for k in 0..=(r - m).min(k_cap) {
            let e = exponent(r, k);
            if e > n {
                break;
            }
            let limit = n - e;
            for c in prod.iter_mut().take(limit + 1) {
                c.set_zero();
            }
            mul_into(&mut prod, &rows.rows[k + m], &rows.rows[k], limit);
            for (d, c) in prod.iter().enumerate().take(limit + 1) {
                if !c.is_zero() {
                    out[d + e] += c;
                }
            }
        }
        rows.advance();
        r += 1;
    }
    out
}

/// Largest `A` with `C(A+2, 2) ≤ n`: a sequence of weight `n` has `|rank| ≤ A`.
pub fn max_rank_for_weight(n: usize) -> usize {
    let mut a = 0;
    while binom2(a + 3) <= n {
        a += 1;
    }
    a
}

/// `u(m,n)` from `Σ_{r≥0} (−zq;q)_r (−q/z;q)_r q^{r+1}`, expanded in `z`.
///
/// The full band `|a| ≤ max_rank_for_weight(n_max)` is kept while building
/// the products: each step couples neighbouring powers of `z`, so a narrower
/// band would lose terms.
pub fn u_table_from_bivariate(m_max: usize, n_max: usize) -> RankTable {
    let band = max_rank_for_weight(n_max);
    let width = 2 * band + 1;
    // p[d][a + band] holds [z^a q^d] of the current product
    let mut p: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); width]; n_max + 1];
    p[0][band] = BigInt::one();
    let mut acc: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n_max + 1]; band + 1];

    let mut r = 0usize;
    while r < n_max {
        let limit = n_max - r - 1;
        for (d, row) in p.iter().enumerate().take(limit + 1) {
            for a in 0..=band {
                let c = &row[a + band];
                if !c.is_zero() {
                    acc[a][d + r + 1] += c;
                }
            }
        }
        // multiply by (1 + z q^s)(1 + q^s / z) = 1 + (z + 1/z) q^s + q^{2s}
        let s = r + 1;
        let new_limit = limit.saturating_sub(1);
        for d in (s..=new_limit).rev() {
            let (lo, hi) = p.split_at_mut(d);
            let row = &mut hi[0];
            let src = &lo[d - s];
            for a in 0..width {
                if a > 0 && !src[a - 1].is_zero() {
                    row[a] += &src[a - 1];
                }
                if a + 1 < width && !src[a + 1].is_zero() {
                    row[a] += &src[a + 1];
                }
            }
            if d >= 2 * s {
                let src2 = &lo[d - 2 * s];
                for a in 0..width {
                    if !src2[a].is_zero() {
                        row[a] += &src2[a];
                    }
                }
            }
        }
        r += 1;
    }

    let rows = (0..=m_max)
        .map(|m| if m <= band { acc[m].clone() } else { vec![BigInt::zero(); n_max + 1] })
        .collect();
    RankTable::from_rows(n_max, rows)
}

/// `p(0), …, p(n_max)` by Euler's pentagonal recurrence.
pub fn partition_count(n_max: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); n_max + 1];
    p[0] = BigInt::one();
    for n in 1..=n_max {
        let mut acc = BigInt::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let plus = k % 2 == 1;
            let mut term = p[n - g1].clone();
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= n {
                term += &p[n - g2];
            }
            if plus {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p[n] = acc;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64], n: usize) -> QSeries {
        QSeries::from_coeffs(c.iter().copied(), n)
    }

    #[test]
    fn series_mul_examples() {
        let a = s(&[1, 1], 5);
        let b = s(&[1, -1], 5);
        assert_eq!(series_mul(&a, &b).unwrap(), s(&[1, 0, -1], 5));
        assert_eq!(series_mul(&a, &QSeries::one(5)).unwrap(), a);
        let geo = s(&[1; 11], 10);
        assert_eq!(series_mul(&geo, &s(&[1, -1], 10)).unwrap(), QSeries::one(10));
        assert!(matches!(series_mul(&a, &QSeries::one(4)), Err(Error::OrderMismatch { left: 5, right: 4 })));
    }

    #[test]
    fn pochhammer_examples() {
        let euler = pochhammer(1, Terms::Infinite, 12).unwrap();
        assert_eq!(euler, s(&[1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1], 12));
        assert_eq!(pochhammer(1, Terms::Finite(0), 5).unwrap(), QSeries::one(5));
        assert_eq!(pochhammer(1, Terms::Finite(2), 5).unwrap(), s(&[1, -1, -1, 1], 5));
        assert_eq!(pochhammer(0, Terms::Finite(3), 5).unwrap(), QSeries::zero(5));
        assert_eq!(pochhammer(0, Terms::Infinite, 5), Err(Error::InvalidPochhammer(0)));
        assert_eq!(pochhammer(-1, Terms::Finite(2), 5), Err(Error::InvalidPochhammer(-1)));
    }

    #[test]
    fn gauss_binomial_examples() {
        assert_eq!(gauss_binomial(2, 1, 10), s(&[1, 1], 10));
        assert_eq!(gauss_binomial(7, 7, 10), QSeries::one(10));
        assert_eq!(gauss_binomial(4, 2, 10), s(&[1, 1, 2, 1, 1], 10));
        assert_eq!(gauss_binomial(4, -1, 10), QSeries::zero(10));
        assert_eq!(gauss_binomial(4, 5, 10), QSeries::zero(10));
        assert_eq!(gauss_binomial(0, 0, 3), QSeries::one(3));
        // truncation
        assert_eq!(gauss_binomial(4, 2, 2), s(&[1, 1, 2], 2));
    }

    #[test]
    fn inverse_of_euler_product_gives_partition_numbers() {
        let n = 40;
        let inv = pochhammer(1, Terms::Infinite, n).unwrap().inverse().unwrap();
        let p = partition_count(n);
        assert_eq!(inv.coeffs(), p.as_slice());
        assert!(s(&[2, 1], 3).inverse().is_none());
    }

    #[test]
    fn partition_count_small() {
        let p = partition_count(10);
        let want = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        assert_eq!(p, want.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
        assert_eq!(partition_count(100)[100], "190569292".parse().unwrap());
    }

    #[test]
    fn u_small_values() {
        let t = u_table_from_gf(3, 6);
        assert_eq!(t.get(0, 1), Some(&BigInt::from(1)));
        for m in 1..=3 {
            assert_eq!(t.get(m, 1), Some(&BigInt::zero()));
        }
        assert_eq!(t.get(1, 3), Some(&BigInt::from(1)));
        assert_eq!(t.get(-1, 3), Some(&BigInt::from(1)));
        assert_eq!(t.get(0, 3), Some(&BigInt::from(1)));
        assert!(t.row(0).unwrap()[0].is_zero());
        assert_eq!(t.get(4, 3), None);
    }

    #[test]
    fn routes_agree_small() {
        let a = u_table_from_gf(6, 40);
        let b = u_table_from_bivariate(6, 40);
        assert_eq!(a, b);
    }

    #[test]
    fn bivariate_rows_beyond_band_are_zero() {
        let t = u_table_from_bivariate(5, 5);
        // rank 2 needs weight at least 1 + 2 + 3 = 6
        assert!(t.row(2).unwrap().iter().all(Zero::is_zero));
        assert_eq!(max_rank_for_weight(5), 1);
        assert_eq!(max_rank_for_weight(6), 2);
        assert_eq!(max_rank_for_weight(0), 0);
    }

    #[test]
    fn restrict_is_a_prefix() {
        let t = u_table_from_bivariate(4, 30);
        let small = t.restrict(2, 10).unwrap();
        assert_eq!(small, u_table_from_bivariate(2, 10));
        assert!(t.restrict(5, 10).is_none());
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(s(&[1, -1, 0, 2], 3).to_string(), "1 - q^1 + 2q^3 + O(q^4)");
        assert_eq!(QSeries::zero(2).to_string(), "0 + O(q^3)");
    }
}
