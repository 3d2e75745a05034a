//! Integer partitions, strongly unimodal sequences and m-Durfee rectangle
//! symbols, with their statistics and exhaustive enumerators.
//!
//! Parts are indexed from 1 in the accessors ([`Partition::part`]) so that the
//! combinatorial formulas read naturally; `part(k)` is 0 for `k > len()`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<u32>", try_from = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates `parts` and wraps them.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for (index, &p) in parts.iter().enumerate() {
            if p == 0 {
                return Err(Error::NonPositivePart { index });
            }
            if index > 0 && parts[index - 1] < p {
                return Err(Error::NotWeaklyDecreasing { index, prev: parts[index - 1], next: p });
            }
        }
        Ok(Partition { parts })
    }

    /// Like [`Partition::new`], but trailing zero parts are dropped first.
    pub fn from_trimmed(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(k^count)`, the rectangle with `count` rows of length `k`.
    pub fn repeated(k: u32, count: usize) -> Self {
        if k == 0 {
            return Self::empty();
        }
        Partition { parts: vec![k; count] }
    }

    pub(crate) fn from_vec_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(Partition::new(parts.clone()).is_ok(), "{parts:?}");
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// `λ_k` with 1-based `k`, and `λ_k = 0` beyond the last part.
    pub fn part(&self, k: usize) -> u32 {
        if k == 0 {
            panic!("parts are indexed from 1");
        }
        self.parts.get(k - 1).copied().unwrap_or(0)
    }

    /// Largest part, 0 for the empty partition.
    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Smallest part `s(λ)`, 0 for the empty partition.
    pub fn smallest(&self) -> u32 {
        self.parts.last().copied().unwrap_or(0)
    }

    pub fn contains_part(&self, k: u32) -> bool {
        // parts are sorted descending
        self.parts.binary_search_by(|p| k.cmp(p)).is_ok()
    }

    pub fn multiplicity(&self, k: u32) -> usize {
        self.parts.iter().filter(|&&p| p == k).count()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.largest() as usize;
        let mut conj = vec![0u32; width];
        for &p in &self.parts {
            for c in conj.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition { parts: conj }
    }

    /// Dyson's rank `λ_1 − ℓ(λ)`; the empty partition has rank 0.
    pub fn rank(&self) -> i64 {
        i64::from(self.largest()) - self.len() as i64
    }

    /// Andrews–Garvan crank.
    pub fn crank(&self) -> Result<i64> {
        if self.is_empty() {
            return Err(Error::EmptyCrank);
        }
        let ones = self.multiplicity(1) as u32;
        if ones == 0 {
            return Ok(i64::from(self.largest()));
        }
        let larger = self.parts.iter().filter(|&&p| p > ones).count() as i64;
        Ok(larger - i64::from(ones))
    }

    /// Whether `v` occurs in Dyson's rank-set `(j − λ_{j+1})_{j ≥ 0}`.
    pub fn rank_set_contains(&self, v: i64) -> bool {
        let len = self.len() as i64;
        if v >= len {
            return true;
        }
        // the sequence is strictly increasing, so stop once it passes v
        for (j, &p) in self.parts.iter().enumerate() {
            let value = j as i64 - i64::from(p);
            if value == v {
                return true;
            }
            if value > v {
                return false;
            }
        }
        false
    }

    /// The m-Durfee rectangle symbol of this partition.
    pub fn durfee_symbol(&self, m: u32) -> DurfeeSymbol {
        let len = self.len();
        let mu = m as usize;
        if len <= mu {
            return DurfeeSymbol { m, j: 0, alpha: self.conjugate(), beta: Partition::empty() };
        }
        // λ_{k+m} − k is strictly decreasing in k, so j is the last k that fits
        let mut j = 0usize;
        for k in 1..=len {
            if k + mu > len || (self.parts[k + mu - 1] as usize) < k {
                break;
            }
            j = k;
        }
        let rows = mu + j;
        let shifted: Vec<u32> =
            self.parts[..rows].iter().map(|&p| p - j as u32).take_while(|&p| p > 0).collect();
        let alpha = Partition { parts: shifted }.conjugate();
        let beta = Partition { parts: self.parts[rows..].to_vec() };
        DurfeeSymbol { m, j: j as u32, alpha, beta }
    }

    /// Durfee symbol with respect to the Durfee square (`m = 0`).
    pub fn durfee_square_symbol(&self) -> DurfeeSymbol {
        self.durfee_symbol(0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// Decomposition `(α, β)_{(m+j)×j}` of a partition around its m-Durfee
/// rectangle: `α` holds the columns to the right of the rectangle and `β` the
/// rows below it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DurfeeSymbol {
    m: u32,
    j: u32,
    alpha: Partition,
    beta: Partition,
}

impl DurfeeSymbol {
    /// Checks `α_1 ≤ m + j` and `β_1 ≤ j`; every such pair is the symbol of
    /// exactly one partition.
    pub fn new(m: u32, j: u32, alpha: Partition, beta: Partition) -> Result<Self> {
        if alpha.largest() > m + j {
            return Err(Error::InvalidSymbol(format!(
                "alpha_1 = {} exceeds m + j = {}",
                alpha.largest(),
                m + j
            )));
        }
        if beta.largest() > j {
            return Err(Error::InvalidSymbol(format!("beta_1 = {} exceeds j = {}", beta.largest(), j)));
        }
        Ok(DurfeeSymbol { m, j, alpha, beta })
    }

    /// Symbol from raw part lists; zeros at the tail are ignored.
    pub fn from_parts(m: u32, j: u32, alpha: Vec<u32>, beta: Vec<u32>) -> Result<Self> {
        Self::new(m, j, Partition::from_trimmed(alpha)?, Partition::from_trimmed(beta)?)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    /// Side `d` of the Durfee square when `m = 0`.
    pub fn d(&self) -> u32 {
        self.j
    }

    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    pub fn beta(&self) -> &Partition {
        &self.beta
    }

    pub fn into_parts(self) -> (Partition, Partition) {
        (self.alpha, self.beta)
    }

    pub fn weight(&self) -> u64 {
        self.alpha.weight() + self.beta.weight() + u64::from(self.m + self.j) * u64::from(self.j)
    }

    /// `ℓ(α) − ℓ(β)`.
    pub fn length_gap(&self) -> i64 {
        self.alpha.len() as i64 - self.beta.len() as i64
    }

    /// Rebuilds the partition: rows `1..=m+j` are `j + α'_i`, then `β`.
    pub fn assemble(&self) -> Partition {
        let rows = (self.m + self.j) as usize;
        let alpha_conj = self.alpha.conjugate();
        let mut parts = Vec::with_capacity(rows + self.beta.len());
        for i in 1..=rows {
            let p = self.j + if i <= alpha_conj.len() { alpha_conj.part(i) } else { 0 };
            if p == 0 {
                break;
            }
            parts.push(p);
        }
        parts.extend_from_slice(self.beta.parts());
        Partition::from_vec_unchecked(parts)
    }
}

impl fmt::Display for DurfeeSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 0 {
            write!(f, "({},{})_{}", self.alpha, self.beta, self.j)
        } else {
            write!(f, "({},{})_{}x{}", self.alpha, self.beta, self.m + self.j, self.j)
        }
    }
}

/// `1 ≤ a_1 < … < a_{k-1} < a_k > a_{k+1} > … > a_ℓ ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StronglyUnimodalSeq {
    left: Vec<u32>,
    peak: u32,
    right: Vec<u32>,
}

impl StronglyUnimodalSeq {
    pub fn new(left: Vec<u32>, peak: u32, right: Vec<u32>) -> Result<Self> {
        if peak == 0 {
            return Err(Error::InvalidSequence("peak must be positive".into()));
        }
        if left.first() == Some(&0) || right.last() == Some(&0) {
            return Err(Error::InvalidSequence("entries must be positive".into()));
        }
        if left.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSequence("left side is not strictly increasing".into()));
        }
        if right.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidSequence("right side is not strictly decreasing".into()));
        }
        if left.last().is_some_and(|&a| a >= peak) || right.first().is_some_and(|&a| a >= peak) {
            return Err(Error::InvalidSequence("peak is not the unique maximum".into()));
        }
        Ok(StronglyUnimodalSeq { left, peak, right })
    }

    /// Builds the sequence from its full list of entries.
    pub fn from_sequence(seq: &[u32]) -> Result<Self> {
        let (peak_at, &peak) = seq
            .iter()
            .enumerate()
            .max_by_key(|&(_, v)| *v)
            .ok_or_else(|| Error::InvalidSequence("empty sequence".into()))?;
        Self::new(seq[..peak_at].to_vec(), peak, seq[peak_at + 1..].to_vec())
    }

    pub fn left(&self) -> &[u32] {
        &self.left
    }

    pub fn peak(&self) -> u32 {
        self.peak
    }

    pub fn right(&self) -> &[u32] {
        &self.right
    }

    pub fn weight(&self) -> u64 {
        self.left.iter().chain(&self.right).map(|&a| u64::from(a)).sum::<u64>() + u64::from(self.peak)
    }

    /// Entries after the peak minus entries before it.
    pub fn rank(&self) -> i64 {
        self.right.len() as i64 - self.left.len() as i64
    }

    pub fn to_vec(&self) -> Vec<u32> {
        let mut v = self.left.clone();
        v.push(self.peak);
        v.extend_from_slice(&self.right);
        v
    }
}

/// Free-function form of [`StronglyUnimodalSeq::rank`].
pub fn seq_rank(s: &StronglyUnimodalSeq) -> i64 {
    s.rank()
}

/// All partitions of `n`, in lexicographically decreasing order.
pub fn partitions_of(n: u32) -> Partitions {
    Partitions { n, current: None, done: false }
}

/// Lazy stream returned by [`partitions_of`].
#[derive(Clone, Debug)]
pub struct Partitions {
    n: u32,
    current: Option<Vec<u32>>,
    done: bool,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let parts = match self.current.take() {
            None => {
                if self.n == 0 {
                    Vec::new()
                } else {
                    vec![self.n]
                }
            }
            Some(mut parts) => {
                let Some(i) = parts.iter().rposition(|&p| p > 1) else {
                    self.done = true;
                    return None;
                };
                let ones = (parts.len() - i - 1) as u32;
                let x = parts[i] - 1;
                let mut rem = ones + 1;
                parts.truncate(i);
                parts.push(x);
                while rem >= x {
                    parts.push(x);
                    rem -= x;
                }
                if rem > 0 {
                    parts.push(rem);
                }
                parts
            }
        };
        if self.n == 0 {
            self.done = true;
        }
        self.current = Some(parts.clone());
        Some(Partition::from_vec_unchecked(parts))
    }
}

fn triangular(c: u64) -> u64 {
    c * (c + 1) / 2
}

/// Partitions of `n` into distinct parts, each at most `max_part`, as
/// decreasing part lists in lexicographically decreasing order.
pub fn distinct_partitions(n: u32, max_part: u32) -> DistinctPartitions {
    DistinctPartitions { n, max_part, current: None, done: false }
}

/// Lazy stream returned by [`distinct_partitions`].
#[derive(Clone, Debug)]
pub struct DistinctPartitions {
    n: u32,
    max_part: u32,
    current: Option<Vec<u32>>,
    done: bool,
}

impl DistinctPartitions {
    // Greedy completion; succeeds iff 1 + … + cap ≥ rem.
    fn fill(parts: &mut Vec<u32>, mut rem: u64, mut cap: u32) -> bool {
        if triangular(u64::from(cap)) < rem {
            return false;
        }
        while rem > 0 {
            let c = (cap as u64).min(rem) as u32;
            parts.push(c);
            rem -= u64::from(c);
            cap = c - 1;
        }
        true
    }
}

impl Iterator for DistinctPartitions {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        match self.current.take() {
            None => {
                let mut parts = Vec::new();
                if !Self::fill(&mut parts, u64::from(self.n), self.max_part) {
                    self.done = true;
                    return None;
                }
                self.current = Some(parts.clone());
                Some(parts)
            }
            Some(mut parts) => {
                let mut rem = 0u64;
                while let Some(p) = parts.pop() {
                    rem += u64::from(p);
                    let c = p - 1;
                    if c >= 1 && triangular(u64::from(c)) >= rem {
                        parts.push(c);
                        let ok = Self::fill(&mut parts, rem - u64::from(c), c - 1);
                        debug_assert!(ok);
                        self.current = Some(parts.clone());
                        return Some(parts);
                    }
                }
                self.done = true;
                None
            }
        }
    }
}

/// Every strongly unimodal sequence of weight `n`, lazily: for each peak
/// value `p`, a distinct-part set below `p` on each side of the peak.
pub fn strongly_unimodal_of(n: u32) -> impl Iterator<Item = StronglyUnimodalSeq> {
    (1..=n).flat_map(move |peak| {
        let rest = n - peak;
        (0..=rest).flat_map(move |left_weight| {
            distinct_partitions(left_weight, peak - 1).flat_map(move |left_desc| {
                let mut left = left_desc;
                left.reverse();
                distinct_partitions(rest - left_weight, peak - 1).map(move |right| StronglyUnimodalSeq {
                    left: left.clone(),
                    peak,
                    right,
                })
            })
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn make_partition_examples() {
        let lam = p(&[5, 5, 3, 3, 2, 1]);
        assert_eq!((lam.weight(), lam.len(), lam.smallest()), (19, 6, 1));
        assert_eq!(p(&[]).weight(), 0);
        assert!(matches!(Partition::new(vec![3, 5]), Err(Error::NotWeaklyDecreasing { index: 1, .. })));
        assert!(matches!(Partition::new(vec![3, 0]), Err(Error::NonPositivePart { index: 1 })));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[5, 5, 3, 3, 2, 1]).conjugate(), p(&[6, 5, 4, 2, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[4]).conjugate(), p(&[1, 1, 1, 1]));
    }

    #[test]
    fn rank_and_crank_examples() {
        assert_eq!(p(&[5, 5, 3, 2, 2, 1]).rank(), -1);
        assert_eq!(p(&[7]).rank(), 6);
        assert_eq!(p(&[1, 1, 1]).rank(), -2);
        assert_eq!(Partition::empty().rank(), 0);

        assert_eq!(p(&[5, 4, 4]).crank(), Ok(5));
        assert_eq!(p(&[3, 3, 1]).crank(), Ok(1));
        assert_eq!(p(&[1, 1]).crank(), Ok(-2));
        assert_eq!(Partition::empty().crank(), Err(Error::EmptyCrank));
    }

    #[test]
    fn rank_set_examples() {
        let lam = p(&[5, 5, 3, 2, 2, 1]);
        // (−5,−4,−1,1,2,4,6,7,…)
        for v in [-5, -4, -1, 1, 2, 4, 6, 7, 8, 100] {
            assert!(lam.rank_set_contains(v), "{v}");
        }
        for v in [-6, -3, -2, 0, 3, 5] {
            assert!(!lam.rank_set_contains(v), "{v}");
        }
        assert!(Partition::empty().rank_set_contains(0));
        assert!(!Partition::empty().rank_set_contains(-1));
        assert!(p(&[2, 2]).rank_set_contains(-2));
    }

    #[test]
    fn durfee_symbol_examples() {
        let lam = p(&[11, 10, 10, 8, 6, 5, 4, 4, 3, 3, 1]);
        let s1 = lam.durfee_symbol(1);
        assert_eq!((s1.m() + s1.j(), s1.j()), (6, 5));
        assert_eq!(s1.alpha(), &p(&[5, 4, 4, 3, 3, 1]));
        assert_eq!(s1.beta(), &p(&[4, 4, 3, 3, 1]));

        let s0 = lam.durfee_symbol(0);
        assert_eq!(s0.d(), 5);
        assert_eq!(s0.alpha(), &p(&[5, 4, 4, 3, 3, 1]));
        assert_eq!(s0.beta(), &p(&[5, 4, 4, 3, 3, 1]));

        let s = p(&[2, 1]).durfee_symbol(3);
        assert_eq!(s.j(), 0);
        assert_eq!(s.alpha(), &p(&[2, 1]));
        assert!(s.beta().is_empty());
    }

    #[test]
    fn assemble_examples() {
        let s = DurfeeSymbol::from_parts(1, 5, vec![5, 4, 4, 3, 3, 1], vec![4, 4, 3, 3, 1]).unwrap();
        assert_eq!(s.assemble(), p(&[11, 10, 10, 8, 6, 5, 4, 4, 3, 3, 1]));

        let square = DurfeeSymbol::from_parts(0, 2, vec![], vec![]).unwrap();
        assert_eq!(square.assemble(), p(&[2, 2]));

        let s = DurfeeSymbol::from_parts(2, 1, vec![3], vec![1]).unwrap();
        let lam = s.assemble();
        assert_eq!(lam.weight(), 7);
        assert_eq!(lam.durfee_symbol(2), s);

        assert!(DurfeeSymbol::from_parts(2, 1, vec![4], vec![]).is_err());
        assert!(DurfeeSymbol::from_parts(2, 1, vec![], vec![2]).is_err());
        assert!(DurfeeSymbol::from_parts(0, 0, vec![], vec![1]).is_err());
    }

    #[test]
    fn partitions_of_small() {
        let all: Vec<_> = partitions_of(0).collect();
        assert_eq!(all, vec![Partition::empty()]);

        let four: Vec<Vec<u32>> = partitions_of(4).map(Partition::into_parts).collect();
        assert_eq!(four, vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);

        assert!(partitions_of(19).any(|l| l == p(&[5, 5, 3, 3, 2, 1])));
    }

    #[test]
    fn partitions_are_lexicographically_decreasing() {
        let all: Vec<_> = partitions_of(12).collect();
        assert!(all.windows(2).all(|w| w[0].parts() > w[1].parts()));
        assert_eq!(all.len(), 77);
    }

    #[test]
    fn distinct_partitions_small() {
        let v: Vec<_> = distinct_partitions(6, 6).collect();
        assert_eq!(v, vec![vec![6], vec![5, 1], vec![4, 2], vec![3, 2, 1]]);
        let v: Vec<_> = distinct_partitions(6, 3).collect();
        assert_eq!(v, vec![vec![3, 2, 1]]);
        assert_eq!(distinct_partitions(0, 0).collect::<Vec<_>>(), vec![Vec::<u32>::new()]);
        assert_eq!(distinct_partitions(7, 3).count(), 0);
    }

    #[test]
    fn strongly_unimodal_small() {
        let one: Vec<_> = strongly_unimodal_of(1).collect();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].rank(), 0);

        let mut three: Vec<(Vec<u32>, i64)> =
            strongly_unimodal_of(3).map(|s| (s.to_vec(), seq_rank(&s))).collect();
        three.sort();
        assert_eq!(three, vec![(vec![1, 2], -1), (vec![2, 1], 1), (vec![3], 0)]);
    }

    #[test]
    fn sequence_validation() {
        assert!(StronglyUnimodalSeq::new(vec![1, 2], 2, vec![]).is_err());
        assert!(StronglyUnimodalSeq::new(vec![2, 1], 3, vec![]).is_err());
        assert!(StronglyUnimodalSeq::new(vec![], 3, vec![1, 2]).is_err());
        let s = StronglyUnimodalSeq::from_sequence(&[1, 3, 4, 2]).unwrap();
        assert_eq!((s.peak(), s.rank(), s.weight()), (4, -1, 10));
    }
}
