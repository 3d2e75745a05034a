//! Partition families cut out by conditions on Durfee rectangle symbols and
//! rank-sets, together with their block decompositions.
//!
//! Families, each over partitions of a fixed `n`:
//!
//! - `U(m)`: m-symbol `(α, β)` with `ℓ(α) − ℓ(β) ≤ −1` (`≤ 0` when `m = 0`),
//!   `α_1 ≤ m + j − 1`, and every `1, …, m − 1` a part of `α`. Counted by `u(m,n)`.
//! - `V(m+1)`: m-symbol with `ℓ(α) − ℓ(β) ≤ −2`, `β_1 = j`, and every
//!   `1, …, m` a part of `α`. Counted by `u(m+1,n)`.
//! - `A1`: rank `≤ 0` and `−1` missing from the rank-set.
//! - `B1`: rank `≤ −2` and `0` in the rank-set.
//! - `P0`: rank exactly `0`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, DurfeeSymbol, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    U,
    V,
    A1,
    B1,
    P0,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::U => "U",
            Family::V => "V",
            Family::A1 => "A1",
            Family::B1 => "B1",
            Family::P0 => "P0",
        };
        f.write_str(s)
    }
}

/// A family with its parameter (`m` for `U(m)`, `m + 1` for `V(m+1)`), and
/// optionally one block of its decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SetSpec {
    family: Family,
    param: u32,
    block: Option<u8>,
}

impl SetSpec {
    pub fn u(m: u32) -> Self {
        SetSpec { family: Family::U, param: m, block: None }
    }

    /// `V(m_plus_1)`; the parameter must be at least 1.
    pub fn v(m_plus_1: u32) -> Result<Self> {
        if m_plus_1 == 0 {
            return Err(Error::InvalidBlock { family: "V(0)".into(), block: 0 });
        }
        Ok(SetSpec { family: Family::V, param: m_plus_1, block: None })
    }

    pub fn a1() -> Self {
        SetSpec { family: Family::A1, param: 1, block: None }
    }

    pub fn b1() -> Self {
        SetSpec { family: Family::B1, param: 1, block: None }
    }

    pub fn p0() -> Self {
        SetSpec { family: Family::P0, param: 0, block: None }
    }

    /// Restricts to one block, checking that the family has it.
    pub fn with_block(self, block: u8) -> Result<Self> {
        let max = self.block_count();
        if block == 0 || block > max {
            return Err(Error::InvalidBlock { family: self.to_string(), block });
        }
        Ok(SetSpec { block: Some(block), ..self })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn param(&self) -> u32 {
        self.param
    }

    pub fn block(&self) -> Option<u8> {
        self.block
    }

    /// Number of blocks in the family's decomposition (0 if it has none).
    pub fn block_count(&self) -> u8 {
        match (self.family, self.param) {
            (Family::U, 0) => 5,
            (Family::U, _) => 2,
            (Family::V, 1) => 3,
            (Family::V, _) => 2,
            (Family::P0, _) => 10,
            (Family::A1 | Family::B1, _) => 0,
        }
    }

    /// Whether `λ` lies in the family (ignoring the block).
    pub fn contains_family(&self, lambda: &Partition) -> bool {
        match self.family {
            Family::U => in_u(lambda, self.param),
            Family::V => in_v(lambda, self.param),
            Family::A1 => in_a1(lambda),
            Family::B1 => in_b1(lambda),
            Family::P0 => in_p0(lambda),
        }
    }

    /// Whether `λ` lies in the family and, if one is set, the block.
    pub fn contains(&self, lambda: &Partition) -> bool {
        match self.block {
            None => self.contains_family(lambda),
            Some(b) => classify_blocks(lambda, self) == Some(b),
        }
    }
}

impl fmt::Display for SetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::U | Family::V => write!(f, "{}({})", self.family, self.param)?,
            _ => write!(f, "{}", self.family)?,
        }
        if let Some(b) = self.block {
            write!(f, "[{b}]")?;
        }
        Ok(())
    }
}

/// Whether every `1, …, k_max` is a part of `p` (vacuous for `k_max = 0`).
fn has_parts_up_to(p: &Partition, k_max: u32) -> bool {
    (1..=k_max).all(|k| p.contains_part(k))
}

/// Conditions on the m-symbol of a member of `U(m)`.
pub fn symbol_in_u(sym: &DurfeeSymbol) -> bool {
    let m = sym.m();
    let gap_ok = if m == 0 { sym.length_gap() <= 0 } else { sym.length_gap() <= -1 };
    let width = m + sym.j();
    gap_ok && width >= 1 && sym.alpha().largest() < width && has_parts_up_to(sym.alpha(), m.saturating_sub(1))
}

/// Conditions on the m-symbol of a member of `V(m+1)`.
pub fn symbol_in_v(sym: &DurfeeSymbol) -> bool {
    sym.length_gap() <= -2 && sym.beta().largest() == sym.j() && has_parts_up_to(sym.alpha(), sym.m())
}

pub fn in_u(lambda: &Partition, m: u32) -> bool {
    symbol_in_u(&lambda.durfee_symbol(m))
}

/// Membership in `V(m_plus_1)`, read off the `(m_plus_1 − 1)`-symbol.
pub fn in_v(lambda: &Partition, m_plus_1: u32) -> bool {
    assert!(m_plus_1 >= 1, "V is indexed from 1");
    symbol_in_v(&lambda.durfee_symbol(m_plus_1 - 1))
}

pub fn in_a1(lambda: &Partition) -> bool {
    lambda.rank() <= 0 && !lambda.rank_set_contains(-1)
}

pub fn in_b1(lambda: &Partition) -> bool {
    lambda.rank() <= -2 && lambda.rank_set_contains(0)
}

pub fn in_p0(lambda: &Partition) -> bool {
    !lambda.is_empty() && lambda.rank() == 0
}

/// The rank-set form of `U(m)`: rank `≤ −m − 1` (`≤ 0` for `m = 0`),
/// `m − 1` in the rank-set, and `λ_1 > λ_2 > … > λ_m`.
pub fn in_u_by_rank(lambda: &Partition, m: u32) -> bool {
    if lambda.is_empty() {
        return false;
    }
    let bound = if m == 0 { 0 } else { -i64::from(m) - 1 };
    lambda.rank() <= bound
        && lambda.rank_set_contains(i64::from(m) - 1)
        && (1..m as usize).all(|k| lambda.part(k) > lambda.part(k + 1))
}

/// The shifted form: `μ ⊢ n − C(m,2)` with rank `≤ −2m` and `m − 1` in the
/// rank-set. For `m ≥ 1` these are equinumerous with `U(m, n)`.
pub fn in_shifted_u(mu: &Partition, m: u32) -> bool {
    !mu.is_empty() && mu.rank() <= -2 * i64::from(m) && mu.rank_set_contains(i64::from(m) - 1)
}

/// Block of `U(0)` holding a symbol `(γ, δ)_{d'}` already known to be in `U(0)`.
fn u0_block(sym: &DurfeeSymbol) -> Option<u8> {
    let gap = sym.length_gap();
    let full = sym.beta().largest() == sym.d();
    match (gap, full) {
        (g, true) if g <= -2 => Some(1),
        (g, false) if g <= -1 => Some(2),
        (0, false) => Some(3),
        (-1, true) => Some(4),
        (0, true) => Some(5),
        _ => None,
    }
}

fn v1_block(sym: &DurfeeSymbol) -> u8 {
    let d = sym.d();
    if sym.alpha().largest() < d {
        1
    } else if sym.beta().smallest() == 1 {
        2
    } else {
        3
    }
}

fn p0_block(sym: &DurfeeSymbol) -> u8 {
    let d = sym.d();
    let a = |k| sym.alpha().part(k);
    let b = |k| sym.beta().part(k);
    if b(1) == d {
        if a(1) < d {
            1
        } else if a(2) < d {
            3
        } else if a(3) < d {
            4
        } else if d != 2 {
            5
        } else if b(2) == 2 {
            6
        } else {
            7
        }
    } else if a(1) == d {
        2
    } else if a(1) + 2 <= d {
        8
    } else if a(2) < d - 1 {
        9
    } else {
        10
    }
}

/// Block index of `λ` inside `spec`'s family, or `None` if `λ` is not in the
/// family.
///
/// For `U(m)` with `m ≥ 1` the two blocks do not cover the family; members
/// outside both also give `None`.
pub fn classify_blocks(lambda: &Partition, spec: &SetSpec) -> Option<u8> {
    match spec.family {
        Family::U => {
            let m = spec.param;
            let sym = lambda.durfee_symbol(m);
            if !symbol_in_u(&sym) {
                return None;
            }
            if m == 0 {
                return u0_block(&sym);
            }
            let j = sym.j();
            if sym.length_gap() <= -2 && sym.beta().largest() == j && sym.alpha().contains_part(m) {
                Some(1)
            } else if sym.beta().largest() < j {
                Some(2)
            } else {
                None
            }
        }
        Family::V => {
            let m = spec.param - 1;
            let sym = lambda.durfee_symbol(m);
            if !symbol_in_v(&sym) {
                return None;
            }
            if m == 0 {
                Some(v1_block(&sym))
            } else if sym.alpha().largest() < m + sym.j() {
                Some(1)
            } else {
                Some(2)
            }
        }
        Family::P0 => in_p0(lambda).then(|| p0_block(&lambda.durfee_square_symbol())),
        Family::A1 | Family::B1 => None,
    }
}

/// Sub-block of `U_4(0)`: 1 if 2 is a part of `δ`, else 2.
pub fn u4_sub_block(lambda: &Partition) -> Option<u8> {
    if classify_blocks(lambda, &SetSpec::u(0)) != Some(4) {
        return None;
    }
    let sym = lambda.durfee_square_symbol();
    Some(if sym.beta().contains_part(2) { 1 } else { 2 })
}

/// Sub-block of `U_5(0)`: 1 if `d' ≠ 3`, else 2.
pub fn u5_sub_block(lambda: &Partition) -> Option<u8> {
    if classify_blocks(lambda, &SetSpec::u(0)) != Some(5) {
        return None;
    }
    Some(if lambda.durfee_square_symbol().d() == 3 { 2 } else { 1 })
}

/// Members of `spec` among the partitions of `n`, in the enumeration order of
/// [`partitions_of`].
pub fn enumerate_set(spec: &SetSpec, n: u32) -> Vec<Partition> {
    partitions_of(n).filter(|l| spec.contains(l)).collect()
}

/// Number of members of `spec` among the partitions of `n`.
pub fn count_set(spec: &SetSpec, n: u32) -> u64 {
    partitions_of(n).filter(|l| spec.contains(l)).count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(m: u32, j: u32, a: &[u32], b: &[u32]) -> Partition {
        DurfeeSymbol::from_parts(m, j, a.to_vec(), b.to_vec()).unwrap().assemble()
    }

    #[test]
    fn u_small_cases() {
        let one = Partition::new(vec![1]).unwrap();
        assert!(in_u(&one, 0));
        assert!(!in_u(&Partition::empty(), 0));
        assert!(in_u_by_rank(&one, 0));
    }

    #[test]
    fn v_worked_example() {
        let lam = sym(2, 3, &[5, 5, 3, 2, 2, 1], &[3, 3, 3, 2, 2, 2, 1, 1, 1]);
        assert_eq!(lam.weight(), 51);
        assert!(in_v(&lam, 3));
        let spec = SetSpec::v(3).unwrap();
        assert_eq!(classify_blocks(&lam, &spec), Some(2));
    }

    #[test]
    fn v_rejects_short_partitions() {
        for lam in partitions_of(8).filter(|l| l.len() <= 3) {
            assert!(!in_v(&lam, 4), "{lam}");
        }
    }

    #[test]
    fn block_examples() {
        let v2 = sym(0, 5, &[5, 4, 4, 3, 2, 2], &[5, 3, 2, 2, 2, 1, 1, 1, 1]);
        assert_eq!(v2.weight(), 63);
        assert_eq!(classify_blocks(&v2, &SetSpec::v(1).unwrap()), Some(2));

        let v3 = sym(0, 7, &[7, 6, 5, 3, 1], &[7, 7, 6, 6, 4, 3, 3, 2]);
        assert_eq!(v3.weight(), 109);
        assert_eq!(classify_blocks(&v3, &SetSpec::v(1).unwrap()), Some(3));

        let p4 = sym(0, 6, &[6, 6, 5, 3, 3, 2, 2, 1, 1], &[6, 6, 6, 5, 4, 2, 1, 1, 1]);
        assert_eq!(p4.weight(), 97);
        assert_eq!(classify_blocks(&p4, &SetSpec::p0()), Some(4));
    }

    #[test]
    fn p_block_of_single_box() {
        let one = Partition::new(vec![1]).unwrap();
        assert_eq!(classify_blocks(&one, &SetSpec::p0()), Some(10));
    }

    #[test]
    fn u4_witness_for_even_weight() {
        for t in 3..12u32 {
            let ones = vec![1; (t - 3) as usize];
            let mut beta = vec![2];
            beta.extend(&ones);
            let lam = sym(0, 2, &ones, &beta);
            assert_eq!(lam.weight(), u64::from(2 * t));
            assert_eq!(classify_blocks(&lam, &SetSpec::u(0)), Some(4));
            assert_eq!(u4_sub_block(&lam), Some(1));
        }
    }

    #[test]
    fn a1_b1_examples() {
        let one = Partition::new(vec![1]).unwrap();
        assert!(!in_a1(&one));
        assert!(!in_b1(&one));
        let lam = Partition::new(vec![1, 1]).unwrap();
        // rank −1, rank-set (−1, 0, 2, …)
        assert!(!in_a1(&lam));
        // rank 0, rank-set (−2, 0, 2, …)
        let lam = Partition::new(vec![2, 1]).unwrap();
        assert!(in_a1(&lam));
        // rank −2, rank-set (−1, 0, 2, …)
        let lam = Partition::new(vec![1, 1, 1]).unwrap();
        assert!(in_b1(&lam));
    }

    #[test]
    fn spec_block_validation() {
        assert!(SetSpec::u(0).with_block(5).is_ok());
        assert!(SetSpec::u(0).with_block(6).is_err());
        assert!(SetSpec::u(2).with_block(3).is_err());
        assert!(SetSpec::v(1).unwrap().with_block(3).is_ok());
        assert!(SetSpec::v(2).unwrap().with_block(3).is_err());
        assert!(SetSpec::p0().with_block(10).is_ok());
        assert!(SetSpec::a1().with_block(1).is_err());
        assert!(SetSpec::v(0).is_err());
        assert_eq!(SetSpec::u(0).with_block(4).unwrap().to_string(), "U(0)[4]");
    }

    #[test]
    fn blocks_partition_families_small() {
        for n in 1..=24 {
            for lam in partitions_of(n) {
                let u0 = SetSpec::u(0);
                assert_eq!(in_u(&lam, 0), classify_blocks(&lam, &u0).is_some(), "{lam}");
                let v1 = SetSpec::v(1).unwrap();
                assert_eq!(in_v(&lam, 1), classify_blocks(&lam, &v1).is_some(), "{lam}");
                assert_eq!(in_p0(&lam), classify_blocks(&lam, &SetSpec::p0()).is_some(), "{lam}");
            }
        }
    }

    #[test]
    fn enumerate_set_is_filtered_in_order() {
        let all = enumerate_set(&SetSpec::p0(), 12);
        assert_eq!(all.len() as u64, count_set(&SetSpec::p0(), 12));
        assert!(all.windows(2).all(|w| w[0].parts() > w[1].parts()));
        assert!(all.iter().all(|l| l.rank() == 0));
    }
}
