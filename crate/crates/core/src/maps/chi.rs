//! The maps `chi1, …, chi8` from the blocks `P_1, …, P_10` of the rank-zero
//! partitions into `U_4(0) ∪ U_5(0)`, and their inverses `zeta1, …, zeta8`.
//!
//! Every map works on the Durfee square symbol `(α, β)_d`. For a rank-zero
//! partition `ℓ(α) = ℓ(β)`, written `t` below.

use crate::error::Result;
use crate::partition::{DurfeeSymbol, Partition};
use crate::sets::{classify_blocks, SetSpec};

use super::{build, check_threshold, outside, remove_one};

fn p_block(lambda: &Partition) -> Option<u8> {
    classify_blocks(lambda, &SetSpec::p0())
}

fn u0_block(mu: &Partition) -> Option<u8> {
    classify_blocks(mu, &SetSpec::u(0))
}

/// Square symbol of `lambda`, after checking the weight threshold and that
/// `lambda` lies in one of `blocks` of `P0`.
fn p_symbol(map: &str, lambda: &Partition, blocks: &[u8], min: u64) -> Result<DurfeeSymbol> {
    check_threshold(map, lambda, min)?;
    match p_block(lambda) {
        Some(b) if blocks.contains(&b) => Ok(lambda.durfee_square_symbol()),
        _ => Err(outside(map, lambda, &format!("needs P0 block in {blocks:?}"))),
    }
}

fn u_symbol(map: &str, mu: &Partition, block: u8) -> Result<DurfeeSymbol> {
    if u0_block(mu) != Some(block) {
        return Err(outside(map, mu, &format!("needs U_{block}(0)")));
    }
    Ok(mu.durfee_square_symbol())
}

fn ones(k: usize) -> impl Iterator<Item = u32> {
    std::iter::repeat_n(1, k)
}

/// Identity from `P_1` onto `U_5(0)`.
pub fn chi1(lambda: &Partition) -> Result<Partition> {
    p_symbol("chi1", lambda, &[1], 1)?;
    Ok(lambda.clone())
}

pub fn zeta1(mu: &Partition) -> Result<Partition> {
    u_symbol("zeta1", mu, 5)?;
    Ok(mu.clone())
}

/// Swaps `α` and `β`, taking `P_2` onto `U_5(0)`.
pub fn chi2(lambda: &Partition) -> Result<Partition> {
    let s = p_symbol("chi2", lambda, &[2], 1)?;
    build("chi2", 0, s.d(), s.beta().parts().to_vec(), s.alpha().parts().to_vec())
}

pub fn zeta2(mu: &Partition) -> Result<Partition> {
    let s = u_symbol("zeta2", mu, 5)?;
    build("zeta2", 0, s.d(), s.beta().parts().to_vec(), s.alpha().parts().to_vec())
}

/// `((α_1 − 1, α_2, …), (β, 1))_d` on `P_3`, `n ≥ 4`.
pub fn chi3(lambda: &Partition) -> Result<Partition> {
    let s = p_symbol("chi3", lambda, &[3], 4)?;
    let mut gamma = s.alpha().parts().to_vec();
    gamma[0] -= 1;
    let mut delta = s.beta().parts().to_vec();
    delta.push(1);
    build("chi3", 0, s.d(), gamma, delta)
}

pub fn zeta3(mu: &Partition) -> Result<Partition> {
    let s = u_symbol("zeta3", mu, 4)?;
    let mut alpha = s.alpha().parts().to_vec();
    if alpha.is_empty() {
        return Err(outside("zeta3", mu, "gamma is empty"));
    }
    alpha[0] += 1;
    let mut beta = s.beta().parts().to_vec();
    if beta.pop() != Some(1) {
        return Err(outside("zeta3", mu, "delta does not end in 1"));
    }
    build("zeta3", 0, s.d(), alpha, beta)
}

/// On `P_4`: lower `α_1, α_2` by one and insert a 2 into `β` before its first 1.
pub fn eta1(lambda: &Partition) -> Result<Partition> {
    let s = p_symbol("eta1", lambda, &[4], 6)?;
    let mut gamma = s.alpha().parts().to_vec();
    gamma[0] -= 1;
    gamma[1] -= 1;
    let mut delta = s.beta().parts().to_vec();
    let k = delta.iter().position(|&b| b == 1).unwrap_or(delta.len());
    delta.insert(k, 2);
    build("eta1", 0, s.d(), gamma, delta)
}

/// Inverse of `eta1` on `U_4^1`: drop a 2 from `δ` and raise `γ_1, γ_2`.
pub fn zeta4_1(mu: &Partition) -> Result<Partition> {
    let s = u_symbol("zeta4_1", mu, 4)?;
    let mut beta = s.beta().parts().to_vec();
    remove_one("zeta4_1", &mut beta, 0, 2)?;
    let g = s.alpha();
    let mut alpha = vec![g.part(1) + 1, g.part(2) + 1];
    alpha.extend(g.parts().iter().skip(2));
    build("zeta4_1", 0, s.d(), alpha, beta)
}

/// On `P_7`, where `d = 2`: `((α_4, …, α_t, 1), (3, 1^{t−2}))_3`.
pub fn eta2(lambda: &Partition) -> Result<Partition> {
    let s = p_symbol("eta2", lambda, &[7], 6)?;
    let t = s.alpha().len();
    let mut gamma: Vec<u32> = s.alpha().parts()[3..].to_vec();
    gamma.push(1);
    let delta: Vec<u32> = std::iter::once(3).chain(ones(t - 2)).collect();
    build("eta2", 0, 3, gamma, delta)
}

/// Inverse of `eta2` on `U_4^2`: `((2, 2, 2, γ_1, …, γ_{t'−2}), (2, 1^{t'}))_2`
/// with `t' = ℓ(δ)`.
pub fn zeta4_2(mu: &Partition) -> Result<Partition> {
    let s = u_symbol("zeta4_2", mu, 4)?;
    if s.d() != 3 {
        return Err(outside("zeta4_2", mu, "square side must be 3"));
    }
    let t = s.beta().len();
    let g = s.alpha().parts();
    if t < 2 || g.len() < t - 2 {
        return Err(outside("zeta4_2", mu, "gamma is too short"));
    }
    let mut alpha = vec![2, 2, 2];
    alpha.extend_from_slice(&g[..t - 2]);
    let beta: Vec<u32> = std::iter::once(2).chain(ones(t)).collect();
    build("zeta4_2", 0, 2, alpha, beta)
}

/// `eta1` on `P_4`, `eta2` on `P_7`; `n ≥ 6`.
pub fn chi4(lambda: &Partition) -> Result<Partition> {
    check_threshold("chi4", lambda, 6)?;
    match p_block(lambda) {
        Some(4) => eta1(lambda),
        Some(7) => eta2(lambda),
        _ => Err(outside("chi4", lambda, "needs P_4 or P_7")),
    }
}

/// `zeta4_1` when 2 is a part of `δ`, else `zeta4_2`.
pub fn zeta4(mu: &Partition) -> Result<Partition> {
    let s = u_symbol("zeta4", mu, 4)?;
    if s.beta().contains_part(2) {
        zeta4_1(mu)
    } else {
        zeta4_2(mu)
    }
}

/// On `P_5`. For `d ≥ 3`, with `k` the largest `p ≤ t` such that
/// `α_p ≥ d − 2`: `((β_2, …, β_t), (d+1, α_4, …, α_k, d−2, α_{k+1}, …, α_t))_{d+1}`.
/// For `d = 1`: `((1^t), (1^t))_1 ↦ ((1^{t−2}), (2, 1^{t−3}))_2`.
pub fn kappa1(lambda: &Partition) -> Result<Partition> {
    let s = p_symbol("kappa1", lambda, &[5], 9)?;
    let d = s.d();
    let t = s.alpha().len();
    if d == 1 {
        let delta: Vec<u32> = std::iter::once(2).chain(ones(t - 3)).collect();
        return build("kappa1", 0, 2, vec![1; t - 2], delta);
    }
    let a = s.alpha();
    let k = (1..=t).rev().find(|&p| a.part(p) >= d - 2).unwrap_or(0);
    let gamma = s.beta().parts()[1..].to_vec();
    let mut delta = vec![d + 1];
    delta.extend((4..=k).map(|p| a.part(p)));
    delta.push(d - 2);
    delta.extend((k + 1..=t).map(|p| a.part(p)));
    build("kappa1", 0, d + 1, gamma, delta)
}

/// Inverse of `kappa1` on `U_5^1`.
pub fn zeta5_1(mu: &Partition) -> Result<Partition> {
    let s = u_symbol("zeta5_1", mu, 5)?;
    let dp = s.d();
    if dp == 2 {
        let t = s.alpha().len() + 2;
        return build("zeta5_1", 0, 1, vec![1; t], vec![1; t]);
    }
    if dp < 4 {
        return Err(outside("zeta5_1", mu, "square side must be 2 or at least 4"));
    }
    let mut rest = s.beta().parts()[1..].to_vec();
    remove_one("zeta5_1", &mut rest, 0, dp - 3)?;
    let mut alpha = vec![dp - 1; 3];
    alpha.extend(rest);
    let mut beta = vec![dp - 1];
    beta.extend_from_slice(s.alpha().parts());
    build("zeta5_1", 0, dp - 1, alpha, beta)
}

/// On `P_6`, where `d = 2`: `((α_4, …, α_t, 1, 1), (3, β_3, …, β_t))_3`.
pub fn kappa2(lambda: &Partition) -> Result<Partition> {
    let s = p_symbol("kappa2", lambda, &[6], 9)?;
    let mut gamma = s.alpha().parts()[3..].to_vec();
    gamma.extend([1, 1]);
    let mut delta = vec![3];
    delta.extend_from_slice(&s.beta().parts()[2..]);
    build("kappa2", 0, 3, gamma, delta)
}

/// Inverse of `kappa2` on `U_5^2`.
pub fn zeta5_2(mu: &Partition) -> Result<Partition> {
    let s = u_symbol("zeta5_2", mu, 5)?;
    if s.d() != 3 {
        return Err(outside("zeta5_2", mu, "square side must be 3"));
    }
    let g = s.alpha().parts();
    if g.len() < 2 || s.beta().is_empty() {
        return Err(outside("zeta5_2", mu, "symbol is too short"));
    }
    let mut alpha = vec![2, 2, 2];
    alpha.extend_from_slice(&g[..g.len() - 2]);
    let mut beta = vec![2, 2];
    beta.extend_from_slice(&s.beta().parts()[1..]);
    build("zeta5_2", 0, 2, alpha, beta)
}

/// `kappa1` on `P_5`, `kappa2` on `P_6`; `n ≥ 9`.
pub fn chi5(lambda: &Partition) -> Result<Partition> {
    check_threshold("chi5", lambda, 9)?;
    match p_block(lambda) {
        Some(5) => kappa1(lambda),
        Some(6) => kappa2(lambda),
        _ => Err(outside("chi5", lambda, "needs P_5 or P_6")),
    }
}

/// `zeta5_2` when `d' = 3`, else `zeta5_1`.
pub fn zeta5(mu: &Partition) -> Result<Partition> {
    let s = u_symbol("zeta5", mu, 5)?;
    if s.d() == 3 {
        zeta5_2(mu)
    } else {
        zeta5_1(mu)
    }
}

/// On `P_8`, `n ≥ 5`, with `k` the largest `p` such that `β_p ≥ 2` (or 0):
/// `((d−2, α), (d−1, β_1, …, β_k, 2, β_{k+1}, …))_{d−1}`.
pub fn chi6(lambda: &Partition) -> Result<Partition> {
    let s = p_symbol("chi6", lambda, &[8], 5)?;
    let d = s.d();
    let mut gamma = vec![d - 2];
    gamma.extend_from_slice(s.alpha().parts());
    let beta = s.beta().parts();
    let k = beta.iter().rposition(|&b| b >= 2).map_or(0, |p| p + 1);
    let mut delta = vec![d - 1];
    delta.extend_from_slice(&beta[..k]);
    delta.push(2);
    delta.extend_from_slice(&beta[k..]);
    build("chi6", 0, d - 1, gamma, delta)
}

pub fn zeta6(mu: &Partition) -> Result<Partition> {
    let s = u_symbol("zeta6", mu, 4)?;
    let dp = s.d();
    if s.alpha().part(1) + 1 != dp {
        return Err(outside("zeta6", mu, "gamma_1 must equal d' - 1"));
    }
    let alpha = s.alpha().parts()[1..].to_vec();
    let mut beta = s.beta().parts()[1..].to_vec();
    remove_one("zeta6", &mut beta, 0, 2)?;
    build("zeta6", 0, dp + 1, alpha, beta)
}

/// On `P_9`, `n ≥ 7`: `((d−2, α_1 − 1, α_2, …, 1), (d−1, β, 1, 1))_{d−1}`.
pub fn chi7(lambda: &Partition) -> Result<Partition> {
    let s = p_symbol("chi7", lambda, &[9], 7)?;
    let d = s.d();
    let alpha = s.alpha().parts();
    let mut gamma = vec![d - 2, alpha[0] - 1];
    gamma.extend_from_slice(&alpha[1..]);
    gamma.push(1);
    let mut delta = vec![d - 1];
    delta.extend_from_slice(s.beta().parts());
    delta.extend([1, 1]);
    build("chi7", 0, d - 1, gamma, delta)
}

pub fn zeta7(mu: &Partition) -> Result<Partition> {
    let s = u_symbol("zeta7", mu, 4)?;
    let (g, dl) = (s.alpha().parts(), s.beta().parts());
    if g.len() < 2 || dl.len() < 2 {
        return Err(outside("zeta7", mu, "symbol is too short"));
    }
    let mut alpha = vec![g[1] + 1];
    alpha.extend_from_slice(&g[2..g.len() - 1]);
    let beta = dl[1..dl.len() - 2].to_vec();
    build("zeta7", 0, s.d() + 1, alpha, beta)
}

/// On `P_10`, `n ≥ 10`. For `d ≥ 3`, with `k` the largest `p ≤ t` such that
/// `α_p ≥ d − 2`: `(β, (d, α_3, …, α_k, d−2, α_{k+1}, …, α_t))_d`.
/// For `d = 2`: `((1^t), (1^t))_2 ↦ ((1^{t−1}), (2, 2, 1^{t−3}))_2`.
pub fn chi8(lambda: &Partition) -> Result<Partition> {
    let s = p_symbol("chi8", lambda, &[10], 10)?;
    let d = s.d();
    let t = s.alpha().len();
    if d == 2 {
        let delta: Vec<u32> = [2, 2].into_iter().chain(ones(t - 3)).collect();
        return build("chi8", 0, 2, vec![1; t - 1], delta);
    }
    let a = s.alpha();
    let k = (1..=t).rev().find(|&p| a.part(p) >= d - 2).unwrap_or(0);
    let mut delta = vec![d];
    delta.extend((3..=k).map(|p| a.part(p)));
    delta.push(d - 2);
    delta.extend((k + 1..=t).map(|p| a.part(p)));
    build("chi8", 0, d, s.beta().parts().to_vec(), delta)
}

pub fn zeta8(mu: &Partition) -> Result<Partition> {
    let s = u_symbol("zeta8", mu, 5)?;
    let dp = s.d();
    if dp == 2 {
        let t = s.alpha().len() + 1;
        return build("zeta8", 0, 2, vec![1; t], vec![1; t]);
    }
    let mut rest = s.beta().parts()[1..].to_vec();
    remove_one("zeta8", &mut rest, 0, dp - 2)?;
    let mut alpha = vec![dp - 1, dp - 1];
    alpha.extend(rest);
    build("zeta8", 0, dp, alpha, s.alpha().parts().to_vec())
}

/// A member of `U_4(0, n)` outside the image of `chi6`, for `n ≥ 15`:
/// `((1^{t−6}), (3, 1^{t−6}))_3` at `n = 2t` and `((1^{t−6}), (3, 2, 1^{t−7}))_3`
/// at `n = 2t + 1`.
pub fn chi6_witness(n: u32) -> Option<Partition> {
    if n < 15 {
        return None;
    }
    let t = (n / 2) as usize;
    let delta: Vec<u32> = if n.is_multiple_of(2) {
        std::iter::once(3).chain(ones(t - 6)).collect()
    } else {
        [3, 2].into_iter().chain(ones(t - 7)).collect()
    };
    build("chi6 witness", 0, 3, vec![1; t - 6], delta).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn sym(d: u32, a: &[u32], b: &[u32]) -> Partition {
        DurfeeSymbol::from_parts(0, d, a.to_vec(), b.to_vec()).unwrap().assemble()
    }

    #[test]
    fn eta2_example() {
        let lam = sym(2, &[2, 2, 2, 2, 2, 1, 1], &[2, 1, 1, 1, 1, 1, 1]);
        let mu = sym(3, &[2, 2, 1, 1, 1], &[3, 1, 1, 1, 1, 1]);
        assert_eq!(chi4(&lam).unwrap(), mu);
        assert_eq!(zeta4(&mu).unwrap(), lam);
    }

    #[test]
    fn kappa1_small_d() {
        let lam = sym(1, &[1; 5], &[1; 5]);
        let mu = kappa1(&lam).unwrap();
        assert_eq!(mu, sym(2, &[1, 1, 1], &[2, 1, 1]));
        assert_eq!(zeta5(&mu).unwrap(), lam);
    }

    #[test]
    fn thresholds_are_enforced() {
        let lam = sym(2, &[2, 2], &[2, 1]);
        assert!(matches!(
            chi8(&lam),
            Err(crate::Error::BelowThreshold { .. }) | Err(crate::Error::OutsideDomain { .. })
        ));
        let lam = Partition::new(vec![2, 1]).unwrap();
        assert!(matches!(chi3(&lam), Err(crate::Error::BelowThreshold { .. })));
    }

    #[test]
    fn chi6_witness_misses_image() {
        for n in 15..40 {
            let w = chi6_witness(n).unwrap();
            assert_eq!(w.weight(), u64::from(n));
            assert_eq!(u0_block(&w), Some(4));
            let hit = partitions_of(n).any(|l| chi6(&l).ok().as_ref() == Some(&w));
            assert!(!hit, "n = {n}");
        }
    }
}
