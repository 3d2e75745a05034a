//! `Psi`: an injection from `V(1)` into `U(0)`, both read off Durfee square
//! symbols. Block `V_i` goes to `U_i` by the identity, `psi2` or `psi3`.

use crate::error::Result;
use crate::partition::Partition;
use crate::sets::{classify_blocks, SetSpec};

use super::{build, outside};

fn v1_block(lambda: &Partition) -> Option<u8> {
    classify_blocks(lambda, &SetSpec::v(1).expect("V(1)"))
}

fn u0_block(mu: &Partition) -> Option<u8> {
    classify_blocks(mu, &SetSpec::u(0))
}

/// Identity on `V_1(1)`.
pub fn psi1(lambda: &Partition) -> Result<Partition> {
    if v1_block(lambda) != Some(1) {
        return Err(outside("psi1", lambda, "needs V_1(1)"));
    }
    Ok(lambda.clone())
}

/// On `V_2(1)`: `((α_2, …, α_s), (β_2, …, β_{t−1}))_{d+1}`.
pub fn psi2(lambda: &Partition) -> Result<Partition> {
    if v1_block(lambda) != Some(2) {
        return Err(outside("psi2", lambda, "needs V_2(1)"));
    }
    let sym = lambda.durfee_square_symbol();
    let alpha = sym.alpha().parts();
    let beta = sym.beta().parts();
    build("psi2", 0, sym.d() + 1, alpha[1..].to_vec(), beta[1..beta.len() - 1].to_vec())
}

/// On `U_2(0)`: `((d'−1, γ), (d'−1, δ, 1))_{d'−1}`.
pub fn psi2_inverse(mu: &Partition) -> Result<Partition> {
    if u0_block(mu) != Some(2) {
        return Err(outside("psi2^-1", mu, "needs U_2(0)"));
    }
    let sym = mu.durfee_square_symbol();
    let d = sym.d() - 1;
    let mut alpha = vec![d];
    alpha.extend_from_slice(sym.alpha().parts());
    let mut beta = vec![d];
    beta.extend_from_slice(sym.beta().parts());
    beta.push(1);
    build("psi2^-1", 0, d, alpha, beta)
}

/// On `V_3(1)`, with `i` the largest `p ≤ s` such that `α_p ≥ β_{p+2} − 1`:
/// `γ = (α_2, …, α_i, β_{i+2} − 1, …, β_t − 1)` and
/// `δ = (β_2, …, β_{i+1}, α_{i+1} + 1, …, α_s + 1, 1^{t−s−2})`, square `d + 1`.
pub fn psi3(lambda: &Partition) -> Result<Partition> {
    if v1_block(lambda) != Some(3) {
        return Err(outside("psi3", lambda, "needs V_3(1)"));
    }
    let sym = lambda.durfee_square_symbol();
    let (a, b) = (sym.alpha(), sym.beta());
    let (s, t) = (a.len(), b.len());
    let i = (1..=s)
        .rev()
        .find(|&p| a.part(p) + 1 >= b.part(p + 2))
        .ok_or_else(|| outside("psi3", lambda, "no index i with alpha_i >= beta_{i+2} - 1"))?;
    let mut gamma: Vec<u32> = (2..=i).map(|p| a.part(p)).collect();
    gamma.extend((i + 2..=t).map(|p| b.part(p) - 1));
    let mut delta: Vec<u32> = (2..=i + 1).map(|p| b.part(p)).collect();
    delta.extend((i + 1..=s).map(|p| a.part(p) + 1));
    delta.extend(std::iter::repeat_n(1, t - s - 2));
    build("psi3", 0, sym.d() + 1, gamma, delta)
}

/// Inverse of `psi3`, with `j` the largest `p ≤ t'` such that `δ_p ≥ γ_p + 1`:
/// `α = (d'−1, γ_1, …, γ_{j−1}, δ_{j+1} − 1, …, δ_{t'} − 1)` without zeros and
/// `β = (d'−1, δ_1, …, δ_j, γ_j + 1, …, γ_{t'} + 1)`, square `d' − 1`.
pub fn pi(mu: &Partition) -> Result<Partition> {
    if u0_block(mu) != Some(3) {
        return Err(outside("pi", mu, "needs U_3(0)"));
    }
    let sym = mu.durfee_square_symbol();
    let (g, dl) = (sym.alpha(), sym.beta());
    let t = dl.len();
    let j = (1..=t)
        .rev()
        .find(|&p| dl.part(p) > g.part(p))
        .ok_or_else(|| outside("pi", mu, "no index j with delta_j >= gamma_j + 1"))?;
    let d = sym.d() - 1;
    let mut alpha = vec![d];
    alpha.extend((1..j).map(|p| g.part(p)));
    alpha.extend((j + 1..=t).map(|p| dl.part(p) - 1));
    while alpha.last() == Some(&0) {
        alpha.pop();
    }
    let mut beta = vec![d];
    beta.extend((1..=j).map(|p| dl.part(p)));
    beta.extend((j..=t).map(|p| g.part(p) + 1));
    build("pi", 0, d, alpha, beta)
}

/// Dispatches on the block of `V(1)`.
pub fn psi(lambda: &Partition) -> Result<Partition> {
    match v1_block(lambda) {
        Some(1) => psi1(lambda),
        Some(2) => psi2(lambda),
        Some(3) => psi3(lambda),
        _ => Err(outside("Psi", lambda, "needs V(1)")),
    }
}

/// Inverse of [`psi`] on its image.
pub fn psi_inverse(mu: &Partition) -> Result<Partition> {
    match u0_block(mu) {
        Some(1) => Ok(mu.clone()),
        Some(2) => psi2_inverse(mu),
        Some(3) => pi(mu),
        _ => Err(outside("Psi^-1", mu, "needs U_1(0), U_2(0) or U_3(0)")),
    }
}

/// A member of `U_4(0, n) ∪ U_5(0, n)`, which `Psi` never reaches, for `n ≥ 6`:
/// `((1^{t−3}), (2, 1^{t−3}))_2` at `n = 2t` and `((1^{t−2}), (2, 1^{t−3}))_2`
/// at `n = 2t + 1`.
pub fn psi_witness(n: u32) -> Option<Partition> {
    if n < 6 {
        return None;
    }
    let t = n / 2;
    let alpha_len = if n.is_multiple_of(2) { t - 3 } else { t - 2 };
    let mut beta = vec![2];
    beta.extend(std::iter::repeat_n(1, (t - 3) as usize));
    build("Psi witness", 0, 2, vec![1; alpha_len as usize], beta).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::DurfeeSymbol;

    fn sym(d: u32, a: &[u32], b: &[u32]) -> Partition {
        DurfeeSymbol::from_parts(0, d, a.to_vec(), b.to_vec()).unwrap().assemble()
    }

    #[test]
    fn psi2_worked_example() {
        let lam = sym(5, &[5, 4, 4, 3, 2, 2], &[5, 3, 2, 2, 2, 1, 1, 1, 1]);
        let mu = sym(6, &[4, 4, 3, 2, 2], &[3, 2, 2, 2, 1, 1, 1]);
        assert_eq!(psi(&lam).unwrap(), mu);
        assert_eq!(psi_inverse(&mu).unwrap(), lam);
    }

    #[test]
    fn psi3_worked_example() {
        let lam = sym(7, &[7, 6, 5, 3, 1], &[7, 7, 6, 6, 4, 3, 3, 2]);
        let mu = sym(8, &[6, 5, 3, 2, 2, 1], &[7, 6, 6, 4, 2, 1]);
        assert_eq!(psi3(&lam).unwrap(), mu);
        assert_eq!(pi(&mu).unwrap(), lam);
    }

    #[test]
    fn witnesses_land_in_u4_or_u5() {
        for n in 6..40 {
            let w = psi_witness(n).unwrap();
            assert_eq!(w.weight(), u64::from(n));
            let want = if n % 2 == 0 { 4 } else { 5 };
            assert_eq!(u0_block(&w), Some(want), "n = {n}");
        }
        assert!(psi_witness(5).is_none());
    }
}
