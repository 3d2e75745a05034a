//! `Phi`: for `m ≥ 1`, an injection from `V(m+1)` into `U(m)`, both read off
//! m-Durfee rectangle symbols. It is the identity on `V_1` and `phi2` on `V_2`.

use crate::error::Result;
use crate::partition::Partition;
use crate::sets::{classify_blocks, SetSpec};

use super::{build, outside};

fn v_block(lambda: &Partition, m: u32) -> Option<u8> {
    if m == 0 {
        return None;
    }
    classify_blocks(lambda, &SetSpec::v(m + 1).expect("m + 1 >= 1"))
}

fn u_block(mu: &Partition, m: u32) -> Option<u8> {
    if m == 0 {
        return None;
    }
    classify_blocks(mu, &SetSpec::u(m))
}

/// Identity on `V_1(m+1)`.
pub fn phi1(lambda: &Partition, m: u32) -> Result<Partition> {
    if v_block(lambda, m) != Some(1) {
        return Err(outside("phi1", lambda, "needs V_1(m+1) with m >= 1"));
    }
    Ok(lambda.clone())
}

/// On `V_2(m+1)`: drop `α_1` and `β_1`, lower `α_{i_m}` by one where `i_m`
/// is the last index with `α_{i_m} = m`, and widen the rectangle by one.
pub fn phi2(lambda: &Partition, m: u32) -> Result<Partition> {
    if v_block(lambda, m) != Some(2) {
        return Err(outside("phi2", lambda, "needs V_2(m+1) with m >= 1"));
    }
    let sym = lambda.durfee_symbol(m);
    let alpha = sym.alpha().parts();
    let i_m = alpha
        .iter()
        .rposition(|&a| a == m)
        .ok_or_else(|| outside("phi2", lambda, "m is not a part of alpha"))?;
    if i_m == 0 {
        return Err(outside("phi2", lambda, "i_m must be at least 2"));
    }
    let mut gamma: Vec<u32> = alpha[1..].to_vec();
    gamma[i_m - 1] -= 1;
    if gamma.last() == Some(&0) {
        gamma.pop();
    }
    let delta = sym.beta().parts()[1..].to_vec();
    build("phi2", m, sym.j() + 1, gamma, delta)
}

/// Dispatches on the block of `V(m+1)`.
pub fn phi(lambda: &Partition, m: u32) -> Result<Partition> {
    match v_block(lambda, m) {
        Some(1) => phi1(lambda, m),
        Some(2) => phi2(lambda, m),
        _ => Err(outside("Phi", lambda, "needs V(m+1) with m >= 1")),
    }
}

/// Inverse of `phi2`: put back `α_1 = m + j` and `β_1 = j`, and raise the
/// first part equal to `m − 1` (or append a 1 when `m = 1`).
pub fn varphi(mu: &Partition, m: u32) -> Result<Partition> {
    if u_block(mu, m) != Some(2) {
        return Err(outside("varphi", mu, "needs U_2(m) with m >= 1"));
    }
    let sym = mu.durfee_symbol(m);
    let j_prime = sym.j();
    let gamma = sym.alpha().parts();
    // 0-based position of γ_{t_{m−1}}; for m = 1 the slot just past the end
    let t = if m == 1 {
        gamma.len()
    } else {
        gamma
            .iter()
            .position(|&g| g == m - 1)
            .ok_or_else(|| outside("varphi", mu, "m - 1 is not a part of gamma"))?
    };
    let mut alpha = Vec::with_capacity(gamma.len() + 2);
    alpha.push(m + j_prime - 1);
    alpha.extend_from_slice(gamma);
    if t == gamma.len() {
        alpha.push(1);
    } else {
        alpha[t + 1] += 1;
    }
    let mut beta = vec![j_prime - 1];
    beta.extend_from_slice(sym.beta().parts());
    build("varphi", m, j_prime - 1, alpha, beta)
}

/// Inverse of [`phi`] on its image.
pub fn phi_inverse(mu: &Partition, m: u32) -> Result<Partition> {
    match u_block(mu, m) {
        Some(1) => Ok(mu.clone()),
        Some(2) => varphi(mu, m),
        _ => Err(outside("Phi^-1", mu, "needs U_1(m) or U_2(m) with m >= 1")),
    }
}

/// `((m−1, m−2, …, 1), (1^{m+r}))_{(m+1)×1}` with `r = n − C(m+2, 2)`: a member
/// of `U(m, n)` outside both blocks, hence outside the image of `Phi`.
pub fn phi_witness(m: u32, n: u32) -> Option<Partition> {
    let base = (m + 2) * (m + 1) / 2;
    if m == 0 || n < base {
        return None;
    }
    let r = n - base;
    let gamma: Vec<u32> = (1..m).rev().collect();
    let delta = vec![1; (m + r) as usize];
    build("Phi witness", m, 1, gamma, delta).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::DurfeeSymbol;
    use crate::sets::in_u;

    fn sym(m: u32, j: u32, a: &[u32], b: &[u32]) -> Partition {
        DurfeeSymbol::from_parts(m, j, a.to_vec(), b.to_vec()).unwrap().assemble()
    }

    #[test]
    fn worked_example_m2() {
        let lam = sym(2, 3, &[5, 5, 3, 2, 2, 1], &[3, 3, 3, 2, 2, 2, 1, 1, 1]);
        let mu = sym(2, 4, &[5, 3, 2, 1, 1], &[3, 3, 2, 2, 2, 1, 1, 1]);
        assert_eq!(phi(&lam, 2).unwrap(), mu);
        assert_eq!(varphi(&mu, 2).unwrap(), lam);
    }

    #[test]
    fn witness_is_outside_blocks() {
        for m in 1..5 {
            for n in ((m + 2) * (m + 1) / 2)..40 {
                let w = phi_witness(m, n).unwrap();
                assert_eq!(w.weight(), u64::from(n));
                assert!(in_u(&w, m));
                assert_eq!(u_block(&w, m), None);
            }
        }
        assert!(phi_witness(3, 9).is_none());
    }
}
