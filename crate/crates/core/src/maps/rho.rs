//! `rho`: rank `≤ 0` without `−1` in the rank-set, onto rank `≤ −2` with `0`
//! in the rank-set. It lowers the rank by 2.

use crate::error::Result;
use crate::partition::Partition;
use crate::sets::{in_a1, in_b1};

use super::outside;

/// `(λ_1 − 1, …, λ_{j+1} − 1, j + 1, λ_{j+2}, …)` with `j` the largest index
/// such that `j − λ_{j+1} < −1`.
pub fn rho(lambda: &Partition) -> Result<Partition> {
    if !in_a1(lambda) {
        return Err(outside("rho", lambda, "needs rank <= 0 and -1 not in the rank-set"));
    }
    let parts = lambda.parts();
    // j − λ_{j+1} increases strictly, so the qualifying j form a prefix
    let j = (0..parts.len())
        .take_while(|&j| (j as i64) - i64::from(parts[j]) < -1)
        .last()
        .ok_or_else(|| outside("rho", lambda, "no index j with j - lambda_{j+1} < -1"))?;
    let mut out: Vec<u32> = parts[..=j].iter().map(|&p| p - 1).collect();
    out.push(j as u32 + 1);
    out.extend_from_slice(&parts[j + 1..]);
    Ok(Partition::from_vec_unchecked(out))
}

/// `(μ_1 + 1, …, μ_k + 1, μ_{k+2}, …)` with `k ≥ 1` the index where
/// `μ_{k+1} = k`.
pub fn rho_inv(mu: &Partition) -> Result<Partition> {
    if !in_b1(mu) {
        return Err(outside("rho^-1", mu, "needs rank <= -2 and 0 in the rank-set"));
    }
    let parts = mu.parts();
    let k = (1..parts.len())
        .find(|&k| parts[k] as usize == k)
        .ok_or_else(|| outside("rho^-1", mu, "no k >= 1 with mu_{k+1} = k"))?;
    let mut out: Vec<u32> = parts[..k].iter().map(|&p| p + 1).collect();
    out.extend_from_slice(&parts[k + 1..]);
    Ok(Partition::from_vec_unchecked(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    #[test]
    fn rejects_outside_domain() {
        let lam = Partition::new(vec![3, 3]).unwrap();
        assert!(rho(&lam).is_err());
    }

    #[test]
    fn small_example() {
        // (2,1): rank 0, rank-set (−2, 0, 2, …); j = 0
        let lam = Partition::new(vec![2, 1]).unwrap();
        let mu = rho(&lam).unwrap();
        assert_eq!(mu.parts(), &[1, 1, 1]);
        assert_eq!(mu.rank(), lam.rank() - 2);
        assert_eq!(rho_inv(&mu).unwrap(), lam);
    }

    #[test]
    fn round_trip_small() {
        for n in 1..=20 {
            for lam in partitions_of(n).filter(in_a1) {
                let mu = rho(&lam).unwrap();
                assert!(in_b1(&mu));
                assert_eq!(rho_inv(&mu).unwrap(), lam);
            }
        }
    }
}
