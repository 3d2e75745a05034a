//! The bijections and injections between partition families, their inverses,
//! and an exhaustive verification engine.
//!
//! Every map takes and returns [`Partition`]s. Internally it rewrites the
//! Durfee rectangle symbol and reassembles the result, so each output is a
//! valid partition by construction or the map reports an error.
//!
//! | map | domain | target |
//! |-----|--------|--------|
//! | `rho` | `A1` | `B1` |
//! | `Phi` (`m ≥ 1`) | `V(m+1)` | `U(m)`, block to block |
//! | `Psi` | `V(1)` | `U(0)`, block `i` to block `i` |
//! | `chi1`, `chi2` | `P_1`, `P_2` | `U_5(0)` |
//! | `chi3` | `P_3` | `U_4(0)` |
//! | `chi4` | `P_4 ∪ P_7` | `U_4^1 ∪ U_4^2` |
//! | `chi5` | `P_5 ∪ P_6` | `U_5^1 ∪ U_5^2` |
//! | `chi6`, `chi7` | `P_8`, `P_9` | `U_4(0)` |
//! | `chi8` | `P_10` | `U_5(0)` |

mod chi;
mod golden;
mod phi;
mod psi;
mod rho;
mod verify;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{DurfeeSymbol, Partition};

pub use chi::{
    chi1, chi2, chi3, chi4, chi5, chi6, chi6_witness, chi7, chi8, eta1, eta2, kappa1, kappa2, zeta1, zeta2,
    zeta3, zeta4, zeta4_1, zeta4_2, zeta5, zeta5_1, zeta5_2, zeta6, zeta7, zeta8,
};
pub use golden::{check_goldens, goldens, Golden, GoldenResult};
pub use phi::{phi, phi1, phi2, phi_inverse, phi_witness, varphi};
pub use psi::{pi, psi, psi1, psi2, psi2_inverse, psi3, psi_inverse, psi_witness};
pub use rho::{rho, rho_inv};
pub use verify::{verify_map, verify_suite, Failure, FailureKind, NCounts, VerificationReport, WitnessCheck};

/// Names of the maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MapName {
    Rho,
    Phi1,
    Phi2,
    Phi,
    Psi1,
    Psi2,
    Psi3,
    Psi,
    Chi(u8),
    Eta1,
    Eta2,
    Kappa1,
    Kappa2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Direction {
    Forward,
    Inverse,
}

/// A map, its parameter `m` (used by the `Phi` family only) and a direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MapId {
    pub name: MapName,
    pub m: u32,
    pub direction: Direction,
}

impl MapId {
    pub fn forward(name: MapName) -> Self {
        MapId { name, m: 0, direction: Direction::Forward }
    }

    /// One of `Phi`, `Phi1`, `Phi2` with parameter `m ≥ 1`.
    pub fn with_m(name: MapName, m: u32) -> Self {
        MapId { name, m, direction: Direction::Forward }
    }

    pub fn chi(i: u8) -> Self {
        Self::forward(MapName::Chi(i))
    }

    pub fn inverse(self) -> Self {
        MapId { direction: Direction::Inverse, ..self }
    }

    /// Smallest weight at which the map is claimed to be defined.
    pub fn threshold(&self) -> u32 {
        match self.name {
            MapName::Chi(3) => 4,
            MapName::Chi(4) | MapName::Eta1 | MapName::Eta2 => 6,
            MapName::Chi(5) | MapName::Kappa1 | MapName::Kappa2 => 9,
            MapName::Chi(6) => 5,
            MapName::Chi(7) => 7,
            MapName::Chi(8) => 10,
            _ => 1,
        }
    }

    /// Whether the map is claimed to be onto its target.
    pub fn is_bijection(&self) -> bool {
        matches!(
            self.name,
            MapName::Rho | MapName::Phi1 | MapName::Psi1 | MapName::Psi2 | MapName::Chi(1) | MapName::Chi(2)
        )
    }

    /// Every map, with `Phi` for `m = 1..=phi_m_max`.
    pub fn all(phi_m_max: u32) -> Vec<MapId> {
        let mut ids = vec![MapId::forward(MapName::Rho)];
        for m in 1..=phi_m_max {
            ids.push(MapId::with_m(MapName::Phi1, m));
            ids.push(MapId::with_m(MapName::Phi2, m));
            ids.push(MapId::with_m(MapName::Phi, m));
        }
        for name in [MapName::Psi1, MapName::Psi2, MapName::Psi3, MapName::Psi] {
            ids.push(MapId::forward(name));
        }
        for i in 1..=8 {
            ids.push(MapId::chi(i));
        }
        for name in [MapName::Eta1, MapName::Eta2, MapName::Kappa1, MapName::Kappa2] {
            ids.push(MapId::forward(name));
        }
        ids
    }

    /// Applies the map in its direction.
    pub fn apply(&self, lambda: &Partition) -> Result<Partition> {
        let m = self.m;
        match (self.direction, self.name) {
            (Direction::Forward, MapName::Rho) => rho(lambda),
            (Direction::Inverse, MapName::Rho) => rho_inv(lambda),
            (Direction::Forward, MapName::Phi1) => phi1(lambda, m),
            (Direction::Inverse, MapName::Phi1) => Ok(lambda.clone()),
            (Direction::Forward, MapName::Phi2) => phi2(lambda, m),
            (Direction::Inverse, MapName::Phi2) => varphi(lambda, m),
            (Direction::Forward, MapName::Phi) => phi(lambda, m),
            (Direction::Inverse, MapName::Phi) => phi_inverse(lambda, m),
            (Direction::Forward, MapName::Psi1) => psi1(lambda),
            (Direction::Inverse, MapName::Psi1) => Ok(lambda.clone()),
            (Direction::Forward, MapName::Psi2) => psi2(lambda),
            (Direction::Inverse, MapName::Psi2) => psi2_inverse(lambda),
            (Direction::Forward, MapName::Psi3) => psi3(lambda),
            (Direction::Inverse, MapName::Psi3) => pi(lambda),
            (Direction::Forward, MapName::Psi) => psi(lambda),
            (Direction::Inverse, MapName::Psi) => psi_inverse(lambda),
            (Direction::Forward, MapName::Chi(i)) => match i {
                1 => chi1(lambda),
                2 => chi2(lambda),
                3 => chi3(lambda),
                4 => chi4(lambda),
                5 => chi5(lambda),
                6 => chi6(lambda),
                7 => chi7(lambda),
                8 => chi8(lambda),
                _ => Err(unknown(self)),
            },
            (Direction::Inverse, MapName::Chi(i)) => match i {
                1 => zeta1(lambda),
                2 => zeta2(lambda),
                3 => zeta3(lambda),
                4 => zeta4(lambda),
                5 => zeta5(lambda),
                6 => zeta6(lambda),
                7 => zeta7(lambda),
                8 => zeta8(lambda),
                _ => Err(unknown(self)),
            },
            (Direction::Forward, MapName::Eta1) => eta1(lambda),
            (Direction::Inverse, MapName::Eta1) => zeta4_1(lambda),
            (Direction::Forward, MapName::Eta2) => eta2(lambda),
            (Direction::Inverse, MapName::Eta2) => zeta4_2(lambda),
            (Direction::Forward, MapName::Kappa1) => kappa1(lambda),
            (Direction::Inverse, MapName::Kappa1) => zeta5_1(lambda),
            (Direction::Forward, MapName::Kappa2) => kappa2(lambda),
            (Direction::Inverse, MapName::Kappa2) => zeta5_2(lambda),
        }
    }
}

fn unknown(id: &MapId) -> Error {
    Error::Selector { map: id.to_string(), detail: "no such map".into() }
}

impl fmt::Display for MapName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapName::Rho => f.write_str("rho"),
            MapName::Phi1 => f.write_str("phi1"),
            MapName::Phi2 => f.write_str("phi2"),
            MapName::Phi => f.write_str("Phi"),
            MapName::Psi1 => f.write_str("psi1"),
            MapName::Psi2 => f.write_str("psi2"),
            MapName::Psi3 => f.write_str("psi3"),
            MapName::Psi => f.write_str("Psi"),
            MapName::Chi(i) => write!(f, "chi{i}"),
            MapName::Eta1 => f.write_str("eta1"),
            MapName::Eta2 => f.write_str("eta2"),
            MapName::Kappa1 => f.write_str("kappa1"),
            MapName::Kappa2 => f.write_str("kappa2"),
        }
    }
}

impl fmt::Display for MapId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)?;
        if matches!(self.name, MapName::Phi | MapName::Phi1 | MapName::Phi2) {
            write!(f, "[m={}]", self.m)?;
        }
        if self.direction == Direction::Inverse {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

/// Error for an input outside a map's domain.
pub(crate) fn outside(map: &str, input: &Partition, reason: &str) -> Error {
    Error::OutsideDomain { map: map.into(), input: input.to_string(), reason: reason.into() }
}

pub(crate) fn check_threshold(map: &str, lambda: &Partition, min: u64) -> Result<()> {
    let n = lambda.weight();
    if n < min {
        return Err(Error::BelowThreshold { map: map.into(), n, min });
    }
    Ok(())
}

/// Assembles the m-symbol `(α, β)_{(m+j)×j}` from part lists, rejecting
/// zeros, increases and oversize parts.
pub(crate) fn build(map: &str, m: u32, j: u32, alpha: Vec<u32>, beta: Vec<u32>) -> Result<Partition> {
    let wrap = |e: Error| Error::Selector { map: map.into(), detail: format!("ill-formed output: {e}") };
    let alpha = Partition::new(alpha).map_err(wrap)?;
    let beta = Partition::new(beta).map_err(wrap)?;
    Ok(DurfeeSymbol::new(m, j, alpha, beta).map_err(wrap)?.assemble())
}

/// Removes one occurrence of `value` from `parts[from..]`.
pub(crate) fn remove_one(map: &str, parts: &mut Vec<u32>, from: usize, value: u32) -> Result<()> {
    let pos = parts
        .iter()
        .skip(from)
        .position(|&p| p == value)
        .ok_or_else(|| Error::Selector { map: map.into(), detail: format!("no part equal to {value}") })?;
    parts.remove(from + pos);
    Ok(())
}
