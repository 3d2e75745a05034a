//! Exhaustive verification of the maps over a range of weights.
//!
//! For each `n` and each domain element the engine checks that the map is
//! defined, keeps the weight, lands in the claimed target block, is injective
//! and is undone by its inverse. For maps claimed to be onto, it also
//! compares the image size with the target size. Non-surjectivity witnesses
//! are checked to lie in the target and outside the image.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::partition::{partitions_of, Partition};
use crate::sets::{classify_blocks, in_a1, in_b1, in_u, u4_sub_block, u5_sub_block, SetSpec};

use super::{chi6_witness, phi_witness, psi_witness, Direction, MapId, MapName};

/// Failures kept per report; the rest are only counted.
const MAX_RECORDED_FAILURES: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FailureKind {
    IllDefined,
    WeightChanged,
    NotInTarget,
    Collision,
    RoundtripBroken,
    NotOnto,
    WitnessInvalid,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub n: u32,
    pub input: String,
    pub kind: FailureKind,
    pub detail: String,
}

/// Sizes at a single weight.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct NCounts {
    pub n: u32,
    pub domain: u64,
    pub image: u64,
    pub target: u64,
}

/// A non-surjectivity witness and whether it checked out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessCheck {
    pub n: u32,
    pub partition: String,
    pub valid: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub map: String,
    #[serde(skip)]
    pub id: MapId,
    pub bijection: bool,
    pub n_lo: u32,
    pub n_hi: u32,
    pub counts: Vec<NCounts>,
    pub failure_count: u64,
    pub failures: Vec<Failure>,
    pub witnesses: Vec<WitnessCheck>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    pub fn total_domain(&self) -> u64 {
        self.counts.iter().map(|c| c.domain).sum()
    }

    pub fn total_image(&self) -> u64 {
        self.counts.iter().map(|c| c.image).sum()
    }

    pub fn total_target(&self) -> u64 {
        self.counts.iter().map(|c| c.target).sum()
    }
}

/// Block tag of `lambda` in the domain of the forward map `id`.
fn domain_tag(id: &MapId, lambda: &Partition) -> Option<u8> {
    let v = |k: u32| SetSpec::v(k).ok().and_then(|s| classify_blocks(lambda, &s));
    let p = || classify_blocks(lambda, &SetSpec::p0());
    let only = |tag: Option<u8>, want: u8| tag.filter(|&t| t == want);
    match id.name {
        MapName::Rho => in_a1(lambda).then_some(0),
        _ if matches!(id.name, MapName::Phi | MapName::Phi1 | MapName::Phi2) && id.m == 0 => None,
        MapName::Phi1 => only(v(id.m + 1), 1),
        MapName::Phi2 => only(v(id.m + 1), 2),
        MapName::Phi => v(id.m + 1),
        MapName::Psi1 => only(v(1), 1),
        MapName::Psi2 => only(v(1), 2),
        MapName::Psi3 => only(v(1), 3),
        MapName::Psi => v(1),
        MapName::Chi(i) => p().filter(|b| chi_blocks(i).contains(b)),
        MapName::Eta1 => only(p(), 4),
        MapName::Eta2 => only(p(), 7),
        MapName::Kappa1 => only(p(), 5),
        MapName::Kappa2 => only(p(), 6),
    }
}

fn chi_blocks(i: u8) -> &'static [u8] {
    match i {
        1 => &[1],
        2 => &[2],
        3 => &[3],
        4 => &[4, 7],
        5 => &[5, 6],
        6 => &[8],
        7 => &[9],
        8 => &[10],
        _ => &[],
    }
}

fn domain_tags(id: &MapId) -> Vec<u8> {
    match id.name {
        MapName::Rho => vec![0],
        MapName::Phi => vec![1, 2],
        MapName::Phi1 | MapName::Psi1 => vec![1],
        MapName::Phi2 | MapName::Psi2 => vec![2],
        MapName::Psi3 => vec![3],
        MapName::Psi => vec![1, 2, 3],
        MapName::Chi(i) => chi_blocks(i).to_vec(),
        MapName::Eta1 => vec![4],
        MapName::Eta2 => vec![7],
        MapName::Kappa1 => vec![5],
        MapName::Kappa2 => vec![6],
    }
}

/// Whether `mu` lies in the target block assigned to domain tag `tag`.
fn in_target(id: &MapId, tag: u8, mu: &Partition) -> bool {
    let u0 = || classify_blocks(mu, &SetSpec::u(0));
    match id.name {
        MapName::Rho => in_b1(mu),
        MapName::Phi | MapName::Phi1 | MapName::Phi2 => classify_blocks(mu, &SetSpec::u(id.m)) == Some(tag),
        MapName::Psi | MapName::Psi1 | MapName::Psi2 | MapName::Psi3 => u0() == Some(tag),
        _ => match tag {
            1 | 2 | 10 => u0() == Some(5),
            3 | 8 | 9 => u0() == Some(4),
            4 => u4_sub_block(mu) == Some(1),
            7 => u4_sub_block(mu) == Some(2),
            5 => u5_sub_block(mu) == Some(1),
            6 => u5_sub_block(mu) == Some(2),
            _ => false,
        },
    }
}

/// The family a witness must belong to: all of `U(m)` for `Phi` and `Psi`,
/// `U_4(0)` for `chi6`.
fn in_codomain(id: &MapId, mu: &Partition) -> bool {
    match id.name {
        MapName::Phi => in_u(mu, id.m),
        MapName::Psi => in_u(mu, 0),
        _ => domain_tags(id).iter().any(|&t| in_target(id, t, mu)),
    }
}

fn witness(id: &MapId, n: u32) -> Option<Partition> {
    match id.name {
        MapName::Phi => phi_witness(id.m, n),
        MapName::Psi => psi_witness(n),
        MapName::Chi(6) => chi6_witness(n),
        _ => None,
    }
}

struct NResult {
    counts: NCounts,
    failures: Vec<Failure>,
    witness: Option<WitnessCheck>,
}

fn fail(failures: &mut Vec<Failure>, n: u32, input: &Partition, kind: FailureKind, detail: String) {
    failures.push(Failure { n, input: input.to_string(), kind, detail });
}

fn check_n(id: &MapId, n: u32, parts: &[Partition]) -> NResult {
    let mut failures = Vec::new();
    let mut counts = NCounts { n, ..NCounts::default() };
    let mut image: HashMap<Partition, &Partition> = HashMap::new();
    let inverse = id.inverse();
    for lambda in parts {
        let Some(tag) = domain_tag(id, lambda) else { continue };
        counts.domain += 1;
        let mu = match id.apply(lambda) {
            Ok(mu) => mu,
            Err(e) => {
                fail(&mut failures, n, lambda, FailureKind::IllDefined, e.to_string());
                continue;
            }
        };
        if mu.weight() != u64::from(n) {
            let detail = format!("output {mu} has weight {}", mu.weight());
            fail(&mut failures, n, lambda, FailureKind::WeightChanged, detail);
            continue;
        }
        if !in_target(id, tag, &mu) {
            let detail = format!("output {mu} is outside the target of block {tag}");
            fail(&mut failures, n, lambda, FailureKind::NotInTarget, detail);
        }
        match inverse.apply(&mu) {
            Ok(back) if &back == lambda => {}
            Ok(back) => {
                let detail = format!("inverse of {mu} gave {back}");
                fail(&mut failures, n, lambda, FailureKind::RoundtripBroken, detail);
            }
            Err(e) => {
                let detail = format!("inverse of {mu} failed: {e}");
                fail(&mut failures, n, lambda, FailureKind::RoundtripBroken, detail);
            }
        }
        if let Some(prev) = image.get(&mu) {
            let detail = format!("{prev} also maps to {mu}");
            fail(&mut failures, n, lambda, FailureKind::Collision, detail);
        } else {
            image.insert(mu, lambda);
        }
    }
    counts.image = image.len() as u64;
    let tags = domain_tags(id);
    counts.target = parts.iter().filter(|mu| tags.iter().any(|&t| in_target(id, t, mu))).count() as u64;
    if id.is_bijection() && counts.image != counts.target {
        let detail = format!("image has {} elements, target {}", counts.image, counts.target);
        failures.push(Failure { n, input: String::new(), kind: FailureKind::NotOnto, detail });
    }
    let witness = witness(id, n).map(|w| {
        let valid = u64::from(n) == w.weight() && in_codomain(id, &w) && !image.contains_key(&w);
        if !valid {
            let detail = "witness is not a target element outside the image".to_string();
            fail(&mut failures, n, &w, FailureKind::WitnessInvalid, detail);
        }
        WitnessCheck { n, partition: w.to_string(), valid }
    });
    NResult { counts, failures, witness }
}

/// Verifies `id` (taken in its forward direction) for `n_lo ≤ n ≤ n_hi`.
/// Weights below the map's threshold are skipped.
pub fn verify_map(id: MapId, n_lo: u32, n_hi: u32) -> VerificationReport {
    verify_suite(&[id], n_lo, n_hi).pop().expect("one report per map")
}

/// Verifies several maps, enumerating each weight's partitions once.
/// Reports come back in the order of `ids`.
pub fn verify_suite(ids: &[MapId], n_lo: u32, n_hi: u32) -> Vec<VerificationReport> {
    let ids: Vec<MapId> = ids.iter().map(|id| MapId { direction: Direction::Forward, ..*id }).collect();
    let per_n: Vec<Vec<Option<NResult>>> = (n_lo..=n_hi)
        .into_par_iter()
        .map(|n| {
            let parts: Vec<Partition> = partitions_of(n).collect();
            ids.par_iter().map(|id| (n >= id.threshold()).then(|| check_n(id, n, &parts))).collect()
        })
        .collect();
    ids.iter()
        .enumerate()
        .map(|(k, id)| {
            let mut report = VerificationReport {
                map: id.to_string(),
                id: *id,
                bijection: id.is_bijection(),
                n_lo: n_lo.max(id.threshold()),
                n_hi,
                counts: Vec::new(),
                failure_count: 0,
                failures: Vec::new(),
                witnesses: Vec::new(),
            };
            for r in per_n.iter().filter_map(|row| row[k].as_ref()) {
                report.counts.push(r.counts);
                report.failure_count += r.failures.len() as u64;
                let room = MAX_RECORDED_FAILURES.saturating_sub(report.failures.len());
                report.failures.extend(r.failures.iter().take(room).cloned());
                report.witnesses.extend(r.witness.clone());
            }
            report
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_map_passes_small_range() {
        for report in verify_suite(&MapId::all(3), 1, 24) {
            assert!(
                report.passed(),
                "{}: {:?}",
                report.map,
                &report.failures[..report.failures.len().min(5)]
            );
            assert!(report.total_domain() > 0 || report.map.starts_with("Phi"), "{}", report.map);
        }
    }

    #[test]
    fn bijections_match_target_sizes() {
        let r = verify_map(MapId::forward(MapName::Rho), 1, 20);
        assert!(r.counts.iter().all(|c| c.image == c.target));
    }
}
