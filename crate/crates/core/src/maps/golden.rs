//! Worked examples with known images, checked in both directions.

use serde::Serialize;

use crate::partition::{DurfeeSymbol, Partition};

use super::{MapId, MapName};

/// A map applied to a known input with a known output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Golden {
    pub map: MapId,
    pub input: Partition,
    pub output: Partition,
}

/// Outcome of checking one [`Golden`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoldenResult {
    pub map: String,
    pub n: u64,
    pub forward_ok: bool,
    pub inverse_ok: bool,
    pub detail: Option<String>,
}

impl GoldenResult {
    pub fn passed(&self) -> bool {
        self.forward_ok && self.inverse_ok
    }
}

fn sym(m: u32, j: u32, a: &[u32], b: &[u32]) -> Partition {
    DurfeeSymbol::from_parts(m, j, a.to_vec(), b.to_vec()).expect("golden symbols are well formed").assemble()
}

fn golden(map: MapId, m: u32, input: (u32, &[u32], &[u32]), output: (u32, &[u32], &[u32])) -> Golden {
    Golden { map, input: sym(m, input.0, input.1, input.2), output: sym(m, output.0, output.1, output.2) }
}

/// The eleven worked examples.
pub fn goldens() -> Vec<Golden> {
    use MapName::*;
    let f = MapId::forward;
    vec![
        golden(
            MapId::with_m(Phi, 2),
            2,
            (3, &[5, 5, 3, 2, 2, 1], &[3, 3, 3, 2, 2, 2, 1, 1, 1]),
            (4, &[5, 3, 2, 1, 1], &[3, 3, 2, 2, 2, 1, 1, 1]),
        ),
        golden(
            f(Psi2),
            0,
            (5, &[5, 4, 4, 3, 2, 2], &[5, 3, 2, 2, 2, 1, 1, 1, 1]),
            (6, &[4, 4, 3, 2, 2], &[3, 2, 2, 2, 1, 1, 1]),
        ),
        golden(
            f(Psi3),
            0,
            (7, &[7, 6, 5, 3, 1], &[7, 7, 6, 6, 4, 3, 3, 2]),
            (8, &[6, 5, 3, 2, 2, 1], &[7, 6, 6, 4, 2, 1]),
        ),
        golden(
            MapId::chi(3),
            0,
            (5, &[5, 4, 4, 2, 2], &[5, 5, 3, 3, 1]),
            (5, &[4, 4, 4, 2, 2], &[5, 5, 3, 3, 1, 1]),
        ),
        golden(
            f(Eta1),
            0,
            (6, &[6, 6, 5, 3, 3, 2, 2, 1, 1], &[6, 6, 6, 5, 4, 2, 1, 1, 1]),
            (6, &[5, 5, 5, 3, 3, 2, 2, 1, 1], &[6, 6, 6, 5, 4, 2, 2, 1, 1, 1]),
        ),
        golden(
            f(Eta2),
            0,
            (2, &[2, 2, 2, 2, 2, 1, 1], &[2, 1, 1, 1, 1, 1, 1]),
            (3, &[2, 2, 1, 1, 1], &[3, 1, 1, 1, 1, 1]),
        ),
        golden(
            f(Kappa1),
            0,
            (6, &[6, 6, 6, 6, 5, 4, 3, 3, 1], &[6, 6, 5, 5, 4, 4, 2, 1, 1]),
            (7, &[6, 5, 5, 4, 4, 2, 1, 1], &[7, 6, 5, 4, 4, 3, 3, 1]),
        ),
        golden(
            f(Kappa2),
            0,
            (2, &[2, 2, 2, 2, 2, 1, 1], &[2, 2, 2, 2, 1, 1, 1]),
            (3, &[2, 2, 1, 1, 1, 1], &[3, 2, 2, 1, 1, 1]),
        ),
        golden(
            MapId::chi(6),
            0,
            (6, &[4, 3, 3, 2, 2, 1, 1], &[5, 4, 4, 3, 3, 2, 1]),
            (5, &[4, 4, 3, 3, 2, 2, 1, 1], &[5, 5, 4, 4, 3, 3, 2, 2, 1]),
        ),
        golden(
            MapId::chi(7),
            0,
            (7, &[6, 5, 5, 4, 4, 2, 1], &[4, 4, 4, 3, 3, 2, 1]),
            (6, &[5, 5, 5, 5, 4, 4, 2, 1, 1], &[6, 4, 4, 4, 3, 3, 2, 1, 1, 1]),
        ),
        golden(
            MapId::chi(8),
            0,
            (5, &[4, 4, 4, 4, 3, 2, 2], &[4, 4, 3, 2, 2, 2, 1]),
            (5, &[4, 4, 3, 2, 2, 2, 1], &[5, 4, 4, 3, 3, 2, 2]),
        ),
    ]
}

/// Applies every golden forwards and backwards.
pub fn check_goldens() -> Vec<GoldenResult> {
    goldens()
        .into_iter()
        .map(|g| {
            let fwd = g.map.apply(&g.input);
            let inv = g.map.inverse().apply(&g.output);
            let forward_ok = fwd.as_ref() == Ok(&g.output);
            let inverse_ok = inv.as_ref() == Ok(&g.input);
            let detail = (!(forward_ok && inverse_ok)).then(|| {
                let show = |r: &crate::Result<Partition>| match r {
                    Ok(p) => p.to_string(),
                    Err(e) => e.to_string(),
                };
                format!("forward gave {}, inverse gave {}", show(&fwd), show(&inv))
            });
            GoldenResult { map: g.map.to_string(), n: g.input.weight(), forward_ok, inverse_ok, detail }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_match_and_all_pass() {
        let expected = [51, 63, 109, 59, 97, 24, 110, 27, 74, 97, 66];
        for (g, n) in goldens().iter().zip(expected) {
            assert_eq!(g.input.weight(), n, "{}", g.map);
            assert_eq!(g.output.weight(), n, "{}", g.map);
        }
        for r in check_goldens() {
            assert!(r.passed(), "{}: {:?}", r.map, r.detail);
        }
    }
}
