use proptest::prelude::*;
use unimodal_core::maps::{check_goldens, MapId};
use unimodal_core::Partition;

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=14, 1..22).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn defined_maps_preserve_weight_and_invert(p in partition()) {
        for id in MapId::all(4) {
            if let Ok(mu) = id.apply(&p) {
                prop_assert_eq!(mu.weight(), p.weight(), "{}", id);
                prop_assert_eq!(id.inverse().apply(&mu), Ok(p.clone()), "{}", id);
            }
        }
    }
}

#[test]
fn goldens_pass() {
    for r in check_goldens() {
        assert!(r.passed(), "{}: {:?}", r.map, r.detail);
    }
}
