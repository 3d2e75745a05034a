use proptest::prelude::*;
use unimodal_core::{DurfeeSymbol, Partition};

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=18, 0..16).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(p in partition()) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().weight(), p.weight());
        prop_assert_eq!(p.conjugate().rank(), -p.rank());
    }

    #[test]
    fn durfee_symbol_reassembles(p in partition(), m in 0u32..8) {
        let sym = p.durfee_symbol(m);
        prop_assert_eq!(sym.weight(), p.weight());
        prop_assert!(sym.alpha().largest() <= m + sym.j());
        prop_assert!(sym.beta().largest() <= sym.j());
        let rebuilt = DurfeeSymbol::new(m, sym.j(), sym.alpha().clone(), sym.beta().clone()).unwrap();
        prop_assert_eq!(rebuilt.assemble(), p);
    }

    #[test]
    fn rank_set_shape(p in partition()) {
        let l = p.len() as i64;
        prop_assert!(!p.rank_set_contains(l - 1));
        for v in l..l + 5 {
            prop_assert!(p.rank_set_contains(v));
        }
        let members = (-40..l).filter(|&v| p.rank_set_contains(v)).count();
        prop_assert_eq!(members, p.len());
    }

    #[test]
    fn crank_is_defined_off_the_empty_partition(p in partition()) {
        prop_assert_eq!(p.crank().is_ok(), !p.is_empty());
    }
}
