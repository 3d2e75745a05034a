use num_bigint::BigInt;
use unimodal_core::partition::partitions_of;
use unimodal_core::qseries::u_table_from_bivariate;
use unimodal_core::sets::{
    classify_blocks, count_set, in_a1, in_b1, in_shifted_u, in_u, in_u_by_rank, in_v, SetSpec,
};

#[test]
fn symbol_and_rank_set_descriptions_agree() {
    for n in 1..=26 {
        for lambda in partitions_of(n) {
            for m in 0..=5 {
                assert_eq!(in_u(&lambda, m), in_u_by_rank(&lambda, m), "{lambda}, m = {m}");
            }
        }
    }
}

#[test]
fn set_sizes_match_u_table() {
    let n_max = 36;
    let u = u_table_from_bivariate(6, n_max);
    for n in 1..=n_max as u32 {
        let parts: Vec<_> = partitions_of(n).collect();
        for m in 0..=5u32 {
            let want = u.get(i64::from(m), n as usize).unwrap();
            let us = parts.iter().filter(|l| in_u(l, m)).count();
            let vs = parts.iter().filter(|l| in_v(l, m + 1)).count();
            assert_eq!(&BigInt::from(us), want, "U({m},{n})");
            assert_eq!(&BigInt::from(vs), u.get(i64::from(m) + 1, n as usize).unwrap(), "V({},{n})", m + 1);
            if m >= 1 && u64::from(n) >= u64::from(m * (m - 1) / 2) {
                let shifted = partitions_of(n - m * (m - 1) / 2).filter(|mu| in_shifted_u(mu, m)).count();
                assert_eq!(&BigInt::from(shifted), want, "shifted U({m},{n})");
            }
        }
        let a = parts.iter().filter(|l| in_a1(l)).count();
        let b = parts.iter().filter(|l| in_b1(l)).count();
        assert_eq!(a, b);
        assert_eq!(&BigInt::from(a), u.get(1, n as usize).unwrap());
    }
}

#[test]
fn blocks_split_each_family() {
    for n in 1..=30 {
        let parts: Vec<_> = partitions_of(n).collect();
        for spec in [SetSpec::u(0), SetSpec::v(1).unwrap(), SetSpec::v(3).unwrap(), SetSpec::p0()] {
            let members = parts.iter().filter(|l| spec.contains_family(l)).count() as u64;
            let by_block: u64 =
                (1..=spec.block_count()).map(|b| count_set(&spec.with_block(b).unwrap(), n)).sum();
            assert_eq!(members, by_block, "{spec} at n = {n}");
            for l in parts.iter().filter(|l| spec.contains_family(l)) {
                assert!(classify_blocks(l, &spec).is_some(), "{l} in {spec}");
            }
        }
    }
}
