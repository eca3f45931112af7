//! Property tests over randomly generated groups and values.

mod common;

use proptest::prelude::*;

use permdeg::families::Family;
use permdeg::lattice::enumerate_subgroups;
use permdeg::{parse_spec, ElementSet, ExactRatio, FiniteGroup, GroupAnalysis, GroupSpec, Limits};

fn permutation_generators() -> impl Strategy<Value = (usize, Vec<Vec<usize>>)> {
    (2usize..=5).prop_flat_map(|degree| {
        let perm = Just((0..degree).collect::<Vec<_>>()).prop_shuffle();
        prop::collection::vec(perm, 1..=2).prop_map(move |gens| (degree, gens))
    })
}

fn analyse(g: FiniteGroup) -> GroupAnalysis {
    GroupAnalysis::new("random", g, &Limits::default()).unwrap()
}

/// The same group with its elements renamed by `perm`.
fn relabel(g: &FiniteGroup, perm: &[usize]) -> FiniteGroup {
    let n = g.order();
    let mut rows = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            rows[perm[a]][perm[b]] = perm[g.mul(a, b)];
        }
    }
    FiniteGroup::from_table(&rows).unwrap()
}

fn small_named() -> impl Strategy<Value = GroupSpec> {
    prop_oneof![
        (1usize..=12).prop_map(|n| GroupSpec::named(Family::Cyclic, n)),
        (2usize..=8).prop_map(|n| GroupSpec::named(Family::Dihedral, 2 * n)),
        Just(GroupSpec::named(Family::Quaternion, 8)),
        (1usize..=4).prop_map(|n| GroupSpec::named(Family::Symmetric, n)),
        (1usize..=4).prop_map(|n| GroupSpec::named(Family::Alternating, n)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_permutation_groups_satisfy_invariants((degree, gens) in permutation_generators()) {
        let g = FiniteGroup::from_generators(degree, &gens).unwrap();
        let a = analyse(g);
        prop_assert!(common::invariant_violations(&a).is_empty(), "{:?}", common::invariant_violations(&a));
        prop_assert_eq!(&a.d, &common::commutativity_degree_by_classes(&a.group));
        if a.order() <= 24 {
            let oracle = common::subset_subgroups(&a.group);
            prop_assert_eq!(a.lattice.subgroups(), oracle.as_slice());
        }
        for sub in a.lattice.subgroups() {
            prop_assert!(a.group.is_subgroup(sub));
            prop_assert_eq!(a.order() % sub.count(), 0);
        }
    }

    #[test]
    fn degrees_survive_relabeling(
        (degree, gens) in permutation_generators(),
        keys in prop::collection::vec(any::<u32>(), 120),
    ) {
        let g = FiniteGroup::from_generators(degree, &gens).unwrap();
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.sort_by_key(|&i| (keys[i], i));
        let h = relabel(&g, &perm);
        let (a, b) = (analyse(g), analyse(h));
        prop_assert_eq!(a.lattice.len(), b.lattice.len());
        prop_assert_eq!(&a.d, &b.d);
        prop_assert_eq!(&a.sd, &b.sd);
        prop_assert_eq!(a.pd(), b.pd());
        prop_assert_eq!(a.profile.p_of_g.count(), b.profile.p_of_g.count());
        prop_assert_eq!(a.profile.quasicenter.count(), b.profile.quasicenter.count());
        prop_assert_eq!(a.profile.hyperquasicenter.count(), b.profile.hyperquasicenter.count());
    }

    #[test]
    fn direct_products(left in small_named(), right in small_named()) {
        let limits = Limits::default();
        let (g, h) = (left.build().unwrap(), right.build().unwrap());
        let product = g.direct_product_with(&h, &limits).unwrap();
        let (a, b, p) = (analyse(g), analyse(h), analyse(product));
        prop_assert_eq!(&p.d, &(&a.d * &b.d));
        prop_assert!(p.lattice.len() >= a.lattice.len() * b.lattice.len());
        if num_integer::gcd(a.order(), b.order()) == 1 {
            prop_assert_eq!(p.lattice.len(), a.lattice.len() * b.lattice.len());
            prop_assert_eq!(p.pd(), &(a.pd() * b.pd()));
            prop_assert_eq!(&p.sd, &(&a.sd * &b.sd));
        }
    }

    #[test]
    fn ratio_json_round_trip(num in -10_000i64..10_000, den in 1i64..10_000) {
        let r = ExactRatio::new(num, den);
        let json = serde_json::to_string(&r).unwrap();
        let back: ExactRatio = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, &r);
        prop_assert_eq!(r.to_string().parse::<ExactRatio>().unwrap(), r);
    }

    #[test]
    fn ratio_order_matches_cross_multiplication(a in -500i64..500, b in 1i64..500, c in -500i64..500, d in 1i64..500) {
        let (x, y) = (ExactRatio::new(a, b), ExactRatio::new(c, d));
        prop_assert_eq!(x.cmp(&y), (a * d).cmp(&(c * b)));
    }

    #[test]
    fn element_set_hex_round_trip(universe in 1usize..300, picks in prop::collection::vec(any::<usize>(), 0..40)) {
        let set = ElementSet::from_indices(universe, picks.into_iter().map(|i| i % universe));
        prop_assert_eq!(ElementSet::from_hex(universe, &set.to_hex()).unwrap(), set);
    }

    #[test]
    fn spec_display_parses_back(left in small_named(), right in small_named()) {
        let spec = GroupSpec { terms: [left.terms, right.terms].concat() };
        prop_assert_eq!(parse_spec(&spec.to_string()).unwrap(), spec.clone());
        prop_assert_eq!(parse_spec(&spec.to_string().to_lowercase()).unwrap(), spec);
    }
}

#[test]
fn enumeration_is_deterministic() {
    let g = permdeg::families::make_symmetric(4).unwrap();
    let first = enumerate_subgroups(&g).unwrap();
    for _ in 0..3 {
        assert_eq!(enumerate_subgroups(&g).unwrap().subgroups(), first.subgroups());
    }
}
