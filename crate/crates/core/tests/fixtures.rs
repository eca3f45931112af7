//! Worked examples for S_3 and D_8, checked through the public API.

mod common;

use permdeg::lattice::{enumerate_subgroups, generated_subgroup, permutes, product_set};
use permdeg::permutizer::{permutizer, quasicenter};
use permdeg::{ElementSet, ExactRatio, FiniteGroup, GroupAnalysis, Limits};

fn s3() -> FiniteGroup {
    FiniteGroup::from_generators(3, &[vec![1, 2, 0], vec![1, 0, 2]]).unwrap()
}

/// `b` is the 4-cycle, `a` a reflection through a diagonal.
fn d8() -> FiniteGroup {
    FiniteGroup::from_generators(4, &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]]).unwrap()
}

fn find(g: &FiniteGroup, label: &str) -> usize {
    (0..g.order()).find(|&i| g.label(i) == label).unwrap()
}

fn set(g: &FiniteGroup, labels: &[&str]) -> ElementSet {
    ElementSet::from_indices(g.order(), labels.iter().map(|l| find(g, l)))
}

fn analyse(spec: &str, g: FiniteGroup) -> GroupAnalysis {
    GroupAnalysis::new(spec, g, &Limits::default()).unwrap()
}

#[test]
fn s3_elements_and_subgroups() {
    let g = s3();
    assert_eq!(g.order(), 6);
    assert_eq!(g.element_order(find(&g, "(0 1 2)")), 3);
    assert_eq!(g.element_order(find(&g, "(0 1)")), 2);
    let a3 = g.cyclic_subgroup(find(&g, "(0 1 2)"));
    assert_eq!(a3.count(), 3);
    assert!(g.is_normal(&a3).unwrap());
    assert!(g.center().count() == 1);
    let seed = set(&g, &["(0 1)", "(0 1 2)"]);
    assert!(generated_subgroup(&g, &seed).is_full());
    assert_eq!(enumerate_subgroups(&g).unwrap().len(), 6);
}

#[test]
fn s3_products_of_subgroups() {
    let g = s3();
    let a3 = g.cyclic_subgroup(find(&g, "(0 1 2)"));
    let h = g.cyclic_subgroup(find(&g, "(0 1)"));
    let k = g.cyclic_subgroup(find(&g, "(1 2)"));
    assert!(product_set(&g, &h, &a3).is_full());
    let hk = product_set(&g, &h, &k);
    assert_eq!(hk.count(), 4);
    assert!(!g.is_subgroup(&hk));
    assert_ne!(hk, product_set(&g, &k, &h));
    assert!(!permutes(&g, &h, &k));
}

#[test]
fn s3_permutizers_and_degrees() {
    let a = analyse("S:3", s3());
    let h = a.group.cyclic_subgroup(find(&a.group, "(0 1)"));
    assert!(permutizer(&a.group, &a.lattice, &h).unwrap().is_full());
    let total: usize = a.profile.permutizers.iter().map(|p| p.count()).sum();
    assert_eq!(total, 36);
    assert_eq!(a.profile.decomposition.inside, ExactRatio::from_integer(36));
    assert_eq!(a.profile.decomposition.outside, ExactRatio::zero());
    assert!(a.profile.p_of_g.is_full());
    assert_eq!(a.profile.quasicenter, a.group.cyclic_subgroup(find(&a.group, "(0 1 2)")));
    assert_eq!(a.profile.quasicenter_chain.len(), 3);
    assert!(a.profile.hyperquasicenter.is_full());
    assert!(a.profile.satisfies_permutizer_condition);
    assert!(!a.profile.is_quasihamiltonian);
    assert_eq!(a.d, ExactRatio::new(1, 2));
    assert_eq!(a.sd, ExactRatio::new(5, 6));
    assert!(a.pd().is_one());
}

#[test]
fn d8_structure() {
    let g = d8();
    assert_eq!(g.order(), 8);
    let b = find(&g, "(0 1 2 3)");
    let b2 = g.mul(b, b);
    assert_eq!(g.cyclic_subgroup(b).count(), 4);
    assert_eq!(g.center(), ElementSet::from_indices(8, [0, b2]));
    assert!(g.normalizer(&g.cyclic_subgroup(b2)).is_full());
    let a = find(&g, "(1 3)");
    let m1 = generated_subgroup(&g, &ElementSet::from_indices(8, [a, b2]));
    assert_eq!(m1, ElementSet::from_indices(8, [0, b2, a, g.mul(b2, a)]));
    assert_eq!(enumerate_subgroups(&g).unwrap().len(), 10);
}

#[test]
fn d8_reflection_permutes_with_eight_subgroups() {
    let g = d8();
    let lattice = enumerate_subgroups(&g).unwrap();
    let a = g.cyclic_subgroup(find(&g, "(1 3)"));
    let count = lattice.subgroups().iter().filter(|k| permutes(&g, &a, k)).count();
    assert_eq!(count, 8);
}

#[test]
fn d8_corrected_permutizer_values() {
    let a = analyse("D:8", d8());
    for (x, p) in a.lattice.subgroups().iter().zip(&a.profile.permutizers) {
        assert!(p.is_full(), "P_G({}) should be D_8", x.to_hex());
    }
    assert!(a.pd().is_one());
    assert!(a.profile.p_of_g.is_full());
    assert!(a.profile.satisfies_permutizer_condition);
    assert!(a.profile.hyperquasicenter.is_full());
    assert_eq!(a.d, ExactRatio::new(5, 8));
    assert_ne!(a.profile.p_of_g, a.profile.quasicenter);
}

/// Every reflection permutes with the rotation subgroup and with the
/// centre, so the quasicenter is the rotation subgroup rather than the
/// centre. The permutability counts come from the naive set oracle.
#[test]
fn d8_quasicenter_is_the_rotation_subgroup() {
    let g = d8();
    let lattice = enumerate_subgroups(&g).unwrap();
    let rotations = g.cyclic_subgroup(find(&g, "(0 1 2 3)"));
    assert_eq!(quasicenter(&g, &lattice), rotations);
    let quasicentral: Vec<usize> = (0..8)
        .filter(|&x| {
            let cx = g.cyclic_subgroup(x).to_vec();
            lattice.subgroups().iter().all(|k| common::naive_permutes(&g, &cx, &k.to_vec()))
        })
        .collect();
    assert_eq!(quasicentral, rotations.to_vec());
}

/// The value obtained by counting permuting ordered pairs; the naive oracle
/// builds every product as a plain set.
#[test]
fn d8_subgroup_commutativity_degree_by_count() {
    let a = analyse("D:8", d8());
    let oracle = common::naive_subgroup_commutativity_degree(&a.group, &a.lattice);
    assert_eq!(a.sd, oracle);
    assert_eq!(a.sd, ExactRatio::new(92, 100));
}

#[test]
fn dihedral_six_is_s3() {
    let a = analyse("D:6", permdeg::families::make_dihedral(6).unwrap());
    assert_eq!(a.lattice.len(), 6);
    assert_eq!(a.sd, ExactRatio::new(5, 6));
}

#[test]
fn t41_lower_instance_for_s3_and_a3() {
    let limits = Limits::default();
    let a = analyse("S:3", s3());
    let a3 = a.group.cyclic_subgroup(find(&a.group, "(0 1 2)"));
    let view = a.subgroup(&a3, &limits).unwrap();
    let v = permdeg::theorems::check_t41_lower(&a, &view).unwrap();
    assert_eq!(v.lhs, ExactRatio::new(1, 6));
    assert!(v.passed);
}
