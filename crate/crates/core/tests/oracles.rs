//! The fast paths against independent naive computations.

mod common;

use permdeg::corpus::{analyse_all, small_corpus, Enumerate};
use permdeg::families::{make_alternating, make_dihedral, make_quaternion};
use permdeg::lattice::{cyclic_subgroups, enumerate_subgroups, permuting_subgroups_count};
use permdeg::{ExactRatio, Limits};

#[test]
fn combinations_enumerate_every_subset_once() {
    assert_eq!(common::combinations(5, 2).count(), 10);
    assert_eq!(common::combinations(4, 0).count(), 1);
    assert_eq!(common::combinations(3, 3).collect::<Vec<_>>(), vec![vec![0, 1, 2]]);
    assert_eq!(common::combinations(2, 3).count(), 0);
}

#[test]
fn subset_oracle_on_known_groups() {
    assert_eq!(common::subset_subgroups(&make_quaternion(8).unwrap()).len(), 6);
    assert_eq!(common::subset_subgroups(&make_alternating(4).unwrap()).len(), 10);
    assert_eq!(common::subset_subgroups(&make_dihedral(16).unwrap()).len(), 19);
}

#[test]
fn class_oracle_on_known_groups() {
    assert_eq!(common::conjugacy_class_count(&make_alternating(5).unwrap()), 5);
    assert_eq!(common::conjugacy_class_count(&make_quaternion(8).unwrap()), 5);
    assert_eq!(common::conjugacy_class_count(&make_dihedral(10).unwrap()), 4);
}

#[test]
fn subgroup_commutativity_matches_naive_count() {
    let limits = Limits::default();
    for a in analyse_all(&small_corpus(&limits), &limits, &Enumerate).unwrap() {
        let naive = common::naive_subgroup_commutativity_degree(&a.group, &a.lattice);
        assert_eq!(a.sd, naive, "{}", a.spec);
    }
}

#[test]
fn permuting_counts_match_naive_rows() {
    let g = make_alternating(4).unwrap();
    let lattice = enumerate_subgroups(&g).unwrap();
    let subs: Vec<Vec<usize>> = lattice.subgroups().iter().map(|s| s.to_vec()).collect();
    for (i, h) in lattice.subgroups().iter().enumerate() {
        let naive = subs.iter().filter(|k| common::naive_permutes(&g, &subs[i], k)).count();
        assert_eq!(permuting_subgroups_count(&g, &lattice, h).unwrap(), naive);
    }
}

#[test]
fn cyclic_subgroups_match_naive_closure() {
    let g = make_dihedral(20).unwrap();
    for (c, gen) in cyclic_subgroups(&g) {
        let closure = common::naive_closure(&g, &[gen].into_iter().collect());
        assert_eq!(c.to_vec(), closure.into_iter().collect::<Vec<_>>());
    }
}

#[test]
fn class_oracle_matches_on_larger_groups() {
    for g in [make_alternating(5).unwrap(), make_dihedral(200).unwrap()] {
        assert_eq!(g.commutativity_degree(), common::commutativity_degree_by_classes(&g));
        assert_eq!(
            g.commutativity_degree(),
            ExactRatio::new(common::conjugacy_class_count(&g) as i64, g.order() as i64)
        );
    }
}
