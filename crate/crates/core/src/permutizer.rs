//! Permutizers and the subgroups and degrees built from them.
//!
//! The permutizer `P_G(X)` of a subgroup `X` is generated by every `g` whose
//! cyclic subgroup permutes with `X`, i.e. `<g>X = X<g>` as sets.

use rayon::prelude::*;

use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Limits};
use crate::lattice::{cyclic_subgroups, enumerate_subgroups_with, generated_subgroup, permutes, SubgroupLattice};
use crate::ratio::ExactRatio;

/// Distinct cyclic subgroups, and for each element the one it generates.
#[derive(Clone, Debug)]
pub struct CyclicIndex {
    pub subgroups: Vec<ElementSet>,
    pub of_element: Vec<usize>,
}

impl CyclicIndex {
    pub fn new(group: &FiniteGroup) -> Self {
        let subgroups: Vec<ElementSet> = cyclic_subgroups(group).into_iter().map(|(c, _)| c).collect();
        let of_element = (0..group.order())
            .map(|g| {
                let c = group.cyclic_subgroup(g);
                subgroups.iter().position(|s| *s == c).expect("every cyclic subgroup is listed")
            })
            .collect();
        CyclicIndex {
            subgroups,
            of_element,
        }
    }

    /// Every element whose cyclic subgroup satisfies `keep`.
    fn elements_where(&self, order: usize, keep: impl Fn(&ElementSet) -> bool) -> ElementSet {
        let selected: Vec<bool> = self.subgroups.iter().map(keep).collect();
        ElementSet::from_indices(order, (0..order).filter(|&g| selected[self.of_element[g]]))
    }
}

/// `{ g in G : <g>X = X<g> }`.
pub fn permuting_elements(group: &FiniteGroup, cyclics: &CyclicIndex, x: &ElementSet) -> ElementSet {
    cyclics.elements_where(group.order(), |c| permutes(group, c, x))
}

pub fn permutizer(group: &FiniteGroup, lattice: &SubgroupLattice, x: &ElementSet) -> Result<ElementSet> {
    lattice.require(x)?;
    let cyclics = CyclicIndex::new(group);
    Ok(generated_subgroup(group, &permuting_elements(group, &cyclics, x)))
}

/// Permutizers of every lattice member, in lattice order.
pub fn all_permutizers(group: &FiniteGroup, lattice: &SubgroupLattice) -> Vec<ElementSet> {
    let cyclics = CyclicIndex::new(group);
    lattice
        .subgroups()
        .par_iter()
        .map(|x| generated_subgroup(group, &permuting_elements(group, &cyclics, x)))
        .collect()
}

fn intersect_all<'a>(order: usize, sets: impl IntoIterator<Item = &'a ElementSet>) -> ElementSet {
    sets.into_iter().fold(ElementSet::full(order), |mut acc, s| {
        acc.intersect_with(s);
        acc
    })
}

/// P(G): the intersection of all permutizers.
pub fn p_subgroup(group: &FiniteGroup, lattice: &SubgroupLattice) -> ElementSet {
    intersect_all(group.order(), &all_permutizers(group, lattice))
}

/// N(G): the intersection of all subgroup normalizers.
pub fn norm(group: &FiniteGroup, lattice: &SubgroupLattice) -> ElementSet {
    let normalizers: Vec<ElementSet> = lattice.subgroups().par_iter().map(|h| group.normalizer(h)).collect();
    intersect_all(group.order(), &normalizers)
}

/// Q(G): generated by the elements whose cyclic subgroup permutes with every
/// subgroup.
pub fn quasicenter(group: &FiniteGroup, lattice: &SubgroupLattice) -> ElementSet {
    let cyclics = CyclicIndex::new(group);
    let quasicentral = cyclics.elements_where(group.order(), |c| {
        lattice.subgroups().par_iter().all(|k| permutes(group, c, k))
    });
    generated_subgroup(group, &quasicentral)
}

/// The ascending chain `1 = Q_0 < Q_1 < ... < Q_k` with
/// `Q_{i+1}/Q_i = Q(G/Q_i)`, stopped at the first repeat. The last term is
/// the hyperquasicenter.
pub fn quasicenter_chain(
    group: &FiniteGroup,
    lattice: &SubgroupLattice,
    limits: &Limits,
) -> Result<Vec<ElementSet>> {
    let mut chain = vec![group.trivial_subgroup()];
    loop {
        let current = chain.last().expect("chain starts non-empty");
        let next = if current.count() == 1 {
            quasicenter(group, lattice)
        } else {
            let quotient = group.quotient_group_with(current, limits)?;
            let quotient_lattice = enumerate_subgroups_with(&quotient.group, limits)?;
            let upstairs = quasicenter(&quotient.group, &quotient_lattice);
            ElementSet::from_indices(
                group.order(),
                (0..group.order()).filter(|&g| upstairs.contains(quotient.projection[g])),
            )
        };
        if !group.is_normal(&next)? {
            return Err(Error::QuasicenterNotNormal { step: chain.len() });
        }
        if next == *current {
            return Ok(chain);
        }
        assert!(current.is_subset(&next), "quasicenter chain must ascend");
        chain.push(next);
        assert!(chain.len() <= group.order() + 1, "quasicenter chain failed to stabilize");
    }
}

/// Q_∞(G) together with its chain.
pub fn hyperquasicenter(
    group: &FiniteGroup,
    lattice: &SubgroupLattice,
    limits: &Limits,
) -> Result<(ElementSet, Vec<ElementSet>)> {
    let chain = quasicenter_chain(group, lattice, limits)?;
    Ok((chain.last().expect("non-empty").clone(), chain))
}

/// Every proper subgroup is properly contained in its permutizer.
pub fn satisfies_permutizer_condition_from(lattice: &SubgroupLattice, permutizers: &[ElementSet]) -> bool {
    (0..lattice.len())
        .filter(|&i| i != lattice.whole_index())
        .all(|i| permutizers[i] != *lattice.get(i))
}

pub fn satisfies_permutizer_condition(group: &FiniteGroup, lattice: &SubgroupLattice) -> bool {
    satisfies_permutizer_condition_from(lattice, &all_permutizers(group, lattice))
}

/// Every pair of subgroups permutes.
pub fn is_quasihamiltonian(group: &FiniteGroup, lattice: &SubgroupLattice) -> bool {
    let subs = lattice.subgroups();
    (0..subs.len())
        .into_par_iter()
        .all(|i| (i + 1..subs.len()).all(|j| permutes(group, &subs[i], &subs[j])))
}

/// pd(G) from precomputed permutizers, in lattice order.
pub fn permutability_degree_from(group: &FiniteGroup, lattice: &SubgroupLattice, permutizers: &[ElementSet]) -> ExactRatio {
    let sum: usize = permutizers.iter().map(|p| p.count()).sum();
    ExactRatio::new(sum, group.order() * lattice.len())
}

/// pd(G) = (sum over X of |P_G(X)|) / (|G| |L(G)|).
pub fn permutability_degree(group: &FiniteGroup, lattice: &SubgroupLattice) -> ExactRatio {
    permutability_degree_from(group, lattice, &all_permutizers(group, lattice))
}

/// The permutizer-order sum split over `L(P(G))` and its complement in `L(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdDecomposition {
    pub inside: ExactRatio,
    pub outside: ExactRatio,
    /// `|L(P(G))|`
    pub inside_count: usize,
}

impl PdDecomposition {
    pub fn total(&self) -> ExactRatio {
        &self.inside + &self.outside
    }
}

fn decomposition_from(lattice: &SubgroupLattice, permutizers: &[ElementSet], p_of_g: &ElementSet) -> PdDecomposition {
    let (mut inside, mut outside, mut inside_count) = (0usize, 0usize, 0usize);
    for (x, p) in lattice.subgroups().iter().zip(permutizers) {
        if x.is_subset(p_of_g) {
            inside += p.count();
            inside_count += 1;
        } else {
            outside += p.count();
        }
    }
    PdDecomposition {
        inside: ExactRatio::from_integer(inside),
        outside: ExactRatio::from_integer(outside),
        inside_count,
    }
}

pub fn pd_decomposition(group: &FiniteGroup, lattice: &SubgroupLattice) -> PdDecomposition {
    let permutizers = all_permutizers(group, lattice);
    let p_of_g = intersect_all(group.order(), &permutizers);
    decomposition_from(lattice, &permutizers, &p_of_g)
}

/// Everything permutizer-related about one group.
#[derive(Clone, Debug)]
pub struct PermutizerProfile {
    /// `permutizers[i]` is `P_G(L[i])`.
    pub permutizers: Vec<ElementSet>,
    pub p_of_g: ElementSet,
    pub center: ElementSet,
    pub norm: ElementSet,
    pub quasicenter: ElementSet,
    pub hyperquasicenter: ElementSet,
    pub quasicenter_chain: Vec<ElementSet>,
    pub satisfies_permutizer_condition: bool,
    pub is_quasihamiltonian: bool,
    pub pd: ExactRatio,
    pub decomposition: PdDecomposition,
    /// `P_G(P(G))`, kept to compare against `P(G)` itself.
    pub permutizer_of_p: ElementSet,
}

impl PermutizerProfile {
    pub fn compute(group: &FiniteGroup, lattice: &SubgroupLattice, limits: &Limits) -> Result<Self> {
        let permutizers = all_permutizers(group, lattice);
        let p_of_g = intersect_all(group.order(), &permutizers);
        let p_index = lattice.require(&p_of_g)?;
        let (hyperquasicenter, quasicenter_chain) = hyperquasicenter(group, lattice, limits)?;
        let quasicenter = quasicenter_chain
            .get(1)
            .cloned()
            .unwrap_or_else(|| group.trivial_subgroup());
        Ok(PermutizerProfile {
            pd: permutability_degree_from(group, lattice, &permutizers),
            decomposition: decomposition_from(lattice, &permutizers, &p_of_g),
            satisfies_permutizer_condition: satisfies_permutizer_condition_from(lattice, &permutizers),
            is_quasihamiltonian: is_quasihamiltonian(group, lattice),
            center: group.center(),
            norm: norm(group, lattice),
            permutizer_of_p: permutizers[p_index].clone(),
            quasicenter,
            hyperquasicenter,
            quasicenter_chain,
            p_of_g,
            permutizers,
        })
    }

    /// Whether `P_G(P(G)) = P(G)`.
    pub fn p_is_self_permutizing(&self) -> bool {
        self.permutizer_of_p == self.p_of_g
    }

    /// Whether `P_G(X) = G` for every `X ≤ P(G)`.
    pub fn p_sublattice_fully_permutized(&self, lattice: &SubgroupLattice) -> bool {
        lattice
            .subgroups()
            .iter()
            .zip(&self.permutizers)
            .filter(|(x, _)| x.is_subset(&self.p_of_g))
            .all(|(_, p)| p.is_full())
    }
}
