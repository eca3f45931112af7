//! One-stop computation of every invariant of a group, shared by reports and
//! theorem checks.

use crate::elements::ElementSet;
use crate::error::Result;
use crate::group::{Embedded, FiniteGroup, Limits};
use crate::lattice::{enumerate_subgroups_with, subgroup_commutativity_degree, SubgroupLattice};
use crate::permutizer::{all_permutizers, permutability_degree_from, PermutizerProfile};
use crate::ratio::ExactRatio;

#[derive(Clone, Debug)]
pub struct GroupAnalysis {
    /// How the group was described, e.g. `D:8`.
    pub spec: String,
    pub group: FiniteGroup,
    pub lattice: SubgroupLattice,
    pub profile: PermutizerProfile,
    pub d: ExactRatio,
    pub sd: ExactRatio,
    /// `|L(P(G))|`, from the lattice of `P(G)` as a standalone group.
    pub p_lattice_size: usize,
}

impl GroupAnalysis {
    pub fn new(spec: impl Into<String>, group: FiniteGroup, limits: &Limits) -> Result<Self> {
        let lattice = enumerate_subgroups_with(&group, limits)?;
        Self::with_lattice(spec, group, lattice, limits)
    }

    pub fn with_lattice(
        spec: impl Into<String>,
        group: FiniteGroup,
        lattice: SubgroupLattice,
        limits: &Limits,
    ) -> Result<Self> {
        let profile = PermutizerProfile::compute(&group, &lattice, limits)?;
        let p_group = group.subgroup_as_group(&profile.p_of_g)?;
        let p_lattice_size = enumerate_subgroups_with(&p_group.group, limits)?.len();
        assert_eq!(
            p_lattice_size,
            lattice.members_within(&profile.p_of_g).len(),
            "lattice of P(G) disagrees with its image in L(G)"
        );
        Ok(GroupAnalysis {
            spec: spec.into(),
            d: group.commutativity_degree(),
            sd: subgroup_commutativity_degree(&group, &lattice),
            p_lattice_size,
            profile,
            lattice,
            group,
        })
    }

    pub fn pd(&self) -> &ExactRatio {
        &self.profile.pd
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Smallest prime dividing `|G|`; `None` for the trivial group.
    pub fn smallest_prime(&self) -> Option<usize> {
        self.group.smallest_prime_divisor()
    }

    /// Whether every proper subgroup is properly inside its permutizer.
    pub fn is_p_group(&self) -> bool {
        self.profile.satisfies_permutizer_condition
    }

    /// Materializes a lattice member as a standalone group with its own
    /// lattice and permutizers.
    pub fn subgroup(&self, h: &ElementSet, limits: &Limits) -> Result<SubgroupView> {
        self.lattice.require(h)?;
        SubgroupView::new(&self.group, h, limits)
    }
}

/// A subgroup `H` re-indexed as its own group, with `L(H)` and every
/// `P_H(X)` for `X` in `L(H)`.
#[derive(Clone, Debug)]
pub struct SubgroupView {
    pub set: ElementSet,
    pub embedded: Embedded,
    pub lattice: SubgroupLattice,
    pub permutizers: Vec<ElementSet>,
    pub pd: ExactRatio,
}

impl SubgroupView {
    pub fn new(ambient: &FiniteGroup, h: &ElementSet, limits: &Limits) -> Result<Self> {
        let embedded = ambient.subgroup_as_group(h)?;
        let lattice = enumerate_subgroups_with(&embedded.group, limits)?;
        let permutizers = all_permutizers(&embedded.group, &lattice);
        let pd = permutability_degree_from(&embedded.group, &lattice, &permutizers);
        Ok(SubgroupView {
            set: h.clone(),
            embedded,
            lattice,
            permutizers,
            pd,
        })
    }

    pub fn order(&self) -> usize {
        self.set.count()
    }
}
