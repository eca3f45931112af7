//! The standard group corpus and deterministic parallel sweeps over it.

use rayon::prelude::*;

use crate::analysis::GroupAnalysis;
use crate::error::Result;
use crate::families::{Family, GroupSpec, Term};
use crate::group::{FiniteGroup, Limits};
use crate::lattice::{enumerate_subgroups_with, SubgroupLattice};
use crate::theorems::{check_group, check_p42, TheoremId, TheoremVerdict};

/// Largest order of a coprime product in the corpus.
pub const PRODUCT_ORDER_BOUND: usize = 200;

fn named(family: Family, param: usize) -> Term {
    Term::Named { family, param }
}

/// Nonabelian factors paired with cyclic groups of coprime order.
pub fn product_factors() -> Vec<(Family, usize)> {
    vec![
        (Family::Symmetric, 3),
        (Family::Dihedral, 8),
        (Family::Quaternion, 8),
        (Family::Dihedral, 10),
        (Family::Alternating, 4),
        (Family::Dihedral, 14),
        (Family::Quaternion, 16),
        (Family::Semidihedral, 16),
        (Family::Symmetric, 4),
    ]
}

/// `F x C_k` for every factor above and every `k >= 2` coprime to `|F|` with
/// `|F| k <= 200`.
pub fn coprime_products() -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for (family, param) in product_factors() {
        let n = family.order(param).expect("small factor");
        for k in 2..=PRODUCT_ORDER_BOUND / n {
            if num_integer::gcd(n, k) == 1 {
                out.push(GroupSpec {
                    terms: vec![named(family, param), named(Family::Cyclic, k)],
                });
            }
        }
    }
    out
}

/// `C_n` (n <= 32), `D_2n` (2 <= n <= 100), `Q_8, Q_16, Q_32`, `SD_16,
/// SD_32`, `S_n` and `A_n` (n <= 5), then the coprime products.
pub fn full_corpus() -> Vec<GroupSpec> {
    let mut out: Vec<GroupSpec> = (1..=32).map(|n| GroupSpec::named(Family::Cyclic, n)).collect();
    out.extend((2..=100).map(|n| GroupSpec::named(Family::Dihedral, 2 * n)));
    out.extend([8, 16, 32].map(|n| GroupSpec::named(Family::Quaternion, n)));
    out.extend([16, 32].map(|n| GroupSpec::named(Family::Semidihedral, n)));
    out.extend((1..=5).map(|n| GroupSpec::named(Family::Symmetric, n)));
    out.extend((1..=5).map(|n| GroupSpec::named(Family::Alternating, n)));
    out.extend(coprime_products());
    out
}

/// A quick subset: everything of order at most 24.
pub fn small_corpus(limits: &Limits) -> Vec<GroupSpec> {
    full_corpus()
        .into_iter()
        .filter(|s| group_order(s, limits).is_some_and(|n| n <= 24))
        .collect()
}

/// Order of a spec made of named terms, without building it.
pub fn group_order(spec: &GroupSpec, limits: &Limits) -> Option<usize> {
    spec.terms.iter().try_fold(1usize, |acc, t| match t {
        Term::Named { family, param } => family.order(*param).and_then(|n| acc.checked_mul(n)),
        Term::File(_) => t.build(limits).ok().and_then(|g| acc.checked_mul(g.order())),
    })
}

/// The groups asked about in the closing questions: generalized quaternion,
/// semidihedral, symmetric and alternating groups.
pub fn open_question_specs() -> Vec<GroupSpec> {
    vec![
        GroupSpec::named(Family::Quaternion, 16),
        GroupSpec::named(Family::Quaternion, 32),
        GroupSpec::named(Family::Semidihedral, 16),
        GroupSpec::named(Family::Symmetric, 4),
        GroupSpec::named(Family::Symmetric, 5),
        GroupSpec::named(Family::Alternating, 5),
    ]
}

/// Supplies the subgroup lattice of a group, e.g. from a cache.
pub trait LatticeSource: Sync {
    fn lattice(&self, spec: &str, group: &FiniteGroup, limits: &Limits) -> Result<SubgroupLattice>;
}

/// Always enumerates from scratch.
pub struct Enumerate;

impl LatticeSource for Enumerate {
    fn lattice(&self, _spec: &str, group: &FiniteGroup, limits: &Limits) -> Result<SubgroupLattice> {
        enumerate_subgroups_with(group, limits)
    }
}

pub fn analyse(spec: &GroupSpec, limits: &Limits, source: &dyn LatticeSource) -> Result<GroupAnalysis> {
    let name = spec.to_string();
    let group = spec.build_with(limits)?;
    let lattice = source.lattice(&name, &group, limits)?;
    GroupAnalysis::with_lattice(name, group, lattice, limits)
}

/// Analyses every spec in parallel; results come back in input order.
pub fn analyse_all(specs: &[GroupSpec], limits: &Limits, source: &dyn LatticeSource) -> Result<Vec<GroupAnalysis>> {
    specs.par_iter().map(|s| analyse(s, limits, source)).collect()
}

/// Runs the selected per-group checks on every spec, and the product check
/// on every two-term spec with coprime factors. Output order follows the
/// input order, then the theorem order of [`check_group`].
pub fn sweep(
    specs: &[GroupSpec],
    selected: &[TheoremId],
    limits: &Limits,
    source: &dyn LatticeSource,
) -> Result<Vec<TheoremVerdict>> {
    let per_spec: Vec<Vec<TheoremVerdict>> = specs
        .par_iter()
        .map(|spec| -> Result<Vec<TheoremVerdict>> {
            let g = analyse(spec, limits, source)?;
            let mut out = check_group(&g, selected, limits)?;
            if selected.contains(&TheoremId::P42) {
                if let Some(v) = product_check(spec, &g, limits, source)? {
                    out.push(v);
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(per_spec.concat())
}

fn product_check(
    spec: &GroupSpec,
    product: &GroupAnalysis,
    limits: &Limits,
    source: &dyn LatticeSource,
) -> Result<Option<TheoremVerdict>> {
    let [left, right] = spec.terms.as_slice() else {
        return Ok(None);
    };
    let left = GroupSpec {
        terms: vec![left.clone()],
    };
    let right = GroupSpec {
        terms: vec![right.clone()],
    };
    let (g, h) = (analyse(&left, limits, source)?, analyse(&right, limits, source)?);
    if num_integer::gcd(g.order(), h.order()) != 1 {
        return Ok(None);
    }
    check_p42(&g, &h, product).map(Some)
}
