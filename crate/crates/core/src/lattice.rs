//! Subgroup lattices, subgroup permutability and the subgroup commutativity
//! degree.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Limits};
use crate::ratio::ExactRatio;

/// All subgroups of a group, sorted by (cardinality, element list), plus the
/// inclusion order and its covering relation.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    group_order: usize,
    group_hash: String,
    subgroups: Vec<ElementSet>,
    index: HashMap<ElementSet, usize>,
    // above[i] holds every j (lattice index) with subgroups[i] ⊆ subgroups[j]
    above: Vec<ElementSet>,
    hasse: Vec<(usize, usize)>,
}

impl SubgroupLattice {
    /// Builds a lattice from an explicit subgroup list, checking every member
    /// against the subgroup axioms. Duplicates are merged.
    pub fn from_subgroups(group: &FiniteGroup, subgroups: Vec<ElementSet>) -> Result<Self> {
        for s in &subgroups {
            group.check_subgroup(s)?;
        }
        Ok(Self::from_verified(group, subgroups))
    }

    /// Like [`SubgroupLattice::from_subgroups`] but skips the axiom checks.
    /// For trusted caches only.
    pub fn from_subgroups_unchecked(group: &FiniteGroup, subgroups: Vec<ElementSet>) -> Self {
        Self::from_verified(group, subgroups)
    }

    fn from_verified(group: &FiniteGroup, mut subgroups: Vec<ElementSet>) -> Self {
        subgroups.sort();
        subgroups.dedup();
        let n = subgroups.len();
        let index = subgroups.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let above: Vec<ElementSet> = (0..n)
            .into_par_iter()
            .map(|i| {
                ElementSet::from_indices(
                    n,
                    (i..n).filter(|&j| subgroups[i].is_subset(&subgroups[j])),
                )
            })
            .collect();
        let hasse = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut covers = above[i].clone();
                covers.remove(i);
                for k in above[i].iter().filter(|&k| k != i) {
                    let mut strictly_above = above[k].clone();
                    strictly_above.remove(k);
                    covers.difference_with(&strictly_above);
                }
                covers.iter().map(|j| (i, j)).collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
            .concat();
        SubgroupLattice {
            group_order: group.order(),
            group_hash: group.canonical_hash().to_string(),
            subgroups,
            index,
            above,
            hasse,
        }
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn group_hash(&self) -> &str {
        &self.group_hash
    }

    pub fn subgroups(&self) -> &[ElementSet] {
        &self.subgroups
    }

    pub fn get(&self, i: usize) -> &ElementSet {
        &self.subgroups[i]
    }

    pub fn index_of(&self, subgroup: &ElementSet) -> Option<usize> {
        self.index.get(subgroup).copied()
    }

    pub fn require(&self, subgroup: &ElementSet) -> Result<usize> {
        self.index_of(subgroup).ok_or(Error::SubgroupNotInLattice)
    }

    pub fn contains(&self, subgroup: &ElementSet) -> bool {
        self.index.contains_key(subgroup)
    }

    /// Whether `subgroups[i] ⊆ subgroups[j]`.
    pub fn is_included(&self, i: usize, j: usize) -> bool {
        self.above[i].contains(j)
    }

    /// Covering pairs `(i, j)`: `subgroups[i]` is a maximal subgroup of
    /// `subgroups[j]`.
    pub fn hasse_edges(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    pub fn trivial_index(&self) -> usize {
        0
    }

    pub fn whole_index(&self) -> usize {
        self.subgroups.len() - 1
    }

    /// Indices of the members contained in `within`, i.e. the lattice of a
    /// subgroup viewed inside this one.
    pub fn members_within(&self, within: &ElementSet) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.subgroups[i].is_subset(within)).collect()
    }
}

/// BFS closure of `start` (already a subgroup, or `{e}`) under right
/// multiplication by `gens`.
fn close(group: &FiniteGroup, start: &ElementSet, gens: &[usize]) -> ElementSet {
    let mut set = start.clone();
    let mut queue: Vec<usize> = set.to_vec();
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for &s in gens {
            let y = group.mul(x, s);
            if set.insert(y) {
                queue.push(y);
            }
        }
        i += 1;
    }
    set
}

/// Smallest subgroup containing `seed`.
pub fn generated_subgroup(group: &FiniteGroup, seed: &ElementSet) -> ElementSet {
    let mut current = group.trivial_subgroup();
    let mut gens = Vec::new();
    for s in seed {
        if !current.contains(s) {
            gens.push(s);
            current = close(group, &current, &gens);
        }
    }
    current
}

/// Distinct cyclic subgroups with the smallest element generating each.
pub fn cyclic_subgroups(group: &FiniteGroup) -> Vec<(ElementSet, usize)> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in 0..group.order() {
        let c = group.cyclic_subgroup(g);
        if seen.insert(c.clone()) {
            out.push((c, g));
        }
    }
    out
}

pub fn enumerate_subgroups(group: &FiniteGroup) -> Result<SubgroupLattice> {
    enumerate_subgroups_with(group, &Limits::default())
}

/// Join saturation from the cyclic subgroups: each newly found subgroup is
/// joined with every cyclic subgroup it does not already contain, level by
/// level, until nothing new appears. Every subgroup is an iterated join of
/// cyclic subgroups, so this reaches all of them.
pub fn enumerate_subgroups_with(group: &FiniteGroup, limits: &Limits) -> Result<SubgroupLattice> {
    let cyclics = cyclic_subgroups(group);
    let mut found: HashSet<ElementSet> = HashSet::new();
    found.insert(group.trivial_subgroup());
    let mut frontier: Vec<(ElementSet, Vec<usize>)> = Vec::new();
    for (c, g) in &cyclics {
        if found.insert(c.clone()) {
            frontier.push((c.clone(), vec![*g]));
        }
    }
    let too_large = |n: usize| n > limits.max_lattice;
    if too_large(found.len()) {
        return Err(Error::LatticeTooLarge {
            limit: limits.max_lattice,
        });
    }

    while !frontier.is_empty() {
        let joins: Vec<(ElementSet, Vec<usize>)> = frontier
            .par_iter()
            .flat_map_iter(|(h, gens)| {
                cyclics.iter().filter(|(_, c)| !h.contains(*c)).map(move |(_, c)| {
                    let mut next_gens = gens.clone();
                    next_gens.push(*c);
                    (close(group, h, &next_gens), next_gens)
                })
            })
            .collect();
        let mut next = Vec::new();
        for (set, gens) in joins {
            if found.contains(&set) {
                continue;
            }
            found.insert(set.clone());
            if too_large(found.len()) {
                return Err(Error::LatticeTooLarge {
                    limit: limits.max_lattice,
                });
            }
            next.push((set, gens));
        }
        frontier = next;
    }

    Ok(SubgroupLattice::from_verified(group, found.into_iter().collect()))
}

/// `{ h * k : h in H, k in K }` as a plain subset.
pub fn product_set(group: &FiniteGroup, h: &ElementSet, k: &ElementSet) -> ElementSet {
    let mut out = ElementSet::empty(group.order());
    let ks = k.to_vec();
    for a in h {
        for &b in &ks {
            out.insert(group.mul(a, b));
        }
    }
    out
}

/// Whether `HK = KH`, comparing both materialized product sets.
pub fn permutes(group: &FiniteGroup, h: &ElementSet, k: &ElementSet) -> bool {
    let hk = product_set(group, h, k);
    let kh = product_set(group, k, h);
    let equal = hk == kh;
    if equal {
        let meet = h.intersection(k).count();
        assert_eq!(
            hk.count() * meet,
            h.count() * k.count(),
            "permuting product violates |HK| = |H||K|/|H∩K|"
        );
        debug_assert!(group.order() > 64 || group.is_subgroup(&hk));
    }
    equal
}

/// Row `i` holds the lattice indices `j` with `L[i] L[j] = L[j] L[i]`.
/// Only the upper triangle is evaluated; the relation is symmetric.
pub fn permutability_matrix(group: &FiniteGroup, lattice: &SubgroupLattice) -> Vec<ElementSet> {
    let n = lattice.len();
    let upper: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (i..n)
                .filter(|&j| permutes(group, lattice.get(i), lattice.get(j)))
                .collect()
        })
        .collect();
    let mut rows = vec![ElementSet::empty(n); n];
    for (i, js) in upper.iter().enumerate() {
        for &j in js {
            rows[i].insert(j);
            rows[j].insert(i);
        }
    }
    rows
}

/// `|{ K in L : HK = KH }|`.
pub fn permuting_subgroups_count(
    group: &FiniteGroup,
    lattice: &SubgroupLattice,
    h: &ElementSet,
) -> Result<usize> {
    lattice.require(h)?;
    Ok(lattice.subgroups().iter().filter(|k| permutes(group, h, k)).count())
}

/// sd(G) by counting ordered permuting pairs.
pub fn subgroup_commutativity_degree(group: &FiniteGroup, lattice: &SubgroupLattice) -> ExactRatio {
    let pairs: usize = permutability_matrix(group, lattice).iter().map(|r| r.count()).sum();
    let n = lattice.len();
    ExactRatio::new(pairs, n * n)
}

/// sd(G) as the normalized sum of `|C_L(H)|` over the lattice.
pub fn subgroup_commutativity_degree_by_sum(
    group: &FiniteGroup,
    lattice: &SubgroupLattice,
) -> ExactRatio {
    let sum: usize = lattice
        .subgroups()
        .par_iter()
        .map(|h| permuting_subgroups_count(group, lattice, h).expect("member of its own lattice"))
        .sum();
    let n = lattice.len();
    ExactRatio::new(sum, n * n)
}

/// Sum of the divisors of `n`.
pub fn sigma(n: u64) -> u64 {
    assert!(n >= 1);
    divisors(n).iter().sum()
}

/// Number of divisors of `n`.
pub fn tau(n: u64) -> u64 {
    assert!(n >= 1);
    divisors(n).len() as u64
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// `Some((p, m))` when `n = p^m` with `p` prime and `m >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n % d == 0)?;
    let mut rest = n;
    let mut m = 0;
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

/// `m + (p^(m+1) + p - 2) / (p - 1)`, the subgroup count of `D_{2p^m}`.
pub fn prime_power_dihedral_lattice_size(p: u64, m: u32) -> u128 {
    let p = p as u128;
    let num = p.pow(m + 1) + p - 2;
    debug_assert_eq!(num % (p - 1), 0);
    m as u128 + num / (p - 1)
}

/// `σ(n) + τ(n)`, the number of subgroups of the dihedral group of order `2n`.
/// For prime powers the closed form is checked as well.
pub fn dihedral_lattice_size(n: u64) -> u64 {
    let size = sigma(n) + tau(n);
    if let Some((p, m)) = prime_power(n) {
        assert_eq!(size as u128, prime_power_dihedral_lattice_size(p, m));
    }
    size
}
