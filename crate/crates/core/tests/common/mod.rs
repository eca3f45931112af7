//! Independent, deliberately naive oracles shared by the integration tests.
//! Nothing here calls the enumeration or permutizer code under test.

#![allow(dead_code)]

use std::collections::BTreeSet;

use permdeg::{ElementSet, ExactRatio, FiniteGroup, SubgroupLattice};

/// Every subgroup by scanning subsets that contain the identity and whose
/// size divides `|G|`. Feasible up to order 24 or so.
pub fn subset_subgroups(g: &FiniteGroup) -> Vec<ElementSet> {
    let n = g.order();
    assert!(n <= 32, "subset oracle is limited to small groups");
    let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| g.mul(a, b)).collect()).collect();
    let e = g.identity();
    let others: Vec<usize> = (0..n).filter(|&x| x != e).collect();
    let mut found = Vec::new();
    for size in (1..=n).filter(|k| n % k == 0) {
        let k = size - 1;
        for combo in combinations(others.len(), k) {
            let mut members = vec![e];
            members.extend(combo.iter().map(|&i| others[i]));
            let mut mask = 0u64;
            for &m in &members {
                mask |= 1 << m;
            }
            let closed = members
                .iter()
                .all(|&a| members.iter().all(|&b| mask & (1 << table[a][b]) != 0));
            if closed {
                found.push(ElementSet::from_indices(n, members));
            }
        }
    }
    found.sort();
    found
}

/// All `k`-subsets of `0..n` as sorted index vectors, in lexicographic order.
pub fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = (k <= n).then(|| (0..k).collect());
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let c = current.as_mut().unwrap();
        let mut i = k;
        loop {
            if i == 0 {
                current = None;
                break;
            }
            i -= 1;
            if c[i] < n - k + i {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

/// Number of conjugacy classes, by orbit partitioning.
pub fn conjugacy_class_count(g: &FiniteGroup) -> usize {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut classes = 0;
    for x in 0..n {
        if seen[x] {
            continue;
        }
        classes += 1;
        for h in 0..n {
            let y = g.mul(g.mul(h, x), g.inv(h));
            seen[y] = true;
        }
    }
    classes
}

/// `k(G) / |G|`.
pub fn commutativity_degree_by_classes(g: &FiniteGroup) -> ExactRatio {
    ExactRatio::new(conjugacy_class_count(g) as i64, g.order() as i64)
}

pub fn naive_product(g: &FiniteGroup, h: &[usize], k: &[usize]) -> BTreeSet<usize> {
    h.iter().flat_map(|&a| k.iter().map(move |&b| g.mul(a, b))).collect()
}

pub fn naive_permutes(g: &FiniteGroup, h: &[usize], k: &[usize]) -> bool {
    naive_product(g, h, k) == naive_product(g, k, h)
}

/// Closure of a seed under multiplication, by repeated squaring of the set.
pub fn naive_closure(g: &FiniteGroup, seed: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut set = seed.clone();
    set.insert(g.identity());
    loop {
        let items: Vec<usize> = set.iter().copied().collect();
        let next = naive_product(g, &items, &items);
        if next == set {
            return set;
        }
        set = next;
    }
}

fn cyclic(g: &FiniteGroup, x: usize) -> Vec<usize> {
    let mut out = vec![g.identity()];
    let mut y = x;
    while y != g.identity() {
        out.push(y);
        y = g.mul(y, x);
    }
    out
}

/// `P_G(X)`: among the lattice members above `X`, the smallest one holding
/// every element `g` with `<g>X = X<g>`; cross-checked against the naive
/// closure of those elements.
pub fn brute_force_permutizer(g: &FiniteGroup, lattice: &SubgroupLattice, x: &ElementSet) -> ElementSet {
    let xs = x.to_vec();
    let permuting: BTreeSet<usize> = (0..g.order())
        .filter(|&y| naive_permutes(g, &cyclic(g, y), &xs))
        .collect();
    let holds_all = |y: &ElementSet| permuting.iter().all(|&p| y.contains(p));
    let best = lattice
        .subgroups()
        .iter()
        .filter(|y| x.is_subset(y) && holds_all(y))
        .min_by_key(|y| y.count())
        .expect("the whole group always qualifies")
        .clone();
    let closure = naive_closure(g, &permuting);
    assert_eq!(best.to_vec(), closure.into_iter().collect::<Vec<_>>());
    best
}

/// Permuting ordered pairs over `|L|^2`, with products built as plain sets.
pub fn naive_subgroup_commutativity_degree(g: &FiniteGroup, lattice: &SubgroupLattice) -> ExactRatio {
    let subs: Vec<Vec<usize>> = lattice.subgroups().iter().map(|s| s.to_vec()).collect();
    let mut count = 0i64;
    for h in &subs {
        for k in &subs {
            if naive_permutes(g, h, k) {
                count += 1;
            }
        }
    }
    let l = subs.len() as i64;
    ExactRatio::new(count, l * l)
}

pub fn brute_sigma(n: u64) -> u64 {
    (1..=n).filter(|d| n % d == 0).sum()
}

pub fn brute_tau(n: u64) -> u64 {
    (1..=n).filter(|d| n % d == 0).count() as u64
}

/// Smallest subgroup containing `xs`, found by scanning the lattice.
pub fn smallest_member_containing(lattice: &SubgroupLattice, xs: &ElementSet) -> ElementSet {
    lattice
        .subgroups()
        .iter()
        .filter(|s| xs.is_subset(s))
        .min_by_key(|s| s.count())
        .unwrap()
        .clone()
}

/// Whether `X` is a maximal subgroup: proper, and no lattice member lies
/// strictly between it and `G`.
pub fn is_maximal(lattice: &SubgroupLattice, x: &ElementSet) -> bool {
    !x.is_full()
        && lattice
            .subgroups()
            .iter()
            .all(|y| y == x || y.is_full() || !x.is_subset(y))
}

/// The range and containment invariants every analysed group must satisfy.
/// Returns a description of each violation.
pub fn invariant_violations(a: &permdeg::GroupAnalysis) -> Vec<String> {
    let mut out = Vec::new();
    let mut check = |ok: bool, what: &str| {
        if !ok {
            out.push(format!("{}: {what}", a.spec));
        }
    };
    let prof = &a.profile;
    let (zero, one) = (ExactRatio::zero(), ExactRatio::one());
    check(a.pd() > &zero && a.pd() <= &one, "0 < pd <= 1");
    check(a.sd > zero && a.sd <= one, "0 < sd <= 1");
    check(a.d > zero && a.d <= one, "0 < d <= 1");
    check(prof.center.is_subset(&prof.norm), "Z <= N");
    check(prof.norm.is_subset(&prof.p_of_g), "N <= P");
    check(prof.center.is_subset(&prof.quasicenter), "Z <= Q");
    check(prof.quasicenter.is_subset(&prof.p_of_g), "Q <= P");
    check(prof.quasicenter.is_subset(&prof.hyperquasicenter), "Q <= Q_inf");
    check(!prof.is_quasihamiltonian || a.pd().is_one(), "quasihamiltonian => pd = 1");
    check(!prof.is_quasihamiltonian || a.sd.is_one(), "quasihamiltonian => sd = 1");
    for (x, p) in a.lattice.subgroups().iter().zip(&prof.permutizers) {
        if !x.is_subset(p) || !a.group.normalizer(x).is_subset(p) {
            check(false, &format!("X and N_G(X) inside P_G(X) for X = {}", x.to_hex()));
        }
    }
    let all_maximal = a
        .lattice
        .subgroups()
        .iter()
        .filter(|x| x.count() > 1 && !x.is_full())
        .all(|x| is_maximal(&a.lattice, x));
    check(
        !(prof.satisfies_permutizer_condition && all_maximal) || a.pd().is_one(),
        "P-group with all proper nontrivial subgroups maximal => pd = 1",
    );
    out
}
