//! Finite groups stored as canonical Cayley tables.
//!
//! Elements are indices `0..order`, with the identity always at index 0. A
//! [`FiniteGroup`] is immutable once built and every constructor validates the
//! group axioms before returning.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_integer::Integer;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::ratio::ExactRatio;

/// Size bounds shared by construction and enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order any constructor will produce.
    pub max_order: usize,
    /// Orders up to this bound get the exhaustive O(n^3) associativity scan;
    /// above it, Light's test over a generating set is used.
    pub assoc_check_bound: usize,
    /// Largest subgroup lattice [`crate::lattice::enumerate_subgroups`] will build.
    pub max_lattice: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 5000,
            assoc_check_bound: 512,
            max_lattice: 100_000,
        }
    }
}

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    labels: Option<Vec<String>>,
    canonical_hash: String,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

/// A quotient `G/N` with the projection sending each element of `G` to the
/// index of its coset.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    pub projection: Vec<usize>,
}

/// A subgroup re-materialized as a standalone group. `embedding[i]` is the
/// index in the ambient group of the subgroup's element `i`.
#[derive(Clone, Debug)]
pub struct Embedded {
    pub group: FiniteGroup,
    pub embedding: Vec<usize>,
}

impl Embedded {
    /// Maps a subset of the standalone group back into the ambient group.
    pub fn lift(&self, set: &ElementSet, ambient_order: usize) -> ElementSet {
        ElementSet::from_indices(ambient_order, set.iter().map(|i| self.embedding[i]))
    }

    /// Maps a subset of the ambient group, contained in the image, into the
    /// standalone group. Elements outside the image are dropped.
    pub fn restrict(&self, set: &ElementSet) -> ElementSet {
        ElementSet::from_indices(
            self.embedding.len(),
            self.embedding
                .iter()
                .enumerate()
                .filter(|(_, &g)| set.contains(g))
                .map(|(i, _)| i),
        )
    }
}

/// `compose(p, q)` applies `p` first, then `q`.
fn compose(p: &[u32], q: &[u32]) -> Vec<u32> {
    p.iter().map(|&x| q[x as usize]).collect()
}

fn cycle_notation(perm: &[u32]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] as usize == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if !first {
                out.push(' ');
            }
            first = false;
            let _ = write!(out, "{x}");
            x = perm[x] as usize;
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

impl FiniteGroup {
    pub fn trivial() -> Self {
        Self::assemble(1, vec![0], None)
    }

    pub fn from_generators(degree: usize, generators: &[Vec<usize>]) -> Result<Self> {
        Self::from_generators_with(degree, generators, &Limits::default())
    }

    /// Closes a set of permutations of `0..degree` under composition.
    ///
    /// The product `g_i * g_j` applies `g_i` first. Indices follow first
    /// discovery in a breadth-first closure that right-multiplies by the
    /// generators in the given order, starting from the identity.
    pub fn from_generators_with(
        degree: usize,
        generators: &[Vec<usize>],
        limits: &Limits,
    ) -> Result<Self> {
        let mut gens: Vec<Vec<u32>> = Vec::with_capacity(generators.len());
        for (g, perm) in generators.iter().enumerate() {
            let invalid = |reason: String| Error::InvalidPermutation {
                generator: g,
                degree,
                reason,
            };
            if perm.len() != degree {
                return Err(invalid(format!("has length {}", perm.len())));
            }
            let mut hit = vec![false; degree];
            for &x in perm {
                if x >= degree {
                    return Err(invalid(format!("image {x} out of range")));
                }
                if std::mem::replace(&mut hit[x], true) {
                    return Err(invalid(format!("image {x} repeated")));
                }
            }
            gens.push(perm.iter().map(|&x| x as u32).collect());
        }

        let identity: Vec<u32> = (0..degree as u32).collect();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<u32>, u32> = HashMap::from([(identity, 0)]);
        // right_mul[i * k + s] = index of elements[i] * gens[s]
        let k = gens.len();
        let mut right_mul: Vec<u32> = Vec::new();
        // parent[j] = (p, s) with elements[j] = elements[p] * gens[s]
        let mut parent: Vec<(u32, u32)> = vec![(0, 0)];

        let mut i = 0;
        while i < elements.len() {
            for (s, gen) in gens.iter().enumerate() {
                let product = compose(&elements[i], gen);
                let j = match index.get(&product) {
                    Some(&j) => j,
                    None => {
                        if elements.len() >= limits.max_order {
                            return Err(Error::ClosureTooLarge {
                                limit: limits.max_order,
                            });
                        }
                        let j = elements.len() as u32;
                        index.insert(product.clone(), j);
                        elements.push(product);
                        parent.push((i as u32, s as u32));
                        j
                    }
                };
                right_mul.push(j);
            }
            i += 1;
        }

        let n = elements.len();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            table[a * n] = a as u32;
        }
        for j in 1..n {
            let (p, s) = parent[j];
            for a in 0..n {
                let ap = table[a * n + p as usize] as usize;
                table[a * n + j] = right_mul[ap * k + s as usize];
            }
        }

        let gen_indices: Vec<usize> = gens.iter().map(|g| index[g] as usize).collect();
        validate_table(n, &table, limits, Some(&gen_indices))?;
        let labels = elements.iter().map(|p| cycle_notation(p)).collect();
        Ok(Self::assemble(n, table, Some(labels)))
    }

    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self> {
        Self::from_table_with(rows, &Limits::default())
    }

    /// Validates a Cayley table and relabels so the identity sits at index 0.
    pub fn from_table_with(rows: &[Vec<usize>], limits: &Limits) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NoIdentity);
        }
        if n > limits.max_order {
            return Err(Error::ClosureTooLarge {
                limit: limits.max_order,
            });
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare {
                    row: r,
                    len: row.len(),
                    expected: n,
                });
            }
        }
        let raw: Vec<u32> = rows.iter().flatten().map(|&x| x as u32).collect();
        check_latin(n, &raw)?;

        let e = (0..n)
            .find(|&e| (0..n).all(|j| raw[e * n + j] as usize == j && raw[j * n + e] as usize == j))
            .ok_or(Error::NoIdentity)?;

        let relabel = |x: usize| -> usize {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[relabel(a) * n + relabel(b)] = relabel(raw[a * n + b] as usize) as u32;
            }
        }
        validate_table(n, &table, limits, None)?;
        Ok(Self::assemble(n, table, None))
    }

    /// Builds from a table already known to satisfy the group axioms with the
    /// identity at 0. Used by internal constructors that re-run validation.
    fn assemble(order: usize, table: Vec<u32>, labels: Option<Vec<String>>) -> Self {
        let mut inverses = vec![0u32; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            inverses[a] = row.iter().position(|&x| x == 0).expect("validated table") as u32;
        }
        let mut hasher = Sha256::new();
        hasher.update(b"permdeg-cayley-v1");
        hasher.update((order as u64).to_le_bytes());
        for &x in &table {
            hasher.update(x.to_le_bytes());
        }
        let canonical_hash = hex::encode(hasher.finalize());
        FiniteGroup {
            order,
            table,
            inverses,
            labels,
            canonical_hash,
        }
    }

    fn from_checked_table(
        order: usize,
        table: Vec<u32>,
        labels: Option<Vec<String>>,
        limits: &Limits,
    ) -> Result<Self> {
        validate_table(order, &table, limits, None)?;
        Ok(Self::assemble(order, table, labels))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    pub fn canonical_hash(&self) -> &str {
        &self.canonical_hash
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order);
        self.labels = Some(labels);
        self
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(|r| r.iter().map(|&x| x as usize).collect())
            .collect()
    }

    pub fn whole(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    pub fn trivial_subgroup(&self) -> ElementSet {
        ElementSet::singleton(self.order, 0)
    }

    pub fn power(&self, g: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, g))
    }

    /// Smallest `k >= 1` with `g^k` the identity.
    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn cyclic_subgroup(&self, g: usize) -> ElementSet {
        let mut set = ElementSet::singleton(self.order, 0);
        let mut x = g;
        while x != 0 {
            set.insert(x);
            x = self.mul(x, g);
        }
        set
    }

    pub fn commutes(&self, x: usize, y: usize) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (x + 1..self.order).all(|y| self.commutes(x, y)))
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.order).any(|g| self.element_order(g) == self.order)
    }

    /// `g * x * g^-1`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn centralizer(&self, x: usize) -> ElementSet {
        ElementSet::from_indices(self.order, (0..self.order).filter(|&y| self.commutes(x, y)))
    }

    pub fn center(&self) -> ElementSet {
        ElementSet::from_indices(
            self.order,
            (0..self.order).filter(|&x| (0..self.order).all(|y| self.commutes(x, y))),
        )
    }

    /// d(G) as the normalized sum of centralizer orders.
    pub fn commutativity_degree(&self) -> ExactRatio {
        let sum: usize = (0..self.order)
            .into_par_iter()
            .map(|x| self.centralizer(x).count())
            .sum();
        ExactRatio::new(sum, self.order * self.order)
    }

    /// d(G) as the fraction of ordered commuting pairs.
    pub fn commutativity_degree_by_pairs(&self) -> ExactRatio {
        let mut pairs = 0usize;
        for x in 0..self.order {
            for y in 0..self.order {
                if self.mul(x, y) == self.mul(y, x) {
                    pairs += 1;
                }
            }
        }
        ExactRatio::new(pairs, self.order * self.order)
    }

    /// Checks the subgroup axioms: identity, closure under products and
    /// inverses.
    pub fn check_subgroup(&self, set: &ElementSet) -> Result<()> {
        if set.universe() != self.order {
            return Err(Error::NotASubgroup {
                detail: format!("set over {} elements, group has {}", set.universe(), self.order),
            });
        }
        if !set.contains(0) {
            return Err(Error::NotASubgroup {
                detail: "identity missing".into(),
            });
        }
        let members = set.to_vec();
        for &a in &members {
            if !set.contains(self.inv(a)) {
                return Err(Error::NotASubgroup {
                    detail: format!("inverse of {a} missing"),
                });
            }
            for &b in &members {
                if !set.contains(self.mul(a, b)) {
                    return Err(Error::NotASubgroup {
                        detail: format!("product {a}*{b} missing"),
                    });
                }
            }
        }
        if self.order % members.len() != 0 {
            return Err(Error::NotASubgroup {
                detail: format!("size {} does not divide {}", members.len(), self.order),
            });
        }
        Ok(())
    }

    pub fn is_subgroup(&self, set: &ElementSet) -> bool {
        self.check_subgroup(set).is_ok()
    }

    /// `{ g : g X g^-1 = X }`.
    pub fn normalizer(&self, set: &ElementSet) -> ElementSet {
        ElementSet::from_indices(
            self.order,
            (0..self.order).filter(|&g| set.iter().all(|x| set.contains(self.conjugate(g, x)))),
        )
    }

    fn normality_witness(&self, set: &ElementSet) -> Option<usize> {
        (0..self.order).find(|&g| set.iter().any(|x| !set.contains(self.conjugate(g, x))))
    }

    pub fn is_normal(&self, set: &ElementSet) -> Result<bool> {
        self.check_subgroup(set)?;
        Ok(self.normality_witness(set).is_none())
    }

    /// The group of left cosets `gN`, with the coset of the identity at 0 and
    /// the remaining cosets numbered by their smallest member.
    pub fn quotient_group(&self, normal: &ElementSet) -> Result<Quotient> {
        self.quotient_group_with(normal, &Limits::default())
    }

    pub fn quotient_group_with(&self, normal: &ElementSet, limits: &Limits) -> Result<Quotient> {
        self.check_subgroup(normal)?;
        if let Some(witness) = self.normality_witness(normal) {
            return Err(Error::NotNormal { witness });
        }
        let n = self.order;
        let mut projection = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if projection[g] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(g);
            for x in normal {
                projection[self.mul(g, x)] = c;
            }
        }
        let m = reps.len();
        let mut table = vec![0u32; m * m];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                table[i * m + j] = projection[self.mul(a, b)] as u32;
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| reps.iter().map(|&r| format!("{}N", l[r])).collect());
        let group = Self::from_checked_table(m, table, labels, limits)?;
        Ok(Quotient { group, projection })
    }

    pub fn direct_product(&self, other: &FiniteGroup) -> Result<FiniteGroup> {
        self.direct_product_with(other, &Limits::default())
    }

    /// Componentwise product; the pair `(a, b)` gets index `a * |H| + b`.
    pub fn direct_product_with(&self, other: &FiniteGroup, limits: &Limits) -> Result<FiniteGroup> {
        let (n, m) = (self.order, other.order);
        let order = n
            .checked_mul(m)
            .filter(|&o| o <= limits.max_order)
            .ok_or(Error::ClosureTooLarge {
                limit: limits.max_order,
            })?;
        let mut table = vec![0u32; order * order];
        for a1 in 0..n {
            for b1 in 0..m {
                let row = (a1 * m + b1) * order;
                for a2 in 0..n {
                    let a = self.mul(a1, a2) * m;
                    for b2 in 0..m {
                        table[row + a2 * m + b2] = (a + other.mul(b1, b2)) as u32;
                    }
                }
            }
        }
        let labels = (0..order)
            .map(|i| format!("({}, {})", self.label(i / m), other.label(i % m)))
            .collect();
        Self::from_checked_table(order, table, Some(labels), limits)
    }

    /// Re-materializes a subgroup as a standalone group, numbering its
    /// elements in increasing ambient index (the identity stays first).
    pub fn subgroup_as_group(&self, subgroup: &ElementSet) -> Result<Embedded> {
        self.check_subgroup(subgroup)?;
        let embedding = subgroup.to_vec();
        let mut local = vec![usize::MAX; self.order];
        for (i, &g) in embedding.iter().enumerate() {
            local[g] = i;
        }
        let m = embedding.len();
        let mut table = vec![0u32; m * m];
        for (i, &a) in embedding.iter().enumerate() {
            for (j, &b) in embedding.iter().enumerate() {
                table[i * m + j] = local[self.mul(a, b)] as u32;
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| embedding.iter().map(|&g| l[g].clone()).collect());
        let limits = Limits {
            max_order: usize::MAX,
            ..Limits::default()
        };
        let group = Self::from_checked_table(m, table, labels, &limits)?;
        Ok(Embedded { group, embedding })
    }

    /// Smallest prime dividing the order, or `None` for the trivial group.
    pub fn smallest_prime_divisor(&self) -> Option<usize> {
        (2..=self.order).find(|p| self.order % p == 0)
    }

    pub fn exponent(&self) -> usize {
        (0..self.order)
            .map(|g| self.element_order(g))
            .fold(1, |acc, k| acc.lcm(&k))
    }
}

fn check_latin(n: usize, table: &[u32]) -> Result<()> {
    for r in 0..n {
        let mut seen = vec![false; n];
        for c in 0..n {
            let x = table[r * n + c] as usize;
            if x >= n {
                return Err(Error::NotLatinSquare {
                    detail: format!("entry {x} at ({r}, {c}) is out of range"),
                });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotLatinSquare {
                    detail: format!("row {r} repeats {x}"),
                });
            }
        }
    }
    for c in 0..n {
        let mut seen = vec![false; n];
        for r in 0..n {
            let x = table[r * n + c] as usize;
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotLatinSquare {
                    detail: format!("column {c} repeats {x}"),
                });
            }
        }
    }
    Ok(())
}

/// Greedy generating set: add the first element outside the subgroup
/// generated so far.
fn greedy_generators(n: usize, table: &[u32]) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = ElementSet::singleton(n, 0);
    for g in 0..n {
        if span.contains(g) {
            continue;
        }
        gens.push(g);
        let mut queue: Vec<usize> = span.to_vec();
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for &s in &gens {
                let y = table[x * n + s] as usize;
                if span.insert(y) {
                    queue.push(y);
                }
            }
            i += 1;
        }
    }
    gens
}

/// Latin square, identity at 0, two-sided inverses, associativity.
fn validate_table(n: usize, table: &[u32], limits: &Limits, generators: Option<&[usize]>) -> Result<()> {
    check_latin(n, table)?;
    for j in 0..n {
        if table[j] as usize != j || table[j * n] as usize != j {
            return Err(Error::NoIdentity);
        }
    }
    for a in 0..n {
        let b = (0..n).find(|&b| table[a * n + b] == 0).ok_or(Error::NoInverse { element: a })?;
        if table[b * n + a] != 0 {
            return Err(Error::NoInverse { element: a });
        }
    }
    let at = |a: usize, b: usize| table[a * n + b] as usize;
    let first_failure = |middles: &[usize]| -> Option<(usize, usize, usize)> {
        middles.par_iter().find_map_first(|&b| {
            for a in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
            None
        })
    };
    let failure = if n <= limits.assoc_check_bound {
        let all: Vec<usize> = (0..n).collect();
        first_failure(&all)
    } else {
        // Light's test: associativity for all middles in a generating set
        // implies associativity.
        let gens = match generators {
            Some(g) => g.to_vec(),
            None => greedy_generators(n, table),
        };
        first_failure(&gens)
    };
    if let Some((a, b, c)) = failure {
        return Err(Error::NotAssociative { a, b, c });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        FiniteGroup::from_generators(3, &[vec![1, 2, 0], vec![1, 0, 2]]).unwrap()
    }

    fn d8() -> FiniteGroup {
        // rotation of the square and a reflection through a diagonal
        FiniteGroup::from_generators(4, &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]]).unwrap()
    }

    fn index_of(g: &FiniteGroup, label: &str) -> usize {
        (0..g.order()).find(|&i| g.label(i) == label).unwrap()
    }

    #[test]
    fn s3_from_generators() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert_eq!(g.label(0), "()");
        assert!(!g.is_abelian());
    }

    #[test]
    fn trivial_from_no_generators() {
        let g = FiniteGroup::from_generators(1, &[]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g, FiniteGroup::trivial());
    }

    #[test]
    fn rejects_non_bijection() {
        let err = FiniteGroup::from_generators(3, &[vec![0, 0, 1]]).unwrap_err();
        assert!(matches!(err, Error::InvalidPermutation { generator: 0, .. }));
        let err = FiniteGroup::from_generators(3, &[vec![0, 1]]).unwrap_err();
        assert!(matches!(err, Error::InvalidPermutation { .. }));
    }

    #[test]
    fn closure_bound() {
        let limits = Limits {
            max_order: 10,
            ..Limits::default()
        };
        let s4 = [vec![1, 2, 3, 0], vec![1, 0, 2, 3]];
        let err = FiniteGroup::from_generators_with(4, &s4, &limits).unwrap_err();
        assert!(matches!(err, Error::ClosureTooLarge { limit: 10 }));
    }

    #[test]
    fn table_constructor_cases() {
        assert_eq!(FiniteGroup::from_table(&[vec![0]]).unwrap().order(), 1);
        let c2 = FiniteGroup::from_table(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(c2.order(), 2);
        let err = FiniteGroup::from_table(&[vec![0, 1], vec![1, 1]]).unwrap_err();
        assert!(matches!(err, Error::NotLatinSquare { .. }), "{err}");
        let err = FiniteGroup::from_table(&[vec![0, 1], vec![1]]).unwrap_err();
        assert!(matches!(err, Error::NotSquare { row: 1, .. }));
    }

    #[test]
    fn table_constructor_moves_identity() {
        // C_2 with the identity labelled 1
        let g = FiniteGroup::from_table(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(g.rows(), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn latin_square_without_identity() {
        let t = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        // row 2 is the identity row but column 2 is too: this is C_3 with e=2
        assert_eq!(FiniteGroup::from_table(&t).unwrap().order(), 3);
        let t = vec![vec![1, 0, 2], vec![0, 2, 1], vec![2, 1, 0]];
        assert!(matches!(FiniteGroup::from_table(&t).unwrap_err(), Error::NoIdentity));
    }

    #[test]
    fn non_associative_loop_is_rejected() {
        // smallest non-associative loop, order 5
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_table(&t).unwrap_err();
        assert!(matches!(err, Error::NotAssociative { .. }), "{err}");
        // Light's test path finds it too
        let limits = Limits {
            assoc_check_bound: 0,
            ..Limits::default()
        };
        let err = FiniteGroup::from_table_with(&t, &limits).unwrap_err();
        assert!(matches!(err, Error::NotAssociative { .. }), "{err}");
    }

    #[test]
    fn element_orders() {
        let g = s3();
        assert_eq!(g.element_order(0), 1);
        assert_eq!(g.element_order(index_of(&g, "(0 1 2)")), 3);
        assert_eq!(g.element_order(index_of(&g, "(0 1)")), 2);
        for x in 0..g.order() {
            assert_eq!(g.order() % g.element_order(x), 0);
        }
    }

    #[test]
    fn cyclic_subgroups() {
        let g = s3();
        assert_eq!(g.cyclic_subgroup(0).count(), 1);
        let a3 = g.cyclic_subgroup(index_of(&g, "(0 1 2)"));
        assert_eq!(a3.count(), 3);
        assert!(g.is_normal(&a3).unwrap());
        let h = g.cyclic_subgroup(index_of(&g, "(0 1)"));
        assert!(!g.is_normal(&h).unwrap());
        let d = d8();
        let b = index_of(&d, "(0 1 2 3)");
        assert_eq!(d.cyclic_subgroup(b).count(), 4);
    }

    #[test]
    fn centralizers_and_centers() {
        let g = s3();
        let t = index_of(&g, "(0 1)");
        assert_eq!(g.centralizer(t), ElementSet::from_indices(6, [0, t]));
        assert_eq!(g.center().count(), 1);
        let d = d8();
        let b2 = index_of(&d, "(0 2)(1 3)");
        assert!(d.centralizer(b2).is_full());
        assert_eq!(d.center(), ElementSet::from_indices(8, [0, b2]));
        assert!(d.is_normal(&d.center()).unwrap());
    }

    #[test]
    fn commutativity_degrees() {
        let g = s3();
        assert_eq!(g.commutativity_degree(), ExactRatio::new(1, 2));
        assert_eq!(g.commutativity_degree_by_pairs(), ExactRatio::new(1, 2));
        let d = d8();
        assert_eq!(d.commutativity_degree(), ExactRatio::new(5, 8));
        assert_eq!(d.commutativity_degree_by_pairs(), ExactRatio::new(5, 8));
        let c = FiniteGroup::from_generators(5, &[vec![1, 2, 3, 4, 0]]).unwrap();
        assert!(c.commutativity_degree().is_one());
    }

    #[test]
    fn products() {
        let g = s3();
        let t = FiniteGroup::trivial();
        let p = g.direct_product(&t).unwrap();
        assert_eq!(p.rows(), g.rows());
        let c2 = FiniteGroup::from_generators(2, &[vec![1, 0]]).unwrap();
        let c3 = FiniteGroup::from_generators(3, &[vec![1, 2, 0]]).unwrap();
        let c6 = c2.direct_product(&c3).unwrap();
        assert!(c6.is_cyclic());
        let c5 = FiniteGroup::from_generators(5, &[vec![1, 2, 3, 4, 0]]).unwrap();
        assert_eq!(g.direct_product(&c5).unwrap().order(), 30);
        let tiny = Limits {
            max_order: 20,
            ..Limits::default()
        };
        assert!(matches!(
            g.direct_product_with(&c5, &tiny).unwrap_err(),
            Error::ClosureTooLarge { .. }
        ));
    }

    #[test]
    fn quotients() {
        let g = s3();
        let q = g.quotient_group(&g.trivial_subgroup()).unwrap();
        assert_eq!(q.group.rows(), g.rows());
        assert_eq!(g.quotient_group(&g.whole()).unwrap().group.order(), 1);
        let a3 = g.cyclic_subgroup(index_of(&g, "(0 1 2)"));
        let q = g.quotient_group(&a3).unwrap();
        assert_eq!(q.group.order(), 2);
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(q.projection[g.mul(a, b)], q.group.mul(q.projection[a], q.projection[b]));
            }
        }
        let h = g.cyclic_subgroup(index_of(&g, "(0 1)"));
        assert!(matches!(g.quotient_group(&h).unwrap_err(), Error::NotNormal { .. }));
        let junk = ElementSet::from_indices(6, [0, 1]);
        if !g.is_subgroup(&junk) {
            assert!(matches!(g.is_normal(&junk).unwrap_err(), Error::NotASubgroup { .. }));
        }
    }

    #[test]
    fn subgroup_extraction() {
        let d = d8();
        let b = index_of(&d, "(0 1 2 3)");
        let emb = d.subgroup_as_group(&d.cyclic_subgroup(b)).unwrap();
        assert_eq!(emb.group.order(), 4);
        assert!(emb.group.is_cyclic());
        let back = emb.lift(&emb.group.whole(), 8);
        assert_eq!(back, d.cyclic_subgroup(b));
    }
}
