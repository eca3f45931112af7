//! Mechanical checks of the bounds and identities relating `pd`, `sd`, `d`
//! and the subgroup `P(G)`.
//!
//! Each check evaluates both sides from first principles and returns a
//! [`TheoremVerdict`]. A verdict whose hypotheses fail passes vacuously; the
//! conclusion is still evaluated and recorded in `conclusion_holds` so that
//! boundary cases stay visible.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::analysis::{GroupAnalysis, SubgroupView};
use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::families::{dihedral_by_index_with, Family};
use crate::group::Limits;
use crate::lattice::{is_prime, prime_power, prime_power_dihedral_lattice_size, sigma, tau};
use crate::ratio::ExactRatio;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "T4_1_lower")]
    T41Lower,
    #[serde(rename = "T4_1_upper")]
    T41Upper,
    #[serde(rename = "P4_2")]
    P42,
    #[serde(rename = "T4_3")]
    T43,
    #[serde(rename = "T5_1_lower")]
    T51Lower,
    #[serde(rename = "T5_1_upper")]
    T51Upper,
    #[serde(rename = "T5_2")]
    T52,
    #[serde(rename = "T5_3")]
    T53,
    #[serde(rename = "P6_1")]
    P61,
    #[serde(rename = "R2_3")]
    R23,
    #[serde(rename = "L_FORMULA")]
    LFormula,
    #[serde(rename = "ERRATA_D8")]
    ErrataD8,
}

impl TheoremId {
    pub const ALL: [TheoremId; 12] = [
        TheoremId::T41Lower,
        TheoremId::T41Upper,
        TheoremId::P42,
        TheoremId::T43,
        TheoremId::T51Lower,
        TheoremId::T51Upper,
        TheoremId::T52,
        TheoremId::T53,
        TheoremId::P61,
        TheoremId::R23,
        TheoremId::LFormula,
        TheoremId::ErrataD8,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::T41Lower => "T4_1_lower",
            TheoremId::T41Upper => "T4_1_upper",
            TheoremId::P42 => "P4_2",
            TheoremId::T43 => "T4_3",
            TheoremId::T51Lower => "T5_1_lower",
            TheoremId::T51Upper => "T5_1_upper",
            TheoremId::T52 => "T5_2",
            TheoremId::T53 => "T5_3",
            TheoremId::P61 => "P6_1",
            TheoremId::R23 => "R2_3",
            TheoremId::LFormula => "L_FORMULA",
            TheoremId::ErrataD8 => "ERRATA_D8",
        }
    }

    /// Checks that run once per corpus group (or pair of group and subgroup).
    pub fn is_per_group(self) -> bool {
        !matches!(self, TheoremId::P61 | TheoremId::LFormula | TheoremId::ErrataD8 | TheoremId::P42)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse {
                position: 0,
                message: format!("unknown theorem {s:?}"),
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = "==")]
    Eq,
}

impl Relation {
    pub fn holds(self, lhs: &ExactRatio, rhs: &ExactRatio) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Lt => lhs < rhs,
            Relation::Eq => lhs == rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Lt => "<",
            Relation::Eq => "==",
        }
    }
}

/// One theorem instance evaluated on one group.
///
/// `conclusion_holds` is `relation(lhs, rhs)` together with any side checks
/// listed in `witness`; `passed` is `!hypotheses_hold || conclusion_holds`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TheoremVerdict {
    pub theorem_id: TheoremId,
    pub group: String,
    pub hypotheses_hold: bool,
    pub lhs: ExactRatio,
    pub rhs: ExactRatio,
    pub relation: Relation,
    pub conclusion_holds: bool,
    pub passed: bool,
    pub witness: BTreeMap<String, String>,
}

impl TheoremVerdict {
    fn new(
        theorem_id: TheoremId,
        group: impl Into<String>,
        hypotheses_hold: bool,
        lhs: ExactRatio,
        relation: Relation,
        rhs: ExactRatio,
    ) -> Self {
        let conclusion_holds = relation.holds(&lhs, &rhs);
        TheoremVerdict {
            theorem_id,
            group: group.into(),
            hypotheses_hold,
            lhs,
            rhs,
            relation,
            conclusion_holds,
            passed: !hypotheses_hold || conclusion_holds,
            witness: BTreeMap::new(),
        }
    }

    fn note(mut self, key: &str, value: impl ToString) -> Self {
        self.witness.insert(key.to_string(), value.to_string());
        self
    }

    /// Folds an extra requirement into the conclusion.
    fn require(mut self, key: &str, ok: bool) -> Self {
        self.witness.insert(key.to_string(), ok.to_string());
        self.conclusion_holds &= ok;
        self.passed = !self.hypotheses_hold || self.conclusion_holds;
        self
    }

    pub fn is_vacuous(&self) -> bool {
        !self.hypotheses_hold
    }

    /// A non-vacuous failure, i.e. a counterexample.
    pub fn is_failure(&self) -> bool {
        !self.passed
    }
}

fn ratio(num: usize, den: usize) -> ExactRatio {
    ExactRatio::new(num, den)
}

fn int(n: usize) -> ExactRatio {
    ExactRatio::from_integer(n)
}

fn subgroup_name(g: &GroupAnalysis, h: &SubgroupView) -> String {
    format!("{} > H[{}]", g.spec, h.set.to_hex())
}

/// `|L(H)| pd(H) / (|L(G)| |G:H|) <= pd(G)`.
pub fn check_t41_lower(g: &GroupAnalysis, h: &SubgroupView) -> Result<TheoremVerdict> {
    g.lattice.require(&h.set)?;
    let index = g.order() / h.order();
    let lhs = ratio(h.lattice.len(), g.lattice.len() * index) * h.pd.clone();
    Ok(
        TheoremVerdict::new(TheoremId::T41Lower, subgroup_name(g, h), true, lhs, Relation::Le, g.pd().clone())
            .note("subgroup_order", h.order()),
    )
}

/// Under `|P_G(X) : P_H(X)| <= |G:H|`, `P(G) <= H` and
/// `|L(G) - L(P(G))| <= |L(P(G))|`: `|L(G)| pd(G) <= 2 |L(H)| pd(H)`.
///
/// `P_H(X)` only makes sense for `X <= H`, so the first hypothesis is tested
/// over `L(H)`; the witness records this scope.
pub fn check_t41_upper(g: &GroupAnalysis, h: &SubgroupView) -> Result<TheoremVerdict> {
    g.lattice.require(&h.set)?;
    let index = g.order() / h.order();
    let mut index_violation = None;
    for (x, p_h) in h.lattice.subgroups().iter().zip(&h.permutizers) {
        let x_in_g = h.embedded.lift(x, g.order());
        let p_g = &g.profile.permutizers[g.lattice.require(&x_in_g)?];
        if p_g.count() > index * p_h.count() {
            index_violation = Some(x_in_g);
            break;
        }
    }
    let p_inside = g.profile.p_of_g.is_subset(&h.set);
    let outside = g.lattice.len() - g.p_lattice_size;
    let small_complement = outside <= g.p_lattice_size;
    let hypotheses = index_violation.is_none() && p_inside && small_complement;

    let lhs = int(g.lattice.len()) * g.pd().clone();
    let rhs = int(2 * h.lattice.len()) * h.pd.clone();
    let mut v = TheoremVerdict::new(TheoremId::T41Upper, subgroup_name(g, h), hypotheses, lhs, Relation::Le, rhs)
        .note("hypothesis_scope", "X in L(H)")
        .note("index_bound_holds", index_violation.is_none())
        .note("p_of_g_in_h", p_inside)
        .note("complement_not_larger", small_complement);
    if let Some(x) = index_violation {
        v = v.note("index_bound_violated_at", x.to_hex());
    }
    Ok(v)
}

/// `pd(G x H) = pd(G) pd(H)` for coprime orders.
pub fn check_p42(g: &GroupAnalysis, h: &GroupAnalysis, product: &GroupAnalysis) -> Result<TheoremVerdict> {
    let (m, n) = (g.order(), h.order());
    if num_integer::gcd(m, n) != 1 {
        return Err(Error::NotCoprime { left: m, right: n });
    }
    assert_eq!(product.order(), m * n, "product analysis does not match its factors");
    let rhs = g.pd().clone() * h.pd().clone();
    Ok(
        TheoremVerdict::new(TheoremId::P42, product.spec.clone(), true, product.pd().clone(), Relation::Eq, rhs)
            .note("left", &g.spec)
            .note("right", &h.spec),
    )
}

/// `m + (p^(m+1) + p - 2) / (p - 1)` as an exact value.
fn prime_power_lattice_form(p: u64, m: u32) -> BigInt {
    let p = BigInt::from(p);
    let top: BigInt = num_traits::pow(p.clone(), m as usize + 1) + &p - 2;
    BigInt::from(m) + top / (p - 1)
}

/// The `m >= 0` (if any) with `|L(G)| = m + (p^(m+1) + p - 2) / (p - 1)`.
/// The right side grows strictly with `m`, so the search stops once it passes
/// `|L(G)|`.
pub fn solve_lattice_exponent(p: u64, lattice_size: usize) -> Option<u32> {
    let target = BigInt::from(lattice_size);
    (0u32..)
        .map(|m| (m, prime_power_lattice_form(p, m)))
        .take_while(|(_, v)| *v <= target)
        .find(|(_, v)| *v == target)
        .map(|(m, _)| m)
}

/// `(p^(m+1) + 2p^2 + (m-3)p - m) / (p^(m+2) + (m+1)p^2 - (m+2)p)`.
pub fn t43_bound(p: u64, m: u32) -> ExactRatio {
    let (p, mb) = (BigInt::from(p), BigInt::from(m));
    let pow = |k: u32| num_traits::pow(p.clone(), k as usize);
    let num = pow(m + 1) + BigInt::from(2) * &p * &p + (&mb - 3) * &p - &mb;
    let den = pow(m + 2) + (&mb + 1) * &p * &p - (&mb + 2) * &p;
    ExactRatio::new(num, den)
}

fn not_applicable(id: TheoremId, g: &GroupAnalysis, reason: &str) -> TheoremVerdict {
    TheoremVerdict::new(id, g.spec.clone(), false, g.pd().clone(), Relation::Le, g.pd().clone()).note("not_applicable", reason)
}

/// Bound on `pd(G)` when every permutizer is proper, `|P(G)| = p` and
/// `|L(G)|` has the prime-power dihedral form.
pub fn check_t43(g: &GroupAnalysis) -> TheoremVerdict {
    if g.group.is_cyclic() {
        return not_applicable(TheoremId::T43, g, "cyclic group");
    }
    let p = g.smallest_prime().expect("noncyclic groups are nontrivial") as u64;
    let all_proper = g.profile.permutizers.iter().all(|x| !x.is_full());
    let p_has_order_p = g.profile.p_of_g.count() as u64 == p;
    let m = solve_lattice_exponent(p, g.lattice.len());
    let hypotheses = all_proper && p_has_order_p && m.is_some();
    let rhs = m.map(|m| t43_bound(p, m)).unwrap_or_else(ExactRatio::one);
    let mut v = TheoremVerdict::new(TheoremId::T43, g.spec.clone(), hypotheses, g.pd().clone(), Relation::Le, rhs)
        .note("p", p)
        .note("all_permutizers_proper", all_proper)
        .note("p_of_g_has_order_p", p_has_order_p);
    v = match m {
        Some(m) => v.note("m", m),
        None => v.note("m", "none"),
    };
    if let Some(i) = g.profile.permutizers.iter().position(|x| x.is_full()) {
        v = v.note("full_permutizer_at", g.lattice.get(i).to_hex());
    }
    v
}

/// `(1 - p/|G|) |L(P(G))| / |L(G)| + p/|G| <= pd(G)`, stated for
/// `pd(G) != 1`; evaluated regardless, with `pd(G) = 1` marked as a boundary.
pub fn check_t51_lower(g: &GroupAnalysis) -> TheoremVerdict {
    let Some(p) = g.smallest_prime() else {
        return not_applicable(TheoremId::T51Lower, g, "trivial group");
    };
    let n = g.order();
    let lhs = (ExactRatio::one() - ratio(p, n)) * ratio(g.p_lattice_size, g.lattice.len()) + ratio(p, n);
    let pd_is_one = g.pd().is_one();
    let v = TheoremVerdict::new(TheoremId::T51Lower, g.spec.clone(), !pd_is_one, lhs, Relation::Le, g.pd().clone())
        .note("p", p);
    if pd_is_one {
        v.note("boundary", "pd = 1")
    } else {
        v
    }
}

/// If every `P_G(X)` with `X` outside `L(P(G))` is proper:
/// `pd(G) <= 1/p + (p-1) |L(P(G))| / (p |L(G)|)`.
pub fn check_t51_upper(g: &GroupAnalysis) -> TheoremVerdict {
    let Some(p) = g.smallest_prime() else {
        return not_applicable(TheoremId::T51Upper, g, "trivial group");
    };
    let p_of_g = &g.profile.p_of_g;
    let offender = g
        .lattice
        .subgroups()
        .iter()
        .zip(&g.profile.permutizers)
        .find(|(x, perm)| !x.is_subset(p_of_g) && perm.is_full())
        .map(|(x, _)| x.to_hex());
    let pd_is_one = g.pd().is_one();
    let hypotheses = !pd_is_one && offender.is_none();
    let rhs = ratio(1, p) + ratio((p - 1) * g.p_lattice_size, p * g.lattice.len());
    let mut v = TheoremVerdict::new(TheoremId::T51Upper, g.spec.clone(), hypotheses, g.pd().clone(), Relation::Le, rhs)
        .note("p", p)
        .note("pd_is_one", pd_is_one);
    if let Some(x) = offender {
        v = v.note("full_permutizer_outside_p_at", x);
    }
    v
}

fn p_is_nontrivial_proper(g: &GroupAnalysis) -> bool {
    let n = g.profile.p_of_g.count();
    n > 1 && n < g.order()
}

/// Largest element order inside a subgroup; equals its order iff it is cyclic.
fn max_element_order(g: &GroupAnalysis, set: &ElementSet) -> usize {
    set.iter().map(|x| g.group.element_order(x)).max().unwrap_or(1)
}

/// If `P(G)` is nontrivial proper and `pd(G) = 1/2 + |L(P(G))| / (2|L(G)|)`,
/// `P(G)` is noncyclic: its largest element order is below `|P(G)|`.
pub fn check_t52(g: &GroupAnalysis) -> TheoremVerdict {
    let target = ratio(1, 2) + ratio(g.p_lattice_size, 2 * g.lattice.len());
    let proper = p_is_nontrivial_proper(g);
    let equation = *g.pd() == target;
    let p_of_g = &g.profile.p_of_g;
    TheoremVerdict::new(
        TheoremId::T52,
        g.spec.clone(),
        proper && equation,
        int(max_element_order(g, p_of_g)),
        Relation::Lt,
        int(p_of_g.count()),
    )
    .note("p_of_g_nontrivial_proper", proper)
    .note("pd_equation_holds", equation)
    .note("pd_target", target)
}

/// `(4|G| - 5p) / (5|G| - 5p) <= 2 / |L(G)|`; needs `|G| > p`.
pub fn t53_side_condition(order: usize, p: usize, lattice_size: usize) -> bool {
    assert!(order > p, "side condition is undefined for |G| = p");
    let (n, p) = (order as i128, p as i128);
    ExactRatio::new(4 * n - 5 * p, 5 * n - 5 * p) <= ratio(2, lattice_size)
}

/// If `P(G)` is nontrivial proper, `pd(G) = 4/5` and
/// `(4|G| - 5p) / (5|G| - 5p) <= 2 / |L(G)|`, then `P(G)` has prime order,
/// i.e. `|L(P(G))| = 2`.
pub fn check_t53(g: &GroupAnalysis) -> TheoremVerdict {
    let proper = p_is_nontrivial_proper(g);
    let pd_is_four_fifths = *g.pd() == ratio(4, 5);
    let side = match g.smallest_prime() {
        Some(p) if g.order() > p => t53_side_condition(g.order(), p, g.lattice.len()),
        _ => false,
    };
    TheoremVerdict::new(
        TheoremId::T53,
        g.spec.clone(),
        proper && pd_is_four_fifths && side,
        int(g.p_lattice_size),
        Relation::Eq,
        int(2),
    )
    .note("p_of_g_nontrivial_proper", proper)
    .note("pd_is_four_fifths", pd_is_four_fifths)
    .note("side_condition_holds", side)
}

/// A P-group in which every proper nontrivial subgroup is maximal has
/// `pd(G) = 1`.
///
/// Read literally, "every proper subgroup is maximal" also asks the trivial
/// subgroup to be maximal, which only groups of prime order satisfy; the
/// trivial subgroup is excluded here because its permutizer is always `G`.
pub fn check_r23(g: &GroupAnalysis) -> TheoremVerdict {
    let whole = g.lattice.whole_index();
    let trivial = g.lattice.trivial_index();
    let all_maximal = (0..g.lattice.len())
        .filter(|&i| i != whole && i != trivial)
        .all(|i| g.lattice.hasse_edges().contains(&(i, whole)));
    let literal = g.lattice.len() <= 2;
    TheoremVerdict::new(
        TheoremId::R23,
        g.spec.clone(),
        g.is_p_group() && all_maximal,
        g.pd().clone(),
        Relation::Eq,
        ExactRatio::one(),
    )
    .note("is_p_group", g.is_p_group())
    .note("proper_nontrivial_subgroups_maximal", all_maximal)
    .note("literal_hypothesis_holds", literal)
}

pub const P61_DEFAULT_CAP: u64 = 13;

fn sd_numerator(p: u64) -> BigInt {
    let p = BigInt::from(p);
    BigInt::from(7) * num_traits::pow(p.clone(), 3) - BigInt::from(5) * &p * &p - BigInt::from(11) * &p + 9
}

fn sd_denominator(p: u64) -> BigInt {
    let p = BigInt::from(p);
    num_traits::pow(p.clone(), 4) + BigInt::from(4) * num_traits::pow(p.clone(), 3)
        - BigInt::from(2) * &p * &p
        - BigInt::from(12) * &p
        + 9
}

/// `(7p^3 - 5p^2 - 11p + 9) / (p^4 + 4p^3 - 2p^2 - 12p + 9)`.
pub fn dihedral_sd_closed_form(p: u64) -> ExactRatio {
    ExactRatio::new(sd_numerator(p), sd_denominator(p))
}

/// `(p + 3) / (4p)`.
pub fn dihedral_d_closed_form(p: u64) -> ExactRatio {
    ExactRatio::new(p + 3, 4 * p)
}

/// `g(p) = (3p^3 - 5p^2 + p + 1) / (p^2 - 2p + 1)`.
pub fn g_function(p: u64) -> ExactRatio {
    let p = BigInt::from(p);
    let num = BigInt::from(3) * &p * &p * &p - BigInt::from(5) * &p * &p + &p + 1;
    let den = &p * &p - BigInt::from(2) * &p + 1;
    ExactRatio::new(num, den)
}

/// `(tau^2 + 2 tau sigma + g(p)) / (tau + sigma)^2` with `tau = tau(p)`,
/// `sigma = sigma(p)`.
pub fn dihedral_sd_via_divisors(p: u64) -> ExactRatio {
    let (t, s) = (tau(p), sigma(p));
    let num = ExactRatio::from_integer(t * t + 2 * t * s) + g_function(p);
    num / ExactRatio::from_integer((t + s) * (t + s))
}

/// `p^5 - 21p^4 + 30p^3 + 26p^2 - 63p + 27`.
pub fn dihedral_quintic(p: u64) -> BigInt {
    let p = BigInt::from(p);
    let pw = |k: usize| num_traits::pow(p.clone(), k);
    pw(5) - BigInt::from(21) * pw(4) + BigInt::from(30) * pw(3) + BigInt::from(26) * pw(2) - BigInt::from(63) * &p
        + 27
}

/// `pd(D_2p) = 1 > sd(D_2p) > d(D_2p)` with both degrees in closed form,
/// checked by full enumeration of `D_2p`.
pub fn check_p61(p: u64, cap: u64, limits: &Limits) -> Result<TheoremVerdict> {
    if p % 2 == 0 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if p > cap {
        return Err(Error::InvalidParameter {
            family: "D".into(),
            reason: format!("prime {p} exceeds the cap {cap}"),
        });
    }
    let order = 2 * p as usize;
    let g = GroupAnalysis::new(format!("D:{order}"), Family::Dihedral.build(order, limits)?, limits)?;
    let sd_form = dihedral_sd_closed_form(p);
    let d_form = dihedral_d_closed_form(p);
    let via_divisors = dihedral_sd_via_divisors(p);

    // 4p N(p) > (p + 3) D(p) cross-multiplied, against the quintic
    let pb = BigInt::from(p);
    let cross_left = BigInt::from(4) * &pb * sd_numerator(p);
    let cross_right = (&pb + 3) * sd_denominator(p);
    let quintic = dihedral_quintic(p);
    let quintic_consistent =
        (quintic < BigInt::from(0)) == (cross_left > cross_right) && cross_left - cross_right == -quintic.clone();

    let chain = ExactRatio::one() > g.sd && g.sd > g.d;
    Ok(
        TheoremVerdict::new(TheoremId::P61, g.spec.clone(), true, g.sd.clone(), Relation::Eq, sd_form.clone())
            .require("pd_is_one", g.pd().is_one())
            .require("d_matches_closed_form", g.d == d_form)
            .require("divisor_formula_matches", via_divisors == sd_form)
            .require("strict_chain", chain)
            .require("quintic_consistent", quintic_consistent)
            .note("pd", g.pd())
            .note("d", &g.d)
            .note("d_closed_form", d_form)
            .note("quintic", quintic),
    )
}

/// `|L(D_2n)| = sigma(n) + tau(n)` by enumeration, plus the closed form for
/// prime powers.
pub fn check_lattice_formula(n: usize, limits: &Limits) -> Result<TheoremVerdict> {
    let g = dihedral_by_index_with(n, limits)?;
    let size = crate::lattice::enumerate_subgroups_with(&g, limits)?.len();
    let n64 = n as u64;
    let expected = (sigma(n64) + tau(n64)) as usize;
    let mut v = TheoremVerdict::new(
        TheoremId::LFormula,
        format!("D_{}", 2 * n),
        true,
        int(size),
        Relation::Eq,
        int(expected),
    );
    if let Some((p, m)) = prime_power(n64) {
        let closed = prime_power_dihedral_lattice_size(p, m);
        let form = prime_power_lattice_form(p, m);
        v = v
            .require("prime_power_form_matches", closed == size as u128 && form == BigInt::from(size))
            .note("prime_power", format!("{p}^{m}"));
    }
    Ok(v)
}

/// The corrected `D_8` values: `pd(D_8) = 1` (not `4/5`), every non-central
/// involution generates a subgroup with permutizer of order 8, and
/// `P(D_8) = D_8 != Q(D_8)`.
pub fn check_errata_d8(limits: &Limits) -> Result<TheoremVerdict> {
    let g = GroupAnalysis::new("D:8", Family::Dihedral.build(8, limits)?, limits)?;
    let center = g.group.center();
    let reflections: Vec<usize> = (1..8)
        .filter(|&x| g.group.element_order(x) == 2 && !center.contains(x))
        .collect();
    let full_permutizers = reflections.iter().all(|&x| {
        let h = g.group.cyclic_subgroup(x);
        let i = g.lattice.index_of(&h).expect("cyclic subgroups are lattice members");
        g.profile.permutizers[i].count() == 8
    });
    let prof = &g.profile;
    Ok(
        TheoremVerdict::new(TheoremId::ErrataD8, g.spec.clone(), true, g.pd().clone(), Relation::Eq, ExactRatio::one())
            .require("pd_differs_from_four_fifths", *g.pd() != ratio(4, 5))
            .require("four_noncentral_involutions", reflections.len() == 4)
            .require("reflection_permutizers_have_order_8", full_permutizers)
            .require("p_of_g_is_whole_group", prof.p_of_g.is_full())
            .require("p_of_g_differs_from_quasicenter", prof.p_of_g != prof.quasicenter)
            .note("quasicenter_order", prof.quasicenter.count())
            .note("sd", &g.sd),
    )
}

/// Every per-group check on one analysed group, in a fixed order.
pub fn check_group(g: &GroupAnalysis, selected: &[TheoremId], limits: &Limits) -> Result<Vec<TheoremVerdict>> {
    let wants = |t: TheoremId| selected.contains(&t);
    let mut out = Vec::new();
    if wants(TheoremId::T41Lower) || wants(TheoremId::T41Upper) {
        // conjugate subgroups often share a table; reuse their lattices
        let mut seen: HashMap<String, SubgroupView> = HashMap::new();
        for h in g.lattice.subgroups() {
            g.lattice.require(h)?;
            let embedded = g.group.subgroup_as_group(h)?;
            let key = embedded.group.canonical_hash().to_string();
            let view = match seen.get(&key) {
                Some(prev) => SubgroupView {
                    set: h.clone(),
                    embedded,
                    lattice: prev.lattice.clone(),
                    permutizers: prev.permutizers.clone(),
                    pd: prev.pd.clone(),
                },
                None => {
                    let view = SubgroupView::new(&g.group, h, limits)?;
                    seen.insert(key, view.clone());
                    view
                }
            };
            if wants(TheoremId::T41Lower) {
                out.push(check_t41_lower(g, &view)?);
            }
            if wants(TheoremId::T41Upper) {
                out.push(check_t41_upper(g, &view)?);
            }
        }
    }
    if wants(TheoremId::T43) {
        out.push(check_t43(g));
    }
    if wants(TheoremId::T51Lower) {
        out.push(check_t51_lower(g));
    }
    if wants(TheoremId::T51Upper) {
        out.push(check_t51_upper(g));
    }
    if wants(TheoremId::T52) {
        out.push(check_t52(g));
    }
    if wants(TheoremId::T53) {
        out.push(check_t53(g));
    }
    if wants(TheoremId::R23) {
        out.push(check_r23(g));
    }
    Ok(out)
}

/// Per-theorem counts over a verdict stream. Vacuous passes are counted
/// separately and never as confirmations.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepCounts {
    pub theorem_id: String,
    pub total: usize,
    pub applicable: usize,
    pub passed: usize,
    pub failed: usize,
    pub vacuous: usize,
}

pub fn summarize(verdicts: &[TheoremVerdict]) -> Vec<SweepCounts> {
    let mut by_id: BTreeMap<TheoremId, SweepCounts> = BTreeMap::new();
    for v in verdicts {
        let c = by_id.entry(v.theorem_id).or_insert_with(|| SweepCounts {
            theorem_id: v.theorem_id.to_string(),
            ..Default::default()
        });
        c.total += 1;
        if v.hypotheses_hold {
            c.applicable += 1;
            if v.conclusion_holds {
                c.passed += 1;
            } else {
                c.failed += 1;
            }
        } else {
            c.vacuous += 1;
        }
    }
    by_id.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_cyclic, make_dihedral, make_symmetric};

    fn analyse(spec: &str, g: crate::group::FiniteGroup) -> GroupAnalysis {
        GroupAnalysis::new(spec, g, &Limits::default()).unwrap()
    }

    #[test]
    fn t41_lower_on_s3_and_a3() {
        let g = analyse("S:3", make_symmetric(3).unwrap());
        let a3 = g.lattice.subgroups().iter().find(|h| h.count() == 3).unwrap().clone();
        let view = g.subgroup(&a3, &Limits::default()).unwrap();
        let v = check_t41_lower(&g, &view).unwrap();
        assert_eq!(v.lhs, ExactRatio::new(1, 6));
        assert_eq!(v.rhs, ExactRatio::one());
        assert!(v.passed && v.hypotheses_hold);
        let whole = g.subgroup(&g.group.whole(), &Limits::default()).unwrap();
        let v = check_t41_lower(&g, &whole).unwrap();
        assert_eq!(v.lhs, v.rhs);
        let v = check_t41_upper(&g, &whole).unwrap();
        assert!(v.hypotheses_hold && v.passed);
    }

    #[test]
    fn non_member_is_rejected() {
        let g = analyse("S:3", make_symmetric(3).unwrap());
        let d8 = analyse("D:8", make_dihedral(8).unwrap());
        let foreign = d8.subgroup(&d8.group.whole(), &Limits::default()).unwrap();
        assert!(matches!(check_t41_lower(&g, &foreign), Err(Error::SubgroupNotInLattice)));
    }

    #[test]
    fn lattice_exponent_and_bound() {
        assert_eq!(solve_lattice_exponent(2, 10), Some(2));
        assert_eq!(solve_lattice_exponent(3, 6), Some(1));
        assert_eq!(solve_lattice_exponent(2, 11), None);
        assert_eq!(solve_lattice_exponent(5, 2), Some(0));
        // p = 2, m = 2: (8 + 8 - 2 - 2) / (16 + 12 - 8)
        assert_eq!(t43_bound(2, 2), ExactRatio::new(12, 20));
    }

    #[test]
    fn t43_is_vacuous_because_trivial_subgroup_has_full_permutizer() {
        let g = analyse("D:8", make_dihedral(8).unwrap());
        let v = check_t43(&g);
        assert!(!v.hypotheses_hold && v.passed);
        assert_eq!(v.witness["full_permutizer_at"], "01");
        let c = analyse("C:4", make_cyclic(4).unwrap());
        assert_eq!(check_t43(&c).witness["not_applicable"], "cyclic group");
    }

    #[test]
    fn t51_lower_boundary_on_s3() {
        let g = analyse("S:3", make_symmetric(3).unwrap());
        let v = check_t51_lower(&g);
        assert_eq!(v.lhs, ExactRatio::one());
        assert!(!v.hypotheses_hold && v.conclusion_holds);
        assert_eq!(v.witness["boundary"], "pd = 1");
    }

    #[test]
    fn t53_side_condition_arithmetic() {
        // 310/390 <= 2/|L| only for |L| <= 2
        assert!(t53_side_condition(80, 2, 2));
        assert!(!t53_side_condition(80, 2, 3));
    }

    #[test]
    fn dihedral_closed_forms() {
        assert_eq!(dihedral_sd_closed_form(3), ExactRatio::new(5, 6));
        assert_eq!(dihedral_sd_closed_form(5), ExactRatio::new(11, 16));
        assert_eq!(dihedral_d_closed_form(3), ExactRatio::new(1, 2));
        assert_eq!(dihedral_d_closed_form(5), ExactRatio::new(2, 5));
        for p in [3, 5, 7, 11, 13, 23] {
            assert_eq!(dihedral_sd_via_divisors(p), dihedral_sd_closed_form(p));
        }
        assert_eq!(dihedral_quintic(23), BigInt::from(937_024));
        assert!(dihedral_quintic(19) < BigInt::from(0));
    }

    #[test]
    fn p61_range() {
        let limits = Limits::default();
        for p in [3, 5, 7] {
            let v = check_p61(p, P61_DEFAULT_CAP, &limits).unwrap();
            assert!(v.passed, "{v:?}");
        }
        assert!(matches!(check_p61(9, 13, &limits), Err(Error::NotOddPrime(9))));
        assert!(matches!(check_p61(2, 13, &limits), Err(Error::NotOddPrime(2))));
        assert!(matches!(check_p61(17, 13, &limits), Err(Error::InvalidParameter { .. })));
    }

    #[test]
    fn p61_chain_breaks_at_23() {
        let v = check_p61(23, 23, &Limits::default()).unwrap();
        assert!(!v.passed);
        assert_eq!(v.lhs, v.rhs, "closed form itself still matches");
        assert_eq!(v.witness["strict_chain"], "false");
    }

    #[test]
    fn errata_d8_verdict() {
        let v = check_errata_d8(&Limits::default()).unwrap();
        assert!(v.passed, "{v:?}");
        assert_eq!(v.witness["quasicenter_order"], "4");
    }

    #[test]
    fn lattice_formula_small() {
        for n in 1..=12 {
            let v = check_lattice_formula(n, &Limits::default()).unwrap();
            assert!(v.passed, "{v:?}");
        }
    }

    #[test]
    fn product_requires_coprime_orders() {
        let limits = Limits::default();
        let s3 = analyse("S:3", make_symmetric(3).unwrap());
        let c2 = analyse("C:2", make_cyclic(2).unwrap());
        let c5 = analyse("C:5", make_cyclic(5).unwrap());
        let prod = analyse("S:3xC:5", s3.group.direct_product_with(&c5.group, &limits).unwrap());
        assert!(check_p42(&s3, &c5, &prod).unwrap().passed);
        assert!(matches!(check_p42(&s3, &c2, &prod), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn verdict_json_is_stable() {
        let g = analyse("S:3", make_symmetric(3).unwrap());
        let a = serde_json::to_string(&check_t52(&g)).unwrap();
        let b = serde_json::to_string(&check_t52(&analyse("S:3", make_symmetric(3).unwrap()))).unwrap();
        assert_eq!(a, b);
        assert!(a.starts_with(r#"{"theorem_id":"T5_2","group":"S:3","hypotheses_hold":false"#));
        let back: TheoremVerdict = serde_json::from_str(&a).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), a);
    }

    #[test]
    fn summary_separates_vacuous() {
        let g = analyse("S:3", make_symmetric(3).unwrap());
        let vs = check_group(&g, &TheoremId::ALL, &Limits::default()).unwrap();
        let sum = summarize(&vs);
        let t41 = sum.iter().find(|c| c.theorem_id == "T4_1_lower").unwrap();
        assert_eq!((t41.total, t41.applicable, t41.passed, t41.vacuous), (6, 6, 6, 0));
        let t52 = sum.iter().find(|c| c.theorem_id == "T5_2").unwrap();
        assert_eq!((t52.applicable, t52.vacuous), (0, 1));
    }

    #[test]
    fn theorem_names_parse() {
        for t in TheoremId::ALL {
            assert_eq!(t.name().parse::<TheoremId>().unwrap(), t);
            assert_eq!(t.name().to_lowercase().parse::<TheoremId>().unwrap(), t);
        }
        assert!("T9_9".parse::<TheoremId>().is_err());
    }
}
