//! Named group families and textual group specs.
//!
//! Dihedral, quaternion and semidihedral groups are named by their **order**
//! (`D:8` is the symmetries of a square), cyclic groups by their order, and
//! symmetric and alternating groups by their degree.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Limits};
use crate::io;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Cyclic,
    Dihedral,
    Quaternion,
    Semidihedral,
    Symmetric,
    Alternating,
}

impl Family {
    pub fn symbol(self) -> &'static str {
        match self {
            Family::Cyclic => "C",
            Family::Dihedral => "D",
            Family::Quaternion => "Q",
            Family::Semidihedral => "SD",
            Family::Symmetric => "S",
            Family::Alternating => "A",
        }
    }

    fn from_symbol(s: &str) -> Option<Self> {
        Some(match s.to_ascii_uppercase().as_str() {
            "C" => Family::Cyclic,
            "D" => Family::Dihedral,
            "Q" => Family::Quaternion,
            "SD" => Family::Semidihedral,
            "S" => Family::Symmetric,
            "A" => Family::Alternating,
            _ => return None,
        })
    }

    fn invalid(self, reason: impl Into<String>) -> Error {
        Error::InvalidParameter {
            family: self.symbol().to_string(),
            reason: reason.into(),
        }
    }

    /// Checks the family's parameter constraint.
    pub fn validate(self, param: usize) -> Result<()> {
        let ok = match self {
            Family::Cyclic | Family::Symmetric | Family::Alternating => param >= 1,
            Family::Dihedral => param >= 4 && param % 2 == 0,
            Family::Quaternion => param >= 8 && param.is_power_of_two(),
            Family::Semidihedral => param >= 16 && param.is_power_of_two(),
        };
        if ok {
            return Ok(());
        }
        Err(self.invalid(match self {
            Family::Cyclic => "order must be at least 1",
            Family::Symmetric | Family::Alternating => "degree must be at least 1",
            Family::Dihedral => "order must be even and at least 4",
            Family::Quaternion => "order must be a power of 2, at least 8",
            Family::Semidihedral => "order must be a power of 2, at least 16",
        }))
    }

    /// Order of the group this family builds for `param`, or `None` on
    /// overflow.
    pub fn order(self, param: usize) -> Option<usize> {
        match self {
            Family::Symmetric => factorial(param),
            Family::Alternating => factorial(param).map(|f| (f / 2).max(1)),
            _ => Some(param),
        }
    }

    pub fn build(self, param: usize, limits: &Limits) -> Result<FiniteGroup> {
        self.validate(param)?;
        let order = self
            .order(param)
            .filter(|&o| o <= limits.max_order)
            .ok_or(Error::ClosureTooLarge {
                limit: limits.max_order,
            })?;
        let group = match self {
            Family::Cyclic => cyclic_with(param, limits)?,
            Family::Dihedral => dihedral_by_index_with(param / 2, limits)?,
            Family::Quaternion => {
                let n = param / 2;
                metacyclic(n, n - 1, n / 2, limits)?
            }
            Family::Semidihedral => {
                let n = param / 2;
                metacyclic(n, n / 2 - 1, 0, limits)?
            }
            Family::Symmetric => symmetric_with(param, limits)?,
            Family::Alternating => alternating_with(param, limits)?,
        };
        assert_eq!(group.order(), order, "{}:{param} built with the wrong order", self.symbol());
        Ok(group)
    }
}

fn factorial(n: usize) -> Option<usize> {
    (2..=n).try_fold(1usize, |acc, k| acc.checked_mul(k))
}

fn cycle(n: usize) -> Vec<usize> {
    (0..n).map(|i| (i + 1) % n).collect()
}

fn cyclic_with(n: usize, limits: &Limits) -> Result<FiniteGroup> {
    let gens = if n > 1 { vec![cycle(n)] } else { vec![] };
    FiniteGroup::from_generators_with(n, &gens, limits)
}

/// `<y, x | y^n, x^2 = y^s, x y x^-1 = y^r>` on pairs `y^i x^e`, with element
/// `y^i x^e` at index `i + n e`. Requires `r^2 = 1` and `r s = s` mod `n`.
fn metacyclic(n: usize, r: usize, s: usize, limits: &Limits) -> Result<FiniteGroup> {
    let order = 2 * n;
    let rows: Vec<Vec<usize>> = (0..order)
        .map(|a| {
            let (i, e) = (a % n, a / n);
            (0..order)
                .map(|b| {
                    let (j, f) = (b % n, b / n);
                    let twisted = if e == 1 { j * r } else { j };
                    let extra = if e == 1 && f == 1 { s } else { 0 };
                    (i + twisted + extra) % n + n * (e ^ f)
                })
                .collect()
        })
        .collect();
    let labels = (0..order)
        .map(|a| {
            let (i, e) = (a % n, a / n);
            let y = match i {
                0 => String::new(),
                1 => "y".to_string(),
                _ => format!("y^{i}"),
            };
            let x = if e == 1 { "x" } else { "" };
            if y.is_empty() && x.is_empty() {
                "1".to_string()
            } else {
                format!("{y}{x}")
            }
        })
        .collect();
    Ok(FiniteGroup::from_table_with(&rows, limits)?.with_labels(labels))
}

/// `D_2n` for any `n >= 1`: the symmetries of a regular `n`-gon for `n >= 3`,
/// and the abstract presentation for the degenerate cases `D_2 = C_2` and
/// `D_4 = C_2 x C_2`.
pub fn dihedral_by_index_with(n: usize, limits: &Limits) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Family::Dihedral.invalid("polygon must have at least 1 edge"));
    }
    if n <= 2 {
        return metacyclic(n, n - 1, 0, limits);
    }
    let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    FiniteGroup::from_generators_with(n, &[cycle(n), reflection], limits)
}

pub fn dihedral_by_index(n: usize) -> Result<FiniteGroup> {
    dihedral_by_index_with(n, &Limits::default())
}

fn symmetric_with(n: usize, limits: &Limits) -> Result<FiniteGroup> {
    let gens = match n {
        0 | 1 => vec![],
        2 => vec![vec![1, 0]],
        _ => {
            let mut swap: Vec<usize> = (0..n).collect();
            swap.swap(0, 1);
            vec![swap, cycle(n)]
        }
    };
    FiniteGroup::from_generators_with(n, &gens, limits)
}

fn alternating_with(n: usize, limits: &Limits) -> Result<FiniteGroup> {
    // the 3-cycles (0 1 k) generate A_n
    let gens: Vec<Vec<usize>> = (2..n.max(2))
        .map(|k| {
            let mut p: Vec<usize> = (0..n).collect();
            p[0] = 1;
            p[1] = k;
            p[k] = 0;
            p
        })
        .collect();
    FiniteGroup::from_generators_with(n, &gens, limits)
}

pub fn make_cyclic(n: usize) -> Result<FiniteGroup> {
    Family::Cyclic.build(n, &Limits::default())
}

pub fn make_dihedral(order: usize) -> Result<FiniteGroup> {
    Family::Dihedral.build(order, &Limits::default())
}

pub fn make_quaternion(order: usize) -> Result<FiniteGroup> {
    Family::Quaternion.build(order, &Limits::default())
}

pub fn make_semidihedral(order: usize) -> Result<FiniteGroup> {
    Family::Semidihedral.build(order, &Limits::default())
}

pub fn make_symmetric(degree: usize) -> Result<FiniteGroup> {
    Family::Symmetric.build(degree, &Limits::default())
}

pub fn make_alternating(degree: usize) -> Result<FiniteGroup> {
    Family::Alternating.build(degree, &Limits::default())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Named { family: Family, param: usize },
    File(PathBuf),
}

impl Term {
    pub fn build(&self, limits: &Limits) -> Result<FiniteGroup> {
        match self {
            Term::Named { family, param } => family.build(*param, limits),
            Term::File(path) => io::read_group_file(path, limits),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Named { family, param } => write!(f, "{}:{param}", family.symbol()),
            Term::File(path) => write!(f, "file:{}", path.display()),
        }
    }
}

/// A direct product of family members and group files, e.g. `D:8xC:3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    pub terms: Vec<Term>,
}

impl GroupSpec {
    pub fn named(family: Family, param: usize) -> Self {
        GroupSpec {
            terms: vec![Term::Named { family, param }],
        }
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        self.build_with(&Limits::default())
    }

    /// Builds every term and multiplies them left to right.
    pub fn build_with(&self, limits: &Limits) -> Result<FiniteGroup> {
        let mut terms = self.terms.iter();
        let first = terms.next().expect("a spec has at least one term");
        terms.try_fold(first.build(limits)?, |acc, t| acc.direct_product_with(&t.build(limits)?, limits))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_spec(s)
    }
}

struct Parser<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, position: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_spaces(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    /// Whether a term head (`letters:`) starts at `at`.
    fn head_at(&self, at: usize) -> bool {
        let letters = self.bytes[at..].iter().take_while(|b| b.is_ascii_alphabetic()).count();
        letters > 0
            && self.bytes.get(at + letters) == Some(&b':')
            && (self.text[at..at + letters].eq_ignore_ascii_case("file")
                || Family::from_symbol(&self.text[at..at + letters]).is_some())
    }

    fn term(&mut self) -> Result<Term> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        let head = &self.text[start..self.pos];
        if head.is_empty() {
            return Err(self.error(start, "expected a family name (C, D, Q, SD, S, A or file)"));
        }
        if self.peek() != Some(b':') {
            return Err(self.error(self.pos, format!("expected ':' after {head:?}")));
        }
        self.pos += 1;

        if head.eq_ignore_ascii_case("file") {
            let path_start = self.pos;
            while let Some(b) = self.peek() {
                let separator = (b == b'x' || b == b'X') && self.head_at(self.pos + 1);
                if b.is_ascii_whitespace() || separator {
                    break;
                }
                self.pos += 1;
            }
            if self.pos == path_start {
                return Err(self.error(path_start, "expected a path after 'file:'"));
            }
            return Ok(Term::File(PathBuf::from(&self.text[path_start..self.pos])));
        }

        let family =
            Family::from_symbol(head).ok_or_else(|| self.error(start, format!("unknown family {head:?}")))?;
        let digits_start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(self.error(digits_start, "expected a positive integer"));
        }
        let param: usize = self.text[digits_start..self.pos]
            .parse()
            .map_err(|_| self.error(digits_start, "integer is too large"))?;
        family.validate(param)?;
        Ok(Term::Named { family, param })
    }
}

/// Parses `term ("x" term)*` where a term is `C|D|Q|SD|S|A ":" integer` or
/// `"file:" path`, case-insensitively.
///
/// Whitespace is allowed around the `x` separators but not inside a term. A
/// file path runs until whitespace, the end of the text, or an `x` that is
/// directly followed by another term head such as `C:`.
pub fn parse_spec(text: &str) -> Result<GroupSpec> {
    let mut parser = Parser {
        text,
        bytes: text.as_bytes(),
        pos: 0,
    };
    let mut terms = Vec::new();
    loop {
        parser.skip_spaces();
        terms.push(parser.term()?);
        parser.skip_spaces();
        match parser.peek() {
            None => break,
            Some(b'x' | b'X') => parser.pos += 1,
            Some(_) => {
                let at = parser.pos;
                let ch = text[at..].chars().next().unwrap_or('?');
                return Err(parser.error(at, format!("unexpected {ch:?}, expected 'x' or end of spec")));
            }
        }
    }
    Ok(GroupSpec { terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{enumerate_subgroups, subgroup_commutativity_degree};
    use crate::ratio::ExactRatio;

    #[test]
    fn family_orders() {
        for (family, param, order) in [
            (Family::Cyclic, 1, 1),
            (Family::Cyclic, 12, 12),
            (Family::Dihedral, 4, 4),
            (Family::Dihedral, 8, 8),
            (Family::Dihedral, 200, 200),
            (Family::Quaternion, 8, 8),
            (Family::Quaternion, 32, 32),
            (Family::Semidihedral, 16, 16),
            (Family::Symmetric, 1, 1),
            (Family::Symmetric, 2, 2),
            (Family::Symmetric, 4, 24),
            (Family::Alternating, 1, 1),
            (Family::Alternating, 3, 3),
            (Family::Alternating, 5, 60),
        ] {
            let g = family.build(param, &Limits::default()).unwrap();
            assert_eq!(g.order(), order, "{}:{param}", family.symbol());
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        for (family, param) in [
            (Family::Cyclic, 0),
            (Family::Dihedral, 6 + 1),
            (Family::Dihedral, 2),
            (Family::Quaternion, 12),
            (Family::Quaternion, 4),
            (Family::Semidihedral, 8),
            (Family::Symmetric, 0),
        ] {
            assert!(matches!(
                family.build(param, &Limits::default()),
                Err(Error::InvalidParameter { .. })
            ));
        }
        assert!(matches!(
            Family::Symmetric.build(8, &Limits::default()),
            Err(Error::ClosureTooLarge { .. })
        ));
    }

    #[test]
    fn quaternion_structure() {
        let q = make_quaternion(8).unwrap();
        // a single involution, and every subgroup normal
        assert_eq!((1..8).filter(|&g| q.element_order(g) == 2).count(), 1);
        let l = enumerate_subgroups(&q).unwrap();
        assert_eq!(l.len(), 6);
        assert!(l.subgroups().iter().all(|h| q.is_normal(h).unwrap()));
        let q16 = make_quaternion(16).unwrap();
        assert_eq!((1..16).filter(|&g| q16.element_order(g) == 2).count(), 1);
        assert_eq!(q16.exponent(), 8);
    }

    #[test]
    fn semidihedral_structure() {
        let g = make_semidihedral(16).unwrap();
        assert_eq!(g.exponent(), 8);
        assert_eq!(g.center().count(), 2);
        // SD_16 has 5 involutions
        assert_eq!((1..16).filter(|&x| g.element_order(x) == 2).count(), 5);
    }

    #[test]
    fn dihedral_six_matches_s3() {
        let d6 = make_dihedral(6).unwrap();
        let s3 = make_symmetric(3).unwrap();
        let (l1, l2) = (enumerate_subgroups(&d6).unwrap(), enumerate_subgroups(&s3).unwrap());
        assert_eq!(l1.len(), l2.len());
        assert_eq!(subgroup_commutativity_degree(&d6, &l1), ExactRatio::new(5, 6));
        assert_eq!(subgroup_commutativity_degree(&s3, &l2), ExactRatio::new(5, 6));
        assert_eq!(d6.commutativity_degree(), s3.commutativity_degree());
    }

    #[test]
    fn small_dihedral_indices() {
        assert_eq!(dihedral_by_index(1).unwrap().order(), 2);
        let v4 = dihedral_by_index(2).unwrap();
        assert!(v4.is_abelian() && !v4.is_cyclic());
    }

    #[test]
    fn parse_examples() {
        let s = parse_spec("D:8").unwrap();
        assert_eq!(s, GroupSpec::named(Family::Dihedral, 8));
        assert_eq!(s.build().unwrap().order(), 8);
        let s = parse_spec("s:3").unwrap();
        assert_eq!(s.build().unwrap().order(), 6);
        let s = parse_spec("C:2xC:4").unwrap();
        assert_eq!(s.terms.len(), 2);
        let g = s.build().unwrap();
        assert_eq!(g.order(), 8);
        assert!(g.is_abelian() && !g.is_cyclic());
        assert_eq!(parse_spec("sd:16 X c:3").unwrap().to_string(), "SD:16xC:3");
    }

    #[test]
    fn parse_errors_carry_positions() {
        let pos = |t: &str| match parse_spec(t) {
            Err(Error::Parse { position, .. }) => position,
            other => panic!("{t:?} gave {other:?}"),
        };
        assert_eq!(pos("E:4"), 0);
        assert_eq!(pos("D8"), 1);
        assert_eq!(pos("D: 8"), 2);
        assert_eq!(pos("C:2xx"), 5);
        assert_eq!(pos("C:2x"), 4);
        assert_eq!(pos("C:2y"), 3);
        assert_eq!(pos(""), 0);
        assert_eq!(pos("C:99999999999999999999999"), 2);
        assert!(matches!(parse_spec("D:7"), Err(Error::InvalidParameter { .. })));
    }

    #[test]
    fn file_terms() {
        let s = parse_spec("file:/tmp/box.jsonxC:3").unwrap();
        assert_eq!(
            s.terms,
            vec![
                Term::File(PathBuf::from("/tmp/box.json")),
                Term::Named {
                    family: Family::Cyclic,
                    param: 3
                }
            ]
        );
        assert_eq!(s.to_string(), "file:/tmp/box.jsonxC:3");
    }
}
