//! On-disk documents: group files, lattice cache entries and profile exports.
//!
//! All documents are compact JSON followed by a newline. Readers reject
//! unknown fields, so a document written here reads back to identical bytes.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Limits};
use crate::lattice::SubgroupLattice;
use crate::permutizer::PermutizerProfile;
use crate::ratio::ExactRatio;

/// `{"order": n, "table": [[...], ...]}`, row-major, 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableDocument {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

/// `{"degree": n, "generators": [[...], ...]}` with one-line permutations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorDocument {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupDocument {
    Table(TableDocument),
    Generators(GeneratorDocument),
}

impl TableDocument {
    pub fn from_group(group: &FiniteGroup) -> Self {
        TableDocument {
            order: group.order(),
            table: group.rows(),
        }
    }

    pub fn build(&self, limits: &Limits) -> Result<FiniteGroup> {
        if self.table.len() != self.order {
            return Err(Error::Format(format!(
                "\"order\" is {} but \"table\" has {} rows",
                self.order,
                self.table.len()
            )));
        }
        FiniteGroup::from_table_with(&self.table, limits)
    }
}

impl GeneratorDocument {
    pub fn build(&self, limits: &Limits) -> Result<FiniteGroup> {
        if self.degree == 0 {
            return Err(Error::Format("\"degree\" must be positive".into()));
        }
        FiniteGroup::from_generators_with(self.degree, &self.generators, limits)
    }
}

impl GroupDocument {
    /// Picks the format from the keys present, then parses strictly.
    pub fn parse(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text)?;
        let keys = value
            .as_object()
            .ok_or_else(|| Error::Format("group document must be a JSON object".into()))?;
        if keys.contains_key("table") {
            Ok(GroupDocument::Table(serde_json::from_value(value)?))
        } else if keys.contains_key("generators") {
            Ok(GroupDocument::Generators(serde_json::from_value(value)?))
        } else {
            Err(Error::Format(
                "group document needs either \"order\"/\"table\" or \"degree\"/\"generators\"".into(),
            ))
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = match self {
            GroupDocument::Table(t) => serde_json::to_string(t),
            GroupDocument::Generators(g) => serde_json::to_string(g),
        }
        .expect("plain data serializes");
        out.push('\n');
        out
    }

    pub fn build(&self, limits: &Limits) -> Result<FiniteGroup> {
        match self {
            GroupDocument::Table(t) => t.build(limits),
            GroupDocument::Generators(g) => g.build(limits),
        }
    }
}

pub fn read_group_file(path: &Path, limits: &Limits) -> Result<FiniteGroup> {
    GroupDocument::parse(&fs::read_to_string(path)?)?.build(limits)
}

pub fn write_table_file(path: &Path, group: &FiniteGroup) -> Result<()> {
    fs::write(path, GroupDocument::Table(TableDocument::from_group(group)).to_json())?;
    Ok(())
}

pub const LATTICE_FORMAT: &str = "permdeg-lattice-v1";

/// Cached subgroup lattice of one group, keyed by the group's canonical hash.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeDocument {
    pub format: String,
    pub hash: String,
    /// Free-form description of where the group came from, e.g. `D:200`.
    pub spec: String,
    pub order: usize,
    /// Hex bit patterns, in lattice order.
    pub subgroups: Vec<String>,
    pub hasse: Vec<[usize; 2]>,
}

impl LatticeDocument {
    pub fn from_lattice(spec: &str, lattice: &SubgroupLattice) -> Self {
        LatticeDocument {
            format: LATTICE_FORMAT.to_string(),
            hash: lattice.group_hash().to_string(),
            spec: spec.to_string(),
            order: lattice.group_order(),
            subgroups: lattice.subgroups().iter().map(ElementSet::to_hex).collect(),
            hasse: lattice.hasse_edges().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let doc: LatticeDocument = serde_json::from_str(text)?;
        if doc.format != LATTICE_FORMAT {
            return Err(Error::Format(format!("unsupported lattice format {:?}", doc.format)));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string(self).expect("plain data serializes");
        out.push('\n');
        out
    }

    fn subgroup_sets(&self) -> Result<Vec<ElementSet>> {
        self.subgroups.iter().map(|h| ElementSet::from_hex(self.order, h)).collect()
    }

    fn check_header(&self, group: &FiniteGroup) -> Result<()> {
        if self.hash != group.canonical_hash() || self.order != group.order() {
            return Err(Error::Format("lattice document belongs to a different group".into()));
        }
        Ok(())
    }

    /// Rebuilds the lattice, re-checking every member against the subgroup
    /// axioms and the stored structure against the recomputed one.
    pub fn into_lattice(self, group: &FiniteGroup) -> Result<SubgroupLattice> {
        self.check_header(group)?;
        let lattice = SubgroupLattice::from_subgroups(group, self.subgroup_sets()?)?;
        let stored_order: Vec<String> = lattice.subgroups().iter().map(ElementSet::to_hex).collect();
        if stored_order != self.subgroups {
            return Err(Error::Format("subgroups are duplicated or out of order".into()));
        }
        if lattice.len() < 1
            || lattice.get(0).count() != 1
            || !lattice.get(lattice.whole_index()).is_full()
        {
            return Err(Error::Format("lattice is missing the trivial subgroup or the group".into()));
        }
        let subs = lattice.subgroups();
        for i in 0..subs.len() {
            for j in i + 1..subs.len() {
                if !lattice.contains(&subs[i].intersection(&subs[j])) {
                    return Err(Error::Format(format!("members {i} and {j} meet outside the lattice")));
                }
            }
        }
        let hasse: Vec<[usize; 2]> = lattice.hasse_edges().iter().map(|&(a, b)| [a, b]).collect();
        if hasse != self.hasse {
            return Err(Error::Format("stored Hasse edges do not match the subgroups".into()));
        }
        Ok(lattice)
    }

    /// Rebuilds the lattice without checking the subgroup axioms.
    pub fn into_lattice_trusted(self, group: &FiniteGroup) -> Result<SubgroupLattice> {
        self.check_header(group)?;
        Ok(SubgroupLattice::from_subgroups_unchecked(group, self.subgroup_sets()?))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PermutizerEntry {
    pub subgroup: String,
    pub order: usize,
    pub permutizer: String,
    pub permutizer_order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubgroupSummary {
    pub bits: String,
    pub order: usize,
}

impl From<&ElementSet> for SubgroupSummary {
    fn from(set: &ElementSet) -> Self {
        SubgroupSummary {
            bits: set.to_hex(),
            order: set.count(),
        }
    }
}

/// Per-subgroup permutizers plus the derived subgroups and `pd`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileDocument {
    pub hash: String,
    pub spec: String,
    pub order: usize,
    pub permutizers: Vec<PermutizerEntry>,
    pub p_of_g: SubgroupSummary,
    pub norm: SubgroupSummary,
    pub quasicenter: SubgroupSummary,
    pub hyperquasicenter: SubgroupSummary,
    pub pd: ExactRatio,
}

impl ProfileDocument {
    pub fn new(spec: &str, group: &FiniteGroup, lattice: &SubgroupLattice, profile: &PermutizerProfile) -> Self {
        ProfileDocument {
            hash: group.canonical_hash().to_string(),
            spec: spec.to_string(),
            order: group.order(),
            permutizers: lattice
                .subgroups()
                .iter()
                .zip(&profile.permutizers)
                .map(|(x, p)| PermutizerEntry {
                    subgroup: x.to_hex(),
                    order: x.count(),
                    permutizer: p.to_hex(),
                    permutizer_order: p.count(),
                })
                .collect(),
            p_of_g: (&profile.p_of_g).into(),
            norm: (&profile.norm).into(),
            quasicenter: (&profile.quasicenter).into(),
            hyperquasicenter: (&profile.hyperquasicenter).into(),
            pd: profile.pd.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string(self).expect("plain data serializes");
        out.push('\n');
        out
    }
}
