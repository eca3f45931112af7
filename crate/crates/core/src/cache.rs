//! Directory of subgroup lattices keyed by canonical group hash.

use std::fs;
use std::path::{Path, PathBuf};

use crate::corpus::LatticeSource;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Limits};
use crate::io::LatticeDocument;
use crate::lattice::{enumerate_subgroups_with, SubgroupLattice};

const SUFFIX: &str = ".lattice.json";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CacheOutcome {
    Hit,
    Miss,
    /// The cached file failed to load or revalidate and was replaced.
    Replaced(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheEntry {
    pub hash: String,
    pub spec: String,
    pub order: usize,
    pub lattice_size: usize,
    pub path: PathBuf,
}

#[derive(Clone, Debug)]
pub struct LatticeCache {
    dir: PathBuf,
    trust: bool,
}

impl LatticeCache {
    /// With `trust`, cached subgroups are used without re-checking the
    /// subgroup axioms.
    pub fn new(dir: impl Into<PathBuf>, trust: bool) -> Self {
        LatticeCache { dir: dir.into(), trust }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, hash: &str) -> PathBuf {
        self.dir.join(format!("{hash}{SUFFIX}"))
    }

    /// `Ok(None)` when nothing is cached; an error when the file is present
    /// but unreadable or fails revalidation.
    pub fn load(&self, group: &FiniteGroup) -> Result<Option<SubgroupLattice>> {
        let path = self.path_for(group.canonical_hash());
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let doc = LatticeDocument::parse(&text)?;
        let lattice = if self.trust {
            doc.into_lattice_trusted(group)?
        } else {
            doc.into_lattice(group)?
        };
        Ok(Some(lattice))
    }

    /// Writes through a temporary file and a rename so concurrent readers
    /// never see a partial document.
    pub fn store(&self, spec: &str, lattice: &SubgroupLattice) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path_for(lattice.group_hash());
        let tmp = self
            .dir
            .join(format!(".{}.{}.tmp", lattice.group_hash(), std::process::id()));
        fs::write(&tmp, LatticeDocument::from_lattice(spec, lattice).to_json())?;
        fs::rename(&tmp, &path)?;
        Ok(())
    }

    /// Loads from the cache, or enumerates and stores. A corrupt entry is
    /// reported in the outcome and overwritten.
    pub fn get_or_compute(
        &self,
        spec: &str,
        group: &FiniteGroup,
        limits: &Limits,
    ) -> Result<(SubgroupLattice, CacheOutcome)> {
        let outcome = match self.load(group) {
            Ok(Some(lattice)) => return Ok((lattice, CacheOutcome::Hit)),
            Ok(None) => CacheOutcome::Miss,
            Err(Error::Io(e)) => return Err(Error::Io(e)),
            Err(e) => CacheOutcome::Replaced(e.to_string()),
        };
        let lattice = enumerate_subgroups_with(group, limits)?;
        self.store(spec, &lattice)?;
        Ok((lattice, outcome))
    }

    /// Every readable entry, sorted by spec then hash. Unparseable files are
    /// skipped.
    pub fn entries(&self) -> Result<Vec<CacheEntry>> {
        let mut out = Vec::new();
        let dir = match fs::read_dir(&self.dir) {
            Ok(d) => d,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(out),
            Err(e) => return Err(e.into()),
        };
        for item in dir {
            let path = item?.path();
            if !path.to_string_lossy().ends_with(SUFFIX) {
                continue;
            }
            let Ok(doc) = fs::read_to_string(&path).map_err(Error::from).and_then(|t| LatticeDocument::parse(&t))
            else {
                continue;
            };
            out.push(CacheEntry {
                hash: doc.hash,
                spec: doc.spec,
                order: doc.order,
                lattice_size: doc.subgroups.len(),
                path,
            });
        }
        out.sort_by(|a, b| (&a.spec, &a.hash).cmp(&(&b.spec, &b.hash)));
        Ok(out)
    }

    /// Removes every cache file; returns how many were deleted.
    pub fn clear(&self) -> Result<usize> {
        let dir = match fs::read_dir(&self.dir) {
            Ok(d) => d,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(0),
            Err(e) => return Err(e.into()),
        };
        let mut removed = 0;
        for item in dir {
            let path = item?.path();
            if path.to_string_lossy().ends_with(SUFFIX) {
                fs::remove_file(&path)?;
                removed += 1;
            }
        }
        Ok(removed)
    }
}

impl LatticeSource for LatticeCache {
    fn lattice(&self, spec: &str, group: &FiniteGroup, limits: &Limits) -> Result<SubgroupLattice> {
        self.get_or_compute(spec, group, limits).map(|(l, _)| l)
    }
}
