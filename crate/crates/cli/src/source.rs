//! Lattice source that goes through the on-disk cache and remembers what
//! happened for each group.

use std::collections::BTreeMap;
use std::sync::Mutex;

use permdeg::cache::{CacheOutcome, LatticeCache};
use permdeg::corpus::LatticeSource;
use permdeg::lattice::enumerate_subgroups_with;
use permdeg::{FiniteGroup, Limits, Result, SubgroupLattice};

pub struct RecordingSource {
    cache: Option<LatticeCache>,
    /// Keyed by canonical hash; the group spec is kept for warnings.
    events: Mutex<BTreeMap<String, (String, CacheOutcome)>>,
}

impl RecordingSource {
    pub fn new(cache: Option<LatticeCache>) -> Self {
        RecordingSource {
            cache,
            events: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn was_hit(&self, group: &FiniteGroup) -> bool {
        let events = self.events.lock().unwrap();
        matches!(events.get(group.canonical_hash()), Some((_, CacheOutcome::Hit)))
    }

    /// One line per replaced cache entry, in hash order.
    pub fn warnings(&self) -> Vec<String> {
        self.events
            .lock()
            .unwrap()
            .values()
            .filter_map(|(spec, outcome)| match outcome {
                CacheOutcome::Replaced(why) => {
                    Some(format!("warning: cached lattice for {spec} failed revalidation ({why}); recomputed"))
                }
                _ => None,
            })
            .collect()
    }
}

impl LatticeSource for RecordingSource {
    fn lattice(&self, spec: &str, group: &FiniteGroup, limits: &Limits) -> Result<SubgroupLattice> {
        let Some(cache) = &self.cache else {
            return enumerate_subgroups_with(group, limits);
        };
        let (lattice, outcome) = cache.get_or_compute(spec, group, limits)?;
        self.events
            .lock()
            .unwrap()
            .entry(group.canonical_hash().to_string())
            .or_insert((spec.to_string(), outcome));
        Ok(lattice)
    }
}
