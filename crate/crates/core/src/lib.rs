//! Exact computation of permutizer-based invariants of small finite groups.
//!
//! Groups are Cayley tables ([`FiniteGroup`]), subsets are bit-vectors
//! ([`ElementSet`]), and every degree is an exact fraction ([`ExactRatio`]).

pub mod analysis;
pub mod cache;
pub mod corpus;
pub mod elements;
pub mod error;
pub mod families;
pub mod group;
pub mod io;
pub mod lattice;
pub mod permutizer;
pub mod ratio;
pub mod report;
pub mod theorems;

pub use analysis::{GroupAnalysis, SubgroupView};
pub use elements::ElementSet;
pub use error::{Error, Result};
pub use families::{parse_spec, Family, GroupSpec};
pub use group::{Embedded, FiniteGroup, Limits, Quotient};
pub use lattice::SubgroupLattice;
pub use permutizer::PermutizerProfile;
pub use ratio::ExactRatio;
pub use report::DegreeReport;
pub use theorems::{TheoremId, TheoremVerdict};
