//! Polynomial permutation groups of the residue rings `Z/n`.
//!
//! Permutations compose left to right: `f.then(g)` applies `f` first.

pub mod analysis;
pub mod carlitz;
pub mod error;
pub mod fractal;
pub mod interpolate;
pub mod perm;
pub mod pfb;
pub mod poly;
pub mod ring;
pub mod suites;
pub mod table;

pub use analysis::{analyze, AnalyzeOptions, GroupReport};
pub use carlitz::{CarlitzJet, Gates};
pub use error::{Error, Result};
pub use perm::{compose, PermGroup, Permutation};
pub use pfb::pfb_upper_bound;
pub use poly::{ParseMode, ResiduePoly};
pub use ring::{PrimePower, RingSpec};
pub use suites::{run_suite, Suite, SuiteReport};
pub use table::FunctionTable;
