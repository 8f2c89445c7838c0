//! Finite root systems, Weyl groups and the weight combinatorics of
//! bipartite reduced words.

mod cartan;
mod verify;
mod weights;
mod weyl;

pub use cartan::{CartanDatum, CartanType};
pub use verify::{verify_section1, CheckResult, CheckStatus, VerificationReport, CHECK_NAMES};
pub use weights::{ChartWeights, WeightSets};
pub use weyl::{Weight, WeylElement, Word};
