//! Combinatorics of Coxeter generating sets: defining graphs, an exact word
//! engine, Davis-complex wall geometry, markings, and a twist-descent engine
//! that reduces a twisted generating set back to the standard one.
//!
//! All computations over infinite groups are radius- or cutoff-bounded and
//! report inconclusiveness explicitly instead of guessing.

pub mod cox;
pub mod diagram;
pub mod error;
pub mod geometry;
pub mod marking;
pub mod twist;
pub mod word;

pub use cox::{CoxeterMatrix, Gen, Order, Subset};
pub use error::{Error, Result};
pub use geometry::{CellData, GeoVerdict, HalfSpace, Intersection, Side};
pub use marking::{Base, Marking, Move};
pub use twist::{
    Complexity, GeneratingSet, ReduceOutcome, ReduceStatus, ReduceStep, Status, TwistMove,
    VerifyReport,
};
pub use word::{GroupElement, OrderBound, Reflection, Word};

/// Default search bounds, overridable from the CLI.
pub mod defaults {
    pub const RADIUS: u32 = 8;
    pub const CUTOFF: u32 = 60;
    pub const MAX_STEPS: u32 = 32;
}
