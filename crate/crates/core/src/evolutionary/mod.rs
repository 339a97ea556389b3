//! The (1+1) EA and GSEMO over label bitstrings.

mod archive;
mod ea;
mod gsemo;
mod mutation;
mod record;

pub use crate::rng::RngSeed;
pub use archive::{ArchiveEntry, ParetoArchive};
pub use ea::one_plus_one_ea;
pub use gsemo::{gsemo, gsemo_with_observer, GsemoOutcome};
pub use mutation::standard_mutation;
pub use record::{
    ratio_threshold, Event, EventKind, Init, Milestones, RatioTarget, RunOptions, RunRecord,
    Termination, Tracker,
};
