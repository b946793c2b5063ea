#![forbid(unsafe_code)]

//! Deterministic, replayable simulation of two finite-injury priority
//! constructions, driven by adversary-supplied enumerations.
//!
//! The crate builds a d.c.e. set `D` (every element enters at most once and
//! exits at most once) in stages, while an adversary feeds in c.e. sets and
//! Turing-functional axioms through a script. Two engines are provided:
//!
//! * [`run_isolation`] interleaves witness strategies (diagonalize against a
//!   functional applied to the Lachlan set of `D`) with agreement strategies
//!   (build a reduction from the Lachlan set, or force a permanent
//!   disagreement by restoring an old configuration of `D`).
//! * [`run_upper_isolation`] walks a linear priority tree of lowness nodes
//!   (preserve convergent computations over `D`) and reduction nodes (mirror
//!   a c.e. set into a functional over the adversary's oracle, using
//!   reserved "agitator" elements to force corrections).
//!
//! Every run is a pure function of its script: traces are JSON lines that
//! replay byte-for-byte, and [`replay_and_check`] re-executes a run and
//! checks every structural invariant and counting bound the constructions
//! promise — change counts, restorability at each forced disagreement,
//! bookkeeping-domain sizes, initialization counts against their closed-form
//! bounds, and exact agreement between incremental state and brute-force
//! recomputation.

pub mod dce;
pub mod digest;
pub mod error;
pub mod fresh;
pub mod functional;
pub mod fuzz;
pub mod isolation;
pub mod num;
pub mod script;
pub mod segment;
pub mod trace;
pub mod upper;
pub mod verifier;

pub use dce::{ChangeDirection, ChangeEvent, DceHistory, StageClock};
pub use digest::DigestChain;
pub use error::{EngineError, ScriptError, VerifyError};
pub use fresh::FreshAllocator;
pub use functional::{
    gamma_lookup, is_expansionary, length_of_agreement, Axiom, AxiomFunctional,
    ExpansionaryTracker, GammaEntry, GammaGraph, OracleView,
};
pub use fuzz::{generate_script, FuzzProfile};
pub use isolation::{run_isolation, IsolationSummary};
pub use script::{parse_script, AdversaryScript, Construction, FunctionalId, ScriptEvent};
pub use segment::Segment;
pub use trace::{
    CompareSink, EventPayload, HashSink, IoSink, TraceEmitter, TraceRecord, TraceSink, VecSink,
};
pub use upper::{run_upper_isolation, UpperSummary};
pub use verifier::{
    bounds_table, registered_checks, replay_and_check, BoundRow, CheckOutcome, CheckReport,
};

/// Version stamp written into trace headers; replays insist on an exact match
/// so that traces from a different build are never silently reinterpreted.
pub const ENGINE_VERSION: &str = concat!("finj-core/", env!("CARGO_PKG_VERSION"));

/// Trace format revision, bumped whenever record layout changes.
pub const TRACE_FORMAT: u32 = 1;

/// Stage-interval between chained state-hash checkpoint records.
pub const CHECKPOINT_EVERY: u64 = 1000;
