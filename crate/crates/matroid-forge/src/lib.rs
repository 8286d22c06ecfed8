//! Finite matroid toolkit with a certified intersection solver.
//!
//! The crate provides:
//!
//! - a matroid kernel over bit-indexed element sets: independence oracles,
//!   rank, span, circuits, minors, direct sums, duals, and an axiom checker
//!   ([`matroid`], [`mod@minor`], [`sum`], [`explicit`], [`axioms`]);
//! - concrete families: uniform, partition, graphic, and binary linear
//!   matroids ([`zoo`]);
//! - a constructive witness search for the intersection property of a
//!   matroid paired with a partition matroid: a common independent set
//!   `I = I_M ⊔ I_N` with `span_M(I_M) ∪ span_N(I_N) = E`, which also
//!   certifies that `I` is a maximum common independent set ([`intersect`]);
//! - independent verification through the classical augmenting-path
//!   intersection algorithm with min-max certificates, plus a brute-force
//!   oracle ([`edmonds`]);
//! - exhaustive enumeration of all labeled matroids on small grounds for
//!   property suites ([`enumerate`]);
//! - a seeded instance generator and the JSON instance format used by the
//!   command-line harness ([`instance`], [`generate`]).

pub mod axioms;
pub mod circuits;
pub mod config;
pub mod edmonds;
pub mod enumerate;
pub mod error;
pub mod explicit;
pub mod generate;
pub mod instance;
pub mod intersect;
pub mod matroid;
pub mod minor;
pub mod set;
pub mod sum;
pub mod zoo;

pub use axioms::{check_axioms, AxiomReport, AxiomViolation};
pub use circuits::circuits;
pub use config::{Thresholds, THRESHOLDS_ENV};
pub use edmonds::{
    brute_force_max_common, certify, max_common_independent, CertifiedOptimum, ExchangeGraph,
};
pub use error::{Error, Result};
pub use explicit::ExplicitMatroid;
pub use intersect::{
    condition_report, covering_base, extend_to_maximal, intersection_witness,
    intersection_witness_with, is_maximal_common, maximize_spanned_parts, spanned_parts,
    verify_witness, ConditionReport, IntersectOptions, SearchLog, TraceEvent, VerificationReport,
    Witness, WitnessRun,
};
pub use matroid::{CachedRank, Matroid};
pub use minor::{contract, delete, minor, restrict, MinorSpec};
pub use set::{GroundSet, PartSet, Subset, MAX_ELEMENTS};
pub use sum::{direct_sum, DirectSum};
pub use zoo::{
    base_exchange_with_uniform, classify_uniform, independent_or_spanning, BaseExchange,
    GraphicMatroid, LinearMatroidGf2, Part, PartitionMatroid, SetStatus, UniformClass,
    UniformMatroid,
};
