//! Recognition of finite simple groups by their sets of element orders.
//!
//! Given a finite set `M` of positive integers, the pipeline in [`recognize`]
//! either names a nonabelian finite simple group `G` with `M ⊆ ω(G)` such that
//! no simple group with a different spectrum can have spectrum `ω(M)`, or
//! returns an empty verdict meaning that no nonabelian simple group has
//! spectrum `ω(M)`.
//!
//! The crate is organised bottom-up:
//!
//! - [`arith`]: exact big-integer number theory (gcd-based part extraction,
//!   primality, prime powers, cyclotomic values, greatest primitive divisors,
//!   prime-power roots of polynomial equations).
//! - [`spectra`]: minimal spectra, membership tests for alternating and
//!   classical groups, distinguishing elements and a generator registry.
//! - [`atomic`]: atomic divisors and the graph on them.
//! - [`splitgraph`]: split-graph recognition, cocliques and rank inversion.
//! - [`recognize`]: the orchestration.
//! - [`oracle`]: brute-force reference computations used for validation and
//!   fixture generation.
//! - [`cli`]: the `spectre` command line front end.

pub mod arith;
pub mod atomic;
pub mod cli;
pub mod data;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod recognize;
pub mod spectra;
pub mod splitgraph;

pub use arith::{PosInt, PrimePower};
pub use error::{Error, Result};
pub use recognize::{recognize, RecognitionOutcome, RecognizeConfig};
pub use spectra::{GroupName, MinSpec};
