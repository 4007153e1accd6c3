//! Exact combinatorics of q-characters of quantum affine algebras.
//!
//! The crate computes q-characters of fundamental representations of
//! `U_q(g^)` for every simple type by iterated rank-one expansions, certifies
//! them with screening operators and restriction maps, and derives
//! tensor-product reducibility and R-matrix pole sets from them.
//!
//! All spectral parameters live on a single lattice `a q^Z`; a factor
//! `Y_{i, a q^n}` is written `Y{i,n}`.

pub mod analysis;
pub mod character;
pub mod engine;
pub mod json;
pub mod monomial;
pub mod qlaurent;
pub mod restriction;
pub mod rootdata;
pub mod screening;
pub mod sl2;
pub mod verify;

/// Crate version, recorded alongside cached results.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub use analysis::{AnalysisError, FundamentalCharacters};
pub use character::{ColoredCharacter, QCharacter, SignedPoly};
pub use engine::{run, run_with, EngineError, Limits, RunOptions, TotalOrder};
pub use monomial::{Weight, YMonomial};
pub use qlaurent::QLaurent;
pub use rootdata::{LieType, RootData, RootDataError};
pub use verify::{verify_character, VerificationReport};
