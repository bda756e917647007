//! Weight combinatorics, block structure and resolution growth for the Lie
//! superalgebras osp(k|2), `k > 2`.
//!
//! Weights are written `λ = (λ0 | λ1, …, λm)` in the `δ, ε1, …, εm` basis with
//! `m = ⌊k/2⌋`, and all arithmetic is exact.

pub mod atypical;
pub(crate) mod decimal;
pub mod dims;
pub mod error;
pub mod growth;
pub mod resolution;
pub mod rootsys;
pub mod szops;
pub mod verify;
pub mod weyl;

pub use atypical::{atyp_of_simple, atypicality, AtypicalRoot, AtypicalityInfo, RootSign};
pub use error::{Error, Result};
pub use growth::{full_report, GrowthReport};
pub use resolution::{ProxyMode, ResolutionTerm, TrivialResolution};
pub use rootsys::{HalfInt, SuperWeight, WeightParseError};
pub use szops::{classify_block, lambda_i, BlockDescriptor, QuiverType};
