//! Independent oracles used to cross-check the main computations.

pub mod freudenthal;
