//! Finite groups, generalized Cayley graphs and their structural criteria.
//!
//! A generalized Cayley graph `GC(G, S, α)` has vertex set `G` and joins `g`
//! and `h` whenever `α(g⁻¹)h ∈ S`, for an involutory automorphism `α` and a
//! subset `S` avoiding `{α(g⁻¹)g}` with `α(S⁻¹) = S`.

pub mod automorphism;
pub mod catalog;
pub mod census;
pub mod criteria;
pub mod error;
pub mod gcs;
pub mod graph;
pub mod group;
pub mod notation;

pub use error::{Error, Result};
pub use group::{direct_product, ElementSet, FiniteGroup, GroupMap};
