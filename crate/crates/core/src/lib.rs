//! Matroid oracles, common-base packing reductions, brute-force solvers and
//! certificate verifiers.

pub mod adversary;
pub mod axioms;
pub mod certificate;
pub mod classic;
pub mod cnf;
pub mod constructions;
pub mod error;
pub mod field;
pub mod formats;
pub mod gadget;
pub mod graph;
pub mod matroid;
pub mod reductions;
pub mod set;
pub mod solvers;

pub use error::{Error, Result};
pub use matroid::{with_query_log, Matroid, QueryLog};
pub use set::{ElementSet, GroundSet, DEFAULT_EXHAUSTIVE_CAP};
