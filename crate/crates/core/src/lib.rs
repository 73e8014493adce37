//! Structural graph toolkit around induced minors and pathwidth obstructions:
//! parameterized graph families, induced-minor containment with verifiable
//! certificates, constellation machinery, and the posi/nega forest classifier.
//!
//! Determinism is a crate-wide contract: identical inputs produce identical
//! certificates, byte for byte.

pub mod bits;
pub mod classify;
pub mod constellation;
pub mod embed;
pub mod error;
pub mod families;
pub mod freetrees;
pub mod graph;
pub mod io;
pub mod model;
pub mod naive;
pub mod obstruct;
pub mod rooted;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use model::{verify_model, InducedMinorModel, ModelViolation, Verdict};
pub use solver::{SearchBudget, SearchOutcome, SearchResult};
