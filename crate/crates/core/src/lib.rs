//! Domination number and (signless) Laplacian spectral radius toolkit for
//! small graphs, with exhaustive verification of the extremal bounds
//! `mu <= n - gamma + 2` and `q <= 2(n - gamma)`.

pub mod canon;
pub mod domination;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod spectral;
pub mod structure;
pub mod theorems;

pub use canon::{canonical_form, canonical_graph, canonical_graph6, is_isomorphic};
pub use domination::{domination_number, is_dominating, DominationResult};
pub use error::{CheckError, Graph6Error, GraphError, SpectralError};
pub use graph::{Bipartition, Family, Graph, VertexSet};
pub use graph6::{emit_graph6, parse_graph6};
pub use spectral::{mu, q, SpectralSummary};
pub use theorems::{Analysis, TheoremId, TheoremVerdict};
