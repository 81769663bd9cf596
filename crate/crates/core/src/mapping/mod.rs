//! Building property graphs from mapping bindings.
//!
//! A node is created for every IRI bound to a node variable and is keyed
//! by that IRI, so resources matched by several node mappings merge into
//! one node. Edges are only created between nodes that exist and carry the
//! labels named by the edge pattern.

mod build;
mod graph;
mod report;
mod run;
mod value;

use thiserror::Error;

pub use build::{build_edges, build_nodes};
pub use graph::{DanglingEdge, PgEdge, PgNode, Properties, PropertyGraph};
pub use report::{MappingKind, MappingStats, RunReport};
pub use run::{run_mapping, run_mapping_with, RunOptions, Source};
pub use value::{value_from_literal, Decimal, MalformedLexical, PgValue};

use crate::sparql::SparqlError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MappingError {
    #[error("mapping `{mapping}`")]
    Source {
        mapping: String,
        #[source]
        source: SparqlError,
    },
}
