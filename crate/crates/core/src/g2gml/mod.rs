//! Parsing of G2GML mapping documents.
//!
//! A document is a list of `PREFIX` declarations followed by mapping
//! blocks. Each block is one unindented property graph pattern line and
//! the indented lines of its RDF pattern.

mod document;
mod pg_pattern;

use thiserror::Error;

pub use crate::rdf::PrefixMap;
pub use document::{
    expand_prefixed_name, parse_document, EdgeMappingDef, MappingDocument, MappingRef,
    NodeMappingDef, RdfPatternDef,
};
pub use pg_pattern::{
    parse_pg_edge_pattern, parse_pg_node_pattern, PgEdgePattern, PgNodePattern, PropertyMapping,
};

/// A parse or validation error at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct SyntaxError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl SyntaxError {
    pub(crate) fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        SyntaxError {
            line,
            column,
            message: message.into(),
        }
    }
}
