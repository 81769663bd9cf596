//! RDF terms, an indexed in-memory triple set, and loaders for N-Triples
//! and a Turtle subset.

mod graph;
pub(crate) mod lexer;
mod ntriples;
mod prefix;
mod term;
mod turtle;

use thiserror::Error;

pub use graph::{RdfGraph, Triple};
pub use ntriples::load_ntriples;
pub use prefix::{PrefixError, PrefixMap};
pub use term::{is_absolute_iri, vocab, Literal, Numeric, RdfTerm};
pub use turtle::load_turtle_subset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RdfError {
    #[error("line {line}, column {col}: {message}")]
    Parse {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("line {line}, column {col}: unsupported feature: {feature}")]
    UnsupportedFeature {
        line: usize,
        col: usize,
        feature: String,
    },
}

impl RdfError {
    pub(crate) fn parse(line: usize, col: usize, message: impl Into<String>) -> Self {
        RdfError::Parse {
            line,
            col,
            message: message.into(),
        }
    }

    pub(crate) fn unsupported(line: usize, col: usize, feature: impl Into<String>) -> Self {
        RdfError::UnsupportedFeature {
            line,
            col,
            feature: feature.into(),
        }
    }
}
