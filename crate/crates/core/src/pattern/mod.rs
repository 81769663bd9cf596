//! Evaluation of the SPARQL fragment used by G2GML RDF patterns: triple
//! patterns with `;`/`,` abbreviations, `a`, `/` sequence paths,
//! `OPTIONAL { … }` and `FILTER` with `=`, `!=` and `lang()`.

mod ast;
mod bindings;
mod brute;
mod eval;
mod parser;
mod query;

use thiserror::Error;

pub use ast::{
    lang_matches, CompareOp, FilterExpr, GraphPattern, PatternElement, TriplePattern, VarOrTerm,
    Variable,
};
pub use bindings::{BindingTable, Row, Solution};
pub use brute::{brute_force_evaluate, CapacityExceeded, MAX_TRIPLES, MAX_VARIABLES};
pub use eval::evaluate;
pub use parser::{parse_rdf_pattern, parse_select_query};
pub use query::{compare_bindings, OrderKey, SelectQuery};

/// Positions are 1-based and relative to the parsed text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("line {line}, column {col}: {message}")]
    Syntax {
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

impl PatternError {
    pub fn position(&self) -> (usize, usize) {
        match self {
            PatternError::Syntax { line, col, .. }
            | PatternError::UnsupportedFeature { line, col, .. } => (*line, *col),
        }
    }
}
