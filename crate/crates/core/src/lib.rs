//! Mapping RDF graphs to property graphs with G2GML.
//!
//! A mapping document pairs property graph patterns with RDF graph
//! patterns. [`g2gml::parse_document`] reads one, [`mapping::run_mapping`]
//! evaluates it against a local graph or a SPARQL endpoint, and the
//! [`serialize`] module writes the resulting [`PropertyGraph`].

pub mod g2gml;
pub mod mapping;
pub mod pattern;
pub mod rdf;
pub mod serialize;
pub mod sparql;

pub use g2gml::{parse_document, MappingDocument, SyntaxError};
pub use mapping::{run_mapping, PgEdge, PgNode, PgValue, PropertyGraph, RunReport, Source};
pub use pattern::{BindingTable, GraphPattern, Variable};
pub use rdf::{load_ntriples, load_turtle_subset, PrefixMap, RdfGraph, RdfTerm};
pub use serialize::{EmissionTarget, Format};
pub use sparql::{EndpointConfig, GeneratedQuery};
