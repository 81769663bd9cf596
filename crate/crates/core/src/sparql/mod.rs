//! Query generation and execution against SPARQL endpoints.

mod client;
mod generate;
mod results;
#[cfg(feature = "stub-endpoint")]
pub mod stub;

use thiserror::Error;

pub use client::{execute, execute_paged, EndpointConfig, Fetched};
pub use generate::{generate_query, GeneratedQuery};
pub use results::{parse_results, write_results_json};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SparqlError {
    #[error("could not reach {url} after {attempts} attempt(s): {message}")]
    NetworkError {
        url: String,
        attempts: u32,
        message: String,
    },
    #[error("endpoint answered HTTP {status}: {excerpt}")]
    EndpointError { status: u16, excerpt: String },
    #[error("malformed results document at {path}: {message}")]
    MalformedResults { path: String, message: String },
    #[error("invalid endpoint configuration: {0}")]
    InvalidConfig(String),
}
