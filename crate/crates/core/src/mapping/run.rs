use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use super::build::{build_edges, build_nodes};
use super::graph::PropertyGraph;
use super::report::RunReport;
use super::MappingError;
use crate::g2gml::{MappingDocument, MappingRef};
use crate::pattern::evaluate;
use crate::rdf::RdfGraph;
use crate::sparql::{execute_paged, generate_query, EndpointConfig, Fetched};

/// Where mapping patterns are evaluated.
#[derive(Debug, Clone, Copy)]
pub enum Source<'a> {
    Local(&'a RdfGraph),
    Endpoint(&'a EndpointConfig),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOptions {
    /// Upper bound on mappings evaluated at the same time.
    pub max_in_flight: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { max_in_flight: 4 }
    }
}

pub fn run_mapping(
    doc: &MappingDocument,
    source: Source<'_>,
) -> Result<(PropertyGraph, RunReport), MappingError> {
    run_mapping_with(doc, source, &RunOptions::default())
}

/// Builds the property graph for `doc`. All node mappings are evaluated
/// and applied before any edge mapping, so an edge sees every node. The
/// bindings of each phase are fetched concurrently and applied in document
/// order. Any source error aborts the run.
pub fn run_mapping_with(
    doc: &MappingDocument,
    source: Source<'_>,
    options: &RunOptions,
) -> Result<(PropertyGraph, RunReport), MappingError> {
    let mut graph = PropertyGraph::new();
    let mut report = RunReport::default();

    let node_refs: Vec<MappingRef<'_>> = doc.node_mappings.iter().map(MappingRef::from).collect();
    let tables = fetch_all(doc, &node_refs, source, options.max_in_flight)?;
    for (m, fetched) in doc.node_mappings.iter().zip(tables) {
        let mut stats = build_nodes(m, &fetched.table, &mut graph);
        stats.pages = fetched.pages;
        stats.warnings.splice(0..0, fetched.warnings);
        report.mappings.push(stats);
    }

    let edge_refs: Vec<MappingRef<'_>> = doc.edge_mappings.iter().map(MappingRef::from).collect();
    let tables = fetch_all(doc, &edge_refs, source, options.max_in_flight)?;
    for (m, fetched) in doc.edge_mappings.iter().zip(tables) {
        let mut stats = build_edges(m, &fetched.table, &mut graph);
        stats.pages = fetched.pages;
        stats.warnings.splice(0..0, fetched.warnings);
        report.mappings.push(stats);
    }

    report.nodes = graph.node_count();
    report.edges = graph.edge_count();
    Ok((graph, report))
}

fn fetch(
    doc: &MappingDocument,
    m: MappingRef<'_>,
    source: Source<'_>,
) -> Result<Fetched, MappingError> {
    match source {
        Source::Local(graph) => Ok(Fetched {
            table: evaluate(&m.rdf_pattern().pattern, graph).project(&m.projected_vars()),
            pages: 0,
            warnings: Vec::new(),
        }),
        Source::Endpoint(config) => execute_paged(&generate_query(m, &doc.prefixes), config)
            .map_err(|source| MappingError::Source {
                mapping: m.label().to_owned(),
                source,
            }),
    }
}

/// Evaluates `mappings` on up to `max_in_flight` threads; results keep
/// the input order and the first error in that order is returned.
fn fetch_all(
    doc: &MappingDocument,
    mappings: &[MappingRef<'_>],
    source: Source<'_>,
    max_in_flight: usize,
) -> Result<Vec<Fetched>, MappingError> {
    let workers = max_in_flight.max(1).min(mappings.len());
    if workers <= 1 {
        return mappings.iter().map(|m| fetch(doc, *m, source)).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<Result<Fetched, MappingError>>>> =
        mappings.iter().map(|_| Mutex::new(None)).collect();
    thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(m) = mappings.get(i) else { break };
                let result = fetch(doc, *m, source);
                *slots[i].lock().unwrap() = Some(result);
            });
        }
    });
    slots
        .into_iter()
        .map(|s| s.into_inner().unwrap().expect("every slot is filled"))
        .collect()
}
