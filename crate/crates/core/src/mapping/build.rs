use std::collections::BTreeMap;

use super::graph::{PgEdge, Properties, PropertyGraph};
use super::report::{MappingKind, MappingStats};
use super::value::value_from_literal;
use crate::g2gml::{EdgeMappingDef, NodeMappingDef, PropertyMapping};
use crate::pattern::{BindingTable, Variable};
use crate::rdf::RdfTerm;

/// Repeated warnings are counted rather than listed one by one.
#[derive(Default)]
struct Warnings(BTreeMap<String, usize>);

impl Warnings {
    fn add(&mut self, msg: String) {
        *self.0.entry(msg).or_default() += 1;
    }

    fn into_vec(self) -> Vec<String> {
        self.0
            .into_iter()
            .map(|(m, n)| {
                if n == 1 {
                    m
                } else {
                    format!("{m} ({n} times)")
                }
            })
            .collect()
    }
}

fn describe(term: Option<&RdfTerm>) -> &'static str {
    match term {
        None => "unbound",
        Some(RdfTerm::Literal(_)) => "a literal",
        Some(RdfTerm::BlankNode(_)) => "a blank node",
        Some(RdfTerm::Iri(_)) => "an IRI",
    }
}

fn properties(
    props: &[PropertyMapping],
    bindings: &BindingTable,
    row: &[Option<RdfTerm>],
    label: &str,
    warnings: &mut Warnings,
) -> Properties {
    let mut out = Properties::new();
    for p in props {
        match bindings.value(row, &p.var) {
            None => {}
            Some(RdfTerm::Literal(lit)) => {
                let (value, malformed) = value_from_literal(lit);
                if let Some(m) = malformed {
                    warnings.add(format!("{label}.{}: {m}", p.key));
                }
                out.entry(p.key.clone()).or_default().insert(value);
            }
            Some(other) => {
                warnings.add(format!(
                    "{label}.{}: skipped value that is {}",
                    p.key,
                    describe(Some(other))
                ));
            }
        }
    }
    out
}

fn iri<'a>(
    bindings: &BindingTable,
    row: &'a [Option<RdfTerm>],
    var: &Variable,
) -> Result<&'a str, &'static str> {
    match bindings.value(row, var) {
        Some(RdfTerm::Iri(i)) => Ok(i),
        other => Err(describe(other)),
    }
}

/// Adds one node per row whose node variable is bound to an IRI. Rows
/// with any other binding for it are skipped with a warning.
pub fn build_nodes(
    mapping: &NodeMappingDef,
    bindings: &BindingTable,
    graph: &mut PropertyGraph,
) -> MappingStats {
    let mut stats = MappingStats::new(MappingKind::Node, &mapping.label, bindings.len());
    let mut warnings = Warnings::default();
    for row in bindings.rows() {
        let id = match iri(bindings, row, &mapping.node_var) {
            Ok(id) => id,
            Err(what) => {
                warnings.add(format!(
                    "{}: skipped row whose {} is {what}",
                    mapping.label, mapping.node_var
                ));
                stats.dropped_rows += 1;
                continue;
            }
        };
        let props = properties(
            &mapping.properties,
            bindings,
            row,
            &mapping.label,
            &mut warnings,
        );
        let node = graph.upsert_node(id, &mapping.label);
        for (k, vs) in props {
            node.properties.entry(k).or_default().extend(vs);
        }
        stats.emitted_rows += 1;
    }
    stats.warnings = warnings.into_vec();
    stats
}

/// Adds an edge for each row whose endpoints are existing nodes carrying
/// the mapping's source and target labels. Other rows are dropped.
pub fn build_edges(
    mapping: &EdgeMappingDef,
    bindings: &BindingTable,
    graph: &mut PropertyGraph,
) -> MappingStats {
    let mut stats = MappingStats::new(MappingKind::Edge, &mapping.edge_label, bindings.len());
    let mut warnings = Warnings::default();
    for row in bindings.rows() {
        let endpoints = (
            iri(bindings, row, &mapping.src_var),
            iri(bindings, row, &mapping.dst_var),
        );
        let (Ok(src), Ok(dst)) = endpoints else {
            stats.dropped_rows += 1;
            continue;
        };
        if !graph.has_node_with_label(src, &mapping.src_label)
            || !graph.has_node_with_label(dst, &mapping.dst_label)
        {
            stats.dropped_rows += 1;
            continue;
        }
        let props = properties(
            &mapping.properties,
            bindings,
            row,
            &mapping.edge_label,
            &mut warnings,
        );
        graph
            .insert_edge(PgEdge {
                src: src.to_owned(),
                dst: dst.to_owned(),
                label: mapping.edge_label.clone(),
                properties: props,
            })
            .expect("endpoints checked above");
        stats.emitted_rows += 1;
    }
    stats.warnings = warnings.into_vec();
    stats
}
