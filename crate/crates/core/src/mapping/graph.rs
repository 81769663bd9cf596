use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use super::value::PgValue;

pub type Properties = BTreeMap<String, BTreeSet<PgValue>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PgNode {
    pub id: String,
    pub labels: BTreeSet<String>,
    pub properties: Properties,
}

/// A directed edge, identified by `(src, label, dst)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PgEdge {
    pub src: String,
    pub dst: String,
    pub label: String,
    pub properties: Properties,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("edge {src} -[{label}]-> {dst} references a missing node")]
pub struct DanglingEdge {
    pub src: String,
    pub label: String,
    pub dst: String,
}

/// Nodes keyed by id and edges keyed by `(src, label, dst)`; both iterate
/// in key order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PropertyGraph {
    nodes: BTreeMap<String, PgNode>,
    edges: BTreeMap<(String, String, String), PgEdge>,
}

fn merge_properties(into: &mut Properties, from: Properties) {
    for (k, vs) in from {
        if !vs.is_empty() {
            into.entry(k).or_default().extend(vs);
        }
    }
}

impl PropertyGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty() && self.edges.is_empty()
    }

    pub fn nodes(&self) -> impl DoubleEndedIterator<Item = &PgNode> + ExactSizeIterator {
        self.nodes.values()
    }

    pub fn edges(&self) -> impl DoubleEndedIterator<Item = &PgEdge> + ExactSizeIterator {
        self.edges.values()
    }

    pub fn node(&self, id: &str) -> Option<&PgNode> {
        self.nodes.get(id)
    }

    pub fn edge(&self, src: &str, label: &str, dst: &str) -> Option<&PgEdge> {
        self.edges
            .get(&(src.to_owned(), label.to_owned(), dst.to_owned()))
    }

    pub fn has_node_with_label(&self, id: &str, label: &str) -> bool {
        self.nodes.get(id).is_some_and(|n| n.labels.contains(label))
    }

    /// Adds `label` to the node `id`, creating the node if needed.
    pub fn upsert_node(&mut self, id: &str, label: &str) -> &mut PgNode {
        let node = self.nodes.entry(id.to_owned()).or_insert_with(|| PgNode {
            id: id.to_owned(),
            labels: BTreeSet::new(),
            properties: Properties::new(),
        });
        node.labels.insert(label.to_owned());
        node
    }

    /// Inserts `node`, merging labels and property values into an existing
    /// node with the same id. Empty value sets are dropped.
    pub fn insert_node(&mut self, node: PgNode) {
        match self.nodes.get_mut(&node.id) {
            Some(existing) => {
                existing.labels.extend(node.labels);
                merge_properties(&mut existing.properties, node.properties);
            }
            None => {
                let mut fresh = PgNode {
                    properties: Properties::new(),
                    ..node
                };
                merge_properties(&mut fresh.properties, node.properties);
                self.nodes.insert(fresh.id.clone(), fresh);
            }
        }
    }

    /// Inserts `edge`, merging properties into an existing edge with the
    /// same `(src, label, dst)`. Both endpoints must already be nodes.
    pub fn insert_edge(&mut self, edge: PgEdge) -> Result<&mut PgEdge, DanglingEdge> {
        if !self.nodes.contains_key(&edge.src) || !self.nodes.contains_key(&edge.dst) {
            return Err(DanglingEdge {
                src: edge.src,
                label: edge.label,
                dst: edge.dst,
            });
        }
        let key = (edge.src.clone(), edge.label.clone(), edge.dst.clone());
        let slot = self.edges.entry(key).or_insert_with(|| PgEdge {
            properties: Properties::new(),
            ..edge.clone()
        });
        merge_properties(&mut slot.properties, edge.properties);
        Ok(slot)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn text(s: &str) -> PgValue {
        PgValue::Text(s.into())
    }

    #[test]
    fn nodes_merge_by_id() {
        let mut g = PropertyGraph::new();
        g.upsert_node("http://e/a", "A")
            .properties
            .entry("k".into())
            .or_default()
            .insert(text("1"));
        g.insert_node(PgNode {
            id: "http://e/a".into(),
            labels: ["B".to_owned()].into(),
            properties: [
                ("k".to_owned(), [text("2")].into()),
                ("e".to_owned(), BTreeSet::new()),
            ]
            .into(),
        });
        assert_eq!(g.node_count(), 1);
        let n = g.node("http://e/a").unwrap();
        assert_eq!(n.labels.len(), 2);
        assert_eq!(n.properties["k"].len(), 2);
        assert!(!n.properties.contains_key("e"));
    }

    #[test]
    fn edges_need_endpoints_and_merge() {
        let mut g = PropertyGraph::new();
        let edge = |v: &str| PgEdge {
            src: "a".into(),
            dst: "b".into(),
            label: "r".into(),
            properties: [("w".to_owned(), [text(v)].into())].into(),
        };
        assert!(g.insert_edge(edge("1")).is_err());
        g.upsert_node("a", "N");
        g.upsert_node("b", "N");
        g.insert_edge(edge("1")).unwrap();
        g.insert_edge(edge("2")).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.edge("a", "r", "b").unwrap().properties["w"].len(), 2);
    }
}
