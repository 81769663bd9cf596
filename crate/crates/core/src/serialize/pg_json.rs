use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::mapping::{DanglingEdge, Decimal, PgEdge, PgNode, PgValue, Properties, PropertyGraph};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    nodes: Vec<Node>,
    edges: Vec<Edge>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Node {
    id: String,
    labels: Vec<String>,
    properties: BTreeMap<String, Vec<Value>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Edge {
    from: String,
    to: String,
    label: String,
    properties: BTreeMap<String, Vec<Value>>,
}

/// Strings, integers, floats and booleans map to JSON scalars; datetimes
/// are tagged objects so that they stay distinct from text.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Value {
    Text(String),
    Integer(i64),
    Decimal(f64),
    Boolean(bool),
    Tagged {
        #[serde(rename = "type")]
        kind: String,
        value: String,
    },
}

const DATETIME: &str = "datetime";

#[derive(Debug, Error)]
pub enum PgJsonError {
    #[error("invalid PG-JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid PG-JSON value: {0}")]
    Value(String),
    #[error(transparent)]
    Dangling(#[from] DanglingEdge),
}

fn to_json(props: &Properties) -> BTreeMap<String, Vec<Value>> {
    props
        .iter()
        .map(|(k, vs)| {
            let vs = vs
                .iter()
                .map(|v| match v {
                    PgValue::Text(s) => Value::Text(s.clone()),
                    PgValue::Integer(i) => Value::Integer(*i),
                    PgValue::Decimal(d) => Value::Decimal(d.get()),
                    PgValue::Boolean(b) => Value::Boolean(*b),
                    PgValue::DateTime(s) => Value::Tagged {
                        kind: DATETIME.into(),
                        value: s.clone(),
                    },
                })
                .collect();
            (k.clone(), vs)
        })
        .collect()
}

fn from_json(props: BTreeMap<String, Vec<Value>>) -> Result<Properties, PgJsonError> {
    let mut out = Properties::new();
    for (k, vs) in props {
        let mut set = BTreeSet::new();
        for v in vs {
            set.insert(match v {
                Value::Text(s) => PgValue::Text(s),
                Value::Integer(i) => PgValue::Integer(i),
                Value::Decimal(f) => {
                    PgValue::Decimal(Decimal::new(f).ok_or_else(|| {
                        PgJsonError::Value(format!("non-finite number for `{k}`"))
                    })?)
                }
                Value::Boolean(b) => PgValue::Boolean(b),
                Value::Tagged { kind, value } if kind == DATETIME => PgValue::DateTime(value),
                Value::Tagged { kind, .. } => {
                    return Err(PgJsonError::Value(format!(
                        "unknown value type `{kind}` for `{k}`"
                    )))
                }
            });
        }
        out.insert(k, set);
    }
    Ok(out)
}

/// Compact single-line document; arrays follow the graph's key order.
pub fn emit_pg_json(graph: &PropertyGraph) -> String {
    let doc = Document {
        nodes: graph
            .nodes()
            .map(|n| Node {
                id: n.id.clone(),
                labels: n.labels.iter().cloned().collect(),
                properties: to_json(&n.properties),
            })
            .collect(),
        edges: graph
            .edges()
            .map(|e| Edge {
                from: e.src.clone(),
                to: e.dst.clone(),
                label: e.label.clone(),
                properties: to_json(&e.properties),
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("serializing plain data cannot fail")
}

/// Reads a document written by [`emit_pg_json`].
pub fn read_pg_json(source: &str) -> Result<PropertyGraph, PgJsonError> {
    let doc: Document = serde_json::from_str(source)?;
    let mut g = PropertyGraph::new();
    for n in doc.nodes {
        g.insert_node(PgNode {
            id: n.id,
            labels: n.labels.into_iter().collect(),
            properties: from_json(n.properties)?,
        });
    }
    for e in doc.edges {
        g.insert_edge(PgEdge {
            src: e.from,
            dst: e.to,
            label: e.label,
            properties: from_json(e.properties)?,
        })?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graph() {
        assert_eq!(
            emit_pg_json(&PropertyGraph::new()),
            r#"{"nodes":[],"edges":[]}"#
        );
        assert!(read_pg_json(r#"{"nodes":[],"edges":[]}"#)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn every_value_kind_round_trips() {
        let mut g = PropertyGraph::new();
        let n = g.upsert_node("a", "L");
        let vals = [
            PgValue::Text("1".into()),
            PgValue::Text("true".into()),
            PgValue::Integer(-4),
            PgValue::Decimal(Decimal::new(1.0).unwrap()),
            PgValue::Decimal(Decimal::new(-0.0).unwrap()),
            PgValue::Boolean(true),
            PgValue::DateTime("2020-01-01".into()),
        ];
        n.properties
            .insert("k".into(), vals.iter().cloned().collect());
        let json = emit_pg_json(&g);
        assert!(
            json.contains(r#"{"type":"datetime","value":"2020-01-01"}"#),
            "{json}"
        );
        assert_eq!(read_pg_json(&json).unwrap(), g);
    }

    #[test]
    fn reader_rejects_bad_input() {
        assert!(read_pg_json("[]").is_err());
        let dangling =
            r#"{"nodes":[],"edges":[{"from":"a","to":"b","label":"r","properties":{}}]}"#;
        assert!(matches!(
            read_pg_json(dangling),
            Err(PgJsonError::Dangling(_))
        ));
        let tagged = r#"{"nodes":[{"id":"a","labels":["L"],"properties":{"k":[{"type":"point","value":"1"}]}}],"edges":[]}"#;
        assert!(matches!(read_pg_json(tagged), Err(PgJsonError::Value(_))));
    }
}
