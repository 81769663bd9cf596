use std::fmt::Write;

use crate::mapping::{PgValue, Properties, PropertyGraph};

fn quoted(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn value(v: &PgValue) -> String {
    match v {
        PgValue::Text(s) | PgValue::DateTime(s) => quoted(s),
        other => other.to_string(),
    }
}

fn write_properties(out: &mut String, props: &Properties) {
    for (k, vs) in props {
        for v in vs {
            write!(out, " {k}:{}", value(v)).unwrap();
        }
    }
}

/// One line per node, then one per edge, both in key order.
pub fn emit_pg_text(graph: &PropertyGraph) -> String {
    let mut out = String::new();
    for n in graph.nodes() {
        out.push_str(&quoted(&n.id));
        for l in &n.labels {
            write!(out, " :{l}").unwrap();
        }
        write_properties(&mut out, &n.properties);
        out.push('\n');
    }
    for e in graph.edges() {
        write!(out, "{} -> {} :{}", quoted(&e.src), quoted(&e.dst), e.label).unwrap();
        write_properties(&mut out, &e.properties);
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graph() {
        assert_eq!(emit_pg_text(&PropertyGraph::new()), "");
    }

    #[test]
    fn labels_sorted_and_values_typed() {
        let mut g = PropertyGraph::new();
        g.upsert_node("n\"1", "B");
        let n = g.upsert_node("n\"1", "A");
        n.properties
            .entry("k".into())
            .or_default()
            .insert(PgValue::Integer(3));
        n.properties
            .entry("k".into())
            .or_default()
            .insert(PgValue::Text("x".into()));
        n.properties
            .entry("b".into())
            .or_default()
            .insert(PgValue::Boolean(false));
        assert_eq!(emit_pg_text(&g), "\"n\\\"1\" :A :B b:false k:\"x\" k:3\n");
    }
}
