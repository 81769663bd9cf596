use std::collections::BTreeSet;

use crate::mapping::{Properties, PropertyGraph};

fn writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new())
}

fn finish(w: csv::Writer<Vec<u8>>) -> String {
    let bytes = w.into_inner().expect("writing to memory cannot fail");
    String::from_utf8(bytes).expect("csv output of UTF-8 input is UTF-8")
}

/// Multiple values share one cell separated by `;`. Inside a value `\`
/// and `;` are escaped with a backslash.
fn join(values: impl Iterator<Item = String>) -> String {
    values
        .map(|v| v.replace('\\', "\\\\").replace(';', "\\;"))
        .collect::<Vec<_>>()
        .join(";")
}

fn cells(keys: &BTreeSet<&String>, props: &Properties) -> Vec<String> {
    keys.iter()
        .map(|k| {
            props
                .get(*k)
                .map_or_else(String::new, |vs| join(vs.iter().map(|v| v.to_string())))
        })
        .collect()
}

/// Node and relationship files for the Neo4j bulk importer.
pub fn emit_neo4j_csv(graph: &PropertyGraph) -> (String, String) {
    let node_keys: BTreeSet<&String> = graph.nodes().flat_map(|n| n.properties.keys()).collect();
    let mut w = writer();
    let header: Vec<&str> = [":ID", ":LABEL"]
        .into_iter()
        .chain(node_keys.iter().map(|k| k.as_str()))
        .collect();
    w.write_record(&header).unwrap();
    for n in graph.nodes() {
        let mut rec = vec![n.id.clone(), join(n.labels.iter().cloned())];
        rec.extend(cells(&node_keys, &n.properties));
        w.write_record(&rec).unwrap();
    }
    let nodes = finish(w);

    let edge_keys: BTreeSet<&String> = graph.edges().flat_map(|e| e.properties.keys()).collect();
    let mut w = writer();
    let header: Vec<&str> = [":START_ID", ":END_ID", ":TYPE"]
        .into_iter()
        .chain(edge_keys.iter().map(|k| k.as_str()))
        .collect();
    w.write_record(&header).unwrap();
    for e in graph.edges() {
        let mut rec = vec![e.src.clone(), e.dst.clone(), e.label.clone()];
        rec.extend(cells(&edge_keys, &e.properties));
        w.write_record(&rec).unwrap();
    }
    (nodes, finish(w))
}

/// Inverse of the cell encoding. A cell holding one empty string reads
/// back as no values.
pub fn split_cell(cell: &str) -> Vec<String> {
    if cell.is_empty() {
        return Vec::new();
    }
    let mut out = vec![String::new()];
    let mut chars = cell.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            ';' => out.push(String::new()),
            '\\' => {
                let escaped = chars.next().unwrap_or('\\');
                out.last_mut().unwrap().push(escaped);
            }
            c => out.last_mut().unwrap().push(c),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mapping::PgValue;

    #[test]
    fn empty_graph_has_headers_only() {
        assert_eq!(
            emit_neo4j_csv(&PropertyGraph::new()),
            (
                ":ID,:LABEL\n".to_owned(),
                ":START_ID,:END_ID,:TYPE\n".to_owned()
            )
        );
    }

    #[test]
    fn quoting_and_joining() {
        let mut g = PropertyGraph::new();
        g.upsert_node("b", "Y");
        let n = g.upsert_node("a", "X");
        n.labels.insert("W".into());
        let vs = n.properties.entry("name".into()).or_default();
        vs.insert(PgValue::Text("Chigasaki, Kanagawa".into()));
        vs.insert(PgValue::Text("x;y\\".into()));
        let (nodes, _) = emit_neo4j_csv(&g);
        assert_eq!(
            nodes,
            ":ID,:LABEL,name\na,W;X,\"Chigasaki, Kanagawa;x\\;y\\\\\"\nb,Y,\n"
        );
        assert_eq!(
            split_cell("Chigasaki, Kanagawa;x\\;y\\\\"),
            ["Chigasaki, Kanagawa", "x;y\\"]
        );
    }
}
