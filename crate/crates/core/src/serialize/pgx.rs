use crate::mapping::{Properties, PropertyGraph};

fn writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new()
        .has_headers(false)
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new())
}

fn finish(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("writing to memory cannot fail")).expect("UTF-8")
}

/// `[key, type, value]` per property value, or one empty triple.
fn property_cells(props: &Properties) -> Vec<[String; 3]> {
    let cells: Vec<[String; 3]> = props
        .iter()
        .flat_map(|(k, vs)| {
            vs.iter()
                .map(move |v| [k.clone(), v.type_name().to_owned(), v.to_string()])
        })
        .collect();
    if cells.is_empty() {
        vec![Default::default()]
    } else {
        cells
    }
}

/// Vertex and edge flat files: one row per property value, keyed by node
/// id or by a 1-based edge number in edge order.
pub fn emit_pgx_flat(graph: &PropertyGraph) -> (String, String) {
    let mut w = writer();
    for n in graph.nodes() {
        let labels = n.labels.iter().cloned().collect::<Vec<_>>().join(";");
        for [k, t, v] in property_cells(&n.properties) {
            w.write_record([n.id.as_str(), &labels, &k, &t, &v])
                .unwrap();
        }
    }
    let vertices = finish(w);

    let mut w = writer();
    for (seq, e) in graph.edges().enumerate() {
        let seq = (seq + 1).to_string();
        for [k, t, v] in property_cells(&e.properties) {
            w.write_record([seq.as_str(), &e.src, &e.dst, &e.label, &k, &t, &v])
                .unwrap();
        }
    }
    (vertices, finish(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mapping::PgValue;

    #[test]
    fn empty_graph() {
        assert_eq!(
            emit_pgx_flat(&PropertyGraph::new()),
            (String::new(), String::new())
        );
    }

    #[test]
    fn row_per_value() {
        let mut g = PropertyGraph::new();
        g.upsert_node("b", "L");
        let n = g.upsert_node("a", "L");
        for i in 0..3 {
            n.properties
                .entry("k".into())
                .or_default()
                .insert(PgValue::Integer(i));
        }
        let (v, _) = emit_pgx_flat(&g);
        assert_eq!(
            v,
            "a,L,k,integer,0\na,L,k,integer,1\na,L,k,integer,2\nb,L,,,\n"
        );
    }
}
