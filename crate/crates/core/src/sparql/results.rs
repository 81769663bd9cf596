//! SPARQL 1.1 query results in JSON.

use serde_json::{json, Map, Value};

use super::SparqlError;
use crate::pattern::{BindingTable, Variable};
use crate::rdf::{vocab, Literal, RdfTerm};

fn malformed(path: impl Into<String>, message: impl Into<String>) -> SparqlError {
    SparqlError::MalformedResults {
        path: path.into(),
        message: message.into(),
    }
}

/// Reads a results document into a table whose columns are `head.vars`.
/// Variables absent from a binding are unbound in its row.
pub fn parse_results(payload: &[u8]) -> Result<BindingTable, SparqlError> {
    let doc: Value = serde_json::from_slice(payload).map_err(|e| malformed("$", e.to_string()))?;
    let vars = doc
        .pointer("/head/vars")
        .ok_or_else(|| malformed("head.vars", "missing"))?
        .as_array()
        .ok_or_else(|| malformed("head.vars", "expected an array"))?;
    let mut columns = Vec::with_capacity(vars.len());
    for (i, v) in vars.iter().enumerate() {
        let name = v
            .as_str()
            .ok_or_else(|| malformed(format!("head.vars[{i}]"), "expected a string"))?;
        columns.push(Variable::new(name));
    }
    let bindings = doc
        .pointer("/results/bindings")
        .ok_or_else(|| malformed("results.bindings", "missing"))?
        .as_array()
        .ok_or_else(|| malformed("results.bindings", "expected an array"))?;

    let mut table = BindingTable::new(columns.clone());
    for (i, b) in bindings.iter().enumerate() {
        let path = format!("results.bindings[{i}]");
        let obj = b
            .as_object()
            .ok_or_else(|| malformed(&path, "expected an object"))?;
        let mut row: Vec<Option<RdfTerm>> = vec![None; columns.len()];
        for (slot, var) in row.iter_mut().zip(&columns) {
            if let Some(value) = obj.get(var.name()) {
                *slot = Some(term(value, &format!("{path}.{}", var.name()))?);
            }
        }
        table.insert(row);
    }
    Ok(table)
}

fn term(value: &Value, path: &str) -> Result<RdfTerm, SparqlError> {
    let obj = value
        .as_object()
        .ok_or_else(|| malformed(path, "expected an object"))?;
    let field = |name: &str| -> Result<Option<&str>, SparqlError> {
        match obj.get(name) {
            None => Ok(None),
            Some(Value::String(s)) => Ok(Some(s)),
            Some(_) => Err(malformed(format!("{path}.{name}"), "expected a string")),
        }
    };
    let kind = field("type")?.ok_or_else(|| malformed(format!("{path}.type"), "missing"))?;
    let lexical = field("value")?.ok_or_else(|| malformed(format!("{path}.value"), "missing"))?;
    match kind {
        "uri" => Ok(RdfTerm::iri(lexical)),
        "bnode" => Ok(RdfTerm::blank(lexical)),
        "literal" | "typed-literal" => {
            let lit = match (field("xml:lang")?, field("datatype")?) {
                (Some(lang), _) if !lang.is_empty() => Literal::lang(lexical, lang),
                (_, Some(dt)) => Literal::typed(lexical, dt),
                _ => Literal::plain(lexical),
            };
            Ok(RdfTerm::Literal(lit))
        }
        other => Err(malformed(
            format!("{path}.type"),
            format!("unknown term type `{other}`"),
        )),
    }
}

/// Writes `table` as a results document. Unbound variables are omitted
/// from their binding objects.
pub fn write_results_json(table: &BindingTable) -> String {
    let vars: Vec<&str> = table.columns().iter().map(|v| v.name()).collect();
    let bindings: Vec<Value> = table
        .rows()
        .map(|row| {
            let mut obj = Map::new();
            for (var, value) in table.columns().iter().zip(row) {
                if let Some(t) = value {
                    obj.insert(var.name().to_owned(), term_json(t));
                }
            }
            Value::Object(obj)
        })
        .collect();
    json!({ "head": { "vars": vars }, "results": { "bindings": bindings } }).to_string()
}

fn term_json(t: &RdfTerm) -> Value {
    match t {
        RdfTerm::Iri(i) => json!({ "type": "uri", "value": i }),
        RdfTerm::BlankNode(b) => json!({ "type": "bnode", "value": b }),
        RdfTerm::Literal(l) => {
            let mut obj = json!({ "type": "literal", "value": l.lexical() });
            if let Some(lang) = l.language() {
                obj["xml:lang"] = json!(lang);
            } else if l.datatype() != vocab::XSD_STRING {
                obj["datatype"] = json!(l.datatype());
            }
            obj
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_row_two_columns() {
        let doc = r#"{"head":{"vars":["mus","nam"]},"results":{"bindings":[
            {"mus":{"type":"uri","value":"http://e/A"},"nam":{"type":"literal","value":"Alice","xml:lang":"ja"}}]}}"#;
        let t = parse_results(doc.as_bytes()).unwrap();
        assert_eq!(t.columns(), &[Variable::new("mus"), Variable::new("nam")]);
        let row = t.rows().next().unwrap();
        assert_eq!(row[0], Some(RdfTerm::iri("http://e/A")));
        assert_eq!(row[1], Some(Literal::lang("Alice", "ja").into()));
    }

    #[test]
    fn empty_and_partial_bindings() {
        let t = parse_results(br#"{"head":{"vars":["a","b"]},"results":{"bindings":[]}}"#).unwrap();
        assert!(t.is_empty());
        assert_eq!(t.columns().len(), 2);
        let t = parse_results(br#"{"head":{"vars":["a","b"]},"results":{"bindings":[{"a":{"type":"bnode","value":"x"}}]}}"#)
            .unwrap();
        assert_eq!(t.rows().next().unwrap()[1], None);
    }

    #[test]
    fn typed_literals() {
        let doc = br#"{"head":{"vars":["n"]},"results":{"bindings":[
            {"n":{"type":"typed-literal","value":"5","datatype":"http://www.w3.org/2001/XMLSchema#integer"}}]}}"#;
        let t = parse_results(doc).unwrap();
        assert_eq!(
            t.rows().next().unwrap()[0],
            Some(Literal::typed("5", vocab::XSD_INTEGER).into())
        );
    }

    #[test]
    fn malformed_paths() {
        let path = |doc: &str| match parse_results(doc.as_bytes()) {
            Err(SparqlError::MalformedResults { path, .. }) => path,
            other => panic!("{other:?}"),
        };
        assert_eq!(path("{"), "$");
        assert_eq!(path(r#"{"results":{"bindings":[]}}"#), "head.vars");
        assert_eq!(
            path(r#"{"head":{"vars":[1]},"results":{"bindings":[]}}"#),
            "head.vars[0]"
        );
        assert_eq!(
            path(r#"{"head":{"vars":["x"]},"results":{"bindings":[{},{"x":{"value":"v"}}]}}"#),
            "results.bindings[1].x.type"
        );
        assert_eq!(
            path(
                r#"{"head":{"vars":["x"]},"results":{"bindings":[{"x":{"type":"pair","value":"v"}}]}}"#
            ),
            "results.bindings[0].x.type"
        );
    }

    #[test]
    fn write_then_parse() {
        let mut t = BindingTable::new(vec![Variable::new("a"), Variable::new("b")]);
        t.insert(vec![Some(RdfTerm::iri("http://e/x")), None]);
        t.insert(vec![
            Some(RdfTerm::blank("b0")),
            Some(Literal::typed("1.5", vocab::XSD_DECIMAL).into()),
        ]);
        t.insert(vec![None, Some(Literal::plain("s").into())]);
        let back = parse_results(write_results_json(&t).as_bytes()).unwrap();
        assert!(back.same_solutions(&t));
        assert_eq!(back.columns(), t.columns());
    }
}
