use std::fmt::Write;

use crate::g2gml::MappingRef;
use crate::pattern::Variable;
use crate::rdf::PrefixMap;

/// A `SELECT DISTINCT` query derived from one mapping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedQuery {
    pub text: String,
    pub projected_vars: Vec<Variable>,
    /// Label of the node or edge mapping the query came from.
    pub origin: String,
}

/// Builds the query for `mapping`: the prefix block, a projection over the
/// variables of its PG pattern, and its RDF pattern verbatim as the
/// `WHERE` clause.
pub fn generate_query<'a>(
    mapping: impl Into<MappingRef<'a>>,
    prefixes: &PrefixMap,
) -> GeneratedQuery {
    let mapping = mapping.into();
    let projected_vars = mapping.projected_vars();
    let mut text = prefixes.to_sparql();
    text.push_str("SELECT DISTINCT");
    for v in &projected_vars {
        write!(text, " {v}").unwrap();
    }
    text.push_str("\nWHERE {\n");
    for line in mapping.rdf_pattern().text.lines() {
        writeln!(text, "    {line}").unwrap();
    }
    text.push_str("}\n");
    GeneratedQuery {
        text,
        projected_vars,
        origin: mapping.label().to_owned(),
    }
}

impl GeneratedQuery {
    /// The query restricted to one page, ordered over the projected
    /// variables so that consecutive pages do not overlap.
    pub fn page(&self, limit: usize, offset: usize) -> String {
        let mut text = self.text.clone();
        text.push_str("ORDER BY");
        for v in &self.projected_vars {
            write!(text, " {v}").unwrap();
        }
        write!(text, "\nLIMIT {limit}\nOFFSET {offset}\n").unwrap();
        text
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::g2gml::parse_document;
    use crate::pattern::parse_select_query;

    #[test]
    fn minimal_projection() {
        let doc = parse_document("PREFIX ex: <http://e/>\n(x:T)\n  ?x a ex:T .\n").unwrap();
        let q = generate_query(&doc.node_mappings[0], &doc.prefixes);
        assert_eq!(
            q.text,
            "PREFIX ex: <http://e/>\nSELECT DISTINCT ?x\nWHERE {\n    ?x a ex:T .\n}\n"
        );
        assert_eq!(q.origin, "T");
        let parsed = parse_select_query(&q.page(10, 20)).unwrap();
        assert_eq!((parsed.limit, parsed.offset), (Some(10), 20));
        assert_eq!(parsed.order_by.len(), 1);
    }
}
