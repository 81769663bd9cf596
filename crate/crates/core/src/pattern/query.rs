use std::cmp::Ordering;

use super::ast::{GraphPattern, Variable};
use super::bindings::BindingTable;
use super::eval::evaluate;
use crate::rdf::{PrefixMap, RdfGraph, RdfTerm};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderKey {
    pub var: Variable,
    pub descending: bool,
}

/// A parsed `SELECT` query over the supported pattern fragment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelectQuery {
    pub prefixes: PrefixMap,
    pub distinct: bool,
    /// `None` for `SELECT *`.
    pub projection: Option<Vec<Variable>>,
    pub pattern: GraphPattern,
    pub order_by: Vec<OrderKey>,
    pub limit: Option<usize>,
    pub offset: usize,
}

impl SelectQuery {
    pub fn projected_variables(&self) -> Vec<Variable> {
        self.projection
            .clone()
            .unwrap_or_else(|| self.pattern.visible_variables())
    }

    /// Runs the query locally. Results are always distinct; ordering and
    /// slicing apply after projection.
    pub fn evaluate(&self, graph: &RdfGraph) -> BindingTable {
        let vars = self.projected_variables();
        let table = evaluate(&self.pattern, graph).project(&vars);
        if self.order_by.is_empty() && self.offset == 0 && self.limit.is_none() {
            return table;
        }
        let keys: Vec<(usize, bool)> = self
            .order_by
            .iter()
            .filter_map(|k| table.column_index(&k.var).map(|i| (i, k.descending)))
            .collect();
        let mut rows: Vec<&[Option<RdfTerm>]> = table.rows().collect();
        rows.sort_by(|a, b| {
            for &(i, desc) in &keys {
                let ord = compare_bindings(a[i].as_ref(), b[i].as_ref());
                let ord = if desc { ord.reverse() } else { ord };
                if ord != Ordering::Equal {
                    return ord;
                }
            }
            Ordering::Equal
        });
        let mut out = BindingTable::new(vars);
        let take = self.limit.unwrap_or(usize::MAX);
        for row in rows.into_iter().skip(self.offset).take(take) {
            out.insert(row.to_vec());
        }
        out
    }
}

/// Total order used by ORDER BY: unbound, then blank nodes, IRIs and
/// literals, each group ordered by its lexical content.
pub fn compare_bindings(a: Option<&RdfTerm>, b: Option<&RdfTerm>) -> Ordering {
    fn rank(t: Option<&RdfTerm>) -> u8 {
        match t {
            None => 0,
            Some(RdfTerm::BlankNode(_)) => 1,
            Some(RdfTerm::Iri(_)) => 2,
            Some(RdfTerm::Literal(_)) => 3,
        }
    }
    rank(a).cmp(&rank(b)).then_with(|| match (a, b) {
        (Some(RdfTerm::Literal(x)), Some(RdfTerm::Literal(y))) => x
            .lexical()
            .cmp(y.lexical())
            .then_with(|| x.datatype().cmp(y.datatype()))
            .then_with(|| x.language().cmp(&y.language())),
        _ => a.cmp(&b),
    })
}
