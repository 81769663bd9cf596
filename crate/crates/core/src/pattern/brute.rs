//! Reference evaluator used as a test oracle. It shares no code with
//! `evaluate`: basic graph patterns are solved by enumerating variable
//! assignments over the graph's terms and checking each instantiated
//! triple by linear scan, and OPTIONAL/FILTER follow the textbook
//! join/left-join/filter definitions over explicit mapping sets.

use std::collections::BTreeMap;

use thiserror::Error;

use super::ast::{
    CompareOp, FilterExpr, GraphPattern, PatternElement, TriplePattern, VarOrTerm, Variable,
};
use super::bindings::BindingTable;
use crate::rdf::{RdfGraph, RdfTerm, Triple};

pub const MAX_TRIPLES: usize = 50;
pub const MAX_VARIABLES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("brute-force evaluation limited to {MAX_TRIPLES} triples and {MAX_VARIABLES} variables (got {triples} triples, {variables} variables)")]
pub struct CapacityExceeded {
    pub triples: usize,
    pub variables: usize,
}

type Mapping = BTreeMap<Variable, RdfTerm>;

pub fn brute_force_evaluate(
    pattern: &GraphPattern,
    graph: &RdfGraph,
) -> Result<BindingTable, CapacityExceeded> {
    let variables = pattern.all_variables().len();
    if graph.len() > MAX_TRIPLES || variables > MAX_VARIABLES {
        return Err(CapacityExceeded {
            triples: graph.len(),
            variables,
        });
    }
    let triples: Vec<&Triple> = graph.iter().collect();
    let mut universe: Vec<&RdfTerm> = Vec::new();
    for t in &triples {
        for term in [&t.subject, &t.predicate, &t.object] {
            if !universe.contains(&term) {
                universe.push(term);
            }
        }
    }
    let oracle = Oracle { triples, universe };
    let solutions = oracle.group(pattern, true);

    let mut table = BindingTable::new(pattern.visible_variables());
    for m in solutions {
        table.insert_solution(&m);
    }
    Ok(table)
}

struct Oracle<'g> {
    triples: Vec<&'g Triple>,
    universe: Vec<&'g RdfTerm>,
}

impl Oracle<'_> {
    fn group(&self, g: &GraphPattern, with_filters: bool) -> Vec<Mapping> {
        let mut current = vec![Mapping::new()];
        let mut pending: Vec<&TriplePattern> = Vec::new();
        for el in &g.elements {
            match el {
                PatternElement::Triple(tp) => pending.push(tp),
                PatternElement::Optional(q) => {
                    current = join(&current, &self.bgp(&pending));
                    pending.clear();
                    let right = self.group(q, false);
                    let cond: Vec<&FilterExpr> = q.filters().collect();
                    current = left_join(&current, &right, &cond);
                }
                PatternElement::Filter(_) => {}
            }
        }
        current = join(&current, &self.bgp(&pending));
        if with_filters {
            let filters: Vec<&FilterExpr> = g.filters().collect();
            current.retain(|m| filters.iter().all(|f| satisfies(f, m)));
        }
        current
    }

    /// All total assignments of the patterns' variables to universe terms
    /// under which every pattern instantiates to a triple of the graph.
    fn bgp(&self, patterns: &[&TriplePattern]) -> Vec<Mapping> {
        let mut vars: Vec<&Variable> = Vec::new();
        for tp in patterns {
            for pos in [&tp.subject, &tp.predicate, &tp.object] {
                if let VarOrTerm::Var(v) = pos {
                    if !vars.contains(&v) {
                        vars.push(v);
                    }
                }
            }
        }
        // a pattern can be checked once its last variable is assigned
        let mut ready: Vec<Vec<&TriplePattern>> = vec![Vec::new(); vars.len() + 1];
        for tp in patterns {
            let depth = [&tp.subject, &tp.predicate, &tp.object]
                .iter()
                .filter_map(|p| match p {
                    VarOrTerm::Var(v) => vars.iter().position(|x| x == &v).map(|i| i + 1),
                    VarOrTerm::Term(_) => None,
                })
                .max()
                .unwrap_or(0);
            ready[depth].push(tp);
        }
        let mut out = Vec::new();
        let mut assignment = Mapping::new();
        if ready[0].iter().all(|tp| self.in_graph(tp, &assignment)) {
            self.assign(&vars, &ready, 0, &mut assignment, &mut out);
        }
        out
    }

    fn assign(
        &self,
        vars: &[&Variable],
        ready: &[Vec<&TriplePattern>],
        depth: usize,
        assignment: &mut Mapping,
        out: &mut Vec<Mapping>,
    ) {
        if depth == vars.len() {
            out.push(assignment.clone());
            return;
        }
        for term in &self.universe {
            assignment.insert(vars[depth].clone(), (*term).clone());
            if ready[depth + 1]
                .iter()
                .all(|tp| self.in_graph(tp, assignment))
            {
                self.assign(vars, ready, depth + 1, assignment, out);
            }
        }
        assignment.remove(vars[depth]);
    }

    fn in_graph(&self, tp: &TriplePattern, m: &Mapping) -> bool {
        let inst = |p: &VarOrTerm| -> RdfTerm {
            match p {
                VarOrTerm::Term(t) => t.clone(),
                VarOrTerm::Var(v) => m[v].clone(),
            }
        };
        let (s, p, o) = (inst(&tp.subject), inst(&tp.predicate), inst(&tp.object));
        self.triples
            .iter()
            .any(|t| t.subject == s && t.predicate == p && t.object == o)
    }
}

fn compatible(a: &Mapping, b: &Mapping) -> bool {
    a.iter().all(|(k, v)| b.get(k).is_none_or(|w| w == v))
}

fn union(a: &Mapping, b: &Mapping) -> Mapping {
    let mut m = a.clone();
    m.extend(b.iter().map(|(k, v)| (k.clone(), v.clone())));
    m
}

fn join(left: &[Mapping], right: &[Mapping]) -> Vec<Mapping> {
    let mut out = Vec::new();
    for a in left {
        for b in right {
            if compatible(a, b) {
                out.push(union(a, b));
            }
        }
    }
    out
}

fn left_join(left: &[Mapping], right: &[Mapping], cond: &[&FilterExpr]) -> Vec<Mapping> {
    let mut out = Vec::new();
    for a in left {
        let mut extended = false;
        for b in right {
            if compatible(a, b) {
                let m = union(a, b);
                if cond.iter().all(|f| satisfies(f, &m)) {
                    out.push(m);
                    extended = true;
                }
            }
        }
        if !extended {
            out.push(a.clone());
        }
    }
    out
}

fn satisfies(f: &FilterExpr, m: &Mapping) -> bool {
    let value = |x: &VarOrTerm| -> Option<RdfTerm> {
        match x {
            VarOrTerm::Term(t) => Some(t.clone()),
            VarOrTerm::Var(v) => m.get(v).cloned(),
        }
    };
    match f {
        FilterExpr::Compare { left, op, right } => match (value(left), value(right)) {
            (Some(l), Some(r)) => {
                let equal = l.sparql_eq(&r);
                match op {
                    CompareOp::Eq => equal,
                    CompareOp::NotEq => !equal,
                }
            }
            _ => false,
        },
        FilterExpr::LangEquals { var, tag } => {
            let Some(RdfTerm::Literal(lit)) = m.get(var) else {
                return false;
            };
            let lang = lit.language().unwrap_or("").to_ascii_lowercase();
            let tag = tag.to_ascii_lowercase();
            if tag.contains('-') {
                lang == tag
            } else {
                lang.split('-').next() == Some(tag.as_str())
            }
        }
    }
}
