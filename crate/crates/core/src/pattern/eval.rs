use std::collections::HashMap;

use super::ast::{FilterExpr, GraphPattern, PatternElement, TriplePattern, VarOrTerm, Variable};
use super::bindings::BindingTable;
use crate::rdf::{RdfGraph, RdfTerm};

type Slots = Vec<Option<RdfTerm>>;

/// Evaluates `pattern` against `graph` with `SELECT DISTINCT *`
/// semantics. Triple patterns are joined left to right, each probing the
/// graph's indexes with the terms already bound. An OPTIONAL group is a
/// left join whose condition is the group's own top-level FILTERs; the
/// other FILTERs of a group apply after all of its elements. Internal path
/// variables are projected away.
pub fn evaluate(pattern: &GraphPattern, graph: &RdfGraph) -> BindingTable {
    let ev = Evaluator::new(pattern, graph);
    let rows = ev.group(pattern, vec![ev.empty_row()], true);
    let visible = pattern.visible_variables();
    let idx: Vec<usize> = visible.iter().map(|v| ev.slots[v]).collect();
    let mut table = BindingTable::new(visible);
    for row in rows {
        let projected: Vec<Option<RdfTerm>> = idx.iter().map(|&i| row[i].clone()).collect();
        table.insert(projected);
    }
    table
}

struct Evaluator<'g> {
    graph: &'g RdfGraph,
    slots: HashMap<Variable, usize>,
}

impl<'g> Evaluator<'g> {
    fn new(pattern: &GraphPattern, graph: &'g RdfGraph) -> Self {
        let slots = pattern
            .all_variables()
            .into_iter()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect();
        Evaluator { graph, slots }
    }

    fn empty_row(&self) -> Slots {
        vec![None; self.slots.len()]
    }

    fn group(&self, group: &GraphPattern, input: Vec<Slots>, apply_filters: bool) -> Vec<Slots> {
        let mut rows = input;
        for el in &group.elements {
            if rows.is_empty() {
                break;
            }
            match el {
                PatternElement::Triple(tp) => {
                    rows = rows.iter().flat_map(|r| self.extend(tp, r)).collect();
                }
                PatternElement::Optional(q) => rows = self.left_join(rows, q),
                PatternElement::Filter(_) => {}
            }
        }
        if apply_filters {
            let filters: Vec<&FilterExpr> = group.filters().collect();
            if !filters.is_empty() {
                rows.retain(|r| filters.iter().all(|f| self.holds(f, r)));
            }
        }
        rows
    }

    fn holds(&self, f: &FilterExpr, row: &Slots) -> bool {
        f.holds(|v| self.slots.get(v).and_then(|&i| row[i].as_ref()))
    }

    fn resolve<'a>(&self, x: &'a VarOrTerm, row: &'a Slots) -> Option<&'a RdfTerm> {
        match x {
            VarOrTerm::Term(t) => Some(t),
            VarOrTerm::Var(v) => row[self.slots[v]].as_ref(),
        }
    }

    /// Extensions of `row` by every triple matching `tp` under it.
    fn extend(&self, tp: &TriplePattern, row: &Slots) -> Vec<Slots> {
        let s = self.resolve(&tp.subject, row);
        let p = self.resolve(&tp.predicate, row);
        let o = self.resolve(&tp.object, row);
        let mut out = Vec::new();
        'triples: for t in self.graph.matches(s, p, o) {
            let mut next = row.clone();
            for (pos, term) in [
                (&tp.subject, &t.subject),
                (&tp.predicate, &t.predicate),
                (&tp.object, &t.object),
            ] {
                if let VarOrTerm::Var(v) = pos {
                    let slot = &mut next[self.slots[v]];
                    match slot {
                        // a variable repeated within one pattern must agree
                        Some(existing) if existing != term => continue 'triples,
                        Some(_) => {}
                        None => *slot = Some(term.clone()),
                    }
                }
            }
            out.push(next);
        }
        out
    }

    fn left_join(&self, left: Vec<Slots>, optional: &GraphPattern) -> Vec<Slots> {
        let right = self.group(optional, vec![self.empty_row()], false);
        let conditions: Vec<&FilterExpr> = optional.filters().collect();

        // Hash the right side on a variable it always binds.
        let always_bound: Vec<usize> = optional
            .variables()
            .iter()
            .map(|v| self.slots[v])
            .filter(|&i| right.iter().all(|r| r[i].is_some()))
            .collect();
        let mut index: HashMap<(usize, &RdfTerm), Vec<usize>> = HashMap::new();
        for (ri, r) in right.iter().enumerate() {
            for &slot in &always_bound {
                if let Some(t) = &r[slot] {
                    index.entry((slot, t)).or_default().push(ri);
                }
            }
        }
        let all: Vec<usize> = (0..right.len()).collect();

        let mut out = Vec::with_capacity(left.len());
        for l in left {
            let candidates = always_bound
                .iter()
                .find_map(|&slot| {
                    l[slot]
                        .as_ref()
                        .map(|t| index.get(&(slot, t)).map_or(&[][..], |v| v.as_slice()))
                })
                .unwrap_or(&all);
            let mut matched = false;
            for &ri in candidates {
                if let Some(merged) = merge(&l, &right[ri]) {
                    if conditions.iter().all(|f| self.holds(f, &merged)) {
                        out.push(merged);
                        matched = true;
                    }
                }
            }
            if !matched {
                out.push(l);
            }
        }
        out
    }
}

fn merge(a: &Slots, b: &Slots) -> Option<Slots> {
    let mut out = a.clone();
    for (slot, val) in out.iter_mut().zip(b) {
        match (slot.as_ref(), val) {
            (Some(x), Some(y)) if x != y => return None,
            (None, Some(y)) => *slot = Some(y.clone()),
            _ => {}
        }
    }
    Some(out)
}
