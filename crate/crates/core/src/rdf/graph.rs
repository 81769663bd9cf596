use std::collections::HashMap;
use std::fmt;

use indexmap::IndexSet;

use super::term::RdfTerm;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    pub subject: RdfTerm,
    pub predicate: RdfTerm,
    pub object: RdfTerm,
}

impl Triple {
    /// Builds a triple, rejecting literal subjects and non-IRI predicates.
    pub fn new(subject: RdfTerm, predicate: RdfTerm, object: RdfTerm) -> Option<Self> {
        if subject.is_literal() || !predicate.is_iri() {
            return None;
        }
        Some(Triple {
            subject,
            predicate,
            object,
        })
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} .", self.subject, self.predicate, self.object)
    }
}

/// An in-memory triple set with subject, predicate and object indexes.
#[derive(Debug, Clone, Default)]
pub struct RdfGraph {
    triples: IndexSet<Triple>,
    by_subject: HashMap<RdfTerm, Vec<usize>>,
    by_predicate: HashMap<RdfTerm, Vec<usize>>,
    by_object: HashMap<RdfTerm, Vec<usize>>,
}

impl RdfGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a triple; returns false if it was already present.
    pub fn insert(&mut self, triple: Triple) -> bool {
        if self.triples.contains(&triple) {
            return false;
        }
        let idx = self.triples.len();
        self.by_subject
            .entry(triple.subject.clone())
            .or_default()
            .push(idx);
        self.by_predicate
            .entry(triple.predicate.clone())
            .or_default()
            .push(idx);
        self.by_object
            .entry(triple.object.clone())
            .or_default()
            .push(idx);
        self.triples.insert(triple);
        true
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn contains(&self, triple: &Triple) -> bool {
        self.triples.contains(triple)
    }

    /// Triples in insertion order.
    pub fn iter(&self) -> impl Iterator<Item = &Triple> {
        self.triples.iter()
    }

    /// All triples agreeing with every bound position. Probes the
    /// smallest index among the bound positions.
    pub fn matches<'a>(
        &'a self,
        subject: Option<&'a RdfTerm>,
        predicate: Option<&'a RdfTerm>,
        object: Option<&'a RdfTerm>,
    ) -> Box<dyn Iterator<Item = &'a Triple> + 'a> {
        let candidates = [
            subject.map(|t| self.by_subject.get(t)),
            predicate.map(|t| self.by_predicate.get(t)),
            object.map(|t| self.by_object.get(t)),
        ];
        let mut best: Option<&Vec<usize>> = None;
        for c in candidates.into_iter().flatten() {
            match c {
                // a bound position with no index entry: nothing can match
                None => return Box::new(std::iter::empty()),
                Some(list) if best.is_none_or(|b| list.len() < b.len()) => best = Some(list),
                Some(_) => {}
            }
        }
        let agrees = move |t: &&Triple| {
            subject.is_none_or(|s| &t.subject == s)
                && predicate.is_none_or(|p| &t.predicate == p)
                && object.is_none_or(|o| &t.object == o)
        };
        match best {
            Some(list) => Box::new(list.iter().map(|&i| &self.triples[i]).filter(agrees)),
            None => Box::new(self.triples.iter()),
        }
    }

    /// Every distinct term occurring in any position.
    pub fn terms(&self) -> IndexSet<&RdfTerm> {
        let mut out = IndexSet::new();
        for t in &self.triples {
            out.insert(&t.subject);
            out.insert(&t.predicate);
            out.insert(&t.object);
        }
        out
    }

    /// Serializes as N-Triples in sorted order.
    pub fn to_ntriples(&self) -> String {
        let mut sorted: Vec<&Triple> = self.triples.iter().collect();
        sorted.sort();
        let mut out = String::new();
        for t in sorted {
            out.push_str(&t.to_string());
            out.push('\n');
        }
        out
    }
}

impl PartialEq for RdfGraph {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len() && self.triples.iter().all(|t| other.contains(t))
    }
}

impl Eq for RdfGraph {}

impl FromIterator<Triple> for RdfGraph {
    fn from_iter<I: IntoIterator<Item = Triple>>(iter: I) -> Self {
        let mut g = RdfGraph::new();
        for t in iter {
            g.insert(t);
        }
        g
    }
}

impl Extend<Triple> for RdfGraph {
    fn extend<I: IntoIterator<Item = Triple>>(&mut self, iter: I) {
        for t in iter {
            self.insert(t);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rdf::term::Literal;
    use proptest::prelude::*;

    fn t(s: u8, p: u8, o: u8) -> Triple {
        Triple::new(
            RdfTerm::iri(format!("http://e/s{s}")),
            RdfTerm::iri(format!("http://e/p{p}")),
            if o.is_multiple_of(2) {
                RdfTerm::iri(format!("http://e/s{o}"))
            } else {
                Literal::plain(format!("v{o}")).into()
            },
        )
        .unwrap()
    }

    #[test]
    fn rejects_literal_subject() {
        let lit: RdfTerm = Literal::plain("x").into();
        assert!(Triple::new(lit.clone(), RdfTerm::iri("http://e/p"), lit).is_none());
        assert!(Triple::new(
            RdfTerm::iri("http://e/a"),
            RdfTerm::blank("b"),
            RdfTerm::iri("http://e/c")
        )
        .is_none());
    }

    #[test]
    fn empty_graph_matches_nothing() {
        let g = RdfGraph::new();
        assert_eq!(g.matches(None, None, None).count(), 0);
        let p = RdfTerm::iri("http://e/p0");
        assert_eq!(g.matches(None, Some(&p), None).count(), 0);
    }

    #[test]
    fn unbound_pattern_returns_everything() {
        let g: RdfGraph = [t(1, 0, 2), t(2, 1, 3), t(1, 0, 2)].into_iter().collect();
        assert_eq!(g.len(), 2);
        assert_eq!(g.matches(None, None, None).count(), 2);
    }

    proptest! {
        #[test]
        fn matches_equals_linear_scan(
            triples in prop::collection::vec((0u8..5, 0u8..3, 0u8..6), 0..40),
            s in prop::option::of(0u8..5),
            p in prop::option::of(0u8..3),
            o in prop::option::of(0u8..6),
        ) {
            let g: RdfGraph = triples.iter().map(|&(s, p, o)| t(s, p, o)).collect();
            let probe = t(s.unwrap_or(0), p.unwrap_or(0), o.unwrap_or(0));
            let (sb, pb, ob) = (
                s.map(|_| &probe.subject),
                p.map(|_| &probe.predicate),
                o.map(|_| &probe.object),
            );
            let mut got: Vec<&Triple> = g.matches(sb, pb, ob).collect();
            let mut expected: Vec<&Triple> = g
                .iter()
                .filter(|t| sb.is_none_or(|x| &t.subject == x)
                    && pb.is_none_or(|x| &t.predicate == x)
                    && ob.is_none_or(|x| &t.object == x))
                .collect();
            got.sort();
            expected.sort();
            prop_assert_eq!(got, expected);
        }
    }
}
