//! Fixtures and random inputs shared by the integration tests.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use g2pg_core::mapping::{PgEdge, PgNode, PgValue, PropertyGraph};
use g2pg_core::rdf::{Literal, PrefixMap, RdfGraph, RdfTerm, Triple};
use rand::{Rng, RngExt};

pub const XSD_INTEGER: &str = "http://www.w3.org/2001/XMLSchema#integer";
pub const KUWATA: &str = "http://dbpedia.org/resource/Keisuke_Kuwata";
pub const HARA: &str = "http://dbpedia.org/resource/Yuko_Hara";

pub fn text(s: &str) -> PgValue {
    PgValue::Text(s.to_owned())
}

pub fn props(pairs: &[(&str, PgValue)]) -> BTreeMap<String, BTreeSet<PgValue>> {
    let mut out: BTreeMap<String, BTreeSet<PgValue>> = BTreeMap::new();
    for (k, v) in pairs {
        out.entry(k.to_string()).or_default().insert(v.clone());
    }
    out
}

pub fn musician(id: &str, p: &[(&str, PgValue)]) -> PgNode {
    PgNode {
        id: id.to_owned(),
        labels: ["Musician".to_owned()].into(),
        properties: props(p),
    }
}

/// The graph expected from the full fixture, written out by hand.
pub fn expected_graph() -> PropertyGraph {
    let mut g = PropertyGraph::new();
    g.insert_node(musician(
        KUWATA,
        &[
            ("vis_label", text("桑田佳祐")),
            ("born", PgValue::DateTime("1956-02-26".into())),
            ("hometown", text("Chigasaki, Kanagawa")),
        ],
    ));
    g.insert_node(musician(HARA, &[("vis_label", text("原由子"))]));
    for (a, b) in [(KUWATA, HARA), (HARA, KUWATA)] {
        g.insert_edge(PgEdge {
            src: a.into(),
            dst: b.into(),
            label: "same_group".into(),
            properties: props(&[
                ("label", text("サザンオールスターズ")),
                ("length", PgValue::Integer(52516)),
            ]),
        })
        .unwrap();
    }
    g
}

pub fn prefixes() -> PrefixMap {
    let mut m = PrefixMap::new();
    m.insert("ex", "http://e/").unwrap();
    m
}

fn entity(i: usize) -> RdfTerm {
    RdfTerm::iri(format!("http://e/e{i}"))
}

fn literal(rng: &mut impl Rng) -> RdfTerm {
    RdfTerm::from(match rng.random_range(0..6) {
        0 => Literal::lang("x", "ja"),
        1 => Literal::lang("x", "en"),
        2 => Literal::lang("y", "ja-JP"),
        3 => Literal::typed("1", XSD_INTEGER),
        4 => Literal::typed("01", XSD_INTEGER),
        _ => Literal::plain("s"),
    })
}

/// Up to `max` triples over entities e0..e3, predicates p0..p2 and
/// rdf:type, with language-tagged, integer and plain literal objects.
pub fn random_graph(rng: &mut impl Rng, max: usize) -> RdfGraph {
    let mut g = RdfGraph::new();
    let n = if rng.random_bool(0.1) {
        rng.random_range(0..=max)
    } else {
        rng.random_range(max / 2..=max)
    };
    for _ in 0..n {
        let s = entity(rng.random_range(0..4));
        let p = match rng.random_range(0..4) {
            3 => RdfTerm::iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#type"),
            i => RdfTerm::iri(format!("http://e/p{i}")),
        };
        let o = if rng.random_bool(0.6) {
            entity(rng.random_range(0..4))
        } else {
            literal(rng)
        };
        g.insert(Triple::new(s, p, o).unwrap());
    }
    g
}

struct PatternGen<'r, R> {
    rng: &'r mut R,
    triples: usize,
    paths: usize,
}

impl<R: Rng> PatternGen<'_, R> {
    fn var(&mut self) -> String {
        format!("?v{}", self.rng.random_range(0..5))
    }

    fn subject(&mut self) -> String {
        if self.rng.random_bool(0.85) {
            self.var()
        } else {
            format!("ex:e{}", self.rng.random_range(0..4))
        }
    }

    /// A predicate and the number of triple patterns it expands to.
    fn verb(&mut self, budget: usize) -> (String, usize) {
        match self.rng.random_range(0..10) {
            0 => (self.var(), 1),
            1 => ("a".into(), 1),
            2 | 3 if self.paths < 2 && budget >= 2 => {
                self.paths += 1;
                let a = self.rng.random_range(0..3);
                let b = self.rng.random_range(0..3);
                (format!("ex:p{a}/ex:p{b}"), 2)
            }
            _ => (format!("ex:p{}", self.rng.random_range(0..3)), 1),
        }
    }

    fn object(&mut self) -> String {
        match self.rng.random_range(0..10) {
            0 => format!("ex:e{}", self.rng.random_range(0..4)),
            1 => "\"x\"@ja".into(),
            2 => "1".into(),
            _ => self.var(),
        }
    }

    fn filter(&mut self) -> String {
        match self.rng.random_range(0..5) {
            0 => format!("FILTER({} != {})", self.var(), self.var()),
            1 => format!("FILTER({} = {})", self.var(), self.var()),
            2 => format!("FILTER(lang({}) = \"ja\")", self.var()),
            3 => format!("FILTER({} = 1)", self.var()),
            _ => format!("FILTER({} != \"s\")", self.var()),
        }
    }

    /// One subject with a predicate list and object list, counting every
    /// triple pattern it expands to.
    fn triples_block(&mut self, budget: usize) -> String {
        let mut s = self.subject();
        let verbs = self.rng.random_range(1..=2);
        let mut used = 0;
        for i in 0..verbs {
            if used == budget {
                break;
            }
            if i > 0 {
                s += " ;";
            }
            let (verb, cost) = self.verb(budget - used);
            s += &format!(" {verb} {}", self.object());
            used += cost;
            if used + cost <= budget && self.rng.random_bool(0.2) {
                s += &format!(" , {}", self.object());
                used += cost;
            }
        }
        self.triples += used;
        s + " ."
    }

    fn group(&mut self, budget: usize, depth: usize) -> String {
        let mut parts = Vec::new();
        while self.triples < budget {
            match self.rng.random_range(0..10) {
                0..=3 if depth < 2 => {
                    let inner = self.group(budget.min(self.triples + 2), depth + 1);
                    if !inner.is_empty() {
                        parts.push(format!("OPTIONAL {{ {inner} }}"));
                    }
                }
                4 => parts.push(self.filter()),
                _ => {
                    let left = budget - self.triples;
                    parts.push(self.triples_block(left));
                }
            }
            if self.rng.random_bool(0.3) {
                break;
            }
        }
        if depth > 0 && self.rng.random_bool(0.3) {
            parts.push(self.filter());
        }
        parts.join("\n")
    }
}

/// Pattern text expanding to at most `max_triples` triple patterns over
/// ?v0..?v4,
/// mixing OPTIONAL groups, FILTERs and up to two sequence paths.
pub fn random_pattern(rng: &mut impl Rng, max_triples: usize) -> String {
    let mut g = PatternGen {
        rng,
        triples: 0,
        paths: 0,
    };
    let budget = g.rng.random_range(1..=max_triples);
    let first = g.triples_block(budget);
    let rest = g.group(budget, 0);
    format!("{first}\n{rest}")
}
