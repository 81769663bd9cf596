mod common;

use std::collections::BTreeSet;
use std::time::Duration;

use common::{expected_graph, musician, text, HARA};
use g2pg_core::g2gml::{parse_document, MappingDocument};
use g2pg_core::mapping::{
    build_edges, build_nodes, run_mapping, run_mapping_with, MappingKind, PropertyGraph,
    RunOptions, Source,
};
use g2pg_core::pattern::{brute_force_evaluate, BindingTable, Variable};
use g2pg_core::rdf::{load_ntriples, Literal, RdfGraph, RdfTerm};
use g2pg_core::sparql::stub::StubEndpoint;
use g2pg_core::sparql::EndpointConfig;
use proptest::prelude::*;

const MAPPING: &str = include_str!("fixtures/musicians.g2g");
const TRIPLES: &str = include_str!("fixtures/musicians.nt");

fn musician_mapping() -> MappingDocument {
    parse_document(MAPPING).unwrap()
}

#[test]
fn end_to_end() {
    let (g, report) = run_mapping(
        &musician_mapping(),
        Source::Local(&load_ntriples(TRIPLES).unwrap()),
    )
    .unwrap();
    assert_eq!(g, expected_graph());
    assert_eq!(
        (report.nodes, report.edges, report.dropped_edge_rows()),
        (2, 2, 0)
    );
    assert_eq!(report.warnings().count(), 0);
}

#[test]
fn minimal_fixture_has_no_optional_properties() {
    let graph = load_ntriples(include_str!("fixtures/musicians_minimal.nt")).unwrap();
    assert_eq!(graph.len(), 9);
    let (g, _) = run_mapping(&musician_mapping(), Source::Local(&graph)).unwrap();
    assert_eq!(g.node_count(), 2);
    assert!(g.nodes().all(|n| n.properties.keys().eq(["vis_label"])));
    assert_eq!(g.edge_count(), 2);
    assert!(g.edges().all(|e| e.properties.is_empty()));
}

#[test]
fn dropping_a_type_triple_removes_both_edges() {
    let nt: String = TRIPLES
        .lines()
        .filter(|l| !(l.starts_with(&format!("<{HARA}>")) && l.contains("MusicalArtist")))
        .map(|l| format!("{l}\n"))
        .collect();
    let graph = load_ntriples(&nt).unwrap();
    assert_eq!(graph.len(), 14);
    let (g, report) = run_mapping(&musician_mapping(), Source::Local(&graph)).unwrap();
    assert_eq!(g.node_count(), 1);
    assert_eq!(g.edge_count(), 0);
    let edge = report
        .mappings
        .iter()
        .find(|m| m.kind == MappingKind::Edge)
        .unwrap();
    assert_eq!((edge.rows, edge.emitted_rows, edge.dropped_rows), (2, 0, 2));
}

#[test]
fn empty_source() {
    let (g, report) = run_mapping(&musician_mapping(), Source::Local(&RdfGraph::new())).unwrap();
    assert!(g.is_empty());
    assert!(report.mappings.iter().all(|m| m.rows == 0));
    assert!(report.to_string().contains("nodes: 0\nedges: 0\n"));
}

#[test]
fn node_mappings_only() {
    let src = MAPPING.split("# Edge mapping").next().unwrap();
    let (g, report) = run_mapping(
        &parse_document(src).unwrap(),
        Source::Local(&load_ntriples(TRIPLES).unwrap()),
    )
    .unwrap();
    assert_eq!(
        (g.node_count(), g.edge_count(), report.mappings.len()),
        (2, 0, 1)
    );
}

fn table(vars: &[&str], rows: &[&[Option<RdfTerm>]]) -> BindingTable {
    let mut t = BindingTable::new(vars.iter().map(|v| Variable::new(*v)).collect());
    for r in rows {
        t.insert(r.to_vec());
    }
    t
}

fn iri(s: &str) -> Option<RdfTerm> {
    Some(RdfTerm::iri(s))
}

fn ja(s: &str) -> Option<RdfTerm> {
    Some(Literal::lang(s, "ja").into())
}

#[test]
fn build_nodes_from_tables() {
    let doc = musician_mapping();
    let m = &doc.node_mappings[0];
    let vars = ["mus", "nam", "dat", "twn"];
    let mut g = PropertyGraph::new();
    build_nodes(
        m,
        &table(
            &vars,
            &[
                &[iri("http://e/A"), ja("Alice"), None, None],
                &[iri("http://e/B"), ja("Bob"), None, None],
            ],
        ),
        &mut g,
    );
    let mut expected = PropertyGraph::new();
    expected.insert_node(musician("http://e/A", &[("vis_label", text("Alice"))]));
    expected.insert_node(musician("http://e/B", &[("vis_label", text("Bob"))]));
    assert_eq!(g, expected);

    let mut g = PropertyGraph::new();
    build_nodes(
        m,
        &table(
            &vars,
            &[
                &[iri("http://e/A"), ja("Alice"), None, None],
                &[iri("http://e/A"), ja("アリス"), None, None],
            ],
        ),
        &mut g,
    );
    assert_eq!(g.node_count(), 1);
    assert_eq!(
        g.node("http://e/A").unwrap().properties["vis_label"].len(),
        2
    );

    let mut g = PropertyGraph::new();
    let stats = build_nodes(m, &table(&vars, &[]), &mut g);
    assert!(g.is_empty() && stats.rows == 0);
}

#[test]
fn non_iri_bindings_are_skipped_with_warnings() {
    let doc = musician_mapping();
    let m = &doc.node_mappings[0];
    let rows: &[&[Option<RdfTerm>]] = &[
        &[ja("literal"), ja("x"), None, None],
        &[Some(RdfTerm::blank("b")), ja("y"), None, None],
        &[iri("http://e/A"), iri("http://e/label"), None, None],
    ];
    let mut g = PropertyGraph::new();
    let stats = build_nodes(m, &table(&["mus", "nam", "dat", "twn"], rows), &mut g);
    assert_eq!((stats.emitted_rows, stats.dropped_rows), (1, 2));
    assert_eq!(stats.warnings.len(), 3, "{:?}", stats.warnings);
    assert!(g.node("http://e/A").unwrap().properties.is_empty());
}

#[test]
fn build_edges_requires_labelled_endpoints() {
    let doc = musician_mapping();
    let m = &doc.edge_mappings[0];
    let rows = table(
        &["mus1", "mus2", "nam", "len"],
        &[
            &[iri("http://e/A"), iri("http://e/B"), None, None],
            &[iri("http://e/B"), iri("http://e/A"), None, None],
        ],
    );
    let mut g = PropertyGraph::new();
    g.upsert_node("http://e/A", "Musician");
    g.upsert_node("http://e/B", "Musician");
    let stats = build_edges(m, &rows, &mut g);
    assert_eq!((g.edge_count(), stats.emitted_rows), (2, 2));

    let mut g = PropertyGraph::new();
    g.upsert_node("http://e/A", "Musician");
    g.upsert_node("http://e/B", "Band");
    let stats = build_edges(m, &rows, &mut g);
    assert_eq!((g.edge_count(), stats.dropped_rows), (0, 2));

    let before = g.clone();
    build_edges(m, &table(&["mus1", "mus2", "nam", "len"], &[]), &mut g);
    assert_eq!(g, before);
}

#[test]
fn endpoint_source_matches_local() {
    let graph = load_ntriples(TRIPLES).unwrap();
    let stub = StubEndpoint::serve(graph.clone()).unwrap();
    let config = EndpointConfig {
        page_size: 1,
        backoff: Duration::from_millis(1),
        ..EndpointConfig::new(stub.url())
    };
    let (remote, report) = run_mapping(&musician_mapping(), Source::Endpoint(&config)).unwrap();
    assert_eq!(remote, expected_graph());
    assert!(report.mappings.iter().all(|m| m.pages == 3));
}

#[test]
fn endpoint_failure_aborts() {
    let stub = StubEndpoint::failing(503).unwrap();
    let config = EndpointConfig {
        max_retries: 0,
        ..EndpointConfig::new(stub.url())
    };
    let err = run_mapping(&musician_mapping(), Source::Endpoint(&config)).unwrap_err();
    assert!(err.to_string().contains("Musician"), "{err}");
}

const RANDOM_DOC: &str = "PREFIX ex: <http://e/>
(x:A {name:n})
    ?x a ex:A .
    OPTIONAL { ?x ex:name ?n }
(y:B)
    ?y ex:p ?z .
(s:A)-[:rel {w:w}]->(t:B)
    ?s ex:p ?t .
    OPTIONAL { ?t ex:name ?w }
";

fn random_graph() -> impl Strategy<Value = RdfGraph> {
    let term = prop_oneof![
        (0..4usize).prop_map(|i| format!("<http://e/r{i}>")),
        Just("<http://e/A>".to_owned()),
        (0..3usize).prop_map(|i| format!("\"n{i}\"")),
        Just("_:b".to_owned()),
    ];
    let subject = prop_oneof![
        (0..4usize).prop_map(|i| format!("<http://e/r{i}>")),
        Just("_:b".to_owned())
    ];
    let pred = prop::sample::select(vec![
        "<http://www.w3.org/1999/02/22-rdf-syntax-ns#type>",
        "<http://e/p>",
        "<http://e/name>",
    ]);
    prop::collection::vec((subject, pred, term), 0..20).prop_map(|ts| {
        let nt: String = ts
            .iter()
            .map(|(s, p, o)| format!("{s} {p} {o} .\n"))
            .collect();
        load_ntriples(&nt).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn mapping_invariants(graph in random_graph()) {
        let doc = parse_document(RANDOM_DOC).unwrap();
        let (g, report) = run_mapping(&doc, Source::Local(&graph)).unwrap();

        // every edge joins nodes carrying the declared labels
        for e in g.edges() {
            prop_assert!(g.node(&e.src).unwrap().labels.contains("A"));
            prop_assert!(g.node(&e.dst).unwrap().labels.contains("B"));
        }
        for m in &report.mappings {
            prop_assert_eq!(m.rows, m.emitted_rows + m.dropped_rows);
        }

        // node count = distinct IRIs bound to node variables, via the oracle
        let mut ids = BTreeSet::new();
        for m in &doc.node_mappings {
            let t = brute_force_evaluate(&m.rdf_pattern.pattern, &graph).unwrap();
            for row in t.rows() {
                if let Some(RdfTerm::Iri(i)) = t.value(row, &m.node_var) {
                    ids.insert(i.clone());
                }
            }
        }
        prop_assert_eq!(g.node_count(), ids.len());

        let (again, _) = run_mapping_with(&doc, Source::Local(&graph), &RunOptions { max_in_flight: 1 }).unwrap();
        prop_assert_eq!(&g, &again);
    }
}
