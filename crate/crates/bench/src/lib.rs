//! Synthetic inputs for the benchmarks.

use g2pg_core::rdf::{Literal, RdfGraph, RdfTerm, Triple};

pub const MAPPING: &str = "\
PREFIX rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#>
PREFIX rdfs: <http://www.w3.org/2000/01/rdf-schema#>
PREFIX prop: <http://dbpedia.org/property/>
PREFIX schema: <http://schema.org/>
PREFIX dbpedia-owl: <http://dbpedia.org/ontology/>
PREFIX foaf: <http://xmlns.com/foaf/0.1/>

(mus:Musician {vis_label:nam, born:dat, hometown:twn})
    ?mus rdf:type foaf:Person , dbpedia-owl:MusicalArtist .
    ?mus rdfs:label ?nam . FILTER(lang(?nam) = \"ja\") .
    OPTIONAL { ?mus prop:born ?dat }
    OPTIONAL { ?mus dbpedia-owl:hometown/rdfs:label ?twn }

(mus1:Musician)-[:same_group {label:nam, length:len}]->(mus2:Musician)
    ?grp a schema:MusicGroup ;
         rdfs:label ?nam ; dbpedia-owl:wikiPageLength ?len ;
         dbpedia-owl:bandMember ?mus1 , ?mus2 .
    FILTER(lang(?nam) = \"ja\")
    FILTER(?mus1 != ?mus2)
";

const RDF: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
const RDFS: &str = "http://www.w3.org/2000/01/rdf-schema#";
const OWL: &str = "http://dbpedia.org/ontology/";
const XSD: &str = "http://www.w3.org/2001/XMLSchema#";

fn iri(s: impl Into<String>) -> RdfTerm {
    RdfTerm::iri(s)
}

fn add(g: &mut RdfGraph, s: &RdfTerm, p: &str, o: RdfTerm) {
    g.insert(Triple::new(s.clone(), iri(p), o).expect("well-formed triple"));
}

/// `musicians` artists spread over groups of `group_size` members. Every
/// third artist has a birth date and every fifth a hometown.
pub fn music_graph(musicians: usize, group_size: usize) -> RdfGraph {
    let mut g = RdfGraph::new();
    let group_size = group_size.max(1);
    for i in 0..musicians {
        let m = iri(format!("http://e/musician/{i}"));
        add(
            &mut g,
            &m,
            &format!("{RDF}type"),
            iri("http://xmlns.com/foaf/0.1/Person"),
        );
        add(
            &mut g,
            &m,
            &format!("{RDF}type"),
            iri(format!("{OWL}MusicalArtist")),
        );
        add(
            &mut g,
            &m,
            &format!("{RDFS}label"),
            Literal::lang(format!("音楽家{i}"), "ja").into(),
        );
        add(
            &mut g,
            &m,
            &format!("{RDFS}label"),
            Literal::lang(format!("Musician {i}"), "en").into(),
        );
        if i % 3 == 0 {
            let date = format!("19{:02}-0{}-1{}", 40 + i % 60, 1 + i % 9, i % 10);
            add(
                &mut g,
                &m,
                "http://dbpedia.org/property/born",
                Literal::typed(date, format!("{XSD}date")).into(),
            );
        }
        if i % 5 == 0 {
            let town = iri(format!("http://e/town/{}", i % 17));
            add(&mut g, &m, &format!("{OWL}hometown"), town.clone());
            add(
                &mut g,
                &town,
                &format!("{RDFS}label"),
                Literal::lang(format!("Town {}", i % 17), "en").into(),
            );
        }
        let grp = iri(format!("http://e/group/{}", i / group_size));
        add(&mut g, &grp, &format!("{OWL}bandMember"), m);
        if i % group_size == 0 {
            let n = i / group_size;
            add(
                &mut g,
                &grp,
                &format!("{RDF}type"),
                iri("http://schema.org/MusicGroup"),
            );
            add(
                &mut g,
                &grp,
                &format!("{RDFS}label"),
                Literal::lang(format!("グループ{n}"), "ja").into(),
            );
            let len = (1000 + n * 37).to_string();
            add(
                &mut g,
                &grp,
                &format!("{OWL}wikiPageLength"),
                Literal::typed(len, format!("{XSD}integer")).into(),
            );
        }
    }
    g
}
