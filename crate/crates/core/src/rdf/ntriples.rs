use super::lexer::{tokenize, Tok};
use super::term::{is_absolute_iri, Literal, RdfTerm};
use super::{RdfError, RdfGraph, Triple};

/// Parses N-Triples. Duplicate lines collapse into one triple.
pub fn load_ntriples(source: &str) -> Result<RdfGraph, RdfError> {
    let mut graph = RdfGraph::new();
    for (idx, line) in source.lines().enumerate() {
        let line_no = idx + 1;
        let toks = tokenize(line).map_err(|e| RdfError::parse(line_no, e.col, e.message))?;
        if toks.is_empty() {
            continue;
        }
        let err = |col: usize, msg: &str| RdfError::parse(line_no, col, msg.to_owned());
        let mut it = toks.into_iter().peekable();

        let mut term = |what: &str, allow_literal: bool| -> Result<(RdfTerm, usize), RdfError> {
            let Some(s) = it.next() else {
                return Err(err(line.chars().count() + 1, &format!("expected {what}")));
            };
            let t = match s.tok {
                Tok::IriRef(iri) if is_absolute_iri(&iri) => RdfTerm::Iri(iri),
                Tok::IriRef(iri) => return Err(err(s.col, &format!("relative IRI <{iri}>"))),
                Tok::BNode(b) => RdfTerm::BlankNode(b),
                Tok::Str(lex) if allow_literal => match it.peek().map(|n| &n.tok) {
                    Some(Tok::At(tag)) => {
                        let lit = Literal::lang(lex, tag);
                        it.next();
                        RdfTerm::Literal(lit)
                    }
                    Some(Tok::Punct("^^")) => {
                        it.next();
                        match it.next() {
                            Some(n) => match n.tok {
                                Tok::IriRef(dt) if is_absolute_iri(&dt) => {
                                    Literal::typed(lex, dt).into()
                                }
                                _ => return Err(err(n.col, "expected datatype IRI")),
                            },
                            None => return Err(err(s.col, "expected datatype IRI")),
                        }
                    }
                    _ => Literal::plain(lex).into(),
                },
                other => return Err(err(s.col, &format!("expected {what}, found `{other}`"))),
            };
            Ok((t, s.col))
        };

        let (subject, _) = term("subject", false)?;
        let (predicate, pcol) = term("predicate", false)?;
        if !predicate.is_iri() {
            return Err(err(pcol, "predicate must be an IRI"));
        }
        let (object, _) = term("object", true)?;
        match it.next() {
            Some(s) if s.tok.is_punct(".") => {}
            Some(s) => return Err(err(s.col, &format!("expected '.', found `{}`", s.tok))),
            None => return Err(err(line.chars().count() + 1, "expected '.'")),
        }
        if let Some(s) = it.next() {
            return Err(err(s.col, "trailing content after '.'"));
        }
        graph.insert(Triple::new(subject, predicate, object).expect("positions checked above"));
    }
    Ok(graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn single_line() {
        let g = load_ntriples(
            "<http://ex.org/A> <http://www.w3.org/2000/01/rdf-schema#label> \"Alice\" .",
        )
        .unwrap();
        assert_eq!(g.len(), 1);
        let t = g.iter().next().unwrap();
        assert_eq!(t.object, RdfTerm::from(Literal::plain("Alice")));
    }

    #[test]
    fn duplicate_lines_collapse() {
        let line = "<http://ex.org/A> <http://www.w3.org/2000/01/rdf-schema#label> \"Alice\" .\n";
        let g = load_ntriples(&line.repeat(2)).unwrap();
        assert_eq!(g.len(), 1);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let src =
            "<http://e/a> <http://e/p> <http://e/b> .\n\n\"lit\" <http://e/p> <http://e/b> .\n";
        match load_ntriples(src).unwrap_err() {
            RdfError::Parse { line, .. } => assert_eq!(line, 3),
            e => panic!("unexpected {e:?}"),
        }
        assert!(load_ntriples("<http://e/a> <http://e/p> <http://e/b>").is_err());
        assert!(load_ntriples("<http://e/a> _:p <http://e/b> .").is_err());
        assert!(load_ntriples("<a> <http://e/p> <http://e/b> .").is_err());
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = load_ntriples("# header\n\n_:b1 <http://e/p> \"x\"@EN . # tail\n").unwrap();
        let t = g.iter().next().unwrap();
        assert_eq!(t.subject, RdfTerm::blank("b1"));
        assert_eq!(t.object.as_literal().unwrap().language(), Some("en"));
    }

    fn arb_term(literal: bool) -> impl Strategy<Value = RdfTerm> {
        let iri = "[a-z]{1,5}".prop_map(|s| RdfTerm::iri(format!("http://e/{s}")));
        if !literal {
            return prop_oneof![iri, "[a-z][a-z0-9]{0,3}".prop_map(RdfTerm::blank)].boxed();
        }
        prop_oneof![
            iri,
            "[a-z][a-z0-9]{0,3}".prop_map(RdfTerm::blank),
            "\\PC{0,8}".prop_map(|s| RdfTerm::from(Literal::plain(s))),
            ("[ -~\n\t]{0,6}", "[a-z]{2}").prop_map(|(s, l)| RdfTerm::from(Literal::lang(s, &l))),
            "-?[0-9]{1,4}"
                .prop_map(|s| RdfTerm::from(Literal::typed(s, crate::rdf::vocab::XSD_INTEGER))),
        ]
        .boxed()
    }

    proptest! {
        #[test]
        fn serialize_then_load_is_identity(
            triples in prop::collection::vec((arb_term(false), "[a-z]{1,3}", arb_term(true)), 0..20)
        ) {
            let g: RdfGraph = triples
                .into_iter()
                .map(|(s, p, o)| Triple::new(s, RdfTerm::iri(format!("http://e/p/{p}")), o).unwrap())
                .collect();
            let back = load_ntriples(&g.to_ntriples()).unwrap();
            prop_assert_eq!(back, g);
        }
    }
}
