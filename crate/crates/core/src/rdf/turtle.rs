use std::iter::Peekable;
use std::vec::IntoIter;

use super::lexer::{tokenize, Spanned, Tok};
use super::term::{is_absolute_iri, vocab, Literal, RdfTerm};
use super::{PrefixMap, RdfError, RdfGraph, Triple};

/// Parses the supported Turtle subset: prefix directives, prefixed names,
/// `a`, predicate lists (`;`), object lists (`,`), IRIs, blank node labels
/// and literals. Collections and `[ ... ]` property lists are rejected.
pub fn load_turtle_subset(source: &str) -> Result<RdfGraph, RdfError> {
    let toks = tokenize(source).map_err(|e| RdfError::parse(e.line, e.col, e.message))?;
    let end = source.lines().count().max(1);
    let mut p = TurtleParser {
        toks: toks.into_iter().peekable(),
        prefixes: PrefixMap::new(),
        graph: RdfGraph::new(),
        end_line: end,
    };
    p.document()?;
    Ok(p.graph)
}

struct TurtleParser {
    toks: Peekable<IntoIter<Spanned>>,
    prefixes: PrefixMap,
    graph: RdfGraph,
    end_line: usize,
}

impl TurtleParser {
    fn next(&mut self, what: &str) -> Result<Spanned, RdfError> {
        self.toks.next().ok_or_else(|| {
            RdfError::parse(
                self.end_line,
                1,
                format!("unexpected end of input, expected {what}"),
            )
        })
    }

    fn expect_punct(&mut self, p: &str) -> Result<(), RdfError> {
        let s = self.next(&format!("'{p}'"))?;
        if s.tok.is_punct(p) {
            Ok(())
        } else {
            Err(unexpected(&s, &format!("'{p}'")))
        }
    }

    fn document(&mut self) -> Result<(), RdfError> {
        while let Some(s) = self.toks.peek() {
            match &s.tok {
                Tok::At(d) if d == "prefix" => {
                    self.toks.next();
                    self.prefix_decl()?;
                    self.expect_punct(".")?;
                }
                Tok::Word(w) if w.eq_ignore_ascii_case("prefix") => {
                    self.toks.next();
                    self.prefix_decl()?;
                }
                Tok::At(d) if d == "base" => return Err(unsupported(s, "@base")),
                Tok::Word(w) if w.eq_ignore_ascii_case("base") => {
                    return Err(unsupported(s, "BASE"))
                }
                _ => self.statement()?,
            }
        }
        Ok(())
    }

    fn prefix_decl(&mut self) -> Result<(), RdfError> {
        let name = self.next("prefix name")?;
        let Tok::PName { prefix, local } = &name.tok else {
            return Err(unexpected(&name, "prefix name"));
        };
        if !local.is_empty() {
            return Err(unexpected(&name, "prefix name"));
        }
        let iri = self.next("IRI")?;
        let Tok::IriRef(i) = &iri.tok else {
            return Err(unexpected(&iri, "IRI"));
        };
        self.prefixes
            .insert(prefix.clone(), i.clone())
            .map_err(|e| RdfError::parse(name.line, name.col, e.to_string()))
    }

    fn statement(&mut self) -> Result<(), RdfError> {
        let subj = self.next("subject")?;
        let subject = match &subj.tok {
            Tok::Str(_) | Tok::Integer(_) | Tok::Decimal(_) | Tok::Double(_) => {
                return Err(RdfError::parse(
                    subj.line,
                    subj.col,
                    "literal in subject position",
                ))
            }
            _ => self.term(subj)?,
        };
        loop {
            let pred = self.next("predicate")?;
            let predicate = match &pred.tok {
                Tok::Word(w) if w == "a" => RdfTerm::iri(vocab::RDF_TYPE),
                _ => {
                    let (line, col) = (pred.line, pred.col);
                    let t = self.term(pred)?;
                    if !t.is_iri() {
                        return Err(RdfError::parse(line, col, "predicate must be an IRI"));
                    }
                    t
                }
            };
            loop {
                let obj = self.next("object")?;
                let object = self.term(obj)?;
                self.graph.insert(
                    Triple::new(subject.clone(), predicate.clone(), object)
                        .expect("positions checked"),
                );
                match self.toks.peek() {
                    Some(s) if s.tok.is_punct(",") => {
                        self.toks.next();
                    }
                    _ => break,
                }
            }
            let sep = self.next("'.' or ';'")?;
            if sep.tok.is_punct(".") {
                return Ok(());
            }
            if !sep.tok.is_punct(";") {
                return Err(unexpected(&sep, "'.', ';' or ','"));
            }
            // repeated or trailing semicolons
            while self.toks.peek().is_some_and(|s| s.tok.is_punct(";")) {
                self.toks.next();
            }
            if self.toks.peek().is_some_and(|s| s.tok.is_punct(".")) {
                self.toks.next();
                return Ok(());
            }
        }
    }

    fn term(&mut self, s: Spanned) -> Result<RdfTerm, RdfError> {
        let (line, col) = (s.line, s.col);
        Ok(match s.tok {
            Tok::IriRef(iri) if is_absolute_iri(&iri) => RdfTerm::Iri(iri),
            Tok::IriRef(iri) => {
                return Err(RdfError::parse(line, col, format!("relative IRI <{iri}>")))
            }
            Tok::PName { prefix, local } => RdfTerm::Iri(
                self.prefixes
                    .resolve(&prefix, &local)
                    .map_err(|e| RdfError::parse(line, col, e.to_string()))?,
            ),
            Tok::BNode(b) => RdfTerm::BlankNode(b),
            Tok::Str(lex) => self.literal_suffix(lex)?,
            Tok::Integer(n) => Literal::typed(n, vocab::XSD_INTEGER).into(),
            Tok::Decimal(n) => Literal::typed(n, vocab::XSD_DECIMAL).into(),
            Tok::Double(n) => Literal::typed(n, vocab::XSD_DOUBLE).into(),
            Tok::Word(w) if w == "true" || w == "false" => {
                Literal::typed(w, vocab::XSD_BOOLEAN).into()
            }
            Tok::Punct("[") => {
                return Err(RdfError::unsupported(
                    line,
                    col,
                    "blank node property list `[ ... ]`",
                ))
            }
            Tok::Punct("(") => {
                return Err(RdfError::unsupported(line, col, "collection `( ... )`"))
            }
            other => return Err(RdfError::parse(line, col, format!("unexpected `{other}`"))),
        })
    }

    fn literal_suffix(&mut self, lex: String) -> Result<RdfTerm, RdfError> {
        match self.toks.peek().map(|s| &s.tok) {
            Some(Tok::At(tag)) => {
                let lit = Literal::lang(lex, tag);
                self.toks.next();
                Ok(lit.into())
            }
            Some(Tok::Punct("^^")) => {
                self.toks.next();
                let dt = self.next("datatype")?;
                let (line, col) = (dt.line, dt.col);
                match self.term(dt)? {
                    RdfTerm::Iri(dt) => Ok(Literal::typed(lex, dt).into()),
                    _ => Err(RdfError::parse(line, col, "datatype must be an IRI")),
                }
            }
            _ => Ok(Literal::plain(lex).into()),
        }
    }
}

fn unexpected(s: &Spanned, expected: &str) -> RdfError {
    RdfError::parse(
        s.line,
        s.col,
        format!("expected {expected}, found `{}`", s.tok),
    )
}

fn unsupported(s: &Spanned, what: &str) -> RdfError {
    RdfError::unsupported(s.line, s.col, what)
}
