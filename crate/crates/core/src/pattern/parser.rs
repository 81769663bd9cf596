use std::iter::Peekable;
use std::vec::IntoIter;

use super::ast::{
    rdf_type, CompareOp, FilterExpr, GraphPattern, PatternElement, TriplePattern, VarOrTerm,
    Variable,
};
use super::query::{OrderKey, SelectQuery};
use super::PatternError;
use crate::rdf::lexer::{tokenize, Spanned, Tok};
use crate::rdf::{is_absolute_iri, vocab, Literal, PrefixMap, RdfTerm};

/// Keywords outside the supported fragment, reported as unsupported
/// rather than as syntax errors.
const UNSUPPORTED_KEYWORDS: &[&str] = &[
    "UNION",
    "MINUS",
    "BIND",
    "VALUES",
    "GRAPH",
    "SERVICE",
    "SELECT",
    "CONSTRUCT",
    "ASK",
    "DESCRIBE",
    "EXISTS",
    "NOT",
    "GROUP",
    "HAVING",
];

/// Parses the body of a group pattern (without surrounding braces).
/// Prefixed names are expanded through `prefixes`, `a` becomes
/// `rdf:type`, and each `p1/p2/…` path is rewritten into a chain of triple
/// patterns joined by fresh internal variables.
pub fn parse_rdf_pattern(text: &str, prefixes: &PrefixMap) -> Result<GraphPattern, PatternError> {
    let mut p = PatternParser::new(text, prefixes.clone())?;
    let group = p.group_body(false)?;
    if let Some(s) = p.toks.next() {
        return Err(p.unexpected(&s, "end of pattern"));
    }
    Ok(group)
}

/// Parses a `SELECT` query over the same fragment, with its `PREFIX`
/// prologue and optional `ORDER BY`, `LIMIT` and `OFFSET`.
pub fn parse_select_query(text: &str) -> Result<SelectQuery, PatternError> {
    let mut p = PatternParser::new(text, PrefixMap::new())?;
    p.select_query()
}

struct PatternParser {
    toks: Peekable<IntoIter<Spanned>>,
    prefixes: PrefixMap,
    fresh: usize,
    end: (usize, usize),
}

fn syntax(line: usize, col: usize, message: impl Into<String>) -> PatternError {
    PatternError::Syntax {
        line,
        col,
        message: message.into(),
    }
}

fn unsupported(s: &Spanned, feature: impl Into<String>) -> PatternError {
    PatternError::UnsupportedFeature {
        line: s.line,
        col: s.col,
        feature: feature.into(),
    }
}

impl PatternParser {
    fn new(text: &str, prefixes: PrefixMap) -> Result<Self, PatternError> {
        let toks = tokenize(text).map_err(|e| syntax(e.line, e.col, e.message))?;
        let last_line = text.split('\n').count();
        let last_col = text
            .split('\n')
            .next_back()
            .map_or(0, |l| l.chars().count())
            + 1;
        Ok(PatternParser {
            toks: toks.into_iter().peekable(),
            prefixes,
            fresh: 0,
            end: (last_line, last_col),
        })
    }

    fn next(&mut self, expected: &str) -> Result<Spanned, PatternError> {
        self.toks.next().ok_or_else(|| {
            syntax(
                self.end.0,
                self.end.1,
                format!("unexpected end of input, expected {expected}"),
            )
        })
    }

    fn peek_tok(&mut self) -> Option<&Tok> {
        self.toks.peek().map(|s| &s.tok)
    }

    fn unexpected(&self, s: &Spanned, expected: &str) -> PatternError {
        syntax(
            s.line,
            s.col,
            format!("expected {expected}, found `{}`", s.tok),
        )
    }

    fn expect_punct(&mut self, p: &str) -> Result<Spanned, PatternError> {
        let s = self.next(&format!("'{p}'"))?;
        if s.tok.is_punct(p) {
            Ok(s)
        } else {
            Err(self.unexpected(&s, &format!("'{p}'")))
        }
    }

    fn group_body(&mut self, braced: bool) -> Result<GraphPattern, PatternError> {
        let mut elements = Vec::new();
        loop {
            let Some(s) = self.toks.peek() else {
                if braced {
                    return Err(syntax(
                        self.end.0,
                        self.end.1,
                        "unexpected end of input, expected '}'",
                    ));
                }
                break;
            };
            match &s.tok {
                Tok::Punct("}") if braced => {
                    self.toks.next();
                    break;
                }
                Tok::Punct(".") => {
                    self.toks.next();
                }
                Tok::Punct("{") => return Err(unsupported(s, "nested group pattern")),
                Tok::Word(w) if w.eq_ignore_ascii_case("OPTIONAL") => {
                    self.toks.next();
                    self.expect_punct("{")?;
                    elements.push(PatternElement::Optional(self.group_body(true)?));
                }
                Tok::Word(w) if w.eq_ignore_ascii_case("FILTER") => {
                    self.toks.next();
                    elements.push(PatternElement::Filter(self.filter()?));
                }
                Tok::Word(w)
                    if UNSUPPORTED_KEYWORDS
                        .iter()
                        .any(|k| w.eq_ignore_ascii_case(k)) =>
                {
                    let feature = w.to_ascii_uppercase();
                    return Err(unsupported(s, feature));
                }
                _ => {
                    self.triples_same_subject(&mut elements)?;
                    match self.peek_tok() {
                        None | Some(Tok::Punct(".")) | Some(Tok::Punct("}")) => {}
                        Some(Tok::Word(w))
                            if w.eq_ignore_ascii_case("OPTIONAL")
                                || w.eq_ignore_ascii_case("FILTER") => {}
                        Some(Tok::Word(w))
                            if UNSUPPORTED_KEYWORDS
                                .iter()
                                .any(|k| w.eq_ignore_ascii_case(k)) =>
                        {
                            let feature = w.to_ascii_uppercase();
                            let s = self.toks.next().unwrap();
                            return Err(unsupported(&s, feature));
                        }
                        Some(_) => {
                            let s = self.toks.next().unwrap();
                            return Err(self.unexpected(&s, "'.'"));
                        }
                    }
                }
            }
        }
        Ok(GraphPattern::new(elements))
    }

    fn triples_same_subject(&mut self, out: &mut Vec<PatternElement>) -> Result<(), PatternError> {
        let s = self.next("subject")?;
        let subject = self.var_or_term(s)?;
        loop {
            let path = self.verb()?;
            loop {
                let o = self.next("object")?;
                let object = self.var_or_term(o)?;
                self.emit_path(&subject, &path, object, out);
                if self.peek_tok().is_some_and(|t| t.is_punct(",")) {
                    self.toks.next();
                } else {
                    break;
                }
            }
            if !self.peek_tok().is_some_and(|t| t.is_punct(";")) {
                return Ok(());
            }
            while self.peek_tok().is_some_and(|t| t.is_punct(";")) {
                self.toks.next();
            }
            // a trailing ';' may close the predicate list
            match self.peek_tok() {
                None | Some(Tok::Punct(".")) | Some(Tok::Punct("}")) => return Ok(()),
                _ => {}
            }
        }
    }

    fn emit_path(
        &mut self,
        subject: &VarOrTerm,
        path: &[VarOrTerm],
        object: VarOrTerm,
        out: &mut Vec<PatternElement>,
    ) {
        let mut current = subject.clone();
        for (i, step) in path.iter().enumerate() {
            let next = if i + 1 == path.len() {
                object.clone()
            } else {
                let v = Variable::fresh(self.fresh);
                self.fresh += 1;
                VarOrTerm::Var(v)
            };
            out.push(PatternElement::Triple(TriplePattern {
                subject: current,
                predicate: step.clone(),
                object: next.clone(),
            }));
            current = next;
        }
    }

    /// A predicate: a variable, or one or more IRI steps joined by `/`.
    fn verb(&mut self) -> Result<Vec<VarOrTerm>, PatternError> {
        let s = self.next("predicate")?;
        if let Tok::Var(v) = &s.tok {
            if self.peek_tok().is_some_and(|t| t.is_punct("/")) {
                return Err(syntax(s.line, s.col, "sequence path steps must be IRIs"));
            }
            return Ok(vec![VarOrTerm::Var(Variable::new(v.clone()))]);
        }
        let mut steps = vec![VarOrTerm::Term(self.path_step(s)?)];
        loop {
            match self.toks.peek() {
                Some(n) if n.tok.is_punct("/") => {
                    self.toks.next();
                    let s = self.next("path step")?;
                    steps.push(VarOrTerm::Term(self.path_step(s)?));
                }
                Some(n)
                    if ["|", "^", "*", "+", "?", "!"]
                        .iter()
                        .any(|p| n.tok.is_punct(p)) =>
                {
                    return Err(unsupported(
                        n,
                        format!("property path operator `{}`", n.tok),
                    ));
                }
                _ => return Ok(steps),
            }
        }
    }

    fn path_step(&mut self, s: Spanned) -> Result<RdfTerm, PatternError> {
        match &s.tok {
            Tok::Word(w) if w == "a" => Ok(rdf_type()),
            Tok::IriRef(_) | Tok::PName { .. } => self.iri(s),
            Tok::Punct("^") | Tok::Punct("!") | Tok::Punct("(") => Err(unsupported(
                &s,
                format!("property path operator `{}`", s.tok),
            )),
            _ => Err(self.unexpected(&s, "predicate")),
        }
    }

    fn iri(&self, s: Spanned) -> Result<RdfTerm, PatternError> {
        match s.tok {
            Tok::IriRef(i) if is_absolute_iri(&i) => Ok(RdfTerm::Iri(i)),
            Tok::IriRef(i) => Err(syntax(s.line, s.col, format!("relative IRI <{i}>"))),
            Tok::PName { prefix, local } => self
                .prefixes
                .resolve(&prefix, &local)
                .map(RdfTerm::Iri)
                .map_err(|e| syntax(s.line, s.col, e.to_string())),
            ref other => Err(syntax(
                s.line,
                s.col,
                format!("expected IRI, found `{other}`"),
            )),
        }
    }

    fn var_or_term(&mut self, s: Spanned) -> Result<VarOrTerm, PatternError> {
        Ok(match &s.tok {
            Tok::Var(v) => VarOrTerm::Var(Variable::new(v.clone())),
            Tok::IriRef(_) | Tok::PName { .. } => VarOrTerm::Term(self.iri(s)?),
            Tok::Str(_) | Tok::Integer(_) | Tok::Decimal(_) | Tok::Double(_) => {
                VarOrTerm::Term(self.literal(s)?)
            }
            Tok::Word(w) if w == "true" || w == "false" => {
                VarOrTerm::Term(Literal::typed(w.clone(), vocab::XSD_BOOLEAN).into())
            }
            Tok::BNode(_) => return Err(unsupported(&s, "blank node in pattern")),
            Tok::Punct("[") => return Err(unsupported(&s, "blank node property list")),
            Tok::Punct("(") => return Err(unsupported(&s, "collection")),
            Tok::Word(w)
                if UNSUPPORTED_KEYWORDS
                    .iter()
                    .any(|k| w.eq_ignore_ascii_case(k)) =>
            {
                return Err(unsupported(&s, w.to_ascii_uppercase()))
            }
            _ => return Err(self.unexpected(&s, "variable or term")),
        })
    }

    fn literal(&mut self, s: Spanned) -> Result<RdfTerm, PatternError> {
        Ok(match s.tok {
            Tok::Integer(n) => Literal::typed(n, vocab::XSD_INTEGER).into(),
            Tok::Decimal(n) => Literal::typed(n, vocab::XSD_DECIMAL).into(),
            Tok::Double(n) => Literal::typed(n, vocab::XSD_DOUBLE).into(),
            Tok::Str(lex) => match self.peek_tok() {
                Some(Tok::At(tag)) => {
                    let lit = Literal::lang(lex, tag);
                    self.toks.next();
                    lit.into()
                }
                Some(Tok::Punct("^^")) => {
                    self.toks.next();
                    let dt = self.next("datatype IRI")?;
                    match self.iri(dt)? {
                        RdfTerm::Iri(dt) => Literal::typed(lex, dt).into(),
                        _ => unreachable!("iri() only yields IRIs"),
                    }
                }
                _ => Literal::plain(lex).into(),
            },
            ref other => {
                return Err(syntax(
                    s.line,
                    s.col,
                    format!("expected literal, found `{other}`"),
                ))
            }
        })
    }

    fn filter(&mut self) -> Result<FilterExpr, PatternError> {
        let open = self.next("'('")?;
        if !open.tok.is_punct("(") {
            if let Tok::Word(_) = open.tok {
                return Err(unsupported(
                    &open,
                    format!("FILTER function `{}`", open.tok),
                ));
            }
            return Err(self.unexpected(&open, "'('"));
        }
        let expr = self.filter_expr()?;
        self.expect_punct(")")?;
        Ok(expr)
    }

    fn filter_expr(&mut self) -> Result<FilterExpr, PatternError> {
        if self.peek_tok().is_some_and(|t| t.is_punct("(")) {
            self.toks.next();
            let inner = self.filter_expr()?;
            self.expect_punct(")")?;
            return Ok(inner);
        }
        let left = self.filter_operand()?;
        let op_tok = self.next("'=' or '!='")?;
        let op = match &op_tok.tok {
            Tok::Punct("=") => CompareOp::Eq,
            Tok::Punct("!=") => CompareOp::NotEq,
            Tok::Punct(p @ ("<" | ">" | "<=" | ">=" | "&&" | "||" | "+" | "-" | "*" | "/")) => {
                return Err(unsupported(&op_tok, format!("FILTER operator `{p}`")))
            }
            _ => return Err(self.unexpected(&op_tok, "'=' or '!='")),
        };
        let right = self.filter_operand()?;
        if let Some(s) = self.toks.peek() {
            if let Tok::Punct(p @ ("&&" | "||" | "=" | "!=" | "<" | ">")) = s.tok {
                return Err(unsupported(s, format!("FILTER operator `{p}`")));
            }
        }
        match (left, right) {
            (Operand::Lang(var), Operand::Value(VarOrTerm::Term(t)))
            | (Operand::Value(VarOrTerm::Term(t)), Operand::Lang(var)) => {
                let tag = match t.as_literal() {
                    Some(l) if l.datatype() == vocab::XSD_STRING => l.lexical().to_owned(),
                    _ => {
                        return Err(syntax(
                            op_tok.line,
                            op_tok.col,
                            "lang() must be compared with a plain string",
                        ))
                    }
                };
                if op != CompareOp::Eq {
                    return Err(unsupported(&op_tok, "lang() with `!=`"));
                }
                Ok(FilterExpr::LangEquals { var, tag })
            }
            (Operand::Lang(_), _) | (_, Operand::Lang(_)) => {
                Err(unsupported(&op_tok, "lang() compared with a non-constant"))
            }
            (Operand::Value(left), Operand::Value(right)) => {
                Ok(FilterExpr::Compare { left, op, right })
            }
        }
    }

    fn filter_operand(&mut self) -> Result<Operand, PatternError> {
        let s = self.next("filter operand")?;
        if let Tok::Word(w) = &s.tok {
            if self.peek_tok().is_some_and(|t| t.is_punct("(")) {
                if !w.eq_ignore_ascii_case("lang") {
                    return Err(unsupported(&s, format!("FILTER function `{w}`")));
                }
                self.toks.next();
                let v = self.next("variable")?;
                let Tok::Var(name) = &v.tok else {
                    return Err(self.unexpected(&v, "variable"));
                };
                let var = Variable::new(name.clone());
                self.expect_punct(")")?;
                return Ok(Operand::Lang(var));
            }
        }
        if s.tok.is_punct("!") {
            return Err(unsupported(&s, "FILTER operator `!`"));
        }
        Ok(Operand::Value(self.var_or_term(s)?))
    }

    fn select_query(&mut self) -> Result<SelectQuery, PatternError> {
        while let Some(s) = self.toks.peek() {
            match &s.tok {
                Tok::Word(w) if w.eq_ignore_ascii_case("PREFIX") => {
                    self.toks.next();
                    let name = self.next("prefix name")?;
                    let prefix = match &name.tok {
                        Tok::PName { prefix, local } if local.is_empty() => prefix.clone(),
                        _ => return Err(self.unexpected(&name, "prefix name")),
                    };
                    let iri = self.next("IRI")?;
                    let Tok::IriRef(i) = &iri.tok else {
                        return Err(self.unexpected(&iri, "IRI"));
                    };
                    self.prefixes
                        .insert(prefix, i.clone())
                        .map_err(|e| syntax(name.line, name.col, e.to_string()))?;
                }
                Tok::Word(w) if w.eq_ignore_ascii_case("BASE") => {
                    return Err(unsupported(s, "BASE"))
                }
                _ => break,
            }
        }
        let kw = self.next("SELECT")?;
        if !kw.tok.is_word("SELECT") {
            if let Tok::Word(w) = &kw.tok {
                if ["CONSTRUCT", "ASK", "DESCRIBE"]
                    .iter()
                    .any(|k| w.eq_ignore_ascii_case(k))
                {
                    return Err(unsupported(&kw, w.to_ascii_uppercase()));
                }
            }
            return Err(self.unexpected(&kw, "SELECT"));
        }
        let mut distinct = false;
        if self
            .peek_tok()
            .is_some_and(|t| t.is_word("DISTINCT") || t.is_word("REDUCED"))
        {
            self.toks.next();
            distinct = true;
        }
        let mut projection = Vec::new();
        let mut star = false;
        loop {
            match self.peek_tok() {
                Some(Tok::Punct("{")) => break,
                Some(t) if t.is_word("WHERE") => {
                    self.toks.next();
                    break;
                }
                _ => {}
            }
            let s = self.next("projection")?;
            match &s.tok {
                Tok::Var(v) => projection.push(Variable::new(v.clone())),
                Tok::Punct("*") if projection.is_empty() && !star => star = true,
                Tok::Punct("(") => return Err(unsupported(&s, "projection expression")),
                _ => return Err(self.unexpected(&s, "variable, '*' or WHERE")),
            }
        }
        if projection.is_empty() && !star {
            return Err(syntax(self.end.0, self.end.1, "empty projection"));
        }
        self.expect_punct("{")?;
        let pattern = self.group_body(true)?;

        let mut order_by = Vec::new();
        let mut limit = None;
        let mut offset = 0;
        while let Some(s) = self.toks.next() {
            match &s.tok {
                Tok::Word(w) if w.eq_ignore_ascii_case("ORDER") => {
                    let by = self.next("BY")?;
                    if !by.tok.is_word("BY") {
                        return Err(self.unexpected(&by, "BY"));
                    }
                    while let Some(n) = self.toks.peek() {
                        match &n.tok {
                            Tok::Var(v) => {
                                order_by.push(OrderKey {
                                    var: Variable::new(v.clone()),
                                    descending: false,
                                });
                                self.toks.next();
                            }
                            Tok::Word(w)
                                if w.eq_ignore_ascii_case("ASC")
                                    || w.eq_ignore_ascii_case("DESC") =>
                            {
                                let descending = w.eq_ignore_ascii_case("DESC");
                                self.toks.next();
                                self.expect_punct("(")?;
                                let v = self.next("variable")?;
                                let Tok::Var(name) = &v.tok else {
                                    return Err(unsupported(&v, "ORDER BY expression"));
                                };
                                order_by.push(OrderKey {
                                    var: Variable::new(name.clone()),
                                    descending,
                                });
                                self.expect_punct(")")?;
                            }
                            _ => break,
                        }
                    }
                    if order_by.is_empty() {
                        return Err(syntax(s.line, s.col, "ORDER BY without keys"));
                    }
                }
                Tok::Word(w) if w.eq_ignore_ascii_case("LIMIT") => limit = Some(self.count()?),
                Tok::Word(w) if w.eq_ignore_ascii_case("OFFSET") => offset = self.count()?,
                Tok::Word(w)
                    if w.eq_ignore_ascii_case("GROUP") || w.eq_ignore_ascii_case("HAVING") =>
                {
                    return Err(unsupported(&s, w.to_ascii_uppercase()))
                }
                _ => return Err(self.unexpected(&s, "ORDER BY, LIMIT, OFFSET or end of query")),
            }
        }
        Ok(SelectQuery {
            prefixes: self.prefixes.clone(),
            distinct,
            projection: if star { None } else { Some(projection) },
            pattern,
            order_by,
            limit,
            offset,
        })
    }

    fn count(&mut self) -> Result<usize, PatternError> {
        let s = self.next("integer")?;
        match &s.tok {
            Tok::Integer(n) if !n.starts_with(['+', '-']) => n
                .parse()
                .map_err(|_| syntax(s.line, s.col, "integer out of range")),
            _ => Err(self.unexpected(&s, "non-negative integer")),
        }
    }
}

enum Operand {
    Lang(Variable),
    Value(VarOrTerm),
}

#[cfg(test)]
mod tests {
    use super::*;

    fn music_prefixes() -> PrefixMap {
        let mut m = PrefixMap::new();
        for (p, i) in [
            ("rdf", "http://www.w3.org/1999/02/22-rdf-syntax-ns#"),
            ("rdfs", "http://www.w3.org/2000/01/rdf-schema#"),
            ("prop", "http://dbpedia.org/property/"),
            ("schema", "http://schema.org/"),
            ("dbpedia-owl", "http://dbpedia.org/ontology/"),
            ("foaf", "http://xmlns.com/foaf/0.1/"),
        ] {
            m.insert(p, i).unwrap();
        }
        m
    }

    fn var(n: &str) -> VarOrTerm {
        VarOrTerm::Var(Variable::new(n))
    }

    fn iri(s: &str) -> VarOrTerm {
        VarOrTerm::Term(RdfTerm::iri(s))
    }

    #[test]
    fn object_list_shares_subject() {
        let g = parse_rdf_pattern(
            "?mus rdf:type foaf:Person, dbpedia-owl:MusicalArtist .",
            &music_prefixes(),
        )
        .unwrap();
        assert_eq!(
            g.elements,
            vec![
                PatternElement::Triple(TriplePattern::new(
                    var("mus"),
                    iri(vocab::RDF_TYPE),
                    iri("http://xmlns.com/foaf/0.1/Person")
                )),
                PatternElement::Triple(TriplePattern::new(
                    var("mus"),
                    iri(vocab::RDF_TYPE),
                    iri("http://dbpedia.org/ontology/MusicalArtist")
                )),
            ]
        );
    }

    #[test]
    fn sequence_path_in_optional() {
        let g = parse_rdf_pattern(
            "OPTIONAL { ?mus dbpedia-owl:hometown / rdfs:label ?twn }",
            &music_prefixes(),
        )
        .unwrap();
        let [PatternElement::Optional(inner)] = &g.elements[..] else {
            panic!("expected a single OPTIONAL, got {g:?}");
        };
        let fresh = var(".path0");
        assert_eq!(
            inner.elements,
            vec![
                PatternElement::Triple(TriplePattern::new(
                    var("mus"),
                    iri("http://dbpedia.org/ontology/hometown"),
                    fresh.clone()
                )),
                PatternElement::Triple(TriplePattern::new(
                    fresh,
                    iri("http://www.w3.org/2000/01/rdf-schema#label"),
                    var("twn")
                )),
            ]
        );
        assert_eq!(
            g.visible_variables(),
            vec![Variable::new("mus"), Variable::new("twn")]
        );
    }

    #[test]
    fn inequality_filter() {
        let g = parse_rdf_pattern("FILTER(?mus1 != ?mus2)", &PrefixMap::new()).unwrap();
        assert_eq!(
            g.elements,
            vec![PatternElement::Filter(FilterExpr::Compare {
                left: var("mus1"),
                op: CompareOp::NotEq,
                right: var("mus2")
            })]
        );
    }

    #[test]
    fn lang_filter_and_trailing_dot_variable() {
        let g = parse_rdf_pattern(
            "OPTIONAL { ?grp rdfs:label ?nam. FILTER(lang(?nam) = \"ja\")}",
            &music_prefixes(),
        )
        .unwrap();
        let PatternElement::Optional(inner) = &g.elements[0] else {
            panic!()
        };
        assert_eq!(
            inner.elements[1],
            PatternElement::Filter(FilterExpr::LangEquals {
                var: Variable::new("nam"),
                tag: "ja".into()
            })
        );
    }

    #[test]
    fn predicate_lists_with_a() {
        let g = parse_rdf_pattern(
            "?grp a schema:MusicGroup ;\n dbpedia-owl:bandMember ?mus1 , ?mus2 .",
            &music_prefixes(),
        )
        .unwrap();
        assert_eq!(g.triple_count(), 3);
    }

    #[test]
    fn unsupported_features() {
        let p = music_prefixes();
        for (src, feature) in [
            ("{ ?a ?b ?c } UNION { ?a ?b ?d }", "nested group pattern"),
            ("?a ?b ?c . UNION", "UNION"),
            ("?a rdfs:label* ?c", "property path operator `*`"),
            ("?a rdfs:label|rdf:type ?c", "property path operator `|`"),
            ("?a ?b ?c FILTER(?c < 3)", "FILTER operator `<`"),
            (
                "?a ?b ?c FILTER(regex(?c, \"x\"))",
                "FILTER function `regex`",
            ),
            ("?a ?b [ rdf:type ?c ]", "blank node property list"),
            ("BIND(1 AS ?x)", "BIND"),
        ] {
            match parse_rdf_pattern(src, &p) {
                Err(PatternError::UnsupportedFeature { feature: f, .. }) => {
                    assert_eq!(f, feature, "{src}")
                }
                other => panic!("{src}: {other:?}"),
            }
        }
    }

    #[test]
    fn unknown_prefix_is_positioned() {
        match parse_rdf_pattern("?a\n  zz:p ?b .", &music_prefixes()) {
            Err(PatternError::Syntax { line, col, message }) => {
                assert_eq!((line, col), (2, 3));
                assert!(message.contains("zz"), "{message}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn syntax_errors() {
        let p = music_prefixes();
        for src in [
            "?a rdf:type",
            "?a rdf:type ?b ?c",
            "OPTIONAL { ?a ?b ?c",
            "FILTER(?a)",
            "?a ?p/rdf:type ?b",
        ] {
            assert!(
                matches!(parse_rdf_pattern(src, &p), Err(PatternError::Syntax { .. })),
                "{src}"
            );
        }
    }

    #[test]
    fn select_query_with_modifiers() {
        let q = parse_select_query(
            "PREFIX ex: <http://e/>\nSELECT DISTINCT ?a ?b WHERE { ?a ex:p ?b . } ORDER BY ?a DESC(?b) LIMIT 5 OFFSET 10",
        )
        .unwrap();
        assert!(q.distinct);
        assert_eq!(
            q.projection,
            Some(vec![Variable::new("a"), Variable::new("b")])
        );
        assert_eq!(q.order_by.len(), 2);
        assert!(q.order_by[1].descending);
        assert_eq!((q.limit, q.offset), (Some(5), 10));
    }

    #[test]
    fn select_star_without_where_keyword() {
        let q = parse_select_query("SELECT * { ?s ?p ?o }").unwrap();
        assert_eq!(q.projection, None);
        assert_eq!(q.pattern.triple_count(), 1);
    }
}
