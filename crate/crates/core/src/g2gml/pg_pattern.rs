//! Cypher-like property graph patterns:
//! `(var:Label {key:var, …})` and
//! `(a:A)-[:rel {key:var, …}]->(b:B)`.

use std::fmt;

use super::SyntaxError;
use crate::pattern::Variable;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PropertyMapping {
    pub key: String,
    pub var: Variable,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PgNodePattern {
    pub var: Variable,
    pub label: String,
    pub properties: Vec<PropertyMapping>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PgEdgePattern {
    pub src: PgNodePattern,
    pub label: String,
    pub properties: Vec<PropertyMapping>,
    pub dst: PgNodePattern,
}

/// A variable occurrence with its 1-based column, kept for diagnostics.
#[derive(Debug, Clone)]
pub(crate) struct VarSite {
    pub var: Variable,
    pub col: usize,
}

pub fn parse_pg_node_pattern(line: &str) -> Result<PgNodePattern, SyntaxError> {
    parse_node_line(line, 1).map(|(p, _)| p)
}

pub fn parse_pg_edge_pattern(line: &str) -> Result<PgEdgePattern, SyntaxError> {
    parse_edge_line(line, 1).map(|(p, _)| p)
}

pub(crate) fn is_edge_line(line: &str) -> bool {
    lex(line, 1).is_ok_and(|toks| {
        toks.iter()
            .any(|t| matches!(t.tok, T::LBracket | T::Arrow | T::LArrow))
    })
}

pub(crate) fn parse_node_line(
    line: &str,
    line_no: usize,
) -> Result<(PgNodePattern, Vec<VarSite>), SyntaxError> {
    let mut p = Parser::new(line, line_no)?;
    let mut sites = Vec::new();
    let node = p.node(true, &mut sites)?;
    p.finish()?;
    Ok((node, sites))
}

pub(crate) fn parse_edge_line(
    line: &str,
    line_no: usize,
) -> Result<(PgEdgePattern, Vec<VarSite>), SyntaxError> {
    let mut p = Parser::new(line, line_no)?;
    let mut sites = Vec::new();
    let src = p.node(false, &mut sites)?;
    match p.next("'-['")? {
        Tk { tok: T::Dash, .. } => {}
        t @ Tk { tok: T::LArrow, .. } => {
            return Err(p.err(t.col, "right-to-left edges (`<-`) are not supported"))
        }
        t => return Err(p.unexpected(&t, "'-['")),
    }
    p.expect(T::LBracket, "'['")?;
    let colon = p.next("':'")?;
    match colon.tok {
        T::Colon => {}
        T::Ident(_) => return Err(p.err(colon.col, "edge variables are not supported")),
        _ => return Err(p.unexpected(&colon, "':'")),
    }
    let label = p.ident("edge label")?;
    let properties = if p.peek_is(&T::LBrace) {
        p.properties(&mut sites)?
    } else {
        Vec::new()
    };
    p.expect(T::RBracket, "']'")?;
    match p.next("'->'")? {
        Tk { tok: T::Arrow, .. } => {}
        t @ Tk { tok: T::Dash, .. } => {
            return Err(p.err(t.col, "undirected edges are not supported; use `->`"))
        }
        t => return Err(p.unexpected(&t, "'->'")),
    }
    let dst = p.node(false, &mut sites)?;
    p.finish()?;
    Ok((
        PgEdgePattern {
            src,
            label,
            properties,
            dst,
        },
        sites,
    ))
}

#[derive(Debug, Clone, PartialEq)]
enum T {
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Colon,
    Comma,
    Dash,
    Arrow,
    LArrow,
    Ident(String),
    Literal,
}

impl fmt::Display for T {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            T::LParen => "(",
            T::RParen => ")",
            T::LBracket => "[",
            T::RBracket => "]",
            T::LBrace => "{",
            T::RBrace => "}",
            T::Colon => ":",
            T::Comma => ",",
            T::Dash => "-",
            T::Arrow => "->",
            T::LArrow => "<-",
            T::Ident(s) => s,
            T::Literal => "literal",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone)]
struct Tk {
    tok: T,
    col: usize,
}

fn lex(line: &str, line_no: usize) -> Result<Vec<Tk>, SyntaxError> {
    let chars: Vec<char> = line.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '(' => T::LParen,
            ')' => T::RParen,
            '[' => T::LBracket,
            ']' => T::RBracket,
            '{' => T::LBrace,
            '}' => T::RBrace,
            ':' => T::Colon,
            ',' => T::Comma,
            '-' if chars.get(i + 1) == Some(&'>') => {
                i += 1;
                T::Arrow
            }
            '-' => T::Dash,
            '<' if chars.get(i + 1) == Some(&'-') => {
                i += 1;
                T::LArrow
            }
            '"' | '\'' => {
                let close = chars[i + 1..].iter().position(|&x| x == c);
                match close {
                    Some(n) => i += n + 1,
                    None => {
                        return Err(SyntaxError::new(
                            line_no,
                            col,
                            "unterminated string literal",
                        ))
                    }
                }
                T::Literal
            }
            c if c.is_ascii_alphanumeric() || c == '_' => {
                let start = i;
                while chars
                    .get(i + 1)
                    .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_')
                {
                    i += 1;
                }
                let word: String = chars[start..=i].iter().collect();
                if word.starts_with(|c: char| c.is_ascii_digit()) {
                    T::Literal
                } else {
                    T::Ident(word)
                }
            }
            _ => {
                return Err(SyntaxError::new(
                    line_no,
                    col,
                    format!("unexpected character '{c}'"),
                ))
            }
        };
        out.push(Tk { tok, col });
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: std::iter::Peekable<std::vec::IntoIter<Tk>>,
    line_no: usize,
    end_col: usize,
}

impl Parser {
    fn new(line: &str, line_no: usize) -> Result<Self, SyntaxError> {
        Ok(Parser {
            toks: lex(line, line_no)?.into_iter().peekable(),
            line_no,
            end_col: line.trim_end().chars().count() + 1,
        })
    }

    fn err(&self, col: usize, msg: impl Into<String>) -> SyntaxError {
        SyntaxError::new(self.line_no, col, msg)
    }

    fn unexpected(&self, t: &Tk, expected: &str) -> SyntaxError {
        self.err(t.col, format!("expected {expected}, found `{}`", t.tok))
    }

    fn next(&mut self, expected: &str) -> Result<Tk, SyntaxError> {
        self.toks.next().ok_or_else(|| {
            self.err(
                self.end_col,
                format!("expected {expected} before end of line"),
            )
        })
    }

    fn peek_is(&mut self, t: &T) -> bool {
        self.toks.peek().is_some_and(|x| &x.tok == t)
    }

    fn expect(&mut self, t: T, expected: &str) -> Result<Tk, SyntaxError> {
        let got = self.next(expected)?;
        if got.tok == t {
            Ok(got)
        } else {
            Err(self.unexpected(&got, expected))
        }
    }

    fn ident(&mut self, what: &str) -> Result<String, SyntaxError> {
        let t = self.next(what)?;
        match t.tok {
            T::Ident(s) => Ok(s),
            T::Literal if what == "variable" => Err(self.err(
                t.col,
                "literal constants are not supported as property values",
            )),
            _ => Err(self.unexpected(&t, what)),
        }
    }

    fn var(&mut self, sites: &mut Vec<VarSite>) -> Result<Variable, SyntaxError> {
        let col = self.toks.peek().map_or(self.end_col, |t| t.col);
        let var = Variable::new(self.ident("variable")?);
        sites.push(VarSite {
            var: var.clone(),
            col,
        });
        Ok(var)
    }

    fn node(
        &mut self,
        allow_props: bool,
        sites: &mut Vec<VarSite>,
    ) -> Result<PgNodePattern, SyntaxError> {
        self.expect(T::LParen, "'('")?;
        let var = self.var(sites)?;
        self.expect(T::Colon, "':'")?;
        let label = self.ident("label")?;
        let properties = if allow_props && self.peek_is(&T::LBrace) {
            self.properties(sites)?
        } else {
            Vec::new()
        };
        if self.peek_is(&T::Colon) {
            let t = self.next("')'")?;
            return Err(self.err(t.col, "multiple labels per node pattern are not supported"));
        }
        if !allow_props && self.peek_is(&T::LBrace) {
            let t = self.next("')'")?;
            return Err(self.err(
                t.col,
                "properties belong on the node mapping, not on edge endpoints",
            ));
        }
        self.expect(T::RParen, "')'")?;
        Ok(PgNodePattern {
            var,
            label,
            properties,
        })
    }

    fn properties(
        &mut self,
        sites: &mut Vec<VarSite>,
    ) -> Result<Vec<PropertyMapping>, SyntaxError> {
        self.expect(T::LBrace, "'{'")?;
        let mut props: Vec<PropertyMapping> = Vec::new();
        if self.peek_is(&T::RBrace) {
            self.next("'}'")?;
            return Ok(props);
        }
        loop {
            let key_col = self.toks.peek().map_or(self.end_col, |t| t.col);
            let key = self.ident("property key")?;
            if props.iter().any(|p| p.key == key) {
                return Err(self.err(key_col, format!("duplicate property key `{key}`")));
            }
            self.expect(T::Colon, "':'")?;
            let var = self.var(sites)?;
            props.push(PropertyMapping { key, var });
            let t = self.next("',' or '}'")?;
            match t.tok {
                T::Comma => continue,
                T::RBrace => return Ok(props),
                _ => return Err(self.unexpected(&t, "',' or '}'")),
            }
        }
    }

    fn finish(&mut self) -> Result<(), SyntaxError> {
        match self.toks.next() {
            None => Ok(()),
            Some(t) => Err(self.unexpected(&t, "end of line")),
        }
    }
}

fn write_props(f: &mut fmt::Formatter<'_>, props: &[PropertyMapping]) -> fmt::Result {
    if props.is_empty() {
        return Ok(());
    }
    f.write_str(" {")?;
    for (i, p) in props.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{}:{}", p.key, p.var.name())?;
    }
    f.write_str("}")
}

impl fmt::Display for PgNodePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}", self.var.name(), self.label)?;
        write_props(f, &self.properties)?;
        f.write_str(")")
    }
}

impl fmt::Display for PgEdgePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}:{})-[:{}",
            self.src.var.name(),
            self.src.label,
            self.label
        )?;
        write_props(f, &self.properties)?;
        write!(f, "]->({}:{})", self.dst.var.name(), self.dst.label)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn props(pairs: &[(&str, &str)]) -> Vec<PropertyMapping> {
        pairs
            .iter()
            .map(|(k, v)| PropertyMapping {
                key: k.to_string(),
                var: Variable::new(*v),
            })
            .collect()
    }

    #[test]
    fn musician_node_pattern() {
        let p = parse_pg_node_pattern("(mus:Musician {vis_label:nam, born:dat, hometown:twn})")
            .unwrap();
        assert_eq!(p.var, Variable::new("mus"));
        assert_eq!(p.label, "Musician");
        assert_eq!(
            p.properties,
            props(&[("vis_label", "nam"), ("born", "dat"), ("hometown", "twn")])
        );
    }

    #[test]
    fn node_without_properties() {
        let p = parse_pg_node_pattern("( x : Thing )").unwrap();
        assert_eq!(
            (p.var.name(), p.label.as_str(), p.properties.len()),
            ("x", "Thing", 0)
        );
    }

    #[test]
    fn node_errors() {
        let e = parse_pg_node_pattern("(x Thing)").unwrap_err();
        assert_eq!(e.column, 4);
        assert!(e.message.contains("':'"), "{e}");
        assert!(parse_pg_node_pattern("x:Thing").is_err());
        assert!(parse_pg_node_pattern("(x:Thing").is_err());
        assert!(parse_pg_node_pattern("(x:)").is_err());
        let e = parse_pg_node_pattern("(x:T {a:b,})").unwrap_err();
        assert_eq!(e.column, 11);
        let e = parse_pg_node_pattern("(x:T {a:\"lit\"})").unwrap_err();
        assert!(e.message.contains("literal"), "{e}");
        assert!(parse_pg_node_pattern("(x:T {a:b, a:c})")
            .unwrap_err()
            .message
            .contains("duplicate"));
        assert!(parse_pg_node_pattern("(x:A:B)").is_err());
        assert!(parse_pg_node_pattern("(x:9abc)").is_err());
    }

    #[test]
    fn same_group_edge_pattern() {
        let e = parse_pg_edge_pattern(
            "(mus1:Musician)-[:same_group {label:nam, length:len}]->(mus2:Musician)",
        )
        .unwrap();
        assert_eq!(
            (e.src.var.name(), e.src.label.as_str()),
            ("mus1", "Musician")
        );
        assert_eq!(e.label, "same_group");
        assert_eq!(e.properties, props(&[("label", "nam"), ("length", "len")]));
        assert_eq!(
            (e.dst.var.name(), e.dst.label.as_str()),
            ("mus2", "Musician")
        );
    }

    #[test]
    fn edge_without_properties() {
        let e = parse_pg_edge_pattern("(a:X)-[:r]->(b:Y)").unwrap();
        assert_eq!(
            (e.label.as_str(), e.properties.len(), e.dst.label.as_str()),
            ("r", 0, "Y")
        );
    }

    #[test]
    fn edge_direction_errors() {
        let e = parse_pg_edge_pattern("(a:X)-[:r]-(b:Y)").unwrap_err();
        assert!(e.message.contains("undirected"), "{e}");
        let e = parse_pg_edge_pattern("(a:X)<-[:r]-(b:Y)").unwrap_err();
        assert!(e.message.contains("right-to-left"), "{e}");
        assert!(parse_pg_edge_pattern("(a:X)-[e:r]->(b:Y)")
            .unwrap_err()
            .message
            .contains("edge variables"));
    }

    #[test]
    fn display_is_canonical() {
        let src = "(mus1:Musician)-[:same_group {label:nam, length:len}]->(mus2:Musician)";
        assert_eq!(parse_pg_edge_pattern(src).unwrap().to_string(), src);
        assert_eq!(
            parse_pg_node_pattern("(x : T{a : b})").unwrap().to_string(),
            "(x:T {a:b})"
        );
    }
}
