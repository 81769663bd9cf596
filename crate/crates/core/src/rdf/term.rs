use std::fmt;

pub mod vocab {
    pub const RDF: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
    pub const XSD: &str = "http://www.w3.org/2001/XMLSchema#";

    pub const RDF_TYPE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
    pub const RDF_LANG_STRING: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
    pub const XSD_STRING: &str = "http://www.w3.org/2001/XMLSchema#string";
    pub const XSD_BOOLEAN: &str = "http://www.w3.org/2001/XMLSchema#boolean";
    pub const XSD_INTEGER: &str = "http://www.w3.org/2001/XMLSchema#integer";
    pub const XSD_DECIMAL: &str = "http://www.w3.org/2001/XMLSchema#decimal";
    pub const XSD_DOUBLE: &str = "http://www.w3.org/2001/XMLSchema#double";
    pub const XSD_FLOAT: &str = "http://www.w3.org/2001/XMLSchema#float";
    pub const XSD_DATE: &str = "http://www.w3.org/2001/XMLSchema#date";
    pub const XSD_DATE_TIME: &str = "http://www.w3.org/2001/XMLSchema#dateTime";
    pub const XSD_DATE_TIME_STAMP: &str = "http://www.w3.org/2001/XMLSchema#dateTimeStamp";

    /// Local names of the XSD types derived from `xsd:integer`.
    pub const INTEGER_TYPES: &[&str] = &[
        "integer",
        "long",
        "int",
        "short",
        "byte",
        "nonNegativeInteger",
        "positiveInteger",
        "nonPositiveInteger",
        "negativeInteger",
        "unsignedLong",
        "unsignedInt",
        "unsignedShort",
        "unsignedByte",
    ];

    pub fn xsd_local(datatype: &str) -> Option<&str> {
        datatype.strip_prefix(XSD)
    }

    pub fn is_integer_type(datatype: &str) -> bool {
        xsd_local(datatype).is_some_and(|l| INTEGER_TYPES.contains(&l))
    }

    pub fn is_floating_type(datatype: &str) -> bool {
        matches!(xsd_local(datatype), Some("decimal" | "double" | "float"))
    }
}

/// An RDF literal. Language tags are stored lowercased.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    lexical: String,
    datatype: String,
    language: Option<String>,
}

impl Literal {
    /// A simple literal, typed `xsd:string`.
    pub fn plain(lexical: impl Into<String>) -> Self {
        Literal {
            lexical: lexical.into(),
            datatype: vocab::XSD_STRING.to_owned(),
            language: None,
        }
    }

    pub fn lang(lexical: impl Into<String>, tag: &str) -> Self {
        Literal {
            lexical: lexical.into(),
            datatype: vocab::RDF_LANG_STRING.to_owned(),
            language: Some(tag.to_ascii_lowercase()),
        }
    }

    /// A typed literal. Passing `rdf:langString` without a tag is not
    /// meaningful; such a literal is demoted to `xsd:string`.
    pub fn typed(lexical: impl Into<String>, datatype: impl Into<String>) -> Self {
        let mut datatype = datatype.into();
        if datatype == vocab::RDF_LANG_STRING {
            datatype = vocab::XSD_STRING.to_owned();
        }
        Literal {
            lexical: lexical.into(),
            datatype,
            language: None,
        }
    }

    pub fn lexical(&self) -> &str {
        &self.lexical
    }

    pub fn datatype(&self) -> &str {
        &self.datatype
    }

    pub fn language(&self) -> Option<&str> {
        self.language.as_deref()
    }

    /// Value of a literal whose datatype is a recognized XSD numeric type
    /// and whose lexical form is valid for it.
    pub fn numeric_value(&self) -> Option<Numeric> {
        let lex = self.lexical.trim();
        if vocab::is_integer_type(&self.datatype) {
            let digits = lex.strip_prefix('+').unwrap_or(lex);
            return digits.parse::<i128>().ok().map(Numeric::Integer);
        }
        if vocab::is_floating_type(&self.datatype) {
            let v = match lex {
                "INF" | "+INF" => f64::INFINITY,
                "-INF" => f64::NEG_INFINITY,
                "NaN" => f64::NAN,
                _ if lex.contains(['i', 'I', 'n', 'N']) => return None,
                _ => lex.parse::<f64>().ok()?,
            };
            return Some(Numeric::Float(v));
        }
        None
    }
}

/// Numeric value used for value-space comparison in filters.
#[derive(Debug, Clone, Copy)]
pub enum Numeric {
    Integer(i128),
    Float(f64),
}

impl Numeric {
    pub fn value_eq(self, other: Numeric) -> bool {
        match (self, other) {
            (Numeric::Integer(a), Numeric::Integer(b)) => a == b,
            (a, b) => a.as_f64() == b.as_f64(),
        }
    }

    fn as_f64(self) -> f64 {
        match self {
            Numeric::Integer(i) => i as f64,
            Numeric::Float(f) => f,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RdfTerm {
    Iri(String),
    BlankNode(String),
    Literal(Literal),
}

impl RdfTerm {
    pub fn iri(iri: impl Into<String>) -> Self {
        RdfTerm::Iri(iri.into())
    }

    pub fn blank(id: impl Into<String>) -> Self {
        RdfTerm::BlankNode(id.into())
    }

    pub fn literal(lit: Literal) -> Self {
        RdfTerm::Literal(lit)
    }

    pub fn is_iri(&self) -> bool {
        matches!(self, RdfTerm::Iri(_))
    }

    pub fn is_literal(&self) -> bool {
        matches!(self, RdfTerm::Literal(_))
    }

    pub fn as_iri(&self) -> Option<&str> {
        match self {
            RdfTerm::Iri(i) => Some(i),
            _ => None,
        }
    }

    pub fn as_literal(&self) -> Option<&Literal> {
        match self {
            RdfTerm::Literal(l) => Some(l),
            _ => None,
        }
    }

    /// Equality used by `=` in filters: value-space for recognized
    /// numerics, term identity otherwise.
    pub fn sparql_eq(&self, other: &RdfTerm) -> bool {
        if let (RdfTerm::Literal(a), RdfTerm::Literal(b)) = (self, other) {
            if let (Some(x), Some(y)) = (a.numeric_value(), b.numeric_value()) {
                return x.value_eq(y);
            }
        }
        self == other
    }
}

impl From<Literal> for RdfTerm {
    fn from(lit: Literal) -> Self {
        RdfTerm::Literal(lit)
    }
}

/// N-Triples rendering.
impl fmt::Display for RdfTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RdfTerm::Iri(iri) => write!(f, "<{}>", escape_iri(iri)),
            RdfTerm::BlankNode(id) => write!(f, "_:{id}"),
            RdfTerm::Literal(lit) => {
                write!(f, "\"{}\"", escape_string(&lit.lexical))?;
                if let Some(lang) = &lit.language {
                    write!(f, "@{lang}")
                } else if lit.datatype != vocab::XSD_STRING {
                    write!(f, "^^<{}>", escape_iri(&lit.datatype))
                } else {
                    Ok(())
                }
            }
        }
    }
}

pub(crate) fn escape_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            '\u{8}' => out.push_str("\\b"),
            '\u{c}' => out.push_str("\\f"),
            c if (c as u32) < 0x20 || c == '\u{7f}' => {
                out.push_str(&format!("\\u{:04X}", c as u32));
            }
            c => out.push(c),
        }
    }
    out
}

fn escape_iri(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        if (c as u32) <= 0x20 || matches!(c, '<' | '>' | '"' | '{' | '}' | '|' | '^' | '`' | '\\') {
            out.push_str(&format!("\\u{:04X}", c as u32));
        } else {
            out.push(c);
        }
    }
    out
}

/// Checks that `iri` is an absolute IRI: a scheme, a colon, and no
/// characters forbidden in IRI references.
pub fn is_absolute_iri(iri: &str) -> bool {
    let Some((scheme, _)) = iri.split_once(':') else {
        return false;
    };
    let mut chars = scheme.chars();
    let scheme_ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '+' | '-' | '.'));
    scheme_ok
        && !iri.chars().any(|c| {
            (c as u32) <= 0x20 || matches!(c, '<' | '>' | '"' | '{' | '}' | '|' | '^' | '`' | '\\')
        })
}
