use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use chrono::{DateTime, NaiveDate, NaiveDateTime};

use crate::rdf::{vocab, Literal};

/// A property value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PgValue {
    Text(String),
    Integer(i64),
    Decimal(Decimal),
    Boolean(bool),
    /// An `xsd:date` or `xsd:dateTime` lexical form, validated.
    DateTime(String),
}

/// A finite `f64` with total equality and ordering.
#[derive(Debug, Clone, Copy)]
pub struct Decimal(f64);

impl Decimal {
    /// `None` for NaN and infinities.
    pub fn new(v: f64) -> Option<Self> {
        v.is_finite().then_some(Decimal(v))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl PartialEq for Decimal {
    fn eq(&self, other: &Self) -> bool {
        self.0.to_bits() == other.0.to_bits()
    }
}

impl Eq for Decimal {}

impl Hash for Decimal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.to_bits().hash(state);
    }
}

impl PartialOrd for Decimal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Decimal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

/// Always contains a `.` or an exponent, so it reads back as a decimal.
impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl PgValue {
    /// Type name used by the flat-file formats.
    pub fn type_name(&self) -> &'static str {
        match self {
            PgValue::Text(_) => "string",
            PgValue::Integer(_) => "integer",
            PgValue::Decimal(_) => "decimal",
            PgValue::Boolean(_) => "boolean",
            PgValue::DateTime(_) => "datetime",
        }
    }
}

/// Unquoted lexical rendering.
impl fmt::Display for PgValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PgValue::Text(s) | PgValue::DateTime(s) => f.write_str(s),
            PgValue::Integer(i) => write!(f, "{i}"),
            PgValue::Decimal(d) => write!(f, "{d}"),
            PgValue::Boolean(b) => write!(f, "{b}"),
        }
    }
}

/// A literal whose lexical form is invalid for its datatype.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MalformedLexical {
    pub lexical: String,
    pub datatype: String,
}

impl fmt::Display for MalformedLexical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "malformed lexical form \"{}\" for <{}>, kept as text",
            self.lexical, self.datatype
        )
    }
}

/// Maps a literal to a property value by datatype. Malformed lexical
/// forms become `Text` and are reported alongside.
pub fn value_from_literal(lit: &Literal) -> (PgValue, Option<MalformedLexical>) {
    let lex = lit.lexical();
    let dt = lit.datatype();
    let typed = if vocab::is_integer_type(dt) {
        Some(
            lex.trim()
                .strip_prefix('+')
                .unwrap_or(lex.trim())
                .parse::<i64>()
                .ok()
                .map(PgValue::Integer),
        )
    } else if vocab::is_floating_type(dt) {
        match lex.trim() {
            // valid, but not representable as a finite number
            "INF" | "+INF" | "-INF" | "NaN" => return (PgValue::Text(lex.to_owned()), None),
            s => Some(
                s.chars()
                    .all(|c| c.is_ascii_digit() || matches!(c, '+' | '-' | '.' | 'e' | 'E'))
                    .then(|| s.parse::<f64>().ok())
                    .flatten()
                    .and_then(Decimal::new)
                    .map(PgValue::Decimal),
            ),
        }
    } else if dt == vocab::XSD_BOOLEAN {
        Some(match lex.trim() {
            "true" | "1" => Some(PgValue::Boolean(true)),
            "false" | "0" => Some(PgValue::Boolean(false)),
            _ => None,
        })
    } else if dt == vocab::XSD_DATE {
        Some(valid_date(lex.trim()).then(|| PgValue::DateTime(lex.trim().to_owned())))
    } else if dt == vocab::XSD_DATE_TIME || dt == vocab::XSD_DATE_TIME_STAMP {
        Some(valid_date_time(lex.trim()).then(|| PgValue::DateTime(lex.trim().to_owned())))
    } else {
        None
    };
    match typed {
        None => (PgValue::Text(lex.to_owned()), None),
        Some(Some(v)) => (v, None),
        Some(None) => (
            PgValue::Text(lex.to_owned()),
            Some(MalformedLexical {
                lexical: lex.to_owned(),
                datatype: dt.to_owned(),
            }),
        ),
    }
}

fn strip_timezone(s: &str) -> &str {
    if let Some(rest) = s.strip_suffix('Z') {
        return rest;
    }
    let b = s.as_bytes();
    if b.len() > 6 && matches!(b[b.len() - 6], b'+' | b'-') && b[b.len() - 3] == b':' {
        return &s[..s.len() - 6];
    }
    s
}

fn valid_date(s: &str) -> bool {
    NaiveDate::parse_from_str(strip_timezone(s), "%Y-%m-%d").is_ok()
}

fn valid_date_time(s: &str) -> bool {
    DateTime::parse_from_rfc3339(s).is_ok()
        || NaiveDateTime::parse_from_str(s, "%Y-%m-%dT%H:%M:%S%.f").is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn typed(lex: &str, local: &str) -> (PgValue, Option<MalformedLexical>) {
        value_from_literal(&Literal::typed(lex, format!("{}{local}", vocab::XSD)))
    }

    #[test]
    fn datatype_mapping() {
        assert_eq!(typed("52516", "integer").0, PgValue::Integer(52516));
        assert_eq!(typed("+7", "int").0, PgValue::Integer(7));
        assert_eq!(
            typed("2.5", "decimal").0,
            PgValue::Decimal(Decimal::new(2.5).unwrap())
        );
        assert_eq!(typed("1E3", "double").0.to_string(), "1000.0");
        assert_eq!(typed("1", "boolean").0, PgValue::Boolean(true));
        assert_eq!(
            typed("1956-02-26", "date").0,
            PgValue::DateTime("1956-02-26".into())
        );
        assert_eq!(
            typed("1956-02-26+09:00", "date").0,
            PgValue::DateTime("1956-02-26+09:00".into())
        );
        assert_eq!(
            typed("2001-10-26T21:32:52Z", "dateTime").0.type_name(),
            "datetime"
        );
        assert_eq!(
            typed("2001-10-26T21:32:52.12", "dateTime").0.type_name(),
            "datetime"
        );
        let (v, w) = value_from_literal(&Literal::lang("サザンオールスターズ", "ja"));
        assert_eq!((v, w), (PgValue::Text("サザンオールスターズ".into()), None));
        assert_eq!(
            value_from_literal(&Literal::plain("x")).0,
            PgValue::Text("x".into())
        );
    }

    #[test]
    fn malformed_falls_back_to_text() {
        for (lex, local) in [
            ("abc", "integer"),
            ("1.5", "integer"),
            ("inf", "double"),
            ("yes", "boolean"),
            ("1956-02-30", "date"),
            ("99999999999999999999", "long"),
        ] {
            let (v, w) = typed(lex, local);
            assert_eq!(v, PgValue::Text(lex.into()));
            assert!(w.is_some(), "{lex}^^{local}");
        }
        assert_eq!(typed("NaN", "double"), (PgValue::Text("NaN".into()), None));
    }

    #[test]
    fn decimal_display_reads_back() {
        for v in [1.0, -0.5, 1e300, 123456.0] {
            let s = Decimal::new(v).unwrap().to_string();
            assert!(s.contains(['.', 'e']), "{s}");
            assert_eq!(s.parse::<f64>().unwrap(), v);
        }
    }
}
