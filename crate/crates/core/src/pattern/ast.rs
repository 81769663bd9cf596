use std::fmt;

use indexmap::IndexSet;

use crate::rdf::{vocab, RdfTerm};

/// A pattern variable. Names starting with `.` are internal variables
/// introduced when rewriting sequence paths; the lexer can never produce
/// them from source text.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Variable(String);

impl Variable {
    pub fn new(name: impl Into<String>) -> Self {
        Variable(name.into())
    }

    pub(crate) fn fresh(n: usize) -> Self {
        Variable(format!(".path{n}"))
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    pub fn is_fresh(&self) -> bool {
        self.0.starts_with('.')
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "?{}", self.0)
    }
}

impl From<&str> for Variable {
    fn from(s: &str) -> Self {
        Variable::new(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum VarOrTerm {
    Var(Variable),
    Term(RdfTerm),
}

impl VarOrTerm {
    pub fn as_var(&self) -> Option<&Variable> {
        match self {
            VarOrTerm::Var(v) => Some(v),
            VarOrTerm::Term(_) => None,
        }
    }
}

impl From<Variable> for VarOrTerm {
    fn from(v: Variable) -> Self {
        VarOrTerm::Var(v)
    }
}

impl From<RdfTerm> for VarOrTerm {
    fn from(t: RdfTerm) -> Self {
        VarOrTerm::Term(t)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TriplePattern {
    pub subject: VarOrTerm,
    pub predicate: VarOrTerm,
    pub object: VarOrTerm,
}

impl TriplePattern {
    pub fn new(
        subject: impl Into<VarOrTerm>,
        predicate: impl Into<VarOrTerm>,
        object: impl Into<VarOrTerm>,
    ) -> Self {
        TriplePattern {
            subject: subject.into(),
            predicate: predicate.into(),
            object: object.into(),
        }
    }

    pub fn positions(&self) -> [&VarOrTerm; 3] {
        [&self.subject, &self.predicate, &self.object]
    }

    pub fn variables(&self) -> impl Iterator<Item = &Variable> {
        self.positions().into_iter().filter_map(VarOrTerm::as_var)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CompareOp {
    Eq,
    NotEq,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FilterExpr {
    Compare {
        left: VarOrTerm,
        op: CompareOp,
        right: VarOrTerm,
    },
    /// `lang(?var) = "tag"`
    LangEquals { var: Variable, tag: String },
}

impl FilterExpr {
    pub fn variables(&self) -> Vec<&Variable> {
        match self {
            FilterExpr::Compare { left, right, .. } => [left, right]
                .into_iter()
                .filter_map(VarOrTerm::as_var)
                .collect(),
            FilterExpr::LangEquals { var, .. } => vec![var],
        }
    }

    /// Evaluates against a row; any unbound operand makes the filter false.
    pub fn holds<'a>(&'a self, lookup: impl Fn(&Variable) -> Option<&'a RdfTerm>) -> bool {
        let resolve = |x: &'a VarOrTerm| match x {
            VarOrTerm::Var(v) => lookup(v),
            VarOrTerm::Term(t) => Some(t),
        };
        match self {
            FilterExpr::Compare { left, op, right } => {
                let (Some(l), Some(r)) = (resolve(left), resolve(right)) else {
                    return false;
                };
                let eq = l.sparql_eq(r);
                match op {
                    CompareOp::Eq => eq,
                    CompareOp::NotEq => !eq,
                }
            }
            FilterExpr::LangEquals { var, tag } => match lookup(var) {
                Some(RdfTerm::Literal(lit)) => lang_matches(lit.language().unwrap_or(""), tag),
                _ => false,
            },
        }
    }
}

/// Case-insensitive language comparison. A tag without subtags matches on
/// the literal's primary subtag, so `ja` matches `ja` and `ja-jp`.
pub fn lang_matches(literal_lang: &str, tag: &str) -> bool {
    if tag.contains('-') {
        literal_lang.eq_ignore_ascii_case(tag)
    } else {
        let primary = literal_lang.split('-').next().unwrap_or("");
        primary.eq_ignore_ascii_case(tag)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PatternElement {
    Triple(TriplePattern),
    Optional(GraphPattern),
    Filter(FilterExpr),
}

/// A group graph pattern: triple patterns, OPTIONAL groups and FILTERs
/// in source order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GraphPattern {
    pub elements: Vec<PatternElement>,
}

impl GraphPattern {
    pub fn new(elements: Vec<PatternElement>) -> Self {
        GraphPattern { elements }
    }

    /// In-scope variables (those bound by triple patterns, including inside
    /// OPTIONAL groups), in order of first appearance.
    pub fn variables(&self) -> IndexSet<Variable> {
        let mut out = IndexSet::new();
        self.collect_vars(&mut out, false);
        out
    }

    /// In-scope variables minus the internal path variables.
    pub fn visible_variables(&self) -> Vec<Variable> {
        self.variables()
            .into_iter()
            .filter(|v| !v.is_fresh())
            .collect()
    }

    /// Every variable mentioned anywhere, filters included.
    pub fn all_variables(&self) -> IndexSet<Variable> {
        let mut out = IndexSet::new();
        self.collect_vars(&mut out, true);
        out
    }

    fn collect_vars(&self, out: &mut IndexSet<Variable>, with_filters: bool) {
        for el in &self.elements {
            match el {
                PatternElement::Triple(tp) => out.extend(tp.variables().cloned()),
                PatternElement::Optional(g) => g.collect_vars(out, with_filters),
                PatternElement::Filter(f) if with_filters => {
                    out.extend(f.variables().into_iter().cloned())
                }
                PatternElement::Filter(_) => {}
            }
        }
    }

    pub fn filters(&self) -> impl Iterator<Item = &FilterExpr> {
        self.elements.iter().filter_map(|e| match e {
            PatternElement::Filter(f) => Some(f),
            _ => None,
        })
    }

    /// Number of triple patterns, nested groups included.
    pub fn triple_count(&self) -> usize {
        self.elements
            .iter()
            .map(|e| match e {
                PatternElement::Triple(_) => 1,
                PatternElement::Optional(g) => g.triple_count(),
                PatternElement::Filter(_) => 0,
            })
            .sum()
    }
}

pub(crate) fn rdf_type() -> RdfTerm {
    RdfTerm::iri(vocab::RDF_TYPE)
}
