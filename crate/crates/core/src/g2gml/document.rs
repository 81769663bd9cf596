use std::collections::HashSet;
use std::fmt;

use super::pg_pattern::{self, PropertyMapping, VarSite};
use super::SyntaxError;
use crate::pattern::{parse_rdf_pattern, GraphPattern, PatternError, Variable};
use crate::rdf::{PrefixError, PrefixMap};

/// An RDF pattern as written (comments stripped, lines trimmed) together
/// with its parsed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RdfPatternDef {
    pub text: String,
    pub pattern: GraphPattern,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeMappingDef {
    pub node_var: Variable,
    pub label: String,
    pub properties: Vec<PropertyMapping>,
    pub rdf_pattern: RdfPatternDef,
    /// 1-based line of the PG pattern in the source document.
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeMappingDef {
    pub src_var: Variable,
    pub src_label: String,
    pub dst_var: Variable,
    pub dst_label: String,
    pub edge_label: String,
    pub properties: Vec<PropertyMapping>,
    pub rdf_pattern: RdfPatternDef,
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MappingDocument {
    pub prefixes: PrefixMap,
    pub node_mappings: Vec<NodeMappingDef>,
    pub edge_mappings: Vec<EdgeMappingDef>,
}

fn dedup(vars: impl IntoIterator<Item = Variable>) -> Vec<Variable> {
    let mut out: Vec<Variable> = Vec::new();
    for v in vars {
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

impl NodeMappingDef {
    /// The node variable followed by the property variables.
    pub fn projected_vars(&self) -> Vec<Variable> {
        dedup(
            std::iter::once(self.node_var.clone())
                .chain(self.properties.iter().map(|p| p.var.clone())),
        )
    }

    pub fn pg_pattern(&self) -> String {
        pg_pattern::PgNodePattern {
            var: self.node_var.clone(),
            label: self.label.clone(),
            properties: self.properties.clone(),
        }
        .to_string()
    }
}

impl EdgeMappingDef {
    pub fn projected_vars(&self) -> Vec<Variable> {
        dedup(
            [self.src_var.clone(), self.dst_var.clone()]
                .into_iter()
                .chain(self.properties.iter().map(|p| p.var.clone())),
        )
    }

    pub fn pg_pattern(&self) -> String {
        let endpoint = |var: &Variable, label: &str| pg_pattern::PgNodePattern {
            var: var.clone(),
            label: label.to_owned(),
            properties: Vec::new(),
        };
        pg_pattern::PgEdgePattern {
            src: endpoint(&self.src_var, &self.src_label),
            label: self.edge_label.clone(),
            properties: self.properties.clone(),
            dst: endpoint(&self.dst_var, &self.dst_label),
        }
        .to_string()
    }
}

/// Either kind of mapping, for code that treats both alike.
#[derive(Debug, Clone, Copy)]
pub enum MappingRef<'a> {
    Node(&'a NodeMappingDef),
    Edge(&'a EdgeMappingDef),
}

impl<'a> MappingRef<'a> {
    /// Node label or edge label.
    pub fn label(&self) -> &'a str {
        match self {
            MappingRef::Node(m) => &m.label,
            MappingRef::Edge(m) => &m.edge_label,
        }
    }

    pub fn projected_vars(&self) -> Vec<Variable> {
        match self {
            MappingRef::Node(m) => m.projected_vars(),
            MappingRef::Edge(m) => m.projected_vars(),
        }
    }

    pub fn rdf_pattern(&self) -> &'a RdfPatternDef {
        match self {
            MappingRef::Node(m) => &m.rdf_pattern,
            MappingRef::Edge(m) => &m.rdf_pattern,
        }
    }
}

impl<'a> From<&'a NodeMappingDef> for MappingRef<'a> {
    fn from(m: &'a NodeMappingDef) -> Self {
        MappingRef::Node(m)
    }
}

impl<'a> From<&'a EdgeMappingDef> for MappingRef<'a> {
    fn from(m: &'a EdgeMappingDef) -> Self {
        MappingRef::Edge(m)
    }
}

impl MappingDocument {
    pub fn node_mapping(&self, label: &str) -> Option<&NodeMappingDef> {
        self.node_mappings.iter().find(|m| m.label == label)
    }

    /// Structural equality ignoring source line numbers.
    pub fn same_structure(&self, other: &MappingDocument) -> bool {
        fn strip(doc: &MappingDocument) -> MappingDocument {
            let mut d = doc.clone();
            d.node_mappings.iter_mut().for_each(|m| m.line = 0);
            d.edge_mappings.iter_mut().for_each(|m| m.line = 0);
            d
        }
        strip(self) == strip(other)
    }
}

/// Canonical text: prefixes, then node mappings, then edge mappings, with
/// RDF pattern lines indented by four spaces.
impl fmt::Display for MappingDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, iri) in self.prefixes.iter() {
            writeln!(f, "PREFIX {p}: <{iri}>")?;
        }
        let blocks = self
            .node_mappings
            .iter()
            .map(|m| (m.pg_pattern(), &m.rdf_pattern.text))
            .chain(
                self.edge_mappings
                    .iter()
                    .map(|m| (m.pg_pattern(), &m.rdf_pattern.text)),
            );
        for (pg, rdf) in blocks {
            writeln!(f)?;
            writeln!(f, "{pg}")?;
            for line in rdf.lines() {
                writeln!(f, "    {line}")?;
            }
        }
        Ok(())
    }
}

pub fn expand_prefixed_name(name: &str, prefixes: &PrefixMap) -> Result<String, PrefixError> {
    prefixes.expand(name)
}

/// Removes a `#` comment, ignoring `#` inside string literals and `<…>`
/// IRI references.
pub(crate) fn strip_comment(line: &str) -> &str {
    let bytes = line.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'#' => return &line[..i],
            q @ (b'"' | b'\'') => {
                i += 1;
                while i < bytes.len() && bytes[i] != q {
                    if bytes[i] == b'\\' {
                        i += 1;
                    }
                    i += 1;
                }
            }
            b'<' => {
                let rest = &bytes[i + 1..];
                if let Some(end) = rest
                    .iter()
                    .position(|b| *b == b'>' || b.is_ascii_whitespace() || *b == b'"')
                {
                    if rest[end] == b'>' {
                        i += end + 1;
                    }
                }
            }
            _ => {}
        }
        i += 1;
    }
    line
}

struct Block {
    line: usize,
    pg: String,
    /// (line number, indent width in chars, trimmed text)
    body: Vec<(usize, usize, String)>,
}

pub fn parse_document(source: &str) -> Result<MappingDocument, SyntaxError> {
    let mut prefixes = PrefixMap::new();
    let mut blocks: Vec<Block> = Vec::new();

    for (idx, raw) in source.lines().enumerate() {
        let line_no = idx + 1;
        let line = strip_comment(raw).trim_end();
        if line.trim().is_empty() {
            continue;
        }
        if line.starts_with([' ', '\t']) {
            let Some(block) = blocks.last_mut() else {
                let col = indent_width(line) + 1;
                return Err(SyntaxError::new(
                    line_no,
                    col,
                    "indented line outside of a mapping",
                ));
            };
            let indent = indent_width(line);
            block.body.push((line_no, indent, line.trim().to_owned()));
            continue;
        }
        let first_word: String = line
            .chars()
            .take_while(|c| c.is_ascii_alphabetic())
            .collect();
        if first_word.eq_ignore_ascii_case("PREFIX") {
            if !blocks.is_empty() {
                return Err(SyntaxError::new(
                    line_no,
                    1,
                    "PREFIX declarations must precede the first mapping",
                ));
            }
            parse_prefix_line(line, line_no, &mut prefixes)?;
        } else if line.starts_with(['?', '$', '}', '<'])
            || ["OPTIONAL", "FILTER"]
                .iter()
                .any(|k| first_word.eq_ignore_ascii_case(k))
        {
            return Err(SyntaxError::new(
                line_no,
                1,
                "RDF pattern line must be indented",
            ));
        } else {
            blocks.push(Block {
                line: line_no,
                pg: line.to_owned(),
                body: Vec::new(),
            });
        }
    }

    let mut doc = MappingDocument {
        prefixes,
        node_mappings: Vec::new(),
        edge_mappings: Vec::new(),
    };
    let mut edge_endpoint_sites = Vec::new();
    for block in blocks {
        let rdf_pattern = block_pattern(&block, &doc.prefixes)?;
        let scope: HashSet<Variable> = rdf_pattern.pattern.variables().into_iter().collect();
        if pg_pattern::is_edge_line(&block.pg) {
            let (e, sites) = pg_pattern::parse_edge_line(&block.pg, block.line)?;
            check_vars(&sites, &scope, block.line)?;
            if e.src.var == e.dst.var {
                let col = sites.get(1).map_or(1, |s| s.col);
                return Err(SyntaxError::new(
                    block.line,
                    col,
                    "edge source and target must use different variables",
                ));
            }
            edge_endpoint_sites.push((block.line, e.src.label.clone(), e.dst.label.clone()));
            doc.edge_mappings.push(EdgeMappingDef {
                src_var: e.src.var,
                src_label: e.src.label,
                dst_var: e.dst.var,
                dst_label: e.dst.label,
                edge_label: e.label,
                properties: e.properties,
                rdf_pattern,
                line: block.line,
            });
        } else {
            let (n, sites) = pg_pattern::parse_node_line(&block.pg, block.line)?;
            check_vars(&sites, &scope, block.line)?;
            if doc.node_mapping(&n.label).is_some() {
                return Err(SyntaxError::new(
                    block.line,
                    1,
                    format!("duplicate node mapping for label `{}`", n.label),
                ));
            }
            doc.node_mappings.push(NodeMappingDef {
                node_var: n.var,
                label: n.label,
                properties: n.properties,
                rdf_pattern,
                line: block.line,
            });
        }
    }

    for (line, src, dst) in edge_endpoint_sites {
        for label in [src, dst] {
            if doc.node_mapping(&label).is_none() {
                return Err(SyntaxError::new(
                    line,
                    1,
                    format!("edge endpoint label `{label}` has no node mapping"),
                ));
            }
        }
    }
    if doc.node_mappings.is_empty() {
        let last = source.lines().count().max(1);
        return Err(SyntaxError::new(
            last,
            1,
            "document contains no node mapping",
        ));
    }
    Ok(doc)
}

fn indent_width(line: &str) -> usize {
    line.chars().take_while(|c| *c == ' ' || *c == '\t').count()
}

fn parse_prefix_line(
    line: &str,
    line_no: usize,
    prefixes: &mut PrefixMap,
) -> Result<(), SyntaxError> {
    let rest = &line["PREFIX".len()..];
    let col_of = |s: &str| line.len() - s.len() + 1;
    if !rest.starts_with([' ', '\t']) {
        return Err(SyntaxError::new(
            line_no,
            7,
            "expected whitespace after PREFIX",
        ));
    }
    let rest = rest.trim_start();
    let Some(colon) = rest.find(':') else {
        return Err(SyntaxError::new(
            line_no,
            col_of(rest),
            "expected prefix name ending in ':'",
        ));
    };
    let name = &rest[..colon];
    if !name
        .chars()
        .all(|c| c.is_alphanumeric() || matches!(c, '_' | '-' | '.'))
    {
        return Err(SyntaxError::new(
            line_no,
            col_of(rest),
            format!("invalid prefix name `{name}`"),
        ));
    }
    let iri_part = rest[colon + 1..].trim_start();
    let iri = iri_part
        .strip_prefix('<')
        .and_then(|s| s.strip_suffix('>'))
        .filter(|s| !s.contains(['<', '>', ' ']));
    let Some(iri) = iri else {
        return Err(SyntaxError::new(
            line_no,
            col_of(iri_part),
            "expected <IRI> after prefix name",
        ));
    };
    prefixes
        .insert(name, iri)
        .map_err(|e| SyntaxError::new(line_no, col_of(rest), e.to_string()))
}

fn block_pattern(block: &Block, prefixes: &PrefixMap) -> Result<RdfPatternDef, SyntaxError> {
    if block.body.is_empty() {
        return Err(SyntaxError::new(
            block.line,
            1,
            "mapping has no indented RDF pattern",
        ));
    }
    let text = block
        .body
        .iter()
        .map(|(_, _, t)| t.as_str())
        .collect::<Vec<_>>()
        .join("\n");
    let pattern = parse_rdf_pattern(&text, prefixes).map_err(|e| {
        let (line, col) = e.position();
        let (doc_line, indent, body) = block
            .body
            .get(line.saturating_sub(1))
            .or(block.body.last())
            .unwrap();
        let col = col.min(body.chars().count() + 1);
        let message = match e {
            PatternError::Syntax { message, .. } => message,
            PatternError::UnsupportedFeature { feature, .. } => {
                format!("unsupported feature: {feature}")
            }
        };
        SyntaxError::new(*doc_line, indent + col, message)
    })?;
    Ok(RdfPatternDef { text, pattern })
}

fn check_vars(
    sites: &[VarSite],
    scope: &HashSet<Variable>,
    line: usize,
) -> Result<(), SyntaxError> {
    for site in sites {
        if !scope.contains(&site.var) {
            return Err(SyntaxError::new(
                line,
                site.col,
                format!(
                    "variable `{}` does not occur in the RDF pattern",
                    site.var.name()
                ),
            ));
        }
    }
    Ok(())
}
