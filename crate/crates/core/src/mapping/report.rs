use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MappingKind {
    Node,
    Edge,
}

/// Row accounting for one mapping. `rows` always equals
/// `emitted_rows + dropped_rows`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MappingStats {
    pub kind: MappingKind,
    pub label: String,
    pub rows: usize,
    pub emitted_rows: usize,
    pub dropped_rows: usize,
    /// Result pages fetched; zero for local evaluation.
    pub pages: usize,
    pub warnings: Vec<String>,
}

impl MappingStats {
    pub(crate) fn new(kind: MappingKind, label: &str, rows: usize) -> Self {
        MappingStats {
            kind,
            label: label.to_owned(),
            rows,
            emitted_rows: 0,
            dropped_rows: 0,
            pages: 0,
            warnings: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunReport {
    /// Node mappings first, then edge mappings, each in document order.
    pub mappings: Vec<MappingStats>,
    pub nodes: usize,
    pub edges: usize,
}

impl RunReport {
    pub fn dropped_edge_rows(&self) -> usize {
        self.mappings
            .iter()
            .filter(|m| m.kind == MappingKind::Edge)
            .map(|m| m.dropped_rows)
            .sum()
    }

    pub fn warnings(&self) -> impl Iterator<Item = &str> {
        self.mappings
            .iter()
            .flat_map(|m| m.warnings.iter().map(String::as_str))
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .mappings
            .iter()
            .map(|m| m.label.len())
            .max()
            .unwrap_or(0)
            .max(7);
        writeln!(
            f,
            "{:<width$}  kind  {:>8}  {:>8}  {:>8}",
            "mapping", "rows", "emitted", "dropped"
        )?;
        for m in &self.mappings {
            let kind = match m.kind {
                MappingKind::Node => "node",
                MappingKind::Edge => "edge",
            };
            writeln!(
                f,
                "{:<width$}  {kind}  {:>8}  {:>8}  {:>8}",
                m.label, m.rows, m.emitted_rows, m.dropped_rows
            )?;
        }
        writeln!(f, "nodes: {}", self.nodes)?;
        writeln!(f, "edges: {}", self.edges)?;
        let warnings: Vec<&str> = self.warnings().collect();
        if !warnings.is_empty() {
            writeln!(f, "warnings:")?;
            for w in warnings {
                writeln!(f, "  {w}")?;
            }
        }
        Ok(())
    }
}
