//! Property graph output formats. Every emitter is a pure function of the
//! graph, and all output is UTF-8 with `\n` line ends.

mod neo4j;
mod pg_json;
mod pg_text;
mod pgx;

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

pub use neo4j::{emit_neo4j_csv, split_cell};
pub use pg_json::{emit_pg_json, read_pg_json, PgJsonError};
pub use pg_text::emit_pg_text;
pub use pgx::emit_pgx_flat;

use crate::mapping::PropertyGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Format {
    PgText,
    PgJson,
    Neo4jCsv,
    PgxFlat,
}

impl Format {
    pub const ALL: [Format; 4] = [
        Format::PgText,
        Format::PgJson,
        Format::Neo4jCsv,
        Format::PgxFlat,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Format::PgText => "pg",
            Format::PgJson => "pg_json",
            Format::Neo4jCsv => "neo4j_csv",
            Format::PgxFlat => "pgx",
        }
    }

    /// Whether the output is a directory of several files.
    pub fn is_multi_file(self) -> bool {
        matches!(self, Format::Neo4jCsv | Format::PgxFlat)
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownFormat(pub String);

impl fmt::Display for UnknownFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown format `{}` (expected pg, pg_json, neo4j_csv or pgx)",
            self.0
        )
    }
}

impl std::error::Error for UnknownFormat {}

impl FromStr for Format {
    type Err = UnknownFormat;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Format::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| UnknownFormat(s.to_owned()))
    }
}

/// A format together with where it is written: a file for the single-file
/// formats, a directory for the others.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmissionTarget {
    pub format: Format,
    pub output_path: PathBuf,
}

impl EmissionTarget {
    /// Output named after `stem` inside `dir`: `<stem>.pg`, `<stem>.json`,
    /// `<stem>_neo4j/` or `<stem>_pgx/`.
    pub fn in_dir(format: Format, dir: &Path, stem: &str) -> Self {
        let name = match format {
            Format::PgText => format!("{stem}.pg"),
            Format::PgJson => format!("{stem}.json"),
            Format::Neo4jCsv => format!("{stem}_neo4j"),
            Format::PgxFlat => format!("{stem}_pgx"),
        };
        EmissionTarget {
            format,
            output_path: dir.join(name),
        }
    }

    /// The files of this target and their contents.
    pub fn render(&self, graph: &PropertyGraph) -> Vec<(PathBuf, String)> {
        let dir = &self.output_path;
        match self.format {
            Format::PgText => vec![(dir.clone(), emit_pg_text(graph))],
            Format::PgJson => vec![(dir.clone(), emit_pg_json(graph))],
            Format::Neo4jCsv => {
                let (nodes, edges) = emit_neo4j_csv(graph);
                vec![
                    (dir.join("nodes.csv"), nodes),
                    (dir.join("edges.csv"), edges),
                ]
            }
            Format::PgxFlat => {
                let (vertices, edges) = emit_pgx_flat(graph);
                vec![
                    (dir.join("vertices.csv"), vertices),
                    (dir.join("edges.csv"), edges),
                ]
            }
        }
    }
}
