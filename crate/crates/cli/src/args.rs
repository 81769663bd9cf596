use std::collections::HashSet;
use std::path::PathBuf;
use std::time::Duration;

use clap::{ArgAction, Args, Parser};
use g2pg_core::serialize::{EmissionTarget, Format};
use g2pg_core::sparql::EndpointConfig;
use log::LevelFilter;

/// Convert RDF data into a property graph with a G2GML mapping.
#[derive(Debug, Parser)]
#[command(name = "g2pg", version)]
pub struct Cli {
    /// G2GML mapping file.
    pub mapping: PathBuf,

    #[command(flatten)]
    pub source: SourceArgs,

    /// Output format; repeat for several. One of pg, pg_json, neo4j_csv, pgx.
    #[arg(long = "format", value_name = "FORMAT", default_value = "pg")]
    pub formats: Vec<Format>,

    /// Directory for the output files.
    #[arg(long, value_name = "DIR", default_value = ".")]
    pub out: PathBuf,

    /// Rows per request in endpoint mode.
    #[arg(long, value_name = "N", default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    pub page_size: u64,

    /// Per-request timeout in seconds.
    #[arg(long, value_name = "SECS", env = "G2PG_TIMEOUT", default_value_t = 60, value_parser = clap::value_parser!(u64).range(1..))]
    pub timeout: u64,

    /// Print per-mapping row counts and warnings to stderr.
    #[arg(long)]
    pub report: bool,

    /// More logging; repeat for debug output.
    #[arg(short, long, action = ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SourceArgs {
    /// Local RDF file: Turtle if it ends in .ttl, N-Triples otherwise.
    #[arg(long, value_name = "PATH")]
    pub input: Option<PathBuf>,

    /// SPARQL endpoint URL.
    #[arg(long, value_name = "URL")]
    pub endpoint: Option<String>,
}

#[derive(Debug)]
pub enum SourceConfig {
    LocalFile(PathBuf),
    Endpoint(EndpointConfig),
}

#[derive(Debug)]
pub struct RunConfig {
    pub mapping_path: PathBuf,
    pub source: SourceConfig,
    pub targets: Vec<EmissionTarget>,
    pub report: bool,
    pub verbosity: LevelFilter,
}

impl Cli {
    pub fn into_config(self) -> RunConfig {
        let source = match (self.source.input, self.source.endpoint) {
            (Some(path), _) => SourceConfig::LocalFile(path),
            (None, Some(url)) => SourceConfig::Endpoint(EndpointConfig {
                page_size: self.page_size as usize,
                timeout: Duration::from_secs(self.timeout),
                ..EndpointConfig::new(url)
            }),
            (None, None) => unreachable!("clap requires one source"),
        };
        let stem = self
            .mapping
            .file_stem()
            .map_or_else(|| "graph".to_owned(), |s| s.to_string_lossy().into_owned());
        let mut seen = HashSet::new();
        let mut formats = self.formats;
        formats.retain(|f| seen.insert(*f));
        let targets = formats
            .into_iter()
            .map(|f| EmissionTarget::in_dir(f, &self.out, &stem))
            .collect();
        let verbosity = match self.verbose {
            0 => LevelFilter::Warn,
            1 => LevelFilter::Info,
            _ => LevelFilter::Debug,
        };
        RunConfig {
            mapping_path: self.mapping,
            source,
            targets,
            report: self.report,
            verbosity,
        }
    }
}
