mod args;
mod output;

use std::fs;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{Context, Error};
use clap::Parser;
use g2pg_core::g2gml::parse_document;
use g2pg_core::mapping::{run_mapping, Source};
use g2pg_core::rdf::{load_ntriples, load_turtle_subset, RdfGraph};

use args::{Cli, RunConfig, SourceConfig};

const EXIT_SYNTAX: u8 = 1;
const EXIT_SOURCE: u8 = 2;
const EXIT_IO: u8 = 3;
const EXIT_USAGE: u8 = 64;

/// An error and the exit code it maps to.
struct Failure(u8, Error);

trait ExitWith<T> {
    fn exit_with(self, code: u8) -> Result<T, Failure>;
}

impl<T, E: Into<Error>> ExitWith<T> for Result<T, E> {
    fn exit_with(self, code: u8) -> Result<T, Failure> {
        self.map_err(|e| Failure(code, e.into()))
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .exit_with(EXIT_IO)
}

fn load_graph(path: &Path) -> Result<RdfGraph, Failure> {
    let text = read(path)?;
    let turtle = path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("ttl"));
    let graph = if turtle {
        load_turtle_subset(&text)
    } else {
        load_ntriples(&text)
    };
    graph
        .with_context(|| format!("{}", path.display()))
        .exit_with(EXIT_SOURCE)
}

fn run(config: RunConfig) -> Result<(), Failure> {
    let text = read(&config.mapping_path)?;
    let doc = parse_document(&text)
        .with_context(|| format!("{}", config.mapping_path.display()))
        .exit_with(EXIT_SYNTAX)?;

    let (graph, report) = match &config.source {
        SourceConfig::LocalFile(path) => {
            let rdf = load_graph(path)?;
            run_mapping(&doc, Source::Local(&rdf))
        }
        SourceConfig::Endpoint(endpoint) => run_mapping(&doc, Source::Endpoint(endpoint)),
    }
    .exit_with(EXIT_SOURCE)?;

    if config.report {
        eprint!("{report}");
    }
    let files: Vec<_> = config
        .targets
        .iter()
        .flat_map(|t| t.render(&graph))
        .collect();
    output::write_atomically(&files).exit_with(EXIT_IO)?;
    for (path, _) in &files {
        log::info!("wrote {}", path.display());
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let config = cli.into_config();
    env_logger::Builder::new()
        .filter_level(config.verbosity)
        .format_timestamp(None)
        .init();
    match run(config) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(code)
        }
    }
}
