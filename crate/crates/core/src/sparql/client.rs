use std::thread;
use std::time::Duration;

use log::{debug, warn};
use reqwest::blocking::Client;
use reqwest::header::ACCEPT;

use super::generate::GeneratedQuery;
use super::results::parse_results;
use super::SparqlError;
use crate::pattern::BindingTable;

const RESULTS_JSON: &str = "application/sparql-results+json";
/// Queries at least this long are sent as a POST form.
const GET_LIMIT: usize = 2000;
const EXCERPT_LEN: usize = 300;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndpointConfig {
    pub url: String,
    pub timeout: Duration,
    pub page_size: usize,
    pub max_retries: u32,
    /// Delay before the first retry; doubled for each further attempt.
    pub backoff: Duration,
}

impl EndpointConfig {
    pub fn new(url: impl Into<String>) -> Self {
        EndpointConfig {
            url: url.into(),
            timeout: Duration::from_secs(60),
            page_size: 1000,
            max_retries: 3,
            backoff: Duration::from_millis(500),
        }
    }

    pub fn validate(&self) -> Result<(), SparqlError> {
        if self.page_size == 0 {
            return Err(SparqlError::InvalidConfig(
                "page size must be at least 1".into(),
            ));
        }
        if self.timeout.is_zero() {
            return Err(SparqlError::InvalidConfig(
                "timeout must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Result of a paged execution.
#[derive(Debug, Clone)]
pub struct Fetched {
    pub table: BindingTable,
    pub pages: usize,
    pub warnings: Vec<String>,
}

pub fn execute(
    query: &GeneratedQuery,
    endpoint: &EndpointConfig,
) -> Result<BindingTable, SparqlError> {
    execute_paged(query, endpoint).map(|f| f.table)
}

/// Fetches all pages of `query`, stopping at the first page shorter than
/// the page size.
pub fn execute_paged(
    query: &GeneratedQuery,
    endpoint: &EndpointConfig,
) -> Result<Fetched, SparqlError> {
    endpoint.validate()?;
    let client = Client::builder()
        .timeout(endpoint.timeout)
        .build()
        .map_err(|e| SparqlError::InvalidConfig(e.to_string()))?;

    let mut table = BindingTable::new(query.projected_vars.clone());
    let mut warnings = Vec::new();
    let mut pages = 0;
    let mut previous_full = false;
    loop {
        let offset = pages * endpoint.page_size;
        let text = query.page(endpoint.page_size, offset);
        let page = parse_results(&request(&client, endpoint, &text)?)?;
        pages += 1;
        let n = page.len();
        debug!("{}: page {pages} returned {n} rows", query.origin);
        for row in page.project(&query.projected_vars).rows() {
            table.insert(row.to_vec());
        }
        if n < endpoint.page_size {
            if n == 0 && previous_full {
                let msg = format!(
                    "{}: {} rows is an exact multiple of the page size {}; the endpoint may have truncated the results",
                    query.origin,
                    offset,
                    endpoint.page_size
                );
                warn!("{msg}");
                warnings.push(msg);
            }
            break;
        }
        previous_full = true;
    }
    Ok(Fetched {
        table,
        pages,
        warnings,
    })
}

fn request(
    client: &Client,
    endpoint: &EndpointConfig,
    query: &str,
) -> Result<Vec<u8>, SparqlError> {
    let mut attempt = 0;
    loop {
        let builder = if query.len() < GET_LIMIT {
            client.get(&endpoint.url).query(&[("query", query)])
        } else {
            client.post(&endpoint.url).form(&[("query", query)])
        };
        let failure = match builder.header(ACCEPT, RESULTS_JSON).send() {
            Ok(resp) if resp.status().is_success() => {
                return resp
                    .bytes()
                    .map(|b| b.to_vec())
                    .map_err(|e| SparqlError::NetworkError {
                        url: endpoint.url.clone(),
                        attempts: attempt + 1,
                        message: e.without_url().to_string(),
                    });
            }
            Ok(resp) if resp.status().is_server_error() => format!("HTTP {}", resp.status()),
            Ok(resp) => {
                let status = resp.status().as_u16();
                let body = resp.text().unwrap_or_default();
                let excerpt: String = body.chars().take(EXCERPT_LEN).collect();
                return Err(SparqlError::EndpointError { status, excerpt });
            }
            Err(e) => error_chain(&e.without_url()),
        };
        attempt += 1;
        if attempt > endpoint.max_retries {
            return Err(SparqlError::NetworkError {
                url: endpoint.url.clone(),
                attempts: attempt,
                message: failure,
            });
        }
        let delay = endpoint.backoff.saturating_mul(1 << (attempt - 1).min(16));
        debug!("request failed ({failure}); retry {attempt} in {delay:?}");
        thread::sleep(delay);
    }
}

/// The error and its causes, since reqwest's own message is often generic.
fn error_chain(e: &dyn std::error::Error) -> String {
    let mut out = e.to_string();
    let mut cur = e.source();
    while let Some(c) = cur {
        out += &format!(": {c}");
        cur = c.source();
    }
    out
}
