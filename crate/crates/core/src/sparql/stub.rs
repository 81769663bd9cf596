//! A minimal local SPARQL endpoint for tests. It answers `SELECT`
//! queries over an in-memory graph with the local pattern engine.

use std::io;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;
use std::thread::{self, JoinHandle};

use tiny_http::{Header, Method, Request, Response, Server};

use super::results::write_results_json;
use crate::pattern::parse_select_query;
use crate::rdf::RdfGraph;

enum Mode {
    Serve(Box<RdfGraph>),
    Fail(u16),
}

pub struct StubEndpoint {
    url: String,
    server: Arc<Server>,
    requests: Arc<AtomicUsize>,
    handle: Option<JoinHandle<()>>,
}

impl StubEndpoint {
    /// Serves `graph` on an ephemeral localhost port.
    pub fn serve(graph: RdfGraph) -> io::Result<Self> {
        Self::start(Mode::Serve(Box::new(graph)))
    }

    /// Answers every request with `status`.
    pub fn failing(status: u16) -> io::Result<Self> {
        Self::start(Mode::Fail(status))
    }

    fn start(mode: Mode) -> io::Result<Self> {
        let server = Arc::new(Server::http("127.0.0.1:0").map_err(io::Error::other)?);
        let port = server
            .server_addr()
            .to_ip()
            .map(|a| a.port())
            .ok_or_else(|| io::Error::other("not an IP listener"))?;
        let requests = Arc::new(AtomicUsize::new(0));
        let handle = {
            let server = Arc::clone(&server);
            let requests = Arc::clone(&requests);
            thread::spawn(move || {
                for req in server.incoming_requests() {
                    requests.fetch_add(1, Ordering::SeqCst);
                    handle(req, &mode);
                }
            })
        };
        Ok(StubEndpoint {
            url: format!("http://127.0.0.1:{port}/sparql"),
            server,
            requests,
            handle: Some(handle),
        })
    }

    pub fn url(&self) -> &str {
        &self.url
    }

    pub fn request_count(&self) -> usize {
        self.requests.load(Ordering::SeqCst)
    }
}

impl Drop for StubEndpoint {
    fn drop(&mut self) {
        self.server.unblock();
        if let Some(h) = self.handle.take() {
            let _ = h.join();
        }
    }
}

fn handle(mut req: Request, mode: &Mode) {
    let (status, body) = match mode {
        Mode::Fail(status) => (*status, "stub failure".to_owned()),
        Mode::Serve(graph) => match query_text(&mut req) {
            None => (400, "missing query parameter".to_owned()),
            Some(text) => match parse_select_query(&text) {
                Ok(q) => (200, write_results_json(&q.evaluate(graph))),
                Err(e) => (400, e.to_string()),
            },
        },
    };
    let content_type = if status == 200 {
        "application/sparql-results+json"
    } else {
        "text/plain"
    };
    let header = Header::from_bytes("Content-Type", content_type).expect("static header");
    let _ = req.respond(
        Response::from_string(body)
            .with_status_code(status)
            .with_header(header),
    );
}

fn query_text(req: &mut Request) -> Option<String> {
    let form = if *req.method() == Method::Post {
        let mut body = String::new();
        req.as_reader().read_to_string(&mut body).ok()?;
        body
    } else {
        req.url().split_once('?').map(|(_, q)| q.to_owned())?
    };
    url::form_urlencoded::parse(form.as_bytes())
        .find(|(k, _)| k == "query")
        .map(|(_, v)| v.into_owned())
}
