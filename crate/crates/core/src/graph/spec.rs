//! Graph-spec mini-language used on the command line.
//!
//! ```text
//! spec  := atom | "union:" term ("+" term)*
//! term  := [count "*"] atom
//! atom  := "path:" k | "cycle:" k | "complete:" k | "star:" k | "empty:" k
//! ```

use super::Graph;
use crate::error::{Error, Result};

fn bad(spec: &str, why: &str) -> Error {
    Error::MalformedInput(format!("graph spec {spec:?}: {why}"))
}

fn parse_atom(atom: &str) -> Result<Graph> {
    let (kind, arg) = atom.split_once(':').ok_or_else(|| bad(atom, "expected kind:size"))?;
    let k: usize = arg.parse().map_err(|_| bad(atom, "size is not an integer"))?;
    match kind {
        "path" => {
            if k >= super::MAX_VERTICES {
                return Err(Error::GraphTooLarge(k + 1));
            }
            Ok(Graph::path(k))
        }
        "cycle" => Graph::cycle(k),
        "complete" => Graph::complete(k),
        "star" => Graph::star(k),
        "empty" => Graph::empty(k),
        _ => Err(bad(atom, "unknown graph kind")),
    }
}

/// Parses a graph spec such as `union:2*path:0+3*path:5`.
pub fn parse_spec(spec: &str) -> Result<Graph> {
    let spec = spec.trim();
    let Some(body) = spec.strip_prefix("union:") else {
        return parse_atom(spec);
    };
    let mut parts = Vec::new();
    for term in body.split('+') {
        let (count, atom) = match term.split_once('*') {
            Some((c, a)) => (c.parse::<usize>().map_err(|_| bad(term, "bad multiplicity"))?, a),
            None => (1, term),
        };
        parts.push((parse_atom(atom)?, count));
    }
    Graph::disjoint_union(&parts)
}
