//! Edge-list text format: a header line `n m`, then `m` lines `u v` with
//! `u < v`, LF terminated.

use super::Graph;
use crate::error::{Error, Result};

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedInput(msg.into())
}

fn parse_pair(line: &str, what: &str) -> Result<(usize, usize)> {
    let mut it = line.split(' ');
    let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
        return Err(malformed(format!("{what}: expected two integers, got {line:?}")));
    };
    let parse = |s: &str| {
        if s.is_empty() || !s.bytes().all(|c| c.is_ascii_digit()) {
            return Err(malformed(format!("{what}: {s:?} is not a decimal integer")));
        }
        s.parse::<usize>()
            .map_err(|_| malformed(format!("{what}: {s:?} out of range")))
    };
    Ok((parse(a)?, parse(b)?))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    let mut lines = body.split('\n');
    let header = lines.next().ok_or_else(|| malformed("missing header"))?;
    let (n, m) = parse_pair(header, "header")?;
    let mut g = Graph::empty(n)?;
    let mut count = 0;
    for (i, line) in lines.enumerate() {
        let (u, v) = parse_pair(line, &format!("edge line {}", i + 1))?;
        if u >= n || v >= n {
            return Err(malformed(format!("vertex index out of range in {line:?} (n = {n})")));
        }
        if u == v {
            return Err(malformed(format!("self-loop at vertex {u}")));
        }
        if g.has_edge(u, v) {
            return Err(malformed(format!("duplicate edge {{{u},{v}}}")));
        }
        g.adj[u] |= 1 << v;
        g.adj[v] |= 1 << u;
        count += 1;
    }
    if count != m {
        return Err(malformed(format!("header declares {m} edges, found {count}")));
    }
    Ok(g)
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
