//! Plain-text edge lists for multigraphs.
//!
//! ```text
//! n 2
//! 0 1
//! 0 1
//! ```
//!
//! The first line gives the vertex count, every further line one edge;
//! repeated lines are parallel edges. Blank lines are ignored.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_index(tok: &str, line: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("line {line}: `{tok}` is not a vertex index")))
}

pub fn parse(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (first, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `n <count>` header"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => parse_index(count, first)?,
        _ => {
            return Err(Error::parse(
                first,
                format!("line {first}: expected `n <count>`"),
            ))
        }
    };

    let mut g = Graph::empty(n);
    for (line, l) in lines {
        let (u, w) = match l.split_whitespace().collect::<Vec<_>>()[..] {
            [u, w] => (parse_index(u, line)?, parse_index(w, line)?),
            _ => {
                return Err(Error::parse(
                    line,
                    format!("line {line}: expected two vertex indices"),
                ))
            }
        };
        g.add_edge(u, w)
            .map_err(|e| Error::parse(line, format!("line {line}: {e}")))?;
    }
    Ok(g)
}

pub fn format(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for e in g.edge_list() {
        let _ = writeln!(out, "{} {}", e.lo(), e.hi());
    }
    out
}
