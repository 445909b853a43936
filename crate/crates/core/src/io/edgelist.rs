//! Edge-list interchange format.
//!
//! ```text
//! # extremal-sf edge list
//! # n=15
//! # model=extremal t=2
//! 0 1
//! 0 2
//! ```
//!
//! Header lines start with `#`; the token `n=<order>` fixes the vertex
//! count (otherwise it is one more than the largest id seen). Each other
//! non-blank line holds one edge as two decimal ids. Export writes `u < v`
//! in lexicographic order, so equal graphs give byte-equal files.

use std::io::{self, BufRead, Write};

use thiserror::Error;

use crate::graph::{Graph, GraphBuilder, GraphError};

#[derive(Debug, Error)]
pub enum EdgeListError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Writes `g` with the given `key=value` metadata lines after the `n=` line.
pub fn write_edge_list<W: Write>(
    mut w: W,
    g: &Graph,
    metadata: &[String],
) -> io::Result<()> {
    writeln!(w, "# extremal-sf edge list")?;
    writeln!(w, "# n={}", g.order())?;
    for m in metadata {
        writeln!(w, "# {m}")?;
    }
    let mut line = String::with_capacity(24);
    for (u, v) in g.edges() {
        use std::fmt::Write as _;
        line.clear();
        let _ = writeln!(line, "{u} {v}");
        w.write_all(line.as_bytes())?;
    }
    w.flush()
}

pub fn read_edge_list<R: BufRead>(r: R) -> Result<Graph, EdgeListError> {
    let mut order: Option<usize> = None;
    let mut edges = Vec::new();
    let mut max_id: Option<usize> = None;

    for (idx, line) in r.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        if let Some(header) = text.strip_prefix('#') {
            for tok in header.split_whitespace() {
                if let Some(n) = tok.strip_prefix("n=") {
                    order = Some(n.parse().map_err(|_| EdgeListError::Parse {
                        line: lineno,
                        message: format!("bad vertex count {n:?}"),
                    })?);
                }
            }
            continue;
        }
        let mut fields = text.split_whitespace();
        let mut id = || -> Result<usize, EdgeListError> {
            let f = fields.next().ok_or_else(|| EdgeListError::Parse {
                line: lineno,
                message: format!("expected two vertex ids, got {text:?}"),
            })?;
            f.parse().map_err(|_| EdgeListError::Parse {
                line: lineno,
                message: format!("invalid vertex id {f:?}"),
            })
        };
        let (u, v) = (id()?, id()?);
        if fields.next().is_some() {
            return Err(EdgeListError::Parse {
                line: lineno,
                message: format!("trailing fields in {text:?}"),
            });
        }
        max_id = max_id.max(Some(u.max(v)));
        edges.push((lineno, u, v));
    }

    let order = order.unwrap_or(max_id.map_or(0, |m| m + 1));
    let mut b = GraphBuilder::with_capacity(order, edges.len());
    for (line, u, v) in edges {
        b.add_edge(u, v)
            .map_err(|source| EdgeListError::Invalid { line, source })?;
    }
    Ok(b.finalize())
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    read_edge_list(text.as_bytes())
}
