//! Plain-text edge-list format: a header line `n m`, then `m` lines `u v`
//! with 0-based endpoints. Blank lines and `#` comments are ignored.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("missing `n m` header line")]
    MissingHeader,
    #[error("line {line}: expected `{expected}`, got `{got}`")]
    Malformed {
        line: usize,
        expected: &'static str,
        got: String,
    },
    #[error("declared {declared} edges but found {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_pair(
    line: usize,
    text: &str,
    expected: &'static str,
) -> Result<(usize, usize), EdgeListError> {
    let malformed = || EdgeListError::Malformed {
        line,
        expected,
        got: text.to_owned(),
    };
    let mut parts = text.split_whitespace();
    let a = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(malformed)?;
    let b = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(malformed)?;
    if parts.next().is_some() {
        return Err(malformed());
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let (n, m) = parse_pair(line_no, header, "n m")?;
    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        edges.push(parse_pair(line_no, line, "u v")?);
    }
    if edges.len() != m {
        return Err(EdgeListError::EdgeCountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edge_list(n, edges)?)
}

/// Emits the header plus one `u v` line per edge, `u < v`, ascending.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
