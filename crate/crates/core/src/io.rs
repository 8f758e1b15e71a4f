//! Text formats: edge lists and orderings.
//!
//! An edge list starts with a header line `n m`, optionally followed by the
//! token `directed`, and then `m` lines `u v`. Blank lines and lines starting
//! with `#` are ignored. An ordering is `n` whitespace-separated vertices.

use thiserror::Error;

use crate::graph::{Graph, GraphError, OrderingError, Vertex, VertexOrdering};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input: expected a header line `n m`")]
    Empty,
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: {source}")]
    Edge {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("header announces {expected} edges but {found} edge lines follow")]
    EdgeCount { expected: usize, found: usize },
    #[error(transparent)]
    Ordering(#[from] OrderingError),
}

impl ParseError {
    /// Line number the error refers to, when it refers to one.
    pub fn line(&self) -> Option<usize> {
        match self {
            ParseError::Malformed { line, .. } | ParseError::Edge { line, .. } => Some(*line),
            _ => None,
        }
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn number(token: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    token.parse().map_err(|_| ParseError::Malformed {
        line,
        message: format!("expected {what}, found `{token}`"),
    })
}

/// Parses the edge-list format. Duplicate edges are collapsed; self-loops and
/// out-of-range vertices are reported with their line number.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (graph, m) = parse_block(&mut lines)?.ok_or(ParseError::Empty)?;
    let extra = lines.count();
    if extra > 0 {
        return Err(ParseError::EdgeCount {
            expected: m,
            found: m + extra,
        });
    }
    Ok(graph)
}

/// Parses a corpus: edge-list graphs written back to back, each header
/// followed by exactly its `m` edge lines.
pub fn parse_graphs(text: &str) -> Result<Vec<Graph>, ParseError> {
    let mut lines = content_lines(text);
    let mut graphs = Vec::new();
    while let Some((graph, _)) = parse_block(&mut lines)? {
        graphs.push(graph);
    }
    Ok(graphs)
}

/// Reads one header and its edge lines. `None` when no lines are left.
fn parse_block<'a, I>(lines: &mut I) -> Result<Option<(Graph, usize)>, ParseError>
where
    I: Iterator<Item = (usize, &'a str)>,
{
    let Some((hline, header)) = lines.next() else {
        return Ok(None);
    };
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let directed = tokens.contains(&"directed");
    let nums: Vec<&str> = tokens
        .iter()
        .copied()
        .filter(|t| *t != "directed")
        .collect();
    if nums.len() != 2 {
        return Err(ParseError::Malformed {
            line: hline,
            message: format!("header must be `n m [directed]`, found `{header}`"),
        });
    }
    let n = number(nums[0], hline, "vertex count")?;
    let m = number(nums[1], hline, "edge count")?;

    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines.by_ref().take(m) {
        let mut it = l.split_whitespace();
        let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
            return Err(ParseError::Malformed {
                line,
                message: format!("edge line must be `u v`, found `{l}`"),
            });
        };
        let u = number(a, line, "vertex")?;
        let v = number(b, line, "vertex")?;
        for w in [u, v] {
            if w == 0 || w > n {
                return Err(ParseError::Edge {
                    line,
                    source: GraphError::VertexOutOfRange { vertex: w, n },
                });
            }
        }
        if u == v {
            return Err(ParseError::Edge {
                line,
                source: GraphError::SelfLoop(u),
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    let graph = if directed {
        Graph::directed(n, edges)
    } else {
        Graph::undirected(n, edges)
    };
    // every edge was validated above
    Ok(Some((graph.expect("validated edges"), m)))
}

/// Parses a whitespace-separated permutation of `1..=n`.
pub fn parse_ordering(text: &str, n: usize) -> Result<VertexOrdering, ParseError> {
    let mut order: Vec<Vertex> = Vec::with_capacity(n);
    for (line, l) in content_lines(text) {
        for tok in l.split_whitespace() {
            order.push(number(tok, line, "vertex")?);
        }
    }
    if order.len() != n {
        // report against the expected universe, not the token count
        let mut seen = vec![false; n + 1];
        let mut duplicate = Vec::new();
        let mut out_of_range = Vec::new();
        for &v in &order {
            if v == 0 || v > n {
                out_of_range.push(v);
            } else if seen[v] {
                duplicate.push(v);
            } else {
                seen[v] = true;
            }
        }
        duplicate.sort_unstable();
        duplicate.dedup();
        return Err(ParseError::Ordering(OrderingError {
            n,
            missing: (1..=n).filter(|&v| !seen[v]).collect(),
            duplicate,
            out_of_range,
        }));
    }
    Ok(VertexOrdering::new(order)?)
}
