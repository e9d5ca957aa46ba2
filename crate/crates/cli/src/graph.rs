//! Weighted directed graphs and bounded-hop shortest paths over min-plus matrices.

use lawvere::{Error, Matrix, Result, Tropical};

/// A graph on nodes `0..nodes` with tropical edge weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSpec {
    pub nodes: usize,
    pub edges: Vec<(usize, usize, Tropical)>,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

/// Parses `n` followed by `src dst weight` lines. Blank lines and `#` comments are skipped.
pub fn parse_graph(text: &str) -> Result<GraphSpec> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
        .filter(|(_, l)| !l.trim().is_empty());
    let (first, header) = lines.next().ok_or_else(|| parse_error(1, 1, "missing node count"))?;
    let nodes: usize = header
        .trim()
        .parse()
        .map_err(|_| parse_error(first, 1, format!("expected a node count, found {:?}", header.trim())))?;
    let mut edges = Vec::new();
    for (line, body) in lines {
        let fields = fields_with_columns(body);
        if fields.len() != 3 {
            return Err(parse_error(line, 1, format!("expected `src dst weight`, found {} fields", fields.len())));
        }
        let node = |(column, text): (usize, &str)| -> Result<usize> {
            let i: usize = text.parse().map_err(|_| parse_error(line, column, format!("expected a node index, found {text:?}")))?;
            if i >= nodes {
                return Err(parse_error(line, column, format!("node {i} out of range for {nodes} nodes")));
            }
            Ok(i)
        };
        let (src, dst) = (node(fields[0])?, node(fields[1])?);
        let (column, text) = fields[2];
        let weight: Tropical = text.parse().map_err(|e: Error| parse_error(line, column, e.to_string()))?;
        edges.push((src, dst, weight));
    }
    Ok(GraphSpec { nodes, edges })
}

fn fields_with_columns(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((line[..s].chars().count() + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((line[..s].chars().count() + 1, &line[s..]));
    }
    out
}

/// The adjacency matrix; parallel edges combine by tropical sum (minimum).
pub fn adjacency(graph: &GraphSpec) -> Matrix<Tropical> {
    let n = graph.nodes;
    let mut entries = vec![Tropical::Inf; n * n];
    for (src, dst, w) in &graph.edges {
        let e = &mut entries[src * n + dst];
        *e = e.clone() + w.clone();
    }
    Matrix::new(n, n, entries).expect("n x n entries")
}

/// `A⁰ + A¹ + … + Aᵏ`: minimum weight over paths of at most `k` edges.
pub fn shortest_paths(adjacency: &Matrix<Tropical>, max_hops: usize) -> Result<Matrix<Tropical>> {
    let n = adjacency.rows();
    let mut power = Matrix::identity(n);
    let mut total = power.clone();
    for _ in 0..max_hops {
        power = power.compose(adjacency)?;
        total = Matrix::homset_add(&total, &power)?;
    }
    Ok(total)
}
