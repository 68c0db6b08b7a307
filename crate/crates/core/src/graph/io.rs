//! Plain edge-list and DIMACS `.col` readers and writers.

use super::{Graph, GraphError};

fn parse_error(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_index(token: Option<&str>, line: usize, what: &str) -> Result<usize, GraphError> {
    let token = token.ok_or_else(|| parse_error(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| parse_error(line, format!("invalid {what} `{token}`")))
}

/// Reads the edge-list format: a header line `n m`, then `m` lines `u v`
/// with 0-based endpoints. Blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, "missing `n m` header"))?;
    let mut fields = header.split_whitespace();
    let n = parse_index(fields.next(), header_line, "vertex count")?;
    let m = parse_index(fields.next(), header_line, "edge count")?;
    if fields.next().is_some() {
        return Err(parse_error(header_line, "trailing tokens in header"));
    }

    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        if edges.len() == m {
            return Err(parse_error(line_no, format!("more than {m} edge lines")));
        }
        let mut fields = line.split_whitespace();
        let u = parse_index(fields.next(), line_no, "endpoint")?;
        let v = parse_index(fields.next(), line_no, "endpoint")?;
        if fields.next().is_some() {
            return Err(parse_error(line_no, "trailing tokens in edge line"));
        }
        if u >= n || v >= n {
            return Err(parse_error(
                line_no,
                format!("vertex index out of range (n = {n})"),
            ));
        }
        if u == v {
            return Err(parse_error(line_no, format!("self-loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    if edges.len() < m {
        return Err(parse_error(
            text.lines().count().max(1),
            format!("expected {m} edge lines, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

/// Writes the edge-list format read by [`parse_edge_list`].
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Reads DIMACS `.col` text (`c` comments, one `p edge n m` line, `e u v`
/// lines with 1-based endpoints).
pub fn parse_dimacs(text: &str) -> Result<Graph, GraphError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        let mut fields = line.split_whitespace();
        match fields.next() {
            None | Some("c") => {}
            Some("p") => {
                if n.is_some() {
                    return Err(parse_error(line_no, "duplicate `p` line"));
                }
                match fields.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(parse_error(
                            line_no,
                            format!("unsupported problem type `{}`", other.unwrap_or("")),
                        ))
                    }
                }
                n = Some(parse_index(fields.next(), line_no, "vertex count")?);
                // The declared edge count is not enforced: real files often miscount.
                parse_index(fields.next(), line_no, "edge count")?;
            }
            Some("e") => {
                let n = n.ok_or_else(|| parse_error(line_no, "`e` line before `p` line"))?;
                let u = parse_index(fields.next(), line_no, "endpoint")?;
                let v = parse_index(fields.next(), line_no, "endpoint")?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(parse_error(
                        line_no,
                        format!("vertex index out of range 1..={n}"),
                    ));
                }
                if u == v {
                    return Err(parse_error(line_no, format!("self-loop at vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => {
                return Err(parse_error(line_no, format!("unknown line type `{other}`")));
            }
        }
    }
    let n = n.ok_or_else(|| parse_error(text.lines().count().max(1), "missing `p` line"))?;
    Graph::from_edges(n, edges)
}

pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}
