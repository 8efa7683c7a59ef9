use super::{Graph, GraphJson};
use crate::error::{Error, Result};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses the text format: the vertex count on the first line, then one
/// whitespace-separated `u v` pair per line. Blank lines and lines starting
/// with `#` are ignored.
pub fn parse_text(input: &str) -> Result<Graph> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (first, header) = lines.next().ok_or_else(|| parse_err(1, "missing vertex count"))?;
    let n: usize = header
        .parse()
        .map_err(|_| parse_err(first, format!("expected vertex count, found {header:?}")))?;

    let mut g = Graph::empty(n);
    let mut edges = Vec::new();
    for (line, text) in lines {
        let fields: Vec<&str> = text.split_whitespace().collect();
        let [a, b] = fields[..] else {
            return Err(parse_err(line, format!("expected `u v`, found {text:?}")));
        };
        let u: usize = a
            .parse()
            .map_err(|_| parse_err(line, format!("bad vertex {a:?}")))?;
        let v: usize = b
            .parse()
            .map_err(|_| parse_err(line, format!("bad vertex {b:?}")))?;
        check_edge(&g, u, v).map_err(|m| parse_err(line, m))?;
        g.adj[u - 1].insert(v);
        g.adj[v - 1].insert(u);
        edges.push((u.min(v), u.max(v)));
    }
    edges.sort_unstable();
    g.edges = edges;
    Ok(g)
}

fn check_edge(g: &Graph, u: usize, v: usize) -> std::result::Result<(), String> {
    for x in [u, v] {
        if x == 0 || x > g.n {
            return Err(format!("vertex {x} is outside 1..={}", g.n));
        }
    }
    if u == v {
        return Err(format!("self-loop at vertex {u}"));
    }
    if g.has_edge(u, v) {
        return Err(format!("duplicate edge {{{u}, {v}}}"));
    }
    Ok(())
}

/// Parses `{"n": int, "edges": [[u, v], ...]}`. Structural errors report the
/// JSON line; invalid edges report the line on which that edge starts.
pub fn parse_json(input: &str) -> Result<Graph> {
    let doc: GraphJson = serde_json::from_str(input).map_err(|e| parse_err(e.line(), e.to_string()))?;
    let edge_lines = edge_start_lines(input);
    let mut g = Graph::empty(doc.n);
    let mut edges = Vec::new();
    for (k, [u, v]) in doc.edges.into_iter().enumerate() {
        check_edge(&g, u, v).map_err(|m| {
            let line = edge_lines.get(k).copied().unwrap_or(1);
            parse_err(line, format!("edge #{}: {m}", k + 1))
        })?;
        g.adj[u - 1].insert(v);
        g.adj[v - 1].insert(u);
        edges.push((u.min(v), u.max(v)));
    }
    edges.sort_unstable();
    g.edges = edges;
    Ok(g)
}

/// Line numbers of the inner `[` of each edge pair inside the `edges` array.
fn edge_start_lines(input: &str) -> Vec<usize> {
    let Some(start) = input.find("\"edges\"") else {
        return Vec::new();
    };
    let mut line = 1 + input[..start].matches('\n').count();
    let mut depth = 0usize;
    let mut out = Vec::new();
    for ch in input[start..].chars() {
        match ch {
            '\n' => line += 1,
            '[' => {
                depth += 1;
                if depth == 2 {
                    out.push(line);
                }
            }
            ']' => {
                if depth <= 1 {
                    break;
                }
                depth -= 1;
            }
            _ => {}
        }
    }
    out
}

/// Parses either format, choosing JSON when the first non-blank character is
/// `{`.
pub fn parse_graph(input: &str) -> Result<Graph> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}
