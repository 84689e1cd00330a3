//! Edge-list and graph6 text formats.

use super::Graph;
use crate::error::{Error, Result};

fn parse_err(line: usize, byte: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        byte,
        message: message.into(),
    }
}

/// Parse the edge-list format: a vertex count on the first line, then one `i j` pair per
/// non-empty line. Positions in errors are 1-based lines and 0-based byte offsets into the text.
pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let mut offset = 0usize;
    let mut line_start = Vec::new();
    for l in text.split_inclusive('\n') {
        line_start.push(offset);
        offset += l.len();
    }
    let start_of = |line: usize| line_start.get(line - 1).copied().unwrap_or(text.len());

    let (header_line, header) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| parse_err(1, 0, "missing vertex count"))?;
    let n: usize = header.trim().parse().map_err(|_| {
        parse_err(
            header_line,
            start_of(header_line),
            format!("expected a vertex count, found {:?}", header.trim()),
        )
    })?;

    let mut adj = vec![Vec::new(); n];
    for (line_no, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let base = start_of(line_no);
        let mut fields = Vec::new();
        let mut rest = line;
        let mut consumed = 0;
        while let Some(pos) = rest.find(|c: char| !c.is_whitespace()) {
            let tail = &rest[pos..];
            let end = tail.find(char::is_whitespace).unwrap_or(tail.len());
            fields.push((consumed + pos, &tail[..end]));
            consumed += pos + end;
            rest = &tail[end..];
        }
        if fields.len() != 2 {
            return Err(parse_err(
                line_no,
                base,
                format!("expected two vertex indices, found {}", fields.len()),
            ));
        }
        let mut ends = [0usize; 2];
        for (slot, (col, field)) in ends.iter_mut().zip(&fields) {
            let v: usize = field.parse().map_err(|_| {
                parse_err(
                    line_no,
                    base + col,
                    format!("invalid vertex index {field:?}"),
                )
            })?;
            if v >= n {
                return Err(parse_err(
                    line_no,
                    base + col,
                    format!("vertex {v} out of range 0..{n}"),
                ));
            }
            *slot = v;
        }
        let [i, j] = ends;
        if i == j {
            return Err(parse_err(line_no, base, format!("self-loop at vertex {i}")));
        }
        if adj[i].contains(&j) {
            return Err(parse_err(
                line_no,
                base,
                format!("duplicate edge {{{i},{j}}}"),
            ));
        }
        adj[i].push(j);
        adj[j].push(i);
    }
    Ok(Graph::from_adjacency(adj))
}

/// Inverse of [`from_edge_list`].
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (i, j) in g.edges() {
        out.push_str(&format!("{i} {j}\n"));
    }
    out
}

const GRAPH6_MAX_ORDER: usize = 62;

/// Bits of the upper triangle in graph6 order: column-major over `(i, j)`, `i < j`.
pub(crate) fn upper_triangle_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::InstanceTooLarge {
            n,
            max: GRAPH6_MAX_ORDER,
        });
    }
    let mut out = String::new();
    out.push((63 + n as u8) as char);
    let bits: Vec<bool> = upper_triangle_pairs(n)
        .map(|(i, j)| g.has_edge(i, j))
        .collect();
    for chunk in bits.chunks(6) {
        let mut value = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                value |= 1 << (5 - k);
            }
        }
        out.push((63 + value) as char);
    }
    Ok(out)
}

/// Decode one graph6 string (surrounding whitespace ignored, no `>>graph6<<` header).
pub fn from_graph6(text: &str) -> Result<Graph> {
    let lead = text.len() - text.trim_start().len();
    let body = text.trim().as_bytes();
    let first = *body
        .first()
        .ok_or_else(|| parse_err(1, lead, "empty graph6 string"))?;
    if !(63..=126).contains(&first) {
        return Err(parse_err(
            1,
            lead,
            format!("byte {first:#04x} is outside the graph6 range"),
        ));
    }
    let n = (first - 63) as usize;
    if n > GRAPH6_MAX_ORDER {
        return Err(parse_err(1, lead, "orders above 62 are not supported"));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = 1 + nbits.div_ceil(6);
    if body.len() != expected {
        return Err(parse_err(
            1,
            lead + body.len().min(expected),
            format!(
                "expected {expected} bytes for {n} vertices, found {}",
                body.len()
            ),
        ));
    }
    let mut bits = Vec::with_capacity(nbits);
    for (k, &b) in body[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(
                1,
                lead + 1 + k,
                format!("byte {b:#04x} is outside the graph6 range"),
            ));
        }
        let value = b - 63;
        for shift in (0..6).rev() {
            bits.push(value >> shift & 1 == 1);
        }
    }
    if bits[nbits..].iter().any(|&b| b) {
        return Err(parse_err(1, lead + body.len() - 1, "non-zero padding bits"));
    }
    let mut adj = vec![Vec::new(); n];
    for ((i, j), present) in upper_triangle_pairs(n).zip(bits) {
        if present {
            adj[i].push(j);
            adj[j].push(i);
        }
    }
    Ok(Graph::from_adjacency(adj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};

    #[test]
    fn edge_list_path() {
        assert_eq!(from_edge_list("3\n0 1\n1 2").unwrap(), path(3).unwrap());
        assert_eq!(
            from_edge_list("3\n\n0 1\n\n1 2\n").unwrap(),
            path(3).unwrap()
        );
    }

    #[test]
    fn edge_list_errors_carry_positions() {
        match from_edge_list("3\n0 1\n1 0\n") {
            Err(Error::Parse {
                line: 3, byte: 6, ..
            }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match from_edge_list("3\n0 7\n") {
            Err(Error::Parse {
                line: 2, byte: 4, ..
            }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            from_edge_list("x\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            from_edge_list("3\n1 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            from_edge_list("3\n0 1 2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(from_edge_list(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = cycle(5).unwrap();
        assert_eq!(from_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn graph6_triangle() {
        // N(3) = 63+3 = 'B'; bits 111 padded to 111000 = 56, 56+63 = 'w'.
        assert_eq!(to_graph6(&complete(3).unwrap()).unwrap(), "Bw");
        assert_eq!(from_graph6("Bw\n").unwrap(), complete(3).unwrap());
    }

    #[test]
    fn graph6_known_string() {
        // 5 vertices, edges 0-2, 0-4, 1-3, 3-4.
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g).unwrap(), "DQc");
    }

    #[test]
    fn graph6_round_trip_cycle() {
        let c6 = cycle(6).unwrap();
        assert_eq!(from_graph6(&to_graph6(&c6).unwrap()).unwrap(), c6);
        assert_eq!(from_graph6("?").unwrap().order(), 0);
        assert_eq!(from_graph6("@").unwrap().order(), 1);
    }

    #[test]
    fn graph6_rejects_malformed() {
        assert!(matches!(from_graph6(""), Err(Error::Parse { .. })));
        assert!(matches!(from_graph6("B"), Err(Error::Parse { .. })));
        assert!(matches!(from_graph6("Bww"), Err(Error::Parse { .. })));
        assert!(matches!(from_graph6("B "), Err(Error::Parse { .. })));
        // 'x' = 57 -> 111001, last padding bit set
        assert!(matches!(
            from_graph6("Bx"),
            Err(Error::Parse { byte: 1, .. })
        ));
    }
}
