//! graph6 and edge-list text codecs.
//!
//! graph6 layout: an order prefix (one byte `n + 63` for `n < 63`, or
//! `'~'` followed by three 6-bit bytes for `63 <= n < 258048`), then the
//! upper-triangle adjacency cells in column order (0,1), (0,2), (1,2),
//! (0,3), ... packed 6 bits per byte, most significant bit first, each
//! byte offset by 63, with zero padding in the final byte.
//!
//! Edge-list layout: a header line `n m`, then `m` lines `u v` with
//! 0-based decimal ids. Blank lines and lines starting with `#` are
//! ignored.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Orders at or above this bound would need the 8-byte graph6 prefix,
/// which this crate does not support.
pub const MAX_GRAPH6_ORDER: usize = 258_048;

/// Encodes a graph as a graph6 line (no trailing newline).
///
/// Panics if the order is `>= 258048`; that range is out of scope.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n < MAX_GRAPH6_ORDER, "graph6 order limit exceeded");
    let mut out: Vec<u8> = Vec::with_capacity(4 + n * n / 12);
    if n < 63 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for col in 1..n {
        for row in 0..col {
            acc = (acc << 1) | u8::from(g.has_edge(row, col));
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("all bytes are printable ASCII")
}

/// Decodes a graph6 line. The input must be exactly one encoded graph:
/// stray bytes, bytes outside `[63, 126]`, nonzero padding bits and
/// truncation are all format errors.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Format("empty graph6 input".into()));
    }
    if let Some(&bad) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Format(format!(
            "byte 0x{bad:02x} outside the graph6 range [63, 126]"
        )));
    }
    let (n, header_len) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(Error::Format("truncated graph6 order prefix".into()));
        }
        if bytes[1] == 126 {
            return Err(Error::Format(format!(
                "graph6 orders >= {MAX_GRAPH6_ORDER} are not supported"
            )));
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        if n < 63 {
            return Err(Error::Format(format!(
                "non-canonical graph6 prefix: order {n} must use the short form"
            )));
        }
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };

    let cells = n * n.saturating_sub(1) / 2;
    let body = &bytes[header_len..];
    let need = cells.div_ceil(6);
    if body.len() < need {
        return Err(Error::Format(format!(
            "truncated graph6 body: need {need} bytes for order {n}, got {}",
            body.len()
        )));
    }
    if body.len() > need {
        return Err(Error::Format(format!(
            "trailing bytes after graph6 body: expected {need}, got {}",
            body.len()
        )));
    }

    let mut g = Graph::new(n);
    let mut cell = 0usize;
    'outer: for col in 1..n {
        for row in 0..col {
            let byte = body[cell / 6] - 63;
            let bit = (byte >> (5 - cell % 6)) & 1;
            if bit == 1 {
                g.add_edge(row, col).expect("distinct in-range cells");
            }
            cell += 1;
            if cell == cells {
                break 'outer;
            }
        }
    }
    if cells > 0 {
        let padding = need * 6 - cells;
        let last = body[need - 1] - 63;
        if last & ((1 << padding) - 1) != 0 {
            return Err(Error::Format("nonzero padding bits in graph6 body".into()));
        }
    }
    Ok(g)
}

/// Encodes a graph in the edge-list text format.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Decodes the edge-list text format. Returns the graph and whether
/// duplicate edges were dropped.
pub fn parse_edge_list(text: &str) -> Result<(Graph, bool)> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));

    let header = lines
        .next()
        .ok_or_else(|| Error::Format("edge list is missing the 'n m' header".into()))?;
    let (n, m) = parse_pair(header)
        .ok_or_else(|| Error::Format(format!("bad edge-list header {header:?}")))?;

    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let line = lines
            .next()
            .ok_or_else(|| Error::Format(format!("expected {m} edge lines")))?;
        let pair =
            parse_pair(line).ok_or_else(|| Error::Format(format!("bad edge line {line:?}")))?;
        edges.push(pair);
    }
    if let Some(extra) = lines.next() {
        return Err(Error::Format(format!(
            "unexpected line {extra:?} after {m} edges"
        )));
    }
    // Structural problems in a file are reported as format errors.
    Graph::from_edges_reporting(n, &edges)
        .map_err(|e| Error::Format(format!("invalid edge list: {e}")))
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_ascii_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    // Hand-encoded per the bit layout: order byte 'B' = 63 + 3, one body
    // byte holding cells (0,1), (0,2), (1,2) in the top three bits.
    #[test]
    fn parse_known_three_vertex_codes() {
        // 111000 -> 63 + 56 = 'w': the triangle.
        let k3 = parse_graph6("Bw").unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert!((0..3).all(|v| k3.degree(v) == 2));

        // 101000 -> 63 + 40 = 'g': edges (0,1) and (1,2), path centered at 1.
        let p3 = parse_graph6("Bg").unwrap();
        assert_eq!(p3.degree_profile().degrees, vec![1, 2, 1]);
    }

    #[test]
    fn emit_single_vertex() {
        assert_eq!(emit_graph6(&Graph::new(1)), "@");
    }

    #[test]
    fn emit_matches_hand_encodings() {
        assert_eq!(emit_graph6(&Graph::complete(3).unwrap()), "Bw");
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(emit_graph6(&p3), "Bg");
    }

    #[test]
    fn round_trip_named_graphs() {
        for g in [
            Graph::new(0),
            Graph::new(5),
            Graph::path(7).unwrap(),
            Graph::star(9).unwrap(),
            Graph::prism(4).unwrap(),
            Graph::complete(7).unwrap(),
        ] {
            assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
        }
    }

    #[test]
    fn round_trip_extended_order() {
        let g = Graph::path(63).unwrap();
        let s = emit_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(parse_graph6(&s).unwrap(), g);

        let big = Graph::star(100).unwrap();
        assert_eq!(parse_graph6(&emit_graph6(&big)).unwrap(), big);
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert!(matches!(parse_graph6(""), Err(Error::Format(_))));
        // Byte below 63.
        assert!(matches!(parse_graph6("B:"), Err(Error::Format(_))));
        // Truncated body.
        assert!(matches!(parse_graph6("D"), Err(Error::Format(_))));
        // Trailing bytes.
        assert!(matches!(parse_graph6("Bww"), Err(Error::Format(_))));
        // Nonzero padding: order 3 uses 3 cells, low 3 bits must be 0.
        assert!(matches!(parse_graph6("Bx"), Err(Error::Format(_))));
        // 8-byte order prefix.
        assert!(matches!(parse_graph6("~~AAAAAA"), Err(Error::Format(_))));
        // Long-form prefix encoding an order that fits the short form.
        assert!(matches!(parse_graph6("~??Bw"), Err(Error::Format(_))));
    }

    #[test]
    fn edge_list_round_trip_and_comments() {
        let g = Graph::prism(3).unwrap();
        let text = emit_edge_list(&g);
        let (back, dup) = parse_edge_list(&text).unwrap();
        assert_eq!(back, g);
        assert!(!dup);

        let commented = "# a prism\n\n3 2\n0 1\n\n# middle\n1 2\n";
        let (p3, _) = parse_edge_list(commented).unwrap();
        assert_eq!(p3.degree_profile().degrees, vec![1, 2, 1]);
    }

    #[test]
    fn edge_list_reports_duplicates() {
        let (g, dup) = parse_edge_list("4 3\n0 1\n0 1\n2 3\n").unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(dup);
    }

    #[test]
    fn edge_list_rejects_malformed_input() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3\n").is_err());
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 1\n9 9\n").is_err());
        assert!(parse_edge_list("3 1\n0 9\n").is_err());
        assert!(parse_edge_list("3 1\n1 1\n").is_err());
    }
}
