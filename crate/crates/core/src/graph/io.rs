//! graph6 and plain edge-list text formats.
//!
//! graph6 follows the nauty layout: a size header `N(n)` followed by the
//! upper triangle of the adjacency matrix, column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed six bits per byte with
//! an offset of 63.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

const MAX_GRAPH6_N: usize = 2000;
const HEADER: &str = ">>graph6<<";

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedGraph6(msg.into())
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(malformed("empty input"));
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(malformed(format!("byte {:?} at offset {pos} is outside 63..=126", bytes[pos] as char)));
    }

    let (n, body) = if bytes[0] != 126 {
        (usize::from(bytes[0] - 63), &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        return Err(malformed(format!("8-byte size header exceeds supported n <= {MAX_GRAPH6_N}")));
    } else {
        if bytes.len() < 4 {
            return Err(malformed("truncated size header"));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
        if n < 63 {
            return Err(malformed(format!("long size header used for n = {n}")));
        }
        (n, &bytes[4..])
    };
    if n > MAX_GRAPH6_N {
        return Err(malformed(format!("n = {n} exceeds supported n <= {MAX_GRAPH6_N}")));
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if body.len() < nbytes {
        return Err(malformed(format!("truncated edge field: {} of {nbytes} bytes", body.len())));
    }
    if body.len() > nbytes {
        return Err(malformed(format!("{} trailing byte(s)", body.len() - nbytes)));
    }

    let bit = |k: usize| -> bool {
        let byte = body[k / 6] - 63;
        (byte >> (5 - k % 6)) & 1 == 1
    };
    if (nbits..nbytes * 6).any(bit) {
        return Err(malformed("nonzero padding bits"));
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

/// One graph per non-empty line; errors carry the 1-based line number.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(idx, line)| {
            parse_graph6(line.trim()).map_err(|e| match e {
                Error::MalformedGraph6(msg) => malformed(format!("line {}: {msg}", idx + 1)),
                other => other,
            })
        })
        .collect()
}

/// Edge-list text: a `p q` header line followed by `q` lines `u v` (0-based).
/// Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let bad = |line: usize, reason: String| Error::MalformedEdgeList { line, reason };
    let pair = |line: usize, s: &str| -> Result<(usize, usize)> {
        let fields: Vec<&str> = s.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(bad(line, format!("expected two integers, got {s:?}")));
        }
        let parse = |f: &str| f.parse::<usize>().map_err(|_| bad(line, format!("not an integer: {f:?}")));
        Ok((parse(fields[0])?, parse(fields[1])?))
    };

    let (hline, header) = lines.next().ok_or_else(|| bad(0, "missing \"p q\" header".into()))?;
    let (p, q) = pair(hline, header)?;
    let mut edges = Vec::with_capacity(q);
    for (line, l) in lines {
        let (u, v) = pair(line, l)?;
        if u >= p || v >= p {
            return Err(bad(line, format!("vertex out of range 0..{p}")));
        }
        if u == v {
            return Err(bad(line, format!("self-loop at {u}")));
        }
        edges.push((u, v));
    }
    if edges.len() != q {
        return Err(bad(hline, format!("header declares {q} edges, found {}", edges.len())));
    }
    let g = Graph::from_edges(p, edges)?;
    if g.edge_count() != q {
        return Err(bad(hline, "duplicate edges".into()));
    }
    Ok(g)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphKind};
    use proptest::prelude::*;

    /// Decodes by expanding each byte to its six bits by hand, independent of
    /// the parser's bit indexing.
    fn hand_decode(code: &str) -> Vec<(usize, usize)> {
        let bytes = code.as_bytes();
        let n = usize::from(bytes[0] - 63);
        let bits: Vec<u8> = bytes[1..]
            .iter()
            .flat_map(|&b| format!("{:06b}", b - 63).into_bytes())
            .map(|c| c - b'0')
            .collect();
        let mut pairs = Vec::new();
        for j in 1..n {
            for i in 0..j {
                pairs.push((i, j));
            }
        }
        let mut edges: Vec<_> = pairs.into_iter().zip(bits).filter(|(_, b)| *b == 1).map(|(e, _)| e).collect();
        edges.sort_unstable();
        edges
    }

    #[test]
    fn decodes_star() {
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges(), hand_decode("D?{"));
        assert_eq!(g.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
    }

    #[test]
    fn decodes_k2() {
        let g = parse_graph6("A_").unwrap();
        assert_eq!((g.n(), g.edges()), (2, vec![(0, 1)]));
    }

    #[test]
    fn round_trips_literal() {
        let g = parse_graph6("DQw").unwrap();
        assert_eq!(g.edges(), hand_decode("DQw"));
        assert_eq!(emit_graph6(&g), "DQw");
    }

    #[test]
    fn header_and_newline_are_accepted() {
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap().edge_count(), 1);
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "D?", "D?{?", "A\u{7f}", "A`", " A_", "~~??????"] {
            assert!(matches!(parse_graph6(bad), Err(Error::MalformedGraph6(_))), "{bad:?}");
        }
    }

    #[test]
    fn large_header() {
        let g = generate(GraphKind::Cycle(100)).unwrap();
        let code = emit_graph6(&g);
        assert!(code.starts_with('~'));
        assert_eq!(parse_graph6(&code).unwrap().edges(), g.edges());
    }

    #[test]
    fn multi_line_reports_line_numbers() {
        let err = parse_graph6_lines("A_\n\nD?{\nD?\n").unwrap_err();
        assert!(err.to_string().contains("line 4"), "{err}");
        assert_eq!(parse_graph6_lines("A_\nD?{\n").unwrap().len(), 2);
    }

    #[test]
    fn edge_list_round_trip_and_errors() {
        let g = generate(GraphKind::Petersen).unwrap();
        let h = parse_edge_list(&emit_edge_list(&g)).unwrap();
        assert_eq!(g.edges(), h.edges());
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 3\n").is_err());
        assert!(parse_edge_list("3 2\n0 1\n1 0\n").is_err());
        assert!(parse_edge_list("3 1\n0 x\n").is_err());
        assert_eq!(parse_edge_list("# tri\n3 3\n0 1\n1 2 # x\n\n2 0\n").unwrap().edge_count(), 3);
    }

    proptest! {
        #[test]
        fn graph6_round_trip(n in 0usize..80, seed in any::<u64>()) {
            let mut state = seed | 1;
            let mut edges = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    state ^= state << 13; state ^= state >> 7; state ^= state << 17;
                    if state % 3 == 0 { edges.push((i, j)); }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let h = parse_graph6(&emit_graph6(&g)).unwrap();
            prop_assert_eq!(g.edges(), h.edges());
            prop_assert_eq!(g.n(), h.n());
        }
    }
}
