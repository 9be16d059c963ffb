//! graph6 text format (short form, n <= 62) and a plain edge-list format.
//!
//! graph6 packs the upper triangle of the adjacency matrix, column by
//! column, into 6-bit groups offset by 63 into printable ASCII.

use thiserror::Error;

use crate::graph::{Graph, VertexId};

pub const GRAPH6_HEADER: &str = ">>graph6<<";

/// Largest order representable in the short form.
pub const GRAPH6_MAX_N: usize = 62;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("empty graph6 record")]
    Empty,
    #[error("byte {offset}: length byte {byte:#x} outside short-form range")]
    BadLength { offset: usize, byte: u8 },
    #[error("byte {offset}: value {byte:#x} not printable graph6 data")]
    BadByte { offset: usize, byte: u8 },
    #[error("record truncated: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("byte {offset}: trailing garbage after graph6 record")]
    TrailingGarbage { offset: usize },
    #[error("graph order {0} exceeds graph6 short form maximum of 62")]
    TooLarge(usize),
    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
}

/// Decodes one graph6 record; the `>>graph6<<` header is optional.
pub fn parse_graph6(text: &str) -> Result<Graph, FormatError> {
    let text = text.trim_end_matches(['\r', '\n']);
    let (bytes, base) = match text.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (rest.as_bytes(), GRAPH6_HEADER.len()),
        None => (text.as_bytes(), 0),
    };
    if bytes.is_empty() {
        return Err(FormatError::Empty);
    }
    let head = bytes[0];
    // 126 opens the multi-byte length forms; only single-byte orders here.
    if !(63..126).contains(&head) {
        return Err(FormatError::BadLength {
            offset: base,
            byte: head,
        });
    }
    let n = (head - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let data = &bytes[1..];
    if data.len() < expected {
        return Err(FormatError::Truncated {
            expected,
            found: data.len(),
        });
    }
    if data.len() > expected {
        return Err(FormatError::TrailingGarbage {
            offset: base + 1 + expected,
        });
    }
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(FormatError::BadByte {
                offset: base + 1 + i,
                byte: b,
            });
        }
    }
    let mut g = Graph::new(n);
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[bit / 6] - 63;
            let set = (byte >> (5 - bit % 6)) & 1 == 1;
            if set {
                g = g
                    .add_edge(VertexId(i), VertexId(j))
                    .expect("triangle positions are distinct non-loops");
            }
            bit += 1;
        }
    }
    Ok(g)
}

/// Encodes in graph6 short form.
pub fn to_graph6(g: &Graph) -> Result<String, FormatError> {
    let n = g.vertex_count();
    if n > GRAPH6_MAX_N {
        return Err(FormatError::TooLarge(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut data = vec![0u8; bits.div_ceil(6)];
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(VertexId(i), VertexId(j)) {
                data[bit / 6] |= 1 << (5 - bit % 6);
            }
            bit += 1;
        }
    }
    let mut out = String::with_capacity(1 + data.len());
    out.push((63 + n as u8) as char);
    for b in data {
        out.push((b + 63) as char);
    }
    Ok(out)
}

/// Parses the auxiliary edge-list format: first line the vertex count,
/// then one `a b` pair per line.
pub fn parse_edgelist(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (line, first) = lines.next().ok_or(FormatError::Empty)?;
    let n: usize = first.trim().parse().map_err(|_| FormatError::EdgeList {
        line: line + 1,
        msg: format!("expected vertex count, got {:?}", first.trim()),
    })?;
    let mut edges = Vec::new();
    for (line, text) in lines {
        let mut parts = text.split_whitespace();
        let (a, b) = (parts.next(), parts.next());
        let (a, b) = match (a, b, parts.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(FormatError::EdgeList {
                    line: line + 1,
                    msg: format!("expected two endpoints, got {text:?}"),
                })
            }
        };
        let parse = |s: &str| -> Result<usize, FormatError> {
            s.parse().map_err(|_| FormatError::EdgeList {
                line: line + 1,
                msg: format!("bad vertex index {s:?}"),
            })
        };
        edges.push((parse(a)?, parse(b)?));
    }
    Graph::from_edges(n, edges).map_err(|e| FormatError::EdgeList {
        line: 0,
        msg: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn single_vertex_is_at_sign() {
        assert_eq!(to_graph6(&Graph::new(1)).unwrap(), "@");
        assert_eq!(parse_graph6("@").unwrap(), Graph::new(1));
    }

    #[test]
    fn p2_and_p4_reference_encodings() {
        // K_2: one bit set in a single 6-bit group -> 100000 + 63 = '_'
        assert_eq!(to_graph6(&path(2)).unwrap(), "A_");
        // P_4 edges {01,12,23}: triangle bits x01 x02 x12 x03 x13 x23 = 101001
        let p4 = parse_graph6(&to_graph6(&path(4)).unwrap()).unwrap();
        assert_eq!(p4, path(4));
        assert_eq!(to_graph6(&path(4)).unwrap(), "Ch");
    }

    #[test]
    fn empty_graph_codes() {
        assert_eq!(parse_graph6("B?").unwrap(), Graph::new(3));
        assert_eq!(to_graph6(&Graph::new(3)).unwrap(), "B?");
    }

    #[test]
    fn header_is_accepted() {
        assert_eq!(parse_graph6(">>graph6<<A_").unwrap(), path(2));
    }

    #[test]
    fn five_vertex_code_round_trips() {
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(to_graph6(&g).unwrap(), "D?{");
    }

    #[test]
    fn errors_name_offsets() {
        assert_eq!(parse_graph6(""), Err(FormatError::Empty));
        assert_eq!(
            parse_graph6("~AA"),
            Err(FormatError::BadLength {
                offset: 0,
                byte: b'~'
            })
        );
        assert_eq!(
            parse_graph6("C"),
            Err(FormatError::Truncated {
                expected: 1,
                found: 0
            })
        );
        assert_eq!(
            parse_graph6("A_X"),
            Err(FormatError::TrailingGarbage { offset: 2 })
        );
        assert_eq!(
            parse_graph6("A "),
            Err(FormatError::BadByte {
                offset: 1,
                byte: b' '
            })
        );
    }

    #[test]
    fn oversized_graph_is_refused() {
        assert!(matches!(
            to_graph6(&Graph::new(63)),
            Err(FormatError::TooLarge(63))
        ));
    }

    #[test]
    fn edgelist_round_trip() {
        let g = parse_edgelist("4\n0 1\n1 2\n2 3\n").unwrap();
        assert_eq!(g, path(4));
        assert!(parse_edgelist("x\n").is_err());
        assert!(parse_edgelist("3\n0 1 2\n").is_err());
        assert!(parse_edgelist("3\n0 9\n").is_err());
    }
}
