use super::Graph;
use crate::error::{Error, Result};

/// Parses the edge-list format: a header line `n m` followed by `m` lines
/// `u v`. Text after `#` is a comment; blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header `n m`".into(),
    })?;
    let [n, m] = parse_pair(header_line, header, "header")?;

    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        if edges.len() == m {
            return Err(Error::Parse {
                line,
                message: format!("more than the {m} edges announced in the header"),
            });
        }
        let [u, v] = parse_pair(line, l, "edge")?;
        for w in [u, v] {
            if w >= n {
                return Err(Error::Parse {
                    line,
                    message: Error::VertexOutOfRange { vertex: w, n }.to_string(),
                });
            }
        }
        if u == v {
            return Err(Error::Parse {
                line,
                message: Error::Loop(u).to_string(),
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: header_line,
            message: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, edges)
}

fn parse_pair(line: usize, text: &str, what: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    let bad = || Error::Parse {
        line,
        message: format!("malformed {what} `{text}`: expected two non-negative integers"),
    };
    if fields.len() != 2 {
        return Err(bad());
    }
    let a = fields[0].parse().map_err(|_| bad())?;
    let b = fields[1].parse().map_err(|_| bad())?;
    Ok([a, b])
}

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Decodes one graph6 line (McKay's format). A leading `>>graph6<<` header
/// and surrounding whitespace are accepted.
pub fn decode_graph6(line: &str) -> Result<Graph> {
    let line = line.trim();
    let bytes = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line).as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("invalid byte {b:#04x}")));
    }
    let (n, body) = decode_order(bytes)?;

    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    if body.len() < needed {
        return Err(Error::Graph6(format!(
            "truncated: {n} vertices need {needed} data bytes, found {}",
            body.len()
        )));
    }
    if body.len() > needed {
        return Err(Error::Graph6(format!(
            "{} trailing bytes after the adjacency data",
            body.len() - needed
        )));
    }

    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    if (pairs..needed * 6).any(bit) {
        return Err(Error::Graph6("non-zero padding bits".into()));
    }
    Graph::new(n, edges)
}

fn decode_order(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let value = |chunk: &[u8]| chunk.iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
    match bytes {
        [] => Err(Error::Graph6("empty line".into())),
        [126, 126, rest @ ..] if rest.len() >= 6 => Ok((value(&rest[..6]), &rest[6..])),
        [126, 126, ..] => Err(Error::Graph6("truncated 36-bit vertex count".into())),
        [126, rest @ ..] if rest.len() >= 3 => Ok((value(&rest[..3]), &rest[3..])),
        [126, ..] => Err(Error::Graph6("truncated 18-bit vertex count".into())),
        [b, rest @ ..] => Ok(((b - 63) as usize, rest)),
    }
}

/// Encodes a graph in graph6 (no header, no newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| (n >> (6 * i) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| (n >> (6 * i) & 63) as u8 + 63));
    }
    let adj = g.adjacency();
    let mut chunk = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            chunk = chunk << 1 | adj[u * n + v] as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes every non-blank line of a graph6 file.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            decode_graph6(l).map_err(|e| Error::Parse {
                line: i + 1,
                message: e.to_string(),
            })
        })
        .collect()
}
