//! Graph serialization: graph6, edge-list text, and JSON.

use super::{Graph, GraphError};
use serde::{Deserialize, Serialize};

/// JSON shape for a graph: `{n, edges, label}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges(),
            label: g.label().map(|s| s.to_string()),
        }
    }
}

impl GraphJson {
    pub fn into_graph(self) -> Result<Graph, GraphError> {
        let g = Graph::new(self.n, &self.edges, self.label)?.0;
        Ok(g)
    }
}

/// Encodes in graph6 format (upper triangle, column order).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n < 63 {
        out.push((n as u8 + 63) as char);
    } else {
        // Extended form for 63 <= n <= 258047.
        out.push('~');
        out.push((((n >> 12) & 0x3f) as u8 + 63) as char);
        out.push((((n >> 6) & 0x3f) as u8 + 63) as char);
        out.push(((n & 0x3f) as u8 + 63) as char);
    }
    let mut bits: Vec<bool> = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    while !bits.len().is_multiple_of(6) {
        bits.push(false);
    }
    for chunk in bits.chunks(6) {
        let mut val = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                val |= 1 << (5 - k);
            }
        }
        out.push((val + 63) as char);
    }
    out
}

pub fn from_graph6(s: &str) -> Result<Graph, GraphError> {
    let bytes: Vec<u8> = s.trim().bytes().collect();
    if bytes.is_empty() {
        return Err(GraphError::Parse("empty graph6 string".into()));
    }
    let (n, rest) = if bytes[0] == b'~' {
        if bytes.len() < 4 {
            return Err(GraphError::Parse("truncated graph6 header".into()));
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    let need = n * n.saturating_sub(1) / 2;
    let mut bits = Vec::with_capacity(rest.len() * 6);
    for &b in rest {
        if !(63..=126).contains(&b) {
            return Err(GraphError::Parse(format!("bad graph6 byte {b}")));
        }
        let v = b - 63;
        for k in 0..6 {
            bits.push((v >> (5 - k)) & 1 == 1);
        }
    }
    if bits.len() < need {
        return Err(GraphError::Parse("graph6 body too short".into()));
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Ok(Graph::new(n, &edges, None)?.0)
}

/// Text format: header `n m`, then one `u v` line per edge.
pub fn to_edge_list_text(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn from_edge_list_text(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| GraphError::Parse("missing header line".into()))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| GraphError::Parse("bad vertex count".into()))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| GraphError::Parse("bad edge count".into()))?;
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GraphError::Parse(format!("bad edge line `{line}`")))?;
        let v: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GraphError::Parse(format!("bad edge line `{line}`")))?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(GraphError::Parse(format!(
            "header promised {m} edges, found {}",
            edges.len()
        )));
    }
    Ok(Graph::new(n, &edges, None)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{circulant, named_graph, NamedFamily};
    use proptest::prelude::*;

    #[test]
    fn graph6_known_values() {
        // K4 in graph6 is "C~".
        let k4 = named_graph(&NamedFamily::Complete(4)).unwrap();
        assert_eq!(to_graph6(&k4), "C~");
        let back = from_graph6("C~").unwrap();
        assert!(back.is_complete());
        assert_eq!(back.n(), 4);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = circulant(8, &[1, 2, 4]).unwrap();
        let text = to_edge_list_text(&g);
        let h = from_edge_list_text(&text).unwrap();
        assert_eq!(g.edges(), h.edges());
    }

    proptest! {
        #[test]
        fn graph6_round_trip(n in 1usize..20, seed in 0u64..1000) {
            // Deterministic pseudo-random edge set.
            let mut edges = Vec::new();
            let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
            for u in 0..n {
                for v in (u+1)..n {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if state >> 63 == 1 {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::make(n, &edges).unwrap();
            let enc = to_graph6(&g);
            let h = from_graph6(&enc).unwrap();
            prop_assert_eq!(g.edges(), h.edges());
            prop_assert_eq!(g.n(), h.n());
        }
    }
}
