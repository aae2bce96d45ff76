//! Immutable simple-graph representation and the structural algorithms the
//! rest of the crate consumes.

mod cycles;
mod factor;
mod families;
mod io;
mod iso;
mod metrics;
mod planarity;

pub use cycles::{
    canonical_rotation, enumerate_chordless, induced_cycles, induced_cycles_through_angle,
    is_chordless_cycle,
};
pub use factor::{prime_factorization, Factorization};
pub use families::{
    cartesian_product, circulant, circulant_is_connected, named_graph, star_clique, NamedFamily,
};
pub use io::{from_edge_list_text, from_graph6, to_edge_list_text, to_graph6, GraphJson};
pub use iso::{are_isomorphic, contains_induced};
pub use metrics::{kappa_with_cut, max_disjoint_paths, vertex_connectivity, GraphMetrics};
pub use planarity::{
    is_planar, verify_kuratowski, KuratowskiKind, KuratowskiWitness, PlanarEmbedding,
    PlanarityResult,
};

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({0}, {1}) out of range for a graph on {2} vertices")]
    VertexOutOfRange(usize, usize, usize),
    #[error("self-loop ({0}, {0}) rejected")]
    SelfLoop(usize),
    #[error("vertex {0} does not exist in a graph on {1} vertices")]
    NoSuchVertex(usize, usize),
    #[error("graph must have at least {0} vertices, found {1}")]
    TooSmall(usize, usize),
    #[error("circulant step {0} outside 1..={1}")]
    BadCirculantStep(usize, usize),
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("invalid parameters for family `{0}`: {1}")]
    BadFamilyParams(String, String),
    #[error("family `{0}` failed its structural validation: {1}")]
    FamilyValidation(String, String),
    #[error("star-clique pivot {0} is isolated")]
    IsolatedPivot(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Warning emitted by graph construction (e.g. duplicate input edges).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildWarning(pub String);

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<bool>>,
    neighbors: Vec<Vec<usize>>,
    label: Option<String>,
}

impl Graph {
    /// Builds a graph, deduplicating edges. Warnings report duplicates.
    pub fn new(
        n: usize,
        edges: &[(usize, usize)],
        label: Option<String>,
    ) -> Result<(Graph, Vec<BuildWarning>), GraphError> {
        let mut adj = vec![vec![false; n]; n];
        let mut warnings = Vec::new();
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adj[u][v] {
                warnings.push(BuildWarning(format!("duplicate edge ({u}, {v}) ignored")));
            }
            adj[u][v] = true;
            adj[v][u] = true;
        }
        let neighbors = (0..n)
            .map(|u| (0..n).filter(|&v| adj[u][v]).collect())
            .collect();
        Ok((
            Graph {
                n,
                adj,
                neighbors,
                label,
            },
            warnings,
        ))
    }

    /// `Graph::new` discarding warnings; errors still surface.
    pub fn make(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        Ok(Graph::new(n, edges, None)?.0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Graph {
        self.label = Some(label.into());
        self
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u][v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for &v in &self.neighbors[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(|ns| ns.len()).sum::<usize>() / 2
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n.saturating_sub(1)) / 2
    }

    /// Connected components as sorted vertex lists, sorted by first vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_avoiding(&[])
    }

    /// Components of the graph with `removed` vertices deleted.
    pub fn components_avoiding(&self, removed: &[usize]) -> Vec<Vec<usize>> {
        let mut gone = vec![false; self.n];
        for &v in removed {
            gone[v] = true;
        }
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if gone[s] || seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.neighbors[u] {
                    if !gone[w] && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// True when the whole graph is a single cycle.
    pub fn is_cycle_graph(&self) -> bool {
        self.n >= 3 && self.is_connected() && self.regular_degree() == Some(2)
    }

    /// Induced subgraph on `verts` (deduplicated, sorted); returns the
    /// subgraph together with the map new-index -> old-index.
    pub fn induced(&self, verts: &[usize]) -> (Graph, Vec<usize>) {
        let set: BTreeSet<usize> = verts.iter().copied().collect();
        let map: Vec<usize> = set.into_iter().collect();
        let mut edges = Vec::new();
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.adj[u][v] {
                    edges.push((i, j));
                }
            }
        }
        (
            Graph::make(map.len(), &edges).expect("induced subgraph is simple"),
            map,
        )
    }

    /// Relabels vertices: new vertex `i` is old vertex `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut inv = vec![0usize; self.n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let edges: Vec<(usize, usize)> = self
            .edges()
            .iter()
            .map(|&(u, v)| (inv[u], inv[v]))
            .collect();
        let mut g = Graph::make(self.n, &edges).expect("relabel keeps simplicity");
        g.label = self.label.clone();
        g
    }

    /// Sorted degree sequence, used as a cheap isomorphism invariant.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Number of triangles through each vertex.
    pub fn triangle_counts(&self) -> Vec<usize> {
        let mut t = vec![0usize; self.n];
        for u in 0..self.n {
            for (i, &v) in self.neighbors[u].iter().enumerate() {
                for &w in self.neighbors[u].iter().skip(i + 1) {
                    if self.adj[v][w] {
                        t[u] += 1;
                    }
                }
            }
        }
        t
    }

    /// Complement graph (same vertex set).
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.adj[u][v] {
                    edges.push((u, v));
                }
            }
        }
        Graph::make(self.n, &edges).expect("complement is simple")
    }

    /// Bipartition classes if the graph is bipartite (connected components
    /// colored independently, class of the smallest vertex first).
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut color = vec![None::<bool>; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(true);
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.neighbors[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(!color[u].unwrap());
                            queue.push_back(v);
                        }
                        Some(c) if c == color[u].unwrap() => return None,
                        _ => {}
                    }
                }
            }
        }
        let a = (0..self.n).filter(|&v| color[v] == Some(true)).collect();
        let b = (0..self.n).filter(|&v| color[v] == Some(false)).collect();
        Some((a, b))
    }

    /// True if the graph is the complete bipartite graph on its bipartition.
    pub fn complete_bipartite_classes(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let (a, b) = self.bipartition()?;
        if a.is_empty() || b.is_empty() {
            return None;
        }
        let complete = a.iter().all(|&u| b.iter().all(|&v| self.adj[u][v]));
        complete.then_some((a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_segment_and_k4() {
        let (g, w) = Graph::new(2, &[(0, 1)], None).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(w.is_empty());

        let all: Vec<(usize, usize)> = (0..4)
            .flat_map(|u| ((u + 1)..4).map(move |v| (u, v)))
            .collect();
        let (k4, _) = Graph::new(4, &all, None).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert!(k4.is_complete());
    }

    #[test]
    fn duplicate_edges_dedup_with_warning() {
        let (g, w) = Graph::new(3, &[(0, 1), (0, 1)], None).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(w.len(), 1);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(
            Graph::make(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange(0, 3, 3))
        ));
        assert!(matches!(
            Graph::make(3, &[(1, 1)]),
            Err(GraphError::SelfLoop(1))
        ));
    }

    #[test]
    fn components_and_bipartition() {
        let g = Graph::make(6, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[0], vec![0, 1, 2]);

        let c4 = Graph::make(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let (a, b) = c4.bipartition().unwrap();
        assert_eq!(a, vec![0, 2]);
        assert_eq!(b, vec![1, 3]);
    }
}
