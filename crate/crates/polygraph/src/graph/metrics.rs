//! Vertex connectivity via unit-capacity vertex-split max flow.

use super::{Graph, GraphError};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphMetrics {
    /// Vertex connectivity κ(G).
    pub kappa: usize,
    /// Minimum degree δ(G).
    pub delta: usize,
    /// Degree if the graph is regular.
    pub regular_degree: Option<usize>,
}

/// Computes κ(G) by Menger: the minimum over non-adjacent pairs of the
/// maximum number of internally disjoint paths, via vertex-split max flow.
/// κ(K_n) = n−1 by convention.
pub fn vertex_connectivity(g: &Graph) -> Result<GraphMetrics, GraphError> {
    if g.n() < 2 {
        return Err(GraphError::TooSmall(2, g.n()));
    }
    let kappa = kappa_with_cut(g).0;
    Ok(GraphMetrics {
        kappa,
        delta: g.min_degree(),
        regular_degree: g.regular_degree(),
    })
}

/// κ(G) together with a minimum vertex cut witnessing it (empty for complete
/// graphs, where κ = n−1 holds by convention and no cut exists).
pub fn kappa_with_cut(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.n();
    if g.is_complete() {
        return (n.saturating_sub(1), Vec::new());
    }
    if !g.is_connected() {
        return (0, Vec::new());
    }
    let mut best = g.min_degree();
    let mut best_cut: Option<Vec<usize>> = None;
    for s in 0..n {
        for t in (s + 1)..n {
            if g.has_edge(s, t) {
                continue;
            }
            if let Some((flow, cut)) = max_disjoint_paths_capped(g, s, t, best) {
                if flow < best || best_cut.is_none() {
                    best = flow;
                    best_cut = Some(cut);
                }
            }
        }
    }
    (
        best,
        best_cut.expect("non-complete graph has a non-adjacent pair"),
    )
}

/// Maximum internally disjoint s-t paths, stopping early once the flow
/// exceeds `cap` (then this pair cannot improve the current minimum and
/// `None` is returned). Also returns the vertex cut from the final residual.
fn max_disjoint_paths_capped(
    g: &Graph,
    s: usize,
    t: usize,
    cap: usize,
) -> Option<(usize, Vec<usize>)> {
    // Vertex split: v_in = 2v, v_out = 2v+1; split arcs v_in->v_out carry
    // capacity 1, edge arcs u_out->v_in are effectively infinite so every
    // minimum cut consists of split arcs only.
    let n = g.n();
    let num = 2 * n;
    let inf = (n + 1) as i32;
    let mut arcs: Vec<(usize, usize, i32)> = Vec::new(); // (to, rev index, residual cap)
    let mut head: Vec<Vec<usize>> = vec![Vec::new(); num];
    let add = |head: &mut Vec<Vec<usize>>,
               arcs: &mut Vec<(usize, usize, i32)>,
               a: usize,
               b: usize,
               c: i32| {
        let ia = arcs.len();
        arcs.push((b, ia + 1, c));
        arcs.push((a, ia, 0));
        head[a].push(ia);
        head[b].push(ia + 1);
    };
    for v in 0..n {
        add(&mut head, &mut arcs, 2 * v, 2 * v + 1, 1);
    }
    for (u, v) in g.edges() {
        add(&mut head, &mut arcs, 2 * u + 1, 2 * v, inf);
        add(&mut head, &mut arcs, 2 * v + 1, 2 * u, inf);
    }
    let src = 2 * s + 1;
    let dst = 2 * t;
    let mut flow = 0usize;
    loop {
        if flow > cap {
            return None;
        }
        // BFS augmenting path over positive-residual arcs.
        let mut prev_arc = vec![usize::MAX; num];
        let mut seen = vec![false; num];
        seen[src] = true;
        let mut queue = std::collections::VecDeque::from([src]);
        let mut reached = false;
        'bfs: while let Some(u) = queue.pop_front() {
            for &ai in &head[u] {
                let (to, _, c) = arcs[ai];
                if c > 0 && !seen[to] && arcs[ai ^ 1].0 == u {
                    seen[to] = true;
                    prev_arc[to] = ai;
                    if to == dst {
                        reached = true;
                        break 'bfs;
                    }
                    queue.push_back(to);
                }
            }
        }
        if !reached {
            // Min cut: split arcs v_in -> v_out with v_in reachable, v_out not.
            let cut: Vec<usize> = (0..n)
                .filter(|&v| seen[2 * v] && !seen[2 * v + 1])
                .collect();
            return Some((flow, cut));
        }
        let mut x = dst;
        while x != src {
            let ai = prev_arc[x];
            arcs[ai].2 -= 1;
            arcs[ai ^ 1].2 += 1;
            x = arcs[ai ^ 1].0;
        }
        flow += 1;
    }
}

/// Maximum number of internally disjoint s-t paths (no early stopping).
pub fn max_disjoint_paths(g: &Graph, s: usize, t: usize) -> usize {
    max_disjoint_paths_capped(g, s, t, usize::MAX)
        .map(|(f, _)| f)
        .unwrap_or(usize::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{circulant, named_graph, NamedFamily};

    fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for v in start..n {
                cur.push(v);
                rec(v + 1, n, k, cur, out);
                cur.pop();
            }
        }
        rec(0, n, k, &mut cur, &mut out);
        out
    }

    /// Brute-force connectivity: smallest removal set disconnecting the graph.
    fn kappa_brute(g: &Graph, max_k: usize) -> usize {
        if g.is_complete() {
            return g.n() - 1;
        }
        for k in 0..=max_k {
            for subset in subsets_of_size(g.n(), k) {
                if g.components_avoiding(&subset).len() != 1 {
                    return k;
                }
            }
        }
        max_k + 1
    }

    #[test]
    fn complete_and_cycle() {
        let k5 = named_graph(&NamedFamily::Complete(5)).unwrap();
        assert_eq!(vertex_connectivity(&k5).unwrap().kappa, 4);
        let c6 = named_graph(&NamedFamily::Cycle(6)).unwrap();
        let m = vertex_connectivity(&c6).unwrap();
        assert_eq!(m.kappa, 2);
        assert_eq!(m.delta, 2);
        assert_eq!(m.regular_degree, Some(2));
    }

    #[test]
    fn petersen_is_three_connected() {
        let p = named_graph(&NamedFamily::Petersen).unwrap();
        assert_eq!(vertex_connectivity(&p).unwrap().kappa, 3);
        // Independent oracle: no cut of size <= 2, some cut of size 3.
        assert_eq!(kappa_brute(&p, 3), 3);
    }

    #[test]
    fn menger_agrees_with_brute_force_on_circulants() {
        for (n, steps) in [
            (7usize, vec![1usize, 2]),
            (8, vec![1, 3]),
            (8, vec![1, 2, 3]),
        ] {
            let g = circulant(n, &steps).unwrap();
            let k = vertex_connectivity(&g).unwrap().kappa;
            assert_eq!(k, kappa_brute(&g, g.min_degree()), "Γ{n}{steps:?}");
        }
    }

    #[test]
    fn cut_is_genuine() {
        let c6 = named_graph(&NamedFamily::Cycle(6)).unwrap();
        let (k, cut) = kappa_with_cut(&c6);
        assert_eq!(k, 2);
        assert_eq!(cut.len(), 2);
        assert!(c6.components_avoiding(&cut).len() >= 2);
    }

    #[test]
    fn rejects_tiny_graphs() {
        let g = Graph::make(1, &[]).unwrap();
        assert!(vertex_connectivity(&g).is_err());
    }
}
