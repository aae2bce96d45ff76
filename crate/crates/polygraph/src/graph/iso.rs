//! Exhaustive isomorphism and induced-subgraph search with invariant pruning.
//!
//! Inputs in this crate stay small (≤ ~120 vertices) and highly structured,
//! so backtracking with degree / triangle / neighborhood refinement is enough.
//! Results are deterministic: candidates are tried in ascending order.

use super::Graph;
use std::collections::BTreeMap;

/// Vertex invariant: iteratively refined colors starting from
/// (degree, triangle count), one round of neighbor-multiset refinement per
/// iteration until stable.
fn refined_colors(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let tri = g.triangle_counts();
    let mut color: Vec<u64> = (0..n)
        .map(|v| (g.degree(v) as u64) << 32 | tri[v] as u64)
        .collect();
    for _ in 0..n {
        let mut sig: Vec<(u64, Vec<u64>)> = (0..n)
            .map(|v| {
                let mut ns: Vec<u64> = g.neighbors(v).iter().map(|&u| color[u]).collect();
                ns.sort_unstable();
                (color[v], ns)
            })
            .collect();
        let mut sorted = sig.clone();
        sorted.sort();
        sorted.dedup();
        let index: BTreeMap<&(u64, Vec<u64>), u64> = sorted
            .iter()
            .enumerate()
            .map(|(i, s)| (s, i as u64))
            .collect();
        let next: Vec<u64> = (0..n).map(|v| index[&sig[v]]).collect();
        let stable = {
            // Same partition?
            let mut classes_old: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
            let mut classes_new: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
            for v in 0..n {
                classes_old.entry(color[v]).or_default().push(v);
                classes_new.entry(next[v]).or_default().push(v);
            }
            classes_old.len() == classes_new.len()
        };
        color = next;
        sig.clear();
        if stable {
            break;
        }
    }
    color
}

/// Exhaustive isomorphism test; returns a bijection (image of each vertex of
/// `g` in `h`) if the graphs are isomorphic. Deterministic.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    if g.degree_sequence() != h.degree_sequence() {
        return None;
    }
    let cg = refined_colors(g);
    let ch = refined_colors(h);
    let mut mg: Vec<u64> = cg.clone();
    let mut mh: Vec<u64> = ch.clone();
    mg.sort_unstable();
    mh.sort_unstable();
    if mg != mh {
        return None;
    }
    let n = g.n();
    // Order g's vertices: most-constrained color class first, then by
    // connectivity to already-mapped vertices.
    let mut order: Vec<usize> = (0..n).collect();
    let mut class_size: BTreeMap<u64, usize> = BTreeMap::new();
    for &c in &cg {
        *class_size.entry(c).or_default() += 1;
    }
    order.sort_by_key(|&v| (class_size[&cg[v]], cg[v], v));
    // Greedy reorder so each vertex touches the mapped prefix when possible.
    let mut seq: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    while seq.len() < n {
        let pick = order
            .iter()
            .copied()
            .filter(|&v| !used[v])
            .find(|&v| g.neighbors(v).iter().any(|&u| used[u]))
            .or_else(|| order.iter().copied().find(|&v| !used[v]))
            .unwrap();
        used[pick] = true;
        seq.push(pick);
    }

    let mut map = vec![usize::MAX; n];
    let mut inv = vec![usize::MAX; n];
    if match_next(g, h, &cg, &ch, &seq, 0, &mut map, &mut inv) {
        Some(map)
    } else {
        None
    }
}

fn match_next(
    g: &Graph,
    h: &Graph,
    cg: &[u64],
    ch: &[u64],
    seq: &[usize],
    k: usize,
    map: &mut Vec<usize>,
    inv: &mut Vec<usize>,
) -> bool {
    if k == seq.len() {
        return true;
    }
    let v = seq[k];
    'cand: for t in 0..h.n() {
        if inv[t] != usize::MAX || ch[t] != cg[v] {
            continue;
        }
        for &u in g.neighbors(v) {
            if map[u] != usize::MAX && !h.has_edge(t, map[u]) {
                continue 'cand;
            }
        }
        // Non-adjacency must match as well (isomorphism, not homomorphism).
        for u in 0..g.n() {
            if map[u] != usize::MAX && !g.has_edge(v, u) && h.has_edge(t, map[u]) {
                continue 'cand;
            }
        }
        map[v] = t;
        inv[t] = v;
        if match_next(g, h, cg, ch, seq, k + 1, map, inv) {
            return true;
        }
        map[v] = usize::MAX;
        inv[t] = usize::MAX;
    }
    false
}

/// Finds `pattern` as an *induced* subgraph of `g`; returns the injective
/// map (pattern vertex -> g vertex) or None. Exhaustive backtracking with
/// degree pruning; deterministic (lexicographically first witness in the
/// search order).
pub fn contains_induced(g: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    if pattern.n() > g.n() {
        return None;
    }
    let np = pattern.n();
    // Order pattern vertices: highest degree first, then prefer connectivity
    // to the mapped prefix.
    let mut order: Vec<usize> = (0..np).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(pattern.degree(v)));
    let mut seq = Vec::with_capacity(np);
    let mut used = vec![false; np];
    while seq.len() < np {
        let pick = order
            .iter()
            .copied()
            .filter(|&v| !used[v])
            .find(|&v| pattern.neighbors(v).iter().any(|&u| used[u]))
            .or_else(|| order.iter().copied().find(|&v| !used[v]))
            .unwrap();
        used[pick] = true;
        seq.push(pick);
    }
    let mut map = vec![usize::MAX; np];
    let mut taken = vec![false; g.n()];
    induced_next(g, pattern, &seq, 0, &mut map, &mut taken).then_some(map)
}

fn induced_next(
    g: &Graph,
    pattern: &Graph,
    seq: &[usize],
    k: usize,
    map: &mut Vec<usize>,
    taken: &mut Vec<bool>,
) -> bool {
    if k == seq.len() {
        return true;
    }
    let v = seq[k];
    'cand: for t in 0..g.n() {
        if taken[t] || g.degree(t) < pattern.degree(v) {
            continue;
        }
        for &u in seq[..k].iter() {
            let tu = map[u];
            if pattern.has_edge(v, u) != g.has_edge(t, tu) {
                continue 'cand;
            }
        }
        map[v] = t;
        taken[t] = true;
        if induced_next(g, pattern, seq, k + 1, map, taken) {
            return true;
        }
        map[v] = usize::MAX;
        taken[t] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cartesian_product, circulant, named_graph, star_clique, NamedFamily};

    #[test]
    fn star_clique_of_k4_is_the_prism() {
        let k4 = named_graph(&NamedFamily::Complete(4)).unwrap();
        let s = star_clique(&k4, 0).unwrap();
        let k3 = named_graph(&NamedFamily::Cycle(3)).unwrap();
        let k2 = named_graph(&NamedFamily::Complete(2)).unwrap();
        let prism = cartesian_product(&k3, &k2);
        let map = are_isomorphic(&s, &prism).expect("isomorphic");
        // Audit the bijection.
        for (u, v) in s.edges() {
            assert!(prism.has_edge(map[u], map[v]));
        }
    }

    #[test]
    fn hexagon_vs_k33() {
        let c6 = named_graph(&NamedFamily::Cycle(6)).unwrap();
        let k33 = named_graph(&NamedFamily::CompleteBipartite(3, 3)).unwrap();
        assert!(are_isomorphic(&c6, &k33).is_none());
    }

    #[test]
    fn circulant_6_12_is_octahedron() {
        let g = circulant(6, &[1, 2]).unwrap();
        // Octahedron = K_{2,2,2}: complement of three disjoint edges.
        let oct = Graph::make(
            6,
            &[
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 4),
                (2, 5),
                (3, 4),
                (3, 5),
            ],
        )
        .unwrap();
        assert!(are_isomorphic(&g, &oct).is_some());
    }

    #[test]
    fn induced_search_examples() {
        let k4 = named_graph(&NamedFamily::Complete(4)).unwrap();
        let k3 = named_graph(&NamedFamily::Complete(3)).unwrap();
        assert!(contains_induced(&k4, &k3).is_some());

        let c5 = named_graph(&NamedFamily::Cycle(5)).unwrap();
        let c4 = named_graph(&NamedFamily::Cycle(4)).unwrap();
        assert!(contains_induced(&c5, &c4).is_none());
    }

    #[test]
    fn petersen_square_contains_induced_petersen() {
        let p = named_graph(&NamedFamily::Petersen).unwrap();
        let pp = cartesian_product(&p, &p);
        let map = contains_induced(&pp, &p).expect("fiber copy");
        for u in 0..p.n() {
            for v in (u + 1)..p.n() {
                assert_eq!(p.has_edge(u, v), pp.has_edge(map[u], map[v]));
            }
        }
    }
}
