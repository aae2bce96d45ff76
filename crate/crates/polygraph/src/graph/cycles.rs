//! Chordless cycle enumeration.

use super::Graph;

/// All chordless cycles of length 3..=max_len, each in canonical rotation
/// (smallest vertex first, smaller of its two cycle-neighbors second), sorted.
pub fn induced_cycles(g: &Graph, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    enumerate_chordless(g, max_len, &mut |cyc| out.push(cyc.to_vec()));
    out.sort();
    out
}

/// Enumerates chordless cycles up to `max_len` (use `g.n()` for no cap),
/// invoking `emit` once per cycle in canonical rotation.
pub fn enumerate_chordless(g: &Graph, max_len: usize, emit: &mut dyn FnMut(&[usize])) {
    // Canonical form: the anchor a is the minimum vertex of the cycle; the
    // path grows from a and closes back; direction fixed by path[1] < last.
    let n = g.n();
    let mut path: Vec<usize> = Vec::new();
    let mut in_path = vec![false; n];
    for a in 0..n {
        path.push(a);
        in_path[a] = true;
        extend(g, a, max_len, &mut path, &mut in_path, emit);
        in_path[a] = false;
        path.pop();
    }
}

fn extend(
    g: &Graph,
    anchor: usize,
    max_len: usize,
    path: &mut Vec<usize>,
    in_path: &mut Vec<bool>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if path.len() == max_len {
        return;
    }
    let last = *path.last().unwrap();
    for &c in g.neighbors(last) {
        if c <= anchor || in_path[c] {
            continue;
        }
        // An interior vertex may touch only its path predecessor; anchor
        // adjacency is handled below as cycle closure.
        let chord = path
            .iter()
            .any(|&p| p != last && p != anchor && g.has_edge(c, p));
        if chord {
            continue;
        }
        // path.len() == 1 means c is the first step away from the anchor;
        // its anchor adjacency is the path edge, not a closure.
        let closes = path.len() >= 2 && g.has_edge(c, anchor);
        if closes {
            if path[1] < c {
                path.push(c);
                emit(path);
                path.pop();
            }
            // c is adjacent to the anchor, so any longer cycle through c
            // would have a chord; never use it as an interior vertex.
            continue;
        }
        path.push(c);
        in_path[c] = true;
        extend(g, anchor, max_len, path, in_path, emit);
        in_path[c] = false;
        path.pop();
    }
}

/// All chordless cycles through the angle (edges `v`-`a` and `v`-`b`),
/// with no length cap. Returned in canonical rotation, sorted.
pub fn induced_cycles_through_angle(g: &Graph, v: usize, a: usize, b: usize) -> Vec<Vec<usize>> {
    assert!(g.has_edge(v, a) && g.has_edge(v, b) && a != b);
    let mut out = Vec::new();
    // Grow an induced path from b towards a, avoiding all other neighbors of
    // v (they would chord to v). The cycle is a - v - b - ... - a.
    let n = g.n();
    let mut blocked = vec![false; n];
    for &w in g.neighbors(v) {
        blocked[w] = true;
    }
    blocked[v] = true;
    let mut path = vec![v, b];
    let mut in_path = vec![false; n];
    in_path[v] = true;
    in_path[b] = true;
    if g.has_edge(a, b) {
        out.push(canonical_rotation(&[v, b, a]));
    }
    grow_to_target(g, a, &blocked, &mut path, &mut in_path, &mut out);
    out.sort();
    out.dedup();
    out
}

fn grow_to_target(
    g: &Graph,
    target: usize,
    blocked: &[bool],
    path: &mut Vec<usize>,
    in_path: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().unwrap();
    for &c in g.neighbors(last) {
        if in_path[c] || c == target {
            continue;
        }
        if blocked[c] {
            continue;
        }
        // Chordless: c may touch only `last` among current path vertices,
        // plus optionally the target.
        if path.iter().any(|&p| p != last && g.has_edge(c, p)) {
            continue;
        }
        let closes = g.has_edge(c, target);
        path.push(c);
        in_path[c] = true;
        if closes {
            let mut cyc = path.clone();
            cyc.push(target);
            // Check target adjacency: target must touch only path[0]=v and c.
            let ok = path
                .iter()
                .all(|&p| p == path[0] || p == c || !g.has_edge(p, target));
            if ok {
                out.push(canonical_rotation(&cyc));
            }
            // May still extend past c if c-target edge would become a chord:
            // it would, so do not extend.
        } else {
            grow_to_target(g, target, blocked, path, in_path, out);
        }
        in_path[c] = false;
        path.pop();
    }
}

/// Rotates/reflects a cycle to canonical form: minimum vertex first, then
/// the smaller of its two neighbors.
pub fn canonical_rotation(cycle: &[usize]) -> Vec<usize> {
    let k = cycle.len();
    let (pos, _) = cycle
        .iter()
        .enumerate()
        .min_by_key(|&(_, v)| *v)
        .expect("nonempty cycle");
    let fwd = cycle[(pos + 1) % k];
    let bwd = cycle[(pos + k - 1) % k];
    let mut out = Vec::with_capacity(k);
    if fwd <= bwd {
        for i in 0..k {
            out.push(cycle[(pos + i) % k]);
        }
    } else {
        for i in 0..k {
            out.push(cycle[(pos + k - i) % k]);
        }
    }
    out
}

/// Audits that `cycle` is a chordless cycle of `g`.
pub fn is_chordless_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 3 {
        return false;
    }
    let set: std::collections::BTreeSet<usize> = cycle.iter().copied().collect();
    if set.len() != k {
        return false;
    }
    for i in 0..k {
        for j in (i + 1)..k {
            let adjacent_on_cycle = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(cycle[i], cycle[j]) != adjacent_on_cycle {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{circulant, named_graph, NamedFamily};

    /// Independent oracle: test every vertex subset of size 3..=max_len for
    /// inducing a cycle.
    fn induced_cycles_by_subsets(g: &Graph, max_len: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let n = g.n();
        let mut subset = Vec::new();
        fn rec(
            g: &Graph,
            start: usize,
            max_len: usize,
            subset: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if subset.len() >= 3 {
                if let Some(cycle) = subset_cycle_order(g, subset) {
                    out.push(cycle);
                }
            }
            if subset.len() == max_len {
                return;
            }
            for v in start..g.n() {
                subset.push(v);
                rec(g, v + 1, max_len, subset, out);
                subset.pop();
            }
        }
        // A subset induces a cycle iff every vertex has induced degree 2 and
        // the induced subgraph is connected (a single cycle, not a union).
        fn subset_cycle_order(g: &Graph, subset: &[usize]) -> Option<Vec<usize>> {
            let k = subset.len();
            for &u in subset {
                let d = subset.iter().filter(|&&v| g.has_edge(u, v)).count();
                if d != 2 {
                    return None;
                }
            }
            let mut order = vec![subset[0]];
            let mut prev = usize::MAX;
            while order.len() < k {
                let cur = *order.last().unwrap();
                let next = subset
                    .iter()
                    .copied()
                    .find(|&v| v != prev && v != cur && g.has_edge(cur, v))?;
                if order.contains(&next) {
                    return None; // closed early: a disjoint union of cycles
                }
                prev = cur;
                order.push(next);
            }
            g.has_edge(order[k - 1], order[0])
                .then(|| canonical_rotation(&order))
        }
        let _ = n;
        rec(g, 0, max_len, &mut subset, &mut out);
        out.sort();
        out
    }

    #[test]
    fn octahedron_has_eight_triangles_and_three_squares() {
        let oct = circulant(6, &[1, 2]).unwrap();
        let cycles = induced_cycles(&oct, 5);
        let triangles = cycles.iter().filter(|c| c.len() == 3).count();
        let squares = cycles.iter().filter(|c| c.len() == 4).count();
        assert_eq!(triangles, 8);
        assert_eq!(squares, 3);
        assert_eq!(cycles.len(), 11);
        assert_eq!(cycles, induced_cycles_by_subsets(&oct, 5));
    }

    #[test]
    fn hexagon_has_no_short_induced_cycles() {
        let c6 = named_graph(&NamedFamily::Cycle(6)).unwrap();
        assert!(induced_cycles(&c6, 5).is_empty());
        assert_eq!(induced_cycles(&c6, 6).len(), 1);
    }

    #[test]
    fn petersen_has_twelve_pentagons() {
        let p = named_graph(&NamedFamily::Petersen).unwrap();
        let cycles = induced_cycles(&p, 5);
        assert_eq!(cycles.len(), 12);
        assert!(cycles.iter().all(|c| c.len() == 5));
        assert_eq!(cycles, induced_cycles_by_subsets(&p, 5));
    }

    #[test]
    fn all_outputs_are_chordless() {
        for g in [
            circulant(8, &[1, 2, 4]).unwrap(),
            circulant(8, &[1, 3, 4]).unwrap(),
            named_graph(&NamedFamily::Petersen).unwrap(),
        ] {
            for c in induced_cycles(&g, 6) {
                assert!(is_chordless_cycle(&g, &c), "{c:?}");
            }
        }
    }

    #[test]
    fn through_angle_enumeration_is_complete() {
        let p = named_graph(&NamedFamily::Petersen).unwrap();
        // All 12 pentagons partition over angles; check one angle's cycles
        // against the subset oracle.
        let all = induced_cycles_by_subsets(&p, 10);
        let through = induced_cycles_through_angle(&p, 0, 1, 4);
        let expected: Vec<Vec<usize>> = all
            .iter()
            .filter(|c| {
                let k = c.len();
                (0..k).any(|i| {
                    c[i] == 0
                        && ((c[(i + 1) % k] == 1 && c[(i + k - 1) % k] == 4)
                            || (c[(i + 1) % k] == 4 && c[(i + k - 1) % k] == 1))
                })
            })
            .cloned()
            .collect();
        assert_eq!(through, expected);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arbitrary_graph(max_n: usize) -> impl Strategy<Value = Graph> {
            (3..=max_n).prop_flat_map(|n| {
                let pairs: Vec<(usize, usize)> = (0..n)
                    .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                    .collect();
                proptest::collection::vec(proptest::bool::ANY, pairs.len()).prop_map(
                    move |mask| {
                        let edges: Vec<(usize, usize)> = pairs
                            .iter()
                            .zip(&mask)
                            .filter(|(_, &keep)| keep)
                            .map(|(&e, _)| e)
                            .collect();
                        Graph::make(n, &edges).expect("simple")
                    },
                )
            })
        }

        proptest! {
            #[test]
            fn enumeration_matches_subset_oracle(g in arbitrary_graph(8)) {
                for max_len in [4usize, 6] {
                    prop_assert_eq!(
                        induced_cycles(&g, max_len),
                        induced_cycles_by_subsets(&g, max_len)
                    );
                }
            }

            #[test]
            fn planarity_verdicts_are_internally_consistent(g in arbitrary_graph(9)) {
                // Euler audits and certificate verification run inside; a
                // dense graph must come out non-planar.
                let result = crate::graph::is_planar(&g);
                if g.n() >= 3 && g.edge_count() > 3 * g.n() - 6 {
                    prop_assert!(!result.is_planar());
                }
                if let crate::graph::PlanarityResult::NonPlanar(w) = &result {
                    prop_assert!(crate::graph::verify_kuratowski(&g, w));
                }
            }
        }
    }
}
