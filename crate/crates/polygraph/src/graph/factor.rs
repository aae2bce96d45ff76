//! Cartesian prime factorization via the square-property edge relation.
//!
//! Two adjacent edges are forced into the same factor class unless they span
//! exactly one chordless square; opposite edges of every chordless square are
//! forced into the same class. The transitive closure yields the candidate
//! classes, coordinates come from class components, and a re-multiplication
//! audit guards correctness (a failed audit means we treat the graph as
//! prime, which is always sound for the exclusion rules built on top).

use super::{cartesian_product, Graph};
use std::collections::BTreeMap;

#[derive(Debug, Clone)]
pub struct Factorization {
    /// Prime factors, each with at least one edge.
    pub factors: Vec<Graph>,
    /// For each vertex of the input, its coordinate tuple (one entry per
    /// factor, an index into that factor's vertex set).
    pub coordinates: Vec<Vec<usize>>,
}

/// Attempts a Cartesian prime factorization of a connected graph. Returns
/// None if the graph is prime or no product structure passes the audit.
///
/// The base relation only ever unites edges that belong to the same factor
/// in any genuine product (triangles, adjacent pairs without a unique
/// square, square-opposite pairs), so the true factor classes are unions of
/// the base classes. Squares inside a fiber can still split a factor, so
/// partitions of the base classes are tried from finest to coarsest until
/// the re-multiplication audit passes.
pub fn prime_factorization(g: &Graph) -> Option<Factorization> {
    let base = base_edge_classes(g)?;
    if base.len() < 2 {
        return None;
    }
    let k = base.len();
    let mut partitions = set_partitions(k);
    partitions.retain(|p| part_count(p) >= 2);
    partitions.sort_by_key(|p| std::cmp::Reverse(part_count(p)));
    for p in partitions {
        let parts = part_count(&p);
        let mut merged: Vec<Vec<usize>> = vec![Vec::new(); parts];
        for (ci, &pi) in p.iter().enumerate() {
            merged[pi].extend_from_slice(&base[ci]);
        }
        for m in merged.iter_mut() {
            m.sort_unstable();
        }
        if let Some(f) = coordinatize(g, &merged) {
            return Some(f);
        }
    }
    None
}

fn part_count(p: &[usize]) -> usize {
    p.iter().copied().max().map_or(0, |m| m + 1)
}

/// All set partitions of {0..k-1} as restricted growth strings.
fn set_partitions(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; k];
    fn rec(i: usize, k: usize, max_used: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == k {
            out.push(cur.clone());
            return;
        }
        for part in 0..=max_used + 1 {
            cur[i] = part;
            rec(i + 1, k, max_used.max(part), cur, out);
        }
    }
    if k == 0 {
        return out;
    }
    cur[0] = 0;
    rec(1, k, 0, &mut cur, &mut out);
    out
}

/// Base classes of the square-property relation, as sorted edge-index lists.
fn base_edge_classes(g: &Graph) -> Option<Vec<Vec<usize>>> {
    if g.n() < 4 || !g.is_connected() {
        return None;
    }
    let edges = g.edges();
    let eidx: BTreeMap<(usize, usize), usize> =
        edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let m = edges.len();
    let mut dsu = Dsu::new(m);

    let key = |a: usize, b: usize| (a.min(b), a.max(b));

    // Adjacent edge pairs.
    for u in 0..g.n() {
        let ns = g.neighbors(u);
        for (i, &v) in ns.iter().enumerate() {
            for &w in ns.iter().skip(i + 1) {
                let e = eidx[&key(u, v)];
                let f = eidx[&key(u, w)];
                if g.has_edge(v, w) {
                    // Triangles live inside a single factor.
                    dsu.union(e, f);
                    continue;
                }
                // Count common neighbors x of v and w (other than u) that
                // complete a chordless square u-v-x-w.
                let mut completions = 0;
                for &x in g.neighbors(v) {
                    if x != u && g.has_edge(x, w) && !g.has_edge(x, u) {
                        completions += 1;
                    }
                }
                if completions != 1 {
                    dsu.union(e, f);
                }
            }
        }
    }
    // Opposite edges of chordless squares.
    for &(u, v) in &edges {
        for &x in g.neighbors(v) {
            if x == u {
                continue;
            }
            for &w in g.neighbors(x) {
                if w == v || w == u {
                    continue;
                }
                if g.has_edge(w, u) && !g.has_edge(u, x) && !g.has_edge(v, w) {
                    // square u-v-x-w
                    dsu.union(eidx[&key(u, v)], eidx[&key(w, x)]);
                    dsu.union(eidx[&key(v, x)], eidx[&key(u, w)]);
                }
            }
        }
    }

    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for e in 0..m {
        classes.entry(dsu.find(e)).or_default().push(e);
    }
    Some(classes.into_values().collect())
}

/// Builds a factorization from an edge-class partition, validating the
/// product structure exactly; None on any inconsistency.
fn coordinatize(g: &Graph, class_list: &[Vec<usize>]) -> Option<Factorization> {
    let edges = g.edges();
    let k = class_list.len();

    // Factor i is the class-i fiber through vertex 0. The i-th coordinate of
    // v is the fiber vertex lying in v's component of the subgraph made of
    // all *other* classes (projection along the other factors).
    let mut coordinates = vec![vec![0usize; k]; g.n()];
    let mut factors = Vec::with_capacity(k);
    for (i, class) in class_list.iter().enumerate() {
        let class_edges: Vec<(usize, usize)> = class.iter().map(|&e| edges[e]).collect();
        let sub = Graph::make(g.n(), &class_edges).expect("subgraph");
        let comps = sub.components();
        let fiber: Vec<usize> = comps
            .iter()
            .find(|c| c.contains(&0))
            .expect("vertex 0 in some component")
            .clone();
        if comps.iter().any(|c| c.len() != fiber.len()) {
            return None;
        }
        let (fg, fiber_map) = sub.induced(&fiber);

        let other_edges: Vec<(usize, usize)> = class_list
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .flat_map(|(_, cl)| cl.iter().map(|&e| edges[e]))
            .collect();
        let other = Graph::make(g.n(), &other_edges).expect("subgraph");
        let other_comps = other.components();
        let mut comp_of = vec![usize::MAX; g.n()];
        for (ci, comp) in other_comps.iter().enumerate() {
            for &v in comp {
                comp_of[v] = ci;
            }
        }
        // Each projection component must hit the canonical fiber exactly once.
        let mut comp_to_pos = vec![usize::MAX; other_comps.len()];
        for (pos, &fv) in fiber_map.iter().enumerate() {
            if comp_to_pos[comp_of[fv]] != usize::MAX {
                return None;
            }
            comp_to_pos[comp_of[fv]] = pos;
        }
        for v in 0..g.n() {
            let c = comp_to_pos[comp_of[v]];
            if c == usize::MAX {
                return None;
            }
            coordinates[v][i] = c;
        }
        factors.push(fg);
    }

    // Audit: the coordinate map must be a bijection onto the product of the
    // factor vertex sets, and adjacency must match the product rule.
    let mut seen = std::collections::BTreeSet::new();
    for v in 0..g.n() {
        if !seen.insert(coordinates[v].clone()) {
            return None;
        }
    }
    if g.n() != factors.iter().map(|f| f.n()).product::<usize>() {
        return None;
    }
    // Build the product of the factors and compare via the coordinate map.
    let mut prod = factors[0].clone();
    for f in &factors[1..] {
        prod = cartesian_product(&prod, f);
    }
    // Index of a coordinate tuple in the product's mixed-radix order.
    let radix: Vec<usize> = factors.iter().map(|f| f.n()).collect();
    let tuple_index = |t: &[usize]| -> usize {
        let mut idx = 0;
        for (i, &c) in t.iter().enumerate() {
            idx = idx * radix[i] + c;
        }
        idx
    };
    for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            let pu = tuple_index(&coordinates[u]);
            let pv = tuple_index(&coordinates[v]);
            if g.has_edge(u, v) != prod.has_edge(pu, pv) {
                return None;
            }
        }
    }
    Some(Factorization {
        factors,
        coordinates,
    })
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu {
            parent: (0..n).collect(),
        }
    }
    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let r = self.find(self.parent[x]);
            self.parent[x] = r;
        }
        self.parent[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{are_isomorphic, named_graph, NamedFamily};

    #[test]
    fn factors_a_prism() {
        let c3 = named_graph(&NamedFamily::Cycle(3)).unwrap();
        let k2 = named_graph(&NamedFamily::Complete(2)).unwrap();
        let prism = cartesian_product(&c3, &k2);
        let f = prime_factorization(&prism).expect("factorable");
        assert_eq!(f.factors.len(), 2);
        let sizes: Vec<usize> = f.factors.iter().map(|g| g.n()).collect();
        assert!(sizes == vec![3, 2] || sizes == vec![2, 3]);
    }

    #[test]
    fn factors_hypercube_into_segments() {
        let q3 = named_graph(&NamedFamily::Hypercube(3)).unwrap();
        let f = prime_factorization(&q3).expect("factorable");
        assert_eq!(f.factors.len(), 3);
        assert!(f.factors.iter().all(|g| g.n() == 2));
    }

    #[test]
    fn petersen_square_factors_into_two_petersens() {
        let p = named_graph(&NamedFamily::Petersen).unwrap();
        let pp = cartesian_product(&p, &p);
        let f = prime_factorization(&pp).expect("factorable");
        assert_eq!(f.factors.len(), 2);
        for fac in &f.factors {
            assert!(are_isomorphic(fac, &p).is_some());
        }
    }

    #[test]
    fn primes_stay_prime() {
        let p = named_graph(&NamedFamily::Petersen).unwrap();
        assert!(prime_factorization(&p).is_none());
        let k33 = named_graph(&NamedFamily::CompleteBipartite(3, 3)).unwrap();
        assert!(prime_factorization(&k33).is_none());
    }

    #[test]
    fn segment_times_k33() {
        let k2 = named_graph(&NamedFamily::Complete(2)).unwrap();
        let k33 = named_graph(&NamedFamily::CompleteBipartite(3, 3)).unwrap();
        let g = cartesian_product(&k2, &k33);
        let f = prime_factorization(&g).expect("factorable");
        assert_eq!(f.factors.len(), 2);
        let mut sizes: Vec<usize> = f.factors.iter().map(|g| g.n()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 6]);
    }
}
