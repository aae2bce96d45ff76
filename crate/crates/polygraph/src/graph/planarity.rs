//! Planarity testing with certificates: a combinatorial embedding (rotation
//! system plus face walks) for planar graphs, or a Kuratowski subdivision
//! for non-planar ones.
//!
//! The embedding is built by face-insertion (Demoucron-Malgrange-Pertuiset)
//! per biconnected block, then blocks are glued at cut vertices and faces are
//! re-traced from the merged rotation system.

use super::Graph;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PlanarEmbedding {
    /// Cyclic neighbor order around each vertex.
    pub rotations: Vec<Vec<usize>>,
    /// Face boundary walks (closed walks; bridges appear twice in a walk).
    pub faces: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub branch_vertices: Vec<usize>,
    /// Edge set of the subdivision.
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone)]
pub enum PlanarityResult {
    Planar(PlanarEmbedding),
    NonPlanar(KuratowskiWitness),
}

impl PlanarityResult {
    pub fn is_planar(&self) -> bool {
        matches!(self, PlanarityResult::Planar(_))
    }
}

/// Decides planarity; always produces a certificate either way.
pub fn is_planar(g: &Graph) -> PlanarityResult {
    match try_embed(g) {
        Some(embedding) => PlanarityResult::Planar(embedding),
        None => PlanarityResult::NonPlanar(extract_kuratowski(g)),
    }
}

/// Decision without certificates (used by the minimizer).
pub fn is_planar_decision(g: &Graph) -> bool {
    if g.n() >= 3 && g.edge_count() > 3 * g.n() - 6 {
        return false;
    }
    blocks(g)
        .into_iter()
        .all(|block| block_planar_faces(g, &block).is_some())
}

fn try_embed(g: &Graph) -> Option<PlanarEmbedding> {
    // Embed each biconnected block, then merge rotations at cut vertices.
    let mut rotations: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for block in blocks(g) {
        let faces = block_planar_faces(g, &block)?;
        let rot = rotations_from_faces(g.n(), &faces);
        for v in 0..g.n() {
            if !rot[v].is_empty() {
                rotations[v].extend_from_slice(&rot[v]);
            }
        }
    }
    let faces = trace_faces(g, &rotations);
    // Euler audit per connected component.
    for comp in g.components() {
        let vs: std::collections::BTreeSet<usize> = comp.iter().copied().collect();
        let v = comp.len();
        let e = comp.iter().map(|&u| g.degree(u)).sum::<usize>() / 2;
        let f = faces
            .iter()
            .filter(|w| w.first().map(|x| vs.contains(x)).unwrap_or(false))
            .count();
        assert_eq!(
            v as i64 - e as i64 + f as i64,
            2,
            "Euler audit failed on component {comp:?}"
        );
    }
    Some(PlanarEmbedding { rotations, faces })
}

/// Biconnected blocks as edge lists (single edges for bridges); isolated
/// vertices yield no block.
fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();

    // Iterative DFS to keep recursion depth bounded.
    for start in 0..n {
        if disc[start] != usize::MAX {
            continue;
        }
        let mut call: Vec<(usize, usize, usize)> = vec![(start, usize::MAX, 0)];
        disc[start] = timer;
        low[start] = timer;
        timer += 1;
        while let Some(&mut (u, parent, ref mut idx)) = call.last_mut() {
            if *idx < g.neighbors(u).len() {
                let v = g.neighbors(u)[*idx];
                *idx += 1;
                if v == parent {
                    continue;
                }
                if disc[v] == usize::MAX {
                    stack.push((u, v));
                    disc[v] = timer;
                    low[v] = timer;
                    timer += 1;
                    call.push((v, u, 0));
                } else if disc[v] < disc[u] {
                    stack.push((u, v));
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                call.pop();
                if let Some(&mut (p, _, _)) = call.last_mut() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        // p is a cut vertex (or root); pop the block.
                        let mut block = Vec::new();
                        while let Some(&(a, b)) = stack.last() {
                            if disc[a] >= disc[u] || (a == p && b == u) {
                                block.push((a, b));
                                stack.pop();
                                if a == p && b == u {
                                    break;
                                }
                            } else {
                                break;
                            }
                        }
                        if !block.is_empty() {
                            out.push(block);
                        }
                    }
                }
            }
        }
    }
    out
}

/// DMP face insertion on one biconnected block. Returns the face walks
/// (directed, each directed edge used exactly once) or None if non-planar.
fn block_planar_faces(g: &Graph, block: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    if block.len() == 1 {
        let (u, v) = block[0];
        return Some(vec![vec![u, v]]);
    }
    // Vertices and adjacency restricted to the block.
    let mut verts: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
    verts.sort_unstable();
    verts.dedup();
    let mut badj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(u, v) in block {
        badj.entry(u).or_default().push(v);
        badj.entry(v).or_default().push(u);
    }
    for ns in badj.values_mut() {
        ns.sort_unstable();
    }
    let m = block.len();
    let nv = verts.len();
    if m > 3 * nv - 6 && nv >= 3 {
        return None;
    }

    // Initial cycle by walking the block.
    let cycle = find_cycle(&badj)?;
    let mut in_h = vec![false; g.n()];
    let mut h_edges: std::collections::BTreeSet<(usize, usize)> = std::collections::BTreeSet::new();
    for &v in &cycle {
        in_h[v] = true;
    }
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        h_edges.insert(ord(a, b));
    }
    let rev: Vec<usize> = cycle.iter().rev().copied().collect();
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), rev];

    loop {
        if h_edges.len() == m {
            return Some(faces);
        }
        // Fragments: chords and bridges of the block w.r.t. H.
        let mut fragments: Vec<(Vec<usize>, Vec<usize>)> = Vec::new(); // (attachments, interior verts)
        for &(u, v) in block {
            if in_h[u] && in_h[v] && !h_edges.contains(&ord(u, v)) {
                fragments.push((vec![u.min(v), u.max(v)], Vec::new()));
            }
        }
        let mut seen = vec![false; g.n()];
        for &s in &verts {
            if in_h[s] || seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            let mut attach = std::collections::BTreeSet::new();
            while let Some(u) = stack.pop() {
                for &w in &badj[&u] {
                    if in_h[w] {
                        attach.insert(w);
                    } else if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            fragments.push((attach.into_iter().collect(), comp));
        }

        // Admissible faces per fragment.
        let mut chosen: Option<(usize, usize)> = None; // (fragment idx, face idx)
        let mut best_count = usize::MAX;
        for (fi, (attach, _)) in fragments.iter().enumerate() {
            let mut count = 0;
            let mut first_face = usize::MAX;
            for (i, f) in faces.iter().enumerate() {
                if attach.iter().all(|a| f.contains(a)) {
                    count += 1;
                    if first_face == usize::MAX {
                        first_face = i;
                    }
                }
            }
            if count == 0 {
                return None;
            }
            if count < best_count {
                best_count = count;
                chosen = Some((fi, first_face));
                if count == 1 {
                    break;
                }
            }
        }
        let (fi, face_idx) = chosen.expect("fragments nonempty while edges remain");
        let (attach, interior) = &fragments[fi];

        // Path between two attachments through the fragment.
        let path: Vec<usize> = if interior.is_empty() {
            vec![attach[0], attach[1]]
        } else {
            fragment_path(&badj, attach, interior)
        };

        for &v in &path {
            in_h[v] = true;
        }
        for w in path.windows(2) {
            h_edges.insert(ord(w[0], w[1]));
        }

        // Split the chosen face along the path.
        let face = faces.swap_remove(face_idx);
        let (u, v) = (path[0], *path.last().unwrap());
        let iu = face.iter().position(|&x| x == u).expect("u on face");
        let iv = face.iter().position(|&x| x == v).expect("v on face");
        let len = face.len();
        // Arc from u forward to v, and from v forward to u.
        let mut arc_uv = Vec::new();
        let mut i = iu;
        loop {
            arc_uv.push(face[i]);
            if i == iv {
                break;
            }
            i = (i + 1) % len;
        }
        let mut arc_vu = Vec::new();
        let mut i = iv;
        loop {
            arc_vu.push(face[i]);
            if i == iu {
                break;
            }
            i = (i + 1) % len;
        }
        let inner: Vec<usize> = path[1..path.len() - 1].to_vec();
        // New face A: u -> ... -> v (old arc), then path reversed v -> u.
        let mut fa = arc_uv.clone();
        fa.extend(inner.iter().rev());
        // New face B: v -> ... -> u (old arc), then path forward u -> v.
        let mut fb = arc_vu.clone();
        fb.extend(inner.iter());
        faces.push(fa);
        faces.push(fb);
    }
}

fn ord(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn find_cycle(badj: &BTreeMap<usize, Vec<usize>>) -> Option<Vec<usize>> {
    let &start = badj.keys().next()?;
    let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
    let mut order = vec![start];
    parent.insert(start, usize::MAX);
    let mut idx = 0;
    while idx < order.len() {
        let u = order[idx];
        idx += 1;
        for &v in &badj[&u] {
            if let std::collections::btree_map::Entry::Vacant(e) = parent.entry(v) {
                e.insert(u);
                order.push(v);
            } else if parent[&u] != v {
                // Cycle through the tree paths of u and v.
                let path_to_root = |mut x: usize| {
                    let mut p = vec![x];
                    while parent[&x] != usize::MAX {
                        x = parent[&x];
                        p.push(x);
                    }
                    p
                };
                let pu = path_to_root(u);
                let pv = path_to_root(v);
                let su: std::collections::BTreeSet<usize> = pu.iter().copied().collect();
                let meet = *pv.iter().find(|x| su.contains(x)).expect("common root");
                let mut cyc: Vec<usize> = pu.iter().take_while(|&&x| x != meet).copied().collect();
                cyc.push(meet);
                let tail: Vec<usize> = pv.iter().take_while(|&&x| x != meet).copied().collect();
                cyc.extend(tail.iter().rev());
                if cyc.len() >= 3 {
                    return Some(cyc);
                }
            }
        }
    }
    None
}

/// BFS path between two distinct attachments whose interior stays inside the
/// fragment.
fn fragment_path(
    badj: &BTreeMap<usize, Vec<usize>>,
    attach: &[usize],
    interior: &[usize],
) -> Vec<usize> {
    let inside: std::collections::BTreeSet<usize> = interior.iter().copied().collect();
    let (a, b) = (attach[0], attach[1]);
    let mut prev: BTreeMap<usize, usize> = BTreeMap::new();
    let mut queue = std::collections::VecDeque::new();
    // Start from a, first hop must enter the fragment interior.
    for &w in &badj[&a] {
        if inside.contains(&w) && !prev.contains_key(&w) {
            prev.insert(w, a);
            queue.push_back(w);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &w in &badj[&u] {
            if w == b {
                let mut path = vec![b, u];
                let mut x = u;
                while prev[&x] != a {
                    x = prev[&x];
                    path.push(x);
                }
                path.push(a);
                path.reverse();
                return path;
            }
            if inside.contains(&w) && !prev.contains_key(&w) {
                prev.insert(w, u);
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragment connects its attachments")
}

/// Recovers a rotation system from directed face walks: the successor of
/// directed edge (u,v) in its face defines the next edge counterclockwise.
fn rotations_from_faces(n: usize, faces: &[Vec<usize>]) -> Vec<Vec<usize>> {
    // next[(v, u)] = w  when face contains ... u, v, w ...
    let mut next: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for f in faces {
        let k = f.len();
        for i in 0..k {
            let u = f[i];
            let v = f[(i + 1) % k];
            let w = f[(i + 2) % k];
            next.insert((v, u), w);
        }
    }
    let mut rot = vec![Vec::new(); n];
    let mut at: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(v, u) in next.keys() {
        at.entry(v).or_default().push(u);
    }
    for (v, nbrs) in at {
        let mut order = Vec::with_capacity(nbrs.len());
        let mut seen = std::collections::BTreeSet::new();
        let mut cur = nbrs[0];
        while seen.insert(cur) {
            order.push(cur);
            cur = next[&(v, cur)];
        }
        debug_assert_eq!(order.len(), nbrs.len(), "rotation at {v} is one cycle");
        rot[v] = order;
    }
    rot
}

/// Traces face walks from a rotation system (also yields trivial faces for
/// isolated vertices so that the per-component Euler audit works uniformly).
fn trace_faces(g: &Graph, rotations: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut nxt_in_rot: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for v in 0..n {
        let k = rotations[v].len();
        for i in 0..k {
            nxt_in_rot.insert((v, rotations[v][i]), rotations[v][(i + 1) % k]);
        }
    }
    let mut used: std::collections::BTreeSet<(usize, usize)> = std::collections::BTreeSet::new();
    let mut faces = Vec::new();
    for v in 0..n {
        if g.degree(v) == 0 {
            faces.push(vec![v]);
            continue;
        }
        for &u in &rotations[v] {
            if used.contains(&(v, u)) {
                continue;
            }
            // Walk the face containing directed edge (v, u).
            let mut walk = Vec::new();
            let (mut a, mut b) = (v, u);
            loop {
                if !used.insert((a, b)) {
                    break;
                }
                walk.push(a);
                let c = nxt_in_rot[&(b, a)];
                a = b;
                b = c;
                if a == v && b == u {
                    break;
                }
            }
            faces.push(walk);
        }
    }
    faces
}

/// Edge-deletion minimization: repeatedly drop edges keeping non-planarity.
/// The edge-minimal non-planar subgraph is a subdivision of K5 or K3,3.
fn extract_kuratowski(g: &Graph) -> KuratowskiWitness {
    let mut edges = g.edges();
    assert!(!is_planar_decision_edges(g.n(), &edges));
    let mut i = 0;
    while i < edges.len() {
        let mut trial = edges.clone();
        trial.remove(i);
        if !is_planar_decision_edges(g.n(), &trial) {
            edges = trial;
        } else {
            i += 1;
        }
    }
    // Classify: branch vertices are those of degree >= 3.
    let sub = Graph::make(g.n(), &edges).expect("subgraph is simple");
    let branch: Vec<usize> = (0..g.n()).filter(|&v| sub.degree(v) >= 3).collect();
    let kind = match branch.len() {
        5 => KuratowskiKind::K5,
        6 => KuratowskiKind::K33,
        k => panic!("minimal non-planar subgraph with {k} branch vertices"),
    };
    let witness = KuratowskiWitness {
        kind,
        branch_vertices: branch,
        edges,
    };
    debug_assert!(verify_kuratowski(g, &witness));
    witness
}

fn is_planar_decision_edges(n: usize, edges: &[(usize, usize)]) -> bool {
    is_planar_decision(&Graph::make(n, edges).expect("edge list is simple"))
}

/// Audits that the witness is a genuine subdivision of K5 or K3,3 inside `g`.
pub fn verify_kuratowski(g: &Graph, w: &KuratowskiWitness) -> bool {
    for &(u, v) in &w.edges {
        if !g.has_edge(u, v) {
            return false;
        }
    }
    let sub = match Graph::make(g.n(), &w.edges) {
        Ok(s) => s,
        Err(_) => return false,
    };
    // Every non-branch vertex of the subdivision has degree 0 or 2.
    let branch: std::collections::BTreeSet<usize> = w.branch_vertices.iter().copied().collect();
    for v in 0..sub.n() {
        let d = sub.degree(v);
        if branch.contains(&v) {
            let expect = match w.kind {
                KuratowskiKind::K5 => 4,
                KuratowskiKind::K33 => 3,
            };
            if d != expect {
                return false;
            }
        } else if d != 0 && d != 2 {
            return false;
        }
    }
    // Contract degree-2 chains to recover the branch adjacency.
    let mut pairs: std::collections::BTreeSet<(usize, usize)> = std::collections::BTreeSet::new();
    for &b in &branch {
        for &start in sub.neighbors(b) {
            let (mut prev, mut cur) = (b, start);
            while !branch.contains(&cur) {
                let next = sub.neighbors(cur).iter().copied().find(|&x| x != prev);
                match next {
                    Some(nx) => {
                        prev = cur;
                        cur = nx;
                    }
                    None => return false,
                }
            }
            if cur == b {
                return false;
            }
            pairs.insert(ord(b, cur));
        }
    }
    match w.kind {
        KuratowskiKind::K5 => pairs.len() == 10,
        KuratowskiKind::K33 => {
            if pairs.len() != 9 {
                return false;
            }
            // Branch adjacency must be bipartite 3+3 with all cross pairs.
            let bg_edges: Vec<(usize, usize)> = pairs.iter().copied().collect();
            let idx: BTreeMap<usize, usize> =
                branch.iter().enumerate().map(|(i, &b)| (b, i)).collect();
            let e2: Vec<(usize, usize)> =
                bg_edges.iter().map(|&(a, b)| (idx[&a], idx[&b])).collect();
            let bg = Graph::make(6, &e2).expect("branch graph");
            bg.complete_bipartite_classes()
                .map(|(a, b)| a.len() == 3 && b.len() == 3)
                .unwrap_or(false)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{circulant, named_graph, NamedFamily};

    #[test]
    fn k4_is_planar_with_euler_faces() {
        let k4 = named_graph(&NamedFamily::Complete(4)).unwrap();
        match is_planar(&k4) {
            PlanarityResult::Planar(emb) => {
                assert_eq!(emb.faces.len(), 4); // 4 - 6 + F = 2
            }
            _ => panic!("K4 must be planar"),
        }
    }

    #[test]
    fn petersen_gets_k33_certificate() {
        let p = named_graph(&NamedFamily::Petersen).unwrap();
        match is_planar(&p) {
            PlanarityResult::NonPlanar(w) => {
                // Petersen has max degree 3: no K5 subdivision fits.
                assert_eq!(w.kind, KuratowskiKind::K33);
                assert!(verify_kuratowski(&p, &w));
            }
            _ => panic!("Petersen graph is not planar"),
        }
    }

    #[test]
    fn k5_gets_k5_certificate() {
        let k5 = named_graph(&NamedFamily::Complete(5)).unwrap();
        match is_planar(&k5) {
            PlanarityResult::NonPlanar(w) => {
                assert_eq!(w.kind, KuratowskiKind::K5);
                assert!(verify_kuratowski(&k5, &w));
            }
            _ => panic!("K5 is not planar"),
        }
    }

    #[test]
    fn moebius_ladder_on_eight_is_nonplanar() {
        let g = circulant(8, &[1, 4]).unwrap();
        assert!(!is_planar(&g).is_planar());
    }

    #[test]
    fn planar_families_embed_with_euler() {
        for g in [
            named_graph(&NamedFamily::Cycle(7)).unwrap(),
            circulant(6, &[1, 2]).unwrap(),  // octahedron
            circulant(10, &[2, 5]).unwrap(), // pentagonal prism
            named_graph(&NamedFamily::Hypercube(3)).unwrap(),
            named_graph(&NamedFamily::Path(4)).unwrap(), // tree: one face
        ] {
            match is_planar(&g) {
                PlanarityResult::Planar(emb) => {
                    let f = emb.faces.len();
                    let expect = 2 + g.edge_count() - g.n();
                    assert_eq!(f, expect, "{:?}", g.label());
                }
                _ => panic!("expected planar: {:?}", g.label()),
            }
        }
    }

    #[test]
    fn disconnected_and_cut_vertex_graphs() {
        // Two triangles sharing a vertex.
        let g = Graph::make(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        match is_planar(&g) {
            PlanarityResult::Planar(emb) => assert_eq!(emb.faces.len(), 3),
            _ => panic!("planar"),
        }
        // Disjoint union: K4 + C3.
        let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        edges.extend([(4, 5), (5, 6), (6, 4)]);
        let g = Graph::make(7, &edges).unwrap();
        assert!(is_planar(&g).is_planar());
    }
}
