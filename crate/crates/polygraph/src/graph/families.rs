//! Generators for the graph families used throughout the crate.

use super::{Graph, GraphError};
use num_integer::Integer;

/// Circulant graph on `Z_n` with connection set `steps ⊆ 1..=n/2`.
pub fn circulant(n: usize, steps: &[usize]) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::TooSmall(3, n));
    }
    if steps.is_empty() {
        return Err(GraphError::BadFamilyParams(
            "circulant".into(),
            "empty step set".into(),
        ));
    }
    for &s in steps {
        if s == 0 || s > n / 2 {
            return Err(GraphError::BadCirculantStep(s, n / 2));
        }
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for &s in steps {
            edges.push((i, (i + s) % n));
        }
    }
    let mut sorted: Vec<usize> = steps.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let label = format!(
        "circulant({n};{})",
        sorted
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(",")
    );
    Ok(Graph::new(n, &edges, Some(label))?.0)
}

/// Connectivity criterion for circulants: gcd of the steps and n is 1.
pub fn circulant_is_connected(n: usize, steps: &[usize]) -> bool {
    let mut g = n;
    for &s in steps {
        g = g.gcd(&s);
    }
    g == 1
}

/// Cartesian product `G × H`: vertex `(a, b)` is index `a·|V(H)| + b`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let (ng, nh) = (g.n(), h.n());
    let mut edges = Vec::new();
    for a in 0..ng {
        for b in 0..nh {
            let base = a * nh + b;
            for &b2 in h.neighbors(b) {
                if b2 > b {
                    edges.push((base, a * nh + b2));
                }
            }
            for &a2 in g.neighbors(a) {
                if a2 > a {
                    edges.push((base, a2 * nh + b));
                }
            }
        }
    }
    let label = format!("{}×{}", g.label().unwrap_or("G"), h.label().unwrap_or("H"));
    Graph::new(ng * nh, &edges, Some(label))
        .expect("product of simple graphs is simple")
        .0
}

/// Star-clique operation: replace `v` (degree d) by a d-clique, each clique
/// vertex inheriting exactly one former edge of `v` in ascending neighbor
/// order. Clique vertices are `v` itself plus fresh indices `n..n+d-1`.
pub fn star_clique(g: &Graph, v: usize) -> Result<Graph, GraphError> {
    if v >= g.n() {
        return Err(GraphError::NoSuchVertex(v, g.n()));
    }
    let d = g.degree(v);
    if d == 0 {
        return Err(GraphError::IsolatedPivot(v));
    }
    let nbrs = g.neighbors(v).to_vec();
    let n_new = g.n() + d - 1;
    let clique: Vec<usize> = std::iter::once(v).chain(g.n()..g.n() + d - 1).collect();
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(a, b)| a != v && b != v)
        .collect();
    for (i, &c) in clique.iter().enumerate() {
        edges.push((c, nbrs[i]));
        for &c2 in clique.iter().skip(i + 1) {
            edges.push((c, c2));
        }
    }
    let label = format!("σ_{}({})", v, g.label().unwrap_or("G"));
    Ok(Graph::new(n_new, &edges, Some(label))?.0)
}

/// Named graph families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedFamily {
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// Cycle on n vertices.
    Cycle(usize),
    /// Path with p edges (p+1 vertices).
    Path(usize),
    Petersen,
    /// Domino `D_p`: path with p edges times a segment.
    Domino(usize),
    /// The two-ring 4-regular family on `Z_{2n+3} × Z_2`.
    MarcAntonio(usize),
    /// Graph of the cyclic d-polytope on n vertices with one vertex stacked
    /// beyond every facet.
    KleeStacked(usize, usize),
    /// Hypercube graph Q_d.
    Hypercube(usize),
    Octahedron,
}

pub fn named_graph(family: &NamedFamily) -> Result<Graph, GraphError> {
    match *family {
        NamedFamily::Complete(n) => {
            if n == 0 {
                return Err(GraphError::BadFamilyParams("complete".into(), "n=0".into()));
            }
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            Ok(Graph::new(n, &edges, Some(format!("K{n}")))?.0)
        }
        NamedFamily::CompleteBipartite(m, n) => {
            if m == 0 || n == 0 {
                return Err(GraphError::BadFamilyParams(
                    "complete_bipartite".into(),
                    "empty class".into(),
                ));
            }
            let edges: Vec<(usize, usize)> = (0..m)
                .flat_map(|u| (0..n).map(move |v| (u, m + v)))
                .collect();
            Ok(Graph::new(m + n, &edges, Some(format!("K{m},{n}")))?.0)
        }
        NamedFamily::Cycle(n) => {
            if n < 3 {
                return Err(GraphError::BadFamilyParams(
                    "cycle".into(),
                    format!("n={n}"),
                ));
            }
            let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Ok(Graph::new(n, &edges, Some(format!("C{n}")))?.0)
        }
        NamedFamily::Path(p) => {
            let edges: Vec<(usize, usize)> = (0..p).map(|i| (i, i + 1)).collect();
            Ok(Graph::new(p + 1, &edges, Some(format!("P{p}")))?.0)
        }
        NamedFamily::Petersen => {
            let mut edges = Vec::new();
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((5 + i, 5 + (i + 2) % 5));
                edges.push((i, 5 + i));
            }
            Ok(Graph::new(10, &edges, Some("petersen".into()))?.0)
        }
        NamedFamily::Domino(p) => {
            if p < 1 {
                return Err(GraphError::BadFamilyParams("domino".into(), "p=0".into()));
            }
            let path = named_graph(&NamedFamily::Path(p))?;
            let k2 = named_graph(&NamedFamily::Complete(2))?;
            Ok(cartesian_product(&path, &k2).with_label(format!("domino({p})")))
        }
        NamedFamily::MarcAntonio(n) => marc_antonio(n),
        NamedFamily::KleeStacked(d, n) => {
            let p = crate::geometry::stacked_cyclic(d, n)
                .map_err(|e| GraphError::BadFamilyParams("klee_stacked".into(), e.to_string()))?;
            Ok(crate::geometry::skeleton_graph(&p).with_label(format!("klee_stacked({d},{n})")))
        }
        NamedFamily::Hypercube(d) => {
            let mut g = named_graph(&NamedFamily::Complete(2))?;
            for _ in 1..d {
                let k2 = named_graph(&NamedFamily::Complete(2))?;
                g = cartesian_product(&g, &k2);
            }
            Ok(g.with_label(format!("Q{d}")))
        }
        NamedFamily::Octahedron => Ok(circulant(6, &[1, 2])?.with_label("octahedron")),
    }
}

/// `Z_{2n+3} × Z_2` family: vertex (x, y) is adjacent to (x+y+1, y),
/// (x+y, y+1), (x−y−1, y) and (x+y−1, y+1). Index of (x, y) is `2x + y`.
/// The generator validates 4-regularity and vertex count and aborts with a
/// diagnostic if the rule yields anything else.
fn marc_antonio(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::BadFamilyParams(
            "marc_antonio".into(),
            "n must be >= 1".into(),
        ));
    }
    let m = 2 * n + 3;
    let mi = m as i64;
    let idx =
        |x: i64, y: i64| -> usize { 2 * (x.rem_euclid(mi) as usize) + (y.rem_euclid(2) as usize) };
    let mut edges = Vec::new();
    for x in 0..mi {
        for y in 0..2i64 {
            let a = idx(x, y);
            edges.push((a, idx(x + y + 1, y)));
            edges.push((a, idx(x + y, y + 1)));
            edges.push((a, idx(x - y - 1, y)));
            edges.push((a, idx(x + y - 1, y + 1)));
        }
    }
    let g = Graph::new(2 * m, &edges, Some(format!("marc_antonio({n})")))?.0;
    if g.n() != 2 * m {
        return Err(GraphError::FamilyValidation(
            "marc_antonio".into(),
            format!("expected {} vertices, got {}", 2 * m, g.n()),
        ));
    }
    if g.regular_degree() != Some(4) {
        return Err(GraphError::FamilyValidation(
            "marc_antonio".into(),
            format!("adjacency rule not 4-regular for n={n}"),
        ));
    }
    Ok(g)
}
