//! Command-line surface: graph generation, obstruction checks, range
//! reports, witness constructions, verification, transcript replay, and the
//! circulant range table.
//!
//! All output is byte-deterministic for fixed inputs and budgets; tie-breaks
//! are lexicographic everywhere. `POLYGRAPH_THREADS` caps the parallelism of
//! the table command (default 1; results are assembled in canonical order
//! either way).

use crate::geometry::{
    self, convex_hull_facets, face_lattice, named_polytope, skeleton_graph, verify_graph,
    GraphMatch, Lifting, NamedPolytope, PointConfig, Polytope,
};
use crate::graph::{
    self, cartesian_product, circulant, named_graph, star_clique, Graph, GraphJson, NamedFamily,
};
use crate::obstructions::{
    balinski_check, cyclic_facet_count, polytopality_range, psp_check, separation_check,
    steinitz_decide, whitney_2faces, BudgetConfig, ObstructionReport, PspOutcome, SteinitzOutcome,
};
use crate::simple_check::{facet_complex_search, simple_obstructions, SearchMode, SearchOutcome};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::io::Write as _;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(
    name = "polygraph",
    about = "Polytopality of graphs: obstructions, refutation search, and exact witnesses",
    disable_version_flag = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Node budget for the facet-complex searches.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    budget_nodes: u64,
    /// Subset-size cap for the separation check.
    #[arg(long, global = true, default_value_t = 8)]
    sep_cap: usize,
    /// Point cap for convex hull computations.
    #[arg(long, global = true, default_value_t = 64)]
    hull_cap: usize,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Md,
    Graph6,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit a named, circulant, product, or star-clique graph.
    Gen {
        #[command(subcommand)]
        what: GenWhat,
    },
    /// Full polytopality-range report for a graph.
    Range {
        /// Graph spec (e.g. k6, c5, kb3x3, circ8-1,2,4, petersen,
        /// marc2, klee4-6, star3, starstar3, domino2, cube4, or
        /// products joined with '*').
        spec: String,
    },
    /// Run a single obstruction check.
    Check {
        #[command(subcommand)]
        which: CheckWhich,
    },
    /// Construct a witness polytope and emit it as JSON.
    Construct {
        #[command(subcommand)]
        what: ConstructWhat,
    },
    /// Verify a polytope skeleton against a graph spec (exit 1 on mismatch).
    Verify {
        /// Path to a polytope JSON file produced by `construct`.
        polytope: PathBuf,
        /// Graph spec to compare against.
        spec: String,
    },
    /// Re-validate a refutation transcript against a graph (exit 1 if the
    /// stored transcript does not match a fresh deterministic run).
    Replay {
        /// Path to a transcript JSON-lines file.
        transcript: PathBuf,
        /// Graph spec.
        spec: String,
        /// Dimension of the recorded search.
        #[arg(long)]
        dim: usize,
        /// Search mode of the recorded search.
        #[arg(long, value_enum)]
        mode: ReplayMode,
    },
    /// Polytopality ranges of all connected circulant graphs on at most
    /// `max_n` vertices, one row per isomorphism class.
    Table {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
}

#[derive(Subcommand, Debug)]
enum GenWhat {
    /// Circulant graph on n vertices with the given step set.
    Circulant { n: usize, steps: String },
    /// Named family: k<n>, c<n>, p<n>, kb<m>x<n>, petersen, domino<p>,
    /// marc<n>, klee<d>-<n>, cube<d>, octahedron, star<n>, starstar<n>.
    Named { spec: String },
    /// Cartesian product of two graph specs.
    Product { a: String, b: String },
    /// Star-clique operation at a vertex.
    StarClique { spec: String, vertex: usize },
}

#[derive(Subcommand, Debug)]
enum CheckWhich {
    /// d-connectivity (with cut certificate on failure).
    Balinski { spec: String, d: usize },
    /// Principal subdivision property in dimension d.
    Psp {
        spec: String,
        d: usize,
        #[arg(long)]
        vertex: Option<usize>,
    },
    /// Separation bound for dimension d, subsets up to the cap.
    Separation { spec: String, d: usize },
    /// Exact dimension-3 decision (planar + 3-connected).
    Steinitz { spec: String },
    /// Planarity with embedding or Kuratowski certificate.
    Planarity { spec: String },
    /// 2-faces of the unique 3-polytope realizing the graph.
    Whitney { spec: String },
    /// Simple-polytopality obstructions at the regular degree.
    SimpleObstructions { spec: String },
    /// Facet-complex search (mode chosen by dimension/regularity).
    FacetSearch {
        spec: String,
        d: usize,
        /// Write the transcript to this path.
        #[arg(long)]
        transcript_out: Option<PathBuf>,
    },
    /// Facet count of the cyclic polytope C_d(n).
    CyclicFacets { d: usize, n: usize },
}

#[derive(Subcommand, Debug)]
enum ConstructWhat {
    /// Named polytope: simplex<d>, cube<d>, cross<d>, cyclic<d>-<n>,
    /// polygon<n>, segment, prism<n>, antiprism<m>, octahedron,
    /// davidsstar<n>, klee<d>-<n>.
    Named { spec: String },
    /// Product of two named polytopes.
    Product { a: String, b: String },
    /// Join of two named polytopes.
    Join { a: String, b: String },
    /// Pyramid over a named polytope.
    Pyramid { base: String },
    /// Truncate a simple vertex (t = 1/3, auto-shrunk).
    Truncate { base: String, vertex: usize },
    /// Lifted product of a polytope with a named lifted configuration.
    LiftedProduct {
        /// Left factor: triangle, segment, or square.
        #[arg(long)]
        p: String,
        /// Lifted configuration: segment-midpoint, square-split,
        /// starclique-octahedron, grid<p>x<q>, octahedron-split.
        #[arg(long)]
        q: String,
    },
    /// The four realizations of the octahedron-prism graph.
    PrismOctahedron {
        /// Which realization (0..=3); omit for all four.
        #[arg(long)]
        index: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReplayMode {
    ThreeFaces,
    SimpleAngles,
}

/// Runs the CLI. Exit codes: 0 completed; 1 = refutation or mismatch found
/// (verify/replay); 2 = usage error.
pub fn run(argv: &[String]) -> i32 {
    let mut full = vec!["polygraph".to_string()];
    full.extend(argv.iter().cloned());
    let cli = match Cli::try_parse_from(&full) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return 2;
        }
    };
    let budgets = BudgetConfig {
        facet_nodes: cli.budget_nodes,
        separation_cap: cli.sep_cap,
        ..BudgetConfig::default()
    };
    let mut out = String::new();
    let code = match dispatch(&cli, &budgets, &mut out) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, out) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => {
            let stdout = std::io::stdout();
            let mut h = stdout.lock();
            let _ = h.write_all(out.as_bytes());
        }
    }
    code
}

fn dispatch(cli: &Cli, budgets: &BudgetConfig, out: &mut String) -> Result<i32, String> {
    match &cli.command {
        Command::Gen { what } => {
            let g = match what {
                GenWhat::Circulant { n, steps } => {
                    let steps = parse_steps(steps)?;
                    circulant(*n, &steps).map_err(|e| e.to_string())?
                }
                GenWhat::Named { spec } => parse_graph_spec(spec)?,
                GenWhat::Product { a, b } => {
                    cartesian_product(&parse_graph_spec(a)?, &parse_graph_spec(b)?)
                }
                GenWhat::StarClique { spec, vertex } => {
                    star_clique(&parse_graph_spec(spec)?, *vertex).map_err(|e| e.to_string())?
                }
            };
            emit_graph(&g, cli.format, out);
            Ok(0)
        }
        Command::Range { spec } => {
            let g = parse_graph_spec(spec)?;
            let report = polytopality_range(&g, budgets);
            emit_report(&report, cli.format, out);
            Ok(0)
        }
        Command::Check { which } => run_check(which, budgets, out),
        Command::Construct { what } => run_construct(what, out),
        Command::Verify { polytope, spec } => {
            let text = std::fs::read_to_string(polytope)
                .map_err(|e| format!("cannot read {}: {e}", polytope.display()))?;
            let poly: PolytopeJson =
                serde_json::from_str(&text).map_err(|e| format!("bad polytope JSON: {e}"))?;
            let p = poly.into_polytope()?;
            let g = parse_graph_spec(spec)?;
            match verify_graph(&p, &g) {
                GraphMatch::Bijection(iso) => {
                    out.push_str(
                        &serde_json::to_string_pretty(&serde_json::json!({
                            "match": true,
                            "isomorphism": iso,
                        }))
                        .expect("serializable"),
                    );
                    out.push('\n');
                    Ok(0)
                }
                GraphMatch::Mismatch { reason } => {
                    out.push_str(
                        &serde_json::to_string_pretty(&serde_json::json!({
                            "match": false,
                            "reason": reason,
                        }))
                        .expect("serializable"),
                    );
                    out.push('\n');
                    Ok(1)
                }
            }
        }
        Command::Replay {
            transcript,
            spec,
            dim,
            mode,
        } => {
            let stored = std::fs::read_to_string(transcript)
                .map_err(|e| format!("cannot read {}: {e}", transcript.display()))?;
            let g = parse_graph_spec(spec)?;
            let mode = match mode {
                ReplayMode::ThreeFaces => SearchMode::ThreeFaces,
                ReplayMode::SimpleAngles => SearchMode::SimpleAngles,
            };
            let outcome = facet_complex_search(&g, *dim, mode, budgets.facet_nodes, g.n())
                .map_err(|e| e.to_string())?;
            let fresh = match &outcome {
                SearchOutcome::Refuted { transcript, .. } => transcript.to_json_lines(),
                SearchOutcome::RealizableComplex { transcript, .. } => transcript.to_json_lines(),
                SearchOutcome::Unknown { note, .. } => {
                    return Err(format!("search did not complete: {note}"))
                }
            };
            if fresh == stored {
                out.push_str("transcript valid: deterministic replay matches\n");
                Ok(0)
            } else {
                out.push_str("transcript INVALID: replay diverged\n");
                Ok(1)
            }
        }
        Command::Table { max_n } => {
            let rows = circulant_table(*max_n, budgets);
            emit_table(&rows, cli.format, out);
            Ok(0)
        }
    }
}

fn run_check(which: &CheckWhich, budgets: &BudgetConfig, out: &mut String) -> Result<i32, String> {
    let mut emit = |v: serde_json::Value| {
        out.push_str(&serde_json::to_string_pretty(&v).expect("serializable"));
        out.push('\n');
    };
    match which {
        CheckWhich::Balinski { spec, d } => {
            let g = parse_graph_spec(spec)?;
            let r = balinski_check(&g, *d);
            emit(serde_json::to_value(&r).expect("serializable"));
            Ok(0)
        }
        CheckWhich::Psp { spec, d, vertex } => {
            let g = parse_graph_spec(spec)?;
            match psp_check(&g, *d, *vertex, budgets.psp_nodes) {
                PspOutcome::Witnesses(ws) => {
                    emit(serde_json::json!({
                        "pass": true,
                        "witnesses": serde_json::to_value(&ws).expect("serializable"),
                    }));
                }
                PspOutcome::Failure(f) => {
                    emit(serde_json::json!({
                        "pass": false,
                        "failure": serde_json::to_value(&f).expect("serializable"),
                    }));
                }
            }
            Ok(0)
        }
        CheckWhich::Separation { spec, d } => {
            let g = parse_graph_spec(spec)?;
            let r = separation_check(&g, *d, budgets.separation_cap, budgets.separation_subsets);
            emit(serde_json::to_value(&r).expect("serializable"));
            Ok(0)
        }
        CheckWhich::Steinitz { spec } => {
            let g = parse_graph_spec(spec)?;
            let v = match steinitz_decide(&g) {
                SteinitzOutcome::Yes(emb) => serde_json::json!({
                    "three_polytopal": true,
                    "faces": emb.faces,
                }),
                SteinitzOutcome::NotPlanar(w) => serde_json::json!({
                    "three_polytopal": false,
                    "reason": "not planar",
                    "kuratowski": serde_json::to_value(&w).expect("serializable"),
                }),
                SteinitzOutcome::NotThreeConnected { cut } => serde_json::json!({
                    "three_polytopal": false,
                    "reason": "not 3-connected",
                    "cut": cut,
                }),
                SteinitzOutcome::TooSmall => serde_json::json!({
                    "three_polytopal": false,
                    "reason": "fewer than 4 vertices",
                }),
            };
            emit(v);
            Ok(0)
        }
        CheckWhich::Planarity { spec } => {
            let g = parse_graph_spec(spec)?;
            let v = match graph::is_planar(&g) {
                graph::PlanarityResult::Planar(emb) => serde_json::json!({
                    "planar": true,
                    "rotations": emb.rotations,
                    "faces": emb.faces,
                }),
                graph::PlanarityResult::NonPlanar(w) => serde_json::json!({
                    "planar": false,
                    "kuratowski": serde_json::to_value(&w).expect("serializable"),
                }),
            };
            emit(v);
            Ok(0)
        }
        CheckWhich::Whitney { spec } => {
            let g = parse_graph_spec(spec)?;
            let faces = whitney_2faces(&g).map_err(|e| e.to_string())?;
            emit(serde_json::json!({ "two_faces": faces }));
            Ok(0)
        }
        CheckWhich::SimpleObstructions { spec } => {
            let g = parse_graph_spec(spec)?;
            let d = g
                .regular_degree()
                .ok_or_else(|| "graph is not regular".to_string())?;
            let r = simple_obstructions(&g, d).map_err(|e| e.to_string())?;
            emit(serde_json::to_value(&r).expect("serializable"));
            Ok(0)
        }
        CheckWhich::FacetSearch {
            spec,
            d,
            transcript_out,
        } => {
            let g = parse_graph_spec(spec)?;
            let mode = if g.regular_degree() == Some(*d) {
                SearchMode::SimpleAngles
            } else {
                SearchMode::ThreeFaces
            };
            let outcome = facet_complex_search(&g, *d, mode, budgets.facet_nodes, g.n())
                .map_err(|e| e.to_string())?;
            let (verdict, transcript) = match &outcome {
                SearchOutcome::Refuted { transcript, .. } => ("REFUTED", Some(transcript)),
                SearchOutcome::RealizableComplex { transcript, .. } => {
                    ("REALIZABLE-COMPLEX", Some(transcript))
                }
                SearchOutcome::Unknown { .. } => ("UNKNOWN", None),
            };
            if let (Some(path), Some(t)) = (transcript_out, transcript) {
                std::fs::write(path, t.to_json_lines())
                    .map_err(|e| format!("cannot write transcript: {e}"))?;
            }
            emit(serde_json::json!({
                "verdict": verdict,
                "transcript_hash": transcript.map(|t| t.content_hash()),
            }));
            Ok(0)
        }
        CheckWhich::CyclicFacets { d, n } => {
            let count = cyclic_facet_count(*d, *n).map_err(|e| e.to_string())?;
            emit(serde_json::json!({ "d": d, "n": n, "facets": count }));
            Ok(0)
        }
    }
}

fn run_construct(what: &ConstructWhat, out: &mut String) -> Result<i32, String> {
    let polys: Vec<Polytope> = match what {
        ConstructWhat::Named { spec } => vec![parse_polytope_spec(spec)?],
        ConstructWhat::Product { a, b } => {
            let (pa, pb) = (parse_polytope_spec(a)?, parse_polytope_spec(b)?);
            vec![geometry::product_polytope(&pa, &pb).map_err(|e| e.to_string())?]
        }
        ConstructWhat::Join { a, b } => {
            let (pa, pb) = (parse_polytope_spec(a)?, parse_polytope_spec(b)?);
            vec![geometry::join_polytope(&pa, &pb).map_err(|e| e.to_string())?]
        }
        ConstructWhat::Pyramid { base } => {
            let b = parse_polytope_spec(base)?;
            vec![geometry::pyramid(&b, &geometry::rat(1)).map_err(|e| e.to_string())?]
        }
        ConstructWhat::Truncate { base, vertex } => {
            let b = parse_polytope_spec(base)?;
            vec![
                geometry::truncate_vertex(&b, *vertex, &geometry::rat_frac(1, 3))
                    .map_err(|e| e.to_string())?,
            ]
        }
        ConstructWhat::LiftedProduct { p, q } => {
            let (poly, _expected) = lifted_product_by_name(p, q)?;
            vec![poly]
        }
        ConstructWhat::PrismOctahedron { index } => {
            let all = geometry::prism_octahedron_realizations().map_err(|e| e.to_string())?;
            match index {
                Some(i) => vec![all
                    .into_iter()
                    .nth(*i)
                    .ok_or_else(|| "index out of range (0..=3)".to_string())?],
                None => all,
            }
        }
    };
    for p in &polys {
        let json = PolytopeJson::from(p);
        out.push_str(&serde_json::to_string_pretty(&json).expect("serializable"));
        out.push('\n');
    }
    Ok(0)
}

/// Named lifted-product constructions for the CLI surface.
pub fn lifted_product_by_name(p: &str, q: &str) -> Result<(Polytope, Graph), String> {
    let left = match p {
        "triangle" => named_polytope(&NamedPolytope::Polygon(3)),
        "segment" => named_polytope(&NamedPolytope::Segment),
        "square" => named_polytope(&NamedPolytope::CrossPolytope(2)),
        other => return Err(format!("unknown left factor `{other}`")),
    }
    .map_err(|e| e.to_string())?;
    use geometry::rat;
    match q {
        "segment-midpoint" => {
            let cfg = PointConfig::new(vec![vec![rat(0)], vec![rat(1)], vec![rat(2)]])
                .map_err(|e| e.to_string())?;
            let lift = Lifting {
                heights: vec![rat(1), rat(2), rat(1)],
            };
            geometry::lifted_product(&left, &cfg, &[lift]).map_err(|e| e.to_string())
        }
        "square-split" => {
            let cfg = PointConfig::new(vec![
                vec![rat(0), rat(0)],
                vec![rat(1), rat(0)],
                vec![rat(1), rat(1)],
                vec![rat(0), rat(1)],
            ])
            .map_err(|e| e.to_string())?;
            let lift = Lifting {
                heights: vec![rat(2), rat(1), rat(2), rat(1)],
            };
            geometry::lifted_product(&left, &cfg, &[lift]).map_err(|e| e.to_string())
        }
        "octahedron-split" => {
            let oct = named_polytope(&NamedPolytope::Octahedron).map_err(|e| e.to_string())?;
            let cfg = PointConfig::new(oct.vertices.clone()).map_err(|e| e.to_string())?;
            let mut h = vec![rat(2); 6];
            h[4] = rat(1);
            h[5] = rat(1);
            geometry::lifted_product(&left, &cfg, &[Lifting { heights: h }])
                .map_err(|e| e.to_string())
        }
        "starclique-octahedron" => {
            if p != "segment" {
                return Err("starclique-octahedron expects --p segment".into());
            }
            geometry::starclique_octahedron_product().map_err(|e| e.to_string())
        }
        other => {
            if let Some(rest) = other.strip_prefix("grid") {
                let (a, b) = rest
                    .split_once('x')
                    .ok_or_else(|| format!("bad grid spec `{other}`"))?;
                let (pp, qq): (usize, usize) = (
                    a.parse().map_err(|_| "bad grid p")?,
                    b.parse().map_err(|_| "bad grid q")?,
                );
                if p != "square" {
                    return Err("grid lifting expects --p square".into());
                }
                geometry::domino_product(pp, qq).map_err(|e| e.to_string())
            } else {
                Err(format!("unknown lifted configuration `{other}`"))
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Graph and polytope spec parsing.

fn parse_steps(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad step `{t}`"))
        })
        .collect()
}

/// Parses compact graph specs; products join base tokens with '*'.
pub fn parse_graph_spec(spec: &str) -> Result<Graph, String> {
    let parts: Vec<&str> = spec.split('*').collect();
    let mut g: Option<Graph> = None;
    for part in parts {
        let next = parse_base_graph(part.trim())?;
        g = Some(match g {
            None => next,
            Some(prev) => cartesian_product(&prev, &next),
        });
    }
    g.ok_or_else(|| "empty graph spec".to_string())
}

fn parse_base_graph(token: &str) -> Result<Graph, String> {
    let err = |t: &str| format!("cannot parse graph spec `{t}`");
    // File input: edge-list text ("n m" header), graph6, or graph JSON,
    // detected by content.
    if let Some(path) = token.strip_prefix("file:") {
        let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
        let trimmed = text.trim();
        if trimmed.starts_with('{') {
            let j: GraphJson =
                serde_json::from_str(trimmed).map_err(|e| format!("bad graph JSON: {e}"))?;
            return j.into_graph().map_err(|e| e.to_string());
        }
        if trimmed
            .lines()
            .next()
            .map(|l| {
                l.split_whitespace().count() == 2
                    && l.split_whitespace().all(|t| t.parse::<usize>().is_ok())
            })
            .unwrap_or(false)
        {
            return graph::from_edge_list_text(trimmed).map_err(|e| e.to_string());
        }
        return graph::from_graph6(trimmed).map_err(|e| e.to_string());
    }
    if let Some(enc) = token.strip_prefix("g6:") {
        return graph::from_graph6(enc).map_err(|e| e.to_string());
    }
    if token == "petersen" {
        return named_graph(&NamedFamily::Petersen).map_err(|e| e.to_string());
    }
    if token == "octahedron" {
        return named_graph(&NamedFamily::Octahedron).map_err(|e| e.to_string());
    }
    if let Some(rest) = token.strip_prefix("circ") {
        let (n, steps) = rest.split_once('-').ok_or_else(|| err(token))?;
        let n: usize = n.parse().map_err(|_| err(token))?;
        return circulant(n, &parse_steps(steps)?).map_err(|e| e.to_string());
    }
    if let Some(rest) = token.strip_prefix("kb") {
        let (m, n) = rest.split_once('x').ok_or_else(|| err(token))?;
        let (m, n): (usize, usize) = (
            m.parse().map_err(|_| err(token))?,
            n.parse().map_err(|_| err(token))?,
        );
        return named_graph(&NamedFamily::CompleteBipartite(m, n)).map_err(|e| e.to_string());
    }
    if let Some(rest) = token.strip_prefix("klee") {
        let (d, n) = rest.split_once('-').ok_or_else(|| err(token))?;
        let (d, n): (usize, usize) = (
            d.parse().map_err(|_| err(token))?,
            n.parse().map_err(|_| err(token))?,
        );
        return named_graph(&NamedFamily::KleeStacked(d, n)).map_err(|e| e.to_string());
    }
    if let Some(rest) = token.strip_prefix("starstar") {
        let n: usize = rest.parse().map_err(|_| err(token))?;
        let (_, starred) = geometry::davidsstar(n).map_err(|e| e.to_string())?;
        return Ok(starred);
    }
    if let Some(rest) = token.strip_prefix("star") {
        let n: usize = rest.parse().map_err(|_| err(token))?;
        let (p, _) = geometry::davidsstar(n).map_err(|e| e.to_string())?;
        return Ok(skeleton_graph(&p).with_label(format!("davidsstar({n})")));
    }
    if let Some(rest) = token.strip_prefix("domino") {
        let p: usize = rest.parse().map_err(|_| err(token))?;
        return named_graph(&NamedFamily::Domino(p)).map_err(|e| e.to_string());
    }
    if let Some(rest) = token.strip_prefix("marc") {
        let n: usize = rest.parse().map_err(|_| err(token))?;
        return named_graph(&NamedFamily::MarcAntonio(n)).map_err(|e| e.to_string());
    }
    if let Some(rest) = token.strip_prefix("cube") {
        let d: usize = rest.parse().map_err(|_| err(token))?;
        return named_graph(&NamedFamily::Hypercube(d)).map_err(|e| e.to_string());
    }
    if let Some(rest) = token.strip_prefix('k') {
        let n: usize = rest.parse().map_err(|_| err(token))?;
        return named_graph(&NamedFamily::Complete(n)).map_err(|e| e.to_string());
    }
    if let Some(rest) = token.strip_prefix('c') {
        let n: usize = rest.parse().map_err(|_| err(token))?;
        return named_graph(&NamedFamily::Cycle(n)).map_err(|e| e.to_string());
    }
    if let Some(rest) = token.strip_prefix('p') {
        let n: usize = rest.parse().map_err(|_| err(token))?;
        return named_graph(&NamedFamily::Path(n)).map_err(|e| e.to_string());
    }
    Err(err(token))
}

/// Parses compact polytope specs.
pub fn parse_polytope_spec(spec: &str) -> Result<Polytope, String> {
    let token = spec.trim();
    if token == "segment" {
        return named_polytope(&NamedPolytope::Segment).map_err(|e| e.to_string());
    }
    if token == "octahedron" {
        return named_polytope(&NamedPolytope::Octahedron).map_err(|e| e.to_string());
    }
    if token == "triangle" {
        return named_polytope(&NamedPolytope::Polygon(3)).map_err(|e| e.to_string());
    }
    if token == "square" {
        return named_polytope(&NamedPolytope::CrossPolytope(2)).map_err(|e| e.to_string());
    }
    let parse2 = |rest: &str| -> Result<(usize, usize), String> {
        let (a, b) = rest
            .split_once('-')
            .ok_or_else(|| format!("expected <a>-<b> in `{spec}`"))?;
        Ok((
            a.parse().map_err(|_| "bad number")?,
            b.parse().map_err(|_| "bad number")?,
        ))
    };
    if let Some(rest) = token.strip_prefix("simplex") {
        let d: usize = rest.parse().map_err(|_| "bad simplex dimension")?;
        return named_polytope(&NamedPolytope::Simplex(d)).map_err(|e| e.to_string());
    }
    if let Some(rest) = token.strip_prefix("cube") {
        let d: usize = rest.parse().map_err(|_| "bad cube dimension")?;
        return named_polytope(&NamedPolytope::Cube(d)).map_err(|e| e.to_string());
    }
    if let Some(rest) = token.strip_prefix("cross") {
        let d: usize = rest.parse().map_err(|_| "bad cross dimension")?;
        return named_polytope(&NamedPolytope::CrossPolytope(d)).map_err(|e| e.to_string());
    }
    if let Some(rest) = token.strip_prefix("cyclic") {
        let (d, n) = parse2(rest)?;
        return named_polytope(&NamedPolytope::Cyclic(d, n)).map_err(|e| e.to_string());
    }
    if let Some(rest) = token.strip_prefix("polygon") {
        let n: usize = rest.parse().map_err(|_| "bad polygon size")?;
        return named_polytope(&NamedPolytope::Polygon(n)).map_err(|e| e.to_string());
    }
    if let Some(rest) = token.strip_prefix("prism") {
        let n: usize = rest.parse().map_err(|_| "bad prism size")?;
        return named_polytope(&NamedPolytope::Prism(n)).map_err(|e| e.to_string());
    }
    if let Some(rest) = token.strip_prefix("antiprism") {
        let m: usize = rest.parse().map_err(|_| "bad antiprism size")?;
        return named_polytope(&NamedPolytope::Antiprism(m)).map_err(|e| e.to_string());
    }
    if let Some(rest) = token.strip_prefix("davidsstar") {
        let n: usize = rest.parse().map_err(|_| "bad star size")?;
        return Ok(geometry::davidsstar(n).map_err(|e| e.to_string())?.0);
    }
    if let Some(rest) = token.strip_prefix("klee") {
        let (d, n) = parse2(rest)?;
        return geometry::stacked_cyclic(d, n).map_err(|e| e.to_string());
    }
    Err(format!("cannot parse polytope spec `{spec}`"))
}

// ---------------------------------------------------------------------------
// Output shapes.

/// JSON shape for polytopes: rationals as "p/q" strings, facets with their
/// supporting hyperplanes, the face lattice as level-indexed incidence lists
/// (faces as vertex index sets, from the empty face up to the polytope), and
/// a Schlegel-style 3D projection dump for external plotting when the
/// dimension is 3 or 4.
#[derive(Debug, Serialize, serde::Deserialize)]
pub struct PolytopeJson {
    pub label: String,
    pub dim: usize,
    pub ambient_dim: usize,
    pub vertices: Vec<Vec<String>>,
    pub facets: Vec<FacetJson>,
    pub skeleton: GraphJson,
    pub content_hash: String,
    pub f_vector: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub face_lattice: Option<Vec<Vec<Vec<usize>>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub schlegel_3d: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Serialize, serde::Deserialize)]
pub struct FacetJson {
    pub vertices: Vec<usize>,
    pub normal: Vec<String>,
    pub offset: String,
}

impl From<&Polytope> for PolytopeJson {
    fn from(p: &Polytope) -> Self {
        let sk = skeleton_graph(p);
        let lattice = face_lattice(p);
        PolytopeJson {
            label: p.label.clone(),
            dim: p.dim,
            ambient_dim: p.ambient_dim,
            vertices: p
                .vertices
                .iter()
                .map(|v| v.iter().map(geometry::rat_to_string).collect())
                .collect(),
            facets: p
                .facets
                .iter()
                .map(|f| FacetJson {
                    vertices: f.vertices.clone(),
                    normal: f.normal.iter().map(geometry::rat_to_string).collect(),
                    offset: geometry::rat_to_string(&f.offset),
                })
                .collect(),
            skeleton: GraphJson::from(&sk),
            content_hash: p.content_hash(),
            f_vector: lattice.f_vector(),
            face_lattice: Some(
                lattice
                    .levels
                    .iter()
                    .map(|level| {
                        level
                            .iter()
                            .map(|&mask| {
                                (0..p.vertex_count())
                                    .filter(|&i| mask & (1 << i) != 0)
                                    .collect()
                            })
                            .collect()
                    })
                    .collect(),
            ),
            schlegel_3d: schlegel_projection(p),
        }
    }
}

impl PolytopeJson {
    pub fn into_polytope(self) -> Result<Polytope, String> {
        let pts: Vec<Vec<geometry::Rat>> = self
            .vertices
            .iter()
            .map(|v| {
                v.iter()
                    .map(|s| geometry::rat_from_str(s).ok_or_else(|| format!("bad rational `{s}`")))
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        let cfg = PointConfig::new(pts).map_err(|e| e.to_string())?;
        let p = convex_hull_facets(&cfg, cfg.len().max(64)).map_err(|e| e.to_string())?;
        Ok(p.relabel(self.label))
    }
}

/// Perspective projection of a 4-polytope through the centroid of its first
/// facet (or the identity padding for dimension <= 3).
fn schlegel_projection(p: &Polytope) -> Option<Vec<Vec<String>>> {
    use num_traits::Zero;
    if p.dim == 3 && p.ambient_dim == 3 {
        return Some(
            p.vertices
                .iter()
                .map(|v| v.iter().map(geometry::rat_to_string).collect())
                .collect(),
        );
    }
    if p.dim != 4 || p.ambient_dim != 4 {
        return None;
    }
    let f = p.facets.first()?;
    // Viewpoint: facet centroid pushed slightly beyond the facet plane.
    let fc = {
        let pts: Vec<Vec<geometry::Rat>> =
            f.vertices.iter().map(|&i| p.vertices[i].clone()).collect();
        geometry::centroid_of(&pts)
    };
    let inner = geometry::centroid_of(&p.vertices);
    let dir: Vec<geometry::Rat> = fc.iter().zip(&inner).map(|(a, b)| a - b).collect();
    let eye: Vec<geometry::Rat> = fc
        .iter()
        .zip(&dir)
        .map(|(a, d)| a + &(d * &geometry::rat_frac(1, 2)))
        .collect();
    // Project each vertex from the eye onto the facet hyperplane.
    let denom_at = |x: &[geometry::Rat]| {
        let nx: geometry::Rat = f
            .normal
            .iter()
            .zip(x)
            .map(|(a, b)| a * b)
            .fold(geometry::Rat::zero(), |s, t| s + t);
        &f.offset - &nx
    };
    let eye_side = denom_at(&eye);
    if eye_side.is_zero() {
        return None;
    }
    let mut out = Vec::new();
    for v in &p.vertices {
        let v_side = denom_at(v);
        let t = &v_side / (&v_side - &eye_side); // intersection parameter
        let proj: Vec<geometry::Rat> = v
            .iter()
            .zip(&eye)
            .map(|(a, e)| a + &(&(e - a) * &t))
            .collect();
        out.push(proj[..3].iter().map(geometry::rat_to_string).collect());
    }
    Some(out)
}

fn emit_graph(g: &Graph, format: Format, out: &mut String) {
    match format {
        Format::Graph6 => {
            out.push_str(&graph::to_graph6(g));
            out.push('\n');
        }
        Format::Md => {
            out.push_str(&format!(
                "| {} | {} vertices | {} edges |\n",
                g.label().unwrap_or("graph"),
                g.n(),
                g.edge_count()
            ));
        }
        Format::Json => {
            let v = serde_json::json!({
                "n": g.n(),
                "edges": g.edges(),
                "label": g.label(),
                "graph6": graph::to_graph6(g),
            });
            out.push_str(&serde_json::to_string_pretty(&v).expect("serializable"));
            out.push('\n');
        }
    }
}

fn emit_report(report: &ObstructionReport, format: Format, out: &mut String) {
    match format {
        Format::Json | Format::Graph6 => {
            out.push_str(&serde_json::to_string_pretty(report).expect("serializable"));
            out.push('\n');
        }
        Format::Md => {
            out.push_str(&format!(
                "| {} | confirmed {} | open {} |\n",
                report.graph.label.as_deref().unwrap_or("graph"),
                format_set(&report.confirmed),
                format_set(&report.open),
            ));
        }
    }
}

fn format_set(s: &[usize]) -> String {
    if s.is_empty() {
        "∅".to_string()
    } else {
        format!(
            "{{{}}}",
            s.iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

// ---------------------------------------------------------------------------
// Circulant table.

#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub n: usize,
    /// Step sets in this isomorphism class (lexicographically sorted).
    pub step_sets: Vec<Vec<usize>>,
    pub label: String,
    pub confirmed: Vec<usize>,
    pub open: Vec<usize>,
    pub verdict_reasons: Vec<(usize, String)>,
}

/// All connected circulant graphs on 2..=max_n vertices, deduplicated up to
/// isomorphism, with their polytopality ranges.
pub fn circulant_table(max_n: usize, budgets: &BudgetConfig) -> Vec<TableRow> {
    struct ClassSpec {
        n: usize,
        steps: Vec<Vec<usize>>,
        graph: Graph,
    }
    let mut classes: Vec<ClassSpec> = Vec::new();
    for n in 2..=max_n {
        if n == 2 {
            classes.push(ClassSpec {
                n,
                steps: vec![vec![1]],
                graph: named_graph(&NamedFamily::Complete(2)).expect("K2"),
            });
            continue;
        }
        let half = n / 2;
        for mask in 1u32..(1 << half) {
            let steps: Vec<usize> = (0..half)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| i + 1)
                .collect();
            if !graph::circulant_is_connected(n, &steps) {
                continue;
            }
            let g = circulant(n, &steps).expect("valid circulant");
            match classes
                .iter_mut()
                .find(|c| c.n == n && crate::graph::are_isomorphic(&c.graph, &g).is_some())
            {
                Some(c) => c.steps.push(steps),
                None => classes.push(ClassSpec {
                    n,
                    steps: vec![steps],
                    graph: g,
                }),
            }
        }
    }

    let threads: usize = std::env::var("POLYGRAPH_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&t| t >= 1)
        .unwrap_or(1);

    let reports: Vec<ObstructionReport> = if threads <= 1 || classes.len() <= 1 {
        classes
            .iter()
            .map(|c| polytopality_range(&c.graph, budgets))
            .collect()
    } else {
        // Chunked scoped threads; output order stays canonical.
        let chunk = classes.len().div_ceil(threads);
        let mut slots: Vec<Option<ObstructionReport>> = vec![None; classes.len()];
        std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for (ti, batch) in classes.chunks(chunk).enumerate() {
                let budgets = budgets.clone();
                handles.push((
                    ti * chunk,
                    scope.spawn(move || {
                        batch
                            .iter()
                            .map(|c| polytopality_range(&c.graph, &budgets))
                            .collect::<Vec<_>>()
                    }),
                ));
            }
            for (base, h) in handles {
                for (i, r) in h.join().expect("table worker").into_iter().enumerate() {
                    slots[base + i] = Some(r);
                }
            }
        });
        slots.into_iter().map(|s| s.expect("filled")).collect()
    };

    classes
        .into_iter()
        .zip(reports)
        .map(|(c, r)| TableRow {
            n: c.n,
            step_sets: c.steps,
            label: c.graph.label().unwrap_or("graph").to_string(),
            confirmed: r.confirmed.clone(),
            open: r.open.clone(),
            verdict_reasons: r
                .verdicts
                .iter()
                .map(|v| (v.d, format!("{:?}:{}", v.status, v.reason)))
                .collect(),
        })
        .collect()
}

fn emit_table(rows: &[TableRow], format: Format, out: &mut String) {
    match format {
        Format::Md => {
            out.push_str("| graph | n | range | open |\n|---|---|---|---|\n");
            for r in rows {
                out.push_str(&format!(
                    "| {} | {} | {} | {} |\n",
                    r.label,
                    r.n,
                    format_set(&r.confirmed),
                    format_set(&r.open),
                ));
            }
        }
        _ => {
            out.push_str(&serde_json::to_string_pretty(rows).expect("serializable"));
            out.push('\n');
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_specs_parse() {
        assert_eq!(parse_graph_spec("k6").unwrap().n(), 6);
        assert_eq!(parse_graph_spec("kb3x3").unwrap().edge_count(), 9);
        assert_eq!(
            parse_graph_spec("circ8-1,2,4").unwrap().regular_degree(),
            Some(5)
        );
        assert_eq!(parse_graph_spec("petersen*petersen").unwrap().n(), 100);
        assert_eq!(parse_graph_spec("k2*kb3x3").unwrap().n(), 12);
        assert!(parse_graph_spec("zzz").is_err());
    }

    #[test]
    fn polytope_specs_parse() {
        assert_eq!(parse_polytope_spec("simplex3").unwrap().dim, 3);
        assert_eq!(parse_polytope_spec("cyclic4-6").unwrap().facet_count(), 9);
        assert_eq!(parse_polytope_spec("antiprism3").unwrap().vertex_count(), 6);
    }

    #[test]
    fn gen_emits_graph6_and_json() {
        let mut out = String::new();
        let cli = Cli::try_parse_from(["polygraph", "gen", "circulant", "8", "1,2,4"]).unwrap();
        let budgets = BudgetConfig::default();
        assert_eq!(dispatch(&cli, &budgets, &mut out).unwrap(), 0);
        assert!(out.contains("graph6"));
        assert!(out.contains("circulant(8;1,2,4)"));
    }
}
