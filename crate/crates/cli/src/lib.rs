//! Command-line front end for `llt-lab`.
//!
//! [`run`] parses arguments, calls one library operation and renders the
//! result as text or canonical JSON. Exit codes: 0 when every check holds,
//! 1 when a verification fails, 2 for usage and input errors, 3 when an
//! internal identity breaks (for instance an inexact division).

use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use llt_lab::cumulant::{
    cumulant_of_graph_checked, verify_forest_identity, verify_moebius_consistency,
};
use llt_lab::lltgraph::{check_lemma_3_2, llt_of_graph_checked, LocalRelation};
use llt_lab::shapes::{llt_of_shapes, shapes_to_graph};
use llt_lab::theorem::{
    aggregate, default_jobs, lollipop_strips, par_map, sweep_with_jobs, verify_bijections,
    verify_corollary_1_3, verify_cross_representation, verify_cumulant_consistency,
    verify_disconnected_corpus, verify_lemma_3_2_suite, verify_lemma_4_5_suite, verify_schur_positivity,
    verify_theorem_1_2,
};
use llt_lab::treebij::{
    admissible_positions, canonical_drawing, check_lemma_4_5, nu, parking_functions, schroder_to_dyck,
    schroder_to_graph, schroder_to_strips, spanning_trees, tree_to_parking, tree_to_schroder, PathRelation,
    SchroderPath,
};
use llt_lab::{BigInt, Error, LabeledTree, LltGraph, MeltingLollipop, ShapeSequence, SymPoly, VerificationReport};

#[derive(Parser, Debug)]
#[command(name = "llt-lab", version, about = "Exact LLT polynomials, cumulants and their tree expansions")]
pub struct Cli {
    /// Print canonical JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Maximum worker threads (default: available cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// LLT polynomial of a shape sequence or of a graph.
    Llt {
        #[command(subcommand)]
        source: LltSource,
    },
    /// Cumulant of the graph in a JSON file (`-` for stdin).
    Cumulant {
        graph: String,
        #[arg(long)]
        vars: Option<usize>,
        /// Also print the Schur expansion.
        #[arg(long)]
        schur: bool,
    },
    /// A melting lollipop: its graph, strips, theorem check or Schur expansion.
    Lollipop {
        #[command(flatten)]
        params: LollipopArgs,
        #[arg(long, group = "action")]
        graph: bool,
        #[arg(long, group = "action")]
        strips: bool,
        #[arg(long, group = "action")]
        verify: bool,
        #[arg(long, group = "action")]
        schur: bool,
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Spanning trees of the underlying simple graph of a graph file.
    Trees { graph: String },
    /// Strips, path decomposition and paths of a labeled tree given as an edge list.
    Nu { tree: String },
    /// Strip sequence of a Schroder path written over {n,e,d}.
    Mu { path: String },
    /// Every parking function on `m` cars.
    Parking {
        #[arg(long)]
        m: usize,
    },
    /// Run one verifier.
    Verify {
        #[command(subcommand)]
        claim: VerifyClaim,
    },
    /// Theorem, forest identity, Moebius and Schur checks on every lollipop
    /// with l + m up to the bound.
    Sweep {
        #[arg(long)]
        max_total: usize,
    },
}

#[derive(Subcommand, Debug)]
enum LltSource {
    /// A sequence such as "[(3,2)/(1),(1,1)]".
    Shapes {
        seq: String,
        #[arg(long)]
        vars: Option<usize>,
    },
    /// A graph JSON file (`-` for stdin, or inline JSON).
    Graph {
        graph: String,
        #[arg(long)]
        vars: Option<usize>,
    },
}

#[derive(Args, Debug, Clone, Copy)]
struct LollipopArgs {
    #[arg(long)]
    l: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    k: usize,
}

impl LollipopArgs {
    fn lollipop(self) -> Result<MeltingLollipop, Failure> {
        Ok(MeltingLollipop::new(self.l, self.m, self.k)?)
    }
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum Case {
    A,
    B,
}

#[derive(Subcommand, Debug)]
enum VerifyClaim {
    /// Cumulant of a lollipop = sum over its spanning trees.
    Theorem {
        #[command(flatten)]
        params: LollipopArgs,
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Cumulant of K_m = Cayley-tree sum = parking-function sum, for m up to `--max-m`
    /// or a single `--m`.
    Corollary {
        #[arg(long, conflicts_with = "max_m")]
        m: Option<usize>,
        #[arg(long, default_value_t = 6)]
        max_m: usize,
    },
    /// LLT = sum over set partitions of cumulant products, and closed = recursive.
    Moebius { graph: String },
    /// Shifted spanning-forest expansion of a lollipop.
    ForestIdentity {
        #[command(flatten)]
        params: LollipopArgs,
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Local graph relations; all of them unless `--case` is given.
    #[command(name = "lemma-3-2")]
    Lemma32 {
        /// 1a, 1b, 1c, 2_typeI, 2_typeII or 3.
        #[arg(long)]
        case: Option<String>,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// Defaults to LLT_LAB_SEED, then 0.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Path relations at one position, or everywhere up to `--max-m`.
    #[command(name = "lemma-4-5")]
    Lemma45 {
        #[arg(long, value_enum, requires = "path")]
        case: Option<Case>,
        #[arg(long, requires = "case")]
        path: Option<String>,
        /// 0-based step index; every admissible one when omitted.
        #[arg(long, requires = "path")]
        position: Option<usize>,
        #[arg(long, default_value_t = 5)]
        max_m: usize,
    },
    /// Round trips and counts of the path, tree and parking-function maps.
    Bijections {
        #[arg(long, default_value_t = 6)]
        max_schroder: usize,
        #[arg(long, default_value_t = 7)]
        max_tree: usize,
        #[arg(long, default_value_t = 6)]
        max_parking: usize,
    },
    /// Schur positivity of lollipop cumulants with l + m up to the bound.
    Schur {
        #[arg(long, default_value_t = 6)]
        max_total: usize,
    },
    /// Forest identity on every lollipop with l + m up to the bound.
    Forests {
        #[arg(long, default_value_t = 6)]
        max_total: usize,
    },
    /// Closed and recursive cumulants on lollipops and random unicellular graphs.
    Consistency {
        #[arg(long, default_value_t = 5)]
        max_total: usize,
        #[arg(long, default_value_t = 50)]
        random: usize,
        #[arg(long, default_value_t = 5)]
        max_vertices: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Vanishing cumulants on the disconnected corpus.
    Vanishing {
        #[arg(long, default_value_t = 5)]
        max_vertices: usize,
    },
    /// LLT through shapes, graphs and tableaux on the shape corpus.
    CrossRepresentation {
        #[arg(long, default_value_t = 6)]
        max_tree: usize,
        #[arg(long, default_value_t = 5)]
        max_path: usize,
        #[arg(long, default_value_t = 6)]
        tableau_limit: usize,
    },
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Internal(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotDivisible { .. } | Error::NotHomogeneous { .. } | Error::VarMismatch { .. } => {
                Failure::Internal(e)
            }
            e => Failure::Usage(e.to_string()),
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let json = cli.json;
    match execute(cli) {
        Ok((out, ok)) => Outcome {
            code: if ok { 0 } else { 1 },
            stdout: out,
            stderr: String::new(),
        },
        Err(Failure::Usage(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Internal(e)) => {
            let dump = json!({ "error": e.to_string(), "detail": format!("{e:?}") });
            let mut stderr = format!("internal error: {e}\n");
            if json {
                stderr = format!("{}\n", canonical(&dump));
            }
            Outcome { code: 3, stdout: String::new(), stderr }
        }
    }
}

fn canonical(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

/// Reads a JSON argument: `-` for stdin, inline JSON, or a file path.
fn read_json<T: serde::de::DeserializeOwned>(arg: &str) -> Result<T, Failure> {
    let text = if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        s
    } else if arg.trim_start().starts_with(['[', '{']) {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| Failure::Usage(format!("reading {arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{arg}: {e}")))
}

fn parse<T: std::str::FromStr>(s: &str) -> Result<T, Failure>
where
    T::Err: std::fmt::Display,
{
    s.parse().map_err(|e: T::Err| Failure::Usage(e.to_string()))
}

fn seed_or_env(seed: Option<u64>) -> Result<u64, Failure> {
    if let Some(s) = seed {
        return Ok(s);
    }
    match std::env::var("LLT_LAB_SEED") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("LLT_LAB_SEED={v:?} is not an unsigned integer"))),
        Err(_) => Ok(0),
    }
}

fn render_poly(f: &SymPoly, json: bool) -> String {
    if json {
        canonical(&serde_json::to_value(f).expect("serializes"))
    } else {
        f.to_string()
    }
}

fn render_reports(reports: &[VerificationReport], json: bool) -> (String, bool) {
    let ok = reports.iter().all(VerificationReport::holds);
    let text = if json {
        canonical(&serde_json::to_value(reports).expect("serializes"))
    } else {
        reports.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n")
    };
    (text, ok)
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn execute(cli: Cli) -> Result<(String, bool), Failure> {
    let json = cli.json;
    let jobs = cli.jobs.unwrap_or_else(default_jobs).max(1);
    let (out, ok) = match cli.command {
        Command::Llt { source } => {
            let f = match source {
                LltSource::Shapes { seq, vars } => {
                    let seq: ShapeSequence = parse(&seq)?;
                    llt_of_shapes(&seq, vars.unwrap_or(seq.cell_count()))
                }
                LltSource::Graph { graph, vars } => {
                    let g: LltGraph = read_json(&graph)?;
                    llt_of_graph_checked(&g, vars.unwrap_or(g.vertex_count()))?
                }
            };
            (render_poly(&f, json), true)
        }
        Command::Cumulant { graph, vars, schur } => {
            let g: LltGraph = read_json(&graph)?;
            let kappa: SymPoly = cumulant_of_graph_checked(&g, vars.unwrap_or(g.vertex_count()))?;
            if schur {
                let expansion = kappa.to_schur_basis()?;
                if json {
                    let terms: Vec<Value> = expansion
                        .iter()
                        .map(|(l, c)| json!({ "partition": l, "q_coeffs": c.coeffs().iter().map(|x| x.to_string()).collect::<Vec<_>>() }))
                        .collect();
                    (canonical(&json!({ "cumulant": kappa, "schur": terms })), true)
                } else {
                    let terms: Vec<String> = expansion.iter().map(|(l, c)| format!("({c}) s_{l}")).collect();
                    let schur = if terms.is_empty() { "0".into() } else { terms.join(" + ") };
                    (format!("{kappa}\nschur: {schur}"), true)
                }
            } else {
                (render_poly(&kappa, json), true)
            }
        }
        Command::Lollipop { params, graph: _, strips, verify, schur, vars } => {
            let p = params.lollipop()?;
            let n = vars.unwrap_or(p.vertex_count());
            if verify {
                render_reports(&[verify_theorem_1_2(p, n)?], json)
            } else if schur {
                render_schur(&verify_schur_positivity(&p.graph(), n)?, json)
            } else if strips {
                let s = lollipop_strips(p)?;
                let text = if json { canonical(&serde_json::to_value(&s).expect("serializes")) } else { s.to_string() };
                (text, true)
            } else {
                let g = p.graph();
                let text = if json {
                    canonical(&serde_json::to_value(&g).expect("serializes"))
                } else {
                    format!("{p}\n{}", serde_json::to_string(&g).expect("serializes"))
                };
                (text, true)
            }
        }
        Command::Trees { graph } => {
            let g: LltGraph = read_json(&graph)?;
            let trees = spanning_trees(&g.underlying_simple_graph());
            let text = if json {
                canonical(&json!({ "count": trees.len(), "trees": trees }))
            } else {
                let mut lines: Vec<String> =
                    trees.iter().map(|t| serde_json::to_string(t).expect("serializes")).collect();
                lines.push(format!("{} spanning trees", trees.len()));
                lines.join("\n")
            };
            (text, true)
        }
        Command::Nu { tree } => {
            let t: LabeledTree = read_json(&tree)?;
            let plane = canonical_drawing(&t);
            let strips = nu(&plane);
            let path = tree_to_schroder(&plane);
            let dyck = schroder_to_dyck(&path)?;
            let parking = tree_to_parking(&t)?;
            let text = if json {
                canonical(&json!({
                    "strips": strips.shapes,
                    "paths": strips.paths,
                    "diagonal_order": strips.diagonal_order,
                    "schroder_path": path,
                    "dyck_path": dyck,
                    "parking_function": parking,
                }))
            } else {
                format!(
                    "strips: {}\npaths: {:?}\ndiagonal order: {:?}\nschroder path: {path}\ndyck path: {dyck}\nparking function: {:?}",
                    strips.shapes,
                    strips.paths,
                    strips.diagonal_order,
                    parking.values()
                )
            };
            (text, true)
        }
        Command::Mu { path } => {
            let p: SchroderPath = parse(&path)?;
            let s = schroder_to_strips(&p)?;
            let g = schroder_to_graph(&p);
            debug_assert_eq!(shapes_to_graph(&s).0, g);
            let text = if json {
                canonical(&json!({ "path": p, "strips": s, "graph": g }))
            } else {
                s.to_string()
            };
            (text, true)
        }
        Command::Parking { m } => {
            let fs: Vec<_> = parking_functions(m).collect();
            let text = if json {
                canonical(&serde_json::to_value(&fs).expect("serializes"))
            } else {
                let mut lines: Vec<String> = fs.iter().map(|f| format!("{:?}", f.values())).collect();
                lines.push(format!("{} parking functions", fs.len()));
                lines.join("\n")
            };
            (text, true)
        }
        Command::Verify { claim } => verify(claim, json, jobs)?,
        Command::Sweep { max_total } => render_reports(&sweep_with_jobs(max_total, jobs)?, json),
    };
    Ok((with_newline(out), ok))
}

fn render_schur(report: &VerificationReport, json: bool) -> (String, bool) {
    if json {
        return render_reports(std::slice::from_ref(report), json);
    }
    let expansion = report.notes.last().cloned().unwrap_or_default();
    (format!("{report}\nschur: {expansion}"), report.holds())
}

fn lollipops_par<F>(max_total: usize, jobs: usize, claim: &str, f: F) -> Result<Vec<VerificationReport>, Failure>
where
    F: Fn(MeltingLollipop) -> llt_lab::Result<VerificationReport> + Sync,
{
    let params = MeltingLollipop::all_up_to(max_total);
    let reports = par_map(&params, jobs, |&p| {
        f(p).map(|mut r| {
            r.claim = format!("{claim} {p}");
            r
        })
    });
    Ok(reports.into_iter().collect::<llt_lab::Result<Vec<_>>>()?)
}

fn verify(claim: VerifyClaim, json: bool, jobs: usize) -> Result<(String, bool), Failure> {
    let reports = match claim {
        VerifyClaim::Theorem { params, vars } => {
            let p = params.lollipop()?;
            vec![verify_theorem_1_2(p, vars.unwrap_or(p.vertex_count()))?]
        }
        VerifyClaim::Corollary { m, max_m } => {
            let ms: Vec<usize> = match m {
                Some(m) => vec![m],
                None => (1..=max_m).collect(),
            };
            par_map(&ms, jobs, |&m| verify_corollary_1_3(m, m))
                .into_iter()
                .collect::<llt_lab::Result<Vec<_>>>()?
        }
        VerifyClaim::Moebius { graph } => {
            let g: LltGraph = read_json(&graph)?;
            // the fast evaluation assumes symmetric coloring sums on every induced subgraph
            cumulant_of_graph_checked::<BigInt>(&g, g.vertex_count())?;
            vec![verify_moebius_consistency(&g, g.vertex_count())?]
        }
        VerifyClaim::ForestIdentity { params, vars } => {
            let p = params.lollipop()?;
            vec![verify_forest_identity(p, vars.unwrap_or(p.vertex_count()))?]
        }
        VerifyClaim::Lemma32 { case, trials, seed } => {
            let seed = seed_or_env(seed)?;
            match case {
                Some(c) => {
                    let r = LocalRelation::parse(&c)?;
                    vec![check_lemma_3_2(r, r.pattern_size(), trials, seed)?]
                }
                None => vec![verify_lemma_3_2_suite(trials, seed)?],
            }
        }
        VerifyClaim::Lemma45 { case, path, position, max_m } => match (case, path) {
            (Some(case), Some(path)) => {
                let case = match case {
                    Case::A => PathRelation::A,
                    Case::B => PathRelation::B,
                };
                let p: SchroderPath = parse(&path)?;
                let positions = match position {
                    Some(i) => vec![i],
                    None => admissible_positions(case, &p),
                };
                if positions.is_empty() {
                    return Err(Failure::Usage(format!("relation {case:?} does not apply anywhere in {p}")));
                }
                positions
                    .into_iter()
                    .map(|i| check_lemma_4_5(case, &p, i, p.size()))
                    .collect::<llt_lab::Result<Vec<_>>>()?
            }
            _ => vec![verify_lemma_4_5_suite(max_m)?],
        },
        VerifyClaim::Bijections { max_schroder, max_tree, max_parking } => {
            vec![verify_bijections(max_schroder, max_tree, max_parking)?]
        }
        VerifyClaim::Schur { max_total } => {
            let rs = lollipops_par(max_total, jobs, "schur-positivity", |p| {
                verify_schur_positivity(&p.graph(), p.vertex_count())
            })?;
            vec![aggregate("schur-positivity", rs)]
        }
        VerifyClaim::Forests { max_total } => {
            let rs = lollipops_par(max_total, jobs, "forest-identity", |p| {
                verify_forest_identity(p, p.vertex_count())
            })?;
            vec![aggregate("forest-identity", rs)]
        }
        VerifyClaim::Consistency { max_total, random, max_vertices, seed } => {
            vec![verify_cumulant_consistency(max_total, random, max_vertices, seed_or_env(seed)?)?]
        }
        VerifyClaim::Vanishing { max_vertices } => vec![verify_disconnected_corpus(max_vertices)?],
        VerifyClaim::CrossRepresentation { max_tree, max_path, tableau_limit } => {
            vec![verify_cross_representation(max_tree, max_path, tableau_limit)?]
        }
    };
    Ok(render_reports(&reports, json))
}
