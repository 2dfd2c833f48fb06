//! Top-level verifiers: the spanning-tree expansion of melting-lollipop
//! cumulants, its parking-function form for complete graphs, Schur
//! positivity, and the suites that sweep them over whole families.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cumulant::{
    cumulant_of_graph, cumulant_recursive, nu_of_tree, verify_disconnected_vanishing,
    verify_forest_identity, verify_moebius_consistency,
};
use crate::error::{Error, Result};
use crate::lltgraph::{check_lemma_3_2, llt_of_graph, LltGraph, LocalRelation, MeltingLollipop};
use crate::report::{ReportBuilder, VerificationReport};
use crate::shapes::{llt_of_shapes, llt_of_shapes_by_tableaux, shapes_to_graph, ShapeSequence, SkewShape};
use crate::simple_graph::SimpleGraph;
use crate::symfunc::Partition;
use crate::treebij::{
    admissible_positions, canonical_drawing, check_lemma_4_5, dyck_to_schroder, graph_to_schroder, nu,
    parking_functions, parking_to_strips, plane_trees, schroder_to_dyck, schroder_to_graph,
    schroder_to_strips, spanning_trees, tree_to_parking, tree_to_schroder, LabeledTree, ParkingFunction,
    PathRelation, SchroderPath,
};
use crate::{QPoly, SymPoly};

/// Little Schroder numbers: Schroder paths of size `m` for `m = 0, 1, ...`.
pub const LITTLE_SCHRODER: [u64; 10] = [1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049];

fn catalan(m: usize) -> u64 {
    let mut c = 1u64;
    for i in 0..m as u64 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

/// `m^(m-2)`, with the single tree on one vertex.
fn cayley(m: usize) -> u64 {
    if m < 2 {
        1
    } else {
        (m as u64).pow(m as u32 - 2)
    }
}

fn count(x: BigInt) -> u64 {
    x.to_u64().unwrap_or(u64::MAX)
}

fn need_vars(n: usize, size: usize) -> Result<()> {
    if n < size {
        return Err(Error::PreconditionViolated(format!("need at least {size} variables, got {n}")));
    }
    Ok(())
}

/// Sums `LLT(seq)` over a multiset of strip sequences.
fn sum_llts(multiset: BTreeMap<ShapeSequence, u64>, n: usize) -> SymPoly {
    let mut total = SymPoly::zero(n);
    for (seq, mult) in multiset {
        let term = llt_of_shapes::<BigInt>(&seq, n).scale(&QPoly::constant(BigInt::from(mult)));
        total = &total + &term;
    }
    total
}

/// `sum_T LLT(nu(T))` over the spanning trees of `sg`, and the number of trees.
pub fn spanning_tree_sum(sg: &SimpleGraph, n: usize) -> (SymPoly, u64) {
    let trees = spanning_trees(sg);
    let mut multiset: BTreeMap<ShapeSequence, u64> = BTreeMap::new();
    for t in &trees {
        *multiset.entry(nu_of_tree(t)).or_default() += 1;
    }
    (sum_llts(multiset, n), trees.len() as u64)
}

fn check_degree(rb: &mut ReportBuilder, label: &str, f: &SymPoly, degree: usize) -> Result<()> {
    let got = f.homogeneous_degree()?;
    let ok = got.is_none() || got == Some(degree);
    rb.check_values(label, got, degree, "degree mismatch", ok);
    Ok(())
}

/// The cumulant of a melting lollipop against the sum over spanning trees
/// `T` of its underlying graph of `LLT(nu(T))`.
///
/// The left side goes through the graph, the right side through shapes, so
/// a pass also ties the two evaluation routes together.
pub fn verify_theorem_1_2(p: MeltingLollipop, n: usize) -> Result<VerificationReport> {
    let size = p.vertex_count();
    need_vars(n, size)?;
    let g = p.graph();
    let sg = g.underlying_simple_graph();
    let mut rb = ReportBuilder::new("theorem")
        .param("l", p.l)
        .param("m", p.m)
        .param("k", p.k)
        .param("n", n);
    let lhs = cumulant_of_graph::<BigInt>(&g, n)?;
    let (rhs, trees) = spanning_tree_sum(&sg, n);
    rb.check_count("spanning trees = matrix-tree determinant", trees, count(sg.spanning_tree_count()));
    check_degree(&mut rb, "cumulant is homogeneous of degree l+m", &lhs, size)?;
    check_degree(&mut rb, "tree sum is homogeneous of degree l+m", &rhs, size)?;
    rb.note(format!("{trees} spanning trees"));
    rb.check_equal("cumulant = sum over spanning trees", &lhs, &rhs);
    Ok(rb.finish())
}

/// `kappa(K_m)` against the Cayley-tree sum and the parking-function sum on
/// `m - 1` cars.
pub fn verify_corollary_1_3(m: usize, n: usize) -> Result<VerificationReport> {
    if m == 0 {
        return Err(Error::PreconditionViolated("m must be positive".into()));
    }
    need_vars(n, m)?;
    let mut rb = ReportBuilder::new("corollary").param("m", m).param("n", n);
    let complete = MeltingLollipop::new(0, m, 0)?.graph();
    let kappa = cumulant_of_graph::<BigInt>(&complete, n)?;
    let sg = SimpleGraph::complete(m);
    let (tree_sum, trees) = spanning_tree_sum(&sg, n);

    let mut by_path: BTreeMap<SchroderPath, u64> = BTreeMap::new();
    let mut functions = 0u64;
    for f in parking_functions(m - 1) {
        functions += 1;
        *by_path.entry(f.dyck_path()).or_default() += 1;
    }
    let mut multiset: BTreeMap<ShapeSequence, u64> = BTreeMap::new();
    for (d, mult) in by_path {
        *multiset.entry(schroder_to_strips(&dyck_to_schroder(&d)?)?).or_default() += mult;
    }
    let parking_sum = sum_llts(multiset, n);

    let kirchhoff = count(sg.spanning_tree_count());
    rb.check_count("Cayley trees = m^(m-2)", trees, cayley(m));
    rb.check_count("Cayley trees = matrix-tree determinant", trees, kirchhoff);
    rb.check_count("parking functions on m-1 cars = m^(m-2)", functions, cayley(m));
    rb.check_equal("cumulant of K_m = tree sum", &kappa, &tree_sum);
    rb.check_equal("tree sum = parking sum", &tree_sum, &parking_sum);
    Ok(rb.finish())
}

/// Schur expansion of the cumulant of `g`.
pub fn cumulant_schur_expansion(g: &LltGraph, n: usize) -> Result<BTreeMap<Partition, QPoly>> {
    cumulant_of_graph::<BigInt>(g, n)?.to_schur_basis()
}

/// Holds iff every Schur coefficient of the cumulant of `g` has
/// nonnegative coefficients in `q`.
pub fn verify_schur_positivity(g: &LltGraph, n: usize) -> Result<VerificationReport> {
    need_vars(n, g.vertex_count())?;
    let mut rb = ReportBuilder::new("schur-positivity").param("graph", g).param("n", n);
    let expansion = cumulant_schur_expansion(g, n)?;
    for (lambda, c) in &expansion {
        rb.check_values(format!("coefficient of s_{lambda} is nonnegative"), c, "N[q]", c, c.is_nonneg());
    }
    let terms: Vec<String> = expansion.iter().map(|(l, c)| format!("({c}) s_{l}")).collect();
    rb.note(if terms.is_empty() { "0".to_string() } else { terms.join(" + ") });
    Ok(rb.finish())
}

/// The four reports of one lollipop in a sweep, in a fixed order.
pub fn verify_lollipop(p: MeltingLollipop) -> Result<Vec<VerificationReport>> {
    let n = p.vertex_count();
    let g = p.graph();
    let mut theorem = verify_theorem_1_2(p, n)?;
    let mut forest = verify_forest_identity(p, n)?;
    let mut moebius = verify_moebius_consistency(&g, n)?;
    let mut schur = verify_schur_positivity(&g, n)?;
    for r in [&mut moebius, &mut schur] {
        r.parameters.remove("graph");
        for (key, value) in [("l", p.l), ("m", p.m), ("k", p.k)] {
            r.parameters.insert(key.into(), value.into());
        }
    }
    theorem.claim = format!("theorem {p}");
    forest.claim = format!("forest-identity {p}");
    moebius.claim = format!("moebius-consistency {p}");
    schur.claim = format!("schur-positivity {p}");
    Ok(vec![theorem, forest, moebius, schur])
}

/// Runs `f` on every item with up to `jobs` threads, keeping input order.
pub fn par_map<T: Sync, R: Send>(items: &[T], jobs: usize, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let jobs = jobs.max(1).min(items.len().max(1));
    if jobs == 1 {
        return items.iter().map(f).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<R>>> = Mutex::new((0..items.len()).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= items.len() {
                    break;
                }
                let r = f(&items[i]);
                slots.lock().expect("no worker panicked")[i] = Some(r);
            });
        }
    });
    slots
        .into_inner()
        .expect("no worker panicked")
        .into_iter()
        .map(|r| r.expect("every slot filled"))
        .collect()
}

/// Available cores, or one.
pub fn default_jobs() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

/// Every lollipop check for `l + m <= max_total`, on all cores.
pub fn sweep(max_total: usize) -> Result<Vec<VerificationReport>> {
    sweep_with_jobs(max_total, default_jobs())
}

/// [`sweep`] with at most `jobs` worker threads.
pub fn sweep_with_jobs(max_total: usize, jobs: usize) -> Result<Vec<VerificationReport>> {
    if max_total == 0 {
        return Err(Error::PreconditionViolated("max_total must be positive".into()));
    }
    // biggest cases first so the slowest one does not start last
    let mut params = MeltingLollipop::all_up_to(max_total);
    params.reverse();
    let mut results = par_map(&params, jobs, |&p| verify_lollipop(p));
    results.reverse();
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

/// Folds several reports into one under a new claim.
pub fn aggregate(claim: &str, reports: impl IntoIterator<Item = VerificationReport>) -> VerificationReport {
    let mut rb = ReportBuilder::new(claim);
    let mut cases = 0u64;
    for r in reports {
        cases += 1;
        rb.absorb(r);
    }
    rb.set_param("cases", cases);
    rb.finish()
}

/// The strips realizing a melting lollipop as an LLT graph.
pub fn lollipop_strips(p: MeltingLollipop) -> Result<ShapeSequence> {
    schroder_to_strips(&graph_to_schroder(&p.graph())?)
}

/// A shape sequence of `k` single cells with contents drawn from `0..=max_content`.
pub fn random_unicellular(rng: &mut impl Rng, k: usize, max_content: usize) -> ShapeSequence {
    let shapes = (0..k)
        .map(|_| unicell(rng.gen_range(0..=max_content)))
        .collect();
    ShapeSequence::new(shapes).expect("at least one cell")
}

fn unicell(content: usize) -> SkewShape {
    let part = |v: Vec<usize>| Partition::new(v).expect("a single row");
    SkewShape::new(part(vec![content + 1]), part(vec![content])).expect("one cell")
}

/// Every sequence of `k` single cells with contents in `0..=max_content`.
pub fn all_unicellular(k: usize, max_content: usize) -> Vec<ShapeSequence> {
    let base = max_content + 1;
    (0..base.pow(k as u32))
        .map(|mut code| {
            let shapes = (0..k)
                .map(|_| {
                    let c = code % base;
                    code /= base;
                    unicell(c)
                })
                .collect();
            ShapeSequence::new(shapes).expect("at least one cell")
        })
        .collect()
}

/// Closed and recursive cumulants on every lollipop with `l + m <= max_total`
/// and on `random` seeded unicellular graphs with at most `max_vertices`
/// vertices.
pub fn verify_cumulant_consistency(
    max_total: usize,
    random: usize,
    max_vertices: usize,
    seed: u64,
) -> Result<VerificationReport> {
    let mut rb = ReportBuilder::new("cumulant-consistency")
        .param("max_total", max_total)
        .param("random_graphs", random)
        .param("max_vertices", max_vertices)
        .param("seed", seed);
    let mut graphs: Vec<(String, LltGraph)> = MeltingLollipop::all_up_to(max_total)
        .into_iter()
        .map(|p| (p.to_string(), p.graph()))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random {
        let k = rng.gen_range(1..=max_vertices);
        let seq = random_unicellular(&mut rng, k, 3);
        graphs.push((seq.to_string(), shapes_to_graph(&seq).0));
    }
    let mut connected = 0u64;
    for (name, g) in &graphs {
        let n = g.vertex_count();
        if g.underlying_simple_graph().is_connected() {
            connected += 1;
        }
        // division by (q-1)^(m-1) errors out on a remainder
        let closed = cumulant_of_graph::<BigInt>(g, n)?;
        let recursive = cumulant_recursive::<BigInt>(g, n)?;
        rb.check_equal(format!("closed = recursive on {name}"), &closed, &recursive);
    }
    rb.note(format!("{} graphs, {connected} connected", graphs.len()));
    Ok(rb.finish())
}

/// The disconnected graphs on at most `max_vertices` vertices among Schroder
/// path graphs, unicellular graphs with contents up to 2, melting lollipops,
/// and disjoint unions of two tree-strip graphs.
pub fn disconnected_corpus(max_vertices: usize) -> Vec<LltGraph> {
    let mut seen: BTreeSet<LltGraph> = BTreeSet::new();
    let mut out = Vec::new();
    let mut push = |g: LltGraph| {
        if !g.underlying_simple_graph().is_connected() && seen.insert(g.clone()) {
            out.push(g);
        }
    };
    for m in 1..=max_vertices {
        for p in SchroderPath::all(m) {
            push(schroder_to_graph(&p));
        }
        for seq in all_unicellular(m, 2) {
            push(shapes_to_graph(&seq).0);
        }
    }
    for p in MeltingLollipop::all_up_to(max_vertices) {
        push(p.graph());
    }
    let mut pieces = Vec::new();
    for m in 1..max_vertices {
        for t in plane_trees(m) {
            pieces.push(shapes_to_graph(&nu(&t).shapes).0);
        }
    }
    for a in &pieces {
        for b in &pieces {
            if a.vertex_count() + b.vertex_count() <= max_vertices {
                push(a.disjoint_union(b));
            }
        }
    }
    out
}

pub fn verify_disconnected_corpus(max_vertices: usize) -> Result<VerificationReport> {
    let corpus = disconnected_corpus(max_vertices);
    let mut rb = ReportBuilder::new("disconnected-vanishing").param("max_vertices", max_vertices);
    rb.note(format!("{} disconnected graphs", corpus.len()));
    for g in &corpus {
        rb.absorb(verify_disconnected_vanishing(g, g.vertex_count())?);
    }
    Ok(rb.finish())
}

/// Every local graph relation, standalone and in `trials` random ambient graphs.
pub fn verify_lemma_3_2_suite(trials: usize, seed: u64) -> Result<VerificationReport> {
    let mut rb = ReportBuilder::new("lemma-3.2").param("trials", trials).param("seed", seed);
    for r in LocalRelation::ALL {
        let report = check_lemma_3_2(r, r.pattern_size(), trials, seed)?;
        rb.note(format!("{}: {} checks", r.name(), report.checks));
        rb.absorb(report);
    }
    Ok(rb.finish())
}

/// Both path relations at every admissible position of every Schroder path
/// of size at most `max_m`.
pub fn verify_lemma_4_5_suite(max_m: usize) -> Result<VerificationReport> {
    let mut rb = ReportBuilder::new("lemma-4.5").param("max_m", max_m);
    for m in 1..=max_m {
        let paths = SchroderPath::all(m);
        if let Some(&expected) = LITTLE_SCHRODER.get(m) {
            rb.check_count(format!("Schroder paths of size {m}"), paths.len() as u64, expected);
        }
        for case in [PathRelation::A, PathRelation::B] {
            let mut applied = 0;
            for p in &paths {
                for pos in admissible_positions(case, p) {
                    applied += 1;
                    rb.absorb(check_lemma_4_5(case, p, pos, m)?);
                }
            }
            rb.note(format!("size {m}, case {case:?}: {applied} positions"));
        }
    }
    Ok(rb.finish())
}

/// The six-vertex tree rooted at 1 with children 3, 5, 6, where 5 has children 2 and 4.
pub fn sample_tree() -> LabeledTree {
    LabeledTree::new([(1, 3), (1, 5), (1, 6), (5, 2), (5, 4)]).expect("a tree")
}

/// Round trips and counts of the path, tree and parking-function maps.
pub fn verify_bijections(max_schroder: usize, max_tree: usize, max_parking: usize) -> Result<VerificationReport> {
    let mut rb = ReportBuilder::new("bijections")
        .param("max_schroder", max_schroder)
        .param("max_tree", max_tree)
        .param("max_parking", max_parking);

    for m in 1..=max_schroder {
        let paths = SchroderPath::all(m);
        if let Some(&expected) = LITTLE_SCHRODER.get(m) {
            rb.check_count(format!("Schroder paths of size {m}"), paths.len() as u64, expected);
        }
        let mut graphs = HashSet::new();
        for p in &paths {
            let g = schroder_to_graph(p);
            let back = graph_to_schroder(&g);
            rb.check_values(
                format!("path {p} survives the graph round trip"),
                p.to_string(),
                back.as_ref().map(|b| b.to_string()).map_err(|e| e.to_string()),
                "",
                back.as_ref() == Ok(p),
            );
            let strips = schroder_to_strips(p).map(|s| shapes_to_graph(&s).0);
            rb.check_values(
                format!("strips of {p} give back its graph"),
                p.to_string(),
                strips.as_ref().map_err(|e| e.to_string()),
                "",
                strips.as_ref() == Ok(&g),
            );
            graphs.insert(g);
        }
        rb.check_count(format!("distinct path graphs of size {m}"), graphs.len() as u64, paths.len() as u64);
    }

    for m in 1..=max_tree {
        let trees = plane_trees(m);
        let images: BTreeSet<SchroderPath> = trees.iter().map(tree_to_schroder).collect();
        let expected: BTreeSet<SchroderPath> =
            SchroderPath::all(m).into_iter().filter(SchroderPath::is_tree_path).collect();
        rb.check_count(format!("plane trees on {m} vertices = Catalan"), trees.len() as u64, catalan(m - 1));
        rb.check_count(format!("tree paths of size {m} are distinct"), images.len() as u64, trees.len() as u64);
        let strs = |s: &BTreeSet<SchroderPath>| s.iter().map(|p| p.to_string()).collect::<Vec<_>>();
        rb.check_values(
            format!("tree paths of size {m} = connected paths without outer corner"),
            strs(&images),
            strs(&expected),
            strs(&images.symmetric_difference(&expected).cloned().collect()),
            images == expected,
        );
        let dycks: Result<BTreeSet<SchroderPath>> = images.iter().map(schroder_to_dyck).collect();
        let dycks = dycks?;
        let all_dyck: BTreeSet<SchroderPath> = SchroderPath::dyck_paths(m - 1).into_iter().collect();
        rb.check_values(
            format!("Dyck reduction of size {m} is onto Dyck paths of size {}", m - 1),
            dycks.len(),
            all_dyck.len(),
            "",
            dycks == all_dyck,
        );
        for p in &images {
            let back = dyck_to_schroder(&schroder_to_dyck(p)?)?;
            rb.check_values(format!("Dyck reduction of {p} inverts"), p.to_string(), back.to_string(), "", &back == p);
        }
    }

    for m in 1..=max_parking {
        let trees = spanning_trees(&SimpleGraph::complete(m));
        let mut images: BTreeSet<ParkingFunction> = BTreeSet::new();
        for t in &trees {
            let f = tree_to_parking(t)?;
            let via_parking = shapes_to_graph(&parking_to_strips(&f)?).0;
            let via_tree = shapes_to_graph(&nu_of_tree(t)).0;
            rb.check_values(
                format!("parking function of {:?} has the graph of its strips", t.edges()),
                serde_json::to_value(&via_tree).expect("serializes"),
                serde_json::to_value(&via_parking).expect("serializes"),
                "",
                via_tree == via_parking,
            );
            images.insert(f);
        }
        let all: BTreeSet<ParkingFunction> = parking_functions(m - 1).collect();
        rb.check_count(format!("Cayley trees on {m} vertices"), trees.len() as u64, cayley(m));
        rb.check_count(format!("parking functions on {} cars", m - 1), all.len() as u64, cayley(m));
        rb.check_count(format!("tree to parking is injective on {m} vertices"), images.len() as u64, trees.len() as u64);
        rb.check_values(format!("tree to parking is onto for {m} vertices"), images.len(), all.len(), "", images == all);
    }

    let t = sample_tree();
    let plane = canonical_drawing(&t);
    let strips = nu(&plane);
    rb.check_values(
        "worked tree: strips",
        strips.shapes.to_string(),
        "[(1,1,1)/(1),(1,1),(1),(1,1)/(1)]",
        "",
        strips.shapes.to_string() == "[(1,1,1)/(1),(1,1),(1),(1,1)/(1)]",
    );
    rb.check_values(
        "worked tree: diagonal order",
        &strips.diagonal_order,
        [1, 3, 5, 6, 2, 4],
        "",
        strips.diagonal_order == [1, 3, 5, 6, 2, 4],
    );
    let path = tree_to_schroder(&plane).to_string();
    rb.check_values("worked tree: path", &path, "ndnnedneee", "", path == "ndnnedneee");
    let dyck = schroder_to_dyck(&tree_to_schroder(&plane))?.to_string();
    rb.check_values("worked tree: Dyck path", &dyck, "nnneenneee", "", dyck == "nnneenneee");
    let f = tree_to_parking(&t)?;
    rb.check_values("worked tree: parking function", f.values(), [3, 1, 3, 1, 1], "", f.values() == [3, 1, 3, 1, 1]);
    Ok(rb.finish())
}

/// The two-shape sequence `((3,2)/(1), (1,1))`.
pub fn two_shape_sequence() -> ShapeSequence {
    "[(3,2)/(1),(1,1)]".parse().expect("valid sequence")
}

/// The sequences compared by [`verify_cross_representation`]: strips of all
/// plane trees on at most `max_tree` vertices, strips of all Schroder paths
/// of size at most `max_path`, and the two-shape example.
pub fn cross_representation_corpus(max_tree: usize, max_path: usize) -> Result<Vec<ShapeSequence>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut push = |s: ShapeSequence| {
        if seen.insert(s.clone()) {
            out.push(s);
        }
    };
    for m in 1..=max_tree {
        for t in plane_trees(m) {
            push(nu(&t).shapes);
        }
    }
    for m in 1..=max_path {
        for p in SchroderPath::all(m) {
            push(schroder_to_strips(&p)?);
        }
    }
    push(two_shape_sequence());
    Ok(out)
}

/// `LLT` of each corpus sequence through its cells, through its graph, and
/// (up to `tableau_limit` cells) by listing tableaux.
pub fn verify_cross_representation(max_tree: usize, max_path: usize, tableau_limit: usize) -> Result<VerificationReport> {
    let corpus = cross_representation_corpus(max_tree, max_path)?;
    let mut rb = ReportBuilder::new("cross-representation")
        .param("max_tree", max_tree)
        .param("max_path", max_path)
        .param("tableau_limit", tableau_limit);
    rb.note(format!("{} shape sequences", corpus.len()));
    for seq in &corpus {
        let n = seq.cell_count();
        let by_cells = llt_of_shapes::<BigInt>(seq, n);
        let by_graph = llt_of_graph::<BigInt>(&shapes_to_graph(seq).0, n);
        rb.check_equal(format!("shapes = graph on {seq}"), &by_cells, &by_graph);
        if n <= tableau_limit {
            let by_tableaux = llt_of_shapes_by_tableaux::<BigInt>(seq, n);
            rb.check_equal(format!("shapes = tableaux on {seq}"), &by_cells, &by_tableaux);
        }
    }
    Ok(rb.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lollipop(l: usize, m: usize, k: usize) -> MeltingLollipop {
        MeltingLollipop::new(l, m, k).unwrap()
    }

    #[test]
    fn small_theorem_cases() {
        for (l, m, k) in [(0, 1, 0), (0, 2, 0), (1, 2, 0), (0, 2, 1), (0, 3, 2), (2, 2, 1)] {
            let p = lollipop(l, m, k);
            let r = verify_theorem_1_2(p, l + m).unwrap();
            assert!(r.holds(), "{r}");
        }
        assert!(verify_theorem_1_2(lollipop(1, 2, 0), 2).is_err());
    }

    #[test]
    fn theorem_does_not_depend_on_extra_variables() {
        for p in MeltingLollipop::all_up_to(3) {
            let n = p.vertex_count();
            assert!(verify_theorem_1_2(p, n + 1).unwrap().holds(), "{p}");
        }
    }

    #[test]
    fn isolated_vertex_gives_zero_on_both_sides() {
        let p = lollipop(0, 3, 2);
        let g = p.graph();
        assert!(!g.underlying_simple_graph().is_connected());
        let (sum, trees) = spanning_tree_sum(&g.underlying_simple_graph(), 3);
        assert_eq!(trees, 0);
        assert!(sum.is_zero());
    }

    #[test]
    fn small_corollary_cases() {
        for m in 1..=4 {
            let r = verify_corollary_1_3(m, m).unwrap();
            assert!(r.holds(), "{r}");
        }
    }

    #[test]
    fn schur_examples() {
        let k2 = lollipop(0, 2, 0).graph();
        let e = cumulant_schur_expansion(&k2, 2).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e[&Partition::new(vec![1, 1]).unwrap()], QPoly::one());
        let single = cumulant_schur_expansion(&LltGraph::edgeless(1), 1).unwrap();
        assert_eq!(single[&Partition::new(vec![1]).unwrap()], QPoly::one());
        assert!(verify_schur_positivity(&lollipop(1, 3, 1).graph(), 4).unwrap().holds());
    }

    #[test]
    fn sweep_sizes() {
        let r = sweep_with_jobs(2, 2).unwrap();
        // (0,1,0), (1,1,0), (0,2,0) and the degenerate (0,2,1)
        assert_eq!(r.len(), 4 * 4);
        assert!(r.iter().all(VerificationReport::holds));
        assert_eq!(r[0].parameters["m"], 1);
        assert_eq!(sweep_with_jobs(1, 1).unwrap().len(), 4);
        assert!(sweep(0).is_err());
    }

    #[test]
    fn par_map_keeps_order() {
        let items: Vec<u32> = (0..50).collect();
        assert_eq!(par_map(&items, 4, |x| x * 2), items.iter().map(|x| x * 2).collect::<Vec<_>>());
    }

    #[test]
    fn lollipops_are_realized_by_strips() {
        for p in MeltingLollipop::all_up_to(5) {
            let strips = lollipop_strips(p).unwrap();
            assert_eq!(shapes_to_graph(&strips).0, p.graph(), "{p}");
        }
    }

    #[test]
    fn counting_helpers() {
        assert_eq!((0..8).map(catalan).collect::<Vec<_>>(), vec![1, 1, 2, 5, 14, 42, 132, 429]);
        assert_eq!((1..=6).map(cayley).collect::<Vec<_>>(), vec![1, 1, 3, 16, 125, 1296]);
        assert_eq!(all_unicellular(2, 1).len(), 4);
    }

    #[test]
    fn small_suites() {
        assert!(verify_bijections(3, 4, 3).unwrap().holds());
        assert!(verify_lemma_4_5_suite(3).unwrap().holds());
        assert!(verify_cross_representation(4, 3, 4).unwrap().holds());
        assert!(verify_cumulant_consistency(3, 5, 4, 7).unwrap().holds());
        assert!(verify_disconnected_corpus(3).unwrap().holds());
    }
}
