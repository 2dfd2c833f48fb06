//! LLT graphs: directed graphs with type-I, type-II and double edges whose
//! coloring sums are LLT polynomials.
//!
//! A coloring `f: V -> [n]` is weighted by the product over edges of
//!
//! * type I `(u, v)`: `[f(u) > f(v)]`
//! * type II `(u, v)`: `[f(u) >= f(v)]`
//! * double `(u, v)`: `q` if `f(u) > f(v)`, otherwise `1`
//!
//! times `x_{f(v)}` for every vertex.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::qpoly::Poly;
use crate::report::{ReportBuilder, VerificationReport};
use crate::simple_graph::SimpleGraph;
use crate::symfunc::{partitions_of, Partition, SymFunc};

pub type Edge = (usize, usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    TypeI,
    TypeII,
    Double,
}

/// An LLT graph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LltGraph {
    n: usize,
    e1: BTreeSet<Edge>,
    e2: BTreeSet<Edge>,
    ed: BTreeSet<Edge>,
}

impl LltGraph {
    pub fn new(
        n: usize,
        e1: impl IntoIterator<Item = Edge>,
        e2: impl IntoIterator<Item = Edge>,
        ed: impl IntoIterator<Item = Edge>,
    ) -> Result<Self> {
        let g = LltGraph {
            n,
            e1: e1.into_iter().collect(),
            e2: e2.into_iter().collect(),
            ed: ed.into_iter().collect(),
        };
        g.validate()?;
        Ok(g)
    }

    pub fn edgeless(n: usize) -> Self {
        LltGraph {
            n,
            e1: BTreeSet::new(),
            e2: BTreeSet::new(),
            ed: BTreeSet::new(),
        }
    }

    fn validate(&self) -> Result<()> {
        let mut seen: BTreeSet<(EdgeKind, Edge)> = BTreeSet::new();
        let mut ordered: BTreeSet<Edge> = BTreeSet::new();
        for (kind, set) in self.edge_sets() {
            for &(u, v) in set {
                if u == v || u == 0 || v == 0 || u > self.n || v > self.n {
                    return Err(Error::Invalid(format!(
                        "edge ({u},{v}) is not a non-loop edge on {} vertices",
                        self.n
                    )));
                }
                if !seen.insert((kind, (u.min(v), u.max(v)))) {
                    return Err(Error::Invalid(format!(
                        "two {kind:?} edges between {u} and {v}"
                    )));
                }
                if !ordered.insert((u, v)) {
                    return Err(Error::Invalid(format!(
                        "edge ({u},{v}) appears in more than one edge set"
                    )));
                }
            }
        }
        Ok(())
    }

    fn edge_sets(&self) -> [(EdgeKind, &BTreeSet<Edge>); 3] {
        [
            (EdgeKind::TypeI, &self.e1),
            (EdgeKind::TypeII, &self.e2),
            (EdgeKind::Double, &self.ed),
        ]
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn e1(&self) -> &BTreeSet<Edge> {
        &self.e1
    }

    pub fn e2(&self) -> &BTreeSet<Edge> {
        &self.e2
    }

    pub fn ed(&self) -> &BTreeSet<Edge> {
        &self.ed
    }

    /// All edges tagged with their kind.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeKind, Edge)> + '_ {
        self.edge_sets()
            .into_iter()
            .flat_map(|(k, set)| set.iter().map(move |&e| (k, e)))
    }

    /// Keeps the vertices of `subset` (any order, no repeats), renumbered
    /// `1..=|subset|` in increasing order.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<Self> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut s = subset.to_vec();
        s.sort_unstable();
        s.dedup();
        if s.len() != subset.len() || s[0] == 0 || *s.last().unwrap() > self.n {
            return Err(Error::Invalid(format!(
                "{subset:?} is not a set of vertices of a {}-vertex graph",
                self.n
            )));
        }
        let mut index = vec![0usize; self.n + 1];
        for (i, &v) in s.iter().enumerate() {
            index[v] = i + 1;
        }
        let restrict = |set: &BTreeSet<Edge>| -> BTreeSet<Edge> {
            set.iter()
                .filter(|&&(u, v)| index[u] > 0 && index[v] > 0)
                .map(|&(u, v)| (index[u], index[v]))
                .collect()
        };
        Ok(LltGraph {
            n: s.len(),
            e1: restrict(&self.e1),
            e2: restrict(&self.e2),
            ed: restrict(&self.ed),
        })
    }

    /// Induced subgraph on the vertices whose bit is set (bit `i` is vertex `i + 1`).
    pub fn induced_by_mask(&self, mask: u64) -> Result<Self> {
        let subset: Vec<usize> = (1..=self.n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
        self.induced_subgraph(&subset)
    }

    /// Forgets direction and type.
    pub fn underlying_simple_graph(&self) -> SimpleGraph {
        SimpleGraph::new(self.n, self.edges().map(|(_, e)| e)).expect("edges are valid")
    }

    /// `other` placed on vertices `n+1..`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = |set: &BTreeSet<Edge>| -> BTreeSet<Edge> {
            set.iter().map(|&(u, v)| (u + self.n, v + self.n)).collect()
        };
        let mut out = self.clone();
        out.n += other.n;
        out.e1.extend(shift(&other.e1));
        out.e2.extend(shift(&other.e2));
        out.ed.extend(shift(&other.ed));
        out
    }

    /// Renames vertex `v` to `perm[v - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::Invalid("permutation has the wrong length".into()));
        }
        let map = |set: &BTreeSet<Edge>| -> BTreeSet<Edge> {
            set.iter().map(|&(u, v)| (perm[u - 1], perm[v - 1])).collect()
        };
        LltGraph::new(self.n, map(&self.e1), map(&self.e2), map(&self.ed))
    }

    pub fn without_double_edges(&self) -> Self {
        LltGraph {
            ed: BTreeSet::new(),
            ..self.clone()
        }
    }

    /// Adds an edge, rejecting anything that breaks the graph invariants.
    pub fn with_edge(&self, kind: EdgeKind, e: Edge) -> Result<Self> {
        let mut out = self.clone();
        match kind {
            EdgeKind::TypeI => out.e1.insert(e),
            EdgeKind::TypeII => out.e2.insert(e),
            EdgeKind::Double => out.ed.insert(e),
        };
        out.validate()?;
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct LltGraphJson {
    n: usize,
    e1: Vec<[usize; 2]>,
    e2: Vec<[usize; 2]>,
    ed: Vec<[usize; 2]>,
}

impl Serialize for LltGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let list = |set: &BTreeSet<Edge>| set.iter().map(|&(u, v)| [u, v]).collect();
        LltGraphJson {
            n: self.n,
            e1: list(&self.e1),
            e2: list(&self.e2),
            ed: list(&self.ed),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LltGraph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = LltGraphJson::deserialize(d)?;
        let pairs = |v: Vec<[usize; 2]>| v.into_iter().map(|[a, b]| (a, b)).collect::<Vec<_>>();
        LltGraph::new(raw.n, pairs(raw.e1), pairs(raw.e2), pairs(raw.ed)).map_err(D::Error::custom)
    }
}

/// How the color of a vertex must relate to an earlier-placed neighbour.
#[derive(Debug, Clone, Copy)]
enum Rel {
    Gt,
    Ge,
    Lt,
    Le,
    /// Contributes `q` when the current color is larger.
    QIfGt,
    /// Contributes `q` when the current color is smaller.
    QIfLt,
}

/// A vertex order plus, for each position, the constraints against earlier positions.
struct ColoringPlan {
    order: Vec<usize>,
    constraints: Vec<Vec<(usize, Rel)>>,
    max_q: usize,
}

impl ColoringPlan {
    fn new(g: &LltGraph) -> Self {
        let n = g.n;
        let mut weight = vec![vec![0usize; n + 1]; n + 1];
        for (kind, (u, v)) in g.edges() {
            let w = if kind == EdgeKind::Double { 1 } else { 2 };
            weight[u][v] += w;
            weight[v][u] += w;
        }
        // most-constrained first: each step takes the vertex with the heaviest
        // ties to what is already placed
        let mut placed = vec![false; n + 1];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let best = (1..=n)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let to_placed: usize = order.iter().map(|&p| weight[v][p]).sum();
                    let total: usize = weight[v].iter().sum();
                    (to_placed, total, std::cmp::Reverse(v))
                })
                .expect("a vertex remains");
            placed[best] = true;
            order.push(best);
        }
        let mut pos = vec![0usize; n + 1];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut constraints = vec![Vec::new(); n];
        for (kind, (u, v)) in g.edges() {
            let (pu, pv) = (pos[u], pos[v]);
            // constraint is attached to whichever endpoint is placed later
            let (later, earlier, u_is_later) = if pu > pv { (pu, pv, true) } else { (pv, pu, false) };
            let rel = match (kind, u_is_later) {
                (EdgeKind::TypeI, true) => Rel::Gt,
                (EdgeKind::TypeI, false) => Rel::Lt,
                (EdgeKind::TypeII, true) => Rel::Ge,
                (EdgeKind::TypeII, false) => Rel::Le,
                (EdgeKind::Double, true) => Rel::QIfGt,
                (EdgeKind::Double, false) => Rel::QIfLt,
            };
            constraints[later].push((earlier, rel));
        }
        ColoringPlan {
            order,
            constraints,
            max_q: g.ed.len(),
        }
    }

    /// `Some(q_exponent)` if color `c` at `pos` is compatible with `colors[..pos]`.
    #[inline]
    fn weight(&self, pos: usize, c: usize, colors: &[usize]) -> Option<usize> {
        let mut q = 0;
        for &(e, rel) in &self.constraints[pos] {
            let o = colors[e];
            match rel {
                Rel::Gt if c <= o => return None,
                Rel::Ge if c < o => return None,
                Rel::Lt if c >= o => return None,
                Rel::Le if c > o => return None,
                Rel::QIfGt if c > o => q += 1,
                Rel::QIfLt if c < o => q += 1,
                _ => {}
            }
        }
        Some(q)
    }

    /// Histogram of q-exponents over colorings using color `i` exactly `content[i]` times.
    fn count_with_content(&self, content: &[usize]) -> Vec<u64> {
        let mut hist = vec![0u64; self.max_q + 1];
        let mut remaining = content.to_vec();
        let mut colors = vec![0usize; self.order.len()];
        self.rec_content(0, 0, &mut remaining, &mut colors, &mut hist);
        hist
    }

    fn rec_content(
        &self,
        pos: usize,
        q: usize,
        remaining: &mut [usize],
        colors: &mut [usize],
        hist: &mut [u64],
    ) {
        if pos == colors.len() {
            hist[q] += 1;
            return;
        }
        for c in 0..remaining.len() {
            if remaining[c] == 0 {
                continue;
            }
            if let Some(dq) = self.weight(pos, c, colors) {
                remaining[c] -= 1;
                colors[pos] = c;
                self.rec_content(pos + 1, q + dq, remaining, colors, hist);
                remaining[c] += 1;
            }
        }
    }

    /// Every coloring with colors `0..n`, keyed by exponent vector.
    fn count_all(&self, n: usize) -> BTreeMap<Vec<usize>, Vec<u64>> {
        let mut out = BTreeMap::new();
        let mut colors = vec![0usize; self.order.len()];
        let mut exps = vec![0usize; n];
        self.rec_all(0, 0, n, &mut colors, &mut exps, &mut out);
        out
    }

    fn rec_all(
        &self,
        pos: usize,
        q: usize,
        n: usize,
        colors: &mut [usize],
        exps: &mut [usize],
        out: &mut BTreeMap<Vec<usize>, Vec<u64>>,
    ) {
        if pos == colors.len() {
            out.entry(exps.to_vec())
                .or_insert_with(|| vec![0; self.max_q + 1])[q] += 1;
            return;
        }
        for c in 0..n {
            if let Some(dq) = self.weight(pos, c, colors) {
                colors[pos] = c;
                exps[c] += 1;
                self.rec_all(pos + 1, q + dq, n, colors, exps, out);
                exps[c] -= 1;
            }
        }
    }
}

/// The LLT polynomial of `g` in `n` variables, in the monomial basis.
///
/// The coefficient of `m_lambda` is read off as the coefficient of the single
/// monomial `x^lambda`, so only colorings with that content are visited. This
/// is exact whenever the coloring sum is symmetric, which holds for every
/// graph coming from a sequence of skew shapes; [`coloring_sum`] gives the
/// unreduced polynomial for arbitrary graphs.
pub fn llt_of_graph<C: Coefficient>(g: &LltGraph, n: usize) -> SymFunc<C> {
    let plan = ColoringPlan::new(g);
    let mut out = SymFunc::zero(n);
    for lambda in partitions_of(g.n, n) {
        let hist = plan.count_with_content(lambda.parts());
        out.add_term(lambda, &Poly::from_counts(&hist));
    }
    out
}

/// A polynomial in `x_1..x_n` (not necessarily symmetric) with coefficients in `C[q]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ColoringSum<C: Coefficient> {
    num_vars: usize,
    terms: BTreeMap<Vec<usize>, Poly<C>>,
}

impl<C: Coefficient> ColoringSum<C> {
    pub fn zero(num_vars: usize) -> Self {
        ColoringSum {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, Poly<C>> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, exps: Vec<usize>, c: &Poly<C>) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Poly::constant(-C::one())))
    }

    pub fn scale(&self, c: &Poly<C>) -> Self {
        let mut out = Self::zero(self.num_vars);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), &(a * c));
        }
        out
    }

    /// True iff every rearrangement of an exponent vector has the same coefficient.
    pub fn is_symmetric(&self) -> bool {
        let mut by_orbit: BTreeMap<Partition, (&Poly<C>, u64)> = BTreeMap::new();
        for (e, c) in &self.terms {
            let key = Partition::from_exponents(e);
            match by_orbit.get_mut(&key) {
                Some((c0, count)) => {
                    if *c0 != c {
                        return false;
                    }
                    *count += 1;
                }
                None => {
                    by_orbit.insert(key, (c, 1));
                }
            }
        }
        by_orbit
            .iter()
            .all(|(lambda, (_, count))| *count == lambda.orbit_size(self.num_vars))
    }

    /// Collapses to the monomial basis; `None` if the polynomial is not symmetric.
    pub fn to_symmetric(&self) -> Option<SymFunc<C>> {
        if !self.is_symmetric() {
            return None;
        }
        let mut out = SymFunc::zero(self.num_vars);
        for (e, c) in &self.terms {
            if e.windows(2).all(|w| w[0] >= w[1]) {
                out.add_term(Partition::from_exponents(e), c);
            }
        }
        Some(out)
    }
}

impl<C: Coefficient> Serialize for ColoringSum<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            exponents: &'a [usize],
            q_coeffs: Vec<String>,
        }
        #[derive(Serialize)]
        struct Body<'a> {
            num_vars: usize,
            terms: Vec<Term<'a>>,
        }
        Body {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| Term {
                    exponents: e,
                    q_coeffs: c.coeffs().iter().map(|x| x.to_string()).collect(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

/// The full coloring sum of `g` with colors `1..=n`, one term per exponent vector.
pub fn coloring_sum<C: Coefficient>(g: &LltGraph, n: usize) -> ColoringSum<C> {
    let plan = ColoringPlan::new(g);
    let mut out = ColoringSum::zero(n);
    for (exps, hist) in plan.count_all(n) {
        out.add_term(exps, &Poly::from_counts(&hist));
    }
    out
}

/// The LLT polynomial from the full coloring sum, refusing graphs whose sum
/// is not symmetric (and so has no monomial-basis expansion).
pub fn llt_of_graph_checked<C: Coefficient>(g: &LltGraph, n: usize) -> Result<SymFunc<C>> {
    coloring_sum::<C>(g, n).to_symmetric().ok_or_else(|| {
        Error::Invalid(format!(
            "the coloring sum of this graph in {n} variables is not symmetric"
        ))
    })
}

/// The melting lollipop: a path of `l` double edges ending in a vertex of a
/// double-edge clique on `m` vertices, with `k` clique edges at that vertex erased.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MeltingLollipop {
    pub l: usize,
    pub m: usize,
    pub k: usize,
}

impl MeltingLollipop {
    pub fn new(l: usize, m: usize, k: usize) -> Result<Self> {
        if m == 0 || k >= m {
            return Err(Error::Invalid(format!(
                "melting lollipop needs m >= 1 and k <= m - 1 (got l={l}, m={m}, k={k})"
            )));
        }
        Ok(MeltingLollipop { l, m, k })
    }

    pub fn vertex_count(&self) -> usize {
        self.l + self.m
    }

    /// Every valid parameter triple with `l + m <= max_total`, ordered by `(l + m, l, m, k)`.
    pub fn all_up_to(max_total: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for total in 1..=max_total {
            for l in 0..total {
                let m = total - l;
                for k in 0..m {
                    out.push(MeltingLollipop { l, m, k });
                }
            }
        }
        out
    }

    pub fn graph(&self) -> LltGraph {
        let (l, m, k) = (self.l, self.m, self.k);
        let mut ed: BTreeSet<Edge> = (1..=l).map(|i| (i, i + 1)).collect();
        for i in l + 1..=l + m {
            for j in i + 1..=l + m {
                let erased = i == l + 1 && j > l + m - k;
                if !erased {
                    ed.insert((i, j));
                }
            }
        }
        LltGraph {
            n: l + m,
            e1: BTreeSet::new(),
            e2: BTreeSet::new(),
            ed,
        }
    }
}

impl std::fmt::Display for MeltingLollipop {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "L^({})_({},{})", self.k, self.l, self.m)
    }
}

/// Summands `(coefficient, pattern edges)` of one side of a local relation.
type Side<C> = Vec<(Poly<C>, Vec<(EdgeKind, Edge)>)>;

/// The local graph relations checked by [`check_lemma_3_2`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LocalRelation {
    /// no edge = type I + reversed type II
    #[serde(rename = "1a")]
    OneA,
    /// double = q * type I + reversed type II
    #[serde(rename = "1b")]
    OneB,
    /// double = (q - 1) * type I + no edge
    #[serde(rename = "1c")]
    OneC,
    /// transitive type-I triangle = type-I path
    #[serde(rename = "2_typeI")]
    TwoTypeI,
    /// transitive type-II triangle = type-II path
    #[serde(rename = "2_typeII")]
    TwoTypeII,
    /// a directed I/II cycle with a type-I edge kills the polynomial
    #[serde(rename = "3")]
    Three,
}

impl LocalRelation {
    pub const ALL: [LocalRelation; 6] = [
        LocalRelation::OneA,
        LocalRelation::OneB,
        LocalRelation::OneC,
        LocalRelation::TwoTypeI,
        LocalRelation::TwoTypeII,
        LocalRelation::Three,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            LocalRelation::OneA => "1a",
            LocalRelation::OneB => "1b",
            LocalRelation::OneC => "1c",
            LocalRelation::TwoTypeI => "2_typeI",
            LocalRelation::TwoTypeII => "2_typeII",
            LocalRelation::Three => "3",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|r| r.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown relation {s:?}")))
    }

    /// Vertices in the pattern of the relation.
    pub fn pattern_size(&self) -> usize {
        match self {
            LocalRelation::OneA | LocalRelation::OneB | LocalRelation::OneC => 2,
            _ => 3,
        }
    }

    /// `(coefficient, pattern edges)` summands for each side, on pattern
    /// vertices `p[0], p[1], p[2]`.
    fn sides<C: Coefficient>(&self, p: &[usize]) -> [Side<C>; 2] {
        use EdgeKind::*;
        let one = Poly::one();
        let q = Poly::q();
        let qm1 = Poly::q_minus_one();
        let (u, v) = (p[0], p[1]);
        match self {
            LocalRelation::OneA => [
                vec![(one.clone(), vec![])],
                vec![(one.clone(), vec![(TypeI, (u, v))]), (one, vec![(TypeII, (v, u))])],
            ],
            LocalRelation::OneB => [
                vec![(one.clone(), vec![(Double, (u, v))])],
                vec![(q, vec![(TypeI, (u, v))]), (one, vec![(TypeII, (v, u))])],
            ],
            LocalRelation::OneC => [
                vec![(one.clone(), vec![(Double, (u, v))])],
                vec![(qm1, vec![(TypeI, (u, v))]), (one, vec![])],
            ],
            LocalRelation::TwoTypeI | LocalRelation::TwoTypeII => {
                let kind = if *self == LocalRelation::TwoTypeI { TypeI } else { TypeII };
                let w = p[2];
                [
                    vec![(one.clone(), vec![(kind, (u, v)), (kind, (u, w)), (kind, (v, w))])],
                    vec![(one, vec![(kind, (u, v)), (kind, (v, w))])],
                ]
            }
            LocalRelation::Three => {
                let w = p[2];
                [
                    vec![(one, vec![(TypeI, (u, v)), (TypeII, (v, w)), (TypeII, (w, u))])],
                    vec![],
                ]
            }
        }
    }
}

fn evaluate_side<C: Coefficient>(
    ambient: &LltGraph,
    side: &Side<C>,
    n: usize,
) -> Result<ColoringSum<C>> {
    let mut out = ColoringSum::zero(n);
    for (coeff, edges) in side {
        let mut g = ambient.clone();
        for &(kind, e) in edges {
            g = g.with_edge(kind, e)?;
        }
        out = out.add(&coloring_sum::<C>(&g, n).scale(coeff));
    }
    Ok(out)
}

/// A random LLT graph on `size` vertices with no edge between two vertices of `pattern`.
fn random_ambient(rng: &mut ChaCha8Rng, size: usize, pattern: &[usize]) -> LltGraph {
    let mut g = LltGraph::edgeless(size);
    for a in 1..=size {
        for b in a + 1..=size {
            if pattern.contains(&a) && pattern.contains(&b) {
                continue;
            }
            let (u, v) = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
            match rng.gen_range(0..4) {
                0 => {}
                1 => {
                    g.e1.insert((u, v));
                }
                2 => {
                    g.e2.insert((u, v));
                }
                _ => {
                    g.ed.insert((u, v));
                }
            }
        }
    }
    g
}

/// Checks one local relation on its bare pattern graph with `n` colors, then
/// inside `trials` random ambient graphs (two extra vertices, colors = vertex
/// count) whose edges off the pattern are shared by both sides.
pub fn check_lemma_3_2(
    relation: LocalRelation,
    n: usize,
    trials: usize,
    seed: u64,
) -> Result<VerificationReport> {
    type C = num_bigint::BigInt;
    let size = relation.pattern_size();
    if n < size {
        return Err(Error::PreconditionViolated(format!(
            "relation {} needs at least {size} colors",
            relation.name()
        )));
    }
    let mut rb = ReportBuilder::new(format!("lemma-3.2({})", relation.name()))
        .param("n", n)
        .param("trials", trials)
        .param("seed", seed);

    let bare_pattern: Vec<usize> = (1..=size).collect();
    let [lhs, rhs] = relation.sides::<C>(&bare_pattern);
    let bare = LltGraph::edgeless(size);
    let l = evaluate_side(&bare, &lhs, n)?;
    let r = evaluate_side(&bare, &rhs, n)?;
    check_coloring_sums(&mut rb, "standalone", &l, &r);
    // standalone, the sums are symmetric and the monomial-basis route applies too
    if let (Some(ls), Some(rs)) = (l.to_symmetric(), r.to_symmetric()) {
        rb.check_equal("standalone (monomial basis)", &ls, &rs);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ambient_size = size + 2;
    for t in 0..trials {
        let mut verts: Vec<usize> = (1..=ambient_size).collect();
        for i in (1..verts.len()).rev() {
            let j = rng.gen_range(0..=i);
            verts.swap(i, j);
        }
        let pattern = &verts[..size];
        let ambient = random_ambient(&mut rng, ambient_size, pattern);
        let [lhs, rhs] = relation.sides::<C>(pattern);
        let l = evaluate_side(&ambient, &lhs, ambient_size)?;
        let r = evaluate_side(&ambient, &rhs, ambient_size)?;
        check_coloring_sums(&mut rb, &format!("embedded trial {t}"), &l, &r);
    }
    Ok(rb.finish())
}

fn check_coloring_sums<C: Coefficient>(
    rb: &mut ReportBuilder,
    label: &str,
    l: &ColoringSum<C>,
    r: &ColoringSum<C>,
) {
    let diff = l.sub(r);
    rb.check_values(label, l, r, &diff, diff.is_zero());
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type S = SymFunc<BigInt>;
    type P = Poly<BigInt>;

    fn m(p: &[usize], c: &[i64], n: usize) -> S {
        S::monomial(Partition::new(p.to_vec()).unwrap(), P::from_i64s(c), n)
    }

    #[test]
    fn graph_validation() {
        assert!(LltGraph::new(2, [(1, 1)], [], []).is_err());
        assert!(LltGraph::new(2, [(1, 2)], [], [(1, 2)]).is_err());
        assert!(LltGraph::new(2, [(1, 2), (2, 1)], [], []).is_err());
        assert!(LltGraph::new(2, [(1, 3)], [], []).is_err());
        assert!(LltGraph::new(2, [(1, 2)], [(2, 1)], []).is_ok());
    }

    #[test]
    fn llt_examples() {
        let d = LltGraph::new(2, [], [], [(1, 2)]).unwrap();
        assert_eq!(llt_of_graph::<BigInt>(&d, 2), &m(&[2], &[1], 2) + &m(&[1, 1], &[1, 1], 2));
        let t1 = LltGraph::new(2, [(1, 2)], [], []).unwrap();
        assert_eq!(llt_of_graph::<BigInt>(&t1, 2), m(&[1, 1], &[1], 2));
        let free = LltGraph::edgeless(2);
        assert_eq!(llt_of_graph::<BigInt>(&free, 2), &m(&[2], &[1], 2) + &m(&[1, 1], &[2], 2));
    }

    #[test]
    fn monomial_extraction_matches_full_sum() {
        let g = LltGraph::new(4, [(1, 3)], [(4, 2)], [(1, 2), (2, 3), (3, 4)]).unwrap();
        let full = coloring_sum::<BigInt>(&g, 4);
        assert!(full.is_symmetric());
        assert_eq!(full.to_symmetric().unwrap(), llt_of_graph(&g, 4));
    }

    #[test]
    fn non_symmetric_sum_is_detected() {
        // f(1) > f(2) >= f(3): x_2 x_1^2 occurs, x_1 x_2^2 does not
        let g = LltGraph::new(3, [(1, 2)], [(2, 3)], []).unwrap();
        let full = coloring_sum::<BigInt>(&g, 3);
        assert!(!full.is_symmetric());
        assert!(llt_of_graph_checked::<BigInt>(&g, 3).is_err());
        assert!(full.to_symmetric().is_none());
        assert!(coloring_sum::<BigInt>(&LltGraph::edgeless(2), 2).is_symmetric());
    }

    #[test]
    fn lollipop_graphs() {
        let g = MeltingLollipop::new(3, 5, 2).unwrap().graph();
        assert_eq!(g.vertex_count(), 8);
        let mut ed: BTreeSet<Edge> = [(1, 2), (2, 3), (3, 4)].into_iter().collect();
        for i in 4..=8 {
            for j in i + 1..=8 {
                ed.insert((i, j));
            }
        }
        ed.remove(&(4, 8));
        ed.remove(&(4, 7));
        assert_eq!(g.ed(), &ed);
        assert!(g.e1().is_empty() && g.e2().is_empty());

        let single = MeltingLollipop::new(0, 1, 0).unwrap().graph();
        assert_eq!(single, LltGraph::edgeless(1));
        let k3 = MeltingLollipop::new(0, 3, 0).unwrap().graph();
        assert_eq!(k3.ed().iter().copied().collect::<Vec<_>>(), vec![(1, 2), (1, 3), (2, 3)]);
        assert!(MeltingLollipop::new(0, 0, 0).is_err());
        assert!(MeltingLollipop::new(1, 2, 2).is_err());
        // k ranges over 0..m, so (0,2,1) is included
        assert_eq!(MeltingLollipop::all_up_to(2).len(), 4);
        assert_eq!(MeltingLollipop::all_up_to(7).len(), 84);
    }

    #[test]
    fn induced_subgraphs() {
        let k3 = MeltingLollipop::new(0, 3, 0).unwrap().graph();
        let sub = k3.induced_subgraph(&[1, 3]).unwrap();
        assert_eq!(sub, LltGraph::new(2, [], [], [(1, 2)]).unwrap());
        assert_eq!(k3.induced_subgraph(&[1, 2, 3]).unwrap(), k3);
        assert_eq!(k3.induced_subgraph(&[]), Err(Error::EmptySubset));
        let g = MeltingLollipop::new(0, 4, 1).unwrap().graph();
        assert_eq!(g.induced_subgraph(&[1, 2, 3]).unwrap(), k3);
    }

    #[test]
    fn simple_graphs() {
        let d = LltGraph::new(2, [], [], [(1, 2)]).unwrap();
        assert_eq!(d.underlying_simple_graph(), SimpleGraph::complete(2));
        assert!(LltGraph::edgeless(3).underlying_simple_graph().edges().is_empty());
    }

    #[test]
    fn json_round_trip() {
        let g = LltGraph::new(3, [(1, 2)], [(3, 1)], [(2, 3)]).unwrap();
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"n":3,"e1":[[1,2]],"e2":[[3,1]],"ed":[[2,3]]}"#);
        assert_eq!(serde_json::from_str::<LltGraph>(&s).unwrap(), g);
        assert!(serde_json::from_str::<LltGraph>(r#"{"n":1,"e1":[[1,1]],"e2":[],"ed":[]}"#).is_err());
    }

    #[test]
    fn local_relations_standalone() {
        for rel in LocalRelation::ALL {
            let r = check_lemma_3_2(rel, 3, 0, 1).unwrap();
            assert!(r.holds(), "{rel:?}: {r}");
        }
        let r = check_lemma_3_2(LocalRelation::OneC, 2, 0, 1).unwrap();
        assert!(r.holds());
        assert!(check_lemma_3_2(LocalRelation::Three, 2, 0, 1).is_err());
    }

    #[test]
    fn directed_cycle_vanishes() {
        let g = LltGraph::new(3, [(1, 2)], [(2, 3), (3, 1)], []).unwrap();
        assert!(llt_of_graph::<BigInt>(&g, 3).is_zero());
    }
}
