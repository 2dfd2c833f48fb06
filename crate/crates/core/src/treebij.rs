//! Plane trees, the `nu` map to vertical strips, Schroder and Dyck paths,
//! parking functions, and the bijections between them.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lltgraph::{llt_of_graph, Edge, LltGraph};
use crate::qpoly::Poly;
use crate::report::{ReportBuilder, VerificationReport};
use crate::shapes::{shapes_to_graph, Cell, ShapeSequence, SkewShape};
use crate::simple_graph::{SimpleGraph, UnionFind};

/// A rooted tree with ordered children on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PlaneTree {
    root: usize,
    /// `children[v - 1]`, left to right.
    children: Vec<Vec<usize>>,
}

impl PlaneTree {
    pub fn new(root: usize, children: Vec<Vec<usize>>) -> Result<Self> {
        let n = children.len();
        let t = PlaneTree { root, children };
        let mut seen = vec![false; n + 1];
        let mut stack = vec![root];
        let mut count = 0;
        while let Some(v) = stack.pop() {
            if v == 0 || v > n || seen[v] {
                return Err(Error::Invalid(format!("vertex {v} is out of range or reached twice")));
            }
            seen[v] = true;
            count += 1;
            stack.extend(t.children[v - 1].iter().copied());
        }
        if count != n {
            return Err(Error::Invalid("not every vertex is reachable from the root".into()));
        }
        Ok(t)
    }

    pub fn single() -> Self {
        PlaneTree {
            root: 1,
            children: vec![vec![]],
        }
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn vertex_count(&self) -> usize {
        self.children.len()
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v - 1]
    }

    /// Edge distance from the root, indexed by vertex (index 0 unused).
    pub fn depths(&self) -> Vec<usize> {
        let mut depth = vec![0; self.vertex_count() + 1];
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            for &c in self.children(v) {
                depth[c] = depth[v] + 1;
                stack.push(c);
            }
        }
        depth
    }

    /// Vertices in preorder.
    pub fn preorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.vertex_count());
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            out.push(v);
            stack.extend(self.children(v).iter().rev().copied());
        }
        out
    }

    /// The same tree with vertices renamed `1..=n` in preorder.
    pub fn relabel_preorder(&self) -> Self {
        let order = self.preorder();
        let mut name = vec![0; self.vertex_count() + 1];
        for (i, &v) in order.iter().enumerate() {
            name[v] = i + 1;
        }
        let mut children = vec![Vec::new(); self.vertex_count()];
        for &v in &order {
            children[name[v] - 1] = self.children(v).iter().map(|&c| name[c]).collect();
        }
        PlaneTree { root: 1, children }
    }

    /// Builds the plane tree read off a Dyck word (`true` = step down to a new child).
    fn from_dyck_word(word: &[bool]) -> Self {
        let mut children: Vec<Vec<usize>> = vec![vec![]];
        let mut stack = vec![1];
        for &down in word {
            if down {
                children.push(vec![]);
                let v = children.len();
                children[stack.last().unwrap() - 1].push(v);
                stack.push(v);
            } else {
                stack.pop();
            }
        }
        PlaneTree { root: 1, children }
    }
}

/// Every plane tree with `m` vertices, labelled in preorder; Catalan(m - 1) of them.
pub fn plane_trees(m: usize) -> Vec<PlaneTree> {
    fn rec(open: usize, close: usize, word: &mut Vec<bool>, out: &mut Vec<PlaneTree>) {
        if open == 0 && close == 0 {
            out.push(PlaneTree::from_dyck_word(word));
            return;
        }
        if open > 0 {
            word.push(true);
            rec(open - 1, close + 1, word, out);
            word.pop();
        }
        if close > 0 {
            word.push(false);
            rec(open, close - 1, word, out);
            word.pop();
        }
    }
    if m == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(m - 1, 0, &mut Vec::new(), &mut out);
    out
}

/// A tree on the vertex set `[n]`, serialized as its edge list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledTree {
    n: usize,
    edges: BTreeSet<Edge>,
}

impl LabeledTree {
    /// The vertex set is `[edges + 1]`.
    pub fn new(edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let list: Vec<Edge> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        let edges: BTreeSet<Edge> = list.iter().copied().collect();
        if edges.len() != list.len() {
            return Err(Error::Invalid("repeated edge".into()));
        }
        let n = edges.len() + 1;
        let mut uf = UnionFind::new(n + 1);
        for &(u, v) in &edges {
            if u == v || u == 0 || v > n {
                return Err(Error::Invalid(format!("edge {{{u},{v}}} does not fit a tree on [{n}]")));
            }
            if !uf.union(u, v) {
                return Err(Error::Invalid(format!("edge {{{u},{v}}} closes a cycle")));
            }
        }
        Ok(LabeledTree { n, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }
}

impl Serialize for LabeledTree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let list: Vec<[usize; 2]> = self.edges.iter().map(|&(u, v)| [u, v]).collect();
        list.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LabeledTree {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let list = Vec::<[usize; 2]>::deserialize(d)?;
        LabeledTree::new(list.into_iter().map(|[u, v]| (u, v))).map_err(D::Error::custom)
    }
}

/// Roots at the smallest label and orders every child list increasingly.
pub fn canonical_drawing(t: &LabeledTree) -> PlaneTree {
    let adj = t.adjacency();
    let mut children = vec![Vec::new(); t.n];
    let mut seen = vec![false; t.n + 1];
    let mut queue = VecDeque::from([1]);
    seen[1] = true;
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                children[v - 1].push(w);
                queue.push_back(w);
            }
        }
    }
    PlaneTree { root: 1, children }
}

/// Splits the tree into vertical paths `W_1, ..., W_k`.
///
/// `W_1` runs from the root down the left-most branch. Each later path starts
/// at an uncovered neighbour of the latest path that still has one, choosing
/// the deepest such neighbour and the left-most among equals, and continues
/// down left-most children to a leaf.
pub fn path_decomposition(t: &PlaneTree) -> Vec<Vec<usize>> {
    let depth = t.depths();
    let mut covered = vec![false; t.vertex_count() + 1];
    let descend = |start: usize, covered: &mut Vec<bool>| {
        let mut path = vec![start];
        covered[start] = true;
        let mut v = start;
        while let Some(&c) = t.children(v).first() {
            path.push(c);
            covered[c] = true;
            v = c;
        }
        path
    };
    let mut paths = vec![descend(t.root, &mut covered)];
    loop {
        let mut next = None;
        for path in paths.iter().rev() {
            // uncovered neighbours of a path are children of its vertices;
            // the deepest sit under the deepest path vertex that has any
            let start = path
                .iter()
                .rev()
                .find_map(|&v| t.children(v).iter().copied().find(|&c| !covered[c]));
            if start.is_some() {
                next = start;
                break;
            }
        }
        match next {
            Some(s) => {
                let p = descend(s, &mut covered);
                paths.push(p);
            }
            None => break,
        }
    }
    debug_assert!(paths.iter().map(Vec::len).sum::<usize>() == t.vertex_count());
    debug_assert!(paths.iter().flatten().all(|&v| depth[v] < t.vertex_count()));
    paths
}

/// The vertical strips of a plane tree together with the cell of every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Nu {
    pub shapes: ShapeSequence,
    pub paths: Vec<Vec<usize>>,
    /// `cell_of[v - 1]` is the cell occupied by vertex `v`.
    pub cell_of: Vec<Cell>,
    /// Vertices in increasing shifted content of their cells.
    pub diagonal_order: Vec<usize>,
}

/// `nu(T) = ((1^{s_i}) / (1^{t_i}))_i` over the path decomposition, with
/// `s_i = H - depth(top of W_i)`, `t_i = s_i - |W_i|`, depth counted in edges
/// and `H` one more than the largest depth.
pub fn nu(t: &PlaneTree) -> Nu {
    let depth = t.depths();
    let height = 1 + (1..=t.vertex_count()).map(|v| depth[v]).max().unwrap_or(0);
    let paths = path_decomposition(t);
    let mut shapes = Vec::with_capacity(paths.len());
    let mut cell_of = vec![Cell { shape: 0, x: 0, y: 0 }; t.vertex_count()];
    for (i, w) in paths.iter().enumerate() {
        let s = height - depth[w[0]];
        let bottom = s - w.len();
        shapes.push(SkewShape::vertical_strip(s, bottom).expect("strip is well formed"));
        for &v in w {
            // content depth - H + 1 in a single column means row H - depth
            cell_of[v - 1] = Cell {
                shape: i + 1,
                x: 1,
                y: height - depth[v],
            };
        }
    }
    let shapes = ShapeSequence::new(shapes).expect("a tree has a vertex");
    let mut diagonal_order: Vec<usize> = (1..=t.vertex_count()).collect();
    diagonal_order.sort_by_key(|&v| shapes.shifted_content(&cell_of[v - 1]));
    Nu {
        shapes,
        paths,
        cell_of,
        diagonal_order,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    N,
    E,
    D,
}

impl Step {
    fn letter(self) -> char {
        match self {
            Step::N => 'n',
            Step::E => 'e',
            Step::D => 'd',
        }
    }
}

/// A lattice path from `(0,0)` to `(m,m)` with steps `n`, `e`, `d` that stays
/// weakly above the diagonal and takes no `d` step from a diagonal point.
/// Paths without `d` steps double as Dyck paths; the empty path has length 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchroderPath {
    steps: Vec<Step>,
    m: usize,
}

impl SchroderPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let (mut x, mut y) = (0usize, 0usize);
        for (i, &s) in steps.iter().enumerate() {
            match s {
                Step::N => y += 1,
                Step::E => x += 1,
                Step::D => {
                    if x == y {
                        return Err(Error::Invalid(format!(
                            "diagonal step {} starts on the diagonal at ({x},{y})",
                            i + 1
                        )));
                    }
                    x += 1;
                    y += 1;
                }
            }
            if x > y {
                return Err(Error::Invalid(format!("step {} falls below the diagonal", i + 1)));
            }
        }
        if x != y {
            return Err(Error::Invalid(format!("path ends at ({x},{y}), off the diagonal")));
        }
        Ok(SchroderPath { steps, m: x })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// `m`, where the path ends at `(m, m)`.
    pub fn size(&self) -> usize {
        self.m
    }

    pub fn is_dyck(&self) -> bool {
        !self.steps.contains(&Step::D)
    }

    /// Lattice points visited, starting with `(0,0)`.
    pub fn points(&self) -> Vec<(usize, usize)> {
        let mut pts = vec![(0, 0)];
        let (mut x, mut y) = (0, 0);
        for &s in &self.steps {
            match s {
                Step::N => y += 1,
                Step::E => x += 1,
                Step::D => {
                    x += 1;
                    y += 1;
                }
            }
            pts.push((x, y));
        }
        pts
    }

    /// `(h(i), step)` for columns `i = 1..=m`: the height at which the path
    /// crosses the column, and whether it does so by an east or a diagonal step.
    pub fn columns(&self) -> Vec<(usize, Step)> {
        let mut out = Vec::with_capacity(self.m);
        let mut y = 0;
        for &s in &self.steps {
            match s {
                Step::N => y += 1,
                _ => {
                    out.push((y, s));
                    if s == Step::D {
                        y += 1;
                    }
                }
            }
        }
        out
    }

    pub fn heights(&self) -> Vec<usize> {
        self.columns().into_iter().map(|(h, _)| h).collect()
    }

    /// Touches the diagonal only at its endpoints.
    pub fn is_connected(&self) -> bool {
        let pts = self.points();
        pts[1..pts.len() - 1].iter().all(|&(x, y)| x != y)
    }

    /// An east step immediately followed by a north step.
    pub fn has_outer_corner(&self) -> bool {
        self.steps.windows(2).any(|w| w == [Step::E, Step::N])
    }

    /// The three conditions characterising the paths of plane trees. The
    /// second one, "starts with n then d", is void for the path of size 1.
    pub fn is_tree_path(&self) -> bool {
        self.m >= 1
            && self.is_connected()
            && (self.m == 1 || self.steps[..2] == [Step::N, Step::D])
            && !self.has_outer_corner()
    }

    /// Every path of size `m`, in lexicographic order of `n < d < e`.
    pub fn all(m: usize) -> Vec<Self> {
        Self::enumerate(m, true)
    }

    /// Every Dyck path of size `m`.
    pub fn dyck_paths(m: usize) -> Vec<Self> {
        Self::enumerate(m, false)
    }

    fn enumerate(m: usize, diagonals: bool) -> Vec<Self> {
        fn rec(x: usize, y: usize, m: usize, diagonals: bool, cur: &mut Vec<Step>, out: &mut Vec<SchroderPath>) {
            if x == m && y == m {
                out.push(SchroderPath { steps: cur.clone(), m });
                return;
            }
            if y < m {
                cur.push(Step::N);
                rec(x, y + 1, m, diagonals, cur, out);
                cur.pop();
            }
            if diagonals && y > x && y < m {
                cur.push(Step::D);
                rec(x + 1, y + 1, m, diagonals, cur, out);
                cur.pop();
            }
            if x < y {
                cur.push(Step::E);
                rec(x + 1, y, m, diagonals, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(0, 0, m, diagonals, &mut Vec::new(), &mut out);
        out
    }

    fn splice(&self, at: usize, remove: usize, insert: &[Step]) -> Result<Self> {
        let mut steps = self.steps[..at].to_vec();
        steps.extend_from_slice(insert);
        steps.extend_from_slice(&self.steps[at + remove..]);
        SchroderPath::new(steps)
    }
}

impl fmt::Display for SchroderPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl FromStr for SchroderPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c.to_ascii_lowercase() {
                'n' => Ok(Step::N),
                'e' => Ok(Step::E),
                'd' => Ok(Step::D),
                other => Err(Error::Parse(format!("unknown step {other:?} in {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        SchroderPath::new(steps)
    }
}

impl Serialize for SchroderPath {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SchroderPath {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

/// Type-I edges at the boxes crossed by diagonal steps, double edges at the
/// boxes `(i, j)`, `i < j`, under the path.
pub fn schroder_to_graph(p: &SchroderPath) -> LltGraph {
    let mut e1 = Vec::new();
    let mut ed = Vec::new();
    for (idx, (h, step)) in p.columns().into_iter().enumerate() {
        let i = idx + 1;
        ed.extend((i + 1..=h).map(|j| (i, j)));
        if step == Step::D {
            e1.push((i, h + 1));
        }
    }
    LltGraph::new(p.size(), e1, [], ed).expect("path boxes give a valid graph")
}

/// Inverse of [`schroder_to_graph`].
pub fn graph_to_schroder(g: &LltGraph) -> Result<SchroderPath> {
    let m = g.vertex_count();
    if let Some(&(u, v)) = g.e2().iter().next() {
        return Err(Error::NotAPathGraph(format!("type-II edge ({u},{v})")));
    }
    if let Some(&(u, v)) = g.e1().iter().chain(g.ed()).find(|&&(u, v)| u > v) {
        return Err(Error::NotAPathGraph(format!("box ({u},{v}) lies below the diagonal")));
    }
    let mut steps = Vec::with_capacity(2 * m);
    let mut y = 0;
    for i in 1..=m {
        let h = g.ed().range((i, 0)..(i + 1, 0)).map(|&(_, j)| j).max().unwrap_or(i);
        let mut diagonal = g.e1().range((i, 0)..(i + 1, 0));
        let step = match (diagonal.next(), diagonal.next()) {
            (None, _) => Step::E,
            (Some(&(_, j)), None) if j == h + 1 => Step::D,
            (Some(&(_, j)), _) => {
                return Err(Error::NotAPathGraph(format!(
                    "box ({i},{j}) cannot carry the diagonal step of column {i}"
                )))
            }
        };
        if h < y {
            return Err(Error::NotAPathGraph(format!("column {i} is lower than column {}", i - 1)));
        }
        steps.extend(std::iter::repeat_n(Step::N, h - y));
        steps.push(step);
        y = h + usize::from(step == Step::D);
    }
    steps.extend(std::iter::repeat_n(Step::N, m.saturating_sub(y)));
    let p = SchroderPath::new(steps).map_err(|e| Error::NotAPathGraph(e.to_string()))?;
    let back = schroder_to_graph(&p);
    if &back != g {
        let first = g
            .edges()
            .map(|(_, e)| e)
            .find(|e| !back.ed().contains(e) && !back.e1().contains(e))
            .or_else(|| back.edges().map(|(_, e)| e).find(|e| !g.ed().contains(e) && !g.e1().contains(e)))
            .unwrap_or((0, 0));
        return Err(Error::NotAPathGraph(format!(
            "box ({},{}) breaks the staircase shape",
            first.0, first.1
        )));
    }
    Ok(p)
}

/// A canonical sequence of vertical strips whose graph is the graph of `p`.
///
/// Contents are assigned vertex by vertex: a double edge to the previous
/// vertex keeps the content when possible, a type-I edge raises it by one and
/// otherwise it rises by one, falling back to the alternatives if the shape
/// order cannot be realised. The columns are the type-I chains, ordered by a
/// topological sort of the constraints the edges impose.
pub fn schroder_to_strips(p: &SchroderPath) -> Result<ShapeSequence> {
    let g = schroder_to_graph(p);
    let m = g.vertex_count();
    if m == 0 {
        return Err(Error::Invalid("the empty path has no strips".into()));
    }
    // type-I chains: next[v] is the vertex below v
    let mut below = vec![0; m + 1];
    let mut has_above = vec![false; m + 1];
    for &(u, v) in g.e1() {
        below[u] = v;
        has_above[v] = true;
    }
    let mut chain_of = vec![0; m + 1];
    let mut chains: Vec<Vec<usize>> = Vec::new();
    for v in 1..=m {
        if !has_above[v] {
            let mut c = vec![v];
            let mut w = v;
            while below[w] != 0 {
                w = below[w];
                c.push(w);
            }
            for &x in &c {
                chain_of[x] = chains.len();
            }
            chains.push(c);
        }
    }
    let mut content = vec![0i64; m + 1];
    let found = assign_contents(&g, &chains, &chain_of, 2, &mut content)?;
    let Some(order) = found else {
        return Err(Error::NotAPathGraph(format!("no strip sequence realises {p}")));
    };
    let max = (1..=m).map(|v| content[v]).max().unwrap();
    let shapes = order
        .iter()
        .map(|&c| {
            let chain = &chains[c];
            let top = max - content[chain[0]] + 1;
            let bottom = max - content[*chain.last().unwrap()];
            SkewShape::vertical_strip(top as usize, bottom as usize).expect("strip is well formed")
        })
        .collect();
    let seq = ShapeSequence::new(shapes)?;
    let (back, _) = shapes_to_graph(&seq);
    if back != g {
        return Err(Error::NotAPathGraph(format!("strips {seq} do not reproduce {p}")));
    }
    Ok(seq)
}

fn assign_contents(
    g: &LltGraph,
    chains: &[Vec<usize>],
    chain_of: &[usize],
    v: usize,
    content: &mut [i64],
) -> Result<Option<Vec<usize>>> {
    let m = g.vertex_count();
    if v > m {
        return Ok(strip_order(g, chains, chain_of, content));
    }
    let u = v - 1;
    let options: &[i64] = if g.e1().contains(&(u, v)) {
        &[1]
    } else if g.ed().contains(&(u, v)) {
        &[0, 1]
    } else {
        &[1, 2]
    };
    for &d in options {
        content[v] = content[u] + d;
        if consistent_prefix(g, chain_of, content, v) {
            if let Some(order) = assign_contents(g, chains, chain_of, v + 1, content)? {
                return Ok(Some(order));
            }
        }
    }
    Ok(None)
}

/// Checks the pairs `(w, v)`, `w < v`, for content gaps the edges forbid.
fn consistent_prefix(g: &LltGraph, chain_of: &[usize], content: &[i64], v: usize) -> bool {
    (1..v).all(|w| {
        let gap = content[v] - content[w];
        if g.e1().contains(&(w, v)) {
            gap == 1
        } else if g.ed().contains(&(w, v)) {
            gap == 0 || (gap == 1 && chain_of[w] != chain_of[v])
        } else {
            // equal contents always sit within m in shifted content
            gap != 0
        }
    })
}

/// Orders the chains so the shifted contents reproduce the vertex order and
/// the double edges; `None` if the constraints are cyclic.
fn strip_order(g: &LltGraph, chains: &[Vec<usize>], chain_of: &[usize], content: &[i64]) -> Option<Vec<usize>> {
    let k = chains.len();
    let m = g.vertex_count();
    let mut before: BTreeSet<(usize, usize)> = BTreeSet::new();
    for u in 1..=m {
        for v in u + 1..=m {
            let (a, b) = (chain_of[u], chain_of[v]);
            if a == b {
                continue;
            }
            match content[v] - content[u] {
                0 => {
                    before.insert((a, b));
                }
                1 if g.ed().contains(&(u, v)) => {
                    before.insert((b, a));
                }
                1 => {
                    before.insert((a, b));
                }
                _ => {}
            }
        }
    }
    let mut indegree = vec![0; k];
    for &(_, b) in &before {
        indegree[b] += 1;
    }
    // chains are numbered by their first vertex, so the smallest index breaks ties
    let mut ready: BTreeSet<usize> = (0..k).filter(|&c| indegree[c] == 0).collect();
    let mut order = Vec::with_capacity(k);
    while let Some(c) = ready.pop_first() {
        order.push(c);
        for &(_, b) in before.range((c, 0)..(c + 1, 0)) {
            indegree[b] -= 1;
            if indegree[b] == 0 {
                ready.insert(b);
            }
        }
    }
    (order.len() == k).then_some(order)
}

/// The path of a plane tree: `graph_to_schroder(shapes_to_graph(nu(t)))`.
pub fn tree_to_schroder(t: &PlaneTree) -> SchroderPath {
    let (g, _) = shapes_to_graph(&nu(t).shapes);
    graph_to_schroder(&g).expect("vertical strips give a path graph")
}

/// Replaces every `d` by `en` and drops the leading `n` and `e`.
pub fn schroder_to_dyck(p: &SchroderPath) -> Result<SchroderPath> {
    if !p.is_tree_path() {
        return Err(Error::PreconditionViolated(format!(
            "{p} is not connected, does not start with nd, or has an outer corner"
        )));
    }
    let mut steps = Vec::with_capacity(p.steps.len() * 2);
    for &s in &p.steps {
        match s {
            Step::D => steps.extend([Step::E, Step::N]),
            s => steps.push(s),
        }
    }
    SchroderPath::new(steps[2..].to_vec())
}

/// Prepends `ne` and replaces every `en` by `d`.
pub fn dyck_to_schroder(d: &SchroderPath) -> Result<SchroderPath> {
    if !d.is_dyck() {
        return Err(Error::PreconditionViolated(format!("{d} has diagonal steps")));
    }
    let mut word = vec![Step::N, Step::E];
    word.extend_from_slice(&d.steps);
    let mut steps = Vec::with_capacity(word.len());
    let mut i = 0;
    while i < word.len() {
        if word[i] == Step::E && word.get(i + 1) == Some(&Step::N) {
            steps.push(Step::D);
            i += 2;
        } else {
            steps.push(word[i]);
            i += 1;
        }
    }
    SchroderPath::new(steps)
}

/// `f: [m] -> [m]` with `|f^{-1}([i])| >= i`, stored as `[f(1), ..., f(m)]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParkingFunction {
    values: Vec<usize>,
}

impl ParkingFunction {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let m = values.len();
        let mut counts = vec![0usize; m + 1];
        for &v in &values {
            if v == 0 || v > m {
                return Err(Error::Invalid(format!("value {v} is outside [1,{m}]")));
            }
            counts[v] += 1;
        }
        let mut total = 0;
        for (i, c) in counts.iter().enumerate().skip(1) {
            total += c;
            if total < i {
                return Err(Error::Invalid(format!("only {total} cars prefer a spot <= {i}")));
            }
        }
        Ok(ParkingFunction { values })
    }

    pub fn cars(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `f(car)` for `car` in `1..=m`.
    pub fn value(&self, car: usize) -> usize {
        self.values[car - 1]
    }

    /// The Dyck path with one north step per car in column `f(car)`.
    pub fn dyck_path(&self) -> SchroderPath {
        let m = self.cars();
        let mut counts = vec![0; m + 1];
        for &v in &self.values {
            counts[v] += 1;
        }
        let mut steps = Vec::with_capacity(2 * m);
        for &c in &counts[1..] {
            steps.extend(std::iter::repeat_n(Step::N, c));
            steps.push(Step::E);
        }
        SchroderPath::new(steps).expect("parking functions give Dyck paths")
    }
}

impl Serialize for ParkingFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.values.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ParkingFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        ParkingFunction::new(Vec::deserialize(d)?).map_err(D::Error::custom)
    }
}

/// Column (from 1) of each north step of a Dyck path, bottom to top.
fn north_columns(d: &SchroderPath) -> Vec<usize> {
    let mut x = 0;
    let mut cols = Vec::with_capacity(d.size());
    for &s in d.steps() {
        match s {
            Step::N => cols.push(x + 1),
            _ => x += 1,
        }
    }
    cols
}

/// Reads a parking function off a Dyck path whose north steps carry `labels`
/// from bottom to top; labels must increase up each column.
pub fn dyck_to_parking_labeled(d: &SchroderPath, labels: &[usize]) -> Result<ParkingFunction> {
    let cols = north_columns(d);
    if !d.is_dyck() || labels.len() != cols.len() {
        return Err(Error::PreconditionViolated(format!(
            "{d} needs to be a Dyck path with one label per north step"
        )));
    }
    for i in 1..cols.len() {
        if cols[i] == cols[i - 1] && labels[i] < labels[i - 1] {
            return Err(Error::PreconditionViolated(format!(
                "labels {} and {} decrease up column {}",
                labels[i - 1], labels[i], cols[i]
            )));
        }
    }
    let mut values = vec![0; cols.len()];
    for (&label, &col) in labels.iter().zip(&cols) {
        if label == 0 || label > cols.len() || values[label - 1] != 0 {
            return Err(Error::PreconditionViolated(format!("labels {labels:?} are not a permutation")));
        }
        values[label - 1] = col;
    }
    ParkingFunction::new(values)
}

/// Labels the north steps `1..=m` from bottom to top.
pub fn dyck_to_parking(d: &SchroderPath) -> Result<ParkingFunction> {
    let labels: Vec<usize> = (1..=d.size()).collect();
    dyck_to_parking_labeled(d, &labels)
}

/// Every parking function on `m` cars, in lexicographic order of `[f(1), ..., f(m)]`.
pub fn parking_functions(m: usize) -> impl Iterator<Item = ParkingFunction> {
    let total = (m as u64).pow(m as u32);
    (0..total).filter_map(move |mut code| {
        let mut values = vec![0; m];
        for slot in values.iter_mut().rev() {
            *slot = (code % m as u64) as usize + 1;
            code /= m as u64;
        }
        ParkingFunction::new(values).ok()
    })
}

/// Strip sequence of a parking function: the strips of the Schroder path
/// whose Dyck reduction is the path of `f`.
pub fn parking_to_strips(f: &ParkingFunction) -> Result<ShapeSequence> {
    schroder_to_strips(&dyck_to_schroder(&f.dyck_path())?)
}

/// Cayley tree on `[m]` to parking function on `m - 1` cars.
///
/// The tree's Schroder path reduces to a Dyck path whose north steps sit next
/// to the non-root vertices in diagonal order; vertex `v` becomes car `v - 1`.
pub fn tree_to_parking(t: &LabeledTree) -> Result<ParkingFunction> {
    let plane = canonical_drawing(t);
    let nu = nu(&plane);
    let p = tree_to_schroder(&plane);
    let d = schroder_to_dyck(&p)?;
    let labels: Vec<usize> = nu.diagonal_order[1..].iter().map(|&v| v - 1).collect();
    dyck_to_parking_labeled(&d, &labels)
}

/// Every spanning tree, in lexicographic order of the sorted edge lists.
pub fn spanning_trees(sg: &SimpleGraph) -> Vec<LabeledTree> {
    let n = sg.vertex_count();
    let edges = sg.edge_list();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut chosen = Vec::with_capacity(n.saturating_sub(1));
    spanning_rec(n, &edges, 0, &mut chosen, &mut out);
    out
}

fn spanning_rec(n: usize, edges: &[Edge], i: usize, chosen: &mut Vec<Edge>, out: &mut Vec<LabeledTree>) {
    if chosen.len() == n - 1 {
        out.push(LabeledTree::new(chosen.iter().copied()).expect("acyclic and spanning"));
        return;
    }
    if i == edges.len() || chosen.len() + (edges.len() - i) < n - 1 {
        return;
    }
    // chosen plus every remaining edge must still connect the graph
    let mut uf = UnionFind::new(n + 1);
    let mut joins = 0;
    for &(u, v) in chosen.iter().chain(&edges[i..]) {
        if uf.union(u, v) {
            joins += 1;
        }
    }
    if joins < n - 1 {
        return;
    }
    let mut uf = UnionFind::new(n + 1);
    for &(u, v) in chosen.iter() {
        uf.union(u, v);
    }
    let (u, v) = edges[i];
    if uf.find(u) != uf.find(v) {
        chosen.push((u, v));
        spanning_rec(n, edges, i + 1, chosen, out);
        chosen.pop();
    }
    spanning_rec(n, edges, i + 1, chosen, out);
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PathRelation {
    /// `LLT(SneT) = (q-1) LLT(SdT) + LLT(SenT)`
    A,
    /// `LLT(SndReeT) = q LLT(SdnReeT)`
    B,
}

impl FromStr for PathRelation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(PathRelation::A),
            "B" | "b" => Ok(PathRelation::B),
            other => Err(Error::Parse(format!("unknown relation {other:?}"))),
        }
    }
}

/// The paths on each side of a relation applied at step index `position`,
/// with their coefficients.
type Sides = (Vec<(Poly<num_bigint::BigInt>, SchroderPath)>, Vec<(Poly<num_bigint::BigInt>, SchroderPath)>);

fn relation_sides(case: PathRelation, p: &SchroderPath, position: usize) -> Result<Sides> {
    let steps = p.steps();
    let pts = p.points();
    let mismatch = |why: &str| Error::PatternMismatch(format!("{case:?} at step {position} of {p}: {why}"));
    match case {
        PathRelation::A => {
            if steps.get(position..position + 2) != Some(&[Step::N, Step::E]) {
                return Err(mismatch("no ne there"));
            }
            let (x, y) = pts[position];
            if y <= x {
                return Err(mismatch("the ne starts on the diagonal"));
            }
            let sdt = p.splice(position, 2, &[Step::D]).map_err(|e| mismatch(&e.to_string()))?;
            let sent = p.splice(position, 2, &[Step::E, Step::N]).map_err(|e| mismatch(&e.to_string()))?;
            Ok((
                vec![(Poly::one(), p.clone())],
                vec![(Poly::q_minus_one(), sdt), (Poly::one(), sent)],
            ))
        }
        PathRelation::B => {
            if steps.get(position..position + 2) != Some(&[Step::N, Step::D]) {
                return Err(mismatch("no nd there"));
            }
            let (i, j) = pts[position];
            if j <= i {
                return Err(mismatch("S ends on the diagonal"));
            }
            // SndR ends at the last point with x == j, which must be followed by ee
            let end = (position + 2..pts.len())
                .rfind(|&k| pts[k].0 == j)
                .ok_or_else(|| mismatch("the path never reaches the column"))?;
            if steps.get(end..end + 2) != Some(&[Step::E, Step::E]) {
                return Err(mismatch("SndR is not followed by ee"));
            }
            let rhs = p.splice(position, 2, &[Step::D, Step::N]).map_err(|e| mismatch(&e.to_string()))?;
            Ok((vec![(Poly::one(), p.clone())], vec![(Poly::q(), rhs)]))
        }
    }
}

/// Step indices where the relation applies to `p`.
pub fn admissible_positions(case: PathRelation, p: &SchroderPath) -> Vec<usize> {
    (0..p.steps().len())
        .filter(|&i| relation_sides(case, p, i).is_ok())
        .collect()
}

/// Evaluates both sides of a path relation through the path graphs.
pub fn check_lemma_4_5(case: PathRelation, p: &SchroderPath, position: usize, n: usize) -> Result<VerificationReport> {
    let (lhs, rhs) = relation_sides(case, p, position)?;
    let mut rb = ReportBuilder::new(format!("lemma-4.5({case:?})"))
        .param("path", p.to_string())
        .param("position", position)
        .param("n", n);
    let eval = |side: &[(Poly<num_bigint::BigInt>, SchroderPath)]| {
        let mut total = crate::SymPoly::zero(n);
        for (c, path) in side {
            total = &total + &llt_of_graph(&schroder_to_graph(path), n).scale(c);
        }
        total
    };
    let names: Vec<String> = rhs.iter().map(|(_, path)| path.to_string()).collect();
    rb.note(format!("right side paths: {}", names.join(", ")));
    rb.check_equal("path relation", &eval(&lhs), &eval(&rhs));
    Ok(rb.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(s: &str) -> SchroderPath {
        s.parse().unwrap()
    }

    fn sample_tree() -> LabeledTree {
        LabeledTree::new([(1, 3), (1, 5), (1, 6), (5, 2), (5, 4)]).unwrap()
    }

    #[test]
    fn canonical_drawings() {
        let t = canonical_drawing(&LabeledTree::new([(1, 2)]).unwrap());
        assert_eq!(t.children(1), &[2]);
        let star = canonical_drawing(&LabeledTree::new([(1, 3), (1, 2)]).unwrap());
        assert_eq!(star.children(1), &[2, 3]);
        let drawn = canonical_drawing(&sample_tree());
        assert_eq!(drawn.root(), 1);
        assert_eq!(drawn.children(1), &[3, 5, 6]);
        assert_eq!(drawn.children(5), &[2, 4]);
    }

    #[test]
    fn labeled_tree_validation() {
        assert!(LabeledTree::new([(1, 2), (2, 1)]).is_err());
        assert!(LabeledTree::new([(1, 2), (3, 4)]).is_err());
        assert!(LabeledTree::new([(1, 2), (2, 3), (1, 3)]).is_err());
        assert_eq!(LabeledTree::new([]).unwrap().vertex_count(), 1);
        let t: LabeledTree = serde_json::from_str("[[1,3],[1,5],[1,6],[5,2],[5,4]]").unwrap();
        assert_eq!(t, sample_tree());
    }

    #[test]
    fn decompositions() {
        assert_eq!(path_decomposition(&PlaneTree::single()), vec![vec![1]]);
        let chain = canonical_drawing(&LabeledTree::new([(1, 2), (2, 3)]).unwrap());
        assert_eq!(path_decomposition(&chain), vec![vec![1, 2, 3]]);
        let drawn = canonical_drawing(&sample_tree());
        assert_eq!(path_decomposition(&drawn), vec![vec![1, 3], vec![5, 2], vec![4], vec![6]]);
    }

    #[test]
    fn nu_of_sample_tree() {
        let n = nu(&canonical_drawing(&sample_tree()));
        assert_eq!(n.shapes.to_string(), "[(1,1,1)/(1),(1,1),(1),(1,1)/(1)]");
        assert_eq!(n.diagonal_order, vec![1, 3, 5, 6, 2, 4]);
        assert_eq!(nu(&PlaneTree::single()).shapes.to_string(), "[(1)]");
        let chain = canonical_drawing(&LabeledTree::new([(1, 2), (2, 3)]).unwrap());
        assert_eq!(nu(&chain).shapes.to_string(), "[(1,1,1)]");
    }

    #[test]
    fn path_parsing() {
        assert_eq!(path("ndnnedneee").size(), 6);
        assert!("nd".parse::<SchroderPath>().is_err());
        assert!("dne".parse::<SchroderPath>().is_err());
        assert!("en".parse::<SchroderPath>().is_err());
        assert!("nx".parse::<SchroderPath>().is_err());
        assert_eq!(path("nnee").heights(), vec![2, 2]);
    }

    #[test]
    fn path_graphs() {
        assert_eq!(schroder_to_graph(&path("ne")), LltGraph::edgeless(1));
        assert_eq!(schroder_to_graph(&path("nnee")), LltGraph::new(2, [], [], [(1, 2)]).unwrap());
        assert_eq!(schroder_to_graph(&path("nde")), LltGraph::new(2, [(1, 2)], [], []).unwrap());
        assert_eq!(graph_to_schroder(&LltGraph::edgeless(3)).unwrap(), path("nenene"));
        let drawn = schroder_to_graph(&path("ndnnedneee"));
        let set = |v: &[(usize, usize)]| v.iter().copied().collect::<BTreeSet<_>>();
        assert_eq!(drawn.e1(), &set(&[(1, 2), (3, 5)]));
        assert_eq!(drawn.ed(), &set(&[(2, 3), (2, 4), (3, 4), (4, 5), (4, 6), (5, 6)]));
        assert!(graph_to_schroder(&LltGraph::new(3, [], [], [(1, 3)]).unwrap()).is_err());
        assert!(graph_to_schroder(&LltGraph::new(2, [], [(1, 2)], []).unwrap()).is_err());
    }

    #[test]
    fn strips() {
        assert_eq!(schroder_to_strips(&path("nnee")).unwrap().to_string(), "[(1),(1)]");
        assert_eq!(schroder_to_strips(&path("nde")).unwrap().to_string(), "[(1,1)]");
        assert_eq!(
            schroder_to_strips(&path("ndnnedneee")).unwrap().to_string(),
            "[(1,1,1)/(1),(1,1),(1),(1,1)/(1)]"
        );
        for m in 1..=5 {
            for p in SchroderPath::all(m) {
                let s = schroder_to_strips(&p).unwrap();
                assert_eq!(shapes_to_graph(&s).0, schroder_to_graph(&p), "{p}");
            }
        }
    }

    #[test]
    fn tree_paths() {
        assert_eq!(tree_to_schroder(&PlaneTree::single()), path("ne"));
        let chain = canonical_drawing(&LabeledTree::new([(1, 2)]).unwrap());
        assert_eq!(tree_to_schroder(&chain), path("nde"));
        assert_eq!(tree_to_schroder(&canonical_drawing(&sample_tree())), path("ndnnedneee"));
    }

    #[test]
    fn dyck_reduction() {
        assert_eq!(schroder_to_dyck(&path("nde")).unwrap(), path("ne"));
        assert_eq!(schroder_to_dyck(&path("ndnnedneee")).unwrap(), path("nnneenneee"));
        assert_eq!(schroder_to_dyck(&path("ne")).unwrap().size(), 0);
        assert!(schroder_to_dyck(&path("nnee")).is_err());
        assert_eq!(dyck_to_schroder(&path("nnneenneee")).unwrap(), path("ndnnedneee"));
    }

    #[test]
    fn parking() {
        assert_eq!(dyck_to_parking(&path("ne")).unwrap().values(), &[1]);
        assert_eq!(dyck_to_parking(&path("nnee")).unwrap().values(), &[1, 1]);
        let counts: Vec<usize> = (1..=4).map(|m| parking_functions(m).count()).collect();
        assert_eq!(counts, vec![1, 3, 16, 125]);
        assert!(ParkingFunction::new(vec![2, 2]).is_err());
        let f = tree_to_parking(&sample_tree()).unwrap();
        // tree labels 3, 5, 6 park in column 1 and 2, 4 in column 3
        for (label, col) in [(3, 1), (5, 1), (6, 1), (2, 3), (4, 3)] {
            assert_eq!(f.value(label - 1), col);
        }
        assert_eq!(f.dyck_path(), path("nnneenneee"));
    }

    #[test]
    fn counting() {
        let schroder: Vec<usize> = (1..=6).map(|m| SchroderPath::all(m).len()).collect();
        assert_eq!(schroder, vec![1, 3, 11, 45, 197, 903]);
        let trees: Vec<usize> = (1..=7).map(|m| plane_trees(m).len()).collect();
        assert_eq!(trees, vec![1, 1, 2, 5, 14, 42, 132]);
        for m in 1..=5 {
            assert_eq!(spanning_trees(&SimpleGraph::complete(m)).len() as u64, (m as u64).pow(m.saturating_sub(2) as u32));
        }
        let t = spanning_trees(&SimpleGraph::path(4));
        assert_eq!(t.len(), 1);
    }

    #[test]
    fn path_relations() {
        let r = check_lemma_4_5(PathRelation::A, &path("nnee"), 1, 2).unwrap();
        assert!(r.holds(), "{r}");
        assert!(matches!(
            check_lemma_4_5(PathRelation::A, &path("ne"), 0, 1),
            Err(Error::PatternMismatch(_))
        ));
        assert_eq!(admissible_positions(PathRelation::B, &path("nndee")), vec![1]);
        assert!(check_lemma_4_5(PathRelation::B, &path("nndee"), 1, 3).unwrap().holds());
    }
}
