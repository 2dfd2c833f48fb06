//! Set partitions, LLT cumulants, their vanishing on disconnected graphs and
//! the spanning-forest expansion of melting lollipops.
//!
//! For a graph `g` on `[m]` the cumulant is
//!
//! ```text
//! kappa(g) = (q-1)^{-(m-1)} sum_B (-1)^{|B|-1} (|B|-1)! prod_{b in B} LLT(g[b])
//! ```
//!
//! over set partitions `B` of `[m]`, where `|B|` is the number of blocks. It
//! is the Moebius inverse of
//!
//! ```text
//! LLT(g) = sum_B (q-1)^{m-|B|} prod_{b in B} kappa(g[b]).
//! ```

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::lltgraph::{llt_of_graph, llt_of_graph_checked, Edge, LltGraph, MeltingLollipop};
use crate::qpoly::Poly;
use crate::report::{ReportBuilder, VerificationReport};
use crate::shapes::{llt_of_shapes, ShapeSequence};
use crate::simple_graph::{SimpleGraph, UnionFind};
use crate::symfunc::SymFunc;
use crate::treebij::{canonical_drawing, nu, LabeledTree};

/// Blocks of a set partition of `[m]`, each sorted, ordered by minimum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort();
        let mut all: Vec<usize> = blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        if blocks.iter().any(Vec::is_empty) || all != (1..=all.len()).collect::<Vec<_>>() {
            return Err(Error::Invalid(format!("{blocks:?} is not a set partition of [m]")));
        }
        Ok(SetPartition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Block masks, bit `v - 1` for vertex `v`.
    pub fn masks(&self) -> Vec<u64> {
        self.blocks
            .iter()
            .map(|b| b.iter().fold(0u64, |acc, &v| acc | 1 << (v - 1)))
            .collect()
    }
}

/// Streams the set partitions of `[m]` via restricted growth strings.
pub struct SetPartitions {
    m: usize,
    /// `rgs[i]` is the block of element `i + 1`; `None` once exhausted.
    rgs: Option<Vec<usize>>,
}

impl Iterator for SetPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        let rgs = self.rgs.as_mut()?;
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, &b) in rgs.iter().enumerate() {
            if b == blocks.len() {
                blocks.push(Vec::new());
            }
            blocks[b].push(i + 1);
        }
        let out = SetPartition { blocks };
        // advance: bump the last position that may grow, reset the tail
        let mut advanced = false;
        for i in (1..self.m).rev() {
            let max_prefix = rgs[..i].iter().copied().max().unwrap_or(0);
            if rgs[i] <= max_prefix {
                rgs[i] += 1;
                for r in &mut rgs[i + 1..] {
                    *r = 0;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            self.rgs = None;
        }
        Some(out)
    }
}

pub fn set_partitions(m: usize) -> SetPartitions {
    SetPartitions {
        m,
        rgs: (m >= 1).then(|| vec![0; m]),
    }
}

/// Bell numbers by the Bell triangle.
pub fn bell(m: usize) -> BigInt {
    let mut row = vec![BigInt::one()];
    for _ in 0..m {
        let mut next = vec![row.last().unwrap().clone()];
        for x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        row = next;
    }
    row[0].clone()
}

fn check_size(g: &LltGraph) -> Result<()> {
    if g.vertex_count() == 0 || g.vertex_count() > 12 {
        return Err(Error::Invalid(format!(
            "cumulants are computed for 1 to 12 vertices, not {}",
            g.vertex_count()
        )));
    }
    Ok(())
}

/// LLT polynomials of every induced subgraph, indexed by vertex mask; equal
/// induced graphs are evaluated once.
fn subset_llts<C: Coefficient>(g: &LltGraph, n: usize) -> Result<Vec<SymFunc<C>>> {
    subset_llts_with(g, n, |s| Ok(llt_of_graph(s, n)))
}

fn subset_llts_with<C: Coefficient>(
    g: &LltGraph,
    n: usize,
    eval: impl Fn(&LltGraph) -> Result<SymFunc<C>>,
) -> Result<Vec<SymFunc<C>>> {
    let m = g.vertex_count();
    let mut seen: HashMap<LltGraph, SymFunc<C>> = HashMap::new();
    let mut out = vec![SymFunc::zero(n); 1 << m];
    out[0] = SymFunc::one(n);
    for mask in 1..(1u64 << m) {
        let sub = g.induced_by_mask(mask)?;
        let value = match seen.get(&sub) {
            Some(v) => v.clone(),
            None => {
                let v = eval(&sub)?;
                seen.insert(sub, v.clone());
                v
            }
        };
        out[mask as usize] = value;
    }
    Ok(out)
}

/// `by_blocks[k][S]` is the sum over partitions of `S` into `k` blocks of the
/// product of `values` over the blocks.
fn block_sums<C: Coefficient>(values: &[SymFunc<C>], m: usize, n: usize, top: u64) -> Vec<BTreeMap<u64, SymFunc<C>>> {
    let mut by_blocks: Vec<BTreeMap<u64, SymFunc<C>>> = vec![BTreeMap::new(); m + 1];
    by_blocks[0].insert(0, SymFunc::one(n));
    let subsets: Vec<u64> = (1..=top).filter(|s| s & !top == 0).collect();
    for k in 1..=m {
        for &s in &subsets {
            if (s.count_ones() as usize) < k {
                continue;
            }
            let low = s & s.wrapping_neg();
            let rest = s ^ low;
            let mut total = SymFunc::zero(n);
            // the block holding the lowest element: low | sub for sub within rest
            let mut sub = rest;
            loop {
                let block = low | sub;
                let remainder = s ^ block;
                if let Some(r) = by_blocks[k - 1].get(&remainder) {
                    total = &total + &(&values[block as usize] * r);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest;
            }
            if !total.is_zero() {
                by_blocks[k].insert(s, total);
            }
        }
    }
    by_blocks
}

fn block_count_weight<C: Coefficient>(k: usize) -> C {
    let mut w = C::one();
    for i in 1..k {
        w = w * C::from_count(i as u64);
    }
    if k.is_multiple_of(2) {
        -w
    } else {
        w
    }
}

/// The cumulant by the closed formula, weighting each set partition by
/// `(-1)^{k-1} (k-1)!` for its number of blocks `k`.
///
/// Every LLT polynomial is read off its dominant monomials, which is exact
/// when each induced subgraph has a symmetric coloring sum, as for graphs of
/// shape sequences and their unicellular subgraphs. [`cumulant_of_graph_checked`]
/// drops that assumption.
pub fn cumulant_of_graph<C: Coefficient>(g: &LltGraph, n: usize) -> Result<SymFunc<C>> {
    check_size(g)?;
    closed_formula(g, n, subset_llts::<C>(g, n)?)
}

/// [`cumulant_of_graph`] with every induced subgraph evaluated by its full
/// coloring sum; fails if one of those sums is not symmetric.
pub fn cumulant_of_graph_checked<C: Coefficient>(g: &LltGraph, n: usize) -> Result<SymFunc<C>> {
    check_size(g)?;
    closed_formula(g, n, subset_llts_with(g, n, |s| llt_of_graph_checked(s, n))?)
}

fn closed_formula<C: Coefficient>(g: &LltGraph, n: usize, llts: Vec<SymFunc<C>>) -> Result<SymFunc<C>> {
    let m = g.vertex_count();
    let full = (1u64 << m) - 1;
    let sums = block_sums(&llts, m, n, full);
    let mut numerator = SymFunc::zero(n);
    for (k, sums_k) in sums.iter().enumerate().skip(1) {
        if let Some(s) = sums_k.get(&full) {
            numerator = &numerator + &s.scale(&Poly::constant(block_count_weight::<C>(k)));
        }
    }
    numerator.exact_div_qminus1_pow(m - 1)
}

/// The cumulant by solving the Moebius expansion for the one-block term,
/// smallest subsets first.
///
/// `expansion[S]` holds `sum_B (q-1)^{|S|-|B|} prod kappa(b)` over set
/// partitions of `S`, built from the cumulants alone.
pub fn cumulant_recursive<C: Coefficient>(g: &LltGraph, n: usize) -> Result<SymFunc<C>> {
    check_size(g)?;
    let m = g.vertex_count();
    let llts = subset_llts::<C>(g, n)?;
    let size = 1usize << m;
    let mut kappa: Vec<SymFunc<C>> = vec![SymFunc::zero(n); size];
    let mut expansion: Vec<SymFunc<C>> = vec![SymFunc::zero(n); size];
    expansion[0] = SymFunc::one(n);
    let mut order: Vec<u64> = (1..size as u64).collect();
    order.sort_by_key(|s| s.count_ones());
    let qm1 = Poly::<C>::q_minus_one();
    for s in order {
        let bits = s.count_ones() as usize;
        // partitions with at least two blocks, grouped by the block of the lowest element
        let low = s & s.wrapping_neg();
        let rest = s ^ low;
        let mut others = SymFunc::zero(n);
        let mut sub = rest;
        loop {
            let block = low | sub;
            if block != s {
                let weight = qm1.pow((block.count_ones() - 1) as usize);
                others = &others + &(&kappa[block as usize].scale(&weight) * &expansion[(s ^ block) as usize]);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        let numerator = &llts[s as usize] - &others;
        let k = numerator.exact_div_qminus1_pow(bits - 1)?;
        expansion[s as usize] = &others + &k.scale(&qm1.pow(bits - 1));
        kappa[s as usize] = k;
    }
    Ok(kappa[size - 1].clone())
}

/// How the closed formula weights a set partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Weighting {
    /// `(-1)^{k-1} (k-1)!` for `k` blocks.
    BlockCount,
    /// `prod_b (-1)^{|b|-1} (|b|-1)!` over the blocks.
    BlockSize,
}

/// The closed formula under either weighting, by explicit set partitions.
pub fn cumulant_with_weighting<C: Coefficient>(g: &LltGraph, n: usize, weighting: Weighting) -> Result<SymFunc<C>> {
    check_size(g)?;
    let m = g.vertex_count();
    let llts = subset_llts::<C>(g, n)?;
    let mut numerator = SymFunc::zero(n);
    for p in set_partitions(m) {
        let weight = match weighting {
            Weighting::BlockCount => block_count_weight::<C>(p.block_count()),
            Weighting::BlockSize => p
                .blocks()
                .iter()
                .fold(C::one(), |acc, b| acc * block_count_weight::<C>(b.len())),
        };
        let mut term = SymFunc::one(n).scale(&Poly::constant(weight));
        for mask in p.masks() {
            term = &term * &llts[mask as usize];
        }
        numerator = &numerator + &term;
    }
    numerator.exact_div_qminus1_pow(m - 1)
}

/// Checks `LLT(g) = sum_B (q-1)^{m-|B|} prod kappa(g[b])` partition by
/// partition, and that the closed and recursive cumulants agree.
pub fn verify_moebius_consistency(g: &LltGraph, n: usize) -> Result<VerificationReport> {
    check_size(g)?;
    let m = g.vertex_count();
    let mut rb = ReportBuilder::new("moebius-consistency")
        .param("graph", g)
        .param("n", n);
    let mut kappa: HashMap<u64, crate::SymPoly> = HashMap::new();
    for mask in 1..(1u64 << m) {
        let sub = g.induced_by_mask(mask)?;
        kappa.insert(mask, cumulant_of_graph(&sub, n)?);
    }
    let qm1 = crate::QPoly::q_minus_one();
    let mut rhs = crate::SymPoly::zero(n);
    let mut partitions = 0u64;
    for p in set_partitions(m) {
        partitions += 1;
        let mut term = crate::SymPoly::one(n).scale(&qm1.pow(m - p.block_count()));
        for mask in p.masks() {
            term = &term * &kappa[&mask];
        }
        rhs = &rhs + &term;
    }
    rb.check_count("set partitions = Bell(m)", partitions, bell(m).try_into().unwrap_or(u64::MAX));
    let lhs = llt_of_graph::<BigInt>(g, n);
    rb.check_equal("LLT = sum over set partitions of products of cumulants", &lhs, &rhs);
    let closed = &kappa[&((1u64 << m) - 1)];
    let recursive = cumulant_recursive::<BigInt>(g, n)?;
    rb.check_equal("closed formula = recursive solution", closed, &recursive);
    Ok(rb.finish())
}

/// Evaluates kappa(K_2) under both placements of the set-partition weight.
/// Weighting by the number of blocks gives `m_11`; weighting inside the
/// block product gives its negative.
pub fn weighting_comparison() -> Result<VerificationReport> {
    let k2 = LltGraph::new(2, [], [], [(1, 2)])?;
    let count = cumulant_with_weighting::<BigInt>(&k2, 2, Weighting::BlockCount)?;
    let size = cumulant_with_weighting::<BigInt>(&k2, 2, Weighting::BlockSize)?;
    let mut rb = ReportBuilder::new("weighting-comparison").param("graph", &k2);
    rb.note(format!("block-count weighting: {count}"));
    rb.note(format!("block-size weighting: {size}"));
    let e2 = crate::SymPoly::monomial(crate::Partition::new(vec![1, 1])?, Poly::one(), 2);
    rb.check_equal("block-count weighting gives m_11", &count, &e2);
    rb.check_equal("block-size weighting gives -m_11", &size, &-&e2);
    Ok(rb.finish())
}

/// Asserts that the cumulant of a disconnected graph is zero.
pub fn verify_disconnected_vanishing(g: &LltGraph, n: usize) -> Result<VerificationReport> {
    if g.underlying_simple_graph().is_connected() {
        return Err(Error::PreconditionViolated("graph is connected".into()));
    }
    let mut rb = ReportBuilder::new("disconnected-vanishing")
        .param("graph", g)
        .param("n", n);
    let kappa = cumulant_of_graph::<BigInt>(g, n)?;
    rb.check_equal("cumulant vanishes", &kappa, &crate::SymPoly::zero(n));
    Ok(rb.finish())
}

/// Every acyclic edge subset of `sg`, as sorted edge lists in lexicographic order.
pub fn spanning_forests(sg: &SimpleGraph) -> Vec<Vec<Edge>> {
    fn rec(edges: &[Edge], i: usize, uf: &UnionFind, chosen: &mut Vec<Edge>, out: &mut Vec<Vec<Edge>>) {
        if i == edges.len() {
            out.push(chosen.clone());
            return;
        }
        let (u, v) = edges[i];
        let mut with = uf.clone();
        if with.union(u, v) {
            chosen.push((u, v));
            rec(edges, i + 1, &with, chosen, out);
            chosen.pop();
        }
        rec(edges, i + 1, uf, chosen, out);
    }
    let mut out = Vec::new();
    let uf = UnionFind::new(sg.vertex_count() + 1);
    rec(&sg.edge_list(), 0, &uf, &mut Vec::new(), &mut out);
    out
}

/// Connected components of a forest on `[n]`, each as a tree relabelled
/// `1..=k` in increasing order of the original labels.
pub fn forest_components(n: usize, forest: &[Edge]) -> Vec<LabeledTree> {
    let sg = SimpleGraph::new(n, forest.iter().copied()).expect("forest edges are valid");
    sg.components()
        .into_iter()
        .map(|comp| {
            let mut index = vec![0; n + 1];
            for (i, &v) in comp.iter().enumerate() {
                index[v] = i + 1;
            }
            let edges = forest
                .iter()
                .filter(|&&(u, _)| index[u] > 0)
                .map(|&(u, v)| (index[u], index[v]));
            LabeledTree::new(edges).expect("a component of a forest is a tree")
        })
        .collect()
}

/// The strips of a tree drawn canonically.
pub fn nu_of_tree(t: &LabeledTree) -> ShapeSequence {
    nu(&canonical_drawing(t)).shapes
}

/// Checks the spanning-forest expansion of a melting lollipop after `q -> q + 1`:
///
/// ```text
/// LLT(G)(q+1) = sum_F q^{l+m-#F} prod_i LLT(nu(T_i))(q+1)
/// ```
pub fn verify_forest_identity(p: MeltingLollipop, n: usize) -> Result<VerificationReport> {
    let size = p.vertex_count();
    if n < size {
        return Err(Error::PreconditionViolated(format!("need at least {size} variables, got {n}")));
    }
    let g = p.graph();
    let sg = g.underlying_simple_graph();
    let mut rb = ReportBuilder::new("forest-identity")
        .param("l", p.l)
        .param("m", p.m)
        .param("k", p.k)
        .param("n", n);
    let lhs = llt_of_graph::<BigInt>(&g, n).shift_q();
    let forests = spanning_forests(&sg);
    let mut nu_cache: HashMap<ShapeSequence, crate::SymPoly> = HashMap::new();
    let mut product_cache: HashMap<Vec<ShapeSequence>, crate::SymPoly> = HashMap::new();
    let mut by_components: BTreeMap<usize, crate::SymPoly> = BTreeMap::new();
    let mut rooted = BigInt::zero();
    for forest in &forests {
        let comps = forest_components(size, forest);
        rooted += comps.iter().fold(BigInt::one(), |acc, t| acc * t.vertex_count());
        let mut key: Vec<ShapeSequence> = comps.iter().map(nu_of_tree).collect();
        key.sort();
        let product = product_cache
            .entry(key)
            .or_insert_with_key(|key| {
                key.iter().fold(crate::SymPoly::one(n), |acc, s| {
                    let f = nu_cache
                        .entry(s.clone())
                        .or_insert_with(|| llt_of_shapes::<BigInt>(s, n).shift_q());
                    &acc * f
                })
            })
            .clone();
        let slot = by_components
            .entry(comps.len())
            .or_insert_with(|| crate::SymPoly::zero(n));
        *slot = &*slot + &product;
    }
    let mut rhs = crate::SymPoly::zero(n);
    for (count, sum) in by_components {
        rhs = &rhs + &sum.scale(&Poly::monomial(BigInt::one(), size - count));
    }
    rb.check_count(
        "forests weighted by component sizes = det(I + L)",
        u64::try_from(rooted).unwrap_or(u64::MAX),
        u64::try_from(sg.rooted_forest_count()).unwrap_or(u64::MAX),
    );
    rb.note(format!("{} spanning forests", forests.len()));
    rb.check_equal("shifted LLT = forest expansion", &lhs, &rhs);
    Ok(rb.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::Partition;

    type S = crate::SymPoly;

    fn m(p: &[usize], c: &[i64], n: usize) -> S {
        S::monomial(Partition::new(p.to_vec()).unwrap(), Poly::from_i64s(c), n)
    }

    #[test]
    fn set_partition_counts() {
        let counts: Vec<usize> = (1..=6).map(|m| set_partitions(m).count()).collect();
        assert_eq!(counts, vec![1, 2, 5, 15, 52, 203]);
        for m in 1..=8 {
            assert_eq!(BigInt::from(set_partitions(m).count()), bell(m));
        }
        let three: Vec<SetPartition> = set_partitions(3).collect();
        assert_eq!(three[0].blocks(), &[vec![1, 2, 3]]);
        assert_eq!(three[4].blocks(), &[vec![1], vec![2], vec![3]]);
        let distinct: std::collections::BTreeSet<_> = set_partitions(5).collect();
        assert_eq!(distinct.len(), 52);
    }

    #[test]
    fn small_cumulants() {
        let one = LltGraph::edgeless(1);
        assert_eq!(cumulant_of_graph::<BigInt>(&one, 1).unwrap(), m(&[1], &[1], 1));
        let k2 = LltGraph::new(2, [], [], [(1, 2)]).unwrap();
        assert_eq!(cumulant_of_graph::<BigInt>(&k2, 2).unwrap(), m(&[1, 1], &[1], 2));
        let two = LltGraph::edgeless(2);
        assert!(cumulant_of_graph::<BigInt>(&two, 2).unwrap().is_zero());
        let k3 = MeltingLollipop::new(0, 3, 0).unwrap().graph();
        assert_eq!(
            cumulant_of_graph_checked::<BigInt>(&k3, 3).unwrap(),
            cumulant_of_graph::<BigInt>(&k3, 3).unwrap()
        );
    }

    #[test]
    fn closed_and_recursive_agree() {
        for p in MeltingLollipop::all_up_to(4) {
            let g = p.graph();
            let n = g.vertex_count();
            let a = cumulant_of_graph::<BigInt>(&g, n).unwrap();
            assert_eq!(a, cumulant_recursive::<BigInt>(&g, n).unwrap(), "{p}");
            assert_eq!(a, cumulant_with_weighting::<BigInt>(&g, n, Weighting::BlockCount).unwrap(), "{p}");
        }
    }

    #[test]
    fn moebius_examples() {
        let k3 = MeltingLollipop::new(0, 3, 0).unwrap().graph();
        assert!(verify_moebius_consistency(&k3, 3).unwrap().holds());
        let l = MeltingLollipop::new(1, 2, 0).unwrap().graph();
        assert!(verify_moebius_consistency(&l, 3).unwrap().holds());
        assert!(verify_moebius_consistency(&LltGraph::edgeless(1), 1).unwrap().holds());
    }

    #[test]
    fn weighting_variants() {
        assert!(weighting_comparison().unwrap().holds());
    }

    #[test]
    fn vanishing_examples() {
        let cases = [
            LltGraph::edgeless(2),
            LltGraph::new(3, [], [], [(1, 2)]).unwrap(),
            LltGraph::new(4, [], [], [(1, 2), (3, 4)]).unwrap(),
        ];
        for g in &cases {
            let n = g.vertex_count();
            assert!(verify_disconnected_vanishing(g, n).unwrap().holds());
        }
        let k2 = LltGraph::new(2, [], [], [(1, 2)]).unwrap();
        assert!(verify_disconnected_vanishing(&k2, 2).is_err());
    }

    #[test]
    fn forests() {
        assert_eq!(spanning_forests(&SimpleGraph::complete(2)).len(), 2);
        assert_eq!(spanning_forests(&SimpleGraph::complete(3)).len(), 7);
        assert_eq!(spanning_forests(&SimpleGraph::path(3)).len(), 4);
        let counts: Vec<usize> = (1..=5).map(|n| spanning_forests(&SimpleGraph::complete(n)).len()).collect();
        assert_eq!(counts, vec![1, 2, 7, 38, 291]);
    }

    #[test]
    fn forest_identity_small() {
        for (l, m_, k) in [(0, 1, 0), (0, 2, 0), (0, 3, 0), (1, 2, 1)] {
            let p = MeltingLollipop::new(l, m_, k).unwrap();
            let r = verify_forest_identity(p, p.vertex_count()).unwrap();
            assert!(r.holds(), "{r}");
        }
    }
}
