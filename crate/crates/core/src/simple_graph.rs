//! Undirected simple graphs on `1..=n` and the matrix-tree determinants used
//! to cross-check tree and forest enumerations.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimpleGraph {
    n: usize,
    /// Stored with `u < v`.
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v || u == 0 || v == 0 || u > n || v > n {
                return Err(Error::Invalid(format!("bad edge {{{u},{v}}} on {n} vertices")));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(SimpleGraph { n, edges: set })
    }

    pub fn complete(n: usize) -> Self {
        let edges = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
        Self::new(n, edges).expect("complete graph is valid")
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|u| (u, u + 1))).expect("path is valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges.iter().copied().collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.n + 1);
        for &(u, v) in &self.edges {
            uf.union(u, v);
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for v in 1..=self.n {
            groups.entry(uf.find(v)).or_default().push(v);
        }
        let mut comps: Vec<Vec<usize>> = groups.into_values().collect();
        comps.sort_by_key(|c| c[0]);
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    fn laplacian(&self) -> Vec<Vec<BigInt>> {
        let mut l = vec![vec![BigInt::zero(); self.n]; self.n];
        for &(u, v) in &self.edges {
            let (a, b) = (u - 1, v - 1);
            l[a][a] += 1;
            l[b][b] += 1;
            l[a][b] -= 1;
            l[b][a] -= 1;
        }
        l
    }

    /// Number of spanning trees: any cofactor of the Laplacian.
    pub fn spanning_tree_count(&self) -> BigInt {
        if self.n == 0 {
            return BigInt::zero();
        }
        let l = self.laplacian();
        let minor: Vec<Vec<BigInt>> = l[1..].iter().map(|row| row[1..].to_vec()).collect();
        determinant(minor)
    }

    /// `det(I + L)`: the number of spanning forests weighted by the product of
    /// their component sizes (each tree carries a choice of root).
    pub fn rooted_forest_count(&self) -> BigInt {
        let mut l = self.laplacian();
        for (i, row) in l.iter_mut().enumerate() {
            row[i] += 1;
        }
        determinant(l)
    }
}

/// Fraction-free Gaussian elimination (Bareiss).
pub fn determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Union-find over `0..n` with path halving.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `false` when `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cayley_counts() {
        for (n, expected) in [(1, 1u64), (2, 1), (3, 3), (4, 16), (5, 125), (6, 1296)] {
            assert_eq!(SimpleGraph::complete(n).spanning_tree_count(), BigInt::from(expected));
        }
    }

    #[test]
    fn rooted_forests_of_small_graphs() {
        // K_2: empty forest (1*1) + the edge (2) = 3
        assert_eq!(SimpleGraph::complete(2).rooted_forest_count(), BigInt::from(3));
        // rooted forests on n labelled vertices: (n+1)^(n-1)
        assert_eq!(SimpleGraph::complete(4).rooted_forest_count(), BigInt::from(125));
    }

    #[test]
    fn components() {
        let g = SimpleGraph::new(5, [(1, 3), (4, 5)]).unwrap();
        assert_eq!(g.components(), vec![vec![1, 3], vec![2], vec![4, 5]]);
        assert!(!g.is_connected());
        assert!(SimpleGraph::path(4).is_connected());
        assert_eq!(g.spanning_tree_count(), BigInt::zero());
    }

    #[test]
    fn rejects_loops() {
        assert!(SimpleGraph::new(2, [(1, 1)]).is_err());
        assert!(SimpleGraph::new(2, [(1, 3)]).is_err());
    }
}
