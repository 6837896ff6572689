use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Simple undirected graph on vertices `0..n`, stored as one adjacency bitset
/// per vertex.
///
/// Rows are packed into `u64` words; graphs with at most 64 vertices use a
/// single word per row. Isolated vertices are allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    EndpointOutOfRange { vertex: usize, order: usize },
    Loop { vertex: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::EndpointOutOfRange { vertex, order } => {
                write!(
                    f,
                    "edge endpoint {vertex} out of range for a graph on {order} vertices"
                )
            }
            GraphError::Loop { vertex } => write!(f, "loop at vertex {vertex}"),
        }
    }
}

impl core::error::Error for GraphError {}

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        let words = words_for(n);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to one edge.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::EndpointOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::Loop { vertex: u });
            }
            g.set(u, v, true);
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.bits
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize, on: bool) {
        let (wu, bu) = (u * self.words + v / 64, 1u64 << (v % 64));
        let (wv, bv) = (v * self.words + u / 64, 1u64 << (u % 64));
        if on {
            self.bits[wu] |= bu;
            self.bits[wv] |= bv;
        } else {
            self.bits[wu] &= !bu;
            self.bits[wv] &= !bv;
        }
    }

    /// Adds `uv`; returns `false` if it was already present.
    ///
    /// Panics on a loop or an out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "endpoint out of range");
        assert_ne!(u, v, "loops are not allowed");
        if self.has_edge(u, v) {
            return false;
        }
        self.set(u, v, true);
        true
    }

    /// Removes `uv`; returns `false` if it was absent.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "endpoint out of range");
        if u == v || !self.has_edge(u, v) {
            return false;
        }
        self.set(u, v, false);
        true
    }

    /// Copy with `extra` isolated vertices appended.
    pub fn with_extra_vertices(&self, extra: usize) -> Graph {
        let mut g = Graph::empty(self.n + extra);
        for (u, v) in self.edges() {
            g.set(u, v, true);
        }
        g
    }

    /// Adjacency row of `v` as packed words.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> Neighbors<'_> {
        Neighbors {
            row: self.row(v),
            word: 0,
            current: self.row(v).first().copied().unwrap_or(0),
        }
    }

    /// Number of neighbors of `v` inside the vertex mask `mask` (same word
    /// layout as a row).
    pub fn degree_into(&self, v: usize, mask: &[u64]) -> usize {
        self.row(v)
            .iter()
            .zip(mask)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// All edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    /// Subgraph induced by `vertices`, relabeled so that `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.set(i, j, true);
                }
            }
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set(perm[u], perm[v], true);
        }
        g
    }

    /// `G - v`, with the remaining vertices keeping their relative order.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&w| w != v).collect();
        self.induced(&keep)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The null graph and `K_1` count as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_isolate_free(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) > 0)
    }

    /// Drops isolated vertices, keeping the others in order.
    pub fn without_isolates(&self) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&v| self.degree(v) > 0).collect();
        if keep.len() == self.n {
            return self.clone();
        }
        self.induced(&keep)
    }

    /// Number of edges inside `vertices`.
    pub fn edges_within(&self, vertices: &[usize]) -> usize {
        let mut count = 0;
        for (i, &a) in vertices.iter().enumerate() {
            for &b in &vertices[i + 1..] {
                if self.has_edge(a, b) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Checks adjacency symmetry and loop-freeness.
    pub fn check_invariants(&self) -> bool {
        (0..self.n).all(|u| {
            !self.has_edge(u, u) && self.neighbors(u).all(|v| v < self.n && self.has_edge(v, u))
        }) && self.bits.iter().map(|w| w.count_ones()).sum::<u32>() % 2 == 0
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edge_list())
    }
}

pub struct Neighbors<'a> {
    row: &'a [u64],
    word: usize,
    current: u64,
}

impl Iterator for Neighbors<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
            if self.word >= self.row.len() {
                return None;
            }
            self.current = self.row[self.word];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graph() {
        let g = Graph::from_edges(0, &[]).unwrap();
        assert_eq!(g.order(), 0);
        assert_eq!(g.size(), 0);
        assert!(g.is_connected());
    }

    #[test]
    fn k4_from_all_pairs() {
        let edges: Vec<_> = (0..4)
            .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
            .collect();
        let g = Graph::from_edges(4, &edges).unwrap();
        assert_eq!(g.size(), 6);
        assert!(g.degrees().iter().all(|&d| d == 3));
        assert!(g.check_invariants());
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.size(), 2);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::EndpointOutOfRange {
                vertex: 3,
                order: 3
            })
        );
        assert_eq!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(GraphError::Loop { vertex: 1 })
        );
    }

    #[test]
    fn wide_graphs_use_several_words() {
        let n = 130;
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        assert_eq!(g.size(), n - 1);
        assert_eq!(g.neighbors(64).collect::<Vec<_>>(), [63, 65]);
        assert!(g.is_connected());
        assert!(g.check_invariants());
    }

    #[test]
    fn induced_and_isolates() {
        let g = Graph::from_edges(5, &[(0, 2), (2, 4)]).unwrap();
        assert!(!g.is_isolate_free());
        let h = g.without_isolates();
        assert_eq!(h.order(), 3);
        assert_eq!(h.edge_list(), [(0, 1), (1, 2)]);
        assert_eq!(g.components().len(), 3);
    }
}
