//! Core peeling and block (biconnected component) decomposition.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// Vertices of the `k`-core of `g`, in increasing order. Empty if there is none.
pub fn k_core_vertices(g: &Graph, k: usize) -> Vec<usize> {
    let n = g.order();
    let mut deg = g.degrees();
    let mut alive = vec![true; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] < k).collect();
    for &v in &stack {
        alive[v] = false;
    }
    while let Some(v) = stack.pop() {
        for w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] < k {
                    alive[w] = false;
                    stack.push(w);
                }
            }
        }
    }
    (0..n).filter(|&v| alive[v]).collect()
}

/// The `k`-core of `g`: the maximal induced subgraph of minimum degree at
/// least `k`, relabeled in increasing order of the original vertices.
pub fn k_core(g: &Graph, k: usize) -> Graph {
    g.induced(&k_core_vertices(g, k))
}

/// Maximal 2-connected subgraphs and bridges, as vertex sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Sorted vertex lists, ordered lexicographically.
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
}

impl BlockDecomposition {
    /// Index of a block containing both `u` and `v`, if any.
    pub fn common_block(&self, u: usize, v: usize) -> Option<usize> {
        self.blocks
            .iter()
            .position(|b| b.binary_search(&u).is_ok() && b.binary_search(&v).is_ok())
    }
}

/// Biconnected components by the iterative Hopcroft–Tarjan edge-stack method.
/// Isolated vertices belong to no block.
pub fn blocks(g: &Graph) -> BlockDecomposition {
    let n = g.order();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out: Vec<Vec<usize>> = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX || adj[root].is_empty() {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbor index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < adj[v].len() {
                let w = adj[v][*idx];
                *idx += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        if p != root {
                            is_cut[p] = true;
                        }
                        let mut block = Vec::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            block.push(a);
                            block.push(b);
                            if (a, b) == (p, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        block.dedup();
                        out.push(block);
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    out.sort();
    BlockDecomposition {
        blocks: out,
        cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
    }
}
