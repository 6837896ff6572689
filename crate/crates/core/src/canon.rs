//! Canonical forms for isomorphism rejection.
//!
//! The canonical form of a graph is the lexicographically largest
//! upper-triangle adjacency string (column-major, as in graph6) over all
//! vertex orders that list the cells of the degree-refined equitable
//! partition in a fixed invariant order. The search builds the order one
//! position at a time; position `j` only ever takes the candidates whose
//! column (adjacency to positions `0..j`) is maximal, and is additionally
//! pruned by twin vertices and by automorphisms discovered at leaves.
//!
//! Practical limit: the search is exponential in the worst case. Graphs met
//! in enumeration here (at most ~24 vertices, mostly sparse) are handled in
//! microseconds; highly symmetric graphs without twins on more than ~24
//! vertices may be slow.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::graph::Graph;
use crate::graph6::{graph6_bytes, graph6_decode};

/// Isomorphism-invariant encoding: the graph6 bytes of the canonically
/// relabeled graph. Two graphs have equal forms iff they are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_graph6(&self) -> &str {
        core::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    pub fn to_graph6(&self) -> String {
        String::from(self.as_graph6())
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        graph6_decode(self.as_graph6()).expect("canonical forms are valid graph6")
    }
}

/// Color refinement starting from degrees; cell `0` holds the highest degree.
/// Returns one color per vertex, colors `0..cells` in invariant order.
pub fn refined_colors(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let deg = g.degrees();
    let mut distinct: Vec<usize> = deg.clone();
    distinct.sort_unstable_by(|a, b| b.cmp(a));
    distinct.dedup();
    let mut color: Vec<usize> = deg
        .iter()
        .map(|d| distinct.iter().position(|x| x == d).expect("present"))
        .collect();
    let mut cells = distinct.len();
    loop {
        let mut sigs: Vec<(Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut s = vec![color[v]];
                let mut nb: Vec<usize> = g.neighbors(v).map(|w| color[w]).collect();
                nb.sort_unstable();
                s.extend(nb);
                (s, v)
            })
            .collect();
        sigs.sort();
        let mut next = vec![0; n];
        let mut c = 0;
        for i in 0..n {
            if i > 0 && sigs[i].0 != sigs[i - 1].0 {
                c += 1;
            }
            next[sigs[i].1] = c;
        }
        let new_cells = if n == 0 { 0 } else { c + 1 };
        color = next;
        if new_cells == cells {
            return color;
        }
        cells = new_cells;
    }
}

/// Smallest member of each vertex's twin class, where `u` and `v` are twins
/// when `N(u) \ {v} = N(v) \ {u}`. Swapping twins is an automorphism.
fn twin_representatives(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut rep: Vec<usize> = (0..n).collect();
    for v in 0..n {
        if rep[v] != v {
            continue;
        }
        for w in v + 1..n {
            if rep[w] == w && are_twins(g, v, w) {
                rep[w] = v;
            }
        }
    }
    rep
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let ru = g.row(u);
    let rv = g.row(v);
    ru.iter().zip(rv).enumerate().all(|(k, (&a, &b))| {
        let mut mask = !0u64;
        if u / 64 == k {
            mask &= !(1u64 << (u % 64));
        }
        if v / 64 == k {
            mask &= !(1u64 << (v % 64));
        }
        a & mask == b & mask
    })
}

fn compare_columns(a: &[u64], b: &[u64]) -> Ordering {
    for (&x, &y) in a.iter().zip(b) {
        if x != y {
            let t = (x ^ y).trailing_zeros();
            return if x >> t & 1 == 1 {
                Ordering::Greater
            } else {
                Ordering::Less
            };
        }
    }
    Ordering::Equal
}

const MAX_GENERATORS: usize = 64;

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    words: usize,
    color: Vec<usize>,
    twin: Vec<usize>,
    order: Vec<usize>,
    pos_of: Vec<usize>,
    cur_cols: Vec<Vec<u64>>,
    best_order: Vec<usize>,
    best_cols: Vec<Vec<u64>>,
    have_best: bool,
    /// Depth at which the current path first beats the best string;
    /// `usize::MAX` while the two agree.
    greater_at: usize,
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn column(&self, v: usize) -> Vec<u64> {
        let mut col = vec![0u64; self.words];
        for w in self.g.neighbors(v) {
            let p = self.pos_of[w];
            if p != usize::MAX {
                col[p / 64] |= 1 << (p % 64);
            }
        }
        col
    }

    fn orbit_roots(&self, depth: usize) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for gamma in &self.generators {
            if self.order[..depth].iter().any(|&v| gamma[v] != v) {
                continue;
            }
            for v in 0..self.n {
                let (a, b) = (find(&mut parent, v), find(&mut parent, gamma[v]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..self.n).map(|v| find(&mut parent, v)).collect()
    }

    fn leaf(&mut self) {
        if !self.have_best || self.greater_at != usize::MAX {
            self.best_order.clone_from(&self.order);
            self.best_cols.clone_from(&self.cur_cols);
            self.have_best = true;
            self.greater_at = usize::MAX;
        } else if self.generators.len() < MAX_GENERATORS {
            let mut gamma = vec![0; self.n];
            for i in 0..self.n {
                gamma[self.best_order[i]] = self.order[i];
            }
            self.generators.push(gamma);
        }
    }

    fn run(&mut self, depth: usize) {
        if depth == self.n {
            self.leaf();
            return;
        }
        let cell = (0..self.n)
            .filter(|&v| self.pos_of[v] == usize::MAX)
            .map(|v| self.color[v])
            .min()
            .expect("unplaced vertex exists");
        let mut best_col: Option<Vec<u64>> = None;
        let mut tied: Vec<usize> = Vec::new();
        for v in 0..self.n {
            if self.pos_of[v] != usize::MAX || self.color[v] != cell {
                continue;
            }
            let col = self.column(v);
            match best_col.as_ref().map(|b| compare_columns(&col, b)) {
                None | Some(Ordering::Greater) => {
                    best_col = Some(col);
                    tied.clear();
                    tied.push(v);
                }
                Some(Ordering::Equal) => tied.push(v),
                Some(Ordering::Less) => {}
            }
        }
        let col = best_col.expect("cell is nonempty");
        let mut explored: Vec<usize> = Vec::new();
        for (idx, &v) in tied.iter().enumerate() {
            if tied[..idx].iter().any(|&w| self.twin[w] == self.twin[v]) {
                continue;
            }
            if !explored.is_empty() && !self.generators.is_empty() {
                let roots = self.orbit_roots(depth);
                if explored.iter().any(|&w| roots[w] == roots[v]) {
                    continue;
                }
            }
            if self.have_best && self.greater_at > depth {
                match compare_columns(&col, &self.best_cols[depth]) {
                    Ordering::Less => return,
                    Ordering::Greater => self.greater_at = depth,
                    Ordering::Equal => self.greater_at = usize::MAX,
                }
            }
            explored.push(v);
            self.order.push(v);
            self.pos_of[v] = depth;
            self.cur_cols.push(col.clone());
            self.run(depth + 1);
            self.cur_cols.pop();
            self.pos_of[v] = usize::MAX;
            self.order.pop();
        }
    }
}

/// Canonical vertex order: `result[pos]` is the vertex placed at `pos`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let mut search = Search {
        g,
        n,
        words: n.div_ceil(64),
        color: refined_colors(g),
        twin: twin_representatives(g),
        order: Vec::with_capacity(n),
        pos_of: vec![usize::MAX; n],
        cur_cols: Vec::with_capacity(n),
        best_order: Vec::new(),
        best_cols: Vec::new(),
        have_best: false,
        greater_at: usize::MAX,
        generators: Vec::new(),
    };
    search.run(0);
    search.best_order
}

fn relabel(g: &Graph, order: &[usize]) -> Graph {
    let mut perm = vec![0; g.order()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    g.permute(&perm)
}

/// The canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    relabel(g, &canonical_labeling(g))
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(graph6_bytes(&canonical_graph(g)))
}

/// Canonical form together with the edge of `g` that maps to the last edge
/// (in graph6 bit order) of the canonical graph. Deleting this edge is the
/// canonical way to shrink `g` by one edge.
pub fn canonical_form_and_last_edge(g: &Graph) -> (CanonicalForm, Option<(usize, usize)>) {
    let order = canonical_labeling(g);
    let canon = relabel(g, &order);
    let mut last = None;
    'outer: for j in (1..canon.order()).rev() {
        for i in (0..j).rev() {
            if canon.has_edge(i, j) {
                let (a, b) = (order[i], order[j]);
                last = Some((a.min(b), a.max(b)));
                break 'outer;
            }
        }
    }
    (CanonicalForm(graph6_bytes(&canon)), last)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{family, FamilySpec};
    use alloc::collections::BTreeSet;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Brute-force invariant: lexicographically largest graph6 string over
    /// all n! vertex orders, with no partition constraint.
    fn brute_form(g: &Graph) -> Vec<u8> {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = graph6_bytes(g);
        permutations(&mut perm, 0, &mut |p| {
            let s = graph6_bytes(&g.permute(p));
            if s > best {
                best = s;
            }
        });
        best
    }

    fn permutations(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permutations(p, k + 1, f);
            p.swap(k, i);
        }
    }

    fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        (0u64..1 << pairs.len()).map(move |mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    }

    #[test]
    fn c5_relabelings_agree() {
        let c5 = family(&FamilySpec::Cycle { n: 5 }).unwrap();
        let other = Graph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_form(&c5), canonical_form(&other));
    }

    #[test]
    fn claw_differs_from_p4() {
        let claw = family(&FamilySpec::Star { leaves: 3 }).unwrap();
        let p4 = family(&FamilySpec::Path { n: 4 }).unwrap();
        assert_ne!(canonical_form(&claw), canonical_form(&p4));
    }

    #[test]
    fn eleven_graphs_on_four_vertices() {
        let forms: BTreeSet<_> = labeled_graphs(4).map(|g| canonical_form(&g)).collect();
        assert_eq!(forms.len(), 11);
    }

    /// Partition of all labeled graphs on n vertices induced by the canonical
    /// form equals the one induced by the brute-force invariant.
    #[test]
    fn agrees_with_brute_force_partition() {
        for (n, classes) in [(3, 4), (4, 11), (5, 34)] {
            let mut pairs = BTreeSet::new();
            let mut fast = BTreeSet::new();
            let mut slow = BTreeSet::new();
            for g in labeled_graphs(n) {
                let a = canonical_form(&g);
                let b = brute_form(&g);
                fast.insert(a.clone());
                slow.insert(b.clone());
                pairs.insert((a, b));
            }
            assert_eq!(fast.len(), classes);
            assert_eq!(slow.len(), classes);
            assert_eq!(pairs.len(), classes, "n = {n}");
        }
    }

    #[test]
    fn agrees_with_brute_force_on_random_seven_vertex_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut pairs = BTreeSet::new();
        let mut fast = BTreeSet::new();
        for _ in 0..150 {
            let mut g = Graph::empty(7);
            for i in 0..7 {
                for j in i + 1..7 {
                    if rng.gen_bool(0.4) {
                        g.add_edge(i, j);
                    }
                }
            }
            let a = canonical_form(&g);
            fast.insert(a.clone());
            pairs.insert((a, brute_form(&g)));
        }
        assert_eq!(pairs.len(), fast.len());
    }

    #[test]
    fn permutation_invariance_on_symmetric_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let graphs = [
            family(&FamilySpec::CompleteBipartite { a: 2, b: 5 }).unwrap(),
            family(&FamilySpec::Star { leaves: 12 }).unwrap(),
            crate::families::copies(4, &family(&FamilySpec::Cycle { n: 5 }).unwrap()),
            crate::families::copies(3, &family(&FamilySpec::Complete { n: 4 }).unwrap()),
            family(&FamilySpec::Cycle { n: 18 }).unwrap(),
            Graph::empty(20),
            family(&FamilySpec::Fixture(crate::families::Fixture::H2)).unwrap(),
        ];
        for g in &graphs {
            let base = canonical_form(g);
            for _ in 0..30 {
                let mut perm: Vec<usize> = (0..g.order()).collect();
                perm.shuffle(&mut rng);
                assert_eq!(canonical_form(&g.permute(&perm)), base);
            }
            assert_eq!(base.to_graph().size(), g.size());
        }
    }

    #[test]
    fn last_edge_is_an_edge() {
        let g = family(&FamilySpec::Fixture(crate::families::Fixture::F2)).unwrap();
        let (_, last) = canonical_form_and_last_edge(&g);
        let (u, v) = last.unwrap();
        assert!(g.has_edge(u, v));
        assert_eq!(canonical_form_and_last_edge(&Graph::empty(3)).1, None);
    }
}
