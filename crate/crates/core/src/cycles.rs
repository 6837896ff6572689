//! Chorded-cycle detection with explicit witnesses.
//!
//! `has_chorded_cycle` is polynomial: an edge `xy` is a chord of some cycle
//! iff `x` and `y` still share a block after deleting `xy`; two internally
//! disjoint `x`–`y` paths (unit vertex capacities, max-flow 2) then close a
//! cycle with chord `xy`. Fixed-length searches backtrack over cycles rooted
//! at their minimum vertex.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;
use crate::structure::blocks;

/// A cycle `c₀ c₁ … c_{L−1}` together with all of its chords.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleWitness {
    pub cycle: Vec<usize>,
    /// Every edge of the graph joining two non-consecutive cycle vertices,
    /// as `(min, max)` pairs in lexicographic order.
    pub chords: Vec<(usize, usize)>,
}

impl CycleWitness {
    /// Builds the witness for a vertex sequence, collecting all chords.
    pub fn from_cycle(g: &Graph, cycle: Vec<usize>) -> CycleWitness {
        let len = cycle.len();
        let mut chords = Vec::new();
        for i in 0..len {
            for j in i + 2..len {
                if i == 0 && j == len - 1 {
                    continue;
                }
                let (a, b) = (cycle[i], cycle[j]);
                if g.has_edge(a, b) {
                    chords.push((a.min(b), a.max(b)));
                }
            }
        }
        chords.sort_unstable();
        CycleWitness { cycle, chords }
    }

    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    pub fn chord_count(&self) -> usize {
        self.chords.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessError {
    TooShort {
        len: usize,
    },
    VertexOutOfRange {
        vertex: usize,
    },
    RepeatedVertex {
        vertex: usize,
    },
    MissingCycleEdge {
        u: usize,
        v: usize,
    },
    ChordNotAnEdge {
        u: usize,
        v: usize,
    },
    ChordOffCycle {
        u: usize,
        v: usize,
    },
    ChordIsCycleEdge {
        u: usize,
        v: usize,
    },
    DuplicateChord {
        u: usize,
        v: usize,
    },
    /// The chord list leaves out chords that the cycle actually has.
    IncompleteChords {
        listed: usize,
        actual: usize,
    },
    TooFewChords {
        found: usize,
        required: usize,
    },
}

impl fmt::Display for WitnessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessError::TooShort { len } => write!(f, "cycle of length {len} is too short"),
            WitnessError::VertexOutOfRange { vertex } => write!(f, "vertex {vertex} out of range"),
            WitnessError::RepeatedVertex { vertex } => {
                write!(f, "vertex {vertex} repeats on the cycle")
            }
            WitnessError::MissingCycleEdge { u, v } => {
                write!(f, "cycle edge {u}-{v} is not in the graph")
            }
            WitnessError::ChordNotAnEdge { u, v } => write!(f, "chord {u}-{v} is not in the graph"),
            WitnessError::ChordOffCycle { u, v } => write!(f, "chord {u}-{v} leaves the cycle"),
            WitnessError::ChordIsCycleEdge { u, v } => write!(f, "chord {u}-{v} is a cycle edge"),
            WitnessError::DuplicateChord { u, v } => write!(f, "chord {u}-{v} listed twice"),
            WitnessError::IncompleteChords { listed, actual } => {
                write!(f, "{listed} chords listed but the cycle has {actual}")
            }
            WitnessError::TooFewChords { found, required } => {
                write!(f, "{found} chords, at least {required} required")
            }
        }
    }
}

impl core::error::Error for WitnessError {}

/// Checks a witness against `g` from scratch: a simple cycle of length ≥ 3,
/// chords that are non-cycle graph edges between cycle vertices, the chord
/// list complete, and at least `min_chords` of them.
pub fn validate_witness(
    g: &Graph,
    w: &CycleWitness,
    min_chords: usize,
) -> Result<(), WitnessError> {
    let len = w.cycle.len();
    if len < 3 {
        return Err(WitnessError::TooShort { len });
    }
    let n = g.order();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in w.cycle.iter().enumerate() {
        if v >= n {
            return Err(WitnessError::VertexOutOfRange { vertex: v });
        }
        if pos[v] != usize::MAX {
            return Err(WitnessError::RepeatedVertex { vertex: v });
        }
        pos[v] = i;
    }
    for i in 0..len {
        let (u, v) = (w.cycle[i], w.cycle[(i + 1) % len]);
        if !g.has_edge(u, v) {
            return Err(WitnessError::MissingCycleEdge { u, v });
        }
    }
    let mut seen: Vec<(usize, usize)> = Vec::with_capacity(w.chords.len());
    for &(u, v) in &w.chords {
        if u >= n || v >= n || !g.has_edge(u, v) {
            return Err(WitnessError::ChordNotAnEdge { u, v });
        }
        if pos[u] == usize::MAX || pos[v] == usize::MAX {
            return Err(WitnessError::ChordOffCycle { u, v });
        }
        let gap = pos[u].abs_diff(pos[v]);
        if gap == 1 || gap == len - 1 {
            return Err(WitnessError::ChordIsCycleEdge { u, v });
        }
        let key = (u.min(v), u.max(v));
        if seen.contains(&key) {
            return Err(WitnessError::DuplicateChord { u, v });
        }
        seen.push(key);
    }
    let actual = g.edges_within(&w.cycle) - len;
    if actual != w.chords.len() {
        return Err(WitnessError::IncompleteChords {
            listed: w.chords.len(),
            actual,
        });
    }
    if actual < min_chords {
        return Err(WitnessError::TooFewChords {
            found: actual,
            required: min_chords,
        });
    }
    Ok(())
}

/// Largest order accepted by [`chorded_cycle_oracle`].
pub const ORACLE_MAX_ORDER: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleTooLarge {
    pub order: usize,
    pub limit: usize,
}

impl fmt::Display for OracleTooLarge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "cycle oracle limited to {} vertices, got {}",
            self.limit, self.order
        )
    }
}

impl core::error::Error for OracleTooLarge {}

/// Exhaustive reference: walks every simple cycle once (rooted at its
/// minimum vertex, second vertex below the last) and reports whether one of
/// length `len` (any length if `None`) has at least `s` chords.
pub fn chorded_cycle_oracle(
    g: &Graph,
    s: usize,
    len: Option<usize>,
) -> Result<bool, OracleTooLarge> {
    let n = g.order();
    if n > ORACLE_MAX_ORDER {
        return Err(OracleTooLarge {
            order: n,
            limit: ORACLE_MAX_ORDER,
        });
    }
    fn walk(
        g: &Graph,
        path: &mut Vec<usize>,
        on: &mut [bool],
        s: usize,
        len: Option<usize>,
    ) -> bool {
        let root = path[0];
        let last = *path.last().unwrap();
        let l = path.len();
        if l >= 3 && g.has_edge(last, root) && path[1] < last && len.is_none_or(|k| k == l) {
            let chords = g.edges_within(path) - l;
            if chords >= s {
                return true;
            }
        }
        if len.is_some_and(|k| l >= k) {
            return false;
        }
        for w in g.neighbors(last) {
            if w > root && !on[w] {
                on[w] = true;
                path.push(w);
                let hit = walk(g, path, on, s, len);
                path.pop();
                on[w] = false;
                if hit {
                    return true;
                }
            }
        }
        false
    }
    let mut on = vec![false; n];
    for r in 0..n {
        let mut path = vec![r];
        on[r] = true;
        let hit = walk(g, &mut path, &mut on, s, len);
        on[r] = false;
        if hit {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Residual network for unit-capacity max-flow.
struct Flow {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u8>,
}

impl Flow {
    fn new(nodes: usize) -> Flow {
        Flow {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    // arc e and its reverse e ^ 1
    fn arc(&mut self, a: usize, b: usize) {
        self.head[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(1);
        self.head[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut via = vec![usize::MAX; self.head.len()];
        let mut queue = alloc::collections::VecDeque::new();
        queue.push_back(s);
        let mut reached = false;
        while let Some(a) = queue.pop_front() {
            if a == t {
                reached = true;
                break;
            }
            for &e in &self.head[a] {
                let b = self.to[e];
                if self.cap[e] > 0 && b != s && via[b] == usize::MAX {
                    via[b] = e;
                    queue.push_back(b);
                }
            }
        }
        if !reached {
            return false;
        }
        let mut b = t;
        while b != s {
            let e = via[b];
            self.cap[e] -= 1;
            self.cap[e ^ 1] += 1;
            b = self.to[e ^ 1];
        }
        true
    }
}

/// Two internally vertex-disjoint `x`–`y` paths in `g` (which must not
/// contain the edge `xy`), if they exist.
fn two_disjoint_paths(g: &Graph, x: usize, y: usize) -> Option<[Vec<usize>; 2]> {
    let n = g.order();
    // v_in = 2v, v_out = 2v + 1
    let mut f = Flow::new(2 * n);
    for v in 0..n {
        f.arc(2 * v, 2 * v + 1);
    }
    for (u, v) in g.edges() {
        f.arc(2 * u + 1, 2 * v);
        f.arc(2 * v + 1, 2 * u);
    }
    let (s, t) = (2 * x + 1, 2 * y);
    if !(f.augment(s, t) && f.augment(s, t)) {
        return None;
    }
    // Forward arcs have even index; saturated ones carry flow.
    let mut used = vec![false; f.to.len()];
    let mut paths: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
    for path in paths.iter_mut() {
        path.push(x);
        let mut a = s;
        while a != t {
            let e = *f.head[a]
                .iter()
                .find(|&&e| e % 2 == 0 && f.cap[e] == 0 && !used[e])
                .expect("flow conservation");
            used[e] = true;
            let b = f.to[e];
            if b % 2 == 0 {
                path.push(b / 2);
            }
            a = b;
        }
    }
    Some(paths)
}

/// Returns a cycle with at least one chord, if the graph has one.
pub fn has_chorded_cycle(g: &Graph) -> Option<CycleWitness> {
    let (x, y) = chord_candidate(g)?;
    let mut h = g.clone();
    h.remove_edge(x, y);
    let [p, q] = two_disjoint_paths(&h, x, y).expect("x and y share a block of G − xy");
    let mut cycle = p;
    cycle.extend(q.iter().rev().skip(1).take(q.len() - 2));
    Some(CycleWitness::from_cycle(g, cycle))
}

/// `true` iff no cycle of `g` has a chord.
pub fn is_chorded_cycle_free(g: &Graph) -> bool {
    chord_candidate(g).is_none()
}

/// First edge `xy` (in edge order) whose endpoints share a block of `G − xy`.
fn chord_candidate(g: &Graph) -> Option<(usize, usize)> {
    // Only edges inside a block with at least four vertices can be chords.
    let whole = blocks(g);
    let mut h = g.clone();
    for (x, y) in g.edges() {
        let b = whole.common_block(x, y).expect("an edge lies in a block");
        if whole.blocks[b].len() < 4 {
            continue;
        }
        h.remove_edge(x, y);
        let found = blocks(&h).common_block(x, y).is_some();
        h.add_edge(x, y);
        if found {
            return Some((x, y));
        }
    }
    None
}

/// A cycle of length exactly `len` with at least `s` chords, found by
/// backtracking with distance and chord-count pruning.
pub fn find_s_chorded_k_cycle(g: &Graph, s: usize, len: usize) -> Option<CycleWitness> {
    let n = g.order();
    if len < 3 || len > n {
        return None;
    }
    // A len-cycle has at most C(len, 2) − len chords.
    if s > len * (len - 1) / 2 - len {
        return None;
    }
    let delta = g.max_degree();
    let mut search = KCycleSearch {
        g,
        s,
        len,
        delta,
        path: Vec::with_capacity(len),
        mask: vec![0u64; n.div_ceil(64).max(1)],
        dist: vec![usize::MAX; n],
        edges_in: 0,
    };
    for root in 0..n {
        if g.degree(root) < 2 {
            continue;
        }
        search.distances_from(root);
        search.path.clear();
        search.path.push(root);
        search.mask.iter_mut().for_each(|w| *w = 0);
        search.mask[root / 64] |= 1 << (root % 64);
        search.edges_in = 0;
        if search.extend() {
            let cycle = core::mem::take(&mut search.path);
            return Some(CycleWitness::from_cycle(g, cycle));
        }
    }
    None
}

struct KCycleSearch<'a> {
    g: &'a Graph,
    s: usize,
    len: usize,
    delta: usize,
    path: Vec<usize>,
    mask: Vec<u64>,
    /// BFS distance to the root within vertices ≥ root.
    dist: Vec<usize>,
    /// Edges induced by the path's vertex set.
    edges_in: usize,
}

impl KCycleSearch<'_> {
    fn distances_from(&mut self, root: usize) {
        self.dist.iter_mut().for_each(|d| *d = usize::MAX);
        self.dist[root] = 0;
        let mut queue = alloc::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for w in self.g.neighbors(v) {
                if w > root && self.dist[w] == usize::MAX {
                    self.dist[w] = self.dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }

    /// Upper bound on the chords of any completion of the current path.
    fn chord_bound(&self) -> usize {
        let l = self.path.len();
        let extra: usize = (l..self.len).map(|size| size.min(self.delta)).sum();
        (self.edges_in + extra).saturating_sub(self.len)
    }

    fn extend(&mut self) -> bool {
        let l = self.path.len();
        let root = self.path[0];
        let last = self.path[l - 1];
        if l == self.len {
            return self.g.has_edge(last, root)
                && self.path[1] < last
                && self.edges_in - self.len >= self.s;
        }
        if self.chord_bound() < self.s {
            return false;
        }
        // edges still to place after stepping to the next vertex
        let after = self.len - l;
        for w in self.g.neighbors(last) {
            if w <= root || self.mask[w / 64] >> (w % 64) & 1 == 1 || self.dist[w] > after {
                continue;
            }
            let added = self.g.degree_into(w, &self.mask);
            self.path.push(w);
            self.mask[w / 64] |= 1 << (w % 64);
            self.edges_in += added;
            if self.extend() {
                return true;
            }
            self.edges_in -= added;
            self.mask[w / 64] &= !(1 << (w % 64));
            self.path.pop();
        }
        false
    }
}

/// A (2k−3)-chorded (2k+1)-cycle.
pub fn has_k_minus_chorded_cycle(g: &Graph, k: usize) -> Option<CycleWitness> {
    assert!(k >= 2, "k must be at least 2");
    find_s_chorded_k_cycle(g, 2 * k - 3, 2 * k + 1)
}

/// A cycle of any length with at least `s` chords (shortest length first).
pub fn find_s_chorded_cycle(g: &Graph, s: usize) -> Option<CycleWitness> {
    (3..=g.order()).find_map(|len| find_s_chorded_k_cycle(g, s, len))
}

/// `true` iff `g` has a cycle of length exactly `len`.
pub fn has_cycle_of_length(g: &Graph, len: usize) -> bool {
    find_s_chorded_k_cycle(g, 0, len).is_some()
}

/// Length of a longest cycle, 0 for forests.
pub fn circumference(g: &Graph) -> usize {
    (3..=g.order())
        .rev()
        .find(|&len| has_cycle_of_length(g, len))
        .unwrap_or(0)
}

/// `true` iff `g` contains a path on `t` vertices (not necessarily induced).
pub fn has_path_on(g: &Graph, t: usize) -> bool {
    let n = g.order();
    if t == 0 {
        return true;
    }
    if t > n {
        return false;
    }
    fn walk(g: &Graph, v: usize, left: usize, on: &mut [bool]) -> bool {
        if left == 0 {
            return true;
        }
        for w in g.neighbors(v) {
            if !on[w] {
                on[w] = true;
                let hit = walk(g, w, left - 1, on);
                on[w] = false;
                if hit {
                    return true;
                }
            }
        }
        false
    }
    let mut on = vec![false; n];
    (0..n).any(|v| {
        on[v] = true;
        let hit = walk(g, v, t - 1, &mut on);
        on[v] = false;
        hit
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{family, FamilySpec};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn fam(text: &str) -> Graph {
        family(&FamilySpec::parse(text).unwrap()).unwrap()
    }

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
        let mut g = Graph::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    #[test]
    fn oracle_examples() {
        let mut c6 = fam("cycle:6");
        c6.add_edge(0, 3);
        assert!(chorded_cycle_oracle(&c6, 1, None).unwrap());
        assert!(!chorded_cycle_oracle(&fam("complete_bipartite:2,3"), 1, None).unwrap());
        assert!(chorded_cycle_oracle(&Graph::empty(13), 1, None).is_err());
    }

    #[test]
    fn chorded_cycle_examples() {
        let w = has_chorded_cycle(&fam("complete:4")).unwrap();
        assert_eq!(w.len(), 4);
        validate_witness(&fam("complete:4"), &w, 1).unwrap();
        assert!(has_chorded_cycle(&fam("complete_bipartite:2,5")).is_none());
        assert!(has_chorded_cycle(&fam("book_star:2,3")).is_none());
        let sk4 = fam("sk4");
        let w = has_chorded_cycle(&sk4).unwrap();
        validate_witness(&sk4, &w, 1).unwrap();
    }

    #[test]
    fn detector_matches_oracle_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let n = rng.gen_range(1..=9);
            let p = rng.gen_range(0.1..0.6);
            let g = random_graph(&mut rng, n, p);
            let found = has_chorded_cycle(&g);
            assert_eq!(
                found.is_some(),
                chorded_cycle_oracle(&g, 1, None).unwrap(),
                "{g:?}"
            );
            assert_eq!(found.is_none(), is_chorded_cycle_free(&g));
            if let Some(w) = found {
                validate_witness(&g, &w, 1).unwrap();
            }
        }
    }

    #[test]
    fn k_cycle_examples() {
        let k5 = fam("complete:5");
        let w = find_s_chorded_k_cycle(&k5, 3, 5).unwrap();
        assert_eq!(w.chord_count(), 5);
        validate_witness(&k5, &w, 3).unwrap();
        assert!(find_s_chorded_k_cycle(&fam("clique_join:2,5"), 1, 5).is_none());
        let w = find_s_chorded_k_cycle(&fam("k1_join_p4"), 2, 5).unwrap();
        assert_eq!(w.chord_count(), 2);
        assert!(has_k_minus_chorded_cycle(&k5, 2).is_some());
        assert!(has_k_minus_chorded_cycle(&fam("clique_join:3,3"), 3).is_none());
        assert!(has_k_minus_chorded_cycle(&fam("book_star:3,0"), 2).is_none());
    }

    #[test]
    fn k_cycle_search_matches_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..300 {
            let n = rng.gen_range(3..=9);
            let p = rng.gen_range(0.2..0.8);
            let g = random_graph(&mut rng, n, p);
            let len = rng.gen_range(3..=n);
            let s = rng.gen_range(0..=4);
            let found = find_s_chorded_k_cycle(&g, s, len);
            assert_eq!(
                found.is_some(),
                chorded_cycle_oracle(&g, s, Some(len)).unwrap(),
                "{g:?} s={s} len={len}"
            );
            if let Some(w) = found {
                assert_eq!(w.len(), len);
                validate_witness(&g, &w, s).unwrap();
            }
        }
    }

    #[test]
    fn validator_rejects_bad_witnesses() {
        let k4 = fam("complete:4");
        let bad = CycleWitness {
            cycle: vec![0, 1, 2, 3],
            chords: vec![(0, 2)],
        };
        assert!(matches!(
            validate_witness(&k4, &bad, 1),
            Err(WitnessError::IncompleteChords { .. })
        ));
        let bad = CycleWitness {
            cycle: vec![0, 1, 2, 3],
            chords: vec![(0, 1), (1, 3)],
        };
        assert!(matches!(
            validate_witness(&k4, &bad, 1),
            Err(WitnessError::ChordIsCycleEdge { .. })
        ));
        let c4 = fam("cycle:4");
        let w = CycleWitness::from_cycle(&c4, vec![0, 1, 2, 3]);
        assert!(matches!(
            validate_witness(&c4, &w, 1),
            Err(WitnessError::TooFewChords { .. })
        ));
        let bad = CycleWitness {
            cycle: vec![0, 2, 1, 3],
            chords: vec![],
        };
        assert!(matches!(
            validate_witness(&c4, &bad, 0),
            Err(WitnessError::MissingCycleEdge { .. })
        ));
    }

    #[test]
    fn paths_and_circumference() {
        let p5 = fam("path:5");
        assert!(has_path_on(&p5, 5));
        assert!(!has_path_on(&p5, 6));
        assert_eq!(circumference(&p5), 0);
        assert_eq!(circumference(&fam("cycle:7")), 7);
        assert_eq!(circumference(&fam("book_star:3,2")), 3);
        assert!(has_cycle_of_length(&fam("complete:5"), 4));
    }
}
