//! Isomorph-free generation by canonical edge augmentation.
//!
//! Every graph is grown from the empty graph one edge at a time. A child
//! `C = P + e` is kept only if deleting the canonical last edge of `C`
//! (and, in isolate-free mode, any vertices left isolated) gives back a graph
//! isomorphic to `P`; children of one parent are deduplicated by canonical
//! form. Each isomorphism class then has exactly one generation path. For
//! subgraph-closed classes, a child outside the class is dropped together
//! with its whole subtree.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::canon::{canonical_form, canonical_form_and_last_edge, CanonicalForm};
use crate::cycles::{
    find_s_chorded_cycle, has_cycle_of_length, has_k_minus_chorded_cycle, has_path_on,
    is_chorded_cycle_free,
};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphClass {
    All,
    ChordedCycleFree,
    DoublyChordedCycleFree,
    /// No (2k−3)-chorded (2k+1)-cycle.
    KChordedCycleFree {
        k: usize,
    },
    /// No path on this many vertices.
    PathFree {
        vertices: usize,
    },
    /// Every cycle has length at most `k`.
    CircumferenceAtMost {
        k: usize,
    },
    /// No cycle through all vertices; subgraph-closed only at fixed order.
    NonHamiltonian,
    Connected,
}

impl GraphClass {
    pub fn contains(&self, g: &Graph) -> bool {
        match *self {
            GraphClass::All => true,
            GraphClass::ChordedCycleFree => is_chorded_cycle_free(g),
            GraphClass::DoublyChordedCycleFree => find_s_chorded_cycle(g, 2).is_none(),
            GraphClass::KChordedCycleFree { k } => has_k_minus_chorded_cycle(g, k).is_none(),
            GraphClass::PathFree { vertices } => !has_path_on(g, vertices),
            GraphClass::CircumferenceAtMost { k } => {
                (k + 1..=g.order()).all(|len| !has_cycle_of_length(g, len))
            }
            GraphClass::NonHamiltonian => g.order() < 3 || !has_cycle_of_length(g, g.order()),
            GraphClass::Connected => g.is_connected(),
        }
    }

    /// Whether membership survives deleting an edge (and, in isolate-free
    /// mode, the isolated vertices this creates).
    pub fn is_hereditary(&self, mode: EnumerationMode) -> bool {
        match self {
            GraphClass::Connected => false,
            GraphClass::NonHamiltonian => matches!(mode, EnumerationMode::Order(_)),
            _ => true,
        }
    }

    pub fn name(&self) -> String {
        match *self {
            GraphClass::All => "all".into(),
            GraphClass::ChordedCycleFree => "chorded-cycle-free".into(),
            GraphClass::DoublyChordedCycleFree => "doubly-chorded-cycle-free".into(),
            GraphClass::KChordedCycleFree { k } => format!("k-chorded-cycle-free:{k}"),
            GraphClass::PathFree { vertices } => format!("path-free:{vertices}"),
            GraphClass::CircumferenceAtMost { k } => format!("circumference-at-most:{k}"),
            GraphClass::NonHamiltonian => "non-hamiltonian".into(),
            GraphClass::Connected => "connected".into(),
        }
    }

    pub fn parse(text: &str) -> Option<GraphClass> {
        let (name, arg) = match text.split_once(':') {
            Some((n, a)) => (n, Some(a.trim().parse::<usize>().ok()?)),
            None => (text, None),
        };
        Some(match (name.trim(), arg) {
            ("all", None) => GraphClass::All,
            ("chorded-cycle-free", None) => GraphClass::ChordedCycleFree,
            ("doubly-chorded-cycle-free", None) => GraphClass::DoublyChordedCycleFree,
            ("k-chorded-cycle-free", Some(k)) if k >= 2 => GraphClass::KChordedCycleFree { k },
            ("path-free", Some(t)) => GraphClass::PathFree { vertices: t },
            ("circumference-at-most", Some(k)) => GraphClass::CircumferenceAtMost { k },
            ("non-hamiltonian", None) => GraphClass::NonHamiltonian,
            ("connected", None) => GraphClass::Connected,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EnumerationMode {
    /// Graphs with exactly this many edges and no isolated vertices.
    IsolateFreeSize(usize),
    /// All graphs on exactly this many vertices.
    Order(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub max_edges: usize,
    pub max_order: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            max_edges: 12,
            max_order: 10,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    EdgeCapExceeded { m: usize, cap: usize },
    OrderCapExceeded { n: usize, cap: usize },
}

impl fmt::Display for EnumerationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerationError::EdgeCapExceeded { m, cap } => {
                write!(
                    f,
                    "enumeration by size capped at {cap} edges, asked for {m}"
                )
            }
            EnumerationError::OrderCapExceeded { n, cap } => {
                write!(
                    f,
                    "enumeration by order capped at {cap} vertices, asked for {n}"
                )
            }
        }
    }
}

impl core::error::Error for EnumerationError {}

#[derive(Debug, Clone)]
pub struct Enumerator {
    mode: EnumerationMode,
    class: GraphClass,
    prune: bool,
}

/// Nodes of the generation tree above a split depth that are themselves
/// emitted, plus the nodes at the split depth whose subtrees are still to be
/// walked.
#[derive(Debug, Clone, Default)]
pub struct Split {
    pub emitted: Vec<Graph>,
    pub frontier: Vec<Graph>,
}

impl Enumerator {
    pub fn new(
        mode: EnumerationMode,
        class: GraphClass,
        limits: EnumerationLimits,
    ) -> Result<Self, EnumerationError> {
        match mode {
            EnumerationMode::IsolateFreeSize(m) if m > limits.max_edges => {
                return Err(EnumerationError::EdgeCapExceeded {
                    m,
                    cap: limits.max_edges,
                })
            }
            EnumerationMode::Order(n) if n > limits.max_order => {
                return Err(EnumerationError::OrderCapExceeded {
                    n,
                    cap: limits.max_order,
                })
            }
            _ => {}
        }
        Ok(Enumerator {
            mode,
            class,
            prune: class.is_hereditary(mode),
        })
    }

    /// Filters only the final graphs, even for subgraph-closed classes.
    pub fn without_pruning(mut self) -> Self {
        self.prune = false;
        self
    }

    pub fn mode(&self) -> EnumerationMode {
        self.mode
    }

    pub fn class(&self) -> GraphClass {
        self.class
    }

    pub fn prunes(&self) -> bool {
        self.prune
    }

    pub fn root(&self) -> Graph {
        match self.mode {
            EnumerationMode::IsolateFreeSize(_) => Graph::empty(0),
            EnumerationMode::Order(n) => Graph::empty(n),
        }
    }

    fn expands(&self, g: &Graph) -> bool {
        match self.mode {
            EnumerationMode::IsolateFreeSize(m) => g.size() < m,
            EnumerationMode::Order(n) => g.size() < n * n.saturating_sub(1) / 2,
        }
    }

    fn emits(&self, g: &Graph) -> bool {
        let depth_ok = match self.mode {
            EnumerationMode::IsolateFreeSize(m) => g.size() == m,
            EnumerationMode::Order(_) => true,
        };
        depth_ok && (self.prune || self.class.contains(g))
    }

    /// Canonical children of a node, in a deterministic order.
    pub fn children(&self, parent: &Graph) -> Vec<Graph> {
        let n = parent.order();
        let isolate_free = matches!(self.mode, EnumerationMode::IsolateFreeSize(_));
        let parent_form = canonical_form(parent);
        let mut parent_degrees = parent.degrees();
        parent_degrees.sort_unstable();

        let mut candidates: Vec<(usize, usize, usize)> = Vec::new(); // (u, v, new vertices)
        for u in 0..n {
            for v in u + 1..n {
                if !parent.has_edge(u, v) {
                    candidates.push((u, v, 0));
                }
            }
        }
        if isolate_free {
            for u in 0..n {
                candidates.push((u, n, 1));
            }
            candidates.push((n, n + 1, 2));
        }

        let mut seen: BTreeSet<CanonicalForm> = BTreeSet::new();
        let mut out = Vec::new();
        for (u, v, extra) in candidates {
            let mut child = if extra == 0 {
                parent.clone()
            } else {
                parent.with_extra_vertices(extra)
            };
            child.add_edge(u, v);
            let (form, last) = canonical_form_and_last_edge(&child);
            if seen.contains(&form) {
                continue;
            }
            let (a, b) = last.expect("child has an edge");
            if (a, b) != (u, v)
                && !self.is_canonical_parent(&child, (a, b), &parent_degrees, &parent_form)
            {
                continue;
            }
            if self.prune && !self.class.contains(&child) {
                seen.insert(form);
                continue;
            }
            out.push(form.to_graph());
            seen.insert(form);
        }
        out
    }

    fn is_canonical_parent(
        &self,
        child: &Graph,
        (a, b): (usize, usize),
        degrees: &[usize],
        form: &CanonicalForm,
    ) -> bool {
        let mut shrunk = child.clone();
        shrunk.remove_edge(a, b);
        if matches!(self.mode, EnumerationMode::IsolateFreeSize(_)) {
            shrunk = shrunk.without_isolates();
        }
        let mut d = shrunk.degrees();
        d.sort_unstable();
        d == degrees && canonical_form(&shrunk) == *form
    }

    /// Depth-first walk over the subtree below (and including) `node`,
    /// calling `f` on every graph to report.
    pub fn for_each_in_subtree(&self, node: &Graph, f: &mut impl FnMut(&Graph)) {
        if self.emits(node) {
            f(node);
        }
        if self.expands(node) {
            for child in self.children(node) {
                self.for_each_in_subtree(&child, f);
            }
        }
    }

    pub fn for_each(&self, mut f: impl FnMut(&Graph)) {
        let root = self.root();
        if self.prune && !self.class.contains(&root) {
            return;
        }
        self.for_each_in_subtree(&root, &mut f);
    }

    pub fn collect(&self) -> Vec<Graph> {
        let mut out = Vec::new();
        self.for_each(|g| out.push(g.clone()));
        out
    }

    /// Walks the tree down to `depth` edges. Subtrees of the returned
    /// frontier, together with `emitted`, cover every reported graph exactly
    /// once, so they can be processed independently.
    pub fn split(&self, depth: usize) -> Split {
        let mut split = Split::default();
        let root = self.root();
        if self.prune && !self.class.contains(&root) {
            return split;
        }
        let mut level = alloc::vec![root];
        for _ in 0..depth {
            let mut next = Vec::new();
            for g in &level {
                if self.emits(g) {
                    split.emitted.push(g.clone());
                }
                if self.expands(g) {
                    next.extend(self.children(g));
                }
            }
            level = next;
        }
        split.frontier = level;
        split
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;

    fn count(mode: EnumerationMode, class: GraphClass) -> usize {
        let mut c = 0;
        Enumerator::new(mode, class, EnumerationLimits::default())
            .unwrap()
            .for_each(|_| c += 1);
        c
    }

    #[test]
    fn isolate_free_counts() {
        let expected = [1, 1, 2, 5, 11, 26, 68, 177];
        for (m, &e) in expected.iter().enumerate() {
            assert_eq!(
                count(EnumerationMode::IsolateFreeSize(m), GraphClass::All),
                e,
                "m={m}"
            );
        }
    }

    #[test]
    fn order_counts() {
        let expected = [1, 1, 2, 4, 11, 34, 156];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(
                count(EnumerationMode::Order(n), GraphClass::All),
                e,
                "n={n}"
            );
        }
    }

    #[test]
    fn no_duplicates_and_exact_size() {
        let e = Enumerator::new(
            EnumerationMode::IsolateFreeSize(6),
            GraphClass::All,
            EnumerationLimits::default(),
        )
        .unwrap();
        let mut seen = BTreeSet::new();
        e.for_each(|g| {
            assert_eq!(g.size(), 6);
            assert!(g.is_isolate_free());
            assert!(seen.insert(canonical_form(g)));
        });
    }

    #[test]
    fn split_covers_everything() {
        let e = Enumerator::new(
            EnumerationMode::Order(6),
            GraphClass::All,
            EnumerationLimits::default(),
        )
        .unwrap();
        let split = e.split(3);
        let mut c = split.emitted.len();
        for node in &split.frontier {
            e.for_each_in_subtree(node, &mut |_| c += 1);
        }
        assert_eq!(c, 156);
    }

    #[test]
    fn caps_and_classes() {
        assert!(Enumerator::new(
            EnumerationMode::IsolateFreeSize(13),
            GraphClass::All,
            EnumerationLimits::default()
        )
        .is_err());
        assert!(!GraphClass::Connected.is_hereditary(EnumerationMode::Order(5)));
        assert!(GraphClass::NonHamiltonian.is_hereditary(EnumerationMode::Order(5)));
        assert!(!GraphClass::NonHamiltonian.is_hereditary(EnumerationMode::IsolateFreeSize(5)));
        for c in [
            GraphClass::All,
            GraphClass::ChordedCycleFree,
            GraphClass::DoublyChordedCycleFree,
            GraphClass::KChordedCycleFree { k: 3 },
            GraphClass::PathFree { vertices: 5 },
            GraphClass::CircumferenceAtMost { k: 4 },
            GraphClass::NonHamiltonian,
            GraphClass::Connected,
        ] {
            assert_eq!(GraphClass::parse(&c.name()), Some(c));
        }
        // connected graphs on 5 vertices
        assert_eq!(count(EnumerationMode::Order(5), GraphClass::Connected), 21);
    }
}
