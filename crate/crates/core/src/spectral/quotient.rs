use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;

use super::matrix_spectral_radius;

/// Quotient of the adjacency matrix with respect to a vertex partition.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientMatrix {
    /// `entries[i][j]`: average number of neighbors in part `j` of a vertex in part `i`.
    pub entries: Vec<Vec<f64>>,
    pub part_sizes: Vec<usize>,
    /// `counts[i][j] = Σ_{u∈V_i} |N(u) ∩ V_j|`, so `counts[i][j] = counts[j][i]`.
    pub counts: Vec<Vec<usize>>,
    /// Every vertex of part `i` has the same number of neighbors in part `j`.
    pub equitable: bool,
}

impl QuotientMatrix {
    pub fn spectral_radius(&self) -> f64 {
        matrix_spectral_radius(&self.entries)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuotientError {
    EmptyPart(usize),
    VertexOutOfRange(usize),
    VertexRepeated(usize),
    VertexMissing(usize),
}

impl fmt::Display for QuotientError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientError::EmptyPart(i) => write!(f, "part {i} is empty"),
            QuotientError::VertexOutOfRange(v) => write!(f, "vertex {v} out of range"),
            QuotientError::VertexRepeated(v) => {
                write!(f, "vertex {v} appears in more than one part")
            }
            QuotientError::VertexMissing(v) => write!(f, "vertex {v} is in no part"),
        }
    }
}

impl core::error::Error for QuotientError {}

pub fn quotient_matrix(
    g: &Graph,
    partition: &[Vec<usize>],
) -> Result<QuotientMatrix, QuotientError> {
    let n = g.order();
    let mut part_of = vec![usize::MAX; n];
    for (i, part) in partition.iter().enumerate() {
        if part.is_empty() {
            return Err(QuotientError::EmptyPart(i));
        }
        for &v in part {
            if v >= n {
                return Err(QuotientError::VertexOutOfRange(v));
            }
            if part_of[v] != usize::MAX {
                return Err(QuotientError::VertexRepeated(v));
            }
            part_of[v] = i;
        }
    }
    if let Some(v) = part_of.iter().position(|&p| p == usize::MAX) {
        return Err(QuotientError::VertexMissing(v));
    }
    let k = partition.len();
    let mut counts = vec![vec![0usize; k]; k];
    let mut equitable = true;
    for (i, part) in partition.iter().enumerate() {
        let mut first: Option<Vec<usize>> = None;
        for &u in part {
            let mut row = vec![0usize; k];
            for w in g.neighbors(u) {
                row[part_of[w]] += 1;
            }
            for j in 0..k {
                counts[i][j] += row[j];
            }
            match &first {
                None => first = Some(row),
                Some(f) if *f != row => equitable = false,
                _ => {}
            }
        }
    }
    let entries = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| counts[i][j] as f64 / partition[i].len() as f64)
                .collect()
        })
        .collect();
    Ok(QuotientMatrix {
        entries,
        part_sizes: partition.iter().map(Vec::len).collect(),
        counts,
        equitable,
    })
}
