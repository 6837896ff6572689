//! Adjacency spectral radius, Perron vectors, quotient matrices, exact
//! characteristic polynomials and the threshold functions.

pub mod charpoly;
pub mod exact;
pub mod quotient;
pub mod threshold;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;

pub use charpoly::{char_poly, CharPoly, CharPolyError};
pub use exact::LargestRoot;
pub use quotient::{quotient_matrix, QuotientError, QuotientMatrix};
pub use threshold::{theta, threshold, ThresholdError, ThresholdKind};

/// Stopping rule for power iteration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerConfig {
    /// Stop once successive Rayleigh quotients differ by at most this.
    pub rho_tolerance: f64,
    /// ... and the residual `‖Ax − ρx‖∞` is at most this.
    pub residual_tolerance: f64,
    pub max_iterations: usize,
}

impl Default for PowerConfig {
    fn default() -> Self {
        PowerConfig {
            rho_tolerance: 1e-12,
            residual_tolerance: 1e-9,
            max_iterations: 1_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralResult {
    pub rho: f64,
    /// Unit positive eigenvector for `rho`; present iff the graph is
    /// connected and has at least one vertex.
    pub perron: Option<Vec<f64>>,
    pub residual: f64,
    pub iterations: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SpectralError {
    NoConvergence { iterations: usize, residual: f64 },
    Disconnected { components: usize },
    EmptyGraph,
}

impl fmt::Display for SpectralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralError::NoConvergence {
                iterations,
                residual,
            } => {
                write!(f, "power iteration did not converge after {iterations} iterations (residual {residual:e})")
            }
            SpectralError::Disconnected { components } => {
                write!(
                    f,
                    "graph is disconnected ({components} components); no Perron vector"
                )
            }
            SpectralError::EmptyGraph => write!(f, "graph has no vertices"),
        }
    }
}

impl core::error::Error for SpectralError {}

/// Power iteration on `A + I` restricted to one connected component given as
/// adjacency lists over local indices. Returns `(rho, x, residual, iterations)`.
fn component_power(
    adj: &[Vec<usize>],
    cfg: &PowerConfig,
) -> Result<(f64, Vec<f64>, f64, usize), SpectralError> {
    let n = adj.len();
    if n == 1 {
        return Ok((0.0, vec![1.0], 0.0, 0));
    }
    // Start from (degree + 1), normalized; positive, so never orthogonal to
    // the Perron vector.
    let mut x: Vec<f64> = adj.iter().map(|a| a.len() as f64 + 1.0).collect();
    normalize(&mut x);
    let mut ax = vec![0.0; n];
    let mut rho_prev = f64::NAN;
    let mut residual = f64::INFINITY;
    for it in 1..=cfg.max_iterations {
        for (v, nb) in adj.iter().enumerate() {
            ax[v] = nb.iter().map(|&w| x[w]).sum();
        }
        let rho: f64 = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
        residual = x
            .iter()
            .zip(&ax)
            .map(|(xi, axi)| libm::fabs(axi - rho * xi))
            .fold(0.0, f64::max);
        if libm::fabs(rho - rho_prev) <= cfg.rho_tolerance && residual <= cfg.residual_tolerance {
            return Ok((rho, x, residual, it));
        }
        rho_prev = rho;
        for (xi, axi) in x.iter_mut().zip(&ax) {
            *xi += axi;
        }
        normalize(&mut x);
    }
    Err(SpectralError::NoConvergence {
        iterations: cfg.max_iterations,
        residual,
    })
}

fn normalize(x: &mut [f64]) {
    let norm = libm::sqrt(x.iter().map(|v| v * v).sum::<f64>());
    if norm > 0.0 {
        for v in x.iter_mut() {
            *v /= norm;
        }
    }
}

/// Spectral radius with the default stopping rule.
pub fn spectral_radius(g: &Graph) -> Result<SpectralResult, SpectralError> {
    spectral_radius_with(g, &PowerConfig::default())
}

/// Largest adjacency eigenvalue: the maximum over components of each
/// component's Perron value.
pub fn spectral_radius_with(g: &Graph, cfg: &PowerConfig) -> Result<SpectralResult, SpectralError> {
    let comps = g.components();
    if comps.is_empty() {
        return Ok(SpectralResult {
            rho: 0.0,
            perron: None,
            residual: 0.0,
            iterations: 0,
        });
    }
    let mut local = vec![usize::MAX; g.order()];
    let mut best: Option<(f64, Vec<f64>, f64)> = None;
    let mut iterations = 0;
    for comp in &comps {
        for (i, &v) in comp.iter().enumerate() {
            local[v] = i;
        }
        let adj: Vec<Vec<usize>> = comp
            .iter()
            .map(|&v| g.neighbors(v).map(|w| local[w]).collect())
            .collect();
        let (rho, x, res, it) = component_power(&adj, cfg)?;
        iterations += it;
        if best.as_ref().is_none_or(|b| rho > b.0) {
            best = Some((rho, x, res));
        }
    }
    let (rho, x, residual) = best.expect("at least one component");
    let perron = if comps.len() == 1 {
        debug_assert!(x.iter().all(|&v| v > 0.0));
        Some(x)
    } else {
        None
    };
    Ok(SpectralResult {
        rho,
        perron,
        residual,
        iterations,
    })
}

/// Unit positive eigenvector for the spectral radius of a connected graph.
pub fn perron_vector(g: &Graph) -> Result<Vec<f64>, SpectralError> {
    if g.order() == 0 {
        return Err(SpectralError::EmptyGraph);
    }
    let comps = g.components().len();
    if comps > 1 {
        return Err(SpectralError::Disconnected { components: comps });
    }
    Ok(spectral_radius(g)?
        .perron
        .expect("connected graph has a Perron vector"))
}

/// Spectral radius of a small dense nonnegative square matrix.
///
/// 2×2 matrices use the closed form; larger ones use power iteration on
/// `M + I` with Collatz–Wielandt bounds.
pub fn matrix_spectral_radius(m: &[Vec<f64>]) -> f64 {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    match n {
        0 => 0.0,
        1 => libm::fabs(m[0][0]),
        2 => {
            let (a, b, c, d) = (m[0][0], m[0][1], m[1][0], m[1][1]);
            let half = (a - d) / 2.0;
            (a + d) / 2.0 + libm::sqrt(half * half + b * c)
        }
        _ => {
            let mut x = vec![1.0; n];
            let mut lambda = 0.0;
            for _ in 0..1_000_000 {
                let y: Vec<f64> = (0..n)
                    .map(|i| x[i] + (0..n).map(|j| m[i][j] * x[j]).sum::<f64>())
                    .collect();
                let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
                for i in 0..n {
                    if x[i] > 1e-300 {
                        let r = y[i] / x[i];
                        lo = lo.min(r);
                        hi = hi.max(r);
                    }
                }
                let top = y.iter().cloned().fold(0.0, f64::max);
                let next = top / x.iter().cloned().fold(0.0, f64::max) - 1.0;
                x = y.iter().map(|v| v / top).collect();
                if hi - lo <= 1e-13 {
                    return (hi + lo) / 2.0 - 1.0;
                }
                if libm::fabs(next - lambda) <= 1e-15 * next.max(1.0) {
                    return next;
                }
                lambda = next;
            }
            lambda
        }
    }
}
