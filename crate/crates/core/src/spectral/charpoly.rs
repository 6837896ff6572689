use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::graph::Graph;

/// Largest order accepted by [`char_poly`].
pub const CHAR_POLY_MAX_ORDER: usize = 32;

/// Characteristic polynomial `det(xI − A)` with exact integer coefficients,
/// `coeffs[i]` being the coefficient of `x^i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharPoly {
    pub coeffs: Vec<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CharPolyError {
    TooLarge { order: usize, limit: usize },
}

impl fmt::Display for CharPolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharPolyError::TooLarge { order, limit } => {
                write!(
                    f,
                    "characteristic polynomial limited to {limit} vertices, got {order}"
                )
            }
        }
    }
}

impl core::error::Error for CharPolyError {}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient(&self, power: usize) -> &BigInt {
        &self.coeffs[power]
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// `|p(x)| / Σ|c_i||x|^i`: the value at `x` relative to the size of the
    /// terms being cancelled.
    pub fn relative_residual(&self, x: f64) -> f64 {
        let scale = self.coeffs.iter().rev().fold(0.0, |acc, c| {
            acc * libm::fabs(x) + c.abs().to_f64().unwrap_or(f64::NAN)
        });
        if scale == 0.0 {
            return 0.0;
        }
        libm::fabs(self.eval_f64(x)) / scale
    }
}

/// Faddeev–LeVerrier recursion in exact integer arithmetic:
/// `M_k = A·M_{k−1} + c_{n−k+1}·I`, `c_{n−k} = −tr(A·M_k)/k`.
pub fn char_poly(g: &Graph) -> Result<CharPoly, CharPolyError> {
    char_poly_with_limit(g, CHAR_POLY_MAX_ORDER)
}

pub fn char_poly_with_limit(g: &Graph, limit: usize) -> Result<CharPoly, CharPolyError> {
    let n = g.order();
    if n > limit {
        return Err(CharPolyError::TooLarge { order: n, limit });
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // m holds M_{k-1}; am = A·M_{k-1}
    let mut m = vec![BigInt::zero(); n * n];
    for k in 1..=n {
        let mut am = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for &l in &adj[i] {
                for j in 0..n {
                    if !m[l * n + j].is_zero() {
                        am[i * n + j] += &m[l * n + j];
                    }
                }
            }
        }
        // M_k = A·M_{k-1} + c_{n-k+1} I
        for i in 0..n {
            am[i * n + i] += &coeffs[n - k + 1];
        }
        m = am;
        // tr(A·M_k)
        let mut trace = BigInt::zero();
        for i in 0..n {
            for &l in &adj[i] {
                trace += &m[l * n + i];
            }
        }
        let c = -trace / BigInt::from(k);
        coeffs[n - k] = c;
    }
    Ok(CharPoly { coeffs })
}
