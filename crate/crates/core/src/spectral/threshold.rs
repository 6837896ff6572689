use core::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ThresholdKind {
    /// Chorded cycles: θ(m) for m ≤ 8, √m beyond.
    Chorded,
    /// (2k−3)-chorded (2k+1)-cycles: (k−1+√(4m−k²+1))/2.
    KChorded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ThresholdError {
    EdgeCountOutOfRange {
        m: usize,
        min: usize,
        max: Option<usize>,
    },
    MissingK,
    KTooSmall {
        k: usize,
    },
    NegativeDiscriminant {
        k: usize,
        m: usize,
    },
}

impl fmt::Display for ThresholdError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThresholdError::EdgeCountOutOfRange {
                m,
                min,
                max: Some(max),
            } => {
                write!(f, "edge count {m} outside {min}..={max}")
            }
            ThresholdError::EdgeCountOutOfRange { m, min, max: None } => {
                write!(f, "edge count {m} below {min}")
            }
            ThresholdError::MissingK => write!(f, "k-chorded threshold needs k"),
            ThresholdError::KTooSmall { k } => write!(f, "k must be at least 2, got {k}"),
            ThresholdError::NegativeDiscriminant { k, m } => {
                write!(f, "4m − k² + 1 is negative for k={k}, m={m}")
            }
        }
    }
}

impl core::error::Error for ThresholdError {}

fn cubic(m: f64, t: f64, x: f64) -> (f64, f64) {
    let f = ((x - 1.0) * x + (t - m)) * x + m - 3.0 * t;
    let df = (3.0 * x - 2.0) * x + (t - m);
    (f, df)
}

/// Largest root of `x³ − x² + (t−m)x + m − 3t` with `t = ⌊m/3⌋`, for 4 ≤ m ≤ 8.
///
/// Safeguarded Newton on the bracket `[√m, m]`: the cubic is negative at
/// `√m` and positive at `m`, and increasing at the root found.
pub fn theta(m: usize) -> Result<f64, ThresholdError> {
    if !(4..=8).contains(&m) {
        return Err(ThresholdError::EdgeCountOutOfRange {
            m,
            min: 4,
            max: Some(8),
        });
    }
    let mf = m as f64;
    let t = (m / 3) as f64;
    let (mut lo, mut hi) = (libm::sqrt(mf), mf);
    assert!(
        cubic(mf, t, lo).0 < 0.0 && cubic(mf, t, hi).0 > 0.0,
        "bracket lost for m={m}"
    );
    let mut x = (lo + hi) / 2.0;
    for _ in 0..200 {
        let (f, df) = cubic(mf, t, x);
        if f == 0.0 {
            break;
        }
        if f < 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        let newton = x - f / df;
        let next = if df > 0.0 && newton > lo && newton < hi {
            newton
        } else {
            (lo + hi) / 2.0
        };
        if libm::fabs(next - x) <= 1e-15 * x {
            x = next;
            break;
        }
        x = next;
    }
    assert!(
        cubic(mf, t, x).1 > 0.0,
        "root for m={m} is not simple increasing"
    );
    Ok(x)
}

/// The spectral threshold above which the corresponding cycle is forced.
pub fn threshold(kind: ThresholdKind, m: usize, k: Option<usize>) -> Result<f64, ThresholdError> {
    match kind {
        ThresholdKind::Chorded => {
            if m < 4 {
                return Err(ThresholdError::EdgeCountOutOfRange {
                    m,
                    min: 4,
                    max: None,
                });
            }
            if m <= 8 {
                theta(m)
            } else {
                Ok(libm::sqrt(m as f64))
            }
        }
        ThresholdKind::KChorded => {
            let k = k.ok_or(ThresholdError::MissingK)?;
            if k < 2 {
                return Err(ThresholdError::KTooSmall { k });
            }
            if 4 * m + 1 < k * k {
                return Err(ThresholdError::NegativeDiscriminant { k, m });
            }
            let disc = (4 * m + 1 - k * k) as f64;
            Ok((k as f64 - 1.0 + libm::sqrt(disc)) / 2.0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_six_closed_form() {
        let expected = (1.0 + 17f64.sqrt()) / 2.0;
        assert!((theta(6).unwrap() - expected).abs() < 1e-12);
    }

    #[test]
    fn theta_values_and_square_root_gap() {
        let expected = [2.1701, 2.3429, 2.5616, 2.7093, 2.8558];
        for (m, e) in (4..=8).zip(expected) {
            let th = theta(m).unwrap();
            assert!((th - e).abs() < 1e-4, "m={m}: {th}");
            assert!(th > (m as f64).sqrt());
        }
    }

    #[test]
    fn theta_domain() {
        assert!(theta(3).is_err());
        assert!(theta(9).is_err());
    }

    #[test]
    fn chorded_threshold() {
        assert_eq!(threshold(ThresholdKind::Chorded, 9, None).unwrap(), 3.0);
        assert_eq!(
            threshold(ThresholdKind::Chorded, 6, None).unwrap(),
            theta(6).unwrap()
        );
        assert!(threshold(ThresholdKind::Chorded, 3, None).is_err());
    }

    #[test]
    fn k_chorded_threshold() {
        let v = threshold(ThresholdKind::KChorded, 9, Some(2)).unwrap();
        assert!((v - (1.0 + 33f64.sqrt()) / 2.0).abs() < 1e-12);
        assert_eq!(
            threshold(ThresholdKind::KChorded, 9, None),
            Err(ThresholdError::MissingK)
        );
        assert_eq!(
            threshold(ThresholdKind::KChorded, 9, Some(1)),
            Err(ThresholdError::KTooSmall { k: 1 })
        );
        assert!(threshold(ThresholdKind::KChorded, 1, Some(5)).is_err());
        // 4m = k² − 1 is allowed
        assert_eq!(threshold(ThresholdKind::KChorded, 2, Some(3)).unwrap(), 1.0);
    }
}
