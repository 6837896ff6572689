//! Exact comparison of largest real roots of integer polynomials.
//!
//! A root is held as a square-free polynomial, its Sturm sequence and a
//! rational interval `(lo, hi]` containing exactly one root. Two roots are
//! equal iff the gcd of their polynomials has a root in the overlap of the
//! isolating intervals; otherwise bisection separates them.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::charpoly::CharPoly;

/// Integer polynomial, ascending coefficients, no trailing zeros.
pub type Poly = Vec<BigInt>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn degree(p: &[BigInt]) -> Option<usize> {
    p.len().checked_sub(1)
}

fn derivative(p: &[BigInt]) -> Poly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect(),
    )
}

/// Divides out the positive content; the sign is kept.
fn primitive(p: Poly) -> Poly {
    let g = p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() || g.is_one() {
        return p;
    }
    p.into_iter().map(|c| c / &g).collect()
}

/// Positive multiple of a rational polynomial with coprime integer coefficients.
fn clear_denominators(p: &[BigRational]) -> Poly {
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    primitive(trim(
        p.iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect(),
    ))
}

fn to_rational(p: &[BigInt]) -> Vec<BigRational> {
    p.iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect()
}

/// Quotient and remainder over the rationals.
fn div_rem(a: &[BigInt], b: &[BigInt]) -> (Vec<BigRational>, Vec<BigRational>) {
    let db = degree(b).expect("division by zero polynomial");
    let mut r = to_rational(a);
    let lead = BigRational::from_integer(b[db].clone());
    let b = to_rational(b);
    let mut q = vec![BigRational::zero(); a.len().saturating_sub(db).max(1)];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let f = &r[dr] / &lead;
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &f * bc;
        }
        q[shift] = f;
        r.pop();
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    (q, r)
}

/// Monic-up-to-scaling gcd over the rationals, normalized to a primitive
/// integer polynomial with positive leading coefficient.
pub fn poly_gcd(a: &[BigInt], b: &[BigInt]) -> Poly {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = clear_denominators(&r);
    }
    let mut x = primitive(x);
    if x.last().is_some_and(Signed::is_negative) {
        x = x.into_iter().map(|c| -c).collect();
    }
    x
}

/// `p / gcd(p, p')`.
pub fn square_free(p: &[BigInt]) -> Poly {
    let g = poly_gcd(p, &derivative(p));
    if degree(&g).unwrap_or(0) == 0 {
        return primitive(trim(p.to_vec()));
    }
    let (q, r) = div_rem(p, &g);
    debug_assert!(r.is_empty());
    clear_denominators(&q)
}

fn sturm_sequence(p: &[BigInt]) -> Vec<Poly> {
    let mut seq = vec![p.to_vec(), derivative(p)];
    loop {
        let n = seq.len();
        if seq[n - 1].is_empty() {
            seq.pop();
            break;
        }
        if degree(&seq[n - 1]) == Some(0) {
            break;
        }
        let (_, r) = div_rem(&seq[n - 2], &seq[n - 1]);
        let r: Poly = clear_denominators(&r).into_iter().map(|c| -c).collect();
        seq.push(r);
    }
    seq
}

/// Sign of `p(x)` for rational `x`.
fn sign_at(p: &[BigInt], x: &BigRational) -> i32 {
    let Some(d) = degree(p) else { return 0 };
    // Σ c_i a^i b^(d−i) has the sign of p(a/b) since b > 0.
    let (a, b) = (x.numer(), x.denom());
    let mut acc = BigInt::zero();
    let mut bpow = BigInt::one();
    let mut terms: Vec<BigInt> = Vec::with_capacity(d + 1);
    for _ in 0..=d {
        terms.push(bpow.clone());
        bpow *= b;
    }
    let mut apow = BigInt::one();
    for (i, c) in p.iter().enumerate() {
        if !c.is_zero() {
            acc += c * &apow * &terms[d - i];
        }
        apow *= a;
    }
    if acc.is_positive() {
        1
    } else if acc.is_negative() {
        -1
    } else {
        0
    }
}

fn sign_changes(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn variations_at(seq: &[Poly], x: &BigRational) -> usize {
    sign_changes(seq.iter().map(|p| sign_at(p, x)))
}

fn variations_at_infinity(seq: &[Poly]) -> usize {
    sign_changes(seq.iter().map(|p| {
        if p.last().is_some_and(Signed::is_positive) {
            1
        } else {
            -1
        }
    }))
}

/// Distinct real roots of the square-free polynomial behind `seq` in `(lo, hi]`.
fn count_roots(seq: &[Poly], lo: &BigRational, hi: &BigRational) -> usize {
    variations_at(seq, lo).saturating_sub(variations_at(seq, hi))
}

fn count_above(seq: &[Poly], x: &BigRational) -> usize {
    variations_at(seq, x).saturating_sub(variations_at_infinity(seq))
}

fn rational_near(x: f64) -> BigRational {
    const SCALE: f64 = (1u64 << 40) as f64;
    let scaled = libm::floor(x * SCALE);
    BigRational::new(BigInt::from(scaled as i128), BigInt::from(1u64 << 40))
}

/// The largest real root of an integer polynomial, isolated exactly.
#[derive(Debug, Clone)]
pub struct LargestRoot {
    poly: Poly,
    sturm: Vec<Poly>,
    lo: BigRational,
    hi: BigRational,
}

impl LargestRoot {
    /// Isolates the largest real root of `poly`; `approx` is a floating hint
    /// (any value works, a good one avoids the slow path). `None` if the
    /// polynomial has no real root.
    pub fn from_poly(poly: &[BigInt], approx: f64) -> Option<LargestRoot> {
        let q = square_free(poly);
        if degree(&q).unwrap_or(0) == 0 {
            return None;
        }
        let sturm = sturm_sequence(&q);
        let window = 1e-7 * approx.abs().max(1.0);
        if approx.is_finite() {
            let lo = rational_near(approx - window);
            let hi = rational_near(approx + window)
                + BigRational::new(BigInt::one(), BigInt::from(1u64 << 40));
            if count_above(&sturm, &hi) == 0 && count_roots(&sturm, &lo, &hi) == 1 {
                return Some(LargestRoot {
                    poly: q,
                    sturm,
                    lo,
                    hi,
                });
            }
        }
        // Cauchy bound: every root lies in (−B, B).
        let d = q.len() - 1;
        let lead = q[d].abs();
        let max = q[..d]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero);
        let bound = BigRational::from_integer(BigInt::one() + max.div_ceil(&lead));
        let mut hi = bound.clone();
        let mut lo = -bound;
        if count_roots(&sturm, &lo, &hi) == 0 {
            return None;
        }
        let two = BigRational::from_integer(BigInt::from(2));
        while count_roots(&sturm, &lo, &hi) > 1 {
            let mid = (&lo + &hi) / &two;
            if count_roots(&sturm, &mid, &hi) >= 1 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Some(LargestRoot {
            poly: q,
            sturm,
            lo,
            hi,
        })
    }

    pub fn of_char_poly(p: &CharPoly, approx: f64) -> Option<LargestRoot> {
        LargestRoot::from_poly(&p.coeffs, approx)
    }

    /// Halves the isolating interval.
    pub fn refine(&mut self) {
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2));
        if count_roots(&self.sturm, &self.lo, &mid) >= 1 {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    pub fn interval(&self) -> (&BigRational, &BigRational) {
        (&self.lo, &self.hi)
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn to_f64(&self) -> f64 {
        ((&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2)))
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    /// Exact comparison of the two represented roots.
    pub fn cmp_exact(&mut self, other: &mut LargestRoot) -> Ordering {
        let g = poly_gcd(&self.poly, &other.poly);
        let g_sturm = if degree(&g).unwrap_or(0) > 0 {
            Some(sturm_sequence(&g))
        } else {
            None
        };
        loop {
            if self.hi <= other.lo {
                return Ordering::Less;
            }
            if other.hi <= self.lo {
                return Ordering::Greater;
            }
            if let Some(gs) = &g_sturm {
                let lo = if self.lo > other.lo {
                    &self.lo
                } else {
                    &other.lo
                };
                let hi = if self.hi < other.hi {
                    &self.hi
                } else {
                    &other.hi
                };
                if count_roots(gs, lo, hi) >= 1 {
                    return Ordering::Equal;
                }
            }
            self.refine();
            other.refine();
        }
    }
}
