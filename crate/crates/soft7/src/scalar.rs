//! Scalar abstraction: every computation in this crate runs in two models,
//! exact rational arithmetic and 64-bit floating point.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Num, Signed, ToPrimitive};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use std::fmt;
use std::ops::Neg;

/// Element of an ordered field. Identity checks are exact in the rational
/// model and use an absolute tolerance of 1e-12 in the float model.
pub trait Scalar:
    Num + Neg<Output = Self> + Clone + PartialEq + fmt::Debug + Send + Sync + 'static
{
    /// True when arithmetic is exact and equality is decidable.
    const EXACT: bool;
    /// Absolute tolerance for identity checks (0 in the exact model).
    const TOL: f64;

    fn from_int(n: i64) -> Self;

    /// |x| as f64, used for deviation reporting.
    fn magnitude(&self) -> f64;

    /// Signed f64 approximation, used by the advisory float rank.
    fn approx(&self) -> f64;

    /// Serialized form: exact fraction string ("-12/17") in the rational
    /// model, locale-independent decimal with 17 significant digits in the
    /// float model.
    fn repr(&self) -> String;

    /// Zero up to the model tolerance.
    fn negligible(&self) -> bool {
        if Self::EXACT {
            self.is_zero()
        } else {
            self.magnitude() <= Self::TOL
        }
    }

    /// Deterministic pseudo-random octonion coordinates. Rational model:
    /// integers in [-9, 9], rejecting the zero vector. Float model: a
    /// unit-normalized point.
    fn random_coords(rng: &mut ChaCha8Rng) -> [Self; 8];

    /// Parses an integer, a fraction "p/q", or a decimal literal.
    fn parse_literal(s: &str) -> Option<Self>;
}

impl Scalar for BigRational {
    const EXACT: bool = true;
    const TOL: f64 = 0.0;

    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn magnitude(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }

    fn approx(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn repr(&self) -> String {
        self.to_string()
    }

    fn random_coords(rng: &mut ChaCha8Rng) -> [Self; 8] {
        loop {
            let draw: [i64; 8] = std::array::from_fn(|_| rng.gen_range(-9..=9));
            if draw.iter().any(|&c| c != 0) {
                return draw.map(Self::from_int);
            }
        }
    }

    fn parse_literal(s: &str) -> Option<Self> {
        let s = s.trim();
        if let Some((int_part, frac_part)) = s.split_once('.') {
            // decimal literal: shift the point away
            if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            let digits = format!("{int_part}{frac_part}");
            let numer: BigInt = digits.parse().ok()?;
            let denom = BigInt::from(10u8).pow(frac_part.len() as u32);
            Some(BigRational::new(numer, denom))
        } else if let Some((p, q)) = s.split_once('/') {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q == BigInt::from(0) {
                return None;
            }
            Some(BigRational::new(p, q))
        } else {
            let n: BigInt = s.parse().ok()?;
            Some(BigRational::from_integer(n))
        }
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;
    const TOL: f64 = 1e-12;

    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn magnitude(&self) -> f64 {
        self.abs()
    }

    fn approx(&self) -> f64 {
        *self
    }

    fn repr(&self) -> String {
        format!("{:.16e}", self)
    }

    fn random_coords(rng: &mut ChaCha8Rng) -> [Self; 8] {
        loop {
            let draw: [f64; 8] = std::array::from_fn(|_| rng.sample(StandardNormal));
            let norm = draw.iter().map(|c| c * c).sum::<f64>().sqrt();
            if norm > 1e-6 {
                return draw.map(|c| c / norm);
            }
        }
    }

    fn parse_literal(s: &str) -> Option<Self> {
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            let p: f64 = p.trim().parse().ok()?;
            let q: f64 = q.trim().parse().ok()?;
            if q == 0.0 {
                return None;
            }
            Some(p / q)
        } else {
            s.parse().ok()
        }
    }
}

/// Exact rational scalar, re-exported under the name the rest of the crate
/// uses.
pub type Rational = BigRational;

/// A ratio of two integers as an exact scalar.
pub fn ratio<S: Scalar>(p: i64, q: i64) -> S {
    S::from_int(p) / S::from_int(q)
}

/// `one`/`two` shortcuts used all over the matrix code.
pub fn half<S: Scalar>() -> S {
    S::one() / S::from_int(2)
}
