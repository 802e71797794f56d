//! 8x8 matrix algebra over the scalar abstraction, plus exact rank of a
//! family of matrices viewed as 64-vectors.

use crate::octonion::Octonion;
use crate::scalar::Scalar;
use num::complex::Complex;
use num::Num;
use std::fmt;
use std::ops::Neg;

/// Ring of matrix entries: real scalars or complex pairs of them.
pub trait Entry:
    Num + Neg<Output = Self> + Clone + PartialEq + fmt::Debug + Send + Sync + 'static
{
    /// |x| as f64 for deviation reporting.
    fn mag(&self) -> f64;
}

impl<S: Scalar> Entry for S {
    fn mag(&self) -> f64 {
        self.magnitude()
    }
}

impl<S: Scalar> Entry for Complex<S> {
    fn mag(&self) -> f64 {
        self.re.magnitude().hypot(self.im.magnitude())
    }
}

/// An 8x8 matrix acting on coordinate columns (phi_0, ..., phi_7)^t.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat8<T>(pub [[T; 8]; 8]);

pub type Mat8C<S> = Mat8<Complex<S>>;

impl<T: Entry> Mat8<T> {
    pub fn zero() -> Self {
        Mat8(std::array::from_fn(|_| std::array::from_fn(|_| T::zero())))
    }

    pub fn identity() -> Self {
        Mat8(std::array::from_fn(|r| {
            std::array::from_fn(|c| if r == c { T::one() } else { T::zero() })
        }))
    }

    pub fn from_fn(f: impl Fn(usize, usize) -> T) -> Self {
        Mat8(std::array::from_fn(|r| std::array::from_fn(|c| f(r, c))))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::from_fn(|r, c| self.0[r][c].clone() + rhs.0[r][c].clone())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::from_fn(|r, c| self.0[r][c].clone() - rhs.0[r][c].clone())
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(|r, c| -self.0[r][c].clone())
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::from_fn(|r, c| self.0[r][c].clone() * k.clone())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::from_fn(|r, c| {
            let mut acc = T::zero();
            for m in 0..8 {
                if self.0[r][m].is_zero() || rhs.0[m][c].is_zero() {
                    continue;
                }
                acc = acc + self.0[r][m].clone() * rhs.0[m][c].clone();
            }
            acc
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|r, c| self.0[c][r].clone())
    }

    /// AB - BA.
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    /// AB + BA.
    pub fn anticommutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).add(&rhs.mul(self))
    }

    pub fn apply_coords(&self, v: &[T; 8]) -> [T; 8] {
        std::array::from_fn(|r| {
            let mut acc = T::zero();
            for c in 0..8 {
                if self.0[r][c].is_zero() || v[c].is_zero() {
                    continue;
                }
                acc = acc + self.0[r][c].clone() * v[c].clone();
            }
            acc
        })
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|row| row.iter().all(|x| x.is_zero()))
    }

    /// Largest entry magnitude; the deviation of a residual matrix.
    pub fn max_mag(&self) -> f64 {
        self.0
            .iter()
            .flat_map(|row| row.iter())
            .map(|x| x.mag())
            .fold(0.0, f64::max)
    }

    /// Row-major flattening to a 64-vector.
    pub fn flatten(&self) -> Vec<T> {
        self.0.iter().flat_map(|row| row.iter().cloned()).collect()
    }
}

impl<S: Scalar> Mat8<S> {
    pub fn apply(&self, phi: &Octonion<S>) -> Octonion<S> {
        Octonion(self.apply_coords(&phi.0))
    }

    /// phi^t M phi.
    pub fn quadratic_form(&self, phi: &Octonion<S>) -> S {
        let v = self.apply_coords(&phi.0);
        phi.0
            .iter()
            .zip(v.iter())
            .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    /// Embeds a real matrix as a complex one.
    pub fn complexify(&self) -> Mat8C<S> {
        Mat8::from_fn(|r, c| Complex::new(self.0[r][c].clone(), S::zero()))
    }
}

impl<S: Scalar> Mat8C<S> {
    pub fn is_hermitian(&self) -> bool {
        (0..8).all(|r| {
            (0..8).all(|c| {
                let conj = Complex::new(self.0[c][r].re.clone(), -self.0[c][r].im.clone());
                let dev = self.0[r][c].clone() - conj;
                dev.re.negligible() && dev.im.negligible()
            })
        })
    }

    pub fn is_purely_imaginary(&self) -> bool {
        self.0
            .iter()
            .flat_map(|row| row.iter())
            .all(|x| x.re.negligible())
    }

    /// Flattens to 128 real components (re then im per entry).
    pub fn flatten_real(&self) -> Vec<S> {
        let mut out = Vec::with_capacity(128);
        for row in &self.0 {
            for x in row {
                out.push(x.re.clone());
                out.push(x.im.clone());
            }
        }
        out
    }
}

/// Rank of a set of row vectors. Exact Gaussian elimination in the rational
/// model; pivoted elimination with a relative 1e-9 threshold (advisory) in
/// the float model.
pub fn rank<S: Scalar>(rows: &[Vec<S>]) -> usize {
    if S::EXACT {
        rank_eliminate(rows)
    } else {
        rank_float(rows)
    }
}

/// Rank of a family of real matrices viewed as flattened 64-vectors.
pub fn span_dimension<S: Scalar>(mats: &[Mat8<S>]) -> usize {
    let rows: Vec<Vec<S>> = mats.iter().map(|m| m.flatten()).collect();
    rank(&rows)
}

/// Rank of a family of complex matrices via 128 real components.
pub fn span_dimension_complex<S: Scalar>(mats: &[Mat8C<S>]) -> usize {
    let rows: Vec<Vec<S>> = mats.iter().map(|m| m.flatten_real()).collect();
    rank(&rows)
}

fn rank_eliminate<S: Scalar>(rows: &[Vec<S>]) -> usize {
    let mut work: Vec<Vec<S>> = rows.to_vec();
    let ncols = work.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut col = 0;
    while rank < work.len() && col < ncols {
        // deterministic pivoting: first nonzero entry in this column
        let pivot = (rank..work.len()).find(|&r| !work[r][col].is_zero());
        let Some(p) = pivot else {
            col += 1;
            continue;
        };
        work.swap(rank, p);
        let inv = S::one() / work[rank][col].clone();
        for r in rank + 1..work.len() {
            if work[r][col].is_zero() {
                continue;
            }
            let factor = work[r][col].clone() * inv.clone();
            for c in col..ncols {
                let delta = factor.clone() * work[rank][c].clone();
                work[r][c] = work[r][c].clone() - delta;
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

/// Float rank via Gaussian elimination with partial pivoting. A pivot counts
/// only when it exceeds 1e-9 times the largest entry of the original data, a
/// relative threshold that sits far above round-off (which stays near machine
/// epsilon under partial pivoting) and far below any genuine pivot here.
fn rank_float<S: Scalar>(rows: &[Vec<S>]) -> usize {
    let mut work: Vec<Vec<f64>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.approx()).collect())
        .collect();
    let ncols = work.first().map_or(0, |r| r.len());
    let scale = work
        .iter()
        .flat_map(|r| r.iter())
        .fold(0.0f64, |a, &x| a.max(x.abs()));
    if scale == 0.0 {
        return 0;
    }
    let threshold = 1e-9 * scale;
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..work.len())
            .filter(|&r| work[r][col].abs() > threshold)
            .max_by(|&a, &b| work[a][col].abs().total_cmp(&work[b][col].abs()))
        else {
            continue;
        };
        work.swap(rank, p);
        let inv = 1.0 / work[rank][col];
        for r in rank + 1..work.len() {
            let factor = work[r][col] * inv;
            if factor == 0.0 {
                continue;
            }
            for c in col..ncols {
                work[r][c] -= factor * work[rank][c];
            }
        }
        rank += 1;
        if rank == work.len() {
            break;
        }
    }
    rank
}
