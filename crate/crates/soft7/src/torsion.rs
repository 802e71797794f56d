//! Structure functions f_ijk(phi) of the two operator families, computed by
//! three independent routes that the verification suite compares:
//! a closed-form quadratic expression, a linear solve of the defining
//! relation, and a hand-transcribed polynomial table.

use crate::appendix;
use crate::matrix::Mat8;
use crate::octonion::Octonion;
use crate::operators::{left_op, left_op_at, right_op, right_op_at};
use crate::scalar::{half, Scalar};
use std::fmt;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Which operator family: (+) is built from left multiplication, (-) from
/// right multiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn label(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }

    fn op<S: Scalar>(self, i: usize) -> Mat8<S> {
        match self {
            Sign::Plus => left_op(i),
            Sign::Minus => right_op(i),
        }
    }

    fn op_at<S: Scalar>(self, i: usize, phi: &Octonion<S>) -> Result<Mat8<S>, ZeroPoint> {
        match self {
            Sign::Plus => left_op_at(i, phi),
            Sign::Minus => right_op_at(i, phi),
        }
    }
}

/// How a table was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Closed,
    Solve,
    Appendix,
}

impl Route {
    pub fn label(self) -> &'static str {
        match self {
            Route::Closed => "closed",
            Route::Solve => "solve",
            Route::Appendix => "appendix",
        }
    }
}

/// The base point has zero norm; every formula divides by it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZeroPoint;

impl fmt::Display for ZeroPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "base point has zero squared norm")
    }
}

impl std::error::Error for ZeroPoint {}

/// The 35 ascending index triples, in lexicographic order.
pub fn ascending_triples() -> Vec<(usize, usize, usize)> {
    let mut out = Vec::with_capacity(35);
    for i in 1..8 {
        for j in i + 1..8 {
            for k in j + 1..8 {
                out.push((i, j, k));
            }
        }
    }
    out
}

fn triple_slot(i: usize, j: usize, k: usize) -> (usize, i64) {
    let mut t = [i, j, k];
    let mut sign = 1i64;
    for pass in 0..2 {
        for a in 0..2 - pass {
            if t[a] > t[a + 1] {
                t.swap(a, a + 1);
                sign = -sign;
            }
        }
    }
    let idx = ascending_triples()
        .iter()
        .position(|&s| s == (t[0], t[1], t[2]))
        .expect("distinct indices in 1..=7");
    (idx, sign)
}

/// f_{ijk}(phi) = phi^t (-E_k E_i E_j) phi / r^2, with the family's
/// operators. Evaluated as three matrix-vector products.
pub fn closed_form<S: Scalar>(
    sign: Sign,
    i: usize,
    j: usize,
    k: usize,
    phi: &Octonion<S>,
) -> Result<S, ZeroPoint> {
    for idx in [i, j, k] {
        assert!((1..8).contains(&idx), "index out of range: {idx}");
    }
    let r2 = phi.norm_sq();
    if r2.is_zero() {
        return Err(ZeroPoint);
    }
    let v = sign.op::<S>(j).apply(phi);
    let v = sign.op::<S>(i).apply(&v);
    let v = sign.op::<S>(k).apply(&v);
    let dot = phi
        .0
        .iter()
        .zip(v.0.iter())
        .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone());
    Ok(-dot / r2)
}

/// The solve route failed its residual check; indicates an implementation
/// fault, never an expected condition.
#[derive(Clone, Debug, PartialEq)]
pub enum SolveError {
    ZeroPoint,
    Inconsistent { residual: f64 },
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::ZeroPoint => ZeroPoint.fmt(f),
            SolveError::Inconsistent { residual } => {
                write!(f, "linear system residual {residual:e} exceeds bound")
            }
        }
    }
}

impl std::error::Error for SolveError {}

impl From<ZeroPoint> for SolveError {
    fn from(_: ZeroPoint) -> Self {
        SolveError::ZeroPoint
    }
}

/// Solves the defining relation [E_i,E_j]phi = 2 sum_k f_{ijk} E_k phi for
/// the seven unknowns f_{ij1..7}: eight equations, solved through the normal
/// equations by dense elimination. The residual of the original
/// overdetermined system is verified afterwards.
pub fn solve<S: Scalar>(
    sign: Sign,
    i: usize,
    j: usize,
    phi: &Octonion<S>,
) -> Result<[S; 7], SolveError> {
    for idx in [i, j] {
        assert!((1..8).contains(&idx), "index out of range: {idx}");
    }
    if phi.norm_sq().is_zero() {
        return Err(SolveError::ZeroPoint);
    }
    if i == j {
        return Ok(std::array::from_fn(|_| S::zero()));
    }
    let columns: Vec<[S; 8]> = (1..8).map(|k| sign.op::<S>(k).apply(phi).0).collect();
    let rhs = sign
        .op::<S>(i)
        .commutator(&sign.op(j))
        .apply(phi)
        .scale(&half())
        .0;

    // normal equations: (A^t A) x = A^t b, 7x7
    let mut system: Vec<Vec<S>> = (0..7)
        .map(|r| {
            let mut row: Vec<S> = (0..7).map(|c| dot8(&columns[r], &columns[c])).collect();
            row.push(dot8(&columns[r], &rhs));
            row
        })
        .collect();

    // dense Gaussian elimination with partial (first-nonzero) pivoting
    for col in 0..7 {
        let pivot = (col..7)
            .find(|&r| !system[r][col].negligible())
            .expect("normal matrix is positive definite for a nonzero point");
        system.swap(col, pivot);
        let inv = S::one() / system[col][col].clone();
        for r in 0..7 {
            if r == col || system[r][col].is_zero() {
                continue;
            }
            let factor = system[r][col].clone() * inv.clone();
            for c in col..8 {
                let delta = factor.clone() * system[col][c].clone();
                system[r][c] = system[r][c].clone() - delta;
            }
        }
    }
    let x: [S; 7] = std::array::from_fn(|r| system[r][7].clone() / system[r][r].clone());

    // check the residual of the original 8-equation system
    let mut worst = 0.0f64;
    for row in 0..8 {
        let mut acc = -rhs[row].clone();
        for (k, col) in columns.iter().enumerate() {
            acc = acc + col[row].clone() * x[k].clone();
        }
        if S::EXACT {
            if !acc.is_zero() {
                return Err(SolveError::Inconsistent {
                    residual: acc.magnitude(),
                });
            }
        } else {
            worst = worst.max(acc.magnitude());
        }
    }
    if !S::EXACT && worst > 1e-10 {
        return Err(SolveError::Inconsistent { residual: worst });
    }
    Ok(x)
}

fn dot8<S: Scalar>(a: &[S; 8], b: &[S; 8]) -> S {
    a.iter()
        .zip(b.iter())
        .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// The transcription route; see the `appendix` module.
pub fn appendix_eval<S: Scalar>(
    sign: Sign,
    i: usize,
    j: usize,
    k: usize,
    phi: &Octonion<S>,
) -> Result<S, ZeroPoint> {
    appendix::evaluate(sign, i, j, k, phi)
}

/// All 35 independent structure-function values at a point.
#[derive(Clone, Debug, PartialEq)]
pub struct TorsionTable<S> {
    pub sign: Sign,
    pub route: Route,
    pub point: Octonion<S>,
    pub r2: S,
    values: Vec<S>,
}

impl<S: Scalar> TorsionTable<S> {
    /// f_{ijk} for any distinct indices, resolved by total antisymmetry.
    pub fn get(&self, i: usize, j: usize, k: usize) -> S {
        if i == j || j == k || i == k {
            return S::zero();
        }
        let (slot, orientation) = triple_slot(i, j, k);
        self.values[slot].clone() * S::from_int(orientation)
    }

    /// Entries in ascending-triple order.
    pub fn entries(&self) -> Vec<((usize, usize, usize), S)> {
        ascending_triples()
            .into_iter()
            .zip(self.values.iter().cloned())
            .collect()
    }

    pub fn max_deviation_from(&self, other: &TorsionTable<S>) -> f64 {
        self.values
            .iter()
            .zip(other.values.iter())
            .map(|(a, b)| (a.clone() - b.clone()).magnitude())
            .fold(0.0, f64::max)
    }
}

fn table_entry<S: Scalar>(
    sign: Sign,
    route: Route,
    t: (usize, usize, usize),
    phi: &Octonion<S>,
) -> Result<S, SolveError> {
    match route {
        Route::Closed => Ok(closed_form(sign, t.0, t.1, t.2, phi)?),
        Route::Appendix => Ok(appendix_eval(sign, t.0, t.1, t.2, phi)?),
        Route::Solve => Ok(solve(sign, t.0, t.1, phi)?[t.2 - 1].clone()),
    }
}

/// Computes all 35 values by the requested route. With the `parallel`
/// feature the entries are evaluated concurrently; the result is identical
/// either way.
pub fn torsion_table<S: Scalar>(
    sign: Sign,
    phi: &Octonion<S>,
    route: Route,
) -> Result<TorsionTable<S>, ZeroPoint> {
    match torsion_table_checked(sign, phi, route) {
        Ok(t) => Ok(t),
        Err(SolveError::ZeroPoint) => Err(ZeroPoint),
        Err(e @ SolveError::Inconsistent { .. }) => {
            panic!("torsion solve route failed internal residual check: {e}")
        }
    }
}

fn torsion_table_checked<S: Scalar>(
    sign: Sign,
    phi: &Octonion<S>,
    route: Route,
) -> Result<TorsionTable<S>, SolveError> {
    let r2 = phi.norm_sq();
    if r2.is_zero() {
        return Err(SolveError::ZeroPoint);
    }
    let triples = ascending_triples();

    #[cfg(feature = "parallel")]
    let values: Result<Vec<S>, SolveError> = triples
        .par_iter()
        .map(|&t| table_entry(sign, route, t, phi))
        .collect();

    #[cfg(not(feature = "parallel"))]
    let values: Result<Vec<S>, SolveError> = triples
        .iter()
        .map(|&t| table_entry(sign, route, t, phi))
        .collect();

    Ok(TorsionTable {
        sign,
        route,
        point: phi.clone(),
        r2,
        values: values?,
    })
}

/// Two-point structure function of the point-dependent operators:
/// lambda^t (-E_k(phi) E_i(phi) E_j(phi)) lambda / r^2(lambda), with the
/// (+,+) pair using left-family operators and (-,-) the right family.
pub fn generalized<S: Scalar>(
    sign: Sign,
    i: usize,
    j: usize,
    k: usize,
    phi: &Octonion<S>,
    lambda: &Octonion<S>,
) -> Result<S, ZeroPoint> {
    for idx in [i, j, k] {
        assert!((1..8).contains(&idx), "index out of range: {idx}");
    }
    let r2_lambda = lambda.norm_sq();
    if r2_lambda.is_zero() || phi.norm_sq().is_zero() {
        return Err(ZeroPoint);
    }
    let v = sign.op_at(j, phi)?.apply(lambda);
    let v = sign.op_at(i, phi)?.apply(&v);
    let v = sign.op_at(k, phi)?.apply(&v);
    let dot = lambda
        .0
        .iter()
        .zip(v.0.iter())
        .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone());
    Ok(-dot / r2_lambda)
}

/// The scalar Jacobi defect of the point-dependent structure functions:
/// sum_m f_{ijm} f_{mkt} + f_{jkm} f_{mit} + f_{kim} f_{mjt}, all factors
/// evaluated at `phi`.
pub fn jacobi_residual<S: Scalar>(
    sign: Sign,
    i: usize,
    j: usize,
    k: usize,
    t: usize,
    phi: &Octonion<S>,
) -> Result<S, ZeroPoint> {
    let table = torsion_table(sign, phi, Route::Closed)?;
    Ok(jacobi_residual_from(&table, i, j, k, t))
}

pub fn jacobi_residual_from<S: Scalar>(
    table: &TorsionTable<S>,
    i: usize,
    j: usize,
    k: usize,
    t: usize,
) -> S {
    let mut acc = S::zero();
    for m in 1..8 {
        acc = acc
            + table.get(i, j, m) * table.get(m, k, t)
            + table.get(j, k, m) * table.get(m, i, t)
            + table.get(k, i, m) * table.get(m, j, t);
    }
    acc
}

/// The companion contraction sum_t residual_t * (E_t phi) as a coordinate
/// vector (with the family's operators).
pub fn contracted_jacobi<S: Scalar>(
    sign: Sign,
    i: usize,
    j: usize,
    k: usize,
    phi: &Octonion<S>,
) -> Result<Octonion<S>, ZeroPoint> {
    let table = torsion_table(sign, phi, Route::Closed)?;
    let mut out = Octonion::zero();
    for t in 1..8 {
        let resid = jacobi_residual_from(&table, i, j, k, t);
        out = out.add(&sign.op::<S>(t).apply(phi).scale(&resid));
    }
    Ok(out)
}
