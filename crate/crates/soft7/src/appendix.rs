//! Hand-transcribed polynomial formulas for the 35 structure functions of
//! each sign family. This module is a literal data table: one entry per
//! oriented triple, kept independent of the computed routes so it can serve
//! as a cross-check against them. Do not generate or "simplify" these
//! entries.

use crate::octonion::{Octonion, CYCLES};
use crate::scalar::Scalar;
use crate::torsion::{Sign, ZeroPoint};

/// Bilinear entry for a non-standard triple: the value is
/// `prefix * 2 * sum(sign * phi_a * phi_b) / r^2`.
type Bilinear = (i64, [(i64, usize, usize); 4]);

/// (+) family, non-standard triples, in the orientation that defines them.
const NON_STANDARD_PLUS: [((usize, usize, usize), Bilinear); 28] = [
    (
        (1, 2, 4),
        (1, [(1, 0, 7), (-1, 5, 2), (1, 6, 1), (1, 3, 4)]),
    ),
    (
        (1, 2, 5),
        (-1, [(1, 0, 6), (-1, 3, 5), (-1, 1, 7), (-1, 2, 4)]),
    ),
    (
        (1, 2, 6),
        (1, [(1, 0, 5), (-1, 1, 4), (1, 7, 2), (1, 3, 6)]),
    ),
    (
        (1, 2, 7),
        (-1, [(1, 0, 4), (1, 6, 2), (1, 1, 5), (-1, 3, 7)]),
    ),
    (
        (1, 4, 3),
        (1, [(1, 0, 6), (1, 3, 5), (1, 2, 4), (-1, 1, 7)]),
    ),
    (
        (1, 4, 6),
        (-1, [(1, 3, 0), (-1, 4, 7), (-1, 1, 2), (-1, 5, 6)]),
    ),
    (
        (1, 7, 5),
        (1, [(1, 3, 0), (-1, 1, 2), (1, 5, 6), (1, 4, 7)]),
    ),
    (
        (2, 4, 7),
        (-1, [(1, 0, 1), (-1, 7, 6), (-1, 4, 5), (-1, 3, 2)]),
    ),
    (
        (1, 4, 7),
        (1, [(1, 2, 0), (-1, 4, 6), (1, 5, 7), (1, 1, 3)]),
    ),
    (
        (2, 4, 3),
        (-1, [(1, 0, 5), (1, 1, 4), (1, 7, 2), (-1, 3, 6)]),
    ),
    (
        (2, 5, 3),
        (1, [(1, 0, 4), (-1, 1, 5), (1, 6, 2), (1, 3, 7)]),
    ),
    (
        (1, 7, 3),
        (-1, [(1, 0, 5), (-1, 7, 2), (-1, 3, 6), (-1, 1, 4)]),
    ),
    (
        (2, 4, 5),
        (1, [(1, 3, 0), (1, 5, 6), (-1, 4, 7), (1, 1, 2)]),
    ),
    (
        (2, 5, 6),
        (1, [(1, 0, 1), (-1, 3, 2), (1, 7, 6), (1, 4, 5)]),
    ),
    (
        (3, 6, 1),
        (1, [(1, 0, 4), (1, 3, 7), (1, 1, 5), (-1, 6, 2)]),
    ),
    (
        (3, 6, 2),
        (-1, [(1, 0, 7), (-1, 3, 4), (-1, 5, 2), (-1, 6, 1)]),
    ),
    (
        (3, 4, 5),
        (-1, [(1, 2, 0), (-1, 5, 7), (-1, 1, 3), (-1, 4, 6)]),
    ),
    (
        (3, 4, 6),
        (1, [(1, 0, 1), (1, 3, 2), (1, 7, 6), (-1, 4, 5)]),
    ),
    (
        (3, 6, 7),
        (1, [(1, 2, 0), (1, 4, 6), (1, 5, 7), (-1, 1, 3)]),
    ),
    (
        (1, 3, 5),
        (-1, [(1, 0, 7), (-1, 3, 4), (1, 6, 1), (1, 5, 2)]),
    ),
    (
        (1, 5, 6),
        (-1, [(1, 2, 0), (1, 1, 3), (1, 4, 6), (-1, 5, 7)]),
    ),
    (
        (2, 3, 7),
        (1, [(1, 0, 6), (-1, 2, 4), (1, 3, 5), (1, 1, 7)]),
    ),
    (
        (2, 6, 7),
        (-1, [(1, 3, 0), (-1, 5, 6), (1, 4, 7), (1, 1, 2)]),
    ),
    (
        (3, 5, 7),
        (1, [(1, 0, 1), (1, 4, 5), (-1, 7, 6), (1, 3, 2)]),
    ),
    (
        (4, 5, 6),
        (-1, [(1, 0, 7), (1, 5, 2), (1, 3, 4), (-1, 6, 1)]),
    ),
    (
        (4, 5, 7),
        (1, [(1, 0, 6), (1, 2, 4), (1, 1, 7), (-1, 3, 5)]),
    ),
    (
        (4, 6, 7),
        (-1, [(1, 0, 5), (1, 1, 4), (1, 3, 6), (-1, 7, 2)]),
    ),
    (
        (5, 6, 7),
        (1, [(1, 0, 4), (-1, 6, 2), (-1, 1, 5), (-1, 3, 7)]),
    ),
];

/// (-) family, non-standard triples.
const NON_STANDARD_MINUS: [((usize, usize, usize), Bilinear); 28] = [
    (
        (1, 2, 4),
        (1, [(1, 0, 7), (1, 5, 2), (-1, 6, 1), (-1, 3, 4)]),
    ),
    (
        (1, 2, 5),
        (-1, [(1, 0, 6), (1, 3, 5), (1, 1, 7), (1, 2, 4)]),
    ),
    (
        (1, 2, 6),
        (1, [(1, 0, 5), (1, 1, 4), (-1, 7, 2), (-1, 3, 6)]),
    ),
    (
        (1, 2, 7),
        (-1, [(1, 0, 4), (-1, 6, 2), (-1, 1, 5), (1, 3, 7)]),
    ),
    (
        (1, 4, 3),
        (1, [(1, 0, 6), (-1, 3, 5), (-1, 2, 4), (1, 1, 7)]),
    ),
    (
        (1, 4, 6),
        (-1, [(1, 3, 0), (1, 4, 7), (1, 1, 2), (1, 5, 6)]),
    ),
    (
        (1, 7, 5),
        (1, [(1, 3, 0), (1, 1, 2), (-1, 5, 6), (-1, 4, 7)]),
    ),
    (
        (2, 4, 7),
        (-1, [(1, 0, 1), (1, 7, 6), (1, 4, 5), (1, 3, 2)]),
    ),
    (
        (1, 4, 7),
        (1, [(1, 2, 0), (1, 4, 6), (-1, 5, 7), (-1, 1, 3)]),
    ),
    (
        (2, 4, 3),
        (-1, [(1, 0, 5), (-1, 1, 4), (-1, 7, 2), (1, 3, 6)]),
    ),
    (
        (2, 5, 3),
        (1, [(1, 0, 4), (1, 1, 5), (-1, 6, 2), (-1, 3, 7)]),
    ),
    (
        (1, 7, 3),
        (-1, [(1, 0, 5), (1, 7, 2), (1, 3, 6), (1, 1, 4)]),
    ),
    (
        (2, 4, 5),
        (1, [(1, 3, 0), (-1, 5, 6), (1, 4, 7), (-1, 1, 2)]),
    ),
    (
        (2, 5, 6),
        (1, [(1, 0, 1), (1, 3, 2), (-1, 7, 6), (-1, 4, 5)]),
    ),
    (
        (3, 6, 1),
        (1, [(1, 0, 4), (-1, 3, 7), (-1, 1, 5), (1, 6, 2)]),
    ),
    (
        (3, 6, 2),
        (-1, [(1, 0, 7), (1, 3, 4), (1, 5, 2), (1, 6, 1)]),
    ),
    (
        (3, 4, 5),
        (-1, [(1, 2, 0), (1, 5, 7), (1, 1, 3), (1, 4, 6)]),
    ),
    (
        (3, 4, 6),
        (1, [(1, 0, 1), (-1, 3, 2), (-1, 7, 6), (1, 4, 5)]),
    ),
    (
        (3, 6, 7),
        (1, [(1, 2, 0), (-1, 4, 6), (-1, 5, 7), (1, 1, 3)]),
    ),
    (
        (1, 3, 5),
        (-1, [(1, 0, 7), (1, 3, 4), (-1, 6, 1), (-1, 5, 2)]),
    ),
    (
        (1, 5, 6),
        (-1, [(1, 2, 0), (-1, 1, 3), (-1, 4, 6), (1, 5, 7)]),
    ),
    (
        (2, 3, 7),
        (1, [(1, 0, 6), (1, 2, 4), (-1, 3, 5), (-1, 1, 7)]),
    ),
    (
        (2, 6, 7),
        (-1, [(1, 3, 0), (1, 5, 6), (-1, 4, 7), (-1, 1, 2)]),
    ),
    (
        (3, 5, 7),
        (1, [(1, 0, 1), (-1, 4, 5), (1, 7, 6), (-1, 3, 2)]),
    ),
    (
        (4, 5, 6),
        (-1, [(1, 0, 7), (-1, 5, 2), (-1, 3, 4), (1, 6, 1)]),
    ),
    (
        (4, 5, 7),
        (1, [(1, 0, 6), (-1, 2, 4), (-1, 1, 7), (1, 3, 5)]),
    ),
    (
        (4, 6, 7),
        (-1, [(1, 0, 5), (-1, 1, 4), (-1, 3, 6), (1, 7, 2)]),
    ),
    ((5, 6, 7), (1, [(1, 0, 4), (1, 6, 2), (1, 1, 5), (1, 3, 7)])),
];

/// Sign of the permutation carrying the unordered query (i,j,k) onto the
/// stored orientation.
fn realign(query: (usize, usize, usize), stored: (usize, usize, usize)) -> Option<i64> {
    let q = [query.0, query.1, query.2];
    let s = [stored.0, stored.1, stored.2];
    if !q.iter().all(|x| s.contains(x)) {
        return None;
    }
    let idx: Vec<usize> = q
        .iter()
        .map(|x| s.iter().position(|y| y == x).unwrap())
        .collect();
    let mut inversions = 0;
    for a in 0..3 {
        for b in a + 1..3 {
            if idx[a] > idx[b] {
                inversions += 1;
            }
        }
    }
    Some(if inversions % 2 == 0 { 1 } else { -1 })
}

/// Evaluates the transcribed formula for f^{(sign)}_{ijk} at `phi`.
pub fn evaluate<S: Scalar>(
    sign: Sign,
    i: usize,
    j: usize,
    k: usize,
    phi: &Octonion<S>,
) -> Result<S, ZeroPoint> {
    assert!(
        (1..8).contains(&i) && (1..8).contains(&j) && (1..8).contains(&k),
        "indices out of range: ({i},{j},{k})"
    );
    assert!(
        i != j && j != k && i != k,
        "indices must be distinct: ({i},{j},{k})"
    );
    let r2 = phi.norm_sq();
    if r2.is_zero() {
        return Err(ZeroPoint);
    }
    let query = (i, j, k);

    // standard cycles: numerator is a signed sum of squares, with the (-)
    // family the exact negative of the (+) family
    for &cycle in &CYCLES {
        if let Some(orientation) = realign(query, cycle) {
            let kept = [0, cycle.0, cycle.1, cycle.2];
            let mut numer = S::zero();
            for mu in 0..8 {
                let sq = phi.0[mu].clone() * phi.0[mu].clone();
                numer = if kept.contains(&mu) {
                    numer + sq
                } else {
                    numer - sq
                };
            }
            let family = match sign {
                Sign::Plus => 1,
                Sign::Minus => -1,
            };
            return Ok(numer / r2 * S::from_int(orientation * family));
        }
    }

    let table: &[((usize, usize, usize), Bilinear); 28] = match sign {
        Sign::Plus => &NON_STANDARD_PLUS,
        Sign::Minus => &NON_STANDARD_MINUS,
    };
    for &(stored, (prefix, terms)) in table {
        if let Some(orientation) = realign(query, stored) {
            let mut numer = S::zero();
            for (s, a, b) in terms {
                numer = numer + phi.0[a].clone() * phi.0[b].clone() * S::from_int(s);
            }
            return Ok(numer * S::from_int(2 * prefix * orientation) / r2);
        }
    }
    unreachable!("every distinct triple is either standard or listed")
}
