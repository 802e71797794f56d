//! Canonical left/right multiplication operators on coordinate columns, and
//! their point-dependent generalizations.

use crate::matrix::Mat8;
use crate::octonion::{structure_constant_mu, Octonion};
use crate::scalar::Scalar;
use crate::torsion::{self, Sign};

fn delta(a: usize, b: usize) -> i64 {
    (a == b) as i64
}

/// Matrix of left multiplication by e_i:
/// (E_i)_{mu nu} = -delta_{0 mu} delta_{i nu} + delta_{0 nu} delta_{i mu} - f_{i mu nu},
/// so that E_i coords(phi) = coords(e_i * phi).
pub fn left_op<S: Scalar>(i: usize) -> Mat8<S> {
    assert!((1..8).contains(&i), "operator index out of range: {i}");
    Mat8::from_fn(|mu, nu| {
        S::from_int(
            -delta(0, mu) * delta(i, nu) + delta(0, nu) * delta(i, mu)
                - structure_constant_mu(i, mu, nu),
        )
    })
}

/// Matrix of right multiplication by e_i:
/// same delta part as `left_op` with the f term sign flipped, so that
/// (1|E_i) coords(phi) = coords(phi * e_i).
pub fn right_op<S: Scalar>(i: usize) -> Mat8<S> {
    assert!((1..8).contains(&i), "operator index out of range: {i}");
    Mat8::from_fn(|mu, nu| {
        S::from_int(
            -delta(0, mu) * delta(i, nu)
                + delta(0, nu) * delta(i, mu)
                + structure_constant_mu(i, mu, nu),
        )
    })
}

/// All seven left operators.
pub fn left_ops<S: Scalar>() -> Vec<Mat8<S>> {
    (1..8).map(left_op).collect()
}

/// All seven right operators.
pub fn right_ops<S: Scalar>() -> Vec<Mat8<S>> {
    (1..8).map(right_op).collect()
}

/// Point-dependent left operator: the constant structure tensor in `left_op`
/// is replaced by the structure function of the (+) family at `phi`. Reduces
/// to `left_op` at phi = e_0.
pub fn left_op_at<S: Scalar>(i: usize, phi: &Octonion<S>) -> Result<Mat8<S>, torsion::ZeroPoint> {
    assert!((1..8).contains(&i), "operator index out of range: {i}");
    let table = torsion::torsion_table(Sign::Plus, phi, torsion::Route::Closed)?;
    Ok(Mat8::from_fn(|mu, nu| {
        let mut v = S::from_int(-delta(0, mu) * delta(i, nu) + delta(0, nu) * delta(i, mu));
        if mu != 0 && nu != 0 {
            v = v - table.get(i, mu, nu);
        }
        v
    }))
}

/// Point-dependent right operator, built from the (-) family at `phi`. The
/// structure-function term enters with a minus sign — the (-) family equals
/// -f at the pole, so this is the sign that reduces to `right_op` there.
pub fn right_op_at<S: Scalar>(i: usize, phi: &Octonion<S>) -> Result<Mat8<S>, torsion::ZeroPoint> {
    assert!((1..8).contains(&i), "operator index out of range: {i}");
    let table = torsion::torsion_table(Sign::Minus, phi, torsion::Route::Closed)?;
    Ok(Mat8::from_fn(|mu, nu| {
        let mut v = S::from_int(-delta(0, mu) * delta(i, nu) + delta(0, nu) * delta(i, mu));
        if mu != 0 && nu != 0 {
            v = v - table.get(i, mu, nu);
        }
        v
    }))
}

/// All seven point-dependent left operators, sharing one structure-function
/// table.
pub fn left_ops_at<S: Scalar>(phi: &Octonion<S>) -> Result<Vec<Mat8<S>>, torsion::ZeroPoint> {
    let table = torsion::torsion_table(Sign::Plus, phi, torsion::Route::Closed)?;
    Ok((1..8)
        .map(|i| {
            Mat8::from_fn(|mu, nu| {
                let mut v = S::from_int(-delta(0, mu) * delta(i, nu) + delta(0, nu) * delta(i, mu));
                if mu != 0 && nu != 0 {
                    v = v - table.get(i, mu, nu);
                }
                v
            })
        })
        .collect())
}

/// All seven point-dependent right operators, sharing one table.
pub fn right_ops_at<S: Scalar>(phi: &Octonion<S>) -> Result<Vec<Mat8<S>>, torsion::ZeroPoint> {
    let table = torsion::torsion_table(Sign::Minus, phi, torsion::Route::Closed)?;
    Ok((1..8)
        .map(|i| {
            Mat8::from_fn(|mu, nu| {
                let mut v = S::from_int(-delta(0, mu) * delta(i, nu) + delta(0, nu) * delta(i, mu));
                if mu != 0 && nu != 0 {
                    v = v - table.get(i, mu, nu);
                }
                v
            })
        })
        .collect())
}

/// Formal combination sum_i a_i E_i + sum_i b_i (1|E_i).
#[derive(Clone, Debug, PartialEq)]
pub struct LRCombo<S> {
    pub left: [S; 7],
    pub right: [S; 7],
}

impl<S: Scalar> LRCombo<S> {
    pub fn new(left: [S; 7], right: [S; 7]) -> Self {
        LRCombo { left, right }
    }

    pub fn from_ints(left: [i64; 7], right: [i64; 7]) -> Self {
        LRCombo {
            left: left.map(S::from_int),
            right: right.map(S::from_int),
        }
    }

    pub fn evaluate(&self) -> Mat8<S> {
        let mut m = Mat8::zero();
        for i in 1..8 {
            m = m
                .add(&left_op::<S>(i).scale(&self.left[i - 1]))
                .add(&right_op::<S>(i).scale(&self.right[i - 1]));
        }
        m
    }

    /// Conjugate representation: E_i -> -(1|E_i) and 1|E_i -> -E_i, i.e.
    /// (a, b) -> (-b, -a) on coefficients.
    pub fn conjugate(&self) -> Self {
        LRCombo {
            left: std::array::from_fn(|n| -self.right[n].clone()),
            right: std::array::from_fn(|n| -self.left[n].clone()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{ratio, Rational};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type Oct = Octonion<Rational>;

    #[test]
    fn left_op_is_left_multiplication() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let phi = Octonion(Rational::random_coords(&mut rng));
            for i in 1..8 {
                let via_matrix = left_op::<Rational>(i).apply(&phi);
                let via_algebra = Oct::unit(i).mul(&phi);
                assert_eq!(via_matrix, via_algebra, "i = {i}");
            }
        }
    }

    #[test]
    fn right_op_is_right_multiplication() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..20 {
            let phi = Octonion(Rational::random_coords(&mut rng));
            for i in 1..8 {
                let via_matrix = right_op::<Rational>(i).apply(&phi);
                let via_algebra = phi.mul(&Oct::unit(i));
                assert_eq!(via_matrix, via_algebra, "i = {i}");
            }
        }
    }

    #[test]
    fn ops_send_unit_to_basis() {
        for i in 1..8 {
            assert_eq!(left_op::<Rational>(i).apply(&Oct::unit(0)), Oct::unit(i));
            assert_eq!(right_op::<Rational>(i).apply(&Oct::unit(0)), Oct::unit(i));
        }
    }

    #[test]
    fn ops_are_antisymmetric_with_square_minus_identity() {
        let minus_i = Mat8::<Rational>::identity().neg();
        for i in 1..8 {
            for m in [left_op::<Rational>(i), right_op::<Rational>(i)] {
                assert_eq!(m.transpose(), m.neg());
                assert_eq!(m.mul(&m), minus_i);
            }
        }
    }

    #[test]
    fn left_right_commutator_kills_unit_and_detects_equality() {
        let e0 = Oct::unit(0);
        for i in 1..8 {
            for j in 1..8 {
                let c = left_op::<Rational>(i).commutator(&right_op(j));
                assert!(c.apply(&e0).is_zero(), "({i},{j})");
                assert_eq!(c.is_zero(), i == j, "({i},{j})");
            }
        }
    }

    #[test]
    fn commutator_of_first_two_left_ops() {
        // matches the printed matrix: acting on (1,...,8)^t gives
        // (-8,-6,4,2,16,-14,12,-10)^t
        let c = left_op::<Rational>(1).commutator(&left_op(2));
        let w = Oct::from_ints([1, 2, 3, 4, 5, 6, 7, 8]);
        assert_eq!(
            c.apply(&w),
            Oct::from_ints([-8, -6, 4, 2, 16, -14, 12, -10])
        );
    }

    #[test]
    fn pointwise_ops_reduce_at_the_pole() {
        let np = Oct::unit(0);
        for i in 1..8 {
            assert_eq!(left_op_at(i, &np).unwrap(), left_op::<Rational>(i));
            assert_eq!(right_op_at(i, &np).unwrap(), right_op::<Rational>(i));
        }
    }

    #[test]
    fn pointwise_ops_square_to_minus_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let minus_i = Mat8::<Rational>::identity().neg();
        for _ in 0..3 {
            let phi = Octonion(Rational::random_coords(&mut rng));
            for i in 1..8 {
                assert_eq!(
                    left_op_at(i, &phi)
                        .unwrap()
                        .mul(&left_op_at(i, &phi).unwrap()),
                    minus_i
                );
                assert_eq!(
                    right_op_at(i, &phi)
                        .unwrap()
                        .mul(&right_op_at(i, &phi).unwrap()),
                    minus_i
                );
            }
        }
    }

    #[test]
    fn pointwise_rejects_zero_point() {
        assert!(left_op_at(1, &Oct::zero()).is_err());
    }

    #[test]
    fn pointwise_entry_at_witness_point() {
        // entry (2,3) of E_1(phi) is -f^{(+)}_{123}(phi) = 12/17 at (1,...,8)
        let w = Oct::from_ints([1, 2, 3, 4, 5, 6, 7, 8]);
        let m = left_op_at(1, &w).unwrap();
        assert_eq!(m.0[2][3], ratio::<Rational>(12, 17));
    }

    #[test]
    fn combo_conjugation_is_involution_and_matches_operator_swap() {
        let x = LRCombo::<Rational>::from_ints([1, 0, -2, 0, 3, 0, 0], [0, 4, 0, 0, -1, 0, 5]);
        assert_eq!(x.conjugate().conjugate(), x);
        // evaluation of the conjugate equals the operator-level swap
        let mut swapped = Mat8::zero();
        for i in 1..8 {
            swapped = swapped
                .add(&right_op::<Rational>(i).scale(&-x.left[i - 1].clone()))
                .add(&left_op::<Rational>(i).scale(&-x.right[i - 1].clone()));
        }
        assert_eq!(x.conjugate().evaluate(), swapped);
    }
}
