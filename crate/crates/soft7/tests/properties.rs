//! Property-based invariants over random rational inputs.

use num::Zero;
use proptest::prelude::*;
use soft7::octonion::Octonion;
use soft7::scalar::{Rational, Scalar};
use soft7::torsion::{closed_form, Sign};

type Oct = Octonion<Rational>;

fn coords() -> impl Strategy<Value = [i64; 8]> {
    prop::array::uniform8(-20i64..=20)
}

fn nonzero_coords() -> impl Strategy<Value = [i64; 8]> {
    coords().prop_filter("nonzero vector", |c| c.iter().any(|&x| x != 0))
}

fn oct(c: [i64; 8]) -> Oct {
    Oct::from_ints(c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn norm_is_multiplicative(a in coords(), b in coords()) {
        let (a, b) = (oct(a), oct(b));
        prop_assert_eq!(a.mul(&b).norm_sq(), a.norm_sq() * b.norm_sq());
    }

    #[test]
    fn conjugation_reverses_products(a in coords(), b in coords()) {
        let (a, b) = (oct(a), oct(b));
        prop_assert_eq!(a.mul(&b).conjugate(), b.conjugate().mul(&a.conjugate()));
    }

    #[test]
    fn algebra_is_alternative(a in coords(), b in coords()) {
        // [a, a, b] = 0 = [a, b, b]
        let (a, b) = (oct(a), oct(b));
        prop_assert!(Oct::associator(&a, &a, &b).norm_sq().is_zero());
        prop_assert!(Oct::associator(&a, &b, &b).norm_sq().is_zero());
    }

    #[test]
    fn structure_functions_are_antisymmetric(
        phi in nonzero_coords(),
        i in 1usize..8, j in 1usize..8, k in 1usize..8,
    ) {
        let phi = oct(phi);
        for sign in [Sign::Plus, Sign::Minus] {
            let base = closed_form(sign, i, j, k, &phi).unwrap();
            if i == j || j == k || i == k {
                prop_assert!(base.is_zero());
            } else {
                prop_assert_eq!(closed_form(sign, j, i, k, &phi).unwrap(), -base.clone());
                prop_assert_eq!(closed_form(sign, i, k, j, &phi).unwrap(), -base.clone());
                prop_assert_eq!(closed_form(sign, j, k, i, &phi).unwrap(), base);
            }
        }
    }

    #[test]
    fn structure_functions_are_scale_invariant(
        phi in nonzero_coords(),
        p in -9i64..=9, q in 1i64..=9,
        i in 1usize..8, j in 1usize..8, k in 1usize..8,
    ) {
        prop_assume!(p != 0);
        let phi = oct(phi);
        let scaled = phi.scale(&(Rational::from_int(p) / Rational::from_int(q)));
        for sign in [Sign::Plus, Sign::Minus] {
            prop_assert_eq!(
                closed_form(sign, i, j, k, &scaled).unwrap(),
                closed_form(sign, i, j, k, &phi).unwrap()
            );
        }
    }
}
