//! Octonion values, the multiplication table, and the derived products.

use crate::scalar::Scalar;

/// The seven three-cycles on which the structure constants equal +1,
/// in the orientation that defines them.
pub const CYCLES: [(usize, usize, usize); 7] = [
    (1, 2, 3),
    (1, 4, 5),
    (2, 4, 6),
    (3, 4, 7),
    (1, 7, 6),
    (2, 5, 7),
    (3, 6, 5),
];

/// Sign of the permutation sorting three distinct indices, together with the
/// sorted triple.
fn sort3(i: usize, j: usize, k: usize) -> ((usize, usize, usize), i64) {
    let mut t = [i, j, k];
    let mut sign = 1;
    // 3-element bubble sort, counting swaps
    for pass in 0..2 {
        for a in 0..2 - pass {
            if t[a] > t[a + 1] {
                t.swap(a, a + 1);
                sign = -sign;
            }
        }
    }
    ((t[0], t[1], t[2]), sign)
}

/// Value of f for each ascending triple, derived from `CYCLES` by parity.
fn ascending_value(t: (usize, usize, usize)) -> i64 {
    for &(a, b, c) in &CYCLES {
        let (sorted, sign) = sort3(a, b, c);
        if sorted == t {
            return sign;
        }
    }
    0
}

/// Totally antisymmetric structure constants f_ijk on indices 1..=7.
/// Zero whenever an index repeats or is 0.
pub fn structure_constant(i: usize, j: usize, k: usize) -> i64 {
    if i == 0 || j == 0 || k == 0 || i == j || j == k || i == k {
        return 0;
    }
    let (sorted, sign) = sort3(i, j, k);
    sign * ascending_value(sorted)
}

/// f_{i mu nu} with full-range indices mu, nu = 0..=7: zero when either is 0.
pub fn structure_constant_mu(i: usize, mu: usize, nu: usize) -> i64 {
    if mu == 0 || nu == 0 {
        0
    } else {
        structure_constant(i, mu, nu)
    }
}

/// Product of two basis units: e_mu * e_nu = sign * e_rho.
pub fn basis_product(mu: usize, nu: usize) -> (i64, usize) {
    debug_assert!(mu < 8 && nu < 8);
    if mu == 0 {
        return (1, nu);
    }
    if nu == 0 {
        return (1, mu);
    }
    if mu == nu {
        return (-1, 0);
    }
    for rho in 1..8 {
        let s = structure_constant(mu, nu, rho);
        if s != 0 {
            return (s, rho);
        }
    }
    unreachable!("every pair of distinct imaginary units lies in a cycle")
}

/// An octonion with coordinates phi_0..phi_7; phi_0 is the real part.
#[derive(Clone, Debug, PartialEq)]
pub struct Octonion<S>(pub [S; 8]);

impl<S: Scalar> Octonion<S> {
    pub fn zero() -> Self {
        Octonion(std::array::from_fn(|_| S::zero()))
    }

    /// The basis unit e_mu.
    pub fn unit(mu: usize) -> Self {
        assert!(mu < 8, "basis index out of range: {mu}");
        Octonion(std::array::from_fn(|n| {
            if n == mu {
                S::one()
            } else {
                S::zero()
            }
        }))
    }

    pub fn from_ints(coords: [i64; 8]) -> Self {
        Octonion(coords.map(S::from_int))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Octonion(std::array::from_fn(|n| {
            self.0[n].clone() + rhs.0[n].clone()
        }))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Octonion(std::array::from_fn(|n| {
            self.0[n].clone() - rhs.0[n].clone()
        }))
    }

    pub fn neg(&self) -> Self {
        Octonion(std::array::from_fn(|n| -self.0[n].clone()))
    }

    pub fn scale(&self, c: &S) -> Self {
        Octonion(std::array::from_fn(|n| self.0[n].clone() * c.clone()))
    }

    /// Bilinear product with e_0 as two-sided identity.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for mu in 0..8 {
            if self.0[mu].is_zero() {
                continue;
            }
            for nu in 0..8 {
                if rhs.0[nu].is_zero() {
                    continue;
                }
                let (sign, rho) = basis_product(mu, nu);
                let term = self.0[mu].clone() * rhs.0[nu].clone() * S::from_int(sign);
                out.0[rho] = out.0[rho].clone() + term;
            }
        }
        out
    }

    /// ab - ba.
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    /// (ab)c - a(bc).
    pub fn associator(a: &Self, b: &Self, c: &Self) -> Self {
        a.mul(b).mul(c).sub(&a.mul(&b.mul(c)))
    }

    /// Negates the imaginary coordinates.
    pub fn conjugate(&self) -> Self {
        Octonion(std::array::from_fn(|n| {
            if n == 0 {
                self.0[n].clone()
            } else {
                -self.0[n].clone()
            }
        }))
    }

    /// r^2 = sum of squared coordinates.
    pub fn norm_sq(&self) -> S {
        self.0
            .iter()
            .fold(S::zero(), |acc, c| acc + c.clone() * c.clone())
    }

    /// Largest coordinate magnitude, for deviation reporting.
    pub fn max_magnitude(&self) -> f64 {
        self.0.iter().map(|c| c.magnitude()).fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    type Oct = Octonion<Rational>;

    #[test]
    fn cycle_queries() {
        assert_eq!(structure_constant(1, 2, 3), 1);
        assert_eq!(structure_constant(2, 1, 3), -1);
        assert_eq!(structure_constant(1, 2, 5), 0);
        assert_eq!(structure_constant(1, 7, 6), 1);
        assert_eq!(structure_constant(3, 6, 5), 1);
        assert_eq!(structure_constant(0, 2, 3), 0);
        assert_eq!(structure_constant(2, 2, 3), 0);
    }

    #[test]
    fn unit_products() {
        let e = |mu| Oct::unit(mu);
        assert_eq!(e(1).mul(&e(2)), e(3));
        assert_eq!(e(2).mul(&e(1)), e(3).neg());
        assert_eq!(e(1).mul(&e(1)), e(0).neg());
        // e_0 is a two-sided identity
        for mu in 0..8 {
            assert_eq!(e(0).mul(&e(mu)), e(mu));
            assert_eq!(e(mu).mul(&e(0)), e(mu));
        }
    }

    #[test]
    fn non_associativity_witness() {
        // (e1 e5) e7 = -e3 while e1 (e5 e7) = e3
        let e = |mu| Oct::unit(mu);
        assert_eq!(e(1).mul(&e(5)).mul(&e(7)), e(3).neg());
        assert_eq!(e(1).mul(&e(5).mul(&e(7))), e(3));
        assert_eq!(
            Oct::associator(&e(1), &e(5), &e(7)),
            e(3).scale(&Rational::from_int(-2))
        );
    }

    #[test]
    fn associator_vanishes_exactly_on_cycle_triples() {
        let e = |mu| Oct::unit(mu);
        for i in 1..8 {
            for j in i + 1..8 {
                for k in j + 1..8 {
                    let a = Oct::associator(&e(i), &e(j), &e(k));
                    let on_cycle = structure_constant(i, j, k) != 0;
                    assert_eq!(a.is_zero(), on_cycle, "triple ({i},{j},{k})");
                }
            }
        }
    }

    #[test]
    fn associator_alternativity_on_basis() {
        let e = |mu| Oct::unit(mu);
        for i in 1..8 {
            for j in 1..8 {
                assert!(Oct::associator(&e(i), &e(i), &e(j)).is_zero());
            }
        }
    }

    #[test]
    fn associator_totally_antisymmetric_on_basis() {
        let e = |mu| Oct::unit(mu);
        for i in 1..8 {
            for j in i + 1..8 {
                for k in j + 1..8 {
                    let base = Oct::associator(&e(i), &e(j), &e(k));
                    // transpositions flip the sign
                    assert_eq!(Oct::associator(&e(j), &e(i), &e(k)), base.neg());
                    assert_eq!(Oct::associator(&e(i), &e(k), &e(j)), base.neg());
                    assert_eq!(Oct::associator(&e(k), &e(j), &e(i)), base.neg());
                    // even permutations keep it
                    assert_eq!(Oct::associator(&e(j), &e(k), &e(i)), base);
                    assert_eq!(Oct::associator(&e(k), &e(i), &e(j)), base);
                }
            }
        }
    }

    #[test]
    fn basis_commutator() {
        let e = |mu| Oct::unit(mu);
        assert_eq!(e(1).commutator(&e(2)), e(3).scale(&Rational::from_int(2)));
    }

    #[test]
    fn norm_of_integer_witness_point() {
        let w = Oct::from_ints([1, 2, 3, 4, 5, 6, 7, 8]);
        assert_eq!(w.norm_sq(), Rational::from_int(204));
    }

    #[test]
    fn conjugate_fixes_real_unit() {
        assert_eq!(Oct::unit(0).conjugate(), Oct::unit(0));
        assert_eq!(Oct::unit(4).conjugate(), Oct::unit(4).neg());
    }
}
