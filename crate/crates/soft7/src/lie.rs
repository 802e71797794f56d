//! Lie-algebra structures built from the canonical operators: the Clifford
//! gammas, so(8) in gamma form, the 14-dimensional automorphism algebra,
//! and the coset generator families.

use crate::matrix::{span_dimension, span_dimension_complex, Mat8, Mat8C};
use crate::octonion::structure_constant;
use crate::operators::{left_op, right_op, LRCombo};
use crate::scalar::{half, ratio, Scalar};
use num::complex::Complex;

/// Which operator family a gamma is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chirality {
    Left,
    Right,
}

impl Chirality {
    pub fn label(self) -> &'static str {
        match self {
            Chirality::Left => "left",
            Chirality::Right => "right",
        }
    }

    fn op<S: Scalar>(self, i: usize) -> Mat8<S> {
        match self {
            Chirality::Left => left_op(i),
            Chirality::Right => right_op(i),
        }
    }
}

/// Multiplies a real matrix by the imaginary unit.
fn times_i<S: Scalar>(m: &Mat8<S>) -> Mat8C<S> {
    Mat8::from_fn(|r, c| Complex::new(S::zero(), m.0[r][c].clone()))
}

/// gamma^i = i E_i (left) or i (1|E_i) (right); Hermitian, purely imaginary,
/// and {gamma^i, gamma^j} = 2 delta^{ij} I.
pub fn gamma<S: Scalar>(i: usize, chirality: Chirality) -> Mat8C<S> {
    assert!((1..8).contains(&i), "gamma index out of range: {i}");
    times_i(&chirality.op(i))
}

/// Antisymmetrized product gamma^{ij} = (gamma^i gamma^j - gamma^j gamma^i)/2.
/// Zero when i = j.
pub fn gamma2<S: Scalar>(i: usize, j: usize, chirality: Chirality) -> Mat8C<S> {
    assert!(
        (1..8).contains(&i) && (1..8).contains(&j),
        "gamma index out of range: ({i},{j})"
    );
    if i == j {
        return Mat8::zero();
    }
    let gi = gamma::<S>(i, chirality);
    let gj = gamma::<S>(j, chirality);
    gi.commutator(&gj)
        .scale(&Complex::new(half::<S>(), S::zero()))
}

/// Levi-Civita symbol on seven indices (1..=7): permutation parity, zero on
/// repeats.
pub fn epsilon7(idx: [usize; 7]) -> i64 {
    let mut seen = [false; 8];
    for &x in &idx {
        if x == 0 || x > 7 || seen[x] {
            return 0;
        }
        seen[x] = true;
    }
    let mut sign = 1;
    for a in 0..7 {
        for b in a + 1..7 {
            if idx[a] > idx[b] {
                sign = -sign;
            }
        }
    }
    sign
}

/// The phase by which the triple product of gammas is dual to the quadruple
/// product: gamma^i gamma^j gamma^k = phase * (1/4!) eps^{ijklmnp}
/// gamma^l gamma^m gamma^n gamma^p. It is +i for the left chirality and -i
/// for the right one; a parity count in the imaginary unit shows no real
/// phase can work.
pub fn self_duality_phase<S: Scalar>(chirality: Chirality) -> Complex<S> {
    match chirality {
        Chirality::Left => Complex::new(S::zero(), S::one()),
        Chirality::Right => Complex::new(S::zero(), -S::one()),
    }
}

/// Residual of the self-duality identity for one pairwise-distinct triple:
/// the difference between the triple product and the phased dual sum.
pub fn self_duality_residual<S: Scalar>(
    i: usize,
    j: usize,
    k: usize,
    chirality: Chirality,
) -> Mat8C<S> {
    assert!(
        i != j && j != k && i != k,
        "triple must be pairwise distinct"
    );
    let g: Vec<Mat8C<S>> = (1..8).map(|n| gamma(n, chirality)).collect();
    let lhs = g[i - 1].mul(&g[j - 1]).mul(&g[k - 1]);
    let rest: Vec<usize> = (1..8).filter(|n| ![i, j, k].contains(n)).collect();
    let mut dual = Mat8::zero();
    for perm in permutations4(&rest) {
        let [l, m, n, p] = perm;
        let eps = epsilon7([i, j, k, l, m, n, p]);
        if eps == 0 {
            continue;
        }
        let prod = g[l - 1].mul(&g[m - 1]).mul(&g[n - 1]).mul(&g[p - 1]);
        dual = dual.add(&prod.scale(&Complex::new(S::from_int(eps), S::zero())));
    }
    let coeff = self_duality_phase::<S>(chirality) * Complex::new(ratio::<S>(1, 24), S::zero());
    lhs.sub(&dual.scale(&coeff))
}

fn permutations4(items: &[usize]) -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    let mut v = [items[0], items[1], items[2], items[3]];
    heap4(&mut v, 4, &mut out);
    out
}

fn heap4(v: &mut [usize; 4], n: usize, out: &mut Vec<[usize; 4]>) {
    if n == 1 {
        out.push(*v);
        return;
    }
    for i in 0..n {
        heap4(v, n - 1, out);
        if n % 2 == 0 {
            v.swap(i, n - 1);
        } else {
            v.swap(0, n - 1);
        }
    }
}

/// A labeled family of matrices with its advertised span dimension.
#[derive(Clone, Debug)]
pub struct GeneratorSet<T> {
    pub label: String,
    pub mats: Vec<Mat8<T>>,
}

impl<S: Scalar> GeneratorSet<S> {
    pub fn span_dimension(&self) -> usize {
        span_dimension(&self.mats)
    }
}

impl<S: Scalar> GeneratorSet<Complex<S>> {
    pub fn complex_span_dimension(&self) -> usize {
        span_dimension_complex(&self.mats)
    }
}

/// so(8) in gamma form: J^i = sign * gamma^i for one chirality, and
/// J^{ij} = [J^i, J^j]/2. The constructor verifies the three defining
/// relations and rejects a choice that breaks them (none of the four does).
pub struct So8<S> {
    pub chirality: Chirality,
    pub sign: i64,
    pub vector: Vec<Mat8C<S>>,
    pairs: Vec<Mat8C<S>>,
}

/// The requested sign/chirality choice fails the so(8) relations; indicates
/// a transcription fault.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BadSignChoice;

impl std::fmt::Display for BadSignChoice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "sign choice violates the so(8) relations")
    }
}

impl std::error::Error for BadSignChoice {}

impl<S: Scalar> So8<S> {
    pub fn new(chirality: Chirality, sign: i64) -> Result<Self, BadSignChoice> {
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        let s = Complex::new(S::from_int(sign), S::zero());
        let vector: Vec<Mat8C<S>> = (1..8).map(|i| gamma::<S>(i, chirality).scale(&s)).collect();
        let mut pairs = Vec::with_capacity(49);
        for i in 1..8 {
            for j in 1..8 {
                pairs.push(
                    vector[i - 1]
                        .commutator(&vector[j - 1])
                        .scale(&Complex::new(half::<S>(), S::zero())),
                );
            }
        }
        let out = So8 {
            chirality,
            sign,
            vector,
            pairs,
        };
        if out.relations_residual() > S::TOL {
            return Err(BadSignChoice);
        }
        Ok(out)
    }

    pub fn j(&self, i: usize) -> &Mat8C<S> {
        &self.vector[i - 1]
    }

    pub fn jj(&self, i: usize, j: usize) -> &Mat8C<S> {
        &self.pairs[(i - 1) * 7 + (j - 1)]
    }

    /// The 28 independent generators {J^{ij}}_{i<j} plus {J^i} span so(8)
    /// only through the pair part; the advertised set is the 7 + 21 list.
    pub fn generator_set(&self) -> GeneratorSet<Complex<S>> {
        let mut mats = self.vector.clone();
        for i in 1..8 {
            for j in i + 1..8 {
                mats.push(self.jj(i, j).clone());
            }
        }
        GeneratorSet {
            label: format!(
                "so8[{}{}]",
                if self.sign > 0 { '+' } else { '-' },
                self.chirality.label()
            ),
            mats,
        }
    }

    /// Worst deviation over the three defining relations:
    /// [J^i,J^j] = 2J^{ij};
    /// [J^i,J^{mn}] = 2d^{im}J^n - 2d^{in}J^m;
    /// [J^{ij},J^{kl}] = 2d^{jk}J^{il} + 2d^{il}J^{jk} - 2d^{ik}J^{jl} - 2d^{jl}J^{ik}.
    /// General index orders reduce to ascending ones through the
    /// antisymmetry J^{ij} = -J^{ji}, which is checked alongside.
    pub fn relations_residual(&self) -> f64 {
        let two = Complex::new(S::from_int(2), S::zero());
        let mut worst = 0.0f64;
        for i in 1..8 {
            for j in i..8 {
                let anti = self.jj(i, j).add(self.jj(j, i));
                worst = worst.max(anti.max_mag());
                let dev = self
                    .j(i)
                    .commutator(self.j(j))
                    .sub(&self.jj(i, j).scale(&two));
                worst = worst.max(dev.max_mag());
            }
        }
        let d = |a: usize, b: usize| i64::from(a == b);
        for i in 1..8 {
            for m in 1..8 {
                for n in m + 1..8 {
                    let want = self
                        .j(n)
                        .scale(&Complex::new(S::from_int(2 * d(i, m)), S::zero()))
                        .sub(
                            &self
                                .j(m)
                                .scale(&Complex::new(S::from_int(2 * d(i, n)), S::zero())),
                        );
                    let dev = self.j(i).commutator(self.jj(m, n)).sub(&want);
                    worst = worst.max(dev.max_mag());
                }
            }
        }
        for i in 1..8 {
            for j in i + 1..8 {
                for k in 1..8 {
                    for l in k + 1..8 {
                        let want = self
                            .jj(i, l)
                            .scale(&Complex::new(S::from_int(2 * d(j, k)), S::zero()))
                            .add(
                                &self
                                    .jj(j, k)
                                    .scale(&Complex::new(S::from_int(2 * d(i, l)), S::zero())),
                            )
                            .sub(
                                &self
                                    .jj(j, l)
                                    .scale(&Complex::new(S::from_int(2 * d(i, k)), S::zero())),
                            )
                            .sub(
                                &self
                                    .jj(i, k)
                                    .scale(&Complex::new(S::from_int(2 * d(j, l)), S::zero())),
                            );
                        let dev = self.jj(i, j).commutator(self.jj(k, l)).sub(&want);
                        worst = worst.max(dev.max_mag());
                    }
                }
            }
        }
        worst
    }
}

/// Basis element of the automorphism algebra:
/// H_ij = f_ijk (E_k - 1|E_k) - (3/2)[E_i, 1|E_j].
pub fn h<S: Scalar>(i: usize, j: usize) -> Mat8<S> {
    assert!(
        (1..8).contains(&i) && (1..8).contains(&j),
        "indices out of range: ({i},{j})"
    );
    let mut m = Mat8::zero();
    for k in 1..8 {
        let c = structure_constant(i, j, k);
        if c == 0 {
            continue;
        }
        m = m.add(&left_op::<S>(k).sub(&right_op(k)).scale(&S::from_int(c)));
    }
    m.sub(&left_op::<S>(i).commutator(&right_op(j)).scale(&ratio(3, 2)))
}

/// The 21 matrices H_ij with i<j; they span a 14-dimensional algebra.
pub fn g2_generators<S: Scalar>() -> GeneratorSet<S> {
    let mut mats = Vec::with_capacity(21);
    for i in 1..8 {
        for j in i + 1..8 {
            mats.push(h(i, j));
        }
    }
    GeneratorSet {
        label: "g2".into(),
        mats,
    }
}

/// The three coset generator families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CosetKind {
    /// K_v: vector coset, kills e_0.
    V,
    /// K_s: spinor coset; together with the H's it spans the 21-dimensional
    /// stability algebra of the spinor.
    S,
    /// Conjugate spinor coset, the octonionic conjugate of K_s.
    SBar,
}

impl CosetKind {
    pub fn label(self) -> &'static str {
        match self {
            CosetKind::V => "coset_v",
            CosetKind::S => "coset_s",
            CosetKind::SBar => "coset_s_bar",
        }
    }
}

/// Coefficient form of the i-th coset generator:
/// K_v^{±i} = ±(E_i - 1|E_i)/2;  K_s^{±i} = ±(E_i/2 + 1|E_i);
/// conjugate-spinor K^{±i} = ∓(E_i + 1|E_i/2).
pub fn coset_combo<S: Scalar>(kind: CosetKind, sign: i64, i: usize) -> LRCombo<S> {
    assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
    assert!((1..8).contains(&i), "index out of range: {i}");
    let s = S::from_int(sign);
    let slot = |v: S| -> [S; 7] {
        std::array::from_fn(|n| if n == i - 1 { v.clone() } else { S::zero() })
    };
    match kind {
        CosetKind::V => LRCombo::new(slot(s.clone() * half()), slot(-(s * half::<S>()))),
        CosetKind::S => LRCombo::new(slot(s.clone() * half()), slot(s)),
        CosetKind::SBar => LRCombo::new(slot(-s.clone()), slot(-(s * half::<S>()))),
    }
}

/// All seven generators of one family, evaluated to matrices.
pub fn coset_generators<S: Scalar>(kind: CosetKind, sign: i64) -> GeneratorSet<S> {
    let mats = (1..8)
        .map(|i| coset_combo::<S>(kind, sign, i).evaluate())
        .collect();
    GeneratorSet {
        label: format!("{}[{}]", kind.label(), if sign > 0 { '+' } else { '-' }),
        mats,
    }
}

/// The 21-matrix family {H_ij}_{i<j} ∪ {K_s^{+i}} whose span closes under
/// commutators.
pub fn spin7_generators<S: Scalar>() -> GeneratorSet<S> {
    let mut mats = g2_generators::<S>().mats;
    mats.extend(coset_generators::<S>(CosetKind::S, 1).mats);
    GeneratorSet {
        label: "spin7".into(),
        mats,
    }
}

/// Whether every pairwise commutator of `mats` stays inside their span
/// (exact elimination in the rational model, thresholded in floats).
pub fn closed_under_commutator<S: Scalar>(mats: &[Mat8<S>]) -> bool {
    let base = span_dimension(mats);
    let mut rows: Vec<Vec<S>> = mats.iter().map(|m| m.flatten()).collect();
    for a in 0..mats.len() {
        for b in a + 1..mats.len() {
            rows.push(mats[a].commutator(&mats[b]).flatten());
        }
    }
    crate::matrix::rank(&rows) == base
}

/// Outcome of the four commutator-decomposition identities, reported
/// per identity with the worst entry deviation.
#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub left_left: f64,
    pub right_right: f64,
    pub left_right: f64,
    pub h_from_commutators: f64,
}

impl DecompositionReport {
    pub fn max_deviation(&self) -> f64 {
        self.left_left
            .max(self.right_right)
            .max(self.left_right)
            .max(self.h_from_commutators)
    }
}

/// Verifies, for all index pairs, the decompositions of the three operator
/// commutators into the H part and the structure-constant parts:
/// [E_i,E_j]      = (4H_ij + 2 f_ijk E_k + 4 f_ijk 1|E_k)/3,
/// [1|E_i,1|E_j]  = (4H_ij - 4 f_ijk E_k - 2 f_ijk 1|E_k)/3,
/// [E_i,1|E_j]    = (-2H_ij + 2 f_ijk E_k - 2 f_ijk 1|E_k)/3,
/// H_ij = ([E_i,E_j] + [1|E_i,1|E_j] + [E_i,1|E_j])/2.
pub fn commutator_decompositions<S: Scalar>() -> DecompositionReport {
    let third = ratio::<S>(1, 3);
    let mut report = DecompositionReport {
        left_left: 0.0,
        right_right: 0.0,
        left_right: 0.0,
        h_from_commutators: 0.0,
    };
    for i in 1..8 {
        for j in 1..8 {
            let hij = h::<S>(i, j);
            let mut f_left = Mat8::zero();
            let mut f_right = Mat8::zero();
            for k in 1..8 {
                let c = structure_constant(i, j, k);
                if c == 0 {
                    continue;
                }
                f_left = f_left.add(&left_op::<S>(k).scale(&S::from_int(c)));
                f_right = f_right.add(&right_op::<S>(k).scale(&S::from_int(c)));
            }
            let cll = left_op::<S>(i).commutator(&left_op(j));
            let crr = right_op::<S>(i).commutator(&right_op(j));
            let clr = left_op::<S>(i).commutator(&right_op(j));

            let want_ll = hij
                .scale(&S::from_int(4))
                .add(&f_left.scale(&S::from_int(2)))
                .add(&f_right.scale(&S::from_int(4)))
                .scale(&third);
            let want_rr = hij
                .scale(&S::from_int(4))
                .sub(&f_left.scale(&S::from_int(4)))
                .sub(&f_right.scale(&S::from_int(2)))
                .scale(&third);
            let want_lr = hij
                .scale(&S::from_int(-2))
                .add(&f_left.scale(&S::from_int(2)))
                .sub(&f_right.scale(&S::from_int(2)))
                .scale(&third);
            let want_h = cll.add(&crr).add(&clr).scale(&half());

            report.left_left = report.left_left.max(cll.sub(&want_ll).max_mag());
            report.right_right = report.right_right.max(crr.sub(&want_rr).max_mag());
            report.left_right = report.left_right.max(clr.sub(&want_lr).max_mag());
            report.h_from_commutators = report.h_from_commutators.max(hij.sub(&want_h).max_mag());
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::octonion::Octonion;
    use crate::scalar::Rational;
    use num::Zero;

    #[test]
    fn gammas_hermitian_imaginary_clifford() {
        let two_i = Mat8::<Complex<Rational>>::identity()
            .scale(&Complex::new(Rational::from_int(2), Rational::zero()));
        for chir in [Chirality::Left, Chirality::Right] {
            for i in 1..8 {
                let gi = gamma::<Rational>(i, chir);
                assert!(gi.is_hermitian());
                assert!(gi.is_purely_imaginary());
                for j in 1..8 {
                    let anti = gi.anticommutator(&gamma(j, chir));
                    if i == j {
                        assert_eq!(anti, two_i);
                    } else {
                        assert!(anti.is_zero(), "({i},{j})");
                    }
                }
            }
        }
    }

    #[test]
    fn gamma2_antisymmetric_with_full_span() {
        assert_eq!(
            gamma2::<Rational>(1, 2, Chirality::Left),
            gamma2::<Rational>(2, 1, Chirality::Left).neg()
        );
        assert!(gamma2::<Rational>(3, 3, Chirality::Left).is_zero());
        let mats: Vec<_> = (1..8)
            .flat_map(|i| (i + 1..8).map(move |j| gamma2::<Rational>(i, j, Chirality::Left)))
            .collect();
        assert_eq!(span_dimension_complex(&mats), 21);
    }

    #[test]
    fn epsilon_parity() {
        assert_eq!(epsilon7([1, 2, 3, 4, 5, 6, 7]), 1);
        assert_eq!(epsilon7([2, 1, 3, 4, 5, 6, 7]), -1);
        assert_eq!(epsilon7([1, 1, 3, 4, 5, 6, 7]), 0);
    }

    #[test]
    fn self_duality_with_phase() {
        for chir in [Chirality::Left, Chirality::Right] {
            for (i, j, k) in [(1, 2, 3), (1, 2, 4), (2, 5, 6), (5, 6, 7)] {
                assert!(
                    self_duality_residual::<Rational>(i, j, k, chir).is_zero(),
                    "({i},{j},{k}) {}",
                    chir.label()
                );
            }
        }
    }

    #[test]
    fn so8_all_four_choices_hold() {
        for chir in [Chirality::Left, Chirality::Right] {
            for sign in [1, -1] {
                let algebra = So8::<Rational>::new(chir, sign).expect("choice must hold");
                assert_eq!(algebra.relations_residual(), 0.0);
            }
        }
    }

    #[test]
    fn g2_constraints_and_rank() {
        let e0 = Octonion::<Rational>::unit(0);
        // antisymmetry and the seven linear constraints
        for i in 1..8 {
            let mut contraction = Mat8::<Rational>::zero();
            for j in 1..8 {
                assert_eq!(h::<Rational>(i, j), h::<Rational>(j, i).neg());
                for k in 1..8 {
                    let c = structure_constant(i, j, k);
                    if c != 0 {
                        contraction =
                            contraction.add(&h::<Rational>(j, k).scale(&Rational::from_int(c)));
                    }
                }
            }
            assert!(contraction.is_zero(), "constraint {i}");
        }
        let set = g2_generators::<Rational>();
        assert_eq!(set.span_dimension(), 14);
        for m in &set.mats {
            assert!(m.apply(&e0).is_zero());
        }
        assert!(closed_under_commutator(&set.mats));
    }

    #[test]
    fn spin7_dimension_and_closure() {
        let set = spin7_generators::<Rational>();
        assert_eq!(set.span_dimension(), 21);
        assert!(closed_under_commutator(&set.mats));
    }

    #[test]
    fn coset_properties() {
        let e0 = Octonion::<Rational>::unit(0);
        for i in 1..8 {
            let kv = coset_combo::<Rational>(CosetKind::V, 1, i);
            assert!(kv.evaluate().apply(&e0).is_zero());
            // vector coset is self-conjugate, the spinor pair swap
            assert_eq!(kv.conjugate(), kv);
            let ks = coset_combo::<Rational>(CosetKind::S, 1, i);
            let ksb = coset_combo::<Rational>(CosetKind::SBar, 1, i);
            assert_eq!(ks.conjugate(), ksb);
            assert_eq!(ksb.conjugate(), ks);
        }
        assert_eq!(
            coset_generators::<Rational>(CosetKind::V, 1).span_dimension(),
            7
        );
    }

    #[test]
    fn decompositions_are_exact() {
        let report = commutator_decompositions::<Rational>();
        assert_eq!(report.max_deviation(), 0.0);
    }
}
