//! Standard small algebras, Hopf structures and monoids.

use crate::algcore::FinAlgebra;
use crate::coalg::{BialgebraData, CoalgebraData};
use crate::exactalg::{invert, twist, FieldSpec, Matrix};
use crate::gabi::{GabiSide, GabiStructure};
use crate::settheory::FiniteMonoid;

const Q: FieldSpec = FieldSpec::Rationals;

fn power_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{k}"),
        })
        .collect()
}

fn named(m: FiniteMonoid, names: &[&str]) -> FiniteMonoid {
    m.with_names(names.iter().map(|s| s.to_string()).collect()).expect("fixture names")
}

/// `C_n` with elements `1, g, g^2, …`.
pub fn cyclic_monoid(n: usize) -> FiniteMonoid {
    let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    FiniteMonoid::new(table, 0).expect("cyclic group").with_names(power_names(n)).expect("names")
}

pub fn trivial_monoid() -> FiniteMonoid {
    named(FiniteMonoid::new(vec![vec![0]], 0).unwrap(), &["1"])
}

pub fn klein_four() -> FiniteMonoid {
    let table = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
    named(FiniteMonoid::new(table, 0).unwrap(), &["1", "a", "b", "ab"])
}

/// Permutations of `{0,1,2}` in lexicographic order, composed as functions.
pub fn symmetric_group3() -> FiniteMonoid {
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
    let table = perms.iter().map(|s| perms.iter().map(|t| index([s[t[0]], s[t[1]], s[t[2]]])).collect()).collect();
    named(FiniteMonoid::new(table, 0).unwrap(), &["id", "(12)", "(01)", "(012)", "(021)", "(02)"])
}

/// `{1, e}` with `e² = e`.
pub fn idempotent_monoid() -> FiniteMonoid {
    named(FiniteMonoid::new(vec![vec![0, 1], vec![1, 1]], 0).unwrap(), &["1", "e"])
}

/// `{1, a, 0}` with `a² = 0`.
pub fn nilpotent_monoid() -> FiniteMonoid {
    named(FiniteMonoid::new(vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 2]], 0).unwrap(), &["1", "a", "0"])
}

/// `{1, e, f}` with `xy = x` for `x, y ∈ {e, f}`.
pub fn left_zero_band() -> FiniteMonoid {
    named(FiniteMonoid::new(vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 2, 2]], 0).unwrap(), &["1", "e", "f"])
}

/// `C_2 × {1, e}`, element `(g^i, e^j)` at index `2i + j`.
pub fn c2_times_idempotent() -> FiniteMonoid {
    let table = (0..4).map(|x: usize| (0..4).map(|y: usize| (((x >> 1) ^ (y >> 1)) << 1) | ((x | y) & 1)).collect()).collect();
    named(FiniteMonoid::new(table, 0).unwrap(), &["1", "e", "g", "ge"])
}

/// Every shipped monoid, groups and non-groups.
pub fn monoid_corpus() -> Vec<(&'static str, FiniteMonoid)> {
    vec![
        ("trivial", trivial_monoid()),
        ("c2", cyclic_monoid(2)),
        ("c3", cyclic_monoid(3)),
        ("c4", cyclic_monoid(4)),
        ("klein4", klein_four()),
        ("s3", symmetric_group3()),
        ("idempotent", idempotent_monoid()),
        ("nilpotent", nilpotent_monoid()),
        ("left-zero-band", left_zero_band()),
        ("c2-times-idempotent", c2_times_idempotent()),
    ]
}

pub fn monoid_algebra(field: FieldSpec, m: &FiniteMonoid) -> FinAlgebra {
    let n = m.size();
    let mut unit = vec![0; n];
    unit[m.identity()] = 1;
    FinAlgebra::from_fn(field, m.names().to_vec(), &unit, |i, j| {
        let mut c = vec![0; n];
        c[m.mul(i, j)] = 1;
        c
    })
    .expect("monoid algebra")
}

/// Every basis element grouplike.
pub fn monoid_bialgebra(field: FieldSpec, m: &FiniteMonoid) -> BialgebraData {
    let n = m.size();
    let mut comul = Matrix::zeros(field, n * n, n);
    for i in 0..n {
        comul.set(i * n + i, i, field.one());
    }
    let counit = Matrix::from_vec(field, 1, n, vec![field.one(); n]).unwrap();
    BialgebraData::new(monoid_algebra(field, m), CoalgebraData::new(comul, counit).unwrap()).unwrap()
}

pub fn cyclic_group_algebra(field: FieldSpec, n: usize) -> FinAlgebra {
    monoid_algebra(field, &cyclic_monoid(n))
}

pub fn group_bialgebra(field: FieldSpec, n: usize) -> BialgebraData {
    monoid_bialgebra(field, &cyclic_monoid(n))
}

/// `S(g^k) = g^{-k}` on `k[C_n]`.
pub fn group_antipode(field: FieldSpec, n: usize) -> Matrix {
    let mut s = Matrix::zeros(field, n, n);
    for k in 0..n {
        s.set((n - k) % n, k, field.one());
    }
    s
}

/// Sweedler's four-dimensional algebra over Q, basis `1, g, x, gx`.
///
/// `g^a x^b` sits at index `a + 2b`; `(g^a x^b)(g^c x^d) = (−1)^{bc} g^{a+c} x^{b+d}`.
pub fn sweedler_h4() -> FinAlgebra {
    let names = ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect();
    FinAlgebra::from_fn(Q, names, &[1, 0, 0, 0], |i, j| {
        let (a, b, c, d) = (i % 2, i / 2, j % 2, j / 2);
        let mut out = vec![0; 4];
        if b + d < 2 {
            out[(a + c) % 2 + 2 * (b + d)] = if b * c == 1 { -1 } else { 1 };
        }
        out
    })
    .expect("H4")
}

/// `Δ(g) = g⊗g`, `Δ(x) = x⊗1 + g⊗x`, `Δ(gx) = gx⊗g + 1⊗gx`, `ε = (1, 1, 0, 0)`.
pub fn sweedler_h4_bialgebra() -> BialgebraData {
    let mut comul = Matrix::zeros(Q, 16, 4);
    let one = Q.one();
    comul.set(0, 0, one.clone());
    comul.set(5, 1, one.clone());
    comul.set(8, 2, one.clone());
    comul.set(6, 2, one.clone());
    comul.set(13, 3, one.clone());
    comul.set(3, 3, one);
    let counit = Matrix::from_i64(Q, &[&[1, 1, 0, 0]]);
    BialgebraData::new(sweedler_h4(), CoalgebraData::new(comul, counit).unwrap()).unwrap()
}

/// `S(g) = g`, `S(x) = −gx`, `S(gx) = x`.
pub fn sweedler_h4_antipode() -> Matrix {
    Matrix::from_i64(Q, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]])
}

/// `δ(h) = h₁ ⊗ S(h₂)` for a Hopf algebra with antipode `S`.
pub fn hopf_gabi(b: &BialgebraData, s: &Matrix) -> GabiStructure {
    let id = Matrix::identity(b.field(), b.dim());
    GabiStructure::new(b.algebra.clone(), id.kron(s).mul(b.comul()), b.counit().clone(), GabiSide::Left).expect("shapes")
}

/// `δ′(h) = h₂ ⊗ S⁻¹(h₁)`, requires `S` invertible.
pub fn hopf_gabi_prime(b: &BialgebraData, s: &Matrix) -> GabiStructure {
    let n = b.dim();
    let f = b.field();
    let s_inv = invert(s).unwrap().expect("invertible antipode");
    let delta = Matrix::identity(f, n).kron(&s_inv).mul(&twist(f, n, n)).mul(b.comul());
    GabiStructure::new(b.algebra.clone(), delta, b.counit().clone(), GabiSide::Left).expect("shapes")
}

pub fn sweedler_h4_gabi() -> GabiStructure {
    hopf_gabi(&sweedler_h4_bialgebra(), &sweedler_h4_antipode())
}

pub fn group_gabi_structure(field: FieldSpec, n: usize) -> GabiStructure {
    hopf_gabi(&group_bialgebra(field, n), &group_antipode(field, n))
}

/// `𝔽₂[x]/(x²)`, basis `1, x`.
pub fn dual_numbers_f2() -> FinAlgebra {
    let f2 = FieldSpec::PrimeField(2);
    let names = vec!["1".to_string(), "x".to_string()];
    FinAlgebra::from_fn(f2, names, &[1, 0], |i, j| {
        let mut out = vec![0; 2];
        if i + j < 2 {
            out[i + j] = 1;
        }
        out
    })
    .expect("dual numbers")
}

/// `x` primitive: `Δ(x) = x⊗1 + 1⊗x`, `ε(x) = 0`.
pub fn dual_numbers_bialgebra() -> BialgebraData {
    let f2 = FieldSpec::PrimeField(2);
    let comul = Matrix::from_i64(f2, &[&[1, 0], &[0, 1], &[0, 1], &[0, 0]]);
    let counit = Matrix::from_i64(f2, &[&[1, 0]]);
    BialgebraData::new(dual_numbers_f2(), CoalgebraData::new(comul, counit).unwrap()).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algcore::check_algebra;
    use crate::coalg::check_bialgebra;
    use crate::settheory::is_group;

    #[test]
    fn algebras_are_valid() {
        for n in 1..=6 {
            assert!(check_algebra(&cyclic_group_algebra(Q, n)).passed());
            assert!(check_bialgebra(&group_bialgebra(Q, n)).passed());
        }
        assert!(check_algebra(&sweedler_h4()).passed());
        assert!(check_algebra(&dual_numbers_f2()).passed());
        assert!(check_bialgebra(&dual_numbers_bialgebra()).passed());
        for (name, m) in monoid_corpus() {
            assert!(check_algebra(&monoid_algebra(Q, &m)).passed(), "{name}");
        }
    }

    #[test]
    fn corpus_group_flags() {
        let groups: Vec<_> = monoid_corpus().into_iter().filter(|(_, m)| is_group(m).is_some()).map(|(n, _)| n).collect();
        assert_eq!(groups, vec!["trivial", "c2", "c3", "c4", "klein4", "s3"]);
    }

    #[test]
    fn s3_is_nonabelian() {
        let s3 = symmetric_group3();
        assert_ne!(s3.mul(1, 2), s3.mul(2, 1));
    }
}
