use gabi_core::coalg::{convolution, gabi_from_one_sided_hopf, solve_antipode, AntipodeSide, BialgebraData};
use gabi_core::exactalg::{FieldSpec, Matrix, Scalar};
use gabi_core::fixtures;
use gabi_core::gabi::{canonical_beta, check_gabi, check_tricocycloid, derive_hopf, search_gabi, tricocycloid, EpsChoice, GabiStructure, HopfStrategy};
use gabi_core::modcat::{adjunction_check, boxtimes_constraints, check_module, hom_module, is_module_map, regular_module, trivial_module, AModule};
use gabi_core::{Execution, DEFAULT_CAP};
use proptest::prelude::*;

const Q: FieldSpec = FieldSpec::Rationals;

fn bialgebras() -> Vec<BialgebraData> {
    let mut out = vec![fixtures::sweedler_h4_bialgebra(), fixtures::dual_numbers_bialgebra()];
    for f in [Q, FieldSpec::PrimeField(2), FieldSpec::PrimeField(3)] {
        for n in 1..=4 {
            out.push(fixtures::group_bialgebra(f, n));
        }
        out.push(fixtures::monoid_bialgebra(f, &fixtures::klein_four()));
    }
    out
}

/// Hopf-derived structures plus everything the 𝔽₂ search finds in dimension 2.
fn passing_structures() -> Vec<GabiStructure> {
    let mut out = Vec::new();
    for b in bialgebras() {
        let s = solve_antipode(&b, AntipodeSide::TwoSided).expect("Hopf fixture");
        out.push(gabi_from_one_sided_hopf(&b, &s).unwrap());
    }
    let f2 = FieldSpec::PrimeField(2);
    for a in [fixtures::cyclic_group_algebra(f2, 2), fixtures::monoid_algebra(f2, &fixtures::idempotent_monoid()), fixtures::dual_numbers_f2()] {
        out.extend(search_gabi(&a, EpsChoice::SearchAll, DEFAULT_CAP, Execution::Sequential).unwrap());
    }
    out
}

fn random_matrix(f: FieldSpec, rows: usize, cols: usize, seed: &[i64]) -> Matrix {
    let v: Vec<Scalar> = (0..rows * cols).map(|k| f.from_i64(seed[k % seed.len()] * (k as i64 % 3 + 1) - (k as i64 % 5))).collect();
    Matrix::from_vec(f, rows, cols, v).unwrap()
}

fn seed() -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-4i64..=4, 1..40)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn convolution_is_a_monoid(idx in 0usize..13, s1 in seed(), s2 in seed(), s3 in seed()) {
        let all = bialgebras();
        let b = &all[idx % all.len()];
        let (n, f) = (b.dim(), b.field());
        let (x, y, z) = (random_matrix(f, n, n, &s1), random_matrix(f, n, n, &s2), random_matrix(f, n, n, &s3));
        let xy = convolution(&x, &y, b).unwrap();
        let yz = convolution(&y, &z, b).unwrap();
        prop_assert_eq!(convolution(&xy, &z, b).unwrap(), convolution(&x, &yz, b).unwrap());
        let u = b.convolution_unit();
        prop_assert_eq!(convolution(&u, &x, b).unwrap(), x.clone());
        prop_assert_eq!(convolution(&x, &u, b).unwrap(), x);
    }

    #[test]
    fn post_composition_is_a_module_map(idx in 0usize..64, s in seed()) {
        let all = passing_structures();
        let g = &all[idx % all.len()];
        let a = g.algebra();
        let n = a.dim();
        let reg = regular_module(a);
        // Right multiplication by any element is an endomorphism of the regular module.
        let c = random_matrix(a.field(), n, 1, &s);
        let h = (0..n).fold(Matrix::zeros(a.field(), n, n), |acc, i| acc.add(&a.right_mul_basis(i).scale(c.get(i, 0))));
        prop_assert!(is_module_map(&h, &reg, &reg, "h").passed());
        let k = trivial_module(a, g.eps()).unwrap();
        for m in [&reg, &k] {
            let hom = hom_module(g, m, &reg).unwrap();
            let post = h.kron(&Matrix::identity(a.field(), m.dim()));
            prop_assert!(is_module_map(&post, &hom, &hom, "post").passed());
        }
    }
}

#[test]
fn one_sided_hopf_yields_gabi() {
    for b in bialgebras() {
        for side in [AntipodeSide::Left, AntipodeSide::Right] {
            let s = solve_antipode(&b, side).unwrap();
            let g = gabi_from_one_sided_hopf(&b, &s).unwrap();
            assert!(check_gabi(&g).passed(), "{}", check_gabi(&g));
        }
    }
}

#[test]
fn beta_recovers_delta() {
    for g in passing_structures() {
        let a = g.algebra();
        let id = Matrix::identity(a.field(), a.dim());
        assert_eq!(&canonical_beta(&g).unwrap().mul(&id.kron(&a.unit_column())), g.delta());
    }
}

#[test]
fn braid_equation_on_passing_structures() {
    for g in passing_structures() {
        let r = check_tricocycloid(&tricocycloid(&g).unwrap()).unwrap();
        assert!(r.report.passed(), "{}", r.report);
    }
}

#[test]
fn hopf_round_trip() {
    for b in bialgebras() {
        let s = solve_antipode(&b, AntipodeSide::TwoSided).unwrap();
        let g = gabi_from_one_sided_hopf(&b, &s).unwrap();
        let h = derive_hopf(&g, HopfStrategy::BetaInverse).unwrap();
        let h = h.result().expect("Hopf input");
        assert_eq!(h.bialgebra.comul(), b.comul());
        assert_eq!(h.antipode, s.matrix);
    }
}

#[test]
fn lifted_structure_on_passing_structures() {
    for g in passing_structures() {
        let a = g.algebra();
        let modules: Vec<AModule> = vec![trivial_module(a, g.eps()).unwrap(), regular_module(a)];
        for m in &modules {
            for n in &modules {
                assert!(check_module(&hom_module(&g, m, n).unwrap()).passed());
            }
            assert!(adjunction_check(&g, m, &modules).unwrap().passed());
            let c = boxtimes_constraints(&g, m, m, m).unwrap();
            assert!(c.report.passed(), "{}", c.report);
        }
    }
}
