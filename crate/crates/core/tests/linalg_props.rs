use gabi_core::exactalg::{invert, kernel_basis, quotient_by_rows, rank, rref, solve, FieldSpec, Matrix, Rational, Scalar};
use proptest::prelude::*;

fn field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::Rationals),
        Just(FieldSpec::PrimeField(2)),
        Just(FieldSpec::PrimeField(3)),
        Just(FieldSpec::PrimeField(7)),
        Just(FieldSpec::PrimeField(101)),
    ]
}

fn scalar(f: FieldSpec) -> BoxedStrategy<Scalar> {
    match f {
        FieldSpec::Rationals => (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Scalar::Rational(Rational::new(n, d))).boxed(),
        FieldSpec::PrimeField(p) => (0..p as i64).prop_map(move |v| f.from_i64(v)).boxed(),
    }
}

fn matrix_in(f: FieldSpec, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(scalar(f), rows * cols).prop_map(move |v| Matrix::from_vec(f, rows, cols, v).unwrap())
}

fn matrix() -> impl Strategy<Value = Matrix> {
    (field(), 1usize..6, 1usize..6).prop_flat_map(|(f, r, c)| matrix_in(f, r, c))
}

fn square() -> impl Strategy<Value = Matrix> {
    (field(), 1usize..6).prop_flat_map(|(f, n)| matrix_in(f, n, n))
}

proptest! {
    #[test]
    fn rank_nullity(m in matrix()) {
        let k = kernel_basis(&m);
        prop_assert_eq!(rank(&m) + k.rows(), m.cols());
        prop_assert!(m.mul(&k.transpose()).is_zero());
        prop_assert_eq!(rank(&k), k.rows());
    }

    #[test]
    fn rref_is_idempotent_and_rank_preserving(m in matrix()) {
        let r = rref(&m);
        prop_assert_eq!(&rref(&r.matrix).matrix, &r.matrix);
        prop_assert_eq!(r.rank, r.pivots.len());
        prop_assert_eq!(rank(&m.transpose()), r.rank);
        for (i, &p) in r.pivots.iter().enumerate() {
            prop_assert!(r.matrix.get(i, p).is_one());
            for k in 0..m.rows() {
                prop_assert!(k == i || r.matrix.get(k, p).is_zero());
            }
        }
    }

    #[test]
    fn inverse_identities(m in square()) {
        let n = m.rows();
        let id = Matrix::identity(m.field(), n);
        match invert(&m).unwrap() {
            Some(inv) => {
                prop_assert_eq!(m.mul(&inv), id.clone());
                prop_assert_eq!(inv.mul(&m), id);
            }
            None => prop_assert!(rank(&m) < n),
        }
    }

    #[test]
    fn solve_is_sound(
        (a, b) in (field(), 1usize..5, 1usize..5, 1usize..3)
            .prop_flat_map(|(f, r, c, k)| (matrix_in(f, r, c), matrix_in(f, r, k)))
    ) {
        match solve(&a, &b).unwrap() {
            Some(x) => prop_assert_eq!(a.mul(&x), b),
            None => prop_assert!(rank(&a.hstack(&b)) > rank(&a)),
        }
    }

    #[test]
    fn kron_mixed_product(
        (a, b, c, d) in (field(), 1usize..4, 1usize..4, 1usize..4, 1usize..4, 1usize..4, 1usize..4)
            .prop_flat_map(|(f, p, q, r, s, t, u)| (matrix_in(f, p, q), matrix_in(f, r, s), matrix_in(f, q, t), matrix_in(f, s, u)))
    ) {
        prop_assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
    }

    #[test]
    fn quotient_invariants(r in matrix()) {
        let q = quotient_by_rows(r.cols(), &r);
        prop_assert_eq!(q.dim(), r.cols() - rank(&r));
        prop_assert!(q.reduce.mul(&r.transpose()).is_zero());
        prop_assert!(q.reduce.mul(&q.section).is_identity());
        // Two ambient vectors have the same class iff they differ by a relation.
        let id = Matrix::identity(r.field(), r.cols());
        let back = q.section.mul(&q.reduce);
        prop_assert!(q.reduce.mul(&id.sub(&back)).is_zero());
        prop_assert_eq!(rank(&id.sub(&back).transpose().vstack(&r)), rank(&r));
    }
}
