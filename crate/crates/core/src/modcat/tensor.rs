use super::{same_algebra, ABimodule, AModule, ModError};
use crate::algcore::FinAlgebra;
use crate::exactalg::{quotient_by_iter, EchelonBasis, Matrix, QuotientSpace, Scalar};
use crate::gabi::GabiStructure;
use crate::report::Report;

pub(crate) type Sparse = Vec<(usize, Scalar)>;

/// Basis elements generating `A` as an algebra, chosen greedily in index order.
pub fn algebra_generators(a: &FinAlgebra) -> Vec<usize> {
    let n = a.dim();
    let f = a.field();
    let mut gens = Vec::new();
    let mut span = EchelonBasis::new(f, n);
    span.insert(a.unit().to_vec());
    for i in 0..n {
        if span.rank() == n {
            break;
        }
        if span.contains(&a.basis_vector(i)) {
            continue;
        }
        gens.push(i);
        // Close {1} ∪ gens under multiplication.
        span = EchelonBasis::new(f, n);
        let mut frontier: Vec<Vec<Scalar>> = vec![a.unit().to_vec()];
        while let Some(v) = frontier.pop() {
            if !span.insert(v.clone()) {
                continue;
            }
            for &gi in &gens {
                frontier.push(a.multiply(&v, &a.basis_vector(gi)).expect("dims"));
            }
        }
    }
    gens
}

/// `Σ v_j · reduce(e_j)` for a sparse ambient vector.
pub(crate) fn reduce_sparse(q: &QuotientSpace, v: &[(usize, Scalar)]) -> Vec<Scalar> {
    let f = q.field();
    let mut out = vec![f.zero(); q.dim()];
    for (j, c) in v {
        for (r, o) in out.iter_mut().enumerate() {
            let x = q.reduce.get(r, *j);
            if !x.is_zero() {
                *o = o.add(&c.mul(x));
            }
        }
    }
    out
}

pub(crate) fn free_indices(q: &QuotientSpace) -> Vec<usize> {
    let mut is_pivot = vec![false; q.ambient_dim];
    for &p in &q.pivot_cols {
        is_pivot[p] = true;
    }
    (0..q.ambient_dim).filter(|&j| !is_pivot[j]).collect()
}

fn dense(len: usize, f: crate::exactalg::FieldSpec, v: &[(usize, Scalar)]) -> Vec<Scalar> {
    let mut out = vec![f.zero(); len];
    for (j, c) in v {
        out[*j] = out[*j].add(c);
    }
    out
}

/// `P ⊗_A M` as a quotient of `P ⊗ M` (index `p·dim M + m`).
#[derive(Clone, Debug)]
pub struct TensorOverA {
    pub quotient: QuotientSpace,
    pub module: AModule,
    pub left_dim: usize,
    pub right_dim: usize,
    /// Algebra generators used for the relations `p·a ⊗ m − p ⊗ a·m`.
    pub generators: Vec<usize>,
    pub(crate) relation_blocks: Vec<(Matrix, Matrix)>,
}

impl TensorOverA {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    /// Spanning relation vectors, one per generator and basis pair.
    pub fn relations(&self) -> impl Iterator<Item = Sparse> + '_ {
        let (dp, dm) = (self.left_dim, self.right_dim);
        self.relation_blocks.iter().flat_map(move |(rp, rm)| {
            (0..dp).flat_map(move |p| (0..dm).map(move |m| relation(rp, rm, p, m, dm)))
        })
    }

    /// Quotient coordinates of `e_p ⊗ e_m`.
    pub fn class(&self, p: usize, m: usize) -> Vec<Scalar> {
        self.quotient.class_of_basis(p * self.right_dim + m)
    }
}

fn relation(rp: &Matrix, rm: &Matrix, p: usize, m: usize, dm: usize) -> Sparse {
    let mut v: Sparse = Vec::new();
    for k in 0..rp.rows() {
        let x = rp.get(k, p);
        if !x.is_zero() {
            v.push((k * dm + m, x.clone()));
        }
    }
    for k in 0..rm.rows() {
        let x = rm.get(k, m);
        if !x.is_zero() {
            v.push((p * dm + k, x.neg()));
        }
    }
    v
}

/// `P ⊗_A M` with the left action inherited from `P`.
pub fn tensor_over_a(p: &ABimodule, m: &AModule) -> Result<TensorOverA, ModError> {
    if p.algebra() != m.algebra() {
        return Err(ModError::AlgebraMismatch(m.name().to_string()));
    }
    let a = p.algebra();
    let f = a.field();
    let (dp, dm) = (p.dim(), m.dim());
    let ambient = dp * dm;
    let generators = algebra_generators(a);
    let relation_blocks: Vec<(Matrix, Matrix)> = generators.iter().map(|&i| (p.right(i).clone(), m.action(i).clone())).collect();
    let rels = relation_blocks.iter().flat_map(|(rp, rm)| (0..dp).flat_map(move |pp| (0..dm).map(move |mm| dense(ambient, f, &relation(rp, rm, pp, mm, dm)))));
    let quotient = quotient_by_iter(f, ambient, rels);
    let free = free_indices(&quotient);
    let d = quotient.dim();
    let mut action = Vec::with_capacity(a.dim());
    for i in 0..a.dim() {
        let l = p.left(i);
        let mut cols = Vec::with_capacity(d);
        for &j in &free {
            let (pp, mm) = (j / dm.max(1), j % dm.max(1));
            let v: Sparse = (0..dp).filter(|&r| !l.get(r, pp).is_zero()).map(|r| (r * dm + mm, l.get(r, pp).clone())).collect();
            cols.push(reduce_sparse(&quotient, &v));
        }
        action.push(Matrix::from_columns(f, d, &cols));
    }
    let module = AModule::new(a.clone(), format!("{} ⊗_A {}", p.name(), m.name()), action)?;
    Ok(TensorOverA { quotient, module, left_dim: dp, right_dim: dm, generators, relation_blocks })
}

/// The left action of `P` descends to the quotient: `(ℓ_a ⊗ id)` kills every relation.
pub fn check_induced_action(p: &ABimodule, t: &TensorOverA) -> Report {
    let a = p.algebra();
    let dm = t.right_dim;
    let mut report = Report::new();
    for &i in &t.generators {
        let l = p.left(i);
        for rel in t.relations() {
            let mut image: Sparse = Vec::new();
            for (j, c) in &rel {
                let (pp, mm) = (j / dm, j % dm);
                for r in 0..p.dim() {
                    let x = l.get(r, pp);
                    if !x.is_zero() {
                        image.push((r * dm + mm, c.mul(x)));
                    }
                }
            }
            if reduce_sparse(&t.quotient, &image).iter().any(|x| !x.is_zero()) {
                report.push("induced-action", a.name(i), "left action does not preserve the relations");
                break;
            }
        }
    }
    report
}

/// `A⊙M`: `a·(b⊗m) = ab⊗m`, `(b⊗m)·c = bc₊ ⊗ c₋m`.
pub fn odot(g: &GabiStructure, m: &AModule) -> Result<ABimodule, ModError> {
    same_algebra(g, &[m])?;
    let a = g.algebra();
    let n = a.dim();
    let f = a.field();
    let dm = m.dim();
    let id = Matrix::identity(f, dm);
    let left = (0..n).map(|i| a.left_mul_basis(i).kron(&id)).collect();
    let rmul: Vec<Matrix> = (0..n).map(|i| a.right_mul_basis(i)).collect();
    let right = (0..n)
        .map(|c| {
            let mut acc = Matrix::zeros(f, n * dm, n * dm);
            for p in 0..n {
                for q in 0..n {
                    let coef = g.delta().get(p * n + q, c);
                    if !coef.is_zero() {
                        acc = acc.add(&rmul[p].kron(m.action(q)).scale(coef));
                    }
                }
            }
            acc
        })
        .collect();
    ABimodule::new(a.clone(), format!("A⊙{}", m.name()), left, right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalg::scalars;
    use crate::exactalg::{quotient_by_rows, FieldSpec};
    use crate::fixtures;
    use crate::modcat::{check_bimodule, check_module, regular_bimodule, regular_module, trivial_module, zero_module};

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn generators() {
        assert_eq!(algebra_generators(&fixtures::cyclic_group_algebra(Q, 6)), vec![1]);
        assert_eq!(algebra_generators(&fixtures::sweedler_h4()), vec![1, 2]);
        assert_eq!(algebra_generators(&fixtures::monoid_algebra(Q, &fixtures::klein_four())), vec![1, 2]);
        assert!(algebra_generators(&FinAlgebra::base(Q)).is_empty());
    }

    #[test]
    fn generator_relations_span_all_relations() {
        let g = fixtures::sweedler_h4_gabi();
        let a = g.algebra();
        for m in [regular_module(a), trivial_module(a, g.eps()).unwrap()] {
            let p = odot(&g, &m).unwrap();
            let t = tensor_over_a(&p, &m).unwrap();
            let (dp, dm) = (p.dim(), m.dim());
            let mut rows = Vec::new();
            for i in 0..a.dim() {
                for pp in 0..dp {
                    for mm in 0..dm {
                        rows.push(dense(dp * dm, Q, &relation(p.right(i), m.action(i), pp, mm, dm)));
                    }
                }
            }
            let full = quotient_by_rows(dp * dm, &Matrix::from_rows(Q, rows).unwrap());
            assert_eq!(full, t.quotient);
        }
    }

    #[test]
    fn regular_bimodule_is_unit() {
        let a = fixtures::sweedler_h4();
        let m = regular_module(&a);
        let t = tensor_over_a(&regular_bimodule(&a), &m).unwrap();
        assert_eq!(t.dim(), a.dim());
        // a ⊗ m ↦ a·m is an isomorphism onto M.
        let mut mult = Matrix::zeros(Q, a.dim(), t.dim());
        for (k, j) in free_indices(&t.quotient).into_iter().enumerate() {
            for (r, x) in a.product(j / 4, j % 4).into_iter().enumerate() {
                mult.set(r, k, x);
            }
        }
        assert!(crate::exactalg::invert(&mult).unwrap().is_some());
        assert!(check_module(&t.module).passed());
    }

    #[test]
    fn odot_examples() {
        let g = fixtures::group_gabi_structure(Q, 2);
        let a = g.algebra();
        let k = trivial_module(a, g.eps()).unwrap();
        let ak = odot(&g, &k).unwrap();
        assert!(check_bimodule(&ak).passed());
        assert_eq!(ak.right(1), &a.right_mul_basis(1));
        let reg = regular_module(a);
        let ar = odot(&g, &reg).unwrap();
        assert!(check_bimodule(&ar).passed());
        assert!(ar.right(0).is_identity());
        // (1⊗1)·g = g⊗g, index 3.
        assert_eq!(ar.right(1).col(0), scalars(Q, &[0, 0, 0, 1]));
        let t = tensor_over_a(&ak, &reg).unwrap();
        assert_eq!(t.dim(), 2);
        assert!(check_induced_action(&ak, &t).passed());
        let z = tensor_over_a(&ak, &zero_module(a)).unwrap();
        assert_eq!(z.dim(), 0);
        assert!(check_bimodule(&odot(&fixtures::sweedler_h4_gabi(), &regular_module(&fixtures::sweedler_h4())).unwrap()).passed());
    }
}
