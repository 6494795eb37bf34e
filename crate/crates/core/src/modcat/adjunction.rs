use super::tensor::{free_indices, reduce_sparse, Sparse};
use super::{hom_module, is_module_map, odot, same_algebra, tensor_over_a, AModule, ModError, TensorOverA};
use crate::exactalg::{Matrix, Scalar};
use crate::gabi::GabiStructure;
use crate::report::Report;

/// `id_P ⊗_A h` between two quotients with the same left factor.
pub(crate) fn induced_map(src: &TensorOverA, tgt: &TensorOverA, h: &Matrix) -> Matrix {
    let f = h.field();
    let (dm, dm2) = (src.right_dim, tgt.right_dim);
    let cols: Vec<Vec<Scalar>> = free_indices(&src.quotient)
        .into_iter()
        .map(|j| {
            let (p, m) = (j / dm, j % dm);
            let v: Sparse = (0..dm2).filter(|&r| !h.get(r, m).is_zero()).map(|r| (p * dm2 + r, h.get(r, m).clone())).collect();
            reduce_sparse(&tgt.quotient, &v)
        })
        .collect();
    Matrix::from_columns(f, tgt.dim(), &cols)
}

/// `coev: X → Hom(M, (A⊙M) ⊗_A X)`, `x ↦ (m ↦ (1⊙m) ⊗ x)`.
fn coev(fx: &TensorOverA, unit: &[Scalar], dm: usize) -> Matrix {
    let f = unit[0].field();
    let dx = fx.right_dim;
    let df = fx.dim();
    let mut out = Matrix::zeros(f, df * dm, dx);
    for x in 0..dx {
        for i in 0..dm {
            let v: Sparse = unit.iter().enumerate().filter(|(_, u)| !u.is_zero()).map(|(b, u)| ((b * dm + i) * dx + x, u.clone())).collect();
            for (r, c) in reduce_sparse(&fx.quotient, &v).into_iter().enumerate() {
                if !c.is_zero() {
                    out.set(r * dm + i, x, c);
                }
            }
        }
    }
    out
}

/// `ev: (A⊙M) ⊗_A Hom(M, N) → N`, `(a⊙m) ⊗ f ↦ a·f(m)`, with the check that
/// it vanishes on the relations.
fn ev(fh: &TensorOverA, n: &AModule, dm: usize, sign: &Scalar) -> (Matrix, Report) {
    let f = sign.field();
    let dh = fh.right_dim;
    let dn = n.dim();
    let ambient = |j: usize| -> Vec<Scalar> {
        let (x, h) = (j / dh, j % dh);
        let (b, i) = (x / dm, x % dm);
        let (r, c) = (h / dm, h % dm);
        if c != i {
            return vec![f.zero(); dn];
        }
        n.action(b).col(r).iter().map(|v| v.mul(sign)).collect()
    };
    let cols: Vec<Vec<Scalar>> = free_indices(&fh.quotient).into_iter().map(ambient).collect();
    let mut report = Report::new();
    for rel in fh.relations() {
        let mut acc = vec![f.zero(); dn];
        for (j, c) in &rel {
            for (a, v) in acc.iter_mut().zip(ambient(*j)) {
                *a = a.add(&c.mul(&v));
            }
        }
        if acc.iter().any(|x| !x.is_zero()) {
            report.push("ev-well-defined", n.name(), "evaluation does not vanish on a ⊗_A relation");
            break;
        }
    }
    (Matrix::from_columns(f, dn, &cols), report)
}

pub(crate) fn adjunction_inner(g: &GabiStructure, m: &AModule, tests: &[AModule], sign: Scalar) -> Result<Report, ModError> {
    same_algebra(g, &[m])?;
    same_algebra(g, &tests.iter().collect::<Vec<_>>())?;
    let a = g.algebra();
    let f = a.field();
    let dm = m.dim();
    let am = odot(g, m)?;
    let mut report = Report::new();
    for n in tests {
        let tag = |s: &str| format!("{s}[{}, {}]", m.name(), n.name());
        let fnn = tensor_over_a(&am, n)?;
        let hom_mf = hom_module(g, m, &fnn.module)?;
        let coev_n = coev(&fnn, a.unit(), dm);
        report.extend(is_module_map(&coev_n, n, &hom_mf, &tag("coev-linear")));

        let hom_mn = hom_module(g, m, n)?;
        let fh = tensor_over_a(&am, &hom_mn)?;
        let (ev_n, wd) = ev(&fh, n, dm, &sign);
        report.extend(wd);
        report.extend(is_module_map(&ev_n, &fh.module, n, &tag("ev-linear")));

        // ev_{F N} ∘ F(coev_N) = id
        let fhf = tensor_over_a(&am, &hom_mf)?;
        let (ev_f, wd) = ev(&fhf, &fnn.module, dm, &sign);
        report.extend(wd);
        let t1 = ev_f.mul(&induced_map(&fnn, &fhf, &coev_n));
        if let Some(c) = t1.first_diff_col(&Matrix::identity(f, fnn.dim())) {
            report.push(tag("triangle-left"), format!("coordinate {c}"), "ev_F ∘ F(coev) ≠ id on (A⊙M) ⊗_A N");
        }
        // Hom(M, ev_N) ∘ coev_{Hom(M,N)} = id
        let coev_h = coev(&fh, a.unit(), dm);
        let t2 = ev_n.kron(&Matrix::identity(f, dm)).mul(&coev_h);
        if let Some(c) = t2.first_diff_col(&Matrix::identity(f, hom_mn.dim())) {
            report.push(tag("triangle-right"), format!("coordinate {c}"), "Hom(M, ev) ∘ coev ≠ id on Hom(M, N)");
        }
    }
    Ok(report)
}

/// Unit, counit and both triangle identities of `(A⊙M) ⊗_A − ⊣ Hom(M, −)`,
/// for each `N` in `tests`.
pub fn adjunction_check(g: &GabiStructure, m: &AModule, tests: &[AModule]) -> Result<Report, ModError> {
    let one = g.algebra().field().one();
    adjunction_inner(g, m, tests, one)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::FieldSpec;
    use crate::fixtures;
    use crate::modcat::{regular_module, trivial_module};

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn c2_adjunction() {
        let g = fixtures::group_gabi_structure(Q, 2);
        let a = g.algebra();
        let reg = regular_module(a);
        let k = trivial_module(a, g.eps()).unwrap();
        let tests = [k.clone(), reg.clone()];
        let r = adjunction_check(&g, &reg, &tests).unwrap();
        assert!(r.passed(), "{r}");
        let r = adjunction_check(&g, &k, &tests).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn h4_adjunction() {
        let g = fixtures::sweedler_h4_gabi();
        let a = g.algebra();
        let k = trivial_module(a, g.eps()).unwrap();
        let r = adjunction_check(&g, &regular_module(a), &[k.clone(), regular_module(a)]).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn sign_flipped_ev_breaks_triangles() {
        let g = fixtures::group_gabi_structure(Q, 2);
        let reg = regular_module(g.algebra());
        let r = adjunction_inner(&g, &reg, std::slice::from_ref(&reg), Q.from_i64(-1)).unwrap();
        assert!(r.findings.iter().any(|f| f.label.starts_with("triangle")), "{r}");
    }
}
