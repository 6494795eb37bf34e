use super::{canonical_beta, GabiError, GabiStructure};
use crate::algcore::format_combination;
use crate::exactalg::{invert, twist, FieldSpec, Matrix};
use crate::report::Report;

/// `v(a⊗b) = b₊ ⊗ b₋a`, with the unit and counit it is augmented by.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TricocycloidData {
    pub v: Matrix,
    /// `n × 1`.
    pub eta: Matrix,
    /// `1 × n`.
    pub eps: Matrix,
}

impl TricocycloidData {
    pub fn dim(&self) -> usize {
        self.eta.rows()
    }

    pub fn field(&self) -> FieldSpec {
        self.v.field()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TricocycloidReport {
    /// Braid equation and the one-sided augmentation equations.
    pub report: Report,
    /// `(A⊗ε)∘v⁻¹∘(A⊗η) = A`; `None` when `v` is singular.
    pub inverse_augmented: Option<bool>,
}

pub fn tricocycloid(g: &GabiStructure) -> Result<TricocycloidData, GabiError> {
    let n = g.dim();
    let f = g.algebra().field();
    let v = canonical_beta(g)?.mul(&twist(f, n, n));
    Ok(TricocycloidData { v, eta: g.algebra().unit_column(), eps: g.eps().clone() })
}

/// Checks
/// `(v⊗A)(A⊗c)(v⊗A) = (A⊗v)(v⊗A)(A⊗v)`,
/// `(A⊗ε)∘v = ε⊗A`, `v∘(A⊗η) = η⊗A` and `ε∘η = 1`.
pub fn check_tricocycloid(t: &TricocycloidData) -> Result<TricocycloidReport, GabiError> {
    let n = t.dim();
    let f = t.field();
    if t.v.shape() != (n * n, n * n) || t.eta.shape() != (n, 1) || t.eps.shape() != (1, n) {
        return Err(GabiError::Shape(format!(
            "v {}x{}, eta {}x{}, eps {}x{} do not fit together",
            t.v.rows(),
            t.v.cols(),
            t.eta.rows(),
            t.eta.cols(),
            t.eps.rows(),
            t.eps.cols()
        )));
    }
    let id = Matrix::identity(f, n);
    let v = &t.v;
    let v1 = v.kron(&id);
    let v2 = id.kron(v);
    let c2 = id.kron(&twist(f, n, n));
    let lhs = v1.mul(&c2).mul(&v1);
    let rhs = v2.mul(&v1).mul(&v2);
    let idx = |k: usize, legs: usize| -> String {
        let mut parts = vec![0; legs];
        let mut k = k;
        for p in parts.iter_mut().rev() {
            *p = k % n;
            k /= n;
        }
        parts.iter().map(|p| format!("e{p}")).collect::<Vec<_>>().join("⊗")
    };
    let names3: Vec<String> = (0..n * n * n).map(|k| idx(k, 3)).collect();
    let names2: Vec<String> = (0..n * n).map(|k| idx(k, 2)).collect();
    let names1: Vec<String> = (0..n).map(|k| idx(k, 1)).collect();

    let mut report = Report::new();
    for c in lhs.diff_cols(&rhs) {
        report.push(
            "braid",
            idx(c, 3),
            format!("(v⊗A)(A⊗c)(v⊗A) = {} but (A⊗v)(v⊗A)(A⊗v) = {}", format_combination(&names3, &lhs.col(c)), format_combination(&names3, &rhs.col(c))),
        );
    }
    let counit = id.kron(&t.eps).mul(v);
    let expect = t.eps.kron(&id);
    for c in counit.diff_cols(&expect) {
        report.push("counit", idx(c, 2), format!("(A⊗ε)v = {} but ε⊗A gives {}", format_combination(&names1, &counit.col(c)), format_combination(&names1, &expect.col(c))));
    }
    let unit = v.mul(&id.kron(&t.eta));
    let expect = t.eta.kron(&id);
    for c in unit.diff_cols(&expect) {
        report.push("unit", idx(c, 1), format!("v(a⊗1) = {} but 1⊗a = {}", format_combination(&names2, &unit.col(c)), format_combination(&names2, &expect.col(c))));
    }
    let ee = t.eps.mul(&t.eta);
    if !ee.get(0, 0).is_one() {
        report.push("eps-eta", "1", format!("ε(η(1)) = {}", ee.get(0, 0)));
    }
    let inverse_augmented = invert(v)?.map(|vi| id.kron(&t.eps).mul(&vi).mul(&id.kron(&t.eta)) == id);
    Ok(TricocycloidReport { report, inverse_augmented })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalg::scalars;
    use crate::fixtures;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn c2_tricocycloid() {
        let t = tricocycloid(&fixtures::group_gabi_structure(Q, 2)).unwrap();
        // v(1⊗g) = g⊗g
        assert_eq!(t.v.col(1), scalars(Q, &[0, 0, 0, 1]));
        for a in 0..2 {
            assert_eq!(t.v.col(a * 2), Matrix::unit_column(Q, 4, a).col(0));
        }
        let r = check_tricocycloid(&t).unwrap();
        assert!(r.report.passed(), "{}", r.report);
        assert_eq!(r.inverse_augmented, Some(true));
    }

    #[test]
    fn h4_tricocycloid() {
        let t = tricocycloid(&fixtures::sweedler_h4_gabi()).unwrap();
        let mut expect = vec![Q.zero(); 16];
        expect[8] = Q.one();
        expect[7] = Q.from_i64(-1);
        assert_eq!(t.v.col(2), expect);
        let r = check_tricocycloid(&t).unwrap();
        assert!(r.report.passed(), "{}", r.report);
        assert_eq!(r.inverse_augmented, Some(true));
    }

    #[test]
    fn identity_v() {
        // With v = id the braid equation reads c₂₃ = id on A⊗A⊗A, true only in dim 1.
        for (n, braid_holds) in [(1, true), (2, false)] {
            let a = fixtures::cyclic_group_algebra(Q, n);
            let t = TricocycloidData {
                v: Matrix::identity(Q, n * n),
                eta: a.unit_column(),
                eps: Matrix::from_vec(Q, 1, n, vec![Q.one(); n]).unwrap(),
            };
            let r = check_tricocycloid(&t).unwrap();
            assert_eq!(!r.report.has_label("braid"), braid_holds);
            assert_eq!(!r.report.has_label("unit"), n == 1);
        }
    }
}
