//! Finite-dimensional unital associative algebras given by structure constants.

use crate::exactalg::{twist, FieldSpec, LinAlgError, Matrix, Scalar};
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

/// `A` with basis `e_0, …, e_{n-1}`, multiplication `m: A⊗A → A` and unit `1_A`.
///
/// `mul` is stored as the `n × n²` matrix of `m`: column `i·n + j` holds the
/// coefficients of `e_i·e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinAlgebra {
    field: FieldSpec,
    basis_names: Vec<String>,
    mul: Matrix,
    unit: Vec<Scalar>,
}

impl FinAlgebra {
    /// `table[i][j][k]` is the coefficient of `e_k` in `e_i·e_j`.
    pub fn new(field: FieldSpec, basis_names: Vec<String>, table: Vec<Vec<Vec<Scalar>>>, unit: Vec<Scalar>) -> Result<Self, AlgebraError> {
        let n = basis_names.len();
        if table.len() != n {
            return Err(AlgebraError::Shape(format!("mul has {} rows, expected {n}", table.len())));
        }
        let mut mul = Matrix::zeros(field, n, n * n);
        for (i, row) in table.into_iter().enumerate() {
            if row.len() != n {
                return Err(AlgebraError::Shape(format!("mul[{i}] has {} entries, expected {n}", row.len())));
            }
            for (j, coeffs) in row.into_iter().enumerate() {
                if coeffs.len() != n {
                    return Err(AlgebraError::Shape(format!("mul[{i}][{j}] has {} coefficients, expected {n}", coeffs.len())));
                }
                for (k, c) in coeffs.into_iter().enumerate() {
                    if c.field() != field {
                        return Err(AlgebraError::FieldMismatch(field, c.field()));
                    }
                    mul.set(k, i * n + j, c);
                }
            }
        }
        Self::from_mul_matrix(field, basis_names, mul, unit)
    }

    pub fn from_mul_matrix(field: FieldSpec, basis_names: Vec<String>, mul: Matrix, unit: Vec<Scalar>) -> Result<Self, AlgebraError> {
        let n = basis_names.len();
        if n == 0 {
            return Err(AlgebraError::Shape("an algebra needs at least one basis element".into()));
        }
        if mul.shape() != (n, n * n) {
            return Err(AlgebraError::Shape(format!("multiplication is {}x{}, expected {n}x{}", mul.rows(), mul.cols(), n * n)));
        }
        if mul.field() != field {
            return Err(AlgebraError::FieldMismatch(field, mul.field()));
        }
        if unit.len() != n {
            return Err(AlgebraError::Shape(format!("unit has {} coefficients, expected {n}", unit.len())));
        }
        if let Some(bad) = unit.iter().find(|x| x.field() != field) {
            return Err(AlgebraError::FieldMismatch(field, bad.field()));
        }
        Ok(FinAlgebra { field, basis_names, mul, unit })
    }

    /// Builds the table from a closure returning integer coefficients of `e_i·e_j`.
    pub fn from_fn(field: FieldSpec, basis_names: Vec<String>, unit: &[i64], f: impl Fn(usize, usize) -> Vec<i64>) -> Result<Self, AlgebraError> {
        let n = basis_names.len();
        let table = (0..n)
            .map(|i| (0..n).map(|j| f(i, j).into_iter().map(|c| Scalar::from_i64(field, c)).collect()).collect())
            .collect();
        let unit = unit.iter().map(|&c| Scalar::from_i64(field, c)).collect();
        Self::new(field, basis_names, table, unit)
    }

    /// The base field as a one-dimensional algebra.
    pub fn base(field: FieldSpec) -> Self {
        FinAlgebra { field, basis_names: vec!["1".into()], mul: Matrix::identity(field, 1), unit: vec![Scalar::one(field)] }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.basis_names[i]
    }

    pub fn mul_matrix(&self) -> &Matrix {
        &self.mul
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    /// `η: k → A` as an `n × 1` matrix.
    pub fn unit_column(&self) -> Matrix {
        Matrix::column(self.field, self.unit.clone())
    }

    /// Coefficients of `e_i·e_j`.
    pub fn product(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.mul.col(i * self.dim() + j)
    }

    /// Bilinear extension of the table.
    pub fn multiply(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>, AlgebraError> {
        let n = self.dim();
        if u.len() != n || v.len() != n {
            return Err(AlgebraError::Shape(format!("vectors of length {} and {}, expected {n}", u.len(), v.len())));
        }
        let uv = Matrix::column(self.field, u.to_vec()).kron(&Matrix::column(self.field, v.to_vec()));
        Ok(self.mul.mul(&uv).col(0))
    }

    /// Matrix of `x ↦ e_i·x`.
    pub fn left_mul_basis(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field, n, n);
        for j in 0..n {
            for k in 0..n {
                m.set(k, j, self.mul.get(k, i * n + j).clone());
            }
        }
        m
    }

    /// Matrix of `x ↦ x·e_i`.
    pub fn right_mul_basis(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field, n, n);
        for j in 0..n {
            for k in 0..n {
                m.set(k, j, self.mul.get(k, j * n + i).clone());
            }
        }
        m
    }

    /// Matrix of `x ↦ v·x` for an arbitrary element `v`.
    pub fn left_mul(&self, v: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut acc = Matrix::zeros(self.field, n, n);
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&self.left_mul_basis(i).scale(c));
            }
        }
        acc
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.product(i, j) == self.product(j, i)))
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(self.field); self.dim()];
        v[i] = Scalar::one(self.field);
        v
    }

    /// Human-readable linear combination over this basis.
    pub fn format_vector(&self, v: &[Scalar]) -> String {
        format_combination(&self.basis_names, v)
    }

    /// Names of the basis of `A^{⊗legs}`, left-factor-major.
    pub fn tensor_names(&self, legs: usize) -> Vec<String> {
        let mut names = vec![String::new()];
        for leg in 0..legs {
            names = names
                .iter()
                .flat_map(|prefix| {
                    self.basis_names.iter().map(move |b| if leg == 0 { b.clone() } else { format!("{prefix}⊗{b}") })
                })
                .collect();
        }
        names
    }
}

/// `2*g - 1/2*x⊗1`-style rendering, `0` for the zero vector.
pub fn format_combination(names: &[String], v: &[Scalar]) -> String {
    let mut out = String::new();
    for (c, name) in v.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let s = c.to_string();
        let (neg, mag) = match s.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, s),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag != "1" {
            out.push_str(&mag);
            out.push('*');
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Every failed associativity triple and unit identity.
pub fn check_algebra(a: &FinAlgebra) -> Report {
    let n = a.dim();
    let f = a.field();
    let id = Matrix::identity(f, n);
    let m = a.mul_matrix();
    let mut report = Report::new();

    let left = m.mul(&m.kron(&id));
    let right = m.mul(&id.kron(m));
    for c in left.diff_cols(&right) {
        let (i, j, l) = (c / (n * n), (c / n) % n, c % n);
        report.push(
            "associativity",
            format!("({}, {}, {})", a.name(i), a.name(j), a.name(l)),
            format!(
                "({0}{1}){2} = {3} but {0}({1}{2}) = {4}",
                a.name(i),
                a.name(j),
                a.name(l),
                a.format_vector(&left.col(c)),
                a.format_vector(&right.col(c))
            ),
        );
    }

    let u = a.unit_column();
    let lu = m.mul(&u.kron(&id));
    let ru = m.mul(&id.kron(&u));
    for j in lu.diff_cols(&id) {
        report.push("unit", a.name(j), format!("1·{} = {}", a.name(j), a.format_vector(&lu.col(j))));
    }
    for j in ru.diff_cols(&id) {
        report.push("unit", a.name(j), format!("{}·1 = {}", a.name(j), a.format_vector(&ru.col(j))));
    }
    report
}

/// `A^op`: same space and unit, `e_i ·op e_j = e_j e_i`.
pub fn opposite(a: &FinAlgebra) -> FinAlgebra {
    let n = a.dim();
    let mul = a.mul_matrix().mul(&twist(a.field(), n, n));
    FinAlgebra { field: a.field(), basis_names: a.basis_names.clone(), mul, unit: a.unit.clone() }
}

/// `A⊗B` with componentwise product and unit `1⊗1`.
pub fn tensor_algebra(a: &FinAlgebra, b: &FinAlgebra) -> Result<FinAlgebra, AlgebraError> {
    if a.field() != b.field() {
        return Err(AlgebraError::FieldMismatch(a.field(), b.field()));
    }
    let field = a.field();
    let (na, nb) = (a.dim(), b.dim());
    let n = na * nb;
    let mut mul = Matrix::zeros(field, n, n * n);
    for i in 0..na {
        for k in 0..nb {
            for j in 0..na {
                for l in 0..nb {
                    let prod = Matrix::column(field, a.product(i, j)).kron(&Matrix::column(field, b.product(k, l)));
                    let col = (i * nb + k) * n + (j * nb + l);
                    for r in 0..n {
                        let x = prod.get(r, 0);
                        if !x.is_zero() {
                            mul.set(r, col, x.clone());
                        }
                    }
                }
            }
        }
    }
    let names = a.basis_names.iter().flat_map(|x| b.basis_names.iter().map(move |y| format!("{x}⊗{y}"))).collect();
    let unit = Matrix::column(field, a.unit.clone()).kron(&Matrix::column(field, b.unit.clone())).col(0);
    FinAlgebra::from_mul_matrix(field, names, mul, unit)
}

/// Checks `f(e_i e_j) = f(e_i) f(e_j)` on all basis pairs and `f(1) = 1`.
pub fn is_algebra_map(f: &Matrix, a: &FinAlgebra, b: &FinAlgebra) -> Result<Report, AlgebraError> {
    if f.shape() != (b.dim(), a.dim()) {
        return Err(AlgebraError::Shape(format!("map is {}x{}, expected {}x{}", f.rows(), f.cols(), b.dim(), a.dim())));
    }
    if f.field() != a.field() || a.field() != b.field() {
        return Err(AlgebraError::FieldMismatch(a.field(), f.field()));
    }
    let n = a.dim();
    let mut report = Report::new();
    let lhs = f.mul(a.mul_matrix());
    let rhs = b.mul_matrix().mul(&f.kron(f));
    for c in lhs.diff_cols(&rhs) {
        let (i, j) = (c / n, c % n);
        report.push(
            "multiplicative",
            format!("({}, {})", a.name(i), a.name(j)),
            format!("f({0}{1}) = {2} but f({0})f({1}) = {3}", a.name(i), a.name(j), b.format_vector(&lhs.col(c)), b.format_vector(&rhs.col(c))),
        );
    }
    let fu = f.mul(&a.unit_column());
    if fu != b.unit_column() {
        report.push("unital", "1", format!("f(1) = {} ≠ 1", b.format_vector(&fu.col(0))));
    }
    Ok(report)
}

/// `ε: A → k` is an algebra map to the base field.
pub fn is_augmentation(eps: &Matrix, a: &FinAlgebra) -> Result<Report, AlgebraError> {
    is_algebra_map(eps, a, &FinAlgebra::base(a.field()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Q.from_i64(x)).collect()
    }

    #[test]
    fn group_algebra_and_h4_pass() {
        assert!(check_algebra(&fixtures::cyclic_group_algebra(Q, 2)).passed());
        assert!(check_algebra(&fixtures::sweedler_h4()).passed());
    }

    #[test]
    fn injected_fault_names_triple() {
        // C3 table with g·g² altered to 2·1: (gg)g = 1 but g(gg) = 2.
        let names = vec!["1".into(), "g".into(), "g^2".into()];
        let a = FinAlgebra::from_fn(Q, names, &[1, 0, 0], |i, j| {
            let mut c = vec![0; 3];
            c[(i + j) % 3] = if (i, j) == (1, 2) { 2 } else { 1 };
            c
        })
        .unwrap();
        let r = check_algebra(&a);
        assert!(!r.passed());
        assert!(r.findings.iter().any(|f| f.label == "associativity" && f.witness == "(g, g, g)"), "{r}");
    }

    #[test]
    fn multiply_examples() {
        let c2 = fixtures::cyclic_group_algebra(Q, 2);
        assert_eq!(c2.multiply(&v(&[0, 1]), &v(&[0, 1])).unwrap(), v(&[1, 0]));
        assert_eq!(c2.multiply(&v(&[1, 0]), &v(&[3, -2])).unwrap(), v(&[3, -2]));
        let h4 = fixtures::sweedler_h4();
        let x = h4.basis_vector(2);
        let g = h4.basis_vector(1);
        let xg = h4.multiply(&x, &g).unwrap();
        let gx = h4.multiply(&g, &x).unwrap();
        assert_eq!(xg, gx.iter().map(Scalar::neg).collect::<Vec<_>>());
        assert!(c2.multiply(&v(&[1]), &v(&[1, 0])).is_err());
    }

    #[test]
    fn opposite_examples() {
        let c3 = fixtures::cyclic_group_algebra(Q, 3);
        assert_eq!(opposite(&c3), c3);
        let h4 = fixtures::sweedler_h4();
        let op = opposite(&h4);
        // In H4^op, x·g = g x (the original product in the other order).
        assert_eq!(op.product(2, 1), h4.product(1, 2));
        assert_eq!(opposite(&op), h4);
        assert!(check_algebra(&op).passed());
    }

    #[test]
    fn tensor_examples() {
        let c2 = fixtures::cyclic_group_algebra(Q, 2);
        let k = FinAlgebra::base(Q);
        let ka = tensor_algebra(&k, &c2).unwrap();
        assert_eq!(ka.mul_matrix(), c2.mul_matrix());
        let t = tensor_algebra(&c2, &opposite(&c2)).unwrap();
        // (g⊗g)·(g⊗g) = 1⊗1; index of g⊗g is 3.
        assert_eq!(t.product(3, 3), v(&[1, 0, 0, 0]));
        assert!(check_algebra(&t).passed());
        assert!(tensor_algebra(&c2, &FinAlgebra::base(FieldSpec::PrimeField(2))).is_err());
    }

    #[test]
    fn augmentation_examples() {
        let c2 = fixtures::cyclic_group_algebra(Q, 2);
        assert!(is_augmentation(&Matrix::from_i64(Q, &[&[1, 1]]), &c2).unwrap().passed());
        assert!(is_augmentation(&Matrix::from_i64(Q, &[&[1, -1]]), &c2).unwrap().passed());
        let bad = is_augmentation(&Matrix::from_i64(Q, &[&[1, 2]]), &c2).unwrap();
        assert!(bad.has_label("multiplicative"));
        let h4 = fixtures::sweedler_h4();
        assert!(is_augmentation(&Matrix::from_i64(Q, &[&[1, 1, 0, 0]]), &h4).unwrap().passed());
        let bad = is_augmentation(&Matrix::from_i64(Q, &[&[1, 1, 1, 0]]), &h4).unwrap();
        assert!(bad.findings.iter().any(|f| f.witness == "(x, x)"), "{bad}");
        assert!(is_augmentation(&Matrix::from_i64(Q, &[&[1, 1, 0]]), &h4).is_err());
    }

    #[test]
    fn identity_is_algebra_map() {
        let h4 = fixtures::sweedler_h4();
        assert!(is_algebra_map(&Matrix::identity(Q, 4), &h4, &h4).unwrap().passed());
    }

    #[test]
    fn tensor_names_are_left_major() {
        let c2 = fixtures::cyclic_group_algebra(Q, 2);
        assert_eq!(c2.tensor_names(2), vec!["1⊗1", "1⊗g", "g⊗1", "g⊗g"]);
        assert_eq!(format_combination(&c2.tensor_names(2), &v(&[0, 0, 2, -1])), "2*g⊗1 - g⊗g");
    }
}
