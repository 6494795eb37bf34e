//! Coalgebras, bialgebras, convolution and one-sided antipodes.
//!
//! A right (resp. left) antipode is a right (resp. left) convolution inverse
//! of the identity. Solving for one is a linear system in the `n²` entries of
//! `S`, since `m∘(id⊗S)∘Δ` is linear in `S`.

use crate::algcore::{check_algebra, format_combination, is_algebra_map, is_augmentation, tensor_algebra, AlgebraError, FinAlgebra};
use crate::exactalg::{solve, twist, FieldSpec, Matrix, Scalar};
use crate::gabi::{GabiSide, GabiStructure};
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoalgError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("a gabi structure needs a right or two-sided antipode, got {0:?}")]
    WrongSide(AntipodeSide),
    #[error("precondition failed:\n{0}")]
    Precondition(Report),
}

/// `(C, Δ, ε)` on an `n`-dimensional space; `Δ` is `n² × n`, `ε` is `1 × n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraData {
    comul: Matrix,
    counit: Matrix,
}

impl CoalgebraData {
    pub fn new(comul: Matrix, counit: Matrix) -> Result<Self, AlgebraError> {
        let n = counit.cols();
        if counit.rows() != 1 || comul.shape() != (n * n, n) {
            return Err(AlgebraError::Shape(format!(
                "comultiplication {}x{} and counit {}x{} do not describe a coalgebra",
                comul.rows(),
                comul.cols(),
                counit.rows(),
                counit.cols()
            )));
        }
        if comul.field() != counit.field() {
            return Err(AlgebraError::FieldMismatch(comul.field(), counit.field()));
        }
        Ok(CoalgebraData { comul, counit })
    }

    pub fn dim(&self) -> usize {
        self.counit.cols()
    }

    pub fn field(&self) -> FieldSpec {
        self.counit.field()
    }

    pub fn comul(&self) -> &Matrix {
        &self.comul
    }

    pub fn counit(&self) -> &Matrix {
        &self.counit
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BialgebraData {
    pub algebra: FinAlgebra,
    pub coalgebra: CoalgebraData,
}

impl BialgebraData {
    pub fn new(algebra: FinAlgebra, coalgebra: CoalgebraData) -> Result<Self, AlgebraError> {
        if algebra.dim() != coalgebra.dim() {
            return Err(AlgebraError::Shape(format!("algebra has dim {}, coalgebra dim {}", algebra.dim(), coalgebra.dim())));
        }
        if algebra.field() != coalgebra.field() {
            return Err(AlgebraError::FieldMismatch(algebra.field(), coalgebra.field()));
        }
        Ok(BialgebraData { algebra, coalgebra })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn comul(&self) -> &Matrix {
        self.coalgebra.comul()
    }

    pub fn counit(&self) -> &Matrix {
        self.coalgebra.counit()
    }

    /// `η∘ε`, the unit of the convolution monoid.
    pub fn convolution_unit(&self) -> Matrix {
        self.algebra.unit_column().mul(self.counit())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AntipodeSide {
    Left,
    Right,
    TwoSided,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntipodeCandidate {
    pub matrix: Matrix,
    pub side: AntipodeSide,
}

fn coalgebra_report(c: &CoalgebraData, names: &[String]) -> Report {
    let n = c.dim();
    let f = c.field();
    let id = Matrix::identity(f, n);
    let (d, e) = (c.comul(), c.counit());
    let mut report = Report::new();
    let name = |j: usize| names.get(j).cloned().unwrap_or_else(|| format!("e{j}"));
    let names3: Vec<String> = (0..n * n * n).map(|k| format!("{}⊗{}⊗{}", name(k / (n * n)), name((k / n) % n), name(k % n))).collect();

    let left = d.kron(&id).mul(d);
    let right = id.kron(d).mul(d);
    for j in left.diff_cols(&right) {
        report.push(
            "coassociativity",
            name(j),
            format!("(Δ⊗id)Δ = {} but (id⊗Δ)Δ = {}", format_combination(&names3, &left.col(j)), format_combination(&names3, &right.col(j))),
        );
    }
    let plain: Vec<String> = (0..n).map(name).collect();
    let lc = e.kron(&id).mul(d);
    for j in lc.diff_cols(&id) {
        report.push("counit", name(j), format!("(ε⊗id)Δ({}) = {}", name(j), format_combination(&plain, &lc.col(j))));
    }
    let rc = id.kron(e).mul(d);
    for j in rc.diff_cols(&id) {
        report.push("counit", name(j), format!("(id⊗ε)Δ({}) = {}", name(j), format_combination(&plain, &rc.col(j))));
    }
    report
}

/// Coassociativity and both counit identities.
pub fn check_coalgebra(c: &CoalgebraData) -> Report {
    coalgebra_report(c, &[])
}

/// Algebra and coalgebra axioms plus multiplicativity of `Δ` and `ε`.
pub fn check_bialgebra(b: &BialgebraData) -> Report {
    let mut report = check_algebra(&b.algebra).prefixed("algebra");
    report.extend(coalgebra_report(&b.coalgebra, b.algebra.basis_names()));
    let aa = tensor_algebra(&b.algebra, &b.algebra).expect("same field");
    report.extend(is_algebra_map(b.comul(), &b.algebra, &aa).expect("shapes checked at construction").prefixed("comultiplication"));
    report.extend(is_augmentation(b.counit(), &b.algebra).expect("shapes checked at construction").prefixed("counit"));
    report
}

/// `f * g = m∘(f⊗g)∘Δ`.
pub fn convolution(f: &Matrix, g: &Matrix, b: &BialgebraData) -> Result<Matrix, AlgebraError> {
    let n = b.dim();
    if f.shape() != (n, n) || g.shape() != (n, n) {
        return Err(AlgebraError::Shape(format!("convolution needs {n}x{n} maps")));
    }
    Ok(b.algebra.mul_matrix().mul(&f.kron(g)).mul(b.comul()))
}

/// Coefficient matrix of `S ↦ m∘(id⊗S)∘Δ` (`right = true`) or `S ↦ m∘(S⊗id)∘Δ`,
/// acting on `S` flattened row-major (`S[t,q]` at `t·n + q`).
fn convolution_system(b: &BialgebraData, right: bool) -> Matrix {
    let n = b.dim();
    let f = b.field();
    let m = b.algebra.mul_matrix();
    let d = b.comul();
    let mut sys = Matrix::zeros(f, n * n, n * n);
    for r in 0..n {
        for c in 0..n {
            let eq = r * n + c;
            for p in 0..n {
                for q in 0..n {
                    let dpq = d.get(p * n + q, c);
                    if dpq.is_zero() {
                        continue;
                    }
                    for t in 0..n {
                        // right: Σ Δ[(p,q),c]·m[r,(p,t)]·S[t,q]; left: Σ Δ[(p,q),c]·m[r,(t,q)]·S[t,p]
                        let (mcoef, unknown) = if right { (m.get(r, p * n + t), t * n + q) } else { (m.get(r, t * n + q), t * n + p) };
                        if mcoef.is_zero() {
                            continue;
                        }
                        let cur = sys.get(eq, unknown).clone();
                        sys.set(eq, unknown, cur.add(&dpq.mul(mcoef)));
                    }
                }
            }
        }
    }
    sys
}

/// Solves for a one-sided (or two-sided) convolution inverse of the identity.
///
/// The returned candidate reports `TwoSided` whenever the solution also
/// satisfies the other side's equation.
pub fn solve_antipode(b: &BialgebraData, side: AntipodeSide) -> Option<AntipodeCandidate> {
    let n = b.dim();
    let f = b.field();
    let target = b.convolution_unit();
    let rhs = Matrix::column(f, target.entries().to_vec());
    let (sys, rhs) = match side {
        AntipodeSide::Right => (convolution_system(b, true), rhs),
        AntipodeSide::Left => (convolution_system(b, false), rhs),
        AntipodeSide::TwoSided => (convolution_system(b, true).vstack(&convolution_system(b, false)), rhs.vstack(&rhs)),
    };
    let sol = solve(&sys, &rhs).expect("square system")?;
    let s = Matrix::from_vec(f, n, n, sol.col(0)).expect("n² entries");
    let id = Matrix::identity(f, n);
    let right_ok = convolution(&id, &s, b).ok()? == target;
    let left_ok = convolution(&s, &id, b).ok()? == target;
    let side = match (left_ok, right_ok) {
        (true, true) => AntipodeSide::TwoSided,
        (false, true) => AntipodeSide::Right,
        (true, false) => AntipodeSide::Left,
        (false, false) => unreachable!("solution of the convolution system"),
    };
    Some(AntipodeCandidate { matrix: s, side })
}

/// `S(uv) = S(v)S(u)`, `S(1) = 1`, `(S⊗S)∘Δ = τ∘Δ∘S`, `ε∘S = ε`.
pub fn check_anti_bialgebra_map(s: &Matrix, b: &BialgebraData) -> Result<Report, AlgebraError> {
    let n = b.dim();
    if s.shape() != (n, n) {
        return Err(AlgebraError::Shape(format!("antipode is {}x{}, expected {n}x{n}", s.rows(), s.cols())));
    }
    let f = b.field();
    let a = &b.algebra;
    let m = a.mul_matrix();
    let tw = twist(f, n, n);
    let mut report = Report::new();

    let lhs = s.mul(m);
    let rhs = m.mul(&tw).mul(&s.kron(s));
    for c in lhs.diff_cols(&rhs) {
        let (i, j) = (c / n, c % n);
        report.push(
            "anti-multiplicative",
            format!("({}, {})", a.name(i), a.name(j)),
            format!("S({0}{1}) = {2} but S({1})S({0}) = {3}", a.name(i), a.name(j), a.format_vector(&lhs.col(c)), a.format_vector(&rhs.col(c))),
        );
    }
    let su = s.mul(&a.unit_column());
    if su != a.unit_column() {
        report.push("unital", "1", format!("S(1) = {}", a.format_vector(&su.col(0))));
    }
    let names2 = a.tensor_names(2);
    let lhs = s.kron(s).mul(b.comul());
    let rhs = tw.mul(b.comul()).mul(s);
    for j in lhs.diff_cols(&rhs) {
        report.push(
            "anti-comultiplicative",
            a.name(j),
            format!("(S⊗S)Δ = {} but τΔS = {}", format_combination(&names2, &lhs.col(j)), format_combination(&names2, &rhs.col(j))),
        );
    }
    let es = b.counit().mul(s);
    for j in es.diff_cols(b.counit()) {
        report.push("counital", a.name(j), format!("ε(S({})) = {} ≠ ε({})", a.name(j), es.get(0, j), a.name(j)));
    }
    Ok(report)
}

/// `δ = (id⊗S)∘Δ` for a right (or two-sided) antipode that is an anti-bialgebra map.
pub fn gabi_from_one_sided_hopf(b: &BialgebraData, s: &AntipodeCandidate) -> Result<GabiStructure, CoalgError> {
    if s.side == AntipodeSide::Left {
        return Err(CoalgError::WrongSide(s.side));
    }
    let id = Matrix::identity(b.field(), b.dim());
    let mut pre = check_anti_bialgebra_map(&s.matrix, b)?;
    if convolution(&id, &s.matrix, b)? != b.convolution_unit() {
        pre.push("right-antipode", "id * S", "m∘(id⊗S)∘Δ ≠ η∘ε");
    }
    if !pre.passed() {
        return Err(CoalgError::Precondition(pre));
    }
    let delta = id.kron(&s.matrix).mul(b.comul());
    GabiStructure::new(b.algebra.clone(), delta, b.counit().clone(), GabiSide::Left).map_err(|e| match e {
        crate::gabi::GabiError::Algebra(a) => CoalgError::Algebra(a),
        other => CoalgError::Algebra(AlgebraError::Shape(other.to_string())),
    })
}

/// Coefficients helper for tests and fixtures.
pub fn scalars(field: FieldSpec, xs: &[i64]) -> Vec<Scalar> {
    xs.iter().map(|&x| Scalar::from_i64(field, x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn coalgebra_examples() {
        assert!(check_coalgebra(&fixtures::group_bialgebra(Q, 2).coalgebra).passed());
        assert!(check_coalgebra(&fixtures::sweedler_h4_bialgebra().coalgebra).passed());
        // Δ(x) = x⊗x with ε(x) = 0 on k[x]/(x²): (ε⊗id)Δ(x) = 0 ≠ x.
        let mut comul = Matrix::zeros(Q, 4, 2);
        comul.set(0, 0, Q.one());
        comul.set(3, 1, Q.one());
        let c = CoalgebraData::new(comul, Matrix::from_i64(Q, &[&[1, 0]])).unwrap();
        let r = check_coalgebra(&c);
        assert!(r.has_label("counit"), "{r}");
        assert!(!r.has_label("coassociativity"));
    }

    #[test]
    fn bialgebra_examples() {
        assert!(check_bialgebra(&fixtures::group_bialgebra(Q, 2)).passed());
        assert!(check_bialgebra(&fixtures::sweedler_h4_bialgebra()).passed());
        // Δ(g) = g⊗1 on Q[C2].
        let mut comul = Matrix::zeros(Q, 4, 2);
        comul.set(0, 0, Q.one());
        comul.set(2, 1, Q.one());
        let b = BialgebraData::new(fixtures::cyclic_group_algebra(Q, 2), CoalgebraData::new(comul, Matrix::from_i64(Q, &[&[1, 1]])).unwrap()).unwrap();
        assert!(!check_bialgebra(&b).passed());
    }

    #[test]
    fn convolution_examples() {
        let b = fixtures::group_bialgebra(Q, 2);
        let id = Matrix::identity(Q, 2);
        let f = Matrix::from_i64(Q, &[&[2, 3], &[5, 7]]);
        assert_eq!(convolution(&b.convolution_unit(), &f, &b).unwrap(), f);
        assert_eq!(convolution(&id, &id, &b).unwrap(), b.convolution_unit());
        // id * id sends g to g² = 1.
        assert_eq!(convolution(&id, &id, &b).unwrap().col(1), scalars(Q, &[1, 0]));
    }

    #[test]
    fn antipode_of_c2_is_two_sided() {
        let b = fixtures::group_bialgebra(Q, 2);
        let s = solve_antipode(&b, AntipodeSide::Right).unwrap();
        assert_eq!(s.matrix, Matrix::identity(Q, 2));
        assert_eq!(s.side, AntipodeSide::TwoSided);
    }

    #[test]
    fn antipode_of_h4() {
        let b = fixtures::sweedler_h4_bialgebra();
        let s = solve_antipode(&b, AntipodeSide::Right).unwrap();
        assert_eq!(s.matrix, fixtures::sweedler_h4_antipode());
        assert_eq!(s.side, AntipodeSide::TwoSided);
        let l = solve_antipode(&b, AntipodeSide::Left).unwrap();
        assert_eq!(l.matrix, s.matrix);
    }

    #[test]
    fn idempotent_monoid_has_no_antipode() {
        let b = fixtures::monoid_bialgebra(Q, &fixtures::idempotent_monoid());
        assert!(check_bialgebra(&b).passed());
        assert_eq!(solve_antipode(&b, AntipodeSide::Right), None);
        assert_eq!(solve_antipode(&b, AntipodeSide::Left), None);
    }

    #[test]
    fn anti_bialgebra_map_examples() {
        let b = fixtures::group_bialgebra(Q, 2);
        assert!(check_anti_bialgebra_map(&Matrix::identity(Q, 2), &b).unwrap().passed());
        let h = fixtures::sweedler_h4_bialgebra();
        assert!(check_anti_bialgebra_map(&fixtures::sweedler_h4_antipode(), &h).unwrap().passed());
        let r = check_anti_bialgebra_map(&Matrix::identity(Q, 4), &h).unwrap();
        assert!(r.findings.iter().any(|f| f.label == "anti-multiplicative" && f.witness == "(x, g)"), "{r}");
    }

    #[test]
    fn gabi_from_hopf_examples() {
        let b = fixtures::group_bialgebra(Q, 2);
        let s = solve_antipode(&b, AntipodeSide::Right).unwrap();
        let g = gabi_from_one_sided_hopf(&b, &s).unwrap();
        // δ(g) = g⊗g: column 1 has a single 1 at index 3.
        assert_eq!(g.delta().col(1), scalars(Q, &[0, 0, 0, 1]));

        let h = fixtures::sweedler_h4_bialgebra();
        let s = solve_antipode(&h, AntipodeSide::Right).unwrap();
        let g = gabi_from_one_sided_hopf(&h, &s).unwrap();
        // δ(x) = x⊗1 − g⊗gx: x⊗1 is 2·4+0 = 8, g⊗gx is 1·4+3 = 7.
        let mut expect = vec![Q.zero(); 16];
        expect[8] = Q.one();
        expect[7] = Q.from_i64(-1);
        assert_eq!(g.delta().col(2), expect);

        let f2 = FieldSpec::PrimeField(2);
        let d = fixtures::dual_numbers_bialgebra();
        let s = solve_antipode(&d, AntipodeSide::Right).unwrap();
        assert_eq!(s.matrix, Matrix::identity(f2, 2));
        let g = gabi_from_one_sided_hopf(&d, &s).unwrap();
        // δ(x) = x⊗1 + 1⊗x.
        assert_eq!(g.delta().col(1), scalars(f2, &[0, 1, 1, 0]));
    }

    #[test]
    fn gabi_from_hopf_refuses_bad_input() {
        let h = fixtures::sweedler_h4_bialgebra();
        let left = AntipodeCandidate { matrix: fixtures::sweedler_h4_antipode(), side: AntipodeSide::Left };
        assert!(matches!(gabi_from_one_sided_hopf(&h, &left), Err(CoalgError::WrongSide(_))));
        let bogus = AntipodeCandidate { matrix: Matrix::identity(Q, 4), side: AntipodeSide::Right };
        assert!(matches!(gabi_from_one_sided_hopf(&h, &bogus), Err(CoalgError::Precondition(_))));
    }
}
