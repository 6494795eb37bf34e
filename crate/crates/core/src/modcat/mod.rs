//! Finite-dimensional left modules and the closed structure lifted along a
//! gabi structure.
//!
//! `Hom(M, N)` is the space of `dim N × dim M` matrices flattened row-major:
//! `f[r][c]` sits at `r·dim M + c`.

mod adjunction;
mod boxtimes;
mod tensor;

pub use adjunction::adjunction_check;
pub use boxtimes::{boxtimes, boxtimes_constraints, normality_check, normality_check_with, BoxtimesConstraints, NormalityReport};
pub use tensor::{algebra_generators, check_induced_action, odot, tensor_over_a, TensorOverA};

use crate::algcore::{AlgebraError, FinAlgebra};
use crate::exactalg::{Matrix, Scalar};
use crate::gabi::{GabiError, GabiStructure};
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModError {
    #[error("module `{0}` is over a different algebra")]
    AlgebraMismatch(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Gabi(#[from] GabiError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AModule {
    algebra: FinAlgebra,
    name: String,
    action: Vec<Matrix>,
}

impl AModule {
    /// `action[i]` is the matrix of `e_i` acting on the module.
    pub fn new(algebra: FinAlgebra, name: impl Into<String>, action: Vec<Matrix>) -> Result<Self, ModError> {
        let name = name.into();
        if action.len() != algebra.dim() {
            return Err(ModError::Shape(format!("module `{name}` has {} action matrices for an algebra of dim {}", action.len(), algebra.dim())));
        }
        let d = action.first().map_or(0, Matrix::rows);
        for (i, m) in action.iter().enumerate() {
            if m.shape() != (d, d) {
                return Err(ModError::Shape(format!("action of `{}` on `{name}` is {}x{}, expected {d}x{d}", algebra.name(i), m.rows(), m.cols())));
            }
            if m.field() != algebra.field() {
                return Err(AlgebraError::FieldMismatch(algebra.field(), m.field()).into());
            }
        }
        Ok(AModule { algebra, name, action })
    }

    pub fn algebra(&self) -> &FinAlgebra {
        &self.algebra
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.action.first().map_or(0, Matrix::rows)
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    /// Matrix of an arbitrary element `Σ v_i e_i`.
    pub fn act(&self, v: &[Scalar]) -> Matrix {
        let f = self.algebra.field();
        let mut out = Matrix::zeros(f, self.dim(), self.dim());
        for (c, m) in v.iter().zip(&self.action) {
            if !c.is_zero() {
                out = out.add(&m.scale(c));
            }
        }
        out
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

pub fn regular_module(a: &FinAlgebra) -> AModule {
    AModule::new(a.clone(), "regular", (0..a.dim()).map(|i| a.left_mul_basis(i)).collect()).expect("shapes")
}

/// `k` with `a` acting as `ε(a)`.
pub fn trivial_module(a: &FinAlgebra, eps: &Matrix) -> Result<AModule, ModError> {
    if eps.shape() != (1, a.dim()) {
        return Err(ModError::Shape(format!("eps must be 1x{}", a.dim())));
    }
    let action = (0..a.dim()).map(|i| Matrix::from_vec(a.field(), 1, 1, vec![eps.get(0, i).clone()]).expect("1x1")).collect();
    AModule::new(a.clone(), "trivial", action)
}

pub fn zero_module(a: &FinAlgebra) -> AModule {
    AModule::new(a.clone(), "zero", vec![Matrix::zeros(a.field(), 0, 0); a.dim()]).expect("shapes")
}

/// `trivial` and `regular` followed by `extra`.
pub fn default_test_modules(g: &GabiStructure, extra: &[AModule]) -> Result<Vec<AModule>, ModError> {
    let mut out = vec![trivial_module(g.algebra(), g.eps())?, regular_module(g.algebra())];
    out.extend(extra.iter().cloned());
    Ok(out)
}

/// `ρ(1) = id` and `ρ(e_i)ρ(e_j) = ρ(e_i e_j)`.
pub fn check_module(m: &AModule) -> Report {
    let a = &m.algebra;
    let mut report = Report::new();
    let one = m.act(a.unit());
    if !one.is_identity() {
        report.push("unit", "1", format!("1 acts on `{}` as {one:?}", m.name));
    }
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = m.action[i].mul(&m.action[j]);
            let rhs = m.act(&a.product(i, j));
            if let Some(c) = lhs.first_diff_col(&rhs) {
                report.push(
                    "multiplicative",
                    format!("({}, {})", a.name(i), a.name(j)),
                    format!("ρ({0})ρ({1}) ≠ ρ({0}{1}) on basis vector {c} of `{2}`", a.name(i), a.name(j), m.name),
                );
            }
        }
    }
    report
}

/// `f∘ρ_M(e_i) = ρ_N(e_i)∘f` for every basis element, labelled `label`.
pub fn is_module_map(f: &Matrix, source: &AModule, target: &AModule, label: &str) -> Report {
    let a = &source.algebra;
    let mut report = Report::new();
    if f.shape() != (target.dim(), source.dim()) {
        report.push(label, "shape", format!("map is {}x{}, expected {}x{}", f.rows(), f.cols(), target.dim(), source.dim()));
        return report;
    }
    for i in 0..a.dim() {
        let lhs = f.mul(&source.action[i]);
        let rhs = target.action[i].mul(f);
        if let Some(c) = lhs.first_diff_col(&rhs) {
            report.push(label, a.name(i), format!("f({0}·v) ≠ {0}·f(v) for basis vector {c} of `{1}`", a.name(i), source.name));
        }
    }
    report
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ABimodule {
    algebra: FinAlgebra,
    name: String,
    left: Vec<Matrix>,
    /// `right[i]` is the matrix of `v ↦ v·e_i`.
    right: Vec<Matrix>,
}

impl ABimodule {
    pub fn new(algebra: FinAlgebra, name: impl Into<String>, left: Vec<Matrix>, right: Vec<Matrix>) -> Result<Self, ModError> {
        let name = name.into();
        let l = AModule::new(algebra.clone(), name.clone(), left)?;
        let r = AModule::new(algebra, name.clone(), right)?;
        if l.dim() != r.dim() {
            return Err(ModError::Shape(format!("left and right actions on `{name}` have different sizes")));
        }
        Ok(ABimodule { algebra: l.algebra, name, left: l.action, right: r.action })
    }

    pub fn algebra(&self) -> &FinAlgebra {
        &self.algebra
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.left.first().map_or(0, Matrix::rows)
    }

    pub fn left(&self, i: usize) -> &Matrix {
        &self.left[i]
    }

    pub fn right(&self, i: usize) -> &Matrix {
        &self.right[i]
    }

    /// The underlying left module.
    pub fn left_module(&self) -> AModule {
        AModule { algebra: self.algebra.clone(), name: self.name.clone(), action: self.left.clone() }
    }
}

/// `A` acting on itself from both sides.
pub fn regular_bimodule(a: &FinAlgebra) -> ABimodule {
    let left = (0..a.dim()).map(|i| a.left_mul_basis(i)).collect();
    let right = (0..a.dim()).map(|i| a.right_mul_basis(i)).collect();
    ABimodule::new(a.clone(), "A", left, right).expect("shapes")
}

/// Left and right module axioms and `a·(v·b) = (a·v)·b`.
pub fn check_bimodule(p: &ABimodule) -> Report {
    let a = &p.algebra;
    let mut report = check_module(&p.left_module()).prefixed("left");
    let mut right = Report::new();
    let act_r = |v: &[Scalar]| {
        let mut out = Matrix::zeros(a.field(), p.dim(), p.dim());
        for (c, m) in v.iter().zip(&p.right) {
            if !c.is_zero() {
                out = out.add(&m.scale(c));
            }
        }
        out
    };
    if !act_r(a.unit()).is_identity() {
        right.push("unit", "1", format!("1 acts on the right of `{}` nontrivially", p.name));
    }
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            // (v·e_i)·e_j = v·(e_i e_j)
            if p.right[j].mul(&p.right[i]) != act_r(&a.product(i, j)) {
                right.push("multiplicative", format!("({}, {})", a.name(i), a.name(j)), format!("(v·{0})·{1} ≠ v·({0}{1})", a.name(i), a.name(j)));
            }
            if p.left[i].mul(&p.right[j]) != p.right[j].mul(&p.left[i]) {
                report.push("commute", format!("({}, {})", a.name(i), a.name(j)), format!("{0}·(v·{1}) ≠ ({0}·v)·{1}", a.name(i), a.name(j)));
            }
        }
    }
    report.extend(right.prefixed("right"));
    report
}

fn same_algebra(g: &GabiStructure, ms: &[&AModule]) -> Result<(), ModError> {
    for m in ms {
        if m.algebra() != g.algebra() {
            return Err(ModError::AlgebraMismatch(m.name().to_string()));
        }
    }
    Ok(())
}

/// `(a·f)(m) = a₊ f(a₋ m)` on `Hom(M, N)`.
pub fn hom_module(g: &GabiStructure, m: &AModule, n: &AModule) -> Result<AModule, ModError> {
    same_algebra(g, &[m, n])?;
    let a = g.algebra();
    let k = a.dim();
    let f = a.field();
    let d = m.dim() * n.dim();
    let transposed: Vec<Matrix> = m.action.iter().map(Matrix::transpose).collect();
    let mut action = Vec::with_capacity(k);
    for c in 0..k {
        let mut acc = Matrix::zeros(f, d, d);
        for p in 0..k {
            for q in 0..k {
                let coef = g.delta().get(p * k + q, c);
                if coef.is_zero() {
                    continue;
                }
                acc = acc.add(&n.action[p].kron(&transposed[q]).scale(coef));
            }
        }
        action.push(acc);
    }
    AModule::new(a.clone(), format!("Hom({}, {})", m.name, n.name), action)
}

/// `Γ(f) = f∘−` as a map `Hom(N, P) → Hom(Hom(M, N), Hom(M, P))`.
fn gamma(m: &AModule, n: &AModule, p: &AModule) -> Matrix {
    let f = m.algebra.field();
    let (dm, dn, dp) = (m.dim(), n.dim(), p.dim());
    let inner_cols = dn * dm;
    let mut out = Matrix::zeros(f, dp * dm * inner_cols, dp * dn);
    for r in 0..dp {
        for c in 0..dn {
            for i in 0..dm {
                let row = (r * dm + i) * inner_cols + (c * dm + i);
                out.set(row, r * dn + c, f.one());
            }
        }
    }
    out
}

/// `i_M: Hom(k, M) → M`, `j_M: k → Hom(M, M)` and `Γ^M_{N,P}` are A-linear
/// for every module (and triple) drawn from `k` plus `modules`.
pub fn closed_maps_check(g: &GabiStructure, modules: &[AModule]) -> Result<Report, ModError> {
    let k = trivial_module(g.algebra(), g.eps())?.renamed("k");
    let mut all = vec![k.clone()];
    all.extend(modules.iter().cloned());
    same_algebra(g, &all.iter().collect::<Vec<_>>())?;
    let f = g.algebra().field();
    let mut report = Report::new();
    for m in &all {
        let hom_km = hom_module(g, &k, m)?;
        report.extend(is_module_map(&Matrix::identity(f, m.dim()), &hom_km, m, &format!("i[{}]", m.name)));
        let hom_mm = hom_module(g, m, m)?;
        let j = Matrix::column(f, Matrix::identity(f, m.dim()).entries().to_vec());
        report.extend(is_module_map(&j, &k, &hom_mm, &format!("j[{}]", m.name)));
    }
    for m in &all {
        for n in &all {
            let hom_mn = hom_module(g, m, n)?;
            for p in &all {
                let source = hom_module(g, n, p)?;
                let target = hom_module(g, &hom_mn, &hom_module(g, m, p)?)?;
                report.extend(is_module_map(&gamma(m, n, p), &source, &target, &format!("Gamma[{}; {}, {}]", m.name, n.name, p.name)));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::FieldSpec;
    use crate::fixtures;
    use crate::gabi::GabiSide;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn c2() -> GabiStructure {
        fixtures::group_gabi_structure(Q, 2)
    }

    #[test]
    fn module_examples() {
        let a = fixtures::cyclic_group_algebra(Q, 2);
        assert!(check_module(&regular_module(&a)).passed());
        assert!(check_module(&trivial_module(&a, c2().eps()).unwrap()).passed());
        let bad = AModule::new(a.clone(), "bad", vec![Matrix::identity(Q, 2), Matrix::from_i64(Q, &[&[0, 1], &[1, 1]])]).unwrap();
        let r = check_module(&bad);
        assert!(r.findings.iter().any(|f| f.label == "multiplicative" && f.witness == "(g, g)"), "{r}");
        assert!(check_bimodule(&regular_bimodule(&a)).passed());
        assert!(check_bimodule(&regular_bimodule(&fixtures::sweedler_h4())).passed());
    }

    #[test]
    fn hom_examples() {
        let g = c2();
        let a = g.algebra();
        let reg = regular_module(a);
        let triv = trivial_module(a, g.eps()).unwrap();
        let h = hom_module(&g, &reg, &triv).unwrap();
        assert_eq!(h.action(1), &Matrix::from_i64(Q, &[&[0, 1], &[1, 0]]));
        let h = hom_module(&g, &triv, &triv).unwrap();
        assert!(h.action(1).is_identity());
        let h = hom_module(&g, &triv, &reg).unwrap();
        assert_eq!(h.action(1), reg.action(1));
        for m in [&reg, &triv] {
            for n in [&reg, &triv] {
                assert!(check_module(&hom_module(&g, m, n).unwrap()).passed());
            }
        }
        let h4 = fixtures::sweedler_h4_gabi();
        let r = regular_module(h4.algebra());
        assert!(check_module(&hom_module(&h4, &r, &r).unwrap()).passed());
    }

    #[test]
    fn closed_maps_examples() {
        let g = c2();
        let reg = regular_module(g.algebra());
        let r = closed_maps_check(&g, std::slice::from_ref(&reg)).unwrap();
        assert!(r.passed(), "{r}");

        let mut delta = Matrix::zeros(Q, 4, 2);
        delta.set(0, 0, Q.one());
        delta.set(2, 1, Q.one());
        let bad = GabiStructure::new(g.algebra().clone(), delta, g.eps().clone(), GabiSide::Left).unwrap();
        let r = closed_maps_check(&bad, &[reg]).unwrap();
        assert!(r.findings.iter().any(|f| f.label == "j[regular]" && f.witness == "g"), "{r}");

        let k = fixtures::group_gabi_structure(Q, 1);
        assert!(closed_maps_check(&k, &[regular_module(k.algebra())]).unwrap().passed());
    }

    #[test]
    fn algebra_mismatch() {
        let g = c2();
        let other = regular_module(&fixtures::cyclic_group_algebra(Q, 3));
        assert!(matches!(hom_module(&g, &other, &other), Err(ModError::AlgebraMismatch(_))));
    }
}
