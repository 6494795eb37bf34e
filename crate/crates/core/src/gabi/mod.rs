//! Gabi structures `(δ, ε)` on a finite-dimensional algebra.
//!
//! `delta` is the `n² × n` matrix of `a ↦ a₊ ⊗ a₋`. A right structure is
//! checked by running the left axioms on `A^op` with the same matrix, which
//! turns `δ: A → A^op ⊗ A` into the left condition for `A^op`.

mod double;
mod hopf;
mod search;
mod tricocycloid;

pub use double::{check_double, DoubleReport};
pub use hopf::{derive_hopf, hopf_axioms, Derivation, Gate, HopfResult, HopfStrategy};
pub use search::{search_gabi, EpsChoice};
pub use tricocycloid::{check_tricocycloid, tricocycloid, TricocycloidData, TricocycloidReport};

use std::borrow::Cow;

use crate::algcore::{format_combination, is_algebra_map, opposite, tensor_algebra, AlgebraError, FinAlgebra};
use crate::exactalg::{LinAlgError, Matrix};
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GabiError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("{0} is only defined for left gabi structures")]
    LeftOnly(&'static str),
    #[error("input violates a checked property:\n{0}")]
    CorruptInput(Report),
    #[error("{0}")]
    Mismatch(String),
    #[error("FAULT: {strategy:?} produced data failing the Hopf axioms:\n{report}")]
    TheoremViolation { strategy: HopfStrategy, report: Report },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GabiSide {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GabiStructure {
    algebra: FinAlgebra,
    delta: Matrix,
    eps: Matrix,
    side: GabiSide,
}

impl GabiStructure {
    pub fn new(algebra: FinAlgebra, delta: Matrix, eps: Matrix, side: GabiSide) -> Result<Self, GabiError> {
        let n = algebra.dim();
        if delta.shape() != (n * n, n) {
            return Err(GabiError::Shape(format!("delta is {}x{}, expected {}x{n}", delta.rows(), delta.cols(), n * n)));
        }
        if eps.shape() != (1, n) {
            return Err(GabiError::Shape(format!("eps is {}x{}, expected 1x{n}", eps.rows(), eps.cols())));
        }
        for m in [&delta, &eps] {
            if m.field() != algebra.field() {
                return Err(AlgebraError::FieldMismatch(algebra.field(), m.field()).into());
            }
        }
        Ok(GabiStructure { algebra, delta, eps, side })
    }

    pub fn algebra(&self) -> &FinAlgebra {
        &self.algebra
    }

    pub fn delta(&self) -> &Matrix {
        &self.delta
    }

    pub fn eps(&self) -> &Matrix {
        &self.eps
    }

    pub fn side(&self) -> GabiSide {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `A` for a left structure, `A^op` for a right one.
    pub(crate) fn working_algebra(&self) -> Cow<'_, FinAlgebra> {
        match self.side {
            GabiSide::Left => Cow::Borrowed(&self.algebra),
            GabiSide::Right => Cow::Owned(opposite(&self.algebra)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Axiom {
    AugMultiplicative,
    AugUnital,
    DeltaMultiplicative,
    DeltaUnital,
    Ga1,
    Ga2,
    Ga3,
}

/// Everything about `B` needed to test candidate `(δ, ε)` pairs quickly.
pub(crate) struct AxiomContext<'a> {
    alg: &'a FinAlgebra,
    target: FinAlgebra,
    /// `n⁴ → n³`, `p⊗q⊗r⊗s ↦ p ⊗ r ⊗ s·q`.
    ga3: Matrix,
    id: Matrix,
}

impl<'a> AxiomContext<'a> {
    pub(crate) fn new(alg: &'a FinAlgebra) -> Self {
        let n = alg.dim();
        let f = alg.field();
        let target = tensor_algebra(alg, &opposite(alg)).expect("same field");
        let mut ga3 = Matrix::zeros(f, n * n * n, n * n * n * n);
        for p in 0..n {
            for q in 0..n {
                for r in 0..n {
                    for s in 0..n {
                        let col = ((p * n + q) * n + r) * n + s;
                        for (k, c) in alg.product(s, q).into_iter().enumerate() {
                            if !c.is_zero() {
                                ga3.set((p * n + r) * n + k, col, c);
                            }
                        }
                    }
                }
            }
        }
        AxiomContext { alg, target, ga3, id: Matrix::identity(f, n) }
    }

    fn ga3_sides(&self, delta: &Matrix) -> (Matrix, Matrix) {
        let lhs = self.ga3.mul(&delta.kron(delta)).mul(delta);
        let rhs = delta.kron(&self.alg.unit_column());
        (lhs, rhs)
    }

    /// Failed axioms with the failing column, in a fixed order.
    /// With `first_only` the scan stops at the first failure.
    pub(crate) fn failures(&self, delta: &Matrix, eps: &Matrix, first_only: bool) -> Vec<(Axiom, usize)> {
        let a = self.alg;
        let base = FinAlgebra::base(a.field());
        let mut out = Vec::new();
        macro_rules! record {
            ($axiom:expr, $cols:expr) => {
                for c in $cols {
                    out.push(($axiom, c));
                    if first_only {
                        return out;
                    }
                }
            };
        }
        let eu = eps.mul(&a.unit_column());
        record!(Axiom::AugUnital, eu.diff_cols(&base.unit_column()));
        let el = eps.mul(a.mul_matrix());
        record!(Axiom::AugMultiplicative, el.diff_cols(&eps.kron(eps)));
        // GA1 and GA2 are column-local and cheap, so they go before the quadratic checks.
        let ga1 = self.id.kron(eps).mul(delta);
        record!(Axiom::Ga1, ga1.diff_cols(&self.id));
        let ga2 = a.mul_matrix().mul(delta);
        record!(Axiom::Ga2, ga2.diff_cols(&a.unit_column().mul(eps)));
        let du = delta.mul(&a.unit_column());
        record!(Axiom::DeltaUnital, du.diff_cols(&self.target.unit_column()));
        let dl = delta.mul(a.mul_matrix());
        let dr = self.target.mul_matrix().mul(&delta.kron(delta));
        record!(Axiom::DeltaMultiplicative, dl.diff_cols(&dr));
        let (l3, r3) = self.ga3_sides(delta);
        record!(Axiom::Ga3, l3.diff_cols(&r3));
        out
    }
}

/// All gabi axioms, each failure with its witnessing basis element or pair.
///
/// Labels are `augmentation`, `delta-algebra-map`, `GA1`, `GA2`, `GA3`, with
/// primes on the axiom names for a right structure.
pub fn check_gabi(g: &GabiStructure) -> Report {
    let b = g.working_algebra();
    let ctx = AxiomContext::new(&b);
    let n = b.dim();
    let prime = if g.side == GabiSide::Right { "′" } else { "" };
    let names1 = b.basis_names();
    let names2 = b.tensor_names(2);
    let names3 = b.tensor_names(3);
    let (delta, eps) = (&g.delta, &g.eps);
    let pair = |c: usize| format!("({}, {})", b.name(c / n), b.name(c % n));
    let mut report = Report::new();

    for (axiom, c) in ctx.failures(delta, eps, false) {
        match axiom {
            Axiom::AugUnital => report.push("augmentation", "1", format!("ε(1) = {}", eps.mul(&b.unit_column()).get(0, 0))),
            Axiom::AugMultiplicative => {
                let (i, j) = (c / n, c % n);
                let prod = eps.apply(&b.product(i, j))[0].clone();
                report.push(
                    "augmentation",
                    pair(c),
                    format!("ε({0}{1}) = {2} but ε({0})ε({1}) = {3}", b.name(i), b.name(j), prod, eps.get(0, i).mul(eps.get(0, j))),
                )
            }
            Axiom::DeltaUnital => {
                report.push("delta-algebra-map", "1", format!("δ(1) = {} ≠ 1⊗1", format_combination(&names2, &delta.mul(&b.unit_column()).col(0))))
            }
            Axiom::DeltaMultiplicative => {
                // Delegate the message to the generic algebra-map checker.
                let r = is_algebra_map(delta, &b, &ctx.target).expect("shapes checked");
                if let Some(f) = r.findings.into_iter().find(|f| f.witness == pair(c)) {
                    report.push("delta-algebra-map", f.witness, f.detail.replace("f(", "δ("));
                }
            }
            Axiom::Ga1 => {
                let v = ctx.id.kron(eps).mul(delta).col(c);
                report.push(format!("GA1{prime}"), b.name(c), format!("a₊ε(a₋) = {} ≠ {}", format_combination(names1, &v), b.name(c)));
            }
            Axiom::Ga2 => {
                let v = b.mul_matrix().mul(delta).col(c);
                report.push(
                    format!("GA2{prime}"),
                    b.name(c),
                    format!("a₊a₋ = {} ≠ ε({})1 = {}", format_combination(names1, &v), b.name(c), format_combination(names1, &b.unit_column().mul(eps).col(c))),
                );
            }
            Axiom::Ga3 => {
                let (l, r) = ctx.ga3_sides(delta);
                report.push(
                    format!("GA3{prime}"),
                    b.name(c),
                    format!("a₊₊⊗a₋₊⊗a₋₋a₊₋ = {} but a₊⊗a₋⊗1 = {}", format_combination(&names3, &l.col(c)), format_combination(&names3, &r.col(c))),
                );
            }
        }
    }
    report
}

/// `σ = (ε⊗id)∘δ`, checked to be an anti-algebra map with `ε∘σ = ε`.
pub fn antipode(g: &GabiStructure) -> Result<Matrix, GabiError> {
    let b = g.working_algebra();
    let n = b.dim();
    let sigma = g.eps.kron(&Matrix::identity(b.field(), n)).mul(&g.delta);
    let mut report = is_algebra_map(&sigma, &b, &opposite(&b))?.prefixed("antipode");
    let es = g.eps.mul(&sigma);
    for j in es.diff_cols(&g.eps) {
        report.push("antipode/counital", b.name(j), format!("ε(σ({})) = {} ≠ ε({})", b.name(j), es.get(0, j), b.name(j)));
    }
    if !report.passed() {
        return Err(GabiError::CorruptInput(report));
    }
    Ok(sigma)
}

/// `β = (id⊗m)∘(δ⊗id)`, `a⊗b ↦ a₊ ⊗ a₋b`.
pub fn canonical_beta(g: &GabiStructure) -> Result<Matrix, GabiError> {
    if g.side != GabiSide::Left {
        return Err(GabiError::LeftOnly("the canonical map"));
    }
    let n = g.dim();
    let f = g.algebra.field();
    let id = Matrix::identity(f, n);
    Ok(id.kron(g.algebra.mul_matrix()).mul(&g.delta.kron(&id)))
}
