use super::{antipode, canonical_beta, check_gabi, GabiError, GabiSide, GabiStructure};
use crate::coalg::{check_bialgebra, convolution, BialgebraData, CoalgebraData};
use crate::exactalg::{invert, Matrix};
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HopfStrategy {
    /// `Δ(a) = β⁻¹(a⊗1)`, needs `β` invertible and `Δ` left counital.
    BetaInverse,
    /// `Δ(a) = a₊ ⊗ σ(a₋)` on a commutative algebra.
    Commutative,
    /// `Δ(a) = a₊ ⊗ σ⁻¹(a₋)`.
    InvertibleAntipode,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfResult {
    pub bialgebra: BialgebraData,
    pub antipode: Matrix,
    pub provenance: HopfStrategy,
}

/// Why a strategy did not apply.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Gate {
    NotGabi(Report),
    SingularBeta,
    CounitFailure(Report),
    NonCommutative,
    SingularAntipode,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Derivation {
    Derived(HopfResult),
    NotApplicable(Gate),
}

impl Derivation {
    pub fn result(&self) -> Option<&HopfResult> {
        match self {
            Derivation::Derived(h) => Some(h),
            Derivation::NotApplicable(_) => None,
        }
    }
}

/// Bialgebra axioms plus `S` as a two-sided convolution inverse of the identity.
pub fn hopf_axioms(b: &BialgebraData, s: &Matrix) -> Report {
    let mut report = check_bialgebra(b);
    let n = b.dim();
    let id = Matrix::identity(b.field(), n);
    let target = b.convolution_unit();
    let a = &b.algebra;
    for (label, conv) in [("antipode-right", convolution(&id, s, b)), ("antipode-left", convolution(s, &id, b))] {
        match conv {
            Ok(c) => {
                for j in c.diff_cols(&target) {
                    report.push(label, a.name(j), format!("convolution gives {} ≠ ε({})1", a.format_vector(&c.col(j)), a.name(j)));
                }
            }
            Err(e) => report.push(label, "S", e.to_string()),
        }
    }
    report
}

/// Derives a Hopf structure from a left gabi structure, re-verifying every axiom.
pub fn derive_hopf(g: &GabiStructure, strategy: HopfStrategy) -> Result<Derivation, GabiError> {
    if g.side() != GabiSide::Left {
        return Err(GabiError::LeftOnly("Hopf derivation"));
    }
    let pre = check_gabi(g);
    if !pre.passed() {
        return Ok(Derivation::NotApplicable(Gate::NotGabi(pre)));
    }
    let a = g.algebra();
    let f = a.field();
    let n = a.dim();
    let id = Matrix::identity(f, n);
    let sigma = antipode(g)?;
    let comul = match strategy {
        HopfStrategy::BetaInverse => {
            let Some(beta_inv) = invert(&canonical_beta(g)?)? else {
                return Ok(Derivation::NotApplicable(Gate::SingularBeta));
            };
            let comul = beta_inv.mul(&id.kron(&a.unit_column()));
            let lc = g.eps().kron(&id).mul(&comul);
            let mut counit = Report::new();
            for j in lc.diff_cols(&id) {
                counit.push("left-counit", a.name(j), format!("(ε⊗id)Δ({}) = {}", a.name(j), a.format_vector(&lc.col(j))));
            }
            if !counit.passed() {
                return Ok(Derivation::NotApplicable(Gate::CounitFailure(counit)));
            }
            comul
        }
        HopfStrategy::Commutative => {
            if !a.is_commutative() {
                return Ok(Derivation::NotApplicable(Gate::NonCommutative));
            }
            id.kron(&sigma).mul(g.delta())
        }
        HopfStrategy::InvertibleAntipode => {
            let Some(inv) = invert(&sigma)? else {
                return Ok(Derivation::NotApplicable(Gate::SingularAntipode));
            };
            id.kron(&inv).mul(g.delta())
        }
    };
    let bialgebra = BialgebraData::new(a.clone(), CoalgebraData::new(comul, g.eps().clone())?)?;
    let report = hopf_axioms(&bialgebra, &sigma);
    if !report.passed() {
        return Err(GabiError::TheoremViolation { strategy, report });
    }
    Ok(Derivation::Derived(HopfResult { bialgebra, antipode: sigma, provenance: strategy }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::FieldSpec;
    use crate::fixtures;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn c2_strategies_agree() {
        let g = fixtures::group_gabi_structure(Q, 2);
        let expect = fixtures::group_bialgebra(Q, 2);
        for s in [HopfStrategy::BetaInverse, HopfStrategy::Commutative, HopfStrategy::InvertibleAntipode] {
            let d = derive_hopf(&g, s).unwrap();
            let h = d.result().expect("derived");
            assert_eq!(h.bialgebra, expect);
            assert_eq!(h.antipode, Matrix::identity(Q, 2));
            assert_eq!(h.provenance, s);
        }
    }

    #[test]
    fn h4_recovers_standard_structure() {
        let g = fixtures::sweedler_h4_gabi();
        for s in [HopfStrategy::BetaInverse, HopfStrategy::InvertibleAntipode] {
            let h = derive_hopf(&g, s).unwrap().result().cloned().expect("derived");
            assert_eq!(h.bialgebra, fixtures::sweedler_h4_bialgebra());
            assert_eq!(h.antipode, fixtures::sweedler_h4_antipode());
        }
        assert_eq!(derive_hopf(&g, HopfStrategy::Commutative).unwrap(), Derivation::NotApplicable(Gate::NonCommutative));
    }

    #[test]
    fn non_gabi_gate() {
        let a = fixtures::cyclic_group_algebra(Q, 2);
        let g = GabiStructure::new(a, Matrix::zeros(Q, 4, 2), Matrix::from_i64(Q, &[&[1, 1]]), GabiSide::Left).unwrap();
        assert!(matches!(derive_hopf(&g, HopfStrategy::BetaInverse).unwrap(), Derivation::NotApplicable(Gate::NotGabi(_))));
    }
}
