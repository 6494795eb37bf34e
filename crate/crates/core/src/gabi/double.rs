use super::{antipode, check_gabi, derive_hopf, Derivation, GabiError, GabiSide, GabiStructure, HopfStrategy};
use crate::algcore::format_combination;
use crate::exactalg::Matrix;
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleReport {
    /// Findings for the two interchange identities, plus any FAULT.
    pub report: Report,
    /// `σ∘σ′ = id = σ′∘σ`, checked only when both identities hold.
    pub antipodes_inverse: Option<bool>,
    pub hopf: Option<Derivation>,
}

impl DoubleReport {
    pub fn passed(&self) -> bool {
        self.report.passed() && self.antipodes_inverse == Some(true) && matches!(self.hopf, Some(Derivation::Derived(_)))
    }
}

/// `a₊′a₋′₊ ⊗ a₋′₋ = 1⊗a` and `a₊a₋₊′ ⊗ a₋₋′ = 1⊗a` for `δ = g1`, `δ′ = g2`.
pub fn check_double(g1: &GabiStructure, g2: &GabiStructure) -> Result<DoubleReport, GabiError> {
    if g1.algebra() != g2.algebra() {
        return Err(GabiError::Mismatch("the two structures live on different algebras".into()));
    }
    if g1.eps() != g2.eps() {
        return Err(GabiError::Mismatch("the two structures have different augmentations".into()));
    }
    if g1.side() != GabiSide::Left || g2.side() != GabiSide::Left {
        return Err(GabiError::LeftOnly("the double condition"));
    }
    let mut report = check_gabi(g1).prefixed("first");
    report.extend(check_gabi(g2).prefixed("second"));
    if !report.passed() {
        return Ok(DoubleReport { report, antipodes_inverse: None, hopf: None });
    }

    let a = g1.algebra();
    let n = a.dim();
    let id = Matrix::identity(a.field(), n);
    let m_id = a.mul_matrix().kron(&id);
    let target = a.unit_column().kron(&id);
    let names2 = a.tensor_names(2);
    let identities = [
        ("double-1", m_id.mul(&id.kron(g1.delta())).mul(g2.delta()), "a₊′a₋′₊ ⊗ a₋′₋"),
        ("double-2", m_id.mul(&id.kron(g2.delta())).mul(g1.delta()), "a₊a₋₊′ ⊗ a₋₋′"),
    ];
    for (label, lhs, text) in &identities {
        for c in lhs.diff_cols(&target) {
            report.push(*label, a.name(c), format!("{text} = {} ≠ 1⊗{}", format_combination(&names2, &lhs.col(c)), a.name(c)));
        }
    }
    if !report.passed() {
        return Ok(DoubleReport { report, antipodes_inverse: None, hopf: None });
    }

    let (s1, s2) = (antipode(g1)?, antipode(g2)?);
    let inverse = s1.mul(&s2).is_identity() && s2.mul(&s1).is_identity();
    if !inverse {
        report.push("FAULT/antipode-inverse", "σ", "both identities hold but σ and σ′ are not mutually inverse");
    }
    let hopf = derive_hopf(g1, HopfStrategy::InvertibleAntipode)?;
    if let Derivation::NotApplicable(gate) = &hopf {
        report.push("FAULT/hopf", "σ", format!("double structure but the invertible-antipode derivation did not apply: {gate:?}"));
    }
    Ok(DoubleReport { report, antipodes_inverse: Some(inverse), hopf: Some(hopf) })
}
