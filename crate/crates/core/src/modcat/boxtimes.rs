use std::collections::HashMap;
use std::fmt;

use super::tensor::{free_indices, reduce_sparse, Sparse};
use super::{is_module_map, odot, same_algebra, tensor_over_a, trivial_module, AModule, ModError, TensorOverA};
use crate::exactalg::{invert, Matrix, Scalar};
use crate::gabi::{canonical_beta, derive_hopf, Derivation, GabiStructure, HopfStrategy};
use crate::exec::{ordered_map, Execution};
use crate::report::Report;

/// `M ⊠ N = (A⊙N) ⊗_A M`.
pub fn boxtimes(g: &GabiStructure, m: &AModule, n: &AModule) -> Result<TensorOverA, ModError> {
    same_algebra(g, &[m, n])?;
    let mut t = tensor_over_a(&odot(g, n)?, m)?;
    t.module = t.module.renamed(format!("({} ⊠ {})", m.name(), n.name()));
    Ok(t)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxtimesConstraints {
    /// `λ_N: k ⊠ N → N`.
    pub lambda: Matrix,
    /// `ρ_M: M → M ⊠ k`.
    pub rho: Matrix,
    /// `α_{L,M,N}: (L ⊠ M) ⊠ N → L ⊠ (M ⊠ N)`.
    pub alpha: Matrix,
    /// Well-definedness, A-linearity and invertibility of `ρ`.
    pub report: Report,
}

fn is_invertible(m: &Matrix) -> bool {
    m.is_square() && invert(m).ok().flatten().is_some()
}

fn add_into(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = a.add(&c.mul(x));
        }
    }
}

fn lambda(g: &GabiStructure, kn: &TensorOverA, n: &AModule) -> (Matrix, Report) {
    let f = g.algebra().field();
    let dn = n.dim();
    let ambient = |j: usize| n.action(j / dn).col(j % dn);
    let cols: Vec<Vec<Scalar>> = free_indices(&kn.quotient).into_iter().map(ambient).collect();
    let mut report = Report::new();
    for rel in kn.relations() {
        let mut acc = vec![f.zero(); dn];
        for (j, c) in &rel {
            add_into(&mut acc, c, &ambient(*j));
        }
        if acc.iter().any(|x| !x.is_zero()) {
            report.push("lambda-well-defined", n.name(), "(a⊙n) ⊗ 1 ↦ a·n does not vanish on a relation");
            break;
        }
    }
    (Matrix::from_columns(f, dn, &cols), report)
}

fn rho(g: &GabiStructure, mk: &TensorOverA) -> Matrix {
    let a = g.algebra();
    let dm = mk.right_dim;
    let cols: Vec<Vec<Scalar>> = (0..dm)
        .map(|m| {
            let v: Sparse = a.unit().iter().enumerate().filter(|(_, u)| !u.is_zero()).map(|(b, u)| (b * dm + m, u.clone())).collect();
            reduce_sparse(&mk.quotient, &v)
        })
        .collect();
    Matrix::from_columns(a.field(), mk.dim(), &cols)
}

/// The associator on the ambient `(A⊙N) ⊗ (A⊙M) ⊗ L`:
/// `(a⊙n) ⊗ (b⊙m) ⊗ l ↦ (a b₊ ⊙ ((1⊙b₋n) ⊗ m)) ⊗ l`.
struct Associator<'a> {
    g: &'a GabiStructure,
    mn: &'a TensorOverA,
    target: &'a TensorOverA,
    dims: (usize, usize, usize),
    inner: HashMap<(usize, usize, usize), Vec<Scalar>>,
}

impl<'a> Associator<'a> {
    fn new(g: &'a GabiStructure, n: &'a AModule, mn: &'a TensorOverA, target: &'a TensorOverA, l: &AModule, m: &AModule) -> Self {
        let (dn, dm, dl) = (n.dim(), m.dim(), l.dim());
        let mut inner = HashMap::new();
        let unit = g.algebra().unit();
        for q in 0..g.dim() {
            let rq = n.action(q);
            for nn in 0..dn {
                for mm in 0..dm {
                    let mut v: Sparse = Vec::new();
                    for (d, u) in unit.iter().enumerate().filter(|(_, u)| !u.is_zero()) {
                        for r in 0..dn {
                            let x = rq.get(r, nn);
                            if !x.is_zero() {
                                v.push(((d * dn + r) * dm + mm, u.mul(x)));
                            }
                        }
                    }
                    inner.insert((q, nn, mm), reduce_sparse(&mn.quotient, &v));
                }
            }
        }
        Associator { g, mn, target, dims: (dn, dm, dl), inner }
    }

    /// Image of `(e_a⊙e_n) ⊗ (e_b⊙e_m) ⊗ e_l`, in target coordinates.
    fn eval(&self, a: usize, n: usize, b: usize, m: usize, l: usize) -> Vec<Scalar> {
        let alg = self.g.algebra();
        let k = alg.dim();
        let dy = self.mn.dim();
        let dl = self.dims.2;
        let mut v: Sparse = Vec::new();
        for p in 0..k {
            for q in 0..k {
                let coef = self.g.delta().get(p * k + q, b);
                if coef.is_zero() {
                    continue;
                }
                let y = &self.inner[&(q, n, m)];
                for (c, x) in alg.product(a, p).into_iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let cx = coef.mul(&x);
                    for (yi, yv) in y.iter().enumerate() {
                        if !yv.is_zero() {
                            v.push(((c * dy + yi) * dl + l, cx.mul(yv)));
                        }
                    }
                }
            }
        }
        reduce_sparse(&self.target.quotient, &v)
    }

    /// `j` indexes the ambient `(A⊙N) ⊗ (A⊙M) ⊗ L`.
    fn eval_flat(&self, x: usize, j: usize) -> Vec<Scalar> {
        let (dn, dm, dl) = self.dims;
        let (a, n) = (x / dn, x % dn);
        let (bm, l) = (j / dl, j % dl);
        self.eval(a, n, bm / dm, bm % dm, l)
    }
}

/// `λ_N`, `ρ_M` and `α_{L,M,N}` as matrices between quotient coordinates,
/// each checked well defined on the `⊗_A` relations and A-linear.
pub fn boxtimes_constraints(g: &GabiStructure, l: &AModule, m: &AModule, n: &AModule) -> Result<BoxtimesConstraints, ModError> {
    same_algebra(g, &[l, m, n])?;
    let a = g.algebra();
    let f = a.field();
    let k = trivial_module(a, g.eps())?.renamed("k");
    let mut report = Report::new();

    let kn = boxtimes(g, &k, n)?;
    let (lambda, wd) = lambda(g, &kn, n);
    report.extend(wd);
    report.extend(is_module_map(&lambda, &kn.module, n, &format!("lambda-linear[{}]", n.name())));

    let mk = boxtimes(g, m, &k)?;
    let rho = rho(g, &mk);
    report.extend(is_module_map(&rho, m, &mk.module, &format!("rho-linear[{}]", m.name())));
    if !is_invertible(&rho) {
        report.push("rho-invertible", m.name(), "right unitor is singular");
    }

    let lm = boxtimes(g, l, m)?;
    let lm_n = boxtimes(g, &lm.module, n)?;
    let mn = boxtimes(g, m, n)?;
    let l_mn = boxtimes(g, l, &mn.module)?;
    let assoc = Associator::new(g, n, &mn, &l_mn, l, m);
    let lm_free = free_indices(&lm.quotient);
    let dlm = lm.dim();
    let tag = format!("[{}, {}, {}]", l.name(), m.name(), n.name());

    let cols: Vec<Vec<Scalar>> = free_indices(&lm_n.quotient).into_iter().map(|j| assoc.eval_flat(j / dlm, lm_free[j % dlm])).collect();
    let alpha = Matrix::from_columns(f, l_mn.dim(), &cols);

    let zero = |v: &[Scalar]| v.iter().all(Scalar::is_zero);
    let combine = |rel: &Sparse, ev: &dyn Fn(usize) -> Vec<Scalar>| {
        let mut acc = vec![f.zero(); l_mn.dim()];
        for (j, c) in rel {
            add_into(&mut acc, c, &ev(*j));
        }
        acc
    };
    'inner: for x in 0..lm_n.left_dim {
        for rel in lm.relations() {
            if !zero(&combine(&rel, &|j| assoc.eval_flat(x, j))) {
                report.push(format!("alpha-well-defined{tag}"), "inner relation", "associator does not vanish on a relation of L ⊠ M");
                break 'inner;
            }
        }
    }
    for rel in lm_n.relations() {
        if !zero(&combine(&rel, &|j| assoc.eval_flat(j / dlm, lm_free[j % dlm]))) {
            report.push(format!("alpha-well-defined{tag}"), "outer relation", "associator does not vanish on a relation of (L ⊠ M) ⊠ N");
            break;
        }
    }
    report.extend(is_module_map(&alpha, &lm_n.module, &l_mn.module, &format!("alpha-linear{tag}")));
    Ok(BoxtimesConstraints { lambda, rho, alpha, report })
}

/// Normality of the lifted structure, sampled over a finite set of modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalityReport {
    pub beta_invertible: bool,
    /// `(L, M, N)` names and whether `α_{L,M,N}` is invertible.
    pub alpha_invertible: Vec<(String, bool)>,
    pub lambda_invertible: Vec<(String, bool)>,
    pub rho_invertible: Vec<(String, bool)>,
    pub hopf: Derivation,
    pub sampled: Vec<String>,
    /// Constraint failures and `FAULT/...` findings.
    pub report: Report,
}

impl NormalityReport {
    /// Every sampled constraint is invertible and a Hopf structure was derived.
    pub fn is_normal(&self) -> bool {
        self.beta_invertible
            && self.alpha_invertible.iter().all(|(_, b)| *b)
            && self.lambda_invertible.iter().all(|(_, b)| *b)
            && self.rho_invertible.iter().all(|(_, b)| *b)
            && self.hopf.result().is_some()
    }

    pub fn has_fault(&self) -> bool {
        self.report.findings.iter().any(|f| f.label.starts_with("FAULT/"))
    }
}

impl fmt::Display for NormalityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "invertible" } else { "singular" };
        writeln!(f, "sampled modules: {}", self.sampled.join(", "))?;
        writeln!(f, "beta: {}", yn(self.beta_invertible))?;
        for (label, list) in [("alpha", &self.alpha_invertible), ("lambda", &self.lambda_invertible), ("rho", &self.rho_invertible)] {
            for (name, b) in list {
                writeln!(f, "{label}{name}: {}", yn(*b))?;
            }
        }
        let hopf = match &self.hopf {
            Derivation::Derived(_) => "derived".to_string(),
            Derivation::NotApplicable(gate) => format!("not applicable ({gate:?})"),
        };
        writeln!(f, "hopf (beta-inverse): {hopf}")?;
        write!(f, "{}", self.report)
    }
}

/// Invertibility of `β`, of `α`, `λ`, `ρ` over `k`, the regular module and
/// `extra`, and of the Hopf derivation through `β⁻¹`, with the implications
/// `β invertible ⇒ α invertible` and `Hopf ⇒ λ invertible` flagged as faults
/// when a sample contradicts them.
pub fn normality_check(g: &GabiStructure, extra: &[AModule]) -> Result<NormalityReport, ModError> {
    normality_check_with(g, extra, Execution::default())
}

/// [`normality_check`] with an explicit execution mode for the per-triple checks.
pub fn normality_check_with(g: &GabiStructure, extra: &[AModule], exec: Execution) -> Result<NormalityReport, ModError> {
    let modules = super::default_test_modules(g, extra)?;
    let beta_invertible = is_invertible(&canonical_beta(g)?);
    let hopf = derive_hopf(g, HopfStrategy::BetaInverse)?;
    let mut report = Report::new();
    let mut alpha_invertible = Vec::new();
    let mut lambda_invertible = Vec::new();
    let mut rho_invertible = Vec::new();
    let k = modules.len();
    let triples: Vec<(usize, usize, usize)> = (0..k * k * k).map(|t| (t / (k * k), (t / k) % k, t % k)).collect();
    let results = ordered_map(triples, exec, |(i, j, h)| boxtimes_constraints(g, &modules[i], &modules[j], &modules[h]).map(|c| (i, j, h, c)));
    for r in results {
        let (i, j, h, c) = r?;
        let (l, m, n) = (&modules[i], &modules[j], &modules[h]);
        report.extend(c.report);
        alpha_invertible.push((format!("[{}, {}, {}]", l.name(), m.name(), n.name()), is_invertible(&c.alpha)));
        if i == j && j == h {
            lambda_invertible.push((format!("[{}]", n.name()), is_invertible(&c.lambda)));
            rho_invertible.push((format!("[{}]", m.name()), is_invertible(&c.rho)));
        }
    }
    if beta_invertible {
        for (name, ok) in &alpha_invertible {
            if !ok {
                report.push("FAULT/associative-normality", name.clone(), "β is invertible but the sampled associator is singular");
            }
        }
    }
    if hopf.result().is_some() {
        for (name, ok) in &lambda_invertible {
            if !ok {
                report.push("FAULT/left-normality", name.clone(), "a Hopf structure was derived but the sampled left unitor is singular");
            }
        }
    }
    for (name, ok) in &rho_invertible {
        if !ok {
            report.push("FAULT/right-normality", name.clone(), "the sampled right unitor is singular");
        }
    }
    let sampled = modules.iter().map(|m| m.name().to_string()).collect();
    Ok(NormalityReport { beta_invertible, alpha_invertible, lambda_invertible, rho_invertible, hopf, sampled, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rank, FieldSpec};
    use crate::fixtures;
    use crate::modcat::regular_module;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn c2_trivial_constraints_are_one_by_one() {
        let g = fixtures::group_gabi_structure(Q, 2);
        let k = trivial_module(g.algebra(), g.eps()).unwrap();
        let c = boxtimes_constraints(&g, &k, &k, &k).unwrap();
        assert!(c.report.passed(), "{}", c.report);
        for m in [&c.lambda, &c.rho, &c.alpha] {
            assert_eq!(m.shape(), (1, 1));
            assert!(!m.get(0, 0).is_zero());
        }
    }

    #[test]
    fn c2_regular_constraints() {
        let g = fixtures::group_gabi_structure(Q, 2);
        let r = regular_module(g.algebra());
        let c = boxtimes_constraints(&g, &r, &r, &r).unwrap();
        assert!(c.report.passed(), "{}", c.report);
        assert_eq!(c.lambda.shape(), (2, 2));
        assert_eq!(rank(&c.lambda), 2);
        assert_eq!(rank(&c.alpha), c.alpha.rows());
    }

    #[test]
    fn normality_examples() {
        for g in [fixtures::group_gabi_structure(Q, 2), fixtures::group_gabi_structure(Q, 1), fixtures::sweedler_h4_gabi()] {
            let r = normality_check(&g, &[]).unwrap();
            assert!(r.report.passed(), "{r}");
            assert!(r.is_normal(), "{r}");
            assert_eq!(r.sampled.len(), 2);
        }
    }

    #[test]
    fn searched_structures_have_no_faults() {
        use crate::exec::{Execution, DEFAULT_CAP};
        use crate::gabi::{search_gabi, EpsChoice};
        let f2 = FieldSpec::PrimeField(2);
        let algebras = [fixtures::cyclic_group_algebra(f2, 2), fixtures::monoid_algebra(f2, &fixtures::idempotent_monoid()), fixtures::dual_numbers_f2()];
        let mut seen = 0;
        for a in &algebras {
            for g in search_gabi(a, EpsChoice::SearchAll, DEFAULT_CAP, Execution::Sequential).unwrap() {
                let r = normality_check(&g, &[]).unwrap();
                assert!(!r.has_fault(), "{r}");
                assert_eq!(r.is_normal(), r.hopf.result().is_some(), "{r}");
                seen += 1;
            }
        }
        assert!(seen > 0);
    }

    #[test]
    fn execution_modes_agree() {
        let g = fixtures::sweedler_h4_gabi();
        let seq = normality_check_with(&g, &[], Execution::Sequential).unwrap();
        let par = normality_check_with(&g, &[], Execution::Parallel).unwrap();
        assert_eq!(seq, par);
    }
}
