use super::{AxiomContext, GabiSide, GabiStructure};
use crate::algcore::{is_augmentation, FinAlgebra};
use crate::exactalg::{kernel_basis, solve, FieldSpec, Matrix, Scalar};
use crate::exec::{Execution, SearchError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EpsChoice {
    Given(Matrix),
    SearchAll,
}

fn all_vectors(field: FieldSpec, len: usize) -> Vec<Vec<Scalar>> {
    let elems = field.elements();
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out.iter().flat_map(|prefix| elems.iter().map(move |e| [prefix.clone(), vec![e.clone()]].concat())).collect();
    }
    out
}

fn residue(s: &Scalar) -> u32 {
    match s {
        Scalar::Residue { value, .. } => *value,
        Scalar::Rational(_) => unreachable!("search runs over prime fields"),
    }
}

/// Column `j` candidates: solutions of `(id⊗ε)v = e_j` and `m v = ε(e_j)1`.
fn column_candidates(a: &FinAlgebra, eps: &Matrix, j: usize) -> Vec<Vec<Scalar>> {
    let n = a.dim();
    let f = a.field();
    let id = Matrix::identity(f, n);
    let sys = id.kron(eps).vstack(a.mul_matrix());
    let mut rhs = Matrix::unit_column(f, n, j).col(0);
    rhs.extend(a.unit().iter().map(|u| u.mul(eps.get(0, j))));
    let Some(part) = solve(&sys, &Matrix::column(f, rhs)).expect("consistent shapes") else {
        return Vec::new();
    };
    let part = part.col(0);
    let kernel = kernel_basis(&sys);
    all_vectors(f, kernel.rows())
        .into_iter()
        .map(|coeffs| {
            let mut v = part.clone();
            for (c, k) in coeffs.iter().zip(0..kernel.rows()) {
                if c.is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(kernel.row(k)) {
                    *x = x.add(&c.mul(y));
                }
            }
            v
        })
        .collect()
}

fn search_one_eps(a: &FinAlgebra, eps: &Matrix, exec: Execution) -> Vec<Matrix> {
    let n = a.dim();
    let f = a.field();
    if !is_augmentation(eps, a).expect("shape checked").passed() {
        return Vec::new();
    }
    let columns: Vec<Vec<Vec<Scalar>>> = (0..n).map(|j| column_candidates(a, eps, j)).collect();
    let total: usize = columns.iter().map(Vec::len).product();
    let ctx = AxiomContext::new(a);
    let build = |mut code: usize| -> Option<Matrix> {
        let mut cols = Vec::with_capacity(n);
        for c in columns.iter().rev() {
            cols.push(c[code % c.len()].clone());
            code /= c.len();
        }
        cols.reverse();
        let delta = Matrix::from_columns(f, n * n, &cols);
        ctx.failures(&delta, eps, true).is_empty().then_some(delta)
    };
    let mut found: Vec<Matrix> = match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..total).into_par_iter().filter_map(build).collect()
        }
        _ => (0..total).filter_map(build).collect(),
    };
    found.sort_by_cached_key(|d| d.entries().iter().map(residue).collect::<Vec<_>>());
    found
}

/// Every left gabi structure on `a` over `𝔽_p`, ordered lexicographically by
/// `(ε, δ)` entries read row-major.
///
/// The cap bounds the raw candidate count `p^(n·n²)` (times `p^n` over all
/// `ε`); the search itself only visits `δ` whose columns already satisfy the
/// linear axioms GA1 and GA2.
pub fn search_gabi(a: &FinAlgebra, eps: EpsChoice, cap: u128, exec: Execution) -> Result<Vec<GabiStructure>, SearchError> {
    let f = a.field();
    let Some(p) = f.order() else {
        return Err(SearchError::InfiniteField(f));
    };
    let n = a.dim() as u32;
    let pow = |e: u32| (p as u128).checked_pow(e);
    let required = match eps {
        EpsChoice::Given(_) => pow(n * n * n),
        EpsChoice::SearchAll => pow(n * n * n).zip(pow(n)).and_then(|(x, y)| x.checked_mul(y)),
    }
    .unwrap_or(u128::MAX);
    if required > cap {
        return Err(SearchError::CapExceeded { required, cap });
    }
    let eps_list = match eps {
        EpsChoice::Given(e) => {
            if e.shape() != (1, a.dim()) || e.field() != f {
                return Err(SearchError::Input(format!("eps must be a 1x{} matrix over {f}", a.dim())));
            }
            vec![e]
        }
        EpsChoice::SearchAll => all_vectors(f, a.dim()).into_iter().map(|v| Matrix::row_vector(f, v)).collect(),
    };
    let mut out = Vec::new();
    for e in eps_list {
        for delta in search_one_eps(a, &e, exec) {
            out.push(GabiStructure::new(a.clone(), delta, e.clone(), GabiSide::Left).expect("shapes"));
        }
    }
    Ok(out)
}
