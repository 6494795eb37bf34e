use super::matrix::Matrix;
use super::scalar::{FieldSpec, Scalar};

/// Incrementally maintained reduced row-echelon basis of a row space.
///
/// Every stored row has a leading 1 in its pivot column and zeros in all other
/// pivot columns, so reducing a new row is a single pass over the pivots.
/// Rows are stored sparsely, sorted by column.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: FieldSpec,
    cols: usize,
    rows: Vec<Vec<(usize, Scalar)>>,
    pivots: Vec<usize>,
}

type SparseRow = Vec<(usize, Scalar)>;

fn entry(row: &SparseRow, col: usize) -> Option<&Scalar> {
    row.binary_search_by_key(&col, |(c, _)| *c).ok().map(|i| &row[i].1)
}

/// `a - c·b` on sorted sparse rows.
fn axpy(a: &SparseRow, c: &Scalar, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, b[j].1.mul(c).neg()));
            j += 1;
        } else {
            let v = a[i].1.sub(&c.mul(&b[j].1));
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl EchelonBasis {
    pub fn new(field: FieldSpec, cols: usize) -> Self {
        EchelonBasis { field, cols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        let mut p = self.pivots.clone();
        p.sort_unstable();
        p
    }

    /// Reduces `row` against the basis in place; returns `true` if it became zero.
    pub fn reduce(&self, row: &mut [Scalar]) -> bool {
        for (basis_row, &p) in self.rows.iter().zip(&self.pivots) {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (j, b) in basis_row {
                row[*j] = row[*j].sub(&c.mul(b));
            }
        }
        row.iter().all(Scalar::is_zero)
    }

    /// Adds `row` to the spanning set. Returns `true` if the rank grew.
    pub fn insert(&mut self, mut row: Vec<Scalar>) -> bool {
        assert_eq!(row.len(), self.cols, "row length");
        if self.reduce(&mut row) {
            return false;
        }
        let q = row.iter().position(|x| !x.is_zero()).expect("nonzero row");
        let inv = row[q].inv().expect("nonzero pivot");
        let new: SparseRow = row.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(j, x)| (j, x.mul(&inv))).collect();
        let eliminate = |basis_row: &mut SparseRow| {
            if let Some(c) = entry(basis_row, q).cloned() {
                *basis_row = axpy(basis_row, &c, &new);
            }
        };
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            if self.rows.len() * new.len() >= super::PAR_THRESHOLD {
                self.rows.par_iter_mut().for_each(eliminate);
            } else {
                self.rows.iter_mut().for_each(eliminate);
            }
        }
        #[cfg(not(feature = "parallel"))]
        self.rows.iter_mut().for_each(eliminate);
        self.rows.push(new);
        self.pivots.push(q);
        true
    }

    /// Basis rows sorted by pivot column, as a `rank × cols` matrix.
    pub fn to_matrix(&self) -> Matrix {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_unstable_by_key(|&i| self.pivots[i]);
        let mut m = Matrix::zeros(self.field, order.len(), self.cols);
        for (r, &i) in order.iter().enumerate() {
            for (j, x) in &self.rows[i] {
                m.set(r, *j, x.clone());
            }
        }
        m
    }

    pub fn contains(&self, row: &[Scalar]) -> bool {
        let mut r = row.to_vec();
        self.reduce(&mut r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rref;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn agrees_with_rref() {
        let m = Matrix::from_i64(Q, &[&[0, 2, 4, 1], &[1, 1, 0, 0], &[1, 3, 4, 1], &[3, 0, -1, 7]]);
        let mut e = EchelonBasis::new(Q, 4);
        let grew: Vec<bool> = m.to_rows().into_iter().map(|r| e.insert(r)).collect();
        assert_eq!(grew, vec![true, true, false, true]);
        let r = rref(&m);
        assert_eq!(e.to_matrix(), r.matrix.select_rows(&(0..r.rank).collect::<Vec<_>>()));
        assert_eq!(e.pivots(), r.pivots);
        assert!(e.contains(Matrix::from_i64(Q, &[&[1, 3, 4, 1]]).row(0)));
    }
}
