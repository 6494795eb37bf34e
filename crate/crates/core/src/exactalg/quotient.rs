use super::echelon::EchelonBasis;
use super::matrix::Matrix;
use super::scalar::{FieldSpec, Scalar};

/// `V / span(relations)` with canonical coordinates.
///
/// Quotient coordinates are the non-pivot columns of the reduced relations, in
/// increasing order; `section` sends a coordinate vector to the representative
/// supported on those columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSpace {
    pub ambient_dim: usize,
    /// Relation rows in reduced row-echelon form (zero rows dropped).
    pub relations: Matrix,
    pub pivot_cols: Vec<usize>,
    /// `dim × ambient_dim`.
    pub reduce: Matrix,
    /// `ambient_dim × dim`.
    pub section: Matrix,
}

impl QuotientSpace {
    pub fn dim(&self) -> usize {
        self.ambient_dim - self.pivot_cols.len()
    }

    pub fn field(&self) -> FieldSpec {
        self.reduce.field()
    }

    /// Quotient coordinates of one ambient vector.
    pub fn reduce_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.reduce.apply(v)
    }

    /// Column `j` of `reduce`, i.e. the class of the `j`-th ambient basis vector.
    pub fn class_of_basis(&self, j: usize) -> Vec<Scalar> {
        self.reduce.col(j)
    }

    pub(crate) fn from_echelon(basis: EchelonBasis) -> Self {
        let field = basis.field();
        let n = basis.cols();
        let pivots = basis.pivots().to_vec();
        let relations = basis.to_matrix();
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&j| !is_pivot[j]).collect();
        let d = free.len();
        let mut coord_of = vec![usize::MAX; n];
        for (k, &f) in free.iter().enumerate() {
            coord_of[f] = k;
        }
        let mut reduce = Matrix::zeros(field, d, n);
        let mut section = Matrix::zeros(field, n, d);
        for (k, &f) in free.iter().enumerate() {
            reduce.set(k, f, Scalar::one(field));
            section.set(f, k, Scalar::one(field));
        }
        // v ≡ v - Σ v[p_i]·R_i, which is supported on free columns.
        for (i, &p) in pivots.iter().enumerate() {
            for (j, x) in relations.row(i).iter().enumerate() {
                if !is_pivot[j] && !x.is_zero() {
                    reduce.set(coord_of[j], p, x.neg());
                }
            }
        }
        QuotientSpace { ambient_dim: n, relations, pivot_cols: pivots, reduce, section }
    }
}

/// Quotient of `field^ambient_dim` by the row span of `relation_rows`.
pub fn quotient_by_rows(ambient_dim: usize, relation_rows: &Matrix) -> QuotientSpace {
    assert!(relation_rows.rows() == 0 || relation_rows.cols() == ambient_dim, "relation length");
    let mut basis = EchelonBasis::new(relation_rows.field(), ambient_dim);
    for i in 0..relation_rows.rows() {
        basis.insert(relation_rows.row(i).to_vec());
    }
    QuotientSpace::from_echelon(basis)
}

/// Streaming variant for relation sets too large to materialize as one matrix.
pub fn quotient_by_iter<I>(field: FieldSpec, ambient_dim: usize, relations: I) -> QuotientSpace
where
    I: IntoIterator<Item = Vec<Scalar>>,
{
    let mut basis = EchelonBasis::new(field, ambient_dim);
    for r in relations {
        if basis.rank() == ambient_dim {
            break;
        }
        basis.insert(r);
    }
    QuotientSpace::from_echelon(basis)
}
