use std::fmt;

use super::scalar::{FieldSpec, Scalar};
use super::LinAlgError;

/// Dense row-major matrix over a single exact field.
///
/// A matrix with `r` rows and `c` columns represents a linear map from a
/// `c`-dimensional space to an `r`-dimensional one: column `j` holds the image
/// of the `j`-th basis vector. Tensor bases are flattened left-factor-major,
/// `e_i ⊗ e_j ↦ i·n + j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![Scalar::zero(field); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one(field);
        }
        m
    }

    /// Builds a matrix from rows, rejecting ragged input and mixed fields.
    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self, LinAlgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(LinAlgError::Ragged { row: i, expected: c, found: row.len() });
            }
            for (j, x) in row.into_iter().enumerate() {
                if x.field() != field {
                    return Err(LinAlgError::FieldMismatch { expected: field, found: x.field(), at: (i, j) });
                }
                data.push(x);
            }
        }
        Ok(Matrix { field, rows: r, cols: c, data })
    }

    /// Shape-checked constructor from a flat row-major vector.
    pub fn from_vec(field: FieldSpec, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self, LinAlgError> {
        if data.len() != rows * cols {
            return Err(LinAlgError::Shape(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        if let Some(pos) = data.iter().position(|x| x.field() != field) {
            return Err(LinAlgError::FieldMismatch { expected: field, found: data[pos].field(), at: (pos / cols.max(1), pos % cols.max(1)) });
        }
        Ok(Matrix { field, rows, cols, data })
    }

    /// Integer-literal convenience constructor. Panics on ragged input.
    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged literal");
            data.extend(row.iter().map(|v| Scalar::from_i64(field, *v)));
        }
        Matrix { field, rows: r, cols: c, data }
    }

    /// Column vector.
    pub fn column(field: FieldSpec, v: Vec<Scalar>) -> Self {
        let n = v.len();
        Matrix::from_vec(field, n, 1, v).expect("column entries share the field")
    }

    /// Row vector.
    pub fn row_vector(field: FieldSpec, v: Vec<Scalar>) -> Self {
        let n = v.len();
        Matrix::from_vec(field, 1, n, v).expect("row entries share the field")
    }

    /// Standard basis column `e_i` of length `n`.
    pub fn unit_column(field: FieldSpec, n: usize, i: usize) -> Self {
        let mut m = Self::zeros(field, n, 1);
        m.data[i] = Scalar::one(field);
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldSpec, rows: usize, cols: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        debug_assert_eq!(v.field(), self.field);
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub(crate) fn entries_mut(&mut self) -> &mut [Scalar] {
        &mut self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| if i == j { self.get(i, j).is_one() } else { self.get(i, j).is_zero() }))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    /// Matrix product; panics on inner-dimension mismatch.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix, LinAlgError> {
        if self.field != rhs.field {
            return Err(LinAlgError::FieldMismatch { expected: self.field, found: rhs.field, at: (0, 0) });
        }
        if self.cols != rhs.rows {
            return Err(LinAlgError::Shape(format!("cannot multiply {}x{} by {}x{}", self.rows, self.cols, rhs.rows, rhs.cols)));
        }
        let mut out = Self::zeros(self.field, self.rows, rhs.cols);
        let n = rhs.cols;
        let fill = |i: usize, out_row: &mut [Scalar]| {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for (j, b) in rhs.row(k).iter().enumerate() {
                    if !b.is_zero() {
                        out_row[j] = out_row[j].add(&a.mul(b));
                    }
                }
            }
        };
        if n == 0 {
            return Ok(out);
        }
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            if self.rows * self.cols * n >= super::PAR_THRESHOLD {
                out.data.par_chunks_mut(n).enumerate().for_each(|(i, row)| fill(i, row));
                return Ok(out);
            }
        }
        for (i, row) in out.data.chunks_mut(n).enumerate() {
            fill(i, row);
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix add shape");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix sub shape");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub(b)).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a.mul(s)).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Matrix {
        let data = self.data.iter().map(Scalar::neg).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    /// Applies the matrix to a vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).fold(Scalar::zero(self.field), |acc, (a, b)| acc.mul_add(a, b))
            })
            .collect()
    }

    /// Kronecker product, `(a⊗b)[(i·rb+k),(j·cb+l)] = a[i,j]·b[k,l]`.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.field, rhs.field, "kronecker field mismatch");
        let (rb, cb) = rhs.shape();
        let cols = self.cols * cb;
        let mut out = Self::zeros(self.field, self.rows * rb, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rb {
                    for l in 0..cb {
                        let b = rhs.get(k, l);
                        if !b.is_zero() {
                            out.data[(i * rb + k) * cols + j * cb + l] = a.mul(b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Stacks `[self | rhs]`.
    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows, "hstack rows");
        let cols = self.cols + rhs.cols;
        let mut out = Self::zeros(self.field, self.rows, cols);
        for i in 0..self.rows {
            out.data[i * cols..i * cols + self.cols].clone_from_slice(self.row(i));
            out.data[i * cols + self.cols..(i + 1) * cols].clone_from_slice(rhs.row(i));
        }
        out
    }

    /// Stacks `self` on top of `rhs`.
    pub fn vstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.cols, "vstack cols");
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Matrix { field: self.field, rows: self.rows + rhs.rows, cols: self.cols, data }
    }

    /// Submatrix of columns `start..end`.
    pub fn col_range(&self, start: usize, end: usize) -> Matrix {
        let mut out = Self::zeros(self.field, self.rows, end - start);
        for i in 0..self.rows {
            out.data[i * (end - start)..(i + 1) * (end - start)].clone_from_slice(&self.row(i)[start..end]);
        }
        out
    }

    /// Submatrix of the given rows.
    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Matrix { field: self.field, rows: rows.len(), cols: self.cols, data }
    }

    /// Index of the first differing column, used for witness reporting.
    pub fn first_diff_col(&self, other: &Matrix) -> Option<usize> {
        assert_eq!(self.shape(), other.shape(), "comparison shape");
        (0..self.cols).find(|&j| (0..self.rows).any(|i| self.get(i, j) != other.get(i, j)))
    }

    /// All columns on which `self` and `other` differ.
    pub fn diff_cols(&self, other: &Matrix) -> Vec<usize> {
        assert_eq!(self.shape(), other.shape(), "comparison shape");
        (0..self.cols).filter(|&j| (0..self.rows).any(|i| self.get(i, j) != other.get(i, j))).collect()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix<{}> {}x{} [", self.field, self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Permutation of tensor legs.
///
/// `dims[k]` is the dimension of leg `k` of the source. The result maps a basis
/// tensor with leg indices `(i_0, …, i_{r-1})` to the target tensor whose leg `t`
/// carries `i_{perm[t]}`.
pub fn permute_legs(field: FieldSpec, dims: &[usize], perm: &[usize]) -> Matrix {
    assert_eq!(dims.len(), perm.len());
    let total: usize = dims.iter().product();
    let tdims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    let mut out = Matrix::zeros(field, total, total);
    let mut idx = vec![0usize; dims.len()];
    for src in 0..total {
        let mut rem = src;
        for k in (0..dims.len()).rev() {
            idx[k] = rem % dims[k];
            rem /= dims[k];
        }
        let mut tgt = 0;
        for (t, &p) in perm.iter().enumerate() {
            tgt = tgt * tdims[t] + idx[p];
        }
        out.set(tgt, src, Scalar::one(field));
    }
    out
}

/// The flip `V⊗W → W⊗V` for `dim V = a`, `dim W = b`.
pub fn twist(field: FieldSpec, a: usize, b: usize) -> Matrix {
    permute_legs(field, &[a, b], &[1, 0])
}

/// Kronecker product of a list of matrices, left to right.
pub fn kron_all(ms: &[&Matrix]) -> Matrix {
    let mut it = ms.iter();
    let first = (*it.next().expect("at least one factor")).clone();
    it.fold(first, |acc, m| acc.kron(m))
}
