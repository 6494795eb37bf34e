use super::matrix::Matrix;
use super::scalar::Scalar;
use super::LinAlgError;

/// Result of Gauss–Jordan elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    /// Same shape as the input; zero rows at the bottom.
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Reduced row-echelon form: pivots are 1 and their columns are otherwise zero.
pub fn rref(m: &Matrix) -> Rref {
    let mut a = m.clone();
    let (rows, cols) = a.shape();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        swap_rows(&mut a, r, p);
        let inv = a.get(r, c).inv().expect("nonzero pivot");
        {
            let row = &mut a.entries_mut()[r * cols..(r + 1) * cols];
            for x in row.iter_mut().skip(c) {
                if !x.is_zero() {
                    *x = x.mul(&inv);
                }
            }
        }
        let pivot_row: Vec<Scalar> = a.row(r).to_vec();
        let nz: Vec<usize> = (c..cols).filter(|&j| !pivot_row[j].is_zero()).collect();
        let eliminate = |(i, row): (usize, &mut [Scalar])| {
            if i == r || row[c].is_zero() {
                return;
            }
            let f = row[c].clone();
            for &j in &nz {
                row[j] = row[j].sub(&f.mul(&pivot_row[j]));
            }
        };
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            if rows * nz.len() >= super::PAR_THRESHOLD {
                a.entries_mut().par_chunks_mut(cols).enumerate().for_each(eliminate);
            } else {
                a.entries_mut().chunks_mut(cols).enumerate().for_each(eliminate);
            }
        }
        #[cfg(not(feature = "parallel"))]
        a.entries_mut().chunks_mut(cols).enumerate().for_each(eliminate);
        pivots.push(c);
        r += 1;
    }
    Rref { rank: pivots.len(), matrix: a, pivots }
}

fn swap_rows(a: &mut Matrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    let cols = a.cols();
    let data = a.entries_mut();
    for k in 0..cols {
        data.swap(i * cols + k, j * cols + k);
    }
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).rank
}

/// Two-sided inverse, `Ok(None)` when singular.
pub fn invert(m: &Matrix) -> Result<Option<Matrix>, LinAlgError> {
    if !m.is_square() {
        return Err(LinAlgError::Shape(format!("cannot invert a {}x{} matrix", m.rows(), m.cols())));
    }
    let n = m.rows();
    let aug = m.hstack(&Matrix::identity(m.field(), n));
    let red = rref(&aug);
    // [m | I] always has rank n; m is invertible iff every pivot lands in the left block.
    if red.pivots.iter().any(|&p| p >= n) {
        return Ok(None);
    }
    Ok(Some(red.matrix.col_range(n, 2 * n)))
}

/// Rows form a basis of the right null space `{v : m·v = 0}`.
pub fn kernel_basis(m: &Matrix) -> Matrix {
    let red = rref(m);
    let cols = m.cols();
    let mut is_pivot = vec![false; cols];
    for &p in &red.pivots {
        is_pivot[p] = true;
    }
    let field = m.field();
    let free: Vec<usize> = (0..cols).filter(|&j| !is_pivot[j]).collect();
    let mut out = Matrix::zeros(field, free.len(), cols);
    for (k, &f) in free.iter().enumerate() {
        out.set(k, f, Scalar::one(field));
        for (i, &p) in red.pivots.iter().enumerate() {
            let x = red.matrix.get(i, f);
            if !x.is_zero() {
                out.set(k, p, x.neg());
            }
        }
    }
    out
}

/// Solves `a·X = b` column by column; free variables are set to zero.
/// Returns `None` when the system is inconsistent.
pub fn solve(a: &Matrix, b: &Matrix) -> Result<Option<Matrix>, LinAlgError> {
    if a.rows() != b.rows() {
        return Err(LinAlgError::Shape(format!("system has {} equations but {} right-hand rows", a.rows(), b.rows())));
    }
    let n = a.cols();
    let red = rref(&a.hstack(b));
    if red.pivots.iter().any(|&p| p >= n) {
        return Ok(None);
    }
    let mut x = Matrix::zeros(a.field(), n, b.cols());
    for (i, &p) in red.pivots.iter().enumerate() {
        for j in 0..b.cols() {
            x.set(p, j, red.matrix.get(i, n + j).clone());
        }
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::FieldSpec;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn rref_repeated_row() {
        let r = rref(&Matrix::from_i64(Q, &[&[1, 1], &[1, 1]]));
        assert_eq!(r.matrix, Matrix::from_i64(Q, &[&[1, 1], &[0, 0]]));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn rref_identity_and_scaling() {
        let i3 = Matrix::identity(Q, 3);
        assert_eq!(rref(&i3).matrix, i3);
        assert_eq!(rref(&i3).rank, 3);
        let r = rref(&Matrix::from_i64(Q, &[&[2, 4]]));
        assert_eq!(r.matrix, Matrix::from_i64(Q, &[&[1, 2]]));
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn invert_examples() {
        let i2 = Matrix::identity(Q, 2);
        assert_eq!(invert(&i2).unwrap(), Some(i2));
        let swap = Matrix::from_i64(Q, &[&[0, 1], &[1, 0]]);
        assert_eq!(invert(&swap).unwrap(), Some(swap));
        assert_eq!(invert(&Matrix::from_i64(Q, &[&[1, 1], &[0, 0]])).unwrap(), None);
        assert!(invert(&Matrix::from_i64(Q, &[&[1, 1]])).is_err());
    }

    #[test]
    fn kernel_over_f2() {
        let f2 = FieldSpec::PrimeField(2);
        let m = Matrix::from_i64(f2, &[&[1, 1]]);
        let k = kernel_basis(&m);
        assert_eq!(k, Matrix::from_i64(f2, &[&[1, 1]]));
        // Enumeration oracle: the only nonzero v in F_2^2 with v0 + v1 = 0 is (1,1).
        let sols: Vec<(i64, i64)> = (0..2).flat_map(|a| (0..2).map(move |b| (a, b))).filter(|&(a, b)| (a + b) % 2 == 0 && (a, b) != (0, 0)).collect();
        assert_eq!(sols, vec![(1, 1)]);
    }

    #[test]
    fn kernel_trivial_and_full() {
        assert_eq!(kernel_basis(&Matrix::identity(Q, 3)).rows(), 0);
        let k = kernel_basis(&Matrix::zeros(Q, 2, 3));
        assert_eq!(k.rows(), 3);
        assert!(k.is_identity());
    }

    #[test]
    fn solve_inconsistent_and_free() {
        let a = Matrix::from_i64(Q, &[&[1, 1], &[1, 1]]);
        assert_eq!(solve(&a, &Matrix::from_i64(Q, &[&[1], &[2]])).unwrap(), None);
        let x = solve(&a, &Matrix::from_i64(Q, &[&[3], &[3]])).unwrap().unwrap();
        assert_eq!(x, Matrix::from_i64(Q, &[&[3], &[0]]));
    }
}
