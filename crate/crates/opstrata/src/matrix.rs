//! Dense matrices over an exact scalar, with division-ring row reduction.
//!
//! Row reduction multiplies rows from the left, so everything here stays
//! valid over the rational quaternions: "rank" is the left-module rank, which
//! is well defined because the scalars form a division ring. Pivoting is
//! deterministic (first nonzero entry, scanning rows top-down and columns
//! left-right) so nullspace bases are reproducible across runs.

use crate::scalar::ExactScalar;
use crate::{Error, Result};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Row-major dense matrix. Entries all live in one scalar type.
#[derive(Clone, PartialEq)]
pub struct Matrix<K: ExactScalar> {
    rows: usize,
    cols: usize,
    entries: Vec<K>,
}

impl<K: ExactScalar> fmt::Debug for Matrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<K: ExactScalar> Matrix<K> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![K::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, K::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> K) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn from_rows(rows_vec: Vec<Vec<K>>) -> Self {
        let rows = rows_vec.len();
        let cols = if rows == 0 { 0 } else { rows_vec[0].len() };
        for row in &rows_vec {
            assert_eq!(row.len(), cols, "ragged rows");
        }
        Matrix {
            rows,
            cols,
            entries: rows_vec.into_iter().flatten().collect(),
        }
    }

    /// Integer convenience constructor.
    pub fn from_i64(rows_vec: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows_vec
                .iter()
                .map(|r| r.iter().map(|&n| K::from_i64(n)).collect())
                .collect(),
        )
    }

    /// Column vector from a slice.
    pub fn col_vector(v: &[K]) -> Self {
        Matrix::from_fn(v.len(), 1, |r, _| v[r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &K {
        debug_assert!(r < self.rows && c < self.cols);
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: K) {
        debug_assert!(r < self.rows && c < self.cols);
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    /// Conjugate transpose; equals the plain transpose over `ℚ`.
    pub fn conj_transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).conj())
    }

    pub fn map<L: ExactScalar>(&self, f: impl Fn(&K) -> L) -> Matrix<L> {
        Matrix::from_fn(self.rows, self.cols, |r, c| f(self.at(r, c)))
    }

    pub fn scale(&self, s: &K) -> Self {
        self.map(|e| s.clone() * e.clone())
    }

    /// Scale with the scalar on the right, which matters over `ℍ(ℚ)`.
    pub fn scale_right(&self, s: &K) -> Self {
        self.map(|e| e.clone() * s.clone())
    }

    pub fn column(&self, c: usize) -> Vec<K> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Matrix::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                other.at(r, c - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack col mismatch");
        Matrix::from_fn(self.rows + other.rows, self.cols, |r, c| {
            if r < self.rows {
                self.at(r, c).clone()
            } else {
                other.at(r - self.rows, c).clone()
            }
        })
    }

    pub fn submatrix(&self, row_ids: &[usize], col_ids: &[usize]) -> Self {
        Matrix::from_fn(row_ids.len(), col_ids.len(), |r, c| {
            self.at(row_ids[r], col_ids[c]).clone()
        })
    }

    /// Matrix from column vectors.
    pub fn from_columns(cols_vec: &[Vec<K>]) -> Self {
        let cols = cols_vec.len();
        let rows = if cols == 0 { 0 } else { cols_vec[0].len() };
        Matrix::from_fn(rows, cols, |r, c| cols_vec[c][r].clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matmul shape mismatch");
        Matrix::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = K::zero();
            for k in 0..self.cols {
                acc = acc + self.at(r, k).clone() * other.at(k, c).clone();
            }
            acc
        })
    }

    /// Apply to a vector.
    pub fn mul_vec(&self, v: &[K]) -> Vec<K> {
        assert_eq!(self.cols, v.len(), "matvec shape mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = K::zero();
                for c in 0..self.cols {
                    acc = acc + self.at(r, c).clone() * v[c].clone();
                }
                acc
            })
            .collect()
    }

    /// Kronecker product with block structure `self[i][j] * other`.
    pub fn kronecker(&self, other: &Self) -> Self {
        Matrix::from_fn(
            self.rows * other.rows,
            self.cols * other.cols,
            |r, c| {
                let (ra, rb) = (r / other.rows, r % other.rows);
                let (ca, cb) = (c / other.cols, c % other.cols);
                self.at(ra, ca).clone() * other.at(rb, cb).clone()
            },
        )
    }

    /// Row-reduce in place by left multiplications. Returns the pivot
    /// columns in order; after the call the matrix is in reduced row
    /// echelon form.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..self.cols {
            if pivot_row >= self.rows {
                break;
            }
            let found = (pivot_row..self.rows).find(|&r| !self.at(r, col).is_zero());
            let Some(r0) = found else { continue };
            if r0 != pivot_row {
                for c in 0..self.cols {
                    let a = self.at(r0, c).clone();
                    let b = self.at(pivot_row, c).clone();
                    self.set(r0, c, b);
                    self.set(pivot_row, c, a);
                }
            }
            let inv = self
                .at(pivot_row, col)
                .inv()
                .expect("nonzero pivot must be invertible");
            for c in 0..self.cols {
                let v = inv.clone() * self.at(pivot_row, c).clone();
                self.set(pivot_row, c, v);
            }
            for r in 0..self.rows {
                if r == pivot_row || self.at(r, col).is_zero() {
                    continue;
                }
                let factor = self.at(r, col).clone();
                for c in 0..self.cols {
                    let v = self.at(r, c).clone()
                        - factor.clone() * self.at(pivot_row, c).clone();
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        pivots
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix<K>, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    /// Left-module rank by row reduction.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Basis of `{x : self·x = 0}`; length is `cols - rank`.
    pub fn nullspace_basis(&self) -> Vec<Vec<K>> {
        let (r, pivots) = self.rref();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut x = vec![K::zero(); self.cols];
            x[free] = K::one();
            for (row, &col) in pivots.iter().enumerate() {
                x[col] = -r.at(row, free).clone();
            }
            basis.push(x);
        }
        basis
    }

    /// Some `x` with `self·x = b` when `b` lies in the column span, else
    /// `None`. Free variables are set to zero, so the answer is the
    /// minimal-support solution for the fixed pivoting.
    pub fn solve(&self, b: &[K]) -> Result<Option<Vec<K>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                context: "solve",
                left: self.rows,
                right: b.len(),
            });
        }
        let augmented = self.hstack(&Matrix::col_vector(b));
        let (r, pivots) = augmented.rref();
        if pivots.contains(&self.cols) {
            return Ok(None); // inconsistent: pivot in the augmented column
        }
        let mut x = vec![K::zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = r.at(row, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Exact inverse of a square matrix.
    pub fn inverse(&self) -> Result<Matrix<K>> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                context: "inverse",
                left: self.rows,
                right: self.cols,
            });
        }
        let augmented = self.hstack(&Matrix::identity(self.rows));
        let (r, pivots) = augmented.rref();
        if pivots.len() != self.rows || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return Err(Error::Singular("inverse"));
        }
        Ok(Matrix::from_fn(self.rows, self.rows, |i, j| {
            r.at(i, self.cols + j).clone()
        }))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Determinant by elimination. Commutative scalars only.
    pub fn det(&self) -> K {
        assert!(K::COMMUTATIVE, "determinant needs commutative scalars");
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let mut m = self.clone();
        let n = self.rows;
        let mut det = K::one();
        for col in 0..n {
            let found = (col..n).find(|&r| !m.at(r, col).is_zero());
            let Some(r0) = found else { return K::zero() };
            if r0 != col {
                for c in 0..n {
                    let a = m.at(r0, c).clone();
                    let b = m.at(col, c).clone();
                    m.set(r0, c, b);
                    m.set(col, c, a);
                }
                det = -det;
            }
            let pivot = m.at(col, col).clone();
            det = det * pivot.clone();
            let inv = pivot.inv().unwrap();
            for r in col + 1..n {
                if m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).clone() * inv.clone();
                for c in col..n {
                    let v = m.at(r, c).clone() - factor.clone() * m.at(col, c).clone();
                    m.set(r, c, v);
                }
            }
        }
        det
    }

    /// Canonical string form used for hashing certificates.
    pub fn canonical_string(&self) -> String {
        let mut s = format!("{}x{};", self.rows, self.cols);
        for e in &self.entries {
            s.push_str(&format!("{},", e));
        }
        s
    }
}

/// Concatenate a list of vectors into one long vector.
pub fn flatten<K: Clone>(blocks: &[Vec<K>]) -> Vec<K> {
    blocks.iter().flatten().cloned().collect()
}

/// Rank of the span of a list of vectors.
pub fn span_rank<K: ExactScalar>(vectors: &[Vec<K>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_columns(vectors).rank()
}

/// Exact subspace equality: both span ranks and the joint rank agree.
pub fn same_span<K: ExactScalar>(a: &[Vec<K>], b: &[Vec<K>]) -> bool {
    let ra = span_rank(a);
    let rb = span_rank(b);
    if ra != rb {
        return false;
    }
    let mut joint: Vec<Vec<K>> = a.to_vec();
    joint.extend(b.iter().cloned());
    span_rank(&joint) == ra
}

impl<K: ExactScalar> Add for &Matrix<K> {
    type Output = Matrix<K>;
    fn add(self, rhs: &Matrix<K>) -> Matrix<K> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |r, c| {
            self.at(r, c).clone() + rhs.at(r, c).clone()
        })
    }
}

impl<K: ExactScalar> Sub for &Matrix<K> {
    type Output = Matrix<K>;
    fn sub(self, rhs: &Matrix<K>) -> Matrix<K> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |r, c| {
            self.at(r, c).clone() - rhs.at(r, c).clone()
        })
    }
}

impl<K: ExactScalar> Mul for &Matrix<K> {
    type Output = Matrix<K>;
    fn mul(self, rhs: &Matrix<K>) -> Matrix<K> {
        Matrix::mul(self, rhs)
    }
}

impl<K: ExactScalar> Neg for &Matrix<K> {
    type Output = Matrix<K>;
    fn neg(self) -> Matrix<K> {
        self.map(|e| -e.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat_int, Gaussian, Quaternion, Rational};

    #[test]
    fn identity_rank() {
        let m: Matrix<Rational> = Matrix::identity(3);
        assert_eq!(m.rank(), 3);
        assert!(m.nullspace_basis().is_empty());
    }

    #[test]
    fn proportional_rows_have_rank_one() {
        let m: Matrix<Rational> = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn nullspace_of_row_sums() {
        let m: Matrix<Rational> = Matrix::from_i64(&[&[1, 1]]);
        let basis = m.nullspace_basis();
        assert_eq!(basis.len(), 1);
        let out = m.mul_vec(&basis[0]);
        assert!(out.iter().all(|e| e.is_zero()));
    }

    #[test]
    fn gaussian_nullspace_line() {
        // [1, i] kills the line through (-i, 1).
        let m = Matrix::from_rows(vec![vec![Gaussian::one(), Gaussian::i()]]);
        let basis = m.nullspace_basis();
        assert_eq!(basis.len(), 1);
        let out = m.mul_vec(&basis[0]);
        assert!(out.iter().all(|e| e.is_zero()));
        // Same line as (-i, 1): their 2x2 matrix must be singular.
        let witness = vec![-Gaussian::i(), Gaussian::one()];
        let two = Matrix::from_columns(&[basis[0].clone(), witness]);
        assert_eq!(two.rank(), 1);
    }

    #[test]
    fn solve_identity_and_inconsistent() {
        let id: Matrix<Rational> = Matrix::identity(2);
        let sol = id
            .solve(&[rat_int(3), rat_int(5)])
            .unwrap()
            .expect("solvable");
        assert_eq!(sol, vec![rat_int(3), rat_int(5)]);

        let m: Matrix<Rational> = Matrix::from_i64(&[&[1, 1]]);
        let x = m.solve(&[rat_int(2)]).unwrap().expect("solvable");
        assert_eq!(m.mul_vec(&x), vec![rat_int(2)]);

        let bad: Matrix<Rational> = Matrix::from_i64(&[&[1], &[1]]);
        assert!(bad.solve(&[rat_int(0), rat_int(1)]).unwrap().is_none());
        assert!(bad.solve(&[rat_int(0)]).is_err());
    }

    #[test]
    fn kronecker_shapes_and_unit() {
        let a: Matrix<Rational> = Matrix::from_fn(2, 3, |r, c| rat_int((r * 3 + c) as i64));
        let b: Matrix<Rational> = Matrix::from_fn(4, 5, |r, c| rat_int((r + c) as i64));
        let k = a.kronecker(&b);
        assert_eq!((k.rows(), k.cols()), (8, 15));
        assert_eq!(a.kronecker(&Matrix::identity(1)), a);

        // e1 e1^T kron e2 e2^T has its single 1 at the expected position.
        let e11: Matrix<Rational> = {
            let mut m = Matrix::zero(2, 2);
            m.set(0, 0, rat_int(1));
            m
        };
        let e22: Matrix<Rational> = {
            let mut m = Matrix::zero(2, 2);
            m.set(1, 1, rat_int(1));
            m
        };
        let k2 = e11.kronecker(&e22);
        for r in 0..4 {
            for c in 0..4 {
                let expected = if (r, c) == (1, 1) { rat_int(1) } else { rat_int(0) };
                assert_eq!(*k2.at(r, c), expected);
            }
        }
    }

    #[test]
    fn quaternion_left_module_rank() {
        let i = Quaternion::unit_i();
        let j = Quaternion::unit_j();
        // Rows (1, i) and (j, k = j*i? careful: j*i = -k). Use (j, j*i).
        let m = Matrix::from_rows(vec![
            vec![Quaternion::one(), i.clone()],
            vec![j.clone(), j.clone() * i.clone()],
        ]);
        // Second row is j * first row, so left-module rank is 1.
        assert_eq!(m.rank(), 1);
        let basis = m.nullspace_basis();
        assert_eq!(basis.len(), 1);
        assert!(m.mul_vec(&basis[0]).iter().all(|e| e.is_zero()));
    }

    #[test]
    fn inverse_round_trip() {
        let m: Matrix<Rational> = Matrix::from_i64(&[&[2, 1, 0], &[1, 1, 1], &[0, 3, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(3));
        let sing: Matrix<Rational> = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(sing.inverse().is_err());
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let m: Matrix<Rational> = Matrix::from_i64(&[&[1, 2, 3], &[0, 4, 5], &[1, 0, 6]]);
        assert_eq!(m.det(), rat_int(22));
    }
}
