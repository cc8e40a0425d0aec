//! Dense matrices over a [`Field`] and Gaussian elimination.
//!
//! Vectors are plain `Vec<Scalar>` and are treated as columns. All elimination
//! routines pivot on the first nonzero entry, so outputs are reproducible.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

pub type Vector = Vec<Scalar>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Builds a matrix from row vectors; every row must have `cols` entries.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vector>) -> Result<Matrix> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            if row.iter().any(|s| s.field() != field) {
                return Err(Error::FieldMismatch);
            }
            data.extend(row);
        }
        Ok(Matrix {
            field,
            rows: n,
            cols,
            data,
        })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vector]) -> Matrix {
        Matrix::from_fn(field, rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn column_vector(field: Field, v: &[Scalar]) -> Matrix {
        Matrix::from_fn(field, v.len(), 1, |r, _| v[r].clone())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    /// Column-major flattening, `vec(A)`.
    pub fn vectorize(&self) -> Vector {
        let mut out = Vec::with_capacity(self.rows * self.cols);
        for c in 0..self.cols {
            for r in 0..self.rows {
                out.push(self.get(r, c).clone());
            }
        }
        out
    }

    /// Inverse of [`Matrix::vectorize`].
    pub fn unvectorize(field: Field, rows: usize, cols: usize, v: &[Scalar]) -> Matrix {
        Matrix::from_fn(field, rows, cols, |r, c| v[c * rows + r].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * out.cols + c;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        let mut out = vec![self.field.zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    *o = &*o + &(a * x);
                }
            }
        }
        out
    }

    pub fn block_diagonal(field: Field, blocks: &[&Matrix]) -> Matrix {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(self.field, rows, cols, |r, c| self.get(r0 + r, c0 + c).clone())
    }

    /// Stacks columns of `self` and `other` side by side.
    pub fn hconcat(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.field, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                self.swap_rows(p, row);
            }
            let inv = self.get(row, col).inv().expect("nonzero pivot");
            for c in col..self.cols {
                let idx = row * self.cols + c;
                if !self.data[idx].is_zero() {
                    self.data[idx] = &self.data[idx] * &inv;
                }
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..self.cols {
                    let pv = &self.data[row * self.cols + c];
                    if pv.is_zero() {
                        continue;
                    }
                    let delta = &factor * pv;
                    let idx = r * self.cols + c;
                    self.data[idx] = &self.data[idx] - &delta;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the column space, in echelon-normalized form.
    pub fn column_space(&self) -> Vec<Vector> {
        let (r, pivots) = self.transpose().rref();
        (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
    }

    pub fn determinant(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = self.field.one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Ok(self.field.zero());
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for r in col + 1..n {
                let factor = m.get(r, col) * &inv;
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let pv = m.get(col, c);
                    if pv.is_zero() {
                        continue;
                    }
                    let delta = &factor * pv;
                    let idx = r * n + c;
                    m.data[idx] = &m.data[idx] - &delta;
                }
            }
        }
        Ok(det)
    }
}

/// Solves `a·x = b` for a column `b`; `None` when `b` is outside the column space.
pub fn solve(a: &Matrix, b: &[Scalar]) -> Result<Option<Vector>> {
    if b.len() != a.rows {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side has {} entries, matrix has {} rows",
            b.len(),
            a.rows
        )));
    }
    let aug = a.hconcat(&Matrix::column_vector(a.field, b));
    let (r, pivots) = aug.rref();
    if pivots.last() == Some(&a.cols) {
        return Ok(None);
    }
    let mut x = vec![a.field.zero(); a.cols];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = r.get(i, a.cols).clone();
    }
    Ok(Some(x))
}

/// Solves `a·X = b` for all columns of `b` at once; `None` if any column is unreachable.
pub fn solve_many(a: &Matrix, b: &Matrix) -> Result<Option<Matrix>> {
    if b.rows != a.rows {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side has {} rows, matrix has {}",
            b.rows, a.rows
        )));
    }
    let (r, pivots) = a.hconcat(b).rref();
    if pivots.iter().any(|&p| p >= a.cols) {
        return Ok(None);
    }
    let mut x = Matrix::zeros(a.field, a.cols, b.cols);
    for (i, &p) in pivots.iter().enumerate() {
        for c in 0..b.cols {
            x.set(p, c, r.get(i, a.cols + c).clone());
        }
    }
    Ok(Some(x))
}

/// Echelon-normalized basis of `ker(a)`: one vector per free column, with a 1 there.
pub fn kernel_basis(a: &Matrix) -> Vec<Vector> {
    let (r, pivots) = a.rref();
    let mut is_pivot = vec![false; a.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..a.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![a.field.zero(); a.cols];
        v[free] = a.field.one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(i, free);
        }
        basis.push(v);
    }
    basis
}

/// Inverse of a square matrix, `None` when singular.
pub fn invert(a: &Matrix) -> Result<Option<Matrix>> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows,
            cols: a.cols,
        });
    }
    let n = a.rows;
    let aug = a.hconcat(&Matrix::identity(a.field, n));
    let (r, pivots) = aug.rref();
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Ok(None);
    }
    Ok(Some(r.block(0, n, n, n)))
}

/// Kronecker product with basis order `(i, j) -> i * dim_b + j`.
pub fn kronecker(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if a.field != b.field {
        return Err(Error::FieldMismatch);
    }
    let mut out = Matrix::zeros(a.field, a.rows * b.rows, a.cols * b.cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            for k in 0..b.rows {
                for l in 0..b.cols {
                    let y = b.get(k, l);
                    if !y.is_zero() {
                        out.set(i * b.rows + k, j * b.cols + l, x * y);
                    }
                }
            }
        }
    }
    Ok(out)
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix product shape")
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(&-self.field.one())
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|s| s.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

pub fn zero_vector(field: Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vector(field: Field, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Scalar], s: &Scalar) -> Vector {
    a.iter().map(|x| x * s).collect()
}

/// `acc += s * v`
pub fn axpy(acc: &mut [Scalar], s: &Scalar, v: &[Scalar]) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = &*a + &(s * x);
        }
    }
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// Linear combination `sum_k coeffs[k] * vectors[k]`.
pub fn combine(field: Field, len: usize, coeffs: &[Scalar], vectors: &[Vector]) -> Vector {
    let mut out = zero_vector(field, len);
    for (c, v) in coeffs.iter().zip(vectors) {
        axpy(&mut out, c, v);
    }
    out
}

/// `F^len / span(spanning)` with the echelon-complement basis: the quotient basis
/// is the images of the standard vectors at non-pivot positions.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    /// `dim quotient x len`.
    pub projection: Matrix,
    /// `len x dim quotient`, standard vectors at the free positions.
    pub section: Matrix,
}

impl QuotientSpace {
    pub fn new(field: Field, len: usize, spanning: &[Vector]) -> Result<QuotientSpace> {
        let (ech, pivots) = if spanning.is_empty() {
            (Matrix::zeros(field, 0, len), Vec::new())
        } else {
            Matrix::from_rows(field, len, spanning.to_vec())?.rref()
        };
        let free: Vec<usize> = (0..len).filter(|c| !pivots.contains(c)).collect();
        let q = free.len();
        let mut projection = Matrix::zeros(field, q, len);
        for (r, &f) in free.iter().enumerate() {
            projection.set(r, f, field.one());
        }
        for (row, &p) in pivots.iter().enumerate() {
            // e_p is congruent to e_p - ech_row, which lives on free positions
            for (r, &f) in free.iter().enumerate() {
                let c = ech.get(row, f);
                if !c.is_zero() {
                    projection.set(r, p, -c.clone());
                }
            }
        }
        let section = Matrix::from_fn(field, len, q, |r, c| {
            if r == free[c] {
                field.one()
            } else {
                field.zero()
            }
        });
        Ok(QuotientSpace {
            projection,
            section,
        })
    }

    pub fn dim(&self) -> usize {
        self.projection.rows()
    }

    /// The map induced on the quotient by an endomorphism preserving the subspace.
    pub fn induced(&self, a: &Matrix) -> Matrix {
        &(&self.projection * a) * &self.section
    }
}

/// Coordinates with respect to a fixed, linearly independent family of vectors.
#[derive(Clone, Debug)]
pub struct Coordinates {
    field: Field,
    len: usize,
    /// Fully reduced echelon rows spanning the same space.
    echelon: Vec<Vector>,
    pivots: Vec<usize>,
    /// `echelon[r] = sum_s transform[r][s] * basis[s]`.
    transform: Matrix,
}

impl Coordinates {
    /// Fails when the vectors are linearly dependent.
    pub fn new(field: Field, len: usize, basis: &[Vector]) -> Result<Coordinates> {
        let k = basis.len();
        let aug = Matrix::from_fn(field, k, len + k, |r, c| {
            if c < len {
                basis[r][c].clone()
            } else if c - len == r {
                field.one()
            } else {
                field.zero()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.len() < k || pivots.iter().any(|&p| p >= len) {
            return Err(Error::InvariantViolation(
                "basis vectors are linearly dependent".into(),
            ));
        }
        let echelon = (0..k).map(|r| red.row(r)[..len].to_vec()).collect();
        let transform = red.block(0, len, k, k);
        Ok(Coordinates {
            field,
            len,
            echelon,
            pivots,
            transform,
        })
    }

    pub fn dim(&self) -> usize {
        self.echelon.len()
    }

    /// Coordinates of `v`, or `None` when `v` is outside the span.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vector> {
        debug_assert_eq!(v.len(), self.len);
        let c: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = zero_vector(self.field, self.len);
        for (ci, row) in c.iter().zip(&self.echelon) {
            axpy(&mut rebuilt, ci, row);
        }
        if rebuilt.as_slice() != v {
            return None;
        }
        let k = self.dim();
        let mut out = zero_vector(self.field, k);
        for (r, cr) in c.iter().enumerate() {
            if cr.is_zero() {
                continue;
            }
            for (s, o) in out.iter_mut().enumerate() {
                let t = self.transform.get(r, s);
                if !t.is_zero() {
                    *o = &*o + &(cr * t);
                }
            }
        }
        Some(out)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coords(v).is_some()
    }
}

/// Echelon basis grown one vector at a time, remembering how each stored row was
/// obtained from the inserted vectors.
#[derive(Clone, Debug)]
pub struct IncrementalBasis {
    field: Field,
    len: usize,
    rows: Vec<(usize, Vector, Vector)>,
    inserted: usize,
}

impl IncrementalBasis {
    pub fn new(field: Field, len: usize) -> IncrementalBasis {
        IncrementalBasis {
            field,
            len,
            rows: Vec::new(),
            inserted: 0,
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows; returns the residue and the
    /// combination of inserted vectors that was subtracted.
    fn reduce(&self, v: &[Scalar]) -> (Vector, Vector) {
        let mut residue = v.to_vec();
        let mut combo = zero_vector(self.field, self.inserted);
        for (pivot, row, expr) in &self.rows {
            let c = residue[*pivot].clone();
            if c.is_zero() {
                continue;
            }
            axpy(&mut residue, &-&c, row);
            axpy(&mut combo[..expr.len()], &c, expr);
        }
        (residue, combo)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vector(&self.reduce(v).0)
    }

    /// Inserts `v`. Returns `Ok(())` if it was independent, otherwise
    /// `Err(coeffs)` with `v = sum coeffs[k] * inserted[k]` over the
    /// previously accepted vectors.
    pub fn insert(&mut self, v: &[Scalar]) -> std::result::Result<(), Vector> {
        debug_assert_eq!(v.len(), self.len);
        let (residue, combo) = self.reduce(v);
        match residue.iter().position(|x| !x.is_zero()) {
            None => Err(combo),
            Some(p) => {
                let inv = residue[p].inv().expect("nonzero");
                let row = vec_scale(&residue, &inv);
                // residue = v - combo, so row = inv * (v - combo)
                let mut expr = vec_scale(&combo, &-&inv);
                expr.push(inv);
                self.inserted += 1;
                self.rows.push((p, row, expr));
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    fn m(field: Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            field,
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn v(field: Field, xs: &[i64]) -> Vector {
        xs.iter().map(|&x| field.from_i64(x)).collect()
    }

    #[test]
    fn solve_identity() {
        let a = Matrix::identity(q(), 2);
        assert_eq!(solve(&a, &v(q(), &[3, 4])).unwrap(), Some(v(q(), &[3, 4])));
    }

    #[test]
    fn solve_inconsistent_rank_one() {
        let a = m(q(), &[&[1, 2], &[2, 4]]);
        assert_eq!(solve(&a, &v(q(), &[1, 3])).unwrap(), None);
    }

    #[test]
    fn solve_back_substitution_f5() {
        let f5 = Field::Prime(5);
        let a = m(f5, &[&[1, 1], &[0, 1]]);
        assert_eq!(solve(&a, &v(f5, &[0, 3])).unwrap(), Some(v(f5, &[2, 3])));
    }

    #[test]
    fn solve_dimension_mismatch() {
        let a = Matrix::identity(q(), 2);
        assert!(solve(&a, &v(q(), &[1, 2, 3])).is_err());
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&Matrix::identity(q(), 3)).is_empty());
        let k = kernel_basis(&Matrix::zeros(q(), 2, 2));
        assert_eq!(k, vec![v(q(), &[1, 0]), v(q(), &[0, 1])]);
        let k = kernel_basis(&m(q(), &[&[1, 2], &[2, 4]]));
        assert_eq!(k, vec![v(q(), &[-2, 1])]);
    }

    #[test]
    fn invert_examples() {
        let i4 = Matrix::identity(q(), 4);
        assert_eq!(invert(&i4).unwrap(), Some(i4));
        let swap = m(q(), &[&[0, 1], &[1, 0]]);
        assert_eq!(invert(&swap).unwrap(), Some(swap));
        let f3 = Field::Prime(3);
        assert_eq!(invert(&m(f3, &[&[1, 1], &[1, 1]])).unwrap(), None);
        assert!(invert(&Matrix::zeros(q(), 2, 3)).is_err());
    }

    #[test]
    fn kronecker_examples() {
        let k = kronecker(&Matrix::identity(q(), 2), &Matrix::identity(q(), 3)).unwrap();
        assert_eq!(k, Matrix::identity(q(), 6));
        let b = m(q(), &[&[1, 2], &[3, 4]]);
        assert_eq!(kronecker(&m(q(), &[&[2]]), &b).unwrap(), b.scale(&q().from_i64(2)));
        let e12 = m(q(), &[&[0, 1], &[0, 0]]);
        let e21 = m(q(), &[&[0, 0], &[1, 0]]);
        let k = kronecker(&e12, &e21).unwrap();
        for r in 0..4 {
            for c in 0..4 {
                let expected = if (r, c) == (1, 2) { 1 } else { 0 };
                assert_eq!(k.get(r, c), &q().from_i64(expected));
            }
        }
        assert!(kronecker(&e12, &Matrix::identity(Field::Prime(5), 1)).is_err());
    }

    #[test]
    fn determinant_matches_invertibility() {
        let a = m(q(), &[&[2, 1], &[7, 4]]);
        assert_eq!(a.determinant().unwrap(), q().one());
        assert!(m(q(), &[&[1, 2], &[2, 4]]).determinant().unwrap().is_zero());
    }

    #[test]
    fn coordinates_round_trip() {
        let basis = vec![v(q(), &[1, 1, 0]), v(q(), &[0, 1, 1])];
        let c = Coordinates::new(q(), 3, &basis).unwrap();
        assert_eq!(c.coords(&v(q(), &[2, 5, 3])), Some(v(q(), &[2, 3])));
        assert_eq!(c.coords(&v(q(), &[1, 0, 0])), None);
        assert!(Coordinates::new(q(), 3, &[basis[0].clone(), basis[0].clone()]).is_err());
    }

    #[test]
    fn incremental_basis_reports_dependencies() {
        let mut b = IncrementalBasis::new(q(), 3);
        assert!(b.insert(&v(q(), &[1, 1, 0])).is_ok());
        assert!(b.insert(&v(q(), &[0, 1, 1])).is_ok());
        let dep = b.insert(&v(q(), &[2, 5, 3])).unwrap_err();
        assert_eq!(dep, v(q(), &[2, 3]));
        assert_eq!(b.dim(), 2);
    }
}
