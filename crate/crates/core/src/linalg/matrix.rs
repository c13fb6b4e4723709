use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use super::echelon::Echelon;
use super::poly::UniPoly;
use super::rational::{format_rational, Rational, Vector};
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Dense row-major matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Rational::one())
    }

    pub fn scalar(n: usize, value: Rational) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = value.clone();
        }
        m
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let data = (0..rows * cols).map(|idx| f(idx / cols, idx % cols)).collect();
        Self { rows, cols, data }
    }

    /// Builds a matrix from equal-length rows.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch { expected: cols, found: bad.len() });
        }
        Ok(Self::from_rows_unchecked(rows, cols))
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<Rational>>, cols: usize) -> Self {
        let n = rows.len();
        let data: Vec<Rational> = rows.into_iter().flatten().collect();
        debug_assert_eq!(data.len(), n * cols);
        Self { rows: n, cols, data }
    }

    /// Reads `rows * cols` entries in row-major order.
    pub fn from_row_major(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: data.len() });
        }
        Ok(Self { rows, cols, data })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(n: usize, columns: &[Vector]) -> Self {
        Self::from_fn(n, columns.len(), |r, c| columns[c][r].clone())
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

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[Rational]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// Row-major entries; for an endomorphism this is its vectorization.
    pub fn as_slice(&self) -> &[Rational] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<Rational> {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vector {
        assert_eq!(v.len(), self.cols, "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        let data = self.data.iter().map(|a| a * s).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// `self·other − other·self`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn pow(&self, mut e: u32) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut e = Echelon::new(self.cols);
        for r in self.row_vectors() {
            e.insert(r);
        }
        e.into_rref()
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.cols);
        for r in self.row_vectors() {
            e.insert(r);
        }
        e.rank()
    }

    /// Canonical basis of `{v : self·v = 0}`.
    pub fn nullspace(&self) -> Subspace {
        let (rref, pivots) = self.rref();
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        let mut next_pivot = pivots.iter().peekable();
        for free in 0..self.cols {
            if next_pivot.peek() == Some(&&free) {
                next_pivot.next();
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                let x = &rref[(i, free)];
                if !x.is_zero() {
                    v[p] = -x;
                }
            }
            basis.push(v);
        }
        Subspace::span(self.cols, &basis)
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NonSquare { rows: self.rows, cols: self.cols })
        }
    }

    /// Exact determinant by Gaussian elimination with first-nonzero pivoting.
    pub fn det(&self) -> Result<Rational> {
        self.require_square()?;
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != col {
                a.swap_rows(p, col);
                det = -det;
            }
            let pivot = a[(col, col)].clone();
            det *= &pivot;
            for r in col + 1..n {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let factor = &a[(r, col)] / &pivot;
                for c in col..n {
                    let delta = &factor * &a[(col, c)];
                    a[(r, c)] -= delta;
                }
            }
        }
        Ok(det)
    }

    /// Exact inverse, or `None` when singular.
    pub fn inverse(&self) -> Result<Option<Matrix>> {
        self.require_square()?;
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return Ok(None);
            };
            a.swap_rows(p, col);
            inv.swap_rows(p, col);
            let pivot = a[(col, col)].clone();
            for c in 0..n {
                a[(col, c)] /= &pivot;
                inv[(col, c)] /= &pivot;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                for c in 0..n {
                    let da = &factor * &a[(col, c)];
                    a[(r, c)] -= da;
                    let di = &factor * &inv[(col, c)];
                    inv[(r, c)] -= di;
                }
            }
        }
        Ok(Some(inv))
    }

    /// Monic characteristic polynomial `det(x·I − A)` via the Faddeev–LeVerrier recursion.
    pub fn char_poly(&self) -> Result<UniPoly> {
        self.require_square()?;
        let n = self.rows;
        // coeffs[i] is the coefficient of x^i
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut m = Matrix::zeros(n, n);
        for k in 1..=n {
            let mut next = self.mul(&m);
            for i in 0..n {
                next[(i, i)] += &coeffs[n - k + 1];
            }
            m = next;
            let t = self.mul(&m).trace();
            coeffs[n - k] = -t / Rational::from_integer((k as i64).into());
        }
        Ok(UniPoly::new(coeffs))
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Rows as vectors of canonical rational strings.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.row_vectors().map(|r| r.iter().map(format_rational).collect()).collect()
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells = self.to_strings();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}
