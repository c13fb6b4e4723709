//! Incremental fraction-free row reduction.
//!
//! Rows are kept as primitive integer vectors in (non-reduced) echelon form,
//! sorted by leading column. A new row is reduced against the stored rows in
//! ascending pivot order; whatever survives becomes a new pivot row. The
//! final reduced row echelon form is unique for the spanned row space, so the
//! insertion order never affects [`Echelon::into_rref`].

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::matrix::Matrix;
use super::rational::{make_primitive, primitive_integer_row, Rational};

#[derive(Clone, Debug)]
pub(crate) struct Echelon {
    cols: usize,
    // (pivot column, primitive row); sorted by pivot column
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Self { cols, rows: Vec::new() }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Adds `v` to the spanning set. Returns `true` if the rank grew.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.cols, "row length mismatch");
        if self.is_full() {
            return false;
        }
        let row = primitive_integer_row(v);
        self.insert_integer(row)
    }

    pub fn insert_integer(&mut self, mut w: Vec<BigInt>) -> bool {
        if self.is_full() {
            return false;
        }
        for (pivot, row) in &self.rows {
            let p = *pivot;
            if w[p].is_zero() {
                continue;
            }
            let a = row[p].clone();
            let b = w[p].clone();
            for j in 0..self.cols {
                let wj = if a.is_one() { w[j].clone() } else { &a * &w[j] };
                w[j] = if row[j].is_zero() { wj } else { wj - &b * &row[j] };
            }
            make_primitive(&mut w);
        }
        let Some(lead) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        make_primitive(&mut w);
        let at = self.rows.partition_point(|(p, _)| *p < lead);
        self.rows.insert(at, (lead, w));
        true
    }

    /// The stored primitive integer rows, unreduced.
    pub fn into_rows(self) -> Vec<Vec<Rational>> {
        self.rows.into_iter().map(|(_, r)| r.into_iter().map(Rational::from_integer).collect()).collect()
    }

    /// Reduced row echelon form of the spanned space, with its pivot columns.
    pub fn into_rref(self) -> (Matrix, Vec<usize>) {
        let cols = self.cols;
        let pivots: Vec<usize> = self.rows.iter().map(|(p, _)| *p).collect();
        let mut rows: Vec<Vec<Rational>> = self
            .rows
            .into_iter()
            .map(|(p, r)| {
                let lead = Rational::from_integer(r[p].clone());
                r.into_iter().map(|x| Rational::from_integer(x) / &lead).collect()
            })
            .collect();
        for i in (0..rows.len()).rev() {
            let p = pivots[i];
            let (above, rest) = rows.split_at_mut(i);
            let pivot_row = &rest[0];
            for row in above.iter_mut() {
                if row[p].is_zero() {
                    continue;
                }
                let factor = row[p].clone();
                for j in p..cols {
                    if !pivot_row[j].is_zero() {
                        row[j] -= &factor * &pivot_row[j];
                    }
                }
            }
        }
        (Matrix::from_rows_unchecked(rows, cols), pivots)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::rat;

    #[test]
    fn rref_is_insertion_order_independent() {
        let vs = [vec![rat(1), rat(2), rat(3)], vec![rat(2), rat(4), rat(7)], vec![rat(0), rat(0), rat(5)]];
        let mut a = Echelon::new(3);
        let mut b = Echelon::new(3);
        for v in &vs {
            a.insert(v);
        }
        for v in vs.iter().rev() {
            b.insert(v);
        }
        assert_eq!(a.rank(), 2);
        assert_eq!(a.into_rref(), b.into_rref());
    }

    #[test]
    fn zero_rows_are_dropped() {
        let mut e = Echelon::new(2);
        assert!(!e.insert(&[rat(0), rat(0)]));
        assert!(e.insert(&[rat(0), rat(3)]));
        assert!(!e.insert(&[rat(0), rat(-1)]));
        let (m, pivots) = e.into_rref();
        assert_eq!(pivots, vec![1]);
        assert_eq!(m.row(0), &[rat(0), rat(1)]);
    }
}
