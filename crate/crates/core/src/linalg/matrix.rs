use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::error::{Error, Result};

/// Bound on matrix entry types: exact signed integers.
pub trait Entry: Integer + Signed + Clone + fmt::Debug + Send + Sync {}

impl<T: Integer + Signed + Clone + fmt::Debug + Send + Sync> Entry for T {}

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

/// Arbitrary-precision integer matrix.
pub type IntegerMatrix = Matrix<BigInt>;

impl<T: Entry> Matrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = T::one();
        }
        m
    }

    pub fn diagonal(rows: usize, cols: usize, diag: &[T]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, d) in diag.iter().enumerate().take(rows.min(cols)) {
            m.entries[i * cols + i] = d.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(i) = rows.iter().position(|row| row.len() != c) {
            return Err(Error::Dimension(format!("row {i} has length {}, expected {c}", rows[i].len())));
        }
        Ok(Self { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: T) {
        let e = &mut self.entries[r * self.cols + c];
        *e = e.clone() + v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(T::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.entries[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    /// Matrix product; zero entries of `self` are skipped, which pays off on
    /// the very sparse coboundary matrices.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.add_to(r, c, a.clone() * b.clone());
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Dimension("shape mismatch in subtraction".into()));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.clone() - b.clone()).collect();
        Ok(Self { rows: self.rows, cols: self.cols, entries })
    }

    /// Columns of `self` followed by columns of `other`.
    pub fn hconcat(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::Dimension("row counts differ in horizontal concatenation".into()));
        }
        let cols = self.cols + other.cols;
        let mut out = Self::zeros(self.rows, cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.entries[r * cols + c] = self.get(r, c).clone();
            }
            for c in 0..other.cols {
                out.entries[r * cols + self.cols + c] = other.get(r, c).clone();
            }
        }
        Ok(out)
    }

    /// Submatrix of the given row and column ranges.
    pub fn block(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let mut out = Self::zeros(rows.len(), cols.len());
        for (i, r) in rows.clone().enumerate() {
            for (j, c) in cols.clone().enumerate() {
                out.entries[i * out.cols + j] = self.get(r, c).clone();
            }
        }
        out
    }

    /// Keep the listed rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut out = Self::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                out.entries[i * out.cols + j] = self.get(r, c).clone();
            }
        }
        out
    }

    pub fn map<U: Entry>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<T> {
        if self.rows != self.cols {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut a = self.to_rows();
        let mut sign = T::one();
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(T::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                    a[i][j] = v / prev.clone();
                }
            }
            prev = a[k][k].clone();
        }
        Ok(sign * a[n - 1][n - 1].clone())
    }
}

impl Matrix<i64> {
    pub fn to_bigint(&self) -> IntegerMatrix {
        self.map(|&v| BigInt::from(v))
    }
}

impl<T: Entry + fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<T: Entry + fmt::Display> serde::Serialize for Matrix<T> {
    /// Serialized as a list of rows of decimal integers; big entries are
    /// emitted as strings to avoid silent precision loss in JSON readers.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.rows))?;
        for r in 0..self.rows {
            let row: Vec<serde_json::Value> = self
                .row(r)
                .iter()
                .map(|v| {
                    let text = v.to_string();
                    match text.parse::<i64>() {
                        Ok(x) => serde_json::Value::from(x),
                        Err(_) => serde_json::Value::String(text),
                    }
                })
                .collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: Vec<Vec<i64>>) -> Matrix<i64> {
        Matrix::from_rows(rows).unwrap()
    }

    #[test]
    fn product_and_transpose() {
        let a = m(vec![vec![1, 2], vec![3, 4]]);
        let b = m(vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(a.mul(&b).unwrap(), m(vec![vec![2, 1], vec![4, 3]]));
        assert_eq!(a.transpose(), m(vec![vec![1, 3], vec![2, 4]]));
        assert!(a.mul(&Matrix::zeros(3, 1)).is_err());
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(Matrix::<i64>::from_rows(vec![vec![1, 2], vec![3]]).is_err());
        assert!(Matrix::<i64>::new(2, 2, vec![1, 2, 3]).is_err());
    }

    #[test]
    fn bareiss_determinant() {
        assert_eq!(m(vec![vec![2, 0], vec![0, 3]]).determinant().unwrap(), 6);
        assert_eq!(m(vec![vec![0, 1], vec![1, 0]]).determinant().unwrap(), -1);
        assert_eq!(m(vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]).determinant().unwrap(), -3);
        assert_eq!(m(vec![vec![1, 2], vec![2, 4]]).determinant().unwrap(), 0);
        assert_eq!(Matrix::<i64>::identity(0).determinant().unwrap(), 1);
    }

    #[test]
    fn concat_and_blocks() {
        let a = m(vec![vec![1, 2], vec![3, 4]]);
        let i = Matrix::identity(2);
        let c = a.hconcat(&i).unwrap();
        assert_eq!(c.cols(), 4);
        assert_eq!(c.block(0..2, 2..4), i);
        assert_eq!(a.select(&[1], &[0, 1]), m(vec![vec![3, 4]]));
    }
}
