//! Minimal dense vectors and matrices over [`Scalar`].
//!
//! Everything here runs at desk scale (dimensions below ten), so plain dense
//! storage is the right trade: no sparsity bookkeeping, exact arithmetic,
//! deterministic iteration order.

use std::fmt;

use crate::scalar::Scalar;
use crate::Error;

/// A coordinate vector over the rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Vector {
    coords: Vec<Scalar>,
}

impl Vector {
    pub fn zero(dim: usize) -> Self {
        Vector {
            coords: vec![Scalar::zero(); dim],
        }
    }

    /// The `i`-th standard basis vector (0-based).
    pub fn basis(dim: usize, i: usize) -> Self {
        assert!(i < dim);
        let mut v = Vector::zero(dim);
        v.coords[i] = Scalar::one();
        v
    }

    pub fn from_coords(coords: Vec<Scalar>) -> Self {
        Vector { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }

    pub fn set(&mut self, i: usize, value: Scalar) {
        self.coords[i] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    /// Nonzero coordinates in index order.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
    }

    pub fn add_assign(&mut self, other: &Vector) {
        assert_eq!(self.dim(), other.dim());
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            *a += b;
        }
    }

    pub fn sub_assign(&mut self, other: &Vector) {
        assert_eq!(self.dim(), other.dim());
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            *a -= b;
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &Vector) {
        assert_eq!(self.dim(), other.dim());
        if c.is_zero() {
            return;
        }
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            if !b.is_zero() {
                *a += &(c * b);
            }
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Vector {
        Vector {
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub fn negated(&self) -> Vector {
        Vector {
            coords: self.coords.iter().map(|x| -x).collect(),
        }
    }

    pub fn sum(&self, other: &Vector) -> Vector {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn difference(&self, other: &Vector) -> Vector {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    /// Rational literals for serialization, one per coordinate.
    pub fn to_strings(&self) -> Vec<String> {
        self.coords.iter().map(Scalar::to_string).collect()
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A dense rows × cols matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let n = entries.len();
        let mut m = Matrix::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::dimension("ragged matrix rows"));
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.data[r * self.cols + c] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn column(&self, c: usize) -> Vector {
        Vector::from_coords((0..self.rows).map(|r| self.get(r, c).clone()).collect())
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.dim(), "matrix/vector dimension mismatch");
        let mut out = Vector::zero(self.rows);
        for (c, coeff) in v.support() {
            for r in 0..self.rows {
                let a = self.get(r, c);
                if !a.is_zero() {
                    let cur = out.get(r).clone();
                    out.set(r, cur + a * coeff);
                }
            }
        }
        out
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let cur = out.get(r, c).clone();
                        out.set(r, c, cur + a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        out
    }

    pub fn negated(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn to_row_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).to_string()).collect())
            .collect()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn apply_and_matmul_agree_on_basis() {
        let m = Matrix::from_rows(vec![
            vec![s(1), s(2)],
            vec![s(0), s(-1)],
            vec![s(3), s(0)],
        ])
        .unwrap();
        assert_eq!(m.apply(&Vector::basis(2, 0)), m.column(0));
        assert_eq!(m.apply(&Vector::basis(2, 1)), m.column(1));
        let id = Matrix::identity(2);
        assert_eq!(m.matmul(&id), m);
    }

    #[test]
    fn add_scaled_accumulates() {
        let mut v = Vector::zero(3);
        v.add_scaled(&s(2), &Vector::basis(3, 1));
        v.add_scaled(&Scalar::ratio(1, 2), &Vector::basis(3, 1));
        assert_eq!(v.get(1), &Scalar::ratio(5, 2));
    }
}
