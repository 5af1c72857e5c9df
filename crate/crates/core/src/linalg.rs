//! Dense real vectors and matrices.
//!
//! Values are immutable after construction; every operation returns a new
//! value. Row and column vectors share one type and differ only in their
//! [`Orientation`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Comparison tolerance used wherever an operation does not state its own.
pub const EPS_ZERO: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Column,
    Row,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Vector {
    entries: Vec<f64>,
    orientation: Orientation,
}

impl Vector {
    /// Column vector. Fails on an empty entry list.
    pub fn new(entries: Vec<f64>) -> Result<Self> {
        Self::with_orientation(entries, Orientation::Column)
    }

    pub fn row(entries: Vec<f64>) -> Result<Self> {
        Self::with_orientation(entries, Orientation::Row)
    }

    pub fn with_orientation(entries: Vec<f64>, orientation: Orientation) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Empty("vector needs at least one entry"));
        }
        Ok(Vector {
            entries,
            orientation,
        })
    }

    pub fn zeros(n: usize) -> Result<Self> {
        Self::new(vec![0.0; n])
    }

    /// The `k`-th canonical unit vector of dimension `n` (0-based).
    pub fn unit(n: usize, k: usize) -> Result<Self> {
        if k >= n {
            return Err(Error::dims(format!("unit index {k} outside dimension {n}")));
        }
        let mut e = vec![0.0; n];
        e[k] = 1.0;
        Self::new(e)
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<f64> {
        self.entries
    }

    pub fn get(&self, i: usize) -> f64 {
        self.entries[i]
    }

    pub fn transpose(&self) -> Vector {
        let orientation = match self.orientation {
            Orientation::Column => Orientation::Row,
            Orientation::Row => Orientation::Column,
        };
        Vector {
            entries: self.entries.clone(),
            orientation,
        }
    }

    pub fn scale(&self, lambda: f64) -> Vector {
        Vector {
            entries: self.entries.iter().map(|a| lambda * a).collect(),
            orientation: self.orientation,
        }
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        linear_combination(&[1.0, 1.0], &[self.clone(), other.clone()])
    }

    /// Scalar product `selfᵀ·other` of a row vector with a column vector.
    pub fn dot(&self, other: &Vector) -> Result<f64> {
        if self.orientation != Orientation::Row || other.orientation != Orientation::Column {
            return Err(Error::dims(
                "scalar product needs a row vector times a column vector",
            ));
        }
        self.inner(other)
    }

    /// Scalar product ignoring orientation (transposes as needed).
    pub fn inner(&self, other: &Vector) -> Result<f64> {
        if self.dim() != other.dim() {
            return Err(Error::dims(format!(
                "scalar product of dimensions {} and {}",
                self.dim(),
                other.dim()
            )));
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a * b)
            .sum())
    }

    pub fn norm(&self) -> f64 {
        self.entries.iter().map(|a| a * a).sum::<f64>().sqrt()
    }

    pub fn normalized(&self) -> Result<Vector> {
        let len = self.norm();
        if len == 0.0 {
            return Err(Error::ZeroVector);
        }
        Ok(self.scale(1.0 / len))
    }

    /// Enclosed angle in radians, in `[0, π]`.
    pub fn angle(&self, other: &Vector) -> Result<f64> {
        let a = self.normalized()?;
        let b = other.normalized()?;
        let cos = a.inner(&b)?.clamp(-1.0, 1.0);
        Ok(cos.acos())
    }

    pub fn is_orthogonal(&self, other: &Vector) -> Result<bool> {
        Ok(self.inner(other)?.abs() <= EPS_ZERO)
    }

    /// Column vector as an n×1 matrix, row vector as a 1×n matrix.
    pub fn to_matrix(&self) -> Matrix {
        let n = self.dim();
        match self.orientation {
            Orientation::Column => Matrix {
                rows: n,
                cols: 1,
                data: self.entries.clone(),
            },
            Orientation::Row => Matrix {
                rows: 1,
                cols: n,
                data: self.entries.clone(),
            },
        }
    }
}

/// `Σ λᵢ·vᵢ` over vectors of equal dimension and orientation.
pub fn linear_combination(coeffs: &[f64], vectors: &[Vector]) -> Result<Vector> {
    if coeffs.is_empty() || vectors.is_empty() {
        return Err(Error::Empty("linear combination needs at least one term"));
    }
    if coeffs.len() != vectors.len() {
        return Err(Error::dims(format!(
            "{} coefficients for {} vectors",
            coeffs.len(),
            vectors.len()
        )));
    }
    let first = &vectors[0];
    let mut out = vec![0.0; first.dim()];
    for (lambda, v) in coeffs.iter().zip(vectors) {
        if v.dim() != first.dim() || v.orientation != first.orientation {
            return Err(Error::dims(
                "linear combination needs vectors of one dimension and orientation",
            ));
        }
        for (o, a) in out.iter_mut().zip(&v.entries) {
            *o += lambda * a;
        }
    }
    Ok(Vector {
        entries: out,
        orientation: first.orientation,
    })
}

/// Dense real-valued m×n matrix, row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Empty("matrix needs at least one row and one column"));
        }
        if data.len() != rows * cols {
            return Err(Error::dims(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::dims("rows of unequal length"));
        }
        Self::new(m, n, rows.concat())
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, vec![0.0; rows * cols])
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zeros(n, n)?;
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        Ok(m)
    }

    pub fn diagonal(diag: &[f64]) -> Result<Self> {
        let n = diag.len();
        let mut m = Self::zeros(n, n)?;
        for (i, d) in diag.iter().enumerate() {
            m.data[i * n + i] = *d;
        }
        Ok(m)
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

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j));
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Entrywise `α·A + β·B` for matrices of one format.
    pub fn combine(alpha: f64, a: &Matrix, beta: f64, b: &Matrix) -> Result<Matrix> {
        if a.rows != b.rows || a.cols != b.cols {
            return Err(Error::dims(format!(
                "cannot combine {}x{} with {}x{}",
                a.rows, a.cols, b.rows, b.cols
            )));
        }
        let data = a
            .data
            .iter()
            .zip(&b.data)
            .map(|(x, y)| alpha * x + beta * y)
            .collect();
        Ok(Matrix {
            rows: a.rows,
            cols: a.cols,
            data,
        })
    }

    pub fn scale(&self, lambda: f64) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| lambda * x).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        Self::combine(1.0, self, 1.0, other)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        Self::combine(1.0, self, -1.0, other)
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::dims(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = vec![0.0; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        Ok(Matrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    /// `A·x` for a column vector `x`.
    pub fn mul_vec(&self, x: &Vector) -> Result<Vector> {
        if x.dim() != self.cols {
            return Err(Error::dims(format!(
                "cannot apply {}x{} matrix to vector of dimension {}",
                self.rows,
                self.cols,
                x.dim()
            )));
        }
        let entries = (0..self.rows)
            .map(|i| self.row(i).iter().zip(x.entries()).map(|(a, b)| a * b).sum())
            .collect();
        Vector::new(entries)
    }

    pub fn max_abs_diff(&self, other: &Matrix) -> Option<f64> {
        if self.rows != other.rows || self.cols != other.cols {
            return None;
        }
        Some(
            self.data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max),
        )
    }

    pub fn approx_eq(&self, other: &Matrix, tol: f64) -> bool {
        self.max_abs_diff(other).is_some_and(|d| d <= tol)
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| (self.get(i, j) - self.get(j, i)).abs() <= tol))
    }
}

impl fmt::Display for Matrix {
    /// Shared matrix text format: one row per line, comma separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|v| format_real(*v)).collect();
            writeln!(f, "{}", line.join(","))?;
        }
        Ok(())
    }
}

/// Shortest round-trip decimal representation, `-0` printed as `0`.
/// Very small and very large magnitudes use exponent notation.
pub fn format_real(v: f64) -> String {
    let a = v.abs();
    if v == 0.0 {
        "0".to_string()
    } else if a < 1e-5 || (a >= 1e16 && a.is_finite()) {
        format!("{v:e}")
    } else {
        format!("{v}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    fn v(e: &[f64]) -> Vector {
        Vector::new(e.to_vec()).unwrap()
    }

    fn m(rows: &[&[f64]]) -> Matrix {
        Matrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn linear_combination_examples() {
        let sum = linear_combination(&[1.0, 1.0], &[v(&[1.0, 2.0]), v(&[3.0, 4.0])]).unwrap();
        assert_eq!(sum.entries(), &[4.0, 6.0]);
        let zero = linear_combination(&[0.0], &[v(&[5.0, 7.0])]).unwrap();
        assert_eq!(zero.entries(), &[0.0, 0.0]);
        let basis = linear_combination(&[2.0, -1.0], &[v(&[1.0, 0.0]), v(&[0.0, 1.0])]).unwrap();
        assert_eq!(basis.entries(), &[2.0, -1.0]);
    }

    #[test]
    fn linear_combination_errors() {
        assert!(matches!(
            linear_combination(&[], &[]),
            Err(Error::Empty(_))
        ));
        assert!(matches!(
            linear_combination(&[1.0, 1.0], &[v(&[1.0]), v(&[1.0, 2.0])]),
            Err(Error::DimensionMismatch(_))
        ));
        let row = Vector::row(vec![1.0]).unwrap();
        assert!(linear_combination(&[1.0, 1.0], &[v(&[1.0]), row]).is_err());
    }

    #[test]
    fn dot_examples() {
        let e1 = Vector::unit(3, 0).unwrap();
        assert_eq!(e1.transpose().dot(&e1).unwrap(), 1.0);
        assert_eq!(v(&[1.0, 2.0]).transpose().dot(&v(&[3.0, 4.0])).unwrap(), 11.0);
        assert!(v(&[1.0, 0.0]).is_orthogonal(&v(&[0.0, 1.0])).unwrap());
        // column·column is rejected by the strict form, accepted by `inner`
        assert!(v(&[1.0]).dot(&v(&[1.0])).is_err());
        assert_eq!(v(&[2.0]).inner(&v(&[3.0])).unwrap(), 6.0);
        assert!(v(&[1.0, 2.0]).inner(&v(&[1.0])).is_err());
    }

    #[test]
    fn norm_examples() {
        assert_eq!(v(&[3.0, 4.0]).norm(), 5.0);
        assert_eq!(Vector::zeros(3).unwrap().norm(), 0.0);
        assert_eq!(v(&[1.0, 0.0]).scale(-2.0).norm(), 2.0);
    }

    #[test]
    fn angle_examples() {
        let a = v(&[1.0, 0.0]);
        assert!((a.angle(&v(&[0.0, 1.0])).unwrap() - FRAC_PI_2).abs() < 1e-15);
        assert_eq!(v(&[2.0, 0.0]).angle(&v(&[5.0, 0.0])).unwrap(), 0.0);
        assert!((a.angle(&v(&[1.0, 1.0])).unwrap() - FRAC_PI_4).abs() < 1e-15);
        assert_eq!(a.angle(&Vector::zeros(2).unwrap()), Err(Error::ZeroVector));
    }

    #[test]
    fn transpose_twice_is_identity() {
        let a = Vector::row(vec![1.0, 2.0]).unwrap();
        assert_eq!(a.transpose().transpose(), a);
        let b = m(&[&[1.0, 2.0, 3.0], &[4.0, 5.0, 6.0]]);
        assert_eq!(b.transpose().transpose(), b);
        assert_eq!(b.transpose().rows(), 3);
    }

    #[test]
    fn combine_examples() {
        let a = m(&[&[1.0, 2.0], &[3.0, 4.0]]);
        let zero = Matrix::zeros(2, 2).unwrap();
        assert_eq!(Matrix::combine(1.0, &a, 1.0, &zero).unwrap(), a);
        assert_eq!(
            Matrix::combine(2.0, &a, 0.0, &Matrix::identity(2).unwrap()).unwrap(),
            m(&[&[2.0, 4.0], &[6.0, 8.0]])
        );
        assert_eq!(
            Matrix::combine(1.0, &m(&[&[1.0, 0.0]]), 1.0, &m(&[&[0.0, 1.0]])).unwrap(),
            m(&[&[1.0, 1.0]])
        );
        assert!(Matrix::combine(1.0, &a, 1.0, &m(&[&[1.0, 0.0]])).is_err());
    }

    #[test]
    fn mul_examples() {
        let col = m(&[&[5.0], &[7.0]]);
        assert_eq!(Matrix::identity(2).unwrap().mul(&col).unwrap(), col);
        assert_eq!(
            m(&[&[1.0, 2.0], &[3.0, 4.0]]).mul(&m(&[&[0.0], &[1.0]])).unwrap(),
            m(&[&[2.0], &[4.0]])
        );
        let nil = m(&[&[0.0, 1.0], &[0.0, 0.0]]);
        assert_eq!(nil.mul(&nil).unwrap(), Matrix::zeros(2, 2).unwrap());
        assert!(col.mul(&col).is_err());
    }

    #[test]
    fn empty_inputs_rejected() {
        assert!(Vector::new(vec![]).is_err());
        assert!(Matrix::new(0, 3, vec![]).is_err());
        assert!(Matrix::new(2, 2, vec![1.0]).is_err());
        assert!(Matrix::from_rows(&[vec![1.0], vec![1.0, 2.0]]).is_err());
    }

    #[test]
    fn display_uses_shared_text_format() {
        let a = m(&[&[1.0, -0.5], &[0.0, 2.25]]);
        assert_eq!(a.to_string(), "1,-0.5\n0,2.25\n");
    }
}
