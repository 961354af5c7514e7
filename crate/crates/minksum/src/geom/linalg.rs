//! Dimension-generic facade over the fixed-size nalgebra types used here.
//!
//! The closed-form algorithms are written once, generic over the workspace
//! dimension. These two traits expose exactly the vector and matrix
//! operations those algorithms need, implemented for the 2D and 3D
//! nalgebra types.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::{Cholesky, Matrix2, Matrix3, Vector2, Vector3};

use crate::error::{Error, Result};

/// Fixed-size real vector operations shared by `Vector2<f64>` and `Vector3<f64>`.
pub trait VectorOps:
    Copy
    + Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Neg<Output = Self>
    + Mul<f64, Output = Self>
    + 'static
{
    const DIM: usize;

    fn zeros() -> Self;
    fn from_slice(s: &[f64]) -> Self;
    fn as_slice(&self) -> &[f64];
    fn dot(&self, other: &Self) -> f64;
    fn norm(&self) -> f64;
    /// Appends the components of the cross product to `out`:
    /// one scalar in 2D, three components in 3D.
    fn cross_terms(&self, other: &Self, out: &mut Vec<f64>);
    fn all_finite(&self) -> bool;

    fn unit(&self) -> Self {
        *self * (1.0 / self.norm())
    }
}

impl VectorOps for Vector2<f64> {
    const DIM: usize = 2;

    fn zeros() -> Self {
        Vector2::zeros()
    }

    fn from_slice(s: &[f64]) -> Self {
        Vector2::from_column_slice(s)
    }

    fn as_slice(&self) -> &[f64] {
        self.data.as_slice()
    }

    fn dot(&self, other: &Self) -> f64 {
        Vector2::dot(self, other)
    }

    fn norm(&self) -> f64 {
        Vector2::norm(self)
    }

    fn cross_terms(&self, other: &Self, out: &mut Vec<f64>) {
        out.push(self.x * other.y - self.y * other.x);
    }

    fn all_finite(&self) -> bool {
        self.iter().all(|v| v.is_finite())
    }
}

impl VectorOps for Vector3<f64> {
    const DIM: usize = 3;

    fn zeros() -> Self {
        Vector3::zeros()
    }

    fn from_slice(s: &[f64]) -> Self {
        Vector3::from_column_slice(s)
    }

    fn as_slice(&self) -> &[f64] {
        self.data.as_slice()
    }

    fn dot(&self, other: &Self) -> f64 {
        Vector3::dot(self, other)
    }

    fn norm(&self) -> f64 {
        Vector3::norm(self)
    }

    fn cross_terms(&self, other: &Self, out: &mut Vec<f64>) {
        let c = Vector3::cross(self, other);
        out.extend_from_slice(&[c.x, c.y, c.z]);
    }

    fn all_finite(&self) -> bool {
        self.iter().all(|v| v.is_finite())
    }
}

/// Fixed-size square matrix operations shared by `Matrix2<f64>` and `Matrix3<f64>`.
pub trait MatrixOps:
    Copy + Clone + Debug + PartialEq + Send + Sync + Mul<Output = Self> + 'static
{
    type Vec: VectorOps;

    fn identity() -> Self;
    fn transpose(&self) -> Self;
    fn try_inverse(&self) -> Option<Self>;
    fn determinant(&self) -> f64;
    fn mul_vec(&self, v: &Self::Vec) -> Self::Vec;
    fn frobenius(&self) -> f64;
    /// Builds a matrix from row-major nested slices; errors on shape mismatch.
    fn from_rows(rows: &[Vec<f64>]) -> Result<Self>;
    fn to_rows(&self) -> Vec<Vec<f64>>;
    /// Symmetric within `tol` (relative) and positive definite.
    fn is_spd(&self, tol: f64) -> bool;
}

impl MatrixOps for Matrix2<f64> {
    type Vec = Vector2<f64>;

    fn identity() -> Self {
        Matrix2::identity()
    }

    fn transpose(&self) -> Self {
        Matrix2::transpose(self)
    }

    fn try_inverse(&self) -> Option<Self> {
        Matrix2::try_inverse(*self)
    }

    fn determinant(&self) -> f64 {
        Matrix2::determinant(self)
    }

    fn mul_vec(&self, v: &Self::Vec) -> Self::Vec {
        self * v
    }

    fn frobenius(&self) -> f64 {
        self.norm()
    }

    fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        check_rows(rows, 2)?;
        Ok(Matrix2::new(rows[0][0], rows[0][1], rows[1][0], rows[1][1]))
    }

    fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..2).map(|i| (0..2).map(|j| self[(i, j)]).collect()).collect()
    }

    fn is_spd(&self, tol: f64) -> bool {
        is_symmetric(self, tol) && Cholesky::new(*self).is_some()
    }
}

impl MatrixOps for Matrix3<f64> {
    type Vec = Vector3<f64>;

    fn identity() -> Self {
        Matrix3::identity()
    }

    fn transpose(&self) -> Self {
        Matrix3::transpose(self)
    }

    fn try_inverse(&self) -> Option<Self> {
        Matrix3::try_inverse(*self)
    }

    fn determinant(&self) -> f64 {
        Matrix3::determinant(self)
    }

    fn mul_vec(&self, v: &Self::Vec) -> Self::Vec {
        self * v
    }

    fn frobenius(&self) -> f64 {
        self.norm()
    }

    fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        check_rows(rows, 3)?;
        Ok(Matrix3::new(
            rows[0][0], rows[0][1], rows[0][2], rows[1][0], rows[1][1], rows[1][2], rows[2][0],
            rows[2][1], rows[2][2],
        ))
    }

    fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..3).map(|i| (0..3).map(|j| self[(i, j)]).collect()).collect()
    }

    fn is_spd(&self, tol: f64) -> bool {
        is_symmetric(self, tol) && Cholesky::new(*self).is_some()
    }
}

fn check_rows(rows: &[Vec<f64>], dim: usize) -> Result<()> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(Error::BodyFormat {
            field: "M".into(),
            message: format!("expected a {dim}x{dim} row-major matrix"),
        });
    }
    if rows.iter().flatten().any(|v| !v.is_finite()) {
        return Err(Error::BodyFormat {
            field: "M".into(),
            message: "matrix entries must be finite".into(),
        });
    }
    Ok(())
}

fn is_symmetric<M: MatrixOps>(m: &M, tol: f64) -> bool {
    let rows = m.to_rows();
    let scale = 1.0 + m.frobenius();
    for i in 0..rows.len() {
        for j in (i + 1)..rows.len() {
            if (rows[i][j] - rows[j][i]).abs() > tol * scale {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_terms_match_hand_values() {
        let mut out = Vec::new();
        Vector2::new(1.0, 0.0).cross_terms(&Vector2::new(0.0, 2.0), &mut out);
        assert_eq!(out, vec![2.0]);

        out.clear();
        Vector3::new(1.0, 0.0, 0.0).cross_terms(&Vector3::new(0.0, 1.0, 0.0), &mut out);
        assert_eq!(out, vec![0.0, 0.0, 1.0]);
    }

    #[test]
    fn spd_detects_asymmetry_and_indefiniteness() {
        assert!(Matrix2::new(2.0, 0.1, 0.1, 1.0).is_spd(1e-9));
        assert!(!Matrix2::new(2.0, 0.3, 0.1, 1.0).is_spd(1e-9));
        assert!(!Matrix2::new(-2.0, 0.0, 0.0, 1.0).is_spd(1e-9));
    }

    #[test]
    fn row_round_trip() {
        let m = Matrix3::new(1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 10.0);
        let rows = m.to_rows();
        assert_eq!(<Matrix3<f64> as MatrixOps>::from_rows(&rows).unwrap(), m);
        assert!(<Matrix3<f64> as MatrixOps>::from_rows(&rows[..2]).is_err());
    }
}
