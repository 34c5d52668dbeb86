//! Pointwise tensor types: vectors, symmetric 2-tensors, and 2-forms.

use nalgebra::{Matrix4, Vector6};

use crate::basis::PAIRS;
use crate::error::{CurvError, Result};

/// Frame coordinates of a tangent vector.
pub type Vec4 = nalgebra::Vector4<f64>;

/// A symmetric 2-tensor on the frame, with a cached traceless flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymTensor2 {
    entries: Matrix4<f64>,
    traceless: bool,
}

impl SymTensor2 {
    /// Wraps an exactly symmetric matrix; rejects anything else.
    pub fn from_matrix(m: Matrix4<f64>) -> Result<Self> {
        if m != m.transpose() {
            return Err(CurvError::SymmetryViolation {
                detail: "symmetric 2-tensor entries must satisfy a[i][j] == a[j][i]".into(),
            });
        }
        Ok(Self::new_unchecked(m))
    }

    /// (m + mᵀ)/2. Used for products whose symmetry holds only in exact arithmetic.
    pub fn symmetrized(m: Matrix4<f64>) -> Self {
        Self::new_unchecked((m + m.transpose()) * 0.5)
    }

    fn new_unchecked(entries: Matrix4<f64>) -> Self {
        let traceless = entries.trace().abs() <= 1e-12 * (entries.norm() + 1.0);
        Self { entries, traceless }
    }

    pub fn zero() -> Self {
        Self::new_unchecked(Matrix4::zeros())
    }

    /// The metric g = I in an orthonormal frame.
    pub fn metric() -> Self {
        Self::new_unchecked(Matrix4::identity())
    }

    pub fn from_diagonal(d: [f64; 4]) -> Self {
        Self::new_unchecked(Matrix4::from_diagonal(&d.into()))
    }

    pub fn matrix(&self) -> Matrix4<f64> {
        self.entries
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.entries[(i, j)]
    }

    pub fn trace(&self) -> f64 {
        self.entries.trace()
    }

    /// Full contraction ⟨a, b⟩ = Tr(aᵀb).
    pub fn inner(&self, other: &Self) -> f64 {
        (self.entries.transpose() * other.entries).trace()
    }

    pub fn norm_sq(&self) -> f64 {
        self.inner(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn is_traceless(&self) -> bool {
        self.traceless
    }

    /// a − (Tr a / 4) g.
    pub fn traceless_part(&self) -> Self {
        let t = self.trace() / 4.0;
        Self::new_unchecked(self.entries - Matrix4::identity() * t)
    }

    pub fn scale(&self, c: f64) -> Self {
        Self::new_unchecked(self.entries * c)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new_unchecked(self.entries + other.entries)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new_unchecked(self.entries - other.entries)
    }

    /// Applies the tensor to a vector.
    pub fn apply(&self, v: &Vec4) -> Vec4 {
        self.entries * v
    }
}

/// A 2-form, stored as coefficients over the ordered basis e12, …, e34.
///
/// The matrix and coefficient views are exact copies of one another.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoForm {
    coeffs: Vector6<f64>,
}

impl TwoForm {
    pub fn from_coeffs(coeffs: Vector6<f64>) -> Self {
        Self { coeffs }
    }

    /// Reads an exactly antisymmetric matrix; rejects anything else.
    pub fn from_matrix(m: Matrix4<f64>) -> Result<Self> {
        if m != -m.transpose() {
            return Err(CurvError::SymmetryViolation {
                detail: "2-form entries must satisfy a[i][j] == -a[j][i]".into(),
            });
        }
        Ok(Self::from_matrix_unchecked(m))
    }

    pub(crate) fn from_matrix_unchecked(m: Matrix4<f64>) -> Self {
        let mut coeffs = Vector6::zeros();
        for (a, &(i, j)) in PAIRS.iter().enumerate() {
            coeffs[a] = m[(i, j)];
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> Vector6<f64> {
        self.coeffs
    }

    pub fn as_matrix(&self) -> Matrix4<f64> {
        let mut m = Matrix4::zeros();
        for (a, &(i, j)) in PAIRS.iter().enumerate() {
            m[(i, j)] = self.coeffs[a];
            m[(j, i)] = -self.coeffs[a];
        }
        m
    }

    /// ⟨α, β⟩ = ½ Tr(αᵀβ); the ordered basis is orthonormal for this product.
    pub fn inner(&self, other: &Self) -> f64 {
        self.coeffs.dot(&other.coeffs)
    }

    pub fn norm(&self) -> f64 {
        self.coeffs.norm()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_form_round_trip_is_exact() {
        let mut m = Matrix4::zeros();
        let vals = [0.25, -1.5, 3.0, 0.1, -0.7, 2.25];
        for (a, &(i, j)) in PAIRS.iter().enumerate() {
            m[(i, j)] = vals[a];
            m[(j, i)] = -vals[a];
        }
        let f = TwoForm::from_matrix(m).unwrap();
        assert_eq!(f.as_matrix(), m);
        let g = TwoForm::from_coeffs(f.coeffs());
        assert_eq!(g.as_matrix(), m);
    }

    #[test]
    fn two_form_inner_is_half_trace() {
        let a = TwoForm::from_matrix_unchecked(crate::basis::elementary_form(0, 1) * 2.0);
        let b = TwoForm::from_matrix_unchecked(crate::basis::elementary_form(0, 1) * 3.0);
        let half_trace = 0.5 * (a.as_matrix().transpose() * b.as_matrix()).trace();
        assert_eq!(a.inner(&b), half_trace);
        assert_eq!(a.inner(&b), 6.0);
    }

    #[test]
    fn asymmetric_input_is_rejected() {
        let mut m = Matrix4::identity();
        m[(0, 1)] = 1.0;
        assert!(SymTensor2::from_matrix(m).is_err());
        assert!(TwoForm::from_matrix(m).is_err());
    }

    #[test]
    fn traceless_flag_and_projection() {
        let g = SymTensor2::metric();
        assert!(!g.is_traceless());
        assert!(g.traceless_part().norm() < 1e-15);
        let a = SymTensor2::from_diagonal([1.0, -1.0, 2.0, -2.0]);
        assert!(a.is_traceless());
    }
}
