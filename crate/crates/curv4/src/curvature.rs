//! Algebraic curvature tensors as symmetric operators on 2-forms.
//!
//! A curvature tensor is stored as a symmetric 6×6 matrix over the ordered
//! 2-form basis. Pair symmetry and the antisymmetries are structural in this
//! representation; the first Bianchi identity collapses to the single scalar
//! `b(T) = T_1234 + T_1342 + T_1423`, exposed as [`CurvatureTensor::bianchi_residual`].

use nalgebra::Matrix4;

use crate::basis::{pair_position, Matrix6, PAIRS};
use crate::error::{CurvError, Result};
use crate::tensor::SymTensor2;

/// An algebraic curvature tensor in operator form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvatureTensor {
    m: Matrix6,
}

impl CurvatureTensor {
    /// Wraps a 6×6 matrix, requiring symmetry within `1e-12 · (‖m‖ + 1)`.
    /// The stored matrix is exactly symmetrized.
    pub fn from_matrix(m: Matrix6) -> Result<Self> {
        let defect = (m - m.transpose()).norm();
        if defect > 1e-12 * (m.norm() + 1.0) {
            return Err(CurvError::SymmetryViolation {
                detail: format!("operator matrix not symmetric (defect {defect:e})"),
            });
        }
        Ok(Self::from_matrix_unchecked(m))
    }

    pub(crate) fn from_matrix_unchecked(m: Matrix6) -> Self {
        Self {
            m: (m + m.transpose()) * 0.5,
        }
    }

    pub fn zero() -> Self {
        Self { m: Matrix6::zeros() }
    }

    pub fn matrix(&self) -> Matrix6 {
        self.m
    }

    /// The 4-index component T_{ijkl}, recovered by basis expansion.
    #[inline]
    pub fn component(&self, i: usize, j: usize, k: usize, l: usize) -> f64 {
        let (s1, a) = pair_position(i, j);
        if s1 == 0.0 {
            return 0.0;
        }
        let (s2, b) = pair_position(k, l);
        if s2 == 0.0 {
            return 0.0;
        }
        s1 * s2 * self.m[(a, b)]
    }

    /// Scalar residual of the first Bianchi identity.
    pub fn bianchi_residual(&self) -> f64 {
        self.m[(0, 5)] - self.m[(1, 4)] + self.m[(2, 3)]
    }

    /// Checks the Bianchi invariant at tolerance `1e-12 · (‖T‖ + 1)`.
    pub fn check_bianchi(&self) -> Result<()> {
        let b = self.bianchi_residual();
        if b.abs() > 1e-12 * (self.norm() + 1.0) {
            Err(CurvError::BianchiViolation { residual: b })
        } else {
            Ok(())
        }
    }

    /// Frobenius norm of the operator matrix (= ⟨T, T⟩^{1/2}).
    pub fn norm(&self) -> f64 {
        self.m.norm()
    }

    /// ⟨T₁, T₂⟩ = ¼ Σ_{ijkl} (T₁)_{ijkl}(T₂)_{ijkl}, evaluated as the full
    /// Frobenius product of the operator matrices.
    pub fn inner(&self, other: &Self) -> f64 {
        let mut acc = 0.0;
        for a in 0..6 {
            for b in 0..6 {
                acc += self.m[(a, b)] * other.m[(a, b)];
            }
        }
        acc
    }

    pub fn scale(&self, c: f64) -> Self {
        Self { m: self.m * c }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { m: self.m + other.m }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self { m: self.m - other.m }
    }

    /// Flattens to the 256-entry row-major 4-index array.
    pub fn to_flat(&self) -> [f64; 256] {
        let mut out = [0.0; 256];
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    for l in 0..4 {
                        out[flat_index(i, j, k, l)] = self.component(i, j, k, l);
                    }
                }
            }
        }
        out
    }

    /// Reads a flat 4-index array, checking the curvature symmetries at
    /// tolerance `1e-12 · (max|entry| + 1)`.
    pub fn from_flat(t: &[f64; 256]) -> Result<Self> {
        check_flat_symmetries(t)?;
        let mut m = Matrix6::zeros();
        for (a, &(i, j)) in PAIRS.iter().enumerate() {
            for (b, &(k, l)) in PAIRS.iter().enumerate() {
                m[(a, b)] = t[flat_index(i, j, k, l)];
            }
        }
        Ok(Self::from_matrix_unchecked(m))
    }

    /// Pullback by a frame change q: T'(x, y, z, w) = T(qx, qy, qz, qw).
    ///
    /// Orientation-preserving q leaves both spectral halves in place; a
    /// reflection exchanges them.
    pub fn frame_transform(&self, q: &Matrix4<f64>) -> Result<Self> {
        let defect = (q.transpose() * q - Matrix4::identity()).norm();
        if defect > 1e-12 * (q.norm_squared() + 1.0) {
            return Err(CurvError::NotOrthogonal { defect });
        }
        let v = two_form_pullback(q);
        Ok(Self::from_matrix_unchecked(v.transpose() * self.m * v))
    }
}

#[inline]
pub(crate) fn flat_index(i: usize, j: usize, k: usize, l: usize) -> usize {
    ((i * 4 + j) * 4 + k) * 4 + l
}

/// Induced action of a frame change on 2-forms: column A holds the
/// coefficients of qᵀ E_A q over the ordered basis.
pub fn two_form_pullback(q: &Matrix4<f64>) -> Matrix6 {
    let mut v = Matrix6::zeros();
    for (col, &(c, d)) in PAIRS.iter().enumerate() {
        for (row, &(i, j)) in PAIRS.iter().enumerate() {
            v[(row, col)] = q[(c, i)] * q[(d, j)] - q[(d, i)] * q[(c, j)];
        }
    }
    v
}

/// Verifies antisymmetry in both index pairs and pair symmetry.
pub(crate) fn check_flat_symmetries(t: &[f64; 256]) -> Result<()> {
    let scale = t.iter().fold(0.0_f64, |m, x| m.max(x.abs())) + 1.0;
    let tol = 1e-12 * scale;
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    let v = t[flat_index(i, j, k, l)];
                    let checks = [
                        (v + t[flat_index(j, i, k, l)], "antisymmetry in (i, j)"),
                        (v + t[flat_index(i, j, l, k)], "antisymmetry in (k, l)"),
                        (v - t[flat_index(k, l, i, j)], "pair symmetry"),
                    ];
                    for (residual, what) in checks {
                        if residual.abs() > tol {
                            return Err(CurvError::SymmetryViolation {
                                detail: format!(
                                    "{what} fails at ({i}, {j}, {k}, {l}) by {residual:e}"
                                ),
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Kulkarni–Nomizu product of two symmetric 2-tensors:
/// (A ⊙ B)_{ijkl} = A_{ik}B_{jl} + A_{jl}B_{ik} − A_{il}B_{jk} − A_{jk}B_{il}.
pub fn kulkarni_nomizu(a: &SymTensor2, b: &SymTensor2) -> CurvatureTensor {
    let (a, b) = (a.matrix(), b.matrix());
    let mut m = Matrix6::zeros();
    for (p, &(i, j)) in PAIRS.iter().enumerate() {
        for (q, &(k, l)) in PAIRS.iter().enumerate() {
            m[(p, q)] = a[(i, k)] * b[(j, l)] + a[(j, l)] * b[(i, k)]
                - a[(i, l)] * b[(j, k)]
                - a[(j, k)] * b[(i, l)];
        }
    }
    CurvatureTensor::from_matrix_unchecked(m)
}
