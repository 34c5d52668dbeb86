//! Orthogonal decomposition of a curvature tensor into scalar, traceless
//! Ricci, and self-dual / anti-self-dual Weyl parts.
//!
//! In dimension four the decomposition reads
//! `T = (R/24) g⊙g + ½ Ric̊⊙g + W⁺ ⊕ W⁻`,
//! with the Weyl halves stored as symmetric traceless 3×3 blocks over the
//! orthonormal bases of Λ±. The three pieces are mutually orthogonal for the
//! curvature inner product, and `decompose`/`recompose` invert each other.

use nalgebra::Matrix3;

use crate::basis::{anti_self_dual_basis, self_dual_basis, Matrix6};
use crate::curvature::{kulkarni_nomizu, CurvatureTensor};
use crate::error::Result;
use crate::tensor::SymTensor2;

/// Curvature split into (R, Ric̊, W⁺, W⁻).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Decomposition {
    /// Scalar curvature R.
    pub scalar: f64,
    /// Traceless Ricci tensor.
    pub ric0: SymTensor2,
    /// Self-dual Weyl block in the basis ω_i/√2.
    pub wplus: Matrix3<f64>,
    /// Anti-self-dual Weyl block in the basis α_i/√2.
    pub wminus: Matrix3<f64>,
}

/// Ricci contraction Ric_{jl} = Σ_i T_{ijil}.
pub fn ricci_contraction(t: &CurvatureTensor) -> SymTensor2 {
    let mut m = nalgebra::Matrix4::zeros();
    for j in 0..4 {
        for l in 0..4 {
            let mut acc = 0.0;
            for i in 0..4 {
                acc += t.component(i, j, i, l);
            }
            m[(j, l)] = acc;
        }
    }
    SymTensor2::symmetrized(m)
}

/// Splits a Bianchi-satisfying curvature tensor into its orthogonal pieces.
pub fn decompose(t: &CurvatureTensor) -> Result<Decomposition> {
    t.check_bianchi()?;
    let ricci = ricci_contraction(t);
    let scalar = ricci.trace();
    let ric0 = ricci.traceless_part();

    let g = SymTensor2::metric();
    let scalar_part = kulkarni_nomizu(&g, &g).scale(scalar / 24.0);
    let ric_part = kulkarni_nomizu(&ric0, &g).scale(0.5);
    let weyl = t.sub(&scalar_part).sub(&ric_part);

    let up = self_dual_basis();
    let um = anti_self_dual_basis();
    let wm = weyl.matrix();
    Ok(Decomposition {
        scalar,
        ric0,
        wplus: up.transpose() * wm * up,
        wminus: um.transpose() * wm * um,
    })
}

/// Rebuilds the curvature tensor from its pieces.
pub fn recompose(d: &Decomposition) -> CurvatureTensor {
    let g = SymTensor2::metric();
    let scalar_part = kulkarni_nomizu(&g, &g).scale(d.scalar / 24.0);
    let ric_part = kulkarni_nomizu(&d.ric0, &g).scale(0.5);
    let up = self_dual_basis();
    let um = anti_self_dual_basis();
    let weyl: Matrix6 = up * d.wplus * up.transpose() + um * d.wminus * um.transpose();
    scalar_part
        .add(&ric_part)
        .add(&CurvatureTensor::from_matrix_unchecked(weyl))
}

impl Decomposition {
    pub fn zero() -> Self {
        Self {
            scalar: 0.0,
            ric0: SymTensor2::zero(),
            wplus: Matrix3::zeros(),
            wminus: Matrix3::zeros(),
        }
    }

    /// Eigenvalues λ₁ ≥ λ₂ ≥ λ₃ of the self-dual block (sum zero).
    pub fn self_dual_spectrum(&self) -> [f64; 3] {
        sym3_eigenvalues(&self.wplus)
    }

    /// Eigenvalues μ₁ ≥ μ₂ ≥ μ₃ of the anti-self-dual block.
    pub fn anti_self_dual_spectrum(&self) -> [f64; 3] {
        sym3_eigenvalues(&self.wminus)
    }

    /// det W⁺ = λ₁ λ₂ λ₃.
    pub fn self_dual_det(&self) -> f64 {
        let [a, b, c] = self.self_dual_spectrum();
        a * b * c
    }

    pub fn ric0_norm_sq(&self) -> f64 {
        self.ric0.norm_sq()
    }

    /// |W⁺|² = Σ λ_i², the squared Frobenius norm of the block.
    pub fn wplus_norm_sq(&self) -> f64 {
        self.wplus.norm_squared()
    }

    pub fn wminus_norm_sq(&self) -> f64 {
        self.wminus.norm_squared()
    }

    /// |Ric|² = |Ric̊|² + R²/4.
    pub fn ricci_norm_sq(&self) -> f64 {
        self.ric0_norm_sq() + self.scalar * self.scalar / 4.0
    }

    /// The self-dual Weyl half embedded back as a curvature tensor.
    pub fn self_dual_weyl_tensor(&self) -> CurvatureTensor {
        let up = self_dual_basis();
        CurvatureTensor::from_matrix_unchecked(up * self.wplus * up.transpose())
    }

    pub fn anti_self_dual_weyl_tensor(&self) -> CurvatureTensor {
        let um = anti_self_dual_basis();
        CurvatureTensor::from_matrix_unchecked(um * self.wminus * um.transpose())
    }
}

/// Pairing ⟨(a⊙a)⁺, W⁺⟩ between the self-dual parts, in the ¼-contraction
/// normalization of the curvature inner product. The trace part of `a` pairs
/// to zero, so only the traceless part matters.
pub fn weitzenbock_pairing(a: &SymTensor2, d: &Decomposition) -> f64 {
    d.self_dual_weyl_tensor().inner(&kulkarni_nomizu(a, a))
}

/// Closed-form eigenvalues of a symmetric 3×3 matrix, sorted descending.
///
/// Exactly diagonal input returns its sorted diagonal; otherwise the
/// trigonometric form of the characteristic roots is used. The arithmetic
/// depends on off-diagonal entries only through even products, so matrices
/// conjugate by a ±1 signature produce bit-identical spectra.
pub fn sym3_eigenvalues(m: &Matrix3<f64>) -> [f64; 3] {
    let p1 = m[(0, 1)] * m[(0, 1)] + m[(0, 2)] * m[(0, 2)] + m[(1, 2)] * m[(1, 2)];
    if p1 == 0.0 {
        return sorted3([m[(0, 0)], m[(1, 1)], m[(2, 2)]]);
    }
    let q = m.trace() / 3.0;
    let d0 = m[(0, 0)] - q;
    let d1 = m[(1, 1)] - q;
    let d2 = m[(2, 2)] - q;
    let p2 = d0 * d0 + d1 * d1 + d2 * d2 + 2.0 * p1;
    let p = (p2 / 6.0).sqrt();
    let b00 = d0 / p;
    let b11 = d1 / p;
    let b22 = d2 / p;
    let b01 = m[(0, 1)] / p;
    let b02 = m[(0, 2)] / p;
    let b12 = m[(1, 2)] / p;
    let det_b = b00 * (b11 * b22 - b12 * b12) - b01 * (b01 * b22 - b12 * b02)
        + b02 * (b01 * b12 - b11 * b02);
    let r = (det_b / 2.0).clamp(-1.0, 1.0);
    let phi = r.acos() / 3.0;
    let e1 = q + 2.0 * p * phi.cos();
    let e3 = q + 2.0 * p * (phi + 2.0 * std::f64::consts::PI / 3.0).cos();
    let e2 = 3.0 * q - e1 - e3;
    sorted3([e1, e2, e3])
}

fn sorted3(mut v: [f64; 3]) -> [f64; 3] {
    if v[0] < v[1] {
        v.swap(0, 1);
    }
    if v[1] < v[2] {
        v.swap(1, 2);
    }
    if v[0] < v[1] {
        v.swap(0, 1);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::SymTensor2;
    use approx::assert_abs_diff_eq;

    fn constant_curvature(c: f64) -> CurvatureTensor {
        let g = SymTensor2::metric();
        kulkarni_nomizu(&g, &g).scale(c / 2.0)
    }

    #[test]
    fn space_form_decomposition() {
        let d = decompose(&constant_curvature(0.25)).unwrap();
        assert_abs_diff_eq!(d.scalar, 3.0, epsilon = 1e-14);
        assert!(d.ric0.norm() < 1e-14);
        assert!(d.wplus.norm() < 1e-14);
        assert!(d.wminus.norm() < 1e-14);
    }

    #[test]
    fn space_form_reconstruction() {
        let d = Decomposition {
            scalar: 12.0,
            ..Decomposition::zero()
        };
        let t = recompose(&d);
        let expect = constant_curvature(1.0);
        assert!((t.matrix() - expect.matrix()).norm() < 1e-13);
    }

    #[test]
    fn normal_form_spectrum_round_trip() {
        let s = 0.3;
        let d = Decomposition {
            wplus: Matrix3::from_diagonal(&[2.0 * s, -s, -s].into()),
            ..Decomposition::zero()
        };
        let t = recompose(&d);
        let d2 = decompose(&t).unwrap();
        let spec = d2.self_dual_spectrum();
        assert_abs_diff_eq!(spec[0], 2.0 * s, epsilon = 1e-14);
        assert_abs_diff_eq!(spec[1], -s, epsilon = 1e-14);
        assert_abs_diff_eq!(spec[2], -s, epsilon = 1e-14);
        assert!(d2.wminus.norm() < 1e-14);
    }

    #[test]
    fn decompose_rejects_bianchi_violations() {
        // The Hodge star is pair-symmetric but fails the Bianchi identity.
        let star = CurvatureTensor::from_matrix(crate::basis::hodge_star()).unwrap();
        assert!(matches!(
            decompose(&star),
            Err(crate::error::CurvError::BianchiViolation { .. })
        ));
    }

    #[test]
    fn zero_weyl_has_zero_spectrum_and_det() {
        let d = Decomposition::zero();
        assert_eq!(d.self_dual_spectrum(), [0.0, 0.0, 0.0]);
        assert_eq!(d.self_dual_det(), 0.0);
    }

    #[test]
    fn det_equality_family() {
        // Spectrum s(1, −½, −½) saturates det W⁺ = (√6/18)|W⁺|³.
        for &s in &[0.5, 1.0, 2.0] {
            let d = Decomposition {
                wplus: Matrix3::from_diagonal(&[s, -0.5 * s, -0.5 * s].into()),
                ..Decomposition::zero()
            };
            let det = d.self_dual_det();
            let bound = 6.0_f64.sqrt() / 18.0 * d.wplus_norm_sq().powf(1.5);
            assert_abs_diff_eq!(det, s * s * s / 4.0, epsilon = 1e-13);
            assert_abs_diff_eq!(det, bound, epsilon = 1e-12);
        }
    }

    #[test]
    fn pieces_are_mutually_orthogonal() {
        let g = SymTensor2::metric();
        let scalar_part = kulkarni_nomizu(&g, &g).scale(0.5);
        let a = SymTensor2::from_diagonal([3.0, -1.0, -1.0, -1.0]);
        let ric_part = kulkarni_nomizu(&a, &g).scale(0.5);
        let d = Decomposition {
            wplus: Matrix3::from_diagonal(&[2.0, -1.0, -1.0].into()),
            ..Decomposition::zero()
        };
        let weyl_part = recompose(&d);
        assert!(scalar_part.inner(&ric_part).abs() < 1e-12);
        assert!(scalar_part.inner(&weyl_part).abs() < 1e-12);
        assert!(ric_part.inner(&weyl_part).abs() < 1e-12);
    }

    #[test]
    fn normal_form_norm_is_the_eigenvalue_sum_of_squares() {
        let d = Decomposition {
            wplus: Matrix3::from_diagonal(&[0.4, -0.1, -0.3].into()),
            ..Decomposition::zero()
        };
        let t = recompose(&d);
        let expect = 0.4f64.powi(2) + 0.1f64.powi(2) + 0.3f64.powi(2);
        assert_abs_diff_eq!(t.inner(&t), expect, epsilon = 1e-14);
    }

    #[test]
    fn closed_form_eigenvalues_match_a_known_matrix() {
        // Eigenvalues of [[2,1,0],[1,2,0],[0,0,5]] are 5, 3, 1.
        let m = Matrix3::new(2.0, 1.0, 0.0, 1.0, 2.0, 0.0, 0.0, 0.0, 5.0);
        let e = sym3_eigenvalues(&m);
        assert_abs_diff_eq!(e[0], 5.0, epsilon = 1e-12);
        assert_abs_diff_eq!(e[1], 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(e[2], 1.0, epsilon = 1e-12);
    }

    #[test]
    fn pairing_ignores_the_trace_part() {
        let d = Decomposition {
            wplus: Matrix3::from_diagonal(&[2.0, -1.0, -1.0].into()),
            ..Decomposition::zero()
        };
        let h1 = &crate::basis::h_basis()[0];
        let shifted = h1.add(&SymTensor2::metric().scale(0.7));
        let p0 = weitzenbock_pairing(h1, &d);
        let p1 = weitzenbock_pairing(&shifted, &d);
        assert_abs_diff_eq!(p0, p1, epsilon = 1e-12);
        assert!(weitzenbock_pairing(&SymTensor2::zero(), &d).abs() < 1e-15);
    }
}
