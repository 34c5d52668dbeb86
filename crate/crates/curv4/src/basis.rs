//! Index conventions on the six-dimensional space of 2-forms and the bases
//! derived from the Hodge star.
//!
//! Everything downstream fixes the ordered basis `e12, e13, e14, e23, e24, e34`
//! of antisymmetric 4×4 matrices, orthonormal for `⟨α, β⟩ = ½ Tr(αᵀβ)`. The
//! Hodge star acts on this basis by signed pair swaps; its ±1 eigenspaces carry
//! the orthonormal bases `B± = (ω_i)/√2, (α_i)/√2` of self-dual and
//! anti-self-dual forms, and the nine products `h_k = ω_i α_j` form an
//! orthogonal basis of traceless symmetric 2-tensors with `|h_k|² = 4`.

use nalgebra::{Matrix4, SMatrix};

use crate::tensor::{SymTensor2, TwoForm};

pub type Matrix6 = SMatrix<f64, 6, 6>;
pub type Basis63 = SMatrix<f64, 6, 3>;

/// Ordered index pairs of the 2-form basis.
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Maps an arbitrary index pair to (sign, position) in the ordered basis.
/// Returns sign 0 for a repeated index.
#[inline]
pub fn pair_position(i: usize, j: usize) -> (f64, usize) {
    debug_assert!(i < 4 && j < 4);
    if i == j {
        return (0.0, 0);
    }
    if i < j {
        (1.0, pair_index(i, j))
    } else {
        (-1.0, pair_index(j, i))
    }
}

#[inline]
fn pair_index(i: usize, j: usize) -> usize {
    match (i, j) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        (2, 3) => 5,
        _ => unreachable!("not an ordered pair"),
    }
}

/// Elementary 2-form e_i ∧ e_j as an antisymmetric matrix.
pub fn elementary_form(i: usize, j: usize) -> Matrix4<f64> {
    let mut m = Matrix4::zeros();
    m[(i, j)] = 1.0;
    m[(j, i)] = -1.0;
    m
}

/// The Hodge star on 2-forms in the ordered basis.
pub fn hodge_star() -> Matrix6 {
    let mut s = Matrix6::zeros();
    s[(0, 5)] = 1.0;
    s[(5, 0)] = 1.0;
    s[(1, 4)] = -1.0;
    s[(4, 1)] = -1.0;
    s[(2, 3)] = 1.0;
    s[(3, 2)] = 1.0;
    s
}

/// Orthogonal projectors (I ± ★)/2 onto the self-dual and anti-self-dual halves.
pub fn hodge_projectors() -> (Matrix6, Matrix6) {
    let s = hodge_star();
    let id = Matrix6::identity();
    ((id + s) * 0.5, (id - s) * 0.5)
}

/// Self-dual eigenforms ω_1 = e12+e34, ω_2 = e13−e24, ω_3 = e14+e23 (norm √2).
pub fn self_dual_forms() -> [TwoForm; 3] {
    [
        TwoForm::from_matrix_unchecked(elementary_form(0, 1) + elementary_form(2, 3)),
        TwoForm::from_matrix_unchecked(elementary_form(0, 2) - elementary_form(1, 3)),
        TwoForm::from_matrix_unchecked(elementary_form(0, 3) + elementary_form(1, 2)),
    ]
}

/// Anti-self-dual eigenforms α_1 = e12−e34, α_2 = e13+e24, α_3 = e14−e23.
pub fn anti_self_dual_forms() -> [TwoForm; 3] {
    [
        TwoForm::from_matrix_unchecked(elementary_form(0, 1) - elementary_form(2, 3)),
        TwoForm::from_matrix_unchecked(elementary_form(0, 2) + elementary_form(1, 3)),
        TwoForm::from_matrix_unchecked(elementary_form(0, 3) - elementary_form(1, 2)),
    ]
}

/// 6×3 matrix whose columns are the orthonormal self-dual basis ω_i/√2.
pub fn self_dual_basis() -> Basis63 {
    basis_from_forms(&self_dual_forms())
}

/// 6×3 matrix whose columns are the orthonormal anti-self-dual basis α_i/√2.
pub fn anti_self_dual_basis() -> Basis63 {
    basis_from_forms(&anti_self_dual_forms())
}

fn basis_from_forms(forms: &[TwoForm; 3]) -> Basis63 {
    let inv_sqrt2 = 1.0 / 2.0_f64.sqrt();
    let mut u = Basis63::zeros();
    for (col, form) in forms.iter().enumerate() {
        let v = form.coeffs();
        for row in 0..6 {
            u[(row, col)] = v[row] * inv_sqrt2;
        }
    }
    u
}

/// The nine traceless symmetric tensors h_1, …, h_9 with h_{3i+j} = ω_{i+1} α_{j+1}.
///
/// Each has |h|² = Tr(h²) = 4 and they are mutually orthogonal.
pub fn h_basis() -> [SymTensor2; 9] {
    let omegas = self_dual_forms();
    let alphas = anti_self_dual_forms();
    let mut out = Vec::with_capacity(9);
    for omega in &omegas {
        for alpha in &alphas {
            let prod = omega.as_matrix() * alpha.as_matrix();
            out.push(SymTensor2::symmetrized(prod));
        }
    }
    out.try_into().expect("nine h tensors")
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::Matrix4;

    #[test]
    fn star_is_an_involution() {
        let s = hodge_star();
        assert_eq!(s * s, Matrix6::identity());
    }

    #[test]
    fn projectors_are_complementary() {
        let (p, q) = hodge_projectors();
        assert_eq!(p + q, Matrix6::identity());
        assert!((p * q).norm() == 0.0);
        assert!((p * p - p).norm() == 0.0);
    }

    #[test]
    fn plus_basis_is_fixed_by_the_plus_projector() {
        let (p, _) = hodge_projectors();
        let u = self_dual_basis();
        assert!((p * u - u).norm() < 1e-15);
        let v = anti_self_dual_basis();
        assert!((p * v).norm() < 1e-15);
    }

    #[test]
    fn bases_are_orthonormal() {
        let u = self_dual_basis();
        let v = anti_self_dual_basis();
        assert!((u.transpose() * u - nalgebra::Matrix3::identity()).norm() < 1e-15);
        assert!((v.transpose() * v - nalgebra::Matrix3::identity()).norm() < 1e-15);
        assert!((u.transpose() * v).norm() < 1e-15);
    }

    #[test]
    fn eigenform_products_form_a_quaternionic_structure() {
        // With forms acting as v ↦ ω(·, v), each basis satisfies
        // ω² = −I and the products close on the third element.
        let w = self_dual_forms().map(|f| -f.as_matrix());
        let a = anti_self_dual_forms().map(|f| -f.as_matrix());
        for m in w.iter().chain(a.iter()) {
            assert_eq!(m * m, -Matrix4::identity());
        }
        assert_eq!(w[0] * w[1], w[2]);
        assert_eq!(w[1] * w[0], -w[2]);
        // ω and α commute, and their product is symmetric.
        for wi in &w {
            for aj in &a {
                assert_eq!(wi * aj, aj * wi);
                assert_eq!((wi * aj).transpose(), wi * aj);
            }
        }
    }

    #[test]
    fn h_basis_matches_the_displayed_matrices() {
        let h = h_basis();
        let expect: [Matrix4<f64>; 9] = [
            Matrix4::from_diagonal(&[-1.0, -1.0, 1.0, 1.0].into()),
            Matrix4::new(
                0.0, 0.0, 0.0, 1.0, //
                0.0, 0.0, -1.0, 0.0, //
                0.0, -1.0, 0.0, 0.0, //
                1.0, 0.0, 0.0, 0.0,
            ),
            Matrix4::new(
                0.0, 0.0, -1.0, 0.0, //
                0.0, 0.0, 0.0, -1.0, //
                -1.0, 0.0, 0.0, 0.0, //
                0.0, -1.0, 0.0, 0.0,
            ),
            Matrix4::new(
                0.0, 0.0, 0.0, -1.0, //
                0.0, 0.0, -1.0, 0.0, //
                0.0, -1.0, 0.0, 0.0, //
                -1.0, 0.0, 0.0, 0.0,
            ),
            Matrix4::from_diagonal(&[-1.0, 1.0, -1.0, 1.0].into()),
            Matrix4::new(
                0.0, 1.0, 0.0, 0.0, //
                1.0, 0.0, 0.0, 0.0, //
                0.0, 0.0, 0.0, -1.0, //
                0.0, 0.0, -1.0, 0.0,
            ),
            Matrix4::new(
                0.0, 0.0, 1.0, 0.0, //
                0.0, 0.0, 0.0, -1.0, //
                1.0, 0.0, 0.0, 0.0, //
                0.0, -1.0, 0.0, 0.0,
            ),
            Matrix4::new(
                0.0, -1.0, 0.0, 0.0, //
                -1.0, 0.0, 0.0, 0.0, //
                0.0, 0.0, 0.0, -1.0, //
                0.0, 0.0, -1.0, 0.0,
            ),
            Matrix4::from_diagonal(&[-1.0, 1.0, 1.0, -1.0].into()),
        ];
        for (k, e) in expect.iter().enumerate() {
            assert_eq!(h[k].matrix(), *e, "h_{}", k + 1);
        }
    }

    #[test]
    fn h_basis_is_orthogonal_with_norm_two() {
        let h = h_basis();
        for i in 0..9 {
            for j in 0..9 {
                let ip = (h[i].matrix().transpose() * h[j].matrix()).trace();
                let want = if i == j { 4.0 } else { 0.0 };
                assert!((ip - want).abs() < 1e-15, "Tr(h{}ᵀ h{}) = {}", i, j, ip);
            }
            assert!(h[i].is_traceless());
        }
    }
}
