//! The curvature operator of the second kind: the action
//! `(T̂A)_{ik} = Σ_{j,l} T_{ijlk} A_{jl}` of a curvature tensor on symmetric
//! 2-tensors, and its matrix over the orthonormal basis {h_i/2, g/2}.
//!
//! The matrix is assembled through the duality `(T̂A, B) = −⟨T, A⊙B⟩`, so it
//! is symmetric by construction; [`second_kind_apply`] evaluates the displayed
//! sum directly and serves as an in-crate cross-path.

use nalgebra::{Matrix4, SMatrix};

use crate::basis::h_basis;
use crate::curvature::{kulkarni_nomizu, CurvatureTensor};
use crate::error::Result;
use crate::tensor::SymTensor2;

pub type Matrix10 = SMatrix<f64, 10, 10>;
pub type Matrix9 = SMatrix<f64, 9, 9>;

/// Matrix of T̂ over {h_1/2, …, h_9/2, g/2}, with its traceless compression.
#[derive(Debug, Clone, PartialEq)]
pub struct SecondKindMatrix {
    /// Full 10×10 matrix on symmetric 2-tensors.
    pub full: Matrix10,
    /// 9×9 block on traceless tensors (compression by the traceless projector).
    pub traceless: Matrix9,
}

/// Orthonormal basis {h_1/2, …, h_9/2, g/2} of symmetric 2-tensors.
pub fn orthonormal_s2_basis() -> [SymTensor2; 10] {
    let h = h_basis();
    let mut out = Vec::with_capacity(10);
    for hi in &h {
        out.push(hi.scale(0.5));
    }
    out.push(SymTensor2::metric().scale(0.5));
    out.try_into().expect("ten basis tensors")
}

/// Direct evaluation of (T̂A)_{ik} = Σ_{j,l} T_{ijlk} A_{jl}.
pub fn second_kind_apply(t: &CurvatureTensor, a: &SymTensor2) -> SymTensor2 {
    let mut out = Matrix4::zeros();
    for i in 0..4 {
        for k in 0..4 {
            let mut acc = 0.0;
            for j in 0..4 {
                for l in 0..4 {
                    acc += t.component(i, j, l, k) * a.entry(j, l);
                }
            }
            out[(i, k)] = acc;
        }
    }
    SymTensor2::symmetrized(out)
}

/// Matrix of the second-kind operator of a Bianchi-satisfying tensor.
pub fn second_kind_matrix(t: &CurvatureTensor) -> Result<SecondKindMatrix> {
    t.check_bianchi()?;
    let basis = orthonormal_s2_basis();
    let mut full = Matrix10::zeros();
    for a in 0..10 {
        for b in a..10 {
            let v = -t.inner(&kulkarni_nomizu(&basis[a], &basis[b]));
            full[(a, b)] = v;
            full[(b, a)] = v;
        }
    }
    let traceless = full.fixed_view::<9, 9>(0, 0).into_owned();
    Ok(SecondKindMatrix { full, traceless })
}
