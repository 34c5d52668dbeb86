//! Four-dimensional algebraic curvature toolkit.
//!
//! `curv4` implements the pointwise tensor algebra of oriented Riemannian
//! four-manifolds — Kulkarni–Nomizu products, the scalar/traceless-Ricci/Weyl
//! decomposition with its self-dual and anti-self-dual halves, and the
//! curvature operator of the second kind — together with closed-form model
//! gradient shrinking solitons, the pinching conditions used in their
//! rigidity theory, and seeded numerical certification of the sharp pairing
//! estimate ⟨(Ric̊⊙Ric̊)⁺, W⁺⟩ ≤ (√6/3)|Ric̊|²|W⁺|.
//!
//! Start with the runnable examples (`cargo run --example model_tour`) or the
//! CLI (`cargo run --bin curv4 -- models list`).
//!
//! ```
//! use curv4::models::{make_model, soliton_residual, ModelName, Normalization};
//!
//! let cylinder = make_model(ModelName::S2xR2, Normalization::Shrinker, &[1.0, 2.0]).unwrap();
//! assert!(soliton_residual(&cylinder) < 1e-12);
//!
//! let d = curv4::decomposition::decompose(&cylinder.curvature).unwrap();
//! assert!((d.wplus_norm_sq() - 1.0 / 24.0).abs() < 1e-12);
//! ```

pub mod basis;
pub mod cli;
pub mod curvature;
pub mod decomposition;
pub mod error;
pub mod models;
pub mod pinching;
pub mod report;
pub mod second_kind;
pub mod tensor;
pub mod verify;

pub use curvature::{kulkarni_nomizu, CurvatureTensor};
pub use decomposition::{decompose, recompose, Decomposition};
pub use error::{CurvError, Result};
pub use tensor::{SymTensor2, TwoForm, Vec4};
