//! Closed-form curvature and potential data for the standard model shrinking
//! solitons, in adapted orthonormal frames (curved directions first, flat
//! directions last).
//!
//! Under shrinker normalization every model satisfies `Ric + Hess f = ½ g`
//! exactly, with constant scalar curvature and parallel curvature, so the
//! differential terms in the classical soliton identities reduce to closed
//! forms. The `paper_example` normalization exists only for the models whose
//! second-kind operator is usually tabulated at a different scale (CP² at
//! R = 8; the sphere and the Kähler cylinder coincide with shrinker scale).

use nalgebra::{Matrix3, Matrix4};
use std::fmt;
use std::str::FromStr;

use crate::basis::Matrix6;
use crate::curvature::CurvatureTensor;
use crate::decomposition::{decompose, recompose, ricci_contraction, Decomposition};
use crate::error::{CurvError, Result};
use crate::tensor::{SymTensor2, Vec4};

/// The six catalog models.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelName {
    /// Round sphere S⁴ of radius √6 (R = 2).
    S4,
    /// Complex projective plane with the Fubini–Study metric.
    Cp2,
    /// Kähler cylinder S²(√2) × R².
    S2xR2,
    /// Round cylinder S³ × R with sphere radius 2.
    S3xR,
    /// Flat Gaussian soliton R⁴.
    R4,
    /// Product of two round 2-spheres of radius √2.
    S2xS2,
}

/// Curvature scale of a model point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    /// Scale forced by Ric + Hess f = ½ g.
    Shrinker,
    /// Scale used in the classical second-kind operator tables.
    PaperExample,
}

impl ModelName {
    pub fn id(&self) -> &'static str {
        match self {
            ModelName::S4 => "s4",
            ModelName::Cp2 => "cp2",
            ModelName::S2xR2 => "s2xr2",
            ModelName::S3xR => "s3xr",
            ModelName::R4 => "r4",
            ModelName::S2xS2 => "s2xs2",
        }
    }

    /// Number of free point coordinates on the flat factor.
    pub fn point_arity(&self) -> usize {
        match self {
            ModelName::S2xR2 => 2,
            ModelName::S3xR => 1,
            ModelName::R4 => 4,
            _ => 0,
        }
    }
}

impl fmt::Display for ModelName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for ModelName {
    type Err = CurvError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "s4" => Ok(ModelName::S4),
            "cp2" => Ok(ModelName::Cp2),
            "s2xr2" => Ok(ModelName::S2xR2),
            "s3xr" => Ok(ModelName::S3xR),
            "r4" => Ok(ModelName::R4),
            "s2xs2" => Ok(ModelName::S2xS2),
            other => Err(CurvError::UnknownModel { name: other.into() }),
        }
    }
}

impl fmt::Display for Normalization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Normalization::Shrinker => "shrinker",
            Normalization::PaperExample => "paper",
        })
    }
}

impl FromStr for Normalization {
    type Err = CurvError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "shrinker" => Ok(Normalization::Shrinker),
            "paper" | "paper_example" => Ok(Normalization::PaperExample),
            other => Err(CurvError::InvalidNormalization {
                model: "-".into(),
                normalization: other.into(),
            }),
        }
    }
}

/// Pointwise curvature plus soliton potential data for a model space.
#[derive(Debug, Clone)]
pub struct ModelPoint {
    pub name: ModelName,
    pub normalization: Normalization,
    pub curvature: CurvatureTensor,
    pub ricci: SymTensor2,
    pub scalar: f64,
    pub f_value: f64,
    pub grad_f: Vec4,
    pub hess_f: SymTensor2,
    pub parallel_curvature: bool,
    pub point_params: Vec<f64>,
}

/// All catalog models in a fixed order.
pub fn catalog() -> [ModelName; 6] {
    [
        ModelName::S4,
        ModelName::Cp2,
        ModelName::S2xR2,
        ModelName::S3xR,
        ModelName::R4,
        ModelName::S2xS2,
    ]
}

/// Constructs a model point. `point` supplies the flat-factor coordinates
/// (empty slice means the origin); compact models take none.
pub fn make_model(
    name: ModelName,
    normalization: Normalization,
    point: &[f64],
) -> Result<ModelPoint> {
    if normalization == Normalization::PaperExample
        && !matches!(name, ModelName::S4 | ModelName::Cp2 | ModelName::S2xR2)
    {
        return Err(CurvError::InvalidNormalization {
            model: name.id().into(),
            normalization: normalization.to_string(),
        });
    }
    let arity = name.point_arity();
    if !point.is_empty() && point.len() != arity {
        return Err(CurvError::InvalidPointParams {
            model: name.id().into(),
            expected: arity,
            got: point.len(),
        });
    }
    if point.iter().any(|x| !x.is_finite()) {
        return Err(CurvError::InvalidPointParams {
            model: name.id().into(),
            expected: arity,
            got: point.len(),
        });
    }
    let mut coords = vec![0.0; arity];
    coords[..point.len()].copy_from_slice(point);

    let point = build(name, normalization, coords);
    debug_assert!(
        ricci_contraction(&point.curvature)
            .sub(&point.ricci)
            .norm()
            <= 1e-12 * (point.ricci.norm() + 1.0),
        "model Ricci must match the curvature contraction"
    );
    Ok(point)
}

fn build(name: ModelName, normalization: Normalization, coords: Vec<f64>) -> ModelPoint {
    // Operator matrices are written over the ordered pair basis
    // (12, 13, 14, 23, 24, 34) with curved directions first.
    let mut m = Matrix6::zeros();
    let ricci;
    let scalar;
    let f_value;
    let mut grad = Vec4::zeros();
    let mut hess = SymTensor2::zero();

    match (name, normalization) {
        (ModelName::S4, _) => {
            // Radius √6: sectional curvature 1/6, R = 2, Einstein.
            for a in 0..6 {
                m[(a, a)] = 1.0 / 6.0;
            }
            ricci = SymTensor2::metric().scale(0.5);
            scalar = 2.0;
            f_value = 2.0;
        }
        (ModelName::Cp2, norm) => {
            let r = if norm == Normalization::PaperExample { 8.0 } else { 2.0 };
            // Einstein and self-dual: W⁻ = 0, W⁺ = diag(R/6, −R/12, −R/12).
            let d = Decomposition {
                scalar: r,
                ric0: SymTensor2::zero(),
                wplus: Matrix3::from_diagonal(&[r / 6.0, -r / 12.0, -r / 12.0].into()),
                wminus: Matrix3::zeros(),
            };
            let t = recompose(&d);
            m = t.matrix();
            ricci = SymTensor2::metric().scale(r / 4.0);
            scalar = r;
            f_value = 2.0;
        }
        (ModelName::S2xR2, _) => {
            // S²(√2): Gauss curvature ½ on the (e1, e2) plane; e3, e4 flat.
            m[(0, 0)] = 0.5;
            ricci = SymTensor2::from_diagonal([0.5, 0.5, 0.0, 0.0]);
            scalar = 1.0;
            let y_sq = coords[0] * coords[0] + coords[1] * coords[1];
            f_value = y_sq / 4.0 + 1.0;
            grad = Vec4::new(0.0, 0.0, coords[0] / 2.0, coords[1] / 2.0);
            hess = SymTensor2::from_diagonal([0.0, 0.0, 0.5, 0.5]);
        }
        (ModelName::S3xR, _) => {
            // S³ of radius 2: sectional curvature ¼ on the three sphere planes.
            m[(0, 0)] = 0.25; // e12
            m[(1, 1)] = 0.25; // e13
            m[(3, 3)] = 0.25; // e23
            ricci = SymTensor2::from_diagonal([0.5, 0.5, 0.5, 0.0]);
            scalar = 1.5;
            let t = coords[0];
            f_value = t * t / 4.0 + 1.5;
            grad = Vec4::new(0.0, 0.0, 0.0, t / 2.0);
            hess = SymTensor2::from_diagonal([0.0, 0.0, 0.0, 0.5]);
        }
        (ModelName::R4, _) => {
            ricci = SymTensor2::zero();
            scalar = 0.0;
            let x_sq: f64 = coords.iter().map(|x| x * x).sum();
            f_value = x_sq / 4.0;
            grad = Vec4::new(
                coords[0] / 2.0,
                coords[1] / 2.0,
                coords[2] / 2.0,
                coords[3] / 2.0,
            );
            hess = SymTensor2::metric().scale(0.5);
        }
        (ModelName::S2xS2, _) => {
            // Two spheres of radius √2: curvature ½ on the (e1,e2) and (e3,e4) planes.
            m[(0, 0)] = 0.5;
            m[(5, 5)] = 0.5;
            ricci = SymTensor2::metric().scale(0.5);
            scalar = 2.0;
            f_value = 2.0;
        }
    }

    ModelPoint {
        name,
        normalization,
        curvature: CurvatureTensor::from_matrix_unchecked(m),
        ricci,
        scalar,
        f_value,
        grad_f: grad,
        hess_f: hess,
        parallel_curvature: true,
        point_params: coords,
    }
}

/// Frobenius norm of Ric + Hess f − ½ g.
pub fn soliton_residual(m: &ModelPoint) -> f64 {
    let half_g = SymTensor2::metric().scale(0.5);
    m.ricci.add(&m.hess_f).sub(&half_g).norm()
}

/// Residuals of the five classical shrinker identities, with the derivative
/// terms replaced by their closed forms on symmetric-space models
/// (∇R = 0, ∇Ric = 0):
///
/// 1. R + Δf = 2
/// 2. ½ ∇R = Ric(∇f)
/// 3. Δ_f R = R − 2|Ric|²
/// 4. R + |∇f|² = f
/// 5. Δ_f Ric_{ij} = Ric_{ij} − 2 T_{ikjl} Ric_{kl}
pub fn hamilton_identities(m: &ModelPoint) -> Result<[f64; 5]> {
    if m.normalization != Normalization::Shrinker {
        return Err(CurvError::PreconditionViolated {
            what: "soliton identities hold at shrinker normalization".into(),
        });
    }
    let r = m.scalar;
    let laplacian_f = m.hess_f.trace();
    let res1 = (r + laplacian_f - 2.0).abs();

    // ∇R = 0, so the residual is |Ric(∇f)|.
    let res2 = m.ricci.apply(&m.grad_f).norm();

    let ric_sq = m.ricci.norm_sq();
    let res3 = (r - 2.0 * ric_sq).abs();

    let res4 = (r + m.grad_f.norm_squared() - m.f_value).abs();

    // Δ_f Ric = 0 on parallel-curvature models.
    let mut contracted = Matrix4::zeros();
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = 0.0;
            for k in 0..4 {
                for l in 0..4 {
                    acc += m.curvature.component(i, k, j, l) * m.ricci.entry(k, l);
                }
            }
            contracted[(i, j)] = acc;
        }
    }
    let res5 = (m.ricci.matrix() - 2.0 * contracted).norm();

    Ok([res1, res2, res3, res4, res5])
}

/// The algebraic balance 2|W⁺|² − 36 det W⁺ − ⟨(Ric̊⊙Ric̊)⁺, W⁺⟩, which must
/// vanish on parallel-curvature shrinkers (the drifted Laplacian of |W⁺|² and
/// the gradient term are both zero there).
pub fn weitzenbock_balance(m: &ModelPoint) -> Result<f64> {
    require_parallel_shrinker(m)?;
    let d = decompose(&m.curvature)?;
    let pairing = crate::decomposition::weitzenbock_pairing(&d.ric0, &d);
    Ok(2.0 * d.wplus_norm_sq() - 36.0 * d.self_dual_det() - pairing)
}

/// The scale-adjusted balance 4(|Ric|²/R³)|W⁺|² − 36 det W⁺/R² − P/R² for the
/// drifted Laplacian of |W⁺|²/R²; vanishes on parallel-curvature shrinkers
/// with R > 0.
pub fn kahler_ratio_balance(m: &ModelPoint) -> Result<f64> {
    require_parallel_shrinker(m)?;
    if m.scalar == 0.0 {
        return Err(CurvError::ZeroScalarCurvature);
    }
    let d = decompose(&m.curvature)?;
    let r = m.scalar;
    let pairing = crate::decomposition::weitzenbock_pairing(&d.ric0, &d);
    Ok(4.0 * d.ricci_norm_sq() / (r * r * r) * d.wplus_norm_sq()
        - 36.0 * d.self_dual_det() / (r * r)
        - pairing / (r * r))
}

fn require_parallel_shrinker(m: &ModelPoint) -> Result<()> {
    if !m.parallel_curvature {
        return Err(CurvError::PreconditionViolated {
            what: "balance identities require parallel curvature".into(),
        });
    }
    if m.normalization != Normalization::Shrinker {
        return Err(CurvError::PreconditionViolated {
            what: "balance identities hold at shrinker normalization".into(),
        });
    }
    Ok(())
}
