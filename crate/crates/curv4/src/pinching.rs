//! Pointwise pinching conditions on a curvature decomposition.
//!
//! Seven conditions are evaluated, each reported with its two sides and an
//! oriented margin (margin ≥ 0 ⟺ the condition holds):
//!
//! * `catino`  — |W| R ≤ √3 (|Ric̊| − R/(2√3))², with |W|² = |W⁺|² + |W⁻|²
//!   in the operator (¼-contraction) normalization.
//! * `zhang`   — |W| ≤ γ ||Ric̊| − R/(2√3)|, with the full 4-index tensor
//!   norm (twice the operator norm). On the Kähler cylinder this fails for
//!   every γ < 1 + √3 and is borderline exactly at γ = 1 + √3.
//! * `crz`     — |W⁺|² − √6 |W⁺|³ ≥ ½ ⟨(Ric̊⊙Ric̊)⁺, W⁺⟩.
//! * `thm_a`   — |W⁺|² − √6 |W⁺|³ ≥ (√6/6) |Ric̊|² |W⁺|.
//! * `thm_a_variant` — |W⁺| − √6 |W⁺|² ≥ (√6/6) |Ric̊|².
//! * `thm_b`   — 1/24 ≥ |W⁺|²/R² ≥ (√6/3)(|Ric̊|²/R³)|W⁺| (needs R > 0).
//! * `cor_c`   — 1/24 ≤ |W⁺|²/R² ≤ (√6/3)(|Ric̊|²/R³)|W⁺| (needs R > 0).
//!
//! Two-sided conditions expose both sub-margins; conditions that divide by R
//! are flagged not applicable when R ≤ 0 instead of erroring.

use crate::decomposition::{decompose, weitzenbock_pairing, Decomposition};
use crate::models::ModelPoint;

pub const SQRT6: f64 = 2.449489742783178;
/// Sharp constant √6/3 of the self-dual pairing estimate.
pub const SHARP_CONSTANT: f64 = 0.816496580927726;
/// |W⁺|²/R² on a Kähler four-manifold with the natural orientation.
pub const KAHLER_RATIO: f64 = 1.0 / 24.0;

/// One evaluated condition.
#[derive(Debug, Clone, PartialEq)]
pub struct ConditionReport {
    pub id: &'static str,
    pub applicable: bool,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    /// Oriented margin; for two-sided conditions the minimum of the two.
    pub margin: Option<f64>,
    pub holds: bool,
    /// Present for the two-sided conditions, in statement order.
    pub sub_margins: Option<[f64; 2]>,
}

impl ConditionReport {
    fn one_sided(id: &'static str, lhs: f64, rhs: f64, margin: f64) -> Self {
        let holds = margin >= -1e-12 * (lhs.abs() + rhs.abs() + 1.0);
        Self {
            id,
            applicable: true,
            lhs: Some(lhs),
            rhs: Some(rhs),
            margin: Some(margin),
            holds,
            sub_margins: None,
        }
    }

    fn two_sided(id: &'static str, lhs: f64, rhs: f64, sub: [f64; 2]) -> Self {
        let margin = sub[0].min(sub[1]);
        let holds = margin >= -1e-12 * (lhs.abs() + rhs.abs() + 1.0);
        Self {
            id,
            applicable: true,
            lhs: Some(lhs),
            rhs: Some(rhs),
            margin: Some(margin),
            holds,
            sub_margins: Some(sub),
        }
    }

    fn not_applicable(id: &'static str) -> Self {
        Self {
            id,
            applicable: false,
            lhs: None,
            rhs: None,
            margin: None,
            holds: false,
            sub_margins: None,
        }
    }
}

/// Full pinching report for one decomposition.
#[derive(Debug, Clone)]
pub struct PinchReport {
    pub conditions: Vec<ConditionReport>,
    pub gamma: f64,
    pub scalar: f64,
    pub ric0_norm: f64,
    pub wplus_norm: f64,
    pub wminus_norm: f64,
    pub det_wplus: f64,
    /// |W⁺|²/R² when R > 0.
    pub kahler_ratio: Option<f64>,
    /// P/(|Ric̊|²|W⁺|) when both factors are nonzero.
    pub sharp_ratio: Option<f64>,
    /// Calibrated pairing P = ⟨(Ric̊⊙Ric̊)⁺, W⁺⟩.
    pub pairing: f64,
    /// The raw ¼-contraction, recorded alongside (identical to `pairing`).
    pub quarter_contraction: f64,
}

/// |W⁺|²/R², or `None` when R ≤ 0.
pub fn kahler_ratio(d: &Decomposition) -> Option<f64> {
    if d.scalar > 0.0 {
        Some(d.wplus_norm_sq() / (d.scalar * d.scalar))
    } else {
        None
    }
}

/// P/(|Ric̊|² |W⁺|), or `None` when a factor vanishes. Bounded above by √6/3.
pub fn sharp_ratio(d: &Decomposition) -> Option<f64> {
    let rho = d.ric0_norm_sq();
    let sigma = d.wplus_norm_sq().sqrt();
    if rho == 0.0 || sigma == 0.0 {
        return None;
    }
    Some(weitzenbock_pairing(&d.ric0, d) / (rho * sigma))
}

/// Evaluates all seven conditions with the given Zhang parameter γ > 0.
pub fn evaluate(d: &Decomposition, gamma: f64) -> PinchReport {
    let r = d.scalar;
    let rho = d.ric0_norm_sq();
    let ric0_norm = rho.sqrt();
    let w2p = d.wplus_norm_sq();
    let sigma = w2p.sqrt();
    let w2m = d.wminus_norm_sq();
    let w_op = (w2p + w2m).sqrt();
    let w_tensor = 2.0 * w_op;
    let det = d.self_dual_det();
    let pairing = weitzenbock_pairing(&d.ric0, d);

    let mut conditions = Vec::with_capacity(7);

    // |W| R ≤ √3 (|Ric̊| − R/(2√3))².
    let gap = ric0_norm - r / (2.0 * 3.0_f64.sqrt());
    let lhs = w_op * r;
    let rhs = 3.0_f64.sqrt() * gap * gap;
    conditions.push(ConditionReport::one_sided("catino", lhs, rhs, rhs - lhs));

    // |W| ≤ γ ||Ric̊| − R/(2√3)|, tensor norm.
    let rhs = gamma * gap.abs();
    conditions.push(ConditionReport::one_sided(
        "zhang",
        w_tensor,
        rhs,
        rhs - w_tensor,
    ));

    // |W⁺|² − √6|W⁺|³ ≥ ½ P.
    let weyl_gap = w2p - SQRT6 * w2p * sigma;
    conditions.push(ConditionReport::one_sided(
        "crz",
        weyl_gap,
        0.5 * pairing,
        weyl_gap - 0.5 * pairing,
    ));

    // |W⁺|² − √6|W⁺|³ ≥ (√6/6)|Ric̊|²|W⁺|.
    let rhs = SQRT6 / 6.0 * rho * sigma;
    conditions.push(ConditionReport::one_sided(
        "thmA",
        weyl_gap,
        rhs,
        weyl_gap - rhs,
    ));

    // |W⁺| − √6|W⁺|² ≥ (√6/6)|Ric̊|².
    let lhs = sigma - SQRT6 * w2p;
    let rhs = SQRT6 / 6.0 * rho;
    conditions.push(ConditionReport::one_sided(
        "thmA_variant",
        lhs,
        rhs,
        lhs - rhs,
    ));

    // Two-sided ratio conditions, only meaningful for R > 0.
    if r > 0.0 {
        let ratio = w2p / (r * r);
        let lower = SQRT6 / 3.0 * rho / (r * r * r) * sigma;
        conditions.push(ConditionReport::two_sided(
            "thmB",
            ratio,
            KAHLER_RATIO,
            [KAHLER_RATIO - ratio, ratio - lower],
        ));
        conditions.push(ConditionReport::two_sided(
            "corC",
            ratio,
            KAHLER_RATIO,
            [ratio - KAHLER_RATIO, lower - ratio],
        ));
    } else {
        conditions.push(ConditionReport::not_applicable("thmB"));
        conditions.push(ConditionReport::not_applicable("corC"));
    }

    PinchReport {
        conditions,
        gamma,
        scalar: r,
        ric0_norm,
        wplus_norm: sigma,
        wminus_norm: w2m.sqrt(),
        det_wplus: det,
        kahler_ratio: kahler_ratio(d),
        sharp_ratio: sharp_ratio(d),
        pairing,
        quarter_contraction: pairing,
    }
}

/// Maps a model's pointwise data onto the rigidity branch list:
/// (i) Einstein sphere/projective type, (ii) W⁺ = 0 or flat type,
/// (iii) Einstein with parallel W⁺ and two distinct eigenvalues,
/// (iv) the equality case of the self-dual gap condition.
pub fn classify(m: &ModelPoint) -> String {
    let d = match decompose(&m.curvature) {
        Ok(d) => d,
        Err(e) => return format!("unclassified: {e}"),
    };
    let scale = m.curvature.norm() + 1.0;
    let flat = m.curvature.norm() <= 1e-12;
    let einstein = d.ric0.norm() <= 1e-12 * scale;
    let wplus_zero = d.wplus.norm() <= 1e-12 * scale;
    let wminus_zero = d.wminus.norm() <= 1e-12 * scale;

    if flat {
        return "branch (ii): flat Gaussian type (R = 0, W = 0)".into();
    }
    if wplus_zero {
        if einstein {
            return "branch (i): Einstein with W+ = 0 (round sphere type)".into();
        }
        return "branch (ii): W+ = 0 cylinder type".into();
    }
    let lam = d.self_dual_spectrum();
    let two_distinct = (lam[1] - lam[2]).abs() <= 1e-12 * scale
        && (lam[0] - lam[1]).abs() > 1e-12 * scale;
    if einstein {
        if two_distinct && wminus_zero {
            return "branch (i): Einstein, W- = 0, two distinct W+ eigenvalues \
                    (complex projective type)"
                .into();
        }
        if two_distinct && m.parallel_curvature {
            return "branch (iii): Einstein, parallel W+, two distinct W+ eigenvalues".into();
        }
        return "branch (iii): Einstein with W+ != 0".into();
    }
    let report = evaluate(&d, 2.7);
    let thm_a_margin = report.conditions[3].margin.unwrap_or(f64::NAN);
    if thm_a_margin.abs() <= 1e-10 * scale {
        return "branch (iv): equality case of the self-dual gap condition \
                (Kahler cylinder type)"
            .into();
    }
    if thm_a_margin > 0.0 {
        return "gap condition holds strictly; W+ != 0 non-Einstein".into();
    }
    "gap condition fails; outside the classified branches".into()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{make_model, ModelName, Normalization};
    use approx::assert_abs_diff_eq;
    use nalgebra::Matrix3;

    fn model_decomposition(name: ModelName) -> Decomposition {
        let m = make_model(name, Normalization::Shrinker, &[]).unwrap();
        decompose(&m.curvature).unwrap()
    }

    #[test]
    fn kahler_cylinder_hits_every_equality() {
        let d = model_decomposition(ModelName::S2xR2);
        let report = evaluate(&d, 2.7);

        let thm_a = &report.conditions[3];
        assert_abs_diff_eq!(thm_a.lhs.unwrap(), 1.0 / 48.0, epsilon = 1e-12);
        assert_abs_diff_eq!(thm_a.rhs.unwrap(), 1.0 / 48.0, epsilon = 1e-12);
        assert!(thm_a.margin.unwrap().abs() < 1e-12);

        let crz = &report.conditions[2];
        assert!(crz.margin.unwrap().abs() < 1e-12);

        let variant = &report.conditions[4];
        assert!(variant.margin.unwrap().abs() < 1e-12);

        let thm_b = &report.conditions[5];
        let sub = thm_b.sub_margins.unwrap();
        assert!(sub[0].abs() < 1e-12 && sub[1].abs() < 1e-12);
        assert!(thm_b.holds);

        assert_abs_diff_eq!(report.pairing, 1.0 / 24.0, epsilon = 1e-13);
        assert_abs_diff_eq!(report.kahler_ratio.unwrap(), KAHLER_RATIO, epsilon = 1e-13);
        assert_abs_diff_eq!(report.sharp_ratio.unwrap(), SHARP_CONSTANT, epsilon = 1e-12);
    }

    #[test]
    fn kahler_cylinder_defeats_the_norm_pinchings() {
        let d = model_decomposition(ModelName::S2xR2);
        let report = evaluate(&d, 2.7);

        let catino = &report.conditions[0];
        assert!(!catino.holds);
        assert_abs_diff_eq!(catino.lhs.unwrap(), 0.288_675_134_594_812_9, epsilon = 1e-9);
        assert_abs_diff_eq!(catino.rhs.unwrap(), 0.077_350_269_189_625_7, epsilon = 1e-9);

        let zhang = &report.conditions[1];
        assert!(!zhang.holds);
        // Borderline exactly at γ = 1 + √3.
        let borderline = evaluate(&d, 1.0 + 3.0_f64.sqrt());
        assert!(borderline.conditions[1].margin.unwrap().abs() < 1e-12);
    }

    #[test]
    fn round_sphere_saturates_everything_trivially() {
        let d = model_decomposition(ModelName::S4);
        let report = evaluate(&d, 2.7);
        for idx in [0, 2, 3] {
            let c = &report.conditions[idx];
            assert!(c.holds, "{} should hold", c.id);
            assert!(c.lhs.unwrap().abs() < 1e-12, "{} lhs", c.id);
        }
        // Every Weyl and traceless-Ricci term vanishes, so crz and thm_a sit
        // at equality; catino keeps a positive margin from its R² term.
        for idx in [2, 3] {
            assert!(report.conditions[idx].margin.unwrap().abs() < 1e-12);
        }
        assert!(report.conditions[0].margin.unwrap() > 0.5);
        assert!(report.sharp_ratio.is_none());
        assert_eq!(report.wplus_norm, 0.0);
    }

    #[test]
    fn projective_plane_margins() {
        let d = model_decomposition(ModelName::Cp2);
        let report = evaluate(&d, 2.7);
        let thm_a = &report.conditions[3];
        // |W⁺|² − √6|W⁺|³ = 1/6 − 1/6 = 0 with Ric̊ = 0.
        assert!(thm_a.lhs.unwrap().abs() < 1e-12);
        assert!(thm_a.margin.unwrap().abs() < 1e-12);
        let cor_c = &report.conditions[6];
        assert!(cor_c.sub_margins.unwrap()[0].abs() < 1e-12);
        assert_abs_diff_eq!(report.kahler_ratio.unwrap(), KAHLER_RATIO, epsilon = 1e-13);
    }

    #[test]
    fn flat_space_marks_ratio_conditions_not_applicable() {
        let d = model_decomposition(ModelName::R4);
        let report = evaluate(&d, 2.7);
        assert!(!report.conditions[5].applicable);
        assert!(!report.conditions[6].applicable);
        assert!(report.kahler_ratio.is_none());
    }

    #[test]
    fn sharp_ratio_is_scale_invariant_and_bounded() {
        let h9 = &crate::basis::h_basis()[8];
        let base = Decomposition {
            ric0: *h9,
            wplus: Matrix3::from_diagonal(&[2.0, -1.0, -1.0].into()),
            ..Decomposition::zero()
        };
        let r0 = sharp_ratio(&base).unwrap();
        // Third-block direction picks the λ₃ weight: ratio = −√6/6.
        assert_abs_diff_eq!(r0, -SQRT6 / 6.0, epsilon = 1e-12);
        assert!(r0 < SHARP_CONSTANT);

        let scaled = Decomposition {
            ric0: h9.scale(3.0),
            wplus: base.wplus * 0.25,
            ..Decomposition::zero()
        };
        assert_abs_diff_eq!(sharp_ratio(&scaled).unwrap(), r0, epsilon = 1e-12);
    }

    #[test]
    fn misaligned_spectrum_stays_strictly_below_the_bound() {
        // Ric̊ massed on the first block against spectrum (1, 1, −2)/√6:
        // the ratio drops to √6/6, half the sharp constant.
        let h1 = &crate::basis::h_basis()[0];
        let d = Decomposition {
            ric0: *h1,
            wplus: Matrix3::from_diagonal(
                &[1.0 / SQRT6, 1.0 / SQRT6, -2.0 / SQRT6].into(),
            ),
            ..Decomposition::zero()
        };
        let r = sharp_ratio(&d).unwrap();
        assert_abs_diff_eq!(r, SQRT6 / 6.0, epsilon = 1e-12);
        assert!(r < 0.8164);
    }

    #[test]
    fn undefined_ratio_when_ricci_vanishes() {
        // ρ = 0 leaves the pairing at zero and the ratio undefined.
        let d = Decomposition {
            wplus: Matrix3::from_diagonal(&[2.0, -1.0, -1.0].into()),
            ..Decomposition::zero()
        };
        assert_eq!(sharp_ratio(&d), None);
        assert_eq!(weitzenbock_pairing(&d.ric0, &d), 0.0);
    }

    #[test]
    fn classification_labels() {
        let cases = [
            (ModelName::S4, "branch (i)"),
            (ModelName::Cp2, "branch (i)"),
            (ModelName::S2xR2, "branch (iv)"),
            (ModelName::S3xR, "branch (ii)"),
            (ModelName::R4, "branch (ii)"),
            (ModelName::S2xS2, "branch (iii)"),
        ];
        for (name, want) in cases {
            let m = make_model(name, Normalization::Shrinker, &[]).unwrap();
            let label = classify(&m);
            assert!(label.contains(want), "{name}: {label}");
        }
    }
}
