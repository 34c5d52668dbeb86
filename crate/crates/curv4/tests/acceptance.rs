//! Acceptance suite: every release criterion runs here at its stated
//! tolerance and prints one PASS line (run with `--nocapture` to see them).

use curv4::decomposition::{decompose, recompose};
use curv4::models::{catalog, make_model, ModelName, Normalization};
use curv4::pinching::{evaluate, kahler_ratio, SHARP_CONSTANT};
use curv4::verify::{
    certify_second_kind_structure, random_bianchi, random_rotation, random_zero_sum,
    reference_spectrum_checks, sample_rng,
};
use nalgebra::Matrix4;
use rand::Rng;
use std::time::Instant;

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("curv4".to_string()).chain(args.iter().map(|s| s.to_string()));
    let code = curv4::cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("utf8 stdout"),
        String::from_utf8(err).expect("utf8 stderr"),
    )
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let (code, out, err) = run_cli(args);
    assert!(err.is_empty(), "unexpected stderr: {err}");
    (code, serde_json::from_str(&out).expect("valid JSON"))
}

fn results(v: &serde_json::Value) -> &Vec<serde_json::Value> {
    v["results"].as_array().expect("results array")
}

fn find<'a>(v: &'a serde_json::Value, id: &str) -> &'a serde_json::Value {
    results(v)
        .iter()
        .find(|r| r["id"] == id)
        .unwrap_or_else(|| panic!("missing result `{id}`"))
}

#[test]
fn acceptance_01_sharp_constant_certification() {
    let start = Instant::now();
    let (code, v) = json(&[
        "verify", "lemma-k", "--samples", "100000", "--seed", "7", "--grid", "200",
    ]);
    let elapsed = start.elapsed();
    assert_eq!(code, 0);
    let cert = find(&v, "lemma-k");
    let max_ratio = cert["max_ratio"].as_f64().unwrap();
    assert!(
        (0.816496 - 1e-6..=0.816497 + 1e-6).contains(&max_ratio),
        "max_ratio {max_ratio}"
    );
    assert_eq!(cert["violations"], 0);
    assert_eq!(cert["attained_at_vertex"], true);
    // argmax λ ∥ (2, −1, −1).
    let lam: Vec<f64> = cert["argmax_lambda"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect();
    let scale = lam[0] / 2.0;
    assert!(scale > 0.0);
    assert!((lam[1] - (-scale)).abs() < 1e-9 && (lam[2] - (-scale)).abs() < 1e-9);
    // argmax A at a simplex vertex.
    let a: Vec<f64> = cert["argmax_A"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect();
    assert!((a[0] - 1.0).abs() < 1e-12 && a[1].abs() < 1e-12 && a[2].abs() < 1e-12);
    assert!(
        elapsed.as_secs() < 60,
        "certification took {elapsed:?}, budget is 60 s"
    );
    println!(
        "ACCEPTANCE 01 PASS: sharp-constant certification (max_ratio {max_ratio:.9}, \
         0 violations, vertex argmax, {elapsed:.2?})"
    );
}

#[test]
fn acceptance_02_gap_equality_on_the_kahler_cylinder() {
    let m = make_model(ModelName::S2xR2, Normalization::Shrinker, &[]).unwrap();
    let d = decompose(&m.curvature).unwrap();
    let report = evaluate(&d, 2.7);
    let thm_a = &report.conditions[3];
    let lhs = thm_a.lhs.unwrap();
    let rhs = thm_a.rhs.unwrap();
    assert!((lhs - 1.0 / 48.0).abs() <= 1e-12, "lhs {lhs}");
    assert!((rhs - 1.0 / 48.0).abs() <= 1e-12, "rhs {rhs}");
    println!("ACCEPTANCE 02 PASS: |W+|^2 - sqrt6 |W+|^3 = (sqrt6/6)|ric0|^2 |W+| = 1/48 on s2xr2");
}

#[test]
fn acceptance_03_kahler_ratio_and_vanishing_weyl() {
    for name in [ModelName::S2xR2, ModelName::Cp2, ModelName::S2xS2] {
        let m = make_model(name, Normalization::Shrinker, &[]).unwrap();
        let d = decompose(&m.curvature).unwrap();
        let ratio = kahler_ratio(&d).unwrap();
        assert!(
            (ratio - 1.0 / 24.0).abs() <= 1e-12,
            "{name}: ratio {ratio}"
        );
    }
    for name in [ModelName::S4, ModelName::S3xR, ModelName::R4] {
        let m = make_model(name, Normalization::Shrinker, &[]).unwrap();
        let d = decompose(&m.curvature).unwrap();
        assert_eq!(d.wplus_norm_sq(), 0.0, "{name}: |W+| must vanish exactly");
    }
    println!("ACCEPTANCE 03 PASS: kahler_ratio = 1/24 on Kahler models, |W+| = 0 exactly elsewhere");
}

#[test]
fn acceptance_04_double_equality_of_the_ratio_condition() {
    let m = make_model(ModelName::S2xR2, Normalization::Shrinker, &[]).unwrap();
    let d = decompose(&m.curvature).unwrap();
    let report = evaluate(&d, 2.7);
    let thm_b = &report.conditions[5];
    assert_eq!(thm_b.id, "thmB");
    let sub = thm_b.sub_margins.unwrap();
    assert!(sub[0].abs() <= 1e-12, "upper sub-margin {}", sub[0]);
    assert!(sub[1].abs() <= 1e-12, "lower sub-margin {}", sub[1]);
    println!("ACCEPTANCE 04 PASS: both ratio sub-margins vanish on s2xr2 (|{:.1e}|, |{:.1e}|)", sub[0], sub[1]);
}

/// Ten sample points per model, the last at distance 10 on the flat factor.
fn acceptance_points(name: ModelName, seed: u64) -> Vec<Vec<f64>> {
    let arity = match name {
        ModelName::S2xR2 => 2,
        ModelName::S3xR => 1,
        ModelName::R4 => 4,
        _ => 0,
    };
    (0..10)
        .map(|i| {
            if arity == 0 {
                Vec::new()
            } else if i == 9 {
                vec![10.0 / (arity as f64).sqrt(); arity]
            } else {
                let mut rng = sample_rng(seed, i);
                (0..arity).map(|_| rng.gen_range(-10.0..=10.0)).collect()
            }
        })
        .collect()
}

#[test]
fn acceptance_05_soliton_identities_at_random_points() {
    for name in catalog() {
        for point in acceptance_points(name, 2024) {
            let m = make_model(name, Normalization::Shrinker, &point).unwrap();
            let res = curv4::models::hamilton_identities(&m).unwrap();
            for (k, r) in res.iter().enumerate() {
                assert!(
                    *r <= 1e-12,
                    "{name} at {point:?}: identity {} residual {r}",
                    k + 1
                );
            }
            assert!(curv4::models::soliton_residual(&m) <= 1e-12);
        }
    }
    println!("ACCEPTANCE 05 PASS: all five soliton identities <= 1e-12 on every model at 10 points");
}

#[test]
fn acceptance_06_weitzenbock_balances() {
    for name in catalog() {
        let m = make_model(name, Normalization::Shrinker, &[]).unwrap();
        let w = curv4::models::weitzenbock_balance(&m).unwrap();
        assert!(w.abs() <= 1e-12, "{name}: balance {w}");
        match curv4::models::kahler_ratio_balance(&m) {
            Ok(v) => assert!(v.abs() <= 1e-12, "{name}: ratio balance {v}"),
            Err(curv4::CurvError::ZeroScalarCurvature) => {
                assert_eq!(name, ModelName::R4, "only the flat model may skip")
            }
            Err(e) => panic!("{name}: {e}"),
        }
    }
    println!("ACCEPTANCE 06 PASS: both balance identities vanish to 1e-12 on the catalog");
}

#[test]
fn acceptance_07_norm_pinchings_miss_the_kahler_cylinder() {
    let (code, v) = json(&["check", "pinch", "s2xr2"]);
    assert_eq!(code, 0);
    let catino = find(&v, "catino");
    assert_eq!(catino["holds"], false);
    let lhs = catino["lhs"].as_f64().unwrap();
    let rhs = catino["rhs"].as_f64().unwrap();
    assert!((lhs - 0.288675).abs() <= 1e-6, "catino lhs {lhs}");
    assert!((rhs - 0.077350).abs() <= 1e-6, "catino rhs {rhs}");
    let zhang = find(&v, "zhang");
    assert_eq!(zhang["holds"], false, "zhang must fail at the default gamma");
    println!(
        "ACCEPTANCE 07 PASS: catino fails ({lhs:.6} vs {rhs:.6}) and zhang fails at gamma 2.7"
    );
}

#[test]
fn acceptance_08_duality_identity_sweep() {
    let (code, v) = json(&["verify", "kn", "--samples", "10000", "--seed", "1"]);
    assert_eq!(code, 0);
    let counts = find(&v, "kn-duality");
    assert_eq!(counts["violations"], 0);
    assert_eq!(counts["samples"], 10000);
    println!("ACCEPTANCE 08 PASS: duality identity, 10000 samples, 0 violations");
}

#[test]
fn acceptance_09_determinant_inequality_sweep() {
    let (code, v) = json(&["verify", "det", "--samples", "100000"]);
    assert_eq!(code, 0);
    let counts = find(&v, "det-inequality");
    assert_eq!(counts["violations"], 0);
    println!("ACCEPTANCE 09 PASS: determinant bound, 100000 samples + equality family, 0 violations");
}

#[test]
fn acceptance_10_second_kind_structure() {
    let mut k_values = Vec::new();
    for i in 0..50 {
        let mut rng = sample_rng(505, i);
        let lam = random_zero_sum(&mut rng, 1.0);
        let mu = random_zero_sum(&mut rng, 1.0);
        let s = certify_second_kind_structure(lam, mu)
            .unwrap_or_else(|e| panic!("sample {i}: {e}"));
        assert!(s.max_offdiag <= 1e-10, "sample {i}: offdiag {}", s.max_offdiag);
        assert!(s.max_residual <= 1e-10, "sample {i}: residual {}", s.max_residual);
        if let Some(k) = s.k {
            k_values.push(k);
        }
    }
    assert!(!k_values.is_empty());
    let checks = reference_spectrum_checks().unwrap();
    for c in &checks {
        assert!(
            c.passes(),
            "{}: signs {} multiplicities {} ratios {}",
            c.model,
            c.signs_match,
            c.multiplicities_match,
            c.ratios_match
        );
    }
    let scales: Vec<f64> = checks.iter().map(|c| c.scale).collect();
    println!(
        "ACCEPTANCE 10 PASS: 50 random spectra h-diagonal with fitted k = {:.12}; \
         reference spectra match with per-example scales {:?}",
        k_values[0], scales
    );
}

#[test]
fn acceptance_11_round_trip_and_invariance() {
    // 100 random Bianchi tensors round-trip at 1e-12.
    for i in 0..100 {
        let mut rng = sample_rng(606, i);
        let t = random_bianchi(&mut rng, 1.0);
        let back = recompose(&decompose(&t).unwrap());
        let err = (back.matrix() - t.matrix()).norm();
        assert!(err <= 1e-12 * (t.norm() + 1.0), "sample {i}: {err}");
    }
    // Scalar invariants stable under 100 random rotations at 1e-10.
    let mut rng = sample_rng(607, 0);
    let t = random_bianchi(&mut rng, 1.0);
    let d0 = decompose(&t).unwrap();
    for i in 0..100 {
        let mut rng = sample_rng(608, i);
        let q = random_rotation(&mut rng);
        let d = decompose(&t.frame_transform(&q).unwrap()).unwrap();
        let tol = 1e-10 * (t.norm() + 1.0);
        assert!((d.scalar - d0.scalar).abs() <= tol);
        assert!((d.ric0.norm() - d0.ric0.norm()).abs() <= tol);
        for k in 0..3 {
            assert!((d.self_dual_spectrum()[k] - d0.self_dual_spectrum()[k]).abs() <= tol);
            assert!(
                (d.anti_self_dual_spectrum()[k] - d0.anti_self_dual_spectrum()[k]).abs() <= tol
            );
        }
        assert!((d.self_dual_det() - d0.self_dual_det()).abs() <= tol);
    }
    // Orientation reversal swaps the spectra exactly.
    let reflect = Matrix4::from_diagonal(&[1.0, 1.0, 1.0, -1.0].into());
    let dr = decompose(&t.frame_transform(&reflect).unwrap()).unwrap();
    assert_eq!(d0.self_dual_spectrum(), dr.anti_self_dual_spectrum());
    assert_eq!(d0.anti_self_dual_spectrum(), dr.self_dual_spectrum());
    println!("ACCEPTANCE 11 PASS: round trips at 1e-12, rotation invariance at 1e-10, exact reflection swap");
}

#[test]
fn acceptance_12_reproducible_json() {
    let commands: [&[&str]; 4] = [
        &["verify", "lemma-k", "--samples", "500", "--seed", "3", "--grid", "20"],
        &["verify", "kn", "--samples", "500", "--seed", "3"],
        &["verify", "det", "--samples", "500", "--seed", "3"],
        &["verify", "second-kind", "--lambda", "2,-1,-1", "--mu", "0.5,0.25,-0.75"],
    ];
    for args in commands {
        let (code1, out1, _) = run_cli(args);
        let (code2, out2, _) = run_cli(args);
        assert_eq!(code1, 0, "{args:?}");
        assert_eq!(code1, code2);
        assert_eq!(out1, out2, "output of {args:?} must be byte-identical");
        assert_eq!(out1.as_bytes(), out2.as_bytes());
    }
    println!("ACCEPTANCE 12 PASS: every verify command is byte-identical across reruns");
}

#[test]
fn acceptance_sharp_constant_value_is_pinned() {
    // √6/3 as used across the acceptance thresholds.
    assert!((SHARP_CONSTANT - 6.0_f64.sqrt() / 3.0).abs() < 1e-15);
}
