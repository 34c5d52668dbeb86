//! The determinant bound det W+ ≤ (√6/18)|W+|³ on zero-sum spectra, with its
//! equality family λ = s(1, −½, −½).
//!
//! Run with: cargo run --example det_inequality

use curv4::pinching::SQRT6;
use curv4::verify::{certify_det_inequality, random_zero_sum, sample_rng, SampleConfig};

fn main() {
    let cfg = SampleConfig {
        seed: 1,
        count: 50_000,
        ..SampleConfig::default()
    };
    let violations = certify_det_inequality(&cfg);
    println!(
        "{} random spectra + equality family: {} violations",
        cfg.count, violations
    );

    println!("\na few samples:");
    for i in 0..5 {
        let mut rng = sample_rng(cfg.seed, i);
        let lam = random_zero_sum(&mut rng, 1.0);
        let det = lam[0] * lam[1] * lam[2];
        let bound = SQRT6 / 18.0 * (lam.iter().map(|x| x * x).sum::<f64>()).powf(1.5);
        println!(
            "  lambda [{:+.4}, {:+.4}, {:+.4}]  det {:+.6}  bound {:+.6}  slack {:.3e}",
            lam[0],
            lam[1],
            lam[2],
            det,
            bound,
            bound - det
        );
    }

    println!("\nequality family s(1, -1/2, -1/2):");
    for s in [0.5f64, 1.0, 2.0] {
        let det = s * s * s / 4.0;
        let bound = SQRT6 / 18.0 * (1.5 * s * s).powf(1.5);
        println!("  s = {s}: det {det:.12}  bound {bound:.12}  gap {:.2e}", bound - det);
    }
}
