//! Frame changes act on curvature through the induced map on 2-forms:
//! rotations preserve every scalar invariant, while a reflection exchanges
//! the self-dual and anti-self-dual spectra exactly.
//!
//! Run with: cargo run --example frame_invariance

use curv4::decomposition::decompose;
use curv4::verify::{random_bianchi, random_rotation, sample_rng};
use nalgebra::Matrix4;

fn main() {
    let mut rng = sample_rng(3, 0);
    let t = random_bianchi(&mut rng, 1.0);
    let d = decompose(&t).unwrap();
    println!("original:   R = {:+.6}  lambda = {:?}", d.scalar, round3(d.self_dual_spectrum()));
    println!("            mu = {:?}", round3(d.anti_self_dual_spectrum()));

    let q = random_rotation(&mut rng);
    let dr = decompose(&t.frame_transform(&q).unwrap()).unwrap();
    println!("\nafter a random rotation:");
    println!("  R drift      {:.2e}", (dr.scalar - d.scalar).abs());
    println!(
        "  lambda drift {:.2e}",
        max_drift(d.self_dual_spectrum(), dr.self_dual_spectrum())
    );
    println!(
        "  det W+ drift {:.2e}",
        (dr.self_dual_det() - d.self_dual_det()).abs()
    );

    let reflect = Matrix4::from_diagonal(&[1.0, 1.0, 1.0, -1.0].into());
    let df = decompose(&t.frame_transform(&reflect).unwrap()).unwrap();
    println!("\nafter the reflection diag(1, 1, 1, -1):");
    println!("  new lambda = {:?}", round3(df.self_dual_spectrum()));
    println!("  old mu     = {:?}", round3(d.anti_self_dual_spectrum()));
    println!(
        "  spectra swapped bitwise: {}",
        df.self_dual_spectrum() == d.anti_self_dual_spectrum()
            && df.anti_self_dual_spectrum() == d.self_dual_spectrum()
    );

    let skew = Matrix4::identity() * 1.1;
    println!(
        "\nnon-orthogonal frames are rejected: {:?}",
        t.frame_transform(&skew).unwrap_err()
    );
}

fn round3(v: [f64; 3]) -> [f64; 3] {
    v.map(|x| (x * 1e6).round() / 1e6)
}

fn max_drift(a: [f64; 3], b: [f64; 3]) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}
