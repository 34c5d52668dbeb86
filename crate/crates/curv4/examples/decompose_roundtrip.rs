//! Decompose a random algebraic curvature tensor into scalar, traceless
//! Ricci, and Weyl halves, then rebuild it and measure the round-trip error.
//!
//! Run with: cargo run --example decompose_roundtrip

use curv4::decomposition::{decompose, recompose};
use curv4::verify::{random_bianchi, sample_rng};

fn main() {
    let mut rng = sample_rng(12, 0);
    let t = random_bianchi(&mut rng, 1.0);
    println!("random curvature operator (6x6 over e12..e34):");
    println!("{:.4}", t.matrix());
    println!("Bianchi residual: {:.3e}", t.bianchi_residual());

    let d = decompose(&t).unwrap();
    println!("scalar curvature R = {:.6}", d.scalar);
    println!("traceless Ricci:\n{:.4}", d.ric0.matrix());
    let lam = d.self_dual_spectrum();
    let mu = d.anti_self_dual_spectrum();
    println!("W+ spectrum: [{:.6}, {:.6}, {:.6}]  (sum {:.2e})", lam[0], lam[1], lam[2], lam.iter().sum::<f64>());
    println!("W- spectrum: [{:.6}, {:.6}, {:.6}]", mu[0], mu[1], mu[2]);
    println!("det W+ = {:.6e}", d.self_dual_det());

    let back = recompose(&d);
    let err = (back.matrix() - t.matrix()).norm();
    println!("recompose(decompose(T)) error: {err:.3e}");

    // The three pieces are orthogonal for the curvature inner product.
    let g = curv4::SymTensor2::metric();
    let scalar_part = curv4::kulkarni_nomizu(&g, &g).scale(d.scalar / 24.0);
    let ric_part = curv4::kulkarni_nomizu(&d.ric0, &g).scale(0.5);
    let weyl = d.self_dual_weyl_tensor().add(&d.anti_self_dual_weyl_tensor());
    println!(
        "orthogonality of the pieces: <S,E> = {:.2e}, <S,W> = {:.2e}, <E,W> = {:.2e}",
        scalar_part.inner(&ric_part),
        scalar_part.inner(&weyl),
        ric_part.inner(&weyl)
    );
}
