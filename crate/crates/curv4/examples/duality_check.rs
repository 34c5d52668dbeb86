//! The duality (T̂A, B) = −⟨T, A⊙B⟩ between the second-kind action and the
//! Kulkarni–Nomizu pairing, on anchored normal forms and on random samples.
//!
//! Run with: cargo run --example duality_check

use curv4::basis::h_basis;
use curv4::decomposition::{recompose, Decomposition};
use curv4::kulkarni_nomizu;
use curv4::verify::{check_kn_identity, oracle_second_kind, SampleConfig};
use nalgebra::Matrix3;

fn main() {
    // Normal-form anchor: T = pure W+, A = B = h1 gives (T̂ h1, h1) = −4 λ1.
    let lam = [0.7, -0.2, -0.5];
    let d = Decomposition {
        wplus: Matrix3::from_diagonal(&lam.into()),
        ..Decomposition::zero()
    };
    let t = recompose(&d);
    let h1 = &h_basis()[0];
    let ta = oracle_second_kind(&t.to_flat(), h1).unwrap();
    let lhs = ta.inner(h1);
    let rhs = -t.inner(&kulkarni_nomizu(h1, h1));
    println!("T = W+ normal form with lambda = {lam:?}");
    println!("  (T^ h1, h1)        = {lhs:.12}   (expected -4 lambda_1 = {})", -4.0 * lam[0]);
    println!("  -<T, h1 kn h1>     = {rhs:.12}");
    println!("  difference         = {:.3e}", lhs - rhs);

    let cfg = SampleConfig {
        seed: 42,
        count: 10_000,
        ..SampleConfig::default()
    };
    let violations = check_kn_identity(&cfg);
    println!(
        "\nrandom sweep: {} samples (seed {}), {} violations at 1e-10 relative",
        cfg.count, cfg.seed, violations
    );
}
