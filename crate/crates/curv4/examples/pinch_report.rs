//! Evaluate all seven pinching conditions on each model and print the margin
//! table. The Kähler cylinder is the interesting row: it sits exactly on the
//! boundary of the self-dual gap conditions while defeating both norm
//! pinchings.
//!
//! Run with: cargo run --example pinch_report

use curv4::decomposition::decompose;
use curv4::models::{catalog, make_model, Normalization};
use curv4::pinching::evaluate;

fn main() {
    for name in catalog() {
        let m = make_model(name, Normalization::Shrinker, &[]).unwrap();
        let d = decompose(&m.curvature).unwrap();
        let report = evaluate(&d, 2.7);
        println!("== {name} (gamma = {}) ==", report.gamma);
        for c in &report.conditions {
            if !c.applicable {
                println!("  {:<14} not applicable (R <= 0)", c.id);
                continue;
            }
            println!(
                "  {:<14} lhs {:>13.6e}  rhs {:>13.6e}  margin {:>13.6e}  holds {}",
                c.id,
                c.lhs.unwrap(),
                c.rhs.unwrap(),
                c.margin.unwrap(),
                c.holds
            );
        }
        match report.sharp_ratio {
            Some(r) => println!("  sharp ratio = {r:.9}  (bound sqrt(6)/3 = 0.816496581)"),
            None => println!("  sharp ratio undefined (|ric0| |W+| = 0)"),
        }
        if let Some(k) = report.kahler_ratio {
            println!("  |W+|^2/R^2 = {k:.9}  (Kahler value 1/24 = {:.9})", 1.0 / 24.0);
        }
        println!();
    }
}
