//! Walk the model catalog: scalar curvature, Weyl spectra, soliton residuals,
//! the five shrinker identities, and both balance laws for every model.
//!
//! Run with: cargo run --example model_tour

use curv4::decomposition::decompose;
use curv4::models::{
    catalog, hamilton_identities, kahler_ratio_balance, make_model, soliton_residual,
    weitzenbock_balance, Normalization,
};
use curv4::pinching::classify;

fn main() {
    for name in catalog() {
        let m = make_model(name, Normalization::Shrinker, &[]).unwrap();
        let d = decompose(&m.curvature).unwrap();
        let lam = d.self_dual_spectrum();
        println!("== {name} ==");
        println!(
            "  R = {:.4}   |ric0| = {:.4}   W+ spectrum [{:.4}, {:.4}, {:.4}]",
            m.scalar,
            d.ric0.norm(),
            lam[0],
            lam[1],
            lam[2]
        );
        println!(
            "  f = {:.4}   soliton residual = {:.2e}",
            m.f_value,
            soliton_residual(&m)
        );
        let ids = hamilton_identities(&m).unwrap();
        println!(
            "  identity residuals: [{:.1e}, {:.1e}, {:.1e}, {:.1e}, {:.1e}]",
            ids[0], ids[1], ids[2], ids[3], ids[4]
        );
        print!(
            "  weitzenbock balance = {:.2e}",
            weitzenbock_balance(&m).unwrap()
        );
        match kahler_ratio_balance(&m) {
            Ok(v) => println!("   ratio balance = {v:.2e}"),
            Err(_) => println!("   ratio balance skipped (R = 0)"),
        }
        println!("  {}", classify(&m));
        println!();
    }

    // The cylinder's potential grows quadratically on the flat factor.
    let far = make_model(curv4::models::ModelName::S2xR2, Normalization::Shrinker, &[6.0, 8.0]).unwrap();
    println!(
        "s2xr2 at |y| = 10: f = {} (|y|^2/4 + 1), residual still {:.1e}",
        far.f_value,
        soliton_residual(&far)
    );
}
