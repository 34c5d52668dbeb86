//! The Hodge star on 2-forms, its eigenbases, the quaternionic relations of
//! the eigenforms, and the nine h-tensors they generate.
//!
//! Run with: cargo run --example hodge_and_h_basis

use curv4::basis::{
    anti_self_dual_forms, h_basis, hodge_projectors, hodge_star, self_dual_forms,
};

fn main() {
    let star = hodge_star();
    println!("Hodge star over (e12, e13, e14, e23, e24, e34):\n{:.0}", star);
    println!("star^2 = identity: {}", star * star == nalgebra::SMatrix::<f64, 6, 6>::identity());

    let (p_plus, p_minus) = hodge_projectors();
    println!(
        "projectors: P+ + P- = I: {}, P+ P- = 0: {}",
        p_plus + p_minus == nalgebra::SMatrix::<f64, 6, 6>::identity(),
        (p_plus * p_minus).norm() == 0.0
    );

    // ω_i and α_i: norms √2, quaternionic products (as v ↦ ω(·, v)).
    let omegas = self_dual_forms();
    let alphas = anti_self_dual_forms();
    for (k, w) in omegas.iter().enumerate() {
        println!("\nomega_{} (norm {:.4}):\n{:.0}", k + 1, w.norm(), w.as_matrix());
    }
    let w = omegas.map(|f| -f.as_matrix());
    println!("omega_1 omega_2 = omega_3: {}", w[0] * w[1] == w[2]);
    println!("omega_1^2 = -I: {}", w[0] * w[0] == -nalgebra::Matrix4::identity());

    println!("\nh-basis h_k = omega_i alpha_j (traceless, |h| = 2):");
    for (k, h) in h_basis().iter().enumerate() {
        let ip: f64 = (h.matrix().transpose() * h.matrix()).trace();
        println!("h_{} (|h|^2 = {ip:.0}):\n{:.0}", k + 1, h.matrix());
    }
    let _ = alphas;
}
