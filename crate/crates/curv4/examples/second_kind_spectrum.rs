//! The curvature operator of the second kind: its matrix over the h-basis,
//! the block eigenvalue pattern −(λ_i + μ_j) on pure-Weyl normal forms, and
//! the spectra of the classical model operators against their tabulated
//! reference forms.
//!
//! Run with: cargo run --example second_kind_spectrum

use curv4::decomposition::{recompose, Decomposition};
use curv4::second_kind::second_kind_matrix;
use curv4::verify::{certify_second_kind_structure, reference_spectrum_checks};
use nalgebra::Matrix3;

fn main() {
    // A pure-Weyl normal form: the traceless block is diagonal in the h-basis.
    let lambda = [2.0, -1.0, -1.0];
    let mu = [0.5, 0.25, -0.75];
    let s = certify_second_kind_structure(lambda, mu).unwrap();
    println!("normal form lambda = {lambda:?}, mu = {mu:?}");
    println!("fitted constant k   = {:?}", s.k);
    println!("max off-diagonal    = {:.2e}", s.max_offdiag);
    println!("max pattern residual= {:.2e}", s.max_residual);
    println!("diagonal            = {:?}", s.diagonal.map(|x| (x * 1e6).round() / 1e6));

    // With traceless Ricci present the matrix is no longer h-diagonal.
    let d = Decomposition {
        scalar: 1.0,
        ric0: curv4::basis::h_basis()[0].scale(-0.25),
        wplus: Matrix3::from_diagonal(&[1.0 / 6.0, -1.0 / 12.0, -1.0 / 12.0].into()),
        wminus: Matrix3::from_diagonal(&[1.0 / 6.0, -1.0 / 12.0, -1.0 / 12.0].into()),
    };
    let m = second_kind_matrix(&recompose(&d)).unwrap();
    println!(
        "\nKahler cylinder: coupling h5 <-> h9 through ric0, entry (4,8) = {:.6}",
        m.traceless[(4, 8)]
    );

    println!("\nmodel spectra against their reference forms (one scale per example):");
    for c in reference_spectrum_checks().unwrap() {
        println!(
            "  {:<6} scale {:.9}  signs {}  multiplicities {}  ratios {}",
            c.model.id(),
            c.scale,
            c.signs_match,
            c.multiplicities_match,
            c.ratios_match
        );
        println!("    spectrum  {:?}", c.spectrum.map(|x| (x * 1e6).round() / 1e6));
        println!("    reference {:?}", c.reference.map(|x| (x * 1e6).round() / 1e6));
    }
}
