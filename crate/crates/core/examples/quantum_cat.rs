//! The quantum cat map on the Weyl algebra.
//!
//!     cargo run --example quantum_cat

use std::f64::consts::PI;

use anosovlab::weyl::{QuantumCat, WeylPolynomial};
use anosovlab::Direction;
use num_complex::Complex64;

fn main() -> anosovlab::Result<()> {
    let gamma = PI / 16.0;
    let u = WeylPolynomial::generator((1, 0), gamma);
    let v = WeylPolynomial::generator((0, 1), gamma);

    let uv = u.product(&v)?;
    let vu = v.product(&u)?;
    println!("W(1,0) W(0,1) = {:?}", uv.terms());
    println!("W(0,1) W(1,0) = {:?}", vu.terms());

    let a = WeylPolynomial::from_terms(
        gamma,
        [((1, 0), Complex64::new(1.0, 0.0)), ((2, -1), Complex64::new(0.0, 0.5)), ((0, 0), Complex64::new(0.25, 0.0))],
    );
    let aa = a.adjoint().product(&a)?;
    println!("rho(A* A) = {}  |A|^2 = {}", aa.trace_state(), a.gns_norm().powi(2));

    let qc = QuantumCat::arnold();
    println!("alpha_1 A = {:?}", qc.alpha(&a, 1).terms());
    for j in Direction::BOTH {
        for t in [-6, -2, 2, 6] {
            println!("j = {j}  t = {t:>2}  defect = {:.2e}", qc.hyperbolicity_defect(&a, j, t, 0.5));
        }
    }
    println!("JSON: {}", a.to_json()?);
    Ok(())
}
