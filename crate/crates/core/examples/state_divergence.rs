//! Two states drift apart along the horocycles at rate e^{lambda_j t}.
//!
//!     cargo run --example state_divergence

use std::f64::consts::PI;

use anosovlab::weyl::{state_from_element, QuantumCat, WeylPolynomial};
use anosovlab::Direction;
use num_complex::Complex64;

fn main() -> anosovlab::Result<()> {
    let gamma = PI / 16.0;
    let c = |re, im| Complex64::new(re, im);
    let b1 = WeylPolynomial::from_terms(gamma, [((0, 0), c(1.0, 0.0)), ((1, 1), c(0.5, 0.2))]);
    let b2 = WeylPolynomial::from_terms(gamma, [((0, 0), c(1.0, 0.0)), ((1, -2), c(-0.3, 0.4)), ((2, 0), c(0.1, 0.0))]);
    let w1 = state_from_element(&b1)?;
    let w2 = state_from_element(&b2)?;

    let qc = QuantumCat::arnold();
    let eigen = qc.classical().eigen();
    for j in Direction::BOTH {
        println!("horocycle {j} (lambda = {:+.10})", eigen.exponent(j));
        for t in 0..=6 {
            let ratio = qc.divergence_ratio(&w1, &w2, j, t)?;
            let expected = (eigen.exponent(j) * t as f64).exp();
            println!("  t = {t}  ratio = {ratio:.12e}  e^(lambda t) = {expected:.12e}");
        }
    }
    Ok(())
}
