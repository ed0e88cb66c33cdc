//! Clock-and-shift matrices reproduce the Weyl product at gamma = pi / N.
//!
//!     cargo run --example clock_shift

use std::f64::consts::PI;

use anosovlab::weyl::{finite_dim_rep, normalized_trace, WeylIndex};
use num_complex::Complex64;

fn main() -> anosovlab::Result<()> {
    for n in [4usize, 8, 16] {
        let gamma = PI / n as f64;
        let mut worst: f64 = 0.0;
        for a in -3..=3 {
            for b in -3..=3 {
                for c in -3..=3 {
                    for d in -3..=3 {
                        let (nu, mu) = (WeylIndex(a, b), WeylIndex(c, d));
                        let lhs = finite_dim_rep(nu, n)? * finite_dim_rep(mu, n)?;
                        let phase = Complex64::from_polar(1.0, gamma * nu.kappa(mu) as f64);
                        let rhs = finite_dim_rep(nu + mu, n)? * phase;
                        worst = worst.max((lhs - rhs).iter().map(|z| z.norm()).fold(0.0, f64::max));
                    }
                }
            }
        }
        println!("N = {n:>2}: max structure-constant gap {worst:.2e}");
        println!("  tr/N of rep(0,0) = {}, rep(1,0) = {:.1e}", normalized_trace((0, 0), n)?, normalized_trace((1, 0), n)?.norm());
    }
    Ok(())
}
