//! Arnold cat map: eigendata, horocycle conjugation and the Lyapunov fit.
//!
//!     cargo run --example cat_map

use anosovlab::cat::{CatSystem, TorusPoint};
use anosovlab::Direction;

fn main() -> anosovlab::Result<()> {
    let cat = CatSystem::arnold();
    let e = cat.eigen();
    println!("k1 = {:.15}  lambda1 = {:.15}", e.k1, e.lambda1);
    println!("V1 = {:?}\nV2 = {:?}", e.v1, e.v2);

    let m = TorusPoint::new(0.318_309_886, 0.577_215_664);
    for t in [1, 5, 10] {
        let orbit = cat.apply(m, t);
        println!("phi^{t} m = ({:.12}, {:.12})", orbit.x(), orbit.y());
    }

    println!("\nconjugation defects at s = 0.5");
    for j in Direction::BOTH {
        for t in [-10, -3, 3, 10] {
            println!(
                "  j = {j}  t = {t:>3}  conj = {:.2e}  diff = {:.2e}",
                cat.conjugation_defect(j, t, 0.5, m),
                cat.differential_defect(j, t)
            );
        }
    }

    let curve = cat.separation_growth(m, [1.0, 0.0], 1e-8, 15)?;
    for (t, d) in curve.samples.iter().step_by(5) {
        println!("t = {t:>2}  |phi_t m - phi_t m'| = {d:.6e}");
    }
    println!("fitted slope {:.10} (lambda1 {:.10})", curve.fitted_slope().unwrap_or(f64::NAN), e.lambda1);

    let avg = cat.birkhoff_average([1, 0], m, 100_000)?;
    println!("Birkhoff average of exp(2 pi i x) over 1e5 steps: |.| = {:.3e}", avg.norm());
    Ok(())
}
