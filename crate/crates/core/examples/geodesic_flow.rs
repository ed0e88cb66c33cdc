//! Geodesic and horocycle flows on SL(2,R) acting on the half-plane.
//!
//!     cargo run --example geodesic_flow

use anosovlab::hyperbolic::{
    conjugated_horocycle, conjugation_defect_geodesic, geodesic_flow, horocycle_differential_check,
    hyperbolic_distance, moebius_apply, HalfPlanePoint, MoebiusMatrix,
};
use anosovlab::Direction;

fn main() -> anosovlab::Result<()> {
    let t = 1.5;
    let s = 0.7;
    for j in Direction::BOTH {
        let m = conjugated_horocycle(j, t, s);
        println!("xi(-t) xi_{j}(s) xi(t) = {:?}", m.entries());
        println!("  defect {:.2e}", conjugation_defect_geodesic(j, t, s));
    }

    let m = MoebiusMatrix::normalized(1.2, 0.3, -0.4, 0.9)?;
    for j in Direction::BOTH {
        let gap = horocycle_differential_check(j, t, &m, 1e-5, None);
        println!("differential form, j = {j}: {gap:.2e}");
    }

    // the geodesic flow moves i straight up the imaginary axis
    let g = geodesic_flow(&MoebiusMatrix::IDENTITY, -2.0);
    let z = moebius_apply(&g, HalfPlanePoint::I)?;
    println!("xi(-2) . i = {} + {}i, distance {:.12}", z.x(), z.y(), hyperbolic_distance(HalfPlanePoint::I, z));

    let z1 = HalfPlanePoint::new(0.3, 0.5)?;
    let z2 = HalfPlanePoint::new(-1.0, 2.0)?;
    println!(
        "d(z1, z2) = {:.15}, d(m z1, m z2) = {:.15}",
        hyperbolic_distance(z1, z2),
        hyperbolic_distance(moebius_apply(&m, z1)?, moebius_apply(&m, z2)?)
    );
    Ok(())
}
