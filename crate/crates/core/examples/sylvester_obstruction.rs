//! Finite quantum systems: Bohr spectrum, the generator equation and the
//! group-level search.
//!
//!     cargo run --release --example sylvester_obstruction

use anosovlab::nogo::{
    conjugation_defect_search, gns_build, sylvester_obstruction, sylvester_sweep, FiniteQuantumSystem, SearchGrid,
};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

fn main() -> anosovlab::Result<()> {
    let sys = FiniteQuantumSystem::new(vec![0.0, 1.0, 2.5], vec![0.5, 0.3, 0.2])?;
    println!("GNS spectrum: {:?}", gns_build(&sys).spectrum());

    let h = DMatrix::from_diagonal(&DVector::from_vec(vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)]));
    for lambda in [0.0, 0.5, 1.0] {
        let ob = sylvester_obstruction(&h, lambda)?;
        println!("H = diag(0,1), lambda = {lambda}: nullity {}, sigma_min {:.6}", ob.nullity, ob.sigma_min);
    }

    let records = sylvester_sweep(7, 12, &[0.25, 0.5, 1.0, 2.0])?;
    for r in &records {
        println!("n = {:>2}  lambda = {:<4}  nullity {}  sigma_min {:.6}", r.n, r.lambda, r.nullity, r.sigma_min);
    }

    let outcome = conjugation_defect_search(&h, 1.0, 200, &SearchGrid::uniform(9), 1)?;
    println!("best group-level defect over 200 trials: {:.6}", outcome.best_defect);
    Ok(())
}
