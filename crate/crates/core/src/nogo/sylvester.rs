use std::io::Write;
use std::path::Path;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative threshold on singular values counted as null directions.
pub const NULL_THRESHOLD: f64 = 1e-9;

/// Solvability data for `[H, G] = i lambda G`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Obstruction {
    pub nullity: usize,
    pub sigma_min: f64,
}

fn hermitian_deviation(h: &DMatrix<Complex64>) -> f64 {
    (h - h.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Null-space dimension and smallest singular value of the superoperator
/// `G -> HG - GH - i lambda G` on `n x n` matrices.
///
/// `ad_H` is hermitian with eigenvalues `e_l - e_k`, so every singular value
/// is `sqrt(omega^2 + lambda^2) >= |lambda|`.
pub fn sylvester_obstruction(h: &DMatrix<Complex64>, lambda: f64) -> Result<Obstruction> {
    let n = h.nrows();
    if n == 0 || h.ncols() != n {
        return Err(Error::Dimension { min: 1, got: n.min(h.ncols()) });
    }
    let h_norm = h.norm();
    let dev = hermitian_deviation(h);
    if dev > 1e-12 * h_norm.max(1.0) {
        return Err(Error::NotHermitian(dev));
    }
    // column-major vec: vec(HG) = (I (x) H) vec G, vec(GH) = (H^T (x) I) vec G
    let id = DMatrix::<Complex64>::identity(n, n);
    let mut l = id.kronecker(h) - h.transpose().kronecker(&id);
    let shift = Complex64::new(0.0, lambda);
    for i in 0..n * n {
        l[(i, i)] -= shift;
    }
    let sv = l.singular_values();
    let threshold = NULL_THRESHOLD * h_norm;
    Ok(Obstruction {
        nullity: sv.iter().filter(|&&s| s <= threshold).count(),
        sigma_min: sv.min(),
    })
}

/// Gaussian hermitian matrix `(A + A*) / 2`.
pub fn random_hermitian(n: usize, rng: &mut ChaCha8Rng) -> DMatrix<Complex64> {
    let a = DMatrix::from_fn(n, n, |_, _| {
        Complex64::new(StandardNormal.sample(rng), StandardNormal.sample(rng))
    });
    (&a + a.adjoint()) * Complex64::new(0.5, 0.0)
}

/// `sum m_i^2` over eigenvalue multiplicities, grouping values closer than `tol`.
pub fn commutant_dimension(eigenvalues: &[f64], tol: f64) -> usize {
    let mut ev = eigenvalues.to_vec();
    ev.sort_by(f64::total_cmp);
    let mut total = 0;
    let mut run = 0;
    for i in 0..ev.len() {
        if i > 0 && ev[i] - ev[i - 1] > tol {
            total += run * run;
            run = 0;
        }
        run += 1;
    }
    total + run * run
}

/// One exported sweep result.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SylvesterRecord {
    pub n: usize,
    pub lambda: f64,
    pub nullity: usize,
    pub sigma_min: f64,
    pub seed: u64,
}

/// Runs `count` cases: case `i` draws a random hermitian matrix of size
/// `2 + i % 11` from seed `seed + i` and pairs it with `lambdas[i % len]`.
pub fn sylvester_sweep(seed: u64, count: usize, lambdas: &[f64]) -> Result<Vec<SylvesterRecord>> {
    if lambdas.is_empty() {
        return Err(Error::InvalidConfig("empty lambda list".into()));
    }
    (0..count)
        .into_par_iter()
        .map(|i| {
            let case_seed = seed.wrapping_add(i as u64);
            let n = 2 + i % 11;
            let lambda = lambdas[i % lambdas.len()];
            let mut rng = ChaCha8Rng::seed_from_u64(case_seed);
            let h = random_hermitian(n, &mut rng);
            let ob = sylvester_obstruction(&h, lambda)?;
            Ok(SylvesterRecord { n, lambda, nullity: ob.nullity, sigma_min: ob.sigma_min, seed: case_seed })
        })
        .collect()
}

/// Writes the records as a JSON array.
pub fn write_sylvester_records(records: &[SylvesterRecord], path: &Path) -> Result<()> {
    let mut f = std::fs::File::create(path)?;
    serde_json::to_writer_pretty(&mut f, records)?;
    f.write_all(b"\n")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::SymmetricEigen;

    fn diag(values: &[f64]) -> DMatrix<Complex64> {
        DMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
            values.len(),
            values.iter().map(|&v| Complex64::new(v, 0.0)),
        ))
    }

    #[test]
    fn two_level_with_rate() {
        let ob = sylvester_obstruction(&diag(&[0.0, 1.0]), 1.0).unwrap();
        assert_eq!(ob.nullity, 0);
        assert!((ob.sigma_min - 1.0).abs() < 1e-12);
    }

    #[test]
    fn two_level_without_rate() {
        let ob = sylvester_obstruction(&diag(&[0.0, 1.0]), 0.0).unwrap();
        assert_eq!(ob.nullity, 2);
    }

    #[test]
    fn explicit_superoperator_spectrum() {
        // eigenvalues of L for H = diag(0,1), lambda = 1 are {-i, -i, 1-i, -1-i}
        let h = diag(&[0.0, 1.0]);
        let id = DMatrix::<Complex64>::identity(2, 2);
        let l = id.kronecker(&h) - h.transpose().kronecker(&id) - DMatrix::identity(4, 4) * Complex64::i();
        let mut moduli: Vec<f64> = (0..4).map(|i| l[(i, i)].norm()).collect();
        moduli.sort_by(f64::total_cmp);
        assert_eq!(moduli[0], 1.0);
        assert!((moduli[3] - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn random_eight_by_eight() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let h = random_hermitian(8, &mut rng);
        let ob = sylvester_obstruction(&h, 0.5).unwrap();
        assert_eq!(ob.nullity, 0);
        assert!(ob.sigma_min >= 0.5 - 1e-9);
    }

    /// Independent route: singular values of `ad_H - i lambda` from the
    /// eigenvalues of `H`.
    #[test]
    fn sigma_min_matches_bohr_frequencies() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for n in [2, 3, 5, 7] {
            let h = random_hermitian(n, &mut rng);
            let ev = SymmetricEigen::new(h.clone()).eigenvalues;
            for lambda in [0.25, 2.0] {
                let mut best = f64::INFINITY;
                for a in ev.iter() {
                    for b in ev.iter() {
                        best = best.min((a - b).hypot(lambda));
                    }
                }
                let ob = sylvester_obstruction(&h, lambda).unwrap();
                assert!((ob.sigma_min - best).abs() < 1e-10, "{} vs {best}", ob.sigma_min);
            }
        }
    }

    #[test]
    fn degenerate_commutant() {
        let h = diag(&[1.0, 1.0, 1.0, -2.0, -2.0, 4.0]);
        let ob = sylvester_obstruction(&h, 0.0).unwrap();
        assert_eq!(ob.nullity, 9 + 4 + 1);
        assert_eq!(commutant_dimension(&[1.0, 1.0, 1.0, -2.0, -2.0, 4.0], 1e-9), 14);
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut h = diag(&[0.0, 1.0]);
        h[(0, 1)] = Complex64::new(0.5, 0.0);
        assert!(matches!(sylvester_obstruction(&h, 1.0), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn sweep_is_deterministic() {
        let a = sylvester_sweep(7, 12, &[0.5, 1.0]).unwrap();
        let b = sylvester_sweep(7, 12, &[0.5, 1.0]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a[3].n, 5);
        assert_eq!(a[3].seed, 10);
    }
}
