//! Clock-and-shift matrices: a finite-dimensional realisation of the Weyl
//! relations at `gamma = pi / N`, used as an independent check on the
//! abstract product rule.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::polynomial::WeylIndex;
use crate::error::{Error, Result};

/// `omega^{-nu1 nu2 / 2} U^{nu1} V^{nu2}` with `U = diag(omega^k)`,
/// `V e_k = e_{k+1}` and `omega = e^{2 pi i / N}`.
///
/// With these conventions `rep(nu) rep(nu') = e^{i pi kappa(nu,nu') / N} rep(nu + nu')`.
pub fn finite_dim_rep(nu: impl Into<WeylIndex>, n: usize) -> Result<DMatrix<Complex64>> {
    if n < 2 {
        return Err(Error::Dimension { min: 2, got: n });
    }
    let WeylIndex(a, b) = nu.into();
    let ni = n as i64;
    let root = |k: i64| Complex64::from_polar(1.0, 2.0 * PI * k.rem_euclid(ni) as f64 / n as f64);
    let prefactor = Complex64::from_polar(1.0, -PI * (a * b).rem_euclid(2 * ni) as f64 / n as f64);
    let mut m = DMatrix::from_element(n, n, Complex64::new(0.0, 0.0));
    for k in 0..ni {
        let row = (k + b).rem_euclid(ni);
        m[(row as usize, k as usize)] = prefactor * root(a * row);
    }
    Ok(m)
}

/// `tr(rep(nu)) / N`, defined only inside the window `|nu_i| < N/2` where it
/// equals `delta_{nu,0}`.
pub fn normalized_trace(nu: impl Into<WeylIndex>, n: usize) -> Result<Complex64> {
    let nu = nu.into();
    let half = n as f64 / 2.0;
    if (nu.0.abs() as f64) >= half || (nu.1.abs() as f64) >= half {
        return Err(Error::TraceWindow { nu1: nu.0, nu2: nu.1, dim: n, half });
    }
    let m = finite_dim_rep(nu, n)?;
    Ok(m.trace() / n as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn max_gap(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> f64 {
        a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
    }

    #[test]
    fn zero_index_is_identity() {
        let m = finite_dim_rep((0, 0), 5).unwrap();
        assert_eq!(m, DMatrix::identity(5, 5));
    }

    #[test]
    fn four_dim_product() {
        let lhs = finite_dim_rep((1, 0), 4).unwrap() * finite_dim_rep((0, 1), 4).unwrap();
        let rhs = finite_dim_rep((1, 1), 4).unwrap() * Complex64::from_polar(1.0, PI / 4.0);
        assert!(max_gap(&lhs, &rhs) < 1e-14);
    }

    #[test]
    fn explicit_four_by_four() {
        // U V on e_k is omega^{k+1} e_{k+1}
        let i = Complex64::i();
        let uv = finite_dim_rep((1, 0), 4).unwrap() * finite_dim_rep((0, 1), 4).unwrap();
        let powers = [i, -Complex64::new(1.0, 0.0), -i, Complex64::new(1.0, 0.0)];
        for k in 0..4 {
            let row = (k + 1) % 4;
            assert!((uv[(row, k)] - powers[k]).norm() < 1e-15);
        }
    }

    #[test]
    fn trace_of_clock() {
        assert!(normalized_trace((1, 0), 8).unwrap().norm() < 1e-15);
        assert!((normalized_trace((0, 0), 8).unwrap() - 1.0).norm() < 1e-15);
        assert!(matches!(normalized_trace((4, 0), 8), Err(Error::TraceWindow { .. })));
        assert!(finite_dim_rep((1, 1), 1).is_err());
    }

    #[test]
    fn unitary() {
        let m = finite_dim_rep((2, -3), 7).unwrap();
        let id = m.adjoint() * &m;
        assert!(max_gap(&id, &DMatrix::identity(7, 7)) < 1e-14);
    }
}
