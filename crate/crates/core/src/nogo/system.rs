use num_complex::Complex64;

use crate::error::{Error, Result};

/// Hamiltonian levels `e_1 <= ... <= e_n` with stationary weights `w_r`.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteQuantumSystem {
    levels: Vec<f64>,
    weights: Vec<f64>,
}

impl FiniteQuantumSystem {
    pub fn new(levels: Vec<f64>, weights: Vec<f64>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::InvalidSystem("no levels".into()));
        }
        if levels.len() != weights.len() {
            return Err(Error::InvalidSystem(format!(
                "{} levels but {} weights",
                levels.len(),
                weights.len()
            )));
        }
        if levels.iter().any(|e| !e.is_finite()) {
            return Err(Error::InvalidSystem("non-finite level".into()));
        }
        if levels.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::InvalidSystem("levels must be sorted ascending".into()));
        }
        if weights.iter().any(|w| !(*w >= 0.0)) {
            return Err(Error::InvalidSystem("weights must be non-negative".into()));
        }
        let total: f64 = weights.iter().sum();
        if total == 0.0 {
            return Err(Error::EmptySupport);
        }
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidSystem(format!("weights sum to {total}, expected 1")));
        }
        Ok(Self { levels, weights })
    }

    /// Uniform weights over the given levels.
    pub fn uniform(levels: Vec<f64>) -> Result<Self> {
        let n = levels.len();
        Self::new(levels, vec![1.0 / n as f64; n])
    }

    pub fn levels(&self) -> &[f64] {
        &self.levels
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// Bohr frequency `omega_kl = e_l - e_k` (0-based indices).
    pub fn frequency(&self, k: usize, l: usize) -> Result<f64> {
        let n = self.len();
        let ek = *self.levels.get(k).ok_or(Error::LevelIndex(k, n))?;
        let el = *self.levels.get(l).ok_or(Error::LevelIndex(l, n))?;
        Ok(el - ek)
    }
}

/// Orthonormal GNS basis labels `Psi_kl`, `(k,l)` with `w_l > 0`, and the
/// eigenvalue `omega_kl` of the GNS Hamiltonian on each.
#[derive(Debug, Clone, PartialEq)]
pub struct GnsData {
    pub pairs: Vec<(usize, usize)>,
    pub frequencies: Vec<f64>,
}

impl GnsData {
    /// The spectrum with multiplicities, ascending.
    pub fn spectrum(&self) -> Vec<f64> {
        let mut s = self.frequencies.clone();
        s.sort_by(f64::total_cmp);
        s
    }

    pub fn dimension(&self) -> usize {
        self.pairs.len()
    }
}

/// Enumerates the GNS basis of the stationary state `sum_r w_r P_r`.
/// Indices are 0-based.
pub fn gns_build(sys: &FiniteQuantumSystem) -> GnsData {
    let n = sys.len();
    let mut pairs = Vec::new();
    let mut frequencies = Vec::new();
    for l in (0..n).filter(|&l| sys.weights[l] > 0.0) {
        for k in 0..n {
            pairs.push((k, l));
            frequencies.push(sys.levels[l] - sys.levels[k]);
        }
    }
    GnsData { pairs, frequencies }
}

/// `e^{i omega_kl t}`: the Heisenberg evolution of the matrix unit `F_kl`.
pub fn heisenberg_phase(sys: &FiniteQuantumSystem, k: usize, l: usize, t: f64) -> Result<Complex64> {
    Ok(Complex64::from_polar(1.0, sys.frequency(k, l)? * t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn two_level_full_support() {
        let sys = FiniteQuantumSystem::new(vec![0.0, 1.0], vec![0.5, 0.5]).unwrap();
        assert_eq!(gns_build(&sys).spectrum(), vec![-1.0, 0.0, 0.0, 1.0]);
    }

    #[test]
    fn two_level_pure_ground_state() {
        let sys = FiniteQuantumSystem::new(vec![0.0, 1.0], vec![1.0, 0.0]).unwrap();
        let g = gns_build(&sys);
        assert_eq!(g.pairs, vec![(0, 0), (1, 0)]);
        assert_eq!(g.frequencies, vec![0.0, -1.0]);
    }

    #[test]
    fn single_level() {
        let sys = FiniteQuantumSystem::new(vec![3.5], vec![1.0]).unwrap();
        assert_eq!(gns_build(&sys).spectrum(), vec![0.0]);
    }

    #[test]
    fn validation() {
        assert!(matches!(FiniteQuantumSystem::new(vec![0.0, 1.0], vec![0.0, 0.0]), Err(Error::EmptySupport)));
        assert!(FiniteQuantumSystem::new(vec![1.0, 0.0], vec![0.5, 0.5]).is_err());
        assert!(FiniteQuantumSystem::new(vec![0.0, 1.0], vec![0.7, 0.7]).is_err());
        assert!(FiniteQuantumSystem::new(vec![0.0, 1.0], vec![1.5, -0.5]).is_err());
        assert!(FiniteQuantumSystem::new(vec![0.0, f64::NAN], vec![0.5, 0.5]).is_err());
        assert!(FiniteQuantumSystem::new(vec![0.0], vec![0.5, 0.5]).is_err());
    }

    #[test]
    fn phases() {
        let sys = FiniteQuantumSystem::new(vec![0.0, 1.0], vec![0.5, 0.5]).unwrap();
        assert_eq!(heisenberg_phase(&sys, 1, 1, 2.7).unwrap(), Complex64::new(1.0, 0.0));
        let p = heisenberg_phase(&sys, 0, 1, PI).unwrap();
        assert!((p + 1.0).norm() < 1e-15);
        let a = heisenberg_phase(&sys, 0, 1, 0.8).unwrap();
        let b = heisenberg_phase(&sys, 1, 0, 0.8).unwrap();
        assert_eq!(a.conj(), b);
        assert!(heisenberg_phase(&sys, 2, 0, 1.0).is_err());
    }
}
