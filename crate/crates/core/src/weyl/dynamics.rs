use std::f64::consts::PI;

use num_complex::Complex64;

use super::polynomial::{same_gamma, WeylIndex, WeylPolynomial};
use super::state::{Functional, StateFunctional};
use crate::cat::{CatSystem, EigenSystem, IntegerSymplecticMap};
use crate::direction::Direction;
use crate::error::{Error, Result};

/// Dynamical and horocyclic automorphisms of the Weyl algebra induced by a
/// hyperbolic torus automorphism:
///
/// ```text
/// alpha_t W(nu)    = W(phi^{-t} nu)
/// sigma_j(s) W(nu) = exp(2 pi i nu.V_j s) W(nu)
/// ```
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantumCat {
    classical: CatSystem,
}

impl Default for QuantumCat {
    fn default() -> Self {
        Self::arnold()
    }
}

impl QuantumCat {
    pub fn arnold() -> Self {
        Self { classical: CatSystem::arnold() }
    }

    pub fn new(classical: CatSystem) -> Self {
        Self { classical }
    }

    pub fn classical(&self) -> &CatSystem {
        &self.classical
    }

    fn map(&self) -> &IntegerSymplecticMap {
        self.classical.map()
    }

    fn eigen(&self) -> &EigenSystem {
        self.classical.eigen()
    }

    /// `alpha_t`: relabels `W(nu)` as `W(phi^{-t} nu)` with exact integer
    /// powers.
    ///
    /// # Panics
    ///
    /// Panics if an image index overflows `i64`.
    pub fn alpha(&self, a: &WeylPolynomial, t: i64) -> WeylPolynomial {
        let map = *self.map();
        a.reindex(|nu| map.apply_lattice(-t, nu.to_array()).into())
    }

    /// Phase `exp(2 pi i nu.V_j s)` picked up by `W(nu)` under `sigma_j(s)`.
    pub fn horocycle_phase(&self, nu: WeylIndex, j: Direction, s: f64) -> Complex64 {
        Complex64::from_polar(1.0, 2.0 * PI * nu.dot(self.eigen().vector(j)) * s)
    }

    /// `sigma_j(s)`.
    pub fn sigma(&self, a: &WeylPolynomial, j: Direction, s: f64) -> WeylPolynomial {
        a.modulate(|nu| self.horocycle_phase(nu, j, s))
    }

    /// GNS norm of `alpha_t sigma_j(s) alpha_{-t} A - sigma_j(s growth) A`.
    pub fn hyperbolicity_defect_with_growth(&self, a: &WeylPolynomial, j: Direction, t: i64, s: f64, growth: f64) -> f64 {
        let lhs = self.alpha(&self.sigma(&self.alpha(a, -t), j, s), t);
        let rhs = self.sigma(a, j, s * growth);
        lhs.checked_sub(&rhs).expect("same gamma").gns_norm()
    }

    /// Quantum hyperbolicity defect with the cat growth factor
    /// `e^{lambda_j t} = k_j^t`.
    pub fn hyperbolicity_defect(&self, a: &WeylPolynomial, j: Direction, t: i64, s: f64) -> f64 {
        self.hyperbolicity_defect_with_growth(a, j, t, s, self.eigen().growth(j, t))
    }

    /// Dual dynamics on functionals: `(F o alpha_t)(W(nu)) = F(W(phi^{-t} nu))`,
    /// so the value stored at `nu` moves to `phi^t nu`.
    pub fn dual_evolve_functional(&self, f: &Functional, t: i64) -> Functional {
        let map = *self.map();
        f.reindex(|nu| map.apply_lattice(t, nu.to_array()).into())
    }

    pub fn dual_evolve(&self, f: &StateFunctional, t: i64) -> StateFunctional {
        StateFunctional::new(self.dual_evolve_functional(f.functional(), t))
            .expect("lattice bijection preserves the state conditions")
    }

    /// `sqrt(sum_nu |2 pi nu.V_j|^2 |t_nu|^2)`: l2 norm of the horocycle
    /// generator applied to `f`.
    pub fn horocycle_generator_norm(&self, f: &Functional, j: Direction) -> f64 {
        let v = self.eigen().vector(j);
        f.values()
            .iter()
            .fold(0.0, |acc, (nu, c)| acc + (2.0 * PI * nu.dot(v)).powi(2) * c.norm_sqr())
            .sqrt()
    }

    pub fn dual_horocycle_generator_norm(&self, f: &StateFunctional, j: Direction) -> f64 {
        self.horocycle_generator_norm(f.functional(), j)
    }

    /// Growth of the horocycle separation of two states under the dual
    /// dynamics; equals `e^{lambda_j t}`.
    pub fn divergence_ratio(&self, f1: &StateFunctional, f2: &StateFunctional, j: Direction, t: i64) -> Result<f64> {
        same_gamma(f1.gamma(), f2.gamma())?;
        let diff = f1.functional().difference(f2.functional())?;
        let base = self.horocycle_generator_norm(&diff, j);
        if base == 0.0 {
            return Err(Error::DegenerateDifference(j.index()));
        }
        let evolved = self.horocycle_generator_norm(&self.dual_evolve_functional(&diff, t), j);
        Ok(evolved / base)
    }
}
