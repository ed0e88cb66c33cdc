use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::polynomial::{prune, same_gamma, to_records, TermRecord, WeylIndex, WeylPolynomial};
use crate::error::{Error, Result};

/// Tolerance for the normalisation and hermiticity checks on states.
pub const STATE_TOLERANCE: f64 = 1e-12;

/// A linear functional on the polynomial algebra, stored through its values
/// `t_nu = F(W(nu))` on the generators. Differences of states live here.
#[derive(Debug, Clone, PartialEq)]
pub struct Functional {
    coeffs: BTreeMap<WeylIndex, Complex64>,
    gamma: f64,
}

impl Functional {
    pub fn from_values<I, N>(gamma: f64, values: I) -> Self
    where
        I: IntoIterator<Item = (N, Complex64)>,
        N: Into<WeylIndex>,
    {
        let mut coeffs = BTreeMap::new();
        for (nu, c) in values {
            *coeffs.entry(nu.into()).or_insert(Complex64::new(0.0, 0.0)) += c;
        }
        prune(&mut coeffs);
        Self { coeffs, gamma }
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn values(&self) -> &BTreeMap<WeylIndex, Complex64> {
        &self.coeffs
    }

    /// `F(W(nu))`.
    pub fn value(&self, nu: impl Into<WeylIndex>) -> Complex64 {
        self.coeffs.get(&nu.into()).copied().unwrap_or_default()
    }

    /// `F(A) = sum_nu a_nu t_nu`.
    pub fn evaluate(&self, a: &WeylPolynomial) -> Result<Complex64> {
        same_gamma(self.gamma, a.gamma())?;
        Ok(a.terms().iter().map(|(nu, c)| c * self.value(*nu)).sum())
    }

    /// Coefficientwise `self - other`.
    pub fn difference(&self, other: &Functional) -> Result<Functional> {
        same_gamma(self.gamma, other.gamma)?;
        let neg = other.coeffs.iter().map(|(&nu, &c)| (nu, -c));
        Ok(Self::from_values(self.gamma, self.coeffs.iter().map(|(&nu, &c)| (nu, c)).chain(neg)))
    }

    pub fn scale(&self, c: Complex64) -> Functional {
        Self::from_values(self.gamma, self.coeffs.iter().map(|(&nu, &v)| (nu, v * c)))
    }

    /// l2 norm of the coefficient sequence.
    pub fn l2_norm(&self) -> f64 {
        self.coeffs.values().fold(0.0, |acc, c| acc + c.norm_sqr()).sqrt()
    }

    pub(crate) fn reindex(&self, mut f: impl FnMut(WeylIndex) -> WeylIndex) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&nu, &c)| (f(nu), c)).collect(),
            gamma: self.gamma,
        }
    }

    fn check_state(&self) -> Result<()> {
        let t0 = self.value(WeylIndex::ZERO);
        if (t0 - Complex64::new(1.0, 0.0)).norm() > STATE_TOLERANCE {
            return Err(Error::NotNormalised(format!("{t0}")));
        }
        for (&nu, &c) in &self.coeffs {
            if (self.value(-nu) - c.conj()).norm() > STATE_TOLERANCE {
                return Err(Error::NotHermitianState(nu.0, nu.1));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(&FunctionalRecord { gamma: self.gamma, terms: to_records(&self.coeffs) })?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let rec: FunctionalRecord = serde_json::from_str(s)?;
        let mut coeffs = BTreeMap::new();
        for t in rec.terms {
            *coeffs.entry(WeylIndex::from(t.nu)).or_insert(Complex64::new(0.0, 0.0)) += Complex64::new(t.re, t.im);
        }
        Ok(Self { coeffs, gamma: rec.gamma })
    }
}

#[derive(Serialize, Deserialize)]
struct FunctionalRecord {
    gamma: f64,
    terms: Vec<TermRecord>,
}

/// A normalised hermitian functional: `t_0 = 1` and `t_{-nu} = conj(t_nu)`.
#[derive(Debug, Clone, PartialEq)]
pub struct StateFunctional(Functional);

impl StateFunctional {
    pub fn new(functional: Functional) -> Result<Self> {
        functional.check_state()?;
        Ok(Self(functional))
    }

    /// The tracial state `t_nu = delta_{nu,0}`.
    pub fn tracial(gamma: f64) -> Self {
        Self(Functional::from_values(gamma, [(WeylIndex::ZERO, Complex64::new(1.0, 0.0))]))
    }

    pub fn functional(&self) -> &Functional {
        &self.0
    }

    pub fn into_functional(self) -> Functional {
        self.0
    }

    pub fn gamma(&self) -> f64 {
        self.0.gamma
    }

    pub fn value(&self, nu: impl Into<WeylIndex>) -> Complex64 {
        self.0.value(nu)
    }

    pub fn to_json(&self) -> Result<String> {
        self.0.to_json()
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Self::new(Functional::from_json(s)?)
    }
}

/// Vector state `rho_B(A) = rho(B* A B) / rho(B* B)` of the tracial GNS
/// representation.
pub fn state_from_element(b: &WeylPolynomial) -> Result<StateFunctional> {
    let gamma = b.gamma();
    let b_star = b.adjoint();
    // same sum as the nu = 0 sandwich below, so t_0 normalises to exactly 1
    let norm_sq = b_star.product(b)?.trace_state().re;
    if norm_sq <= 0.0 {
        return Err(Error::ZeroElement);
    }
    // rho(B* W(nu) B) vanishes unless nu is a difference of support points
    let mut support: Vec<WeylIndex> = Vec::new();
    for &mu in b.terms().keys() {
        for &eta in b.terms().keys() {
            support.push(mu - eta);
        }
    }
    support.sort();
    support.dedup();
    let mut values = Vec::with_capacity(support.len());
    for nu in support {
        let sandwich = b_star.product(&WeylPolynomial::generator(nu, gamma))?.product(b)?;
        values.push((nu, sandwich.trace_state() / norm_sq));
    }
    StateFunctional::new(Functional::from_values(gamma, values))
}
