use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficients with modulus at or below this are dropped after arithmetic.
pub const PRUNE_THRESHOLD: f64 = 1e-15;

/// A frequency `nu = (nu1, nu2)` in `Z^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct WeylIndex(pub i64, pub i64);

impl WeylIndex {
    pub const ZERO: WeylIndex = WeylIndex(0, 0);

    pub fn to_array(self) -> [i64; 2] {
        [self.0, self.1]
    }

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    /// `kappa(self, other) = nu1 nu2' - nu2 nu1'`.
    pub fn kappa(self, other: WeylIndex) -> i64 {
        crate::cat::kappa(self.to_array(), other.to_array())
    }

    pub fn dot(self, v: [f64; 2]) -> f64 {
        self.0 as f64 * v[0] + self.1 as f64 * v[1]
    }
}

impl From<[i64; 2]> for WeylIndex {
    fn from(a: [i64; 2]) -> Self {
        WeylIndex(a[0], a[1])
    }
}

impl From<(i64, i64)> for WeylIndex {
    fn from(a: (i64, i64)) -> Self {
        WeylIndex(a.0, a.1)
    }
}

impl Add for WeylIndex {
    type Output = WeylIndex;
    fn add(self, rhs: Self) -> Self {
        WeylIndex(self.0 + rhs.0, self.1 + rhs.1)
    }
}

impl Sub for WeylIndex {
    type Output = WeylIndex;
    fn sub(self, rhs: Self) -> Self {
        WeylIndex(self.0 - rhs.0, self.1 - rhs.1)
    }
}

impl Neg for WeylIndex {
    type Output = WeylIndex;
    fn neg(self) -> Self {
        WeylIndex(-self.0, -self.1)
    }
}

pub(crate) fn prune(terms: &mut BTreeMap<WeylIndex, Complex64>) {
    terms.retain(|_, c| c.norm() > PRUNE_THRESHOLD);
}

pub(crate) fn same_gamma(a: f64, b: f64) -> Result<()> {
    if a.to_bits() == b.to_bits() {
        Ok(())
    } else {
        Err(Error::GammaMismatch(a, b))
    }
}

/// An element of the polynomial algebra spanned by the `W(nu)`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeylPolynomial {
    terms: BTreeMap<WeylIndex, Complex64>,
    gamma: f64,
}

impl WeylPolynomial {
    pub fn zero(gamma: f64) -> Self {
        Self { terms: BTreeMap::new(), gamma }
    }

    pub fn identity(gamma: f64) -> Self {
        Self::generator(WeylIndex::ZERO, gamma)
    }

    /// The unitary `W(nu)`.
    pub fn generator(nu: impl Into<WeylIndex>, gamma: f64) -> Self {
        Self::monomial(nu, Complex64::new(1.0, 0.0), gamma)
    }

    /// `c W(nu)`.
    pub fn monomial(nu: impl Into<WeylIndex>, c: Complex64, gamma: f64) -> Self {
        Self::from_terms(gamma, [(nu.into(), c)])
    }

    /// Sums repeated indices and prunes negligible coefficients.
    pub fn from_terms<I, N>(gamma: f64, terms: I) -> Self
    where
        I: IntoIterator<Item = (N, Complex64)>,
        N: Into<WeylIndex>,
    {
        let mut map = BTreeMap::new();
        for (nu, c) in terms {
            *map.entry(nu.into()).or_insert(Complex64::new(0.0, 0.0)) += c;
        }
        prune(&mut map);
        Self { terms: map, gamma }
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn terms(&self) -> &BTreeMap<WeylIndex, Complex64> {
        &self.terms
    }

    pub fn coefficient(&self, nu: impl Into<WeylIndex>) -> Complex64 {
        self.terms.get(&nu.into()).copied().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::from_terms(self.gamma, self.terms.iter().map(|(&nu, &a)| (nu, a * c)))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        same_gamma(self.gamma, other.gamma)?;
        Ok(Self::from_terms(self.gamma, self.terms.iter().chain(other.terms.iter()).map(|(&nu, &c)| (nu, c))))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    /// Twisted product, extended bilinearly from the generator rule.
    pub fn product(&self, other: &Self) -> Result<Self> {
        same_gamma(self.gamma, other.gamma)?;
        let mut out = BTreeMap::new();
        for (&nu, &a) in &self.terms {
            for (&mu, &b) in &other.terms {
                let phase = Complex64::from_polar(1.0, self.gamma * nu.kappa(mu) as f64);
                *out.entry(nu + mu).or_insert(Complex64::new(0.0, 0.0)) += a * b * phase;
            }
        }
        prune(&mut out);
        Ok(Self { terms: out, gamma: self.gamma })
    }

    /// `(sum c_nu W(nu))* = sum conj(c_nu) W(-nu)`.
    pub fn adjoint(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&nu, c)| (-nu, c.conj())).collect(),
            gamma: self.gamma,
        }
    }

    /// Tracial state: the coefficient of `W(0)`.
    pub fn trace_state(&self) -> Complex64 {
        self.coefficient(WeylIndex::ZERO)
    }

    /// GNS norm `sqrt(rho(A* A))`. The generators are orthonormal for the
    /// tracial state, so this is the l2 norm of the coefficients.
    pub fn gns_norm(&self) -> f64 {
        self.terms.values().fold(0.0, |acc, c| acc + c.norm_sqr()).sqrt()
    }

    /// Applies `f` to every index. `f` must be injective.
    pub(crate) fn reindex(&self, mut f: impl FnMut(WeylIndex) -> WeylIndex) -> Self {
        Self {
            terms: self.terms.iter().map(|(&nu, &c)| (f(nu), c)).collect(),
            gamma: self.gamma,
        }
    }

    /// Multiplies the coefficient at `nu` by `f(nu)`.
    pub(crate) fn modulate(&self, mut f: impl FnMut(WeylIndex) -> Complex64) -> Self {
        let mut terms: BTreeMap<_, _> = self.terms.iter().map(|(&nu, &c)| (nu, c * f(nu))).collect();
        prune(&mut terms);
        Self { terms, gamma: self.gamma }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(&PolynomialRecord::from(self))?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let rec: PolynomialRecord = serde_json::from_str(s)?;
        Ok(rec.into())
    }
}

/// One `{nu, re, im}` entry of the JSON form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TermRecord {
    pub nu: [i64; 2],
    pub re: f64,
    pub im: f64,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct PolynomialRecord {
    pub gamma: f64,
    pub terms: Vec<TermRecord>,
}

pub(crate) fn to_records(map: &BTreeMap<WeylIndex, Complex64>) -> Vec<TermRecord> {
    map.iter()
        .map(|(nu, c)| TermRecord { nu: nu.to_array(), re: c.re, im: c.im })
        .collect()
}

impl From<&WeylPolynomial> for PolynomialRecord {
    fn from(p: &WeylPolynomial) -> Self {
        Self { gamma: p.gamma, terms: to_records(&p.terms) }
    }
}

impl From<PolynomialRecord> for WeylPolynomial {
    // no pruning here: the stored coefficients are taken verbatim
    fn from(rec: PolynomialRecord) -> Self {
        let mut terms = BTreeMap::new();
        for t in rec.terms {
            *terms.entry(WeylIndex::from(t.nu)).or_insert(Complex64::new(0.0, 0.0)) += Complex64::new(t.re, t.im);
        }
        Self { terms, gamma: rec.gamma }
    }
}

pub fn weyl_mul(a: &WeylPolynomial, b: &WeylPolynomial) -> Result<WeylPolynomial> {
    a.product(b)
}

pub fn adjoint(a: &WeylPolynomial) -> WeylPolynomial {
    a.adjoint()
}

pub fn trace_state(a: &WeylPolynomial) -> Complex64 {
    a.trace_state()
}

pub fn gns_norm(a: &WeylPolynomial) -> f64 {
    a.gns_norm()
}
