//! Linear automorphisms of the 2-torus and their horocycle shifts.
//!
//! The canonical instance is the Arnold cat map `(1,1;1,2)`. Matrix powers
//! are exact integer products, and points are moved in 64-bit fixed point,
//! so `phi^t m` carries a single rounding error instead of one amplified by
//! `e^{lambda_1 |t|}`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::direction::Direction;
use crate::error::{Error, Result};

/// Symplectic pairing `kappa(nu, nu') = nu1 nu2' - nu2 nu1'`.
pub fn kappa(nu: [i64; 2], mu: [i64; 2]) -> i64 {
    nu[0] * mu[1] - nu[1] * mu[0]
}

/// A 2x2 integer matrix `(a,b;c,d)` with `ad - bc = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntegerSymplecticMap {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl IntegerSymplecticMap {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let det = a * d - b * c;
        if det != 1 {
            return Err(Error::NotSymplectic(det));
        }
        Ok(Self { a, b, c, d })
    }

    /// The Arnold cat map `(1,1;1,2)`.
    pub const fn arnold() -> Self {
        Self { a: 1, b: 1, c: 1, d: 2 }
    }

    pub const fn identity() -> Self {
        Self { a: 1, b: 0, c: 0, d: 1 }
    }

    /// Entries in row-major order `[a, b, c, d]`.
    pub fn entries(&self) -> [i64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn trace(&self) -> i64 {
        self.a + self.d
    }

    pub fn determinant(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    pub fn is_symmetric(&self) -> bool {
        self.b == self.c
    }

    /// Integer inverse `(d,-b;-c,a)`.
    pub fn inverse(&self) -> Self {
        Self { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    /// Matrix product `self * rhs`, or `None` on `i64` overflow.
    pub fn checked_mul(&self, rhs: &Self) -> Option<Self> {
        let dot = |x: i64, y: i64, z: i64, w: i64| x.checked_mul(y)?.checked_add(z.checked_mul(w)?);
        Some(Self {
            a: dot(self.a, rhs.a, self.b, rhs.c)?,
            b: dot(self.a, rhs.b, self.b, rhs.d)?,
            c: dot(self.c, rhs.a, self.d, rhs.c)?,
            d: dot(self.c, rhs.b, self.d, rhs.d)?,
        })
    }

    /// `self^t` by exponentiation by squaring; negative `t` uses the integer
    /// inverse. `None` if an entry leaves the `i64` range.
    pub fn checked_pow(&self, t: i64) -> Option<Self> {
        let mut base = if t < 0 { self.inverse() } else { *self };
        let mut exp = t.unsigned_abs();
        let mut acc = Self::identity();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Some(acc)
    }

    /// `self^t` on a lattice vector.
    pub fn checked_apply_lattice(&self, t: i64, nu: [i64; 2]) -> Option<[i64; 2]> {
        let p = self.checked_pow(t)?;
        Some([
            p.a.checked_mul(nu[0])?.checked_add(p.b.checked_mul(nu[1])?)?,
            p.c.checked_mul(nu[0])?.checked_add(p.d.checked_mul(nu[1])?)?,
        ])
    }

    /// `self^t` on a lattice vector.
    ///
    /// # Panics
    ///
    /// Panics if the image leaves the `i64` range.
    pub fn apply_lattice(&self, t: i64, nu: [i64; 2]) -> [i64; 2] {
        self.checked_apply_lattice(t, nu)
            .unwrap_or_else(|| panic!("lattice image of {nu:?} under power {t} overflows i64"))
    }

    /// Real matrix-vector product with `self^t`, no reduction.
    pub fn apply_vector(&self, t: i64, v: [f64; 2]) -> [f64; 2] {
        let p = self
            .checked_pow(t)
            .unwrap_or_else(|| panic!("matrix power {t} overflows i64"));
        [
            p.a as f64 * v[0] + p.b as f64 * v[1],
            p.c as f64 * v[0] + p.d as f64 * v[1],
        ]
    }

    /// `self^t` with entries reduced mod `2^64`; exact for every `t`.
    fn wrapping_pow(&self, t: i64) -> [u64; 4] {
        let base = if t < 0 { self.inverse() } else { *self };
        let mut b = [base.a as u64, base.b as u64, base.c as u64, base.d as u64];
        let mut acc = [1, 0, 0, 1];
        let mut e = t.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = wrapping_mul(acc, b);
            }
            b = wrapping_mul(b, b);
            e >>= 1;
        }
        acc
    }

    /// `phi^t m mod (1,1)`.
    ///
    /// Coordinates are treated as 64-bit binary fractions and the integer
    /// power is applied mod `2^64`, so the image is exact up to one rounding
    /// back to `f64`, whatever the horizon.
    pub fn apply(&self, m: TorusPoint, t: i64) -> TorusPoint {
        if t == 0 {
            return m;
        }
        let [x, y] = apply_fixed(self.wrapping_pow(t), [to_fixed(m.x), to_fixed(m.y)]);
        TorusPoint { x: from_fixed(x), y: from_fixed(y) }
    }
}

/// `2^64`.
const FIXED_SCALE: f64 = 18_446_744_073_709_551_616.0;

fn to_fixed(x: f64) -> u64 {
    (x * FIXED_SCALE) as u64
}

fn from_fixed(v: u64) -> f64 {
    reduce_unit(v as f64 / FIXED_SCALE)
}

fn wrapping_mul(p: [u64; 4], q: [u64; 4]) -> [u64; 4] {
    let dot = |a: u64, b: u64, c: u64, d: u64| a.wrapping_mul(b).wrapping_add(c.wrapping_mul(d));
    [
        dot(p[0], q[0], p[1], q[2]),
        dot(p[0], q[1], p[1], q[3]),
        dot(p[2], q[0], p[3], q[2]),
        dot(p[2], q[1], p[3], q[3]),
    ]
}

fn apply_fixed(p: [u64; 4], v: [u64; 2]) -> [u64; 2] {
    [
        p[0].wrapping_mul(v[0]).wrapping_add(p[1].wrapping_mul(v[1])),
        p[2].wrapping_mul(v[0]).wrapping_add(p[3].wrapping_mul(v[1])),
    ]
}

fn reduce_unit(v: f64) -> f64 {
    let r = v.rem_euclid(1.0);
    // rem_euclid rounds tiny negatives up to exactly 1.0
    if r >= 1.0 {
        0.0
    } else {
        r
    }
}

/// A point of the torus `[0,1)^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorusPoint {
    x: f64,
    y: f64,
}

impl TorusPoint {
    /// Builds a point, reducing both coordinates mod 1.
    pub fn new(x: f64, y: f64) -> Self {
        Self { x: reduce_unit(x), y: reduce_unit(y) }
    }

    pub const ORIGIN: TorusPoint = TorusPoint { x: 0.0, y: 0.0 };

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn coords(&self) -> [f64; 2] {
        [self.x, self.y]
    }

    /// `self + v s mod (1,1)`.
    pub fn shifted(&self, v: [f64; 2], s: f64) -> Self {
        Self::new(self.x + v[0] * s, self.y + v[1] * s)
    }

    /// Minimum Euclidean distance over the nine mod-1 translates of `other`.
    pub fn distance(&self, other: &TorusPoint) -> f64 {
        let mut best = f64::INFINITY;
        for i in -1..=1 {
            for j in -1..=1 {
                let dx = self.x - (other.x + i as f64);
                let dy = self.y - (other.y + j as f64);
                best = best.min(dx.hypot(dy));
            }
        }
        best
    }
}

/// `theta_j(s) m = m + V s mod (1,1)`.
pub fn horocycle_shift(m: TorusPoint, v: [f64; 2], s: f64) -> TorusPoint {
    m.shifted(v, s)
}

/// Eigendata of a hyperbolic integer matrix with positive eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenSystem {
    pub v1: [f64; 2],
    pub v2: [f64; 2],
    pub k1: f64,
    pub k2: f64,
    pub lambda1: f64,
    pub lambda2: f64,
}

impl EigenSystem {
    pub fn vector(&self, j: Direction) -> [f64; 2] {
        match j {
            Direction::Expanding => self.v1,
            Direction::Contracting => self.v2,
        }
    }

    pub fn eigenvalue(&self, j: Direction) -> f64 {
        match j {
            Direction::Expanding => self.k1,
            Direction::Contracting => self.k2,
        }
    }

    pub fn exponent(&self, j: Direction) -> f64 {
        match j {
            Direction::Expanding => self.lambda1,
            Direction::Contracting => self.lambda2,
        }
    }

    /// `e^{lambda_j t}`, evaluated as the integer power `k_j^t`.
    pub fn growth(&self, j: Direction, t: i64) -> f64 {
        let t = i32::try_from(t).expect("time exponent out of i32 range");
        self.eigenvalue(j).powi(t)
    }
}

fn unit_eigenvector(phi: &IntegerSymplecticMap, k: f64) -> [f64; 2] {
    let [a, b, c, d] = phi.entries().map(|e| e as f64);
    // pick the better-conditioned row of (phi - k I) v = 0
    let from_row1 = [b, k - a];
    let from_row2 = [k - d, c];
    let n1 = from_row1[0].hypot(from_row1[1]);
    let n2 = from_row2[0].hypot(from_row2[1]);
    let (v, n) = if n1 >= n2 { (from_row1, n1) } else { (from_row2, n2) };
    let mut u = [v[0] / n, v[1] / n];
    if u[0] < 0.0 || (u[0] == 0.0 && u[1] < 0.0) {
        u = [-u[0], -u[1]];
    }
    u
}

/// Eigenvalues `k1 > 1 > k2 > 0`, unit eigenvectors with positive first
/// component, and Lyapunov exponents `ln k_j`.
///
/// Only matrices with trace greater than 2 are accepted: a trace below -2
/// gives negative eigenvalues, for which `phi^t V = e^{lambda t} V` fails.
pub fn eigen_system(phi: &IntegerSymplecticMap) -> Result<EigenSystem> {
    let tr = phi.trace();
    if tr <= 2 {
        return Err(Error::NotHyperbolic(tr));
    }
    let trf = tr as f64;
    let k1 = (trf + (trf * trf - 4.0).sqrt()) / 2.0;
    let k2 = 1.0 / k1;
    Ok(EigenSystem {
        v1: unit_eigenvector(phi, k1),
        v2: unit_eigenvector(phi, k2),
        k1,
        k2,
        lambda1: k1.ln(),
        lambda2: k2.ln(),
    })
}

/// `|phi^t v - growth * v|`: the differential form of the hyperbolicity
/// condition for an arbitrary direction and rate.
pub fn differential_defect_along(phi: &IntegerSymplecticMap, v: [f64; 2], growth: f64, t: i64) -> f64 {
    let image = phi.apply_vector(t, v);
    (image[0] - growth * v[0]).hypot(image[1] - growth * v[1])
}

/// Torus distance between `phi_t theta(s) phi_{-t} m` and `theta(s growth) m`,
/// where `theta` shifts along `v`.
pub fn conjugation_defect_along(
    phi: &IntegerSymplecticMap,
    v: [f64; 2],
    growth: f64,
    t: i64,
    s: f64,
    m: TorusPoint,
) -> f64 {
    let back = phi.apply(m, -t);
    let lhs = phi.apply(horocycle_shift(back, v, s), t);
    let rhs = horocycle_shift(m, v, s * growth);
    lhs.distance(&rhs)
}

/// Distances `|phi_t m - phi_t m'|` for a perturbation `m' = m + eps (a1 V1 + a2 V2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeparationCurve {
    pub samples: Vec<(i64, f64)>,
}

impl SeparationCurve {
    /// Least-squares slope of `ln d` against `t` over the positive samples.
    pub fn fitted_slope(&self) -> Option<f64> {
        let pts: Vec<(f64, f64)> = self
            .samples
            .iter()
            .filter(|(_, d)| *d > 0.0)
            .map(|&(t, d)| (t as f64, d.ln()))
            .collect();
        if pts.len() < 2 {
            return None;
        }
        let n = pts.len() as f64;
        let mt = pts.iter().map(|p| p.0).sum::<f64>() / n;
        let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
        let sxy: f64 = pts.iter().map(|p| (p.0 - mt) * (p.1 - my)).sum();
        let sxx: f64 = pts.iter().map(|p| (p.0 - mt).powi(2)).sum();
        Some(sxy / sxx)
    }
}

/// A hyperbolic torus automorphism together with its eigendata.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CatSystem {
    map: IntegerSymplecticMap,
    eigen: EigenSystem,
}

impl CatSystem {
    pub fn new(map: IntegerSymplecticMap) -> Result<Self> {
        Ok(Self { map, eigen: eigen_system(&map)? })
    }

    pub fn arnold() -> Self {
        Self::new(IntegerSymplecticMap::arnold()).expect("cat map is hyperbolic")
    }

    pub fn map(&self) -> &IntegerSymplecticMap {
        &self.map
    }

    pub fn eigen(&self) -> &EigenSystem {
        &self.eigen
    }

    pub fn apply(&self, m: TorusPoint, t: i64) -> TorusPoint {
        self.map.apply(m, t)
    }

    /// `theta_j(s) m`.
    pub fn horocycle(&self, j: Direction, s: f64, m: TorusPoint) -> TorusPoint {
        horocycle_shift(m, self.eigen.vector(j), s)
    }

    /// Defect in `phi_t theta_j(s) phi_{-t} = theta_j(s e^{lambda_j t})`,
    /// measured at `m` in torus distance.
    pub fn conjugation_defect(&self, j: Direction, t: i64, s: f64, m: TorusPoint) -> f64 {
        conjugation_defect_along(&self.map, self.eigen.vector(j), self.eigen.growth(j, t), t, s, m)
    }

    /// `|phi^t V_j - e^{lambda_j t} V_j|`. The differential of a linear torus
    /// map is the matrix itself, so this is the eigenrelation.
    pub fn differential_defect(&self, j: Direction, t: i64) -> f64 {
        differential_defect_along(&self.map, self.eigen.vector(j), self.eigen.growth(j, t), t)
    }

    /// Largest horizon `T` with `|eps| e^{lambda_1 T} < 1/2`, or `None` if
    /// every horizon is valid (`eps = 0`).
    pub fn max_horizon(&self, eps: f64) -> Option<i64> {
        self.horizon_limit(eps.abs(), 0.0)
    }

    /// Largest `T` with `expanding e^{lambda_1 T} + contracting < 1/2`.
    fn horizon_limit(&self, expanding: f64, contracting: f64) -> Option<i64> {
        let room = 0.5 - contracting;
        if room <= 0.0 {
            return Some(-1);
        }
        if expanding == 0.0 {
            return None;
        }
        if expanding >= room {
            return Some(-1);
        }
        let mut t = ((room / expanding).ln() / self.eigen.lambda1).floor() as i64;
        while expanding * self.eigen.growth(Direction::Expanding, t) >= room {
            t -= 1;
        }
        while expanding * self.eigen.growth(Direction::Expanding, t + 1) < room {
            t += 1;
        }
        Some(t)
    }

    /// Separation of the orbits of `m` and `m + eps (a1 V1 + a2 V2)` for
    /// `t = 0..=horizon`.
    pub fn separation_growth(&self, m: TorusPoint, a: [f64; 2], eps: f64, horizon: u32) -> Result<SeparationCurve> {
        if let Some(max_valid) = self.horizon_limit((eps * a[0]).abs(), (eps * a[1]).abs()) {
            if i64::from(horizon) > max_valid {
                return Err(Error::HorizonTooLong { requested: horizon, eps, max_valid });
            }
        }
        let e = &self.eigen;
        let offset = [
            eps * (a[0] * e.v1[0] + a[1] * e.v2[0]),
            eps * (a[0] * e.v1[1] + a[1] * e.v2[1]),
        ];
        let perturbed = m.shifted(offset, 1.0);
        let samples = (0..=i64::from(horizon))
            .map(|t| (t, self.apply(m, t).distance(&self.apply(perturbed, t))))
            .collect();
        Ok(SeparationCurve { samples })
    }

    /// `(1/N) sum_{t<N} exp(2 pi i nu . phi_t m)`, iterating the map one step
    /// at a time.
    pub fn birkhoff_average(&self, nu: [i64; 2], m: TorusPoint, n: usize) -> Result<Complex64> {
        if n == 0 {
            return Err(Error::Dimension { min: 1, got: 0 });
        }
        let (f1, f2) = (nu[0] as f64, nu[1] as f64);
        let step = self.map.wrapping_pow(1);
        let mut point = [to_fixed(m.x), to_fixed(m.y)];
        let mut sum = Complex64::new(0.0, 0.0);
        for i in 0..n {
            let (x, y) = if i == 0 { (m.x, m.y) } else { (from_fixed(point[0]), from_fixed(point[1])) };
            sum += Complex64::from_polar(1.0, 2.0 * PI * (f1 * x + f2 * y));
            point = apply_fixed(step, point);
        }
        Ok(sum / n as f64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const LAMBDA1: f64 = 0.962_423_650_119_206_9;

    fn random_point(rng: &mut ChaCha8Rng) -> TorusPoint {
        TorusPoint::new(rng.random(), rng.random())
    }

    #[test]
    fn rejects_non_unimodular() {
        assert!(matches!(IntegerSymplecticMap::new(2, 1, 1, 2), Err(Error::NotSymplectic(3))));
    }

    #[test]
    fn origin_is_fixed() {
        let cat = IntegerSymplecticMap::arnold();
        assert_eq!(cat.apply(TorusPoint::ORIGIN, 7), TorusPoint::ORIGIN);
    }

    #[test]
    fn half_point_one_step() {
        let cat = IntegerSymplecticMap::arnold();
        let p = cat.apply(TorusPoint::new(0.5, 0.5), 1);
        assert_eq!(p.coords(), [0.0, 0.5]);
    }

    #[test]
    fn inverse_matrix_of_cat() {
        assert_eq!(IntegerSymplecticMap::arnold().inverse().entries(), [2, -1, -1, 1]);
    }

    #[test]
    fn forward_then_back() {
        let cat = IntegerSymplecticMap::arnold();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let m = random_point(&mut rng);
            let back = cat.apply(cat.apply(m, 3), -3);
            assert!(back.distance(&m) < 1e-12);
            // one rounding, amplified once by k1^10 ~ 1.5e4
            assert!(cat.apply(cat.apply(m, 10), -10).distance(&m) < 1e-11);
        }
    }

    #[test]
    fn long_horizon_is_exact() {
        let cat = IntegerSymplecticMap::arnold();
        assert!(cat.checked_pow(200).is_none());
        let p = cat.apply(TorusPoint::new(0.25, 0.75), 200);
        assert!((0.0..1.0).contains(&p.x()) && (0.0..1.0).contains(&p.y()));
        // rational points stay on periodic orbits
        assert_eq!(cat.apply(TorusPoint::new(0.5, 0.0), 300), cat.apply(TorusPoint::new(0.5, 0.0), 0));
    }

    #[test]
    fn tiny_negative_reduces_to_zero() {
        let p = TorusPoint::new(-1e-18, -0.0);
        assert_eq!(p.coords(), [0.0, 0.0]);
    }

    #[test]
    fn cat_eigensystem() {
        let e = eigen_system(&IntegerSymplecticMap::arnold()).unwrap();
        let sqrt5 = 5f64.sqrt();
        assert_abs_diff_eq!(e.k1, (3.0 + sqrt5) / 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(e.lambda1, LAMBDA1, epsilon = 1e-15);
        assert_abs_diff_eq!(e.k1 * e.k2, 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(e.lambda1, -e.lambda2, epsilon = 1e-15);
        let golden = (1.0 + sqrt5) / 2.0;
        assert_abs_diff_eq!(e.v1[1] / e.v1[0], golden, epsilon = 1e-14);
        assert!(e.v1[0] > 0.0 && e.v2[0] > 0.0);
        for (v, k) in [(e.v1, e.k1), (e.v2, e.k2)] {
            assert_abs_diff_eq!(v[0].hypot(v[1]), 1.0, epsilon = 1e-15);
            let img = IntegerSymplecticMap::arnold().apply_vector(1, v);
            assert_abs_diff_eq!(img[0], k * v[0], epsilon = 1e-12);
            assert_abs_diff_eq!(img[1], k * v[1], epsilon = 1e-12);
        }
    }

    #[test]
    fn non_hyperbolic_rejected() {
        let rot = IntegerSymplecticMap::new(0, -1, 1, 0).unwrap();
        assert!(matches!(eigen_system(&rot), Err(Error::NotHyperbolic(0))));
        let shear = IntegerSymplecticMap::new(1, 1, 0, 1).unwrap();
        assert!(matches!(eigen_system(&shear), Err(Error::NotHyperbolic(2))));
        let neg = IntegerSymplecticMap::new(-1, -1, -1, -2).unwrap();
        assert!(eigen_system(&neg).is_err());
    }

    #[test]
    fn horocycle_shift_basics() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let m = random_point(&mut rng);
        let v = [0.6, 0.8];
        assert_eq!(horocycle_shift(m, v, 0.0), m);
        assert_eq!(horocycle_shift(TorusPoint::ORIGIN, [1.0, 0.0], 0.25).coords(), [0.25, 0.0]);
        let there_and_back = horocycle_shift(horocycle_shift(m, v, 0.37), v, -0.37);
        assert!(there_and_back.distance(&m) < 1e-12);
    }

    #[test]
    fn conjugation_defect_examples() {
        let cat = CatSystem::arnold();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let m = random_point(&mut rng);
        assert_eq!(cat.conjugation_defect(Direction::Expanding, 0, 0.7, m), 0.0);
        assert!(cat.conjugation_defect(Direction::Expanding, 3, 0.1, m) <= 1e-9);
        assert!(cat.conjugation_defect(Direction::Contracting, -4, 0.5, m) <= 1e-9);
    }

    #[test]
    fn differential_defect_examples() {
        let cat = CatSystem::arnold();
        assert_eq!(cat.differential_defect(Direction::Expanding, 0), 0.0);
        assert!(cat.differential_defect(Direction::Expanding, 5) <= 1e-7);
        let bad = differential_defect_along(cat.map(), [1.0, 0.0], cat.eigen().growth(Direction::Expanding, 1), 1);
        assert!(bad >= 0.1, "{bad}");
    }

    #[test]
    fn horizon_guard_names_max() {
        let cat = CatSystem::arnold();
        let max = cat.max_horizon(1e-8).unwrap();
        assert!(1e-8 * (LAMBDA1 * max as f64).exp() < 0.5);
        assert!(1e-8 * (LAMBDA1 * (max + 1) as f64).exp() >= 0.5);
        let err = cat
            .separation_growth(TorusPoint::ORIGIN, [1.0, 0.0], 1e-8, (max + 1) as u32)
            .unwrap_err();
        assert!(err.to_string().contains(&format!("largest valid horizon is {max}")), "{err}");
    }

    #[test]
    fn separation_slope_matches_lambda() {
        let cat = CatSystem::arnold();
        let m = TorusPoint::new(0.318_309_886, 0.577_215_664);
        let curve = cat.separation_growth(m, [1.0, 0.0], 1e-8, 15).unwrap();
        assert_eq!(curve.samples.len(), 16);
        assert!((curve.fitted_slope().unwrap() - LAMBDA1).abs() < 1e-3);
    }

    #[test]
    fn contracting_separation_decreases() {
        let cat = CatSystem::arnold();
        let m = TorusPoint::new(0.1234, 0.8765);
        let curve = cat.separation_growth(m, [0.0, 1.0], 1e-6, 10).unwrap();
        assert!(curve.samples.windows(2).all(|w| w[1].1 < w[0].1));
    }

    #[test]
    fn zero_eps_gives_zero_distances() {
        let cat = CatSystem::arnold();
        let curve = cat.separation_growth(TorusPoint::new(0.3, 0.4), [1.0, 1.0], 0.0, 40).unwrap();
        assert!(curve.samples.iter().all(|&(_, d)| d == 0.0));
        assert_eq!(curve.fitted_slope(), None);
    }

    #[test]
    fn birkhoff_trivial_cases() {
        let cat = CatSystem::arnold();
        let m = TorusPoint::new(0.2, 0.9);
        assert_eq!(cat.birkhoff_average([0, 0], m, 100).unwrap(), Complex64::new(1.0, 0.0));
        let fixed = cat.birkhoff_average([1, 0], TorusPoint::ORIGIN, 37).unwrap();
        assert_eq!(fixed, Complex64::new(1.0, 0.0));
        assert!(cat.birkhoff_average([1, 0], m, 0).is_err());
    }

    #[test]
    fn torus_distance_wraps() {
        let p = TorusPoint::new(0.05, 0.95);
        let q = TorusPoint::new(0.95, 0.05);
        assert_abs_diff_eq!(p.distance(&q), 0.1f64.hypot(0.1), epsilon = 1e-15);
    }
}
