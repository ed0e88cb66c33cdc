//! Geodesic and horocycle flows on the Poincaré half-plane.
//!
//! Phase-space points are elements `m` of `SL(2,R)`; the geodesic flow acts
//! on the right, `phi_t m = m xi(t)` with `xi(t) = diag(e^{-t/2}, e^{t/2})`,
//! and the horocycles are the right actions of the two unipotent subgroups.
//! Under this convention `xi(-t) xi_j(s) xi(t) = xi_j(s e^{lambda_j t})` with
//! `lambda_1 = +1` (upper unipotent) and `lambda_2 = -1` (lower unipotent).

use std::ops::Mul;

use num_complex::Complex64;

use crate::direction::Direction;
use crate::error::{Error, Result};

/// Determinant tolerance accepted by [`MoebiusMatrix::new`].
pub const DET_TOLERANCE: f64 = 1e-12;

/// Real 2x2 matrix with unit determinant, `(a,b;c,d)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MoebiusMatrix {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl MoebiusMatrix {
    pub const IDENTITY: MoebiusMatrix = MoebiusMatrix { a: 1.0, b: 0.0, c: 0.0, d: 1.0 };

    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let det = a * d - b * c;
        if !det.is_finite() || (det - 1.0).abs() > DET_TOLERANCE {
            return Err(Error::NotUnimodular(det));
        }
        Ok(Self { a, b, c, d })
    }

    /// Scales a matrix with positive determinant onto `SL(2,R)`.
    pub fn normalized(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let det = a * d - b * c;
        if !(det > 0.0) || !det.is_finite() {
            return Err(Error::NotUnimodular(det));
        }
        Ok(Self { a, b, c, d }.renormalize())
    }

    fn renormalize(self) -> Self {
        let det = self.determinant();
        // already unimodular to rounding; rescaling would only add noise
        if (det - 1.0).abs() <= 4.0 * f64::EPSILON {
            return self;
        }
        let k = det.sqrt().recip();
        Self { a: self.a * k, b: self.b * k, c: self.c * k, d: self.d * k }
    }

    pub fn entries(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn determinant(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn inverse(&self) -> Self {
        Self { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    /// Frobenius norm of `self - other`.
    pub fn frobenius_distance(&self, other: &Self) -> f64 {
        let [a, b, c, d] = self.entries();
        let [p, q, r, s] = other.entries();
        ((a - p).powi(2) + (b - q).powi(2) + (c - r).powi(2) + (d - s).powi(2)).sqrt()
    }

    /// Entrywise product without renormalisation.
    fn raw_mul(&self, rhs: &Self) -> [f64; 4] {
        [
            self.a * rhs.a + self.b * rhs.c,
            self.a * rhs.b + self.b * rhs.d,
            self.c * rhs.a + self.d * rhs.c,
            self.c * rhs.b + self.d * rhs.d,
        ]
    }

    /// Geodesic flow `m -> m xi(t)`.
    pub fn geodesic_flow(&self, t: f64) -> Self {
        *self * geodesic_matrix(t)
    }

    /// Horocycle flow `m -> m xi_j(s)`.
    pub fn horocycle_flow(&self, j: Direction, s: f64) -> Self {
        *self * horocycle_matrix(j, s)
    }
}

impl Mul for MoebiusMatrix {
    type Output = MoebiusMatrix;

    /// Matrix product, renormalised back onto unit determinant.
    fn mul(self, rhs: Self) -> Self {
        let [a, b, c, d] = self.raw_mul(&rhs);
        Self { a, b, c, d }.renormalize()
    }
}

/// `xi(t) = diag(e^{-t/2}, e^{t/2})`.
pub fn geodesic_matrix(t: f64) -> MoebiusMatrix {
    let h = (t / 2.0).exp();
    MoebiusMatrix { a: h.recip(), b: 0.0, c: 0.0, d: h }
}

/// `m xi(t)`.
pub fn geodesic_flow(m: &MoebiusMatrix, t: f64) -> MoebiusMatrix {
    m.geodesic_flow(t)
}

/// `xi_1(s) = (1,s;0,1)` and `xi_2(s) = (1,0;s,1)`.
pub fn horocycle_matrix(j: Direction, s: f64) -> MoebiusMatrix {
    match j {
        Direction::Expanding => MoebiusMatrix { a: 1.0, b: s, c: 0.0, d: 1.0 },
        Direction::Contracting => MoebiusMatrix { a: 1.0, b: 0.0, c: s, d: 1.0 },
    }
}

/// Lyapunov exponent of horocycle `j` under the right-action convention.
pub fn horocycle_exponent(j: Direction) -> f64 {
    match j {
        Direction::Expanding => 1.0,
        Direction::Contracting => -1.0,
    }
}

/// `phi_t theta_j(s) phi_{-t}` as a right multiplier: `xi(-t) xi_j(s) xi(t)`.
pub fn conjugated_horocycle(j: Direction, t: f64, s: f64) -> MoebiusMatrix {
    geodesic_matrix(-t) * horocycle_matrix(j, s) * geodesic_matrix(t)
}

/// `|xi(-t) xi_j(s) xi(t) - xi_j(s e^{lambda_j t})|_F`.
pub fn conjugation_defect_geodesic(j: Direction, t: f64, s: f64) -> f64 {
    let lhs = conjugated_horocycle(j, t, s);
    let rhs = horocycle_matrix(j, s * (horocycle_exponent(j) * t).exp());
    lhs.frobenius_distance(&rhs)
}

fn central_difference(h: f64, f: impl Fn(f64) -> MoebiusMatrix) -> [f64; 4] {
    let plus = f(h).entries();
    let minus = f(-h).entries();
    std::array::from_fn(|i| (plus[i] - minus[i]) / (2.0 * h))
}

/// Max-entry gap between `d/ds [m xi(-t) xi_j(s) xi(t)]` and
/// `e^{lambda t} d/ds [m xi_j(s)]` at `s = 0`, by central differences with
/// step `h`. `lambda` defaults to the convention's exponent.
pub fn horocycle_differential_check(
    j: Direction,
    t: f64,
    m: &MoebiusMatrix,
    h: f64,
    lambda: Option<f64>,
) -> f64 {
    let lambda = lambda.unwrap_or_else(|| horocycle_exponent(j));
    let lhs = central_difference(h, |s| *m * conjugated_horocycle(j, t, s));
    let rhs = central_difference(h, |s| m.horocycle_flow(j, s));
    let scale = (lambda * t).exp();
    lhs.iter()
        .zip(rhs)
        .map(|(l, r)| (l - scale * r).abs())
        .fold(0.0, f64::max)
}

/// A point `x + iy` of the upper half-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPlanePoint {
    x: f64,
    y: f64,
}

impl HalfPlanePoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !(y > 0.0) || !x.is_finite() || !y.is_finite() {
            return Err(Error::NotInHalfPlane(y));
        }
        Ok(Self { x, y })
    }

    /// The base point `i`.
    pub const I: HalfPlanePoint = HalfPlanePoint { x: 0.0, y: 1.0 };

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn as_complex(&self) -> Complex64 {
        Complex64::new(self.x, self.y)
    }
}

/// `gz = (az+b)/(cz+d)`.
///
/// The imaginary part is formed as `y/|cz+d|^2` so that it stays positive.
pub fn moebius_apply(g: &MoebiusMatrix, z: HalfPlanePoint) -> Result<HalfPlanePoint> {
    let [a, b, c, d] = g.entries();
    let den_re = c * z.x + d;
    let den_im = c * z.y;
    let den_abs = den_re.hypot(den_im);
    if den_abs < 1e-300 {
        return Err(Error::DegenerateDenominator(den_abs));
    }
    let den2 = den_abs * den_abs;
    let num_re = a * z.x + b;
    let num_im = a * z.y;
    let x = (num_re * den_re + num_im * den_im) / den2;
    let y = z.y / den2;
    HalfPlanePoint::new(x, y)
}

/// Hyperbolic distance for the metric `y^{-2}(dx^2 + dy^2)`, in the
/// well-conditioned form `2 asinh(|z1 - z2| / (2 sqrt(y1 y2)))`.
pub fn hyperbolic_distance(z1: HalfPlanePoint, z2: HalfPlanePoint) -> f64 {
    let chord = (z1.x - z2.x).hypot(z1.y - z2.y);
    2.0 * (chord / (2.0 * (z1.y * z2.y).sqrt())).asinh()
}

/// Relative failure of `Jac(g, z) y(gz)^{-2} = y(z)^{-2}`, with the area
/// Jacobian of `z -> gz` taken by central differences of step `h`.
pub fn measure_invariance_check(g: &MoebiusMatrix, z: HalfPlanePoint, h: f64) -> Result<f64> {
    let at = |x: f64, y: f64| -> Result<[f64; 2]> {
        let w = moebius_apply(g, HalfPlanePoint::new(x, y)?)?;
        Ok([w.x, w.y])
    };
    let xp = at(z.x + h, z.y)?;
    let xm = at(z.x - h, z.y)?;
    let yp = at(z.x, z.y + h)?;
    let ym = at(z.x, z.y - h)?;
    let dx = [(xp[0] - xm[0]) / (2.0 * h), (xp[1] - xm[1]) / (2.0 * h)];
    let dy = [(yp[0] - ym[0]) / (2.0 * h), (yp[1] - ym[1]) / (2.0 * h)];
    let jac = dx[0] * dy[1] - dx[1] * dy[0];
    let image = moebius_apply(g, z)?;
    let density = z.y.powi(-2);
    Ok((jac * image.y.powi(-2) - density).abs() / density)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn assert_matrix_eq(m: &MoebiusMatrix, expected: [f64; 4], tol: f64) {
        for (got, want) in m.entries().iter().zip(expected) {
            assert_abs_diff_eq!(*got, want, epsilon = tol);
        }
    }

    #[test]
    fn rejects_bad_determinant() {
        assert!(MoebiusMatrix::new(1.0, 0.5, 0.0, 0.5).is_err());
        assert!(MoebiusMatrix::normalized(1.0, 2.0, 2.0, 1.0).is_err());
        let g = MoebiusMatrix::normalized(2.0, 1.0, 1.0, 3.0).unwrap();
        assert_abs_diff_eq!(g.determinant(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn moebius_apply_examples() {
        let z = HalfPlanePoint::new(0.3, 1.7).unwrap();
        assert_eq!(moebius_apply(&MoebiusMatrix::IDENTITY, z).unwrap(), z);
        let squeeze = MoebiusMatrix::new(0.5, 0.0, 0.0, 2.0).unwrap();
        let w = moebius_apply(&squeeze, HalfPlanePoint::I).unwrap();
        assert_abs_diff_eq!(w.x(), 0.0);
        assert_abs_diff_eq!(w.y(), 0.25, epsilon = 1e-16);
        let translate = MoebiusMatrix::new(1.0, 2.5, 0.0, 1.0).unwrap();
        let w = moebius_apply(&translate, z).unwrap();
        assert_abs_diff_eq!(w.x(), 2.8, epsilon = 1e-15);
        assert_abs_diff_eq!(w.y(), 1.7, epsilon = 1e-15);
    }

    #[test]
    fn half_plane_rejects_lower_points() {
        assert!(HalfPlanePoint::new(0.0, 0.0).is_err());
        assert!(HalfPlanePoint::new(0.0, -1.0).is_err());
        assert!(HalfPlanePoint::new(0.0, f64::NAN).is_err());
    }

    #[test]
    fn geodesic_flow_examples() {
        let m = MoebiusMatrix::normalized(1.2, 0.3, -0.4, 0.9).unwrap();
        assert_eq!(geodesic_flow(&m, 0.0), m);
        let e = std::f64::consts::E;
        assert_matrix_eq(&geodesic_flow(&MoebiusMatrix::IDENTITY, 2.0), [e.recip(), 0.0, 0.0, e], 1e-15);
        let composed = geodesic_flow(&geodesic_flow(&m, 0.7), -1.9);
        assert_matrix_eq(&composed, geodesic_flow(&m, -1.2).entries(), 1e-12);
    }

    #[test]
    fn horocycle_matrices() {
        assert_eq!(horocycle_matrix(Direction::Expanding, 0.0), MoebiusMatrix::IDENTITY);
        assert_eq!(horocycle_matrix(Direction::Contracting, 0.5).entries(), [1.0, 0.0, 0.5, 1.0]);
        for j in Direction::BOTH {
            let prod = horocycle_matrix(j, 0.375) * horocycle_matrix(j, -1.25);
            assert_eq!(prod, horocycle_matrix(j, 0.375 - 1.25));
            assert_eq!(horocycle_matrix(j, 3.0).determinant(), 1.0);
        }
    }

    #[test]
    fn conjugation_examples() {
        let ln2 = std::f64::consts::LN_2;
        assert_eq!(conjugation_defect_geodesic(Direction::Expanding, 0.0, 0.9), 0.0);
        let up = conjugated_horocycle(Direction::Expanding, ln2, 0.3);
        assert_matrix_eq(&up, [1.0, 0.6, 0.0, 1.0], 1e-12);
        assert!(conjugation_defect_geodesic(Direction::Expanding, ln2, 0.3) <= 1e-12);
        let down = conjugated_horocycle(Direction::Contracting, ln2, 0.3);
        assert_matrix_eq(&down, [1.0, 0.0, 0.15, 1.0], 1e-12);
        assert!(conjugation_defect_geodesic(Direction::Contracting, ln2, 0.3) <= 1e-12);
    }

    #[test]
    fn differential_check_examples() {
        let m = MoebiusMatrix::normalized(1.1, 0.2, 0.3, 0.95).unwrap();
        for j in Direction::BOTH {
            assert!(horocycle_differential_check(j, 0.0, &m, 1e-5, None) <= 1e-10);
        }
        let gap = horocycle_differential_check(Direction::Expanding, 1.0, &MoebiusMatrix::IDENTITY, 1e-5, None);
        assert!(gap <= 1e-8, "{gap}");
        let wrong = horocycle_differential_check(Direction::Expanding, 1.0, &MoebiusMatrix::IDENTITY, 1e-5, Some(0.0));
        assert!(wrong >= 1.0);
        assert_abs_diff_eq!(wrong, std::f64::consts::E - 1.0, epsilon = 1e-8);
    }

    #[test]
    fn distance_examples() {
        let i = HalfPlanePoint::I;
        assert_eq!(hyperbolic_distance(i, i), 0.0);
        let four_i = HalfPlanePoint::new(0.0, 4.0).unwrap();
        assert_abs_diff_eq!(hyperbolic_distance(i, four_i), 4f64.ln(), epsilon = 1e-14);
    }

    #[test]
    fn distance_is_moebius_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..200 {
            let a: f64 = rng.random_range(0.5..2.0);
            let b: f64 = rng.random_range(-2.0..2.0);
            let c: f64 = rng.random_range(-2.0..2.0);
            let g = MoebiusMatrix::normalized(a, b, c, (1.0 + b * c) / a).unwrap();
            let z1 = HalfPlanePoint::new(rng.random_range(-3.0..3.0), rng.random_range(0.1..3.0)).unwrap();
            let z2 = HalfPlanePoint::new(rng.random_range(-3.0..3.0), rng.random_range(0.1..3.0)).unwrap();
            let before = hyperbolic_distance(z1, z2);
            let after = hyperbolic_distance(moebius_apply(&g, z1).unwrap(), moebius_apply(&g, z2).unwrap());
            assert_abs_diff_eq!(before, after, epsilon = 1e-10);
            assert_abs_diff_eq!(hyperbolic_distance(z2, z1), before, epsilon = 1e-15);
        }
    }

    #[test]
    fn measure_invariance_examples() {
        let z = HalfPlanePoint::new(0.4, 1.3).unwrap();
        assert!(measure_invariance_check(&MoebiusMatrix::IDENTITY, z, 1e-5).unwrap() < 1e-9);
        let shift = MoebiusMatrix::new(1.0, 1.0, 0.0, 1.0).unwrap();
        assert!(measure_invariance_check(&shift, z, 1e-5).unwrap() <= 1e-8);
        let flow = geodesic_matrix(1.0);
        assert!(measure_invariance_check(&flow, HalfPlanePoint::I, 1e-5).unwrap() <= 1e-6);
        let rot = MoebiusMatrix::normalized(0.6, -0.8, 0.8, 0.6).unwrap();
        assert!(measure_invariance_check(&rot, z, 1e-5).unwrap() <= 1e-6);
    }
}
