//! Translations and dilations of the line, discretised on a periodic grid.
//!
//! `V(s) = exp(-isP)` shifts by `s`; `U(t) = exp(-itD)` with
//! `D = (XP + PX)/2` maps `f(x)` to `e^{-t/2} f(e^{-t} x)`. In the continuum
//! they satisfy `U(t) V(s) U(-t) = V(s e^t)`. On the grid both families are
//! exact unitary one-parameter groups (`P` is diagonal in Fourier space,
//! `exp(-itD)` is applied by a Chebyshev expansion), so the only error in the
//! relation is the discretisation of the commutator `[D, P]`, which shrinks as
//! the resolution grows.

use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::error::{Error, Result};

/// The grid covers `[-L, L)` with `L = 16`.
pub const AFFINE_HALF_WIDTH: f64 = 16.0;
/// Shift parameter of the reported defect.
pub const AFFINE_S: f64 = 0.3;
/// Dilation parameter of the reported defect.
pub const AFFINE_T: f64 = 0.5;
/// Standard deviation of the Gaussian test vector. Narrow enough that the
/// coarsest grids under-resolve it once it has been compressed by `U(-t)`.
pub const TEST_WIDTH: f64 = 0.05;

/// A uniform periodic grid with spectral translation and dilation.
pub struct AffineLine {
    x: Vec<f64>,
    k: Vec<f64>,
    fwd: Arc<dyn Fft<f64>>,
    inv: Arc<dyn Fft<f64>>,
    bound: f64,
}

impl std::fmt::Debug for AffineLine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AffineLine").field("n", &self.x.len()).finish()
    }
}

impl AffineLine {
    pub fn new(resolution: usize) -> Result<Self> {
        if resolution < 256 || !resolution.is_power_of_two() {
            return Err(Error::Resolution(resolution));
        }
        let n = resolution;
        let l = AFFINE_HALF_WIDTH;
        let dx = 2.0 * l / n as f64;
        let x: Vec<f64> = (0..n).map(|j| -l + j as f64 * dx).collect();
        let dk = std::f64::consts::PI / l;
        let k: Vec<f64> = (0..n)
            .map(|m| match m.cmp(&(n / 2)) {
                std::cmp::Ordering::Less => m as f64 * dk,
                // Nyquist mode dropped so that P stays hermitian
                std::cmp::Ordering::Equal => 0.0,
                std::cmp::Ordering::Greater => (m as f64 - n as f64) * dk,
            })
            .collect();
        let mut planner = FftPlanner::new();
        let k_max = k.iter().fold(0.0f64, |a, b| a.max(b.abs()));
        let x_max = x.iter().fold(0.0f64, |a, b| a.max(b.abs()));
        Ok(Self {
            fwd: planner.plan_fft_forward(n),
            inv: planner.plan_fft_inverse(n),
            x,
            k,
            // |D| <= |X| |P|
            bound: x_max * k_max,
        })
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn grid(&self) -> &[f64] {
        &self.x
    }

    /// Samples of `exp(-x^2 / (2 width^2))`.
    pub fn gaussian(&self, width: f64) -> Vec<Complex64> {
        self.x
            .iter()
            .map(|&x| Complex64::new((-0.5 * (x / width).powi(2)).exp(), 0.0))
            .collect()
    }

    fn fourier_multiply(&self, v: &[Complex64], mut symbol: impl FnMut(f64) -> Complex64) -> Vec<Complex64> {
        let n = v.len();
        let mut buf = v.to_vec();
        self.fwd.process(&mut buf);
        for (c, &k) in buf.iter_mut().zip(&self.k) {
            *c *= symbol(k);
        }
        self.inv.process(&mut buf);
        let scale = 1.0 / n as f64;
        buf.iter_mut().for_each(|c| *c *= scale);
        buf
    }

    /// `P v` with `P = -i d/dx`.
    pub fn momentum(&self, v: &[Complex64]) -> Vec<Complex64> {
        self.fourier_multiply(v, |k| Complex64::new(k, 0.0))
    }

    /// `D v = (X P v + P X v) / 2`.
    pub fn dilation_generator(&self, v: &[Complex64]) -> Vec<Complex64> {
        let pv = self.momentum(v);
        let xv: Vec<Complex64> = v.iter().zip(&self.x).map(|(c, &x)| c * x).collect();
        let pxv = self.momentum(&xv);
        pv.iter()
            .zip(&pxv)
            .zip(&self.x)
            .map(|((p, px), &x)| 0.5 * (p * x + px))
            .collect()
    }

    /// `V(s) v`: shift by `s`.
    pub fn translate(&self, v: &[Complex64], s: f64) -> Vec<Complex64> {
        if s == 0.0 {
            return v.to_vec();
        }
        self.fourier_multiply(v, |k| Complex64::from_polar(1.0, -k * s))
    }

    /// `U(t) v = exp(-itD) v`.
    pub fn dilate(&self, v: &[Complex64], t: f64) -> Vec<Complex64> {
        if t == 0.0 {
            return v.to_vec();
        }
        let tau = t * self.bound;
        let coeffs = chebyshev_exp_coefficients(tau);
        let inv_bound = 1.0 / self.bound;
        let apply_a = |w: &[Complex64]| -> Vec<Complex64> {
            self.dilation_generator(w).into_iter().map(|c| c * inv_bound).collect()
        };
        let mut prev = v.to_vec();
        let mut acc: Vec<Complex64> = prev.iter().map(|c| c * coeffs[0]).collect();
        if coeffs.len() == 1 {
            return acc;
        }
        let mut cur = apply_a(&prev);
        for (a, c) in acc.iter_mut().zip(&cur) {
            *a += c * coeffs[1];
        }
        for coeff in &coeffs[2..] {
            let next: Vec<Complex64> = apply_a(&cur)
                .into_iter()
                .zip(&prev)
                .map(|(ac, p)| 2.0 * ac - p)
                .collect();
            for (a, c) in acc.iter_mut().zip(&next) {
                *a += c * coeff;
            }
            prev = std::mem::replace(&mut cur, next);
        }
        acc
    }
}

fn l2(v: &[Complex64]) -> f64 {
    v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

/// Bessel values `J_0(x) ..= J_kmax(x)` for `x > 0` by Miller's backward
/// recurrence, normalised with `J_0 + 2 sum J_{2k} = 1`.
fn bessel_sequence(x: f64, kmax: usize) -> Vec<f64> {
    let mut start = kmax + 40;
    if start % 2 == 1 {
        start += 1;
    }
    let mut j = vec![0.0; start + 2];
    j[start] = 1e-30;
    for k in (1..=start).rev() {
        j[k - 1] = 2.0 * k as f64 / x * j[k] - j[k + 1];
        if j[k - 1].abs() > 1e250 {
            j.iter_mut().skip(k - 1).for_each(|v| *v *= 1e-250);
        }
    }
    let norm = j[0] + 2.0 * j.iter().skip(2).step_by(2).sum::<f64>();
    j.truncate(kmax + 1);
    j.iter_mut().for_each(|v| *v /= norm);
    j
}

/// Coefficients `c_k` with `exp(-i tau a) = sum_k c_k T_k(a)` on `[-1, 1]`.
fn chebyshev_exp_coefficients(tau: f64) -> Vec<Complex64> {
    let x = tau.abs();
    let kmax = (x + 15.0 * x.cbrt() + 40.0).ceil() as usize;
    let bessel = bessel_sequence(x, kmax);
    // (-i)^k for tau > 0, i^k for tau < 0
    let unit = if tau >= 0.0 { -Complex64::i() } else { Complex64::i() };
    let mut power = Complex64::new(1.0, 0.0);
    let mut out = Vec::with_capacity(kmax + 1);
    for (k, &jk) in bessel.iter().enumerate() {
        let weight = if k == 0 { 1.0 } else { 2.0 };
        out.push(power * weight * jk);
        power *= unit;
    }
    while out.len() > 1 && out.last().is_some_and(|c| c.norm() < 1e-18) {
        out.pop();
    }
    out
}

/// `|U(t) V(s) U(-t) f - V(s e^t) f| / |f|` for the Gaussian test vector.
pub fn affine_control_defect(resolution: usize, s: f64, t: f64) -> Result<f64> {
    let line = AffineLine::new(resolution)?;
    let f = line.gaussian(TEST_WIDTH);
    let lhs = line.dilate(&line.translate(&line.dilate(&f, -t), s), t);
    let rhs = line.translate(&f, s * t.exp());
    let diff: Vec<Complex64> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
    Ok(l2(&diff) / l2(&f))
}

/// The affine relation defect at `(s, t) = (0.3, 0.5)`.
pub fn affine_control(resolution: usize) -> Result<f64> {
    affine_control_defect(resolution, AFFINE_S, AFFINE_T)
}
