use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::sylvester::random_hermitian;
use crate::error::{Error, Result};

/// Sample points in `s` and `t` at which the group relation is tested.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchGrid {
    pub s: Vec<f64>,
    pub t: Vec<f64>,
}

impl SearchGrid {
    /// `points` evenly spaced values on `s in [-1,1]` and `t in [-2,2]`.
    pub fn uniform(points: usize) -> Self {
        let points = points.max(2);
        let lin = |lo: f64, hi: f64| {
            (0..points)
                .map(|i| lo + (hi - lo) * i as f64 / (points - 1) as f64)
                .collect()
        };
        Self { s: lin(-1.0, 1.0), t: lin(-2.0, 2.0) }
    }
}

/// Spectral data of a hermitian matrix, for `exp(i c X)` at many `c`.
struct HermitianExp {
    values: DVector<f64>,
    vectors: DMatrix<Complex64>,
}

impl HermitianExp {
    fn new(x: &DMatrix<Complex64>) -> Self {
        let eig = SymmetricEigen::new(x.clone());
        Self { values: eig.eigenvalues, vectors: eig.eigenvectors }
    }

    /// `exp(i c X)`.
    fn exp_i(&self, c: f64) -> DMatrix<Complex64> {
        let n = self.values.len();
        let mut scaled = self.vectors.clone();
        for j in 0..n {
            let phase = Complex64::from_polar(1.0, c * self.values[j]);
            scaled.column_mut(j).iter_mut().for_each(|z| *z *= phase);
        }
        scaled * self.vectors.adjoint()
    }
}

fn check_square_hermitian(h: &DMatrix<Complex64>) -> Result<()> {
    if h.nrows() != h.ncols() || h.nrows() == 0 {
        return Err(Error::Dimension { min: 1, got: h.nrows().min(h.ncols()) });
    }
    let dev = (h - h.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max);
    if dev > 1e-12 * h.norm().max(1.0) {
        return Err(Error::NotHermitian(dev));
    }
    Ok(())
}

fn grid_defect(h: &HermitianExp, g: &HermitianExp, lambda: f64, grid: &SearchGrid) -> f64 {
    let mut worst: f64 = 0.0;
    for &t in &grid.t {
        let fwd = h.exp_i(t);
        let back = fwd.adjoint();
        let rate = (lambda * t).exp();
        for &s in &grid.s {
            let lhs = &fwd * g.exp_i(s) * &back;
            let rhs = g.exp_i(s * rate);
            worst = worst.max((lhs - rhs).norm());
        }
    }
    worst
}

/// `max_{(s,t)} |e^{iHt} e^{isG} e^{-iHt} - e^{i s e^{lambda t} G}|_F` over the grid.
pub fn conjugation_defect(h: &DMatrix<Complex64>, g: &DMatrix<Complex64>, lambda: f64, grid: &SearchGrid) -> Result<f64> {
    check_square_hermitian(h)?;
    check_square_hermitian(g)?;
    if g.nrows() != h.nrows() {
        return Err(Error::Dimension { min: h.nrows(), got: g.nrows() });
    }
    Ok(grid_defect(&HermitianExp::new(h), &HermitianExp::new(g), lambda, grid))
}

/// Best candidate found by [`conjugation_defect_search`].
#[derive(Debug, Clone, PartialEq)]
pub struct SearchOutcome {
    pub best_defect: f64,
    pub best_generator: DMatrix<Complex64>,
}

fn unit(g: DMatrix<Complex64>) -> DMatrix<Complex64> {
    let n = g.norm();
    g / Complex64::new(n, 0.0)
}

/// Minimises the grid defect over unit-Frobenius hermitian `G`: `trials`
/// random draws, then a shrinking-step random walk from the best few.
pub fn conjugation_defect_search(
    h: &DMatrix<Complex64>,
    lambda: f64,
    trials: usize,
    grid: &SearchGrid,
    seed: u64,
) -> Result<SearchOutcome> {
    check_square_hermitian(h)?;
    let n = h.nrows();
    let h_exp = HermitianExp::new(h);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let score = |g: &DMatrix<Complex64>| grid_defect(&h_exp, &HermitianExp::new(g), lambda, grid);

    let mut pool: Vec<(f64, DMatrix<Complex64>)> = (0..trials.max(1))
        .map(|_| {
            let g = unit(random_hermitian(n, &mut rng));
            (score(&g), g)
        })
        .collect();
    pool.sort_by(|a, b| a.0.total_cmp(&b.0));
    pool.truncate(4);

    let mut best = pool[0].clone();
    for (mut value, mut g) in pool {
        let mut step = 0.25;
        let mut failures = 0;
        while step > 1e-4 {
            let candidate = unit(&g + random_hermitian(n, &mut rng) * Complex64::new(step, 0.0));
            let v = score(&candidate);
            if v < value {
                value = v;
                g = candidate;
                failures = 0;
            } else {
                failures += 1;
                if failures >= 8 {
                    step *= 0.5;
                    failures = 0;
                }
            }
        }
        if value < best.0 {
            best = (value, g);
        }
    }
    Ok(SearchOutcome { best_defect: best.0, best_generator: best.1 })
}
