use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

use super::config::ExperimentConfig;
use super::record::CaseRecord;
use crate::cat::{conjugation_defect_along, differential_defect_along, CatSystem, SeparationCurve, TorusPoint};
use crate::direction::Direction;
use crate::error::{Error, Result};
use crate::hyperbolic::{conjugation_defect_geodesic, hyperbolic_distance, moebius_apply, HalfPlanePoint, MoebiusMatrix};
use crate::nogo::{
    affine_control_defect, conjugation_defect, conjugation_defect_search, random_hermitian, sylvester_obstruction,
    sylvester_sweep, SearchGrid,
};
use crate::weyl::{state_from_element, QuantumCat, StateFunctional, WeylPolynomial};

/// Deformation parameter of the Weyl algebra used by the quantum suites.
pub const GAMMA: f64 = PI / 16.0;
/// Initial separation of the divergence suite.
pub const DIVERGENCE_EPS: f64 = 1e-8;
/// Rates cycled through by the obstruction sweep.
pub const SYLVESTER_LAMBDAS: [f64; 4] = [0.25, 0.5, 1.0, 2.0];

/// Grid and draw defaults of a suite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteDefaults {
    pub t: (f64, f64),
    pub s: (f64, f64),
    pub samples: usize,
    pub draws: usize,
}

/// The named verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    CatClassical,
    CatDivergence,
    CatErgodic,
    Geodesic,
    CatQuantum,
    QuantumDivergence,
    NogoSylvester,
    NogoSearch,
    NogoAffine,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::CatClassical,
        Suite::CatDivergence,
        Suite::CatErgodic,
        Suite::Geodesic,
        Suite::CatQuantum,
        Suite::QuantumDivergence,
        Suite::NogoSylvester,
        Suite::NogoSearch,
        Suite::NogoAffine,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::CatClassical => "cat-classical",
            Suite::CatDivergence => "cat-divergence",
            Suite::CatErgodic => "cat-ergodic",
            Suite::Geodesic => "geodesic",
            Suite::CatQuantum => "cat-quantum",
            Suite::QuantumDivergence => "quantum-divergence",
            Suite::NogoSylvester => "nogo-sylvester",
            Suite::NogoSearch => "nogo-search",
            Suite::NogoAffine => "nogo-affine",
        }
    }

    /// The identity the suite checks.
    pub fn identity(self) -> &'static str {
        match self {
            Suite::CatClassical => {
                "cat map horocycle conjugation phi_t theta_j(s) phi_-t = theta_j(s e^{lambda_j t}) and phi^t V_j = e^{lambda_j t} V_j"
            }
            Suite::CatDivergence => "orbit separation |phi_t m - phi_t m'| = eps e^{lambda_1 t} for m' = m + eps V_1",
            Suite::CatErgodic => "Birkhoff average of exp(2 pi i nu.m) tends to the Lebesgue mean 0",
            Suite::Geodesic => {
                "geodesic conjugation xi(-t) xi_j(s) xi(t) = xi_j(s e^{lambda_j t}) in SL(2,R); Moebius invariance of the hyperbolic distance"
            }
            Suite::CatQuantum => {
                "quantum hyperbolicity alpha_t sigma_j(s) alpha_-t = sigma_j(s e^{lambda_j t}) on the Weyl algebra"
            }
            Suite::QuantumDivergence => {
                "state divergence |d_j(omega_1 - omega_2) o alpha_t| = e^{lambda_j t} |d_j(omega_1 - omega_2)|"
            }
            Suite::NogoSylvester => {
                "[H, G] = i lambda G forces G = 0 for lambda != 0; for lambda = 0 the solutions form the commutant of H"
            }
            Suite::NogoSearch => "no unitary pair of finite size satisfies U(t) V(s) U(-t) = V(s e^{lambda t})",
            Suite::NogoAffine => "translations and dilations of the line satisfy U(t) V(s) U(-t) = V(s e^t)",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|s| s.name() == name)
            .ok_or_else(|| Error::UnknownExperiment(name.to_string()))
    }

    pub fn defaults(self) -> SuiteDefaults {
        let d = |t, s, samples, draws| SuiteDefaults { t, s, samples, draws };
        match self {
            Suite::CatClassical => d((-10.0, 10.0), (-1.0, 1.0), 5, 100),
            Suite::CatDivergence => d((0.0, 15.0), (0.0, 0.0), 1, 1),
            // t_max is the orbit length
            Suite::CatErgodic => d((0.0, 1e5), (0.0, 0.0), 1, 10),
            Suite::Geodesic => d((-5.0, 5.0), (-2.0, 2.0), 11, 1000),
            Suite::CatQuantum => d((-6.0, 6.0), (-1.0, 1.0), 5, 50),
            Suite::QuantumDivergence => d((-6.0, 6.0), (0.0, 0.0), 1, 20),
            Suite::NogoSylvester => d((0.0, 0.0), (0.0, 0.0), 1, 100),
            Suite::NogoSearch => d((-2.0, 2.0), (-1.0, 1.0), 9, 200),
            // the relation is tested at (s, t) = (s_max, t_max)
            Suite::NogoAffine => d((0.5, 0.5), (0.3, 0.3), 1, 1),
        }
    }

    /// Tolerance names and default values.
    pub fn tolerances(self) -> &'static [(&'static str, f64)] {
        match self {
            Suite::CatClassical => &[("conjugation", 1e-9), ("differential", 1e-9), ("falsification", 0.1)],
            Suite::CatDivergence => &[("curve", 1e-6), ("slope", 1e-3)],
            Suite::CatErgodic => &[("ergodic", 5.0)],
            Suite::Geodesic => &[("conjugation", 1e-12), ("distance", 1e-10)],
            Suite::CatQuantum => &[("defect", 1e-8)],
            Suite::QuantumDivergence => &[("ratio", 1e-8)],
            Suite::NogoSylvester => &[("sigma", 1e-9)],
            Suite::NogoSearch => &[("min_defect", 0.05), ("density", 0.1), ("control", 1e-12)],
            Suite::NogoAffine => &[("trivial", 1e-10)],
        }
    }

    pub(crate) fn run(self, cfg: &ExperimentConfig) -> Result<Vec<CaseRecord>> {
        match self {
            Suite::CatClassical => cat_classical(cfg),
            Suite::CatDivergence => cat_divergence(cfg),
            Suite::CatErgodic => cat_ergodic(cfg),
            Suite::Geodesic => geodesic(cfg),
            Suite::CatQuantum => cat_quantum(cfg),
            Suite::QuantumDivergence => quantum_divergence(cfg),
            Suite::NogoSylvester => nogo_sylvester(cfg),
            Suite::NogoSearch => nogo_search(cfg),
            Suite::NogoAffine => nogo_affine(cfg),
        }
    }
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n <= 1 {
        return vec![lo];
    }
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}

fn integer_times(cfg: &ExperimentConfig) -> Result<Vec<i64>> {
    let lo = cfg.t_min.ceil() as i64;
    let hi = cfg.t_max.floor() as i64;
    if lo > hi {
        return Err(Error::InvalidConfig(format!(
            "no integer time in [{}, {}]",
            cfg.t_min, cfg.t_max
        )));
    }
    Ok((lo..=hi).collect())
}

fn random_points(rng: &mut ChaCha8Rng, n: usize) -> Vec<TorusPoint> {
    (0..n).map(|_| TorusPoint::new(rng.random(), rng.random())).collect()
}

fn max_of(values: impl ParallelIterator<Item = f64>) -> f64 {
    values.reduce(|| 0.0, f64::max)
}

fn cat_classical(cfg: &ExperimentConfig) -> Result<Vec<CaseRecord>> {
    let name = Suite::CatClassical.name();
    let sys = CatSystem::arnold();
    let tol_conj = cfg.tolerance("conjugation")?;
    let tol_diff = cfg.tolerance("differential")?;
    let tol_false = cfg.tolerance("falsification")?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let points = random_points(&mut rng, cfg.draws);
    let ss = linspace(cfg.s_min, cfg.s_max, cfg.samples);
    let mut out = Vec::new();
    for t in integer_times(cfg)? {
        for j in Direction::BOTH {
            let ji = j.index();
            let d = sys.differential_defect(j, t);
            out.push(
                CaseRecord::new(name, format!("differential-t{t}-j{ji}"), d, 0.0, d <= tol_diff)
                    .at(Some(t as f64), None, Some(ji)),
            );
            for &s in &ss {
                let worst = max_of(points.par_iter().map(|&m| sys.conjugation_defect(j, t, s, m)));
                out.push(
                    CaseRecord::new(name, format!("conjugation-t{t}-j{ji}"), worst, 0.0, worst <= tol_conj)
                        .at(Some(t as f64), Some(s), Some(ji)),
                );
            }
        }
    }
    // the coordinate axis (1, 0) in place of V_1: both forms must fail
    let axis = [1.0, 0.0];
    let k1 = sys.eigen().growth(Direction::Expanding, 1);
    let d = differential_defect_along(sys.map(), axis, k1, 1);
    out.push(
        CaseRecord::new(name, "axis-differential", d, tol_false, d > tol_false).at(Some(1.0), None, Some(1)),
    );
    let worst = ss
        .iter()
        .map(|&s| max_of(points.par_iter().map(|&m| conjugation_defect_along(sys.map(), axis, k1, 1, s, m))))
        .fold(0.0, f64::max);
    out.push(
        CaseRecord::new(name, "axis-conjugation", worst, tol_false, worst > tol_false).at(Some(1.0), None, Some(1)),
    );
    Ok(out)
}

fn cat_divergence(cfg: &ExperimentConfig) -> Result<Vec<CaseRecord>> {
    let name = Suite::CatDivergence.name();
    let times = integer_times(cfg)?;
    if times[0] < 0 {
        return Err(Error::InvalidConfig("cat-divergence needs t_min >= 0".into()));
    }
    let horizon = u32::try_from(*times.last().expect("non-empty"))
        .map_err(|_| Error::InvalidConfig("horizon out of range".into()))?;
    let sys = CatSystem::arnold();
    let lambda1 = sys.eigen().exponent(Direction::Expanding);
    let tol_curve = cfg.tolerance("curve")?;
    let tol_slope = cfg.tolerance("slope")?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let m = random_points(&mut rng, 1)[0];
    let curve = sys.separation_growth(m, [1.0, 0.0], DIVERGENCE_EPS, horizon)?;
    let kept: Vec<(i64, f64)> = curve.samples.into_iter().filter(|(t, _)| *t >= times[0]).collect();
    let mut out = Vec::new();
    for &(t, d) in &kept {
        let expected = DIVERGENCE_EPS * (lambda1 * t as f64).exp();
        let rec = CaseRecord::new(name, format!("separation-t{t}"), d, expected, false);
        let pass = rec.rel_error <= tol_curve;
        out.push(CaseRecord { pass, ..rec }.at(Some(t as f64), None, Some(1)));
    }
    let slope = SeparationCurve { samples: kept }
        .fitted_slope()
        .ok_or_else(|| Error::InvalidConfig("need at least two times for a slope fit".into()))?;
    let rec = CaseRecord::new(name, "fitted-slope", slope, lambda1, false);
    let pass = rec.abs_error <= tol_slope;
    out.push(CaseRecord { pass, ..rec }.at(None, None, Some(1)));
    Ok(out)
}

fn cat_ergodic(cfg: &ExperimentConfig) -> Result<Vec<CaseRecord>> {
    let name = Suite::CatErgodic.name();
    let n = cfg.t_max.round() as usize;
    if n == 0 {
        return Err(Error::InvalidConfig("cat-ergodic needs an orbit length t_max >= 1".into()));
    }
    let sys = CatSystem::arnold();
    let bound = cfg.tolerance("ergodic")? / (n as f64).sqrt();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let points = random_points(&mut rng, cfg.draws);
    let averages: Vec<f64> = points
        .par_iter()
        .map(|&m| sys.birkhoff_average([1, 0], m, n).map(|z| z.norm()))
        .collect::<Result<_>>()?;
    Ok(averages
        .into_iter()
        .enumerate()
        .map(|(i, a)| CaseRecord::new(name, format!("point-{i}"), a, 0.0, a <= bound).at(Some(n as f64), None, None))
        .collect())
}

fn random_group_element(rng: &mut ChaCha8Rng) -> Result<MoebiusMatrix> {
    // Iwasawa coordinates: translation, scaling, rotation
    let x: f64 = rng.random_range(-2.0..2.0);
    let log_y: f64 = rng.random_range(-2.0..2.0);
    let theta: f64 = rng.random_range(0.0..2.0 * PI);
    let h = (log_y / 2.0).exp();
    let n = MoebiusMatrix::new(1.0, x, 0.0, 1.0)?;
    let a = MoebiusMatrix::new(h, 0.0, 0.0, h.recip())?;
    let k = MoebiusMatrix::normalized(theta.cos(), -theta.sin(), theta.sin(), theta.cos())?;
    Ok(n * a * k)
}

fn random_half_plane_point(rng: &mut ChaCha8Rng) -> Result<HalfPlanePoint> {
    let x: f64 = rng.random_range(-2.0..2.0);
    let log_y: f64 = rng.random_range(-2.0..2.0);
    HalfPlanePoint::new(x, log_y.exp())
}

fn geodesic(cfg: &ExperimentConfig) -> Result<Vec<CaseRecord>> {
    let name = Suite::Geodesic.name();
    let tol_conj = cfg.tolerance("conjugation")?;
    let tol_dist = cfg.tolerance("distance")?;
    let mut out = Vec::new();
    for t in linspace(cfg.t_min, cfg.t_max, cfg.samples) {
        for s in linspace(cfg.s_min, cfg.s_max, cfg.samples) {
            for j in Direction::BOTH {
                let d = conjugation_defect_geodesic(j, t, s);
                let pass = d <= tol_conj * (1.0 + t.abs().exp());
                out.push(
                    CaseRecord::new(name, format!("conjugation-j{}", j.index()), d, 0.0, pass)
                        .at(Some(t), Some(s), Some(j.index())),
                );
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut worst: f64 = 0.0;
    for _ in 0..cfg.draws {
        let g = random_group_element(&mut rng)?;
        let z1 = random_half_plane_point(&mut rng)?;
        let z2 = random_half_plane_point(&mut rng)?;
        let before = hyperbolic_distance(z1, z2);
        let after = hyperbolic_distance(moebius_apply(&g, z1)?, moebius_apply(&g, z2)?);
        worst = worst.max((after - before).abs());
    }
    out.push(CaseRecord::new(name, "distance-invariance", worst, 0.0, worst <= tol_dist));
    Ok(out)
}

fn cat_quantum(cfg: &ExperimentConfig) -> Result<Vec<CaseRecord>> {
    let name = Suite::CatQuantum.name();
    let qc = QuantumCat::arnold();
    let lambda1 = qc.classical().eigen().exponent(Direction::Expanding);
    let tol = cfg.tolerance("defect")?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let generators: Vec<WeylPolynomial> = (0..cfg.draws)
        .map(|_| WeylPolynomial::generator((rng.random_range(-20..=20_i64), rng.random_range(-20..=20_i64)), GAMMA))
        .collect();
    let ss = linspace(cfg.s_min, cfg.s_max, cfg.samples);
    let mut out = Vec::new();
    for t in integer_times(cfg)? {
        let bound = tol * (lambda1 * t as f64).abs().exp();
        for &s in &ss {
            for j in Direction::BOTH {
                let worst = max_of(generators.par_iter().map(|a| qc.hyperbolicity_defect(a, j, t, s)));
                out.push(
                    CaseRecord::new(name, format!("defect-j{}", j.index()), worst, 0.0, worst <= bound)
                        .at(Some(t as f64), Some(s), Some(j.index())),
                );
            }
        }
    }
    Ok(out)
}

fn random_state(rng: &mut ChaCha8Rng) -> Result<StateFunctional> {
    let terms: Vec<((i64, i64), Complex64)> = (0..3)
        .map(|_| {
            let nu = (rng.random_range(-3..=3), rng.random_range(-3..=3));
            (nu, Complex64::new(StandardNormal.sample(rng), StandardNormal.sample(rng)))
        })
        .collect();
    state_from_element(&WeylPolynomial::from_terms(GAMMA, terms))
}

fn quantum_divergence(cfg: &ExperimentConfig) -> Result<Vec<CaseRecord>> {
    let name = Suite::QuantumDivergence.name();
    let qc = QuantumCat::arnold();
    let tol = cfg.tolerance("ratio")?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let pairs: Vec<(StateFunctional, StateFunctional)> = (0..cfg.draws)
        .map(|_| Ok((random_state(&mut rng)?, random_state(&mut rng)?)))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for t in integer_times(cfg)? {
        for j in Direction::BOTH {
            let expected = (qc.classical().eigen().exponent(j) * t as f64).exp();
            // report the pair furthest from the prediction
            let mut worst: Option<CaseRecord> = None;
            for (a, b) in &pairs {
                let ratio = qc.divergence_ratio(a, b, j, t)?;
                let rec = CaseRecord::new(name, format!("ratio-j{}", j.index()), ratio, expected, false);
                if worst.as_ref().is_none_or(|w| rec.rel_error > w.rel_error) {
                    worst = Some(rec);
                }
            }
            let rec = worst.expect("draws >= 1");
            let pass = rec.rel_error <= tol;
            out.push(CaseRecord { pass, ..rec }.at(Some(t as f64), None, Some(j.index())));
        }
    }
    Ok(out)
}

/// `U diag(levels) U*` with a random unitary `U`.
fn rotated_diagonal(levels: &[f64], rng: &mut ChaCha8Rng) -> DMatrix<Complex64> {
    let n = levels.len();
    let z = DMatrix::from_fn(n, n, |_, _| Complex64::new(StandardNormal.sample(rng), StandardNormal.sample(rng)));
    let u = z.qr().q();
    let d = DMatrix::from_diagonal(&DVector::from_iterator(n, levels.iter().map(|&e| Complex64::new(e, 0.0))));
    let h = &u * d * u.adjoint();
    // exact hermitian part
    (&h + h.adjoint()) * Complex64::new(0.5, 0.0)
}

fn nogo_sylvester(cfg: &ExperimentConfig) -> Result<Vec<CaseRecord>> {
    let name = Suite::NogoSylvester.name();
    let tol = cfg.tolerance("sigma")?;
    let mut out: Vec<CaseRecord> = sylvester_sweep(cfg.seed, cfg.draws, &SYLVESTER_LAMBDAS)?
        .into_iter()
        .map(|r| {
            let bound = r.lambda.abs();
            let pass = r.nullity == 0 && r.sigma_min >= bound - tol;
            CaseRecord::new(name, format!("n{}-lambda{}-seed{}", r.n, r.lambda, r.seed), r.sigma_min, bound, pass)
        })
        .collect();
    // lambda = 0: integer levels with repeats, rotated into a random basis
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(1);
    for i in 0..cfg.draws.div_ceil(4) {
        let n = 2 + i % 11;
        let levels: Vec<f64> = (0..n).map(|_| f64::from(rng.random_range(1..=4_i32))).collect();
        let expected: usize = (1..=4)
            .map(|v| levels.iter().filter(|&&e| e == f64::from(v)).count().pow(2))
            .sum();
        let h = rotated_diagonal(&levels, &mut rng);
        let ob = sylvester_obstruction(&h, 0.0)?;
        out.push(CaseRecord::new(
            name,
            format!("commutant-n{n}-case{i}"),
            ob.nullity as f64,
            expected as f64,
            ob.nullity == expected,
        ));
    }
    Ok(out)
}

fn diag(values: &[f64]) -> DMatrix<Complex64> {
    DMatrix::from_diagonal(&DVector::from_iterator(values.len(), values.iter().map(|&v| Complex64::new(v, 0.0))))
}

fn nogo_search(cfg: &ExperimentConfig) -> Result<Vec<CaseRecord>> {
    let name = Suite::NogoSearch.name();
    let tol_min = cfg.tolerance("min_defect")?;
    let tol_density = cfg.tolerance("density")?;
    let tol_control = cfg.tolerance("control")?;
    let grid = |points: usize| SearchGrid {
        s: linspace(cfg.s_min, cfg.s_max, points),
        t: linspace(cfg.t_min, cfg.t_max, points),
    };
    let h = diag(&[0.0, 1.0]);
    let coarse = conjugation_defect_search(&h, 1.0, cfg.draws, &grid(cfg.samples), cfg.seed)?.best_defect;
    let dense = conjugation_defect_search(&h, 1.0, cfg.draws, &grid(2 * cfg.samples - 1), cfg.seed)?.best_defect;
    let mut out = vec![
        CaseRecord::new(name, "two-level-best", coarse, tol_min, coarse >= tol_min),
        CaseRecord::new(name, "two-level-dense-grid", dense, coarse, dense >= (1.0 - tol_density) * coarse),
    ];
    // a random three-level Hamiltonian as well
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let h3 = random_hermitian(3, &mut rng);
    let best3 = conjugation_defect_search(&h3, 1.0, cfg.draws, &grid(cfg.samples), cfg.seed)?.best_defect;
    out.push(CaseRecord::new(name, "random-three-level-best", best3, tol_min, best3 >= tol_min));
    // commuting pair with lambda = 0 satisfies the relation exactly
    let control = conjugation_defect(&h, &diag(&[0.6, 0.8]), 0.0, &grid(cfg.samples))?;
    out.push(CaseRecord::new(name, "commuting-control", control, 0.0, control <= tol_control));
    Ok(out)
}

fn nogo_affine(cfg: &ExperimentConfig) -> Result<Vec<CaseRecord>> {
    let name = Suite::NogoAffine.name();
    let tol = cfg.tolerance("trivial")?;
    let (s, t) = (cfg.s_max, cfg.t_max);
    let resolutions = [256usize, 512, 1024, 2048];
    let rows: Vec<[f64; 3]> = resolutions
        .par_iter()
        .map(|&n| {
            Ok([
                affine_control_defect(n, s, t)?,
                affine_control_defect(n, 0.0, t)?,
                affine_control_defect(n, s, 0.0)?,
            ])
        })
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    // a relative defect of two unitaries never exceeds 2
    let mut previous = 2.0;
    for (&n, row) in resolutions.iter().zip(&rows) {
        out.push(
            CaseRecord::new(name, format!("relation-n{n}"), row[0], previous, row[0] < previous)
                .at(Some(t), Some(s), None),
        );
        previous = row[0];
    }
    for (&n, row) in resolutions.iter().zip(&rows) {
        out.push(CaseRecord::new(name, format!("s0-n{n}"), row[1], 0.0, row[1] <= tol).at(Some(t), Some(0.0), None));
        out.push(CaseRecord::new(name, format!("t0-n{n}"), row[2], 0.0, row[2] <= tol).at(Some(0.0), Some(s), None));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::from_name(s.name()).unwrap(), s);
        }
        assert!(Suite::from_name("cat").is_err());
    }

    #[test]
    fn linspace_endpoints() {
        assert_eq!(linspace(-1.0, 1.0, 5), vec![-1.0, -0.5, 0.0, 0.5, 1.0]);
        assert_eq!(linspace(2.0, 3.0, 1), vec![2.0]);
    }

    #[test]
    fn integer_grid() {
        let mut cfg = ExperimentConfig::defaults("cat-quantum").unwrap();
        cfg.t_min = -1.5;
        cfg.t_max = 1.2;
        assert_eq!(integer_times(&cfg).unwrap(), vec![-1, 0, 1]);
        cfg.t_min = 0.2;
        cfg.t_max = 0.8;
        assert!(integer_times(&cfg).is_err());
    }

    #[test]
    fn group_elements_are_unimodular() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let g = random_group_element(&mut rng).unwrap();
            assert!((g.determinant() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn rotated_diagonal_keeps_spectrum() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let h = rotated_diagonal(&[1.0, 1.0, 3.0], &mut rng);
        let mut ev: Vec<f64> = nalgebra::SymmetricEigen::new(h).eigenvalues.iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        for (a, b) in ev.iter().zip([1.0, 1.0, 3.0]) {
            assert!((a - b).abs() < 1e-12);
        }
    }
}
