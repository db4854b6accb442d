//! Timing harness for the O(n) claims: per-phase wall times and the
//! structural operation count, with per-size medians.

use std::fmt;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::generate::random_bands;
use crate::factor::{factor, factor_float};
use crate::hepta::{Band, CyclicHeptaMatrix, MIN_ORDER};
use crate::scalars::{FloatTolerance, RatFunc, Rational};
use crate::solve::{invert_float, invert_with, solve_float, substitute};

/// Largest order exact mode runs without an explicit override.
pub const EXACT_CAP: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::Float => "float",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exact" => Ok(Mode::Exact),
            "float" => Ok(Mode::Float),
            other => Err(format!("unknown mode {other:?} (expected exact or float)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BenchError {
    #[error("exact mode is capped at n <= {cap}; n = {n} requested (pass the override flag or use float mode)")]
    ExactCapExceeded { n: usize, cap: usize },
    #[error("order {n} is below the minimum of {MIN_ORDER}")]
    DimensionTooSmall { n: usize },
    #[error("at least one size and one trial are required")]
    Empty,
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub mode: Mode,
    pub trials: usize,
    pub seed: u64,
    pub tolerance: FloatTolerance,
    /// Lift the exact-mode size cap.
    pub allow_large_exact: bool,
    pub invert: bool,
}

impl BenchConfig {
    pub fn new(sizes: Vec<usize>, mode: Mode, trials: usize) -> Self {
        BenchConfig { sizes, mode, trials, seed: 0, tolerance: FloatTolerance::default(), allow_large_exact: false, invert: true }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub n: usize,
    pub mode: Mode,
    pub trial: usize,
    pub factor_secs: f64,
    pub solve_secs: f64,
    pub invert_secs: Option<f64>,
    pub op_count: u64,
    pub substituted: usize,
    /// Float breakdown message; the record is kept rather than aborting the run.
    pub breakdown: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchMedian {
    pub n: usize,
    pub mode: Mode,
    pub trials: usize,
    pub factor_secs: f64,
    pub solve_secs: f64,
    pub invert_secs: Option<f64>,
    pub op_count: u64,
    pub breakdowns: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub records: Vec<BenchRecord>,
    pub medians: Vec<BenchMedian>,
}

impl BenchReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("bench report serializes")
    }
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:>8} {:>6} {:>7} {:>12} {:>12} {:>12} {:>12} {:>10}", "n", "mode", "trials", "factor_s", "solve_s", "invert_s", "op_count", "breakdown")?;
        for m in &self.medians {
            let inv = m.invert_secs.map_or_else(|| "-".to_string(), |s| format!("{s:.6}"));
            writeln!(
                f,
                "{:>8} {:>6} {:>7} {:>12.6} {:>12.6} {:>12} {:>12} {:>10}",
                m.n, m.mode, m.trials, m.factor_secs, m.solve_secs, inv, m.op_count, m.breakdowns
            )?;
        }
        Ok(())
    }
}

/// Random bands with the diagonal pushed past each row's off-diagonal mass,
/// so float runs do not break down on an unlucky draw.
pub fn bench_instance(n: usize, seed: u64) -> CyclicHeptaMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bands = random_bands(n, &mut rng);
    let probe = CyclicHeptaMatrix::from_bands(bands.clone()).expect("random bands are valid");
    for i in 1..=n {
        let mass = probe
            .row_slots(i)
            .filter(|&(j, _, _)| j != i)
            .fold(Rational::one(), |acc, (_, band, k)| &acc + &probe.get(band, k).abs());
        bands.diag[i - 1] = mass;
    }
    debug_assert!(bands.family(Band::Diag).iter().all(|d| !d.is_zero()));
    CyclicHeptaMatrix::from_bands(bands).expect("dominant bands are valid")
}

fn time<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64())
}

fn run_one(config: &BenchConfig, n: usize, trial: usize) -> BenchRecord {
    let h = bench_instance(n, config.seed.wrapping_add((n as u64) << 20).wrapping_add(trial as u64));
    let rhs: Vec<i64> = (1..=n as i64).collect();
    let mut record = BenchRecord {
        n,
        mode: config.mode,
        trial,
        factor_secs: 0.0,
        solve_secs: 0.0,
        invert_secs: None,
        op_count: 0,
        substituted: 0,
        breakdown: None,
    };
    match config.mode {
        Mode::Exact => {
            let (fz, t) = time(|| factor(&h));
            record.factor_secs = t;
            record.op_count = fz.op_count();
            record.substituted = fz.substituted().len();
            let rhs: Vec<RatFunc> = rhs.iter().map(|&v| RatFunc::from(Rational::from(v))).collect();
            record.solve_secs = time(|| substitute(&fz, &rhs)).1;
            if config.invert {
                record.invert_secs = Some(time(|| invert_with(&fz)).1);
            }
        }
        Mode::Float => {
            let (fz, t) = time(|| factor_float(&h, config.tolerance));
            record.factor_secs = t;
            match fz {
                Ok(fz) => {
                    record.op_count = fz.op_count();
                    let rhs: Vec<f64> = rhs.iter().map(|&v| v as f64).collect();
                    record.solve_secs = time(|| solve_float(&fz, &rhs)).1;
                    if config.invert {
                        record.invert_secs = Some(time(|| invert_float(&fz)).1);
                    }
                }
                Err(e) => record.breakdown = Some(e.to_string()),
            }
        }
    }
    record
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let mid = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[mid]
    } else {
        (xs[mid - 1] + xs[mid]) / 2.0
    }
}

pub fn bench(config: &BenchConfig) -> Result<BenchReport, BenchError> {
    if config.sizes.is_empty() || config.trials == 0 {
        return Err(BenchError::Empty);
    }
    for &n in &config.sizes {
        if n < MIN_ORDER {
            return Err(BenchError::DimensionTooSmall { n });
        }
        if config.mode == Mode::Exact && n > EXACT_CAP && !config.allow_large_exact {
            return Err(BenchError::ExactCapExceeded { n, cap: EXACT_CAP });
        }
    }
    let mut records = Vec::new();
    let mut medians = Vec::new();
    for &n in &config.sizes {
        let batch: Vec<BenchRecord> = (0..config.trials).map(|trial| run_one(config, n, trial)).collect();
        let ok: Vec<&BenchRecord> = batch.iter().filter(|r| r.breakdown.is_none()).collect();
        let pick = |f: &dyn Fn(&BenchRecord) -> f64| median(ok.iter().map(|r| f(r)).collect::<Vec<_>>());
        let (factor_secs, solve_secs) = if ok.is_empty() { (0.0, 0.0) } else { (pick(&|r| r.factor_secs), pick(&|r| r.solve_secs)) };
        let invert_secs = (!ok.is_empty() && config.invert).then(|| pick(&|r| r.invert_secs.unwrap_or(0.0)));
        medians.push(BenchMedian {
            n,
            mode: config.mode,
            trials: config.trials,
            factor_secs,
            solve_secs,
            invert_secs,
            op_count: ok.first().map_or(0, |r| r.op_count),
            breakdowns: batch.len() - ok.len(),
        });
        records.extend(batch);
    }
    Ok(BenchReport { records, medians })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_trials_three_records() {
        let mut cfg = BenchConfig::new(vec![16], Mode::Float, 3);
        cfg.invert = false;
        let report = bench(&cfg).unwrap();
        assert_eq!(report.records.len(), 3);
        assert_eq!(report.medians.len(), 1);
        assert_eq!(report.medians[0].breakdowns, 0);
    }

    #[test]
    fn exact_cap_refuses() {
        let cfg = BenchConfig::new(vec![5000], Mode::Exact, 1);
        let err = bench(&cfg).unwrap_err();
        assert_eq!(err, BenchError::ExactCapExceeded { n: 5000, cap: EXACT_CAP });
        assert!(err.to_string().contains("512"));
    }

    #[test]
    fn float_op_count_is_linear() {
        let mut cfg = BenchConfig::new(vec![1000, 2000], Mode::Float, 1);
        cfg.invert = false;
        let report = bench(&cfg).unwrap();
        let ratio = report.medians[1].op_count as f64 / report.medians[0].op_count as f64;
        assert!((1.8..=2.2).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn exact_and_float_count_the_same_operations() {
        let mut cfg = BenchConfig::new(vec![24], Mode::Exact, 1);
        cfg.invert = false;
        let exact = bench(&cfg).unwrap();
        cfg.mode = Mode::Float;
        let float = bench(&cfg).unwrap();
        assert_eq!(exact.medians[0].op_count, float.medians[0].op_count);
    }

    #[test]
    fn json_is_machine_readable() {
        let mut cfg = BenchConfig::new(vec![8, 9], Mode::Float, 2);
        cfg.invert = false;
        let json = bench(&cfg).unwrap().to_json();
        let back: BenchReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.records.len(), 4);
        assert_eq!(back.medians[1].n, 9);
    }
}
