//! End-to-end cross-check of the structured algorithm against dense elimination.

use std::fmt;

use crate::dense::DenseMatrix;
use crate::factor::{factor, Factorization};
use crate::hepta::{Kind, Structured};
use crate::oracle::{oracle_det, oracle_invert, oracle_solve};
use crate::scalars::{Field, RatFunc, Rational};
use crate::solve::{invert_structured, solve_structured, structured_determinant};

#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions {
    /// Overwrite this pivot with a wrong value before checking.
    pub corrupt_pivot: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// First disagreement, when there is one.
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub n: usize,
    pub kind: Kind,
    pub substituted: Vec<usize>,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n = {}, kind = {}, substituted pivots = {:?}", self.n, self.kind, self.substituted)?;
        writeln!(f, "{:<24} result", "check")?;
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            match &c.detail {
                Some(d) if !c.passed => writeln!(f, "{:<24} {status}  {d}", c.name)?,
                _ => writeln!(f, "{:<24} {status}", c.name)?,
            }
        }
        write!(f, "overall: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

fn check(name: &'static str, outcome: Result<(), String>) -> Check {
    Check { name, passed: outcome.is_ok(), detail: outcome.err() }
}

fn first_matrix_difference<T: Clone + PartialEq + fmt::Display>(ours: &DenseMatrix<T>, theirs: &DenseMatrix<T>) -> Result<(), String> {
    if ours.rows() != theirs.rows() || ours.cols() != theirs.cols() {
        return Err(format!("shape {}x{} vs {}x{}", ours.rows(), ours.cols(), theirs.rows(), theirs.cols()));
    }
    for i in 0..ours.rows() {
        for j in 0..ours.cols() {
            if ours[(i, j)] != theirs[(i, j)] {
                return Err(format!("entry ({}, {}): {} vs oracle {}", i + 1, j + 1, ours[(i, j)], theirs[(i, j)]));
            }
        }
    }
    Ok(())
}

/// `L U - (H + t sum E_ii)`, zero when the factorization is consistent.
pub fn reconstruction_residual(fz: &Factorization<RatFunc>, m: &Structured) -> Result<(), String> {
    let lu = fz.reconstruct_lu();
    let product = lu.l.mul(&lu.u).map_err(|e| e.to_string())?;
    let mut target = m.core().to_dense().map(|v| RatFunc::from(v.clone()));
    for &i in &lu.perturbation {
        target[(i - 1, i - 1)] = target[(i - 1, i - 1)].plus(&RatFunc::t());
    }
    first_matrix_difference(&product, &target).map_err(|e| e.replace("vs oracle", "vs expected"))
}

fn leading_minors_match(fz: &Factorization<RatFunc>, dense_core: &DenseMatrix<Rational>) -> Result<(), String> {
    let n = fz.order();
    for i in 1..=n {
        if fz.alpha(i).times(fz.u(i - 1)) != *fz.u(i) {
            return Err(format!("u_{i} != alpha_{i} u_{}", i - 1));
        }
    }
    let minors = fz.leading_minors().map_err(|e| e.to_string())?;
    for (i, ours) in minors.iter().enumerate().take(n - 1).skip(1) {
        let theirs = oracle_det(&dense_core.leading_block(i)).map_err(|e| e.to_string())?;
        if *ours != theirs {
            return Err(format!("u_{i}(0) = {ours} vs oracle {theirs}"));
        }
    }
    Ok(())
}

/// The right-hand side used by the solve check: `(1, 2, ..., n)`.
pub fn probe_rhs(n: usize) -> Vec<Rational> {
    (1..=n as i64).map(Rational::from).collect()
}

/// Runs every check. Never panics on singular input; singular results must
/// agree with the oracle being singular too.
pub fn verify(m: &Structured, options: VerifyOptions) -> VerifyReport {
    let n = m.order();
    let dense = m.to_dense();
    let dense_core = m.core().to_dense();
    let mut fz = factor(m.core());
    if let Some(i) = options.corrupt_pivot {
        let i = i.clamp(1, n);
        let wrong = fz.alpha(i).plus(&RatFunc::one());
        fz.corrupt_pivot_for_testing(i, wrong);
    }

    let mut checks = Vec::new();
    let oracle_d = oracle_det(&dense).expect("square matrix");
    let ours = structured_determinant(&fz, m);
    checks.push(check(
        "determinant",
        if ours == oracle_d { Ok(()) } else { Err(format!("{ours} vs oracle {oracle_d}")) },
    ));

    checks.push(check("reconstruction L U", reconstruction_residual(&fz, m)));
    checks.push(check("leading minors", leading_minors_match(&fz, &dense_core)));

    let rhs = probe_rhs(n);
    let solve_outcome = match (solve_structured(&fz, m, &rhs), oracle_solve(&dense, &rhs)) {
        (Ok(report), Ok(expected)) => match report.solution.iter().zip(&expected).position(|(a, b)| a != b) {
            Some(i) => Err(format!("x_{}: {} vs oracle {}", i + 1, report.solution[i], expected[i])),
            None => Ok(()),
        },
        (Err(e), Err(_)) if e.is_singular() => Ok(()),
        (Err(e), Ok(_)) => Err(format!("solver failed ({e}) but oracle solved")),
        (Ok(_), Err(_)) => Err("solver returned a solution for a singular matrix".to_string()),
        (Err(e), Err(_)) => Err(format!("solver failed with {e}")),
    };
    checks.push(check("solve", solve_outcome));

    let inverse = invert_structured(&fz, m);
    let inverse_outcome = match (&inverse, oracle_invert(&dense)) {
        (Ok(ours), Ok(theirs)) => first_matrix_difference(ours, &theirs),
        (Err(e), Err(_)) if e.is_singular() => Ok(()),
        (Err(e), Ok(_)) => Err(format!("inverse failed ({e}) but oracle inverted")),
        (Ok(_), Err(_)) => Err("inverse returned for a singular matrix".to_string()),
        (Err(e), Err(_)) => Err(format!("inverse failed with {e}")),
    };
    checks.push(check("inverse", inverse_outcome));

    if let Ok(inv) = &inverse {
        let identity = match dense.mul(inv) {
            Ok(p) if p.is_identity() => Ok(()),
            Ok(_) => Err("product is not the identity".to_string()),
            Err(e) => Err(e.to_string()),
        };
        checks.push(check("M M^-1 = I", identity));
    }

    VerifyReport { n, kind: m.kind(), substituted: fz.substituted().iter().copied().collect(), checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{anti_10, cyclic_10};

    #[test]
    fn fixtures_pass() {
        let a = verify(&Structured::Cyclic(cyclic_10()), VerifyOptions::default());
        assert!(a.passed(), "{a}");
        let b = verify(&Structured::Anti(anti_10()), VerifyOptions::default());
        assert!(b.passed(), "{b}");
        assert_eq!(b.checks.len(), 6);
        assert_eq!(b.kind, Kind::Anti);
    }

    #[test]
    fn corrupted_pivot_is_caught() {
        let r = verify(&Structured::Cyclic(cyclic_10()), VerifyOptions { corrupt_pivot: Some(4) });
        assert!(!r.passed());
        let fail = r.first_failure().unwrap();
        assert_eq!(fail.name, "determinant");
        assert!(r.to_string().contains("FAIL"));
    }
}
