//! Breakdown-free bordered LU factorization of cyclic heptadiagonal matrices.
//!
//! The factors have the shape
//!
//! ```text
//! L: unit lower triangular, band f (1st sub), e (2nd sub), D_i/alpha_{i-3} (3rd sub)
//!    on rows 2..n-2, plus dense rows n-1 (k) and n (h).
//! U: pivots alpha on the diagonal, band g, z, C above it on rows 1..n-3,
//!    plus dense columns n-1 (w) and n (v).
//! ```
//!
//! Pivots are produced one at a time. In exact mode a pivot that comes out
//! identically zero is replaced by the indeterminate `t` and the run
//! continues over rational functions in `t`; every final quantity is then
//! read off at `t = 0`. This is equivalent to factoring `H + t * sum(E_ii)`
//! over the substituted indices, which is what [`Factorization::reconstruct_lu`]
//! reproduces exactly.

use std::collections::BTreeSet;

use crate::dense::DenseMatrix;
use crate::hepta::{Band, CyclicHeptaMatrix};
use crate::scalars::{Field, FloatScalar, FloatTolerance, RatFunc, Rational, ScalarError};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FactorError {
    #[error("pivot alpha_{index} = {value:e} vanished within tolerance")]
    PivotBreakdown { index: usize, value: f64 },
    #[error("leading minor u_{index} is not finite at t = 0")]
    MinorPole { index: usize },
}

/// Decides what happens to a freshly computed pivot.
pub trait PivotRule<F: Field> {
    /// Returns the pivot to use and whether it was substituted.
    fn admit(&self, index: usize, pivot: F, diag: &F) -> Result<(F, bool), FactorError>;
}

/// Exact mode: an identically zero pivot becomes the symbol `t`.
#[derive(Debug, Clone, Copy, Default)]
pub struct SymbolicRescue;

impl PivotRule<RatFunc> for SymbolicRescue {
    fn admit(&self, _index: usize, pivot: RatFunc, _diag: &RatFunc) -> Result<(RatFunc, bool), FactorError> {
        if pivot.is_zero() {
            Ok((RatFunc::t(), true))
        } else {
            Ok((pivot, false))
        }
    }
}

/// Float mode: no rescue; a negligible pivot is a breakdown.
#[derive(Debug, Clone, Copy, Default)]
pub struct FloatThreshold(pub FloatTolerance);

impl PivotRule<FloatScalar> for FloatThreshold {
    fn admit(&self, index: usize, pivot: FloatScalar, diag: &FloatScalar) -> Result<(FloatScalar, bool), FactorError> {
        if !pivot.is_finite() || pivot.is_zero_within(diag.value(), &self.0) {
            return Err(FactorError::PivotBreakdown { index, value: pivot.value() });
        }
        Ok((pivot, false))
    }
}

/// Names of the stored sequences, for indexed access.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Seq {
    Alpha,
    U,
    F,
    E,
    G,
    Z,
    K,
    H,
    V,
    W,
}

impl Seq {
    /// Inclusive 1-based index range over which the sequence is defined.
    pub fn range(self, n: usize) -> (usize, usize) {
        match self {
            Seq::Alpha => (1, n),
            Seq::U => (0, n),
            Seq::F => (2, n - 2),
            Seq::E => (3, n - 2),
            Seq::G => (1, n - 3),
            Seq::Z => (1, n - 4),
            Seq::K => (1, n - 2),
            Seq::H => (1, n - 1),
            Seq::V => (1, n - 1),
            Seq::W => (1, n - 2),
        }
    }
}

/// Result of running the recurrences. Sequences are stored 1-based
/// (slot 0 unused except for `u_0`), with zeros outside their ranges.
#[derive(Debug, Clone, PartialEq)]
pub struct Factorization<F> {
    pub(crate) n: usize,
    pub(crate) alpha: Vec<F>,
    pub(crate) u: Vec<F>,
    pub(crate) f: Vec<F>,
    pub(crate) e: Vec<F>,
    pub(crate) g: Vec<F>,
    pub(crate) z: Vec<F>,
    pub(crate) k: Vec<F>,
    pub(crate) h: Vec<F>,
    pub(crate) v: Vec<F>,
    pub(crate) w: Vec<F>,
    /// `D_i / alpha_{i-3}`, the third subdiagonal of L.
    pub(crate) m3: Vec<F>,
    /// `C_i`, the third superdiagonal of U.
    pub(crate) c: Vec<F>,
    substituted: BTreeSet<usize>,
    ops: u64,
}

/// Multiplication and division counter for the op-count instrumentation.
#[derive(Default)]
struct Tally(u64);

impl Tally {
    fn mul<F: Field>(&mut self, a: &F, b: &F) -> F {
        self.0 += 1;
        a.times(b)
    }

    fn div<F: Field>(&mut self, a: &F, b: &F) -> F {
        self.0 += 1;
        a.divide(b)
    }
}

/// Exact factorization; never fails.
pub fn factor(h: &CyclicHeptaMatrix) -> Factorization<RatFunc> {
    factor_with(h, &SymbolicRescue).expect("symbolic rescue admits every pivot")
}

/// Floating-point factorization with the given breakdown tolerance.
pub fn factor_float(h: &CyclicHeptaMatrix, tol: FloatTolerance) -> Result<Factorization<FloatScalar>, FactorError> {
    factor_with(h, &FloatThreshold(tol))
}

/// Runs the recurrences over any field under the given pivot rule.
pub fn factor_with<F: Field, P: PivotRule<F>>(h: &CyclicHeptaMatrix, rule: &P) -> Result<Factorization<F>, FactorError> {
    let n = h.order();
    let family = |band: Band| -> Vec<F> {
        std::iter::once(F::zero()).chain(h.family(band).iter().map(F::from_rational)).collect()
    };
    let d = family(Band::Diag);
    let a = family(Band::Super1);
    let big_a = family(Band::Super2);
    let big_c = family(Band::Super3);
    let b = family(Band::Sub1);
    let big_b = family(Band::Sub2);
    let big_d = family(Band::Sub3);
    // H[i, n-1], H[i, n], H[n-1, j], H[n, j]: the dense border of H
    let col_nm1: Vec<F> = (0..=n).map(|i| if i == 0 { F::zero() } else { F::from_rational(&h.entry(i, n - 1)) }).collect();
    let col_n: Vec<F> = (0..=n).map(|i| if i == 0 { F::zero() } else { F::from_rational(&h.entry(i, n)) }).collect();
    let row_nm1: Vec<F> = (0..=n).map(|j| if j == 0 { F::zero() } else { F::from_rational(&h.entry(n - 1, j)) }).collect();
    let row_n: Vec<F> = (0..=n).map(|j| if j == 0 { F::zero() } else { F::from_rational(&h.entry(n, j)) }).collect();

    let zeros = || vec![F::zero(); n + 1];
    let mut fz = Factorization {
        n,
        alpha: zeros(),
        u: zeros(),
        f: zeros(),
        e: zeros(),
        g: zeros(),
        z: zeros(),
        k: zeros(),
        h: zeros(),
        v: zeros(),
        w: zeros(),
        m3: zeros(),
        c: zeros(),
        substituted: BTreeSet::new(),
        ops: 0,
    };
    let mut tally = Tally::default();
    fz.u[0] = F::one();
    fz.c[1..=n - 5].clone_from_slice(&big_c[1..=n - 5]);

    let admit = |fz: &mut Factorization<F>, tally: &mut Tally, i: usize, pivot: F| -> Result<(), FactorError> {
        let (pivot, swapped) = rule.admit(i, pivot, &d[i])?;
        if swapped {
            fz.substituted.insert(i);
        }
        fz.u[i] = tally.mul(&pivot, &fz.u[i - 1]);
        fz.alpha[i] = pivot;
        Ok(())
    };

    // Band part: rows 1..n-2 of L and U, pivots alpha_1..alpha_{n-2}.
    for i in 1..=n - 2 {
        if i >= 4 {
            fz.m3[i] = tally.div(&big_d[i], &fz.alpha[i - 3]);
        }
        if i >= 3 {
            let mut num = big_b[i].clone();
            if i >= 4 {
                num = num.minus(&tally.mul(&fz.m3[i], &fz.g[i - 3]));
            }
            fz.e[i] = tally.div(&num, &fz.alpha[i - 2]);
        }
        if i >= 2 {
            let mut num = b[i].clone();
            if i >= 4 {
                num = num.minus(&tally.mul(&fz.m3[i], &fz.z[i - 3]));
            }
            if i >= 3 {
                num = num.minus(&tally.mul(&fz.e[i], &fz.g[i - 2]));
            }
            fz.f[i] = tally.div(&num, &fz.alpha[i - 1]);
        }
        let mut pivot = d[i].clone();
        if i >= 4 {
            pivot = pivot.minus(&tally.mul(&fz.m3[i], &fz.c[i - 3]));
        }
        if i >= 3 {
            pivot = pivot.minus(&tally.mul(&fz.e[i], &fz.z[i - 2]));
        }
        if i >= 2 {
            pivot = pivot.minus(&tally.mul(&fz.f[i], &fz.g[i - 1]));
        }
        admit(&mut fz, &mut tally, i, pivot)?;

        if i <= n - 3 {
            let mut gi = a[i].clone();
            if i >= 2 {
                gi = gi.minus(&tally.mul(&fz.f[i], &fz.z[i - 1]));
            }
            if i >= 3 {
                gi = gi.minus(&tally.mul(&fz.e[i], &fz.c[i - 2]));
            }
            fz.g[i] = gi;
        }
        if i <= n - 4 {
            let mut zi = big_a[i].clone();
            if i >= 2 {
                zi = zi.minus(&tally.mul(&fz.f[i], &fz.c[i - 1]));
            }
            fz.z[i] = zi;
        }
    }

    // Last two columns of U: w_i = H[i,n-1] - (L row i) . w, likewise v.
    for i in 1..=n - 2 {
        fz.w[i] = fz.eliminate_row(&mut tally, i, &col_nm1[i], &fz.w);
        fz.v[i] = fz.eliminate_row(&mut tally, i, &col_n[i], &fz.v);
    }

    // Row n-1 of L: k_j = (H[n-1,j] - sum_m k_m U[m,j]) / alpha_j over the U band.
    for j in 1..=n - 2 {
        let num = fz.eliminate_col(&mut tally, j, &row_nm1[j], &fz.k);
        fz.k[j] = tally.div(&num, &fz.alpha[j]);
    }
    // Row n of L, same recurrence against H[n, j].
    for j in 1..=n - 2 {
        let num = fz.eliminate_col(&mut tally, j, &row_n[j], &fz.h);
        fz.h[j] = tally.div(&num, &fz.alpha[j]);
    }

    // Closing: alpha_{n-1}, v_{n-1}, h_{n-1}, alpha_n.
    let kw = fz.dot(&mut tally, &fz.k, &fz.w, n - 2);
    admit(&mut fz, &mut tally, n - 1, d[n - 1].minus(&kw))?;
    let kv = fz.dot(&mut tally, &fz.k, &fz.v, n - 2);
    fz.v[n - 1] = col_n[n - 1].minus(&kv);
    let hw = fz.dot(&mut tally, &fz.h, &fz.w, n - 2);
    fz.h[n - 1] = tally.div(&row_n[n - 1].minus(&hw), &fz.alpha[n - 1]);
    let hv = fz.dot(&mut tally, &fz.h, &fz.v, n - 1);
    admit(&mut fz, &mut tally, n, d[n].minus(&hv))?;

    fz.ops = tally.0;
    Ok(fz)
}

impl<F: Field> Factorization<F> {
    /// `rhs - m3_i x_{i-3} - e_i x_{i-2} - f_i x_{i-1}` for rows `i <= n-2`.
    fn eliminate_row(&self, tally: &mut Tally, i: usize, rhs: &F, x: &[F]) -> F {
        let mut acc = rhs.clone();
        if i >= 4 {
            acc = acc.minus(&tally.mul(&self.m3[i], &x[i - 3]));
        }
        if i >= 3 {
            acc = acc.minus(&tally.mul(&self.e[i], &x[i - 2]));
        }
        if i >= 2 {
            acc = acc.minus(&tally.mul(&self.f[i], &x[i - 1]));
        }
        acc
    }

    /// `rhs - y_{j-1} g_{j-1} - y_{j-2} z_{j-2} - y_{j-3} C_{j-3}` for columns `j <= n-2`.
    fn eliminate_col(&self, tally: &mut Tally, j: usize, rhs: &F, y: &[F]) -> F {
        let mut acc = rhs.clone();
        if j >= 2 {
            acc = acc.minus(&tally.mul(&y[j - 1], &self.g[j - 1]));
        }
        if j >= 3 {
            acc = acc.minus(&tally.mul(&y[j - 2], &self.z[j - 2]));
        }
        if j >= 4 {
            acc = acc.minus(&tally.mul(&y[j - 3], &self.c[j - 3]));
        }
        acc
    }

    fn dot(&self, tally: &mut Tally, x: &[F], y: &[F], upto: usize) -> F {
        (1..=upto).fold(F::zero(), |acc, j| acc.plus(&tally.mul(&x[j], &y[j])))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    fn storage(&self, seq: Seq) -> &[F] {
        match seq {
            Seq::Alpha => &self.alpha,
            Seq::U => &self.u,
            Seq::F => &self.f,
            Seq::E => &self.e,
            Seq::G => &self.g,
            Seq::Z => &self.z,
            Seq::K => &self.k,
            Seq::H => &self.h,
            Seq::V => &self.v,
            Seq::W => &self.w,
        }
    }

    /// 1-based element of a sequence; `None` outside its defined range.
    pub fn get(&self, seq: Seq, i: usize) -> Option<&F> {
        let (lo, hi) = seq.range(self.n);
        (lo..=hi).contains(&i).then(|| &self.storage(seq)[i])
    }

    /// Defined elements of a sequence, in index order.
    pub fn sequence(&self, seq: Seq) -> &[F] {
        let (lo, hi) = seq.range(self.n);
        &self.storage(seq)[lo..=hi]
    }

    /// Pivot `alpha_i`, `1 <= i <= n`.
    pub fn alpha(&self, i: usize) -> &F {
        self.get(Seq::Alpha, i).expect("pivot index in 1..=n")
    }

    /// Leading minor `u_i`, `0 <= i <= n`.
    pub fn u(&self, i: usize) -> &F {
        self.get(Seq::U, i).expect("minor index in 0..=n")
    }

    /// Third subdiagonal multiplier `D_i / alpha_{i-3}`, `4 <= i <= n-2`.
    pub fn third_multiplier(&self, i: usize) -> Option<&F> {
        (4..=self.n - 2).contains(&i).then(|| &self.m3[i])
    }

    /// Pivot indices where a zero pivot was replaced by `t`.
    pub fn substituted(&self) -> &BTreeSet<usize> {
        &self.substituted
    }

    /// Field multiplications plus divisions performed by the run.
    pub fn op_count(&self) -> u64 {
        self.ops
    }

    /// Materializes the factors as dense matrices.
    pub fn reconstruct_lu(&self) -> LuPair<F> {
        let n = self.n;
        let mut l = DenseMatrix::<F>::identity(n);
        let mut u = DenseMatrix::<F>::zeros(n, n);
        // zero-based writes of 1-based formulas
        let set = |m: &mut DenseMatrix<F>, i: usize, j: usize, v: &F| m[(i - 1, j - 1)] = v.clone();
        for i in 2..=n - 2 {
            set(&mut l, i, i - 1, &self.f[i]);
        }
        for i in 3..=n - 2 {
            set(&mut l, i, i - 2, &self.e[i]);
        }
        for i in 4..=n - 2 {
            set(&mut l, i, i - 3, &self.m3[i]);
        }
        for j in 1..=n - 2 {
            set(&mut l, n - 1, j, &self.k[j]);
        }
        for j in 1..=n - 1 {
            set(&mut l, n, j, &self.h[j]);
        }
        for i in 1..=n {
            set(&mut u, i, i, &self.alpha[i]);
        }
        for i in 1..=n - 3 {
            set(&mut u, i, i + 1, &self.g[i]);
        }
        for i in 1..=n - 4 {
            set(&mut u, i, i + 2, &self.z[i]);
        }
        for i in 1..=n - 5 {
            set(&mut u, i, i + 3, &self.c[i]);
        }
        for j in 1..=n - 2 {
            set(&mut u, j, n - 1, &self.w[j]);
        }
        for j in 1..=n - 1 {
            set(&mut u, j, n, &self.v[j]);
        }
        LuPair { l, u, perturbation: self.substituted.clone() }
    }

    /// Overwrites one pivot without touching anything else. Only for exercising
    /// verification failure paths.
    #[doc(hidden)]
    pub fn corrupt_pivot_for_testing(&mut self, i: usize, value: F) {
        self.alpha[i] = value;
        for j in i..=self.n {
            self.u[j] = self.alpha[j].times(&self.u[j - 1]);
        }
    }
}

impl Factorization<RatFunc> {
    /// Every stored quantity evaluated at `t = t0`. `None` when one of them
    /// has a pole there or a pivot vanishes.
    pub fn specialize(&self, t0: &Rational) -> Option<Factorization<Rational>> {
        let at = |xs: &[RatFunc]| xs.iter().map(|x| x.eval(t0).ok()).collect::<Option<Vec<_>>>();
        let alpha = at(&self.alpha)?;
        if alpha[1..].iter().any(Rational::is_zero) {
            return None;
        }
        Some(Factorization {
            n: self.n,
            alpha,
            u: at(&self.u)?,
            f: at(&self.f)?,
            e: at(&self.e)?,
            g: at(&self.g)?,
            z: at(&self.z)?,
            k: at(&self.k)?,
            h: at(&self.h)?,
            v: at(&self.v)?,
            w: at(&self.w)?,
            m3: at(&self.m3)?,
            c: at(&self.c)?,
            substituted: self.substituted.clone(),
            ops: self.ops,
        })
    }

    /// `u_n` at `t = 0`.
    pub fn determinant(&self) -> Rational {
        self.u[self.n].eval_at_zero().expect("u_n is a polynomial in t")
    }

    /// `u_0..u_n` at `t = 0`.
    pub fn leading_minors(&self) -> Result<Vec<Rational>, FactorError> {
        self.u
            .iter()
            .enumerate()
            .map(|(index, ui)| ui.eval_at_zero().map_err(|_: ScalarError| FactorError::MinorPole { index }))
            .collect()
    }
}

impl Factorization<FloatScalar> {
    pub fn determinant(&self) -> f64 {
        self.u[self.n].value()
    }
}

/// Dense L and U. `L U = H + t * sum(E_ii)` over `perturbation`.
#[derive(Debug, Clone, PartialEq)]
pub struct LuPair<F> {
    pub l: DenseMatrix<F>,
    pub u: DenseMatrix<F>,
    pub perturbation: BTreeSet<usize>,
}

/// Exact determinant.
pub fn determinant(h: &CyclicHeptaMatrix) -> Rational {
    factor(h).determinant()
}

/// Float determinant; fails on a negligible pivot.
pub fn determinant_float(h: &CyclicHeptaMatrix, tol: FloatTolerance) -> Result<f64, FactorError> {
    factor_float(h, tol).map(|f| f.determinant())
}
