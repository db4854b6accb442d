//! Deterministic random instances, optionally with engineered zero pivots.
//!
//! To plant a zero pivot at index `i` the generator factors the current
//! matrix, sets `d_i := d_i - alpha_i`, and first clears the upper band of
//! row `i` in the upper factor (`g_i`, `z_i`, `C_i`) by adjusting `a_i`, `A_i`
//! and `C_i`. With that row cleared the symbol `t` introduced at `i` only
//! reaches the border columns and the multipliers `L[i+1..=i+3, i]`, so later
//! band pivots stay rational. When a later target `j` is within three rows of
//! `i`, `H[j, i]` is also chosen so that `L[j, i] = 0`.
//!
use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::factor::{factor, Factorization, Seq};
use crate::hepta::{Band, Bands, CyclicHeptaMatrix, Kind, Structured, MIN_ORDER};
use crate::scalars::{RatFunc, Rational};

pub const MAX_ZERO_PIVOTS: usize = 3;
const MAX_ATTEMPTS: usize = 200;
const ENTRY_RANGE: i64 = 5;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenerateError {
    #[error("order {n} is below the minimum of {MIN_ORDER}")]
    DimensionTooSmall { n: usize },
    #[error("at most {MAX_ZERO_PIVOTS} zero pivots can be requested, got {requested}")]
    TooManyZeroPivots { requested: usize },
    #[error("could not plant {requested} zero pivots in {attempts} attempts (best achieved: {achieved})")]
    GenerationFailed { requested: usize, achieved: usize, attempts: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub n: usize,
    pub seed: u64,
    pub zero_pivots: usize,
    pub kind: Kind,
}

/// Uniform small integers in every used slot; reserved slots stay zero.
pub fn random_bands<R: Rng>(n: usize, rng: &mut R) -> Bands {
    let mut bands = Bands::zeros(n);
    for band in Band::ALL {
        for (k, slot) in bands.family_mut(band).iter_mut().enumerate() {
            let index = k + 1;
            let reserved = match band {
                Band::Sub3 => index <= 3,
                Band::Super3 => index >= n - 2,
                _ => false,
            };
            if !reserved {
                *slot = Rational::from(rng.gen_range(-ENTRY_RANGE..=ENTRY_RANGE));
            }
        }
    }
    bands
}

fn constant(fz: &Factorization<RatFunc>, seq: Seq, i: usize) -> Option<Rational> {
    match fz.get(seq, i) {
        Some(v) => v.as_constant(),
        None => Some(Rational::zero()),
    }
}

/// Plants zero pivots at `targets` (ascending, all `<= n-2`). `None` when a
/// required quantity already depends on `t`.
fn plant(bands: &mut Bands, targets: &[usize]) -> Option<()> {
    let n = bands.diag.len();
    for (pos, &i) in targets.iter().enumerate() {
        let h = CyclicHeptaMatrix::from_bands(bands.clone()).ok()?;
        let fz = factor(&h);
        let at = |seq: Seq, j: usize| if j >= 1 { constant(&fz, seq, j) } else { Some(Rational::zero()) };
        let m3 = |j: usize| match fz.third_multiplier(j) {
            Some(v) => v.as_constant(),
            None => Some(Rational::zero()),
        };
        let fi = at(Seq::F, i)?;
        let ei = at(Seq::E, i)?;
        let c = |j: usize| if (1..=n - 5).contains(&j) { bands.super3[j - 1].clone() } else { Rational::zero() };
        let ci2 = if i >= 3 { c(i - 2) } else { Rational::zero() };
        let ci1 = if i >= 2 { c(i - 1) } else { Rational::zero() };
        let z_prev = at(Seq::Z, i - 1)?;
        let alpha = fz.alpha(i).as_constant()?;

        for &j in &targets[pos + 1..] {
            match j - i {
                // f_j = (b_j - m3_j z_{j-3} - e_j g_{j-2}) / alpha_i
                1 => bands.sub1[j - 1] = &(&m3(j)? * &at(Seq::Z, j.saturating_sub(3))?) + &(&at(Seq::E, j)? * &at(Seq::G, j.saturating_sub(2))?),
                // e_j = (B_j - m3_j g_{j-3}) / alpha_i
                2 => bands.sub2[j - 1] = &m3(j)? * &at(Seq::G, j.saturating_sub(3))?,
                // m3_j = D_j / alpha_i
                3 => bands.sub3[j - 1] = Rational::zero(),
                _ => break,
            }
        }
        if i <= n - 3 {
            bands.super1[i - 1] = &(&fi * &z_prev) + &(&ei * &ci2);
        }
        if i <= n - 4 {
            bands.super2[i - 1] = &fi * &ci1;
        }
        if i <= n - 5 {
            bands.super3[i - 1] = Rational::zero();
        }
        bands.diag[i - 1] = &bands.diag[i - 1] - &alpha;
    }
    Some(())
}

/// Draws a matrix whose exact factorization substitutes exactly
/// `zero_pivots` pivots and whose determinant is nonzero.
pub fn generate_matrix(spec: GenSpec) -> Result<Structured, GenerateError> {
    let GenSpec { n, seed, zero_pivots, kind } = spec;
    if n < MIN_ORDER {
        return Err(GenerateError::DimensionTooSmall { n });
    }
    if zero_pivots > MAX_ZERO_PIVOTS {
        return Err(GenerateError::TooManyZeroPivots { requested: zero_pivots });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0;
    for _ in 0..MAX_ATTEMPTS {
        let mut bands = random_bands(n, &mut rng);
        let mut targets: Vec<usize> = rand::seq::index::sample(&mut rng, n - 2, zero_pivots)
            .into_iter()
            .map(|k| k + 1)
            .collect();
        targets.sort_unstable();
        if plant(&mut bands, &targets).is_none() {
            continue;
        }
        let Ok(h) = CyclicHeptaMatrix::from_bands(bands) else { continue };
        let fz = factor(&h);
        let expected: BTreeSet<usize> = targets.iter().copied().collect();
        if fz.substituted() == &expected && !fz.determinant().is_zero() {
            return Ok(Structured::wrap(h, kind));
        }
        best = best.max(fz.substituted().intersection(&expected).count());
    }
    Err(GenerateError::GenerationFailed { requested: zero_pivots, achieved: best, attempts: MAX_ATTEMPTS })
}
