//! Cyclic and anti-cyclic heptadiagonal matrices.
//!
//! A cyclic heptadiagonal matrix of order `n >= 8` is stored as seven
//! coefficient families of length `n`, indexed from 1 in all docs and errors:
//!
//! | family | letter | position            |
//! |--------|--------|---------------------|
//! | diag   | `d`    | `H[i,i]`            |
//! | super1 | `a`    | `H[i,i+1]`          |
//! | super2 | `A`    | `H[i,i+2]`          |
//! | super3 | `C`    | `H[i,i+3]`          |
//! | sub1   | `b`    | `H[i,i-1]`          |
//! | sub2   | `B`    | `H[i,i-2]`          |
//! | sub3   | `D`    | `H[i,i-3]`          |
//!
//! The wrap-around corners live in the slots that would otherwise fall
//! outside the matrix: `H[1,n] = b_1`, `H[1,n-1] = B_1`, `H[2,n] = B_2`,
//! `H[n-1,1] = A_{n-1}`, `H[n,1] = a_n`, `H[n,2] = A_n`. The slots `D_1..D_3`
//! and `C_{n-2}..C_n` have no position and must hold zero.

use std::fmt;

use crate::dense::DenseMatrix;
use crate::scalars::{Field, Rational};

pub const MIN_ORDER: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Band {
    Diag,
    Super1,
    Super2,
    Super3,
    Sub1,
    Sub2,
    Sub3,
}

impl Band {
    pub const ALL: [Band; 7] =
        [Band::Diag, Band::Super1, Band::Super2, Band::Super3, Band::Sub1, Band::Sub2, Band::Sub3];

    /// Single-letter name used in band files and messages.
    pub fn letter(self) -> &'static str {
        match self {
            Band::Diag => "d",
            Band::Super1 => "a",
            Band::Super2 => "A",
            Band::Super3 => "C",
            Band::Sub1 => "b",
            Band::Sub2 => "B",
            Band::Sub3 => "D",
        }
    }

    fn idx(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Band {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.letter())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructureError {
    #[error("matrix order {n} is below the minimum of {MIN_ORDER}")]
    DimensionTooSmall { n: usize },
    #[error("reserved slot {band}_{index} must be zero, found {value}")]
    ReservedSlotNonzero { band: Band, index: usize, value: Rational },
    #[error("family {band} has length {found}, expected {expected}")]
    LengthMismatch { band: Band, expected: usize, found: usize },
    #[error("vector has length {found}, expected {expected}")]
    VectorLength { expected: usize, found: usize },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("entry ({row}, {col}) = {value} lies outside the cyclic heptadiagonal pattern")]
    NotHeptaStructured { row: usize, col: usize, value: Rational },
}

/// The seven coefficient families, each of length `n`, element `k` holding index `k + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Bands {
    /// `d`
    pub diag: Vec<Rational>,
    /// `a`
    pub super1: Vec<Rational>,
    /// `A`
    pub super2: Vec<Rational>,
    /// `C`
    pub super3: Vec<Rational>,
    /// `b`
    pub sub1: Vec<Rational>,
    /// `B`
    pub sub2: Vec<Rational>,
    /// `D`
    pub sub3: Vec<Rational>,
}

impl Bands {
    pub fn zeros(n: usize) -> Self {
        let z = vec![Rational::zero(); n];
        Bands {
            diag: z.clone(),
            super1: z.clone(),
            super2: z.clone(),
            super3: z.clone(),
            sub1: z.clone(),
            sub2: z.clone(),
            sub3: z,
        }
    }

    pub fn from_ints(families: [&[i64]; 7]) -> Self {
        let conv = |s: &[i64]| s.iter().map(|&v| Rational::from(v)).collect::<Vec<_>>();
        Bands {
            diag: conv(families[0]),
            super1: conv(families[1]),
            super2: conv(families[2]),
            super3: conv(families[3]),
            sub1: conv(families[4]),
            sub2: conv(families[5]),
            sub3: conv(families[6]),
        }
    }

    pub fn family(&self, band: Band) -> &Vec<Rational> {
        match band {
            Band::Diag => &self.diag,
            Band::Super1 => &self.super1,
            Band::Super2 => &self.super2,
            Band::Super3 => &self.super3,
            Band::Sub1 => &self.sub1,
            Band::Sub2 => &self.sub2,
            Band::Sub3 => &self.sub3,
        }
    }

    pub fn family_mut(&mut self, band: Band) -> &mut Vec<Rational> {
        match band {
            Band::Diag => &mut self.diag,
            Band::Super1 => &mut self.super1,
            Band::Super2 => &mut self.super2,
            Band::Super3 => &mut self.super3,
            Band::Sub1 => &mut self.sub1,
            Band::Sub2 => &mut self.sub2,
            Band::Sub3 => &mut self.sub3,
        }
    }
}

/// Validated cyclic heptadiagonal matrix. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct CyclicHeptaMatrix {
    n: usize,
    bands: [Vec<Rational>; 7],
}

impl CyclicHeptaMatrix {
    pub fn new(n: usize, bands: Bands) -> Result<Self, StructureError> {
        if n < MIN_ORDER {
            return Err(StructureError::DimensionTooSmall { n });
        }
        for band in Band::ALL {
            let found = bands.family(band).len();
            if found != n {
                return Err(StructureError::LengthMismatch { band, expected: n, found });
            }
        }
        let Bands { diag, super1, super2, super3, sub1, sub2, sub3 } = bands;
        let m = CyclicHeptaMatrix { n, bands: [diag, super1, super2, super3, sub1, sub2, sub3] };
        for (band, index) in m.reserved_slots() {
            let value = m.get(band, index);
            if !value.is_zero() {
                return Err(StructureError::ReservedSlotNonzero { band, index, value: value.clone() });
            }
        }
        Ok(m)
    }

    /// Builds from bands with `n` taken from the diagonal family.
    pub fn from_bands(bands: Bands) -> Result<Self, StructureError> {
        Self::new(bands.diag.len(), bands)
    }

    pub fn identity(n: usize) -> Result<Self, StructureError> {
        let mut bands = Bands::zeros(n);
        bands.diag = vec![Rational::one(); n];
        Self::new(n, bands)
    }

    fn reserved_slots(&self) -> [(Band, usize); 6] {
        let n = self.n;
        [
            (Band::Sub3, 1),
            (Band::Sub3, 2),
            (Band::Sub3, 3),
            (Band::Super3, n - 2),
            (Band::Super3, n - 1),
            (Band::Super3, n),
        ]
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Stored coefficient, 1-based.
    pub fn get(&self, band: Band, index: usize) -> &Rational {
        assert!((1..=self.n).contains(&index), "band index {index} out of 1..={}", self.n);
        &self.bands[band.idx()][index - 1]
    }

    pub fn family(&self, band: Band) -> &[Rational] {
        &self.bands[band.idx()]
    }

    pub fn to_bands(&self) -> Bands {
        let f = |b: Band| self.bands[b.idx()].clone();
        Bands {
            diag: f(Band::Diag),
            super1: f(Band::Super1),
            super2: f(Band::Super2),
            super3: f(Band::Super3),
            sub1: f(Band::Sub1),
            sub2: f(Band::Sub2),
            sub3: f(Band::Sub3),
        }
    }

    /// Which stored slot feeds dense position `(i, j)`, both 1-based.
    pub fn slot(&self, i: usize, j: usize) -> Option<(Band, usize)> {
        slot_for(self.n, i, j)
    }

    /// Dense entry at 1-based `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> Rational {
        self.slot(i, j).map_or_else(Rational::zero, |(band, k)| self.get(band, k).clone())
    }

    /// Columns that may hold a nonzero in row `i` (1-based), with the slot feeding each.
    pub fn row_slots(&self, i: usize) -> impl Iterator<Item = (usize, Band, usize)> + '_ {
        let n = self.n;
        let lo = i.saturating_sub(3).max(1);
        let hi = (i + 3).min(n);
        let corners: Vec<usize> = match i {
            1 => vec![n - 1, n],
            2 => vec![n],
            _ if i == n - 1 => vec![1],
            _ if i == n => vec![1, 2],
            _ => Vec::new(),
        };
        (lo..=hi)
            .chain(corners)
            .filter_map(move |j| slot_for(n, i, j).map(|(b, k)| (j, b, k)))
    }

    pub fn to_dense(&self) -> DenseMatrix<Rational> {
        let mut out = DenseMatrix::zeros(self.n, self.n);
        for i in 1..=self.n {
            for (j, band, k) in self.row_slots(i) {
                out[(i - 1, j - 1)] = self.get(band, k).clone();
            }
        }
        out
    }

    /// Matrix-vector product touching only stored entries.
    pub fn apply<F: Field>(&self, x: &[F]) -> Result<Vec<F>, StructureError> {
        if x.len() != self.n {
            return Err(StructureError::VectorLength { expected: self.n, found: x.len() });
        }
        Ok((1..=self.n)
            .map(|i| {
                self.row_slots(i).fold(F::zero(), |acc, (j, band, k)| {
                    let v = self.get(band, k);
                    if v.is_zero() {
                        acc
                    } else {
                        acc.plus(&F::from_rational(v).times(&x[j - 1]))
                    }
                })
            })
            .collect())
    }

    /// Extracts bands from a dense matrix, requiring every other position to be zero.
    pub fn from_dense(m: &DenseMatrix<Rational>) -> Result<Self, StructureError> {
        if !m.is_square() {
            return Err(StructureError::NotSquare { rows: m.rows(), cols: m.cols() });
        }
        let n = m.rows();
        if n < MIN_ORDER {
            return Err(StructureError::DimensionTooSmall { n });
        }
        let mut bands = Bands::zeros(n);
        for i in 1..=n {
            for j in 1..=n {
                let value = &m[(i - 1, j - 1)];
                match slot_for(n, i, j) {
                    Some((band, k)) => bands.family_mut(band)[k - 1] = value.clone(),
                    None if !value.is_zero() => {
                        return Err(StructureError::NotHeptaStructured { row: i, col: j, value: value.clone() })
                    }
                    None => {}
                }
            }
        }
        Self::new(n, bands)
    }
}

fn slot_for(n: usize, i: usize, j: usize) -> Option<(Band, usize)> {
    if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
        return None;
    }
    let band = match j as isize - i as isize {
        0 => Some(Band::Diag),
        1 => Some(Band::Super1),
        2 => Some(Band::Super2),
        3 => Some(Band::Super3),
        -1 => Some(Band::Sub1),
        -2 => Some(Band::Sub2),
        -3 => Some(Band::Sub3),
        _ => None,
    };
    if let Some(band) = band {
        return Some((band, i));
    }
    match (i, j) {
        (1, j) if j == n => Some((Band::Sub1, 1)),
        (1, j) if j == n - 1 => Some((Band::Sub2, 1)),
        (2, j) if j == n => Some((Band::Sub2, 2)),
        (i, 1) if i == n - 1 => Some((Band::Super2, n - 1)),
        (i, 1) if i == n => Some((Band::Super1, n)),
        (i, 2) if i == n => Some((Band::Super2, n)),
        _ => None,
    }
}

impl fmt::Debug for CyclicHeptaMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = f.debug_struct("CyclicHeptaMatrix");
        s.field("n", &self.n);
        for band in Band::ALL {
            s.field(band.letter(), &self.bands[band.idx()]);
        }
        s.finish()
    }
}

/// Column-reversed mirror of a cyclic heptadiagonal matrix: `M = H P`,
/// so `M[i,j] = H[i, n+1-j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntiCyclicHeptaMatrix {
    core: CyclicHeptaMatrix,
}

impl AntiCyclicHeptaMatrix {
    pub fn from_core(core: CyclicHeptaMatrix) -> Self {
        AntiCyclicHeptaMatrix { core }
    }

    pub fn core(&self) -> &CyclicHeptaMatrix {
        &self.core
    }

    pub fn into_core(self) -> CyclicHeptaMatrix {
        self.core
    }

    pub fn order(&self) -> usize {
        self.core.n
    }

    pub fn entry(&self, i: usize, j: usize) -> Rational {
        self.core.entry(i, self.core.n + 1 - j)
    }

    pub fn to_dense(&self) -> DenseMatrix<Rational> {
        self.core.to_dense().reverse_cols()
    }

    pub fn apply<F: Field>(&self, x: &[F]) -> Result<Vec<F>, StructureError> {
        let reversed: Vec<F> = x.iter().rev().cloned().collect();
        self.core.apply(&reversed)
    }

    pub fn from_dense(m: &DenseMatrix<Rational>) -> Result<Self, StructureError> {
        CyclicHeptaMatrix::from_dense(&m.reverse_cols()).map(Self::from_core)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Cyclic,
    Anti,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Cyclic => "cyclic",
            Kind::Anti => "anti",
        })
    }
}

impl std::str::FromStr for Kind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cyclic" => Ok(Kind::Cyclic),
            "anti" => Ok(Kind::Anti),
            other => Err(format!("unknown matrix kind {other:?} (expected cyclic or anti)")),
        }
    }
}

/// Either flavour of structured matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structured {
    Cyclic(CyclicHeptaMatrix),
    Anti(AntiCyclicHeptaMatrix),
}

impl Structured {
    pub fn from_dense(m: &DenseMatrix<Rational>, kind: Kind) -> Result<Self, StructureError> {
        match kind {
            Kind::Cyclic => CyclicHeptaMatrix::from_dense(m).map(Structured::Cyclic),
            Kind::Anti => AntiCyclicHeptaMatrix::from_dense(m).map(Structured::Anti),
        }
    }

    pub fn wrap(core: CyclicHeptaMatrix, kind: Kind) -> Self {
        match kind {
            Kind::Cyclic => Structured::Cyclic(core),
            Kind::Anti => Structured::Anti(AntiCyclicHeptaMatrix::from_core(core)),
        }
    }

    pub fn kind(&self) -> Kind {
        match self {
            Structured::Cyclic(_) => Kind::Cyclic,
            Structured::Anti(_) => Kind::Anti,
        }
    }

    /// The cyclic matrix the algorithms actually run on.
    pub fn core(&self) -> &CyclicHeptaMatrix {
        match self {
            Structured::Cyclic(h) => h,
            Structured::Anti(m) => m.core(),
        }
    }

    pub fn order(&self) -> usize {
        self.core().order()
    }

    pub fn to_dense(&self) -> DenseMatrix<Rational> {
        match self {
            Structured::Cyclic(h) => h.to_dense(),
            Structured::Anti(m) => m.to_dense(),
        }
    }

    pub fn apply<F: Field>(&self, x: &[F]) -> Result<Vec<F>, StructureError> {
        match self {
            Structured::Cyclic(h) => h.apply(x),
            Structured::Anti(m) => m.apply(x),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_bands_give_identity() {
        let h = CyclicHeptaMatrix::identity(8).unwrap();
        assert!(h.to_dense().is_identity());
    }

    #[test]
    fn rejects_small_order() {
        assert_eq!(
            CyclicHeptaMatrix::identity(7).unwrap_err(),
            StructureError::DimensionTooSmall { n: 7 }
        );
    }

    #[test]
    fn reserved_slot_must_be_zero() {
        let mut bands = Bands::zeros(8);
        bands.diag = vec![Rational::one(); 8];
        bands.sub3[1] = Rational::from(5);
        match CyclicHeptaMatrix::new(8, bands).unwrap_err() {
            StructureError::ReservedSlotNonzero { band, index, .. } => {
                assert_eq!((band, index), (Band::Sub3, 2));
            }
            other => panic!("unexpected {other:?}"),
        }
        let mut bands = Bands::zeros(8);
        bands.super3[6] = Rational::from(1);
        assert!(matches!(
            CyclicHeptaMatrix::new(8, bands),
            Err(StructureError::ReservedSlotNonzero { band: Band::Super3, index: 7, .. })
        ));
    }

    #[test]
    fn length_mismatch_names_family() {
        let mut bands = Bands::zeros(9);
        bands.super1.pop();
        assert_eq!(
            CyclicHeptaMatrix::new(9, bands).unwrap_err(),
            StructureError::LengthMismatch { band: Band::Super1, expected: 9, found: 8 }
        );
    }

    #[test]
    fn corners_land_in_place() {
        let n = 8;
        let mut bands = Bands::zeros(n);
        bands.sub1[0] = 1.into(); // b_1
        bands.sub2[0] = 2.into(); // B_1
        bands.sub2[1] = 3.into(); // B_2
        bands.super2[n - 2] = 4.into(); // A_{n-1}
        bands.super1[n - 1] = 5.into(); // a_n
        bands.super2[n - 1] = 6.into(); // A_n
        let h = CyclicHeptaMatrix::new(n, bands).unwrap();
        let m = h.to_dense();
        assert_eq!(m[(0, n - 1)], Rational::from(1));
        assert_eq!(m[(0, n - 2)], Rational::from(2));
        assert_eq!(m[(1, n - 1)], Rational::from(3));
        assert_eq!(m[(n - 2, 0)], Rational::from(4));
        assert_eq!(m[(n - 1, 0)], Rational::from(5));
        assert_eq!(m[(n - 1, 1)], Rational::from(6));
    }

    #[test]
    fn off_pattern_entry_is_reported() {
        let mut m = CyclicHeptaMatrix::identity(10).unwrap().to_dense();
        m[(0, 4)] = Rational::from(1);
        assert!(matches!(
            CyclicHeptaMatrix::from_dense(&m),
            Err(StructureError::NotHeptaStructured { row: 1, col: 5, .. })
        ));
    }

    #[test]
    fn every_position_has_at_most_one_slot_owner() {
        for n in 8..14 {
            let mut seen = std::collections::HashSet::new();
            for i in 1..=n {
                for j in 1..=n {
                    if let Some(slot) = slot_for(n, i, j) {
                        assert!(seen.insert(slot), "slot {slot:?} reused at n={n}");
                    }
                }
            }
            // 7n slots minus the six reserved ones
            assert_eq!(seen.len(), 7 * n - 6);
        }
    }
}
