//! `hepta-band-v1` JSON documents: the seven families by name, values as
//! exact rational strings.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::IoError;
use crate::hepta::{Band, Bands, CyclicHeptaMatrix, Kind, Structured};
use crate::scalars::Rational;

pub const FORMAT_TAG: &str = "hepta-band-v1";

/// On-disk form. For `kind = anti` the arrays describe the cyclic core `H`
/// of `M = H P`, not the anti-diagonals of `M` itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BandFile {
    pub format: String,
    pub kind: Kind,
    pub n: usize,
    pub d: Vec<String>,
    pub a: Vec<String>,
    #[serde(rename = "A")]
    pub upper_a: Vec<String>,
    #[serde(rename = "C")]
    pub upper_c: Vec<String>,
    pub b: Vec<String>,
    #[serde(rename = "B")]
    pub lower_b: Vec<String>,
    #[serde(rename = "D")]
    pub lower_d: Vec<String>,
}

impl BandFile {
    pub fn from_matrix(m: &Structured) -> Self {
        let core = m.core();
        let fam = |band: Band| core.family(band).iter().map(Rational::to_string).collect();
        BandFile {
            format: FORMAT_TAG.to_string(),
            kind: m.kind(),
            n: core.order(),
            d: fam(Band::Diag),
            a: fam(Band::Super1),
            upper_a: fam(Band::Super2),
            upper_c: fam(Band::Super3),
            b: fam(Band::Sub1),
            lower_b: fam(Band::Sub2),
            lower_d: fam(Band::Sub3),
        }
    }

    fn strings(&self, band: Band) -> &[String] {
        match band {
            Band::Diag => &self.d,
            Band::Super1 => &self.a,
            Band::Super2 => &self.upper_a,
            Band::Super3 => &self.upper_c,
            Band::Sub1 => &self.b,
            Band::Sub2 => &self.lower_b,
            Band::Sub3 => &self.lower_d,
        }
    }

    /// Parses every value and validates the structure.
    pub fn to_matrix(&self) -> Result<Structured, IoError> {
        if self.format != FORMAT_TAG {
            return Err(IoError::UnsupportedFormat(self.format.clone()));
        }
        let mut bands = Bands::default();
        for band in Band::ALL {
            let values = self
                .strings(band)
                .iter()
                .enumerate()
                .map(|(k, s)| {
                    s.parse::<Rational>().map_err(|e| IoError::Value {
                        field: band.letter().to_string(),
                        index: k + 1,
                        message: e.to_string(),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            *bands.family_mut(band) = values;
        }
        let core = CyclicHeptaMatrix::new(self.n, bands)?;
        Ok(Structured::wrap(core, self.kind))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("band file serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, IoError> {
        serde_json::from_str(text).map_err(|e| IoError::Parse { line: e.line(), column: e.column(), message: e.to_string() })
    }
}

pub fn load_band_file(path: impl AsRef<Path>) -> Result<Structured, IoError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| IoError::Io { path: path.display().to_string(), source: e })?;
    BandFile::from_json(&text)?.to_matrix()
}

pub fn save_band_file(path: impl AsRef<Path>, m: &Structured) -> Result<(), IoError> {
    let path = path.as_ref();
    fs::write(path, BandFile::from_matrix(m).to_json()).map_err(|e| IoError::Io { path: path.display().to_string(), source: e })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::cyclic_10;
    use crate::hepta::StructureError;

    #[test]
    fn round_trips_through_json() {
        let m = Structured::Cyclic(cyclic_10());
        let text = BandFile::from_matrix(&m).to_json();
        assert_eq!(BandFile::from_json(&text).unwrap().to_matrix().unwrap(), m);
    }

    #[test]
    fn field_names_are_the_band_letters() {
        let text = BandFile::from_matrix(&Structured::Cyclic(cyclic_10())).to_json();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        for k in ["format", "kind", "n", "d", "a", "A", "C", "b", "B", "D"] {
            assert!(keys.iter().any(|x| x == k), "missing {k}");
        }
        assert_eq!(v["format"], FORMAT_TAG);
        assert_eq!(v["kind"], "cyclic");
    }

    #[test]
    fn small_order_rejected() {
        let mut f = BandFile::from_matrix(&Structured::Cyclic(CyclicHeptaMatrix::identity(8).unwrap()));
        f.n = 7;
        for band in Band::ALL {
            let v = match band {
                Band::Diag => &mut f.d,
                Band::Super1 => &mut f.a,
                Band::Super2 => &mut f.upper_a,
                Band::Super3 => &mut f.upper_c,
                Band::Sub1 => &mut f.b,
                Band::Sub2 => &mut f.lower_b,
                Band::Sub3 => &mut f.lower_d,
            };
            v.pop();
        }
        assert!(matches!(f.to_matrix(), Err(IoError::Structure(StructureError::DimensionTooSmall { n: 7 }))));
    }

    #[test]
    fn short_family_rejected() {
        let mut f = BandFile::from_matrix(&Structured::Cyclic(CyclicHeptaMatrix::identity(9).unwrap()));
        f.a.pop();
        assert!(matches!(
            f.to_matrix(),
            Err(IoError::Structure(StructureError::LengthMismatch { band: Band::Super1, expected: 9, found: 8 }))
        ));
    }

    #[test]
    fn bad_value_names_field_and_index() {
        let mut f = BandFile::from_matrix(&Structured::Cyclic(CyclicHeptaMatrix::identity(8).unwrap()));
        f.upper_c[2] = "1/x".into();
        match f.to_matrix() {
            Err(IoError::Value { field, index, .. }) => assert_eq!((field.as_str(), index), ("C", 3)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn syntax_error_reports_position() {
        match BandFile::from_json("{\n  \"format\": \n}") {
            Err(IoError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }
}
