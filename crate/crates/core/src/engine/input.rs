//! Knot files: ranks, an optional complex, certificates and a corpus label.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::Status;
use crate::barred::{tensor, FilteredComplex, Generator};
use crate::error::{Error, Result};
use crate::factor::KnownKnot;
use crate::laurent::BivariateLaurent;

/// HFK ranks keyed by `(alexander, maslov)`.
pub type Ranks = BTreeMap<(i64, i64), u64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotInput {
    pub name: String,
    pub ranks: Ranks,
    pub complex: Option<FilteredComplex>,
    /// Listed knots asserted not to be connected summands.
    pub certificates: BTreeSet<KnownKnot>,
    pub expected_verdict: Option<Status>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct KnotFile {
    name: String,
    ranks: Vec<RankEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    complex: Option<ComplexFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    certificates: Option<Certificates>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    expected_verdict: Option<Status>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RankEntry {
    alexander: i64,
    maslov: i64,
    dim: u64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexFile {
    generators: Vec<Generator>,
    #[serde(default)]
    differentials: Vec<Arrow>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Arrow {
    from: String,
    to: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Certificates {
    excluded_factors: Vec<KnownKnot>,
}

impl KnotInput {
    pub fn new(name: impl Into<String>, ranks: Ranks) -> Self {
        Self {
            name: name.into(),
            ranks,
            complex: None,
            certificates: BTreeSet::new(),
            expected_verdict: None,
        }
    }

    pub fn with_complex(mut self, complex: FilteredComplex) -> Self {
        self.complex = Some(complex);
        self
    }

    pub fn with_certificates(mut self, certs: impl IntoIterator<Item = KnownKnot>) -> Self {
        self.certificates.extend(certs);
        self
    }

    /// Input whose ranks are the coefficients of `omega`.
    pub fn from_omega(name: impl Into<String>, omega: &BivariateLaurent) -> Result<Self> {
        Ok(Self::new(name, ranks_from_omega(omega)?))
    }

    /// Input whose ranks are read off the complex's associated graded homology.
    pub fn from_complex(name: impl Into<String>, complex: FilteredComplex) -> Self {
        let ranks = complex
            .graded_ranks()
            .into_iter()
            .map(|(k, r)| (k, r as u64))
            .collect();
        Self::new(name, ranks).with_complex(complex)
    }

    pub fn omega(&self) -> BivariateLaurent {
        build_omega(&self.ranks)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: KnotFile = serde_json::from_str(text)?;
        let mut ranks = Ranks::new();
        for r in file.ranks {
            if r.dim == 0 {
                return Err(Error::InvalidInput(format!(
                    "rank at (alexander {}, maslov {}) is zero",
                    r.alexander, r.maslov
                )));
            }
            if ranks.insert((r.alexander, r.maslov), r.dim).is_some() {
                return Err(Error::InvalidInput(format!(
                    "rank at (alexander {}, maslov {}) given twice",
                    r.alexander, r.maslov
                )));
            }
        }
        let complex = file
            .complex
            .map(|c| {
                FilteredComplex::new(
                    c.generators,
                    c.differentials.into_iter().map(|a| (a.from, a.to)),
                )
            })
            .transpose()?;
        Ok(Self {
            name: file.name,
            ranks,
            complex,
            certificates: file
                .certificates
                .map(|c| c.excluded_factors.into_iter().collect())
                .unwrap_or_default(),
            expected_verdict: file.expected_verdict,
        })
    }

    pub fn to_json(&self) -> String {
        let file = KnotFile {
            name: self.name.clone(),
            ranks: self
                .ranks
                .iter()
                .rev()
                .map(|(&(alexander, maslov), &dim)| RankEntry {
                    alexander,
                    maslov,
                    dim,
                })
                .collect(),
            complex: self.complex.as_ref().map(|c| ComplexFile {
                generators: c.generators().to_vec(),
                differentials: c
                    .differentials()
                    .into_iter()
                    .map(|(from, to)| Arrow { from, to })
                    .collect(),
            }),
            certificates: (!self.certificates.is_empty()).then(|| Certificates {
                excluded_factors: self.certificates.iter().copied().collect(),
            }),
            expected_verdict: self.expected_verdict,
        };
        let mut text = serde_json::to_string_pretty(&file).expect("knot file serializes");
        text.push('\n');
        text
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }
}

/// `sum dim * s^maslov * t^alexander`.
pub fn build_omega(ranks: &Ranks) -> BivariateLaurent {
    BivariateLaurent::from_terms(ranks.iter().map(|(&key, &dim)| (key, dim)))
}

/// Inverse of [`build_omega`]; fails on nonpositive coefficients.
pub fn ranks_from_omega(omega: &BivariateLaurent) -> Result<Ranks> {
    omega
        .terms()
        .map(|(key, c)| match c.to_u64() {
            Some(dim) if c.is_positive() => Ok((key, dim)),
            _ => Err(Error::InvalidInput(format!(
                "coefficient {c} at (alexander {}, maslov {}) is not a rank",
                key.0, key.1
            ))),
        })
        .collect()
}

/// The connected sum: ranks multiply as polynomials and complexes tensor
/// when both are present. Certificates and labels are dropped.
pub fn connected_sum(a: &KnotInput, b: &KnotInput) -> Result<KnotInput> {
    let omega = &a.omega() * &b.omega();
    let mut out = KnotInput::from_omega(format!("{}#{}", a.name, b.name), &omega)?;
    if let (Some(c1), Some(c2)) = (&a.complex, &b.complex) {
        out.complex = Some(tensor(c1, c2));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ranks(entries: &[((i64, i64), u64)]) -> Ranks {
        entries.iter().copied().collect()
    }

    #[test]
    fn build_omega_examples() {
        let t23 = ranks(&[((1, 0), 1), ((0, -1), 1), ((-1, -2), 1)]);
        assert_eq!(build_omega(&t23), KnownKnot::T23.omega());
        assert_eq!(build_omega(&ranks(&[((0, 0), 1)])), BivariateLaurent::one());
        let fig8 = ranks(&[((1, 1), 1), ((0, 0), 3), ((-1, -1), 1)]);
        assert_eq!(build_omega(&fig8), KnownKnot::FigureEight.omega());
        assert_eq!(ranks_from_omega(&build_omega(&fig8)).unwrap(), fig8);
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{
            "name": "T(2,3)",
            "ranks": [
                {"alexander": 1, "maslov": 0, "dim": 1},
                {"alexander": 0, "maslov": -1, "dim": 1},
                {"alexander": -1, "maslov": -2, "dim": 1}
            ],
            "complex": {
                "generators": [
                    {"id": "a", "maslov": 0, "alexander": 1},
                    {"id": "b", "maslov": -1, "alexander": 0},
                    {"id": "c", "maslov": -2, "alexander": -1}
                ],
                "differentials": [{"from": "b", "to": "c"}]
            },
            "certificates": {"excluded_factors": ["4_1", "-T(2,3)"]},
            "expected_verdict": "PRIME"
        }"#;
        let k = KnotInput::from_json(text).unwrap();
        assert_eq!(k.ranks.len(), 3);
        assert_eq!(k.complex.as_ref().unwrap().len(), 3);
        assert_eq!(
            k.certificates,
            [KnownKnot::MirrorT23, KnownKnot::FigureEight]
                .into_iter()
                .collect()
        );
        assert_eq!(k.expected_verdict, Some(Status::Prime));
        assert_eq!(KnotInput::from_json(&k.to_json()).unwrap(), k);
    }

    #[test]
    fn json_errors() {
        let zero = r#"{"name": "z", "ranks": [{"alexander": 0, "maslov": 0, "dim": 0}]}"#;
        assert!(KnotInput::from_json(zero).is_err());
        let twice = r#"{"name": "z", "ranks": [{"alexander": 0, "maslov": 0, "dim": 1},
            {"alexander": 0, "maslov": 0, "dim": 1}]}"#;
        assert!(KnotInput::from_json(twice).is_err());
        let unknown =
            r#"{"name": "z", "ranks": [], "certificates": {"excluded_factors": ["3_1"]}}"#;
        assert!(KnotInput::from_json(unknown).is_err());
        assert!(KnotInput::from_json("{").is_err());
    }

    #[test]
    fn connected_sum_multiplies_ranks() {
        let t23 = KnotInput::from_omega("t23", &KnownKnot::T23.omega()).unwrap();
        let sum = connected_sum(&t23, &t23).unwrap();
        assert_eq!(sum.name, "t23#t23");
        assert_eq!(sum.omega(), KnownKnot::T23.omega().pow(2));
        assert!(sum.complex.is_none());
    }
}
