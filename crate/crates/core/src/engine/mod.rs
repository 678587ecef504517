//! Primality verdicts from knot Floer data.
//!
//! Three routes can prove a knot prime: symmetric irreducibility of Ω (T2),
//! the two-factor rule with exclusion certificates for the listed knots (T3),
//! and the bar-count inequality on the filtered complex (BAR).

mod batch;
mod corpus;
mod input;

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::barred::{self, Bar, BarCounts, CorollaryOutcome};
use crate::error::{Error, Result};
use crate::factor::{self, known_knot_matches, KnownKnot, SymmetricFactorization};
use crate::laurent::BivariateLaurent;

pub use batch::{batch, batch_dir, BatchEntry, BatchSummary};
pub use corpus::{bundled_corpus, selftest, SelftestReport};
pub use input::{build_omega, connected_sum, ranks_from_omega, KnotInput, Ranks};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Unknot,
    Prime,
    ConditionallyPrime,
    Inconclusive,
    Invalid,
}

impl Status {
    pub const ALL: [Status; 5] = [
        Status::Unknot,
        Status::Prime,
        Status::ConditionallyPrime,
        Status::Inconclusive,
        Status::Invalid,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Unknot => "UNKNOT",
            Status::Prime => "PRIME",
            Status::ConditionallyPrime => "CONDITIONALLY_PRIME",
            Status::Inconclusive => "INCONCLUSIVE",
            Status::Invalid => "INVALID",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Method {
    T2,
    T3,
    #[serde(rename = "BAR")]
    Bar,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::T2, Method::T3, Method::Bar];

    pub fn as_str(&self) -> &'static str {
        match self {
            Method::T2 => "T2",
            Method::T3 => "T3",
            Method::Bar => "BAR",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub omega: Option<String>,
    /// Sum of all ranks.
    pub rank_total: Option<u64>,
    pub factorization: Option<String>,
    pub symmetric_factorizations: Vec<String>,
    pub counts: Option<BarCounts>,
    pub tau: Option<i64>,
    pub bars: Vec<Bar>,
    pub bar_test: Option<CorollaryOutcome>,
    pub bar_witness: Option<(u64, u64)>,
    /// All bars even. Informational only.
    pub l_space_pattern: Option<bool>,
    pub certificates: Vec<KnownKnot>,
    pub warnings: Vec<String>,
    pub errors: Vec<String>,
    pub trace: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub name: String,
    pub status: Status,
    pub methods_fired: BTreeSet<Method>,
    pub required_exclusions: BTreeSet<KnownKnot>,
    pub diagnostics: Diagnostics,
}

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Versioned<T> {
    schema: u32,
    #[serde(flatten)]
    inner: T,
}

impl Verdict {
    pub fn invalid(name: impl Into<String>, message: impl Into<String>) -> Self {
        let message = message.into();
        Self {
            name: name.into(),
            status: Status::Invalid,
            methods_fired: BTreeSet::new(),
            required_exclusions: BTreeSet::new(),
            diagnostics: Diagnostics {
                trace: vec![format!("invalid: {message}")],
                errors: vec![message],
                ..Diagnostics::default()
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&Versioned {
            schema: SCHEMA_VERSION,
            inner: self,
        })
        .expect("verdict serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let v: Versioned<Verdict> = serde_json::from_str(text)?;
        if v.schema != SCHEMA_VERSION {
            return Err(Error::InvalidInput(format!(
                "unsupported verdict schema {}",
                v.schema
            )));
        }
        Ok(v.inner)
    }

    /// One line, e.g. `PRIME via T2, BAR; δ=3 b_e=1 b_o=0 τ=1`.
    pub fn summary_line(&self) -> String {
        let mut out = self.status.to_string();
        if self.status == Status::Invalid {
            out.push_str(": ");
            out.push_str(&self.diagnostics.errors.join("; "));
            return out;
        }
        if !self.methods_fired.is_empty() {
            let methods: Vec<&str> = self.methods_fired.iter().map(Method::as_str).collect();
            out.push_str(" via ");
            out.push_str(&methods.join(", "));
        }
        if !self.required_exclusions.is_empty() {
            let names: Vec<&str> = self
                .required_exclusions
                .iter()
                .map(KnownKnot::name)
                .collect();
            out.push_str("; requires excluding ");
            out.push_str(&names.join(", "));
        }
        if let (Some(c), Some(tau)) = (self.diagnostics.counts, self.diagnostics.tau) {
            out.push_str(&format!("; {c} τ={tau}"));
        }
        out
    }
}

/// Result of the two-factor rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoFactorOutcome {
    Prime,
    ConditionallyPrime(BTreeSet<KnownKnot>),
    Inconclusive(String),
}

/// The two-factor rule for a symmetric, non-unit Ω that is not symmetrically
/// irreducible.
pub fn two_factor_analysis(
    omega: &BivariateLaurent,
    certificates: &BTreeSet<KnownKnot>,
) -> Result<TwoFactorOutcome> {
    let factorizations = factor::maximal_symmetric_factorizations(omega)?;
    Ok(two_factor_from(&factorizations, certificates))
}

/// Applies only when every maximal factorization has exactly two parts. A
/// factorization is blocked when some part's listed-knot class is entirely
/// certified; otherwise the class with the fewest uncertified members (first
/// part on ties) is what must still be excluded.
fn two_factor_from(
    factorizations: &[SymmetricFactorization],
    certificates: &BTreeSet<KnownKnot>,
) -> TwoFactorOutcome {
    if factorizations.is_empty() {
        return TwoFactorOutcome::Inconclusive("no nontrivial symmetric factorization".into());
    }
    if let Some(f) = factorizations.iter().find(|f| f.parts.len() != 2) {
        return TwoFactorOutcome::Inconclusive(format!(
            "a maximal symmetric factorization has {} parts",
            f.parts.len()
        ));
    }
    let mut required = BTreeSet::new();
    for f in factorizations {
        let matches = known_knot_matches(f);
        if matches.is_empty() {
            return TwoFactorOutcome::Inconclusive(format!("no part of {f} is a listed knot"));
        }
        let outstanding: Vec<BTreeSet<KnownKnot>> = matches
            .iter()
            .map(|(_, class)| {
                class
                    .iter()
                    .filter(|k| !certificates.contains(k))
                    .copied()
                    .collect()
            })
            .collect();
        if outstanding.iter().any(BTreeSet::is_empty) {
            continue;
        }
        let smallest = outstanding
            .into_iter()
            .min_by_key(BTreeSet::len)
            .expect("matches are nonempty");
        required.extend(smallest);
    }
    if required.is_empty() {
        TwoFactorOutcome::Prime
    } else {
        TwoFactorOutcome::ConditionallyPrime(required)
    }
}

/// Full analysis; errors are reported as an INVALID verdict.
pub fn analyze(k: &KnotInput) -> Verdict {
    try_analyze(k).unwrap_or_else(|e| Verdict::invalid(&k.name, e.to_string()))
}

/// Like [`analyze`], but internal failures are returned as errors instead
/// of being folded into the verdict.
pub fn try_analyze(k: &KnotInput) -> Result<Verdict> {
    match analyze_inner(k) {
        Ok(v) => Ok(v),
        Err(e @ Error::Internal(_)) => Err(e),
        Err(e) => Ok(Verdict::invalid(&k.name, e.to_string())),
    }
}

fn analyze_inner(k: &KnotInput) -> Result<Verdict> {
    let mut d = Diagnostics {
        certificates: k.certificates.iter().copied().collect(),
        ..Diagnostics::default()
    };
    if k.ranks.is_empty() {
        return Err(Error::InvalidInput("no ranks given".into()));
    }
    let omega = k.omega();
    d.omega = Some(omega.to_string());
    d.rank_total = Some(k.ranks.values().sum());
    d.trace.push(format!("Ω = {omega}"));

    if let Some(c) = &k.complex {
        c.validate().map_err(Error::InvalidComplex)?;
        if c.omega() != omega {
            return Err(Error::InvalidInput(format!(
                "ranks of the complex give {}, but the listed ranks give {omega}",
                c.omega()
            )));
        }
        d.trace.push(format!(
            "complex with {} generators matches the ranks",
            c.len()
        ));
    }
    if !omega.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let alexander_at_one = omega.specialize_alexander().value_at_one();
    if !alexander_at_one.abs().is_one() {
        d.warnings
            .push(format!("Ω(-1,1) = {alexander_at_one}, expected ±1"));
    }
    let total = omega.coefficient_sum();
    if total.is_even() {
        d.warnings.push(format!("Ω(1,1) = {total} is even"));
    }

    let mut methods = BTreeSet::new();
    let mut required = BTreeSet::new();
    let mut status = None;

    if omega.is_one() {
        d.trace.push("Ω = 1: unknot".into());
        status = Some(Status::Unknot);
    } else if omega.as_unit().is_some() {
        return Err(Error::InvalidInput(format!(
            "Ω = {omega} is a unit other than 1"
        )));
    } else {
        let irreducible = factor::factor(&omega)?;
        d.factorization = Some(irreducible.to_string());
        d.trace.push(format!("irreducible factors: {irreducible}"));
        let factorizations = factor::symmetric_factorizations_of(&irreducible)?;
        d.symmetric_factorizations = factorizations.iter().map(|f| f.to_string()).collect();
        if factorizations.is_empty() {
            d.trace.push("T2: symmetrically irreducible, prime".into());
            methods.insert(Method::T2);
        } else {
            for f in &factorizations {
                d.trace.push(format!("symmetric factorization: {f}"));
            }
            match two_factor_from(&factorizations, &k.certificates) {
                TwoFactorOutcome::Prime => {
                    d.trace
                        .push("T3: every two-part factorization is excluded, prime".into());
                    methods.insert(Method::T3);
                }
                TwoFactorOutcome::ConditionallyPrime(needed) => {
                    let names: Vec<&str> = needed.iter().map(KnownKnot::name).collect();
                    d.trace
                        .push(format!("T3: prime after excluding {}", names.join(", ")));
                    required = needed;
                }
                TwoFactorOutcome::Inconclusive(reason) => {
                    d.trace.push(format!("T3: does not apply ({reason})"));
                }
            }
        }
    }

    if let Some(c) = &k.complex {
        let bars = barred::reduce(c)?;
        let counts = barred::counts(&bars);
        if Some(counts.delta) != d.rank_total {
            return Err(Error::Internal(format!(
                "δ = {} from the complex differs from the rank total {:?}",
                counts.delta, d.rank_total
            )));
        }
        d.tau = Some(bars.tau);
        d.l_space_pattern = Some(counts.b_odd == 0);
        d.trace.push(format!(
            "bar complex: τ={}, {} bars, {counts}",
            bars.tau,
            bars.bars.len()
        ));
        d.bars = bars.bars;
        d.counts = Some(counts);
        let outcome = barred::corollary_test(counts);
        d.bar_test = Some(outcome);
        d.bar_witness = barred::corollary_witness(counts);
        match (outcome, d.bar_witness) {
            (CorollaryOutcome::Prime, _) => {
                d.trace.push(format!(
                    "BAR: no factorization of δ={} fits, prime",
                    counts.delta
                ));
                if status != Some(Status::Unknot) {
                    methods.insert(Method::Bar);
                }
            }
            (CorollaryOutcome::Inconclusive, Some((d1, d2))) => d.trace.push(format!(
                "BAR: δ = {d1}·{d2} with ({}·{}) ≤ 4·{}, inconclusive",
                d1 - 1,
                d2 - 1,
                counts.b_even.min(counts.b_odd)
            )),
            (CorollaryOutcome::Inconclusive, None) => {
                d.trace.push("BAR: inconclusive".into());
            }
        }
    }

    let status = status.unwrap_or(if !methods.is_empty() {
        required.clear();
        Status::Prime
    } else if !required.is_empty() {
        Status::ConditionallyPrime
    } else {
        Status::Inconclusive
    });
    Ok(Verdict {
        name: k.name.clone(),
        status,
        methods_fired: methods,
        required_exclusions: required,
        diagnostics: d,
    })
}
