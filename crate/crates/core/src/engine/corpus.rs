//! The labeled fixture corpus compiled into the library.

use std::fmt;

use super::{batch, BatchSummary, KnotInput};
use crate::barred::check_bar_tensor_exhaustive;

macro_rules! fixtures {
    ($($file:literal),* $(,)?) => {
        [$(($file, include_str!(concat!("../../../../fixtures/", $file)))),*]
    };
}

const FIXTURES: [(&str, &str); 12] = fixtures![
    "unknot.json",
    "t23.json",
    "mt23.json",
    "fig8.json",
    "t25.json",
    "mt25.json",
    "t27.json",
    "granny.json",
    "square.json",
    "t23_fig8.json",
    "two_factor_logic.json",
    "malformed.json",
];

/// `(file name, knot)` for every bundled fixture.
pub fn bundled_corpus() -> Vec<(&'static str, KnotInput)> {
    FIXTURES
        .iter()
        .map(|&(file, text)| {
            let knot = KnotInput::from_json(text)
                .unwrap_or_else(|e| panic!("bundled fixture {file} does not parse: {e}"));
            (file, knot)
        })
        .collect()
}

pub struct SelftestReport {
    pub corpus: BatchSummary,
    /// Cases checked, or the first failing case.
    pub bar_tensor: Result<usize, String>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        let (ok, labeled) = self.corpus.label_agreement();
        ok == labeled && labeled == self.corpus.entries.len() && self.bar_tensor.is_ok()
    }
}

impl fmt::Display for SelftestReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.corpus)?;
        match &self.bar_tensor {
            Ok(n) => writeln!(f, "bar tensor check: {n} cases ok")?,
            Err(e) => writeln!(f, "bar tensor check FAILED: {e}")?,
        }
        write!(
            f,
            "selftest {}",
            if self.passed() { "passed" } else { "FAILED" }
        )
    }
}

/// Runs the bundled corpus against its labels and checks every tensor
/// product of two bars with endpoints in `-3..=3`.
pub fn selftest() -> SelftestReport {
    let inputs: Vec<KnotInput> = bundled_corpus().into_iter().map(|(_, k)| k).collect();
    SelftestReport {
        corpus: batch(&inputs),
        bar_tensor: check_bar_tensor_exhaustive(-3, 3),
    }
}
