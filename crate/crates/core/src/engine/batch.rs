//! Analysis of many knots at once, with a summary and CSV report.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use super::{analyze, KnotInput, Method, Status, Verdict};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BatchEntry {
    pub name: String,
    pub source: Option<PathBuf>,
    pub expected: Option<Status>,
    pub verdict: Verdict,
}

impl BatchEntry {
    /// `None` when there is no label.
    pub fn agrees(&self) -> Option<bool> {
        self.expected.map(|e| e == self.verdict.status)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BatchSummary {
    /// Sorted by name, then source path.
    pub entries: Vec<BatchEntry>,
}

impl BatchSummary {
    pub fn status_counts(&self) -> BTreeMap<Status, usize> {
        let mut out: BTreeMap<Status, usize> = Status::ALL.into_iter().map(|s| (s, 0)).collect();
        for e in &self.entries {
            *out.entry(e.verdict.status).or_default() += 1;
        }
        out
    }

    pub fn method_counts(&self) -> BTreeMap<Method, usize> {
        let mut out: BTreeMap<Method, usize> = Method::ALL.into_iter().map(|m| (m, 0)).collect();
        for e in &self.entries {
            for m in &e.verdict.methods_fired {
                *out.entry(*m).or_default() += 1;
            }
        }
        out
    }

    /// Percentage of entries certified PRIME; zero for an empty batch.
    pub fn percent_prime(&self) -> f64 {
        if self.entries.is_empty() {
            return 0.0;
        }
        let prime = self.status_counts()[&Status::Prime];
        100.0 * prime as f64 / self.entries.len() as f64
    }

    /// `(agreeing, labeled)`.
    pub fn label_agreement(&self) -> (usize, usize) {
        let labeled: Vec<bool> = self.entries.iter().filter_map(BatchEntry::agrees).collect();
        (labeled.iter().filter(|&&ok| ok).count(), labeled.len())
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &BatchEntry> {
        self.entries.iter().filter(|e| e.agrees() == Some(false))
    }

    /// Columns `name,status,methods,delta,b_even,b_odd,tau`; methods are
    /// joined with `+`, missing values are empty.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "name", "status", "methods", "delta", "b_even", "b_odd", "tau",
        ])?;
        for e in &self.entries {
            let v = &e.verdict;
            let methods: Vec<&str> = v.methods_fired.iter().map(Method::as_str).collect();
            let counts = v.diagnostics.counts;
            let delta = counts.map(|c| c.delta).or(v.diagnostics.rank_total);
            let opt = |x: Option<String>| x.unwrap_or_default();
            w.write_record([
                e.name.clone(),
                v.status.to_string(),
                methods.join("+"),
                opt(delta.map(|x| x.to_string())),
                opt(counts.map(|c| c.b_even.to_string())),
                opt(counts.map(|c| c.b_odd.to_string())),
                opt(v.diagnostics.tau.map(|x| x.to_string())),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

impl fmt::Display for BatchSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            let label = match (e.expected, e.agrees()) {
                (Some(x), Some(false)) => format!("  [expected {x}]"),
                _ => String::new(),
            };
            writeln!(f, "{}: {}{label}", e.name, e.verdict.summary_line())?;
        }
        let statuses: Vec<String> = self
            .status_counts()
            .into_iter()
            .map(|(s, n)| format!("{s}={n}"))
            .collect();
        writeln!(f, "total {}: {}", self.entries.len(), statuses.join(" "))?;
        let methods: Vec<String> = self
            .method_counts()
            .into_iter()
            .map(|(m, n)| format!("{m}={n}"))
            .collect();
        writeln!(f, "methods: {}", methods.join(" "))?;
        writeln!(f, "certified prime: {:.1}%", self.percent_prime())?;
        let (ok, labeled) = self.label_agreement();
        write!(f, "labels matched: {ok}/{labeled}")
    }
}

fn summarize(mut entries: Vec<BatchEntry>) -> BatchSummary {
    entries.sort_by(|a, b| (&a.name, &a.source).cmp(&(&b.name, &b.source)));
    BatchSummary { entries }
}

/// Analyzes every input in parallel.
pub fn batch(inputs: &[KnotInput]) -> BatchSummary {
    summarize(
        inputs
            .par_iter()
            .map(|k| BatchEntry {
                name: k.name.clone(),
                source: None,
                expected: k.expected_verdict,
                verdict: analyze(k),
            })
            .collect(),
    )
}

/// Analyzes every `*.json` file in `dir`. Files that fail to load are
/// reported as INVALID under their file stem.
pub fn batch_dir(dir: impl AsRef<Path>) -> Result<BatchSummary> {
    let mut paths = Vec::new();
    for entry in std::fs::read_dir(dir)? {
        let path = entry?.path();
        if path.is_file() && path.extension().is_some_and(|e| e == "json") {
            paths.push(path);
        }
    }
    Ok(summarize(
        paths
            .into_par_iter()
            .map(|path| match KnotInput::load(&path) {
                Ok(k) => BatchEntry {
                    name: k.name.clone(),
                    expected: k.expected_verdict,
                    verdict: analyze(&k),
                    source: Some(path),
                },
                Err(e) => {
                    let stem = path
                        .file_stem()
                        .map(|s| s.to_string_lossy().into_owned())
                        .unwrap_or_default();
                    BatchEntry {
                        verdict: Verdict::invalid(&stem, e.to_string()),
                        name: stem,
                        expected: None,
                        source: Some(path),
                    }
                }
            })
            .collect(),
    ))
}
