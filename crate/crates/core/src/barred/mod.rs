//! Filtered chain complexes over the two-element field and their
//! bar-complex representatives.
//!
//! A filtered complex here has one generator per basis element, each with a
//! Maslov grading and an Alexander filtration level. Its bar-complex is one
//! free generator (at filtration `tau`) plus two-dimensional acyclic summands
//! `T -> B` with `B` strictly lower in filtration; a bar is even or odd with
//! the grading of `B`.

mod bits;
mod ranks;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::BivariateLaurent;
use bits::BitVec;

pub use ranks::{barcode_via_ranks, decompose_via_ranks};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub id: String,
    pub maslov: i64,
    pub alexander: i64,
}

impl Generator {
    pub fn new(id: impl Into<String>, maslov: i64, alexander: i64) -> Self {
        Self {
            id: id.into(),
            maslov,
            alexander,
        }
    }
}

/// A graded, filtered complex with differential over the two-element field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilteredComplex {
    generators: Vec<Generator>,
    boundary: Vec<BTreeSet<usize>>,
}

/// A reason a complex is not a valid knot complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    /// `d(d(from))` has a nonzero coefficient on `to`.
    SquareNonzero { from: String, to: String },
    /// An arrow that does not lower the Maslov grading by exactly one.
    GradingMismatch { from: String, to: String },
    /// An arrow into a higher filtration level.
    FiltrationIncrease { from: String, to: String },
    /// Total homology is not one-dimensional in grading 0; lists
    /// `(grading, rank)` of the nonzero homology.
    NotKnotLike { homology: Vec<(i64, usize)> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SquareNonzero { from, to } => {
                write!(f, "d^2 != 0: d(d({from})) contains {to}")
            }
            Violation::GradingMismatch { from, to } => {
                write!(
                    f,
                    "arrow {from} -> {to} does not lower the Maslov grading by one"
                )
            }
            Violation::FiltrationIncrease { from, to } => {
                write!(f, "filtration increase along arrow {from} -> {to}")
            }
            Violation::NotKnotLike { homology } => {
                let parts: Vec<String> = homology
                    .iter()
                    .map(|(g, r)| format!("rank {r} in grading {g}"))
                    .collect();
                write!(
                    f,
                    "homology is not one-dimensional in grading 0 ({})",
                    parts.join(", ")
                )
            }
        }
    }
}

impl FilteredComplex {
    /// Builds a complex from generators and arrows `(from, to)`. Fails on
    /// duplicate or unknown ids and repeated arrows; semantic checks live in
    /// [`validate`](Self::validate).
    pub fn new<I, S>(generators: Vec<Generator>, differentials: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let mut index = HashMap::new();
        for (k, g) in generators.iter().enumerate() {
            if index.insert(g.id.clone(), k).is_some() {
                return Err(Error::MalformedComplex(format!(
                    "duplicate generator `{}`",
                    g.id
                )));
            }
        }
        let lookup = |id: &str| {
            index
                .get(id)
                .copied()
                .ok_or_else(|| Error::MalformedComplex(format!("unknown generator `{id}`")))
        };
        let mut boundary = vec![BTreeSet::new(); generators.len()];
        for (from, to) in differentials {
            let (from, to) = (from.as_ref(), to.as_ref());
            let (x, y) = (lookup(from)?, lookup(to)?);
            if !boundary[x].insert(y) {
                return Err(Error::MalformedComplex(format!(
                    "repeated arrow {from} -> {to}"
                )));
            }
        }
        Ok(Self {
            generators,
            boundary,
        })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Arrows `(from, to)` in generator order.
    pub fn differentials(&self) -> Vec<(String, String)> {
        self.boundary
            .iter()
            .enumerate()
            .flat_map(|(x, ys)| {
                ys.iter()
                    .map(move |&y| (self.generators[x].id.clone(), self.generators[y].id.clone()))
            })
            .collect()
    }

    pub(crate) fn boundary_of(&self, k: usize) -> &BTreeSet<usize> {
        &self.boundary[k]
    }

    /// Negates gradings and filtrations and reverses every arrow.
    pub fn mirror(&self) -> Self {
        let generators = self
            .generators
            .iter()
            .map(|g| Generator::new(g.id.clone(), -g.maslov, -g.alexander))
            .collect();
        let mut boundary = vec![BTreeSet::new(); self.len()];
        for (x, ys) in self.boundary.iter().enumerate() {
            for &y in ys {
                boundary[y].insert(x);
            }
        }
        Self {
            generators,
            boundary,
        }
    }

    /// Checks `d^2 = 0`, that arrows lower grading by one and do not raise
    /// filtration, and that total homology is one-dimensional in grading 0.
    pub fn validate(&self) -> std::result::Result<(), Vec<Violation>> {
        let mut violations = Vec::new();
        let id = |k: usize| self.generators[k].id.clone();
        for (x, ys) in self.boundary.iter().enumerate() {
            let gx = &self.generators[x];
            for &y in ys {
                let gy = &self.generators[y];
                if gy.maslov != gx.maslov - 1 {
                    violations.push(Violation::GradingMismatch {
                        from: id(x),
                        to: id(y),
                    });
                }
                if gy.alexander > gx.alexander {
                    violations.push(Violation::FiltrationIncrease {
                        from: id(x),
                        to: id(y),
                    });
                }
            }
            let mut twice: BTreeSet<usize> = BTreeSet::new();
            for &y in ys {
                for &z in &self.boundary[y] {
                    if !twice.insert(z) {
                        twice.remove(&z);
                    }
                }
            }
            for z in twice {
                violations.push(Violation::SquareNonzero {
                    from: id(x),
                    to: id(z),
                });
            }
        }
        if violations.is_empty() {
            let homology = self.homology_by_grading(|_| true);
            let nonzero: Vec<(i64, usize)> = homology.into_iter().filter(|&(_, r)| r > 0).collect();
            if nonzero != [(0, 1)] {
                violations.push(Violation::NotKnotLike { homology: nonzero });
            }
        }
        if violations.is_empty() {
            Ok(())
        } else {
            Err(violations)
        }
    }

    /// Homology ranks by Maslov grading of the subquotient spanned by the
    /// generators selected by `keep`, using only arrows between them.
    fn homology_by_grading(&self, keep: impl Fn(&Generator) -> bool) -> BTreeMap<i64, usize> {
        let selected: Vec<usize> = (0..self.len())
            .filter(|&k| keep(&self.generators[k]))
            .collect();
        let mut by_grading: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for &k in &selected {
            by_grading
                .entry(self.generators[k].maslov)
                .or_default()
                .push(k);
        }
        // rank of d restricted to grading j -> j - 1
        let mut d_rank: BTreeMap<i64, usize> = BTreeMap::new();
        for (&j, sources) in &by_grading {
            let Some(targets) = by_grading.get(&(j - 1)) else {
                d_rank.insert(j, 0);
                continue;
            };
            let pos: HashMap<usize, usize> =
                targets.iter().enumerate().map(|(p, &k)| (k, p)).collect();
            let columns = sources.iter().map(|&x| {
                let mut v = BitVec::zeros(targets.len());
                for y in &self.boundary[x] {
                    if let Some(&p) = pos.get(y) {
                        v.set(p);
                    }
                }
                v
            });
            d_rank.insert(j, bits::rank(columns));
        }
        by_grading
            .iter()
            .map(|(&j, gens)| {
                let out = d_rank.get(&j).copied().unwrap_or(0);
                let incoming = d_rank.get(&(j + 1)).copied().unwrap_or(0);
                (j, gens.len() - out - incoming)
            })
            .collect()
    }

    /// Ranks of the associated graded homology, keyed by `(alexander, maslov)`.
    pub fn graded_ranks(&self) -> BTreeMap<(i64, i64), usize> {
        let levels: BTreeSet<i64> = self.generators.iter().map(|g| g.alexander).collect();
        let mut out = BTreeMap::new();
        for i in levels {
            for (j, r) in self.homology_by_grading(|g| g.alexander == i) {
                if r > 0 {
                    out.insert((i, j), r);
                }
            }
        }
        out
    }

    /// The generating polynomial of [`graded_ranks`](Self::graded_ranks).
    pub fn omega(&self) -> BivariateLaurent {
        BivariateLaurent::from_terms(
            self.graded_ranks()
                .into_iter()
                .map(|(key, r)| (key, r as i64)),
        )
    }

    /// Generator indices in `(alexander, maslov, id)` order.
    pub(crate) fn filtration_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by(|&a, &b| {
            let (ga, gb) = (&self.generators[a], &self.generators[b]);
            (ga.alexander, ga.maslov, &ga.id).cmp(&(gb.alexander, gb.maslov, &gb.id))
        });
        order
    }
}

/// A bar `T -> B`: filtration levels of both ends and the grading of `B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bar {
    pub top_filtration: i64,
    pub bottom_filtration: i64,
    pub bottom_grading: i64,
}

impl Bar {
    pub fn is_even(&self) -> bool {
        self.bottom_grading.rem_euclid(2) == 0
    }

    fn key(&self) -> (i64, i64, i64) {
        (
            self.bottom_filtration,
            self.top_filtration,
            self.bottom_grading,
        )
    }
}

impl fmt::Display for Bar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{} -> {}] grading {} ({})",
            self.top_filtration,
            self.bottom_filtration,
            self.bottom_grading,
            if self.is_even() { "even" } else { "odd" }
        )
    }
}

pub(crate) fn sort_bars(bars: &mut [Bar]) {
    bars.sort_by_key(Bar::key);
}

/// A one-dimensional summand `(filtration, grading)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeGenerator {
    pub filtration: i64,
    pub grading: i64,
}

/// Bar decomposition of an arbitrary filtered complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub free: Vec<FreeGenerator>,
    pub bars: Vec<Bar>,
}

/// Bar-complex of a knot complex: free generator filtration and bars.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BarComplex {
    pub tau: i64,
    pub bars: Vec<Bar>,
}

impl BarComplex {
    fn from_decomposition(d: Decomposition) -> Result<Self> {
        match d.free.as_slice() {
            [FreeGenerator {
                filtration,
                grading: 0,
            }] => Ok(BarComplex {
                tau: *filtration,
                bars: d.bars,
            }),
            _ => Err(Error::InvalidInput(format!(
                "bar decomposition has free part {:?}, expected one generator in grading 0",
                d.free
            ))),
        }
    }
}

/// Splits a filtered complex into free generators and bars by column
/// reduction in filtration order; arrows between equal filtration levels
/// cancel and are not reported. The complex must satisfy the arrow
/// conditions of [`FilteredComplex::validate`].
pub fn decompose(c: &FilteredComplex) -> Decomposition {
    let order = c.filtration_order();
    let n = order.len();
    let mut position = vec![0; n];
    for (p, &k) in order.iter().enumerate() {
        position[k] = p;
    }
    let mut columns: Vec<BitVec> = order
        .iter()
        .map(|&k| {
            let mut v = BitVec::zeros(n);
            for &y in c.boundary_of(k) {
                v.set(position[y]);
            }
            v
        })
        .collect();

    // owner[row] = column whose reduced boundary has its lowest entry there
    let mut owner: Vec<Option<usize>> = vec![None; n];
    for col in 0..n {
        while let Some(low) = columns[col].last_one() {
            match owner[low] {
                Some(other) => {
                    let (head, tail) = columns.split_at_mut(col);
                    tail[0].xor_assign(&head[other]);
                }
                None => {
                    owner[low] = Some(col);
                    break;
                }
            }
        }
    }

    let mut paired = vec![false; n];
    let mut bars = Vec::new();
    for (row, col) in owner.iter().enumerate() {
        let Some(col) = *col else { continue };
        paired[row] = true;
        paired[col] = true;
        let bottom = &c.generators[order[row]];
        let top = &c.generators[order[col]];
        if bottom.alexander < top.alexander {
            bars.push(Bar {
                top_filtration: top.alexander,
                bottom_filtration: bottom.alexander,
                bottom_grading: bottom.maslov,
            });
        }
    }
    let mut free: Vec<FreeGenerator> = (0..n)
        .filter(|&p| !paired[p])
        .map(|p| {
            let g = &c.generators[order[p]];
            FreeGenerator {
                filtration: g.alexander,
                grading: g.maslov,
            }
        })
        .collect();
    free.sort();
    sort_bars(&mut bars);
    Decomposition { free, bars }
}

/// The bar-complex of a valid knot complex.
pub fn reduce(c: &FilteredComplex) -> Result<BarComplex> {
    c.validate().map_err(Error::InvalidComplex)?;
    BarComplex::from_decomposition(decompose(c))
}

/// Tensor product with ids `"x|y"`, gradings and filtrations added and the
/// Leibniz differential `d(x|y) = dx|y + x|dy`.
pub fn tensor(c1: &FilteredComplex, c2: &FilteredComplex) -> FilteredComplex {
    let m = c2.len();
    let generators = c1
        .generators
        .iter()
        .flat_map(|x| {
            c2.generators.iter().map(move |y| {
                Generator::new(
                    format!("{}|{}", x.id, y.id),
                    x.maslov + y.maslov,
                    x.alexander + y.alexander,
                )
            })
        })
        .collect();
    let mut boundary = vec![BTreeSet::new(); c1.len() * m];
    for a in 0..c1.len() {
        for b in 0..m {
            let source = a * m + b;
            for &a2 in &c1.boundary[a] {
                boundary[source].insert(a2 * m + b);
            }
            for &b2 in &c2.boundary[b] {
                boundary[source].insert(a * m + b2);
            }
        }
    }
    FilteredComplex {
        generators,
        boundary,
    }
}

/// `delta = 1 + 2 (b_even + b_odd)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BarCounts {
    pub delta: u64,
    pub b_even: u64,
    pub b_odd: u64,
}

impl BarCounts {
    pub fn new(delta: u64, b_even: u64, b_odd: u64) -> Result<Self> {
        if delta != 1 + 2 * (b_even + b_odd) {
            return Err(Error::InvalidInput(format!(
                "counts ({delta}, {b_even}, {b_odd}) violate delta = 1 + 2(b_e + b_o)"
            )));
        }
        Ok(Self {
            delta,
            b_even,
            b_odd,
        })
    }
}

impl fmt::Display for BarCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "δ={} b_e={} b_o={}", self.delta, self.b_even, self.b_odd)
    }
}

pub fn counts(b: &BarComplex) -> BarCounts {
    let b_even = b.bars.iter().filter(|bar| bar.is_even()).count() as u64;
    let b_odd = b.bars.len() as u64 - b_even;
    BarCounts {
        delta: 1 + 2 * b.bars.len() as u64,
        b_even,
        b_odd,
    }
}

/// Counts of a connected sum from the counts of its summands.
pub fn predict_sum_counts(a: BarCounts, b: BarCounts) -> BarCounts {
    // (delta - 1) is even on both sides, so the quarter is exact
    let cross = (a.delta - 1) * (b.delta - 1) / 4;
    BarCounts {
        delta: a.delta * b.delta,
        b_even: a.b_even + b.b_even + cross,
        b_odd: a.b_odd + b.b_odd + cross,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CorollaryOutcome {
    Prime,
    Inconclusive,
}

/// A factorization `delta = d1 * d2`, `2 <= d1 <= d2`, with
/// `(d1 - 1)(d2 - 1) <= 4 min(b_even, b_odd)`, if one exists.
pub fn corollary_witness(b: BarCounts) -> Option<(u64, u64)> {
    let budget = 4 * b.b_even.min(b.b_odd);
    (2..)
        .take_while(|d1| d1 * d1 <= b.delta)
        .filter(|d1| b.delta.is_multiple_of(*d1))
        .map(|d1| (d1, b.delta / d1))
        .find(|&(d1, d2)| (d1 - 1) * (d2 - 1) <= budget)
}

/// Composite knots always admit a witness, so its absence proves primality.
/// `delta = 1` (the unknot) is never reported prime.
pub fn corollary_test(b: BarCounts) -> CorollaryOutcome {
    if b.delta > 1 && corollary_witness(b).is_none() {
        CorollaryOutcome::Prime
    } else {
        CorollaryOutcome::Inconclusive
    }
}

/// Checks every tensor product of two bars with filtrations and gradings in
/// `lo..=hi`: it must split into one even and one odd bar, the lower one with
/// bottom at the sum of the bottoms and the upper one with top at the sum of
/// the tops. Returns the number of cases checked.
pub fn check_bar_tensor_exhaustive(lo: i64, hi: i64) -> std::result::Result<usize, String> {
    let mut single_bars = Vec::new();
    for bottom in lo..=hi {
        for top in bottom + 1..=hi {
            for grading in lo..=hi {
                single_bars.push((bottom, top, grading));
            }
        }
    }
    let complex = |(b, t, g): (i64, i64, i64), tag: &str| {
        FilteredComplex::new(
            vec![
                Generator::new(format!("T{tag}"), g + 1, t),
                Generator::new(format!("B{tag}"), g, b),
            ],
            [(format!("T{tag}"), format!("B{tag}"))],
        )
        .expect("well-formed bar")
    };
    let mut checked = 0;
    for &first in &single_bars {
        let c1 = complex(first, "1");
        for &second in &single_bars {
            let d = decompose(&tensor(&c1, &complex(second, "2")));
            let (b1, t1, g1) = first;
            let (b2, t2, g2) = second;
            let lower = Bar {
                top_filtration: (t1 + b2).min(b1 + t2),
                bottom_filtration: b1 + b2,
                bottom_grading: g1 + g2,
            };
            let upper = Bar {
                top_filtration: t1 + t2,
                bottom_filtration: (t1 + b2).max(b1 + t2),
                bottom_grading: g1 + g2 + 1,
            };
            let mut expected = vec![lower, upper];
            sort_bars(&mut expected);
            let parities: BTreeSet<bool> = d.bars.iter().map(Bar::is_even).collect();
            if !d.free.is_empty() || d.bars != expected || parities.len() != 2 {
                return Err(format!(
                    "bar {first:?} tensor bar {second:?} gave {:?}, expected {expected:?}",
                    d.bars
                ));
            }
            checked += 1;
        }
    }
    Ok(checked)
}
