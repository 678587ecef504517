//! Bar decomposition from persistent homology ranks, independent of the
//! column reduction in the parent module.
//!
//! With `r_j(a, b)` the rank of `H_j(F_a) -> H_j(F_b)`, the number of bars
//! born at level `a` and dying at level `b` in grading `j` is
//! `r(a, b-) - r(a, b) - r(a-, b-) + r(a-, b)`, where `x-` is the previous
//! filtration level.

use std::collections::BTreeSet;

use super::bits::{self, BitVec};
use super::{sort_bars, Bar, BarComplex, Decomposition, FilteredComplex, FreeGenerator};
use crate::error::{Error, Result};

struct Persistence<'a> {
    complex: &'a FilteredComplex,
    levels: Vec<i64>,
}

impl Persistence<'_> {
    fn n(&self) -> usize {
        self.complex.len()
    }

    fn in_range(&self, k: usize, grading: i64, level: i64) -> bool {
        let g = &self.complex.generators[k];
        g.maslov == grading && g.alexander <= level
    }

    /// Basis of the cycles of grading `j` and filtration at most `level`.
    fn cycles(&self, j: i64, level: i64) -> Vec<BitVec> {
        let n = self.n();
        // source coordinates in 0..n, boundary coordinates in n..2n
        let mut pivots: Vec<(usize, BitVec)> = Vec::new();
        let mut kernel = Vec::new();
        for k in (0..n).filter(|&k| self.in_range(k, j, level)) {
            let mut v = BitVec::zeros(2 * n);
            v.set(k);
            for &y in self.complex.boundary_of(k) {
                v.set(n + y);
            }
            loop {
                let top = v.last_one().expect("source bit is always set");
                if top < n {
                    let mut z = BitVec::zeros(n);
                    for i in v.ones() {
                        z.set(i);
                    }
                    kernel.push(z);
                    break;
                }
                match pivots.iter().find(|(p, _)| *p == top) {
                    Some((_, b)) => v.xor_assign(b),
                    None => {
                        pivots.push((top, v));
                        break;
                    }
                }
            }
        }
        kernel
    }

    /// Spanning set of the boundaries in grading `j` coming from filtration
    /// at most `level`.
    fn boundaries(&self, j: i64, level: i64) -> Vec<BitVec> {
        let n = self.n();
        (0..n)
            .filter(|&k| self.in_range(k, j + 1, level))
            .map(|k| {
                let mut v = BitVec::zeros(n);
                for &y in self.complex.boundary_of(k) {
                    v.set(y);
                }
                v
            })
            .collect()
    }

    /// `r_j(a, b)` for level indices `a <= b`; `None` means below every level.
    fn rank(&self, j: i64, a: Option<usize>, b: Option<usize>) -> usize {
        let (Some(a), Some(b)) = (a, b) else { return 0 };
        let z = self.cycles(j, self.levels[a]);
        let bd = self.boundaries(j, self.levels[b]);
        let with_cycles = bits::rank(z.into_iter().chain(bd.iter().cloned()));
        with_cycles - bits::rank(bd)
    }
}

fn prev(k: usize) -> Option<usize> {
    k.checked_sub(1)
}

/// Bars and free generators of any filtered complex satisfying the arrow
/// conditions, computed from persistent ranks.
pub fn decompose_via_ranks(c: &FilteredComplex) -> Decomposition {
    let levels: Vec<i64> = c
        .generators
        .iter()
        .map(|g| g.alexander)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let gradings: BTreeSet<i64> = c.generators.iter().map(|g| g.maslov).collect();
    let p = Persistence { complex: c, levels };
    let top = p.levels.len().checked_sub(1);
    let mut free = Vec::new();
    let mut bars = Vec::new();
    for &j in &gradings {
        for a in 0..p.levels.len() {
            let persisting = p.rank(j, Some(a), top) - p.rank(j, prev(a), top);
            for _ in 0..persisting {
                free.push(FreeGenerator {
                    filtration: p.levels[a],
                    grading: j,
                });
            }
            for b in a + 1..p.levels.len() {
                let mu = p.rank(j, Some(a), prev(b)) + p.rank(j, prev(a), Some(b))
                    - p.rank(j, Some(a), Some(b))
                    - p.rank(j, prev(a), prev(b));
                for _ in 0..mu {
                    bars.push(Bar {
                        top_filtration: p.levels[b],
                        bottom_filtration: p.levels[a],
                        bottom_grading: j,
                    });
                }
            }
        }
    }
    free.sort();
    sort_bars(&mut bars);
    Decomposition { free, bars }
}

/// The bar-complex of a valid knot complex, computed from persistent ranks.
pub fn barcode_via_ranks(c: &FilteredComplex) -> Result<BarComplex> {
    c.validate().map_err(Error::InvalidComplex)?;
    BarComplex::from_decomposition(decompose_via_ranks(c))
}
