//! Integer factorization of knot Floer polynomials and the search for
//! symmetric factorizations.
//!
//! A polynomial is *symmetric* when `c(i, j) = c(-i, j - 2i)`. A factor of a
//! symmetric polynomial is usable in a symmetric factorization when some
//! `t`-shift of it is symmetric (its *placement* `beta`); the `s`-shift is
//! irrelevant because symmetry is invariant under multiplication by `s`.

mod kronecker;
mod modp;
mod univariate;
mod zpoly;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{BivariateLaurent, CanonicalForm, MonomialUnit};

/// `unit * prod(factor^multiplicity)`, factors irreducible over the integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibleFactorization {
    pub unit: MonomialUnit,
    pub factors: Vec<(CanonicalForm, usize)>,
}

impl IrreducibleFactorization {
    pub fn expand(&self) -> BivariateLaurent {
        let product = self
            .factors
            .iter()
            .fold(BivariateLaurent::one(), |acc, (f, m)| {
                &acc * &f.poly().pow(*m as u32)
            });
        self.unit.apply(&product)
    }

    /// Number of irreducible factors counted with multiplicity.
    pub fn factor_count(&self) -> usize {
        self.factors.iter().map(|(_, m)| m).sum()
    }
}

impl fmt::Display for IrreducibleFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.unit)?;
        for (factor, m) in &self.factors {
            write!(f, " * ({factor})")?;
            if *m > 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

/// Factors a canonical polynomial into integer-irreducible canonical factors.
///
/// Output is sorted by degree, then coefficients. Fails when the content is
/// greater than one.
pub fn factor_canonical(c: &CanonicalForm) -> Result<IrreducibleFactorization> {
    let content = c.poly().content();
    if !content.is_one() {
        return Err(Error::NonPrimitive {
            content: content.to_string(),
        });
    }
    let mut factors = if c.poly().is_one() {
        Vec::new()
    } else {
        kronecker::factor_canonical_poly(c)
    };
    factors.sort_by_key(|(f, _)| f.sort_key());
    Ok(IrreducibleFactorization {
        unit: MonomialUnit::identity(),
        factors,
    })
}

/// Canonicalizes `p` and factors it; the unit absorbs the normalization.
pub fn factor(p: &BivariateLaurent) -> Result<IrreducibleFactorization> {
    let (c, unit) = p.canonicalize()?;
    let mut out = factor_canonical(&c)?;
    out.unit = unit;
    Ok(out)
}

/// One symmetric factor: a canonical class, its placement and the irreducible
/// constituents it groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricPart {
    pub canonical: CanonicalForm,
    pub beta: i64,
    pub constituents: Vec<(CanonicalForm, usize)>,
}

impl SymmetricPart {
    /// `t^beta * canonical`.
    pub fn placed(&self) -> BivariateLaurent {
        self.canonical.poly().shift(self.beta, 0)
    }
}

/// A nontrivial factorization of a symmetric polynomial into symmetrically
/// irreducible parts.
///
/// Only the `(canonical, beta)` class of each part is determined; the
/// remaining `s`-shift and sign are attached to the last part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricFactorization {
    pub parts: Vec<SymmetricPart>,
    pub total_unit: MonomialUnit,
}

impl SymmetricFactorization {
    /// The Laurent polynomial reported for part `k`.
    pub fn part_polynomial(&self, k: usize) -> BivariateLaurent {
        let placed = self.parts[k].placed();
        if k + 1 == self.parts.len() {
            MonomialUnit::new(self.total_unit.sign, 0, self.total_unit.j_shift).apply(&placed)
        } else {
            placed
        }
    }

    pub fn expand(&self) -> BivariateLaurent {
        (0..self.parts.len()).fold(BivariateLaurent::one(), |acc, k| {
            &acc * &self.part_polynomial(k)
        })
    }
}

impl fmt::Display for SymmetricFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..self.parts.len())
            .map(|k| format!("({})", self.part_polynomial(k)))
            .collect();
        f.write_str(&parts.join(" * "))
    }
}

type Counts = Vec<usize>;

struct PartitionSearch<'a> {
    factors: &'a [(CanonicalForm, usize)],
    placement: HashMap<Counts, Option<(CanonicalForm, i64)>>,
    irreducible: HashMap<Counts, bool>,
}

impl<'a> PartitionSearch<'a> {
    fn new(factors: &'a [(CanonicalForm, usize)]) -> Self {
        Self {
            factors,
            placement: HashMap::new(),
            irreducible: HashMap::new(),
        }
    }

    fn product(&self, counts: &Counts) -> CanonicalForm {
        let p = self
            .factors
            .iter()
            .zip(counts)
            .fold(BivariateLaurent::one(), |acc, ((f, _), &n)| {
                &acc * &f.poly().pow(n as u32)
            });
        // products of positive-leading canonical forms stay canonical
        CanonicalForm::from_canonical(p).expect("product of canonical forms")
    }

    fn placement(&mut self, counts: &Counts) -> Option<(CanonicalForm, i64)> {
        if let Some(hit) = self.placement.get(counts) {
            return hit.clone();
        }
        let c = self.product(counts);
        let result = c.symmetric_placement().map(|beta| (c, beta));
        self.placement.insert(counts.clone(), result.clone());
        result
    }

    /// Placeable and not splittable into two placeable non-empty groups.
    fn is_symmetric_irreducible(&mut self, group: &Counts) -> bool {
        if let Some(&hit) = self.irreducible.get(group) {
            return hit;
        }
        let result = self.placement(group).is_some()
            && !proper_subcounts(group).any(|sub| {
                let rest: Counts = group.iter().zip(&sub).map(|(g, s)| g - s).collect();
                self.placement(&sub).is_some() && self.placement(&rest).is_some()
            });
        self.irreducible.insert(group.clone(), result);
        result
    }

    /// All multiset partitions of `rest` into symmetrically irreducible groups.
    fn partitions(&mut self, rest: &Counts) -> Vec<Vec<Counts>> {
        let Some(first) = rest.iter().position(|&n| n > 0) else {
            return vec![Vec::new()];
        };
        let mut out = Vec::new();
        let candidates: Vec<Counts> = subcounts(rest).filter(|g| g[first] > 0).collect();
        for group in candidates {
            if !self.is_symmetric_irreducible(&group) {
                continue;
            }
            let remaining: Counts = rest.iter().zip(&group).map(|(r, g)| r - g).collect();
            for mut tail in self.partitions(&remaining) {
                tail.push(group.clone());
                out.push(tail);
            }
        }
        out
    }
}

/// Every nonzero sub-count vector of `bound`, including `bound` itself.
fn subcounts(bound: &Counts) -> impl Iterator<Item = Counts> + '_ {
    let total: usize = bound.iter().map(|b| b + 1).product();
    (1..total).map(move |mut code| {
        bound
            .iter()
            .map(|&b| {
                let v = code % (b + 1);
                code /= b + 1;
                v
            })
            .collect()
    })
}

fn proper_subcounts(bound: &Counts) -> impl Iterator<Item = Counts> + '_ {
    subcounts(bound).filter(move |c| c != bound)
}

/// All maximal symmetric factorizations of a symmetric polynomial with at
/// least two parts. Empty means `omega` is symmetrically irreducible.
pub fn maximal_symmetric_factorizations(
    omega: &BivariateLaurent,
) -> Result<Vec<SymmetricFactorization>> {
    if !omega.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    symmetric_factorizations_of(&factor(omega)?)
}

/// Same as [`maximal_symmetric_factorizations`], starting from the
/// irreducible factorization of a symmetric polynomial.
pub fn symmetric_factorizations_of(
    irreducible: &IrreducibleFactorization,
) -> Result<Vec<SymmetricFactorization>> {
    let total_unit = irreducible.unit;
    let factors = &irreducible.factors;
    let full: Counts = factors.iter().map(|(_, m)| *m).collect();

    let mut search = PartitionSearch::new(factors);
    let mut seen: BTreeSet<Vec<Counts>> = BTreeSet::new();
    let mut out = Vec::new();
    for mut partition in search.partitions(&full) {
        if partition.len() < 2 {
            continue;
        }
        partition.sort();
        if !seen.insert(partition.clone()) {
            continue;
        }
        let mut parts: Vec<SymmetricPart> = partition
            .iter()
            .map(|group| {
                let (canonical, beta) = search.placement(group).expect("groups are placeable");
                let constituents = factors
                    .iter()
                    .zip(group)
                    .filter(|(_, &n)| n > 0)
                    .map(|((f, _), &n)| (f.clone(), n))
                    .collect();
                SymmetricPart {
                    canonical,
                    beta,
                    constituents,
                }
            })
            .collect();
        parts.sort_by(|a, b| {
            a.canonical
                .sort_key()
                .cmp(&b.canonical.sort_key())
                .then(a.beta.cmp(&b.beta))
        });
        let beta_sum: i64 = parts.iter().map(|p| p.beta).sum();
        if beta_sum != total_unit.i_shift {
            return Err(Error::Internal(format!(
                "placements sum to {beta_sum}, expected {}",
                total_unit.i_shift
            )));
        }
        out.push(SymmetricFactorization { parts, total_unit });
    }
    out.sort_by(|a, b| {
        let key = |f: &SymmetricFactorization| {
            f.parts
                .iter()
                .map(|p| (p.canonical.sort_key(), p.beta))
                .collect::<Vec<_>>()
        };
        a.parts
            .len()
            .cmp(&b.parts.len())
            .then_with(|| key(a).cmp(&key(b)))
    });
    Ok(out)
}

/// True iff no nontrivial symmetric factorization exists.
pub fn is_symmetrically_irreducible(omega: &BivariateLaurent) -> Result<bool> {
    if omega.as_unit().is_some() {
        return Err(Error::Unit);
    }
    Ok(maximal_symmetric_factorizations(omega)?.is_empty())
}

/// The nontrivial knots known to be determined by their knot Floer complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum KnownKnot {
    #[serde(rename = "T(2,3)")]
    T23,
    #[serde(rename = "-T(2,3)")]
    MirrorT23,
    #[serde(rename = "T(2,5)")]
    T25,
    #[serde(rename = "-T(2,5)")]
    MirrorT25,
    #[serde(rename = "4_1")]
    FigureEight,
}

impl KnownKnot {
    pub const ALL: [KnownKnot; 5] = [
        KnownKnot::T23,
        KnownKnot::MirrorT23,
        KnownKnot::T25,
        KnownKnot::MirrorT25,
        KnownKnot::FigureEight,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            KnownKnot::T23 => "T(2,3)",
            KnownKnot::MirrorT23 => "-T(2,3)",
            KnownKnot::T25 => "T(2,5)",
            KnownKnot::MirrorT25 => "-T(2,5)",
            KnownKnot::FigureEight => "4_1",
        }
    }

    /// The knot Floer polynomial at its actual placement.
    pub fn omega(&self) -> BivariateLaurent {
        let text = match self {
            KnownKnot::T23 => "t + s^-1 + s^-2*t^-1",
            KnownKnot::MirrorT23 => "s^2*t + s + t^-1",
            KnownKnot::T25 => "t^2 + s^-1*t + s^-2 + s^-3*t^-1 + s^-4*t^-2",
            KnownKnot::MirrorT25 => "s^4*t^2 + s^3*t + s^2 + s*t^-1 + t^-2",
            KnownKnot::FigureEight => "s*t + 3 + s^-1*t^-1",
        };
        text.parse().expect("built-in polynomial parses")
    }

    /// `(canonical form, placement)` of [`omega`](Self::omega).
    pub fn canonical_class(&self) -> (CanonicalForm, i64) {
        let (c, unit) = self.omega().canonicalize().expect("nonzero");
        (c, unit.i_shift)
    }
}

impl fmt::Display for KnownKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for KnownKnot {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        KnownKnot::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown listed knot `{s}`")))
    }
}

/// For each part whose `(canonical, beta)` class is that of a listed knot,
/// the part index and every listed knot in that class. Mirror pairs share a
/// class and are always reported together.
pub fn known_knot_matches(f: &SymmetricFactorization) -> Vec<(usize, Vec<KnownKnot>)> {
    let classes: Vec<(KnownKnot, (CanonicalForm, i64))> = KnownKnot::ALL
        .into_iter()
        .map(|k| (k, k.canonical_class()))
        .collect();
    f.parts
        .iter()
        .enumerate()
        .filter_map(|(idx, part)| {
            let knots: Vec<KnownKnot> = classes
                .iter()
                .filter(|(_, (c, beta))| *c == part.canonical && *beta == part.beta)
                .map(|(k, _)| *k)
                .collect();
            (!knots.is_empty()).then_some((idx, knots))
        })
        .collect()
}
