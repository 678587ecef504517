//! Bivariate factorization by Kronecker substitution `t = x`, `s = x^D`.
//!
//! Every factor of a canonical polynomial has `t`-degree below
//! `D = deg_t + 1`, so the base-`D` digits of an exponent of `x` recover the
//! `(i, j)` exponents exactly. True factors are products of sub-multisets of
//! the univariate irreducible factors of the image; candidates are mapped
//! back and confirmed by exact bivariate division.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::univariate;
use super::zpoly::ZPoly;
use crate::laurent::{BivariateLaurent, CanonicalForm};

fn substitute(c: &BivariateLaurent, base: i64) -> ZPoly {
    let mut coeffs: Vec<BigInt> = Vec::new();
    for ((i, j), coeff) in c.terms() {
        let e = (j * base + i) as usize;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, BigInt::zero());
        }
        coeffs[e] += coeff;
    }
    ZPoly::new(coeffs)
}

fn unsubstitute(u: &ZPoly, base: i64) -> BivariateLaurent {
    BivariateLaurent::from_terms(u.coeffs().iter().enumerate().map(|(e, c)| {
        let e = e as i64;
        ((e % base, e / base), c.clone())
    }))
}

/// Calls `visit` on every sub-multiset of `available` with exactly `size`
/// elements, stopping early when `visit` returns true.
fn for_each_submultiset(
    available: &[usize],
    size: usize,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    fn go(
        available: &[usize],
        k: usize,
        left: usize,
        chosen: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if k == available.len() {
            return left == 0 && visit(chosen);
        }
        let remaining_capacity: usize = available[k..].iter().sum();
        if remaining_capacity < left {
            return false;
        }
        for take in (0..=available[k].min(left)).rev() {
            chosen[k] = take;
            if go(available, k + 1, left - take, chosen, visit) {
                return true;
            }
        }
        chosen[k] = 0;
        false
    }
    let mut chosen = vec![0; available.len()];
    go(available, 0, size, &mut chosen, visit)
}

/// Irreducible factors of a canonical, primitive, non-unit polynomial, with
/// multiplicities.
pub(crate) fn factor_canonical_poly(c: &CanonicalForm) -> Vec<(CanonicalForm, usize)> {
    let (_, deg_t) = c.poly().i_range().expect("nonzero input");
    let base = deg_t + 1;
    let image = substitute(c.poly(), base);

    let mut kinds: Vec<ZPoly> = Vec::new();
    let mut available: Vec<usize> = Vec::new();
    for (q, m) in univariate::factor(&image) {
        kinds.push(q);
        available.push(m);
    }

    let mut rest = c.poly().clone();
    let mut found: BTreeMap<Vec<(crate::laurent::Exponent, BigInt)>, (CanonicalForm, usize)> =
        BTreeMap::new();
    let mut size = 1;
    while 2 * size <= available.iter().sum::<usize>() {
        let mut hit: Option<(Vec<usize>, CanonicalForm, BivariateLaurent)> = None;
        for_each_submultiset(&available, size, &mut |chosen| {
            let product = chosen
                .iter()
                .enumerate()
                .fold(ZPoly::one(), |acc, (k, &n)| {
                    (0..n).fold(acc, |a, _| a.mul(&kinds[k]))
                });
            let candidate = unsubstitute(&product, base);
            let Ok((candidate, _)) = candidate.canonicalize() else {
                return false;
            };
            if candidate.poly().as_unit().is_some() {
                return false;
            }
            if let Some(quotient) = rest.div_exact(candidate.poly()) {
                hit = Some((chosen.to_vec(), candidate, quotient));
                return true;
            }
            false
        });
        match hit {
            Some((chosen, factor, quotient)) => {
                for (k, n) in chosen.iter().enumerate() {
                    available[k] -= n;
                }
                rest = quotient;
                let key = factor.poly().terms().map(|(e, c)| (e, c.clone())).collect();
                found.entry(key).or_insert((factor, 0)).1 += 1;
            }
            None => size += 1,
        }
    }
    if rest.as_unit().is_none() {
        let (factor, _) = rest.canonicalize().expect("remaining cofactor is nonzero");
        let key = factor.poly().terms().map(|(e, c)| (e, c.clone())).collect();
        found.entry(key).or_insert((factor, 0)).1 += 1;
    }
    found.into_values().collect()
}
