//! Random knot-like complexes and polynomials shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use knotprime::barred::{FilteredComplex, Generator};
use knotprime::engine::bundled_corpus;
use knotprime::{BivariateLaurent, KnotInput, Status};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A free generator in grading 0, bars with distinct filtrations and
/// acyclic pairs at a single filtration level, then up to `changes` random
/// filtered changes of basis. At most `max_gens` generators (odd, >= 1).
pub fn random_knot_complex(rng: &mut StdRng, max_gens: usize, changes: usize) -> FilteredComplex {
    let mut gens = vec![Generator::new("f", 0, rng.gen_range(-3..=3))];
    let mut arrows = Vec::new();
    let pieces = rng.gen_range(0..=(max_gens - 1) / 2);
    for k in 0..pieces {
        let grading = rng.gen_range(-3..=3);
        let bottom = rng.gen_range(-3..=3);
        let top = if rng.gen_bool(0.75) {
            rng.gen_range(bottom + 1..=bottom + 4)
        } else {
            bottom
        };
        let (t, b) = (format!("t{k}"), format!("b{k}"));
        gens.push(Generator::new(&t, grading + 1, top));
        gens.push(Generator::new(&b, grading, bottom));
        arrows.push((t, b));
    }
    let c = FilteredComplex::new(gens, arrows).expect("well-formed");
    let count = rng.gen_range(0..=changes);
    random_basis_changes(rng, &c, count)
}

/// Replaces a generator `v` by `v + u` for `u` in the same grading and at
/// most the same filtration, `count` times.
pub fn random_basis_changes(
    rng: &mut StdRng,
    c: &FilteredComplex,
    count: usize,
) -> FilteredComplex {
    let gens = c.generators().to_vec();
    let index = |id: &str| gens.iter().position(|g| g.id == id).unwrap();
    let n = gens.len();
    let mut d: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for (from, to) in c.differentials() {
        d[index(&from)].insert(index(&to));
    }
    for _ in 0..count {
        let candidates: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| {
                u != v && gens[u].maslov == gens[v].maslov && gens[u].alexander <= gens[v].alexander
            })
            .collect();
        if candidates.is_empty() {
            break;
        }
        let (u, v) = candidates[rng.gen_range(0..candidates.len())];
        // column v += column u
        let du = d[u].clone();
        for y in du {
            toggle(&mut d[v], y);
        }
        // row u += row v
        for row in d.iter_mut() {
            if row.contains(&v) {
                toggle(row, u);
            }
        }
    }
    let arrows: Vec<(String, String)> = d
        .iter()
        .enumerate()
        .flat_map(|(x, ys)| ys.iter().map(move |&y| (x, y)))
        .map(|(x, y)| (gens[x].id.clone(), gens[y].id.clone()))
        .collect();
    FilteredComplex::new(gens, arrows).expect("well-formed")
}

fn toggle(set: &mut BTreeSet<usize>, y: usize) {
    if !set.remove(&y) {
        set.insert(y);
    }
}

/// Up to `terms` terms with exponents in `-span..=span` and coefficients in
/// `-coeff..=coeff`.
pub fn random_laurent(rng: &mut StdRng, terms: usize, span: i64, coeff: i64) -> BivariateLaurent {
    let n = rng.gen_range(0..=terms);
    BivariateLaurent::from_terms((0..n).map(|_| {
        (
            (rng.gen_range(-span..=span), rng.gen_range(-span..=span)),
            rng.gen_range(-coeff..=coeff),
        )
    }))
}

/// Bundled fixtures labeled PRIME that carry a complex.
pub fn prime_fixtures() -> Vec<KnotInput> {
    bundled_corpus()
        .into_iter()
        .map(|(_, k)| k)
        .filter(|k| k.expected_verdict == Some(Status::Prime) && k.complex.is_some())
        .collect()
}

pub fn fixture(file: &str) -> KnotInput {
    bundled_corpus()
        .into_iter()
        .find(|(f, _)| *f == file)
        .unwrap_or_else(|| panic!("no fixture {file}"))
        .1
}

/// Same knot without its complex.
pub fn ranks_only(k: &KnotInput) -> KnotInput {
    KnotInput {
        complex: None,
        ..k.clone()
    }
}

/// A random integer-irreducible canonical polynomial of bidegree at most
/// `(3, 3)` with coefficients in `-3..=3`.
pub fn random_irreducible(rng: &mut StdRng) -> knotprime::CanonicalForm {
    loop {
        let terms = rng.gen_range(2..=6);
        let p = BivariateLaurent::from_terms((0..terms).map(|_| {
            (
                (rng.gen_range(0..=3), rng.gen_range(0..=3)),
                rng.gen_range(-3..=3),
            )
        }));
        if p.len() < 2 {
            continue;
        }
        let Ok((c, _)) = p.canonicalize() else {
            continue;
        };
        if c.poly().content() != 1.into() {
            continue;
        }
        let f = knotprime::factor::factor_canonical(&c).expect("primitive");
        if f.factor_count() == 1 {
            return c;
        }
    }
}

/// A knot-like complex with symmetric Ω: an unknot or `(2, 2k+1)` torus
/// staircase (or its mirror), length-one bars each paired with their
/// symmetric partner, acyclic pairs, then random filtered basis changes.
pub fn random_symmetric_complex(
    rng: &mut StdRng,
    max_gens: usize,
    changes: usize,
) -> FilteredComplex {
    let k = rng.gen_range(0..=2usize);
    let top = k as i64;
    let mut gens: Vec<Generator> = (0..=2 * k)
        .map(|m| Generator::new(format!("x{m}"), -(m as i64), top - m as i64))
        .collect();
    let mut arrows: Vec<(String, String)> = (1..2 * k)
        .step_by(2)
        .map(|m| (format!("x{m}"), format!("x{}", m + 1)))
        .collect();
    if rng.gen_bool(0.5) {
        let mirrored = FilteredComplex::new(gens, arrows).unwrap().mirror();
        gens = mirrored.generators().to_vec();
        arrows = mirrored.differentials();
    }
    let mut n = 0;
    while gens.len() + 4 <= max_gens && rng.gen_bool(0.6) {
        let (g, t) = (rng.gen_range(-3..=3), rng.gen_range(-3..=3));
        if rng.gen_bool(0.7) {
            // bar (t, g + 1) -> (t - 1, g) and its partner
            // (1 - t, g - 2t + 2) -> (-t, g - 2t + 1)
            let ids = ["p", "q", "r", "u"].map(|c| format!("{c}{n}"));
            gens.push(Generator::new(&ids[0], g + 1, t));
            gens.push(Generator::new(&ids[1], g, t - 1));
            gens.push(Generator::new(&ids[2], g - 2 * t + 2, 1 - t));
            gens.push(Generator::new(&ids[3], g - 2 * t + 1, -t));
            arrows.push((ids[0].clone(), ids[1].clone()));
            arrows.push((ids[2].clone(), ids[3].clone()));
        } else {
            let ids = ["y", "z"].map(|c| format!("{c}{n}"));
            gens.push(Generator::new(&ids[0], g + 1, t));
            gens.push(Generator::new(&ids[1], g, t));
            arrows.push((ids[0].clone(), ids[1].clone()));
        }
        n += 1;
    }
    let c = FilteredComplex::new(gens, arrows).expect("well-formed");
    let count = rng.gen_range(0..=changes);
    random_basis_changes(rng, &c, count)
}
