mod common;

use std::collections::BTreeMap;

use knotprime::factor::{
    factor, factor_canonical, is_symmetrically_irreducible, maximal_symmetric_factorizations,
    IrreducibleFactorization,
};
use knotprime::{BivariateLaurent, CanonicalForm, KnownKnot};
use proptest::prelude::*;
use rand::Rng;

fn multiset(f: &IrreducibleFactorization) -> BTreeMap<String, usize> {
    f.factors.iter().map(|(c, m)| (c.to_string(), *m)).collect()
}

fn symmetric_omegas() -> Vec<BivariateLaurent> {
    let mut out: Vec<BivariateLaurent> =
        common::prime_fixtures().iter().map(|k| k.omega()).collect();
    out.extend(KnownKnot::ALL.iter().map(KnownKnot::omega));
    out
}

/// Whether the factors split into two nonempty groups that each admit a
/// symmetric placement.
fn splits_symmetrically(factors: &[(CanonicalForm, usize)]) -> bool {
    let flat: Vec<&CanonicalForm> = factors
        .iter()
        .flat_map(|(c, m)| std::iter::repeat_n(c, *m))
        .collect();
    let n = flat.len();
    (1..(1u32 << n) - 1).any(|mask| {
        let group = |inside: bool| {
            let p = (0..n)
                .filter(|k| (mask >> k & 1 == 1) == inside)
                .fold(BivariateLaurent::one(), |acc, k| &acc * flat[k].poly());
            p.canonicalize().unwrap().0.symmetric_placement().is_some()
        };
        group(true) && group(false)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn factorization_round_trip(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let k = rng.gen_range(2..=4);
        let parts: Vec<CanonicalForm> = (0..k).map(|_| common::random_irreducible(&mut rng)).collect();
        let shift = (rng.gen_range(-3..=3), rng.gen_range(-3..=3));
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let product = parts
            .iter()
            .fold(BivariateLaurent::constant(sign), |acc, c| &acc * c.poly())
            .shift(shift.0, shift.1);

        let f = factor(&product).unwrap();
        prop_assert_eq!(f.expand(), product);
        let mut expected: BTreeMap<String, usize> = BTreeMap::new();
        for c in &parts {
            *expected.entry(c.to_string()).or_default() += 1;
        }
        prop_assert_eq!(multiset(&f), expected);
        for (c, _) in &f.factors {
            prop_assert_eq!(factor_canonical(c).unwrap().factor_count(), 1);
        }
    }

    #[test]
    fn symmetric_factorizations_expand(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let omegas = symmetric_omegas();
        let k = rng.gen_range(1..=3);
        let omega = (0..k).fold(BivariateLaurent::one(), |acc, _| {
            &acc * &omegas[rng.gen_range(0..omegas.len())]
        });
        let all = maximal_symmetric_factorizations(&omega).unwrap();
        for f in &all {
            prop_assert!(f.parts.len() >= 2);
            prop_assert_eq!(f.expand(), omega.clone());
            for (idx, part) in f.parts.iter().enumerate() {
                prop_assert_eq!(part.canonical.symmetric_placement(), Some(part.beta));
                prop_assert!(f.part_polynomial(idx).is_symmetric());
                prop_assert!(is_symmetrically_irreducible(&part.placed()).unwrap());
            }
            prop_assert_eq!(
                f.parts.iter().map(|p| p.beta).sum::<i64>(),
                omega.canonicalize().unwrap().1.i_shift
            );
        }
    }
}

#[test]
fn products_factor_as_unions() {
    let omegas = symmetric_omegas();
    for a in &omegas {
        for b in &omegas {
            let mut expected = multiset(&factor(a).unwrap());
            for (k, m) in multiset(&factor(b).unwrap()) {
                *expected.entry(k).or_default() += m;
            }
            assert_eq!(
                multiset(&factor(&(a * b)).unwrap()),
                expected,
                "{a} times {b}"
            );
        }
    }
}

#[test]
fn symmetric_irreducibility_matches_brute_force() {
    let omegas = symmetric_omegas();
    let mut inputs = omegas.clone();
    for a in &omegas {
        for b in &omegas {
            inputs.push(a * b);
        }
    }
    inputs.push(&(&omegas[0] * &omegas[1]) * &omegas[2]);
    for omega in inputs {
        let f = factor(&omega).unwrap();
        let brute = f.factor_count() == 1 || !splits_symmetrically(&f.factors);
        assert_eq!(
            is_symmetrically_irreducible(&omega).unwrap(),
            brute,
            "{omega}"
        );
    }
}

#[test]
fn unplaceable_factors_form_one_symmetric_part() {
    // a * sigma(a) is symmetric although neither factor can be placed
    let a: BivariateLaurent = "s*t + 2".parse().unwrap();
    let omega = &a * &a.sigma();
    assert!(omega.is_symmetric());
    let f = factor(&omega).unwrap();
    assert_eq!(f.factor_count(), 2);
    assert!(is_symmetrically_irreducible(&omega).unwrap());
    assert!(!splits_symmetrically(&f.factors));
}
