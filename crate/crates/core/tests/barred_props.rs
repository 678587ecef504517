mod common;

use knotprime::barred::{
    barcode_via_ranks, counts, decompose, decompose_via_ranks, predict_sum_counts, reduce, tensor,
    BarCounts,
};
use knotprime::{BivariateLaurent, FilteredComplex, Generator};
use proptest::prelude::*;

fn negate_exponents(p: &BivariateLaurent) -> BivariateLaurent {
    BivariateLaurent::from_terms(p.terms().map(|((i, j), c)| ((-i, -j), c.clone())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn random_complexes_are_knot_like(seed in any::<u64>()) {
        let c = common::random_knot_complex(&mut common::rng(seed), 12, 20);
        prop_assert!(c.len() <= 12);
        prop_assert_eq!(c.validate(), Ok(()));
    }

    #[test]
    fn reduction_matches_rank_oracle(seed in any::<u64>()) {
        let c = common::random_knot_complex(&mut common::rng(seed), 12, 20);
        prop_assert_eq!(reduce(&c).unwrap(), barcode_via_ranks(&c).unwrap());
    }

    #[test]
    fn decomposition_matches_rank_oracle_without_validation(seed in any::<u64>()) {
        // several free generators in arbitrary gradings
        let mut rng = common::rng(seed);
        let a = common::random_knot_complex(&mut rng, 7, 10);
        let b = common::random_knot_complex(&mut rng, 7, 10).mirror();
        let mut gens = a.generators().to_vec();
        let mut arrows = a.differentials();
        for g in b.generators() {
            gens.push(Generator::new(format!("m{}", g.id), g.maslov + 1, g.alexander));
        }
        for (x, y) in b.differentials() {
            arrows.push((format!("m{x}"), format!("m{y}")));
        }
        let c = FilteredComplex::new(gens, arrows).unwrap();
        prop_assert_eq!(decompose(&c), decompose_via_ranks(&c));
    }

    #[test]
    fn basis_changes_preserve_reduction(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let c = common::random_knot_complex(&mut rng, 12, 0);
        let changed = common::random_basis_changes(&mut rng, &c, 25);
        prop_assert_eq!(changed.validate(), Ok(()));
        prop_assert_eq!(reduce(&changed).unwrap(), reduce(&c).unwrap());
        prop_assert_eq!(changed.omega(), c.omega());
    }

    #[test]
    fn tensor_counts_follow_sum_formula(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let a = common::random_knot_complex(&mut rng, 12, 15);
        let b = common::random_knot_complex(&mut rng, 12, 15);
        let sum = reduce(&tensor(&a, &b)).unwrap();
        let expected = predict_sum_counts(counts(&reduce(&a).unwrap()), counts(&reduce(&b).unwrap()));
        prop_assert_eq!(counts(&sum), expected);
        prop_assert_eq!(sum.tau, reduce(&a).unwrap().tau + reduce(&b).unwrap().tau);
    }

    #[test]
    fn omega_of_tensor_is_product(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let a = common::random_knot_complex(&mut rng, 9, 10);
        let b = common::random_knot_complex(&mut rng, 9, 10);
        prop_assert_eq!(tensor(&a, &b).omega(), &a.omega() * &b.omega());
    }

    #[test]
    fn delta_is_total_graded_rank(seed in any::<u64>()) {
        let c = common::random_knot_complex(&mut common::rng(seed), 12, 20);
        let total: usize = c.graded_ranks().values().sum();
        prop_assert_eq!(counts(&reduce(&c).unwrap()).delta, total as u64);
    }

    #[test]
    fn mirror_swaps_parities(seed in any::<u64>()) {
        let c = common::random_knot_complex(&mut common::rng(seed), 12, 20);
        let m = c.mirror();
        prop_assert_eq!(m.validate(), Ok(()));
        let (a, b) = (reduce(&c).unwrap(), reduce(&m).unwrap());
        prop_assert_eq!(b.tau, -a.tau);
        let (ca, cb) = (counts(&a), counts(&b));
        prop_assert_eq!((cb.delta, cb.b_even, cb.b_odd), (ca.delta, ca.b_odd, ca.b_even));
        prop_assert_eq!(m.omega(), negate_exponents(&c.omega()));
    }

    #[test]
    fn predicted_counts_are_consistent(
        a in (0u64..20, 0u64..20),
        b in (0u64..20, 0u64..20),
    ) {
        let x = BarCounts::new(1 + 2 * (a.0 + a.1), a.0, a.1).unwrap();
        let y = BarCounts::new(1 + 2 * (b.0 + b.1), b.0, b.1).unwrap();
        let z = predict_sum_counts(x, y);
        prop_assert!(BarCounts::new(z.delta, z.b_even, z.b_odd).is_ok());
        prop_assert_eq!(predict_sum_counts(y, x), z);
    }
}

#[test]
fn fixture_counts() {
    let expect = [
        ("t23.json", (3, 1, 0, 1)),
        ("mt23.json", (3, 0, 1, -1)),
        ("fig8.json", (5, 1, 1, 0)),
        ("t25.json", (5, 2, 0, 2)),
        ("mt25.json", (5, 0, 2, -2)),
        ("t27.json", (7, 3, 0, 3)),
        ("unknot.json", (1, 0, 0, 0)),
        ("granny.json", (9, 3, 1, 2)),
        ("square.json", (9, 2, 2, 0)),
        ("t23_fig8.json", (15, 4, 3, 1)),
    ];
    for (file, (delta, b_even, b_odd, tau)) in expect {
        let c = common::fixture(file).complex.unwrap();
        let b = reduce(&c).unwrap();
        assert_eq!(
            counts(&b),
            BarCounts {
                delta,
                b_even,
                b_odd
            },
            "{file}"
        );
        assert_eq!(b.tau, tau, "{file}");
        assert_eq!(barcode_via_ranks(&c).unwrap(), b, "{file}");
    }
}

#[test]
fn fixture_pairs_multiply() {
    let primes = common::prime_fixtures();
    for a in &primes {
        for b in &primes {
            let (ca, cb) = (a.complex.as_ref().unwrap(), b.complex.as_ref().unwrap());
            assert_eq!(
                tensor(ca, cb).omega(),
                &a.omega() * &b.omega(),
                "{} # {}",
                a.name,
                b.name
            );
        }
    }
}
