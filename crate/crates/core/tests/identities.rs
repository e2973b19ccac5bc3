//! Cross-module identities over every small word, plus randomized checks.

use proptest::prelude::*;
use tasep::lgv::det_formula_enumerated;
use tasep::paths::enumerate_paths;
use tasep::{
    det_formula, enumerate_tableaux, sum_weights, CatalanPath, LaurentPoly, Shape, StateWord,
};

#[test]
fn tableaux_paths_and_determinant_agree() {
    for n in 1..=7 {
        for tau in StateWord::all(n) {
            let by_tableaux = sum_weights(&tau);
            let by_paths: LaurentPoly = enumerate_paths(&Shape::of_word(&tau))
                .iter()
                .map(CatalanPath::weight)
                .sum();
            assert_eq!(by_tableaux, by_paths, "{tau}");
            assert_eq!(by_tableaux, det_formula(&tau), "{tau}");
            assert_eq!(by_tableaux, det_formula_enumerated(&tau), "{tau}");
        }
    }
}

#[test]
fn numerators_are_polynomials_of_bounded_degree() {
    // no negative powers survive the prefactor, and total degree lies in [n, 2n]
    for n in 1..=7 {
        for tau in StateWord::all(n) {
            let p = det_formula(&tau);
            assert!(!p.has_negative_exponents(), "{tau}: {p}");
            let (lo, hi) = p.total_degree_range().unwrap();
            assert!(lo >= n as i64 && hi <= 2 * n as i64, "{tau}: {p}");
        }
    }
}

fn word() -> impl Strategy<Value = StateWord> {
    prop::collection::vec(any::<bool>(), 1..=9).prop_map(StateWord::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn determinant_matches_tableau_sum(tau in word()) {
        prop_assert_eq!(sum_weights(&tau), det_formula(&tau));
    }

    #[test]
    fn bijection_roundtrips(tau in word()) {
        for t in enumerate_tableaux(&tau) {
            let c = CatalanPath::from_tableau(&t).unwrap();
            prop_assert_eq!(c.weight(), t.weight());
            prop_assert_eq!(c.to_tableau(), t);
        }
    }

    #[test]
    fn word_shape_roundtrip(tau in word()) {
        prop_assert_eq!(Shape::of_word(&tau).to_word(), tau);
    }
}
