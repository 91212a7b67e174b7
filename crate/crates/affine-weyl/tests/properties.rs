//! Property tests over randomly generated group elements.

use affine_weyl::conj_classes::{classify, standard_element, DPPair};
use affine_weyl::hecke::class_polynomials;
use affine_weyl::newton::{f_invariant, is_good, is_good_by_powers, NewtonInv};
use affine_weyl::reduction::{is_terminal, reduce_to_minimal, ClassLengthCache, ReductionPath};
use affine_weyl::weyl_core::{ball, length, simple_indices, simple_reflection, OmegaScope};
use affine_weyl::{Exec, GroupElement, SignedPerm, WeylType};
use proptest::prelude::*;

fn weyl_type() -> impl Strategy<Value = WeylType> {
    prop::sample::select(WeylType::ALL.to_vec())
}

/// An element of the given type and rank with `χ` entries in `[-2, 2]`,
/// shifted by `(½, …, ½)` at random in types C and D unless
/// `integral_only` is set.
fn element_of(ty: WeylType, n: usize, integral_only: bool) -> impl Strategy<Value = GroupElement> {
    let images = Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle();
    let signs = prop::collection::vec(any::<bool>(), n);
    let chi = prop::collection::vec(-2i64..=2, n);
    let half = if integral_only || !matches!(ty, WeylType::C | WeylType::D) {
        Just(false).boxed()
    } else {
        any::<bool>().boxed()
    };
    (images, signs, chi, half).prop_map(move |(images, signs, chi, half)| {
        let images: Vec<i32> = images
            .into_iter()
            .zip(signs)
            .map(|(i, s)| if s && ty != WeylType::A { -i } else { i })
            .collect();
        let trans2 = chi.iter().map(|x| 2 * x + half as i64).collect();
        GroupElement::new(ty, trans2, SignedPerm::new(images).unwrap()).unwrap()
    })
}

fn group_and_rank() -> impl Strategy<Value = (WeylType, usize)> {
    weyl_type().prop_flat_map(|ty| (Just(ty), ty.min_rank()..=3))
}

fn element(integral_only: bool) -> impl Strategy<Value = GroupElement> {
    group_and_rank().prop_flat_map(move |(ty, n)| element_of(ty, n, integral_only))
}

fn triple() -> impl Strategy<Value = (GroupElement, GroupElement, GroupElement)> {
    group_and_rank().prop_flat_map(|(ty, n)| (element_of(ty, n, false), element_of(ty, n, false), element_of(ty, n, false)))
}

fn pair() -> impl Strategy<Value = (GroupElement, GroupElement)> {
    group_and_rank().prop_flat_map(|(ty, n)| (element_of(ty, n, true), element_of(ty, n, false)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative_with_inverses((x, y, z) in triple()) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert!(x.mul(&x.inverse()).is_identity());
        prop_assert!(x.inverse().mul(&x).is_identity());
    }

    #[test]
    fn length_is_inverse_invariant_and_subadditive((x, y, _z) in triple()) {
        prop_assert_eq!(length(&x), length(&x.inverse()));
        prop_assert!(length(&x.mul(&y)) <= length(&x) + length(&y));
    }

    #[test]
    fn simple_reflections_change_length_by_one(w in element(false)) {
        let (ty, n) = (w.weyl_type(), w.n());
        for i in simple_indices(ty, n) {
            let s = simple_reflection(ty, n, i).unwrap();
            let (l, ls, lr) = (length(&w) as i64, length(&s.mul(&w)) as i64, length(&w.mul(&s)) as i64);
            prop_assert_eq!((ls - l).abs(), 1);
            prop_assert_eq!((lr - l).abs(), 1);
        }
    }

    #[test]
    fn element_json_round_trips(w in element(false)) {
        prop_assert_eq!(GroupElement::from_json(&w.to_json()).unwrap(), w);
    }

    #[test]
    fn classify_is_a_conjugacy_invariant((w, x) in pair()) {
        prop_assert_eq!(classify(&w.conj_by(&x)).unwrap(), classify(&w).unwrap());
    }

    #[test]
    fn labels_round_trip_through_standard_elements(w in element(true)) {
        let p = classify(&w).unwrap();
        prop_assert_eq!(DPPair::from_json(&p.to_json()).unwrap(), p.clone());
        let st = standard_element(w.weyl_type(), &p).unwrap();
        prop_assert_eq!(classify(&st).unwrap(), p);
    }

    #[test]
    fn reduction_paths_replay_and_end_terminal(w in element(false)) {
        let (m, path) = reduce_to_minimal(&w).unwrap();
        prop_assert_eq!(&path.end, &m);
        prop_assert!(path.is_nonincreasing());
        prop_assert_eq!(path.replay().unwrap(), m.clone());
        prop_assert_eq!(ReductionPath::from_json(&path.to_json()).unwrap(), path);
        prop_assert!(length(&m) <= length(&w));
        prop_assert!(is_terminal(&m).unwrap());
        if w.is_integral() {
            prop_assert_eq!(classify(&m).unwrap(), classify(&w).unwrap());
        }
    }

    #[test]
    fn newton_invariant_is_constant_on_conjugates((w, x) in pair()) {
        let inv = f_invariant(&w);
        prop_assert_eq!(f_invariant(&w.conj_by(&x)), inv.clone());
        prop_assert_eq!(NewtonInv::from_json(&inv.to_json()).unwrap(), inv);
    }

    #[test]
    fn good_matches_power_lengths(w in element(false)) {
        prop_assert_eq!(is_good(&w), is_good_by_powers(&w, 12));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn class_polynomial_tables_satisfy_their_invariants(w in element(true)) {
        let table = class_polynomials(&w).unwrap();
        let lengths = ClassLengthCache::default();
        prop_assert_eq!(table.check_invariants(&lengths).unwrap(), None);
    }
}

#[test]
fn balls_agree_across_execution_modes() {
    for (ty, n) in [(WeylType::A, 3), (WeylType::C, 2), (WeylType::D, 3)] {
        for scope in [OmegaScope::Integral, OmegaScope::All] {
            assert_eq!(
                ball(ty, n, 5, scope, Exec::Sequential).unwrap(),
                ball(ty, n, 5, scope, Exec::Parallel).unwrap()
            );
        }
    }
}
