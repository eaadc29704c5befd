mod common;

use common::params;
use dihedral_artin::dual::{
    dual_distance, dual_distance_between, dual_normal_form, dual_to_artin, is_geodesic_dual, DualNormalForm,
    DualTransition,
};
use dihedral_artin::dual_horo::{dual_psi, DualOmegaPoint};
use dihedral_artin::garside::{
    artin_distance, distance_between, is_geodesic_artin, normal_form, ArtinNormalForm, Transition,
};
use dihedral_artin::horo::{phi, psi, OmegaPoint, Tail, ZWord};
use dihedral_artin::words::{prodd, ArtinLetter, ArtinWord, Base, DualLetter, DualWord, GroupParams};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn artin_word(max_len: usize) -> impl Strategy<Value = ArtinWord> {
    prop::collection::vec(0..4usize, 0..=max_len).prop_map(|v| v.into_iter().map(|i| ArtinLetter::ALL[i]).collect())
}

fn dual_word(k: usize, max_len: usize) -> impl Strategy<Value = DualWord> {
    prop::collection::vec((1..=k, any::<bool>()), 0..=max_len)
        .prop_map(|v| v.into_iter().map(|(i, pos)| DualLetter { index: i, positive: pos }).collect())
}

fn k_and_dual_word(max_len: usize) -> impl Strategy<Value = (GroupParams, DualWord)> {
    (3..=7usize).prop_flat_map(move |k| (Just(params(k)), dual_word(k, max_len)))
}

fn k_param() -> impl Strategy<Value = GroupParams> {
    (3..=7usize).prop_map(params)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn free_reduction_is_idempotent(w in artin_word(20)) {
        let r = w.free_reduce();
        prop_assert!(r.is_freely_reduced());
        prop_assert_eq!(r.free_reduce(), r.clone());
        prop_assert!(r.len() <= w.len());
        prop_assert_eq!(r.len() % 2, w.len() % 2);
    }

    #[test]
    fn artin_words_round_trip_through_text(w in artin_word(20)) {
        prop_assert_eq!(ArtinWord::parse(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn dual_words_round_trip_through_text((p, w) in k_and_dual_word(15)) {
        prop_assert_eq!(DualWord::parse(&w.to_string(), p).unwrap(), w);
    }

    #[test]
    fn inversion_is_an_involution(w in artin_word(20), p in k_param()) {
        prop_assert_eq!(w.inverse().inverse(), w.clone());
        prop_assert!(normal_form(&w.concat(&w.inverse()), p).is_identity());
        prop_assert_eq!(artin_distance(&w, p), artin_distance(&w.inverse(), p));
    }

    #[test]
    fn artin_normal_form_round_trips(w in artin_word(24), p in k_param()) {
        let nf = normal_form(&w, p);
        prop_assert_eq!(normal_form(&nf.to_word(), p), nf.clone());
        let rebuilt = ArtinNormalForm::from_parts(p, nf.delta_exponent(), nf.factors().to_vec());
        prop_assert_eq!(rebuilt.unwrap(), nf.clone());
        prop_assert_eq!(normal_form(&w.free_reduce(), p), nf);
    }

    #[test]
    fn artin_geodesic_representative_is_geodesic(w in artin_word(24), p in k_param()) {
        let nf = normal_form(&w, p);
        let g = nf.geodesic_representative();
        prop_assert_eq!(normal_form(&g, p), nf.clone());
        prop_assert_eq!(g.len() as u64, nf.distance());
        prop_assert!(is_geodesic_artin(&g, p));
        prop_assert!(nf.distance() <= w.free_reduce().len() as u64);
    }

    #[test]
    fn artin_relation_insertion_is_invisible(w in artin_word(16), cut in 0usize..17, p in k_param()) {
        let cut = cut.min(w.len());
        let k = p.k();
        let relator = prodd(Base::A, Base::B, k).concat(&prodd(Base::B, Base::A, k).inverse());
        let mut letters = w.letters()[..cut].to_vec();
        letters.extend_from_slice(relator.letters());
        letters.extend_from_slice(&w.letters()[cut..]);
        prop_assert_eq!(normal_form(&ArtinWord::from_letters(letters), p), normal_form(&w, p));
    }

    #[test]
    fn artin_transitions_change_one_coordinate(w in artin_word(20), g in 0..4usize, p in k_param()) {
        let mut nf = normal_form(&w, p);
        let before = nf.pi();
        let t = nf.right_multiply_mut(ArtinLetter::ALL[g]);
        let after = nf.pi();
        let changed: Vec<i64> = before.iter().zip(&after).map(|(a, b)| b - a).filter(|d| *d != 0).collect();
        prop_assert_eq!(changed.len(), 1, "{:?} {:?} {:?}", t, before, after);
        let up = changed[0] == 1;
        prop_assert!(changed[0].abs() == 1);
        match t {
            Transition::Lengthen { .. } | Transition::Append => prop_assert!(up),
            Transition::Shorten | Transition::BorrowDelta => prop_assert!(!up),
        }
    }

    #[test]
    fn artin_metric_is_symmetric(x in artin_word(12), y in artin_word(12), p in k_param()) {
        prop_assert_eq!(distance_between(&x, &y, p), distance_between(&y, &x, p));
        let d = distance_between(&x, &y, p);
        prop_assert!(d <= artin_distance(&x, p) + artin_distance(&y, p));
    }

    #[test]
    fn dual_normal_form_round_trips((p, w) in k_and_dual_word(20)) {
        let nf = dual_normal_form(&w, p);
        prop_assert_eq!(dual_normal_form(&nf.to_word(), p), nf.clone());
        let rebuilt = DualNormalForm::from_parts(p, nf.delta_exponent(), nf.factors().to_vec());
        prop_assert_eq!(rebuilt.unwrap(), nf.clone());
        let g = nf.geodesic_representative();
        prop_assert_eq!(dual_normal_form(&g, p), nf.clone());
        prop_assert_eq!(g.len() as u64, nf.distance());
        prop_assert!(is_geodesic_dual(&g, p));
    }

    #[test]
    fn dual_words_agree_with_their_artin_images((p, w) in k_and_dual_word(10)) {
        let inv = dual_to_artin(&w.inverse());
        prop_assert!(normal_form(&dual_to_artin(&w).concat(&inv), p).is_identity());
    }

    #[test]
    fn dual_transitions_split_by_sign((p, w) in k_and_dual_word(20), i in 1usize..=7, pos in any::<bool>()) {
        let i = (i - 1) % p.k() + 1;
        let mut nf = dual_normal_form(&w, p);
        let [r0, t0] = nf.pi();
        let t = nf.right_multiply_mut(DualLetter { index: i, positive: pos });
        let [r1, t1] = nf.pi();
        let (dr, ds) = (r1 - r0, (t1 - r1) - (t0 - r0));
        match t {
            DualTransition::FormDelta => prop_assert_eq!((dr, ds, pos), (1, -1, true)),
            DualTransition::Append => prop_assert_eq!((dr, ds, pos), (0, 1, true)),
            DualTransition::Cancel => prop_assert_eq!((dr, ds, pos), (0, -1, false)),
            DualTransition::BorrowDelta => prop_assert_eq!((dr, ds, pos), (-1, 1, false)),
        }
    }

    #[test]
    fn sum_of_phi_is_sum_of_pi_of_inverse(w in artin_word(14), z in artin_word(20), p in k_param()) {
        let positive: ArtinWord = z.letters().iter().map(|l| ArtinLetter::pos(l.base)).collect();
        if let Ok(z) = ZWord::decompose(&positive, Tail::Finite, p) {
            let lhs: i64 = phi(&w, &z).unwrap().iter().sum();
            let rhs: i64 = normal_form(&w.inverse(), p).pi().iter().sum();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn psi_is_one_lipschitz(x in artin_word(12), w in artin_word(12), g in 0..4usize, p in k_param()) {
        let point = OmegaPoint::from_element(&normal_form(&x, p));
        let mut wg = w.clone();
        wg.push(ArtinLetter::ALL[g]);
        let diff = psi(&point, &wg).unwrap() - psi(&point, &w).unwrap();
        prop_assert!(diff.abs() <= 1);
        for q in [OmegaPoint::plus(p), OmegaPoint::minus(p)] {
            prop_assert!((psi(&q, &wg).unwrap() - psi(&q, &w).unwrap()).abs() <= 1);
        }
    }

    #[test]
    fn psi_is_a_distance_difference(x in artin_word(12), w in artin_word(10), p in k_param()) {
        let point = OmegaPoint::from_element(&normal_form(&x, p));
        let e = point.element().unwrap();
        let expected = distance_between(&w, &e, p) as i64 - artin_distance(&e, p) as i64;
        prop_assert_eq!(psi(&point, &w).unwrap(), expected);
    }

    #[test]
    fn dual_psi_is_a_distance_difference((p, x) in k_and_dual_word(12), seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let w = common::random_dual_word(&mut rng, 10, p);
        let point = DualOmegaPoint::from_element(&dual_normal_form(&x, p));
        let e = point.element().unwrap();
        let expected = dual_distance_between(&w, &e, p) as i64 - dual_distance(&e, p) as i64;
        prop_assert_eq!(dual_psi(&point, &w).unwrap(), expected);
    }

    #[test]
    fn boundary_psi_is_one_lipschitz(seed in any::<u64>(), k in 3..=5usize) {
        let mut rng = StdRng::seed_from_u64(seed);
        let p = params(k);
        let z = common::random_periodic_z(&mut rng, p);
        if let Some(point) = common::boundary_point(&mut rng, &z, 0) {
            let w = common::random_artin_word(&mut rng, 10);
            for g in ArtinLetter::ALL {
                let mut wg = w.clone();
                wg.push(g);
                prop_assert!((psi(&point, &wg).unwrap() - psi(&point, &w).unwrap()).abs() <= 1);
            }
        }
        let point = common::dual_boundary_point(&mut rng, p);
        let w = common::random_dual_word(&mut rng, 10, p);
        for g in DualLetter::all(p) {
            let mut wg = w.clone();
            wg.push(g);
            prop_assert!((dual_psi(&point, &wg).unwrap() - dual_psi(&point, &w).unwrap()).abs() <= 1);
        }
    }

    #[test]
    fn phi_of_periodic_word_matches_a_long_prefix(seed in any::<u64>(), k in 3..=5usize) {
        let mut rng = StdRng::seed_from_u64(seed);
        let p = params(k);
        let z = common::random_periodic_z(&mut rng, p);
        let long = ZWord::from_runs(z.first_runs(400).unwrap(), Tail::Finite, p).unwrap();
        let w = common::random_artin_word(&mut rng, 10);
        let stable = phi(&w, &z).unwrap();
        // Far along a long finite prefix the value agrees with the limit.
        prop_assert_eq!(phi(&w, &long).unwrap(), stable);
    }
}

#[test]
fn busemann_approach_elements_are_geodesic() {
    let mut rng = StdRng::seed_from_u64(11);
    let mut found = 0;
    while found < 30 {
        let p = params(3 + found % 3);
        let z = common::random_periodic_z(&mut rng, p);
        let Some(point) = common::boundary_point(&mut rng, &z, 0) else { continue };
        found += 1;
        for n in [5, 15, 25] {
            let x = dihedral_artin::horo::approach_element(&point, n).unwrap();
            let g = normal_form(&x, p).geodesic_representative();
            assert_eq!(normal_form(&g, p), normal_form(&x, p));
        }
    }
}
