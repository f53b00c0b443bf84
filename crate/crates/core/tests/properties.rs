use flagk::cohomology::{bgg_partial, PolyClass};
use flagk::laurent::{demazure_character, demazure_l, demazure_t, demazure_t_elt, LaurentPoly};
use flagk::pieri::{expand, path_rows, restrict_paths, verify_operator_identity};
use flagk::weyl::bruhat_leq;
use flagk::{PathModel, Rational, RootSystem, WeylElt};
use proptest::prelude::*;

const RANK2: [(&str, usize); 3] = [("A", 2), ("B", 2), ("G", 2)];
const SMALL: [(&str, usize); 6] = [("A", 2), ("B", 2), ("G", 2), ("A", 3), ("C", 3), ("B", 3)];

fn system(table: &'static [(&str, usize)]) -> impl Strategy<Value = RootSystem> {
    (0..table.len()).prop_map(move |i| RootSystem::build(table[i].0, table[i].1).unwrap())
}

fn weight(rank: usize, bound: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-bound..=bound, rank)
}

fn laurent(rank: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((weight(rank, 3), -5i64..=5, 1i64..=3), 0..5).prop_map(move |terms| {
        LaurentPoly::from_terms(rank, terms.into_iter().map(|(mu, p, q)| (mu, Rational::new(p, q))))
    })
}

fn poly(rank: usize) -> impl Strategy<Value = PolyClass> {
    prop::collection::vec((prop::collection::vec(0u32..3, rank), -5i64..=5, 1i64..=3), 0..5).prop_map(move |terms| {
        let mut p = PolyClass::zero(rank);
        for (e, a, b) in terms {
            p.add_term(e, Rational::new(a, b));
        }
        p
    })
}

fn with_word(table: &'static [(&str, usize)]) -> impl Strategy<Value = (RootSystem, Vec<usize>)> {
    system(table).prop_flat_map(|rs| {
        let n = rs.rank();
        (Just(rs), prop::collection::vec(1..=n, 0..8))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn simple_reflections_are_involutions((rs, mu) in system(&SMALL).prop_flat_map(|rs| { let n = rs.rank(); (Just(rs), weight(n, 6)) })) {
        for j in 0..rs.rank() {
            prop_assert_eq!(rs.reflect_int(j, &rs.reflect_int(j, &mu)), mu.clone());
        }
    }

    #[test]
    fn group_laws((rs, word) in with_word(&SMALL)) {
        let w = WeylElt::from_word(&rs, &word).unwrap();
        let inv = w.inverse(&rs);
        prop_assert!(w.mul(&rs, &inv).is_identity());
        prop_assert_eq!(w.length(), w.inversion_count(&rs));
        prop_assert_eq!(inv.length(), w.length());
        prop_assert!(w.length() <= word.len());
        prop_assert_eq!(w.length() % 2, word.len() % 2);
        let again = WeylElt::from_reduced_word(&rs, w.word()).unwrap();
        prop_assert_eq!(&again, &w);
    }

    #[test]
    fn bruhat_respects_inverse_and_prefixes((rs, a, b) in with_word(&RANK2).prop_flat_map(|(rs, a)| { let n = rs.rank(); (Just(rs), Just(a), prop::collection::vec(1..=n, 0..6)) })) {
        let v = WeylElt::from_word(&rs, &a).unwrap();
        let w = WeylElt::from_word(&rs, &b).unwrap();
        prop_assert_eq!(bruhat_leq(&rs, &v, &w), bruhat_leq(&rs, &v.inverse(&rs), &w.inverse(&rs)));
        let word = w.word();
        for k in 0..=word.len() {
            let prefix = WeylElt::from_word(&rs, &word[..k]).unwrap();
            prop_assert!(bruhat_leq(&rs, &prefix, &w));
        }
    }

    #[test]
    fn demazure_operator_identities((rs, f, mu) in system(&RANK2).prop_flat_map(|rs| { let n = rs.rank(); (Just(rs), laurent(n), weight(n, 3)) })) {
        let e_mu = LaurentPoly::monomial(mu.clone());
        let rho = rs.rho().to_vec();
        let neg_rho: Vec<i64> = rho.iter().map(|x| -x).collect();
        for j in 1..=rs.rank() {
            let t = demazure_t(&rs, j, &f);
            prop_assert_eq!(&t.reflect(&rs, j), &t);
            prop_assert_eq!(&demazure_t(&rs, j, &t), &t);
            prop_assert_eq!(&demazure_l(&rs, j, &f.shift(&rho)).shift(&neg_rho), &t);
            let inv = &e_mu + &e_mu.reflect(&rs, j);
            prop_assert_eq!(demazure_t(&rs, j, &(&inv * &f)), &inv * &t);
            let smu = rs.reflect_int(j - 1, &mu);
            let rhs = &demazure_t(&rs, j, &f.shift(&smu)) + &(&demazure_l(&rs, j, &e_mu) * &f);
            prop_assert_eq!(&e_mu * &t, rhs);
        }
    }

    #[test]
    fn weyl_action_is_multiplicative((rs, word, f, g) in with_word(&RANK2).prop_flat_map(|(rs, w)| { let n = rs.rank(); (Just(rs), Just(w), laurent(n), laurent(n)) })) {
        let w = WeylElt::from_word(&rs, &word).unwrap();
        prop_assert_eq!((&f * &g).weyl_act(&w), &f.weyl_act(&w) * &g.weyl_act(&w));
        prop_assert_eq!((&f + &g).epsilon(), f.epsilon() + g.epsilon());
    }

    #[test]
    fn laurent_json_round_trip(f in laurent(3)) {
        let json = serde_json::to_string(&f).unwrap();
        let back: LaurentPoly = serde_json::from_str(&json).unwrap();
        // the empty term list carries no rank
        if f.is_zero() {
            prop_assert!(back.is_zero());
        } else {
            prop_assert_eq!(back, f);
        }
    }

    #[test]
    fn poly_json_round_trip(f in poly(3)) {
        let json = serde_json::to_string(&f).unwrap();
        let back: PolyClass = serde_json::from_str(&json).unwrap();
        if f.is_zero() {
            prop_assert!(back.is_zero());
        } else {
            prop_assert_eq!(back, f);
        }
    }

    #[test]
    fn bgg_partials((rs, f, g) in system(&SMALL).prop_flat_map(|rs| { let n = rs.rank(); (Just(rs), poly(n), poly(n)) })) {
        for j in 1..=rs.rank() {
            let d = bgg_partial(&rs, j, &f).unwrap();
            prop_assert!(bgg_partial(&rs, j, &d).unwrap().is_zero());
            let inv = &f + &f.reflect(&rs, j);
            prop_assert_eq!(bgg_partial(&rs, j, &(&inv * &g)).unwrap(), &inv * &bgg_partial(&rs, j, &g).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn path_model_matches_characters((rs, lambda) in system(&RANK2).prop_flat_map(|rs| { let n = rs.rank(); (Just(rs), prop::collection::vec(0i64..=2, n)) })) {
        let pm = PathModel::new(&rs, &lambda).unwrap();
        let paths = pm.generate().unwrap();
        prop_assert_eq!(paths.len(), pm.dimension());
        let chi = pm.character().unwrap();
        let dem = demazure_character(&rs, &lambda).unwrap();
        prop_assert!(dem.is_w_invariant(&rs));
        prop_assert_eq!(dem.coeff(&lambda), Rational::from_integer(1));
        prop_assert_eq!(&chi, &dem);
        for p in &paths {
            prop_assert!(pm.is_valid(p));
            prop_assert_eq!(&pm.from_record(&p.to_record()).unwrap(), p);
            for j in 1..=rs.rank() {
                if let Some(q) = pm.f_op(j, p).unwrap() {
                    let back = pm.e_op(j, &q).unwrap();
                    prop_assert_eq!(back.as_ref(), Some(p));
                }
            }
        }
    }

    #[test]
    fn expansions_are_sane((rs, lambda, word) in system(&RANK2).prop_flat_map(|rs| { let n = rs.rank(); (Just(rs), prop::collection::vec(0i64..=2, n), prop::collection::vec(1..=n, 0..7)) })) {
        let pm = PathModel::new(&rs, &lambda).unwrap();
        let w = WeylElt::from_word(&rs, &word).unwrap();
        let e = expand(&pm, &w).unwrap();
        prop_assert!(e.check_invariants(&rs).is_ok());
        let rows = path_rows(&pm, &restrict_paths(&pm, &pm.generate().unwrap(), &w), &w).unwrap();
        let probes: Vec<LaurentPoly> = vec![LaurentPoly::one(2), LaurentPoly::monomial(vec![1, -1]), LaurentPoly::monomial(vec![-2, 1])];
        prop_assert!(verify_operator_identity(&pm, &w, &rows, &probes).holds);
        // T_{w⁻¹} e^0 = 1 shifted by λ on the left side.
        let lhs = demazure_t_elt(&rs, &w.inverse(&rs), &LaurentPoly::one(2)).shift(&lambda);
        prop_assert_eq!(lhs, LaurentPoly::monomial(lambda.clone()));
    }
}
