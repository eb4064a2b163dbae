use proptest::prelude::*;

use uturn::demazure::{apply_demazure, demazure_polynomial, demazure_polynomial_with_word, CartanData};
use uturn::model::times_rho;
use uturn::patterns::{enumerate_patterns, pattern_to_state, pattern_to_tableau, tableau_to_pattern};
use uturn::{CartanType, Family, LaurentPolynomial, Model, Partition, SignedPermutation, Variables, WeylGroup};

fn poly(n: usize) -> impl Strategy<Value = LaurentPolynomial> {
    prop::collection::vec((prop::collection::vec(-3i32..=3, n), -5i64..=5), 0..5)
        .prop_map(move |terms| LaurentPolynomial::from_terms(Variables::z(n), terms))
}

fn cartan() -> impl Strategy<Value = CartanType> {
    prop_oneof![Just(CartanType::B), Just(CartanType::C)]
}

fn element(n: usize) -> impl Strategy<Value = SignedPermutation> {
    let all = SignedPermutation::all(n);
    (0..all.len()).prop_map(move |k| all[k].clone())
}

fn partition(n: usize, max: i32) -> impl Strategy<Value = Partition> {
    let all = Partition::all_up_to(n, max);
    (0..all.len()).prop_map(move |k| all[k].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(2), b in poly(2), c in poly(2)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPolynomial::one(Variables::z(2)), a.clone());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(2), b in poly(2)) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_divide(&b).unwrap(), a);
    }

    #[test]
    fn variables_carry_a_group_action(p in poly(3), u in element(3), v in element(3)) {
        let step = p.act_variables(&v).unwrap().act_variables(&u).unwrap();
        prop_assert_eq!(p.act_variables(&u.compose(&v).unwrap()).unwrap(), step);
        prop_assert_eq!(p.act_variables(&SignedPermutation::identity(3)).unwrap(), p);
    }

    #[test]
    fn demazure_operators_are_idempotent(p in poly(2), t in cartan(), i in 1usize..=2) {
        let cd = CartanData::new(t, 2);
        let once = apply_demazure(i, &p, &cd).unwrap();
        prop_assert_eq!(apply_demazure(i, &once, &cd).unwrap(), once);
    }

    #[test]
    fn demazure_braid_relations(p in poly(3), t in cartan()) {
        let cd = CartanData::new(t, 3);
        let word = |w: &[usize]| w.iter().rev().fold(p.clone(), |f, &i| apply_demazure(i, &f, &cd).unwrap());
        prop_assert_eq!(word(&[1, 2, 1]), word(&[2, 1, 2]));
        prop_assert_eq!(word(&[2, 3, 2, 3]), word(&[3, 2, 3, 2]));
        prop_assert_eq!(word(&[1, 3]), word(&[3, 1]));
    }

    #[test]
    fn reduced_words_give_one_polynomial(w in element(3), l in partition(3, 3), t in cartan()) {
        let cd = CartanData::new(t, 3);
        let expected = demazure_polynomial(&w, &l, &cd).unwrap();
        for word in WeylGroup::new(3).all_reduced_words(&w).iter().take(12) {
            prop_assert_eq!(&demazure_polynomial_with_word(word, &l, &cd).unwrap(), &expected);
        }
    }

    #[test]
    fn bruhat_order_is_a_partial_order(x in element(3), y in element(3), z in element(3)) {
        let g = WeylGroup::new(3);
        prop_assert!(g.bruhat_leq(&x, &x));
        if g.bruhat_leq(&x, &y) && g.bruhat_leq(&y, &x) {
            prop_assert_eq!(&x, &y);
        }
        if g.bruhat_leq(&x, &y) && g.bruhat_leq(&y, &z) {
            prop_assert!(g.bruhat_leq(&x, &z));
        }
        prop_assert!(g.bruhat_leq(&SignedPermutation::identity(3), &x));
        prop_assert!(g.bruhat_leq(&x, &SignedPermutation::longest(3)));
    }

    #[test]
    fn extra_columns_do_not_change_the_model(
        w in element(2), l in partition(2, 3), t in cartan(), extra in 1usize..=2,
        family in prop_oneof![Just(Family::Atom), Just(Family::Character)],
    ) {
        let plain = Model::new(&l, &w, family, t).unwrap();
        let wide = Model::with_padding(&l, &w, family, t, extra).unwrap();
        prop_assert_eq!(plain.partition_function(), wide.partition_function());
        prop_assert_eq!(plain.count_states(), wide.count_states());
    }

    #[test]
    fn state_sets_agree_across_types(w in element(3), l in partition(3, 3)) {
        for family in [Family::Atom, Family::Character] {
            let b = Model::new(&l, &w, family, CartanType::B).unwrap().enumerate_states();
            let c = Model::new(&l, &w, family, CartanType::C).unwrap().enumerate_states();
            prop_assert_eq!(b, c);
        }
    }

    #[test]
    fn full_character_is_symmetric(l in partition(2, 4), t in cartan(), u in element(2)) {
        let cd = CartanData::new(t, 2);
        let z = Model::new(&l, &SignedPermutation::longest(2), Family::Character, t).unwrap().partition_function();
        let rho = times_rho(&LaurentPolynomial::one(cd.vars()), &cd);
        let chi = z.exact_divide(&rho).unwrap();
        prop_assert_eq!(chi.act_variables(&u).unwrap(), chi);
    }

    #[test]
    fn pattern_round_trips(l in partition(2, 4), t in cartan(), pick in any::<prop::sample::Index>()) {
        let pats = enumerate_patterns(&l, 2, t).unwrap();
        let p = &pats[pick.index(pats.len())];
        let tab = pattern_to_tableau(p, t).unwrap();
        prop_assert_eq!(&tableau_to_pattern(&tab).unwrap(), p);
        let (model, marked) = pattern_to_state(p, t).unwrap();
        let back = uturn::patterns::marked_state_to_pattern(&model, &marked.state, &marked.marks).unwrap();
        prop_assert_eq!(&back, p);
    }

    #[test]
    fn polynomial_text_and_json_round_trip(p in poly(3)) {
        prop_assert_eq!(&LaurentPolynomial::parse(&p.to_string(), Variables::z(3)).unwrap(), &p);
        prop_assert_eq!(&LaurentPolynomial::from_json(&p.to_json(), Variables::z(3)).unwrap(), &p);
    }
}
