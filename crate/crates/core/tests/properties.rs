use proptest::prelude::*;
use smflab::casimir::{casimir_char, eig_fns, popov_char, translated_weyl_action};
use smflab::rational::Rational;
use smflab::repdata::{
    dynkin_polynomial, is_minuscule, weight_system, weyl_dimension, DEFAULT_CAP,
};
use smflab::tensor::{decompose_klimyk, decompose_minuscule, decompose_pieri_a};
use smflab::{Family, LieType, RootSystem, Weight};

fn classical() -> impl Strategy<Value = LieType> {
    prop_oneof![
        (1usize..=6).prop_map(LieType::a),
        (2usize..=6).prop_map(LieType::b),
        (3usize..=6).prop_map(LieType::c),
        (4usize..=6).prop_map(LieType::d),
    ]
}

fn any_small_type() -> impl Strategy<Value = LieType> {
    prop_oneof![
        (1usize..=4).prop_map(LieType::a),
        (2usize..=4).prop_map(LieType::b),
        (3usize..=4).prop_map(LieType::c),
        Just(LieType::d(4)),
        Just(LieType::g2()),
    ]
}

fn with_weight(max: i64) -> impl Strategy<Value = (LieType, Vec<i64>)> {
    classical().prop_flat_map(move |t| (Just(t), prop::collection::vec(0..=max, t.rank())))
}

fn small_with_weight(max: i64) -> impl Strategy<Value = (LieType, Vec<i64>)> {
    any_small_type()
        .prop_flat_map(move |t| (Just(t), prop::collection::vec(0..=max, t.rank())))
        .prop_filter("module within the dimension cap", |(t, a)| {
            weyl_dimension(&RootSystem::new(*t), &Weight::from_ints(a)).unwrap() <= 2000
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn popov_equals_inner_product((t, a) in with_weight(5)) {
        let rs = RootSystem::new(t);
        let w = Weight::from_ints(&a);
        prop_assert_eq!(popov_char(&rs, &w).unwrap(), casimir_char(&rs, &w));
    }

    #[test]
    fn reflections_preserve_inner_products(
        (t, a) in small_with_weight(4),
        b in prop::collection::vec(-3i64..=3, 4),
        i in 0usize..4,
    ) {
        let rs = RootSystem::new(t);
        let l = t.rank();
        let x = Weight::from_ints(&a);
        let y = Weight::from_ints(&b[..l.min(4)].iter().copied().chain(std::iter::repeat(0)).take(l).collect::<Vec<_>>());
        let i = i % l;
        let (rx, ry) = (rs.reflect(i, &x), rs.reflect(i, &y));
        prop_assert_eq!(rs.inner_product(&rx, &ry).unwrap(), rs.inner_product(&x, &y).unwrap());
        prop_assert_eq!(rs.reflect(i, &rx), x);
    }

    #[test]
    fn orbit_has_unique_dominant_member((t, a) in small_with_weight(2)) {
        let rs = RootSystem::new(t);
        let orbit = rs.weyl_orbit(&Weight::from_ints(&a)).unwrap();
        prop_assert_eq!(orbit.iter().filter(|w| w.is_dominant()).count(), 1);
        let n = rs.inner_product(&Weight::from_ints(&a), &Weight::from_ints(&a)).unwrap();
        for w in &orbit {
            prop_assert_eq!(rs.inner_product(w, w).unwrap(), n.clone());
        }
    }

    #[test]
    fn eigenvalue_multiset_is_translated_weyl_invariant(
        (t, a) in small_with_weight(1),
        nu in prop::collection::vec(-4i64..=4, 4),
        word in prop::collection::vec(0usize..4, 0..6),
    ) {
        let rs = RootSystem::new(t);
        let l = t.rank();
        let ws = weight_system(&rs, &Weight::from_ints(&a), DEFAULT_CAP).unwrap();
        let fs = eig_fns(&rs, &ws);
        let nu = Weight::from_ints(&nu.iter().copied().chain(std::iter::repeat(0)).take(l).collect::<Vec<_>>());
        let word: Vec<usize> = word.into_iter().map(|i| i % l).collect();
        let moved = translated_weyl_action(&rs, &word, &nu);
        let mut x: Vec<Rational> = fs.iter().map(|f| f.eval(&nu)).collect();
        let mut y: Vec<Rational> = fs.iter().map(|f| f.eval(&moved)).collect();
        x.sort();
        y.sort();
        prop_assert_eq!(x, y);
    }

    #[test]
    fn dynkin_polynomial_is_palindromic((t, a) in small_with_weight(2)) {
        let rs = RootSystem::new(t);
        let ws = weight_system(&rs, &Weight::from_ints(&a), DEFAULT_CAP).unwrap();
        let d = dynkin_polynomial(&rs, &ws).unwrap();
        prop_assert!(d.is_palindromic());
        prop_assert_eq!(d.value_at_one(), ws.dim());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn tensor_products_conserve_dimension(
        (t, a) in small_with_weight(1),
        b in prop::collection::vec(0i64..=2, 4),
    ) {
        let rs = RootSystem::new(t);
        let l = t.rank();
        let nu = Weight::from_ints(&b[..l.min(4)].iter().copied().chain(std::iter::repeat(0)).take(l).collect::<Vec<_>>());
        let lam = Weight::from_ints(&a);
        let d = decompose_klimyk(&rs, &lam, &nu, DEFAULT_CAP).unwrap();
        prop_assert!(d.conserves_dimension(&rs));
        prop_assert!(d.summands.iter().all(|s| s.mult > 0));
    }

    #[test]
    fn klimyk_agrees_with_minuscule_and_pieri(
        (t, a) in small_with_weight(1),
        b in prop::collection::vec(0i64..=3, 4),
        k in 1u32..=3,
    ) {
        let rs = RootSystem::new(t);
        let l = t.rank();
        let nu = Weight::from_ints(&b[..l.min(4)].iter().copied().chain(std::iter::repeat(0)).take(l).collect::<Vec<_>>());
        let lam = Weight::from_ints(&a);
        if is_minuscule(&rs, &lam) {
            let m = decompose_minuscule(&rs, &lam, &nu).unwrap();
            let k = decompose_klimyk(&rs, &lam, &nu, DEFAULT_CAP).unwrap();
            prop_assert_eq!(m.as_map(), k.as_map());
        }
        if t.family() == Family::A {
            let p = decompose_pieri_a(&rs, k, &nu).unwrap();
            let mut sym = vec![0; l];
            sym[0] = k as i64;
            let k = decompose_klimyk(&rs, &Weight::from_ints(&sym), &nu, DEFAULT_CAP).unwrap();
            prop_assert_eq!(p.as_map(), k.as_map());
        }
    }
}

#[test]
fn weyl_dimension_matches_weight_count() {
    for t in [LieType::a(3), LieType::b(3), LieType::c(3), LieType::d(4), LieType::g2()] {
        let rs = RootSystem::new(t);
        for a in smflab::collisions::box_weights(t.rank(), 1) {
            let w = Weight::from_ints(&a);
            let ws = weight_system(&rs, &w, DEFAULT_CAP).unwrap();
            assert_eq!(ws.dim(), weyl_dimension(&rs, &w).unwrap(), "{t} {a:?}");
        }
    }
}
