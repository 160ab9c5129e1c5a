use proptest::prelude::*;

use p4surf_core::fn_systems::{f_a_range, FixedDegreeDerivation, SIEVE_A_RANGE};
use p4surf_core::*;

fn class(r: usize) -> impl Strategy<Value = DivisorClass> {
    (-100i64..=100, -100i64..=100, prop::collection::vec(-100i64..=100, r))
        .prop_map(|(a, b, m)| DivisorClass::new(a, b, m))
}

fn surface_and_classes() -> impl Strategy<Value = (SurfaceModel, DivisorClass, DivisorClass, DivisorClass)> {
    (0u32..=50, 0usize..=20)
        .prop_flat_map(|(n, r)| (Just(SurfaceModel::new(n, r)), class(r), class(r), class(r)))
}

proptest! {
    #[test]
    fn intersection_is_symmetric_and_bilinear((s, x, y, z) in surface_and_classes()) {
        let xy = intersect(&x, &y, &s).unwrap();
        prop_assert_eq!(xy, intersect(&y, &x, &s).unwrap());
        let yz = y.checked_add(&z).unwrap();
        prop_assert_eq!(
            intersect(&x, &yz, &s).unwrap(),
            xy + intersect(&x, &z, &s).unwrap()
        );
    }

    #[test]
    fn adjunction_numerator_is_even((s, x, _, _) in surface_and_classes()) {
        // K is characteristic: D·D ≡ D·K (mod 2).
        prop_assert!(adjunction_genus(&x, &s).is_ok());
    }

    #[test]
    fn simple_system_degree(a in -20i64..=20, b in -20i64..=20, n in 0u32..=10, r in 0usize..=30) {
        let s = SurfaceModel::new(n, r);
        let h = DivisorClass::simple_base_points(a, b, r);
        let n = i64::from(n);
        let r = r as i64;
        prop_assert_eq!(intersect(&h, &h, &s).unwrap(), -a * a * n + 2 * a * b - r);
        prop_assert_eq!(adjunction_genus(&h, &s).unwrap(), sectional_genus(a, b, n).unwrap());
    }

    #[test]
    fn genus_numerator_parity(a in -10_000i64..=10_000, b in -10_000i64..=10_000, n in 0i64..=10_000) {
        let num = -a * a * n + a * n - 2 * a + 2 * a * b - 2 * b;
        prop_assert_eq!(num.rem_euclid(2), 0);
        prop_assert_eq!(sectional_genus(a, b, n).unwrap(), 1 + num / 2);
    }

    #[test]
    fn residual_is_forced_b_defect(a in -30i64..=30, b in -60i64..=60, n in 0i64..=12, r in 0i64..=80) {
        let d = degree(a, b, n, r).unwrap();
        let residual = double_point_residual(a, b, n, r).unwrap();
        let defect = p4surf_core::invariants::forced_b_numerator(a, d, n).unwrap()
            - b * p4surf_core::invariants::forced_b_denominator(a).unwrap();
        prop_assert_eq!(residual, defect);
    }

    #[test]
    fn g_dichotomy(d in 13i64..=2000) {
        let g = max_genus_g(d).unwrap();
        prop_assert!(strict_eighth_bound(d, g).unwrap().holds || g * 8 - 8 == d * d);
        prop_assert!(!strict_eighth_bound(d, g + 1).unwrap().holds || g + 1 < 1 + d * d / 8 + 1);
    }

    #[test]
    fn oracle_grows_monotonically(b_hi in 5i64..=40, n_hi in 0i64..=4, r_hi in 10i64..=60, extra in 1i64..=20) {
        let small = SearchBox { a: 3..=9, b: 0..=b_hi, n: 0..=n_hi, r: 0..=r_hi, d_min: 1 };
        let big = SearchBox { b: 0..=b_hi + extra, n: 0..=n_hi + 1, r: 0..=r_hi + extra, ..small.clone() };
        let s = oracle_enumerate(&small).unwrap();
        let l = oracle_enumerate(&big).unwrap();
        prop_assert!(s.is_subset(&l));
    }
}

#[test]
fn canonical_square_grid() {
    for n in 0..=50 {
        for r in 0..=200 {
            let s = SurfaceModel::new(n, r);
            let k = canonical_class(&s);
            assert_eq!(intersect(&k, &k, &s), Ok(8 - r as i64), "n={n} r={r}");
        }
    }
}

#[test]
fn oracle_tuples_obey_forced_b() {
    let bx = SearchBox { a: 2..=12, b: 0..=70, n: 0..=6, r: 0..=120, d_min: 1 };
    let tuples = oracle_enumerate(&bx).unwrap();
    assert!(!tuples.is_empty());
    for t in &tuples {
        assert_eq!(solve_b(t.a, t.d, t.n), Ok(Some(t.b)), "{t:?}");
        assert_eq!(sectional_genus(t.a, t.b, t.n), Ok(t.pi));
        assert_eq!(double_point_residual(t.a, t.b, t.n, t.r), Ok(0));
        // a >= 10 never passes the eighth bound.
        assert!(t.a <= 9, "{t:?}");
    }
}

#[test]
fn emitted_solutions_satisfy_relations() {
    let class = classify_fn_systems(&FnOptions { n_window: 0..=40, ..FnOptions::default() }).unwrap();
    for c in &class.candidates {
        assert!(!c.b_solutions.is_empty(), "({}, {})", c.a, c.d);
        for s in &c.b_solutions {
            assert_eq!(degree(c.a, s.b, s.n, s.r), Ok(c.d));
            assert_eq!(double_point_residual(c.a, s.b, s.n, s.r), Ok(0));
            assert_eq!(sectional_genus(c.a, s.b, s.n).ok(), c.pi);
            assert!(s.r >= 0);
        }
        assert_ne!(f_a(c.a, c.d).unwrap(), 0);
    }
}

#[test]
fn genus_and_r_constant_for_every_sieve_pair() {
    for a in SIEVE_A_RANGE {
        for d in f_a_range(a, false).unwrap() {
            let der = FixedDegreeDerivation::derive(a, d).unwrap();
            if der.n_progression.is_some() {
                assert!(der.r.is_some() && der.pi.is_some(), "a={a} d={d}");
            }
        }
    }
}
