use proptest::prelude::*;
use qschur::laurent::{
    compositions, gauss_sq, gauss_sym, vec_gauss_sym, IntVectorN, LaurentFraction, LaurentScalar,
};

fn scalar() -> impl Strategy<Value = LaurentScalar> {
    prop::collection::vec((-6i32..=6, -5i64..=5), 0..5).prop_map(LaurentScalar::from_terms)
}

fn nonzero_scalar() -> impl Strategy<Value = LaurentScalar> {
    scalar().prop_filter("nonzero", |x| !x.is_zero())
}

#[test]
fn gaussian_values() {
    // ⟦3 over 1⟧ = 1 + v^2 + v^4
    assert_eq!(
        gauss_sq(3, 1),
        LaurentScalar::from_terms([(0, 1), (2, 1), (4, 1)])
    );
    // [4 over 2] = v^-4 + v^-2 + 2 + v^2 + v^4
    assert_eq!(
        gauss_sym(4, 2),
        LaurentScalar::from_terms([(-4, 1), (-2, 1), (0, 2), (2, 1), (4, 1)])
    );
    assert!(gauss_sq(5, 0).is_one());
    assert!(gauss_sq(2, 3).is_zero());
    // ⟦-1 over 1⟧ = (v^-2 - 1)/(v^2 - 1) = -v^-2
    assert_eq!(gauss_sq(-1, 1), LaurentScalar::monomial(-1, -2));
}

#[test]
fn vector_gaussians() {
    let mu = IntVectorN::new(vec![2, 1]);
    let lambda = IntVectorN::new(vec![1, 1]);
    assert_eq!(vec_gauss_sym(&mu, &lambda), gauss_sym(2, 1));
    assert!(vec_gauss_sym(&lambda, &mu).is_zero());
}

#[test]
fn composition_counts() {
    assert_eq!(compositions(3, 4).len(), 15);
    assert_eq!(compositions(2, 0).len(), 1);
    assert!(compositions(2, -1).is_empty());
}

#[test]
fn fractions_reduce() {
    let v = LaurentScalar::v();
    let one = LaurentScalar::one();
    let num = &v.pow(2) - &one;
    let den = &v - &one;
    let f = LaurentFraction::new(num, den).unwrap();
    assert_eq!(f.as_laurent(), Some(&v + &one));
    assert!(LaurentFraction::new(one, LaurentScalar::zero()).is_err());
}

#[test]
fn evaluation() {
    let x = LaurentScalar::from_terms([(0, 1), (1, 1)]);
    assert_eq!(x.eval(2), Some(3));
    assert_eq!(LaurentScalar::v_pow(-1).eval(2), None);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, LaurentScalar::zero());
        prop_assert_eq!(&a * &LaurentScalar::one(), a.clone());
    }
}

proptest! {
    #[test]
    fn q_pascal(big_n in -6i64..12, t in 1i64..8) {
        let rhs = &gauss_sq(big_n - 1, t) + &gauss_sq(big_n - 1, t - 1).shift(2 * (big_n - t) as i32);
        prop_assert_eq!(gauss_sq(big_n, t), rhs);
    }

    #[test]
    fn bar_is_an_involutive_ring_map(a in scalar(), b in scalar()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
    }

    #[test]
    fn symmetric_gaussians_are_bar_invariant(big_n in 0i64..10, t in 0i64..10) {
        let g = gauss_sym(big_n, t);
        prop_assert_eq!(g.bar(), g);
    }

    #[test]
    fn division_round_trip(a in scalar(), d in nonzero_scalar()) {
        let p = &a * &d;
        prop_assert_eq!(p.div_exact(&d), Some(a));
    }

    #[test]
    fn fraction_field(a in scalar(), b in nonzero_scalar(), c in scalar(), d in nonzero_scalar()) {
        let x = LaurentFraction::new(a, b).unwrap();
        let y = LaurentFraction::new(c, d).unwrap();
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!((&x * &y).bar(), &x.bar() * &y.bar());
    }

    #[test]
    fn gcd_contains_common_factor(
        a in prop::collection::vec((0i32..=14, -9i64..=9), 1..9).prop_map(LaurentScalar::from_terms),
        b in prop::collection::vec((0i32..=14, -9i64..=9), 1..9).prop_map(LaurentScalar::from_terms),
        g in nonzero_scalar(),
    ) {
        let (x, y) = (&a * &g, &b * &g);
        let d = x.gcd(&y);
        if !x.is_zero() {
            prop_assert!(x.div_exact(&d).is_some());
            prop_assert!(d.div_exact(&g).is_some());
        }
        if !y.is_zero() {
            prop_assert!(y.div_exact(&d).is_some());
        }
    }

    #[test]
    fn scalar_json_round_trip(a in scalar()) {
        let s = serde_json::to_string(&a).unwrap();
        let back: LaurentScalar = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, a);
    }
}
