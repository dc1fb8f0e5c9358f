use proptest::prelude::*;
use qschur::affsym::{is_min_right_coset_rep, jmath, pseudo_matrix_rep, AffinePermutation};
use qschur::afmat::PeriodicMatrix;
use qschur::hecke::{coset_product_identity_check, HeckeElement};
use qschur::laurent::{IntVectorN, LaurentScalar};

fn perm(w: &[i64]) -> AffinePermutation {
    AffinePermutation::new(w.to_vec()).unwrap()
}

#[test]
fn lengths() {
    assert_eq!(AffinePermutation::rho(3).length(), 0);
    for i in 1..=3 {
        assert_eq!(AffinePermutation::generator_s(i, 3).unwrap().length(), 1);
    }
    assert_eq!(perm(&[0, 3]).length(), 1);
    assert!(AffinePermutation::new(vec![1, 1]).is_err());
}

#[test]
fn rho_conjugation() {
    let r = 3;
    let rho = AffinePermutation::rho(r);
    for i in 1..=r {
        let s = AffinePermutation::generator_s(i, r).unwrap();
        let next = AffinePermutation::generator_s(i % r + 1, r).unwrap();
        assert_eq!(rho.compose(&s).compose(&rho.inverse()), next);
    }
}

#[test]
fn block_intersections() {
    let lambda = IntVectorN::new(vec![1, 1]);
    let id = AffinePermutation::identity(2);
    assert_eq!(
        jmath(&lambda, &id, &lambda).unwrap(),
        PeriodicMatrix::diag(&lambda)
    );
    let flip = PeriodicMatrix::from_entries(2, [(1, 2, 1), (2, 1, 1)]);
    let s1 = perm(&[2, 1]);
    assert_eq!(jmath(&lambda, &s1, &lambda).unwrap(), flip);
    let y = pseudo_matrix_rep(&flip).unwrap();
    assert_eq!(y.length(), 1);
    assert_eq!(flip.length_formula(), 1);
    assert_eq!(jmath(&lambda, &y, &lambda).unwrap(), flip);
    assert_eq!(
        jmath(&lambda, &perm(&[0, 3]), &lambda).unwrap(),
        PeriodicMatrix::from_entries(2, [(1, 0, 1), (2, 3, 1)])
    );
}

#[test]
fn coset_representatives() {
    let s1 = AffinePermutation::generator_s(1, 2).unwrap();
    assert!(!is_min_right_coset_rep(&s1, &IntVectorN::new(vec![2, 0])));
    assert!(is_min_right_coset_rep(&s1, &IntVectorN::new(vec![1, 1])));
    let d = pseudo_matrix_rep(&PeriodicMatrix::diag(&IntVectorN::new(vec![2, 1]))).unwrap();
    assert!(d.is_identity());
}

#[test]
fn quadratic_relation() {
    let v2 = LaurentScalar::v_pow(2);
    let s = HeckeElement::basis(AffinePermutation::generator_s(2, 3).unwrap());
    let rhs = &s.scale(&(&v2 - &LaurentScalar::one())) + &HeckeElement::one(3).scale(&v2);
    assert_eq!(&s * &s, rhs);
}

#[test]
fn double_coset_identity() {
    let a = PeriodicMatrix::from_entries(2, [(1, 1, 1), (1, 2, 1), (2, 2, 1)]);
    let d = pseudo_matrix_rep(&a).unwrap();
    assert!(coset_product_identity_check(&a.ro(), &d, &a.co()).unwrap());
}

fn arb_perm(r: usize) -> impl Strategy<Value = AffinePermutation> {
    (
        Just((1..=r as i64).collect::<Vec<_>>()).prop_shuffle(),
        prop::collection::vec(-1i64..=1, r),
    )
        .prop_map(move |(base, shifts)| {
            let w = base
                .iter()
                .zip(&shifts)
                .map(|(&b, &k)| b + k * r as i64)
                .collect();
            AffinePermutation::new(w).unwrap()
        })
}

fn arb_element(r: usize) -> impl Strategy<Value = HeckeElement> {
    prop::collection::vec((arb_perm(r), -2i64..=2, -2i32..=2), 1..3).prop_map(move |ts| {
        let mut h = HeckeElement::zero(r);
        for (w, c, e) in ts {
            h.add_term(w, &LaurentScalar::monomial(c, e));
        }
        h
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn hecke_associativity(x in arb_element(3), y in arb_element(3), z in arb_element(3)) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn hecke_distributivity(x in arb_element(2), y in arb_element(2), z in arb_element(2)) {
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }

    #[test]
    fn length_matches_enumeration(w in arb_perm(4)) {
        prop_assert_eq!(w.length(), w.length_by_enumeration());
        prop_assert_eq!(w.inverse().length(), w.length());
    }

    #[test]
    fn reduced_words_rebuild(w in arb_perm(3)) {
        let (m, word) = w.reduced_word();
        prop_assert_eq!(word.len(), w.length());
        let mut x = AffinePermutation::rho_pow(3, m);
        for &i in &word {
            x = x.compose(&AffinePermutation::generator_s(i, 3).unwrap());
        }
        prop_assert_eq!(x, w);
    }
}
