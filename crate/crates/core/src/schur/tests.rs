use super::*;
use crate::afmat::PeriodicMatrix;
use crate::laurent::{IntVectorN, LaurentScalar};

fn m(n: usize, e: &[(i64, i64, i64)]) -> PeriodicMatrix {
    PeriodicMatrix::from_entries(n, e.iter().copied())
}

fn one_term(a: PeriodicMatrix, c: LaurentScalar) -> SchurElement {
    let mut x = SchurElement::zero(a.n(), a.sigma() as usize, Basis::E);
    x.add_term(a, &c);
    x
}

#[test]
fn worked_pair() {
    let b = m(2, &[(1, 2, 1), (1, 1, 1)]);
    let a = m(2, &[(2, 1, 1), (1, 1, 1)]);
    let expect = one_term(
        m(2, &[(1, 1, 2)]),
        LaurentScalar::from_terms([(0, 1), (2, 1)]),
    );
    assert_eq!(e_mul_upper(&b, &a).unwrap(), expect);
    assert_eq!(oracle_mul(&b, &a).unwrap(), expect);
}

#[test]
fn upper_identity_on_diagonal() {
    let b = m(2, &[(1, 2, 1), (1, 1, 1)]);
    let a = m(2, &[(1, 1, 1), (2, 2, 1)]);
    let expect = one_term(b.clone(), LaurentScalar::one());
    assert_eq!(e_mul_upper(&b, &a).unwrap(), expect);
    assert_eq!(oracle_mul(&b, &a).unwrap(), expect);
}

#[test]
fn diagonal_is_idempotent() {
    let a = m(2, &[(1, 2, 1), (2, 0, 1), (1, 1, 1)]);
    let d = PeriodicMatrix::diag(&a.ro());
    assert_eq!(
        oracle_mul(&d, &a).unwrap(),
        one_term(a.clone(), LaurentScalar::one())
    );
    assert_eq!(
        e_mul_upper(&d, &a).unwrap(),
        one_term(a, LaurentScalar::one())
    );
}

#[test]
fn lower_pair_matches_oracle() {
    let c = m(2, &[(2, 1, 1), (2, 2, 1)]);
    let a = m(2, &[(1, 2, 1), (2, 2, 1)]);
    assert_eq!(e_mul_lower(&c, &a).unwrap(), oracle_mul(&c, &a).unwrap());
}

#[test]
fn mismatched_shapes_give_zero() {
    let b = m(2, &[(1, 2, 1), (1, 1, 1)]);
    let a = m(2, &[(1, 1, 2)]);
    assert!(oracle_mul(&b, &a).unwrap().is_zero());
    assert!(e_mul_upper(&b, &a).unwrap().is_zero());
}

#[test]
fn basis_round_trip() {
    let a = m(2, &[(1, 3, 1), (2, 1, 1)]);
    let x = one_term(a, LaurentScalar::from_terms([(1, 2), (-3, 1)]));
    assert_eq!(x.to_basis(Basis::N).to_basis(Basis::E), x);
    assert!(x.same_as(&x.to_basis(Basis::N)));
}

#[test]
fn zero_j_is_identity() {
    let zero = PeriodicMatrix::zero(2);
    let one = a_j_r(&zero, &IntVectorN::zero(2), 2).unwrap();
    let a = m(2, &[(1, 2, 1), (2, 2, 1)]);
    let x = SchurElement::basis_element(a, Basis::N).unwrap();
    assert!((&one * &x).same_as(&x));
    assert!((&x * &one).same_as(&x));
}

#[test]
fn zero_e1() {
    let zero = PeriodicMatrix::zero(2);
    let x = a_j_r(&zero, &IntVectorN::unit(2, 1), 2).unwrap();
    assert_eq!(x.terms().len(), 3);
    assert_eq!(x.coeff(&m(2, &[(1, 1, 2)])), LaurentScalar::v_pow(2));
    assert_eq!(x.coeff(&m(2, &[(1, 1, 1), (2, 2, 1)])), LaurentScalar::v());
    assert_eq!(x.coeff(&m(2, &[(2, 2, 2)])), LaurentScalar::one());
    assert!(a_j_r(&m(2, &[(1, 2, 3)]), &IntVectorN::zero(2), 2)
        .unwrap()
        .is_zero());
}

#[test]
fn json_round_trip() {
    let x = a_j_r(&m(2, &[(1, 2, 1)]), &IntVectorN::unit(2, 2), 3).unwrap();
    let s = serde_json::to_string(&x).unwrap();
    let y: SchurElement = serde_json::from_str(&s).unwrap();
    assert_eq!(x, y);
}
