//! The realization algebra `𝒱_△(n)` with basis `{A(j)}`, as a subspace of
//! `∏_r 𝒮_△(n, r)`.

mod checks;
mod element;
mod ops;

pub use checks::{
    k_tilde_exponent, relation_e_check, relation_e_sides, triangular_check_in_v,
    triangular_leading_check, RelationECheck, TriangularCheck,
};
pub use element::{VElement, VLabel};
pub use ops::{
    a_j, mul_0j_left, mul_0j_right, mul_by_semisimple_minus, mul_by_semisimple_plus,
    reduce_j_lambda,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::afmat::PeriodicMatrix;
    use crate::laurent::{IntVectorN, LaurentFraction, LaurentScalar};

    #[test]
    fn plus_on_zero() {
        let j = IntVectorN::new(vec![2, -1]);
        let x = VElement::basis(PeriodicMatrix::zero(2), j.clone()).unwrap();
        let y = mul_by_semisimple_plus(&IntVectorN::unit(2, 1), &x).unwrap();
        let e12 = PeriodicMatrix::e_unit(2, 1, 2);
        let want = VElement::basis(e12, j)
            .unwrap()
            .scale(&LaurentScalar::v_pow(-1).into());
        assert_eq!(y, want);
    }

    #[test]
    fn reduce_unit() {
        let a = PeriodicMatrix::zero(2);
        let j = IntVectorN::zero(2);
        let x = reduce_j_lambda(&a, &j, &IntVectorN::unit(2, 1)).unwrap();
        let d = &LaurentScalar::v() - &LaurentScalar::v_pow(-1);
        let c = LaurentFraction::new(LaurentScalar::one(), d).unwrap();
        let mut want = VElement::zero(2);
        want.add_term(a.clone(), IntVectorN::unit(2, 1), &c);
        want.add_term(a, -&IntVectorN::unit(2, 1), &(-&c));
        assert_eq!(x, want);
    }
}
