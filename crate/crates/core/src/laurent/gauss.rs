//! Gaussian polynomials and related v-combinatorial coefficients.

use itertools::Itertools;

use super::{IntVectorN, LaurentScalar};
use crate::error::{Error, Result};

fn v2_minus_one(k: i64) -> LaurentScalar {
    LaurentScalar::from_terms([(2 * k as i32, 1), (0, -1)])
}

/// `⟦N over t⟧ = ∏_{i=1}^t (v^{2(N-i+1)} - 1) / (v^{2i} - 1)`, for any integer `N`.
pub fn gauss_sq(big_n: i64, t: i64) -> LaurentScalar {
    assert!(t >= 0, "gauss_sq: negative t");
    if big_n >= 0 && big_n < t {
        return LaurentScalar::zero();
    }
    let mut num = LaurentScalar::one();
    let mut den = LaurentScalar::one();
    for i in 1..=t {
        num *= &v2_minus_one(big_n - i + 1);
        den *= &v2_minus_one(i);
    }
    num.div_exact(&den)
        .expect("Gaussian polynomial quotient is exact")
}

/// The symmetric Gaussian polynomial `v^{-t(N-t)} ⟦N over t⟧`.
pub fn gauss_sym(big_n: i64, t: i64) -> LaurentScalar {
    gauss_sq(big_n, t).shift(-(t * (big_n - t)) as i32)
}

/// `⟦t⟧! = ⟦1⟧⟦2⟧⋯⟦t⟧` with `⟦k⟧ = (v^{2k}-1)/(v^2-1)`.
pub fn factorial_sq(t: i64) -> LaurentScalar {
    assert!(t >= 0, "factorial_sq: negative argument");
    (1..=t).map(|k| gauss_sq(k, 1)).product()
}

/// `∏_i ⟦μ_i over λ_i⟧`.
pub fn vec_gauss_sq(mu: &IntVectorN, lambda: &IntVectorN) -> LaurentScalar {
    assert_eq!(mu.n(), lambda.n(), "period mismatch");
    mu.entries()
        .iter()
        .zip(lambda.entries())
        .map(|(&m, &l)| gauss_sq(m, l))
        .product()
}

/// `∏_i ⟦μ_i over λ_i⟧` with the bar involution applied to each factor.
pub fn vec_gauss_sym(mu: &IntVectorN, lambda: &IntVectorN) -> LaurentScalar {
    mu.entries()
        .iter()
        .zip(lambda.entries())
        .map(|(&m, &l)| gauss_sym(m, l))
        .product()
}

/// `⟦λ over λ^(1),…,λ^(m)⟧ = ∏_i ⟦λ_i⟧! / (⟦λ_i^(1)⟧!⋯⟦λ_i^(m)⟧!)`.
pub fn multinomial_sq(lambda: &IntVectorN, parts: &[IntVectorN]) -> Result<LaurentScalar> {
    let mut total = IntVectorN::zero(lambda.n());
    for p in parts {
        if p.n() != lambda.n() {
            return Err(Error::PeriodMismatch(p.n(), lambda.n()));
        }
        if !p.is_nonneg() {
            return Err(Error::Precondition(format!("negative part {p}")));
        }
        total = &total + p;
    }
    if total != *lambda {
        return Err(Error::Precondition(format!(
            "parts sum to {total}, expected {lambda}"
        )));
    }
    let mut acc = LaurentScalar::one();
    for i in 0..lambda.n() {
        // a product of binomials avoids any division
        let mut left = lambda.entries()[i];
        for p in parts {
            let k = p.entries()[i];
            acc *= &gauss_sq(left, k);
            left -= k;
        }
    }
    Ok(acc)
}

/// `𝔞_β = ∏_i ∏_{s=1}^{β_i} (v^{2β_i} - v^{2(s-1)})`.
pub fn frak_a(beta: &IntVectorN) -> LaurentScalar {
    assert!(beta.is_nonneg(), "frak_a: negative entry");
    let mut acc = LaurentScalar::one();
    for &b in beta.entries() {
        for s in 1..=b {
            acc *= &LaurentScalar::from_terms([(2 * b as i32, 1), (2 * (s - 1) as i32, -1)]);
        }
    }
    acc
}

/// Checks `Σ_{X ⊆ {a+1..a+r}, |X|=t} v^{2 Σ X} = v^{2at + t(t+1)} ⟦r over t⟧`
/// by enumerating the subsets.
pub fn subset_sum_identity_check(a: i64, r: i64, t: i64) -> bool {
    let lhs: LaurentScalar = ((a + 1)..=(a + r))
        .combinations(t as usize)
        .map(|xs| LaurentScalar::v_pow(2 * xs.iter().sum::<i64>() as i32))
        .sum();
    let rhs = gauss_sq(r, t).shift((2 * a * t + t * (t + 1)) as i32);
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i32, i64)]) -> LaurentScalar {
        LaurentScalar::from_terms(terms.iter().copied())
    }

    #[test]
    fn small_values() {
        assert!(gauss_sq(5, 0).is_one());
        assert!(gauss_sq(1, 2).is_zero());
        assert_eq!(gauss_sq(2, 1), p(&[(0, 1), (2, 1)]));
        assert_eq!(gauss_sq(-1, 1), p(&[(-2, -1)]));
        assert_eq!(gauss_sym(2, 1), p(&[(-1, 1), (1, 1)]));
        assert_eq!(gauss_sym(3, 2), p(&[(-2, 1), (0, 1), (2, 1)]));
        assert_eq!(factorial_sq(2), p(&[(0, 1), (2, 1)]));
    }

    #[test]
    fn vector_versions() {
        let mu = IntVectorN::new(vec![2, 1]);
        let la = IntVectorN::new(vec![1, 0]);
        assert_eq!(vec_gauss_sq(&mu, &la), p(&[(0, 1), (2, 1)]));
        let e1 = IntVectorN::unit(2, 1);
        assert!(multinomial_sq(&e1, std::slice::from_ref(&e1))
            .unwrap()
            .is_one());
        assert!(multinomial_sq(&e1, &[e1.clone(), e1.clone()]).is_err());
    }

    #[test]
    fn frak_a_values() {
        assert!(frak_a(&IntVectorN::zero(2)).is_one());
        assert_eq!(frak_a(&IntVectorN::unit(2, 1)), p(&[(0, -1), (2, 1)]));
        let two = IntVectorN::new(vec![2, 0]);
        assert_eq!(frak_a(&two), p(&[(0, -1), (4, 1)]) * p(&[(2, -1), (4, 1)]));
    }

    #[test]
    fn subset_sums() {
        assert!(subset_sum_identity_check(0, 2, 1));
        assert!(subset_sum_identity_check(1, 3, 2));
        assert!(subset_sum_identity_check(2, 4, 0));
    }
}
