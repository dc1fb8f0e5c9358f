//! The structure constants `x_{α,γ}` of the commutator `u_μ^- u_λ^+ − u_λ^+ u_μ^-`.

use super::gauss::{frak_a, gauss_sq, multinomial_sq};
use super::{boxed, IntVectorN, LaurentFraction, LaurentScalar};
use crate::error::{Error, Result};

/// `Σ (-1)^m v^{2Σ_{i<j}⟨γ^(i),γ^(j)⟩} 𝔞_{γ^(1)}⋯𝔞_{γ^(m)} ⟦γ; γ^(1),…,γ^(m)⟧²`
/// over ordered decompositions of `γ` into nonzero parts. The empty
/// decomposition makes this 1 at `γ = 0`.
pub fn decomposition_sum(gamma: &IntVectorN) -> LaurentScalar {
    if gamma.is_zero() {
        return LaurentScalar::one();
    }
    let mut acc = LaurentScalar::zero();
    for first in boxed(gamma) {
        if first.is_zero() {
            continue;
        }
        let rest = gamma - &first;
        let mut binom = LaurentScalar::one();
        for (&g, &f) in gamma.entries().iter().zip(first.entries()) {
            binom *= &gauss_sq(g, f);
        }
        let term = frak_a(&first) * &binom * &binom * decomposition_sum(&rest);
        acc -= &term.shift(2 * first.euler(&rest) as i32);
    }
    acc
}

/// The coefficient `x_{α,γ}` for given `λ, μ`.
pub fn x_coeff(
    alpha: &IntVectorN,
    gamma: &IntVectorN,
    lambda: &IntVectorN,
    mu: &IntVectorN,
) -> Result<LaurentFraction> {
    let ok = gamma.is_nonneg()
        && gamma.leq(alpha)
        && alpha.leq(lambda)
        && alpha.leq(mu)
        && !alpha.is_zero();
    if !ok {
        return Err(Error::Precondition(format!(
            "x_coeff needs 0 <= γ <= α <= λ, α <= μ, α != 0; got α={alpha} γ={gamma} λ={lambda} μ={mu}"
        )));
    }
    let a_minus_g = alpha - gamma;
    let l_minus_a = lambda - alpha;
    let m_minus_a = mu - alpha;
    let exp = alpha.euler(&l_minus_a)
        + mu.euler(&(&gamma.scale(2) - alpha))
        + 2 * gamma.euler(&(&a_minus_g - lambda))
        + 2 * alpha.sigma();
    let num = multinomial_sq(
        lambda,
        &[a_minus_g.clone(), l_minus_a.clone(), gamma.clone()],
    )? * multinomial_sq(mu, &[a_minus_g.clone(), m_minus_a.clone(), gamma.clone()])?
        * frak_a(&a_minus_g)
        * frak_a(&l_minus_a)
        * frak_a(&m_minus_a)
        * decomposition_sum(gamma);
    let den = frak_a(lambda) * frak_a(mu);
    LaurentFraction::new(num.shift(exp as i32), den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_values() {
        let v = LaurentScalar::v();
        let d = v.pow(2) - LaurentScalar::one();
        let e1 = IntVectorN::unit(2, 1);
        let z = IntVectorN::zero(2);
        let x11 = x_coeff(&e1, &e1, &e1, &e1).unwrap();
        assert_eq!(x11, LaurentFraction::new(-v.clone(), d.clone()).unwrap());
        let x10 = x_coeff(&e1, &z, &e1, &e1).unwrap();
        assert_eq!(x10, LaurentFraction::new(v, d).unwrap());
        assert!(x_coeff(&z, &z, &e1, &e1).is_err());
    }
}
