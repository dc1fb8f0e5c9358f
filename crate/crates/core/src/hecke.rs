//! The extended affine Hecke algebra `ℋ_△(r)` over `Z[v, v^-1]` in the
//! basis `{T_w}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::affsym::{
    double_coset, is_min_double_coset_rep, jmath, young_subgroup, AffinePermutation,
};
use crate::error::{Error, Result};
use crate::laurent::{factorial_sq, IntVectorN, LaurentScalar};

#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    r: usize,
    terms: BTreeMap<AffinePermutation, LaurentScalar>,
}

impl HeckeElement {
    pub fn zero(r: usize) -> Self {
        Self {
            r,
            terms: BTreeMap::new(),
        }
    }

    /// The basis element `T_w`.
    pub fn basis(w: AffinePermutation) -> Self {
        let r = w.r();
        let mut terms = BTreeMap::new();
        terms.insert(w, LaurentScalar::one());
        Self { r, terms }
    }

    pub fn one(r: usize) -> Self {
        Self::basis(AffinePermutation::identity(r))
    }

    /// `T_X = Σ_{x ∈ X} T_x`.
    pub fn sum_of<I: IntoIterator<Item = AffinePermutation>>(r: usize, xs: I) -> Self {
        let mut h = Self::zero(r);
        for x in xs {
            h.add_term(x, &LaurentScalar::one());
        }
        h
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn terms(&self) -> &BTreeMap<AffinePermutation, LaurentScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &AffinePermutation) -> LaurentScalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, w: AffinePermutation, c: &LaurentScalar) {
        if c.is_zero() {
            return;
        }
        assert_eq!(w.r(), self.r, "level mismatch");
        match self.terms.get_mut(&w) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn scale(&self, c: &LaurentScalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.r);
        }
        Self {
            r: self.r,
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// `T_{s_i} · self`, using the quadratic rule on left descents.
    pub fn left_mul_generator(&self, i: usize) -> Self {
        let s = AffinePermutation::generator_s(i, self.r).expect("valid generator");
        let v2 = LaurentScalar::v_pow(2);
        let v2m1 = &v2 - &LaurentScalar::one();
        let mut out = Self::zero(self.r);
        for (w, c) in &self.terms {
            let sw = s.compose(w);
            if w.has_left_descent(i) {
                out.add_term(w.clone(), &(&v2m1 * c));
                out.add_term(sw, &(&v2 * c));
            } else {
                out.add_term(sw, c);
            }
        }
        out
    }

    /// `T_{ρ^m} · self`.
    pub fn left_mul_rho_pow(&self, m: i64) -> Self {
        let rho = AffinePermutation::rho_pow(self.r, m);
        Self {
            r: self.r,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (rho.compose(w), c.clone()))
                .collect(),
        }
    }

    /// `T_y · self`, applying the letters of `y = ρ^m s_{i_1} ⋯ s_{i_k}` from
    /// the right.
    pub fn left_mul_basis(&self, y: &AffinePermutation) -> Self {
        let (m, word) = y.reduced_word();
        let mut h = self.clone();
        for &i in word.iter().rev() {
            h = h.left_mul_generator(i);
        }
        h.left_mul_rho_pow(m)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.r != other.r {
            return Err(Error::LevelMismatch(self.r, other.r));
        }
        let mut out = Self::zero(self.r);
        for (y, c) in &self.terms {
            let part = other.left_mul_basis(y);
            for (w, x) in part.terms {
                out.add_term(w, &(c * &x));
            }
        }
        Ok(out)
    }
}

impl Add for &HeckeElement {
    type Output = HeckeElement;
    fn add(self, rhs: &HeckeElement) -> HeckeElement {
        assert_eq!(self.r, rhs.r, "level mismatch");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c);
        }
        out
    }
}

impl Sub for &HeckeElement {
    type Output = HeckeElement;
    fn sub(self, rhs: &HeckeElement) -> HeckeElement {
        assert_eq!(self.r, rhs.r, "level mismatch");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), &-c);
        }
        out
    }
}

impl Mul for &HeckeElement {
    type Output = HeckeElement;
    /// Panics on a level mismatch; see [`HeckeElement::try_mul`].
    fn mul(self, rhs: &HeckeElement) -> HeckeElement {
        self.try_mul(rhs).expect("Hecke product")
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})·T{w:?}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `x_λ = T_{𝔖_λ}`.
pub fn x_lambda(lambda: &IntVectorN) -> HeckeElement {
    HeckeElement::sum_of(lambda.sigma() as usize, young_subgroup(lambda))
}

/// `T_{𝔖_λ d 𝔖_μ}` for a shortest double coset representative `d`.
pub fn t_double_coset(
    lambda: &IntVectorN,
    d: &AffinePermutation,
    mu: &IntVectorN,
) -> Result<HeckeElement> {
    if !is_min_double_coset_rep(d, lambda, mu) {
        return Err(Error::NotRepresentative(d.to_string()));
    }
    Ok(HeckeElement::sum_of(d.r(), double_coset(lambda, d, mu)))
}

/// Checks `x_λ T_d x_μ = ∏ ⟦a_{i,j}⟧! · T_{𝔖_λ d 𝔖_μ}` with `A = ȷ_△(λ, d, μ)`.
pub fn coset_product_identity_check(
    lambda: &IntVectorN,
    d: &AffinePermutation,
    mu: &IntVectorN,
) -> Result<bool> {
    let a = jmath(lambda, d, mu)?;
    let lhs = &(&x_lambda(lambda) * &HeckeElement::basis(d.clone())) * &x_lambda(mu);
    let factor: LaurentScalar = a.iter().map(|(_, _, x)| factorial_sq(x)).product();
    let rhs = t_double_coset(lambda, d, mu)?.scale(&factor);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> AffinePermutation {
        AffinePermutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn quadratic_rule() {
        let s = HeckeElement::basis(w(&[2, 1]));
        let sq = &s * &s;
        let v2 = LaurentScalar::v_pow(2);
        let mut expect = s.scale(&(&v2 - &LaurentScalar::one()));
        expect.add_term(AffinePermutation::identity(2), &v2);
        assert_eq!(sq, expect);
    }

    #[test]
    fn rho_rule() {
        let rho = HeckeElement::basis(AffinePermutation::rho(3));
        let x = w(&[4, -1, 3]);
        let prod = &rho * &HeckeElement::basis(x.clone());
        assert_eq!(
            prod,
            HeckeElement::basis(AffinePermutation::rho(3).compose(&x))
        );
    }

    #[test]
    fn young_sums() {
        let x = x_lambda(&IntVectorN::new(vec![2, 0]));
        assert_eq!(x.terms().len(), 2);
        assert_eq!(x_lambda(&IntVectorN::new(vec![1, 1])), HeckeElement::one(2));
    }

    #[test]
    fn coset_identity_small() {
        let la = IntVectorN::new(vec![2, 0]);
        let id = AffinePermutation::identity(2);
        assert!(coset_product_identity_check(&la, &id, &la).unwrap());
        let la = IntVectorN::new(vec![1, 1]);
        assert!(coset_product_identity_check(&la, &id, &la).unwrap());
    }
}
