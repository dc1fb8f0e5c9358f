//! Structure constants of `𝒮_△(n, r)` computed inside `ℋ_△(r)`.

use std::collections::BTreeMap;

use super::element::{Basis, SchurElement};
use crate::affsym::{double_coset, is_min_right_coset_rep, jmath_unchecked, pseudo_matrix_rep};
use crate::afmat::PeriodicMatrix;
use crate::error::{Error, Result};
use crate::hecke::HeckeElement;
use crate::laurent::LaurentScalar;

fn factorial(k: i64) -> u128 {
    (1..=k as u128).product()
}

fn coset_size(a: &PeriodicMatrix) -> u128 {
    let rows: u128 = a.ro().entries().iter().map(|&x| factorial(x)).product();
    let cols: u128 = a.co().entries().iter().map(|&x| factorial(x)).product();
    let cells: u128 = a.iter().map(|(_, _, x)| factorial(x)).product();
    rows * cols / cells
}

/// Decomposes a Hecke element lying in the span of the double coset sums
/// `T_{𝔖_λ y 𝔖_ν}` and returns the coefficient of each `e_C`.
///
/// Every coset is checked to carry a single coefficient over its full
/// support.
pub fn decompose_double_cosets(
    h: &HeckeElement,
    lambda: &crate::laurent::IntVectorN,
    nu: &crate::laurent::IntVectorN,
) -> Result<BTreeMap<PeriodicMatrix, LaurentScalar>> {
    let mut groups: BTreeMap<PeriodicMatrix, Vec<&LaurentScalar>> = BTreeMap::new();
    for (w, c) in h.terms() {
        groups
            .entry(jmath_unchecked(lambda, w, nu))
            .or_default()
            .push(c);
    }
    let mut out = BTreeMap::new();
    for (label, coeffs) in groups {
        if coeffs.len() as u128 != coset_size(&label) || coeffs.iter().any(|c| *c != coeffs[0]) {
            return Err(Error::Precondition(format!(
                "Hecke element is not constant on the double coset of {label}"
            )));
        }
        out.insert(label, coeffs[0].clone());
    }
    Ok(out)
}

/// `e_B e_A` by evaluating both maps in `ℋ_△(r)`.
///
/// With `μ = ro(A)`, `ν = co(A)` one has `e_A(x_ν) = T_{𝔖_μ d 𝔖_ν} = x_μ h`
/// where `h` sums `T_z` over the shortest representatives `z` of the cosets
/// `𝔖_μ z` inside the double coset. Then `e_B e_A(x_ν) = T_{𝔖_λ d' 𝔖_μ} h`.
pub fn oracle_mul(b: &PeriodicMatrix, a: &PeriodicMatrix) -> Result<SchurElement> {
    if b.n() != a.n() {
        return Err(Error::PeriodMismatch(b.n(), a.n()));
    }
    if b.sigma() != a.sigma() {
        return Err(Error::LevelMismatch(b.sigma() as usize, a.sigma() as usize));
    }
    let r = a.sigma() as usize;
    let mut out = SchurElement::zero(a.n(), r, Basis::E);
    if b.co() != a.ro() {
        return Ok(out);
    }
    let (lambda, mu, nu) = (b.ro(), a.ro(), a.co());
    let d1 = pseudo_matrix_rep(b)?;
    let d2 = pseudo_matrix_rep(a)?;
    let h = HeckeElement::sum_of(
        r,
        double_coset(&mu, &d2, &nu)
            .into_iter()
            .filter(|z| is_min_right_coset_rep(z, &mu)),
    );
    let left = HeckeElement::sum_of(r, double_coset(&lambda, &d1, &mu));
    let x = left.try_mul(&h)?;
    for (label, c) in decompose_double_cosets(&x, &lambda, &nu)? {
        assert!(label.is_nonneg(), "oracle produced {label}");
        out.add_term(label, &c);
    }
    Ok(out)
}

/// `e_B e_A` for arbitrary labels: the closed form when `B` has a semisimple
/// shape, the Hecke oracle otherwise.
pub fn e_mul(b: &PeriodicMatrix, a: &PeriodicMatrix) -> Result<SchurElement> {
    if super::closed::upper_shape(b).is_ok() {
        super::closed::e_mul_upper(b, a)
    } else if super::closed::lower_shape(b).is_ok() {
        super::closed::e_mul_lower(b, a)
    } else {
        oracle_mul(b, a)
    }
}
