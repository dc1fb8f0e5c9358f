//! Products by semisimple generators `u_α` in the Ringel-Hall algebra.

use std::collections::BTreeMap;

use super::rep::{check_label, dim_end};
use crate::afmat::PeriodicMatrix;
use crate::error::{Error, Result};
use crate::laurent::{gauss_sq, IntVectorN, LaurentScalar};
use crate::schur::{enumerate_t, row};

/// A finite linear combination of Hall basis elements.
pub type HallTerms = BTreeMap<PeriodicMatrix, LaurentScalar>;

/// Strictly upper `T` with `ro(T) = α`, `t_{i,i+1} ≤ α_i` and
/// `t_{i,j} ≤ a_{i+1,j}` for `j > i + 1`; other `T` contribute nothing.
fn hall_t(alpha: &IntVectorN, a: &PeriodicMatrix) -> Vec<PeriodicMatrix> {
    enumerate_t(a.n(), alpha, |i| {
        let mut caps: Vec<(i64, i64)> = row(a, i + 1)
            .into_iter()
            .filter(|&(j, _)| j > i + 1)
            .collect();
        caps.push((i + 1, alpha.get(i)));
        caps
    })
}

/// `A + T - T̃^+`.
fn hall_label(a: &PeriodicMatrix, t: &PeriodicMatrix) -> PeriodicMatrix {
    let (tilde_plus, _, _) = t.tilde().split();
    &(a + t) - &tilde_plus
}

fn check(alpha: &IntVectorN, a: &PeriodicMatrix) -> Result<()> {
    check_label(a)?;
    if alpha.n() != a.n() {
        return Err(Error::PeriodMismatch(alpha.n(), a.n()));
    }
    if !alpha.is_nonneg() {
        return Err(Error::Precondition(format!(
            "α = {alpha} has a negative entry"
        )));
    }
    Ok(())
}

fn columns(i: i64, ms: &[&PeriodicMatrix]) -> Vec<i64> {
    let mut cols: Vec<i64> = ms.iter().flat_map(|m| row(m, i).into_keys()).collect();
    cols.sort_unstable();
    cols.dedup();
    cols
}

fn add(out: &mut HallTerms, label: PeriodicMatrix, c: LaurentScalar) {
    let slot = out.entry(label.clone()).or_default();
    *slot += &c;
    if slot.is_zero() {
        out.remove(&label);
    }
}

/// `u_α ⋄ u_A` in the untwisted Hall algebra: each coefficient is the Hall
/// polynomial `φ^C_{S_α, A}` written in `q = v^2`.
pub fn semisimple_hall_product(alpha: &IntVectorN, a: &PeriodicMatrix) -> Result<HallTerms> {
    check(alpha, a)?;
    let n = a.n();
    let mut out = HallTerms::new();
    for t in hall_t(alpha, a) {
        let label = hall_label(a, &t);
        if !label.is_nonneg() {
            continue;
        }
        let mut exp = 0;
        let mut coeff = LaurentScalar::one();
        for i in 1..=n as i64 {
            let (ai, ti, tn) = (row(a, i), row(&t, i), row(&t, i + 1));
            for (&l, &til) in &ti {
                exp += ai.range(l + 1..).map(|(_, &x)| x * til).sum::<i64>();
            }
            for (&l, &tnl) in &tn {
                exp -= ti.range(l + 1..).map(|(_, &x)| x * tnl).sum::<i64>();
            }
            for (&j, &tij) in &ti {
                if j != i {
                    coeff *= &gauss_sq(a.get(i, j) + tij - t.get(i - 1, j), tij);
                }
            }
        }
        let poly = coeff
            .halve_exponents()
            .expect("Gaussian polynomials are even in v");
        add(&mut out, label, poly.shift(exp as i32));
    }
    Ok(out)
}

/// `ũ_α ũ_A` in the twisted Hall algebra, from the generator formula with
/// the exponent `f_{A,T}` and bar-Gaussian coefficients.
pub fn twisted_mul_semisimple(alpha: &IntVectorN, a: &PeriodicMatrix) -> Result<HallTerms> {
    check(alpha, a)?;
    let n = a.n();
    let mut out = HallTerms::new();
    let next_row = PeriodicMatrix::from_entries(n, a.iter().map(|(i, j, x)| (i - 1, j, x)));
    for t in hall_t(alpha, a) {
        let label = hall_label(a, &t);
        if !label.is_nonneg() {
            continue;
        }
        let tt = t.tilde();
        let mut f = 0;
        let mut coeff = LaurentScalar::one();
        for i in 1..=n as i64 {
            let cols = columns(i, &[a, &t, &tt, &next_row]);
            for &j in &cols {
                for &l in &cols {
                    let til = t.get(i, l);
                    if til == 0 {
                        continue;
                    }
                    if j >= l && j != i {
                        f += a.get(i, j) * til - t.get(i - 1, j) * til;
                    }
                    if j > l && j != i + 1 {
                        f -= a.get(i + 1, j) * til;
                    }
                    if j > l && j != i && j != i + 1 {
                        f += t.get(i, j) * til;
                    }
                }
                let tij = t.get(i, j);
                if tij > 0 && j != i {
                    coeff *= &gauss_sq(a.get(i, j) + tij - t.get(i - 1, j), tij).bar();
                }
            }
        }
        add(&mut out, label, coeff.shift(f as i32));
    }
    Ok(out)
}

/// `ũ_α ũ_A` via `u_α u_A = Σ_C v^{⟨α, d(A)⟩} φ^C_{S_α,A}(v^2) u_C` and
/// `ũ_X = v^{dim End M(X) - dim M(X)} u_X`.
pub fn twisted_via_hall_polynomials(alpha: &IntVectorN, a: &PeriodicMatrix) -> Result<HallTerms> {
    let e = |x: &PeriodicMatrix| -> Result<i64> { Ok(dim_end(x)? as i64 - x.dim_vector().sigma()) };
    let s_alpha = PeriodicMatrix::s_alpha(alpha);
    let base = e(&s_alpha)? + e(a)? + alpha.euler(&a.dim_vector());
    let mut out = HallTerms::new();
    for (c, phi) in semisimple_hall_product(alpha, a)? {
        let shift = base - e(&c)?;
        add(&mut out, c, phi.double_exponents().shift(shift as i32));
    }
    Ok(out)
}

/// `u_α ⋄ x` for a linear combination `x` (coefficients in `q`).
pub fn hall_left_mul(alpha: &IntVectorN, x: &HallTerms) -> Result<HallTerms> {
    let mut out = HallTerms::new();
    for (a, c) in x {
        for (b, d) in semisimple_hall_product(alpha, a)? {
            add(&mut out, b, c * &d);
        }
    }
    Ok(out)
}
