//! Closed-form products `e_B e_A`, `e_C e_A`, `[B][A]`, `[C][A]` for
//! semisimple-shape left factors.

use std::collections::BTreeMap;

use super::element::{Basis, SchurElement};
use crate::afmat::PeriodicMatrix;
use crate::error::{Error, Result};
use crate::laurent::{gauss_sq, IntVectorN, LaurentScalar};

/// Row `i` (any integer) of `m` as a map `column → entry`.
pub(crate) fn row(m: &PeriodicMatrix, i: i64) -> BTreeMap<i64, i64> {
    let n = m.n() as i64;
    m.iter()
        .filter(|&(k0, _, _)| (i - k0).rem_euclid(n) == 0)
        .map(|(k0, l0, x)| (l0 + i - k0, x))
        .collect()
}

/// All ways to write `total` as `Σ_j t_j` with `0 ≤ t_j ≤ caps[j]`.
pub(crate) fn capped_rows(caps: &[(i64, i64)], total: i64) -> Vec<Vec<(i64, i64)>> {
    fn go(
        caps: &[(i64, i64)],
        k: usize,
        left: i64,
        cur: &mut Vec<(i64, i64)>,
        out: &mut Vec<Vec<(i64, i64)>>,
    ) {
        if k == caps.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let rest: i64 = caps[k + 1..].iter().map(|&(_, c)| c).sum();
        let (j, cap) = caps[k];
        for t in 0..=cap.min(left) {
            if left - t > rest {
                continue;
            }
            if t > 0 {
                cur.push((j, t));
            }
            go(caps, k + 1, left - t, cur, out);
            if t > 0 {
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if total >= 0 {
        go(caps, 0, total, &mut Vec::new(), &mut out);
    }
    out
}

/// Every `T ∈ Θ_△(n)` with `ro(T) = alpha` whose row `i` is bounded
/// entrywise by the given per-row caps.
pub(crate) fn enumerate_t(
    n: usize,
    alpha: &IntVectorN,
    caps: impl Fn(i64) -> Vec<(i64, i64)>,
) -> Vec<PeriodicMatrix> {
    let mut out = vec![PeriodicMatrix::zero(n)];
    for i in 1..=n as i64 {
        let rows = capped_rows(&caps(i), alpha.get(i));
        let mut next = Vec::with_capacity(out.len() * rows.len());
        for t in &out {
            for r in &rows {
                let mut t = t.clone();
                for &(j, x) in r {
                    t.add_entry(i, j, x);
                }
                next.push(t);
            }
        }
        out = next;
    }
    out
}

/// `B = S_α + diag(β)` decomposed as `(α, β)`.
pub fn upper_shape(b: &PeriodicMatrix) -> Result<(IntVectorN, IntVectorN)> {
    let n = b.n() as i64;
    if !b.is_nonneg() || b.iter().any(|(i, j, _)| j != i && j != i + 1) {
        return Err(Error::Shape(format!(
            "{b} is not of the form S_α + diag(β)"
        )));
    }
    let alpha = IntVectorN::new((1..=n).map(|i| b.get(i, i + 1)).collect());
    Ok((alpha, b.diagonal()))
}

/// `C = Σ γ_i E_{i+1,i} + diag(β)` decomposed as `(γ, β)`.
pub fn lower_shape(c: &PeriodicMatrix) -> Result<(IntVectorN, IntVectorN)> {
    let n = c.n() as i64;
    if !c.is_nonneg() || c.iter().any(|(i, j, _)| j != i && i != j + 1) {
        return Err(Error::Shape(format!(
            "{c} is not of the form Σγ_i E_(i+1,i) + diag(β)"
        )));
    }
    let gamma = IntVectorN::new((1..=n).map(|i| c.get(i + 1, i)).collect());
    Ok((gamma, c.diagonal()))
}

fn check_pair(left: &PeriodicMatrix, a: &PeriodicMatrix) -> Result<()> {
    if left.n() != a.n() {
        return Err(Error::PeriodMismatch(left.n(), a.n()));
    }
    if !a.is_nonneg() {
        return Err(Error::Shape(format!("{a} has a negative entry")));
    }
    if left.sigma() != a.sigma() {
        return Err(Error::LevelMismatch(
            left.sigma() as usize,
            a.sigma() as usize,
        ));
    }
    Ok(())
}

fn bar_gauss(big_n: i64, t: i64) -> LaurentScalar {
    gauss_sq(big_n, t).bar()
}

/// The terms `(T, A + T - T̃)` of the upper formula.
fn upper_terms(a: &PeriodicMatrix, alpha: &IntVectorN) -> Vec<(PeriodicMatrix, PeriodicMatrix)> {
    enumerate_t(a.n(), alpha, |i| row(a, i + 1).into_iter().collect())
        .into_iter()
        .map(|t| {
            let label = &(a + &t) - &t.tilde();
            (t, label)
        })
        .collect()
}

fn lower_terms(a: &PeriodicMatrix, gamma: &IntVectorN) -> Vec<(PeriodicMatrix, PeriodicMatrix)> {
    enumerate_t(a.n(), gamma, |i| row(a, i).into_iter().collect())
        .into_iter()
        .map(|t| {
            let label = &(a - &t) + &t.tilde();
            (t, label)
        })
        .collect()
}

/// Columns carrying a nonzero entry in row `i` of any of the matrices.
fn columns(i: i64, ms: &[&PeriodicMatrix]) -> Vec<i64> {
    let mut cols: Vec<i64> = ms.iter().flat_map(|m| row(m, i).into_keys()).collect();
    cols.sort_unstable();
    cols.dedup();
    cols
}

/// `e_B e_A` for `B = S_α + diag(β)`.
pub fn e_mul_upper(b: &PeriodicMatrix, a: &PeriodicMatrix) -> Result<SchurElement> {
    check_pair(b, a)?;
    let (alpha, _) = upper_shape(b)?;
    let n = a.n();
    let r = a.sigma() as usize;
    let mut out = SchurElement::zero(n, r, Basis::E);
    if b.co() != a.ro() {
        return Ok(out);
    }
    for (t, label) in upper_terms(a, &alpha) {
        if !label.is_nonneg() {
            continue;
        }
        let mut exp = 0;
        let mut coeff = LaurentScalar::one();
        for i in 1..=n as i64 {
            let cols = columns(i, &[a, &t, &t.tilde()]);
            for &j in &cols {
                let (aij, tij, tpj) = (a.get(i, j), t.get(i, j), t.get(i - 1, j));
                for &l in cols.iter().filter(|&&l| l < j) {
                    exp += (aij - tpj) * t.get(i, l);
                }
                if tij > 0 {
                    coeff *= &gauss_sq(aij + tij - tpj, tij);
                }
            }
        }
        out.add_term(label, &coeff.shift(2 * exp as i32));
    }
    Ok(out)
}

/// `e_C e_A` for `C = Σ γ_i E_{i+1,i} + diag(β)`.
pub fn e_mul_lower(c: &PeriodicMatrix, a: &PeriodicMatrix) -> Result<SchurElement> {
    check_pair(c, a)?;
    let (gamma, _) = lower_shape(c)?;
    let n = a.n();
    let r = a.sigma() as usize;
    let mut out = SchurElement::zero(n, r, Basis::E);
    if c.co() != a.ro() {
        return Ok(out);
    }
    for (t, label) in lower_terms(a, &gamma) {
        if !label.is_nonneg() {
            continue;
        }
        let mut exp = 0;
        let mut coeff = LaurentScalar::one();
        for i in 1..=n as i64 {
            let cols = columns(i, &[a, &t, &t.tilde()]);
            for &j in &cols {
                let (aij, tij, tpj) = (a.get(i, j), t.get(i, j), t.get(i - 1, j));
                for &l in cols.iter().filter(|&&l| l > j) {
                    exp += (aij - tij) * t.get(i - 1, l);
                }
                if tpj > 0 {
                    coeff *= &gauss_sq(aij - tij + tpj, tpj);
                }
            }
        }
        out.add_term(label, &coeff.shift(2 * exp as i32));
    }
    Ok(out)
}

/// `[B][A]` for `B = S_α + diag(β)`.
pub fn n_mul_upper(b: &PeriodicMatrix, a: &PeriodicMatrix) -> Result<SchurElement> {
    check_pair(b, a)?;
    let (alpha, _) = upper_shape(b)?;
    let n = a.n();
    let r = a.sigma() as usize;
    let mut out = SchurElement::zero(n, r, Basis::N);
    if b.co() != a.ro() {
        return Ok(out);
    }
    // row i of this matrix is row i+1 of A
    let next_row = PeriodicMatrix::from_entries(n, a.iter().map(|(i, j, x)| (i - 1, j, x)));
    for (t, label) in upper_terms(a, &alpha) {
        if !label.is_nonneg() {
            continue;
        }
        let mut exp = 0;
        let mut coeff = LaurentScalar::one();
        for i in 1..=n as i64 {
            let cols = columns(i, &[a, &t, &t.tilde(), &next_row]);
            for &j in &cols {
                let (aij, tij, tpj) = (a.get(i, j), t.get(i, j), t.get(i - 1, j));
                let anj = a.get(i + 1, j);
                for &l in &cols {
                    let til = t.get(i, l);
                    if j >= l {
                        exp += (aij - tpj) * til;
                    }
                    if j > l {
                        exp -= (anj - tij) * til;
                    }
                }
                if tij > 0 {
                    coeff *= &bar_gauss(aij + tij - tpj, tij);
                }
            }
        }
        out.add_term(label, &coeff.shift(exp as i32));
    }
    Ok(out)
}

/// `[C][A]` for `C = Σ γ_i E_{i+1,i} + diag(β)`.
pub fn n_mul_lower(c: &PeriodicMatrix, a: &PeriodicMatrix) -> Result<SchurElement> {
    check_pair(c, a)?;
    let (gamma, _) = lower_shape(c)?;
    let n = a.n();
    let r = a.sigma() as usize;
    let mut out = SchurElement::zero(n, r, Basis::N);
    if c.co() != a.ro() {
        return Ok(out);
    }
    for (t, label) in lower_terms(a, &gamma) {
        if !label.is_nonneg() {
            continue;
        }
        let mut exp = 0;
        let mut coeff = LaurentScalar::one();
        for i in 1..=n as i64 {
            let cols = columns(i, &[a, &t, &t.tilde()]);
            for &j in &cols {
                let (aij, tij, tpj) = (a.get(i, j), t.get(i, j), t.get(i - 1, j));
                for &l in &cols {
                    if l >= j {
                        exp += (aij - tij) * t.get(i - 1, l);
                    }
                    if l > j {
                        exp -= (aij - tij) * t.get(i, l);
                    }
                }
                if tpj > 0 {
                    coeff *= &bar_gauss(aij - tij + tpj, tpj);
                }
            }
        }
        out.add_term(label, &coeff.shift(exp as i32));
    }
    Ok(out)
}

/// Whether `B` has one of the two semisimple shapes.
pub fn is_semisimple_shape(b: &PeriodicMatrix) -> bool {
    upper_shape(b).is_ok() || lower_shape(b).is_ok()
}
