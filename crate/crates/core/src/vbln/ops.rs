//! Multiplication by the generators `0(j)`, `S_α(0)`, `ᵗS_α(0)`.

use std::collections::BTreeMap;

use super::element::VElement;
use crate::afmat::PeriodicMatrix;
use crate::error::{Error, Result};
use crate::laurent::{gauss_sq, IntVectorN, LaurentFraction, LaurentScalar};
use crate::schur::{enumerate_t, row};

type Row = BTreeMap<i64, i64>;

/// `Σ x_j y_l` over pairs of columns with `keep(j, l)`.
fn pair_sum(x: &Row, y: &Row, keep: impl Fn(i64, i64) -> bool) -> i64 {
    let mut s = 0;
    for (&j, &xj) in x {
        for (&l, &yl) in y {
            if keep(j, l) {
                s += xj * yl;
            }
        }
    }
    s
}

fn check_alpha(alpha: &IntVectorN, x: &VElement) -> Result<()> {
    if alpha.n() != x.n() {
        return Err(Error::PeriodMismatch(alpha.n(), x.n()));
    }
    if !alpha.is_nonneg() {
        return Err(Error::Precondition(format!(
            "α = {alpha} has a negative entry"
        )));
    }
    Ok(())
}

/// `0(j′) · x`.
pub fn mul_0j_left(jp: &IntVectorN, x: &VElement) -> VElement {
    let mut out = VElement::zero(x.n());
    for ((a, j), c) in x.terms() {
        let s = LaurentScalar::v_pow(jp.dot(&a.ro()) as i32);
        out.add_term(a.clone(), jp + j, &c.mul_scalar(&s));
    }
    out
}

/// `x · 0(j′)`.
pub fn mul_0j_right(x: &VElement, jp: &IntVectorN) -> VElement {
    let mut out = VElement::zero(x.n());
    for ((a, j), c) in x.terms() {
        let s = LaurentScalar::v_pow(jp.dot(&a.co()) as i32);
        out.add_term(a.clone(), jp + j, &c.mul_scalar(&s));
    }
    out
}

/// `A(j, λ)` in the basis `{A(j′)}`: each `[μ_i over λ_i]` is a Laurent
/// polynomial in `v^{μ_i}` divided by `∏_s (v^s − v^{-s})`.
pub fn reduce_j_lambda(
    a: &PeriodicMatrix,
    j: &IntVectorN,
    lambda: &IntVectorN,
) -> Result<VElement> {
    if !lambda.is_nonneg() {
        return Err(Error::Precondition(format!("negative λ = {lambda}")));
    }
    let n = a.n();
    if lambda.n() != n || j.n() != n {
        return Err(Error::PeriodMismatch(n, lambda.n()));
    }
    // running expansion: shift vector k ↦ numerator
    let mut acc: BTreeMap<Vec<i64>, LaurentScalar> = BTreeMap::new();
    acc.insert(vec![0; n], LaurentScalar::one());
    let mut den = LaurentScalar::one();
    for (i, &l) in lambda.entries().iter().enumerate() {
        // one coordinate: powers of X = v^{μ_i}
        let mut poly: BTreeMap<i64, LaurentScalar> = BTreeMap::from([(0, LaurentScalar::one())]);
        for s in 1..=l {
            let mut next: BTreeMap<i64, LaurentScalar> = BTreeMap::new();
            for (&k, c) in &poly {
                *next.entry(k + 1).or_default() += &c.shift(1 - s as i32);
                *next.entry(k - 1).or_default() -= &c.shift(s as i32 - 1);
            }
            poly = next;
            den = &den * &(&LaurentScalar::v_pow(s as i32) - &LaurentScalar::v_pow(-(s as i32)));
        }
        let mut next = BTreeMap::new();
        for (k, c) in &acc {
            for (&ki, d) in &poly {
                if d.is_zero() {
                    continue;
                }
                let mut k = k.clone();
                k[i] = ki;
                next.insert(k, c * d);
            }
        }
        acc = next;
    }
    let mut out = VElement::zero(n);
    for (k, c) in acc {
        let frac = LaurentFraction::new(c, den.clone())?;
        out.try_add_term(a.clone(), j + &IntVectorN::new(k), &frac)?;
    }
    Ok(out)
}

/// `S_α(0) · x`.
pub fn mul_by_semisimple_plus(alpha: &IntVectorN, x: &VElement) -> Result<VElement> {
    check_alpha(alpha, x)?;
    let n = x.n();
    let mut out = VElement::zero(n);
    for ((a, j), c) in x.terms() {
        let ts = enumerate_t(n, alpha, |i| {
            let mut caps: Vec<(i64, i64)> = row(a, i + 1).into_iter().collect();
            caps.push((i + 1, alpha.get(i)));
            caps
        });
        for t in ts {
            let (tp, _, tm) = t.split();
            let (ttp, _, ttm) = t.tilde().split();
            let label = &(&(a + &tp) + &tm) - &(&ttp + &ttm);
            if !label.is_nonneg() {
                continue;
            }
            let mut f = 0;
            let mut coeff = LaurentScalar::one();
            let mut jt = j.clone();
            for i in 1..=n as i64 {
                let (ai, an) = (row(a, i), row(a, i + 1));
                let (tp_, ti, tn) = (row(&t, i - 1), row(&t, i), row(&t, i + 1));
                f += pair_sum(&ai, &ti, |jj, l| jj >= l && jj != i);
                f -= pair_sum(&an, &ti, |jj, l| jj > l && jj != i + 1);
                f -= pair_sum(&tp_, &ti, |jj, l| jj >= l && jj != i);
                f += pair_sum(&ti, &ti, |jj, l| jj > l && jj != i && jj != i + 1);
                f += ti.range(..i + 1).map(|(_, &x)| x).sum::<i64>()
                    * tn.get(&(i + 1)).copied().unwrap_or(0);
                f += j.get(i) * (t.get(i - 1, i) - t.get(i, i));
                for (&jj, &tij) in &ti {
                    if jj != i {
                        coeff *= &gauss_sq(a.get(i, jj) + tij - t.get(i - 1, jj), tij).bar();
                    }
                }
                let shift: i64 = ti.range(..i).map(|(_, &x)| x).sum::<i64>()
                    - tp_.range(..i).map(|(_, &x)| x).sum::<i64>();
                jt.add_at(i, shift);
            }
            let scalar = c.mul_scalar(&coeff.shift(f as i32));
            let reduced = reduce_j_lambda(&label, &jt, &t.diagonal())?;
            out.add_assign(&reduced.scale(&scalar));
        }
    }
    Ok(out)
}

/// `ᵗS_α(0) · x`.
pub fn mul_by_semisimple_minus(alpha: &IntVectorN, x: &VElement) -> Result<VElement> {
    check_alpha(alpha, x)?;
    let n = x.n();
    let mut out = VElement::zero(n);
    for ((a, j), c) in x.terms() {
        let ts = enumerate_t(n, alpha, |i| {
            let mut caps: Vec<(i64, i64)> = row(a, i).into_iter().collect();
            caps.push((i, alpha.get(i)));
            caps
        });
        for t in ts {
            let (tp, _, tm) = t.split();
            let tt = t.tilde();
            let (ttp, _, ttm) = tt.split();
            let label = &(&(a + &ttp) + &ttm) - &(&tp + &tm);
            if !label.is_nonneg() {
                continue;
            }
            let mut f = 0;
            let mut coeff = LaurentScalar::one();
            let mut jt = j.clone();
            for i in 1..=n as i64 {
                let ai = row(a, i);
                let (tp_, ti) = (row(&t, i - 1), row(&t, i));
                f += pair_sum(&ai, &tp_, |jj, l| l >= jj && jj != i);
                f -= pair_sum(&ai, &ti, |jj, l| l > jj && jj != i);
                f -= pair_sum(&tp_, &ti, |jj, l| jj >= l && l != i);
                f += pair_sum(&ti, &ti, |jj, l| jj > l && l != i && l != i + 1);
                f += ti.range(i + 1..).map(|(_, &x)| x).sum::<i64>() * t.get(i - 1, i);
                f += j.get(i) * (t.get(i, i) - t.get(i - 1, i));
                for (&jj, &tpj) in &tp_ {
                    if jj != i {
                        coeff *= &gauss_sq(a.get(i, jj) - t.get(i, jj) + tpj, tpj).bar();
                    }
                }
                let shift: i64 = tp_.range(i + 1..).map(|(_, &x)| x).sum::<i64>()
                    - ti.range(i + 1..).map(|(_, &x)| x).sum::<i64>();
                jt.add_at(i, shift);
            }
            let scalar = c.mul_scalar(&coeff.shift(f as i32));
            let reduced = reduce_j_lambda(&label, &jt, &tt.diagonal())?;
            out.add_assign(&reduced.scale(&scalar));
        }
    }
    Ok(out)
}

/// `A(j)` for a single label, as a convenience for callers.
pub fn a_j(a: &PeriodicMatrix, j: &IntVectorN) -> Result<VElement> {
    VElement::basis(a.clone(), j.clone())
}
