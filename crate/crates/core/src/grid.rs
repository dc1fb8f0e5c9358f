//! Finite parameter grids for the verification sweeps.

use crate::afmat::PeriodicMatrix;
use crate::laurent::IntVectorN;

/// Cells `(i, j)` with `1 ≤ i ≤ n` and `|j - i| ≤ span`, optionally without the diagonal.
fn cells(n: usize, span: i64, diagonal: bool) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for i in 1..=n as i64 {
        for j in (i - span)..=(i + span) {
            if diagonal || j != i {
                out.push((i, j));
            }
        }
    }
    out
}

fn fill(
    cells: &[(i64, i64)],
    k: usize,
    left: i64,
    cur: &mut PeriodicMatrix,
    out: &mut Vec<PeriodicMatrix>,
) {
    if left == 0 {
        out.push(cur.clone());
        return;
    }
    if k == cells.len() {
        return;
    }
    let (i, j) = cells[k];
    for x in (0..=left).rev() {
        cur.add_entry(i, j, x);
        fill(cells, k + 1, left - x, cur, out);
        cur.add_entry(i, j, -x);
    }
}

fn with_sigma(n: usize, cells: &[(i64, i64)], sigma: i64) -> Vec<PeriodicMatrix> {
    let mut out = Vec::new();
    fill(cells, 0, sigma, &mut PeriodicMatrix::zero(n), &mut out);
    out
}

/// All `A ∈ Θ_△(n, r)` supported in the window `|j - i| ≤ span`.
pub fn theta(n: usize, r: usize, span: i64) -> Vec<PeriodicMatrix> {
    with_sigma(n, &cells(n, span, true), r as i64)
}

/// All off-diagonal `A ∈ Θ^±_△(n)` with `σ(A) ≤ max_sigma` in the window.
pub fn theta_pm(n: usize, max_sigma: i64, span: i64) -> Vec<PeriodicMatrix> {
    let c = cells(n, span, false);
    (0..=max_sigma).flat_map(|s| with_sigma(n, &c, s)).collect()
}

/// All strictly upper `A ∈ Θ^+_△(n)` with `σ(A) ≤ max_sigma` and
/// `j - i ≤ span`.
pub fn theta_plus(n: usize, max_sigma: i64, span: i64) -> Vec<PeriodicMatrix> {
    let c: Vec<_> = cells(n, span, false)
        .into_iter()
        .filter(|&(i, j)| j > i)
        .collect();
    (0..=max_sigma).flat_map(|s| with_sigma(n, &c, s)).collect()
}

/// Every `B = S_α + diag(β)` with `co(B) = mu`.
pub fn upper_partners(mu: &IntVectorN) -> Vec<PeriodicMatrix> {
    let n = mu.n();
    // α_{i-1} ranges over 0..=μ_i
    let bound = IntVectorN::new((1..=n as i64).map(|k| mu.get(k + 1)).collect());
    crate::laurent::boxed(&bound)
        .into_iter()
        .map(|alpha| {
            let beta = mu - &alpha.shift_down();
            &PeriodicMatrix::s_alpha(&alpha) + &PeriodicMatrix::diag(&beta)
        })
        .collect()
}

/// Every `C = Σ γ_i E_{i+1,i} + diag(β)` with `co(C) = mu`.
pub fn lower_partners(mu: &IntVectorN) -> Vec<PeriodicMatrix> {
    let n = mu.n();
    crate::laurent::boxed(mu)
        .into_iter()
        .map(|gamma| {
            let beta = mu - &gamma;
            let low =
                PeriodicMatrix::from_entries(n, (1..=n as i64).map(|i| (i + 1, i, gamma.get(i))));
            &low + &PeriodicMatrix::diag(&beta)
        })
        .collect()
}

/// All `α ∈ ℕ^n` with `σ(α) ≤ max_sigma`.
pub fn small_vectors(n: usize, max_sigma: i64) -> Vec<IntVectorN> {
    (0..=max_sigma)
        .flat_map(|s| crate::laurent::compositions(n, s))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        // 2 rows × 5 columns, σ = 2: C(11, 2)
        assert_eq!(theta(2, 2, 2).len(), 55);
        assert_eq!(theta_pm(2, 1, 1).len(), 1 + 4);
        let mu = IntVectorN::new(vec![1, 2]);
        for b in upper_partners(&mu) {
            assert_eq!(b.co(), mu);
        }
        for c in lower_partners(&mu) {
            assert_eq!(c.co(), mu);
        }
        assert_eq!(upper_partners(&mu).len(), 6);
    }
}
