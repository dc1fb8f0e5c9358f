//! Nilpotent representations of the cyclic quiver over `𝔽_p`.

use itertools::Itertools;

use super::linalg::{apply_mod, rank_mod, rank_rational, subspaces, MatP};
use crate::afmat::PeriodicMatrix;
use crate::error::{Error, Result};
use crate::laurent::LaurentScalar;

/// Checks that `a` labels a nilpotent representation.
pub fn check_label(a: &PeriodicMatrix) -> Result<()> {
    if !a.is_strictly_upper() || !a.is_nonneg() {
        return Err(Error::Shape(format!("{a} is not in Θ^+")));
    }
    Ok(())
}

/// Vertex `t ∈ Z` as an index `0..n`.
fn vertex(t: i64, n: usize) -> usize {
    (t - 1).rem_euclid(n as i64) as usize
}

/// An explicit representation: spaces `V_1, …, V_n` and arrows
/// `x_k : V_k → V_{k+1}` (as `dim V_{k+1} × dim V_k` matrices).
#[derive(Clone, Debug)]
pub struct ConcreteRep {
    p: u64,
    dims: Vec<usize>,
    arrows: Vec<MatP>,
}

impl ConcreteRep {
    /// `M(A) = ⊕ a_{i,j} M^{i,j}` with the segment `M^{i,j}` spanned by
    /// `b_i, …, b_{j-1}` and `x b_t = b_{t+1}`.
    pub fn from_label(a: &PeriodicMatrix, p: u64) -> Result<Self> {
        check_label(a)?;
        let n = a.n();
        let mut dims = vec![0usize; n];
        let mut edges = Vec::new();
        for (i, j, mult) in a.iter() {
            for _ in 0..mult {
                let mut prev: Option<(usize, usize)> = None;
                for t in i..j {
                    let v = vertex(t, n);
                    let idx = dims[v];
                    dims[v] += 1;
                    if let Some((pv, pidx)) = prev {
                        edges.push((pv, pidx, idx));
                    }
                    prev = Some((v, idx));
                }
            }
        }
        let mut arrows: Vec<MatP> = (0..n)
            .map(|k| vec![vec![0; dims[k]]; dims[(k + 1) % n]])
            .collect();
        for (v, from, to) in edges {
            arrows[v][to][from] = 1;
        }
        Ok(Self { p, dims, arrows })
    }

    pub fn n(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// `x^ℓ v` for `v ∈ V_k`, landing in `V_{k+ℓ}`.
    fn push(&self, k: usize, len: usize, v: &[u64]) -> Vec<u64> {
        let n = self.n();
        let mut cur = v.to_vec();
        for s in 0..len {
            cur = apply_mod(&self.arrows[(k + s) % n], &cur, self.p);
        }
        cur
    }

    fn unit(&self, k: usize, b: usize) -> Vec<u64> {
        let mut e = vec![0; self.dims[k]];
        e[b] = 1;
        e
    }

    /// Whether `x_k U_k ⊆ U_{k+1}` for all `k`.
    fn is_stable(&self, sub: &[MatP]) -> bool {
        let n = self.n();
        (0..n).all(|k| {
            let target = &sub[(k + 1) % n];
            let d = target.len();
            sub[k].iter().all(|u| {
                let image = apply_mod(&self.arrows[k], u, self.p);
                let mut m = target.clone();
                m.push(image);
                rank_mod(&m, self.p) == d
            })
        })
    }

    /// Ranks `dim x^ℓ(U_k)` for `ℓ = 0..=depth`.
    fn sub_ranks(&self, sub: &[MatP], depth: usize) -> Vec<Vec<usize>> {
        (0..self.n())
            .map(|k| {
                (0..=depth)
                    .map(|len| {
                        let imgs: Vec<Vec<u64>> =
                            sub[k].iter().map(|u| self.push(k, len, u)).collect();
                        if imgs.is_empty() {
                            0
                        } else {
                            rank_mod(&imgs, self.p)
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Ranks of `x^ℓ` on `V_k / U_k → V_{k+ℓ} / U_{k+ℓ}`.
    fn quotient_ranks(&self, sub: &[MatP], depth: usize) -> Vec<Vec<usize>> {
        let n = self.n();
        (0..n)
            .map(|k| {
                (0..=depth)
                    .map(|len| {
                        let target = &sub[(k + len) % n];
                        let mut m = target.clone();
                        for b in 0..self.dims[k] {
                            m.push(self.push(k, len, &self.unit(k, b)));
                        }
                        if m.is_empty() {
                            0
                        } else {
                            rank_mod(&m, self.p) - target.len()
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// The isomorphism class of the whole representation.
    pub fn label(&self) -> PeriodicMatrix {
        let full: Vec<MatP> = (0..self.n())
            .map(|k| (0..self.dims[k]).map(|b| self.unit(k, b)).collect())
            .collect();
        label_from_ranks(&self.sub_ranks(&full, self.total_dim() + 1))
    }
}

/// Recovers the segment multiset from `r[k][ℓ] = rank(x^ℓ : V_{k+1} → V_{k+1+ℓ})`.
///
/// With `g(k, ℓ) = r_k(ℓ) - r_k(ℓ+1)` (basis vectors at `k` with exactly
/// `ℓ` successors), the segment starting at `s` of length `L` occurs
/// `g(s, L-1) - g(s-1, L)` times.
pub fn label_from_ranks(ranks: &[Vec<usize>]) -> PeriodicMatrix {
    let n = ranks.len();
    let depth = ranks.first().map_or(0, |r| r.len());
    let r = |k: i64, len: usize| -> i64 {
        let row = &ranks[vertex(k, n)];
        row.get(len).copied().unwrap_or(0) as i64
    };
    let g = |k: i64, len: usize| r(k, len) - r(k, len + 1);
    let mut out = PeriodicMatrix::zero(n);
    for s in 1..=n as i64 {
        for len in 1..depth {
            let m = g(s, len - 1) - g(s - 1, len);
            out.add_entry(s, s + len as i64, m);
        }
    }
    out
}

/// `φ^C_{X,Y}` at `q = p`: submodules `N ⊆ M(C)` with `N ≅ M(Y)` and
/// `M(C)/N ≅ M(X)`, counted by enumerating arrow-stable subspace tuples.
pub fn brute_hall_number(
    x: &PeriodicMatrix,
    y: &PeriodicMatrix,
    c: &PeriodicMatrix,
    p: u64,
) -> Result<u64> {
    for m in [x, y, c] {
        check_label(m)?;
    }
    if &x.dim_vector() + &y.dim_vector() != c.dim_vector() {
        return Ok(0);
    }
    let rep = ConcreteRep::from_label(c, p)?;
    let n = rep.n();
    let dy = y.dim_vector();
    let depth = rep.total_dim() + 1;
    let per_vertex: Vec<Vec<MatP>> = (0..n)
        .map(|k| subspaces(rep.dims[k], dy.get(k as i64 + 1) as usize, p))
        .collect();
    let mut count = 0;
    for choice in per_vertex
        .iter()
        .map(|v| v.iter())
        .multi_cartesian_product()
    {
        let sub: Vec<MatP> = choice.into_iter().cloned().collect();
        if !rep.is_stable(&sub) {
            continue;
        }
        if label_from_ranks(&rep.sub_ranks(&sub, depth)) == *y
            && label_from_ranks(&rep.quotient_ranks(&sub, depth)) == *x
        {
            count += 1;
        }
    }
    Ok(count)
}

fn end_system(a: &PeriodicMatrix) -> Result<(Vec<usize>, Vec<Vec<i64>>)> {
    let rep = ConcreteRep::from_label(a, 2)?;
    let n = rep.n();
    let dims = rep.dims.clone();
    let mut offset = vec![0usize; n + 1];
    for k in 0..n {
        offset[k + 1] = offset[k] + dims[k] * dims[k];
    }
    let var = |k: usize, r: usize, c: usize| offset[k] + r * dims[k] + c;
    let mut rows = Vec::new();
    for k in 0..n {
        let nk = (k + 1) % n;
        let x = &rep.arrows[k];
        // (F_{k+1} x_k - x_k F_k)[r][c] = 0
        for r in 0..dims[nk] {
            for c in 0..dims[k] {
                let mut row = vec![0i64; offset[n]];
                for m in 0..dims[nk] {
                    row[var(nk, r, m)] += x[m][c] as i64;
                }
                for m in 0..dims[k] {
                    row[var(k, m, c)] -= x[r][m] as i64;
                }
                rows.push(row);
            }
        }
    }
    Ok((offset, rows))
}

/// `dim End(M(A))` over `ℚ`, from the intertwiner equations.
pub fn dim_end(a: &PeriodicMatrix) -> Result<usize> {
    let (offset, rows) = end_system(a)?;
    let unknowns = *offset.last().unwrap();
    if rows.is_empty() {
        return Ok(unknowns);
    }
    Ok(unknowns - rank_rational(&rows))
}

/// `|End(M(A))|` over `𝔽_2` by trying every tuple of vertex maps; `None`
/// when there are more than `max_unknowns` matrix entries.
pub fn end_count_f2(a: &PeriodicMatrix, max_unknowns: usize) -> Result<Option<u64>> {
    let (offset, rows) = end_system(a)?;
    let unknowns = *offset.last().unwrap();
    if unknowns > max_unknowns {
        return Ok(None);
    }
    let mut count = 0;
    for code in 0u64..(1 << unknowns) {
        let ok = rows.iter().all(|row| {
            let s: i64 = row
                .iter()
                .enumerate()
                .filter(|&(i, _)| code >> i & 1 == 1)
                .map(|(_, &c)| c)
                .sum();
            s.rem_euclid(2) == 0
        });
        if ok {
            count += 1;
        }
    }
    Ok(Some(count))
}

/// `v^{dim End(M(A)) - dim M(A)}`, so that `ũ_A = u_tilde_factor(A) · u_A`.
pub fn u_tilde_factor(a: &PeriodicMatrix) -> Result<LaurentScalar> {
    let e = dim_end(a)? as i64 - a.dim_vector().sigma();
    Ok(LaurentScalar::v_pow(e as i32))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: usize, e: &[(i64, i64, i64)]) -> PeriodicMatrix {
        PeriodicMatrix::from_entries(n, e.iter().copied())
    }

    #[test]
    fn labels_round_trip() {
        for a in [
            m(2, &[(1, 2, 2)]),
            m(2, &[(2, 4, 1), (1, 2, 1)]),
            m(3, &[(1, 4, 1), (2, 3, 1), (3, 5, 1)]),
        ] {
            assert_eq!(ConcreteRep::from_label(&a, 2).unwrap().label(), a);
        }
    }

    #[test]
    fn hand_hall_numbers() {
        let s1 = m(2, &[(1, 2, 1)]);
        let s2 = m(2, &[(2, 3, 1)]);
        let two_s1 = m(2, &[(1, 2, 2)]);
        assert_eq!(brute_hall_number(&s1, &s1, &two_s1, 2).unwrap(), 3);
        assert_eq!(brute_hall_number(&s1, &s1, &two_s1, 3).unwrap(), 4);
        let seg = m(2, &[(2, 4, 1)]);
        assert_eq!(brute_hall_number(&s2, &s1, &seg, 2).unwrap(), 1);
        assert_eq!(brute_hall_number(&s1, &s2, &seg, 2).unwrap(), 0);
        let sum = &s1 + &s2;
        assert_eq!(brute_hall_number(&s2, &s1, &sum, 3).unwrap(), 1);
    }

    #[test]
    fn end_dims() {
        assert_eq!(dim_end(&m(2, &[(1, 2, 1)])).unwrap(), 1);
        assert_eq!(dim_end(&m(2, &[(1, 2, 2)])).unwrap(), 4);
        assert_eq!(dim_end(&m(2, &[(1, 3, 1)])).unwrap(), 1);
        // a segment of length 3 at n = 2 overlaps itself twice
        assert_eq!(dim_end(&m(2, &[(1, 4, 1)])).unwrap(), 2);
        assert_eq!(end_count_f2(&m(2, &[(1, 2, 2)]), 16).unwrap(), Some(16));
    }
}
