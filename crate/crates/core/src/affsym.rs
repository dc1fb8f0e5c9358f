//! The extended affine symmetric group `𝔖_{△,r}`: bijections `w: Z → Z` with
//! `w(i + r) = w(i) + r`, plus Young subgroups, coset representatives and
//! the correspondence between double cosets and periodic matrices.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::afmat::PeriodicMatrix;
use crate::error::{Error, Result};
use crate::laurent::IntVectorN;

/// An affine permutation stored by its window `(w(1), …, w(r))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePermutation {
    window: Vec<i64>,
}

impl AffinePermutation {
    pub fn new(window: Vec<i64>) -> Result<Self> {
        let r = window.len();
        if r == 0 {
            return Err(Error::InvalidWindow { window, r });
        }
        let mut seen = vec![false; r];
        for &x in &window {
            let res = (x - 1).rem_euclid(r as i64) as usize;
            if seen[res] {
                return Err(Error::InvalidWindow { window, r });
            }
            seen[res] = true;
        }
        Ok(Self { window })
    }

    fn from_window_unchecked(window: Vec<i64>) -> Self {
        debug_assert!(Self::new(window.clone()).is_ok());
        Self { window }
    }

    pub fn identity(r: usize) -> Self {
        Self {
            window: (1..=r as i64).collect(),
        }
    }

    /// `ρ: j ↦ j + 1`.
    pub fn rho(r: usize) -> Self {
        Self {
            window: (2..=r as i64 + 1).collect(),
        }
    }

    pub fn rho_pow(r: usize, m: i64) -> Self {
        Self {
            window: (1..=r as i64).map(|i| i + m).collect(),
        }
    }

    /// The simple reflection `s_i` swapping `i + kr` and `i + 1 + kr`, `1 ≤ i ≤ r`.
    pub fn generator_s(i: usize, r: usize) -> Result<Self> {
        if r < 2 || i < 1 || i > r {
            return Err(Error::Precondition(format!(
                "no generator s_{i} at level {r}"
            )));
        }
        let mut window: Vec<i64> = (1..=r as i64).collect();
        if i < r {
            window.swap(i - 1, i);
        } else {
            window[r - 1] = r as i64 + 1;
            window[0] = 0;
        }
        Ok(Self { window })
    }

    pub fn r(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn apply(&self, i: i64) -> i64 {
        let r = self.r() as i64;
        let k = (i - 1).div_euclid(r);
        self.window[(i - 1 - k * r) as usize] + k * r
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.r(), other.r(), "level mismatch");
        Self {
            window: other.window.iter().map(|&y| self.apply(y)).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let r = self.r() as i64;
        let mut window = vec![0i64; self.r()];
        for (idx, &z) in self.window.iter().enumerate() {
            let i = idx as i64 + 1;
            let k = (z - 1).div_euclid(r);
            window[(z - 1 - k * r) as usize] = i - k * r;
        }
        Self { window }
    }

    pub fn is_identity(&self) -> bool {
        self.window
            .iter()
            .enumerate()
            .all(|(idx, &x)| x == idx as i64 + 1)
    }

    /// True when the window is a permutation of `1..=r`, i.e. `w ∈ 𝔖_r`.
    pub fn is_finite(&self) -> bool {
        let r = self.r() as i64;
        self.window.iter().all(|&x| (1..=r).contains(&x))
    }

    /// Number of inversions `(i, j)` with `1 ≤ i ≤ r`, `i < j`, `w(i) > w(j)`.
    ///
    /// Counted per window pair: `j = j0 + kr` is an inversion partner of `i`
    /// exactly for `k ≥ [j0 ≤ i]` and `kr < w(i) − w(j0)`.
    pub fn length(&self) -> usize {
        let r = self.r() as i64;
        let mut total = 0i64;
        for i in 1..=r {
            let wi = self.window[(i - 1) as usize];
            for j0 in 1..=r {
                let k_min = if j0 > i { 0 } else { 1 };
                let diff = wi - self.window[(j0 - 1) as usize];
                // largest k with kr < diff
                let k_max = -(-diff).div_euclid(r) - 1;
                total += (k_max - k_min + 1).max(0);
            }
        }
        total as usize
    }

    /// The same inversion count by direct enumeration up to a safe horizon.
    pub fn length_by_enumeration(&self) -> usize {
        let r = self.r() as i64;
        let lo = *self.window.iter().min().unwrap();
        let hi = *self.window.iter().max().unwrap();
        let horizon = r + (hi - lo) + 1;
        let mut count = 0;
        for i in 1..=r {
            for j in (i + 1)..=(i + horizon) {
                if self.apply(i) > self.apply(j) {
                    count += 1;
                }
            }
        }
        count
    }

    /// `w = ρ^m σ` with `σ` in the Coxeter part (window sum `r(r+1)/2`).
    pub fn decompose(&self) -> (i64, Self) {
        let r = self.r() as i64;
        let sum: i64 = self.window.iter().sum();
        let m = (sum - r * (r + 1) / 2) / r;
        let sigma = Self {
            window: self.window.iter().map(|x| x - m).collect(),
        };
        (m, sigma)
    }

    /// Whether `ℓ(s_i w) < ℓ(w)`, i.e. `w^{-1}(i) > w^{-1}(i+1)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.apply(i as i64) > inv.apply(i as i64 + 1)
    }

    /// Reduced word `[i_1, …, i_k]` with `σ = s_{i_1} ⋯ s_{i_k}` for the
    /// Coxeter part `σ` of `w`; `w = ρ^m s_{i_1} ⋯ s_{i_k}`.
    pub fn reduced_word(&self) -> (i64, Vec<usize>) {
        let (m, mut sigma) = self.decompose();
        let r = self.r();
        let mut word = Vec::new();
        while !sigma.is_identity() {
            let i = (1..=r)
                .find(|&i| sigma.has_left_descent(i))
                .expect("non-identity element has a left descent");
            sigma = Self::generator_s(i, r).unwrap().compose(&sigma);
            word.push(i);
        }
        (m, word)
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w = [{}] @ {}", self.window.iter().join(","), self.r())
    }
}

impl fmt::Debug for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.window.iter().join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct PermWire {
    r: usize,
    window: Vec<i64>,
}

impl Serialize for AffinePermutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PermWire {
            r: self.r(),
            window: self.window.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AffinePermutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = PermWire::deserialize(deserializer)?;
        if wire.r != wire.window.len() {
            return Err(D::Error::custom("window length differs from r"));
        }
        Self::new(wire.window).map_err(D::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// compositions and blocks

/// `λ_{0,i} = λ_1 + ⋯ + λ_i` for `0 ≤ i ≤ n`.
fn partial_sums(lambda: &IntVectorN) -> Vec<i64> {
    let mut out = vec![0];
    for &x in lambda.entries() {
        out.push(out.last().unwrap() + x);
    }
    out
}

/// The block `R^λ_i = {λ_{k,i0-1}+1, …, λ_{k,i0}}` for `i = i0 + kn`, as
/// an inclusive range.
pub fn block(lambda: &IntVectorN, i: i64) -> (i64, i64) {
    let n = lambda.n() as i64;
    let r = lambda.sigma();
    let k = (i - 1).div_euclid(n);
    let i0 = (i - 1 - k * n) as usize;
    let ps = partial_sums(lambda);
    (k * r + ps[i0] + 1, k * r + ps[i0 + 1])
}

/// The index `i ∈ Z` with `z ∈ R^λ_i`.
pub fn block_index(lambda: &IntVectorN, z: i64) -> i64 {
    let n = lambda.n() as i64;
    let r = lambda.sigma();
    assert!(r > 0, "block_index on an empty composition");
    let k = (z - 1).div_euclid(r);
    let z0 = z - k * r;
    let ps = partial_sums(lambda);
    let i0 = (1..=n as usize)
        .find(|&i| ps[i - 1] < z0 && z0 <= ps[i])
        .unwrap();
    i0 as i64 + k * n
}

fn check_composition(lambda: &IntVectorN, r: usize) -> Result<()> {
    if !lambda.is_nonneg() || lambda.sigma() != r as i64 {
        return Err(Error::Precondition(format!(
            "{lambda} is not a composition of {r}"
        )));
    }
    Ok(())
}

fn increasing_on_blocks(w: &AffinePermutation, lambda: &IntVectorN) -> bool {
    (1..=lambda.n() as i64).all(|i| {
        let (lo, hi) = block(lambda, i);
        (lo..hi).all(|z| w.apply(z) < w.apply(z + 1))
    })
}

/// `d ∈ 𝒟_λ`, the shortest representatives of the cosets `𝔖_λ d`:
/// `d^{-1}` increases on every block of `λ`.
pub fn is_min_right_coset_rep(d: &AffinePermutation, lambda: &IntVectorN) -> bool {
    increasing_on_blocks(&d.inverse(), lambda)
}

/// `d ∈ 𝒟_{λ,μ} = 𝒟_λ ∩ 𝒟_μ^{-1}`.
pub fn is_min_double_coset_rep(
    d: &AffinePermutation,
    lambda: &IntVectorN,
    mu: &IntVectorN,
) -> bool {
    is_min_right_coset_rep(d, lambda) && increasing_on_blocks(d, mu)
}

/// All elements of the Young subgroup `𝔖_λ ⊆ 𝔖_r`.
pub fn young_subgroup(lambda: &IntVectorN) -> Vec<AffinePermutation> {
    let r = lambda.sigma() as usize;
    let mut out = vec![AffinePermutation::identity(r).window];
    for i in 1..=lambda.n() as i64 {
        let (lo, hi) = block(lambda, i);
        if hi <= lo {
            continue;
        }
        let mut next = Vec::new();
        for w in &out {
            for perm in (lo..=hi).permutations((hi - lo + 1) as usize) {
                let mut w2 = w.clone();
                for (idx, x) in perm.into_iter().enumerate() {
                    w2[(lo - 1) as usize + idx] = x;
                }
                next.push(w2);
            }
        }
        out = next;
    }
    out.into_iter()
        .map(AffinePermutation::from_window_unchecked)
        .collect()
}

/// A uniformly random element of `𝔖_λ`.
pub fn random_young_element<R: Rng + ?Sized>(
    lambda: &IntVectorN,
    rng: &mut R,
) -> AffinePermutation {
    let r = lambda.sigma() as usize;
    let mut window: Vec<i64> = (1..=r as i64).collect();
    for i in 1..=lambda.n() as i64 {
        let (lo, hi) = block(lambda, i);
        if hi > lo {
            window[(lo - 1) as usize..hi as usize].shuffle(rng);
        }
    }
    AffinePermutation::from_window_unchecked(window)
}

/// The double coset `𝔖_λ d 𝔖_μ`, sorted.
pub fn double_coset(
    lambda: &IntVectorN,
    d: &AffinePermutation,
    mu: &IntVectorN,
) -> Vec<AffinePermutation> {
    let left = young_subgroup(lambda);
    let right = young_subgroup(mu);
    let mut set = BTreeSet::new();
    for u in &left {
        let ud = u.compose(d);
        for w in &right {
            set.insert(ud.compose(w));
        }
    }
    set.into_iter().collect()
}

/// `ȷ_△(λ, d, μ) = (|R^λ_k ∩ d R^μ_l|)_{k,l}`.
pub fn jmath(
    lambda: &IntVectorN,
    d: &AffinePermutation,
    mu: &IntVectorN,
) -> Result<PeriodicMatrix> {
    let r = d.r();
    check_composition(lambda, r)?;
    check_composition(mu, r)?;
    if lambda.n() != mu.n() {
        return Err(Error::PeriodMismatch(lambda.n(), mu.n()));
    }
    if !is_min_double_coset_rep(d, lambda, mu) {
        return Err(Error::NotRepresentative(d.to_string()));
    }
    Ok(jmath_unchecked(lambda, d, mu))
}

/// `ȷ_△` without the representative check; valid for any element of the
/// double coset.
pub fn jmath_unchecked(
    lambda: &IntVectorN,
    d: &AffinePermutation,
    mu: &IntVectorN,
) -> PeriodicMatrix {
    let r = d.r() as i64;
    let mut a = PeriodicMatrix::zero(lambda.n());
    for y in 1..=r {
        let l = block_index(mu, y);
        let k = block_index(lambda, d.apply(y));
        a.add_entry(k, l, 1);
    }
    a
}

fn check_label(a: &PeriodicMatrix) -> Result<usize> {
    if !a.is_nonneg() {
        return Err(Error::Shape(format!("negative entry in {a}")));
    }
    let r = a.sigma();
    if r <= 0 {
        return Err(Error::Shape("empty matrix has no permutation".into()));
    }
    Ok(r as usize)
}

/// The element `ỹ_A` read off the pseudo-matrix of `A`: the block of row `i`
/// is filled column by column, and the window lists the entries of column 1
/// (all rows, top to bottom), then column 2, …, column n.
pub fn pseudo_matrix_rep(a: &PeriodicMatrix) -> Result<AffinePermutation> {
    let r = check_label(a)? as i64;
    let n = a.n() as i64;
    let lambda = a.ro();
    let mut seq = Vec::with_capacity(r as usize);
    for col in 1..=n {
        // all cells (k, col), k ∈ Z, in increasing row order
        let mut cells: Vec<(i64, i64)> = a
            .iter()
            .filter(|&(_, l0, _)| (col - l0).rem_euclid(n) == 0)
            .map(|(k0, l0, x)| (k0 + (col - l0), x))
            .collect();
        cells.sort_unstable();
        for (k, x) in cells {
            let (start, _) = block(&lambda, k);
            let shift = k - ((k - 1).rem_euclid(n) + 1);
            // entries of row k strictly left of column `col`
            let before: i64 = a
                .iter()
                .filter(|&(k0, l0, _)| k0 + shift == k && l0 + shift < col)
                .map(|(_, _, y)| y)
                .sum();
            for s in 0..x {
                seq.push(start + before + s);
            }
        }
    }
    AffinePermutation::new(seq)
}

/// `ℓ(w) = Σ_{1≤i≤λ_1} (w^{-1}(i) − i)` for `w ∈ 𝒟_λ ∩ 𝔖_r`, `λ` with two parts.
pub fn finite_length_formula(w: &AffinePermutation, lambda: &IntVectorN) -> Result<i64> {
    check_composition(lambda, w.r())?;
    if lambda.n() != 2 || !w.is_finite() || !is_min_right_coset_rep(w, lambda) {
        return Err(Error::Precondition(format!(
            "{w} is not a finite minimal coset representative for {lambda}"
        )));
    }
    let inv = w.inverse();
    Ok((1..=lambda.get(1)).map(|i| inv.apply(i) - i).sum())
}

/// Which of the two bijections of the subset-tuple description to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeltaCase {
    /// `δ = (α_0, β_1, α_1, …, α_{n-1}, β_n)` with `α_{i-1} = μ_i − β_i`;
    /// the first `α_{i-1}` positions of `R^μ_i` are moved.
    Upper,
    /// `θ = (β_1, γ_1, …, β_n, γ_n)` with `γ = μ − β`; the last `γ_i`
    /// positions of `R^μ_i` are moved.
    Lower,
}

/// The interleaved composition `δ` (or `θ`) of `r` with `2n` parts.
pub fn delta_composition(mu: &IntVectorN, beta: &IntVectorN, case: DeltaCase) -> IntVectorN {
    let n = mu.n() as i64;
    let mut parts = Vec::with_capacity(2 * mu.n());
    for i in 1..=n {
        let moved = mu.get(i) - beta.get(i);
        match case {
            DeltaCase::Upper => parts.extend([moved, beta.get(i)]),
            DeltaCase::Lower => parts.extend([beta.get(i), moved]),
        }
    }
    IntVectorN::new(parts)
}

/// Enumerates `𝒟_δ ∩ 𝔖_μ` through subset tuples: for each block `R^μ_i` a
/// subset `Y` of size `μ_i − β_i`, with `w^{-1}` sending the moved positions
/// onto `Y` and the others onto the complement, both increasingly.
pub fn enumerate_ddelta_in_smu(
    mu: &IntVectorN,
    beta: &IntVectorN,
    case: DeltaCase,
) -> Result<Vec<AffinePermutation>> {
    if !beta.is_nonneg() || !beta.leq(mu) {
        return Err(Error::Precondition(format!(
            "need 0 <= β <= μ, got β={beta} μ={mu}"
        )));
    }
    let r = mu.sigma() as usize;
    let n = mu.n() as i64;
    // per block: list of possible images of the block under w^{-1}
    let mut per_block: Vec<Vec<Vec<i64>>> = Vec::new();
    for i in 1..=n {
        let (lo, hi) = block(mu, i);
        let elems: Vec<i64> = (lo..=hi).collect();
        let moved = (mu.get(i) - beta.get(i)) as usize;
        let mut choices = Vec::new();
        for y in elems.iter().copied().combinations(moved) {
            let rest: Vec<i64> = elems.iter().copied().filter(|x| !y.contains(x)).collect();
            let image = match case {
                DeltaCase::Upper => y.iter().chain(&rest).copied().collect(),
                DeltaCase::Lower => rest.iter().chain(&y).copied().collect(),
            };
            choices.push(image);
        }
        per_block.push(choices);
    }
    let mut out = Vec::new();
    for combo in per_block.iter().multi_cartesian_product() {
        let inv_window: Vec<i64> = combo.into_iter().flatten().copied().collect();
        debug_assert_eq!(inv_window.len(), r);
        out.push(AffinePermutation::from_window_unchecked(inv_window).inverse());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> AffinePermutation {
        AffinePermutation::new(v.to_vec()).unwrap()
    }

    fn iv(v: &[i64]) -> IntVectorN {
        IntVectorN::new(v.to_vec())
    }

    #[test]
    fn generators() {
        assert_eq!(AffinePermutation::rho(3).window(), &[2, 3, 4]);
        assert_eq!(
            AffinePermutation::generator_s(1, 2).unwrap().window(),
            &[2, 1]
        );
        assert_eq!(
            AffinePermutation::generator_s(2, 2).unwrap().window(),
            &[0, 3]
        );
        assert!(AffinePermutation::new(vec![1, 3]).is_err());
        let x = w(&[4, -1, 3]);
        assert!(x.compose(&x.inverse()).is_identity());
        assert!(x.inverse().compose(&x).is_identity());
    }

    #[test]
    fn lengths() {
        assert_eq!(AffinePermutation::rho(4).length(), 0);
        for i in 1..=3 {
            assert_eq!(AffinePermutation::generator_s(i, 3).unwrap().length(), 1);
        }
        let x = w(&[4, -1, 3]);
        assert_eq!(x.length(), x.length_by_enumeration());
        let (m, word) = x.reduced_word();
        assert_eq!(word.len(), x.length());
        let mut y = AffinePermutation::rho_pow(3, m);
        for &i in &word {
            y = y.compose(&AffinePermutation::generator_s(i, 3).unwrap());
        }
        assert_eq!(y, x);
    }

    #[test]
    fn coset_predicates() {
        let la = iv(&[2, 0]);
        assert!(is_min_right_coset_rep(&AffinePermutation::identity(2), &la));
        assert!(!is_min_right_coset_rep(&w(&[2, 1]), &la));
    }

    #[test]
    fn jmath_examples() {
        let la = iv(&[1, 1]);
        let e = |i, j| PeriodicMatrix::e_unit(2, i, j);
        assert_eq!(
            jmath(&la, &AffinePermutation::identity(2), &la).unwrap(),
            PeriodicMatrix::diag(&la)
        );
        assert_eq!(jmath(&la, &w(&[2, 1]), &la).unwrap(), &e(1, 2) + &e(2, 1));
        assert_eq!(jmath(&la, &w(&[0, 3]), &la).unwrap(), &e(1, 0) + &e(2, 3));
        let a = &e(1, 2) + &e(2, 1);
        let y = pseudo_matrix_rep(&a).unwrap();
        assert_eq!(y, w(&[2, 1]));
        assert_eq!(y.length(), 1);
    }

    #[test]
    fn finite_length() {
        let la = iv(&[1, 1]);
        assert_eq!(finite_length_formula(&w(&[2, 1]), &la).unwrap(), 1);
        assert_eq!(
            finite_length_formula(&AffinePermutation::identity(2), &la).unwrap(),
            0
        );
    }

    #[test]
    fn ddelta_example() {
        let list = enumerate_ddelta_in_smu(&iv(&[1, 1]), &iv(&[0, 1]), DeltaCase::Upper).unwrap();
        assert_eq!(list.len(), 1);
        let list = enumerate_ddelta_in_smu(&iv(&[2, 1]), &iv(&[1, 0]), DeltaCase::Upper).unwrap();
        assert_eq!(list.len(), 2);
        assert!(enumerate_ddelta_in_smu(&iv(&[1, 1]), &iv(&[2, 1]), DeltaCase::Upper).is_err());
    }
}
