//! Periodic integer vectors `(λ_i)_{i∈Z}` with `λ_i = λ_{i-n}`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

/// An element of `Z^n` viewed as an `n`-periodic sequence indexed by `Z`.
/// `entries[k]` holds the component with index `k + 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntVectorN {
    entries: Vec<i64>,
}

impl IntVectorN {
    pub fn new(entries: Vec<i64>) -> Self {
        assert!(!entries.is_empty(), "period must be positive");
        Self { entries }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(vec![0; n])
    }

    /// The unit vector `e_i` (any integer `i`, reduced mod `n`).
    pub fn unit(n: usize, i: i64) -> Self {
        let mut v = Self::zero(n);
        v.set(i, 1);
        v
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    fn slot(&self, i: i64) -> usize {
        (i - 1).rem_euclid(self.n() as i64) as usize
    }

    pub fn get(&self, i: i64) -> i64 {
        self.entries[self.slot(i)]
    }

    pub fn set(&mut self, i: i64, value: i64) {
        let s = self.slot(i);
        self.entries[s] = value;
    }

    pub fn add_at(&mut self, i: i64, delta: i64) {
        let s = self.slot(i);
        self.entries[s] += delta;
    }

    /// `σ(λ) = Σ_{i=1}^n λ_i`.
    pub fn sigma(&self) -> i64 {
        self.entries.iter().sum()
    }

    pub fn dot(&self, other: &Self) -> i64 {
        assert_eq!(self.n(), other.n(), "period mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn is_nonneg(&self) -> bool {
        self.entries.iter().all(|&x| x >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    /// Componentwise order `λ ≤ μ`.
    pub fn leq(&self, other: &Self) -> bool {
        assert_eq!(self.n(), other.n(), "period mismatch");
        self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    /// The Euler form `⟨λ,μ⟩ = Σ λ_i μ_i − Σ λ_i μ_{i+1}` of the cyclic quiver.
    pub fn euler(&self, other: &Self) -> i64 {
        let n = self.n() as i64;
        (1..=n)
            .map(|i| self.get(i) * (other.get(i) - other.get(i + 1)))
            .sum()
    }

    /// The vector `(λ_{i-1})_i`.
    pub fn shift_down(&self) -> Self {
        let n = self.n() as i64;
        Self::new((1..=n).map(|i| self.get(i - 1)).collect())
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::new(self.entries.iter().map(|x| x * c).collect())
    }
}

impl Add for &IntVectorN {
    type Output = IntVectorN;
    fn add(self, rhs: &IntVectorN) -> IntVectorN {
        assert_eq!(self.n(), rhs.n(), "period mismatch");
        IntVectorN::new(
            self.entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &IntVectorN {
    type Output = IntVectorN;
    fn sub(self, rhs: &IntVectorN) -> IntVectorN {
        assert_eq!(self.n(), rhs.n(), "period mismatch");
        IntVectorN::new(
            self.entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Neg for &IntVectorN {
    type Output = IntVectorN;
    fn neg(self) -> IntVectorN {
        self.scale(-1)
    }
}

impl Add for IntVectorN {
    type Output = IntVectorN;
    fn add(self, rhs: IntVectorN) -> IntVectorN {
        &self + &rhs
    }
}

impl Sub for IntVectorN {
    type Output = IntVectorN;
    fn sub(self, rhs: IntVectorN) -> IntVectorN {
        &self - &rhs
    }
}

impl fmt::Debug for IntVectorN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.entries)
    }
}

impl fmt::Display for IntVectorN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.entries)
    }
}

/// All nonnegative vectors of period `n` with entry sum `total`.
pub fn compositions(n: usize, total: i64) -> Vec<IntVectorN> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    fn rec(k: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<IntVectorN>) {
        if k + 1 == cur.len() {
            cur[k] = left;
            out.push(IntVectorN::new(cur.clone()));
            return;
        }
        for x in (0..=left).rev() {
            cur[k] = x;
            rec(k + 1, left - x, cur, out);
        }
    }
    if total >= 0 {
        rec(0, total, &mut cur, &mut out);
    }
    out
}

/// All vectors `0 ≤ β ≤ bound` componentwise.
pub fn boxed(bound: &IntVectorN) -> Vec<IntVectorN> {
    let mut out = vec![Vec::with_capacity(bound.n())];
    for &b in bound.entries() {
        let mut next = Vec::with_capacity(out.len() * (b.max(0) as usize + 1));
        for prefix in &out {
            for x in 0..=b {
                let mut p = prefix.clone();
                p.push(x);
                next.push(p);
            }
        }
        out = next;
    }
    out.into_iter().map(IntVectorN::new).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn periodic_indexing() {
        let v = IntVectorN::new(vec![3, 5]);
        assert_eq!(v.get(0), 5);
        assert_eq!(v.get(3), 3);
        assert_eq!(v.get(-2), 5);
        assert_eq!(v.shift_down(), IntVectorN::new(vec![5, 3]));
    }

    #[test]
    fn euler_form_units() {
        let e1 = IntVectorN::unit(2, 1);
        let e2 = IntVectorN::unit(2, 2);
        assert_eq!(e1.euler(&e1), 1);
        assert_eq!(e1.euler(&e2), -1);
        let e1 = IntVectorN::unit(3, 1);
        let e3 = IntVectorN::unit(3, 3);
        assert_eq!(e3.euler(&e1), -1);
        assert_eq!(e1.euler(&e3), 0);
    }

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(2, 2).len(), 3);
        assert_eq!(compositions(3, 4).len(), 15);
        assert_eq!(boxed(&IntVectorN::new(vec![1, 2])).len(), 6);
    }
}
