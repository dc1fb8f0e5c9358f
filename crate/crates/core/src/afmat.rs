//! Periodic integer matrices `A = (a_{i,j})_{i,j∈Z}` with `a_{i,j} = a_{i+n,j+n}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::laurent::IntVectorN;

/// A periodic `Z × Z` matrix with finitely many nonzero entries per period.
///
/// Only the representatives `(i, j)` with `1 ≤ i ≤ n` are stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PeriodicMatrix {
    n: usize,
    entries: BTreeMap<(i64, i64), i64>,
}

fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -(-a).div_euclid(b)
}

impl PeriodicMatrix {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1, "period must be positive");
        Self {
            n,
            entries: BTreeMap::new(),
        }
    }

    /// Builds a matrix from `(i, j, a)` triples with arbitrary `i`; repeated
    /// cells accumulate.
    pub fn from_entries<I: IntoIterator<Item = (i64, i64, i64)>>(n: usize, iter: I) -> Self {
        let mut m = Self::zero(n);
        for (i, j, a) in iter {
            m.add_entry(i, j, a);
        }
        m
    }

    /// `E^△_{i,j} = Σ_k E_{i+kn, j+kn}`.
    pub fn e_unit(n: usize, i: i64, j: i64) -> Self {
        Self::from_entries(n, [(i, j, 1)])
    }

    pub fn diag(lambda: &IntVectorN) -> Self {
        let n = lambda.n();
        Self::from_entries(n, (1..=n as i64).map(|i| (i, i, lambda.get(i))))
    }

    /// `S_α = Σ_i α_i E^△_{i,i+1}`.
    pub fn s_alpha(alpha: &IntVectorN) -> Self {
        let n = alpha.n();
        Self::from_entries(n, (1..=n as i64).map(|i| (i, i + 1, alpha.get(i))))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn normalize(&self, i: i64, j: i64) -> (i64, i64) {
        let n = self.n as i64;
        let k = floor_div(i - 1, n);
        (i - k * n, j - k * n)
    }

    pub fn get(&self, i: i64, j: i64) -> i64 {
        let key = self.normalize(i, j);
        self.entries.get(&key).copied().unwrap_or(0)
    }

    pub fn add_entry(&mut self, i: i64, j: i64, delta: i64) {
        if delta == 0 {
            return;
        }
        let key = self.normalize(i, j);
        let slot = self.entries.entry(key).or_insert(0);
        *slot += delta;
        if *slot == 0 {
            self.entries.remove(&key);
        }
    }

    pub fn set(&mut self, i: i64, j: i64, value: i64) {
        let key = self.normalize(i, j);
        if value == 0 {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, value);
        }
    }

    /// Stored entries `((i, j), a)` with `1 ≤ i ≤ n`, in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, i64, i64)> + '_ {
        self.entries.iter().map(|(&(i, j), &a)| (i, j, a))
    }

    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_nonneg(&self) -> bool {
        self.entries.values().all(|&a| a > 0)
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries.keys().all(|&(i, j)| i == j)
    }

    /// True when `a_{i,j} = 0` for `i ≥ j`.
    pub fn is_strictly_upper(&self) -> bool {
        self.entries.keys().all(|&(i, j)| i < j)
    }

    pub fn is_strictly_lower(&self) -> bool {
        self.entries.keys().all(|&(i, j)| i > j)
    }

    /// True when every diagonal entry vanishes.
    pub fn is_off_diagonal(&self) -> bool {
        self.entries.keys().all(|&(i, j)| i != j)
    }

    pub fn transpose(&self) -> Self {
        Self::from_entries(self.n, self.iter().map(|(i, j, a)| (j, i, a)))
    }

    /// `Ã` with `ã_{i,j} = a_{i-1,j}`.
    pub fn tilde(&self) -> Self {
        Self::from_entries(self.n, self.iter().map(|(i, j, a)| (i + 1, j, a)))
    }

    /// `(A^+, A^0, A^-)`: strictly upper, diagonal and strictly lower parts.
    pub fn split(&self) -> (Self, Self, Self) {
        let pick = |f: fn(i64, i64) -> bool| {
            Self::from_entries(self.n, self.iter().filter(|&(i, j, _)| f(i, j)))
        };
        (pick(|i, j| i < j), pick(|i, j| i == j), pick(|i, j| i > j))
    }

    /// `A^± = A^+ + A^-`.
    pub fn off_diagonal(&self) -> Self {
        Self::from_entries(self.n, self.iter().filter(|&(i, j, _)| i != j))
    }

    /// The diagonal `(a_{i,i})_i` as a vector.
    pub fn diagonal(&self) -> IntVectorN {
        IntVectorN::new((1..=self.n as i64).map(|i| self.get(i, i)).collect())
    }

    pub fn sigma(&self) -> i64 {
        self.entries.values().sum()
    }

    /// Row sums `(Σ_j a_{i,j})_{1≤i≤n}`.
    pub fn ro(&self) -> IntVectorN {
        let mut v = IntVectorN::zero(self.n);
        for (i, _, a) in self.iter() {
            v.add_at(i, a);
        }
        v
    }

    /// Column sums `(Σ_i a_{i,j})_{1≤j≤n}`.
    pub fn co(&self) -> IntVectorN {
        let mut v = IntVectorN::zero(self.n);
        for (_, j, a) in self.iter() {
            v.add_at(j, a);
        }
        v
    }

    /// `d_A = Σ_{1≤i≤n, k≤i, l>j} a_{i,j} a_{k,l}`.
    pub fn d_exponent(&self) -> i64 {
        let n = self.n as i64;
        let mut total = 0;
        for (i, j, a) in self.iter() {
            for (k0, l0, b) in self.iter() {
                // copies (k0 + tn, l0 + tn) with k0 + tn ≤ i and l0 + tn > j
                let count = floor_div(i - k0, n) - floor_div(j - l0, n);
                total += a * b * count.max(0);
            }
        }
        total
    }

    /// `Σ_{1≤i≤n, i<k, j>l} a_{i,j} a_{k,l}`, the length of the shortest
    /// double coset representative encoded by `A`.
    pub fn length_formula(&self) -> i64 {
        let n = self.n as i64;
        let mut total = 0;
        for (i, j, a) in self.iter() {
            for (k0, l0, b) in self.iter() {
                // copies with k0 + tn > i and l0 + tn < j
                let count = ceil_div(j - l0, n) - 1 - floor_div(i - k0, n);
                total += a * b * count.max(0);
            }
        }
        total
    }

    /// `Σ_{s≤i, t≥j} a_{s,t}` for `i < j`.
    pub fn upper_corner_sum(&self, i: i64, j: i64) -> i64 {
        let n = self.n as i64;
        self.iter()
            .map(|(k0, l0, a)| {
                let hi = floor_div(i - k0, n);
                let lo = ceil_div(j - l0, n);
                a * (hi - lo + 1).max(0)
            })
            .sum()
    }

    /// `Σ_{s≥i, t≤j} a_{s,t}` for `i > j`.
    pub fn lower_corner_sum(&self, i: i64, j: i64) -> i64 {
        let n = self.n as i64;
        self.iter()
            .map(|(k0, l0, a)| {
                let lo = ceil_div(i - k0, n);
                let hi = floor_div(j - l0, n);
                a * (hi - lo + 1).max(0)
            })
            .sum()
    }

    fn max_upper_span(&self) -> i64 {
        self.iter().map(|(i, j, _)| j - i).max().unwrap_or(0).max(0)
    }

    fn max_lower_span(&self) -> i64 {
        self.iter().map(|(i, j, _)| i - j).max().unwrap_or(0).max(0)
    }

    /// The order `A ⪯ B` on off-diagonal matrices, comparing all upper and
    /// lower corner sums. Sums are periodic, so `i` (resp. `j`) runs over one
    /// period and the other index over the span of the supports.
    pub fn preceq(&self, other: &Self) -> bool {
        assert_eq!(self.n, other.n, "period mismatch");
        let n = self.n as i64;
        let up = self.max_upper_span().max(other.max_upper_span());
        for i in 1..=n {
            for j in (i + 1)..=(i + up) {
                if self.upper_corner_sum(i, j) > other.upper_corner_sum(i, j) {
                    return false;
                }
            }
        }
        let down = self.max_lower_span().max(other.max_lower_span());
        for j in 1..=n {
            for i in (j + 1)..=(j + down) {
                if self.lower_corner_sum(i, j) > other.lower_corner_sum(i, j) {
                    return false;
                }
            }
        }
        true
    }

    /// `A ≺ B`: `A ⪯ B` and `A ≠ B`.
    pub fn prec(&self, other: &Self) -> bool {
        self != other && self.preceq(other)
    }

    /// Dimension vector of the nilpotent representation `M(A)` for strictly
    /// upper `A`: the segment `M^{i,j}` covers the vertices `i, …, j-1`.
    pub fn dim_vector(&self) -> IntVectorN {
        let mut d = IntVectorN::zero(self.n);
        for (i, j, a) in self.iter() {
            for k in i..j {
                d.add_at(k, a);
            }
        }
        d
    }
}

impl Add for &PeriodicMatrix {
    type Output = PeriodicMatrix;
    fn add(self, rhs: &PeriodicMatrix) -> PeriodicMatrix {
        assert_eq!(self.n, rhs.n, "period mismatch");
        let mut out = self.clone();
        for (i, j, a) in rhs.iter() {
            out.add_entry(i, j, a);
        }
        out
    }
}

impl Sub for &PeriodicMatrix {
    type Output = PeriodicMatrix;
    fn sub(self, rhs: &PeriodicMatrix) -> PeriodicMatrix {
        assert_eq!(self.n, rhs.n, "period mismatch");
        let mut out = self.clone();
        for (i, j, a) in rhs.iter() {
            out.add_entry(i, j, -a);
        }
        out
    }
}

impl fmt::Display for PeriodicMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, j, a) in self.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if a == 1 {
                write!(f, "E({i},{j})")?;
            } else {
                write!(f, "{a}*E({i},{j})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PeriodicMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[n={}: {}]", self.n, self)
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixWire {
    n: usize,
    entries: Vec<(i64, i64, i64)>,
}

impl Serialize for PeriodicMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        MatrixWire {
            n: self.n,
            entries: self.iter().collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PeriodicMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = MatrixWire::deserialize(deserializer)?;
        if wire.n < 1 {
            return Err(D::Error::custom("period n must be positive"));
        }
        Ok(Self::from_entries(wire.n, wire.entries))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: i64, j: i64) -> PeriodicMatrix {
        PeriodicMatrix::e_unit(2, i, j)
    }

    #[test]
    fn sums_and_shapes() {
        let a = e(1, 2);
        assert_eq!(a.sigma(), 1);
        assert_eq!(a.ro().entries(), &[1, 0]);
        assert_eq!(a.co().entries(), &[0, 1]);
        let s = PeriodicMatrix::s_alpha(&IntVectorN::new(vec![1, 1]));
        assert_eq!(s, &e(1, 2) + &e(2, 3));
        assert_eq!(s.co().entries(), &[1, 1]);
        assert_eq!(s.get(0, 1), 1);
        assert_eq!(a.transpose(), e(2, 1));
    }

    #[test]
    fn tilde_shifts_rows() {
        assert_eq!(e(1, 2).tilde(), e(2, 2));
        assert_eq!(e(2, 3).tilde(), e(1, 1));
        // n row shifts move every entry one period to the left
        let mut m = &e(1, 3) + &e(2, 1);
        for _ in 0..2 {
            m = m.tilde();
        }
        assert_eq!(m, &e(1, 1) + &e(2, -1));
    }

    #[test]
    fn split_parts() {
        let a = &e(1, 2) + &PeriodicMatrix::diag(&IntVectorN::new(vec![1, 0]));
        let (p, z, m) = a.split();
        assert_eq!(p, e(1, 2));
        assert_eq!(z, PeriodicMatrix::diag(&IntVectorN::new(vec![1, 0])));
        assert!(m.is_zero());
    }

    #[test]
    fn d_exponent_values() {
        assert_eq!(e(1, 2).d_exponent(), 0);
        assert_eq!((&e(1, 2) + &e(1, 1)).d_exponent(), 1);
        assert_eq!((&e(1, 3) + &e(2, 2)).d_exponent(), 1);
    }

    #[test]
    fn length_formula_values() {
        assert_eq!(
            PeriodicMatrix::diag(&IntVectorN::new(vec![2, 1])).length_formula(),
            0
        );
        assert_eq!((&e(1, 2) + &e(2, 1)).length_formula(), 1);
    }

    #[test]
    fn order_basics() {
        let a = &e(1, 2) + &e(2, 1);
        assert!(a.preceq(&a));
        assert!(PeriodicMatrix::zero(2).preceq(&e(1, 2)));
        assert!(!e(1, 2).preceq(&PeriodicMatrix::zero(2)));
        assert!(e(1, 2).prec(&e(1, 3)));
    }

    #[test]
    fn json_round_trip() {
        let a = &e(1, 3) + &e(2, -1);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"n":2,"entries":[[1,3,1],[2,-1,1]]}"#);
        let b: PeriodicMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
    }
}
