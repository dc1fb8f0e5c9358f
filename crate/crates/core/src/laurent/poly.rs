//! Sparse Laurent polynomials in `v` with integer coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An element of `Z[v, v^-1]`.
///
/// Terms are kept sorted by exponent and no stored coefficient is zero, so
/// structural equality is ring equality.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentScalar {
    terms: Vec<(i32, i64)>,
}

impl LaurentScalar {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * v^e`.
    pub fn monomial(c: i64, e: i32) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            Self {
                terms: vec![(e, c)],
            }
        }
    }

    /// The indeterminate `v`.
    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    pub fn v_pow(e: i32) -> Self {
        Self::monomial(1, e)
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs,
    /// merging repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(iter: I) -> Self {
        let mut terms: Vec<(i32, i64)> = iter.into_iter().collect();
        terms.sort_unstable_by_key(|t| t.0);
        let mut out: Vec<(i32, i64)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Self { terms: out }
    }

    pub fn terms(&self) -> &[(i32, i64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms == [(0, 1)]
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.last().map(|t| t.0)
    }

    pub fn coeff(&self, e: i32) -> i64 {
        match self.terms.binary_search_by_key(&e, |t| t.0) {
            Ok(idx) => self.terms[idx].1,
            Err(_) => 0,
        }
    }

    pub fn leading_coeff(&self) -> i64 {
        self.terms.last().map_or(0, |t| t.1)
    }

    /// The ring involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        let terms = self.terms.iter().rev().map(|&(e, c)| (-e, c)).collect();
        Self { terms }
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|&(e, c)| (e + k, c)).collect(),
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|&(e, a)| (e, a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// True for `±v^k`, the units of the ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.abs() == 1
    }

    /// Evaluates at an integer. Fails on negative exponents.
    pub fn eval(&self, x: i128) -> Option<i128> {
        let mut acc: i128 = 0;
        for &(e, c) in &self.terms {
            if e < 0 {
                return None;
            }
            acc = acc.checked_add((c as i128).checked_mul(x.checked_pow(e as u32)?)?)?;
        }
        Some(acc)
    }

    /// Rewrites a polynomial in `v^2` as a polynomial in `q = v^2`.
    /// Returns `None` if an odd power of `v` occurs.
    pub fn halve_exponents(&self) -> Option<Self> {
        if self.terms.iter().any(|t| t.0 % 2 != 0) {
            return None;
        }
        Some(Self {
            terms: self.terms.iter().map(|&(e, c)| (e / 2, c)).collect(),
        })
    }

    /// Inverse of [`halve_exponents`](Self::halve_exponents): `q^k -> v^{2k}`.
    pub fn double_exponents(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|&(e, c)| (2 * e, c)).collect(),
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (num, shift_n) = to_dense(self);
        let (den, shift_d) = to_dense(d);
        let q = dense_div_exact(&num, &den)?;
        Some(from_dense(&q, shift_n - shift_d))
    }

    /// Greatest common divisor, normalized to have lowest exponent 0 and a
    /// positive leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return normalize_unit(other);
        }
        if other.is_zero() {
            return normalize_unit(self);
        }
        let (a, _) = to_dense(self);
        let (b, _) = to_dense(other);
        let g = dense_gcd(&a, &b);
        normalize_unit(&from_dense(&g, 0))
    }
}

/// Strips the monomial factor and the sign so that the lowest exponent is 0
/// and the leading coefficient is positive.
fn normalize_unit(p: &LaurentScalar) -> LaurentScalar {
    let Some(lo) = p.min_exp() else {
        return LaurentScalar::zero();
    };
    let shifted = p.shift(-lo);
    if shifted.leading_coeff() < 0 {
        -shifted
    } else {
        shifted
    }
}

fn to_dense(p: &LaurentScalar) -> (Vec<i128>, i32) {
    let lo = p.min_exp().unwrap_or(0);
    let hi = p.max_exp().unwrap_or(0);
    let mut out = vec![0i128; (hi - lo + 1) as usize];
    for &(e, c) in &p.terms {
        out[(e - lo) as usize] = c as i128;
    }
    (out, lo)
}

fn from_dense(coeffs: &[i128], shift: i32) -> LaurentScalar {
    let terms = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            let c = i64::try_from(c).expect("Laurent coefficient overflows i64");
            (i as i32 + shift, c)
        })
        .collect();
    LaurentScalar { terms }
}

fn trim(p: &mut Vec<i128>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn dense_div_exact(num: &[i128], den: &[i128]) -> Option<Vec<i128>> {
    let mut rem = num.to_vec();
    trim(&mut rem);
    let mut den = den.to_vec();
    trim(&mut den);
    if den.is_empty() {
        return None;
    }
    if rem.len() < den.len() {
        return if rem.is_empty() {
            Some(Vec::new())
        } else {
            None
        };
    }
    let lc = *den.last().unwrap();
    let mut quot = vec![0i128; rem.len() - den.len() + 1];
    for k in (0..quot.len()).rev() {
        let top = rem[k + den.len() - 1];
        if top % lc != 0 {
            return None;
        }
        let c = top / lc;
        quot[k] = c;
        if c != 0 {
            for (i, &d) in den.iter().enumerate() {
                rem[k + i] -= c * d;
            }
        }
    }
    if rem.iter().any(|&c| c != 0) {
        return None;
    }
    Some(quot)
}

fn content(p: &[i128]) -> i128 {
    p.iter().fold(0i128, |g, &c| gcd_i128(g, c.abs()))
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.abs()
}

fn primitive(p: &[i128]) -> Vec<i128> {
    let c = content(p);
    if c <= 1 {
        return p.to_vec();
    }
    p.iter().map(|&x| x / c).collect()
}

/// Primitive pseudo-remainder; `None` on `i128` overflow.
fn pseudo_rem(a: &[i128], b: &[i128]) -> Option<Vec<i128>> {
    let mut r = a.to_vec();
    trim(&mut r);
    let lb = *b.last().unwrap();
    while r.len() >= b.len() {
        let lr = *r.last().unwrap();
        let off = r.len() - b.len();
        for x in r.iter_mut() {
            *x = x.checked_mul(lb)?;
        }
        for (i, &bi) in b.iter().enumerate() {
            r[off + i] = r[off + i].checked_sub(lr.checked_mul(bi)?)?;
        }
        trim(&mut r);
        r = primitive(&r);
    }
    Some(r)
}

/// Primitive pseudo-remainder gcd in `Z[v]`, falling back to big integers
/// when intermediate coefficients leave `i128`.
fn dense_gcd(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    let c = gcd_i128(content(&a), content(&b));
    let mut pa = primitive(&a);
    let mut pb = primitive(&b);
    if pa.len() < pb.len() {
        std::mem::swap(&mut pa, &mut pb);
    }
    while !pb.is_empty() {
        let Some(r) = pseudo_rem(&pa, &pb) else {
            return big::gcd(&pa, &pb).iter().map(|&x| x * c).collect();
        };
        pa = pb;
        pb = primitive(&r);
    }
    pa.iter().map(|&x| x * c).collect()
}

mod big {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{Signed, ToPrimitive, Zero};

    fn trim(p: &mut Vec<BigInt>) {
        while p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
    }

    fn primitive(p: Vec<BigInt>) -> Vec<BigInt> {
        let c = p.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        if c.is_zero() || c == BigInt::from(1) {
            return p;
        }
        p.into_iter().map(|x| x / &c).collect()
    }

    fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut r = a.to_vec();
        trim(&mut r);
        let lb = b.last().unwrap().clone();
        while r.len() >= b.len() {
            let lr = r.last().unwrap().clone();
            let off = r.len() - b.len();
            for x in r.iter_mut() {
                *x *= &lb;
            }
            for (i, bi) in b.iter().enumerate() {
                r[off + i] -= &lr * bi;
            }
            trim(&mut r);
            r = primitive(r);
        }
        r
    }

    /// Primitive gcd of two primitive polynomials given in `i128`.
    pub(super) fn gcd(a: &[i128], b: &[i128]) -> Vec<i128> {
        let mut pa: Vec<BigInt> = a.iter().map(|&x| BigInt::from(x)).collect();
        let mut pb: Vec<BigInt> = b.iter().map(|&x| BigInt::from(x)).collect();
        while !pb.is_empty() {
            let r = primitive(pseudo_rem(&pa, &pb));
            pa = pb;
            pb = r;
        }
        if pa.last().is_some_and(|x| x.is_negative()) {
            pa = pa.into_iter().map(|x| -x).collect();
        }
        pa.iter()
            .map(|x| x.to_i128().expect("gcd of i128 polynomials fits in i128"))
            .collect()
    }
}

fn mul_terms(a: &[(i32, i64)], b: &[(i32, i64)]) -> LaurentScalar {
    if a.is_empty() || b.is_empty() {
        return LaurentScalar::zero();
    }
    if a.len() == 1 {
        let (e, c) = a[0];
        return LaurentScalar {
            terms: b.iter().map(|&(f, d)| (e + f, c * d)).collect(),
        };
    }
    if b.len() == 1 {
        return mul_terms(b, a);
    }
    let lo = a[0].0 + b[0].0;
    let hi = a[a.len() - 1].0 + b[b.len() - 1].0;
    let mut buf = vec![0i64; (hi - lo + 1) as usize];
    for &(e, c) in a {
        for &(f, d) in b {
            buf[(e + f - lo) as usize] += c * d;
        }
    }
    let terms = buf
        .into_iter()
        .enumerate()
        .filter(|(_, c)| *c != 0)
        .map(|(i, c)| (i as i32 + lo, c))
        .collect();
    LaurentScalar { terms }
}

fn merge(a: &[(i32, i64)], b: &[(i32, i64)], sign: i64) -> LaurentScalar {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, sign * b[j].1));
            j += 1;
        } else {
            let c = a[i].1 + sign * b[j].1;
            if c != 0 {
                out.push((a[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    LaurentScalar { terms: out }
}

impl Add for &LaurentScalar {
    type Output = LaurentScalar;
    fn add(self, rhs: &LaurentScalar) -> LaurentScalar {
        merge(&self.terms, &rhs.terms, 1)
    }
}

impl Sub for &LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, rhs: &LaurentScalar) -> LaurentScalar {
        merge(&self.terms, &rhs.terms, -1)
    }
}

impl Mul for &LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: &LaurentScalar) -> LaurentScalar {
        mul_terms(&self.terms, &rhs.terms)
    }
}

impl Neg for &LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        LaurentScalar {
            terms: self.terms.iter().map(|&(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for LaurentScalar {
    type Output = LaurentScalar;
    fn neg(mut self) -> LaurentScalar {
        for t in &mut self.terms {
            t.1 = -t.1;
        }
        self
    }
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident) => {
        impl $imp<LaurentScalar> for LaurentScalar {
            type Output = LaurentScalar;
            fn $method(self, rhs: LaurentScalar) -> LaurentScalar {
                (&self).$method(&rhs)
            }
        }
        impl $imp<&LaurentScalar> for LaurentScalar {
            type Output = LaurentScalar;
            fn $method(self, rhs: &LaurentScalar) -> LaurentScalar {
                (&self).$method(rhs)
            }
        }
        impl $imp<LaurentScalar> for &LaurentScalar {
            type Output = LaurentScalar;
            fn $method(self, rhs: LaurentScalar) -> LaurentScalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl AddAssign<&LaurentScalar> for LaurentScalar {
    fn add_assign(&mut self, rhs: &LaurentScalar) {
        if rhs.is_zero() {
            return;
        }
        *self = &*self + rhs;
    }
}

impl AddAssign for LaurentScalar {
    fn add_assign(&mut self, rhs: LaurentScalar) {
        *self += &rhs;
    }
}

impl SubAssign<&LaurentScalar> for LaurentScalar {
    fn sub_assign(&mut self, rhs: &LaurentScalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&LaurentScalar> for LaurentScalar {
    fn mul_assign(&mut self, rhs: &LaurentScalar) {
        *self = &*self * rhs;
    }
}

impl From<i64> for LaurentScalar {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl std::iter::Sum for LaurentScalar {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for LaurentScalar {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, x| acc * x)
    }
}

/// Renders ascending-exponent terms, e.g. `1 + v^2`, `-v^-2`, `3 - 2*v`.
impl fmt::Display for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, &(e, c)) in self.terms.iter().enumerate() {
            let mag = c.unsigned_abs();
            if idx == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (e, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "v")?,
                (1, m) => write!(f, "{m}*v")?,
                (e, 1) => write!(f, "v^{e}")?,
                (e, m) => write!(f, "{m}*v^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl Serialize for LaurentScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<(i32, i64)>::deserialize(deserializer)?;
        Ok(Self::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i32, i64)]) -> LaurentScalar {
        LaurentScalar::from_terms(terms.iter().copied())
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[(0, 1), (2, 1)]).to_string(), "1 + v^2");
        assert_eq!(p(&[(-2, -1)]).to_string(), "-v^-2");
        assert_eq!(p(&[(0, 3), (1, -2)]).to_string(), "3 - 2*v");
        assert_eq!(LaurentScalar::zero().to_string(), "0");
        assert_eq!(
            serde_json::to_string(&p(&[(2, 1), (0, 1)])).unwrap(),
            "[[0,1],[2,1]]"
        );
    }

    #[test]
    fn from_terms_cancels() {
        assert!(p(&[(1, 2), (1, -2)]).is_zero());
        assert_eq!(p(&[(3, 1), (1, 1), (3, 1)]), p(&[(1, 1), (3, 2)]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[(4, 1), (0, -1)]);
        let b = p(&[(2, 1), (0, -1)]);
        assert_eq!(a.div_exact(&b), Some(p(&[(0, 1), (2, 1)])));
        assert_eq!(b.div_exact(&a), None);
        let c = p(&[(-2, 1), (0, -1)]);
        assert_eq!(c.div_exact(&b), Some(p(&[(-2, -1)])));
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        let a = p(&[(4, 1), (0, -1)]); // v^4 - 1
        let b = p(&[(6, 1), (0, -1)]); // v^6 - 1
        assert_eq!(a.gcd(&b), p(&[(2, 1), (0, -1)]));
        assert_eq!(a.shift(-3).gcd(&a.scale(-2)), a.scale(1));
    }

    #[test]
    fn eval_and_halving() {
        let x = p(&[(0, 1), (2, 1)]);
        assert_eq!(x.halve_exponents(), Some(p(&[(0, 1), (1, 1)])));
        assert_eq!(x.halve_exponents().unwrap().eval(3), Some(4));
        assert_eq!(p(&[(1, 1)]).halve_exponents(), None);
        assert_eq!(p(&[(-1, 1)]).eval(2), None);
    }
}
