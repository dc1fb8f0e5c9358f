use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::afmat::PeriodicMatrix;
use crate::error::{Error, Result};
use crate::laurent::{compositions, vec_gauss_sym, IntVectorN, LaurentScalar};

/// Which basis the coefficients of a [`SchurElement`] refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Basis {
    /// The double coset basis `e_A`.
    #[serde(rename = "e")]
    E,
    /// The normalized basis `[A] = v^{-d_A} e_A`.
    #[serde(rename = "n")]
    N,
}

/// An element of the affine v-Schur algebra `𝒮_△(n, r)`.
#[derive(Clone, PartialEq, Eq)]
pub struct SchurElement {
    n: usize,
    r: usize,
    basis: Basis,
    terms: BTreeMap<PeriodicMatrix, LaurentScalar>,
}

impl SchurElement {
    pub fn zero(n: usize, r: usize, basis: Basis) -> Self {
        Self {
            n,
            r,
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// A single basis vector `e_A` or `[A]`.
    pub fn basis_element(a: PeriodicMatrix, basis: Basis) -> Result<Self> {
        if !a.is_nonneg() || a.sigma() < 0 {
            return Err(Error::Shape(format!("{a} has a negative entry")));
        }
        let mut x = Self::zero(a.n(), a.sigma() as usize, basis);
        x.add_term(a, &LaurentScalar::one());
        Ok(x)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<PeriodicMatrix, LaurentScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: &PeriodicMatrix) -> LaurentScalar {
        self.terms.get(a).cloned().unwrap_or_default()
    }

    /// Adds `c` times the basis vector of `a`. Labels with a negative entry
    /// stand for the zero element and are dropped.
    pub fn add_term(&mut self, a: PeriodicMatrix, c: &LaurentScalar) {
        if c.is_zero() || !a.is_nonneg() {
            return;
        }
        assert_eq!(a.n(), self.n, "period mismatch");
        assert_eq!(
            a.sigma(),
            self.r as i64,
            "label {a} is not of level {}",
            self.r
        );
        match self.terms.get_mut(&a) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&a);
                }
            }
            None => {
                self.terms.insert(a, c.clone());
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        let other = other.to_basis(self.basis);
        for (a, c) in &other.terms {
            self.add_term(a.clone(), c);
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(&other.scale(&LaurentScalar::constant(-1)));
        out
    }

    pub fn scale(&self, c: &LaurentScalar) -> Self {
        let mut out = Self::zero(self.n, self.r, self.basis);
        for (a, x) in &self.terms {
            out.add_term(a.clone(), &(x * c));
        }
        out
    }

    /// Rewrites the element in the requested basis using `[A] = v^{-d_A} e_A`.
    pub fn to_basis(&self, basis: Basis) -> Self {
        if basis == self.basis {
            return self.clone();
        }
        let sign = match (self.basis, basis) {
            (Basis::E, Basis::N) => 1,
            _ => -1,
        };
        let terms = self
            .terms
            .iter()
            .map(|(a, c)| (a.clone(), c.shift(sign * a.d_exponent() as i32)))
            .collect();
        Self {
            n: self.n,
            r: self.r,
            basis,
            terms,
        }
    }

    /// Equality as algebra elements, independent of the stored basis.
    pub fn same_as(&self, other: &Self) -> bool {
        self.n == other.n && self.r == other.r && self.terms == other.to_basis(self.basis).terms
    }
}

impl fmt::Display for SchurElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let (open, close) = match self.basis {
            Basis::E => ("e[", "]"),
            Basis::N => ("[", "]"),
        };
        let mut first = true;
        for (a, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})·{open}{a}{close}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SchurElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S(n={}, r={}): {self}", self.n, self.r)
    }
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    matrix: PeriodicMatrix,
    coeff: LaurentScalar,
}

#[derive(Serialize, Deserialize)]
struct ElementWire {
    n: usize,
    r: usize,
    basis: Basis,
    terms: Vec<TermWire>,
}

impl Serialize for SchurElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ElementWire {
            n: self.n,
            r: self.r,
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(a, c)| TermWire {
                    matrix: a.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SchurElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = ElementWire::deserialize(d)?;
        let mut x = SchurElement::zero(wire.n, wire.r, wire.basis);
        for t in wire.terms {
            if t.matrix.n() != wire.n || t.matrix.sigma() != wire.r as i64 || !t.matrix.is_nonneg()
            {
                return Err(D::Error::custom(format!(
                    "label {} is not in Θ(n, r)",
                    t.matrix
                )));
            }
            x.add_term(t.matrix, &t.coeff);
        }
        Ok(x)
    }
}

/// `A(j, r) = Σ_{μ ∈ Λ(n, r − σ(A))} v^{μ·j} [A + diag(μ)]` for off-diagonal `A`.
pub fn a_j_r(a: &PeriodicMatrix, j: &IntVectorN, r: usize) -> Result<SchurElement> {
    a_j_lambda_r(a, j, &IntVectorN::zero(a.n()), r)
}

/// `A(j, λ, r) = Σ_μ v^{μ·j} [μ over λ] [A + diag(μ)]`.
pub fn a_j_lambda_r(
    a: &PeriodicMatrix,
    j: &IntVectorN,
    lambda: &IntVectorN,
    r: usize,
) -> Result<SchurElement> {
    if !a.is_off_diagonal() || !a.is_nonneg() {
        return Err(Error::Shape(format!(
            "{a} is not a nonnegative off-diagonal matrix"
        )));
    }
    if !lambda.is_nonneg() {
        return Err(Error::Precondition(format!("negative λ = {lambda}")));
    }
    let mut out = SchurElement::zero(a.n(), r, Basis::N);
    let rest = r as i64 - a.sigma();
    if rest < 0 {
        return Ok(out);
    }
    for mu in compositions(a.n(), rest) {
        let c = vec_gauss_sym(&mu, lambda).shift(mu.dot(j) as i32);
        out.add_term(a + &PeriodicMatrix::diag(&mu), &c);
    }
    Ok(out)
}
