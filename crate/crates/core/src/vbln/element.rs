use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::afmat::PeriodicMatrix;
use crate::error::{Error, Result};
use crate::laurent::{IntVectorN, LaurentFraction, LaurentScalar};
use crate::schur::{a_j_r, Basis, SchurElement};

/// A basis label `A(j)` of `𝒱_△(n)`.
pub type VLabel = (PeriodicMatrix, IntVectorN);

/// An element of `𝒱_△(n)` in the basis `{A(j)}`.
#[derive(Clone, PartialEq, Eq)]
pub struct VElement {
    n: usize,
    terms: BTreeMap<VLabel, LaurentFraction>,
}

impl VElement {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The basis element `A(j)`.
    pub fn basis(a: PeriodicMatrix, j: IntVectorN) -> Result<Self> {
        let mut x = Self::zero(a.n());
        x.try_add_term(a, j, &LaurentFraction::one())?;
        Ok(x)
    }

    /// `0(0)`, the identity.
    pub fn one(n: usize) -> Self {
        Self::basis(PeriodicMatrix::zero(n), IntVectorN::zero(n)).expect("zero matrix is a label")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<VLabel, LaurentFraction> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: &PeriodicMatrix, j: &IntVectorN) -> LaurentFraction {
        self.terms
            .get(&(a.clone(), j.clone()))
            .cloned()
            .unwrap_or_else(LaurentFraction::zero)
    }

    pub fn try_add_term(
        &mut self,
        a: PeriodicMatrix,
        j: IntVectorN,
        c: &LaurentFraction,
    ) -> Result<()> {
        if !a.is_off_diagonal() || !a.is_nonneg() {
            return Err(Error::Shape(format!("{a} is not in Θ^±")));
        }
        if a.n() != self.n || j.n() != self.n {
            return Err(Error::PeriodMismatch(self.n, a.n()));
        }
        self.add_term(a, j, c);
        Ok(())
    }

    pub(crate) fn add_term(&mut self, a: PeriodicMatrix, j: IntVectorN, c: &LaurentFraction) {
        if c.is_zero() {
            return;
        }
        let key = (a, j);
        match self.terms.get_mut(&key) {
            Some(slot) => {
                *slot = &*slot + c;
                if slot.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for ((a, j), c) in &other.terms {
            self.add_term(a.clone(), j.clone(), c);
        }
    }

    pub fn scale(&self, c: &LaurentFraction) -> Self {
        let mut out = Self::zero(self.n);
        for ((a, j), x) in &self.terms {
            out.add_term(a.clone(), j.clone(), &(x * c));
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(&other.scale(&LaurentFraction::from(-1)));
        out
    }

    /// The image `ζ_r(x)` in `𝒮_△(n, r)`, in the `[·]` basis.
    ///
    /// Fails if a coefficient of the image is not a Laurent polynomial.
    pub fn eval_at_level(&self, r: usize) -> Result<SchurElement> {
        let mut acc: BTreeMap<PeriodicMatrix, LaurentFraction> = BTreeMap::new();
        for ((a, j), c) in &self.terms {
            for (b, x) in a_j_r(a, j, r)?.terms() {
                let slot = acc.entry(b.clone()).or_insert_with(LaurentFraction::zero);
                *slot = &*slot + &c.mul_scalar(x);
            }
        }
        let mut out = SchurElement::zero(self.n, r, Basis::N);
        for (b, c) in acc {
            let Some(x) = c.as_laurent() else {
                return Err(Error::InexactDivision(format!(
                    "coefficient {c} of [{b}] at level {r}"
                )));
            };
            out.add_term(b, &x);
        }
        Ok(out)
    }

    /// Whether every coefficient is a Laurent polynomial.
    pub fn has_laurent_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.as_laurent().is_some())
    }
}

impl fmt::Display for VElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((a, j), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})·({a})({j})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for VElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V(n={}): {self}", self.n)
    }
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    matrix: PeriodicMatrix,
    j: Vec<i64>,
    coeff_num: LaurentScalar,
    coeff_den: LaurentScalar,
}

#[derive(Serialize, Deserialize)]
struct ElementWire {
    n: usize,
    terms: Vec<TermWire>,
}

impl Serialize for VElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ElementWire {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|((a, j), c)| TermWire {
                    matrix: a.clone(),
                    j: j.entries().to_vec(),
                    coeff_num: c.numer().clone(),
                    coeff_den: c.denom().clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for VElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = ElementWire::deserialize(d)?;
        let mut x = VElement::zero(wire.n);
        for t in wire.terms {
            let c = LaurentFraction::new(t.coeff_num, t.coeff_den).map_err(D::Error::custom)?;
            x.try_add_term(t.matrix, IntVectorN::new(t.j), &c)
                .map_err(D::Error::custom)?;
        }
        Ok(x)
    }
}
