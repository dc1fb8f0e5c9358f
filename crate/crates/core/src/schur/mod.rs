//! The affine v-Schur algebra `𝒮_△(n, r)`.

mod closed;
mod element;
mod oracle;

pub use closed::{
    e_mul_lower, e_mul_upper, is_semisimple_shape, lower_shape, n_mul_lower, n_mul_upper,
    upper_shape,
};
pub(crate) use closed::{enumerate_t, row};
pub use element::{a_j_lambda_r, a_j_r, Basis, SchurElement};
pub use oracle::{decompose_double_cosets, e_mul, oracle_mul};

use crate::error::{Error, Result};

impl SchurElement {
    /// The product `self · other`, expanded bilinearly over basis products.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::PeriodMismatch(self.n(), other.n()));
        }
        if self.r() != other.r() {
            return Err(Error::LevelMismatch(self.r(), other.r()));
        }
        let x = self.to_basis(Basis::E);
        let y = other.to_basis(Basis::E);
        let mut out = Self::zero(self.n(), self.r(), Basis::E);
        for (b, c) in x.terms() {
            for (a, d) in y.terms() {
                if b.co() != a.ro() {
                    continue;
                }
                let prod = e_mul(b, a)?;
                out.add_assign(&prod.scale(&(c * d)));
            }
        }
        Ok(out.to_basis(self.basis()))
    }
}

impl std::ops::Mul for &SchurElement {
    type Output = SchurElement;
    fn mul(self, rhs: &SchurElement) -> SchurElement {
        self.try_mul(rhs).expect("Schur product")
    }
}

#[cfg(test)]
mod tests;
