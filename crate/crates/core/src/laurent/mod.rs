//! Exact arithmetic in `Z[v, v^-1]` and `Q(v)`, plus the Gaussian
//! coefficients used by the multiplication formulas.

mod fraction;
mod gauss;
mod intvec;
mod poly;
mod xcoeff;

pub use fraction::LaurentFraction;
pub use gauss::{
    factorial_sq, frak_a, gauss_sq, gauss_sym, multinomial_sq, subset_sum_identity_check,
    vec_gauss_sq, vec_gauss_sym,
};
pub use intvec::{boxed, compositions, IntVectorN};
pub use poly::LaurentScalar;
pub use xcoeff::{decomposition_sum, x_coeff};
