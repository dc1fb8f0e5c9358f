//! The Ringel-Hall algebra of the cyclic quiver `△(n)`.

mod closed;
pub mod linalg;
mod rep;

pub use closed::{
    hall_left_mul, semisimple_hall_product, twisted_mul_semisimple, twisted_via_hall_polynomials,
    HallTerms,
};
pub use rep::{
    brute_hall_number, check_label, dim_end, end_count_f2, label_from_ranks, u_tilde_factor,
    ConcreteRep,
};

use crate::laurent::IntVectorN;

/// `⟨λ, μ⟩ = Σ_i λ_i μ_i - Σ_i λ_i μ_{i+1}`.
pub fn euler_form(lambda: &IntVectorN, mu: &IntVectorN) -> i64 {
    lambda.euler(mu)
}
