//! Exact computations in affine quantum Schur algebras, affine Hecke
//! algebras, and Ringel-Hall algebras of cyclic quivers.

pub mod affsym;
pub mod afmat;
pub mod error;
pub mod grid;
pub mod hall;
pub mod hecke;
pub mod laurent;
pub mod schur;
pub mod vbln;
pub mod verify;

pub use error::{Error, Result};
