//! Frobenius degree of coprime monic polynomials.
//!
//! Given monic `A_1, ..., A_n` over `Q` or a finite field, the Frobenius
//! degree is the largest degree of a monic `F` with no representation
//! `F = sum x_i A_i` where every `x_i` is zero or monic.

pub mod certify;
pub mod error;
pub mod field;
pub mod linalg;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod rng;
pub mod solver;
pub mod typespace;

pub use error::{Error, Result};
pub use field::{Field, FieldElement};
pub use poly::{Degree, Poly};
pub use solver::{Config, FrobeniusReport, Method, SolutionWitness};
