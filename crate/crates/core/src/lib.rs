//! Exact steady-state probabilities of the open-boundary TASEP.
//!
//! The stationary probability of a state word `tau` is `P(tau) / Z_n`, where
//! `P(tau)` sums the weights of the Catalan alternative tableaux of type
//! `tau`. This crate computes `P(tau)` three ways (tableau enumeration,
//! weighted Catalan paths, and a determinant of Laurent polynomials obtained
//! from non-intersecting lattice paths), computes `Z_n` two ways, and checks
//! everything against the exact stationary vector of the Markov chain.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod lgv;
pub mod markov;
pub mod partition;
pub mod paths;
pub mod tableau;

pub use algebra::{BigRational, LaurentPoly, PolyMatrix};
pub use error::{Error, Result};
pub use lgv::{det_formula, TwistedDigraph};
pub use paths::CatalanPath;
pub use tableau::{enumerate_tableaux, sum_weights, CatalanTableau, Shape, StateWord};
