//! Scalar special functions and the shared constants table.

pub mod barnes;
pub mod bernoulli;
pub mod clausen;
pub mod constants;
pub mod digamma;
pub mod gamma;
pub mod harmonic;
pub mod zeta;

pub use barnes::ln_barnes_g;
pub use bernoulli::bernoulli2;
pub use clausen::clausen2;
pub use digamma::digamma_complex;
pub use gamma::ln_gamma;
pub use harmonic::harmonic;
pub use zeta::{zeta, zeta_derivative, zeta_derivative_neg};
