//! Special functions around the log-gamma and log-Barnes-G functions on (0, 1).
//!
//! The crate is layered bottom-up:
//!
//! * [`special`] holds the scalar functions (lnΓ, ln G, Cl₂, ζ and its
//!   derivatives, complex ψ, harmonic numbers) and the shared [`ConstantsTable`].
//! * [`series`] evaluates the slowly convergent sums that appear in the Fourier
//!   coefficients and in the second moment of ln G, with Euler–Maclaurin tails.
//! * [`quadrature`] is a tanh-sinh integrator on (0, 1) plus the moment
//!   integrals built on it.
//! * [`fourier`] generates closed-form Fourier coefficients and pairs them with
//!   the generalized Parseval identity.
//! * [`identities`] is the verification catalog: every identity is evaluated
//!   by two independent routes and the residual is reported.

pub mod approx;
pub mod em;
pub mod error;
pub mod fourier;
pub mod identities;
pub mod quadrature;
pub mod series;
pub mod special;
pub(crate) mod sum;

pub use approx::ApproxValue;
pub use error::{Error, Result};
pub use special::constants::{constants, ConstantsTable};
