use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The argument lies outside the domain of the function (poles, branch cuts, divergence).
    #[error("domain error: {function} is undefined at {arg}")]
    Domain { function: &'static str, arg: String },

    /// A structural argument (order, index, policy field) is out of its supported range.
    #[error("argument error: {0}")]
    Argument(String),

    /// Quadrature refinement stopped at `levels` without meeting the target.
    #[error("no convergence after {levels} levels: best estimate {best} (last difference {abs_err:e})")]
    Convergence {
        best: f64,
        abs_err: f64,
        levels: usize,
    },

    /// The integrand returned a non-finite value at an interior node.
    #[error("integrand '{description}' is not finite at x = {x}")]
    Integrand { description: String, x: f64 },

    #[error("unknown catalog entry '{0}'")]
    Catalog(String),
}

impl Error {
    pub(crate) fn domain(function: &'static str, arg: impl std::fmt::Display) -> Self {
        Error::Domain {
            function,
            arg: arg.to_string(),
        }
    }
}
