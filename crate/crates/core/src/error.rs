use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A series or quadrature ran out of its term/evaluation budget before
    /// its certified error bound dropped below the requested tolerance.
    #[error("{what}: no convergence after {used} (budget {budget}); bound {bound:e} > tol {tol:e}")]
    NonConvergence {
        what: &'static str,
        used: usize,
        budget: usize,
        bound: f64,
        tol: f64,
    },

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("parameter out of domain: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Domain(msg()))
    }
}
