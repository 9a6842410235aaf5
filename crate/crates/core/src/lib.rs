//! Numerical verification of Glaisher–Ramanujan type integrals of Dedekind
//! eta powers, the character sums behind them, and a Dirichlet-beta series.
//!
//! Each identity is evaluated from both sides independently: the integral by
//! certified quadrature, the right-hand side from its closed form or series.
//! [`verify`] pairs them up and issues verdicts.

pub mod arithmetic;
pub mod cli;
pub mod closed_forms;
pub mod error;
pub mod eta_series;
pub mod quadrature;
pub mod report;
pub mod summation;
pub mod verify;

pub use error::{Error, Result};
pub use summation::{Estimate, SeriesResult};
