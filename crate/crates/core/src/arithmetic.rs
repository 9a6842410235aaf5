//! The non-principal character modulo 4 and the Dirichlet beta function.

use std::ops::Mul;

use crate::error::{require, Error, Result};
use crate::summation::{CompensatedSum, SeriesResult};

/// Term budget shared by the alternating series in this crate.
pub const DEFAULT_TERM_BUDGET: usize = 1_000_000;

/// Value of the character χ mod 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChiValue {
    Zero,
    Plus,
    Minus,
}

impl ChiValue {
    pub fn as_i32(self) -> i32 {
        match self {
            ChiValue::Zero => 0,
            ChiValue::Plus => 1,
            ChiValue::Minus => -1,
        }
    }

    pub fn as_f64(self) -> f64 {
        f64::from(self.as_i32())
    }
}

impl Mul for ChiValue {
    type Output = ChiValue;

    fn mul(self, rhs: ChiValue) -> ChiValue {
        match (self, rhs) {
            (ChiValue::Zero, _) | (_, ChiValue::Zero) => ChiValue::Zero,
            (a, b) if a == b => ChiValue::Plus,
            _ => ChiValue::Minus,
        }
    }
}

/// χ(n): 0 on even n, +1 for n ≡ 1 and −1 for n ≡ 3 (mod 4).
///
/// Only nonnegative arguments exist here; every sum in this crate runs over n ≥ 1.
pub fn chi(n: u64) -> ChiValue {
    match n % 4 {
        1 => ChiValue::Plus,
        3 => ChiValue::Minus,
        _ => ChiValue::Zero,
    }
}

/// Sums `Σ_{k≥0} (-1)^k a_k` where `a_k ≥ 0` is decreasing and convex for `k ≥ convex_from`.
///
/// For such a tail `T_N = a_N − a_{N+1} + …` the convexity gives
/// `a_N/2 ≤ T_N ≤ a_{N−1}/2`, so the midpoint of that bracket is used as the
/// tail estimate and half its width, `(a_{N−1} − a_N)/4`, is the certificate.
pub(crate) fn alternating_convex_sum(
    what: &'static str,
    a: impl Fn(usize) -> f64,
    convex_from: usize,
    tol: f64,
    budget: usize,
) -> Result<SeriesResult> {
    let mut sum = CompensatedSum::new();
    let a0 = a(0);
    let mut prev = a0;
    sum.add(a0);
    let mut bound = f64::INFINITY;
    for n in 1..=budget {
        let cur = a(n);
        if n > convex_from {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let partial = sum.value();
            let rounding = 4.0 * f64::EPSILON * (partial.abs() + a0.abs());
            bound = (prev - cur).abs() / 4.0 + rounding;
            if bound <= tol {
                let value = partial + sign * (prev + cur) / 4.0;
                return Ok(SeriesResult::new(value, bound, n, tol));
            }
        }
        sum.add(if n % 2 == 0 { cur } else { -cur });
        prev = cur;
    }
    Err(Error::NonConvergence {
        what,
        used: budget,
        budget,
        bound,
        tol,
    })
}

/// β(s) = Σ_{n≥0} (−1)^n/(2n+1)^s for real s > 0.
///
/// The terms `(2n+1)^{-s}` are completely monotone, so the convexity bracket
/// certifies the tail from the very first term.
pub fn dirichlet_beta(s: f64, tol: f64) -> Result<SeriesResult> {
    require(s > 0.0 && s.is_finite(), || format!("dirichlet_beta needs s > 0, got {s}"))?;
    require(tol > 0.0, || format!("tol must be positive, got {tol}"))?;
    alternating_convex_sum(
        "dirichlet_beta",
        |k| (2.0 * k as f64 + 1.0).powf(-s),
        0,
        tol,
        DEFAULT_TERM_BUDGET,
    )
}
