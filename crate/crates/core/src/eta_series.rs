//! Dedekind eta on the imaginary axis, by its defining product and by the
//! Jacobi/Euler theta expansions of the three kernels that appear in the integrals.
//!
//! With `q = e^{-2πy}`, `η(iy) = q^{1/24} Π (1 − q^n)`. Substituting `y = 4x/π`
//! and `y = 12x/π` turns the classical expansions into
//!
//! ```text
//! η³(i4x/π)  = Σ_{n≥1} χ(n) n e^{−n²x}            (Jacobi)
//! η(i12x/π)  = Σ_{n∈ℤ} (−1)^n e^{−(6n+1)²x}       (Euler)
//! ```
//!
//! Every value comes with an absolute truncation certificate. Tail bounds used:
//!
//! * product: the omitted factors satisfy `0 ≤ −Σ_{n>N} ln(1−q^n) ≤ q^{N+1}/((1−q)(1−q^{N+1}))`,
//!   and the value is at most 1, so that quantity bounds the absolute error;
//! * Jacobi: for `N+1 ≥ 1/√(2x)` the map `t ↦ t e^{−t²x}` is decreasing, so
//!   `Σ_{n>N} n e^{−n²x} ≤ (N+1)e^{−(N+1)²x} + e^{−(N+1)²x}/(2x)`;
//! * Euler: the omitted exponents are at least `(6N+5)²` and grow by at least
//!   `12(6N+5)` per step, giving `2e^{−(6N+5)²x}/(1 − e^{−12(6N+5)x})`.
//!
//! The theta series lose accuracy to cancellation for small x: the largest
//! term is about `1/√(2ex)`. At the term budget of 10⁶ the practical floor is
//! x ≈ 1e−4 for an absolute tolerance of 1e−12; quadrature never samples below it.

use std::f64::consts::PI;

use crate::arithmetic::DEFAULT_TERM_BUDGET;
use crate::error::{require, Error, Result};
use crate::summation::{CompensatedSum, SeriesResult};

fn check(name: &str, arg: f64, tol: f64) -> Result<()> {
    require(arg > 0.0 && arg.is_finite(), || {
        format!("{name} needs a positive finite argument, got {arg}")
    })?;
    require(tol > 0.0, || format!("tol must be positive, got {tol}"))
}

/// `η(iy)` from the truncated q-product.
pub fn eta_product(y: f64, tol: f64) -> Result<SeriesResult> {
    check("eta_product", y, tol)?;
    let one_minus_q = -(-2.0 * PI * y).exp_m1();
    let mut ln_prod = CompensatedSum::new();
    ln_prod.add(-PI * y / 12.0);
    let mut bound = f64::INFINITY;
    for n in 1..=DEFAULT_TERM_BUDGET {
        let arg = -2.0 * PI * y * n as f64;
        ln_prod.add((-arg.exp_m1()).ln());
        let qn1 = (arg - 2.0 * PI * y).exp();
        bound = qn1 / (one_minus_q * (1.0 - qn1));
        let value = ln_prod.value().exp();
        let rounding = 4.0 * (n as f64 + 1.0) * f64::EPSILON * value;
        if bound + rounding <= tol {
            return Ok(SeriesResult::new(value, bound * value + rounding, n, tol));
        }
    }
    Err(Error::NonConvergence {
        what: "eta_product",
        used: DEFAULT_TERM_BUDGET,
        budget: DEFAULT_TERM_BUDGET,
        bound,
        tol,
    })
}

/// Upper bound on `ln η(iy)` from the first `factors` factors of the product.
///
/// Every factor `1 − q^n` lies in (0, 1), so any partial product bounds the
/// full one from above. This stays cheap for tiny y, where the product itself
/// would need millions of factors to converge.
pub fn ln_eta_upper_bound(y: f64, factors: usize) -> f64 {
    let mut s = CompensatedSum::new();
    s.add(-PI * y / 12.0);
    for n in 1..=factors {
        s.add((-(-2.0 * PI * y * n as f64).exp_m1()).ln());
    }
    s.value()
}

/// `η³(i4x/π) = Σ_{n odd} χ(n) n e^{−n²x}`.
pub fn eta3_scaled(x: f64, tol: f64) -> Result<SeriesResult> {
    check("eta3_scaled", x, tol)?;
    let mut sum = CompensatedSum::new();
    let mut abs_sum = 0.0;
    let mut bound = f64::INFINITY;
    let mut k = 0usize;
    while k < DEFAULT_TERM_BUDGET {
        let n = (2 * k + 1) as f64;
        let t = n * (-n * n * x).exp();
        sum.add(if k.is_multiple_of(2) { t } else { -t });
        abs_sum += t;
        k += 1;
        // next integer after the last odd n
        let m = n + 1.0;
        if m * m * 2.0 * x >= 1.0 {
            let e = (-m * m * x).exp();
            bound = m * e + e / (2.0 * x);
            let rounding = 4.0 * f64::EPSILON * abs_sum;
            if bound + rounding <= tol {
                return Ok(SeriesResult::new(sum.value(), bound + rounding, k, tol));
            }
        }
    }
    Err(Error::NonConvergence {
        what: "eta3_scaled",
        used: k,
        budget: DEFAULT_TERM_BUDGET,
        bound,
        tol,
    })
}

/// `η(i12x/π) = Σ_{n∈ℤ} (−1)^n e^{−(6n+1)²x}`, summed outward from n = 0.
pub fn eta_scaled12(x: f64, tol: f64) -> Result<SeriesResult> {
    check("eta_scaled12", x, tol)?;
    let mut sum = CompensatedSum::new();
    sum.add((-x).exp());
    let mut abs_sum = (-x).exp();
    let mut bound = f64::INFINITY;
    for k in 1..=DEFAULT_TERM_BUDGET {
        let p = 6.0 * k as f64 + 1.0;
        let m = 6.0 * k as f64 - 1.0;
        let pair = (-p * p * x).exp() + (-m * m * x).exp();
        sum.add(if k % 2 == 0 { pair } else { -pair });
        abs_sum += pair;
        let next = 6.0 * k as f64 + 5.0;
        bound = 2.0 * (-next * next * x).exp() / (-(-12.0 * next * x).exp_m1());
        let rounding = 4.0 * f64::EPSILON * abs_sum;
        if bound + rounding <= tol {
            return Ok(SeriesResult::new(sum.value(), bound + rounding, 2 * k + 1, tol));
        }
    }
    Err(Error::NonConvergence {
        what: "eta_scaled12",
        used: DEFAULT_TERM_BUDGET,
        budget: DEFAULT_TERM_BUDGET,
        bound,
        tol,
    })
}

/// `η⁶(i4x/π)` as the square of [`eta3_scaled`].
///
/// `|η³| ≤ e^{−x}`, so evaluating the cube to `min(tol/(3e^{−x}), √(tol/3))`
/// keeps `2|v|e + e²` below `tol`.
pub fn eta6_scaled(x: f64, tol: f64) -> Result<SeriesResult> {
    check("eta6_scaled", x, tol)?;
    let inner = (tol / (3.0 * (-x).exp())).min((tol / 3.0).sqrt());
    let r = eta3_scaled(x, inner)?;
    let v = r.value;
    let e = r.tail_bound;
    let err = 2.0 * v.abs() * e + e * e + 2.0 * f64::EPSILON * v * v;
    Ok(SeriesResult::new(v * v, err, r.terms_used, tol))
}
