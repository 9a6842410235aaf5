//! Compensated summation and the result type shared by every truncated series.

use serde::{Deserialize, Serialize};

/// Neumaier (improved Kahan) running sum.
///
/// The accumulation order is the caller's iteration order, so a fixed
/// iteration order gives bit-identical results across runs.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = CompensatedSum::new();
        for v in iter {
            s.add(v);
        }
        s
    }
}

/// Sum an iterator of floats with Neumaier compensation.
pub fn compensated<I: IntoIterator<Item = f64>>(iter: I) -> f64 {
    iter.into_iter().collect::<CompensatedSum>().value()
}

/// Value of a truncated infinite series together with its truncation certificate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesResult {
    pub value: f64,
    /// Upper bound on the absolute truncation error (plus a rounding allowance).
    pub tail_bound: f64,
    pub terms_used: usize,
    pub converged: bool,
}

impl SeriesResult {
    pub(crate) fn new(value: f64, tail_bound: f64, terms_used: usize, tol: f64) -> Self {
        Self {
            value,
            tail_bound,
            terms_used,
            converged: tail_bound <= tol,
        }
    }

    pub fn estimate(&self) -> Estimate {
        Estimate {
            value: self.value,
            err: self.tail_bound,
        }
    }
}

/// A number with an absolute error bound; what the verification layer compares.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub value: f64,
    pub err: f64,
}

impl Estimate {
    pub fn exact(value: f64) -> Self {
        Self {
            value,
            err: rounding_allowance(value),
        }
    }

    pub fn scale(self, k: f64) -> Self {
        Self {
            value: self.value * k,
            err: self.err * k.abs(),
        }
    }
}

/// A few ulps of `v`; added to closed-form evaluations so their error bars are never zero.
pub(crate) fn rounding_allowance(v: f64) -> f64 {
    16.0 * f64::EPSILON * v.abs().max(f64::MIN_POSITIVE)
}
