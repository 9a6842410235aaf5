//! Semi-infinite quadrature for the three integrand families: eta-power
//! kernels with exponential damping, rational functions against `sin(ax)`,
//! and the Glaisher kernel against `cos(zx)`.
//!
//! The panel rule is the 21-point Gauss–Kronrod pair. Panels are refined
//! globally (largest error first) and the panel error is the raw
//! `|K21 − G10|` difference, which for analytic integrands overestimates the
//! error of the Kronrod value by orders of magnitude. Final sums run over
//! panels sorted by position with compensated summation, so results do not
//! depend on the refinement history beyond the panel set itself.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::closed_forms::{ab_pair, glaisher_kernel};
use crate::error::{require, Error, Result};
use crate::eta_series::{eta3_scaled, eta_scaled12, ln_eta_upper_bound};
use crate::summation::CompensatedSum;

/// Default evaluation budget of a single integral.
pub const DEFAULT_MAX_EVALS: usize = 100_000;

/// Lower cutoff for the eta kernels.
pub const ETA_X_LO: f64 = 1e-4;

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_208_980_740_500,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

// Gauss weights for the odd-indexed XGK nodes
#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

/// Value of a semi-infinite integral with its absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureResult {
    pub value: f64,
    pub abs_err_est: f64,
    pub evaluations: usize,
    pub converged: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kernel {
    /// `η³(i4x/π)`
    Eta3,
    /// `η⁶(i4x/π)`
    Eta6,
    /// `η³(i4x/π) η(i12x/π)`
    Eta3Eta12,
    /// `x / ((x²+b²)² + c²)`
    RationalSin,
    /// `x(x²+b²) / ((x²+b²)² + c²)`. Integrated against `sin(ax)` like
    /// `RationalSin`; the name refers to the cosine in its closed form.
    RationalCos,
    /// [`glaisher_kernel`]
    Glaisher,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Transform {
    Sin,
    Cos,
    None,
}

/// An integrand `kernel(x) · weight(x) · transform(freq · x)` on `(0, ∞)`.
///
/// Eta kernels carry the damping `e^{−b²x}` and frequency `c`; rational
/// kernels use `(a, b, c)` with frequency `a`; the Glaisher kernel uses
/// scale `alpha` and frequency `z`. Unused fields are zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntegrandSpec {
    pub kernel: Kernel,
    pub transform: Transform,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub alpha: f64,
    pub z: f64,
}

impl IntegrandSpec {
    pub fn eta(kernel: Kernel, transform: Transform, b: f64, c: f64) -> Self {
        Self { kernel, transform, a: 0.0, b, c, alpha: 0.0, z: 0.0 }
    }

    pub fn rational(kernel: Kernel, a: f64, b: f64, c: f64) -> Self {
        Self { kernel, transform: Transform::Sin, a, b, c, alpha: 0.0, z: 0.0 }
    }

    pub fn glaisher(z: f64, alpha: f64) -> Self {
        Self {
            kernel: Kernel::Glaisher,
            transform: Transform::Cos,
            a: 0.0,
            b: 0.0,
            c: 0.0,
            alpha,
            z,
        }
    }

    fn trig(&self, freq: f64, x: f64) -> f64 {
        match self.transform {
            Transform::Sin => (freq * x).sin(),
            Transform::Cos => (freq * x).cos(),
            Transform::None => 1.0,
        }
    }
}

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    /// `|K21 − G10|`, the only part that splitting reduces
    disc: f64,
    err: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.disc
            .total_cmp(&other.disc)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

/// One GK21 panel of an integrand that reports its own evaluation error.
fn gk21<F>(f: &F, a: f64, b: f64) -> Result<Panel>
where
    F: Fn(f64) -> Result<(f64, f64)>,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let (fc, ec) = f(center)?;
    let mut kronrod = WGK[10] * fc;
    let mut gauss = 0.0;
    let mut abs_sum = WGK[10] * fc.abs();
    let mut eval_err = WGK[10] * ec;
    for j in 0..10 {
        let dx = half * XGK[j];
        let (f1, e1) = f(center - dx)?;
        let (f2, e2) = f(center + dx)?;
        kronrod += WGK[j] * (f1 + f2);
        abs_sum += WGK[j] * (f1.abs() + f2.abs());
        eval_err += WGK[j] * (e1 + e2);
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let value = kronrod * half;
    let disc = ((kronrod - gauss) * half).abs();
    let err = disc + eval_err * half.abs() + 50.0 * f64::EPSILON * abs_sum * half.abs();
    Ok(Panel { a, b, value, disc, err })
}

/// Globally adaptive GK21 over the consecutive intervals given by `breaks`.
///
/// Refines until the summed discretization errors are at most `tol`. The
/// reported error also contains rounding and integrand-evaluation errors,
/// which splitting cannot reduce, so `converged` may still come out false.
pub fn integrate_panels<F>(
    f: F,
    breaks: &[f64],
    tol: f64,
    max_evals: usize,
) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Result<(f64, f64)>,
{
    require(tol > 0.0, || format!("tol must be positive, got {tol}"))?;
    require(breaks.len() >= 2, || "need at least one interval".into())?;
    let mut heap = BinaryHeap::new();
    let mut evals = 0;
    let mut total_disc = 0.0;
    for w in breaks.windows(2) {
        if w[1] > w[0] {
            let p = gk21(&f, w[0], w[1])?;
            evals += 21;
            total_disc += p.disc;
            heap.push(p);
        }
    }
    while total_disc > tol {
        if evals + 42 > max_evals {
            return Err(Error::NonConvergence {
                what: "quadrature",
                used: evals,
                budget: max_evals,
                bound: total_disc,
                tol,
            });
        }
        let worst = heap.pop().expect("at least one panel");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // interval exhausted at machine resolution; keep it as is
            heap.push(worst);
            return Err(Error::NonConvergence {
                what: "quadrature",
                used: evals,
                budget: max_evals,
                bound: total_disc,
                tol,
            });
        }
        let left = gk21(&f, worst.a, mid)?;
        let right = gk21(&f, mid, worst.b)?;
        evals += 42;
        total_disc += left.disc + right.disc - worst.disc;
        heap.push(left);
        heap.push(right);
    }
    let mut panels = heap.into_vec();
    panels.sort_by(|p, q| p.a.total_cmp(&q.a));
    let value = panels.iter().map(|p| p.value).collect::<CompensatedSum>().value();
    // recompute instead of trusting the running difference
    let err: f64 = panels.iter().map(|p| p.err).sum();
    Ok(QuadratureResult {
        value,
        abs_err_est: err,
        evaluations: evals,
        converged: err <= tol,
    })
}

/// `∫_a^b f(x) dx` for an exactly evaluated, smooth `f`.
pub fn integrate_finite(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<QuadratureResult> {
    require(a.is_finite() && b.is_finite() && a < b, || {
        format!("need finite a < b, got [{a}, {b}]")
    })?;
    integrate_panels(|x| Ok((f(x), 0.0)), &[a, b], tol, DEFAULT_MAX_EVALS)
}

fn check_positive(name: &str, v: f64) -> Result<()> {
    require(v > 0.0 && v.is_finite(), || format!("{name} must be positive, got {v}"))
}

/// Decay rate k of the eta kernel: `|kernel(x)| ≤ e^{−kx}`, from `η(iy) ≤ e^{−πy/12}`.
fn eta_decay(kernel: Kernel) -> f64 {
    match kernel {
        Kernel::Eta3 => 1.0,
        _ => 2.0,
    }
}

/// Rounding floor of the theta series at x: their absolute term sums grow like 1/x.
fn theta_floor(x: f64) -> f64 {
    16.0 * f64::EPSILON * (1.0 + 1.0 / x)
}

/// Eta kernel value and error bound at x, each factor evaluated to `tol`
/// or its rounding floor, whichever is larger.
fn eta_kernel(kernel: Kernel, x: f64, tol: f64) -> Result<(f64, f64)> {
    let t = tol.max(theta_floor(x));
    let r3 = eta3_scaled(x, t)?;
    let (v3, e3) = (r3.value, r3.tail_bound);
    Ok(match kernel {
        Kernel::Eta3 => (v3, e3),
        Kernel::Eta6 => (v3 * v3, 2.0 * v3.abs() * e3 + e3 * e3),
        Kernel::Eta3Eta12 => {
            let r12 = eta_scaled12(x, t)?;
            let (v12, e12) = (r12.value, r12.tail_bound);
            (v3 * v12, v3.abs() * e12 + v12.abs() * e3 + e3 * e12)
        }
        _ => unreachable!("not an eta kernel"),
    })
}

/// Upper bound on `|kernel(x)|` from partial eta products.
fn eta_kernel_upper(kernel: Kernel, x: f64) -> f64 {
    const FACTORS: usize = 4000;
    let l4 = ln_eta_upper_bound(4.0 * x / PI, FACTORS);
    let ln = match kernel {
        Kernel::Eta3 => 3.0 * l4,
        Kernel::Eta6 => 6.0 * l4,
        Kernel::Eta3Eta12 => 3.0 * l4 + ln_eta_upper_bound(12.0 * x / PI, FACTORS),
        _ => unreachable!("not an eta kernel"),
    };
    ln.exp()
}

/// Mass of an eta integrand discarded on `(0, x_lo)`.
///
/// The kernel is unimodal and increasing near 0, so `x_lo` times its
/// largest value sampled on a geometric grid over `[10⁻⁶, x_lo]` bounds it.
/// The damping and trigonometric factors are at most 1.
pub fn eta_small_x_bound(kernel: Kernel, x_lo: f64) -> f64 {
    let lo: f64 = 1e-6;
    let steps = 16;
    let ratio = (x_lo / lo).powf(1.0 / steps as f64);
    let max = (0..=steps)
        .map(|k| eta_kernel_upper(kernel, lo * ratio.powi(k)))
        .fold(0.0, f64::max);
    x_lo * max
}

fn half_period_breaks(lo: f64, hi: f64, freq: f64, max_width: f64) -> Vec<f64> {
    let mut breaks = vec![lo];
    for p in [1e-3, 1e-2, 1e-1] {
        if p > lo && p < hi {
            breaks.push(p);
        }
    }
    let step = if freq > 0.0 { (PI / freq).min(max_width) } else { max_width };
    let mut k = 1.0;
    loop {
        let x = k * step;
        if x >= hi {
            break;
        }
        if x > *breaks.last().expect("non-empty") {
            breaks.push(x);
        }
        k += 1.0;
    }
    breaks.push(hi);
    breaks
}

/// `∫₀^∞ kernel(x) e^{−b²x} trig(cx) dx` for the eta kernels.
///
/// Integrates over `[x_lo, X]` with `x_lo = 10⁻⁴` and X chosen so that
/// `∫_X^∞ e^{−(k+b²)x} dx ≤ tol/10`; both discarded pieces are added to the
/// error estimate.
pub fn integrate_damped_oscillatory(spec: &IntegrandSpec, tol: f64) -> Result<QuadratureResult> {
    require(matches!(spec.kernel, Kernel::Eta3 | Kernel::Eta6 | Kernel::Eta3Eta12), || {
        format!("{:?} is not a damped eta kernel", spec.kernel)
    })?;
    require(tol > 0.0, || format!("tol must be positive, got {tol}"))?;
    require(spec.b >= 0.0 && spec.c >= 0.0 && spec.b.is_finite() && spec.c.is_finite(), || {
        format!("need b, c >= 0, got b={} c={}", spec.b, spec.c)
    })?;
    let b2 = spec.b * spec.b;
    let rate = eta_decay(spec.kernel) + b2;
    let hi = ((10.0 / (tol * rate)).ln() / rate).max(1.0);
    let large_tail = (-rate * hi).exp() / rate;
    let small_tail = eta_small_x_bound(spec.kernel, ETA_X_LO);
    let budget = tol - large_tail - small_tail;
    if budget <= tol / 2.0 {
        return Err(Error::NonConvergence {
            what: "integrate_damped_oscillatory",
            used: 0,
            budget: DEFAULT_MAX_EVALS,
            bound: large_tail + small_tail,
            tol,
        });
    }
    let kernel_tol = budget / (10.0 * hi);
    let f = |x: f64| -> Result<(f64, f64)> {
        let (k, e) = eta_kernel(spec.kernel, x, kernel_tol)?;
        let w = (-b2 * x).exp() * spec.trig(spec.c, x);
        Ok((k * w, e * w.abs()))
    };
    let breaks = half_period_breaks(ETA_X_LO, hi, spec.c, 2.0);
    let r = integrate_panels(f, &breaks, budget / 2.0, DEFAULT_MAX_EVALS)?;
    let err = r.abs_err_est + large_tail + small_tail;
    Ok(QuadratureResult { abs_err_est: err, converged: err <= tol, ..r })
}

fn rational_value(kernel: Kernel, x: f64, b: f64, c: f64) -> f64 {
    let u = x * x + b * b;
    let d = u * u + c * c;
    match kernel {
        Kernel::RationalSin => x / d,
        _ => x * u / d,
    }
}

/// Weights `C(D, j)/2^D` of D-fold averaging of partial sums.
fn euler_weights(depth: usize) -> Vec<f64> {
    let mut w = vec![1.0];
    for _ in 0..depth {
        let mut next = vec![0.5; w.len() + 1];
        next[0] = 0.5 * w[0];
        for j in 1..w.len() {
            next[j] = 0.5 * (w[j - 1] + w[j]);
        }
        next[w.len()] = 0.5 * w[w.len() - 1];
        w = next;
    }
    w
}

const EULER_DEPTH: usize = 20;

/// `∫₀^∞ kernel(x) sin(ax) dx` for the rational kernels.
///
/// The range is cut into half periods `[kπ/a, (k+1)π/a]`. Up to the point
/// `max(b, √c, B + 2A)` (beyond which the amplitude decreases monotonically)
/// the segments are summed directly. The alternating remainder is summed by
/// averaging its partial sums twenty times over (binomial weights over the
/// last 21 partial sums), adding segments until two consecutive averaged
/// values differ by less than `tol/2`. The error estimate is that difference
/// plus the segment quadrature errors.
pub fn integrate_rational_oscillatory(spec: &IntegrandSpec, tol: f64) -> Result<QuadratureResult> {
    require(matches!(spec.kernel, Kernel::RationalSin | Kernel::RationalCos), || {
        format!("{:?} is not a rational kernel", spec.kernel)
    })?;
    check_positive("a", spec.a)?;
    check_positive("b", spec.b)?;
    check_positive("c", spec.c)?;
    require(tol > 0.0, || format!("tol must be positive, got {tol}"))?;
    let (a, b, c) = (spec.a, spec.b, spec.c);
    let p = ab_pair(b, c)?;
    let x0 = b.max(c.sqrt()).max(p.b + 2.0 * p.a);
    let h = PI / a;
    let k0 = (x0 / h).ceil() as usize + 1;
    let seg_tol = tol * 1e-3;
    let f = |x: f64| Ok((rational_value(spec.kernel, x, b, c) * (a * x).sin(), 0.0));

    let mut evals = 0;
    let mut seg_err = 0.0;
    let head_breaks: Vec<f64> = (0..=k0).map(|k| k as f64 * h).collect();
    let head = integrate_panels(f, &head_breaks, seg_tol, DEFAULT_MAX_EVALS)?;
    evals += head.evaluations;
    seg_err += head.abs_err_est;

    let weights = euler_weights(EULER_DEPTH);
    let mut partial = CompensatedSum::new();
    let mut partials: Vec<f64> = Vec::new();
    let mut prev_est: Option<f64> = None;
    let mut k = k0;
    loop {
        let seg = integrate_panels(f, &[k as f64 * h, (k + 1) as f64 * h], seg_tol / 64.0, DEFAULT_MAX_EVALS)?;
        evals += seg.evaluations;
        seg_err += seg.abs_err_est;
        partial.add(seg.value);
        partials.push(partial.value());
        k += 1;
        if partials.len() > EULER_DEPTH {
            let window = &partials[partials.len() - EULER_DEPTH - 1..];
            let est: f64 = window.iter().zip(&weights).map(|(s, w)| s * w).sum();
            if let Some(prev) = prev_est {
                let diff = (est - prev).abs();
                if diff < tol / 2.0 {
                    let value = head.value + est;
                    let err = diff + seg_err;
                    return Ok(QuadratureResult {
                        value,
                        abs_err_est: err,
                        evaluations: evals,
                        converged: err <= tol,
                    });
                }
            }
            prev_est = Some(est);
        }
        if evals > DEFAULT_MAX_EVALS {
            return Err(Error::NonConvergence {
                what: "integrate_rational_oscillatory",
                used: evals,
                budget: DEFAULT_MAX_EVALS,
                bound: f64::INFINITY,
                tol,
            });
        }
    }
}

/// `∫₀^∞ cos(zx) · glaisher_kernel(x, α) dx`.
///
/// `|glaisher_kernel(x, α)| ≤ e^{−κ√x} / (2x(1 − e^{−2κ√x}))` with
/// `κ = (π/2)/√(2α)`, so the part beyond X is at most
/// `e^{−κ√X} / (κ√X (1 − e^{−2κ√X}))`. X is the first point where that
/// drops below `tol/10`; `[0, X]` is split at the half periods `kπ/z`.
pub fn integrate_glaisher(z: f64, alpha: f64, tol: f64) -> Result<QuadratureResult> {
    check_positive("z", z)?;
    check_positive("alpha", alpha)?;
    require(tol > 0.0, || format!("tol must be positive, got {tol}"))?;
    let kappa = PI / 2.0 / (2.0 * alpha).sqrt();
    let tail = |v: f64| (-v).exp() / (v * (-(-2.0 * v).exp_m1()));
    let mut v = 1.0;
    while tail(v) > tol / 10.0 {
        v += 0.25;
    }
    let hi = (v / kappa).powi(2);
    let large_tail = tail(v);
    let f = |x: f64| Ok(((z * x).cos() * glaisher_kernel(x, alpha), 0.0));
    let breaks = half_period_breaks(0.0, hi, z, 4.0);
    let r = integrate_panels(f, &breaks, (tol - large_tail) / 2.0, DEFAULT_MAX_EVALS)?;
    let err = r.abs_err_est + large_tail;
    Ok(QuadratureResult { abs_err_est: err, converged: err <= tol, ..r })
}

/// Dispatches on the kernel family.
pub fn integrate(spec: &IntegrandSpec, tol: f64) -> Result<QuadratureResult> {
    match spec.kernel {
        Kernel::Eta3 | Kernel::Eta6 | Kernel::Eta3Eta12 => integrate_damped_oscillatory(spec, tol),
        Kernel::RationalSin | Kernel::RationalCos => integrate_rational_oscillatory(spec, tol),
        Kernel::Glaisher => integrate_glaisher(spec.z, spec.alpha, tol),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::{gr_cos_closed, gr_sin_closed, rhs_thm11_cos, rhs_thm11_sin, Candidate};

    #[test]
    fn gk21_is_exact_on_polynomials() {
        let r = integrate_finite(|x| x.powi(20) - 3.0 * x.powi(7), 0.0, 1.0, 1e-14).unwrap();
        assert!((r.value - (1.0 / 21.0 - 3.0 / 8.0)).abs() < 1e-15);
    }

    #[test]
    fn finite_gaussian() {
        let r = integrate_finite(|x| (-x * x).exp(), 0.0, 10.0, 1e-13).unwrap();
        assert!((r.value - PI.sqrt() / 2.0).abs() < 1e-13);
        assert!(r.converged);
    }

    #[test]
    fn euler_weights_are_binomial() {
        let w = euler_weights(4);
        assert_eq!(w, vec![1.0 / 16.0, 4.0 / 16.0, 6.0 / 16.0, 4.0 / 16.0, 1.0 / 16.0]);
        assert!((euler_weights(20).iter().sum::<f64>() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn small_x_mass_is_negligible() {
        for k in [Kernel::Eta3, Kernel::Eta6, Kernel::Eta3Eta12] {
            assert!(eta_small_x_bound(k, ETA_X_LO) < 1e-300);
        }
    }

    #[test]
    fn eta3_sin_matches_closed_form() {
        let spec = IntegrandSpec::eta(Kernel::Eta3, Transform::Sin, 1.0, 1.0);
        let r = integrate_damped_oscillatory(&spec, 1e-10).unwrap();
        assert!(r.converged);
        let rhs = rhs_thm11_sin(1.0, 1.0, Candidate::Derived).unwrap();
        assert!((r.value - rhs).abs() < 1e-9, "{} vs {}", r.value, rhs);
        assert!((r.value - 0.175_757_54).abs() < 1e-8);
    }

    #[test]
    fn eta3_cos_at_zero_frequency_is_sech() {
        let spec = IntegrandSpec::eta(Kernel::Eta3, Transform::Cos, 1.0, 0.0);
        let r = integrate_damped_oscillatory(&spec, 1e-10).unwrap();
        assert!((r.value - rhs_thm11_cos(1.0, 0.0).unwrap()).abs() < 1e-9);
    }

    #[test]
    fn eta3_sin_at_zero_frequency_vanishes() {
        let spec = IntegrandSpec::eta(Kernel::Eta3, Transform::Sin, 1.0, 0.0);
        let r = integrate_damped_oscillatory(&spec, 1e-10).unwrap();
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn rational_matches_closed_forms() {
        let s = integrate_rational_oscillatory(&IntegrandSpec::rational(Kernel::RationalSin, 1.0, 1.0, 1.0), 1e-9).unwrap();
        assert!((s.value - gr_sin_closed(1.0, 1.0, 1.0).unwrap()).abs() < 1e-8);
        let c = integrate_rational_oscillatory(&IntegrandSpec::rational(Kernel::RationalCos, 1.0, 1.0, 1.0), 1e-9).unwrap();
        assert!((c.value - gr_cos_closed(1.0, 1.0, 1.0).unwrap()).abs() < 1e-8, "{}", c.value);
        let big = integrate_rational_oscillatory(&IntegrandSpec::rational(Kernel::RationalSin, 30.0, 1.0, 1.0), 1e-13).unwrap();
        assert!(big.value.abs() < 1e-12, "{}", big.value);
    }

    #[test]
    fn glaisher_integral_is_half_the_series() {
        let r = integrate_glaisher(1.0, 1.0, 1e-10).unwrap();
        assert!((2.0 * r.value - 0.367_838_304_572_857_7).abs() < 1e-9, "{}", r.value);
        let r = integrate_glaisher(4.0, 1.0, 1e-10).unwrap();
        assert!((2.0 * r.value - 0.018_315_638_888_734_1).abs() < 1e-9);
    }

    #[test]
    fn rejects_wrong_family() {
        let spec = IntegrandSpec::glaisher(1.0, 1.0);
        assert!(integrate_damped_oscillatory(&spec, 1e-8).is_err());
        assert!(integrate_rational_oscillatory(&spec, 1e-8).is_err());
    }
}
