//! Right-hand sides: the (A, B) pair, the trigonometric/hyperbolic closed
//! forms, the character sums they evaluate, and the series on the right of
//! the eta-power and Dirichlet-beta identities.
//!
//! Several printed formulas disagree with what their own derivations give.
//! Where that happens both versions are available through [`Candidate`]:
//! `Printed` reproduces the typeset expression, `Derived` is the expression
//! obtained by composing the theta expansions with the character-sum closed
//! forms term by term. Each `Derived` formula is written out at its function.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::arithmetic::{alternating_convex_sum, chi, dirichlet_beta, DEFAULT_TERM_BUDGET};
use crate::error::{require, Error, Result};
use crate::summation::{CompensatedSum, SeriesResult};

/// Which version of a right-hand side to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Candidate {
    Printed,
    Derived,
}

impl Candidate {
    pub fn label(self) -> &'static str {
        match self {
            Candidate::Printed => "printed",
            Candidate::Derived => "derived",
        }
    }
}

impl std::str::FromStr for Candidate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "printed" => Ok(Candidate::Printed),
            "derived" => Ok(Candidate::Derived),
            other => Err(Error::Domain(format!("unknown candidate {other:?}"))),
        }
    }
}

/// `(A, B)` with `2A² = √(b⁴+c²) + b²` and `2B² = √(b⁴+c²) − b²`.
///
/// Equivalently `A + iB = √(b² + ic)`, hence `A² − B² = b²` and `2AB = c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ABPair {
    pub a: f64,
    pub b: f64,
}

/// Computes the pair; `B` is taken as `c/(2A)`, which avoids the cancellation
/// in `√(b⁴+c²) − b²` when `c ≪ b²`.
pub fn ab_pair(b: f64, c: f64) -> Result<ABPair> {
    require(b >= 0.0 && c >= 0.0 && b.is_finite() && c.is_finite(), || {
        format!("ab_pair needs finite b, c >= 0, got b={b} c={c}")
    })?;
    if b == 0.0 && c == 0.0 {
        return Err(Error::DegenerateInput("ab_pair(0, 0)".into()));
    }
    let r = (b * b).hypot(c);
    let a = ((r + b * b) / 2.0).sqrt();
    Ok(ABPair { a, b: c / (2.0 * a) })
}

/// `sinh u · sin v / (sinh²u + cos²v)`.
fn sinh_sin_ratio(u: f64, v: f64) -> f64 {
    let (sv, cv) = v.sin_cos();
    if u < 20.0 {
        let sh = u.sinh();
        sh * sv / (sh * sh + cv * cv)
    } else {
        let r = 1.0 / u.sinh();
        sv * r / (1.0 + cv * cv * r * r)
    }
}

/// `cosh u · cos v / (cosh²u − sin²v)`, using `cosh²u − sin²v = sinh²u + cos²v`.
fn cosh_cos_ratio(u: f64, v: f64) -> f64 {
    let cv = v.cos();
    if u < 20.0 {
        let sh = u.sinh();
        u.cosh() * cv / (sh * sh + cv * cv)
    } else {
        let r = 1.0 / u.sinh();
        cv * r / u.tanh() / (1.0 + cv * cv * r * r)
    }
}

/// `sinh(πA/2) sin(πB/2) / (sinh²(πA/2) + cos²(πB/2))` at `(A, B) = ab_pair(b, c)`.
pub fn sin_ratio(b: f64, c: f64) -> Result<f64> {
    let p = ab_pair(b, c)?;
    Ok(sinh_sin_ratio(PI * p.a / 2.0, PI * p.b / 2.0))
}

/// `cosh(πA/2) cos(πB/2) / (cosh²(πA/2) − sin²(πB/2))` at `(A, B) = ab_pair(b, c)`.
pub fn cos_ratio(b: f64, c: f64) -> Result<f64> {
    let p = ab_pair(b, c)?;
    Ok(cosh_cos_ratio(PI * p.a / 2.0, PI * p.b / 2.0))
}

fn positive(name: &str, v: f64) -> Result<()> {
    require(v > 0.0 && v.is_finite(), || format!("{name} must be positive, got {v}"))
}

/// Closed form of `∫₀^∞ η³(i4x/π) e^{−b²x} sin(cx) dx`.
///
/// * `Printed`: `(π/(4c)) · sin_ratio(b, c)`.
/// * `Derived`: expanding η³ and integrating term by term gives
///   `c · Σ χ(n) n / ((n²+b²)² + c²)`; the character-sum closed form turns
///   that into `c · (π/(4c)) · sin_ratio = (π/4) · sin_ratio(b, c)`.
///
/// The two agree only at c = 1.
pub fn rhs_thm11_sin(b: f64, c: f64, candidate: Candidate) -> Result<f64> {
    positive("b", b)?;
    positive("c", c)?;
    let ratio = sin_ratio(b, c)?;
    Ok(match candidate {
        Candidate::Printed => PI / (4.0 * c) * ratio,
        Candidate::Derived => PI / 4.0 * ratio,
    })
}

/// Closed form of `∫₀^∞ η³(i4x/π) e^{−b²x} cos(cx) dx = (π/4) · cos_ratio(b, c)`.
///
/// At c = 0 it reduces to `(π/4) sech(πb/2)`.
pub fn rhs_thm11_cos(b: f64, c: f64) -> Result<f64> {
    positive("b", b)?;
    require(c >= 0.0 && c.is_finite(), || format!("c must be >= 0, got {c}"))?;
    Ok(PI / 4.0 * cos_ratio(b, c)?)
}

/// `Σ_{n≥1} χ(n) n / ((n²+b²)² + c²) = (π/(4c)) · sin_ratio(b, c)`.
pub fn lemma21_sin_closed(b: f64, c: f64) -> Result<f64> {
    positive("b", b)?;
    positive("c", c)?;
    Ok(PI / (4.0 * c) * sin_ratio(b, c)?)
}

/// `Σ_{n≥1} χ(n) n(n²+b²) / ((n²+b²)² + c²) = (π/4) · cos_ratio(b, c)`.
pub fn lemma21_cos_closed(b: f64, c: f64) -> Result<f64> {
    positive("b", b)?;
    require(c >= 0.0, || format!("c must be >= 0, got {c}"))?;
    Ok(PI / 4.0 * cos_ratio(b, c)?)
}

fn lemma_sin_term(n: f64, b: f64, c: f64) -> f64 {
    let u = n * n + b * b;
    n / (u * u + c * c)
}

fn lemma_cos_term(n: f64, b: f64, c: f64) -> f64 {
    let u = n * n + b * b;
    n * u / (u * u + c * c)
}

/// Brute-force partial sum `Σ_{n=1..N} χ(n) n / ((n²+b²)² + c²)`.
pub fn lemma21_sum_sin_oracle(b: f64, c: f64, n_max: u64) -> f64 {
    let mut s = CompensatedSum::new();
    for n in (1..=n_max).step_by(2) {
        s.add(chi(n).as_f64() * lemma_sin_term(n as f64, b, c));
    }
    s.value()
}

/// [`lemma21_sum_sin_oracle`] with a truncation certificate.
///
/// The terms decrease once `n ≥ max(b, √c)`, and then the alternating
/// remainder is below the first omitted term. Before that the crude
/// `Σ_{n>N} n⁻³ ≤ 1/(2N²)` is used.
pub fn lemma21_sum_sin_certified(b: f64, c: f64, n_max: u64) -> SeriesResult {
    let value = lemma21_sum_sin_oracle(b, c, n_max);
    let next = if n_max.is_multiple_of(2) { n_max + 1 } else { n_max + 2 } as f64;
    let crude = 1.0 / (2.0 * (n_max as f64).powi(2));
    let bound = if next - 2.0 >= b.max(c.sqrt()) {
        lemma_sin_term(next, b, c).min(crude)
    } else {
        crude
    };
    let rounding = 4.0 * f64::EPSILON * value.abs().max(lemma_sin_term(1.0, b, c));
    SeriesResult {
        value,
        tail_bound: bound + rounding,
        terms_used: n_max.div_ceil(2) as usize,
        converged: true,
    }
}

/// [`lemma21_sum_sin_certified`] from N = 10⁴, doubling N until the bound is below `tol`.
pub fn lemma21_sum_sin_to_tol(b: f64, c: f64, tol: f64) -> Result<SeriesResult> {
    positive("b", b)?;
    positive("c", c)?;
    require(tol > 0.0, || format!("tol must be positive, got {tol}"))?;
    let mut n = 10_000u64;
    loop {
        let r = lemma21_sum_sin_certified(b, c, n);
        if r.tail_bound <= tol {
            return Ok(SeriesResult::new(r.value, r.tail_bound, r.terms_used, tol));
        }
        if r.terms_used >= DEFAULT_TERM_BUDGET {
            return Err(Error::NonConvergence {
                what: "lemma21_sum_sin",
                used: r.terms_used,
                budget: DEFAULT_TERM_BUDGET,
                bound: r.tail_bound,
                tol,
            });
        }
        n *= 2;
    }
}

/// Partial sum `Σ_{n=1..N} χ(n) n(n²+b²) / ((n²+b²)² + c²)`, accumulated in
/// pairs `(n, n+2)` of opposite character. No tail treatment: the error is
/// of order 1/N.
pub fn lemma21_sum_cos_oracle(b: f64, c: f64, n_max: u64) -> f64 {
    let mut s = CompensatedSum::new();
    let mut n = 1u64;
    while n <= n_max {
        let mut pair = lemma_cos_term(n as f64, b, c);
        if n + 2 <= n_max {
            pair -= lemma_cos_term((n + 2) as f64, b, c);
        }
        s.add(pair);
        n += 4;
    }
    s.value()
}

/// The cosine-lemma sum over odd `n ≤ N` with a certified tail correction.
///
/// Writing `A + iB = √(b² + ic)`, the term is
/// `a(x) = ½[g(x − B) + g(x + B)]` with `g(t) = t/(t² + A²)`, and `g` is
/// decreasing and convex for `t ≥ √3·A`. So from `x ≥ B + √3·A` on the
/// alternating tail is bracketed by half its first two terms, see
/// [`crate::arithmetic`]. If `N` is below that point the bound is infinite.
pub fn lemma21_sum_cos_certified(b: f64, c: f64, n_max: u64) -> Result<SeriesResult> {
    positive("b", b)?;
    require(c >= 0.0, || format!("c must be >= 0, got {c}"))?;
    let p = ab_pair(b, c)?;
    let x0 = p.b + 3f64.sqrt() * p.a;
    let convex_from = ((x0 - 1.0) / 2.0).ceil().max(0.0) as usize;
    let terms = n_max.div_ceil(2) as usize;
    if terms == 0 || terms <= convex_from + 1 {
        return Ok(SeriesResult {
            value: lemma21_sum_cos_oracle(b, c, n_max),
            tail_bound: f64::INFINITY,
            terms_used: terms,
            converged: false,
        });
    }
    let a = |k: usize| lemma_cos_term(2.0 * k as f64 + 1.0, b, c);
    // run the convexity bracket with a zero tolerance capped at `terms`
    let partial = lemma21_sum_cos_oracle(b, c, n_max);
    let prev = a(terms - 1);
    let cur = a(terms);
    let sign = if terms.is_multiple_of(2) { 1.0 } else { -1.0 };
    let rounding = 4.0 * f64::EPSILON * (partial.abs() + a(0));
    Ok(SeriesResult {
        value: partial + sign * (prev + cur) / 4.0,
        tail_bound: (prev - cur).abs() / 4.0 + rounding,
        terms_used: terms,
        converged: true,
    })
}

/// Same sum, run until the certified bound is below `tol`.
pub fn lemma21_sum_cos_to_tol(b: f64, c: f64, tol: f64) -> Result<SeriesResult> {
    positive("b", b)?;
    let p = ab_pair(b, c)?;
    let x0 = p.b + 3f64.sqrt() * p.a;
    let convex_from = ((x0 - 1.0) / 2.0).ceil().max(0.0) as usize;
    alternating_convex_sum(
        "lemma21_sum_cos",
        |k| lemma_cos_term(2.0 * k as f64 + 1.0, b, c),
        convex_from,
        tol,
        DEFAULT_TERM_BUDGET,
    )
}

/// `∫₀^∞ x sin(ax) / ((x²+b²)² + c²) dx = (π/(2c)) e^{−aA} sin(aB)`.
pub fn gr_sin_closed(a: f64, b: f64, c: f64) -> Result<f64> {
    positive("a", a)?;
    positive("b", b)?;
    positive("c", c)?;
    let p = ab_pair(b, c)?;
    Ok(PI / (2.0 * c) * (-a * p.a).exp() * (a * p.b).sin())
}

/// `∫₀^∞ x(x²+b²) sin(ax) / ((x²+b²)² + c²) dx = (π/2) e^{−aA} cos(aB)`.
pub fn gr_cos_closed(a: f64, b: f64, c: f64) -> Result<f64> {
    positive("a", a)?;
    positive("b", b)?;
    positive("c", c)?;
    let p = ab_pair(b, c)?;
    Ok(PI / 2.0 * (-a * p.a).exp() * (a * p.b).cos())
}

/// Runs a one-sided series until `tail(n)` drops below `tol`.
fn sum_until<T, R>(what: &'static str, tol: f64, term: T, tail: R) -> Result<SeriesResult>
where
    T: Fn(u64) -> f64,
    R: Fn(u64) -> f64,
{
    let mut s = CompensatedSum::new();
    let mut abs_sum = 0.0;
    let mut bound = f64::INFINITY;
    for n in 1..=DEFAULT_TERM_BUDGET as u64 {
        let t = term(n);
        s.add(t);
        abs_sum += t.abs();
        bound = tail(n) + 4.0 * f64::EPSILON * abs_sum;
        if bound <= tol {
            return Ok(SeriesResult::new(s.value(), bound, n as usize, tol));
        }
    }
    Err(Error::NonConvergence {
        what,
        used: DEFAULT_TERM_BUDGET,
        budget: DEFAULT_TERM_BUDGET,
        bound,
        tol,
    })
}

/// `Σ_{n>N} n / sinh(πn/2)`, the common majorant of the η⁶ series tails.
///
/// Uses `1/sinh(wn) ≤ 2e^{−wn}/(1 − e^{−2w(N+1)})` and the closed form of
/// `Σ_{n>N} n rⁿ` with `r = e^{−π/2}`.
fn eta6_series_tail(n: u64) -> f64 {
    let w = PI / 2.0;
    let r = (-w).exp();
    let m = (n + 1) as f64;
    let geo = r.powf(m) * (m - n as f64 * r) / ((1.0 - r) * (1.0 - r));
    2.0 * geo / (-(-2.0 * w * m).exp_m1())
}

fn check_tol(tol: f64) -> Result<()> {
    require(tol > 0.0, || format!("tol must be positive, got {tol}"))
}

/// Right side for `∫₀^∞ η⁶(i4x/π) sin(cx) dx`.
///
/// * `Printed`: `(π/(2c)) Σ χ(n) n · sin_ratio(n, c)`.
/// * `Derived`: `η⁶ = Σ_n Σ_m χ(n)χ(m) nm e^{−(n²+m²)x}`. For fixed n the
///   m-sum integrated against `sin(cx)` is `c · Σ_m χ(m) m/((m²+n²)²+c²)`,
///   which the sine character-sum closed form with b = n evaluates to
///   `(π/4) sin_ratio(n, c)`. Hence `(π/4) Σ χ(n) n · sin_ratio(n, c)`.
///
/// The prefactors coincide at c = 2. `|sin_ratio(n,c)| ≤ 1/sinh(πn/2)` since
/// `A(n,c) ≥ n`, which certifies the tail.
pub fn rhs_thm12_sin(c: f64, tol: f64, candidate: Candidate) -> Result<SeriesResult> {
    positive("c", c)?;
    check_tol(tol)?;
    let pre = match candidate {
        Candidate::Printed => PI / (2.0 * c),
        Candidate::Derived => PI / 4.0,
    };
    sum_until(
        "rhs_thm12_sin",
        tol,
        |n| {
            let ch = chi(n).as_f64();
            if ch == 0.0 {
                0.0
            } else {
                pre * ch * n as f64 * sin_ratio(n as f64, c).unwrap_or(0.0)
            }
        },
        |n| pre * eta6_series_tail(n),
    )
}

/// `(π/4) Σ χ(n) n · cos_ratio(n, c)`, the right side for
/// `∫₀^∞ η⁶(i4x/π) cos(cx) dx`. Defined for c ≥ 0.
///
/// `|cos_ratio| ≤ coth(u)/sinh(u)` with `u ≥ πn/2`.
pub fn rhs_thm12_cos(c: f64, tol: f64) -> Result<SeriesResult> {
    require(c >= 0.0 && c.is_finite(), || format!("c must be >= 0, got {c}"))?;
    check_tol(tol)?;
    let pre = PI / 4.0;
    sum_until(
        "rhs_thm12_cos",
        tol,
        |n| {
            let ch = chi(n).as_f64();
            if ch == 0.0 {
                0.0
            } else {
                pre * ch * n as f64 * cos_ratio(n as f64, c).unwrap_or(0.0)
            }
        },
        |n| {
            let coth = 1.0 / (PI * (n + 1) as f64 / 2.0).tanh();
            pre * coth * eta6_series_tail(n)
        },
    )
}

/// The b-values `|6k+1|` of the bilateral Euler series, in summation order
/// (k = 0, 1, −1, 2, −2, …), with their signs `(−1)^k`.
pub fn euler_b_values(count: usize) -> impl Iterator<Item = (u64, f64)> {
    (0..count).map(|i| {
        let k: i64 = if i == 0 {
            0
        } else if i % 2 == 1 {
            i.div_ceil(2) as i64
        } else {
            -((i / 2) as i64)
        };
        let sign = if k.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        ((6 * k + 1).unsigned_abs(), sign)
    })
}

/// Right side for `∫₀^∞ η³(i4x/π) η(i12x/π) sin(cx) dx`.
///
/// * `Printed`: `(π/4) Σ_{n∈ℤ} (−1)^n cos_ratio(|6n+1|, c)`, the cosine-shaped
///   expression as typeset.
/// * `Derived`: with `η(i12x/π) = Σ (−1)^n e^{−(6n+1)²x}`, each Euler term
///   acts as `e^{−b²x}` with `b = |6n+1|` on the η³ sine integral, giving
///   `(π/4) Σ_{n∈ℤ} (−1)^n sin_ratio(|6n+1|, c)`.
///
/// Summed outward from n = 0; all b-values are odd and ≡ ±1 (mod 6).
pub fn rhs_thm13(c: f64, tol: f64, candidate: Candidate) -> Result<SeriesResult> {
    positive("c", c)?;
    check_tol(tol)?;
    let pre = PI / 4.0;
    let mut s = CompensatedSum::new();
    let mut abs_sum = 0.0;
    let mut bound = f64::INFINITY;
    let mut used = 0;
    for (b, sign) in euler_b_values(2 * DEFAULT_TERM_BUDGET + 1) {
        let ratio = match candidate {
            Candidate::Printed => cos_ratio(b as f64, c)?,
            Candidate::Derived => sin_ratio(b as f64, c)?,
        };
        let t = pre * sign * ratio;
        s.add(t);
        abs_sum += t.abs();
        used += 1;
        // after an odd count both k and −k have been added
        if used % 2 == 1 {
            let kmax = (used / 2) as f64;
            let b0 = 6.0 * kmax + 5.0;
            let h = PI * b0 / 2.0;
            let single = 2.0 * (-h).exp() / (-(-2.0 * h).exp_m1()) / (-(-3.0 * PI).exp_m1());
            let factor = match candidate {
                Candidate::Printed => 1.0 / h.tanh(),
                Candidate::Derived => 1.0,
            };
            bound = pre * 2.0 * factor * single + 4.0 * f64::EPSILON * abs_sum;
            if bound <= tol {
                return Ok(SeriesResult::new(s.value(), bound, used, tol));
            }
        }
    }
    Err(Error::NonConvergence {
        what: "rhs_thm13",
        used,
        budget: 2 * DEFAULT_TERM_BUDGET + 1,
        bound,
        tol,
    })
}

/// `π/8 + Σ_{n≥1} χ(n) / (n (e^{n²z} − 1))`.
///
/// Tail after N, with m = N+1: `e^{−m²z} / (m (1 − e^{−m²z}) (1 − e^{−(2m+1)z}))`.
pub fn thm31_lhs(z: f64, tol: f64) -> Result<SeriesResult> {
    positive("z", z)?;
    check_tol(tol)?;
    let r = sum_until(
        "thm31_lhs",
        tol,
        |n| {
            let ch = chi(n).as_f64();
            if ch == 0.0 {
                0.0
            } else {
                let nf = n as f64;
                ch / (nf * (nf * nf * z).exp_m1())
            }
        },
        |n| {
            let m = (n + 1) as f64;
            let e = (-m * m * z).exp();
            e / (m * (-(-m * m * z).exp_m1()) * (-(-(2.0 * m + 1.0) * z).exp_m1()))
        },
    )?;
    Ok(SeriesResult {
        value: r.value + PI / 8.0,
        tail_bound: r.tail_bound + f64::EPSILON,
        ..r
    })
}

/// `sinh u sin u / (cosh 2u + cos 2u)`, stable for all u ≥ 0.
///
/// Multiplying through by `2e^{−2u}` gives
/// `(e^{−u} − e^{−3u}) sin u / (1 + e^{−4u} + 2e^{−2u} cos 2u)`; the
/// denominator is at least `(1 − e^{−2u})² > 0`. `|value| ≤ 1/(2 sinh u)`.
pub fn sinh_sin_over_cosh_cos(u: f64) -> f64 {
    let e2 = (-2.0 * u).exp();
    let num = -(-u).exp() * (-2.0 * u).exp_m1() * u.sin();
    num / (1.0 + e2 * e2 + 2.0 * e2 * (2.0 * u).cos())
}

/// `Σ_{n≥1} (1/n) S((π/2)√(nπ/z))` where `S` is [`sinh_sin_over_cosh_cos`].
///
/// With `κ = (π/2)√(π/z)` the terms are bounded by `1/(2n sinh(κ√n))`, a
/// decreasing envelope, so the tail after N is at most
/// `2e^{−κ√N} / (κ√N (1 − e^{−2κ√N}))`.
pub fn thm31_correction_sum(z: f64, tol: f64) -> Result<SeriesResult> {
    positive("z", z)?;
    check_tol(tol)?;
    let kappa = PI / 2.0 * (PI / z).sqrt();
    sum_until(
        "thm31_correction_sum",
        tol,
        |n| sinh_sin_over_cosh_cos(kappa * (n as f64).sqrt()) / n as f64,
        |n| {
            let v = kappa * (n as f64).sqrt();
            2.0 * (-v).exp() / (v * (-(-2.0 * v).exp_m1()))
        },
    )
}

/// Coefficient in front of [`thm31_correction_sum`] on the right side.
///
/// * `Printed`: `1/(2π)`.
/// * `Derived`: Poisson summation of `f(x) = Σ χ(n) e^{−n²xz}/n` needs
///   `2Σ_m ∫₀^∞ f(x) cos(2πmx) dx`. The inner transform is
///   `Σ_n χ(n) n z/(n⁴z² + t²)`, which the sine character-sum closed form at
///   b = 0 evaluates to `(π/(2t)) S((π/2)√(t/(2z)))`; at `t = 2πm` this
///   makes the coefficient `1/2`.
pub fn thm31_coefficient(candidate: Candidate) -> f64 {
    match candidate {
        Candidate::Printed => 1.0 / (2.0 * PI),
        Candidate::Derived => 0.5,
    }
}

/// `β(3)/z + coefficient · thm31_correction_sum(z)`.
pub fn thm31_rhs(z: f64, tol: f64, candidate: Candidate) -> Result<SeriesResult> {
    positive("z", z)?;
    check_tol(tol)?;
    let coef = thm31_coefficient(candidate);
    let beta = dirichlet_beta(3.0, tol * z / 2.0)?;
    let corr = thm31_correction_sum(z, tol / (2.0 * coef))?;
    let value = beta.value / z + coef * corr.value;
    let err = beta.tail_bound / z + coef * corr.tail_bound + 2.0 * f64::EPSILON * value.abs();
    Ok(SeriesResult {
        value,
        tail_bound: err,
        terms_used: beta.terms_used + corr.terms_used,
        converged: err <= tol,
    })
}

/// `½ · sinh(u) sin(u) / (x (cosh 2u + cos 2u))` with `u = (π/2)√(x/(2α))`.
///
/// This is the integrand factor as typeset, including the leading ½. It is
/// analytic at 0 with limit `π²/(32α)`.
pub fn glaisher_kernel(x: f64, alpha: f64) -> f64 {
    if x == 0.0 {
        return PI * PI / (32.0 * alpha);
    }
    let u = PI / 2.0 * (x / (2.0 * alpha)).sqrt();
    0.5 * sinh_sin_over_cosh_cos(u) / x
}

/// `Σ_{n≥1} χ(n) e^{−n²s} / n`, the left side of the Glaisher integral at `s = zα`.
pub fn glaisher_series(s: f64, tol: f64) -> Result<SeriesResult> {
    positive("s", s)?;
    check_tol(tol)?;
    sum_until(
        "glaisher_series",
        tol,
        |n| {
            let ch = chi(n).as_f64();
            if ch == 0.0 {
                0.0
            } else {
                let nf = n as f64;
                ch * (-nf * nf * s).exp() / nf
            }
        },
        |n| {
            let m = (n + 1) as f64;
            (-m * m * s).exp() / (m * (-(-(2.0 * m + 1.0) * s).exp_m1()))
        },
    )
}
