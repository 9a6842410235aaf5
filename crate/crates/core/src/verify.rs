//! The identity registry and the verification runner.
//!
//! A case pairs a left-hand evaluator with one or more right-hand candidates
//! over a named parameter grid. Each side is evaluated independently to a
//! fraction of the verdict tolerance and the residuals decide the verdict.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arithmetic::chi;
use crate::closed_forms::{self as cf, Candidate};
use crate::error::{Error, Result};
use crate::quadrature::{self as quad, IntegrandSpec, Kernel, Transform};
use crate::summation::{rounding_allowance, CompensatedSum, Estimate, SeriesResult};

/// Default verdict tolerance (absolute).
pub const DEFAULT_TOL: f64 = 1e-7;

/// Each side is evaluated to `tol / INTERNAL_TOL_DIVISOR`, so that two sides
/// at full error still sum below `tol/10`.
pub const INTERNAL_TOL_DIVISOR: f64 = 25.0;

/// A parameter point, keyed by parameter name.
pub type Point = BTreeMap<String, f64>;

type LhsFn = fn(&Point, f64) -> Result<Estimate>;
type RhsFn = fn(&Point, f64, Candidate) -> Result<Estimate>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamDomain {
    pub name: &'static str,
    /// Lower bound of the parameter.
    pub min: f64,
    /// Whether `min` itself is allowed.
    pub closed: bool,
}

impl ParamDomain {
    const fn positive(name: &'static str) -> Self {
        Self { name, min: 0.0, closed: false }
    }

    const fn nonnegative(name: &'static str) -> Self {
        Self { name, min: 0.0, closed: true }
    }

    pub fn contains(&self, v: f64) -> bool {
        v.is_finite() && (v > self.min || (self.closed && v == self.min))
    }
}

/// A registered identity.
#[derive(Clone)]
pub struct IdentityCase {
    pub id: &'static str,
    pub description: &'static str,
    pub params: Vec<ParamDomain>,
    pub candidates: Vec<Candidate>,
    /// Diagnostics are reported but do not affect the exit status.
    pub gating: bool,
    /// Cartesian axes of the default grid, in `params` order.
    pub default_grid: Vec<Vec<f64>>,
    lhs: LhsFn,
    rhs: RhsFn,
}

impl std::fmt::Debug for IdentityCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityCase")
            .field("id", &self.id)
            .field("candidates", &self.candidates)
            .field("gating", &self.gating)
            .finish_non_exhaustive()
    }
}

impl IdentityCase {
    pub fn param_names(&self) -> Vec<&'static str> {
        self.params.iter().map(|p| p.name).collect()
    }

    /// Expands a set of axes (in `params` order) into points.
    pub fn grid_points(&self, axes: &[Vec<f64>]) -> Vec<Point> {
        let mut points = vec![Point::new()];
        for (p, axis) in self.params.iter().zip(axes) {
            let mut next = Vec::with_capacity(points.len() * axis.len());
            for base in &points {
                for &v in axis {
                    let mut q = base.clone();
                    q.insert(p.name.to_string(), v);
                    next.push(q);
                }
            }
            points = next;
        }
        points
    }

    pub fn default_points(&self) -> Vec<Point> {
        self.grid_points(&self.default_grid)
    }

    pub fn check_point(&self, point: &Point) -> Result<()> {
        for p in &self.params {
            match point.get(p.name) {
                Some(&v) if p.contains(v) => {}
                Some(&v) => {
                    return Err(Error::Domain(format!("{}: {}={v} is outside the domain", self.id, p.name)))
                }
                None => return Err(Error::Domain(format!("{}: missing parameter {}", self.id, p.name))),
            }
        }
        if point.len() != self.params.len() {
            return Err(Error::Domain(format!("{}: unexpected parameters in {point:?}", self.id)));
        }
        Ok(())
    }

    /// Sort key of a point: its values in `params` order.
    fn key(&self, point: &Point) -> Vec<f64> {
        self.params.iter().map(|p| point[p.name]).collect()
    }
}

fn get(point: &Point, name: &str) -> f64 {
    point[name]
}

fn from_series(r: SeriesResult) -> Estimate {
    r.estimate()
}

fn from_quad(r: quad::QuadratureResult) -> Estimate {
    Estimate { value: r.value, err: r.abs_err_est }
}

fn closed(v: Result<f64>) -> Result<Estimate> {
    v.map(Estimate::exact)
}

fn eta_quad(kernel: Kernel, transform: Transform, b: f64, c: f64, tol: f64) -> Result<Estimate> {
    quad::integrate_damped_oscillatory(&IntegrandSpec::eta(kernel, transform, b, c), tol).map(from_quad)
}

fn lhs_thm11_sin(p: &Point, tol: f64) -> Result<Estimate> {
    eta_quad(Kernel::Eta3, Transform::Sin, get(p, "b"), get(p, "c"), tol)
}

fn rhs_thm11_sin(p: &Point, _tol: f64, cand: Candidate) -> Result<Estimate> {
    closed(cf::rhs_thm11_sin(get(p, "b"), get(p, "c"), cand))
}

fn lhs_thm11_cos(p: &Point, tol: f64) -> Result<Estimate> {
    eta_quad(Kernel::Eta3, Transform::Cos, get(p, "b"), get(p, "c"), tol)
}

fn rhs_thm11_cos(p: &Point, _tol: f64, _cand: Candidate) -> Result<Estimate> {
    closed(cf::rhs_thm11_cos(get(p, "b"), get(p, "c")))
}

fn lhs_thm12_sin(p: &Point, tol: f64) -> Result<Estimate> {
    eta_quad(Kernel::Eta6, Transform::Sin, 0.0, get(p, "c"), tol)
}

fn rhs_thm12_sin(p: &Point, tol: f64, cand: Candidate) -> Result<Estimate> {
    cf::rhs_thm12_sin(get(p, "c"), tol, cand).map(from_series)
}

fn lhs_thm12_cos(p: &Point, tol: f64) -> Result<Estimate> {
    eta_quad(Kernel::Eta6, Transform::Cos, 0.0, get(p, "c"), tol)
}

fn rhs_thm12_cos(p: &Point, tol: f64, _cand: Candidate) -> Result<Estimate> {
    cf::rhs_thm12_cos(get(p, "c"), tol).map(from_series)
}

fn lhs_thm13(p: &Point, tol: f64) -> Result<Estimate> {
    eta_quad(Kernel::Eta3Eta12, Transform::Sin, 0.0, get(p, "c"), tol)
}

fn rhs_thm13(p: &Point, tol: f64, cand: Candidate) -> Result<Estimate> {
    cf::rhs_thm13(get(p, "c"), tol, cand).map(from_series)
}

fn lhs_lemma_sin(p: &Point, tol: f64) -> Result<Estimate> {
    cf::lemma21_sum_sin_to_tol(get(p, "b"), get(p, "c"), tol).map(from_series)
}

fn rhs_lemma_sin(p: &Point, _tol: f64, _cand: Candidate) -> Result<Estimate> {
    closed(cf::lemma21_sin_closed(get(p, "b"), get(p, "c")))
}

fn lhs_lemma_cos(p: &Point, tol: f64) -> Result<Estimate> {
    cf::lemma21_sum_cos_to_tol(get(p, "b"), get(p, "c"), tol).map(from_series)
}

fn rhs_lemma_cos(p: &Point, _tol: f64, _cand: Candidate) -> Result<Estimate> {
    closed(cf::lemma21_cos_closed(get(p, "b"), get(p, "c")))
}

fn rational_quad(kernel: Kernel, p: &Point, tol: f64) -> Result<Estimate> {
    let spec = IntegrandSpec::rational(kernel, get(p, "a"), get(p, "b"), get(p, "c"));
    quad::integrate_rational_oscillatory(&spec, tol).map(from_quad)
}

fn lhs_gr_sin(p: &Point, tol: f64) -> Result<Estimate> {
    rational_quad(Kernel::RationalSin, p, tol)
}

fn rhs_gr_sin(p: &Point, _tol: f64, _cand: Candidate) -> Result<Estimate> {
    closed(cf::gr_sin_closed(get(p, "a"), get(p, "b"), get(p, "c")))
}

fn lhs_gr_cos(p: &Point, tol: f64) -> Result<Estimate> {
    rational_quad(Kernel::RationalCos, p, tol)
}

fn rhs_gr_cos(p: &Point, _tol: f64, _cand: Candidate) -> Result<Estimate> {
    closed(cf::gr_cos_closed(get(p, "a"), get(p, "b"), get(p, "c")))
}

fn lhs_thm31(p: &Point, tol: f64) -> Result<Estimate> {
    cf::thm31_lhs(get(p, "z"), tol).map(from_series)
}

fn rhs_thm31(p: &Point, tol: f64, cand: Candidate) -> Result<Estimate> {
    cf::thm31_rhs(get(p, "z"), tol, cand).map(from_series)
}

fn lhs_glaisher(p: &Point, tol: f64) -> Result<Estimate> {
    cf::glaisher_series(get(p, "z") * get(p, "alpha"), tol).map(from_series)
}

/// `Printed` is the integral with the kernel as typeset (leading ½);
/// `Derived` drops the ½, i.e. doubles it.
fn rhs_glaisher(p: &Point, tol: f64, cand: Candidate) -> Result<Estimate> {
    let r = quad::integrate_glaisher(get(p, "z"), get(p, "alpha"), tol / 2.0).map(from_quad)?;
    Ok(match cand {
        Candidate::Printed => r,
        Candidate::Derived => r.scale(2.0),
    })
}

/// `Σ χ(n) f(n)` for `f(x) = x e^{−tx²}`.
fn lhs_diag21(p: &Point, tol: f64) -> Result<Estimate> {
    let t = get(p, "t");
    let mut s = CompensatedSum::new();
    let mut n = 1u64;
    loop {
        let x = n as f64;
        s.add(chi(n).as_f64() * x * (-t * x * x).exp());
        // later terms shrink at least geometrically once x ≥ 1/√t
        let next = x + 2.0;
        let bound = 2.0 * next * (-t * next * next).exp();
        if x * x * t >= 1.0 && bound <= tol / 10.0 {
            let v = s.value();
            return Ok(Estimate { value: v, err: bound + rounding_allowance(v) });
        }
        n += 2;
    }
}

/// `Σ χ(n) ∫₀^∞ f(x) sin(πnx/2) dx` with each transform by quadrature.
///
/// Truncation uses the exact transform magnitude
/// `√π k e^{−k²/(4t)} / (4t^{3/2})`, `k = πn/2`, which decays super-geometrically.
fn rhs_diag21(p: &Point, tol: f64, _cand: Candidate) -> Result<Estimate> {
    let t = get(p, "t");
    let hi = ((10.0 / tol).ln() / t).sqrt() + 2.0;
    let mut s = CompensatedSum::new();
    let mut err = 2.0 * hi * (-t * hi * hi).exp();
    let mut n = 1u64;
    loop {
        let k = PI * n as f64 / 2.0;
        let r = quad::integrate_finite(|x| x * (-t * x * x).exp() * (k * x).sin(), 0.0, hi, tol / 100.0)?;
        s.add(chi(n).as_f64() * r.value);
        err += r.abs_err_est;
        let kn = PI * (n + 2) as f64 / 2.0;
        let bound = 2.0 * PI.sqrt() * kn * (-kn * kn / (4.0 * t)).exp() / (4.0 * t.powf(1.5));
        if kn * kn >= 2.0 * t && bound <= tol / 10.0 {
            return Ok(Estimate { value: s.value(), err: err + bound });
        }
        n += 2;
    }
}

/// `f(0)/2 + Σ_{n≥1} f(n)` for `f(x) = e^{−tx²}`.
fn lhs_diag34(p: &Point, tol: f64) -> Result<Estimate> {
    let t = get(p, "t");
    let mut s = CompensatedSum::new();
    s.add(0.5);
    let mut n = 1.0;
    loop {
        s.add((-t * n * n).exp());
        let next: f64 = n + 1.0;
        let bound = (-t * next * next).exp() / (-(-t * (2.0 * next + 1.0)).exp_m1());
        if bound <= tol / 10.0 {
            let v = s.value();
            return Ok(Estimate { value: v, err: bound + rounding_allowance(v) });
        }
        n += 1.0;
    }
}

/// `∫₀^∞ f + 2 Σ_{m≥1} ∫₀^∞ f(x) cos(2πmx) dx`, every integral by quadrature.
fn rhs_diag34(p: &Point, tol: f64, _cand: Candidate) -> Result<Estimate> {
    let t = get(p, "t");
    let hi = ((10.0 / tol).ln() / t).sqrt() + 2.0;
    let tail = (-t * hi * hi).exp() / (2.0 * t * hi);
    let r0 = quad::integrate_finite(|x| (-t * x * x).exp(), 0.0, hi, tol / 100.0)?;
    let mut s = CompensatedSum::new();
    s.add(r0.value);
    let mut err = r0.abs_err_est + tail;
    let mut m = 1.0;
    loop {
        let k = 2.0 * PI * m;
        let r = quad::integrate_finite(|x| (-t * x * x).exp() * (k * x).cos(), 0.0, hi, tol / 100.0)?;
        s.add(2.0 * r.value);
        err += 2.0 * (r.abs_err_est + tail);
        let kn = 2.0 * PI * (m + 1.0);
        let bound = 2.0 * (PI / t).sqrt() * (-kn * kn / (4.0 * t)).exp();
        if bound <= tol / 10.0 {
            return Ok(Estimate { value: s.value(), err: err + bound });
        }
        m += 1.0;
    }
}

const ONE: &[Candidate] = &[Candidate::Printed];
const TWO: &[Candidate] = &[Candidate::Printed, Candidate::Derived];

fn case(
    id: &'static str,
    description: &'static str,
    params: Vec<ParamDomain>,
    candidates: &[Candidate],
    default_grid: Vec<Vec<f64>>,
    lhs: LhsFn,
    rhs: RhsFn,
) -> IdentityCase {
    IdentityCase {
        id,
        description,
        params,
        candidates: candidates.to_vec(),
        gating: true,
        default_grid,
        lhs,
        rhs,
    }
}

/// The eleven identities, sorted by id.
pub fn build_registry() -> Vec<IdentityCase> {
    use ParamDomain as D;
    let bc = || vec![D::positive("b"), D::positive("c")];
    let thm11_grid = || vec![vec![0.5, 1.0, 2.0, 4.0], vec![0.25, 1.0, 5.0, 20.0]];
    let lemma_grid = || vec![vec![0.5, 1.0, 2.0], vec![0.5, 1.0, 3.0]];
    let gr_grid = || vec![vec![0.5, 1.0, 2.0], vec![1.0, 2.0], vec![0.5, 1.0, 3.0]];
    let abc = || vec![D::positive("a"), D::positive("b"), D::positive("c")];
    let c_grid = || vec![vec![0.5, 1.0, 2.0, 3.0]];
    let mut cases = vec![
        case(
            "glaisher-3.5",
            "Σ χ(n) e^{−n²zα}/n against ∫ cos(zx) K(x, α) dx",
            vec![D::positive("z"), D::positive("alpha")],
            TWO,
            vec![vec![1.0, 2.0, 4.0], vec![1.0]],
            lhs_glaisher,
            rhs_glaisher,
        ),
        case(
            "gr-2.2",
            "∫ x sin(ax)/((x²+b²)²+c²) dx = (π/2c) e^{−aA} sin(aB)",
            abc(),
            ONE,
            gr_grid(),
            lhs_gr_sin,
            rhs_gr_sin,
        ),
        case(
            "gr-2.3",
            "∫ x(x²+b²) sin(ax)/((x²+b²)²+c²) dx = (π/2) e^{−aA} cos(aB)",
            abc(),
            ONE,
            gr_grid(),
            lhs_gr_cos,
            rhs_gr_cos,
        ),
        case(
            "lemma2.1-cos",
            "Σ χ(n) n(n²+b²)/((n²+b²)²+c²) closed form",
            bc(),
            ONE,
            lemma_grid(),
            lhs_lemma_cos,
            rhs_lemma_cos,
        ),
        case(
            "lemma2.1-sin",
            "Σ χ(n) n/((n²+b²)²+c²) closed form",
            bc(),
            ONE,
            lemma_grid(),
            lhs_lemma_sin,
            rhs_lemma_sin,
        ),
        case(
            "thm1.1-cos",
            "∫ η³(i4x/π) e^{−b²x} cos(cx) dx",
            vec![D::positive("b"), D::nonnegative("c")],
            ONE,
            thm11_grid(),
            lhs_thm11_cos,
            rhs_thm11_cos,
        ),
        case(
            "thm1.1-sin",
            "∫ η³(i4x/π) e^{−b²x} sin(cx) dx",
            bc(),
            TWO,
            thm11_grid(),
            lhs_thm11_sin,
            rhs_thm11_sin,
        ),
        case(
            "thm1.2-cos",
            "∫ η⁶(i4x/π) cos(cx) dx",
            vec![D::nonnegative("c")],
            ONE,
            c_grid(),
            lhs_thm12_cos,
            rhs_thm12_cos,
        ),
        case(
            "thm1.2-sin",
            "∫ η⁶(i4x/π) sin(cx) dx",
            vec![D::positive("c")],
            TWO,
            c_grid(),
            lhs_thm12_sin,
            rhs_thm12_sin,
        ),
        case(
            "thm1.3",
            "∫ η³(i4x/π) η(i12x/π) sin(cx) dx",
            vec![D::positive("c")],
            TWO,
            c_grid(),
            lhs_thm13,
            rhs_thm13,
        ),
        case(
            "thm3.1",
            "π/8 + Σ χ(n)/(n(e^{n²z}−1)) = β(3)/z + correction",
            vec![D::positive("z")],
            TWO,
            vec![vec![0.25, 0.5, 1.0, 2.0, 5.0]],
            lhs_thm31,
            rhs_thm31,
        ),
    ];
    cases.sort_by_key(|c| c.id);
    cases
}

/// Non-gating checks of the two Poisson summation formulas on Gaussians.
pub fn diagnostics() -> Vec<IdentityCase> {
    let grid = || vec![vec![0.5, 1.0, 2.0]];
    let mut d21 = case(
        "diag-2.1",
        "Σ χ(n) f(n) = Σ χ(n) ∫ f(x) sin(πnx/2) dx, f = x e^{−tx²}",
        vec![ParamDomain::positive("t")],
        ONE,
        grid(),
        lhs_diag21,
        rhs_diag21,
    );
    let mut d34 = case(
        "diag-3.4",
        "f(0)/2 + Σ f(n) = ∫ f + 2 Σ ∫ f(x) cos(2πnx) dx, f = e^{−tx²}",
        vec![ParamDomain::positive("t")],
        ONE,
        grid(),
        lhs_diag34,
        rhs_diag34,
    );
    d21.gating = false;
    d34.gating = false;
    vec![d21, d34]
}

/// Every case, identities first.
pub fn all_cases() -> Vec<IdentityCase> {
    let mut all = build_registry();
    all.extend(diagnostics());
    all
}

pub fn lookup(id: &str) -> Option<IdentityCase> {
    all_cases().into_iter().find(|c| c.id == id)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Match,
    MatchDerivedOnly,
    MatchPrintedOnly,
    MatchBoth,
    MismatchAll,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Match => "MATCH",
            Verdict::MatchDerivedOnly => "MATCH_DERIVED_ONLY",
            Verdict::MatchPrintedOnly => "MATCH_PRINTED_ONLY",
            Verdict::MatchBoth => "MATCH_BOTH",
            Verdict::MismatchAll => "MISMATCH_ALL",
            Verdict::Inconclusive => "INCONCLUSIVE",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidateResult {
    pub label: Candidate,
    pub rhs_value: f64,
    pub rhs_err: f64,
    pub residual: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub case_id: String,
    pub point: Point,
    pub lhs_value: f64,
    pub lhs_err: f64,
    pub candidates: Vec<CandidateResult>,
    pub verdict: Verdict,
    pub tol: f64,
    pub gating: bool,
}

impl VerificationReport {
    pub fn candidate(&self, label: Candidate) -> Option<&CandidateResult> {
        self.candidates.iter().find(|c| c.label == label)
    }
}

/// An evaluator that failed at one point, with the side that failed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluationFailure {
    pub case_id: String,
    pub point: Point,
    /// `lhs` or `rhs:<candidate>`.
    pub side: String,
    pub message: String,
    pub gating: bool,
}

impl std::fmt::Display for EvaluationFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} {:?} {}: {}", self.case_id, self.point, self.side, self.message)
    }
}

/// Verdict from the candidate results.
///
/// A candidate that misses the tolerance only counts against the formula if
/// both sides were evaluated to better than `tol/10`; otherwise the point
/// is `Inconclusive`.
pub fn decide(results: &[CandidateResult], lhs_err: f64, tol: f64) -> Verdict {
    let tight = |c: &CandidateResult| lhs_err + c.rhs_err < tol / 10.0;
    if results.iter().any(|c| !c.pass && !tight(c)) {
        return Verdict::Inconclusive;
    }
    let passed = |l: Candidate| results.iter().any(|c| c.label == l && c.pass);
    match results.len() {
        1 if results[0].pass => Verdict::Match,
        1 => Verdict::MismatchAll,
        _ => match (passed(Candidate::Printed), passed(Candidate::Derived)) {
            (true, true) => Verdict::MatchBoth,
            (true, false) => Verdict::MatchPrintedOnly,
            (false, true) => Verdict::MatchDerivedOnly,
            (false, false) => Verdict::MismatchAll,
        },
    }
}

/// Evaluates both sides of `case` at `point` to `tol/25` and decides.
pub fn run_case(
    case: &IdentityCase,
    point: &Point,
    tol: f64,
) -> std::result::Result<VerificationReport, EvaluationFailure> {
    let fail = |side: String, e: Error| EvaluationFailure {
        case_id: case.id.to_string(),
        point: point.clone(),
        side,
        message: e.to_string(),
        gating: case.gating,
    };
    case.check_point(point).map_err(|e| fail("input".into(), e))?;
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(fail("input".into(), Error::Domain(format!("tol must be positive, got {tol}"))));
    }
    let inner = tol / INTERNAL_TOL_DIVISOR;
    let lhs = (case.lhs)(point, inner).map_err(|e| fail("lhs".into(), e))?;
    let mut results = Vec::with_capacity(case.candidates.len());
    for &cand in &case.candidates {
        let rhs = (case.rhs)(point, inner, cand).map_err(|e| fail(format!("rhs:{}", cand.label()), e))?;
        let residual = (lhs.value - rhs.value).abs();
        results.push(CandidateResult {
            label: cand,
            rhs_value: rhs.value,
            rhs_err: rhs.err,
            residual,
            pass: residual <= tol,
        });
    }
    let verdict = decide(&results, lhs.err, tol);
    Ok(VerificationReport {
        case_id: case.id.to_string(),
        point: point.clone(),
        lhs_value: lhs.value,
        lhs_err: lhs.err,
        candidates: results,
        verdict,
        tol,
        gating: case.gating,
    })
}

/// Which cases to run.
#[derive(Debug, Clone, PartialEq)]
pub enum Selection {
    All,
    Ids(Vec<String>),
}

/// Replacement values for one parameter axis.
#[derive(Debug, Clone, PartialEq)]
pub struct GridOverride {
    pub name: String,
    pub values: Vec<f64>,
}

impl std::str::FromStr for GridOverride {
    type Err = Error;

    /// Parses `name=v1,v2,...`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, list) = s
            .split_once('=')
            .ok_or_else(|| Error::Domain(format!("grid override {s:?} is not name=v1,v2,...")))?;
        let values = list
            .split(',')
            .map(|v| {
                v.trim()
                    .parse::<f64>()
                    .map_err(|_| Error::Domain(format!("bad number {v:?} in grid override")))
            })
            .collect::<Result<Vec<_>>>()?;
        if name.is_empty() || values.is_empty() {
            return Err(Error::Domain(format!("grid override {s:?} is empty")));
        }
        Ok(GridOverride { name: name.trim().to_string(), values })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub cases: usize,
    pub points: usize,
    pub matched: usize,
    pub match_both: usize,
    pub match_printed_only: usize,
    pub match_derived_only: usize,
    pub mismatch_all: usize,
    pub inconclusive: usize,
    pub failures: usize,
    /// Process exit status: 2 on a gating evaluation failure, else 1 on a
    /// gating `MISMATCH_ALL`, else 0.
    pub exit_code: i32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteOutcome {
    pub reports: Vec<VerificationReport>,
    pub failures: Vec<EvaluationFailure>,
    pub summary: SuiteSummary,
}

/// Resolves a selection to cases, with grid overrides applied.
///
/// Unknown ids, overrides naming no parameter of any selected case, and
/// override values outside a case's domain are errors.
pub fn plan(selection: &Selection, overrides: &[GridOverride]) -> Result<Vec<(IdentityCase, Vec<Point>)>> {
    let cases = match selection {
        Selection::All => all_cases(),
        Selection::Ids(ids) => {
            let mut cases = Vec::new();
            for id in ids {
                let c = lookup(id).ok_or_else(|| Error::Domain(format!("unknown case {id:?}")))?;
                if !cases.iter().any(|k: &IdentityCase| k.id == c.id) {
                    cases.push(c);
                }
            }
            cases.sort_by_key(|c| c.id);
            cases
        }
    };
    for o in overrides {
        if !cases.is_empty() && !cases.iter().any(|c| c.params.iter().any(|p| p.name == o.name)) {
            return Err(Error::Domain(format!("no selected case has a parameter {:?}", o.name)));
        }
    }
    let mut planned = Vec::with_capacity(cases.len());
    for c in cases {
        let mut axes = c.default_grid.clone();
        for o in overrides {
            if let Some(i) = c.params.iter().position(|p| p.name == o.name) {
                if let Some(bad) = o.values.iter().find(|v| !c.params[i].contains(**v)) {
                    return Err(Error::Domain(format!("{}: {}={bad} is outside the domain", c.id, o.name)));
                }
                axes[i] = o.values.clone();
            }
        }
        let points = c.grid_points(&axes);
        planned.push((c, points));
    }
    Ok(planned)
}

/// Runs every selected case over its grid.
///
/// Points run in parallel; reports come back sorted by case id and then by
/// parameter values in declaration order.
pub fn run_suite(selection: &Selection, tol: f64, overrides: &[GridOverride]) -> Result<SuiteOutcome> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::Domain(format!("tol must be positive, got {tol}")));
    }
    let planned = plan(selection, overrides)?;
    let jobs: Vec<(&IdentityCase, &Point)> = planned
        .iter()
        .flat_map(|(c, pts)| pts.iter().map(move |p| (c, p)))
        .collect();
    let outcomes: Vec<_> = jobs.par_iter().map(|(c, p)| run_case(c, p, tol)).collect();

    let mut reports = Vec::new();
    let mut failures = Vec::new();
    for o in outcomes {
        match o {
            Ok(r) => reports.push(r),
            Err(f) => failures.push(f),
        }
    }
    let key_of = |id: &str, point: &Point| -> Vec<f64> {
        planned
            .iter()
            .find(|(c, _)| c.id == id)
            .map(|(c, _)| c.key(point))
            .unwrap_or_default()
    };
    reports.sort_by(|a, b| {
        a.case_id.cmp(&b.case_id).then_with(|| {
            let (ka, kb) = (key_of(&a.case_id, &a.point), key_of(&b.case_id, &b.point));
            ka.iter().zip(&kb).map(|(x, y)| x.total_cmp(y)).find(|o| o.is_ne()).unwrap_or(std::cmp::Ordering::Equal)
        })
    });
    failures.sort_by(|a, b| {
        a.case_id.cmp(&b.case_id).then_with(|| {
            let (ka, kb) = (key_of(&a.case_id, &a.point), key_of(&b.case_id, &b.point));
            ka.iter().zip(&kb).map(|(x, y)| x.total_cmp(y)).find(|o| o.is_ne()).unwrap_or(std::cmp::Ordering::Equal)
        })
    });
    let summary = summarize(planned.len(), &reports, &failures);
    Ok(SuiteOutcome { reports, failures, summary })
}

pub fn summarize(cases: usize, reports: &[VerificationReport], failures: &[EvaluationFailure]) -> SuiteSummary {
    let mut s = SuiteSummary {
        cases,
        points: reports.len() + failures.len(),
        failures: failures.len(),
        ..Default::default()
    };
    for r in reports {
        match r.verdict {
            Verdict::Match => s.matched += 1,
            Verdict::MatchBoth => s.match_both += 1,
            Verdict::MatchPrintedOnly => s.match_printed_only += 1,
            Verdict::MatchDerivedOnly => s.match_derived_only += 1,
            Verdict::MismatchAll => s.mismatch_all += 1,
            Verdict::Inconclusive => s.inconclusive += 1,
        }
    }
    s.exit_code = if failures.iter().any(|f| f.gating) {
        2
    } else if reports.iter().any(|r| r.gating && r.verdict == Verdict::MismatchAll) {
        1
    } else {
        0
    };
    s
}

/// `z · (thm31_lhs(z) − coefficient · correction(z))`, an estimate of β(3)
/// that should not depend on z.
pub fn estimate_beta3(z: f64, tol: f64, candidate: Candidate) -> Result<Estimate> {
    let lhs = cf::thm31_lhs(z, tol / (2.0 * z))?;
    let coef = cf::thm31_coefficient(candidate);
    let corr = cf::thm31_correction_sum(z, tol / (2.0 * z * coef))?;
    let value = z * (lhs.value - coef * corr.value);
    let err = z * (lhs.tail_bound + coef * corr.tail_bound) + rounding_allowance(value);
    Ok(Estimate { value, err })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(kv: &[(&str, f64)]) -> Point {
        kv.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    fn result(label: Candidate, residual: f64, rhs_err: f64, tol: f64) -> CandidateResult {
        CandidateResult { label, rhs_value: 0.0, rhs_err, residual, pass: residual <= tol }
    }

    #[test]
    fn registry_shape() {
        let reg = build_registry();
        assert_eq!(reg.len(), 11);
        let mut ids: Vec<_> = reg.iter().map(|c| c.id).collect();
        ids.dedup();
        assert_eq!(ids.len(), 11);
        for c in &reg {
            assert!(lookup(c.id).is_some());
            for p in c.default_points() {
                c.check_point(&p).unwrap();
            }
        }
        assert_eq!(lookup("thm1.2-sin").unwrap().candidates.len(), 2);
        assert_eq!(lookup("thm1.2-cos").unwrap().candidates.len(), 1);
        assert_eq!(lookup("thm1.1-sin").unwrap().default_points().len(), 16);
        assert_eq!(lookup("gr-2.2").unwrap().default_points().len(), 18);
        assert!(lookup("nosuch").is_none());
        assert!(diagnostics().iter().all(|d| !d.gating));
    }

    #[test]
    fn verdict_rules() {
        let tol = 1e-7;
        let ok = |l| result(l, 1e-9, 1e-10, tol);
        let bad = |l| result(l, 1e-3, 1e-10, tol);
        let loose = |l| result(l, 1e-3, 1e-6, tol);
        assert_eq!(decide(&[ok(Candidate::Printed)], 1e-10, tol), Verdict::Match);
        assert_eq!(decide(&[bad(Candidate::Printed)], 1e-10, tol), Verdict::MismatchAll);
        assert_eq!(decide(&[loose(Candidate::Printed)], 1e-10, tol), Verdict::Inconclusive);
        assert_eq!(decide(&[bad(Candidate::Printed)], 1e-8, tol), Verdict::Inconclusive);
        assert_eq!(
            decide(&[ok(Candidate::Printed), ok(Candidate::Derived)], 1e-10, tol),
            Verdict::MatchBoth
        );
        assert_eq!(
            decide(&[bad(Candidate::Printed), ok(Candidate::Derived)], 1e-10, tol),
            Verdict::MatchDerivedOnly
        );
        assert_eq!(
            decide(&[ok(Candidate::Printed), bad(Candidate::Derived)], 1e-10, tol),
            Verdict::MatchPrintedOnly
        );
        assert_eq!(
            decide(&[bad(Candidate::Printed), bad(Candidate::Derived)], 1e-10, tol),
            Verdict::MismatchAll
        );
    }

    #[test]
    fn thm11_sin_at_c_one_matches_both() {
        let c = lookup("thm1.1-sin").unwrap();
        let r = run_case(&c, &pt(&[("b", 1.0), ("c", 1.0)]), 1e-8).unwrap();
        assert_eq!(r.verdict, Verdict::MatchBoth);
        assert!(r.candidates.iter().all(|c| c.residual <= 1e-8));
    }

    #[test]
    fn thm12_sin_at_two_matches_both() {
        let c = lookup("thm1.2-sin").unwrap();
        let r = run_case(&c, &pt(&[("c", 2.0)]), 1e-7).unwrap();
        assert_eq!(r.verdict, Verdict::MatchBoth);
    }

    #[test]
    fn thm31_derived_matches() {
        let c = lookup("thm3.1").unwrap();
        let r = run_case(&c, &pt(&[("z", 1.0)]), 1e-8).unwrap();
        assert_eq!(r.verdict, Verdict::MatchDerivedOnly);
    }

    #[test]
    fn bad_points_are_failures() {
        let c = lookup("thm1.1-sin").unwrap();
        let f = run_case(&c, &pt(&[("b", -1.0), ("c", 1.0)]), 1e-8).unwrap_err();
        assert_eq!(f.side, "input");
        let f = run_case(&c, &pt(&[("b", 1.0)]), 1e-8).unwrap_err();
        assert!(f.message.contains("missing"));
    }

    #[test]
    fn grid_override_parsing_and_planning() {
        let o: GridOverride = "c=1, 2.5".parse().unwrap();
        assert_eq!(o.values, vec![1.0, 2.5]);
        assert!("c".parse::<GridOverride>().is_err());
        assert!("c=x".parse::<GridOverride>().is_err());
        let sel = Selection::Ids(vec!["thm1.2-sin".into()]);
        let p = plan(&sel, &[o]).unwrap();
        assert_eq!(p[0].1.len(), 2);
        assert!(plan(&sel, &["b=1".parse().unwrap()]).is_err());
        assert!(plan(&sel, &["c=-1".parse().unwrap()]).is_err());
        assert!(plan(&Selection::Ids(vec!["nosuch".into()]), &[]).is_err());
    }

    #[test]
    fn empty_selection_succeeds() {
        let out = run_suite(&Selection::Ids(vec![]), 1e-7, &[]).unwrap();
        assert!(out.reports.is_empty());
        assert_eq!(out.summary.exit_code, 0);
    }

    #[test]
    fn beta3_from_derived_coefficient() {
        let beta = PI.powi(3) / 32.0;
        for z in [0.5, 1.0, 2.0] {
            let e = estimate_beta3(z, 1e-10, Candidate::Derived).unwrap();
            assert!((e.value - beta).abs() < 1e-9, "z={z}: {}", e.value);
        }
    }

    #[test]
    fn diagnostics_match() {
        for d in diagnostics() {
            for p in d.default_points() {
                let r = run_case(&d, &p, 1e-9).unwrap();
                assert_eq!(r.verdict, Verdict::Match, "{} {:?}", d.id, p);
            }
        }
    }
}
