//! Univalence radius `rho` and schlicht-disk radius `sigma` for every theorem row.
//!
//! All fourteen theorem statements reduce to one of two radius equations.
//!
//! Family I (mappings `|z|^2 g + h` with `h` normalized):
//!
//! ```text
//! phi(r) = lambda - 2 m1 r - c1 r^2 / (1-r)^2 - c2 (2r - r^2) / (1-r)^2 = 0
//! sigma  = lambda rho - c1 rho^3 / (1-rho) - c2 rho^2 / (1-rho)
//! ```
//!
//! Family II (mappings `|z|^2 g` with `g` normalized):
//!
//! ```text
//! alpha (1-r)^2 = beta (4r - 3r^2)
//! rho   = alpha / (alpha + 2 beta + sqrt(alpha beta + 4 beta^2))
//! sigma = alpha rho^3 - beta rho^4 / (1-rho)
//! ```

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{big_k, bound_jacobian_normalized, lambda0, m0_prime};
use crate::error::{Error, Result};

/// Left end of the bisection bracket is 0, right end is `1 - BRACKET_GAP`.
pub const BRACKET_GAP: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Family {
    I,
    II,
}

/// Parameters of one radius equation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadiusSpec {
    pub family: Family,
    /// `lambda` for family I, `alpha` for family II.
    pub lam_or_alpha: f64,
    /// Coefficient of the linear `2 m1 r` term (family I only).
    pub m1: f64,
    /// Coefficient of `r^2 / (1-r)^2` (family I only).
    pub c1: f64,
    /// `c2` for family I, `beta` for family II.
    pub c2_or_beta: f64,
}

impl RadiusSpec {
    pub fn family1(lambda: f64, m1: f64, c1: f64, c2: f64) -> Self {
        Self {
            family: Family::I,
            lam_or_alpha: lambda,
            m1,
            c1,
            c2_or_beta: c2,
        }
    }

    pub fn family2(alpha: f64, beta: f64) -> Self {
        Self {
            family: Family::II,
            lam_or_alpha: alpha,
            m1: 0.0,
            c1: 0.0,
            c2_or_beta: beta,
        }
    }

    /// Family I left-hand side.
    pub fn phi(&self, r: f64) -> f64 {
        let q = (1.0 - r) * (1.0 - r);
        self.lam_or_alpha
            - 2.0 * self.m1 * r
            - self.c1 * r * r / q
            - self.c2_or_beta * (2.0 * r - r * r) / q
    }

    /// Family II equation as `alpha (1-r)^2 - beta (4r - 3r^2)`.
    pub fn quadratic_residual(&self, r: f64) -> f64 {
        let (alpha, beta) = (self.lam_or_alpha, self.c2_or_beta);
        alpha * (1.0 - r) * (1.0 - r) - beta * (4.0 * r - 3.0 * r * r)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadiusResult {
    pub rho: f64,
    pub sigma: f64,
    /// `|phi(rho)|` (family I) or the quadratic residual (family II).
    pub residual: f64,
    pub iterations: u32,
    /// Family I only: `phi > 0` on the whole bracket, `rho` pinned to 1.
    pub unconstrained: bool,
    /// `sigma <= 0`; reported rather than treated as an error.
    pub nonpositive_sigma: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    /// Bisection stops once the bracket is at most this wide.
    pub tol: f64,
    pub max_iter: u32,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            tol: 1e-13,
            max_iter: 200,
        }
    }
}

fn check_family(spec: &RadiusSpec, want: Family) -> Result<()> {
    if spec.family != want {
        return Err(Error::domain(format!(
            "expected a family {want:?} radius equation, got family {:?}",
            spec.family
        )));
    }
    Ok(())
}

/// Smallest root in `(0, 1)` of the family I equation.
pub fn family1_solve(spec: &RadiusSpec, opts: SolverOptions) -> Result<RadiusResult> {
    check_family(spec, Family::I)?;
    if !(spec.lam_or_alpha > 0.0) {
        return Err(Error::domain(format!(
            "family I needs lambda > 0, got {}",
            spec.lam_or_alpha
        )));
    }
    if [spec.m1, spec.c1, spec.c2_or_beta]
        .iter()
        .any(|v| !(*v >= 0.0))
    {
        return Err(Error::domain(
            "family I coefficients m1, c1, c2 must be nonnegative",
        ));
    }
    if !(opts.tol > 0.0) {
        return Err(Error::precondition("bisection tolerance must be positive"));
    }

    let mut lo = 0.0;
    let mut hi = 1.0 - BRACKET_GAP;
    if spec.phi(hi) > 0.0 {
        let sigma = family1_schlicht_unchecked(spec, 1.0);
        return Ok(RadiusResult {
            rho: 1.0,
            sigma,
            residual: 0.0,
            iterations: 0,
            unconstrained: true,
            nonpositive_sigma: sigma <= 0.0,
        });
    }

    let mut iterations = 0;
    while hi - lo > opts.tol && iterations < opts.max_iter {
        let mid = 0.5 * (lo + hi);
        if spec.phi(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    let rho = 0.5 * (lo + hi);
    let sigma = family1_schlicht(spec, rho)?;
    Ok(RadiusResult {
        rho,
        sigma,
        residual: spec.phi(rho).abs(),
        iterations,
        unconstrained: false,
        nonpositive_sigma: sigma <= 0.0,
    })
}

fn family1_schlicht_unchecked(spec: &RadiusSpec, rho: f64) -> f64 {
    if spec.c1 == 0.0 && spec.c2_or_beta == 0.0 {
        return spec.lam_or_alpha * rho;
    }
    spec.lam_or_alpha * rho
        - spec.c1 * rho.powi(3) / (1.0 - rho)
        - spec.c2_or_beta * rho * rho / (1.0 - rho)
}

/// `sigma = lambda rho - c1 rho^3 / (1-rho) - c2 rho^2 / (1-rho)`.
///
/// `rho = 1` is accepted only when `c1 = c2 = 0`, where `sigma = lambda`.
pub fn family1_schlicht(spec: &RadiusSpec, rho: f64) -> Result<f64> {
    check_family(spec, Family::I)?;
    let degenerate = spec.c1 == 0.0 && spec.c2_or_beta == 0.0;
    let ok = rho > 0.0 && (rho < 1.0 || (rho == 1.0 && degenerate));
    if !ok {
        return Err(Error::domain(format!(
            "schlicht radius needs 0 < rho < 1 (or rho = 1 with c1 = c2 = 0), got {rho}"
        )));
    }
    Ok(family1_schlicht_unchecked(spec, rho))
}

/// Closed-form smallest root of the family II quadratic.
pub fn family2_solve(spec: &RadiusSpec) -> Result<RadiusResult> {
    check_family(spec, Family::II)?;
    let (alpha, beta) = (spec.lam_or_alpha, spec.c2_or_beta);
    if !(alpha > 0.0) {
        return Err(Error::domain(format!(
            "family II needs alpha > 0, got {alpha}"
        )));
    }
    if !(beta >= 0.0) {
        return Err(Error::domain(format!(
            "family II needs beta >= 0, got {beta}"
        )));
    }
    let rho = if beta == 0.0 {
        1.0
    } else {
        alpha / (alpha + 2.0 * beta + (alpha * beta + 4.0 * beta * beta).sqrt())
    };
    let sigma = family2_schlicht(spec, rho)?;
    Ok(RadiusResult {
        rho,
        sigma,
        residual: if beta == 0.0 {
            0.0
        } else {
            spec.quadratic_residual(rho).abs()
        },
        iterations: 0,
        unconstrained: false,
        nonpositive_sigma: sigma <= 0.0,
    })
}

/// `sigma = alpha rho^3 - beta rho^4 / (1-rho)`; equals `alpha` at `rho = 1`, `beta = 0`.
pub fn family2_schlicht(spec: &RadiusSpec, rho: f64) -> Result<f64> {
    check_family(spec, Family::II)?;
    let (alpha, beta) = (spec.lam_or_alpha, spec.c2_or_beta);
    if !(rho > 0.0 && rho <= 1.0) {
        return Err(Error::domain(format!(
            "schlicht radius needs 0 < rho <= 1, got {rho}"
        )));
    }
    if rho == 1.0 {
        if beta != 0.0 {
            return Err(Error::domain("rho = 1 is only admissible when beta = 0"));
        }
        return Ok(alpha);
    }
    Ok(alpha * rho.powi(3) - beta * rho.powi(4) / (1.0 - rho))
}

/// Dispatch on the equation's family.
pub fn solve(spec: &RadiusSpec, opts: SolverOptions) -> Result<RadiusResult> {
    match spec.family {
        Family::I => family1_solve(spec, opts),
        Family::II => family2_solve(spec),
    }
}

// ---------------------------------------------------------------------------
// Theorem rows
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TheoremId {
    A,
    B,
    D,
    E,
    F,
    G,
    T26,
    T26p,
    T28,
    T28p,
    T210,
    T210p,
    C212,
    C212p,
}

impl TheoremId {
    pub const ALL: [TheoremId; 14] = [
        TheoremId::A,
        TheoremId::B,
        TheoremId::D,
        TheoremId::E,
        TheoremId::F,
        TheoremId::G,
        TheoremId::T26,
        TheoremId::T26p,
        TheoremId::T28,
        TheoremId::T28p,
        TheoremId::T210,
        TheoremId::T210p,
        TheoremId::C212,
        TheoremId::C212p,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::A => "A",
            TheoremId::B => "B",
            TheoremId::D => "D",
            TheoremId::E => "E",
            TheoremId::F => "F",
            TheoremId::G => "G",
            TheoremId::T26 => "T26",
            TheoremId::T26p => "T26p",
            TheoremId::T28 => "T28",
            TheoremId::T28p => "T28p",
            TheoremId::T210 => "T210",
            TheoremId::T210p => "T210p",
            TheoremId::C212 => "C212",
            TheoremId::C212p => "C212p",
        }
    }

    pub fn family(&self) -> Family {
        match self {
            TheoremId::A
            | TheoremId::D
            | TheoremId::E
            | TheoremId::T26
            | TheoremId::T26p
            | TheoremId::T28
            | TheoremId::T28p => Family::I,
            _ => Family::II,
        }
    }

    /// Rows parameterised by the pair `(M1, M2)` rather than a single `M`.
    pub fn uses_two_bounds(&self) -> bool {
        !matches!(self, TheoremId::A) && self.family() == Family::I
    }

    /// Mappings `|z|^2 g` with `h = 0`.
    pub fn is_pure_biharmonic(&self) -> bool {
        self.family() == Family::II
    }

    pub fn valid_ids() -> String {
        Self::ALL
            .iter()
            .map(|t| t.as_str())
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                Error::domain(format!(
                    "unknown theorem `{s}`; valid identifiers: {}",
                    Self::valid_ids()
                ))
            })
    }
}

/// Bound parameters; which ones are required depends on the theorem.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct TheoremParams {
    pub m: Option<f64>,
    pub m1: Option<f64>,
    pub m2: Option<f64>,
}

impl TheoremParams {
    pub fn single(m: f64) -> Self {
        Self {
            m: Some(m),
            ..Self::default()
        }
    }

    pub fn pair(m1: f64, m2: f64) -> Self {
        Self {
            m1: Some(m1),
            m2: Some(m2),
            ..Self::default()
        }
    }
}

fn need(id: TheoremId, name: &str, v: Option<f64>) -> Result<f64> {
    v.ok_or_else(|| Error::domain(format!("theorem {id} requires parameter {name}")))
}

fn need_positive(id: TheoremId, name: &str, v: Option<f64>) -> Result<f64> {
    let x = need(id, name, v)?;
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::domain(format!(
            "theorem {id} requires {name} > 0, got {x}"
        )));
    }
    Ok(x)
}

fn need_at_least_one(id: TheoremId, name: &str, v: Option<f64>) -> Result<f64> {
    let x = need(id, name, v)?;
    if !(x >= 1.0 && x.is_finite()) {
        return Err(Error::domain(format!(
            "theorem {id} requires {name} >= 1, got {x}"
        )));
    }
    Ok(x)
}

/// The radius equation for a theorem row.
pub fn theorem_spec(id: TheoremId, p: TheoremParams) -> Result<RadiusSpec> {
    use TheoremId::*;
    let spec = match id {
        A => {
            let m = need_positive(id, "M", p.m)?;
            RadiusSpec::family1(PI / (4.0 * m), m, 2.0 * m, 2.0 * m)
        }
        B => {
            let m = need_positive(id, "M", p.m)?;
            RadiusSpec::family2(PI / (4.0 * m), 2.0 * m)
        }
        D | E | T26 | T26p | T28 | T28p => {
            let m1 = need_positive(id, "M1", p.m1)?;
            let m2 = need_at_least_one(id, "M2", p.m2)?;
            let lam0 = lambda0(m2)?;
            match id {
                D => RadiusSpec::family1(1.0, m1, 2.0 * m1, bound_jacobian_normalized(m2)?),
                E => RadiusSpec::family1(lam0, m1, 2.0 * m1, bound_jacobian_normalized(m2)?),
                T26 => RadiusSpec::family1(1.0, m1, 4.0 * m1 / PI, big_k(m2)?),
                T26p => RadiusSpec::family1(1.0, m1, 4.0 * m1 / PI, m2 - 1.0 / m2),
                T28 => RadiusSpec::family1(lam0, m1, 4.0 * m1 / PI, big_k(m2)?),
                _ => RadiusSpec::family1(lam0, m1, 4.0 * m1 / PI, m2 - lam0 * lam0 / m2),
            }
        }
        F | G | T210 | T210p | C212 | C212p => {
            let m = need_at_least_one(id, "M", p.m)?;
            let lam0 = lambda0(m)?;
            match id {
                F => RadiusSpec::family2(1.0, bound_jacobian_normalized(m)?),
                G => RadiusSpec::family2(lam0, bound_jacobian_normalized(m)?),
                T210 => RadiusSpec::family2(1.0, big_k(m)?),
                T210p => RadiusSpec::family2(1.0, m - 1.0 / m),
                C212 => RadiusSpec::family2(lam0, big_k(m)?),
                _ => RadiusSpec::family2(lam0, m - lam0 * lam0 / m),
            }
        }
    };
    Ok(spec)
}

pub fn theorem_radius(id: TheoremId, p: TheoremParams) -> Result<RadiusResult> {
    theorem_radius_with(id, p, SolverOptions::default())
}

pub fn theorem_radius_with(
    id: TheoremId,
    p: TheoremParams,
    opts: SolverOptions,
) -> Result<RadiusResult> {
    solve(&theorem_spec(id, p)?, opts)
}

// ---------------------------------------------------------------------------
// Remark chains
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RemarkId {
    R27,
    R29,
    R211,
    R213,
}

impl RemarkId {
    pub const ALL: [RemarkId; 4] = [RemarkId::R27, RemarkId::R29, RemarkId::R211, RemarkId::R213];

    pub fn as_str(&self) -> &'static str {
        match self {
            RemarkId::R27 => "R27",
            RemarkId::R29 => "R29",
            RemarkId::R211 => "R211",
            RemarkId::R213 => "R213",
        }
    }

    /// Theorems in chain order: improved primed row, improved row, older rows.
    pub fn chain(&self) -> &'static [TheoremId] {
        use TheoremId::*;
        match self {
            RemarkId::R27 => &[T26p, T26, D],
            RemarkId::R29 => &[T28p, T28, E],
            RemarkId::R211 => &[T210p, T210, F],
            RemarkId::R213 => &[C212p, C212, G, B],
        }
    }

    /// Whether the chain takes `(M1, M2)` and the grid runs over `M2`.
    pub fn uses_two_bounds(&self) -> bool {
        matches!(self, RemarkId::R27 | RemarkId::R29)
    }

    /// Name of the grid parameter.
    pub fn param_name(&self) -> &'static str {
        if self.uses_two_bounds() {
            "M2"
        } else {
            "M"
        }
    }

    /// Whether the remark's stated regime covers this grid value.
    pub fn in_regime(&self, param: f64) -> bool {
        match self {
            RemarkId::R27 | RemarkId::R29 => param >= m0_prime() && param > 1.0,
            RemarkId::R211 => param > 1.0,
            RemarkId::R213 => param > m0_prime(),
        }
    }

    /// Only R211 has a weak last link (`r_3 >= rho_5`).
    pub fn last_link_is_weak(&self) -> bool {
        matches!(self, RemarkId::R211)
    }

    pub fn valid_ids() -> String {
        Self::ALL
            .iter()
            .map(|t| t.as_str())
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for RemarkId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RemarkId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                Error::domain(format!(
                    "unknown remark `{s}`; valid identifiers: {}",
                    Self::valid_ids()
                ))
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridPoint {
    /// `M2` for R27/R29, `M` otherwise.
    pub param: f64,
    /// Fixed `M1` for R27/R29.
    pub m1: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChainStatus {
    Pass,
    Fail,
    /// Outside the remark's stated regime: evaluated, never asserted.
    Exploratory,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChainRow {
    pub param: f64,
    pub m1: Option<f64>,
    /// Univalence radii in chain order.
    pub radii: Vec<f64>,
    /// Schlicht radii in chain order.
    pub sigmas: Vec<f64>,
    pub radii_hold: bool,
    pub sigmas_hold: bool,
    /// Weak link satisfied with equality (R211 only).
    pub tail_equal: bool,
    pub status: ChainStatus,
}

impl ChainRow {
    pub fn radius(&self, i: usize) -> Option<f64> {
        self.radii.get(i).copied()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChainReport {
    pub remark: RemarkId,
    pub rows: Vec<ChainRow>,
}

impl ChainReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.status != ChainStatus::Fail)
    }

    pub fn any_exploratory(&self) -> bool {
        self.rows
            .iter()
            .any(|r| r.status == ChainStatus::Exploratory)
    }
}

/// Relative gap under which two radii count as equal.
const EQUAL_RTOL: f64 = 1e-14;

fn approx_equal(a: f64, b: f64) -> bool {
    (a - b).abs() <= EQUAL_RTOL * a.abs().max(b.abs())
}

fn chain_holds(values: &[f64], weak_last: bool) -> (bool, bool) {
    let n = values.len();
    let mut ok = true;
    let mut tail_equal = false;
    for (i, w) in values.windows(2).enumerate() {
        let last = i + 2 == n;
        if last && weak_last {
            if approx_equal(w[0], w[1]) {
                tail_equal = true;
            } else if w[0] < w[1] {
                ok = false;
            }
        } else if !(w[0] > w[1]) {
            ok = false;
        }
    }
    (ok, tail_equal)
}

fn chain_row(id: RemarkId, point: GridPoint, opts: SolverOptions) -> Result<ChainRow> {
    let params = if id.uses_two_bounds() {
        let m1 = point
            .m1
            .ok_or_else(|| Error::domain(format!("remark {id} requires M1")))?;
        TheoremParams::pair(m1, point.param)
    } else {
        TheoremParams::single(point.param)
    };
    let results = id
        .chain()
        .iter()
        .map(|&t| theorem_radius_with(t, params, opts))
        .collect::<Result<Vec<_>>>()?;
    let radii: Vec<f64> = results.iter().map(|r| r.rho).collect();
    let sigmas: Vec<f64> = results.iter().map(|r| r.sigma).collect();
    let weak = id.last_link_is_weak();
    let (radii_hold, tail_equal) = chain_holds(&radii, weak);
    let (sigmas_hold, _) = chain_holds(&sigmas, weak);
    let status = if !id.in_regime(point.param) {
        ChainStatus::Exploratory
    } else if radii_hold && sigmas_hold {
        ChainStatus::Pass
    } else {
        ChainStatus::Fail
    };
    Ok(ChainRow {
        param: point.param,
        m1: if id.uses_two_bounds() { point.m1 } else { None },
        radii,
        sigmas,
        radii_hold,
        sigmas_hold,
        tail_equal,
        status,
    })
}

/// Evaluate a remark's inequality chain on every grid point.
///
/// Points are evaluated in parallel; rows come back in grid order.
pub fn remark_chain(id: RemarkId, grid: &[GridPoint], opts: SolverOptions) -> Result<ChainReport> {
    let rows = grid
        .par_iter()
        .map(|&p| chain_row(id, p, opts))
        .collect::<Result<Vec<_>>>()?;
    Ok(ChainReport { remark: id, rows })
}

/// Grid `start, start + step, ...` up to and including `stop` (within a
/// relative slack of `1e-9` steps), snapped to 12 decimal places.
pub fn linear_grid(start: f64, stop: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0) || !start.is_finite() || !stop.is_finite() || stop < start {
        return Err(Error::domain(format!(
            "grid needs finite start <= stop and step > 0, got {start}:{stop}:{step}"
        )));
    }
    let count = ((stop - start) / step + 1e-9).floor() as usize;
    // snap so each value is the double nearest the decimal grid point
    let snap = |v: f64| (v * 1e12).round() / 1e12;
    Ok((0..=count).map(|i| snap(start + i as f64 * step)).collect())
}
