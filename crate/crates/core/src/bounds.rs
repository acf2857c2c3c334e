//! Coefficient bounds for bounded and normalized harmonic mappings, and the
//! Fourier machinery that audits them on concrete maps.
//!
//! For `f = sum a_n z^n + conj(sum b_n z^n)`:
//!
//! - `|f| <= M` gives `|a_n| + |b_n| <= 4M/pi` for all `n >= 1` (sharp).
//! - `J_f(0) = 1` or `lambda_f(0) = 1` with `|f| < M` gives
//!   `|a_n| + |b_n| <= sqrt(2M^2 - 2)` for `n >= 2`, and `lambda_f(0) >= lambda0(M)`.
//! - `|h| + |g| <= M` gives `|a_n| + |b_n| <= M - lambda_f(0)^2 / M` for `n >= 2` (sharp).

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

/// Crossover of the two branches of [`lambda0`]: `pi / (2 (2 pi^2 - 16)^(1/4))`.
pub fn m0() -> f64 {
    PI / (2.0 * (2.0 * PI * PI - 16.0).powf(0.25))
}

/// Crossover of the two branches of [`big_k`]: `pi / sqrt(pi^2 - 8)`.
pub fn m0_prime() -> f64 {
    PI / (PI * PI - 8.0).sqrt()
}

fn require_at_least_one(m: f64, what: &str) -> Result<()> {
    if m.is_nan() || m < 1.0 {
        return Err(Error::domain(format!(
            "{what} requires M >= 1, got M = {m}"
        )));
    }
    Ok(())
}

/// First branch of [`lambda0`], valid for `M >= 1`.
pub fn lambda0_algebraic(m: f64) -> f64 {
    std::f64::consts::SQRT_2 / ((m * m - 1.0).sqrt() + (m * m + 1.0).sqrt())
}

/// Lower bound on `lambda_f(0)` for harmonic `f` with `J_f(0) = 1`, `|f| < M`.
pub fn lambda0(m: f64) -> Result<f64> {
    require_at_least_one(m, "lambda0")?;
    if m <= m0() {
        Ok(lambda0_algebraic(m))
    } else {
        Ok(PI / (4.0 * m))
    }
}

/// `K(M) = min(sqrt(2M^2 - 2), 4M/pi)`.
pub fn big_k(m: f64) -> Result<f64> {
    Ok(bound_jacobian_normalized(m)?.min(bound_bounded(m)))
}

/// `4M/pi`, valid for every map with `|f| <= M`.
pub fn bound_bounded(m: f64) -> f64 {
    4.0 * m / PI
}

/// `sqrt(2M^2 - 2)`, the normalized bound for `n >= 2`.
pub fn bound_jacobian_normalized(m: f64) -> Result<f64> {
    require_at_least_one(m, "the normalized coefficient bound")?;
    Ok((2.0 * m * m - 2.0).sqrt())
}

/// `M - lambda^2 / M` for maps with `|h| + |g| <= M` and `lambda_f(0) = lambda`.
pub fn bound_sum_normalized(m: f64, lambda: f64) -> Result<f64> {
    if m.is_nan() || m <= 0.0 {
        return Err(Error::domain(format!(
            "sum-modulus bound requires M > 0, got {m}"
        )));
    }
    if !(0.0..=m).contains(&lambda) {
        return Err(Error::domain(format!(
            "sum-modulus bound requires 0 <= lambda <= M, got lambda = {lambda}, M = {m}"
        )));
    }
    Ok(m - lambda * lambda / m)
}

// ---------------------------------------------------------------------------
// Coefficient extraction
// ---------------------------------------------------------------------------

/// Sampling radius used when the caller does not pick one.
pub const DEFAULT_RADIUS: f64 = 0.5;
/// Sample count used for non-polynomial maps.
pub const DEFAULT_SAMPLES: usize = 4096;

/// Coefficients of `z^n` in `h` and in `g` for `f = h + conj(g)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoeffPair {
    pub n: usize,
    #[serde(serialize_with = "ser_complex")]
    pub a: Complex64,
    #[serde(serialize_with = "ser_complex")]
    pub b: Complex64,
}

impl CoeffPair {
    pub fn modulus_sum(&self) -> f64 {
        self.a.norm() + self.b.norm()
    }
}

fn ser_complex<S: serde::Serializer>(c: &Complex64, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeTuple;
    let mut t = s.serialize_tuple(2)?;
    t.serialize_element(&c.re)?;
    t.serialize_element(&c.im)?;
    t.end()
}

#[derive(Default, Clone, Copy)]
struct CompensatedSum {
    sum: Complex64,
    carry: Complex64,
}

impl CompensatedSum {
    fn add(&mut self, x: Complex64) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }
}

/// Recover `a_n` and `b_n` (`1 <= n <= n_max`) of a harmonic map from
/// `samples` equispaced values on the circle `|z| = r`.
///
/// `a_n r^n` is the `-n`-th discrete Fourier mode and `conj(b_n) r^n` the
/// `+n`-th. The result is exact up to round-off for harmonic polynomials of
/// degree below `samples - n_max`.
pub fn extract_coefficients<F>(f: F, n_max: usize, r: f64, samples: usize) -> Result<Vec<CoeffPair>>
where
    F: Fn(Complex64) -> Complex64,
{
    if n_max < 1 {
        return Err(Error::precondition("n_max must be at least 1"));
    }
    if samples < 4 * (n_max + 1) {
        return Err(Error::precondition(format!(
            "need at least 4 (n_max + 1) = {} samples, got {samples}",
            4 * (n_max + 1)
        )));
    }
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::domain(format!(
            "sampling radius must lie in (0, 1), got {r}"
        )));
    }

    let unit: Vec<Complex64> = (0..samples)
        .map(|j| Complex64::from_polar(1.0, 2.0 * PI * j as f64 / samples as f64))
        .collect();
    let values: Vec<Complex64> = unit.iter().map(|&u| f(u * r)).collect();

    let mut out = Vec::with_capacity(n_max);
    let mut scale = 1.0;
    for n in 1..=n_max {
        scale *= r;
        let mut minus = CompensatedSum::default();
        let mut plus = CompensatedSum::default();
        for (k, &v) in values.iter().enumerate() {
            let w = unit[(n * k) % samples];
            minus.add(v * w.conj());
            plus.add(v * w);
        }
        let norm = samples as f64 * scale;
        out.push(CoeffPair {
            n,
            a: minus.sum / norm,
            b: (plus.sum / norm).conj(),
        });
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Audits
// ---------------------------------------------------------------------------

/// Slack below which a bound counts as violated.
pub const AUDIT_TOL: f64 = 1e-8;

/// Which hypothesis the audited map satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AuditMode {
    /// `|f| <= M`; rows `n >= 1` against `4M/pi`.
    BoundedModulus,
    /// `|h| + |g| <= M`; rows `n >= 2` against `M - lambda_f(0)^2 / M`.
    SumModulus,
}

impl AuditMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            AuditMode::BoundedModulus => "bounded_modulus",
            AuditMode::SumModulus => "sum_modulus",
        }
    }
}

impl std::str::FromStr for AuditMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bounded_modulus" | "bounded" => Ok(AuditMode::BoundedModulus),
            "sum_modulus" | "sum" => Ok(AuditMode::SumModulus),
            other => Err(Error::domain(format!(
                "unknown audit mode `{other}` (expected bounded_modulus or sum_modulus)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditRow {
    pub n: usize,
    pub modulus_sum: f64,
    pub bound: f64,
    pub slack: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsAudit {
    pub map_name: String,
    pub m: f64,
    pub mode: AuditMode,
    /// `lambda_f(0) = ||a_1| - |b_1||` from the extraction.
    pub lambda_at_origin: f64,
    pub rows: Vec<AuditRow>,
}

impl BoundsAudit {
    pub fn min_slack(&self) -> f64 {
        self.rows
            .iter()
            .map(|r| r.slack)
            .fold(f64::INFINITY, f64::min)
    }

    pub fn passes(&self) -> bool {
        self.rows.iter().all(|r| r.slack >= -AUDIT_TOL)
    }

    pub fn row(&self, n: usize) -> Option<&AuditRow> {
        self.rows.iter().find(|r| r.n == n)
    }
}

/// Compare extracted `|a_n| + |b_n|` against the bound for `mode`.
///
/// The caller asserts that `f` satisfies the hypothesis named by `mode`.
pub fn audit_bounds<F>(
    map_name: &str,
    f: F,
    m: f64,
    mode: AuditMode,
    n_max: usize,
) -> Result<BoundsAudit>
where
    F: Fn(Complex64) -> Complex64,
{
    let coeffs = extract_coefficients(f, n_max, DEFAULT_RADIUS, DEFAULT_SAMPLES)?;
    let first = coeffs[0];
    let lambda_at_origin = (first.a.norm() - first.b.norm()).abs();

    let (bound, start) = match mode {
        AuditMode::BoundedModulus => (bound_bounded(m), 1),
        AuditMode::SumModulus => {
            // extraction round-off can push lambda a hair above M for lambda = M maps
            let lam = if lambda_at_origin > m && lambda_at_origin <= m * (1.0 + 1e-10) {
                m
            } else {
                lambda_at_origin
            };
            (bound_sum_normalized(m, lam)?, 2)
        }
    };

    let rows = coeffs
        .iter()
        .filter(|c| c.n >= start)
        .map(|c| {
            let s = c.modulus_sum();
            AuditRow {
                n: c.n,
                modulus_sum: s,
                bound,
                slack: bound - s,
            }
        })
        .collect();

    Ok(BoundsAudit {
        map_name: map_name.to_string(),
        m,
        mode,
        lambda_at_origin,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn crossover_constants() {
        assert!((m0() - 1.1296).abs() < 5e-5);
        assert!((m0_prime() - 2.2976).abs() < 5e-5);
    }

    #[test]
    fn lambda0_values() {
        assert_eq!(lambda0(1.0).unwrap(), 1.0);
        assert!((lambda0(2.0).unwrap() - PI / 8.0).abs() < 1e-15);
        let m = m0();
        assert!((lambda0_algebraic(m) - PI / (4.0 * m)).abs() < 1e-12);
        assert!(lambda0(0.99).is_err());
    }

    #[test]
    fn big_k_values() {
        assert_eq!(big_k(1.0).unwrap(), 0.0);
        assert!((big_k(3.0).unwrap() - 12.0 / PI).abs() < 1e-15);
        let m = m0_prime();
        assert!((bound_jacobian_normalized(m).unwrap() - bound_bounded(m)).abs() < 1e-12);
        assert!(big_k(0.5).is_err());
    }

    #[test]
    fn simple_bounds() {
        assert!((bound_bounded(PI / 4.0) - 1.0).abs() < 1e-15);
        assert!((bound_bounded(1.0) - 1.2732395447351628).abs() < 1e-15);
        assert!((bound_bounded(2.0) - 2.5464790894703255).abs() < 1e-15);
        assert_eq!(bound_jacobian_normalized(1.0).unwrap(), 0.0);
        assert_eq!(bound_jacobian_normalized(3.0).unwrap(), 4.0);
        assert!((bound_jacobian_normalized(2.0).unwrap() - 6f64.sqrt()).abs() < 1e-15);
        assert!(bound_jacobian_normalized(0.9).is_err());
    }

    #[test]
    fn sum_normalized_bound() {
        assert_eq!(bound_sum_normalized(2.0, 1.0).unwrap(), 1.5);
        assert_eq!(bound_sum_normalized(1.0, 1.0).unwrap(), 0.0);
        assert_eq!(bound_sum_normalized(5.0, 0.0).unwrap(), 5.0);
        assert!(bound_sum_normalized(2.0, 2.5).is_err());
        assert!(bound_sum_normalized(2.0, -0.1).is_err());
    }

    #[test]
    fn remark_regime_ordering() {
        // M - 1/M < 4M/pi <= sqrt(2M^2 - 2) once M >= M0'
        let start = m0_prime();
        for i in 0..200 {
            let m = start + i as f64 * 0.05;
            let sum = bound_sum_normalized(m, 1.0).unwrap();
            let bounded = bound_bounded(m);
            let jac = bound_jacobian_normalized(m).unwrap();
            assert!(sum < bounded, "M = {m}");
            assert!(bounded <= jac + 1e-12, "M = {m}");
        }
    }

    #[test]
    fn monotone_on_grid() {
        let grid: Vec<f64> = (0..1000).map(|i| 1.0 + 19.0 * i as f64 / 999.0).collect();
        for w in grid.windows(2) {
            assert!(lambda0(w[1]).unwrap() <= lambda0(w[0]).unwrap());
            assert!(big_k(w[1]).unwrap() >= big_k(w[0]).unwrap());
        }
    }

    #[test]
    fn big_k_branch_consistency() {
        let crossover = m0_prime();
        for i in 0..400 {
            let m = 1.0 + i as f64 * 0.05;
            let k = big_k(m).unwrap();
            if m <= crossover {
                assert_eq!(k, bound_jacobian_normalized(m).unwrap());
            } else {
                assert_eq!(k, bound_bounded(m));
            }
        }
    }

    #[test]
    fn extraction_of_identity() {
        let coeffs = extract_coefficients(|z| z, 3, 0.5, 64).unwrap();
        assert_eq!(coeffs.len(), 3);
        for p in &coeffs {
            let expect_a = if p.n == 1 { c(1.0, 0.0) } else { c(0.0, 0.0) };
            assert!((p.a - expect_a).norm() <= 1e-12);
            assert!(p.b.norm() <= 1e-12);
        }
    }

    #[test]
    fn extraction_conjugates_the_coanalytic_part() {
        // f = z + conj((0.5 + 0.25 i) z^2)
        let b2 = c(0.5, 0.25);
        let coeffs = extract_coefficients(|z| z + (b2 * z * z).conj(), 4, 0.5, 64).unwrap();
        assert!((coeffs[1].b - b2).norm() < 1e-13);
        assert!(coeffs[1].a.norm() < 1e-13);
    }

    #[test]
    fn extraction_preconditions() {
        assert!(matches!(
            extract_coefficients(|z| z, 3, 0.5, 15),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            extract_coefficients(|z| z, 3, 1.0, 64),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            extract_coefficients(|z| z, 3, 0.0, 64),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn audit_mode_parses() {
        assert_eq!(
            "sum_modulus".parse::<AuditMode>().unwrap(),
            AuditMode::SumModulus
        );
        assert!("other".parse::<AuditMode>().is_err());
    }

    #[test]
    fn identity_sum_modulus_audit_is_tight() {
        let audit = audit_bounds("identity", |z| z, 1.0, AuditMode::SumModulus, 16).unwrap();
        assert!(audit.passes());
        assert_eq!(audit.rows.first().unwrap().n, 2);
        for row in &audit.rows {
            assert!(row.modulus_sum < 1e-12);
            assert!(row.bound.abs() < 1e-12);
        }
    }
}
