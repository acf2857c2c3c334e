//! Desk-scale empirical checks of the univalence and covering conclusions.
//!
//! Scans are falsifiers: a pass means no violation was seen at grid scale.

pub mod corpus;
pub mod coverage;
pub mod injectivity;

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::maps::PlanarMap;
use crate::radii::{
    theorem_radius_with, Family, RadiusResult, SolverOptions, TheoremId, TheoremParams,
};

pub use corpus::{
    corpus, standard_corpus, CorpusEntry, CorpusKind, CorpusName, CorpusParams, Kernel, Part,
};
pub use coverage::{schlicht_scan, winding_number, CoverageReport, Winding};
pub use injectivity::{injectivity_scan, InjectivityReport};

/// The default scan density.
pub const DEFAULT_GRID_N: usize = 128;
pub const DEFAULT_BOUNDARY_SAMPLES: usize = 1024;
pub const DEFAULT_TARGETS: usize = 96;
/// Theorem configurations are scanned for injectivity at this fraction of `rho`.
pub const THEOREM_RADIUS_SHRINK: f64 = 0.999;
/// The classical Landau configuration is scanned at this fraction of `r0`.
pub const CLASSICAL_RADIUS_SHRINK: f64 = 0.99;
/// Coverage is checked for this fraction of `sigma`.
pub const SIGMA_SHRINK: f64 = 0.99;

/// `grid_n` rings `|z| = r k / grid_n` (`k = 1..=grid_n`) times `grid_n`
/// equispaced angles, preceded by the origin.
pub fn polar_grid(r: f64, grid_n: usize) -> Vec<Complex64> {
    let mut pts = Vec::with_capacity(grid_n * grid_n + 1);
    pts.push(Complex64::new(0.0, 0.0));
    for k in 1..=grid_n {
        let rho = r * k as f64 / grid_n as f64;
        for j in 0..grid_n {
            pts.push(Complex64::from_polar(
                rho,
                2.0 * PI * j as f64 / grid_n as f64,
            ));
        }
    }
    pts
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct JacobianScan {
    pub min: f64,
    pub argmin: [f64; 2],
}

/// Minimum of `J_F` over the polar grid of `|z| <= r`.
///
/// For harmonic maps a positive minimum is the local-univalence criterion;
/// for biharmonic maps it is only a heuristic indicator.
pub fn min_jacobian<M: PlanarMap>(f: &M, r: f64, grid_n: usize) -> Result<JacobianScan> {
    if grid_n < injectivity::MIN_GRID {
        return Err(Error::precondition(format!(
            "grid_n must be at least {}, got {grid_n}",
            injectivity::MIN_GRID
        )));
    }
    let grid = polar_grid(r, grid_n);
    let jac: Vec<f64> = grid.par_iter().map(|&z| f.distortion(z).jacobian).collect();
    let (i, &min) = jac
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .expect("grid is nonempty");
    Ok(JacobianScan {
        min,
        argmin: [grid[i].re, grid[i].im],
    })
}

/// Minimum of `lambda_F` over `samples` equispaced points of `|z| = r`;
/// for analytic maps this is `min |f'|`.
pub fn min_stretch_on_circle<M: PlanarMap>(f: &M, r: f64, samples: usize) -> f64 {
    (0..samples)
        .map(|k| {
            f.distortion(Complex64::from_polar(
                r,
                2.0 * PI * k as f64 / samples as f64,
            ))
            .lambda
        })
        .fold(f64::INFINITY, f64::min)
}

/// Classical Landau radii `r0 = 1 / (M + sqrt(M^2 - 1))` and `R0 = M r0^2`.
pub fn landau_classic_radii(m: f64) -> Result<(f64, f64)> {
    if !(m >= 1.0) {
        return Err(Error::domain(format!(
            "classical Landau radii need M >= 1, got {m}"
        )));
    }
    let r0 = 1.0 / (m + (m * m - 1.0).sqrt());
    Ok((r0, m * r0 * r0))
}

// ---------------------------------------------------------------------------
// Theorem configurations
// ---------------------------------------------------------------------------

/// A mapping satisfying a theorem's hypotheses, paired with its radii.
#[derive(Debug, Clone)]
pub struct Configuration {
    pub label: String,
    pub entry: CorpusEntry,
    pub rho: f64,
    pub sigma: f64,
    /// Radius at which injectivity is scanned.
    pub scan_radius: f64,
    pub radius: Option<RadiusResult>,
}

/// `|z|^2 f_{1,2}(z; M)` for the pure rows and `|z|^2 vstrip(z; M1) + f_{1,2}(z; M2)`
/// for the mixed rows.
pub fn theorem_configuration(
    id: TheoremId,
    params: TheoremParams,
    opts: SolverOptions,
) -> Result<Configuration> {
    let radius = theorem_radius_with(id, params, opts)?;
    let entry = match id.family() {
        Family::II => corpus(
            CorpusName::BiharmonicPure,
            CorpusParams::with_m(params.m.unwrap()),
        )?,
        Family::I => {
            let (m1, m2) = if id == TheoremId::A {
                (params.m.unwrap(), params.m.unwrap())
            } else {
                (params.m1.unwrap(), params.m2.unwrap())
            };
            if id == TheoremId::A && m2 < 1.0 {
                return Err(Error::domain(
                    "a row A configuration with J(0) = 1 needs M >= 1",
                ));
            }
            corpus(
                CorpusName::BiharmonicMixed,
                CorpusParams {
                    m1: Some(m1),
                    m2: Some(m2),
                    ..CorpusParams::default()
                },
            )?
        }
    };
    Ok(Configuration {
        label: format!("theorem {id}"),
        entry,
        rho: radius.rho,
        sigma: radius.sigma,
        scan_radius: THEOREM_RADIUS_SHRINK * radius.rho,
        radius: Some(radius),
    })
}

/// The extremal `M z (1 - M z) / (M - z)` with `(r0, R0)`.
pub fn classical_configuration(m: f64) -> Result<Configuration> {
    let (r0, big_r0) = landau_classic_radii(m)?;
    Ok(Configuration {
        label: "classical Landau".to_string(),
        entry: corpus(CorpusName::LandauClassic, CorpusParams::with_m(m))?,
        rho: r0,
        sigma: big_r0,
        scan_radius: CLASSICAL_RADIUS_SHRINK * r0,
        radius: None,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub label: String,
    pub map: String,
    pub rho: f64,
    pub sigma: f64,
    pub injectivity: InjectivityReport,
    /// Absent when `sigma <= 0`.
    pub coverage: Option<CoverageReport>,
    pub min_jacobian: JacobianScan,
    pub pass: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanOptions {
    pub grid_n: usize,
    pub n_boundary: usize,
    pub n_targets: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self {
            grid_n: DEFAULT_GRID_N,
            n_boundary: DEFAULT_BOUNDARY_SAMPLES,
            n_targets: DEFAULT_TARGETS,
        }
    }
}

/// Injectivity at the configuration's scan radius, coverage of
/// `U_{0.99 sigma}` by the image of `|z| = rho`, and the Jacobian minimum.
pub fn run_verification(cfg: &Configuration, opts: ScanOptions) -> Result<VerificationReport> {
    let f = |z| cfg.entry.eval(z);
    let injectivity = injectivity_scan(f, cfg.scan_radius, opts.grid_n)?;
    let coverage = if cfg.sigma > 0.0 {
        Some(schlicht_scan(
            f,
            cfg.rho,
            SIGMA_SHRINK * cfg.sigma,
            opts.n_boundary,
            opts.n_targets,
        )?)
    } else {
        None
    };
    let min_jacobian = min_jacobian(&cfg.entry, cfg.scan_radius, opts.grid_n)?;
    let pass = injectivity.pass && coverage.as_ref().is_none_or(|c| c.pass);
    Ok(VerificationReport {
        label: cfg.label.clone(),
        map: cfg.entry.label(),
        rho: cfg.rho,
        sigma: cfg.sigma,
        injectivity,
        coverage,
        min_jacobian,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::{AnalyticSeries, HarmonicMap};

    #[test]
    fn polar_grid_shape() {
        let g = polar_grid(0.5, 16);
        assert_eq!(g.len(), 16 * 16 + 1);
        assert!((g.last().unwrap().norm() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn identity_jacobian_is_one() {
        let id = HarmonicMap::analytic(AnalyticSeries::identity());
        let scan = min_jacobian(&id, 0.7, 32).unwrap();
        assert_eq!(scan.min, 1.0);
    }

    #[test]
    fn extremal_jacobian_near_origin_is_a_squared() {
        let e = corpus(
            CorpusName::FAn,
            CorpusParams {
                m: Some(2.0),
                a: Some(0.5),
                n: Some(3),
                ..CorpusParams::default()
            },
        )
        .unwrap();
        let scan = min_jacobian(&e, 1e-4, 16).unwrap();
        assert!((scan.min - 0.25).abs() < 1e-6);
    }

    #[test]
    fn landau_classic_jacobian_vanishes_at_r0() {
        let (r0, _) = landau_classic_radii(2.0).unwrap();
        assert!((r0 - 1.0 / (2.0 + 3f64.sqrt())).abs() < 1e-15);
        let e = corpus(CorpusName::LandauClassic, CorpusParams::with_m(2.0)).unwrap();
        let scan = min_jacobian(&e, r0, 64).unwrap();
        assert!(scan.min.abs() < 1e-14);
        assert!((scan.argmin[0] - r0).abs() < 1e-15);
    }

    #[test]
    fn landau_classic_rejects_bound_below_one() {
        assert!(landau_classic_radii(0.9).is_err());
    }
}
