//! Schlicht-disk coverage via winding numbers of the boundary image curve.

use std::f64::consts::{FRAC_PI_4, PI};

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

/// A sample of the curve closer than this to a target makes it indeterminate.
pub const CURVE_CLEARANCE: f64 = 1e-9;
/// Rings `|w| = fraction * sigma` carrying the targets.
pub const TARGET_RINGS: [f64; 3] = [0.3, 0.6, 0.9];
const MAX_BISECTIONS: u32 = 48;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Winding {
    /// Summed angle increments divided by `2 pi`.
    pub raw: f64,
    pub rounded: i64,
    pub indeterminate: bool,
}

impl Winding {
    pub fn deviation(&self) -> f64 {
        (self.raw - self.rounded as f64).abs()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoverageReport {
    pub radius: f64,
    pub sigma: f64,
    pub n_targets: usize,
    /// Targets whose winding differs from the common orientation.
    pub uncovered: Vec<[f64; 2]>,
    pub indeterminate: Vec<[f64; 2]>,
    /// `+1` sense-preserving, `-1` sense-reversing, `0` if undecided.
    pub orientation: i64,
    /// Largest `|raw - round(raw)|` over determinate targets.
    pub max_winding_deviation: f64,
    pub pass: bool,
}

struct Curve<'a, F> {
    f: &'a F,
    r: f64,
}

impl<F: Fn(Complex64) -> Complex64> Curve<'_, F> {
    fn at(&self, theta: f64) -> Complex64 {
        (self.f)(Complex64::from_polar(self.r, theta))
    }
}

/// Angle swept around `w` between `t0` and `t1`, bisecting any step whose
/// increment reaches `pi / 4`. `None` if the curve comes too close to `w`.
fn swept<F: Fn(Complex64) -> Complex64>(
    curve: &Curve<'_, F>,
    w: Complex64,
    (t0, v0): (f64, Complex64),
    (t1, v1): (f64, Complex64),
    depth: u32,
) -> Option<f64> {
    let d = ((v1 - w) / (v0 - w)).arg();
    if d.abs() < FRAC_PI_4 {
        return Some(d);
    }
    if depth == MAX_BISECTIONS {
        return None;
    }
    let tm = 0.5 * (t0 + t1);
    let vm = curve.at(tm);
    if (vm - w).norm() < CURVE_CLEARANCE {
        return None;
    }
    Some(
        swept(curve, w, (t0, v0), (tm, vm), depth + 1)?
            + swept(curve, w, (tm, vm), (t1, v1), depth + 1)?,
    )
}

fn winding_over<F: Fn(Complex64) -> Complex64>(
    curve: &Curve<'_, F>,
    samples: &[(f64, Complex64)],
    w: Complex64,
) -> Winding {
    let indeterminate = Winding {
        raw: f64::NAN,
        rounded: 0,
        indeterminate: true,
    };
    if samples
        .iter()
        .any(|&(_, v)| (v - w).norm() < CURVE_CLEARANCE)
    {
        return indeterminate;
    }
    let n = samples.len();
    let mut total = 0.0;
    for k in 0..n {
        let a = samples[k];
        let b = if k + 1 == n {
            (2.0 * PI, samples[0].1)
        } else {
            samples[k + 1]
        };
        match swept(curve, w, a, b, 0) {
            Some(d) => total += d,
            None => return indeterminate,
        }
    }
    let raw = total / (2.0 * PI);
    Winding {
        raw,
        rounded: raw.round() as i64,
        indeterminate: false,
    }
}

/// Winding number of `theta -> f(r e^{i theta})` around `w`.
pub fn winding_number<F>(f: &F, r: f64, w: Complex64, n_boundary: usize) -> Result<Winding>
where
    F: Fn(Complex64) -> Complex64,
{
    if n_boundary < 8 {
        return Err(Error::precondition("need at least 8 boundary samples"));
    }
    let curve = Curve { f, r };
    let samples = boundary_samples(&curve, n_boundary);
    Ok(winding_over(&curve, &samples, w))
}

fn boundary_samples<F: Fn(Complex64) -> Complex64>(
    curve: &Curve<'_, F>,
    n: usize,
) -> Vec<(f64, Complex64)> {
    (0..n)
        .map(|k| {
            let t = 2.0 * PI * k as f64 / n as f64;
            (t, curve.at(t))
        })
        .collect()
}

/// Targets on the rings `0.3 sigma`, `0.6 sigma`, `0.9 sigma`, split as evenly
/// as possible (at least one per ring).
pub fn coverage_targets(sigma: f64, n_targets: usize) -> Vec<Complex64> {
    let per_ring = n_targets.div_ceil(TARGET_RINGS.len()).max(1);
    TARGET_RINGS
        .iter()
        .flat_map(|&frac| {
            (0..per_ring).map(move |j| {
                // stagger rings so no two targets share a ray
                let offset = 0.5 + frac;
                Complex64::from_polar(
                    frac * sigma,
                    2.0 * PI * (j as f64 + offset) / per_ring as f64,
                )
            })
        })
        .collect()
}

/// Check that `f(U_r)` contains `U_sigma` by winding numbers of the image of
/// `|z| = r` around targets in `U_sigma`.
pub fn schlicht_scan<F>(
    f: F,
    r: f64,
    sigma: f64,
    n_boundary: usize,
    n_targets: usize,
) -> Result<CoverageReport>
where
    F: Fn(Complex64) -> Complex64 + Sync,
{
    if !(sigma > 0.0 && sigma.is_finite()) {
        return Err(Error::domain(format!(
            "schlicht scan needs sigma > 0, got {sigma}"
        )));
    }
    if !(r > 0.0 && r <= 1.0) {
        return Err(Error::domain(format!(
            "scan radius must lie in (0, 1], got {r}"
        )));
    }
    if n_boundary < 8 || n_targets < 1 {
        return Err(Error::precondition(
            "need at least 8 boundary samples and one target",
        ));
    }

    let curve = Curve { f: &f, r };
    let samples = boundary_samples(&curve, n_boundary);
    let targets = coverage_targets(sigma, n_targets);
    let windings: Vec<Winding> = targets
        .par_iter()
        .map(|&w| winding_over(&curve, &samples, w))
        .collect();

    let plus = windings
        .iter()
        .filter(|w| !w.indeterminate && w.rounded == 1)
        .count();
    let minus = windings
        .iter()
        .filter(|w| !w.indeterminate && w.rounded == -1)
        .count();
    let orientation = if plus == 0 && minus == 0 {
        0
    } else if plus >= minus {
        1
    } else {
        -1
    };

    let pt = |w: &Complex64| [w.re, w.im];
    let mut uncovered = Vec::new();
    let mut indeterminate = Vec::new();
    let mut max_dev: f64 = 0.0;
    for (w, wind) in targets.iter().zip(&windings) {
        if wind.indeterminate {
            indeterminate.push(pt(w));
            continue;
        }
        max_dev = max_dev.max(wind.deviation());
        if wind.rounded != orientation {
            uncovered.push(pt(w));
        }
    }
    let determinate = targets.len() - indeterminate.len();

    Ok(CoverageReport {
        radius: r,
        sigma,
        n_targets: targets.len(),
        pass: orientation != 0 && uncovered.is_empty() && determinate > 0,
        uncovered,
        indeterminate,
        orientation,
        max_winding_deviation: max_dev,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_modulus_map_covers() {
        let rep = schlicht_scan(|z| z * z.norm_sqr(), 0.9, 0.7, 256, 30).unwrap();
        assert!(rep.pass, "{rep:?}");
        assert_eq!(rep.orientation, 1);
        assert!(rep.max_winding_deviation < 1e-6);
    }

    #[test]
    fn identity_covers_slightly_smaller_disk() {
        let rep = schlicht_scan(|z| z, 0.5, 0.49, 64, 30).unwrap();
        assert!(rep.pass);
    }

    #[test]
    fn conjugate_is_sense_reversing() {
        let rep = schlicht_scan(|z: Complex64| z.conj(), 0.5, 0.4, 64, 12).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.orientation, -1);
    }

    #[test]
    fn too_large_sigma_is_uncovered() {
        // the 0.9 sigma ring lies outside the image disk of radius 0.5
        let rep = schlicht_scan(|z| z, 0.5, 0.8, 64, 30).unwrap();
        assert!(!rep.pass);
        assert_eq!(rep.uncovered.len(), 10);
    }

    #[test]
    fn square_winds_twice() {
        let w = winding_number(&|z: Complex64| z * z, 0.5, Complex64::new(0.01, 0.0), 16).unwrap();
        assert_eq!(w.rounded, 2);
        assert!(w.deviation() < 1e-12);
    }

    #[test]
    fn target_on_curve_is_indeterminate() {
        let w = winding_number(&|z: Complex64| z, 0.5, Complex64::new(0.5, 0.0), 16).unwrap();
        assert!(w.indeterminate);
    }

    #[test]
    fn coarse_sampling_is_refined() {
        // 8 samples of z^5 give increments of 5 pi / 4 before refinement
        let w =
            winding_number(&|z: Complex64| z.powu(5), 0.9, Complex64::new(0.0, 0.0), 8).unwrap();
        assert_eq!(w.rounded, 5);
    }

    #[test]
    fn rejects_nonpositive_sigma() {
        assert!(schlicht_scan(|z| z, 0.5, 0.0, 64, 3).is_err());
    }
}
