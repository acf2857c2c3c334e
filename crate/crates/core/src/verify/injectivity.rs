//! Grid injectivity scan.
//!
//! A failed scan is a certificate of non-injectivity at grid scale; a passed
//! scan only means no collision was found among the sampled points.

use std::collections::HashMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use super::polar_grid;
use crate::error::{Error, Result};

/// Images closer than this (scaled by `min(1, |w|)`) count as equal.
pub const IMAGE_TOL: f64 = 1e-10;
/// Domain points closer than this are treated as the same point.
pub const DOMAIN_FLOOR: f64 = 1e-6;
pub const MIN_GRID: usize = 16;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InjectivityReport {
    pub radius: f64,
    pub grid_n: usize,
    pub points: usize,
    pub pairs_tested: usize,
    pub pass: bool,
    /// First colliding pair in grid order, as `[[x1, y1], [x2, y2]]`.
    pub witness: Option<[[f64; 2]; 2]>,
    /// `min |F(z1) - F(z2)| / |z1 - z2|` over the pairs compared.
    pub min_separation_ratio: f64,
}

/// Log-polar cell of an image point; `None` for the exact origin.
fn cell(w: Complex64, width: f64, angular_cells: i64) -> Option<(i64, i64)> {
    if w == Complex64::new(0.0, 0.0) {
        return None;
    }
    let radial = (w.norm().ln() / width).floor() as i64;
    let mut theta = w.arg();
    if theta < 0.0 {
        theta += 2.0 * PI;
    }
    let angular =
        ((theta / (2.0 * PI) * angular_cells as f64).floor() as i64).rem_euclid(angular_cells);
    Some((radial, angular))
}

fn collides(w1: Complex64, w2: Complex64) -> bool {
    let scale = w1.norm().max(w2.norm()).min(1.0);
    (w1 - w2).norm() <= IMAGE_TOL * scale
}

/// Evaluate `f` on a `grid_n x grid_n` polar grid of `|z| <= r` (plus the
/// origin) and look for distinct points with coinciding images.
///
/// Images are bucketed by `(ln|w|, arg w)` so that the relative collision
/// test only compares nearby points.
pub fn injectivity_scan<F>(f: F, r: f64, grid_n: usize) -> Result<InjectivityReport>
where
    F: Fn(Complex64) -> Complex64 + Sync,
{
    if grid_n < MIN_GRID {
        return Err(Error::precondition(format!(
            "grid_n must be at least {MIN_GRID}, got {grid_n}"
        )));
    }
    if !(r > 0.0 && r <= 1.0) {
        return Err(Error::domain(format!(
            "scan radius must lie in (0, 1], got {r}"
        )));
    }

    let domain = polar_grid(r, grid_n);
    let images: Vec<Complex64> = domain.par_iter().map(|&z| f(z)).collect();

    let width = 2.0 * PI / grid_n as f64;
    let angular_cells = grid_n as i64;
    let mut buckets: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
    let mut at_origin: Vec<usize> = Vec::new();
    let cells: Vec<Option<(i64, i64)>> = images
        .iter()
        .map(|&w| cell(w, width, angular_cells))
        .collect();
    for (i, c) in cells.iter().enumerate() {
        match c {
            Some(key) => buckets.entry(*key).or_default().push(i),
            None => at_origin.push(i),
        }
    }

    let mut pairs_tested = 0usize;
    let mut min_ratio = f64::INFINITY;
    let mut witness: Option<(usize, usize)> = None;

    let mut consider = |i: usize, j: usize, witness: &mut Option<(usize, usize)>| {
        let dz = (domain[i] - domain[j]).norm();
        if dz <= DOMAIN_FLOOR {
            return;
        }
        pairs_tested += 1;
        let dw = (images[i] - images[j]).norm();
        min_ratio = min_ratio.min(dw / dz);
        if collides(images[i], images[j]) {
            let pair = (j.min(i), j.max(i));
            if witness.is_none_or(|w| pair < w) {
                *witness = Some(pair);
            }
        }
    };

    for (i, c) in cells.iter().enumerate() {
        let Some((ri, ai)) = *c else { continue };
        for dr in -1..=1 {
            for da in -1..=1 {
                let key = (ri + dr, (ai + da).rem_euclid(angular_cells));
                if let Some(list) = buckets.get(&key) {
                    for &j in list.iter().filter(|&&j| j < i) {
                        consider(i, j, &mut witness);
                    }
                }
            }
        }
    }
    for (k, &i) in at_origin.iter().enumerate() {
        for &j in &at_origin[..k] {
            consider(i, j, &mut witness);
        }
    }

    let witness =
        witness.map(|(i, j)| [[domain[i].re, domain[i].im], [domain[j].re, domain[j].im]]);
    Ok(InjectivityReport {
        radius: r,
        grid_n,
        points: domain.len(),
        pairs_tested,
        pass: witness.is_none(),
        witness,
        min_separation_ratio: min_ratio,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_passes() {
        let rep = injectivity_scan(|z| z, 0.9, 64).unwrap();
        assert!(rep.pass);
        assert!(rep.witness.is_none());
        assert!((rep.min_separation_ratio - 1.0).abs() < 1e-12);
        assert!(rep.pairs_tested > 0);
    }

    #[test]
    fn square_fails_with_antipodal_witness() {
        let rep = injectivity_scan(|z| z * z, 0.9, 64).unwrap();
        assert!(!rep.pass);
        let [[x1, y1], [x2, y2]] = rep.witness.unwrap();
        let (z1, z2) = (Complex64::new(x1, y1), Complex64::new(x2, y2));
        assert!((z1 + z2).norm() < 1e-12, "{z1} {z2}");
        assert!((z1 * z1 - z2 * z2).norm() <= IMAGE_TOL);
    }

    #[test]
    fn cubic_modulus_map_is_injective_despite_tiny_inner_images() {
        // inner ring images have modulus ~1e-9; an absolute 1e-10 test would
        // report false collisions there
        let rep = injectivity_scan(|z| z * z.norm_sqr(), 0.13, 128).unwrap();
        assert!(rep.pass);
    }

    #[test]
    fn small_grid_is_rejected() {
        assert!(injectivity_scan(|z| z, 0.5, 8).is_err());
        assert!(injectivity_scan(|z| z, 1.5, 32).is_err());
    }
}
