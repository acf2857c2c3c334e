//! Analytic, harmonic and biharmonic mappings of the unit disk.
//!
//! A harmonic mapping on the disk splits as `f = h + conj(g)` with `h`, `g`
//! analytic, and a biharmonic mapping as `F = |z|^2 g + h` with `g`, `h`
//! harmonic. The analytic building blocks are anything implementing
//! [`Analytic`]; the default is a truncated power series.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// An analytic function on (a neighbourhood of) the unit disk, given by its
/// value and complex derivative.
pub trait Analytic: Send + Sync {
    fn value(&self, z: Complex64) -> Complex64;
    fn derivative(&self, z: Complex64) -> Complex64;
}

/// A planar mapping with its two Wirtinger derivatives `(f_z, f_zbar)`.
pub trait PlanarMap: Send + Sync {
    fn eval(&self, z: Complex64) -> Complex64;
    fn wirtinger(&self, z: Complex64) -> (Complex64, Complex64);

    fn distortion(&self, z: Complex64) -> DistortionTriple {
        let (fz, fzbar) = self.wirtinger(z);
        DistortionTriple::from_wirtinger(fz, fzbar)
    }
}

// ---------------------------------------------------------------------------
// Truncated power series
// ---------------------------------------------------------------------------

/// Truncated power series `c_0 + c_1 z + ... + c_N z^N`.
///
/// The truncation order is `coeffs.len() - 1` and is always at least 0.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalyticSeries {
    coeffs: Vec<Complex64>,
}

impl AnalyticSeries {
    /// Truncation order used when expanding closed-form maps.
    pub const DEFAULT_ORDER: usize = 64;

    pub fn new(coeffs: Vec<Complex64>) -> Self {
        if coeffs.is_empty() {
            return Self::zero();
        }
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: vec![ZERO] }
    }

    pub fn constant(c: Complex64) -> Self {
        Self { coeffs: vec![c] }
    }

    pub fn identity() -> Self {
        Self {
            coeffs: vec![ZERO, ONE],
        }
    }

    /// `c z^k` as a series of order `k`.
    pub fn monomial(k: usize, c: Complex64) -> Self {
        let mut coeffs = vec![ZERO; k + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^k`; zero past the truncation order.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or(ZERO)
    }

    /// Horner evaluation of the finite sum. Intended for `|z| <= 1`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * z + c)
    }

    /// Term-wise derivative; order drops by one (order 0 maps to the zero series).
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::zero();
        }
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as f64)
                .collect(),
        }
    }

    /// Derivative evaluated at `z` without materialising the derived series.
    pub fn eval_derivative(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(ZERO, |acc, (k, &c)| acc * z + c * k as f64)
    }

    /// Keep terms up to `z^order`, padding with zeros if needed.
    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, ZERO);
        Self { coeffs }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|&a| a * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self {
            coeffs: (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-ONE))
    }

    /// Cauchy product truncated at `order`.
    pub fn mul(&self, other: &Self, order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|k| {
                let lo = k.saturating_sub(other.truncation_order());
                let hi = k.min(self.truncation_order());
                (lo..=hi).fold(ZERO, |acc, i| acc + self.coeffs[i] * other.coeffs[k - i])
            })
            .collect();
        Self { coeffs }
    }

    /// Power-series quotient `self / den` truncated at `order`, computed by the
    /// recurrence `q_k = (p_k - sum_{i=1..k} d_i q_{k-i}) / d_0`.
    pub fn div(&self, den: &Self, order: usize) -> Result<Self> {
        let d0 = den.coeffs[0];
        if d0 == ZERO {
            return Err(Error::domain(
                "power-series division needs a denominator with nonzero constant term",
            ));
        }
        let mut q: Vec<Complex64> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let upper = k.min(den.truncation_order());
            let conv = (1..=upper).fold(ZERO, |acc, i| acc + den.coeffs[i] * q[k - i]);
            q.push((self.coeff(k) - conv) / d0);
        }
        Ok(Self { coeffs: q })
    }

    /// Expansion of `num(z) / den(z)` for polynomial numerator and denominator.
    pub fn rational(num: &[Complex64], den: &[Complex64], order: usize) -> Result<Self> {
        Self::new(num.to_vec()).div(&Self::new(den.to_vec()), order)
    }

    /// `s(z^m)`, of order `m * N`.
    pub fn substitute_power(&self, m: usize) -> Self {
        assert!(m >= 1, "substitution power must be positive");
        let mut coeffs = vec![ZERO; self.truncation_order() * m + 1];
        for (k, &c) in self.coeffs.iter().enumerate() {
            coeffs[k * m] = c;
        }
        Self { coeffs }
    }

    /// Series whose coefficients are the complex conjugates of these; it
    /// evaluates to `conj(s(conj(z)))`.
    pub fn conj_coeffs(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.conj()).collect(),
        }
    }
}

impl Default for AnalyticSeries {
    fn default() -> Self {
        Self::zero()
    }
}

impl Analytic for AnalyticSeries {
    fn value(&self, z: Complex64) -> Complex64 {
        self.eval(z)
    }

    fn derivative(&self, z: Complex64) -> Complex64 {
        self.eval_derivative(z)
    }
}

impl PlanarMap for AnalyticSeries {
    fn eval(&self, z: Complex64) -> Complex64 {
        AnalyticSeries::eval(self, z)
    }

    fn wirtinger(&self, z: Complex64) -> (Complex64, Complex64) {
        (self.eval_derivative(z), ZERO)
    }
}

// ---------------------------------------------------------------------------
// Harmonic and biharmonic maps
// ---------------------------------------------------------------------------

/// Harmonic mapping `f = h + conj(g)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicMap<A = AnalyticSeries> {
    pub h_part: A,
    pub g_part: A,
}

impl<A: Analytic> HarmonicMap<A> {
    pub fn new(h_part: A, g_part: A) -> Self {
        Self { h_part, g_part }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.h_part.value(z) + self.g_part.value(z).conj()
    }

    /// `(f_z, f_zbar) = (h'(z), conj(g'(z)))`.
    pub fn wirtinger(&self, z: Complex64) -> (Complex64, Complex64) {
        (self.h_part.derivative(z), self.g_part.derivative(z).conj())
    }

    /// `|h(z)| + |g(z)|`, the quantity bounded in the sum-modulus hypothesis.
    pub fn sum_modulus(&self, z: Complex64) -> f64 {
        self.h_part.value(z).norm() + self.g_part.value(z).norm()
    }

    /// Exchange the analytic and co-analytic parts.
    pub fn swapped(self) -> Self {
        Self {
            h_part: self.g_part,
            g_part: self.h_part,
        }
    }
}

impl HarmonicMap<AnalyticSeries> {
    pub fn analytic(h: AnalyticSeries) -> Self {
        Self::new(h, AnalyticSeries::zero())
    }

    pub fn zero() -> Self {
        Self::new(AnalyticSeries::zero(), AnalyticSeries::zero())
    }
}

impl<A: Analytic> PlanarMap for HarmonicMap<A> {
    fn eval(&self, z: Complex64) -> Complex64 {
        HarmonicMap::eval(self, z)
    }

    fn wirtinger(&self, z: Complex64) -> (Complex64, Complex64) {
        HarmonicMap::wirtinger(self, z)
    }
}

/// Biharmonic mapping `F = |z|^2 g + h` with `g`, `h` harmonic.
#[derive(Debug, Clone, PartialEq)]
pub struct BiharmonicMap<A = AnalyticSeries> {
    pub g_map: HarmonicMap<A>,
    pub h_map: HarmonicMap<A>,
}

impl<A: Analytic> BiharmonicMap<A> {
    pub fn new(g_map: HarmonicMap<A>, h_map: HarmonicMap<A>) -> Self {
        Self { g_map, h_map }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.g_map.eval(z) * z.norm_sqr() + self.h_map.eval(z)
    }

    /// `F_z = zbar g + |z|^2 g_1' + h_1'` and
    /// `F_zbar = z g + |z|^2 conj(g_2') + conj(h_2')`.
    pub fn wirtinger(&self, z: Complex64) -> (Complex64, Complex64) {
        let g = self.g_map.eval(z);
        let (gz, gzbar) = self.g_map.wirtinger(z);
        let (hz, hzbar) = self.h_map.wirtinger(z);
        let r2 = z.norm_sqr();
        (z.conj() * g + gz * r2 + hz, z * g + gzbar * r2 + hzbar)
    }
}

impl<A: Analytic> PlanarMap for BiharmonicMap<A> {
    fn eval(&self, z: Complex64) -> Complex64 {
        BiharmonicMap::eval(self, z)
    }

    fn wirtinger(&self, z: Complex64) -> (Complex64, Complex64) {
        BiharmonicMap::wirtinger(self, z)
    }
}

// ---------------------------------------------------------------------------
// Distortion
// ---------------------------------------------------------------------------

/// Minimum stretch `lambda = ||f_z| - |f_zbar||`, maximum stretch
/// `big_lambda = |f_z| + |f_zbar|` and Jacobian `|f_z|^2 - |f_zbar|^2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DistortionTriple {
    pub lambda: f64,
    pub big_lambda: f64,
    pub jacobian: f64,
}

impl DistortionTriple {
    /// The Jacobian is formed as `(|f_z| + |f_zbar|)(|f_z| - |f_zbar|)`, which
    /// avoids cancellation when the two moduli are close.
    pub fn from_wirtinger(fz: Complex64, fzbar: Complex64) -> Self {
        let a = fz.norm();
        let b = fzbar.norm();
        Self {
            lambda: (a - b).abs(),
            big_lambda: a + b,
            jacobian: (a + b) * (a - b),
        }
    }

    pub fn is_sense_preserving(&self) -> bool {
        self.jacobian > 0.0
    }
}

/// Free-function form of [`DistortionTriple::from_wirtinger`].
pub fn local_distortion(fz: Complex64, fzbar: Complex64) -> DistortionTriple {
    DistortionTriple::from_wirtinger(fz, fzbar)
}

/// Wirtinger derivatives from central differences in the real coordinates:
/// `f_z = (f_x - i f_y) / 2`, `f_zbar = (f_x + i f_y) / 2`.
pub fn central_difference_wirtinger<F>(f: F, z: Complex64, step: f64) -> (Complex64, Complex64)
where
    F: Fn(Complex64) -> Complex64,
{
    let dx = Complex64::new(step, 0.0);
    let dy = Complex64::new(0.0, step);
    let fx = (f(z + dx) - f(z - dx)) / (2.0 * step);
    let fy = (f(z + dy) - f(z - dy)) / (2.0 * step);
    let i = Complex64::i();
    ((fx - i * fy) * 0.5, (fx + i * fy) * 0.5)
}
