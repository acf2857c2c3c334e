//! Named extremal and test mappings, each checked against its own hypothesis
//! when constructed.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::bounds::{audit_bounds, AuditMode, BoundsAudit};
use crate::error::{Error, Result};
use crate::maps::{Analytic, AnalyticSeries, BiharmonicMap, HarmonicMap, PlanarMap};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Slack allowed when checking a bound or normalization numerically.
pub const HYPOTHESIS_TOL: f64 = 1e-10;

/// Closed-form analytic building blocks of the corpus.
#[derive(Debug, Clone, PartialEq)]
pub enum Kernel {
    Zero,
    Series(AnalyticSeries),
    /// `M z (a - M z^(n-1)) / (M - a z^(n-1))`; `a = 1, n = 2` is the classical
    /// Landau extremal `M z (1 - M z) / (M - z)`.
    Extremal {
        m: f64,
        a: f64,
        n: u32,
    },
    /// `-(i M / pi) log((1 + z^p) / (1 - z^p))`, the analytic half of the
    /// bounded real map `Im{(2M/pi) log((1 + z^p)/(1 - z^p))}`.
    StripLog {
        m: f64,
        power: u32,
    },
}

impl Kernel {
    /// Power-series expansion truncated at `order`.
    pub fn series(&self, order: usize) -> Result<AnalyticSeries> {
        match *self {
            Kernel::Zero => Ok(AnalyticSeries::zero().truncate(order)),
            Kernel::Series(ref s) => Ok(s.truncate(order)),
            Kernel::Extremal { m, a, n } => {
                let k = (n - 1) as usize;
                let mut num = vec![ZERO; k + 2];
                num[1] += Complex64::new(m * a, 0.0);
                num[k + 1] += Complex64::new(-m * m, 0.0);
                let mut den = vec![ZERO; k + 1];
                den[0] = Complex64::new(m, 0.0);
                den[k] += Complex64::new(-a, 0.0);
                AnalyticSeries::rational(&num, &den, order)
            }
            Kernel::StripLog { m, power } => {
                let p = power as usize;
                let lead = Complex64::new(0.0, -2.0 * m / PI);
                let coeffs = (0..=order)
                    .map(|k| {
                        if k % p == 0 && (k / p) % 2 == 1 {
                            lead / (k / p) as f64
                        } else {
                            ZERO
                        }
                    })
                    .collect();
                Ok(AnalyticSeries::new(coeffs))
            }
        }
    }
}

impl Analytic for Kernel {
    fn value(&self, z: Complex64) -> Complex64 {
        match *self {
            Kernel::Zero => ZERO,
            Kernel::Series(ref s) => s.eval(z),
            Kernel::Extremal { m, a, n } => {
                if a == m {
                    return z * m;
                }
                let w = z.powu(n - 1);
                z * m * (Complex64::new(a, 0.0) - w * m) / (Complex64::new(m, 0.0) - w * a)
            }
            Kernel::StripLog { m, power } => {
                let u = z.powu(power);
                let log_ratio = (ONE + u).ln() - (ONE - u).ln();
                Complex64::new(0.0, -m / PI) * log_ratio
            }
        }
    }

    fn derivative(&self, z: Complex64) -> Complex64 {
        match *self {
            Kernel::Zero => ZERO,
            Kernel::Series(ref s) => s.eval_derivative(z),
            Kernel::Extremal { m, a, n } => {
                if a == m {
                    return Complex64::new(m, 0.0);
                }
                let w = z.powu(n - 1);
                let den = Complex64::new(m, 0.0) - w * a;
                let ratio = (Complex64::new(a, 0.0) - w * m) / den;
                let ratio_prime = Complex64::new(a * a - m * m, 0.0) / (den * den);
                ratio * m + w * ratio_prime * (m * (n - 1) as f64)
            }
            Kernel::StripLog { m, power } => {
                let u = z.powu(power);
                let du = if power == 1 {
                    ONE
                } else {
                    z.powu(power - 1) * power as f64
                };
                Complex64::new(0.0, -2.0 * m / PI) * du / (ONE - u * u)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CorpusName {
    /// `M z (1 - M z) / (M - z)`.
    LandauClassic,
    /// `(2M/pi) arctan(2y / (1 - x^2 - y^2))`.
    Vstrip,
    /// `vstrip(z^m)`.
    VstripM,
    /// `f_{a,n}(z) = M z (a - M z^(n-1)) / (M - a z^(n-1))`.
    FAn,
    /// `conj(f_{a,n}(z))`.
    FAnConj,
    /// `|z|^2 f_{1,2}(z; M)`.
    BiharmonicPure,
    /// `|z|^2 vstrip(z; M1) + f_{1,2}(z; M2)`.
    BiharmonicMixed,
}

impl CorpusName {
    pub const ALL: [CorpusName; 7] = [
        CorpusName::LandauClassic,
        CorpusName::Vstrip,
        CorpusName::VstripM,
        CorpusName::FAn,
        CorpusName::FAnConj,
        CorpusName::BiharmonicPure,
        CorpusName::BiharmonicMixed,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CorpusName::LandauClassic => "landau_classic",
            CorpusName::Vstrip => "vstrip",
            CorpusName::VstripM => "vstrip_m",
            CorpusName::FAn => "f_an",
            CorpusName::FAnConj => "f_an_conj",
            CorpusName::BiharmonicPure => "biharmonic_pure",
            CorpusName::BiharmonicMixed => "biharmonic_mixed",
        }
    }

    pub fn kind(&self) -> CorpusKind {
        match self {
            CorpusName::LandauClassic | CorpusName::FAn => CorpusKind::Analytic,
            CorpusName::Vstrip | CorpusName::VstripM | CorpusName::FAnConj => CorpusKind::Harmonic,
            CorpusName::BiharmonicPure | CorpusName::BiharmonicMixed => CorpusKind::Biharmonic,
        }
    }

    pub fn valid_ids() -> String {
        Self::ALL
            .iter()
            .map(|t| t.as_str())
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for CorpusName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CorpusName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| {
                Error::domain(format!(
                    "unknown corpus map `{s}`; valid identifiers: {}",
                    Self::valid_ids()
                ))
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CorpusKind {
    Analytic,
    Harmonic,
    Biharmonic,
}

/// Parameters of a corpus entry. Unused fields stay `None`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct CorpusParams {
    pub m: Option<f64>,
    pub m1: Option<f64>,
    pub m2: Option<f64>,
    pub a: Option<f64>,
    pub n: Option<u32>,
    /// Power `m` of `vstrip_m`.
    pub power: Option<u32>,
}

impl CorpusParams {
    pub fn with_m(m: f64) -> Self {
        Self {
            m: Some(m),
            ..Self::default()
        }
    }
}

/// Which harmonic piece of an entry an audit looks at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Part {
    /// The harmonic map itself.
    Whole,
    /// `g` of `|z|^2 g + h`.
    G,
    /// `h` of `|z|^2 g + h`.
    H,
}

/// A coefficient bound the entry's map (or one of its parts) is known to satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DeclaredAudit {
    pub part: Part,
    pub mode: AuditMode,
    pub m: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum CorpusMap {
    Harmonic(HarmonicMap<Kernel>),
    Biharmonic(BiharmonicMap<Kernel>),
}

impl PlanarMap for CorpusMap {
    fn eval(&self, z: Complex64) -> Complex64 {
        match self {
            CorpusMap::Harmonic(f) => f.eval(z),
            CorpusMap::Biharmonic(f) => f.eval(z),
        }
    }

    fn wirtinger(&self, z: Complex64) -> (Complex64, Complex64) {
        match self {
            CorpusMap::Harmonic(f) => f.wirtinger(z),
            CorpusMap::Biharmonic(f) => f.wirtinger(z),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusEntry {
    pub name: CorpusName,
    pub kind: CorpusKind,
    pub params: CorpusParams,
    pub map: CorpusMap,
    pub audits: Vec<DeclaredAudit>,
    /// Whether the closed form is defined on the unit circle itself.
    pub bounded_on_circle: bool,
}

impl PlanarMap for CorpusEntry {
    fn eval(&self, z: Complex64) -> Complex64 {
        self.map.eval(z)
    }

    fn wirtinger(&self, z: Complex64) -> (Complex64, Complex64) {
        self.map.wirtinger(z)
    }
}

impl CorpusEntry {
    pub fn component(&self, part: Part) -> Option<&HarmonicMap<Kernel>> {
        match (&self.map, part) {
            (CorpusMap::Harmonic(f), Part::Whole) => Some(f),
            (CorpusMap::Biharmonic(f), Part::G) => Some(&f.g_map),
            (CorpusMap::Biharmonic(f), Part::H) => Some(&f.h_map),
            _ => None,
        }
    }

    /// Short label like `f_an(M=2, a=1, n=3)`.
    pub fn label(&self) -> String {
        let p = &self.params;
        let mut parts = Vec::new();
        let mut push = |k: &str, v: Option<String>| {
            if let Some(v) = v {
                parts.push(format!("{k}={v}"));
            }
        };
        push("M", p.m.map(|v| v.to_string()));
        push("M1", p.m1.map(|v| v.to_string()));
        push("M2", p.m2.map(|v| v.to_string()));
        push("a", p.a.map(|v| v.to_string()));
        push("n", p.n.map(|v| v.to_string()));
        push("m", p.power.map(|v| v.to_string()));
        format!("{}({})", self.name, parts.join(", "))
    }

    /// Run every declared coefficient audit with rows up to `n_max`.
    pub fn run_audits(&self, n_max: usize) -> Result<Vec<BoundsAudit>> {
        self.audits
            .iter()
            .map(|d| {
                let f = self.component(d.part).expect("declared part exists");
                let label = match d.part {
                    Part::Whole => self.label(),
                    Part::G => format!("{}.g", self.label()),
                    Part::H => format!("{}.h", self.label()),
                };
                audit_bounds(&label, |z| f.eval(z), d.m, d.mode, n_max)
            })
            .collect()
    }
}

fn need_m(name: CorpusName, v: Option<f64>, what: &str) -> Result<f64> {
    let m = v.ok_or_else(|| Error::domain(format!("{name} requires parameter {what}")))?;
    if !(m > 0.0 && m.is_finite()) {
        return Err(Error::domain(format!(
            "{name} requires {what} > 0, got {m}"
        )));
    }
    Ok(m)
}

fn need_m_at_least_one(name: CorpusName, v: Option<f64>, what: &str) -> Result<f64> {
    let m = need_m(name, v, what)?;
    if m < 1.0 {
        return Err(Error::domain(format!(
            "{name} requires {what} >= 1 (normalized maps bounded by {what} force {what} >= 1), got {m}"
        )));
    }
    Ok(m)
}

fn analytic(k: Kernel) -> HarmonicMap<Kernel> {
    HarmonicMap::new(k, Kernel::Zero)
}

fn strip(m: f64, power: u32) -> HarmonicMap<Kernel> {
    let k = Kernel::StripLog { m, power };
    HarmonicMap::new(k.clone(), k)
}

/// Build a corpus entry and audit its hypothesis on a 512-point sample.
pub fn corpus(name: CorpusName, params: CorpusParams) -> Result<CorpusEntry> {
    use CorpusName::*;
    let whole = |mode, m| DeclaredAudit {
        part: Part::Whole,
        mode,
        m,
    };
    let (map, audits, bounded_on_circle, params) = match name {
        LandauClassic => {
            let m = need_m_at_least_one(name, params.m, "M")?;
            let map = CorpusMap::Harmonic(analytic(Kernel::Extremal { m, a: 1.0, n: 2 }));
            let audits = vec![
                whole(AuditMode::BoundedModulus, m),
                whole(AuditMode::SumModulus, m),
            ];
            (map, audits, true, CorpusParams::with_m(m))
        }
        Vstrip | VstripM => {
            let m = need_m(name, params.m, "M")?;
            let power = if name == Vstrip {
                1
            } else {
                params.power.unwrap_or(3)
            };
            if power < 1 {
                return Err(Error::domain("vstrip_m requires m >= 1"));
            }
            let map = CorpusMap::Harmonic(strip(m, power));
            let params = CorpusParams {
                m: Some(m),
                power: (name == VstripM).then_some(power),
                ..CorpusParams::default()
            };
            (
                map,
                vec![whole(AuditMode::BoundedModulus, m)],
                false,
                params,
            )
        }
        FAn | FAnConj => {
            let m = need_m(name, params.m, "M")?;
            let a = params.a.unwrap_or(1.0);
            let n = params.n.unwrap_or(2);
            if !(0.0..=m).contains(&a) {
                return Err(Error::domain(format!(
                    "{name} requires 0 <= a <= M, got a = {a}, M = {m}"
                )));
            }
            if n < 2 {
                return Err(Error::domain(format!("{name} requires n >= 2, got {n}")));
            }
            let f = analytic(Kernel::Extremal { m, a, n });
            let f = if name == FAnConj { f.swapped() } else { f };
            let audits = vec![
                whole(AuditMode::BoundedModulus, m),
                whole(AuditMode::SumModulus, m),
            ];
            let params = CorpusParams {
                m: Some(m),
                a: Some(a),
                n: Some(n),
                ..CorpusParams::default()
            };
            (CorpusMap::Harmonic(f), audits, true, params)
        }
        BiharmonicPure => {
            let m = need_m_at_least_one(name, params.m, "M")?;
            let map = CorpusMap::Biharmonic(BiharmonicMap::new(
                analytic(Kernel::Extremal { m, a: 1.0, n: 2 }),
                HarmonicMap::new(Kernel::Zero, Kernel::Zero),
            ));
            let audits = vec![
                DeclaredAudit {
                    part: Part::G,
                    mode: AuditMode::BoundedModulus,
                    m,
                },
                DeclaredAudit {
                    part: Part::G,
                    mode: AuditMode::SumModulus,
                    m,
                },
            ];
            (map, audits, true, CorpusParams::with_m(m))
        }
        BiharmonicMixed => {
            let m1 = need_m(name, params.m1, "M1")?;
            let m2 = need_m_at_least_one(name, params.m2, "M2")?;
            let map = CorpusMap::Biharmonic(BiharmonicMap::new(
                strip(m1, 1),
                analytic(Kernel::Extremal {
                    m: m2,
                    a: 1.0,
                    n: 2,
                }),
            ));
            let audits = vec![
                DeclaredAudit {
                    part: Part::G,
                    mode: AuditMode::BoundedModulus,
                    m: m1,
                },
                DeclaredAudit {
                    part: Part::H,
                    mode: AuditMode::BoundedModulus,
                    m: m2,
                },
                DeclaredAudit {
                    part: Part::H,
                    mode: AuditMode::SumModulus,
                    m: m2,
                },
            ];
            let params = CorpusParams {
                m1: Some(m1),
                m2: Some(m2),
                ..CorpusParams::default()
            };
            (map, audits, false, params)
        }
    };

    let entry = CorpusEntry {
        name,
        kind: name.kind(),
        params,
        map,
        audits,
        bounded_on_circle,
    };
    check_hypotheses(&entry)?;
    Ok(entry)
}

/// 4 rings x 128 angles; the outermost ring is the unit circle when the
/// closed form is defined there.
pub fn hypothesis_sample(on_circle: bool) -> Vec<Complex64> {
    let outer = if on_circle { 1.0 } else { 0.999 };
    [0.5, 0.9, 0.99, outer]
        .iter()
        .flat_map(|&r| {
            (0..128).map(move |k| Complex64::from_polar(r, 2.0 * PI * (k as f64 + 0.5) / 128.0))
        })
        .collect()
}

fn fail(entry: &CorpusEntry, detail: String) -> Error {
    Error::Hypothesis {
        map: entry.label(),
        detail,
    }
}

fn check_hypotheses(entry: &CorpusEntry) -> Result<()> {
    let sample = hypothesis_sample(entry.bounded_on_circle);
    for d in &entry.audits {
        let f = entry.component(d.part).expect("declared part exists");
        let worst = sample
            .iter()
            .map(|&z| match d.mode {
                AuditMode::BoundedModulus => f.eval(z).norm(),
                AuditMode::SumModulus => f.sum_modulus(z),
            })
            .fold(0.0, f64::max);
        if worst > d.m + HYPOTHESIS_TOL {
            return Err(fail(
                entry,
                format!(
                    "{:?} {} bound {} exceeded: max {worst}",
                    d.part,
                    d.mode.as_str(),
                    d.m
                ),
            ));
        }
    }

    let close = |x: f64, want: f64, what: &str| -> Result<()> {
        if (x - want).abs() > HYPOTHESIS_TOL {
            return Err(fail(entry, format!("{what} = {x}, expected {want}")));
        }
        Ok(())
    };

    close(entry.eval(ZERO).norm(), 0.0, "|F(0)|")?;
    match entry.name {
        CorpusName::LandauClassic => {
            let t = entry.distortion(ZERO);
            close(t.jacobian, 1.0, "J_f(0)")?;
            close(t.lambda, 1.0, "lambda_f(0)")?;
        }
        CorpusName::FAn | CorpusName::FAnConj => {
            let t = entry.distortion(ZERO);
            close(t.lambda, entry.params.a.unwrap_or(1.0), "lambda_f(0)")?;
        }
        CorpusName::BiharmonicPure => {
            let g = entry.component(Part::G).unwrap();
            close(g.eval(ZERO).norm(), 0.0, "|g(0)|")?;
            let t = g.distortion(ZERO);
            close(t.lambda, 1.0, "lambda_g(0)")?;
            close(t.jacobian, 1.0, "J_g(0)")?;
        }
        CorpusName::BiharmonicMixed => {
            let h = entry.component(Part::H).unwrap();
            close(h.eval(ZERO).norm(), 0.0, "|h(0)|")?;
            let t = h.distortion(ZERO);
            close(t.lambda, 1.0, "lambda_h(0)")?;
            close(t.jacobian, 1.0, "J_h(0)")?;
        }
        CorpusName::Vstrip | CorpusName::VstripM => {}
    }
    Ok(())
}

/// The fixed set of entries used by the test suites and `corpus-list`.
pub fn standard_corpus() -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for m in [1.0, 1.5, 2.0, 4.0] {
        out.push(corpus(CorpusName::LandauClassic, CorpusParams::with_m(m))?);
    }
    for m in [1.0, 2.0, 5.0] {
        out.push(corpus(CorpusName::Vstrip, CorpusParams::with_m(m))?);
    }
    out.push(corpus(
        CorpusName::VstripM,
        CorpusParams {
            m: Some(2.0),
            power: Some(3),
            ..CorpusParams::default()
        },
    )?);
    for (m, a, n) in [(2.0, 1.0, 3), (1.5, 1.0, 2), (3.0, 0.5, 4)] {
        out.push(corpus(
            CorpusName::FAn,
            CorpusParams {
                m: Some(m),
                a: Some(a),
                n: Some(n),
                ..CorpusParams::default()
            },
        )?);
    }
    out.push(corpus(
        CorpusName::FAnConj,
        CorpusParams {
            m: Some(2.0),
            a: Some(1.0),
            n: Some(3),
            ..CorpusParams::default()
        },
    )?);
    for m in [1.5, 3.0] {
        out.push(corpus(CorpusName::BiharmonicPure, CorpusParams::with_m(m))?);
    }
    out.push(corpus(
        CorpusName::BiharmonicMixed,
        CorpusParams {
            m1: Some(1.0),
            m2: Some(2.0),
            ..CorpusParams::default()
        },
    )?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn f_an_example() {
        let e = corpus(
            CorpusName::FAn,
            CorpusParams {
                m: Some(2.0),
                a: Some(1.0),
                n: Some(3),
                ..CorpusParams::default()
            },
        )
        .unwrap();
        assert!((e.distortion(ZERO).lambda - 1.0).abs() < 1e-15);
        assert_eq!(e.kind, CorpusKind::Analytic);
    }

    #[test]
    fn landau_classic_reduces_to_identity_at_unit_bound() {
        let e = corpus(CorpusName::LandauClassic, CorpusParams::with_m(1.0)).unwrap();
        for z in [c(0.3, 0.4), c(-0.9, 0.1), c(0.0, -0.5)] {
            assert!((e.eval(z) - z).norm() < 1e-15);
        }
    }

    #[test]
    fn vstrip_is_bounded_and_real() {
        let e = corpus(CorpusName::Vstrip, CorpusParams::with_m(2.0)).unwrap();
        let z = c(0.3, 0.5);
        let v = e.eval(z);
        assert!(v.im.abs() < 1e-15);
        let literal = 2.0 * 2.0 / PI * (2.0 * z.im / (1.0 - z.norm_sqr())).atan();
        assert!((v.re - literal).abs() < 1e-14);
        let f = e.component(Part::Whole).unwrap();
        let (a1, b1) = (f.h_part.derivative(ZERO), f.g_part.derivative(ZERO));
        assert!((a1.norm() + b1.norm() - 8.0 / PI).abs() < 1e-14);
    }

    #[test]
    fn invalid_params_are_domain_errors() {
        let bad_a = CorpusParams {
            m: Some(2.0),
            a: Some(3.0),
            n: Some(3),
            ..CorpusParams::default()
        };
        assert!(matches!(
            corpus(CorpusName::FAn, bad_a),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            corpus(CorpusName::LandauClassic, CorpusParams::with_m(0.5)),
            Err(Error::Domain(_))
        ));
        assert!(corpus(CorpusName::BiharmonicMixed, CorpusParams::with_m(2.0)).is_err());
        assert!("nope".parse::<CorpusName>().is_err());
    }

    #[test]
    fn kernel_series_match_closed_forms() {
        let kernels = [
            Kernel::Extremal {
                m: 2.0,
                a: 1.0,
                n: 2,
            },
            Kernel::Extremal {
                m: 1.5,
                a: 1.0,
                n: 3,
            },
            Kernel::Extremal {
                m: 3.0,
                a: 0.5,
                n: 4,
            },
            Kernel::StripLog { m: 2.0, power: 1 },
            Kernel::StripLog { m: 1.0, power: 3 },
        ];
        let z = c(0.3, -0.25);
        for k in &kernels {
            let s = k.series(AnalyticSeries::DEFAULT_ORDER).unwrap();
            assert!((s.eval(z) - k.value(z)).norm() < 1e-12, "{k:?}");
            assert!(
                (s.eval_derivative(z) - k.derivative(z)).norm() < 1e-11,
                "{k:?}"
            );
        }
    }

    #[test]
    fn extremal_coefficient_is_sharp() {
        let s = Kernel::Extremal {
            m: 2.0,
            a: 1.0,
            n: 3,
        }
        .series(16)
        .unwrap();
        assert!((s.coeff(1) - ONE).norm() < 1e-15);
        assert!((s.coeff(3) - c(-1.5, 0.0)).norm() < 1e-15);
        assert!(s.coeff(2).norm() < 1e-15);
    }

    #[test]
    fn f_an_bounded_on_unit_circle() {
        for (m, a, n) in [
            (2.0, 1.0, 3u32),
            (1.5, 1.0, 2),
            (3.0, 0.5, 4),
            (2.0, 1.9, 5),
        ] {
            let k = Kernel::Extremal { m, a, n };
            let worst = (0..1024)
                .map(|j| {
                    k.value(Complex64::from_polar(1.0, 2.0 * PI * j as f64 / 1024.0))
                        .norm()
                })
                .fold(0.0, f64::max);
            assert!(worst <= m + 1e-10, "M = {m}, a = {a}, n = {n}: {worst}");
        }
    }

    #[test]
    fn standard_corpus_builds() {
        let all = standard_corpus().unwrap();
        assert!(all.len() >= 10);
        for e in &all {
            assert!(!e.audits.is_empty(), "{}", e.label());
        }
    }
}
