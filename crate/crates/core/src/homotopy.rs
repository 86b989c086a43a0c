//! The retraction `Y_d = (Q + t x Q') / (1 + t d)`, sampled path
//! certificates, and the descent to lower degree that labels components.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::discriminant::in_pi_star;
use crate::error::{Error, Result};
use crate::poly::{int, rational_str, Polynomial, Rational, Sign, SignPattern};
use crate::root_count::distinct_real_dense;

/// Coefficient `j` scaled by `(1 + t j) / (1 + t d)`.
pub fn y_deform(p: &Polynomial, t: &Rational) -> Result<Polynomial> {
    if t.is_negative() {
        return Err(Error::invalid(format!("deformation parameter t = {t} must be >= 0")));
    }
    let d = p.degree();
    let den = Rational::one() + t * int(d as i64);
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, a)| a * (Rational::one() + t * int(j as i64)) / &den)
        .collect();
    Polynomial::new(coeffs)
}

pub const DEFAULT_GRID_POINTS: usize = 50;
pub const DEFAULT_T_MAX: i64 = 1_000_000;

/// `0` followed by `n - 1` log-spaced values from `10^-3` to `t_max`, each
/// rounded to a multiple of `2^-20`; the last value is exactly `t_max`.
pub fn log_grid(n: usize, t_max: i64) -> Vec<Rational> {
    let mut grid = vec![Rational::zero()];
    if n <= 1 {
        return grid;
    }
    let scale = f64::from(1u32 << 20);
    let (lo, hi) = (-3.0f64, (t_max as f64).log10());
    let steps = n - 1;
    for i in 0..steps {
        let t = if i + 1 == steps {
            Rational::from_integer(BigInt::from(t_max))
        } else {
            let e = if steps == 1 { hi } else { lo + (hi - lo) * i as f64 / (steps - 1) as f64 };
            let ticks = (10f64.powf(e) * scale).round().max(1.0);
            Rational::new(BigInt::from(ticks as i64), BigInt::from(1i64 << 20))
        };
        let bumped = match grid.last() {
            Some(prev) if &t <= prev => prev + Rational::new(BigInt::one(), BigInt::from(1i64 << 20)),
            _ => t,
        };
        grid.push(bumped);
    }
    grid
}

pub fn default_grid() -> Vec<Rational> {
    log_grid(DEFAULT_GRID_POINTS, DEFAULT_T_MAX)
}

/// Inserts the midpoint of every consecutive pair.
pub fn refine_grid(grid: &[Rational]) -> Vec<Rational> {
    let mut out = Vec::with_capacity(grid.len() * 2);
    for w in grid.windows(2) {
        out.push(w[0].clone());
        out.push((&w[0] + &w[1]) / int(2));
    }
    out.extend(grid.last().cloned());
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sample {
    #[serde(with = "rational_str")]
    pub t: Rational,
    pub poly: Polynomial,
    pub distinct_real: usize,
    pub sigma: SignPattern,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PathKind {
    /// Samples of `Y_d` along a `t` grid.
    Retraction,
    /// A piecewise-linear path between two degree-2 polynomials.
    Base,
    /// Both ends coincide.
    Identity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathCertificate {
    pub kind: PathKind,
    pub degree: usize,
    pub samples: Vec<Sample>,
    pub class_invariant_ok: bool,
    pub endpoint: Polynomial,
    /// Number of grid points in the final pass.
    pub grid_points: usize,
    /// Midpoint refinements performed.
    pub refinements: u32,
}

fn sample(t: Rational, poly: Polynomial) -> Result<Sample> {
    let distinct_real = distinct_real_dense(&poly.to_dense());
    let sigma = poly.sign_pattern()?;
    Ok(Sample { t, poly, distinct_real, sigma })
}

fn check_samples(samples: &[Sample], sigma: &SignPattern, d: usize) -> Result<()> {
    for s in samples {
        if &s.sigma != sigma || s.distinct_real != d {
            return Err(Error::CertificationFailure(format!(
                "sample t={} has pattern {} and {} distinct real roots (expected {} and {d})",
                s.t, s.sigma, s.distinct_real, sigma
            )));
        }
    }
    Ok(())
}

fn require_pi_star(p: &Polynomial) -> Result<SignPattern> {
    if !in_pi_star(p) {
        return Err(Error::invalid(format!(
            "{p} is not in the open set of polynomials with distinct real roots and nonzero coefficients"
        )));
    }
    p.sign_pattern()
}

fn validate_grid(grid: &[Rational]) -> Result<()> {
    if grid.first().is_none_or(|t| !t.is_zero()) {
        return Err(Error::invalid("grid must start at t = 0"));
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::invalid("grid must be strictly increasing"));
    }
    Ok(())
}

/// Samples `Y_d` on `grid` and checks at every sample that the pattern is
/// unchanged and the root count stays `d`.
pub fn certify_retraction(p: &Polynomial, grid: &[Rational]) -> Result<PathCertificate> {
    let sigma = require_pi_star(p)?;
    validate_grid(grid)?;
    let d = p.degree();
    let samples = grid
        .iter()
        .map(|t| y_deform(p, t).and_then(|q| sample(t.clone(), q).map_err(|e| Error::CertificationFailure(e.to_string()))))
        .collect::<Result<Vec<_>>>()?;
    check_samples(&samples, &sigma, d)?;
    let endpoint = samples.last().expect("non-empty grid").poly.clone();
    Ok(PathCertificate {
        kind: PathKind::Retraction,
        degree: d,
        samples,
        class_invariant_ok: true,
        endpoint,
        grid_points: grid.len(),
        refinements: 0,
    })
}

/// Certifies on `grid` and again on `grid` with every midpoint inserted;
/// returns the finer certificate.
pub fn certify_refined(p: &Polynomial, grid: &[Rational]) -> Result<PathCertificate> {
    certify_retraction(p, grid)?;
    let mut cert = certify_retraction(p, &refine_grid(grid))?;
    cert.refinements = 1;
    Ok(cert)
}

/// The normalized derivative `Q'/d`, checked to lie in the lower-degree open
/// set with the first sign removed.
pub fn descend(p: &Polynomial) -> Result<Polynomial> {
    let sigma = require_pi_star(p)?;
    if p.degree() < 3 {
        return Err(Error::invalid("descent needs degree >= 3"));
    }
    let q = p.derivative()?;
    let expected = sigma.without_first().expect("degree >= 3");
    match q.sign_pattern() {
        Ok(s) if s == expected && in_pi_star(&q) => Ok(q),
        Ok(s) => Err(Error::DescentFailure(format!("descent of {p} gave {q} with pattern {s}"))),
        Err(e) => Err(Error::DescentFailure(format!("descent of {p} gave {q}: {e}"))),
    }
}

/// Sign quadrant of `(a_1, a_0)` at degree 2, written in that order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseRegion {
    PlusPlus,
    MinusPlus,
    PlusMinus,
    MinusMinus,
}

impl BaseRegion {
    pub fn from_signs(a1: Sign, a0: Sign) -> BaseRegion {
        match (a1, a0) {
            (Sign::Plus, Sign::Plus) => BaseRegion::PlusPlus,
            (Sign::Minus, Sign::Plus) => BaseRegion::MinusPlus,
            (Sign::Plus, Sign::Minus) => BaseRegion::PlusMinus,
            (Sign::Minus, Sign::Minus) => BaseRegion::MinusMinus,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            BaseRegion::PlusPlus => "++",
            BaseRegion::MinusPlus => "-+",
            BaseRegion::PlusMinus => "+-",
            BaseRegion::MinusMinus => "--",
        }
    }
}

impl fmt::Display for BaseRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for BaseRegion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for BaseRegion {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = String::deserialize(d)?;
        match raw.as_str() {
            "++" => Ok(BaseRegion::PlusPlus),
            "-+" => Ok(BaseRegion::MinusPlus),
            "+-" => Ok(BaseRegion::PlusMinus),
            "--" => Ok(BaseRegion::MinusMinus),
            other => Err(serde::de::Error::custom(format!("unknown base region {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ComponentId {
    /// Patterns from degree `d` down to 2.
    pub sigma_chain: Vec<SignPattern>,
    pub base_region: BaseRegion,
}

/// Strict degree-2 membership: `a_0 < a_1^2 / 4` with both coefficients nonzero.
fn quadratic_in_pi_star(a0: &Rational, a1: &Rational) -> bool {
    !a0.is_zero() && !a1.is_zero() && a0 * int(4) < a1 * a1
}

pub fn component_id(p: &Polynomial) -> Result<ComponentId> {
    let sigma = require_pi_star(p)?;
    if p.degree() < 2 {
        return Err(Error::invalid("component ids need degree >= 2"));
    }
    let mut chain = vec![sigma];
    let mut cur = p.clone();
    while cur.degree() > 2 {
        cur = descend(&cur)?;
        chain.push(cur.sign_pattern()?);
    }
    if !quadratic_in_pi_star(cur.coeff(0), cur.coeff(1)) {
        return Err(Error::DescentFailure(format!("degree-2 endpoint {cur} left the base region")));
    }
    let last = chain.last().expect("non-empty");
    Ok(ComponentId { sigma_chain: chain.clone(), base_region: BaseRegion::from_signs(last.get(1), last.get(0)) })
}

const BASE_SEGMENT_SAMPLES: i64 = 16;

/// Certified path between two quadratics with the same pattern, as straight
/// segments in `(a_1, a_0)`. For `a_0 > 0` the region `0 < a_0 < a_1^2/4` is
/// not convex, so the path detours through the larger `|a_1|`.
pub fn base_path(p: &Polynomial, q: &Polynomial) -> Result<PathCertificate> {
    let sigma = require_pi_star(p)?;
    if require_pi_star(q)? != sigma || p.degree() != 2 || q.degree() != 2 {
        return Err(Error::invalid("base paths join two quadratics with the same pattern"));
    }
    let (p0, p1) = (p.coeff(0).clone(), p.coeff(1).clone());
    let (q0, q1) = (q.coeff(0).clone(), q.coeff(1).clone());
    let corners: Vec<(Rational, Rational)> = if sigma.get(0) == Sign::Minus {
        vec![(p1, p0), (q1, q0)]
    } else {
        let far = if sigma.get(1) == Sign::Plus { p1.clone().max(q1.clone()) } else { p1.clone().min(q1.clone()) };
        vec![(p1, p0.clone()), (far.clone(), p0), (far, q0.clone()), (q1, q0)]
    };
    let mut samples = Vec::new();
    for (seg, w) in corners.windows(2).enumerate() {
        let ((a1s, a0s), (a1e, a0e)) = (&w[0], &w[1]);
        let first = if seg == 0 { 0 } else { 1 };
        for k in first..=BASE_SEGMENT_SAMPLES {
            let s = Rational::new(BigInt::from(k), BigInt::from(BASE_SEGMENT_SAMPLES));
            let a1 = a1s + (a1e - a1s) * &s;
            let a0 = a0s + (a0e - a0s) * &s;
            let poly = Polynomial::new(vec![a0, a1, Rational::one()])?;
            let t = int(seg as i64) + s;
            samples.push(sample(t, poly).map_err(|e| Error::CertificationFailure(e.to_string()))?);
        }
    }
    check_samples(&samples, &sigma, 2)?;
    let endpoint = samples.last().expect("non-empty").poly.clone();
    let grid_points = samples.len();
    Ok(PathCertificate {
        kind: PathKind::Base,
        degree: 2,
        samples,
        class_invariant_ok: true,
        endpoint,
        grid_points,
        refinements: 0,
    })
}

/// Options for [`connect_with`].
#[derive(Clone, Debug)]
pub struct ConnectConfig {
    pub grid: Vec<Rational>,
    pub refine: bool,
}

impl Default for ConnectConfig {
    fn default() -> Self {
        ConnectConfig { grid: default_grid(), refine: false }
    }
}

pub fn connect(p: &Polynomial, q: &Polynomial) -> Result<Vec<PathCertificate>> {
    connect_with(p, q, &ConnectConfig::default())
}

/// Retraction certificates for `p` and `q` at every degree from `d` down to
/// 3, then a base path between the degree-2 descendants.
pub fn connect_with(p: &Polynomial, q: &Polynomial, cfg: &ConnectConfig) -> Result<Vec<PathCertificate>> {
    let sp = require_pi_star(p)?;
    let sq = require_pi_star(q)?;
    if sp != sq {
        return Err(Error::invalid(format!("patterns differ: {sp} vs {sq}")));
    }
    if p.degree() < 2 {
        return Err(Error::invalid("connect needs degree >= 2"));
    }
    if p == q {
        let s = sample(Rational::zero(), p.clone())?;
        return Ok(vec![PathCertificate {
            kind: PathKind::Identity,
            degree: p.degree(),
            samples: vec![s],
            class_invariant_ok: true,
            endpoint: p.clone(),
            grid_points: 1,
            refinements: 0,
        }]);
    }
    let certify = |x: &Polynomial| {
        if cfg.refine {
            certify_refined(x, &cfg.grid)
        } else {
            certify_retraction(x, &cfg.grid)
        }
    };
    let mut out = Vec::new();
    let (mut a, mut b) = (p.clone(), q.clone());
    while a.degree() > 2 {
        out.push(certify(&a)?);
        out.push(certify(&b)?);
        a = descend(&a)?;
        b = descend(&b)?;
    }
    out.push(base_path(&a, &b)?);
    Ok(out)
}
