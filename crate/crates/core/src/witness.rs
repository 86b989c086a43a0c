//! Witness polynomials for the classes of polynomials with at most two real
//! roots and for hyperbolic sign patterns, each verified exactly before it is
//! returned.
//!
//! The two-root families pin their real roots at prescribed rationals, so the
//! roots can be checked by exact evaluation as well as by Sturm counting.

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{int, pow, rat, rational_str, DensePoly, Polynomial, Rational, Sign, SignPattern};
use crate::root_count::{compatible, hyperbolic_counts, root_profile, RootProfile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    Elliptic,
    OneRoot,
    /// Two simple real roots. With `sigma_0 = +` the flag picks `(2, 0)` when
    /// true and `(0, 2)` when false; with `sigma_0 = -` it is ignored and the
    /// profile is `(1, 1)`.
    TwoRoots { pos2: bool },
    Hyperbolic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EmptyCase {
    Case1,
    Case2,
}

/// Where the roots `-eta < 0 < xi` of a `(1, 1)` witness sit:
/// `K` is `xi > eta`, `L` is `xi < eta`, `M` is `xi = eta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    K,
    L,
    M,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessRequest {
    pub sigma: SignPattern,
    pub target: Target,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub poly: Polynomial,
    pub profile: RootProfile,
    /// Real roots fixed by the construction (checked by exact evaluation).
    #[serde(with = "rational_str::vec")]
    pub pinned_roots: Vec<Rational>,
    pub construction: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub side: Option<Side>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum WitnessResult {
    Witness(Witness),
    Empty { case: EmptyCase },
}

impl WitnessResult {
    pub fn witness(&self) -> Option<&Witness> {
        match self {
            WitnessResult::Witness(w) => Some(w),
            WitnessResult::Empty { .. } => None,
        }
    }

    pub fn empty_case(&self) -> Option<EmptyCase> {
        match self {
            WitnessResult::Empty { case } => Some(*case),
            WitnessResult::Witness(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessConfig {
    /// Halvings of the perturbation scale before giving up.
    pub max_halvings: u32,
    /// Magnitude of the free coefficients of the perturbation polynomials.
    pub free_magnitude: Rational,
    pub seed: u64,
}

impl Default for WitnessConfig {
    fn default() -> Self {
        WitnessConfig { max_halvings: 64, free_magnitude: Rational::one(), seed: 0 }
    }
}

fn default_param() -> Rational {
    rat(1, 2)
}

// ---------------------------------------------------------------------------
// Checks shared by all constructions
// ---------------------------------------------------------------------------

fn require_even(sigma: &SignPattern, what: &str) -> Result<()> {
    if sigma.degree() % 2 == 1 {
        return Err(Error::invalid(format!("{what} needs even degree, got {}", sigma.degree())));
    }
    Ok(())
}

fn require_unit_interval(x: &Rational, name: &str) -> Result<()> {
    if !x.is_positive() || *x >= Rational::one() {
        return Err(Error::invalid(format!("{name} = {x} must lie in (0, 1)")));
    }
    Ok(())
}

fn require_odd_index(d: usize, m: usize) -> Result<()> {
    if m.is_multiple_of(2) || m >= d {
        return Err(Error::invalid(format!("m = {m} must be odd with 1 <= m <= {}", d.saturating_sub(1))));
    }
    Ok(())
}

/// Describes why `poly` is not a valid witness, or `None` if it is.
fn witness_defect(
    poly: &Polynomial,
    sigma: &SignPattern,
    pos: usize,
    neg: usize,
    pinned: &[Rational],
) -> Option<String> {
    match poly.sign_pattern() {
        Ok(s) if &s == sigma => {}
        Ok(s) => return Some(format!("sign pattern {s} differs from {sigma}")),
        Err(e) => return Some(e.to_string()),
    }
    for r in pinned {
        if !poly.evaluate(r).is_zero() {
            return Some(format!("pinned root {r} does not vanish"));
        }
    }
    let prof = root_profile(poly);
    if prof.pos != pos || prof.neg != neg || prof.zero || !prof.all_simple {
        return Some(format!(
            "profile pos={} neg={} zero={} simple={} (wanted pos={pos} neg={neg}, simple)",
            prof.pos, prof.neg, prof.zero, prof.all_simple
        ));
    }
    None
}

fn accept(
    poly: Polynomial,
    sigma: &SignPattern,
    pos: usize,
    neg: usize,
    pinned: Vec<Rational>,
    construction: String,
    side: Option<Side>,
) -> std::result::Result<Witness, String> {
    match witness_defect(&poly, sigma, pos, neg, &pinned) {
        Some(why) => Err(why),
        None => {
            let profile = root_profile(&poly);
            Ok(Witness { poly, profile, pinned_roots: pinned, construction, side })
        }
    }
}

fn with_constant(sigma: &SignPattern, a0: Rational) -> Polynomial {
    let mut lower = vec![a0];
    lower.extend(sigma.signs()[1..].iter().map(|s| s.apply(Rational::one())));
    Polynomial::monic_from_lower(lower).expect("degree >= 1")
}

// ---------------------------------------------------------------------------
// Elliptic and one-root witnesses
// ---------------------------------------------------------------------------

const MAX_DOUBLINGS: u32 = 256;

/// `x^d + sum_{j>=1} sigma_j x^j + C` with the first `C` in `1, 2, 4, ...`
/// leaving no real root.
pub fn elliptic_witness(sigma: &SignPattern) -> Result<WitnessResult> {
    require_even(sigma, "an elliptic witness")?;
    if sigma.get(0) == Sign::Minus {
        return Err(Error::invalid("an elliptic polynomial has a positive constant term"));
    }
    let mut c = Rational::one();
    let mut last = String::new();
    for _ in 0..MAX_DOUBLINGS {
        let poly = with_constant(sigma, c.clone());
        match accept(poly, sigma, 0, 0, vec![], format!("constant C={c}"), None) {
            Ok(w) => return Ok(WitnessResult::Witness(w)),
            Err(why) => last = why,
        }
        c *= int(2);
    }
    Err(Error::ConstructionFailure(format!("elliptic search exhausted: {last}")))
}

/// `x^d + sum_{j>=1} sigma_j x^j + sigma_0 C` with the first `C` in
/// `1, 2, 4, ...` leaving exactly one real root; its sign is `-sigma_0`.
pub fn one_root_witness(sigma: &SignPattern) -> Result<WitnessResult> {
    let d = sigma.degree();
    if d.is_multiple_of(2) {
        return Err(Error::invalid(format!("a one-root witness needs odd degree, got {d}")));
    }
    let (pos, neg) = match sigma.get(0) {
        Sign::Plus => (0, 1),
        Sign::Minus => (1, 0),
    };
    let mut c = Rational::one();
    let mut last = String::new();
    for _ in 0..MAX_DOUBLINGS {
        let poly = with_constant(sigma, sigma.get(0).apply(c.clone()));
        match accept(poly, sigma, pos, neg, vec![], format!("constant C={c}"), None) {
            Ok(w) => return Ok(WitnessResult::Witness(w)),
            Err(why) => last = why,
        }
        c *= int(2);
    }
    Err(Error::ConstructionFailure(format!("one-root search exhausted: {last}")))
}

// ---------------------------------------------------------------------------
// Two positive roots: R + eps * Psi
// ---------------------------------------------------------------------------

/// The coefficients `(A, B)` and `R = x^d - A x^m + B`, which vanishes at
/// `xi` and at 1.
pub fn construct_r(d: usize, m: usize, xi: &Rational) -> Result<(Rational, Rational, Polynomial)> {
    if d % 2 == 1 || d < 2 {
        return Err(Error::invalid(format!("R needs even degree, got {d}")));
    }
    require_odd_index(d, m)?;
    require_unit_interval(xi, "xi")?;
    let one = Rational::one();
    let xm = pow(xi, m as i64);
    let a = (&one - pow(xi, d as i64)) / (&one - &xm);
    let b = &a - &one;
    let mut lower = vec![Rational::zero(); d];
    lower[0] = b.clone();
    lower[m] = -a.clone();
    Ok((a, b, Polynomial::monic_from_lower(lower)?))
}

/// Free coefficients `sigma_j * magnitude` for `j` in `1..d` except `m`.
fn free_coefficients(sigma: &SignPattern, m: usize, magnitude: &Rational) -> Vec<Rational> {
    let d = sigma.degree();
    (0..d)
        .map(|j| if j == 0 || j == m { Rational::zero() } else { sigma.get(j).apply(magnitude.clone()) })
        .collect()
}

/// `Psi` of degree `< d` with the free coefficients from `sigma` (or the
/// given values) and `psi_0`, `psi_m` solved so that `Psi(xi) = Psi(1) = 0`.
pub fn construct_psi(
    sigma: &SignPattern,
    m: usize,
    xi: &Rational,
    free: Option<&[Rational]>,
) -> Result<DensePoly> {
    let d = sigma.degree();
    require_odd_index(d, m)?;
    require_unit_interval(xi, "xi")?;
    let mut psi = match free {
        Some(f) if f.len() == d => f.to_vec(),
        Some(f) => return Err(Error::invalid(format!("expected {d} free coefficient slots, got {}", f.len()))),
        None => free_coefficients(sigma, m, &Rational::one()),
    };
    psi[0] = Rational::zero();
    psi[m] = Rational::zero();
    let partial = DensePoly::new(psi.clone());
    let u = -partial.eval(xi);
    let v = -partial.eval(&Rational::one());
    let xm = pow(xi, m as i64);
    let den = Rational::one() - &xm;
    psi[0] = (&u - &xm * &v) / &den;
    psi[m] = (&v - &u) / &den;
    Ok(DensePoly::new(psi))
}

/// Constant term positive, every odd-degree coefficient positive and some
/// even-degree coefficient negative.
pub fn is_case1(sigma: &SignPattern) -> bool {
    let s = sigma.signs();
    sigma.degree().is_multiple_of(2)
        && s[0] == Sign::Plus
        && s.iter().skip(1).step_by(2).all(|&x| x == Sign::Plus)
        && s.iter().step_by(2).any(|&x| x == Sign::Minus)
}

/// Constant term positive, every odd-degree coefficient negative and some
/// even-degree coefficient negative.
pub fn is_case2(sigma: &SignPattern) -> bool {
    let s = sigma.signs();
    sigma.degree().is_multiple_of(2)
        && s[0] == Sign::Plus
        && s.iter().skip(1).step_by(2).all(|&x| x == Sign::Minus)
        && s.iter().step_by(2).any(|&x| x == Sign::Minus)
}

fn check_two_root_request(sigma: &SignPattern, pos: usize, neg: usize) -> Result<()> {
    if !compatible(sigma, pos, neg)? {
        return Err(Error::invalid(format!(
            "profile ({pos},{neg}) is excluded by Descartes' rule for {sigma}"
        )));
    }
    Ok(())
}

/// Witness with exactly two positive simple roots `{xi, 1}`, or `Empty(Case1)`.
pub fn g20_witness(sigma: &SignPattern, xi: &Rational) -> Result<WitnessResult> {
    g20_witness_with(sigma, xi, &WitnessConfig::default())
}

pub fn g20_witness_with(sigma: &SignPattern, xi: &Rational, cfg: &WitnessConfig) -> Result<WitnessResult> {
    require_even(sigma, "g20")?;
    if sigma.get(0) == Sign::Minus {
        return Err(Error::invalid("two positive roots need a positive constant term"));
    }
    require_unit_interval(xi, "xi")?;
    if is_case1(sigma) {
        return Ok(WitnessResult::Empty { case: EmptyCase::Case1 });
    }
    check_two_root_request(sigma, 2, 0)?;
    let d = sigma.degree();
    let m = (1..d).step_by(2).find(|&j| sigma.get(j) == Sign::Minus).expect("not Case 1 and compatible");
    let (_, _, r) = construct_r(d, m, xi)?;
    let free = free_coefficients(sigma, m, &cfg.free_magnitude);
    let psi = construct_psi(sigma, m, xi, Some(&free))?;
    let base = pow(xi, m as i64 + 1) * pow(&(Rational::one() - xi), 3);
    let pinned = vec![xi.clone(), Rational::one()];
    let mut c = Rational::one();
    let mut last = String::new();
    for _ in 0..=cfg.max_halvings {
        let eps = &c * &base;
        let poly = Polynomial::from_dense(&(&r.to_dense() + &psi.scale(&eps)))?;
        let label = format!("R+eps*Psi m={m} c={c}");
        match accept(poly, sigma, 2, 0, pinned.clone(), label, None) {
            Ok(w) => return Ok(WitnessResult::Witness(w)),
            Err(why) => last = why,
        }
        c /= int(2);
    }
    Err(Error::ConstructionFailure(format!("halving exhausted for {sigma} at xi={xi}: {last}")))
}

fn reflect_witness(w: Witness) -> Witness {
    let poly = w.poly.reflect();
    let profile = root_profile(&poly);
    let pinned_roots = w.pinned_roots.iter().map(|r| -r).collect();
    let side = w.side.map(|s| match s {
        Side::K => Side::L,
        Side::L => Side::K,
        Side::M => Side::M,
    });
    Witness { poly, profile, pinned_roots, construction: format!("reflect({})", w.construction), side }
}

/// Witness with exactly two negative simple roots `{-eta, -1}`, or `Empty(Case2)`.
pub fn g02_witness(sigma: &SignPattern, eta: &Rational) -> Result<WitnessResult> {
    g02_witness_with(sigma, eta, &WitnessConfig::default())
}

pub fn g02_witness_with(sigma: &SignPattern, eta: &Rational, cfg: &WitnessConfig) -> Result<WitnessResult> {
    require_even(sigma, "g02")?;
    if sigma.get(0) == Sign::Minus {
        return Err(Error::invalid("two negative roots need a positive constant term"));
    }
    let reflected = sigma.reflect();
    Ok(match g20_witness_with(&reflected, eta, cfg)? {
        WitnessResult::Empty { .. } => WitnessResult::Empty { case: EmptyCase::Case2 },
        WitnessResult::Witness(w) => {
            let w = reflect_witness(w);
            if let Some(why) = witness_defect(&w.poly, sigma, 0, 2, &w.pinned_roots) {
                return Err(Error::ConstructionFailure(format!("reflected witness invalid: {why}")));
            }
            WitnessResult::Witness(w)
        }
    })
}

// ---------------------------------------------------------------------------
// Roots of opposite signs: S + eps1 * Phi, its reflection, and Q-diamond
// ---------------------------------------------------------------------------

/// The coefficients `(A~, B~)` and `S = x^d - A~ x^m - B~`, which vanishes at
/// 1 and at `-eta`.
pub fn construct_s(d: usize, m: usize, eta: &Rational) -> Result<(Rational, Rational, Polynomial)> {
    if d % 2 == 1 || d < 2 {
        return Err(Error::invalid(format!("S needs even degree, got {d}")));
    }
    require_odd_index(d, m)?;
    require_unit_interval(eta, "eta")?;
    let one = Rational::one();
    let em = pow(eta, m as i64);
    let a = (&one - pow(eta, d as i64)) / (&one + &em);
    let b = &em * (&one + pow(eta, (d - m) as i64)) / (&one + &em);
    let mut lower = vec![Rational::zero(); d];
    lower[0] = -b.clone();
    lower[m] = -a.clone();
    Ok((a, b, Polynomial::monic_from_lower(lower)?))
}

/// `Phi` of degree `< d` with the free coefficients from `sigma` (or the
/// given values) and `phi_0`, `phi_m` solved so that `Phi(-eta) = Phi(1) = 0`.
pub fn construct_phi(
    sigma: &SignPattern,
    m: usize,
    eta: &Rational,
    free: Option<&[Rational]>,
) -> Result<DensePoly> {
    let d = sigma.degree();
    require_odd_index(d, m)?;
    require_unit_interval(eta, "eta")?;
    let mut phi = match free {
        Some(f) if f.len() == d => f.to_vec(),
        Some(f) => return Err(Error::invalid(format!("expected {d} free coefficient slots, got {}", f.len()))),
        None => free_coefficients(sigma, m, &Rational::one()),
    };
    phi[0] = Rational::zero();
    phi[m] = Rational::zero();
    let partial = DensePoly::new(phi.clone());
    let w = -partial.eval(&-eta.clone());
    let t = -partial.eval(&Rational::one());
    let em = pow(eta, m as i64);
    let den = Rational::one() + &em;
    phi[0] = (&em * &t + &w) / &den;
    phi[m] = (&t - &w) / &den;
    Ok(DensePoly::new(phi))
}

fn k_witness(sigma: &SignPattern, eta: &Rational, cfg: &WitnessConfig) -> Result<Witness> {
    let d = sigma.degree();
    let m = (1..d)
        .step_by(2)
        .find(|&j| sigma.get(j) == Sign::Minus)
        .ok_or_else(|| Error::invalid(format!("side K is empty for {sigma}: no negative odd-degree coefficient")))?;
    let (_, _, s) = construct_s(d, m, eta)?;
    let free = free_coefficients(sigma, m, &cfg.free_magnitude);
    let phi = construct_phi(sigma, m, eta, Some(&free))?;
    let base = pow(eta, m as i64) * pow(&(Rational::one() - eta), 2);
    let pinned = vec![-eta.clone(), Rational::one()];
    let mut c = Rational::one();
    let mut last = String::new();
    for _ in 0..=cfg.max_halvings {
        let eps = &c * &base;
        let poly = Polynomial::from_dense(&(&s.to_dense() + &phi.scale(&eps)))?;
        match accept(poly, sigma, 1, 1, pinned.clone(), format!("S+eps1*Phi m={m} c={c}"), Some(Side::K)) {
            Ok(w) => return Ok(w),
            Err(why) => last = why,
        }
        c /= int(2);
    }
    Err(Error::ConstructionFailure(format!("halving exhausted for {sigma} at eta={eta}: {last}")))
}

/// Base points tried for the symmetric construction before dilating back.
const DIAMOND_BASES: [i64; 6] = [2, 4, 8, 16, 32, 64];

/// `x^d - xi^d + s (x^{j1} - u x^{j2}) + eps (Q_o + Q_e)` with `s = sigma_{j1}`,
/// `u = xi^{j1 - j2}` and `Q_o`, `Q_e` the odd and even parts vanishing at `+-xi`.
fn diamond(sigma: &SignPattern, j1: usize, j2: usize, xi: &Rational, eps: &Rational) -> Result<Polynomial> {
    let d = sigma.degree();
    let s = sigma.get(j1);
    let u = pow(xi, j1 as i64 - j2 as i64);
    let mut c = vec![Rational::zero(); d + 1];
    c[d] = Rational::one();
    c[0] = -pow(xi, d as i64);
    c[j1] += s.apply(Rational::one());
    c[j2] -= s.apply(u);
    // even part: b + sum sigma_{2j} x^{2j}, 1 <= j < d/2
    let mut b = Rational::zero();
    for j in (2..d).step_by(2) {
        let sj = sigma.get(j).apply(Rational::one());
        b -= &sj * pow(xi, j as i64);
        c[j] += eps * &sj;
    }
    c[0] += eps * &b;
    // odd part: r x^{j1} + sum sigma_{2j+1} x^{2j+1}
    let mut odd_at_xi = Rational::zero();
    for j in (1..d).step_by(2) {
        let sj = sigma.get(j).apply(Rational::one());
        odd_at_xi += &sj * pow(xi, j as i64);
        c[j] += eps * &sj;
    }
    let r = -odd_at_xi / pow(xi, j1 as i64);
    c[j1] += eps * &r;
    Polynomial::new(c)
}

fn m_witness(sigma: &SignPattern, xi: &Rational, cfg: &WitnessConfig) -> Result<Witness> {
    let d = sigma.degree();
    let odd: Vec<usize> = (1..d).step_by(2).collect();
    let mut pairs = Vec::new();
    for &a in &odd {
        for &b in &odd {
            if a != b && sigma.get(a) != sigma.get(b) {
                pairs.push((a, b));
            }
        }
    }
    if pairs.is_empty() {
        return Err(Error::invalid(format!("side M is empty for {sigma}: odd-degree signs are not mixed")));
    }
    let mut last = String::new();
    for base in DIAMOND_BASES {
        let star = int(base);
        let u = xi / &star;
        for &(j1, j2) in &pairs {
            let mut eps = Rational::one();
            for _ in 0..=cfg.max_halvings.min(40) {
                let at_base = diamond(sigma, j1, j2, &star, &eps)?;
                let poly = at_base.quasi_homogeneous(&u)?;
                let label = format!("Q-diamond j1={j1} j2={j2} base={base} eps={eps}");
                match accept(poly, sigma, 1, 1, vec![-xi.clone(), xi.clone()], label, Some(Side::M)) {
                    Ok(w) => return Ok(w),
                    Err(why) => last = why,
                }
                eps /= int(2);
            }
        }
    }
    Err(Error::ConstructionFailure(format!("Q-diamond search exhausted for {sigma}: {last}")))
}

/// The side used by [`g11_witness`]: `K` when `sigma_1 = -`, `L` when every
/// odd-degree sign is `+`, and `M` otherwise.
pub fn default_side(sigma: &SignPattern) -> Side {
    let d = sigma.degree();
    if d >= 2 && sigma.get(1) == Sign::Minus {
        Side::K
    } else if (1..d).step_by(2).all(|j| sigma.get(j) == Sign::Plus) {
        Side::L
    } else {
        Side::M
    }
}

/// Witness with one positive and one negative simple root, `sigma_0 = -`.
pub fn g11_witness(sigma: &SignPattern, param: &Rational) -> Result<WitnessResult> {
    require_even(sigma, "g11")?;
    g11_witness_on(sigma, param, default_side(sigma), &WitnessConfig::default())
}

/// As [`g11_witness`] on an explicit side. Side `K` pins `{-param, 1}`,
/// `L` pins `{param, -1}`, `M` pins `{-param, param}`.
pub fn g11_witness_on(sigma: &SignPattern, param: &Rational, side: Side, cfg: &WitnessConfig) -> Result<WitnessResult> {
    require_even(sigma, "g11")?;
    if sigma.get(0) == Sign::Plus {
        return Err(Error::invalid("roots of opposite signs need a negative constant term"));
    }
    require_unit_interval(param, "param")?;
    let w = match side {
        Side::K => k_witness(sigma, param, cfg)?,
        Side::L => {
            let reflected = sigma.reflect();
            let w = k_witness(&reflected, param, cfg).map_err(|e| match e {
                Error::InvalidInput(_) => {
                    Error::invalid(format!("side L is empty for {sigma}: no positive odd-degree coefficient"))
                }
                other => other,
            })?;
            let w = reflect_witness(w);
            if let Some(why) = witness_defect(&w.poly, sigma, 1, 1, &w.pinned_roots) {
                return Err(Error::ConstructionFailure(format!("reflected witness invalid: {why}")));
            }
            w
        }
        Side::M => m_witness(sigma, param, cfg)?,
    };
    Ok(WitnessResult::Witness(w))
}

// ---------------------------------------------------------------------------
// Hyperbolic witnesses
// ---------------------------------------------------------------------------

/// Root signs by decreasing magnitude so that, when magnitudes are well
/// separated, the expanded coefficients carry `sigma`:
/// `s_k = -sigma_{d-k} sigma_{d-k+1}` with `sigma_d = +`.
pub fn dominant_root_signs(sigma: &SignPattern) -> Vec<Sign> {
    let d = sigma.degree();
    let at = |j: usize| if j == d { Sign::Plus } else { sigma.get(j) };
    (1..=d)
        .map(|k| if at(d - k) == at(d - k + 1) { Sign::Minus } else { Sign::Plus })
        .collect()
}

fn ladder_poly(signs: &[Sign], mags: &[Rational]) -> Polynomial {
    let roots: Vec<Rational> = signs.iter().zip(mags).map(|(s, m)| s.apply(m.clone())).collect();
    Polynomial::from_roots(&roots).expect("non-empty")
}

/// Magnitudes `t^d, t^{d-1}, ..., t`, sorted decreasing.
fn geometric_magnitudes(d: usize, t: &Rational) -> Vec<Rational> {
    let mut mags: Vec<Rational> = (1..=d).map(|i| pow(t, i as i64)).collect();
    mags.sort_by(|a, b| b.cmp(a));
    mags
}

fn hyperbolic_accept(poly: Polynomial, sigma: &SignPattern, label: String) -> Option<Witness> {
    let (pos, neg) = hyperbolic_counts(sigma);
    accept(poly, sigma, pos, neg, vec![], label, None).ok()
}

/// Sign vectors with `pos` pluses, in lexicographic order.
fn sign_placements(d: usize, pos: usize) -> Vec<Vec<Sign>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << d) {
        if mask.count_ones() as usize == pos {
            out.push((0..d).map(|i| if mask >> i & 1 == 1 { Sign::Plus } else { Sign::Minus }).collect());
        }
    }
    out
}

/// A polynomial with `d` distinct nonzero real roots and sign pattern `sigma`.
pub fn hyperbolic_witness(sigma: &SignPattern) -> Result<WitnessResult> {
    let d = sigma.degree();
    let signs = dominant_root_signs(sigma);
    let ladders = [int(2), int(3), int(5), rat(1, 2), rat(1, 3)];
    for t in &ladders {
        let mags = geometric_magnitudes(d, t);
        if let Some(w) = hyperbolic_accept(ladder_poly(&signs, &mags), sigma, format!("root ladder t={t}")) {
            return Ok(WitnessResult::Witness(w));
        }
    }
    let (pos, _) = hyperbolic_counts(sigma);
    for t in &ladders[..2] {
        let mags = geometric_magnitudes(d, t);
        for placement in sign_placements(d, pos) {
            if let Some(w) = hyperbolic_accept(ladder_poly(&placement, &mags), sigma, format!("root ladder t={t} placed")) {
                return Ok(WitnessResult::Witness(w));
            }
        }
    }
    // With ratio t > 2^d the top product dominates every elementary symmetric
    // function, so the dominant signs always work.
    let t = int((1i64 << d) + 1);
    let mags = geometric_magnitudes(d, &t);
    if let Some(w) = hyperbolic_accept(ladder_poly(&signs, &mags), sigma, format!("root ladder t={t}")) {
        return Ok(WitnessResult::Witness(w));
    }
    hyperbolic_witness_seeded(sigma, 0)
}

/// A randomized hyperbolic witness; different seeds give different polynomials.
pub fn hyperbolic_witness_seeded(sigma: &SignPattern, seed: u64) -> Result<WitnessResult> {
    let d = sigma.degree();
    let signs = dominant_root_signs(sigma);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5157_a11e_d00d_0001);
    for attempt in 0..200u32 {
        // Ratio grows with failed attempts so the search cannot stall.
        let lo = 3 + i64::from(attempt / 20) * 2;
        let t = int(lo) + rat(rng.gen_range(0..=192), 64);
        let mut mags = Vec::with_capacity(d);
        let mut m = t.clone();
        for _ in 0..d {
            let jitter = Rational::one() + rat(rng.gen_range(0..=64), 256);
            mags.push(&m * jitter);
            m *= &t;
        }
        mags.sort_by(|a, b| b.cmp(a));
        if let Some(w) =
            hyperbolic_accept(ladder_poly(&signs, &mags), sigma, format!("random ladder seed={seed} attempt={attempt}"))
        {
            return Ok(WitnessResult::Witness(w));
        }
    }
    Err(Error::ConstructionFailure(format!("no hyperbolic witness found for {sigma}")))
}

// ---------------------------------------------------------------------------
// Dispatcher
// ---------------------------------------------------------------------------

pub fn witness(req: &WitnessRequest) -> Result<WitnessResult> {
    witness_with(req, &default_param(), &WitnessConfig::default())
}

/// Dispatches a request; `param` is `xi` or `eta` for the two-root targets.
pub fn witness_with(req: &WitnessRequest, param: &Rational, cfg: &WitnessConfig) -> Result<WitnessResult> {
    let sigma = &req.sigma;
    match req.target {
        Target::Elliptic => elliptic_witness(sigma),
        Target::OneRoot => one_root_witness(sigma),
        Target::TwoRoots { pos2 } => {
            require_even(sigma, "a two-root witness")?;
            match (sigma.get(0), pos2) {
                (Sign::Plus, true) => g20_witness_with(sigma, param, cfg),
                (Sign::Plus, false) => g02_witness_with(sigma, param, cfg),
                (Sign::Minus, _) => g11_witness_on(sigma, param, default_side(sigma), cfg),
            }
        }
        Target::Hyperbolic => {
            if cfg.seed == 0 {
                hyperbolic_witness(sigma)
            } else {
                hyperbolic_witness_seeded(sigma, cfg.seed)
            }
        }
    }
}
