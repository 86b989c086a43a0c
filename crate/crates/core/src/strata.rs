//! Multiplicity strata of the hyperbolicity domain, their closure order, and
//! the set of admissible constant terms over a fixed coefficient tail.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{int, pow, rat, rational_str, sign_of, DensePoly, Polynomial, Rational, Sign, SignPattern};
use crate::root_count::{all_real_simple_dense, count_roots_dense, is_hyperbolic_dense, weighted_real_count, Bound};

// ---------------------------------------------------------------------------
// Multiplicity vectors
// ---------------------------------------------------------------------------

/// Ordered root multiplicities, largest root first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiplicityVector(Vec<usize>);

impl MultiplicityVector {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::invalid("a multiplicity vector needs positive parts"));
        }
        Ok(MultiplicityVector(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn parse(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = trimmed
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::invalid(format!("bad multiplicity vector {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    /// Vectors obtained by merging one pair of adjacent parts.
    pub fn merges(&self) -> Vec<MultiplicityVector> {
        (0..self.0.len().saturating_sub(1))
            .map(|i| {
                let mut v = self.0[..i].to_vec();
                v.push(self.0[i] + self.0[i + 1]);
                v.extend_from_slice(&self.0[i + 2..]);
                MultiplicityVector(v)
            })
            .collect()
    }
}

impl fmt::Display for MultiplicityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for MultiplicityVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiplicityVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        MultiplicityVector::new(parts).map_err(serde::de::Error::custom)
    }
}

/// All `2^{d-1}` ordered compositions of `d`.
pub fn compositions(d: usize) -> Vec<MultiplicityVector> {
    if d == 0 {
        return Vec::new();
    }
    (0..1u64 << (d - 1))
        .map(|mask| {
            let mut parts = Vec::new();
            let mut run = 1;
            for i in 0..d - 1 {
                if mask >> i & 1 == 1 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            MultiplicityVector(parts)
        })
        .collect()
}

/// `prod (x + x_i)^{m_i}` for Viete coordinates `x_1 > x_2 > ...`, so the
/// actual roots are `-x_i`.
pub fn stratum_point(mv: &MultiplicityVector, values: &[Rational]) -> Result<Polynomial> {
    if values.len() != mv.parts().len() {
        return Err(Error::invalid(format!("{} parts but {} values", mv.parts().len(), values.len())));
    }
    if values.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::invalid("stratum values must be strictly decreasing"));
    }
    let roots: Vec<Rational> = mv
        .parts()
        .iter()
        .zip(values)
        .flat_map(|(&m, v)| std::iter::repeat_n(-v.clone(), m))
        .collect();
    Polynomial::from_roots(&roots)
}

/// Whether `inner` is reachable from `outer` by merging adjacent parts.
pub fn closure_contains(outer: &MultiplicityVector, inner: &MultiplicityVector) -> Result<bool> {
    if outer.degree() != inner.degree() {
        return Err(Error::invalid(format!("degrees differ: {} vs {}", outer.degree(), inner.degree())));
    }
    let mut seen = HashSet::from([outer.clone()]);
    let mut queue = VecDeque::from([outer.clone()]);
    while let Some(v) = queue.pop_front() {
        if &v == inner {
            return Ok(true);
        }
        if v.parts().len() <= inner.parts().len() {
            continue;
        }
        for next in v.merges() {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(false)
}

/// The bound `(d - 1) a_{d-1}^2 / (2d)` on `a_{d-2}` over the hyperbolicity domain.
pub fn h2_plus(d: usize, a_last: &Rational) -> Result<Rational> {
    if d < 2 {
        return Err(Error::invalid("h2_plus needs d >= 2"));
    }
    Ok(int(d as i64 - 1) * a_last * a_last / int(2 * d as i64))
}

// ---------------------------------------------------------------------------
// Constant-term fibers
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberConfig {
    /// Points in the coarse scan.
    pub grid: usize,
    /// Bisection stops once brackets are this narrow.
    pub width: Rational,
}

impl Default for FiberConfig {
    fn default() -> Self {
        FiberConfig { grid: 256, width: Rational::new(BigInt::one(), BigInt::one() << 40) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FiberStatus {
    /// `lo` and `hi` pass the exact hyperbolicity test; the true endpoints lie
    /// within `width` outside them. A truncated end stops at the scan window.
    Segment {
        #[serde(with = "rational_str")]
        lo: Rational,
        #[serde(with = "rational_str")]
        hi: Rational,
        lo_truncated: bool,
        hi_truncated: bool,
    },
    /// `exact` is true when `value` itself was verified exactly.
    Point {
        #[serde(with = "rational_str")]
        value: Rational,
        exact: bool,
    },
    Empty,
}

/// The open interval of constant terms inside one component, or nothing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ComponentInterval {
    Open {
        #[serde(with = "rational_str")]
        lo: Rational,
        #[serde(with = "rational_str")]
        hi: Rational,
    },
    Empty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FiberMethod {
    /// Boundaries found from the coarse scan.
    Scan,
    /// The scan missed the fiber; located from the critical values instead.
    CriticalValues,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberReport {
    pub degree: usize,
    #[serde(with = "rational_str::vec")]
    pub tail: Vec<Rational>,
    pub status: FiberStatus,
    /// The scan covers `[-window, window]`.
    #[serde(with = "rational_str")]
    pub window: Rational,
    #[serde(with = "rational_str")]
    pub width: Rational,
    /// Maximal runs of hyperbolic scan points.
    pub runs: usize,
    pub method: FiberMethod,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub component_constrained: Option<ComponentInterval>,
}

fn with_a0(tail: &[Rational], a0: &Rational) -> DensePoly {
    let mut c = Vec::with_capacity(tail.len() + 2);
    c.push(a0.clone());
    c.extend_from_slice(tail);
    c.push(Rational::one());
    DensePoly::new(c)
}

fn hyperbolic_at(tail: &[Rational], a0: &Rational) -> bool {
    is_hyperbolic_dense(&with_a0(tail, a0))
}

/// Half-width of the scan window. For `d >= 3` every hyperbolic completion
/// has `|a_0| = prod |r_i| <= (sum r_i^2 / d)^{d/2}` with
/// `sum r_i^2 = a_{d-1}^2 - 2 a_{d-2}`, so the window strictly contains the fiber.
pub fn scan_window(tail: &[Rational]) -> Rational {
    let d = tail.len() + 1;
    let sum: Rational = tail.iter().map(|a| a.abs()).fold(Rational::zero(), |acc, a| acc + a);
    let cauchy = Rational::one() + sum.max(Rational::one());
    if d < 3 {
        return cauchy;
    }
    let s2 = &tail[d - 2] * &tail[d - 2] - int(2) * &tail[d - 3];
    let base = (s2 / int(d as i64)).max(Rational::one());
    let amgm = pow(&base, d.div_ceil(2) as i64) + Rational::one();
    cauchy.max(amgm)
}

/// Bisects between `inside` (in the fiber) and `outside` (not) until they are
/// within `width`; returns the inside end.
fn bisect_boundary(tail: &[Rational], mut inside: Rational, mut outside: Rational, width: &Rational) -> Rational {
    let two = int(2);
    while (&inside - &outside).abs() > *width {
        let mid = (&inside + &outside) / &two;
        if hyperbolic_at(tail, &mid) {
            inside = mid;
        } else {
            outside = mid;
        }
    }
    inside
}

/// Simplest rational (smallest denominator) in the closed interval `[l, r]`.
pub fn simplest_between(l: &Rational, r: &Rational) -> Rational {
    debug_assert!(l <= r);
    if !l.is_positive() && !r.is_negative() {
        return Rational::zero();
    }
    if r.is_negative() {
        return -simplest_between(&-r.clone(), &-l.clone());
    }
    let fl = l.floor();
    if &fl == l {
        return fl;
    }
    let next = &fl + Rational::one();
    if &next <= r {
        return next;
    }
    let inner = simplest_between(&(r - &fl).recip(), &(l - &fl).recip());
    fl + inner.recip()
}

#[derive(Clone, Debug)]
enum CritRoot {
    Exact(Rational),
    /// Open isolating interval; neither end is a root.
    Interval(Rational, Rational),
}

/// Isolates the real roots of a square-free polynomial, in increasing order.
fn isolate_roots(s: &DensePoly) -> Vec<CritRoot> {
    let mut poly = s.clone();
    let mut exact: Vec<Rational> = Vec::new();
    'restart: loop {
        if poly.is_constant() {
            break;
        }
        let lead = poly.leading().expect("nonzero").clone();
        let bound = Rational::one()
            + poly.coeffs().iter().map(|c| (c / &lead).abs()).fold(Rational::zero(), |a, b| a.max(b));
        let mut found = Vec::new();
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((l, r)) = stack.pop() {
            let n = count_roots_dense(&poly, &Bound::At(l.clone()), &Bound::At(r.clone())).expect("ends are not roots");
            match n {
                0 => {}
                1 => found.push((l, r)),
                _ => {
                    let m = (&l + &r) / int(2);
                    if poly.eval(&m).is_zero() {
                        poly = poly.exact_div(&DensePoly::new(vec![-m.clone(), Rational::one()]));
                        exact.push(m);
                        continue 'restart;
                    }
                    stack.push((m.clone(), r));
                    stack.push((l, m));
                }
            }
        }
        let mut out: Vec<CritRoot> = exact.into_iter().map(CritRoot::Exact).collect();
        out.extend(found.into_iter().map(|(l, r)| refine_root(&poly, l, r, &rat(1, 1 << 30))));
        out.sort_by_key(lower);
        return out;
    }
    let mut out: Vec<CritRoot> = exact.into_iter().map(CritRoot::Exact).collect();
    out.sort_by_key(lower);
    out
}

fn lower(c: &CritRoot) -> Rational {
    match c {
        CritRoot::Exact(x) => x.clone(),
        CritRoot::Interval(l, _) => l.clone(),
    }
}

/// Narrows a sign-change bracket of a simple root, and snaps to the simplest
/// rational in it when that is the root.
fn refine_root(s: &DensePoly, mut l: Rational, mut r: Rational, width: &Rational) -> CritRoot {
    let sl = s.sign_at(&l);
    while &r - &l > *width {
        let m = (&l + &r) / int(2);
        let sm = s.sign_at(&m);
        if sm == 0 {
            return CritRoot::Exact(m);
        }
        if sm == sl {
            l = m;
        } else {
            r = m;
        }
    }
    let q = simplest_between(&l, &r);
    if s.eval(&q).is_zero() {
        return CritRoot::Exact(q);
    }
    CritRoot::Interval(l, r)
}

/// Lower and upper bound of a value.
#[derive(Clone, Debug)]
struct Enclosure {
    lo: Rational,
    hi: Rational,
}

impl Enclosure {
    fn exact(v: Rational) -> Self {
        Enclosure { lo: v.clone(), hi: v }
    }

    fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

/// Encloses `-P(c)` for the critical point in `[l, r]` by the mean value bound.
fn critical_value(p: &DensePoly, s: &DensePoly, root: &CritRoot, tol: &Rational) -> Enclosure {
    match root {
        CritRoot::Exact(c) => Enclosure::exact(-p.eval(c)),
        CritRoot::Interval(l, r) => {
            let dp = p.derivative();
            let (mut l, mut r) = (l.clone(), r.clone());
            loop {
                let m_abs = l.abs().max(r.abs()).max(Rational::one());
                let lip: Rational = dp
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(k, c)| c.abs() * pow(&m_abs, k as i64))
                    .fold(Rational::zero(), |a, b| a + b);
                let half = (&r - &l) / int(2);
                let spread = &lip * &half;
                if spread <= *tol {
                    let mid = -p.eval(&((&l + &r) / int(2)));
                    return Enclosure { lo: &mid - &spread, hi: mid + spread };
                }
                match refine_root(s, l.clone(), r.clone(), &half) {
                    CritRoot::Exact(c) => return Enclosure::exact(-p.eval(&c)),
                    CritRoot::Interval(a, b) => {
                        l = a;
                        r = b;
                    }
                }
            }
        }
    }
}

/// Multiplicity of the critical point as a root of `p'`.
fn critical_multiplicity(dp: &DensePoly, root: &CritRoot) -> usize {
    let mut layer = dp.clone();
    let mut mult = 0;
    while layer.degree().unwrap_or(0) >= 1 {
        let hit = match root {
            CritRoot::Exact(c) => layer.eval(c).is_zero(),
            CritRoot::Interval(l, r) => {
                count_roots_dense(&layer, &Bound::At(l.clone()), &Bound::At(r.clone())).unwrap_or(0) > 0
            }
        };
        if !hit {
            break;
        }
        mult += 1;
        layer = layer.gcd(&layer.derivative());
    }
    mult
}

/// `true` for a local minimum of `p` at a simple critical point.
fn is_local_min(dp: &DensePoly, root: &CritRoot) -> bool {
    match root {
        CritRoot::Exact(c) => dp.derivative().sign_at(c) > 0,
        CritRoot::Interval(l, _) => dp.sign_at(l) < 0,
    }
}

fn truncated_segment(lo: Rational, hi: Rational, lo_t: bool, hi_t: bool, width: &Rational) -> FiberStatus {
    if &hi - &lo <= *width && !lo_t && !hi_t {
        let exact = lo == hi;
        FiberStatus::Point { value: lo, exact }
    } else {
        FiberStatus::Segment { lo, hi, lo_truncated: lo_t, hi_truncated: hi_t }
    }
}

/// Locates the fiber from the critical values of `P = Q - a_0`: with simple
/// critical points it is `[max over maxima of -P(c), min over minima of -P(c)]`,
/// and a multiple critical point forces `a_0 = -P(c)`.
fn fiber_from_critical_values(tail: &[Rational], window: &Rational, width: &Rational) -> FiberStatus {
    let d = tail.len() + 1;
    let p = with_a0(tail, &Rational::zero());
    let dp = p.derivative();
    if weighted_real_count(&dp) != d - 1 {
        return FiberStatus::Empty;
    }
    let g = dp.gcd(&dp.derivative());
    let s = dp.exact_div(&g).primitive();
    let roots = isolate_roots(&s);
    let tol = width / int(8);
    let mut forced: Vec<Enclosure> = Vec::new();
    let mut lo: Option<Enclosure> = None;
    let mut hi: Option<Enclosure> = None;
    for root in &roots {
        let v = critical_value(&p, &s, root, &tol);
        if critical_multiplicity(&dp, root) >= 2 {
            forced.push(v);
        } else if is_local_min(&dp, root) {
            hi = Some(match hi {
                Some(h) if h.lo <= v.lo => h,
                _ => v,
            });
        } else {
            lo = Some(match lo {
                Some(l) if l.hi >= v.hi => l,
                _ => v,
            });
        }
    }
    if !forced.is_empty() {
        let candidate = forced.iter().find(|e| e.is_exact()).cloned();
        return match candidate {
            Some(e) => {
                if hyperbolic_at(tail, &e.lo) {
                    FiberStatus::Point { value: e.lo, exact: true }
                } else {
                    FiberStatus::Empty
                }
            }
            None => {
                let e = &forced[0];
                let v = (&e.lo + &e.hi) / int(2);
                let agrees = forced.iter().all(|f| f.lo <= &v + width && f.hi >= &v - width);
                let above_lo = lo.as_ref().is_none_or(|l| l.lo <= &v + width);
                let below_hi = hi.as_ref().is_none_or(|h| h.hi >= &v - width);
                if agrees && above_lo && below_hi {
                    FiberStatus::Point { value: v, exact: false }
                } else {
                    FiberStatus::Empty
                }
            }
        };
    }
    let Some(hi) = hi else {
        return FiberStatus::Empty;
    };
    let lo_upper = lo.as_ref().map(|l| l.hi.clone());
    if let Some(l) = &lo {
        if l.is_exact() && hi.is_exact() && l.lo == hi.lo {
            return if hyperbolic_at(tail, &hi.lo) {
                FiberStatus::Point { value: hi.lo.clone(), exact: true }
            } else {
                FiberStatus::Empty
            };
        }
        if l.lo > hi.hi {
            return FiberStatus::Empty;
        }
        if l.hi >= hi.lo {
            return FiberStatus::Point { value: (&l.hi + &hi.lo) / int(2), exact: false };
        }
    }
    // A point strictly inside the fiber.
    let inner = match &lo_upper {
        Some(u) => (u + &hi.lo) / int(2),
        None => &hi.lo - Rational::one(),
    };
    let hi_end = if hi.is_exact() {
        hi.lo.clone()
    } else {
        bisect_boundary(tail, inner.clone(), &hi.hi + width, width)
    };
    let (lo_end, lo_t) = match &lo {
        Some(l) if l.is_exact() => (l.lo.clone(), false),
        Some(l) => (bisect_boundary(tail, inner.clone(), &l.lo - width, width), false),
        None => (-window.clone(), true),
    };
    truncated_segment(lo_end, hi_end, lo_t, false, width)
}

pub fn a0_fiber(tail: &[Rational]) -> FiberReport {
    a0_fiber_with(tail, &FiberConfig::default())
}

/// The set of `a_0` making `x^d + a_{d-1} x^{d-1} + ... + a_1 x + a_0`
/// hyperbolic, for the tail `(a_1, ..., a_{d-1})`.
pub fn a0_fiber_with(tail: &[Rational], cfg: &FiberConfig) -> FiberReport {
    let d = tail.len() + 1;
    let window = scan_window(tail);
    let n = cfg.grid.max(2);
    let step = int(2) * &window / int(n as i64 - 1);
    let grid: Vec<Rational> = (0..n).map(|k| -window.clone() + &step * int(k as i64)).collect();
    let hits: Vec<bool> = grid.iter().map(|a0| hyperbolic_at(tail, a0)).collect();
    let mut run_bounds = Vec::new();
    let mut k = 0;
    while k < n {
        if hits[k] {
            let start = k;
            while k + 1 < n && hits[k + 1] {
                k += 1;
            }
            run_bounds.push((start, k));
        }
        k += 1;
    }
    let runs = run_bounds.len();
    let (status, method) = if runs == 0 {
        (fiber_from_critical_values(tail, &window, &cfg.width), FiberMethod::CriticalValues)
    } else {
        let (first, _) = run_bounds[0];
        let (_, last) = *run_bounds.last().expect("non-empty");
        let lo_t = first == 0;
        let hi_t = last == n - 1;
        let lo = if lo_t { grid[0].clone() } else { bisect_boundary(tail, grid[first].clone(), grid[first - 1].clone(), &cfg.width) };
        let hi = if hi_t { grid[n - 1].clone() } else { bisect_boundary(tail, grid[last].clone(), grid[last + 1].clone(), &cfg.width) };
        (truncated_segment(lo, hi, lo_t, hi_t, &cfg.width), FiberMethod::Scan)
    };
    FiberReport {
        degree: d,
        tail: tail.to_vec(),
        status,
        window,
        width: cfg.width.clone(),
        runs,
        method,
        component_constrained: None,
    }
}

fn check_tail_signs(sigma: &SignPattern, tail: &[Rational]) -> Result<()> {
    if tail.len() + 1 != sigma.degree() {
        return Err(Error::invalid(format!("tail has {} entries; pattern needs {}", tail.len(), sigma.degree() - 1)));
    }
    for (j, a) in tail.iter().enumerate() {
        if sign_of(a) != sigma.get(j + 1).as_i32() {
            return Err(Error::invalid(format!("a_{} = {a} does not have sign {}", j + 1, sigma.get(j + 1).symbol())));
        }
    }
    Ok(())
}

pub fn component_fiber(sigma: &SignPattern, tail: &[Rational]) -> Result<FiberReport> {
    component_fiber_with(sigma, tail, &FiberConfig::default())
}

/// The fiber restricted to `sign(a_0) = sigma_0` and to simple roots.
pub fn component_fiber_with(sigma: &SignPattern, tail: &[Rational], cfg: &FiberConfig) -> Result<FiberReport> {
    check_tail_signs(sigma, tail)?;
    let mut report = a0_fiber_with(tail, cfg);
    let interval = match &report.status {
        FiberStatus::Segment { lo, hi, .. } => {
            let zero = Rational::zero();
            let (l, h) = match sigma.get(0) {
                Sign::Plus => (lo.clone().max(zero), hi.clone()),
                Sign::Minus => (lo.clone(), hi.clone().min(zero)),
            };
            if l < h {
                ComponentInterval::Open { lo: l, hi: h }
            } else {
                ComponentInterval::Empty
            }
        }
        FiberStatus::Point { .. } | FiberStatus::Empty => ComponentInterval::Empty,
    };
    report.component_constrained = Some(interval);
    Ok(report)
}

/// Exact membership of the completed polynomial in the component of `sigma`:
/// pattern `sigma` and `d` distinct real roots.
pub fn in_component(sigma: &SignPattern, tail: &[Rational], a0: &Rational) -> bool {
    sign_of(a0) == sigma.get(0).as_i32() && all_real_simple_dense(&with_a0(tail, a0))
}

/// Membership indicator on `n` evenly spaced `a_0` values over `[lo, hi]`.
pub fn component_indicator(sigma: &SignPattern, tail: &[Rational], lo: &Rational, hi: &Rational, n: usize) -> Vec<bool> {
    let n = n.max(2);
    let step = (hi - lo) / int(n as i64 - 1);
    (0..n).map(|k| in_component(sigma, tail, &(lo + &step * int(k as i64)))).collect()
}

/// Number of maximal runs of `true`.
pub fn count_runs(indicator: &[bool]) -> usize {
    indicator.iter().enumerate().filter(|&(i, &b)| b && (i == 0 || !indicator[i - 1])).count()
}
