//! Exact real-root counting with Sturm sequences, and Descartes bookkeeping.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{sign_of, DensePoly, Polynomial, Rational, Sign, SignPattern};

/// Interval endpoint for [`sturm_count`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    At(Rational),
    PosInf,
}

impl Bound {
    fn rank_cmp(&self, other: &Bound) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        match (self, other) {
            (Bound::NegInf, Bound::NegInf) | (Bound::PosInf, Bound::PosInf) => Equal,
            (Bound::NegInf, _) | (_, Bound::PosInf) => Less,
            (_, Bound::NegInf) | (Bound::PosInf, _) => Greater,
            (Bound::At(a), Bound::At(b)) => a.cmp(b),
        }
    }
}

/// Sturm chain `p, p', -rem(...), ...` with every element divided by its
/// positive content. The last element is `gcd(p, p')` up to a positive scalar.
pub fn sturm_chain(p: &DensePoly) -> Vec<DensePoly> {
    let mut chain = Vec::new();
    if p.is_zero() {
        return chain;
    }
    chain.push(p.primitive());
    let d = p.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(d.primitive());
    loop {
        let n = chain.len();
        let r = chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push((-&r).primitive());
    }
    chain
}

fn sign_at_bound(q: &DensePoly, b: &Bound) -> i32 {
    let lead = sign_of(q.leading().expect("chain elements are nonzero"));
    match b {
        Bound::PosInf => lead,
        Bound::NegInf => {
            if q.degree().unwrap_or(0) % 2 == 1 {
                -lead
            } else {
                lead
            }
        }
        Bound::At(x) => q.sign_at(x),
    }
}

/// Number of sign changes in the chain evaluated at `b`, zeros skipped.
pub fn sign_variations(chain: &[DensePoly], b: &Bound) -> usize {
    let mut last = 0;
    let mut count = 0;
    for q in chain {
        let s = sign_at_bound(q, b);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Distinct real roots of a nonzero dense polynomial in `(lo, hi)`.
pub fn count_roots_dense(p: &DensePoly, lo: &Bound, hi: &Bound) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::invalid("cannot count roots of the zero polynomial"));
    }
    if lo.rank_cmp(hi) != std::cmp::Ordering::Less {
        return Err(Error::invalid("sturm_count needs lo < hi"));
    }
    for b in [lo, hi] {
        if let Bound::At(x) = b {
            if p.eval(x).is_zero() {
                return Err(Error::EndpointRoot(x.to_string()));
            }
        }
    }
    let chain = sturm_chain(p);
    Ok(sign_variations(&chain, lo) - sign_variations(&chain, hi))
}

/// Exact number of distinct real roots of `p` in the open interval `(lo, hi)`.
pub fn sturm_count(p: &Polynomial, lo: Bound, hi: Bound) -> Result<usize> {
    count_roots_dense(&p.to_dense(), &lo, &hi)
}

/// Distinct real roots on the whole line.
pub fn distinct_real_dense(p: &DensePoly) -> usize {
    if p.is_constant() {
        return 0;
    }
    let chain = sturm_chain(p);
    sign_variations(&chain, &Bound::NegInf) - sign_variations(&chain, &Bound::PosInf)
}

/// Real roots counted with multiplicity, as the sum of distinct-root counts
/// over the layers `p, gcd(p, p'), gcd(gcd(p, p'), ...), ...`.
pub fn weighted_real_count(p: &DensePoly) -> usize {
    let mut total = 0;
    let mut layer = p.clone();
    while layer.degree().unwrap_or(0) >= 1 {
        total += distinct_real_dense(&layer);
        layer = layer.gcd(&layer.derivative());
    }
    total
}

/// Hyperbolicity test: every root real, counted with multiplicity.
pub fn is_hyperbolic_dense(p: &DensePoly) -> bool {
    p.degree().is_some_and(|d| weighted_real_count(p) == d)
}

/// True iff `p` has `degree` distinct real roots.
pub fn all_real_simple_dense(p: &DensePoly) -> bool {
    p.degree().is_some_and(|d| d == 0 || distinct_real_dense(p) == d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootProfile {
    pub pos: usize,
    pub neg: usize,
    /// Whether 0 is a root.
    pub zero: bool,
    pub complex_pairs: usize,
    pub all_simple: bool,
}

impl RootProfile {
    pub fn distinct_real(&self) -> usize {
        self.pos + self.neg + usize::from(self.zero)
    }

    /// `d` distinct real roots (the polynomial lies in the interior of the
    /// hyperbolicity domain).
    pub fn real_rooted_simple(&self, d: usize) -> bool {
        self.all_simple && self.distinct_real() == d
    }
}

pub fn root_profile_dense(p: &DensePoly) -> RootProfile {
    let d = p.degree().expect("nonzero polynomial");
    let (k, q) = p.split_zero_root();
    let (pos, neg) = if q.is_constant() {
        (0, 0)
    } else {
        let chain = sturm_chain(&q);
        let at0 = sign_variations(&chain, &Bound::At(Rational::zero()));
        (
            at0 - sign_variations(&chain, &Bound::PosInf),
            sign_variations(&chain, &Bound::NegInf) - at0,
        )
    };
    let all_simple = k <= 1 && p.gcd(&p.derivative()).is_constant();
    let weighted = weighted_real_count(p);
    RootProfile { pos, neg, zero: k > 0, complex_pairs: (d - weighted) / 2, all_simple }
}

pub fn root_profile(p: &Polynomial) -> RootProfile {
    root_profile_dense(&p.to_dense())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescartesCounts {
    /// Sign changes in `(sigma_0, ..., sigma_{d-1}, +)`.
    pub c: usize,
    /// Sign preservations, `d - c`.
    pub p: usize,
}

pub fn descartes_counts(sigma: &SignPattern) -> DescartesCounts {
    let d = sigma.degree();
    let c = sigma
        .signs()
        .iter()
        .chain(std::iter::once(&Sign::Plus))
        .collect::<Vec<_>>()
        .windows(2)
        .filter(|w| w[0] != w[1])
        .count();
    DescartesCounts { c, p: d - c }
}

/// Whether `(pos, neg)` is allowed for `sigma` by Descartes' rule applied to
/// `Q(x)` and `Q(-x)`.
pub fn compatible(sigma: &SignPattern, pos: usize, neg: usize) -> Result<bool> {
    let d = sigma.degree();
    if pos + neg > d {
        return Err(Error::invalid(format!("pos + neg = {} exceeds degree {d}", pos + neg)));
    }
    if (d - pos - neg) % 2 == 1 {
        return Err(Error::invalid(format!(
            "d - pos - neg = {} is odd; non-real roots come in pairs",
            d - pos - neg
        )));
    }
    let DescartesCounts { c, p } = descartes_counts(sigma);
    Ok(pos <= c && (c - pos).is_multiple_of(2) && neg <= p && (p - neg).is_multiple_of(2))
}

/// The only `(pos, neg)` a hyperbolic polynomial with pattern `sigma` can have.
pub fn hyperbolic_counts(sigma: &SignPattern) -> (usize, usize) {
    let DescartesCounts { c, p } = descartes_counts(sigma);
    (c, p)
}

/// Number of sign changes of the actual coefficient sequence, zeros skipped.
pub fn coefficient_sign_changes(p: &DensePoly) -> usize {
    let signs: Vec<i32> = p.coeffs().iter().filter(|c| !c.is_zero()).map(|c| if c.is_positive() { 1 } else { -1 }).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}
