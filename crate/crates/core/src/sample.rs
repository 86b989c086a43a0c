//! Seeded random generators for polynomials with prescribed structure.

use num_traits::Zero;
use rand::Rng;

use crate::poly::{rat, Polynomial, Rational, SignPattern};

/// Uniform rational `n / den` with `|n| <= max_num` and `1 <= den <= max_den`.
pub fn random_rational<R: Rng>(rng: &mut R, max_num: i64, max_den: i64) -> Rational {
    rat(rng.gen_range(-max_num..=max_num), rng.gen_range(1..=max_den))
}

/// Positive rational in `(0, max]` with denominator at most `max_den`.
pub fn random_positive<R: Rng>(rng: &mut R, max: i64, max_den: i64) -> Rational {
    let den = rng.gen_range(1..=max_den);
    rat(rng.gen_range(1..=max * den), den)
}

/// `d` distinct nonzero rationals.
pub fn random_distinct_roots<R: Rng>(rng: &mut R, d: usize, max_num: i64, max_den: i64) -> Vec<Rational> {
    let mut roots: Vec<Rational> = Vec::with_capacity(d);
    while roots.len() < d {
        let r = random_rational(rng, max_num, max_den);
        if !r.is_zero() && !roots.contains(&r) {
            roots.push(r);
        }
    }
    roots
}

/// Monic polynomial with `d` distinct nonzero rational roots.
pub fn random_hyperbolic<R: Rng>(rng: &mut R, d: usize) -> Polynomial {
    Polynomial::from_roots(&random_distinct_roots(rng, d, 20, 4)).expect("d >= 1")
}

/// Monic polynomial whose coefficients carry `sigma`, magnitudes in `(0, max]`.
pub fn random_with_pattern<R: Rng>(rng: &mut R, sigma: &SignPattern, max: i64) -> Polynomial {
    let lower = sigma.signs().iter().map(|s| s.apply(random_positive(rng, max, 16))).collect();
    Polynomial::monic_from_lower(lower).expect("non-empty pattern")
}

/// Monic polynomial with independent random coefficients.
pub fn random_polynomial<R: Rng>(rng: &mut R, d: usize, max_num: i64, max_den: i64) -> Polynomial {
    let lower = (0..d).map(|_| random_rational(rng, max_num, max_den)).collect();
    Polynomial::monic_from_lower(lower).expect("d >= 1")
}
