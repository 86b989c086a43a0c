//! Sylvester resultants and membership in the discriminant set and the
//! hyperbolicity domain.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{rational_str, DensePoly, Polynomial, Rational};
use crate::root_count::{distinct_real_dense, root_profile_dense, weighted_real_count};

/// Determinant of an integer matrix by Bareiss fraction-free elimination.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

fn integer_scaled(p: &DensePoly) -> (Vec<BigInt>, BigInt) {
    let l = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints = p.coeffs().iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
    (ints, l)
}

/// Determinant of the Sylvester matrix of `p` and `q`, `p`'s coefficients in
/// the top `deg q` rows, highest degree first.
pub fn sylvester_resultant(p: &DensePoly, q: &DensePoly) -> Result<Rational> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::invalid("resultant of a zero polynomial"));
    }
    let m = p.degree().unwrap_or(0);
    let n = q.degree().unwrap_or(0);
    let (pi, lp) = integer_scaled(p);
    let (qi, lq) = integer_scaled(q);
    let size = m + n;
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for r in 0..n {
        for (k, c) in pi.iter().rev().enumerate() {
            mat[r][r + k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in qi.iter().rev().enumerate() {
            mat[n + r][r + k] = c.clone();
        }
    }
    let det = bareiss_det(mat);
    let scale = num_traits::pow(lp, n) * num_traits::pow(lq, m);
    Ok(Rational::new(det, scale))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipReport {
    /// `Res(p, p')` with the unnormalized derivative.
    #[serde(with = "rational_str")]
    pub resultant: Rational,
    pub on_delta1: bool,
    pub multiple_real_root: bool,
    pub multiple_complex_pair_only: bool,
    pub hyperbolic: bool,
    pub in_pi_star: bool,
}

pub fn classify(p: &Polynomial) -> MembershipReport {
    let dense = p.to_dense();
    let deriv = dense.derivative();
    let resultant = sylvester_resultant(&dense, &deriv).expect("monic polynomial of degree >= 1");
    let on_delta1 = resultant.is_zero();
    let g = dense.gcd(&deriv);
    let multiple_real_root = !g.is_constant() && distinct_real_dense(&g) > 0;
    let hyperbolic = weighted_real_count(&dense) == p.degree();
    let profile = root_profile_dense(&dense);
    let in_pi_star = hyperbolic && profile.all_simple && !p.has_zero_coefficient();
    MembershipReport {
        resultant,
        on_delta1,
        multiple_real_root,
        multiple_complex_pair_only: on_delta1 && !multiple_real_root,
        hyperbolic,
        in_pi_star,
    }
}

/// `p` has `d` distinct real roots and no vanishing coefficient.
pub fn in_pi_star(p: &Polynomial) -> bool {
    !p.has_zero_coefficient() && crate::root_count::all_real_simple_dense(&p.to_dense())
}
