//! Exact univariate polynomials over the rationals.
//!
//! [`DensePoly`] is a general dense polynomial (possibly zero, any leading
//! coefficient) used for intermediate computations such as remainder
//! sequences and Sylvester matrices. [`Polynomial`] is the monic, degree >= 1
//! type every public operation works with. Both store coefficients in
//! ascending degree order: `coeffs[j]` is the coefficient of `x^j`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `n / d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact power with a possibly negative exponent.
pub fn pow(x: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parsed = if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| Error::invalid(format!("bad rational {s:?}")))?;
        let d: BigInt = d.trim().parse().map_err(|_| Error::invalid(format!("bad rational {s:?}")))?;
        if d.is_zero() {
            return Err(Error::invalid(format!("zero denominator in {s:?}")));
        }
        Rational::new(n, d)
    } else if let Some((w, f)) = s.split_once('.') {
        // Terminating decimal, read exactly.
        let neg = w.starts_with('-');
        let digits = format!("{}{}", w.trim_start_matches(['-', '+']), f);
        let n: BigInt = digits.parse().map_err(|_| Error::invalid(format!("bad rational {s:?}")))?;
        let d = num_traits::pow(BigInt::from(10), f.len());
        let r = Rational::new(n, d);
        if neg {
            -r
        } else {
            r
        }
    } else {
        Rational::from_integer(s.parse().map_err(|_| Error::invalid(format!("bad rational {s:?}")))?)
    };
    Ok(parsed)
}

/// Nearest `f64`, for display only.
pub fn to_f64(x: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

/// Positive content of a nonzero rational vector: gcd of numerators over lcm
/// of denominators.
fn content(coeffs: &[Rational]) -> Rational {
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        num = num.gcd(c.numer());
        den = den.lcm(c.denom());
    }
    if num.is_zero() {
        Rational::one()
    } else {
        Rational::new(num, den)
    }
}

// ---------------------------------------------------------------------------
// DensePoly
// ---------------------------------------------------------------------------

/// Dense polynomial with rational coefficients. Trailing zeros are stripped;
/// the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DensePoly {
    coeffs: Vec<Rational>,
}

impl DensePoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        DensePoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, j: usize) -> Rational {
        self.coeffs.get(j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign of the value at `x` (-1, 0 or 1).
    pub fn sign_at(&self, x: &Rational) -> i32 {
        sign_of(&self.eval(x))
    }

    pub fn derivative(&self) -> DensePoly {
        DensePoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c * int(j as i64))
                .collect(),
        )
    }

    pub fn scale(&self, k: &Rational) -> DensePoly {
        DensePoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &DensePoly) -> (DensePoly, DensePoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (DensePoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let f = &rem[k + dd] / &lead;
            if f.is_zero() {
                continue;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &f * dc;
            }
            quot[k] = f;
        }
        rem.truncate(dd);
        (DensePoly::new(quot), DensePoly::new(rem))
    }

    pub fn rem(&self, divisor: &DensePoly) -> DensePoly {
        self.div_rem(divisor).1
    }

    /// Exact quotient, asserting a zero remainder in debug builds.
    pub fn exact_div(&self, divisor: &DensePoly) -> DensePoly {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Divides by the positive content so the coefficients become coprime
    /// integers. Signs (and hence Sturm sign counts) are preserved.
    pub fn primitive(&self) -> DensePoly {
        if self.is_zero() {
            return self.clone();
        }
        let c = content(&self.coeffs);
        DensePoly { coeffs: self.coeffs.iter().map(|x| x / &c).collect() }
    }

    /// Monic associate; `None` for the zero polynomial.
    pub fn monic(&self) -> Option<DensePoly> {
        let lead = self.leading()?.clone();
        Some(self.scale(&lead.recip()))
    }

    /// Monic gcd over the rationals (zero only if both inputs are zero).
    pub fn gcd(&self, other: &DensePoly) -> DensePoly {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        while !b.is_zero() {
            let r = a.rem(&b).primitive();
            a = b;
            b = r;
        }
        a.monic().unwrap_or_default()
    }

    /// `p(-x)`.
    pub fn reflect_arg(&self) -> DensePoly {
        DensePoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| if j % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Multiplicity of 0 as a root, and the cofactor `p / x^k`.
    pub fn split_zero_root(&self) -> (usize, DensePoly) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (k, DensePoly::new(self.coeffs[k..].to_vec()))
    }

    /// Parses an expression such as `x^3+x^2+0x+1` or `2*x - 1/3`, or a
    /// comma-separated ascending coefficient list.
    pub fn parse(s: &str) -> Result<DensePoly> {
        let s = s.trim();
        if s.starts_with('{') {
            let v: PolyJson = serde_json::from_str(s).map_err(|e| Error::invalid(format!("bad polynomial JSON: {e}")))?;
            return Ok(DensePoly::new(v.coeffs.iter().map(CoeffJson::value).collect::<Result<_>>()?));
        }
        if s.contains('x') {
            return parse_expression(s);
        }
        let coeffs = s.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
        Ok(DensePoly::new(coeffs))
    }
}

pub(crate) fn sign_of(x: &Rational) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn parse_expression(s: &str) -> Result<DensePoly> {
    let bad = || Error::invalid(format!("bad polynomial expression {s:?}"));
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    // Split into signed terms.
    let mut terms: Vec<String> = Vec::new();
    let mut cur = String::new();
    for (i, ch) in compact.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    terms.push(cur);

    let mut coeffs: Vec<Rational> = Vec::new();
    for term in terms {
        let (neg, body) = match term.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, term.strip_prefix('+').unwrap_or(&term)),
        };
        if body.is_empty() {
            return Err(bad());
        }
        let (coef, power) = match body.find('x') {
            None => (parse_rational(body)?, 0usize),
            Some(pos) => {
                let head = body[..pos].trim_end_matches('*');
                let coef = if head.is_empty() { Rational::one() } else { parse_rational(head)? };
                let tail = &body[pos + 1..];
                let power = if tail.is_empty() {
                    1
                } else {
                    tail.strip_prefix('^').ok_or_else(bad)?.parse::<usize>().map_err(|_| bad())?
                };
                (coef, power)
            }
        };
        if coeffs.len() <= power {
            coeffs.resize(power + 1, Rational::zero());
        }
        coeffs[power] += if neg { -coef } else { coef };
    }
    Ok(DensePoly::new(coeffs))
}

impl<'a> Add<&'a DensePoly> for &'a DensePoly {
    type Output = DensePoly;
    fn add(self, rhs: &DensePoly) -> DensePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DensePoly::new((0..n).map(|j| self.coeff(j) + rhs.coeff(j)).collect())
    }
}

impl<'a> Sub<&'a DensePoly> for &'a DensePoly {
    type Output = DensePoly;
    fn sub(self, rhs: &DensePoly) -> DensePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DensePoly::new((0..n).map(|j| self.coeff(j) - rhs.coeff(j)).collect())
    }
}

impl<'a> Mul<&'a DensePoly> for &'a DensePoly {
    type Output = DensePoly;
    fn mul(self, rhs: &DensePoly) -> DensePoly {
        if self.is_zero() || rhs.is_zero() {
            return DensePoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        DensePoly::new(out)
    }
}

impl Neg for &DensePoly {
    type Output = DensePoly;
    fn neg(self) -> DensePoly {
        DensePoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for DensePoly {
    /// Compact ascending list, e.g. `7/8,-15/8,0,0,1`; `0` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

// ---------------------------------------------------------------------------
// Polynomial (monic)
// ---------------------------------------------------------------------------

/// Monic polynomial `x^d + a_{d-1} x^{d-1} + ... + a_0` with `d >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// From the full ascending coefficient list `(a_0, ..., a_d)`; `a_d` must be 1.
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::invalid("a polynomial needs degree >= 1"));
        }
        if !coeffs.last().is_some_and(|c| c.is_one()) {
            return Err(Error::invalid("polynomial must be monic (leading coefficient 1)"));
        }
        Ok(Polynomial { coeffs })
    }

    /// From the lower coefficients `(a_0, ..., a_{d-1})`; appends the leading 1.
    pub fn monic_from_lower(mut lower: Vec<Rational>) -> Result<Self> {
        lower.push(Rational::one());
        Self::new(lower)
    }

    pub fn from_ints(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// Normalizes a nonconstant dense polynomial to its monic associate.
    pub fn from_dense(p: &DensePoly) -> Result<Self> {
        match p.degree() {
            Some(d) if d >= 1 => Self::new(p.monic().expect("nonzero").into_coeffs()),
            _ => Err(Error::Domain("constant polynomial has no monic degree >= 1 form".into())),
        }
    }

    /// Monic `prod (x - r_i)` expanded exactly; repeated entries are multiplicities.
    pub fn from_roots(roots: &[Rational]) -> Result<Self> {
        if roots.is_empty() {
            return Err(Error::invalid("from_roots needs at least one root"));
        }
        let mut coeffs = vec![Rational::one()];
        for r in roots {
            // multiply by (x - r)
            let mut next = vec![Rational::zero(); coeffs.len() + 1];
            for (j, c) in coeffs.iter().enumerate() {
                next[j + 1] += c;
                next[j] -= c * r;
            }
            coeffs = next;
        }
        Self::new(coeffs)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &Rational {
        &self.coeffs[j]
    }

    /// `(a_1, ..., a_{d-1})`, the coefficients a constant-term fiber is taken over.
    pub fn tail(&self) -> &[Rational] {
        &self.coeffs[1..self.degree()]
    }

    pub fn to_dense(&self) -> DensePoly {
        DensePoly::new(self.coeffs.clone())
    }

    pub fn sign_pattern(&self) -> Result<SignPattern> {
        let d = self.degree();
        self.coeffs[..d]
            .iter()
            .enumerate()
            .map(|(j, c)| {
                if c.is_positive() {
                    Ok(Sign::Plus)
                } else if c.is_negative() {
                    Ok(Sign::Minus)
                } else {
                    Err(Error::ZeroCoefficient { index: j })
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(SignPattern)
    }

    pub fn has_zero_coefficient(&self) -> bool {
        self.coeffs[..self.degree()].iter().any(|c| c.is_zero())
    }

    /// `(-1)^d p(-x)`: monic, roots negated, odd-index coefficients flipped
    /// relative to the leading one.
    pub fn reflect(&self) -> Polynomial {
        let d = self.degree();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| if (d - j) % 2 == 1 { -c } else { c.clone() })
            .collect();
        Polynomial { coeffs }
    }

    /// Quasi-homogeneous dilatation `a_j -> u^{d-j} a_j`; roots are multiplied by `u`.
    pub fn quasi_homogeneous(&self, u: &Rational) -> Result<Polynomial> {
        if u.is_zero() {
            return Err(Error::invalid("dilatation factor must be nonzero"));
        }
        let d = self.degree();
        let mut scale = Rational::one();
        let mut coeffs = self.coeffs.clone();
        for j in (0..=d).rev() {
            coeffs[j] = &coeffs[j] * &scale;
            scale *= u;
        }
        Ok(Polynomial { coeffs })
    }

    /// `p' / d`, monic of degree `d - 1`.
    pub fn derivative(&self) -> Result<Polynomial> {
        let d = self.degree();
        if d < 2 {
            return Err(Error::Domain("derivative of a degree-1 polynomial is constant".into()));
        }
        let dd = int(d as i64);
        let coeffs = (1..=d).map(|j| &self.coeffs[j] * int(j as i64) / &dd).collect();
        Ok(Polynomial { coeffs })
    }

    pub fn evaluate(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Polynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let dense = DensePoly::parse(s)?;
        match dense.degree() {
            Some(d) if d >= 1 && dense.coeffs()[d].is_one() => Polynomial::new(dense.into_coeffs()),
            Some(d) if d >= 1 => Err(Error::invalid(format!("{s:?} is not monic"))),
            _ => Err(Error::invalid(format!("{s:?} has degree < 1"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    coeffs: Vec<CoeffJson>,
}

/// A coefficient as a rational string or a JSON integer.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoeffJson {
    Text(String),
    Int(i64),
}

impl CoeffJson {
    fn value(&self) -> Result<Rational> {
        match self {
            CoeffJson::Text(t) => parse_rational(t),
            CoeffJson::Int(n) => Ok(int(*n)),
        }
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson { coeffs: self.coeffs.iter().map(|c| CoeffJson::Text(c.to_string())).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PolyJson::deserialize(d)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(CoeffJson::value)
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Polynomial::new(coeffs).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter writing rationals as `"num/den"` strings.
pub mod rational_str {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let raw = String::deserialize(d)?;
        parse_rational(&raw).map_err(serde::de::Error::custom)
    }

    pub mod vec {
        use super::*;

        pub fn serialize<S: Serializer>(xs: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
            let v: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
            v.serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Rational>, D::Error> {
            let raw = Vec::<String>::deserialize(d)?;
            raw.iter().map(|r| parse_rational(r)).collect::<Result<_>>().map_err(serde::de::Error::custom)
        }
    }
}

// ---------------------------------------------------------------------------
// Sign patterns
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// `self` applied to a rational magnitude.
    pub fn apply(self, x: Rational) -> Rational {
        match self {
            Sign::Plus => x,
            Sign::Minus => -x,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Signs of `(a_0, ..., a_{d-1})`, ascending: entry 0 is the constant term.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignPattern(pub Vec<Sign>);

impl SignPattern {
    pub fn new(signs: Vec<Sign>) -> Result<Self> {
        if signs.is_empty() {
            return Err(Error::invalid("sign pattern must be non-empty"));
        }
        Ok(SignPattern(signs))
    }

    /// Pattern number `index` of length `d`: bit `j` set means `sigma_j = -`.
    pub fn from_index(d: usize, index: u64) -> Self {
        SignPattern((0..d).map(|j| if index >> j & 1 == 1 { Sign::Minus } else { Sign::Plus }).collect())
    }

    /// All `2^d` patterns of length `d` in index order.
    pub fn all(d: usize) -> impl Iterator<Item = SignPattern> {
        (0..1u64 << d).map(move |i| SignPattern::from_index(d, i))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, j: usize) -> Sign {
        self.0[j]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    /// Pattern of `reflect(p)`: odd-index entries flipped, valid for even and odd `d`.
    pub fn reflect(&self) -> SignPattern {
        let d = self.degree();
        SignPattern(
            self.0
                .iter()
                .enumerate()
                .map(|(j, s)| if (d - j) % 2 == 1 { s.flip() } else { *s })
                .collect(),
        )
    }

    /// The pattern with its first (constant-term) entry removed.
    pub fn without_first(&self) -> Option<SignPattern> {
        (self.degree() > 1).then(|| SignPattern(self.0[1..].to_vec()))
    }

    /// Parses `"+,-,+"` read ascending (constant term first).
    pub fn parse(s: &str) -> Result<Self> {
        let signs = s
            .split(',')
            .map(|t| match t.trim() {
                "+" => Ok(Sign::Plus),
                "-" => Ok(Sign::Minus),
                other => Err(Error::invalid(format!("bad sign {other:?} in pattern {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        SignPattern::new(signs)
    }

    /// Parses a tuple written highest degree first, `(a_{d-1}, ..., a_0)`.
    pub fn parse_descending(s: &str) -> Result<Self> {
        let mut p = Self::parse(s)?;
        p.0.reverse();
        Ok(p)
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.symbol().to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for SignPattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SignPattern::parse(s)
    }
}

impl Serialize for SignPattern {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SignPattern {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = String::deserialize(d)?;
        SignPattern::parse(&raw).map_err(serde::de::Error::custom)
    }
}
