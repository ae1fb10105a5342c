//! Lengths that stay exact while they can.
//!
//! A [`Length`] is either an exact rational or a double carrying the absolute
//! tolerance [`TOLERANCE`]. Arithmetic between two exact values stays exact;
//! as soon as one operand is approximate the result is approximate.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Absolute (and, for large magnitudes, relative) tolerance of the double backend.
pub const TOLERANCE: f64 = 1e-9;

/// Numeric backend used when new lengths are produced from coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    /// Exact rationals wherever the value is rational; doubles otherwise.
    #[default]
    Rational,
    /// Doubles everywhere.
    Double,
}

impl Backend {
    /// Reads `BRIDGEWORKS_BACKEND`, falling back to [`Backend::Rational`].
    pub fn from_env() -> Result<Self, Error> {
        match std::env::var("BRIDGEWORKS_BACKEND") {
            Ok(v) => v.parse(),
            Err(_) => Ok(Backend::Rational),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Backend::Rational => "rational",
            Backend::Double => "double",
        }
    }
}

impl FromStr for Backend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "rational" | "exact" => Ok(Backend::Rational),
            "double" | "f64" | "float" => Ok(Backend::Double),
            other => Err(Error::InvalidInput(format!("unknown backend `{other}`"))),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Length {
    Exact(BigRational),
    Approx(f64),
}

impl Length {
    pub fn zero() -> Self {
        Length::Exact(BigRational::zero())
    }

    pub fn from_int(v: i64) -> Self {
        Length::Exact(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Length::Exact(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Length::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&BigRational> {
        match self {
            Length::Exact(r) => Some(r),
            Length::Approx(_) => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Length::Exact(r) => rational_to_f64(r),
            Length::Approx(v) => *v,
        }
    }

    /// Converts to the representation used by `backend`.
    pub fn in_backend(&self, backend: Backend) -> Length {
        match (backend, self) {
            (Backend::Double, Length::Exact(r)) => Length::Approx(rational_to_f64(r)),
            _ => self.clone(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Length::Exact(r) => r.is_negative(),
            Length::Approx(v) => *v < 0.0,
        }
    }

    /// Square root of a nonnegative rational: exact when it is a perfect square.
    pub fn sqrt_of(square: &BigRational, backend: Backend) -> Length {
        if backend == Backend::Rational {
            if let Some(root) = exact_sqrt(square) {
                return Length::Exact(root);
            }
        }
        Length::Approx(rational_to_f64(square).sqrt())
    }

    /// Decision-grade equality: exact for two exact values, otherwise
    /// `|a - b| <= 1e-9 * max(1, |b|)`.
    pub fn approx_eq(&self, other: &Length) -> bool {
        match (self, other) {
            (Length::Exact(a), Length::Exact(b)) => a == b,
            _ => {
                let (a, b) = (self.to_f64(), other.to_f64());
                (a - b).abs() <= TOLERANCE * b.abs().max(1.0)
            }
        }
    }

    /// `self < other` with a tolerance margin when either side is approximate.
    pub fn definitely_lt(&self, other: &Length) -> bool {
        match (self, other) {
            (Length::Exact(a), Length::Exact(b)) => a < b,
            _ => {
                let (a, b) = (self.to_f64(), other.to_f64());
                a < b - TOLERANCE * b.abs().max(1.0)
            }
        }
    }

    pub fn max(self, other: Length) -> Length {
        if other > self {
            other
        } else {
            self
        }
    }

    pub fn min(self, other: Length) -> Length {
        if other < self {
            other
        } else {
            self
        }
    }
}

impl Default for Length {
    fn default() -> Self {
        Length::zero()
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // numerator or denominator overflow f64; fall back to scaled division
        let n = r.numer().bits() as i64;
        let d = r.denom().bits() as i64;
        let shift = (n.max(d) - 1000).max(0) as usize;
        let num = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
        let den = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
        num / den
    })
}

fn exact_sqrt_uint(v: &BigUint) -> Option<BigUint> {
    let root = v.sqrt();
    (&root * &root == *v).then_some(root)
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn exact_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    // BigRational is always reduced, so num/den must both be squares
    let num = exact_sqrt_uint(r.numer().magnitude())?;
    let den = exact_sqrt_uint(r.denom().magnitude())?;
    Some(BigRational::new(BigInt::from(num), BigInt::from(den)))
}

impl Add for &Length {
    type Output = Length;

    fn add(self, rhs: &Length) -> Length {
        match (self, rhs) {
            (Length::Exact(a), Length::Exact(b)) => Length::Exact(a + b),
            _ => Length::Approx(self.to_f64() + rhs.to_f64()),
        }
    }
}

impl Add for Length {
    type Output = Length;

    fn add(self, rhs: Length) -> Length {
        match (self, rhs) {
            (Length::Exact(a), Length::Exact(b)) => Length::Exact(a + b),
            (a, b) => Length::Approx(a.to_f64() + b.to_f64()),
        }
    }
}

impl Add<&Length> for Length {
    type Output = Length;

    fn add(self, rhs: &Length) -> Length {
        match (self, rhs) {
            (Length::Exact(a), Length::Exact(b)) => Length::Exact(a + b),
            (a, b) => Length::Approx(a.to_f64() + b.to_f64()),
        }
    }
}

impl Sub for &Length {
    type Output = Length;

    fn sub(self, rhs: &Length) -> Length {
        match (self, rhs) {
            (Length::Exact(a), Length::Exact(b)) => Length::Exact(a - b),
            _ => Length::Approx(self.to_f64() - rhs.to_f64()),
        }
    }
}

impl Sub for Length {
    type Output = Length;

    fn sub(self, rhs: Length) -> Length {
        &self - &rhs
    }
}

impl std::iter::Sum for Length {
    fn sum<I: Iterator<Item = Length>>(iter: I) -> Length {
        iter.fold(Length::zero(), |acc, x| acc + x)
    }
}

// Ordering is exact between exact values and falls back to a total order on
// doubles otherwise. Tolerance-aware comparisons live in `approx_eq` and
// `definitely_lt`.
impl Ord for Length {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Length::Exact(a), Length::Exact(b)) => a.cmp(b),
            _ => self.to_f64().total_cmp(&other.to_f64()),
        }
    }
}

impl PartialOrd for Length {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for Length {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Length {}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Exact(r) => write!(f, "{}", format_rational(r)),
            Length::Approx(v) => write!(f, "{v}"),
        }
    }
}

impl From<BigRational> for Length {
    fn from(r: BigRational) -> Self {
        Length::Exact(r)
    }
}

/// Exact lengths serialize as `"p/q"` strings, approximate ones as numbers.
impl serde::Serialize for Length {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Length::Exact(r) => s.serialize_str(&format_rational(r)),
            Length::Approx(v) => s.serialize_f64(*v),
        }
    }
}

impl<'de> serde::Deserialize<'de> for Length {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Number(f64),
        }
        match Raw::deserialize(d)? {
            Raw::Text(t) => parse_rational(&t).map(Length::Exact).map_err(serde::de::Error::custom),
            Raw::Number(v) => Ok(Length::Approx(v)),
        }
    }
}

/// Renders `p/q` (or `p` for integers); parses back bit-exactly.
pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses an integer, a decimal literal (`-1.25`, `3e-2`) or a `p/q` literal.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty numeral".into());
    }
    if let Some((p, q)) = s.split_once('/') {
        let num: BigInt = p.trim().parse().map_err(|_| format!("bad numerator in `{s}`"))?;
        let den: BigInt = q.trim().parse().map_err(|_| format!("bad denominator in `{s}`"))?;
        if den.is_zero() {
            return Err(format!("zero denominator in `{s}`"));
        }
        return Ok(BigRational::new(num, den));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => {
            let e: i32 = s[i + 1..].parse().map_err(|_| format!("bad exponent in `{s}`"))?;
            (&s[..i], e)
        }
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(format!("malformed numeral `{s}`"));
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(format!("malformed numeral `{s}`"));
    }
    let all: BigInt = format!("0{int_part}{frac_part}").parse().map_err(|_| format!("malformed numeral `{s}`"))?;
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut value = if scale >= 0 {
        BigRational::from_integer(all * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(all, num_traits::pow(ten, (-scale) as usize))
    };
    if neg {
        value = -value;
    }
    Ok(value)
}
