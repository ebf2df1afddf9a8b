//! Exponents, exact rationals and p-th power norms.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Relative tolerance for comparisons in floating-point mode.
pub const TOLERANCE: f64 = 1e-9;

/// The exponent `p >= 1` of an ℓp space.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct Exponent(f64);

impl Exponent {
    pub fn new(p: f64) -> Result<Self> {
        if p.is_finite() && p >= 1.0 {
            Ok(Exponent(p))
        } else {
            Err(Error::InvalidExponent(p))
        }
    }

    pub fn integer(p: u32) -> Self {
        assert!(p >= 1, "exponent must be at least 1");
        Exponent(p as f64)
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// `Some(p)` when exact arithmetic applies.
    pub fn as_integer(self) -> Option<u32> {
        if self.0.fract() == 0.0 && self.0 <= 1024.0 {
            Some(self.0 as u32)
        } else {
            None
        }
    }

    pub fn is_exact(self) -> bool {
        self.as_integer().is_some()
    }

    /// `|x|^p` for a rational coefficient.
    pub fn abs_pow(self, x: &Rational) -> NormPow {
        match self.as_integer() {
            Some(k) => NormPow::Exact(num_traits::pow(x.abs(), k as usize)),
            None => NormPow::Approx(to_f64(x).abs().powf(self.0)),
        }
    }

    pub fn zero_pow(self) -> NormPow {
        match self.as_integer() {
            Some(_) => NormPow::Exact(Rational::zero()),
            None => NormPow::Approx(0.0),
        }
    }

    /// `x^p` for a real sample value.
    pub fn pow_f64(self, x: f64) -> f64 {
        match self.as_integer() {
            Some(k) => x.powi(k as i32),
            None => x.powf(self.0),
        }
    }
}

// Construction rejects NaN.
impl Eq for Exponent {}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_integer() {
            Some(k) => write!(f, "{k}"),
            None => write!(f, "{}", self.0),
        }
    }
}

/// A p-th power of a norm: exact for integer `p`, floating otherwise.
#[derive(Clone, Debug, PartialEq)]
pub enum NormPow {
    Exact(Rational),
    Approx(f64),
}

impl NormPow {
    pub fn to_f64(&self) -> f64 {
        match self {
            NormPow::Exact(r) => to_f64(r),
            NormPow::Approx(x) => *x,
        }
    }

    pub fn add(&self, other: &NormPow) -> NormPow {
        match (self, other) {
            (NormPow::Exact(a), NormPow::Exact(b)) => NormPow::Exact(a + b),
            _ => NormPow::Approx(self.to_f64() + other.to_f64()),
        }
    }

    /// Equality: exact when both sides are exact, relative tolerance otherwise.
    pub fn matches(&self, other: &NormPow) -> bool {
        match (self, other) {
            (NormPow::Exact(a), NormPow::Exact(b)) => a == b,
            _ => approx_eq(self.to_f64(), other.to_f64()),
        }
    }

    pub fn compare(&self, other: &NormPow) -> Ordering {
        match (self, other) {
            (NormPow::Exact(a), NormPow::Exact(b)) => a.cmp(b),
            _ => {
                let (a, b) = (self.to_f64(), other.to_f64());
                if approx_eq(a, b) {
                    Ordering::Equal
                } else {
                    a.partial_cmp(&b).unwrap_or(Ordering::Equal)
                }
            }
        }
    }

    /// The norm itself, `(self)^(1/p)`. Exact perfect powers come out exact.
    pub fn root(&self, p: Exponent) -> f64 {
        match (self, p.as_integer()) {
            (NormPow::Exact(r), Some(k)) => exact_root(r, k).unwrap_or_else(|| to_f64(r).powf(1.0 / p.0)),
            _ => self.to_f64().powf(1.0 / p.0),
        }
    }
}

impl fmt::Display for NormPow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormPow::Exact(r) => write!(f, "{}", r),
            NormPow::Approx(x) => write!(f, "{}", decimal(*x)),
        }
    }
}

pub fn approx_eq(a: f64, b: f64) -> bool {
    (a - b).abs() <= TOLERANCE * a.abs().max(b.abs()).max(1.0)
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Decimal rendering with 9 fractional digits.
pub fn decimal(x: f64) -> String {
    format!("{x:.9}")
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn integer_root(n: &BigInt, k: u32) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let guess = n.to_f64()?.powf(1.0 / k as f64).round();
    let guess = BigInt::from(guess as i64);
    for d in [-1i64, 0, 1] {
        let c: BigInt = &guess + d;
        if !c.is_negative() && num_traits::pow(c.clone(), k as usize) == *n {
            return Some(c);
        }
    }
    None
}

fn exact_root(r: &Rational, k: u32) -> Option<f64> {
    let n = integer_root(r.numer(), k)?;
    let d = integer_root(r.denom(), k)?;
    Some(to_f64(&Rational::new(n, d)))
}

/// Parses `3`, `-2`, `3/2` or a decimal such as `0.25` into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || Error::Config(format!("`{text}` is not a rational number"));
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    let (mantissa, exp10) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty()
        || !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let all: BigInt = format!("{int_part}{frac_part}0").parse().map_err(|_| bad())?;
    let all = all / BigInt::from(10);
    let scale = exp10 - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut r = Rational::from_integer(all);
    if scale >= 0 {
        r *= Rational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        r /= Rational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Ok(if neg { -r } else { r })
}

/// Smallest positive integer `c` with `floor + 2 c^p >= target`.
pub fn smallest_padding(floor: &NormPow, target: &NormPow, p: Exponent) -> u64 {
    let mut c = 1u64;
    loop {
        let pad = p.abs_pow(&int(c as i64));
        let total = floor.add(&pad.add(&pad));
        if total.compare(target) != Ordering::Less {
            return c;
        }
        c += 1;
    }
}
