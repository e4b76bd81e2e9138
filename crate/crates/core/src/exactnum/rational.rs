use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Signed, ToPrimitive, Zero};

use super::Sign;
use crate::error::{ExactError, ParseError};

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` in canonical form. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn sign_of(r: &Rational) -> Sign {
    if r.is_zero() {
        Sign::Zero
    } else if r.is_positive() {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational, ExactError> {
    if b.is_zero() {
        return Err(ExactError::DivisionByZero);
    }
    Ok(a / b)
}

pub fn rat_arith(a: &Rational, b: &Rational, op: ArithOp) -> Result<Rational, ExactError> {
    match op {
        ArithOp::Add => Ok(a + b),
        ArithOp::Sub => Ok(a - b),
        ArithOp::Mul => Ok(a * b),
        ArithOp::Div => checked_div(a, b),
    }
}

/// The nonnegative rational `e` with `e² = r`, if one exists.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &n * &n == *r.numer() && &d * &d == *r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // Fall back through shifted integers when either part overflows f64.
    let n = r.numer();
    let d = r.denom();
    let shift = n.bits().max(d.bits()).saturating_sub(900) as usize;
    let nf = (n >> shift).to_f64().unwrap_or(0.0);
    let df = (d >> shift).to_f64().unwrap_or(0.0);
    nf / df
}

/// Parses a finite decimal (`-0.25`, `3`, `1e-3`, `.5`) or a fraction
/// `p/q` into an exact rational. Decimals are converted digit-for-digit,
/// never through `f64`.
pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let chars: Vec<char> = s.chars().collect();
    if chars.is_empty() {
        return Err(ParseError::new(0, "empty coefficient"));
    }
    if let Some(slash) = chars.iter().position(|&c| c == '/') {
        let num = parse_integer(&chars[..slash], 0, true)?;
        let den = parse_integer(&chars[slash + 1..], slash + 1, false)?;
        if den.is_zero() {
            return Err(ParseError::new(slash + 1, "zero denominator"));
        }
        return Ok(Rational::new(num, den));
    }
    parse_decimal(&chars)
}

fn parse_integer(chars: &[char], offset: usize, allow_sign: bool) -> Result<BigInt, ParseError> {
    let mut i = 0;
    let mut negative = false;
    if allow_sign && matches!(chars.first(), Some('+') | Some('-')) {
        negative = chars[0] == '-';
        i = 1;
    }
    if i == chars.len() {
        return Err(ParseError::new(offset + i, "expected digits"));
    }
    let mut value = BigInt::zero();
    for (j, &c) in chars.iter().enumerate().skip(i) {
        let digit = c
            .to_digit(10)
            .ok_or_else(|| ParseError::new(offset + j, format!("unexpected character '{c}'")))?;
        value = value * 10u32 + digit;
    }
    Ok(if negative { -value } else { value })
}

fn parse_decimal(chars: &[char]) -> Result<Rational, ParseError> {
    let mut i = 0;
    let mut negative = false;
    if matches!(chars[0], '+' | '-') {
        negative = chars[0] == '-';
        i = 1;
    }
    let mut mantissa = BigInt::zero();
    let mut digits = 0usize;
    let mut frac_digits = 0i64;
    let mut seen_point = false;
    while i < chars.len() {
        let c = chars[i];
        if let Some(d) = c.to_digit(10) {
            mantissa = mantissa * 10u32 + d;
            digits += 1;
            if seen_point {
                frac_digits += 1;
            }
        } else if c == '.' && !seen_point {
            seen_point = true;
        } else if c == 'e' || c == 'E' {
            break;
        } else {
            return Err(ParseError::new(i, format!("unexpected character '{c}'")));
        }
        i += 1;
    }
    if digits == 0 {
        return Err(ParseError::new(i, "expected digits"));
    }
    let mut exponent = -frac_digits;
    if i < chars.len() {
        let start = i + 1;
        let exp = parse_integer(&chars[start..], start, true)?;
        let exp = exp
            .to_i64()
            .filter(|e| e.abs() <= 10_000)
            .ok_or_else(|| ParseError::new(start, "exponent out of range"))?;
        exponent += exp;
    }
    let ten = BigInt::from(10);
    let mut value = if exponent >= 0 {
        Rational::from_integer(mantissa * Pow::pow(&ten, exponent as u64))
    } else {
        Rational::new(mantissa, Pow::pow(&ten, (-exponent) as u64))
    };
    if negative {
        value = -value;
    }
    Ok(value)
}
