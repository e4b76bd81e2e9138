//! Decimal renderings of exact values, correct in every printed digit.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Pow, Signed, Zero};

use super::quadext::QuadExtNumber;
use super::rational::Rational;
use super::Sign;

/// Rounds `r` to `sig` significant digits (half away from zero).
pub fn render_rational(r: &Rational, sig: usize) -> String {
    let sig = sig.max(1);
    if r.is_zero() {
        return "0".to_string();
    }
    let abs = r.abs();
    let mut exp = decimal_exponent(&abs);
    // scaled = |r| · 10^(sig-1-exp) lies in [10^(sig-1), 10^sig)
    let scaled = scale_pow10(&abs, sig as i64 - 1 - exp);
    let (q, rem) = scaled.numer().div_rem(scaled.denom());
    let mut digits = if rem * 2u32 >= *scaled.denom() {
        q + 1u32
    } else {
        q
    };
    if digits == pow10(sig as u64) {
        digits = pow10(sig as u64 - 1);
        exp += 1;
    }
    layout(&digits.to_string(), exp, r.is_negative())
}

/// Renders `p + q√d` to `sig` significant digits. Irrational values are
/// bracketed between integer bounds at growing scale until the bracket
/// rounds to a single string.
pub fn render_quadext(v: &QuadExtNumber, sig: usize) -> String {
    let sig = sig.max(1);
    if let Some(r) = v.as_rational() {
        return render_rational(r, sig);
    }
    if v.sign() == Sign::Zero {
        return "0".to_string();
    }
    let mut k: i64 = sig as i64 + 10;
    loop {
        let (lo, hi) = scaled_bounds(v, k);
        let threshold = pow10(sig as u64 + 3);
        let same_side =
            (lo.is_positive() && hi.is_positive()) || (lo.is_negative() && hi.is_negative());
        if same_side && lo.abs() >= threshold && hi.abs() >= threshold {
            let a = round_integer(&lo, k, sig);
            let b = round_integer(&hi, k, sig);
            if a == b {
                return a;
            }
        }
        k += 10;
    }
}

/// Integers `lo ≤ v·10^k ≤ hi` with `hi − lo ≤ 2`.
fn scaled_bounds(v: &QuadExtNumber, k: i64) -> (BigInt, BigInt) {
    let p = scale_pow10(v.rational_part(), k);
    let p_floor = p.floor().to_integer();
    let q = v.surd_part();
    let t = scale_pow10(&(q * q * v.radicand()), 2 * k);
    let s = t.floor().to_integer().sqrt();
    if q.is_negative() {
        (&p_floor - &s - 1u32, p_floor + 1u32 - s)
    } else {
        (&p_floor + &s, p_floor + s + 2u32)
    }
}

fn round_integer(m: &BigInt, k: i64, sig: usize) -> String {
    let text = m.abs().to_string();
    let len = text.len();
    let mut exp = len as i64 - 1 - k;
    let head: BigInt = text[..sig].parse().unwrap();
    let round_up = text.as_bytes()[sig] >= b'5';
    let mut digits = if round_up { head + 1u32 } else { head };
    if digits == pow10(sig as u64) {
        digits = pow10(sig as u64 - 1);
        exp += 1;
    }
    layout(&digits.to_string(), exp, m.is_negative())
}

fn pow10(n: u64) -> BigInt {
    Pow::pow(&BigInt::from(10), n)
}

fn scale_pow10(r: &Rational, k: i64) -> Rational {
    if k >= 0 {
        r * Rational::from_integer(pow10(k as u64))
    } else {
        r / Rational::from_integer(pow10((-k) as u64))
    }
}

/// floor(log10(r)) for r > 0.
fn decimal_exponent(r: &Rational) -> i64 {
    let guess = r.numer().to_string().len() as i64 - r.denom().to_string().len() as i64;
    let mut e = guess;
    let one = Rational::from_integer(BigInt::from(1));
    while scale_pow10(r, -e) < one {
        e -= 1;
    }
    while scale_pow10(r, -(e + 1)) >= one {
        e += 1;
    }
    e
}

/// `digits` holds the significant digits d₀d₁…; the value is d₀.d₁… × 10^exp.
fn layout(digits: &str, exp: i64, negative: bool) -> String {
    let sign = if negative { "-" } else { "" };
    let body = if (-6..15).contains(&exp) {
        if exp >= 0 {
            let int_len = exp as usize + 1;
            if digits.len() <= int_len {
                format!("{}{}", digits, "0".repeat(int_len - digits.len()))
            } else {
                trim_fraction(&format!("{}.{}", &digits[..int_len], &digits[int_len..]))
            }
        } else {
            let zeros = (-exp - 1) as usize;
            trim_fraction(&format!("0.{}{}", "0".repeat(zeros), digits))
        }
    } else {
        let mantissa = if digits.len() > 1 {
            trim_fraction(&format!("{}.{}", &digits[..1], &digits[1..]))
        } else {
            digits.to_string()
        };
        format!("{mantissa}e{exp}")
    };
    format!("{sign}{body}")
}

fn trim_fraction(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, parse_rational, rat};

    #[test]
    fn rational_renderings() {
        assert_eq!(render_rational(&rat(56, 3), 12), "18.6666666667");
        assert_eq!(render_rational(&int(1280), 12), "1280");
        assert_eq!(render_rational(&rat(-169, 4), 12), "-42.25");
        assert_eq!(render_rational(&rat(64, 27), 4), "2.37");
        assert_eq!(render_rational(&rat(999_999, 1_000_000), 3), "1");
        assert_eq!(render_rational(&rat(1, 3_000_000_000), 3), "3.33e-10");
        assert_eq!(render_rational(&int(0), 12), "0");
    }

    #[test]
    fn surd_renderings() {
        let l0 = QuadExtNumber::new(int(0), rat(2, 3), int(3)).unwrap();
        assert_eq!(render_quadext(&l0, 12), "1.15470053838");
        let g = QuadExtNumber::new(rat(-1, 4), rat(4, 9), int(3)).unwrap();
        // (16√3 − 9)/36 = 0.519800...
        assert_eq!(render_quadext(&g, 6), "0.5198");
        let neg = QuadExtNumber::new(rat(-10, 3), rat(1, 3), int(73)).unwrap();
        assert_eq!(render_quadext(&neg, 5), "-0.48533");
    }

    #[test]
    fn printed_digits_are_within_half_an_ulp() {
        let v = QuadExtNumber::new(rat(7, 11), rat(-13, 5), int(2)).unwrap();
        let text = render_quadext(&v, 12);
        let printed = parse_rational(&text).unwrap();
        // |v − printed| ≤ ½·10^(e−11), with e = 0 here (v ≈ −3.04)
        let half_ulp = rat(1, 2) * Rational::new(BigInt::from(1), pow10(11));
        let diff = v
            .checked_sub(&QuadExtNumber::embed(printed, int(2)))
            .unwrap();
        let lo = diff
            .checked_add(&QuadExtNumber::embed(half_ulp.clone(), int(2)))
            .unwrap();
        let hi = diff
            .checked_sub(&QuadExtNumber::embed(half_ulp, int(2)))
            .unwrap();
        assert_ne!(lo.sign(), Sign::Negative);
        assert_ne!(hi.sign(), Sign::Positive);
    }
}
