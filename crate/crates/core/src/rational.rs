//! Exact scalars.
//!
//! Every quantity in the crate is a [`Rational`]; the only extension is the
//! distinguished [`Extended::Infinity`] used for `t = ∞` and for modulars of
//! functions that leave the effective domain of an Orlicz function.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// `n / d` as an exact rational. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `2^e` for any integer exponent.
pub fn pow2(e: i64) -> Rational {
    let two = BigInt::from(2u8);
    if e >= 0 {
        Rational::from_integer(num_traits::pow(two, e as usize))
    } else {
        Rational::new(BigInt::one(), num_traits::pow(two, (-e) as usize))
    }
}

/// `x^e` for a signed exponent; `x` must be nonzero when `e < 0`.
pub fn powi(x: &Rational, e: i64) -> Rational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

/// Largest `n` with `2^n <= x`, for `x > 0`.
pub fn floor_log2(x: &Rational) -> i64 {
    debug_assert!(x.is_positive());
    let mut n = x.numer().bits() as i64 - x.denom().bits() as i64;
    while &pow2(n) > x {
        n -= 1;
    }
    while &pow2(n + 1) <= x {
        n += 1;
    }
    n
}

pub fn min(a: &Rational, b: &Rational) -> Rational {
    if a <= b {
        a.clone()
    } else {
        b.clone()
    }
}

pub fn max(a: &Rational, b: &Rational) -> Rational {
    if a >= b {
        a.clone()
    } else {
        b.clone()
    }
}

/// Error from [`parse_rational`]. `offset` is the byte position of the
/// offending character within the input text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (at byte {})", self.message, self.offset)
    }
}

impl std::error::Error for ParseRationalError {}

/// Parses `"p"` or `"p/q"` with optional leading `-`. Decimals and
/// exponents are rejected.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    fn integer(part: &str, base: usize, signed: bool) -> Result<BigInt, ParseRationalError> {
        let (neg, digits, skip) = match part.strip_prefix('-') {
            Some(rest) if signed => (true, rest, 1),
            _ => (false, part, 0),
        };
        if digits.is_empty() {
            return Err(ParseRationalError {
                offset: base + skip,
                message: "expected digits".into(),
            });
        }
        if let Some(pos) = digits.find(|c: char| !c.is_ascii_digit()) {
            return Err(ParseRationalError {
                offset: base + skip + pos,
                message: format!("unexpected character {:?}", digits[pos..].chars().next().unwrap()),
            });
        }
        let value: BigInt = digits.parse().expect("digits only");
        Ok(if neg { -value } else { value })
    }

    match text.split_once('/') {
        None => Ok(Rational::from_integer(integer(text, 0, true)?)),
        Some((n, d)) => {
            let numer = integer(n, 0, true)?;
            let denom = integer(d, n.len() + 1, false)?;
            if denom.is_zero() {
                return Err(ParseRationalError {
                    offset: n.len() + 1,
                    message: "zero denominator".into(),
                });
            }
            Ok(Rational::new(numer, denom))
        }
    }
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Nonnegative extended value: a finite rational or `+∞`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Extended {
    Finite(Rational),
    Infinity,
}

impl Extended {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Extended::Finite(x) => Some(x),
            Extended::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Extended::Infinity)
    }

    pub fn add(&self, other: &Extended) -> Extended {
        match (self, other) {
            (Extended::Finite(a), Extended::Finite(b)) => Extended::Finite(a + b),
            _ => Extended::Infinity,
        }
    }

    /// Product with a nonnegative rational; `∞ · 0 = 0` (measure-theoretic convention).
    pub fn scale(&self, by: &Rational) -> Extended {
        match self {
            Extended::Finite(a) => Extended::Finite(a * by),
            Extended::Infinity if by.is_zero() => Extended::Finite(Rational::zero()),
            Extended::Infinity => Extended::Infinity,
        }
    }
}

impl From<Rational> for Extended {
    fn from(x: Rational) -> Self {
        Extended::Finite(x)
    }
}

impl PartialOrd for Extended {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Extended {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Extended::Finite(a), Extended::Finite(b)) => a.cmp(b),
            (Extended::Finite(_), Extended::Infinity) => Ordering::Less,
            (Extended::Infinity, Extended::Finite(_)) => Ordering::Greater,
            (Extended::Infinity, Extended::Infinity) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(x) => f.write_str(&format_rational(x)),
            Extended::Infinity => f.write_str("inf"),
        }
    }
}

/// Enclosure `[lo, hi]` of the real `k`-th root of `a >= 0`, with
/// `hi - lo <= width`.
pub fn root_enclosure(a: &Rational, k: u32, width: &Rational) -> (Rational, Rational) {
    if a.is_zero() {
        return (Rational::zero(), Rational::zero());
    }
    let one = Rational::one();
    let mut lo = Rational::zero();
    let mut hi = max(&one, a);
    while &hi - &lo > *width {
        let mid = (&lo + &hi) / int(2);
        if &num_traits::pow(mid.clone(), k as usize) <= a {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// Integer part of a nonnegative rational.
pub fn floor(x: &Rational) -> BigInt {
    x.numer().div_floor(x.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-4").unwrap(), int(-4));
        assert_eq!(format_rational(&rat(6, 3)), "2");
        assert_eq!(format_rational(&rat(-1, 3)), "-1/3");
        let err = parse_rational("1.5").unwrap_err();
        assert_eq!(err.offset, 1);
        assert_eq!(parse_rational("1/0").unwrap_err().message, "zero denominator");
        assert_eq!(parse_rational("1/-2").unwrap_err().offset, 2);
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn floor_log2_brackets() {
        for (x, n) in [(rat(1, 1), 0), (rat(3, 1), 1), (rat(4, 1), 2), (rat(1, 3), -2), (rat(1, 4), -2)] {
            assert_eq!(floor_log2(&x), n, "{x}");
        }
    }

    #[test]
    fn root_enclosure_contains_root() {
        let (lo, hi) = root_enclosure(&int(2), 2, &pow2(-30));
        assert!(&lo * &lo <= int(2) && &hi * &hi >= int(2));
        assert!(&hi - &lo <= pow2(-30));
        let (lo, hi) = root_enclosure(&rat(1, 8), 3, &pow2(-20));
        assert!(lo <= rat(1, 2) && rat(1, 2) <= hi);
    }

    #[test]
    fn extended_order() {
        assert!(Extended::Finite(int(5)) < Extended::Infinity);
        assert_eq!(Extended::Infinity.scale(&int(0)), Extended::Finite(int(0)));
    }
}
