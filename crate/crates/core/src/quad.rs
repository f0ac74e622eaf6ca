//! Exact arithmetic in the quadratic field ℚ(√2).
//!
//! [`QuadNum`] stores a value `a + b·√2` as a pair of arbitrary-precision
//! rationals in canonical (lowest-terms) form, so structural equality is
//! mathematical equality. All field operations, integer powers, sign tests
//! and comparisons are exact; decimal output is produced with interval
//! refinement of √2 so the last printed digit is correctly rounded.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator (`0` is `0/1`).
pub type Rational = BigRational;

/// Errors from ℚ(√2) arithmetic and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuadError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero cannot be raised to a negative power")]
    ZeroToNegativePower,
    #[error("invalid ℚ(√2) literal `{0}`: expected `<a_num>/<a_den> + <b_num>/<b_den>*sqrt2`")]
    Parse(String),
}

/// An exact element `a + b·√2` of ℚ(√2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadNum {
    a: Rational,
    b: Rational,
}

impl QuadNum {
    /// Builds `a + b·√2`. The parts are canonical by construction because
    /// `BigRational` always reduces.
    pub fn new(a: Rational, b: Rational) -> Self {
        QuadNum { a, b }
    }

    pub fn zero() -> Self {
        QuadNum::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        QuadNum::new(Rational::one(), Rational::zero())
    }

    /// The generator √2 itself.
    pub fn sqrt2() -> Self {
        QuadNum::new(Rational::zero(), Rational::one())
    }

    pub fn integer(n: i64) -> Self {
        QuadNum::new(Rational::from_integer(n.into()), Rational::zero())
    }

    /// Builds the rational `num/den`.
    ///
    /// Panics when `den == 0`, mirroring `BigRational::new`.
    pub fn ratio(num: i64, den: i64) -> Self {
        QuadNum::new(Rational::new(num.into(), den.into()), Rational::zero())
    }

    pub fn from_rational(r: Rational) -> Self {
        QuadNum::new(r, Rational::zero())
    }

    /// Builds `(an/ad) + (bn/bd)·√2`. Panics when a denominator is zero.
    pub fn parts(an: i64, ad: i64, bn: i64, bd: i64) -> Self {
        QuadNum::new(Rational::new(an.into(), ad.into()), Rational::new(bn.into(), bd.into()))
    }

    /// Rational part `a`.
    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    /// Coefficient `b` of √2.
    pub fn sqrt2_coeff(&self) -> &Rational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// True when the value lies in ℚ (no √2 component).
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Field conjugate `a − b·√2`.
    pub fn conjugate(&self) -> Self {
        QuadNum::new(self.a.clone(), -self.b.clone())
    }

    /// Field norm `x · conjugate(x) = a² − 2b²`; zero iff `x` is zero.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_integer(2.into()) * &self.b * &self.b
    }

    /// Multiplicative inverse, or an error on zero.
    pub fn inverse(&self) -> Result<Self, QuadError> {
        if self.is_zero() {
            return Err(QuadError::DivisionByZero);
        }
        let n = self.norm();
        Ok(QuadNum::new(&self.a / &n, -&self.b / &n))
    }

    /// Exact division, or an error when `rhs` is zero.
    pub fn try_div(&self, rhs: &Self) -> Result<Self, QuadError> {
        Ok(self * &rhs.inverse()?)
    }

    /// Exact integer power by repeated squaring; negative exponents invert
    /// first and therefore require a nonzero base.
    pub fn pow(&self, k: i64) -> Result<Self, QuadError> {
        if k == 0 {
            return Ok(QuadNum::one());
        }
        let base = if k < 0 {
            self.inverse().map_err(|_| QuadError::ZeroToNegativePower)?
        } else {
            self.clone()
        };
        let mut exp = k.unsigned_abs();
        let mut base = base;
        let mut acc = QuadNum::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Exact sign: −1, 0 or +1, decided without floating point.
    ///
    /// In the mixed-sign case `a` and `−b√2` compete, so the comparison
    /// reduces to `a²` versus `2b²` (equality is impossible because √2 is
    /// irrational).
    pub fn sign(&self) -> i8 {
        let sa = rational_sign(&self.a);
        let sb = rational_sign(&self.b);
        match (sa, sb) {
            (0, s) | (s, 0) => s,
            (1, 1) => 1,
            (-1, -1) => -1,
            _ => {
                // a and b·√2 have opposite signs: |a| vs √2|b| ⇔ a² vs 2b².
                let cmp = rational_sign(&self.norm());
                if sa > 0 {
                    cmp
                } else {
                    -cmp
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    /// Decimal expansion with `digits` significant digits, correctly rounded.
    /// Trailing fractional zeros are trimmed. `digits` must be ≥ 1.
    pub fn decimal(&self, digits: u32) -> String {
        assert!(digits >= 1, "decimal() needs at least one significant digit");
        match self.rounded_sig(digits) {
            None => "0".to_string(),
            Some(r) => format_rounded(&r, true),
        }
    }

    /// Nearest 64-bit float (within 1 ulp of the true value; values beyond
    /// the f64 range overflow to ±∞ or underflow to 0).
    pub fn to_f64(&self) -> f64 {
        // Fast exact path: small rationals convert with one IEEE division.
        if self.b.is_zero() {
            if let (Some(n), Some(d)) = (self.a.numer().to_i64(), self.a.denom().to_i64()) {
                if n.abs() < (1i64 << 53) && d < (1i64 << 53) {
                    return n as f64 / d as f64;
                }
            }
        }
        match self.rounded_sig(22) {
            None => 0.0,
            Some(r) => format_rounded(&r, false)
                .parse::<f64>()
                .expect("scientific literal always parses"),
        }
    }

    /// Decimal string plus nearest binary float.
    pub fn to_decimal(&self, digits: u32) -> (String, f64) {
        (self.decimal(digits), self.to_f64())
    }

    /// Correctly rounded `digits`-digit mantissa and exponent, or `None`
    /// for zero. Uses interval refinement: √2 is bracketed by integer
    /// square roots with growing guard precision until both interval ends
    /// round identically.
    fn rounded_sig(&self, digits: u32) -> Option<RoundedSig> {
        if self.is_zero() {
            return None;
        }
        if self.b.is_zero() {
            return Some(round_rational_sig(&self.a, digits));
        }
        let mut guard = digits as u64 + 24;
        loop {
            let scale = pow10(guard);
            let two_scaled: BigInt = BigInt::from(2) * &scale * &scale;
            let root = two_scaled.sqrt();
            let lo_root = Rational::new(root.clone(), scale.clone());
            let hi_root = Rational::new(root + BigInt::one(), scale);
            let (blo, bhi) = if self.b.is_positive() {
                (&self.b * &lo_root, &self.b * &hi_root)
            } else {
                (&self.b * &hi_root, &self.b * &lo_root)
            };
            let lo = &self.a + blo;
            let hi = &self.a + bhi;
            if !lo.is_zero() && !hi.is_zero() && lo.is_positive() == hi.is_positive() {
                let rlo = round_rational_sig(&lo, digits);
                let rhi = round_rational_sig(&hi, digits);
                if rlo == rhi {
                    return Some(rlo);
                }
            }
            guard *= 2;
        }
    }
}

/// Formats a finite float with `digits` significant digits under the same
/// rounding and layout rules as [`QuadNum::decimal`]. Non-finite values and
/// zero print as `f64` does.
pub fn f64_to_sig_string(v: f64, digits: u32) -> String {
    assert!(digits >= 1, "need at least one significant digit");
    if v == 0.0 || !v.is_finite() {
        return v.to_string();
    }
    let exact = Rational::from_float(v).expect("finite float converts exactly");
    format_rounded(&round_rational_sig(&exact, digits), true)
}

fn rational_sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// A nonzero value rounded to significant digits: `mantissa` has exactly
/// `digits` decimal digits and the value is `±0.mantissa · 10^(exp10+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct RoundedSig {
    negative: bool,
    mantissa: String,
    exp10: i64,
}

fn pow10(e: u64) -> BigInt {
    BigInt::from(10u32).pow(e as u32)
}

fn digit_count(n: &BigInt) -> i64 {
    n.to_string().trim_start_matches('-').len() as i64
}

/// `floor(log10(num/den))` for positive `num`, `den`.
fn floor_log10(num: &BigInt, den: &BigInt) -> i64 {
    let t = digit_count(num) - digit_count(den);
    // num/den ∈ [10^(t-1), 10^(t+1)); one comparison settles it.
    let ge = if t >= 0 {
        *num >= den * pow10(t as u64)
    } else {
        num * pow10((-t) as u64) >= *den
    };
    if ge {
        t
    } else {
        t - 1
    }
}

/// Rounds `p/q` (both positive) to the nearest integer, ties away from zero.
fn round_half_away(p: &BigInt, q: &BigInt) -> BigInt {
    (BigInt::from(2) * p + q).div_floor(&(BigInt::from(2) * q))
}

fn round_rational_sig(x: &Rational, digits: u32) -> RoundedSig {
    debug_assert!(!x.is_zero());
    let negative = x.is_negative();
    let num = x.numer().abs();
    let den = x.denom().clone();
    let mut exp10 = floor_log10(&num, &den);
    let shift = digits as i64 - 1 - exp10;
    let mut m = if shift >= 0 {
        round_half_away(&(&num * pow10(shift as u64)), &den)
    } else {
        round_half_away(&num, &(&den * pow10((-shift) as u64)))
    };
    // Rounding up may carry into one extra digit (e.g. 9.97 → 10 at 2 digits).
    if m == pow10(digits as u64) {
        m /= BigInt::from(10);
        exp10 += 1;
    }
    let mantissa = m.to_string();
    debug_assert_eq!(mantissa.len(), digits as usize);
    RoundedSig { negative, mantissa, exp10 }
}

/// Renders a rounded value. `trim` drops trailing fractional zeros (human
/// output); untrimmed scientific form is used for float conversion.
fn format_rounded(r: &RoundedSig, trim: bool) -> String {
    let digits = r.mantissa.len() as i64;
    let sign = if r.negative { "-" } else { "" };
    let body = if r.exp10 >= -5 && r.exp10 < digits.max(18) {
        if r.exp10 >= digits - 1 {
            // All digits before the point, maybe padded with zeros.
            let mut s = r.mantissa.clone();
            s.push_str(&"0".repeat((r.exp10 - digits + 1) as usize));
            s
        } else if r.exp10 >= 0 {
            let split = (r.exp10 + 1) as usize;
            let (int, frac) = r.mantissa.split_at(split);
            join_point(int, frac, trim)
        } else {
            let frac = format!("{}{}", "0".repeat((-r.exp10 - 1) as usize), r.mantissa);
            join_point("0", &frac, trim)
        }
    } else {
        let (first, rest) = r.mantissa.split_at(1);
        let tail = if trim { rest.trim_end_matches('0') } else { rest };
        if tail.is_empty() {
            format!("{first}e{}", r.exp10)
        } else {
            format!("{first}.{tail}e{}", r.exp10)
        }
    };
    format!("{sign}{body}")
}

fn join_point(int: &str, frac: &str, trim: bool) -> String {
    let frac = if trim { frac.trim_end_matches('0') } else { frac };
    if frac.is_empty() {
        int.to_string()
    } else {
        format!("{int}.{frac}")
    }
}

// ---------------------------------------------------------------------------
// Arithmetic operators
// ---------------------------------------------------------------------------

impl Add for &QuadNum {
    type Output = QuadNum;
    fn add(self, rhs: &QuadNum) -> QuadNum {
        QuadNum::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &QuadNum {
    type Output = QuadNum;
    fn sub(self, rhs: &QuadNum) -> QuadNum {
        QuadNum::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul for &QuadNum {
    type Output = QuadNum;
    fn mul(self, rhs: &QuadNum) -> QuadNum {
        // (a₁ + b₁√2)(a₂ + b₂√2) = a₁a₂ + 2b₁b₂ + (a₁b₂ + b₁a₂)√2
        let two = Rational::from_integer(2.into());
        QuadNum::new(
            &self.a * &rhs.a + two * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl Div for &QuadNum {
    type Output = QuadNum;
    fn div(self, rhs: &QuadNum) -> QuadNum {
        self.try_div(rhs).expect("division by zero")
    }
}

impl Neg for &QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        QuadNum::new(-self.a.clone(), -self.b.clone())
    }
}

macro_rules! forward_owned_ops {
    ($($trait:ident :: $fn:ident),*) => {$(
        impl $trait for QuadNum {
            type Output = QuadNum;
            fn $fn(self, rhs: QuadNum) -> QuadNum {
                $trait::$fn(&self, &rhs)
            }
        }
        impl $trait<&QuadNum> for QuadNum {
            type Output = QuadNum;
            fn $fn(self, rhs: &QuadNum) -> QuadNum {
                $trait::$fn(&self, rhs)
            }
        }
        impl $trait<QuadNum> for &QuadNum {
            type Output = QuadNum;
            fn $fn(self, rhs: QuadNum) -> QuadNum {
                $trait::$fn(self, &rhs)
            }
        }
    )*};
}

forward_owned_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        -&self
    }
}

impl PartialOrd for QuadNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadNum {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).sign() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

// ---------------------------------------------------------------------------
// Textual form: `<a_num>/<a_den> + <b_num>/<b_den>*sqrt2`
// ---------------------------------------------------------------------------

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}/{} + {}/{}*sqrt2",
            self.a.numer(),
            self.a.denom(),
            self.b.numer(),
            self.b.denom()
        )
    }
}

impl fmt::Debug for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadNum({self})")
    }
}

fn parse_rational(tok: &str) -> Option<Rational> {
    let tok = tok.trim();
    let (num, den) = match tok.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (tok, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den <= BigInt::zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

impl FromStr for QuadNum {
    type Err = QuadError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || QuadError::Parse(s.to_string());
        let t = s.trim();
        match t.strip_suffix("*sqrt2") {
            None => {
                // Bare rational: the b·√2 term is zero.
                if t.contains("sqrt2") {
                    return Err(err());
                }
                Ok(QuadNum::from_rational(parse_rational(t).ok_or_else(err)?))
            }
            Some(prefix) => {
                // `<a> + <b>` — the separating '+' is the only one present;
                // signs live on the numerators.
                let plus = prefix.find('+').ok_or_else(err)?;
                let (a_tok, rest) = prefix.split_at(plus);
                let b_tok = &rest[1..];
                if b_tok.contains('+') {
                    return Err(err());
                }
                let a = parse_rational(a_tok).ok_or_else(err)?;
                let b = parse_rational(b_tok).ok_or_else(err)?;
                Ok(QuadNum::new(a, b))
            }
        }
    }
}

impl Serialize for QuadNum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for QuadNum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha() -> QuadNum {
        QuadNum::parts(3, 1, -2, 1)
    }

    #[test]
    fn conjugate_product_is_one() {
        let x = alpha();
        assert_eq!(&x * &x.conjugate(), QuadNum::one());
    }

    #[test]
    fn additive_identity() {
        let x = QuadNum::parts(7, 3, -5, 11);
        assert_eq!(&x + &QuadNum::zero(), x);
    }

    #[test]
    fn square_of_one_plus_sqrt2() {
        let x = QuadNum::parts(1, 1, 1, 1);
        assert_eq!(&x * &x, QuadNum::parts(3, 1, 2, 1));
    }

    #[test]
    fn pow_examples() {
        let a = alpha();
        assert_eq!(a.pow(0).unwrap(), QuadNum::one());
        assert_eq!(a.pow(-1).unwrap(), QuadNum::parts(3, 1, 2, 1));
        assert_eq!(a.pow(2).unwrap(), QuadNum::parts(17, 1, -12, 1));
    }

    #[test]
    fn pow_of_zero() {
        assert_eq!(QuadNum::zero().pow(0).unwrap(), QuadNum::one());
        assert_eq!(QuadNum::zero().pow(3).unwrap(), QuadNum::zero());
        assert_eq!(QuadNum::zero().pow(-2), Err(QuadError::ZeroToNegativePower));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            QuadNum::one().try_div(&QuadNum::zero()),
            Err(QuadError::DivisionByZero)
        );
    }

    #[test]
    fn sign_examples() {
        assert_eq!(alpha().sign(), 1);
        assert_eq!(QuadNum::parts(2, 1, -2, 1).sign(), -1);
        assert_eq!(QuadNum::zero().sign(), 0);
        assert_eq!(QuadNum::sqrt2().sign(), 1);
        assert_eq!((-QuadNum::sqrt2()).sign(), -1);
        assert_eq!(QuadNum::parts(-3, 1, 2, 1).sign(), -1);
        assert_eq!(QuadNum::parts(-1, 1, 1, 1).sign(), 1);
    }

    #[test]
    fn decimal_examples() {
        let half_sqrt2 = QuadNum::parts(0, 1, 1, 2);
        assert_eq!(half_sqrt2.decimal(10), "0.7071067812");
        assert_eq!(QuadNum::ratio(5, 6).decimal(6), "0.833333");
        assert_eq!(alpha().decimal(10), "0.1715728753");
        assert_eq!(QuadNum::zero().decimal(5), "0");
        assert_eq!(QuadNum::ratio(35, 2).decimal(12), "17.5");
        assert_eq!(QuadNum::integer(-4).decimal(3), "-4");
    }

    #[test]
    fn decimal_rounds_the_final_digit() {
        // 0.9995 rounds up across a digit boundary.
        assert_eq!(QuadNum::ratio(9995, 10000).decimal(3), "1");
        // α² = 0.029437251522859... rounds the 5th digit up.
        assert_eq!(alpha().pow(2).unwrap().decimal(5), "0.029437");
    }

    #[test]
    fn f64_matches_known_constants() {
        assert_eq!(QuadNum::sqrt2().to_f64(), std::f64::consts::SQRT_2);
        assert_eq!(QuadNum::ratio(5, 6).to_f64(), 5.0 / 6.0);
        let a = alpha().to_f64();
        assert!((a - (3.0 - 2.0 * std::f64::consts::SQRT_2)).abs() < 1e-15);
    }

    #[test]
    fn tiny_values_use_scientific_notation() {
        let tiny = alpha().pow(40).unwrap();
        let s = tiny.decimal(6);
        assert!(s.contains('e'), "expected scientific form, got {s}");
        let parsed: f64 = s.parse().unwrap();
        assert!((parsed - tiny.to_f64()).abs() / tiny.to_f64() < 1e-5);
    }

    #[test]
    fn display_round_trips() {
        for x in [
            QuadNum::parts(-1, 1, 2, 1),
            QuadNum::parts(5, 6, 0, 1),
            QuadNum::parts(0, 1, -7, 3),
            QuadNum::zero(),
        ] {
            let s = x.to_string();
            assert_eq!(s.parse::<QuadNum>().unwrap(), x);
        }
        assert_eq!(QuadNum::parts(-1, 1, 2, 1).to_string(), "-1/1 + 2/1*sqrt2");
    }

    #[test]
    fn parse_rejects_malformed_input() {
        for bad in ["", "sqrt2", "1/0 + 1/1*sqrt2", "1/1 + 1/1", "x + y*sqrt2", "1/1 1/1*sqrt2"] {
            assert!(bad.parse::<QuadNum>().is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn parse_accepts_bare_rationals() {
        assert_eq!("5/6".parse::<QuadNum>().unwrap(), QuadNum::ratio(5, 6));
        assert_eq!("-3".parse::<QuadNum>().unwrap(), QuadNum::integer(-3));
    }

    #[test]
    fn ordering_is_exact() {
        // 99/70 and 140/99 straddle √2 with tiny gaps.
        let lo = QuadNum::ratio(99, 70);
        let hi = QuadNum::ratio(140, 99);
        let s = QuadNum::sqrt2();
        assert!(lo > s);
        assert!(hi < s);
        assert_eq!(s.cmp(&s), Ordering::Equal);
    }

    #[test]
    fn alpha_power_pairs_cancel() {
        let a = alpha();
        for k in -40..=40i64 {
            let prod = &a.pow(k).unwrap() * &a.pow(-k).unwrap();
            assert_eq!(prod, QuadNum::one(), "k = {k}");
        }
    }

    #[test]
    fn sign_agrees_with_decimal() {
        let samples = [
            QuadNum::parts(1, 3, -1, 5),
            QuadNum::parts(-7, 2, 5, 2),
            QuadNum::parts(985, 696, -1, 1), // near √2 from above
            QuadNum::parts(-985, 696, 1, 1),
        ];
        for x in samples {
            let d = x.decimal(30);
            let neg = d.starts_with('-');
            match x.sign() {
                1 => assert!(!neg && d != "0"),
                -1 => assert!(neg),
                _ => assert_eq!(d, "0"),
            }
        }
    }
}
