//! Exact scalars in a real quadratic field `Q(sqrt d)`.
//!
//! A [`Scalar`] is `a + b*sqrt(d)` with `a, b` rational and `d` a square-free
//! integer `>= 2`. Purely rational values carry no `d` and combine freely with
//! any field; two irrational values must share the same `d`. Mixing fields is a
//! programming error and panics.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    a: BigRational,
    b: BigRational,
    // 0 when b == 0, otherwise square-free and >= 2
    d: u64,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::from_rational(BigRational::one())
    }

    pub fn from_rational(a: BigRational) -> Self {
        Scalar {
            a,
            b: BigRational::zero(),
            d: 0,
        }
    }

    pub fn int(n: i64) -> Self {
        Scalar::from_rational(BigRational::from_integer(n.into()))
    }

    /// `num / den` as a rational scalar. Panics when `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::from_rational(BigRational::new(num.into(), den.into()))
    }

    /// `a + b*sqrt(d)`. `d` need not be square-free; square factors are pulled
    /// into `b` and a perfect square collapses to a rational.
    pub fn quadratic(a: BigRational, b: BigRational, d: u64) -> Result<Self> {
        if b.is_zero() || d == 0 {
            return Ok(Scalar::from_rational(a));
        }
        let (outer, core) = square_free_part(&BigInt::from(d))?;
        let b = b * BigRational::from_integer(outer);
        let core = core
            .to_u64()
            .ok_or_else(|| Error::Parse("radicand too large".into()))?;
        if core == 1 {
            return Ok(Scalar::from_rational(a + b));
        }
        Ok(Scalar { a, b, d: core })
    }

    /// Exact square root of a non-negative rational, adjoining `sqrt d` when
    /// the argument is not a rational square.
    pub fn sqrt_rational(q: &BigRational) -> Result<Self> {
        if q.is_negative() {
            return Err(Error::Precondition(format!("square root of negative {q}")));
        }
        if q.is_zero() {
            return Ok(Scalar::zero());
        }
        // sqrt(p/r) = sqrt(p*r)/r
        let num = q.numer().clone();
        let den = q.denom().clone();
        let (outer, core) = square_free_part(&(&num * &den))?;
        let coeff = BigRational::new(outer, den);
        if core.is_one() {
            return Ok(Scalar::from_rational(coeff));
        }
        let d = core
            .to_u64()
            .ok_or_else(|| Error::Precondition("radicand too large".into()))?;
        Ok(Scalar {
            a: BigRational::zero(),
            b: coeff,
            d,
        })
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn irrational_part(&self) -> &BigRational {
        &self.b
    }

    /// Radicand of the field this value lives in; `None` for rationals.
    pub fn radicand(&self) -> Option<u64> {
        (self.d != 0).then_some(self.d)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.a)
    }

    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // opposite signs: compare a^2 with d*b^2
        let a2 = &self.a * &self.a;
        let db2 = &self.b * &self.b * BigRational::from_integer(self.d.into());
        match a2.cmp(&db2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn conjugate(&self) -> Self {
        Scalar {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.is_rational() {
            return Some(Scalar::from_rational(self.a.recip()));
        }
        let norm = &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(self.d.into());
        let c = self.conjugate();
        Some(Scalar::normalized(c.a / &norm, c.b / &norm, self.d))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn normalized(a: BigRational, b: BigRational, d: u64) -> Self {
        if b.is_zero() {
            Scalar::from_rational(a)
        } else {
            Scalar { a, b, d }
        }
    }

    fn common_field(&self, other: &Scalar) -> u64 {
        match (self.d, other.d) {
            (0, d) | (d, 0) => d,
            (x, y) if x == y => x,
            (x, y) => panic!("mixed quadratic fields Q(sqrt {x}) and Q(sqrt {y})"),
        }
    }
}

fn sign_of(q: &BigRational) -> i32 {
    match q.numer().sign() {
        Sign::Plus => 1,
        Sign::Minus => -1,
        Sign::NoSign => 0,
    }
}

/// Write `n = outer^2 * core` with `core` square-free.
fn square_free_part(n: &BigInt) -> Result<(BigInt, BigInt)> {
    const TRIAL_LIMIT: u64 = 10_000_000;
    let mut rest = n.abs();
    let mut outer = BigInt::one();
    let mut core = BigInt::one();
    let mut p: u64 = 2;
    while BigInt::from(p) * BigInt::from(p) <= rest {
        if p > TRIAL_LIMIT {
            return Err(Error::Precondition(format!("cannot factor radicand {n}")));
        }
        let pb = BigInt::from(p);
        let mut count = 0u32;
        while rest.is_multiple_of(&pb) {
            rest /= &pb;
            count += 1;
        }
        for _ in 0..count / 2 {
            outer *= &pb;
        }
        if count % 2 == 1 {
            core *= &pb;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    core *= rest;
    Ok((outer, core))
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::from_rational(q)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let d = self.common_field(rhs);
        Scalar::normalized(&self.a + &rhs.a, &self.b + &rhs.b, d)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let d = self.common_field(rhs);
        Scalar::normalized(&self.a - &rhs.a, &self.b - &rhs.b, d)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let d = self.common_field(rhs);
        let dq = BigRational::from_integer(d.into());
        let a = &self.a * &rhs.a + &self.b * &rhs.b * dq;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        Scalar::normalized(a, b, d)
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            a: -&self.a,
            b: -&self.b,
            d: self.d,
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul, Div::div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some((self - other).signum().cmp(&0))
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Scalar {
    /// `a`, `a/b`, or `[a](+|-)|b|*sqrt(d)`; accepted back by `FromStr`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return f.write_str(&fmt_rational(&self.a));
        }
        if !self.a.is_zero() {
            f.write_str(&fmt_rational(&self.a))?;
        }
        let sign = if self.b.is_negative() { "-" } else if self.a.is_zero() { "" } else { "+" };
        write!(f, "{sign}{}*sqrt({})", fmt_rational(&self.b.abs()), self.d)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parse a decimal-free rational literal such as `-3`, `7/2`, `+1/4`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let err = || Error::Parse(format!("invalid rational literal '{s}'"));
    if s.is_empty() {
        return Err(err());
    }
    let s = s.strip_prefix('+').unwrap_or(s);
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let valid = |t: &str, signed: bool| {
        let digits = if signed { t.strip_prefix('-').unwrap_or(t) } else { t };
        !digits.is_empty() && digits.bytes().all(|c| c.is_ascii_digit())
    };
    if !valid(num, true) || !valid(den, false) {
        return Err(err());
    }
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in '{s}'")));
    }
    Ok(BigRational::new(num, den))
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let Some(open) = s.find("sqrt(") else {
            return Ok(Scalar::from_rational(parse_rational(s)?));
        };
        let err = || Error::Parse(format!("invalid scalar literal '{s}'"));
        let close = s[open..].find(')').map(|c| c + open).ok_or_else(err)?;
        if close != s.len() - 1 {
            return Err(err());
        }
        let d: u64 = s[open + 5..close].trim().parse().map_err(|_| err())?;
        let head = s[..open].strip_suffix('*').ok_or_else(err)?;
        // split head into rational part and signed coefficient of the radical
        let split = head
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        let (a, b) = match split {
            Some(i) => (parse_rational(&head[..i])?, parse_rational(&head[i..])?),
            None => (BigRational::zero(), parse_rational(head)?),
        };
        Scalar::quadratic(a, b, d)
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        if self.is_rational() {
            return ser.serialize_str(&fmt_rational(&self.a));
        }
        let mut map = ser.serialize_map(Some(3))?;
        map.serialize_entry("a", &fmt_rational(&self.a))?;
        map.serialize_entry("b", &fmt_rational(&self.b))?;
        map.serialize_entry("d", &self.d)?;
        map.end()
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Text(String),
            Int(i64),
            Quadratic { a: String, b: String, d: u64 },
        }
        use serde::de::Error as _;
        match Repr::deserialize(de)? {
            Repr::Text(s) => s.parse().map_err(D::Error::custom),
            Repr::Int(n) => Ok(Scalar::int(n)),
            Repr::Quadratic { a, b, d } => {
                let a = parse_rational(&a).map_err(D::Error::custom)?;
                let b = parse_rational(&b).map_err(D::Error::custom)?;
                Scalar::quadratic(a, b, d).map_err(D::Error::custom)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn sign_of_quadratic_values() {
        // 1 - sqrt 2 < 0, 3 - 2 sqrt 2 > 0, -3 + 2 sqrt 2 < 0
        let s = |a, b| Scalar::quadratic(q(a, 1), q(b, 1), 2).unwrap().signum();
        assert_eq!(s(1, -1), -1);
        assert_eq!(s(3, -2), 1);
        assert_eq!(s(-3, 2), -1);
        assert_eq!(s(0, 5), 1);
    }

    #[test]
    fn sqrt_extracts_squares() {
        assert_eq!(Scalar::sqrt_rational(&q(9, 4)).unwrap(), Scalar::ratio(3, 2));
        let r8 = Scalar::sqrt_rational(&q(8, 1)).unwrap();
        assert_eq!(r8.radicand(), Some(2));
        assert_eq!(&r8 * &r8, Scalar::int(8));
        let r = Scalar::sqrt_rational(&q(2, 3)).unwrap();
        assert_eq!(r.radicand(), Some(6));
        assert_eq!(&r * &r, Scalar::ratio(2, 3));
        assert!(Scalar::sqrt_rational(&q(-1, 1)).is_err());
    }

    #[test]
    fn inverse_in_quadratic_field() {
        let x = Scalar::quadratic(q(1, 1), q(1, 1), 5).unwrap();
        let y = x.inv().unwrap();
        assert_eq!(&x * &y, Scalar::one());
        assert!(Scalar::zero().inv().is_none());
    }

    #[test]
    fn display_and_parse() {
        for lit in ["0", "-7", "3/4", "1/2+3*sqrt(5)", "-1*sqrt(2)", "2-1/3*sqrt(7)"] {
            let x: Scalar = lit.parse().unwrap();
            assert_eq!(x.to_string(), lit);
        }
        assert_eq!("4/8".parse::<Scalar>().unwrap().to_string(), "1/2");
        assert!("1.5".parse::<Scalar>().is_err());
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("abc".parse::<Scalar>().is_err());
    }

    #[test]
    fn json_forms() {
        let x: Scalar = serde_json::from_str(r#""-2/3""#).unwrap();
        assert_eq!(x, Scalar::ratio(-2, 3));
        let y: Scalar = serde_json::from_str(r#"{"a":"1","b":"1/2","d":3}"#).unwrap();
        assert_eq!(y.radicand(), Some(3));
        assert_eq!(serde_json::to_string(&y).unwrap(), r#"{"a":"1","b":"1/2","d":3}"#);
    }

    #[test]
    #[should_panic(expected = "mixed quadratic fields")]
    fn mixing_fields_panics() {
        let a = Scalar::sqrt_rational(&q(2, 1)).unwrap();
        let b = Scalar::sqrt_rational(&q(3, 1)).unwrap();
        let _ = a + b;
    }
}
