//! Exact scalars: elements of Q or a fixed real quadratic field Q(sqrt d).
//!
//! A scalar is `rat + rad*sqrt(d)` with both components arbitrary-precision
//! rationals. `d` is a squarefree positive integer; `d = 1` means the scalar
//! is plain rational and the radical component is folded into `rat`, so
//! values are always in canonical form and derived equality is exact.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactScalar {
    rat: BigRational,
    rad: BigRational,
    d: u64,
}

fn is_squarefree(d: u64) -> bool {
    if d == 0 {
        return false;
    }
    let mut n = d;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return false;
            }
        }
        p += 1;
    }
    true
}

impl ExactScalar {
    /// Canonical constructor. Folds `rad*sqrt(1)` into the rational part.
    pub fn new(rat: BigRational, rad: BigRational, d: u64) -> Self {
        assert!(is_squarefree(d), "field discriminant {d} is not squarefree");
        if d == 1 {
            ExactScalar {
                rat: rat + rad,
                rad: BigRational::zero(),
                d: 1,
            }
        } else if rad.is_zero() {
            ExactScalar {
                rat,
                rad,
                d: 1,
            }
        } else {
            ExactScalar { rat, rad, d }
        }
    }

    pub fn from_rational(rat: BigRational) -> Self {
        ExactScalar {
            rat,
            rad: BigRational::zero(),
            d: 1,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `p/q` as a plain rational scalar.
    pub fn ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Self::from_rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// The scalar `sqrt(d)` itself. For `d = 1` this is just 1.
    pub fn sqrt_d(d: u64) -> Self {
        Self::new(BigRational::zero(), BigRational::one(), d)
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.rad.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.rad.is_zero()
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rat
    }

    pub fn radical_part(&self) -> &BigRational {
        &self.rad
    }

    pub fn discriminant(&self) -> u64 {
        self.d
    }

    /// Rational value, or `None` if a radical component is present.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.rad.is_zero().then_some(&self.rat)
    }

    fn join_d(&self, other: &Self) -> u64 {
        match (self.rad.is_zero(), other.rad.is_zero()) {
            (true, _) => other.d,
            (_, true) => self.d,
            _ => {
                assert_eq!(
                    self.d, other.d,
                    "mixed radical contexts: sqrt({}) vs sqrt({})",
                    self.d, other.d
                );
                self.d
            }
        }
    }

    /// Exact sign of the real number `rat + rad*sqrt(d)`: -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        let (sr, sq) = (rational_sign(&self.rat), rational_sign(&self.rad));
        if sq == 0 {
            return sr;
        }
        if sr == 0 {
            return sq;
        }
        if sr == sq {
            return sr;
        }
        // Opposite signs: compare rat^2 against rad^2 * d exactly.
        let lhs = &self.rat * &self.rat;
        let rhs = &self.rad * &self.rad * BigRational::from_integer(BigInt::from(self.d));
        match lhs.cmp(&rhs) {
            Ordering::Greater => sr,
            Ordering::Less => sq,
            Ordering::Equal => 0, // impossible for squarefree d > 1, kept for totality
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        if self.rad.is_zero() {
            return Self::from_rational(self.rat.recip());
        }
        // 1/(a + b sqrt d) = (a - b sqrt d) / (a^2 - b^2 d)
        let norm = &self.rat * &self.rat
            - &self.rad * &self.rad * BigRational::from_integer(BigInt::from(self.d));
        assert!(!norm.is_zero(), "zero field norm for nonzero element");
        Self::new(&self.rat / &norm, -(&self.rad / &norm), self.d)
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }
}

fn rational_sign(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl PartialOrd for ExactScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some((self - other).signum().cmp(&0))
    }
}

impl Add for &ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        let d = self.join_d(rhs);
        ExactScalar::new(&self.rat + &rhs.rat, &self.rad + &rhs.rad, d)
    }
}

impl Sub for &ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        let d = self.join_d(rhs);
        ExactScalar::new(&self.rat - &rhs.rat, &self.rad - &rhs.rad, d)
    }
}

impl Mul for &ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        let d = self.join_d(rhs);
        let dd = BigRational::from_integer(BigInt::from(d));
        ExactScalar::new(
            &self.rat * &rhs.rat + (&self.rad * &rhs.rad) * dd,
            &self.rat * &rhs.rad + &self.rad * &rhs.rat,
            d,
        )
    }
}

impl Div for &ExactScalar {
    type Output = ExactScalar;
    fn div(self, rhs: &ExactScalar) -> ExactScalar {
        self * &rhs.inverse()
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar::new(-self.rat.clone(), -self.rad.clone(), self.d)
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, rhs: &ExactScalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&ExactScalar> for ExactScalar {
    fn sub_assign(&mut self, rhs: &ExactScalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&ExactScalar> for ExactScalar {
    fn mul_assign(&mut self, rhs: &ExactScalar) {
        *self = &*self * rhs;
    }
}

fn fmt_ratio(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "{}/{}", r.numer(), r.denom())
}

impl fmt::Display for ExactScalar {
    /// `p/q` or `p/q+r/s*sqrt(d)` (with `-` when the radical coefficient is
    /// negative). Round-trips exactly through `FromStr`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_ratio(&self.rat, f)?;
        if !self.rad.is_zero() {
            if self.rad.is_positive() {
                write!(f, "+")?;
            } else {
                write!(f, "-")?;
            }
            fmt_ratio(&self.rad.abs(), f)?;
            write!(f, "*sqrt({})", self.d)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid exact scalar literal: {0}")]
pub struct ParseScalarError(pub String);

fn parse_ratio(s: &str) -> Result<BigRational, ParseScalarError> {
    let bad = || ParseScalarError(s.to_string());
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => {
            let p = BigInt::from_str(s.trim()).map_err(|_| bad())?;
            Ok(BigRational::from_integer(p))
        }
    }
}

impl FromStr for ExactScalar {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || ParseScalarError(s.to_string());
        match s.find("*sqrt(") {
            None => Ok(Self::from_rational(parse_ratio(s)?)),
            Some(star) => {
                let head = &s[..star];
                let tail = &s[star + "*sqrt(".len()..];
                let d: u64 = tail
                    .strip_suffix(')')
                    .ok_or_else(bad)?
                    .trim()
                    .parse()
                    .map_err(|_| bad())?;
                if !is_squarefree(d) {
                    return Err(bad());
                }
                // Split head into rational part and signed radical coefficient.
                // The separator is the last '+' or '-' that is not a leading sign
                // and not immediately after '/'.
                let bytes = head.as_bytes();
                let mut split = None;
                for i in (1..bytes.len()).rev() {
                    if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'/' {
                        split = Some(i);
                        break;
                    }
                }
                let i = split.ok_or_else(bad)?;
                let rat = parse_ratio(&head[..i])?;
                let coeff = parse_ratio(&head[i + 1..])?;
                let coeff = if bytes[i] == b'-' { -coeff } else { coeff };
                Ok(Self::new(rat, coeff, d))
            }
        }
    }
}
