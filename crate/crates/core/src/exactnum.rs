//! Exact arithmetic over the Gaussian rationals `Q(i)`.
//!
//! Every quantity evaluated by this crate lives in this field. Both components
//! are kept as reduced [`BigRational`]s, so two values are equal exactly when
//! their canonical forms are structurally equal. There is no floating point
//! anywhere in the crate.
//!
//! The canonical string form is `[-]p[/q]` for the real part followed by
//! `(+|-)[p[/q]]i` for the imaginary part, with either part omitted when it is
//! zero and the coefficient omitted when it is one: `3/4+1/2i`, `-i`, `7`, `0`.

use alloc::string::String;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{ArithError, ParseError};

/// An element `re + im*i` of `Q(i)` with arbitrary-precision components.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        GaussianRational::default()
    }

    pub fn one() -> Self {
        GaussianRational::from_integer(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        GaussianRational::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// The real rational `num/den`.
    ///
    /// Panics when `den == 0`; this is a literal constructor for constants
    /// known at the call site, not a division operator.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator in GaussianRational::ratio");
        GaussianRational::new(BigRational::new(BigInt::from(num), BigInt::from(den)), BigRational::zero())
    }

    pub fn from_rational(re: BigRational) -> Self {
        GaussianRational::new(re, BigRational::zero())
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -&self.im)
    }

    /// `re^2 + im^2`, the field norm down to `Q`.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiply by `i`.
    pub fn mul_i(&self) -> Self {
        GaussianRational::new(-&self.im, self.re.clone())
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if self.im.is_zero() {
            return Ok(GaussianRational::from_rational(self.re.recip()));
        }
        let n = self.norm();
        Ok(GaussianRational::new(&self.re / &n, -&self.im / &n))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        Ok(self * &rhs.inv()?)
    }

    /// Nonnegative integer power by binary exponentiation.
    pub fn powu(&self, mut k: u64) -> Self {
        let mut acc = GaussianRational::one();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power; `x^0 = 1` for every `x`, negative powers need `x != 0`.
    pub fn pow(&self, k: i64) -> Result<Self, ArithError> {
        if k >= 0 {
            Ok(self.powu(k as u64))
        } else if self.is_zero() {
            Err(ArithError::ZeroToNegativePower { exponent: k })
        } else {
            Ok(self.inv()?.powu(k.unsigned_abs()))
        }
    }

    /// `1 - self`, the ubiquitous Pochhammer factor.
    pub fn one_minus(&self) -> Self {
        GaussianRational::new(BigRational::one() - &self.re, -&self.im)
    }

    /// Parse the canonical string grammar (see module docs).
    pub fn parse(s: &str) -> Result<Self, ParseError> {
        Parser::new(s).parse()
    }
}

/// A nonzero value together with its inverse, so integer powers of any sign
/// are infallible. Parameters such as `q` and the sampled square roots are
/// held this way.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Invertible {
    value: GaussianRational,
    inverse: GaussianRational,
}

impl Invertible {
    pub fn new(value: GaussianRational) -> Result<Self, ArithError> {
        let inverse = value.inv()?;
        Ok(Invertible { value, inverse })
    }

    pub fn get(&self) -> &GaussianRational {
        &self.value
    }

    pub fn inverse(&self) -> &GaussianRational {
        &self.inverse
    }

    pub fn pow(&self, k: i64) -> GaussianRational {
        if k >= 0 {
            self.value.powu(k as u64)
        } else {
            self.inverse.powu(k.unsigned_abs())
        }
    }

    pub fn mul(&self, other: &Invertible) -> Invertible {
        Invertible { value: &self.value * &other.value, inverse: &self.inverse * &other.inverse }
    }

    pub fn recip(&self) -> Invertible {
        Invertible { value: self.inverse.clone(), inverse: self.value.clone() }
    }

    pub fn neg(&self) -> Invertible {
        Invertible { value: -&self.value, inverse: -&self.inverse }
    }
}

/// Field operation selector for [`gq_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
}

/// Dispatching form of the field operations. `y` is ignored for `Neg` and
/// required for every other operation.
pub fn gq_arith(
    op: ArithOp,
    x: &GaussianRational,
    y: Option<&GaussianRational>,
) -> Result<GaussianRational, ArithError> {
    let rhs = || y.ok_or(ArithError::MissingOperand);
    match op {
        ArithOp::Neg => Ok(-x),
        ArithOp::Add => Ok(x + rhs()?),
        ArithOp::Sub => Ok(x - rhs()?),
        ArithOp::Mul => Ok(x * rhs()?),
        ArithOp::Div => x.checked_div(rhs()?),
    }
}

fn mul_parts(a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
    match (a.im.is_zero(), b.im.is_zero()) {
        (true, true) => GaussianRational::from_rational(&a.re * &b.re),
        (true, false) => GaussianRational::new(&a.re * &b.re, &a.re * &b.im),
        (false, true) => GaussianRational::new(&a.re * &b.re, &a.im * &b.re),
        (false, false) => GaussianRational::new(&a.re * &b.re - &a.im * &b.im, &a.re * &b.im + &a.im * &b.re),
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<'a, 'b> $trait<&'b GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &'b GaussianRational) -> GaussianRational {
                let f: fn(&GaussianRational, &GaussianRational) -> GaussianRational = $body;
                f(self, rhs)
            }
        }
        impl<'b> $trait<&'b GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &'b GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                self.$method(&rhs)
            }
        }
        impl $trait<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| GaussianRational::new(&a.re + &b.re, &a.im + &b.im));
forward_binop!(Sub, sub, |a, b| GaussianRational::new(&a.re - &b.re, &a.im - &b.im));
forward_binop!(Mul, mul, mul_parts);

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl AddAssign for GaussianRational {
    fn add_assign(&mut self, rhs: GaussianRational) {
        *self += &rhs;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl SubAssign for GaussianRational {
    fn sub_assign(&mut self, rhs: GaussianRational) {
        *self -= &rhs;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = mul_parts(self, rhs);
    }
}

impl MulAssign for GaussianRational {
    fn mul_assign(&mut self, rhs: GaussianRational) {
        *self = mul_parts(self, &rhs);
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        GaussianRational::from_integer(n)
    }
}

impl From<BigRational> for GaussianRational {
    fn from(r: BigRational) -> Self {
        GaussianRational::from_rational(r)
    }
}

impl core::iter::Sum for GaussianRational {
    fn sum<I: Iterator<Item = GaussianRational>>(iter: I) -> Self {
        iter.fold(GaussianRational::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl core::iter::Product for GaussianRational {
    fn product<I: Iterator<Item = GaussianRational>>(iter: I) -> Self {
        iter.fold(GaussianRational::one(), |acc, x| &acc * &x)
    }
}

fn write_ratio(f: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let has_re = !self.re.is_zero();
        if has_re {
            write_ratio(f, &self.re)?;
        }
        if !self.im.is_zero() {
            if self.im.is_negative() {
                f.write_str("-")?;
            } else if has_re {
                f.write_str("+")?;
            }
            let mag = self.im.abs();
            if !mag.is_one() {
                write_ratio(f, &mag)?;
            }
            f.write_str("i")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GaussianRational({})", self)
    }
}

impl FromStr for GaussianRational {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        GaussianRational::parse(s)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser { bytes: s.as_bytes(), pos: 0 }
    }

    fn err(&self, message: &'static str) -> ParseError {
        ParseError { position: self.pos, message }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            None
        } else {
            BigInt::parse_bytes(&self.bytes[start..self.pos], 10)
        }
    }

    /// One signed term; returns `(value, is_imaginary)`.
    fn term(&mut self, first: bool) -> Result<(BigRational, bool), ParseError> {
        self.skip_ws();
        let negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') if !first => {
                self.pos += 1;
                false
            }
            _ if first => false,
            _ => return Err(self.err("expected '+' or '-' between terms")),
        };
        self.skip_ws();
        let magnitude = match self.digits() {
            Some(num) => {
                self.skip_ws();
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let den = self.digits().ok_or_else(|| self.err("expected denominator digits"))?;
                    if den.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    Some(BigRational::new(num, den))
                } else {
                    Some(BigRational::from_integer(num))
                }
            }
            None => None,
        };
        self.skip_ws();
        let imaginary = if self.peek() == Some(b'i') {
            self.pos += 1;
            true
        } else {
            false
        };
        let value = match (magnitude, imaginary) {
            (Some(m), _) => m,
            (None, true) => BigRational::one(),
            (None, false) => return Err(self.err("expected a number or 'i'")),
        };
        Ok((if negative { -value } else { value }, imaginary))
    }

    fn parse(mut self) -> Result<GaussianRational, ParseError> {
        let mut re: Option<BigRational> = None;
        let mut im: Option<BigRational> = None;
        let mut first = true;
        loop {
            self.skip_ws();
            if self.pos == self.bytes.len() {
                if first {
                    return Err(self.err("empty input"));
                }
                break;
            }
            let start = self.pos;
            let (value, imaginary) = self.term(first)?;
            // The real part, if present, must come first.
            let taken = if imaginary { im.is_some() } else { re.is_some() || im.is_some() };
            if taken {
                self.pos = start;
                return Err(self.err("unexpected extra term"));
            }
            if imaginary {
                im = Some(value);
            } else {
                re = Some(value);
            }
            first = false;
        }
        Ok(GaussianRational::new(re.unwrap_or_default(), im.unwrap_or_default()))
    }
}

/// Canonical string of a value; identical to its `Display` output.
pub fn format(value: &GaussianRational) -> String {
    use alloc::string::ToString;
    value.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn add_halves_and_thirds() {
        let r = gq_arith(ArithOp::Add, &g("1/2"), Some(&g("1/3"))).unwrap();
        assert_eq!(r, g("5/6"));
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussianRational::i();
        assert_eq!(&i * &i, GaussianRational::from_integer(-1));
    }

    #[test]
    fn divide_by_one_plus_i() {
        let r = gq_arith(ArithOp::Div, &GaussianRational::one(), Some(&g("1+i"))).unwrap();
        assert_eq!(r, g("1/2-1/2i"));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let r = gq_arith(ArithOp::Div, &g("3"), Some(&GaussianRational::zero()));
        assert_eq!(r, Err(ArithError::DivisionByZero));
        assert_eq!(gq_arith(ArithOp::Add, &g("3"), None), Err(ArithError::MissingOperand));
        assert_eq!(gq_arith(ArithOp::Neg, &g("3"), None).unwrap(), g("-3"));
    }

    #[test]
    fn powers() {
        assert_eq!(g("2").pow(-1).unwrap(), g("1/2"));
        assert_eq!(g("1+i").pow(2).unwrap(), g("2i"));
        assert_eq!(g("-7/3+2i").pow(0).unwrap(), GaussianRational::one());
        assert_eq!(GaussianRational::zero().pow(-2), Err(ArithError::ZeroToNegativePower { exponent: -2 }));
        assert_eq!(GaussianRational::zero().pow(0).unwrap(), GaussianRational::one());
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(g("3/4+1/2i").to_string(), "3/4+1/2i");
        assert_eq!(GaussianRational::zero().to_string(), "0");
        assert_eq!(g("-2/6"), GaussianRational::ratio(-1, 3));
        assert_eq!(g("-2/6").to_string(), "-1/3");
        assert_eq!(g("i").to_string(), "i");
        assert_eq!(g("0-1i").to_string(), "-i");
        assert_eq!(g("-3/9i").to_string(), "-1/3i");
        assert_eq!(g("4/2").to_string(), "2");
        assert_eq!(g(" 1 / 2 ").to_string(), "1/2");
        assert_eq!(g("2 - 3/6 i").to_string(), "2-1/2i");
    }

    #[test]
    fn parse_errors_carry_positions() {
        let e = GaussianRational::parse("1/0").unwrap_err();
        assert_eq!(e.position, 3);
        let e = GaussianRational::parse("1/2+").unwrap_err();
        assert_eq!(e.position, 4);
        assert!(GaussianRational::parse("").is_err());
        assert!(GaussianRational::parse("1+2").is_err());
        assert!(GaussianRational::parse("i+i").is_err());
        assert!(GaussianRational::parse("2i+3").is_err());
        assert!(GaussianRational::parse("3x").is_err());
        assert!(GaussianRational::parse("--3").is_err());
    }

    #[test]
    fn invertible_powers() {
        let q = Invertible::new(g("2/3")).unwrap();
        assert_eq!(q.pow(-2), g("9/4"));
        assert_eq!(q.pow(3), g("8/27"));
        assert!(Invertible::new(GaussianRational::zero()).is_err());
    }
}
