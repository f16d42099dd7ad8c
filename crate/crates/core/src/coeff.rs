//! Exact rational coefficients.
//!
//! Values whose numerator and denominator fit in 62 bits are kept inline and
//! combined through `i128` intermediates; anything larger is promoted to a
//! [`BigRational`]. The representation is canonical, so derived equality and
//! hashing agree with numeric equality.

use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

const SMALL_LIMIT: i128 = 1 << 62;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    /// Reduced, `den > 0`, both bounded by `SMALL_LIMIT` in magnitude.
    Small { num: i64, den: i64 },
    /// Only used when the value does not fit `Small`.
    Big(BigRational),
}

/// An exact rational number.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coeff(Repr);

impl Coeff {
    pub const ZERO: Coeff = Coeff(Repr::Small { num: 0, den: 1 });
    pub const ONE: Coeff = Coeff(Repr::Small { num: 1, den: 1 });

    pub fn integer(n: i64) -> Self {
        Self::from_i128(n as i128, 1)
    }

    /// `num / den`. Panics when `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    pub fn from_big(value: BigRational) -> Self {
        let (num, den) = (value.numer(), value.denom());
        match (num.to_i128(), den.to_i128()) {
            (Some(n), Some(d)) if n.abs() <= SMALL_LIMIT && d <= SMALL_LIMIT => Coeff(Repr::Small {
                num: n as i64,
                den: d as i64,
            }),
            _ => Coeff(Repr::Big(value)),
        }
    }

    /// Builds `num / den` from arbitrary-precision parts. Panics when `den` is zero.
    pub fn from_bigints(num: BigInt, den: BigInt) -> Self {
        Self::from_big(BigRational::new(num, den))
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        let (mut num, mut den) = if den < 0 { (-num, -den) } else { (num, den) };
        if den != 1 {
            let g = num.gcd(&den);
            if g > 1 {
                num /= g;
                den /= g;
            }
        }
        if num.abs() <= SMALL_LIMIT && den <= SMALL_LIMIT {
            Coeff(Repr::Small {
                num: num as i64,
                den: den as i64,
            })
        } else {
            Coeff(Repr::Big(BigRational::new_raw(BigInt::from(num), BigInt::from(den))))
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small { num, den } => {
                BigRational::new_raw(BigInt::from(*num), BigInt::from(*den))
            }
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small { num: 0, .. })
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small { num: 1, den: 1 })
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small { num, .. } => *num < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small { den, .. } => *den == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small { num, .. } => BigInt::from(*num),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small { den, .. } => BigInt::from(*den),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn abs(&self) -> Coeff {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn recip(&self) -> Option<Coeff> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Small { num, den } => Self::from_i128(*den as i128, *num as i128),
            Repr::Big(r) => Self::from_big(r.recip()),
        })
    }

    /// Integer power; negative exponents invert. `None` for `0^k` with `k < 0`.
    pub fn pow(&self, exp: i64) -> Option<Coeff> {
        let base = if exp < 0 { self.recip()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Coeff::ONE;
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Some(acc)
    }

    fn add_ref(&self, rhs: &Coeff) -> Coeff {
        match (&self.0, &rhs.0) {
            (Repr::Small { num: a, den: 1 }, Repr::Small { num: c, den: 1 }) => {
                Self::from_i128(*a as i128 + *c as i128, 1)
            }
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Self::from_i128(a * d + c * b, b * d)
            }
            _ => Self::from_big(self.to_big() + rhs.to_big()),
        }
    }

    fn mul_ref(&self, rhs: &Coeff) -> Coeff {
        match (&self.0, &rhs.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                Self::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Self::from_big(self.to_big() * rhs.to_big()),
        }
    }

    fn neg_ref(&self) -> Coeff {
        match &self.0 {
            Repr::Small { num, den } => Coeff(Repr::Small {
                num: -num,
                den: *den,
            }),
            Repr::Big(r) => Self::from_big(-r),
        }
    }
}

impl Default for Coeff {
    fn default() -> Self {
        Coeff::ZERO
    }
}

impl From<i64> for Coeff {
    fn from(n: i64) -> Self {
        Coeff::integer(n)
    }
}

impl From<i32> for Coeff {
    fn from(n: i32) -> Self {
        Coeff::integer(n as i64)
    }
}

impl From<BigRational> for Coeff {
    fn from(r: BigRational) -> Self {
        Coeff::from_big(r)
    }
}

impl Zero for Coeff {
    fn zero() -> Self {
        Coeff::ZERO
    }
    fn is_zero(&self) -> bool {
        Coeff::is_zero(self)
    }
}

impl One for Coeff {
    fn one() -> Self {
        Coeff::ONE
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<'a, 'b> $trait<&'b Coeff> for &'a Coeff {
            type Output = Coeff;
            fn $method(self, rhs: &'b Coeff) -> Coeff {
                let f: fn(&Coeff, &Coeff) -> Coeff = $body;
                f(self, rhs)
            }
        }
        impl $trait<Coeff> for Coeff {
            type Output = Coeff;
            fn $method(self, rhs: Coeff) -> Coeff {
                (&self).$method(&rhs)
            }
        }
        impl<'b> $trait<&'b Coeff> for Coeff {
            type Output = Coeff;
            fn $method(self, rhs: &'b Coeff) -> Coeff {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<Coeff> for &'a Coeff {
            type Output = Coeff;
            fn $method(self, rhs: Coeff) -> Coeff {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_ref(b));
forward_binop!(Sub, sub, |a, b| a.add_ref(&b.neg_ref()));
forward_binop!(Mul, mul, |a, b| a.mul_ref(b));
forward_binop!(Div, div, |a, b| a.mul_ref(&b.recip().expect("division by zero")));

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        self.neg_ref()
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        self.neg_ref()
    }
}

impl AddAssign<&Coeff> for Coeff {
    fn add_assign(&mut self, rhs: &Coeff) {
        *self = self.add_ref(rhs);
    }
}

impl SubAssign<&Coeff> for Coeff {
    fn sub_assign(&mut self, rhs: &Coeff) {
        *self = self.add_ref(&rhs.neg_ref());
    }
}

/// Renders `a` or `a/b`.
impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small { num, den: 1 } => write!(f, "{num}"),
            Repr::Small { num, den } => write!(f, "{num}/{den}"),
            Repr::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseCoeffError;

impl fmt::Display for ParseCoeffError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("invalid rational literal")
    }
}

/// Parses `a` or `a/b` with an optional leading sign on `a`.
impl FromStr for Coeff {
    type Err = ParseCoeffError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let valid_digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        let unsigned = num.strip_prefix('-').unwrap_or(num);
        if !valid_digits(unsigned) {
            return Err(ParseCoeffError);
        }
        let num: BigInt = num.parse().map_err(|_| ParseCoeffError)?;
        let den: BigInt = match den {
            Some(d) if valid_digits(d) => d.parse().map_err(|_| ParseCoeffError)?,
            Some(_) => return Err(ParseCoeffError),
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(ParseCoeffError);
        }
        Ok(Coeff::from_bigints(num, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    #[test]
    fn canonical_form() {
        assert_eq!(Coeff::ratio(2, -4), Coeff::ratio(-1, 2));
        assert_eq!(Coeff::ratio(6, 3), Coeff::integer(2));
        assert_eq!(Coeff::ratio(-3, 6).to_string(), "-1/2");
        assert_eq!(Coeff::integer(7).to_string(), "7");
    }

    #[test]
    fn promotes_and_demotes() {
        let big = Coeff::integer(1 << 61);
        let huge = &(&big * &big) * &big;
        assert!(matches!(huge.0, Repr::Big(_)));
        let back = &(&huge / &big) / &big;
        assert_eq!(back, big);
        assert!(matches!(back.0, Repr::Small { .. }));
    }

    #[test]
    fn pow_and_recip() {
        let two = Coeff::integer(2);
        assert_eq!(two.pow(-3), Some(Coeff::ratio(1, 8)));
        assert_eq!(two.pow(0), Some(Coeff::ONE));
        assert_eq!(Coeff::ZERO.pow(-1), None);
        assert_eq!(Coeff::ZERO.recip(), None);
    }

    #[test]
    fn parses() {
        assert_eq!("-1/2".parse::<Coeff>(), Ok(Coeff::ratio(-1, 2)));
        assert_eq!("4/2".parse::<Coeff>(), Ok(Coeff::integer(2)));
        assert!("1/0".parse::<Coeff>().is_err());
        assert!("1/-2".parse::<Coeff>().is_err());
        assert!("".parse::<Coeff>().is_err());
        let big = "123456789012345678901234567891/7".parse::<Coeff>().unwrap();
        assert_eq!(big.to_string(), "123456789012345678901234567891/7");
    }

    fn any_coeff() -> impl Strategy<Value = Coeff> {
        prop_oneof![
            (-50i64..50, 1i64..20).prop_map(|(n, d)| Coeff::ratio(n, d)),
            (any::<i64>(), 1i64..i64::MAX).prop_map(|(n, d)| Coeff::ratio(n, d)),
        ]
    }

    proptest! {
        #[test]
        fn agrees_with_bigrational(a in any_coeff(), b in any_coeff()) {
            let (ba, bb) = (a.to_big(), b.to_big());
            prop_assert_eq!(&a + &b, Coeff::from_big(&ba + &bb));
            prop_assert_eq!(&a - &b, Coeff::from_big(&ba - &bb));
            prop_assert_eq!(&a * &b, Coeff::from_big(&ba * &bb));
            if !b.is_zero() {
                prop_assert_eq!(&a / &b, Coeff::from_big(&ba / &bb));
            }
        }

        #[test]
        fn display_parse_round_trip(a in any_coeff()) {
            prop_assert_eq!(a.to_string().parse::<Coeff>(), Ok(a));
        }
    }
}
