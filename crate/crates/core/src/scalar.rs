//! Exact rational scalars and the binomial/multinomial counts used to scale
//! polar values.
//!
//! [`Ratio`] wraps an arbitrary-precision rational that is kept in lowest
//! terms with a positive denominator. Its text form is `n` or `n/d` with an
//! optional leading `-`, which is the form used for all CLI and JSON I/O.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ratio(BigRational);

impl Ratio {
    pub fn zero() -> Self {
        Ratio(BigRational::zero())
    }

    pub fn one() -> Self {
        Ratio(BigRational::one())
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Ratio(BigRational::from_integer(n.into()))
    }

    /// `numer / denom`, failing on a zero denominator.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Ratio(BigRational::new(numer.into(), denom)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Ratio(self.0.abs())
    }

    pub fn checked_div(&self, rhs: &Ratio) -> Result<Ratio> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Ratio(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Ratio> {
        Ratio::one().checked_div(self)
    }

    /// Division by a nonzero integer count.
    pub fn div_int(&self, n: &BigInt) -> Result<Ratio> {
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Ratio(&self.0 / BigRational::from_integer(n.clone())))
    }

    pub fn pow(&self, exp: u32) -> Ratio {
        Ratio(num_traits::pow(self.0.clone(), exp as usize))
    }

    pub fn to_f64(&self) -> Option<f64> {
        self.0.to_f64()
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }

    /// Decimal rendering rounded to `sig` significant digits (half away from
    /// zero). Plain notation is used for moderate magnitudes, `e` notation
    /// otherwise.
    pub fn to_decimal(&self, sig: usize) -> String {
        let sig = sig.max(1);
        if self.is_zero() {
            return "0".to_string();
        }
        let negative = self.is_negative();
        let mag = self.0.abs();
        let ten = BigRational::from_integer(BigInt::from(10));

        // exponent e with 10^e <= mag < 10^(e+1)
        let mut exp: i64 = mag.numer().to_string().len() as i64 - mag.denom().to_string().len() as i64;
        loop {
            let lo = pow10(exp);
            if mag < lo {
                exp -= 1;
                continue;
            }
            if mag >= &lo * &ten {
                exp += 1;
                continue;
            }
            break;
        }

        let shift = sig as i64 - 1 - exp;
        let scaled = &mag * pow10(shift);
        let mut digits = round_half_up(&scaled);
        let mut exp = exp;
        if digits.to_string().len() > sig {
            // rounding carried into a new leading digit
            digits /= 10;
            exp += 1;
        }
        let mut text = digits.to_string();
        while text.len() < sig {
            text.push('0');
        }

        let body = if (-6..15).contains(&exp) {
            if exp >= 0 {
                let int_len = exp as usize + 1;
                if text.len() <= int_len {
                    let mut s = text.clone();
                    s.extend(std::iter::repeat('0').take(int_len - text.len()));
                    s
                } else {
                    let (a, b) = text.split_at(int_len);
                    trim_fraction(format!("{a}.{b}"))
                }
            } else {
                let zeros = "0".repeat((-exp - 1) as usize);
                trim_fraction(format!("0.{zeros}{text}"))
            }
        } else {
            let (a, b) = text.split_at(1);
            let mantissa = if b.is_empty() { a.to_string() } else { trim_fraction(format!("{a}.{b}")) };
            format!("{mantissa}e{exp}")
        };
        if negative {
            format!("-{body}")
        } else {
            body
        }
    }
}

fn pow10(exp: i64) -> BigRational {
    let p = num_traits::pow(BigInt::from(10), exp.unsigned_abs() as usize);
    if exp >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

fn round_half_up(x: &BigRational) -> BigInt {
    let (q, r) = x.numer().div_rem(x.denom());
    if BigInt::from(2) * r >= *x.denom() {
        q + 1
    } else {
        q
    }
}

fn trim_fraction(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    let t = s.trim_end_matches('0');
    t.trim_end_matches('.').to_string()
}

impl Default for Ratio {
    fn default() -> Self {
        Ratio::zero()
    }
}

impl From<i64> for Ratio {
    fn from(n: i64) -> Self {
        Ratio::from_integer(n)
    }
}

impl From<i32> for Ratio {
    fn from(n: i32) -> Self {
        Ratio::from_integer(n)
    }
}

impl From<BigInt> for Ratio {
    fn from(n: BigInt) -> Self {
        Ratio::from_integer(n)
    }
}

impl From<BigRational> for Ratio {
    fn from(r: BigRational) -> Self {
        Ratio(r)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Ratio {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidRatio(s.to_string());
        let t = s.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (t, None),
        };
        let int = |x: &str, signed: bool| -> Result<BigInt> {
            let digits = if signed { x.strip_prefix('-').unwrap_or(x) } else { x };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            x.parse::<BigInt>().map_err(|_| bad())
        };
        let n = int(num, true)?;
        let d = match den {
            Some(d) => int(d, false)?,
            None => BigInt::one(),
        };
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Ratio(BigRational::new(n, d)))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $assign_tr:ident, $assign:ident) => {
        impl $tr<&Ratio> for &Ratio {
            type Output = Ratio;
            fn $method(self, rhs: &Ratio) -> Ratio {
                Ratio($tr::$method(&self.0, &rhs.0))
            }
        }
        impl $tr<Ratio> for Ratio {
            type Output = Ratio;
            fn $method(self, rhs: Ratio) -> Ratio {
                Ratio($tr::$method(self.0, rhs.0))
            }
        }
        impl $tr<&Ratio> for Ratio {
            type Output = Ratio;
            fn $method(self, rhs: &Ratio) -> Ratio {
                Ratio($tr::$method(self.0, &rhs.0))
            }
        }
        impl $tr<Ratio> for &Ratio {
            type Output = Ratio;
            fn $method(self, rhs: Ratio) -> Ratio {
                Ratio($tr::$method(&self.0, rhs.0))
            }
        }
        impl $assign_tr<&Ratio> for Ratio {
            fn $assign(&mut self, rhs: &Ratio) {
                $assign_tr::$assign(&mut self.0, &rhs.0);
            }
        }
        impl $assign_tr<Ratio> for Ratio {
            fn $assign(&mut self, rhs: Ratio) {
                $assign_tr::$assign(&mut self.0, rhs.0);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);

impl Neg for Ratio {
    type Output = Ratio;
    fn neg(self) -> Ratio {
        Ratio(-self.0)
    }
}

impl Neg for &Ratio {
    type Output = Ratio;
    fn neg(self) -> Ratio {
        Ratio(-&self.0)
    }
}

impl Sum for Ratio {
    fn sum<I: Iterator<Item = Ratio>>(iter: I) -> Ratio {
        iter.fold(Ratio::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Ratio> for Ratio {
    fn sum<I: Iterator<Item = &'a Ratio>>(iter: I) -> Ratio {
        iter.fold(Ratio::zero(), |acc, x| acc + x)
    }
}

impl Product for Ratio {
    fn product<I: Iterator<Item = Ratio>>(iter: I) -> Ratio {
        iter.fold(Ratio::one(), |acc, x| acc * x)
    }
}

/// `C(n, k)`, with the convention that it is 0 for `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(m, h) * C(m - h, l)`, the number of ways to pick disjoint index sets of
/// sizes `h` and `l` out of `m`. Zero whenever `h`, `l` are negative or
/// `h + l > m`.
pub fn multinomial3(m: u64, h: i64, l: i64) -> BigInt {
    if h < 0 || l < 0 || (h + l) as u64 > m {
        return BigInt::zero();
    }
    binomial(m, h) * binomial(m - h as u64, l)
}

/// Shorthand for building literals in tests and examples: `q(2, 5)` is `2/5`.
///
/// Panics on a zero denominator.
pub fn q(numer: i64, denom: i64) -> Ratio {
    Ratio::new(numer, denom).expect("nonzero denominator")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn arithmetic_examples() {
        assert_eq!(q(1, 3) + q(1, 6), q(1, 2));
        assert_eq!(q(2, 5) * q(10, 9), q(4, 9));
        assert_eq!(Ratio::one().checked_div(&Ratio::zero()), Err(Error::DivisionByZero));
        assert_eq!(-q(3, 4), q(-3, 4));
    }

    #[test]
    fn canonical_form() {
        let r = q(4, -6);
        assert_eq!(r.numer(), &BigInt::from(-2));
        assert_eq!(r.denom(), &BigInt::from(3));
        let z = q(0, 17);
        assert_eq!(z.denom(), &BigInt::one());
        assert_eq!((q(1, 2) - q(1, 2)).denom(), &BigInt::one());
    }

    #[test]
    fn text_form() {
        assert_eq!("-14/45".parse::<Ratio>().unwrap(), q(-14, 45));
        assert_eq!(" 12 ".parse::<Ratio>().unwrap(), q(12, 1));
        assert_eq!("4/6".parse::<Ratio>().unwrap().to_string(), "2/3");
        assert_eq!(q(-45, 37).to_string(), "-45/37");
        assert_eq!(Ratio::zero().to_string(), "0");
        for bad in ["", "1/0", "1/-2", "a", "1.5", "--1", "1/", "/2", "+3"] {
            assert!(bad.parse::<Ratio>().is_err(), "{bad:?} should be rejected");
        }
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(10, 2), BigInt::from(45));
        assert_eq!(binomial(5, 7), BigInt::zero());
        assert_eq!(binomial(8, 0), BigInt::one());
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(multinomial3(8, 1, 1), BigInt::from(56));
        assert_eq!(multinomial3(3, 0, 0), BigInt::one());
        assert_eq!(multinomial3(4, 3, 2), BigInt::zero());
        assert_eq!(multinomial3(4, -1, 2), BigInt::zero());
    }

    #[test]
    fn pascal_rule() {
        for n in 1..=64u64 {
            for k in 0..=n as i64 {
                assert_eq!(binomial(n, k), binomial(n - 1, k) + binomial(n - 1, k - 1), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn multinomial_is_factorial_quotient() {
        let fact = |n: u64| -> BigInt { (1..=n).fold(BigInt::one(), |a, i| a * i) };
        for m in 0..=20u64 {
            for h in 0..=m {
                for l in 0..=(m - h) {
                    let expect = fact(m) / (fact(h) * fact(l) * fact(m - h - l));
                    assert_eq!(multinomial3(m, h as i64, l as i64), expect);
                }
            }
        }
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(q(1, 3).to_decimal(12), "0.333333333333");
        assert_eq!(q(2, 3).to_decimal(12), "0.666666666667");
        assert_eq!(q(-3, 2).to_decimal(12), "-1.5");
        assert_eq!(q(1000, 1).to_decimal(12), "1000");
        assert_eq!(q(999_999, 1_000_000).to_decimal(3), "1");
        assert_eq!(q(1, 80).to_decimal(4), "0.0125");
        assert_eq!(Ratio::zero().to_decimal(12), "0");
        assert_eq!(q(1, 1).pow(20).to_decimal(5), "1");
        assert_eq!(Ratio::from_integer(10).pow(20).to_decimal(3), "1e20");
        assert_eq!(q(1, 3).div_int(&BigInt::from(10).pow(9)).unwrap().to_decimal(2), "3.3e-10");
    }

    fn arb_ratio() -> impl Strategy<Value = Ratio> {
        (-1000i64..1000, 1i64..200).prop_map(|(n, d)| q(n, d))
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_ratio(), b in arb_ratio(), c in arb_ratio()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            if !b.is_zero() {
                prop_assert_eq!((&a * &b).checked_div(&b).unwrap(), a.clone());
            }
        }

        #[test]
        fn text_round_trip(a in arb_ratio()) {
            prop_assert_eq!(a.to_string().parse::<Ratio>().unwrap(), a);
        }
    }
}
