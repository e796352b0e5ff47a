//! The ordered field Q(w) of rational functions in a positive infinite `w`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::IntPoly;
use super::Rational;
use crate::error::{Error, Result};

/// Sign of a field element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl From<Ordering> for Sign {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }
}

/// Element of Q(w), the surreal subfield generated by the rationals and `w`.
///
/// Stored as `numerator / denominator` over Z[w] in lowest terms: no common
/// polynomial factor, combined integer content 1, and a positive leading
/// denominator coefficient. Equal elements therefore have equal fields and the
/// derived `PartialEq`/`Hash` are the field's equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SurrealRF {
    num: IntPoly,
    den: IntPoly,
}

impl SurrealRF {
    pub fn zero() -> Self {
        SurrealRF {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        SurrealRF {
            num: IntPoly::constant(n.into()),
            den: IntPoly::one(),
        }
    }

    /// The infinite generator `w`.
    pub fn omega() -> Self {
        SurrealRF {
            num: IntPoly::var(),
            den: IntPoly::one(),
        }
    }

    pub fn from_rational(q: &Rational) -> Self {
        Self::new(IntPoly::constant(q.numer().clone()), IntPoly::constant(q.denom().clone()))
            .expect("rational denominators are nonzero")
    }

    /// Builds and normalizes `num / den`.
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (mut num, mut den) = if den.is_constant() || num.is_constant() {
            (num, den)
        } else {
            let g = num.primitive_gcd(&den);
            if g.is_constant() {
                (num, den)
            } else {
                (num.exact_div(&g), den.exact_div(&g))
            }
        };
        let mut c = num.content().gcd(&den.content());
        if den.leading().is_negative() {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_scalar(&c);
            den = den.div_scalar(&c);
        }
        SurrealRF { num, den }
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Sign in the order where `w` exceeds every rational: the sign of the
    /// numerator's leading coefficient, since the denominator's is positive.
    pub fn sign(&self) -> Sign {
        self.num.leading_sign().into()
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    /// True when the numerator does not outgrow the denominator.
    pub fn is_finite(&self) -> bool {
        self.num.degree() <= self.den.degree()
    }

    /// True for zero and for every element smaller in magnitude than all positive rationals.
    pub fn is_infinitesimal(&self) -> bool {
        self.is_zero() || self.num.degree() < self.den.degree()
    }

    /// The rational limit as `w` grows without bound.
    pub fn standard_part(&self) -> Result<Rational> {
        match self.num.degree().cmp(&self.den.degree()) {
            Ordering::Greater => Err(Error::InfiniteValue),
            Ordering::Less => Ok(Rational::zero()),
            Ordering::Equal => Ok(Rational::new(self.num.leading(), self.den.leading())),
        }
    }

    /// The element as a rational, when it has no `w` dependence.
    pub fn to_rational(&self) -> Option<Rational> {
        (self.num.is_constant() && self.den.is_constant())
            .then(|| Rational::new(self.num.constant_term(), self.den.constant_term()))
    }

    pub fn abs(&self) -> Self {
        if self.sign() == Sign::Negative {
            -self
        } else {
            self.clone()
        }
    }
}

impl Default for SurrealRF {
    fn default() -> Self {
        Self::zero()
    }
}

impl Ord for SurrealRF {
    fn cmp(&self, other: &Self) -> Ordering {
        // Denominators have positive leading coefficients, so the sign of
        // n1*d2 - n2*d1 is the sign of the difference.
        let cross = &(&self.num * &other.den) - &(&other.num * &self.den);
        cross.leading_sign()
    }
}

impl PartialOrd for SurrealRF {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &SurrealRF {
    type Output = SurrealRF;
    fn add(self, rhs: &SurrealRF) -> SurrealRF {
        if self.den == rhs.den {
            return SurrealRF::normalized(&self.num + &rhs.num, self.den.clone());
        }
        SurrealRF::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &SurrealRF {
    type Output = SurrealRF;
    fn sub(self, rhs: &SurrealRF) -> SurrealRF {
        self + &(-rhs)
    }
}

impl Mul for &SurrealRF {
    type Output = SurrealRF;
    fn mul(self, rhs: &SurrealRF) -> SurrealRF {
        SurrealRF::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &SurrealRF {
    type Output = SurrealRF;
    /// Panics on division by zero; use [`SurrealRF::checked_div`] to handle it.
    fn div(self, rhs: &SurrealRF) -> SurrealRF {
        self.checked_div(rhs).expect("division by zero in Q(w)")
    }
}

impl Neg for &SurrealRF {
    type Output = SurrealRF;
    fn neg(self) -> SurrealRF {
        SurrealRF {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for SurrealRF {
            type Output = SurrealRF;
            fn $m(self, rhs: SurrealRF) -> SurrealRF { (&self).$m(&rhs) }
        }
        impl $tr<&SurrealRF> for SurrealRF {
            type Output = SurrealRF;
            fn $m(self, rhs: &SurrealRF) -> SurrealRF { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for SurrealRF {
    type Output = SurrealRF;
    fn neg(self) -> SurrealRF {
        -&self
    }
}

impl From<i64> for SurrealRF {
    fn from(n: i64) -> Self {
        SurrealRF::integer(n)
    }
}

impl From<Rational> for SurrealRF {
    fn from(q: Rational) -> Self {
        SurrealRF::from_rational(&q)
    }
}

impl fmt::Display for SurrealRF {
    /// Canonical form: a bare rational (`3/4`, `-1`), a bare polynomial when the
    /// denominator is 1 (`w + 1`), otherwise `(<numerator>)/(<denominator>)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.to_rational() {
            return write!(f, "{q}");
        }
        if self.den.is_constant() && self.den.constant_term().is_one() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/({})", self.num, self.den)
    }
}

impl fmt::Debug for SurrealRF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SurrealRF({self})")
    }
}

impl FromStr for SurrealRF {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        super::parse::parse_field(s)
    }
}

impl Serialize for SurrealRF {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SurrealRF {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
