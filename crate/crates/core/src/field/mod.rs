//! Exact number types: integer polynomials, the ordered field Q(w), dyadics and rationals.

mod dyadic;
pub(crate) mod parse;
mod poly;
mod rf;

use std::fmt::{Debug, Display};

pub use dyadic::Dyadic;
pub use parse::parse_field;
pub use poly::IntPoly;
pub use rf::{Sign, SurrealRF};

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

/// An exact ordered field, as needed by the simplex solver and matrix games.
pub trait OrderedField: Clone + Ord + Eq + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Panics when `rhs` is zero; callers only divide by checked pivots.
    fn div(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    fn is_negative(&self) -> bool {
        *self < Self::zero()
    }

    fn is_positive(&self) -> bool {
        *self > Self::zero()
    }
}

impl OrderedField for SurrealRF {
    fn zero() -> Self {
        SurrealRF::zero()
    }
    fn one() -> Self {
        SurrealRF::one()
    }
    fn from_i64(n: i64) -> Self {
        SurrealRF::integer(n)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        SurrealRF::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        self.sign() == Sign::Negative
    }
    fn is_positive(&self) -> bool {
        self.sign() == Sign::Positive
    }
}

impl OrderedField for Rational {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn from_i64(n: i64) -> Self {
        Rational::from_integer(n.into())
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
}

/// Serde helpers writing rationals as `"p/q"` strings.
pub mod rational_str {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::Rational;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(q)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        text.trim().parse().map_err(serde::de::Error::custom)
    }

    pub mod vec {
        use serde::ser::SerializeSeq;
        use serde::{Deserialize, Deserializer, Serializer};

        use super::Rational;

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for q in v {
                seq.serialize_element(&q.to_string())?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            Vec::<String>::deserialize(d)?
                .iter()
                .map(|t| t.trim().parse().map_err(serde::de::Error::custom))
                .collect()
        }
    }
}
