use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::Rational;

/// A dyadic rational `numerator / 2^exponent` in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    numerator: BigInt,
    exponent: u32,
}

impl Dyadic {
    pub fn new(numerator: impl Into<BigInt>, exponent: u32) -> Self {
        let mut numerator = numerator.into();
        let mut exponent = exponent;
        if numerator.is_zero() {
            exponent = 0;
        }
        while exponent > 0 && numerator.is_even() {
            numerator >>= 1;
            exponent -= 1;
        }
        Dyadic { numerator, exponent }
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Dyadic {
            numerator: n.into(),
            exponent: 0,
        }
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn is_integer(&self) -> bool {
        self.exponent == 0
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(self.numerator.clone(), BigInt::one() << self.exponent)
    }

    /// The rational as a dyadic, if its reduced denominator is a power of two.
    pub fn from_rational(q: &Rational) -> Option<Self> {
        let den = q.denom();
        let exponent = den.trailing_zeros().unwrap_or(0);
        if den != &(BigInt::one() << exponent) {
            return None;
        }
        Some(Dyadic::new(q.numer().clone(), exponent.to_u32()?))
    }

    /// `2^-k`
    pub fn pow2_inverse(k: u32) -> Self {
        Dyadic::new(1, k)
    }

    /// `self / 2`
    pub fn half(&self) -> Self {
        Dyadic::new(self.numerator.clone(), self.exponent + 1)
    }

    pub fn floor(&self) -> BigInt {
        self.numerator.div_floor(&(BigInt::one() << self.exponent))
    }

    pub fn ceil(&self) -> BigInt {
        -((-&self.numerator).div_floor(&(BigInt::one() << self.exponent)))
    }

    fn aligned(&self, other: &Self) -> (BigInt, BigInt, u32) {
        let e = self.exponent.max(other.exponent);
        (
            &self.numerator << (e - self.exponent),
            &other.numerator << (e - other.exponent),
            e,
        )
    }

    /// The simplest dyadic strictly between `lo` and `hi` (either bound may be absent).
    ///
    /// Simplest means: an integer of least magnitude if one fits, otherwise the
    /// fitting dyadic with the smallest denominator.
    pub fn simplest_between(lo: Option<&Dyadic>, hi: Option<&Dyadic>) -> Dyadic {
        if let (Some(l), Some(h)) = (lo, hi) {
            assert!(l < h, "simplest_between requires lo < hi");
        }
        // integers first
        let int_lo: Option<BigInt> = lo.map(|l| l.floor() + 1);
        let int_hi: Option<BigInt> = hi.map(|h| h.ceil() - 1);
        let fits = match (&int_lo, &int_hi) {
            (Some(a), Some(b)) => a <= b,
            _ => true,
        };
        if fits {
            let zero = BigInt::zero();
            let n = match (&int_lo, &int_hi) {
                (Some(a), _) if a > &zero => a.clone(),
                (_, Some(b)) if b < &zero => b.clone(),
                _ => zero,
            };
            return Dyadic::integer(n);
        }
        let (l, h) = (lo.unwrap(), hi.unwrap());
        let mut k = 1u32;
        loop {
            // smallest m with m / 2^k > l; `>>` on BigInt rounds toward -inf
            let lo_k = if k >= l.exponent {
                (&l.numerator << (k - l.exponent)) + 1
            } else {
                (&l.numerator >> (l.exponent - k)) + 1
            };
            let candidate = Dyadic::new(lo_k, k);
            if &candidate < h && &candidate > l {
                return candidate;
            }
            k += 1;
        }
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(rhs);
        Dyadic::new(a + b, e)
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            numerator: -&self.numerator,
            exponent: self.exponent,
        }
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, BigInt::one() << self.exponent)
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dyadic({self})")
    }
}

impl From<i64> for Dyadic {
    fn from(n: i64) -> Self {
        Dyadic::integer(n)
    }
}
