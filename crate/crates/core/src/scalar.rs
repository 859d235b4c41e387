//! Coefficient fields for the exact linear algebra.
//!
//! Everything that eliminates (ranks, quotient coordinates, Koszul duals) is
//! generic over [`Field`]. Two implementations ship: arbitrary precision
//! rationals, which give exact ranks, and the prime fields [`Fp`], which are
//! much faster but may under-report a rank when a pivot vanishes modulo `P`.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A commutative field with exact equality.
pub trait Field:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Hash
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Whether ranks computed over this field are ranks over the rationals.
    const EXACT: bool;

    fn from_i64(value: i64) -> Self;

    /// Short name used in reports, e.g. `rational` or `gfp:32003`.
    fn name() -> String;
}

impl Field for BigRational {
    const EXACT: bool = true;

    fn from_i64(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }

    fn name() -> String {
        "rational".to_string()
    }
}

/// The prime field `Z/PZ`. `P` must be prime and below `2^63`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(value: u64) -> Self {
        Fp(value % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut exp: u64) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inverse(self) -> Self {
        assert!(self.0 != 0, "inverse of zero in GF({P})");
        self.pow(P - 2)
    }
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {P})", self.0)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        if self.0 >= rhs.0 {
            Fp(self.0 - rhs.0)
        } else {
            Fp(self.0 + P - rhs.0)
        }
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp::zero() - self
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse()
    }
}

impl<const P: u64> Field for Fp<P> {
    const EXACT: bool = false;

    fn from_i64(value: i64) -> Self {
        let r = value.rem_euclid(P as i64);
        Fp(r as u64)
    }

    fn name() -> String {
        format!("gfp:{P}")
    }
}

/// Trial-division primality test, adequate for the moduli accepted on the command line.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    type F7 = Fp<7>;

    #[test]
    fn prime_field_arithmetic() {
        assert_eq!(F7::new(3) + F7::new(5), F7::new(1));
        assert_eq!(F7::new(3) - F7::new(5), F7::new(5));
        assert_eq!(F7::new(3) * F7::new(5), F7::new(1));
        assert_eq!(F7::new(1) / F7::new(3), F7::new(5));
        assert_eq!(-F7::new(2), F7::new(5));
        assert_eq!(F7::from_i64(-1), F7::new(6));
        for v in 1..7 {
            assert_eq!(F7::new(v) * F7::new(v).inverse(), F7::one());
        }
    }

    #[test]
    fn names() {
        assert_eq!(<BigRational as Field>::name(), "rational");
        assert_eq!(F7::name(), "gfp:7");
        const { assert!(BigRational::EXACT) };
        const { assert!(!F7::EXACT) };
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(32003));
        assert!(!is_prime(1));
        assert!(!is_prime(65535));
    }
}
