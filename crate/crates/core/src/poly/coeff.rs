use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::PolyError;

/// Exact rational number.
pub type Rational = BigRational;

/// Default modulus for the prime-field mode.
pub const DEFAULT_PRIME: u32 = 65521;

/// The coefficient field of a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(u32),
}

/// A field element. The tag always agrees with the owning ring's [`Field`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rational(Rational),
    Prime(u32),
}

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn inv_mod(a: u32, q: u32) -> u32 {
    debug_assert!(a != 0);
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (q as i64, a as i64);
    while new_r != 0 {
        let quot = r / new_r;
        (t, new_t) = (new_t, t - quot * new_t);
        (r, new_r) = (new_r, r - quot * new_r);
    }
    if t < 0 {
        t += q as i64;
    }
    t as u32
}

impl Field {
    /// Prime field with modulus `q`; `q` must be an odd prime below 2^31.
    pub fn prime(q: u64) -> Result<Field, PolyError> {
        if !(3..(1 << 31)).contains(&q) || !is_prime(q) {
            return Err(PolyError::InvalidModulus(q));
        }
        Ok(Field::Prime(q as u32))
    }

    pub fn zero(&self) -> Coeff {
        match self {
            Field::Rationals => Coeff::Rational(Rational::zero()),
            Field::Prime(_) => Coeff::Prime(0),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            Field::Rationals => Coeff::Rational(Rational::one()),
            Field::Prime(_) => Coeff::Prime(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match *self {
            Field::Rationals => Coeff::Rational(Rational::from_integer(BigInt::from(n))),
            Field::Prime(q) => Coeff::Prime(n.rem_euclid(q as i64) as u32),
        }
    }

    /// Image of an exact rational in this field.
    pub fn from_rational(&self, r: &Rational) -> Result<Coeff, PolyError> {
        match *self {
            Field::Rationals => Ok(Coeff::Rational(r.clone())),
            Field::Prime(q) => {
                let qb = BigInt::from(q);
                let num = r.numer().mod_floor(&qb).to_u32().unwrap_or(0);
                let den = r.denom().mod_floor(&qb).to_u32().unwrap_or(0);
                if den == 0 {
                    return Err(PolyError::NotInvertible(q));
                }
                Ok(Coeff::Prime(((num as u64 * inv_mod(den, q) as u64) % q as u64) as u32))
            }
        }
    }

    pub fn contains(&self, c: &Coeff) -> bool {
        match (self, c) {
            (Field::Rationals, Coeff::Rational(_)) => true,
            (Field::Prime(q), Coeff::Prime(v)) => v < q,
            _ => false,
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Rationals, Coeff::Rational(x), Coeff::Rational(y)) => Coeff::Rational(x + y),
            (Field::Prime(q), Coeff::Prime(x), Coeff::Prime(y)) => {
                Coeff::Prime(((*x as u64 + *y as u64) % *q as u64) as u32)
            }
            _ => panic!("coefficient does not belong to field {self:?}"),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (Field::Rationals, Coeff::Rational(x)) => Coeff::Rational(-x),
            (Field::Prime(q), Coeff::Prime(x)) => Coeff::Prime(if *x == 0 { 0 } else { q - x }),
            _ => panic!("coefficient does not belong to field {self:?}"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Rationals, Coeff::Rational(x), Coeff::Rational(y)) => Coeff::Rational(x * y),
            (Field::Prime(q), Coeff::Prime(x), Coeff::Prime(y)) => {
                Coeff::Prime(((*x as u64 * *y as u64) % *q as u64) as u32)
            }
            _ => panic!("coefficient does not belong to field {self:?}"),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: &Coeff) -> Coeff {
        assert!(!a.is_zero(), "inverse of zero");
        match (self, a) {
            (Field::Rationals, Coeff::Rational(x)) => Coeff::Rational(x.recip()),
            (Field::Prime(q), Coeff::Prime(x)) => Coeff::Prime(inv_mod(*x, *q)),
            _ => panic!("coefficient does not belong to field {self:?}"),
        }
    }

    pub fn from_u64(&self, n: u64) -> Coeff {
        match *self {
            Field::Rationals => Coeff::Rational(Rational::from_integer(BigInt::from(n))),
            Field::Prime(q) => Coeff::Prime((n % q as u64) as u32),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(q) => write!(f, "F_{q}"),
        }
    }
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rational(r) => r.is_zero(),
            Coeff::Prime(v) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rational(r) => r.is_one(),
            Coeff::Prime(v) => *v == 1,
        }
    }

    /// True for printing purposes: a rational with negative sign.
    pub(crate) fn is_negative(&self) -> bool {
        match self {
            Coeff::Rational(r) => r.is_negative(),
            Coeff::Prime(_) => false,
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Coeff::Rational(r) => Some(r),
            Coeff::Prime(_) => None,
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rational(r) => write!(f, "{r}"),
            Coeff::Prime(v) => write!(f, "{v}"),
        }
    }
}

/// Convenience constructor for small exact rationals.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(Field::prime(65521).is_ok());
        assert_eq!(Field::prime(65520), Err(PolyError::InvalidModulus(65520)));
        assert!(Field::prime(2).is_err());
    }

    #[test]
    fn modular_image_of_rational() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.from_rational(&rat(3, 4)).unwrap(), Coeff::Prime(6)); // 4*6 = 24 = 3 mod 7
        assert_eq!(f.from_rational(&rat(-1, 1)).unwrap(), Coeff::Prime(6));
        assert_eq!(f.from_rational(&rat(1, 7)), Err(PolyError::NotInvertible(7)));
    }

    #[test]
    fn prime_inverse() {
        let f = Field::Prime(DEFAULT_PRIME);
        for v in [1u32, 2, 3, 400, 65520] {
            let c = Coeff::Prime(v);
            assert!(f.mul(&c, &f.inv(&c)).is_one());
        }
    }

    #[test]
    fn rationals_stay_reduced() {
        let f = Field::Rationals;
        let s = f.add(&Coeff::Rational(rat(1, 6)), &Coeff::Rational(rat(1, 3)));
        assert_eq!(s, Coeff::Rational(rat(1, 2)));
        assert_eq!(rat(2, -4), rat(-1, 2));
    }
}
