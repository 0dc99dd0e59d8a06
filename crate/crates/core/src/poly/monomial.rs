use core::cmp::Ordering;
use core::hash::{Hash, Hasher};

use smallvec::SmallVec;

use crate::error::PolyError;

pub(crate) type Exps = SmallVec<[u16; 24]>;

/// Dense exponent vector, one entry per variable of the owning table.
///
/// Caches the total degree and a divisibility mask (bit `i % 64` set when
/// variable `i` occurs).
#[derive(Clone, Debug)]
pub struct Monomial {
    exps: Exps,
    degree: u32,
    mask: u64,
}

fn mask_of(exps: &[u16]) -> u64 {
    exps.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0u64, |m, (i, _)| m | (1u64 << (i % 64)))
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial { exps: smallvec::smallvec![0; nvars], degree: 0, mask: 0 }
    }

    pub fn from_exponents(exps: &[u16]) -> Monomial {
        Monomial {
            exps: Exps::from_slice(exps),
            degree: exps.iter().map(|&e| e as u32).sum(),
            mask: mask_of(exps),
        }
    }

    pub fn variable(nvars: usize, index: usize, power: u16) -> Monomial {
        let mut m = Monomial::one(nvars);
        if power > 0 {
            m.exps[index] = power;
            m.degree = power as u32;
            m.mask = 1u64 << (index % 64);
        }
        m
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    #[inline]
    pub fn exponent(&self, var: usize) -> u16 {
        self.exps[var]
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.try_mul(other).expect("exponent overflow")
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial, PolyError> {
        debug_assert_eq!(self.len(), other.len());
        let mut exps = Exps::with_capacity(self.len());
        for (a, b) in self.exps.iter().zip(other.exps.iter()) {
            exps.push(a.checked_add(*b).ok_or(PolyError::ExponentOverflow)?);
        }
        Ok(Monomial { exps, degree: self.degree + other.degree, mask: self.mask | other.mask })
    }

    pub fn pow(&self, n: u32) -> Result<Monomial, PolyError> {
        let mut exps = Exps::with_capacity(self.len());
        for &e in &self.exps {
            let v = (e as u32).checked_mul(n).ok_or(PolyError::ExponentOverflow)?;
            exps.push(u16::try_from(v).map_err(|_| PolyError::ExponentOverflow)?);
        }
        let degree = exps.iter().map(|&e| e as u32).sum();
        Ok(Monomial { mask: if n == 0 { 0 } else { self.mask }, exps, degree })
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.mask & !other.mask != 0 || self.degree > other.degree {
            return false;
        }
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        let exps: Exps = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a - b).collect();
        let mask = mask_of(&exps);
        Monomial { exps, degree: self.degree - other.degree, mask }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exps = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)).collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree, mask: self.mask | other.mask }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        if self.mask & other.mask == 0 {
            return true;
        }
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

/// Storage order: lexicographic on the exponent vector.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exps.cmp(&other.exps)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::from_exponents(&[1, 0, 2]);
        let b = Monomial::from_exponents(&[2, 1, 2]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(b.div(&a), Monomial::from_exponents(&[1, 1, 0]));
        assert_eq!(a.lcm(&Monomial::from_exponents(&[0, 3, 1])), Monomial::from_exponents(&[1, 3, 2]));
        assert!(Monomial::from_exponents(&[1, 0, 0]).is_coprime(&Monomial::from_exponents(&[0, 4, 1])));
    }

    #[test]
    fn overflow_is_reported() {
        let a = Monomial::from_exponents(&[u16::MAX]);
        assert_eq!(a.try_mul(&a), Err(PolyError::ExponentOverflow));
        assert_eq!(Monomial::from_exponents(&[300]).pow(300), Err(PolyError::ExponentOverflow));
    }
}
