use core::fmt::Debug;

use num_traits::{One, Zero};

use crate::poly::{inv_mod, Coeff, Rational};

/// Coefficient arithmetic used inside the Gröbner engine.
///
/// Separate from [`Coeff`] so the prime-field path runs on bare `u32`s.
pub(crate) trait Arith: Copy {
    type E: Clone + PartialEq + Debug;

    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn is_one(&self, a: &Self::E) -> bool;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
    /// `a - b * c`
    fn sub_mul(&self, a: &Self::E, b: &Self::E, c: &Self::E) -> Self::E;
    fn lift(&self, c: &Coeff) -> Self::E;
    fn lower(&self, e: Self::E) -> Coeff;
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct RationalArith;

#[derive(Clone, Copy, Debug)]
pub(crate) struct PrimeArith {
    pub q: u32,
}

impl Arith for RationalArith {
    type E = Rational;

    fn one(&self) -> Rational {
        Rational::one()
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &Rational) -> bool {
        a.is_one()
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn inv(&self, a: &Rational) -> Rational {
        a.recip()
    }
    fn sub_mul(&self, a: &Rational, b: &Rational, c: &Rational) -> Rational {
        a - b * c
    }
    fn lift(&self, c: &Coeff) -> Rational {
        match c {
            Coeff::Rational(r) => r.clone(),
            Coeff::Prime(_) => unreachable!("prime coefficient in a rational ring"),
        }
    }
    fn lower(&self, e: Rational) -> Coeff {
        Coeff::Rational(e)
    }
}

impl Arith for PrimeArith {
    type E = u32;

    fn one(&self) -> u32 {
        1
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn is_one(&self, a: &u32) -> bool {
        *a == 1
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.q - a
        }
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.q as u64) as u32
    }
    fn inv(&self, a: &u32) -> u32 {
        inv_mod(*a, self.q)
    }
    fn sub_mul(&self, a: &u32, b: &u32, c: &u32) -> u32 {
        let q = self.q as u64;
        let bc = (*b as u64 * *c as u64) % q;
        ((*a as u64 + q - bc) % q) as u32
    }
    fn lift(&self, c: &Coeff) -> u32 {
        match c {
            Coeff::Prime(v) => *v,
            Coeff::Rational(_) => unreachable!("rational coefficient in a prime ring"),
        }
    }
    fn lower(&self, e: u32) -> Coeff {
        Coeff::Prime(e)
    }
}

/// Runs `$body` with `$a` bound to the arithmetic matching `$field`.
macro_rules! with_arith {
    ($field:expr, |$a:ident| $body:expr) => {
        match $field {
            $crate::poly::Field::Rationals => {
                let $a = $crate::groebner::arith::RationalArith;
                $body
            }
            $crate::poly::Field::Prime(q) => {
                let $a = $crate::groebner::arith::PrimeArith { q };
                $body
            }
        }
    };
}
pub(crate) use with_arith;
