use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::LaurentPoly;
use crate::error::{domain, Result};

/// Quotient of two Laurent polynomials, kept unreduced.
///
/// Equality is decided by cross-multiplication: `a/b == c/d` iff `ad == cb`.
#[derive(Clone, Debug)]
pub struct RationalQ {
    numerator: LaurentPoly,
    denominator: LaurentPoly,
}

impl RationalQ {
    pub fn new(numerator: LaurentPoly, denominator: LaurentPoly) -> Result<Self> {
        if denominator.is_zero() {
            return domain("rational function with zero denominator");
        }
        Ok(Self {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.denominator
    }

    pub fn is_polynomial(&self) -> bool {
        self.denominator.is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// `r(1/q)`, applied to numerator and denominator.
    pub fn invert_variable(&self) -> Self {
        Self {
            numerator: self.numerator.invert_variable(),
            denominator: self.denominator.invert_variable(),
        }
    }

    pub fn scale_poly(&self, p: &LaurentPoly) -> Self {
        Self {
            numerator: &self.numerator * p,
            denominator: self.denominator.clone(),
        }
    }
}

impl From<LaurentPoly> for RationalQ {
    fn from(p: LaurentPoly) -> Self {
        Self {
            numerator: p,
            denominator: LaurentPoly::one(),
        }
    }
}

impl PartialEq for RationalQ {
    fn eq(&self, other: &Self) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }
}

impl Eq for RationalQ {}

impl Add<&RationalQ> for &RationalQ {
    type Output = RationalQ;
    fn add(self, rhs: &RationalQ) -> RationalQ {
        if self.denominator == rhs.denominator {
            return RationalQ {
                numerator: &self.numerator + &rhs.numerator,
                denominator: self.denominator.clone(),
            };
        }
        RationalQ {
            numerator: &self.numerator * &rhs.denominator + &rhs.numerator * &self.denominator,
            denominator: &self.denominator * &rhs.denominator,
        }
    }
}

impl Neg for &RationalQ {
    type Output = RationalQ;
    fn neg(self) -> RationalQ {
        RationalQ {
            numerator: -&self.numerator,
            denominator: self.denominator.clone(),
        }
    }
}

impl Sub<&RationalQ> for &RationalQ {
    type Output = RationalQ;
    fn sub(self, rhs: &RationalQ) -> RationalQ {
        self + &(-rhs)
    }
}

impl Mul<&RationalQ> for &RationalQ {
    type Output = RationalQ;
    fn mul(self, rhs: &RationalQ) -> RationalQ {
        RationalQ {
            numerator: &self.numerator * &rhs.numerator,
            denominator: &self.denominator * &rhs.denominator,
        }
    }
}

impl fmt::Display for RationalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({})/({})", self.numerator, self.denominator)
        }
    }
}
