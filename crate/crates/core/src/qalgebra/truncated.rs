use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::LaurentPoly;

/// The half-open exponent range `[min_exponent, cutoff)` on which a series
/// coefficient is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesWindow {
    pub min_exponent: i64,
    pub cutoff: i64,
}

impl SeriesWindow {
    pub fn len(&self) -> i64 {
        (self.cutoff - self.min_exponent).max(0)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// A Laurent series known exactly for every exponent below `cutoff`.
///
/// Coefficients below `min_exponent` are zero; coefficients at or beyond
/// `cutoff` are unknown and never reported.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedLaurentSeries {
    min_exponent: i64,
    cutoff: i64,
    coeffs: Vec<BigInt>,
}

impl TruncatedLaurentSeries {
    pub fn zero(cutoff: i64) -> Self {
        let min_exponent = cutoff.min(0);
        Self {
            min_exponent,
            cutoff,
            coeffs: vec![BigInt::zero(); (cutoff - min_exponent) as usize],
        }
    }

    pub fn one(cutoff: i64) -> Self {
        Self::from_poly(&LaurentPoly::one(), cutoff)
    }

    /// Truncates an exact polynomial below `cutoff`.
    pub fn from_poly(p: &LaurentPoly, cutoff: i64) -> Self {
        let min_exponent = p.min_exponent().unwrap_or(0).min(cutoff);
        let mut coeffs = vec![BigInt::zero(); (cutoff - min_exponent) as usize];
        for (e, c) in p.terms() {
            if e < cutoff {
                coeffs[(e - min_exponent) as usize] = c.clone();
            }
        }
        Self {
            min_exponent,
            cutoff,
            coeffs,
        }
    }

    /// `1/(1 - q^n) = sum_k q^(k n)` for `n >= 1`.
    pub fn geometric(n: i64, cutoff: i64) -> Self {
        assert!(n >= 1, "geometric series needs a positive step");
        let mut s = Self::zero(cutoff);
        let mut e = 0;
        while e < cutoff {
            s.coeffs[(e - s.min_exponent) as usize] = BigInt::from(1);
            e += n;
        }
        s
    }

    pub fn min_exponent(&self) -> i64 {
        self.min_exponent
    }

    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    pub fn window(&self) -> SeriesWindow {
        SeriesWindow {
            min_exponent: self.min_exponent,
            cutoff: self.cutoff,
        }
    }

    /// Coefficient of `q^e`, or `None` when `e` is at or beyond the cutoff.
    pub fn coeff(&self, e: i64) -> Option<BigInt> {
        if e >= self.cutoff {
            None
        } else if e < self.min_exponent {
            Some(BigInt::zero())
        } else {
            Some(self.coeffs[(e - self.min_exponent) as usize].clone())
        }
    }

    fn coeff_ref(&self, e: i64) -> Option<&BigInt> {
        if e < self.min_exponent || e >= self.cutoff {
            None
        } else {
            Some(&self.coeffs[(e - self.min_exponent) as usize])
        }
    }

    /// The known part as an exact polynomial.
    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::from_dense(self.min_exponent, self.coeffs.clone())
    }

    /// Lowers the cutoff; a larger request keeps the current one.
    pub fn truncate(&self, cutoff: i64) -> Self {
        let cutoff = cutoff.min(self.cutoff);
        let min_exponent = self.min_exponent.min(cutoff);
        let keep = (cutoff - min_exponent) as usize;
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(keep);
        Self {
            min_exponent,
            cutoff,
            coeffs,
        }
    }

    /// Multiplies by `q^k`; the window moves with the series.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            min_exponent: self.min_exponent + k,
            cutoff: self.cutoff + k,
            coeffs: self.coeffs.clone(),
        }
    }

    fn combine(&self, rhs: &Self, negate: bool) -> Self {
        let cutoff = self.cutoff.min(rhs.cutoff);
        let min_exponent = self.min_exponent.min(rhs.min_exponent).min(cutoff);
        let mut coeffs = vec![BigInt::zero(); (cutoff - min_exponent) as usize];
        for (k, slot) in coeffs.iter_mut().enumerate() {
            let e = min_exponent + k as i64;
            if let Some(a) = self.coeff_ref(e) {
                *slot += a;
            }
            if let Some(b) = rhs.coeff_ref(e) {
                if negate {
                    *slot -= b;
                } else {
                    *slot += b;
                }
            }
        }
        Self {
            min_exponent,
            cutoff,
            coeffs,
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.combine(rhs, false)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.combine(rhs, true)
    }

    /// Product of two series. The result is valid below
    /// `min(a.cutoff + b.min_exponent, b.cutoff + a.min_exponent)`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let min_exponent = self.min_exponent + rhs.min_exponent;
        let cutoff = (self.cutoff + rhs.min_exponent).min(rhs.cutoff + self.min_exponent);
        let len = (cutoff - min_exponent).max(0) as usize;
        let mut coeffs = vec![BigInt::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self {
            min_exponent,
            cutoff: cutoff.max(min_exponent),
            coeffs,
        }
    }

    /// Product with an exact polynomial; the cutoff drops by the polynomial's
    /// lowest exponent (and rises if that exponent is positive).
    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        let Some(lo) = p.min_exponent() else {
            return Self::zero(self.cutoff);
        };
        let hi = p.max_exponent().unwrap_or(lo);
        // p is exact: pad its window so that this series' cutoff binds.
        let exact = Self::from_poly(p, hi + 1 + (self.cutoff - self.min_exponent));
        self.mul(&exact)
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        Self {
            min_exponent: self.min_exponent,
            cutoff: self.cutoff,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// The common window of two series: `[min of mins, min of cutoffs)`.
    pub fn shared_window(&self, rhs: &Self) -> SeriesWindow {
        let cutoff = self.cutoff.min(rhs.cutoff);
        SeriesWindow {
            min_exponent: self.min_exponent.min(rhs.min_exponent).min(cutoff),
            cutoff,
        }
    }

    /// First exponent in the shared window where the two series differ.
    pub fn first_disagreement(&self, rhs: &Self) -> Option<i64> {
        let w = self.shared_window(rhs);
        (w.min_exponent..w.cutoff).find(|&e| self.coeff(e) != rhs.coeff(e))
    }

    /// First exponent below this series' cutoff where it differs from `p`.
    pub fn first_disagreement_with_poly(&self, p: &LaurentPoly) -> Option<i64> {
        let lo = self
            .min_exponent
            .min(p.min_exponent().unwrap_or(self.min_exponent));
        (lo..self.cutoff).find(|&e| self.coeff(e).unwrap_or_default() != p.coeff(e))
    }
}

/// Known coefficients followed by `+ O(q^cutoff)`.
impl fmt::Display for TruncatedLaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.to_poly();
        if p.is_zero() {
            write!(f, "O(q^{})", self.cutoff)
        } else {
            write!(f, "{p} + O(q^{})", self.cutoff)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn poly_round_trip_below_cutoff() {
        let p = poly("q^-3 + 2 - q^4 + q^9");
        let s = TruncatedLaurentSeries::from_poly(&p, 5);
        assert_eq!(s.to_poly(), poly("q^-3 + 2 - q^4"));
        assert_eq!(s.coeff(9), None);
        assert_eq!(s.coeff(-10), Some(BigInt::zero()));
    }

    #[test]
    fn product_window_shrinks_with_negative_prefactor() {
        let g = TruncatedLaurentSeries::geometric(1, 10);
        let s = g.mul_poly(&LaurentPoly::q_pow(-3));
        assert_eq!(s.min_exponent(), -3);
        assert_eq!(s.cutoff(), 7);
        assert_eq!(s.coeff(6), Some(BigInt::from(1)));
        assert_eq!(s.coeff(7), None);
    }

    #[test]
    fn geometric_inverse_of_one_minus_q() {
        let g = TruncatedLaurentSeries::geometric(1, 12);
        let one_minus_q = poly("1 - q");
        let prod = g.mul_poly(&one_minus_q);
        assert_eq!(prod.cutoff(), 12);
        assert_eq!(prod.to_poly(), LaurentPoly::one());
    }

    #[test]
    fn sums_use_the_narrower_cutoff() {
        let a = TruncatedLaurentSeries::geometric(2, 8);
        let b = TruncatedLaurentSeries::geometric(3, 6).shift(-1);
        let s = a.add(&b);
        assert_eq!(s.cutoff(), 5);
        assert_eq!(s.min_exponent(), -1);
        assert_eq!(s.to_poly(), poly("q^-1 + 1 + 2*q^2 + q^4"));
        assert_eq!(a.sub(&a).to_poly(), LaurentPoly::zero());
    }

    #[test]
    fn first_disagreement_reports_lowest_exponent() {
        let a = TruncatedLaurentSeries::from_poly(&poly("1 + q + q^3"), 6);
        let b = TruncatedLaurentSeries::from_poly(&poly("1 + q + 2*q^3"), 6);
        assert_eq!(a.first_disagreement(&b), Some(3));
        assert_eq!(a.first_disagreement(&a), None);
        assert_eq!(a.first_disagreement_with_poly(&poly("1 + q")), Some(3));
    }
}
