//! Exact arithmetic kernel: Laurent polynomials, truncated Laurent series,
//! rational functions of `q`, q-Pochhammer symbols and Gaussian binomials.

mod laurent;
mod qfunc;
mod rational;
mod truncated;

pub use laurent::LaurentPoly;
pub use qfunc::{
    gauss_binomial, odd_pochhammer, q_binomial, q_pochhammer, series_inverse_euler,
    series_inverse_pochhammer, series_inverse_product, BinomialCache,
};
pub use rational::RationalQ;
pub use truncated::{SeriesWindow, TruncatedLaurentSeries};

/// `p(1/q)`.
pub fn invert_variable(p: &LaurentPoly) -> LaurentPoly {
    p.invert_variable()
}

/// `p(1)`, the sum of the coefficients.
pub fn eval_at_one(p: &LaurentPoly) -> num_bigint::BigInt {
    p.eval_at_one()
}
