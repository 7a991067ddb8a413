//! Andrews-Santos polynomials `S_m`, `T_m`, extended to negative `m` as
//! rational functions, and the two identities relating them to sums of odd
//! Gaussian binomials.

use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;

use crate::qalgebra::{gauss_binomial, odd_pochhammer, LaurentPoly, RationalQ};
use crate::report::{run_grid, ReportBuilder, VerificationReport};

/// Value of `S_m` or `T_m`: a polynomial for `m >= 0`, a rational function
/// with denominator `(q;q^2)_{|m|}` otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SantosValue(pub RationalQ);

impl SantosValue {
    pub fn as_rational(&self) -> &RationalQ {
        &self.0
    }

    pub fn invert_variable(&self) -> Self {
        Self(self.0.invert_variable())
    }
}

impl fmt::Display for SantosValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn odd_sum(m: i64, parity: i64) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    let mut t = 0;
    while 2 * t + parity <= m {
        acc += gauss_binomial(m, 2 * t + parity).shift(2 * t * t + 2 * t * parity);
        t += 1;
    }
    acc
}

fn reflected(k: i64, sign_even: bool, exponent: i64, positive: LaurentPoly) -> SantosValue {
    let sign = if (k % 2 == 0) == sign_even { 1 } else { -1 };
    let num = positive
        .invert_variable()
        .shift(exponent)
        .scale(&BigInt::from(sign));
    let den = odd_pochhammer(k).expect("k >= 0");
    SantosValue(RationalQ::new(num, den).expect("(q;q^2)_k is nonzero"))
}

/// `S_m = Σ_t q^(2t²) [m; 2t]`; `S_{-k} = (-1)^k q^(k²) S_k(1/q) / (q;q²)_k`.
pub fn santos_s(m: i64) -> SantosValue {
    if m >= 0 {
        return SantosValue(odd_sum(m, 0).into());
    }
    let k = -m;
    reflected(k, true, k * k, odd_sum(k, 0))
}

/// `T_m = Σ_t q^(2t²+2t) [m; 2t+1]`; `T_{-k} = (-1)^(k+1) q^(k²-1) T_k(1/q) / (q;q²)_k`.
pub fn santos_t(m: i64) -> SantosValue {
    if m >= 0 {
        return SantosValue(odd_sum(m, 1).into());
    }
    let k = -m;
    reflected(k, false, k * k - 1, odd_sum(k, 1))
}

/// `Σ_t [L; 2t+1] q^(2t² + 2ct)`.
fn odd_binomial_sum(l: i64, c: i64) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    let mut t = 0;
    while 2 * t < l {
        acc += gauss_binomial(l, 2 * t + 1).shift(2 * t * t + 2 * c * t);
        t += 1;
    }
    acc
}

fn poly(v: SantosValue) -> LaurentPoly {
    v.0.numerator().clone()
}

/// `q^m (q;q²)_m Σ_t [L; 2t+1] q^(2t²+2(m+1)t) = S_m T_{L+m} - T_m S_{L+m}`.
pub fn verify_p1(l_max: i64, m_max: i64) -> VerificationReport {
    let grid = [("L", format!("0..={l_max}")), ("m", format!("0..={m_max}"))];
    run_grid("santos-P1", &grid, (0..=l_max).collect(), |l, rep| {
        for m in 0..=m_max {
            let pre = odd_pochhammer(m).expect("m >= 0").shift(m);
            let lhs = pre * odd_binomial_sum(l, m + 1);
            let rhs = poly(santos_s(m)) * poly(santos_t(l + m))
                - poly(santos_t(m)) * poly(santos_s(l + m));
            rep.check_poly("P1", &[("L", l), ("m", m)], &lhs, &rhs);
        }
    })
}

/// `Σ_t [L; 2t+1] q^(2t²-2Mt) = q^(M+1) S_{M+1}(1/q) T_{L-M-1} + q^M T_{M+1}(1/q) S_{L-M-1}`,
/// compared as rational functions.
pub fn verify_p2(l_max: i64, m_range: RangeInclusive<i64>) -> VerificationReport {
    let grid = [
        ("L", format!("0..={l_max}")),
        ("M", format!("{}..={}", m_range.start(), m_range.end())),
    ];
    run_grid("santos-P2", &grid, (0..=l_max).collect(), |l, rep| {
        for m in m_range.clone() {
            let lhs = RationalQ::from(odd_binomial_sum(l, -m));
            let first = santos_s(m + 1)
                .invert_variable()
                .0
                .scale_poly(&LaurentPoly::q_pow(m + 1));
            let second = santos_t(m + 1)
                .invert_variable()
                .0
                .scale_poly(&LaurentPoly::q_pow(m));
            let rhs = &(&first * &santos_t(l - m - 1).0) + &(&second * &santos_s(l - m - 1).0);
            rep.check_rational("P2", &[("L", l), ("M", m)], &lhs, &rhs);
        }
    })
}

/// Undoing the negative-index closed form recovers the original value:
/// `S_m(q) = (-1)^m q^(m²) (q^-1;q^-2)_m S_{-m}(1/q)` and
/// `T_m(q) = (-1)^(m+1) q^(m²-1) (q^-1;q^-2)_m T_{-m}(1/q)`, for `0 <= m <= m_max`.
pub fn verify_reflection(m_max: i64) -> VerificationReport {
    let mut rep = ReportBuilder::new("santos-reflection").grid("m", format!("0..={m_max}"));
    for m in 0..=m_max {
        let back = odd_pochhammer(m).expect("m >= 0").invert_variable();
        let sign = |even: bool| BigInt::from(if (m % 2 == 0) == even { 1 } else { -1 });
        let s_back = santos_s(-m)
            .invert_variable()
            .0
            .scale_poly(&back.shift(m * m).scale(&sign(true)));
        rep.check_rational("S", &[("m", m)], &santos_s(m).0, &s_back);
        let t_back = santos_t(-m)
            .invert_variable()
            .0
            .scale_poly(&back.shift(m * m - 1).scale(&sign(false)));
        rep.check_rational("T", &[("m", m)], &santos_t(m).0, &t_back);
    }
    rep.finish()
}
