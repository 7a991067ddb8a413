//! Finite Rogers-Ramanujan polynomials `e_L`, `d_L` and their shifted
//! generalisation `f_{s,b}(L, M)`.
//!
//! `e_L` and `d_L` are available in three independent forms: the positive
//! t-sum, the alternating j-sum, and iteration of the three-term recurrence
//! `c_L = c_{L-1} + q^(L-1) c_{L-2}`. Negative indices use the closed form
//! obtained by running the recurrence backwards.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{domain, precondition, Result};
use crate::qalgebra::{gauss_binomial, q_binomial, LaurentPoly};
use crate::report::{RenderedValue, ReportBuilder, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RrKind {
    /// `e_L`, with `e_0 = e_1 = 1`.
    E,
    /// `d_L`, with `d_0 = 0`, `d_1 = 1`.
    D,
}

impl RrKind {
    pub fn other(self) -> Self {
        match self {
            RrKind::E => RrKind::D,
            RrKind::D => RrKind::E,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RrKind::E => "e",
            RrKind::D => "d",
        }
    }
}

pub(crate) fn binom(n: i64, m: i64) -> LaurentPoly {
    q_binomial(n, m).expect("lower index is at least -1")
}

fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn choose2(m: i64) -> i64 {
    m * (m - 1) / 2
}

/// `e_L` or `d_L` from the positive t-sum; negative `L` via
/// `e_{-L} = (-1)^L q^C(L,2) d_{L-1}(1/q)`, `d_{-L} = (-1)^(L+1) q^C(L,2) e_{L-1}(1/q)`.
pub fn rr_fermionic(kind: RrKind, l: i64) -> LaurentPoly {
    if l < 0 {
        let k = -l;
        let inner = rr_fermionic(kind.other(), k - 1).invert_variable();
        let s = match kind {
            RrKind::E => sign(k),
            RrKind::D => sign(k + 1),
        };
        return inner.shift(choose2(k)).scale(&BigInt::from(s));
    }
    let extra = match kind {
        RrKind::E => 0,
        RrKind::D => 1,
    };
    let mut acc = LaurentPoly::zero();
    let mut t = 0;
    while l - 2 * t - extra >= 0 {
        acc += binom(t, l - 2 * t - extra).shift(t * t + extra * t);
        t += 1;
    }
    acc
}

/// `e_L` or `d_L` from the alternating j-sum.
pub fn rr_bosonic(kind: RrKind, l: i64) -> Result<LaurentPoly> {
    if l < 0 {
        return domain(format!("alternating sum needs L >= 0, got {l}"));
    }
    // lower-index offsets and exponents of the two families
    type Exponent = fn(i64) -> i64;
    let (a, b, first, second): (i64, i64, Exponent, Exponent) = match kind {
        RrKind::E => (0, 4, |j| j * (10 * j + 1), |j| (2 * j + 1) * (5 * j + 2)),
        RrKind::D => (1, 3, |j| j * (10 * j + 3), |j| (2 * j + 1) * (5 * j + 1)),
    };
    let lo_first = (l - a).div_euclid(2);
    let lo_second = (l - b).div_euclid(2);
    let reach = l / 5 + 2;
    let mut acc = LaurentPoly::zero();
    for j in -reach..=reach {
        acc += gauss_binomial(l, lo_first - 5 * j).shift(first(j));
        acc -= &gauss_binomial(l, lo_second - 5 * j).shift(second(j));
    }
    Ok(acc)
}

/// `e_L` or `d_L` by iterating the recurrence from `e_0 = e_1 = d_1 = 1`,
/// `d_0 = 0`, forwards for `L >= 0` and backwards for `L < 0`.
pub fn rr_by_recurrence(kind: RrKind, l: i64) -> LaurentPoly {
    let (c0, c1) = match kind {
        RrKind::E => (LaurentPoly::one(), LaurentPoly::one()),
        RrKind::D => (LaurentPoly::zero(), LaurentPoly::one()),
    };
    if l == 0 {
        return c0;
    }
    if l > 0 {
        let (mut prev, mut cur) = (c0, c1);
        for k in 2..=l {
            let next = &cur + &prev.shift(k - 1);
            prev = cur;
            cur = next;
        }
        return cur;
    }
    // c_{k-2} = q^{-(k-1)} (c_k - c_{k-1})
    let (mut hi, mut lo) = (c1, c0);
    for k in (l + 2..=1).rev() {
        let below = (&hi - &lo).shift(-(k - 1));
        hi = lo;
        lo = below;
    }
    lo
}

/// `f_{s,b}(L, M) = sum_t q^(t^2 + s t - M t) [L-t-s-b choose t]`.
///
/// The sum runs over `t >= -1` with the same lower-index convention as the
/// multisums: the `t = -1` term survives only for `L = 0`, `s = b = 1`, where
/// it contributes `q^M`.
pub fn f_shifted(s: i64, b: i64, l: i64, m: i64) -> Result<LaurentPoly> {
    if !matches!(s, 0 | 1) || !matches!(b, 0 | 1) {
        return domain(format!("boundary values must be 0 or 1, got s={s} b={b}"));
    }
    if l < 0 {
        return domain(format!("f_shifted needs L >= 0, got {l}"));
    }
    let mut acc = LaurentPoly::zero();
    let mut t = -1;
    while l - 2 * t - s - b >= 0 {
        acc += binom(t, l - 2 * t - s - b).shift(t * t + s * t - m * t);
        t += 1;
    }
    Ok(acc)
}

/// Fermionic, alternating and recurrence values agree for both kinds.
pub fn verify_representations(l_max: i64) -> VerificationReport {
    let mut rep = ReportBuilder::new("eq-1.3/1.4").grid("L", format!("0..={l_max}"));
    for kind in [RrKind::E, RrKind::D] {
        for l in 0..=l_max {
            let fermionic = rr_fermionic(kind, l);
            let bosonic = rr_bosonic(kind, l).expect("L >= 0");
            let recurrence = rr_by_recurrence(kind, l);
            let params = [("L", l), ("kind", kind as i64)];
            rep.check_poly("fermionic=bosonic", &params, &fermionic, &bosonic);
            rep.check_poly("fermionic=recurrence", &params, &fermionic, &recurrence);
        }
    }
    rep.finish()
}

/// The three-term recurrence across `[l_min, l_max]`, negative indices
/// included, plus agreement of the closed negative-index form with backward
/// iteration.
pub fn verify_rr_recurrence(l_min: i64, l_max: i64) -> VerificationReport {
    let mut rep = ReportBuilder::new("eq-1.8/1.10").grid("L", format!("{l_min}..={l_max}"));
    for kind in [RrKind::E, RrKind::D] {
        for l in l_min..=l_max {
            let params = [("L", l), ("kind", kind as i64)];
            let lhs = rr_fermionic(kind, l);
            let rhs = &rr_fermionic(kind, l - 1) + &rr_fermionic(kind, l - 2).shift(l - 1);
            rep.check_poly("eq-1.8", &params, &lhs, &rhs);
            if l < 0 {
                rep.check_poly("eq-1.10", &params, &lhs, &rr_by_recurrence(kind, l));
            }
        }
    }
    rep.finish()
}

/// Finite GIS identity for `m >= 0` and its reflected form for `0 <= M <= L`.
pub fn verify_gis_finite(l_max: i64, m_max: i64) -> VerificationReport {
    let mut rep = ReportBuilder::new("eq-1.13/1.14")
        .grid("L", format!("0..={l_max}"))
        .grid("m", format!("0..={m_max}"));
    let e = |l| rr_fermionic(RrKind::E, l);
    let d = |l| rr_fermionic(RrKind::D, l);
    for l in 0..=l_max {
        for m in 0..=m_max {
            let lhs = f_shifted(0, 0, l, -m).expect("L >= 0");
            let pre = -choose2(m);
            let rhs = (&d(m - 1) * &e(l + m))
                .shift(pre)
                .scale(&BigInt::from(sign(m)))
                + (&e(m - 1) * &d(l + m))
                    .shift(pre)
                    .scale(&BigInt::from(sign(m + 1)));
            rep.check_poly("eq-1.13", &[("L", l), ("m", m)], &lhs, &rhs);
        }
        for big_m in 0..=l {
            let lhs = f_shifted(0, 0, l, big_m).expect("L >= 0");
            let rhs = &e(big_m).invert_variable() * &e(l - big_m)
                + &d(big_m).invert_variable() * &d(l - big_m);
            rep.check_poly("eq-1.14", &[("L", l), ("M", big_m)], &lhs, &rhs);
        }
    }
    rep.finish()
}

fn check_splitting(rep: &mut ReportBuilder, l: i64, m: i64, x: i64, s: i64, b: i64) -> Result<()> {
    if !(0 <= m && m <= l && m + x >= 0 && l - m - x >= 0) {
        return precondition(format!(
            "splitting needs 0 <= M <= L, M + x >= 0, L - M - x >= 0 (L={l} M={m} x={x})"
        ));
    }
    let lhs = f_shifted(s, b, l, m)?;
    let mut direct = LaurentPoly::zero();
    let mut reflected = LaurentPoly::zero();
    for sp in 0..=1 {
        let right = f_shifted(sp, b, l - m - x, -x)?;
        direct += (&f_shifted(s, sp, m + x, m)? * &right).shift(sp * x);
        reflected += (&f_shifted(sp, s, m + x, x)?.invert_variable() * &right).shift(sp * x);
    }
    let params = [("L", l), ("M", m), ("x", x), ("s", s), ("b", b)];
    let label = if x == 0 { "eq-2.11" } else { "eq-2.16" };
    rep.check_poly(label, &params, &lhs, &direct);
    rep.check_poly(&format!("{label}/reflected"), &params, &lhs, &reflected);
    Ok(())
}

/// Both splittings of `f_{s,b}(L, M)` at the point `x`; `x = 0` is the
/// unshifted decomposition.
pub fn verify_splitting(l: i64, m: i64, x: i64, s: i64, b: i64) -> Result<VerificationReport> {
    let mut rep = ReportBuilder::new("eq-2.16")
        .grid("L", l)
        .grid("M", m)
        .grid("x", x)
        .grid("s", s)
        .grid("b", b);
    check_splitting(&mut rep, l, m, x, s, b)?;
    Ok(rep.finish())
}

/// Every admissible splitting point for `0 <= M <= L <= l_max`, all `s, b`.
pub fn verify_splitting_grid(l_max: i64) -> VerificationReport {
    let mut rep = ReportBuilder::new("eq-2.11/2.16")
        .grid("L", format!("0..={l_max}"))
        .grid("M", "0..=L")
        .grid("x", "-M..=L-M");
    for l in 0..=l_max {
        for m in 0..=l {
            for x in -m..=l - m {
                for s in 0..=1 {
                    for b in 0..=1 {
                        check_splitting(&mut rep, l, m, x, s, b)
                            .expect("grid respects preconditions");
                    }
                }
            }
        }
    }
    rep.finish()
}

/// `Fi(L) = d_L(1)` for `-l_max <= L <= l_max + 1`.
pub fn fibonacci_table(l_max: i64) -> BTreeMap<i64, BigInt> {
    (-l_max..=l_max + 1)
        .map(|l| (l, rr_fermionic(RrKind::D, l).eval_at_one()))
        .collect()
}

/// Fibonacci specialisations: the additive split, the sign rule for negative
/// indices, and the Euler-Cassini form.
pub fn fibonacci_checks(l_max: i64) -> Result<VerificationReport> {
    if l_max < 1 {
        return precondition(format!("fibonacci checks need L_max >= 1, got {l_max}"));
    }
    let fi = fibonacci_table(l_max);
    let mut rep = ReportBuilder::new("eq-2.13/2.14/2.15").grid("L", format!("1..={l_max}"));
    let check =
        |rep: &mut ReportBuilder, label: &str, params: &[(&str, i64)], lhs: BigInt, rhs: BigInt| {
            rep.record(label, params, lhs == rhs, || {
                (
                    RenderedValue::poly(&LaurentPoly::monomial(0, lhs.clone())),
                    RenderedValue::poly(&LaurentPoly::monomial(0, rhs.clone())),
                )
            });
        };
    check(&mut rep, "Fi(1)", &[], fi[&1].clone(), BigInt::from(1));
    check(&mut rep, "Fi(2)", &[], fi[&2].clone(), BigInt::from(1));
    for l in 3..=l_max + 1 {
        check(
            &mut rep,
            "fibonacci",
            &[("L", l)],
            fi[&l].clone(),
            &fi[&(l - 1)] + &fi[&(l - 2)],
        );
    }
    for l in 1..=l_max {
        for m in 1..=l {
            let rhs = &fi[&m] * &fi[&(l - m + 1)] + &fi[&(m - 1)] * &fi[&(l - m)];
            check(
                &mut rep,
                "eq-2.13",
                &[("L", l), ("M", m)],
                fi[&l].clone(),
                rhs,
            );
        }
    }
    for m in 1..=l_max {
        check(
            &mut rep,
            "eq-2.14",
            &[("M", m)],
            fi[&-m].clone(),
            &fi[&m] * sign(m + 1),
        );
    }
    let half = l_max / 2;
    for m in 0..=half {
        for l in 0..=half {
            let lhs = &fi[&l] * sign(m);
            let rhs = &fi[&(m + 1)] * &fi[&(l + m)] - &fi[&m] * &fi[&(l + m + 1)];
            check(&mut rep, "eq-2.15", &[("L", l), ("M", m)], lhs, rhs);
        }
    }
    Ok(rep.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn initial_values() {
        assert_eq!(rr_fermionic(RrKind::E, 0), LaurentPoly::one());
        assert_eq!(rr_fermionic(RrKind::E, 1), LaurentPoly::one());
        assert!(rr_fermionic(RrKind::D, 0).is_zero());
        assert_eq!(rr_fermionic(RrKind::D, 1), LaurentPoly::one());
    }

    #[test]
    fn small_values_from_the_recurrence() {
        // e_2 = 1 + q, e_3 = 1 + q + q^2, e_4 = e_3 + q^3 e_2
        assert_eq!(rr_fermionic(RrKind::E, 4), p("1 + q + q^2 + q^3 + q^4"));
        assert_eq!(rr_fermionic(RrKind::D, 3), p("1 + q^2"));
        assert_eq!(rr_by_recurrence(RrKind::E, 4), p("1 + q + q^2 + q^3 + q^4"));
    }

    #[test]
    fn negative_index_values() {
        assert!(rr_fermionic(RrKind::E, -1).is_zero());
        assert_eq!(rr_fermionic(RrKind::D, -1), LaurentPoly::one());
        for l in -8..0 {
            for kind in [RrKind::E, RrKind::D] {
                assert_eq!(
                    rr_fermionic(kind, l),
                    rr_by_recurrence(kind, l),
                    "{kind:?} {l}"
                );
            }
        }
    }

    #[test]
    fn bosonic_examples() {
        assert_eq!(rr_bosonic(RrKind::E, 0).unwrap(), LaurentPoly::one());
        assert_eq!(
            rr_bosonic(RrKind::E, 4).unwrap(),
            rr_fermionic(RrKind::E, 4)
        );
        assert_eq!(rr_bosonic(RrKind::D, 3).unwrap(), p("1 + q^2"));
        assert!(rr_bosonic(RrKind::D, -1).is_err());
    }

    #[test]
    fn eval_at_one_is_fibonacci() {
        assert_eq!(rr_fermionic(RrKind::E, 4).eval_at_one(), BigInt::from(5));
        let fib = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89];
        for l in 0..10 {
            assert_eq!(
                rr_fermionic(RrKind::D, l).eval_at_one(),
                BigInt::from(fib[l as usize])
            );
            assert_eq!(
                rr_fermionic(RrKind::E, l).eval_at_one(),
                BigInt::from(fib[l as usize + 1])
            );
        }
    }

    #[test]
    fn f_shifted_specialisations() {
        assert_eq!(f_shifted(0, 0, 4, 0).unwrap(), rr_fermionic(RrKind::E, 4));
        assert_eq!(f_shifted(1, 0, 3, 0).unwrap(), p("1 + q^2"));
        // sum_t q^(t^2-2t)[4-t choose t] = 1 + q^-1(1+q+q^2) + 1
        let v = f_shifted(0, 0, 4, 2).unwrap();
        assert_eq!(v, p("q^-1 + 3 + q"));
        let rhs = p("1 + q^-1") * p("1 + q") + LaurentPoly::one();
        assert_eq!(v, rhs);
        assert_eq!(f_shifted(1, 1, 0, 3).unwrap(), LaurentPoly::q_pow(3));
        assert!(f_shifted(2, 0, 1, 0).is_err());
        assert!(f_shifted(0, 0, -1, 0).is_err());
    }

    #[test]
    fn f_shifted_min_exponent_bound() {
        for l in 0..=12 {
            for m in 0..=l {
                for s in 0..=1 {
                    for b in 0..=1 {
                        let v = f_shifted(s, b, l, m).unwrap();
                        if let Some(lo) = v.min_exponent() {
                            assert!(lo >= -(m * m) / 4 - m, "L={l} M={m}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn gis_boundary_cases() {
        assert!(verify_gis_finite(0, 0).passed());
        assert!(verify_gis_finite(12, 6).passed());
    }

    #[test]
    fn splitting_examples() {
        assert!(verify_splitting(7, 3, 0, 0, 0).unwrap().passed());
        assert!(verify_splitting(7, 3, 2, 1, 0).unwrap().passed());
        assert!(verify_splitting(5, 5, 0, 1, 1).unwrap().passed());
        assert!(verify_splitting(5, 6, 0, 0, 0).is_err());
        assert!(verify_splitting(5, 2, -3, 0, 0).is_err());
    }

    #[test]
    fn fibonacci_examples() {
        let fi = fibonacci_table(6);
        assert_eq!(fi[&5], BigInt::from(5));
        assert_eq!(fi[&5], &fi[&2] * &fi[&4] + &fi[&1] * &fi[&3]);
        assert_eq!(fi[&-3], fi[&3]);
        assert!(fibonacci_checks(10).unwrap().passed());
        assert!(fibonacci_checks(0).is_err());
    }

    #[test]
    fn family_reports_pass_on_small_grids() {
        assert!(verify_representations(14).passed());
        assert!(verify_rr_recurrence(-8, 14).passed());
        let grid = verify_splitting_grid(7);
        assert!(grid.passed(), "{grid}");
        assert!(grid.checks > 100);
    }
}
