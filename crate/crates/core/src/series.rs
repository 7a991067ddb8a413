//! The `L -> ∞` statements, checked as truncated q-series: the
//! Rogers-Ramanujan and Andrews-Gordon product identities, their shifted
//! variants with Laurent-polynomial coefficients, and the stabilization of
//! `F̃_{s-1,b}(L)` towards the product side.
//!
//! A Laurent prefactor with lowest exponent `-d` moves the comparison window
//! to `[-d, cutoff - d)`, so every window keeps `cutoff` coefficients.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::agcore::{b_bosonic, f_tilde};
use crate::error::{domain, precondition, Result};
use crate::qalgebra::{
    series_inverse_euler, series_inverse_product, LaurentPoly, TruncatedLaurentSeries,
};
use crate::report::{run_grid, ReportBuilder, VerificationReport};
use crate::rrpoly::{rr_fermionic, RrKind};

/// Largest `L` whose stabilization is measured.
pub const STABILIZATION_L_MAX: i64 = 20;

fn check_cutoff(cutoff: i64) -> Result<()> {
    if cutoff < 1 {
        return precondition(format!("cutoff must be >= 1, got {cutoff}"));
    }
    Ok(())
}

fn check_nu(nu: i64) -> Result<()> {
    if nu < 1 {
        return domain(format!("nu must be positive, got {nu}"));
    }
    Ok(())
}

/// `1 / Π_{n ≢ 0, ±s (mod k)} (1 - q^n)` below `cutoff`.
pub fn product_side(k: i64, s: i64, cutoff: i64) -> Result<TruncatedLaurentSeries> {
    let residues: BTreeSet<i64> = (1..k).filter(|&r| r != s && r != k - s).collect();
    series_inverse_product(k, &residues, cutoff)
}

/// `Σ_j q^(2kj² + j(k-2s)) - q^((2j+1)(kj+s))`, exponents below `cutoff`.
fn theta_sum(k: i64, s: i64, cutoff: i64) -> LaurentPoly {
    let reach = (cutoff.max(0) as f64).sqrt() as i64 + 2;
    let mut acc = LaurentPoly::zero();
    for j in -reach..=reach {
        let e1 = 2 * k * j * j + j * (k - 2 * s);
        let e2 = (2 * j + 1) * (k * j + s);
        if e1 < cutoff {
            acc += LaurentPoly::q_pow(e1);
        }
        if e2 < cutoff {
            acc -= &LaurentPoly::q_pow(e2);
        }
    }
    acc
}

/// `(1/(q)_∞) × theta_sum`.
fn theta_side(k: i64, s: i64, cutoff: i64) -> TruncatedLaurentSeries {
    series_inverse_euler(cutoff).mul_poly(&theta_sum(k, s, cutoff))
}

/// `Π_i 1/(q)_{n_i}` below `cutoff`, one geometric factor at a time.
fn inverse_pochhammer_product(ns: &[i64], cutoff: i64) -> TruncatedLaurentSeries {
    let len = cutoff.max(0) as usize;
    let mut c = vec![BigInt::zero(); len];
    if len > 0 {
        c[0] = BigInt::from(1);
    }
    for &n in ns {
        for k in 1..=n.min(cutoff - 1).max(0) as usize {
            for i in k..len {
                let v = c[i - k].clone();
                c[i] += v;
            }
        }
    }
    TruncatedLaurentSeries::from_poly(&LaurentPoly::from_dense(0, c), cutoff)
}

/// Adds `q^e × series` to `acc` so that the sum stays known below `cutoff`.
fn add_shifted(acc: &mut TruncatedLaurentSeries, e: i64, cutoff: i64, ns: &[i64]) {
    if e < cutoff {
        let term = inverse_pochhammer_product(ns, cutoff - e).shift(e);
        *acc = acc.add(&term);
    }
}

/// `Σ_t q^(t² + c t) / (q)_t` below `cutoff`.
fn single_sum(c: i64, cutoff: i64) -> TruncatedLaurentSeries {
    let mut acc = TruncatedLaurentSeries::zero(cutoff);
    let bound = (-c + ((c * c + 4 * cutoff.max(0)) as f64).sqrt() as i64) / 2 + 2;
    for t in 0..=bound.max(0) {
        add_shifted(&mut acc, t * t + c * t, cutoff, &[t]);
    }
    acc
}

/// `Σ_n q^(Σ N_i² + Σ_{i >= s} N_i - M N_1) / Π (q)_{n_i}` below `cutoff`, with
/// `s` 1-based. `slack` widens the `N_1` range beyond the exact bound; the
/// extra terms all lie at or above the cutoff.
pub fn multisum_series(nu: i64, s: i64, m: i64, cutoff: i64, slack: i64) -> TruncatedLaurentSeries {
    let mut acc = TruncatedLaurentSeries::zero(cutoff);
    let lin1 = (s <= 1) as i64;
    let disc = ((m - lin1) * (m - lin1) + 4 * cutoff.max(0)) as f64;
    let bound = ((m - lin1) as f64 + disc.sqrt()) as i64 / 2 + 1 + slack;
    let mut big_n = Vec::with_capacity(nu as usize);
    for n1 in 0..=bound.max(0) {
        let e = n1 * n1 - m * n1 + lin1 * n1;
        if e >= cutoff {
            continue;
        }
        big_n.push(n1);
        nested(nu, s, e, cutoff, &mut big_n, &mut acc);
        big_n.pop();
    }
    acc
}

fn nested(
    nu: i64,
    s: i64,
    e: i64,
    cutoff: i64,
    big_n: &mut Vec<i64>,
    acc: &mut TruncatedLaurentSeries,
) {
    let i = big_n.len() as i64 + 1;
    if i > nu {
        let ns: Vec<i64> = (0..big_n.len())
            .map(|k| big_n[k] - big_n.get(k + 1).copied().unwrap_or(0))
            .collect();
        add_shifted(acc, e, cutoff, &ns);
        return;
    }
    let cap = *big_n.last().expect("N_1 is set");
    for x in 0..=cap {
        let next = e + x * x + (i >= s) as i64 * x;
        if next >= cutoff {
            break;
        }
        big_n.push(x);
        nested(nu, s, next, cutoff, big_n, acc);
        big_n.pop();
    }
}

/// The two Rogers-Ramanujan identities: sum side, theta side, product side.
pub fn rr_series_check(a: i64, cutoff: i64) -> Result<VerificationReport> {
    if !matches!(a, 0 | 1) {
        return domain(format!("a must be 0 or 1, got {a}"));
    }
    check_cutoff(cutoff)?;
    let mut rep = ReportBuilder::new("eq-1.1")
        .grid("a", a)
        .grid("cutoff", cutoff);
    triangle(
        &mut rep,
        &[("a", a)],
        &single_sum(a, cutoff),
        5,
        2 - a,
        cutoff,
    )?;
    Ok(rep.finish())
}

fn triangle(
    rep: &mut ReportBuilder,
    params: &[(&str, i64)],
    sum: &TruncatedLaurentSeries,
    k: i64,
    s: i64,
    cutoff: i64,
) -> Result<()> {
    let theta = theta_side(k, s, cutoff);
    let product = product_side(k, s, cutoff)?;
    rep.check_series("sum=theta", params, sum, &theta);
    rep.check_series("theta=product", params, &theta, &product);
    rep.check_series("sum=product", params, sum, &product);
    Ok(())
}

/// `Σ_i poly_i / Π_{n ≢ 0, ±r_i (mod k)} (1 - q^n)` for `(poly_i, r_i)` in
/// `parts`. With `-d` the lowest prefactor exponent, the result is known on
/// `[-d, cutoff - d)`.
fn laurent_combination(
    parts: &[(LaurentPoly, i64)],
    k: i64,
    cutoff: i64,
) -> Result<TruncatedLaurentSeries> {
    let depth = parts
        .iter()
        .filter_map(|(p, _)| p.min_exponent())
        .min()
        .unwrap_or(0)
        .min(0);
    let mut acc = TruncatedLaurentSeries::zero(cutoff + depth);
    for (poly, residue) in parts {
        acc = acc.add(&product_side(k, *residue, cutoff)?.mul_poly(poly));
    }
    Ok(acc)
}

/// The shifted Rogers-Ramanujan series: `q^(t² + mt)` for `0 <= m <= m_max`
/// and `q^(t² - Mt)` for `0 <= M <= big_m_max`.
pub fn gis_series_check(m_max: i64, big_m_max: i64, cutoff: i64) -> Result<VerificationReport> {
    check_cutoff(cutoff)?;
    let mut rep = ReportBuilder::new("eq-1.11/1.12")
        .grid("m", format!("0..={m_max}"))
        .grid("M", format!("0..={big_m_max}"))
        .grid("cutoff", cutoff);
    let e = |l| rr_fermionic(RrKind::E, l);
    let d = |l| rr_fermionic(RrKind::D, l);
    for m in 0..=m_max {
        let pre = -(m * (m - 1) / 2);
        let sign = BigInt::from(if m % 2 == 0 { 1 } else { -1 });
        let first = d(m - 1).shift(pre).scale(&sign);
        let second = e(m - 1).shift(pre).scale(&-sign);
        let rhs = laurent_combination(&[(first, 2), (second, 1)], 5, cutoff)?;
        let lhs = single_sum(m, rhs.cutoff());
        rep.check_series("eq-1.11", &[("m", m)], &lhs, &rhs);
    }
    for big_m in 0..=big_m_max {
        let first = e(big_m).invert_variable();
        let second = d(big_m).invert_variable();
        let rhs = laurent_combination(&[(first, 2), (second, 1)], 5, cutoff)?;
        let lhs = single_sum(-big_m, rhs.cutoff());
        rep.check_series("eq-1.12", &[("M", big_m)], &lhs, &rhs);
    }
    Ok(rep.finish())
}

/// The Andrews-Gordon identities for modulus `2nu + 3`, every `1 <= s <= nu + 1`.
pub fn ag_series_check(nu: i64, cutoff: i64) -> Result<VerificationReport> {
    check_nu(nu)?;
    check_cutoff(cutoff)?;
    let k = 2 * nu + 3;
    let grid = [
        ("nu", nu.to_string()),
        ("s", format!("1..={}", nu + 1)),
        ("cutoff", cutoff.to_string()),
    ];
    let errors = std::sync::Mutex::new(None);
    let rep = run_grid("eq-3.1", &grid, (1..=nu + 1).collect(), |s, rep| {
        let sum = multisum_series(nu, s, 0, cutoff, 0);
        if let Err(e) = triangle(rep, &[("nu", nu), ("s", s)], &sum, k, s, cutoff) {
            *errors.lock().unwrap() = Some(e);
        }
    });
    match errors.into_inner().unwrap() {
        Some(e) => Err(e),
        None => Ok(rep),
    }
}

/// First exponent below `cutoff` where `F̃_{s-1,b}(L)` differs from the
/// product over `n ≢ 0, ±s (mod 2nu+3)`, for `0 <= L <= l_max`; `None`
/// when they agree on the whole window.
pub fn stabilization_profile(
    nu: i64,
    s: i64,
    b: i64,
    l_max: i64,
    cutoff: i64,
) -> Result<Vec<Option<i64>>> {
    check_nu(nu)?;
    check_cutoff(cutoff)?;
    let product = product_side(2 * nu + 3, s, cutoff)?;
    (0..=l_max)
        .map(|l| Ok(product.first_disagreement_with_poly(&f_tilde(nu, s - 1, b, l)?)))
        .collect()
}

fn render_profile(profile: &[Option<i64>]) -> String {
    let items: Vec<String> = profile
        .iter()
        .map(|p| p.map_or_else(|| "-".to_string(), |e| e.to_string()))
        .collect();
    format!("[{}]", items.join(","))
}

/// Shifted Andrews-Gordon series for `0 <= M <= big_m_max` (with `s`
/// 1-based), plus stabilization measurements of `F̃_{s-1,b}(L)` for
/// `L <= STABILIZATION_L_MAX`, recorded as notes.
pub fn ag_variant_series_check(
    nu: i64,
    s: i64,
    big_m_max: i64,
    cutoff: i64,
) -> Result<VerificationReport> {
    check_nu(nu)?;
    check_cutoff(cutoff)?;
    if !(1..=nu + 1).contains(&s) {
        return domain(format!("s must lie in 1..={}, got {s}", nu + 1));
    }
    let k = 2 * nu + 3;
    let mut rep = ReportBuilder::new("eq-3.21/3.22")
        .grid("nu", nu)
        .grid("s", s)
        .grid("M", format!("0..={big_m_max}"))
        .grid("cutoff", cutoff);
    for m in 0..=big_m_max {
        let mut parts = Vec::new();
        for sp in 1..=nu + 1 {
            let big_s = if (s + sp - m).rem_euclid(2) == 0 {
                sp
            } else {
                k - sp
            };
            parts.push((b_bosonic(nu, big_s, s, m)?.invert_variable(), sp));
        }
        let rhs = laurent_combination(&parts, k, cutoff)?;
        let lhs = multisum_series(nu, s, m, rhs.cutoff(), 0);
        rep.check_series("eq-3.21", &[("nu", nu), ("s", s), ("M", m)], &lhs, &rhs);
    }
    for b in 0..=nu {
        let profile = stabilization_profile(nu, s, b, STABILIZATION_L_MAX, cutoff)?;
        let short: Vec<i64> = profile
            .iter()
            .enumerate()
            .filter(|(l, p)| p.is_some_and(|e| 2 * e <= *l as i64))
            .map(|(l, _)| l as i64)
            .collect();
        rep.note(format!(
            "stabilization nu={nu} s={s} b={b}: first disagreement by L=0..={STABILIZATION_L_MAX} {}; at or below L/2 for L in {short:?}",
            render_profile(&profile)
        ));
    }
    Ok(rep.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebra::series_inverse_pochhammer;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn rr_examples() {
        assert_eq!(
            single_sum(0, 6).to_poly(),
            p("1 + q + q^2 + q^3 + 2*q^4 + 2*q^5")
        );
        assert_eq!(single_sum(1, 5).to_poly(), p("1 + q^2 + q^3 + q^4"));
        assert_eq!(
            theta_side(5, 2, 6).to_poly(),
            p("1 + q + q^2 + q^3 + 2*q^4 + 2*q^5")
        );
        for a in 0..=1 {
            assert!(rr_series_check(a, 1).unwrap().passed());
            let r = rr_series_check(a, 50).unwrap();
            assert!(r.passed(), "{r:?}");
            assert!(!r.weak_window);
        }
        assert!(rr_series_check(2, 10).is_err());
        assert!(rr_series_check(0, 0).is_err());
    }

    #[test]
    fn inverse_pochhammer_product_matches_products() {
        let direct = series_inverse_pochhammer(3, 15).mul(&series_inverse_pochhammer(1, 15));
        assert_eq!(inverse_pochhammer_product(&[3, 1], 15), direct);
        assert_eq!(
            inverse_pochhammer_product(&[0], 4).to_poly(),
            LaurentPoly::one()
        );
    }

    #[test]
    fn gis_series() {
        let r = gis_series_check(6, 6, 50).unwrap();
        assert!(r.passed(), "{r:?}");
        let w = r.window.unwrap();
        assert!(w.len() >= 20);
    }

    #[test]
    fn ag_series_examples() {
        let seven = product_side(7, 3, 20).unwrap();
        assert_eq!(multisum_series(2, 3, 0, 20, 0), seven);
        assert!(ag_series_check(1, 40).unwrap().passed());
        assert!(ag_series_check(2, 30).unwrap().passed());
    }

    #[test]
    fn enumeration_bound_is_sound() {
        for m in 0..=4 {
            let a = multisum_series(2, 2, m, 30, 0);
            let b = multisum_series(2, 2, m, 30, 2);
            assert_eq!(a, b);
        }
    }

    #[test]
    fn variant_series() {
        let r = ag_variant_series_check(1, 2, 4, 30).unwrap();
        assert!(r.passed(), "{r:?}");
        let r = ag_variant_series_check(2, 2, 4, 25).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.notes.len(), 3);
        assert!(ag_variant_series_check(2, 0, 4, 25).is_err());
    }

    #[test]
    fn stabilization_reaches_the_product() {
        let profile = stabilization_profile(1, 1, 1, 20, 40).unwrap();
        assert!(profile[20].unwrap() >= 15);
        let profile = stabilization_profile(2, 3, 2, 20, 40).unwrap();
        assert!(profile[20].unwrap() >= 15);
    }
}
