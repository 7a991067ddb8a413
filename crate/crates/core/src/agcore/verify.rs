use super::{b_bosonic, big_f, f_tilde};
use crate::error::{domain, Error, Result};
use crate::qalgebra::{q_binomial, LaurentPoly};
use crate::report::{run_grid, ReportBuilder, VerificationReport};
use crate::rrpoly::f_shifted;

fn check_nu(nu: i64) -> Result<()> {
    if nu < 1 {
        return domain(format!("nu must be positive, got {nu}"));
    }
    Ok(())
}

fn ft(nu: i64, s: i64, b: i64, l: i64) -> LaurentPoly {
    f_tilde(nu, s, b, l).expect("parameters in range")
}

fn bf(nu: i64, s: i64, b: i64, l: i64, m: i64) -> LaurentPoly {
    big_f(nu, s, b, l, m).expect("parameters in range")
}

/// The alternating-sum side of the polynomial identity for `F̃_{s,b}(L)`,
/// with the branch chosen by the parity of `L - s - b`.
fn bosonic_side(nu: i64, s: i64, b: i64, l: i64) -> LaurentPoly {
    let big_s = if (l - s - b).rem_euclid(2) == 0 {
        s + 1
    } else {
        2 * nu + 3 - (s + 1)
    };
    b_bosonic(nu, big_s, b + 1, l).expect("branch keeps parity")
}

/// `F̃_{s,b}(L) = B_{s+1,b+1}(L)` or `B_{2nu+2-s,b+1}(L)` by parity, plus
/// the initial condition `F̃_{s,b}(0) = δ_{s,b}`.
pub fn verify_ag_polynomial(nu: i64, l_max: i64) -> Result<VerificationReport> {
    check_nu(nu)?;
    let grid = [
        ("nu", nu.to_string()),
        ("L", format!("0..={l_max}")),
        ("s,b", format!("0..={nu}")),
    ];
    Ok(run_grid(
        "eq-3.9",
        &grid,
        (0..=l_max).collect(),
        |l, rep| {
            for s in 0..=nu {
                for b in 0..=nu {
                    let params = [("nu", nu), ("s", s), ("b", b), ("L", l)];
                    let lhs = ft(nu, s, b, l);
                    rep.check_poly("eq-3.9", &params, &lhs, &bosonic_side(nu, s, b, l));
                    if l == 0 {
                        let delta = LaurentPoly::from((s == b) as i64);
                        rep.check_poly("eq-3.11", &params, &lhs, &delta);
                    }
                }
            }
        },
    ))
}

/// The recurrences in `L` for `F_{s,b}(L, M)`; `M = 0` is the unshifted case.
pub fn verify_recurrences(nu: i64, l_max: i64, m_values: &[i64]) -> Result<VerificationReport> {
    check_nu(nu)?;
    let list: Vec<String> = m_values.iter().map(i64::to_string).collect();
    let grid = [
        ("nu", nu.to_string()),
        ("L", format!("2..={l_max}")),
        ("M", list.join(",")),
    ];
    let points: Vec<(i64, i64)> = m_values
        .iter()
        .flat_map(|&m| (2..=l_max).map(move |l| (m, l)))
        .collect();
    Ok(run_grid("eq-3.10/3.13", &grid, points, |(m, l), rep| {
        let label = if m == 0 { "eq-3.10" } else { "eq-3.13" };
        for s in 0..=nu {
            let params = [("nu", nu), ("s", s), ("b", 0), ("L", l), ("M", m)];
            rep.check_poly(label, &params, &bf(nu, s, 0, l, m), &bf(nu, s, 1, l - 1, m));
            for b in 1..=nu {
                let up = b + 1 - (b == nu) as i64;
                let rhs = bf(nu, s, b - 1, l - 1, m)
                    + bf(nu, s, up, l - 1, m)
                    + (LaurentPoly::q_pow(l - m - 1) - LaurentPoly::one()) * bf(nu, s, b, l - 2, m);
                let params = [("nu", nu), ("s", s), ("b", b), ("L", l), ("M", m)];
                rep.check_poly(label, &params, &bf(nu, s, b, l, m), &rhs);
            }
        }
    }))
}

/// `A_{s,s'}(M) = F_{s,s'}(M, M)`, cross-checked against `F̃_{s',s}(M, 1/q)`.
pub fn connection_coefficients(nu: i64, m: i64) -> Result<Vec<Vec<LaurentPoly>>> {
    check_nu(nu)?;
    if m < 0 {
        return domain(format!("M must be nonnegative, got {m}"));
    }
    let mut rows = Vec::with_capacity(nu as usize + 1);
    for s in 0..=nu {
        let mut row = Vec::with_capacity(nu as usize + 1);
        for sp in 0..=nu {
            let boundary = big_f(nu, s, sp, m, m)?;
            let reflected = f_tilde(nu, sp, s, m)?.invert_variable();
            if boundary != reflected {
                return Err(Error::Consistency(format!(
                    "A_{{{s},{sp}}}({m}) differs between routes: {boundary} vs {reflected}"
                )));
            }
            row.push(boundary);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// `A(0) = I`, agreement of the two routes to `A(M)`, and the inversion rule
/// `[n+m; n](1/q) = q^(-nm) [n+m; n](q)`.
pub fn verify_connection(nu_max: i64, m_max: i64) -> Result<VerificationReport> {
    check_nu(nu_max)?;
    let mut rep = ReportBuilder::new("eq-3.16/3.18")
        .grid("nu", format!("1..={nu_max}"))
        .grid("M", format!("0..={m_max}"));
    for nu in 1..=nu_max {
        for m in 0..=m_max {
            for s in 0..=nu {
                for sp in 0..=nu {
                    let params = [("nu", nu), ("s", s), ("s'", sp), ("M", m)];
                    let boundary = bf(nu, s, sp, m, m);
                    let reflected = ft(nu, sp, s, m).invert_variable();
                    rep.check_poly("eq-3.18", &params, &boundary, &reflected);
                    if m == 0 {
                        let delta = LaurentPoly::from((s == sp) as i64);
                        rep.check_poly("eq-3.16", &params, &boundary, &delta);
                    }
                }
            }
        }
    }
    for n in 0..=10 {
        for m in 0..=10 {
            let b = q_binomial(n, m)?;
            rep.check_poly(
                "eq-3.17",
                &[("n", n), ("m", m)],
                &b.invert_variable(),
                &b.shift(-n * m),
            );
        }
    }
    Ok(rep.finish())
}

/// `F_{s,b}(L, M) = Σ_{s'} F̃_{s',s}(M, 1/q) F̃_{s',b}(L-M)` and its
/// regrouped form with each `F̃_{s',s}(M, 1/q)` replaced by the matching
/// alternating sum. At `nu = 1` the values are also compared with the
/// shifted Rogers-Ramanujan polynomials.
pub fn verify_main_theorem(nu: i64, l_max: i64) -> Result<VerificationReport> {
    check_nu(nu)?;
    let grid = [
        ("nu", nu.to_string()),
        ("L", format!("0..={l_max}")),
        ("M", "0..=L".to_string()),
    ];
    let points: Vec<(i64, i64)> = (0..=l_max)
        .flat_map(|l| (0..=l).map(move |m| (l, m)))
        .collect();
    Ok(run_grid("eq-3.19/3.20", &grid, points, |(l, m), rep| {
        let left: Vec<Vec<LaurentPoly>> = (0..=nu)
            .map(|sp| {
                (0..=nu)
                    .map(|s| ft(nu, sp, s, m).invert_variable())
                    .collect()
            })
            .collect();
        let regrouped: Vec<Vec<LaurentPoly>> = (0..=nu)
            .map(|sp| {
                (0..=nu)
                    .map(|s| {
                        let big_s = if (s + sp - m).rem_euclid(2) == 0 {
                            sp + 1
                        } else {
                            2 * nu + 3 - (sp + 1)
                        };
                        b_bosonic(nu, big_s, s + 1, m)
                            .expect("branch keeps parity")
                            .invert_variable()
                    })
                    .collect()
            })
            .collect();
        let right: Vec<Vec<LaurentPoly>> = (0..=nu)
            .map(|sp| (0..=nu).map(|b| ft(nu, sp, b, l - m)).collect())
            .collect();
        for s in 0..=nu {
            for b in 0..=nu {
                let params = [("nu", nu), ("s", s), ("b", b), ("L", l), ("M", m)];
                let lhs = bf(nu, s, b, l, m);
                let via_tilde: LaurentPoly = (0..=nu as usize)
                    .map(|sp| &left[sp][s as usize] * &right[sp][b as usize])
                    .sum();
                let via_bosonic: LaurentPoly = (0..=nu as usize)
                    .map(|sp| &regrouped[sp][s as usize] * &right[sp][b as usize])
                    .sum();
                rep.check_poly("eq-3.19", &params, &lhs, &via_tilde);
                rep.check_poly("eq-3.20", &params, &lhs, &via_bosonic);
                if nu == 1 {
                    let shifted = f_shifted(1 - s, 1 - b, l, m).expect("L >= 0");
                    rep.check_poly("nu=1 shifted RR", &params, &lhs, &shifted);
                }
            }
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rrpoly::{rr_fermionic, RrKind};

    #[test]
    fn polynomial_identity_small() {
        assert!(verify_ag_polynomial(1, 12).unwrap().passed());
        assert!(verify_ag_polynomial(2, 8).unwrap().passed());
        assert!(verify_ag_polynomial(0, 8).is_err());
    }

    #[test]
    fn recurrences_small() {
        assert!(verify_recurrences(1, 12, &[0]).unwrap().passed());
        let r = verify_recurrences(2, 8, &[0, 1, 3]).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn connection_matrix_values() {
        let a0 = connection_coefficients(2, 0).unwrap();
        for (s, row) in a0.iter().enumerate() {
            for (sp, v) in row.iter().enumerate() {
                assert_eq!(v, &LaurentPoly::from((s == sp) as i64));
            }
        }
        let a2 = connection_coefficients(1, 2).unwrap();
        let e2 = rr_fermionic(RrKind::E, 2).invert_variable();
        assert_eq!(a2[1][1], e2);
        assert_eq!(a2[1][1], "q^-1 + 1".parse().unwrap());
        assert_eq!(a2[1][0], LaurentPoly::one());
        assert!(connection_coefficients(1, -1).is_err());
        assert!(verify_connection(2, 6).unwrap().passed());
    }

    #[test]
    fn main_theorem_small() {
        let r = verify_main_theorem(1, 8).unwrap();
        assert!(r.passed(), "{r}");
        let r = verify_main_theorem(2, 6).unwrap();
        assert!(r.passed(), "{r}");
    }
}
