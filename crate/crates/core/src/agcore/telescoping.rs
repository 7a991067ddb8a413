use super::{admissible_vectors, big_f, AgIndexVector, AgParams, ShiftVectors};
use crate::error::{precondition, Error, Result};
use crate::qalgebra::{q_binomial, BinomialCache, LaurentPoly};
use crate::report::{run_grid, ReportBuilder, VerificationReport};

/// `[n+m; n] = [n+m-1; n] + q^m [n-1+m; n-1]` for `0 <= n <= n_max`,
/// `0 <= m <= m_max`.
pub fn verify_q_pascal(n_max: i64, m_max: i64) -> Result<VerificationReport> {
    let mut rep = ReportBuilder::new("eq-A.5")
        .grid("n", format!("0..={n_max}"))
        .grid("m", format!("0..={m_max}"));
    for n in 0..=n_max {
        for m in 0..=m_max {
            let rhs = q_binomial(n, m - 1)? + q_binomial(n - 1, m)?.shift(m);
            rep.check_poly("eq-A.5", &[("n", n), ("m", m)], &q_binomial(n, m)?, &rhs);
        }
    }
    Ok(rep.finish())
}

/// `Π_k [tops_k; bottoms_k]`, written as `q_binomial(bottom, top - bottom)`.
/// A negative span makes the factor vanish before the lower index is looked
/// at; a lower index below `-1` with a nonnegative span is an inconsistency.
fn binomial_product(
    cache: &mut BinomialCache,
    bottoms: &[i64],
    tops: &[i64],
) -> Result<LaurentPoly> {
    let mut acc = LaurentPoly::one();
    for (&bot, &top) in bottoms.iter().zip(tops) {
        if top - bot < 0 {
            return Ok(LaurentPoly::zero());
        }
        let factor = cache
            .get(bot, top - bot)
            .map_err(|e| Error::Consistency(format!("shifted binomial out of range: {e}")))?;
        if factor.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        acc = &acc * factor;
    }
    Ok(acc)
}

struct Telescope {
    p: AgParams,
    sv: ShiftVectors,
    cache: BinomialCache,
}

impl Telescope {
    fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    /// Summand of the first expansion at `(n, i)`:
    /// `q^(Φ + m_i) [n + m - E_{1,i}; n - e_i]`.
    fn first_form(&mut self, v: &AgIndexVector, i: i64) -> Result<LaurentPoly> {
        let m = v.m_vector(self.p.s, self.p.b, self.p.l);
        let (e_i, block) = (self.sv.e(i), self.sv.block(1, i));
        let bottoms = self.sv.combine(&[(1, v.n()), (-1, &e_i)]);
        let tops = self.sv.combine(&[(1, v.n()), (1, &m), (-1, &block)]);
        let prod = binomial_product(&mut self.cache, &bottoms, &tops)?;
        Ok(prod.shift(v.phi(self.p.s, self.p.m) + m[(i - 1) as usize]))
    }

    /// Summand after the change of variables, at `(n, i)` with `i < b`:
    /// `q^(Φ + m_i + m_b - m_{b-1}) [n + m - E_{1,b-1} + e_{b-1} - e_b - E_{i,b-1}; n + e_{b-1} - e_b - e_i]`.
    fn second_form(&mut self, v: &AgIndexVector, i: i64) -> Result<LaurentPoly> {
        let b = self.p.b;
        let m = v.m_vector(self.p.s, b, self.p.l);
        let (e_prev, e_b, e_i) = (self.sv.e(b - 1), self.sv.e(b), self.sv.e(i));
        let (head, tail) = (self.sv.block(1, b - 1), self.sv.block(i, b - 1));
        let bottoms = self
            .sv
            .combine(&[(1, v.n()), (1, &e_prev), (-1, &e_b), (-1, &e_i)]);
        let tops = self.sv.combine(&[
            (1, v.n()),
            (1, &m),
            (-1, &head),
            (1, &e_prev),
            (-1, &e_b),
            (-1, &tail),
        ]);
        let prod = binomial_product(&mut self.cache, &bottoms, &tops)?;
        let idx = |k: i64| m[(k - 1) as usize];
        Ok(prod.shift(v.phi(self.p.s, self.p.m) + idx(i) + idx(b) - idx(b - 1)))
    }
}

fn audit_into(rep: &mut ReportBuilder, p: AgParams) -> Result<()> {
    let AgParams { nu, s, b, l, m } = p;
    let f = |bb: i64, ll: i64| big_f(nu, s, bb, ll, m);
    let params = [("nu", nu), ("s", s), ("b", b), ("L", l), ("M", m)];
    let up = b + 1 - (b == nu) as i64;
    let lhs = f(b, l)? - f(up, l - 1)? - f(b, l - 2)?.shift(l - m - 1);
    let mut t = Telescope {
        p,
        sv: ShiftVectors { nu },
        cache: BinomialCache::new(),
    };
    let domain = admissible_vectors(&p);
    let mut rhs = LaurentPoly::zero();
    for i in 2..=b {
        for v in &domain {
            let term = t.first_form(v, i)?;
            // change of variables n -> n - e_i + e_{i-1} + e_b - e_{b-1}
            let delta = t.sv.combine(&[
                (-1, &t.sv.e(i)),
                (1, &t.sv.e(i - 1)),
                (1, &t.sv.e(b)),
                (-1, &t.sv.e(b - 1)),
            ]);
            let image = t.second_form(&v.shifted(&delta), i - 1)?;
            let mut tp = params.to_vec();
            tp.push(("i", i));
            rep.check_poly("eq-A.10", &tp, &term, &image);
            rhs += term;
        }
    }
    rep.check_poly("eq-A.6", &params, &lhs, &rhs);
    if b == 1 {
        rep.check_poly("eq-A.7", &params, &lhs, &LaurentPoly::zero());
        return Ok(());
    }
    let lhs14 = f(b - 1, l - 1)? - f(b, l - 2)?;
    let source = AgParams::new(nu, s, b - 1, l - 1, m)?;
    let lift = t.sv.combine(&[(-1, &t.sv.e(b - 1)), (1, &t.sv.e(b))]);
    let mut rhs14 = LaurentPoly::zero();
    for v in admissible_vectors(&source) {
        let v = AgIndexVector::new(Telescope::add(v.n(), &lift));
        for i in 1..b {
            rhs14 += t.second_form(&v, i)?;
        }
    }
    rep.check_poly("eq-A.14", &params, &lhs14, &rhs14);
    Ok(())
}

/// Both sides of the telescoped expansion of the `L`-recurrence for
/// `F_{s,b}(L, M)`, the term-by-term change of variables between its two
/// forms, and the companion expansion of `F_{s,b-1}(L-1, M) - F_{s,b}(L-2, M)`.
pub fn telescoping_audit(nu: i64, s: i64, b: i64, l: i64, m: i64) -> Result<VerificationReport> {
    let p = AgParams::new(nu, s, b, l, m)?;
    if b < 1 || l < 2 {
        return precondition(format!(
            "telescoping needs b >= 1 and L >= 2, got b={b} L={l}"
        ));
    }
    let mut rep = ReportBuilder::new("eq-A.6/A.7/A.14")
        .grid("nu", nu)
        .grid("s", s)
        .grid("b", b)
        .grid("L", l)
        .grid("M", m);
    audit_into(&mut rep, p)?;
    Ok(rep.finish())
}

/// [`telescoping_audit`] over every `nu` in `nus`, `2 <= L <= l_max`, `M` in
/// `m_values`, `0 <= s <= nu`, `1 <= b <= nu`.
pub fn telescoping_grid(nus: &[i64], l_max: i64, m_values: &[i64]) -> Result<VerificationReport> {
    let mut points = Vec::new();
    for &nu in nus {
        for l in 2..=l_max {
            for &m in m_values {
                for s in 0..=nu {
                    for b in 1..=nu {
                        points.push(AgParams::new(nu, s, b, l, m)?);
                    }
                }
            }
        }
    }
    let nu_list: Vec<String> = nus.iter().map(i64::to_string).collect();
    let m_list: Vec<String> = m_values.iter().map(i64::to_string).collect();
    let grid = [
        ("nu", nu_list.join(",")),
        ("L", format!("2..={l_max}")),
        ("M", m_list.join(",")),
    ];
    let errors = std::sync::Mutex::new(Vec::new());
    let report = run_grid("eq-A.6/A.7/A.14", &grid, points, |p, rep| {
        if let Err(e) = audit_into(rep, p) {
            errors.lock().unwrap().push(e);
        }
    });
    match errors.into_inner().unwrap().into_iter().next() {
        Some(e) => Err(e),
        None => Ok(report),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_pascal_small() {
        assert!(verify_q_pascal(12, 12).unwrap().passed());
    }

    #[test]
    fn b_equal_one_gives_empty_sum() {
        let r = telescoping_audit(2, 0, 1, 6, 0).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.checks, 2);
    }

    #[test]
    fn spec_cases_pass() {
        let r = telescoping_audit(2, 1, 2, 8, 2).unwrap();
        assert!(r.passed(), "{r:?}");
        let r = telescoping_audit(3, 2, 3, 8, 0).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn preconditions() {
        assert!(telescoping_audit(2, 0, 0, 6, 0).is_err());
        assert!(telescoping_audit(2, 0, 1, 1, 0).is_err());
        assert!(telescoping_audit(2, 3, 1, 4, 0).is_err());
    }

    #[test]
    fn small_grid() {
        let r = telescoping_grid(&[2], 6, &[0, 2]).unwrap();
        assert!(r.passed(), "{r}");
    }
}
