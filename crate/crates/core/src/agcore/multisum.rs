use super::{chi, AgIndexVector, AgParams};
use crate::error::{Error, Result};
use crate::qalgebra::{BinomialCache, LaurentPoly};

/// Every vector `n` that can carry a nonzero summand for these parameters:
/// `n_i >= 0` for `i < nu`, `n_nu >= -1` when admitted (else `>= 0`), and
/// `m_i >= 0` for all `i`. Vectors are produced in lexicographic order of
/// `(N_1, ..., N_nu)`.
pub fn admissible_vectors(p: &AgParams) -> Vec<AgIndexVector> {
    let low = if p.allows_negative_last() { -1 } else { 0 };
    let mut out = Vec::new();
    let mut big_n = Vec::with_capacity(p.nu as usize);
    descend(p, low, 0, &mut big_n, &mut out);
    out
}

fn descend(p: &AgParams, low: i64, run: i64, big_n: &mut Vec<i64>, out: &mut Vec<AgIndexVector>) {
    let i = big_n.len() as i64 + 1;
    if i > p.nu {
        out.push(AgIndexVector::from_partial_sums(big_n));
        return;
    }
    let cap = big_n.last().copied().unwrap_or(i64::MAX);
    let offset = chi(i, p.s) * (i - p.s) + chi(i, p.b) * (i - p.b);
    let mut x = low;
    // m_i falls as N_i grows, so stop at the first negative value
    while x <= cap && p.l - 2 * (run + x) - offset >= 0 {
        big_n.push(x);
        descend(p, low, run + x, big_n, out);
        big_n.pop();
        x += 1;
    }
}

/// `q^Φ Π_i [n_i + m_i choose n_i]` for one summation vector.
pub fn multisum_term(
    p: &AgParams,
    v: &AgIndexVector,
    cache: &mut BinomialCache,
) -> Result<LaurentPoly> {
    let m = v.m_vector(p.s, p.b, p.l);
    let mut acc = LaurentPoly::one();
    for (&n_i, &m_i) in v.n().iter().zip(&m) {
        let factor = cache
            .get(n_i, m_i)
            .map_err(|e| Error::Consistency(e.to_string()))?;
        if factor.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        acc = &acc * factor;
    }
    Ok(acc.shift(v.phi(p.s, p.m)))
}

/// `F_{s,b}(L, M)`: the multisum with the extra linear term `-M N_1`.
pub fn big_f(nu: i64, s: i64, b: i64, l: i64, m: i64) -> Result<LaurentPoly> {
    let p = AgParams::new(nu, s, b, l, m)?;
    let mut cache = BinomialCache::new();
    let mut acc = LaurentPoly::zero();
    for v in admissible_vectors(&p) {
        acc += multisum_term(&p, &v, &mut cache)?;
    }
    Ok(acc)
}

/// `F̃_{s,b}(L) = F_{s,b}(L, 0)`.
pub fn f_tilde(nu: i64, s: i64, b: i64, l: i64) -> Result<LaurentPoly> {
    big_f(nu, s, b, l, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rrpoly::{f_shifted, rr_fermionic, RrKind};

    fn cartesian(ranges: &[std::ops::RangeInclusive<i64>]) -> Vec<Vec<i64>> {
        let mut out = vec![vec![]];
        for r in ranges {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    r.clone().map(move |x| {
                        let mut v = prefix.clone();
                        v.push(x);
                        v
                    })
                })
                .collect();
        }
        out
    }

    /// Sum over the whole box `0 <= n_i <= L+1` (`n_nu >= -1` when admitted)
    /// with no pruning at all.
    fn big_f_unpruned(nu: i64, s: i64, b: i64, l: i64, m: i64) -> LaurentPoly {
        let p = AgParams::new(nu, s, b, l, m).unwrap();
        let low = if p.allows_negative_last() { -1 } else { 0 };
        let ranges: Vec<_> = (1..=nu)
            .map(|i| if i == nu { low..=l + 1 } else { 0..=l + 1 })
            .collect();
        let mut cache = BinomialCache::new();
        cartesian(&ranges)
            .into_iter()
            .map(|n| multisum_term(&p, &AgIndexVector::new(n), &mut cache).unwrap())
            .sum()
    }

    #[test]
    fn initial_conditions() {
        for nu in 1..=3 {
            for s in 0..=nu {
                for b in 0..=nu {
                    let v = f_tilde(nu, s, b, 0).unwrap();
                    let expected = if s == b {
                        LaurentPoly::one()
                    } else {
                        LaurentPoly::zero()
                    };
                    assert_eq!(v, expected, "nu={nu} s={s} b={b}");
                }
            }
        }
    }

    #[test]
    fn nu_one_is_rogers_ramanujan() {
        for l in 0..=12 {
            assert_eq!(f_tilde(1, 1, 1, l).unwrap(), rr_fermionic(RrKind::E, l));
            assert_eq!(f_tilde(1, 0, 1, l).unwrap(), rr_fermionic(RrKind::D, l));
            for m in 0..=l {
                for s in 0..=1 {
                    for b in 0..=1 {
                        assert_eq!(
                            big_f(1, s, b, l, m).unwrap(),
                            f_shifted(1 - s, 1 - b, l, m).unwrap(),
                            "L={l} M={m} s={s} b={b}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn negative_last_index_term() {
        // nu=1, L=0, s=b=0: n_1=-1 gives m_1=0 and the only term
        let p = AgParams::new(1, 0, 0, 0, 0).unwrap();
        let vs = admissible_vectors(&p);
        assert_eq!(vs, vec![AgIndexVector::new(vec![-1])]);
        assert_eq!(f_tilde(1, 0, 0, 0).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn pruning_is_lossless() {
        for nu in 1..=3 {
            for s in 0..=nu {
                for b in 0..=nu {
                    for l in 0..=5 {
                        for m in [0, 2] {
                            assert_eq!(
                                big_f(nu, s, b, l, m).unwrap(),
                                big_f_unpruned(nu, s, b, l, m),
                                "nu={nu} s={s} b={b} L={l} M={m}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn shift_zero_reduces_to_f_tilde() {
        assert_eq!(big_f(2, 1, 1, 8, 0).unwrap(), f_tilde(2, 1, 1, 8).unwrap());
    }

    #[test]
    fn nonnegative_coefficients() {
        for s in 0..=2 {
            for b in 0..=2 {
                for l in 0..=10 {
                    assert!(f_tilde(2, s, b, l).unwrap().has_nonnegative_coefficients());
                }
            }
        }
    }

    #[test]
    fn parameter_errors() {
        assert!(f_tilde(0, 0, 0, 3).is_err());
        assert!(f_tilde(2, 0, 3, 3).is_err());
        assert!(big_f(2, 0, 0, -1, 0).is_err());
    }
}
