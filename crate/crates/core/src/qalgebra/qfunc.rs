use std::collections::hash_map::Entry;
use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use super::{LaurentPoly, TruncatedLaurentSeries};
use crate::error::{domain, precondition, Result};

/// `(q^a; q)_t = prod_{j=0}^{t-1} (1 - q^(a+j))`; `a` may be negative.
pub fn q_pochhammer(a: i64, t: i64) -> Result<LaurentPoly> {
    if t < 0 {
        return domain(format!("q-Pochhammer length must be nonnegative, got {t}"));
    }
    let mut acc = LaurentPoly::one();
    for j in 0..t {
        acc = acc * one_minus_q_pow(a + j);
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

/// `(q; q^2)_m = prod_{j=0}^{m-1} (1 - q^(2j+1))`.
pub fn odd_pochhammer(m: i64) -> Result<LaurentPoly> {
    if m < 0 {
        return domain(format!("(q;q^2)_m needs m >= 0, got {m}"));
    }
    Ok((0..m).fold(LaurentPoly::one(), |acc, j| {
        acc * one_minus_q_pow(2 * j + 1)
    }))
}

fn one_minus_q_pow(e: i64) -> LaurentPoly {
    LaurentPoly::one() - LaurentPoly::q_pow(e)
}

/// Gaussian binomial `[n+m choose n] = (q^(n+1))_m / (q)_m`.
///
/// Zero for `m < 0`. For `n = -1` the numerator contains `(1 - q^0)` as soon
/// as `m >= 1`, so the value is `1` at `m = 0` and zero otherwise. `n <= -2`
/// is rejected.
pub fn q_binomial(n: i64, m: i64) -> Result<LaurentPoly> {
    if n <= -2 {
        return domain(format!("q_binomial lower index n = {n} is below -1"));
    }
    if m < 0 {
        return Ok(LaurentPoly::zero());
    }
    if n == -1 {
        return Ok(if m == 0 {
            LaurentPoly::one()
        } else {
            LaurentPoly::zero()
        });
    }
    Ok(gaussian(n + m, n.min(m)))
}

/// `[top choose bottom]` with the usual support: zero unless
/// `0 <= bottom <= top`. Used by the alternating sums, whose lower indices
/// range over all integers.
pub fn gauss_binomial(top: i64, bottom: i64) -> LaurentPoly {
    if bottom < 0 || top < 0 || bottom > top {
        LaurentPoly::zero()
    } else {
        gaussian(top, bottom.min(top - bottom))
    }
}

/// `[total choose k]` for `0 <= k <= total`, built as
/// `prod_{j=1}^{k} (1 - q^(total-k+j)) / (1 - q^j)`; every partial product is
/// itself a Gaussian binomial, so each division is exact.
fn gaussian(total: i64, k: i64) -> LaurentPoly {
    debug_assert!(0 <= k && k <= total);
    let base = total - k;
    let mut c = vec![BigInt::from(1)];
    for j in 1..=k {
        let a = (base + j) as usize;
        let j = j as usize;
        let top = c.len() - 1;
        // multiply by (1 - q^a)
        c.resize(top + a + 1, BigInt::zero());
        for i in (a..=top + a).rev() {
            let v = c[i - a].clone();
            c[i] -= v;
        }
        // divide by (1 - q^j)
        let new_top = top + a - j;
        for i in j..=new_top {
            let v = c[i - j].clone();
            c[i] += v;
        }
        c.truncate(new_top + 1);
    }
    LaurentPoly::from_dense(0, c)
}

/// Memo table for `q_binomial`, owned by one computation.
#[derive(Debug, Default)]
pub struct BinomialCache {
    table: HashMap<(i64, i64), LaurentPoly>,
}

impl BinomialCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, n: i64, m: i64) -> Result<&LaurentPoly> {
        match self.table.entry((n, m)) {
            Entry::Occupied(e) => Ok(e.into_mut()),
            Entry::Vacant(e) => Ok(e.insert(q_binomial(n, m)?)),
        }
    }
}

/// `prod_{n >= 1, n mod modulus in allowed} 1/(1 - q^n)` below `cutoff`.
pub fn series_inverse_product(
    modulus: i64,
    allowed_residues: &BTreeSet<i64>,
    cutoff: i64,
) -> Result<TruncatedLaurentSeries> {
    if modulus < 1 {
        return domain(format!("modulus must be positive, got {modulus}"));
    }
    if allowed_residues.is_empty() {
        return precondition("empty residue set");
    }
    if let Some(r) = allowed_residues.iter().find(|&&r| r < 1 || r >= modulus) {
        return precondition(format!("residue {r} outside 1..{modulus}"));
    }
    if cutoff < 1 {
        return precondition(format!("cutoff must be >= 1, got {cutoff}"));
    }
    Ok(inverse_product_where(cutoff, |n| {
        allowed_residues.contains(&n.rem_euclid(modulus))
    }))
}

/// `1/(q)_inf` below `cutoff`.
pub fn series_inverse_euler(cutoff: i64) -> TruncatedLaurentSeries {
    inverse_product_where(cutoff, |_| true)
}

/// `1/(q)_t` below `cutoff`.
pub fn series_inverse_pochhammer(t: i64, cutoff: i64) -> TruncatedLaurentSeries {
    inverse_product_where(cutoff, |n| n <= t)
}

/// Multiplies in one geometric factor `1/(1 - q^n)` at a time, for each
/// `1 <= n < cutoff` accepted by `keep`.
fn inverse_product_where(cutoff: i64, keep: impl Fn(i64) -> bool) -> TruncatedLaurentSeries {
    let len = cutoff.max(0) as usize;
    let mut c = vec![BigInt::zero(); len];
    if len > 0 {
        c[0] = BigInt::from(1);
    }
    for n in 1..cutoff {
        if !keep(n) {
            continue;
        }
        let n = n as usize;
        for i in n..len {
            let v = c[i - n].clone();
            c[i] += v;
        }
    }
    TruncatedLaurentSeries::from_poly(&LaurentPoly::from_dense(0, c), cutoff)
}
