use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact polynomial in `q` and `1/q` with arbitrary-precision integer
/// coefficients.
///
/// Storage is sparse and canonical: no stored coefficient is zero, so derived
/// structural equality is mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `coeff * q^exponent`.
    pub fn monomial(exponent: i64, coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exponent, coeff);
        }
        Self { terms }
    }

    /// `q^exponent`.
    pub fn q_pow(exponent: i64) -> Self {
        Self::monomial(exponent, 1)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    /// Builds a polynomial whose coefficient of `q^(min_exponent + k)` is `coeffs[k]`.
    pub fn from_dense(min_exponent: i64, coeffs: Vec<BigInt>) -> Self {
        let terms = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (min_exponent + k as i64, c))
            .collect();
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exponent: i64) -> BigInt {
        self.terms.get(&exponent).cloned().unwrap_or_default()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, exponent: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponent).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * factor)).collect(),
        }
    }

    /// The substitution `q -> 1/q`; negates every exponent.
    pub fn invert_variable(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Value at `q = 1`, the sum of all coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Dense coefficient vector over `[min_exponent, max_exponent]`.
    pub fn to_dense(&self) -> (i64, Vec<BigInt>) {
        match (self.min_exponent(), self.max_exponent()) {
            (Some(lo), Some(hi)) => {
                let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
                for (e, c) in &self.terms {
                    v[(e - lo) as usize] = c.clone();
                }
                (lo, v)
            }
            _ => (0, Vec::new()),
        }
    }

    /// `(exponent, decimal coefficient)` pairs, ascending; the JSON-facing form.
    pub fn to_pairs(&self) -> Vec<(i64, String)> {
        self.terms
            .iter()
            .map(|(e, c)| (*e, c.to_string()))
            .collect()
    }

    pub fn from_pairs(pairs: &[(i64, String)]) -> Result<Self> {
        let mut out = Self::zero();
        for (e, c) in pairs {
            let c: BigInt = c
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {c:?}")))?;
            out.add_term(*e, c);
        }
        Ok(out)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let (small, large) = if self.len() <= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        if small.len() <= 4 {
            let mut out = Self::zero();
            for (e1, c1) in &small.terms {
                for (e2, c2) in &large.terms {
                    out.add_term(e1 + e2, c1 * c2);
                }
            }
            return out;
        }
        let (lo_a, a) = self.to_dense();
        let (lo_b, b) = rhs.to_dense();
        let mut acc = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if !cb.is_zero() {
                    acc[i + j] += ca * cb;
                }
            }
        }
        Self::from_dense(lo_a + lo_b, acc)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::monomial(0, c)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.mul_ref(rhs)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        self.mul_ref(&rhs)
    }
}

impl Mul<&LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.mul_ref(rhs)
    }
}

impl Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl<'a> Sum<&'a LaurentPoly> for LaurentPoly {
    fn sum<I: Iterator<Item = &'a LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |mut acc, p| {
            acc += p;
            acc
        })
    }
}

/// Canonical rendering: ascending exponents, `" + "` / `" - "` separators,
/// unit coefficients elided, e.g. `2*q^-1 - 1 + q^3`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (k, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let mag = c.abs();
            if *e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if *e == 1 {
                f.write_str("q")?;
            } else {
                write!(f, "q^{e}")?;
            }
        }
        Ok(())
    }
}

/// Parses the canonical rendering. Whitespace is optional, so `1+q+q^2` is
/// accepted as well; repeated exponents are merged.
impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let src: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if src.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut p = Parser { src: &src, pos: 0 };
        let mut out = LaurentPoly::zero();
        let mut first = true;
        while p.pos < src.len() {
            let negative = match p.peek() {
                Some('+') if !first => {
                    p.pos += 1;
                    false
                }
                Some('-') => {
                    p.pos += 1;
                    true
                }
                _ if first => false,
                other => return Err(p.error(format!("expected sign, found {other:?}"))),
            };
            first = false;
            let (e, c) = p.term()?;
            out.add_term(e, if negative { -c } else { c });
        }
        Ok(out)
    }
}

struct Parser<'a> {
    src: &'a [char],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.src.get(self.pos).copied()
    }

    fn error(&self, msg: String) -> Error {
        Error::Parse(format!("{msg} at offset {}", self.pos))
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.src[start..self.pos].iter().collect())
    }

    fn term(&mut self) -> Result<(i64, BigInt)> {
        let coeff = match self.digits() {
            Some(d) => {
                let c: BigInt = d.parse().map_err(|_| self.error("bad integer".into()))?;
                if self.peek() != Some('*') {
                    return Ok((0, c));
                }
                self.pos += 1;
                c
            }
            None => BigInt::one(),
        };
        if self.peek() != Some('q') {
            return Err(self.error("expected 'q'".into()));
        }
        self.pos += 1;
        if self.peek() != Some('^') {
            return Ok((1, coeff));
        }
        self.pos += 1;
        let negative = self.peek() == Some('-');
        if negative {
            self.pos += 1;
        }
        let d = self
            .digits()
            .ok_or_else(|| self.error("expected exponent".into()))?;
        let e: i64 = d
            .parse()
            .map_err(|_| self.error("exponent overflow".into()))?;
        Ok((if negative { -e } else { e }, coeff))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_rendering() {
        let poly = LaurentPoly::from_terms([(3, 1), (-1, 2), (0, -1)]);
        assert_eq!(poly.to_string(), "2*q^-1 - 1 + q^3");
        assert_eq!(
            LaurentPoly::from_terms([(0, -1), (2, -3)]).to_string(),
            "-1 - 3*q^2"
        );
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::q_pow(1).to_string(), "q");
        assert_eq!(LaurentPoly::monomial(-4, -1).to_string(), "-q^-4");
    }

    #[test]
    fn parse_accepts_compact_input() {
        assert_eq!(
            p("1+q+q^2"),
            LaurentPoly::from_terms([(0, 1), (1, 1), (2, 1)])
        );
        assert_eq!(
            p("-q^-2 + 3*q^5 - 2"),
            LaurentPoly::from_terms([(-2, -1), (5, 3), (0, -2)])
        );
        assert_eq!(p("q + q"), LaurentPoly::monomial(1, 2));
        assert_eq!(p("q - q"), LaurentPoly::zero());
        assert!("".parse::<LaurentPoly>().is_err());
        assert!("1 + + q".parse::<LaurentPoly>().is_err());
        assert!("2*x".parse::<LaurentPoly>().is_err());
        assert!("q^".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn zero_coefficients_are_never_stored() {
        let a = p("1 + q");
        let b = p("1 - q");
        let s = &a + &b;
        assert_eq!(s, LaurentPoly::from(2));
        assert_eq!(s.len(), 1);
        assert!((&a - &a).is_zero());
        assert!(LaurentPoly::monomial(7, 0).is_zero());
    }

    #[test]
    fn invert_variable_examples() {
        assert_eq!(p("1 + q").invert_variable(), p("1 + q^-1"));
        assert!(LaurentPoly::zero().invert_variable().is_zero());
        let x = p("3*q^-2 - q^5");
        assert_eq!(x.invert_variable().invert_variable(), x);
    }

    #[test]
    fn eval_at_one_examples() {
        assert_eq!(p("1 + q + q^2").eval_at_one(), BigInt::from(3));
        assert_eq!(LaurentPoly::zero().eval_at_one(), BigInt::zero());
    }

    #[test]
    fn dense_and_sparse_products_agree() {
        let a = p("1 - q + 2*q^3 + q^4 - 5*q^7 + q^-2");
        let b = p("3 + q^2 - q^3 + q^9 + 4*q^-1");
        let mut sparse = LaurentPoly::zero();
        for (e1, c1) in a.terms() {
            for (e2, c2) in b.terms() {
                sparse += LaurentPoly::monomial(e1 + e2, c1 * c2);
            }
        }
        assert_eq!(&a * &b, sparse);
    }

    #[test]
    fn pairs_round_trip() {
        let a = p("-12*q^-3 + 7 + q^40");
        assert_eq!(LaurentPoly::from_pairs(&a.to_pairs()).unwrap(), a);
        assert!(LaurentPoly::from_pairs(&[(0, "x".into())]).is_err());
    }
}
