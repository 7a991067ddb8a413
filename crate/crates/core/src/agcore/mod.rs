//! Andrews-Gordon multisums `F̃_{s,b}(L)`, their shifted versions
//! `F_{s,b}(L, M)`, the alternating sums `B_{s,b}(L)`, and checks of the
//! identities connecting them.

mod bosonic;
mod multisum;
mod telescoping;
mod verify;

pub use bosonic::b_bosonic;
pub use multisum::{admissible_vectors, big_f, f_tilde, multisum_term};
pub use telescoping::{telescoping_audit, telescoping_grid, verify_q_pascal};
pub use verify::{
    connection_coefficients, verify_ag_polynomial, verify_connection, verify_main_theorem,
    verify_recurrences,
};

use crate::error::{domain, Result};

/// Parameters of one multisum: `0 <= s, b <= nu`, `L >= 0`, any `M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AgParams {
    pub nu: i64,
    pub s: i64,
    pub b: i64,
    pub l: i64,
    pub m: i64,
}

impl AgParams {
    pub fn new(nu: i64, s: i64, b: i64, l: i64, m: i64) -> Result<Self> {
        if nu < 1 {
            return domain(format!("nu must be positive, got {nu}"));
        }
        if !(0..=nu).contains(&s) || !(0..=nu).contains(&b) {
            return domain(format!("s and b must lie in 0..={nu}, got s={s} b={b}"));
        }
        if l < 0 {
            return domain(format!("L must be nonnegative, got {l}"));
        }
        Ok(Self { nu, s, b, l, m })
    }

    /// Whether `n_nu = -1` is admitted.
    pub fn allows_negative_last(&self) -> bool {
        self.s != self.nu && self.b != self.nu
    }
}

/// `χ(i > a)`.
pub fn chi(i: i64, a: i64) -> i64 {
    (i > a) as i64
}

/// A summation vector `n = (n_1, ..., n_nu)` with its partial sums
/// `N_i = n_i + ... + n_nu`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AgIndexVector {
    n: Vec<i64>,
}

impl AgIndexVector {
    pub fn new(n: Vec<i64>) -> Self {
        Self { n }
    }

    pub fn from_partial_sums(big_n: &[i64]) -> Self {
        let n = (0..big_n.len())
            .map(|i| big_n[i] - big_n.get(i + 1).copied().unwrap_or(0))
            .collect();
        Self { n }
    }

    pub fn nu(&self) -> i64 {
        self.n.len() as i64
    }

    pub fn n(&self) -> &[i64] {
        &self.n
    }

    pub fn partial_sums(&self) -> Vec<i64> {
        let mut out = vec![0; self.n.len()];
        let mut acc = 0;
        for i in (0..self.n.len()).rev() {
            acc += self.n[i];
            out[i] = acc;
        }
        out
    }

    /// `m_i = L - 2(N_1 + ... + N_i) - χ(i>s)(i-s) - χ(i>b)(i-b)`.
    pub fn m_vector(&self, s: i64, b: i64, l: i64) -> Vec<i64> {
        let big_n = self.partial_sums();
        let mut run = 0;
        (1..=self.nu())
            .map(|i| {
                run += big_n[(i - 1) as usize];
                l - 2 * run - chi(i, s) * (i - s) - chi(i, b) * (i - b)
            })
            .collect()
    }

    /// `Φ_s(N, M) = Σ N_i^2 + (N_{s+1} + ... + N_nu) - M N_1`.
    pub fn phi(&self, s: i64, m: i64) -> i64 {
        let big_n = self.partial_sums();
        let squares: i64 = big_n.iter().map(|x| x * x).sum();
        let linear: i64 = big_n.iter().skip(s as usize).sum();
        squares + linear - m * big_n.first().copied().unwrap_or(0)
    }

    pub fn shifted(&self, delta: &[i64]) -> Self {
        Self {
            n: self.n.iter().zip(delta).map(|(a, d)| a + d).collect(),
        }
    }
}

/// Unit vectors `e_i` and blocks `E_{a,b} = e_a + ... + e_b` in dimension
/// `nu`; indices outside `1..=nu` contribute nothing.
#[derive(Clone, Copy, Debug)]
pub struct ShiftVectors {
    pub nu: i64,
}

impl ShiftVectors {
    pub fn e(&self, i: i64) -> Vec<i64> {
        (1..=self.nu).map(|j| (i == j) as i64).collect()
    }

    pub fn block(&self, a: i64, b: i64) -> Vec<i64> {
        (1..=self.nu).map(|j| (a <= j && j <= b) as i64).collect()
    }

    /// Componentwise sum of signed vectors.
    pub fn combine(&self, parts: &[(i64, &[i64])]) -> Vec<i64> {
        let mut out = vec![0; self.nu as usize];
        for (sign, v) in parts {
            for (o, x) in out.iter_mut().zip(v.iter()) {
                *o += sign * x;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_validation() {
        assert!(AgParams::new(0, 0, 0, 0, 0).is_err());
        assert!(AgParams::new(2, 3, 0, 0, 0).is_err());
        assert!(AgParams::new(2, 0, -1, 0, 0).is_err());
        assert!(AgParams::new(2, 0, 0, -1, 0).is_err());
        let p = AgParams::new(2, 1, 0, 4, -3).unwrap();
        assert!(p.allows_negative_last());
        assert!(!AgParams::new(2, 2, 0, 4, 0).unwrap().allows_negative_last());
    }

    #[test]
    fn partial_sums_and_derived_data() {
        let v = AgIndexVector::new(vec![2, 1, 3]);
        assert_eq!(v.partial_sums(), vec![6, 4, 3]);
        assert_eq!(AgIndexVector::from_partial_sums(&[6, 4, 3]), v);
        // L=30, s=1, b=0: m_1 = 30-12-0-1, m_2 = 30-20-1-2, m_3 = 30-26-2-3
        assert_eq!(v.m_vector(1, 0, 30), vec![17, 7, -1]);
        // 36+16+9 + (4+3) - 2*6
        assert_eq!(v.phi(1, 2), 56);
        assert_eq!(v.phi(3, 0), 61);
    }

    #[test]
    fn chi_is_strict() {
        assert_eq!(chi(2, 2), 0);
        assert_eq!(chi(3, 2), 1);
    }

    #[test]
    fn shift_vectors() {
        let sv = ShiftVectors { nu: 3 };
        assert_eq!(sv.e(2), vec![0, 1, 0]);
        assert_eq!(sv.e(0), vec![0, 0, 0]);
        assert_eq!(sv.e(4), vec![0, 0, 0]);
        assert_eq!(sv.block(1, 2), vec![1, 1, 0]);
        assert_eq!(sv.block(2, 1), vec![0, 0, 0]);
        let (a, b) = (sv.e(1), sv.block(1, 3));
        assert_eq!(sv.combine(&[(1, &a), (-1, &b)]), vec![0, -1, -1]);
    }
}
