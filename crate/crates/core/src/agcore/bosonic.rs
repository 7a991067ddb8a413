use crate::error::{domain, Result};
use crate::qalgebra::{gauss_binomial, LaurentPoly};

/// `B_{S,B}(L)` with 1-based `S`, `B` and modulus `K = 2 nu + 3`:
/// `Σ_j q^(2Kj² + j(K-2S)) [L; (L+S-B)/2 - jK] - q^((2j+1)(Kj+S)) [L; (L-S-B)/2 - jK]`.
pub fn b_bosonic(nu: i64, s: i64, b: i64, l: i64) -> Result<LaurentPoly> {
    if nu < 1 {
        return domain(format!("nu must be positive, got {nu}"));
    }
    let k = 2 * nu + 3;
    if !(1..=2 * nu + 2).contains(&s) || !(1..=nu + 1).contains(&b) {
        return domain(format!(
            "B needs 1 <= S <= {} and 1 <= B <= {}, got S={s} B={b}",
            2 * nu + 2,
            nu + 1
        ));
    }
    if l < 0 {
        return domain(format!("L must be nonnegative, got {l}"));
    }
    if (l - s - b).rem_euclid(2) != 0 {
        return domain(format!("B_{{{s},{b}}}(L) needs L = S + B mod 2, got L={l}"));
    }
    let reach = l / k + 2;
    let mut acc = LaurentPoly::zero();
    for j in -reach..=reach {
        acc += gauss_binomial(l, (l + s - b) / 2 - j * k).shift(2 * k * j * j + j * (k - 2 * s));
        acc -= &gauss_binomial(l, (l - s - b) / 2 - j * k).shift((2 * j + 1) * (k * j + s));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_values() {
        assert_eq!(b_bosonic(1, 1, 1, 0).unwrap(), LaurentPoly::one());
        assert_eq!(b_bosonic(1, 2, 2, 2).unwrap(), "1 + q".parse().unwrap());
    }

    #[test]
    fn domain_errors() {
        assert!(b_bosonic(1, 1, 2, 2).is_err());
        assert!(b_bosonic(1, 0, 1, 1).is_err());
        assert!(b_bosonic(1, 5, 1, 0).is_err());
        assert!(b_bosonic(1, 1, 3, 0).is_err());
        assert!(b_bosonic(0, 1, 1, 0).is_err());
    }
}
