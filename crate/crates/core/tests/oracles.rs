//! Brute-force counting oracles, independent of the library's formulas.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use qgordon::qalgebra::q_binomial;
use qgordon::rrpoly::{rr_fermionic, RrKind};
use qgordon::series::multisum_series;
use qgordon::LaurentPoly;

/// Weight generating function of subsets of `lo..=hi` with no two consecutive elements.
fn sparse_subsets(lo: i64, hi: i64) -> LaurentPoly {
    let width = (hi - lo + 1).max(0) as u32;
    let mut counts: BTreeMap<i64, i64> = BTreeMap::new();
    for mask in 0u64..(1u64 << width) {
        if mask & (mask >> 1) != 0 {
            continue;
        }
        let weight = (0..width)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| lo + i as i64)
            .sum();
        *counts.entry(weight).or_default() += 1;
    }
    LaurentPoly::from_terms(counts)
}

/// All partitions of `n` as non-increasing part lists.
fn partitions(n: i64, max_part: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if n == 0 {
        out.push(prefix.clone());
        return;
    }
    for part in (1..=max_part.min(n)).rev() {
        prefix.push(part);
        partitions(n - part, part, prefix, out);
        prefix.pop();
    }
}

/// Gordon's frequency conditions: `f_j + f_{j+1} <= k - 1` and `f_1 <= i - 1`.
fn gordon_count(n: i64, k: i64, i: i64) -> i64 {
    let mut all = Vec::new();
    partitions(n, n, &mut Vec::new(), &mut all);
    all.iter()
        .filter(|p| {
            let freq = |j: i64| p.iter().filter(|&&x| x == j).count() as i64;
            freq(1) < i && (1..=n).all(|j| freq(j) + freq(j + 1) < k)
        })
        .count() as i64
}

/// Partitions with at most `rows` parts, each at most `cols`, by size.
fn box_partitions(rows: i64, cols: i64) -> LaurentPoly {
    let mut counts: BTreeMap<i64, i64> = BTreeMap::new();
    fn walk(rows: i64, max: i64, total: i64, counts: &mut BTreeMap<i64, i64>) {
        *counts.entry(total).or_default() += 1;
        if rows == 0 {
            return;
        }
        for part in 1..=max {
            walk(rows - 1, part, total + part, counts);
        }
    }
    walk(rows, cols, 0, &mut counts);
    LaurentPoly::from_terms(counts)
}

#[test]
fn rr_polynomials_count_sparse_subsets() {
    for l in 1..=18 {
        assert_eq!(
            rr_fermionic(RrKind::E, l),
            sparse_subsets(1, l - 1),
            "e_{l}"
        );
        assert_eq!(
            rr_fermionic(RrKind::D, l),
            sparse_subsets(2, l - 1),
            "d_{l}"
        );
    }
}

#[test]
fn gaussian_binomials_count_box_partitions() {
    for n in 0..=7 {
        for m in 0..=7 {
            assert_eq!(
                q_binomial(n, m).unwrap(),
                box_partitions(n, m),
                "n={n} m={m}"
            );
        }
    }
}

#[test]
fn multisum_series_count_gordon_partitions() {
    let cutoff = 22;
    for nu in 1..=2 {
        for s in 1..=nu + 1 {
            let series = multisum_series(nu, s, 0, cutoff, 0);
            for n in 0..cutoff {
                assert_eq!(
                    series.coeff(n),
                    Some(BigInt::from(gordon_count(n, nu + 1, s))),
                    "nu={nu} s={s} n={n}"
                );
            }
        }
    }
}
