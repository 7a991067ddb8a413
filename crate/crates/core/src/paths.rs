//! Admissible 0/1 lattice paths and their weighted generating functions.
//!
//! A path on `[i, f]` is a sequence `σ_i, ..., σ_f` of zeros and ones with no
//! two adjacent ones. Interior ones are peaks; the weight of a path is the sum
//! of its peak positions. Everything here is computed by enumeration, so it
//! serves as an independent check on the closed formulas in [`crate::rrpoly`].

use std::fmt::Write as _;

use crate::error::{domain, precondition, Result};
use crate::qalgebra::{q_binomial, LaurentPoly};
use crate::report::{run_grid, VerificationReport};
use crate::rrpoly::f_shifted;

/// Horizontal and vertical size of one lattice unit in SVG output.
pub const SVG_UNIT: i64 = 20;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AdmissiblePath {
    start: i64,
    values: Vec<u8>,
}

impl AdmissiblePath {
    pub fn new(start: i64, values: Vec<u8>) -> Result<Self> {
        if values.is_empty() {
            return domain("a path needs at least one position");
        }
        if let Some(v) = values.iter().find(|&&v| v > 1) {
            return domain(format!("path entries must be 0 or 1, got {v}"));
        }
        if values.windows(2).any(|w| w[0] == 1 && w[1] == 1) {
            return domain("a path may not contain two adjacent ones");
        }
        Ok(Self { start, values })
    }

    /// The path on `[start, end]` whose interior ones sit at `peaks`.
    pub fn from_peaks(start: i64, end: i64, s: u8, b: u8, peaks: &[i64]) -> Result<Self> {
        if start > end {
            return precondition(format!("path start {start} exceeds end {end}"));
        }
        let mut values = vec![0u8; (end - start + 1) as usize];
        values[0] = s;
        *values.last_mut().unwrap() = b;
        if start == end && s != b {
            return domain("a single-point path has equal endpoints");
        }
        for &p in peaks {
            if p <= start || p >= end {
                return domain(format!("peak {p} is not interior to [{start}, {end}]"));
            }
            values[(p - start) as usize] = 1;
        }
        Self::new(start, values)
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn end(&self) -> i64 {
        self.start + self.values.len() as i64 - 1
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn value_at(&self, j: i64) -> Option<u8> {
        let k = usize::try_from(j - self.start).ok()?;
        self.values.get(k).copied()
    }

    pub fn peaks(&self) -> Vec<i64> {
        let n = self.values.len();
        (1..n.saturating_sub(1))
            .filter(|&k| self.values[k] == 1)
            .map(|k| self.start + k as i64)
            .collect()
    }

    pub fn weight(&self) -> i64 {
        self.peaks().iter().sum()
    }
}

/// All admissible paths on `[i, f]` with `σ_i = s`, `σ_f = b` and, when
/// given, exactly `t` peaks. Paths come out in lexicographic order of their
/// value sequences.
pub fn enumerate_paths(
    i: i64,
    f: i64,
    s: u8,
    b: u8,
    t: Option<i64>,
) -> Result<Vec<AdmissiblePath>> {
    check_args(i, f, s, b)?;
    let mut out = Vec::new();
    let n = (f - i + 1) as usize;
    let mut values = Vec::with_capacity(n);
    values.push(s);
    walk(n, b, t, 0, &mut values, &mut |v| {
        out.push(AdmissiblePath {
            start: i,
            values: v.to_vec(),
        })
    });
    Ok(out)
}

fn check_args(i: i64, f: i64, s: u8, b: u8) -> Result<()> {
    if i > f {
        return precondition(format!("path start {i} exceeds end {f}"));
    }
    if s > 1 || b > 1 {
        return domain(format!("endpoint values must be 0 or 1, got s={s} b={b}"));
    }
    Ok(())
}

fn walk(
    n: usize,
    b: u8,
    t: Option<i64>,
    peaks: i64,
    values: &mut Vec<u8>,
    emit: &mut impl FnMut(&[u8]),
) {
    let len = values.len();
    if len == n {
        let ok = values[n - 1] == b && t.is_none_or(|t| t == peaks);
        if ok {
            emit(values);
        }
        return;
    }
    if t.is_some_and(|t| peaks > t) {
        return;
    }
    let last = values[len - 1];
    let is_final = len + 1 == n;
    for v in [0u8, 1] {
        if v == 1 && last == 1 {
            continue;
        }
        if is_final && v != b {
            continue;
        }
        let bump = (v == 1 && !is_final) as i64;
        values.push(v);
        walk(n, b, t, peaks + bump, values, emit);
        values.pop();
    }
}

/// `C_{s,b}(i, f)`: sum of `q^weight` over [`enumerate_paths`].
pub fn path_gf(i: i64, f: i64, s: u8, b: u8, t: Option<i64>) -> Result<LaurentPoly> {
    check_args(i, f, s, b)?;
    let mut acc = LaurentPoly::zero();
    let n = (f - i + 1) as usize;
    let mut values = Vec::with_capacity(n);
    values.push(s);
    walk(n, b, t, 0, &mut values, &mut |v| {
        let interior = 1..v.len().saturating_sub(1);
        let w: i64 = interior.filter(|&k| v[k] == 1).map(|k| i + k as i64).sum();
        acc += LaurentPoly::q_pow(w);
    });
    Ok(acc)
}

fn gf(i: i64, f: i64, s: i64, b: i64, t: Option<i64>) -> LaurentPoly {
    path_gf(i, f, s as u8, b as u8, t).expect("grid arguments are valid")
}

/// Peak-count refinement of the partition lemma, its shifted form, and the
/// shifted generating function `f_{s,b}(L, M)` as a path sum.
pub fn verify_path_lemma(l_max: i64) -> VerificationReport {
    let grid = [
        ("L", format!("0..={l_max}")),
        ("M", "0..=L".to_string()),
        ("t", "0..=L/2".to_string()),
    ];
    run_grid("eq-2.1/2.2/2.5", &grid, (0..=l_max).collect(), |l, rep| {
        for t in 0..=l / 2 {
            let binom = q_binomial(t, l - 2 * t).expect("t >= 0");
            let lhs = binom.shift(t * t);
            rep.check_poly(
                "eq-2.1",
                &[("L", l), ("t", t)],
                &lhs,
                &gf(0, l, 0, 0, Some(t)),
            );
            for m in 0..=l {
                let lhs = binom.shift(t * t - m * t);
                let rhs = gf(-m, l - m, 0, 0, Some(t));
                rep.check_poly("eq-2.2", &[("L", l), ("M", m), ("t", t)], &lhs, &rhs);
            }
        }
        for m in 0..=l {
            for s in 0..=1 {
                for b in 0..=1 {
                    let lhs = f_shifted(s, b, l, m).expect("L >= 0");
                    let rhs = gf(-m, l - m, s, b, None);
                    rep.check_poly(
                        "eq-2.5",
                        &[("L", l), ("M", m), ("s", s), ("b", b)],
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
    })
}

/// Concatenation of paths at the origin and reflection of the left piece.
pub fn verify_decompositions(l_max: i64) -> VerificationReport {
    let grid = [("L", format!("0..={l_max}")), ("M", "0..=L".to_string())];
    run_grid("eq-2.8/2.10", &grid, (0..=l_max).collect(), |l, rep| {
        for m in 0..=l {
            for s in 0..=1 {
                for b in 0..=1 {
                    let lhs = gf(-m, l - m, s, b, None);
                    let rhs: LaurentPoly = (0..=1)
                        .map(|sp| &gf(-m, 0, s, sp, None) * &gf(0, l - m, sp, b, None))
                        .sum();
                    rep.check_poly(
                        "eq-2.8",
                        &[("L", l), ("M", m), ("s", s), ("b", b)],
                        &lhs,
                        &rhs,
                    );
                }
            }
            // reflection involves only [-M, 0]; check it once per M
            if m == l {
                for s in 0..=1 {
                    for sp in 0..=1 {
                        let lhs = gf(-m, 0, s, sp, None);
                        let rhs = gf(0, m, sp, s, None).invert_variable();
                        rep.check_poly("eq-2.10", &[("M", m), ("s", s), ("s'", sp)], &lhs, &rhs);
                    }
                }
            }
        }
    })
}

/// Two-row ASCII drawing: up and down steps in the top row, flat steps in
/// the bottom row, then the axis endpoints and the peak list.
pub fn render_path(p: &AdmissiblePath) -> String {
    let v = &p.values;
    let mut top = String::new();
    let mut bottom = String::new();
    if v.len() == 1 {
        if v[0] == 1 {
            top.push('o');
            bottom.push(' ');
        } else {
            top.push(' ');
            bottom.push('o');
        }
    }
    for w in v.windows(2) {
        let (t, b) = match (w[0], w[1]) {
            (0, 1) => ('/', ' '),
            (1, 0) => ('\\', ' '),
            _ => (' ', '_'),
        };
        top.push(t);
        bottom.push(b);
    }
    let width = top.chars().count();
    let left = p.start.to_string();
    let right = p.end().to_string();
    let gap = width.saturating_sub(left.len() + right.len()).max(1);
    let peaks: Vec<String> = p.peaks().iter().map(i64::to_string).collect();
    let mut out = String::new();
    let _ = writeln!(out, "{}", top.trim_end());
    let _ = writeln!(out, "{}", bottom.trim_end());
    let _ = writeln!(out, "{left}{}{right}", " ".repeat(gap));
    let _ = writeln!(
        out,
        "peaks: {{{}}}  weight: {}",
        peaks.join(", "),
        p.weight()
    );
    out
}

/// SVG polyline through the points `(j, σ_j)`, `SVG_UNIT` pixels per unit,
/// with `x = 0` at the path start and the baseline at the bottom margin.
pub fn render_path_svg(p: &AdmissiblePath) -> String {
    let margin = SVG_UNIT;
    let width = (p.values.len() as i64 - 1) * SVG_UNIT + 2 * margin;
    let height = SVG_UNIT + 2 * margin;
    let base = margin + SVG_UNIT;
    let points: Vec<String> = p
        .values
        .iter()
        .enumerate()
        .map(|(k, &v)| {
            format!(
                "{},{}",
                margin + k as i64 * SVG_UNIT,
                base - v as i64 * SVG_UNIT
            )
        })
        .collect();
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        out,
        r##"  <line x1="{margin}" y1="{base}" x2="{}" y2="{base}" stroke="#999" stroke-dasharray="2,2"/>"##,
        width - margin
    );
    let _ = writeln!(
        out,
        r#"  <polyline points="{}" fill="none" stroke="black" stroke-width="2"/>"#,
        points.join(" ")
    );
    for peak in p.peaks() {
        let x = margin + (peak - p.start) * SVG_UNIT;
        let _ = writeln!(
            out,
            r#"  <text x="{x}" y="{}" font-size="10" text-anchor="middle">{peak}</text>"#,
            margin - 4
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn three_peak_path_has_weight_fourteen() {
        let path = AdmissiblePath::from_peaks(0, 10, 0, 0, &[2, 4, 8]).unwrap();
        assert_eq!(path.peaks(), vec![2, 4, 8]);
        assert_eq!(path.weight(), 14);
        let all = enumerate_paths(0, 10, 0, 0, Some(3)).unwrap();
        assert!(all.contains(&path));
        assert!(path_gf(0, 10, 0, 0, Some(3)).unwrap().coeff(14) >= 1.into());
    }

    #[test]
    fn enumeration_examples() {
        let zero = enumerate_paths(0, 6, 0, 0, Some(0)).unwrap();
        assert_eq!(zero.len(), 1);
        assert!(zero[0].values().iter().all(|&v| v == 0));
        assert_eq!(enumerate_paths(0, 2, 1, 1, None).unwrap().len(), 1);
        assert!(enumerate_paths(0, 2, 1, 1, Some(1)).unwrap().is_empty());
        assert!(enumerate_paths(3, 2, 0, 0, None).is_err());
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let all = enumerate_paths(0, 7, 0, 0, None).unwrap();
        for w in all.windows(2) {
            assert!(w[0].values() < w[1].values());
        }
    }

    #[test]
    fn generating_function_examples() {
        assert_eq!(
            path_gf(0, 4, 0, 0, None).unwrap(),
            p("1 + q + q^2 + q^3 + q^4")
        );
        assert_eq!(path_gf(-2, 0, 0, 0, None).unwrap(), p("q^-1 + 1"));
        assert_eq!(path_gf(0, 4, 0, 0, Some(2)).unwrap(), p("q^4"));
        assert_eq!(
            path_gf(-4, 0, 0, 0, Some(1)).unwrap(),
            p("q^-3 + q^-2 + q^-1")
        );
        assert_eq!(path_gf(0, 0, 1, 1, None).unwrap(), LaurentPoly::one());
        assert!(path_gf(0, 0, 1, 0, None).unwrap().is_zero());
    }

    #[test]
    fn invalid_paths_rejected() {
        assert!(AdmissiblePath::new(0, vec![0, 1, 1]).is_err());
        assert!(AdmissiblePath::new(0, vec![0, 2]).is_err());
        assert!(AdmissiblePath::from_peaks(0, 4, 0, 0, &[0]).is_err());
        assert!(AdmissiblePath::from_peaks(0, 4, 0, 0, &[1, 2]).is_err());
    }

    #[test]
    fn ascii_rendering() {
        let fig = AdmissiblePath::from_peaks(0, 10, 0, 0, &[2, 4, 8]).unwrap();
        let text = render_path(&fig);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], " /\\/\\  /\\");
        assert_eq!(lines[1], "_    __  _");
        assert_eq!(lines[2], "0       10");
        assert_eq!(lines[3], "peaks: {2, 4, 8}  weight: 14");

        let flat = AdmissiblePath::new(0, vec![0; 5]).unwrap();
        let lines: Vec<String> = render_path(&flat).lines().map(String::from).collect();
        assert_eq!(lines[0], "");
        assert_eq!(lines[1], "____");

        let down = AdmissiblePath::new(0, vec![1, 0, 0]).unwrap();
        assert!(render_path(&down).starts_with('\\'));
    }

    #[test]
    fn svg_rendering_uses_fixed_grid() {
        let fig = AdmissiblePath::from_peaks(0, 4, 0, 0, &[2]).unwrap();
        let svg = render_path_svg(&fig);
        assert!(svg.contains(r#"points="20,40 40,40 60,20 80,40 100,40""#));
        assert!(svg.contains(">2</text>"));
    }

    #[test]
    fn family_reports_pass() {
        let lemma = verify_path_lemma(10);
        assert!(lemma.passed(), "{lemma}");
        let dec = verify_decompositions(10);
        assert!(dec.passed(), "{dec}");
    }
}
