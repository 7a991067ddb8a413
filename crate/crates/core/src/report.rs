//! Structured outcome of one identity check over a parameter grid.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qalgebra::{LaurentPoly, RationalQ, SeriesWindow, TruncatedLaurentSeries};

/// Windows shorter than this many coefficients are flagged as weak checks.
pub const WEAK_WINDOW: i64 = 20;

/// Stored counterexamples per report; the total count is always kept.
const MAX_COUNTEREXAMPLES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One side of a failed equality: canonical text plus the coefficient lists
/// it was rendered from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RenderedValue {
    pub text: String,
    pub numerator: Vec<(i64, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub denominator: Option<Vec<(i64, String)>>,
    /// Set for truncated series: coefficients at or beyond it are unknown.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cutoff: Option<i64>,
}

impl RenderedValue {
    pub fn poly(p: &LaurentPoly) -> Self {
        Self {
            text: p.to_string(),
            numerator: p.to_pairs(),
            denominator: None,
            cutoff: None,
        }
    }

    pub fn rational(r: &RationalQ) -> Self {
        if r.is_polynomial() {
            return Self::poly(r.numerator());
        }
        Self {
            text: r.to_string(),
            numerator: r.numerator().to_pairs(),
            denominator: Some(r.denominator().to_pairs()),
            cutoff: None,
        }
    }

    /// Known coefficients of a truncated series; `text` carries the `O(q^c)` tail.
    pub fn series(s: &TruncatedLaurentSeries) -> Self {
        Self {
            text: s.to_string(),
            numerator: s.to_poly().to_pairs(),
            denominator: None,
            cutoff: Some(s.cutoff()),
        }
    }

    /// Rebuilds the canonical text from the coefficient lists.
    pub fn rerender(&self) -> Result<String> {
        let num = LaurentPoly::from_pairs(&self.numerator)?;
        match (&self.denominator, self.cutoff) {
            (Some(den), _) => {
                let den = LaurentPoly::from_pairs(den)?;
                Ok(RationalQ::new(num, den)?.to_string())
            }
            (None, Some(c)) => Ok(TruncatedLaurentSeries::from_poly(&num, c).to_string()),
            (None, None) => Ok(num.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// Which equality of the family failed, e.g. `"eq-2.2"`.
    pub label: String,
    pub params: BTreeMap<String, i64>,
    pub lhs: RenderedValue,
    pub rhs: RenderedValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity_id: String,
    pub grid: BTreeMap<String, String>,
    pub status: Status,
    /// Number of individual equalities evaluated.
    pub checks: u64,
    /// Number of failed equalities, including any beyond the stored sample.
    pub failures: u64,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_ms: u64,
    /// Narrowest series window compared, for truncated-series checks.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<SeriesWindow>,
    #[serde(default)]
    pub weak_window: bool,
    /// Measurements recorded alongside the pass/fail verdict.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serialization is infallible")
    }

    pub fn from_json_line(line: &str) -> Result<Self> {
        serde_json::from_str(line).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Merges several reports of the same identity (e.g. per-ν runs) into one.
    pub fn merge(identity_id: impl Into<String>, parts: Vec<VerificationReport>) -> Self {
        let mut out = ReportBuilder::new(identity_id).finish();
        for part in parts {
            for (k, v) in part.grid {
                out.grid
                    .entry(k)
                    .and_modify(|cur| {
                        if *cur != v {
                            cur.push_str(", ");
                            cur.push_str(&v);
                        }
                    })
                    .or_insert(v);
            }
            out.checks += part.checks;
            out.failures += part.failures;
            out.elapsed_ms += part.elapsed_ms;
            out.notes.extend(part.notes);
            let room = MAX_COUNTEREXAMPLES.saturating_sub(out.counterexamples.len());
            out.counterexamples
                .extend(part.counterexamples.into_iter().take(room));
            if let Some(w) = part.window {
                out.window = Some(narrower(out.window, w));
            }
        }
        out.weak_window = out.window.is_some_and(|w| w.len() < WEAK_WINDOW);
        out.status = if out.failures == 0 {
            Status::Pass
        } else {
            Status::Fail
        };
        out
    }
}

/// Evaluates `body` for every grid point in parallel and merges the results
/// under `identity_id`. Elapsed time is wall-clock for the whole grid.
pub fn run_grid<T, F>(
    identity_id: &str,
    grid: &[(&str, String)],
    points: Vec<T>,
    body: F,
) -> VerificationReport
where
    T: Send,
    F: Fn(T, &mut ReportBuilder) + Sync,
{
    let started = Instant::now();
    let parts: Vec<VerificationReport> = points
        .into_par_iter()
        .map(|p| {
            let mut rep = ReportBuilder::new(identity_id);
            body(p, &mut rep);
            rep.finish()
        })
        .collect();
    let mut out = VerificationReport::merge(identity_id, parts);
    out.grid = grid
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect();
    out.elapsed_ms = started.elapsed().as_millis() as u64;
    out
}

fn narrower(cur: Option<SeriesWindow>, w: SeriesWindow) -> SeriesWindow {
    match cur {
        Some(c) if c.len() <= w.len() => c,
        _ => w,
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(
            f,
            "{status}  {:<18} checks={:<7} failures={:<4} {:>6} ms",
            self.identity_id, self.checks, self.failures, self.elapsed_ms
        )?;
        if let Some(w) = self.window {
            write!(f, "  window=[{}, {})", w.min_exponent, w.cutoff)?;
            if self.weak_window {
                f.write_str(" (weak)")?;
            }
        }
        Ok(())
    }
}

/// Accumulates checks for one report.
#[derive(Debug)]
pub struct ReportBuilder {
    identity_id: String,
    grid: BTreeMap<String, String>,
    checks: u64,
    failures: u64,
    counterexamples: Vec<Counterexample>,
    window: Option<SeriesWindow>,
    notes: Vec<String>,
    started: Instant,
}

impl ReportBuilder {
    pub fn new(identity_id: impl Into<String>) -> Self {
        Self {
            identity_id: identity_id.into(),
            grid: BTreeMap::new(),
            checks: 0,
            failures: 0,
            counterexamples: Vec::new(),
            window: None,
            notes: Vec::new(),
            started: Instant::now(),
        }
    }

    pub fn grid(mut self, key: &str, range: impl fmt::Display) -> Self {
        self.grid.insert(key.to_string(), range.to_string());
        self
    }

    /// Records one equality; a mismatch becomes a counterexample.
    pub fn check_poly(
        &mut self,
        label: &str,
        params: &[(&str, i64)],
        lhs: &LaurentPoly,
        rhs: &LaurentPoly,
    ) -> bool {
        self.record(label, params, lhs == rhs, || {
            (RenderedValue::poly(lhs), RenderedValue::poly(rhs))
        })
    }

    pub fn check_rational(
        &mut self,
        label: &str,
        params: &[(&str, i64)],
        lhs: &RationalQ,
        rhs: &RationalQ,
    ) -> bool {
        self.record(label, params, lhs == rhs, || {
            (RenderedValue::rational(lhs), RenderedValue::rational(rhs))
        })
    }

    /// Compares two truncated series on their shared window.
    pub fn check_series(
        &mut self,
        label: &str,
        params: &[(&str, i64)],
        lhs: &TruncatedLaurentSeries,
        rhs: &TruncatedLaurentSeries,
    ) -> bool {
        let w = lhs.shared_window(rhs);
        self.observe_window(w);
        let ok = lhs.first_disagreement(rhs).is_none();
        self.record(label, params, ok, || {
            (
                RenderedValue::series(&lhs.truncate(w.cutoff)),
                RenderedValue::series(&rhs.truncate(w.cutoff)),
            )
        })
    }

    /// Records an equality whose two sides are computed elsewhere; `render`
    /// is only invoked on failure.
    pub fn record(
        &mut self,
        label: &str,
        params: &[(&str, i64)],
        ok: bool,
        render: impl FnOnce() -> (RenderedValue, RenderedValue),
    ) -> bool {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                let (lhs, rhs) = render();
                self.counterexamples.push(Counterexample {
                    label: label.to_string(),
                    params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
                    lhs,
                    rhs,
                });
            }
        }
        ok
    }

    pub fn observe_window(&mut self, w: SeriesWindow) {
        self.window = Some(narrower(self.window, w));
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn finish(self) -> VerificationReport {
        let weak_window = self.window.is_some_and(|w| w.len() < WEAK_WINDOW);
        VerificationReport {
            identity_id: self.identity_id,
            grid: self.grid,
            status: if self.failures == 0 {
                Status::Pass
            } else {
                Status::Fail
            },
            checks: self.checks,
            failures: self.failures,
            counterexamples: self.counterexamples,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
            window: self.window,
            weak_window,
            notes: self.notes,
        }
    }
}
