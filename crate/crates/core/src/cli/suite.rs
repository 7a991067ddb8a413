use std::collections::BTreeMap;

use crate::agcore::{
    telescoping_grid, verify_ag_polynomial, verify_connection, verify_main_theorem,
    verify_q_pascal, verify_recurrences,
};
use crate::error::Result;
use crate::report::VerificationReport;
use crate::{paths, rrpoly, santos, series};

use super::config::SuiteConfig;

/// Identity families selectable on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Family {
    Rr,
    Paths,
    Ag,
    Gis,
    Santos,
    Series,
    All,
}

impl Family {
    pub const EACH: [Family; 6] = [
        Family::Rr,
        Family::Paths,
        Family::Ag,
        Family::Gis,
        Family::Series,
        Family::Santos,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Rr => "rr",
            Family::Paths => "paths",
            Family::Ag => "ag",
            Family::Gis => "gis",
            Family::Santos => "santos",
            Family::Series => "series",
            Family::All => "all",
        }
    }

    pub fn parse(name: &str) -> Option<Family> {
        [Family::All]
            .into_iter()
            .chain(Self::EACH)
            .find(|f| f.name() == name)
    }
}

/// `L` cap for `nu >= 3` unless `--L-max` is given.
pub const NU3_L_MAX: i64 = 7;

/// Runs every check of `family` in a fixed order.
pub fn run_family(family: Family, cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    match family {
        Family::All => {
            let mut out = Vec::new();
            for f in Family::EACH {
                out.extend(run_family(f, cfg)?);
            }
            Ok(out)
        }
        Family::Rr => {
            let l = cfg.l_max_or(30);
            Ok(vec![
                rrpoly::verify_representations(l),
                rrpoly::verify_rr_recurrence(-10, l),
                rrpoly::verify_gis_finite(l, cfg.m_max_or(10)),
            ])
        }
        Family::Paths => {
            let l = cfg.l_max_or(16);
            Ok(vec![
                paths::verify_path_lemma(l),
                paths::verify_decompositions(l),
                rrpoly::verify_splitting_grid(l),
                rrpoly::fibonacci_checks(cfg.l_max_or(30).max(1))?,
            ])
        }
        Family::Ag => run_ag(cfg),
        Family::Gis => {
            let cutoff = cfg.cutoff();
            let mut out = vec![series::gis_series_check(
                cfg.m_max_or(6),
                cfg.m_max_or(6),
                cutoff,
            )?];
            let mut parts = Vec::new();
            for nu in 1..=cfg.nu_max().min(2) {
                for s in 1..=nu + 1 {
                    parts.push(series::ag_variant_series_check(
                        nu,
                        s,
                        cfg.m_max_or(4),
                        cutoff,
                    )?);
                }
            }
            out.push(merged("eq-3.21/3.22", parts));
            Ok(out)
        }
        Family::Series => {
            let cutoff = cfg.cutoff();
            let rr = vec![
                series::rr_series_check(0, cutoff)?,
                series::rr_series_check(1, cutoff)?,
            ];
            let ag = (1..=cfg.nu_max())
                .map(|nu| series::ag_series_check(nu, cutoff))
                .collect::<Result<Vec<_>>>()?;
            Ok(vec![merged("eq-1.1", rr), merged("eq-3.1", ag)])
        }
        Family::Santos => {
            let l = cfg.l_max_or(16);
            Ok(vec![
                santos::verify_p1(l, cfg.m_max_or(6)),
                santos::verify_p2(l, -6..=cfg.m_max_or(8)),
                santos::verify_reflection(6),
            ])
        }
    }
}

fn run_ag(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let nu_l = |nu: i64| {
        if nu >= 3 {
            cfg.l_max.unwrap_or(NU3_L_MAX)
        } else {
            cfg.l_max_or(10)
        }
    };
    let mut by_id: BTreeMap<&str, Vec<VerificationReport>> = BTreeMap::new();
    for nu in 1..=cfg.nu_max() {
        let l = nu_l(nu);
        by_id
            .entry("eq-3.9")
            .or_default()
            .push(verify_ag_polynomial(nu, l)?);
        by_id
            .entry("eq-3.10/3.13")
            .or_default()
            .push(verify_recurrences(nu, l, &[0, 1, 2, 5])?);
        by_id
            .entry("eq-3.19/3.20")
            .or_default()
            .push(verify_main_theorem(nu, l)?);
    }
    let tele_nus: Vec<i64> = (2..=cfg.nu_max()).collect();
    let mut out = vec![
        merged("eq-3.9", by_id.remove("eq-3.9").unwrap_or_default()),
        merged(
            "eq-3.10/3.13",
            by_id.remove("eq-3.10/3.13").unwrap_or_default(),
        ),
        verify_connection(cfg.nu_max().min(2), 8)?,
        merged(
            "eq-3.19/3.20",
            by_id.remove("eq-3.19/3.20").unwrap_or_default(),
        ),
        verify_q_pascal(20, 20)?,
    ];
    if !tele_nus.is_empty() {
        out.push(telescoping_grid(&tele_nus, cfg.l_max_or(8), &[0, 2])?);
    }
    Ok(out)
}

fn merged(id: &str, parts: Vec<VerificationReport>) -> VerificationReport {
    if parts.len() == 1 {
        return parts.into_iter().next().expect("one part");
    }
    VerificationReport::merge(id, parts)
}
