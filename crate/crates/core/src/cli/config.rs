use std::collections::BTreeMap;
use std::path::Path;

use crate::error::{Error, Result};

/// Output format for `verify`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// Grid settings for a suite run. `None` means "use each check's default".
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteConfig {
    pub l_max: Option<i64>,
    pub m_max: Option<i64>,
    pub nu: Option<i64>,
    pub cutoff: Option<i64>,
    pub nu3: bool,
    pub format: Format,
    pub jobs: Option<usize>,
}

pub const DEFAULT_NU: i64 = 2;
pub const DEFAULT_CUTOFF: i64 = 50;

impl SuiteConfig {
    pub fn l_max_or(&self, default: i64) -> i64 {
        self.l_max.unwrap_or(default)
    }

    pub fn m_max_or(&self, default: i64) -> i64 {
        self.m_max.unwrap_or(default)
    }

    pub fn cutoff(&self) -> i64 {
        self.cutoff.unwrap_or(DEFAULT_CUTOFF)
    }

    /// Largest `nu` to run: `--nu`, else 3 with `--nu3`, else 2.
    pub fn nu_max(&self) -> i64 {
        self.nu.unwrap_or(if self.nu3 { 3 } else { DEFAULT_NU })
    }

    /// Fills every unset field from `key=value` lines. Blank lines and lines
    /// starting with `#` are skipped.
    pub fn merge_file_text(&mut self, text: &str) -> Result<()> {
        let mut seen = BTreeMap::new();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| {
                Error::Parse(format!("config line {}: expected key=value", no + 1))
            })?;
            seen.insert(k.trim().to_string(), (no + 1, v.trim().to_string()));
        }
        for (key, (no, value)) in seen {
            let int = || {
                value.parse::<i64>().map_err(|_| {
                    Error::Parse(format!("config line {no}: {key} expects an integer"))
                })
            };
            match key.as_str() {
                "L-max" => self.l_max = self.l_max.or(Some(int()?)),
                "M-max" => self.m_max = self.m_max.or(Some(int()?)),
                "nu" => self.nu = self.nu.or(Some(int()?)),
                "cutoff" => self.cutoff = self.cutoff.or(Some(int()?)),
                "jobs" => {
                    let n = usize::try_from(int()?).map_err(|_| {
                        Error::Parse(format!("config line {no}: jobs must be positive"))
                    })?;
                    self.jobs = self.jobs.or(Some(n));
                }
                "nu3" => {
                    self.nu3 |= match value.as_str() {
                        "true" | "1" | "yes" => true,
                        "false" | "0" | "no" => false,
                        _ => {
                            return Err(Error::Parse(format!(
                                "config line {no}: nu3 expects a boolean"
                            )))
                        }
                    }
                }
                "format" => {
                    // only applies when the flag kept its default
                    if self.format == Format::Text {
                        self.format = match value.as_str() {
                            "text" => Format::Text,
                            "json" => Format::Json,
                            _ => {
                                return Err(Error::Parse(format!(
                                    "config line {no}: unknown format {value}"
                                )))
                            }
                        }
                    }
                }
                _ => return Err(Error::Parse(format!("config line {no}: unknown key {key}"))),
            }
        }
        Ok(())
    }

    pub fn merge_file(&mut self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
        self.merge_file_text(&text)
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(l) = self.l_max {
            if l < 0 {
                return Err(Error::Parse(format!("L-max must be nonnegative, got {l}")));
            }
        }
        if let Some(m) = self.m_max {
            if m < 0 {
                return Err(Error::Parse(format!("M-max must be nonnegative, got {m}")));
            }
        }
        if self.nu_max() < 1 {
            return Err(Error::Parse(format!(
                "nu must be positive, got {}",
                self.nu_max()
            )));
        }
        if self.cutoff() < 1 {
            return Err(Error::Parse(format!(
                "cutoff must be positive, got {}",
                self.cutoff()
            )));
        }
        if self.jobs == Some(0) {
            return Err(Error::Parse("jobs must be positive".to_string()));
        }
        Ok(())
    }
}
