//! Validated run configuration, embedded in every report.

use std::collections::BTreeMap;

use qgrass_core::qarith::{char_of, Mode};
use qgrass_core::superspaces::{Family, SpaceSpec};
use serde::Serialize;

use crate::args::{Common, Format};
use crate::CliError;

#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    pub m: usize,
    pub n: usize,
    pub q: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_max: Option<i64>,
    /// Command-specific flags.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub options: BTreeMap<String, String>,
    pub format: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out: Option<String>,
    #[serde(skip)]
    pub mode: Option<Mode>,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

impl RunConfig {
    /// Checks the flag combination and builds the scalar mode.
    pub fn new(command: &str, family: Option<&str>, c: &Common, default_format: Format) -> Result<Self, CliError> {
        let root = match (c.q.as_deref(), c.d) {
            (Some("generic"), Some(_)) => return Err(usage("--d is only meaningful with --q root")),
            (Some("root"), None) => return Err(usage("--q root needs --d")),
            (_, Some(d)) => Some(d),
            _ => None,
        };
        let (mode, ell) = match root {
            None => {
                if c.ell.is_some() {
                    return Err(usage("--ell needs a root of unity (--d)"));
                }
                (Mode::Generic, None)
            }
            Some(d) => {
                let mode = Mode::root_of_unity(d).map_err(|e| usage(e.to_string()))?;
                let prof = char_of(&mode).map_err(|e| usage(e.to_string()))?;
                if let Some(l) = c.ell {
                    if l != prof.ell {
                        return Err(usage(format!("--ell {l} disagrees with d = {d}, whose characteristic is {}", prof.ell)));
                    }
                }
                (mode, Some(prof.ell))
            }
        };
        if let Some(t) = c.t_max {
            if t < 0 {
                return Err(usage("--t-max must be non-negative"));
            }
        }
        Ok(Self {
            command: command.into(),
            family: family.map(Into::into),
            m: c.m,
            n: c.n,
            q: if root.is_some() { "root" } else { "generic" }.into(),
            d: root,
            ell,
            t_max: c.t_max,
            options: BTreeMap::new(),
            format: c.format.unwrap_or(default_format).name().into(),
            out: c.out.as_ref().map(|p| p.display().to_string()),
            mode: Some(mode),
        })
    }

    pub fn mode(&self) -> &Mode {
        self.mode.as_ref().expect("set by RunConfig::new")
    }

    pub fn format(&self) -> Format {
        if self.format == "csv" {
            Format::Csv
        } else {
            Format::Json
        }
    }

    /// Restricted objects need a root of unity with ell at least 3.
    pub fn require_restricted(&self, what: &str) -> Result<(), CliError> {
        match self.ell {
            None => Err(usage(format!("{what} requires a root of unity (--d)"))),
            Some(l) if l < 3 => Err(usage(format!("{what} requires ell >= 3, got {l}"))),
            Some(_) => Ok(()),
        }
    }

    /// The space named by `--family`, `--m`, `--n`.
    pub fn space(&self) -> Result<SpaceSpec, CliError> {
        let name = self.family.as_deref().unwrap_or("omega");
        let family = Family::parse(name).map_err(|e| usage(e.to_string()))?;
        if family.is_restricted() {
            self.require_restricted(name)?;
        }
        SpaceSpec::new(family, self.m, self.n, self.mode().clone()).map_err(|e| usage(e.to_string()))
    }

    /// Flags reproducing the space and scalar mode, for replay commands.
    pub fn space_flags(&self) -> Vec<String> {
        let mut v = vec!["--family".into(), self.family.clone().unwrap_or_else(|| "omega".into())];
        v.extend(["--m".into(), self.m.to_string(), "--n".into(), self.n.to_string()]);
        if let Some(d) = self.d {
            v.extend(["--d".into(), d.to_string()]);
        }
        v
    }
}
