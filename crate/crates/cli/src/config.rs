//! Run configuration: defaults, then the file named by
//! `WREATH_CENTERS_CONFIG`, then command-line flags.

use std::path::Path;

use serde::Deserialize;

use crate::error::CliError;

pub const CONFIG_ENV: &str = "WREATH_CENTERS_CONFIG";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Latex,
}

/// Every field optional; fields left out keep their defaults.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub group: Option<String>,
    pub max_class_size: Option<u64>,
    pub max_n: Option<usize>,
    pub max_pair_size: Option<usize>,
    pub tolerance: Option<f64>,
    pub format: Option<Format>,
    pub workers: Option<usize>,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    /// Built-in spec (`trivial`, `cyclic:k`, `sym:k`, `dihedral:k`) or a path
    /// to a JSON group file.
    pub group: String,
    /// Largest class streamed by direct center computations.
    pub max_class_size: u64,
    pub max_n: usize,
    /// Largest `|Λ| + |Δ|` accepted by universal-algebra commands.
    pub max_pair_size: usize,
    pub tolerance: f64,
    pub format: Format,
    /// Worker threads; 0 lets rayon decide.
    pub workers: usize,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            group: "trivial".into(),
            max_class_size: wreath_core::center::DEFAULT_CLASS_CAP,
            max_n: 8,
            max_pair_size: 8,
            tolerance: 1e-6,
            format: Format::Json,
            workers: 0,
            seed: 0,
        }
    }
}

impl RunConfig {
    pub fn apply(&mut self, f: ConfigFile) {
        if let Some(v) = f.group {
            self.group = v;
        }
        if let Some(v) = f.max_class_size {
            self.max_class_size = v;
        }
        if let Some(v) = f.max_n {
            self.max_n = v;
        }
        if let Some(v) = f.max_pair_size {
            self.max_pair_size = v;
        }
        if let Some(v) = f.tolerance {
            self.tolerance = v;
        }
        if let Some(v) = f.format {
            self.format = v;
        }
        if let Some(v) = f.workers {
            self.workers = v;
        }
        if let Some(v) = f.seed {
            self.seed = v;
        }
    }

    pub fn from_file(path: &Path) -> Result<ConfigFile, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.max_class_size == 0 || self.max_n == 0 || self.max_pair_size == 0 {
            return Err(CliError::Config("caps must be positive".into()));
        }
        if !(self.tolerance > 0.0 && self.tolerance <= 1e-3) {
            return Err(CliError::Config(format!("tolerance {} outside (0, 1e-3]", self.tolerance)));
        }
        Ok(())
    }
}
