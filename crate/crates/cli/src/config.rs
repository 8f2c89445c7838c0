//! Optional TOML configuration: defaults for group, labeling, seed and the
//! reduced-word search budget.

use std::path::Path;

use serde::Deserialize;

use crate::error::CliError;

#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub group: Option<String>,
    pub labeling: Option<String>,
    pub seed: Option<u64>,
    pub bfs_budget: Option<usize>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Usage(format!("bad config: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }
}
