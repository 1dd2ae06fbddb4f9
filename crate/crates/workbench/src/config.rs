//! Workbench configuration, loadable from a JSON file and overridable by
//! command-line flags.

use crate::io::WorkbenchError;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct WorkbenchConfig {
    /// Field discriminant for radical scalars; 1 means plain rationals.
    pub field_d: u64,
    /// Cap on the family index for the inductive builders.
    pub n_cap: usize,
    /// Cap on axis-orbit closure size.
    pub closure_budget: usize,
    /// Parallelism degree of the suite runner.
    pub jobs: usize,
    /// Output format: json, csv or text.
    pub format: String,
}

impl Default for WorkbenchConfig {
    fn default() -> Self {
        WorkbenchConfig {
            field_d: 1,
            n_cap: griess_models::DEFAULT_N_CAP,
            closure_budget: griess_groups::DEFAULT_CLOSURE_BUDGET,
            jobs: 1,
            format: "json".into(),
        }
    }
}

impl WorkbenchConfig {
    pub fn validate(&self) -> Result<(), WorkbenchError> {
        if self.n_cap == 0 || self.closure_budget == 0 || self.jobs == 0 {
            return Err(WorkbenchError::Usage(
                "all configured caps must be positive".into(),
            ));
        }
        if !["json", "csv", "text"].contains(&self.format.as_str()) {
            return Err(WorkbenchError::Usage(format!(
                "unknown format {}",
                self.format
            )));
        }
        Ok(())
    }

    pub fn load(path: &std::path::Path) -> Result<Self, WorkbenchError> {
        let text = std::fs::read_to_string(path)?;
        let cfg: WorkbenchConfig = serde_json::from_str(&text)
            .map_err(|e| WorkbenchError::SchemaViolation(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }
}
