//! Size thresholds for the exhaustive procedures.

use crate::error::{Error, Result};
use serde::Serialize;

/// Environment variable that can override the default thresholds, e.g.
/// `MATROID_FORGE_THRESHOLDS=axioms=8,circuits=16,brute=20,theta=14,restarts=64`.
pub const THRESHOLDS_ENV: &str = "MATROID_FORGE_THRESHOLDS";

/// Ground-size limits for operations that enumerate subsets exhaustively.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Thresholds {
    /// Axiom checking and explicit-matroid duals.
    pub axioms: usize,
    /// Circuit listing and uniform classification.
    pub circuits: usize,
    /// Brute-force maximum common independent set.
    pub brute_force: usize,
    /// Exhaustive candidate scan when maximizing the spanned part set;
    /// larger grounds fall back to the randomized-extension heuristic.
    pub theta: usize,
    /// Restart budget for that heuristic.
    pub theta_restarts: u32,
    /// Entry cap for the per-matroid rank cache.
    pub rank_cache_cap: usize,
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            axioms: 8,
            circuits: 16,
            brute_force: 20,
            theta: 14,
            theta_restarts: 64,
            rank_cache_cap: 1 << 20,
        }
    }
}

impl Thresholds {
    /// Defaults adjusted by the [`THRESHOLDS_ENV`] variable when set.
    pub fn from_env() -> Result<Thresholds> {
        let mut out = Thresholds::default();
        if let Ok(spec) = std::env::var(THRESHOLDS_ENV) {
            out.apply_overrides(&spec)?;
        }
        Ok(out)
    }

    /// Applies a comma-separated `key=value` override list.
    pub fn apply_overrides(&mut self, spec: &str) -> Result<()> {
        for item in spec.split(',') {
            let item = item.trim();
            if item.is_empty() {
                continue;
            }
            let (key, value) = item.split_once('=').ok_or_else(|| {
                Error::InvalidArgument(format!("threshold override `{item}` is not key=value"))
            })?;
            let parse = |v: &str| -> Result<usize> {
                v.trim().parse().map_err(|_| {
                    Error::InvalidArgument(format!("threshold value `{v}` is not a number"))
                })
            };
            match key.trim() {
                "axioms" => self.axioms = parse(value)?,
                "circuits" => self.circuits = parse(value)?,
                "brute" | "brute_force" => self.brute_force = parse(value)?,
                "theta" => self.theta = parse(value)?,
                "restarts" | "theta_restarts" => self.theta_restarts = parse(value)? as u32,
                "cache" | "rank_cache" => self.rank_cache_cap = parse(value)?,
                other => {
                    return Err(Error::InvalidArgument(format!(
                        "unknown threshold key `{other}`"
                    )))
                }
            }
        }
        Ok(())
    }
}
