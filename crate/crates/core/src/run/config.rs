use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::RunError;

pub const DESK_MAX_K: i64 = 200;
pub const DESK_MAX_N_ARITH: i64 = 100;
pub const DESK_MAX_N_SYMBOLIC: i64 = 10;
pub const DESK_MAX_VERTICES: usize = 8;
/// Realization graphs come from the catalog or the gadget construction and
/// may be larger than configured graphs.
pub const DESK_MAX_REALIZE_VERTICES: usize = 12;
const DESK_MAX_GROUP_ORDER: usize = 48;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    DSquared,
    Arithmetic,
    Dimension,
    RigidEndos,
    GraphEndos,
    Elliptic,
    Tilde,
    Properties,
    Realize,
    Models,
}

impl Check {
    pub const ALL: [Check; 10] = [
        Check::DSquared,
        Check::Arithmetic,
        Check::Dimension,
        Check::RigidEndos,
        Check::GraphEndos,
        Check::Elliptic,
        Check::Tilde,
        Check::Properties,
        Check::Realize,
        Check::Models,
    ];
}

/// Parameters of a `verify-all` run. Graphs are builtin names (`P3`, `K3`,
/// `asym6`, ...) or paths to graph JSON files.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub k_max: i64,
    pub n_max: i64,
    pub mk_values: Vec<i64>,
    pub n_values: Vec<i64>,
    pub graphs: Vec<String>,
    pub rigid_solve: Vec<i64>,
    pub endo_graphs: Vec<String>,
    pub elliptic_graphs: Vec<String>,
    pub dim_n_max: i64,
    pub dim_v_max: usize,
    pub tilde_vertices: Vec<usize>,
    pub realize: Vec<String>,
    pub models: Vec<PathBuf>,
    pub checks: Vec<Check>,
    pub seed: u64,
    pub property_cases: usize,
    pub output: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        let names = |v: &[&str]| v.iter().map(|s| s.to_string()).collect();
        RunConfig {
            k_max: DESK_MAX_K,
            n_max: DESK_MAX_N_ARITH,
            mk_values: vec![6, 8, 10, 12],
            n_values: vec![1],
            graphs: names(&["P3", "K3", "C4", "asym6"]),
            rigid_solve: vec![6, 8],
            endo_graphs: names(&["P3", "K3", "asym6"]),
            elliptic_graphs: names(&["P3", "K3"]),
            dim_n_max: DESK_MAX_N_SYMBOLIC,
            dim_v_max: DESK_MAX_VERTICES,
            tilde_vertices: vec![2, 3],
            realize: names(&["trivial", "Z2", "Z3", "S3"]),
            models: Vec::new(),
            checks: Check::ALL.to_vec(),
            seed: 0x5eed,
            property_cases: 1000,
            output: None,
        }
    }
}

impl RunConfig {
    /// Reads TOML or JSON, chosen by extension (TOML when unknown).
    pub fn from_path(path: &Path) -> Result<Self, RunError> {
        let text = std::fs::read_to_string(path).map_err(|e| RunError::Io(format!("{}: {e}", path.display())))?;
        let json = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"));
        let cfg: RunConfig = if json {
            serde_json::from_str(&text).map_err(|e| RunError::Config(format!("{}: {e}", path.display())))?
        } else {
            toml::from_str(&text).map_err(|e| RunError::Config(format!("{}: {e}", path.display())))?
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn enabled(&self, c: Check) -> bool {
        self.checks.contains(&c)
    }

    /// Range and desk-scale checks that need no file access.
    pub fn validate(&self) -> Result<(), RunError> {
        let bad = |msg: String| Err(RunError::Config(msg));
        let k_ok = |k: i64| k > 4 && k % 2 == 0 && k <= DESK_MAX_K;
        if !(6..=DESK_MAX_K).contains(&self.k_max) {
            return bad(format!("k_max = {} must lie in [6, {DESK_MAX_K}]", self.k_max));
        }
        if let Some(k) = self.mk_values.iter().chain(&self.rigid_solve).find(|&&k| !k_ok(k)) {
            return bad(format!("k = {k} must be even, greater than 4 and at most {DESK_MAX_K}"));
        }
        if !(1..=DESK_MAX_N_ARITH).contains(&self.n_max) {
            return bad(format!("n_max = {} must lie in [1, {DESK_MAX_N_ARITH}]", self.n_max));
        }
        if let Some(n) = self.n_values.iter().find(|&&n| !(1..=DESK_MAX_N_SYMBOLIC).contains(&n)) {
            return bad(format!("n = {n} must lie in [1, {DESK_MAX_N_SYMBOLIC}] for symbolic checks"));
        }
        if !(1..=DESK_MAX_N_SYMBOLIC).contains(&self.dim_n_max) {
            return bad(format!("dim_n_max = {} must lie in [1, {DESK_MAX_N_SYMBOLIC}]", self.dim_n_max));
        }
        if !(2..=DESK_MAX_VERTICES).contains(&self.dim_v_max) {
            return bad(format!("dim_v_max = {} must lie in [2, {DESK_MAX_VERTICES}]", self.dim_v_max));
        }
        if let Some(v) = self.tilde_vertices.iter().find(|&&v| !(2..=DESK_MAX_VERTICES).contains(&v)) {
            return bad(format!("tilde graph on {v} vertices is outside [2, {DESK_MAX_VERTICES}]"));
        }
        if self.property_cases == 0 {
            return bad("property_cases must be positive".into());
        }
        for name in &self.realize {
            let g = crate::graphs::FiniteGroup::preset(name).map_err(|e| RunError::Config(e.to_string()))?;
            if g.order() > DESK_MAX_GROUP_ORDER {
                return bad(format!("group {name} has order {} > {DESK_MAX_GROUP_ORDER}", g.order()));
            }
        }
        Ok(())
    }

    /// Rejects graphs outside the desk scale once they are loaded.
    pub fn check_graph_size(&self, name: &str, vertices: usize) -> Result<(), RunError> {
        if vertices > DESK_MAX_VERTICES {
            return Err(RunError::Config(format!("graph {name} has {vertices} vertices > {DESK_MAX_VERTICES}")));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        RunConfig::default().validate().unwrap();
    }

    #[test]
    fn odd_k_is_a_config_error() {
        let cfg = RunConfig { mk_values: vec![7], ..RunConfig::default() };
        assert!(matches!(cfg.validate(), Err(RunError::Config(_))));
        let cfg: RunConfig = toml::from_str("k_max = 50\nchecks = [\"arithmetic\"]").unwrap();
        assert_eq!(cfg.k_max, 50);
        assert_eq!(cfg.checks, vec![Check::Arithmetic]);
        assert!(toml::from_str::<RunConfig>("bogus = 1").is_err());
    }
}
