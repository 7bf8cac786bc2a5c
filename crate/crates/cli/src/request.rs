//! Requests: group, Levi and generator grammars, and the presets file.

use std::collections::BTreeMap;
use std::path::Path;

use cembed_core::{NodeSet, RootSystem, SimpleType};
use clap::ValueEnum;
use serde::{Deserialize, Serialize};

/// Environment variable naming the presets file.
pub const PRESETS_ENV: &str = "CEMBED_PRESETS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Orbits,
    Modality,
    Finite,
    Smooth,
    Tangent,
    General,
    Rootinfo,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Table,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Request {
    pub command: Command,
    pub group: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levi: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<Vec<i64>>,
    #[serde(default)]
    pub format: Format,
    #[serde(default)]
    pub crosscheck: bool,
}

/// Parses `E8`, `A3xA1`, `b2 x g2`.
pub fn parse_group(spec: &str) -> Result<RootSystem, String> {
    let mut parts = Vec::new();
    for raw in spec.split(['x', 'X', '×']) {
        let part = raw.trim();
        let mut chars = part.chars();
        let letter = chars.next().ok_or_else(|| format!("empty component in group `{spec}`"))?;
        let kind = SimpleType::from_letter(letter.to_ascii_uppercase())
            .ok_or_else(|| format!("unknown type letter `{letter}` in `{spec}`"))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| format!("bad rank in component `{part}` of `{spec}`"))?;
        parts.push((kind, rank));
    }
    RootSystem::new(&parts).map_err(|e| e.to_string())
}

/// Parses `empty`, `full` or a comma list of 1-based nodes numbered across
/// components in order.
pub fn parse_levi(spec: &str, sys: &RootSystem) -> Result<NodeSet, String> {
    match spec.trim() {
        "empty" | "" => return Ok(NodeSet::empty()),
        "full" => return Ok(sys.all_nodes()),
        _ => {}
    }
    let mut set = NodeSet::empty();
    for tok in spec.split(',') {
        let tok = tok.trim();
        let node: usize = tok.parse().map_err(|_| format!("bad Levi node `{tok}`"))?;
        if node == 0 || node > sys.rank() {
            return Err(format!("Levi node {node} out of range 1..={}", sys.rank()));
        }
        set.insert(node - 1);
    }
    Ok(set)
}

/// Parses fundamental-basis coordinates such as `1,0,2`.
pub fn parse_weight(spec: &str) -> Result<Vec<i64>, String> {
    spec.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| format!("bad weight coordinate `{}`", t.trim())))
        .collect()
}

pub fn load_preset(path: &Path, name: &str) -> Result<Request, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read presets file {}: {e}", path.display()))?;
    let mut presets: BTreeMap<String, Request> =
        serde_json::from_str(&text).map_err(|e| format!("bad presets file {}: {e}", path.display()))?;
    presets.remove(name).ok_or_else(|| format!("no preset named `{name}` in {}", path.display()))
}
