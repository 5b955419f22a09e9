use serde::{Deserialize, Serialize};

use super::action::RackModuleAction;
use super::group::FiniteGroup;
use super::shelf::FiniteRack;
use crate::error::{Error, Result};

/// On-disk form of a rack or group.
///
/// ```json
/// { "schema": 1, "kind": "rack", "size": 2, "table": [[0, 1], [0, 1]], "unit": 0 }
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub kind: String,
    pub size: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<RackModuleAction>,
}

#[derive(Clone, Debug)]
pub enum Structure {
    Rack { rack: FiniteRack, action: Option<RackModuleAction> },
    Group(FiniteGroup),
}

impl Structure {
    pub fn name(&self) -> &str {
        match self {
            Structure::Rack { rack, .. } => rack.name(),
            Structure::Group(g) => g.name(),
        }
    }
}

impl StructureFile {
    pub fn from_rack(rack: &FiniteRack) -> Self {
        Self {
            schema: Some(1),
            name: Some(rack.name().to_string()),
            kind: "rack".into(),
            size: rack.size(),
            table: rack.table(),
            unit: rack.unit(),
            labels: Some(rack.labels().to_vec()),
            action: None,
        }
    }

    pub fn from_group(g: &FiniteGroup) -> Self {
        Self {
            schema: Some(1),
            name: Some(g.name().to_string()),
            kind: "group".into(),
            size: g.size(),
            table: g.table(),
            unit: None,
            labels: Some(g.labels().to_vec()),
            action: None,
        }
    }

    pub fn build(self) -> Result<Structure> {
        if let Some(s) = self.schema {
            if s != 1 {
                return Err(Error::Parse(format!("unsupported schema version {s}")));
            }
        }
        if self.table.len() != self.size {
            return Err(Error::Dimension(format!("size is {} but the table has {} rows", self.size, self.table.len())));
        }
        let name = self.name.unwrap_or_else(|| self.kind.clone());
        match self.kind.as_str() {
            "rack" => {
                let mut rack = FiniteRack::new(self.table, self.unit)?.with_name(name);
                if let Some(labels) = self.labels {
                    rack = rack.with_labels(labels)?;
                }
                if let Some(action) = &self.action {
                    action.validate(&rack)?.into_result()?;
                }
                Ok(Structure::Rack { rack, action: self.action })
            }
            "group" => {
                if self.action.is_some() {
                    return Err(Error::Parse("groups take no action field".into()));
                }
                let mut g = FiniteGroup::new(self.table)?.with_name(name);
                if let Some(u) = self.unit {
                    if u != g.identity() {
                        return Err(Error::InvalidStructure(format!("unit {u} is not the identity {}", g.identity())));
                    }
                }
                if let Some(labels) = self.labels {
                    g = g.with_labels(labels)?;
                }
                Ok(Structure::Group(g))
            }
            other => Err(Error::Parse(format!("unknown kind `{other}` (expected rack or group)"))),
        }
    }
}

/// Parse and validate a JSON structure description.
pub fn parse_structure(text: &str) -> Result<Structure> {
    let file: StructureFile = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    file.build()
}
