//! Finite shelves, racks, groups and rack-module actions given by tables.
//!
//! Elements are `0..size`; every table is dense and row-major, row `x`
//! column `y` holding `x ▷ y` (or `x · y` for groups).

mod action;
mod group;
mod json;
mod shelf;

use serde::{Deserialize, Serialize};

pub use action::RackModuleAction;
pub use group::{augmented_rack, conj_rack, FiniteGroup};
pub use json::{parse_structure, Structure, StructureFile};
pub use shelf::{FiniteRack, FiniteShelf};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StructureKind {
    Shelf,
    Rack,
    PointedRack,
    Group,
    ModuleAction,
}

/// The first violated axiom, with the elements exhibiting it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: String,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub kind: StructureKind,
    pub violation: Option<Violation>,
}

impl ValidationReport {
    fn pass(kind: StructureKind) -> Self {
        Self { kind, violation: None }
    }

    fn fail(kind: StructureKind, axiom: &str, witness: Vec<usize>) -> Self {
        Self { kind, violation: Some(Violation { axiom: axiom.to_string(), witness }) }
    }

    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }

    pub(crate) fn into_result(self) -> Result<()> {
        match self.violation {
            None => Ok(()),
            Some(v) => Err(Error::InvalidStructure(format!("{:?}: {} fails at {:?}", self.kind, v.axiom, v.witness))),
        }
    }
}

/// Check that `table` is an `n x n` table with entries in `0..n`.
pub(crate) fn check_square(table: &[Vec<usize>]) -> Result<usize> {
    let n = table.len();
    for (r, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Dimension(format!("row {r} has {} entries, expected {n}", row.len())));
        }
        if let Some(c) = row.iter().position(|&v| v >= n) {
            return Err(Error::OutOfRange(format!("entry ({r}, {c}) = {} is not below {n}", row[c])));
        }
    }
    Ok(n)
}

/// Validate a binary operation table as the given kind of structure.
///
/// Errors are reserved for malformed tables; a well-formed table that fails
/// an axiom yields a report carrying the witness.
pub fn validate(table: &[Vec<usize>], unit: Option<usize>, kind: StructureKind) -> Result<ValidationReport> {
    let n = check_square(table)?;
    if let Some(u) = unit {
        if u >= n {
            return Err(Error::OutOfRange(format!("unit {u} is not below {n}")));
        }
    }
    let op = |x: usize, y: usize| table[x][y];
    match kind {
        StructureKind::Shelf | StructureKind::Rack | StructureKind::PointedRack => {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        if op(x, op(y, z)) != op(op(x, y), op(x, z)) {
                            return Ok(ValidationReport::fail(kind, "self-distributivity", vec![x, y, z]));
                        }
                    }
                }
            }
            if kind != StructureKind::Shelf {
                for x in 0..n {
                    let mut seen = vec![None; n];
                    for y in 0..n {
                        if let Some(prev) = seen[op(x, y)] {
                            return Ok(ValidationReport::fail(kind, "bijective left translation", vec![x, prev, y]));
                        }
                        seen[op(x, y)] = Some(y);
                    }
                }
            }
            if kind == StructureKind::PointedRack {
                let Some(u) = unit else {
                    return Ok(ValidationReport::fail(kind, "unit present", vec![]));
                };
                for x in 0..n {
                    if op(u, x) != x {
                        return Ok(ValidationReport::fail(kind, "unit acts trivially (1 ▷ x = x)", vec![x]));
                    }
                    if op(x, u) != u {
                        return Ok(ValidationReport::fail(kind, "unit is fixed (x ▷ 1 = 1)", vec![x]));
                    }
                }
            }
            Ok(ValidationReport::pass(kind))
        }
        StructureKind::Group => Ok(group::validate_group_table(table, n)),
        StructureKind::ModuleAction => Err(Error::InvalidStructure(
            "module actions are validated with RackModuleAction::validate".into(),
        )),
    }
}
