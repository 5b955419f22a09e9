use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::shelf::FiniteRack;
use super::{StructureKind, ValidationReport};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// A rack module structure on `Z^k` (`modulus == 0`) or `(Z/m)^k`, one
/// matrix per rack element: `x · a = M_x a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RackModuleAction {
    pub modulus: u64,
    pub dim: usize,
    pub matrices: Vec<Vec<Vec<i64>>>,
}

impl RackModuleAction {
    pub fn trivial(size: usize, dim: usize, modulus: u64) -> Self {
        let id: Vec<Vec<i64>> = (0..dim).map(|i| (0..dim).map(|j| i64::from(i == j)).collect()).collect();
        Self { modulus, dim, matrices: vec![id; size] }
    }

    pub fn matrix(&self, x: usize) -> Matrix<i64> {
        Matrix::from_rows(self.matrices[x].clone()).expect("square action matrix")
    }

    fn reduce(&self, v: i64) -> i64 {
        if self.modulus == 0 {
            v
        } else {
            v.mod_floor(&(self.modulus as i64))
        }
    }

    fn congruent(&self, a: &Matrix<i64>, b: &Matrix<i64>) -> bool {
        a.entries().iter().zip(b.entries()).all(|(x, y)| self.reduce(*x) == self.reduce(*y))
    }

    /// `(x · a)` for a coefficient vector `a`.
    pub fn apply(&self, x: usize, a: &[i64]) -> Vec<i64> {
        self.matrices[x]
            .iter()
            .map(|row| self.reduce(row.iter().zip(a).map(|(m, v)| m * v).sum()))
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        let id = Matrix::<i64>::identity(self.dim);
        (0..self.matrices.len()).all(|x| self.congruent(&self.matrix(x), &id))
    }

    pub fn validate(&self, rack: &FiniteRack) -> Result<ValidationReport> {
        let kind = StructureKind::ModuleAction;
        if self.matrices.len() != rack.size() {
            return Err(Error::Dimension(format!(
                "{} action matrices for a rack of size {}",
                self.matrices.len(),
                rack.size()
            )));
        }
        for (x, m) in self.matrices.iter().enumerate() {
            if m.len() != self.dim || m.iter().any(|row| row.len() != self.dim) {
                return Err(Error::Dimension(format!("action matrix {x} is not {0}x{0}", self.dim)));
            }
        }
        let mats: Vec<Matrix<i64>> = (0..rack.size()).map(|x| self.matrix(x)).collect();
        for (x, m) in mats.iter().enumerate() {
            let det = m.determinant()?;
            let unit = if self.modulus == 0 {
                det == 1 || det == -1
            } else {
                det.gcd(&(self.modulus as i64)) == 1
            };
            if !unit {
                return Ok(ValidationReport::fail(kind, "invertible action", vec![x]));
            }
        }
        for x in 0..rack.size() {
            for y in 0..rack.size() {
                let lhs = mats[x].mul(&mats[y])?;
                let rhs = mats[rack.op(x, y)].mul(&mats[x])?;
                if !self.congruent(&lhs, &rhs) {
                    return Ok(ValidationReport::fail(kind, "x·(y·a) = (x▷y)·(x·a)", vec![x, y]));
                }
            }
        }
        if let Some(u) = rack.unit() {
            if !self.congruent(&mats[u], &Matrix::identity(self.dim)) {
                return Ok(ValidationReport::fail(kind, "unit acts as identity", vec![u]));
            }
        }
        Ok(ValidationReport::pass(kind))
    }
}
