use std::ops::Deref;

use super::{validate, StructureKind};
use crate::error::{Error, Result};

/// A validated finite shelf, optionally pointed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteShelf {
    name: String,
    size: usize,
    table: Vec<usize>,
    unit: Option<usize>,
    labels: Vec<String>,
}

impl FiniteShelf {
    pub fn new(table: Vec<Vec<usize>>, unit: Option<usize>) -> Result<Self> {
        validate(&table, None, StructureKind::Shelf)?.into_result()?;
        let size = table.len();
        if let Some(u) = unit {
            if u >= size {
                return Err(Error::OutOfRange(format!("unit {u} is not below {size}")));
            }
            if let Some(x) = (0..size).find(|&x| table[u][x] != x || table[x][u] != u) {
                return Err(Error::InvalidStructure(format!("unit laws fail at {x}")));
            }
        }
        Ok(Self {
            name: String::from("shelf"),
            size,
            table: table.into_iter().flatten().collect(),
            unit,
            labels: (0..size).map(|i| i.to_string()).collect(),
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.size {
            return Err(Error::Dimension(format!("{} labels for {} elements", labels.len(), self.size)));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `x ▷ y`.
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.size + y]
    }

    /// Right-bracketed product `x_1 ▷ (x_2 ▷ (… ▷ x_k))`; panics on empty input.
    pub fn rprod(&self, xs: &[usize]) -> usize {
        let (&last, init) = xs.split_last().expect("empty product");
        init.iter().rev().fold(last, |acc, &x| self.op(x, acc))
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.size.max(1)).take(self.size).map(<[usize]>::to_vec).collect()
    }

    pub fn is_trivial(&self) -> bool {
        (0..self.size).all(|x| (0..self.size).all(|y| self.op(x, y) == y))
    }
}

/// A validated finite rack: a shelf whose left translations are bijections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteRack {
    shelf: FiniteShelf,
    inverse: Vec<usize>,
}

impl FiniteRack {
    pub fn new(table: Vec<Vec<usize>>, unit: Option<usize>) -> Result<Self> {
        let kind = if unit.is_some() { StructureKind::PointedRack } else { StructureKind::Rack };
        validate(&table, unit, kind)?.into_result()?;
        let shelf = FiniteShelf::new(table, unit)?;
        Ok(Self::from_shelf_unchecked(shelf))
    }

    fn from_shelf_unchecked(shelf: FiniteShelf) -> Self {
        let n = shelf.size;
        let mut inverse = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                inverse[x * n + shelf.op(x, y)] = y;
            }
        }
        Self { shelf, inverse }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.shelf = self.shelf.with_name(name);
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        self.shelf = self.shelf.with_labels(labels)?;
        Ok(self)
    }

    /// `c_x^{-1}(y)`, the unique `z` with `x ▷ z = y`.
    pub fn inverse_op(&self, x: usize, y: usize) -> usize {
        self.inverse[x * self.shelf.size + y]
    }

    pub fn as_shelf(&self) -> &FiniteShelf {
        &self.shelf
    }
}

impl Deref for FiniteRack {
    type Target = FiniteShelf;

    fn deref(&self) -> &FiniteShelf {
        &self.shelf
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dihedral(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|x| (0..n).map(|y| (2 * x + n - y) % n).collect()).collect()
    }

    #[test]
    fn dihedral_is_rack_with_inverse() {
        let r = FiniteRack::new(dihedral(5), None).unwrap();
        for x in 0..5 {
            for y in 0..5 {
                assert_eq!(r.op(x, r.inverse_op(x, y)), y);
                assert_eq!(r.inverse_op(x, r.op(x, y)), y);
            }
        }
    }

    #[test]
    fn right_bracketed_product() {
        let r = FiniteRack::new(dihedral(3), None).unwrap();
        assert_eq!(r.rprod(&[2]), 2);
        assert_eq!(r.rprod(&[0, 1]), r.op(0, 1));
        assert_eq!(r.rprod(&[0, 1, 2]), r.op(0, r.op(1, 2)));
    }

    #[test]
    fn shelf_need_not_be_rack() {
        let t = vec![vec![0, 0], vec![0, 0]];
        assert!(FiniteShelf::new(t.clone(), None).is_ok());
        assert!(FiniteRack::new(t, None).is_err());
    }

    #[test]
    fn dihedral_not_pointed() {
        assert!(FiniteRack::new(dihedral(3), Some(0)).is_err());
    }
}
