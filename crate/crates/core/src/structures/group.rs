use super::shelf::FiniteRack;
use super::{check_square, validate, StructureKind, ValidationReport};
use crate::error::{Error, Result};

pub(crate) fn validate_group_table(table: &[Vec<usize>], n: usize) -> ValidationReport {
    let kind = StructureKind::Group;
    let op = |x: usize, y: usize| table[x][y];
    if n == 0 {
        return ValidationReport::fail(kind, "nonempty", vec![]);
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if op(op(x, y), z) != op(x, op(y, z)) {
                    return ValidationReport::fail(kind, "associativity", vec![x, y, z]);
                }
            }
        }
    }
    let Some(e) = (0..n).find(|&e| (0..n).all(|x| op(e, x) == x && op(x, e) == x)) else {
        return ValidationReport::fail(kind, "identity", vec![]);
    };
    for x in 0..n {
        if !(0..n).any(|y| op(x, y) == e && op(y, x) == e) {
            return ValidationReport::fail(kind, "inverses", vec![x]);
        }
    }
    ValidationReport::pass(kind)
}

/// A validated finite group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    size: usize,
    mul: Vec<usize>,
    identity: usize,
    inv: Vec<usize>,
    labels: Vec<String>,
}

impl FiniteGroup {
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = check_square(&table)?;
        validate(&table, None, StructureKind::Group)?.into_result()?;
        let identity = (0..n).find(|&e| (0..n).all(|x| table[e][x] == x)).expect("validated");
        let inv = (0..n).map(|x| (0..n).find(|&y| table[x][y] == identity).expect("validated")).collect();
        Ok(Self {
            name: String::from("group"),
            size: n,
            mul: table.into_iter().flatten().collect(),
            identity,
            inv,
            labels: (0..n).map(|i| i.to_string()).collect(),
        })
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|x| (0..n).map(|y| (x + y) % n).collect()).collect();
        Self::new(table).expect("cyclic group").with_name(format!("Z/{n}"))
    }

    /// Direct product; element `(a, b)` has index `a * |H| + b`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let (m, k) = (g.size, h.size);
        let table = (0..m * k)
            .map(|x| (0..m * k).map(|y| g.mul(x / k, y / k) * k + h.mul(x % k, y % k)).collect())
            .collect();
        let labels = (0..m * k).map(|x| format!("({},{})", g.labels[x / k], h.labels[x % k])).collect();
        Self::new(table)
            .expect("direct product")
            .with_name(format!("{}x{}", g.name, h.name))
            .with_labels(labels)
            .expect("label count")
    }

    /// Group generated by closure under composition of permutations of
    /// `0..d`, listed in the given order; `(στ)(i) = σ(τ(i))`.
    pub fn from_permutations(perms: Vec<Vec<usize>>) -> Result<Self> {
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p);
        let n = perms.len();
        let mut table = vec![vec![0; n]; n];
        for (x, px) in perms.iter().enumerate() {
            for (y, py) in perms.iter().enumerate() {
                let comp: Vec<usize> = py.iter().map(|&i| px[i]).collect();
                table[x][y] = index(&comp)
                    .ok_or_else(|| Error::InvalidStructure(format!("permutations not closed at ({x}, {y})")))?;
            }
        }
        Self::new(table)
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

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.size + y]
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }

    /// Ordered product `x_1 x_2 … x_k` (identity for the empty list).
    pub fn product(&self, xs: &[usize]) -> usize {
        xs.iter().fold(self.identity, |acc, &x| self.mul(acc, x))
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.size).map(<[usize]>::to_vec).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.size).all(|x| (0..self.size).all(|y| self.mul(x, y) == self.mul(y, x)))
    }
}

/// The conjugation rack `x ▷ y = x y x⁻¹`, pointed at the identity.
pub fn conj_rack(g: &FiniteGroup) -> FiniteRack {
    let n = g.size();
    let table = (0..n).map(|x| (0..n).map(|y| g.mul(g.mul(x, y), g.inv(x))).collect()).collect();
    FiniteRack::new(table, Some(g.identity()))
        .expect("conjugation is a pointed rack")
        .with_name(format!("Conj({})", g.name()))
        .with_labels(g.labels().to_vec())
        .expect("label count")
}

/// The augmented rack `x ▷ y = f(x) · y` for a `G`-set `X` and an
/// equivariant map `f : X → G`. `action[g][x]` is `g · x`.
///
/// When `unit` is given it must be fixed by every `g` and satisfy
/// `f(unit) = e`; the result is then pointed at it.
pub fn augmented_rack(g: &FiniteGroup, action: &[Vec<usize>], f: &[usize], unit: Option<usize>) -> Result<FiniteRack> {
    if action.len() != g.size() {
        return Err(Error::Dimension(format!("action has {} rows for a group of order {}", action.len(), g.size())));
    }
    let m = f.len();
    for (gi, row) in action.iter().enumerate() {
        if row.len() != m {
            return Err(Error::Dimension(format!("action row {gi} has {} entries, expected {m}", row.len())));
        }
        if let Some(x) = row.iter().position(|&v| v >= m) {
            return Err(Error::OutOfRange(format!("action entry ({gi}, {x}) = {}", row[x])));
        }
    }
    if let Some(x) = f.iter().position(|&v| v >= g.size()) {
        return Err(Error::OutOfRange(format!("f({x}) = {} is not a group element", f[x])));
    }
    for (x, &y) in action[g.identity()].iter().enumerate() {
        if y != x {
            return Err(Error::InvalidStructure(format!("identity moves {x}")));
        }
    }
    for a in 0..g.size() {
        for b in 0..g.size() {
            for x in 0..m {
                if action[g.mul(a, b)][x] != action[a][action[b][x]] {
                    return Err(Error::InvalidStructure(format!("action not compatible at ({a}, {b}, {x})")));
                }
            }
        }
    }
    for a in 0..g.size() {
        for x in 0..m {
            if f[action[a][x]] != g.mul(g.mul(a, f[x]), g.inv(a)) {
                return Err(Error::InvalidStructure(format!("f not equivariant at ({a}, {x})")));
            }
        }
    }
    if let Some(u) = unit {
        if u >= m || f[u] != g.identity() || (0..g.size()).any(|a| action[a][u] != u) {
            return Err(Error::InvalidStructure(format!("{u} cannot serve as unit")));
        }
    }
    let table = (0..m).map(|x| (0..m).map(|y| action[f[x]][y]).collect()).collect();
    Ok(FiniteRack::new(table, unit)?.with_name(format!("Aug({})", g.name())))
}
