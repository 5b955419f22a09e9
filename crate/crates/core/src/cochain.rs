//! Cochain complexes of racks and groups, their differentials and
//! cohomology.
//!
//! An `n`-cochain is a dense table over `n`-tuples of elements. Tuples are
//! indexed in mixed radix with the leftmost argument most significant, so
//! `(x_1, …, x_n)` sits at `((x_1 · s + x_2) · s + …) · s + x_n` for a
//! structure of size `s`. Degree 0 has a single entry.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cubical::{self, GroupCubeFunctor};
use crate::error::{Error, Result};
use crate::linalg::{cohomology_invariants_mod, AbelianInvariants, IntegerMatrix, Matrix};
use crate::scalar::{Coefficient, CoefficientDomain, CoefficientSpec};
use crate::structures::{conj_rack, FiniteGroup, FiniteRack, FiniteShelf, RackModuleAction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CochainKind {
    Rack,
    Group,
    CubicalGroup,
}

/// `size^n`, or an error when it does not fit in memory-sized counts.
pub fn tuple_count(size: usize, n: usize) -> Result<usize> {
    (0..n)
        .try_fold(1usize, |acc, _| acc.checked_mul(size))
        .filter(|&c| c <= 1 << 28)
        .ok_or_else(|| Error::Guard(format!("{size}^{n} cochain entries")))
}

#[inline]
pub fn tuple_index(size: usize, tuple: &[usize]) -> usize {
    tuple.iter().fold(0, |acc, &x| acc * size + x)
}

pub fn index_tuple(size: usize, n: usize, mut idx: usize) -> Vec<usize> {
    let mut t = vec![0; n];
    for slot in t.iter_mut().rev() {
        *slot = idx % size;
        idx /= size;
    }
    t
}

/// All `n`-tuples in index order.
pub fn tuples(size: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    let count = if size == 0 && n > 0 { 0 } else { size.pow(n as u32) };
    (0..count).map(move |i| index_tuple(size, n, i))
}

/// A cochain with values in `T`. `width` is the rank of the coefficient
/// module (`1` except for twisted coefficients); components are the fastest
/// varying index.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Cochain<T> {
    pub kind: CochainKind,
    pub size: usize,
    pub degree: usize,
    pub width: usize,
    pub values: Vec<T>,
}

impl<T: Coefficient> Cochain<T> {
    pub fn zero(kind: CochainKind, size: usize, degree: usize) -> Result<Self> {
        let len = tuple_count(size, degree)?;
        Ok(Self { kind, size, degree, width: 1, values: vec![T::zero(); len] })
    }

    pub fn from_values(kind: CochainKind, size: usize, degree: usize, values: Vec<T>) -> Result<Self> {
        let len = tuple_count(size, degree)?;
        if values.len() != len {
            return Err(Error::Dimension(format!("{} values for {len} tuples", values.len())));
        }
        Ok(Self { kind, size, degree, width: 1, values })
    }

    pub fn from_fn(kind: CochainKind, size: usize, degree: usize, f: impl Fn(&[usize]) -> T) -> Result<Self> {
        tuple_count(size, degree)?;
        Ok(Self { kind, size, degree, width: 1, values: tuples(size, degree).map(|t| f(&t)).collect() })
    }

    /// The cochain taking `value` on `tuple` and zero elsewhere.
    pub fn basis(kind: CochainKind, size: usize, degree: usize, index: usize, value: T) -> Result<Self> {
        let mut c = Self::zero(kind, size, degree)?;
        if index >= c.values.len() {
            return Err(Error::OutOfRange(format!("basis index {index} of {}", c.values.len())));
        }
        c.values[index] = value;
        Ok(c)
    }

    pub fn random<D: CoefficientDomain<T>, R: Rng>(
        kind: CochainKind,
        size: usize,
        degree: usize,
        domain: &D,
        rng: &mut R,
    ) -> Result<Self> {
        let len = tuple_count(size, degree)?;
        Ok(Self { kind, size, degree, width: 1, values: (0..len).map(|_| domain.sample(rng)).collect() })
    }

    #[inline]
    pub fn at(&self, tuple: &[usize]) -> &T {
        &self.values[tuple_index(self.size, tuple)]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(T::is_zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a.clone() + b.clone()).collect();
        Ok(Self { values, ..self.clone() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a.clone() - b.clone()).collect();
        Ok(Self { values, ..self.clone() })
    }

    pub fn scaled_by_sign(&self, sign: i8) -> Self {
        Self { values: self.values.iter().map(|v| v.clone().signed(sign)).collect(), ..self.clone() }
    }

    pub fn same_shape(&self, other: &Self) -> Result<()> {
        if (self.kind, self.size, self.degree, self.width) != (other.kind, other.size, other.degree, other.width) {
            return Err(Error::Mismatch(format!(
                "{:?} cochain of degree {} on {} elements vs {:?} of degree {} on {}",
                self.kind, self.degree, self.size, other.kind, other.degree, other.size
            )));
        }
        Ok(())
    }

    /// First tuple where `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<Vec<usize>> {
        self.values
            .iter()
            .zip(&other.values)
            .position(|(a, b)| a != b)
            .map(|i| index_tuple(self.size, self.degree, i))
    }

    /// Value table as strings, for reports.
    pub fn render(&self) -> Vec<String> {
        self.values.iter().map(ToString::to_string).collect()
    }

    fn expect(&self, kind: CochainKind, size: usize) -> Result<()> {
        if self.kind != kind || self.size != size {
            return Err(Error::Mismatch(format!(
                "expected a {kind:?} cochain on {size} elements, got {:?} on {}",
                self.kind, self.size
            )));
        }
        if self.width != 1 {
            return Err(Error::Mismatch("twisted cochain passed to a trivial-coefficient operation".into()));
        }
        Ok(())
    }
}

/// A cochain complex attached to a structure.
#[derive(Clone, Copy, Debug)]
pub enum Complex<'a> {
    /// Rack (or shelf) cochains, trivial coefficients.
    Rack(&'a FiniteShelf),
    /// Rack cochains vanishing whenever an argument is the unit.
    Pointed(&'a FiniteShelf),
    /// Group cochains with trivial coefficients.
    Group(&'a FiniteGroup),
    /// Cubical group cochains on η-tuples.
    CubicalGroup(&'a FiniteGroup),
    /// Rack cochains with coefficients in a rack module.
    Twisted(&'a FiniteRack, &'a RackModuleAction),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComplexTag {
    Rack,
    Pointed,
    Group,
    Cubical,
}

impl std::str::FromStr for ComplexTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rack" => Ok(Self::Rack),
            "pointed" => Ok(Self::Pointed),
            "group" => Ok(Self::Group),
            "cubical" | "cubical-group" => Ok(Self::Cubical),
            _ => Err(Error::Parse(format!("unknown complex `{s}`"))),
        }
    }
}

/// Signed terms `(sign, tuple)` of `(d f)(x) = Σ sign · f(tuple)` for
/// trivial coefficients.
fn rack_terms(rack: &FiniteShelf, x: &[usize], out: &mut Vec<(i64, Vec<usize>)>) {
    for i in 1..=x.len() {
        let s = if i % 2 == 0 { 1 } else { -1 };
        out.push((s, cubical::nerve_face_unchecked(rack, i, 0, x)));
        out.push((-s, cubical::nerve_face_unchecked(rack, i, 1, x)));
    }
}

fn group_terms(g: &FiniteGroup, x: &[usize], out: &mut Vec<(i64, Vec<usize>)>) {
    let m = x.len();
    if m == 0 {
        return;
    }
    out.push((1, x[1..].to_vec()));
    for i in 1..m {
        let mut t = Vec::with_capacity(m - 1);
        t.extend_from_slice(&x[..i - 1]);
        t.push(g.mul(x[i - 1], x[i]));
        t.extend_from_slice(&x[i + 1..]);
        out.push((if i % 2 == 0 { 1 } else { -1 }, t));
    }
    out.push((if m.is_multiple_of(2) { 1 } else { -1 }, x[..m - 1].to_vec()));
}

/// Face of a cubical group cell: restrict the functor of `x` along
/// `∂_{i,ε}` and read off its generator edges.
pub fn cubical_face(functor: &GroupCubeFunctor, i: usize, eps: u8) -> Vec<usize> {
    let n = functor.n - 1;
    (1..=n)
        .map(|k| {
            let base = cubical::face_mask(i, eps, (1u32 << (k - 1)) - 1);
            functor.labels[functor.edge(base, cubical::face_coordinate(i, k))]
        })
        .collect()
}

fn cubical_terms(conj: &FiniteShelf, x: &[usize], out: &mut Vec<(i64, Vec<usize>)>) {
    let functor = cubical::functor_in_conj(conj, x);
    for i in 1..=x.len() {
        let s = if i % 2 == 0 { 1 } else { -1 };
        out.push((s, cubical_face(&functor, i, 0)));
        out.push((-s, cubical_face(&functor, i, 1)));
    }
}

impl<'a> Complex<'a> {
    pub fn size(&self) -> usize {
        match self {
            Complex::Rack(r) | Complex::Pointed(r) => r.size(),
            Complex::Group(g) | Complex::CubicalGroup(g) => g.size(),
            Complex::Twisted(r, _) => r.size(),
        }
    }

    pub fn cochain_kind(&self) -> CochainKind {
        match self {
            Complex::Rack(_) | Complex::Pointed(_) | Complex::Twisted(..) => CochainKind::Rack,
            Complex::Group(_) => CochainKind::Group,
            Complex::CubicalGroup(_) => CochainKind::CubicalGroup,
        }
    }

    fn width(&self) -> usize {
        match self {
            Complex::Twisted(_, a) => a.dim,
            _ => 1,
        }
    }

    fn modulus(&self) -> u64 {
        match self {
            Complex::Twisted(_, a) => a.modulus,
            _ => 0,
        }
    }

    /// Indices (in the full tuple basis) spanning degree `n` of this complex.
    pub fn basis(&self, n: usize) -> Result<Vec<usize>> {
        let count = tuple_count(self.size(), n)?;
        match self {
            Complex::Pointed(r) => {
                let u = r.unit().ok_or_else(|| Error::InvalidStructure(format!("{} is not pointed", r.name())))?;
                if n == 0 {
                    return Ok(Vec::new());
                }
                Ok((0..count).filter(|&i| !index_tuple(r.size(), n, i).contains(&u)).collect())
            }
            _ => Ok((0..count * self.width()).collect()),
        }
    }

    /// Sparse rows of `d^{n+1} : C^n → C^{n+1}` in the full tuple basis.
    fn sparse_rows(&self, n: usize) -> Result<Vec<Vec<(usize, i64)>>> {
        let size = self.size();
        let rows = tuple_count(size, n + 1)?;
        let w = self.width();
        let m = self.modulus() as i64;
        let conj = match self {
            Complex::CubicalGroup(g) => Some(conj_rack(g)),
            _ => None,
        };
        let build = |r: usize| -> Vec<Vec<(usize, i64)>> {
            let x = index_tuple(size, n + 1, r);
            let mut out = Vec::new();
            match self {
                Complex::Rack(s) | Complex::Pointed(s) => rack_terms(s, &x, &mut out),
                Complex::Group(g) => group_terms(g, &x, &mut out),
                Complex::CubicalGroup(_) => cubical_terms(conj.as_ref().expect("built above"), &x, &mut out),
                Complex::Twisted(rack, action) => {
                    return twisted_rows(rack, action, &x);
                }
            }
            let mut row: Vec<(usize, i64)> = out.into_iter().map(|(s, t)| (tuple_index(size, &t), s)).collect();
            vec![merge(&mut row)]
        };
        let nested: Vec<Vec<Vec<(usize, i64)>>> = (0..rows).into_par_iter().map(build).collect();
        let mut flat: Vec<Vec<(usize, i64)>> = nested.into_iter().flatten().collect();
        if m > 0 {
            for row in flat.iter_mut() {
                row.iter_mut().for_each(|(_, v)| *v = v.rem_euclid(m));
                row.retain(|&(_, v)| v != 0);
            }
        }
        debug_assert_eq!(flat.len(), rows * w);
        Ok(flat)
    }

    /// Matrix of `d^{n+1} : C^n → C^{n+1}` over the integers; column `j` is
    /// the coboundary of the `j`-th basis cochain. For the pointed complex
    /// rows and columns are restricted to tuples avoiding the unit.
    pub fn diff_matrix_i64(&self, n: usize) -> Result<Matrix<i64>> {
        let cols = self.basis(n)?;
        let rows = self.basis(n + 1)?;
        let sparse = self.sparse_rows(n)?;
        let full_cols = tuple_count(self.size(), n)? * self.width();
        let mut col_pos = vec![usize::MAX; full_cols];
        for (j, &c) in cols.iter().enumerate() {
            col_pos[c] = j;
        }
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for &(c, v) in &sparse[r] {
                if col_pos[c] != usize::MAX {
                    m.add_to(i, col_pos[c], v);
                }
            }
        }
        Ok(m)
    }

    /// The pointed subspace is mapped into itself by `d` (checked on the
    /// full matrix, not assumed).
    pub fn pointed_closed(&self, n: usize) -> Result<bool> {
        let Complex::Pointed(r) = self else { return Ok(true) };
        let inside: std::collections::HashSet<usize> = self.basis(n)?.into_iter().collect();
        let rows_in: std::collections::HashSet<usize> = self.basis(n + 1)?.into_iter().collect();
        let sparse = Complex::Rack(r).sparse_rows(n)?;
        Ok(sparse
            .iter()
            .enumerate()
            .filter(|(row, _)| !rows_in.contains(row))
            .all(|(_, entries)| entries.iter().all(|&(c, v)| v == 0 || !inside.contains(&c))))
    }

    pub fn diff_matrix(&self, n: usize, coeff: &CoefficientSpec) -> Result<IntegerMatrix> {
        coeff.snf_modulus()?;
        Ok(self.diff_matrix_i64(n)?.to_bigint())
    }

    /// Invariants of `ker d^{n+1} / im d^n` (degree 0: `ker d^1`).
    pub fn cohomology(&self, n: usize, coeff: &CoefficientSpec) -> Result<AbelianInvariants> {
        let modulus = coeff.snf_modulus()?;
        if let Complex::Twisted(_, a) = self {
            if a.modulus != 0 && a.modulus != modulus {
                return Err(Error::Coefficients(format!("module is over Z/{} but Z/{modulus} was requested", a.modulus)));
            }
            if a.modulus != 0 && modulus == 0 {
                return Err(Error::Coefficients(format!("module is over Z/{}", a.modulus)));
            }
        }
        let d_out = self.diff_matrix(n, coeff)?;
        let d_in = if n == 0 { IntegerMatrix::zeros(d_out.cols(), 0) } else { self.diff_matrix(n - 1, coeff)? };
        cohomology_invariants_mod(&d_out, &d_in, modulus)
    }
}

/// Sum coefficients of equal columns and drop zeros.
fn merge(row: &mut [(usize, i64)]) -> Vec<(usize, i64)> {
    row.sort_unstable_by_key(|&(c, _)| c);
    let mut out: Vec<(usize, i64)> = Vec::with_capacity(row.len());
    for &(c, v) in row.iter() {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv += v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|&(_, v)| v != 0);
    out
}

fn twisted_rows(rack: &FiniteShelf, action: &RackModuleAction, x: &[usize]) -> Vec<Vec<(usize, i64)>> {
    let k = action.dim;
    let size = rack.size();
    let mut rows: Vec<Vec<(usize, i64)>> = vec![Vec::new(); k];
    for i in 1..=x.len() {
        let s: i64 = if i % 2 == 0 { 1 } else { -1 };
        let t0 = tuple_index(size, &cubical::nerve_face_unchecked(rack, i, 0, x));
        let t1 = tuple_index(size, &cubical::nerve_face_unchecked(rack, i, 1, x));
        let m = &action.matrices[rack.rprod(&x[..i])];
        for (c, row) in rows.iter_mut().enumerate() {
            row.push((t0 * k + c, s));
            for (c2, &a) in m[c].iter().enumerate() {
                if a != 0 {
                    row.push((t1 * k + c2, -s * a));
                }
            }
        }
    }
    rows.into_iter().map(|mut r| merge(&mut r)).collect()
}

/// Apply a trivial-coefficient differential given by signed terms.
fn apply_terms<T: Coefficient>(
    f: &Cochain<T>,
    kind: CochainKind,
    terms: impl Fn(&[usize], &mut Vec<(i64, Vec<usize>)>) + Sync,
) -> Result<Cochain<T>> {
    let size = f.size;
    let n = f.degree + 1;
    let len = tuple_count(size, n)?;
    let values = (0..len)
        .into_par_iter()
        .map(|r| {
            let x = index_tuple(size, n, r);
            let mut buf = Vec::new();
            terms(&x, &mut buf);
            buf.into_iter().fold(T::zero(), |acc, (s, t)| {
                let v = f.at(&t).clone();
                if s > 0 {
                    acc + v
                } else {
                    acc - v
                }
            })
        })
        .collect();
    Ok(Cochain { kind, size, degree: n, width: 1, values })
}

/// `d_R f` with trivial coefficients.
pub fn rack_diff<T: Coefficient>(rack: &FiniteShelf, f: &Cochain<T>) -> Result<Cochain<T>> {
    f.expect(CochainKind::Rack, rack.size())?;
    apply_terms(f, CochainKind::Rack, |x, out| rack_terms(rack, x, out))
}

/// `d_R f` with coefficients in a rack module; `f` has `width = dim`.
pub fn rack_diff_twisted(rack: &FiniteRack, action: &RackModuleAction, f: &Cochain<i64>) -> Result<Cochain<i64>> {
    if f.kind != CochainKind::Rack || f.size != rack.size() || f.width != action.dim {
        return Err(Error::Mismatch("cochain does not match the rack module".into()));
    }
    let size = f.size;
    let n = f.degree + 1;
    let len = tuple_count(size, n)?;
    let k = action.dim;
    let mut values = vec![0i64; len * k];
    for r in 0..len {
        let x = index_tuple(size, n, r);
        for (c, row) in twisted_rows(rack, action, &x).into_iter().enumerate() {
            let v: i64 = row.iter().map(|&(col, a)| a * f.values[col]).sum();
            values[r * k + c] = if action.modulus > 0 { v.rem_euclid(action.modulus as i64) } else { v };
        }
    }
    Ok(Cochain { kind: CochainKind::Rack, size, degree: n, width: k, values })
}

/// `d f` in the group complex with trivial coefficients.
pub fn group_diff<T: Coefficient>(g: &FiniteGroup, f: &Cochain<T>) -> Result<Cochain<T>> {
    f.expect(CochainKind::Group, g.size())?;
    apply_terms(f, CochainKind::Group, |x, out| group_terms(g, x, out))
}

/// `d f` in the cubical group complex with trivial coefficients.
pub fn cubical_group_diff<T: Coefficient>(g: &FiniteGroup, f: &Cochain<T>) -> Result<Cochain<T>> {
    f.expect(CochainKind::CubicalGroup, g.size())?;
    let conj = conj_rack(g);
    apply_terms(f, CochainKind::CubicalGroup, |x, out| cubical_terms(&conj, x, out))
}

/// Cohomology of a named complex; convenience over [`Complex::cohomology`].
pub fn cohomology(complex: &Complex<'_>, n: usize, coeff: &CoefficientSpec) -> Result<AbelianInvariants> {
    complex.cohomology(n, coeff)
}

/// `HR^n_p` of a pointed rack, `n ≥ 1`.
pub fn pointed_cohomology(rack: &FiniteShelf, n: usize, coeff: &CoefficientSpec) -> Result<AbelianInvariants> {
    if rack.unit().is_none() {
        return Err(Error::InvalidStructure(format!("{} is not pointed", rack.name())));
    }
    if n == 0 {
        return Err(Error::OutOfRange("pointed cohomology starts in degree 1".into()));
    }
    Complex::Pointed(rack).cohomology(n, coeff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::structures::conj_rack;

    #[test]
    fn indexing_round_trip() {
        assert_eq!(tuple_index(3, &[1, 2]), 5);
        assert_eq!(index_tuple(3, 2, 5), vec![1, 2]);
        assert_eq!(tuples(2, 2).collect::<Vec<_>>(), vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(tuples(5, 0).count(), 1);
    }

    #[test]
    fn rack_d2_formula() {
        let r = fixtures::dihedral_quandle(5);
        let f = Cochain::from_fn(CochainKind::Rack, 5, 1, |t| (t[0] * t[0] + 1) as i64).unwrap();
        let df = rack_diff(&r, &f).unwrap();
        for x in 0..5 {
            for y in 0..5 {
                assert_eq!(*df.at(&[x, y]), -f.at(&[r.op(x, y)]) + f.at(&[y]));
            }
        }
        let c = Cochain::from_values(CochainKind::Rack, 5, 0, vec![7i64]).unwrap();
        assert!(rack_diff(&r, &c).unwrap().is_zero());
    }

    #[test]
    fn group_d2_formula() {
        let g = fixtures::symmetric_group_3();
        let f = Cochain::from_fn(CochainKind::Group, 6, 1, |t| (3 * t[0] + 1) as i64).unwrap();
        let df = group_diff(&g, &f).unwrap();
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(*df.at(&[x, y]), f.at(&[y]) - f.at(&[g.mul(x, y)]) + f.at(&[x]));
            }
        }
        let c = Cochain::from_values(CochainKind::Group, 6, 0, vec![4i64]).unwrap();
        assert!(group_diff(&g, &c).unwrap().is_zero());
    }

    #[test]
    fn matrices_agree_with_cochain_differentials() {
        let r = fixtures::dihedral_quandle(3);
        let m = Complex::Rack(&r).diff_matrix_i64(2).unwrap();
        for j in 0..9 {
            let e = Cochain::<i64>::basis(CochainKind::Rack, 3, 2, j, 1).unwrap();
            let d = rack_diff(&r, &e).unwrap();
            for i in 0..27 {
                assert_eq!(*m.get(i, j), d.values[i]);
            }
        }
    }

    #[test]
    fn one_point_and_trivial_racks_have_zero_differential() {
        for k in 1..=3 {
            let r = fixtures::trivial_rack(k);
            for n in 0..=3 {
                assert!(Complex::Rack(&r).diff_matrix_i64(n).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn conj_s3_degree_one() {
        let g = fixtures::symmetric_group_3();
        let r = conj_rack(&g);
        let z = CoefficientSpec::Integers;
        assert_eq!(Complex::Rack(&r).cohomology(1, &z).unwrap(), AbelianInvariants::free(3));
        assert_eq!(pointed_cohomology(&r, 1, &z).unwrap(), AbelianInvariants::free(2));
    }

    #[test]
    fn unpointed_rejected() {
        let r = fixtures::dihedral_quandle(3);
        assert!(pointed_cohomology(&r, 1, &CoefficientSpec::Integers).is_err());
    }

    #[test]
    fn matrix_ring_coefficients_rejected_for_cohomology() {
        let r = fixtures::point_rack();
        let c = CoefficientSpec::MatrixRing { dim: 2, modulus: 2 };
        assert!(Complex::Rack(&r).cohomology(1, &c).is_err());
    }

    #[test]
    fn last_faces_agree_for_trivial_coefficients() {
        let r = fixtures::dihedral_quandle(4);
        for x in tuples(4, 3) {
            assert_eq!(
                cubical::nerve_face(&r, 3, 0, &x).unwrap(),
                cubical::nerve_face(&r, 3, 1, &x).unwrap()
            );
        }
    }
}
