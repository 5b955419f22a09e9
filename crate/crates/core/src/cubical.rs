//! The cubes `□_n`, their face functors, σ-functors, the rack trunk and
//! its nerve.
//!
//! A vertex of `□_n` is a subset of `{1, …, n}`, stored as a bitmask with
//! element `e` at bit `e − 1`. An edge is a pair `(A, k)` with `k ∉ A`,
//! going from `A` to `A ∪ {k}`.

use serde::{Deserialize, Serialize};

use crate::combinatorics::Permutation;
use crate::error::{Error, Result};
use crate::structures::{FiniteGroup, FiniteShelf};

/// Largest supported cube dimension.
pub const MAX_DIM: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CubeVertex {
    pub n: usize,
    pub mask: u32,
}

impl CubeVertex {
    pub fn new(n: usize, mask: u32) -> Result<Self> {
        if n > MAX_DIM || (n < 32 && mask >> n != 0) {
            return Err(Error::OutOfRange(format!("mask {mask:#b} is not a subset of 1..={n}")));
        }
        Ok(Self { n, mask })
    }

    pub fn from_elements(n: usize, elems: &[usize]) -> Result<Self> {
        let mut mask = 0u32;
        for &e in elems {
            if e == 0 || e > n {
                return Err(Error::OutOfRange(format!("{e} is not in 1..={n}")));
            }
            mask |= 1 << (e - 1);
        }
        Self::new(n, mask)
    }

    pub fn contains(&self, e: usize) -> bool {
        e >= 1 && e <= self.n && self.mask & (1 << (e - 1)) != 0
    }

    pub fn elements(&self) -> Vec<usize> {
        (1..=self.n).filter(|&e| self.contains(e)).collect()
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }
}

fn check_dim(n: usize) -> Result<()> {
    if n > MAX_DIM {
        Err(Error::Guard(format!("cube dimension {n} exceeds {MAX_DIM}")))
    } else {
        Ok(())
    }
}

/// `∂_{i,ε}` on masks, `□_{n−1} → □_n`: elements `≥ i` shift up by one and
/// `i` is adjoined when `ε = 1`.
#[inline]
pub fn face_mask(i: usize, eps: u8, mask: u32) -> u32 {
    let low = mask & ((1u32 << (i - 1)) - 1);
    let high = (mask >> (i - 1)) << i;
    low | high | (u32::from(eps) << (i - 1))
}

/// `∂_{i,ε} : □_{n−1} → □_n` on a vertex.
pub fn face_vertex(n: usize, i: usize, eps: u8, a: CubeVertex) -> Result<CubeVertex> {
    check_dim(n)?;
    if i == 0 || i > n {
        return Err(Error::OutOfRange(format!("face index {i} outside 1..={n}")));
    }
    if eps > 1 {
        return Err(Error::OutOfRange(format!("face side {eps} is not 0 or 1")));
    }
    if a.n + 1 != n {
        return Err(Error::Dimension(format!("vertex of □_{} fed to a face into □_{n}", a.n)));
    }
    Ok(CubeVertex { n, mask: face_mask(i, eps, a.mask) })
}

/// `∂_{i,ε}` on coordinates: where coordinate `c` of `□_{n−1}` lands in `□_n`.
#[inline]
pub fn face_coordinate(i: usize, c: usize) -> usize {
    if c < i {
        c
    } else {
        c + 1
    }
}

/// A face `∂_{i,ε}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Face {
    pub i: usize,
    pub eps: u8,
}

/// Vertex table of a composite of faces `□_m → □_{m+k}`; `word` lists the
/// faces in order of application (first applied first).
pub fn face_word_vertex_map(m: usize, word: &[Face]) -> Vec<u32> {
    (0..1u32 << m)
        .map(|mask| word.iter().fold(mask, |acc, f| face_mask(f.i, f.eps, acc)))
        .collect()
}

/// Rewrite a composite of faces into the unique form with strictly
/// increasing indices (in order of application), using
/// `∂_{i,ε} ∘ ∂_{j−1,ω} = ∂_{j,ω} ∘ ∂_{i,ε}` for `i < j`.
pub fn normalize_faces(word: &[Face]) -> Vec<Face> {
    let mut w = word.to_vec();
    loop {
        let Some(p) = (1..w.len()).find(|&p| w[p - 1].i >= w[p].i) else { return w };
        let (first, second) = (w[p - 1], w[p]);
        w[p - 1] = second;
        w[p] = Face { i: first.i + 1, eps: first.eps };
    }
}

/// `σ : Δ_n → □_n` on objects: `k ↦ {σ(1), …, σ(k)}`.
pub fn sigma_vertex(sigma: &Permutation, k: usize) -> Result<CubeVertex> {
    if k > sigma.n() {
        return Err(Error::OutOfRange(format!("{k} exceeds {}", sigma.n())));
    }
    let elems: Vec<usize> = (1..=k).map(|j| sigma.image(j)).collect();
    CubeVertex::from_elements(sigma.n(), &elems)
}

/// The automorphism of `□_n` induced by `σ`: `A ↦ σ(A)`.
pub fn permute_mask(sigma: &Permutation, mask: u32) -> u32 {
    (1..=sigma.n()).filter(|&e| mask & (1 << (e - 1)) != 0).fold(0, |acc, e| acc | 1 << (sigma.image(e) - 1))
}

/// Simplicial coface `∂_i : [n−1] → [n]`, skipping `i`.
pub fn simplicial_face(i: usize, k: usize) -> usize {
    if k < i {
        k
    } else {
        k + 1
    }
}

/// A trunk map `□_n → X` in its η-form: the labels `(x_1, …, x_n)` of the
/// generator edges `[k−1] → [k]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RackCubeLabel {
    pub gens: Vec<usize>,
}

impl RackCubeLabel {
    pub fn new(rack: &FiniteShelf, gens: Vec<usize>) -> Result<Self> {
        check_dim(gens.len())?;
        if let Some(x) = gens.iter().find(|&&x| x >= rack.size()) {
            return Err(Error::OutOfRange(format!("{x} is not an element of {}", rack.name())));
        }
        Ok(Self { gens })
    }

    pub fn n(&self) -> usize {
        self.gens.len()
    }

    /// Label of the edge `A → A ∪ {b}`: the right-bracketed product of
    /// `x_c` over `c ∈ {1, …, b} \ A`, ending with `x_b`.
    pub fn label_edge(&self, rack: &FiniteShelf, a: CubeVertex, b: usize) -> Result<usize> {
        if b == 0 || b > self.n() {
            return Err(Error::OutOfRange(format!("{b} outside 1..={}", self.n())));
        }
        if a.contains(b) {
            return Err(Error::NotInSet(format!("{b} already belongs to {:?}", a.elements())));
        }
        Ok(label_edge_mask(rack, &self.gens, a.mask, b))
    }

    /// The full edge labelling, in [`edges`] order.
    pub fn labelling(&self, rack: &FiniteShelf) -> Vec<usize> {
        edges(self.n()).iter().map(|&(a, b)| label_edge_mask(rack, &self.gens, a, b)).collect()
    }
}

#[inline]
pub(crate) fn label_edge_mask(rack: &FiniteShelf, gens: &[usize], mask: u32, b: usize) -> usize {
    let mut acc = gens[b - 1];
    for c in (1..b).rev() {
        if mask & (1 << (c - 1)) == 0 {
            acc = rack.op(gens[c - 1], acc);
        }
    }
    acc
}

/// Faces of the nerve of a rack on η-tuples:
/// `ε = 1` deletes `x_i`, `ε = 0` gives `(x_1, …, x_{i−1}, x_i ▷ x_{i+1}, …, x_i ▷ x_n)`.
pub fn nerve_face(rack: &FiniteShelf, i: usize, eps: u8, tuple: &[usize]) -> Result<Vec<usize>> {
    let n = tuple.len();
    if i == 0 || i > n {
        return Err(Error::OutOfRange(format!("face index {i} outside 1..={n}")));
    }
    Ok(nerve_face_unchecked(rack, i, eps, tuple))
}

#[inline]
pub(crate) fn nerve_face_unchecked(rack: &FiniteShelf, i: usize, eps: u8, tuple: &[usize]) -> Vec<usize> {
    let xi = tuple[i - 1];
    let mut out = Vec::with_capacity(tuple.len() - 1);
    out.extend_from_slice(&tuple[..i - 1]);
    if eps == 1 {
        out.extend_from_slice(&tuple[i..]);
    } else {
        out.extend(tuple[i..].iter().map(|&y| rack.op(xi, y)));
    }
    out
}

/// Edges of `□_n` as `(A, k)`, sorted by `A` then `k`.
pub fn edges(n: usize) -> Vec<(u32, usize)> {
    let mut out = Vec::new();
    for mask in 0..1u32 << n {
        for k in 1..=n {
            if mask & (1 << (k - 1)) == 0 {
                out.push((mask, k));
            }
        }
    }
    out
}

/// Position of the edge `(a, k)` in [`edges`]`(n)`: every smaller vertex
/// `m` contributes its `n − |m|` outgoing edges.
fn edge_position(n: usize, a: u32, k: usize) -> usize {
    let a = a as usize;
    // total popcount of 0..a, bit by bit
    let bits_below: usize = (0..n)
        .map(|j| {
            let period = 1usize << (j + 1);
            (a / period) * (period / 2) + (a % period).saturating_sub(period / 2)
        })
        .sum();
    let free_before = (1..k).filter(|&j| a & (1 << (j - 1)) == 0).count();
    n * a - bits_below + free_before
}

fn edge_index(n: usize) -> impl Fn(u32, usize) -> usize {
    move |a, k| edge_position(n, a, k)
}

/// Preferred squares `(a, b, c, d)` of `□_n` as edge indices: for `k < l`
/// outside `A`, `a = (A, k)`, `b = (A+k, l)`, `c = (A, l)`, `d = (A+l, k)`.
pub fn preferred_squares(n: usize) -> Vec<[usize; 4]> {
    let idx = edge_index(n);
    let mut out = Vec::new();
    for mask in 0..1u32 << n {
        for k in 1..=n {
            for l in k + 1..=n {
                let (bk, bl) = (1u32 << (k - 1), 1u32 << (l - 1));
                if mask & (bk | bl) == 0 {
                    out.push([idx(mask, k), idx(mask | bk, l), idx(mask, l), idx(mask | bl, k)]);
                }
            }
        }
    }
    out
}

/// Ceiling on `|X|^{#edges}` for brute-force enumeration.
pub const ENUMERATION_GUARD: u64 = 531_441; // 3^12

/// Every edge labelling of `□_n` by rack elements that sends each preferred
/// square `(a, b, c, d)` to one with `c = a ▷ b` and `d = a`, in
/// lexicographic order of the labelling.
pub fn enumerate_trunk_maps(rack: &FiniteShelf, n: usize) -> Result<Vec<Vec<usize>>> {
    check_dim(n)?;
    let e = edges(n).len();
    let size = rack.size() as u64;
    let total = (0..e).try_fold(1u64, |acc, _| acc.checked_mul(size)).filter(|&t| t <= ENUMERATION_GUARD);
    if total.is_none() {
        return Err(Error::Guard(format!("{} labellings of □_{n} exceed {ENUMERATION_GUARD}", rack.size())));
    }
    if e > 0 && size == 0 {
        return Ok(Vec::new());
    }
    let squares = preferred_squares(n);
    let mut out = Vec::new();
    let mut lab = vec![0usize; e];
    loop {
        if squares.iter().all(|&[a, b, c, d]| lab[c] == rack.op(lab[a], lab[b]) && lab[d] == lab[a]) {
            out.push(lab.clone());
        }
        // odometer, last edge fastest
        let Some(pos) = (0..e).rev().find(|&p| lab[p] + 1 < rack.size()) else { break };
        lab[pos] += 1;
        lab[pos + 1..].iter_mut().for_each(|v| *v = 0);
    }
    Ok(out)
}

/// `η`: read off the generator edges `[k−1] → [k]` of a labelling.
pub fn eta(n: usize, labelling: &[usize]) -> Vec<usize> {
    let idx = edge_index(n);
    (1..=n).map(|k| labelling[idx((1u32 << (k - 1)) - 1, k)]).collect()
}

/// Precompose a labelling of `□_n` with `∂_{i,ε} : □_{n−1} → □_n`.
pub fn restrict_labelling(n: usize, i: usize, eps: u8, labelling: &[usize]) -> Vec<usize> {
    let idx = edge_index(n);
    edges(n - 1)
        .into_iter()
        .map(|(a, k)| labelling[idx(face_mask(i, eps, a), face_coordinate(i, k))])
        .collect()
}

/// A functor `□_n → G` (the group seen as a one-object category), stored as
/// its edge labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupCubeFunctor {
    pub n: usize,
    /// Labels in [`edges`] order.
    pub labels: Vec<usize>,
}

/// The functor `□_n → G` attached to `(g_1, …, g_n)` through the rack trunk
/// of `Conj(G)`: edge `A → A ∪ {b}` carries the right-bracketed conjugate
/// product of the generators (for abelian `G` simply `g_b`). Every preferred
/// square commutes, so morphisms `A ⊆ B` are well defined path products.
pub fn extend_group_functor(g: &FiniteGroup, gens: &[usize]) -> Result<GroupCubeFunctor> {
    let n = gens.len();
    check_dim(n)?;
    if let Some(x) = gens.iter().find(|&&x| x >= g.size()) {
        return Err(Error::OutOfRange(format!("{x} is not an element of {}", g.name())));
    }
    Ok(functor_in_conj(&crate::structures::conj_rack(g), gens))
}

/// [`extend_group_functor`] with `Conj(G)` already built; `gens` must be
/// elements of the group.
pub(crate) fn functor_in_conj(conj: &FiniteShelf, gens: &[usize]) -> GroupCubeFunctor {
    let labels = edges(gens.len()).into_iter().map(|(a, b)| label_edge_mask(conj, gens, a, b)).collect();
    GroupCubeFunctor { n: gens.len(), labels }
}

impl GroupCubeFunctor {
    pub fn edge(&self, a: u32, k: usize) -> usize {
        edge_index(self.n)(a, k)
    }

    /// Image of the morphism `A ⊆ B`: product of edge labels along the path
    /// adding the elements of `B \ A` in increasing order.
    pub fn morphism(&self, g: &FiniteGroup, a: u32, b: u32) -> usize {
        debug_assert_eq!(a & !b, 0, "not an inclusion");
        let idx = edge_index(self.n);
        let mut cur = a;
        let mut acc = g.identity();
        for k in 1..=self.n {
            let bit = 1u32 << (k - 1);
            if b & bit != 0 && cur & bit == 0 {
                acc = g.mul(acc, self.labels[idx(cur, k)]);
                cur |= bit;
            }
        }
        acc
    }

    /// Every preferred square commutes in `G`.
    pub fn is_functor(&self, g: &FiniteGroup) -> bool {
        preferred_squares(self.n)
            .iter()
            .all(|&[a, b, c, d]| g.mul(self.labels[a], self.labels[b]) == g.mul(self.labels[c], self.labels[d]))
    }

    /// `λ`: the generator edges `[k−1] → [k]`.
    pub fn lambda_tuple(&self) -> Vec<usize> {
        eta(self.n, &self.labels)
    }
}
