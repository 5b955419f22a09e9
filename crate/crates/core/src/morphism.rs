//! The cochain morphism `S : C^•(G, A) → CR^•(Conj(G), A)`,
//!
//! ```text
//! Sⁿ(f)(x_1..x_n) = Σ_{σ ∈ S_n} ε(σ) f(y_1..y_n),
//! y_k = x_{i_1} ▷ (… ▷ (x_{i_j} ▷ x_{σ(k)}))
//! ```
//!
//! with `i_1 < … < i_j < σ(k)` running over `{σ(k+1), …, σ(n)}`, and its
//! verification as a chain map and as an algebra morphism.

use serde::{Deserialize, Serialize};

use crate::cochain::{index_tuple, tuple_count, tuple_index, Cochain, CochainKind, Complex};
use crate::combinatorics::{all_permutations, Permutation};
use crate::cubical::{label_edge_mask, GroupCubeFunctor, RackCubeLabel};
use crate::error::{Error, Result};
use crate::linalg::{kernel_mod_p, rank_mod_p, Matrix};
use crate::products::{cup, degree_tuples, run_harness, star, Failure, ProductReport, Sampling};
use crate::scalar::{Coefficient, CoefficientDomain};
use crate::structures::{conj_rack, FiniteGroup, FiniteRack};

pub const MAX_S_DEGREE: usize = 6;

/// Labellings examined by [`composite_s_check`] are capped at this many
/// `(σ, x)` pairs.
pub const COMPOSITE_GUARD: usize = 1 << 20;

struct PreparedPerm {
    sign: i8,
    edges: Vec<(u32, usize)>,
}

fn prepare(n: usize) -> Result<Vec<PreparedPerm>> {
    if n > MAX_S_DEGREE {
        return Err(Error::Guard(format!(
            "S in degree {n} sums over {n}! permutations; degrees above {MAX_S_DEGREE} are refused"
        )));
    }
    Ok(all_permutations(n)
        .into_iter()
        .map(|s| {
            let mut mask = 0u32;
            let edges = (1..=n)
                .map(|k| {
                    let b = s.image(k);
                    let e = (mask, b);
                    mask |= 1 << (b - 1);
                    e
                })
                .collect();
            PreparedPerm { sign: s.sign(), edges }
        })
        .collect())
}

fn y_tuple(rack: &FiniteRack, p: &PreparedPerm, x: &[usize], y: &mut [usize]) {
    for (slot, &(mask, b)) in y.iter_mut().zip(&p.edges) {
        *slot = label_edge_mask(rack, x, mask, b);
    }
}

/// `Sⁿ(f)` for a group cochain `f` with trivial coefficients.
pub fn s_map<T: Coefficient>(g: &FiniteGroup, f: &Cochain<T>) -> Result<Cochain<T>> {
    if f.kind != CochainKind::Group || f.size != g.size() || f.width != 1 {
        return Err(Error::Mismatch(format!(
            "S takes group cochains on {} with trivial coefficients",
            g.name()
        )));
    }
    let n = f.degree;
    let perms = prepare(n)?;
    let conj = conj_rack(g);
    let mut y = vec![0; n];
    let values = (0..tuple_count(g.size(), n)?)
        .map(|r| {
            let x = index_tuple(g.size(), n, r);
            perms.iter().fold(T::zero(), |acc, p| {
                y_tuple(&conj, p, &x, &mut y);
                let v = f.at(&y);
                if v.is_zero() {
                    acc
                } else {
                    acc + v.clone().signed(p.sign)
                }
            })
        })
        .collect();
    Cochain::from_values(CochainKind::Rack, g.size(), n, values)
}

/// Integer matrix of `Sⁿ` in the tuple bases; column `j` is `S` of the
/// indicator of the `j`-th tuple of `Gⁿ`.
pub fn s_matrix(g: &FiniteGroup, n: usize) -> Result<Matrix<i64>> {
    let perms = prepare(n)?;
    let conj = conj_rack(g);
    let count = tuple_count(g.size(), n)?;
    let mut m = Matrix::zeros(count, count);
    let mut y = vec![0; n];
    for r in 0..count {
        let x = index_tuple(g.size(), n, r);
        for p in &perms {
            y_tuple(&conj, p, &x, &mut y);
            m.add_to(r, tuple_index(g.size(), &y), p.sign as i64);
        }
    }
    Ok(m)
}

/// `S` evaluated literally as the composite
/// `(η*)⁻¹ ∘ I ∘ T ∘ Σ ∘ λ`: each `x` is sent to its trunk map `η⁻¹(x)`,
/// pushed into the category `G` by the inclusion (every preferred square is
/// checked to commute there), extended to a functor on `□_n`, precomposed
/// with the chain functor `k ↦ σ([k])` and read off along its generating
/// arrows. Functor values on `A ⊆ B` are computed as `F(∅→A)⁻¹ F(∅→B)`.
pub fn s_map_composite<T: Coefficient>(g: &FiniteGroup, f: &Cochain<T>) -> Result<Cochain<T>> {
    let n = f.degree;
    let perms = all_permutations(n);
    let count = tuple_count(g.size(), n)?;
    if count.saturating_mul(perms.len()) > COMPOSITE_GUARD {
        return Err(Error::Guard(format!(
            "composite evaluation of S on {} in degree {n} exceeds {COMPOSITE_GUARD} (sigma, x) pairs",
            g.name()
        )));
    }
    let conj = conj_rack(g);
    let mut values = Vec::with_capacity(count);
    for r in 0..count {
        let x = index_tuple(g.size(), n, r);
        let labelling = RackCubeLabel { gens: x.clone() }.labelling(&conj);
        let functor = GroupCubeFunctor { n, labels: labelling };
        if !functor.is_functor(g) {
            return Err(Error::BrokenComplex(format!("trunk map of {x:?} does not commute in {}", g.name())));
        }
        let from_bottom = |b: u32| functor.morphism(g, 0, b);
        let mut acc = T::zero();
        for sigma in &perms {
            let chain = chain_masks(sigma);
            let y: Vec<usize> = (1..=n)
                .map(|k| g.mul(g.inv(from_bottom(chain[k - 1])), from_bottom(chain[k])))
                .collect();
            acc = acc + f.at(&y).clone().signed(sigma.sign());
        }
        values.push(acc);
    }
    Cochain::from_values(CochainKind::Rack, g.size(), n, values)
}

/// Vertices `σ([0]), σ([1]), …, σ([n])` of the chain functor `Δ_n → □_n`.
fn chain_masks(sigma: &Permutation) -> Vec<u32> {
    let mut out = vec![0u32];
    for k in 1..=sigma.n() {
        out.push(out[k - 1] | 1 << (sigma.image(k) - 1));
    }
    out
}

/// A failing entry of a matrix identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixMismatch {
    pub row_tuple: Vec<usize>,
    pub col_tuple: Vec<usize>,
    pub lhs: i64,
    pub rhs: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainMapDegree {
    /// `d_R^{n+1} ∘ Sⁿ = S^{n+1} ∘ d_G^{n+1}` is checked for this `n`.
    pub degree: usize,
    pub rows: usize,
    pub cols: usize,
    pub nonzero_entries: usize,
    pub pass: bool,
    pub mismatch: Option<MatrixMismatch>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedH1 {
    pub prime: u64,
    pub dim_group_h1: usize,
    pub dim_rack_hr1: usize,
    pub rank: usize,
    pub injective: bool,
    /// `S¹` applied to a basis of group 1-cocycles, reduced mod `p`; one
    /// column per cocycle.
    pub images: Matrix<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MorphismReport {
    pub group: String,
    pub coefficients: String,
    pub degrees: [usize; 2],
    pub chain_map: Vec<ChainMapDegree>,
    pub chain_map_pass: bool,
    pub algebra_morphism: Option<ProductReport>,
    pub algebra_morphism_pass: Option<bool>,
    pub composite_pass: Option<bool>,
    pub injectivity: Vec<InducedH1>,
}

impl MorphismReport {
    pub fn pass(&self) -> bool {
        self.chain_map_pass
            && self.algebra_morphism_pass.unwrap_or(true)
            && self.composite_pass.unwrap_or(true)
            && self.injectivity.iter().all(|i| i.injective)
    }
}

/// Exact matrix check of `d_R ∘ Sⁿ = S^{n+1} ∘ d_G` for a single `n`,
/// with entries compared mod `modulus` (0 for the integers).
pub fn chain_map_degree(g: &FiniteGroup, n: usize, modulus: u64) -> Result<ChainMapDegree> {
    let conj = conj_rack(g);
    let d_r = Complex::Rack(&conj).diff_matrix_i64(n)?;
    let d_g = Complex::Group(g).diff_matrix_i64(n)?;
    let lhs = d_r.mul(&s_matrix(g, n)?)?;
    let rhs = s_matrix(g, n + 1)?.mul(&d_g)?;
    let reduce = |v: i64| if modulus == 0 { v } else { v.rem_euclid(modulus as i64) };
    let mut mismatch = None;
    let mut nonzero = 0;
    'scan: for i in 0..lhs.rows() {
        for j in 0..lhs.cols() {
            let (a, b) = (reduce(*lhs.get(i, j)), reduce(*rhs.get(i, j)));
            if a != 0 {
                nonzero += 1;
            }
            if a != b {
                mismatch = Some(MatrixMismatch {
                    row_tuple: index_tuple(g.size(), n + 1, i),
                    col_tuple: index_tuple(g.size(), n, j),
                    lhs: a,
                    rhs: b,
                });
                break 'scan;
            }
        }
    }
    Ok(ChainMapDegree {
        degree: n,
        rows: lhs.rows(),
        cols: lhs.cols(),
        nonzero_entries: nonzero,
        pass: mismatch.is_none(),
        mismatch,
    })
}

/// Chain-map identity for every `n < max_degree`.
pub fn verify_chain_map(g: &FiniteGroup, coefficients: &str, modulus: u64, max_degree: usize) -> Result<MorphismReport> {
    let chain_map = (0..max_degree).map(|n| chain_map_degree(g, n, modulus)).collect::<Result<Vec<_>>>()?;
    Ok(MorphismReport {
        group: g.name().to_string(),
        coefficients: coefficients.to_string(),
        degrees: [0, max_degree],
        chain_map_pass: chain_map.iter().all(|c| c.pass),
        chain_map,
        algebra_morphism: None,
        algebra_morphism_pass: None,
        composite_pass: None,
        injectivity: Vec::new(),
    })
}

/// `S(f ∪ g) = S(f) ⋆ S(g)` over pairs of group cochains with total degree
/// at most `max_degree`.
pub fn verify_algebra_morphism<T: Coefficient, D: CoefficientDomain<T>>(
    g: &FiniteGroup,
    domain: &D,
    coefficients: &str,
    max_degree: usize,
    sampling: Sampling,
) -> Result<ProductReport> {
    let conj = conj_rack(g);
    let check = |c: &[Cochain<T>]| -> Result<Failure<T>> {
        let lhs = s_map(g, &cup(g, &c[0], &c[1])?)?;
        let rhs = star(&conj, &s_map(g, &c[0])?, &s_map(g, &c[1])?)?;
        Ok((lhs != rhs).then(|| ("S(f u g) = S(f) * S(g)".to_string(), lhs, rhs)))
    };
    run_harness(
        "algebra-morphism",
        g.name(),
        coefficients,
        CochainKind::Group,
        g.size(),
        &degree_tuples(2, max_degree),
        sampling,
        domain,
        &check,
    )
}

/// `s_map` and `s_map_composite` agree on every basis cochain of degree `n`.
pub fn composite_s_check(g: &FiniteGroup, n: usize) -> Result<bool> {
    let count = tuple_count(g.size(), n)?;
    for idx in 0..count {
        let f = Cochain::basis(CochainKind::Group, g.size(), n, idx, 1i64)?;
        if s_map(g, &f)? != s_map_composite(g, &f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dimensions of `H¹(G, Z/p)` and `HR¹(Conj G, Z/p)` and the rank of the
/// map induced by `S¹`.
pub fn induced_h1(g: &FiniteGroup, p: u64) -> Result<InducedH1> {
    let conj = conj_rack(g);
    let zg = kernel_mod_p(&Complex::Group(g).diff_matrix_i64(1)?, p)?;
    let d_r1 = Complex::Rack(&conj).diff_matrix_i64(1)?;
    let b_r = Complex::Rack(&conj).diff_matrix_i64(0)?;
    let dim_rack_hr1 = d_r1.cols() - rank_mod_p(&d_r1, p)? - rank_mod_p(&b_r, p)?;
    let b_g = Complex::Group(g).diff_matrix_i64(0)?;
    let dim_group_h1 = zg.len() - rank_mod_p(&b_g, p)?;

    let s1 = s_matrix(g, 1)?;
    let mut z = Matrix::zeros(s1.cols(), zg.len());
    for (j, v) in zg.iter().enumerate() {
        for (r, &e) in v.iter().enumerate() {
            z.set(r, j, e as i64);
        }
    }
    let images = s1.mul(&z)?.map(|v| v.rem_euclid(p as i64));
    // S is a chain map, so group coboundaries land in the rack coboundaries
    let rank = rank_mod_p(&images.hconcat(&b_r)?, p)? - rank_mod_p(&b_r, p)?;
    Ok(InducedH1 { prime: p, dim_group_h1, dim_rack_hr1, rank, injective: rank == dim_group_h1, images })
}
