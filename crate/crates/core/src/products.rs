//! Dendriform products on rack cochains, the cup product on group
//! cochains, and harnesses that check their identities.
//!
//! For `σ ∈ Sh_{p1,p2}` and `x ∈ X^{p1+p2}` put
//! `y_k = x_{i_1} ▷ (… ▷ (x_{i_j} ▷ x_{σ(k)}))` where `i_1 < … < i_j` are the
//! indices of the second block below `σ(k)`, and `z_k = x_{σ(p1+k)}`. Then
//!
//! ```text
//! (f1 ≻ f2)(x) = Σ_{σ(p1+p2) = p1+p2} ε(σ) f1(y) f2(z)
//! (f1 ≺ f2)(x) = Σ_{σ(p1)    = p1+p2} ε(σ) f1(y) f2(z)
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cochain::{group_diff, index_tuple, rack_diff, tuple_count, Cochain, CochainKind};
use crate::combinatorics::{shuffles, Permutation, ShuffleClass};
use crate::cubical::{self, label_edge_mask};
use crate::error::{Error, Result};
use crate::scalar::{Coefficient, CoefficientDomain};
use crate::structures::{FiniteGroup, FiniteShelf};

/// Output sizes at or above this are evaluated in parallel.
const PAR_THRESHOLD: usize = 4096;

/// A shuffle prepared for evaluation: sign, the edges `(σ([k−1]), σ(k))`
/// giving `y`, and the positions `σ(p1+k)` giving `z`.
struct PreparedShuffle {
    sign: i8,
    y_edges: Vec<(u32, usize)>,
    z_pos: Vec<usize>,
}

fn prepare(p1: usize, p2: usize, class: ShuffleClass) -> Vec<PreparedShuffle> {
    shuffles(p1, p2, class)
        .into_iter()
        .map(|s| {
            let mut mask = 0u32;
            let mut y_edges = Vec::with_capacity(p1);
            for k in 1..=p1 {
                let b = s.perm.image(k);
                y_edges.push((mask, b));
                mask |= 1 << (b - 1);
            }
            let z_pos = (1..=p2).map(|k| s.perm.image(p1 + k)).collect();
            PreparedShuffle { sign: s.sign, y_edges, z_pos }
        })
        .collect()
}

fn evaluate<T: Coefficient>(size: usize, n: usize, kind: CochainKind, f: impl Fn(&[usize]) -> T + Sync) -> Result<Cochain<T>> {
    let len = tuple_count(size, n)?;
    let values = if len >= PAR_THRESHOLD {
        (0..len).into_par_iter().map(|r| f(&index_tuple(size, n, r))).collect()
    } else {
        (0..len).map(|r| f(&index_tuple(size, n, r))).collect()
    };
    Ok(Cochain { kind, size, degree: n, width: 1, values })
}

fn check_pair<T: Coefficient>(size: usize, kind: CochainKind, f1: &Cochain<T>, f2: &Cochain<T>) -> Result<()> {
    for f in [f1, f2] {
        if f.kind != kind || f.size != size || f.width != 1 {
            return Err(Error::Mismatch(format!(
                "expected {kind:?} cochains on {size} elements with trivial coefficients"
            )));
        }
    }
    Ok(())
}

/// Shuffle-class product; `≻` uses `TopFixed`, `≺` uses `LeftMax`.
pub fn shuffle_product<T: Coefficient>(
    rack: &FiniteShelf,
    f1: &Cochain<T>,
    f2: &Cochain<T>,
    class: ShuffleClass,
) -> Result<Cochain<T>> {
    check_pair(rack.size(), CochainKind::Rack, f1, f2)?;
    let (p1, p2) = (f1.degree, f2.degree);
    let prepared = prepare(p1, p2, class);
    evaluate(rack.size(), p1 + p2, CochainKind::Rack, |x| {
        let mut acc = T::zero();
        let mut y = vec![0usize; p1];
        let mut z = vec![0usize; p2];
        for s in &prepared {
            for (slot, &(mask, b)) in y.iter_mut().zip(&s.y_edges) {
                *slot = label_edge_mask(rack, x, mask, b);
            }
            let a = f1.at(&y);
            if a.is_zero() {
                continue;
            }
            for (slot, &pos) in z.iter_mut().zip(&s.z_pos) {
                *slot = x[pos - 1];
            }
            let b = f2.at(&z);
            if b.is_zero() {
                continue;
            }
            acc = acc + (a.clone() * b.clone()).signed(s.sign);
        }
        acc
    })
}

/// `f1 ≻ f2`.
pub fn succ<T: Coefficient>(rack: &FiniteShelf, f1: &Cochain<T>, f2: &Cochain<T>) -> Result<Cochain<T>> {
    shuffle_product(rack, f1, f2, ShuffleClass::TopFixed)
}

/// `f1 ≺ f2`.
pub fn prec<T: Coefficient>(rack: &FiniteShelf, f1: &Cochain<T>, f2: &Cochain<T>) -> Result<Cochain<T>> {
    shuffle_product(rack, f1, f2, ShuffleClass::LeftMax)
}

/// `f1 ⋆ f2`, summed over all shuffles in one pass.
pub fn star<T: Coefficient>(rack: &FiniteShelf, f1: &Cochain<T>, f2: &Cochain<T>) -> Result<Cochain<T>> {
    let p1 = f1.degree;
    if p1 == 0 || f2.degree == 0 {
        // with an empty block the two classes hold the same identity shuffle
        // only once between them
        return succ(rack, f1, f2)?.add(&prec(rack, f1, f2)?);
    }
    shuffle_product(rack, f1, f2, ShuffleClass::All)
}

/// `f1 ∪ f2` on group cochains: `f1(x_1..x_{p1}) · f2(x_{p1+1}..)`.
pub fn cup<T: Coefficient>(g: &FiniteGroup, f1: &Cochain<T>, f2: &Cochain<T>) -> Result<Cochain<T>> {
    check_pair(g.size(), CochainKind::Group, f1, f2)?;
    let p1 = f1.degree;
    evaluate(g.size(), p1 + f2.degree, CochainKind::Group, |x| {
        let a = f1.at(&x[..p1]);
        if a.is_zero() {
            return T::zero();
        }
        a.clone() * f2.at(&x[p1..]).clone()
    })
}

/// `ρ_σ` for a shuffle `σ` of `blocks`: restrict a trunk-map labelling of
/// `□_n` along each `σ ∘ i_{p_j}` and return the η-tuples of the pieces.
///
/// The block embeddings are computed by composing face maps, independently
/// of the closed formulas used in [`shuffle_product`].
pub fn rho(sigma: &Permutation, blocks: &[usize], labelling: &[usize]) -> Vec<Vec<usize>> {
    let n = sigma.n();
    let all_edges = cubical::edges(n);
    let lookup = |a: u32, k: usize| labelling[all_edges.iter().position(|&e| e == (a, k)).expect("edge")];
    let mut out = Vec::new();
    let mut before = 0;
    for (j, &p) in blocks.iter().enumerate() {
        let after: usize = blocks[j + 1..].iter().sum();
        // i_{p_j}: first ∂_{1,1} `before` times, then ∂_{·,0} on the tail
        let mut word = Vec::new();
        for m in p..p + before {
            let _ = m;
            word.push(cubical::Face { i: 1, eps: 1 });
        }
        for m in p + before + 1..=p + before + after {
            word.push(cubical::Face { i: m, eps: 0 });
        }
        let vmap = cubical::face_word_vertex_map(p, &word);
        let embedded: Vec<u32> = vmap.iter().map(|&m| cubical::permute_mask(sigma, m)).collect();
        let gens = (1..=p)
            .map(|k| {
                let src = embedded[(1usize << (k - 1)) - 1];
                let dst = embedded[(1usize << k) - 1];
                let added = dst & !src;
                debug_assert_eq!(added.count_ones(), 1);
                lookup(src, added.trailing_zeros() as usize + 1)
            })
            .collect();
        out.push(gens);
        before += p;
    }
    out
}

/// `≻` or `≺` computed through `ρ_σ` on full trunk-map labellings
/// (`η^{-1}` of each tuple); a cross-check of the explicit formulas.
pub fn shuffle_product_via_cubes<T: Coefficient>(
    rack: &FiniteShelf,
    f1: &Cochain<T>,
    f2: &Cochain<T>,
    class: ShuffleClass,
) -> Result<Cochain<T>> {
    check_pair(rack.size(), CochainKind::Rack, f1, f2)?;
    let (p1, p2) = (f1.degree, f2.degree);
    let shuffles = shuffles(p1, p2, class);
    evaluate(rack.size(), p1 + p2, CochainKind::Rack, |x| {
        let labelling = cubical::RackCubeLabel { gens: x.to_vec() }.labelling(rack);
        shuffles.iter().fold(T::zero(), |acc, s| {
            let parts = rho(&s.perm, &[p1, p2], &labelling);
            acc + (f1.at(&parts[0]).clone() * f2.at(&parts[1]).clone()).signed(s.sign)
        })
    })
}

/// A graded algebra with two products, checked against the dendriform
/// axioms by the harness below.
pub trait Dendriform<T: Coefficient>: Sync {
    fn succ(&self, a: &Cochain<T>, b: &Cochain<T>) -> Result<Cochain<T>>;
    fn prec(&self, a: &Cochain<T>, b: &Cochain<T>) -> Result<Cochain<T>>;
    fn star(&self, a: &Cochain<T>, b: &Cochain<T>) -> Result<Cochain<T>> {
        self.succ(a, b)?.add(&self.prec(a, b)?)
    }
    fn diff(&self, a: &Cochain<T>) -> Result<Cochain<T>>;
    fn size(&self) -> usize;
    fn name(&self) -> String;
}

/// The rack cochain algebra `CR^•(X, A)`.
pub struct RackProducts<'a> {
    pub rack: &'a FiniteShelf,
}

impl<T: Coefficient> Dendriform<T> for RackProducts<'_> {
    fn succ(&self, a: &Cochain<T>, b: &Cochain<T>) -> Result<Cochain<T>> {
        succ(self.rack, a, b)
    }
    fn prec(&self, a: &Cochain<T>, b: &Cochain<T>) -> Result<Cochain<T>> {
        prec(self.rack, a, b)
    }
    fn star(&self, a: &Cochain<T>, b: &Cochain<T>) -> Result<Cochain<T>> {
        star(self.rack, a, b)
    }
    fn diff(&self, a: &Cochain<T>) -> Result<Cochain<T>> {
        rack_diff(self.rack, a)
    }
    fn size(&self) -> usize {
        self.rack.size()
    }
    fn name(&self) -> String {
        self.rack.name().to_string()
    }
}

/// Negative control: `≺` with its sign flipped.
pub struct SignFlippedPrec<A>(pub A);

impl<T: Coefficient, A: Dendriform<T>> Dendriform<T> for SignFlippedPrec<A> {
    fn succ(&self, a: &Cochain<T>, b: &Cochain<T>) -> Result<Cochain<T>> {
        self.0.succ(a, b)
    }
    fn prec(&self, a: &Cochain<T>, b: &Cochain<T>) -> Result<Cochain<T>> {
        Ok(self.0.prec(a, b)?.scaled_by_sign(-1))
    }
    fn diff(&self, a: &Cochain<T>) -> Result<Cochain<T>> {
        self.0.diff(a)
    }
    fn size(&self) -> usize {
        self.0.size()
    }
    fn name(&self) -> String {
        format!("{} (sign-flipped prec)", self.0.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// Which equation failed, e.g. `"(x<y)<z = x<(y<z) + x<(y>z)"`.
    pub equation: String,
    pub degrees: Vec<usize>,
    /// Value tables of the input cochains, in tuple-index order.
    pub cochains: Vec<Vec<String>>,
    pub tuple: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductReport {
    pub identity: String,
    pub structure: String,
    pub coefficients: String,
    pub degrees: Vec<Vec<usize>>,
    pub trials: usize,
    pub pass: bool,
    pub counterexample: Option<Counterexample>,
}

/// How input cochains are produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "mode")]
pub enum Sampling {
    /// Every combination of basis cochains (a coefficient basis element on
    /// a single tuple).
    Exhaustive,
    /// `trials` seeded random draws per degree combination.
    Random { trials: usize, seed: u64 },
}

/// Degree tuples of the given arity with entries summing to at most `max`.
pub fn degree_tuples(arity: usize, max: usize) -> Vec<Vec<usize>> {
    fn rec(arity: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == arity {
            out.push(cur.clone());
            return;
        }
        for d in 0..=left {
            cur.push(d);
            rec(arity, left - d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(arity, max, &mut Vec::new(), &mut out);
    out
}

/// An equation between two cochains; `None` means it holds.
/// A failed equation: its name and the two sides.
pub type Failure<T> = Option<(String, Cochain<T>, Cochain<T>)>;

type Check<'c, T> = dyn Fn(&[Cochain<T>]) -> Result<Failure<T>> + Sync + 'c;

fn basis_cochains<T: Coefficient, D: CoefficientDomain<T>>(
    kind: CochainKind,
    size: usize,
    degree: usize,
    domain: &D,
) -> Result<Vec<Cochain<T>>> {
    let coeffs = domain.basis();
    let count = tuple_count(size, degree)?;
    let mut out = Vec::with_capacity(count * coeffs.len());
    for idx in 0..count {
        for c in &coeffs {
            out.push(Cochain::basis(kind, size, degree, idx, c.clone())?);
        }
    }
    Ok(out)
}

fn to_counterexample<T: Coefficient>(
    inputs: &[Cochain<T>],
    equation: String,
    lhs: &Cochain<T>,
    rhs: &Cochain<T>,
) -> Counterexample {
    let tuple = lhs.first_difference(rhs).unwrap_or_default();
    Counterexample {
        equation,
        degrees: inputs.iter().map(|c| c.degree).collect(),
        cochains: inputs.iter().map(Cochain::render).collect(),
        lhs: lhs.at(&tuple).to_string(),
        rhs: rhs.at(&tuple).to_string(),
        tuple,
    }
}

/// Run `check` over every degree combination in `degrees`, feeding it
/// cochains per `sampling`. Stops at the first counterexample.
#[allow(clippy::too_many_arguments)]
pub fn run_harness<T: Coefficient, D: CoefficientDomain<T>>(
    identity: &str,
    structure: &str,
    coefficients: &str,
    kind: CochainKind,
    size: usize,
    degrees: &[Vec<usize>],
    sampling: Sampling,
    domain: &D,
    check: &Check<'_, T>,
) -> Result<ProductReport> {
    let mut trials = 0;
    let mut counterexample = None;
    'outer: for (deg_idx, degs) in degrees.iter().enumerate() {
        match sampling {
            Sampling::Exhaustive => {
                let bases: Vec<Vec<Cochain<T>>> =
                    degs.iter().map(|&d| basis_cochains(kind, size, d, domain)).collect::<Result<_>>()?;
                let total: usize = bases.iter().map(Vec::len).product();
                let combo = |mut i: usize| -> Vec<Cochain<T>> {
                    let mut pick = Vec::with_capacity(bases.len());
                    for b in bases.iter().rev() {
                        pick.push(b[i % b.len()].clone());
                        i /= b.len();
                    }
                    pick.reverse();
                    pick
                };
                let found = (0..total)
                    .into_par_iter()
                    .map(|i| {
                        let inputs = combo(i);
                        check(&inputs).map(|r| r.map(|(eq, l, r)| to_counterexample(&inputs, eq, &l, &r)))
                    })
                    .find_map_first(|r| match r {
                        Ok(None) => None,
                        other => Some(other),
                    });
                trials += total;
                if let Some(r) = found {
                    counterexample = Some(r?.expect("filtered"));
                    break 'outer;
                }
            }
            Sampling::Random { trials: t, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(deg_idx as u64));
                let draws: Vec<Vec<Cochain<T>>> = (0..t)
                    .map(|_| degs.iter().map(|&d| Cochain::random(kind, size, d, domain, &mut rng)).collect())
                    .collect::<Result<_>>()?;
                let found = draws
                    .par_iter()
                    .map(|inputs| check(inputs).map(|r| r.map(|(eq, l, r)| to_counterexample(inputs, eq, &l, &r))))
                    .find_map_first(|r| match r {
                        Ok(None) => None,
                        other => Some(other),
                    });
                trials += t;
                if let Some(r) = found {
                    counterexample = Some(r?.expect("filtered"));
                    break 'outer;
                }
            }
        }
    }
    Ok(ProductReport {
        identity: identity.to_string(),
        structure: structure.to_string(),
        coefficients: coefficients.to_string(),
        degrees: degrees.to_vec(),
        trials,
        pass: counterexample.is_none(),
        counterexample,
    })
}

fn compare<T: Coefficient>(eq: &str, lhs: Cochain<T>, rhs: Cochain<T>) -> Failure<T> {
    (lhs != rhs).then(|| (eq.to_string(), lhs, rhs))
}

/// The three dendriform axioms
/// `x≻(y≻z) = (x≻y)≻z + (x≺y)≻z`, `(x≻y)≺z = x≻(y≺z)`,
/// `(x≺y)≺z = x≺(y≺z) + x≺(y≻z)`.
pub fn check_dendriform<T: Coefficient, A: Dendriform<T>, D: CoefficientDomain<T>>(
    alg: &A,
    domain: &D,
    coefficients: &str,
    max_degree: usize,
    sampling: Sampling,
) -> Result<ProductReport> {
    let check = |c: &[Cochain<T>]| -> Result<Failure<T>> {
        let (x, y, z) = (&c[0], &c[1], &c[2]);
        let xsy = alg.succ(x, y)?;
        let xpy = alg.prec(x, y)?;
        let ysz = alg.succ(y, z)?;
        let ypz = alg.prec(y, z)?;
        let lhs = alg.succ(x, &ysz)?;
        let rhs = alg.succ(&xsy, z)?.add(&alg.succ(&xpy, z)?)?;
        if let Some(f) = compare("x>(y>z) = (x>y)>z + (x<y)>z", lhs, rhs) {
            return Ok(Some(f));
        }
        let lhs = alg.prec(&xsy, z)?;
        let rhs = alg.succ(x, &ypz)?;
        if let Some(f) = compare("(x>y)<z = x>(y<z)", lhs, rhs) {
            return Ok(Some(f));
        }
        let lhs = alg.prec(&xpy, z)?;
        let rhs = alg.prec(x, &ypz)?.add(&alg.prec(x, &ysz)?)?;
        Ok(compare("(x<y)<z = x<(y<z) + x<(y>z)", lhs, rhs))
    };
    run_harness(
        "dendriform",
        &alg.name(),
        coefficients,
        CochainKind::Rack,
        alg.size(),
        &degree_tuples(3, max_degree),
        sampling,
        domain,
        &check,
    )
}

/// `(x⋆y)⋆z = x⋆(y⋆z)`, with `⋆` evaluated directly over all shuffles.
pub fn check_star_associativity<T: Coefficient, A: Dendriform<T>, D: CoefficientDomain<T>>(
    alg: &A,
    domain: &D,
    coefficients: &str,
    max_degree: usize,
    sampling: Sampling,
) -> Result<ProductReport> {
    let check = |c: &[Cochain<T>]| -> Result<Failure<T>> {
        let lhs = alg.star(&alg.star(&c[0], &c[1])?, &c[2])?;
        let rhs = alg.star(&c[0], &alg.star(&c[1], &c[2])?)?;
        Ok(compare("(x*y)*z = x*(y*z)", lhs, rhs))
    };
    run_harness(
        "star-associativity",
        &alg.name(),
        coefficients,
        CochainKind::Rack,
        alg.size(),
        &degree_tuples(3, max_degree),
        sampling,
        domain,
        &check,
    )
}

/// `d(f1 ≻ f2) = df1 ≻ f2 + (−1)^{p1} f1 ≻ df2` and the same for `≺`.
pub fn check_leibniz<T: Coefficient, A: Dendriform<T>, D: CoefficientDomain<T>>(
    alg: &A,
    domain: &D,
    coefficients: &str,
    degrees: &[(usize, usize)],
    sampling: Sampling,
) -> Result<ProductReport> {
    let check = |c: &[Cochain<T>]| -> Result<Failure<T>> {
        let (f1, f2) = (&c[0], &c[1]);
        let sign = if f1.degree % 2 == 0 { 1 } else { -1 };
        let (d1, d2) = (alg.diff(f1)?, alg.diff(f2)?);
        let lhs = alg.diff(&alg.succ(f1, f2)?)?;
        let rhs = alg.succ(&d1, f2)?.add(&alg.succ(f1, &d2)?.scaled_by_sign(sign))?;
        if let Some(f) = compare("d(f>g) = df>g + (-1)^p f>dg", lhs, rhs) {
            return Ok(Some(f));
        }
        let lhs = alg.diff(&alg.prec(f1, f2)?)?;
        let rhs = alg.prec(&d1, f2)?.add(&alg.prec(f1, &d2)?.scaled_by_sign(sign))?;
        Ok(compare("d(f<g) = df<g + (-1)^p f<dg", lhs, rhs))
    };
    let degs: Vec<Vec<usize>> = degrees.iter().map(|&(a, b)| vec![a, b]).collect();
    run_harness(
        "leibniz",
        &alg.name(),
        coefficients,
        CochainKind::Rack,
        alg.size(),
        &degs,
        sampling,
        domain,
        &check,
    )
}

/// `d(f ∪ g) = df ∪ g + (−1)^{p} f ∪ dg` on group cochains.
pub fn check_cup_leibniz<T: Coefficient, D: CoefficientDomain<T>>(
    g: &FiniteGroup,
    domain: &D,
    coefficients: &str,
    max_degree: usize,
    sampling: Sampling,
) -> Result<ProductReport> {
    let check = |c: &[Cochain<T>]| -> Result<Failure<T>> {
        let (f1, f2) = (&c[0], &c[1]);
        let sign = if f1.degree % 2 == 0 { 1 } else { -1 };
        let lhs = group_diff(g, &cup(g, f1, f2)?)?;
        let rhs = cup(g, &group_diff(g, f1)?, f2)?.add(&cup(g, f1, &group_diff(g, f2)?)?.scaled_by_sign(sign))?;
        Ok(compare("d(f u g) = df u g + (-1)^p f u dg", lhs, rhs))
    };
    run_harness(
        "cup-leibniz",
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::{IntDomain, Mat2, Mat2Domain};

    fn rack_cochain(size: usize, degree: usize, f: impl Fn(&[usize]) -> i64) -> Cochain<i64> {
        Cochain::from_fn(CochainKind::Rack, size, degree, f).unwrap()
    }

    #[test]
    fn bidegree_one_one() {
        let r = fixtures::dihedral_quandle(5);
        let f1 = rack_cochain(5, 1, |t| t[0] as i64 + 2);
        let f2 = rack_cochain(5, 1, |t| 3 * t[0] as i64 - 1);
        let s = succ(&r, &f1, &f2).unwrap();
        let p = prec(&r, &f1, &f2).unwrap();
        let st = star(&r, &f1, &f2).unwrap();
        for x in 0..5 {
            for y in 0..5 {
                assert_eq!(*s.at(&[x, y]), f1.at(&[x]) * f2.at(&[y]));
                assert_eq!(*p.at(&[x, y]), -f1.at(&[r.op(x, y)]) * f2.at(&[x]));
                assert_eq!(*st.at(&[x, y]), s.at(&[x, y]) + p.at(&[x, y]));
            }
        }
    }

    #[test]
    fn star_vanishes_on_point_in_bidegree_one_one() {
        let r = fixtures::point_rack();
        let f = rack_cochain(1, 1, |_| 5);
        assert!(star(&r, &f, &f).unwrap().is_zero());
    }

    #[test]
    fn degree_zero_pairings() {
        let r = fixtures::dihedral_quandle(3);
        let f = rack_cochain(3, 2, |t| (t[0] * 3 + t[1]) as i64);
        let c = rack_cochain(3, 0, |_| 2);
        let doubled = rack_cochain(3, 2, |t| 2 * (t[0] * 3 + t[1]) as i64);
        assert_eq!(succ(&r, &c, &f).unwrap(), doubled);
        assert_eq!(prec(&r, &f, &c).unwrap(), doubled);
        assert!(prec(&r, &c, &f).unwrap().is_zero());
        assert!(succ(&r, &f, &c).unwrap().is_zero());
        assert_eq!(star(&r, &f, &c).unwrap(), doubled);
        assert_eq!(star(&r, &c, &c).unwrap(), rack_cochain(3, 0, |_| 4));
    }

    #[test]
    fn cup_formula() {
        let g = fixtures::cyclic_group(3);
        let f1 = Cochain::from_fn(CochainKind::Group, 3, 1, |t| t[0] as i64 + 1).unwrap();
        let f2 = Cochain::from_fn(CochainKind::Group, 3, 1, |t| 2 * t[0] as i64).unwrap();
        let c = cup(&g, &f1, &f2).unwrap();
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(*c.at(&[x, y]), f1.at(&[x]) * f2.at(&[y]));
            }
        }
        let unit = Cochain::from_values(CochainKind::Group, 3, 0, vec![3i64]).unwrap();
        assert_eq!(cup(&g, &unit, &f1).unwrap(), f1.scaled_by_sign(1).add(&f1).unwrap().add(&f1).unwrap());
    }

    #[test]
    fn cube_route_agrees_with_formulas() {
        for rack in [fixtures::dihedral_quandle(3), fixtures::trivial_rack(2)] {
            for (p1, p2) in [(1, 1), (1, 2), (2, 1), (2, 2), (0, 2), (2, 0)] {
                let f1 = rack_cochain(rack.size(), p1, |t| t.iter().fold(1, |a, &v| a * 7 + v as i64));
                let f2 = rack_cochain(rack.size(), p2, |t| t.iter().fold(3, |a, &v| a * 5 - v as i64));
                for class in [ShuffleClass::TopFixed, ShuffleClass::LeftMax] {
                    assert_eq!(
                        shuffle_product(&rack, &f1, &f2, class).unwrap(),
                        shuffle_product_via_cubes(&rack, &f1, &f2, class).unwrap(),
                        "{p1} {p2} {class:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn dendriform_on_point_and_negative_control() {
        let r = fixtures::point_rack();
        let alg = RackProducts { rack: &r };
        let rep = check_dendriform::<i64, _, _>(&alg, &IntDomain::default(), "Z", 3, Sampling::Exhaustive).unwrap();
        assert!(rep.pass);
        let d3 = fixtures::dihedral_quandle(3);
        let bad = SignFlippedPrec(RackProducts { rack: &d3 });
        let rep = check_dendriform::<i64, _, _>(&bad, &IntDomain::default(), "Z", 3, Sampling::Exhaustive).unwrap();
        assert!(!rep.pass);
        let cx = rep.counterexample.unwrap();
        assert_ne!(cx.lhs, cx.rhs);
    }

    #[test]
    fn dendriform_conj_s3_degree_one_basis() {
        let g = fixtures::symmetric_group_3();
        let r = crate::structures::conj_rack(&g);
        let alg = RackProducts { rack: &r };
        let check = |c: &[Cochain<i64>]| -> Result<Failure<i64>> {
            let lhs = alg.succ(&c[0], &alg.succ(&c[1], &c[2])?)?;
            let rhs = Dendriform::<i64>::succ(&alg, &alg.succ(&c[0], &c[1])?, &c[2])?
                .add(&alg.succ(&alg.prec(&c[0], &c[1])?, &c[2])?)?;
            Ok(compare("first axiom", lhs, rhs))
        };
        let rep = run_harness(
            "dendriform",
            "Conj(S3)",
            "Z",
            CochainKind::Rack,
            6,
            &[vec![1, 1, 1]],
            Sampling::Exhaustive,
            &IntDomain::default(),
            &check,
        )
        .unwrap();
        assert!(rep.pass);
        assert_eq!(rep.trials, 216);
    }

    #[test]
    fn noncommutative_coefficients_small() {
        let r = fixtures::dihedral_quandle(3);
        let alg = RackProducts { rack: &r };
        let dom = Mat2Domain { inner: IntDomain::default() };
        let rep = check_dendriform::<Mat2<i64>, _, _>(&alg, &dom, "mat2/Z", 2, Sampling::Random { trials: 5, seed: 9 })
            .unwrap();
        assert!(rep.pass, "{:?}", rep.counterexample);
    }

    #[test]
    fn degree_tuple_enumeration() {
        assert_eq!(degree_tuples(3, 1).len(), 4);
        assert_eq!(degree_tuples(3, 4).len(), 35);
        assert_eq!(degree_tuples(2, 0), vec![vec![0, 0]]);
    }
}
