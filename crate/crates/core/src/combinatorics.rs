//! Permutations, shuffles and the change-of-variable maps between them.
//!
//! Permutations are 1-based in one-line notation: `images[k-1] = σ(k)`.
//! Composition reads right to left, `(σ∘τ)(k) = σ(τ(k))`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (k, &v) in images.iter().enumerate() {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::NotInSet(format!("{images:?} is not a permutation (position {})", k + 1)));
            }
            seen[v - 1] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self { images: (1..=n).collect() }
    }

    /// The cycle `a_1 → a_2 → … → a_k → a_1` in `S_n`.
    pub fn cycle(n: usize, elems: &[usize]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        for (idx, &a) in elems.iter().enumerate() {
            if a == 0 || a > n {
                return Err(Error::OutOfRange(format!("cycle entry {a} outside 1..{n}")));
            }
            images[a - 1] = elems[(idx + 1) % elems.len()];
        }
        Self::new(images)
    }

    /// The consecutive cycle `(from from±1 … to)`, stepping up or down.
    pub fn consecutive_cycle(n: usize, from: usize, to: usize) -> Result<Self> {
        let elems: Vec<usize> = if from <= to { (from..=to).collect() } else { (to..=from).rev().collect() };
        Self::cycle(n, &elems)
    }

    /// The transposition `(a b)` in `S_n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::NotInSet(format!("({a} {b}) is not a transposition")));
        }
        Self::cycle(n, &[a, b])
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `σ(k)` for `k` in `1..=n`.
    #[inline]
    pub fn image(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    pub fn inversions(&self) -> usize {
        let n = self.n();
        (0..n).map(|i| (i + 1..n).filter(|&j| self.images[i] > self.images[j]).count()).sum()
    }

    /// `ε(σ) = (−1)^{inversions}`.
    pub fn sign(&self) -> i8 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "composing permutations of different degrees");
        Self { images: other.images.iter().map(|&k| self.image(k)).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.n()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v - 1] = k + 1;
        }
        Self { images }
    }

    /// Drop the fixed last point `n`; fails unless `σ(n) = n`.
    pub fn restrict(&self) -> Result<Self> {
        match self.images.last() {
            Some(&v) if v == self.n() => Ok(Self { images: self.images[..self.n() - 1].to_vec() }),
            _ => Err(Error::NotInSet(format!("{self} does not fix its last point"))),
        }
    }

    /// `σ(a..=b)` as a sorted subset.
    pub fn block_image(&self, range: std::ops::RangeInclusive<usize>) -> Vec<usize> {
        let mut v: Vec<usize> = range.map(|k| self.image(k)).collect();
        v.sort_unstable();
        v
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Blockwise concatenation: `σ` on `1..p`, `γ` shifted by `p` on the rest.
pub fn star(sigma: &Permutation, gamma: &Permutation) -> Permutation {
    let p = sigma.n();
    let images = sigma.images.iter().copied().chain(gamma.images.iter().map(|&v| v + p)).collect();
    Permutation { images }
}

/// All of `S_n` in lexicographic order of one-line notation.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=n).collect();
    loop {
        out.push(Permutation { images: cur.clone() });
        // next lexicographic permutation
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ShuffleClass {
    /// Every `(p1, p2)`-shuffle.
    All,
    /// `σ(p1 + p2) = p1 + p2`: the maximum comes from the second block.
    TopFixed,
    /// `σ(p1) = p1 + p2`: the maximum comes from the first block.
    LeftMax,
}

impl std::str::FromStr for ShuffleClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "all" => Ok(Self::All),
            "top-fixed" | "topfixed" | "succ" => Ok(Self::TopFixed),
            "left-max" | "leftmax" | "prec" => Ok(Self::LeftMax),
            _ => Err(Error::Parse(format!("unknown shuffle class `{s}`"))),
        }
    }
}

/// A shuffle with its sign.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shuffle {
    pub perm: Permutation,
    pub sign: i8,
}

/// Increasing `k`-subsets of `1..=n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            if n - v + 1 < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(1, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// The shuffle whose first block lands on `first` (sorted, within `1..=n`);
/// the sign is the parity of crossings between the two blocks.
fn shuffle_from_subset(n: usize, first: &[usize]) -> Shuffle {
    let mut images = first.to_vec();
    images.extend((1..=n).filter(|v| first.binary_search(v).is_err()));
    let crossings: usize = first.iter().enumerate().map(|(r, &s)| s - 1 - r).sum();
    Shuffle { perm: Permutation { images }, sign: if crossings.is_multiple_of(2) { 1 } else { -1 } }
}

/// The `(p1, p2)`-shuffles of the requested class, ordered by the
/// lexicographic order of `σ(1..p1)`.
///
/// With an empty block the only shuffle is the identity; it is placed in
/// `TopFixed` when `p1 = 0` and in `LeftMax` when `p2 = 0 < p1`, which
/// makes a degree-0 cochain act as a two-sided unit for `≻`/`≺` in the
/// dendriform sense (`c ≻ f = c f`, `f ≺ c = f c`).
pub fn shuffles(p1: usize, p2: usize, class: ShuffleClass) -> Vec<Shuffle> {
    let n = p1 + p2;
    let all = subsets(n, p1).into_iter().map(|s| shuffle_from_subset(n, &s));
    match class {
        ShuffleClass::All => all.collect(),
        ShuffleClass::TopFixed => {
            if p1 == 0 {
                all.collect()
            } else if p2 == 0 {
                Vec::new()
            } else {
                all.filter(|s| s.perm.image(n) == n).collect()
            }
        }
        ShuffleClass::LeftMax => {
            if p1 == 0 {
                Vec::new()
            } else if p2 == 0 {
                all.collect()
            } else {
                all.filter(|s| s.perm.image(p1) == n).collect()
            }
        }
    }
}

pub fn is_shuffle(sigma: &Permutation, blocks: &[usize]) -> bool {
    if blocks.iter().sum::<usize>() != sigma.n() {
        return false;
    }
    let mut start = 1;
    for &b in blocks {
        if (start..start + b).skip(1).any(|k| sigma.image(k - 1) > sigma.image(k)) {
            return false;
        }
        start += b;
    }
    true
}

/// `(p1, p2, p3)`-shuffles, ordered lexicographically by one-line notation.
pub fn triple_shuffles(p1: usize, p2: usize, p3: usize) -> Vec<Permutation> {
    let n = p1 + p2 + p3;
    let mut out = Vec::new();
    for a in subsets(n, p1) {
        let rest: Vec<usize> = (1..=n).filter(|v| a.binary_search(v).is_err()).collect();
        for b in subsets(p2 + p3, p2) {
            let mut images = a.clone();
            images.extend(b.iter().map(|&i| rest[i - 1]));
            images.extend((1..=p2 + p3).filter(|i| b.binary_search(i).is_err()).map(|i| rest[i - 1]));
            out.push(Permutation { images });
        }
    }
    out.sort();
    out
}

fn require_shuffle(sigma: &Permutation, blocks: &[usize], what: &str) -> Result<()> {
    if is_shuffle(sigma, blocks) {
        Ok(())
    } else {
        Err(Error::NotInSet(format!("{what} = {sigma} is not a {blocks:?}-shuffle")))
    }
}

/// `α(σ, γ) = σ ∘ (1_{p1} ⋆ γ)` for `σ ∈ Sh_{p1, p2+p3}`, `γ ∈ Sh_{p2, p3}`.
pub fn alpha(sigma: &Permutation, gamma: &Permutation, p: [usize; 3]) -> Result<Permutation> {
    require_shuffle(sigma, &[p[0], p[1] + p[2]], "σ")?;
    require_shuffle(gamma, &[p[1], p[2]], "γ")?;
    Ok(sigma.compose(&star(&Permutation::identity(p[0]), gamma)))
}

/// `β(σ, γ) = σ ∘ (γ ⋆ 1_{p3})` for `σ ∈ Sh_{p1+p2, p3}`, `γ ∈ Sh_{p1, p2}`.
pub fn beta(sigma: &Permutation, gamma: &Permutation, p: [usize; 3]) -> Result<Permutation> {
    require_shuffle(sigma, &[p[0] + p[1], p[2]], "σ")?;
    require_shuffle(gamma, &[p[0], p[1]], "γ")?;
    Ok(sigma.compose(&star(gamma, &Permutation::identity(p[2]))))
}

/// `α` written out in one-line notation: with `σ = (a_1, …, a_n)` and
/// `γ = (b_1, …)`, the result is `(a_1, …, a_{p1}, a_{p1+b_1}, …)`.
pub fn alpha_by_subsets(sigma: &Permutation, gamma: &Permutation, p1: usize) -> Permutation {
    let a = sigma.images();
    let mut images = a[..p1].to_vec();
    images.extend(gamma.images().iter().map(|&b| a[p1 + b - 1]));
    Permutation { images }
}

/// `β` written out: `(a_{b_1}, …, a_{b_{p1+p2}}, a_{p1+p2+1}, …, a_n)`.
pub fn beta_by_subsets(sigma: &Permutation, gamma: &Permutation) -> Permutation {
    let a = sigma.images();
    let q = gamma.n();
    let mut images: Vec<usize> = gamma.images().iter().map(|&b| a[b - 1]).collect();
    images.extend_from_slice(&a[q..]);
    Permutation { images }
}

fn check_index(i: usize, lo: usize, hi: usize) -> Result<()> {
    if i < lo || i > hi {
        Err(Error::OutOfRange(format!("index {i} outside {lo}..={hi}")))
    } else {
        Ok(())
    }
}

/// `φ(σ, i) = (n+1 … σ(i)) ∘ σ ∘ (i … n+1)` restricted to `S_n`,
/// for `σ ∈ S_{n+1}` and `i` in `1..=n+1`.
pub fn phi(sigma: &Permutation, i: usize) -> Result<Permutation> {
    let m = sigma.n();
    check_index(i, 1, m)?;
    let right = Permutation::consecutive_cycle(m, i, m)?;
    let left = Permutation::consecutive_cycle(m, m, sigma.image(i))?;
    left.compose(sigma).compose(&right).restrict()
}

/// `ψ(σ, i) = (φ(σ, i), σ(i))`.
pub fn psi(sigma: &Permutation, i: usize) -> Result<(Permutation, usize)> {
    Ok((phi(sigma, i)?, sigma.image(i)))
}

/// `ν(σ, i) = (i i−1 … 1) ∘ (1 ⋆ σ)` for `σ ∈ S_n`, `i` in `1..=n+1`.
pub fn nu(sigma: &Permutation, i: usize) -> Result<Permutation> {
    let m = sigma.n() + 1;
    check_index(i, 1, m)?;
    Ok(Permutation::consecutive_cycle(m, i, 1)?.compose(&star(&Permutation::identity(1), sigma)))
}

/// `ξ(σ, i) = (i i+1 … n+1) ∘ (σ ⋆ 1)` for `σ ∈ S_n`, `i` in `1..=n+1`.
pub fn xi(sigma: &Permutation, i: usize) -> Result<Permutation> {
    let m = sigma.n() + 1;
    check_index(i, 1, m)?;
    Ok(Permutation::consecutive_cycle(m, i, m)?.compose(&star(sigma, &Permutation::identity(1))))
}

/// `κ(σ, i) = (σ(i) σ(i+1)) ∘ σ` for `σ ∈ S_{n+1}`, `i` in `1..=n`.
pub fn kappa(sigma: &Permutation, i: usize) -> Result<Permutation> {
    let m = sigma.n();
    if m == 0 {
        return Err(Error::OutOfRange("κ needs a nonempty permutation".into()));
    }
    check_index(i, 1, m - 1)?;
    Ok(Permutation::transposition(m, sigma.image(i), sigma.image(i + 1))?.compose(sigma))
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}
