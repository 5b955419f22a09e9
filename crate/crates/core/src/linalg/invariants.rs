use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::IntegerMatrix;
use super::snf::{invariant_factors, reduce, Tracking};
use crate::error::{Error, Result};

/// A finitely generated abelian group `Z^betti ⊕ Z/t_1 ⊕ … ⊕ Z/t_k`
/// with `t_1 | t_2 | … | t_k` and every `t_i > 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub betti: usize,
    pub torsion: Vec<u64>,
}

impl AbelianInvariants {
    pub fn free(betti: usize) -> Self {
        Self { betti, torsion: Vec::new() }
    }

    /// Dimension over `Z/p` when the group is a `Z/p`-vector space.
    pub fn dimension_mod(&self, p: u64) -> Option<usize> {
        (self.betti == 0 && self.torsion.iter().all(|&t| t == p)).then_some(self.torsion.len())
    }
}

impl std::fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        if self.betti > 0 {
            parts.push(if self.betti == 1 { "Z".to_string() } else { format!("Z^{}", self.betti) });
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

fn torsion_of(factors: &[BigInt]) -> Result<Vec<u64>> {
    factors
        .iter()
        .filter(|d| !d.is_one())
        .map(|d| d.to_u64().ok_or_else(|| Error::Guard(format!("torsion coefficient {d} exceeds u64"))))
        .collect()
}

fn check_complex(d_out: &IntegerMatrix, d_in: &IntegerMatrix, modulus: u64) -> Result<()> {
    if d_out.cols() != d_in.rows() {
        return Err(Error::Dimension(format!(
            "d_out has {} columns but d_in has {} rows",
            d_out.cols(),
            d_in.rows()
        )));
    }
    let prod = d_out.mul(d_in)?;
    let m = BigInt::from(modulus);
    let bad = (0..prod.rows())
        .flat_map(|r| (0..prod.cols()).map(move |c| (r, c)))
        .find(|&(r, c)| {
            let v = prod.get(r, c);
            if modulus == 0 {
                !v.is_zero()
            } else {
                !v.mod_floor(&m).is_zero()
            }
        });
    match bad {
        Some((r, c)) => Err(Error::BrokenComplex(format!("entry ({r}, {c}) = {}", prod.get(r, c)))),
        None => Ok(()),
    }
}

/// Coordinates of `im d_in` in the basis adapted to `d_out`, together with
/// the invariant factors of `d_out`.
fn adapted(d_out: &IntegerMatrix, d_in: &IntegerMatrix) -> Result<(Vec<BigInt>, IntegerMatrix)> {
    let st = reduce(d_out, Tracking { v_inv: true, ..Tracking::default() });
    let n = d_out.cols();
    let diag: Vec<BigInt> = (0..st.rank).map(|i| st.a[i][i].clone()).collect();
    let v_inv = IntegerMatrix::new(n, n, st.v_inv.into_iter().flatten().collect())?;
    Ok((diag, v_inv.mul(d_in)?))
}

/// Invariants of `ker d_out / im d_in` over the integers.
pub fn cohomology_invariants(d_out: &IntegerMatrix, d_in: &IntegerMatrix) -> Result<AbelianInvariants> {
    check_complex(d_out, d_in, 0)?;
    let n = d_out.cols();
    let (diag, coords) = adapted(d_out, d_in)?;
    let r = diag.len();
    let c = coords.block(r..n, 0..coords.cols());
    let factors = invariant_factors(&c);
    Ok(AbelianInvariants { betti: n - r - factors.len(), torsion: torsion_of(&factors)? })
}

/// Invariants of `ker d_out / im d_in` with `Z/m` coefficients, computed as
/// the lattice quotient `{v : d_out v ≡ 0} / (im d_in + mZ^N)`.
///
/// `modulus == 0` means the integers.
pub fn cohomology_invariants_mod(d_out: &IntegerMatrix, d_in: &IntegerMatrix, modulus: u64) -> Result<AbelianInvariants> {
    if modulus == 0 {
        return cohomology_invariants(d_out, d_in);
    }
    if modulus == 1 {
        return Ok(AbelianInvariants::default());
    }
    check_complex(d_out, d_in, modulus)?;
    let n = d_out.cols();
    let k = d_in.cols();
    let m = BigInt::from(modulus);
    let (diag, coords) = adapted(d_out, d_in)?;
    let scale: Vec<BigInt> = (0..n)
        .map(|i| if i < diag.len() { &m / m.gcd(&diag[i]) } else { BigInt::one() })
        .collect();
    let mut rel = IntegerMatrix::zeros(n, k + n);
    for (i, s) in scale.iter().enumerate() {
        for j in 0..k {
            let (q, rem) = coords.get(i, j).div_rem(s);
            debug_assert!(rem.is_zero(), "boundary outside the cocycle lattice");
            rel.set(i, j, q);
        }
        rel.set(i, k + i, &m / s);
    }
    let factors = invariant_factors(&rel);
    debug_assert_eq!(factors.len(), n);
    Ok(AbelianInvariants { betti: 0, torsion: torsion_of(&factors)? })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: Vec<Vec<i64>>) -> IntegerMatrix {
        crate::linalg::Matrix::from_rows(rows).unwrap().to_bigint()
    }

    #[test]
    fn trivial_cases() {
        let z1 = IntegerMatrix::zeros(1, 1);
        assert_eq!(cohomology_invariants(&z1, &z1).unwrap(), AbelianInvariants::free(1));
        let two = big(vec![vec![2]]);
        assert_eq!(
            cohomology_invariants(&z1, &two).unwrap(),
            AbelianInvariants { betti: 0, torsion: vec![2] }
        );
        let id = IntegerMatrix::identity(1);
        assert_eq!(cohomology_invariants(&id, &z1).unwrap(), AbelianInvariants::free(0));
    }

    #[test]
    fn zero_maps_give_free_module() {
        let z = IntegerMatrix::zeros(0, 5);
        let z_in = IntegerMatrix::zeros(5, 0);
        assert_eq!(cohomology_invariants(&z, &z_in).unwrap().betti, 5);
    }

    #[test]
    fn broken_complex_rejected() {
        let id = IntegerMatrix::identity(1);
        assert!(matches!(cohomology_invariants(&id, &id), Err(Error::BrokenComplex(_))));
    }

    #[test]
    fn real_projective_plane_style() {
        // Z --2--> Z --0--> Z : middle group Z/2 with Z coefficients
        let d_in = big(vec![vec![2]]);
        let d_out = big(vec![vec![0]]);
        assert_eq!(cohomology_invariants(&d_out, &d_in).unwrap().torsion, vec![2]);
        // mod 2: both the kernel and the image change; quotient is Z/2
        assert_eq!(cohomology_invariants_mod(&d_out, &d_in, 2).unwrap().torsion, vec![2]);
        // mod 3: 2 is invertible, quotient vanishes
        assert_eq!(cohomology_invariants_mod(&d_out, &d_in, 3).unwrap(), AbelianInvariants::default());
        // next spot: Z --2--> Z, kernel of multiplication by 2 mod 2 is Z/2
        let zero_in = IntegerMatrix::zeros(1, 0);
        assert_eq!(cohomology_invariants_mod(&d_in, &zero_in, 2).unwrap().torsion, vec![2]);
        assert_eq!(cohomology_invariants(&d_in, &zero_in).unwrap(), AbelianInvariants::default());
    }

    #[test]
    fn mod_six_mixed() {
        // d_out = [2 0], d_in = 0 on Z^2 with Z/6: kernel {(3a, b)} ≅ Z/2 ⊕ Z/6
        let d_out = big(vec![vec![2, 0]]);
        let d_in = IntegerMatrix::zeros(2, 0);
        assert_eq!(cohomology_invariants_mod(&d_out, &d_in, 6).unwrap().torsion, vec![2, 6]);
    }

    #[test]
    fn display() {
        assert_eq!(AbelianInvariants { betti: 3, torsion: vec![2] }.to_string(), "Z^3 + Z/2");
        assert_eq!(AbelianInvariants::default().to_string(), "0");
    }
}
