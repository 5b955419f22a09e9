//! Coefficient rings.
//!
//! All cochain-level code is generic over [`Coefficient`], a bundle of
//! num-traits bounds describing an associative ring with unit (not
//! necessarily commutative). Concrete instances shipped here:
//!
//! * `i64` and `BigInt` for the integers,
//! * [`ModInt`] for `Z/m` with the modulus carried at runtime,
//! * [`Mat2`] for the 2x2 matrix ring over any coefficient ring.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An associative unital ring usable as cochain coefficients.
pub trait Coefficient:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    /// Multiply by a sign `±1`.
    fn signed(self, sign: i8) -> Self {
        if sign < 0 {
            -self
        } else {
            self
        }
    }
}

impl<T> Coefficient for T where
    T: Clone
        + fmt::Debug
        + fmt::Display
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
        + Send
        + Sync
{
}

/// Residue modulo `m`, with the modulus stored in the value.
///
/// `modulus == 0` marks an unbound integer. `zero()` and `one()` produce
/// unbound values; an unbound operand adopts the modulus of the other
/// operand. Mixing two different nonzero moduli panics.
#[derive(Clone, Copy, Debug)]
pub struct ModInt {
    value: i64,
    modulus: u64,
}

impl ModInt {
    pub fn new(value: i64, modulus: u64) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        Self { value: value.rem_euclid(modulus as i64), modulus }
    }

    pub fn value(&self) -> i64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn unify(a: Self, b: Self) -> (i64, i64, u64) {
        match (a.modulus, b.modulus) {
            (0, 0) => (a.value, b.value, 0),
            (0, m) | (m, 0) => (a.value, b.value, m),
            (m, n) => {
                assert_eq!(m, n, "mixed moduli {m} and {n}");
                (a.value, b.value, m)
            }
        }
    }

    fn build(value: i128, modulus: u64) -> Self {
        if modulus == 0 {
            Self { value: value as i64, modulus: 0 }
        } else {
            Self { value: value.rem_euclid(modulus as i128) as i64, modulus }
        }
    }
}

impl PartialEq for ModInt {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, m) = Self::unify(*self, *other);
        if m == 0 {
            a == b
        } else {
            (a - b).rem_euclid(m as i64) == 0
        }
    }
}

impl fmt::Display for ModInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Zero for ModInt {
    fn zero() -> Self {
        Self { value: 0, modulus: 0 }
    }

    fn is_zero(&self) -> bool {
        if self.modulus == 0 {
            self.value == 0
        } else {
            self.value.rem_euclid(self.modulus as i64) == 0
        }
    }
}

impl One for ModInt {
    fn one() -> Self {
        Self { value: 1, modulus: 0 }
    }
}

impl Add for ModInt {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (a, b, m) = Self::unify(self, rhs);
        Self::build(a as i128 + b as i128, m)
    }
}

impl Sub for ModInt {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let (a, b, m) = Self::unify(self, rhs);
        Self::build(a as i128 - b as i128, m)
    }
}

impl Mul for ModInt {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let (a, b, m) = Self::unify(self, rhs);
        Self::build(a as i128 * b as i128, m)
    }
}

impl Neg for ModInt {
    type Output = Self;
    fn neg(self) -> Self {
        Self::build(-(self.value as i128), self.modulus)
    }
}

/// 2x2 matrices over a coefficient ring; the noncommutative test ring.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat2<T> {
    pub entries: [[T; 2]; 2],
}

impl<T> Mat2<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Self { entries: [[a, b], [c, d]] }
    }
}

impl<T: Coefficient> fmt::Display for Mat2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = &self.entries;
        write!(f, "[[{}, {}], [{}, {}]]", e[0][0], e[0][1], e[1][0], e[1][1])
    }
}

impl<T: Coefficient> Zero for Mat2<T> {
    fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::zero())
    }

    fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Zero::is_zero)
    }
}

impl<T: Coefficient> One for Mat2<T> {
    fn one() -> Self {
        Self::new(T::one(), T::zero(), T::zero(), T::one())
    }
}

impl<T: Coefficient> Add for Mat2<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let [[a, b], [c, d]] = self.entries;
        let [[e, f], [g, h]] = rhs.entries;
        Self::new(a + e, b + f, c + g, d + h)
    }
}

impl<T: Coefficient> Sub for Mat2<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let [[a, b], [c, d]] = self.entries;
        let [[e, f], [g, h]] = rhs.entries;
        Self::new(a - e, b - f, c - g, d - h)
    }
}

impl<T: Coefficient> Mul for Mat2<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let [[a, b], [c, d]] = self.entries;
        let [[e, f], [g, h]] = rhs.entries;
        Self::new(
            a.clone() * e.clone() + b.clone() * g.clone(),
            a * f.clone() + b * h.clone(),
            c.clone() * e + d.clone() * g,
            c * f + d * h,
        )
    }
}

impl<T: Coefficient> Neg for Mat2<T> {
    type Output = Self;
    fn neg(self) -> Self {
        let [[a, b], [c, d]] = self.entries;
        Self::new(-a, -b, -c, -d)
    }
}

/// Coefficient descriptor as written on the command line: `Z`, `Z/m`
/// or `mat2/Zm` (2x2 matrices over `Z/m`, `mat2/Z` over the integers).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "ring", rename_all = "snake_case")]
pub enum CoefficientSpec {
    Integers,
    IntegersMod { modulus: u64 },
    MatrixRing { dim: usize, modulus: u64 },
}

impl CoefficientSpec {
    /// Modulus for SNF-amenable descriptors (`0` for `Z`).
    pub fn snf_modulus(&self) -> Result<u64> {
        match *self {
            CoefficientSpec::Integers => Ok(0),
            CoefficientSpec::IntegersMod { modulus } => Ok(modulus),
            CoefficientSpec::MatrixRing { .. } => Err(Error::Coefficients(
                "matrix-ring coefficients are for product testing only".into(),
            )),
        }
    }
}

impl fmt::Display for CoefficientSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientSpec::Integers => write!(f, "Z"),
            CoefficientSpec::IntegersMod { modulus } => write!(f, "Z/{modulus}"),
            CoefficientSpec::MatrixRing { dim, modulus: 0 } => write!(f, "mat{dim}/Z"),
            CoefficientSpec::MatrixRing { dim, modulus } => write!(f, "mat{dim}/Z{modulus}"),
        }
    }
}

impl FromStr for CoefficientSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown coefficient descriptor `{s}`"));
        let s = s.trim();
        if s == "Z" {
            return Ok(CoefficientSpec::Integers);
        }
        if let Some(m) = s.strip_prefix("Z/") {
            let modulus: u64 = m.parse().map_err(|_| bad())?;
            if modulus < 2 {
                return Err(bad());
            }
            return Ok(CoefficientSpec::IntegersMod { modulus });
        }
        if let Some(rest) = s.strip_prefix("mat2/") {
            let modulus = match rest {
                "Z" => 0,
                r => {
                    let m = r.strip_prefix("Z/").or_else(|| r.strip_prefix('Z')).ok_or_else(bad)?;
                    let m: u64 = m.parse().map_err(|_| bad())?;
                    if m < 2 {
                        return Err(bad());
                    }
                    m
                }
            };
            return Ok(CoefficientSpec::MatrixRing { dim: 2, modulus });
        }
        Err(bad())
    }
}

/// Source of basis elements and random values for a coefficient ring.
pub trait CoefficientDomain<T>: Sync {
    /// Additive generators used for exhaustive basis checks.
    fn basis(&self) -> Vec<T>;
    fn sample<R: Rng>(&self, rng: &mut R) -> T;
}

/// Integers drawn uniformly from `[-bound, bound]`.
#[derive(Clone, Copy, Debug)]
pub struct IntDomain {
    pub bound: i64,
}

impl Default for IntDomain {
    fn default() -> Self {
        Self { bound: 3 }
    }
}

impl CoefficientDomain<i64> for IntDomain {
    fn basis(&self) -> Vec<i64> {
        vec![1]
    }

    fn sample<R: Rng>(&self, rng: &mut R) -> i64 {
        rng.gen_range(-self.bound..=self.bound)
    }
}

impl CoefficientDomain<BigInt> for IntDomain {
    fn basis(&self) -> Vec<BigInt> {
        vec![BigInt::one()]
    }

    fn sample<R: Rng>(&self, rng: &mut R) -> BigInt {
        BigInt::from(rng.gen_range(-self.bound..=self.bound))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ModDomain {
    pub modulus: u64,
}

impl CoefficientDomain<ModInt> for ModDomain {
    fn basis(&self) -> Vec<ModInt> {
        vec![ModInt::new(1, self.modulus)]
    }

    fn sample<R: Rng>(&self, rng: &mut R) -> ModInt {
        ModInt::new(rng.gen_range(0..self.modulus as i64), self.modulus)
    }
}

/// 2x2 matrices whose entries come from an inner domain; the basis is the
/// four matrix units over the inner basis.
#[derive(Clone, Copy, Debug)]
pub struct Mat2Domain<D> {
    pub inner: D,
}

impl<T: Coefficient, D: CoefficientDomain<T>> CoefficientDomain<Mat2<T>> for Mat2Domain<D> {
    fn basis(&self) -> Vec<Mat2<T>> {
        let mut out = Vec::new();
        for b in self.inner.basis() {
            for pos in 0..4 {
                let mut m = Mat2::<T>::zero();
                m.entries[pos / 2][pos % 2] = b.clone();
                out.push(m);
            }
        }
        out
    }

    fn sample<R: Rng>(&self, rng: &mut R) -> Mat2<T> {
        Mat2::new(
            self.inner.sample(rng),
            self.inner.sample(rng),
            self.inner.sample(rng),
            self.inner.sample(rng),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modint_arithmetic() {
        let a = ModInt::new(5, 7);
        let b = ModInt::new(4, 7);
        assert_eq!((a + b).value(), 2);
        assert_eq!((a - b).value(), 1);
        assert_eq!((a * b).value(), 6);
        assert_eq!((-a).value(), 2);
        assert_eq!(a + ModInt::zero(), a);
        assert_eq!(a * ModInt::one(), a);
        assert!((ModInt::one() - ModInt::one()).is_zero());
        assert!(ModInt::new(7, 7).is_zero());
        // unbound -1 compares equal to m-1
        assert_eq!(-ModInt::one(), ModInt::new(6, 7));
    }

    #[test]
    #[should_panic(expected = "mixed moduli")]
    fn modint_mixed_moduli_panics() {
        let _ = ModInt::new(1, 2) + ModInt::new(1, 3);
    }

    #[test]
    fn mat2_is_noncommutative() {
        let a = Mat2::new(1i64, 1, 0, 1);
        let b = Mat2::new(1i64, 0, 1, 1);
        assert_ne!(a.clone() * b.clone(), b * a);
    }

    #[test]
    fn mat2_ring_axioms_exhaustive_over_z2() {
        // 16 elements; associativity and both distributive laws
        let all: Vec<Mat2<ModInt>> = (0..16)
            .map(|bits| {
                let e = |k: u32| ModInt::new(((bits >> k) & 1) as i64, 2);
                Mat2::new(e(0), e(1), e(2), e(3))
            })
            .collect();
        for x in &all {
            for y in &all {
                for z in &all {
                    let (x, y, z) = (x.clone(), y.clone(), z.clone());
                    assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
                    assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * y.clone() + x.clone() * z.clone());
                    assert_eq!((x.clone() + y.clone()) * z.clone(), x * z.clone() + y * z);
                }
            }
        }
    }

    #[test]
    fn parse_descriptors() {
        assert_eq!("Z".parse::<CoefficientSpec>().unwrap(), CoefficientSpec::Integers);
        assert_eq!(
            "Z/6".parse::<CoefficientSpec>().unwrap(),
            CoefficientSpec::IntegersMod { modulus: 6 }
        );
        assert_eq!(
            "mat2/Z2".parse::<CoefficientSpec>().unwrap(),
            CoefficientSpec::MatrixRing { dim: 2, modulus: 2 }
        );
        assert_eq!(
            "mat2/Z".parse::<CoefficientSpec>().unwrap(),
            CoefficientSpec::MatrixRing { dim: 2, modulus: 0 }
        );
        assert!("Q".parse::<CoefficientSpec>().is_err());
        assert!("Z/1".parse::<CoefficientSpec>().is_err());
        for s in ["Z", "Z/5", "mat2/Z2", "mat2/Z"] {
            assert_eq!(s.parse::<CoefficientSpec>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn mat2_domain_basis_is_matrix_units() {
        let d = Mat2Domain { inner: IntDomain::default() };
        let basis: Vec<Mat2<i64>> = d.basis();
        assert_eq!(basis.len(), 4);
        let sum = basis.into_iter().fold(Mat2::zero(), |a, b| a + b);
        assert_eq!(sum, Mat2::new(1, 1, 1, 1));
    }
}
