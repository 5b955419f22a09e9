//! Linear algebra over prime fields.

use num_traits::{FromPrimitive, ToPrimitive};

use super::matrix::{Entry, Matrix};
use crate::error::{Error, Result};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and small
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

fn reduced<T: Entry + ToPrimitive + FromPrimitive>(m: &Matrix<T>, p: u64) -> Vec<Vec<u64>> {
    let pt = T::from_u64(p).expect("modulus fits the entry type");
    (0..m.rows())
        .map(|r| m.row(r).iter().map(|x| x.mod_floor(&pt).to_u64().expect("reduced entry")).collect())
        .collect()
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(a: &mut [Vec<u64>], p: u64) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, pr);
        let inv = inverse_mod(a[r][c], p);
        for x in a[r].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, &v) in row[c..].iter_mut().zip(&pivot[c..]) {
                    *x = (*x + p - f * v % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Rank over the field with `p` elements.
pub fn rank_mod_p<T: Entry + ToPrimitive + FromPrimitive>(m: &Matrix<T>, p: u64) -> Result<usize> {
    require_prime(p)?;
    if p > u32::MAX as u64 {
        return Err(Error::Guard(format!("prime {p} too large for word arithmetic")));
    }
    let mut a = reduced(m, p);
    Ok(rref(&mut a, p).len())
}

/// Basis of the right null space over `Z/p`, entries in `0..p`.
pub fn kernel_mod_p<T: Entry + ToPrimitive + FromPrimitive>(m: &Matrix<T>, p: u64) -> Result<Vec<Vec<u64>>> {
    require_prime(p)?;
    let cols = m.cols();
    let mut a = reduced(m, p);
    let pivots = rref(&mut a, p);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = (p - a[row][free]) % p;
        }
        basis.push(v);
    }
    Ok(basis)
}
