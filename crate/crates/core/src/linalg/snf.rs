//! Smith normal form by elementary row and column reduction.

use super::matrix::{Entry, Matrix};

/// `U · M · V = D` with `U`, `V` unimodular and `D` diagonal,
/// `d_1 | d_2 | …`, all `d_i >= 0`.
#[derive(Clone, Debug)]
pub struct SnfResult<T: Entry + std::fmt::Display> {
    pub u: Matrix<T>,
    pub d: Matrix<T>,
    pub v: Matrix<T>,
}

impl<T: Entry + std::fmt::Display> SnfResult<T> {
    /// Nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<T> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .take_while(|d| !d.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

#[derive(Clone, Copy, Default)]
pub(crate) struct Tracking {
    pub u: bool,
    pub v: bool,
    pub v_inv: bool,
}

/// Reduction state. Transforms that are not tracked stay empty.
pub(crate) struct Reduction<T> {
    pub a: Vec<Vec<T>>,
    pub u: Vec<Vec<T>>,
    pub v: Vec<Vec<T>>,
    pub v_inv: Vec<Vec<T>>,
    pub rank: usize,
}

fn identity_rows<T: Entry>(n: usize) -> Vec<Vec<T>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
        .collect()
}

/// `rows[dst] += q * rows[src]`, skipping zeros of the source row.
fn row_axpy<T: Entry>(rows: &mut [Vec<T>], dst: usize, src: usize, q: &T) {
    if q.is_zero() || dst == src {
        return;
    }
    let (d, s) = if dst < src {
        let (lo, hi) = rows.split_at_mut(src);
        (&mut lo[dst], &hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(dst);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in d.iter_mut().zip(s.iter()) {
        if !y.is_zero() {
            *x = x.clone() + q.clone() * y.clone();
        }
    }
}

/// `col[dst] += q * col[src]` over every row.
fn col_axpy<T: Entry>(rows: &mut [Vec<T>], dst: usize, src: usize, q: &T) {
    if q.is_zero() {
        return;
    }
    for row in rows.iter_mut() {
        if !row[src].is_zero() {
            row[dst] = row[dst].clone() + q.clone() * row[src].clone();
        }
    }
}

fn col_swap<T>(rows: &mut [Vec<T>], i: usize, j: usize) {
    for row in rows.iter_mut() {
        row.swap(i, j);
    }
}

impl<T: Entry> Reduction<T> {
    fn row_add(&mut self, dst: usize, src: usize, q: &T, track: Tracking) {
        row_axpy(&mut self.a, dst, src, q);
        if track.u {
            row_axpy(&mut self.u, dst, src, q);
        }
    }

    fn row_swap(&mut self, i: usize, j: usize, track: Tracking) {
        self.a.swap(i, j);
        if track.u {
            self.u.swap(i, j);
        }
    }

    fn row_negate(&mut self, i: usize, track: Tracking) {
        for x in self.a[i].iter_mut() {
            *x = -x.clone();
        }
        if track.u {
            for x in self.u[i].iter_mut() {
                *x = -x.clone();
            }
        }
    }

    /// `col_dst += q col_src`; the inverse transform gets `row_src -= q row_dst`.
    fn col_add(&mut self, dst: usize, src: usize, q: &T, track: Tracking) {
        col_axpy(&mut self.a, dst, src, q);
        if track.v {
            col_axpy(&mut self.v, dst, src, q);
        }
        if track.v_inv {
            row_axpy(&mut self.v_inv, src, dst, &-q.clone());
        }
    }

    fn col_swap(&mut self, i: usize, j: usize, track: Tracking) {
        col_swap(&mut self.a, i, j);
        if track.v {
            col_swap(&mut self.v, i, j);
        }
        if track.v_inv {
            self.v_inv.swap(i, j);
        }
    }
}

/// `q` with `|a − q p| ≤ |p| / 2`.
fn nearest_quotient<T: Entry>(a: &T, p: &T) -> T {
    let q = a.div_floor(p);
    let r = a.clone() - q.clone() * p.clone();
    if r.abs() + r.abs() > p.abs() {
        q + T::one()
    } else {
        q
    }
}

pub(crate) fn reduce<T: Entry>(m: &Matrix<T>, track: Tracking) -> Reduction<T> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut st = Reduction {
        a: m.to_rows(),
        u: if track.u { identity_rows(rows) } else { Vec::new() },
        v: if track.v { identity_rows(cols) } else { Vec::new() },
        v_inv: if track.v_inv { identity_rows(cols) } else { Vec::new() },
        rank: 0,
    };

    let mut t = 0;
    while t < rows.min(cols) {
        // pivot of minimal absolute value in the trailing block
        let mut best: Option<(usize, usize)> = None;
        'scan: for i in t..rows {
            for j in t..cols {
                let x = &st.a[i][j];
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < st.a[bi][bj].abs()) {
                    best = Some((i, j));
                    if x.abs().is_one() {
                        break 'scan;
                    }
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        if pi != t {
            st.row_swap(pi, t, track);
        }
        if pj != t {
            st.col_swap(pj, t, track);
        }

        loop {
            let mut changed = false;
            for i in t + 1..rows {
                if st.a[i][t].is_zero() {
                    continue;
                }
                let q = nearest_quotient(&st.a[i][t], &st.a[t][t]);
                st.row_add(i, t, &-q, track);
                if !st.a[i][t].is_zero() {
                    st.row_swap(i, t, track);
                    changed = true;
                }
            }
            for j in t + 1..cols {
                if st.a[t][j].is_zero() {
                    continue;
                }
                let q = nearest_quotient(&st.a[t][j], &st.a[t][t]);
                st.col_add(j, t, &-q, track);
                if !st.a[t][j].is_zero() {
                    st.col_swap(j, t, track);
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            // row and column are clear; enforce divisibility of the rest
            if st.a[t][t].abs().is_one() {
                break;
            }
            let p = st.a[t][t].clone();
            let offender = (t + 1..rows).find(|&i| st.a[i][t + 1..].iter().any(|x| !x.is_zero() && !x.is_multiple_of(&p)));
            match offender {
                Some(i) => st.row_add(t, i, &T::one(), track),
                None => break,
            }
        }

        if st.a[t][t].is_negative() {
            st.row_negate(t, track);
        }
        t += 1;
    }
    st.rank = t;
    st
}

fn rows_to_matrix<T: Entry>(rows: Vec<Vec<T>>, n_rows: usize, n_cols: usize) -> Matrix<T> {
    Matrix::new(n_rows, n_cols, rows.into_iter().flatten().collect()).expect("consistent shape")
}

/// Full Smith decomposition with both transforms.
pub fn snf<T: Entry + std::fmt::Display>(m: &Matrix<T>) -> SnfResult<T> {
    let st = reduce(m, Tracking { u: true, v: true, v_inv: false });
    SnfResult {
        u: rows_to_matrix(st.u, m.rows(), m.rows()),
        d: rows_to_matrix(st.a, m.rows(), m.cols()),
        v: rows_to_matrix(st.v, m.cols(), m.cols()),
    }
}

/// Nonzero invariant factors only; no transforms are tracked.
pub fn invariant_factors<T: Entry>(m: &Matrix<T>) -> Vec<T> {
    let st = reduce(m, Tracking::default());
    (0..st.rank).map(|i| st.a[i][i].clone()).collect()
}
