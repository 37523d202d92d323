use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{IntMat, IntVec};

/// Result of a Smith normal form computation: `u · m · v = d`, with the
/// inverses of the unimodular transforms kept alongside.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMat,
    pub d: IntMat,
    pub v: IntMat,
    pub u_inv: IntMat,
    pub v_inv: IntMat,
}

impl SmithForm {
    /// The diagonal of `d`, including trailing zeros up to `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

struct Reducer {
    a: IntMat,
    u: IntMat,
    u_inv: IntMat,
    v: IntMat,
    v_inv: IntMat,
}

impl Reducer {
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_row(dst, src, k);
        self.u.add_row(dst, src, k);
        self.u_inv.add_col(src, dst, &-k);
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_col(dst, src, k);
        self.v.add_col(dst, src, k);
        self.v_inv.add_row(src, dst, &-k);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    /// Smallest nonzero absolute value among the given positions; ties go
    /// to the first position in iteration order.
    fn smallest(&self, cells: impl Iterator<Item = (usize, usize)>) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), BigInt)> = None;
        for (i, j) in cells {
            let x = self.a[(i, j)].abs();
            if x.is_zero() {
                continue;
            }
            if best.as_ref().is_none_or(|(_, b)| &x < b) {
                best = Some(((i, j), x));
            }
        }
        best.map(|(p, _)| p)
    }
}

/// Smith normal form with smallest-absolute-value pivoting.
///
/// The output is deterministic: the same input always yields the same
/// transforms.
pub fn snf(m: &IntMat) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut r = Reducer {
        a: m.clone(),
        u: IntMat::identity(rows),
        u_inv: IntMat::identity(rows),
        v: IntMat::identity(cols),
        v_inv: IntMat::identity(cols),
    };

    for t in 0..rows.min(cols) {
        let cells = (t..rows).flat_map(|i| (t..cols).map(move |j| (i, j)));
        let Some((pi, pj)) = r.smallest(cells) else {
            break;
        };
        r.swap_rows(t, pi);
        r.swap_cols(t, pj);

        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !r.a[(i, t)].is_zero() {
                    let q = r.a[(i, t)].div_floor(&r.a[(t, t)]);
                    r.add_row(i, t, &-q);
                    clean &= r.a[(i, t)].is_zero();
                }
            }
            for j in t + 1..cols {
                if !r.a[(t, j)].is_zero() {
                    let q = r.a[(t, j)].div_floor(&r.a[(t, t)]);
                    r.add_col(j, t, &-q);
                    clean &= r.a[(t, j)].is_zero();
                }
            }
            if !clean {
                let cross = std::iter::once((t, t))
                    .chain((t + 1..rows).map(|i| (i, t)))
                    .chain((t + 1..cols).map(|j| (t, j)));
                let (pi, pj) = r.smallest(cross).expect("pivot row/column is nonzero");
                r.swap_rows(t, pi);
                r.swap_cols(t, pj);
                continue;
            }
            let pivot = r.a[(t, t)].clone();
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !r.a[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => r.add_row(t, i, &BigInt::from(1)),
                None => break,
            }
        }
        if r.a[(t, t)].is_negative() {
            r.negate_row(t);
        }
    }

    SmithForm {
        u: r.u,
        d: r.a,
        v: r.v,
        u_inv: r.u_inv,
        v_inv: r.v_inv,
    }
}

/// Columns form a ℤ-basis of the integer kernel of `m`.
pub fn kernel_basis(m: &IntMat) -> IntMat {
    let s = snf(m);
    let rank = s.rank();
    s.v.select_cols(rank..m.cols())
}

/// Row-style Hermite normal form: a basis of the row lattice in echelon
/// form with positive pivots and entries above each pivot reduced into
/// `[0, pivot)`. Zero rows are dropped.
pub fn hnf_rows(m: &IntMat) -> IntMat {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let pivot = (r..rows)
                .filter(|&i| !a[(i, c)].is_zero())
                .min_by(|&i, &j| a[(i, c)].abs().cmp(&a[(j, c)].abs()));
            let Some(p) = pivot else { break };
            a.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..rows {
                if !a[(i, c)].is_zero() {
                    let q = a[(i, c)].div_floor(&a[(r, c)]);
                    a.add_row(i, r, &-q);
                    done &= a[(i, c)].is_zero();
                }
            }
            if done {
                break;
            }
        }
        if a[(r, c)].is_zero() {
            continue;
        }
        if a[(r, c)].is_negative() {
            a.negate_row(r);
        }
        for i in 0..r {
            let q = a[(i, c)].div_floor(&a[(r, c)]);
            a.add_row(i, r, &-q);
        }
        r += 1;
    }
    a.select_rows(0..r)
}

/// Coefficients `y` with `Σ yᵢ · rowᵢ = target` for an echelon basis as
/// produced by [`hnf_rows`]; `None` if `target` is not in the row lattice.
pub fn solve_echelon(basis: &IntMat, target: &IntVec) -> Option<IntVec> {
    assert_eq!(basis.cols(), target.len(), "dimension mismatch");
    let mut rest = target.clone();
    let mut y = Vec::with_capacity(basis.rows());
    for i in 0..basis.rows() {
        let row = basis.row(i);
        let c = row.0.iter().position(|x| !x.is_zero())?;
        let (q, rem) = rest.0[c].div_rem(&row.0[c]);
        if !rem.is_zero() {
            return None;
        }
        rest = &rest - &row.scale(&q);
        y.push(q);
    }
    rest.is_zero().then_some(IntVec(y))
}
