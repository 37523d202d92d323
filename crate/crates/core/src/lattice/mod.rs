//! Exact integer vectors and matrices, Smith and Hermite forms, integer
//! kernels, and the lexicographic orders used on exponent groups.

mod order;
mod snf;

pub use order::TotalOrderSpec;
pub use snf::{hnf_rows, kernel_basis, snf, solve_echelon, SmithForm};

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An element of ℤⁿ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntVec(pub Vec<BigInt>);

impl IntVec {
    pub fn zeros(n: usize) -> Self {
        IntVec(vec![BigInt::zero(); n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = BigInt::one();
        v
    }

    pub fn from_i64(xs: &[i64]) -> Self {
        IntVec(xs.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &IntVec) -> BigInt {
        assert_eq!(self.len(), other.len(), "dimension mismatch");
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, k: &BigInt) -> IntVec {
        IntVec(self.0.iter().map(|x| x * k).collect())
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &IntVec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }

    /// Sum of entries; the length of a zero-sum sequence given by multiplicities.
    pub fn total(&self) -> BigInt {
        self.0.iter().sum()
    }

    pub fn min_with(&self, other: &IntVec) -> IntVec {
        IntVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.min(b).clone())
                .collect(),
        )
    }

    pub fn to_i64(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.0.iter().map(|x| x.to_i64()).collect()
    }
}

impl fmt::Display for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl Add for &IntVec {
    type Output = IntVec;
    fn add(self, rhs: &IntVec) -> IntVec {
        assert_eq!(self.len(), rhs.len(), "dimension mismatch");
        IntVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &IntVec {
    type Output = IntVec;
    fn sub(self, rhs: &IntVec) -> IntVec {
        assert_eq!(self.len(), rhs.len(), "dimension mismatch");
        IntVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &IntVec {
    type Output = IntVec;
    fn neg(self) -> IntVec {
        IntVec(self.0.iter().map(|a| -a).collect())
    }
}

impl Serialize for IntVec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        crate::serde_util::bigint_vec::serialize(&self.0, s)
    }
}

impl<'de> Deserialize<'de> for IntVec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        crate::serde_util::bigint_vec::deserialize(d).map(IntVec)
    }
}

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<BigInt>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::schema("ragged matrix rows"));
        }
        Ok(IntMat {
            rows: r,
            cols: c,
            data: rows.iter().flatten().cloned().collect(),
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let rows: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::from_rows(&rows).expect("rectangular literal")
    }

    /// Matrix whose columns are the given vectors; `dim` is used when `cols` is empty.
    pub fn from_columns(dim: usize, cols: &[IntVec]) -> Self {
        let mut m = Self::zeros(dim, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), dim, "column length mismatch");
            for i in 0..dim {
                m[(i, j)] = c.0[i].clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> IntVec {
        IntVec(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn col(&self, j: usize) -> IntVec {
        IntVec((0..self.rows).map(|i| self[(i, j)].clone()).collect())
    }

    pub fn columns(&self) -> Vec<IntVec> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).0).collect()
    }

    pub fn transpose(&self) -> IntMat {
        let mut t = IntMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &IntVec) -> IntVec {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        IntVec((0..self.rows).map(|i| self.row(i).dot(v)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * &a[(n - 1, n - 1)]
    }

    pub(crate) fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub(crate) fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row[dst] += k * row[src]
    pub(crate) fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = &self[(src, c)] * k;
            self[(dst, c)] += v;
        }
    }

    /// col[dst] += k * col[src]
    pub(crate) fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = &self[(r, src)] * k;
            self[(r, dst)] += v;
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = -&self[(i, c)];
            self[(i, c)] = v;
        }
    }

    pub(crate) fn negate_col(&mut self, j: usize) {
        for r in 0..self.rows {
            let v = -&self[(r, j)];
            self[(r, j)] = v;
        }
    }

    /// Keep only the listed columns, in order.
    pub fn select_cols(&self, cols: impl IntoIterator<Item = usize>) -> IntMat {
        let cols: Vec<IntVec> = cols.into_iter().map(|j| self.col(j)).collect();
        IntMat::from_columns(self.rows, &cols)
    }

    pub fn select_rows(&self, rows: impl IntoIterator<Item = usize>) -> IntMat {
        let rows: Vec<Vec<BigInt>> = rows.into_iter().map(|i| self.row(i).0).collect();
        if rows.is_empty() {
            return IntMat::zeros(0, self.cols);
        }
        IntMat::from_rows(&rows).expect("rows have equal length")
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            writeln!(f, "{}", self.row(i))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct IntMatRepr(Vec<IntVec>);

impl Serialize for IntMat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IntMatRepr((0..self.rows).map(|i| self.row(i)).collect()).serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let IntMatRepr(rows) = IntMatRepr::deserialize(d)?;
        let rows: Vec<Vec<BigInt>> = rows.into_iter().map(|r| r.0).collect();
        IntMat::from_rows(&rows).map_err(serde::de::Error::custom)
    }
}

/// Greatest common divisor of the entries, always positive.
pub fn gcd_of_vector(v: &IntVec) -> Result<BigInt> {
    if v.is_zero() {
        return Err(Error::precondition("gcd of the zero vector is undefined"));
    }
    Ok(v.0.iter().fold(BigInt::zero(), |g, x| g.gcd(x)))
}

/// An element of ℤⁿ is of height (0,0,0,…) when no prime p solves p·x = v,
/// i.e. when its coordinates are coprime.
pub fn is_height_zero(v: &IntVec) -> Result<bool> {
    if v.is_zero() {
        return Err(Error::precondition(
            "height of the zero vector: 0 is divisible by every prime",
        ));
    }
    Ok(gcd_of_vector(v)?.is_one())
}

/// A ℤ-basis of ℤⁿ (as columns) whose first n−1 columns span the kernel of
/// `x ↦ ⟨w, x⟩` and whose last column is `a`.
pub fn split_basis_by_functional(w: &IntVec, a: &IntVec) -> Result<IntMat> {
    if w.len() != a.len() {
        return Err(Error::schema("functional and vector differ in length"));
    }
    let value = w.dot(a);
    if !value.is_one() {
        return Err(Error::precondition(format!(
            "functional value at the distinguished vector is {value}, expected 1"
        )));
    }
    let n = w.len();
    let row = IntMat::from_rows(std::slice::from_ref(&w.0))?;
    let mut cols = kernel_basis(&row).columns();
    debug_assert_eq!(cols.len(), n - 1);
    cols.push(a.clone());
    Ok(IntMat::from_columns(n, &cols))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd_of_vector(&IntVec::from_i64(&[3, 6])).unwrap(), 3.into());
        assert_eq!(gcd_of_vector(&IntVec::from_i64(&[1, 1])).unwrap(), 1.into());
        assert_eq!(gcd_of_vector(&IntVec::from_i64(&[4, 6, 9])).unwrap(), 1.into());
        assert_eq!(gcd_of_vector(&IntVec::from_i64(&[-4, 0])).unwrap(), 4.into());
        assert!(gcd_of_vector(&IntVec::zeros(3)).is_err());
    }

    #[test]
    fn height_zero_examples() {
        assert!(!is_height_zero(&IntVec::from_i64(&[2, 4])).unwrap());
        assert!(is_height_zero(&IntVec::from_i64(&[1, 0, 0])).unwrap());
        assert!(is_height_zero(&IntVec::from_i64(&[6, 10, 15])).unwrap());
        assert!(matches!(
            is_height_zero(&IntVec::zeros(2)),
            Err(Error::Precondition { .. })
        ));
    }

    #[test]
    fn split_basis_examples() {
        let b = split_basis_by_functional(&IntVec::from_i64(&[1]), &IntVec::from_i64(&[1])).unwrap();
        assert_eq!(b, IntMat::from_i64(&[&[1]]));

        for (w, a) in [([1, 1], [1, 0]), ([2, 3], [-1, 1])] {
            let w = IntVec::from_i64(&w);
            let a = IntVec::from_i64(&a);
            let b = split_basis_by_functional(&w, &a).unwrap();
            assert_eq!(b.col(1), a);
            assert!(w.dot(&b.col(0)).is_zero());
            assert_eq!(b.det().abs(), BigInt::one());
        }

        let err = split_basis_by_functional(&IntVec::from_i64(&[2, 3]), &IntVec::from_i64(&[1, 1]));
        assert!(matches!(err, Err(Error::Precondition { .. })));
    }

    #[test]
    fn det_small() {
        assert_eq!(IntMat::from_i64(&[&[2, 1], &[7, 4]]).det(), 1.into());
        assert_eq!(IntMat::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 5]]).det(), (-5).into());
        assert_eq!(IntMat::from_i64(&[&[1, 2], &[2, 4]]).det(), 0.into());
    }

    #[test]
    fn json_is_decimal_strings() {
        let m = IntMat::from_i64(&[&[1, -2], &[3, 4]]);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"[["1","-2"],["3","4"]]"#);
        let back: IntMat = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
        assert!(serde_json::from_str::<IntMat>(r#"[["1"],["2","3"]]"#).is_err());
    }
}
