use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::{snf, IntMat, IntVec};
use crate::error::{Error, Result};

/// A total order on ℤⁿ compatible with addition: compare `⟨b₁,x⟩`, then
/// `⟨b₂,x⟩`, and so on, for a fixed basis `b₁,…,bₙ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TotalOrderSpec {
    basis: Vec<IntVec>,
    #[serde(skip)]
    standard: bool,
}

impl TotalOrderSpec {
    /// Lexicographic order on coordinates.
    pub fn lex(n: usize) -> Self {
        TotalOrderSpec {
            basis: (0..n).map(|i| IntVec::unit(n, i)).collect(),
            standard: true,
        }
    }

    pub fn new(basis: Vec<IntVec>) -> Result<Self> {
        let n = basis.len();
        if basis.iter().any(|b| b.len() != n) {
            return Err(Error::schema("order basis must be n vectors of length n"));
        }
        let m = IntMat::from_columns(n, &basis);
        if snf(&m).rank() != n {
            return Err(Error::precondition("order basis vectors are linearly dependent"));
        }
        let standard = basis.iter().enumerate().all(|(i, b)| *b == IntVec::unit(n, i));
        Ok(TotalOrderSpec { basis, standard })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn cmp(&self, x: &IntVec, y: &IntVec) -> Ordering {
        if self.standard {
            return x.cmp(y);
        }
        for b in &self.basis {
            match b.dot(x).cmp(&b.dot(y)) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    pub fn max<'a>(&self, xs: impl IntoIterator<Item = &'a IntVec>) -> Option<&'a IntVec> {
        xs.into_iter().max_by(|a, b| self.cmp(a, b))
    }

    pub fn is_positive(&self, x: &IntVec) -> bool {
        self.cmp(x, &IntVec::zeros(x.len())) == Ordering::Greater
    }
}
