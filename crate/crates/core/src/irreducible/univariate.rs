//! Factoring of integer polynomials in one variable by Kronecker's method:
//! a degree-`d` factor is pinned down by its values at `d + 1` integer
//! points, and those values must divide the polynomial's values there.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith;

/// Coefficients, constant term first, no trailing zeros (except for zero).
pub(crate) type Poly = Vec<BigInt>;

/// The search ran past its node budget or met a value it could not factor.
#[derive(Debug)]
pub(crate) struct GaveUp(pub String);

pub(crate) fn degree(p: &[BigInt]) -> usize {
    p.len().saturating_sub(1)
}

pub(crate) fn trim(mut p: Poly) -> Poly {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub(crate) fn eval(p: &[BigInt], x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Poly {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub(crate) fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Exact quotient `a / b` in ℤ[t], if `b` divides `a`.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Poly> {
    let (da, db) = (degree(a), degree(b));
    if b.iter().all(Zero::is_zero) || da < db {
        return None;
    }
    let mut rem = a.to_vec();
    let mut q = vec![BigInt::zero(); da - db + 1];
    let lb = &b[db];
    for k in (0..=da - db).rev() {
        let (c, r) = rem[k + db].div_rem(lb);
        if !r.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] -= &c * bj;
        }
        q[k] = c;
    }
    rem.iter().all(Zero::is_zero).then(|| trim(q))
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let f = arith::factor(n, 10_000_000).ok()?;
    let mut ds = vec![BigInt::one()];
    for (p, e) in f {
        let cur = ds.clone();
        let mut pk = BigInt::one();
        for _ in 0..e {
            pk *= &p;
            ds.extend(cur.iter().map(|d| d * &pk));
        }
    }
    ds.sort();
    Some(ds)
}

struct Search<'a> {
    u: &'a [BigInt],
    xs: Vec<BigInt>,
    choices: Vec<Vec<BigInt>>,
    budget: &'a mut u64,
}

impl Search<'_> {
    /// Depth-first over value assignments, keeping Newton coefficients.
    /// Divided differences of an integer polynomial at integer nodes are
    /// integers, which prunes most branches early.
    fn run(&mut self, coeffs: &mut Vec<BigInt>) -> Result<Option<Poly>, GaveUp> {
        let j = coeffs.len();
        if j == self.xs.len() {
            return Ok(self.candidate(coeffs));
        }
        for k in 0..self.choices[j].len() {
            if *self.budget == 0 {
                return Err(GaveUp("node budget exhausted".into()));
            }
            *self.budget -= 1;
            let mut t = self.choices[j][k].clone();
            let mut ok = true;
            for (i, c) in coeffs.iter().enumerate().take(j) {
                let (q, r) = (&t - c).div_rem(&(&self.xs[j] - &self.xs[i]));
                if !r.is_zero() {
                    ok = false;
                    break;
                }
                t = q;
            }
            if !ok {
                continue;
            }
            let last = j + 1 == self.xs.len();
            let lead = degree(self.u);
            if last && (t.is_zero() || !self.u[lead].is_multiple_of(&t)) {
                continue;
            }
            coeffs.push(t);
            let found = self.run(coeffs)?;
            coeffs.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }

    fn candidate(&self, c: &[BigInt]) -> Option<Poly> {
        // expand c₀ + c₁(t−x₀) + c₂(t−x₀)(t−x₁) + …
        let mut q = vec![BigInt::zero()];
        let mut basis = vec![BigInt::one()];
        for (i, ci) in c.iter().enumerate() {
            let term: Poly = basis.iter().map(|b| b * ci).collect();
            let n = q.len().max(term.len());
            q.resize(n, BigInt::zero());
            for (k, v) in term.into_iter().enumerate() {
                q[k] += v;
            }
            basis = mul(&basis, &[-&self.xs[i], BigInt::one()]);
        }
        let q = trim(q);
        let d = degree(&q);
        if d == 0 || d >= degree(self.u) {
            return None;
        }
        let g = content(&q);
        let q: Poly = q.iter().map(|x| x / &g).collect();
        div_exact(self.u, &q).map(|_| q)
    }
}

/// A factor of `u` of degree between 1 and `deg u − 1`, if there is one.
/// `u` must be primitive with nonzero constant term.
pub(crate) fn find_factor(u: &[BigInt], budget: &mut u64) -> Result<Option<Poly>, GaveUp> {
    let n = degree(u);
    for d in 1..=n / 2 {
        let mut pts: Vec<(usize, BigInt, BigInt)> = Vec::new();
        for x in -12i64..=12 {
            let x = BigInt::from(x);
            let v = eval(u, &x);
            if v.is_zero() {
                return Ok(Some(vec![-x, BigInt::one()]));
            }
            let nd = divisors(&v.abs()).map_or(usize::MAX, |ds| ds.len());
            pts.push((nd, x, v));
        }
        pts.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.abs().cmp(&b.1.abs())).then(a.1.cmp(&b.1)));
        let pts = &pts[..=d];
        if pts.iter().any(|p| p.0 == usize::MAX) {
            return Err(GaveUp("value with a large prime factor".into()));
        }
        let mut choices = Vec::new();
        for (i, (_, _, v)) in pts.iter().enumerate() {
            let ds = divisors(&v.abs()).expect("checked above");
            // fix the sign of the factor at the first node
            let mut c: Vec<BigInt> = ds.to_vec();
            if i > 0 {
                c.extend(ds.iter().map(|x| -x));
            }
            choices.push(c);
        }
        let mut s = Search {
            u,
            xs: pts.iter().map(|p| p.1.clone()).collect(),
            choices,
            budget,
        };
        if let Some(q) = s.run(&mut Vec::new())? {
            return Ok(Some(q));
        }
    }
    Ok(None)
}

/// Irreducible factors of a primitive `u` with nonzero constant term, each
/// primitive; the product equals `u` up to sign.
pub(crate) fn factor_irreducible(u: &[BigInt], budget: &mut u64) -> Result<Vec<Poly>, GaveUp> {
    let mut todo = vec![u.to_vec()];
    let mut out = Vec::new();
    while let Some(p) = todo.pop() {
        match find_factor(&p, budget)? {
            Some(q) => {
                let r = div_exact(&p, &q).expect("found factor divides");
                todo.push(q);
                todo.push(r);
            }
            None => out.push(p),
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn factors_small_polynomials() {
        let mut budget = 1_000_000;
        // t² − 1
        let f = factor_irreducible(&p(&[-1, 0, 1]), &mut budget).unwrap();
        assert_eq!(f.len(), 2);
        // t⁴ + 4 = (t² + 2t + 2)(t² − 2t + 2), no linear factor
        let f = factor_irreducible(&p(&[4, 0, 0, 0, 1]), &mut budget).unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(|q| degree(q) == 2));
        // t⁴ + 1 is irreducible
        assert_eq!(factor_irreducible(&p(&[1, 0, 0, 0, 1]), &mut budget).unwrap().len(), 1);
        // (2t + 3)(t² + t + 5)(t³ − 7)
        let u = mul(&mul(&p(&[3, 2]), &p(&[5, 1, 1])), &p(&[-7, 0, 0, 1]));
        let f = factor_irreducible(&u, &mut budget).unwrap();
        assert_eq!(f.iter().map(|q| degree(q)).collect::<Vec<_>>(), vec![1, 2, 3]);
    }

    #[test]
    fn exact_division() {
        assert_eq!(div_exact(&p(&[-1, 0, 1]), &p(&[1, 1])), Some(p(&[-1, 1])));
        assert_eq!(div_exact(&p(&[1, 0, 1]), &p(&[1, 1])), None);
        assert_eq!(div_exact(&p(&[2, 2]), &p(&[2])), Some(p(&[1, 1])));
    }
}
