use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{DomainInstance, FieldElem, FracIdealD};

impl DomainInstance {
    /// Absolute norm of a nonzero element: `|x|` over ℤ, `x² − dy²` over
    /// ℤ[√d]. Positive definite in both cases.
    pub fn elem_norm(&self, x: &FieldElem) -> BigRational {
        if self.is_quadratic() {
            x.norm(&self.d())
        } else {
            x.as_rational().expect("rational element").abs()
        }
    }
}

/// Nonzero elements of the ideal with norm at most `max_norm`, sorted by
/// norm and then by descending coordinates, so the order is deterministic.
/// Not meaningful over ℚ.
pub(crate) fn ideal_points(
    dom: &DomainInstance,
    ideal: &FracIdealD,
    max_norm: &BigRational,
) -> Vec<(BigRational, FieldElem)> {
    let mut out = Vec::new();
    let scale = FieldElem::from_rat(ideal.scale());
    if !dom.is_quadratic() {
        let r = (max_norm / ideal.scale().abs()).floor().to_integer();
        let mut n = BigInt::one();
        while n <= r {
            for s in [n.clone(), -n.clone()] {
                let x = scale.scale_int(&s);
                out.push((dom.elem_norm(&x), x));
            }
            n += 1;
        }
        sort_points(&mut out);
        return out;
    }
    let d = dom.d();
    let (a, b) = ideal.hnf();
    // scale·(a·x + b·y + y√d) has norm scale²·((ax+by)² − d·y²)
    let r = (max_norm / (ideal.scale() * ideal.scale())).floor().to_integer();
    if r < BigInt::one() {
        return out;
    }
    let abs_d = -&d;
    let ymax = (&r / &abs_d).sqrt();
    let mut y = -ymax.clone();
    while y <= ymax {
        let t = (&r - &abs_d * &y * &y).sqrt();
        let lo = (-&t - b * &y).div_ceil(a);
        let hi = (&t - b * &y).div_floor(a);
        let mut x = lo;
        while x <= hi {
            let re = a * &x + b * &y;
            if !(re.is_zero() && y.is_zero()) {
                let e = scale.mul(&FieldElem::new(re, y.clone(), BigInt::one()).unwrap(), &d);
                let n = dom.elem_norm(&e);
                if &n <= max_norm {
                    out.push((n, e));
                }
            }
            x += 1;
        }
        y += 1;
    }
    sort_points(&mut out);
    out
}

fn sort_points(pts: &mut [(BigRational, FieldElem)]) {
    pts.sort_by(|(n1, e1), (n2, e2)| {
        n1.cmp(n2)
            .then_with(|| (e2.x() * e1.den()).cmp(&(e1.x() * e2.den())))
            .then_with(|| (e2.y() * e1.den()).cmp(&(e1.y() * e2.den())))
    });
}

/// A nonzero element of the ideal of smallest norm (deterministic choice).
pub(crate) fn minimal_element(dom: &DomainInstance, ideal: &FracIdealD) -> FieldElem {
    let bound = ideal
        .z_basis(dom)
        .iter()
        .map(|e| dom.elem_norm(e))
        .min()
        .expect("nonempty basis");
    ideal_points(dom, ideal, &bound)
        .into_iter()
        .next()
        .expect("basis vectors lie within their own norm")
        .1
}

/// A generator of the ideal if it is principal. Over ℤ[√d] with d < 0 a
/// generator has minimal norm among nonzero elements, so checking the
/// minimal element suffices.
pub(crate) fn principal_generator(dom: &DomainInstance, ideal: &FracIdealD) -> Option<FieldElem> {
    if dom.is_field() {
        return Some(FieldElem::one());
    }
    let x = minimal_element(dom, ideal);
    (dom.principal_ideal(&x).ok()? == *ideal).then_some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::PrimePlace;

    #[test]
    fn points_of_p2() {
        let dom = DomainInstance::quadratic(-5).unwrap();
        let p2 = dom.place_ideal(&PrimePlace::split(2, 1));
        let pts = ideal_points(&dom, &p2, &BigRational::from_integer(6.into()));
        let norms: Vec<_> = pts.iter().map(|(n, _)| n.to_integer()).collect();
        assert_eq!(norms, vec![4.into(), 4.into(), 6.into(), 6.into(), 6.into(), 6.into()]);
        assert!(principal_generator(&dom, &p2).is_none());
        let two = dom.principal_ideal(&FieldElem::from_i64(2)).unwrap();
        assert_eq!(principal_generator(&dom, &two), Some(FieldElem::from_i64(2)));
    }

    #[test]
    fn points_over_integers() {
        let dom = DomainInstance::integers();
        let i = dom.principal_ideal(&FieldElem::ratio(3, 2)).unwrap();
        let pts = ideal_points(&dom, &i, &BigRational::from_integer(3.into()));
        let xs: Vec<String> = pts.iter().map(|(_, e)| e.to_string()).collect();
        assert_eq!(xs, vec!["3/2", "-3/2", "3", "-3"]);
        assert_eq!(minimal_element(&dom, &i), FieldElem::ratio(3, 2));
    }
}
