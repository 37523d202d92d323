/// Every vector in ℕ₀ʳ with coordinate sum exactly `total`, in descending
/// lexicographic order.
pub(crate) fn with_total(r: usize, total: u32, f: &mut impl FnMut(&[i64])) {
    if r == 0 {
        if total == 0 {
            f(&[]);
        }
        return;
    }
    let mut buf = vec![0i64; r];
    fill(&mut buf, 0, total as i64, f);
}

fn fill(buf: &mut Vec<i64>, i: usize, rest: i64, f: &mut impl FnMut(&[i64])) {
    if i + 1 == buf.len() {
        buf[i] = rest;
        f(buf);
        return;
    }
    for v in (0..=rest).rev() {
        buf[i] = v;
        fill(buf, i + 1, rest - v, f);
    }
}

/// Every vector in ℕ₀ʳ with sum at most `bound`, by increasing sum.
pub(crate) fn up_to(r: usize, bound: u32, mut f: impl FnMut(&[i64])) {
    for t in 0..=bound {
        with_total(r, t, &mut f);
    }
}
