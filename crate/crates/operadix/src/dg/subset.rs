//! Subsets of `{1..n}` as bitmasks, and the subset composition underlying
//! the generator differential.

use super::DgError;

/// Bitmask subset: bit `j-1` set means `j` is a member.
pub type Subset = u64;

pub fn subset_from_iter<I: IntoIterator<Item = usize>>(it: I) -> Subset {
    it.into_iter().fold(0, |acc, j| {
        assert!(j >= 1 && j <= 64);
        acc | (1 << (j - 1))
    })
}

/// Ascending members of the subset (1-based).
pub fn subset_members(s: Subset) -> impl Iterator<Item = usize> {
    (1..=64).filter(move |j| s & (1 << (j - 1)) != 0)
}

/// `S + m = { x + m : x in S }`.  Negative shifts use `m < 0` via i64.
pub fn subset_shift(s: Subset, m: i64) -> Subset {
    if m >= 0 {
        s << m
    } else {
        s >> (-m)
    }
}

/// Compose `S1 <= {1..p}` with `S2 <= {1..q}` at slot `i`
/// (`1 <= i <= p - |S1|`), producing the pair `(r, S1 o_i S2)` where `r` is
/// the position index of the slot among the gaps of `S1`: writing
/// `S1 = {j_1 < ... < j_s}` and letting `c` be the `i`-th element of the
/// complement of `S1` in `{1..p}`, `r` is determined by
/// `j_{r-1} < c < j_r`, with `r = 1` when `c < j_1` and `r = s + 1` when
/// `c > j_s`.  The result is
/// `{j_1, ..., j_{r-1}} ∪ {k + i + r - 2 : k in S2} ∪ {j_r + q - 1, ..., j_s + q - 1}`.
pub fn subset_circ(
    s1: Subset,
    p: usize,
    i: usize,
    s2: Subset,
    q: usize,
) -> Result<(usize, Subset), DgError> {
    let s1_card = s1.count_ones() as usize;
    let slots = p - s1_card;
    if i == 0 || i > slots {
        return Err(DgError::SlotRange { slot: i, arity: slots });
    }
    let js: Vec<usize> = subset_members(s1).collect();
    let complement: Vec<usize> = (1..=p).filter(|j| s1 & (1 << (j - 1)) == 0).collect();
    let c = complement[i - 1];
    let r = js.iter().take_while(|&&j| j < c).count() + 1;
    let mut out: Subset = 0;
    for &j in &js[..r - 1] {
        out |= 1 << (j - 1);
    }
    for k in subset_members(s2) {
        out |= 1 << (k + i + r - 2 - 1);
    }
    for &j in &js[r - 1..] {
        out |= 1 << (j + q - 1 - 1);
    }
    debug_assert_eq!(
        out.count_ones(),
        s1.count_ones() + s2.count_ones(),
        "subset composition must be disjoint"
    );
    debug_assert_eq!(out >> (p + q - 1), 0);
    Ok((r, out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_values() {
        // {2} in {1..3} composed at slot 2 with {1} in {1..2}
        let (r, s) = subset_circ(subset_from_iter([2]), 3, 2, subset_from_iter([1]), 2).unwrap();
        assert_eq!(r, 2);
        assert_eq!(s, subset_from_iter([2, 3]));
        // {3} in {1..3} composed at slot 1 with {2} in {1..2}
        // {3} in {1..3} composed at slot 1 with {2} in {1..2}: the inserted
        // block occupies positions 1..2, so the mark lands at k+i+r-2 = 2
        let (r, s) = subset_circ(subset_from_iter([3]), 3, 1, subset_from_iter([2]), 2).unwrap();
        assert_eq!(r, 1);
        assert_eq!(s, subset_from_iter([2, 4]));
    }

    #[test]
    fn slot_range_checked() {
        assert!(subset_circ(subset_from_iter([1]), 2, 2, subset_from_iter([1]), 1).is_err());
        assert!(subset_circ(subset_from_iter([1]), 2, 0, subset_from_iter([1]), 1).is_err());
    }

    #[test]
    fn cardinality_exhaustive_small() {
        for p in 1..=5usize {
            for s1 in 1u64..(1 << p) {
                let card = s1.count_ones() as usize;
                for q in 1..=4usize {
                    for s2 in 1u64..(1 << q) {
                        for i in 1..=(p - card) {
                            let (_, out) = subset_circ(s1, p, i, s2, q).unwrap();
                            assert_eq!(out.count_ones(), s1.count_ones() + s2.count_ones());
                            assert_eq!(out >> (p + q - 1), 0);
                        }
                    }
                }
            }
        }
    }
}
