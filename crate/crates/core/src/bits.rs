//! Fixed-cardinality subset iteration in ascending mask order.

/// Iterates all `k`-element subsets of `{0, .., n-1}` as u64 masks,
/// strictly ascending (Gosper's hack).
pub(crate) struct Subsets {
    next: Option<u64>,
    limit_bit: usize,
}

impl Subsets {
    pub fn new(n: usize, k: usize) -> Self {
        debug_assert!(n <= 64);
        let next = if k == 0 || k > n {
            None
        } else {
            Some((1u64 << (k - 1) << 1).wrapping_sub(1))
        };
        Subsets { next, limit_bit: n }
    }
}

impl Iterator for Subsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let m = self.next?;
        if 64 - m.leading_zeros() as usize > self.limit_bit {
            self.next = None;
            return None;
        }
        // successor with equal popcount
        let c = m & m.wrapping_neg();
        self.next = m.checked_add(c).map(|r| (((r ^ m) >> 2) / c) | r);
        Some(m)
    }
}

/// Binomial coefficient, saturating at u128::MAX.
pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}
