//! Brute-force count of numerical semigroups by genus, independent of the
//! semigroup tree: every `g`-subset of `{1, ..., 2g-1}` is tried as a gap
//! set and kept when its complement is additively closed.

/// Number of semigroups of genus `g`. Exponential in `g`; meant for `g <= 10`.
pub fn count_by_gap_subsets(g: u32) -> u64 {
    if g == 0 {
        return 1;
    }
    let top = 2 * g - 1;
    assert!(top < 64, "gap subsets are enumerated as u64 masks");
    let mut count = 0;
    // Gosper's hack over g-element subsets of bit positions 0..top; bit `i`
    // stands for the gap `i + 1`.
    let mut mask: u64 = (1u64 << g) - 1;
    while mask >> top == 0 {
        if complement_closed(mask << 1, top) {
            count += 1;
        }
        let low = mask & mask.wrapping_neg();
        let ripple = mask + low;
        mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
    count
}

fn complement_closed(gaps: u64, top: u32) -> bool {
    let member = |x: u32| x > top || gaps & (1u64 << x) == 0;
    for a in 1..=top {
        if !member(a) {
            continue;
        }
        for b in a..=top - a {
            if member(b) && !member(a + b) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_genera() {
        let counts: Vec<u64> = (0..=7).map(count_by_gap_subsets).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 7, 12, 23, 39]);
    }
}
