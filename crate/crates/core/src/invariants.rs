//! Exhaustive property checks over the semigroup tree at small genus.
//!
//! Each check walks every semigroup up to a genus bound and returns the
//! number of cases examined, or a description of the first counterexample.

use std::collections::HashSet;

use crate::semigroup::{p_semigroup, p_strong_generators, strong_count_formula, Semigroup};
use crate::walker::{for_each_semigroup, gcd_below_frobenius, is_infinite_chain};

pub type CheckResult = Result<u64, String>;

fn walk_checked<F>(max_genus: u32, mut check: F) -> CheckResult
where
    F: FnMut(&Semigroup) -> Result<u64, String>,
{
    let mut cases = 0;
    let mut failure = None;
    for_each_semigroup(max_genus, |s| {
        if failure.is_some() {
            return;
        }
        match check(s) {
            Ok(n) => cases += n,
            Err(e) => failure = Some(e),
        }
    });
    failure.map_or(Ok(cases), Err)
}

/// Children of a non-ordinary semigroup: removing the `i`-th effective
/// generator leaves the later ones, plus `λ₁ + ν_i` exactly when `ν_i` is
/// strong.
pub fn child_generator_structure(max_genus: u32) -> CheckResult {
    walk_checked(max_genus, |s| {
        if s.is_ordinary() || s.genus() >= max_genus {
            return Ok(0);
        }
        let info = s.classify_effective();
        for (i, gen) in info.iter().enumerate() {
            let child = s.child_removing(gen.value).expect("effective generator");
            let mut expected: Vec<u32> = info[i + 1..].iter().map(|x| x.value).collect();
            if gen.strong {
                expected.push(s.multiplicity() + gen.value);
            }
            let actual = child.effective_generators();
            if actual != expected {
                return Err(format!(
                    "{s} minus {}: effective {actual:?}, expected {expected:?}",
                    gen.value
                ));
            }
        }
        Ok(info.len() as u64)
    })
}

/// For effective `λ < μ` of a non-ordinary semigroup with `μ` strong, `μ`
/// stays strong after removing `λ`.
pub fn strength_persists(max_genus: u32) -> CheckResult {
    walk_checked(max_genus, |s| {
        if s.is_ordinary() || s.genus() >= max_genus {
            return Ok(0);
        }
        let info = s.classify_effective();
        let mut cases = 0;
        for (i, small) in info.iter().enumerate() {
            let child = s.child_removing(small.value).expect("effective generator");
            for big in info[i + 1..].iter().filter(|x| x.strong) {
                cases += 1;
                if !child.is_strong(big.value) {
                    return Err(format!(
                        "{} strong in {s} but weak after removing {}",
                        big.value, small.value
                    ));
                }
            }
        }
        Ok(cases)
    })
}

/// Upper bounds on the healthy-generator count of each child, given `h`
/// healthy generators followed by `e - h` very weak ones.
pub fn healthy_count_bounds(max_genus: u32) -> CheckResult {
    walk_checked(max_genus, |s| {
        if s.is_ordinary() || s.genus() >= max_genus {
            return Ok(0);
        }
        let info = s.classify_effective();
        let e = info.len() as i64;
        let h = info.iter().take_while(|x| x.healthy()).count() as i64;
        if info[h as usize..].iter().any(|x| x.healthy()) {
            return Err(format!("{s}: healthy generators are not a prefix"));
        }
        for (idx, gen) in info.iter().enumerate() {
            let i = idx as i64 + 1;
            let child = s.child_removing(gen.value).expect("effective generator");
            let healthy = child
                .classify_effective()
                .iter()
                .filter(|x| x.healthy())
                .count() as i64;
            let bound = if i <= h {
                (h - i + 2).min(e - i + 1)
            } else if i == h + 1 {
                1.min(e - h - 1)
            } else {
                0
            };
            if healthy > bound {
                return Err(format!(
                    "{s} minus {}: {healthy} healthy, bound {bound}",
                    gen.value
                ));
            }
        }
        Ok(e as u64)
    })
}

/// Strong generators are never very weak.
pub fn strong_implies_healthy(max_genus: u32) -> CheckResult {
    walk_checked(max_genus, |s| {
        let info = s.classify_effective();
        match info.iter().find(|x| x.strong && x.very_weak) {
            Some(bad) if !s.is_ordinary() => {
                Err(format!("{} is strong and very weak in {s}", bad.value))
            }
            _ => Ok(info.len() as u64),
        }
    })
}

/// A semigroup whose multiplicity exceeds twice its number of effective
/// generators has finitely many descendants.
pub fn large_multiplicity_is_finite(max_genus: u32) -> CheckResult {
    walk_checked(max_genus, |s| {
        let e = s.effective_generators().len() as u32;
        if s.multiplicity() > 2 * e {
            if is_infinite_chain(s) {
                return Err(format!("{s} has λ₁ > 2e but an infinite chain"));
            }
            return Ok(1);
        }
        Ok(0)
    })
}

/// Removing the Frobenius number of a child gives back the parent.
pub fn parent_recovery(max_genus: u32) -> CheckResult {
    walk_checked(max_genus, |s| {
        if s.genus() >= max_genus {
            return Ok(0);
        }
        let kids = s.children();
        for child in &kids {
            let gaps = child
                .gaps()
                .iter()
                .copied()
                .filter(|&x| x != child.frobenius());
            match Semigroup::from_gaps(gaps) {
                Ok(p) if &p == s => {}
                other => return Err(format!("parent of {child} is {other:?}, expected {s}")),
            }
        }
        Ok(kids.len() as u64)
    })
}

/// Strong generators of `P_{g,k+1}` by direct classification agree with the
/// case-by-case list and with `s(g,k)`.
pub fn p_family_strong_sets(max_g: u32, max_k: u32) -> CheckResult {
    let mut cases = 0;
    for g in 2..=max_g {
        for k in 2..=max_k {
            let p = p_semigroup(g, k + 1).map_err(|e| e.to_string())?;
            let strong: Vec<u32> = p
                .classify_effective()
                .iter()
                .filter(|x| x.strong)
                .map(|x| x.value)
                .collect();
            let listed = p_strong_generators(g, k).map_err(|e| e.to_string())?;
            let count = strong_count_formula(g, k).map_err(|e| e.to_string())?;
            if strong != listed || strong.len() as u32 != count {
                return Err(format!(
                    "P_({g},{}) = {p}: strong {strong:?}, listed {listed:?}, s = {count}",
                    k + 1
                ));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

/// Divides the elements below `f` of a non-ordinary infinite-chain
/// semigroup by their gcd `d` and fills in everything above `⌊f/d⌋`.
pub fn gcd_quotient(s: &Semigroup) -> Option<(Semigroup, u32)> {
    let d = gcd_below_frobenius(s);
    if s.is_ordinary() || d <= 1 {
        return None;
    }
    let f = s.frobenius();
    let top = f / d;
    let gaps = (1..=top).filter(|&x| !(x * d < f && s.contains(x * d)));
    Some((
        Semigroup::from_gaps(gaps).expect("quotient is a semigroup"),
        d,
    ))
}

/// Inverse of [`gcd_quotient`]: multiply by `d` and add every integer above
/// the `genus`-th gap.
pub fn gcd_unquotient(q: &Semigroup, d: u32, genus: u32) -> Option<Semigroup> {
    let mut gaps = Vec::with_capacity(genus as usize);
    let mut x = 1;
    while (gaps.len() as u32) < genus {
        if x % d != 0 || !q.contains(x / d) {
            gaps.push(x);
        }
        x += 1;
    }
    Semigroup::from_gaps(gaps).ok()
}

/// The quotient map is injective on each genus, lands in genus at most
/// `⌊(g-1)/2⌋`, and is undone by [`gcd_unquotient`].
pub fn gcd_quotient_injective(max_genus: u32) -> CheckResult {
    let mut seen: HashSet<(u32, Vec<u32>, u32)> = HashSet::new();
    walk_checked(max_genus, |s| {
        let Some((q, d)) = gcd_quotient(s) else {
            return Ok(0);
        };
        let g = s.genus();
        let expected_genus = g + s.frobenius() / d - s.frobenius();
        if q.genus() != expected_genus || q.genus() > (g - 1) / 2 || d > g {
            return Err(format!("{s} ↦ ({q}, {d}) has genus {}", q.genus()));
        }
        if gcd_unquotient(&q, d, g).as_ref() != Some(s) {
            return Err(format!("{s} not recovered from ({q}, {d})"));
        }
        if !seen.insert((g, q.gaps().to_vec(), d)) {
            return Err(format!("({q}, {d}) hit twice at genus {g}"));
        }
        Ok(1)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariants_hold_to_genus_ten() {
        assert!(child_generator_structure(10).unwrap() > 0);
        assert!(strength_persists(10).unwrap() > 0);
        assert!(healthy_count_bounds(10).unwrap() > 0);
        assert!(strong_implies_healthy(10).is_ok());
        assert!(large_multiplicity_is_finite(10).unwrap() > 0);
        assert!(parent_recovery(10).unwrap() > 0);
        assert!(gcd_quotient_injective(12).unwrap() > 0);
    }

    #[test]
    fn p_family() {
        assert_eq!(p_family_strong_sets(8, 8), Ok(7 * 7));
    }

    #[test]
    fn quotient_example() {
        // ⟨4,6|9,11⟩ (gaps 1,2,3,5,7): elements below 7 are 0,4,6, gcd 2.
        let s = Semigroup::from_generators(&[4, 6, 9, 11]).unwrap();
        let (q, d) = gcd_quotient(&s).unwrap();
        assert_eq!(d, 2);
        assert_eq!(q.gaps(), &[1]);
        assert_eq!(gcd_unquotient(&q, d, s.genus()), Some(s));
        assert!(gcd_quotient(&Semigroup::ordinary(4)).is_none());
    }
}
