//! Numerical semigroups stored by their gap set.
//!
//! A [`Semigroup`] keeps the sorted gaps together with a dense membership
//! window covering `0..=2g+2`. Every integer above the window (in fact every
//! integer above the Frobenius number) is an element, so all generator-level
//! questions reduce to lookups inside the window.

use std::fmt;

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("complement is not additively closed: {0} + {1} is a gap")]
    NotClosed(u32, u32),
    #[error("0 cannot be a gap")]
    ZeroGap,
    #[error("generators have gcd {0}, complement is infinite")]
    InfiniteComplement(u32),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

/// A numerical semigroup, i.e. a cofinite additive submonoid of the
/// non-negative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Semigroup {
    gaps: Vec<u32>,
    frobenius: u32,
    multiplicity: u32,
    window: Vec<bool>,
}

/// Classification of one effective generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorInfo {
    pub value: u32,
    pub effective: bool,
    pub strong: bool,
    pub very_weak: bool,
}

impl GeneratorInfo {
    pub fn weak(&self) -> bool {
        !self.strong
    }

    pub fn healthy(&self) -> bool {
        self.effective && !self.very_weak
    }
}

impl Semigroup {
    /// Builds the semigroup from an already sorted, valid gap list.
    fn from_sorted_gaps(gaps: Vec<u32>) -> Self {
        let genus = gaps.len();
        let frobenius = gaps.last().copied().unwrap_or(0);
        let len = (2 * genus + 3).max(frobenius as usize + 1);
        let mut window = vec![true; len];
        for &gap in &gaps {
            window[gap as usize] = false;
        }
        let multiplicity = (1..)
            .find(|&x: &u32| (x as usize) >= len || window[x as usize])
            .expect("window is finite");
        Semigroup {
            gaps,
            frobenius,
            multiplicity,
            window,
        }
    }

    /// The ordinary semigroup `{0, g+1, g+2, ...}`.
    pub fn ordinary(genus: u32) -> Self {
        Self::from_sorted_gaps((1..=genus).collect())
    }

    /// The root of the semigroup tree, `{0, 2, 3, ...}`.
    pub fn root() -> Self {
        Self::ordinary(1)
    }

    pub fn from_gaps<I: IntoIterator<Item = u32>>(gaps: I) -> Result<Self, SemigroupError> {
        let mut gaps: Vec<u32> = gaps.into_iter().collect();
        gaps.sort_unstable();
        gaps.dedup();
        if gaps.first() == Some(&0) {
            return Err(SemigroupError::ZeroGap);
        }
        let frobenius = gaps.last().copied().unwrap_or(0) as usize;
        let mut member = vec![true; frobenius + 1];
        for &gap in &gaps {
            member[gap as usize] = false;
        }
        for a in 1..=frobenius {
            if !member[a] {
                continue;
            }
            for b in a..=frobenius - a {
                if member[b] && !member[a + b] {
                    return Err(SemigroupError::NotClosed(a as u32, b as u32));
                }
            }
        }
        Ok(Self::from_sorted_gaps(gaps))
    }

    /// The semigroup generated by `generators`, which must be coprime.
    pub fn from_generators(generators: &[u32]) -> Result<Self, SemigroupError> {
        let gens: Vec<u32> = generators.iter().copied().filter(|&x| x > 0).collect();
        let d = gens.iter().fold(0u32, |acc, &x| acc.gcd(&x));
        if d != 1 {
            return Err(SemigroupError::InfiniteComplement(d));
        }
        let smallest = *gens.iter().min().expect("non-empty after gcd check") as usize;
        // Once `smallest` consecutive integers are reached, everything above is too.
        let mut member = vec![true];
        let mut run = 0usize;
        let mut x = 0usize;
        while run < smallest {
            x += 1;
            let hit = gens
                .iter()
                .any(|&gen| (gen as usize) <= x && member[x - gen as usize]);
            member.push(hit);
            run = if hit { run + 1 } else { 0 };
        }
        let gaps = (1..member.len())
            .filter(|&i| !member[i])
            .map(|i| i as u32)
            .collect();
        Ok(Self::from_sorted_gaps(gaps))
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    pub fn genus(&self) -> u32 {
        self.gaps.len() as u32
    }

    pub fn frobenius(&self) -> u32 {
        self.frobenius
    }

    /// Conductor `f + 1`, or 0 for ℕ₀.
    pub fn conductor(&self) -> u32 {
        if self.gaps.is_empty() {
            0
        } else {
            self.frobenius + 1
        }
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    pub fn is_ordinary(&self) -> bool {
        self.multiplicity == self.genus() + 1
    }

    pub fn contains(&self, x: u32) -> bool {
        self.window.get(x as usize).copied().unwrap_or(true)
    }

    /// Membership table for `0..=2g+2`.
    pub fn membership_window(&self) -> &[bool] {
        &self.window[..2 * self.gaps.len() + 3]
    }

    /// Elements of the semigroup strictly below `bound`, ascending.
    pub fn elements_below(&self, bound: u32) -> impl Iterator<Item = u32> + '_ {
        (0..bound).filter(move |&x| self.contains(x))
    }

    pub fn is_minimal_generator(&self, x: u32) -> bool {
        if x == 0 || !self.contains(x) {
            return false;
        }
        let m = self.multiplicity;
        !(m..=x / 2).any(|a| self.contains(a) && self.contains(x - a))
    }

    /// Minimal generators in ascending order. They all lie in `1..=f+λ₁`.
    pub fn minimal_generators(&self) -> Vec<u32> {
        let bound = self.frobenius + self.multiplicity;
        (1..=bound)
            .filter(|&x| self.is_minimal_generator(x))
            .collect()
    }

    pub fn effective_generators(&self) -> Vec<u32> {
        let bound = self.frobenius + self.multiplicity;
        (self.conductor().max(1)..=bound)
            .filter(|&x| self.is_minimal_generator(x))
            .collect()
    }

    /// Removes an effective generator. The caller guarantees `mu` is one.
    fn without_effective(&self, mu: u32) -> Semigroup {
        debug_assert!(mu > self.frobenius && self.is_minimal_generator(mu));
        let mut gaps = Vec::with_capacity(self.gaps.len() + 1);
        gaps.extend_from_slice(&self.gaps);
        gaps.push(mu);
        Self::from_sorted_gaps(gaps)
    }

    /// Whether the effective generator `mu` is strong, i.e. `λ₁ + mu` is a
    /// minimal generator of `self \ {mu}`.
    pub fn is_strong(&self, mu: u32) -> bool {
        let child = self.without_effective(mu);
        child.is_minimal_generator(self.multiplicity + mu)
    }

    pub fn classify_effective(&self) -> Vec<GeneratorInfo> {
        let threshold = 2 * self.genus() + 3;
        self.effective_generators()
            .into_iter()
            .map(|mu| GeneratorInfo {
                value: mu,
                effective: true,
                strong: self.is_strong(mu),
                very_weak: self.multiplicity + mu > threshold,
            })
            .collect()
    }

    /// Children in the semigroup tree, in ascending order of the removed
    /// generator.
    pub fn children(&self) -> Vec<Semigroup> {
        self.effective_generators()
            .into_iter()
            .map(|mu| self.without_effective(mu))
            .collect()
    }

    pub fn child_removing(&self, mu: u32) -> Option<Semigroup> {
        (mu > self.frobenius && self.is_minimal_generator(mu)).then(|| self.without_effective(mu))
    }

    /// `self ∪ {f}`; `None` for the genus 0 semigroup.
    pub fn parent(&self) -> Option<Semigroup> {
        let (_, rest) = self.gaps.split_last()?;
        Some(Self::from_sorted_gaps(rest.to_vec()))
    }
}

impl fmt::Display for Semigroup {
    /// Bracket notation `⟨μ₁,…,μ_r|μ_{r+1},…,μ_m⟩`, effective generators
    /// after the bar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.minimal_generators();
        let split = gens.partition_point(|&x| x <= self.frobenius);
        let join = |xs: &[u32]| xs.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "⟨{}|{}⟩", join(&gens[..split]), join(&gens[split..]))
    }
}

/// `P_{g,i}`: multiples of `g+1` together with everything above the first
/// `g+i-2` non-multiples, which are its gaps. For `i <= g+2` this is
/// `⟨g+1 | g+i, …, 2g+i⟩` with the multiple of `g+1` left out; beyond that
/// the interval form would put `2(g+1)` below the Frobenius number.
pub fn p_semigroup(g: u32, i: u32) -> Result<Semigroup, SemigroupError> {
    if g < 1 || i < 3 {
        return Err(SemigroupError::InvalidParams(format!(
            "P_(g,i) needs g >= 1 and i >= 3, got g = {g}, i = {i}"
        )));
    }
    let m = g + 1;
    Semigroup::from_gaps((1..).filter(|x| x % m != 0).take((g + i - 2) as usize))
}

/// Number of strong generators of `P_{g,k+1}`.
pub fn strong_count_formula(g: u32, k: u32) -> Result<u32, SemigroupError> {
    if g < 1 || k < 2 {
        return Err(SemigroupError::InvalidParams(format!(
            "s(g,k) needs g >= 1 and k >= 2, got g = {g}, k = {k}"
        )));
    }
    let half = g.div_ceil(2);
    Ok(if k <= half {
        k
    } else if k <= g {
        k - 1
    } else {
        g
    })
}

/// The strong generators of `P_{g,k+1}` as listed case by case, independent
/// of [`Semigroup::is_strong`]. For `k > g` every effective generator is
/// strong: the `g` non-multiples of `g+1` right above the Frobenius number,
/// which is `g+k..2g+k+1` minus the multiple while `k <= g+1`.
pub fn p_strong_generators(g: u32, k: u32) -> Result<Vec<u32>, SemigroupError> {
    strong_count_formula(g, k)?;
    let half = g.div_ceil(2);
    Ok(if k <= half {
        (g + k + 1..=g + 2 * k).collect()
    } else if k <= g {
        (g + k + 1..=g + 2 * k)
            .filter(|&x| x != 2 * g + 2)
            .collect()
    } else {
        let genus = g + k - 1;
        let frobenius = genus + (genus - 1) / g;
        (frobenius + 1..)
            .filter(|x| x % (g + 1) != 0)
            .take(g as usize)
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u32]) -> Semigroup {
        Semigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn ordinary_semigroups() {
        let root = Semigroup::ordinary(1);
        assert_eq!(root.gaps(), &[1]);
        assert_eq!(root.minimal_generators(), vec![2, 3]);
        assert_eq!(root.to_string(), "⟨|2,3⟩");

        let zero = Semigroup::ordinary(0);
        assert!(zero.gaps().is_empty());
        assert_eq!(zero.frobenius(), 0);
        assert_eq!(zero.multiplicity(), 1);

        let o4 = Semigroup::ordinary(4);
        assert_eq!(o4.effective_generators(), vec![5, 6, 7, 8, 9]);
        for g in 1..12 {
            let o = Semigroup::ordinary(g);
            assert_eq!(
                o.minimal_generators(),
                (g + 1..=2 * g + 1).collect::<Vec<_>>()
            );
            assert_eq!(o.effective_generators().len() as u32, g + 1);
            assert!(o.is_ordinary());
        }
    }

    #[test]
    fn from_gaps_example() {
        let s = Semigroup::from_gaps([1, 2, 3, 4, 5, 7, 8, 10, 11]).unwrap();
        assert_eq!(s.genus(), 9);
        assert_eq!(s.frobenius(), 11);
        assert_eq!(s.multiplicity(), 6);
        assert_eq!(s.minimal_generators(), vec![6, 9, 13, 14, 16, 17]);
        assert_eq!(s.to_string(), "⟨6,9|13,14,16,17⟩");
        assert_eq!(s, sg(&[6, 9, 13, 14, 16, 17]));

        assert_eq!(Semigroup::from_gaps([1]).unwrap(), Semigroup::root());
        assert_eq!(
            Semigroup::from_gaps([2]),
            Err(SemigroupError::NotClosed(1, 1))
        );
        assert_eq!(Semigroup::from_gaps([0, 1]), Err(SemigroupError::ZeroGap));
        assert_eq!(
            Semigroup::from_generators(&[4, 6]),
            Err(SemigroupError::InfiniteComplement(2))
        );
    }

    #[test]
    fn classification_examples() {
        let s = sg(&[6, 9, 13, 14, 16, 17]);
        let info = s.classify_effective();
        let values: Vec<u32> = info.iter().map(|i| i.value).collect();
        assert_eq!(values, vec![13, 14, 16, 17]);
        let strong: Vec<bool> = info.iter().map(|i| i.strong).collect();
        assert_eq!(strong, vec![true, true, false, false]);
        // 6 + 16 = 22 exceeds 2g + 3 = 21, so 16 is very weak by definition.
        let very_weak: Vec<bool> = info.iter().map(|i| i.very_weak).collect();
        assert_eq!(very_weak, vec![false, false, true, true]);

        let s = sg(&[3, 5, 7]);
        assert_eq!(s.to_string(), "⟨3|5,7⟩");
        let info = s.classify_effective();
        assert_eq!(info.len(), 2);
        assert!(info[0].strong && info[0].value == 5);
        assert!(info[1].weak() && info[1].value == 7);

        let leaf = Semigroup::from_gaps([1, 2, 3, 7]).unwrap();
        assert_eq!(leaf.to_string(), "⟨4,5,6|⟩");
        assert!(leaf.classify_effective().is_empty());
    }

    #[test]
    fn children_examples() {
        let s = sg(&[3, 7, 8]);
        let kids: Vec<String> = s.children().iter().map(|c| c.to_string()).collect();
        assert_eq!(kids, vec!["⟨3|8,10⟩", "⟨3,7|11⟩"]);

        let kids: Vec<String> = Semigroup::ordinary(2)
            .children()
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(kids, vec!["⟨|4,5,6,7⟩", "⟨3|5,7⟩", "⟨3,4|⟩"]);

        assert!(sg(&[4, 5, 6]).children().is_empty());
        for child in s.children() {
            assert_eq!(child.genus(), s.genus() + 1);
            assert_eq!(child.parent().unwrap(), s);
        }
    }

    #[test]
    fn p_semigroups() {
        assert_eq!(p_semigroup(1, 3).unwrap().to_string(), "⟨2|5⟩");
        assert_eq!(p_semigroup(2, 3).unwrap().to_string(), "⟨3|5,7⟩");
        assert!(p_semigroup(0, 3).is_err());
        assert!(p_semigroup(2, 2).is_err());
        for g in 1..10 {
            for i in 3..12 {
                let p = p_semigroup(g, i).unwrap();
                assert_eq!(p.genus(), g + i - 2);
                assert_eq!(p.effective_generators().len() as u32, g);
                let next = p_semigroup(g, i + 1).unwrap();
                assert!(p.children().contains(&next));
                let smallest = p.effective_generators()[0];
                assert_eq!(p.child_removing(smallest).as_ref(), Some(&next));
            }
        }
        // The interval form agrees up to i = g + 2.
        for g in 1..10 {
            for i in 3..=g + 2 {
                let mut gens = vec![g + 1];
                gens.extend((g + i..=2 * g + i).filter(|x| x % (g + 1) != 0));
                assert_eq!(sg(&gens), p_semigroup(g, i).unwrap());
            }
        }
        assert_eq!(p_semigroup(1, 4).unwrap().to_string(), "⟨2|7⟩");
    }

    #[test]
    fn strong_count_cases() {
        assert_eq!(strong_count_formula(9, 4), Ok(4));
        assert_eq!(strong_count_formula(2, 2), Ok(1));
        assert_eq!(strong_count_formula(1, 5), Ok(1));
        assert!(strong_count_formula(0, 5).is_err());
        assert!(strong_count_formula(3, 1).is_err());
    }
}
