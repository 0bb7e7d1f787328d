//! Depth-first enumeration of the semigroup tree.
//!
//! Nodes are kept as decomposition counts: `dec[x]` is the number of pairs
//! `a <= b` of elements with `a + b = x` (so `dec[x] == 1` exactly when `x`
//! is a minimal generator, the pair being `0 + x`). Removing an effective
//! generator `x` only lowers `dec[y]` for `y >= x`, by one wherever `y - x`
//! was an element, so a child costs one pass over a fixed-size array.
//!
//! Work is split at a fixed depth into independent subtrees that are counted
//! on a rayon pool and merged by addition.

use num_bigint::BigUint;
use num_integer::Integer;
use rayon::prelude::*;
use thiserror::Error;

use crate::semigroup::Semigroup;

/// Largest genus the walker accepts.
pub const MAX_GENUS_CAP: u32 = 64;

/// Number of semigroups of genus 0 (only ℕ₀).
pub const N_ZERO: u64 = 1;

const WIDTH: usize = 2 * MAX_GENUS_CAP as usize + 2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("max genus {requested} exceeds the build cap {cap}")]
    ResourceLimit { requested: u32, cap: u32 },
    #[error("max genus must be at least 1")]
    EmptyRange,
    #[error("worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkConfig {
    pub max_genus: u32,
    pub workers: usize,
    pub collect_multiplicity: bool,
    pub collect_infinite: bool,
    /// Genus at which the tree is cut into independent jobs.
    pub split_depth: u32,
}

impl WalkConfig {
    pub fn new(max_genus: u32) -> Self {
        WalkConfig {
            max_genus,
            workers: 1,
            collect_multiplicity: false,
            collect_infinite: false,
            split_depth: 12,
        }
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub fn with_multiplicity(mut self) -> Self {
        self.collect_multiplicity = true;
        self
    }

    pub fn with_infinite(mut self) -> Self {
        self.collect_infinite = true;
        self
    }

    pub fn split_depth(mut self, depth: u32) -> Self {
        self.split_depth = depth.max(1);
        self
    }
}

/// Per-genus counts. Genus `g` lives at index `g - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkResult {
    pub n: Vec<BigUint>,
    pub n_by_mult: Option<Vec<Vec<BigUint>>>,
    pub m: Option<Vec<BigUint>>,
}

impl WalkResult {
    pub fn max_genus(&self) -> u32 {
        self.n.len() as u32
    }

    pub fn count(&self, genus: u32) -> &BigUint {
        &self.n[genus as usize - 1]
    }

    pub fn infinite(&self, genus: u32) -> Option<&BigUint> {
        self.m.as_ref().map(|m| &m[genus as usize - 1])
    }

    /// Count of genus `genus` semigroups with the given multiplicity; row
    /// `g` has entries for multiplicities `0..=g+1`.
    pub fn by_multiplicity(&self, genus: u32, multiplicity: u32) -> Option<&BigUint> {
        self.n_by_mult
            .as_ref()
            .and_then(|rows| rows[genus as usize - 1].get(multiplicity as usize))
    }
}

#[derive(Clone)]
struct Node {
    dec: [u8; WIDTH],
    genus: u32,
    conductor: u32,
    multiplicity: u32,
    /// gcd of the elements below the Frobenius number; 0 when that set is {0}.
    gcd_below_f: u32,
}

impl Node {
    fn from_semigroup(s: &Semigroup) -> Node {
        let mut dec = [0u8; WIDTH];
        for (x, slot) in dec.iter_mut().enumerate() {
            let x = x as u32;
            *slot = (0..=x / 2)
                .filter(|&a| s.contains(a) && s.contains(x - a))
                .count() as u8;
        }
        Node {
            dec,
            genus: s.genus(),
            conductor: s.conductor(),
            multiplicity: s.multiplicity(),
            gcd_below_f: gcd_below_frobenius(s),
        }
    }

    fn root() -> Node {
        Node::from_semigroup(&Semigroup::root())
    }

    /// Effective generators lie in `[c, c + m)` and never exceed `2g + 1`.
    fn effective(&self) -> impl Iterator<Item = u32> + '_ {
        let end = (self.conductor + self.multiplicity).min(2 * self.genus + 2);
        (self.conductor..end).filter(|&x| self.dec[x as usize] == 1)
    }

    fn child_multiplicity(&self, removed: u32) -> u32 {
        if removed == self.multiplicity {
            self.multiplicity + 1
        } else {
            self.multiplicity
        }
    }

    fn child_gcd(&self, removed: u32) -> u32 {
        // Elements below the new Frobenius number `removed` are the old ones
        // below f together with the run c..removed.
        match removed - self.conductor {
            0 => self.gcd_below_f,
            1 => self.gcd_below_f.gcd(&self.conductor),
            _ => 1,
        }
    }

    fn child(&self, removed: u32, limit: usize) -> Node {
        let x = removed as usize;
        let mut dec = self.dec;
        for (d, &below) in dec[x..limit].iter_mut().zip(&self.dec[..limit - x]) {
            *d -= (below > 0) as u8;
        }
        Node {
            dec,
            genus: self.genus + 1,
            conductor: removed + 1,
            multiplicity: self.child_multiplicity(removed),
            gcd_below_f: self.child_gcd(removed),
        }
    }
}

/// gcd of the elements of `s` below its Frobenius number (0 for `{0}`).
pub fn gcd_below_frobenius(s: &Semigroup) -> u32 {
    s.elements_below(s.frobenius())
        .fold(0, |acc, x| acc.gcd(&x))
}

/// Whether `s` has infinitely many descendants in the semigroup tree:
/// the gcd of its elements below the Frobenius number differs from 1.
pub fn is_infinite_chain(s: &Semigroup) -> bool {
    gcd_below_frobenius(s) != 1
}

#[derive(Clone)]
struct Counters {
    n: Vec<u64>,
    by_mult: Option<Vec<Vec<u64>>>,
    infinite: Option<Vec<u64>>,
}

impl Counters {
    fn new(config: &WalkConfig) -> Counters {
        let g = config.max_genus as usize;
        Counters {
            n: vec![0; g],
            by_mult: config
                .collect_multiplicity
                .then(|| (1..=g).map(|genus| vec![0; genus + 2]).collect()),
            infinite: config.collect_infinite.then(|| vec![0; g]),
        }
    }

    fn record(&mut self, genus: u32, multiplicity: u32, infinite: bool) {
        let i = genus as usize - 1;
        self.n[i] += 1;
        if let Some(rows) = &mut self.by_mult {
            rows[i][multiplicity as usize] += 1;
        }
        if let Some(m) = &mut self.infinite {
            m[i] += infinite as u64;
        }
    }

    fn merge(mut self, other: Counters) -> Counters {
        for (a, b) in self.n.iter_mut().zip(other.n) {
            *a += b;
        }
        if let (Some(a), Some(b)) = (&mut self.by_mult, other.by_mult) {
            for (row_a, row_b) in a.iter_mut().zip(b) {
                for (x, y) in row_a.iter_mut().zip(row_b) {
                    *x += y;
                }
            }
        }
        if let (Some(a), Some(b)) = (&mut self.infinite, other.infinite) {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
        }
        self
    }

    fn into_result(self) -> WalkResult {
        let big = |v: Vec<u64>| v.into_iter().map(BigUint::from).collect::<Vec<_>>();
        WalkResult {
            n: big(self.n),
            n_by_mult: self.by_mult.map(|rows| rows.into_iter().map(big).collect()),
            m: self.infinite.map(big),
        }
    }
}

struct Walker<'a> {
    config: &'a WalkConfig,
    /// Entries of `dec` above this index are never consulted.
    limit: usize,
}

impl Walker<'_> {
    /// Counts `node` and its whole subtree up to the max genus.
    fn count_subtree(&self, node: &Node, counters: &mut Counters) {
        counters.record(node.genus, node.multiplicity, node.gcd_below_f != 1);
        if node.genus == self.config.max_genus {
            return;
        }
        if node.genus + 1 == self.config.max_genus {
            // Leaves are counted without materializing them.
            for x in node.effective() {
                counters.record(
                    node.genus + 1,
                    node.child_multiplicity(x),
                    node.child_gcd(x) != 1,
                );
            }
            return;
        }
        for x in node.effective() {
            let child = node.child(x, self.limit);
            self.count_subtree(&child, counters);
        }
    }

    /// Counts every node above `depth` and returns the nodes at `depth`.
    fn frontier(&self, depth: u32, counters: &mut Counters) -> Vec<Node> {
        let mut level = vec![Node::root()];
        for _ in 1..depth {
            let mut next = Vec::new();
            for node in &level {
                counters.record(node.genus, node.multiplicity, node.gcd_below_f != 1);
                next.extend(node.effective().map(|x| node.child(x, self.limit)));
            }
            level = next;
        }
        level
    }
}

/// Enumerates the semigroup tree from `⟨|2,3⟩` down to `config.max_genus`.
pub fn enumerate(config: &WalkConfig) -> Result<WalkResult, WalkError> {
    if config.max_genus < 1 {
        return Err(WalkError::EmptyRange);
    }
    if config.max_genus > MAX_GENUS_CAP {
        return Err(WalkError::ResourceLimit {
            requested: config.max_genus,
            cap: MAX_GENUS_CAP,
        });
    }
    let walker = Walker {
        config,
        limit: (2 * config.max_genus as usize + 2).min(WIDTH),
    };
    let mut counters = Counters::new(config);
    if config.max_genus <= config.split_depth || config.workers <= 1 {
        walker.count_subtree(&Node::root(), &mut counters);
        return Ok(counters.into_result());
    }

    let jobs = walker.frontier(config.split_depth, &mut counters);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| WalkError::Pool(e.to_string()))?;
    let empty = Counters::new(config);
    let merged = pool.install(|| {
        jobs.par_iter()
            .fold(
                || empty.clone(),
                |mut acc, node| {
                    walker.count_subtree(node, &mut acc);
                    acc
                },
            )
            .reduce(|| empty.clone(), Counters::merge)
    });
    Ok(counters.merge(merged).into_result())
}

/// `m_g` for `g = 1..=max_genus`.
pub fn infinite_counts(config: &WalkConfig) -> Result<Vec<BigUint>, WalkError> {
    let config = WalkConfig {
        collect_infinite: true,
        ..config.clone()
    };
    Ok(enumerate(&config)?.m.expect("infinite counts requested"))
}

/// `n_{g,λ}`; row `g - 1` is indexed by multiplicity.
pub fn enumerate_by_multiplicity(config: &WalkConfig) -> Result<Vec<Vec<BigUint>>, WalkError> {
    let config = WalkConfig {
        collect_multiplicity: true,
        ..config.clone()
    };
    Ok(enumerate(&config)?
        .n_by_mult
        .expect("multiplicity counts requested"))
}

/// Visits every semigroup of genus `1..=max_genus` in depth-first order
/// using the full [`Semigroup`] representation. Slow; meant for exhaustive
/// property checks at small genus.
pub fn for_each_semigroup<F: FnMut(&Semigroup)>(max_genus: u32, mut visit: F) {
    fn go<F: FnMut(&Semigroup)>(s: &Semigroup, max_genus: u32, visit: &mut F) {
        visit(s);
        if s.genus() < max_genus {
            for child in s.children() {
                go(&child, max_genus, visit);
            }
        }
    }
    if max_genus >= 1 {
        go(&Semigroup::root(), max_genus, &mut visit);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn as_u64(v: &[BigUint]) -> Vec<u64> {
        v.iter().map(|x| x.try_into().unwrap()).collect()
    }

    #[test]
    fn first_levels() {
        let result = enumerate(&WalkConfig::new(5)).unwrap();
        assert_eq!(as_u64(&result.n), vec![1, 2, 4, 7, 12]);
    }

    #[test]
    fn matches_slow_walk() {
        let mut slow = vec![0u64; 12];
        let mut slow_inf = vec![0u64; 12];
        for_each_semigroup(12, |s| {
            slow[s.genus() as usize - 1] += 1;
            slow_inf[s.genus() as usize - 1] += is_infinite_chain(s) as u64;
        });
        let fast = enumerate(&WalkConfig::new(12).with_infinite()).unwrap();
        assert_eq!(as_u64(&fast.n), slow);
        assert_eq!(as_u64(fast.m.as_ref().unwrap()), slow_inf);
    }

    #[test]
    fn node_matches_semigroup() {
        for_each_semigroup(9, |s| {
            let node = Node::from_semigroup(s);
            assert_eq!(
                node.effective().collect::<Vec<_>>(),
                s.effective_generators()
            );
            for (x, child) in s.effective_generators().into_iter().zip(s.children()) {
                let fast = node.child(x, WIDTH);
                assert_eq!(fast.dec, Node::from_semigroup(&child).dec, "{s} minus {x}");
                assert_eq!(fast.multiplicity, child.multiplicity());
                assert_eq!(fast.gcd_below_f, gcd_below_frobenius(&child));
            }
        });
    }

    #[test]
    fn infinite_chain_examples() {
        assert!(is_infinite_chain(&Semigroup::ordinary(3)));
        assert!(is_infinite_chain(
            &Semigroup::from_gaps([1, 3, 5, 7, 9]).unwrap()
        ));
        assert!(!is_infinite_chain(
            &Semigroup::from_gaps([1, 2, 5]).unwrap()
        ));
        let m = infinite_counts(&WalkConfig::new(5)).unwrap();
        assert_eq!(as_u64(&m[..4]), vec![1, 2, 3, 4]);
        assert!(as_u64(&m)[4] <= 6);
    }

    #[test]
    fn multiplicity_rows() {
        let result = enumerate(&WalkConfig::new(14).with_multiplicity()).unwrap();
        for g in 1..=14 {
            assert_eq!(*result.by_multiplicity(g, 2).unwrap(), BigUint::from(1u32));
            assert!(*result.by_multiplicity(g, g + 1).unwrap() >= BigUint::from(1u32));
            let row: BigUint = result.n_by_mult.as_ref().unwrap()[g as usize - 1]
                .iter()
                .sum();
            assert_eq!(&row, result.count(g));
        }
    }

    #[test]
    fn split_walk_is_schedule_independent() {
        let serial = enumerate(&WalkConfig::new(16).with_infinite().with_multiplicity()).unwrap();
        for workers in [2, 3] {
            for depth in [3, 7] {
                let config = WalkConfig::new(16)
                    .with_infinite()
                    .with_multiplicity()
                    .workers(workers)
                    .split_depth(depth);
                assert_eq!(enumerate(&config).unwrap(), serial);
            }
        }
    }

    #[test]
    fn rejects_oversized_genus() {
        assert_eq!(
            enumerate(&WalkConfig::new(MAX_GENUS_CAP + 1)),
            Err(WalkError::ResourceLimit {
                requested: MAX_GENUS_CAP + 1,
                cap: MAX_GENUS_CAP
            })
        );
        assert_eq!(enumerate(&WalkConfig::new(0)), Err(WalkError::EmptyRange));
    }
}
