//! Succession-rule engine for the labelled trees that bound the semigroup
//! tree from below (A, A′, A″, A″w) and above (B, C), and the tree I that
//! bounds the semigroups with infinitely many descendants.
//!
//! Level counts are computed by dynamic programming over label multisets.
//! Every rule image is a short list of [`Run`]s, each an arithmetic
//! progression of labels along one or both coordinates; a run is added to
//! the next level with a difference array on its line, so one level costs
//! time proportional to the number of distinct labels rather than the
//! number of children.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

use crate::semigroup::strong_count_formula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenTreeError {
    #[error("label {label} does not belong to tree {tree}")]
    UnknownLabel { tree: TreeId, label: NodeLabel },
    #[error("marker {marker:?} is not defined for tree {tree}")]
    MarkerUndefined { tree: TreeId, marker: Marker },
    #[error("unknown tree {0:?}")]
    UnknownTree(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TreeId {
    A,
    APrime,
    ADoublePrime,
    /// A″ with every label carrying the multiplicity of its semigroup.
    ADoublePrimeW,
    B,
    C,
    I,
}

impl TreeId {
    pub const ALL: [TreeId; 7] = [
        TreeId::A,
        TreeId::APrime,
        TreeId::ADoublePrime,
        TreeId::ADoublePrimeW,
        TreeId::B,
        TreeId::C,
        TreeId::I,
    ];

    pub fn root(self) -> NodeLabel {
        NodeLabel::Bar(2)
    }
}

impl fmt::Display for TreeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TreeId::A => "A",
            TreeId::APrime => "A'",
            TreeId::ADoublePrime => "A''",
            TreeId::ADoublePrimeW => "A''w",
            TreeId::B => "B",
            TreeId::C => "C",
            TreeId::I => "I",
        })
    }
}

impl FromStr for TreeId {
    type Err = GenTreeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "A" | "a" => TreeId::A,
            "A'" | "a'" | "a1" => TreeId::APrime,
            "A''" | "a''" | "a2" => TreeId::ADoublePrime,
            "A''w" | "a''w" | "a2w" => TreeId::ADoublePrimeW,
            "B" | "b" => TreeId::B,
            "C" | "c" => TreeId::C,
            "I" | "i" => TreeId::I,
            _ => return Err(GenTreeError::UnknownTree(s.to_string())),
        })
    }
}

/// Node label. Field order is the order of the label's coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NodeLabel {
    /// Ordinary semigroup `O_{e-1}` (all trees).
    Bar(u32),
    /// `(e)` in trees A and B.
    Plain(u32),
    /// `P_{g,i}` family in tree A′, labelled by `g`.
    TildeSimple(u32),
    /// `P_{e,k+1}` in trees A″ and A″w.
    Tilde(u32, u32),
    /// `(e, s)`: at least `e` effective and `s` strong generators (A″).
    Pair(u32, u32),
    /// `(d, h)` with `d = e - h` in tree C.
    PairDH(u32, u32),
    /// `(e, λ)` in tree I.
    PairMult(u32, u32),
    /// `(e, s)` with multiplicity `λ` in tree A″w.
    PairMultES(u32, u32, u32),
}

impl fmt::Display for NodeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            NodeLabel::Bar(e) => write!(f, "bar({e})"),
            NodeLabel::Plain(e) => write!(f, "({e})"),
            NodeLabel::TildeSimple(e) => write!(f, "tilde({e})"),
            NodeLabel::Tilde(e, k) => write!(f, "tilde({e})_{k}"),
            NodeLabel::Pair(a, b) | NodeLabel::PairDH(a, b) | NodeLabel::PairMult(a, b) => {
                write!(f, "({a},{b})")
            }
            NodeLabel::PairMultES(e, s, l) => write!(f, "({e},{s};{l})"),
        }
    }
}

impl NodeLabel {
    fn kind(&self) -> u8 {
        match self {
            NodeLabel::Bar(_) => 0,
            NodeLabel::Plain(_) => 1,
            NodeLabel::TildeSimple(_) => 2,
            NodeLabel::Tilde(..) => 3,
            NodeLabel::Pair(..) => 4,
            NodeLabel::PairDH(..) => 5,
            NodeLabel::PairMult(..) => 6,
            NodeLabel::PairMultES(..) => 7,
        }
    }

    fn coords(&self) -> [u32; 3] {
        match *self {
            NodeLabel::Bar(a) | NodeLabel::Plain(a) | NodeLabel::TildeSimple(a) => [a, 0, 0],
            NodeLabel::Tilde(a, b)
            | NodeLabel::Pair(a, b)
            | NodeLabel::PairDH(a, b)
            | NodeLabel::PairMult(a, b) => [a, b, 0],
            NodeLabel::PairMultES(a, b, c) => [a, b, c],
        }
    }

    fn from_parts(kind: u8, [a, b, c]: [u32; 3]) -> NodeLabel {
        match kind {
            0 => NodeLabel::Bar(a),
            1 => NodeLabel::Plain(a),
            2 => NodeLabel::TildeSimple(a),
            3 => NodeLabel::Tilde(a, b),
            4 => NodeLabel::Pair(a, b),
            5 => NodeLabel::PairDH(a, b),
            6 => NodeLabel::PairMult(a, b),
            _ => NodeLabel::PairMultES(a, b, c),
        }
    }
}

/// Direction in which a run advances through label coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    First,
    Second,
    Both,
}

/// `len` labels starting at `first`, each one step further along `step`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Run {
    pub first: NodeLabel,
    pub step: Step,
    pub len: u32,
}

impl Run {
    pub fn labels(&self) -> impl Iterator<Item = NodeLabel> + '_ {
        let kind = self.first.kind();
        let [a, b, c] = self.first.coords();
        (0..self.len).map(move |i| {
            let coords = match self.step {
                Step::First => [a + i, b, c],
                Step::Second => [a, b + i, c],
                Step::Both => [a + i, b + i, c],
            };
            NodeLabel::from_parts(kind, coords)
        })
    }
}

struct RunList(Vec<Run>);

impl RunList {
    fn new() -> Self {
        RunList(Vec::with_capacity(4))
    }

    fn one(&mut self, label: NodeLabel) -> &mut Self {
        self.span(label, Step::First, 1)
    }

    fn span(&mut self, first: NodeLabel, step: Step, len: u32) -> &mut Self {
        if len > 0 {
            self.0.push(Run { first, step, len });
        }
        self
    }
}

/// Child runs of `label` in `tree`, in the rule's order.
pub fn rule_runs(tree: TreeId, label: NodeLabel) -> Result<Vec<Run>, GenTreeError> {
    use NodeLabel::*;
    let unknown = || GenTreeError::UnknownLabel { tree, label };
    let mut out = RunList::new();
    match (tree, label) {
        (_, Bar(e)) if e < 2 => return Err(unknown()),

        (TreeId::A | TreeId::B, Bar(e)) => {
            out.span(Plain(0), Step::First, e - 2)
                .one(Plain(e - 1))
                .one(Bar(e + 1));
        }
        (TreeId::A | TreeId::APrime, Plain(e)) => {
            out.span(Plain(0), Step::First, e);
        }
        (TreeId::B, Plain(e)) => {
            out.span(Plain(1), Step::First, e);
        }

        (TreeId::APrime, Bar(e)) => {
            out.span(Plain(0), Step::First, e - 2)
                .one(TildeSimple(e - 1))
                .one(Bar(e + 1));
        }
        (TreeId::APrime, TildeSimple(e)) => {
            out.span(Plain(0), Step::First, e.saturating_sub(1))
                .one(TildeSimple(e));
        }

        (TreeId::ADoublePrime, Bar(e)) => {
            out.span(Pair(0, 0), Step::First, e - 2)
                .one(Tilde(e - 1, 2))
                .one(Bar(e + 1));
        }
        (TreeId::ADoublePrime, Tilde(e, k)) => {
            let s = tilde_strong(tree, label, e, k)?;
            out.span(Pair(0, 0), Step::First, e - s)
                .span(Pair(e - s + 1, 0), Step::Both, s.saturating_sub(1))
                .one(Tilde(e, k + 1));
        }
        (TreeId::ADoublePrime, Pair(e, s)) if s <= e => {
            out.span(Pair(0, 0), Step::First, e - s)
                .span(Pair(e - s + 1, 0), Step::Both, s);
        }

        (TreeId::ADoublePrimeW, Bar(e)) => {
            out.span(PairMultES(0, 0, e), Step::First, e - 2)
                .one(Tilde(e - 1, 2))
                .one(Bar(e + 1));
        }
        (TreeId::ADoublePrimeW, Tilde(e, k)) => {
            let s = tilde_strong(tree, label, e, k)?;
            let lambda = e + 1;
            out.span(PairMultES(0, 0, lambda), Step::First, e - s)
                .span(
                    PairMultES(e - s + 1, 0, lambda),
                    Step::Both,
                    s.saturating_sub(1),
                )
                .one(Tilde(e, k + 1));
        }
        (TreeId::ADoublePrimeW, PairMultES(e, s, lambda)) if s <= e => {
            out.span(PairMultES(0, 0, lambda), Step::First, e - s).span(
                PairMultES(e - s + 1, 0, lambda),
                Step::Both,
                s,
            );
        }

        (TreeId::C, Bar(2)) => {
            out.one(PairDH(0, 1)).one(Bar(3));
        }
        (TreeId::C, Bar(3)) => {
            out.one(PairDH(0, 0)).one(PairDH(0, 2)).one(Bar(4));
        }
        (TreeId::C, Bar(e)) => {
            out.span(PairDH(0, 0), Step::First, e - 3)
                .one(PairDH(e - 4, 1))
                .one(PairDH(e - 3, 2))
                .one(Bar(e + 1));
        }
        (TreeId::C, PairDH(0, h)) => {
            out.span(PairDH(0, 1), Step::Second, h);
        }
        (TreeId::C, PairDH(1, h)) => {
            out.one(PairDH(0, 0)).span(PairDH(0, 2), Step::Second, h);
        }
        (TreeId::C, PairDH(d, h)) => {
            out.span(PairDH(0, 0), Step::First, d - 1)
                .one(PairDH(d - 2, 1))
                .span(PairDH(d - 1, 2), Step::Second, h);
        }

        (TreeId::I, Bar(lambda)) => {
            let lo = lambda.div_ceil(2);
            out.span(
                PairMult(lo, lambda),
                Step::First,
                (lambda - 2).saturating_sub(lo),
            )
            .one(PairMult(lambda - 1, lambda))
            .one(Bar(lambda + 1));
        }
        (TreeId::I, PairMult(e, lambda)) => {
            let lo = lambda.div_ceil(2);
            out.span(
                PairMult(lo, lambda),
                Step::First,
                (e + 1).saturating_sub(lo),
            );
        }

        _ => return Err(unknown()),
    }
    Ok(out.0)
}

fn tilde_strong(tree: TreeId, label: NodeLabel, e: u32, k: u32) -> Result<u32, GenTreeError> {
    strong_count_formula(e, k).map_err(|_| GenTreeError::UnknownLabel { tree, label })
}

/// Ordered child labels of `label` in `tree`.
pub fn rule_children(tree: TreeId, label: NodeLabel) -> Result<Vec<NodeLabel>, GenTreeError> {
    Ok(rule_runs(tree, label)?
        .iter()
        .flat_map(|run| run.labels().collect::<Vec<_>>())
        .collect())
}

/// Label counts at one level.
pub type LevelMap = BTreeMap<NodeLabel, BigUint>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct LineKey {
    kind: u8,
    step: Step,
    fixed: [u32; 2],
}

#[derive(Default)]
struct Edge {
    open: BigUint,
    close: BigUint,
}

/// Collects weighted runs for the next level.
#[derive(Default)]
struct LevelBuilder {
    points: HashMap<NodeLabel, BigUint>,
    lines: HashMap<LineKey, BTreeMap<u32, Edge>>,
}

impl LevelBuilder {
    fn add(&mut self, run: &Run, weight: &BigUint) {
        if run.len == 1 {
            *self.points.entry(run.first).or_default() += weight;
            return;
        }
        let [a, b, c] = run.first.coords();
        let (fixed, pos) = match run.step {
            Step::First => ([b, c], a),
            Step::Second => ([a, c], b),
            Step::Both => ([a - b, c], b),
        };
        let key = LineKey {
            kind: run.first.kind(),
            step: run.step,
            fixed,
        };
        let line = self.lines.entry(key).or_default();
        line.entry(pos).or_default().open += weight;
        line.entry(pos + run.len).or_default().close += weight;
    }

    fn finish(self) -> LevelMap {
        let mut out: LevelMap = self.points.into_iter().collect();
        for (key, line) in self.lines {
            let mut acc = BigUint::zero();
            let mut events = line.into_iter().peekable();
            while let Some((pos, edge)) = events.next() {
                acc -= edge.close;
                acc += edge.open;
                let end = events.peek().map_or(pos, |(next, _)| *next);
                if acc.is_zero() {
                    continue;
                }
                for p in pos..end {
                    let coords = match key.step {
                        Step::First => [p, key.fixed[0], key.fixed[1]],
                        Step::Second => [key.fixed[0], p, key.fixed[1]],
                        Step::Both => [key.fixed[0] + p, p, key.fixed[1]],
                    };
                    *out.entry(NodeLabel::from_parts(key.kind, coords))
                        .or_default() += &acc;
                }
            }
        }
        out
    }
}

/// Next level of `tree` from the label counts of the current one.
pub fn step_level(tree: TreeId, level: &LevelMap) -> Result<LevelMap, GenTreeError> {
    let mut builder = LevelBuilder::default();
    for (label, count) in level {
        for run in rule_runs(tree, *label)? {
            builder.add(&run, count);
        }
    }
    Ok(builder.finish())
}

/// Iterator over the levels of a tree, starting with level 1 (the root).
pub struct Levels {
    tree: TreeId,
    level: u32,
    next: Option<LevelMap>,
}

impl Levels {
    pub fn new(tree: TreeId) -> Self {
        Levels {
            tree,
            level: 0,
            next: Some(LevelMap::from([(tree.root(), BigUint::from(1u32))])),
        }
    }
}

impl Iterator for Levels {
    type Item = (u32, LevelMap);

    fn next(&mut self) -> Option<Self::Item> {
        let current = self.next.take()?;
        self.level += 1;
        self.next =
            Some(step_level(self.tree, &current).expect("rules are closed over their labels"));
        Some((self.level, current))
    }
}

pub fn total(level: &LevelMap) -> BigUint {
    level.values().sum()
}

/// All label counts of a tree up to `max_level`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelCounts {
    pub tree: TreeId,
    levels: Vec<LevelMap>,
    totals: Vec<BigUint>,
}

impl LevelCounts {
    pub fn max_level(&self) -> u32 {
        self.levels.len() as u32
    }

    pub fn level(&self, g: u32) -> &LevelMap {
        &self.levels[g as usize - 1]
    }

    pub fn total(&self, g: u32) -> &BigUint {
        &self.totals[g as usize - 1]
    }

    /// Level totals, level 1 first.
    pub fn totals(&self) -> &[BigUint] {
        &self.totals
    }

    pub fn count(&self, g: u32, label: NodeLabel) -> BigUint {
        self.level(g).get(&label).cloned().unwrap_or_default()
    }
}

pub fn level_counts(tree: TreeId, max_level: u32) -> LevelCounts {
    let levels: Vec<LevelMap> = Levels::new(tree)
        .take(max_level as usize)
        .map(|(_, map)| map)
        .collect();
    let totals = levels.iter().map(total).collect();
    LevelCounts {
        tree,
        levels,
        totals,
    }
}

/// Level totals only, without keeping the label maps.
pub fn level_totals(tree: TreeId, max_level: u32) -> Vec<BigUint> {
    Levels::new(tree)
        .take(max_level as usize)
        .map(|(_, map)| total(&map))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Marker {
    None,
    StrongS,
    HealthyH,
    Multiplicity,
}

/// The marker component of `label`, if the marker is defined on `tree`.
pub fn marker_value(tree: TreeId, marker: Marker, label: NodeLabel) -> Result<u32, GenTreeError> {
    use NodeLabel::*;
    let undefined = || GenTreeError::MarkerUndefined { tree, marker };
    let unknown = || GenTreeError::UnknownLabel { tree, label };
    match (marker, tree) {
        (Marker::None, _) => Ok(0),
        (Marker::StrongS, TreeId::ADoublePrime | TreeId::ADoublePrimeW) => match label {
            Bar(_) => Ok(0),
            Tilde(e, k) => strong_count_formula(e, k).map_err(|_| unknown()),
            Pair(_, s) | PairMultES(_, s, _) => Ok(s),
            _ => Err(unknown()),
        },
        // Ordinary semigroups have exactly two healthy generators.
        (Marker::HealthyH, TreeId::C) => match label {
            Bar(_) => Ok(2),
            PairDH(_, h) => Ok(h),
            _ => Err(unknown()),
        },
        (Marker::Multiplicity, TreeId::ADoublePrimeW) => match label {
            Bar(e) => Ok(e),
            Tilde(e, _) => Ok(e + 1),
            PairMultES(_, _, lambda) => Ok(lambda),
            _ => Err(unknown()),
        },
        (Marker::Multiplicity, TreeId::I) => match label {
            Bar(lambda) | PairMult(_, lambda) => Ok(lambda),
            _ => Err(unknown()),
        },
        _ => Err(undefined()),
    }
}

/// Per-level counts aggregated by marker value, level 1 first.
pub fn refined_counts(
    tree: TreeId,
    max_level: u32,
    marker: Marker,
) -> Result<Vec<BTreeMap<u32, BigUint>>, GenTreeError> {
    // Reject undefined markers before doing any work.
    marker_value(tree, marker, tree.root())?;
    Levels::new(tree)
        .take(max_level as usize)
        .map(|(_, level)| {
            let mut out: BTreeMap<u32, BigUint> = BTreeMap::new();
            for (label, count) in level {
                *out.entry(marker_value(tree, marker, label)?).or_default() += count;
            }
            Ok(out)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::NodeLabel::*;
    use super::*;

    fn totals_u64(tree: TreeId, n: u32) -> Vec<u64> {
        level_totals(tree, n)
            .iter()
            .map(|x| x.try_into().unwrap())
            .collect()
    }

    #[test]
    fn rule_examples() {
        assert_eq!(
            rule_children(TreeId::C, Bar(2)).unwrap(),
            vec![PairDH(0, 1), Bar(3)]
        );
        assert_eq!(
            rule_children(TreeId::C, PairDH(1, 2)).unwrap(),
            vec![PairDH(0, 0), PairDH(0, 2), PairDH(0, 3)]
        );
        assert_eq!(
            rule_children(TreeId::C, Bar(5)).unwrap(),
            vec![
                PairDH(0, 0),
                PairDH(1, 0),
                PairDH(1, 1),
                PairDH(2, 2),
                Bar(6)
            ]
        );
        assert_eq!(
            rule_children(TreeId::I, Bar(6)).unwrap(),
            vec![PairMult(3, 6), PairMult(5, 6), Bar(7)]
        );
        assert_eq!(
            rule_children(TreeId::I, PairMult(3, 4)).unwrap(),
            vec![PairMult(2, 4), PairMult(3, 4)]
        );
        assert_eq!(
            rule_children(TreeId::ADoublePrime, Tilde(2, 3)).unwrap(),
            vec![Pair(1, 0), Tilde(2, 4)]
        );
        assert_eq!(
            rule_children(TreeId::ADoublePrime, Tilde(3, 2)).unwrap(),
            vec![Pair(0, 0), Pair(2, 0), Tilde(3, 3)]
        );
        assert_eq!(
            rule_children(TreeId::ADoublePrime, Pair(4, 2)).unwrap(),
            vec![Pair(0, 0), Pair(1, 0), Pair(3, 0), Pair(4, 1)]
        );
        assert_eq!(
            rule_children(TreeId::ADoublePrime, Bar(4)).unwrap(),
            vec![Pair(0, 0), Pair(1, 0), Tilde(3, 2), Bar(5)]
        );
        assert!(rule_children(TreeId::ADoublePrime, Pair(0, 0))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn unknown_labels() {
        assert_eq!(
            rule_children(TreeId::C, Plain(3)),
            Err(GenTreeError::UnknownLabel {
                tree: TreeId::C,
                label: Plain(3)
            })
        );
        assert!(rule_children(TreeId::A, Bar(1)).is_err());
        assert!(rule_children(TreeId::ADoublePrime, Pair(1, 2)).is_err());
        assert!(rule_children(TreeId::ADoublePrime, Tilde(0, 2)).is_err());
    }

    #[test]
    fn small_totals() {
        assert_eq!(totals_u64(TreeId::C, 5), vec![1, 2, 4, 7, 13]);
        assert_eq!(totals_u64(TreeId::ADoublePrime, 5), vec![1, 2, 4, 7, 12]);
        assert_eq!(totals_u64(TreeId::ADoublePrimeW, 5), vec![1, 2, 4, 7, 12]);
        assert_eq!(totals_u64(TreeId::I, 6), vec![1, 2, 3, 4, 6, 10]);
        assert_eq!(totals_u64(TreeId::B, 6), vec![1, 2, 4, 7, 13, 25]);
        assert_eq!(totals_u64(TreeId::A, 6), vec![1, 2, 4, 6, 10, 16]);
        assert_eq!(totals_u64(TreeId::APrime, 6), vec![1, 2, 4, 7, 12, 20]);
    }

    #[test]
    fn figure_levels_of_c() {
        let counts = level_counts(TreeId::C, 5);
        let level4: Vec<(NodeLabel, u64)> = counts
            .level(4)
            .iter()
            .map(|(l, c)| (*l, c.try_into().unwrap()))
            .collect();
        assert_eq!(
            level4,
            vec![
                (Bar(5), 1),
                (PairDH(0, 0), 1),
                (PairDH(0, 1), 3),
                (PairDH(0, 2), 1),
                (PairDH(1, 2), 1),
            ]
        );
    }

    #[test]
    fn run_accumulation_matches_naive_expansion() {
        for tree in TreeId::ALL {
            let mut naive = LevelMap::from([(tree.root(), BigUint::from(1u32))]);
            for (g, level) in Levels::new(tree).take(14) {
                assert_eq!(level, naive, "tree {tree} level {g}");
                let mut next = LevelMap::new();
                for (label, count) in &naive {
                    for child in rule_children(tree, *label).unwrap() {
                        *next.entry(child).or_default() += count;
                    }
                }
                naive = next;
            }
        }
    }

    #[test]
    fn a_double_prime_child_counts_equal_e() {
        for (_, level) in Levels::new(TreeId::ADoublePrime).take(25) {
            for label in level.keys() {
                let kids = rule_children(TreeId::ADoublePrime, *label).unwrap().len() as u32;
                match *label {
                    Tilde(e, _) | Pair(e, _) => assert_eq!(kids, e, "{label}"),
                    Bar(e) => assert_eq!(kids, e),
                    _ => unreachable!(),
                }
            }
        }
    }

    #[test]
    fn markers() {
        let per_level = refined_counts(TreeId::C, 5, Marker::HealthyH).unwrap();
        let sum: BigUint = per_level[4].values().sum();
        assert_eq!(sum, BigUint::from(13u32));

        let w = refined_counts(TreeId::ADoublePrimeW, 30, Marker::Multiplicity).unwrap();
        for level in &w {
            assert_eq!(level.get(&2), Some(&BigUint::from(1u32)));
        }

        let i = refined_counts(TreeId::I, 20, Marker::Multiplicity).unwrap();
        for (g, level) in i.iter().enumerate() {
            let sum: BigUint = level.values().sum();
            assert_eq!(&sum, &level_totals(TreeId::I, 20)[g]);
        }

        assert_eq!(
            refined_counts(TreeId::C, 3, Marker::Multiplicity),
            Err(GenTreeError::MarkerUndefined {
                tree: TreeId::C,
                marker: Marker::Multiplicity
            })
        );
    }

    #[test]
    fn tree_names_parse() {
        for tree in TreeId::ALL {
            assert_eq!(tree.to_string().parse::<TreeId>().unwrap(), tree);
        }
        assert!("Q".parse::<TreeId>().is_err());
    }
}
