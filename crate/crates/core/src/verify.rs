//! The full verification suite: every check compares one computed sequence
//! against an independent source and reports by name.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::gentree::{level_totals, refined_counts, Marker, TreeId};
use crate::golden;
use crate::invariants;
use crate::oracle::count_by_gap_subsets;
use crate::series::{
    fibonacci, identity_suite, infinite_d, lower_a, lower_a_mult, lower_simple, upper_c,
    upper_c_ratio, TruncatedSeries, MIN_IDENTITY_ORDER,
};
use crate::walker::{enumerate, WalkConfig, WalkResult, N_ZERO};

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Enumeration depth for `n_g` and `m_g`.
    pub max_genus: u32,
    /// Levels compared against the bound columns of the golden table.
    pub table_genus: u32,
    pub series_order: usize,
    pub bivariate_order: usize,
    pub identity_order: usize,
    pub invariant_genus: u32,
    pub p_family_max: u32,
    pub oracle_genus: u32,
    pub asymptotic_genus: usize,
    pub workers: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_genus: 30,
            table_genus: 35,
            series_order: 200,
            bivariate_order: 100,
            identity_order: 64,
            invariant_genus: 15,
            p_family_max: 20,
            oracle_genus: 7,
            asymptotic_genus: 1000,
            workers: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckOutcome {
    pub criterion: u32,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    /// Wall time of the whole criterion this check belongs to.
    pub seconds: f64,
}

impl CheckOutcome {
    fn new(criterion: u32, name: impl Into<String>, result: Result<String, String>) -> Self {
        let (passed, detail) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        CheckOutcome {
            criterion,
            name: name.into(),
            passed,
            detail,
            seconds: 0.0,
        }
    }
}

/// Sequences shared between checks, computed once.
struct Context<'a> {
    config: &'a VerifyConfig,
    walk: Result<WalkResult, String>,
    totals: BTreeMap<TreeId, Vec<BigUint>>,
}

impl Context<'_> {
    fn totals(&self, tree: TreeId) -> &[BigUint] {
        &self.totals[&tree]
    }

    fn walk(&self) -> Result<&WalkResult, String> {
        self.walk.as_ref().map_err(Clone::clone)
    }
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn golden_n(cx: &Context) -> Result<String, String> {
    let walk = cx.walk()?;
    let top = walk.max_genus().min(golden::TABLE.len() as u32);
    for g in 1..=top {
        let want = big(golden::row(g).unwrap().n);
        ensure(walk.count(g) == &want, || {
            format!("n_{g} = {}, table has {want}", walk.count(g))
        })?;
    }
    Ok(format!("g ≤ {top}, n_{top} = {}", walk.count(top)))
}

fn bound_columns(cx: &Context) -> Result<String, String> {
    let top = cx.config.table_genus.min(golden::TABLE.len() as u32);
    let col = |tree| cx.totals(tree);
    for g in 1..=top {
        let row = golden::row(g).unwrap();
        let i = g as usize - 1;
        let mut pairs = vec![
            ("F_{g+2}-1", &col(TreeId::APrime)[i], row.fib_simple),
            ("a_g", &col(TreeId::ADoublePrime)[i], row.a),
            ("c_g", &col(TreeId::C)[i], row.c),
        ];
        if let Some(v) = row.two_fib {
            pairs.push(("2F_g", &col(TreeId::A)[i], v));
        }
        if let Some(v) = row.upper_simple {
            pairs.push(("1+3·2^{g-3}", &col(TreeId::B)[i], v));
        }
        for (name, got, want) in pairs {
            ensure(got == &big(want), || {
                format!("{name} at g={g}: {got} vs {want}")
            })?;
        }
    }
    Ok(format!("g ≤ {top}"))
}

/// Tree totals against the elementary formulas they are meant to realise.
fn simple_closed_forms(cx: &Context) -> Result<String, String> {
    let top = cx.config.table_genus;
    for g in 1..=top {
        let i = g as usize - 1;
        let fib_simple = fibonacci(g + 2) - 1u32;
        ensure(cx.totals(TreeId::APrime)[i] == fib_simple, || {
            format!("tree A′ level {g} is not F_{{g+2}}-1")
        })?;
        if g >= 2 {
            ensure(cx.totals(TreeId::A)[i] == fibonacci(g) * 2u32, || {
                format!("tree A level {g} is not 2F_g")
            })?;
        }
        if g >= 3 {
            let b = (BigUint::one() << (g - 3)) * 3u32 + 1u32;
            ensure(cx.totals(TreeId::B)[i] == b, || {
                format!("tree B level {g} is not 1+3·2^(g-3)")
            })?;
        }
    }
    Ok(format!("g ≤ {top}"))
}

fn series_matches_tree(
    cx: &Context,
    tree: TreeId,
    series: &TruncatedSeries,
) -> Result<String, String> {
    let order = cx.config.series_order;
    let totals = cx.totals(tree);
    ensure(series.coeff(0).is_zero(), || "nonzero constant term".into())?;
    for g in 1..=order {
        let want = BigRational::from_integer(totals[g - 1].clone().into());
        ensure(series.coeff(g) == &want, || {
            format!("t^{g}: series {} vs tree {}", series.coeff(g), want)
        })?;
    }
    Ok(format!("order {order}"))
}

fn bivariate_matches_tree(cx: &Context) -> Result<String, String> {
    let order = cx.config.bivariate_order;
    let gf = lower_a_mult(order);
    let refined = refined_counts(TreeId::ADoublePrimeW, order as u32, Marker::Multiplicity)
        .map_err(|e| e.to_string())?;
    for (idx, level) in refined.iter().enumerate() {
        let g = idx + 1;
        let row = gf.row(g);
        let width = row
            .len()
            .max(level.keys().last().map_or(0, |&l| l as usize + 1));
        for lambda in 0..width {
            let tree = level.get(&(lambda as u32)).cloned().unwrap_or_default();
            let want = BigRational::from_integer(tree.into());
            let got = gf.coeff(g, lambda);
            ensure(got == want, || {
                format!("w^{lambda} t^{g}: series {got} vs tree {want}")
            })?;
        }
    }
    Ok(format!("order {order}"))
}

fn sandwich(cx: &Context) -> Result<String, String> {
    let walk = cx.walk()?;
    let top = walk.max_genus();
    let col = |tree: TreeId, g: u32| cx.totals(tree)[g as usize - 1].clone();
    for g in 3..=top {
        let chain = [
            col(TreeId::A, g),
            col(TreeId::APrime, g),
            col(TreeId::ADoublePrime, g),
            walk.count(g).clone(),
            col(TreeId::C, g),
            col(TreeId::B, g),
        ];
        ensure(chain.windows(2).all(|w| w[0] <= w[1]), || {
            format!("ordering fails at g={g}: {chain:?}")
        })?;
    }
    if top >= 6 {
        let (a6, n6, c6) = (
            col(TreeId::ADoublePrime, 6),
            walk.count(6).clone(),
            col(TreeId::C, 6),
        );
        ensure(
            (a6.clone(), n6.clone(), c6.clone()) == (big(22), big(23), big(24)),
            || format!("a_6, n_6, c_6 = {a6}, {n6}, {c6}"),
        )?;
    }
    // Every strict step of the published table is strict here too.
    for g in 3..=top.min(golden::TABLE.len() as u32) {
        let row = golden::row(g).unwrap();
        let n = walk.count(g);
        let strict = (big(row.a) < *n, *n < big(row.c));
        let ours = (col(TreeId::ADoublePrime, g) < *n, *n < col(TreeId::C, g));
        ensure(strict == ours, || format!("strictness differs at g={g}"))?;
    }
    Ok(format!("3 ≤ g ≤ {top}"))
}

fn infinite_chains(cx: &Context) -> Result<String, String> {
    let walk = cx.walk()?;
    let top = walk.max_genus();
    let m = |g: u32| walk.infinite(g).expect("infinite counts collected").clone();
    for g in 1..=top.min(4) {
        ensure(m(g) == big(g as u64), || format!("m_{g} = {}", m(g)))?;
    }
    let d = cx.totals(TreeId::I);
    for g in 1..=top {
        if g >= 4 {
            let two_fib = fibonacci(g - 1) * 2u32;
            ensure(m(g) <= two_fib, || {
                format!("m_{g} = {} > 2F_{{g-1}} = {two_fib}", m(g))
            })?;
        }
        let below: BigUint = (1..=(g - 1) / 2)
            .map(|i| walk.count(i).clone())
            .sum::<BigUint>()
            + N_ZERO;
        let bound = below * (g - 1) + 1u32;
        ensure(m(g) <= bound, || {
            format!("m_{g} = {} exceeds {bound}", m(g))
        })?;
        ensure(m(g) <= d[g as usize - 1], || {
            format!("m_{g} = {} > d_{g} = {}", m(g), d[g as usize - 1])
        })?;
    }
    Ok(format!("g ≤ {top}, m_{top} = {}", m(top)))
}

fn invariant(result: invariants::CheckResult) -> Result<String, String> {
    result.map(|cases| format!("{cases} cases"))
}

fn oracle(cx: &Context) -> Result<String, String> {
    let walk = cx.walk()?;
    let top = cx.config.oracle_genus.min(walk.max_genus());
    for g in 1..=top {
        let brute = big(count_by_gap_subsets(g));
        ensure(walk.count(g) == &brute, || {
            format!("n_{g}: walker {} vs subsets {brute}", walk.count(g))
        })?;
    }
    Ok(format!("g ≤ {top}"))
}

fn identities(order: usize) -> Vec<CheckOutcome> {
    identity_suite(order)
        .into_iter()
        .map(|c| {
            let detail = format!("order {}", c.order);
            let res = if c.passed { Ok(detail) } else { Err(detail) };
            CheckOutcome::new(8, format!("identity: {}", c.name), res)
        })
        .collect()
}

fn asymptotic(g: usize) -> Result<String, String> {
    let ratio = upper_c_ratio(g);
    let msg = format!("c_{}/c_{g} = {ratio:.6}", g + 1);
    if (ratio - 2.0).abs() < 0.01 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn timed<F: FnOnce() -> Vec<CheckOutcome>>(f: F) -> Vec<CheckOutcome> {
    let start = Instant::now();
    let mut out = f();
    let seconds = start.elapsed().as_secs_f64();
    for o in &mut out {
        o.seconds = seconds;
    }
    out
}

/// Runs the checks of one criterion (1 to 9). Unknown criteria yield nothing.
pub fn run_criterion(criterion: u32, config: &VerifyConfig) -> Vec<CheckOutcome> {
    let cx = context(config, criterion_needs_walk(criterion));
    criterion_checks(criterion, &cx)
}

/// Runs every criterion in order.
pub fn run_suite(config: &VerifyConfig) -> Vec<CheckOutcome> {
    let cx = context(config, true);
    (1..=9).flat_map(|c| criterion_checks(c, &cx)).collect()
}

fn criterion_needs_walk(criterion: u32) -> bool {
    matches!(criterion, 1 | 4 | 5 | 7)
}

fn context(config: &VerifyConfig, walk: bool) -> Context<'_> {
    let levels = config
        .table_genus
        .max(config.series_order as u32)
        .max(config.max_genus)
        .max(1);
    let totals = TreeId::ALL
        .into_iter()
        .filter(|&t| t != TreeId::ADoublePrimeW)
        .map(|t| (t, level_totals(t, levels)))
        .collect();
    let walk = if walk {
        let g = config.max_genus.max(config.oracle_genus);
        enumerate(&WalkConfig::new(g).workers(config.workers).with_infinite())
            .map_err(|e| e.to_string())
    } else {
        Err("enumeration not requested".to_string())
    };
    Context {
        config,
        walk,
        totals,
    }
}

fn criterion_checks(criterion: u32, cx: &Context) -> Vec<CheckOutcome> {
    let cfg = cx.config;
    let one = |name: &str, r| vec![CheckOutcome::new(criterion, name, r)];
    timed(|| match criterion {
        1 => one("golden n_g", golden_n(cx)),
        2 => {
            let mut v = one("bound columns", bound_columns(cx));
            v.extend(one("elementary closed forms", simple_closed_forms(cx)));
            v
        }
        3 => {
            let n = cfg.series_order;
            vec![
                CheckOutcome::new(
                    3,
                    "A′ vs lower_simple",
                    series_matches_tree(cx, TreeId::APrime, &lower_simple(n)),
                ),
                CheckOutcome::new(
                    3,
                    "A″ vs lower_a",
                    series_matches_tree(cx, TreeId::ADoublePrime, &lower_a(n)),
                ),
                CheckOutcome::new(
                    3,
                    "C vs upper_c",
                    series_matches_tree(cx, TreeId::C, &upper_c(n)),
                ),
                CheckOutcome::new(
                    3,
                    "I vs infinite_d",
                    series_matches_tree(cx, TreeId::I, &infinite_d(n)),
                ),
                CheckOutcome::new(3, "A″w vs lower_a_mult", bivariate_matches_tree(cx)),
            ]
        }
        4 => one("sandwich", sandwich(cx)),
        5 => one("infinite chains", infinite_chains(cx)),
        6 => {
            let g = cfg.invariant_genus;
            vec![
                CheckOutcome::new(
                    6,
                    "child generator structure",
                    invariant(invariants::child_generator_structure(g)),
                ),
                CheckOutcome::new(
                    6,
                    "strength persistence",
                    invariant(invariants::strength_persists(g)),
                ),
                CheckOutcome::new(
                    6,
                    "healthy count bounds",
                    invariant(invariants::healthy_count_bounds(g)),
                ),
                CheckOutcome::new(
                    6,
                    "large multiplicity is finite",
                    invariant(invariants::large_multiplicity_is_finite(g)),
                ),
                CheckOutcome::new(
                    6,
                    "strong implies healthy",
                    invariant(invariants::strong_implies_healthy(g)),
                ),
                CheckOutcome::new(
                    6,
                    "parent recovery",
                    invariant(invariants::parent_recovery(g)),
                ),
                CheckOutcome::new(
                    6,
                    "gcd quotient injective",
                    invariant(invariants::gcd_quotient_injective(g)),
                ),
                CheckOutcome::new(
                    6,
                    "P family strong sets",
                    invariant(invariants::p_family_strong_sets(
                        cfg.p_family_max,
                        cfg.p_family_max,
                    )),
                ),
            ]
        }
        7 => one("subset oracle", oracle(cx)),
        8 => identities(cfg.identity_order.max(MIN_IDENTITY_ORDER)),
        9 => one("upper_c ratio", asymptotic(cfg.asymptotic_genus)),
        _ => Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig {
            max_genus: 9,
            table_genus: 35,
            series_order: 40,
            bivariate_order: 20,
            identity_order: 16,
            invariant_genus: 8,
            p_family_max: 6,
            oracle_genus: 6,
            asymptotic_genus: 200,
            workers: 1,
        }
    }

    #[test]
    fn small_suite_passes() {
        let out = run_suite(&small());
        let failed: Vec<_> = out.iter().filter(|o| !o.passed).collect();
        assert!(failed.is_empty(), "{failed:#?}");
        let criteria: std::collections::BTreeSet<u32> = out.iter().map(|o| o.criterion).collect();
        assert_eq!(
            criteria.into_iter().collect::<Vec<_>>(),
            (1..=9).collect::<Vec<_>>()
        );
    }

    #[test]
    fn criterion_without_walk() {
        let out = run_criterion(2, &small());
        assert!(out.iter().all(|o| o.passed && o.criterion == 2));
        assert!(run_criterion(10, &small()).is_empty());
    }
}
