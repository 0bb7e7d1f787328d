//! One PASS/FAIL line per acceptance criterion. Set `NSG_FULL=1` to
//! enumerate to genus 35 instead of 30.

use std::collections::BTreeMap;

use nsg_core::verify::{run_suite, CheckOutcome, VerifyConfig};

const TITLES: [&str; 9] = [
    "golden n_g",
    "bound columns",
    "series equal tree totals",
    "sandwich inequalities",
    "infinite chains",
    "structural invariants",
    "subset oracle",
    "series identities",
    "asymptotic ratio",
];

fn main() {
    let full = std::env::var("NSG_FULL").is_ok_and(|v| v == "1");
    let config = VerifyConfig {
        max_genus: if full { 35 } else { 30 },
        workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
        ..VerifyConfig::default()
    };
    let mut by_criterion: BTreeMap<u32, Vec<CheckOutcome>> = BTreeMap::new();
    for outcome in run_suite(&config) {
        by_criterion
            .entry(outcome.criterion)
            .or_default()
            .push(outcome);
    }

    let mut all_passed = true;
    for (n, title) in (1..=9).zip(TITLES) {
        let checks = by_criterion.remove(&n).unwrap_or_default();
        let passed = !checks.is_empty() && checks.iter().all(|c| c.passed);
        all_passed &= passed;
        let summary: Vec<String> = checks
            .iter()
            .map(|c| {
                let mark = if c.passed { "ok" } else { "FAILED" };
                format!("{} {mark} ({})", c.name, c.detail)
            })
            .collect();
        let seconds = checks.first().map_or(0.0, |c| c.seconds);
        println!(
            "criterion {n} {} [{seconds:.2}s]: {title}; {}",
            if passed { "PASS" } else { "FAIL" },
            summary.join("; ")
        );
    }
    if !all_passed {
        eprintln!("some acceptance criteria failed");
        std::process::exit(1);
    }
}
