use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nsg_core::gentree::{level_totals, TreeId};
use nsg_core::series::{self, TruncatedSeries};
use nsg_core::table::{
    bounds_rows, render_csv, render_json, render_markdown, TableConfig, TABLE_MAX_GENUS,
};
use nsg_core::verify::{run_suite, VerifyConfig};
use nsg_core::walker::{enumerate, WalkConfig, MAX_GENUS_CAP, N_ZERO};
use nsg_core::BigUint;

#[derive(Parser)]
#[command(
    name = "nsg",
    version,
    about = "Count numerical semigroups by genus and bound the counts"
)]
struct Cli {
    /// Worker threads for the tree walk [default: available parallelism]
    #[arg(long, global = true, env = "NSG_WORKERS")]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print n_g, optionally split by multiplicity
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=MAX_GENUS_CAP as i64))]
        max_genus: u32,
        #[arg(long)]
        by_multiplicity: bool,
    },
    /// Print bound sequences from the generating trees and their series
    Bounds {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_genus: u32,
        #[arg(long, value_delimiter = ',', default_value = "all")]
        which: Vec<Bound>,
        #[arg(long, value_enum, default_value_t = Source::Tree)]
        source: Source,
    },
    /// Print m_g next to its upper bounds
    Infinite {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=MAX_GENUS_CAP as i64))]
        max_genus: u32,
    },
    /// Emit one row of every bound per genus
    Table {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=TABLE_MAX_GENUS as i64))]
        max_genus: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// n_g and m_g are left blank above this genus
        #[arg(long, default_value_t = 30)]
        enumerate_up_to: u32,
    },
    /// Run every acceptance check; exit status 1 if any fails
    Verify {
        #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u32).range(1..=MAX_GENUS_CAP as i64))]
        max_genus: u32,
        #[arg(long, default_value_t = 200)]
        series_order: usize,
        /// Enumerate to genus 35
        #[arg(long)]
        full: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Bound {
    All,
    TwoFib,
    FibSimple,
    A,
    C,
    UpperSimple,
    D,
}

impl Bound {
    const EACH: [Bound; 6] = [
        Bound::TwoFib,
        Bound::FibSimple,
        Bound::A,
        Bound::C,
        Bound::UpperSimple,
        Bound::D,
    ];

    fn label(self) -> &'static str {
        match self {
            Bound::All => "all",
            Bound::TwoFib => "2F_g",
            Bound::FibSimple => "F_{g+2}-1",
            Bound::A => "a_g",
            Bound::C => "c_g",
            Bound::UpperSimple => "1+3*2^{g-3}",
            Bound::D => "d_g",
        }
    }

    fn tree(self) -> TreeId {
        match self {
            Bound::All => unreachable!("expanded before use"),
            Bound::TwoFib => TreeId::A,
            Bound::FibSimple => TreeId::APrime,
            Bound::A => TreeId::ADoublePrime,
            Bound::C => TreeId::C,
            Bound::UpperSimple => TreeId::B,
            Bound::D => TreeId::I,
        }
    }

    /// The formula holds from this genus on; earlier entries are blank.
    fn first_genus(self) -> u32 {
        match self {
            Bound::TwoFib => 2,
            Bound::UpperSimple => 3,
            _ => 1,
        }
    }

    fn series(self, order: usize) -> Option<TruncatedSeries> {
        match self {
            Bound::FibSimple => Some(series::lower_simple(order)),
            Bound::A => Some(series::lower_a(order)),
            Bound::C => Some(series::upper_c(order)),
            Bound::D => Some(series::infinite_d(order)),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Source {
    Tree,
    Series,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Markdown,
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn walk_config(max_genus: u32, workers: usize) -> WalkConfig {
    WalkConfig::new(max_genus).workers(workers)
}

fn run_enumerate(max_genus: u32, by_multiplicity: bool, workers: usize) -> ExitCode {
    let mut config = walk_config(max_genus, workers);
    if by_multiplicity {
        config = config.with_multiplicity();
    }
    let result = match enumerate(&config) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    println!("g,n_g");
    for g in 1..=max_genus {
        println!("{g},{}", result.count(g));
    }
    if by_multiplicity {
        println!();
        println!("g,multiplicity,count");
        for g in 1..=max_genus {
            for lambda in 2..=g + 1 {
                let count = result.by_multiplicity(g, lambda).expect("collected");
                println!("{g},{lambda},{count}");
            }
        }
    }
    ExitCode::SUCCESS
}

fn run_bounds(max_genus: u32, which: &[Bound], source: Source) -> ExitCode {
    let mut selected: Vec<Bound> = if which.contains(&Bound::All) {
        Bound::EACH.to_vec()
    } else {
        which.to_vec()
    };
    selected.dedup();
    for bound in selected {
        let first = bound.first_genus();
        let cells = |values: &[String]| -> String {
            join((1..=max_genus).map(|g| {
                if g < first {
                    String::new()
                } else {
                    values[g as usize - 1].clone()
                }
            }))
        };
        if matches!(source, Source::Tree | Source::Both) {
            let totals: Vec<String> = level_totals(bound.tree(), max_genus)
                .iter()
                .map(BigUint::to_string)
                .collect();
            println!(
                "{} [tree {}]: {}",
                bound.label(),
                bound.tree(),
                cells(&totals)
            );
        }
        if matches!(source, Source::Series | Source::Both) {
            match bound.series(max_genus as usize) {
                Some(s) => {
                    let coeffs: Vec<String> = (1..=max_genus as usize)
                        .map(|g| s.coeff(g).to_string())
                        .collect();
                    println!("{} [series]: {}", bound.label(), cells(&coeffs));
                }
                None if source == Source::Series => {
                    println!("{} [series]: no generating function", bound.label())
                }
                None => {}
            }
        }
    }
    ExitCode::SUCCESS
}

fn run_infinite(max_genus: u32, workers: usize) -> ExitCode {
    let result = match enumerate(&walk_config(max_genus, workers).with_infinite()) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    let d = level_totals(TreeId::I, max_genus);
    println!("g,m_g,d_g,2F_(g-1),sum_bound");
    for g in 1..=max_genus {
        let m = result.infinite(g).expect("collected");
        let two_fib = if g >= 4 {
            (series::fibonacci(g - 1) * 2u32).to_string()
        } else {
            String::new()
        };
        let below: BigUint = (1..=(g - 1) / 2).map(|i| result.count(i)).sum::<BigUint>() + N_ZERO;
        let sum_bound = below * (g - 1) + 1u32;
        println!("{g},{m},{},{two_fib},{sum_bound}", d[g as usize - 1]);
    }
    ExitCode::SUCCESS
}

fn run_table(max_genus: u32, format: Format, enumerate_up_to: u32, workers: usize) -> ExitCode {
    let config = TableConfig {
        max_genus,
        enumerate_up_to: enumerate_up_to.min(MAX_GENUS_CAP),
        workers,
    };
    let rows = match bounds_rows(&config) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    let text = match format {
        Format::Csv => render_csv(&rows),
        Format::Json => render_json(&rows),
        Format::Markdown => render_markdown(&rows),
    };
    print!("{text}");
    ExitCode::SUCCESS
}

fn run_verify(max_genus: u32, series_order: usize, full: bool, workers: usize) -> ExitCode {
    let defaults = VerifyConfig::default();
    let config = VerifyConfig {
        max_genus: if full { max_genus.max(35) } else { max_genus },
        series_order,
        bivariate_order: defaults.bivariate_order.min(series_order),
        workers,
        ..defaults
    };
    let outcomes = run_suite(&config);
    let mut failed = 0;
    for o in &outcomes {
        let mark = if o.passed { "PASS" } else { "FAIL" };
        failed += usize::from(!o.passed);
        println!("[{mark}] {} {}: {}", o.criterion, o.name, o.detail);
    }
    println!("{} checks, {failed} failed", outcomes.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let workers = cli
        .workers
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
        .max(1);
    match cli.command {
        Command::Enumerate {
            max_genus,
            by_multiplicity,
        } => run_enumerate(max_genus, by_multiplicity, workers),
        Command::Bounds {
            max_genus,
            which,
            source,
        } => run_bounds(max_genus, &which, source),
        Command::Infinite { max_genus } => run_infinite(max_genus, workers),
        Command::Table {
            max_genus,
            format,
            enumerate_up_to,
        } => run_table(max_genus, format, enumerate_up_to, workers),
        Command::Verify {
            max_genus,
            series_order,
            full,
        } => run_verify(max_genus, series_order, full, workers),
    }
}
