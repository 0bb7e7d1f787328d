//! Per-genus rows of every bound sequence, and their text renderings.

use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

use crate::gentree::{level_totals, TreeId};
use crate::walker::{enumerate, WalkConfig, WalkError};

/// Largest genus a table row can hold; every column fits a `u64` below it.
pub const TABLE_MAX_GENUS: u32 = 60;

#[derive(Debug, Error)]
pub enum TableError {
    #[error("table genus {0} exceeds {TABLE_MAX_GENUS}")]
    TooLarge(u32),
    #[error(transparent)]
    Walk(#[from] WalkError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsRow {
    pub g: u32,
    pub two_fib: Option<u64>,
    pub fib_simple: u64,
    pub a_g: u64,
    pub n_g: Option<u64>,
    pub c_g: u64,
    pub upper_simple: Option<u64>,
    pub m_g: Option<u64>,
    pub d_g: Option<u64>,
}

impl BoundsRow {
    /// `2F_g ≤ F_{g+2}-1 ≤ a_g ≤ n_g ≤ c_g ≤ 1+3·2^{g-3}` over the present
    /// columns, and `m_g ≤ min(d_g, n_g)`.
    pub fn ordering_holds(&self) -> bool {
        let chain = [
            self.two_fib,
            Some(self.fib_simple),
            Some(self.a_g),
            self.n_g,
            Some(self.c_g),
            self.upper_simple,
        ];
        let present: Vec<u64> = chain.into_iter().flatten().collect();
        let sorted = present.windows(2).all(|w| w[0] <= w[1]);
        let m_ok = match self.m_g {
            Some(m) => self.d_g.is_none_or(|d| m <= d) && self.n_g.is_none_or(|n| m <= n),
            None => true,
        };
        sorted && m_ok
    }
}

#[derive(Clone, Debug)]
pub struct TableConfig {
    pub max_genus: u32,
    /// `n_g` and `m_g` are enumerated up to this genus and absent above.
    pub enumerate_up_to: u32,
    pub workers: usize,
}

fn to_u64(x: &BigUint) -> u64 {
    x.try_into().expect("bounded by TABLE_MAX_GENUS")
}

pub fn bounds_rows(config: &TableConfig) -> Result<Vec<BoundsRow>, TableError> {
    let g_max = config.max_genus;
    if g_max > TABLE_MAX_GENUS {
        return Err(TableError::TooLarge(g_max));
    }
    let column = |tree| -> Vec<u64> { level_totals(tree, g_max).iter().map(to_u64).collect() };
    let (a, a1, a2, b, c, i) = (
        column(TreeId::A),
        column(TreeId::APrime),
        column(TreeId::ADoublePrime),
        column(TreeId::B),
        column(TreeId::C),
        column(TreeId::I),
    );
    let enum_max = config.enumerate_up_to.min(g_max);
    let walk = if enum_max >= 1 {
        Some(enumerate(
            &WalkConfig::new(enum_max)
                .workers(config.workers)
                .with_infinite(),
        )?)
    } else {
        None
    };
    Ok((1..=g_max)
        .map(|g| {
            let idx = g as usize - 1;
            let walked = walk.as_ref().filter(|_| g <= enum_max);
            BoundsRow {
                g,
                two_fib: (g >= 2).then(|| a[idx]),
                fib_simple: a1[idx],
                a_g: a2[idx],
                n_g: walked.map(|w| to_u64(w.count(g))),
                c_g: c[idx],
                upper_simple: (g >= 3).then(|| b[idx]),
                m_g: walked.and_then(|w| w.infinite(g)).map(to_u64),
                d_g: Some(i[idx]),
            }
        })
        .collect())
}

fn cell(x: Option<u64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

pub const CSV_HEADER: &str = "g,two_fib,fib_simple,a_g,n_g,c_g,upper_simple,m_g,d_g";

pub fn render_csv(rows: &[BoundsRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let fields = [
            r.g.to_string(),
            cell(r.two_fib),
            r.fib_simple.to_string(),
            r.a_g.to_string(),
            cell(r.n_g),
            r.c_g.to_string(),
            cell(r.upper_simple),
            cell(r.m_g),
            cell(r.d_g),
        ];
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

pub fn render_json(rows: &[BoundsRow]) -> String {
    let mut out = serde_json::to_string_pretty(rows).expect("rows serialize");
    out.push('\n');
    out
}

/// Markdown in the layout of the published table: seven columns, blanks
/// where a bound is not claimed.
pub fn render_markdown(rows: &[BoundsRow]) -> String {
    let mut out = String::from(
        "| g | 2F_g | F_{g+2}-1 | a_g | n_g | c_g | 1+3·2^{g-3} |\n|---:|---:|---:|---:|---:|---:|---:|\n",
    );
    for r in rows {
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} | {} |\n",
            r.g,
            cell(r.two_fib),
            r.fib_simple,
            r.a_g,
            cell(r.n_g),
            r.c_g,
            cell(r.upper_simple)
        ));
    }
    out
}
