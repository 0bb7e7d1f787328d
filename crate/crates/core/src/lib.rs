//! Counting numerical semigroups by genus, together with the generating-tree
//! and power-series machinery that bounds those counts from both sides.

pub mod gentree;
pub mod golden;
pub mod invariants;
pub mod oracle;
pub mod semigroup;
pub mod series;
pub mod table;
pub mod verify;
pub mod walker;

pub use gentree::{level_counts, level_totals, rule_children, LevelCounts, NodeLabel, TreeId};
pub use num_bigint::BigUint;
pub use semigroup::{GeneratorInfo, Semigroup, SemigroupError};
pub use series::{BivariateSeries, SeriesError, TruncatedSeries};
pub use table::{bounds_rows, BoundsRow, TableConfig};
pub use verify::{run_suite, CheckOutcome, VerifyConfig};
pub use walker::{enumerate, WalkConfig, WalkError, WalkResult};
