//! Exact truncated q-series, partition-function tables, and a checker for
//! truncated theta-series identities, linear inequalities for partitions
//! into distinct parts, parity results and conjectured positivity.

mod bigjson;
pub mod cli;
pub mod error;
pub mod figurate;
pub mod par;
pub mod partitions;
pub mod recurrences;
pub mod series;
pub mod verifier;

pub use error::{Error, Result};
pub use figurate::{FigurateKind, FigurateSeq};
pub use partitions::{FunctionName, FunctionTable};
pub use recurrences::RecurrenceKind;
pub use series::{PochSpec, Series, Sign};
