//! `Q(n)` from the six linear recurrences, and their term counts.
//!
//! Every recurrence has the shape
//! `Q(n) + sum_{j>=1} c_j Q(n - o_j) = rhs(n)`, and is solved bottom-up for
//! `Q(n)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::Error;
use crate::figurate::{gen_pentagonal, triangular, FigurateSeq};
use crate::partitions::{FunctionName, FunctionTable};
use crate::series::parity_sign;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RecurrenceKind {
    /// Offsets `2 G_j`, signs `(-1)^{T_j}`; rhs 1 at triangular numbers.
    #[serde(rename = "REC1")]
    Rec1,
    /// Offsets `j^2`, coefficients `2(-1)^j`; rhs `(-1)^{T_m}` at `G_m`.
    #[serde(rename = "REC2")]
    Rec2,
    /// Offsets `2j^2`; rhs `(-1)^{T_{floor(m/2)}}` at `G_m`.
    #[serde(rename = "REC3")]
    Rec3,
    /// Offsets `3j^2`; rhs 1 at `G_m`.
    #[serde(rename = "REC4")]
    Rec4,
    /// Offsets `G_j`, signs `(-1)^{T_j}`; rhs `(-1)^{T_m}` at `2 G_m`.
    #[serde(rename = "REC5")]
    Rec5,
    /// Offsets `T_j`, signs `(-1)^{T_j}`; rhs `(-1)^{T_m}` at `4 G_m`.
    #[serde(rename = "REC6")]
    Rec6,
}

impl RecurrenceKind {
    pub const ALL: [RecurrenceKind; 6] = [
        RecurrenceKind::Rec1,
        RecurrenceKind::Rec2,
        RecurrenceKind::Rec3,
        RecurrenceKind::Rec4,
        RecurrenceKind::Rec5,
        RecurrenceKind::Rec6,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RecurrenceKind::Rec1 => "REC1",
            RecurrenceKind::Rec2 => "REC2",
            RecurrenceKind::Rec3 => "REC3",
            RecurrenceKind::Rec4 => "REC4",
            RecurrenceKind::Rec5 => "REC5",
            RecurrenceKind::Rec6 => "REC6",
        }
    }

    /// `(o_j, c_j)` for `j = 1, 2, ...`.
    fn term(self, j: u64) -> (u64, i64) {
        match self {
            RecurrenceKind::Rec1 => (2 * gen_pentagonal(j), parity_sign(triangular(j))),
            RecurrenceKind::Rec2 => (j * j, 2 * parity_sign(j)),
            RecurrenceKind::Rec3 => (2 * j * j, 2 * parity_sign(j)),
            RecurrenceKind::Rec4 => (3 * j * j, 2 * parity_sign(j)),
            RecurrenceKind::Rec5 => (gen_pentagonal(j), parity_sign(triangular(j))),
            RecurrenceKind::Rec6 => (triangular(j), parity_sign(triangular(j))),
        }
    }

    /// Nonzero-offset terms with `o_j <= n`, in increasing offset order.
    pub fn terms_up_to(self, n: u64) -> impl Iterator<Item = (u64, i64)> {
        (1..).map(move |j| self.term(j)).take_while(move |&(o, _)| o <= n)
    }

    /// Right-hand side at `n`.
    pub fn rhs(self, n: u64) -> i64 {
        let hit = |seq: FigurateSeq| seq.index_of(n);
        match self {
            RecurrenceKind::Rec1 => i64::from(hit(FigurateSeq::triangular(1)).is_some()),
            RecurrenceKind::Rec2 => hit(FigurateSeq::gen_pentagonal(1)).map_or(0, |m| parity_sign(triangular(m))),
            RecurrenceKind::Rec3 => {
                hit(FigurateSeq::gen_pentagonal(1)).map_or(0, |m| parity_sign(triangular(m / 2)))
            }
            RecurrenceKind::Rec4 => i64::from(hit(FigurateSeq::gen_pentagonal(1)).is_some()),
            RecurrenceKind::Rec5 => hit(FigurateSeq::gen_pentagonal(2)).map_or(0, |m| parity_sign(triangular(m))),
            RecurrenceKind::Rec6 => hit(FigurateSeq::gen_pentagonal(4)).map_or(0, |m| parity_sign(triangular(m))),
        }
    }
}

impl fmt::Display for RecurrenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RecurrenceKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Self::ALL
            .into_iter()
            .find(|k| k.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

/// The `Q` table up to `n_max`, computed from one recurrence.
pub fn q_via_recurrence(kind: RecurrenceKind, n_max: usize) -> FunctionTable {
    let terms: Vec<(usize, i64)> = kind.terms_up_to(n_max as u64).map(|(o, c)| (o as usize, c)).collect();
    let mut q: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut value = BigInt::from(kind.rhs(n as u64));
        let mut acc = BigInt::zero();
        for &(o, c) in terms.iter().take_while(|&&(o, _)| o <= n) {
            let prev = &q[n - o];
            match c {
                1 => acc += prev,
                -1 => acc -= prev,
                2 => {
                    acc += prev;
                    acc += prev;
                }
                -2 => {
                    acc -= prev;
                    acc -= prev;
                }
                _ => acc += prev * c,
            }
        }
        value -= acc;
        q.push(value);
    }
    FunctionTable::new(FunctionName::Q, q)
}

/// Summands `Q(n - o)` with `o <= n`, counting the `j = 0` term.
pub fn term_count(kind: RecurrenceKind, n: u64) -> usize {
    1 + kind.terms_up_to(n).count()
}
