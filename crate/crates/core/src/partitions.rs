//! Value tables for the partition functions, each read off its generating
//! function, and brute-force enumeration oracles for cross-validation.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::series::{PochSpec, Series};

/// Largest `n` the enumeration oracles accept.
pub const ORACLE_CEILING: u64 = 60;

static ZERO: BigInt = BigInt::ZERO;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FunctionName {
    /// Euler's `p(n)`.
    P,
    /// Partitions into distinct parts.
    Q,
    /// Distinct parts, none divisible by `r`.
    QR(usize),
    Overpartition,
    /// Partitions with odd parts not repeated.
    Pod,
    MK(usize),
    MOK(usize),
    MPK(usize),
}

impl FunctionName {
    pub fn kind_str(&self) -> &'static str {
        match self {
            FunctionName::P => "P",
            FunctionName::Q => "Q",
            FunctionName::QR(_) => "Q_R",
            FunctionName::Overpartition => "OVERPARTITION",
            FunctionName::Pod => "POD",
            FunctionName::MK(_) => "M_K",
            FunctionName::MOK(_) => "M_OK",
            FunctionName::MPK(_) => "MP_K",
        }
    }
}

impl fmt::Display for FunctionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctionName::QR(r) => write!(f, "Q_R(r={r})"),
            FunctionName::MK(k) | FunctionName::MOK(k) | FunctionName::MPK(k) => {
                write!(f, "{}(k={k})", self.kind_str())
            }
            _ => f.write_str(self.kind_str()),
        }
    }
}

impl Serialize for FunctionName {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `f(0) ..= f(n_max)` for one partition function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FunctionTable {
    pub name: FunctionName,
    pub n_max: usize,
    #[serde(serialize_with = "serialize_values")]
    values: Vec<BigInt>,
}

fn serialize_values<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    crate::bigjson::Numbers(v).serialize(s)
}

impl FunctionTable {
    pub fn new(name: FunctionName, values: Vec<BigInt>) -> Self {
        assert!(!values.is_empty());
        FunctionTable { name, n_max: values.len() - 1, values }
    }

    fn from_series(name: FunctionName, s: Series) -> Self {
        Self::new(name, s.into_coeffs())
    }

    /// `f(n)`, with `f(n) = 0` for every negative `n`.
    ///
    /// Panics if `n > n_max`.
    pub fn get(&self, n: i64) -> &BigInt {
        if n < 0 {
            return &ZERO;
        }
        let n = n as usize;
        assert!(n <= self.n_max, "{}: index {n} beyond table end {}", self.name, self.n_max);
        &self.values[n]
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn to_series(&self) -> Series {
        Series::from_coeffs(self.values.clone())
    }
}

/// Builds the table for any function name.
pub fn table(name: FunctionName, n_max: usize) -> Result<FunctionTable> {
    match name {
        FunctionName::P => Ok(table_p(n_max)),
        FunctionName::Q => Ok(table_q(n_max)),
        FunctionName::QR(r) => table_q_r(r, n_max),
        FunctionName::Overpartition => Ok(table_overpartition(n_max)),
        FunctionName::Pod => Ok(table_pod(n_max)),
        FunctionName::MK(k) => table_m_k(k, n_max),
        FunctionName::MOK(k) => table_m_ok(k, n_max),
        FunctionName::MPK(k) => table_mp_k(k, n_max),
    }
}

/// `1 / (q;q)_inf`
pub fn table_p(n_max: usize) -> FunctionTable {
    let s = Series::inverse_pochhammer(&PochSpec::of_q(1, 1), n_max);
    FunctionTable::from_series(FunctionName::P, s)
}

/// `(-q;q)_inf`
pub fn table_q(n_max: usize) -> FunctionTable {
    let s = Series::pochhammer(&PochSpec::of_neg_q(1, 1), n_max);
    FunctionTable::from_series(FunctionName::Q, s)
}

/// `(q^r;q^{2r})_inf / (q;q^2)_inf`
pub fn table_q_r(r: usize, n_max: usize) -> Result<FunctionTable> {
    if r < 2 {
        return Err(invalid("Q_R needs r >= 2"));
    }
    let mut s = Series::pochhammer(&PochSpec::of_q(r, 2 * r), n_max);
    s.div_poch(&PochSpec::of_q(1, 2));
    Ok(FunctionTable::from_series(FunctionName::QR(r), s))
}

/// `(-q;q)_inf / (q;q)_inf`
pub fn table_overpartition(n_max: usize) -> FunctionTable {
    let mut s = Series::pochhammer(&PochSpec::of_neg_q(1, 1), n_max);
    s.div_poch(&PochSpec::of_q(1, 1));
    FunctionTable::from_series(FunctionName::Overpartition, s)
}

/// `(-q;q^2)_inf / (q^2;q^2)_inf`
pub fn table_pod(n_max: usize) -> FunctionTable {
    let mut s = Series::pochhammer(&PochSpec::of_neg_q(1, 2), n_max);
    s.div_poch(&PochSpec::of_q(2, 2));
    FunctionTable::from_series(FunctionName::Pod, s)
}

fn require_k(k: usize) -> Result<()> {
    if k < 1 {
        return Err(invalid("k must be >= 1"));
    }
    Ok(())
}

/// `sum_{n>=1} q^{C(k,2)+(k+1)n} / (q;q)_n [n-1, k-1]`.
///
/// Terms with `n < k` vanish, and for `n >= k`
/// `[n-1, k-1] / (q;q)_n = 1 / ((q;q)_{k-1} (q;q)_{n-k} (1 - q^n))`,
/// so the sum is accumulated with one running inverse product.
pub fn table_m_k(k: usize, n_max: usize) -> Result<FunctionTable> {
    require_k(k)?;
    let base = k * (k - 1) / 2;
    let mut acc = Series::zero(n_max);
    let mut inv_poch = Series::one(n_max); // 1/(q;q)_{n-k}
    for n in k.. {
        let exp = base + (k + 1) * n;
        if exp > n_max {
            break;
        }
        if n > k {
            inv_poch.div_factor(crate::series::Sign::Plus, n - k);
        }
        let mut term = inv_poch.clone();
        term.div_factor(crate::series::Sign::Plus, n);
        acc.add_shifted(&term, exp)?;
    }
    acc.div_poch(&PochSpec::of_q(1, 1).finite(k - 1));
    Ok(FunctionTable::from_series(FunctionName::MK(k), acc))
}

/// `q^{(k+1)^2} sum_{j>=0} q^{(2k+2j+3)j} / ((q^2;q^2)_j (q;q^2)_{k+j+1})`
pub fn table_m_ok(k: usize, n_max: usize) -> Result<FunctionTable> {
    require_k(k)?;
    let lead = (k + 1) * (k + 1);
    let mut acc = Series::zero(n_max);
    let mut term = Series::inverse_pochhammer(&PochSpec::of_q(1, 2).finite(k + 1), n_max);
    for j in 0.. {
        let exp = lead + (2 * k + 2 * j + 3) * j;
        if exp > n_max {
            break;
        }
        if j > 0 {
            term.div_factor(crate::series::Sign::Plus, 2 * j);
            term.div_factor(crate::series::Sign::Plus, 2 * (k + j) + 1);
        }
        acc.add_shifted(&term, exp)?;
    }
    Ok(FunctionTable::from_series(FunctionName::MOK(k), acc))
}

/// `(-q;q^2)_k / (q^2;q^2)_{k-1} * sum_{j>=0} q^{k(2j+2k+1)} (-q^{2j+2k+3};q^2)_inf / (q^{2k+2j+2};q^2)_inf`
pub fn table_mp_k(k: usize, n_max: usize) -> Result<FunctionTable> {
    require_k(k)?;
    use crate::series::Sign;
    let mut acc = Series::zero(n_max);
    let mut tail = Series::pochhammer(&PochSpec::of_neg_q(2 * k + 3, 2), n_max);
    tail.div_poch(&PochSpec::of_q(2 * k + 2, 2));
    for j in 0.. {
        let exp = k * (2 * j + 2 * k + 1);
        if exp > n_max {
            break;
        }
        if j > 0 {
            // drop (1 + q^{2j+2k+1}) from the numerator, (1 - q^{2k+2j}) from the denominator
            tail.div_factor(Sign::Minus, 2 * j + 2 * k + 1);
            tail.mul_factor(Sign::Plus, 2 * k + 2 * j);
        }
        acc.add_shifted(&tail, exp)?;
    }
    acc.mul_poch(&PochSpec::of_neg_q(1, 2).finite(k));
    acc.div_poch(&PochSpec::of_q(2, 2).finite(k - 1));
    Ok(FunctionTable::from_series(FunctionName::MPK(k), acc))
}

/// What an enumeration oracle counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleKind {
    P,
    Q,
    QR(usize),
    Overpartition,
    Pod,
    MK(usize),
    MPK(usize),
    /// Odd parts, each used at most twice (same count as `Q_R(3)`).
    OddPartsAtMostTwice,
}

/// Counts partitions of `n` of the given kind by generating every partition.
pub fn enumerate_oracle(kind: OracleKind, n: u64) -> Result<u64> {
    if n > ORACLE_CEILING {
        return Err(Error::AboveOracleCeiling { n, ceiling: ORACLE_CEILING });
    }
    match kind {
        OracleKind::QR(r) if r < 2 => return Err(invalid("Q_R needs r >= 2")),
        OracleKind::MK(0) | OracleKind::MPK(0) => return Err(invalid("k must be >= 1")),
        _ => {}
    }
    let n = n as usize;
    let mut mult = vec![0u32; n + 1];
    let mut total = 0u64;
    for_each_partition(n, n, &mut mult, &mut |m| total += weight(kind, m));
    Ok(total)
}

/// Calls `f` with the multiplicity vector (`m[i]` copies of part `i`) of every
/// partition of `rest` into parts at most `max_part`, on top of the parts
/// already recorded in `mult`.
fn for_each_partition(rest: usize, max_part: usize, mult: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if rest == 0 {
        f(mult);
        return;
    }
    if max_part == 0 {
        return;
    }
    let part = max_part;
    for copies in (0..=rest / part).rev() {
        mult[part] = copies as u32;
        for_each_partition(rest - copies * part, part - 1, mult, f);
    }
    mult[part] = 0;
}

fn weight(kind: OracleKind, m: &[u32]) -> u64 {
    let parts = || m.iter().enumerate().skip(1).filter(|(_, &c)| c > 0);
    let ok = |b: bool| u64::from(b);
    match kind {
        OracleKind::P => 1,
        OracleKind::Q => ok(m.iter().all(|&c| c <= 1)),
        OracleKind::QR(r) => ok(parts().all(|(i, &c)| c == 1 && i % r != 0)),
        OracleKind::Overpartition => 1 << parts().count(),
        OracleKind::Pod => ok(parts().all(|(i, &c)| i % 2 == 0 || c == 1)),
        OracleKind::OddPartsAtMostTwice => ok(parts().all(|(i, &c)| i % 2 == 1 && c <= 2)),
        OracleKind::MK(k) => {
            let count = |i: usize| m.get(i).copied().unwrap_or(0) as u64;
            let least_missing = (1..).find(|&i| count(i) == 0).unwrap();
            if least_missing != k {
                return 0;
            }
            let below: u64 = (1..k).map(count).sum();
            let above: u64 = (k + 1..m.len()).map(count).sum();
            ok(above > below)
        }
        OracleKind::MPK(k) => {
            let Some((first, &c)) = parts().find(|(i, _)| *i > 2 * k - 1) else {
                return 0;
            };
            ok(first % 2 == 1
                && c as usize == k
                && parts().all(|(i, &c)| i == first || i % 2 == 0 || c == 1))
        }
    }
}
