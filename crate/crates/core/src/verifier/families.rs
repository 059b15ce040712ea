//! Linear inequality families: sign sweeps and strictness boundaries.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::id_enum;
use super::report::{BoundaryMismatch, FamilyReport, Finding};
use crate::error::{invalid, Result};
use crate::figurate::{gen_pentagonal, triangular, FigurateSeq};
use crate::par::{self, Mode};
use crate::partitions::{table_overpartition, table_p, table_pod, table_q, FunctionTable};
use crate::series::parity_sign;

id_enum! {
    FamilyId {
        Eq3 => "FAM_EQ3",
        Eq8 => "FAM_EQ8",
        Eq9 => "FAM_EQ9",
        Eq110 => "FAM_EQ110",
        Cor12 => "FAM_COR12",
        Cor15A => "FAM_COR15A",
        Cor15B => "FAM_COR15B",
        Cor15C => "FAM_COR15C",
        Ineq41 => "FAM_INEQ41",
        Ineq42 => "FAM_INEQ42",
    }
}

/// How strict inequality relates to `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strictness {
    /// Strict exactly when `n >= threshold`, equality below it.
    IfAndOnlyIf(u64),
    /// Strict whenever `n >= threshold`; nothing claimed below.
    Above(u64),
    /// No strictness claim.
    Unstated,
}

impl FamilyId {
    pub fn strictness(self, k: usize) -> Strictness {
        let k = k as u64;
        match self {
            // strict once n exceeds G_{2k}
            FamilyId::Eq3 => Strictness::Above(gen_pentagonal(2 * k) + 1),
            FamilyId::Eq8 => Strictness::Above((k + 1) * (k + 1)),
            FamilyId::Eq9 => Strictness::Above((2 * k + 1) * k),
            FamilyId::Eq110 => Strictness::Unstated,
            FamilyId::Cor12 => Strictness::IfAndOnlyIf(2 * gen_pentagonal(2 * k)),
            FamilyId::Cor15A => Strictness::IfAndOnlyIf((k + 1) * (k + 1)),
            FamilyId::Cor15B => Strictness::IfAndOnlyIf(2 * (k + 1) * (k + 1)),
            FamilyId::Cor15C => Strictness::IfAndOnlyIf(3 * (k + 1) * (k + 1)),
            FamilyId::Ineq41 => Strictness::IfAndOnlyIf(gen_pentagonal(2 * k)),
            FamilyId::Ineq42 => Strictness::IfAndOnlyIf(triangular(2 * k)),
        }
    }

    /// Whether the sign is claimed at `(k, n)`.
    ///
    /// The three classical families are statements about `n >= 1`: at `n = 0`
    /// the window reduces to the leading `1` of the underlying identity.
    pub fn asserted_at(self, k: usize, n: usize) -> bool {
        match self {
            FamilyId::Eq3 | FamilyId::Eq8 | FamilyId::Eq9 => n >= 1,
            FamilyId::Eq110 => n % 2 == 1 || k % 2 == 1,
            _ => true,
        }
    }

    /// The last two families rest on the open positivity claims.
    pub fn is_proved(self) -> bool {
        !matches!(self, FamilyId::Ineq41 | FamilyId::Ineq42)
    }
}

/// The one function table a family reads.
#[derive(Debug, Clone)]
pub struct FamilyTables {
    table: FunctionTable,
}

impl FamilyTables {
    pub fn for_family(id: FamilyId, n_max: usize) -> Self {
        let table = match id {
            FamilyId::Eq3 | FamilyId::Eq110 => table_p(n_max),
            FamilyId::Eq8 => table_overpartition(n_max),
            FamilyId::Eq9 => table_pod(n_max),
            _ => table_q(n_max),
        };
        FamilyTables { table }
    }

    pub fn from_q(q: FunctionTable) -> Self {
        FamilyTables { table: q }
    }

    fn f(&self, n: i64) -> &BigInt {
        self.table.get(n)
    }
}

fn index_in(seq: FigurateSeq, n: usize) -> Option<u64> {
    seq.index_of(n as u64)
}

/// `sum_{j=0}^{2k-1} (-1)^{T_j} f(n - offset(j))`
fn alternating_window(t: &FamilyTables, k: usize, n: usize, offset: impl Fn(u64) -> u64) -> BigInt {
    let mut acc = BigInt::zero();
    for j in 0..2 * k as u64 {
        let o = offset(j);
        if o as usize > n {
            continue;
        }
        let v = t.f(n as i64 - o as i64);
        if triangular(j) % 2 == 0 {
            acc += v;
        } else {
            acc -= v;
        }
    }
    acc
}

/// `f(n) + 2 sum_{j=1}^{k} (-1)^j f(n - r j^2)`
fn square_window(t: &FamilyTables, k: usize, n: usize, r: usize) -> BigInt {
    let mut acc = t.f(n as i64).clone();
    for j in 1..=k {
        let v = t.f(n as i64 - (r * j * j) as i64) * 2;
        if j % 2 == 0 {
            acc += v;
        } else {
            acc -= v;
        }
    }
    acc
}

fn with_sign(v: BigInt, exponent: usize) -> BigInt {
    if exponent % 2 == 0 {
        v
    } else {
        -v
    }
}

/// The signed quantity each family asserts to be nonnegative.
pub fn family_value(id: FamilyId, k: usize, n: usize, t: &FamilyTables) -> BigInt {
    let gp = FigurateSeq::gen_pentagonal(1);
    match id {
        FamilyId::Eq3 => with_sign(alternating_window(t, k, n, gen_pentagonal), k - 1),
        FamilyId::Eq8 => with_sign(square_window(t, k, n, 1), k),
        FamilyId::Eq9 | FamilyId::Eq110 => with_sign(alternating_window(t, k, n, triangular), k - 1),
        FamilyId::Cor12 => {
            let delta = i64::from(index_in(FigurateSeq::triangular(1), n).is_some());
            with_sign(alternating_window(t, k, n, |j| 2 * gen_pentagonal(j)) - delta, k - 1)
        }
        FamilyId::Cor15A | FamilyId::Cor15B | FamilyId::Cor15C => {
            let r = match id {
                FamilyId::Cor15A => 1,
                FamilyId::Cor15B => 2,
                _ => 3,
            };
            let delta = index_in(gp, n).map_or(0, |m| match r {
                1 => parity_sign(triangular(m)),
                2 => parity_sign(triangular(m / 2)),
                _ => 1,
            });
            with_sign(square_window(t, k, n, r) - delta, k)
        }
        FamilyId::Ineq41 => {
            let delta = index_in(FigurateSeq::gen_pentagonal(2), n).map_or(0, |m| parity_sign(triangular(m)));
            with_sign(alternating_window(t, k, n, gen_pentagonal) - delta, k - 1)
        }
        FamilyId::Ineq42 => {
            let delta = index_in(FigurateSeq::gen_pentagonal(4), n).map_or(0, |m| parity_sign(triangular(m)));
            with_sign(alternating_window(t, k, n, triangular) - delta, k - 1)
        }
    }
}

pub fn verify_inequality_family(id: FamilyId, k_max: usize, n_max: usize) -> Result<FamilyReport> {
    verify_inequality_family_with(id, k_max, n_max, Mode::default())
}

/// Sweeps `1 <= k <= k_max`, `0 <= n <= n_max`; each `k` is an independent job.
pub fn verify_inequality_family_with(id: FamilyId, k_max: usize, n_max: usize, mode: Mode) -> Result<FamilyReport> {
    if k_max < 1 {
        return Err(invalid("k_max must be >= 1"));
    }
    let tables = FamilyTables::for_family(id, n_max);
    let ks: Vec<usize> = (1..=k_max).collect();
    let partials = par::map(mode, &ks, |&k| sweep_k(id, k, n_max, &tables));
    let mut report = FamilyReport::new(id.as_str(), id.is_proved(), Some([1, k_max]), [0, n_max]);
    for p in partials {
        report.absorb(p);
    }
    Ok(report.finish())
}

fn sweep_k(id: FamilyId, k: usize, n_max: usize, tables: &FamilyTables) -> FamilyReport {
    let mut rep = FamilyReport::new(id.as_str(), id.is_proved(), Some([k, k]), [0, n_max]);
    let strictness = id.strictness(k);
    for n in 0..=n_max {
        let value = family_value(id, k, n, tables);
        if !id.asserted_at(k, n) {
            if value.is_negative() {
                rep.unasserted.push(Finding { k: Some(k), n, value });
            }
            continue;
        }
        rep.evidence_count += 1;
        let expected = match strictness {
            Strictness::IfAndOnlyIf(t) if (n as u64) < t && !value.is_zero() => Some("zero"),
            Strictness::IfAndOnlyIf(t) | Strictness::Above(t) if n as u64 >= t && !value.is_positive() => {
                Some("positive")
            }
            _ => None,
        };
        if let Some(expected) = expected {
            rep.boundary_mismatches.push(BoundaryMismatch { k, n, value: value.clone(), expected });
        }
        if value.is_negative() {
            rep.violations.push(Finding { k: Some(k), n, value });
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    fn val(id: FamilyId, k: usize, n: usize) -> i64 {
        let t = FamilyTables::for_family(id, 40);
        i64::try_from(&family_value(id, k, n, &t)).unwrap()
    }

    #[test]
    fn hand_evaluated_points() {
        // -(Q(1) - 2Q(0) - (-1)^{T_1})
        assert_eq!(val(FamilyId::Cor15A, 1, 1), 0);
        // Q(4) - Q(2), 4 is not triangular
        assert_eq!(val(FamilyId::Cor12, 1, 4), 1);
        // p(2) - p(1)
        assert_eq!(val(FamilyId::Eq3, 1, 2), 1);
        // Q(3) - Q(1) - 1 (3 = T_2)
        assert_eq!(val(FamilyId::Cor12, 1, 3), 0);
    }

    #[test]
    fn eq3_is_m_k() {
        let t = FamilyTables::for_family(FamilyId::Eq3, 60);
        for k in 1..=3 {
            let m = crate::partitions::table_m_k(k, 60).unwrap();
            for n in 1..=60 {
                assert_eq!(&family_value(FamilyId::Eq3, k, n, &t), m.get(n as i64), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn small_sweeps_are_clean() {
        for &id in FamilyId::ALL {
            let rep = verify_inequality_family_with(id, 3, 120, Mode::Sequential).unwrap();
            assert!(rep.is_clean(), "{id}: {:?} {:?}", rep.violations.first(), rep.boundary_mismatches.first());
        }
    }

    #[test]
    fn modes_agree() {
        let a = verify_inequality_family_with(FamilyId::Cor15B, 4, 200, Mode::Sequential).unwrap();
        let b = verify_inequality_family_with(FamilyId::Cor15B, 4, 200, Mode::Parallel).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_zero_k() {
        assert!(verify_inequality_family(FamilyId::Eq3, 0, 10).is_err());
    }
}
