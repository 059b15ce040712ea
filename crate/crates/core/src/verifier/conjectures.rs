//! Evidence sweeps for the open positivity claims. A finding here is a
//! counterexample, not a bug, so reports are marked unproved.

use num_bigint::BigInt;
use num_traits::Signed;

use super::families::{family_value, FamilyId, FamilyTables};
use super::id_enum;
use super::report::{FamilyReport, Finding};
use crate::error::{invalid, Result};
use crate::figurate::{gen_pentagonal, triangular};
use crate::par::{self, Mode};
use crate::partitions::{table_m_ok, table_q, table_q_r, FunctionTable};
use crate::series::{parity_sign, PochSpec, Series};

id_enum! {
    ConjectureId {
        Conj1 => "CONJ1",
        Conj2 => "CONJ2",
        Conj41 => "CONJ41",
        Conj42 => "CONJ42",
    }
}

/// `(-q;q)_inf sum_{n>=0} (-1)^{T_n} q^{G_{n+2k}}`
pub fn conj41_series(k: usize, order: usize) -> Series {
    theta_tail(k, order, gen_pentagonal)
}

/// `(-q;q)_inf sum_{n>=0} (-1)^{T_n} q^{T_{n+2k}}`
pub fn conj42_series(k: usize, order: usize) -> Series {
    theta_tail(k, order, triangular)
}

fn theta_tail(k: usize, order: usize, exp: fn(u64) -> u64) -> Series {
    let terms = (0u64..)
        .map(|n| (exp(n + 2 * k as u64) as usize, parity_sign(triangular(n))))
        .take_while(|&(e, _)| e <= order);
    let mut s = Series::from_terms(order, terms);
    s.mul_poch(&PochSpec::of_neg_q(1, 1));
    s
}

pub fn check_conjecture(id: ConjectureId, k_max: usize, n_max: usize) -> Result<FamilyReport> {
    check_conjecture_with(id, k_max, n_max, Mode::default())
}

/// Sweeps `1 <= k <= k_max` and `0 <= n <= n_max` (the series order for the
/// two theta-series claims). Findings carry the most negative gap at `(k, n)`.
pub fn check_conjecture_with(id: ConjectureId, k_max: usize, n_max: usize, mode: Mode) -> Result<FamilyReport> {
    if k_max < 1 {
        return Err(invalid("k_max must be >= 1"));
    }
    let q = (id == ConjectureId::Conj1).then(|| FamilyTables::from_q(table_q(n_max)));
    let (q2, q3) = if id == ConjectureId::Conj2 {
        (Some(table_q_r(2, n_max)?), Some(table_q_r(3, n_max)?))
    } else {
        (None, None)
    };
    let ks: Vec<usize> = (1..=k_max).collect();
    let partials = par::map(mode, &ks, |&k| -> Result<FamilyReport> {
        let gaps: Vec<BigInt> = match id {
            ConjectureId::Conj1 => conj1_gaps(k, n_max, q.as_ref().expect("built above")),
            ConjectureId::Conj2 => conj2_gaps(k, n_max, q2.as_ref().expect("built"), q3.as_ref().expect("built"))?,
            ConjectureId::Conj41 => conj41_series(k, n_max).into_coeffs(),
            ConjectureId::Conj42 => conj42_series(k, n_max).into_coeffs(),
        };
        let mut rep = FamilyReport::new(id.as_str(), false, Some([k, k]), [0, n_max]);
        for (n, value) in gaps.into_iter().enumerate() {
            rep.evidence_count += 1;
            if value.is_negative() {
                rep.violations.push(Finding { k: Some(k), n, value });
            }
        }
        Ok(rep)
    });
    let mut report = FamilyReport::new(id.as_str(), false, Some([1, k_max]), [0, n_max]);
    for p in partials {
        report.absorb(p?);
    }
    Ok(report.finish())
}

/// `min(A - B, B - C)` for the three square-window sums with `r = 1, 2, 3`.
fn conj1_gaps(k: usize, n_max: usize, q: &FamilyTables) -> Vec<BigInt> {
    (0..=n_max)
        .map(|n| {
            let a = family_value(FamilyId::Cor15A, k, n, q);
            let b = family_value(FamilyId::Cor15B, k, n, q);
            let c = family_value(FamilyId::Cor15C, k, n, q);
            (&a - &b).min(&b - &c)
        })
        .collect()
}

/// `min(M_{o,k} - conv_2, conv_2 - conv_3)`, `conv_r(n) = sum_j M_{o,k}(j) Q_r(n - r j)`.
fn conj2_gaps(k: usize, n_max: usize, q2: &FunctionTable, q3: &FunctionTable) -> Result<Vec<BigInt>> {
    let mok = table_m_ok(k, n_max)?;
    let conv = |qr: &FunctionTable, r: usize, n: usize| -> BigInt {
        (0..=n / r).map(|j| mok.get(j as i64) * qr.get((n - r * j) as i64)).sum()
    };
    Ok((0..=n_max)
        .map(|n| {
            let c2 = conv(q2, 2, n);
            let c3 = conv(q3, 3, n);
            (mok.get(n as i64) - &c2).min(c2 - c3)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{table_m_k, table_mp_k};

    #[test]
    fn theta_products_match_partition_forms() {
        let n = 150;
        for k in 1..=3 {
            let mut a = table_m_k(k, n).unwrap().to_series();
            a.mul_poch(&PochSpec::of_q(2, 2));
            assert_eq!(conj41_series(k, n), a, "k={k}");
            let mut b = table_mp_k(k, n).unwrap().to_series();
            b.mul_poch(&PochSpec::of_q(4, 4));
            assert_eq!(conj42_series(k, n), b, "k={k}");
        }
    }

    #[test]
    fn small_evidence_is_clean() {
        for &id in ConjectureId::ALL {
            let rep = check_conjecture_with(id, 3, 150, Mode::Sequential).unwrap();
            assert!(rep.violations.is_empty(), "{id}: {:?}", rep.violations.first());
            assert!(!rep.proved);
        }
    }

    #[test]
    fn conj1_and_conj2_agree() {
        // The two chains are the same statement: gap_1 = 2 * gap_2 pointwise.
        let n = 120;
        let q = FamilyTables::from_q(table_q(n));
        let q2 = table_q_r(2, n).unwrap();
        let q3 = table_q_r(3, n).unwrap();
        for k in 1..=3 {
            let g1 = conj1_gaps(k, n, &q);
            let g2 = conj2_gaps(k, n, &q2, &q3).unwrap();
            for (a, b) in g1.iter().zip(&g2) {
                assert_eq!(a, &(b * 2));
            }
        }
    }
}
