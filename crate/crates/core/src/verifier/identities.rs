//! Coefficientwise checks of the closed identity catalog.
//!
//! Each identity is built as two independently assembled series and compared
//! exactly through `q^order`. Infinite sums keep only terms whose leading
//! exponent is at most `order`, the same rule the Pochhammer products use.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::families::{family_value, FamilyId, FamilyTables};
use super::id_enum;
use super::report::{IdentityReport, Mismatch, Outcome};
use crate::error::{invalid, Result};
use crate::figurate::{gen_pentagonal, triangular};
use crate::partitions::{table_m_k, table_m_ok, table_mp_k, table_q, table_q_r};
use crate::series::{parity_sign, theta_truncated, GaussianColumn, PochSpec, Series, Sign, ThetaKind};

pub const MAX_IDENTITY_K: usize = 8;
pub const MAX_IDENTITY_ORDER: usize = 2000;

id_enum! {
    IdentityId {
        Eq2 => "ID_EQ2",
        Eq6 => "ID_EQ6",
        Eq7 => "ID_EQ7",
        Eq7Rev => "ID_EQ7REV",
        Th11 => "ID_TH11",
        Th14 => "ID_TH14",
        Lemma21 => "ID_LEMMA21",
        Gauss4 => "ID_GAUSS4",
        Gauss5 => "ID_GAUSS5",
        Aux2 => "ID_AUX2",
        Aux3 => "ID_AUX3",
        Cor31 => "ID_COR31",
        Cor32A => "ID_COR32A",
        Cor32B => "ID_COR32B",
        Cor32C => "ID_COR32C",
    }
}

impl IdentityId {
    pub fn uses_k(self) -> bool {
        !matches!(self, IdentityId::Gauss4 | IdentityId::Gauss5 | IdentityId::Aux2 | IdentityId::Aux3)
    }

    pub fn uses_r(self) -> bool {
        self == IdentityId::Th14
    }

    /// Lowest exponent where the k-dependent part of the identity can show up.
    fn min_degree(self, k: usize, r: usize) -> usize {
        let k64 = k as u64;
        let d = match self {
            IdentityId::Eq2 => gen_pentagonal(2 * k64),
            IdentityId::Eq6 => (k64 + 1) * (k64 + 1),
            IdentityId::Eq7 | IdentityId::Eq7Rev => triangular(2 * k64),
            IdentityId::Th11 | IdentityId::Cor31 => 2 * gen_pentagonal(2 * k64),
            IdentityId::Th14 => r as u64 * (k64 + 1) * (k64 + 1),
            IdentityId::Cor32A => (k64 + 1) * (k64 + 1),
            IdentityId::Cor32B => 2 * (k64 + 1) * (k64 + 1),
            IdentityId::Cor32C => 3 * (k64 + 1) * (k64 + 1),
            IdentityId::Lemma21 => 2 * k64 + 3,
            _ => 1,
        };
        d as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdentityParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
}

impl IdentityParams {
    pub fn k(k: usize) -> Self {
        IdentityParams { k: Some(k), r: None }
    }

    pub fn kr(k: usize, r: usize) -> Self {
        IdentityParams { k: Some(k), r: Some(r) }
    }

    pub fn none() -> Self {
        IdentityParams { k: None, r: None }
    }
}

/// Builds both sides of `id` and compares them through `q^order`.
pub fn verify_identity(id: IdentityId, params: IdentityParams, order: usize) -> Result<IdentityReport> {
    if order > MAX_IDENTITY_ORDER {
        return Err(invalid(format!("order {order} exceeds {MAX_IDENTITY_ORDER}")));
    }
    let k = if id.uses_k() {
        let k = params.k.ok_or_else(|| invalid(format!("{id} needs k")))?;
        if !(1..=MAX_IDENTITY_K).contains(&k) {
            return Err(invalid(format!("k must be in 1..={MAX_IDENTITY_K}")));
        }
        k
    } else {
        0
    };
    let r = if id.uses_r() {
        let r = params.r.unwrap_or(1);
        if !(1..=3).contains(&r) {
            return Err(invalid("r must be 1, 2 or 3"));
        }
        r
    } else {
        0
    };
    let params = IdentityParams {
        k: id.uses_k().then_some(k),
        r: id.uses_r().then_some(r),
    };

    let comparisons = build(id, k, r, order)?;
    let mut mismatch = None;
    for (label, lhs, rhs) in &comparisons {
        if let Some(e) = lhs.first_mismatch(rhs)? {
            mismatch = Some(Mismatch {
                comparison: label.to_string(),
                first_exponent: e,
                lhs_coeff: lhs.coeff(e).clone(),
                rhs_coeff: rhs.coeff(e).clone(),
            });
            break;
        }
    }
    let mut warnings = Vec::new();
    let min = id.min_degree(k, r);
    if order < min {
        warnings.push(format!("order {order} is below the minimal degree {min} of the k-dependent terms"));
    }
    Ok(IdentityReport {
        identity_id: id,
        parameters: params,
        order,
        outcome: if mismatch.is_none() { Outcome::Pass } else { Outcome::Fail },
        mismatch,
        warnings,
    })
}

type Comparison = (&'static str, Series, Series);

fn build(id: IdentityId, k: usize, r: usize, order: usize) -> Result<Vec<Comparison>> {
    let n = order;
    let out = match id {
        IdentityId::Eq2 => vec![("lhs = rhs", eq2_lhs(k, n)?, eq2_rhs(k, n)?)],
        IdentityId::Eq6 => vec![("lhs = rhs", eq6_lhs(k, n)?, eq6_rhs(k, n)?)],
        IdentityId::Eq7 => vec![("lhs = rhs", eq7_lhs(k, n)?, eq7_rhs(k, n)?)],
        IdentityId::Eq7Rev => {
            let mp = table_mp_k(k, n)?.to_series().scale(-parity_sign(k as u64));
            vec![("lhs = rhs", eq7_lhs(k, n)?, &Series::one(n) + &mp)]
        }
        IdentityId::Th11 => vec![("lhs = rhs", th11_lhs(k, n)?, th11_rhs(k, n)?)],
        IdentityId::Th14 => vec![("lhs = rhs", th14_lhs(k, r, n)?, th14_rhs(k, r, n)?)],
        IdentityId::Lemma21 => vec![("lhs = rhs", lemma21_lhs(k, n), lemma21_rhs(k, n)?)],
        IdentityId::Gauss4 => {
            let lhs = Series::from_terms(n, square_terms(n, 1));
            let mut rhs = Series::pochhammer(&PochSpec::of_q(1, 1), n);
            rhs.div_poch(&PochSpec::of_neg_q(1, 1));
            vec![("lhs = rhs", lhs, rhs)]
        }
        IdentityId::Gauss5 => {
            let lhs = Series::from_terms(
                n,
                (0..).map(triangular).take_while(|&t| t as usize <= n).map(|t| (t as usize, parity_sign(t))),
            );
            let mut rhs = Series::pochhammer(&PochSpec::of_q(2, 2), n);
            rhs.div_poch(&PochSpec::of_neg_q(1, 2));
            vec![("lhs = rhs", lhs, rhs)]
        }
        IdentityId::Aux2 | IdentityId::Aux3 => {
            let s = if id == IdentityId::Aux2 { 2 } else { 3 };
            let mut lhs = Series::pochhammer(&PochSpec::of_neg_q(1, 1), n);
            lhs.mul_poch(&PochSpec::of_q(s, s));
            lhs.div_poch(&PochSpec::of_neg_q(s, s));
            let rhs = Series::from_terms(
                n,
                pentagonal_indices(n).map(|j| {
                    let c = if s == 2 { parity_sign(triangular(j / 2)) } else { 1 };
                    (gen_pentagonal(j) as usize, c)
                }),
            );
            vec![("lhs = rhs", lhs, rhs)]
        }
        IdentityId::Cor31 => cor31(k, n)?,
        IdentityId::Cor32A | IdentityId::Cor32B | IdentityId::Cor32C => cor32(id, k, n)?,
    };
    Ok(out)
}

fn pentagonal_indices(order: usize) -> impl Iterator<Item = u64> {
    (0..).take_while(move |&j| gen_pentagonal(j) as usize <= order)
}

/// `1 + 2 sum_{j>=1} (-1)^j q^{r j^2}` through `order`.
fn square_terms(order: usize, r: usize) -> impl Iterator<Item = (usize, i64)> {
    let tail = (1..)
        .take_while(move |&j| r * j * j <= order)
        .map(move |j| (r * j * j, 2 * parity_sign(j as u64)));
    std::iter::once((0, 1)).chain(tail)
}

fn eq2_lhs(k: usize, n: usize) -> Result<Series> {
    let mut s = theta_truncated(ThetaKind::Pent2k, k, n)?;
    s.div_poch(&PochSpec::of_q(1, 1));
    Ok(s)
}

/// `1 + (-1)^{k-1} sum_{m>=1} q^{C(k,2)+(k+1)m} / (q;q)_m [m-1, k-1]`
fn eq2_rhs(k: usize, n: usize) -> Result<Series> {
    let sum = gaussian_sum(k - 1, 1, n, |m| k * (k - 1) / 2 + (k + 1) * m, |inv, m| inv.div_factor(Sign::Plus, m))?;
    Ok(&Series::one(n) + &sum.scale(parity_sign(k as u64 - 1)))
}

/// `sum_{m>=1} q^{exp(m)} [m-1, kk]_{q^step} * D_m`, where `D_m` starts at 1
/// and `advance(D, m)` turns `D_{m-1}` into `D_m`.
fn gaussian_sum(
    kk: usize,
    step: usize,
    n: usize,
    exp: impl Fn(usize) -> usize,
    mut advance: impl FnMut(&mut Series, usize),
) -> Result<Series> {
    let mut acc = Series::zero(n);
    let mut denom = Series::one(n);
    let mut column = GaussianColumn::new(kk, step, n);
    for m in 1.. {
        let e = exp(m);
        if e > n {
            break;
        }
        advance(&mut denom, m);
        let gauss = column.next().expect("unbounded"); // [m-1, kk]
        if gauss.is_zero() {
            continue;
        }
        acc.add_shifted(&gauss.checked_mul(&denom)?, e)?;
    }
    Ok(acc)
}

fn eq6_lhs(k: usize, n: usize) -> Result<Series> {
    // (-q)^{j^2} = (-1)^j q^{j^2}
    let mut s = theta_truncated(ThetaKind::SQUARE, k, n)?;
    s.mul_poch(&PochSpec::of_neg_q(1, 1));
    s.div_poch(&PochSpec::of_q(1, 1));
    Ok(s)
}

/// `1 + (-1)^k sum_{m>=k+1} (-q;q)_k (-1;q)_{m-k} q^{(k+1)m} / (q;q)_m [m-1, k]`
///
/// The Gaussian binomial is `[m-1, k]`; with `[m-1, k-1]` the identity fails
/// from `q^{(k+1)^2 + 3}` on.
fn eq6_rhs(k: usize, n: usize) -> Result<Series> {
    let mut acc = Series::zero(n);
    let mut inv_qq = Series::one(n); // 1/(q;q)_m
    let mut neg_one = Series::zero(n); // (-1;q)_{m-k} = 2 (-q;q)_{m-k-1}
    let mut column = GaussianColumn::new(k, 1, n); // [m-1, k]
    for m in 1.. {
        let e = (k + 1) * m;
        if e > n {
            break;
        }
        inv_qq.div_factor(Sign::Plus, m);
        let gauss = column.next().expect("unbounded");
        if m < k + 1 {
            continue;
        }
        if m == k + 1 {
            neg_one = Series::monomial(n, 0, 2);
        } else {
            neg_one.mul_factor(Sign::Minus, m - k - 1);
        }
        let term = gauss.checked_mul(&inv_qq)?.checked_mul(&neg_one)?;
        acc.add_shifted(&term, e)?;
    }
    acc.mul_poch(&PochSpec::of_neg_q(1, 1).finite(k));
    Ok(&Series::one(n) + &acc.scale(parity_sign(k as u64)))
}

fn eq7_lhs(k: usize, n: usize) -> Result<Series> {
    let mut s = theta_truncated(ThetaKind::Tri2k, k, n)?;
    s.mul_poch(&PochSpec::of_neg_q(1, 2));
    s.div_poch(&PochSpec::of_q(2, 2));
    Ok(s)
}

/// `1 + (-1)^{k-1} sum_{m>=k} (-q;q^2)_k (-q;q^2)_{m-k} q^{2(k+1)m-k} / (q^2;q^2)_m [m-1, k-1]_{q^2}`
///
/// The remainder sign is `(-1)^{k-1}`, matching the pod(n) inequalities.
fn eq7_rhs(k: usize, n: usize) -> Result<Series> {
    let mut acc = Series::zero(n);
    let mut inv = Series::one(n); // 1/(q^2;q^2)_m
    let mut odd = Series::one(n); // (-q;q^2)_{m-k}
    let mut column = GaussianColumn::new(k - 1, 2, n); // [m-1, k-1]_{q^2}
    for m in 1.. {
        let e = 2 * (k + 1) * m - k;
        if e > n {
            break;
        }
        inv.div_factor(Sign::Plus, 2 * m);
        let gauss = column.next().expect("unbounded");
        if m < k {
            continue;
        }
        if m > k {
            odd.mul_factor(Sign::Minus, 2 * (m - k) - 1);
        }
        let term = gauss.checked_mul(&inv)?.checked_mul(&odd)?;
        acc.add_shifted(&term, e)?;
    }
    acc.mul_poch(&PochSpec::of_neg_q(1, 2).finite(k));
    Ok(&Series::one(n) + &acc.scale(parity_sign(k as u64 - 1)))
}

fn th11_lhs(k: usize, n: usize) -> Result<Series> {
    let terms = (0..2 * k as u64).map(|j| (2 * gen_pentagonal(j) as usize, parity_sign(triangular(j))));
    let mut s = Series::from_terms(n, terms);
    s.mul_poch(&PochSpec::of_neg_q(1, 1));
    Ok(s)
}

/// `F + (-1)^{k-1} F sum_{m>=1} q^{k(k-1)+2(k+1)m} / (q^2;q^2)_m [m-1, k-1]_{q^2}`,
/// `F = (q^2;q^2)_inf / (q;q^2)_inf`
fn th11_rhs(k: usize, n: usize) -> Result<Series> {
    let mut f = Series::pochhammer(&PochSpec::of_q(2, 2), n);
    f.div_poch(&PochSpec::of_q(1, 2));
    let sum = gaussian_sum(k - 1, 2, n, |m| k * (k - 1) + 2 * (k + 1) * m, |inv, m| inv.div_factor(Sign::Plus, 2 * m))?;
    let tail = f.checked_mul(&sum)?.scale(parity_sign(k as u64 - 1));
    Ok(&f + &tail)
}

fn th14_lhs(k: usize, r: usize, n: usize) -> Result<Series> {
    let mut s = theta_truncated(ThetaKind::SquareScaled(r), k, n)?;
    s.mul_poch(&PochSpec::of_neg_q(1, 1));
    Ok(s)
}

/// `(-q;q)(q^r;q^r)/(-q^r;q^r) + 2(-1)^k q^{r(k+1)^2} (q^r;q^{2r})/(q;q^2)
///  * sum_j q^{(2k+2j+3)rj} / ((q^{2r};q^{2r})_j (q^r;q^{2r})_{k+j+1})`
fn th14_rhs(k: usize, r: usize, n: usize) -> Result<Series> {
    let mut first = Series::pochhammer(&PochSpec::of_neg_q(1, 1), n);
    first.mul_poch(&PochSpec::of_q(r, r));
    first.div_poch(&PochSpec::of_neg_q(r, r));

    let mut inner = Series::zero(n);
    let mut term = Series::inverse_pochhammer(&PochSpec::of_q(r, 2 * r).finite(k + 1), n);
    for j in 0.. {
        let e = (2 * k + 2 * j + 3) * r * j;
        if e > n {
            break;
        }
        if j > 0 {
            term.div_factor(Sign::Plus, 2 * r * j);
            term.div_factor(Sign::Plus, r + 2 * r * (k + j));
        }
        inner.add_shifted(&term, e)?;
    }
    inner.mul_poch(&PochSpec::of_q(r, 2 * r));
    inner.div_poch(&PochSpec::of_q(1, 2));
    let second = inner.shift(r * (k + 1) * (k + 1)).scale(2 * parity_sign(k as u64));
    Ok(&first + &second)
}

fn lemma21_lhs(k: usize, n: usize) -> Series {
    let terms = (0..)
        .map(|j: usize| (j * j + 2 * j * (k + 1), parity_sign(j as u64)))
        .take_while(|&(e, _)| e <= n);
    Series::from_terms(n, terms)
}

/// `(q^{2k+3};q^2)_inf sum_j q^{j(2j+2k+3)} / ((q^2;q^2)_j (q^{2k+3};q^2)_j)`
fn lemma21_rhs(k: usize, n: usize) -> Result<Series> {
    let mut inner = Series::zero(n);
    let mut term = Series::one(n);
    for j in 0.. {
        let e = j * (2 * j + 2 * k + 3);
        if e > n {
            break;
        }
        if j > 0 {
            term.div_factor(Sign::Plus, 2 * j);
            term.div_factor(Sign::Plus, 2 * k + 3 + 2 * (j - 1));
        }
        inner.add_shifted(&term, e)?;
    }
    inner.mul_poch(&PochSpec::of_q(2 * k + 3, 2));
    Ok(inner)
}

/// The signed distinct-parts window against the `M_k` convolution,
/// then that convolution against its two re-indexed forms.
fn cor31(k: usize, n: usize) -> Result<Vec<Comparison>> {
    let tables = FamilyTables::from_q(table_q(n));
    let lhs = Series::from_coeffs((0..=n).map(|m| family_value(FamilyId::Cor12, k, m, &tables)).collect());

    let mk = table_m_k(k, n / 2)?;
    let at = |x: i64| -> BigInt {
        if x < 0 {
            BigInt::zero()
        } else {
            mk.get(x).clone()
        }
    };
    let rhs = Series::from_coeffs(
        (0..=n)
            .map(|m| {
                (0..)
                    .map(triangular)
                    .take_while(|&t| t as usize <= m)
                    .filter(|&t| (m as u64 - t) % 2 == 0)
                    .map(|t| at(((m as u64 - t) / 2) as i64))
                    .sum()
            })
            .collect(),
    );

    // n = 2m: sum_{j in Z} M_k(m - j(4j-1)); n = 2m+1: sum_{j in Z} M_k(m - j(4j-3))
    let bilateral = |m: i64, c: i64| -> BigInt {
        let mut acc = BigInt::zero();
        for j in -(n as i64)..=(n as i64) {
            let off = j * (4 * j - c);
            if off <= m {
                acc += at(m - off);
            }
        }
        acc
    };
    let reindexed = Series::from_coeffs(
        (0..=n as i64)
            .map(|m| if m % 2 == 0 { bilateral(m / 2, 1) } else { bilateral(m / 2, 3) })
            .collect(),
    );
    Ok(vec![("signed sum = M_k convolution", lhs, rhs.clone()), ("M_k convolution = re-indexed form", rhs, reindexed)])
}

/// The square-window expressions for `Q(n)` against their `M_{o,k}` forms.
fn cor32(id: IdentityId, k: usize, n: usize) -> Result<Vec<Comparison>> {
    let (family, r) = match id {
        IdentityId::Cor32A => (FamilyId::Cor15A, 1),
        IdentityId::Cor32B => (FamilyId::Cor15B, 2),
        _ => (FamilyId::Cor15C, 3),
    };
    let tables = FamilyTables::from_q(table_q(n));
    let lhs = Series::from_coeffs((0..=n).map(|m| family_value(family, k, m, &tables)).collect());
    let mok = table_m_ok(k, n)?;
    let rhs = if r == 1 {
        mok.to_series().scale(2)
    } else {
        let qr = table_q_r(r, n)?;
        Series::from_coeffs(
            (0..=n)
                .map(|m| {
                    let conv: BigInt = (0..=m / r).map(|j| mok.get(j as i64) * qr.get((m - r * j) as i64)).sum();
                    conv * 2
                })
                .collect(),
        )
    };
    Ok(vec![("lhs = rhs", lhs, rhs)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_identity_passes_small() {
        for &id in IdentityId::ALL {
            for k in 1..=3 {
                for r in 1..=3 {
                    if r > 1 && !id.uses_r() {
                        continue;
                    }
                    let rep = verify_identity(id, IdentityParams::kr(k, r), 120).unwrap();
                    assert!(rep.passed(), "{id} k={k} r={r}: {:?}", rep.mismatch);
                }
            }
        }
    }

    #[test]
    fn printed_eq6_binomial_fails() {
        // The [m-1, k-1] variant disagrees at q^7 for k = 1.
        let n = 30;
        let k = 1;
        let mut acc = Series::zero(n);
        let mut inv_qq = Series::one(n);
        let mut neg_one = Series::zero(n);
        let mut column = GaussianColumn::new(k - 1, 1, n);
        for m in 1..=n / (k + 1) {
            inv_qq.div_factor(Sign::Plus, m);
            let gauss = column.next().unwrap();
            if m < k + 1 {
                continue;
            }
            if m == k + 1 {
                neg_one = Series::monomial(n, 0, 2);
            } else {
                neg_one.mul_factor(Sign::Minus, m - k - 1);
            }
            acc.add_shifted(&(&(&gauss * &inv_qq) * &neg_one), (k + 1) * m).unwrap();
        }
        acc.mul_poch(&PochSpec::of_neg_q(1, 1).finite(k));
        let rhs = &Series::one(n) + &acc.scale(-1);
        assert_eq!(eq6_lhs(k, n).unwrap().first_mismatch(&rhs).unwrap(), Some(7));
    }

    #[test]
    fn warns_on_tiny_order() {
        let rep = verify_identity(IdentityId::Th14, IdentityParams::kr(3, 3), 20).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.warnings.len(), 1);
    }

    #[test]
    fn parameter_validation() {
        assert!(verify_identity(IdentityId::Eq2, IdentityParams::none(), 50).is_err());
        assert!(verify_identity(IdentityId::Eq2, IdentityParams::k(9), 50).is_err());
        assert!(verify_identity(IdentityId::Th14, IdentityParams::kr(1, 4), 50).is_err());
        assert!(verify_identity(IdentityId::Gauss4, IdentityParams::none(), 2001).is_err());
        let rep = verify_identity(IdentityId::Gauss4, IdentityParams::k(3), 50).unwrap();
        assert_eq!(rep.parameters, IdentityParams::none());
    }
}
