//! Strategies and property bodies shared by the proptest suite and the
//! acceptance runner.
#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;
use qtheta::figurate::{gen_pentagonal, triangular};
use qtheta::series::{gaussian_binomial, parity_sign};
use qtheta::{PochSpec, Series};

pub const CASES: u32 = 1000;

fn coeffs(order: usize) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-1000i64..=1000, order + 1)
}

/// Three series sharing one random order.
pub fn triple() -> impl Strategy<Value = (Series, Series, Series)> {
    (0usize..24).prop_flat_map(|n| (coeffs(n), coeffs(n), coeffs(n))).prop_map(|(a, b, c)| {
        (Series::from_i64s(&a), Series::from_i64s(&b), Series::from_i64s(&c))
    })
}

/// A series with constant term `+-1`.
pub fn unit() -> impl Strategy<Value = Series> {
    ((0usize..30).prop_flat_map(coeffs), any::<bool>()).prop_map(|(mut c, neg)| {
        c[0] = if neg { -1 } else { 1 };
        Series::from_i64s(&c)
    })
}

pub fn ring_axioms((a, b, c): (Series, Series, Series)) -> Result<(), TestCaseError> {
    let n = a.order();
    let zero = Series::zero(n);
    let one = Series::one(n);
    prop_assert_eq!(&a + &b, &b + &a);
    prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    prop_assert_eq!(&a + &zero, a.clone());
    prop_assert_eq!(&a + &(-&a), zero.clone());
    prop_assert_eq!(&a * &b, &b * &a);
    prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    prop_assert_eq!(&a * &one, a.clone());
    prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    prop_assert_eq!(&a - &b, &a + &(-&b));
    Ok(())
}

pub fn invert_roundtrip(a: Series) -> Result<(), TestCaseError> {
    let inv = a.invert().unwrap();
    prop_assert_eq!(&a * &inv, Series::one(a.order()));
    prop_assert_eq!(inv.invert().unwrap(), a);
    Ok(())
}

/// `(q;q)_inf` is `sum_j (-1)^{T_j} q^{G_j}`: support on the generalized
/// pentagonal numbers only, every coefficient a sign.
pub fn pentagonal_support(order: usize) -> Result<(), TestCaseError> {
    let euler = Series::pochhammer(&PochSpec::of_q(1, 1), order);
    let mut expected = vec![BigInt::from(0); order + 1];
    for j in (0..).take_while(|&j| gen_pentagonal(j) as usize <= order) {
        expected[gen_pentagonal(j) as usize] = parity_sign(triangular(j)).into();
    }
    prop_assert_eq!(euler.coeffs(), &expected[..]);
    Ok(())
}

fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

/// `[n, k] = [n, n-k]`, the coefficients are palindromic of degree
/// `step k (n-k)`, and they sum to `C(n, k)`.
pub fn gaussian_symmetry(n: i64, k: i64, step: usize) -> Result<(), TestCaseError> {
    let deg = step * (k * (n - k)) as usize;
    let order = deg + 3;
    let g = gaussian_binomial(n, k, step, order);
    prop_assert_eq!(&g, &gaussian_binomial(n, n - k, step, order));
    for e in 0..=deg {
        prop_assert_eq!(g.coeff(e), g.coeff(deg - e));
    }
    prop_assert!(g.coeffs()[deg + 1..].iter().all(|c| *c == BigInt::from(0)));
    let total: BigInt = g.coeffs().iter().sum();
    prop_assert_eq!(total, binomial(n as u64, k as u64));
    Ok(())
}

pub fn gaussian_args() -> impl Strategy<Value = (i64, i64, usize)> {
    (0i64..=18).prop_flat_map(|n| (Just(n), 0..=n, 1usize..=3))
}
