//! Truncated formal power series in `q` with exact big-integer coefficients.
//!
//! A [`Series`] of order `N` stores the coefficients of `q^0 ..= q^N`. Every
//! binary operation requires equal orders and returns a series of the same
//! order whose coefficients are exact through `q^N`.
//!
//! # Truncating infinite products
//!
//! A q-Pochhammer factor `(1 - a q^e)` with `e > N` is congruent to `1` modulo
//! `q^(N+1)`, and so is its inverse. Multiplying or dividing by such a factor
//! therefore leaves every coefficient through `q^N` unchanged. An infinite
//! product `(a; q^s)_inf` is evaluated by keeping only the factors whose lowest
//! exponent is at most `N`. The result is exact, not an approximation.
//!
//! # Sign convention for [`PochSpec`]
//!
//! `PochSpec` stores the sign of `a` itself: `(a; q^s)_n` with `a = sign * q^c`
//! is the product of `(1 - sign * q^(c + s*j))`. So `(q; q)_inf` has sign `+`
//! and factors `(1 - q^j)`, while `(-q; q)_inf` has sign `-` and factors
//! `(1 + q^j)`. Use [`PochSpec::of_q`] and [`PochSpec::of_neg_q`] rather than
//! spelling out the sign.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{invalid, Error, Result};
use crate::figurate::{gen_pentagonal, triangular};
use crate::par::{self, Mode};

/// Products above this order use the parallel path when the mode allows it.
pub const PARALLEL_MUL_THRESHOLD: usize = 384;

/// Truncated power series, coefficients of `q^0 ..= q^order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![BigInt::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, 1)
    }

    /// `c * q^exp`, or the zero series if `exp > order`.
    pub fn monomial(order: usize, exp: usize, c: impl Into<BigInt>) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = c.into();
        }
        s
    }

    /// Builds a series from coefficients; the order is `coeffs.len() - 1`.
    ///
    /// Panics on an empty vector.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the q^0 coefficient");
        Series { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `sum_t coeff_t * q^exp_t`, ignoring terms above `order`.
    pub fn from_terms<I>(order: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, i64)>,
    {
        let mut s = Self::zero(order);
        for (e, c) in terms {
            if e <= order {
                s.coeffs[e] += c;
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Exponents of the nonzero coefficients, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i)
    }

    /// Lowest exponent at which `self` and `other` differ.
    pub fn first_mismatch(&self, other: &Series) -> Result<Option<usize>> {
        self.check_order(other)?;
        Ok(self.coeffs.iter().zip(&other.coeffs).position(|(a, b)| a != b))
    }

    /// Same coefficients, cut or zero-padded to a new order.
    pub fn with_order(&self, order: usize) -> Series {
        let mut coeffs: Vec<BigInt> = self.coeffs.iter().take(order + 1).cloned().collect();
        coeffs.resize(order + 1, BigInt::zero());
        Series { coeffs }
    }

    fn check_order(&self, other: &Series) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Series) -> Result<Series> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Series { coeffs })
    }

    pub fn checked_sub(&self, other: &Series) -> Result<Series> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Series { coeffs })
    }

    pub fn negate(&self) -> Series {
        Series { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> Series {
        let k = k.into();
        Series { coeffs: self.coeffs.iter().map(|c| c * &k).collect() }
    }

    /// In-place `self += other * q^exp`.
    pub fn add_shifted(&mut self, other: &Series, exp: usize) -> Result<()> {
        self.check_order(other)?;
        let n = self.order();
        if exp > n {
            return Ok(());
        }
        for (dst, src) in self.coeffs[exp..].iter_mut().zip(&other.coeffs) {
            if !src.is_zero() {
                *dst += src;
            }
        }
        Ok(())
    }

    /// Truncated Cauchy product, parallel for large orders when enabled.
    pub fn checked_mul(&self, other: &Series) -> Result<Series> {
        let mode = if self.order() >= PARALLEL_MUL_THRESHOLD { Mode::Parallel } else { Mode::Sequential };
        self.mul_with(other, mode)
    }

    /// Schoolbook truncated product in the given execution mode.
    pub fn mul_with(&self, other: &Series, mode: Mode) -> Result<Series> {
        self.check_order(other)?;
        let n = self.order();
        if mode.is_parallel() {
            let (a, b) = (&self.coeffs, &other.coeffs);
            let coeffs = par::map_range(mode, n + 1, |m| {
                let mut acc = BigInt::zero();
                for i in 0..=m {
                    if !a[i].is_zero() && !b[m - i].is_zero() {
                        acc += &a[i] * &b[m - i];
                    }
                }
                acc
            });
            return Ok(Series { coeffs });
        }
        // Iterate over the sparser operand in the outer loop.
        let (sparse, dense) = if self.nonzero_count() <= other.nonzero_count() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = Series::zero(n);
        for (i, a) in sparse.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (dst, b) in out.coeffs[i..].iter_mut().zip(&dense.coeffs) {
                if !b.is_zero() {
                    *dst += a * b;
                }
            }
        }
        Ok(out)
    }

    fn nonzero_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Multiplication by `q^m`; terms pushed past the order are dropped.
    pub fn shift(&self, m: usize) -> Series {
        let n = self.order();
        let mut out = Series::zero(n);
        if m <= n {
            out.coeffs[m..].clone_from_slice(&self.coeffs[..=n - m]);
        }
        out
    }

    /// Multiplicative inverse; the constant term must be `1` or `-1`.
    ///
    /// Uses `b_n = -(1/a_0) * sum_{i=1..n} a_i b_{n-i}`.
    pub fn invert(&self) -> Result<Series> {
        let a0 = &self.coeffs[0];
        if !a0.abs().is_one() {
            return Err(Error::NonInvertible);
        }
        let n = self.order();
        let mut b = Series::zero(n);
        b.coeffs[0] = a0.clone();
        for m in 1..=n {
            let mut acc = BigInt::zero();
            for i in 1..=m {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &b.coeffs[m - i];
                }
            }
            // 1/a0 == a0 for a unit
            b.coeffs[m] = -(acc * a0);
        }
        Ok(b)
    }

    /// Multiplies in place by `(1 - sign * q^exp)`, `exp >= 1`.
    pub fn mul_factor(&mut self, sign: Sign, exp: usize) {
        assert!(exp >= 1, "factor exponent must be positive");
        let n = self.order();
        for m in (exp..=n).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(m);
            let src = &lo[m - exp];
            if src.is_zero() {
                continue;
            }
            match sign {
                Sign::Plus => hi[0] -= src,
                Sign::Minus => hi[0] += src,
            }
        }
    }

    /// Divides in place by `(1 - sign * q^exp)`, `exp >= 1`.
    pub fn div_factor(&mut self, sign: Sign, exp: usize) {
        assert!(exp >= 1, "factor exponent must be positive");
        let n = self.order();
        for m in exp..=n {
            let (lo, hi) = self.coeffs.split_at_mut(m);
            let src = &lo[m - exp];
            if src.is_zero() {
                continue;
            }
            match sign {
                Sign::Plus => hi[0] += src,
                Sign::Minus => hi[0] -= src,
            }
        }
    }

    /// Multiplies in place by the product described by `spec`.
    pub fn mul_poch(&mut self, spec: &PochSpec) {
        for e in spec.exponents(self.order()) {
            self.mul_factor(spec.sign, e);
        }
    }

    /// Divides in place by the product described by `spec`.
    pub fn div_poch(&mut self, spec: &PochSpec) {
        for e in spec.exponents(self.order()) {
            self.div_factor(spec.sign, e);
        }
    }

    /// `(a; q^step)_length` truncated at `order`.
    pub fn pochhammer(spec: &PochSpec, order: usize) -> Series {
        let mut s = Series::one(order);
        s.mul_poch(spec);
        s
    }

    /// `1 / (a; q^step)_length` truncated at `order`.
    pub fn inverse_pochhammer(spec: &PochSpec, order: usize) -> Series {
        let mut s = Series::one(order);
        s.div_poch(spec);
        s
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series(order={}, {})", self.order(), self)
    }
}

/// Sparse text form, e.g. `1 - q - q^2 + q^5`.
impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}·q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}·q^{e}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for Series {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Series", 2)?;
        st.serialize_field("order", &self.order())?;
        st.serialize_field("coeffs", &crate::bigjson::Numbers(&self.coeffs))?;
        st.end()
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Series> for &Series {
            type Output = Series;
            fn $method(self, rhs: &Series) -> Series {
                self.$checked(rhs).expect("series operands must share an order")
            }
        }
        impl $tr<Series> for Series {
            type Output = Series;
            fn $method(self, rhs: Series) -> Series {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.negate()
    }
}

impl Neg for Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.negate()
    }
}

/// Sign of `a` in `(a; q^s)_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    /// `a = q^c`, factors `(1 - q^e)`.
    Plus,
    /// `a = -q^c`, factors `(1 + q^e)`.
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Length {
    Finite(usize),
    Infinite,
}

/// Description of `(sign * q^offset; q^step)_length`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PochSpec {
    pub sign: Sign,
    pub offset: usize,
    pub step: usize,
    pub length: Length,
}

impl PochSpec {
    /// `(sign * q^offset; q^step)_inf`. Panics unless `offset, step >= 1`.
    pub fn new(sign: Sign, offset: usize, step: usize) -> Self {
        assert!(offset >= 1 && step >= 1, "PochSpec needs offset >= 1 and step >= 1");
        PochSpec { sign, offset, step, length: Length::Infinite }
    }

    /// `(q^offset; q^step)_inf`
    pub fn of_q(offset: usize, step: usize) -> Self {
        Self::new(Sign::Plus, offset, step)
    }

    /// `(-q^offset; q^step)_inf`
    pub fn of_neg_q(offset: usize, step: usize) -> Self {
        Self::new(Sign::Minus, offset, step)
    }

    /// Restricts to the first `n` factors.
    pub fn finite(mut self, n: usize) -> Self {
        self.length = Length::Finite(n);
        self
    }

    /// Exponents of the factors that can affect coefficients through `order`.
    pub fn exponents(&self, order: usize) -> impl Iterator<Item = usize> {
        let count = match self.length {
            Length::Finite(n) => n,
            Length::Infinite => usize::MAX,
        };
        let (offset, step) = (self.offset, self.step);
        (0..count).map(move |j| offset + step * j).take_while(move |&e| e <= order)
    }
}

/// Gaussian binomial `[n, k]` in base `q^step`, via the q-Pascal rule
/// `[n, k] = [n-1, k-1] + q^(step*k) [n-1, k]`. Zero when `k < 0` or `k > n`.
pub fn gaussian_binomial(n: i64, k: i64, step: usize, order: usize) -> Series {
    if k < 0 || n < 0 || k > n {
        return Series::zero(order);
    }
    let mut column = GaussianColumn::new(k as usize, step, order);
    column.nth(n as usize).expect("column iterator is unbounded")
}

/// Yields `[m, k]_{q^step}` for `m = 0, 1, 2, ...`, one q-Pascal row at a time.
#[derive(Debug, Clone)]
pub struct GaussianColumn {
    step: usize,
    row: Vec<Series>,
    started: bool,
}

impl GaussianColumn {
    pub fn new(k: usize, step: usize, order: usize) -> Self {
        let mut row = vec![Series::zero(order); k + 1];
        row[0] = Series::one(order);
        GaussianColumn { step, row, started: false }
    }
}

impl Iterator for GaussianColumn {
    type Item = Series;

    fn next(&mut self) -> Option<Series> {
        if self.started {
            for j in (1..self.row.len()).rev() {
                let mut next = self.row[j - 1].clone();
                next.add_shifted(&self.row[j], self.step * j).expect("same order");
                self.row[j] = next;
            }
        }
        self.started = true;
        self.row.last().cloned()
    }
}

/// The truncated theta sums of the identity catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaKind {
    /// `sum_{n=0}^{2k-1} (-1)^{T_n} q^{G_n}`
    Pent2k,
    /// `sum_{j=0}^{2k-1} (-q)^{T_j}`
    Tri2k,
    /// `1 + 2 sum_{j=1}^{k} (-1)^j q^{r j^2}`
    SquareScaled(usize),
}

impl ThetaKind {
    pub const SQUARE: ThetaKind = ThetaKind::SquareScaled(1);
}

pub fn theta_truncated(kind: ThetaKind, k: usize, order: usize) -> Result<Series> {
    if k < 1 {
        return Err(invalid("truncated theta sums need k >= 1"));
    }
    let s = match kind {
        ThetaKind::Pent2k => Series::from_terms(
            order,
            (0..2 * k as u64).map(|n| (gen_pentagonal(n) as usize, parity_sign(triangular(n)))),
        ),
        ThetaKind::Tri2k => Series::from_terms(
            order,
            (0..2 * k as u64).map(|n| (triangular(n) as usize, parity_sign(triangular(n)))),
        ),
        ThetaKind::SquareScaled(r) => {
            if r < 1 {
                return Err(invalid("square theta scale r must be >= 1"));
            }
            let tail = (1..=k).map(|j| (r * j * j, 2 * parity_sign(j as u64)));
            Series::from_terms(order, std::iter::once((0, 1)).chain(tail))
        }
    };
    Ok(s)
}

/// `(-1)^e`
pub fn parity_sign(e: u64) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}
