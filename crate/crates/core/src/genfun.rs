//! Closed-form generating functions for the gap classes, the two counting
//! functions behind the reciprocal matrices, and the series identities that
//! tie them together.
//!
//! For a class `(g, s)` the partition series is
//!
//! ```text
//! P(x, q)      = sum_{l >= 0} x^l q^{l*s + C(l,2)*g} / (q;q)_l
//! P_{<=m}(x,q) = 1 + sum_{l >= 1} x^l q^{l*s + C(l,2)*g} * [m-s+1-(l-1)(g-1), l]_q
//! ```
//!
//! where `P_{<=m}` restricts the largest part to `m`. The composition series
//! are their reciprocals:
//!
//! ```text
//! C(x, q)      = 1 / P(-x, q)
//! C_{>=m}(x,q) = P_{<=m-1}(-x, q) / P(-x, q)
//! ```
//!
//! with `C_{>=m}` restricting the first part to at least `m`. The counting
//! function `K(n, m)` counts m-step compositions of `n` in the class (every
//! part at most `m` plus the sum of the parts before it), computed by
//! dynamic programming; `M(n, m)` is the signed count, by `(-1)^{len+1}`, of
//! class partitions of `n` whose largest part is `m`, computed from the
//! bounded series as `[q^n] q^m P_{<=m-g}(-1, q)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::enumerate::GapClass;
use crate::qseries::{qpochhammer, GaussianTable, TruncatedSeries, XQSeries};

/// Errors from the series builders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenfunError {
    /// The requested family needs the bound parameter `m`.
    #[error("this series family requires the bound parameter m")]
    MissingBound,
    /// The first-part bound of the restricted composition series starts at 1.
    #[error("the first-part bound m must be at least 1")]
    BoundTooSmall,
}

/// Parameters for a series build: the gap class, the truncation orders, and
/// the optional bound `m` used by the restricted families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesRequest {
    pub cls: GapClass,
    pub x_order: usize,
    pub q_order: usize,
    pub m: Option<u64>,
}

impl SeriesRequest {
    pub fn new(cls: GapClass, x_order: usize, q_order: usize) -> Self {
        Self {
            cls,
            x_order,
            q_order,
            m: None,
        }
    }

    pub fn with_bound(mut self, m: u64) -> Self {
        self.m = Some(m);
        self
    }
}

/// Smallest possible size of a class partition with `l` parts.
fn min_partition_size(cls: GapClass, l: usize) -> u128 {
    let l = l as u128;
    l * cls.s() as u128 + l * (l.saturating_sub(1)) / 2 * cls.g() as u128
}

/// Largest partition length that can still contribute at or below `q_order`.
pub fn partition_layer_cutoff(cls: GapClass, q_order: usize) -> usize {
    let mut l = 0;
    while min_partition_size(cls, l + 1) <= q_order as u128 {
        l += 1;
    }
    l
}

/// Largest composition length that can still contribute at or below
/// `q_order`: every part is at least `s`.
pub fn composition_layer_cutoff(cls: GapClass, q_order: usize) -> usize {
    q_order / cls.s() as usize
}

/// The partition series `P(x, q)` truncated at the requested orders: the
/// coefficient of `x^l q^n` counts class partitions of `n` with `l` parts.
pub fn series_p(req: &SeriesRequest) -> XQSeries {
    let n = req.q_order;
    let mut layers = Vec::with_capacity(req.x_order + 1);
    layers.push(TruncatedSeries::one(n));
    for l in 1..=req.x_order {
        let e = min_partition_size(req.cls, l);
        if e > n as u128 {
            layers.push(TruncatedSeries::zero(n));
            continue;
        }
        let layer = qpochhammer(l as u64, n)
            .invert()
            .expect("(q;q)_l has constant term 1")
            .shift(e as usize);
        layers.push(layer);
    }
    XQSeries::from_layers(layers)
}

/// The Gaussian binomial top argument for the `x^l` layer of the bounded
/// partition series `P_{<=bound}`.
fn gaussian_top(cls: GapClass, bound: i64, l: usize) -> i64 {
    bound - cls.s() as i64 + 1 - (l as i64 - 1) * (cls.g() as i64 - 1)
}

/// Builds `P_{<=bound}(x, q)` layers against a caller-supplied table.
fn bounded_layers(
    cls: GapClass,
    bound: i64,
    x_order: usize,
    q_order: usize,
    table: &GaussianTable,
) -> Vec<TruncatedSeries> {
    let mut layers = Vec::with_capacity(x_order + 1);
    layers.push(TruncatedSeries::one(q_order));
    for l in 1..=x_order {
        let e = min_partition_size(cls, l);
        if e > q_order as u128 {
            layers.push(TruncatedSeries::zero(q_order));
            continue;
        }
        let gb = table.get(gaussian_top(cls, bound, l), l as i64);
        if gb.is_zero() {
            layers.push(TruncatedSeries::zero(q_order));
            continue;
        }
        let padded = if gb.order() >= q_order {
            gb.truncate_to(q_order)
        } else {
            let mut coeffs = gb.coeffs().to_vec();
            coeffs.resize(q_order + 1, BigInt::zero());
            TruncatedSeries::from_coeffs(coeffs)
        };
        layers.push(padded.shift(e as usize));
    }
    layers
}

fn bounded_table(cls: GapClass, bound: i64, x_order: usize, q_order: usize) -> GaussianTable {
    let a_max = (1..=x_order.max(1))
        .map(|l| gaussian_top(cls, bound, l))
        .max()
        .unwrap_or(0)
        .max(0) as usize;
    GaussianTable::truncated(a_max, x_order.max(1), q_order)
}

/// The bounded partition series `P_{<=m}(x, q)`: largest part at most `m`.
///
/// Each layer is a single Gaussian binomial shifted by the minimum size of
/// an `l`-part class partition; the binomial's zero contract truncates the
/// layer sum on its own.
pub fn series_p_le_m(req: &SeriesRequest) -> Result<XQSeries, GenfunError> {
    let m = req.m.ok_or(GenfunError::MissingBound)?;
    let table = bounded_table(req.cls, m as i64, req.x_order, req.q_order);
    Ok(XQSeries::from_layers(bounded_layers(
        req.cls,
        m as i64,
        req.x_order,
        req.q_order,
        &table,
    )))
}

/// The composition series `C(x, q) = 1 / P(-x, q)`: the coefficient of
/// `x^l q^n` counts class compositions of `n` with `l` parts.
pub fn series_c(req: &SeriesRequest) -> XQSeries {
    series_p(req)
        .negate_x()
        .invert()
        .expect("P(-x, q) has constant term 1")
}

/// The restricted composition series `C_{>=m}(x, q)` (first part at least
/// `m`), computed as `P_{<=m-1}(-x, q) / P(-x, q)`. Requires `m >= 1`.
pub fn series_c_ge_m(req: &SeriesRequest) -> Result<XQSeries, GenfunError> {
    let m = req.m.ok_or(GenfunError::MissingBound)?;
    if m < 1 {
        return Err(GenfunError::BoundTooSmall);
    }
    let numerator = series_p_le_m(&req.with_bound(m - 1))?.negate_x();
    let denominator = series_p(req).negate_x();
    Ok(numerator.mul(&denominator.invert().expect("P(-x, q) has constant term 1")))
}

/// `P(x0, q)` up to `q_order`, with every contributing length included.
pub fn series_p_at(cls: GapClass, x0: i64, q_order: usize) -> TruncatedSeries {
    let req = SeriesRequest::new(cls, partition_layer_cutoff(cls, q_order), q_order);
    series_p(&req).eval_x(x0)
}

/// `P_{<=bound}(x0, q)` up to `q_order`. A bound below `s` (negative bounds
/// included) leaves only the empty partition, so the series is 1.
pub fn bounded_series_p_at(cls: GapClass, bound: i64, x0: i64, q_order: usize) -> TruncatedSeries {
    if bound < cls.s() as i64 {
        return TruncatedSeries::one(q_order);
    }
    let x_order = partition_layer_cutoff(cls, q_order);
    let table = bounded_table(cls, bound, x_order, q_order);
    XQSeries::from_layers(bounded_layers(cls, bound, x_order, q_order, &table)).eval_x(x0)
}

/// `C(x0, q)` up to `q_order`, via `1 / P(-x0, q)`: substituting before
/// inverting agrees with inverting the bivariate series because integer
/// substitution is a ring homomorphism.
pub fn series_c_at(cls: GapClass, x0: i64, q_order: usize) -> TruncatedSeries {
    series_p_at(cls, -x0, q_order)
        .invert()
        .expect("P(-x0, q) has constant term 1")
}

/// The m-step composition counts `K(n, m)` for every `n <= n_max` in one
/// dynamic-programming pass.
///
/// The DP state is (partial sum, last part); a next part `w` is admissible
/// iff `w >= s`, `w >= last - (g-1)` and `w <= m + partial_sum`. `n = 0`
/// counts the empty composition.
pub fn m_step_counts_upto(cls: GapClass, m: u64, n_max: usize) -> Vec<BigInt> {
    // ways[sigma][v]: m-step class prefixes with sum sigma and last part v.
    let mut ways: Vec<Vec<BigInt>> = (0..=n_max)
        .map(|sigma| vec![BigInt::zero(); sigma + 1])
        .collect();
    let first_hi = m.min(n_max as u64);
    let mut w = cls.s();
    while w <= first_hi {
        ways[w as usize][w as usize] = BigInt::one();
        w += 1;
    }
    for sigma in 1..=n_max {
        // Transitions only ever reach strictly larger partial sums, so the
        // current row can be read while the later rows are written.
        let (done, todo) = ways.split_at_mut(sigma + 1);
        let row = &done[sigma];
        for (v, count) in row.iter().enumerate().skip(1) {
            if count.is_zero() {
                continue;
            }
            let lo = cls.composition_lower_bound(Some(v as u64));
            let hi = ((n_max - sigma) as u64).min(m.saturating_add(sigma as u64));
            let mut w = lo;
            while w <= hi {
                todo[w as usize - 1][w as usize] += count;
                w += 1;
            }
        }
    }
    let mut totals = vec![BigInt::zero(); n_max + 1];
    totals[0] = BigInt::one();
    for (total, row) in totals.iter_mut().zip(&ways).skip(1) {
        *total = row.iter().sum();
    }
    totals
}

/// `K(n, m)`: the number of m-step compositions of `n` in the class.
/// Negative `n` counts nothing.
pub fn m_step_count(n: i64, m: u64, cls: GapClass) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    m_step_counts_upto(cls, m, n as usize).pop().unwrap()
}

/// The signed-count series `sum_n M(n, m) q^n` for a fixed largest part `m`:
/// zero when `m < s`, otherwise `q^m * P_{<=m-g}(-1, q)`. Dropping the
/// largest part of a qualifying partition leaves a class partition with
/// largest part at most `m - g`, and the `(-1)^{len+1}` sign of the whole
/// partition is exactly the `(-1)^len` weight of the remainder.
pub fn signed_count_series(cls: GapClass, m: u64, q_order: usize) -> TruncatedSeries {
    if m < cls.s() {
        return TruncatedSeries::zero(q_order);
    }
    let bound = m as i64 - cls.g() as i64;
    bounded_series_p_at(cls, bound, -1, q_order).shift(m as usize)
}

/// `M(n, m)`: the signed count, by `(-1)^{len+1}`, of class partitions of
/// `n` with largest part `m`. Zero when nothing qualifies.
pub fn signed_count(n: u64, m: u64, cls: GapClass) -> BigInt {
    if m > n {
        return BigInt::zero();
    }
    signed_count_series(cls, m, n as usize)
        .coeff(n as usize)
        .clone()
}

/// A failed degree in a series identity that should have been 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepIdentityFailure {
    pub degree: usize,
    pub value: BigInt,
}

/// Checks `sum_{n=0..N} K(n, m) q^n P_{<=n+m}(-1, q) = 1` through `q^N`.
///
/// Returns the first failing degree, or `None` when the identity holds. The
/// Gaussian table is sized once for the largest bound `N + m` the sum
/// reaches.
pub fn verify_step_identity(cls: GapClass, m: u64, q_order: usize) -> Option<StepIdentityFailure> {
    debug_assert!(m >= 1);
    let x_order = partition_layer_cutoff(cls, q_order);
    let a_max = (0..=q_order)
        .flat_map(|n| (1..=x_order.max(1)).map(move |l| (n, l)))
        .map(|(n, l)| gaussian_top(cls, (n as u64 + m) as i64, l))
        .max()
        .unwrap_or(0)
        .max(0) as usize;
    let table = GaussianTable::truncated(a_max, x_order.max(1), q_order);
    let counts = m_step_counts_upto(cls, m, q_order);
    let mut acc = TruncatedSeries::zero(q_order);
    for (n, count) in counts.iter().enumerate() {
        if count.is_zero() {
            continue;
        }
        let bound = (n as u64 + m) as i64;
        let layers = bounded_layers(cls, bound, x_order, q_order, &table);
        let at_minus_one = XQSeries::from_layers(layers).eval_x(-1);
        acc = acc.add(&at_minus_one.scale(count).shift(n));
    }
    let one = TruncatedSeries::one(q_order);
    acc.first_difference(&one)
        .map(|degree| StepIdentityFailure {
            degree,
            value: acc.coeff(degree).clone(),
        })
}

/// A failed coefficient in the quotient identity for the restricted
/// composition series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioIdentityFailure {
    pub x_power: usize,
    pub degree: usize,
    pub got: BigInt,
    pub expected: BigInt,
}

/// Checks `P(-x, q) * C_{>=m}(x, q) = P_{<=m-1}(-x, q)` at the given
/// truncation. Requires `m >= 1`.
pub fn verify_ratio_identity(
    cls: GapClass,
    m: u64,
    x_order: usize,
    q_order: usize,
) -> Option<RatioIdentityFailure> {
    debug_assert!(m >= 1);
    let req = SeriesRequest::new(cls, x_order, q_order);
    let lhs = series_p(&req)
        .negate_x()
        .mul(&series_c_ge_m(&req.with_bound(m)).expect("bound present and positive"));
    let rhs = series_p_le_m(&req.with_bound(m - 1))
        .expect("bound present")
        .negate_x();
    lhs.first_difference(&rhs)
        .map(|(x_power, degree)| RatioIdentityFailure {
            x_power,
            degree,
            got: lhs.coeff(x_power, degree).clone(),
            expected: rhs.coeff(x_power, degree).clone(),
        })
}

/// Checks the alternating bounded sum against the finite Pochhammer product:
/// `P_{<=m}(-1, q)` for the class `(1, 1)` equals `(q;q)_m`. Returns the
/// first failing degree.
pub fn verify_euler_pochhammer(m: u64, q_order: usize) -> Option<usize> {
    let lhs = bounded_series_p_at(GapClass::new(1, 1), m as i64, -1, q_order);
    lhs.first_difference(&qpochhammer(m, q_order))
}

/// Checks the companion evaluation for the class `(0, 1)`:
/// `P_{<=m}(-1, q) * prod_{k<=m} (1 + q^k) = 1`. Returns the first failing
/// degree.
pub fn verify_euler_inverse(m: u64, q_order: usize) -> Option<usize> {
    let lhs = bounded_series_p_at(GapClass::new(0, 1), m as i64, -1, q_order);
    let product = lhs.mul(&crate::qseries::neg_qpochhammer(m, q_order));
    product.first_difference(&TruncatedSeries::one(q_order))
}
