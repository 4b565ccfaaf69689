//! Gaussian (q-)binomial coefficients as exact integer polynomials.
//!
//! `[A, B]_q` is the polynomial counting partitions that fit inside a
//! `B x (A-B)` box. Out of range (`B < 0` or `B > A`) it is 0. Everything
//! here stays in integer arithmetic by building the Pascal-style recurrence
//! `[A,B] = [A-1,B-1] + q^B [A-1,B]` instead of dividing Pochhammer symbols.

use num_bigint::BigInt;
use num_traits::Zero;

use super::truncated::TruncatedSeries;

/// A memoized triangle of Gaussian binomials, filled bottom-up.
///
/// The table covers `0 <= A <= a_max` and `0 <= B <= min(A, b_max)`. In
/// exact mode each entry is a polynomial of degree `B(A-B)`; a truncated
/// table caps every entry at a common q-order instead, which is all the
/// series builders ever need and keeps large-`A` tables small. The table is
/// immutable once built, so sharing it across threads is safe.
#[derive(Debug, Clone)]
pub struct GaussianTable {
    a_max: usize,
    b_max: usize,
    rows: Vec<Vec<TruncatedSeries>>,
}

impl GaussianTable {
    /// Builds the full triangle with exact polynomial entries.
    pub fn exact(a_max: usize, b_max: usize) -> Self {
        Self::build(a_max, b_max, None)
    }

    /// Builds the triangle with every entry truncated at `q_order`.
    pub fn truncated(a_max: usize, b_max: usize, q_order: usize) -> Self {
        Self::build(a_max, b_max, Some(q_order))
    }

    fn build(a_max: usize, b_max: usize, trunc: Option<usize>) -> Self {
        let order_of = |a: usize, b: usize| trunc.unwrap_or(b * (a - b));
        let mut rows: Vec<Vec<TruncatedSeries>> = Vec::with_capacity(a_max + 1);
        for a in 0..=a_max {
            let width = a.min(b_max);
            let mut row = Vec::with_capacity(width + 1);
            for b in 0..=width {
                if b == 0 {
                    row.push(TruncatedSeries::one(order_of(a, 0)));
                    continue;
                }
                let order = order_of(a, b);
                let mut coeffs = vec![BigInt::zero(); order + 1];
                // [A,B] = [A-1,B-1] + q^B [A-1,B]
                let left = &rows[a - 1][b - 1];
                for (n, c) in left.coeffs().iter().enumerate() {
                    if n > order {
                        break;
                    }
                    coeffs[n] += c;
                }
                if b < a {
                    let right = &rows[a - 1][b];
                    for (n, c) in right.coeffs().iter().enumerate() {
                        if n + b > order {
                            break;
                        }
                        coeffs[n + b] += c;
                    }
                }
                row.push(TruncatedSeries::from_coeffs(coeffs));
            }
            rows.push(row);
        }
        Self { a_max, b_max, rows }
    }

    /// Looks up `[a, b]_q`, applying the zero contract for out-of-range
    /// arguments. Panics if an in-range argument exceeds the table bounds.
    pub fn get(&self, a: i64, b: i64) -> TruncatedSeries {
        if b < 0 || b > a {
            return TruncatedSeries::zero(0);
        }
        let (a, b) = (a as usize, b as usize);
        assert!(
            a <= self.a_max && b <= self.b_max,
            "Gaussian binomial ({}, {}) outside table bounds ({}, {})",
            a,
            b,
            self.a_max,
            self.b_max
        );
        self.rows[a][b].clone()
    }
}

/// The Gaussian binomial `[a, b]_q` as an exact polynomial of degree
/// `b(a-b)`, or the zero series when `b < 0` or `b > a`.
pub fn qbinomial(a: i64, b: i64) -> TruncatedSeries {
    if b < 0 || b > a {
        return TruncatedSeries::zero(0);
    }
    GaussianTable::exact(a as usize, b as usize).get(a, b)
}
