//! Dense truncated power series in `q` over the integers.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Errors from series arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    /// Inversion over the integers needs a unit constant term.
    #[error("series not invertible over the integers: constant term {0} is not 1 or -1")]
    NonUnitConstant(BigInt),
}

/// A power series in `q` truncated at an explicit order `N`.
///
/// `coeffs[n]` holds the coefficient of `q^n` for `0 <= n <= N`, and every
/// stored coefficient is exact. Arithmetic truncates its result at the
/// minimum of the operand orders, never extending a series past what is
/// known. Reading a coefficient above the order is a contract violation and
/// panics instead of returning zero; the truncation boundary is where silent
/// wrong answers would otherwise creep in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Builds a series from the coefficients of `q^0 ..= q^N`.
    ///
    /// The order is `coeffs.len() - 1`; an empty vector has no order and
    /// panics.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a truncated series has at least the q^0 coefficient"
        );
        Self { coeffs }
    }

    /// Convenience constructor from machine integers.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The zero series at the given order.
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    /// The constant series 1 at the given order.
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        coeffs[0] = BigInt::one();
        Self { coeffs }
    }

    /// The monomial `q^degree` at the given order (zero if `degree > order`).
    pub fn monomial(degree: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coeffs[degree] = BigInt::one();
        }
        s
    }

    /// The truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The coefficient of `q^n`.
    ///
    /// Panics if `n` exceeds the order: that coefficient was never computed.
    pub fn coeff(&self, n: usize) -> &BigInt {
        assert!(
            n <= self.order(),
            "coefficient of q^{} requested from a series of order {}",
            n,
            self.order()
        );
        &self.coeffs[n]
    }

    /// All coefficients, indexed by degree.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Restricts the series to a smaller order.
    ///
    /// Panics if `order` exceeds the current order; a series never extends.
    pub fn truncate_to(&self, order: usize) -> Self {
        assert!(
            order <= self.order(),
            "cannot extend a series from order {} to {}",
            self.order(),
            order
        );
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True when the series equals 1 at every stored degree.
    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Sum, truncated at the smaller operand order.
    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| &self.coeffs[n] + &other.coeffs[n])
            .collect();
        Self { coeffs }
    }

    /// Difference, truncated at the smaller operand order.
    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| &self.coeffs[n] - &other.coeffs[n])
            .collect();
        Self { coeffs }
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Multiplies every coefficient by an integer.
    pub fn scale(&self, factor: &BigInt) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Multiplies by `q^k`, keeping the order (top coefficients fall off).
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let mut coeffs = vec![BigInt::zero(); order + 1];
        if k <= order {
            coeffs[k..].clone_from_slice(&self.coeffs[..=order - k]);
        }
        Self { coeffs }
    }

    /// Cauchy product, truncated at the smaller operand order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (b, c) in other.coeffs[..=order - i]
                .iter()
                .zip(coeffs[i..].iter_mut())
            {
                if !b.is_zero() {
                    *c += a * b;
                }
            }
        }
        Self { coeffs }
    }

    /// Multiplicative inverse up to the order.
    ///
    /// The constant term must be 1 or -1 so that the inverse stays integral;
    /// the coefficients follow the recurrence
    /// `b_n = -a_0^{-1} * sum_{k=1..n} a_k b_{n-k}` with `b_0 = a_0^{-1}`.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let a0 = &self.coeffs[0];
        if !a0.is_one() && !(-a0).is_one() {
            return Err(SeriesError::NonUnitConstant(a0.clone()));
        }
        let order = self.order();
        let mut inv = vec![BigInt::zero(); order + 1];
        inv[0] = a0.clone(); // a0 is its own inverse
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &inv[n - k];
                }
            }
            inv[n] = -(a0 * acc);
        }
        Ok(Self { coeffs: inv })
    }

    /// The first degree at which the two series disagree, comparing up to the
    /// smaller order; `None` means they agree everywhere both are defined.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let order = self.order().min(other.order());
        (0..=order).find(|&n| self.coeffs[n] != other.coeffs[n])
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match n {
                0 => write!(f, "{}", mag)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}*", mag)?;
                    }
                    if n == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{}", n)?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

/// The finite q-Pochhammer product `prod_{k=1..n} (1 - q^k)`, truncated.
///
/// `n = 0` is the empty product 1. Factors with `k` above the order are
/// congruent to 1 there and are skipped.
pub fn qpochhammer(n: u64, order: usize) -> TruncatedSeries {
    let mut acc = TruncatedSeries::one(order);
    for k in 1..=n {
        if k as usize > order {
            break;
        }
        acc = acc.sub(&acc.shift(k as usize));
    }
    acc
}

/// The product `prod_{k=1..n} (1 + q^k)`, truncated.
pub fn neg_qpochhammer(n: u64, order: usize) -> TruncatedSeries {
    let mut acc = TruncatedSeries::one(order);
    for k in 1..=n {
        if k as usize > order {
            break;
        }
        acc = acc.add(&acc.shift(k as usize));
    }
    acc
}
