//! The reciprocal pair of lower-triangular matrices attached to a gap class,
//! built from the signed partition counts and the m-step composition counts.
//!
//! For a class `(g, s)` with `g >= 1`:
//!
//! ```text
//! mu[i][j]    = M(i + g + s - 1, j + g + s - 1)
//! gamma[i][j] = K(i - j, j + s - 1)
//! ```
//!
//! with 1-based indices. The two matrices are mutual inverses, and finite
//! truncation is sound: the `N x N` leading blocks of lower-triangular
//! matrices form a quotient algebra, so a product block depends only on the
//! factors' blocks and "inverse at every finite truncation" is exactly the
//! infinite-matrix statement.
//!
//! The entries of `gamma` stabilize along diagonals: far enough down,
//! `gamma[n][n-k]` is plainly the number of class compositions of `k`, and
//! products of gamma matrices count tuples of compositions the same way.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::enumerate::{count_gap_compositions, EnumerateError, GapClass};
use crate::genfun::{m_step_counts_upto, signed_count_series};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangleError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("the mu/gamma reciprocity needs a positive gap; g = 0 is outside its hypotheses")]
    GapNotPositive,
    #[error("gamma products need a common minimum part; got s = {first} and s = {other}")]
    MixedMinimumPart { first: u64, other: u64 },
    #[error("matrix entry ({row}, {col}) is not an integer: {text:?}")]
    MalformedEntry {
        row: usize,
        col: usize,
        text: String,
    },
    #[error("matrix is {rows} rows of {cols:?} columns, expected dim {dim}")]
    MalformedShape {
        rows: usize,
        cols: Option<usize>,
        dim: usize,
    },
    #[error("entry ({row}, {col}) above the diagonal is nonzero")]
    NotLowerTriangular { row: usize, col: usize },
}

/// A dense lower-triangular matrix of exact integers with 1-based logical
/// indexing.
///
/// Storage is row-major: logical `(i, j)` lives at `entries[(i-1)*dim +
/// (j-1)]`. That is the only place the 1-based-to-0-based mapping happens.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    dim: usize,
    entries: Vec<BigInt>,
}

impl Triangle {
    /// Builds from a callback over the logical lower-triangular cells
    /// (`1 <= j <= i <= dim`); everything above the diagonal is zero.
    pub fn from_fn<F>(dim: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> BigInt,
    {
        assert!(dim >= 1, "a triangle has at least one row");
        let mut entries = vec![BigInt::zero(); dim * dim];
        for i in 1..=dim {
            for j in 1..=i {
                entries[(i - 1) * dim + (j - 1)] = f(i, j);
            }
        }
        Self { dim, entries }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| {
            if i == j {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
    }

    /// Builds from explicit rows, rejecting shapes that are not `dim x dim`
    /// or that carry a nonzero entry above the diagonal.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, TriangleError> {
        let dim = rows.len();
        if dim == 0 {
            return Err(TriangleError::MalformedShape {
                rows: 0,
                cols: None,
                dim: 0,
            });
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(TriangleError::MalformedShape {
                    rows: dim,
                    cols: Some(row.len()),
                    dim,
                });
            }
            for (c, value) in row.iter().enumerate().skip(r + 1) {
                if !value.is_zero() {
                    return Err(TriangleError::NotLowerTriangular {
                        row: r + 1,
                        col: c + 1,
                    });
                }
            }
        }
        Ok(Self {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The logical entry `(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        assert!(
            (1..=self.dim).contains(&i) && (1..=self.dim).contains(&j),
            "index ({}, {}) outside a {0}x{0} triangle",
            i,
            j,
        );
        &self.entries[(i - 1) * self.dim + (j - 1)]
    }

    /// Exact matrix product; the result of multiplying lower-triangular
    /// matrices is again lower-triangular, so only `j <= i` is computed.
    pub fn mul(&self, other: &Triangle) -> Result<Triangle, TriangleError> {
        if self.dim != other.dim {
            return Err(TriangleError::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(Triangle::from_fn(self.dim, |i, j| {
            let mut acc = BigInt::zero();
            for k in j..=i {
                let a = self.get(i, k);
                if !a.is_zero() {
                    acc += a * other.get(k, j);
                }
            }
            acc
        }))
    }

    /// The first cell (row-major) where this matrix differs from the
    /// identity.
    pub fn first_non_identity(&self) -> Option<(usize, usize, BigInt)> {
        for i in 1..=self.dim {
            for j in 1..=self.dim {
                let v = self.get(i, j);
                let ok = if i == j { v.is_one() } else { v.is_zero() };
                if !ok {
                    return Some((i, j, v.clone()));
                }
            }
        }
        None
    }

    /// Rows of plain integers, comma-separated, no header, one row per line.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 1..=self.dim {
            let row: Vec<String> = (1..=self.dim).map(|j| self.get(i, j).to_string()).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// The on-disk JSON form of a matrix. Entries are decimal strings so that
/// arbitrary-precision values survive any JSON reader.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub kind: String,
    pub g: Vec<u64>,
    pub s: u64,
    pub dim: usize,
    pub entries: Vec<Vec<String>>,
}

impl MatrixFile {
    pub fn from_triangle(triangle: &Triangle, kind: &str, g: Vec<u64>, s: u64) -> Self {
        let dim = triangle.dim();
        let entries = (1..=dim)
            .map(|i| (1..=dim).map(|j| triangle.get(i, j).to_string()).collect())
            .collect();
        Self {
            kind: kind.to_string(),
            g,
            s,
            dim,
            entries,
        }
    }

    /// Parses the stored entries back into a [`Triangle`].
    pub fn to_triangle(&self) -> Result<Triangle, TriangleError> {
        if self.entries.len() != self.dim {
            return Err(TriangleError::MalformedShape {
                rows: self.entries.len(),
                cols: None,
                dim: self.dim,
            });
        }
        let mut rows = Vec::with_capacity(self.dim);
        for (r, row) in self.entries.iter().enumerate() {
            if row.len() != self.dim {
                return Err(TriangleError::MalformedShape {
                    rows: self.dim,
                    cols: Some(row.len()),
                    dim: self.dim,
                });
            }
            let mut parsed = Vec::with_capacity(self.dim);
            for (c, text) in row.iter().enumerate() {
                let value: BigInt = text.parse().map_err(|_| TriangleError::MalformedEntry {
                    row: r + 1,
                    col: c + 1,
                    text: text.clone(),
                })?;
                parsed.push(value);
            }
            rows.push(parsed);
        }
        Triangle::from_rows(rows)
    }
}

/// Builds `mu` for the class: entry `(i, j)` is the signed partition count
/// `M(i + g + s - 1, j + g + s - 1)`. Rejects `g = 0`, which the
/// reciprocity statement does not cover.
pub fn build_mu(cls: GapClass, dim: usize) -> Result<Triangle, TriangleError> {
    if cls.g() == 0 {
        return Err(TriangleError::GapNotPositive);
    }
    let offset = (cls.g() + cls.s() - 1) as usize;
    let q_order = dim + offset;
    // One signed-count series per column serves the whole column.
    let columns: Vec<_> = (1..=dim)
        .map(|j| signed_count_series(cls, (j + offset) as u64, q_order))
        .collect();
    let mu = Triangle::from_fn(dim, |i, j| columns[j - 1].coeff(i + offset).clone());
    debug_assert!((1..=dim).all(|i| mu.get(i, i).is_one()));
    Ok(mu)
}

/// Builds `gamma` for the class: entry `(i, j)` is the m-step composition
/// count `K(i - j, j + s - 1)`.
pub fn build_gamma(cls: GapClass, dim: usize) -> Triangle {
    let columns: Vec<_> = (1..=dim)
        .map(|j| m_step_counts_upto(cls, (j as u64) + cls.s() - 1, dim - j))
        .collect();
    Triangle::from_fn(dim, |i, j| columns[j - 1][i - j].clone())
}

/// Which product order failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductSide {
    MuGamma,
    GammaMu,
}

impl fmt::Display for ProductSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProductSide::MuGamma => write!(f, "mu*gamma"),
            ProductSide::GammaMu => write!(f, "gamma*mu"),
        }
    }
}

/// The first product cell that differs from the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseMismatch {
    pub side: ProductSide,
    pub row: usize,
    pub col: usize,
    pub value: BigInt,
}

impl fmt::Display for InverseMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} differs from the identity at ({}, {}): {}",
            self.side, self.row, self.col, self.value
        )
    }
}

/// Checks that two triangles are mutual inverses, in both product orders.
/// `None` means both products equal the identity.
pub fn check_mutual_inverse(
    mu: &Triangle,
    gamma: &Triangle,
) -> Result<Option<InverseMismatch>, TriangleError> {
    let forward = mu.mul(gamma)?;
    if let Some((row, col, value)) = forward.first_non_identity() {
        return Ok(Some(InverseMismatch {
            side: ProductSide::MuGamma,
            row,
            col,
            value,
        }));
    }
    let backward = gamma.mul(mu)?;
    if let Some((row, col, value)) = backward.first_non_identity() {
        return Ok(Some(InverseMismatch {
            side: ProductSide::GammaMu,
            row,
            col,
            value,
        }));
    }
    Ok(None)
}

/// Builds both matrices for the class and checks the reciprocity on the
/// `dim x dim` truncation. Requires `g >= 1` (via [`build_mu`]).
pub fn check_inverse(cls: GapClass, dim: usize) -> Result<Option<InverseMismatch>, TriangleError> {
    let mu = build_mu(cls, dim)?;
    let gamma = build_gamma(cls, dim);
    check_mutual_inverse(&mu, &gamma)
}

/// The product `gamma_{g_1} * ... * gamma_{g_M}` over classes sharing a
/// common minimum part. The empty product is the identity.
pub fn gamma_product(classes: &[GapClass], dim: usize) -> Result<Triangle, TriangleError> {
    if let Some(first) = classes.first() {
        for other in &classes[1..] {
            if other.s() != first.s() {
                return Err(TriangleError::MixedMinimumPart {
                    first: first.s(),
                    other: other.s(),
                });
            }
        }
    }
    let mut acc = Triangle::identity(dim);
    for cls in classes {
        acc = acc.mul(&build_gamma(*cls, dim))?;
    }
    Ok(acc)
}

/// Brute-force count of tuples `(kappa_1, ..., kappa_M)` with
/// `kappa_j` a class-`(g_j, s)` composition and total size `k`, by
/// convolving per-class counts from the enumeration oracle. The empty tuple
/// counts 1 at `k = 0`.
pub fn tuple_count(gs: &[u64], s: u64, k: u64) -> Result<BigInt, EnumerateError> {
    let k = k as usize;
    let mut acc = vec![BigInt::zero(); k + 1];
    acc[0] = BigInt::one();
    for &g in gs {
        let cls = GapClass::new(g, s);
        let mut per_class = Vec::with_capacity(k + 1);
        for t in 0..=k {
            per_class.push(BigInt::from(count_gap_compositions(
                t as u64, cls, None, None,
            )?));
        }
        let mut next = vec![BigInt::zero(); k + 1];
        for (i, a) in acc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in per_class.iter().take(k + 1 - i).enumerate() {
                if !b.is_zero() {
                    next[i + j] += a * b;
                }
            }
        }
        acc = next;
    }
    Ok(acc.pop().unwrap())
}
