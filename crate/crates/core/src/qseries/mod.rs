//! Exact truncated power-series arithmetic over arbitrary-precision integers.
//!
//! Everything downstream is built on three pieces:
//!
//! - [`TruncatedSeries`]: a dense series in `q`, exact up to an explicit
//!   order, with ring operations and inversion for unit constant terms;
//! - [`qpochhammer`] / [`qbinomial`]: the finite products `(q;q)_n` and the
//!   Gaussian binomial polynomials, kept in integer arithmetic throughout;
//! - [`XQSeries`]: a polynomial in a second variable `x` whose coefficients
//!   are truncated q-series, with layer-wise products, inversion, and exact
//!   integer substitution for `x`.
//!
//! All values are immutable after construction and operations are pure, so
//! everything here can be shared or sent across threads freely.

mod bivariate;
mod gaussian;
mod truncated;

pub use bivariate::XQSeries;
pub use gaussian::{qbinomial, GaussianTable};
pub use truncated::{neg_qpochhammer, qpochhammer, SeriesError, TruncatedSeries};
