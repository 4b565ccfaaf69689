//! Exact arithmetic for partitions and compositions with bounded gaps
//! between consecutive parts.
//!
//! A gap class `(g, s)` collects the partitions (nondecreasing sequences of
//! positive parts) whose consecutive differences are at least `g`, and the
//! compositions whose consecutive differences are at least `-(g-1)`, in both
//! cases with every part at least `s`. This crate computes their generating
//! functions as truncated integer series, counts them directly by
//! enumeration and by dynamic programming, builds the mutually inverse pair
//! of lower-triangular matrices the counting functions determine, and
//! machine-checks every identity relating these objects at arbitrary
//! truncation order - all in arbitrary-precision integer arithmetic, with no
//! floating point anywhere.
//!
//! Module map:
//!
//! - [`qseries`]: truncated series, q-Pochhammer products, Gaussian
//!   binomials, and their bivariate lifts;
//! - [`enumerate`]: brute-force enumeration of the gap classes - the ground
//!   truth everything else is tested against;
//! - [`genfun`]: the closed-form series, the counting functions `K` and `M`,
//!   and the series identity verifiers;
//! - [`reciprocity`]: the matrix pair, its reciprocity check, and the
//!   stabilized diagonal counts;
//! - [`involution`]: the executable weight-flipping involution and its
//!   exhaustive checker.
//!
//! ```
//! use gapcomb::enumerate::GapClass;
//! use gapcomb::genfun::{series_c_at, SeriesRequest};
//! use gapcomb::reciprocity::check_inverse;
//! use num_bigint::BigInt;
//!
//! // Compositions whose parts never drop by more than 1: 1, 1, 2, 4, 7, ...
//! let cls = GapClass::new(2, 1);
//! let counts = series_c_at(cls, 1, 6);
//! assert_eq!(counts.coeff(5), &BigInt::from(13));
//!
//! // The two matrices the class determines invert each other exactly.
//! assert_eq!(check_inverse(cls, 20).unwrap(), None);
//! ```

pub mod enumerate;
pub mod genfun;
pub mod involution;
pub mod qseries;
pub mod reciprocity;

pub use enumerate::{Composition, GapClass, Partition};
pub use qseries::{TruncatedSeries, XQSeries};
pub use reciprocity::Triangle;
