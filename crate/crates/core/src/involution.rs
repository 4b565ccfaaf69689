//! An executable sign-reversing involution on pairs (partition, composition)
//! from a common gap class, together with an exhaustive checker of its
//! defining properties.
//!
//! The involution `phi` acts on pairs `(lambda, kappa)` with `lambda` a
//! class partition and `kappa` a class composition, moving one part between
//! the tails:
//!
//! - both empty: fixed point;
//! - `kappa` empty: the last part of `lambda` becomes the one-part `kappa`;
//! - `lambda` empty: the last part of `kappa` becomes the one-part `lambda`;
//! - otherwise, with `d = last(kappa) - last(lambda)`:
//!   - `d >= g`: move `kappa`'s last part onto the end of `lambda`;
//!   - `d <= g - 1`: move `lambda`'s last part onto the end of `kappa`.
//!
//! Parts are moved, never modified, so the minimum-part constraint is
//! preserved for free; the checker asserts it anyway rather than assuming.
//! `phi` preserves total size and total length and flips the weight
//! `(-1)^{len(lambda)}` except at the fixed point, which forces signed sums
//! over its orbits to cancel. The checker also restricts to the pairs whose
//! composition starts at `m` or is empty, verifies that `phi` stays inside
//! the subset that excludes `(lambda, empty)` with largest part below `m`,
//! verifies the cancellation there, and matches the leftover pairs against
//! the bounded partition series computed from Gaussian binomials - an
//! enumeration-side derivation of the quotient identity that never inverts
//! a series.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::enumerate::{
    gap_compositions, gap_partitions, is_gap_composition, is_gap_partition, Composition,
    EnumerateError, GapClass, Partition,
};
use crate::genfun::{series_p_le_m, SeriesRequest};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvolutionError {
    #[error("partition {parts:?} is not in the class {cls}")]
    LambdaOutsideClass { parts: Vec<u64>, cls: GapClass },
    #[error("composition {parts:?} is not in the class {cls}")]
    KappaOutsideClass { parts: Vec<u64>, cls: GapClass },
}

/// A pair (class partition, class composition): the carrier of the
/// involution, weighted by `(-1)^{len(lambda)}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairState {
    lambda: Partition,
    kappa: Composition,
}

impl PairState {
    /// Validates membership of both components in the class.
    pub fn new(
        lambda: Partition,
        kappa: Composition,
        cls: GapClass,
    ) -> Result<Self, InvolutionError> {
        if !is_gap_partition(&lambda, cls) {
            return Err(InvolutionError::LambdaOutsideClass {
                parts: lambda.parts().to_vec(),
                cls,
            });
        }
        if !is_gap_composition(&kappa, cls) {
            return Err(InvolutionError::KappaOutsideClass {
                parts: kappa.parts().to_vec(),
                cls,
            });
        }
        Ok(Self { lambda, kappa })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn kappa(&self) -> &Composition {
        &self.kappa
    }

    /// `(-1)^{len(lambda)}`.
    pub fn weight(&self) -> i32 {
        if self.lambda.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn total_size(&self) -> u64 {
        self.lambda.size() + self.kappa.size()
    }

    pub fn total_length(&self) -> usize {
        self.lambda.len() + self.kappa.len()
    }
}

impl fmt::Display for PairState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.lambda.parts(), self.kappa.parts())
    }
}

/// Applies the involution to a pair, validating membership first.
pub fn phi(pair: &PairState, cls: GapClass) -> Result<PairState, InvolutionError> {
    if !is_gap_partition(&pair.lambda, cls) {
        return Err(InvolutionError::LambdaOutsideClass {
            parts: pair.lambda.parts().to_vec(),
            cls,
        });
    }
    if !is_gap_composition(&pair.kappa, cls) {
        return Err(InvolutionError::KappaOutsideClass {
            parts: pair.kappa.parts().to_vec(),
            cls,
        });
    }
    let mut lam = pair.lambda.parts().to_vec();
    let mut kap = pair.kappa.parts().to_vec();
    match (lam.last().copied(), kap.last().copied()) {
        (None, None) => {}
        (Some(lam_last), None) => {
            lam.pop();
            kap = vec![lam_last];
        }
        (None, Some(kap_last)) => {
            kap.pop();
            lam = vec![kap_last];
        }
        (Some(lam_last), Some(kap_last)) => {
            if kap_last >= lam_last + cls.g() {
                kap.pop();
                lam.push(kap_last);
            } else {
                lam.pop();
                kap.push(lam_last);
            }
        }
    }
    Ok(PairState {
        lambda: Partition::new(lam).expect("moved parts keep the partition shape"),
        kappa: Composition::new(kap).expect("moved parts keep positivity"),
    })
}

/// One violated property, with the witnesses needed to reproduce it.
#[derive(Debug, Clone)]
pub enum InvolutionViolation {
    /// `phi` refused an enumerated pair.
    Rejected {
        pair: PairState,
        error: InvolutionError,
    },
    /// The image left the class domain.
    ImageOutsideDomain { pair: PairState, image: PairState },
    /// `phi(phi(pair)) != pair`.
    NotInvolutive {
        pair: PairState,
        round_trip: PairState,
    },
    /// Total size changed.
    SizeNotPreserved { pair: PairState, image: PairState },
    /// Total length changed.
    LengthNotPreserved { pair: PairState, image: PairState },
    /// The weight did not flip (at a non-fixed-point pair).
    WeightNotFlipped { pair: PairState, image: PairState },
    /// The image of a pair in the restricted subset left the subset.
    RestrictedImageEscapes {
        m: u64,
        pair: PairState,
        image: PairState,
    },
    /// A signed sum over the restricted subset failed to cancel.
    RestrictedSumNonzero {
        m: u64,
        length: usize,
        size: u64,
        value: BigInt,
    },
    /// The leftover pairs disagree with the bounded partition series.
    ComplementSeriesMismatch {
        m: u64,
        length: usize,
        size: u64,
        got: BigInt,
        expected: BigInt,
    },
}

impl fmt::Display for InvolutionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use InvolutionViolation::*;
        match self {
            Rejected { pair, error } => write!(f, "phi rejected {}: {}", pair, error),
            ImageOutsideDomain { pair, image } => {
                write!(f, "phi{} = {} left the class domain", pair, image)
            }
            NotInvolutive { pair, round_trip } => {
                write!(
                    f,
                    "phi(phi{}) = {} is not the original pair",
                    pair, round_trip
                )
            }
            SizeNotPreserved { pair, image } => {
                write!(f, "phi{} = {} changed the total size", pair, image)
            }
            LengthNotPreserved { pair, image } => {
                write!(f, "phi{} = {} changed the total length", pair, image)
            }
            WeightNotFlipped { pair, image } => {
                write!(f, "phi{} = {} kept the weight", pair, image)
            }
            RestrictedImageEscapes { m, pair, image } => {
                write!(
                    f,
                    "phi{} = {} escaped the restricted subset at m = {}",
                    pair, image, m
                )
            }
            RestrictedSumNonzero {
                m,
                length,
                size,
                value,
            } => write!(
                f,
                "signed sum over the restricted subset (m = {}) is {} at x^{} q^{}",
                m, value, length, size
            ),
            ComplementSeriesMismatch {
                m,
                length,
                size,
                got,
                expected,
            } => write!(
                f,
                "leftover pairs at m = {} give {} at x^{} q^{}, bounded series gives {}",
                m, got, length, size, expected
            ),
        }
    }
}

/// Outcome of the exhaustive verification.
#[derive(Debug, Clone)]
pub struct InvolutionReport {
    pub cls: GapClass,
    pub size_bound: u64,
    pub pairs_checked: usize,
    pub violations: Vec<InvolutionViolation>,
}

impl InvolutionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Is the pair in the restricted family: `kappa` empty or starting at `m`?
fn in_pi_m(pair: &PairState, m: u64) -> bool {
    pair.kappa.first().is_none_or(|first| first >= m)
}

/// Is the pair one of the leftovers: `kappa` empty and `lambda` empty or
/// with largest part at most `m - 1`?
fn in_complement(pair: &PairState, m: u64) -> bool {
    pair.kappa.is_empty() && pair.lambda.last().is_none_or(|last| last < m)
}

/// Exhaustively verifies every involution property over all pairs of total
/// size at most `size_bound`, including the restricted cancellations for
/// every `m <= size_bound` and the match between the leftover pairs and the
/// bounded partition series.
pub fn verify_involution(
    cls: GapClass,
    size_bound: u64,
) -> Result<InvolutionReport, EnumerateError> {
    let bound = size_bound as usize;
    let mut partitions_by_size = Vec::with_capacity(bound + 1);
    let mut compositions_by_size = Vec::with_capacity(bound + 1);
    for n in 0..=size_bound {
        partitions_by_size.push(gap_partitions(n, cls, None)?);
        compositions_by_size.push(gap_compositions(n, cls, None, None)?);
    }

    let mut pairs = Vec::new();
    for (a, partitions) in partitions_by_size.iter().enumerate() {
        for lambda in partitions {
            for compositions in &compositions_by_size[..=bound - a] {
                for kappa in compositions {
                    pairs.push(PairState {
                        lambda: lambda.clone(),
                        kappa: kappa.clone(),
                    });
                }
            }
        }
    }

    let mut violations = Vec::new();
    let mut images = Vec::with_capacity(pairs.len());
    for pair in &pairs {
        let image = match phi(pair, cls) {
            Ok(image) => image,
            Err(error) => {
                violations.push(InvolutionViolation::Rejected {
                    pair: pair.clone(),
                    error,
                });
                images.push(pair.clone()); // placeholder keeps indices aligned
                continue;
            }
        };
        if !is_gap_partition(&image.lambda, cls) || !is_gap_composition(&image.kappa, cls) {
            violations.push(InvolutionViolation::ImageOutsideDomain {
                pair: pair.clone(),
                image: image.clone(),
            });
        }
        match phi(&image, cls) {
            Ok(round_trip) if round_trip == *pair => {}
            Ok(round_trip) => {
                violations.push(InvolutionViolation::NotInvolutive {
                    pair: pair.clone(),
                    round_trip,
                });
            }
            Err(error) => {
                violations.push(InvolutionViolation::Rejected {
                    pair: image.clone(),
                    error,
                });
            }
        }
        if image.total_size() != pair.total_size() {
            violations.push(InvolutionViolation::SizeNotPreserved {
                pair: pair.clone(),
                image: image.clone(),
            });
        }
        if image.total_length() != pair.total_length() {
            violations.push(InvolutionViolation::LengthNotPreserved {
                pair: pair.clone(),
                image: image.clone(),
            });
        }
        let fixed_point = pair.lambda.is_empty() && pair.kappa.is_empty();
        if fixed_point {
            if image.weight() != pair.weight() {
                violations.push(InvolutionViolation::WeightNotFlipped {
                    pair: pair.clone(),
                    image: image.clone(),
                });
            }
        } else if image.weight() != -pair.weight() {
            violations.push(InvolutionViolation::WeightNotFlipped {
                pair: pair.clone(),
                image: image.clone(),
            });
        }
        images.push(image);
    }

    // Restricted subsets: for every first-part bound m, phi restricts to the
    // pairs that are not leftovers, the signed sum there cancels, and the
    // leftovers reproduce the bounded partition series at -x.
    for m in 1..=size_bound {
        let mut star_sum = vec![vec![BigInt::zero(); bound + 1]; bound + 1];
        let mut complement_sum = vec![vec![BigInt::zero(); bound + 1]; bound + 1];
        for (pair, image) in pairs.iter().zip(&images) {
            if !in_pi_m(pair, m) {
                continue;
            }
            let weight = BigInt::from(pair.weight());
            if in_complement(pair, m) {
                complement_sum[pair.total_length()][pair.total_size() as usize] += &weight;
            } else {
                star_sum[pair.total_length()][pair.total_size() as usize] += &weight;
                if !in_pi_m(image, m) || in_complement(image, m) {
                    violations.push(InvolutionViolation::RestrictedImageEscapes {
                        m,
                        pair: pair.clone(),
                        image: image.clone(),
                    });
                }
            }
        }
        'star: for (length, row) in star_sum.iter().enumerate() {
            for (size, value) in row.iter().enumerate() {
                if !value.is_zero() {
                    violations.push(InvolutionViolation::RestrictedSumNonzero {
                        m,
                        length,
                        size: size as u64,
                        value: value.clone(),
                    });
                    break 'star;
                }
            }
        }
        let req = SeriesRequest::new(cls, bound, bound).with_bound(m - 1);
        let bounded = series_p_le_m(&req).expect("bound present").negate_x();
        'complement: for (length, row) in complement_sum.iter().enumerate() {
            for (size, got) in row.iter().enumerate() {
                let expected = bounded.coeff(length, size);
                if got != expected {
                    violations.push(InvolutionViolation::ComplementSeriesMismatch {
                        m,
                        length,
                        size: size as u64,
                        got: got.clone(),
                        expected: expected.clone(),
                    });
                    break 'complement;
                }
            }
        }
    }

    Ok(InvolutionReport {
        cls,
        size_bound,
        pairs_checked: pairs.len(),
        violations,
    })
}
