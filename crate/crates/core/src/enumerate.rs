//! Brute-force enumeration of gap-constrained partitions and compositions.
//!
//! A partition here is a *nondecreasing* sequence of positive parts; the gap
//! class `(g, s)` keeps partitions whose consecutive differences are at least
//! `g` and whose parts are at least `s`, and compositions whose consecutive
//! differences are at least `-(g-1)` with the same minimum part. `g = 1`
//! makes the composition class coincide with partitions; `g = 0` makes it
//! the strictly increasing sequences.
//!
//! Everything in this module is deliberately naive: it is the ground truth
//! the closed forms are tested against. A cutoff guard (default 64,
//! overridable through the `GAPCOMB_ENUM_LIMIT` environment variable)
//! rejects sizes where exhaustive enumeration stops being a sane idea.

use std::fmt;

use thiserror::Error;

/// Default ceiling on the size `n` accepted by the enumerators.
pub const DEFAULT_ENUMERATION_LIMIT: u64 = 64;

/// Environment variable that overrides [`DEFAULT_ENUMERATION_LIMIT`].
pub const ENUMERATION_LIMIT_ENV: &str = "GAPCOMB_ENUM_LIMIT";

fn enumeration_limit() -> u64 {
    std::env::var(ENUMERATION_LIMIT_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_ENUMERATION_LIMIT)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("partition parts must be positive and nondecreasing")]
    InvalidPartition,
    #[error("composition parts must be positive")]
    InvalidComposition,
    #[error(
        "enumeration size {n} exceeds the cutoff {limit} (set {ENUMERATION_LIMIT_ENV} to raise it)"
    )]
    LimitExceeded { n: u64, limit: u64 },
}

/// A gap class: consecutive-difference bound `g` and minimum part `s >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GapClass {
    g: u64,
    s: u64,
}

impl GapClass {
    /// Panics if `s = 0`; the minimum part is always at least 1.
    pub fn new(g: u64, s: u64) -> Self {
        assert!(s >= 1, "the minimum part s must be at least 1");
        Self { g, s }
    }

    pub fn g(&self) -> u64 {
        self.g
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    /// Smallest admissible partition part after `prev` (`None` = first part).
    pub fn partition_lower_bound(&self, prev: Option<u64>) -> u64 {
        match prev {
            None => self.s,
            Some(v) => self.s.max(v + self.g),
        }
    }

    /// Smallest admissible composition part after `prev`: the difference must
    /// be at least `-(g-1)`, i.e. the next part at least `prev + 1 - g`.
    pub fn composition_lower_bound(&self, prev: Option<u64>) -> u64 {
        match prev {
            None => self.s,
            Some(v) => self.s.max((v + 1).saturating_sub(self.g)),
        }
    }
}

impl fmt::Display for GapClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(g={}, s={})", self.g, self.s)
    }
}

/// A partition: positive parts in nondecreasing order. The empty partition
/// is a first-class value of size and length zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self, EnumerateError> {
        let ok = parts.iter().all(|&p| p >= 1) && parts.windows(2).all(|w| w[0] <= w[1]);
        if ok {
            Ok(Self { parts })
        } else {
            Err(EnumerateError::InvalidPartition)
        }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<u64>) -> Self {
        debug_assert!(parts.iter().all(|&p| p >= 1));
        debug_assert!(parts.windows(2).all(|w| w[0] <= w[1]));
        Self { parts }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// The size `|lambda|` (sum of parts).
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// The length (number of parts).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn last(&self) -> Option<u64> {
        self.parts.last().copied()
    }
}

/// A composition: an ordered sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<u64>,
}

impl Composition {
    pub fn new(parts: Vec<u64>) -> Result<Self, EnumerateError> {
        if parts.iter().all(|&p| p >= 1) {
            Ok(Self { parts })
        } else {
            Err(EnumerateError::InvalidComposition)
        }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u64>) -> Self {
        debug_assert!(parts.iter().all(|&p| p >= 1));
        Self { parts }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn first(&self) -> Option<u64> {
        self.parts.first().copied()
    }

    pub fn last(&self) -> Option<u64> {
        self.parts.last().copied()
    }
}

/// True iff the partition lies in the class: empty, or first part at least
/// `s` and every consecutive difference at least `g`.
pub fn is_gap_partition(lambda: &Partition, cls: GapClass) -> bool {
    let parts = lambda.parts();
    match parts.first() {
        None => true,
        Some(&first) => first >= cls.s() && parts.windows(2).all(|w| w[1] >= w[0] + cls.g()),
    }
}

/// True iff the composition lies in the class: empty, or first part at least
/// `s` and every consecutive difference at least `-(g-1)`.
pub fn is_gap_composition(kappa: &Composition, cls: GapClass) -> bool {
    let parts = kappa.parts();
    match parts.first() {
        None => true,
        Some(&first) => {
            first >= cls.s()
                && parts
                    .windows(2)
                    .all(|w| w[1] >= (w[0] + 1).saturating_sub(cls.g()))
        }
    }
}

/// True iff every part is at most `m` plus the sum of the parts before it.
pub fn is_m_step(kappa: &Composition, m: u64) -> bool {
    let mut prefix = 0u64;
    for &part in kappa.parts() {
        if part > m + prefix {
            return false;
        }
        prefix += part;
    }
    true
}

fn check_limit(n: u64) -> Result<(), EnumerateError> {
    let limit = enumeration_limit();
    if n > limit {
        Err(EnumerateError::LimitExceeded { n, limit })
    } else {
        Ok(())
    }
}

/// Visits every partition of `n` in the class (optionally with largest part
/// at most `max_part`), in lexicographic order, without materializing them.
pub fn for_each_gap_partition<F>(
    n: u64,
    cls: GapClass,
    max_part: Option<u64>,
    mut visit: F,
) -> Result<(), EnumerateError>
where
    F: FnMut(&[u64]),
{
    check_limit(n)?;
    let mut stack = Vec::new();
    descend_partitions(n, cls, max_part, None, &mut stack, &mut visit);
    Ok(())
}

fn descend_partitions<F>(
    remaining: u64,
    cls: GapClass,
    max_part: Option<u64>,
    prev: Option<u64>,
    stack: &mut Vec<u64>,
    visit: &mut F,
) where
    F: FnMut(&[u64]),
{
    if remaining == 0 {
        visit(stack);
        return;
    }
    let lo = cls.partition_lower_bound(prev);
    let hi = max_part.unwrap_or(remaining).min(remaining);
    for part in lo..=hi {
        stack.push(part);
        descend_partitions(remaining - part, cls, max_part, Some(part), stack, visit);
        stack.pop();
    }
}

/// All partitions of `n` in the class, lexicographically ordered.
pub fn gap_partitions(
    n: u64,
    cls: GapClass,
    max_part: Option<u64>,
) -> Result<Vec<Partition>, EnumerateError> {
    let mut out = Vec::new();
    for_each_gap_partition(n, cls, max_part, |parts| {
        out.push(Partition::from_sorted_unchecked(parts.to_vec()));
    })?;
    Ok(out)
}

/// Visits every composition of `n` in the class, filtered by an optional
/// first-part minimum and an optional m-step bound, in lexicographic order.
pub fn for_each_gap_composition<F>(
    n: u64,
    cls: GapClass,
    min_first: Option<u64>,
    m_step: Option<u64>,
    mut visit: F,
) -> Result<(), EnumerateError>
where
    F: FnMut(&[u64]),
{
    check_limit(n)?;
    let mut stack = Vec::new();
    descend_compositions(n, 0, cls, min_first, m_step, None, &mut stack, &mut visit);
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn descend_compositions<F>(
    remaining: u64,
    prefix_sum: u64,
    cls: GapClass,
    min_first: Option<u64>,
    m_step: Option<u64>,
    prev: Option<u64>,
    stack: &mut Vec<u64>,
    visit: &mut F,
) where
    F: FnMut(&[u64]),
{
    if remaining == 0 {
        visit(stack);
        return;
    }
    let mut lo = cls.composition_lower_bound(prev);
    if prev.is_none() {
        if let Some(m) = min_first {
            lo = lo.max(m);
        }
    }
    let mut hi = remaining;
    if let Some(m) = m_step {
        hi = hi.min(m.saturating_add(prefix_sum));
    }
    if lo > hi {
        return;
    }
    for part in lo..=hi {
        stack.push(part);
        descend_compositions(
            remaining - part,
            prefix_sum + part,
            cls,
            min_first,
            m_step,
            Some(part),
            stack,
            visit,
        );
        stack.pop();
    }
}

/// All compositions of `n` in the class satisfying the optional filters.
pub fn gap_compositions(
    n: u64,
    cls: GapClass,
    min_first: Option<u64>,
    m_step: Option<u64>,
) -> Result<Vec<Composition>, EnumerateError> {
    let mut out = Vec::new();
    for_each_gap_composition(n, cls, min_first, m_step, |parts| {
        out.push(Composition::from_parts_unchecked(parts.to_vec()));
    })?;
    Ok(out)
}

/// Counts without materializing.
pub fn count_gap_partitions(
    n: u64,
    cls: GapClass,
    max_part: Option<u64>,
) -> Result<u64, EnumerateError> {
    let mut count = 0u64;
    for_each_gap_partition(n, cls, max_part, |_| count += 1)?;
    Ok(count)
}

/// Counts without materializing.
pub fn count_gap_compositions(
    n: u64,
    cls: GapClass,
    min_first: Option<u64>,
    m_step: Option<u64>,
) -> Result<u64, EnumerateError> {
    let mut count = 0u64;
    for_each_gap_composition(n, cls, min_first, m_step, |_| count += 1)?;
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn partition(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn composition(parts: &[u64]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn empty_partition_is_in_every_class() {
        assert!(is_gap_partition(&Partition::empty(), GapClass::new(9, 5)));
    }

    #[test]
    fn gap_partition_predicate() {
        let cls = GapClass::new(2, 1);
        assert!(is_gap_partition(&partition(&[1, 3]), cls));
        assert!(!is_gap_partition(&partition(&[4, 5]), cls));
        assert!(!is_gap_partition(&partition(&[1]), GapClass::new(0, 2)));
    }

    #[test]
    fn gap_composition_predicate() {
        let cls = GapClass::new(2, 1);
        assert!(is_gap_composition(&composition(&[2, 1, 1]), cls));
        assert!(!is_gap_composition(&composition(&[3, 1]), cls));
        // g = 1 coincides with partitions (nondecreasing sequences).
        assert!(is_gap_composition(
            &composition(&[1, 2, 3]),
            GapClass::new(1, 1)
        ));
        assert!(!is_gap_composition(
            &composition(&[2, 1]),
            GapClass::new(1, 1)
        ));
    }

    #[test]
    fn m_step_predicate() {
        assert!(is_m_step(&Composition::empty(), 0));
        assert!(is_m_step(&composition(&[1, 2, 3]), 1));
        assert!(!is_m_step(&composition(&[2]), 1));
    }

    #[test]
    fn partitions_of_zero() {
        let cls = GapClass::new(2, 1);
        assert_eq!(
            gap_partitions(0, cls, None).unwrap(),
            vec![Partition::empty()]
        );
    }

    #[test]
    fn partitions_of_four_with_gap_two() {
        let cls = GapClass::new(2, 1);
        let got = gap_partitions(4, cls, None).unwrap();
        assert_eq!(got, vec![partition(&[1, 3]), partition(&[4])]);
    }

    #[test]
    fn partitions_with_max_part_filter() {
        let cls = GapClass::new(2, 1);
        let got = gap_partitions(9, cls, Some(5)).unwrap();
        let with_top_five: Vec<_> = got.iter().filter(|p| p.last() == Some(5)).collect();
        assert_eq!(with_top_five.len(), 1);
        assert_eq!(with_top_five[0].parts(), &[1, 3, 5]);
        // Exhaustive cross-check: the filter agrees with post-filtering.
        let all = gap_partitions(9, cls, None).unwrap();
        let filtered: Vec<_> = all
            .into_iter()
            .filter(|p| p.last().is_none_or(|v| v <= 5))
            .collect();
        assert_eq!(got, filtered);
    }

    #[test]
    fn compositions_of_zero_and_three() {
        let cls = GapClass::new(2, 1);
        assert_eq!(
            gap_compositions(0, cls, None, None).unwrap(),
            vec![Composition::empty()]
        );
        let got = gap_compositions(3, cls, None, None).unwrap();
        let got_parts: Vec<_> = got.iter().map(|c| c.parts().to_vec()).collect();
        assert_eq!(got_parts.len(), 4);
        for expect in [vec![3], vec![1, 2], vec![2, 1], vec![1, 1, 1]] {
            assert!(got_parts.contains(&expect), "missing {:?}", expect);
        }
    }

    #[test]
    fn compositions_of_four_count_seven() {
        let cls = GapClass::new(2, 1);
        assert_eq!(count_gap_compositions(4, cls, None, None).unwrap(), 7);
    }

    #[test]
    fn class_one_compositions_are_partitions() {
        // Nondecreasing compositions are exactly the (unrestricted)
        // partitions, i.e. the g = 0 partition class.
        for n in 0..=12 {
            let comps = count_gap_compositions(n, GapClass::new(1, 1), None, None).unwrap();
            let parts = count_gap_partitions(n, GapClass::new(0, 1), None).unwrap();
            assert_eq!(comps, parts, "n = {}", n);
        }
    }

    #[test]
    fn m_step_filter_matches_post_filtering() {
        let cls = GapClass::new(2, 1);
        for n in 0..=10 {
            for m in 0..=4 {
                let direct = gap_compositions(n, cls, None, Some(m)).unwrap();
                let filtered: Vec<_> = gap_compositions(n, cls, None, None)
                    .unwrap()
                    .into_iter()
                    .filter(|c| is_m_step(c, m))
                    .collect();
                assert_eq!(direct, filtered, "n = {}, m = {}", n, m);
            }
        }
    }

    #[test]
    fn min_first_filter_matches_post_filtering() {
        let cls = GapClass::new(3, 1);
        for n in 0..=10 {
            for m in 1..=5 {
                let direct = gap_compositions(n, cls, Some(m), None).unwrap();
                let filtered: Vec<_> = gap_compositions(n, cls, None, None)
                    .unwrap()
                    .into_iter()
                    .filter(|c| c.first().is_none_or(|f| f >= m))
                    .collect();
                assert_eq!(direct, filtered, "n = {}, m = {}", n, m);
            }
        }
    }

    #[test]
    fn everything_returned_passes_its_predicate() {
        for g in 0..=3 {
            for s in 1..=2 {
                let cls = GapClass::new(g, s);
                for n in 0..=10 {
                    for p in gap_partitions(n, cls, None).unwrap() {
                        assert!(is_gap_partition(&p, cls));
                        assert_eq!(p.size(), n);
                    }
                    for c in gap_compositions(n, cls, None, None).unwrap() {
                        assert!(is_gap_composition(&c, cls));
                        assert_eq!(c.size(), n);
                    }
                }
            }
        }
    }

    #[test]
    fn cutoff_guard_rejects_large_sizes() {
        let cls = GapClass::new(1, 1);
        let err = gap_partitions(DEFAULT_ENUMERATION_LIMIT + 1, cls, None).unwrap_err();
        assert!(matches!(err, EnumerateError::LimitExceeded { .. }));
        let err =
            count_gap_compositions(DEFAULT_ENUMERATION_LIMIT + 1, cls, None, None).unwrap_err();
        assert!(matches!(err, EnumerateError::LimitExceeded { .. }));
    }

    #[test]
    fn invalid_shapes_are_rejected() {
        assert!(Partition::new(vec![2, 1]).is_err());
        assert!(Partition::new(vec![0]).is_err());
        assert!(Composition::new(vec![1, 0]).is_err());
    }
}
