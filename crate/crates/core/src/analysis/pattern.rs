use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg::MinorSequence;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pattern {
    AllPositive,
    Alternating,
    Degenerate,
    Other,
}

impl Pattern {
    /// Patterns under which the interlacing conclusion is asserted.
    pub fn is_strict(self) -> bool {
        matches!(self, Pattern::AllPositive | Pattern::Alternating)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignPattern {
    pub classification: Pattern,
    pub minors: MinorSequence,
}

/// Scans minors by increasing size.
///
/// Any zero minor makes the sequence `Degenerate`. `Alternating` means the
/// sign of the size-`s` minor is `(-1)^s`, the pattern of a negative
/// definite matrix; strict flips starting from a positive 1×1 minor belong
/// to indefinite matrices and are `Other`. An empty sequence is `Other`.
pub fn classify_pattern(minors: &MinorSequence) -> SignPattern {
    let v = minors.values();
    let classification = if v.is_empty() {
        Pattern::Other
    } else if v.iter().any(Zero::is_zero) {
        Pattern::Degenerate
    } else if v.iter().all(Signed::is_positive) {
        Pattern::AllPositive
    } else if v[0].is_negative()
        && v.windows(2)
            .all(|w| w[0].is_positive() != w[1].is_positive())
    {
        Pattern::Alternating
    } else {
        Pattern::Other
    };
    SignPattern {
        classification,
        minors: minors.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(v: &[i64]) -> Pattern {
        classify_pattern(&MinorSequence::from_ints(v)).classification
    }

    #[test]
    fn examples() {
        assert_eq!(class(&[3, 18, 135]), Pattern::AllPositive);
        assert_eq!(class(&[-2, -24, 0]), Pattern::Degenerate);
        assert_eq!(class(&[-1, 2, -3]), Pattern::Alternating);
    }

    #[test]
    fn edge_cases() {
        // indefinite: the interpolant 17x + 34/3 at nodes -1/2, 9 gives
        // minors (17, -(17/6)(153 + 34/3)) and its root -2/3 is outside the nodes
        assert_eq!(class(&[1, -2, 3]), Pattern::Other);
        assert_eq!(class(&[17, -1]), Pattern::Other);
        assert_eq!(class(&[-5]), Pattern::Alternating);
        assert_eq!(class(&[5]), Pattern::AllPositive);
        assert_eq!(class(&[1, 0, 1]), Pattern::Degenerate);
        assert_eq!(class(&[-1, -2, 3]), Pattern::Other);
        assert_eq!(class(&[]), Pattern::Other);
        assert!(Pattern::Alternating.is_strict());
        assert!(!Pattern::Degenerate.is_strict());
    }
}
