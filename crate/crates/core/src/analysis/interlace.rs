use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::pattern::{classify_pattern, SignPattern};
use super::sturm::{count_real_roots, isolate_roots, sturm_chain, RootInterval};
use crate::divdiff::{delta_matrix, newton_interp, DeltaMatrix, Source};
use crate::error::Result;
use crate::poly::Polynomial;
use crate::scalar::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    RealDistinctInterlacing,
    NoClaim,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterlaceReport {
    pub delta: DeltaMatrix,
    pub pattern: SignPattern,
    /// Decided from the sign pattern alone.
    pub verdict: Verdict,
    pub interpolant: Polynomial,
    /// Real roots of the squarefree part of the interpolant, ascending.
    /// Only computed when a claim is made.
    pub isolated_roots: Vec<RootInterval>,
    /// The Sturm verifier found real, distinct roots, one strictly inside
    /// each gap between adjacent sorted distinct nodes and none elsewhere.
    /// Always false under `NoClaim`.
    pub sturm_confirmed: bool,
}

impl InterlaceReport {
    /// A claimed verdict must be backed by the Sturm verifier.
    pub fn is_sound(&self) -> bool {
        self.verdict == Verdict::NoClaim || self.sturm_confirmed
    }
}

/// Builds `Δ(g)` and classifies its trailing minors. When the pattern makes
/// a claim, the roots of the Newton–Hermite interpolant are isolated and
/// checked against the nodes with Sturm sequences.
pub fn interlace_verdict(
    source: &Source,
    nodes: &[Rational],
    width: &Rational,
) -> Result<InterlaceReport> {
    let delta = delta_matrix(source, nodes)?;
    let pattern = classify_pattern(&delta.matrix().trailing_minors());
    let verdict = if pattern.classification.is_strict() {
        Verdict::RealDistinctInterlacing
    } else {
        Verdict::NoClaim
    };
    let interpolant = newton_interp(source, nodes)?;

    let (isolated_roots, sturm_confirmed) = if verdict == Verdict::NoClaim || interpolant.is_zero()
    {
        (Vec::new(), false)
    } else {
        let g = interpolant.gcd(&interpolant.derivative())?;
        let squarefree = interpolant.div_rem(&g).0;
        let roots = isolate_roots(&squarefree, width)?;
        let confirmed = g.degree() == Some(0) && interlaces(&interpolant, &roots, nodes)?;
        (roots, confirmed)
    };

    Ok(InterlaceReport {
        delta,
        pattern,
        verdict,
        interpolant,
        isolated_roots,
        sturm_confirmed,
    })
}

fn interlaces(p: &Polynomial, roots: &[RootInterval], nodes: &[Rational]) -> Result<bool> {
    let degree = p.degree().unwrap_or(0);
    let sorted: Vec<Rational> = {
        let mut v = nodes.to_vec();
        v.sort();
        v.dedup();
        v
    };
    if roots.len() != degree || sorted.len() != degree + 1 {
        return Ok(false);
    }
    if sorted.iter().any(|x| p.eval(x).is_zero()) {
        return Ok(false);
    }
    let chain = sturm_chain(p)?;
    Ok(sorted
        .windows(2)
        .all(|w| count_real_roots(&chain, &w[0], &w[1]) == 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::Pattern;
    use crate::divdiff::{HermiteData, HermiteGroup, NodeSequence};
    use crate::scalar::{int, rat};

    fn width() -> Rational {
        rat(1, 1 << 20)
    }

    #[test]
    fn example_two_is_confirmed() {
        let q = Polynomial::from_ints(&[-15, 23, -9, 1]);
        let r =
            interlace_verdict(&q.into(), &NodeSequence::from_ints(&[2, 4, 6]), &width()).unwrap();
        assert_eq!(r.pattern.classification, Pattern::AllPositive);
        assert_eq!(r.verdict, Verdict::RealDistinctInterlacing);
        assert!(r.sturm_confirmed);
        assert_eq!(r.interpolant, Polynomial::from_ints(&[33, -21, 3]));
        assert_eq!(r.isolated_roots.len(), 2);
        assert!(r.isolated_roots[0].lower >= int(2) && r.isolated_roots[0].upper < int(4));
        assert!(r.isolated_roots[1].lower > int(4) && r.isolated_roots[1].upper < int(6));
    }

    #[test]
    fn example_one_makes_no_claim() {
        let q = Polynomial::from_ints(&[-6, 11, -6, 1]);
        let r =
            interlace_verdict(&q.into(), &NodeSequence::from_ints(&[-1, 1, 4]), &width()).unwrap();
        assert_eq!(r.pattern.classification, Pattern::Degenerate);
        assert_eq!(r.verdict, Verdict::NoClaim);
        assert!(r.is_sound());
    }

    #[test]
    fn constant_function_is_degenerate() {
        let g = Polynomial::from_ints(&[4]);
        let r =
            interlace_verdict(&g.into(), &NodeSequence::from_ints(&[0, 1, 3]), &width()).unwrap();
        assert_eq!(r.pattern.classification, Pattern::Degenerate);
        assert_eq!(r.verdict, Verdict::NoClaim);
    }

    #[test]
    fn alternating_pattern_from_negated_function() {
        let q = Polynomial::from_ints(&[15, -23, 9, -1]);
        let r =
            interlace_verdict(&q.into(), &NodeSequence::from_ints(&[6, 2, 4]), &width()).unwrap();
        assert_eq!(r.pattern.classification, Pattern::Alternating);
        assert!(r.sturm_confirmed);
    }

    #[test]
    fn hermite_source() {
        // g(0) = 1, g'(0) = 0, g(1) = -1: interpolant 1 - 2x^2, minors
        // (-2, -2, ...) with a repeated node never make a claim
        let data = HermiteData::new(vec![
            HermiteGroup {
                node: int(0),
                values: vec![int(1), int(0)],
            },
            HermiteGroup {
                node: int(1),
                values: vec![int(-1)],
            },
        ])
        .unwrap();
        let r = interlace_verdict(&data.into(), &NodeSequence::from_ints(&[0, 0, 1]), &width())
            .unwrap();
        assert_eq!(r.interpolant, Polynomial::from_ints(&[1, 0, -2]));
        assert!(!r.pattern.classification.is_strict());
        assert_eq!(r.verdict, Verdict::NoClaim);
        assert!(!r.sturm_confirmed && r.isolated_roots.is_empty());
    }
}
