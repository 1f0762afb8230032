use itertools::Itertools;
use num_traits::Zero;

use crate::bezout::bezout;
use crate::divdiff::{delta_matrix, DeltaMatrix, Source};
use crate::error::{Error, Result};
use crate::linalg::{MinorSequence, RationalMatrix};
use crate::poly::{Polynomial, RootForm};
use crate::scalar::{int, pow, Rational};

fn check_q_degree(p: &RootForm, q: &Polynomial) -> Result<()> {
    match q.degree() {
        Some(m) if m > p.degree() => Err(Error::DegreeOrder {
            p: p.degree(),
            q: m,
        }),
        _ => Ok(()),
    }
}

fn check_simple_roots(p: &RootForm) -> Result<()> {
    let roots = p.roots();
    for (i, x) in roots.iter().enumerate() {
        if roots[..i].contains(x) {
            return Err(Error::RepeatedRoot(x.clone()));
        }
    }
    Ok(())
}

/// Trailing minor of `B(P, Q)` of the given size from the roots of `P`:
///
/// `p_n^(2s) * sum over s-subsets I of prod_{i in I} Q(x_i)/P'(x_i)
///  * prod_{a < b in I} (x_a - x_b)^2`.
///
/// Only valid when the roots are pairwise distinct.
pub fn subset_sum_minor(p: &RootForm, q: &Polynomial, size: usize) -> Result<Rational> {
    let n = p.degree();
    if size == 0 || size > n {
        return Err(Error::SizeOutOfRange { size, n });
    }
    check_q_degree(p, q)?;
    check_simple_roots(p)?;
    let dp = p.expand().derivative();
    let roots = p.roots();
    let ratios: Vec<Rational> = roots.iter().map(|x| q.eval(x) / dp.eval(x)).collect();
    let sum = (0..n)
        .combinations(size)
        .map(|subset| {
            let mut term = subset.iter().fold(int(1), |acc, &i| acc * &ratios[i]);
            if term.is_zero() {
                return term;
            }
            for (&a, &b) in subset.iter().tuple_combinations() {
                let d = &roots[a] - &roots[b];
                term *= &d * &d;
            }
            term
        })
        .fold(Rational::zero(), |acc, t| acc + t);
    Ok(pow(p.leading(), 2 * size) * sum)
}

/// Bottom-right entry `b_nn = p_n^2 * sum Q(x_i)/P'(x_i)` for simple roots.
pub fn corner_entry_formula(p: &RootForm, q: &Polynomial) -> Result<Rational> {
    check_q_degree(p, q)?;
    check_simple_roots(p)?;
    let dp = p.expand().derivative();
    let sum = p
        .roots()
        .iter()
        .fold(Rational::zero(), |acc, x| acc + q.eval(x) / dp.eval(x));
    Ok(pow(p.leading(), 2) * sum)
}

/// One size of the `B`-vs-`Δ` comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorCheck {
    pub size: usize,
    pub lhs: Rational,
    pub rhs: Rational,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub bezout: RationalMatrix,
    pub delta: DeltaMatrix,
    pub bezout_minors: MinorSequence,
    pub delta_minors: MinorSequence,
    pub checks: Vec<MinorCheck>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.equal)
    }
}

/// Compares each trailing minor of `B(P, Q)` with `p_n^s` times the
/// matching minor of `Δ(Q)`, where `Δ` uses the roots of `P` as nodes in
/// the given order. Roots may repeat and may be shared with `Q`.
pub fn minor_identity_check(p: &RootForm, q: &Polynomial) -> Result<IdentityReport> {
    check_q_degree(p, q)?;
    let b = bezout(&p.expand(), q)?;
    let delta = delta_matrix(&Source::Polynomial(q.clone()), p.roots())?;
    let bezout_minors = b.trailing_minors();
    let delta_minors = delta.matrix().trailing_minors();
    let checks = (1..=p.degree())
        .map(|s| {
            let lhs = bezout_minors.size(s).clone();
            let rhs = pow(p.leading(), s) * delta_minors.size(s);
            MinorCheck {
                size: s,
                equal: lhs == rhs,
                lhs,
                rhs,
            }
        })
        .collect();
    Ok(IdentityReport {
        bezout: b,
        delta,
        bezout_minors,
        delta_minors,
        checks,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DefectReport {
    /// `n - rank B(P, Q)`
    pub defect: usize,
    pub gcd_degree: usize,
}

impl DefectReport {
    pub fn holds(&self) -> bool {
        self.defect == self.gcd_degree
    }
}

pub fn defect_check(p: &Polynomial, q: &Polynomial) -> Result<DefectReport> {
    let b = bezout(p, q)?;
    let g = p.gcd(q)?;
    Ok(DefectReport {
        defect: b.dim() - b.rank(),
        gcd_degree: g.degree_or_zero(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divdiff::NodeSequence;
    use crate::scalar::rat;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn ex1() -> (RootForm, Polynomial) {
        (
            RootForm::monic(NodeSequence::from_ints(&[-1, 1, 4])),
            p(&[-6, 11, -6, 1]),
        )
    }

    fn ex2() -> (RootForm, Polynomial) {
        (
            RootForm::monic(NodeSequence::from_ints(&[2, 4, 6])),
            p(&[-15, 23, -9, 1]),
        )
    }

    #[test]
    fn subset_sum_examples() {
        let (rf, q) = ex1();
        assert_eq!(subset_sum_minor(&rf, &q, 1).unwrap(), int(-2));
        assert_eq!(subset_sum_minor(&rf, &q, 2).unwrap(), int(-24));
        assert_eq!(subset_sum_minor(&rf, &q, 3).unwrap(), int(0));
        // -24/10 + 0 + 6/15
        assert_eq!(rat(-24, 10) + rat(6, 15), int(-2));
    }

    #[test]
    fn subset_sum_with_q_equal_to_derivative() {
        let rf = RootForm::new(int(3), NodeSequence::from_ints(&[-2, 0, 1, 5])).unwrap();
        let q = rf.expand().derivative();
        // each ratio is 1, so the size-1 value is p_n^2 * n
        assert_eq!(subset_sum_minor(&rf, &q, 1).unwrap(), int(9 * 4));
    }

    #[test]
    fn subset_sum_errors() {
        let rf = RootForm::monic(NodeSequence::from_ints(&[1, 1, 2]));
        assert_eq!(
            subset_sum_minor(&rf, &p(&[1]), 1),
            Err(Error::RepeatedRoot(int(1)))
        );
        let (rf, q) = ex1();
        assert_eq!(
            subset_sum_minor(&rf, &q, 0),
            Err(Error::SizeOutOfRange { size: 0, n: 3 })
        );
        assert_eq!(
            subset_sum_minor(&rf, &q, 4),
            Err(Error::SizeOutOfRange { size: 4, n: 3 })
        );
        assert_eq!(
            subset_sum_minor(&rf, &p(&[0, 0, 0, 0, 1]), 1),
            Err(Error::DegreeOrder { p: 3, q: 4 })
        );
    }

    #[test]
    fn corner_entry_matches_bezout() {
        let (rf, q) = ex2();
        let b = bezout(&rf.expand(), &q).unwrap();
        assert_eq!(corner_entry_formula(&rf, &q).unwrap(), *b.get(2, 2));
    }

    #[test]
    fn identity_examples() {
        let (rf, q) = ex1();
        let r = minor_identity_check(&rf, &q).unwrap();
        assert!(r.holds());
        assert_eq!(r.bezout_minors, MinorSequence::from_ints(&[-2, -24, 0]));
        assert_eq!(r.delta_minors, MinorSequence::from_ints(&[-2, -24, 0]));

        let (rf, q) = ex2();
        let r = minor_identity_check(&rf, &q).unwrap();
        assert!(r.holds());
        assert_eq!(r.delta_minors, MinorSequence::from_ints(&[3, 18, 135]));
    }

    #[test]
    fn identity_with_triple_root() {
        let rf = RootForm::new(rat(-3, 2), NodeSequence::from_ints(&[2, 2, 2, -1, 3])).unwrap();
        let q = Polynomial::new(vec![rat(1, 3), int(-2), int(0), rat(5, 2), int(1), int(-1)]);
        let r = minor_identity_check(&rf, &q).unwrap();
        assert_eq!(r.checks.len(), 5);
        assert!(r.holds(), "{:?}", r.checks);
    }

    #[test]
    fn defect_examples() {
        let (rf, q) = ex1();
        let d = defect_check(&rf.expand(), &q).unwrap();
        assert_eq!((d.defect, d.gcd_degree), (1, 1));
        let (rf, q) = ex2();
        let d = defect_check(&rf.expand(), &q).unwrap();
        assert_eq!((d.defect, d.gcd_degree), (0, 0));
        let pp = rf.expand();
        let d = defect_check(&pp, &pp).unwrap();
        assert_eq!((d.defect, d.gcd_degree), (3, 3));
        let d = defect_check(&pp, &Polynomial::zero()).unwrap();
        assert_eq!((d.defect, d.gcd_degree), (3, 3));
    }
}
