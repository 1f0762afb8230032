//! Sturm sequences: exact counts of distinct real roots and root isolation
//! by bisection.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::{int, Rational};

/// `p, p', -rem(p, p'), ...` down to the last nonzero remainder, each
/// remainder scaled by a positive constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    polys: Vec<Polynomial>,
}

impl SturmChain {
    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    /// Sign changes of the chain evaluated at `x`, zeros skipped.
    pub fn variations_at(&self, x: &Rational) -> usize {
        variations(self.polys.iter().map(|p| p.eval(x)))
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        variations(self.polys.iter().map(|p| {
            let lead = p.leading().cloned().unwrap_or_else(Rational::zero);
            let odd = p.degree().unwrap_or(0) % 2 == 1;
            if !positive && odd {
                -lead
            } else {
                lead
            }
        }))
    }

    /// Distinct real roots on the whole line.
    pub fn count_all(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }
}

fn variations(values: impl Iterator<Item = Rational>) -> usize {
    let mut last: Option<bool> = None;
    let mut count = 0;
    for v in values.filter(|v| !v.is_zero()) {
        let s = v.is_positive();
        if last.is_some_and(|l| l != s) {
            count += 1;
        }
        last = Some(s);
    }
    count
}

pub fn sturm_chain(p: &Polynomial) -> Result<SturmChain> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut polys = vec![p.clone()];
    let mut next = p.derivative();
    while !next.is_zero() {
        let prev = polys.last().expect("nonempty");
        let rem = prev.div_rem(&next).1;
        polys.push(next);
        // positive rescaling keeps every sign and bounds coefficient growth
        next = match rem.leading() {
            Some(lc) => rem.scale(&-lc.abs().recip()),
            None => rem,
        };
    }
    Ok(SturmChain { polys })
}

/// Distinct real roots in the half-open interval `(lower, upper]`.
pub fn count_real_roots(chain: &SturmChain, lower: &Rational, upper: &Rational) -> usize {
    if lower >= upper {
        return 0;
    }
    chain.variations_at(lower) - chain.variations_at(upper)
}

/// `1 + max |c_i / c_d|`; every complex root lies strictly inside.
pub fn cauchy_bound(p: &Polynomial) -> Rational {
    let Some(lead) = p.leading() else {
        return int(1);
    };
    let d = p.coeffs().len() - 1;
    let max = p.coeffs()[..d]
        .iter()
        .map(|c| (c / lead).abs())
        .max()
        .unwrap_or_else(Rational::zero);
    int(1) + max
}

/// Half-open interval `(lower, upper]` containing exactly one real root.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RootInterval {
    pub lower: Rational,
    pub upper: Rational,
}

impl RootInterval {
    pub fn width(&self) -> Rational {
        &self.upper - &self.lower
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lower < x && x <= &self.upper
    }
}

/// Isolates every real root of a squarefree `p` into disjoint intervals
/// narrower than `width`, ascending.
pub fn isolate_roots(p: &Polynomial, width: &Rational) -> Result<Vec<RootInterval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !width.is_positive() {
        return Err(Error::NonPositiveWidth);
    }
    if p.gcd(&p.derivative())?.degree() != Some(0) {
        return Err(Error::NotSquarefree);
    }
    let chain = sturm_chain(p)?;
    let bound = cauchy_bound(p);
    let half = int(1) / int(2);
    let mut out = Vec::new();
    // (lo, hi, variations at lo, variations at hi)
    let lo = -bound.clone();
    let (v_lo, v_hi) = (chain.variations_at(&lo), chain.variations_at(&bound));
    let mut stack = vec![(lo, bound, v_lo, v_hi)];
    while let Some((lo, hi, v_lo, v_hi)) = stack.pop() {
        match v_lo - v_hi {
            0 => {}
            1 => out.push(refine(p, lo, hi, width)),
            _ => {
                let mid = (&lo + &hi) * &half;
                let v_mid = chain.variations_at(&mid);
                stack.push((mid.clone(), hi, v_mid, v_hi));
                stack.push((lo, mid, v_lo, v_mid));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Shrinks `(lo, hi]`, known to hold exactly one simple root of `p`, below
/// `width` by bisection on the sign of `p` alone.
fn refine(p: &Polynomial, mut lo: Rational, mut hi: Rational, width: &Rational) -> RootInterval {
    let half = int(1) / int(2);
    let mut at_hi = p.eval(&hi);
    while &hi - &lo >= *width {
        let mid = (&lo + &hi) * &half;
        if at_hi.is_zero() {
            lo = mid;
            continue;
        }
        let at_mid = p.eval(&mid);
        if at_mid.is_zero() || at_mid.is_positive() == at_hi.is_positive() {
            // root in (lo, mid]
            hi = mid;
            at_hi = at_mid;
        } else {
            lo = mid;
        }
    }
    RootInterval {
        lower: lo,
        upper: hi,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divdiff::NodeSequence;
    use crate::poly::RootForm;
    use crate::scalar::rat;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn counting_examples() {
        let cubic = Polynomial::from_roots(&[int(1), int(2), int(3)]);
        let chain = sturm_chain(&cubic).unwrap();
        assert_eq!(count_real_roots(&chain, &int(0), &int(4)), 3);
        assert_eq!(count_real_roots(&chain, &int(1), &int(2)), 1);
        assert_eq!(chain.count_all(), 3);

        let chain = sturm_chain(&p(&[1, 0, 1])).unwrap();
        assert_eq!(count_real_roots(&chain, &int(-10), &int(10)), 0);
        assert_eq!(chain.count_all(), 0);
    }

    #[test]
    fn chain_ends_in_gcd_with_derivative() {
        let q = RootForm::monic(NodeSequence::from_ints(&[1, 1, 1, -2, 5])).expand();
        let chain = sturm_chain(&q).unwrap();
        let last = chain.polys().last().unwrap();
        assert_eq!(last.monic(), q.gcd(&q.derivative()).unwrap());
        assert_eq!(chain.count_all(), 3);
    }

    #[test]
    fn isolation_of_example_interpolant() {
        let q = p(&[33, -21, 3]);
        let w = rat(1, 1000);
        let roots = isolate_roots(&q, &w).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.iter().all(|r| r.width() < w));
        assert!(roots[0].lower >= int(2) && roots[0].upper <= int(4));
        assert!(roots[1].lower >= int(4) && roots[1].upper <= int(6));
        // (21 ± sqrt 45) / 6 ≈ 2.382, 4.618
        assert!(roots[0].contains(&rat(2382, 1000)) || roots[0].contains(&rat(2381, 1000)));
    }

    #[test]
    fn isolation_catches_rational_roots_on_bisection_points() {
        let q = Polynomial::from_roots(&[int(0), int(1), rat(-1, 2)]);
        let roots = isolate_roots(&q, &rat(1, 8)).unwrap();
        assert_eq!(roots.len(), 3);
        for (r, x) in roots.iter().zip([rat(-1, 2), int(0), int(1)]) {
            assert!(r.contains(&x));
        }
    }

    #[test]
    fn errors() {
        assert_eq!(sturm_chain(&Polynomial::zero()), Err(Error::ZeroPolynomial));
        assert_eq!(
            isolate_roots(&p(&[1, -2, 1]), &int(1)),
            Err(Error::NotSquarefree)
        );
        assert_eq!(
            isolate_roots(&p(&[1, 1]), &int(0)),
            Err(Error::NonPositiveWidth)
        );
        assert!(isolate_roots(&p(&[4]), &int(1)).unwrap().is_empty());
    }

    #[test]
    fn cauchy_bound_encloses_roots() {
        let q = Polynomial::from_roots(&[int(-7), rat(1, 3), int(12)]);
        let b = cauchy_bound(&q);
        assert!(b > int(12));
    }
}
