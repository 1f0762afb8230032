//! The Bezout matrix `B(P, Q)`, whose bilinear form is
//! `(P(x)Q(y) - P(y)Q(x)) / (x - y) = sum b_ij x^(i-1) y^(j-1)`.
//!
//! Two constructions that share no code:
//!
//! * [`bezout_via_product`] assembles `H(p)T(q) - H(q)T(p)` from a Hankel
//!   layout of the high coefficients and an upper-triangular Toeplitz layout
//!   of the low ones. This is the production path.
//! * [`bezout_via_bilinear`] forms the bivariate numerator and divides it
//!   by `x - y` with a coefficient recurrence. It serves as the oracle.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;
use crate::poly::{Polynomial, RootForm};
use crate::scalar::{pow, Rational};

/// A validated `(P, Q)` pair with `deg P >= 1` and `deg Q <= deg P`. `Q` may
/// be zero or of lower degree and is padded with zero coefficients up to
/// `x^n`, `n = deg P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BezoutInput {
    p: Vec<Rational>,
    q: Vec<Rational>,
    n: usize,
}

impl BezoutInput {
    pub fn new(p: &Polynomial, q: &Polynomial) -> Result<Self> {
        let n = match p.degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(Error::DegenerateP),
        };
        if let Some(m) = q.degree() {
            if m > n {
                return Err(Error::DegreeOrder { p: n, q: m });
            }
        }
        Ok(BezoutInput {
            p: p.padded(n + 1),
            q: q.padded(n + 1),
            n,
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Padded coefficients of `P`, length `n + 1`.
    pub fn p(&self) -> &[Rational] {
        &self.p
    }

    /// Padded coefficients of `Q`, length `n + 1`.
    pub fn q(&self) -> &[Rational] {
        &self.q
    }
}

/// Anti-triangular Hankel layout of `c_1..c_n`: entry `(i, j)` is
/// `c_{i+j+1}` (zero-based) while that index is at most `n`.
fn hankel(c: &[Rational], n: usize) -> RationalMatrix {
    RationalMatrix::from_fn(n, |i, j| {
        c.get(i + j + 1)
            .filter(|_| i + j < n)
            .cloned()
            .unwrap_or_else(Rational::zero)
    })
}

/// Upper-triangular Toeplitz layout of `c_0..c_{n-1}`: entry `(i, j)` is
/// `c_{j-i}` on and above the diagonal.
fn toeplitz(c: &[Rational], n: usize) -> RationalMatrix {
    RationalMatrix::from_fn(n, |i, j| {
        if j >= i {
            c[j - i].clone()
        } else {
            Rational::zero()
        }
    })
}

pub fn bezout_via_product(input: &BezoutInput) -> RationalMatrix {
    let n = input.n;
    let (p, q) = (&input.p, &input.q);
    hankel(p, n)
        .mul(&toeplitz(q, n))
        .sub(&hankel(q, n).mul(&toeplitz(p, n)))
}

pub fn bezout_via_bilinear(input: &BezoutInput) -> RationalMatrix {
    let n = input.n;
    let (p, q) = (&input.p, &input.q);
    // numer[r][s] is the coefficient of x^r y^s in P(x)Q(y) - P(y)Q(x)
    let numer = |r: usize, s: usize| &p[r] * &q[s] - &p[s] * &q[r];
    // (x - y) C(x, y) = N(x, y) gives N[r+1][s] = C[r][s] - C[r+1][s-1];
    // solve for C row by row from the top degree in x down.
    let mut c = vec![vec![Rational::zero(); n]; n];
    for r in (0..n).rev() {
        for s in 0..n {
            let mut v = numer(r + 1, s);
            if r + 1 < n && s >= 1 {
                v += &c[r + 1][s - 1];
            }
            c[r][s] = v;
        }
    }
    debug_assert!((0..=n).all(|s| {
        // the x^0 row of N must be reproduced by -C[0][s-1]
        let lhs = numer(0, s);
        let rhs = if s >= 1 && s - 1 < n {
            -c[0][s - 1].clone()
        } else {
            Rational::zero()
        };
        lhs == rhs
    }));
    RationalMatrix::from_fn(n, |i, j| c[i][j].clone())
}

/// Convenience: validate and build by the product form.
pub fn bezout(p: &Polynomial, q: &Polynomial) -> Result<RationalMatrix> {
    Ok(bezout_via_product(&BezoutInput::new(p, q)?))
}

/// Both sides of `det B(P, Q) = (-1)^(n(n-1)/2) p_n^n prod Q(x_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetIdentity {
    pub lhs: Rational,
    pub rhs: Rational,
}

impl DetIdentity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn bezout_det_identity(p: &RootForm, q: &Polynomial) -> Result<DetIdentity> {
    let n = p.degree();
    let b = bezout(&p.expand(), q)?;
    let product = p
        .roots()
        .iter()
        .fold(Rational::from_integer(1.into()), |acc, x| acc * q.eval(x));
    let mut rhs = pow(p.leading(), n) * product;
    if (n * (n.saturating_sub(1)) / 2) % 2 == 1 {
        rhs = -rhs;
    }
    Ok(DetIdentity { lhs: b.det(), rhs })
}
