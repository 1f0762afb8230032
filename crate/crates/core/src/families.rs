//! Seeded random instance families for the property suites and the
//! `verify` command.
//!
//! Instance `i` of a batch draws from its own ChaCha stream, so a batch is
//! reproducible from `(seed, i)` alone and independent of evaluation order.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::divdiff::NodeSequence;
use crate::poly::{Polynomial, RootForm};
use crate::scalar::{rat, Rational};

pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Small rational with numerator in `-9..=9` and a denominator from a short
/// list biased towards integers.
pub fn small_rational(rng: &mut impl Rng) -> Rational {
    const DENS: [i64; 6] = [1, 1, 1, 2, 3, 4];
    rat(rng.gen_range(-9..=9), *DENS.choose(rng).expect("nonempty"))
}

pub fn nonzero_rational(rng: &mut impl Rng) -> Rational {
    loop {
        let x = small_rational(rng);
        if x != rat(0, 1) {
            return x;
        }
    }
}

pub fn distinct_rationals(rng: &mut impl Rng, count: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(count);
    while out.len() < count {
        let x = small_rational(rng);
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

/// Polynomial of degree drawn uniformly from `degrees`.
pub fn random_polynomial_in(
    rng: &mut impl Rng,
    degrees: std::ops::RangeInclusive<usize>,
) -> Polynomial {
    let d = rng.gen_range(degrees);
    random_polynomial(rng, d)
}

/// Polynomial of exact degree `degree` with small random coefficients.
pub fn random_polynomial(rng: &mut impl Rng, degree: usize) -> Polynomial {
    let mut c: Vec<Rational> = (0..degree).map(|_| small_rational(rng)).collect();
    c.push(nonzero_rational(rng));
    Polynomial::new(c)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `P` with pairwise distinct roots, arbitrary `Q`.
    DistinctRoots,
    /// Distinct roots of `P`, one or two of them shared with `Q`.
    SharedRoots,
    /// Roots of `P` with multiplicities up to three, in shuffled order.
    MultipleRoots,
}

impl Family {
    pub const ALL: [Family; 3] = [
        Family::DistinctRoots,
        Family::SharedRoots,
        Family::MultipleRoots,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::DistinctRoots => "distinct-roots",
            Family::SharedRoots => "shared-roots",
            Family::MultipleRoots => "multiple-roots",
        }
    }

    /// An instance with `deg P = n`, `n >= 1`.
    pub fn generate(self, rng: &mut impl Rng, n: usize) -> Instance {
        assert!(n >= 1, "degree must be positive");
        let leading = nonzero_rational(rng);
        match self {
            Family::DistinctRoots => {
                let roots = distinct_rationals(rng, n);
                Instance::new(leading, roots, random_polynomial_in(rng, 0..=n))
            }
            Family::SharedRoots => {
                let roots = distinct_rationals(rng, n);
                let k = rng.gen_range(1..=n.min(2));
                let shared: Vec<Rational> = roots.choose_multiple(rng, k).cloned().collect();
                let cofactor = random_polynomial_in(rng, 0..=n - k);
                let q = &Polynomial::from_roots(&shared) * &cofactor;
                Instance::new(leading, roots, q)
            }
            Family::MultipleRoots => {
                let mut roots = Vec::with_capacity(n);
                let mut values = distinct_rationals(rng, n).into_iter();
                while roots.len() < n {
                    let left = n - roots.len();
                    let mut mult = rng.gen_range(1..=left.min(3));
                    if roots.is_empty() && n >= 2 && mult == 1 {
                        mult = 2;
                    }
                    let v = values.next().expect("n values suffice");
                    roots.extend(std::iter::repeat_n(v, mult));
                }
                roots.shuffle(rng);
                let q = if rng.gen_bool(0.5) {
                    let r = roots.choose(rng).expect("nonempty").clone();
                    &Polynomial::linear_factor(&r) * &random_polynomial_in(rng, 0..=n - 1)
                } else {
                    random_polynomial_in(rng, 0..=n)
                };
                Instance::new(leading, roots, q)
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                format!(
                    "unknown family {s:?}; expected distinct-roots, shared-roots or multiple-roots"
                )
            })
    }
}

/// `P` in root form together with `Q`, `deg Q <= deg P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub p: RootForm,
    pub q: Polynomial,
}

impl Instance {
    fn new(leading: Rational, roots: Vec<Rational>, q: Polynomial) -> Self {
        Instance {
            p: RootForm::new(leading, NodeSequence::new(roots)).expect("leading is nonzero"),
            q,
        }
    }
}

/// `P = G·A`, `Q = G·C` with `G` of the planted degree and `gcd(A, C) = 1`.
#[derive(Clone, Debug)]
pub struct PlantedGcd {
    pub p: Polynomial,
    pub q: Polynomial,
    pub gcd_degree: usize,
}

pub fn planted_gcd(rng: &mut impl Rng, n: usize, gcd_degree: usize) -> PlantedGcd {
    assert!(gcd_degree <= n && n >= 1);
    let g = Polynomial::from_roots(&distinct_rationals(rng, gcd_degree));
    loop {
        let a = random_polynomial(rng, n - gcd_degree);
        let c = random_polynomial_in(rng, 0..=n - gcd_degree);
        if a.gcd(&c).expect("a is nonzero").degree() == Some(0) {
            return PlantedGcd {
                p: &g * &a,
                q: &g * &c,
                gcd_degree,
            };
        }
    }
}

/// Sorted distinct nodes with `Q` of degree `n - 1` whose roots sit strictly
/// inside each gap between adjacent nodes.
pub fn interlacing_pair(rng: &mut impl Rng, n: usize) -> (Vec<Rational>, Polynomial) {
    let mut nodes = distinct_rationals(rng, n);
    nodes.sort();
    let roots: Vec<Rational> = nodes
        .windows(2)
        .map(|w| {
            let t = rat(rng.gen_range(1..=7), 8);
            &w[0] + (&w[1] - &w[0]) * t
        })
        .collect();
    let q = Polynomial::from_roots(&roots).scale(&nonzero_rational(rng));
    (nodes, q)
}
