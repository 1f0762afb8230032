//! Generalized divided differences over nodes that may repeat, the Newton
//! matrix `Δ(g)` and the Newton–Hermite interpolation polynomial.
//!
//! Three engines compute `g[x_1, ..., x_k]`:
//!
//! * [`divdiff_poly`]: deflation chain for polynomial `g`. Order-agnostic,
//!   exact, and the production engine.
//! * [`divdiff_recursive`]: the two-branch recursion. When the end nodes
//!   differ it takes the usual difference quotient; when they coincide it
//!   differentiates `g[x, x_2, ..., x_{k-1}]` in a symbolic first node.
//! * [`divdiff_hermite`]: the confluent table fed by derivative samples,
//!   which requires equal nodes to be contiguous.

use std::collections::HashSet;
use std::ops::Deref;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;
use crate::poly::Polynomial;
use crate::scalar::{int, Rational};

/// Ordered interpolation nodes `x_1..x_n`; repetitions allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct NodeSequence(Vec<Rational>);

impl NodeSequence {
    pub fn new(nodes: Vec<Rational>) -> Self {
        NodeSequence(nodes)
    }

    pub fn from_ints(nodes: &[i64]) -> Self {
        NodeSequence(nodes.iter().map(|&x| int(x)).collect())
    }

    pub fn into_vec(self) -> Vec<Rational> {
        self.0
    }

    /// True when every repeated value occupies one contiguous run.
    pub fn is_grouped(&self) -> bool {
        self.check_grouped().is_ok()
    }

    fn check_grouped(&self) -> Result<()> {
        let mut closed = HashSet::new();
        for w in self.0.windows(2) {
            if w[0] != w[1] {
                closed.insert(&w[0]);
                if closed.contains(&w[1]) {
                    return Err(Error::NodesNotGrouped(w[1].clone()));
                }
            }
        }
        Ok(())
    }

    pub fn has_repeats(&self) -> bool {
        self.0.iter().collect::<HashSet<_>>().len() != self.0.len()
    }

    /// Distinct values, ascending.
    pub fn sorted_distinct(&self) -> Vec<Rational> {
        let mut v = self.0.clone();
        v.sort();
        v.dedup();
        v
    }

    /// `(value, multiplicity)` for each contiguous run, in order.
    pub fn runs(&self) -> Vec<(Rational, usize)> {
        let mut out: Vec<(Rational, usize)> = Vec::new();
        for x in &self.0 {
            match out.last_mut() {
                Some((v, m)) if v == x => *m += 1,
                _ => out.push((x.clone(), 1)),
            }
        }
        out
    }
}

impl Deref for NodeSequence {
    type Target = [Rational];
    fn deref(&self) -> &[Rational] {
        &self.0
    }
}

impl From<Vec<Rational>> for NodeSequence {
    fn from(v: Vec<Rational>) -> Self {
        NodeSequence(v)
    }
}

/// Values and derivatives of `g` at one node: `values[r] = g^(r)(node)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteGroup {
    pub node: Rational,
    pub values: Vec<Rational>,
}

/// Finite Hermite data: one group per distinct node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteData {
    groups: Vec<HermiteGroup>,
}

impl HermiteData {
    pub fn new(groups: Vec<HermiteGroup>) -> Result<Self> {
        let mut seen = HashSet::new();
        for g in &groups {
            if !seen.insert(&g.node) {
                return Err(Error::DuplicateHermiteNode(g.node.clone()));
            }
            if g.values.is_empty() {
                return Err(Error::InsufficientHermiteData {
                    node: g.node.clone(),
                    needed: 1,
                    have: 0,
                });
            }
        }
        Ok(HermiteData { groups })
    }

    /// Samples `q` and its derivatives at each distinct node, up to one less
    /// than the node's multiplicity in `nodes`.
    pub fn sample(q: &Polynomial, nodes: &NodeSequence) -> Self {
        let mut groups: Vec<HermiteGroup> = Vec::new();
        for x in nodes.sorted_distinct() {
            let mult = nodes.iter().filter(|y| **y == x).count();
            let mut d = q.clone();
            let mut values = Vec::with_capacity(mult);
            for _ in 0..mult {
                values.push(d.eval(&x));
                d = d.derivative();
            }
            groups.push(HermiteGroup { node: x, values });
        }
        HermiteData { groups }
    }

    pub fn groups(&self) -> &[HermiteGroup] {
        &self.groups
    }

    fn values_at(&self, node: &Rational) -> Option<&[Rational]> {
        self.groups
            .iter()
            .find(|g| &g.node == node)
            .map(|g| g.values.as_slice())
    }
}

/// What the divided differences are taken of.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Polynomial(Polynomial),
    Hermite(HermiteData),
}

impl From<Polynomial> for Source {
    fn from(p: Polynomial) -> Self {
        Source::Polynomial(p)
    }
}

impl From<HermiteData> for Source {
    fn from(h: HermiteData) -> Self {
        Source::Hermite(h)
    }
}

/// `q[x_1, ..., x_k]` by deflation: `q_1 = q`,
/// `q_{j+1} = (q_j(x) - q_j(x_j)) / (x - x_j)`, answer `q_k(x_k)`.
pub fn divdiff_poly(q: &Polynomial, nodes: &[Rational]) -> Result<Rational> {
    let (last, init) = nodes.split_last().ok_or(Error::EmptyNodes)?;
    let reduced = init.iter().fold(q.clone(), |acc, x| acc.divide_linear(x));
    Ok(reduced.eval(last))
}

pub fn divdiff_recursive(q: &Polynomial, nodes: &[Rational]) -> Result<Rational> {
    if nodes.is_empty() {
        return Err(Error::EmptyNodes);
    }
    Ok(recursive(q, nodes))
}

fn recursive(g: &Polynomial, nodes: &[Rational]) -> Rational {
    let k = nodes.len();
    let (first, last) = (&nodes[0], &nodes[k - 1]);
    if k == 1 {
        g.eval(first)
    } else if first != last {
        (recursive(g, &nodes[1..]) - recursive(g, &nodes[..k - 1])) / (last - first)
    } else {
        with_free_node(g, &nodes[1..k - 1]).derivative().eval(first)
    }
}

/// `g[x, rest...]` as a polynomial in the free node `x`.
fn with_free_node(g: &Polynomial, rest: &[Rational]) -> Polynomial {
    let Some((last, init)) = rest.split_last() else {
        return g.clone();
    };
    // (g[rest] - g[x, init]) / (last - x); the numerator vanishes at x = last
    let numer = &Polynomial::constant(recursive(g, rest)) - &with_free_node(g, init);
    let (quot, rem) = numer.div_rem(&Polynomial::new(vec![last.clone(), int(-1)]));
    debug_assert!(rem.is_zero());
    quot
}

/// Confluent divided-difference table over the whole of `nodes`.
pub fn divdiff_hermite(data: &HermiteData, nodes: &[Rational]) -> Result<Rational> {
    let table = hermite_table(data, nodes)?;
    Ok(table.get(0, nodes.len() - 1).clone())
}

/// All differences `g[x_i, ..., x_j]` over contiguous node ranges.
#[derive(Clone, Debug)]
pub struct DifferenceTable {
    // rows[i][len - 1] = g[x_i, ..., x_{i+len-1}]
    rows: Vec<Vec<Rational>>,
}

impl DifferenceTable {
    /// `g[x_start, ..., x_end]`, zero-based and inclusive.
    pub fn get(&self, start: usize, end: usize) -> &Rational {
        &self.rows[start][end - start]
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

fn poly_table(q: &Polynomial, nodes: &[Rational]) -> DifferenceTable {
    let rows = (0..nodes.len())
        .map(|start| {
            let mut reduced = q.clone();
            nodes[start..]
                .iter()
                .map(|x| {
                    let v = reduced.eval(x);
                    reduced = reduced.divide_linear(x);
                    v
                })
                .collect()
        })
        .collect();
    DifferenceTable { rows }
}

fn hermite_table(data: &HermiteData, nodes: &[Rational]) -> Result<DifferenceTable> {
    if nodes.is_empty() {
        return Err(Error::EmptyNodes);
    }
    let seq = NodeSequence::new(nodes.to_vec());
    seq.check_grouped()?;
    for (node, mult) in seq.runs() {
        let have = data.values_at(&node).map_or(0, <[Rational]>::len);
        if have < mult {
            return Err(Error::InsufficientHermiteData {
                node,
                needed: mult,
                have,
            });
        }
    }
    let n = nodes.len();
    let mut rows: Vec<Vec<Rational>> = nodes
        .iter()
        .map(|x| vec![data.values_at(x).expect("checked above")[0].clone()])
        .collect();
    let mut factorial = int(1);
    for len in 2..=n {
        factorial *= int(len as i64 - 1);
        for i in 0..=n - len {
            let j = i + len - 1;
            let v = if nodes[i] == nodes[j] {
                // grouped, so every node in between is equal too
                &data.values_at(&nodes[i]).expect("checked above")[len - 1] / &factorial
            } else {
                (&rows[i + 1][len - 2] - &rows[i][len - 2]) / (&nodes[j] - &nodes[i])
            };
            rows[i].push(v);
        }
    }
    Ok(DifferenceTable { rows })
}

/// Differences over every contiguous node range, by the engine that fits
/// the source: deflation for polynomials, the confluent table for data.
pub fn difference_table(source: &Source, nodes: &[Rational]) -> Result<DifferenceTable> {
    if nodes.is_empty() {
        return Err(Error::EmptyNodes);
    }
    match source {
        Source::Polynomial(q) => Ok(poly_table(q, nodes)),
        Source::Hermite(data) => hermite_table(data, nodes),
    }
}

/// The Newton matrix: `Δ_ij = g[x_{n-i+1}, ..., x_j]` for `i + j >= n + 1`
/// (1-based) and zero above the anti-diagonal. The bottom row carries the
/// Newton coefficients `g[x_1]`, `g[x_1, x_2]`, ...
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaMatrix(RationalMatrix);

impl DeltaMatrix {
    pub fn matrix(&self) -> &RationalMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> RationalMatrix {
        self.0
    }

    /// `g[x_1], g[x_1, x_2], ..., g[x_1, ..., x_n]`
    pub fn newton_coefficients(&self) -> Vec<Rational> {
        let n = self.0.dim();
        (0..n).map(|j| self.0.get(n - 1, j).clone()).collect()
    }
}

pub fn delta_matrix(source: &Source, nodes: &[Rational]) -> Result<DeltaMatrix> {
    let table = difference_table(source, nodes)?;
    let n = nodes.len();
    Ok(DeltaMatrix(RationalMatrix::from_fn(n, |r, c| {
        if r + c + 1 < n {
            Rational::zero()
        } else {
            table.get(n - 1 - r, c).clone()
        }
    })))
}

/// Newton–Hermite interpolant, expanded in the monomial basis.
pub fn newton_interp(source: &Source, nodes: &[Rational]) -> Result<Polynomial> {
    let table = difference_table(source, nodes)?;
    Ok(newton_form_to_monomial(
        (0..nodes.len()).map(|j| table.get(0, j)),
        nodes,
    ))
}

/// Expands `c_1 + c_2 (x - x_1) + ... + c_n (x - x_1)...(x - x_{n-1})`.
pub fn newton_form_to_monomial<'a>(
    coeffs: impl IntoIterator<Item = &'a Rational>,
    nodes: &[Rational],
) -> Polynomial {
    let mut acc = Polynomial::zero();
    let mut basis = Polynomial::constant(int(1));
    for (c, x) in coeffs.into_iter().zip(nodes) {
        acc = &acc + &basis.scale(c);
        basis = &basis * &Polynomial::linear_factor(x);
    }
    acc
}
