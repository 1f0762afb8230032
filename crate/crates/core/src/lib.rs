//! Exact Bezout matrices, Newton–Hermite divided-difference matrices, and
//! the relationship between their trailing principal minors.
//!
//! For `P(x) = p_n (x - x_1)...(x - x_n)` and `deg Q <= n`, every trailing
//! principal minor of the Bezout matrix `B(P, Q)` equals `p_n^s` times the
//! trailing minor of the same size `s` of `Δ(Q)`, the anti-triangular matrix
//! of divided differences of `Q` at the nodes `x_1..x_n`. Roots may repeat
//! and may be shared with `Q`. When those minors are all positive or
//! strictly alternate in sign, the Newton interpolant of the data has real,
//! distinct roots separated by the nodes.
//!
//! All arithmetic is exact over the rationals.
//!
//! ```
//! use bezoutiant::{bezout, delta_matrix, NodeSequence, Polynomial};
//!
//! let p = Polynomial::from_ints(&[-48, 44, -12, 1]); // (x-2)(x-4)(x-6)
//! let q = Polynomial::from_ints(&[-15, 23, -9, 1]); // (x-1)(x-3)(x-5)
//! let nodes = NodeSequence::from_ints(&[2, 4, 6]);
//!
//! let b = bezout(&p, &q)?;
//! let delta = delta_matrix(&q.into(), &nodes)?;
//! assert_eq!(b.trailing_minors(), delta.matrix().trailing_minors());
//! # Ok::<(), bezoutiant::Error>(())
//! ```

pub mod analysis;
pub mod bezout;
pub mod cli;
pub mod divdiff;
mod error;
pub mod families;
pub mod linalg;
pub mod poly;
pub mod scalar;

pub use analysis::{
    classify_pattern, interlace_verdict, isolate_roots, minor_identity_check, sturm_chain,
    subset_sum_minor, InterlaceReport, Pattern, SignPattern, Verdict,
};
pub use bezout::{
    bezout, bezout_det_identity, bezout_via_bilinear, bezout_via_product, BezoutInput,
};
pub use divdiff::{
    delta_matrix, divdiff_hermite, divdiff_poly, divdiff_recursive, newton_interp, DeltaMatrix,
    HermiteData, HermiteGroup, NodeSequence, Source,
};
pub use error::{Error, Result};
pub use linalg::{MinorSequence, RationalMatrix};
pub use poly::{Polynomial, RootForm};
pub use scalar::Rational;
