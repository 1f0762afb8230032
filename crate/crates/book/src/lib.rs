//! The guide in `book/` and the README, compiled so their listings run as
//! doctests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}

#[doc = include_str!("../../../book/src/bezout_matrix.md")]
pub mod bezout_matrix {}

#[doc = include_str!("../../../book/src/divided_differences.md")]
pub mod divided_differences {}

#[doc = include_str!("../../../book/src/trailing_minors.md")]
pub mod trailing_minors {}

#[doc = include_str!("../../../book/src/interlacing.md")]
pub mod interlacing {}

#[doc = include_str!("../../../book/src/command_line.md")]
pub mod command_line {}

#[doc = include_str!("../../../README.md")]
pub mod readme {}
