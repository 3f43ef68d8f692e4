//! Adomian polynomials for polynomial nonlinearities.
//!
//! The crate computes Adomian polynomials of `u^N`, of products of several
//! series and of sums raised to a power, in one or two index dimensions, by
//! iterated truncated convolution ([`matrix`]). Independent generators in
//! [`reference`] cross-check it, [`solver`] uses the same kernels to build
//! exact ADM series solutions of first-order ODEs, and [`bench`] times the
//! generators against each other.
//!
//! All arithmetic is exact: coefficients are [`Rational`]s with unbounded
//! integers, and polynomials are kept in a canonical expanded form so that
//! equality is structural.
//!
//! ```
//! use adomian_core::{adomian_power_1d, PowerSpec};
//!
//! let a = adomian_power_1d(PowerSpec::new_1d(2, 3).unwrap()).unwrap();
//! let text: Vec<String> = a.grid.entries().iter().map(|p| p.to_string()).collect();
//! assert_eq!(text, ["u[0]^2", "2*u[0]*u[1]", "u[1]^2 + 2*u[0]*u[2]"]);
//! ```

pub mod bench;
pub mod deadline;
pub mod error;
pub mod grid;
pub mod json;
pub mod matrix;
pub mod monomial;
pub mod polynomial;
pub mod rational;
pub mod reference;
pub mod ring;
pub mod solver;
pub mod text;
pub mod unipoly;

pub use deadline::Deadline;
pub use error::{Error, ParseError, Result};
pub use grid::{SeriesGrid, Shape};
pub use matrix::{
    adomian_power_1d, adomian_power_2d, adomian_product, adomian_sum_power, conv_step_1d, conv_step_2d,
    AdomianResult, PowerSpec,
};
pub use monomial::{ComponentVar, Monomial};
pub use polynomial::Polynomial;
pub use rational::Rational;
pub use reference::{duan_c1, duan_c3, oracle_1d, oracle_2d};
pub use ring::SeriesRing;
pub use solver::{solve, IvProblem, SeriesSolution};
pub use text::{format_polynomial, parse_polynomial};
pub use unipoly::UniPoly;
