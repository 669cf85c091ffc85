//! Catalan numbers of the second kind `C_n(a, b)`, the Catalan functional
//! `c_n(a, b; p)` and the series `Q(n, y, p)`, each evaluated through every
//! known closed form and cross-checked against two independent oracles:
//! adaptive half-line quadrature and power-series expansion of the generating
//! function `1/(a + sqrt(b - x))`.
//!
//! Modules, bottom up:
//!
//! - [`exact`]: big-integer and rational combinatorics, polynomials, rational functions
//! - [`hyper`]: hypergeometric series, Jacobi polynomials, Ferrers functions
//! - [`quad`]: adaptive integration on `[0, inf)`
//! - [`series`]: truncated power series and the generating functions
//! - [`catalan2`]: all representations of `C_n(a, b)`
//! - [`qfunc`]: all representations of `Q(n, y, p)`
//! - [`functional`]: all representations of `c_n(a, b; p)`
//! - [`report`], [`errata`], [`selftest`]: comparison reports used by the CLI

pub mod catalan2;
pub mod errata;
pub mod error;
pub mod exact;
pub mod functional;
pub mod hyper;
pub mod qfunc;
pub mod quad;
pub mod report;
pub mod selftest;
pub mod series;

pub use catalan2::{C2Params, Normalization};
pub use error::{Error, Result};
pub use exact::{BigInt, ExactRational, Polynomial, RationalFunction};
pub use functional::{Branch, CFParams};
pub use hyper::HypTermination;
pub use qfunc::QParams;
pub use quad::{HalflineIntegrand, QuadResult};
pub use report::{CompareReport, CompareRow, Representation, RowStatus, Scalar};
