//! Exact-arithmetic toolkit deciding whether a bivariate polynomial
//! F(x, y) is pseudo-irreducible (balanced) as a polynomial in K[[x]][y],
//! and computing the complete equisingularity type of the germ it defines:
//! edge data, characteristic exponents, pairwise intersection multiset,
//! branch count and degree, and discriminant valuation.
//!
//! A brute-force oracle (resultants, direct blow-up transforms, branch
//! parametrizations) independently validates every output on desk-scale
//! instances.

pub mod cli;
pub mod error;
pub mod field;
pub mod input;
pub mod linalg;
pub mod newton;
pub mod oracle;
pub mod pipeline;
pub mod report;
pub mod roots;
pub mod series;
pub mod tower;

pub use cli::run_cli;
pub use error::Error;
pub use field::{BaseField, Scalar};
pub use tower::{Elem, RingView, TowerPoly, TowerRing};

/// Keeps the code snippets in the guide (book/) compiling: every chapter is
/// included as a doc-test here.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/overview.md")]
    pub struct Overview;
    #[doc = include_str!("../../../book/src/towers.md")]
    pub struct Towers;
    #[doc = include_str!("../../../book/src/newton.md")]
    pub struct Newton;
    #[doc = include_str!("../../../book/src/roots.md")]
    pub struct Roots;
    #[doc = include_str!("../../../book/src/pipeline.md")]
    pub struct Pipeline;
    #[doc = include_str!("../../../book/src/oracle.md")]
    pub struct Oracle;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
}
