//! Reductions between hidden subgroup, hidden symmetry subgroup and hidden
//! polynomial problems over small finite fields, with brute-force solvers
//! that close every reduction into a checkable pipeline.
//!
//! ```
//! use hssp_lab::ff::Field;
//!
//! let f9 = Field::new(3, 2)?;
//! let x = f9.element(3)?;
//! assert_eq!(f9.mul(x, x).value(), 2);
//! # Ok::<(), hssp_lab::Error>(())
//! ```

pub mod acceptance;
pub mod base;
pub mod error;
pub mod ff;
pub mod group;
pub mod oracle;
pub mod reduce;
pub mod solve;
pub mod vandermonde;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/fields-and-groups.md")]
    mod fields_and_groups {}
    #[doc = include_str!("../../../book/src/oracles.md")]
    mod oracles {}
    #[doc = include_str!("../../../book/src/strong-bases.md")]
    mod strong_bases {}
    #[doc = include_str!("../../../book/src/reductions.md")]
    mod reductions {}
    #[doc = include_str!("../../../book/src/quadratic.md")]
    mod quadratic {}
    #[doc = include_str!("../../../book/src/vandermonde.md")]
    mod vandermonde {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
