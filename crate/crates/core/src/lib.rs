//! Exact total dominator colorings of small graphs.
//!
//! A total dominator coloring is a proper coloring in which every vertex is adjacent to all
//! vertices of some color class. This crate computes the least number of colors such a
//! coloring needs, χ_d^t, together with canonical witnesses, and classifies graphs by
//! whether an optimal coloring can have a class with an empty private neighborhood.
//!
//! ```
//! use tdc::classifier::{classify, ClassifyConfig, GraphClass};
//! use tdc::graph::{mycielskian, path};
//!
//! let c5 = mycielskian(&path(2)?);
//! let verdict = classify(&c5, &ClassifyConfig::default())?;
//! assert_eq!((verdict.chi_d_t, verdict.class), (4, GraphClass::One));
//! # Ok::<(), tdc::Error>(())
//! ```

pub mod classifier;
pub mod cli;
pub mod coloring;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod solver;

pub use error::{Error, Result};

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/introduction.md")]
pub mod book_introduction {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/graphs.md")]
pub mod book_graphs {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/colorings.md")]
pub mod book_colorings {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/solving.md")]
pub mod book_solving {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/classes.md")]
pub mod book_classes {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/audit.md")]
pub mod book_audit {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
pub mod book_cli {}
#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
pub mod readme {}
