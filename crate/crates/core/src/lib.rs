//! Crossed modules on finite categories and the 2-categories they induce.
//!
//! The crate is organised bottom-up:
//!
//! - [`fincat`]: finite categories as composition tables, functors, coslices.
//! - [`groupkit`]: finite groups, homomorphisms, words and presentations.
//! - [`xmod`]: crossed modules, the conjugation module, isotropy groups.
//! - [`twocat`]: the 2-category `C_G` and its structural validators.
//! - [`limits2d`]: one- and two-dimensional (co)limit searches.
//! - [`grpcolim`]: presentation-level coinserters, coequifiers and tensors in groups.
//! - [`xfun`]: morphisms of crossed modules and the canonical 2-functor to groups.
//! - [`cli`]: instance files, reports and command dispatch.

pub mod budget;
pub mod cli;
pub mod error;
pub mod fincat;
pub mod fixtures;
pub mod groupkit;
pub mod grpcolim;
pub mod limits2d;
pub mod xmod;
pub mod report;
pub mod twocat;
pub mod xfun;

pub use budget::Budget;
pub use error::{Error, Result};
pub use report::{ValidationReport, Violation};
