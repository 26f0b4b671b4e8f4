//! File formats, reports, parallel oracles and the experiment harness built on
//! [`hlnet_core`].
//!
//! - [`recipe_file`]: JSON recipe documents.
//! - [`edgelist`]: plain-text graph, cut and partition exports.
//! - [`report`]: CSV / JSON / text report rows.
//! - [`parallel`]: rayon-backed oracle searches with a wall-clock budget.
//! - [`suite`]: the property suite over the formulas, constructions and oracles.
//! - [`cli`]: the `hlnet` command line.

pub mod cli;
pub mod edgelist;
pub mod error;
pub mod parallel;
pub mod recipe_file;
pub mod report;
pub mod suite;

pub use error::{Error, Result};
