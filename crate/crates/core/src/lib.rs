pub mod catalog;
pub mod cli;
pub mod corpus;
pub mod double_extension;
pub mod error;
pub mod levi_civita;
pub mod linalg;
pub mod metric_lie;
pub mod structure;

pub use error::{Error, Result};
