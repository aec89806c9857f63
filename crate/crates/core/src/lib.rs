pub mod banded;
pub mod error;
pub mod exact;
pub mod heat;
pub mod hopf_cole;
pub mod metrics;
pub mod pipeline;
pub mod problems;
pub mod published;
pub mod quadrature;
pub mod rational;
pub mod roots;
pub mod scheme;
pub mod spatial;
pub mod studies;

pub use error::{Error, Result};
