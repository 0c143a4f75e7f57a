//! Tannaka–Krein duality between Yetter–Drinfeld algebras over finite quantum
//! groups and centrally pointed bimodule categories, computed concretely.

pub mod algebra;
pub mod cqg;
pub mod dualeng;
pub mod eqmod;
pub mod error;
pub mod numkernel;
pub mod report;
pub mod suites;
pub mod tensorcat;
pub mod ydalg;

pub use error::{Error, Result};
