//! Exact classical and quantum Schubert calculus on minuscule and
//! cominuscule homogeneous spaces `G/P`.
//!
//! Start from [`Space::parse`], e.g. `Space::parse("E6/P1")`.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod data;
pub mod error;
pub mod export;
pub mod naming;
pub mod presentation;
pub mod quantum;
pub mod quiver;
pub mod root_system;
pub mod space;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use space::Space;
pub use weyl::ClassId;
