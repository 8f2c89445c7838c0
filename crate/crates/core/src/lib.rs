//! Birational charts on `SL_n` and its unipotent and flag-type quotients,
//! with exact membership tests for their coordinate rings.

pub mod arith;
pub mod braid;
pub mod error;
pub mod membership;
pub mod roots;
pub mod sample;
pub mod sl;

pub use error::{Error, Result};
