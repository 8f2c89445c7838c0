//! Concrete realization of the pinning of `SL_n` over rational functions.

mod charts;
mod matrix;
mod minors;

pub use charts::{
    chart_g, chart_gmodu, chart_u, chart_u_minus, generator, iota, lift, longest_lift, sl_datum, symbols, torus_point,
    x, y, GeneratorKind, LiftStyle, Sign, TorusPoint, Variant,
};
pub use matrix::GroupMatrix;
pub use minors::{gauss_decompose, gen_minor, twist, MinorSpec};
