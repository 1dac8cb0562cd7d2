//! Partial injections of `{1..n}` and the symmetric inverse semigroup IS_n.
//!
//! Elements multiply left to right: `(a·b)(x) = b(a(x))`.

pub mod arith;
pub mod asymptotics;
pub mod bijections;
pub mod chart;
pub mod cli;
pub mod counting;
pub mod element;
pub mod error;
pub mod json;
pub mod random_products;

pub use chart::{parse_chart, render_chart, ChartDecomposition};
pub use element::{ChainType, OrbitEnd, OrbitTrace, PartialInjection, Profile};
pub use error::{Error, Result};
