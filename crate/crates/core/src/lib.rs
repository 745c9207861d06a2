//! Triangular norms and analogical proportions.
//!
//! The crate covers four layers:
//!
//! - [`tnorm`]: t-norms, dual t-conorms, additive generators, ordinal sums.
//! - [`frank`]: Frank's one-parameter family, evaluated stably across `p`.
//! - [`boolean`] and [`graded`]: the quaternary "a is to b as c is to d"
//!   relation on Boolean values and on degrees in `[0, 1]`.
//! - [`means`] and [`solver`]: the power-mean variant of the relation and the
//!   one-dimensional searches (over the fourth argument, over `p`, over `r`).
//!
//! The [`cli`] module is the front-end used by the `tnorm-analogy` binary.

pub mod boolean;
pub mod cli;
mod error;
pub mod frank;
pub mod graded;
pub mod means;
pub mod solver;
pub mod tnorm;
mod unit;

pub use error::{Error, Result};
pub use frank::FrankParam;
pub use graded::{ProportionVerdict, Quadruple, Tolerance};
pub use means::MeanParam;
pub use tnorm::{GeneratorValue, NormClass, OrdinalSegment, OrdinalSum, TNormKind};
pub use unit::UnitValue;
