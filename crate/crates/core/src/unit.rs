use std::fmt;

use crate::{Error, Result};

/// A real number in `[0, 1]`: a truth degree or a proportion argument.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Default)]
pub struct UnitValue(f64);

impl UnitValue {
    pub const ZERO: UnitValue = UnitValue(0.0);
    pub const ONE: UnitValue = UnitValue(1.0);

    /// Rejects NaN and anything outside `[0, 1]`; no clamping is applied.
    pub fn new(value: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&value) {
            Ok(UnitValue(value))
        } else {
            Err(Error::OutOfUnitRange(value))
        }
    }

    /// For results of internal arithmetic that may stray from `[0, 1]` by
    /// rounding. NaN maps to 0.
    pub(crate) fn clamped(value: f64) -> Self {
        if value.is_nan() {
            UnitValue(0.0)
        } else {
            UnitValue(value.clamp(0.0, 1.0))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }

    /// Strong negation `n(a) = 1 - a`.
    #[inline]
    pub fn complement(self) -> Self {
        UnitValue(1.0 - self.0)
    }
}

impl From<bool> for UnitValue {
    fn from(b: bool) -> Self {
        if b {
            UnitValue::ONE
        } else {
            UnitValue::ZERO
        }
    }
}

impl TryFrom<f64> for UnitValue {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        UnitValue::new(value)
    }
}

impl From<UnitValue> for f64 {
    fn from(u: UnitValue) -> f64 {
        u.0
    }
}

impl fmt::Display for UnitValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range() {
        assert!(UnitValue::new(-1e-300).is_err());
        assert!(UnitValue::new(1.0 + f64::EPSILON).is_err());
        assert!(UnitValue::new(f64::NAN).is_err());
        assert!(UnitValue::new(0.0).is_ok());
        assert!(UnitValue::new(1.0).is_ok());
    }

    #[test]
    fn clamped_absorbs_rounding() {
        assert_eq!(UnitValue::clamped(-1e-17).get(), 0.0);
        assert_eq!(UnitValue::clamped(1.0 + 1e-16).get(), 1.0);
        assert_eq!(UnitValue::clamped(f64::NAN).get(), 0.0);
    }
}
