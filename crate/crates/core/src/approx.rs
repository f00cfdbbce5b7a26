use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

/// A numeric result paired with an estimated absolute error bound.
///
/// Sums and differences add their error estimates; scaling by an exact
/// factor scales the estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ApproxValue {
    pub value: f64,
    pub abs_err: f64,
}

impl ApproxValue {
    pub fn new(value: f64, abs_err: f64) -> Self {
        debug_assert!(abs_err >= 0.0 || abs_err.is_nan());
        Self {
            value,
            abs_err: abs_err.abs(),
        }
    }

    /// A value known up to rounding of the final result.
    pub fn exact(value: f64) -> Self {
        Self::new(value, f64::EPSILON * value.abs())
    }

    /// A closed-form expression assembled from table constants; `magnitude`
    /// is the sum of the absolute values of its terms.
    pub fn closed_form(value: f64, magnitude: f64) -> Self {
        Self::new(value, 16.0 * f64::EPSILON * magnitude.max(value.abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.value.is_finite() && self.abs_err.is_finite()
    }

    /// Widens the error bound by `extra`.
    pub fn widen(self, extra: f64) -> Self {
        Self::new(self.value, self.abs_err + extra.abs())
    }

    pub fn square(self) -> Self {
        self * self
    }
}

impl From<f64> for ApproxValue {
    fn from(value: f64) -> Self {
        ApproxValue::exact(value)
    }
}

impl Add for ApproxValue {
    type Output = ApproxValue;
    fn add(self, rhs: ApproxValue) -> ApproxValue {
        ApproxValue::new(self.value + rhs.value, self.abs_err + rhs.abs_err)
    }
}

impl Sub for ApproxValue {
    type Output = ApproxValue;
    fn sub(self, rhs: ApproxValue) -> ApproxValue {
        ApproxValue::new(self.value - rhs.value, self.abs_err + rhs.abs_err)
    }
}

impl Add<f64> for ApproxValue {
    type Output = ApproxValue;
    fn add(self, rhs: f64) -> ApproxValue {
        self + ApproxValue::exact(rhs)
    }
}

impl Sub<f64> for ApproxValue {
    type Output = ApproxValue;
    fn sub(self, rhs: f64) -> ApproxValue {
        self - ApproxValue::exact(rhs)
    }
}

impl Neg for ApproxValue {
    type Output = ApproxValue;
    fn neg(self) -> ApproxValue {
        ApproxValue::new(-self.value, self.abs_err)
    }
}

impl Mul<f64> for ApproxValue {
    type Output = ApproxValue;
    fn mul(self, rhs: f64) -> ApproxValue {
        ApproxValue::new(self.value * rhs, self.abs_err * rhs.abs())
    }
}

impl Mul for ApproxValue {
    type Output = ApproxValue;
    fn mul(self, rhs: ApproxValue) -> ApproxValue {
        let err = self.value.abs() * rhs.abs_err
            + rhs.value.abs() * self.abs_err
            + self.abs_err * rhs.abs_err;
        ApproxValue::new(self.value * rhs.value, err)
    }
}

impl std::iter::Sum for ApproxValue {
    fn sum<I: Iterator<Item = ApproxValue>>(iter: I) -> ApproxValue {
        let mut acc = crate::sum::Accumulator::new();
        let mut err = 0.0;
        for v in iter {
            acc.add(v.value);
            err += v.abs_err;
        }
        ApproxValue::new(acc.value(), err)
    }
}

impl fmt::Display for ApproxValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.15} ± {:.1e}", self.value, self.abs_err)
    }
}
