//! Checked `i64` helpers. Every kernel routes its arithmetic through these so
//! that overflow surfaces as [`Error::Overflow`] instead of wrapping.

use crate::error::{Error, Result};

#[inline]
pub(crate) fn add(x: i64, y: i64) -> Result<i64> {
    x.checked_add(y).ok_or(Error::Overflow("addition"))
}

#[inline]
pub(crate) fn sub(x: i64, y: i64) -> Result<i64> {
    x.checked_sub(y).ok_or(Error::Overflow("subtraction"))
}

#[inline]
pub(crate) fn mul(x: i64, y: i64) -> Result<i64> {
    x.checked_mul(y).ok_or(Error::Overflow("multiplication"))
}

#[inline]
pub(crate) fn mul3(x: i64, y: i64, z: i64) -> Result<i64> {
    mul(mul(x, y)?, z)
}

/// Sum of signed terms, each already computed.
pub(crate) fn sum<I: IntoIterator<Item = i64>>(terms: I) -> Result<i64> {
    terms.into_iter().try_fold(0i64, add)
}

/// Exact quotient `x / y`, or `None` when `y` does not divide `x`.
#[inline]
pub(crate) fn exact_div(x: i64, y: i64) -> Option<i64> {
    if y == 0 || x.checked_rem(y)? != 0 {
        None
    } else {
        x.checked_div(y)
    }
}

pub(crate) fn gcd(mut x: i64, mut y: i64) -> i64 {
    x = x.abs();
    y = y.abs();
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_is_an_error() {
        assert_eq!(mul(i64::MAX, 2), Err(Error::Overflow("multiplication")));
        assert_eq!(add(i64::MAX, 1), Err(Error::Overflow("addition")));
        assert_eq!(sub(i64::MIN, 1), Err(Error::Overflow("subtraction")));
    }

    #[test]
    fn exact_division() {
        assert_eq!(exact_div(256, 32), Some(8));
        assert_eq!(exact_div(184, 20), None);
        assert_eq!(exact_div(-6, 3), Some(-2));
        assert_eq!(exact_div(1, 0), None);
        assert_eq!(exact_div(i64::MIN, -1), None);
    }

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(32, 112), 16);
        assert_eq!(gcd(-12, 18), 6);
        assert_eq!(gcd(0, 5), 5);
    }
}
