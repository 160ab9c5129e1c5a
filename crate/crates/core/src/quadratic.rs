//! Integer points where a convex quadratic is non-positive (or negative),
//! found by walking outward from the vertex. No square roots involved.

use crate::arith::{add, mul, sum};
use crate::error::{Error, Result};

/// `q(x) = c2·x² + c1·x + c0` with `c2 > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConvexQuadratic {
    pub c2: i64,
    pub c1: i64,
    pub c0: i64,
}

impl ConvexQuadratic {
    pub fn new(c2: i64, c1: i64, c0: i64) -> Result<Self> {
        if c2 <= 0 {
            return Err(Error::domain("ConvexQuadratic", "leading coefficient must be positive"));
        }
        Ok(Self { c2, c1, c0 })
    }

    pub fn eval(&self, x: i64) -> Result<i64> {
        sum([mul(mul(self.c2, x)?, x)?, mul(self.c1, x)?, self.c0])
    }

    /// `floor(-c1 / 2c2)`; the integer minimum sits here or one step right.
    pub fn vertex_floor(&self) -> i64 {
        (-self.c1).div_euclid(2 * self.c2)
    }

    /// Minimum of `q` over the integers.
    pub fn integer_min(&self) -> Result<i64> {
        let v = self.vertex_floor();
        Ok(self.eval(v)?.min(self.eval(add(v, 1)?)?))
    }

    /// All integers with `q(x) <= 0` (`strict = false`) or `q(x) < 0`,
    /// in increasing order.
    pub fn sublevel_set(&self, strict: bool) -> Result<Vec<i64>> {
        let accept = |x: i64| -> Result<bool> {
            let v = self.eval(x)?;
            Ok(if strict { v < 0 } else { v <= 0 })
        };
        let v = self.vertex_floor();
        let mut lo = v;
        let mut hi = v;
        // Convexity: if neither floor nor ceil of the vertex qualifies,
        // nothing does.
        if !accept(v)? {
            let right = add(v, 1)?;
            if !accept(right)? {
                return Ok(Vec::new());
            }
            lo = right;
            hi = right;
        }
        while accept(lo - 1)? {
            lo -= 1;
        }
        while accept(hi + 1)? {
            hi += 1;
        }
        Ok((lo..=hi).collect())
    }
}
