//! Genus bounds used to prune candidates. All comparisons are done on
//! cross-multiplied integers.

use serde::{Deserialize, Serialize};

use crate::arith::{add, mul, sub};
use crate::error::{Error, Result};

/// Outcome of a bound predicate together with the exact quantities compared.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundVerdict {
    pub name: &'static str,
    pub holds: bool,
    /// The compared values. For inequalities `lhs <= rhs` (or `<`), for the
    /// a.C.M. exclusion `(pi, G(d,4))`.
    pub witness: (i64, i64),
}

/// Castelnuovo's bound for curves in `P^3`: `π ≤ (d/2 - 1)²`, checked as
/// `4π ≤ (d - 2)²`.
pub fn castelnuovo_p3(d: i64, pi: i64) -> Result<BoundVerdict> {
    if d < 3 {
        return Err(Error::domain("castelnuovo_p3", format!("needs d >= 3, got {d}")));
    }
    let lhs = mul(4, pi)?;
    let rhs = mul(sub(d, 2)?, sub(d, 2)?)?;
    Ok(BoundVerdict { name: "castelnuovo_p3", holds: lhs <= rhs, witness: (lhs, rhs) })
}

/// Residue `ρ ∈ {0,1,2,3}` with `d + ρ ≡ 0 (mod 4)`.
pub fn g_residue(d: i64) -> i64 {
    (-d).rem_euclid(4)
}

/// `G(d,4) = 1 + (d² - 3ρ(4-ρ))/8`, the maximal genus of smooth degree `d`
/// space curves off cubic surfaces. Only stated for `d > 12`.
pub fn max_genus_g(d: i64) -> Result<i64> {
    if d <= 12 {
        return Err(Error::domain("max_genus_G", format!("formula stated only for d > 12, got {d}")));
    }
    let rho = g_residue(d);
    let numerator = sub(mul(d, d)?, 3 * rho * (4 - rho))?;
    assert_eq!(numerator % 8, 0, "d² - 3ρ(4-ρ) not divisible by 8 at d={d}");
    add(1, numerator / 8)
}

/// `π < 1 + d²/8`, checked as `8(π - 1) < d²`.
pub fn strict_eighth_bound(d: i64, pi: i64) -> Result<BoundVerdict> {
    let lhs = mul(8, sub(pi, 1)?)?;
    let rhs = mul(d, d)?;
    Ok(BoundVerdict { name: "strict_eighth_bound", holds: lhs < rhs, witness: (lhs, rhs) })
}

/// `holds` means the candidate is excluded: `π = G(d,4)` forces an a.C.M.
/// hyperplane section, and a.C.M. surfaces of non-general type in `P^4` have
/// degree at most 8.
pub fn acm_exclusion(d: i64, pi: i64) -> Result<BoundVerdict> {
    if d <= 12 {
        return Err(Error::domain("acm_exclusion", format!("needs d > 12, got {d}")));
    }
    let g = max_genus_g(d)?;
    Ok(BoundVerdict { name: "acm_exclusion", holds: pi == g, witness: (pi, g) })
}
