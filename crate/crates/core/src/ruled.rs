//! Numerical tables for `a`-ruled rational surfaces in `P^4`.
//!
//! For `a >= 3` with degenerate general fiber, a hyperplane section splits
//! as a fiber plus a plane curve of degree `d - a`, which fixes the sectional
//! genus; Castelnuovo's bound on that genus then confines `d` to an interval.
//! Scrolls and conic bundles (`a <= 2`) come from the known classifications.

use serde::Serialize;

use crate::arith::{add, mul, sub, sum};
use crate::bounds::{acm_exclusion, castelnuovo_p3, max_genus_g, strict_eighth_bound};
use crate::error::{Error, Result};
use crate::quadratic::ConvexQuadratic;
use crate::reason::Reason;

/// Degree bound for quartic rulings whose general fiber spans `P^4`: such
/// surfaces are non-special, and non-special rational surfaces in `P^4`
/// have `d <= 9`. Imported as a number; the cohomological argument is not
/// reproduced.
pub const NONDEGENERATE_FIBER_MAX_DEGREE: i64 = 9;

/// Above this degree the closed form for `G(d,4)` and the a.C.M. argument
/// become available.
pub const LARGE_DEGREE_THRESHOLD: i64 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Admissible,
    Excluded,
}

/// Which argument produced a record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// Scrolls and conic bundles, taken from the literature.
    KnownClassification,
    /// General fiber lies in a hyperplane.
    DegenerateFiber,
    /// General fiber spans `P^4`. The record's `d` is an upper bound and
    /// `pi` is unknown.
    NondegenerateFiber,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateRecord {
    pub a: i64,
    pub d: i64,
    pub pi: Option<i64>,
    pub branch: Branch,
    pub verdict: Verdict,
    pub reasons: Vec<Reason>,
}

fn check_a(op: &'static str, a: i64) -> Result<()> {
    if a < 3 {
        return Err(Error::domain(op, format!("needs a >= 3, got {a}")));
    }
    Ok(())
}

/// `π = (d-a-1)(d-a-2)/2 + a - 1`: genus of a fiber of degree `a` glued in
/// `a` points to a plane curve of degree `d - a`.
///
/// Meaningful for `d >= a + 1`; the polynomial is evaluated for any `d`.
pub fn corollary3_genus(d: i64, a: i64) -> Result<i64> {
    check_a("corollary3_genus", a)?;
    let x = sub(sub(d, a)?, 1)?;
    let plane = mul(x, sub(x, 1)?)? / 2;
    sum([plane, a, -1])
}

/// `d² - 2(1+2a)d + 2a² + 10a - 4`, i.e. Castelnuovo's bound applied to
/// [`corollary3_genus`].
fn castelnuovo_quadratic(a: i64) -> Result<ConvexQuadratic> {
    ConvexQuadratic::new(1, -mul(2, add(1, mul(2, a)?)?)?, sum([mul(mul(2, a)?, a)?, mul(10, a)?, -4])?)
}

/// `3d² - 2(4a+6)d + 4a² + 20a - 8`, i.e. `π < 1 + d²/8` applied to
/// [`corollary3_genus`].
fn eighth_bound_quadratic(a: i64) -> Result<ConvexQuadratic> {
    ConvexQuadratic::new(3, -mul(2, add(mul(4, a)?, 6)?)?, sum([mul(mul(4, a)?, a)?, mul(20, a)?, -8])?)
}

/// Degrees allowed by Castelnuovo's bound for a degenerate-fiber `a`-ruling.
pub fn corollary3_degree_range(a: i64) -> Result<Vec<i64>> {
    check_a("corollary3_degree_range", a)?;
    castelnuovo_quadratic(a)?.sublevel_set(false)
}

/// Degrees allowed by `π < 1 + d²/8` (strict). Only informative when
/// `d > 12`, where that bound is known to hold.
pub fn corollary3_refined_range(a: i64) -> Result<Vec<i64>> {
    check_a("corollary3_refined_range", a)?;
    eighth_bound_quadratic(a)?.sublevel_set(true)
}

fn known(a: i64, d: i64, pi: i64, tag: &str, detail: &str) -> CandidateRecord {
    CandidateRecord {
        a,
        d,
        pi: Some(pi),
        branch: Branch::KnownClassification,
        verdict: Verdict::Admissible,
        reasons: vec![Reason::new(tag, detail)],
    }
}

fn degenerate_fiber_record(a: i64, d: i64) -> Result<CandidateRecord> {
    let pi = corollary3_genus(d, a)?;
    let mut reasons = Vec::new();
    let mut excluded = false;

    if d <= a {
        excluded = true;
        reasons.push(Reason::new(
            "residual_plane_curve",
            format!("residual plane curve degree d-a = {} must be positive", d - a),
        ));
    }

    let castelnuovo = castelnuovo_p3(d, pi)?;
    excluded |= !castelnuovo.holds;
    reasons.push(Reason::from_bound(&castelnuovo, "<="));

    if d > LARGE_DEGREE_THRESHOLD {
        let g = max_genus_g(d)?;
        if pi > g {
            excluded = true;
            reasons.push(Reason::new("max_genus_G", format!("fails: pi = {pi} > G(d,4) = {g}")));
        }
        let eighth = strict_eighth_bound(d, pi)?;
        excluded |= !eighth.holds;
        reasons.push(Reason::from_bound(&eighth, "<"));
        let acm = acm_exclusion(d, pi)?;
        if acm.holds {
            excluded = true;
            reasons.push(Reason::new(
                "acm_exclusion",
                format!("pi = G(d,4) = {g} forces an a.C.M. surface of degree > 8"),
            ));
        }
    }

    Ok(CandidateRecord {
        a,
        d,
        pi: Some(pi),
        branch: Branch::DegenerateFiber,
        verdict: if excluded { Verdict::Excluded } else { Verdict::Admissible },
        reasons,
    })
}

/// Numerical possibilities for smooth rational `a`-ruled surfaces in `P^4`.
///
/// `a = 1, 2` are the scroll and conic-bundle classifications. For `a >= 3`
/// the rows follow the degenerate-fiber genus formula over the Castelnuovo
/// interval. For quartic rulings an extra row records the degree bound of the
/// non-degenerate branch.
pub fn classify_ruled(a: i64) -> Result<Vec<CandidateRecord>> {
    match a {
        i64::MIN..=0 => Err(Error::domain("classify_ruled", format!("needs a >= 1, got {a}"))),
        1 => Ok(vec![known(1, 3, 0, "scroll", "a smooth rational scroll in P^4 is a cubic scroll")]),
        2 => Ok(vec![
            known(2, 4, 1, "conic_bundle", "Del Pezzo surface; genus from external classification"),
            known(2, 5, 2, "conic_bundle", "Castelnuovo surface; genus from external classification"),
        ]),
        _ => {
            let mut records = corollary3_degree_range(a)?
                .into_iter()
                .map(|d| degenerate_fiber_record(a, d))
                .collect::<Result<Vec<_>>>()?;
            if a == 4 {
                records.push(CandidateRecord {
                    a,
                    d: NONDEGENERATE_FIBER_MAX_DEGREE,
                    pi: None,
                    branch: Branch::NondegenerateFiber,
                    verdict: Verdict::Admissible,
                    reasons: vec![Reason::new(
                        "nondegenerate_fiber",
                        format!("fibers span P^4: h^1(O_S(1)) = 0, so d <= {NONDEGENERATE_FIBER_MAX_DEGREE}"),
                    )],
                });
            }
            Ok(records)
        }
    }
}

/// Largest degree over the admissible records.
pub fn max_admissible_degree(records: &[CandidateRecord]) -> Option<i64> {
    records.iter().filter(|r| r.verdict == Verdict::Admissible).map(|r| r.d).max()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_formula() {
        assert_eq!(corollary3_genus(9, 3), Ok(12));
        assert_eq!(corollary3_genus(5, 3), Ok(2));
        for a in 3..=10 {
            assert_eq!(corollary3_genus(a + 1, a), Ok(a - 1));
        }
        assert!(corollary3_genus(5, 2).is_err());
    }

    #[test]
    fn degree_ranges() {
        assert_eq!(corollary3_degree_range(3).unwrap(), vec![5, 6, 7, 8, 9]);
        assert_eq!(corollary3_degree_range(4).unwrap(), (6..=12).collect::<Vec<_>>());
        let q = castelnuovo_quadratic(3).unwrap();
        assert!(q.eval(4).unwrap() > 0);
        assert!(q.eval(10).unwrap() > 0);
        assert!(corollary3_degree_range(2).is_err());
        assert!(corollary3_refined_range(1).is_err());
    }

    #[test]
    fn refined_range_a7() {
        // 3d² - 2(4·7 + 6)d + 4·49 + 140 - 8 = 3d² - 68d + 328
        let refined = corollary3_refined_range(7).unwrap();
        assert_eq!(refined, (7..=15).collect::<Vec<_>>());
        for d in 6..=20 {
            let v = 3 * d * d - 68 * d + 328;
            assert_eq!(refined.contains(&d), v < 0, "d={d}");
        }
    }

    #[test]
    fn refined_within_castelnuovo_above_twelve() {
        for a in 3..=12 {
            let wide = corollary3_degree_range(a).unwrap();
            for d in corollary3_refined_range(a).unwrap() {
                if d > LARGE_DEGREE_THRESHOLD {
                    assert!(wide.contains(&d), "a={a} d={d}");
                }
            }
        }
    }

    #[test]
    fn cubic_table() {
        let rows: Vec<_> =
            classify_ruled(3).unwrap().into_iter().map(|r| (r.d, r.pi.unwrap(), r.verdict)).collect();
        let expected: Vec<_> = [(5, 2), (6, 3), (7, 5), (8, 8), (9, 12)]
            .into_iter()
            .map(|(d, p)| (d, p, Verdict::Admissible))
            .collect();
        assert_eq!(rows, expected);
    }

    #[test]
    fn low_a_tables() {
        let scroll = classify_ruled(1).unwrap();
        assert_eq!(scroll.len(), 1);
        assert_eq!((scroll[0].d, scroll[0].pi), (3, Some(0)));
        let conics: Vec<_> = classify_ruled(2).unwrap().iter().map(|r| (r.d, r.pi)).collect();
        assert_eq!(conics, vec![(4, Some(1)), (5, Some(2))]);
        assert!(classify_ruled(0).is_err());
    }

    #[test]
    fn quartic_bound() {
        let records = classify_ruled(4).unwrap();
        assert_eq!(records.iter().map(|r| r.d).max(), Some(12));
        assert_eq!(max_admissible_degree(&records), Some(12));
        let nondeg: Vec<_> = records.iter().filter(|r| r.branch == Branch::NondegenerateFiber).collect();
        assert_eq!(nondeg.len(), 1);
        assert_eq!(nondeg[0].d, NONDEGENERATE_FIBER_MAX_DEGREE);
    }

    #[test]
    fn excluded_rows_carry_reasons() {
        for a in 1..=30 {
            for r in classify_ruled(a).unwrap() {
                if r.verdict == Verdict::Excluded {
                    assert!(!r.reasons.is_empty());
                }
                if r.branch == Branch::DegenerateFiber {
                    let d = r.d;
                    assert_eq!(r.pi, Some((d - a - 1) * (d - a - 2) / 2 + a - 1));
                }
            }
        }
    }

    #[test]
    fn large_degree_rows_pruned() {
        // a = 7: Castelnuovo allows 8..=22, the eighth bound keeps d <= 15.
        let records = classify_ruled(7).unwrap();
        for r in &records {
            let refined = corollary3_refined_range(7).unwrap();
            if r.d > 12 {
                assert_eq!(r.verdict == Verdict::Admissible, refined.contains(&r.d), "d={}", r.d);
            }
        }
    }
}
