//! Brute-force enumeration of `(a, b, n, r)` boxes, filtered only by the
//! three relations and `π < 1 + d²/8`. Shares no formula with the sieve in
//! [`crate::fn_systems`] beyond the relations themselves, so agreement of the
//! two is a real cross-check.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fn_systems::{lemma9_candidates, SIEVE_A_RANGE};
use crate::lattice::{canonical_class, intersect, DivisorClass, SurfaceModel};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchBox {
    pub a: RangeInclusive<i64>,
    pub b: RangeInclusive<i64>,
    pub n: RangeInclusive<i64>,
    pub r: RangeInclusive<i64>,
    pub d_min: i64,
}

impl Default for SearchBox {
    fn default() -> Self {
        Self { a: 3..=9, b: 0..=60, n: 0..=6, r: 0..=120, d_min: 13 }
    }
}

impl SearchBox {
    pub fn with_d_min(mut self, d_min: i64) -> Self {
        self.d_min = d_min;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if *self.n.start() < 0 || *self.r.start() < 0 {
            return Err(Error::domain("SearchBox", "n and r ranges must be non-negative"));
        }
        Ok(())
    }

    fn is_empty(&self) -> bool {
        self.a.is_empty() || self.b.is_empty() || self.n.is_empty() || self.r.is_empty()
    }

    /// Faces where a passing tuple means the box may be hiding solutions.
    /// `n` is excluded: every family found is infinite in `n`, and the
    /// `(a, d)` projection does not depend on it. Lower faces count only
    /// above the natural minimum (`b >= 1` because `d > 0`, `r >= 0`).
    fn clipping_faces(&self, t: &OracleTuple) -> Vec<&'static str> {
        let mut faces = Vec::new();
        if t.b == *self.b.end() {
            faces.push("b_max");
        }
        if t.b == *self.b.start() && *self.b.start() > 1 {
            faces.push("b_min");
        }
        if t.r == *self.r.end() {
            faces.push("r_max");
        }
        if t.r == *self.r.start() && *self.r.start() > 0 {
            faces.push("r_min");
        }
        faces
    }
}

/// A class `aC_0 + bf - ΣE_i` on `F_n` passing every filter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct OracleTuple {
    pub a: i64,
    pub b: i64,
    pub n: i64,
    pub r: i64,
    pub d: i64,
    pub pi: i64,
}

/// Plain-`i64` evaluation of the relations straight from their definitions.
/// Box coordinates are small; overflow is checked once per box instead.
fn test_tuple(a: i64, b: i64, n: i64, r: i64, d_min: i64) -> Option<OracleTuple> {
    let d = -a * a * n + 2 * a * b - r;
    if d < d_min {
        return None;
    }
    // H·K with K = -2C_0 - (n+2)f + ΣE_i and H = aC_0 + bf - ΣE_i.
    let hk = 2 * a * n - a * (n + 2) - 2 * b + r;
    let two_pi_minus_two = d + hk;
    debug_assert_eq!(two_pi_minus_two.rem_euclid(2), 0);
    let pi_minus_one = two_pi_minus_two / 2;
    // d(d-5) - 10(π-1) + 12χ = 2K², K² = 8 - r, χ = 1
    if d * (d - 5) - 10 * pi_minus_one + 12 != 2 * (8 - r) {
        return None;
    }
    if 8 * pi_minus_one >= d * d {
        return None;
    }
    Some(OracleTuple { a, b, n, r, d, pi: pi_minus_one + 1 })
}

fn magnitude_ok(bx: &SearchBox) -> bool {
    let m = |r: &RangeInclusive<i64>| r.start().unsigned_abs().max(r.end().unsigned_abs());
    let bound =
        [m(&bx.a), m(&bx.b), m(&bx.n), m(&bx.r), bx.d_min.unsigned_abs()].into_iter().max().unwrap_or(0);
    // Largest product formed is about 10·bound³.
    bound < 1 << 18
}

/// Every tuple in `bx` satisfying the relations, `d >= d_min`, and the strict
/// eighth bound, in `(a, b, n, r)` order.
pub fn oracle_enumerate(bx: &SearchBox) -> Result<BTreeSet<OracleTuple>> {
    bx.validate()?;
    if bx.is_empty() {
        return Ok(BTreeSet::new());
    }
    if !magnitude_ok(bx) {
        return Err(Error::Overflow("oracle box too large for i64 evaluation"));
    }
    let a_values: Vec<i64> = bx.a.clone().collect();
    let found: Vec<Vec<OracleTuple>> = a_values
        .par_iter()
        .map(|&a| {
            let mut out = Vec::new();
            for b in bx.b.clone() {
                for n in bx.n.clone() {
                    for r in bx.r.clone() {
                        if let Some(t) = test_tuple(a, b, n, r, bx.d_min) {
                            out.push(t);
                        }
                    }
                }
            }
            out
        })
        .collect();
    Ok(found.into_iter().flatten().collect())
}

/// Distinct `(a, d)` pairs.
pub fn project_ad(tuples: &BTreeSet<OracleTuple>) -> BTreeSet<(i64, i64)> {
    tuples.iter().map(|t| (t.a, t.d)).collect()
}

/// Recomputes a tuple's degree and genus on the Picard lattice.
pub fn lattice_check(t: &OracleTuple) -> Result<bool> {
    let r = usize::try_from(t.r).map_err(|_| Error::domain("lattice_check", "negative r"))?;
    let n = u32::try_from(t.n).map_err(|_| Error::domain("lattice_check", "n out of range"))?;
    let s = SurfaceModel::new(n, r);
    let h = DivisorClass::simple_base_points(t.a, t.b, r);
    let k = canonical_class(&s);
    let hh = intersect(&h, &h, &s)?;
    let hk = intersect(&h, &k, &s)?;
    Ok(hh == t.d && hh + hk == 2 * t.pi - 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClipWarning {
    pub tuple: OracleTuple,
    pub faces: Vec<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossValidation {
    pub status: Status,
    /// `(a, d)` found by the oracle but not by the sieve.
    pub oracle_only: Vec<(i64, i64)>,
    /// `(a, d)` from the sieve that the oracle did not find in the box.
    pub sieve_only: Vec<(i64, i64)>,
    /// Oracle hits with `a >= 10`, where the sieve predicts none.
    pub beyond_sieve: Vec<OracleTuple>,
    /// Oracle `(a, d)` with `a <= 4`, not compared here.
    pub delegated: Vec<(i64, i64)>,
    pub above_12: Vec<(i64, i64)>,
    pub warnings: Vec<ClipWarning>,
    pub coverage_warnings: Vec<String>,
    pub tuples_checked: usize,
}

fn covers(outer: &RangeInclusive<i64>, inner: &RangeInclusive<i64>) -> bool {
    outer.start() <= inner.start() && outer.end() >= inner.end()
}

/// Compares the oracle's `(a, d)` projection with the sieve for every `a` in
/// the box: equal on `5..=9`, empty for `a >= 10`. Tuples on clipping faces
/// produce warnings, not failures.
pub fn cross_validate(bx: &SearchBox) -> Result<CrossValidation> {
    let tuples = oracle_enumerate(bx)?;
    for t in &tuples {
        if !lattice_check(t)? {
            return Err(Error::domain("cross_validate", format!("lattice disagrees on {t:?}")));
        }
    }

    let mut coverage_warnings = Vec::new();
    if !covers(&bx.a, &SIEVE_A_RANGE) {
        coverage_warnings.push(format!("a range {:?} does not cover 5..=9", bx.a));
    }
    if !covers(&bx.n, &(0..=4)) {
        coverage_warnings.push(format!("n range {:?} does not cover 0..=4", bx.n));
    }

    let oracle_pairs = project_ad(&tuples);
    let in_sieve_a = |a: i64| SIEVE_A_RANGE.contains(&a) && bx.a.contains(&a);
    let sieve: BTreeSet<(i64, i64)> =
        lemma9_candidates()?.into_iter().filter(|&(a, d)| in_sieve_a(a) && d >= bx.d_min).collect();
    let compared: BTreeSet<(i64, i64)> =
        oracle_pairs.iter().copied().filter(|&(a, _)| in_sieve_a(a)).collect();

    let oracle_only: Vec<_> = compared.difference(&sieve).copied().collect();
    let sieve_only: Vec<_> = sieve.difference(&compared).copied().collect();
    let beyond_sieve: Vec<_> = tuples.iter().copied().filter(|t| t.a > *SIEVE_A_RANGE.end()).collect();
    let delegated: Vec<_> =
        oracle_pairs.iter().copied().filter(|&(a, _)| a < *SIEVE_A_RANGE.start()).collect();
    let above_12: Vec<_> = oracle_pairs.iter().copied().filter(|&(_, d)| d > 12).collect();

    let mut by_face: BTreeMap<OracleTuple, Vec<&'static str>> = BTreeMap::new();
    for t in &tuples {
        let faces = bx.clipping_faces(t);
        if !faces.is_empty() {
            by_face.insert(*t, faces);
        }
    }
    let warnings = by_face.into_iter().map(|(tuple, faces)| ClipWarning { tuple, faces }).collect();

    let pass = oracle_only.is_empty() && sieve_only.is_empty() && beyond_sieve.is_empty();
    Ok(CrossValidation {
        status: if pass { Status::Pass } else { Status::Fail },
        oracle_only,
        sieve_only,
        beyond_sieve,
        delegated,
        above_12,
        warnings,
        coverage_warnings,
        tuples_checked: tuples.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_box_above_twelve() {
        let t = oracle_enumerate(&SearchBox::default()).unwrap();
        assert_eq!(project_ad(&t), BTreeSet::from([(7, 13)]));
    }

    #[test]
    fn full_projection_contains_sieve() {
        let t = oracle_enumerate(&SearchBox::default().with_d_min(1)).unwrap();
        let sieve: BTreeSet<_> = lemma9_candidates().unwrap().into_iter().collect();
        let proj: BTreeSet<_> = project_ad(&t).into_iter().filter(|(a, _)| (5..=9).contains(a)).collect();
        assert_eq!(proj, sieve);
    }

    #[test]
    fn empty_box() {
        #[allow(clippy::reversed_empty_ranges)]
        let bx = SearchBox { a: 5..=4, ..SearchBox::default() };
        assert!(oracle_enumerate(&bx).unwrap().is_empty());
    }

    #[test]
    fn cross_validate_default() {
        let cv = cross_validate(&SearchBox::default()).unwrap();
        assert_eq!(cv.status, Status::Pass);
        assert!(cv.warnings.is_empty());
        assert_eq!(cv.above_12, vec![(7, 13)]);
    }

    #[test]
    fn clipped_box_warns() {
        let bx = SearchBox { b: 0..=5, ..SearchBox::default().with_d_min(1) };
        let cv = cross_validate(&bx).unwrap();
        assert!(!cv.warnings.is_empty());
        assert!(cv.warnings.iter().all(|w| w.faces.contains(&"b_max")));
    }

    #[test]
    fn degree_thirteen_family() {
        let bx = SearchBox { a: 7..=7, ..SearchBox::default() };
        let t: Vec<_> = oracle_enumerate(&bx).unwrap().into_iter().collect();
        assert!(!t.is_empty());
        for x in &t {
            assert_eq!(x.n % 2, 1);
            assert_eq!(2 * x.b, 7 * x.n + 9);
            assert_eq!((x.r, x.d, x.pi), (50, 13, 21));
        }
        let ns: Vec<_> = t.iter().map(|x| x.n).collect();
        assert_eq!(ns, vec![1, 3, 5]);
    }

    #[test]
    fn negative_ranges_rejected() {
        let bx = SearchBox { n: -1..=3, ..SearchBox::default() };
        assert!(oracle_enumerate(&bx).is_err());
    }

    #[test]
    fn huge_box_refused() {
        let bx = SearchBox { b: 0..=(1 << 40), ..SearchBox::default() };
        assert!(matches!(oracle_enumerate(&bx), Err(Error::Overflow(_))));
    }
}
