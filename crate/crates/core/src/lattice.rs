//! Intersection theory on the Picard lattice of a Hirzebruch surface `F_n`
//! blown up at `r` points.
//!
//! The lattice has basis `C_0, f, E_1, ..., E_r` with pairing
//!
//! ```text
//! C_0·C_0 = -n   C_0·f = 1   f·f = 0
//! C_0·E_i = 0    f·E_i = 0   E_i·E_j = -δ_ij
//! ```
//!
//! Exceptional curves have self-intersection `-1`. With this sign the
//! degree of `aC_0 + bf - ΣE_i` is `-a²n + 2ab - r` and `K² = 8 - r`.

use serde::{Deserialize, Serialize};

use crate::arith::{add, mul, mul3, sub, sum};
use crate::error::{Error, Result};

/// `F_n` blown up at `r` points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceModel {
    n: u32,
    r: usize,
}

impl SurfaceModel {
    pub fn new(n: u32, r: usize) -> Self {
        Self { n, r }
    }

    /// Hirzebruch index.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of blown-up points.
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn rank(&self) -> usize {
        self.r + 2
    }
}

/// `a·C_0 + b·f + Σ m_i·E_i`, coefficients taken exactly as written.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DivisorClass {
    pub a: i64,
    pub b: i64,
    pub m: Vec<i64>,
}

impl DivisorClass {
    pub fn new(a: i64, b: i64, m: Vec<i64>) -> Self {
        Self { a, b, m }
    }

    /// The section class `C_0` on a surface with `r` exceptional curves.
    pub fn section(r: usize) -> Self {
        Self::new(1, 0, vec![0; r])
    }

    /// The fiber class `f`.
    pub fn fiber(r: usize) -> Self {
        Self::new(0, 1, vec![0; r])
    }

    /// `E_i` (zero-based index).
    pub fn exceptional(r: usize, i: usize) -> Self {
        let mut m = vec![0; r];
        m[i] = 1;
        Self::new(0, 0, m)
    }

    /// `aC_0 + bf - E_1 - ... - E_r`: a linear system with simple base points.
    pub fn simple_base_points(a: i64, b: i64, r: usize) -> Self {
        Self::new(a, b, vec![-1; r])
    }

    /// Number of exceptional coefficients.
    pub fn r(&self) -> usize {
        self.m.len()
    }

    fn check_on(&self, surface: &SurfaceModel) -> Result<()> {
        if self.m.len() != surface.r() {
            return Err(Error::DimensionMismatch { expected: surface.rank(), found: self.m.len() + 2 });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &DivisorClass) -> Result<DivisorClass> {
        if self.m.len() != other.m.len() {
            return Err(Error::DimensionMismatch { expected: self.m.len() + 2, found: other.m.len() + 2 });
        }
        let m = self.m.iter().zip(&other.m).map(|(x, y)| add(*x, *y)).collect::<Result<Vec<_>>>()?;
        Ok(DivisorClass::new(add(self.a, other.a)?, add(self.b, other.b)?, m))
    }
}

/// Intersection number `D1·D2` on `surface`.
pub fn intersect(d1: &DivisorClass, d2: &DivisorClass, surface: &SurfaceModel) -> Result<i64> {
    d1.check_on(surface)?;
    d2.check_on(surface)?;
    let n = i64::from(surface.n());
    let exceptional = sum(d1.m.iter().zip(&d2.m).map(|(x, y)| mul(*x, *y)).collect::<Result<Vec<_>>>()?)?;
    let section = mul3(d1.a, d2.a, -n)?;
    let mixed = add(mul(d1.a, d2.b)?, mul(d2.a, d1.b)?)?;
    sub(add(section, mixed)?, exceptional)
}

/// `K_S = -2C_0 - (n+2)f + ΣE_i`.
pub fn canonical_class(surface: &SurfaceModel) -> DivisorClass {
    DivisorClass::new(-2, -(i64::from(surface.n()) + 2), vec![1; surface.r()])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_pairing() {
        let s = SurfaceModel::new(2, 0);
        assert_eq!(intersect(&DivisorClass::section(0), &DivisorClass::section(0), &s), Ok(-2));
        for n in 0..5 {
            let s = SurfaceModel::new(n, 3);
            let c0 = DivisorClass::section(3);
            let f = DivisorClass::fiber(3);
            assert_eq!(intersect(&f, &f, &s), Ok(0));
            assert_eq!(intersect(&c0, &f, &s), Ok(1));
            for i in 0..3 {
                let e = DivisorClass::exceptional(3, i);
                assert_eq!(intersect(&e, &e, &s), Ok(-1));
                assert_eq!(intersect(&c0, &e, &s), Ok(0));
                assert_eq!(intersect(&f, &e, &s), Ok(0));
                for j in 0..3 {
                    if i != j {
                        let ej = DivisorClass::exceptional(3, j);
                        assert_eq!(intersect(&e, &ej, &s), Ok(0));
                    }
                }
            }
        }
    }

    #[test]
    fn degree_thirteen_witness() {
        // n = 1 forces b = 8 from 2b = 7n + 9, then r = 14b - 49n - 13 = 50.
        let s = SurfaceModel::new(1, 50);
        let h = DivisorClass::simple_base_points(7, 8, 50);
        assert_eq!(intersect(&h, &h, &s), Ok(13));
        assert_eq!(-49 + 2 * 7 * 8 - 50, 13);
    }

    #[test]
    fn canonical_class_values() {
        assert_eq!(canonical_class(&SurfaceModel::new(0, 0)), DivisorClass::new(-2, -2, vec![]));
        assert_eq!(canonical_class(&SurfaceModel::new(1, 2)), DivisorClass::new(-2, -3, vec![1, 1]));
    }

    #[test]
    fn canonical_square_small_grid() {
        for n in 0..=3 {
            for r in 0..=5 {
                let s = SurfaceModel::new(n, r);
                let k = canonical_class(&s);
                assert_eq!(intersect(&k, &k, &s), Ok(8 - r as i64), "n={n} r={r}");
            }
        }
    }

    #[test]
    fn mismatched_rank_is_rejected() {
        let s = SurfaceModel::new(1, 2);
        let d = DivisorClass::new(1, 1, vec![0]);
        assert_eq!(
            intersect(&d, &DivisorClass::fiber(2), &s),
            Err(Error::DimensionMismatch { expected: 4, found: 3 })
        );
        assert!(d.checked_add(&DivisorClass::fiber(2)).is_err());
    }

    #[test]
    fn overflow_is_reported() {
        let s = SurfaceModel::new(u32::MAX, 0);
        let d = DivisorClass::new(i64::MAX / 2, 0, vec![]);
        assert!(matches!(intersect(&d, &d, &s), Err(Error::Overflow(_))));
    }
}
