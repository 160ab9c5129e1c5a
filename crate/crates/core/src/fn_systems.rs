//! Linear systems `aC_0 + bf - E_1 - ... - E_r` with simple base points on
//! `F_n`.
//!
//! Eliminating `r` between the degree relation and the double point formula
//! leaves
//!
//! ```text
//! b·(6a - 10) = d² - 7d + 3a²n - 5an + 10a - 4
//! ```
//!
//! and feeding the resulting genus into `π - 1 < d²/8` gives `f_a(d) < 0`
//! with `f_a(d) = (a+1)d² - 28(a-1)d + 16a² - 16a + 16`, independent of `n`.
//! That quadratic is positive everywhere once `a >= 10`. For `5 <= a <= 9`
//! its sublevel sets together with an `n`-free divisibility condition leave
//! a handful of `(a, d)` pairs; the only one with `d > 12` is `(7, 13)`,
//! whose genus equals `G(13,4)`.

use std::ops::RangeInclusive;

use serde::Serialize;

use crate::arith::{add, exact_div, gcd, mul, mul3, sub, sum};
use crate::bounds::{acm_exclusion, max_genus_g, strict_eighth_bound, BoundVerdict};
use crate::error::{Error, Result};
use crate::invariants::{
    degree, double_point_residual, forced_b_denominator, forced_b_numerator, sectional_genus,
};
use crate::quadratic::ConvexQuadratic;
use crate::reason::Reason;
use crate::ruled::{classify_ruled, max_admissible_degree, LARGE_DEGREE_THRESHOLD};

/// For `a` at or above this value `f_a` has no non-positive integer value.
pub const LEMMA8_FIRST_EMPTY_A: i64 = 10;

/// Ruling degrees handled by the divisibility sieve; smaller `a` go to the
/// ruled-surface tables.
pub const SIEVE_A_RANGE: RangeInclusive<i64> = 5..=9;

/// Largest ruling degree delegated to [`crate::ruled`].
pub const DELEGATED_A_MAX: i64 = 4;

/// `f_a(d) = (a+1)d² - 28(a-1)d + 16a² - 16a + 16`.
pub fn f_a(a: i64, d: i64) -> Result<i64> {
    sum([mul3(d, d, add(a, 1)?)?, -mul3(28, sub(a, 1)?, d)?, mul3(16, a, a)?, -mul(16, a)?, 16])
}

fn f_quadratic(a: i64) -> Result<ConvexQuadratic> {
    if a < 0 {
        return Err(Error::domain("f_a", format!("needs a >= 0, got {a}")));
    }
    ConvexQuadratic::new(add(a, 1)?, -mul(28, sub(a, 1)?)?, sum([mul3(16, a, a)?, -mul(16, a)?, 16])?)
}

/// Integers `d` with `f_a(d) <= 0`, or `< 0` when `strict`.
pub fn f_a_range(a: i64, strict: bool) -> Result<Vec<i64>> {
    f_quadratic(a)?.sublevel_set(strict)
}

/// Checks that `min_d f_a(d) > 0` for every `a` in `10..=a_max`. The minimum
/// over the integers is taken at `floor(d_0)` or `ceil(d_0)` with
/// `d_0 = 14(a-1)/(a+1)`.
pub fn lemma8_verify(a_max: i64) -> Result<bool> {
    if a_max < LEMMA8_FIRST_EMPTY_A {
        return Err(Error::domain("lemma8_verify", format!("needs a_max >= 10, got {a_max}")));
    }
    for a in LEMMA8_FIRST_EMPTY_A..=a_max {
        let lo = (14 * (a - 1)).div_euclid(a + 1);
        if f_a(a, lo)?.min(f_a(a, lo + 1)?) <= 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(6a - 10) | (a-1)(d² - 7d + 10a - 4)`.
pub fn lemma9_divisibility(a: i64, d: i64) -> Result<bool> {
    if a < 2 {
        return Err(Error::domain("lemma9_divisibility", format!("needs a >= 2, got {a}")));
    }
    let numerator = mul(sub(a, 1)?, sum([mul(d, d)?, -mul(7, d)?, mul(10, a)?, -4])?)?;
    Ok(exact_div(numerator, forced_b_denominator(a)?).is_some())
}

/// `(a, d)` with `5 <= a <= 9`, `f_a(d) <= 0` (or `< 0`) and the
/// divisibility condition, sorted.
pub fn lemma9_candidates_with(strict: bool) -> Result<Vec<(i64, i64)>> {
    let mut out = Vec::new();
    for a in SIEVE_A_RANGE {
        for d in f_a_range(a, strict)? {
            if lemma9_divisibility(a, d)? {
                out.push((a, d));
            }
        }
    }
    Ok(out)
}

pub fn lemma9_candidates() -> Result<Vec<(i64, i64)>> {
    lemma9_candidates_with(false)
}

/// The `b` forced by the double point formula, if integral.
pub fn solve_b(a: i64, d: i64, n: i64) -> Result<Option<i64>> {
    if a < 2 {
        return Err(Error::domain("solve_b", format!("needs a >= 2, got {a}")));
    }
    Ok(exact_div(forced_b_numerator(a, d, n)?, forced_b_denominator(a)?))
}

/// `coef_b·b + coef_n·n + constant`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AffineForm {
    pub coef_b: i64,
    pub coef_n: i64,
    pub constant: i64,
}

impl AffineForm {
    pub fn new(coef_b: i64, coef_n: i64, constant: i64) -> Self {
        Self { coef_b, coef_n, constant }
    }

    fn scale(self, k: i64) -> Result<Self> {
        Ok(Self::new(mul(self.coef_b, k)?, mul(self.coef_n, k)?, mul(self.constant, k)?))
    }

    fn plus(self, o: Self) -> Result<Self> {
        Ok(Self::new(
            add(self.coef_b, o.coef_b)?,
            add(self.coef_n, o.coef_n)?,
            add(self.constant, o.constant)?,
        ))
    }

    pub fn eval(&self, b: i64, n: i64) -> Result<i64> {
        sum([mul(self.coef_b, b)?, mul(self.coef_n, n)?, self.constant])
    }
}

/// `lhs_b·b = rhs_n·n + rhs_constant`, normalized so that `lhs_b > 0` and the
/// three coefficients are coprime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BRelation {
    pub lhs_b: i64,
    pub rhs_n: i64,
    pub rhs_constant: i64,
}

/// `n ≡ residue (mod modulus)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Progression {
    pub residue: i64,
    pub modulus: i64,
}

impl Progression {
    pub fn contains(&self, n: i64) -> bool {
        n.rem_euclid(self.modulus) == self.residue
    }
}

/// The three relations specialized to a fixed `(a, d)`, solved for `b` in
/// terms of `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedDegreeDerivation {
    pub a: i64,
    pub d: i64,
    /// `π - 1` in terms of `b, n`.
    pub genus_minus_one: AffineForm,
    /// `r` in terms of `b, n`.
    pub r_form: AffineForm,
    pub b_relation: BRelation,
    /// Values of `n` giving integral `b`; `None` when there are none.
    pub n_progression: Option<Progression>,
    /// `r` along the progression, when it does not depend on `n`.
    pub r: Option<i64>,
    /// `π` along the progression, when it does not depend on `n`.
    pub pi: Option<i64>,
}

impl FixedDegreeDerivation {
    pub fn derive(a: i64, d: i64) -> Result<Self> {
        if a < 2 {
            return Err(Error::domain("derive", format!("needs a >= 2, got {a}")));
        }
        // 2π - 2 = (2a-2)b + (a - a²)n - 2a, and a - a² is even.
        let a_sq = mul(a, a)?;
        let genus_minus_one = AffineForm::new(sub(a, 1)?, sub(a, a_sq)? / 2, -a);
        // r = 2ab - a²n - d
        let r_form = AffineForm::new(mul(2, a)?, -a_sq, -d);
        // d(d-5) - 10(π-1) - 4 + 2r = 0
        let relation = genus_minus_one.scale(-10)?.plus(r_form.scale(2)?)?.plus(AffineForm::new(
            0,
            0,
            sub(mul(d, sub(d, 5)?)?, 4)?,
        ))?;
        // -coef_b·b = coef_n·n + constant
        let (mut lhs_b, mut rhs_n, mut rhs_constant) = (-relation.coef_b, relation.coef_n, relation.constant);
        if lhs_b == 0 {
            return Err(Error::domain("derive", "b drops out of the relation (6a = 10)"));
        }
        if lhs_b < 0 {
            (lhs_b, rhs_n, rhs_constant) = (-lhs_b, -rhs_n, -rhs_constant);
        }
        let g = gcd(gcd(lhs_b, rhs_n), rhs_constant);
        let b_relation = BRelation { lhs_b: lhs_b / g, rhs_n: rhs_n / g, rhs_constant: rhs_constant / g };

        let n_progression = solve_congruence(b_relation)?;
        let (mut r, mut pi) = (None, None);
        if let Some(prog) = n_progression {
            let n0 = prog.residue;
            let n1 = add(n0, prog.modulus)?;
            let b_at = |n: i64| -> Result<i64> {
                let num = add(mul(b_relation.rhs_n, n)?, b_relation.rhs_constant)?;
                exact_div(num, b_relation.lhs_b).ok_or(Error::domain("derive", "progression off"))
            };
            let (b0, b1) = (b_at(n0)?, b_at(n1)?);
            let (r0, r1) = (r_form.eval(b0, n0)?, r_form.eval(b1, n1)?);
            let (g0, g1) = (genus_minus_one.eval(b0, n0)?, genus_minus_one.eval(b1, n1)?);
            // Both forms are affine in n along the progression, so agreeing at
            // two consecutive terms means constant.
            if r0 == r1 {
                r = Some(r0);
            }
            if g0 == g1 {
                pi = Some(add(g0, 1)?);
            }
        }

        Ok(Self { a, d, genus_minus_one, r_form, b_relation, n_progression, r, pi })
    }

    /// `(n, b, r)` for `n` in `window` along the progression.
    pub fn solutions(&self, window: RangeInclusive<i64>) -> Result<Vec<(i64, i64, i64)>> {
        let Some(prog) = self.n_progression else {
            return Ok(Vec::new());
        };
        let mut out = Vec::new();
        for n in window.filter(|n| prog.contains(*n)) {
            let num = add(mul(self.b_relation.rhs_n, n)?, self.b_relation.rhs_constant)?;
            let b = num / self.b_relation.lhs_b;
            out.push((n, b, self.r_form.eval(b, n)?));
        }
        Ok(out)
    }
}

/// Smallest non-negative `n` with `lhs_b | rhs_n·n + rhs_constant`, and the
/// period of such `n`.
fn solve_congruence(rel: BRelation) -> Result<Option<Progression>> {
    let modulus = rel.lhs_b / gcd(rel.lhs_b, rel.rhs_n);
    for n in 0..modulus {
        let num = add(mul(rel.rhs_n, n)?, rel.rhs_constant)?;
        if num.rem_euclid(rel.lhs_b) == 0 {
            return Ok(Some(Progression { residue: n, modulus }));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FnVerdict {
    Survives,
    Excluded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BSolution {
    pub n: i64,
    pub b: i64,
    pub r: i64,
}

/// One `(a, d)` pair that passed the sieve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FnCandidate {
    pub a: i64,
    pub d: i64,
    pub f_value: i64,
    pub divisibility_ok: bool,
    pub b_solutions: Vec<BSolution>,
    /// Solutions inside the window that would need `r < 0`.
    pub negative_r: Vec<BSolution>,
    pub pi: Option<i64>,
    pub verdict: FnVerdict,
    pub reasons: Vec<Reason>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FnOptions {
    /// Use `f_a(d) < 0` instead of `f_a(d) <= 0`.
    pub strict: bool,
    /// Values of `n` for which `(n, b, r)` solutions are listed.
    pub n_window: RangeInclusive<i64>,
    /// Upper end of the `a >= 10` emptiness check.
    pub lemma8_a_max: i64,
}

impl Default for FnOptions {
    fn default() -> Self {
        Self { strict: false, n_window: 0..=20, lemma8_a_max: 1000 }
    }
}

fn build_candidate(a: i64, d: i64, opts: &FnOptions) -> Result<FnCandidate> {
    let f_value = f_a(a, d)?;
    let divisibility_ok = lemma9_divisibility(a, d)?;
    let derivation = FixedDegreeDerivation::derive(a, d)?;
    let mut b_solutions = Vec::new();
    let mut negative_r = Vec::new();
    for (n, b, r) in derivation.solutions(opts.n_window.clone())? {
        debug_assert_eq!(solve_b(a, d, n)?, Some(b));
        debug_assert_eq!(degree(a, b, n, r)?, d);
        debug_assert_eq!(double_point_residual(a, b, n, r)?, 0);
        let s = BSolution { n, b, r };
        if r < 0 {
            negative_r.push(s);
        } else {
            b_solutions.push(s);
        }
    }
    let pi = derivation.pi;
    if let Some(pi) = pi {
        for s in b_solutions.iter().chain(&negative_r) {
            assert_eq!(sectional_genus(a, s.b, s.n)?, pi, "genus varies with n at ({a},{d})");
        }
    }

    let mut reasons =
        vec![Reason::new("lemma9_sieve", format!("f_a(d) = {f_value}, (6a-10) | (a-1)(d²-7d+10a-4)"))];
    if !negative_r.is_empty() {
        reasons.push(Reason::new(
            "negative_r",
            format!("{} solution(s) in the n window need r < 0 and are dropped", negative_r.len()),
        ));
    }
    if b_solutions.iter().any(|s| s.r == 0) {
        reasons.push(Reason::new("r_zero", "some listed solution has no blown-up points"));
    }
    if b_solutions.is_empty() {
        reasons.push(Reason::new("no_solution_in_window", "no (n, b, r) with r >= 0 in the n window"));
    }

    let mut verdict = FnVerdict::Survives;
    if d > LARGE_DEGREE_THRESHOLD {
        let pi = pi.ok_or_else(|| Error::domain("classify", format!("genus of ({a},{d}) depends on n")))?;
        let eighth = strict_eighth_bound(d, pi)?;
        let acm = acm_exclusion(d, pi)?;
        if !eighth.holds {
            verdict = FnVerdict::Excluded;
            reasons.push(Reason::from_bound(&eighth, "<"));
        }
        if acm.holds {
            verdict = FnVerdict::Excluded;
            reasons.push(acm_reason(&acm));
        }
    }

    Ok(FnCandidate { a, d, f_value, divisibility_ok, b_solutions, negative_r, pi, verdict, reasons })
}

fn acm_reason(acm: &BoundVerdict) -> Reason {
    Reason::new(
        "acm_exclusion",
        format!(
            "pi = {} = G(d,4) = {}: hyperplane section a.C.M., impossible for d > 8",
            acm.witness.0, acm.witness.1
        ),
    )
}

/// The `(a, d) = (7, 13)` case in full.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem10Analysis {
    pub derivation: FixedDegreeDerivation,
    pub max_genus_g: i64,
    pub acm: BoundVerdict,
    pub candidate: FnCandidate,
}

pub fn theorem10_analysis() -> Result<Theorem10Analysis> {
    theorem10_analysis_with(&FnOptions::default())
}

pub fn theorem10_analysis_with(opts: &FnOptions) -> Result<Theorem10Analysis> {
    let (a, d) = (7, 13);
    let derivation = FixedDegreeDerivation::derive(a, d)?;
    let pi = derivation.pi.ok_or_else(|| Error::domain("theorem10_analysis", "genus not constant in n"))?;
    let acm = acm_exclusion(d, pi)?;
    let candidate = build_candidate(a, d, opts)?;
    Ok(Theorem10Analysis { derivation, max_genus_g: max_genus_g(d)?, acm, candidate })
}

/// Degree bound inherited from the ruled-surface tables for small `a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DelegatedBound {
    pub a: i64,
    pub max_degree: i64,
    pub source: Reason,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FnSummary {
    pub max_degree: i64,
    pub surviving_above_12: Vec<(i64, i64)>,
    /// Sieve pairs with `f_a(d) = 0`; when empty, strict and non-strict
    /// enumerations agree.
    pub boundary_zeros: Vec<(i64, i64)>,
    pub strict: bool,
    pub lemma8_a_max: i64,
    pub lemma8_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FnClassification {
    pub candidates: Vec<FnCandidate>,
    pub delegated: Vec<DelegatedBound>,
    pub summary: FnSummary,
}

/// Runs the sieve, settles `d > 12` survivors and folds in the bounds for
/// `a <= 4`.
pub fn classify_fn_systems(opts: &FnOptions) -> Result<FnClassification> {
    let mut candidates = lemma9_candidates_with(opts.strict)?
        .into_iter()
        .map(|(a, d)| build_candidate(a, d, opts))
        .collect::<Result<Vec<_>>>()?;
    candidates.sort_by_key(|c| (c.a, c.d));

    let mut boundary_zeros = Vec::new();
    for a in SIEVE_A_RANGE {
        for d in f_a_range(a, false)? {
            if f_a(a, d)? == 0 && lemma9_divisibility(a, d)? {
                boundary_zeros.push((a, d));
            }
        }
    }

    let mut delegated = Vec::new();
    for a in 1..=DELEGATED_A_MAX {
        let max_degree = max_admissible_degree(&classify_ruled(a)?)
            .ok_or_else(|| Error::domain("classify", format!("empty ruled table for a={a}")))?;
        let tag = match a {
            1 => "scroll",
            2 => "conic_bundle",
            3 => "cubic_ruling",
            _ => "quartic_ruling",
        };
        delegated.push(DelegatedBound {
            a,
            max_degree,
            source: Reason::new(tag, format!("ruled-surface table gives d <= {max_degree}")),
        });
    }

    let surviving = candidates.iter().filter(|c| c.verdict == FnVerdict::Survives);
    let surviving_above_12 =
        surviving.clone().filter(|c| c.d > LARGE_DEGREE_THRESHOLD).map(|c| (c.a, c.d)).collect();
    let max_degree = surviving.map(|c| c.d).chain(delegated.iter().map(|b| b.max_degree)).max().unwrap_or(0);

    Ok(FnClassification {
        candidates,
        delegated,
        summary: FnSummary {
            max_degree,
            surviving_above_12,
            boundary_zeros,
            strict: opts.strict,
            lemma8_a_max: opts.lemma8_a_max,
            lemma8_holds: lemma8_verify(opts.lemma8_a_max)?,
        },
    })
}
