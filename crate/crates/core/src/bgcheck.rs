//! The headline numerical checks: the strengthened Bogomolov-Gieseker-type
//! inequality `ch3` at `beta-bar <= 0`, the Euler-pairing expansions against
//! line bundles in the twisted basis, the exact positivity certificates for
//! the index-one cubic `f` and its companion `g`, the sheaf region bound
//! `R_{3/(2rd)}`, and the extension-character iteration that walks a `ch2 = 0`
//! character onto that region's boundary.
//!
//! Everything here reports exact signs of exact quantities. None of it can
//! decide whether an actual complex with a given character is stable; a
//! violated inequality only certifies that no stable object with that
//! character exists.

use crate::charplane::{reduced_point, region_membership, Membership, RegionSpec, RegionStatus};
use crate::chern::{CharVec, QuadCharVec};
use crate::error::{Error, Result};
use crate::exactnum::{rat, rat_int, Quad, Rat};
use crate::fano::{FanoData, HrrCoefficients};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Exact sign report for the inequality `ch3` twisted at `beta-bar <= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BGReport {
    pub beta_bar: Quad,
    pub ch3_twisted: Quad,
    /// `ch3_twisted <= 0`.
    pub satisfied: bool,
    /// `ch3_twisted = 0` (line bundles and their shifts sit here).
    pub boundary: bool,
}

/// Evaluates the inequality `ch3^{beta-bar} <= 0` for a character.
///
/// The twist depends only on the character, not on the variety. A violation
/// means no tilt-stable object can carry this character; satisfaction proves
/// nothing about existence or stability.
pub fn check_bg(v: &CharVec) -> Result<BGReport> {
    let beta_bar = v.beta_bar()?;
    let ch3_twisted = v.ch3_at_beta_bar()?;
    let sign = ch3_twisted.signum();
    Ok(BGReport { beta_bar, ch3_twisted, satisfied: sign <= 0, boundary: sign == 0 })
}

/// Coefficients of `chi(O(mH), E)` as a linear functional on the `beta`-
/// twisted character `(e3, e2, e1, e0)` of `E`; `k3` is always `1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiExpansion {
    pub k3: Quad,
    pub k2: Quad,
    pub k1: Quad,
    pub k0: Quad,
}

impl ChiExpansion {
    /// Applies the functional to a twisted character from the same field.
    pub fn apply(&self, tw: &QuadCharVec) -> Quad {
        let mut acc = &self.k3 * &tw.e3;
        acc = acc + &(&self.k2 * &tw.e2);
        acc = acc + &(&self.k1 * &tw.e1);
        acc + &(&self.k0 * &tw.e0)
    }
}

/// Expands `chi(O(mH), E)` over the `beta`-twisted character of `E`.
///
/// Pairing against `O(mH)` evaluates the Riemann-Roch row `c` on the
/// character of `E(-mH)`, which is the `beta`-twist of `E` twisted further
/// by `gamma = m - beta`. Pushing the row through that unipotent twist gives
///
/// ```text
/// k3 = 1
/// k2 = c2 - gamma
/// k1 = gamma^2/2 - gamma c2 + c1
/// k0 = -gamma^3/6 + (gamma^2/2) c2 - gamma c1 + c0
/// ```
///
/// entirely inside the quadratic field of `beta`.
pub fn chi_line_expansion(f: &FanoData, m: i64, beta: &Quad) -> ChiExpansion {
    let h = f.hrr_coefficients();
    let gamma = &Quad::from_int(m) - beta;
    let half = rat(1, 2);
    let sixth = rat(1, 6);
    let g2 = &gamma * &gamma;
    let k2 = &(-&gamma) + &h.c2;
    let k1 = &(&g2.scale(&half) - &gamma.scale(&h.c2)) + &h.c1;
    let k0 = &(&(-&(&g2 * &gamma).scale(&sixth)) + &g2.scale(&(&h.c2 * &half))
        - &gamma.scale(&h.c1))
        + &h.c0;
    ChiExpansion { k3: Quad::from_int(1), k2, k1, k0 }
}

/// Exact positivity certificate for the index-one functions
/// `f(x) = x^3/6 - x^2/4 + (2/d + 1/12) x - 1/d` and
/// `g(x) = sqrt(3/(2d)) f'(x) + f(x)`.
///
/// The three facts certified are: the discriminant of `f'` is negative (so
/// `f` is strictly increasing, with its sign anchored by `f(1/2) = 0`); `g`
/// is positive at `0`; and the global minimum of `g'` is positive (so `g`
/// increases, hence stays positive, on `x >= 0`). All intermediate values
/// live in the quadratic field of `sqrt(6d)`; the two stored quadratic
/// fields are canonical forms, so a rational value carries radicand `1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexOneCertificate {
    pub d: u32,
    /// `1/12 - 4/d`, must be negative.
    pub fprime_discriminant: Rat,
    /// `sqrt(3/(2d)) (1/12 + 2/d) - 1/d`, must be positive.
    pub g_at_zero: Quad,
    /// `g'` at its minimizer `1/2 - sqrt(3/(2d))`; collapses to the rational
    /// `5/(4d) - 1/24`, must be positive.
    pub gprime_min: Quad,
    /// Conjunction of the three sign checks above.
    pub all_positive: bool,
}

/// Builds the index-one certificate for a valid index-one degree.
pub fn index_one_certificate(d: i64) -> Result<IndexOneCertificate> {
    let f = FanoData::new(1, d)?;
    let h = f.hrr_coefficients();
    let dr = f.degree_rat();
    // f'(x) = x^2/2 - x/2 + c1 with c1 = 1/12 + 2/d: discriminant 1/4 - 2 c1.
    let fprime_discriminant = rat(1, 4) - rat_int(2) * &h.c1;
    // The root anchoring the sign of the increasing f.
    assert!(index_one_f(&h, &rat(1, 2)).is_zero());

    let s = Quad::sqrt(&(rat_int(3) / (rat_int(2) * &dr)))?;
    // g(0) = s f'(0) + f(0) = s c1 - 1/d.
    let g_at_zero = &s.scale(&h.c1) - &h.c0;
    // Factored form: g(0) = s (sqrt(2/d) - sqrt(1/3)/2)^2. The square
    // expands to 2/d + 1/12 - sqrt(2/(3d)); both s and the cross radical
    // reduce over sqrt(6d), and their product collapses to the rational 1/d.
    let cross = Quad::sqrt(&(rat_int(2) / (rat_int(3) * &dr)))?;
    assert_eq!((&s * &cross).as_rat(), Some(&h.c0));
    let square = &(-&cross) + &(rat_int(2) / &dr + rat(1, 12));
    assert_eq!(&s * &square, g_at_zero);

    // g'(x) = s (x - 1/2) + f'(x) is an upward parabola in x whose vertex
    // solves g''(x) = x - 1/2 + s = 0, i.e. x* = 1/2 - s.
    let x_star = &(-&s) + &rat(1, 2);
    let gprime_min = gprime_at(&h, &s, &x_star);
    assert_eq!(
        gprime_min.as_rat().cloned(),
        Some(rat(5, 4) / &dr - rat(1, 24)),
        "g' minimum must collapse to 5/(4d) - 1/24"
    );

    let all_positive = fprime_discriminant.is_negative()
        && g_at_zero.signum() > 0
        && gprime_min.signum() > 0;
    Ok(IndexOneCertificate {
        d: f.degree(),
        fprime_discriminant,
        g_at_zero,
        gprime_min,
        all_positive,
    })
}

/// The index-one cubic at a rational point, with coefficients read off the
/// HRR row of an index-one variety (`c2 = 1/2`, `c1 = 1/12 + 2/d`,
/// `c0 = 1/d`): `f(x) = x^3/6 - (c2/2) x^2 + c1 x - c0`.
fn index_one_f(h: &HrrCoefficients, x: &Rat) -> Rat {
    x * x * x / rat_int(6) - x * x * &h.c2 / rat_int(2) + &h.c1 * x - &h.c0
}

/// `g'(x) = s (x - 1/2) + x^2/2 - x/2 + c1` inside the field of `s`.
fn gprime_at(h: &HrrCoefficients, s: &Quad, x: &Quad) -> Quad {
    let half = rat(1, 2);
    let fprime = &(&(x * x).scale(&half) - &x.scale(&half)) + &h.c1;
    (s * &(x - &half)) + &fprime
}

/// Outcome of testing a character against the exclusion region
/// `R_m` with `m = 3/(2rd)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SheafBoundReport {
    /// The region parameter `3/(2rd)` that was used.
    pub m: Rat,
    pub status: RegionStatus,
    /// On the boundary the absolute rank `|e0/d|` must be `1` or `2`;
    /// `None` away from the boundary.
    pub boundary_rank_ok: Option<bool>,
    /// Interior means no slope-semistable sheaf can carry this character.
    pub interior_violation: bool,
}

/// Tests the reduced point of `v` against `R_{3/(2rd)}`.
pub fn sheaf_bound_check(f: &FanoData, v: &CharVec) -> Result<SheafBoundReport> {
    if v.e0.is_zero() {
        return Err(Error::PointAtInfinity);
    }
    let region = RegionSpec::sheaf_bound(f);
    let status = region_membership(&reduced_point(v)?, &region)?;
    let boundary_rank_ok = (status.membership == Membership::Boundary).then(|| {
        let rank = (&v.e0 / f.degree_rat()).abs();
        rank == rat_int(1) || rank == rat_int(2)
    });
    let interior_violation = status.membership == Membership::Interior;
    Ok(SheafBoundReport { m: region.m().clone(), status, boundary_rank_ok, interior_violation })
}

/// The `n`-th extension iterate `(e0 + n d, e1, 0, e3)` of a `ch2 = 0`
/// character: each step stacks one copy of the trivial line bundle.
pub fn extension_iteration(v: &CharVec, f: &FanoData, n: u64) -> Result<CharVec> {
    if !v.e2.is_zero() {
        return Err(Error::Precondition("extension iteration requires ch2 = 0"));
    }
    let shift = Rat::from_integer(BigInt::from(n)) * f.degree_rat();
    Ok(CharVec::new(&v.e0 + shift, v.e1.clone(), Rat::zero(), v.e3.clone()))
}

/// The least `n >= 0` at which the reduced point of the `n`-th iterate is no
/// longer exterior to `R_{3/(2rd)}`; iterates with `e0 = 0` are skipped.
///
/// Termination: the x-coordinate `e1/(e0 + nd)` tends to `0`, so eventually
/// `x^2 <= m` and `|x| <= 1/2`; at `y = 0` the parabola and both adjacent
/// tangent constraints then hold, the tangent at `0` with equality.
pub fn first_n_reaching_bound(v: &CharVec, f: &FanoData) -> Result<u64> {
    if !v.e2.is_zero() {
        return Err(Error::Precondition("extension iteration requires ch2 = 0"));
    }
    let region = RegionSpec::sheaf_bound(f);
    let mut n: u64 = 0;
    loop {
        let w = extension_iteration(v, f, n)?;
        if !w.e0.is_zero() {
            let status = region_membership(&reduced_point(&w)?, &region)?;
            if status.membership != Membership::Exterior {
                return Ok(n);
            }
        }
        n += 1;
    }
}
