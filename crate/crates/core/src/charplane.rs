//! The projective character plane: reduced points, kernel points, tangent
//! lines, and the geometry that encodes slope comparisons and the region
//! bound for semistable sheaf characters.
//!
//! A character `v` is flattened to the projective point
//! `v~ = [e0 : e1 : e2]`; in the affine chart `e0 != 0` this is
//! `(x, y) = (ch1/ch0 degrees, ch2/ch0 degrees)`. The parabola `x^2 - 2y = 0`
//! (vanishing reduced discriminant) plays the role of the light cone:
//! kernel points of reduced central charges live strictly inside it, actual
//! sheaf characters on or below it.
//!
//! Slope comparison is projective: the tilt slopes of two characters at a
//! kernel point `P` are ordered exactly as the slopes of the lines joining
//! `P` to the two reduced points, with vertical lines on top. Everything
//! reduces to signs of 2x2 and 3x3 determinants.

use crate::chern::CharVec;
use crate::error::{Error, Result};
use crate::exactnum::{rat_int, Rat};
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// A point of the projective character plane, `[p0 : p1 : p2]`, not all zero.
/// Equality is projective (up to a nonzero rational scale).
#[derive(Debug, Clone, Eq)]
pub struct PlanePoint {
    c: [Rat; 3],
}

/// A projective line `a p0 + b p1 + c p2 = 0`.
#[derive(Debug, Clone)]
pub struct PlaneLine {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

/// Outcome of a geometric slope comparison at a kernel point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlopeOrder {
    Less,
    Equal,
    Greater,
    /// Declined: both points at infinity, or a vanishing charge.
    Incomparable,
}

/// Classification of a point against a region `R_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Interior,
    Boundary,
    Exterior,
}

/// Which constraint decided a boundary or exterior classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Binding {
    /// The parabola `y = (x^2 - m)/2`.
    Parabola,
    /// The tangent line `y = kx - k^2/2` at the integer `k`.
    Tangent(BigInt),
}

/// Result of a region membership test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionStatus {
    pub membership: Membership,
    /// For a boundary point, the first constraint met with equality; for an
    /// exterior point, the first constraint strictly violated. Constraints
    /// are scanned parabola first, then tangents by increasing `k`.
    pub binding: Option<Binding>,
}

/// The open region `R_m`: points strictly above the parabola `x^2 - 2y = m`
/// and strictly above every tangent line of the parabola `x^2 - 2y = 0` at
/// integer points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionSpec {
    m: Rat,
}

impl PlanePoint {
    pub fn new(p0: Rat, p1: Rat, p2: Rat) -> Result<PlanePoint> {
        if p0.is_zero() && p1.is_zero() && p2.is_zero() {
            return Err(Error::UndefinedReducedPoint);
        }
        Ok(PlanePoint { c: [p0, p1, p2] })
    }

    pub fn from_affine(x: Rat, y: Rat) -> PlanePoint {
        PlanePoint { c: [rat_int(1), x, y] }
    }

    pub fn coords(&self) -> &[Rat; 3] {
        &self.c
    }

    pub fn is_infinite(&self) -> bool {
        self.c[0].is_zero()
    }

    /// Affine coordinates; error for points at infinity.
    pub fn affine(&self) -> Result<(Rat, Rat)> {
        if self.is_infinite() {
            return Err(Error::PointAtInfinity);
        }
        Ok((&self.c[1] / &self.c[0], &self.c[2] / &self.c[0]))
    }

    /// Sign of the cone form `p1^2 - 2 p0 p2`; negative means strictly
    /// inside the parabola (only meaningful with `p0 != 0`).
    pub fn cone_form(&self) -> Rat {
        &self.c[1] * &self.c[1] - rat_int(2) * &self.c[0] * &self.c[2]
    }
}

impl PartialEq for PlanePoint {
    fn eq(&self, other: &PlanePoint) -> bool {
        // Projective equality: all 2x2 minors of the coordinate pair vanish.
        let [a0, a1, a2] = &self.c;
        let [b0, b1, b2] = &other.c;
        (a0 * b1 - a1 * b0).is_zero()
            && (a0 * b2 - a2 * b0).is_zero()
            && (a1 * b2 - a2 * b1).is_zero()
    }
}

impl fmt::Display for PlanePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} : {} : {}]", self.c[0], self.c[1], self.c[2])
    }
}

impl PlaneLine {
    /// The line through two projectively distinct points.
    pub fn through(p: &PlanePoint, q: &PlanePoint) -> Result<PlaneLine> {
        if p == q {
            return Err(Error::Precondition("line through two coincident points"));
        }
        let [p0, p1, p2] = p.coords();
        let [q0, q1, q2] = q.coords();
        Ok(PlaneLine {
            a: p1 * q2 - p2 * q1,
            b: p2 * q0 - p0 * q2,
            c: p0 * q1 - p1 * q0,
        })
    }

    pub fn eval(&self, p: &PlanePoint) -> Rat {
        let [p0, p1, p2] = p.coords();
        &self.a * p0 + &self.b * p1 + &self.c * p2
    }

    pub fn contains(&self, p: &PlanePoint) -> bool {
        self.eval(p).is_zero()
    }

    /// Intersection point of two lines; `None` if they coincide projectively.
    pub fn intersect(&self, other: &PlaneLine) -> Option<PlanePoint> {
        let p0 = &self.b * &other.c - &self.c * &other.b;
        let p1 = &self.c * &other.a - &self.a * &other.c;
        let p2 = &self.a * &other.b - &self.b * &other.a;
        PlanePoint::new(p0, p1, p2).ok()
    }
}

/// Reduced point `v~ = [e0 : e1 : e2]` of a character.
pub fn reduced_point(v: &CharVec) -> Result<PlanePoint> {
    PlanePoint::new(v.e0.clone(), v.e1.clone(), v.e2.clone())
}

/// Kernel point of the reduced central charge at `(alpha2, beta)`:
/// the affine point `(beta, (alpha2 + beta^2)/2)`, strictly inside the cone.
pub fn kernel_point(alpha2: &Rat, beta: &Rat) -> Result<PlanePoint> {
    if !alpha2.is_positive() {
        return Err(Error::NonPositiveAlpha);
    }
    let y = (alpha2 + beta * beta) / rat_int(2);
    Ok(PlanePoint::from_affine(beta.clone(), y))
}

/// Tangent line of the parabola `x^2 - 2y = 0` at the integer point
/// `(k, k^2/2)`, namely `y = kx - k^2/2`.
pub fn tangent_line_at(k: &BigInt) -> PlaneLine {
    let kr = Rat::from_integer(k.clone());
    PlaneLine { a: &kr * &kr / rat_int(2), b: -kr, c: rat_int(1) }
}

/// Collinearity of three plane points via the 3x3 determinant.
pub fn collinear(p: &PlanePoint, q: &PlanePoint, r: &PlanePoint) -> bool {
    let [p0, p1, p2] = p.coords();
    let [q0, q1, q2] = q.coords();
    let [r0, r1, r2] = r.coords();
    let det = p0 * (q1 * r2 - q2 * r1) - p1 * (q0 * r2 - q2 * r0) + p2 * (q0 * r1 - q1 * r0);
    det.is_zero()
}

/// Orders the tilt slopes of two characters at a kernel point `P` purely
/// geometrically: as the slopes of the lines `P v~(E)` and `P v~(F)` with
/// vertical counted as `+infinity`.
///
/// Preconditions: `P` affine and strictly inside the cone. The comparison is
/// declined (`Incomparable`) when both reduced points lie at infinity, or
/// when a reduced point coincides with `P` (vanishing reduced charge).
pub fn slope_compare(p: &PlanePoint, v_e: &CharVec, v_f: &CharVec) -> Result<SlopeOrder> {
    if p.is_infinite() {
        return Err(Error::PointAtInfinity);
    }
    if !p.cone_form().is_negative() {
        return Err(Error::OutsideCone);
    }
    let qe = reduced_point(v_e)?;
    let qf = reduced_point(v_f)?;
    if qe.is_infinite() && qf.is_infinite() {
        return Ok(SlopeOrder::Incomparable);
    }
    let (x, y) = p.affine()?;
    // Direction numbers of the line P -> Q: slope = n/t, vertical when t = 0.
    let dir = |q: &PlanePoint| {
        let [q0, q1, q2] = q.coords();
        (q2 - &y * q0, q1 - &x * q0)
    };
    let (ne, te) = dir(&qe);
    let (nf, tf) = dir(&qf);
    if (ne.is_zero() && te.is_zero()) || (nf.is_zero() && tf.is_zero()) {
        return Ok(SlopeOrder::Incomparable);
    }
    Ok(compare_extended_slopes(&ne, &te, &nf, &tf))
}

/// Compares `ne/te` with `nf/tf` as extended reals, any zero denominator
/// meaning `+infinity`.
fn compare_extended_slopes(ne: &Rat, te: &Rat, nf: &Rat, tf: &Rat) -> SlopeOrder {
    match (te.is_zero(), tf.is_zero()) {
        (true, true) => SlopeOrder::Equal,
        (true, false) => SlopeOrder::Greater,
        (false, true) => SlopeOrder::Less,
        (false, false) => {
            let lhs = ne * tf;
            let rhs = nf * te;
            let flip = te.is_negative() != tf.is_negative();
            match (lhs.cmp(&rhs), flip) {
                (core::cmp::Ordering::Equal, _) => SlopeOrder::Equal,
                (core::cmp::Ordering::Less, false) | (core::cmp::Ordering::Greater, true) => {
                    SlopeOrder::Less
                }
                _ => SlopeOrder::Greater,
            }
        }
    }
}

impl RegionSpec {
    pub fn new(m: Rat) -> Result<RegionSpec> {
        if m.is_negative() {
            return Err(Error::Precondition("region parameter m must be nonnegative"));
        }
        Ok(RegionSpec { m })
    }

    pub fn m(&self) -> &Rat {
        &self.m
    }

    /// The exclusion parameter `m = 3/(2 r d)` attached to a variety.
    pub fn sheaf_bound(f: &crate::fano::FanoData) -> RegionSpec {
        RegionSpec { m: rat_int(3) / (rat_int(2) * f.index_rat() * f.degree_rat()) }
    }
}

/// Classifies an affine point against `R_m`.
///
/// The tangent-family constraint `y > kx - k^2/2` for all integers `k` is a
/// concave maximum over `k` attained at `k = x`, so only `floor(x)` and
/// `ceil(x)` can bind; the shortcut checks exactly those two lines.
pub fn region_membership(p: &PlanePoint, region: &RegionSpec) -> Result<RegionStatus> {
    let (x, y) = p.affine()?;
    // Slack of each constraint: positive strict, zero boundary.
    let parabola_slack = &y - (&x * &x - region.m()) / rat_int(2);
    let lo = x.floor().to_integer();
    let hi = x.ceil().to_integer();
    let tangent_slack = |k: &BigInt| {
        let kr = Rat::from_integer(k.clone());
        &y - (&kr * &x - &kr * &kr / rat_int(2))
    };

    let mut constraints: Vec<(Binding, Rat)> = Vec::new();
    constraints.push((Binding::Parabola, parabola_slack));
    constraints.push((Binding::Tangent(lo.clone()), tangent_slack(&lo)));
    if hi != lo {
        constraints.push((Binding::Tangent(hi.clone()), tangent_slack(&hi)));
    }

    for (binding, slack) in &constraints {
        if slack.is_negative() {
            return Ok(RegionStatus {
                membership: Membership::Exterior,
                binding: Some(binding.clone()),
            });
        }
    }
    for (binding, slack) in &constraints {
        if slack.is_zero() {
            return Ok(RegionStatus {
                membership: Membership::Boundary,
                binding: Some(binding.clone()),
            });
        }
    }
    Ok(RegionStatus { membership: Membership::Interior, binding: None })
}
