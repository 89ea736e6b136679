//! Numerical walls for tilt stability: the locus in the `(alpha^2, beta)`
//! half-plane where two characters have equal tilt slope, and the exhaustive
//! enumeration of candidate destabilizers for a target character.
//!
//! The slope of `v` at `(alpha, beta)` equals the slope of `w` exactly when
//! the kernel point `P = (beta, (alpha^2 + beta^2)/2)` is collinear with the
//! reduced points `v~` and `w~`. Expanding the 3x3 determinant in the
//! cofactors of the kernel row turns the locus into either a semicircle
//! `alpha^2 + (beta - c)^2 = rho^2` or a vertical line `beta = const`, both
//! with rational data. A wall is stored by that data, never by sample
//! points, so equality of walls is decidable.

use crate::chern::CharVec;
use crate::error::{Error, Result};
use crate::exactnum::{rat_int, Rat};
use crate::fano::FanoData;
use crate::tilt::TiltParam;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// A numerical wall in the `(alpha^2, beta)` half-plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Wall {
    /// `alpha^2 + (beta - center)^2 = radius2`, with `radius2 > 0`.
    Semicircle { center: Rat, radius2: Rat },
    /// `beta = at`, the locus where both slopes are infinite together.
    Vertical { at: Rat },
}

/// One wall of a scan together with every lattice character producing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallGroup {
    pub wall: Wall,
    pub candidates: Vec<CharVec>,
}

/// Everything a wall scan reports. Walls are ordered vertical first (by
/// `beta`), then semicircles by descending `radius2` (outermost first) with
/// center as tie-break; candidates are ordered lexicographically. The order
/// is part of the contract, so independently produced reports compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallScanReport {
    pub target: CharVec,
    pub lattice: [u64; 4],
    pub max_rank: u32,
    pub walls: Vec<WallGroup>,
}

/// Per-slot lattice denominators: slot `i` of a candidate ranges over
/// `(d / lattice[i]) * Z`. The default `(1, 1, 2, 6)` matches Chern
/// integrality of line-bundle characters.
pub const DEFAULT_LATTICE: [u64; 4] = [1, 1, 2, 6];

/// The numerical wall of the pair `(v, w)`.
///
/// Returns `Ok(None)` when the collinearity locus misses `alpha^2 > 0`
/// entirely, and [`Error::DegenerateWall`] when the reduced points coincide
/// (the locus is the whole half-plane).
pub fn numerical_wall(v: &CharVec, w: &CharVec) -> Result<Option<Wall>> {
    crate::charplane::reduced_point(v)?;
    crate::charplane::reduced_point(w)?;
    // Cofactors of the kernel row in det [[1, beta, s], v~, w~] with
    // s = (alpha^2 + beta^2)/2: the locus is c00 - beta c01 + s c02 = 0.
    let c00 = &v.e1 * &w.e2 - &v.e2 * &w.e1;
    let c01 = &v.e0 * &w.e2 - &v.e2 * &w.e0;
    let c02 = &v.e0 * &w.e1 - &v.e1 * &w.e0;
    if c02.is_zero() && c01.is_zero() && c00.is_zero() {
        return Err(Error::DegenerateWall);
    }
    if c02.is_zero() {
        if c01.is_zero() {
            // Constant nonzero equation: both points at infinity, the locus
            // is the line at infinity and misses the affine half-plane.
            return Ok(None);
        }
        return Ok(Some(Wall::Vertical { at: &c00 / &c01 }));
    }
    // Complete the square: alpha^2 + (beta - c)^2 = c^2 - 2 c00/c02.
    let center = &c01 / &c02;
    let radius2 = &center * &center - rat_int(2) * &c00 / &c02;
    if radius2.is_positive() {
        Ok(Some(Wall::Semicircle { center, radius2 }))
    } else {
        Ok(None)
    }
}

impl Wall {
    /// Exact membership of a parameter point.
    pub fn contains(&self, p: &TiltParam) -> bool {
        match self {
            Wall::Semicircle { center, radius2 } => {
                let off = p.beta() - center;
                p.alpha2() + &off * &off == *radius2
            }
            Wall::Vertical { at } => p.beta() == at,
        }
    }

    /// `n` distinct rational parameter points on the wall.
    pub fn sample_params(&self, n: u32) -> Vec<TiltParam> {
        let mut out = Vec::new();
        match self {
            Wall::Vertical { at } => {
                for j in 0..n {
                    let alpha2 = rat_int(j as i64 + 1) / rat_int(2);
                    out.push(TiltParam::new(alpha2, at.clone()).unwrap());
                }
            }
            Wall::Semicircle { center, radius2 } => {
                // Offsets f with |f| < rho: scale rho^2/(rho^2+1), which is
                // below min(1, rho), by proper fractions.
                let h = radius2 / (radius2 + rat_int(1));
                for j in 0..n {
                    let t = rat_int(2 * j as i64 + 1 - n as i64) / rat_int(n as i64 + 1);
                    let f = &h * &t;
                    let alpha2 = radius2 - &f * &f;
                    debug_assert!(alpha2.is_positive());
                    out.push(TiltParam::new(alpha2, center + &f).unwrap());
                }
            }
        }
        out
    }

    /// Whether two walls share no point with `alpha^2 > 0`. Identical walls
    /// count as intersecting.
    pub fn disjoint_from(&self, other: &Wall) -> bool {
        match (self, other) {
            (Wall::Vertical { at: a }, Wall::Vertical { at: b }) => a != b,
            (Wall::Vertical { at }, Wall::Semicircle { center, radius2 })
            | (Wall::Semicircle { center, radius2 }, Wall::Vertical { at }) => {
                let off = at - center;
                &off * &off >= *radius2
            }
            (
                Wall::Semicircle { center: c1, radius2: r1 },
                Wall::Semicircle { center: c2, radius2: r2 },
            ) => {
                if c1 == c2 {
                    return r1 != r2;
                }
                // Equal radii at the crossing beta solve to a single line;
                // the walls meet iff the crossing has alpha^2 > 0.
                let beta = (r2 - r1 + c1 * c1 - c2 * c2) / (rat_int(2) * (c1 - c2));
                let off = &beta - c1;
                let alpha2 = r1 - &off * &off;
                !alpha2.is_positive()
            }
        }
    }
}

/// Enumerates every lattice character `w` with `|e0(w)| <= max_rank * d`,
/// `0 <= disc(w) <= disc(v)` and `0 <= disc(v - w) <= disc(v)` whose wall
/// with the target `v` is nonempty, grouped by wall.
///
/// The `e1` scan interval per `e0` slice is derived in closed form from the
/// two discriminant sandwiches (see `e1_enclosure`); `e3` does not influence
/// walls and is reported as `0`.
pub fn enumerate_walls(
    f: &FanoData,
    v: &CharVec,
    lattice: [u64; 4],
    max_rank: u32,
) -> Result<WallScanReport> {
    crate::charplane::reduced_point(v)?;
    if lattice.iter().any(|&den| den == 0) {
        return Err(Error::Precondition("lattice denominators must be positive"));
    }
    let d_bar = v.discriminant();
    if d_bar.is_negative() {
        return Err(Error::Precondition("target discriminant must be nonnegative"));
    }
    let d = f.degree_rat();
    let step = |i: usize| &d / rat_int(lattice[i] as i64);

    let mut groups: BTreeMap<SortKey, (Wall, Vec<CharVec>)> = BTreeMap::new();
    let rank_span = BigInt::from(max_rank) * BigInt::from(lattice[0]);
    let mut a0 = -rank_span.clone();
    while a0 <= rank_span {
        let w0 = Rat::from_integer(a0.clone()) * step(0);
        a0 += 1;
        if w0.is_zero() && v.e0.is_zero() {
            // Both reduced points at infinity: no affine wall can arise.
            continue;
        }
        let Some((lo1, hi1)) = e1_enclosure(v, &d_bar, &w0) else {
            continue;
        };
        let step1 = step(1);
        let mut j = (&lo1 / &step1).ceil().to_integer();
        let j_hi = (&hi1 / &step1).floor().to_integer();
        while j <= j_hi {
            let w1 = Rat::from_integer(j.clone()) * &step1;
            j += 1;
            let Some((lo2, hi2)) = e2_interval(v, &d_bar, &w0, &w1) else {
                continue;
            };
            let step2 = step(2);
            let mut k = (&lo2 / &step2).ceil().to_integer();
            let k_hi = (&hi2 / &step2).floor().to_integer();
            while k <= k_hi {
                let w2 = Rat::from_integer(k.clone()) * &step2;
                k += 1;
                let w = CharVec::new(w0.clone(), w1.clone(), w2, rat_int(0));
                if !sandwiched(&w.discriminant(), &d_bar)
                    || !sandwiched(&(v - &w).discriminant(), &d_bar)
                {
                    continue;
                }
                let wall = match numerical_wall(v, &w) {
                    Ok(Some(wall)) => wall,
                    Ok(None) => continue,
                    // Proportional to the target or a zero triple: no wall.
                    Err(Error::DegenerateWall) | Err(Error::UndefinedReducedPoint) => continue,
                    Err(e) => return Err(e),
                };
                groups
                    .entry(SortKey::of(&wall))
                    .or_insert_with(|| (wall, Vec::new()))
                    .1
                    .push(w);
            }
        }
    }

    let walls = groups
        .into_values()
        .map(|(wall, mut candidates)| {
            candidates.sort_by(cmp_char);
            candidates.dedup();
            WallGroup { wall, candidates }
        })
        .collect();
    Ok(WallScanReport { target: v.clone(), lattice, max_rank, walls })
}

fn sandwiched(x: &Rat, hi: &Rat) -> bool {
    !x.is_negative() && x <= hi
}

fn cmp_char(a: &CharVec, b: &CharVec) -> core::cmp::Ordering {
    a.e0.cmp(&b.e0)
        .then_with(|| a.e1.cmp(&b.e1))
        .then_with(|| a.e2.cmp(&b.e2))
        .then_with(|| a.e3.cmp(&b.e3))
}

/// Report ordering key: verticals first by position, then semicircles by
/// descending radius with the center breaking ties.
#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct SortKey {
    kind: u8,
    primary: Rat,
    secondary: Rat,
}

impl SortKey {
    fn of(wall: &Wall) -> SortKey {
        match wall {
            Wall::Vertical { at } => SortKey { kind: 0, primary: at.clone(), secondary: rat_int(0) },
            Wall::Semicircle { center, radius2 } => {
                SortKey { kind: 1, primary: -radius2.clone(), secondary: center.clone() }
            }
        }
    }
}

/// Closed-form `e1` scan interval for a fixed `e0 = w0` slice.
///
/// Write `A = disc(w)` and `B = disc(v - w)`, both confined to `[0, D]`
/// with `D = disc(v)`. Eliminating `w2` between
/// `A = w1^2 - 2 w0 w2` and `B = (v1 - w1)^2 - 2 (v0 - w0)(v2 - w2)` gives
///
/// ```text
/// v0 w1^2 - 2 w0 v1 w1 + w0 v1^2  =  2 w0 (v0 - w0) v2 + w0 B + (v0 - w0) A
/// ```
///
/// whose right side ranges over a known interval `I`. The left side is a
/// quadratic (or linear) in `w1`, so membership in `I` bounds `w1`:
///
/// * `w0 = 0`: `A = w1^2`, so `|w1| <= sqrt(D)` directly;
/// * `w0 = v0`: `B = (v1 - w1)^2`, so `|v1 - w1| <= sqrt(D)`;
/// * otherwise, for `v0 != 0` the quadratic side is bounded by the relevant
///   endpoint of `I`, with discriminant `w0 (w0 - v0) v1^2 + v0 * bound`,
///   and for `v0 = 0` the side is linear in `w1`.
///
/// The returned rational enclosure may be slightly loose (square roots are
/// rounded outward); every candidate is re-checked exactly afterwards.
/// `None` means the slice is provably empty.
fn e1_enclosure(v: &CharVec, d_bar: &Rat, w0: &Rat) -> Option<(Rat, Rat)> {
    if w0.is_zero() {
        let s = sqrt_upper(d_bar)?;
        return Some((-s.clone(), s));
    }
    let u0 = &v.e0 - w0;
    if u0.is_zero() {
        let s = sqrt_upper(d_bar)?;
        return Some((&v.e1 - &s, &v.e1 + &s));
    }
    let rhs0 = rat_int(2) * w0 * &u0 * &v.e2;
    let spread_w = w0 * d_bar;
    let spread_u = &u0 * d_bar;
    let hi = &rhs0 + pos_part(&spread_w) + pos_part(&spread_u);
    let lo = &rhs0 + neg_part(&spread_w) + neg_part(&spread_u);

    if v.e0.is_zero() {
        // Linear side: -2 w0 v1 w1 + w0 v1^2 must lie in [lo, hi].
        if v.e1.is_zero() {
            // The side is identically zero; zero lies in [lo, hi] only for a
            // zero target triple, which is rejected upstream.
            return None;
        }
        let coeff = rat_int(-2) * w0 * &v.e1;
        let base = w0 * &v.e1 * &v.e1;
        let a = (&lo - &base) / &coeff;
        let b = (&hi - &base) / &coeff;
        return Some(if a <= b { (a, b) } else { (b, a) });
    }
    // Quadratic side with leading coefficient v0: the binding endpoint of I
    // is `hi` for v0 > 0 (side bounded above) and `lo` for v0 < 0.
    let bound = if v.e0.is_positive() { hi } else { lo };
    let disc = w0 * (w0 - &v.e0) * &v.e1 * &v.e1 + &v.e0 * &bound;
    if disc.is_negative() {
        return None;
    }
    let r = sqrt_upper(&disc)?;
    let a = (w0 * &v.e1 - &r) / &v.e0;
    let b = (w0 * &v.e1 + &r) / &v.e0;
    Some(if a <= b { (a, b) } else { (b, a) })
}

/// Exact `e2` interval for fixed `(w0, w1)`: the intersection of the two
/// sandwich conditions, each an interval in `w2` when its pivot is nonzero
/// and a pure `w1` condition otherwise. `None` means no `w2` exists.
fn e2_interval(v: &CharVec, d_bar: &Rat, w0: &Rat, w1: &Rat) -> Option<(Rat, Rat)> {
    let mut lo: Option<Rat> = None;
    let mut hi: Option<Rat> = None;
    let mut tighten = |a: Rat, b: Rat| {
        if lo.as_ref().is_none_or(|cur| a > *cur) {
            lo = Some(a);
        }
        if hi.as_ref().is_none_or(|cur| b < *cur) {
            hi = Some(b);
        }
    };

    let sq1 = w1 * w1;
    if w0.is_zero() {
        if !sandwiched(&sq1, d_bar) {
            return None;
        }
    } else {
        let a = (&sq1 - d_bar) / (rat_int(2) * w0);
        let b = &sq1 / (rat_int(2) * w0);
        if w0.is_positive() {
            tighten(a, b);
        } else {
            tighten(b, a);
        }
    }

    let u0 = &v.e0 - w0;
    let u1 = &v.e1 - w1;
    let squ = &u1 * &u1;
    if u0.is_zero() {
        if !sandwiched(&squ, d_bar) {
            return None;
        }
    } else {
        // v2 - w2 in [(u1^2 - D)/(2 u0), u1^2/(2 u0)] for u0 > 0, flipped else.
        let a = &v.e2 - &squ / (rat_int(2) * &u0);
        let b = &v.e2 - (&squ - d_bar) / (rat_int(2) * &u0);
        if u0.is_positive() {
            tighten(a, b);
        } else {
            tighten(b, a);
        }
    }

    match (lo, hi) {
        (Some(a), Some(b)) if a <= b => Some((a, b)),
        (Some(_), Some(_)) => None,
        // Both pivots zero cannot happen: the w0 = v0 = 0 slice is skipped.
        _ => unreachable!("at least one sandwich pivots on w2"),
    }
}

fn pos_part(x: &Rat) -> Rat {
    if x.is_positive() {
        x.clone()
    } else {
        Rat::zero()
    }
}

fn neg_part(x: &Rat) -> Rat {
    if x.is_negative() {
        x.clone()
    } else {
        Rat::zero()
    }
}

/// Rational upper bound for `sqrt(q)`: `sqrt(n/m) = sqrt(nm)/m <= (isqrt(nm)+1)/m`.
fn sqrt_upper(q: &Rat) -> Option<Rat> {
    if q.is_negative() {
        return None;
    }
    let prod = q.numer() * q.denom();
    Some(Rat::new(prod.sqrt() + 1, q.denom().clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chern::line_bundle_char;
    use crate::exactnum::rat;

    fn p3() -> FanoData {
        FanoData::new(4, 1).unwrap()
    }

    fn target() -> CharVec {
        CharVec::from_ints(1, 0, -1, 0)
    }

    #[test]
    fn semicircle_example() {
        let wall = numerical_wall(&target(), &line_bundle_char(&p3(), 1)).unwrap().unwrap();
        assert_eq!(wall, Wall::Semicircle { center: rat(3, 2), radius2: rat(1, 4) });
        // The apex and a generic point of the circle are contained.
        assert!(wall.contains(&TiltParam::from_ints((1, 4), (3, 2)).unwrap()));
        assert!(wall.contains(&TiltParam::from_ints((15, 64), (13, 8)).unwrap()));
        assert!(!wall.contains(&TiltParam::from_ints((1, 4), (1, 1)).unwrap()));
        // Walls are projective in each argument.
        let rescaled = numerical_wall(&target().scale(&rat(7, 3)), &line_bundle_char(&p3(), 1));
        assert_eq!(rescaled.unwrap().unwrap(), wall);
    }

    #[test]
    fn vertical_and_empty_walls() {
        // Same slope at infinity: vertical wall through the common slope.
        let wall = numerical_wall(&target(), &CharVec::from_ints(2, 0, 1, 0)).unwrap().unwrap();
        assert_eq!(wall, Wall::Vertical { at: rat_int(0) });
        assert!(wall.contains(&TiltParam::from_ints((5, 1), (0, 1)).unwrap()));
        // v~(O) against the horizontal point at infinity: locus alpha^2 +
        // beta^2 = 0, empty in the half-plane.
        let v = CharVec::from_ints(1, 0, 0, 0);
        assert_eq!(numerical_wall(&v, &CharVec::from_ints(0, 1, 0, 0)).unwrap(), None);
        // ... but the vertical point at infinity gives the line beta = 0.
        assert_eq!(
            numerical_wall(&v, &CharVec::from_ints(0, 0, 1, 0)).unwrap(),
            Some(Wall::Vertical { at: rat_int(0) })
        );
        // Two distinct points at infinity: the line at infinity, no wall.
        assert_eq!(
            numerical_wall(&CharVec::from_ints(0, 1, 0, 0), &CharVec::from_ints(0, 0, 1, 0))
                .unwrap(),
            None
        );
        // Proportional reduced points degenerate.
        assert!(matches!(
            numerical_wall(&target(), &CharVec::from_ints(3, 0, -3, 5)),
            Err(Error::DegenerateWall)
        ));
        assert!(matches!(
            numerical_wall(&target(), &CharVec::zero()),
            Err(Error::UndefinedReducedPoint)
        ));
    }

    #[test]
    fn wall_sampling_stays_on_the_wall() {
        let wall = Wall::Semicircle { center: rat(3, 2), radius2: rat(1, 4) };
        let params = wall.sample_params(10);
        assert_eq!(params.len(), 10);
        for p in &params {
            assert!(wall.contains(p));
        }
        let vertical = Wall::Vertical { at: rat(-2, 3) };
        for p in vertical.sample_params(5) {
            assert!(vertical.contains(&p));
        }
    }

    #[test]
    fn disjointness_predicate() {
        let a = Wall::Semicircle { center: rat_int(0), radius2: rat_int(4) };
        let b = Wall::Semicircle { center: rat_int(0), radius2: rat_int(1) };
        assert!(a.disjoint_from(&b)); // concentric
        let c = Wall::Semicircle { center: rat_int(1), radius2: rat_int(2) };
        assert!(!a.disjoint_from(&c)); // cross at beta = 3/2, alpha^2 = 7/4
        let d = Wall::Semicircle { center: rat_int(3), radius2: rat_int(1) };
        assert!(a.disjoint_from(&d)); // tangent at (2, 0), outside alpha > 0
        let v = Wall::Vertical { at: rat_int(0) };
        assert!(!v.disjoint_from(&a));
        assert!(v.disjoint_from(&d));
        assert!(v.disjoint_from(&Wall::Vertical { at: rat_int(1) }));
        assert!(!v.disjoint_from(&Wall::Vertical { at: rat_int(0) }));
    }

    #[test]
    fn scan_finds_the_line_bundle_wall() {
        let report = enumerate_walls(&p3(), &target(), DEFAULT_LATTICE, 2).unwrap();
        assert!(!report.walls.is_empty());
        let lb_wall = Wall::Semicircle { center: rat(3, 2), radius2: rat(1, 4) };
        let group = report
            .walls
            .iter()
            .find(|g| g.wall == lb_wall)
            .expect("wall of O(H) must be found");
        assert!(group.candidates.contains(&CharVec::new(
            rat_int(1),
            rat_int(1),
            rat(1, 2),
            rat_int(0)
        )));
        // Report order: any verticals first, semicircles by descending radius.
        let mut last: Option<SortKey> = None;
        for g in &report.walls {
            let key = SortKey::of(&g.wall);
            if let Some(prev) = &last {
                assert!(*prev < key);
            }
            last = Some(key);
        }
        // All walls pairwise disjoint.
        for (i, a) in report.walls.iter().enumerate() {
            for b in &report.walls[i + 1..] {
                assert!(a.wall.disjoint_from(&b.wall), "{:?} meets {:?}", a.wall, b.wall);
            }
        }
        // Slopes really agree along each wall.
        for g in &report.walls {
            for p in g.wall.sample_params(10) {
                let nv = crate::tilt::nu(&p, &target());
                for w in &g.candidates {
                    let nw = crate::tilt::nu(&p, w);
                    assert_eq!(nv.compare(&nw), core::cmp::Ordering::Equal);
                }
            }
        }
    }

    #[test]
    fn scan_of_rigid_target_is_empty() {
        // disc = 0 forces every candidate onto the target's own ray.
        let v = CharVec::from_ints(1, 0, 0, -1);
        let report = enumerate_walls(&p3(), &v, DEFAULT_LATTICE, 2).unwrap();
        assert!(report.walls.is_empty());
        // In particular v(O(-H)) fails the sandwich: disc(v - w) > disc(v).
        let w = line_bundle_char(&p3(), -1);
        assert!(w.discriminant().is_zero());
        assert_eq!((&v - &w).discriminant(), rat_int(1));
    }

    #[test]
    fn scan_matches_brute_force_box() {
        // Exhaustive box scan over a box that must contain every candidate;
        // verifies the derived e1 enclosure on small instances.
        let cases = [
            (p3(), CharVec::from_ints(1, 0, -1, 0)),
            (p3(), CharVec::from_ints(2, 1, -1, 0)),
            (FanoData::new(2, 2).unwrap(), CharVec::new(rat_int(2), rat_int(2), rat_int(-2), rat_int(0))),
            (p3(), CharVec::from_ints(0, 1, 0, 0)),
            (p3(), CharVec::new(rat_int(-1), rat_int(1), rat_int(1), rat_int(0))),
        ];
        for (f, v) in cases {
            let max_rank = 2u32;
            let report = enumerate_walls(&f, &v, DEFAULT_LATTICE, max_rank).unwrap();
            let mut from_scan: Vec<(Wall, CharVec)> = Vec::new();
            for g in &report.walls {
                for c in &g.candidates {
                    from_scan.push((g.wall.clone(), c.clone()));
                }
            }
            let d_bar = v.discriminant();
            let d = f.degree_rat();
            let mut from_box: Vec<(Wall, CharVec)> = Vec::new();
            for a0 in -(max_rank as i64)..=max_rank as i64 {
                for j in -30i64..=30 {
                    for k in -60i64..=60 {
                        let w = CharVec::new(
                            rat_int(a0) * &d,
                            rat_int(j) * &d,
                            rat(k, 2) * &d,
                            rat_int(0),
                        );
                        if w.is_zero()
                            || !sandwiched(&w.discriminant(), &d_bar)
                            || !sandwiched(&(&v - &w).discriminant(), &d_bar)
                        {
                            continue;
                        }
                        if let Ok(Some(wall)) = numerical_wall(&v, &w) {
                            from_box.push((wall, w));
                        }
                    }
                }
            }
            // Every box candidate must be inside the derived enclosure scan.
            for item in &from_box {
                assert!(from_scan.contains(item), "missed candidate {:?}", item.1);
            }
            // And the scan found nothing outside the box.
            for (_, c) in &from_scan {
                let j = &c.e1 / &d;
                let k = rat_int(2) * &c.e2 / &d;
                assert!(j.is_integer() && j.abs() <= rat_int(30));
                assert!(k.is_integer() && k.abs() <= rat_int(60));
            }
            assert_eq!(from_scan.len(), from_box.len());
        }
    }
}
