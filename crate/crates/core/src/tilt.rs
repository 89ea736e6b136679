//! Tilt stability data: the reduced central charge, the tilt slope `nu`, and
//! the full charge used past the second wall-crossing.
//!
//! The parameter space is the half-plane `alpha > 0`, `beta` rational. To
//! stay inside exact rational arithmetic the parameter is stored as
//! `alpha2 = alpha^2`; `alpha` itself is never materialized. The reduced
//! charge at `(alpha, beta)` of a character `v` is
//!
//! ```text
//! Zbar(v) = 3 alpha e1^beta  +  i sqrt(3) (e2^beta - (alpha^2/2) e0)
//! ```
//!
//! so the real part is a rational multiple of `alpha` and the imaginary part
//! a rational multiple of `sqrt(3)`. Both prefactors are positive, so slope
//! comparisons cross-multiply the rational coefficients and never touch the
//! radicals; the exact slope value with its irrational prefactor can still
//! be recovered as a quadratic number on demand.

use crate::charplane::{kernel_point, PlanePoint};
use crate::chern::CharVec;
use crate::error::{Error, Result};
use crate::exactnum::{rat_int, Quad, Rat};
use core::cmp::Ordering;
use num_traits::{Signed, Zero};

/// A point `(alpha^2, beta)` of the tilt parameter half-plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TiltParam {
    alpha2: Rat,
    beta: Rat,
}

/// The reduced central charge in factored exact form:
/// `Re = re_alpha * alpha`, `Im = sqrt(3) * im_coeff`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedCharge {
    pub re_alpha: Rat,
    pub im_coeff: Rat,
}

/// The tilt slope `nu = Im Zbar / Re Zbar` at a fixed parameter, kept as the
/// exact pair `(num, den)` with `nu = num / (sqrt(3) * den * alpha)`;
/// `den = 0` encodes `+infinity` (in particular `0/0` follows the convention
/// that a vanishing real part means infinite slope).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TiltSlope {
    num: Rat,
    den: Rat,
    alpha2: Rat,
}

/// The full (rank-three-lattice) central charge at rational parameters; both
/// parts are plain rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullCharge {
    pub re: Rat,
    pub im: Rat,
}

impl TiltParam {
    pub fn new(alpha2: Rat, beta: Rat) -> Result<TiltParam> {
        if !alpha2.is_positive() {
            return Err(Error::NonPositiveAlpha);
        }
        Ok(TiltParam { alpha2, beta })
    }

    pub fn from_ints(alpha2: (i64, i64), beta: (i64, i64)) -> Result<TiltParam> {
        TiltParam::new(
            Rat::new(alpha2.0.into(), alpha2.1.into()),
            Rat::new(beta.0.into(), beta.1.into()),
        )
    }

    pub fn alpha2(&self) -> &Rat {
        &self.alpha2
    }

    pub fn beta(&self) -> &Rat {
        &self.beta
    }

    /// The kernel point of the reduced charge: `(beta, (alpha^2 + beta^2)/2)`
    /// in the character plane.
    pub fn kernel_point(&self) -> PlanePoint {
        kernel_point(&self.alpha2, &self.beta).expect("alpha2 > 0 by construction")
    }
}

/// Reduced central charge of `v` at `p`, in factored form.
pub fn reduced_charge(p: &TiltParam, v: &CharVec) -> ReducedCharge {
    let tw = v.twist_rational(p.beta());
    ReducedCharge {
        re_alpha: rat_int(3) * &tw.e1,
        im_coeff: &tw.e2 - p.alpha2() / rat_int(2) * &tw.e0,
    }
}

/// Tilt slope of `v` at `p` in exact cross-multipliable form.
pub fn nu(p: &TiltParam, v: &CharVec) -> TiltSlope {
    let tw = v.twist_rational(p.beta());
    TiltSlope {
        num: &tw.e2 - p.alpha2() / rat_int(2) * &tw.e0,
        den: tw.e1,
        alpha2: p.alpha2().clone(),
    }
}

impl TiltSlope {
    /// Rational numerator `e2^beta - (alpha^2/2) e0`.
    pub fn num(&self) -> &Rat {
        &self.num
    }

    /// Rational denominator coefficient `e1^beta` (of `sqrt(3) * alpha`).
    pub fn den(&self) -> &Rat {
        &self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    /// The slope with `sqrt(3) alpha` scaled away: `num/den`. This is an
    /// order-preserving rescaling at fixed parameters. `None` when infinite.
    pub fn normalized(&self) -> Option<Rat> {
        (!self.is_infinite()).then(|| &self.num / &self.den)
    }

    /// The exact slope value `num / (sqrt(3) alpha den)` as a quadratic
    /// number; `None` when infinite.
    pub fn exact_value(&self) -> Result<Option<Quad>> {
        if self.is_infinite() {
            return Ok(None);
        }
        let prefactor = Quad::sqrt(&(rat_int(1) / (rat_int(3) * &self.alpha2)))?;
        Ok(Some(prefactor.scale(&(&self.num / &self.den))))
    }

    /// Total order on slopes at one parameter point: finite values compare
    /// as real numbers, `+infinity` dominates everything and ties with
    /// itself. Comparing slopes from different parameters is a logic error.
    pub fn compare(&self, other: &TiltSlope) -> Ordering {
        debug_assert_eq!(self.alpha2, other.alpha2, "slopes from different parameters");
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => {
                let lhs = &self.num * &other.den;
                let rhs = &other.num * &self.den;
                let flip = self.den.is_negative() != other.den.is_negative();
                if flip {
                    rhs.cmp(&lhs)
                } else {
                    lhs.cmp(&rhs)
                }
            }
        }
    }
}

/// Full central charge
/// `Z = (-e3^beta + b e2^beta + a e1^beta) + i (e2^beta - (alpha^2/2) e0)`,
/// defined for coefficients with `a > alpha^2/6 + |b| alpha / 2`. The
/// constraint involves `alpha = sqrt(alpha2)` and is decided exactly through
/// a quadratic-number sign.
pub fn full_charge(p: &TiltParam, a: &Rat, b: &Rat, v: &CharVec) -> Result<FullCharge> {
    let margin = a - p.alpha2() / rat_int(6);
    let radical = Quad::sqrt(p.alpha2())?.scale(&(b.abs() / rat_int(2)));
    let slack = &Quad::from_rat(margin) - &radical;
    if slack.signum() <= 0 {
        return Err(Error::ChargeConstraint);
    }
    let tw = v.twist_rational(p.beta());
    Ok(FullCharge {
        re: -&tw.e3 + b * &tw.e2 + a * &tw.e1,
        im: &tw.e2 - p.alpha2() / rat_int(2) * &tw.e0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chern::line_bundle_char;
    use crate::exactnum::rat;
    use crate::fano::FanoData;

    fn p3() -> FanoData {
        FanoData::new(4, 1).unwrap()
    }

    #[test]
    fn reduced_charge_of_the_trivial_bundle() {
        // v(O), alpha2 = 1, beta = -1: Re = 3 d alpha, Im = 0.
        for f in [p3(), FanoData::new(1, 10).unwrap()] {
            let p = TiltParam::from_ints((1, 1), (-1, 1)).unwrap();
            let z = reduced_charge(&p, &line_bundle_char(&f, 0));
            assert_eq!(z.re_alpha, rat_int(3) * f.degree_rat());
            assert!(z.im_coeff.is_zero());
            let s = nu(&p, &line_bundle_char(&f, 0));
            assert_eq!(s.normalized(), Some(rat_int(0)));
        }
    }

    #[test]
    fn nu_of_line_bundles() {
        // nu numerator for O(k) is d[(k - beta)^2 - alpha^2]/2.
        let f = FanoData::new(2, 3).unwrap();
        let p = TiltParam::from_ints((1, 4), (1, 2)).unwrap();
        for k in -3i64..=3 {
            let s = nu(&p, &line_bundle_char(&f, k));
            let kb = rat_int(k) - p.beta();
            let expected = f.degree_rat() * (&kb * &kb - p.alpha2()) / rat_int(2);
            assert_eq!(s.num(), &expected);
            assert_eq!(s.den(), &(f.degree_rat() * &kb));
        }
    }

    #[test]
    fn nu_comparisons_and_infinity() {
        let f = p3();
        let p = TiltParam::from_ints((1, 1), (0, 1)).unwrap();
        let oh = nu(&p, &line_bundle_char(&f, 1));
        let omh = nu(&p, &line_bundle_char(&f, -1));
        // (alpha2, beta) = (1, 0) lies on the wall between O(H) and O(-H).
        assert_eq!(oh.compare(&omh), Ordering::Equal);
        let o2h = nu(&p, &line_bundle_char(&f, 2));
        assert_eq!(o2h.compare(&oh), Ordering::Greater);
        // Sheaves supported in codimension >= 2 have infinite slope.
        let torsion = nu(&p, &CharVec::from_ints(0, 0, 2, 1));
        assert!(torsion.is_infinite());
        assert_eq!(torsion.compare(&oh), Ordering::Greater);
        assert_eq!(torsion.compare(&torsion), Ordering::Equal);
        assert_eq!(oh.compare(&torsion), Ordering::Less);
        // Scale invariance of the comparison.
        let doubled = nu(&p, &line_bundle_char(&f, 1).scale(&rat_int(2)));
        assert_eq!(doubled.compare(&oh), Ordering::Equal);
    }

    #[test]
    fn nu_exact_value_carries_the_radical_prefactor() {
        // O(H) on P^3 at alpha2 = 1/4, beta = 0: nu = sqrt(3)/4.
        let p = TiltParam::from_ints((1, 4), (0, 1)).unwrap();
        let s = nu(&p, &line_bundle_char(&p3(), 1));
        assert_eq!(s.num(), &rat(3, 8));
        assert_eq!(s.den(), &rat_int(1));
        let exact = s.exact_value().unwrap().unwrap();
        assert_eq!(exact, Quad::new(rat_int(0), rat(1, 4), 3).unwrap());
        let inf = nu(&p, &CharVec::from_ints(0, 0, 1, 0));
        assert_eq!(inf.exact_value().unwrap(), None);
    }

    #[test]
    fn full_charge_constraint_is_exact() {
        let p = TiltParam::from_ints((1, 1), (0, 1)).unwrap();
        let v = line_bundle_char(&p3(), 0);
        // a = alpha^2/6 + |b| alpha / 2 exactly: rejected.
        assert!(matches!(
            full_charge(&p, &(rat(1, 6) + rat(1, 2)), &rat_int(1), &v),
            Err(Error::ChargeConstraint)
        ));
        // Slightly above: accepted; Im(Z(O)) < 0 at beta = 0.
        let z = full_charge(&p, &(rat(1, 6) + rat(1, 2) + rat(1, 100)), &rat_int(1), &v).unwrap();
        assert_eq!(z.im, rat(-1, 2));
        // Irrational threshold: alpha2 = 2, b = 1 needs a > 1/3 + sqrt(2)/2.
        let p = TiltParam::from_ints((2, 1), (0, 1)).unwrap();
        assert!(full_charge(&p, &rat(104, 100), &rat_int(1), &v).is_err());
        assert!(full_charge(&p, &rat(105, 100), &rat_int(1), &v).is_ok());
        // Skyscraper class: Z = -1 independent of parameters.
        let sky = full_charge(&p, &rat_int(1), &rat_int(0), &CharVec::from_ints(0, 0, 0, 1))
            .unwrap();
        assert_eq!((sky.re, sky.im), (rat_int(-1), rat_int(0)));
    }

    #[test]
    fn kernel_point_matches_charge_kernel() {
        // The reduced charge of a character whose reduced point is the kernel
        // point vanishes identically.
        let p = TiltParam::from_ints((1, 3), (1, 2)).unwrap();
        let k = p.kernel_point();
        let (x, y) = k.affine().unwrap();
        let v = CharVec::new(rat_int(1), x, y, rat_int(0));
        let z = reduced_charge(&p, &v);
        assert!(z.re_alpha.is_zero() && z.im_coeff.is_zero());
    }
}
