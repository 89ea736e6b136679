//! Chern characters in H-paired degree coordinates, their twists, slopes,
//! discriminants and the Euler pairing.
//!
//! A character is stored as the degree vector
//! `v = (H^3 ch0, H^2 ch1, H ch2, ch3)`, written `(e0, e1, e2, e3)`. All four
//! entries are rational; on a threefold of degree `d = H^3` the line bundle
//! `O(mH)` has `v(O(mH)) = d * (1, m, m^2/2, m^3/6)`.
//!
//! Twisting by `beta` replaces `E` by `E(-beta H)` formally; the degree
//! coordinates make the twist independent of `d`. The invariant `beta-bar`
//! is the smaller root of `ch2`-degree under twisting and is in general a
//! quadratic irrational, which is why [`Quad`] enters here.

use crate::error::{Error, Result};
use crate::exactnum::{rat_int, Quad, Rat};
use crate::fano::FanoData;
use core::fmt;
use core::ops::{Add, Neg, Sub};
use num_traits::{Signed, Zero};

/// A Chern character in H-paired degrees `(H^3 ch0, H^2 ch1, H ch2, ch3)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharVec {
    pub e0: Rat,
    pub e1: Rat,
    pub e2: Rat,
    pub e3: Rat,
}

/// A character with entries in a fixed real quadratic field, as produced by
/// twisting a rational character by an irrational `beta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadCharVec {
    pub e0: Quad,
    pub e1: Quad,
    pub e2: Quad,
    pub e3: Quad,
}

/// A slope value on the extended line: finite rational or `+infinity`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtSlope {
    Finite(Rat),
    Infinite,
}

impl CharVec {
    pub fn new(e0: Rat, e1: Rat, e2: Rat, e3: Rat) -> CharVec {
        CharVec { e0, e1, e2, e3 }
    }

    /// Integer-entry convenience constructor.
    pub fn from_ints(e0: i64, e1: i64, e2: i64, e3: i64) -> CharVec {
        CharVec::new(rat_int(e0), rat_int(e1), rat_int(e2), rat_int(e3))
    }

    pub fn zero() -> CharVec {
        CharVec::from_ints(0, 0, 0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.e0.is_zero() && self.e1.is_zero() && self.e2.is_zero() && self.e3.is_zero()
    }

    /// Scales every entry by `c`.
    pub fn scale(&self, c: &Rat) -> CharVec {
        CharVec::new(&self.e0 * c, &self.e1 * c, &self.e2 * c, &self.e3 * c)
    }

    /// Twist by a rational `beta`: the character of `E(-beta H)` in degree
    /// coordinates, entirely within the rationals.
    pub fn twist_rational(&self, beta: &Rat) -> CharVec {
        let b2 = beta * beta / rat_int(2);
        let b3 = beta * beta * beta / rat_int(6);
        CharVec::new(
            self.e0.clone(),
            &self.e1 - beta * &self.e0,
            &self.e2 - beta * &self.e1 + &b2 * &self.e0,
            &self.e3 - beta * &self.e2 + &b2 * &self.e1 - &b3 * &self.e0,
        )
    }

    /// Twist by an arbitrary quadratic `beta`; the result lives in the same
    /// quadratic field as `beta`.
    pub fn twist(&self, beta: &Quad) -> QuadCharVec {
        let half = Rat::new(1.into(), 2.into());
        let sixth = Rat::new(1.into(), 6.into());
        let b2 = (beta * beta).scale(&half);
        let b3 = (beta * beta * beta).scale(&sixth);
        let lift = |r: &Rat| Quad::from_rat(r.clone());
        QuadCharVec {
            e0: lift(&self.e0),
            e1: &lift(&self.e1) - &beta.scale(&self.e0),
            e2: &(&lift(&self.e2) - &beta.scale(&self.e1)) + &b2.scale(&self.e0),
            e3: &(&(&lift(&self.e3) - &beta.scale(&self.e2)) + &b2.scale(&self.e1))
                - &b3.scale(&self.e0),
        }
    }

    /// Slope `mu_H = e1/e0`, or `+infinity` for torsion classes (`e0 = 0`).
    pub fn mu_h(&self) -> ExtSlope {
        if self.e0.is_zero() {
            ExtSlope::Infinite
        } else {
            ExtSlope::Finite(&self.e1 / &self.e0)
        }
    }

    /// The discriminant `e1^2 - 2 e0 e2`, invariant under twisting.
    pub fn discriminant(&self) -> Rat {
        &self.e1 * &self.e1 - rat_int(2) * &self.e0 * &self.e2
    }

    /// The reduced discriminant `(e1/e0)^2 - 2 e2/e0`; requires `e0 != 0`.
    /// It relates to [`CharVec::discriminant`] by a factor `e0^2`.
    pub fn reduced_discriminant(&self) -> Result<Rat> {
        if self.e0.is_zero() {
            return Err(Error::PointAtInfinity);
        }
        Ok(self.discriminant() / (&self.e0 * &self.e0))
    }

    /// The invariant `beta-bar`: for torsion classes `e2/e1`, otherwise the
    /// smaller root `(e1 - sqrt(disc))/e0` of the twisted `ch2` degree.
    pub fn beta_bar(&self) -> Result<Quad> {
        if self.e0.is_zero() {
            if self.e1.is_zero() {
                return Err(Error::UndefinedBetaBar);
            }
            return Ok(Quad::from_rat(&self.e2 / &self.e1));
        }
        let disc = self.discriminant();
        if disc.is_negative() {
            return Err(Error::NegativeDiscriminant);
        }
        let root = Quad::sqrt(&disc)?;
        let num = &Quad::from_rat(self.e1.clone()) - &root;
        Ok(num.scale(&(rat_int(1) / &self.e0)))
    }

    /// `ch3` degree twisted at `beta-bar`. By construction the `ch2` degree
    /// of that twist vanishes identically, which is asserted.
    pub fn ch3_at_beta_bar(&self) -> Result<Quad> {
        let bb = self.beta_bar()?;
        let tw = self.twist(&bb);
        assert!(tw.e2.is_zero(), "ch2 degree must vanish at beta-bar");
        Ok(tw.e3)
    }

    /// Character of the derived dual: signs flip in odd degrees.
    pub fn dual(&self) -> CharVec {
        CharVec::new(self.e0.clone(), -self.e1.clone(), self.e2.clone(), -self.e3.clone())
    }
}

impl QuadCharVec {
    /// Discriminant of a quadratic-entry character (used to confirm twist
    /// invariance at irrational parameters).
    pub fn discriminant(&self) -> Quad {
        let two = rat_int(2);
        &(&self.e1 * &self.e1) - &(&self.e0 * &self.e2).scale(&two)
    }
}

impl Add for &CharVec {
    type Output = CharVec;
    fn add(self, rhs: &CharVec) -> CharVec {
        CharVec::new(&self.e0 + &rhs.e0, &self.e1 + &rhs.e1, &self.e2 + &rhs.e2, &self.e3 + &rhs.e3)
    }
}

impl Sub for &CharVec {
    type Output = CharVec;
    fn sub(self, rhs: &CharVec) -> CharVec {
        CharVec::new(&self.e0 - &rhs.e0, &self.e1 - &rhs.e1, &self.e2 - &rhs.e2, &self.e3 - &rhs.e3)
    }
}

impl Neg for &CharVec {
    type Output = CharVec;
    fn neg(self) -> CharVec {
        CharVec::new(-self.e0.clone(), -self.e1.clone(), -self.e2.clone(), -self.e3.clone())
    }
}

impl fmt::Display for CharVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.e0, self.e1, self.e2, self.e3)
    }
}

/// Degree vector of the line bundle `O(mH)`.
pub fn line_bundle_char(f: &FanoData, m: i64) -> CharVec {
    let d = f.degree_rat();
    let mr = rat_int(m);
    CharVec::new(
        d.clone(),
        &d * &mr,
        &d * &mr * &mr / rat_int(2),
        &d * &mr * &mr * &mr / rat_int(6),
    )
}

/// Multiplicative product of characters (the degree vector of a tensor
/// product). In ordinary Chern coordinates `b_i = e_i/d` this is the Cauchy
/// convolution; the result is scaled back to degree coordinates.
pub fn char_product(f: &FanoData, v: &CharVec, w: &CharVec) -> CharVec {
    let d = f.degree_rat();
    let bv = [&v.e0 / &d, &v.e1 / &d, &v.e2 / &d, &v.e3 / &d];
    let bw = [&w.e0 / &d, &w.e1 / &d, &w.e2 / &d, &w.e3 / &d];
    let mut c = [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()];
    for (i, ci) in c.iter_mut().enumerate() {
        for j in 0..=i {
            *ci += &bv[j] * &bw[i - j];
        }
    }
    CharVec::new(&c[0] * &d, &c[1] * &d, &c[2] * &d, &c[3] * &d)
}

/// Euler characteristic `chi(E)` from the Riemann-Roch coefficients.
pub fn chi(f: &FanoData, v: &CharVec) -> Rat {
    let h = f.hrr_coefficients();
    &h.c3 * &v.e3 + &h.c2 * &v.e2 + &h.c1 * &v.e1 + &h.c0 * &v.e0
}

/// Euler pairing `chi(F, E) = chi(F^dual tensor E)` on characters.
pub fn chi_pair(f: &FanoData, v_f: &CharVec, v_e: &CharVec) -> Rat {
    chi(f, &char_product(f, &v_f.dual(), v_e))
}
