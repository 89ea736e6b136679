//! The numerical data of a Fano threefold of Picard rank one: index,
//! degree, genus, and the Riemann-Roch coefficients.
//!
//! A smooth Fano threefold `X` with `Pic(X) = Z*H` is pinned down numerically
//! by its index `r` (`-K_X = r H`) and degree `d = H^3`. The classification
//! admits exactly:
//!
//! * `r = 4`: `d = 1` (projective space),
//! * `r = 3`: `d = 2` (the quadric),
//! * `r = 2`: `1 <= d <= 5`,
//! * `r = 1`: `d` even, `2 <= d <= 22`, `d != 20`; the genus is `(d + 2)/2`.

use crate::error::{Error, Result};
use crate::exactnum::{rat, rat_int, Rat};
use alloc::vec::Vec;

/// Validated numerical invariants of a rank-one Fano threefold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanoData {
    index: u8,
    degree: u32,
    genus: Option<u32>,
}

/// Coefficients `(c3, c2, c1, c0)` expressing the Euler characteristic
/// `chi(E) = c3*ch3 + c2*H.ch2 + c1*H^2.ch1 + c0*H^3.ch0` of a sheaf in
/// terms of the H-paired degrees of its Chern character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HrrCoefficients {
    pub c3: Rat,
    pub c2: Rat,
    pub c1: Rat,
    pub c0: Rat,
}

impl FanoData {
    /// Validates `(index, degree)` against the classification; error messages
    /// name the violated clause.
    pub fn new(index: i64, degree: i64) -> Result<FanoData> {
        if !(1..=4).contains(&index) {
            return Err(Error::Classification("index must be 1, 2, 3 or 4"));
        }
        if degree < 1 {
            return Err(Error::Classification("degree must be positive"));
        }
        match index {
            4 if degree != 1 => {
                return Err(Error::Classification("index 4 forces degree 1 (projective space)"))
            }
            3 if degree != 2 => {
                return Err(Error::Classification("index 3 forces degree 2 (the quadric)"))
            }
            2 if !(1..=5).contains(&degree) => {
                return Err(Error::Classification("index 2 requires degree between 1 and 5"))
            }
            1 => {
                if degree % 2 != 0 {
                    return Err(Error::Classification("index 1 requires even degree"));
                }
                if !(2..=22).contains(&degree) {
                    return Err(Error::Classification("index 1 requires degree between 2 and 22"));
                }
                if degree == 20 {
                    return Err(Error::Classification("index 1 excludes degree 20"));
                }
            }
            _ => {}
        }
        let genus = (index == 1).then(|| (degree as u32 + 2) / 2);
        Ok(FanoData { index: index as u8, degree: degree as u32, genus })
    }

    /// Every valid `(index, degree)` pair, ordered by descending index.
    pub fn all() -> Vec<FanoData> {
        let mut out = Vec::new();
        out.push(FanoData::new(4, 1).unwrap());
        out.push(FanoData::new(3, 2).unwrap());
        for d in 1..=5 {
            out.push(FanoData::new(2, d).unwrap());
        }
        for d in (2..=22).step_by(2) {
            if d != 20 {
                out.push(FanoData::new(1, d).unwrap());
            }
        }
        out
    }

    pub fn index(&self) -> u8 {
        self.index
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Genus of the anticanonical curve section; defined only for index 1.
    pub fn genus(&self) -> Option<u32> {
        self.genus
    }

    pub fn index_rat(&self) -> Rat {
        rat_int(self.index as i64)
    }

    pub fn degree_rat(&self) -> Rat {
        rat_int(self.degree as i64)
    }

    /// Riemann-Roch coefficients for this variety.
    ///
    /// `c3 = 1` and `c2 = r/2` come from the shape of the Todd class, while
    /// `c0` and `c1` are solved from the two line-bundle values
    /// `chi(O) = 1` and `chi(O(-H)) = 0` (index >= 2) or `-1` (index 1).
    /// The solved values are asserted against the closed-form table, so a
    /// drift in either derivation or table cannot pass silently.
    pub fn hrr_coefficients(&self) -> HrrCoefficients {
        let d = self.degree_rat();
        let r = self.index_rat();
        let c3 = rat_int(1);
        let c2 = &r / rat_int(2);
        // chi(O) = c0 * d = 1.
        let c0 = rat_int(1) / &d;
        // v(O(-H)) has degrees (d, -d, d/2, -d/6); chi of it is 0 or -1.
        let target = if self.index == 1 { rat_int(-1) } else { rat_int(0) };
        let c1 = (&c3 * (-&d / rat_int(6)) + &c2 * (&d / rat_int(2)) + &c0 * &d - target) / &d;

        let expected_c1 = match self.index {
            4 => rat(11, 6),
            3 => rat(13, 12),
            2 => rat(1, 3) + rat_int(1) / &d,
            _ => rat(1, 12) + rat_int(2) / &d,
        };
        assert_eq!(c1, expected_c1, "Riemann-Roch c1 drifted from the closed form");
        HrrCoefficients { c3, c2, c1, c0 }
    }
}
