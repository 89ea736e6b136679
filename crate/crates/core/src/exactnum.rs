//! Exact scalar arithmetic: arbitrary-precision rationals and real quadratic
//! irrationals `a + b*sqrt(D)`.
//!
//! Everything downstream (slopes, discriminants, wall radii, region tests)
//! reduces to sign decisions over these two scalar kinds, so this module is
//! the only place where "is this number positive?" is ever answered.
//!
//! Rationals are [`num_rational::BigRational`] values, re-exported as [`Rat`]:
//! always reduced, denominator always positive, `Display`/`FromStr` use the
//! `p/q` form (just `p` when the denominator is 1).
//!
//! A [`Quad`] is kept in a canonical form: the radicand is square-free, and a
//! value that is actually rational is stored with radical part `0` and
//! radicand `1`. That makes structural equality coincide with numeric
//! equality and keeps sign computation a matter of comparing `a^2` with
//! `b^2 D`.

use crate::error::{Error, Result};
use alloc::string::String;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational scalar.
pub type Rat = num_rational::BigRational;

/// Shorthand for a rational from an integer pair. Panics on zero denominator,
/// so it is meant for literals in code and tests, not for parsing input.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer as a rational.
pub fn rat_int(num: i64) -> Rat {
    Rat::from_integer(BigInt::from(num))
}

/// Trial-division bound for square-free reduction. Any remaining cofactor
/// with all prime factors above this bound and below `BOUND^3` is either a
/// perfect square or already square-free, so the decomposition stays exact.
const FACTOR_BOUND: u64 = 1 << 20;

/// Writes a nonnegative rational `q` as `s^2 * D` with `s` rational and `D` a
/// square-free nonnegative integer, returning `(s, D)` with `s >= 0`.
///
/// `0` decomposes as `(0, 1)`. Fails with [`Error::NegativeRadicand`] for
/// negative input and with [`Error::RadicandTooLarge`] in the (practically
/// unreachable) case where the square-free part cannot be certified below
/// the factor bound.
pub fn sqrt_decompose(q: &Rat) -> Result<(Rat, u64)> {
    if q.is_negative() {
        return Err(Error::NegativeRadicand);
    }
    if q.is_zero() {
        return Ok((Rat::zero(), 1));
    }
    // q = n/m with n, m > 0; q = (n m) / m^2, so only n*m needs reduction.
    let n = q.numer() * q.denom();
    let (root, d) = square_free_part(n)?;
    let s = Rat::new(root, q.denom().clone());
    Ok((s, d))
}

/// Splits a positive integer as `root^2 * d` with `d` square-free.
fn square_free_part(mut n: BigInt) -> Result<(BigInt, u64)> {
    debug_assert!(n.is_positive());
    let mut root = BigInt::one();
    let mut d = BigInt::one();
    let mut p = 2u64;
    while p <= FACTOR_BOUND {
        let pb = BigInt::from(p);
        if &pb * &pb > n {
            break;
        }
        if (&n % &pb).is_zero() {
            let mut exp = 0u32;
            while (&n % &pb).is_zero() {
                n /= &pb;
                exp += 1;
            }
            root *= pb.pow(exp / 2);
            if exp % 2 == 1 {
                d *= BigInt::from(p);
            }
        }
        p = if p == 2 { 3 } else { p + 2 };
    }
    if !n.is_one() {
        // All prime factors of the cofactor exceed min(FACTOR_BOUND, sqrt(n)).
        let sqrt = n.sqrt();
        if (&sqrt * &sqrt) == n {
            root *= sqrt;
        } else if n < BigInt::from(FACTOR_BOUND).pow(3) {
            // At most two prime factors and not a square: square-free.
            d *= n;
        } else {
            return Err(Error::RadicandTooLarge);
        }
    }
    let d: u64 = u64::try_from(&d).map_err(|_| Error::RadicandTooLarge)?;
    Ok((root, d))
}

/// A real quadratic number `a + b*sqrt(D)` over the rationals.
///
/// Canonical form: `D` square-free; `b = 0` implies `D = 1`; radicand `1`
/// is the rational embedding. Arithmetic stays inside one quadratic field:
/// combining two values with distinct irrational radicands is an error (the
/// operator impls panic; use the `checked_*` methods at trust boundaries).
#[derive(Clone, PartialEq, Eq)]
pub struct Quad {
    a: Rat,
    b: Rat,
    d: u64,
}

impl Quad {
    /// Builds `a + b*sqrt(radicand)`, normalizing the radicand square-free.
    pub fn new(a: Rat, b: Rat, radicand: u64) -> Result<Quad> {
        let (s, d) = sqrt_decompose(&Rat::from_integer(BigInt::from(radicand)))?;
        Ok(Quad::normalized(a, b * s, d))
    }

    /// The rational `a` embedded as a quadratic number.
    pub fn from_rat(a: Rat) -> Quad {
        Quad { a, b: Rat::zero(), d: 1 }
    }

    /// Integer convenience constructor.
    pub fn from_int(n: i64) -> Quad {
        Quad::from_rat(rat_int(n))
    }

    /// Exact square root of a nonnegative rational, as `s * sqrt(D)`.
    pub fn sqrt(q: &Rat) -> Result<Quad> {
        let (s, d) = sqrt_decompose(q)?;
        Ok(Quad::normalized(Rat::zero(), s, d))
    }

    pub fn zero() -> Quad {
        Quad::from_rat(Rat::zero())
    }

    /// Restores the canonical form after arithmetic: radicands 0 and 1 fold
    /// into the rational part, and a vanishing radical part resets `D` to 1.
    fn normalized(a: Rat, b: Rat, d: u64) -> Quad {
        debug_assert!(d == 0 || is_square_free(d));
        if d == 0 {
            return Quad { a, b: Rat::zero(), d: 1 };
        }
        if d == 1 {
            return Quad { a: a + b, b: Rat::zero(), d: 1 };
        }
        if b.is_zero() {
            return Quad { a, b, d: 1 };
        }
        Quad { a, b, d }
    }

    /// Rational part `a`.
    pub fn rational_part(&self) -> &Rat {
        &self.a
    }

    /// Radical coefficient `b`.
    pub fn radical_part(&self) -> &Rat {
        &self.b
    }

    /// Square-free radicand `D` (1 when the value is rational).
    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// True when the value lies in the rational subfield.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The rational value, if the radical part vanishes.
    pub fn as_rat(&self) -> Option<&Rat> {
        self.is_rational().then_some(&self.a)
    }

    /// Galois conjugate `a - b*sqrt(D)`.
    pub fn conjugate(&self) -> Quad {
        Quad { a: self.a.clone(), b: -self.b.clone(), d: self.d }
    }

    /// Field norm `a^2 - b^2 D`, a rational.
    pub fn norm(&self) -> Rat {
        &self.a * &self.a - &self.b * &self.b * rat_int(self.d as i64)
    }

    /// Exact sign: `-1`, `0` or `+1`, decided by rational comparisons only.
    ///
    /// With `D` square-free and `> 1`, `a + b*sqrt(D)` vanishes only when
    /// both parts do; for mixed-sign parts the sign is the sign of
    /// `a^2 - b^2 D` transferred through the sign of `a`.
    pub fn signum(&self) -> i8 {
        let sa = rat_sign(&self.a);
        let sb = rat_sign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        // a and b*sqrt(D) pull in opposite directions: |a| vs |b| sqrt(D).
        let n = self.norm();
        match rat_sign(&n) {
            0 => 0,
            s => s * sa,
        }
    }

    /// Total order within one quadratic field (or against a rational).
    pub fn checked_cmp(&self, rhs: &Quad) -> Result<core::cmp::Ordering> {
        let diff = self.checked_sub(rhs)?;
        Ok(match diff.signum() {
            -1 => core::cmp::Ordering::Less,
            0 => core::cmp::Ordering::Equal,
            _ => core::cmp::Ordering::Greater,
        })
    }

    fn common_radicand(&self, rhs: &Quad) -> Result<u64> {
        if self.d == rhs.d {
            Ok(self.d)
        } else if self.b.is_zero() {
            Ok(rhs.d)
        } else if rhs.b.is_zero() {
            Ok(self.d)
        } else {
            Err(Error::IncompatibleRadicands(self.d, rhs.d))
        }
    }

    pub fn checked_add(&self, rhs: &Quad) -> Result<Quad> {
        let d = self.common_radicand(rhs)?;
        Ok(Quad::normalized(&self.a + &rhs.a, &self.b + &rhs.b, d))
    }

    pub fn checked_sub(&self, rhs: &Quad) -> Result<Quad> {
        let d = self.common_radicand(rhs)?;
        Ok(Quad::normalized(&self.a - &rhs.a, &self.b - &rhs.b, d))
    }

    pub fn checked_mul(&self, rhs: &Quad) -> Result<Quad> {
        let d = self.common_radicand(rhs)?;
        let rad = rat_int(d as i64);
        let a = &self.a * &rhs.a + &self.b * &rhs.b * &rad;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        Ok(Quad::normalized(a, b, d))
    }

    pub fn checked_div(&self, rhs: &Quad) -> Result<Quad> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = self.common_radicand(rhs)?;
        // Multiply by the conjugate; the norm of a nonzero value is nonzero
        // because sqrt(D) is irrational for square-free D > 1.
        let n = rhs.norm();
        debug_assert!(!n.is_zero());
        let conj = rhs.conjugate();
        let prod = self.checked_mul(&conj)?;
        Ok(Quad::normalized(prod.a / &n, prod.b / &n, d))
    }

    /// Scales by a rational (always compatible).
    pub fn scale(&self, c: &Rat) -> Quad {
        Quad::normalized(&self.a * c, &self.b * c, self.d)
    }
}

fn rat_sign(q: &Rat) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

fn is_square_free(d: u64) -> bool {
    let mut n = d;
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n % (p * p) == 0 {
            return false;
        }
        while n % p == 0 {
            n /= p;
        }
        p += 1;
    }
    true
}

impl fmt::Debug for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if !self.a.is_zero() {
            write!(f, "{} ", self.a)?;
            if self.b.is_negative() {
                write!(f, "- ")?;
            } else {
                write!(f, "+ ")?;
            }
            let mag = self.b.abs();
            if mag.is_one() {
                return write!(f, "sqrt({})", self.d);
            }
            return write!(f, "{}*sqrt({})", mag, self.d);
        }
        if self.b.is_one() {
            write!(f, "sqrt({})", self.d)
        } else {
            write!(f, "{}*sqrt({})", self.b, self.d)
        }
    }
}

/// Renders a `Quad` for diagnostics where only a `String` is wanted.
pub fn quad_to_string(x: &Quad) -> String {
    alloc::format!("{x}")
}

macro_rules! quad_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &Quad {
            type Output = Quad;
            fn $method(self, rhs: &Quad) -> Quad {
                self.$checked(rhs).expect("quadratic numbers from distinct fields")
            }
        }
        impl $trait for Quad {
            type Output = Quad;
            fn $method(self, rhs: Quad) -> Quad {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Quad> for Quad {
            type Output = Quad;
            fn $method(self, rhs: &Quad) -> Quad {
                (&self).$method(rhs)
            }
        }
    };
}

quad_binop!(Add, add, checked_add);
quad_binop!(Sub, sub, checked_sub);
quad_binop!(Mul, mul, checked_mul);
quad_binop!(Div, div, checked_div);

impl Neg for &Quad {
    type Output = Quad;
    fn neg(self) -> Quad {
        Quad { a: -self.a.clone(), b: -self.b.clone(), d: self.d }
    }
}

impl Neg for Quad {
    type Output = Quad;
    fn neg(self) -> Quad {
        -&self
    }
}

impl Mul<&Rat> for &Quad {
    type Output = Quad;
    fn mul(self, rhs: &Rat) -> Quad {
        self.scale(rhs)
    }
}

impl Add<&Rat> for &Quad {
    type Output = Quad;
    fn add(self, rhs: &Rat) -> Quad {
        Quad::normalized(&self.a + rhs, self.b.clone(), self.d)
    }
}

impl Sub<&Rat> for &Quad {
    type Output = Quad;
    fn sub(self, rhs: &Rat) -> Quad {
        Quad::normalized(&self.a - rhs, self.b.clone(), self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn q(n: i64, d: i64) -> Rat {
        rat(n, d)
    }

    #[test]
    fn rational_string_round_trip() {
        let x = q(-22, 7);
        assert_eq!(alloc::format!("{x}"), "-22/7");
        assert_eq!("-22/7".parse::<Rat>().unwrap(), x);
        assert_eq!(alloc::format!("{}", q(8, 2)), "4");
        assert_eq!("4".parse::<Rat>().unwrap(), q(4, 1));
    }

    #[test]
    fn sqrt_decompose_examples() {
        assert_eq!(sqrt_decompose(&Rat::zero()).unwrap(), (Rat::zero(), 1));
        assert_eq!(sqrt_decompose(&q(9, 4)).unwrap(), (q(3, 2), 1));
        assert_eq!(sqrt_decompose(&q(2, 1)).unwrap(), (q(1, 1), 2));
        assert_eq!(sqrt_decompose(&q(8, 1)).unwrap(), (q(2, 1), 2));
        assert_eq!(sqrt_decompose(&q(3, 50)).unwrap(), (q(1, 10), 6));
        assert_eq!(sqrt_decompose(&q(1, 12)).unwrap(), (q(1, 6), 3));
        assert!(matches!(sqrt_decompose(&q(-1, 4)), Err(Error::NegativeRadicand)));
    }

    #[test]
    fn sqrt_decompose_reconstructs_input() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let n = rng.gen_range(0i64..5000);
            let d = rng.gen_range(1i64..200);
            let x = q(n, d);
            let (s, rad) = sqrt_decompose(&x).unwrap();
            assert!(!s.is_negative());
            assert_eq!(&s * &s * rat_int(rad as i64), x, "failed for {n}/{d}");
            // The radicand must carry no square factor.
            assert!(is_square_free(rad), "radicand {rad} not square-free");
        }
    }

    #[test]
    fn quad_normalization() {
        // 2 - 1*sqrt(4) = 0 after folding the perfect square.
        let x = Quad::new(q(2, 1), q(-1, 1), 4).unwrap();
        assert!(x.is_zero());
        assert_eq!(x.signum(), 0);
        // Radicand 12 reduces to 2*sqrt(3).
        let y = Quad::new(Rat::zero(), q(1, 2), 12).unwrap();
        assert_eq!(y.radicand(), 3);
        assert_eq!(y.radical_part(), &q(1, 1));
    }

    #[test]
    fn quad_sum_of_conjugates_is_rational() {
        let x = Quad::new(q(1, 2), q(1, 3), 5).unwrap();
        let s = &x + &x.conjugate();
        assert_eq!(s, Quad::from_int(1));
        assert_eq!(s.radicand(), 1);
        let p = &x * &x.conjugate();
        assert_eq!(p.as_rat().unwrap(), &x.norm());
    }

    #[test]
    fn quad_signs() {
        let x = Quad::new(q(-3, 1), q(2, 1), 3).unwrap(); // 2 sqrt(3) - 3 > 0
        assert_eq!(x.signum(), 1);
        let y = Quad::new(q(-4, 1), q(2, 1), 3).unwrap(); // 2 sqrt(3) - 4 < 0
        assert_eq!(y.signum(), -1);
        let z = Quad::new(q(7, 1), q(-4, 1), 3).unwrap(); // 7 - 4 sqrt(3) > 0 (49 > 48)
        assert_eq!(z.signum(), 1);
        let w = Quad::new(q(-7, 1), q(4, 1), 3).unwrap();
        assert_eq!(w.signum(), -1);
    }

    #[test]
    fn quad_field_operations() {
        let x = Quad::new(q(1, 1), q(1, 1), 2).unwrap();
        let inv = Quad::from_int(1).checked_div(&x).unwrap();
        // 1/(1+sqrt 2) = sqrt(2) - 1.
        assert_eq!(inv, Quad::new(q(-1, 1), q(1, 1), 2).unwrap());
        assert_eq!(&x * &inv, Quad::from_int(1));
        // Mixing sqrt(2) with sqrt(3) must fail.
        let y = Quad::new(Rat::zero(), q(1, 1), 3).unwrap();
        assert!(matches!(
            x.checked_add(&y),
            Err(Error::IncompatibleRadicands(2, 3))
        ));
        // ...but rationals are compatible with everything.
        let r = Quad::from_rat(q(5, 7));
        assert_eq!((&x + &r).radicand(), 2);
        assert!(matches!(
            x.checked_div(&Quad::zero()),
            Err(Error::DivisionByZero)
        ));
    }

    /// Interval-arithmetic oracle for the exact sign: bracket sqrt(D) between
    /// floor(sqrt(D*4^k))/2^k and its successor at 128 fractional bits.
    #[test]
    fn quad_sign_matches_interval_oracle() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let shift = 128u32;
        for _ in 0..2000 {
            let a = q(rng.gen_range(-40i64..=40), rng.gen_range(1i64..=12));
            let b = q(rng.gen_range(-40i64..=40), rng.gen_range(1i64..=12));
            let d = rng.gen_range(2u64..=60);
            let x = Quad::new(a.clone(), b.clone(), d).unwrap();
            let scaled = BigInt::from(d) << (2 * shift);
            let root = scaled.sqrt();
            let denom = BigInt::one() << shift;
            let lo = Rat::new(root.clone(), denom.clone());
            let hi = Rat::new(root + 1, denom);
            let (end_a, end_b) = if b.is_negative() {
                (&a + &b * &hi, &a + &b * &lo)
            } else {
                (&a + &b * &lo, &a + &b * &hi)
            };
            if end_a.is_positive() {
                assert_eq!(x.signum(), 1, "a={a} b={b} d={d}");
            } else if end_b.is_negative() {
                assert_eq!(x.signum(), -1, "a={a} b={b} d={d}");
            } else if end_a.is_zero() && end_b.is_zero() {
                assert_eq!(x.signum(), 0);
            }
            // Interval straddles zero only within 2^-128 of it; the exact
            // sign then needs no corroboration, only consistency.
        }
    }

    #[test]
    fn quad_display_forms() {
        let x = Quad::new(q(1, 2), q(-2, 3), 5).unwrap();
        assert_eq!(alloc::format!("{x}"), "1/2 - 2/3*sqrt(5)");
        assert_eq!(alloc::format!("{}", Quad::from_int(-3)), "-3");
        let y = Quad::sqrt(&q(3, 1)).unwrap();
        assert_eq!(alloc::format!("{y}"), "sqrt(3)");
    }
}
