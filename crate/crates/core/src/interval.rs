//! Closed intervals of MPFR floats with outward (directed) rounding.
//!
//! Every operation rounds the lower endpoint toward −∞ and the upper
//! endpoint toward +∞, so the exact real result of the corresponding
//! operation on any members of the operands lies in the returned interval.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::float::Round;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

/// Default working precision in bits.
pub const DEFAULT_PRECISION: u32 = 256;

#[derive(Clone, PartialEq)]
pub struct Interval {
    lo: Float,
    hi: Float,
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}]",
            self.lo.to_string_radix(10, Some(20)),
            self.hi.to_string_radix(10, Some(20))
        )
    }
}

fn down<T>(prec: u32, val: T) -> Float
where
    Float: rug::ops::AssignRound<T, Round = Round, Ordering = Ordering>,
{
    Float::with_val_round(prec, val, Round::Down).0
}

fn up<T>(prec: u32, val: T) -> Float
where
    Float: rug::ops::AssignRound<T, Round = Round, Ordering = Ordering>,
{
    Float::with_val_round(prec, val, Round::Up).0
}

impl Interval {
    /// Builds `[lo, hi]`. Panics if `lo > hi` or either endpoint is NaN.
    pub fn new(lo: Float, hi: Float) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Interval { lo, hi }
    }

    pub fn from_rational(r: &Rational, prec: u32) -> Self {
        Interval { lo: down(prec, r), hi: up(prec, r) }
    }

    pub fn from_integer(n: &Integer, prec: u32) -> Self {
        Interval { lo: down(prec, n), hi: up(prec, n) }
    }

    pub fn from_i64(n: i64, prec: u32) -> Self {
        Self::from_integer(&Integer::from(n), prec)
    }

    pub fn zero(prec: u32) -> Self {
        Interval { lo: Float::new(prec), hi: Float::new(prec) }
    }

    pub fn lo(&self) -> &Float {
        &self.lo
    }

    pub fn hi(&self) -> &Float {
        &self.hi
    }

    pub fn into_bounds(self) -> (Float, Float) {
        (self.lo, self.hi)
    }

    pub fn prec(&self) -> u32 {
        self.lo.prec().max(self.hi.prec())
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    /// Upper bound on `hi − lo`.
    pub fn width(&self) -> Float {
        up(self.prec(), &self.hi - &self.lo)
    }

    /// Midpoint, rounded to nearest (not a rigorous quantity).
    pub fn midpoint(&self) -> Float {
        let sum = Float::with_val(self.prec() + 1, &self.lo + &self.hi);
        Float::with_val(self.prec(), sum / 2u32)
    }

    pub fn contains_rational(&self, r: &Rational) -> bool {
        self.lo <= *r && *r <= self.hi
    }

    pub fn contains_integer(&self, n: &Integer) -> bool {
        self.lo <= *n && *n <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.lo <= 0 && self.hi >= 0
    }

    pub fn is_positive(&self) -> bool {
        self.lo > 0
    }

    /// `true` when every member of `self` is ≤ every member of `other`.
    pub fn certainly_le(&self, other: &Interval) -> bool {
        self.hi <= other.lo
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        let lo = if self.lo <= other.lo { self.lo.clone() } else { other.lo.clone() };
        let hi = if self.hi >= other.hi { self.hi.clone() } else { other.hi.clone() };
        Interval { lo, hi }
    }

    pub fn ln(&self) -> Interval {
        assert!(self.lo > 0, "logarithm of a non-positive interval");
        let p = self.prec();
        let mut lo = self.lo.clone();
        lo.set_prec_round(p, Round::Down);
        lo.ln_round(Round::Down);
        let mut hi = self.hi.clone();
        hi.set_prec_round(p, Round::Up);
        hi.ln_round(Round::Up);
        Interval { lo, hi }
    }

    /// `log(1 + x)`, accurate for small `x`.
    pub fn ln_1p(&self) -> Interval {
        assert!(self.lo > -1, "ln_1p of an interval reaching -1");
        let mut lo = self.lo.clone();
        lo.ln_1p_round(Round::Down);
        let mut hi = self.hi.clone();
        hi.ln_1p_round(Round::Up);
        Interval { lo, hi }
    }

    pub fn exp(&self) -> Interval {
        let p = self.prec();
        let mut lo = self.lo.clone();
        lo.exp_round(Round::Down);
        let mut hi = self.hi.clone();
        hi.exp_round(Round::Up);
        lo.set_prec_round(p, Round::Down);
        hi.set_prec_round(p, Round::Up);
        Interval { lo, hi }
    }

    pub fn sqrt(&self) -> Interval {
        assert!(self.lo >= 0, "square root of a negative interval");
        let mut lo = self.lo.clone();
        lo.sqrt_round(Round::Down);
        let mut hi = self.hi.clone();
        hi.sqrt_round(Round::Up);
        Interval { lo, hi }
    }

    /// Integer power of a non-negative interval.
    pub fn pow_u(&self, n: u32) -> Interval {
        assert!(self.lo >= 0, "pow_u requires a non-negative interval");
        let p = self.prec();
        Interval {
            lo: down(p, (&self.lo).pow(n)),
            hi: up(p, (&self.hi).pow(n)),
        }
    }

    /// Multiplicative inverse of an interval not containing zero.
    pub fn recip(&self) -> Interval {
        assert!(!self.contains_zero(), "reciprocal of an interval containing zero");
        let p = self.prec();
        Interval {
            lo: down(p, 1u32 / &self.hi),
            hi: up(p, 1u32 / &self.lo),
        }
    }

    pub fn div(&self, other: &Interval) -> Interval {
        assert!(!other.contains_zero(), "division by an interval containing zero");
        let p = self.prec().max(other.prec());
        let quots = |round: Round| -> [Float; 4] {
            [
                Float::with_val_round(p, &self.lo / &other.lo, round).0,
                Float::with_val_round(p, &self.lo / &other.hi, round).0,
                Float::with_val_round(p, &self.hi / &other.lo, round).0,
                Float::with_val_round(p, &self.hi / &other.hi, round).0,
            ]
        };
        Interval { lo: min4(quots(Round::Down)), hi: max4(quots(Round::Up)) }
    }

    pub fn mul_rational(&self, r: &Rational) -> Interval {
        self * &Interval::from_rational(r, self.prec())
    }

    pub fn add_rational(&self, r: &Rational) -> Interval {
        self + &Interval::from_rational(r, self.prec())
    }

    /// Smallest integer not below the lower endpoint.
    pub fn ceil_lo(&self) -> Integer {
        self.lo.to_integer_round(Round::Up).expect("finite endpoint").0
    }

    /// Largest integer not above the upper endpoint.
    pub fn floor_hi(&self) -> Integer {
        self.hi.to_integer_round(Round::Down).expect("finite endpoint").0
    }
}

fn min4(v: [Float; 4]) -> Float {
    v.into_iter().reduce(|a, b| if b < a { b } else { a }).unwrap()
}

fn max4(v: [Float; 4]) -> Float {
    v.into_iter().reduce(|a, b| if b > a { b } else { a }).unwrap()
}

impl<'a> Add<&'a Interval> for &'a Interval {
    type Output = Interval;
    fn add(self, rhs: &Interval) -> Interval {
        let p = self.prec().max(rhs.prec());
        Interval { lo: down(p, &self.lo + &rhs.lo), hi: up(p, &self.hi + &rhs.hi) }
    }
}

impl<'a> Sub<&'a Interval> for &'a Interval {
    type Output = Interval;
    fn sub(self, rhs: &Interval) -> Interval {
        let p = self.prec().max(rhs.prec());
        Interval { lo: down(p, &self.lo - &rhs.hi), hi: up(p, &self.hi - &rhs.lo) }
    }
}

impl<'a> Mul<&'a Interval> for &'a Interval {
    type Output = Interval;
    fn mul(self, rhs: &Interval) -> Interval {
        let p = self.prec().max(rhs.prec());
        let prods = |round: Round| -> [Float; 4] {
            [
                Float::with_val_round(p, &self.lo * &rhs.lo, round).0,
                Float::with_val_round(p, &self.lo * &rhs.hi, round).0,
                Float::with_val_round(p, &self.hi * &rhs.lo, round).0,
                Float::with_val_round(p, &self.hi * &rhs.hi, round).0,
            ]
        };
        Interval { lo: min4(prods(Round::Down)), hi: max4(prods(Round::Up)) }
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, rhs: Interval) -> Interval {
        &self + &rhs
    }
}

impl Sub for Interval {
    type Output = Interval;
    fn sub(self, rhs: Interval) -> Interval {
        &self - &rhs
    }
}

impl Mul for Interval {
    type Output = Interval;
    fn mul(self, rhs: Interval) -> Interval {
        &self * &rhs
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        -&self
    }
}

/// Enclosure of `ln n` for a positive integer.
pub fn ln_int(n: u64, prec: u32) -> Interval {
    Interval::from_integer(&Integer::from(n), prec).ln()
}

/// Enclosure of `√n` for a non-negative integer; exact when `n` is a perfect square.
pub fn sqrt_int(n: u64, prec: u32) -> Interval {
    Interval::from_integer(&Integer::from(n), prec).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_enclosure_is_tight_and_ordered() {
        let third = Rational::from((1, 3));
        let iv = Interval::from_rational(&third, 64);
        assert!(iv.contains_rational(&third));
        assert!(iv.lo() < iv.hi());
        let half = Interval::from_rational(&Rational::from((1, 2)), 64);
        assert!(half.is_point());
    }

    #[test]
    fn ln_two_brackets_known_digits() {
        let ln2 = ln_int(2, 128);
        let lo_ref = Rational::from((6931471805599453i64, 10_000_000_000_000_000i64));
        let hi_ref = Rational::from((6931471805599454i64, 10_000_000_000_000_000i64));
        assert!(*ln2.lo() > lo_ref && *ln2.hi() < hi_ref);
    }

    #[test]
    fn sqrt_of_square_is_exact() {
        let s = sqrt_int(4, 64);
        assert!(s.is_point());
        assert_eq!(*s.lo(), 2);
        let r2 = sqrt_int(2, 64);
        let sq = &r2 * &r2;
        assert!(sq.contains_integer(&Integer::from(2)));
    }

    #[test]
    fn multiplication_handles_mixed_signs() {
        let a = Interval::new(Float::with_val(53, -2), Float::with_val(53, 3));
        let b = Interval::new(Float::with_val(53, -5), Float::with_val(53, 1));
        let c = &a * &b;
        assert_eq!(*c.lo(), -15);
        assert_eq!(*c.hi(), 10);
    }

    #[test]
    fn exp_ln_round_trip_encloses_input() {
        let x = Interval::from_rational(&Rational::from((7, 3)), 200);
        let y = x.exp().ln();
        assert!(y.contains_rational(&Rational::from((7, 3))));
    }

    #[test]
    fn integer_refinements() {
        let iv = Interval::new(Float::with_val(64, 9229.35), Float::with_val(64, 9229.36));
        assert_eq!(iv.ceil_lo(), 9230);
        assert_eq!(iv.floor_hi(), 9229);
    }
}
