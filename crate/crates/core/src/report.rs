//! Named bound values with provenance, and their decimal rendering.

use rug::float::Round;
use rug::ops::Pow;
use rug::{Float, Integer};
use serde::Serialize;

use crate::curve::FillPolicy;
use crate::error::{Error, Result};
use crate::interval::Interval;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundSide {
    Lower,
    Upper,
}

#[derive(Debug, Clone)]
pub struct BoundReport {
    pub name: String,
    pub side: BoundSide,
    /// Enclosure of the real value of the bound. For a lower bound the
    /// rigorous statement is `h ≥ value.lo()`, for an upper bound `h ≤ value.hi()`.
    pub value: Interval,
    pub truncation: Option<u32>,
    pub policy: Option<FillPolicy>,
    pub assumptions: Vec<String>,
}

impl BoundReport {
    pub fn new(name: impl Into<String>, side: BoundSide, value: Interval) -> Self {
        BoundReport {
            name: name.into(),
            side,
            value,
            truncation: None,
            policy: None,
            assumptions: Vec::new(),
        }
    }

    pub fn with_truncation(mut self, n: u32) -> Self {
        self.truncation = Some(n);
        self
    }

    pub fn with_policy(mut self, policy: FillPolicy) -> Self {
        self.policy = Some(policy);
        self
    }

    pub fn assume(mut self, note: impl Into<String>) -> Self {
        self.assumptions.push(note.into());
        self
    }

    /// The endpoint that carries the guarantee.
    pub fn rigorous_value(&self) -> &Float {
        match self.side {
            BoundSide::Lower => self.value.lo(),
            BoundSide::Upper => self.value.hi(),
        }
    }

    /// Integer refinement: `⌈L⌉` for a lower bound, `⌊U⌋` for an upper bound.
    pub fn integer(&self) -> Integer {
        match self.side {
            BoundSide::Lower => self.value.ceil_lo(),
            BoundSide::Upper => self.value.floor_hi(),
        }
    }

    /// The integer refinement when it has at most `sig_digits` digits and the
    /// bound is at least one, otherwise the decimal rendering.
    pub fn display_value(&self, sig_digits: usize) -> Result<String> {
        let int = self.integer();
        let fits = int.to_string().trim_start_matches('-').len() <= sig_digits;
        if fits && *self.rigorous_value() >= 1 {
            // still require the enclosure to be resolved at this precision
            render_decimal(&self.value, sig_digits)?;
            Ok(int.to_string())
        } else {
            render_decimal(&self.value, sig_digits)
        }
    }
}

/// Renders the midpoint of `iv` with `sig_digits` significant digits
/// (round-half-even), e.g. `9.22994e3`.
///
/// Fails when the enclosure is wider than one unit in the last printed
/// digit; the caller is expected to retry at a higher precision.
pub fn render_decimal(iv: &Interval, sig_digits: usize) -> Result<String> {
    let sig_digits = sig_digits.max(1);
    let mid = iv.midpoint();
    if mid.is_zero() {
        return if iv.is_point() { Ok("0".into()) } else { Err(Error::PrecisionExhausted(iv.prec())) };
    }
    let (negative, digits, exp) = mid.to_sign_string_exp_round(10, Some(sig_digits), Round::Nearest);
    let exp = exp.expect("finite non-zero midpoint");
    // value = 0.d1d2…dk × 10^exp, so one unit in the last digit is 10^(exp − k)
    let unit = Float::with_val(iv.prec(), 10u32).pow(exp - digits.len() as i32);
    if iv.width() >= unit {
        return Err(Error::PrecisionExhausted(iv.prec()));
    }
    let (head, tail) = digits.split_at(1);
    let sign = if negative { "-" } else { "" };
    Ok(if tail.is_empty() {
        format!("{sign}{head}e{}", exp - 1)
    } else {
        format!("{sign}{head}.{tail}e{}", exp - 1)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::Rational;

    #[test]
    fn decimal_rendering() {
        let iv = Interval::from_rational(&Rational::from((922994467, 100000)), 256);
        assert_eq!(render_decimal(&iv, 6).unwrap(), "9.22994e3");
        assert_eq!(render_decimal(&iv, 4).unwrap(), "9.230e3");
        let iv = Interval::from_rational(&Rational::from(2), 64);
        assert_eq!(render_decimal(&iv, 3).unwrap(), "2.00e0");
        assert_eq!(render_decimal(&iv, 1).unwrap(), "2e0");
        let iv = Interval::from_rational(&Rational::from((-1, 8)), 64);
        assert_eq!(render_decimal(&iv, 3).unwrap(), "-1.25e-1");
    }

    #[test]
    fn half_even_on_ties() {
        let iv = Interval::from_rational(&Rational::from((125, 1)), 64);
        assert_eq!(render_decimal(&iv, 2).unwrap(), "1.2e2");
        let iv = Interval::from_rational(&Rational::from((135, 1)), 64);
        assert_eq!(render_decimal(&iv, 2).unwrap(), "1.4e2");
    }

    #[test]
    fn wide_enclosures_are_rejected() {
        let iv = Interval::new(Float::with_val(64, 1.0), Float::with_val(64, 1.01));
        assert!(render_decimal(&iv, 2).is_ok());
        assert_eq!(render_decimal(&iv, 6), Err(Error::PrecisionExhausted(64)));
    }

    #[test]
    fn integer_refinement_display() {
        let iv = Interval::new(Float::with_val(64, 9229.9), Float::with_val(64, 9229.95));
        let r = BoundReport::new("h_min_explicit", BoundSide::Lower, iv.clone());
        assert_eq!(r.integer(), 9230);
        assert_eq!(r.display_value(2).unwrap(), "9.2e3");
        let r = BoundReport::new("h_max_explicit", BoundSide::Upper, iv);
        assert_eq!(r.integer(), 9229);
        let small = Interval::from_rational(&Rational::from((1, 3)), 64);
        let r = BoundReport::new("h_min_mertens", BoundSide::Lower, small);
        assert_eq!(r.display_value(3).unwrap(), "3.33e-1");
    }
}
