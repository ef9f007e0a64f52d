//! Curve profiles, place/point count conversions and per-degree estimates
//! of `|X(F_{q^n})|` when only some place counts are known.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rug::{Integer, Rational};
use serde::{Deserialize, Serialize};

use crate::arith::{divisors, floor_two_sqrt_pow, mobius, pow, prime_power};
use crate::error::{Error, Result};

/// Arithmetic fingerprint of a curve: field size, genus and whatever
/// place counts `Φ_{q^f}` and point counts `N_n` are known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveProfile {
    pub name: String,
    pub q: u64,
    pub genus: u32,
    /// degree `f` → number of places of degree `f`
    pub places: BTreeMap<u32, i64>,
    /// degree `n` → `|X(F_{q^n})|`
    pub points: BTreeMap<u32, i64>,
}

impl CurveProfile {
    pub fn new(name: impl Into<String>, q: u64, genus: u32) -> Self {
        CurveProfile {
            name: name.into(),
            q,
            genus,
            places: BTreeMap::new(),
            points: BTreeMap::new(),
        }
    }

    pub fn with_places(mut self, places: impl IntoIterator<Item = (u32, i64)>) -> Self {
        self.places.extend(places);
        self
    }

    pub fn with_points(mut self, points: impl IntoIterator<Item = (u32, i64)>) -> Self {
        self.points.extend(points);
        self
    }

    /// `Φ_{q^f}` if it is given, or recoverable by Möbius inversion of the
    /// point counts.
    pub fn place_count(&self, f: u32) -> Option<Integer> {
        if let Some(&v) = self.places.get(&f) {
            return Some(Integer::from(v));
        }
        let pts: BTreeMap<u32, Integer> = self.points.iter().map(|(&k, &v)| (k, v.into())).collect();
        places_from_points(&pts, f).ok()
    }

    /// `N_n` if it is given, or recoverable from the place counts.
    pub fn point_count(&self, n: u32) -> Option<Integer> {
        if let Some(&v) = self.points.get(&n) {
            return Some(Integer::from(v));
        }
        points_from_places(&self.places, n).ok()
    }

    fn max_degree(&self) -> u32 {
        self.places
            .keys()
            .chain(self.points.keys())
            .copied()
            .max()
            .unwrap_or(0)
    }
}

/// Checks every profile invariant and returns the profile unchanged.
pub fn validate_profile(profile: CurveProfile) -> Result<CurveProfile> {
    if prime_power(profile.q).is_none() {
        return Err(Error::NonPrimePower(profile.q));
    }
    for (&d, &v) in profile.places.iter().chain(profile.points.iter()) {
        if d == 0 {
            return Err(Error::InvalidDegree(0));
        }
        if v < 0 {
            return Err(Error::NegativeCount { degree: d });
        }
    }
    for n in 1..=profile.max_degree() {
        let (lo, hi) = serre_interval(profile.q, profile.genus, n);
        let ds = divisors(n);
        let partial: Integer = ds
            .iter()
            .filter_map(|d| profile.places.get(d).map(|&v| Integer::from(v) * d))
            .sum();
        let complete = ds.iter().all(|d| profile.places.contains_key(d));
        if let Some(&given) = profile.points.get(&n) {
            if given < lo || given > hi {
                return Err(Error::WeilViolation { degree: n });
            }
            if (complete && partial != given) || partial > given {
                return Err(Error::InconsistentCounts { degree: n });
            }
        }
        if partial > hi || (complete && partial < lo) {
            return Err(Error::WeilViolation { degree: n });
        }
    }
    // Point counts must invert to nonnegative integral place counts.
    let pts: BTreeMap<u32, Integer> =
        profile.points.iter().map(|(&k, &v)| (k, v.into())).collect();
    for &n in profile.points.keys() {
        match places_from_points(&pts, n) {
            Ok(_) | Err(Error::MissingDivisor(_)) => {}
            Err(Error::NonIntegralPlaces { degree }) => {
                return Err(Error::InconsistentCounts { degree })
            }
            Err(e) => return Err(e),
        }
    }
    Ok(profile)
}

/// `N_n = Σ_{d | n} d·Φ_d`.
pub fn points_from_places(places: &BTreeMap<u32, i64>, n: u32) -> Result<Integer> {
    if n == 0 {
        return Err(Error::InvalidDegree(0));
    }
    divisors(n).into_iter().try_fold(Integer::new(), |acc, d| {
        let phi = places.get(&d).ok_or(Error::MissingDivisor(d))?;
        Ok(acc + Integer::from(*phi) * d)
    })
}

/// `Φ_n = (1/n) Σ_{d | n} μ(n/d)·N_d`; fails unless the result is a
/// nonnegative integer.
pub fn places_from_points(points: &BTreeMap<u32, Integer>, n: u32) -> Result<Integer> {
    if n == 0 {
        return Err(Error::InvalidDegree(0));
    }
    let mut acc = Integer::new();
    for d in divisors(n) {
        let nd = points.get(&d).ok_or(Error::MissingDivisor(d))?;
        acc += Integer::from(nd * mobius(n / d));
    }
    if !acc.is_divisible_u(n) || acc < 0 {
        return Err(Error::NonIntegralPlaces { degree: n });
    }
    Ok(acc / n)
}

/// Rational Möbius inversion, for data that need not come from a curve.
pub fn places_from_points_rational(points: &[Integer], n: u32) -> Rational {
    let sum: Integer = divisors(n)
        .into_iter()
        .map(|d| Integer::from(&points[d as usize - 1] * mobius(n / d)))
        .sum();
    Rational::from((sum, Integer::from(n)))
}

/// Weil–Serre interval `[max(0, q^n+1−g⌊2q^{n/2}⌋), q^n+1+g⌊2q^{n/2}⌋]`.
pub fn serre_interval(q: u64, genus: u32, n: u32) -> (Integer, Integer) {
    let centre = pow(q, n) + 1u32;
    let spread = floor_two_sqrt_pow(q, n) * genus;
    let lo = Integer::from(&centre - &spread).max(Integer::new());
    (lo, centre + spread)
}

/// How unknown point counts are bounded from below.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FillPolicy {
    /// Maximum of Serre, monotonicity in the degree and partial divisor sums.
    #[default]
    Best,
    SerreOnly,
    /// Partial divisor sum only.
    ZeroFill,
}

impl fmt::Display for FillPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FillPolicy::Best => "best",
            FillPolicy::SerreOnly => "serre-only",
            FillPolicy::ZeroFill => "zero-fill",
        })
    }
}

impl FromStr for FillPolicy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "best" => Ok(FillPolicy::Best),
            "serre-only" => Ok(FillPolicy::SerreOnly),
            "zero-fill" => Ok(FillPolicy::ZeroFill),
            other => Err(Error::Profile(format!("unknown fill policy {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EstimateKind {
    Exact,
    Interval,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointEstimate {
    pub degree: u32,
    pub kind: EstimateKind,
    pub lower: Integer,
    pub upper: Integer,
}

impl PointEstimate {
    pub fn exact(degree: u32, value: Integer) -> Self {
        PointEstimate { degree, kind: EstimateKind::Exact, upper: value.clone(), lower: value }
    }

    pub fn bounded(degree: u32, lower: Integer, upper: Integer) -> Self {
        debug_assert!(lower <= upper);
        let kind = if lower == upper { EstimateKind::Exact } else { EstimateKind::Interval };
        PointEstimate { degree, kind, lower, upper }
    }

    pub fn is_exact(&self) -> bool {
        self.kind == EstimateKind::Exact
    }
}

/// Estimates for degrees `1..=len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointEstimates {
    pub policy: FillPolicy,
    entries: Vec<PointEstimate>,
}

impl PointEstimates {
    /// Exact counts `N_1, N_2, …` (any integers; used for synthetic data).
    pub fn from_exact(counts: &[Integer]) -> Self {
        let entries = counts
            .iter()
            .enumerate()
            .map(|(i, n)| PointEstimate::exact(i as u32 + 1, n.clone()))
            .collect();
        PointEstimates { policy: FillPolicy::Best, entries }
    }

    pub fn len(&self) -> u32 {
        self.entries.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, degree: u32) -> Option<&PointEstimate> {
        degree.checked_sub(1).and_then(|i| self.entries.get(i as usize))
    }

    pub fn iter(&self) -> impl Iterator<Item = &PointEstimate> {
        self.entries.iter()
    }

    /// Replaces the estimate at `degree` by its Weil–Serre interval, forgetting
    /// what was known there.
    pub fn degrade(&mut self, degree: u32, q: u64, genus: u32) {
        let (lo, hi) = serre_interval(q, genus, degree);
        self.entries[degree as usize - 1] = PointEstimate::bounded(degree, lo, hi);
    }
}

/// Per-degree point estimates for `n = 1..=max_degree`.
pub fn estimate_points(profile: &CurveProfile, max_degree: u32, policy: FillPolicy) -> PointEstimates {
    let mut entries: Vec<PointEstimate> = Vec::with_capacity(max_degree as usize);
    for n in 1..=max_degree {
        if let Some(exact) = profile.point_count(n) {
            entries.push(PointEstimate::exact(n, exact));
            continue;
        }
        let (serre_lo, serre_hi) = serre_interval(profile.q, profile.genus, n);
        let ds = divisors(n);
        let partial: Integer = ds
            .iter()
            .filter_map(|&d| profile.place_count(d).map(|phi| phi * d))
            .sum();
        let lower = match policy {
            FillPolicy::SerreOnly => serre_lo,
            FillPolicy::ZeroFill => partial,
            FillPolicy::Best => {
                let monotone = ds[..ds.len() - 1]
                    .iter()
                    .map(|&d| &entries[d as usize - 1].lower)
                    .max()
                    .cloned()
                    .unwrap_or_default();
                serre_lo.max(monotone).max(partial)
            }
        };
        // A lower estimate can exceed the Serre ceiling only on inconsistent data.
        let upper = serre_hi.max(lower.clone());
        entries.push(PointEstimate::bounded(n, lower, upper));
    }
    PointEstimates { policy, entries }
}
