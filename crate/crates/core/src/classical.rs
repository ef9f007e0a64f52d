//! Earlier class number bounds used for comparison: the Weil interval,
//! Lachaud–Martin-Deschamps, Ballet–Rolland–Tutdere (with an exact optimizer
//! over its free parameters) and the Jacobian cases of Aubry–Haloui–Lachaud.
//!
//! Everything except the Weil interval and the experimental AHL variant is
//! an exact rational.

use std::collections::BTreeMap;

use rug::ops::Pow;
use rug::{Integer, Rational};
use serde::Serialize;

use crate::arith::{binomial, pow};
use crate::curve::CurveProfile;
use crate::error::{Error, Result};
use crate::interval::{sqrt_int, Interval};

/// `((√q−1)^{2g}, (√q+1)^{2g})`, outward rounded; exact when `q` is a square.
pub fn weil_interval(q: u64, genus: u32, prec: u32) -> (Interval, Interval) {
    let root = Integer::from(q).sqrt();
    if Integer::from(&root * &root) == q {
        let lo = Integer::from(&root - 1u32).pow(2 * genus);
        let hi = (root + 1u32).pow(2 * genus);
        return (Interval::from_integer(&lo, prec), Interval::from_integer(&hi, prec));
    }
    // (√q ∓ 1)² = q + 1 ∓ 2√q
    let two_s = &sqrt_int(q, prec) + &sqrt_int(q, prec);
    let c = Interval::from_i64(q as i64 + 1, prec);
    ((&c - &two_s).pow_u(genus), (&c + &two_s).pow_u(genus))
}

/// `q^{g−1}(q−1)²/((q+1)(g+1))`.
pub fn h_lmd(q: u64, genus: u32) -> Rational {
    let qg = Rational::from(q).pow(genus as i32 - 1);
    qg * Rational::from(((q - 1) * (q - 1), (q + 1) * (genus as u64 + 1)))
}

/// `∫_0^{q^{−r}} (q^{−r}−t)^m / (1−t)^{Φ+m+1} dt`, exactly.
///
/// With `u = 1 − t` and `β = 1 − q^{−r}` the integrand expands to
/// `Σ_j C(m,j)(−β)^{m−j} u^{j−Φ−m−1}`; every exponent is at most −2.
pub fn brt_integral(q: u64, r: u32, phi: u32, m: u32) -> Rational {
    assert!(phi >= 1 && r >= 1, "brt_integral needs Φ ≥ 1 and r ≥ 1");
    let beta = Rational::from(1) - Rational::from((Integer::from(1), pow(q, r)));
    let neg_beta = Rational::from(-&beta);
    (0..=m)
        .map(|j| {
            let e = j as i32 - phi as i32 - m as i32;
            let prim = (Rational::from(1) - beta.clone().pow(e)) / Rational::from(e);
            Rational::from(binomial(m as i64, j)) * neg_beta.clone().pow(m - j) * prim
        })
        .sum()
}

/// `(q^r/(q^r−1))^Φ − Φ·C(Φ+m, m)·∫…`, the factor contributed by one `r ∈ D_2`.
/// Equals 1 at `m = 0` and grows with `m`.
pub fn brt_bracket(q: u64, r: u32, phi: u32, m: u32) -> Rational {
    let qr = pow(q, r);
    let ratio = Rational::from((qr.clone(), qr - 1u32)).pow(phi);
    ratio - brt_integral(q, r, phi, m) * binomial(phi as i64 + m as i64, m) * phi
}

/// Free parameters of the BRT bound: `ℓ_r` for `r ∈ D_1`, `m_r` for `r ∈ D_2`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BrtSelection {
    pub ell: BTreeMap<u32, u32>,
    pub m: BTreeMap<u32, u32>,
    #[serde(serialize_with = "ser_rational")]
    pub value: Rational,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn known_place(profile: &CurveProfile, r: u32) -> Integer {
    profile.place_count(r).unwrap_or_default()
}

/// `(q−1)²/((g+1)(q+1)−Φ_q)`; an unknown `Φ_q` is taken as 0, which only
/// lowers the bound.
fn brt_prefactor(profile: &CurveProfile) -> Result<Rational> {
    let q = profile.q;
    let den = Integer::from((profile.genus as u64 + 1) * (q + 1)) - known_place(profile, 1);
    if den <= 0 {
        return Err(Error::NonpositivePrefactorDenominator);
    }
    Ok(Rational::from((Integer::from((q - 1) * (q - 1)), den)))
}

fn combine(profile: &CurveProfile, p1: &Rational, p2: &Rational) -> Result<Rational> {
    let qg = Rational::from(profile.q).pow(profile.genus as i32 - 1);
    Ok(brt_prefactor(profile)? * (qg * p2 + p1))
}

fn d1_factor(phi: &Integer, ell: u32) -> Rational {
    Rational::from(Integer::from(phi + ell).binomial(ell))
}

fn check_selection(profile: &CurveProfile, ell: &BTreeMap<u32, u32>, m: &BTreeMap<u32, u32>) -> Result<()> {
    let g = profile.genus as i64;
    if ell.keys().any(|&r| r == 0 || r as i64 > g - 1) {
        return Err(Error::ConditionViolated(1));
    }
    if m.keys().any(|&r| r == 0 || r as i64 > g - 2) {
        return Err(Error::ConditionViolated(2));
    }
    if ell.keys().any(|&r| known_place(profile, r) < 1) {
        return Err(Error::ConditionViolated(3));
    }
    if m.keys().any(|&r| known_place(profile, r) < 1) {
        return Err(Error::ConditionViolated(4));
    }
    if ell.iter().map(|(&r, &l)| r as i64 * l as i64).sum::<i64>() > g - 1 {
        return Err(Error::ConditionViolated(5));
    }
    if m.iter().map(|(&r, &k)| r as i64 * k as i64).sum::<i64>() > g - 2 {
        return Err(Error::ConditionViolated(6));
    }
    Ok(())
}

/// The BRT lower bound for one admissible selection. The `value` field of
/// `sel` is ignored.
pub fn brt_value(profile: &CurveProfile, sel: &BrtSelection) -> Result<Rational> {
    check_selection(profile, &sel.ell, &sel.m)?;
    let q = profile.q;
    let p1: Rational = sel
        .ell
        .iter()
        .map(|(&r, &l)| d1_factor(&known_place(profile, r), l))
        .product();
    let p2: Rational = sel
        .m
        .iter()
        .map(|(&r, &k)| brt_bracket(q, r, known_place(profile, r).to_u32().expect("small place count"), k))
        .product();
    combine(profile, &p1, &p2)
}

/// Maximises `Π f_r(x_r)` subject to `Σ r·x_r ≤ budget` over the groups
/// `r ∈ degrees`, with every `f_r ≥ 1` and `f_r(0) = 1`. Ties keep the
/// smaller `x_r`.
fn product_knapsack(
    degrees: &[u32],
    budget: i64,
    factor: impl Fn(u32, u32) -> Rational,
) -> (Rational, BTreeMap<u32, u32>) {
    if budget < 0 {
        return (Rational::from(1), BTreeMap::new());
    }
    let b = budget as usize;
    // best[c]: best product with total weight ≤ c
    let mut best: Vec<(Rational, BTreeMap<u32, u32>)> = vec![(Rational::from(1), BTreeMap::new()); b + 1];
    for &r in degrees {
        let max_x = b / r as usize;
        let factors: Vec<Rational> = (0..=max_x as u32).map(|x| factor(r, x)).collect();
        let mut next = best.clone();
        for (c, slot) in next.iter_mut().enumerate() {
            for x in 1..=c / r as usize {
                let (prev, choice) = &best[c - x * r as usize];
                let cand = Rational::from(prev * &factors[x]);
                if cand > slot.0 {
                    let mut choice = choice.clone();
                    choice.insert(r, x as u32);
                    *slot = (cand, choice);
                }
            }
        }
        best = next;
    }
    best.pop().unwrap()
}

fn eligible(profile: &CurveProfile, max_r: i64) -> Vec<u32> {
    (1..=max_r.max(0) as u32).filter(|&r| known_place(profile, r) >= 1).collect()
}

/// Best BRT selection. The two products are independent, so each is
/// optimised by its own exact knapsack DP; unknown place counts make a
/// degree ineligible. Below genus 2 even the empty selection breaks the
/// degree-sum conditions.
pub fn brt_optimize(profile: &CurveProfile) -> Result<BrtSelection> {
    if profile.genus < 2 {
        return Err(Error::GenusTooSmall { got: profile.genus, needed: 2 });
    }
    brt_prefactor(profile)?;
    let (q, g) = (profile.q, profile.genus as i64);
    let d1 = eligible(profile, g - 1);
    let d2 = eligible(profile, g - 2);
    let phis: BTreeMap<u32, Integer> = d1.iter().chain(&d2).map(|&r| (r, known_place(profile, r))).collect();
    let ((p1, ell), (p2, m)) = rayon::join(
        || product_knapsack(&d1, g - 1, |r, l| d1_factor(&phis[&r], l)),
        || {
            product_knapsack(&d2, g - 2, |r, k| {
                brt_bracket(q, r, phis[&r].to_u32().expect("small place count"), k)
            })
        },
    );
    let value = combine(profile, &p1, &p2)?;
    Ok(BrtSelection { ell, m, value })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AhlVariant {
    pub index: u8,
    #[serde(serialize_with = "ser_opt_rational")]
    pub value: Option<Rational>,
    /// Why the variant does not apply, when it does not.
    pub inapplicable: Option<String>,
}

fn ser_opt_rational<S: serde::Serializer>(r: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_some(&r.to_string()),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AhlReport {
    /// Variants (2), (3), (4) in order.
    pub variants: Vec<AhlVariant>,
    /// Variant (1) under the literal reading of its constant; not rigorous.
    pub experimental: Option<f64>,
    #[serde(serialize_with = "ser_opt_rational")]
    pub best: Option<Rational>,
}

impl AhlReport {
    pub fn variant(&self, index: u8) -> Option<&AhlVariant> {
        self.variants.iter().find(|v| v.index == index)
    }
}

fn applies(index: u8, value: Rational) -> AhlVariant {
    AhlVariant { index, value: Some(value), inapplicable: None }
}

fn skip(index: u8, why: impl Into<String>) -> AhlVariant {
    AhlVariant { index, value: None, inapplicable: Some(why.into()) }
}

/// Literal reading: `M = e·log(x^{1/x−1})/(x^{1/x}−1)`, `x = ((√q+1)/(√q−1))²`,
/// value `M^g (q+1+(Φ_q−q−1)/g)^g`. This is negative for every `q ≥ 2`.
pub fn ahl_variant_one(q: u64, genus: u32, phi1: i64) -> f64 {
    let s = (q as f64).sqrt();
    let x = ((s + 1.0) / (s - 1.0)).powi(2);
    let m = std::f64::consts::E * ((1.0 / x - 1.0) * x.ln()) / (x.powf(1.0 / x) - 1.0);
    let g = genus as f64;
    m.powi(genus as i32) * (q as f64 + 1.0 + (phi1 as f64 - q as f64 - 1.0) / g).powi(genus as i32)
}

/// The Jacobian cases of the AHL bound. `best` is the largest applicable
/// value among variants (2)–(4); variant (1) only enters when
/// `with_experimental` is set, and then only as the `experimental` field.
pub fn ahl_bounds(profile: &CurveProfile, with_experimental: bool) -> AhlReport {
    let (q, g) = (profile.q, profile.genus);
    let phi1 = profile.place_count(1);
    let mut variants = Vec::with_capacity(3);

    // (2): unknown place counts contribute nonnegative terms, so 0 is sound
    if g == 0 {
        variants.push(skip(2, "genus 0"));
    } else {
        let p1 = phi1.clone().unwrap_or_default();
        let top = 2 * g as i64 - 1;
        let mut sum = Integer::from(&p1 + (top - 1)).binomial(top as u32);
        for r in 2..=top as u32 {
            let phi = known_place(profile, r);
            if phi != 0 {
                sum += phi * Integer::from(&p1 + (top - 1 - r as i64)).binomial((top - r as i64) as u32);
            }
        }
        let lead = Rational::from((Integer::from(q - 1), pow(q, g) - 1u32));
        variants.push(applies(2, lead * sum));
    }

    match (&phi1, g) {
        (None, _) => variants.push(skip(3, "Φ_q unknown")),
        (Some(_), 0 | 1) => variants.push(skip(3, "genus below 2")),
        // Φ_q ≥ g(√q−1)+1  ⇔  (Φ_q−1+g)² ≥ q g²
        (Some(p), _) if Integer::from(p + (g as i64 - 1)).square() < Integer::from(q) * g * g => {
            variants.push(skip(3, format!("Φ_q = {p} below g(√q−1)+1")))
        }
        (Some(p), _) => {
            let v = Integer::from(p + (g - 1)).binomial(g) - Integer::from(p + (g as i64 - 3)).binomial(g - 2) * q;
            variants.push(applies(3, Rational::from(v)));
        }
    }

    let den4 = phi1.as_ref().map(|p| Integer::from((g as u64 + 1) * (q + 1)) - p);
    match (&phi1, den4) {
        (None, _) => variants.push(skip(4, "Φ_q unknown")),
        (Some(_), _) if g < 2 => variants.push(skip(4, "genus below 2")),
        (Some(_), Some(d)) if d <= 0 => variants.push(skip(4, "(g+1)(q+1) − Φ_q ≤ 0")),
        (Some(p), Some(d)) => {
            let mut sum = Integer::from(p + (g - 2)).binomial(g - 2);
            for r in 0..g {
                sum += pow(q, g - 1 - r) * Integer::from(p + (r as i64 - 1)).binomial(r);
            }
            variants.push(applies(4, Rational::from(((q - 1) * (q - 1), 1)) / d * sum));
        }
        (Some(_), None) => unreachable!(),
    }

    let best = variants.iter().filter_map(|v| v.value.clone()).max();
    let experimental = match (&phi1, with_experimental && g > 0) {
        (Some(p), true) => p.to_i64().map(|p| ahl_variant_one(q, g, p)),
        _ => None,
    };
    AhlReport { variants, experimental, best }
}
