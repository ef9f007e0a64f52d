//! Class number bounds from the truncated explicit formula.
//!
//! For any truncation order `N ≥ 1`,
//!
//! ```text
//! log h = g log q + Σ_{f≤N} N_f/(f q^f) − Σ_{n≤N} (1+q^{−n})/n − ε_3(N),
//! |ε_3(N)| ≤ 2g / ((√q−1)(N+1) q^{N/2}).
//! ```
//!
//! Replacing the point counts `N_f` by rigorous lower (upper) estimates and
//! `ε_3` by its bound gives `h_min(N) ≤ h ≤ h_max(N)`. The rational part is
//! kept exact; `log q`, `√q` and `exp` are evaluated with outward rounding.

use std::collections::BTreeMap;

use rayon::prelude::*;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use crate::arith::{inv_n_qn, pow};
use crate::curve::{estimate_points, CurveProfile, FillPolicy, PointEstimates};
use crate::error::{Error, Result};
use crate::interval::{ln_int, sqrt_int, Interval};
use crate::report::{BoundReport, BoundSide};
use crate::zeta::{weighted_counts, ZetaData};

pub const DEFAULT_NMAX: u32 = 200;

/// A truncation order `1 ≤ N ≤ max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct TruncationOrder(u32);

impl TruncationOrder {
    pub fn new(n: u32, max: u32) -> Result<Self> {
        if n == 0 || n > max {
            return Err(Error::InvalidN { got: n, max });
        }
        Ok(TruncationOrder(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

/// `Σ_{n=1}^N (1 + q^{−n})/n`.
pub fn harmonic_term(q: u64, n: u32) -> Result<Rational> {
    if n == 0 {
        return Err(Error::InvalidN { got: 0, max: u32::MAX });
    }
    Ok(harmonic_term_unchecked(q, n))
}

pub(crate) fn harmonic_term_unchecked(q: u64, n: u32) -> Rational {
    (1..=n)
        .map(|k| Rational::from((1, k)) + inv_n_qn(q, k))
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Lower,
    Upper,
}

/// `Σ_{f=1}^N N_f/(f q^f)` with each `N_f` taken at the given end of its estimate.
pub fn weighted_point_sum(est: &PointEstimates, q: u64, n: u32, dir: Direction) -> Result<Rational> {
    (1..=n).try_fold(Rational::new(), |acc, f| {
        let e = est.get(f).ok_or(Error::IncompleteEstimates(f))?;
        let count = match dir {
            Direction::Lower => &e.lower,
            Direction::Upper => &e.upper,
        };
        Ok(acc + inv_n_qn(q, f) * count)
    })
}

/// Enclosure of `2g / ((√q−1)(N+1) q^{N/2})`; use `.hi()` as the bound.
/// Exact when `g = 0` or `q` is a perfect square.
pub fn eps3_abs_bound(q: u64, genus: u32, n: u32, prec: u32) -> Interval {
    if genus == 0 {
        return Interval::zero(prec);
    }
    let root = Integer::from(q).sqrt();
    if Integer::from(&root * &root) == q {
        let den = (root.clone() - 1u32) * (n + 1) * root.pow(n);
        return Interval::from_rational(&Rational::from((Integer::from(2 * genus), den)), prec);
    }
    let s = sqrt_int(q, prec);
    let one = Interval::from_i64(1, prec);
    let den = &(&(&s - &one) * &Interval::from_i64(n as i64 + 1, prec)) * &s.pow_u(n);
    Interval::from_i64(2 * genus as i64, prec).div(&den)
}

/// Rigorous window on `log h` at one truncation order.
#[derive(Debug, Clone)]
pub struct LogBoundWindow {
    pub n: u32,
    /// `Σ N_f^{lower}/(f q^f) − Σ (1+q^{−n})/n`
    pub lower_core: Rational,
    /// `Σ N_f^{upper}/(f q^f) − Σ (1+q^{−n})/n`
    pub upper_core: Rational,
    pub eps3: Interval,
    /// Enclosure of `log h_min(N)`.
    pub log_h_min: Interval,
    /// Enclosure of `log h_max(N)`.
    pub log_h_max: Interval,
}

impl LogBoundWindow {
    /// Rounded toward −∞.
    pub fn log_h_lower(&self) -> &Float {
        self.log_h_min.lo()
    }

    /// Rounded toward +∞.
    pub fn log_h_upper(&self) -> &Float {
        self.log_h_max.hi()
    }

    pub fn h_min(&self) -> Interval {
        self.log_h_min.exp()
    }

    pub fn h_max(&self) -> Interval {
        self.log_h_max.exp()
    }
}

fn window_from_cores(
    q: u64,
    genus: u32,
    n: u32,
    lower_core: Rational,
    upper_core: Rational,
    prec: u32,
) -> LogBoundWindow {
    let base = &ln_int(q, prec) * &Interval::from_i64(genus as i64, prec);
    let eps3 = eps3_abs_bound(q, genus, n, prec);
    let log_h_min = &base.add_rational(&lower_core) - &eps3;
    let log_h_max = &base.add_rational(&upper_core) + &eps3;
    LogBoundWindow { n, lower_core, upper_core, eps3, log_h_min, log_h_max }
}

pub fn window_from_estimates(
    est: &PointEstimates,
    q: u64,
    genus: u32,
    n: u32,
    prec: u32,
) -> Result<LogBoundWindow> {
    let harmonic = harmonic_term(q, n)?;
    let lower = weighted_point_sum(est, q, n, Direction::Lower)? - &harmonic;
    let upper = weighted_point_sum(est, q, n, Direction::Upper)? - harmonic;
    Ok(window_from_cores(q, genus, n, lower, upper, prec))
}

pub fn log_h_window(profile: &CurveProfile, n: u32, policy: FillPolicy, prec: u32) -> Result<LogBoundWindow> {
    if n == 0 {
        return Err(Error::InvalidN { got: 0, max: u32::MAX });
    }
    let est = estimate_points(profile, n, policy);
    window_from_estimates(&est, profile.q, profile.genus, n, prec)
}

/// Windows for every `N = 1..=nmax`. Rational cores are accumulated in
/// order; the transcendental part runs in parallel.
pub fn sweep_windows(
    est: &PointEstimates,
    q: u64,
    genus: u32,
    nmax: u32,
    prec: u32,
) -> Result<Vec<LogBoundWindow>> {
    if nmax == 0 {
        return Err(Error::InvalidN { got: 0, max: u32::MAX });
    }
    let mut cores = Vec::with_capacity(nmax as usize);
    let (mut lower, mut upper) = (Rational::new(), Rational::new());
    for f in 1..=nmax {
        let e = est.get(f).ok_or(Error::IncompleteEstimates(f))?;
        let w = inv_n_qn(q, f);
        let step = Rational::from((1, f)) + &w;
        lower += Rational::from(&w * &e.lower) - &step;
        upper += Rational::from(&w * &e.upper) - step;
        cores.push((f, lower.clone(), upper.clone()));
    }
    Ok(cores
        .into_par_iter()
        .map(|(n, lo, hi)| window_from_cores(q, genus, n, lo, hi, prec))
        .collect())
}

/// Precision needed so that the integer refinements of `h_min`, `h_max`
/// are resolved: about `log2 h` bits plus a 64-bit margin.
fn precision_for(windows: &[LogBoundWindow], prec: u32) -> u32 {
    let largest = windows
        .iter()
        .map(|w| w.log_h_upper().to_f64().abs().max(w.log_h_lower().to_f64().abs()))
        .fold(0.0f64, f64::max);
    let needed = (largest / std::f64::consts::LN_2).ceil() as u32 + 64;
    prec.max(needed)
}

/// Index of the best integer refinement; ties go to the smaller `N`.
fn select<K: Ord>(keys: impl Iterator<Item = K>, better: impl Fn(&K, &K) -> bool) -> usize {
    let mut best: Option<(usize, K)> = None;
    for (i, k) in keys.enumerate() {
        match &best {
            Some((_, b)) if !better(&k, b) => {}
            _ => best = Some((i, k)),
        }
    }
    best.expect("non-empty sweep").0
}

/// Optimal truncation orders for `h_min` and `h_max` over `N = 1..=nmax`.
///
/// Since `h` is an integer, the objective is the integer refinement
/// `⌈h_min(N)⌉` (resp. `⌊h_max(N)⌋`); among the orders achieving the best
/// integer the smallest `N` is reported. With exact arithmetic `h_min(N)`
/// typically keeps creeping up by amounts far below one unit, so the real
/// value alone would push the optimum to `nmax`.
pub fn optimize_n(
    profile: &CurveProfile,
    nmax: u32,
    policy: FillPolicy,
    prec: u32,
) -> Result<(BoundReport, BoundReport)> {
    let est = estimate_points(profile, nmax.max(1), policy);
    optimize_from_estimates(&est, profile.q, profile.genus, nmax, policy, prec)
}

pub fn optimize_from_estimates(
    est: &PointEstimates,
    q: u64,
    genus: u32,
    nmax: u32,
    policy: FillPolicy,
    prec: u32,
) -> Result<(BoundReport, BoundReport)> {
    let mut windows = sweep_windows(est, q, genus, nmax, prec)?;
    let working = precision_for(&windows, prec);
    if working > prec {
        windows = sweep_windows(est, q, genus, nmax, working)?;
    }
    let (mins, maxs): (Vec<Interval>, Vec<Interval>) =
        windows.par_iter().map(|w| (w.h_min(), w.h_max())).unzip();
    let lo_idx = select(mins.iter().map(Interval::ceil_lo), |a, b| a > b);
    let hi_idx = select(maxs.iter().map(Interval::floor_hi), |a, b| a < b);
    let note = format!("N optimised over 1..={nmax}");
    let lower = BoundReport::new("h_min_explicit", BoundSide::Lower, mins[lo_idx].clone())
        .with_truncation(windows[lo_idx].n)
        .with_policy(policy)
        .assume(note.clone());
    let upper = BoundReport::new("h_max_explicit", BoundSide::Upper, maxs[hi_idx].clone())
        .with_truncation(windows[hi_idx].n)
        .with_policy(policy)
        .assume(note);
    Ok((lower, upper))
}

/// `c_1(q) = 2q(q+1)/(q−1)²` exactly and an enclosure of
/// `c_2(q) = (2q/(q−1))(√q/(√q−1) + q^{3/2}/(q^{3/2}−1))`.
pub fn epsilon_constants(q: u64, prec: u32) -> (Rational, Interval) {
    let qi = Integer::from(q);
    let c1 = Rational::from((Integer::from(&qi + 1u32) * &qi * 2u32, Integer::from(&qi - 1u32).square()));
    let s = sqrt_int(q, prec);
    let one = Interval::from_i64(1, prec);
    let s3 = s.pow_u(3);
    let inner = &s.div(&(&s - &one)) + &s3.div(&(&s3 - &one));
    let lead = Interval::from_rational(&Rational::from((2 * q, q - 1)), prec);
    (c1, &lead * &inner)
}

/// `log(q^f/(q^f−1)) = log1p(1/(q^f−1))`.
fn log_place_factor(q: u64, f: u32, prec: u32) -> Interval {
    let x = Rational::from((Integer::from(1), pow(q, f) - 1u32));
    Interval::from_rational(&x, prec).ln_1p()
}

/// Lower end of the `ε_0` enclosure: `−c_1/(N q^{N/2}) − c_2 g/(N q^{3N/4})`.
pub fn eps0_lower_bound(q: u64, genus: u32, n: u32, prec: u32) -> Interval {
    let (c1, c2) = epsilon_constants(q, prec);
    let s = sqrt_int(q, prec);
    let quarter = s.sqrt();
    let nn = Interval::from_i64(n as i64, prec);
    let t1 = Interval::from_rational(&c1, prec).div(&(&nn * &s.pow_u(n)));
    let t2 = (&c2 * &Interval::from_i64(genus as i64, prec)).div(&(&nn * &quarter.pow_u(3 * n)));
    -&(&t1 + &t2)
}

/// Lower end of the `ε_2` enclosure: `−1/((q−1)(N+1)q^N)`.
pub fn eps2_lower_bound(q: u64, n: u32) -> Rational {
    Rational::from((Integer::from(-1), pow(q, n) * (q - 1) * (n + 1)))
}

/// Lower bound from the Mertens-type identity
/// `log h = g log q + Σ_{f≤N} Φ_f log(q^f/(q^f−1)) − Σ (1+q^{−n})/n + ε_0 − ε_3`
/// with `ε_0` and `ε_3` replaced by their worst cases.
///
/// Unknown place counts are taken as 0 under every fill policy: unlike point
/// counts, individual place counts have no monotone lower estimate.
pub fn h_min_mertens(profile: &CurveProfile, n: u32, policy: FillPolicy, prec: u32) -> Result<BoundReport> {
    if n == 0 {
        return Err(Error::InvalidN { got: 0, max: u32::MAX });
    }
    let (q, genus) = (profile.q, profile.genus);
    let mut places = Interval::zero(prec);
    for f in 1..=n {
        if let Some(phi) = profile.place_count(f) {
            if phi != 0 {
                places = &places + &log_place_factor(q, f, prec).mul_rational(&Rational::from(phi));
            }
        }
    }
    let base = &ln_int(q, prec) * &Interval::from_i64(genus as i64, prec);
    let harmonic = harmonic_term(q, n)?;
    let eps0 = eps0_lower_bound(q, genus, n, prec);
    let eps3 = eps3_abs_bound(q, genus, n, prec);
    let eps3_hi = Interval::new(eps3.hi().clone(), eps3.hi().clone());
    let total = &(&(&base + &places).add_rational(&-harmonic) + &Interval::new(eps0.lo().clone(), eps0.lo().clone()))
        - &eps3_hi;
    Ok(BoundReport::new("h_min_mertens", BoundSide::Lower, total.exp())
        .with_truncation(n)
        .with_policy(policy)
        .assume("unknown place counts taken as 0"))
}

/// Best Mertens-type lower bound over `N = 1..=nmax` (same selection rule
/// as [`optimize_n`]).
pub fn optimize_mertens(profile: &CurveProfile, nmax: u32, policy: FillPolicy, prec: u32) -> Result<BoundReport> {
    if nmax == 0 {
        return Err(Error::InvalidN { got: 0, max: u32::MAX });
    }
    let bits = (2.0 * profile.genus as f64 * ((profile.q as f64).sqrt() + 1.0).log2()).ceil() as u32 + 64;
    let prec = prec.max(bits);
    let reports: Vec<BoundReport> = (1..=nmax)
        .into_par_iter()
        .map(|n| h_min_mertens(profile, n, policy, prec))
        .collect::<Result<_>>()?;
    let idx = select(reports.iter().map(BoundReport::integer), |a, b| a > b);
    Ok(reports.into_iter().nth(idx).unwrap().assume(format!("N optimised over 1..={nmax}")))
}

/// The pieces of the truncated explicit formula at order `N`, computed from
/// exact zeta data.
#[derive(Debug, Clone)]
pub struct MertensBreakdown {
    pub n: u32,
    /// `Σ_{f≤N} N_f/(f q^f)`, with `N_f = Σ_{m|f} m Φ_m`
    pub s0: Rational,
    /// `Σ 1/n`
    pub s1: Rational,
    /// `Σ 1/(n q^n)`
    pub s2: Rational,
    /// `−Σ s_n/(n q^n)` from the root power sums
    pub s3: Rational,
    pub eps0: Interval,
    pub eps2: Interval,
    pub eps3: Interval,
    pub eps0_lower_bound: Interval,
    pub eps2_lower_bound: Rational,
    pub eps3_abs_bound: Interval,
    pub c1: Rational,
    pub c2: Interval,
    /// `Σ_{f≤N} Φ_f log(q^f/(q^f−1))`
    pub place_sum: Interval,
    pub log_kappa_log_q: Interval,
}

impl MertensBreakdown {
    /// `S_0 − (S_1 + S_2 + S_3)`, which vanishes identically.
    pub fn identity_defect(&self) -> Rational {
        self.s0.clone() - &self.s1 - &self.s2 - &self.s3
    }

    /// Whether the exact `ε_i` are consistent with their stated bounds
    /// `ε_0 ∈ [lower, 0]`, `ε_2 ∈ [lower, 0]`, `|ε_3| ≤ bound`, i.e. no
    /// enclosure lies strictly outside its admissible range. `ε_3 = 0` for
    /// genus 0 can only be enclosed, not hit exactly.
    pub fn bounds_hold(&self) -> bool {
        let eps2_lo = Interval::from_rational(&self.eps2_lower_bound, self.eps2.prec());
        let b3 = self.eps3_abs_bound.hi();
        self.eps0.hi() >= self.eps0_lower_bound.lo()
            && *self.eps0.lo() <= 0
            && self.eps2.hi() >= eps2_lo.lo()
            && *self.eps2.lo() <= 0
            && self.eps3.lo() <= b3
            && *self.eps3.hi() >= -b3.clone()
    }
}

pub fn mertens_breakdown(z: &ZetaData, n: u32, prec: u32) -> Result<MertensBreakdown> {
    if n == 0 {
        return Err(Error::InvalidN { got: 0, max: u32::MAX });
    }
    let q = z.q;
    let places = z.place_counts(n);
    // S_0 through the place counts: Σ_n (1/(n q^n)) Σ_{m|n} m Φ_m
    let s0: Rational = (1..=n)
        .map(|k| {
            let inner: Rational = crate::arith::divisors(k)
                .into_iter()
                .map(|m| places[m as usize - 1].clone() * m)
                .sum();
            inner * inv_n_qn(q, k)
        })
        .sum();
    let s1: Rational = (1..=n).map(|k| Rational::from((1, k))).sum();
    let s2: Rational = (1..=n).map(|k| inv_n_qn(q, k)).sum();
    let s3: Rational = -weighted_counts_power(q, &z.power_sums(n));

    let mut place_sum = Interval::zero(prec);
    for (i, phi) in places.iter().enumerate() {
        if *phi != 0 {
            place_sum = &place_sum + &log_place_factor(q, i as u32 + 1, prec).mul_rational(phi);
        }
    }
    let log_q_q1 = log_place_factor(q, 1, prec);
    let log_kappa = z.log_kappa_log_q(prec);
    let eps0 = &Interval::from_rational(&s0, prec) - &place_sum;
    let eps2 = &Interval::from_rational(&s2, prec) - &log_q_q1;
    let eps3 = &(&Interval::from_rational(&s3, prec) - &log_kappa) + &log_q_q1;
    let (c1, c2) = epsilon_constants(q, prec);
    Ok(MertensBreakdown {
        n,
        s0,
        s1,
        s2,
        s3,
        eps0,
        eps2,
        eps3,
        eps0_lower_bound: eps0_lower_bound(q, z.genus, n, prec),
        eps2_lower_bound: eps2_lower_bound(q, n),
        eps3_abs_bound: eps3_abs_bound(q, z.genus, n, prec),
        c1,
        c2,
        place_sum,
        log_kappa_log_q: log_kappa,
    })
}

fn weighted_counts_power(q: u64, s: &[Integer]) -> Rational {
    weighted_counts(q, s)
}

/// Enclosure of
/// `Σ_{f≤N} Φ_f log(q^f/(q^f−1)) − [log(κ log q) − ε_0 + ε_2 + ε_3 + Σ_{n≤N} 1/n]`,
/// which must contain 0.
pub fn mertens_residual(z: &ZetaData, n: u32, prec: u32) -> Result<Interval> {
    let b = mertens_breakdown(z, n, prec)?;
    let rhs = &(&(&(&b.log_kappa_log_q - &b.eps0) + &b.eps2) + &b.eps3).add_rational(&b.s1);
    Ok(&b.place_sum - rhs)
}

/// Limiting place densities `φ_{q^r}` of an asymptotically exact family.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AsymptoticProfile(pub BTreeMap<u32, Rational>);

/// Enclosure of `log q + Σ_r φ_{q^r} log(q^r/(q^r−1))`, the limit of
/// `log h / g` along the family.
pub fn brauer_siegel_limit(q: u64, profile: &AsymptoticProfile, prec: u32) -> Result<Interval> {
    let mut acc = ln_int(q, prec);
    for (&r, phi) in &profile.0 {
        if *phi < 0 {
            return Err(Error::NegativeDensity(r));
        }
        if r == 0 {
            return Err(Error::InvalidDegree(0));
        }
        if *phi != 0 {
            acc = &acc + &log_place_factor(q, r, prec).mul_rational(phi);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::numerator_from_counts;

    const P: u32 = 256;

    #[test]
    fn harmonic_examples() {
        assert_eq!(harmonic_term(4, 1).unwrap(), Rational::from((5, 4)));
        assert_eq!(harmonic_term(2, 2).unwrap(), Rational::from((17, 8)));
        assert!(matches!(harmonic_term(2, 0), Err(Error::InvalidN { .. })));
    }

    #[test]
    fn weighted_sum_examples() {
        let p = CurveProfile::new("H2", 4, 5).with_places([(1, 16)]);
        let est = estimate_points(&p, 1, FillPolicy::Best);
        assert_eq!(weighted_point_sum(&est, 4, 1, Direction::Lower).unwrap(), 4);
        let p0 = CurveProfile::new("P1", 2, 0);
        let est = estimate_points(&p0, 2, FillPolicy::Best);
        let s = weighted_point_sum(&est, 2, 2, Direction::Lower).unwrap();
        assert_eq!(s, Rational::from((17, 8)));
        assert_eq!(s, harmonic_term(2, 2).unwrap());
        assert_eq!(
            weighted_point_sum(&est, 2, 3, Direction::Lower),
            Err(Error::IncompleteEstimates(3))
        );
    }

    #[test]
    fn eps3_bound_examples() {
        let b = eps3_abs_bound(4, 5, 1, P);
        assert!(b.is_point());
        assert_eq!(*b.hi(), 2.5);
        assert!(eps3_abs_bound(2, 0, 7, P).is_point());
        assert_eq!(*eps3_abs_bound(2, 0, 7, P).hi(), 0);
        // 4/((√2−1)·3·2) = 2(√2+1)/3
        let b = eps3_abs_bound(2, 2, 2, P);
        let oracle = 2.0 * (2f64.sqrt() + 1.0) / 3.0;
        assert!((b.hi().to_f64() - oracle).abs() < 1e-14);
        assert!(b.width() < 1e-70);
    }

    #[test]
    fn window_first_tower_row_at_n1() {
        let p = CurveProfile::new("H2", 4, 5).with_places([(1, 16)]);
        let w = log_h_window(&p, 1, FillPolicy::Best, P).unwrap();
        // 4 − 5/4 − 5/2 = 1/4 above 5 log 4
        assert_eq!(w.lower_core, Rational::from((11, 4)));
        let h = w.h_min();
        let oracle = 1024.0 * 0.25f64.exp();
        assert!((h.lo().to_f64() - oracle).abs() < 1e-9);
        assert!((h.lo().to_f64() - 1_314.842_026_688_247).abs() < 1e-9);
    }

    #[test]
    fn genus_zero_window_is_degenerate() {
        let p = CurveProfile::new("P1", 2, 0);
        let w = log_h_window(&p, 5, FillPolicy::Best, P).unwrap();
        assert!(w.log_h_min.is_point() && w.log_h_max.is_point());
        assert_eq!(*w.log_h_lower(), 0);
        let (lo, hi) = optimize_n(&p, 10, FillPolicy::Best, P).unwrap();
        assert_eq!(lo.integer(), 1);
        assert_eq!(hi.integer(), 1);
    }

    #[test]
    fn window_width_decomposes() {
        let p = CurveProfile::new("H2+", 4, 5).with_places([(1, 16), (3, 24)]);
        let w = log_h_window(&p, 7, FillPolicy::Best, P).unwrap();
        let expected = Interval::from_rational(&(w.upper_core.clone() - &w.lower_core), P);
        let two_eps = &w.eps3 + &w.eps3;
        let predicted = &expected + &two_eps;
        let width = &w.log_h_max - &w.log_h_min;
        assert!(width.lo() <= predicted.hi() && predicted.lo() <= width.hi());
    }

    #[test]
    fn optimum_first_tower_row() {
        let p = CurveProfile::new("H2", 4, 5).with_places([(1, 16)]);
        let (lo, _) = optimize_n(&p, DEFAULT_NMAX, FillPolicy::Best, P).unwrap();
        assert_eq!(lo.integer(), 9230);
        assert_eq!(lo.truncation, Some(10));
    }

    #[test]
    fn epsilon_constant_examples() {
        assert_eq!(epsilon_constants(2, P).0, 12);
        assert_eq!(epsilon_constants(3, P).0, 6);
        for q in 2..=100 {
            let (c1, c2) = epsilon_constants(q, P);
            assert!(c1 <= 12 && *c2.hi() <= 20, "q={q}");
        }
    }

    #[test]
    fn mertens_vacuous_for_genus_zero() {
        let p = CurveProfile::new("P1", 2, 0).with_places([(1, 3)]);
        let r = h_min_mertens(&p, 1, FillPolicy::Best, P).unwrap();
        let oracle = (3.0 * 2f64.ln() - 1.5 - 12.0 / 2f64.sqrt()).exp();
        assert!(*r.value.hi() < 1);
        assert!((r.value.lo().to_f64() - oracle).abs() < 1e-15);
    }

    #[test]
    fn mertens_below_explicit() {
        let p = CurveProfile::new("H2", 4, 5).with_places([(1, 16)]);
        let m = h_min_mertens(&p, 10, FillPolicy::Best, P).unwrap();
        let w = log_h_window(&p, 10, FillPolicy::Best, P).unwrap();
        assert!(*m.value.hi() < *w.h_min().lo());
        assert!(*m.value.lo() > 0 && *m.value.hi() < 9230);
    }

    #[test]
    fn breakdown_identities_small_fixtures() {
        let fixtures = [
            numerator_from_counts(2, 1, &[3.into()]).unwrap(),
            numerator_from_counts(2, 2, &[3.into(), 5.into()]).unwrap(),
            numerator_from_counts(2, 0, &[]).unwrap(),
        ];
        for z in &fixtures {
            for n in [1, 3, 5, 10] {
                let b = mertens_breakdown(z, n, P).unwrap();
                assert_eq!(b.identity_defect(), 0);
                assert!(b.bounds_hold(), "g={} N={n}", z.genus);
                assert!(mertens_residual(z, n, P).unwrap().contains_zero());
            }
        }
    }

    #[test]
    fn brauer_siegel_examples() {
        let l = brauer_siegel_limit(2, &AsymptoticProfile::default(), P).unwrap();
        assert!((l.lo().to_f64() - 2f64.ln()).abs() < 1e-15);
        let dv = AsymptoticProfile([(1, Rational::from(1))].into());
        let l = brauer_siegel_limit(4, &dv, P).unwrap();
        assert!((l.lo().to_f64() - (4f64.ln() + (4.0f64 / 3.0).ln())).abs() < 1e-15);
        let neg = AsymptoticProfile([(2, Rational::from(-1))].into());
        assert_eq!(brauer_siegel_limit(4, &neg, P), Err(Error::NegativeDensity(2)));
    }
}
