//! Exact zeta-function data of a curve, reconstructed from point counts.
//!
//! Frobenius eigenvalues are never computed: everything goes through the
//! integer power sums `s_n = q^n + 1 − N_n` and Newton's identities.

use rug::{Integer, Rational};

use crate::arith::{floor_two_sqrt_pow, inv_n_qn, is_prime, pow};
use crate::curve::places_from_points_rational;
use crate::error::{Error, Result};
use crate::interval::{ln_int, Interval};

/// Numerator `P(T) = Σ a_i T^i` of `Z_X(T) = P(T)/((1−T)(1−qT))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaData {
    pub q: u64,
    pub genus: u32,
    /// `a_0..=a_{2g}`
    pub coeffs: Vec<Integer>,
    /// `h = P(1)`
    pub class_number: Integer,
}

impl ZetaData {
    fn from_coeffs(q: u64, genus: u32, coeffs: Vec<Integer>) -> Result<Self> {
        let class_number: Integer = coeffs.iter().sum();
        if class_number <= 0 {
            return Err(Error::NonpositiveClassNumber);
        }
        Ok(ZetaData { q, genus, coeffs, class_number })
    }

    /// Power sums `s_1..=s_n` of the inverse roots of `P`.
    pub fn power_sums(&self, n: u32) -> Vec<Integer> {
        let deg = self.coeffs.len() - 1;
        let mut s: Vec<Integer> = Vec::with_capacity(n as usize);
        for k in 1..=n as usize {
            // s_k = −Σ_{i=1}^{k−1} a_i s_{k−i} − k·a_k
            let mut acc = Integer::new();
            for i in 1..k.min(deg + 1) {
                acc -= Integer::from(&self.coeffs[i] * &s[k - i - 1]);
            }
            if k <= deg {
                acc -= Integer::from(&self.coeffs[k] * k as u32);
            }
            s.push(acc);
        }
        s
    }

    /// `N_1..=N_n` with `N_k = q^k + 1 − s_k`.
    pub fn point_counts(&self, n: u32) -> Vec<Integer> {
        self.power_sums(n)
            .into_iter()
            .enumerate()
            .map(|(i, s)| pow(self.q, i as u32 + 1) + 1u32 - s)
            .collect()
    }

    /// `Φ_1..=Φ_n` by Möbius inversion; integral for data coming from a curve.
    pub fn place_counts(&self, n: u32) -> Vec<Rational> {
        let pts = self.point_counts(n);
        (1..=n).map(|f| places_from_points_rational(&pts, f)).collect()
    }

    /// Enclosure of the residue `κ = h q^{1−g} / ((q−1) log q)`.
    pub fn kappa(&self, prec: u32) -> Interval {
        let num = Rational::from((self.class_number.clone(), Integer::from(1)))
            * Rational::from((pow(self.q, 1), pow(self.q, self.genus)));
        let num = num / (self.q - 1);
        Interval::from_rational(&num, prec).div(&ln_int(self.q, prec))
    }

    /// Enclosure of `log(κ log q) = log h + (1−g) log q − log(q−1)`.
    pub fn log_kappa_log_q(&self, prec: u32) -> Interval {
        let log_h = Interval::from_integer(&self.class_number, prec).ln();
        let log_q = ln_int(self.q, prec);
        let shift = &log_q * &Interval::from_i64(1 - self.genus as i64, prec);
        let log_q1 = if self.q == 2 { Interval::zero(prec) } else { ln_int(self.q - 1, prec) };
        &(&log_h + &shift) - &log_q1
    }
}

/// Rebuilds `P(T)` from the first `g` point counts.
pub fn numerator_from_counts(q: u64, genus: u32, counts: &[Integer]) -> Result<ZetaData> {
    let g = genus as usize;
    if counts.len() != g {
        return Err(Error::WrongCountLength { expected: g, got: counts.len() });
    }
    let s: Vec<Integer> = counts
        .iter()
        .enumerate()
        .map(|(i, n)| pow(q, i as u32 + 1) + 1u32 - n)
        .collect();
    let mut a: Vec<Integer> = vec![Integer::from(1)];
    for k in 1..=g {
        // k·a_k = −(s_k + Σ_{i=1}^{k−1} a_i s_{k−i})
        let mut acc = s[k - 1].clone();
        for i in 1..k {
            acc += Integer::from(&a[i] * &s[k - i - 1]);
        }
        if !acc.is_divisible_u(k as u32) {
            return Err(Error::NonIntegralCoefficient(k));
        }
        a.push(-(acc / k as u32));
    }
    for j in g + 1..=2 * g {
        // a_{2g−i} = q^{g−i} a_i with i = 2g − j
        let v = &a[2 * g - j] * pow(q, (j - g) as u32);
        a.push(v);
    }
    ZetaData::from_coeffs(q, genus, a)
}

/// `A_0..=A_n`: coefficients of `P(T) / ((1−T)(1−qT))`.
pub fn effective_divisor_counts(z: &ZetaData, up_to: u32) -> Vec<Integer> {
    // 1/((1−T)(1−qT)) = Σ_k (q^{k+1} − 1)/(q − 1) T^k
    let geometric: Vec<Integer> = (0..=up_to)
        .map(|k| (pow(z.q, k + 1) - 1u32) / (z.q - 1))
        .collect();
    (0..=up_to as usize)
        .map(|n| {
            z.coeffs
                .iter()
                .enumerate()
                .take(n + 1)
                .map(|(i, a)| Integer::from(a * &geometric[n - i]))
                .sum()
        })
        .collect()
}

/// `Σ_{f ≤ N} N_f / (f q^f)` from exact counts.
pub(crate) fn weighted_counts(q: u64, counts: &[Integer]) -> Rational {
    counts
        .iter()
        .enumerate()
        .map(|(i, n)| inv_n_qn(q, i as u32 + 1) * n)
        .sum()
}

/// Enclosure of the exact truncation error
/// `ε_3(N) = g log q + Σ_{f≤N} N_f/(f q^f) − Σ_{n≤N} (1+q^{−n})/n − log h`.
pub fn eps3_exact(z: &ZetaData, n: u32, prec: u32) -> Interval {
    let counts = z.point_counts(n);
    let core = weighted_counts(z.q, &counts) - crate::explicit::harmonic_term_unchecked(z.q, n);
    let log_q = ln_int(z.q, prec);
    let log_h = Interval::from_integer(&z.class_number, prec).ln();
    let g_log_q = &log_q * &Interval::from_i64(z.genus as i64, prec);
    &(&g_log_q + &Interval::from_rational(&core, prec)) - &log_h
}

/// Weil-consistent data built from elliptic-type factors `1 − tT + qT²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntheticCurve {
    pub traces: Vec<i64>,
    pub zeta: ZetaData,
}

impl SyntheticCurve {
    pub fn point_counts(&self, n: u32) -> Vec<Integer> {
        self.zeta.point_counts(n)
    }
}

pub fn synthesize(q: u64, traces: &[i64]) -> Result<SyntheticCurve> {
    let bound = floor_two_sqrt_pow(q, 1).to_i64().expect("small q");
    let mut poly = vec![Integer::from(1)];
    for &t in traces {
        if t.abs() > bound {
            return Err(Error::TraceOutOfRange { trace: t, bound });
        }
        let factor = [Integer::from(1), Integer::from(-t), Integer::from(q)];
        let mut next = vec![Integer::new(); poly.len() + 2];
        for (i, c) in poly.iter().enumerate() {
            for (j, f) in factor.iter().enumerate() {
                next[i + j] += Integer::from(c * f);
            }
        }
        poly = next;
    }
    let zeta = ZetaData::from_coeffs(q, traces.len() as u32, poly)?;
    Ok(SyntheticCurve { traces: traces.to_vec(), zeta })
}

/// `|E(F_p)|` for `y² = x³ + ax + b` by enumeration.
pub fn count_elliptic(p: u64, a: i64, b: i64) -> Result<u64> {
    if p == 2 || p > 1000 || !is_prime(p) {
        return Err(Error::NonPrimeField(p));
    }
    let pi = p as i64;
    let (a, b) = (a.rem_euclid(pi), b.rem_euclid(pi));
    let disc = (4 * a * a % pi * a + 27 * b * b) % pi;
    if disc == 0 {
        return Err(Error::SingularCurve);
    }
    let mut roots = vec![0u64; p as usize];
    for y in 0..p {
        roots[(y * y % p) as usize] += 1;
    }
    let affine: u64 = (0..pi)
        .map(|x| roots[((x * x % pi * x + a * x + b) % pi) as usize])
        .sum();
    Ok(affine + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| Integer::from(x)).collect()
    }

    /// Brute-force count of y² + y = x⁵ over F_{2^k} for k = 1, 2, using
    /// F_4 = F_2[w]/(w² + w + 1) encoded as two bits.
    fn genus_two_counts() -> (u64, u64) {
        fn mul4(a: u8, b: u8) -> u8 {
            // (a1 w + a0)(b1 w + b0) with w² = w + 1
            let (a0, a1, b0, b1) = (a & 1, a >> 1, b & 1, b >> 1);
            let c0 = (a0 & b0) ^ (a1 & b1);
            let c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
            c0 | (c1 << 1)
        }
        let count = |elems: &[u8], mul: &dyn Fn(u8, u8) -> u8| -> u64 {
            let mut n = 1; // one point at infinity
            for &x in elems {
                let x5 = (0..4).fold(x, |acc, _| mul(acc, x));
                for &y in elems {
                    if mul(y, y) ^ y == x5 {
                        n += 1;
                    }
                }
            }
            n
        };
        let f2 = count(&[0, 1], &|a, b| a & b);
        let f4 = count(&[0, 1, 2, 3], &mul4);
        (f2, f4)
    }

    #[test]
    fn genus_two_fixture_counts_by_enumeration() {
        assert_eq!(genus_two_counts(), (3, 5));
    }

    #[test]
    fn numerator_examples() {
        let z = numerator_from_counts(2, 1, &ints(&[3])).unwrap();
        assert_eq!(z.coeffs, ints(&[1, 0, 2]));
        assert_eq!(z.class_number, 3);

        let (n1, n2) = genus_two_counts();
        let z = numerator_from_counts(2, 2, &ints(&[n1 as i64, n2 as i64])).unwrap();
        assert_eq!(z.coeffs, ints(&[1, 0, 0, 0, 4]));
        assert_eq!(z.class_number, 5);

        let z = numerator_from_counts(2, 0, &[]).unwrap();
        assert_eq!(z.coeffs, ints(&[1]));
        assert_eq!(z.class_number, 1);
    }

    #[test]
    fn numerator_rejects_inconsistent_counts() {
        // s_1 = 0, s_2 = 1 gives 2·a_2 = −1
        assert_eq!(
            numerator_from_counts(2, 2, &ints(&[3, 4])),
            Err(Error::NonIntegralCoefficient(2))
        );
        // N_1 = −1 gives P = 1 − 4T + 2T², P(1) = −1
        assert_eq!(
            numerator_from_counts(2, 1, &ints(&[-1])),
            Err(Error::NonpositiveClassNumber)
        );
    }

    /// Series-multiplication oracle: multiply P by Σ T^i and by Σ q^j T^j separately.
    fn series_oracle(coeffs: &[Integer], q: u64, n: usize) -> Vec<Integer> {
        let mut a: Vec<Integer> = (0..=n).map(|i| coeffs.get(i).cloned().unwrap_or_default()).collect();
        for i in 1..=n {
            let prev = a[i - 1].clone();
            a[i] += prev; // × 1/(1−T)
        }
        for i in 1..=n {
            let prev = Integer::from(&a[i - 1] * q);
            a[i] += prev; // × 1/(1−qT)
        }
        a
    }

    #[test]
    fn divisor_counts_match_series_oracle() {
        let z = numerator_from_counts(2, 1, &ints(&[3])).unwrap();
        let a = effective_divisor_counts(&z, 2);
        // beyond degree 2g − 2 the count is h(q^{n+1−g} − 1)/(q − 1)
        assert_eq!(a, ints(&[1, 3, 9]));
        assert_eq!(a, series_oracle(&z.coeffs, 2, 2));

        let z = numerator_from_counts(2, 2, &ints(&[3, 5])).unwrap();
        let a = effective_divisor_counts(&z, 6);
        assert_eq!(&a[..3], &ints(&[1, 3, 7])[..]);
        assert_eq!(a, series_oracle(&z.coeffs, 2, 6));
        // A_2 = Φ_2 + Φ_1(Φ_1+1)/2 with Φ_1 = 3, Φ_2 = (5 − 3)/2 = 1
        assert_eq!(a[2], 1 + 3 * 4 / 2);

        let z = numerator_from_counts(2, 0, &[]).unwrap();
        let a = effective_divisor_counts(&z, 10);
        for (n, an) in a.iter().enumerate() {
            assert_eq!(*an, (1i64 << (n + 1)) - 1);
        }
    }

    #[test]
    fn power_sums_extend_past_degree() {
        // y² + y = x⁵ over F_2: P = 1 + 4T⁴, α^4 = −4 for all four roots
        let z = numerator_from_counts(2, 2, &ints(&[3, 5])).unwrap();
        let s = z.power_sums(8);
        assert_eq!(s, ints(&[0, 0, 0, -16, 0, 0, 0, 64]));
    }

    #[test]
    fn eps3_exact_examples() {
        let z = numerator_from_counts(2, 2, &ints(&[3, 5])).unwrap();
        let e = eps3_exact(&z, 2, 256);
        // rational parts cancel, leaving 2 log 2 − log 5
        let expected = 2.0 * 2f64.ln() - 5f64.ln();
        assert!((e.lo().to_f64() - expected).abs() < 1e-15);
        assert!(e.width() < 1e-60);

        let z = numerator_from_counts(2, 0, &[]).unwrap();
        for n in [1, 5, 20] {
            assert!(eps3_exact(&z, n, 256).contains_zero());
        }
    }

    #[test]
    fn synthesize_examples() {
        let c = synthesize(2, &[0]).unwrap();
        assert_eq!(c.zeta.coeffs, ints(&[1, 0, 2]));
        // (1 + 2T²)² = 1 + 4T² + 4T⁴
        let c = synthesize(2, &[0, 0]).unwrap();
        assert_eq!(c.zeta.coeffs, ints(&[1, 0, 4, 0, 4]));
        assert_eq!(c.zeta.class_number, 9);
        let c = synthesize(9, &[6, -3, 0]).unwrap();
        assert_eq!(c.zeta.class_number, (1 - 6 + 9) * (1 + 3 + 9) * 10);
        assert_eq!(
            synthesize(2, &[3]),
            Err(Error::TraceOutOfRange { trace: 3, bound: 2 })
        );
    }

    #[test]
    fn synthetic_round_trip_through_counts() {
        let c = synthesize(3, &[1, -2, 3]).unwrap();
        let counts = c.point_counts(3);
        let z = numerator_from_counts(3, 3, &counts).unwrap();
        assert_eq!(z.coeffs, c.zeta.coeffs);
    }

    fn brute_elliptic(p: i64, a: i64, b: i64) -> u64 {
        let mut n = 1;
        for x in 0..p {
            for y in 0..p {
                if (y * y - (x * x * x + a * x + b)).rem_euclid(p) == 0 {
                    n += 1;
                }
            }
        }
        n
    }

    #[test]
    fn elliptic_counts() {
        assert_eq!(brute_elliptic(5, 1, 1), 9);
        assert_eq!(count_elliptic(5, 1, 1).unwrap(), 9);
        assert_eq!(count_elliptic(3, 0, 2), Err(Error::SingularCurve));
        let n = count_elliptic(7, 0, 2).unwrap();
        assert_eq!(n, brute_elliptic(7, 0, 2));
        assert!((n as i64 - 8).abs() <= 5);
        assert_eq!(count_elliptic(5, 0, 0), Err(Error::SingularCurve));
        assert_eq!(count_elliptic(9, 1, 1), Err(Error::NonPrimeField(9)));
        assert_eq!(count_elliptic(2, 1, 1), Err(Error::NonPrimeField(2)));
        for (p, a, b) in [(7, 2, 3), (11, 1, 6), (101, 7, 13), (997, 3, 5)] {
            if p < 200 {
                assert_eq!(count_elliptic(p, a, b).unwrap(), brute_elliptic(p as i64, a, b));
            }
            let n = count_elliptic(p, a, b).unwrap() as i64;
            assert!((n - p as i64 - 1).abs() <= floor_two_sqrt_pow(p, 1).to_i64().unwrap());
        }
    }

    #[test]
    fn class_number_formula_encloses_h() {
        for z in [
            numerator_from_counts(2, 1, &ints(&[3])).unwrap(),
            numerator_from_counts(2, 2, &ints(&[3, 5])).unwrap(),
            numerator_from_counts(2, 0, &[]).unwrap(),
        ] {
            let prec = 256;
            let k = z.kappa(prec);
            let factor = Interval::from_integer(
                &(Integer::from(z.q - 1) * pow(z.q, z.genus)),
                prec,
            )
            .div(&Interval::from_integer(&Integer::from(z.q), prec));
            let lhs = &(&k * &ln_int(z.q, prec)) * &factor;
            assert!(lhs.contains_integer(&z.class_number));
        }
    }
}
