//! The predictive formulas: delta vectors tying digit counts to class
//! numbers, frequency predictors for the half-order, primitive-root, coset
//! and octal regimes, the n_0 formula for p = 1 mod 4 via a generalized
//! Bernoulli number, the mean-digit-sum diagnostic, prime classification,
//! and the Artin-constant partial product.
//!
//! Every delta and count is computed in exact rational arithmetic and
//! integrality is asserted, never assumed; a failure names the offending
//! index and points at wrong class-number inputs.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;
use num_rational::Rational64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expansion::{period_digits, FrequencyTable, TableVariant};
use crate::modular::{legendre_symbol, qr_table, PrimeProfile};
use crate::primes::{is_prime, primes_up_to};

/// Which display a delta vector was assembled from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaSource {
    Lemma2,
    Theorem1Table,
    Theorem2Table,
    Theorem3Table,
}

/// The exact-rational corrections delta_0 .. delta_{b/2-1} before
/// integrality is asserted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaVector {
    pub base: u64,
    pub values: Vec<Rational64>,
    pub source: DeltaSource,
}

impl DeltaVector {
    /// Every delta must be an integer once the h/2 and h/4 terms combine;
    /// a leftover denominator means the class-number inputs are wrong.
    pub fn assert_integral(&self) -> Result<Vec<i64>> {
        self.values
            .iter()
            .enumerate()
            .map(|(k, v)| {
                if v.is_integer() {
                    Ok(v.to_integer())
                } else {
                    Err(Error::NonIntegralDelta {
                        k,
                        value: v.to_string(),
                    })
                }
            })
            .collect()
    }
}

fn ensure_3mod4(p: u64) -> Result<()> {
    if p <= 3 || !is_prime(p) {
        return Err(Error::NotAnOddPrime { p, min: 3 });
    }
    if p % 4 != 3 {
        return Err(Error::NotApplicable {
            p,
            reason: "p must be congruent to 3 mod 4".into(),
        });
    }
    Ok(())
}

/// The master delta formulas in terms of chi(2), chi(5), chi(10), valid for
/// every prime p = 3 mod 4, p > 3. h1 = h(-p), h2 = h(-5p).
pub fn delta_lemma2(p: u64, h1: u64, h2: u64) -> Result<DeltaVector> {
    ensure_3mod4(p)?;
    let c2 = legendre_symbol(2, p) as i64;
    let c5 = legendre_symbol(5, p) as i64;
    let c10 = c2 * c5;
    let (h1, h2) = (h1 as i64, h2 as i64);
    let quarter = |n: i64| Rational64::new(n, 4);
    let values = vec![
        quarter((3 + c2 + c5 - c10) * h1 - (1 + c2) * h2),
        quarter((2 - c2) * (1 - c5) * h1 + c2 * h2),
        quarter((2 - c2) * (c5 - 1) * h1 + (2 + c2) * h2),
        quarter((2 - c2) * (1 - c5) * h1 - c2 * h2),
        quarter((3 - 4 * c2 + c5) * h1 - h2),
    ];
    Ok(DeltaVector {
        base: 10,
        values,
        source: DeltaSource::Lemma2,
    })
}

/// The specialized delta table for the half-order case chi(10) = +1.
pub fn delta_theorem1(p: u64, h1: u64, h2: u64) -> Result<DeltaVector> {
    ensure_3mod4(p)?;
    if legendre_symbol(10, p) != 1 {
        return Err(Error::NotApplicable {
            p,
            reason: "10 must be a quadratic residue mod p".into(),
        });
    }
    let (h1, h2) = (h1 as i64, h2 as i64);
    let half = |n: i64| Rational64::new(n, 2);
    let quarter = |n: i64| Rational64::new(n, 4);
    let values = if p % 8 == 3 {
        let d1 = half(3 * h1) - quarter(h2);
        let d3 = half(3 * h1) + quarter(h2);
        vec![Rational64::zero(), d1, -d1, d3, d1]
    } else {
        let d1 = quarter(h2);
        vec![
            Rational64::from_integer(h1) - half(h2),
            d1,
            quarter(3 * h2),
            -d1,
            -d1,
        ]
    };
    Ok(DeltaVector {
        base: 10,
        values,
        source: DeltaSource::Theorem1Table,
    })
}

/// The specialized delta table for the primitive-root case chi(10) = -1.
pub fn delta_theorem2(p: u64, h1: u64, h2: u64) -> Result<DeltaVector> {
    ensure_3mod4(p)?;
    if legendre_symbol(10, p) != -1 {
        return Err(Error::NotApplicable {
            p,
            reason: "10 must be a quadratic non-residue mod p".into(),
        });
    }
    let (h1, h2) = (h1 as i64, h2 as i64);
    let half = |n: i64| Rational64::new(n, 2);
    let quarter = |n: i64| Rational64::new(n, 4);
    let values = if p % 8 == 3 {
        let d1 = -quarter(h2);
        vec![
            Rational64::from_integer(h1),
            d1,
            -d1,
            -d1,
            Rational64::from_integer(2 * h1) - quarter(h2),
        ]
    } else {
        let d1 = half(h1) + quarter(h2);
        vec![
            Rational64::from_integer(h1) - half(h2),
            d1,
            -half(h1) + quarter(3 * h2),
            half(h1) - quarter(h2),
            -d1,
        ]
    };
    Ok(DeltaVector {
        base: 10,
        values,
        source: DeltaSource::Theorem2Table,
    })
}

/// The octal delta table: h1 = h(-p), h2 = h(-2p field) for p = 7 mod 8.
fn delta_theorem3(h1: u64, h2: u64) -> DeltaVector {
    let (h1, h2) = (h1 as i64, h2 as i64);
    let quarter = |n: i64| Rational64::new(n, 4);
    DeltaVector {
        base: 8,
        values: vec![
            Rational64::from_integer(h1) - quarter(h2),
            quarter(h2),
            quarter(h2),
            -quarter(h2),
        ],
        source: DeltaSource::Theorem3Table,
    }
}

fn count_from_rational(k: usize, v: Rational64) -> Result<u64> {
    if !v.is_integer() || v.is_negative() {
        return Err(Error::InvalidCount {
            k,
            value: v.to_string(),
        });
    }
    Ok(v.to_integer() as u64)
}

/// n_k = (floor((k+1)p/b) - floor(kp/b) + delta_k) / 2 for the lower half,
/// mirrored by n_{b-1-k} = n_k - delta_k.
fn assemble_table(
    p: u64,
    base: u64,
    deltas: &[Rational64],
    variant: TableVariant,
) -> Result<FrequencyTable> {
    let b = base as usize;
    debug_assert_eq!(b % 2, 0);
    debug_assert_eq!(deltas.len(), b / 2);
    let mut counts = vec![0u64; b];
    for (k, &dk) in deltas.iter().enumerate() {
        let k64 = k as u64;
        let lattice = ((k64 + 1) * p / base - k64 * p / base) as i64;
        let nk = (Rational64::from_integer(lattice) + dk) / Rational64::from_integer(2);
        counts[k] = count_from_rational(k, nk)?;
        counts[b - 1 - k] = count_from_rational(b - 1 - k, nk - dk)?;
    }
    Ok(FrequencyTable {
        base,
        variant,
        counts,
    })
}

/// Digit frequencies of m/p when 10 has order (p-1)/2 mod p, p = 3 mod 4.
/// For m a non-residue the delta signs are interchanged.
pub fn predict_theorem1(p: u64, h1: u64, h2: u64, m_is_qr: bool) -> Result<FrequencyTable> {
    ensure_3mod4(p)?;
    let profile = PrimeProfile::new(p, 10)?;
    if !profile.has_half_order() {
        return Err(Error::NotApplicable {
            p,
            reason: "10 must have order (p-1)/2".into(),
        });
    }
    let delta = delta_theorem1(p, h1, h2)?;
    let values: Vec<Rational64> = if m_is_qr {
        delta.values
    } else {
        delta.values.into_iter().map(|v| -v).collect()
    };
    let table = assemble_table(p, 10, &values, TableVariant::Plain)?;
    debug_assert_eq!(table.total(), (p - 1) / 2);
    Ok(table)
}

/// The aggregated table over one period per coset representative, for
/// p = 3 mod 4 with 10 a residue of any order q dividing (p-1)/2. The same
/// displayed formula applies with n_k read as the aggregated count.
pub fn predict_coset(p: u64, h1: u64, h2: u64) -> Result<FrequencyTable> {
    ensure_3mod4(p)?;
    let profile = PrimeProfile::new(p, 10)?;
    if !profile.base_is_qr {
        return Err(Error::BaseNotResidue { base: 10, p });
    }
    let delta = delta_theorem1(p, h1, h2)?;
    let table = assemble_table(p, 10, &delta.values, TableVariant::Aggregated)?;
    debug_assert_eq!(table.total(), (p - 1) / 2);
    Ok(table)
}

/// Odd- and even-position digit frequencies of m/p (m a residue) when 10 is
/// a primitive root mod p, p = 3 mod 4. The even table is the digit-reversal
/// of the odd table.
pub fn predict_theorem2(p: u64, h1: u64, h2: u64) -> Result<(FrequencyTable, FrequencyTable)> {
    ensure_3mod4(p)?;
    let profile = PrimeProfile::new(p, 10)?;
    if !profile.is_primitive_root() {
        return Err(Error::NotApplicable {
            p,
            reason: "10 must be a primitive root mod p".into(),
        });
    }
    let delta = delta_theorem2(p, h1, h2)?;
    let odd = assemble_table(p, 10, &delta.values, TableVariant::OddPositions)?;
    let mut even_counts = odd.counts.clone();
    even_counts.reverse();
    debug_assert_eq!(odd.total(), (p - 1) / 2);
    Ok((
        odd,
        FrequencyTable {
            base: 10,
            variant: TableVariant::EvenPositions,
            counts: even_counts,
        },
    ))
}

/// Octal digit frequencies of 1/p when 8 has order (p-1)/2 mod p, which
/// forces p = 7 mod 8. Here h2 is the class number for the -8p field.
pub fn predict_theorem3(p: u64, h1: u64, h2: u64) -> Result<FrequencyTable> {
    ensure_3mod4(p)?;
    if p % 8 != 7 {
        return Err(Error::NotApplicable {
            p,
            reason: "octal half-order requires p = 7 mod 8".into(),
        });
    }
    let profile = PrimeProfile::new(p, 8)?;
    if !profile.has_half_order() {
        return Err(Error::NotApplicable {
            p,
            reason: "8 must have order (p-1)/2".into(),
        });
    }
    let delta = delta_theorem3(h1, h2);
    let table = assemble_table(p, 8, &delta.values, TableVariant::Plain)?;
    debug_assert_eq!(table.total(), (p - 1) / 2);
    let n = &table.counts;
    // consequences of the octal display
    assert_eq!(
        4 * (n[1] as i64 - n[6] as i64),
        h2 as i64,
        "octal identity 4(n1 - n6) = h2 failed at p={p}"
    );
    assert_eq!(
        n[0] as i64 + n[1] as i64 - n[6] as i64 - n[7] as i64,
        h1 as i64,
        "octal identity n0 + n1 - n6 - n7 = h1 failed at p={p}"
    );
    Ok(table)
}

/// Exact complex rationals, used for the character sums behind the
/// p = 1 mod 4 zero-digit formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GaussianRational {
    pub re: Rational64,
    pub im: Rational64,
}

impl GaussianRational {
    pub fn new(re: Rational64, im: Rational64) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_integers(re: i64, im: i64) -> Self {
        GaussianRational {
            re: Rational64::from_integer(re),
            im: Rational64::from_integer(im),
        }
    }

    pub fn zero() -> Self {
        Self::from_integers(0, 0)
    }

    pub fn one() -> Self {
        Self::from_integers(1, 0)
    }

    pub fn i() -> Self {
        Self::from_integers(0, 1)
    }

    pub fn conjugate(self) -> Self {
        GaussianRational {
            re: self.re,
            im: -self.im,
        }
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        GaussianRational::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        GaussianRational::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        GaussianRational::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianRational::new(-self.re, -self.im)
    }
}

/// The odd character mod 5 with psi(2) = i.
fn psi(j: u64) -> GaussianRational {
    match j % 5 {
        1 => GaussianRational::from_integers(1, 0),
        2 => GaussianRational::from_integers(0, 1),
        3 => GaussianRational::from_integers(0, -1),
        4 => GaussianRational::from_integers(-1, 0),
        _ => GaussianRational::zero(),
    }
}

/// The zero-digit count of 1/p for p = 1 mod 4 with 10 of order (p-1)/2:
/// n_0 = (floor(p/10) + delta_0)/2 where
/// delta_0 = Re(conj(psi)(-p) (1 - chi psi(2)) B) / 2 and
/// B = (1/5p) sum_{j=1}^{5p} j chi(j) psi(j), all in exact Gaussian
/// rationals.
pub fn predict_n0_p1mod4(p: u64) -> Result<u64> {
    let profile = PrimeProfile::new(p, 10)?;
    if p % 4 != 1 {
        return Err(Error::NotApplicable {
            p,
            reason: "the zero-digit formula needs p = 1 mod 4".into(),
        });
    }
    if !profile.has_half_order() {
        return Err(Error::NotApplicable {
            p,
            reason: "10 must have order (p-1)/2".into(),
        });
    }
    let qr = qr_table(p);
    let five_p = 5 * p;
    // chi psi takes values in {0, +-1, +-i}; accumulate the Bernoulli sum
    // as an exact Gaussian integer.
    let (mut sum_re, mut sum_im) = (0i64, 0i64);
    for j in 1..=five_p {
        let jp = j % p;
        if jp == 0 {
            continue;
        }
        let chi: i64 = if qr[jp as usize] { 1 } else { -1 };
        let term = chi * j as i64;
        match j % 5 {
            1 => sum_re += term,
            2 => sum_im += term,
            3 => sum_im -= term,
            4 => sum_re -= term,
            _ => {}
        }
    }
    let bernoulli = GaussianRational::new(
        Rational64::new(sum_re, five_p as i64),
        Rational64::new(sum_im, five_p as i64),
    );
    let chi2: i64 = if qr[2] { 1 } else { -1 };
    let chi_psi_2 = GaussianRational::from_integers(0, chi2); // chi(2) * i
    let psi_bar_minus_p = psi((5 - p % 5) % 5).conjugate();
    let product = psi_bar_minus_p * (GaussianRational::one() - chi_psi_2) * bernoulli;
    let delta0 = product.re / Rational64::from_integer(2);
    let n0 = (Rational64::from_integer((p / 10) as i64) + delta0)
        / Rational64::from_integer(2);
    count_from_rational(0, n0)
}

/// Which closed form the mean digit sum matched.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeanValueSign {
    Plus,
    Minus,
}

/// Diagnostic for the mean-value display: the digit sum of one period
/// against both sign candidates 9(p-1)/4 +- 9 h1/2.
#[derive(Debug, Clone, PartialEq)]
pub struct DigitSumReport {
    pub p: u64,
    pub predicted_sum: u64,
    pub oracle_sum: u64,
    pub plus_form: Rational64,
    pub minus_form: Rational64,
    pub oracle_matches: Option<MeanValueSign>,
}

/// Compare sum(k * n_k) of a predicted table with the digit sum of the
/// actual period of 1/p and with both candidate closed forms. Diagnostic
/// only: a mismatch is reported, never an error.
pub fn digit_sum_check(p: u64, h1: u64, predicted: &FrequencyTable) -> Result<DigitSumReport> {
    let predicted_sum: u64 = predicted
        .counts
        .iter()
        .enumerate()
        .map(|(k, &c)| k as u64 * c)
        .sum();
    let oracle_sum: u64 = period_digits(1, p, 10)?
        .digits
        .iter()
        .map(|&d| d as u64)
        .sum();
    let base_term = Rational64::new(9 * (p as i64 - 1), 4);
    let h_term = Rational64::new(9 * h1 as i64, 2);
    let plus_form = base_term + h_term;
    let minus_form = base_term - h_term;
    let oracle_rat = Rational64::from_integer(oracle_sum as i64);
    let oracle_matches = if oracle_rat == plus_form {
        Some(MeanValueSign::Plus)
    } else if oracle_rat == minus_form {
        Some(MeanValueSign::Minus)
    } else {
        None
    };
    Ok(DigitSumReport {
        p,
        predicted_sum,
        oracle_sum,
        plus_form,
        minus_form,
        oracle_matches,
    })
}

/// Decimal classification of a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum DecimalClass {
    /// p = 3 mod 4, ord_p(10) = (p-1)/2.
    Theorem1,
    /// p = 3 mod 4, 10 a primitive root.
    Theorem2,
    /// p = 3 mod 4, 10 a residue of order q < (p-1)/2.
    Coset { q: u64 },
    /// p = 1 mod 4, ord_p(10) = (p-1)/2: only n_0 is predicted.
    ZeroDigitFormula,
    /// No displayed formula applies.
    Unclassified,
}

/// Full classification of a prime: decimal regime plus whether the octal
/// half-order theorem also applies (the two are not mutually exclusive).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub profile_10: PrimeProfile,
    pub profile_8: PrimeProfile,
    pub decimal: DecimalClass,
    pub theorem3: bool,
}

impl Classification {
    pub fn tags(&self) -> Vec<String> {
        let mut tags = Vec::new();
        match self.decimal {
            DecimalClass::Theorem1 => tags.push("theorem1".to_string()),
            DecimalClass::Theorem2 => tags.push("theorem2".to_string()),
            DecimalClass::Coset { q } => tags.push(format!("coset({q})")),
            DecimalClass::ZeroDigitFormula => tags.push("p1mod4-n0".to_string()),
            DecimalClass::Unclassified => {}
        }
        if self.theorem3 {
            tags.push("theorem3-also".to_string());
        }
        if tags.is_empty() {
            tags.push("none".to_string());
        }
        tags
    }
}

/// Classify a prime p > 5 from p mod 8 and the orders of 10 and 8 mod p.
pub fn classify_prime(p: u64) -> Result<Classification> {
    if p <= 5 || !is_prime(p) {
        return Err(Error::NotAnOddPrime { p, min: 5 });
    }
    let profile_10 = PrimeProfile::new(p, 10)?;
    let profile_8 = PrimeProfile::new(p, 8)?;
    let half = (p - 1) / 2;
    let decimal = if p % 4 == 3 {
        if profile_10.order_of_base == half {
            DecimalClass::Theorem1
        } else if profile_10.order_of_base == p - 1 {
            DecimalClass::Theorem2
        } else if profile_10.base_is_qr {
            DecimalClass::Coset {
                q: profile_10.order_of_base,
            }
        } else {
            DecimalClass::Unclassified
        }
    } else if profile_10.order_of_base == half {
        DecimalClass::ZeroDigitFormula
    } else {
        DecimalClass::Unclassified
    };
    let theorem3 = p % 8 == 7 && profile_8.order_of_base == half;
    Ok(Classification {
        profile_10,
        profile_8,
        decimal,
        theorem3,
    })
}

/// Partial product of prod_q (1 - 1/(q(q-1))) over primes q <= prime_bound,
/// evaluated in 192-bit fixed point so truncation stays far below f64
/// resolution. Monotone decreasing in the bound.
pub fn artin_constant(prime_bound: u64) -> f64 {
    const SCALE_BITS: u32 = 192;
    let mut acc = BigUint::one() << SCALE_BITS;
    for q in primes_up_to(prime_bound) {
        let qq = q * (q - 1);
        acc = acc * (qq - 1) / qq;
    }
    acc.to_f64().expect("fixed-point value is finite") * (-(SCALE_BITS as f64)).exp2()
}
