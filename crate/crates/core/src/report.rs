//! Assembly of per-prime prediction reports: profile, class numbers, delta
//! vector, predicted tables, and (optionally) the long-division oracle with
//! a verdict.

use serde::{Deserialize, Serialize};

use crate::classnum::{field_class_number, ClassNumberResult, Method};
use crate::error::{Error, Result};
use crate::expansion::{
    aggregate_frequencies, digit_frequencies, parity_split_frequencies, period_digits,
};
use crate::modular::{legendre_symbol, PrimeProfile};
use crate::theorems::{
    delta_theorem1, delta_theorem2, predict_coset, predict_n0_p1mod4, predict_theorem1,
    predict_theorem2, predict_theorem3, Classification, DecimalClass,
};

/// Which prediction a report carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// Half-order decimal case, numerator a residue.
    Theorem1,
    /// Half-order decimal case, numerator a non-residue (deltas flipped).
    Theorem1Nonresidue,
    /// Aggregated table over coset representatives.
    Coset,
    /// Primitive-root case: odd/even position tables.
    Theorem2,
    /// Octal half-order case.
    Theorem3,
    /// p = 1 mod 4: zero-digit count only.
    N0,
}

impl Variant {
    pub fn base(self) -> u64 {
        match self {
            Variant::Theorem3 => 8,
            _ => 10,
        }
    }
}

/// Predicted (or observed) digit counts in the shape the variant calls for.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Prediction {
    Frequencies { n: Vec<u64> },
    ParitySplit { n_odd: Vec<u64>, n_even: Vec<u64> },
    ZeroDigit { n0: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Match,
    Mismatch,
    NotApplicable,
}

/// One prime's prediction, with the oracle comparison when verification ran.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictionReport {
    pub profile: PrimeProfile,
    pub variant: Variant,
    pub h1: Option<ClassNumberResult>,
    pub h2: Option<ClassNumberResult>,
    pub delta: Vec<i64>,
    pub predicted: Prediction,
    pub oracle: Option<Prediction>,
    pub verdict: Verdict,
}

/// Smallest quadratic non-residue mod p.
fn smallest_nonresidue(p: u64) -> u64 {
    (2..p)
        .find(|&m| legendre_symbol(m as i64, p) == -1)
        .expect("every odd prime has a non-residue")
}

/// Build the prediction only; verdict stays `NotApplicable` (nothing ran).
pub fn predict(p: u64, variant: Variant) -> Result<PredictionReport> {
    build(p, variant, false)
}

/// Build the prediction and the long-division oracle and compare.
pub fn verify(p: u64, variant: Variant) -> Result<PredictionReport> {
    build(p, variant, true)
}

fn build(p: u64, variant: Variant, with_oracle: bool) -> Result<PredictionReport> {
    let report = match variant {
        Variant::Theorem1 | Variant::Theorem1Nonresidue => {
            let m_is_qr = variant == Variant::Theorem1;
            let profile = PrimeProfile::new(p, 10)?;
            let h1 = field_class_number(p, Method::Forms)?;
            let h2 = field_class_number(5 * p, Method::Forms)?;
            let mut delta = delta_theorem1(p, h1.h, h2.h)?.assert_integral()?;
            if !m_is_qr {
                for d in &mut delta {
                    *d = -*d;
                }
            }
            let predicted = Prediction::Frequencies {
                n: predict_theorem1(p, h1.h, h2.h, m_is_qr)?.counts,
            };
            let oracle = if with_oracle {
                let m = if m_is_qr { 1 } else { smallest_nonresidue(p) };
                Some(Prediction::Frequencies {
                    n: digit_frequencies(&period_digits(m, p, 10)?).counts,
                })
            } else {
                None
            };
            PredictionReport {
                profile,
                variant,
                h1: Some(h1),
                h2: Some(h2),
                delta,
                predicted,
                oracle,
                verdict: Verdict::NotApplicable,
            }
        }
        Variant::Coset => {
            let profile = PrimeProfile::new(p, 10)?;
            let h1 = field_class_number(p, Method::Forms)?;
            let h2 = field_class_number(5 * p, Method::Forms)?;
            let delta = delta_theorem1(p, h1.h, h2.h)?.assert_integral()?;
            let predicted = Prediction::Frequencies {
                n: predict_coset(p, h1.h, h2.h)?.counts,
            };
            let oracle = if with_oracle {
                Some(Prediction::Frequencies {
                    n: aggregate_frequencies(p, 10)?.counts,
                })
            } else {
                None
            };
            PredictionReport {
                profile,
                variant,
                h1: Some(h1),
                h2: Some(h2),
                delta,
                predicted,
                oracle,
                verdict: Verdict::NotApplicable,
            }
        }
        Variant::Theorem2 => {
            let profile = PrimeProfile::new(p, 10)?;
            let h1 = field_class_number(p, Method::Forms)?;
            let h2 = field_class_number(5 * p, Method::Forms)?;
            let delta = delta_theorem2(p, h1.h, h2.h)?.assert_integral()?;
            let (odd, even) = predict_theorem2(p, h1.h, h2.h)?;
            let predicted = Prediction::ParitySplit {
                n_odd: odd.counts,
                n_even: even.counts,
            };
            let oracle = if with_oracle {
                let (o, e) = parity_split_frequencies(&period_digits(1, p, 10)?)?;
                Some(Prediction::ParitySplit {
                    n_odd: o.counts,
                    n_even: e.counts,
                })
            } else {
                None
            };
            PredictionReport {
                profile,
                variant,
                h1: Some(h1),
                h2: Some(h2),
                delta,
                predicted,
                oracle,
                verdict: Verdict::NotApplicable,
            }
        }
        Variant::Theorem3 => {
            let profile = PrimeProfile::new(p, 8)?;
            let h1 = field_class_number(p, Method::Forms)?;
            let h2 = field_class_number(2 * p, Method::Forms)?;
            let delta_vec = predict_theorem3(p, h1.h, h2.h)?;
            // reconstruct the integral deltas n_k - n_{7-k}
            let delta: Vec<i64> = (0..4)
                .map(|k| delta_vec.counts[k] as i64 - delta_vec.counts[7 - k] as i64)
                .collect();
            let predicted = Prediction::Frequencies {
                n: delta_vec.counts,
            };
            let oracle = if with_oracle {
                Some(Prediction::Frequencies {
                    n: digit_frequencies(&period_digits(1, p, 8)?).counts,
                })
            } else {
                None
            };
            PredictionReport {
                profile,
                variant,
                h1: Some(h1),
                h2: Some(h2),
                delta,
                predicted,
                oracle,
                verdict: Verdict::NotApplicable,
            }
        }
        Variant::N0 => {
            let profile = PrimeProfile::new(p, 10)?;
            let n0 = predict_n0_p1mod4(p)?;
            // delta_0 = 2 n_0 - floor(p/10), integral by construction
            let delta = vec![2 * n0 as i64 - (p / 10) as i64];
            let predicted = Prediction::ZeroDigit { n0 };
            let oracle = if with_oracle {
                Some(Prediction::ZeroDigit {
                    n0: digit_frequencies(&period_digits(1, p, 10)?).counts[0],
                })
            } else {
                None
            };
            PredictionReport {
                profile,
                variant,
                h1: None,
                h2: None,
                delta,
                predicted,
                oracle,
                verdict: Verdict::NotApplicable,
            }
        }
    };
    Ok(finish(report))
}

fn finish(mut report: PredictionReport) -> PredictionReport {
    report.verdict = match &report.oracle {
        None => Verdict::NotApplicable,
        Some(o) if *o == report.predicted => Verdict::Match,
        Some(_) => Verdict::Mismatch,
    };
    report
}

/// The verifiable variants for a classified prime at the given base.
pub fn variants_for(class: &Classification, base: u64) -> Vec<Variant> {
    match base {
        10 => match class.decimal {
            DecimalClass::Theorem1 => vec![Variant::Theorem1, Variant::Theorem1Nonresidue],
            DecimalClass::Theorem2 => vec![Variant::Theorem2],
            DecimalClass::Coset { .. } => vec![Variant::Coset],
            DecimalClass::ZeroDigitFormula => vec![Variant::N0],
            DecimalClass::Unclassified => Vec::new(),
        },
        8 => {
            if class.theorem3 {
                vec![Variant::Theorem3]
            } else {
                Vec::new()
            }
        }
        _ => Vec::new(),
    }
}

/// Map a requested variant onto a prime only when the classification admits
/// it; `Err` carries the machine-readable reason.
pub fn check_applicable(class: &Classification, variant: Variant) -> Result<()> {
    let p = class.profile_10.p;
    let ok = match variant {
        Variant::Theorem1 | Variant::Theorem1Nonresidue => {
            class.decimal == DecimalClass::Theorem1
        }
        Variant::Coset => matches!(
            class.decimal,
            DecimalClass::Coset { .. } | DecimalClass::Theorem1
        ),
        Variant::Theorem2 => class.decimal == DecimalClass::Theorem2,
        Variant::Theorem3 => class.theorem3,
        Variant::N0 => class.decimal == DecimalClass::ZeroDigitFormula,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::NotApplicable {
            p,
            reason: format!(
                "classification {:?} does not admit variant {:?}",
                class.tags(),
                variant
            ),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theorems::classify_prime;

    #[test]
    fn verify_p67_theorem1() {
        let r = verify(67, Variant::Theorem1).unwrap();
        assert_eq!(r.verdict, Verdict::Match);
        assert_eq!(r.delta, vec![0, -3, 3, 6, -3]);
        assert_eq!(r.h1.unwrap().h, 1);
        assert_eq!(r.h2.unwrap().h, 18);
        assert_eq!(
            r.predicted,
            Prediction::Frequencies {
                n: vec![3, 2, 5, 6, 2, 5, 0, 2, 5, 3]
            }
        );
    }

    #[test]
    fn verify_p67_nonresidue_flips_delta() {
        let r = verify(67, Variant::Theorem1Nonresidue).unwrap();
        assert_eq!(r.verdict, Verdict::Match);
        assert_eq!(r.delta, vec![0, 3, -3, -6, 3]);
    }

    #[test]
    fn verify_p79_coset() {
        let r = verify(79, Variant::Coset).unwrap();
        assert_eq!(r.verdict, Verdict::Match);
        assert_eq!(
            r.predicted,
            Prediction::Frequencies {
                n: vec![4, 5, 7, 3, 3, 5, 5, 1, 3, 3]
            }
        );
    }

    #[test]
    fn verify_p47_theorem2_and_p23_theorem3() {
        let r = verify(47, Variant::Theorem2).unwrap();
        assert_eq!(r.verdict, Verdict::Match);
        let r8 = verify(23, Variant::Theorem3).unwrap();
        assert_eq!(r8.verdict, Verdict::Match);
        assert_eq!(r8.h2.unwrap().discriminant, -184);
        assert_eq!(
            r8.predicted,
            Prediction::Frequencies {
                n: vec![2, 2, 2, 1, 2, 1, 1, 0]
            }
        );
    }

    #[test]
    fn verify_p13_n0() {
        let r = verify(13, Variant::N0).unwrap();
        assert_eq!(r.verdict, Verdict::Match);
        assert_eq!(r.predicted, Prediction::ZeroDigit { n0: 1 });
        assert!(r.h1.is_none());
    }

    #[test]
    fn predict_leaves_verdict_not_applicable() {
        let r = predict(67, Variant::Theorem1).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);
        assert!(r.oracle.is_none());
    }

    #[test]
    fn json_round_trip() {
        for (p, v) in [
            (67, Variant::Theorem1),
            (79, Variant::Coset),
            (47, Variant::Theorem2),
            (23, Variant::Theorem3),
            (13, Variant::N0),
        ] {
            let r = verify(p, v).unwrap();
            let json = serde_json::to_string(&r).unwrap();
            let back: PredictionReport = serde_json::from_str(&json).unwrap();
            assert_eq!(back, r, "round trip failed for p={p}");
        }
    }

    #[test]
    fn json_contains_flat_n_key() {
        let r = predict(67, Variant::Theorem1).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"n\":[3,2,5,6,2,5,0,2,5,3]"), "{json}");
    }

    #[test]
    fn variant_selection_per_classification() {
        let c = classify_prime(67).unwrap();
        assert_eq!(
            variants_for(&c, 10),
            vec![Variant::Theorem1, Variant::Theorem1Nonresidue]
        );
        assert_eq!(variants_for(&c, 8), Vec::<Variant>::new());

        let c23 = classify_prime(23).unwrap();
        assert_eq!(variants_for(&c23, 10), vec![Variant::Theorem2]);
        assert_eq!(variants_for(&c23, 8), vec![Variant::Theorem3]);

        assert!(check_applicable(&c23, Variant::Theorem3).is_ok());
        assert!(check_applicable(&c23, Variant::Theorem1).is_err());
        // theorem1 primes admit the coset variant (single coset)
        let c67 = classify_prime(67).unwrap();
        assert!(check_applicable(&c67, Variant::Coset).is_ok());
    }
}
