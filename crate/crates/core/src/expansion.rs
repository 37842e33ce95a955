//! Exact repeating periods of m/p in base b, digit frequency tables,
//! parity-split tables, and coset-aggregated tables.

use crate::error::{Error, Result};
use crate::modular::{mod_pow, multiplicative_order, qr_table, PrimeProfile};
use crate::primes::factorize;

/// The repeating block of the base-b expansion of m/p.
///
/// `digits[j]` equals theta_b(m * b^j) and the length is the order of b
/// mod p; the remainder sequence returns to m exactly at that step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitPeriod {
    pub p: u64,
    pub base: u64,
    pub numerator: u64,
    pub digits: Vec<u8>,
}

/// Which positions a frequency table counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableVariant {
    /// Every position of one period.
    Plain,
    /// Odd positions j = 1, 3, 5, ... (primitive-root case).
    OddPositions,
    /// Even positions j = 2, 4, 6, ...
    EvenPositions,
    /// Summed over one period per coset representative.
    Aggregated,
}

/// Counts of each digit value 0..base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrequencyTable {
    pub base: u64,
    pub variant: TableVariant,
    pub counts: Vec<u64>,
}

impl FrequencyTable {
    pub fn from_digits(base: u64, variant: TableVariant, digits: &[u8]) -> Self {
        let mut counts = vec![0u64; base as usize];
        for &d in digits {
            counts[d as usize] += 1;
        }
        FrequencyTable {
            base,
            variant,
            counts,
        }
    }

    /// Total number of positions counted.
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// The period of m/p in base b by exact long division.
pub fn period_digits(m: u64, p: u64, base: u64) -> Result<DigitPeriod> {
    if base % p == 0 {
        return Err(Error::BaseDivisible { base, p });
    }
    if m % p == 0 {
        return Err(Error::NumeratorDivisible { m, p });
    }
    let m = m % p;
    let mut digits = Vec::new();
    let mut r = m;
    loop {
        let t = base
            .checked_mul(r)
            .expect("base * remainder overflows u64");
        digits.push((t / p) as u8);
        r = t % p;
        if r == m {
            break;
        }
    }
    debug_assert_eq!(digits.len() as u64, multiplicative_order(base, p)?);
    Ok(DigitPeriod {
        p,
        base,
        numerator: m,
        digits,
    })
}

/// Count each digit over the whole period.
pub fn digit_frequencies(period: &DigitPeriod) -> FrequencyTable {
    FrequencyTable::from_digits(period.base, TableVariant::Plain, &period.digits)
}

/// Split the counts into odd positions (j = 1, 3, ...) and even positions.
/// The period length must be even; the two tables sum to the plain table.
pub fn parity_split_frequencies(
    period: &DigitPeriod,
) -> Result<(FrequencyTable, FrequencyTable)> {
    if period.digits.len() % 2 != 0 {
        return Err(Error::OddPeriodLength {
            len: period.digits.len(),
        });
    }
    // digits[0] is position j = 1, which is odd.
    let odd: Vec<u8> = period.digits.iter().copied().step_by(2).collect();
    let even: Vec<u8> = period.digits.iter().copied().skip(1).step_by(2).collect();
    Ok((
        FrequencyTable::from_digits(period.base, TableVariant::OddPositions, &odd),
        FrequencyTable::from_digits(period.base, TableVariant::EvenPositions, &even),
    ))
}

/// Smallest primitive root mod p.
pub fn smallest_primitive_root(p: u64) -> u64 {
    let factors = factorize(p - 1);
    'outer: for g in 2..p {
        for &(f, _) in &factors {
            if mod_pow(g, (p - 1) / f, p) == 1 {
                continue 'outer;
            }
        }
        return g;
    }
    unreachable!("every prime has a primitive root")
}

/// One representative per coset of <b> inside the group H of nonzero squares
/// mod p, for p = 3 mod 4 and b a residue: the even powers g^(2l) of the
/// smallest primitive root g, sorted ascending. Exactly (p-1)/(2q) values.
pub fn coset_representatives(p: u64, base: u64) -> Result<Vec<u64>> {
    let profile = PrimeProfile::new(p, base)?;
    if p % 4 != 3 {
        return Err(Error::NotApplicable {
            p,
            reason: "coset construction needs p = 3 mod 4".into(),
        });
    }
    if !profile.base_is_qr {
        return Err(Error::BaseNotResidue { base, p });
    }
    let q = profile.order_of_base;
    debug_assert_eq!((p - 1) / 2 % q, 0, "a residue's order divides (p-1)/2");
    let count = (p - 1) / (2 * q);
    let g = smallest_primitive_root(p);
    let g2 = mod_pow(g, 2, p);
    let mut reps = Vec::with_capacity(count as usize);
    let mut x = 1u64;
    for _ in 0..count {
        reps.push(x);
        x = (x as u128 * g2 as u128 % p as u128) as u64;
    }
    reps.sort_unstable();
    Ok(reps)
}

/// Digit frequencies summed over the periods of b_l/p for one representative
/// b_l per coset. The result does not depend on the representative choice.
pub fn aggregate_frequencies(p: u64, base: u64) -> Result<FrequencyTable> {
    let reps = coset_representatives(p, base)?;
    let mut counts = vec![0u64; base as usize];
    for &m in &reps {
        let period = period_digits(m, p, base)?;
        for &d in &period.digits {
            counts[d as usize] += 1;
        }
    }
    Ok(FrequencyTable {
        base,
        variant: TableVariant::Aggregated,
        counts,
    })
}

/// Orbit-marking alternative to `coset_representatives`: the smallest member
/// of each coset, found by enumerating H once and walking orbits under
/// multiplication by b. Used to witness representative independence.
pub fn smallest_member_representatives(p: u64, base: u64) -> Result<Vec<u64>> {
    let profile = PrimeProfile::new(p, base)?;
    if p % 4 != 3 {
        return Err(Error::NotApplicable {
            p,
            reason: "coset construction needs p = 3 mod 4".into(),
        });
    }
    if !profile.base_is_qr {
        return Err(Error::BaseNotResidue { base, p });
    }
    let qr = qr_table(p);
    let mut seen = vec![false; p as usize];
    let mut reps = Vec::new();
    for l in 1..p {
        if qr[l as usize] && !seen[l as usize] {
            reps.push(l);
            let mut x = l;
            loop {
                seen[x as usize] = true;
                x = (x as u128 * base as u128 % p as u128) as u64;
                if x == l {
                    break;
                }
            }
        }
    }
    Ok(reps)
}
