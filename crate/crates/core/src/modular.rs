//! Exact modular arithmetic: residues, Legendre/Kronecker symbols,
//! multiplicative orders, the digit function theta_b, and counts of quadratic
//! residues inside the intervals (kp/b, (k+1)p/b).
//!
//! All interval membership is decided by cross-multiplied integer
//! comparisons; there is no floating point anywhere in this module.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::primes::{factorize, is_prime};

/// Least nonnegative residue of `k` mod `p`.
pub fn residue(k: i64, p: u64) -> u64 {
    k.rem_euclid(p as i64) as u64
}

/// `base^exp mod m` with 128-bit intermediates.
pub fn mod_pow(base: u64, exp: u64, m: u64) -> u64 {
    debug_assert!(m > 0);
    let m128 = m as u128;
    let mut acc: u128 = 1 % m128;
    let mut b = (base % m) as u128;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        e >>= 1;
    }
    acc as u64
}

/// Jacobi symbol (a | m) for odd positive m and 0 <= a < m.
fn jacobi(mut a: u64, mut m: u64) -> i32 {
    debug_assert!(m % 2 == 1);
    let mut sign = 1i32;
    while a != 0 {
        let tz = a.trailing_zeros();
        a >>= tz;
        if tz % 2 == 1 && (m % 8 == 3 || m % 8 == 5) {
            sign = -sign;
        }
        if a % 4 == 3 && m % 4 == 3 {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut m);
        a %= m;
    }
    if m == 1 {
        sign
    } else {
        0
    }
}

/// Legendre symbol (a | p) for an odd prime p: +1 for a nonzero square,
/// -1 for a non-square, 0 when p | a.
///
/// Computed by quadratic reciprocity, not by Euler's criterion, so the two
/// routes stay independently checkable.
pub fn legendre_symbol(a: i64, p: u64) -> i32 {
    debug_assert!(p > 2 && p % 2 == 1);
    jacobi(residue(a, p), p)
}

/// Kronecker symbol (d | n) for a discriminant d (d = 0 or 1 mod 4) and
/// positive n. Completely multiplicative in n; equals the Legendre symbol
/// (d | q) at odd primes q not dividing d.
pub fn kronecker_symbol(d: i64, n: u64) -> Result<i32> {
    let dm4 = d.rem_euclid(4);
    if dm4 != 0 && dm4 != 1 {
        return Err(Error::InvalidDiscriminant { d });
    }
    debug_assert!(n >= 1);
    let two_part = match d.rem_euclid(8) {
        1 | 7 => 1,
        3 | 5 => -1,
        _ => 0, // even d
    };
    let mut m = n;
    let mut sign = 1i32;
    while m % 2 == 0 {
        if two_part == 0 {
            return Ok(0);
        }
        sign *= two_part;
        m /= 2;
    }
    Ok(sign * jacobi(d.rem_euclid(m as i64) as u64, m))
}

fn order_from_factors(b: u64, p: u64, factors: &[(u64, u32)]) -> u64 {
    let mut q = p - 1;
    for &(f, _) in factors {
        while q % f == 0 && mod_pow(b, q / f, p) == 1 {
            q /= f;
        }
    }
    debug_assert_eq!(mod_pow(b, q, p), 1);
    q
}

/// Smallest q >= 1 with b^q = 1 mod p, for an odd prime p not dividing b.
///
/// p - 1 is factored by trial division and the order found by dividing prime
/// factors out of p - 1, so scans over many primes avoid naive iteration.
pub fn multiplicative_order(b: u64, p: u64) -> Result<u64> {
    if b % p == 0 {
        return Err(Error::BaseDivisible { base: b, p });
    }
    let factors = factorize(p - 1);
    Ok(order_from_factors(b % p, p, &factors))
}

/// The digit function theta_b(k) = (b*(k)_p - (bk)_p) / p, a digit in
/// {0, ..., b-1}. The numerator is divisible by p by construction.
pub fn theta(b: u64, p: u64, k: i64) -> Result<u64> {
    if b % p == 0 {
        return Err(Error::BaseDivisible { base: b, p });
    }
    let r = residue(k, p);
    let br = b.checked_mul(r).expect("b * (k)_p overflows u64");
    let numerator = br - br % p;
    debug_assert_eq!(numerator % p, 0);
    let digit = numerator / p;
    debug_assert!(digit < b);
    Ok(digit)
}

/// Boolean table of nonzero quadratic residues mod p (index l, 1 <= l < p).
pub fn qr_table(p: u64) -> Vec<bool> {
    let mut t = vec![false; p as usize];
    for x in 1..=(p - 1) / 2 {
        t[(x as u128 * x as u128 % p as u128) as usize] = true;
    }
    t
}

/// A prime together with its classification data for a fixed base.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeProfile {
    pub p: u64,
    pub residue_mod8: u8,
    pub base: u64,
    pub order_of_base: u64,
    pub base_is_qr: bool,
}

impl PrimeProfile {
    /// Profile an odd prime p > 3 with respect to a base b >= 2, p not
    /// dividing b. The quadratic character of the base is computed both by
    /// Euler's criterion and by the Legendre symbol; the two must agree.
    pub fn new(p: u64, base: u64) -> Result<Self> {
        if p <= 3 || !is_prime(p) {
            return Err(Error::NotAnOddPrime { p, min: 3 });
        }
        if base % p == 0 {
            return Err(Error::BaseDivisible { base, p });
        }
        let order_of_base = multiplicative_order(base, p)?;
        let euler = mod_pow(base, (p - 1) / 2, p);
        let base_is_qr = euler == 1;
        debug_assert_eq!(
            legendre_symbol(base as i64, p),
            if base_is_qr { 1 } else { -1 },
            "Legendre symbol disagrees with Euler's criterion at p={p}, b={base}"
        );
        Ok(PrimeProfile {
            p,
            residue_mod8: (p % 8) as u8,
            base,
            order_of_base,
            base_is_qr,
        })
    }

    /// True when the base has the half-order (p-1)/2.
    pub fn has_half_order(&self) -> bool {
        self.order_of_base == (self.p - 1) / 2
    }

    /// True when the base is a primitive root mod p.
    pub fn is_primitive_root(&self) -> bool {
        self.order_of_base == self.p - 1
    }
}

/// Exact counts of quadratic residues, non-residues and lattice points in
/// each open interval (kp/b, (k+1)p/b), k = 0, ..., b-1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueIntervalCounts {
    pub p: u64,
    pub base: u64,
    pub q_counts: Vec<u64>,
    pub n_counts: Vec<u64>,
    pub lattice_counts: Vec<u64>,
}

/// Count residues and non-residues in the b open intervals (kp/b, (k+1)p/b).
///
/// Membership l in (kp/b, (k+1)p/b) is decided by kp < bl < (k+1)p, i.e.
/// k = floor(bl/p); no lattice point in {1, ..., p-1} ever sits on an
/// endpoint because gcd(b, p) = 1. The lattice counts equal the floor
/// difference floor((k+1)p/b) - floor(kp/b) for k < b-1; at k = b-1 the
/// floor difference would also count p itself, which the open interval
/// excludes.
pub fn residue_interval_counts(p: u64, base: u64) -> Result<ResidueIntervalCounts> {
    if p <= base {
        return Err(Error::PrimeTooSmall { p, base });
    }
    if !is_prime(p) || p < 3 {
        return Err(Error::NotAnOddPrime { p, min: 2 });
    }
    let qr = qr_table(p);
    let b = base as usize;
    let mut q_counts = vec![0u64; b];
    let mut n_counts = vec![0u64; b];
    for l in 1..p {
        let k = (base * l / p) as usize;
        debug_assert!(base * l != k as u64 * p, "boundary hit at l={l}");
        if qr[l as usize] {
            q_counts[k] += 1;
        } else {
            n_counts[k] += 1;
        }
    }
    // integers strictly inside (kp/b, (k+1)p/b)
    let lattice_counts: Vec<u64> = (0..base)
        .map(|k| ((k + 1) * p - 1) / base - k * p / base)
        .collect();
    for k in 0..b {
        debug_assert_eq!(q_counts[k] + n_counts[k], lattice_counts[k], "k={k}");
    }
    Ok(ResidueIntervalCounts {
        p,
        base,
        q_counts,
        n_counts,
        lattice_counts,
    })
}
