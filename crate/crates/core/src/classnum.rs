//! Class numbers h(D) of imaginary quadratic fields by two independent
//! algorithms: counting reduced binary quadratic forms, and the finite
//! character-sum formula h = (sum of Kronecker symbols) / (2 - chi(2)).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modular::kronecker_symbol;
use crate::primes::{is_squarefree, isqrt};

/// Which algorithm produced a class number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Forms,
    Dirichlet,
}

/// Class number of an imaginary quadratic field Q(sqrt(-n)).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassNumberResult {
    /// Squarefree n > 0 defining Q(sqrt(-n)).
    pub n: u64,
    /// Fundamental discriminant of the field.
    pub discriminant: i64,
    pub h: u64,
    pub method: Method,
}

/// Fundamental discriminant of Q(sqrt(-n)) for squarefree n >= 1:
/// -n when n = 3 mod 4, otherwise -4n.
pub fn fundamental_discriminant_neg(n: u64) -> Result<i64> {
    if !is_squarefree(n) {
        return Err(Error::NotSquarefree { n });
    }
    Ok(if n % 4 == 3 { -(n as i64) } else { -4 * n as i64 })
}

/// True for negative fundamental discriminants: D = 1 mod 4 squarefree, or
/// D = 4m with m = 2 or 3 mod 4 squarefree.
pub fn is_fundamental(d: i64) -> bool {
    if d >= 0 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => is_squarefree((-d) as u64),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && is_squarefree((-m) as u64)
        }
        _ => false,
    }
}

/// Class number by enumerating reduced primitive forms (a, b, c) with
/// b^2 - 4ac = D, |b| <= a <= c, gcd(a, b, c) = 1, and b >= 0 whenever
/// |b| = a or a = c. The bound a <= sqrt(|D|/3) keeps this O(|D|).
pub fn class_number_forms(d: i64) -> Result<u64> {
    if !is_fundamental(d) {
        return Err(Error::NotFundamental { d });
    }
    let abs_d = (-d) as u64;
    let parity = abs_d % 2;
    let a_max = isqrt(abs_d / 3);
    let mut count = 0u64;
    for a in 1..=a_max.max(1) {
        let a_i = a as i64;
        let mut b = -(a_i);
        // b = D mod 2
        if b.rem_euclid(2) != parity as i64 {
            b += 1;
        }
        while b <= a_i {
            let num = b * b - d;
            debug_assert!(num > 0);
            let num = num as u64;
            if num % (4 * a) == 0 {
                let c = num / (4 * a);
                if c >= a
                    && gcd3(a, b.unsigned_abs(), c) == 1
                    && !((b.unsigned_abs() == a || a == c) && b < 0)
                {
                    count += 1;
                }
            }
            b += 2;
        }
    }
    Ok(count)
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn gcd3(a: u64, b: u64, c: u64) -> u64 {
    gcd(gcd(a, b), c)
}

/// Class number by the finite character sum
/// h(D) = (sum over 0 < r < |D|/2 of (D|r)) / (2 - (D|2)) for D < -4,
/// in exact integers; the division must come out exact. h(-3) = h(-4) = 1
/// are fixed constants (extra units).
pub fn class_number_dirichlet(d: i64) -> Result<u64> {
    if !is_fundamental(d) {
        return Err(Error::NotFundamental { d });
    }
    if d == -3 || d == -4 {
        return Ok(1);
    }
    let abs_d = (-d) as u64;
    let mut sum = 0i64;
    for r in 1..=(abs_d - 1) / 2 {
        sum += kronecker_symbol(d, r)? as i64;
    }
    let den = 2 - kronecker_symbol(d, 2)? as i64;
    if sum <= 0 || sum % den != 0 {
        return Err(Error::InexactClassNumber { d, sum, den });
    }
    Ok((sum / den) as u64)
}

/// Class number of Q(sqrt(-n)) for squarefree n, by the chosen method.
pub fn field_class_number(n: u64, method: Method) -> Result<ClassNumberResult> {
    let discriminant = fundamental_discriminant_neg(n)?;
    let h = match method {
        Method::Forms => class_number_forms(discriminant)?,
        Method::Dirichlet => class_number_dirichlet(discriminant)?,
    };
    Ok(ClassNumberResult {
        n,
        discriminant,
        h,
        method,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discriminant_normalization() {
        assert_eq!(fundamental_discriminant_neg(67).unwrap(), -67);
        assert_eq!(fundamental_discriminant_neg(335).unwrap(), -335);
        assert_eq!(fundamental_discriminant_neg(46).unwrap(), -184);
        assert_eq!(fundamental_discriminant_neg(1).unwrap(), -4);
        assert_eq!(fundamental_discriminant_neg(2).unwrap(), -8);
        assert_eq!(fundamental_discriminant_neg(3).unwrap(), -3);
        assert_eq!(
            fundamental_discriminant_neg(12),
            Err(Error::NotSquarefree { n: 12 })
        );
    }

    #[test]
    fn fundamental_predicate() {
        for d in [-3i64, -4, -7, -8, -11, -67, -155, -184, -235, -335, -395] {
            assert!(is_fundamental(d), "d={d}");
        }
        for d in [-9i64, -12, -16, -25, -27, -45, -48, -100, 5, 0, -1, -2] {
            assert!(!is_fundamental(d), "d={d}");
        }
    }

    #[test]
    fn forms_paper_values() {
        assert_eq!(class_number_forms(-67).unwrap(), 1);
        assert_eq!(class_number_forms(-335).unwrap(), 18);
        assert_eq!(class_number_forms(-235).unwrap(), 2);
    }

    #[test]
    fn forms_classical_small_values() {
        for d in [-3i64, -4, -7, -8, -11] {
            assert_eq!(class_number_forms(d).unwrap(), 1, "d={d}");
        }
        assert_eq!(class_number_forms(-23).unwrap(), 3);
        assert_eq!(class_number_forms(-31).unwrap(), 3);
        assert_eq!(class_number_forms(-155).unwrap(), 4);
        assert_eq!(class_number_forms(-184).unwrap(), 4);
    }

    #[test]
    fn forms_rejects_non_fundamental() {
        assert_eq!(class_number_forms(-12), Err(Error::NotFundamental { d: -12 }));
        assert_eq!(class_number_forms(-27), Err(Error::NotFundamental { d: -27 }));
    }

    #[test]
    fn dirichlet_paper_values() {
        assert_eq!(class_number_dirichlet(-79).unwrap(), 5);
        assert_eq!(class_number_dirichlet(-395).unwrap(), 8);
        assert_eq!(class_number_dirichlet(-47).unwrap(), 5);
    }

    #[test]
    fn methods_agree_up_to_3000() {
        for d in (-3000..=-3i64).filter(|&d| is_fundamental(d)) {
            assert_eq!(
                class_number_forms(d).unwrap(),
                class_number_dirichlet(d).unwrap(),
                "d={d}"
            );
        }
    }

    #[test]
    fn field_wrapper() {
        let r = field_class_number(335, Method::Forms).unwrap();
        assert_eq!(
            r,
            ClassNumberResult {
                n: 335,
                discriminant: -335,
                h: 18,
                method: Method::Forms
            }
        );
        let r2 = field_class_number(46, Method::Dirichlet).unwrap();
        assert_eq!(r2.discriminant, -184);
        assert_eq!(r2.h, 4);
    }

    #[test]
    fn h_is_odd_for_p_3mod4() {
        for p in crate::primes::primes_in_range(7, 3000) {
            if p % 4 != 3 {
                continue;
            }
            let h = class_number_forms(-(p as i64)).unwrap();
            assert_eq!(h % 2, 1, "h(-{p}) must be odd");
        }
    }
}
