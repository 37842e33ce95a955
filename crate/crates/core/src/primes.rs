//! Prime sieving, trial-division primality and factorization.
//!
//! Everything here targets the scanning range (p up to a few million), where
//! trial division up to sqrt(n) and a plain Eratosthenes sieve are exact and
//! fast enough.

/// Integer square root by Newton iteration, pure integer arithmetic.
pub fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    // seed with a power of two >= sqrt(n); Newton then descends to the floor
    let bits = 64 - n.leading_zeros();
    let mut x = 1u64 << bits.div_ceil(2);
    loop {
        let y = (x + n / x) / 2;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// Deterministic primality by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    if n % 3 == 0 {
        return n == 3;
    }
    let mut d = 5;
    while d * d <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// All primes `<= limit`, ascending.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Primes in the half-open interval `[lo, hi)`, ascending.
pub fn primes_in_range(lo: u64, hi: u64) -> Vec<u64> {
    if hi <= lo {
        return Vec::new();
    }
    primes_up_to(hi.saturating_sub(1))
        .into_iter()
        .filter(|&p| p >= lo)
        .collect()
}

/// Prime factorization `(prime, multiplicity)` by trial division, ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut push = |p: u64, e: u32| {
        if e > 0 {
            out.push((p, e));
        }
    };
    let mut e = 0;
    while n % 2 == 0 {
        n /= 2;
        e += 1;
    }
    push(2, e);
    let mut d = 3;
    while d * d <= n {
        let mut e = 0;
        while n % d == 0 {
            n /= d;
            e += 1;
        }
        push(d, e);
        d += 2;
    }
    if n > 1 {
        push(n, 1);
    }
    out
}

/// True when no square > 1 divides `n`.
pub fn is_squarefree(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    factorize(n).iter().all(|&(_, e)| e == 1)
}
