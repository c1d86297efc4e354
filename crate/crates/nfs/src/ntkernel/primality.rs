//! Primality testing: BPSW below 2^64 (deterministic, no known
//! counterexamples), Miller-Rabin with 64 random bases above.

use num_bigint::{BigInt, BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{gcd_u64, mulmod_u64, powmod_u64};

const SMALL_PRIMES: [u64; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

/// True iff n is prime. Deterministic for n < 2^64 (BPSW), probabilistic
/// with error < 2^-100 above (64 Miller-Rabin rounds on random bases).
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(w) = to_u64(n) {
        return is_prime_u64(w);
    }
    for &p in &SMALL_PRIMES {
        if (n % p).is_zero() {
            return false;
        }
    }
    miller_rabin_rounds(n, 64)
}

fn to_u64(n: &BigUint) -> Option<u64> {
    let digits = n.to_u64_digits();
    match digits.len() {
        0 => Some(0),
        1 => Some(digits[0]),
        _ => None,
    }
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL_PRIMES {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    mr_u64(n, 2) && strong_lucas_u64(n)
}

fn mr_u64(n: u64, base: u64) -> bool {
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    let mut x = powmod_u64(base % n, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mulmod_u64(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

/// Strong Lucas test with Selfridge's method A for choosing D.
fn strong_lucas_u64(n: u64) -> bool {
    // Perfect squares defeat the D search; rule them out first.
    let r = (n as f64).sqrt() as u64;
    for c in r.saturating_sub(2)..=r + 2 {
        if (c as u128) * (c as u128) == n as u128 {
            return false;
        }
    }
    let mut d: i64 = 5;
    loop {
        let g = gcd_u64(d.unsigned_abs(), n);
        if g > 1 && g < n {
            return false;
        }
        if jacobi_i64(d, n) == -1 {
            break;
        }
        d = if d > 0 { -(d + 2) } else { -(d - 2) };
    }
    // P = 1, Q = (1 - D) / 4
    let q_i = (1 - d) / 4;
    let q = if q_i < 0 {
        n - (q_i.unsigned_abs() % n)
    } else {
        q_i as u64 % n
    };
    let mut delta = n + 1;
    let s = delta.trailing_zeros();
    delta >>= s;

    // Lucas sequence by binary ladder on (U, V, Q^k).
    // All sums go through u128: n may be close to 2^64.
    let addmod = |a: u64, b: u64| -> u64 { ((a as u128 + b as u128) % n as u128) as u64 };
    let submod = |a: u64, b: u64| -> u64 { ((a as u128 + n as u128 - b as u128) % n as u128) as u64 };
    let (mut u, mut v, mut qk) = (1u64, 1u64, q);
    let half = |x: u64| -> u64 {
        if x & 1 == 0 {
            x >> 1
        } else {
            (((x as u128 + n as u128) >> 1) % n as u128) as u64
        }
    };
    let dd = if d < 0 {
        n - (d.unsigned_abs() % n)
    } else {
        d as u64 % n
    };
    let bits = 64 - delta.leading_zeros();
    for i in (0..bits - 1).rev() {
        // double
        u = mulmod_u64(u, v, n);
        v = submod(mulmod_u64(v, v, n), mulmod_u64(2, qk, n));
        qk = mulmod_u64(qk, qk, n);
        if (delta >> i) & 1 == 1 {
            // add one step: (U, V) <- ((U + V)/2, (D*U + V)/2)
            let nu = half(addmod(u, v));
            let nv = half(addmod(mulmod_u64(dd, u, n), v));
            u = nu;
            v = nv;
            qk = mulmod_u64(qk, q, n);
        }
    }
    if u == 0 || v == 0 {
        return true;
    }
    for _ in 0..s - 1 {
        v = submod(mulmod_u64(v, v, n), mulmod_u64(2, qk, n));
        qk = mulmod_u64(qk, qk, n);
        if v == 0 {
            return true;
        }
    }
    false
}

fn jacobi_i64(mut a: i64, n: u64) -> i32 {
    let mut n = n as i64;
    debug_assert!(n > 0 && n % 2 == 1);
    a %= n;
    if a < 0 {
        a += n;
    }
    let mut t = 1i32;
    let mut a = a as u64;
    let mut nn = n as u64;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let r = nn % 8;
            if r == 3 || r == 5 {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut nn);
        if a % 4 == 3 && nn % 4 == 3 {
            t = -t;
        }
        a %= nn;
    }
    if nn == 1 {
        t
    } else {
        0
    }
}

fn miller_rabin_rounds(n: &BigUint, rounds: usize) -> bool {
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let mut rng = rand::thread_rng();
    'outer: for _ in 0..rounds {
        let a = rng.gen_biguint_range(&two, &n_minus_1);
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Next prime >= n.
pub fn next_prime(n: &BigUint) -> BigUint {
    let mut c = if n <= &BigUint::from(2u32) {
        return BigUint::from(2u32);
    } else if n.is_even() {
        n + BigUint::one()
    } else {
        n.clone()
    };
    while !is_prime(&c) {
        c += BigUint::from(2u32);
    }
    c
}

/// Next safe prime p >= n (both p and (p-1)/2 prime).
pub fn next_safe_prime(n: &BigUint) -> BigUint {
    let mut p = next_prime(n);
    loop {
        let h: BigUint = (&p - BigUint::one()) >> 1;
        if is_prime(&h) {
            return p;
        }
        p = next_prime(&(p + BigUint::from(2u32)));
    }
}

#[allow(dead_code)]
fn is_prime_i(n: &BigInt) -> bool {
    match n.to_biguint() {
        Some(u) => is_prime(&u),
        None => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    #[test]
    fn small_cases() {
        assert!(is_prime(&BigUint::from(97u32)));
        assert!(!is_prime(&BigUint::from(91u32))); // 7 * 13
        assert!(!is_prime(&BigUint::from(1u32)));
        assert!(!is_prime(&BigUint::from(0u32)));
        assert!(is_prime(&BigUint::from(2u32)));
    }

    #[test]
    fn u64_against_sieve() {
        let primes = super::super::primes_up_to(10_000);
        let mut i = 0;
        for n in 0..10_000u64 {
            let expect = i < primes.len() && primes[i] == n;
            assert_eq!(is_prime_u64(n), expect, "n = {n}");
            if expect {
                i += 1;
            }
        }
    }

    #[test]
    fn strong_pseudoprimes_base2_rejected() {
        // Base-2 strong pseudoprimes caught by the Lucas half of BPSW.
        for n in [2047u64, 3277, 4033, 4681, 8321, 15841, 29341, 42799] {
            assert!(!is_prime_u64(n), "n = {n}");
        }
    }

    #[test]
    fn large_known_primes() {
        // 2^89 - 1 is a Mersenne prime; 2^67 - 1 is composite.
        let m89 = (BigUint::one() << 89) - BigUint::one();
        assert!(is_prime(&m89));
        let m67 = (BigUint::one() << 67) - BigUint::one();
        assert!(!is_prime(&m67));
    }

    #[test]
    fn safe_prime_search() {
        let p = next_safe_prime(&BigUint::from(1000u32));
        assert_eq!(p, BigUint::from(1019u32));
        let h: BigUint = (&p - BigUint::one()) >> 1;
        assert!(is_prime(&h));
    }

    #[test]
    fn dlp240_modulus_is_safe_prime() {
        let p = BigUint::from_str(crate::published::DLP240_P).unwrap();
        assert!(is_prime(&p));
        let h: BigUint = (&p - BigUint::one()) >> 1;
        assert!(is_prime(&h));
    }
}
