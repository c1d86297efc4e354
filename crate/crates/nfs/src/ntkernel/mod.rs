//! Arbitrary-precision integer, modular and polynomial arithmetic, plus
//! small-factor extraction. Everything else in the crate builds on this.
//!
//! Big integers are `num_bigint::{BigInt, BigUint}`; this module adds the
//! number-theoretic layer: deterministic-below-2^64 primality, polynomial
//! resultants and root finding, two-dimensional lattice reduction and the
//! ECM-chain factoring used by cofactorization and smoothing.

mod ecm;
mod lattice;
mod poly;
mod primality;
mod roots;

pub use ecm::{factor_small, pollard_rho, EcmChain, EcmStage, StageMethod};
pub use lattice::{gauss_reduce, lll_reduce, Vec2};
pub use poly::{resultant, PolyZ};
pub use primality::is_prime;
pub use roots::{poly_roots_mod_p, poly_roots_mod_u64, prime_power_roots_u64, RootsModP};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// base^exponent mod modulus, for modulus >= 2.
pub fn modexp(base: &BigUint, exponent: &BigUint, modulus: &BigUint) -> Result<BigUint> {
    if modulus < &BigUint::from(2u32) {
        return Err(Error::domain("modexp: modulus must be >= 2"));
    }
    Ok(base.modpow(exponent, modulus))
}

/// Modular inverse of `a` mod `m` (m >= 2, gcd(a, m) = 1).
pub fn modinv(a: &BigUint, m: &BigUint) -> Result<BigUint> {
    let a = BigInt::from(a.clone());
    let m = BigInt::from(m.clone());
    let e = a.extended_gcd(&m);
    if !e.gcd.is_one() {
        return Err(Error::domain("modinv: arguments not coprime"));
    }
    let mut x = e.x % &m;
    if x.sign() == num_bigint::Sign::Minus {
        x += &m;
    }
    Ok(x.to_biguint().unwrap())
}

/// Signed residue reduced into [0, m).
pub fn mod_signed(a: &BigInt, m: &BigUint) -> BigUint {
    let m_int = BigInt::from(m.clone());
    let mut r = a % &m_int;
    if r.sign() == num_bigint::Sign::Minus {
        r += &m_int;
    }
    r.to_biguint().unwrap()
}

/// Eratosthenes sieve: all primes <= bound.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::with_capacity((n as f64 / (n as f64).ln().max(2.0) * 1.2) as usize);
    for p in 2..=n {
        if !composite[p] {
            primes.push(p as u64);
            let mut k = p * p;
            while k <= n {
                composite[k] = true;
                k += p;
            }
        }
    }
    primes
}

/// (a * b) mod m without overflow.
#[inline]
pub fn mulmod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// a^e mod m on machine words.
pub fn powmod_u64(mut a: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut r = 1u64;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod_u64(r, a, m);
        }
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    r
}

#[inline]
pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Modular inverse on machine words (m >= 2, gcd(a, m) = 1).
pub fn invmod_u64(a: u64, m: u64) -> Option<u64> {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (m as i128, (a % m) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    if t < 0 {
        t += m as i128;
    }
    Some(t as u64)
}

/// Legendre symbol (a/p) for odd prime p; returns -1, 0 or 1.
pub fn legendre(a: &BigInt, p: &BigUint) -> i32 {
    let a = mod_signed(a, p);
    if a.is_zero() {
        return 0;
    }
    let e = (p - BigUint::one()) >> 1;
    let r = a.modpow(&e, p);
    if r.is_one() {
        1
    } else {
        -1
    }
}

/// Integer square root check: returns Some(sqrt) iff n is a perfect square.
pub fn exact_sqrt(n: &BigUint) -> Option<BigUint> {
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn modexp_basic() {
        let r = modexp(
            &BigUint::from(2u32),
            &BigUint::from(10u32),
            &BigUint::from(1000u32),
        )
        .unwrap();
        assert_eq!(r, BigUint::from(24u32));
        let r = modexp(
            &BigUint::from(5u32),
            &BigUint::from(0u32),
            &BigUint::from(7u32),
        )
        .unwrap();
        assert_eq!(r, BigUint::one());
        assert!(modexp(&BigUint::from(5u32), &BigUint::one(), &BigUint::one()).is_err());
    }

    #[test]
    fn modexp_is_multiplicative_in_exponent() {
        use num_bigint::RandBigInt;
        let mut rng = rand::thread_rng();
        for _ in 0..50 {
            let m = rng.gen_biguint(64) + BigUint::from(2u32);
            let g = rng.gen_biguint(64) % &m;
            let a = rng.gen_biguint(32);
            let b = rng.gen_biguint(32);
            let lhs = modexp(&g, &(&a + &b), &m).unwrap();
            let rhs = (modexp(&g, &a, &m).unwrap() * modexp(&g, &b, &m).unwrap()) % &m;
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn primes_small() {
        assert_eq!(primes_up_to(10), vec![2, 3, 5, 7]);
        assert_eq!(primes_up_to(1), Vec::<u64>::new());
        assert_eq!(primes_up_to(2), vec![2]);
        assert_eq!(primes_up_to(100_000).len(), 9592);
    }

    #[test]
    fn u64_helpers() {
        assert_eq!(powmod_u64(2, 10, 1000), 24);
        assert_eq!(invmod_u64(3, 7), Some(5));
        assert_eq!(invmod_u64(2, 4), None);
        assert_eq!(gcd_u64(12, 18), 6);
    }

    #[test]
    fn legendre_squares() {
        let p = BigUint::from(23u32);
        for a in 1u32..23 {
            let sq = BigInt::from((a * a) % 23);
            assert_eq!(legendre(&sq, &p), 1);
        }
    }
}
