//! Polynomial root finding modulo primes and prime powers.
//!
//! Factor-base construction calls the machine-word path millions of times;
//! the big-integer path serves polynomial selection and the descent, where
//! the modulus exceeds 64 bits.

use num_bigint::{BigInt, BigUint, RandBigInt};
use num_traits::{One, Zero};
use rand::Rng;

use super::poly::{
    poly_gcd_u64, poly_mod_normalize, poly_mulmod_u64, poly_powmod_u64, poly_rem_u64, poly_sub_u64,
};
use super::{invmod_u64, mulmod_u64, powmod_u64, PolyZ};

/// Roots of f modulo a prime, plus the projective flag (p divides lc f).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootsModP {
    pub roots: Vec<BigUint>,
    pub projective: bool,
}

/// All r in [0, p) with f(r) = 0 mod p, p prime < 2^63. Sorted.
pub fn poly_roots_mod_u64(f: &PolyZ, p: u64) -> (Vec<u64>, bool) {
    let fp = f.mod_u64(p);
    let projective = f.coeffs.len() != fp.len() && !f.is_zero();
    (roots_of_reduced(&fp, p), projective)
}

fn roots_of_reduced(fp: &[u64], p: u64) -> Vec<u64> {
    if fp.is_empty() {
        // Zero polynomial mod p: every residue is a root; callers never want
        // that blowup, return empty.
        return Vec::new();
    }
    if fp.len() == 1 {
        return Vec::new();
    }
    if p <= 41 {
        let mut out: Vec<u64> = (0..p).filter(|&x| eval_u64(fp, x, p) == 0).collect();
        out.sort_unstable();
        return out;
    }
    if fp.len() == 2 {
        // c1 x + c0 = 0
        let inv = invmod_u64(fp[1], p).unwrap();
        return vec![mulmod_u64(p - fp[0] % p, inv, p) % p];
    }
    // g = gcd(x^p - x, f): product of the linear factors.
    let xp = poly_powmod_u64(&[0, 1], p, fp, p);
    let xp_minus_x = poly_sub_u64(&xp, &[0, 1], p);
    let mut g = poly_gcd_u64(&xp_minus_x, fp, p);
    poly_mod_normalize(&mut g);
    let mut roots = Vec::new();
    split_linear(&g, p, &mut roots);
    roots.sort_unstable();
    roots.dedup();
    roots
}

/// Equal-degree splitting of a product of distinct linear factors.
fn split_linear(g: &[u64], p: u64, out: &mut Vec<u64>) {
    if g.len() <= 1 {
        return;
    }
    if g.len() == 2 {
        let inv = invmod_u64(g[1], p).unwrap();
        out.push(mulmod_u64(p - g[0] % p, inv, p) % p);
        return;
    }
    if g[0] == 0 {
        out.push(0);
        let mut h = g[1..].to_vec();
        poly_mod_normalize(&mut h);
        split_linear(&h, p, out);
        return;
    }
    let mut rng = rand::thread_rng();
    loop {
        let a = rng.gen_range(0..p);
        // h = gcd((x + a)^((p-1)/2) - 1, g)
        let base = vec![a, 1];
        let pw = poly_powmod_u64(&base, (p - 1) / 2, g, p);
        let mut shifted = pw.clone();
        if shifted.is_empty() {
            shifted = vec![p - 1];
        } else {
            shifted[0] = (shifted[0] + p - 1) % p;
        }
        poly_mod_normalize(&mut shifted);
        let h = poly_gcd_u64(&shifted, g, p);
        if h.len() > 1 && h.len() < g.len() {
            let q = poly_divexact_u64(g, &h, p);
            split_linear(&h, p, out);
            split_linear(&q, p, out);
            return;
        }
    }
}

fn poly_divexact_u64(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let inv = invmod_u64(b[db], p).unwrap();
    let mut r = a.to_vec();
    let mut q = vec![0u64; a.len() - b.len() + 1];
    while r.len() > db {
        let dr = r.len() - 1;
        let c = mulmod_u64(*r.last().unwrap(), inv, p);
        q[dr - db] = c;
        if c != 0 {
            for i in 0..=db {
                let t = mulmod_u64(c, b[i], p);
                r[i + dr - db] = (r[i + dr - db] + p - t) % p;
            }
        }
        r.pop();
        poly_mod_normalize(&mut r);
        if r.len() <= db {
            break;
        }
    }
    q
}

#[inline]
fn eval_u64(f: &[u64], x: u64, p: u64) -> u64 {
    let mut acc = 0u64;
    for &c in f.iter().rev() {
        acc = (mulmod_u64(acc, x, p) + c) % p;
    }
    acc
}

/// All roots of f modulo an arbitrary prime p (Cantor-Zassenhaus on the
/// degree-one part). Falls back to the word-size path when possible.
pub fn poly_roots_mod_p(f: &PolyZ, p: &BigUint) -> RootsModP {
    if let Some(pw) = to_u64(p) {
        let (roots, projective) = poly_roots_mod_u64(f, pw);
        return RootsModP {
            roots: roots.into_iter().map(BigUint::from).collect(),
            projective,
        };
    }
    let fp = reduce_big(f, p);
    let projective = fp.len() != f.coeffs.len() && !f.is_zero();
    let roots = roots_big(&fp, p);
    RootsModP { roots, projective }
}

fn to_u64(n: &BigUint) -> Option<u64> {
    let d = n.to_u64_digits();
    match d.len() {
        0 => Some(0),
        1 => Some(d[0]),
        _ => None,
    }
}

fn reduce_big(f: &PolyZ, p: &BigUint) -> Vec<BigUint> {
    let mut v: Vec<BigUint> = f.coeffs.iter().map(|c| super::mod_signed(c, p)).collect();
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn roots_big(fp: &[BigUint], p: &BigUint) -> Vec<BigUint> {
    if fp.len() <= 1 {
        return Vec::new();
    }
    if fp.len() == 2 {
        let inv = super::modinv(&fp[1], p).unwrap();
        let neg = (p - &fp[0] % p) % p;
        return vec![(neg * inv) % p];
    }
    let x = vec![BigUint::zero(), BigUint::one()];
    let xp = big_powmod(&x, p, fp, p);
    let xp_minus_x = big_sub(&xp, &x, p);
    let g = big_gcd(&xp_minus_x, fp, p);
    let mut out = Vec::new();
    big_split_linear(&g, p, &mut out);
    out.sort();
    out.dedup();
    out
}

fn big_split_linear(g: &[BigUint], p: &BigUint, out: &mut Vec<BigUint>) {
    if g.len() <= 1 {
        return;
    }
    if g.len() == 2 {
        let inv = super::modinv(&g[1], p).unwrap();
        let neg = (p - &g[0] % p) % p;
        out.push((neg * inv) % p);
        return;
    }
    if g[0].is_zero() {
        out.push(BigUint::zero());
        let mut h = g[1..].to_vec();
        while h.last().map_or(false, |c| c.is_zero()) {
            h.pop();
        }
        big_split_linear(&h, p, out);
        return;
    }
    let mut rng = rand::thread_rng();
    let e: BigUint = (p - BigUint::one()) >> 1;
    loop {
        let a = rng.gen_biguint_below(p);
        let base = vec![a, BigUint::one()];
        let pw = big_powmod_exp(&base, &e, g, p);
        let mut shifted = pw;
        if shifted.is_empty() {
            shifted = vec![p - BigUint::one()];
        } else {
            shifted[0] = (&shifted[0] + p - BigUint::one()) % p;
        }
        while shifted.last().map_or(false, |c| c.is_zero()) {
            shifted.pop();
        }
        let h = big_gcd(&shifted, g, p);
        if h.len() > 1 && h.len() < g.len() {
            let q = big_divexact(g, &h, p);
            big_split_linear(&h, p, out);
            big_split_linear(&q, p, out);
            return;
        }
    }
}

fn big_mul(a: &[BigUint], b: &[BigUint], p: &BigUint) -> Vec<BigUint> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (&out[i + j] + x * y) % p;
        }
    }
    while out.last().map_or(false, |c| c.is_zero()) {
        out.pop();
    }
    out
}

fn big_rem(a: &[BigUint], m: &[BigUint], p: &BigUint) -> Vec<BigUint> {
    let dm = m.len() - 1;
    let inv = super::modinv(&m[dm], p).unwrap();
    let mut r = a.to_vec();
    while r.len() > dm {
        let dr = r.len() - 1;
        let top = (r.last().unwrap() * &inv) % p;
        if !top.is_zero() {
            for i in 0..=dm {
                let t = (&top * &m[i]) % p;
                let idx = i + dr - dm;
                r[idx] = (&r[idx] + p - t) % p;
            }
        }
        r.pop();
        while r.last().map_or(false, |c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

fn big_sub(a: &[BigUint], b: &[BigUint], p: &BigUint) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); a.len().max(b.len())];
    let z = BigUint::zero();
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).unwrap_or(&z);
        let y = b.get(i).unwrap_or(&z);
        *o = (x + p - y % p) % p;
    }
    while out.last().map_or(false, |c| c.is_zero()) {
        out.pop();
    }
    out
}

fn big_gcd(a: &[BigUint], b: &[BigUint], p: &BigUint) -> Vec<BigUint> {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    while !y.is_empty() {
        let r = big_rem(&x, &y, p);
        x = y;
        y = r;
    }
    if let Some(lc) = x.last().cloned() {
        let inv = super::modinv(&lc, p).unwrap();
        for c in &mut x {
            *c = (&*c * &inv) % p;
        }
    }
    x
}

fn big_divexact(a: &[BigUint], b: &[BigUint], p: &BigUint) -> Vec<BigUint> {
    let db = b.len() - 1;
    let inv = super::modinv(&b[db], p).unwrap();
    let mut r = a.to_vec();
    let mut q = vec![BigUint::zero(); a.len() - b.len() + 1];
    while r.len() > db {
        let dr = r.len() - 1;
        let c = (r.last().unwrap() * &inv) % p;
        q[dr - db] = c.clone();
        if !c.is_zero() {
            for i in 0..=db {
                let t = (&c * &b[i]) % p;
                r[i + dr - db] = (&r[i + dr - db] + p - t) % p;
            }
        }
        r.pop();
        while r.last().map_or(false, |c| c.is_zero()) {
            r.pop();
        }
    }
    q
}

fn big_powmod(base: &[BigUint], e: &BigUint, m: &[BigUint], p: &BigUint) -> Vec<BigUint> {
    big_powmod_exp(base, e, m, p)
}

fn big_powmod_exp(base: &[BigUint], e: &BigUint, m: &[BigUint], p: &BigUint) -> Vec<BigUint> {
    let mut result = vec![BigUint::one()];
    let mut b = big_rem(base, m, p);
    for i in 0..e.bits() {
        if e.bit(i) {
            result = big_rem(&big_mul(&result, &b, p), m, p);
        }
        b = big_rem(&big_mul(&b, &b, p), m, p);
    }
    result
}

/// Roots of f modulo p^k (k >= 1, p^k < 2^63), by Hensel lifting with
/// brute-force handling of singular roots.
pub fn prime_power_roots_u64(f: &PolyZ, p: u64, k: u32) -> Vec<u64> {
    let (mut roots, _) = poly_roots_mod_u64(f, p);
    let mut modulus = p;
    for _ in 1..k {
        let next = modulus * p;
        let mut lifted = Vec::new();
        for &r in &roots {
            let fr = eval_poly_mod(f, r, next);
            let fpr = eval_poly_mod(&f.derivative(), r, p);
            if fpr != 0 {
                // unique lift: r - f(r)/f'(r)
                let inv = invmod_u64(fpr, p).unwrap();
                let t = mulmod_u64(fr / modulus % p, inv, p);
                let lift = (r + (p - t) % p * modulus) % next;
                lifted.push(lift);
            } else if fr == 0 {
                // singular: every lift of r is a root mod next
                for j in 0..p {
                    lifted.push(r + j * modulus);
                }
            }
        }
        roots = lifted;
        modulus = next;
        if roots.is_empty() {
            break;
        }
    }
    roots.sort_unstable();
    roots.dedup();
    roots
}

fn eval_poly_mod(f: &PolyZ, x: u64, m: u64) -> u64 {
    let fm = f.mod_u64(m);
    eval_u64(&fm, x % m, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use std::str::FromStr;

    fn p(v: &[i64]) -> PolyZ {
        PolyZ::from_i64(v)
    }

    #[test]
    fn quadratic_roots() {
        let f = p(&[1, 0, 1]); // x^2 + 1
        let (r5, proj) = poly_roots_mod_u64(&f, 5);
        assert_eq!(r5, vec![2, 3]);
        assert!(!proj);
        let (r3, _) = poly_roots_mod_u64(&f, 3);
        assert!(r3.is_empty());
    }

    #[test]
    fn linear_root_formula() {
        // c1 x + c0 with p not dividing c1
        let f = p(&[7, 3]);
        for q in [5u64, 11, 101, 65537] {
            let (r, proj) = poly_roots_mod_u64(&f, q);
            assert!(!proj);
            assert_eq!(r.len(), 1);
            assert_eq!((3 * r[0] + 7) % q, 0);
        }
    }

    #[test]
    fn projective_flag() {
        let f = p(&[1, 2, 10]); // lc = 10
        let (_, proj5) = poly_roots_mod_u64(&f, 5);
        assert!(proj5);
        let (_, proj3) = poly_roots_mod_u64(&f, 3);
        assert!(!proj3);
    }

    #[test]
    fn exhaustive_check_many_primes() {
        let f = p(&[3, -4, 0, 2, 1]);
        for q in super::super::primes_up_to(200) {
            let (roots, _) = poly_roots_mod_u64(&f, q);
            let brute: Vec<u64> = (0..q)
                .filter(|&x| {
                    super::super::mod_signed(&f.eval(&BigInt::from(x)), &BigUint::from(q))
                        .is_zero()
                })
                .collect();
            assert_eq!(roots, brute, "p = {q}");
        }
    }

    #[test]
    fn big_prime_roots() {
        // roots of the published DLP-240 f1 modulo the DLP-240 prime must
        // include the common root of the pair.
        let pbig = BigUint::from_str(crate::published::DLP240_P).unwrap();
        let (f0, f1) = crate::published::dlp240_pair();
        let r1 = poly_roots_mod_p(&f1, &pbig);
        assert!(!r1.roots.is_empty());
        let common: Vec<&BigUint> =
            r1.roots.iter().filter(|r| f0.eval_mod(r, &pbig).is_zero()).collect();
        assert_eq!(common.len(), 1);
    }

    #[test]
    fn prime_powers() {
        // x^2 - 17 mod 2^k and simple squares mod p^k
        let f = p(&[-17, 0, 1]);
        let roots = prime_power_roots_u64(&f, 2, 3); // mod 8: x^2 = 1 mod 8 -> 1,3,5,7
        assert_eq!(roots, vec![1, 3, 5, 7]);
        let f2 = p(&[-1, 0, 1]); // x^2 - 1 mod 9: 1, 8
        assert_eq!(prime_power_roots_u64(&f2, 3, 2), vec![1, 8]);
        // nonsingular lifting: x^2 + 1 mod 25 -> 7, 18
        let f3 = p(&[1, 0, 1]);
        assert_eq!(prime_power_roots_u64(&f3, 5, 2), vec![7, 18]);
    }
}
