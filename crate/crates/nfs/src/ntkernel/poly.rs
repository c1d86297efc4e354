//! Dense integer polynomials: norms, resultants, real-root counting.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{invmod_u64, mulmod_u64, primes_up_to};
use crate::{Error, Result};

/// A polynomial over Z, dense, low coefficient first. The leading
/// coefficient is nonzero unless the polynomial is zero (empty vector).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyZ {
    pub coeffs: Vec<BigInt>,
}

impl PolyZ {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        PolyZ { coeffs }
    }

    pub fn zero() -> Self {
        PolyZ { coeffs: Vec::new() }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_mod(&self, x: &BigUint, m: &BigUint) -> BigUint {
        let xm = BigInt::from(x.clone());
        let mm = BigInt::from(m.clone());
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = (acc * &xm + c) % &mm;
        }
        super::mod_signed(&acc, m)
    }

    pub fn derivative(&self) -> PolyZ {
        if self.coeffs.len() <= 1 {
            return PolyZ::zero();
        }
        PolyZ::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Coefficients reduced mod p (p < 2^63), highest degree kept even if
    /// it reduces to zero is NOT kept: result is normalized.
    pub fn mod_u64(&self, p: u64) -> Vec<u64> {
        let pm = BigInt::from(p);
        let mut v: Vec<u64> = self
            .coeffs
            .iter()
            .map(|c| {
                let mut r = c % &pm;
                if r.sign() == Sign::Minus {
                    r += &pm;
                }
                r.to_u64_digits().1.first().copied().unwrap_or(0)
            })
            .collect();
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    /// Content (gcd of coefficients), nonnegative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    pub fn mul(&self, other: &PolyZ) -> PolyZ {
        if self.is_zero() || other.is_zero() {
            return PolyZ::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyZ::new(out)
    }

    pub fn scale(&self, k: &BigInt) -> PolyZ {
        PolyZ::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// f(x + t): translation of the argument.
    pub fn translate(&self, t: &BigInt) -> PolyZ {
        // Horner on polynomial coefficients.
        let mut out = PolyZ::zero();
        for c in self.coeffs.iter().rev() {
            out = out.mul_x_plus(t);
            if !c.is_zero() {
                let mut coeffs = out.coeffs.clone();
                if coeffs.is_empty() {
                    coeffs.push(BigInt::zero());
                }
                coeffs[0] += c;
                out = PolyZ::new(coeffs);
            }
        }
        out
    }

    fn mul_x_plus(&self, t: &BigInt) -> PolyZ {
        // self * (x + t)
        if self.is_zero() {
            return PolyZ::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + 1] += c;
            out[i] += c * t;
        }
        PolyZ::new(out)
    }

    /// The monic companion lc^(d-1) * f(x / lc), whose root is lc * alpha.
    pub fn monicize(&self) -> PolyZ {
        let d = self.degree();
        let lc = self.lc();
        let mut res = vec![BigInt::zero(); d + 1];
        res[d] = BigInt::one();
        // coefficient of x^i becomes c_i * lc^(d-1-i)
        for i in 0..d {
            res[i] = &self.coeffs[i] * lc.pow((d - 1 - i) as u32);
        }
        PolyZ::new(res)
    }

    /// Homogeneous evaluation F(a, b) = b^deg(f) * f(a/b).
    pub fn homogeneous_eval(&self, a: &BigInt, b: &BigInt) -> BigInt {
        let d = self.degree();
        if self.is_zero() {
            return BigInt::zero();
        }
        // Horner in a with running powers of b: F = sum c_i a^i b^{d-i}
        let mut acc = self.coeffs[d].clone();
        for i in (0..d).rev() {
            acc = acc * a + &self.coeffs[i] * b.pow((d - i) as u32);
        }
        acc
    }

    /// Number of real roots, by Sturm's theorem (exact).
    pub fn real_roots(&self) -> usize {
        if self.degree() == 0 {
            return 0;
        }
        // Sturm chain with positively-scaled pseudo-remainders.
        let mut chain: Vec<PolyZ> = vec![self.clone(), self.derivative()];
        while chain.last().map_or(false, |p| p.degree() > 0 && !p.is_zero()) {
            let n = chain.len();
            let r = neg_prem_positive(&chain[n - 2], &chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r);
        }
        let signs_at = |inf_sign: i32| -> usize {
            let mut changes = 0;
            let mut last = 0i32;
            for p in &chain {
                if p.is_zero() {
                    continue;
                }
                let lc = p.lc();
                let mut s = if lc.is_positive() { 1 } else { -1 };
                if inf_sign < 0 && p.degree() % 2 == 1 {
                    s = -s;
                }
                if last != 0 && s != last {
                    changes += 1;
                }
                last = s;
            }
            changes
        };
        signs_at(-1) - signs_at(1)
    }

    /// Unit rank r1 + r2 - 1 of the number field Q[x]/(f).
    pub fn unit_rank(&self) -> usize {
        let d = self.degree();
        let r1 = self.real_roots();
        let r2 = (d - r1) / 2;
        (r1 + r2).saturating_sub(1)
    }

    /// True if an irreducibility certificate over Q is found: f primitive and
    /// irreducible modulo some prime preserving the degree, among the first
    /// few dozen primes. (Incomplete for pathological inputs like x^4 + 1;
    /// callers treat `false` as "discard candidate".)
    pub fn is_irreducible_q(&self) -> bool {
        let d = self.degree();
        if d == 0 {
            return false;
        }
        if d == 1 {
            return true;
        }
        for p in primes_up_to(300) {
            let fp = self.mod_u64(p);
            if fp.len() != d + 1 {
                continue; // leading coefficient vanished
            }
            if poly_irreducible_u64(&fp, p) {
                return true;
            }
        }
        false
    }
}

impl std::fmt::Display for PolyZ {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                1 => {
                    if a.is_one() {
                        write!(f, "x")?
                    } else {
                        write!(f, "{a}*x")?
                    }
                }
                _ => {
                    if a.is_one() {
                        write!(f, "x^{i}")?
                    } else {
                        write!(f, "{a}*x^{i}")?
                    }
                }
            }
        }
        Ok(())
    }
}

/// -prem(a, b) scaled so the multiplier is positive (keeps Sturm signs valid).
fn neg_prem_positive(a: &PolyZ, b: &PolyZ) -> PolyZ {
    let (mut r, mult_neg) = prem(a, b);
    // prem multiplies a by lc(b)^(delta+1); if that factor is negative the
    // sign of the remainder flipped, flip it back before negating.
    if mult_neg {
        for c in &mut r.coeffs {
            *c = -&*c;
        }
    }
    PolyZ::new(r.coeffs.into_iter().map(|c| -c).collect())
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
/// Returns (remainder, whether the multiplier lc(b)^(delta+1) is negative).
fn prem(a: &PolyZ, b: &PolyZ) -> (PolyZ, bool) {
    let db = b.degree();
    let lb = b.lc();
    let mut r = a.coeffs.clone();
    let delta = a.degree().saturating_sub(db);
    let mult_neg = lb.is_negative() && (delta + 1) % 2 == 1;
    let mut steps = 0usize;
    while r.len() > db && !r.iter().all(|c| c.is_zero()) {
        while r.last().map_or(false, |c| c.is_zero()) {
            r.pop();
        }
        if r.len() <= db {
            break;
        }
        let dr = r.len() - 1;
        let top = r[dr].clone();
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        let shift = dr - db;
        for i in 0..=db {
            let t = &top * &b.coeffs[i];
            r[i + shift] -= t;
        }
        r.pop();
        steps += 1;
    }
    // pad multiplications so the total multiplier is exactly lb^(delta+1)
    for _ in steps..=delta {
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
    }
    (PolyZ::new(r), mult_neg)
}

/// Resultant of two nonzero integer polynomials.
///
/// Computed modulo many word-size primes with CRT reconstruction against the
/// Hadamard bound (exact). `resultant_prs` provides the independent
/// subresultant route used by tests.
pub fn resultant(f: &PolyZ, g: &PolyZ) -> Result<BigInt> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::domain("resultant of zero polynomial"));
    }
    if f.degree() == 0 {
        return Ok(f.coeffs[0].pow(g.degree() as u32));
    }
    if g.degree() == 0 {
        return Ok(g.coeffs[0].pow(f.degree() as u32));
    }
    // Hadamard-style bound: |Res| <= ||f||_2^(deg g) * ||g||_2^(deg f).
    let norm2 = |p: &PolyZ| -> f64 {
        p.coeffs
            .iter()
            .map(|c| {
                let b = c.bits() as f64;
                2f64.powf(2.0 * b.min(500.0))
            })
            .sum::<f64>()
            .sqrt()
    };
    let bound_bits = {
        let bf = norm2(f).log2() * g.degree() as f64;
        let bg = norm2(g).log2() * f.degree() as f64;
        (bf + bg + 4.0).max(8.0)
    };
    if bound_bits > 1_000_000.0 {
        return resultant_prs(f, g);
    }
    let mut prime = (1u64 << 62) + 1;
    let mut modulus = BigInt::one();
    let mut acc = BigInt::zero();
    let target_bits = bound_bits + 2.0;
    while (modulus.bits() as f64) < target_bits {
        prime = next_prime_u64(prime + 1);
        let fp = f.mod_u64(prime);
        let gp = g.mod_u64(prime);
        if fp.len() != f.coeffs.len() || gp.len() != g.coeffs.len() {
            continue; // prime divides a leading coefficient
        }
        let r = resultant_mod_u64(&fp, &gp, prime);
        // CRT accumulate
        let pm = BigInt::from(prime);
        if modulus.is_one() {
            acc = BigInt::from(r);
            modulus = pm;
        } else {
            let inv = invmod_u64(
                (&modulus % &pm)
                    .to_biguint()
                    .unwrap()
                    .to_u64_digits()
                    .first()
                    .copied()
                    .unwrap_or(0),
                prime,
            )
            .expect("moduli coprime");
            let cur = {
                let m = (&acc % &pm + &pm) % &pm;
                m.to_u64_digits().1.first().copied().unwrap_or(0)
            };
            let delta = mulmod_u64((r + prime - cur) % prime, inv, prime);
            acc += &modulus * BigInt::from(delta);
            modulus *= pm;
        }
    }
    // symmetric lift
    let half = &modulus >> 1;
    if acc > half {
        acc -= &modulus;
    }
    Ok(acc)
}

/// Resultant via subresultant polynomial remainder sequences (exact, slower).
pub fn resultant_prs(f: &PolyZ, g: &PolyZ) -> Result<BigInt> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::domain("resultant of zero polynomial"));
    }
    let (mut a, mut b, mut sign) = if f.degree() >= g.degree() {
        (f.clone(), g.clone(), 1i32)
    } else {
        let s = if (f.degree() * g.degree()) % 2 == 1 { -1 } else { 1 };
        (g.clone(), f.clone(), s)
    };
    if b.degree() == 0 {
        let r = b.coeffs[0].pow(a.degree() as u32);
        return Ok(if sign < 0 { -r } else { r });
    }
    let ca = a.content();
    let cb = b.content();
    let t = ca.pow(b.degree() as u32) * cb.pow(a.degree() as u32);
    a = PolyZ::new(a.coeffs.iter().map(|c| c / &ca).collect());
    b = PolyZ::new(b.coeffs.iter().map(|c| c / &cb).collect());
    let mut g_ = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = a.degree() - b.degree();
        if a.degree() % 2 == 1 && b.degree() % 2 == 1 {
            sign = -sign;
        }
        let (r, _) = prem(&a, &b);
        if r.is_zero() {
            if b.degree() > 0 {
                return Ok(BigInt::zero());
            }
        }
        a = b;
        let denom = &g_ * h.pow(delta as u32);
        b = PolyZ::new(r.coeffs.iter().map(|c| c / &denom).collect());
        g_ = a.lc();
        h = if delta == 0 {
            h.clone()
        } else {
            let num = g_.pow(delta as u32);
            let den = h.pow((delta - 1) as u32);
            num / den
        };
        if b.is_zero() {
            return Ok(BigInt::zero());
        }
        if b.degree() == 0 {
            let num = b.coeffs[0].pow(a.degree() as u32);
            let den = h.pow((a.degree() - 1) as u32);
            let r = &t * (num / den);
            return Ok(if sign < 0 { -r } else { r });
        }
    }
}

/// Resultant over GF(p) by the Euclidean remainder sequence.
fn resultant_mod_u64(f: &[u64], g: &[u64], p: u64) -> u64 {
    let (mut a, mut b) = (f.to_vec(), g.to_vec());
    let mut res = 1u64;
    let mut neg = false;
    loop {
        if b.is_empty() {
            return 0;
        }
        if b.len() == 1 {
            res = mulmod_u64(res, super::powmod_u64(b[0], (a.len() - 1) as u64, p), p);
            break;
        }
        let r = poly_rem_u64(&a, &b, p);
        let da = a.len() - 1;
        let db = b.len() - 1;
        let dr = r.len().saturating_sub(1);
        // Res(a, b) = (-1)^(da db) lc(b)^(da - dr) Res(b, r)
        if (da * db) % 2 == 1 {
            neg = !neg;
        }
        res = mulmod_u64(res, super::powmod_u64(b[db], (da - dr) as u64, p), p);
        a = b;
        b = r;
    }
    if neg {
        (p - res) % p
    } else {
        res
    }
}

fn next_prime_u64(mut n: u64) -> u64 {
    if n % 2 == 0 {
        n += 1;
    }
    while !super::primality::is_prime_u64(n) {
        n += 2;
    }
    n
}

// --- GF(p) polynomial arithmetic on machine words ---

pub(crate) fn poly_mod_normalize(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub(crate) fn poly_mulmod_u64(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod_u64(x, y, p)) % p;
        }
    }
    poly_mod_normalize(&mut out);
    out
}

pub(crate) fn poly_rem_u64(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let dm = m.len() - 1;
    let inv = invmod_u64(m[dm], p).expect("modulus lc invertible");
    let mut r = a.to_vec();
    while r.len() > dm {
        let top = mulmod_u64(*r.last().unwrap(), inv, p);
        if top != 0 {
            let shift = r.len() - 1 - dm;
            for i in 0..=dm {
                let t = mulmod_u64(top, m[i], p);
                let idx = i + shift;
                r[idx] = (r[idx] + p - t) % p;
            }
        }
        r.pop();
        poly_mod_normalize(&mut r);
        if r.len() <= dm {
            break;
        }
    }
    poly_mod_normalize(&mut r);
    r
}

pub(crate) fn poly_gcd_u64(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    poly_mod_normalize(&mut x);
    poly_mod_normalize(&mut y);
    while !y.is_empty() {
        let r = poly_rem_u64(&x, &y, p);
        x = y;
        y = r;
    }
    if let Some(&lc) = x.last() {
        let inv = invmod_u64(lc, p).unwrap();
        for c in &mut x {
            *c = mulmod_u64(*c, inv, p);
        }
    }
    x
}

pub(crate) fn poly_powmod_u64(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut b = poly_rem_u64(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            result = poly_rem_u64(&poly_mulmod_u64(&result, &b, p), m, p);
        }
        b = poly_rem_u64(&poly_mulmod_u64(&b, &b, p), m, p);
        e >>= 1;
    }
    result
}

/// x^(p^k) mod (m, p) by repeated Frobenius (k >= 1).
fn frobenius_power_u64(m: &[u64], p: u64, k: usize) -> Vec<u64> {
    let x = vec![0, 1];
    let mut cur = poly_powmod_big(&x, p, m, p);
    for _ in 1..k {
        cur = poly_compose_powmod(&cur, p, m);
    }
    cur
}

/// base^e mod (m, p) with e possibly = p (u64 exponent path).
fn poly_powmod_big(base: &[u64], e: u64, m: &[u64], p: u64) -> Vec<u64> {
    poly_powmod_u64(base, e, m, p)
}

/// Substitute: given g = x^p mod m, compute h(x)^p mod m = h(g) mod m.
fn poly_compose_powmod(h: &[u64], p: u64, m: &[u64]) -> Vec<u64> {
    // h(x)^p = h(x^p) over GF(p); evaluate h at g = x^p mod m by Horner.
    let g = poly_powmod_u64(&[0, 1], p, m, p);
    let mut acc: Vec<u64> = Vec::new();
    for &c in h.iter().rev() {
        acc = poly_rem_u64(&poly_mulmod_u64(&acc, &g, p), m, p);
        if c != 0 {
            if acc.is_empty() {
                acc = vec![c];
            } else {
                acc[0] = (acc[0] + c) % p;
            }
        }
    }
    acc
}

/// Irreducibility of f over GF(p) (f squarefree not required; returns false
/// if not irreducible).
pub(crate) fn poly_irreducible_u64(f: &[u64], p: u64) -> bool {
    let d = f.len() - 1;
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    // x^(p^d) == x mod f, and gcd(x^(p^(d/t)) - x, f) == const for prime t | d.
    let xp_d = frobenius_power_u64(f, p, d);
    let x_only = vec![0u64, 1];
    let diff = poly_sub_u64(&xp_d, &x_only, p);
    if !diff.is_empty() {
        return false;
    }
    let mut t = 2;
    let mut dd = d;
    let mut prime_divs = Vec::new();
    while t * t <= dd {
        if dd % t == 0 {
            prime_divs.push(t);
            while dd % t == 0 {
                dd /= t;
            }
        }
        t += 1;
    }
    if dd > 1 {
        prime_divs.push(dd);
    }
    for t in prime_divs {
        let e = d / t;
        let xpe = frobenius_power_u64(f, p, e);
        let diff = poly_sub_u64(&xpe, &x_only, p);
        let g = poly_gcd_u64(&diff, f, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

pub(crate) fn poly_sub_u64(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = (x + p - y) % p;
    }
    poly_mod_normalize(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    fn p(v: &[i64]) -> PolyZ {
        PolyZ::from_i64(v)
    }

    #[test]
    fn norm_basic() {
        let f = p(&[1, 0, 1]); // x^2 + 1
        assert_eq!(
            f.homogeneous_eval(&BigInt::from(1), &BigInt::from(1)),
            BigInt::from(2)
        );
        assert_eq!(
            f.homogeneous_eval(&BigInt::from(1), &BigInt::from(0)),
            BigInt::from(1)
        );
        // DLP-240 f1 at (1,1) = sum of coefficients = 348
        let (_, f1) = crate::published::dlp240_pair();
        assert_eq!(
            f1.homogeneous_eval(&BigInt::from(1), &BigInt::from(1)),
            BigInt::from(348)
        );
    }

    #[test]
    fn resultant_basic() {
        // Res(x - 2, x^2 + 1) = f(2) = 5
        let f = p(&[-2, 1]);
        let g = p(&[1, 0, 1]);
        assert_eq!(resultant(&f, &g).unwrap().abs(), BigInt::from(5));
        assert_eq!(resultant(&p(&[0, 1]), &p(&[0, 1])).unwrap(), BigInt::zero());
    }

    #[test]
    fn resultant_published_pairs() {
        use crate::published::*;
        for (pair, n, k) in [
            (rsa240_pair(), big(RSA240), 120u32),
            (dlp240_pair(), big(DLP240_P), 540),
            (rsa250_pair(), big(RSA250), 48),
        ] {
            let (f0, f1) = pair;
            let r = resultant(&f0, &f1).unwrap().abs().to_biguint().unwrap();
            assert_eq!(r, n * BigUint::from(k));
        }
    }

    #[test]
    fn prs_matches_crt() {
        let mut rng = rand::thread_rng();
        for _ in 0..60 {
            let df = rng.gen_range(1..=5);
            let dg = rng.gen_range(1..=5);
            let f = PolyZ::new((0..=df).map(|_| BigInt::from(rng.gen_range(-50i64..50))).collect());
            let g = PolyZ::new((0..=dg).map(|_| BigInt::from(rng.gen_range(-50i64..50))).collect());
            if f.is_zero() || g.is_zero() {
                continue;
            }
            let a = resultant(&f, &g).unwrap();
            let b = resultant_prs(&f, &g).unwrap();
            assert_eq!(a, b, "f={f} g={g}");
        }
    }

    #[test]
    fn norm_is_resultant() {
        let mut rng = rand::thread_rng();
        for _ in 0..1000 {
            let d = rng.gen_range(1..=6);
            let f = PolyZ::new(
                (0..=d)
                    .map(|_| BigInt::from(rng.gen::<i32>() as i64 % (1i64 << 32)))
                    .collect(),
            );
            if f.is_zero() || f.degree() == 0 {
                continue;
            }
            let a = BigInt::from(rng.gen_range(-1000i64..1000));
            let b = BigInt::from(rng.gen_range(1i64..1000));
            // Res(a - b x, f)
            let lin = PolyZ::new(vec![a.clone(), -b.clone()]);
            let r = resultant(&lin, &f).unwrap();
            let n = f.homogeneous_eval(&a, &b);
            assert!(r == n || r == -n.clone(), "mismatch f={f} a={a} b={b}");
        }
    }

    #[test]
    fn translation_and_derivative() {
        let f = p(&[1, 2, 3]); // 3x^2 + 2x + 1
        let g = f.translate(&BigInt::from(5));
        // g(x) = f(x+5)
        for x in -3i64..3 {
            assert_eq!(g.eval(&BigInt::from(x)), f.eval(&BigInt::from(x + 5)));
        }
        assert_eq!(f.derivative(), p(&[2, 6]));
    }

    #[test]
    fn monicize_roots() {
        // f = 3x^2 + 2x + 5, fbar(y) = y^2 + 2 y + 15 has root 3*alpha
        let f = p(&[5, 2, 3]);
        let fbar = f.monicize();
        assert_eq!(fbar, p(&[15, 2, 1]));
    }

    #[test]
    fn sturm_counts() {
        assert_eq!(p(&[-2, 0, 1]).real_roots(), 2); // x^2 - 2
        assert_eq!(p(&[1, 0, 1]).real_roots(), 0); // x^2 + 1
        assert_eq!(p(&[0, -1, 0, 1]).real_roots(), 3); // x^3 - x
        assert_eq!(p(&[1, 1]).real_roots(), 1);
        // unit ranks
        assert_eq!(p(&[1, 0, 1]).unit_rank(), 0); // Q(i)
        assert_eq!(p(&[-2, 0, 1]).unit_rank(), 1); // Q(sqrt 2)
        assert_eq!(p(&[-2, 0, 0, 1]).unit_rank(), 1); // Q(cbrt 2): r1=1, r2=1
    }

    #[test]
    fn irreducibility() {
        assert!(p(&[1, 0, 1]).is_irreducible_q());
        assert!(!p(&[-1, 0, 1]).is_irreducible_q()); // (x-1)(x+1)
        assert!(p(&[-2, 0, 0, 0, 0, 1]).is_irreducible_q()); // x^5 - 2
        let (f0, f1) = crate::published::rsa240_pair();
        assert!(f0.is_irreducible_q() && f1.is_irreducible_q());
        let (g0, g1) = crate::published::dlp240_pair();
        assert!(g0.is_irreducible_q() && g1.is_irreducible_q());
    }

    #[test]
    fn gfp_poly_ops() {
        let p = 17u64;
        let f = vec![1, 0, 1]; // x^2+1, irreducible mod 3 but 17 = 1 mod 4 -> reducible
        assert!(!poly_irreducible_u64(&f, p));
        assert!(poly_irreducible_u64(&f, 3));
        assert!(poly_irreducible_u64(&[2, 0, 0, 1], 7)); // x^3+2 mod 7
    }
}
