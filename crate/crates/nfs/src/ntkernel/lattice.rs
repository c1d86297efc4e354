//! Two-dimensional Gauss (Lagrange) reduction and a small-dimension exact
//! LLL used by the Joux-Lercier search and the descent lift.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub type Vec2 = (i128, i128);

#[inline]
fn dot(u: Vec2, v: Vec2) -> i128 {
    u.0 * v.0 + u.1 * v.1
}

#[inline]
fn norm2(u: Vec2) -> i128 {
    dot(u, u)
}

/// Lagrange-Gauss reduction of a rank-2 lattice basis.
/// Output (u, v) spans the same lattice with |u| <= |v| and
/// 2 |<u, v>| <= |u|^2.
pub fn gauss_reduce(mut u: Vec2, mut v: Vec2) -> Result<(Vec2, Vec2)> {
    if u.0 * v.1 - u.1 * v.0 == 0 {
        return Err(Error::domain("gauss_reduce: vectors are dependent"));
    }
    if norm2(u) > norm2(v) {
        std::mem::swap(&mut u, &mut v);
    }
    loop {
        // round(<u,v> / <u,u>)
        let d = dot(u, v);
        let n = norm2(u);
        let mu = div_round(d, n);
        if mu != 0 {
            v = (v.0 - mu * u.0, v.1 - mu * u.1);
        }
        if norm2(v) >= norm2(u) {
            break;
        }
        std::mem::swap(&mut u, &mut v);
    }
    Ok((u, v))
}

#[inline]
fn div_round(a: i128, b: i128) -> i128 {
    debug_assert!(b > 0);
    if a >= 0 {
        (a + b / 2) / b
    } else {
        -((-a + b / 2) / b)
    }
}

/// Exact LLL (delta = 0.99) for small dimensions; entries are BigInt,
/// Gram-Schmidt data kept as exact rationals. Reduces `basis` in place.
pub fn lll_reduce(basis: &mut Vec<Vec<BigInt>>) {
    let n = basis.len();
    if n <= 1 {
        return;
    }
    let delta = BigRational::new(BigInt::from(99), BigInt::from(100));
    let half = BigRational::new(BigInt::one(), BigInt::from(2));

    // Gram-Schmidt of rows [0, upto): returns (mu, B) with B_i = |b*_i|^2.
    let gso = |basis: &Vec<Vec<BigInt>>| -> (Vec<Vec<BigRational>>, Vec<BigRational>) {
        let dim = basis[0].len();
        let mut mu = vec![vec![BigRational::zero(); n]; n];
        let mut star: Vec<Vec<BigRational>> = Vec::with_capacity(n);
        let mut b = vec![BigRational::zero(); n];
        for i in 0..n {
            let mut v: Vec<BigRational> =
                basis[i].iter().map(|x| BigRational::from(x.clone())).collect();
            for j in 0..i {
                let num: BigRational = (0..dim)
                    .map(|k| BigRational::from(basis[i][k].clone()) * &star[j][k])
                    .sum();
                let m = if b[j].is_zero() { BigRational::zero() } else { num / &b[j] };
                for k in 0..dim {
                    let t = &m * &star[j][k];
                    v[k] -= t;
                }
                mu[i][j] = m;
            }
            b[i] = v.iter().map(|x| x * x).sum();
            star.push(v);
        }
        (mu, b)
    };

    let mut k = 1;
    let mut guard = 0usize;
    while k < n {
        guard += 1;
        if guard > 10_000 {
            break;
        }
        let (mu, b) = gso(basis);
        // size-reduce b_k against b_j, j < k
        let mut mu_k = mu[k].clone();
        for j in (0..k).rev() {
            if mu_k[j].clone().abs() > half {
                let q = round_rational(&mu_k[j]);
                if !q.is_zero() {
                    for t in 0..basis[0].len() {
                        let sub = &q * &basis[j][t];
                        basis[k][t] -= sub;
                    }
                    let (mu2, _) = gso(basis);
                    mu_k = mu2[k].clone();
                }
            }
        }
        let (mu, b2) = gso(basis);
        let _ = b;
        // Lovasz condition
        let lhs = &b2[k];
        let rhs = (&delta - &mu[k][k - 1] * &mu[k][k - 1]) * &b2[k - 1];
        if lhs >= &rhs {
            k += 1;
        } else {
            basis.swap(k, k - 1);
            k = k.max(2) - 1;
            if k == 0 {
                k = 1;
            }
        }
    }
}

fn round_rational(r: &BigRational) -> BigInt {
    let two = BigInt::from(2);
    let num = r.numer();
    let den = r.denom();
    // round half away from zero
    if num.is_negative() {
        -((-num * &two + den) / (den * &two))
    } else {
        (num * &two + den) / (den * &two)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_already_reduced() {
        let (u, v) = gauss_reduce((1, 0), (0, 1)).unwrap();
        assert_eq!(norm2(u), 1);
        assert_eq!(norm2(v), 1);
        assert_eq!((u.0 * v.1 - u.1 * v.0).abs(), 1);
    }

    #[test]
    fn reduction_conditions_hold() {
        let (u, v) = gauss_reduce((11, 0), (3, 1)).unwrap();
        assert!((u.0 * v.1 - u.1 * v.0).abs() == 11);
        assert!(norm2(u) <= norm2(v));
        assert!(2 * dot(u, v).abs() <= norm2(u));
        // shortest vector of this lattice by enumeration of norm <= 13
        let mut best = i128::MAX;
        for a in -15i128..=15 {
            for b in -15i128..=15 {
                if (a, b) == (0, 0) {
                    continue;
                }
                let w = (11 * a + 3 * b, b);
                best = best.min(norm2(w));
            }
        }
        assert_eq!(norm2(u), best);
    }

    #[test]
    fn nearly_parallel() {
        let (u, _v) = gauss_reduce((100, 1), (99, 1)).unwrap();
        assert_eq!(norm2(u), 1); // contains +-(1, 0)
    }

    #[test]
    fn determinant_preserved() {
        use rand::Rng;
        let mut rng = rand::thread_rng();
        for _ in 0..200 {
            let u = (rng.gen_range(-1000i128..1000), rng.gen_range(-1000i128..1000));
            let v = (rng.gen_range(-1000i128..1000), rng.gen_range(-1000i128..1000));
            let det = u.0 * v.1 - u.1 * v.0;
            if det == 0 {
                continue;
            }
            let (a, b) = gauss_reduce(u, v).unwrap();
            assert_eq!((a.0 * b.1 - a.1 * b.0).abs(), det.abs());
            assert!(norm2(a) <= norm2(b));
            assert!(2 * dot(a, b).abs() <= norm2(a));
        }
    }

    #[test]
    fn dependent_rejected() {
        assert!(gauss_reduce((2, 4), (1, 2)).is_err());
    }

    #[test]
    fn lll_small_lattice() {
        // Root lattice of m mod p for a 3-dim case: rows (p,0,0), (-m,1,0), (-m^2,0,1)
        let p = 1_000_003i64;
        let m = 123_456i64;
        let m2 = (m as i128 * m as i128 % p as i128) as i64;
        let mut basis = vec![
            vec![BigInt::from(p), BigInt::zero(), BigInt::zero()],
            vec![BigInt::from(-m), BigInt::one(), BigInt::zero()],
            vec![BigInt::from(-m2), BigInt::zero(), BigInt::one()],
        ];
        lll_reduce(&mut basis);
        // All rows should now have entries around p^(1/3) ~ 100
        for row in &basis {
            let norm: BigInt = row.iter().map(|x| x * x).sum();
            assert!(norm < BigInt::from(1_000_000i64), "row too long: {row:?}");
            // each row must still satisfy c0 + c1 m + c2 m^2 = 0 mod p
            let val = (&row[0] + &row[1] * BigInt::from(m) + &row[2] * BigInt::from(m) * BigInt::from(m))
                % BigInt::from(p);
            assert!(val.is_zero());
        }
    }
}
