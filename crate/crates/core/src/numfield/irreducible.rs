//! Irreducibility certificates from factorization degree patterns mod p.
//!
//! If `f` is a product `g·h` over ℚ then, modulo every prime of good
//! reduction, `deg g` is a sum of some of the factor degrees of `f mod p`.
//! So if the sets of achievable subset sums, intersected over several primes,
//! shrink to `{0, n}`, no proper factor can exist.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::exactalg::Rational;

/// Budget for the degree-pattern certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IrreducibilityConfig {
    /// Number of good primes to try before giving up.
    pub prime_budget: usize,
    /// Primes are taken from `[2, prime_limit)`.
    pub prime_limit: u64,
}

impl Default for IrreducibilityConfig {
    fn default() -> Self {
        Self { prime_budget: 25, prime_limit: 1000 }
    }
}

/// Outcome of a certification attempt.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternReport {
    /// `(p, factor degrees of f mod p)` for every good prime examined.
    pub patterns: Vec<(u64, Vec<usize>)>,
    pub certified: bool,
}

fn small_primes(limit: u64) -> impl Iterator<Item = u64> {
    (2..limit).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

type PolyP = Vec<u64>;

fn trim(mut a: PolyP) -> PolyP {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv(a: u64, p: u64) -> u64 {
    let (mut r, mut b, mut e) = (1u64, a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn rem(a: &[u64], b: &[u64], p: u64) -> PolyP {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let li = inv(b[db], p);
    while r.len() > db {
        let c = r[r.len() - 1] * li % p;
        let shift = r.len() - 1 - db;
        for (i, &bi) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * bi % p) % p;
        }
        r = trim(r);
    }
    r
}

fn div_exact(a: &[u64], b: &[u64], p: u64) -> PolyP {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let li = inv(b[db], p);
    let mut q = vec![0; r.len().saturating_sub(db)];
    while r.len() > db {
        let c = r[r.len() - 1] * li % p;
        let shift = r.len() - 1 - db;
        q[shift] = c;
        for (i, &bi) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * bi % p) % p;
        }
        r.pop();
        r = trim(r);
    }
    trim(q)
}

fn gcd(a: &[u64], b: &[u64], p: u64) -> PolyP {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = std::mem::replace(&mut y, r);
    }
    if let Some(&l) = x.last() {
        let li = inv(l, p);
        x.iter_mut().for_each(|c| *c = *c * li % p);
    }
    x
}

fn mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> PolyP {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    rem(&out, m, p)
}

fn powmod(a: &[u64], mut e: u64, m: &[u64], p: u64) -> PolyP {
    let mut acc = vec![1u64];
    let mut base = rem(a, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(&acc, &base, m, p);
        }
        base = mulmod(&base, &base, m, p);
        e >>= 1;
    }
    acc
}

/// Reduces a monic rational polynomial mod p; `None` if p divides a
/// denominator.
fn reduce(f: &[Rational], p: u64) -> Option<PolyP> {
    let pb = BigInt::from(p);
    let mut out = Vec::with_capacity(f.len());
    for c in f {
        let d = c.denom().mod_floor(&pb).to_u64()?;
        if d == 0 {
            return None;
        }
        let n = c.numer().mod_floor(&pb).to_u64()?;
        out.push(n * inv(d, p) % p);
    }
    Some(trim(out))
}

/// Factor degrees of a squarefree monic `f` over `F_p`, by distinct-degree
/// factorization.
pub(crate) fn factor_degrees_mod_p(f: &[u64], p: u64) -> Vec<usize> {
    let mut degrees = Vec::new();
    let mut g = f.to_vec();
    let x = vec![0, 1];
    let mut h = x.clone();
    let mut i = 1;
    while g.len() > 2 * i {
        h = powmod(&h, p, &g, p);
        let mut hx = h.clone();
        hx.resize(hx.len().max(2), 0);
        hx[1] = (hx[1] + p - 1) % p;
        let d = gcd(&g, &trim(hx), p);
        let dd = d.len() - 1;
        if dd > 0 {
            degrees.extend(std::iter::repeat_n(i, dd / i));
            g = div_exact(&g, &d, p);
            h = rem(&h, &g, p);
        }
        i += 1;
    }
    if g.len() > 1 {
        degrees.push(g.len() - 1);
    }
    degrees.sort_unstable();
    degrees
}

fn subset_sums(degrees: &[usize], n: usize) -> Vec<bool> {
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for &d in degrees {
        for s in (d..=n).rev() {
            if reach[s - d] {
                reach[s] = true;
            }
        }
    }
    reach
}

/// Tries to certify irreducibility of a monic squarefree `f` over ℚ.
pub fn certify_by_patterns(f: &[Rational], cfg: &IrreducibilityConfig) -> PatternReport {
    let n = f.len() - 1;
    let mut report = PatternReport { patterns: Vec::new(), certified: n == 1 };
    if n <= 1 {
        return report;
    }
    let mut alive = vec![true; n + 1];
    for p in small_primes(cfg.prime_limit) {
        if report.patterns.len() >= cfg.prime_budget {
            break;
        }
        let Some(fp) = reduce(f, p) else { continue };
        if fp.len() != n + 1 {
            continue;
        }
        let deriv: PolyP = trim(fp.iter().enumerate().skip(1).map(|(i, &c)| c * (i as u64 % p) % p).collect());
        if deriv.is_empty() || gcd(&fp, &deriv, p).len() != 1 {
            continue;
        }
        let degs = factor_degrees_mod_p(&fp, p);
        let reach = subset_sums(&degs, n);
        for (a, r) in alive.iter_mut().zip(&reach) {
            *a &= *r;
        }
        report.patterns.push((p, degs));
        if alive[1..n].iter().all(|a| !a) {
            report.certified = true;
            break;
        }
    }
    report
}

/// An integer root of the scaled integer polynomial gives a rational root of
/// `f`; only attempted when the constant term is small enough to enumerate
/// its divisors.
pub(crate) fn rational_root(f: &[Rational]) -> Option<Rational> {
    let n = f.len() - 1;
    // g(t) = c^n f(t/c) is monic with integer coefficients.
    let c = f.iter().fold(BigInt::from(1), |acc, a| acc.lcm(a.denom()));
    let g: Vec<BigInt> = f
        .iter()
        .enumerate()
        .map(|(i, a)| (a * Rational::from_integer(c.pow((n - i) as u32))).to_integer())
        .collect();
    let eval = |x: &BigInt| g.iter().rev().fold(BigInt::zero(), |acc, a| acc * x + a);
    if g[0].is_zero() {
        return Some(Rational::zero());
    }
    let a0 = g[0].abs().to_u64().filter(|&a| a <= 1_000_000_000_000)?;
    let mut d = 1u64;
    while d * d <= a0 {
        if a0 % d == 0 {
            for cand in [d, a0 / d] {
                for x in [BigInt::from(cand), -BigInt::from(cand)] {
                    if eval(&x).is_zero() {
                        return Some(Rational::new(x, c.clone()));
                    }
                }
            }
        }
        d += 1;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn q(cs: &[i64]) -> Vec<Rational> {
        cs.iter().map(|&c| rat(c, 1)).collect()
    }

    /// Oracle: brute-force search for monic factors of degree ≤ n/2 over F_p.
    fn has_factor_brute(f: &[u64], p: u64) -> bool {
        let n = f.len() - 1;
        for d in 1..=n / 2 {
            let count = p.pow(d as u32);
            for code in 0..count {
                let mut g = Vec::with_capacity(d + 1);
                let mut c = code;
                for _ in 0..d {
                    g.push(c % p);
                    c /= p;
                }
                g.push(1);
                if rem(f, &g, p).is_empty() {
                    return true;
                }
            }
        }
        false
    }

    #[test]
    fn t3_minus_t_minus_1_is_irreducible_mod_2() {
        let f = reduce(&q(&[-1, -1, 0, 1]), 2).unwrap();
        assert!(!has_factor_brute(&f, 2));
        assert_eq!(factor_degrees_mod_p(&f, 2), vec![3]);
    }

    #[test]
    fn ddf_agrees_with_brute_force_on_small_primes() {
        for p in [3u64, 5, 7] {
            for code in 0..p.pow(4) {
                let mut f = Vec::new();
                let mut c = code;
                for _ in 0..4 {
                    f.push(c % p);
                    c /= p;
                }
                f.push(1);
                let deriv: Vec<u64> = trim(f.iter().enumerate().skip(1).map(|(i, &c)| c * i as u64 % p).collect());
                if deriv.is_empty() || gcd(&f, &deriv, p).len() != 1 {
                    continue;
                }
                let irreducible = factor_degrees_mod_p(&f, p) == vec![4];
                assert_eq!(irreducible, !has_factor_brute(&f, p), "p={p} f={f:?}");
            }
        }
    }

    #[test]
    fn splitting_polynomial_never_certifies() {
        let rep = certify_by_patterns(&q(&[-1, 0, 1]), &IrreducibilityConfig::default());
        assert!(!rep.certified);
        assert!(rep.patterns.iter().all(|(_, d)| d == &vec![1, 1]));
    }

    #[test]
    fn rational_roots() {
        assert_eq!(rational_root(&q(&[-1, 0, 1])), Some(rat(1, 1)));
        assert_eq!(rational_root(&q(&[-2, 0, 1])), None);
        assert_eq!(rational_root(&[rat(-1, 4), rat(0, 1), rat(1, 1)]), Some(rat(1, 2)));
    }
}
