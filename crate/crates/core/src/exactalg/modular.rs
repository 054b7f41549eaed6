//! Multi-modular acceleration for rational matrices.
//!
//! Two facts make this sound without trusting any prime:
//!
//! * rank mod p never exceeds the rank over ℚ, so full column rank modulo a
//!   single prime certifies that the kernel over ℚ is zero;
//! * a kernel vector obtained by CRT and rational reconstruction is only
//!   reported after `Mv = 0` has been checked in exact integer arithmetic.
//!
//! When `cols - rank_p` independent vectors pass that check the rank over ℚ is
//! pinned to `rank_p`, and (by the free-column argument in
//! [`kernel_basis_rational`]) the vectors are exactly the canonical
//! reduced-echelon basis that [`super::kernel_basis`] would produce.

use std::sync::OnceLock;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{normalize_rational_vector, Rational, RationalField};
use super::matrix::{kernel_basis, Matrix};

/// Primes below 2^31, descending, so that products fit in a `u64`.
fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let small: Vec<u64> = {
            let limit = 46_341usize;
            let mut sieve = vec![true; limit + 1];
            sieve[0] = false;
            sieve[1] = false;
            let mut i = 2;
            while i * i <= limit {
                if sieve[i] {
                    let mut j = i * i;
                    while j <= limit {
                        sieve[j] = false;
                        j += i;
                    }
                }
                i += 1;
            }
            (0..=limit).filter(|&k| sieve[k]).map(|k| k as u64).collect()
        };
        let mut out = Vec::with_capacity(PRIME_BUDGET);
        let mut n: u64 = (1 << 31) - 1;
        while out.len() < PRIME_BUDGET {
            if small.iter().take_while(|&&q| q * q <= n).all(|&q| !n.is_multiple_of(q)) {
                out.push(n);
            }
            n -= 2;
        }
        out
    })
}

/// Upper limit on primes spent before falling back to exact elimination.
const PRIME_BUDGET: usize = 600;

/// Scales each row by the lcm of its denominators.
pub(crate) fn integer_rows(m: &Matrix<Rational>) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let den = row.iter().fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
            row.iter().map(|a| (a * &den).to_integer()).collect()
        })
        .collect()
}

fn reduce(x: &BigInt, p: u64) -> u64 {
    let r = (x.magnitude() % p).to_u64().unwrap_or(0);
    if x.sign() == Sign::Minus && r != 0 {
        p - r
    } else {
        r
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

/// Reduced row echelon form modulo `p`, in place. Returns pivot columns.
fn rref_mod(a: &mut [Vec<u64>], cols: usize, p: u64) -> Vec<usize> {
    let nrows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(k) = (r..nrows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(k, r);
        let inv = inv_mod(a[r][c], p);
        for x in a[r][c..].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for j in c..cols {
                if pivot_row[j] != 0 {
                    row[j] = (row[j] + (p - f) * pivot_row[j]) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn rank_mod(rows: &[Vec<BigInt>], cols: usize, p: u64) -> usize {
    let mut a: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|x| reduce(x, p)).collect()).collect();
    rref_mod(&mut a, cols, p).len()
}

/// Rank modulo the first two working primes, maximized. Always a lower bound
/// for the rank over ℚ.
pub fn rank_lower_bound(m: &Matrix<Rational>) -> usize {
    let rows = integer_rows(m);
    primes()[..2].iter().map(|&p| rank_mod(&rows, m.cols(), p)).max().unwrap_or(0)
}

/// Rational reconstruction of `a mod modulus` with both parts bounded by
/// `sqrt(modulus / 2)`.
fn reconstruct(a: &BigInt, modulus: &BigInt, bound: &BigInt) -> Option<Rational> {
    let (mut r0, mut r1) = (modulus.clone(), a.mod_floor(modulus));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > *bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(Rational::new(r1, t1))
}

fn verify(rows: &[Vec<BigInt>], v: &[Rational]) -> bool {
    let den = v.iter().fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
    let iv: Vec<BigInt> = v.iter().map(|a| (a * &den).to_integer()).collect();
    rows.iter().all(|row| {
        row.iter()
            .zip(&iv)
            .filter(|(_, b)| !b.is_zero())
            .fold(BigInt::zero(), |acc, (a, b)| acc + a * b)
            .is_zero()
    })
}

/// What to reconstruct: the whole basis or only its first vector.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Want {
    All,
    First,
}

fn modular_kernel(m: &Matrix<Rational>, want: Want) -> Option<Vec<Vec<Rational>>> {
    let cols = m.cols();
    let rows = integer_rows(m);
    let mut best: Option<Vec<usize>> = None;
    // Per target free column: the pivot positions it touches and their CRT
    // residues.
    let mut targets: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut residues: Vec<Vec<BigInt>> = Vec::new();
    let mut modulus = BigInt::one();
    let mut used = 0usize;
    let mut next_attempt = 1usize;

    for &p in primes() {
        let mut a: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|x| reduce(x, p)).collect()).collect();
        let pivots = rref_mod(&mut a, cols, p);
        if pivots.len() == cols {
            return Some(Vec::new());
        }
        let better = match &best {
            None => true,
            Some(b) => pivots.len() > b.len() || (pivots.len() == b.len() && pivots < *b),
        };
        let worse = match &best {
            None => false,
            Some(b) => pivots.len() < b.len() || (pivots.len() == b.len() && pivots > *b),
        };
        if worse {
            continue;
        }
        if better {
            let mut is_pivot = vec![false; cols];
            for &c in &pivots {
                is_pivot[c] = true;
            }
            let free = (0..cols).filter(|&c| !is_pivot[c]);
            targets = match want {
                Want::All => free.collect::<Vec<_>>(),
                Want::First => free.take(1).collect(),
            }
            .into_iter()
            .map(|f| (f, (0..pivots.len()).take_while(|&i| pivots[i] < f).collect()))
            .collect();
            residues = targets.iter().map(|(_, rs)| vec![BigInt::zero(); rs.len()]).collect();
            modulus = BigInt::one();
            used = 0;
            next_attempt = 1;
            best = Some(pivots.clone());
        }
        // CRT step.
        let m_mod_p = reduce(&modulus, p);
        let m_inv = inv_mod(m_mod_p, p);
        for ((f, prow), res) in targets.iter().zip(residues.iter_mut()) {
            for (slot, &i) in res.iter_mut().zip(prow) {
                let r = (p - a[i][*f]) % p;
                let cur = reduce(slot, p);
                let delta = (r + p - cur) % p * m_inv % p;
                if delta != 0 {
                    *slot += &modulus * BigInt::from(delta);
                }
            }
        }
        modulus *= BigInt::from(p);
        used += 1;
        if used < next_attempt {
            continue;
        }
        next_attempt = used + used.div_ceil(2).max(1);
        let bound = (&modulus / BigInt::from(2)).sqrt();
        let pivots = best.as_ref().expect("set above");
        let mut out = Vec::with_capacity(targets.len());
        let mut ok = true;
        'vec: for ((f, prow), res) in targets.iter().zip(&residues) {
            let mut v = vec![Rational::zero(); cols];
            v[*f] = Rational::one();
            for (x, &i) in res.iter().zip(prow) {
                match reconstruct(x, &modulus, &bound) {
                    Some(q) => v[pivots[i]] = q,
                    None => {
                        ok = false;
                        break 'vec;
                    }
                }
            }
            if !verify(&rows, &v) {
                ok = false;
                break;
            }
            out.push(v);
        }
        if ok {
            for v in out.iter_mut() {
                normalize_rational_vector(v);
            }
            return Some(out);
        }
    }
    None
}

/// Canonical kernel basis of a rational matrix, multi-modular with exact
/// verification; identical output to [`super::kernel_basis`].
pub fn kernel_basis_rational(m: &Matrix<Rational>) -> Vec<Vec<Rational>> {
    modular_kernel(m, Want::All).unwrap_or_else(|| kernel_basis(&RationalField, m))
}

/// First vector of the canonical kernel basis, or `None` for a zero kernel.
///
/// Soundness: modulo a prime the first free column `f` has columns `0..f`
/// independent, hence independent over ℚ; a verified vector supported on
/// `0..=f` with a one at `f` shows `f` is dependent over ℚ as well, so `f` is
/// the first free column over ℚ and the vector is the unique canonical one.
pub fn first_kernel_vector(m: &Matrix<Rational>) -> Option<Vec<Rational>> {
    match modular_kernel(m, Want::First) {
        Some(mut v) => v.pop(),
        None => kernel_basis(&RationalField, m).into_iter().next(),
    }
}

/// Certified kernel dimension over ℚ.
pub fn kernel_dim(m: &Matrix<Rational>) -> usize {
    let r = rank_lower_bound(m);
    if r == m.rows().min(m.cols()) {
        return m.cols() - r;
    }
    kernel_basis_rational(m).len()
}

/// Certified test for a nonzero kernel over ℚ.
pub fn has_kernel(m: &Matrix<Rational>) -> bool {
    if m.rows() < m.cols() {
        return true;
    }
    if rank_lower_bound(m) == m.cols() {
        return false;
    }
    first_kernel_vector(m).is_some()
}
