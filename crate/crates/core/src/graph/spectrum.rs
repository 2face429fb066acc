//! Exact characteristic polynomials and integral-spectrum decisions.
//!
//! The characteristic polynomial is computed modulo several 62-bit primes by
//! Hessenberg reduction and lifted by Chinese remaindering. The number of
//! primes is chosen from a Hadamard-type bound on the coefficients, so the
//! lift is exact. Integrality is then decided by integer-root deflation.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::SimpleGraph;
use crate::error::{Error, Result};

pub const SPECTRUM_SIZE_LIMIT: usize = 64;

/// A monic integer polynomial, coefficients in ascending degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerPoly {
    coeffs: Vec<BigInt>,
}

impl IntegerPoly {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        debug_assert!(coeffs.last().is_some_and(One::is_one), "monic");
        IntegerPoly { coeffs }
    }

    pub fn one() -> Self {
        IntegerPoly { coeffs: vec![BigInt::one()] }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Synthetic division by `x - r`; returns the quotient when exact.
    pub fn deflate(&self, r: i64) -> Option<IntegerPoly> {
        let r = BigInt::from(r);
        let d = self.degree();
        if d == 0 {
            return None;
        }
        let mut q = vec![BigInt::zero(); d];
        let mut carry = BigInt::zero();
        for k in (1..=d).rev() {
            carry = &self.coeffs[k] + carry * &r;
            q[k - 1] = carry.clone();
        }
        let remainder = &self.coeffs[0] + carry * &r;
        remainder.is_zero().then_some(IntegerPoly { coeffs: q })
    }
}

impl fmt::Display for IntegerPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            if !mag.is_one() || k == 0 {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for IntegerPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

/// Integrality decision with its certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumVerdict {
    pub integral: bool,
    /// Integer roots found, descending, with multiplicity.
    pub roots: Vec<i64>,
    /// What is left after removing the integer roots; `1` when integral.
    pub remainder: IntegerPoly,
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit integers.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The sixteen largest primes below 2^62, descending. Enough for any graph
/// within the size limit: the coefficient bound there is at most 9^64.
fn primes() -> &'static [u64] {
    static PRIMES: std::sync::OnceLock<Vec<u64>> = std::sync::OnceLock::new();
    PRIMES.get_or_init(|| ((1u64 << 61)..(1u64 << 62)).rev().filter(|&n| n % 2 == 1 && is_prime(n)).take(16).collect())
}

/// Characteristic polynomial of `a` modulo `p`, ascending coefficients.
fn char_poly_mod(a: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = a.len();
    let mut h: Vec<Vec<u64>> = a.iter().map(|r| r.iter().map(|&x| x % p).collect()).collect();
    let sub = |x: u64, y: u64| if x >= y { x - y } else { x + p - y };
    // Similarity reduction to upper Hessenberg form.
    for j in 0..n.saturating_sub(2) {
        let Some(pivot) = (j + 1..n).find(|&i| h[i][j] != 0) else { continue };
        if pivot != j + 1 {
            h.swap(pivot, j + 1);
            for row in h.iter_mut() {
                row.swap(pivot, j + 1);
            }
        }
        let inv = pow_mod(h[j + 1][j], p - 2, p);
        for r in j + 2..n {
            let u = mul_mod(h[r][j], inv, p);
            if u == 0 {
                continue;
            }
            for c in 0..n {
                let t = mul_mod(u, h[j + 1][c], p);
                h[r][c] = sub(h[r][c], t);
            }
            for row in h.iter_mut() {
                let t = mul_mod(u, row[r], p);
                row[j + 1] = (row[j + 1] + t) % p;
            }
        }
    }
    // p_m = (x - h_mm) p_{m-1} - sum_i h_im (prod of subdiagonal) p_{i-1}
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let prev = &polys[m - 1];
        let mut next = vec![0u64; m + 1];
        for (k, &c) in prev.iter().enumerate() {
            next[k + 1] = (next[k + 1] + c) % p;
            next[k] = sub(next[k], mul_mod(h[m - 1][m - 1], c, p));
        }
        let mut t = 1u64;
        for i in (1..m).rev() {
            t = mul_mod(t, h[i][i - 1], p);
            let factor = mul_mod(t, h[i - 1][m - 1], p);
            if factor == 0 {
                continue;
            }
            for (k, &c) in polys[i - 1].iter().enumerate() {
                next[k] = sub(next[k], mul_mod(factor, c, p));
            }
        }
        polys.push(next);
    }
    polys.pop().expect("degree n polynomial")
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Bound on |c_k|: `C(n,k) * M^k` with `M^2` the largest row weight
/// (squared Euclidean row norm), maximized over `k`.
fn coefficient_bound(x: &SimpleGraph) -> BigInt {
    let n = x.n();
    let max_weight = (0..n).map(|v| x.degree(v)).max().unwrap_or(0);
    let m = (1..).find(|&m: &u64| m * m >= max_weight as u64).unwrap_or(1);
    (0..=n).map(|k| binomial(n, k) * BigInt::from(m).pow(k as u32)).max().unwrap_or_else(BigInt::one)
}

/// Characteristic polynomial `det(xI - A)` of the adjacency matrix.
pub fn char_poly(x: &SimpleGraph) -> Result<IntegerPoly> {
    let n = x.n();
    if n > SPECTRUM_SIZE_LIMIT {
        return Err(Error::SizeLimitExceeded { n, limit: SPECTRUM_SIZE_LIMIT });
    }
    let a: Vec<Vec<u64>> =
        (0..n).map(|i| (0..n).map(|j| u64::from(x.has_edge(i, j))).collect()).collect();
    let need = coefficient_bound(x) * 2 + 1;
    let mut modulus = BigInt::one();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for &p in primes() {
        let residues = char_poly_mod(&a, p);
        let pb = BigInt::from(p);
        // Garner step: c <- c + modulus * ((r - c) * modulus^-1 mod p)
        let m_mod = (&modulus % &pb).to_u64().expect("fits");
        let m_inv = pow_mod(m_mod, p - 2, p);
        for (c, &r) in coeffs.iter_mut().zip(&residues) {
            let c_mod = (&*c % &pb).to_u64().expect("fits");
            let diff = (r + p - c_mod) % p;
            *c += &modulus * BigInt::from(mul_mod(diff, m_inv, p));
        }
        modulus *= pb;
        if modulus > need {
            break;
        }
    }
    debug_assert!(modulus > need, "prime supply exhausted");
    let half = &modulus / 2;
    for c in coeffs.iter_mut() {
        if *c > half {
            *c -= &modulus;
        }
    }
    Ok(IntegerPoly::from_coeffs(coeffs))
}

fn divisors_up_to(value: &BigInt, bound: i64) -> Vec<i64> {
    let v = value.abs();
    let mut out = Vec::new();
    for d in 1..=bound {
        if (&v % d).is_zero() {
            out.push(d);
            out.push(-d);
        }
    }
    out
}

/// Decides whether every adjacency eigenvalue is an integer by deflating
/// integer roots out of the characteristic polynomial.
pub fn integral_spectrum(x: &SimpleGraph) -> Result<SpectrumVerdict> {
    let mut poly = char_poly(x)?;
    let max_deg = (0..x.n()).map(|v| x.degree(v)).max().unwrap_or(0) as i64;
    let mut roots = Vec::new();
    while poly.degree() > 0 && poly.coeffs[0].is_zero() {
        poly = IntegerPoly { coeffs: poly.coeffs[1..].to_vec() };
        roots.push(0);
    }
    let candidates: Vec<i64> = match x.regular_degree() {
        Some(d) => (-(d as i64)..=d as i64).filter(|&r| r != 0).collect(),
        None => divisors_up_to(&poly.coeffs[0], max_deg),
    };
    for r in candidates {
        while let Some(q) = poly.deflate(r) {
            poly = q;
            roots.push(r);
        }
    }
    roots.sort_unstable_by(|a, b| b.cmp(a));
    Ok(SpectrumVerdict { integral: poly.degree() == 0, roots, remainder: poly })
}
