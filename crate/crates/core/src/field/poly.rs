//! Dense polynomials over a prime field, coefficients stored constant term first.
//!
//! Only what the extension-field construction needs: multiplication and
//! reduction modulo a monic polynomial, gcd, and the Rabin-style
//! irreducibility test.

use crate::arith::inv_mod;

pub(crate) type Poly = Vec<u64>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

/// Remainder of `a` modulo `m` over F_p. `m` must be nonzero.
pub(crate) fn rem(a: &[u64], m: &[u64], p: u64) -> Poly {
    let dm = degree(m).expect("division by the zero polynomial");
    let lead_inv = inv_mod(m[dm], p);
    let mut r = trim(a.to_vec());
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let factor = r[dr] * lead_inv % p;
        let shift = dr - dm;
        for (i, &c) in m[..=dm].iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - factor * c % p) % p;
        }
        r = trim(r);
    }
    r
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

pub(crate) fn mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Poly {
    rem(&mul(a, b, p), m, p)
}

pub(crate) fn pow_mod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Poly {
    let mut acc: Poly = vec![1];
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(&acc, &b, m, p);
        }
        b = mul_mod(&b, &b, m, p);
        e >>= 1;
    }
    rem(&acc, m, p)
}

fn sub(a: &[u64], b: &[u64], p: u64) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

/// Irreducibility over F_p of a polynomial of degree `k >= 1`: no factor of
/// degree `d <= k/2` divides it, i.e. `gcd(X^(p^d) - X, f) = 1` for each such `d`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let Some(k) = degree(f) else {
        return false;
    };
    if k == 0 {
        return false;
    }
    let x: Poly = vec![0, 1];
    let mut h = rem(&x, f, p);
    for _ in 1..=k / 2 {
        h = pow_mod(&h, p, f, p);
        let g = gcd(&sub(&h, &x, p), f, p);
        if degree(&g).is_some_and(|d| d > 0) {
            return false;
        }
    }
    true
}
