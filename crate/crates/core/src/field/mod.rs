//! Exact arithmetic in F_q, q = p^k with p odd.
//!
//! Elements are residue polynomials modulo the lexicographically smallest
//! monic irreducible of degree k. Each element is identified with its index
//! `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`, which is also the canonical
//! enumeration order (constant term varying fastest).
//!
//! Multiplication goes through discrete-log tables built once per field;
//! addition works digit by digit. Root extraction uses the same tables.

mod poly;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};

use thiserror::Error;

use crate::arith::{gcd, inv_mod, is_prime, prime_divisors, prime_power};

/// Default ceiling on `q`, guarding against accidental huge enumerations.
pub const DEFAULT_FIELD_BOUND: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {p}^{k} exceeds the bound {bound}")]
    TooLarge { p: u64, k: u32, bound: u64 },
    #[error("{0} is not a power of an odd prime")]
    NotPrimePower(u64),
    #[error("inversion of zero")]
    ZeroInverse,
    #[error("elements belong to different fields")]
    MixedFields,
    #[error("denominator {d} vanishes modulo {p}")]
    ZeroDenominator { d: i64, p: u64 },
    #[error("F_{0} has no primitive cube root of unity")]
    NoPrimitiveCubeRoot(u64),
    #[error("the cube test is undefined at zero")]
    ZeroArgument,
    #[error("{coeffs:?} is not a valid coefficient vector for F_{p}^{k}")]
    BadCoefficients { coeffs: Vec<u32>, p: u64, k: u32 },
}

/// Value of a multiplicative character: -1, 0 or +1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CharValue {
    NonResidue,
    Zero,
    Residue,
}

impl CharValue {
    pub fn value(self) -> i64 {
        match self {
            CharValue::NonResidue => -1,
            CharValue::Zero => 0,
            CharValue::Residue => 1,
        }
    }
}

/// A concrete finite field F_q.
pub struct FiniteField {
    p: u32,
    k: u32,
    q: u32,
    /// Monic modulus, constant term first, `k + 1` entries.
    modulus: Vec<u32>,
    /// `exp[i] = g^i` for a fixed generator `g`, `0 <= i < q - 1`.
    exp: Vec<u32>,
    /// `log[x]` for nonzero `x`; `log[0]` is unused.
    log: Vec<u32>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteField")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for FiniteField {}

fn same_field(a: &FiniteField, b: &FiniteField) -> bool {
    std::ptr::eq(a, b) || a == b
}

impl FiniteField {
    /// F_{p^k} under the default size bound.
    pub fn new(p: u64, k: u32) -> Result<Self, FieldError> {
        Self::with_bound(p, k, DEFAULT_FIELD_BOUND)
    }

    /// F_q for a prime power `q` with odd characteristic.
    pub fn of_order(q: u64) -> Result<Self, FieldError> {
        match prime_power(q) {
            Some((p, k)) if p != 2 => Self::new(p, k),
            _ => Err(FieldError::NotPrimePower(q)),
        }
    }

    pub fn with_bound(p: u64, k: u32, bound: u64) -> Result<Self, FieldError> {
        if p == 2 || !is_prime(p) {
            return Err(FieldError::NotOddPrime(p));
        }
        if k == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q = match p.checked_pow(k) {
            Some(q) if q <= bound && q <= u32::MAX as u64 => q,
            _ => return Err(FieldError::TooLarge { p, k, bound }),
        };
        let modulus = smallest_irreducible(p, k);
        let (exp, log) = log_tables(p, q, &modulus);
        Ok(FiniteField {
            p: p as u32,
            k,
            q: q as u32,
            modulus: modulus.iter().map(|&c| c as u32).collect(),
            exp,
            log,
        })
    }

    pub fn characteristic(&self) -> u64 {
        self.p as u64
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.q as u64
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> Elem<'_> {
        Elem {
            field: self,
            idx: 0,
        }
    }

    pub fn one(&self) -> Elem<'_> {
        Elem {
            field: self,
            idx: 1,
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn int(&self, n: i64) -> Elem<'_> {
        Elem {
            field: self,
            idx: n.rem_euclid(self.p as i64) as u32,
        }
    }

    /// `n / d` formed exactly in F_q.
    pub fn ratio(&self, n: i64, d: i64) -> Result<Elem<'_>, FieldError> {
        let den = self.int(d);
        if den.is_zero() {
            return Err(FieldError::ZeroDenominator {
                d,
                p: self.p as u64,
            });
        }
        Ok(self.int(n) * den.inv()?)
    }

    /// Element with the given canonical index, if it is below `q`.
    pub fn element(&self, index: u32) -> Option<Elem<'_>> {
        (index < self.q).then_some(Elem {
            field: self,
            idx: index,
        })
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Elem<'_>, FieldError> {
        if coeffs.len() != self.k as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(FieldError::BadCoefficients {
                coeffs: coeffs.to_vec(),
                p: self.p as u64,
                k: self.k,
            });
        }
        let idx = coeffs.iter().rev().fold(0u32, |acc, &c| acc * self.p + c);
        Ok(Elem { field: self, idx })
    }

    /// All `q` elements in canonical order: 0, 1, 2, ..., X, X+1, ...
    pub fn elements(&self) -> impl Iterator<Item = Elem<'_>> + '_ {
        (0..self.q).map(move |idx| Elem { field: self, idx })
    }

    /// All nonzero elements in canonical order.
    pub fn units(&self) -> impl Iterator<Item = Elem<'_>> + '_ {
        (1..self.q).map(move |idx| Elem { field: self, idx })
    }

    /// First nontrivial cube root of unity in enumeration order.
    pub fn primitive_cube_root(&self) -> Result<Elem<'_>, FieldError> {
        if self.q % 3 != 1 {
            return Err(FieldError::NoPrimitiveCubeRoot(self.q as u64));
        }
        let one = self.one();
        Ok(self
            .units()
            .find(|z| *z != one && z.pow(3) == one)
            .expect("q = 1 mod 3 guarantees a primitive cube root"))
    }

    fn add_idx(&self, a: u32, b: u32) -> u32 {
        let p = self.p;
        if self.k == 1 {
            return (a + b) % p;
        }
        let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
        for _ in 0..self.k {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }

    fn neg_idx(&self, a: u32) -> u32 {
        let p = self.p;
        if self.k == 1 {
            return (p - a) % p;
        }
        let (mut a, mut out, mut place) = (a, 0, 1);
        for _ in 0..self.k {
            out += ((p - a % p) % p) * place;
            a /= p;
            place *= p;
        }
        out
    }

    fn mul_idx(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = (self.q - 1) as u64;
        let e = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % n;
        self.exp[e as usize]
    }
}

fn to_poly(idx: u64, p: u64, k: u32) -> Vec<u64> {
    let mut out = Vec::with_capacity(k as usize);
    let mut n = idx;
    for _ in 0..k {
        out.push(n % p);
        n /= p;
    }
    out
}

fn to_index(poly: &[u64], p: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Smallest monic irreducible of degree `k`, comparing the non-leading
/// coefficients as a tuple `(c_0, c_1, ..., c_{k-1})`.
fn smallest_irreducible(p: u64, k: u32) -> Vec<u64> {
    let count = p.pow(k);
    for n in 0..count {
        // c_0 is the most significant digit of n
        let mut f: Vec<u64> = to_poly(n, p, k);
        f.reverse();
        f.push(1);
        if poly::is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn log_tables(p: u64, q: u64, modulus: &[u64]) -> (Vec<u32>, Vec<u32>) {
    let k = (modulus.len() - 1) as u32;
    let n = q - 1;
    let factors = prime_divisors(n);
    let mul = |a: u64, b: u64| -> u64 {
        if k == 1 {
            a * b % p
        } else {
            to_index(
                &poly::mul_mod(&to_poly(a, p, k), &to_poly(b, p, k), modulus, p),
                p,
            )
        }
    };
    let pow = |a: u64, e: u64| -> u64 {
        if k == 1 {
            let (mut acc, mut b, mut e) = (1u64, a % p, e);
            while e > 0 {
                if e & 1 == 1 {
                    acc = acc * b % p;
                }
                b = b * b % p;
                e >>= 1;
            }
            acc
        } else {
            to_index(&poly::pow_mod(&to_poly(a, p, k), e, modulus, p), p)
        }
    };
    let generator = (1..q)
        .find(|&g| factors.iter().all(|&l| pow(g, n / l) != 1))
        .expect("the multiplicative group is cyclic");
    let mut exp = Vec::with_capacity(n as usize);
    let mut log = vec![0u32; q as usize];
    let mut x = 1u64;
    for i in 0..n {
        exp.push(x as u32);
        log[x as usize] = i as u32;
        x = mul(x, generator);
    }
    debug_assert_eq!(x, 1);
    (exp, log)
}

/// An element of a [`FiniteField`].
#[derive(Clone, Copy)]
pub struct Elem<'f> {
    field: &'f FiniteField,
    idx: u32,
}

impl<'f> Elem<'f> {
    pub fn field(&self) -> &'f FiniteField {
        self.field
    }

    /// Position in the canonical enumeration.
    pub fn index(&self) -> u32 {
        self.idx
    }

    pub fn is_zero(&self) -> bool {
        self.idx == 0
    }

    pub fn is_one(&self) -> bool {
        self.idx == 1
    }

    /// The `k` residues of the representing polynomial, constant term first.
    pub fn coeffs(&self) -> Vec<u32> {
        to_poly(self.idx as u64, self.field.p as u64, self.field.k)
            .into_iter()
            .map(|c| c as u32)
            .collect()
    }

    pub fn same_field(&self, other: &Elem<'_>) -> bool {
        same_field(self.field, other.field)
    }

    fn check(&self, other: &Elem<'_>) -> Result<(), FieldError> {
        if self.same_field(other) {
            Ok(())
        } else {
            Err(FieldError::MixedFields)
        }
    }

    fn with(&self, idx: u32) -> Elem<'f> {
        Elem {
            field: self.field,
            idx,
        }
    }

    pub fn try_add(self, rhs: Elem<'_>) -> Result<Elem<'f>, FieldError> {
        self.check(&rhs)?;
        Ok(self.with(self.field.add_idx(self.idx, rhs.idx)))
    }

    pub fn try_sub(self, rhs: Elem<'_>) -> Result<Elem<'f>, FieldError> {
        self.check(&rhs)?;
        let neg = self.field.neg_idx(rhs.idx);
        Ok(self.with(self.field.add_idx(self.idx, neg)))
    }

    pub fn try_mul(self, rhs: Elem<'_>) -> Result<Elem<'f>, FieldError> {
        self.check(&rhs)?;
        Ok(self.with(self.field.mul_idx(self.idx, rhs.idx)))
    }

    pub fn try_div(self, rhs: Elem<'_>) -> Result<Elem<'f>, FieldError> {
        self.check(&rhs)?;
        let inv = rhs.with(rhs.idx).inv()?;
        Ok(self.with(self.field.mul_idx(self.idx, inv.idx)))
    }

    pub fn inv(self) -> Result<Elem<'f>, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        let f = self.field;
        let n = f.q - 1;
        let l = f.log[self.idx as usize];
        Ok(self.with(f.exp[((n - l) % n) as usize]))
    }

    /// `self^e` by square-and-multiply; `x^0 = 1` for every `x`.
    pub fn pow(self, mut e: u64) -> Elem<'f> {
        let mut acc = self.field.one();
        let mut base = self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Quadratic character: `x^((q-1)/2)` mapped to +1/-1, and 0 at zero.
    pub fn chi2(self) -> CharValue {
        if self.is_zero() {
            return CharValue::Zero;
        }
        if self.pow((self.field.q as u64 - 1) / 2).is_one() {
            CharValue::Residue
        } else {
            CharValue::NonResidue
        }
    }

    /// True iff `self` is a nonzero square.
    pub fn is_square(self) -> bool {
        self.chi2() == CharValue::Residue
    }

    /// True iff `self` is an `n`-th power; zero counts as one.
    pub fn is_nth_power(self, n: u64) -> bool {
        if self.is_zero() {
            return true;
        }
        let order = self.field.q as u64 - 1;
        self.pow(order / gcd(n, order)).is_one()
    }

    /// Cube test on F_q^*; always true when q = 2 mod 3.
    pub fn is_cube(self) -> Result<bool, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroArgument);
        }
        Ok(self.is_nth_power(3))
    }

    /// Every `y` with `y^n = self`, in canonical order.
    pub fn nth_roots(self, n: u64) -> Vec<Elem<'f>> {
        assert!(n > 0, "root degree must be positive");
        if self.is_zero() {
            return vec![self];
        }
        let f = self.field;
        let order = f.q as u64 - 1;
        let l = f.log[self.idx as usize] as u64;
        let d = gcd(n, order);
        if l % d != 0 {
            return Vec::new();
        }
        let reduced = order / d;
        let base = if reduced == 1 {
            0
        } else {
            (l / d) % reduced * inv_mod((n / d) % reduced, reduced) % reduced
        };
        let mut roots: Vec<Elem<'f>> = (0..d)
            .map(|t| self.with(f.exp[((base + t * reduced) % order) as usize]))
            .collect();
        roots.sort_unstable_by_key(|r| r.idx);
        roots
    }

    pub fn sqrt_all(self) -> Vec<Elem<'f>> {
        self.nth_roots(2)
    }

    pub fn cbrt_all(self) -> Vec<Elem<'f>> {
        self.nth_roots(3)
    }
}

impl PartialEq for Elem<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.idx == other.idx && self.same_field(other)
    }
}

impl Eq for Elem<'_> {}

impl Hash for Elem<'_> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.idx.hash(state);
    }
}

impl PartialOrd for Elem<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical enumeration order.
impl Ord for Elem<'_> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.idx.cmp(&other.idx)
    }
}

impl<'f> Add for Elem<'f> {
    type Output = Elem<'f>;
    fn add(self, rhs: Self) -> Elem<'f> {
        self.try_add(rhs).expect("operands from different fields")
    }
}

impl<'f> Sub for Elem<'f> {
    type Output = Elem<'f>;
    fn sub(self, rhs: Self) -> Elem<'f> {
        self.try_sub(rhs).expect("operands from different fields")
    }
}

impl<'f> Mul for Elem<'f> {
    type Output = Elem<'f>;
    fn mul(self, rhs: Self) -> Elem<'f> {
        self.try_mul(rhs).expect("operands from different fields")
    }
}

/// Panics on a zero divisor; use [`Elem::try_div`] when that can happen.
impl<'f> Div for Elem<'f> {
    type Output = Elem<'f>;
    fn div(self, rhs: Self) -> Elem<'f> {
        self.try_div(rhs)
            .expect("division by zero or across fields")
    }
}

impl<'f> Neg for Elem<'f> {
    type Output = Elem<'f>;
    fn neg(self) -> Elem<'f> {
        self.with(self.field.neg_idx(self.idx))
    }
}

impl<'f> Add<i64> for Elem<'f> {
    type Output = Elem<'f>;
    fn add(self, rhs: i64) -> Elem<'f> {
        self + self.field.int(rhs)
    }
}

impl<'f> Sub<i64> for Elem<'f> {
    type Output = Elem<'f>;
    fn sub(self, rhs: i64) -> Elem<'f> {
        self - self.field.int(rhs)
    }
}

impl<'f> Mul<i64> for Elem<'f> {
    type Output = Elem<'f>;
    fn mul(self, rhs: i64) -> Elem<'f> {
        self * self.field.int(rhs)
    }
}

impl fmt::Display for Elem<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.k == 1 || self.idx < self.field.p {
            return write!(f, "{}", self.idx);
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs().iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coeff = if c == 1 && i > 0 {
                String::new()
            } else {
                c.to_string()
            };
            terms.push(match i {
                0 => coeff,
                1 => format!("{coeff}X"),
                _ => format!("{coeff}X^{i}"),
            });
        }
        write!(f, "{}", terms.join("+"))
    }
}

impl fmt::Debug for Elem<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
